"""Exact solver for bounded integer linear programs.

Depth-first branch and bound with integer bounds propagation.  Everything is
computed on Python integers: no floating point ever decides feasibility or
optimality, so answers are exact even with positional-digit coefficients of
hundreds of bits.

Supported model elements:

* integer variables with finite inclusive bounds,
* linear rows  lb <= sum(c_i * x_i) <= ub,
* indicator rows, enforced exactly when a binary guard holds a trigger
  value (the reverse direction propagates too: an unconditionally violated
  body forces the guard away from its trigger),
* lexicographic lower bounds over digit-variable vectors, used to exclude
  already-visited candidates in enumerative searches, and
* objectives as an ordered list of linear stages, minimized
  lexicographically.

Search order is deterministic: branching follows the model's branch order
(declaration order by default) and each variable's value order, so identical
models produce identical answers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence


class ModelError(ValueError):
    """Inconsistent model construction (bad bounds, unknown variables, ...)."""


class Status(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    RESOURCE_LIMIT = "resource_limit"


@dataclass
class Limits:
    """Search budgets; exceeding either yields RESOURCE_LIMIT, never a claim."""

    max_nodes: int | None = None
    max_seconds: float | None = None
    deadline: float | None = None  # absolute time.monotonic() cutoff

    def to_deadline(self) -> float | None:
        if self.deadline is not None:
            return self.deadline
        if self.max_seconds is not None:
            return time.monotonic() + self.max_seconds
        return None


@dataclass
class SolveStats:
    nodes: int = 0
    solutions: int = 0
    wall_time: float = 0.0


@dataclass
class SolveResult:
    status: Status
    values: tuple[int, ...] | None
    objective: tuple[int, ...]
    stats: SolveStats

    def value(self, var: int) -> int:
        if self.values is None:
            raise ModelError("no assignment available")
        return self.values[var]


@dataclass
class EnumerationResult:
    solutions: tuple[tuple[int, ...], ...]
    complete: bool
    stats: SolveStats


class IpModel:
    """A bounded-integer linear model plus search-order hints."""

    def __init__(self, name: str = ""):
        self.name = name
        self._lo: list[int] = []
        self._hi: list[int] = []
        self._names: list[str] = []
        self._binary: list[bool] = []
        # rows: (vidx tuple, coef tuple, lb, ub, guard, trigger); guard -1 = hard
        self._rows: list[tuple[tuple[int, ...], tuple[int, ...], int | None, int | None, int, int]] = []
        self._lex: list[tuple[tuple[int, ...], tuple[int, ...], bool]] = []
        self._stages: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        self._branch_order: list[int] | None = None
        self._hi_first: set[int] = set()

    # -- variables ---------------------------------------------------------

    def add_var(self, lo: int, hi: int, name: str = "") -> int:
        if not (isinstance(lo, int) and isinstance(hi, int)):
            raise ModelError("bounds must be integers")
        if lo > hi:
            raise ModelError(f"empty domain [{lo}, {hi}] for {name or 'var'}")
        self._lo.append(lo)
        self._hi.append(hi)
        self._names.append(name)
        self._binary.append(lo >= 0 and hi <= 1)
        return len(self._lo) - 1

    def add_binary(self, name: str = "") -> int:
        return self.add_var(0, 1, name)

    @property
    def num_vars(self) -> int:
        return len(self._lo)

    def bounds(self, v: int) -> tuple[int, int]:
        return self._lo[v], self._hi[v]

    def var_name(self, v: int) -> str:
        return self._names[v] or f"x{v}"

    # -- rows ---------------------------------------------------------------

    def _check_terms(self, terms: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        vs: list[int] = []
        cs: list[int] = []
        for v, c in terms:
            if not 0 <= v < len(self._lo):
                raise ModelError(f"constraint references undeclared variable {v}")
            if c:
                vs.append(v)
                cs.append(c)
        return tuple(vs), tuple(cs)

    def add_row(
        self,
        terms: Iterable[tuple[int, int]],
        lb: int | None = None,
        ub: int | None = None,
        guard: int = -1,
        trigger: int = 1,
    ) -> None:
        vs, cs = self._check_terms(terms)
        if guard != -1:
            if not 0 <= guard < len(self._lo) or not self._binary[guard]:
                raise ModelError("indicator guard must be a declared binary variable")
            if trigger not in (0, 1):
                raise ModelError("indicator trigger must be 0 or 1")
        self._rows.append((vs, cs, lb, ub, guard, trigger))

    def add_eq(self, terms: Iterable[tuple[int, int]], rhs: int) -> None:
        self.add_row(terms, rhs, rhs)

    def add_le(self, terms: Iterable[tuple[int, int]], rhs: int) -> None:
        self.add_row(terms, None, rhs)

    def add_ge(self, terms: Iterable[tuple[int, int]], rhs: int) -> None:
        self.add_row(terms, rhs, None)

    def add_indicator(
        self,
        guard: int,
        trigger: int,
        terms: Iterable[tuple[int, int]],
        lb: int | None = None,
        ub: int | None = None,
    ) -> None:
        self.add_row(terms, lb, ub, guard=guard, trigger=trigger)

    def add_lex_ge(self, digit_vars: Sequence[int], digits: Sequence[int], strict: bool = False) -> None:
        if len(digit_vars) != len(digits):
            raise ModelError("lex bound length mismatch")
        for v in digit_vars:
            if not 0 <= v < len(self._lo):
                raise ModelError("lex bound references undeclared variable")
        self._lex.append((tuple(digit_vars), tuple(int(d) for d in digits), strict))

    def set_exclusion_lex_gt(self, digit_vars: Sequence[int], digits: Sequence[int]) -> None:
        """Replace the candidate-exclusion bound: digits must exceed the given vector."""
        self._lex = [lx for lx in self._lex if not lx[2]]
        self.add_lex_ge(digit_vars, digits, strict=True)

    # -- objective & search hints -------------------------------------------

    def set_objective_stages(self, stages: Sequence[Iterable[tuple[int, int]]]) -> None:
        self._stages = [self._check_terms(stage) for stage in stages]

    def set_branch_order(self, order: Sequence[int]) -> None:
        seen = set()
        out: list[int] = []
        for v in order:
            if not 0 <= v < len(self._lo) or v in seen:
                raise ModelError("branch order must list distinct declared variables")
            seen.add(v)
            out.append(v)
        out.extend(v for v in range(len(self._lo)) if v not in seen)
        self._branch_order = out

    def set_value_order_hi(self, v: int) -> None:
        self._hi_first.add(v)

    # -- debug dump -----------------------------------------------------------

    def dump_lp(self) -> str:
        """Plain-text rendering for inspection; format is not load-bearing."""
        out = [f"\\ model {self.name}: {self.num_vars} vars, {len(self._rows)} rows"]
        for k, stage in enumerate(self._stages):
            expr = " + ".join(f"{c} {self.var_name(v)}" for v, c in zip(*stage))
            out.append(f"min[{k}]: {expr}")
        for vs, cs, lb, ub, guard, trig in self._rows:
            expr = " + ".join(f"{c} {self.var_name(v)}" for v, c in zip(vs, cs))
            head = f"{self.var_name(guard)} = {trig} -> " if guard != -1 else ""
            if lb is not None and lb == ub:
                out.append(f"{head}{expr} = {lb}")
            else:
                if ub is not None:
                    out.append(f"{head}{expr} <= {ub}")
                if lb is not None:
                    out.append(f"{head}{expr} >= {lb}")
        for vs, ds, strict in self._lex:
            names = ",".join(self.var_name(v) for v in vs)
            out.append(f"({names}) lex{'>' if strict else '>='} {list(ds)}")
        for v in range(self.num_vars):
            out.append(f"{self._lo[v]} <= {self.var_name(v)} <= {self._hi[v]}")
        return "\n".join(out) + "\n"


class _Search:
    """One search state over a model snapshot (plus optional bound overrides)."""

    def __init__(self, model: IpModel, overrides: dict[int, tuple[int, int]] | None):
        self.m = model
        self.lo = list(model._lo)
        self.hi = list(model._hi)
        if overrides:
            for v, (lo, hi) in overrides.items():
                if lo < model._lo[v] or hi > model._hi[v]:
                    raise ModelError("overrides may only tighten declared bounds")
                self.lo[v] = lo
                self.hi[v] = hi
        rows = model._rows
        self.row_v = [r[0] for r in rows]
        self.row_c = [r[1] for r in rows]
        self.row_lb = [r[2] for r in rows]
        self.row_ub = [r[3] for r in rows]
        self.row_guard = [r[4] for r in rows]
        self.row_trig = [r[5] for r in rows]
        var_rows: list[list[int]] = [[] for _ in range(len(self.lo))]
        for r, vs in enumerate(self.row_v):
            for v in vs:
                var_rows[v].append(r)
        for r, g in enumerate(model._rows):
            if g[4] != -1:
                var_rows[g[4]].append(r)
        self.var_rows = [tuple(rs) for rs in var_rows]
        self.lex = list(model._lex)
        self.order = model._branch_order or list(range(len(self.lo)))
        self.hi_first = model._hi_first
        self.trail: list[tuple[int, int, int]] = []
        self.stats = SolveStats()
        self.obj_row: int | None = None  # dynamic incumbent row during minimize

    # -- propagation ---------------------------------------------------------

    def _set_lo(self, v: int, val: int, queue: list[int], inq: bytearray) -> bool:
        if val > self.hi[v]:
            return False
        self.trail.append((v, self.lo[v], self.hi[v]))
        self.lo[v] = val
        for r in self.var_rows[v]:
            if not inq[r]:
                inq[r] = 1
                queue.append(r)
        return True

    def _set_hi(self, v: int, val: int, queue: list[int], inq: bytearray) -> bool:
        if val < self.lo[v]:
            return False
        self.trail.append((v, self.lo[v], self.hi[v]))
        self.hi[v] = val
        for r in self.var_rows[v]:
            if not inq[r]:
                inq[r] = 1
                queue.append(r)
        return True

    def propagate(self, seed: Iterable[int]) -> bool:
        """Run bounds propagation to a fixpoint; False means infeasible."""
        lo, hi = self.lo, self.hi
        row_v, row_c = self.row_v, self.row_c
        row_lb, row_ub = self.row_lb, self.row_ub
        row_guard, row_trig = self.row_guard, self.row_trig
        nrows = len(row_v)
        inq = bytearray(nrows)
        queue: list[int] = []
        for r in seed:
            if not inq[r]:
                inq[r] = 1
                queue.append(r)
        while True:
            qi = 0
            while qi < len(queue):
                r = queue[qi]
                qi += 1
                inq[r] = 0
                g = row_guard[r]
                vs = row_v[r]
                cs = row_c[r]
                minact = 0
                maxact = 0
                for i in range(len(vs)):
                    v = vs[i]
                    c = cs[i]
                    if c > 0:
                        minact += c * lo[v]
                        maxact += c * hi[v]
                    else:
                        minact += c * hi[v]
                        maxact += c * lo[v]
                lb = row_lb[r]
                ub = row_ub[r]
                if g != -1:
                    if lo[g] != hi[g]:
                        # undetermined guard: only entailment can fire
                        if (ub is not None and minact > ub) or (lb is not None and maxact < lb):
                            t = 1 - row_trig[r]
                            if not (self._set_lo(g, t, queue, inq) and self._set_hi(g, t, queue, inq)):
                                return False
                        continue
                    if lo[g] != row_trig[r]:
                        continue  # permanently inactive on this branch
                if ub is not None:
                    if minact > ub:
                        return False
                    slack = ub - minact
                    for i in range(len(vs)):
                        v = vs[i]
                        c = cs[i]
                        if c > 0:
                            nb = lo[v] + slack // c
                            if nb < hi[v] and not self._set_hi(v, nb, queue, inq):
                                return False
                        else:
                            nb = hi[v] - slack // (-c)
                            if nb > lo[v] and not self._set_lo(v, nb, queue, inq):
                                return False
                if lb is not None:
                    if maxact < lb:
                        return False
                    surplus = maxact - lb
                    for i in range(len(vs)):
                        v = vs[i]
                        c = cs[i]
                        if c > 0:
                            nb = hi[v] - surplus // c
                            if nb > lo[v] and not self._set_lo(v, nb, queue, inq):
                                return False
                        else:
                            nb = lo[v] + surplus // (-c)
                            if nb < hi[v] and not self._set_hi(v, nb, queue, inq):
                                return False
            del queue[:]
            changed = len(self.trail)
            if not self._propagate_lex(queue, inq):
                return False
            if len(self.trail) == changed and not queue:
                return True

    def _propagate_lex(self, queue: list[int], inq: bytearray) -> bool:
        lo, hi = self.lo, self.hi
        for vars_, digits, strict in self.lex:
            i = 0
            m = len(vars_)
            while i < m:
                v = vars_[i]
                b = digits[i]
                if lo[v] > b:
                    break  # already strictly above at position i
                if lo[v] < b and not self._set_lo(v, b, queue, inq):
                    return False
                if hi[v] > b:
                    break  # may exceed here; nothing further is forced
                i += 1
            else:
                if strict:
                    return False  # equal everywhere but strictness required
        return True

    # -- search ---------------------------------------------------------------

    def run(
        self,
        mode: str,
        deadline: float | None,
        max_nodes: int | None,
        cap: int = 0,
        on_solution=None,
    ) -> str:
        """DFS over the branch order.  Returns 'done', 'found', or 'limit'.

        mode 'first' stops at the first full assignment; 'enumerate' collects
        up to cap of them; 'minimize' keeps tightening the incumbent row.
        """
        lo, hi = self.lo, self.hi
        order = self.order
        n_order = len(order)
        frames: list[list] = []  # [trail_len, var, alts, alt_idx, scan]
        scan = 0
        ok = self.propagate(range(len(self.row_v)))
        nodes_since_check = 0
        while True:
            if ok:
                while scan < n_order and lo[order[scan]] == hi[order[scan]]:
                    scan += 1
                if scan == n_order:
                    self.stats.solutions += 1
                    values = tuple(lo)
                    self.check_assignment(values)
                    if on_solution is not None:
                        on_solution(values)
                    if mode == "first":
                        return "found"
                    if mode == "enumerate" and self.stats.solutions >= cap:
                        return "found"
                    ok = False  # force backtrack; minimize tightened its row
                else:
                    v = order[scan]
                    if v in self.hi_first:
                        alts = ((1, hi[v]), (3, hi[v] - 1))  # eq hi, then <= hi-1
                    else:
                        alts = ((1, lo[v]), (2, lo[v] + 1))  # eq lo, then >= lo+1
                    frames.append([len(self.trail), v, alts, 0, scan])
                    ok = self._apply(v, alts[0])
                    self.stats.nodes += 1
                    nodes_since_check += 1
                    if nodes_since_check >= 256:
                        nodes_since_check = 0
                        if deadline is not None and time.monotonic() > deadline:
                            return "limit"
                    if max_nodes is not None and self.stats.nodes > max_nodes:
                        return "limit"
                    continue
            # backtrack
            while frames:
                fr = frames[-1]
                fr[3] += 1
                mark = fr[0]
                while len(self.trail) > mark:
                    v, l, h = self.trail.pop()
                    lo[v] = l
                    hi[v] = h
                if fr[3] < len(fr[2]):
                    scan = fr[4]
                    ok = self._apply(fr[1], fr[2][fr[3]])
                    self.stats.nodes += 1
                    break
                frames.pop()
            else:
                return "done"

    def _apply(self, v: int, alt: tuple[int, int]) -> bool:
        kind, val = alt
        queue: list[int] = []
        inq = bytearray(len(self.row_v))
        if kind == 1:  # eq
            if not (self._set_lo(v, val, queue, inq) and self._set_hi(v, val, queue, inq)):
                return False
        elif kind == 2:  # ge
            if not self._set_lo(v, val, queue, inq):
                return False
        else:  # le
            if not self._set_hi(v, val, queue, inq):
                return False
        if self.obj_row is not None and not inq[self.obj_row]:
            inq[self.obj_row] = 1
            queue.append(self.obj_row)
        return self.propagate(queue)

    # -- verification -----------------------------------------------------------

    def check_assignment(self, values: Sequence[int]) -> None:
        m = self.m
        for v in range(len(values)):
            if not m._lo[v] <= values[v] <= m._hi[v]:
                raise AssertionError(f"assignment violates bounds of {m.var_name(v)}")
        for r in range(len(self.row_v)):
            g = self.row_guard[r]
            if g != -1 and values[g] != self.row_trig[r]:
                continue
            act = 0
            for v, c in zip(self.row_v[r], self.row_c[r]):
                act += c * values[v]
            lb, ub = self.row_lb[r], self.row_ub[r]
            if (lb is not None and act < lb) or (ub is not None and act > ub):
                raise AssertionError(f"assignment violates row {r}")
        for vars_, digits, strict in self.lex:
            got = tuple(values[v] for v in vars_)
            if got < tuple(digits) or (strict and got == tuple(digits)):
                raise AssertionError("assignment violates lex bound")


def _stage_prefix_shortcut(model: IpModel) -> bool:
    """True when stages are single distinct variables heading the branch order.

    In that case a single first-solution DFS (low values first) already
    yields the staged lexicographic optimum, because depth-first search
    minimizes the branching prefix lexicographically.
    """
    if not model._stages:
        return False
    order = model._branch_order or list(range(model.num_vars))
    seen = []
    for vs, cs in model._stages:
        if len(vs) != 1 or cs[0] != 1 or vs[0] in model._hi_first:
            return False
        seen.append(vs[0])
    return order[: len(seen)] == seen


def solve(
    model: IpModel,
    limits: Limits | None = None,
    *,
    overrides: dict[int, tuple[int, int]] | None = None,
) -> SolveResult:
    """Solve to proven optimality (or exhaustively proven infeasibility)."""
    limits = limits or Limits()
    deadline = limits.to_deadline()
    start = time.monotonic()
    stats = SolveStats()

    def finish(status: Status, values, objective) -> SolveResult:
        stats.wall_time = time.monotonic() - start
        return SolveResult(status, values, tuple(objective), stats)

    if not model._stages or _stage_prefix_shortcut(model):
        search = _Search(model, overrides)
        best: list[tuple[int, ...]] = []
        outcome = search.run("first", deadline, limits.max_nodes, on_solution=best.append)
        stats.nodes = search.stats.nodes
        stats.solutions = search.stats.solutions
        if outcome == "limit":
            return finish(Status.RESOURCE_LIMIT, None, ())
        if not best:
            return finish(Status.INFEASIBLE, None, ())
        values = best[0]
        objective = [
            sum(c * values[v] for v, c in zip(*stage)) for stage in model._stages
        ]
        return finish(Status.OPTIMAL, values, objective)

    # general staged minimization: one proven B&B pass per stage
    pins: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []
    incumbent_values: tuple[int, ...] | None = None
    objective: list[int] = []
    for vs, cs in model._stages:
        search = _Search(model, overrides)
        for pvs, pcs, pval in pins:
            search.row_v.append(pvs)
            search.row_c.append(pcs)
            search.row_lb.append(pval)
            search.row_ub.append(pval)
            search.row_guard.append(-1)
            search.row_trig.append(1)
            for v in pvs:
                search.var_rows[v] = search.var_rows[v] + (len(search.row_v) - 1,)
        obj_row = len(search.row_v)
        search.row_v.append(vs)
        search.row_c.append(cs)
        search.row_lb.append(None)
        search.row_ub.append(None)
        search.row_guard.append(-1)
        search.row_trig.append(1)
        for v in vs:
            search.var_rows[v] = search.var_rows[v] + (obj_row,)
        search.obj_row = obj_row
        best_here: list = [None, None]

        def on_solution(values, search=search, vs=vs, cs=cs, best_here=best_here, obj_row=obj_row):
            val = sum(c * values[v] for v, c in zip(vs, cs))
            if best_here[0] is None or val < best_here[0]:
                best_here[0] = val
                best_here[1] = values
                search.row_ub[obj_row] = val - 1

        outcome = search.run("minimize", deadline, limits.max_nodes, on_solution=on_solution)
        stats.nodes += search.stats.nodes
        stats.solutions += search.stats.solutions
        if outcome == "limit":
            return finish(Status.RESOURCE_LIMIT, None, ())
        if best_here[0] is None:
            return finish(Status.INFEASIBLE, None, ())
        incumbent_values = best_here[1]
        objective.append(best_here[0])
        pins.append((vs, cs, best_here[0]))
    return finish(Status.OPTIMAL, incumbent_values, objective)


def solve_all(
    model: IpModel,
    cap: int,
    limits: Limits | None = None,
    *,
    overrides: dict[int, tuple[int, int]] | None = None,
) -> EnumerationResult:
    """Enumerate up to cap feasible assignments (exhaustive if fewer exist)."""
    if model._stages:
        raise ModelError("solution enumeration requires a pure feasibility model")
    if cap < 1:
        raise ModelError("cap must be at least 1")
    limits = limits or Limits()
    deadline = limits.to_deadline()
    start = time.monotonic()
    search = _Search(model, overrides)
    found: list[tuple[int, ...]] = []
    outcome = search.run(
        "enumerate", deadline, limits.max_nodes, cap=cap, on_solution=found.append
    )
    stats = search.stats
    stats.wall_time = time.monotonic() - start
    if outcome == "limit":
        raise ResourceExhausted(tuple(found), stats)
    return EnumerationResult(tuple(found), complete=(outcome == "done"), stats=stats)


class ResourceExhausted(Exception):
    """Raised when enumeration hits its node or time budget."""

    def __init__(self, partial: tuple[tuple[int, ...], ...], stats: SolveStats):
        super().__init__("enumeration hit its resource budget")
        self.partial = partial
        self.stats = stats
