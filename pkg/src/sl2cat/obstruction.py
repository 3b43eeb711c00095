"""Feasibility of top/socle assignments for derived action functors.

Given a module-category model by its projectives-basis action matrix,
the simples-basis matrices R_a fix the composition factors of every
F_a(S_j).  Over an algebraically closed field any actual categorification
must satisfy:

  * self-adjunction: [top F_a S_j : S_k] = [socle F_a S_k : S_j];
  * if F_a S_j is simple, dim End(F_a S_j) = 1, and adjunction rewrites
    that endomorphism dimension as a sum of socle (dually, top)
    multiplicities over the Clebsch-Gordan components of F_a o F_a;
  * a nonzero module has nonzero top and socle; in a length-two module
    every composition factor sits in the top or the socle;
  * a module whose top (or socle) is everything is semisimple, so the
    other side is everything as well (applied up to length four).

The solver propagates these identities to a fixpoint, then finishes with
a small backtracking search.  It reports SAT with a witness assignment,
UNSAT with an event trace ending in the violated identity, or unknown
when the node budget runs out.  Composition lengths above four are left
structurally unconstrained, so an UNSAT answer is always sound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fusion import r_poly
from .presented import PresentedMatrix

__all__ = ["ObstructionReport", "PreconditionFailed", "solve_feasibility"]


class PreconditionFailed(RuntimeError):
    """A required hypothesis (basis, categorifiability, transitivity) fails."""


@dataclass(frozen=True)
class ObstructionReport:
    status: str  # "SAT" | "UNSAT" | "unknown"
    depth: int
    schur_dim: int
    witness: list | None
    trace: list

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "depth": self.depth,
            "schur_dim": self.schur_dim,
            "witness": self.witness,
            "trace": self.trace,
        }


class _Violation(Exception):
    def __init__(self, event: dict):
        super().__init__(event.get("identity", "violation"))
        self.event = event


def _var_name(key: tuple) -> str:
    side, a, j, k = key
    word = "top" if side == "t" else "socle"
    return f"[{word} F_{a} S_{j} : S_{k}]"


class _State:
    """Interval domains plus an optional event trace."""

    def __init__(self, domains: dict, trace: list | None):
        self.domains = domains
        self.trace = trace

    def copy_quiet(self) -> "_State":
        return _State({k: v.copy() for k, v in self.domains.items()}, None)

    def narrow(self, key: tuple, lo: int, hi: int, event: dict) -> bool:
        cur = self.domains[key]
        new_lo, new_hi = max(cur[0], lo), min(cur[1], hi)
        if (new_lo, new_hi) == (cur[0], cur[1]):
            return False
        cur[0], cur[1] = new_lo, new_hi
        if new_lo > new_hi:
            raise _Violation({**event, "status": "violated"})
        if self.trace is not None:
            pinned = {"variable": _var_name(key), "value": new_lo} if new_lo == new_hi \
                else {"variable": _var_name(key), "range": [new_lo, new_hi]}
            self.trace.append({**event, "status": "established", "pinned": pinned})
        return True

    def value(self, key: tuple) -> int | None:
        lo, hi = self.domains[key]
        return lo if lo == hi else None


def _rule_equal(x: tuple, y: tuple, event: dict):
    def run(state: _State) -> bool:
        dx, dy = state.domains[x], state.domains[y]
        lo, hi = max(dx[0], dy[0]), min(dx[1], dy[1])
        changed = state.narrow(x, lo, hi, event)
        changed |= state.narrow(y, lo, hi, event)
        return changed
    return run


def _rule_sum_eq(keys: list, constant: int, target: int, event: dict):
    # sum(keys) + constant == target
    def run(state: _State) -> bool:
        changed = False
        lows = [state.domains[k][0] for k in keys]
        highs = [state.domains[k][1] for k in keys]
        total_lo, total_hi = sum(lows) + constant, sum(highs) + constant
        if total_lo > target or total_hi < target:
            raise _Violation({**event, "status": "violated"})
        for idx, key in enumerate(keys):
            lo = target - constant - (sum(highs) - highs[idx])
            hi = target - constant - (sum(lows) - lows[idx])
            changed |= state.narrow(key, lo, hi, event)
        return changed
    return run


def _rule_sum_ge(keys: list, target: int, event: dict):
    def run(state: _State) -> bool:
        changed = False
        lows = [state.domains[k][0] for k in keys]
        highs = [state.domains[k][1] for k in keys]
        if sum(highs) < target:
            raise _Violation({**event, "status": "violated"})
        for idx, key in enumerate(keys):
            lo = target - (sum(highs) - highs[idx])
            if lo > lows[idx]:
                changed |= state.narrow(key, lo, state.domains[key][1], event)
        return changed
    return run


def _rule_semisimple(t_keys: list, s_keys: list, comp: dict, order: list, length: int, event: dict):
    # top equals everything <=> the module is semisimple <=> socle equals
    # everything; propagated in both directions, including the contrapositive
    def cap(state: _State, keys: list, bound: int) -> bool:
        changed = False
        lows = [state.domains[k][0] for k in keys]
        if sum(lows) > bound:
            raise _Violation({**event, "status": "violated"})
        for idx, key in enumerate(keys):
            hi = bound - (sum(lows) - lows[idx])
            if hi < state.domains[key][1]:
                changed |= state.narrow(key, state.domains[key][0], hi, event)
        return changed

    def run(state: _State) -> bool:
        changed = False
        t_lo = sum(state.domains[k][0] for k in t_keys)
        s_lo = sum(state.domains[k][0] for k in s_keys)
        if t_lo == length:
            for k, kk in zip(s_keys, order):
                changed |= state.narrow(k, comp[kk], comp[kk], event)
        if s_lo == length:
            for k, kk in zip(t_keys, order):
                changed |= state.narrow(k, comp[kk], comp[kk], event)
        if any(state.domains[k][1] < comp[kk] for k, kk in zip(s_keys, order)):
            changed |= cap(state, t_keys, length - 1)
        if any(state.domains[k][1] < comp[kk] for k, kk in zip(t_keys, order)):
            changed |= cap(state, s_keys, length - 1)
        return changed
    return run


def _propagate(state: _State, rules: list) -> None:
    changed = True
    while changed:
        changed = False
        for rule in rules:
            changed |= rule(state)


def _cg_support(a: int, b: int) -> range:
    return range(abs(a - b), a + b + 1, 2)


def _object_window(ms: PresentedMatrix, depth: int) -> list[int]:
    if ms.index.kind == "int":
        return list(range(-depth, depth + 1))
    if ms.index.kind == "finite":
        return list(range(min(depth + 1, ms.index.size)))
    return list(range(depth + 1))


def _compositions(ms: PresentedMatrix, depth: int) -> dict:
    comps: dict[tuple[int, int], dict[int, int]] = {}
    for a in range(depth + 1):
        mat = ms.poly_eval(r_poly(a))
        for j in _object_window(ms, depth):
            col = {}
            for i, v in mat.col_entries(j):
                if v < 0:
                    raise PreconditionFailed(
                        f"composition multiplicity [F_{a} S_{j} : S_{i}] = {v} is negative"
                    )
                if v:
                    col[i] = v
            comps[(a, j)] = col
    return comps


def _objects_of(comps: dict) -> list[int]:
    return sorted({j for _, j in comps})


def _semisimple_witness(comps: dict, depth: int) -> list:
    out = []
    for a in range(1, depth + 1):
        for j in _objects_of(comps):
            comp = comps[(a, j)]
            out.append({
                "degree": a,
                "object": j,
                "top": {str(k): v for k, v in sorted(comp.items())},
                "socle": {str(k): v for k, v in sorted(comp.items())},
            })
    return out


def _witness_from(state: _State, comps: dict, depth: int) -> list:
    out = []
    for a in range(1, depth + 1):
        for j in _objects_of(comps):
            comp = comps[(a, j)]
            top = {str(k): state.value(("t", a, j, k)) for k in sorted(comp)}
            soc = {str(k): state.value(("s", a, j, k)) for k in sorted(comp)}
            out.append({"degree": a, "object": j,
                        "top": {k: v for k, v in top.items() if v},
                        "socle": {k: v for k, v in soc.items() if v}})
    return out


def _build_rules(comps: dict, depth: int, schur_dim: int, state: _State) -> list:
    rules = []
    # length-one modules are simple: top = socle = the single factor
    for (a, j), comp in comps.items():
        if a == 0 or sum(comp.values()) != 1:
            continue
        k = next(iter(comp))
        event = {
            "constraint": "length-one", "degree": a, "object": j, "factor": k,
            "identity": f"F_{a} S_{j} is simple, equal to S_{k}",
        }
        state.narrow(("t", a, j, k), 1, 1, event)
        state.narrow(("s", a, j, k), 1, 1, event)

    # self-adjunction: [top F_a S_j : S_k] = [socle F_a S_k : S_j]
    objects = _objects_of(comps)
    for a in range(1, depth + 1):
        for j in objects:
            comp = comps[(a, j)]
            for k in comp:
                if (a, k) not in comps:
                    continue
                mirror = comps[(a, k)]
                event = {
                    "constraint": "adjunction", "degree": a, "object": j, "factor": k,
                    "identity": f"[top F_{a} S_{j} : S_{k}] = [socle F_{a} S_{k} : S_{j}]",
                }
                if j in mirror:
                    rules.append(_rule_equal(("t", a, j, k), ("s", a, k, j), event))
                else:
                    state.narrow(("t", a, j, k), 0, 0, event)
                event2 = {
                    "constraint": "adjunction", "degree": a, "object": j, "factor": k,
                    "identity": f"[socle F_{a} S_{j} : S_{k}] = [top F_{a} S_{k} : S_{j}]",
                }
                if j in mirror:
                    rules.append(_rule_equal(("s", a, j, k), ("t", a, k, j), event2))
                else:
                    state.narrow(("s", a, j, k), 0, 0, event2)

    # endomorphism dimension of a simple image, written through adjunction:
    # dim End(F_a S_j) = sum over c in CG(a,a) of [socle F_c S_j : S_j]
    # and dually with tops
    for a in range(1, depth + 1):
        if 2 * a > depth:
            continue
        for j in objects:
            comp = comps[(a, j)]
            if sum(comp.values()) != 1:
                continue
            support = list(_cg_support(a, a))
            for side, word in (("s", "socle"), ("t", "top")):
                keys = [(side, c, j, j) for c in support if j in comps[(c, j)]]
                terms = " + ".join(f"[{word} F_{c} S_{j} : S_{j}]" for c in support)
                event = {
                    "constraint": "end-dim", "degree": a, "object": j, "side": word,
                    "identity": f"dim End(F_{a} S_{j}) = {terms} = {schur_dim}",
                }
                rules.append(_rule_sum_eq(keys, 0, schur_dim, event))

    for (a, j), comp in comps.items():
        if a == 0:
            continue
        length = sum(comp.values())
        t_keys = [("t", a, j, k) for k in sorted(comp)]
        s_keys = [("s", a, j, k) for k in sorted(comp)]
        if 1 <= length <= 4:
            # nonzero module: nonzero top and socle
            for keys, word in ((t_keys, "top"), (s_keys, "socle")):
                event = {
                    "constraint": "nonzero", "degree": a, "object": j, "side": word,
                    "identity": f"{word} of F_{a} S_{j} is nonzero",
                }
                rules.append(_rule_sum_ge(keys, 1, event))
        if length == 2:
            # every factor of a length-two module lies in its top or socle
            for k in comp:
                event = {
                    "constraint": "covering", "degree": a, "object": j, "factor": k,
                    "identity": (f"[top F_{a} S_{j} : S_{k}] + [socle F_{a} S_{j} : S_{k}]"
                                 f" >= {comp[k]}"),
                }
                rules.append(_rule_sum_ge([("t", a, j, k), ("s", a, j, k)], comp[k], event))
        if 2 <= length <= 4:
            order = sorted(comp)
            event = {
                "constraint": "semisimple-closure", "degree": a, "object": j,
                "identity": (f"top of F_{a} S_{j} equals all factors iff socle does"
                             " (semisimplicity)"),
            }
            rules.append(_rule_semisimple(t_keys, s_keys, comp, order, length, event))
    return rules


def _search(state: _State, rules: list, budget: list) -> _State | None:
    """Depth-first search over the remaining domains; None when exhausted."""
    open_keys = [k for k, (lo, hi) in state.domains.items() if lo < hi]
    if not open_keys:
        return state
    key = min(open_keys, key=lambda k: state.domains[k][1] - state.domains[k][0])
    lo, hi = state.domains[key]
    for value in range(lo, hi + 1):
        budget[0] -= 1
        if budget[0] <= 0:
            raise TimeoutError
        branch = state.copy_quiet()
        try:
            branch.narrow(key, value, value, {"constraint": "branch"})
            _propagate(branch, rules)
        except _Violation:
            continue
        found = _search(branch, rules, budget)
        if found is not None:
            return found
    return None


def solve_feasibility(f1: PresentedMatrix, depth: int, schur_dim: int = 1,
                      node_budget: int = 100_000, max_depth: int = 6) -> ObstructionReport:
    """Run the constraint solver on a projectives-basis action matrix."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if depth > max_depth:
        raise ValueError(f"depth {depth} exceeds the exhaustive-search cap {max_depth}")
    ms = f1.transpose()
    comps = _compositions(ms, depth)

    def fresh_state(trace: list | None) -> _State:
        domains = {}
        for (a, j), comp in comps.items():
            for k, mult in comp.items():
                if a == 0:
                    domains[("t", a, j, k)] = [mult, mult]
                    domains[("s", a, j, k)] = [mult, mult]
                else:
                    domains[("t", a, j, k)] = [0, mult]
                    domains[("s", a, j, k)] = [0, mult]
        return _State(domains, trace)

    if f1.is_symmetric():
        # semisimple witness: top = socle = all composition factors; verify
        # it against the full rule set before reporting
        state = fresh_state(None)
        try:
            rules = _build_rules(comps, depth, schur_dim, state)
            for (a, j), comp in comps.items():
                for k, mult in comp.items():
                    state.narrow(("t", a, j, k), mult, mult, {"constraint": "witness"})
                    state.narrow(("s", a, j, k), mult, mult, {"constraint": "witness"})
            _propagate(state, rules)
            trace = [{
                "constraint": "semisimple-witness", "status": "established",
                "identity": "the action matrix is symmetric; top = socle = all factors",
            }]
            return ObstructionReport("SAT", depth, schur_dim,
                                     _semisimple_witness(comps, depth), trace)
        except _Violation:
            pass  # fall through to the general engine

    trace: list[dict] = []
    state = fresh_state(trace)
    try:
        rules = _build_rules(comps, depth, schur_dim, state)
        _propagate(state, rules)
    except _Violation as exc:
        return ObstructionReport("UNSAT", depth, schur_dim, None, trace + [exc.event])
    budget = [node_budget]
    try:
        found = _search(state, rules, budget)
    except TimeoutError:
        trace.append({"constraint": "search", "status": "exhausted-budget",
                      "identity": f"node budget {node_budget} reached"})
        return ObstructionReport("unknown", depth, schur_dim, None, trace)
    if found is None:
        trace.append({"constraint": "search", "status": "violated",
                      "identity": "no assignment survives exhaustive search"})
        return ObstructionReport("UNSAT", depth, schur_dim, None, trace)
    return ObstructionReport("SAT", depth, schur_dim,
                             _witness_from(found, comps, depth), trace)
