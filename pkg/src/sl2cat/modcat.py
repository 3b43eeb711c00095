"""Module-category models presented by their L(1) action matrix.

A model records the matrix of tensoring with the 2-dimensional simple on
a chosen homogeneous basis (indecomposable projectives or simples).  All
higher action matrices follow from the ultraspherical recurrence, which
makes categorifiability (entrywise non-negativity of every derived
matrix), transitivity (strong connectivity of the action graph), and
diagram-type classification decidable from the single presented matrix.

The built-in catalog holds the six infinite-type fixtures used across
the test suite, shipped as JSON package data and re-derivable from the
independent category-O and Borel oracles in oracles.py.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .dynkin import Classification, DynkinType, GCMError, classify, gcm_of
from .fusion import r_poly
from .obstruction import ObstructionReport, PreconditionFailed, solve_feasibility
from .presented import PresentedMatrix

__all__ = [
    "ModuleCategoryModel",
    "PreconditionFailed",
    "Transitivity",
    "TypePrediction",
    "ObstructionReport",
    "catalog",
    "catalog_names",
    "derive_action",
    "check_categorifiability",
    "action_graph",
    "is_transitive",
    "classify_type",
    "to_simples_basis",
    "semisimplicity_symmetry_check",
    "socle_top_feasibility",
    "predict_weight_module_type",
    "subalgebra_type",
    "WEIGHT_CLASSES",
]


@dataclass(frozen=True)
class ModuleCategoryModel:
    """An action matrix with its basis convention and a short origin note."""

    name: str
    basis: str  # "projectives" | "simples"
    f1: PresentedMatrix
    provenance: str = ""

    def __post_init__(self):
        if self.basis not in ("projectives", "simples"):
            raise ValueError(f"unknown basis {self.basis!r}")
        if not self.f1.is_nonnegative():
            raise ValueError("action matrix must be entrywise non-negative")

    def projective_matrix(self) -> PresentedMatrix:
        return self.f1 if self.basis == "projectives" else self.f1.transpose()

    def to_json(self) -> dict:
        return {"name": self.name, "basis": self.basis,
                "provenance": self.provenance, "f1": self.f1.to_json_dict()}


class Transitivity(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


# -- catalog -------------------------------------------------------------------


@lru_cache(maxsize=1)
def _load_catalog() -> dict:
    raw = resources.files("sl2cat").joinpath("fixtures/catalog.json").read_text("utf-8")
    data = json.loads(raw)
    out = {}
    for name, body in data.items():
        out[name] = ModuleCategoryModel(
            name=name,
            basis=body["basis"],
            f1=PresentedMatrix.from_json_dict(body["f1"]),
            provenance=body["provenance"],
        )
    return out


def catalog_names() -> list[str]:
    return sorted(_load_catalog())


def catalog(name: str) -> ModuleCategoryModel:
    """One of the six built-in fixtures; raises KeyError on unknown names."""
    models = _load_catalog()
    if name not in models:
        raise KeyError(f"unknown catalog model {name!r}; have {sorted(models)}")
    return models[name]


# -- derived actions ------------------------------------------------------------


@lru_cache(maxsize=512)
def _derive(f1: PresentedMatrix, i: int) -> PresentedMatrix:
    return f1.poly_eval(r_poly(i))


def derive_action(m: ModuleCategoryModel, i: int) -> PresentedMatrix:
    """Matrix of tensoring with the (i+1)-dimensional simple."""
    if i < 0:
        raise ValueError("index must be >= 0")
    return _derive(m.f1, i)


def check_categorifiability(m: ModuleCategoryModel, upto: int = 12) -> tuple[bool, int | None]:
    """All derived action matrices up to the bound are entrywise >= 0.

    Returns (ok, first_failure_index).
    """
    for i in range(upto + 1):
        if not derive_action(m, i).is_nonnegative():
            return False, i
    return True, None


# -- transitivity ----------------------------------------------------------------


def action_graph(m: ModuleCategoryModel, size: int | None = None) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Vertices and labelled edges i -> j of the action digraph on a window.

    The edge i -> j carries the multiplicity of basis object j in the
    image of object i, i.e. the (j, i) entry of the action matrix.
    """
    f1 = m.f1
    if f1.index.kind == "finite":
        size = f1.index.size if size is None else min(size, f1.index.size)
    elif size is None:
        size = f1.head_size + 2 * f1.band + 2
    lo = -(size // 2) if f1.index.kind == "int" else 0
    nodes = list(range(lo, lo + size))
    dense = f1.truncate(size)
    edges = [(nodes[i], nodes[j], dense[j][i])
             for i in range(size) for j in range(size) if dense[j][i]]
    return nodes, edges


def _strongly_connected(dense: list[list[int]]) -> bool:
    n = len(dense)
    if n == 0:
        return False

    def reach(transpose: bool) -> set[int]:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in range(n):
                val = dense[v][w] if transpose else dense[w][v]
                if val and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    return len(reach(False)) == n and len(reach(True)) == n


def is_transitive(m: ModuleCategoryModel) -> Transitivity:
    """Strong connectivity of the action graph.

    Decided exactly on finite models.  On infinite presentations a
    sufficient criterion is used: both a super- and a sub-diagonal tail
    symbol (so the ray is walkable in both directions) plus strong
    connectivity of a head window; when the window check fails the
    answer is UNKNOWN rather than a guess.
    """
    f1 = m.f1
    if f1.index.kind == "finite":
        ok = _strongly_connected(f1.truncate(f1.index.size))
        return Transitivity.YES if ok else Transitivity.NO
    up = any(d < 0 and v != 0 for d, v in f1.diagonals().items())
    down = any(d > 0 and v != 0 for d, v in f1.diagonals().items())
    if not (up and down):
        return Transitivity.NO
    if f1.index.kind == "int":
        from math import gcd
        g = 0
        for d, v in f1.diagonals().items():
            if d != 0 and v != 0:
                g = gcd(g, abs(d))
        return Transitivity.YES if g == 1 else Transitivity.NO
    window = max(f1.head_size + 2 * f1.band, f1.head_extent() + f1.band)
    if _strongly_connected(f1.truncate(window)):
        return Transitivity.YES
    return Transitivity.UNKNOWN


# -- classification ---------------------------------------------------------------


def classify_type(m: ModuleCategoryModel, upto: int = 12) -> Classification:
    """Diagram type of a transitive categorifiable model.

    The projectives-basis action matrix is read as the adjacency matrix
    of a diagram whose generalized Cartan matrix is then classified with
    an exact certificate.  Models that are not transitive or not
    categorifiable raise PreconditionFailed; a model whose matrix
    supports no strictly positive eventually-affine null vector comes
    back unrecognized rather than guessed.
    """
    ok, first = check_categorifiability(m, upto)
    if not ok:
        raise PreconditionFailed(
            f"model is not categorifiable: derived matrix {first} has a negative entry"
        )
    verdict = is_transitive(m)
    if verdict is not Transitivity.YES:
        raise PreconditionFailed(f"model transitivity is {verdict.value}, need yes")
    adjacency = m.projective_matrix()
    try:
        gcm = gcm_of(adjacency)
    except GCMError as exc:
        return Classification("unrecognized", None, {"reason": str(exc)})
    return classify(gcm)


def to_simples_basis(m: ModuleCategoryModel) -> ModuleCategoryModel:
    """Transpose a projectives-basis model into the simples basis."""
    if m.basis != "projectives":
        raise PreconditionFailed("model must be given in the projectives basis")
    return ModuleCategoryModel(m.name, "simples", m.f1.transpose(), m.provenance)


def semisimplicity_symmetry_check(m: ModuleCategoryModel) -> bool:
    """Necessary condition for a semisimple realization: symmetric matrix."""
    return m.f1.is_symmetric()


def socle_top_feasibility(m: ModuleCategoryModel, depth: int, schur_dim: int = 1,
                          node_budget: int = 100_000, max_depth: int = 6) -> ObstructionReport:
    """Top/socle constraint solver; see obstruction.solve_feasibility."""
    if m.basis != "projectives":
        raise PreconditionFailed("feasibility solver expects the projectives basis")
    return solve_feasibility(m.f1, depth, schur_dim=schur_dim,
                             node_budget=node_budget, max_depth=max_depth)


# -- case-dispatch predictions ------------------------------------------------------


@dataclass(frozen=True)
class TypePrediction:
    """Predicted diagram type(s) for one case of the dispatch tables."""

    table: str  # "weight-modules" | "subalgebra-restriction"
    case: str | None
    types: tuple[DynkinType, ...]
    roles: tuple[str, ...] = ()
    notes: str = ""

    def to_json(self) -> dict:
        return {
            "table": self.table,
            "case": self.case,
            "types": [t.to_json() for t in self.types],
            "roles": list(self.roles),
            "notes": self.notes,
        }


WEIGHT_CLASSES = (
    "non-half-integer",
    "half-integer-not-integer",
    "nonneg-integer",
    "negative-integer",
)

_INF = {f: DynkinType("infinite", f) for f in ("Ainf", "Ainfinf", "Binf", "Cinf", "Dinf", "Tinf")}


def predict_weight_module_type(weight_class: str, special_fixed: bool = False) -> TypePrediction:
    """Type of the simple-weight-module category by weight class.

    The half-integer-but-not-integer class splits on whether some special
    self-equivalence fixes the module (an input fact, not computed here).
    """
    table = "weight-modules"
    if weight_class == "non-half-integer":
        return TypePrediction(table, "a", (_INF["Ainfinf"],))
    if weight_class == "half-integer-not-integer":
        if special_fixed:
            return TypePrediction(table, "b", (_INF["Tinf"],),
                                  notes="fixed by the special self-equivalence")
        return TypePrediction(table, "c", (_INF["Ainfinf"],),
                              notes="not fixed by the special self-equivalence")
    if weight_class == "nonneg-integer":
        return TypePrediction(table, "d", (_INF["Ainf"],))
    if weight_class == "negative-integer":
        return TypePrediction(
            table, "e", (_INF["Cinf"], _INF["Ainf"]), roles=("sub", "quotient"),
            notes="short exact sequence: a subcategory of the first type "
                  "with quotient of the second",
        )
    raise ValueError(f"unknown weight class {weight_class!r}; have {WEIGHT_CLASSES}")


def subalgebra_type(dim_a: int, semisimple: bool | None = None) -> TypePrediction:
    """Type of the restriction module category by subalgebra dimension."""
    table = "subalgebra-restriction"
    if dim_a == 0:
        return TypePrediction(table, None, (), notes="trivial subalgebra: rank-one models")
    if dim_a == 1:
        if semisimple is None:
            raise ValueError("dimension-one subalgebras need the semisimple flag")
        if semisimple:
            return TypePrediction(table, "b", (_INF["Ainfinf"],),
                                  notes="one-dimensional semisimple (Cartan) subalgebra")
        return TypePrediction(table, "a", (_INF["Ainf"],),
                              notes="one-dimensional nilpotent subalgebra; transitive, "
                                    "with semisimple quotient")
    if dim_a == 2:
        return TypePrediction(table, None, (_INF["Ainf"],),
                              notes="Borel subalgebra")
    if dim_a == 3:
        return TypePrediction(table, None, (_INF["Ainf"],),
                              notes="the whole algebra: left regular module category")
    raise ValueError("subalgebra dimension must be 0, 1, 2, or 3")
