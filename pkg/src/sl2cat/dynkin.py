"""Generalized Cartan matrices, diagram templates, and exact classification.

A generalized Cartan matrix (GCM) C satisfies c_ii <= 2, c_ij <= 0 for
i != j, and c_ij = 0 iff c_ji = 0.  Its diagram has -c_ij oriented edges
from i to j and 2 - c_ii loops at i, so the adjacency matrix is
A = 2*Id - C.  Templates for the classical, affine, and infinite families
are generated in one place and every classification answer carries a
machine-checkable certificate: exact leading principal minors plus
ultraspherical annihilation for the positive definite types, and an exact
strictly positive null vector for the affine and infinite types.

All arithmetic is integer or Fraction; nothing here is numerical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd, lcm
from typing import Iterable

from .fusion import r_poly
from .presented import IndexSet, PresentedMatrix, PresentedVector

__all__ = [
    "GCMError",
    "DynkinType",
    "Classification",
    "validate_gcm",
    "validate_adjacency",
    "graph_of",
    "gcm_of",
    "template",
    "template_types",
    "coxeter_number",
    "check_coxeter_annihilation",
    "find_positive_null_vector",
    "classify_finite",
    "classify",
]


class GCMError(ValueError):
    """Raised when a matrix violates the generalized Cartan axioms."""


@dataclass(frozen=True)
class DynkinType:
    """A diagram type: kind is classical, affine, or infinite."""

    kind: str
    family: str
    rank: int | None = None

    def __post_init__(self):
        if self.kind not in ("classical", "affine", "infinite"):
            raise ValueError(f"unknown kind {self.kind!r}")

    def display(self) -> str:
        if self.kind == "infinite":
            return _INFINITE_DISPLAY[self.family]
        base = _AFFINE_DISPLAY.get(self.family, self.family)
        if self.rank is not None and self.family in _RANKED_FAMILIES:
            return f"{base}_{self.rank}"
        return base

    def key(self) -> str:
        if self.rank is not None and self.family in _RANKED_FAMILIES:
            return f"{self.family}{self.rank}"
        return self.family

    def to_json(self) -> dict:
        return {"kind": self.kind, "family": self.family, "rank": self.rank}


_RANKED_FAMILIES = {"A", "B", "C", "D", "At", "Bt", "BCt", "Ct", "BDt", "Dt", "CDt",
                    "Lt", "BLt", "CLt", "DLt"}

_AFFINE_DISPLAY = {
    "At": "A~", "At11": "A~11", "At12": "A~12", "Bt": "B~", "BCt": "BC~", "Ct": "C~",
    "BDt": "BD~", "Dt": "D~", "CDt": "CD~", "E6t": "E~6", "E7t": "E~7", "E8t": "E~8",
    "F41t": "F~41", "F42t": "F~42", "G21t": "G~21", "G22t": "G~22",
    "Lt": "L~", "BLt": "BL~", "CLt": "CL~", "DLt": "DL~",
}

_INFINITE_DISPLAY = {
    "Ainf": "A_inf", "Ainfinf": "A_inf_inf", "Binf": "B_inf",
    "Cinf": "C_inf", "Dinf": "D_inf", "Tinf": "T_inf",
}


# -- axioms ------------------------------------------------------------------


def validate_gcm(matrix: PresentedMatrix) -> None:
    """Check the generalized Cartan axioms; raise GCMError on failure."""
    diag_tail = matrix.diagonals().get(0, 0)
    if matrix.index.kind != "finite" and diag_tail > 2:
        raise GCMError(f"tail diagonal {diag_tail} exceeds 2")
    for d, v in matrix.diagonals().items():
        if d != 0:
            if v > 0:
                raise GCMError(f"off-diagonal tail value {v} at offset {d} is positive")
            if matrix.diagonals().get(-d, 0) == 0 and v != 0:
                raise GCMError(f"tail offset {d} breaks zero symmetry")
    for i, j, v in matrix.head_entries():
        if i == j:
            if v > 2:
                raise GCMError(f"diagonal entry {v} at ({i},{i}) exceeds 2")
        else:
            if v > 0:
                raise GCMError(f"off-diagonal entry {v} at ({i},{j}) is positive")
            if matrix.entry(j, i) == 0:
                raise GCMError(f"entries ({i},{j}) and ({j},{i}) break zero symmetry")


def validate_adjacency(matrix: PresentedMatrix) -> None:
    """Check diagram-graph constraints: non-negative, 0..2 loops, zero symmetry."""
    if not matrix.is_nonnegative():
        raise GCMError("adjacency has a negative entry")
    limit = matrix.head_size if matrix.index.kind == "nat" else (
        matrix.index.size if matrix.index.kind == "finite" else 0
    )
    for i in range(limit):
        if matrix.entry(i, i) > 2:
            raise GCMError(f"more than two loops at vertex {i}")
    if matrix.index.kind != "finite" and matrix.diagonals().get(0, 0) > 2:
        raise GCMError("more than two loops on the tail diagonal")
    for i, j, v in matrix.head_entries():
        if i != j and v != 0 and matrix.entry(j, i) == 0:
            raise GCMError(f"edges ({i},{j}) present but ({j},{i}) absent")
    for d, v in matrix.diagonals().items():
        if d != 0 and v != 0 and matrix.diagonals().get(-d, 0) == 0:
            raise GCMError(f"tail offset {d} breaks zero symmetry")


def graph_of(gcm: PresentedMatrix) -> PresentedMatrix:
    """Adjacency matrix of the diagram: 2*Id - C."""
    adjacency = PresentedMatrix.scaled_identity(gcm.index, 2).add(gcm.scale(-1))
    validate_adjacency(adjacency)
    return adjacency


def gcm_of(adjacency: PresentedMatrix) -> PresentedMatrix:
    """Generalized Cartan matrix of a diagram: 2*Id - A."""
    validate_adjacency(adjacency)
    gcm = PresentedMatrix.scaled_identity(adjacency.index, 2).add(adjacency.scale(-1))
    validate_gcm(gcm)
    return gcm


# -- templates ----------------------------------------------------------------


def _path(edges: dict, vertices: Iterable[int]) -> None:
    run = list(vertices)
    for a, b in zip(run, run[1:]):
        edges[(a, b)] = edges[(b, a)] = 1


def _classical_adjacency(family: str, n: int) -> dict:
    edges: dict[tuple[int, int], int] = {}
    if family == "A":
        _path(edges, range(n))
    elif family == "B":
        edges[(0, 1)], edges[(1, 0)] = 1, 2
        _path(edges, range(1, n))
    elif family == "C":
        edges[(0, 1)], edges[(1, 0)] = 2, 1
        _path(edges, range(1, n))
    elif family == "D":
        _path(edges, range(n - 1))
        edges[(1, n - 1)] = edges[(n - 1, 1)] = 1
    elif family in ("E6", "E7", "E8"):
        _path(edges, range(n - 1))
        edges[(2, n - 1)] = edges[(n - 1, 2)] = 1
    elif family == "F4":
        _path(edges, (0, 1))
        edges[(1, 2)], edges[(2, 1)] = 2, 1
        _path(edges, (2, 3))
    elif family == "G2":
        edges[(0, 1)], edges[(1, 0)] = 3, 1
    return edges


def _affine_adjacency(family: str, n: int | None) -> tuple[dict, int]:
    edges: dict[tuple[int, int], int] = {}
    if family == "At":
        count = n + 1
        _path(edges, range(count))
        edges[(0, count - 1)] = edges[(count - 1, 0)] = 1
    elif family == "At11":
        edges[(0, 1)], edges[(1, 0)] = 4, 1
        count = 2
    elif family == "At12":
        edges[(0, 1)] = edges[(1, 0)] = 2
        count = 2
    elif family in ("Bt", "BCt", "Ct"):
        count = n + 1
        start = (1, 2) if family == "Ct" else (2, 1)
        edges[(1, 0)], edges[(0, 1)] = start
        _path(edges, range(1, n))
        end = (2, 1) if family == "Bt" else (1, 2)
        edges[(n - 1, n)], edges[(n, n - 1)] = end
    elif family == "BDt":
        count = n + 1
        _path(edges, range(n - 1))
        edges[(n - 2, n - 1)], edges[(n - 1, n - 2)] = 2, 1
        edges[(1, n)] = edges[(n, 1)] = 1
    elif family == "Dt":
        count = n + 1
        _path(edges, range(n - 1))
        edges[(1, n - 1)] = edges[(n - 1, 1)] = 1
        edges[(n - 3, n)] = edges[(n, n - 3)] = 1
    elif family == "CDt":
        count = n + 1
        _path(edges, range(n - 1))
        edges[(n - 2, n - 1)], edges[(n - 1, n - 2)] = 1, 2
        edges[(1, n)] = edges[(n, 1)] = 1
    elif family == "E6t":
        count = 7
        _path(edges, range(5))
        edges[(2, 5)] = edges[(5, 2)] = 1
        edges[(5, 6)] = edges[(6, 5)] = 1
    elif family == "E7t":
        count = 8
        _path(edges, range(7))
        edges[(3, 7)] = edges[(7, 3)] = 1
    elif family == "E8t":
        count = 9
        _path(edges, range(8))
        edges[(2, 8)] = edges[(8, 2)] = 1
    elif family == "F41t":
        count = 5
        _path(edges, (0, 1, 2))
        edges[(2, 3)], edges[(3, 2)] = 2, 1
        _path(edges, (3, 4))
    elif family == "F42t":
        count = 5
        _path(edges, (0, 1))
        edges[(1, 2)], edges[(2, 1)] = 2, 1
        _path(edges, (2, 3, 4))
    elif family == "G21t":
        count = 3
        _path(edges, (0, 1))
        edges[(1, 2)], edges[(2, 1)] = 3, 1
    elif family == "G22t":
        count = 3
        edges[(0, 1)], edges[(1, 0)] = 3, 1
        _path(edges, (1, 2))
    elif family == "Lt":
        count = n
        _path(edges, range(n))
        edges[(0, 0)] = edges[(n - 1, n - 1)] = 1
    elif family in ("BLt", "CLt"):
        count = n + 1
        start = (2, 1) if family == "CLt" else (1, 2)
        edges[(0, 1)], edges[(1, 0)] = start
        _path(edges, range(1, n + 1))
        edges[(n, n)] = 1
    elif family == "DLt":
        count = n + 1
        _path(edges, range(n))
        edges[(1, n)] = edges[(n, 1)] = 1
        edges[(n - 1, n - 1)] = 1
    else:
        raise GCMError(f"unknown affine family {family!r}")
    return edges, count


#: legal rank ranges: family -> (minimum n, fixed n or None)
CLASSICAL_RANKS = {
    "A": (1, None), "B": (2, None), "C": (3, None), "D": (4, None),
    "E6": (6, 6), "E7": (7, 7), "E8": (8, 8), "F4": (4, 4), "G2": (2, 2),
}

AFFINE_RANKS = {
    "At": (2, None), "At11": (1, 1), "At12": (1, 1),
    "Bt": (3, None), "BCt": (2, None), "Ct": (2, None),
    "BDt": (3, None), "Dt": (4, None), "CDt": (3, None),
    "E6t": (6, 6), "E7t": (7, 7), "E8t": (8, 8),
    "F41t": (4, 4), "F42t": (4, 4), "G21t": (2, 2), "G22t": (2, 2),
    "Lt": (2, None), "BLt": (2, None), "CLt": (2, None), "DLt": (3, None),
}

INFINITE_FAMILIES = ("Ainf", "Ainfinf", "Binf", "Cinf", "Dinf", "Tinf")


def _check_rank(table: dict, family: str, rank: int | None) -> int | None:
    if family not in table:
        raise GCMError(f"unknown family {family!r}")
    minimum, fixed = table[family]
    if fixed is not None:
        if rank not in (None, fixed):
            raise GCMError(f"{family} has fixed rank {fixed}")
        return fixed
    if rank is None or rank < minimum:
        raise GCMError(f"{family} needs rank >= {minimum}, got {rank}")
    return rank


def _infinite_adjacency(family: str) -> PresentedMatrix:
    tridiag = {-1: 1, 1: 1}
    if family == "Ainf":
        return PresentedMatrix(IndexSet.nat(), diagonals=tridiag)
    if family == "Ainfinf":
        return PresentedMatrix(IndexSet.int_(), diagonals=tridiag)
    if family == "Binf":
        return PresentedMatrix(IndexSet.nat(), 1, {(0, 1): 1, (1, 0): 2}, tridiag)
    if family == "Cinf":
        return PresentedMatrix(IndexSet.nat(), 1, {(0, 1): 2, (1, 0): 1}, tridiag)
    if family == "Dinf":
        # two pendant vertices 0 and 1 hang off vertex 2 of the ray; the
        # normalized form keeps only the (0,2) pair as head, the 1-2 edge
        # already agrees with the tail rule
        return PresentedMatrix(IndexSet.nat(), 1, {(0, 2): 1, (2, 0): 1}, tridiag)
    if family == "Tinf":
        return PresentedMatrix(IndexSet.nat(), 1, {(0, 0): 1, (0, 1): 1, (1, 0): 1}, tridiag)
    raise GCMError(f"unknown infinite family {family!r}")


def template(dtype: DynkinType) -> PresentedMatrix:
    """The canonical generalized Cartan matrix of a named type."""
    if dtype.kind == "classical":
        rank = _check_rank(CLASSICAL_RANKS, dtype.family, dtype.rank)
        edges = _classical_adjacency(dtype.family, rank)
        adjacency = PresentedMatrix(IndexSet.finite(rank), head=edges)
    elif dtype.kind == "affine":
        rank = _check_rank(AFFINE_RANKS, dtype.family, dtype.rank)
        edges, count = _affine_adjacency(dtype.family, rank)
        adjacency = PresentedMatrix(IndexSet.finite(count), head=edges)
    else:
        if dtype.family not in INFINITE_FAMILIES:
            raise GCMError(f"unknown infinite family {dtype.family!r}")
        adjacency = _infinite_adjacency(dtype.family)
    return gcm_of(adjacency)


def template_types(max_rank: int = 8) -> list[DynkinType]:
    """Every legal template type with rank bounded by max_rank."""
    out: list[DynkinType] = []
    for table, kind in ((CLASSICAL_RANKS, "classical"), (AFFINE_RANKS, "affine")):
        for family, (minimum, fixed) in table.items():
            if fixed is not None:
                if fixed <= max_rank:
                    out.append(DynkinType(kind, family, fixed))
            else:
                out.extend(DynkinType(kind, family, n) for n in range(minimum, max_rank + 1))
    out.extend(DynkinType("infinite", f) for f in INFINITE_FAMILIES)
    return out


# -- Coxeter numbers -----------------------------------------------------------


def coxeter_number(dtype: DynkinType) -> int:
    """Coxeter number of a classical type."""
    if dtype.kind != "classical":
        raise GCMError("Coxeter numbers are defined here for classical types only")
    fixed = {"E6": 12, "E7": 18, "E8": 30, "F4": 12, "G2": 6}
    if dtype.family in fixed:
        return fixed[dtype.family]
    n = dtype.rank
    if n is None:
        raise GCMError(f"{dtype.family} needs an explicit rank")
    return {"A": n + 1, "B": 2 * n, "C": 2 * n, "D": 2 * n - 2}[dtype.family]


def check_coxeter_annihilation(dtype: DynkinType) -> bool:
    """R_{h-1} vanishes on the adjacency matrix of the classical template."""
    adjacency = graph_of(template(dtype))
    h = coxeter_number(dtype)
    return adjacency.poly_eval(r_poly(h - 1)).is_zero()


# -- exact linear algebra helpers ---------------------------------------------


def _leading_minors(dense: list[list[int]]) -> list[int]:
    out = []
    for k in range(1, len(dense) + 1):
        out.append(_det([row[:k] for row in dense[:k]]))
    return out


def _det(a: list[list[int]]) -> int:
    n = len(a)
    work = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det *= work[col][col]
        inv = 1 / work[col][col]
        for r in range(col + 1, n):
            if work[r][col]:
                factor = work[r][col] * inv
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    assert det.denominator == 1
    return int(det)


def _kernel_basis(rows: list[list[Fraction]], cols: int) -> list[list[Fraction]]:
    work = [list(row) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                factor = work[i][c]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        vec = [Fraction(0)] * cols
        vec[free] = Fraction(1)
        for pr, pc in enumerate(pivots):
            vec[pc] = -work[pr][free]
        basis.append(vec)
    return basis


def _primitive_integer(vec: list[Fraction]) -> list[int]:
    scale = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * scale) for x in vec]
    g = gcd(*ints) if any(ints) else 1
    ints = [x // g for x in ints]
    first = next((x for x in ints if x != 0), 1)
    if first < 0:
        ints = [-x for x in ints]
    return ints


# -- null vectors ----------------------------------------------------------------


def find_positive_null_vector(gcm: PresentedMatrix) -> PresentedVector | None:
    """Exact strictly positive primitive null vector, or None.

    Finite: the rational kernel must be one dimensional with a strictly
    positive representative.  Nat-indexed: solves for a vector with
    finite head and affine tail a*i + b; the generic-row identity is
    handled symbolically by coefficient comparison.  Z-indexed: constant
    vectors only.
    """
    index = gcm.index
    if index.kind == "finite":
        n = index.size
        dense = [[Fraction(gcm.entry(i, j)) for j in range(n)] for i in range(n)]
        basis = _kernel_basis(dense, n)
        if len(basis) != 1:
            return None
        ints = _primitive_integer(basis[0])
        if any(x <= 0 for x in ints):
            return None
        vec = PresentedVector(index, ints)
    elif index.kind == "int":
        if sum(gcm.diagonals().values()) != 0:
            return None
        vec = PresentedVector(index, (), 0, 1)
    else:
        head_len = gcm.head_size + gcm.band
        unknowns = head_len + 2  # v_0..v_{H-1}, a, b
        boundary = max(gcm.head_extent(), gcm.head_size + gcm.band, head_len + gcm.band)
        rows: list[list[Fraction]] = []
        for i in range(boundary):
            row = [Fraction(0)] * unknowns
            for j, v in gcm.row_entries(i):
                if j < head_len:
                    row[j] += v
                else:
                    row[head_len] += Fraction(v * j)
                    row[head_len + 1] += v
            rows.append(row)
        slope = [Fraction(0)] * unknowns
        slope[head_len] = Fraction(sum(gcm.diagonals().values()))
        intercept = [Fraction(0)] * unknowns
        intercept[head_len] = Fraction(sum(d * v for d, v in gcm.diagonals().items()))
        intercept[head_len + 1] = Fraction(sum(gcm.diagonals().values()))
        rows.extend([slope, intercept])
        basis = _kernel_basis(rows, unknowns)
        if len(basis) != 1:
            return None
        ints = _primitive_integer(basis[0])
        head, a, b = ints[:head_len], ints[-2], ints[-1]
        vec = PresentedVector(index, head, a, b)
        if not vec.is_strictly_positive():
            vec = PresentedVector(index, [-x for x in head], -a, -b)
    if not vec.is_strictly_positive():
        return None
    if not gcm.apply(vec).is_zero():
        return None
    return vec


# -- graph matching ----------------------------------------------------------------


def _dense_adjacency(adjacency: PresentedMatrix) -> list[list[int]]:
    n = adjacency.index.size
    return adjacency.truncate(n)


def _profile(dense: list[list[int]], v: int) -> tuple:
    out = sorted(x for j, x in enumerate(dense[v]) if j != v and x)
    inc = sorted(row[v] for j, row in enumerate(dense) if j != v and row[v])
    return (dense[v][v], tuple(out), tuple(inc))


def _digraph_isomorphic(a: list[list[int]], b: list[list[int]]) -> bool:
    n = len(a)
    if len(b) != n:
        return False
    pa = [_profile(a, v) for v in range(n)]
    pb = [_profile(b, v) for v in range(n)]
    if sorted(pa) != sorted(pb):
        return False
    order = sorted(range(n), key=lambda v: (pa.count(pa[v]), v))
    image: list[int | None] = [None] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used[w] or pa[v] != pb[w]:
                continue
            ok = True
            for prev in order[:pos]:
                pw = image[prev]
                if a[v][prev] != b[w][pw] or a[prev][v] != b[pw][w]:
                    ok = False
                    break
            if ok and a[v][v] == b[w][w]:
                image[v] = w
                used[w] = True
                if extend(pos + 1):
                    return True
                image[v] = None
                used[w] = False
        return False

    return extend(0)


def _match_infinite(adjacency: PresentedMatrix) -> DynkinType | None:
    for family in INFINITE_FAMILIES:
        candidate = _infinite_adjacency(family)
        if candidate.index != adjacency.index:
            continue
        if candidate == adjacency:
            return DynkinType("infinite", family)
    if adjacency.index.kind != "nat":
        return None
    window = max(adjacency.head_size, 3) + adjacency.band
    if window > 6:
        return None
    extent = max(adjacency.head_extent(), window + adjacency.band) + window
    for family in INFINITE_FAMILIES:
        candidate = _infinite_adjacency(family)
        if candidate.index != adjacency.index:
            continue
        for perm in permutations(range(window)):
            if all(perm[i] == i for i in range(window)):
                continue
            entries = {}
            for i in range(extent):
                pi = perm[i] if i < window else i
                for j in range(extent):
                    pj = perm[j] if j < window else j
                    if min(i, j) < window + adjacency.band:
                        v = adjacency.entry(pi, pj)
                        if v:
                            entries[(i, j)] = v
            permuted = PresentedMatrix(
                adjacency.index, window + adjacency.band, entries, adjacency.diagonals()
            )
            if permuted == candidate:
                return DynkinType("infinite", family)
    return None


# -- connectivity ------------------------------------------------------------------


def _finite_connected(dense: list[list[int]]) -> bool:
    n = len(dense)
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(n):
            if w not in seen and (dense[v][w] or dense[w][v]):
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _infinite_connected(adjacency: PresentedMatrix) -> bool:
    """Certify connectivity of an infinite diagram.

    Every vertex past the head descends into the window along a negative
    tail offset (support is symmetric), so the diagram is connected once
    all window vertices sit in one component.  Edges may detour through
    vertices slightly above the window, hence the widened truncation.
    A False answer means the certificate could not be produced.
    """
    offdiag = [d for d, v in adjacency.diagonals().items() if d != 0 and v != 0]
    if not offdiag:
        return False
    if adjacency.index.kind == "int":
        # steps generate the subgroup gcd(offsets)*Z
        return gcd(*(abs(d) for d in offdiag)) == 1
    window = max(adjacency.head_extent(), adjacency.head_size + adjacency.band) + adjacency.band
    dense = adjacency.truncate(window + 2 * adjacency.band)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(len(dense)):
            if w not in seen and (dense[v][w] or dense[w][v]):
                seen.add(w)
                stack.append(w)
    return all(v in seen for v in range(window))


# -- classification -----------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    """Outcome of classify: a type (or None) plus an exact certificate."""

    kind: str  # classical | affine | infinite | unrecognized
    dtype: DynkinType | None
    certificate: dict

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "type": self.dtype.to_json() if self.dtype else None,
            "certificate": self.certificate,
        }


def _unrecognized(reason: str) -> Classification:
    return Classification("unrecognized", None, {"reason": reason})


def classify_finite(gcm: PresentedMatrix) -> Classification:
    n = gcm.index.size
    adjacency = graph_of(gcm)
    dense = _dense_adjacency(adjacency)
    if not _finite_connected(dense):
        return _unrecognized("diagram is not connected")
    minors = _leading_minors(gcm.truncate(n))
    if all(m > 0 for m in minors):
        for family, (minimum, fixed) in CLASSICAL_RANKS.items():
            rank = fixed if fixed is not None else n
            if rank != n or n < minimum:
                continue
            dtype = DynkinType("classical", family, rank)
            if _digraph_isomorphic(dense, _dense_adjacency(graph_of(template(dtype)))):
                certificate = {
                    "minors": minors,
                    "coxeter_number": coxeter_number(dtype),
                    "annihilation": check_coxeter_annihilation(dtype),
                }
                return Classification("classical", dtype, certificate)
        return _unrecognized("positive definite but matches no classical template")
    null = find_positive_null_vector(gcm)
    if null is None:
        return _unrecognized("neither positive definite nor a positive null vector")
    for family, (minimum, fixed) in AFFINE_RANKS.items():
        ranks: Iterable[int]
        if fixed is not None:
            ranks = (fixed,)
        else:
            ranks = range(minimum, n + 1)
        for rank in ranks:
            dtype = DynkinType("affine", family, rank)
            candidate = template(dtype)
            if candidate.index.size != n:
                continue
            if _digraph_isomorphic(dense, _dense_adjacency(graph_of(candidate))):
                certificate = {"null_vector": list(null.head)}
                return Classification("affine", dtype, certificate)
    return _unrecognized("positive null vector but matches no affine template")


def classify(gcm: PresentedMatrix) -> Classification:
    """Classify a generalized Cartan matrix with an exact certificate."""
    validate_gcm(gcm)
    try:
        adjacency = graph_of(gcm)
    except GCMError as exc:
        return _unrecognized(str(exc))
    if gcm.index.kind == "finite":
        return classify_finite(gcm)
    if not _infinite_connected(adjacency):
        return _unrecognized("could not certify connectivity of the infinite diagram")
    null = find_positive_null_vector(gcm)
    if null is None:
        return _unrecognized("no strictly positive eventually-affine null vector found")
    dtype = _match_infinite(adjacency)
    if dtype is None:
        return _unrecognized("positive null vector but matches no infinite template")
    certificate = {"null_vector": null.to_json_dict(), "template": dtype.family}
    return Classification("infinite", dtype, certificate)
