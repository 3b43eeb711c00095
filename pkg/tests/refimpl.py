"""Independent reference implementations used as test oracles.

Everything here is deliberately naive: brute-force weight multisets for
tensor products, dense exact linear algebra over Fraction, permutation
search for graph matching.  These routes must stay separate from the
library code they check.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


# -- sl2 weight combinatorics -------------------------------------------------


def weight_multiset(m: int) -> dict[int, int]:
    """Weights of the simple module L(m): m, m-2, ..., -m, each once."""
    return {w: 1 for w in range(-m, m + 1, 2)}


def product_weights(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            out[wa + wb] = out.get(wa + wb, 0) + ca * cb
    return out


def weights_to_simples(mults: dict[int, int]) -> dict[int, int]:
    """Peel highest weights: mult of L(w) = count(w) - count(w + 2)."""
    if not mults:
        return {}
    top = max(mults)
    out: dict[int, int] = {}
    for w in range(top, -1, -1):
        c = mults.get(w, 0) - mults.get(w + 2, 0)
        if c < 0:
            raise ValueError("not a genuine character")
        if c:
            out[w] = c
    return out


def brute_tensor(m: int, n: int) -> dict[int, int]:
    """L(m) (x) L(n) decomposed via weight multisets only."""
    return weights_to_simples(product_weights(weight_multiset(m), weight_multiset(n)))


# -- dense exact matrix helpers ----------------------------------------------


def mat_mul(a: list[list], b: list[list]) -> list[list]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    assert all(len(row) == k for row in a)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_add(a: list[list], b: list[list]) -> list[list]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: list[list]) -> list[list]:
    return [[c * x for x in row] for row in a]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_poly(p, m: list[list]) -> list[list]:
    """Evaluate a coefficient vector (lowest degree first) at a square matrix."""
    n = len(m)
    acc = [[0] * n for _ in range(n)]
    for coeff in reversed(list(p)):
        acc = mat_mul(acc, m)
        for i in range(n):
            acc[i][i] += coeff
    return acc


# -- exact rational linear algebra --------------------------------------------


def ldlt_positive_definite(a: list[list]) -> bool:
    """Symmetric part not assumed; runs LDL^T style pivoting on a copy."""
    n = len(a)
    work = [[Fraction(x) for x in row] for row in a]
    for k in range(n):
        pivot = work[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, n):
            factor = work[i][k] / pivot
            for j in range(k, n):
                work[i][j] -= factor * work[k][j]
    return True


def leading_minors(a: list[list]) -> list[Fraction]:
    """Exact determinants of the leading principal submatrices, sizes 1..n."""
    out = []
    for k in range(1, len(a) + 1):
        out.append(_det([row[:k] for row in a[:k]]))
    return out


def _det(a: list[list]) -> Fraction:
    n = len(a)
    work = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        det *= work[col][col]
        inv = 1 / work[col][col]
        for r in range(col + 1, n):
            factor = work[r][col] * inv
            if factor:
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return det


def rational_kernel(a: list[list]) -> list[list[Fraction]]:
    """Basis of the right kernel, by reduced row echelon form."""
    if not a:
        return []
    rows = [[Fraction(x) for x in row] for row in a]
    cols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for pr, pc in enumerate(pivots):
            vec[pc] = -rows[pr][fc]
        basis.append(vec)
    return basis


def rank(a: list[list]) -> int:
    if not a:
        return 0
    return len(a[0]) - len(rational_kernel(a))


# -- naive graph matching ------------------------------------------------------


def digraph_isomorphic(a: list[list[int]], b: list[list[int]]) -> bool:
    """Directed multigraph isomorphism by full permutation search (small n)."""
    n = len(a)
    if len(b) != n:
        return False
    for perm in itertools.permutations(range(n)):
        if all(a[i][j] == b[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return True
    return False


def gcd_list(values: list[int]) -> int:
    out = 0
    for v in values:
        out = math.gcd(out, v)
    return out
