"""Exact arithmetic in the split Grothendieck ring of finite dimensional sl2 modules.

L(m) denotes the simple module of highest weight m >= 0 (dimension m + 1).
Tensor products decompose by the Clebsch-Gordan rule

    L(m) (x) L(n)  =  L(|m - n|) (+) L(|m - n| + 2) (+) ... (+) L(m + n),

so the ring is isomorphic to Z[x] under [L(1)] -> x.  The class [L(i)] maps
to the ultraspherical polynomial R_i given by the recurrence

    R_0 = 1,  R_1 = x,  R_i = x * R_{i-1} - R_{i-2}.

All coefficients are arbitrary precision integers and may be negative
(virtual classes); no floating point is used anywhere.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

__all__ = [
    "SimpleIndex",
    "UltrasphericalPoly",
    "FusionElement",
    "simple",
    "r_poly",
    "poly_eval_int",
    "tensor",
    "fusion_to_poly",
    "poly_to_fusion",
    "dim",
]

#: Index of a simple module: the highest weight, a non-negative integer.
SimpleIndex = int

#: Dense integer coefficient vector, lowest degree first.  () is the zero
#: polynomial; the last entry of a non-empty vector is non-zero.
UltrasphericalPoly = tuple[int, ...]


class FusionElement:
    """An integer linear combination of simple classes [L(i)].

    Immutable.  Zero coefficients are never stored, so equality and hashing
    are structural on the canonical support.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[int, int] = {}
        for index, value in items:
            if index < 0:
                raise ValueError(f"simple index must be >= 0, got {index}")
            if not isinstance(index, int) or not isinstance(value, int):
                raise TypeError("indices and coefficients must be int")
            if value != 0:
                clean[index] = clean.get(index, 0) + value
                if clean[index] == 0:
                    del clean[index]
        self._coeffs = clean

    # -- access ---------------------------------------------------------

    def coeff(self, index: int) -> int:
        return self._coeffs.get(index, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._coeffs.items()))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_effective(self) -> bool:
        """True if every coefficient is non-negative (no virtual classes)."""
        return all(value >= 0 for value in self._coeffs.values())

    def max_index(self) -> int:
        if not self._coeffs:
            raise ValueError("zero element has no top index")
        return max(self._coeffs)

    # -- ring structure ---------------------------------------------------

    def __add__(self, other: "FusionElement") -> "FusionElement":
        merged = dict(self._coeffs)
        for index, value in other._coeffs.items():
            merged[index] = merged.get(index, 0) + value
        return FusionElement(merged)

    def __sub__(self, other: "FusionElement") -> "FusionElement":
        merged = dict(self._coeffs)
        for index, value in other._coeffs.items():
            merged[index] = merged.get(index, 0) - value
        return FusionElement(merged)

    def __neg__(self) -> "FusionElement":
        return FusionElement({i: -v for i, v in self._coeffs.items()})

    def scale(self, factor: int) -> "FusionElement":
        return FusionElement({i: factor * v for i, v in self._coeffs.items()})

    def __mul__(self, other: "FusionElement") -> "FusionElement":
        return tensor(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FusionElement) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for index, value in sorted(self._coeffs.items()):
            if value == 1:
                parts.append(f"L({index})")
            else:
                parts.append(f"{value}*L({index})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FusionElement({dict(sorted(self._coeffs.items()))!r})"


def simple(m: int) -> FusionElement:
    """The class of the simple module [L(m)], m >= 0."""
    if m < 0:
        raise ValueError(f"highest weight must be >= 0, got {m}")
    return FusionElement({m: 1})


def tensor(a: FusionElement, b: FusionElement) -> FusionElement:
    """Product in the fusion ring, extended bilinearly over Clebsch-Gordan."""
    out: dict[int, int] = {}
    for m, cm in a._coeffs.items():
        for n, cn in b._coeffs.items():
            coeff = cm * cn
            for weight in range(abs(m - n), m + n + 1, 2):
                out[weight] = out.get(weight, 0) + coeff
    return FusionElement(out)


def r_poly(i: int) -> UltrasphericalPoly:
    """Coefficients of R_i, the image of [L(i)] in Z[x]."""
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    prev: list[int] = [1]
    if i == 0:
        return (1,)
    cur: list[int] = [0, 1]
    for _ in range(i - 1):
        shifted = [0] + cur
        nxt = [s - p for s, p in zip(shifted, list(prev) + [0] * (len(shifted) - len(prev)))]
        prev, cur = cur, nxt
    return tuple(cur)


def poly_eval_int(p: Iterable[int], x: int) -> int:
    """Evaluate a coefficient vector at an integer point, by Horner."""
    result = 0
    for coeff in reversed(list(p)):
        result = result * x + coeff
    return result


def fusion_to_poly(a: FusionElement) -> UltrasphericalPoly:
    """Image of a fusion class in Z[x]: sum of coeff * R_i."""
    acc: list[int] = []
    for index, value in a.items():
        ri = r_poly(index)
        if len(ri) > len(acc):
            acc.extend([0] * (len(ri) - len(acc)))
        for pos, c in enumerate(ri):
            acc[pos] += value * c
    while acc and acc[-1] == 0:
        acc.pop()
    return tuple(acc)


def poly_to_fusion(p: Iterable[int]) -> FusionElement:
    """Rewrite an integer polynomial in the basis {R_i}.

    Each R_i is monic of degree i, so repeated leading-term elimination
    terminates and is exact.
    """
    work = list(p)
    while work and work[-1] == 0:
        work.pop()
    coeffs: dict[int, int] = {}
    while work:
        degree = len(work) - 1
        lead = work[-1]
        coeffs[degree] = lead
        ri = r_poly(degree)
        for pos, c in enumerate(ri):
            work[pos] -= lead * c
        while work and work[-1] == 0:
            work.pop()
    return FusionElement(coeffs)


def dim(a: FusionElement) -> int:
    """Dimension homomorphism: [L(i)] -> i + 1, i.e. evaluation at x = 2."""
    return sum(value * (index + 1) for index, value in a.items())
