"""Finitely presented matrices and vectors over countable index sets.

A matrix indexed by the natural numbers is presented by a finite sparse
"head" covering every position (i, j) with min(i, j) < head_size, plus a
banded Toeplitz "tail": for min(i, j) >= head_size the entry depends only
on the offset d = j - i, is zero for |d| > band, and equals diagonals[d]
otherwise.  Matrices indexed by Z are pure Toeplitz (empty head), and
matrices over a finite index set are all head.  Every row and every column
has finite support, so products are given by finite exact sums.

Vectors follow the same pattern with an eventually affine tail
v_i = a * i + b (a single constant for Z-indexed vectors).

All objects are immutable and stored in a canonical normalized form: zero
entries are dropped, the band is minimal, and the head is shrunk while its
boundary agrees with the tail rule.  Equality and hashing are structural
on that canonical form.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

__all__ = [
    "PresentationError",
    "IndexSet",
    "PresentedMatrix",
    "PresentedVector",
]


class PresentationError(ValueError):
    """Raised for malformed or inconsistent presentations."""


class IndexSet:
    """Index domain of a presented object: Finite(n), Nat, or Int."""

    __slots__ = ("kind", "size")

    def __init__(self, kind: str, size: int | None = None):
        if kind not in ("finite", "nat", "int"):
            raise PresentationError(f"unknown index kind {kind!r}")
        if kind == "finite":
            if size is None or size < 0:
                raise PresentationError("finite index needs a size >= 0")
        elif size is not None:
            raise PresentationError(f"{kind} index takes no size")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "size", size)

    def __setattr__(self, *_):
        raise AttributeError("IndexSet is immutable")

    @staticmethod
    def finite(n: int) -> "IndexSet":
        return IndexSet("finite", n)

    @staticmethod
    def nat() -> "IndexSet":
        return IndexSet("nat")

    @staticmethod
    def int_() -> "IndexSet":
        return IndexSet("int")

    def contains(self, i: int) -> bool:
        if self.kind == "finite":
            return 0 <= i < self.size
        if self.kind == "nat":
            return i >= 0
        return True

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IndexSet)
            and self.kind == other.kind
            and self.size == other.size
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.size))

    def __repr__(self) -> str:
        if self.kind == "finite":
            return f"IndexSet.finite({self.size})"
        return f"IndexSet.{self.kind}()" if self.kind == "nat" else "IndexSet.int_()"

    def to_json(self):
        if self.kind == "finite":
            return {"finite": self.size}
        return self.kind

    @staticmethod
    def from_json(data) -> "IndexSet":
        if data == "nat":
            return IndexSet.nat()
        if data == "int":
            return IndexSet.int_()
        if isinstance(data, dict) and set(data) == {"finite"} and isinstance(data["finite"], int):
            return IndexSet.finite(data["finite"])
        raise PresentationError(f"bad index description {data!r}")


def _as_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise PresentationError(f"expected an integer, got {value!r}")
    return value


class PresentedMatrix:
    """Immutable countably-indexed integer matrix in head + Toeplitz-tail form."""

    __slots__ = ("index", "head_size", "_head", "band", "_diags", "_rows", "_cols")

    def __init__(
        self,
        index: IndexSet,
        head_size: int = 0,
        head: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]] = (),
        diagonals: Mapping[int, int] | None = None,
    ):
        diagonals = dict(diagonals or {})
        if isinstance(head, Mapping):
            entries = {k: v for k, v in head.items()}
        else:
            entries = {}
            for i, j, v in head:
                key = (_as_int(i), _as_int(j))
                if key in entries:
                    raise PresentationError(f"duplicate head entry at {key}")
                entries[key] = v
        entries = {k: _as_int(v) for k, v in entries.items() if v != 0}
        diagonals = {_as_int(d): _as_int(v) for d, v in diagonals.items() if v != 0}

        if index.kind == "finite":
            n = index.size
            if diagonals:
                raise PresentationError("finite matrices have no Toeplitz tail")
            head_size = n
            for (i, j) in entries:
                if not (0 <= i < n and 0 <= j < n):
                    raise PresentationError(f"entry ({i},{j}) outside finite index 0..{n - 1}")
        elif index.kind == "int":
            if head_size != 0 or entries:
                raise PresentationError("Z-indexed matrices must be pure Toeplitz")
        else:
            if head_size < 0:
                raise PresentationError("head_size must be >= 0")
            for (i, j) in entries:
                if i < 0 or j < 0:
                    raise PresentationError(f"entry ({i},{j}) outside natural index")
                if min(i, j) >= head_size:
                    raise PresentationError(
                        f"entry ({i},{j}) outside declared head region (head_size={head_size})"
                    )

        band = max((abs(d) for d in diagonals), default=0)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "head_size", head_size)
        object.__setattr__(self, "_head", entries)
        object.__setattr__(self, "band", band)
        object.__setattr__(self, "_diags", diagonals)
        self._normalize()
        rows: dict[int, dict[int, int]] = {}
        cols: dict[int, dict[int, int]] = {}
        for (i, j), v in self._head.items():
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, {})[i] = v
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_cols", cols)

    def __setattr__(self, *_):
        raise AttributeError("PresentedMatrix is immutable")

    def _normalize(self) -> None:
        if self.index.kind != "nat":
            return
        head = self._head
        n = self.head_size
        while n > 0:
            edge = n - 1
            ok = True
            for (i, j), v in head.items():
                if min(i, j) == edge and v != self._tail_value(j - i):
                    ok = False
                    break
            if ok:
                for d, v in self._diags.items():
                    pos = (edge, edge + d) if d >= 0 else (edge - d, edge)
                    if head.get(pos, 0) != v:
                        ok = False
                        break
            if not ok:
                break
            head = {k: v for k, v in head.items() if min(k) != edge}
            n = edge
        object.__setattr__(self, "_head", head)
        object.__setattr__(self, "head_size", n)

    # -- basic access ----------------------------------------------------

    def _tail_value(self, d: int) -> int:
        return self._diags.get(d, 0)

    def entry(self, i: int, j: int) -> int:
        if not (self.index.contains(i) and self.index.contains(j)):
            raise IndexError(f"({i},{j}) outside index set")
        if self.index.kind == "int":
            return self._tail_value(j - i)
        if min(i, j) < self.head_size:
            return self._head.get((i, j), 0)
        return self._tail_value(j - i)

    def head_extent(self) -> int:
        """One past the largest coordinate mentioned by a stored head entry."""
        return max((max(i, j) + 1 for (i, j) in self._head), default=0)

    def diagonals(self) -> dict[int, int]:
        return dict(self._diags)

    def head_entries(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, v) for (i, j), v in self._head.items())

    def row_entries(self, i: int) -> Iterator[tuple[int, int]]:
        """All (j, value) with entry(i, j) != 0; finite by construction."""
        if self.index.kind == "int":
            for d, v in self._diags.items():
                yield i + d, v
            return
        for j, v in self._rows.get(i, {}).items():
            yield j, v
        if self.index.kind == "nat" and i >= self.head_size:
            for d, v in self._diags.items():
                j = i + d
                if j >= self.head_size:
                    yield j, v

    def col_entries(self, j: int) -> Iterator[tuple[int, int]]:
        """All (i, value) with entry(i, j) != 0."""
        if self.index.kind == "int":
            for d, v in self._diags.items():
                yield j - d, v
            return
        for i, v in self._cols.get(j, {}).items():
            yield i, v
        if self.index.kind == "nat" and j >= self.head_size:
            for d, v in self._diags.items():
                i = j - d
                if i >= self.head_size:
                    yield i, v

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(index: IndexSet) -> "PresentedMatrix":
        return PresentedMatrix(index)

    @staticmethod
    def scaled_identity(index: IndexSet, c: int = 1) -> "PresentedMatrix":
        if c == 0:
            return PresentedMatrix(index)
        if index.kind == "finite":
            return PresentedMatrix(index, head={(i, i): c for i in range(index.size)})
        return PresentedMatrix(index, diagonals={0: c})

    @staticmethod
    def identity(index: IndexSet) -> "PresentedMatrix":
        return PresentedMatrix.scaled_identity(index, 1)

    @staticmethod
    def from_dense(rows: list[list[int]]) -> "PresentedMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise PresentationError("dense matrix must be square")
        head = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v != 0}
        return PresentedMatrix(IndexSet.finite(n), head=head)

    # -- structure tests --------------------------------------------------

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._head.values()) and all(
            v >= 0 for v in self._diags.values()
        )

    def is_zero(self) -> bool:
        return not self._head and not self._diags

    def is_symmetric(self) -> bool:
        for (i, j), v in self._head.items():
            if self.entry(j, i) != v:
                return False
        return all(self._tail_value(-d) == v for d, v in self._diags.items())

    def transpose(self) -> "PresentedMatrix":
        return PresentedMatrix(
            self.index,
            self.head_size,
            {(j, i): v for (i, j), v in self._head.items()},
            {-d: v for d, v in self._diags.items()},
        )

    # -- arithmetic ---------------------------------------------------------

    def _require_same_index(self, other: "PresentedMatrix") -> None:
        if self.index != other.index:
            raise PresentationError("index sets differ")

    def add(self, other: "PresentedMatrix") -> "PresentedMatrix":
        self._require_same_index(other)
        diags: dict[int, int] = dict(self._diags)
        for d, v in other._diags.items():
            diags[d] = diags.get(d, 0) + v
        if self.index.kind != "nat":
            head = dict(self._head)
            for k, v in other._head.items():
                head[k] = head.get(k, 0) + v
            return PresentedMatrix(self.index, self.head_size, head, diags)
        n = max(self.head_size, other.head_size)
        w = max(self.band, other.band)
        positions = set(self._head) | set(other._head)
        offsets = set(self._diags) | set(other._diags)
        for base in range(n + w):
            for d in offsets:
                j = base + d
                if j >= 0 and min(base, j) < n:
                    positions.add((base, j))
                i = base - d
                if i >= 0 and min(i, base) < n:
                    positions.add((i, base))
        head = {}
        for (i, j) in positions:
            v = self.entry(i, j) + other.entry(i, j)
            if v:
                head[(i, j)] = v
        return PresentedMatrix(self.index, n, head, diags)

    def scale(self, c: int) -> "PresentedMatrix":
        if c == 0:
            return PresentedMatrix(self.index)
        return PresentedMatrix(
            self.index,
            self.head_size,
            {k: c * v for k, v in self._head.items()},
            {d: c * v for d, v in self._diags.items()},
        )

    def mul(self, other: "PresentedMatrix") -> "PresentedMatrix":
        self._require_same_index(other)
        diags: dict[int, int] = {}
        for d1, v1 in self._diags.items():
            for d2, v2 in other._diags.items():
                diags[d1 + d2] = diags.get(d1 + d2, 0) + v1 * v2
        if self.index.kind == "int":
            return PresentedMatrix(self.index, diagonals=diags)
        if self.index.kind == "finite":
            head: dict[tuple[int, int], int] = {}
            for (i, k), av in self._head.items():
                row_b = other._rows.get(k)
                if row_b:
                    for j, bv in row_b.items():
                        head[(i, j)] = head.get((i, j), 0) + av * bv
            return PresentedMatrix(self.index, head={k: v for k, v in head.items() if v})
        m = max(
            self.head_size + self.band,
            self.head_extent(),
            other.head_size + other.band,
            other.head_extent(),
        )
        positions: set[tuple[int, int]] = set()
        for i in range(m):
            for k, _ in self.row_entries(i):
                for j, _ in other.row_entries(k):
                    positions.add((i, j))
        for j in range(m):
            for k, _ in other.col_entries(j):
                for i, _ in self.col_entries(k):
                    positions.add((i, j))
        head = {}
        for (i, j) in positions:
            if min(i, j) < m:
                v = sum(av * other.entry(k, j) for k, av in self.row_entries(i))
                if v:
                    head[(i, j)] = v
        return PresentedMatrix(self.index, m, head, diags)

    def poly_eval(self, coeffs: Iterable[int]) -> "PresentedMatrix":
        """Evaluate an integer polynomial (lowest degree first) at this matrix."""
        acc = PresentedMatrix.zero(self.index)
        for c in reversed(list(coeffs)):
            acc = acc.mul(self)
            if c:
                acc = acc.add(PresentedMatrix.scaled_identity(self.index, c))
        return acc

    # -- vectors -----------------------------------------------------------

    def apply(self, vec: "PresentedVector") -> "PresentedVector":
        """Exact matrix-vector product.

        The affine tail of the result is certified symbolically: on generic
        rows the value is sum_d T(d) * (a*(i+d) + b), an affine polynomial in
        i, and the boundary rows are computed explicitly.
        """
        if self.index != vec.index:
            raise PresentationError("index sets differ")
        if self.index.kind == "finite":
            n = self.index.size
            vals = [sum(v * vec.entry(j) for j, v in self.row_entries(i)) for i in range(n)]
            return PresentedVector(self.index, vals)
        if self.index.kind == "int":
            b = sum(v * vec.tail_b for v in self._diags.values())
            return PresentedVector(self.index, (), 0, b)
        boundary = max(
            self.head_extent(),
            self.head_size + self.band,
            len(vec.head) + self.band,
        )
        head = [
            sum(v * vec.entry(j) for j, v in self.row_entries(i)) for i in range(boundary)
        ]
        a = vec.tail_a * sum(self._diags.values())
        b = sum(v * (vec.tail_a * d + vec.tail_b) for d, v in self._diags.items())
        return PresentedVector(self.index, head, a, b)

    # -- windows and serialization ------------------------------------------

    def truncate(self, n: int) -> list[list[int]]:
        """Dense n x n window: top-left corner for Finite/Nat, centered for Z."""
        if n < 0:
            raise PresentationError("window size must be >= 0")
        if self.index.kind == "finite" and n > self.index.size:
            raise PresentationError("window larger than finite index")
        lo = -(n // 2) if self.index.kind == "int" else 0
        return [[self.entry(lo + i, lo + j) for j in range(n)] for i in range(n)]

    def to_json_dict(self) -> dict:
        return {
            "index": self.index.to_json(),
            "head": {
                "size": self.head_size,
                "entries": [[i, j, v] for i, j, v in self.head_entries()],
            },
            "tail": {
                "band": self.band,
                "diagonals": {str(d): v for d, v in sorted(self._diags.items())},
            },
        }

    @staticmethod
    def from_json_dict(data) -> "PresentedMatrix":
        if not isinstance(data, dict):
            raise PresentationError("matrix document must be an object")
        unknown = set(data) - {"index", "head", "tail"}
        if unknown:
            raise PresentationError(f"unknown matrix fields {sorted(unknown)}")
        if "index" not in data:
            raise PresentationError("matrix document needs an index")
        index = IndexSet.from_json(data["index"])
        head = data.get("head", {"size": 0, "entries": []})
        tail = data.get("tail", {"band": 0, "diagonals": {}})
        if not isinstance(head, dict) or not isinstance(tail, dict):
            raise PresentationError("head and tail must be objects")
        entries = head.get("entries", [])
        if not isinstance(entries, list):
            raise PresentationError("head.entries must be a list")
        triples = []
        for item in entries:
            if not (isinstance(item, list) and len(item) == 3):
                raise PresentationError(f"head entry {item!r} is not [i, j, value]")
            triples.append((_as_int(item[0]), _as_int(item[1]), _as_int(item[2])))
        diags_raw = tail.get("diagonals", {})
        if not isinstance(diags_raw, dict):
            raise PresentationError("tail.diagonals must be an object")
        try:
            diags = {int(k): _as_int(v) for k, v in diags_raw.items()}
        except ValueError as exc:
            raise PresentationError(f"bad diagonal offset: {exc}") from None
        band = tail.get("band", 0)
        head_size = head.get("size", 0)
        real_band = max((abs(d) for d in diags if diags[d] != 0), default=0)
        if _as_int(band) < real_band:
            raise PresentationError(f"declared band {band} smaller than diagonal offsets")
        matrix = PresentedMatrix(index, _as_int(head_size), triples, diags)
        return matrix

    # -- identity -----------------------------------------------------------

    def _key(self):
        return (
            self.index,
            self.head_size,
            tuple(sorted(self._head.items())),
            tuple(sorted(self._diags.items())),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PresentedMatrix) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (
            f"PresentedMatrix({self.index!r}, head_size={self.head_size}, "
            f"head={sorted(self._head.items())}, diagonals={dict(sorted(self._diags.items()))})"
        )


class PresentedVector:
    """Immutable countably-indexed integer vector with an eventually affine tail."""

    __slots__ = ("index", "head", "tail_a", "tail_b")

    def __init__(
        self,
        index: IndexSet,
        head: Iterable[int] = (),
        tail_a: int = 0,
        tail_b: int = 0,
    ):
        head_t = tuple(_as_int(x) for x in head)
        tail_a = _as_int(tail_a)
        tail_b = _as_int(tail_b)
        if index.kind == "finite":
            if len(head_t) != index.size:
                raise PresentationError(
                    f"finite vector needs exactly {index.size} entries, got {len(head_t)}"
                )
            if tail_a or tail_b:
                raise PresentationError("finite vectors have no tail")
        elif index.kind == "int":
            if head_t or tail_a:
                raise PresentationError("Z-indexed vectors are a single constant")
        else:
            while head_t and head_t[-1] == tail_a * (len(head_t) - 1) + tail_b:
                head_t = head_t[:-1]
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "head", head_t)
        object.__setattr__(self, "tail_a", tail_a)
        object.__setattr__(self, "tail_b", tail_b)

    def __setattr__(self, *_):
        raise AttributeError("PresentedVector is immutable")

    def entry(self, i: int) -> int:
        if not self.index.contains(i):
            raise IndexError(f"{i} outside index set")
        if self.index.kind == "int":
            return self.tail_b
        if i < len(self.head):
            return self.head[i]
        return self.tail_a * i + self.tail_b

    def truncate(self, n: int) -> list[int]:
        lo = -(n // 2) if self.index.kind == "int" else 0
        return [self.entry(lo + i) for i in range(n)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.head) and self.tail_a == 0 and self.tail_b == 0

    def is_strictly_positive(self) -> bool:
        """True if every entry is > 0 (for infinite indices: eventually too)."""
        if any(x <= 0 for x in self.head):
            return False
        if self.index.kind == "finite":
            return True
        if self.index.kind == "int":
            return self.tail_b > 0
        if self.tail_a < 0:
            return False
        return self.tail_a * len(self.head) + self.tail_b > 0

    def to_json_dict(self) -> dict:
        doc: dict = {"head": list(self.head)}
        if self.index.kind != "finite":
            doc["tail"] = {"a": self.tail_a, "b": self.tail_b}
        return doc

    @staticmethod
    def from_json_dict(data, index: IndexSet) -> "PresentedVector":
        if not isinstance(data, dict) or "head" not in data:
            raise PresentationError("vector document needs a head list")
        head = data["head"]
        if not isinstance(head, list):
            raise PresentationError("vector head must be a list")
        tail = data.get("tail", {"a": 0, "b": 0})
        if not isinstance(tail, dict):
            raise PresentationError("vector tail must be an object")
        return PresentedVector(
            index, [_as_int(x) for x in head], _as_int(tail.get("a", 0)), _as_int(tail.get("b", 0))
        )

    def _key(self):
        return (self.index, self.head, self.tail_a, self.tail_b)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PresentedVector) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (
            f"PresentedVector({self.index!r}, head={list(self.head)}, "
            f"tail={self.tail_a}*i+{self.tail_b})"
        )
