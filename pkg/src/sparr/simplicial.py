"""Exact rational homology of finite simplicial complexes.

Boundary matrices are assembled with the usual alternating signs and their
ranks are computed by fraction-free elimination over the integers, so no
floating point enters any Betti number.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Union

from .errors import DimensionError, ValidationError

Number = Union[int, Fraction]


class BettiTable(Mapping):
    """Degree-indexed ranks with finite support.

    Indexing an absent degree returns 0, so ``table[d]`` is always safe.
    Iteration runs over the degrees with non-zero rank in increasing order.
    """

    __slots__ = ("_ranks",)

    def __init__(self, ranks: Mapping[int, int] | Iterable[int] = ()):
        items = ranks.items() if isinstance(ranks, Mapping) else enumerate(ranks)
        clean: dict[int, int] = {}
        for degree, rank in items:
            degree, rank = int(degree), int(rank)
            if degree < 0:
                raise ValidationError(f"negative degree {degree}")
            if rank < 0:
                raise ValidationError(f"negative rank {rank} in degree {degree}")
            if rank:
                clean[degree] = clean.get(degree, 0) + rank
        self._ranks = dict(sorted(clean.items()))

    def __getitem__(self, degree: int) -> int:
        return self._ranks.get(degree, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self._ranks)

    def __len__(self) -> int:
        return len(self._ranks)

    def __contains__(self, degree: object) -> bool:
        return degree in self._ranks

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BettiTable):
            return self._ranks == other._ranks
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._ranks.items()))

    def __repr__(self) -> str:
        return f"BettiTable({self.as_tuple()})"

    @property
    def top_degree(self) -> int:
        """Largest degree with non-zero rank, or -1 for the zero table."""
        return max(self._ranks, default=-1)

    def as_tuple(self, length: int | None = None) -> tuple[int, ...]:
        if length is None:
            length = self.top_degree + 1
        return tuple(self[d] for d in range(length))

    def as_dict(self) -> dict[int, int]:
        return dict(self._ranks)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * r for d, r in self._ranks.items())

    def total(self) -> int:
        return sum(self._ranks.values())

    def __add__(self, other: "BettiTable") -> "BettiTable":
        out = dict(self._ranks)
        for d, r in other._ranks.items():
            out[d] = out.get(d, 0) + r
        return BettiTable(out)

    def __sub__(self, other: "BettiTable") -> "BettiTable":
        out = dict(self._ranks)
        for d, r in other._ranks.items():
            out[d] = out.get(d, 0) - r
        return BettiTable(out)  # raises on a negative rank

    def scale(self, factor: int) -> "BettiTable":
        return BettiTable({d: factor * r for d, r in self._ranks.items()})

    def tensor(self, other: "BettiTable") -> "BettiTable":
        """Kunneth product over a field: ranks convolve."""
        out: dict[int, int] = {}
        for p, a in self._ranks.items():
            for q, b in other._ranks.items():
                out[p + q] = out.get(p + q, 0) + a * b
        return BettiTable(out)

    def shift(self, by: int) -> "BettiTable":
        return BettiTable({d + by: r for d, r in self._ranks.items() if d + by >= 0})


class RationalMatrix:
    """Sparse matrix with exact rational entries.

    Entries are stored column-wise as ``{row: value}`` dictionaries; zeros are
    never stored.
    """

    __slots__ = ("rows", "cols", "_columns")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], Number] | None = None):
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._columns: list[dict[int, Fraction]] = [{} for _ in range(cols)]
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionError(f"entry ({i}, {j}) outside {rows}x{cols}")
            value = Fraction(value)
            if value:
                self._columns[j][i] = value

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "RationalMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionError("ragged rows")
            for j, value in enumerate(row):
                if value:
                    entries[i, j] = value
        return cls(nrows, ncols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls(size, size, {(i, i): 1 for i in range(size)})

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._columns[j].get(i, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._columns) == (other.rows, other.cols, other._columns)

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._columns)

    def column(self, j: int) -> dict[int, Fraction]:
        return dict(self._columns[j])

    def to_rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for j, col in enumerate(self._columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise DimensionError(f"row mismatch {self.rows} vs {other.rows}")
        out = RationalMatrix(self.rows, self.cols + other.cols)
        out._columns = [dict(c) for c in self._columns] + [dict(c) for c in other._columns]
        return out

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = RationalMatrix(self.rows, other.cols)
        for j, bcol in enumerate(other._columns):
            acc: dict[int, Fraction] = {}
            for k, b in bcol.items():
                for i, a in self._columns[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            out._columns[j] = {i: v for i, v in acc.items() if v}
        return out

    def is_zero(self) -> bool:
        return not any(self._columns)

    def rank(self) -> int:
        return _integer_rank(_integer_columns(self._columns))

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the right kernel, one vector of length ``cols`` per free column."""
        reduced, pivots = _rref(self.to_rows(), self.cols)
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.cols
            vec[f] = Fraction(1)
            for r, pc in enumerate(pivots):
                vec[pc] = -reduced[r][f]
            basis.append(vec)
        return basis


def _integer_columns(columns: Iterable[Mapping[int, Fraction]]) -> list[dict[int, int]]:
    """Scale each column by the lcm of its denominators (rank is unchanged)."""
    out = []
    for col in columns:
        if not col:
            continue
        den = math.lcm(*(Fraction(v).denominator for v in col.values()))
        out.append({i: int(Fraction(v) * den) for i, v in col.items()})
    return out


def _integer_rank(vectors: list[dict[int, int]]) -> int:
    """Rank of a family of sparse integer vectors by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for vec in vectors:
        vec = dict(vec)
        while vec:
            lead = min(vec)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = vec
                break
            a, b = vec[lead], piv[lead]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            # vec <- b*vec - a*piv kills the leading entry
            new = {i: b * v for i, v in vec.items()}
            for i, v in piv.items():
                w = new.get(i, 0) - a * v
                if w:
                    new[i] = w
                else:
                    new.pop(i, None)
            if new:
                content = math.gcd(*new.values())
                if content > 1:
                    new = {i: v // content for i, v in new.items()}
            vec = new
    return len(pivots)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pick = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pick is None:
            continue
        m[r], m[pick] = m[pick], m[r]
        lead = m[r][c]
        m[r] = [v / lead for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


class SimplicialComplex:
    """Finite abstract simplicial complex.

    Vertices are opaque hashable ids kept in the given order; simplices are
    stored as sorted tuples of vertex *positions*, so the canonical
    lexicographic order is the order of ``vertices``.
    """

    __slots__ = ("vertices", "_index", "_simplices")

    def __init__(self, vertices: Sequence[Hashable], simplices: Iterable[Iterable[Hashable]] = (), *, close: bool = True):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise ValidationError("duplicate vertex ids")
        by_dim: dict[int, set[tuple[int, ...]]] = {0: {(i,) for i in range(len(self.vertices))}}
        for simplex in simplices:
            try:
                idx = tuple(sorted({self._index[v] for v in simplex}))
            except KeyError as exc:
                raise ValidationError(f"simplex uses unknown vertex {exc.args[0]!r}") from None
            if not idx:
                continue
            if close:
                for size in range(1, len(idx) + 1):
                    by_dim.setdefault(size - 1, set()).update(combinations(idx, size))
            else:
                by_dim.setdefault(len(idx) - 1, set()).add(idx)
        if not close:
            for d, faces in by_dim.items():
                for s in faces:
                    if d and any(f not in by_dim.get(d - 1, ()) for f in combinations(s, d)):
                        raise ValidationError(f"complex is not closed under faces at {s}")
        if not self.vertices:
            by_dim = {}
        self._simplices = {d: tuple(sorted(s)) for d, s in sorted(by_dim.items()) if s}

    @classmethod
    def from_index_simplices(cls, nvertices: int, maximal: Iterable[Sequence[int]]) -> "SimplicialComplex":
        return cls(range(nvertices), maximal)

    @property
    def dimension(self) -> int:
        return max(self._simplices, default=-1)

    def simplices(self, d: int) -> tuple[tuple[int, ...], ...]:
        """d-simplices as sorted tuples of vertex positions, in canonical order."""
        return self._simplices.get(d, ())

    def count(self, d: int) -> int:
        return len(self._simplices.get(d, ()))

    def f_vector(self) -> tuple[int, ...]:
        return tuple(self.count(d) for d in range(self.dimension + 1))

    def is_empty(self) -> bool:
        return not self.vertices

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector()})"


def boundary_matrix(K: SimplicialComplex, d: int) -> RationalMatrix:
    """Matrix of the boundary map from d-chains to (d-1)-chains."""
    if d <= 0:
        raise ValueError("boundary_matrix needs d >= 1; d = 0 maps to the zero space")
    rows = K.simplices(d - 1)
    cols = K.simplices(d)
    row_of = {s: i for i, s in enumerate(rows)}
    entries = {}
    for j, s in enumerate(cols):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            entries[row_of[face], j] = -1 if i % 2 else 1
    return RationalMatrix(len(rows), len(cols), entries)


def _boundary_rank(K: SimplicialComplex, d: int) -> int:
    if d <= 0 or d > K.dimension:
        return 0
    return boundary_matrix(K, d).rank()


def betti(K: SimplicialComplex) -> BettiTable:
    """Rational Betti numbers ``b_d = dim C_d - rank d_d - rank d_{d+1}``."""
    ranks = [_boundary_rank(K, d) for d in range(K.dimension + 2)]
    return BettiTable({d: K.count(d) - ranks[d] - ranks[d + 1] for d in range(K.dimension + 1)})


def reduced_betti(K: SimplicialComplex) -> BettiTable:
    """Reduced Betti numbers; the empty complex gets the zero table."""
    b = betti(K)
    if K.is_empty():
        return BettiTable()
    out = b.as_dict()
    out[0] = max(b[0] - 1, 0)
    return BettiTable(out)
