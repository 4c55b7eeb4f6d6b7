"""Exact integer matrices, Smith normal form, and cokernels.

Everything here runs on arbitrary-precision Python integers.  There is
no numpy in this module on purpose: fixed-width integer types overflow
silently on the matrices this package produces, and every result below
is meant to be a certificate, not an approximation.

The central computation is the Smith normal form D = U * M * V with
unimodular U, V and a divisibility chain d_1 | d_2 | ... on the
diagonal.  From it the cokernel Z^cols / rowspan(M) is read off as an
abelian group.  A second, independent route to the same invariant
factors (gcds of k x k minors) is provided for cross-checking and is
deliberately not implemented in terms of the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, prod


class MatrixError(ValueError):
    """Raised for malformed matrices or documents."""


class IntegerMatrix:
    """An immutable rows x cols matrix of Python integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data, cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if data:
            cols = len(data[0]) if cols is None else cols
            for row in data:
                if len(row) != cols:
                    raise MatrixError("rows have unequal lengths")
        elif cols is None:
            raise MatrixError("empty matrix needs an explicit column count")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def entries(self) -> tuple[tuple[int, ...], ...]:
        return self._data

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            [self.column(j) for j in range(self.cols)], self.rows
        )

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __hash__(self):
        return hash((self.cols, self._data))

    def __mul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise MatrixError(
                f"cannot multiply {self.rows}x{self.cols} by "
                f"{other.rows}x{other.cols}"
            )
        return IntegerMatrix(
            [
                [
                    sum(self._data[i][k] * other._data[k][j]
                        for k in range(self.cols))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ],
            other.cols,
        )

    def submatrix(self, row_idx, col_idx) -> "IntegerMatrix":
        row_idx, col_idx = tuple(row_idx), tuple(col_idx)
        return IntegerMatrix(
            [[self._data[i][j] for j in col_idx] for i in row_idx],
            len(col_idx),
        )

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination.

        Every division below is exact, so the whole computation stays in
        the integers and intermediate growth is polynomial rather than
        exponential.
        """
        if self.rows != self.cols:
            raise MatrixError("determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self._data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def to_doc(self) -> dict:
        """Serialize as a document with entries spelled as strings.

        Strings keep arbitrarily large entries intact through tools
        that would otherwise round them to floats.
        """
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(x) for x in row] for row in self._data],
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "IntegerMatrix":
        """Read a matrix document; entries may be strings or integers."""
        try:
            rows, cols = int(doc["rows"]), int(doc["cols"])
            entries = doc["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise MatrixError(f"malformed matrix document: {exc}") from None
        if rows < 0 or cols < 0:
            raise MatrixError("matrix dimensions must be nonnegative")
        if len(entries) != rows:
            raise MatrixError(
                f"document announces {rows} rows but carries {len(entries)}"
            )
        parsed = []
        for row in entries:
            if len(row) != cols:
                raise MatrixError(
                    f"document announces {cols} cols but a row has {len(row)}"
                )
            try:
                parsed.append([int(x) for x in row])
            except (TypeError, ValueError):
                raise MatrixError(f"non-integer entry in row {row!r}") from None
        return cls(parsed, cols)

    def __str__(self):
        if self.rows == 0 or self.cols == 0:
            return f"[{self.rows}x{self.cols}]"
        widths = [
            max(len(str(self._data[i][j])) for i in range(self.rows))
            for j in range(self.cols)
        ]
        return "\n".join(
            "[ " + "  ".join(str(x).rjust(w) for x, w in zip(row, widths)) + " ]"
            for row in self._data
        )

    def __repr__(self):
        return f"IntegerMatrix({[list(r) for r in self._data]!r}, cols={self.cols})"


@dataclass(frozen=True)
class SmithForm:
    """The decomposition d = u * m * v of a matrix m.

    u and v are unimodular, d is diagonal with nonnegative entries and
    each diagonal entry divides the next.
    """

    u: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(
            self.d[i, i] for i in range(min(self.d.rows, self.d.cols))
        )

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, dst, src, c):
    """row dst += c * row src"""
    rd, rs = m[dst], m[src]
    for j in range(len(rd)):
        rd[j] += c * rs[j]


def _add_col(m, dst, src, c):
    """col dst += c * col src"""
    for row in m:
        row[dst] += c * row[src]


def _negate_row(m, i):
    m[i] = [-x for x in m[i]]


def smith_normal_form(m: IntegerMatrix) -> SmithForm:
    """Smith normal form with explicit unimodular transforms.

    Pivots are chosen as the smallest nonzero entry in absolute value of
    the remaining submatrix, which keeps coefficient growth tame.  Each
    pivot is then used to clear its row and column; any nonzero
    remainder becomes the next, strictly smaller pivot candidate, so the
    inner loop terminates.  Once the cross is clear, an entry of the
    submatrix not divisible by the pivot (if any) is pulled into the
    pivot row by a row addition and the reduction restarts; this is the
    standard trick that forces the divisibility chain.
    """
    a = [list(row) for row in m.entries()]
    nr, nc = m.rows, m.cols
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    for t in range(min(nr, nc)):
        while True:
            # smallest |nonzero| entry of the trailing submatrix
            pi = pj = -1
            best = 0
            for i in range(t, nr):
                for j in range(t, nc):
                    x = a[i][j]
                    if x != 0 and (best == 0 or abs(x) < best):
                        best = abs(x)
                        pi, pj = i, j
            if best == 0:
                break
            if pi != t:
                _swap_rows(a, t, pi)
                _swap_rows(u, t, pi)
            if pj != t:
                _swap_cols(a, t, pj)
                _swap_cols(v, t, pj)
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    q = a[i][t] // pivot
                    if q != 0:
                        _add_row(a, i, t, -q)
                        _add_row(u, i, t, -q)
                    if a[i][t] != 0:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    q = a[t][j] // pivot
                    if q != 0:
                        _add_col(a, j, t, -q)
                        _add_col(v, j, t, -q)
                    if a[t][j] != 0:
                        dirty = True
            if dirty:
                # leftover remainders are smaller than |pivot|; rerun
                continue
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # pull the bad row up; clearing it will shrink the pivot
            _add_row(a, t, offender, 1)
            _add_row(u, t, offender, 1)
        if a[t][t] < 0:
            _negate_row(a, t)
            _negate_row(u, t)

    return SmithForm(
        IntegerMatrix(u, nr), IntegerMatrix(a, nc), IntegerMatrix(v, nc)
    )


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k.

    Invariant factors are all >= 2 and each divides the next, so the
    representation is unique and equality of groups is equality of
    these fields.
    """

    free_rank: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if self.free_rank < 0:
            raise MatrixError("free rank cannot be negative")
        for d in factors:
            if d < 2:
                raise MatrixError(f"invariant factor {d} < 2")
        for x, y in zip(factors, factors[1:]):
            if y % x != 0:
                raise MatrixError(f"broken divisibility chain {factors}")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank == 0 and len(self.invariant_factors) <= 1

    def order(self) -> int | None:
        """Number of elements, or None for an infinite group."""
        if self.free_rank > 0:
            return None
        return prod(self.invariant_factors)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


def cokernel(m: IntegerMatrix) -> AbelianGroup:
    """The group Z^cols / (row span of m).

    Columns are generators, rows are relations.  Computed from the
    Smith diagonal: zero diagonal entries and missing pivots contribute
    free summands, entries >= 2 contribute finite cyclic summands.
    """
    diagonal = smith_normal_form(m).diagonal
    rank = sum(1 for x in diagonal if x != 0)
    return AbelianGroup(m.cols - rank, tuple(d for d in diagonal if d >= 2))


def minors_gcd_oracle(m: IntegerMatrix) -> AbelianGroup:
    """Cokernel via gcds of k x k minors; independent of the SNF code.

    The k-th determinantal divisor g_k is the gcd of all k x k minors;
    the invariant factors are d_k = g_k / g_{k-1}.  Enumerating minors
    is exponential, so this is restricted to matrices with at most 7
    rows and columns.  Its whole purpose is to cross-check
    smith_normal_form on small instances.
    """
    if m.rows > 7 or m.cols > 7:
        raise MatrixError(
            f"minor enumeration is capped at 7x7, got {m.rows}x{m.cols}"
        )
    factors = []
    rank = 0
    g_prev = 1
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for ri in combinations(range(m.rows), k):
            for ci in combinations(range(m.cols), k):
                g = gcd(g, m.submatrix(ri, ci).det())
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        rank = k
        factors.append(g // g_prev)
        g_prev = g
    return AbelianGroup(m.cols - rank, tuple(d for d in factors if d >= 2))
