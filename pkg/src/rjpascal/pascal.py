"""Right-justified Pascal matrices and exact dense matrix algebra.

``build_r(n)`` right-justifies the first n rows of Pascal's triangle:
entry (i, j) is C(i-1, n-j) with 1-based indices, so row i carries
Pascal row i-1 pushed against the right edge.  ``build_rx`` is the
one-parameter generalization whose (i, j) entry is C(i-1, n-j) x^(i+j-n-1);
``build_u`` stacks its eigenvectors as columns and ``build_w`` is the
rescaling of those columns whose square is a scalar matrix.

Matrices are immutable after construction, multiplication is the naive
cubic algorithm (coefficient growth dominates at these sizes), and all
public index contracts are 1-based to match the entry formulas.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .binomial import binom
from .ring import IntPoly, RingElem, X, a_pow


def _check_dimension(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix dimension must be a positive integer, got {n!r}")


class IntMatrix:
    """Square matrix of arbitrary-precision integers, row-major."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rs = tuple(tuple(row) for row in rows)
        _check_dimension(len(rs))
        for row in rs:
            if len(row) != len(rs):
                raise ValueError("matrix must be square")
        self.n = len(rs)
        self.rows = rs

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        _check_dimension(n)
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i}, {j}) outside 1..{self.n}")
        return self.rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        n = self.n
        cols = tuple(zip(*other.rows))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __pow__(self, e: int) -> IntMatrix:
        if e < 0:
            raise ValueError("negative powers: invert first (inverse_unimodular)")
        out = IntMatrix.identity(self.n)
        base = self
        while e:
            if e & 1:
                out = out @ base
            base = base @ base
            e >>= 1
        return out

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def det(self) -> int:
        """Exact determinant by Bareiss fraction-free elimination."""
        n = self.n
        m = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    # Bareiss: this division is exact
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def _minor(self, i: int, j: int) -> IntMatrix:
        return IntMatrix(
            [
                [self.rows[r][c] for c in range(self.n) if c != j]
                for r in range(self.n) if r != i
            ]
        )

    def inverse_unimodular(self) -> IntMatrix:
        """Exact integer inverse via the adjugate; requires det = +/-1."""
        d = self.det()
        if d not in (1, -1):
            raise ValueError(f"matrix is not unimodular (det = {d})")
        n = self.n
        if n == 1:
            return IntMatrix([[d]])
        inv = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                cof = (-1) ** ((i + j) % 2) * self._minor(i, j).det()
                inv[j][i] = cof * d
        return IntMatrix(inv)

    def to_json(self) -> dict:
        """JSON form {"n": n, "entries": [[...]]} with decimal-string entries."""
        return {
            "n": self.n,
            "entries": [[str(e) for e in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, obj: dict) -> IntMatrix:
        m = cls([[int(e) for e in row] for row in obj["entries"]])
        if m.n != obj["n"]:
            raise ValueError("dimension field does not match entries")
        return m

    def to_csv(self) -> str:
        """Plain decimal CSV, one row per line, trailing newline."""
        return "".join(",".join(str(e) for e in row) + "\n" for row in self.rows)

    def __str__(self) -> str:
        cells = [[str(e) for e in row] for row in self.rows]
        widths = [max(len(cells[i][j]) for i in range(self.n)) for j in range(self.n)]
        return "\n".join(
            "[ " + "  ".join(cells[i][j].rjust(widths[j]) for j in range(self.n)) + " ]"
            for i in range(self.n)
        )

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]!r})"


class RingMatrix:
    """Square matrix of RingElem entries sharing one coefficient ring."""

    __slots__ = ("n", "rows", "x_image")

    def __init__(self, rows: Iterable[Iterable[RingElem]]):
        rs = tuple(tuple(row) for row in rows)
        _check_dimension(len(rs))
        x_image = None
        for row in rs:
            if len(row) != len(rs):
                raise ValueError("matrix must be square")
            for e in row:
                if not isinstance(e, RingElem):
                    raise TypeError(f"entries must be RingElem, got {type(e).__name__}")
                if x_image is None:
                    x_image = e.x_image
                elif e.x_image != x_image:
                    raise ValueError("entries mix different x images")
        self.n = len(rs)
        self.rows = rs
        self.x_image = x_image

    @classmethod
    def identity(cls, n: int, x_image: IntPoly = X) -> RingMatrix:
        _check_dimension(n)
        one = RingElem(1, 0, x_image)
        zero = RingElem(0, 0, x_image)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, elems: Sequence[RingElem]) -> RingMatrix:
        n = len(elems)
        _check_dimension(n)
        zero = RingElem(0, 0, elems[0].x_image)
        return cls(
            [[elems[i] if i == j else zero for j in range(n)] for i in range(n)]
        )

    def entry(self, i: int, j: int) -> RingElem:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i}, {j}) outside 1..{self.n}")
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[RingElem, ...]:
        """Column j (1-based) as a vector."""
        if not (1 <= j <= self.n):
            raise IndexError(f"column {j} outside 1..{self.n}")
        return tuple(row[j - 1] for row in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.rows == other.rows

    def _dot(self, row, col) -> RingElem:
        acc = RingElem(0, 0, self.x_image)
        for a, b in zip(row, col):
            acc = acc + a * b
        return acc

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        cols = tuple(zip(*other.rows))
        return RingMatrix(
            [[self._dot(row, col) for col in cols] for row in self.rows]
        )

    def mul_vector(self, vec: Sequence[RingElem]) -> tuple[RingElem, ...]:
        if len(vec) != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {len(vec)}")
        return tuple(self._dot(row, vec) for row in self.rows)

    def scalar_mul(self, c) -> RingMatrix:
        return RingMatrix([[e * c for e in row] for row in self.rows])

    def trace(self) -> RingElem:
        acc = RingElem(0, 0, self.x_image)
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def specialize(self, x_value: int) -> RingMatrix:
        return RingMatrix([[e.specialize(x_value) for e in row] for row in self.rows])

    def eval_float(self, x_value: float) -> list[list[float]]:
        """Numeric value of every entry at the positive root for x_value."""
        return [[e.eval_numeric(x_value) for e in row] for row in self.rows]

    def to_int_matrix(self) -> IntMatrix:
        """Convert when every entry is a plain integer; ValueError otherwise."""
        return IntMatrix([[e.as_int() for e in row] for row in self.rows])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [[e.to_json() for e in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, obj: dict, x_image: IntPoly = X) -> RingMatrix:
        m = cls(
            [[RingElem.from_json(e, x_image) for e in row] for row in obj["entries"]]
        )
        if m.n != obj["n"]:
            raise ValueError("dimension field does not match entries")
        return m

    def __str__(self) -> str:
        cells = [[str(e) for e in row] for row in self.rows]
        widths = [max(len(cells[i][j]) for i in range(self.n)) for j in range(self.n)]
        return "\n".join(
            "[ " + "  ".join(cells[i][j].rjust(widths[j]) for j in range(self.n)) + " ]"
            for i in range(self.n)
        )

    def __repr__(self) -> str:
        return f"RingMatrix(n={self.n})"


@lru_cache(maxsize=None)
def build_r(n: int) -> IntMatrix:
    """The right-justified Pascal matrix: entry (i, j) = C(i-1, n-j)."""
    _check_dimension(n)
    return IntMatrix(
        [[binom(i - 1, n - j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    )


@lru_cache(maxsize=None)
def build_rx(n: int) -> RingMatrix:
    """One-parameter family: entry (i, j) = C(i-1, n-j) x^(i+j-n-1).

    Whenever the exponent i+j-n-1 is negative the binomial factor is zero
    (n-j > i-1 forces it), so every entry is a genuine polynomial.
    """
    _check_dimension(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            c = binom(i - 1, n - j)
            if c == 0:
                row.append(RingElem(0, 0))
                continue
            e = i + j - n - 1
            assert e >= 0, f"negative exponent materialized at ({i}, {j})"
            row.append(RingElem(IntPoly([0] * e + [c]), 0))
        rows.append(row)
    return RingMatrix(rows)


@lru_cache(maxsize=None)
def build_u(n: int) -> RingMatrix:
    """Eigenvector columns: u(i,j) = sum_{k=1..j} (-1)^(i-k) C(i-1,k-1) C(n-i,j-k) a^(2k-i-1)."""
    _check_dimension(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            acc = RingElem(0, 0)
            for k in range(1, j + 1):
                c = binom(i - 1, k - 1) * binom(n - i, j - k)
                if c == 0:
                    continue
                if (i - k) % 2:
                    c = -c
                acc = acc + a_pow(2 * k - i - 1) * c
            row.append(acc)
        rows.append(row)
    return RingMatrix(rows)


@lru_cache(maxsize=None)
def build_w(n: int) -> RingMatrix:
    """Scaled eigenvector matrix with entry
    w(i,j) = (-1)^j a^(n-j) sum_{r=1..j} (-1)^(i-r) C(i-1,r-1) C(n-i,j-r) a^(2r-i-1).

    Built from its own formula rather than by scaling build_u columns, so
    the two constructions cross-check each other; its square is
    (1 + a^2)^(n-1) times the identity.
    """
    _check_dimension(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            acc = RingElem(0, 0)
            for r in range(1, j + 1):
                c = binom(i - 1, r - 1) * binom(n - i, j - r)
                if c == 0:
                    continue
                if (i - r) % 2:
                    c = -c
                acc = acc + a_pow(2 * r - i - 1) * c
            if j % 2:
                acc = -acc
            row.append(a_pow(n - j) * acc)
        rows.append(row)
    return RingMatrix(rows)
