"""Exact arithmetic substrate: residues mod m and matrices over Z or Z_m.

Everything here is arbitrary precision (plain Python ints) and immutable.
Matrix inversion goes through the adjugate and the inverse of the
determinant, never Gaussian elimination: over a composite modulus a matrix
can be invertible while every candidate pivot is a zero divisor.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rational = Fraction


class NotInvertible(ValueError):
    """Element (or matrix determinant) is not a unit in its ring."""


class ShapeMismatch(ValueError):
    """Matrix dimensions do not conform."""


class ModulusMismatch(ValueError):
    """Operands live in different residue rings."""


def check_modulus(m: int) -> int:
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
    return m


def invert_mod(a: int, m: int) -> int:
    """Inverse of a mod m, or NotInvertible when gcd(a, m) != 1."""
    a %= m
    if gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not a unit mod {m}")
    return pow(a, -1, m)


def multiplicative_order_int(a: int, m: int) -> int:
    """Least t >= 1 with a^t = 1 mod m; requires gcd(a, m) = 1."""
    check_modulus(m)
    a %= m
    if gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not a unit mod {m}")
    t, y = 1, a
    while y != 1:
        y = y * a % m
        t += 1
    return t


def is_prime(n: int) -> bool:
    """Trial division; adequate for the small moduli used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Residue:
    """An element of Z_m, stored as its canonical representative in [0, m)."""

    value: int
    modulus: int

    def __post_init__(self):
        check_modulus(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _match(self, other: "Residue") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"mod {self.modulus} vs mod {other.modulus}")

    def __add__(self, other: "Residue") -> "Residue":
        self._match(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._match(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._match(other)
        return Residue(self.value * other.value, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __pow__(self, e: int) -> "Residue":
        if e < 0:
            return Residue(pow(invert_mod(self.value, self.modulus), -e, self.modulus),
                           self.modulus)
        return Residue(pow(self.value, e, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def mod_inverse(x: Residue) -> Residue:
    """y with x*y = 1 mod m; NotInvertible when gcd(x, m) != 1."""
    return Residue(invert_mod(x.value, x.modulus), x.modulus)


def multiplicative_order(x: Residue) -> int:
    return multiplicative_order_int(x.value, x.modulus)


def _det_bareiss(rows: list[list[int]]) -> int:
    """Exact integer determinant, fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for c in range(n - 1):
        if m[c][c] == 0:
            for r in range(c + 1, n):
                if m[r][c] != 0:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) // prev
            m[r][c] = 0
        prev = m[c][c]
    return sign * m[n - 1][n - 1]


class Matrix:
    """Immutable matrix over Z (modulus None) or Z_m (modulus m).

    Entries are plain ints; modular matrices keep them reduced to [0, m).
    """

    __slots__ = ("rows", "cols", "modulus", "entries")

    def __init__(self, entries, modulus: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows:
            raise ShapeMismatch("matrix must have at least one row")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ShapeMismatch("ragged rows")
        if modulus is not None:
            check_modulus(modulus)
            rows = tuple(tuple(x % modulus for x in row) for row in rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", len(rows[0]))
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, k: int, modulus: int | None = None) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)],
                   modulus)

    @classmethod
    def zero(cls, rows: int, cols: int, modulus: int | None = None) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], modulus)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix)
                and self.modulus == other.modulus
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.entries, self.modulus))

    def __repr__(self) -> str:
        ring = "Z" if self.modulus is None else f"Z_{self.modulus}"
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix[{ring}]({body})"

    def _match(self, other: "Matrix") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"mod {self.modulus} vs mod {other.modulus}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._match(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("addition needs equal shapes")
        return Matrix([[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)], self.modulus)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._match(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("subtraction needs equal shapes")
        return Matrix([[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)], self.modulus)

    def scale(self, c: int) -> "Matrix":
        return Matrix([[c * x for x in row] for row in self.entries], self.modulus)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._match(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        m = self.modulus
        bt = list(zip(*other.entries))
        if m is None:
            prod = [[sum(a * b for a, b in zip(row, col)) for col in bt]
                    for row in self.entries]
        else:
            prod = [[sum(a * b for a, b in zip(row, col)) % m for col in bt]
                    for row in self.entries]
        return Matrix(prod, m)

    def apply(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        """Matrix-vector product (vec as a column)."""
        if self.cols != len(vec):
            raise ShapeMismatch(f"{self.rows}x{self.cols} applied to {len(vec)}-vector")
        m = self.modulus
        out = tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)
        return out if m is None else tuple(x % m for x in out)

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise ShapeMismatch("power needs a square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        result = Matrix.identity(self.rows, self.modulus)
        base = self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def det(self) -> int:
        """Exact determinant; reduced to [0, m) for modular matrices."""
        if self.rows != self.cols:
            raise ShapeMismatch("determinant needs a square matrix")
        d = _det_bareiss([list(r) for r in self.entries])
        return d if self.modulus is None else d % self.modulus

    def _minor(self, i: int, j: int) -> list[list[int]]:
        return [[x for c, x in enumerate(row) if c != j]
                for r, row in enumerate(self.entries) if r != i]

    def adjugate(self) -> "Matrix":
        k = self.rows
        if k != self.cols:
            raise ShapeMismatch("adjugate needs a square matrix")
        if k == 1:
            return Matrix([[1]], self.modulus)
        adj = [[(-1) ** (i + j) * _det_bareiss(self._minor(j, i))
                for j in range(k)] for i in range(k)]
        return Matrix(adj, self.modulus)

    def inverse(self) -> "Matrix":
        """Adjugate times det^{-1}; needs only det to be a unit mod m."""
        if self.modulus is None:
            raise NotInvertible("inverse is only defined over Z_m here")
        d = self.det()
        dinv = invert_mod(d, self.modulus)
        return self.adjugate().scale(dinv)

    def reduce(self, m: int) -> "Matrix":
        """The same matrix viewed in Z_m."""
        return Matrix(self.entries, check_modulus(m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def mat_det(a: Matrix) -> int:
    return a.det()


def mat_inverse_adjugate(a: Matrix) -> Matrix:
    return a.inverse()
