"""Generalized quaternion algebras H(alpha, beta) over Z_n.

Basis (1, i, j, ij) with i^2 = alpha, j^2 = beta, ij = -ji; conjugate
negates the three imaginary coefficients, the norm is
c1^2 - alpha c2^2 - beta c3^2 + alpha*beta c4^2, and an element is a unit
exactly when its norm is a unit in Z_n (x * conj(x) = norm(x) * 1).

The second half builds "sequence quaternions" over H(-1,-1): four
consecutive terms of the l-number sequence as coefficients, where the
norm collapses to (l^2 + 2) * a_{2n+3} and is always 2 mod l^2, so every
such element is a unit mod any power of an odd prime l.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .ringcore import ModulusMismatch, NotInvertible, check_modulus, invert_mod, is_prime
from .lnumbers import LSpec, l_terms, m_value


@dataclass(frozen=True)
class QuatAlgebra:
    """H(alpha, beta) over Z_n."""

    alpha: int
    beta: int
    modulus: int

    def __post_init__(self):
        check_modulus(self.modulus)
        object.__setattr__(self, "alpha", self.alpha % self.modulus)
        object.__setattr__(self, "beta", self.beta % self.modulus)

    def quat(self, c1: int, c2: int, c3: int, c4: int) -> "Quaternion":
        return Quaternion(self, (c1, c2, c3, c4))

    def one(self) -> "Quaternion":
        return self.quat(1, 0, 0, 0)

    def zero(self) -> "Quaternion":
        return self.quat(0, 0, 0, 0)


@dataclass(frozen=True)
class Quaternion:
    """c1 + c2 i + c3 j + c4 ij with coefficients in Z_n."""

    algebra: QuatAlgebra
    coeffs: tuple[int, int, int, int]

    def __post_init__(self):
        m = self.algebra.modulus
        object.__setattr__(self, "coeffs", tuple(c % m for c in self.coeffs))

    def _match(self, other: "Quaternion") -> None:
        if self.algebra != other.algebra:
            raise ModulusMismatch(f"{self.algebra} vs {other.algebra}")

    def __add__(self, other: "Quaternion") -> "Quaternion":
        self._match(other)
        return Quaternion(self.algebra,
                          tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        self._match(other)
        return Quaternion(self.algebra,
                          tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Quaternion":
        return Quaternion(self.algebra, tuple(-c for c in self.coeffs))

    def scale(self, c: int) -> "Quaternion":
        return Quaternion(self.algebra, tuple(c * x for x in self.coeffs))

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        self._match(other)
        al, be = self.algebra.alpha, self.algebra.beta
        x1, x2, x3, x4 = self.coeffs
        y1, y2, y3, y4 = other.coeffs
        return Quaternion(self.algebra, (
            x1 * y1 + al * x2 * y2 + be * x3 * y3 - al * be * x4 * y4,
            x1 * y2 + x2 * y1 - be * x3 * y4 + be * x4 * y3,
            x1 * y3 + al * x2 * y4 + x3 * y1 - al * x4 * y2,
            x1 * y4 + x2 * y3 - x3 * y2 + x4 * y1,
        ))

    def conjugate(self) -> "Quaternion":
        c1, c2, c3, c4 = self.coeffs
        return Quaternion(self.algebra, (c1, -c2, -c3, -c4))

    def trace(self) -> int:
        """Scalar part of x + conj(x)."""
        return 2 * self.coeffs[0] % self.algebra.modulus

    def norm(self) -> int:
        al, be, m = self.algebra.alpha, self.algebra.beta, self.algebra.modulus
        c1, c2, c3, c4 = self.coeffs
        return (c1 * c1 - al * c2 * c2 - be * c3 * c3 + al * be * c4 * c4) % m

    def inverse(self) -> "Quaternion":
        """conj(x) * norm(x)^{-1}; NotInvertible when the norm is not a unit."""
        n_inv = invert_mod(self.norm(), self.algebra.modulus)
        return self.conjugate().scale(n_inv)

    def is_unit(self) -> bool:
        return gcd(self.norm(), self.algebra.modulus) == 1


def q_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    return x * y


def q_conj(x: Quaternion) -> Quaternion:
    return x.conjugate()


def q_trace(x: Quaternion) -> int:
    return x.trace()


def q_norm(x: Quaternion) -> int:
    return x.norm()


def q_inverse(x: Quaternion) -> Quaternion:
    return x.inverse()


def _require_odd_prime(l: int) -> None:
    if l < 3 or not is_prime(l):
        raise ValueError(f"l must be an odd prime, got {l}")


@dataclass(frozen=True)
class LQuaternion:
    """A_n = a_n + a_{n+1} i + a_{n+2} j + a_{n+3} ij in H(-1,-1) over Z_{l^r}."""

    l: int
    r: int
    index: int
    quat: Quaternion


def l_quaternion(l: int, r: int, n: int) -> LQuaternion:
    if r < 1:
        raise ValueError("need r >= 1")
    if n < 0:
        raise ValueError("need n >= 0")
    if l < 2:
        raise ValueError("need l >= 2; Z_{l^r} is trivial for l = 1, use "
                         "l_quaternion_norm for the integer-level identities")
    algebra = QuatAlgebra(-1, -1, l ** r)
    a = l_terms(LSpec(l), n + 4)
    return LQuaternion(l, r, n, algebra.quat(a[n], a[n + 1], a[n + 2], a[n + 3]))


def l_quaternion_norm(l: int, n: int) -> int:
    """The exact integer norm of A_n in H(-1,-1): the four-square sum."""
    a = l_terms(LSpec(l), n + 4)
    return a[n] ** 2 + a[n + 1] ** 2 + a[n + 2] ** 2 + a[n + 3] ** 2


def l_quat_norm_check(l: int, n: int) -> bool:
    """Over Z: a_n^2 + a_{n+1}^2 + a_{n+2}^2 + a_{n+3}^2 = (l^2+2) a_{2n+3}."""
    if l < 1 or n < 0:
        raise ValueError("need l >= 1 and n >= 0")
    a = l_terms(LSpec(l), 2 * n + 4)
    return l_quaternion_norm(l, n) == (l * l + 2) * a[2 * n + 3]


@dataclass(frozen=True)
class CensusRecord:
    index: int
    norm_mod: int
    invertible: bool
    norm_is_two_mod_l2: bool


@dataclass(frozen=True)
class CensusReport:
    l: int
    r: int
    records: tuple[CensusRecord, ...]

    @property
    def all_invertible(self) -> bool:
        return all(rec.invertible for rec in self.records)

    @property
    def all_norms_two_mod_l2(self) -> bool:
        return all(rec.norm_is_two_mod_l2 for rec in self.records)


def invertibility_census(l: int, r: int, n_max: int) -> CensusReport:
    """For n = 0..n_max: is A_n a unit mod l^r, and is its norm 2 mod l^2?

    Both hold for every n when l is an odd prime; the report makes that
    checkable instead of assumed.
    """
    _require_odd_prime(l)
    if r < 1 or n_max < 0:
        raise ValueError("need r >= 1 and n_max >= 0")
    mod = l ** r
    records = []
    for n in range(n_max + 1):
        norm = l_quaternion_norm(l, n)
        records.append(CensusRecord(
            index=n,
            norm_mod=norm % mod,
            invertible=gcd(norm, mod) == 1,
            norm_is_two_mod_l2=norm % (l * l) == 2,
        ))
    return CensusReport(l, r, tuple(records))


def period_two_check(l: int, n: int) -> bool:
    """A_n = A_{n+2} in H(-1,-1) over Z_l (coefficients agree mod l)."""
    _require_odd_prime(l)
    if n < 0:
        raise ValueError("need n >= 0")
    return l_quaternion(l, 1, n).quat == l_quaternion(l, 1, n + 2).quat


def quat_gap_check(l: int, n: int, k: int, variant: int) -> bool:
    """A_n + A_{n+g} = 2 A_{n+g/2} mod l^2, g = 2^k or 3*2^k (k >= 2)."""
    _require_odd_prime(l)
    if k < 2 or n < 0:
        raise ValueError("need k >= 2 and n >= 0")
    if variant == 2 ** k:
        gap = 2 ** k
    elif variant == 3 * 2 ** k:
        gap = 3 * 2 ** k
    else:
        raise ValueError(f"variant must be 2^k or 3*2^k, got {variant}")
    a_n = l_quaternion(l, 2, n).quat
    a_hi = l_quaternion(l, 2, n + gap).quat
    a_mid = l_quaternion(l, 2, n + gap // 2).quat
    return a_n + a_hi == a_mid.scale(2)


def quat_window_sum(l: int, n: int) -> Quaternion:
    """Sum of the 2*l^2 consecutive A_n, ..., A_{n+2l^2-1} mod l^2."""
    _require_odd_prime(l)
    if n < 0:
        raise ValueError("need n >= 0")
    algebra = QuatAlgebra(-1, -1, l * l)
    a = l_terms(LSpec(l), n + 2 * l * l + 4)
    total = algebra.zero()
    for t in range(n, n + 2 * l * l):
        total = total + algebra.quat(a[t], a[t + 1], a[t + 2], a[t + 3])
    return total


def m_two_mod_l2_check(l: int, k: int) -> bool:
    """M_k = 2 mod l^2 (2 is fixed by x -> x^2 - 2, and M_2 = 2 mod l^2)."""
    if l < 2:
        raise ValueError("needs l >= 2")
    return m_value(LSpec(l), k) % (l * l) == 2
