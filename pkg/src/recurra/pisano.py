"""Generalized Pisano periods and the laws they satisfy.

pi(m) is defined here as the multiplicative order of the companion matrix
mod m (the sequence-window period divides it and is reported separately,
since the two need not coincide for every initial window).  The order
search is plain iterated multiplication: one step costs O(k^2) because
left-multiplying by a companion matrix only rebuilds the first row.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm, prod

from .ringcore import (Matrix, NotInvertible, Residue, check_modulus,
                       is_prime, multiplicative_order)
from .recurrence import SequenceSpec, companion

DEFAULT_STEP_CAP = 10**7


class CapExceeded(RuntimeError):
    """Order search hit the configured step cap before returning to I."""


class PrimeTooLarge(ValueError):
    """Exhaustive root search is only feasible for small primes."""


@dataclass(frozen=True)
class PeriodResult:
    """Eventual period of the state sequence mod m: tail then cycle length."""

    tail: int
    period: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.tail, self.period)


@dataclass(frozen=True)
class DiagnosisResult:
    diagonalizable: bool
    eigenvalues: tuple[int, ...] | None = None


def _require_unit_tail_coeff(spec: SequenceSpec, m: int) -> None:
    if gcd(spec.coeffs[-1], m) != 1:
        raise NotInvertible(f"gcd(a_k, {m}) != 1: companion matrix is "
                            f"singular mod {m}")


def matrix_order(spec: SequenceSpec, m: int, step_cap: int = DEFAULT_STEP_CAP) -> int:
    """Least t >= 1 with D^t = I mod m. Requires gcd(a_k, m) = 1."""
    check_modulus(m)
    _require_unit_tail_coeff(spec, m)
    k = spec.k
    coeffs = tuple(a % m for a in spec.coeffs)
    ident = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
    cur = companion(spec).reduce(m).entries
    cap = min(step_cap, m ** (k * k))
    t = 1
    while cur != ident:
        if t >= cap:
            raise CapExceeded(f"no identity power within {cap} steps mod {m}")
        top = tuple(sum(a * row[j] for a, row in zip(coeffs, cur)) % m
                    for j in range(k))
        cur = (top,) + cur[:-1]
        t += 1
    return t


def state_period(spec: SequenceSpec, m: int) -> PeriodResult:
    """Eventual period of the k-term state sequence mod m.

    Works for any modulus, including gcd(a_k, m) != 1 where the sequence
    is only eventually periodic; pigeonhole bounds the search by m^k + 1
    state transitions.
    """
    check_modulus(m)
    k = spec.k
    coeffs = tuple(a % m for a in spec.coeffs)
    window = tuple(x % m for x in spec.initial)
    seen: dict[tuple[int, ...], int] = {}
    t = 0
    while window not in seen:
        seen[window] = t
        window = window[1:] + (sum(a * d for a, d in zip(coeffs, reversed(window))) % m,)
        t += 1
        if t > m ** k + 1:
            raise AssertionError("pigeonhole bound exceeded; unreachable")
    first = seen[window]
    return PeriodResult(tail=first, period=t - first)


def _gl_group_order(p: int, k: int) -> int:
    pk = p ** k
    return prod(pk - p ** i for i in range(k))


def matrix_order_multiple(k: int, m: int) -> int:
    """A multiple of the order of every invertible k x k matrix mod m.

    Per prime power p^r dividing m: |GL_k(F_p)| times p^{(r-1)k^2}, the
    size of the kernel of reduction to F_p; combine with lcm.  The result
    is astronomically larger than the true order, but raising a matrix to
    it costs only log2 of it in squarings, so it serves to exercise
    full-period exponent shifts when the true order is too long to walk.
    """
    check_modulus(m)
    out = 1
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            r = 0
            while rest % p == 0:
                rest //= p
                r += 1
            out = lcm(out, _gl_group_order(p, k) * p ** ((r - 1) * k * k))
        p += 1
    if rest > 1:
        out = lcm(out, _gl_group_order(rest, k))
    return out


def order_divisibility_check(spec: SequenceSpec, m: int,
                             step_cap: int = DEFAULT_STEP_CAP) -> bool:
    """ord((-1)^{k+1} a_k mod m) divides the matrix order mod m."""
    det = (-1) ** (spec.k + 1) * spec.coeffs[-1]
    order = matrix_order(spec, m, step_cap)
    return order % multiplicative_order(Residue(det, m)) == 0


def divisor_monotone_check(spec: SequenceSpec, s1: int, s2: int,
                           step_cap: int = DEFAULT_STEP_CAP) -> bool:
    """s1 | s2 implies pi(s1) | pi(s2)."""
    if s2 % s1 != 0:
        raise ValueError("need s1 | s2")
    return matrix_order(spec, s2, step_cap) % matrix_order(spec, s1, step_cap) == 0


def lcm_check(spec: SequenceSpec, s1: int, s2: int,
              step_cap: int = DEFAULT_STEP_CAP) -> bool:
    """pi(lcm(s1, s2)) = lcm(pi(s1), pi(s2))."""
    return matrix_order(spec, lcm(s1, s2), step_cap) == lcm(
        matrix_order(spec, s1, step_cap), matrix_order(spec, s2, step_cap))


def prime_power_ladder(spec: SequenceSpec, p: int, r_max: int,
                       step_cap: int = DEFAULT_STEP_CAP) -> list[int]:
    """[pi(p), pi(p^2), ..., pi(p^r_max)] for an odd prime p.

    Each rung is the previous one times 1 or p, and once a rung grows it
    keeps growing; both facts are re-verified on the computed values.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if r_max < 1:
        raise ValueError("need r_max >= 1")
    ladder = [matrix_order(spec, p ** r, step_cap) for r in range(1, r_max + 1)]
    growing = False
    for lo, hi in zip(ladder, ladder[1:]):
        if hi not in (lo, p * lo):
            raise ArithmeticError(f"ladder step {lo} -> {hi} is neither "
                                  f"x1 nor x{p}")
        if growing and hi == lo:
            raise ArithmeticError(f"ladder stalled after growing: {ladder}")
        growing = growing or hi == p * lo
    return ladder


def char_poly(spec: SequenceSpec) -> list[int]:
    """Coefficients [c_0, ..., c_k] of det(xI - D) = x^k - a_1 x^{k-1} - ... - a_k."""
    return [-a for a in reversed(spec.coeffs)] + [1]


def _poly_eval_mod(poly: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = (acc * x + c) % p
    return acc


def diagonalizable_mod_p(spec: SequenceSpec, p: int,
                         max_prime: int = 10**4) -> DiagnosisResult:
    """Is the companion matrix diagonalizable over Z_p?

    Finds all characteristic roots by exhaustive evaluation, then applies
    the distinct-linear-factor criterion: D is diagonalizable iff the
    product of (D - lambda I) over the distinct roots vanishes mod p.
    When it is, the order of D mod p must divide p - 1 (Fermat on the
    diagonal form); that consequence is re-verified here.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if p > max_prime:
        raise PrimeTooLarge(f"exhaustive root search capped at {max_prime}")
    _require_unit_tail_coeff(spec, p)
    k = spec.k
    f = char_poly(spec)
    roots = [x for x in range(p) if _poly_eval_mod(f, x, p) == 0]
    if not roots:
        return DiagnosisResult(False)
    d = companion(spec).reduce(p)
    ident = Matrix.identity(k, p)
    g_of_d = ident
    for lam in roots:
        g_of_d = g_of_d @ (d - ident.scale(lam))
    if g_of_d != Matrix.zero(k, k, p):
        return DiagnosisResult(False)
    # multiplicities via synthetic division; they must sum to k
    eigenvalues = []
    for lam in roots:
        poly = f[:]
        while len(poly) > 1:
            quot, rem = _synth_div(poly, lam, p)
            if rem != 0:
                break
            eigenvalues.append(lam)
            poly = quot
    eigenvalues.sort()
    if len(eigenvalues) != k:
        raise ArithmeticError("split minimal polynomial with non-split "
                              "characteristic polynomial; unreachable")
    if (p - 1) % matrix_order(spec, p) != 0:
        raise ArithmeticError(f"diagonalizable mod {p} but order does not "
                              f"divide {p - 1}")
    return DiagnosisResult(True, tuple(eigenvalues))


def _synth_div(poly: list[int], lam: int, p: int) -> tuple[list[int], int]:
    """Divide poly (coeffs low->high) by (x - lam) mod p; (quotient, remainder)."""
    quot = [0] * (len(poly) - 1)
    carry = 0
    for i in range(len(poly) - 1, 0, -1):
        carry = (poly[i] + carry * lam) % p
        quot[i - 1] = carry
    rem = (poly[0] + carry * lam) % p
    return quot, rem


def pi2_all_odd_check(spec: SequenceSpec) -> bool:
    """With every coefficient odd, the state period mod 2 is exactly k + 1."""
    if any(a % 2 == 0 for a in spec.coeffs):
        raise ValueError("requires all coefficients odd")
    return state_period(spec, 2).as_tuple() == (0, spec.k + 1)
