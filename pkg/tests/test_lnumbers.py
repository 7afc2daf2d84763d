from math import gcd

import pytest

from recurra.lnumbers import (
    LSpec,
    ResidueClass,
    binet_check,
    binet_roots,
    divisibility_check,
    gap_identity_check,
    ideal_check,
    index_addition_check,
    l_term,
    l_terms,
    m_value,
    residue_class,
    square_sum_check,
    triple_gap_check,
)

from oracles import naive_lterms

L_VALUES = (1, 2, 3, 5, 7)


def test_spec_guard():
    with pytest.raises(ValueError):
        LSpec(0)


def test_term_examples():
    assert l_term(LSpec(1), 10) == 55
    assert l_term(LSpec(2), 5) == 29
    for l in (2, 3, 4, 9):
        assert l_term(LSpec(l), 3) == l * l + 1
        assert l_term(LSpec(l), 4) == l * (l * l + 2)
        assert l_term(LSpec(l), 5) == l * l * (l * l + 3) + 1


def test_terms_against_oracle():
    for l in L_VALUES:
        assert l_terms(LSpec(l), 40) == naive_lterms(l, 40)
    assert l_terms(LSpec(3), 6) == [0, 1, 3, 10, 33, 109]


def test_binet_roots_invariants():
    for l in (1, 2, 3, 5, 7):
        roots = binet_roots(LSpec(l))
        assert roots.discriminant == l * l + 4
        assert abs(roots.alpha + roots.beta - l) < 1e-12
        assert abs(roots.alpha * roots.beta + 1) < 1e-12


def test_binet():
    assert binet_check(LSpec(1), 1)
    assert binet_check(LSpec(2), 5)
    assert binet_check(LSpec(3), 20)
    for l in (1, 2, 3, 4, 5):
        for n in range(41):
            assert binet_check(LSpec(l), n)
    with pytest.raises(ValueError):
        binet_check(LSpec(1), 41)


def test_square_sum():
    assert square_sum_check(LSpec(3), 0)  # 0 + 1 = a_1
    spec = LSpec(2)
    assert l_term(spec, 2) ** 2 + l_term(spec, 3) ** 2 == 4 + 25 == l_term(spec, 5)
    assert square_sum_check(spec, 2)
    for l in L_VALUES:
        for n in range(31):
            assert square_sum_check(LSpec(l), n)


def test_divisibility():
    assert l_term(LSpec(1), 3) == 2 and l_term(LSpec(1), 12) == 144
    assert divisibility_check(LSpec(1), 3, 12)
    for l in L_VALUES:
        spec = LSpec(l)
        for n in range(1, 31):
            for d in range(1, n + 1):
                if n % d == 0:
                    assert divisibility_check(spec, d, n)
    with pytest.raises(ValueError):
        divisibility_check(LSpec(1), 5, 12)


def test_index_addition():
    for l in L_VALUES:
        spec = LSpec(l)
        assert index_addition_check(spec, 1, 7)
        for m in range(1, 31, 3):
            for n in range(0, 31, 4):
                assert index_addition_check(spec, m, n)


def test_m_values():
    assert [m_value(LSpec(1), k) for k in (2, 3, 4)] == [3, 7, 47]
    assert m_value(LSpec(2), 2) == 6
    for l in (2, 3, 7):
        assert m_value(LSpec(l), 2) == l * l + 2
        for k in range(3, 10):
            prev = m_value(LSpec(l), k - 1)
            assert m_value(LSpec(l), k) == prev * prev - 2
    with pytest.raises(ValueError):
        m_value(LSpec(1), 1)


def test_gap_identity():
    # k = 2: a_n + a_{n+4} = (l^2+2) a_{n+2}
    a = l_terms(LSpec(2), 6)
    assert a[1] + a[5] == 1 + 29 == 6 * a[3]
    assert gap_identity_check(LSpec(2), 1, 2)
    # Fibonacci at k = 4: 1 + 1597 = 47 * 34
    f = l_terms(LSpec(1), 18)
    assert f[1] + f[17] == 1598 == 47 * f[9]
    assert gap_identity_check(LSpec(1), 1, 4)
    for l in L_VALUES:
        for k in range(2, 6):
            for n in range(0, 31, 2):
                assert gap_identity_check(LSpec(l), n, k)


def test_triple_gap():
    f = l_terms(LSpec(1), 14)
    assert f[1] + f[13] == 234 == 3 * 6 * f[7]
    assert triple_gap_check(LSpec(1), 1, 2)
    for l in L_VALUES:
        for k in range(2, 5):
            for n in range(11):
                assert triple_gap_check(LSpec(l), n, k)


def test_residue_class_examples():
    assert l_term(LSpec(3), 4) == 33
    assert residue_class(LSpec(3), 4) is ResidueClass.DIVISIBLE_BY_L
    assert l_term(LSpec(3), 5) == 109 and 109 % 9 == 1
    assert residue_class(LSpec(3), 5) is ResidueClass.ONE_MOD_L_SQUARED
    assert residue_class(LSpec(3), 0) is ResidueClass.DIVISIBLE_BY_L
    with pytest.raises(ValueError):
        residue_class(LSpec(1), 3)


def test_residue_class_biconditional():
    # both directions: the classes are mutually exclusive, so parity
    # matching the class pins each congruence to exactly its parity
    for l in (2, 3, 5, 7):
        spec = LSpec(l)
        for n in range(61):
            expected = (ResidueClass.DIVISIBLE_BY_L if n % 2 == 0
                        else ResidueClass.ONE_MOD_L_SQUARED)
            assert residue_class(spec, n) is expected
            value = l_term(spec, n)
            assert (value % l == 0) == (n % 2 == 0)
            assert (value % (l * l) == 1) == (n % 2 == 1)


def test_ideal_check():
    assert ideal_check(LSpec(3), 6)
    assert ideal_check(LSpec(2), 5)
    assert ideal_check(LSpec(5), 1)  # gcd(a_2) = a_2 = l
    a = l_terms(LSpec(3), 13)
    assert gcd(a[2], a[4], a[6], a[8], a[10], a[12]) == 3


def test_even_index_multiples_closed_under_ring_ops():
    # integer combinations of even-index terms: differences and products
    # stay inside l*Z, and integer rescaling stays inside too
    import random
    rng = random.Random(211)
    for l in (2, 3, 5, 7):
        a = l_terms(LSpec(l), 25)
        for _ in range(40):
            alpha, beta = rng.randint(-9, 9), rng.randint(-9, 9)
            n, m = rng.randint(0, 12), rng.randint(0, 12)
            x, y = alpha * a[2 * n], beta * a[2 * m]
            assert (x - y) % l == 0
            assert (x * y) % l == 0
            assert (rng.randint(-9, 9) * x) % l == 0


def test_m_tower_two_mod_l_squared():
    for l in (2, 3, 5, 7, 10):
        for k in range(2, 13):
            assert m_value(LSpec(l), k) % (l * l) == 2


def test_pell_and_fibonacci_specials():
    assert l_terms(LSpec(2), 8) == [0, 1, 2, 5, 12, 29, 70, 169]
    assert l_terms(LSpec(1), 13) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
