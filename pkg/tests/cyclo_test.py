import random

import pytest


def _sqrt2():
    import hypershell as hs
    return hs.root_of_unity(8, 1) + hs.root_of_unity(8, -1)


def test_root_of_unity_relations():
    import hypershell as hs
    z3 = hs.root_of_unity(3)
    assert z3 + z3 ** 2 == -1
    assert z3 ** 3 == 1
    assert hs.root_of_unity(5, 7) == hs.root_of_unity(5, 2)
    assert hs.root_of_unity(1) == 1


def test_equality_across_conductors():
    import hypershell as hs
    z3 = hs.root_of_unity(3)
    assert z3 == hs.root_of_unity(6, 2)
    assert z3 == z3.lift(12)
    assert hash(z3) == hash(hs.root_of_unity(6, 2))
    assert hs.CycNum.rational(hs.Fraction(1, 3), 7) == hs.Fraction(1, 3)
    assert hash(hs.CycNum.rational(5, 9)) == hash(5)


def test_canonical_form_is_reduced():
    import hypershell as hs
    x = hs.CycNum(5, (1, 0, 0, 0, 0))  # zeta^4
    assert len(x.rep) <= x.degree
    # 1 + z + z^2 + z^3 + z^4 = 0 in Q(zeta_5)
    total = sum((hs.root_of_unity(5, k) for k in range(5)),
                hs.CycNum.rational(0, 5))
    assert total.is_zero()


def test_square_roots():
    import hypershell as hs
    sqrt2 = _sqrt2()
    assert sqrt2 * sqrt2 == 2
    assert sqrt2.is_real()
    assert not sqrt2.is_rational()
    sqrt5 = 2 * (hs.root_of_unity(5, 1) + hs.root_of_unity(5, -1)) + 1
    assert sqrt5 ** 2 == 5


def test_inverse_and_division():
    import hypershell as hs
    x = 1 + hs.root_of_unity(5)
    assert x * x.inverse() == 1
    assert (3 / x) * x == 3
    with pytest.raises(hs.CycloError):
        hs.CycNum.rational(0, 5).inverse()


def test_galois_and_conjugation():
    import hypershell as hs
    z7 = hs.root_of_unity(7)
    assert z7.conj() == hs.root_of_unity(7, 6)
    assert z7.galois(3) == hs.root_of_unity(7, 3)
    assert z7.abs2() == 1
    with pytest.raises(hs.CycloError):
        hs.root_of_unity(12).galois(3)
    assert hs.galois_group(12) == [1, 5, 7, 11]
    assert len(hs.galois_orbit(_sqrt2())) == 2
    assert hs.field_degree(12) == 4


def test_lift_requires_divisibility():
    import hypershell as hs
    with pytest.raises(hs.CycloError):
        hs.root_of_unity(4).lift(6)


def test_real_sign_separates_close_values():
    import hypershell as hs
    sqrt2 = _sqrt2()
    assert hs.real_sign(sqrt2 - hs.Fraction(141, 100)) == 1
    assert hs.real_sign(sqrt2 - hs.Fraction(142, 100)) == -1
    assert hs.real_sign(sqrt2 * sqrt2 - 2) == 0
    assert hs.real_sign(hs.Fraction(-2, 3)) == -1
    # 1.4142135623730950488...
    close = sqrt2 - hs.Fraction(14142135623730950488, 10 ** 19)
    assert hs.real_sign(close) == 1


def test_real_sign_rejects_complex_values():
    import hypershell as hs
    with pytest.raises(hs.CycloError):
        hs.real_sign(hs.root_of_unity(4))


def test_real_interval_encloses_value():
    import hypershell as hs
    interval = hs.real_interval(_sqrt2(), 64)
    assert interval.sign() == 1
    assert interval.width < hs.Fraction(1, 10 ** 15)
    assert abs(float(interval) - 2 ** 0.5) < 1e-12


def test_min_poly():
    import hypershell as hs
    assert hs.min_poly(_sqrt2()).all_coeffs() == [1, 0, -2]
    cos7 = hs.root_of_unity(7, 1) + hs.root_of_unity(7, -1)
    # 2cos(2pi/7) is a root of x^3 + x^2 - 2x - 1
    assert hs.min_poly(cos7).all_coeffs() == [1, 1, -2, -1]
    assert hs.min_poly(hs.CycNum.rational(3, 7)).all_coeffs() == [1, -3]


def test_unit_root_angle():
    import hypershell as hs
    assert hs.unit_root_angle(hs.root_of_unity(5, 2)) == hs.Fraction(2, 5)
    assert hs.unit_root_angle(-1) == hs.Fraction(1, 2)
    # -zeta_5 is a primitive 10th root of unity
    assert hs.unit_root_angle(-hs.root_of_unity(5)) == hs.Fraction(7, 10)
    assert hs.unit_root_angle(2) is None
    assert hs.unit_root(hs.Fraction(3, 7)) == hs.root_of_unity(7, 3)


def test_from_terms_matches_explicit_sum():
    import hypershell as hs
    x = hs.CycNum.from_terms([("1/2", 1, 0), (1, 3, 1), (-2, 4, 1)])
    expected = hs.Fraction(1, 2) + hs.root_of_unity(3) \
                                        - 2 * hs.root_of_unity(4)
    assert x == expected
    assert x.N == 12


def test_to_json():
    import hypershell as hs
    out = _sqrt2().to_json()
    assert out['conductor'] == 8
    assert len(out['coefficients']) == 4
    assert abs(out['approx'][0] - 2 ** 0.5) < 1e-12


def test_ring_axioms_random():
    import hypershell as hs
    rng = random.Random(1729)

    def rand(N):
        return sum((rng.randint(-3, 3) * hs.root_of_unity(N, k)
                    for k in range(N)), hs.CycNum.rational(0, N))

    for N in (5, 8, 12, 15):
        for _ in range(5):
            a, b, c = rand(N), rand(N), rand(N)
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
            assert a - a == 0
            assert (a * b).conj() == a.conj() * b.conj()
            if not a.is_zero():
                assert a * a.inverse() == 1


def test_galois_apply():
    import hypershell as hs
    z5 = hs.root_of_unity(5)
    assert hs.galois_apply(z5, 2) == hs.root_of_unity(5, 2)
    assert hs.galois_apply(_sqrt2(), 3) == -_sqrt2()
    assert hs.galois_apply(_sqrt2(), 7) == _sqrt2()
    with pytest.raises(hs.CycloError):
        hs.galois_apply(z5, 5)


def test_numeric():
    import hypershell as hs
    assert complex(hs.numeric(hs.root_of_unity(4))) == pytest.approx(1j)
    assert complex(hs.numeric(_sqrt2())) == pytest.approx(2 ** 0.5)
    assert complex(hs.numeric(hs.Fraction(1, 4))) == pytest.approx(0.25)
