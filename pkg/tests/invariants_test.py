import pytest


@pytest.mark.parametrize("label", ['S(4,sigma1)', 'S(3,sigma10)', 'T(4,E2)',
                                   'Gamma(5,7/10)'])
def test_control_traces(label):
    import hypershell as hs
    result = hs.control_traces(hs.build_group(label))
    assert list(result.traces) == ['12', '23', '31', '1-323', '123', '321']
    assert all(r.is_zero() for r in result.residuals.values())


def _trace_321(hs, label):
    return hs.build_group(label).evaluate('321').trace().abs2()


def test_trace_table():
    import hypershell as hs
    r2, r5, r6, r7 = (hs.sqrt_cyc(d) for d in (2, 5, 6, 7))
    assert _trace_321(hs, 'S(3,sigma1)') == 3 * (11 + 2 * r6)
    assert _trace_321(hs, 'S(4,sigma1)') == 3 * (21 + 4 * r2)
    assert _trace_321(hs, 'S(6,sigma1)') == 3 * (31 + 2 * r6)
    assert _trace_321(hs, 'S(4,sigmabar4)') == 17 + 3 * r7
    assert _trace_321(hs, 'S(3,sigma10)') == 4 * (3 + r5)
    assert _trace_321(hs, 'S(10,sigma10)') == 39 + 16 * r5


def test_sqrt_identity():
    import hypershell as hs
    lam = _trace_321(hs, 'S(5,sigmabar4)')
    root = hs.sqrt_identity(lam)
    assert root ** 2 == 14 * (5 + hs.sqrt_cyc(5))


@pytest.mark.parametrize("label,name,degree", [
                         ('S(3,sigma1)', 'Q(sqrt6)', 2),
                         ('S(4,sigmabar4)', 'Q(sqrt7)', 2),
                         ('S(3,sigmabar4)', 'Q(sqrt21)', 2),
                         ('S(3,sigma10)', 'Q(sqrt5)', 2),
                         ('T(4,E2)', 'Q(sqrt3)', 2),
                         ('Gamma(6,2/3)', 'Q', 1),
                         ])
def test_trace_field(label, name, degree):
    import hypershell as hs
    field = hs.trace_field(hs.build_group(label))
    assert field.name == name
    assert field.degree == degree
    assert field.min_poly.degree() == degree
    assert field.to_json()['name'] == name


def test_trace_field_min_poly():
    import hypershell as hs
    field = hs.trace_field(hs.build_group('S(3,sigma1)'))
    assert field.source == '|tr(321)|^2'
    assert field.sharp
    assert field.min_poly.all_coeffs() == [1, -66, 873]


def test_match_field():
    import hypershell as hs
    assert hs.match_field(hs.sqrt_cyc(7)) == 'Q(sqrt7)'
    assert hs.match_field(3 + hs.sqrt_cyc(21)) == 'Q(sqrt21)'
    assert hs.match_field(hs.CycNum.rational(5)) == 'Q'


@pytest.mark.parametrize("label,na_index", [('S(4,sigmabar4)', 1),
                                            ('S(3,sigmabar4)', 0),
                                            ('S(3,sigma10)', 0),
                                            ('T(4,E2)', 1),
                                            ])
def test_signature_spectrum(label, na_index):
    import hypershell as hs
    spectrum = hs.signature_spectrum(hs.build_group(label))
    assert spectrum.signatures[0] == (1, (2, 0, 1))
    assert spectrum.na_index == na_index
    assert spectrum.arithmetic == (na_index == 0)


def test_signature_spectrum_flag():
    import hypershell as hs
    spectrum = hs.signature_spectrum(hs.build_group('S(4,sigmabar4)'))
    assert spectrum.flag == 'NA(1)'
    assert len(spectrum.signatures) == 2
    # the nontrivial conjugate of a non-arithmetic lattice is indefinite
    n_plus, _, n_minus = spectrum.signatures[1][1]
    assert n_plus > 0 and n_minus > 0
    assert spectrum.to_json()['na_index'] == 1


@pytest.mark.slow
def test_signature_spectrum_high_index():
    import hypershell as hs
    assert hs.signature_spectrum(hs.build_group('S(4,sigma5)')).na_index == 3


def test_parabolic_tau_norm():
    import hypershell as hs
    assert [hs.parabolic_tau_norm(p) for p in (3, 4, 6)] == [3, 2, 1]


def test_cusp_bound_values():
    import hypershell as hs
    r3, r5, r6, r15 = (hs.sqrt_cyc(d) for d in (3, 5, 6, 15))

    bound = hs.cusp_bounds(hs.build_group('S(3,sigma1)'))
    assert bound.verified
    assert bound.index == 6 + 2 * r6
    assert bound.below(11)
    assert not bound.below(10)

    bound = hs.cusp_bounds(hs.build_group('Gamma(6,1/6)'))
    assert bound.index == 2 + r3
    assert bound.below(4)
    assert bound.to_json()['index_approx'] == pytest.approx(3.7320508)

    bound = hs.cusp_bounds(hs.build_group('S(4,sigma5)'))
    assert bound.index == (7 + r5 + 3 * r3 + r15) / 2
    assert bound.below(10)


@pytest.mark.parametrize("label", ['T(4,E2)', 'S(3,sigma10)', 'S(5,sigma1)'])
def test_cusp_bound_preconditions(label):
    import hypershell as hs
    with pytest.raises(hs.PreconditionUnmet):
        hs.cusp_bounds(hs.build_group(label))


def test_vertical_translation():
    import hypershell as hs
    T = hs.vertical_translation(3, hs.named_parameter('sigma1'))
    assert T[0, 0] == 1 and T[2, 2] == 1
    assert T[1, 2] == -T[0, 2].conj()


def test_reflection_volume_bound():
    import hypershell as hs
    bound = hs.RealInterval.from_iv(hs.reflection_volume_bound(10, 1))
    assert bound.sign() == 1
    doubled = hs.RealInterval.from_iv(
                hs.reflection_volume_bound(10, 1, orthogonal_case=False))
    assert doubled.lower == 2 * bound.lower
    assert doubled.upper == 2 * bound.upper
    smallest = hs.RealInterval.from_iv(hs.reflection_volume_bound(7, 1))
    assert smallest.sign() == 1
    for n in (5, 6):
        with pytest.raises(hs.PreconditionUnmet):
            hs.reflection_volume_bound(n, 1)

    chi = hs.RealInterval.from_iv(hs.chi_bound(1))
    assert float(chi.lower) == pytest.approx(0.0379954, rel=1e-5)


def test_minimal_index():
    import hypershell as hs
    F = hs.Fraction
    assert hs.minimal_index(F(2, 9), F(43, 72)) == 16
    assert hs.minimal_index(F(17, 36), F(1, 3)) == 17
    assert hs.minimal_index(F(11, 144), F(17, 32)) == 22


@pytest.mark.parametrize("first,second,d_min", [
                         ('S(3,sigma1)', 'S(6,sigma1)', 16),
                         ('S(4,sigma5)', 'T(4,S2)', 17),
                         # chi ratio 11/144 : 17/32 reduces to 22/153; d_min is its
                         # numerator, which implies the weaker index bound 11
                         ('Gamma(6,1/6)', 'T(4,E2)', 22),
                         ])
def test_screen_index_obstruction(first, second, d_min):
    import hypershell as hs
    verdict = hs.commensurability_screen(first, second)
    assert verdict.kind == 'IndexObstruction'
    assert verdict.d_min == d_min
    assert hs.real_sign(d_min - verdict.d_max) > 0
    assert verdict.to_json()['verdict'] == 'IndexObstruction'


def test_screen_distinguished():
    import hypershell as hs
    verdict = hs.commensurability_screen('S(4,sigmabar4)', 'S(6,sigmabar4)')
    assert verdict.kind == 'Distinguished'
    assert verdict.reasons == ['trace field Q(sqrt7) vs Q(sqrt21)']

    verdict = hs.commensurability_screen('S(3,sigmabar4)', 'S(4,sigmabar4)')
    assert verdict.kind == 'Distinguished'
    assert len(verdict.reasons) == 3


def test_same_trace_field():
    import hypershell as hs
    f1 = hs.trace_field(hs.build_group('Gamma(6,1/6)'))
    f2 = hs.trace_field(hs.build_group('T(4,E2)'))
    assert f1.name == f2.name == 'Q(sqrt3)'
    assert hs.same_trace_field(f1, f2)
    f3 = hs.trace_field(hs.build_group('S(3,sigmabar4)'))
    f4 = hs.trace_field(hs.build_group('S(4,sigmabar4)'))
    assert not hs.same_trace_field(f3, f4)
    assert hs.same_trace_field(f3, f3)


def test_screen_uses_computed_fields():
    import copy
    import hypershell as hs
    # the catalog label is ignored, the groups still differ in trace field
    wrong = copy.copy(hs.parse_label('S(6,sigmabar4)'))
    wrong.field = 'Q(sqrt7)'
    verdict = hs.commensurability_screen('S(4,sigmabar4)', wrong)
    assert verdict.kind == 'Distinguished'
    assert verdict.reasons == ['trace field Q(sqrt7) vs Q(sqrt21)']


def test_screen_trivial_and_inconclusive():
    import hypershell as hs
    verdict = hs.commensurability_screen('S(4,sigma1)', 'S(4,sigma1)')
    assert verdict.kind == 'Commensurable'
    # cocompact and arithmetic over the same field
    verdict = hs.commensurability_screen('S(3,sigma10)', 'S(4,sigma10)')
    assert verdict.kind == 'Inconclusive'
    with pytest.raises(hs.CatalogError):
        hs.commensurability_screen('S(7,sigma10)', 'S(3,sigma10)')


def test_relation_exponent():
    import hypershell as hs
    from hypershell.core.invariants import INFINITE
    assert hs.relation_exponent('4*p/(p-4)', {'p': 8}) == 8
    assert hs.relation_exponent('4*p/(p-4)', {'p': 4}) is INFINITE
    assert hs.relation_exponent('10*p/(3*p-10)', {'p': 3}) == -30
    with pytest.raises(hs.RelationError):
        hs.relation_exponent('p/3', {'p': 4})


def test_verify_relations_sigmabar4():
    import hypershell as hs
    checks = hs.verify_relations(hs.build_group('S(4,sigmabar4)'))
    statuses = {c.relation: c.status for c in checks}
    assert 'fail' not in statuses.values()
    assert statuses['(1J)^(7)'] == 'pass'
    assert statuses['br4(1,2)'] == 'pass'
    assert statuses['(12)^(4*p/(p-4))'] == 'infinite'


def test_verify_relations_vacuous_and_failing():
    import hypershell as hs
    G = hs.build_group('S(3,sigma10)')
    checks = hs.verify_relations(G)
    assert 'fail' not in [c.status for c in checks]
    assert 'vacuous' in [c.status for c in checks]

    wrong = hs.verify_relations(G, [{'braid': [4, '1', '2']},
                                    {'order': '1', 'exp': '4'}])
    assert [c.status for c in wrong] == ['fail', 'fail']


def test_check_failure_cycle_reflection():
    import hypershell as hs
    entry = hs.parse_label('T(10,H2)')
    G = entry.build()
    found = hs.check_failure(G, entry.failure)
    assert found.kind == 'cycle_reflection'
    assert found.reproduced

    kind, angle = hs.reflection_angle(G, '((123)^2-212)^-3')
    assert kind.is_reflection
    assert angle in (hs.Fraction(1, 5), hs.Fraction(9, 5))


def test_check_failure_cycle_fixed_point():
    import hypershell as hs
    entry = hs.parse_label('T(12,E2)')
    assert entry.failure.word == '(12-13)^4'
    G = entry.build()
    found = hs.check_failure(G, entry.failure)
    assert found.kind == 'cycle_fixed_point'
    assert found.reproduced
    assert found.detail == '(12-13)^4 fixes p0: True, power of Q: False'


def test_check_failure_needs_realization():
    import hypershell as hs
    entry = hs.parse_label('Gamma(5,1/2)')
    with pytest.raises(hs.PreconditionUnmet):
        hs.check_failure(entry.build(), entry.failure)


@pytest.mark.parametrize("index", [0, 1])
def test_isomorphisms(index):
    import hypershell as hs
    check = hs.check_isomorphism(hs.ISOMORPHISMS[index], p=4)
    assert check.matches
    assert check.params.rho2 == check.expected.rho2
