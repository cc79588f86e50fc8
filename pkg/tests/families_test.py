import pytest


def test_catalog_filters():
    import hypershell as hs
    assert [e.p for e in hs.catalog('sporadic', 'sigma10')] == [3, 4, 5, 10]
    assert [e.p for e in hs.catalog('sporadic', 'sigma4bar')] == [3, 4, 5, 6,
                                                                  8, 12]
    assert all(e.family == 'mostow' for e in hs.catalog('mostow'))
    with pytest.raises(hs.CatalogError):
        hs.catalog('hyperbolic')


def test_catalog_annotations():
    import hypershell as hs
    entry = hs.parse_label('S(4,sigmabar4)')
    assert isinstance(entry, hs.CatalogEntry)
    assert entry.field == 'Q(sqrt7)'
    assert entry.flags == 'NC, NA(1)'
    assert entry.chi == hs.Fraction(25, 224)
    assert entry.type_string == '4,4,4;3,3,3;7'
    assert [(r.base, r.count) for r in entry.combinatorics] == [(4, 7), (3, 7)]

    entry = hs.parse_label('T(5,Hbar2)')
    assert entry.failure.kind == 'fixed_point_on_ridge'
    assert entry.failure.word == '123-212-3-2-1'
    assert entry.alternate == 'Gamma(5,7/10)'

    entry = hs.parse_label('T(7,Hbar1)')
    assert entry.failure.angle == hs.Fraction(3, 7)


def test_mostow_catalog_rows():
    import hypershell as hs
    entry = hs.parse_label('Gamma(5,7/10)')
    assert entry.order_P == 4
    assert entry.type_string == '3,3,3;2,2,2;4'
    # the k-gon row becomes a commuting pair and is dropped
    assert [(r.base, r.count) for r in entry.combinatorics] == [(3, 4)]

    entry = hs.parse_label('Gamma(3,0)')
    assert [(r.base, r.count) for r in entry.combinatorics] == [(3, 24),
                                                                (12, 2)]


def test_labels():
    import hypershell as hs
    assert hs.parse_label('s( 4 , Sigma1 )').label == 'S(4,sigma1)'
    assert hs.parse_label('T(5,H2bar)').label == 'T(5,Hbar2)'
    assert hs.parse_label('G(7,9/14)').label == 'Gamma(7,9/14)'
    # not in the catalog, still a valid spec
    spec = hs.parse_label('S(7,sigma10)')
    assert not isinstance(spec, hs.CatalogEntry)
    assert spec.label == 'S(7,sigma10)'


@pytest.mark.parametrize("label", ['X(4,sigma1)', 'S(4,sigma99)',
                                   'S(4,S2)', 'T(4,sigma1)', 'Gamma(4,x)',
                                   'S(1,sigma1)'])
def test_label_errors(label):
    import hypershell as hs
    with pytest.raises(hs.CatalogError):
        hs.parse_label(label)


def test_canonical_name():
    import hypershell as hs
    assert hs.canonical_name('sigma4bar') == 'sigmabar4'
    assert hs.canonical_name('SIGMA10') == 'sigma10'
    assert hs.canonical_name('H2bar') == 'Hbar2'


def test_named_parameters():
    import hypershell as hs
    phi = hs.named_parameter('sigma10')
    assert phi ** 2 == phi + 1
    assert hs.named_parameter('sigmabar4') == hs.named_parameter('sigma4').conj()
    sigma1 = hs.named_parameter('sigma1')
    assert sigma1 + 1 == hs.sqrt_cyc(2) * hs.root_of_unity(4, 1)

    rho, sigma, tau = hs.named_parameter('E2')
    assert sigma.abs2() == 1
    record = hs.thompson_parameter('E2')
    assert record.abcd == (3, 4, 4, 4)
    assert record.order_123 == 6
    with pytest.raises(hs.CatalogError):
        hs.thompson_parameter('sigma1')


@pytest.mark.parametrize("d", [2, 3, 5, 6, 7, 12, 21])
def test_sqrt_cyc(d):
    import hypershell as hs
    root = hs.sqrt_cyc(d)
    assert root ** 2 == d
    assert hs.real_sign(root) > 0


def test_sqrt_cyc_rejects_nonpositive():
    import hypershell as hs
    with pytest.raises(hs.CatalogError):
        hs.sqrt_cyc(0)


def test_field_generators():
    import hypershell as hs
    assert hs.field_generators('Q(sqrt21)') == [hs.sqrt_cyc(21)]
    assert 'Q(sqrt5)' in hs.field_names()
    with pytest.raises(hs.CatalogError):
        hs.field_generators('Q(sqrt11)')


def test_sporadic_construction():
    import hypershell as hs
    G = hs.sporadic_group(4, hs.named_parameter('sigma1'))
    assert G.P.trace() == hs.named_parameter('sigma1')
    assert G.symmetric
    assert G.R2 == G.J @ G.R1 @ G.J.inverse()
    for R in G.generators:
        assert G.H.preserved_by(R)
        assert hs.proj_order(R) == 4


def test_thompson_construction():
    import hypershell as hs
    G = hs.build_group('T(4,E2)')
    assert not G.symmetric
    assert G.Q == G.R1 @ G.R2 @ G.R3
    assert hs.proj_order(G.Q) == 6
    assert G.P is None
    with pytest.raises(hs.RelationError):
        G.evaluate("1J")


def test_mostow_group():
    import hypershell as hs
    G = hs.mostow_group(5, hs.Fraction(7, 10))
    assert hs.proj_order(G.P, 100) == 4
    assert G.label == 'Gamma(5,7/10)'
    assert hs.on_mostow_curve(hs.mostow_tau(5, hs.Fraction(7, 10)))
    assert not hs.on_mostow_curve(hs.named_parameter('sigma10'))


def test_sauter_curve():
    import hypershell as hs
    # phi = 0 gives tau = 2
    assert hs.on_sauter_curve(2)
    assert not hs.on_sauter_curve(hs.named_parameter('sigma1'))


def test_not_hyperbolic():
    import hypershell as hs
    with pytest.raises(hs.NotHyperbolic):
        hs.sporadic_group(4, 0)


def test_triangle_params_recover_parameter():
    import hypershell as hs
    G = hs.build_group('T(4,E2)')
    found = hs.triangle_params(G.R1, G.R2, G.R3, G.H, G.u)
    expected = hs.params_of(hs.named_parameter('E2'))
    assert found.rho2 == expected.rho2
    assert found.sigma2 == expected.sigma2
    assert found.tau2 == expected.tau2


def test_dm_exponents():
    import hypershell as hs
    F = hs.Fraction
    mu = hs.dm_exponents(4, F(1, 4))
    assert mu == (F(1, 4), F(1, 4), F(1, 4), F(1, 2), F(3, 4))
    assert sum(mu) == 2
    assert sum(hs.dm_exponents(7, F(9, 14))) == 2


def test_e2_symmetry():
    import hypershell as hs
    G = hs.build_group('T(4,E2)')
    S = hs.e2_symmetry(G)
    assert G.H.preserved_by(S)
    assert hs.proj_order(S) == 3


def test_thompson_group_from_parameters():
    import hypershell as hs
    G = hs.thompson_group(4, hs.named_parameter('E2'))
    built = hs.build_group('T(4,E2)')
    assert hs.proj_equal(G.R1, built.R1)
    assert hs.proj_equal(G.Q, built.Q)
    with pytest.raises(hs.NotHyperbolic):
        hs.thompson_group(4, (0, 0, 0))
