import pytest


def test_make_pyramid():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    pyr = hs.make_pyramid('1', '2', '3', G)
    assert pyr.n == 4
    assert pyr.base.label == '1'
    assert pyr.pairing == 'PairByA'
    assert pyr.pairing_map.label == '1'
    # consecutive sides multiply to the same element
    bc = pyr.side(0).matrix @ pyr.side(1).matrix
    for k in range(pyr.n):
        assert hs.proj_equal(pyr.side(k).matrix @ pyr.side(k + 1).matrix, bc)


def test_cyclic_key():
    import hypershell as hs
    assert hs.cyclic_key([3, 1, 2]) == (1, 2, 3)
    assert hs.cyclic_key([1, 3, 2]) == (1, 2, 3)
    assert hs.cyclic_key([2, 1, 3, 4]) != hs.cyclic_key([1, 2, 3, 4])
    assert hs.cyclic_key([]) == ()


def test_pyramid_key_is_dihedral():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    pyr = hs.make_pyramid('1', '2', '3', G)
    s = pyr.sides
    rotated = hs.Pyramid(pyr.base, s[1:] + s[:1], pyr.pairing)
    reversed_ = hs.Pyramid(pyr.base, s[::-1], pyr.pairing)
    assert rotated.key == pyr.key
    assert reversed_.key == pyr.key
    # same side set in a different cyclic order is another pyramid
    shuffled = hs.Pyramid(pyr.base, (s[0], s[2], s[1], s[3]), pyr.pairing)
    assert shuffled.key != pyr.key


def test_make_pyramid_degenerate():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    with pytest.raises(hs.HypothesisFailure) as info:
        hs.make_pyramid('1', '1', '2', G)
    assert info.value.reason == 'degenerate triangle'


def test_shift_for_ridge():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    pyr = hs.make_pyramid('1', '2', '3', G)
    a, b, c = hs.shift_for_ridge(pyr)
    assert (a.label, b.label, c.label) == ('3', '1', '2')


def test_partner_flips_pairing():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    pyr = hs.make_pyramid('1', '2', '3', G)
    partner = pyr.partner()
    assert partner.pairing == 'PairByAInverse'
    assert partner.base == pyr.base
    assert partner.partner() == pyr


def test_conjugate_pyramid_by_P():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    pyr = hs.make_pyramid('1', '2', '3', G)
    P = hs.Word.from_label(G, 'P')
    image = hs.conjugate_pyramid(pyr, P, relabel=hs.conjugation_by_P)
    assert image.base.label == '12-1'
    assert image.pairing == pyr.pairing
    assert hs.Word.from_label(G, '12-1') == image.base


def test_conjugation_by_P_labels():
    import hypershell as hs
    w = hs.parse_word('23-2')
    assert hs.word_label(hs.conjugation_by_P(w)) == '131-3-1'
    assert hs.conjugation_by_P_inverse(hs.conjugation_by_P(w)) == w


def test_word_table_keeps_shortest_label():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    table = hs.WordTable()
    long_word = hs.Word.from_label(G, 'J1-J')
    known = table.canon(long_word)
    table.canon(hs.Word.from_label(G, '2'))
    assert known.label == '2'
    assert len(table) == 1


def test_shell_sigmabar4():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    shell = hs.build_shell(G)
    classes = sorted((c.n, c.count) for c in shell.orbit_classes())
    assert classes == [(3, 7), (4, 7)]
    assert '1;2,3' in shell
    assert shell.find('1;1,2') is None

    report = hs.ridge_report(shell)
    assert report.closed
    assert set(report.by_incidence) == {2}


def test_shell_is_invariant_under_center():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    shell = hs.build_shell(G)
    P = shell.center_word()
    for pyr in shell:
        image = hs.conjugate_pyramid(pyr, P)
        assert image in shell
        assert pyr.partner() in shell


def test_shell_to_json():
    import hypershell as hs
    shell = hs.build_shell(hs.build_group('S(3,sigma10)'))
    out = shell.to_json()
    assert out['group'] == 'S(3,sigma10)'
    assert sorted((c['n'], c['count']) for c in out['classes']) == [(3, 5),
                                                                    (5, 5)]
    assert out['ridges']['closed']


def test_iteration_cap():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    with pytest.raises(hs.HypothesisFailure) as info:
        hs.build_shell(G, iteration_cap=5)
    assert info.value.reason == 'iteration cap'


@pytest.mark.slow
@pytest.mark.parametrize("label", ['S(4,sigma1)', 'T(4,S2)', 'T(4,E2)',
                                   'Gamma(5,7/10)'])
def test_shell_matches_catalog(label):
    import hypershell as hs
    entry = hs.parse_label(label)
    shell = hs.build_shell(entry.build())
    expected = sorted((row.base, row.count) for row in entry.combinatorics)
    assert sorted((c.n, c.count) for c in shell.orbit_classes()) == expected
    assert shell.ridge_report().closed


@pytest.mark.slow
def test_shell_fixed_point_on_ridge():
    import hypershell as hs
    entry = hs.parse_label('T(5,Hbar2)')
    G = entry.build()
    try:
        shell = hs.build_shell(G)
    except hs.HypothesisFailure:
        shell = None
    found = hs.check_failure(G, entry.failure, shell=shell)
    assert found.kind == 'fixed_point_on_ridge'
    assert found.reproduced


def test_selection_rule():
    import hypershell as hs
    from hypershell.core.Shell import (selection_rule, PAIR_BY_A,
                                       PAIR_BY_A_INVERSE, REJECT)
    G = hs.build_group('S(4,sigmabar4)')
    assert selection_rule(G.R1, G.R2, G.R3, G.Q) == PAIR_BY_A
    assert selection_rule(G.R3, G.R1, G.R2, G.Q) == PAIR_BY_A_INVERSE
    assert selection_rule(G.R1, G.R1, G.R1, G.Q) == REJECT
