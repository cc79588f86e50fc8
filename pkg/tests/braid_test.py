import pytest


def test_braid_length_generators():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    assert hs.braid_length(G.R1, G.R2) == 4
    assert hs.braid_length(G.R2, G.R3) == 4
    # a reflection braids with itself trivially
    assert hs.braid_length(G.R1, G.R1) == 1


def test_braid_length_cap():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    assert hs.braid_length(G.R1, G.R2, cap=3) is hs.INFINITY


@pytest.mark.parametrize("label", ['S(4,sigmabar4)', 'S(4,sigma1)',
                                   'S(3,sigma10)', 'S(5,sigma10)'])
def test_closed_form_matches_brute_force(label):
    import hypershell as hs
    G = hs.build_group(label)
    pairs = [(1, 2), (2, 3), (3, 1)]
    for i, j in pairs:
        predicted = hs.braid_length_closed_form(G.polar_vector(i),
                                                G.polar_vector(j),
                                                G.H, G.u)
        actual = hs.braid_length(G.generator(i), G.generator(j))
        assert predicted == actual


def test_braid_angle():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    theta = hs.braid_angle(G.polar_vector(1), G.polar_vector(2), G.H, G.u)
    assert theta == hs.Fraction(1, 4)


@pytest.mark.parametrize("label,expected", [
                         ('S(4,sigmabar4)', '4,4,4;3,3,3;7'),
                         ('S(4,sigma1)', '6,6,6;4,4,4;8'),
                         ('S(3,sigma10)', '5,5,5;3,3,3;5'),
                         ])
def test_group_type(label, expected):
    import hypershell as hs
    G = hs.build_group(label)
    assert str(hs.group_type(G)) == expected


def test_group_type_from_string():
    import hypershell as hs
    gtype = hs.GroupType.from_string('3,3,4;5,5,5;5')
    assert gtype.c == 4
    assert gtype.g == 5
    assert str(gtype) == '3,3,4;5,5,5;5'
    assert hs.GroupType.from_string(str(gtype)) == gtype


def test_control_word_pairs():
    import hypershell as hs
    G = hs.build_group('S(4,sigma1)')
    pairs = hs.control_word_pairs(G)
    assert [(wa, wb) for wa, wb, _, _ in pairs] == list(hs.CONTROL_PAIRS)
    wa, wb, A, B = pairs[3]
    assert B == G.evaluate('23-2')


def test_expected_central_angle():
    import hypershell as hs
    assert hs.expected_central_angle(3, 6) == 0
    assert hs.expected_central_angle(4, 4) == 0
    assert hs.expected_central_angle(4, 8) == hs.Fraction(1, 2)
    assert hs.expected_central_angle(6, 3) == 0
    assert hs.expected_central_angle(5, 5) == 1
    with pytest.raises(hs.RelationError):
        hs.expected_central_angle(7, 4)


def test_central_element():
    import hypershell as hs
    G = hs.build_group('S(3,sigma10)')
    C, kind = hs.central_element(G.R1, G.R2, 5, 3, G.H)
    assert hs.central_angle_matches(kind, 5, 3)
    # the central element commutes with both reflections
    assert hs.proj_equal(C @ G.R1, G.R1 @ C)
    assert hs.proj_equal(C @ G.R2, G.R2 @ C)
    with pytest.raises(hs.RelationError):
        hs.central_element(G.R1, G.R2, 4, 3, G.H)
