import os

import pytest


def test_polar_vector():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    assert hs.polar_vector(G.R1).proportional(G.polar_vector(1))
    assert hs.polar_vector(G.R3).proportional(G.polar_vector(3))
    with pytest.raises(hs.EigenvectorError):
        hs.polar_vector(hs.Mat3.identity(G.N))


def test_realize_seed_pyramid():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    rp = hs.realize(hs.make_pyramid('1', '2', '3', G), G)
    assert rp.top == 'IdealApex'
    assert rp.top_status == 'ideal'
    assert len(rp.bottom) == 4
    # p_12 and p_23 lie on the boundary
    assert len(hs.ideal_vertices([rp])) >= 2
    assert rp.bottom[0].location == 'Ideal'


def test_realize_shell_sigmabar4():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    realization = hs.realize_shell(hs.build_shell(G))
    assert realization.all_embedded
    assert sorted((n, count, top) for n, count, top, _ in realization.rows()) \
        == [(3, 7, 'apex'), (4, 7, 'ideal')]
    assert not hs.is_cocompact(G, realization)

    out = realization.to_json()
    assert out['embedded']
    assert out['ideal_vertices'] >= 1


def test_realize_shell_cocompact():
    import hypershell as hs
    G = hs.build_group('S(3,sigma10)')
    realization = hs.realize_shell(hs.build_shell(G))
    assert realization.all_embedded
    assert realization.ideal_vertices == []
    assert hs.is_cocompact(G, realization)
    assert {top for _, _, top, _ in realization.rows()} == {'apex'}


def test_bottom_polygon_statuses():
    import hypershell as hs
    G = hs.build_group('S(3,sigma10)')
    rp = hs.realize(hs.make_pyramid('1', '2', '3', G), G)
    assert hs.bottom_polygon_embedded(rp) == hs.EMBEDDED
    assert hs.bottom_polygon_embedded(rp, precision=128) == hs.EMBEDDED


@pytest.mark.slow
@pytest.mark.parametrize("label", ['S(4,sigma1)', 'T(4,E2)'])
def test_bottom_polygons_embedded(label):
    import hypershell as hs
    G = hs.build_group(label)
    realization = hs.realize_shell(hs.build_shell(G))
    assert realization.pyramids
    for rp in realization.pyramids:
        assert hs.bottom_polygon_embedded(rp) == hs.EMBEDDED
    assert realization.all_embedded


def test_write_svgs(tmp_path):
    import hypershell as hs
    G = hs.build_group('S(3,sigma10)')
    realization = hs.realize_shell(hs.build_shell(G))
    paths = realization.write_svgs(str(tmp_path / 'svg'))
    assert len(paths) == len(realization.pyramids)
    for path in paths:
        assert os.path.exists(path)
        with open(path) as f:
            assert '<svg' in f.read()


def test_stabilizer_order():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    assert hs.stabilizer_order([G.R1]) == 4
    assert hs.stabilizer_order([G.R1, G.R2], cap=50) is hs.ExceedsCap
    with pytest.raises(hs.PreconditionUnmet):
        hs.stabilizer_order([G.R2], point=G.polar_vector(1))


def test_vertex_stabilizers_sigma10():
    import hypershell as hs
    entry = hs.parse_label('S(3,sigma10)')
    checks = hs.vertex_stabilizers(entry.build(), entry.stabilizers)
    assert [c.order for c in checks] == [360, 24, 9]
    assert all(c.order == c.expected for c in checks)


def test_vertex_stabilizers_cusp():
    import hypershell as hs
    entry = hs.parse_label('S(4,sigmabar4)')
    checks = hs.vertex_stabilizers(entry.build(), entry.stabilizers)
    assert [c.order for c in checks] == ['cusp', 96]


def test_fixed_point():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    p0 = hs.fixed_point(G)
    assert G.H.norm_sign(p0) < 0
    assert (G.P @ p0).proportional(p0)


@pytest.mark.slow
@pytest.mark.parametrize("label", ['Gamma(5,1/2)', 'Gamma(7,3/14)',
                                   'Gamma(9,1/18)'])
def test_mostow_not_embedded(label):
    import hypershell as hs
    entry = hs.parse_label(label)
    G = entry.build()
    realization = hs.realize_shell(hs.build_shell(G))
    assert not realization.all_embedded
    found = hs.check_failure(G, entry.failure, realization=realization)
    assert found.reproduced


def test_fixed_point_incidences():
    import hypershell as hs
    G = hs.build_group('S(3,sigma10)')
    shell = hs.build_shell(G)
    labels = hs.fixed_point_incidences(shell)
    assert labels == sorted(labels)
    assert all(label in shell for label in labels)
