import pytest


def _boost():
    import hypershell as hs
    F = hs.Fraction
    return hs.Mat3([[F(5, 3), 0, F(4, 3)],
                    [0, 1, 0],
                    [F(4, 3), 0, F(5, 3)]])


def _lorentz_form():
    import hypershell as hs
    return hs.HermForm(hs.Mat3([[1, 0, 0], [0, 1, 0], [0, 0, -1]]))


def test_matrix_arithmetic():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    A = G.R1 @ G.R2
    assert A @ A.inverse() == hs.Mat3.identity(G.N)
    assert (A ** -2) @ (A ** 2) == hs.Mat3.identity(G.N)
    assert A.det() == 1
    assert (G.R1 * 2).det() == 8
    assert A[0, 0] == (G.R1 @ G.R2).data[0, 0]
    assert hs.Mat3.scalar(3).is_scalar()
    assert hs.Mat3.scalar(3).rank() == 3


def test_singular_inverse_raises():
    import hypershell as hs
    M = hs.Mat3([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    assert M.rank() == 2
    with pytest.raises(hs.HermitianError):
        M.inverse()


def test_generators_preserve_form():
    import hypershell as hs
    for label in ('S(4,sigma1)', 'T(4,E2)', 'Gamma(5,7/10)'):
        G = hs.build_group(label)
        for R in G.generators:
            assert G.H.preserved_by(R)
        assert G.H.signature() == (2, 0, 1)


def test_signature_of_diagonal_forms():
    import hypershell as hs
    assert _lorentz_form().signature() == (2, 0, 1)
    degenerate = hs.HermForm(hs.Mat3([[1, 0, 0], [0, 0, 0], [0, 0, -1]]))
    assert degenerate.signature() == (1, 1, 1)
    definite = hs.HermForm(hs.Mat3([[2, 1, 0], [1, 2, 0], [0, 0, 5]]))
    assert definite.signature() == (3, 0, 0)
    assert hs.signature(definite) == hs.signature(definite.H) == (3, 0, 0)


def test_non_hermitian_matrix_rejected():
    import hypershell as hs
    i = hs.root_of_unity(4)
    with pytest.raises(hs.HermitianError):
        hs.HermForm(hs.Mat3([[1, i, 0], [i, 1, 0], [0, 0, 1]]))


def test_box_product_is_orthogonal():
    import hypershell as hs
    G = hs.build_group('S(4,sigma1)')
    e1, e2, e3 = (G.polar_vector(i) for i in (1, 2, 3))
    for v, w in ((e1, e2), (e2, e3), (e1, e2 + e3)):
        x = G.H.box(v, w)
        assert G.H.inner(x, v).is_zero()
        assert G.H.inner(x, w).is_zero()
    with pytest.raises(hs.HermitianError):
        G.H.box(e1, e1 * 3)


def test_reflection_classification():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    kind = hs.classify(G.R1, G.H)
    assert kind.tag == hs.IsometryType.REFLECTION_LINE
    assert kind.is_reflection
    # rotation by 2pi/p
    assert kind.angle == hs.Fraction(1, 2)
    assert kind.vector.proportional(G.polar_vector(1))
    assert hs.proj_order(G.R1) == 4


def test_parabolic_and_scalar_classification():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    # br(1,2) = 4 and p = 4, so R1R2 is parabolic
    A = G.R1 @ G.R2
    assert hs.classify(A, G.H).tag == hs.IsometryType.PARABOLIC
    assert hs.proj_order(A, 200) is hs.ExceedsCap
    assert hs.classify(hs.Mat3.identity(G.N), G.H) == 'Scalar'
    assert hs.proj_order(hs.Mat3.identity(G.N)) == 1


def test_loxodromic_classification():
    import hypershell as hs
    B = _boost()
    H = _lorentz_form()
    assert H.preserved_by(B)
    assert hs.classify(B, H).tag == hs.IsometryType.LOXODROMIC
    assert hs.proj_order(B, 50) is hs.ExceedsCap


def test_center_relation():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    assert G.P ** 3 == G.Q
    assert hs.proj_order(G.P) == 7


def test_proj_equal_and_key():
    import hypershell as hs
    G = hs.build_group('S(4,sigma1)')
    A = G.R1 @ G.R3
    omega = hs.root_of_unity(3)
    scaled = hs.Mat3(hs.Mat3.scalar(omega).lift(G.N).data,
                     unimodular=True) @ A
    assert hs.proj_equal(scaled, A)
    assert not hs.proj_equal(G.R1, G.R2)
    assert hs.proj_key(scaled) == hs.proj_key(A)


def test_eigenvector():
    import hypershell as hs
    G = hs.build_group('S(4,sigma1)')
    v = hs.eigenvector(G.R2, G.u ** 2)
    assert (G.R2 @ v).proportional(v)
    assert v.proportional(G.polar_vector(2))
    with pytest.raises(hs.EigenvectorError):
        hs.eigenvector(G.R2, G.u.conj())


def test_herm_inner():
    import hypershell as hs
    G = hs.build_group('S(4,sigmabar4)')
    v, w = G.polar_vector(1), G.polar_vector(2)
    assert hs.herm_inner(v, w, G.H) == hs.herm_inner(w, v, G.H).conj()
    # polar vectors of complex reflections are positive
    assert hs.real_sign(hs.herm_inner(v, v, G.H)) > 0
    # R1 preserves the form
    assert hs.herm_inner(G.R1 @ v, G.R1 @ w, G.H) == hs.herm_inner(v, w, G.H)
