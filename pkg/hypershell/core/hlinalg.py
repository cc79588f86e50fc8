# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
"""3x3 matrices and Hermitian forms over cyclotomic fields"""
from ..Logger import get_logger
from .constants import ORDER_CAP
from .cyclo import CycNum, as_cyc, real_sign, root_of_unity, unit_root_angle
from .Exceptions import EigenvectorError, HermitianError, ExceedsCap, CycloError
from .util import lcm

from fractions import Fraction
import itertools

import numpy as np

HLINALG_LOGGER = get_logger('hlinalg')

_conj = np.frompyfunc(lambda z: z.conj(), 1, 1)


def _common(entries):
    entries = [as_cyc(e) for e in entries]
    N = lcm(*[e.N for e in entries])
    return [e.lift(N) for e in entries], N


################################################################################
#                                   Vec3
################################################################################
class Vec3(object):
    """column vector of three cyclotomic numbers sharing a conductor

    Attributes:
        data(:obj:`numpy.ndarray`): object array of three CycNums
        N(int): common conductor
    """
    __slots__ = ('data', 'N')

    def __init__(self, entries):
        entries, N = _common(list(entries))
        if len(entries) != 3:
            msg = "Vec3 requires 3 entries, not {}".format(len(entries))
            HLINALG_LOGGER.error(msg)
            raise HermitianError(msg)
        self.data = np.empty(3, dtype=object)
        self.data[:] = entries
        self.N = N

    @classmethod
    def basis(cls, i, N=1):
        """the i-th standard basis vector e_i (i = 0, 1, 2)"""
        return cls([CycNum.rational(int(j == i), N) for j in range(3)])

    def __getitem__(self, i):
        return self.data[i]

    def __iter__(self):
        return iter(self.data)

    def __add__(self, other):
        return Vec3(self.data + other.data)

    def __sub__(self, other):
        return Vec3(self.data - other.data)

    def __mul__(self, scalar):
        return Vec3([x * scalar for x in self.data])

    __rmul__ = __mul__

    def __neg__(self):
        return Vec3([-x for x in self.data])

    def conj(self):
        """entrywise complex conjugate"""
        return Vec3(_conj(self.data))

    def galois(self, k):
        """entrywise Galois action zeta -> zeta^k"""
        return Vec3([x.galois(k) for x in self.data])

    def cross(self, other):
        """standard (bilinear) cross product"""
        a, b = self.data, other.data
        return Vec3([a[1] * b[2] - a[2] * b[1],
                     a[2] * b[0] - a[0] * b[2],
                     a[0] * b[1] - a[1] * b[0]])

    def is_zero(self):
        return all(x.is_zero() for x in self.data)

    def proportional(self, other):
        """True iff the two vectors span the same line"""
        return self.cross(other).is_zero()

    def key(self):
        """canonical key of the projective point (first nonzero entry 1)"""
        for x in self.data:
            if not x.is_zero():
                inv = x.inverse()
                return tuple((y * inv).key() for y in self.data)
        return None

    def __eq__(self, other):
        if not isinstance(other, Vec3):
            return NotImplemented
        return all(x == y for x, y in zip(self.data, other.data))

    def __hash__(self):
        return hash(tuple(self.data))

    def __repr__(self):
        return "Vec3([{}])".format(", ".join(str(x) for x in self.data))


################################################################################
#                                   Mat3
################################################################################
class Mat3(object):
    """3x3 matrix of cyclotomic numbers sharing a conductor, row-major

    Args:
        entries(iterable): 3 rows of 3 entries (ints, Fractions or CycNums),
            or a (3,3) object array
        unimodular(bool): whether the determinant is known to be 1. Products,
            powers and inverses of unimodular matrices stay unimodular.

    Attributes:
        data(:obj:`numpy.ndarray`): (3,3) object array of CycNums
        N(int): common conductor
        unimodular(bool): determinant is exactly 1
    """
    __slots__ = ('data', 'N', 'unimodular', '_det')

    def __init__(self, entries, unimodular=False):
        flat = list(np.asarray(entries, dtype=object).reshape(9))
        flat, N = _common(flat)
        self.data = np.empty((3, 3), dtype=object)
        for i, x in enumerate(flat):
            self.data[i // 3, i % 3] = x
        self.N = N
        self.unimodular = unimodular
        self._det = CycNum.rational(1, N) if unimodular else None

    # --------------------------------------------------------------------------
    @classmethod
    def identity(cls, N=1):
        """identity matrix in conductor N"""
        return cls([[int(i == j) for j in range(3)] for i in range(3)],
                   unimodular=True).lift(N)

    @classmethod
    def scalar(cls, value):
        """value * identity"""
        value = as_cyc(value)
        zero = CycNum.rational(0, value.N)
        return cls([[value if i == j else zero for j in range(3)]
                    for i in range(3)])

    def lift(self, M):
        """same matrix with entries in conductor lcm(N, M)"""
        out = Mat3([[as_cyc(x, M) for x in row] for row in self.data],
                   unimodular=self.unimodular)
        return out

    # --------------------------------------------------------------------------
    def __getitem__(self, index):
        return self.data[index]

    def __matmul__(self, other):
        if isinstance(other, Vec3):
            return Vec3(self.data.dot(other.data))
        if isinstance(other, Mat3):
            return Mat3(self.data.dot(other.data),
                        unimodular=self.unimodular and other.unimodular)
        return NotImplemented

    def __mul__(self, scalar):
        if isinstance(scalar, (Mat3, Vec3)):
            return self.__matmul__(scalar)
        return Mat3([[x * scalar for x in row] for row in self.data])

    __rmul__ = __mul__

    def __add__(self, other):
        return Mat3(self.data + other.data)

    def __sub__(self, other):
        return Mat3(self.data - other.data)

    def __neg__(self):
        return Mat3([[-x for x in row] for row in self.data])

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = Mat3.identity(self.N)
        base = self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def __eq__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        return all(x == y for x, y in zip(self.data.flat, other.data.flat))

    def __hash__(self):
        return hash(tuple(self.data.flat))

    def __repr__(self):
        rows = ["[{}]".format(", ".join(str(x) for x in row))
                for row in self.data]
        return "Mat3([{}])".format(", ".join(rows))

    # --------------------------------------------------------------------------
    def row(self, i):
        return Vec3(self.data[i])

    def column(self, j):
        return Vec3(self.data[:, j])

    def trace(self):
        return self.data[0, 0] + self.data[1, 1] + self.data[2, 2]

    def minor_sum(self):
        """sum of the principal 2x2 minors (second characteristic
        coefficient)"""
        d = self.data
        return (d[0, 0] * d[1, 1] - d[0, 1] * d[1, 0]
                + d[0, 0] * d[2, 2] - d[0, 2] * d[2, 0]
                + d[1, 1] * d[2, 2] - d[1, 2] * d[2, 1])

    def det(self):
        """exact determinant"""
        if self._det is None:
            d = self.data
            self._det = (d[0, 0] * (d[1, 1] * d[2, 2] - d[1, 2] * d[2, 1])
                         - d[0, 1] * (d[1, 0] * d[2, 2] - d[1, 2] * d[2, 0])
                         + d[0, 2] * (d[1, 0] * d[2, 1] - d[1, 1] * d[2, 0]))
        return self._det

    def adj(self):
        """adjugate matrix, adj(A) @ A = det(A) I"""
        d = self.data
        cof = [[None] * 3 for _ in range(3)]
        for i, j in itertools.product(range(3), repeat=2):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = d[r[0], c[0]] * d[r[1], c[1]] - d[r[0], c[1]] * d[r[1], c[0]]
            # transpose while filling
            cof[j][i] = minor if (i + j) % 2 == 0 else -minor
        return Mat3(cof, unimodular=self.unimodular)

    def inverse(self):
        """exact inverse, raises HermitianError for singular matrices"""
        det = self.det()
        if det.is_zero():
            msg = "singular matrix has no inverse"
            HLINALG_LOGGER.error(msg)
            raise HermitianError(msg)
        adj = self.adj()
        if self.unimodular:
            return adj
        out = adj * det.inverse()
        return out

    def star(self):
        """conjugate transpose"""
        return Mat3(_conj(self.data.T), unimodular=self.unimodular)

    def transpose(self):
        return Mat3(self.data.T, unimodular=self.unimodular)

    def galois(self, k):
        """entrywise Galois action zeta -> zeta^k"""
        return Mat3([[x.galois(k) for x in row] for row in self.data],
                    unimodular=self.unimodular)

    def is_scalar(self):
        """True iff this is a multiple of the identity"""
        d = self.data
        if any(not d[i, j].is_zero()
               for i, j in itertools.product(range(3), repeat=2) if i != j):
            return False
        return d[0, 0] == d[1, 1] == d[2, 2]

    def rank(self):
        """exact rank"""
        if all(x.is_zero() for x in self.data.flat):
            return 0
        rows = [self.row(i) for i in range(3)]
        if all(rows[i].cross(rows[j]).is_zero()
               for i, j in ((0, 1), (0, 2), (1, 2))):
            return 1
        return 2 if self.det().is_zero() else 3

    def key(self):
        """hashable tuple of entry keys (exact equality, not projective)"""
        return tuple(x.key() for x in self.data.flat)


################################################################################
#                                 HermForm
################################################################################
class HermForm(object):
    """Hermitian form <v, w> = w^* H v on C^3

    Args:
        H(:obj:`Mat3`): Hermitian matrix, H^* = H exactly

    Attributes:
        H(:obj:`Mat3`): Gram matrix
        N(int): conductor of the entries
    """
    def __init__(self, H):
        if not isinstance(H, Mat3):
            H = Mat3(H)
        if H.star() != H:
            msg = "matrix is not Hermitian"
            HLINALG_LOGGER.error(msg)
            raise HermitianError(msg)
        self.H = H
        self.N = H.N
        self._signature = None
        self._adj = None

    def inner(self, v, w):
        """<v, w> = w^* H v, linear in v"""
        Hv = self.H @ v
        return sum((wi.conj() * x for wi, x in zip(w, Hv)),
                   CycNum.rational(0, self.N))

    def norm(self, v):
        """<v, v>, a real number"""
        return self.inner(v, v)

    def norm_sign(self, v):
        """exact sign of <v, v>"""
        return real_sign(self.norm(v))

    def adj(self):
        if self._adj is None:
            self._adj = self.H.adj()
        return self._adj

    def box(self, v, w):
        """representative of the point orthogonal to v and w"""
        cross = v.cross(w)
        if cross.is_zero():
            msg = "box product of proportional vectors"
            HLINALG_LOGGER.error(msg)
            raise HermitianError(msg)
        return self.adj() @ cross.conj()

    def det(self):
        return self.H.det()

    def galois(self, k):
        """the Galois conjugate form H^sigma_k"""
        return HermForm(self.H.galois(k))

    def signature(self):
        """cached (n+, n0, n-)"""
        if self._signature is None:
            self._signature = signature(self)
        return self._signature

    def preserved_by(self, A):
        """True iff A^* H A = H exactly"""
        return A.star() @ self.H @ A == self.H

    def __repr__(self):
        return "HermForm({})".format(self.H)


################################################################################
#                               IsometryType
################################################################################
class IsometryType(object):
    """classification of an element of U(2,1) up to scalars

    Attributes:
        tag(str): one of the *_TAG module constants
        angle(:obj:`Fraction`, None): for reflections and parabolics, the
            rotation angle arg(lambda_simple/lambda_repeated) as a multiple of
            pi in [0, 2); None when not defined or not a rational multiple
        repeated(:obj:`CycNum`, None): repeated eigenvalue, if any
        simple(:obj:`CycNum`, None): simple eigenvalue, if any
        vector(:obj:`Vec3`, None): eigenvector of the simple eigenvalue of a
            reflection (polar vector or fixed point)
    """
    REGULAR_ELLIPTIC = 'RegularElliptic'
    REFLECTION_LINE = 'ComplexReflectionLine'
    REFLECTION_POINT = 'ComplexReflectionPoint'
    PARABOLIC = 'Parabolic'
    LOXODROMIC = 'Loxodromic'
    SCALAR = 'Scalar'

    def __init__(self, tag, angle=None, repeated=None, simple=None,
                 vector=None):
        self.tag = tag
        self.angle = angle
        self.repeated = repeated
        self.simple = simple
        self.vector = vector

    @property
    def is_reflection(self):
        return self.tag in (self.REFLECTION_LINE, self.REFLECTION_POINT)

    @property
    def finite_order_possible(self):
        return self.tag not in (self.PARABOLIC, self.LOXODROMIC)

    def __eq__(self, other):
        if isinstance(other, str):
            return self.tag == other
        if isinstance(other, IsometryType):
            return self.tag == other.tag and self.angle == other.angle
        return NotImplemented

    def __hash__(self):
        return hash((self.tag, self.angle))

    def __repr__(self):
        if self.angle is None:
            return "IsometryType({})".format(self.tag)
        return "IsometryType({}, angle={}pi)".format(self.tag, self.angle)

    def to_json(self):
        return {'tag': self.tag,
                'angle_over_pi': None if self.angle is None else str(self.angle)}


################################################################################
#                               operations
################################################################################
def herm_inner(v, w, H):
    """<v, w> = w^* H v"""
    return H.inner(v, w)


def box(v, w, H):
    """H^{-1} conj(v x w) up to the positive scalar det(H); orthogonal to v
    and w"""
    return H.box(v, w)


def proj_equal(A, B):
    """True iff A B^{-1} is a scalar matrix"""
    b = B.data.flat
    pivot = next((i for i, x in enumerate(b) if not x.is_zero()), None)
    if pivot is None or B.det().is_zero():
        msg = "proj_equal requires an invertible second argument"
        HLINALG_LOGGER.error(msg)
        raise HermitianError(msg)
    a = A.data.flat
    ap, bp = a[pivot], b[pivot]
    if ap.is_zero():
        return False
    return all(x * bp == ap * y for x, y in zip(a, b))


def proj_key(A):
    """canonical hashable key of the projective class of A

    For unimodular matrices the scalar ambiguity is a cube root of unity and
    the key is the least exact key among w^j A; otherwise A is normalized by
    its first nonzero entry.
    """
    if A.unimodular:
        if A.N % 3:
            return A.key()
        omega = root_of_unity(3, 1).lift(A.N)
        keys = [A.key()]
        B = A
        for _ in range(2):
            B = B * omega
            keys.append(B.key())
        return min(keys)
    pivot = next(x for x in A.data.flat if not x.is_zero())
    return (A * pivot.inverse()).key()


def char_coefficients(A):
    """(a, b, c) with characteristic polynomial x^3 - a x^2 + b x - c"""
    return A.trace(), A.minor_sum(), A.det()


def eigen_discriminant(A):
    """discriminant of the characteristic polynomial divided by det^2

    Invariant under scaling; positive for loxodromic and negative for regular
    elliptic elements of U(2,1).
    """
    a, b, c = char_coefficients(A)
    disc = (a * a * b * b - 4 * b ** 3 - 4 * a ** 3 * c + 18 * a * b * c
            - 27 * c * c)
    return disc / (c * c)


def repeated_eigenvalues(A):
    """(repeated, simple) eigenvalues when the discriminant vanishes, with
    simple = repeated for a triple eigenvalue"""
    a, b, c = char_coefficients(A)
    gap = a * a - 3 * b
    if gap.is_zero():
        lam = a / 3
        return lam, lam
    lam = (a * b - 9 * c) / (2 * gap)
    return lam, a - 2 * lam


def eigenvector(A, lam):
    """a generator of ker(A - lam I), which must be one dimensional"""
    M = A - Mat3.scalar(as_cyc(lam, A.N))
    rows = [M.row(i) for i in range(3)]
    for i, j in ((0, 1), (0, 2), (1, 2)):
        v = rows[i].cross(rows[j])
        if not v.is_zero():
            if not (M @ v).is_zero():
                break
            return v
    msg = "{} is not a simple eigenvalue".format(lam)
    HLINALG_LOGGER.error(msg)
    raise EigenvectorError(msg)


def _scale_factor(A, H):
    M = A.star() @ H.H @ A
    for x, h in zip(M.data.flat, H.H.data.flat):
        if not h.is_zero():
            k = x / h
            break
    if M != H.H * k:
        msg = "matrix does not preserve the Hermitian form"
        HLINALG_LOGGER.error(msg)
        raise HermitianError(msg)
    return k


def _angle(simple, repeated):
    turn = unit_root_angle(simple / repeated)
    if turn is None:
        return None
    return (2 * turn) % 2


def classify(A, H):
    """exact isometry classification of A with respect to the form H"""
    _scale_factor(A, H)
    try:
        sign = real_sign(eigen_discriminant(A))
    except CycloError:
        msg = "characteristic discriminant is not real"
        HLINALG_LOGGER.error(msg)
        raise HermitianError(msg)

    if sign > 0:
        return IsometryType(IsometryType.LOXODROMIC)
    if sign < 0:
        return IsometryType(IsometryType.REGULAR_ELLIPTIC)

    repeated, simple = repeated_eigenvalues(A)
    if simple == repeated:
        if A.is_scalar():
            return IsometryType(IsometryType.SCALAR, Fraction(0),
                                repeated, simple)
        return IsometryType(IsometryType.PARABOLIC, Fraction(0),
                            repeated, simple)

    angle = _angle(simple, repeated)
    shifted = A - Mat3.scalar(as_cyc(repeated, A.N))
    if shifted.rank() == 2:
        return IsometryType(IsometryType.PARABOLIC, angle, repeated, simple)

    v = eigenvector(A, simple)
    norm = real_sign(H.norm(v))
    if norm > 0:
        tag = IsometryType.REFLECTION_LINE
    elif norm < 0:
        tag = IsometryType.REFLECTION_POINT
    else:
        tag = IsometryType.PARABOLIC
    return IsometryType(tag, angle, repeated, simple, v)


def is_infinite_order(A):
    """exact test for loxodromic or non-diagonalizable A (H independent)"""
    if real_sign(eigen_discriminant(A)) > 0:
        return True
    if not eigen_discriminant(A).is_zero():
        return False
    repeated, simple = repeated_eigenvalues(A)
    if A.is_scalar():
        return False
    shifted = A - Mat3.scalar(as_cyc(repeated, A.N))
    return simple == repeated or shifted.rank() == 2


def proj_order(A, cap=ORDER_CAP):
    """least k <= cap with A^k scalar, else ExceedsCap"""
    if is_infinite_order(A):
        return ExceedsCap
    power = A
    for k in range(1, cap + 1):
        if power.is_scalar():
            return k
        power = power @ A
    return ExceedsCap


def signature(H):
    """exact signature (n+, n0, n-) of a Hermitian form

    The characteristic polynomial of a Hermitian matrix has only real roots,
    so Descartes' rule of signs counts positive and negative eigenvalues
    exactly.
    """
    M = H.H if isinstance(H, HermForm) else H
    t, m, d = M.trace(), M.minor_sum(), M.det()
    signs = [1, -real_sign(t), real_sign(m), -real_sign(d)]
    mirrored = [-1, -real_sign(t), -real_sign(m), -real_sign(d)]

    def changes(seq):
        seq = [s for s in seq if s != 0]
        return sum(1 for x, y in zip(seq, seq[1:]) if x != y)

    zeros = 0
    if d.is_zero():
        zeros = 1
        if m.is_zero():
            zeros = 2
            if t.is_zero():
                zeros = 3
    return changes(signs), zeros, changes(mirrored)
