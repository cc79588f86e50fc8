# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
"""Braid lengths and triangle group types"""
from ..Logger import get_logger
from .constants import BRAID_CAP
from .cyclo import real_sign, root_of_unity
from .Exceptions import ExceedsCap, INFINITY, NotRational, RelationError
from .hlinalg import (classify, eigen_discriminant, is_infinite_order,
                      proj_equal)
from .util import lcm

from collections import namedtuple
from fractions import Fraction

BRAID_LOGGER = get_logger('braid')

CONTROL_PAIRS = (('2', '3'),
                 ('3', '1'),
                 ('1', '2'),
                 ('1', '23-2'),
                 ('3', '12-1'),
                 ('1', '-323'))
"""word pairs whose braid lengths make up the triangle group type, in type
string order"""


################################################################################
#                               GroupType
################################################################################
class GroupType(namedtuple('GroupType', ['a', 'b', 'c', 'd', 'e', 'f', 'g'])):
    """triangle group type a,b,c; d,e,f; g

    a, b, c are br(2,3), br(3,1), br(1,2); d, e, f are br(1,23-2),
    br(3,12-1), br(1,-323); g is the order of P (symmetric groups) or Q.
    Entries are ints, INFINITY or ExceedsCap.
    """
    __slots__ = ()

    def __str__(self):
        return "{},{},{};{},{},{};{}".format(*[str(x) for x in self])

    @classmethod
    def from_string(cls, text):
        """parses 'a,b,c;d,e,f;g'"""
        parts = text.replace(';', ',').split(',')
        values = []
        for part in parts:
            part = part.strip()
            values.append(int(part) if part.isdigit() else part)
        return cls(*values)


################################################################################
#                               braid lengths
################################################################################
def braid_length(A, B, cap=BRAID_CAP):
    """least n <= cap such that ABA... = BAB... (n factors each) projectively

    Returns INFINITY when AB is loxodromic, or when AB is parabolic and no
    relation holds up to `cap`. A parabolic AB can still braid: the
    relation then makes a power of AB central. Returns ExceedsCap when AB
    has finite order and no relation of length at most `cap` holds.

    Example:
        >>> import hypershell as hs
        >>> G = hs.build_group('S(4,sigmabar4)')
        >>> hs.braid_length(G.R1, G.R2)
        4
    """
    AB = A @ B
    if real_sign(eigen_discriminant(AB)) > 0:
        return INFINITY
    left, right = A, B
    for n in range(1, cap + 1):
        if proj_equal(left, right):
            return n
        if n % 2:
            left, right = left @ B, right @ A
        else:
            left, right = left @ A, right @ B
    if is_infinite_order(AB):
        return INFINITY
    return ExceedsCap


def _cos2_value(a, b, H, u):
    u3 = u ** 3
    inner = H.inner(a, b)
    return (u3 - 1).abs2() * inner.abs2() / (H.norm(a) * H.norm(b))


def braid_angle(a, b, H, u):
    """the angle theta/pi in [0, 1/2] with 4cos^2(theta) equal to
    |u^3-1|^2 |<a,b>|^2 / (<a,a><b,b>) for polar vectors a, b of two
    reflections of the same angle

    Returns INFINITY when the value is at least 4 (the product is parabolic
    or loxodromic) and NotRational when theta is not a rational multiple of
    pi. 2cos(2 theta) lies in the real subfield of Q(zeta_N), so the search
    runs over the roots of unity of order dividing lcm(4, 2N).
    """
    value = _cos2_value(a, b, H, u)
    if real_sign(value - 4) >= 0:
        return INFINITY
    target = value - 2
    M = lcm(4, 2 * target.N)
    key = target.lift(M).key()
    for k in range(M // 2 + 1):
        candidate = root_of_unity(M, k) + root_of_unity(M, -k)
        if candidate.lift(M).key() == key:
            return Fraction(k, M)
    return NotRational


def braid_length_closed_form(a, b, H, u):
    """braid length predicted from the angle between two mirrors

    When theta = pi/q the pair braids with length q. Returns the int q,
    INFINITY, NotRational, or None when theta is a rational multiple of pi
    that is not of the form pi/q.
    """
    theta = braid_angle(a, b, H, u)
    if theta is INFINITY or theta is NotRational:
        return theta
    if theta == 0:
        return INFINITY
    if theta.numerator == 1:
        return theta.denominator
    return None


################################################################################
#                               group types
################################################################################
def control_word_pairs(G):
    """the six word pairs of the type with their matrices, as tuples
    (word_a, word_b, A, B)"""
    return [(wa, wb, G.evaluate(wa), G.evaluate(wb)) for wa, wb in CONTROL_PAIRS]


def group_type(G, cap=BRAID_CAP):
    """the triangle group type of G

    Example:
        >>> import hypershell as hs
        >>> str(hs.group_type(hs.build_group('S(4,sigmabar4)')))
        '4,4,4;3,3,3;7'
    """
    lengths = []
    for wa, wb, A, B in control_word_pairs(G):
        n = braid_length(A, B, cap)
        BRAID_LOGGER.debug("{}: br({},{}) = {}".format(G.label, wa, wb, n))
        lengths.append(n)
    return GroupType(*lengths, G.center_order(cap))


################################################################################
#                               central elements
################################################################################
def expected_central_angle(q, p):
    """rotation angle (multiple of pi, reduced mod 2) of the central element
    of a braid length q pair of reflections of order p"""
    p = Fraction(p)
    if q == 3:
        angle = (p - 6) / p
    elif q == 4:
        angle = (p - 4) / p
    elif q == 5:
        angle = (3 * p - 10) / p
    elif q == 6:
        angle = 6 / p
    else:
        msg = "no central angle formula for braid length {}".format(q)
        BRAID_LOGGER.error(msg)
        raise RelationError(msg)
    return angle % 2


def central_element(A, B, q, p, H):
    """(AB)^q for odd q or (AB)^(q/2) for even q, with its classification

    Returns:
        tuple: (matrix, IsometryType); the type carries the rotation angle

    Raises:
        RelationError: if A and B do not braid with length q
    """
    n = braid_length(A, B, cap=q)
    if n != q:
        msg = "expected braid length {}, found {}".format(q, n)
        BRAID_LOGGER.error(msg)
        raise RelationError(msg)
    power = q if q % 2 else q // 2
    C = (A @ B) ** power
    return C, classify(C, H)


def central_angle_matches(kind, q, p):
    """True iff the classified central element has the expected angle (up to
    orientation)"""
    expected = expected_central_angle(q, p)
    if expected == 0:
        return kind == kind.PARABOLIC or kind.angle == 0
    if kind.angle is None:
        return False
    return kind.angle in (expected, (-expected) % 2)
