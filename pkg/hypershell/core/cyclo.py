# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
"""exact arithmetic in cyclotomic fields Q(zeta_N)

Elements are stored in the power basis {zeta^i : 0 <= i < phi(N)} as an
integer polynomial (dense, highest degree first) over a positive common
denominator, always reduced modulo the N-th cyclotomic polynomial. The
canonical form is unique, so equality and the zero test are exact.
"""
from ..Logger import get_logger
from .constants import START_BITS
from .Exceptions import CycloError
from .util import lcm

from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache, reduce
import math
import numbers

from sympy import Poly, Rational, Symbol, cyclotomic_poly, totient
from sympy.ntheory import mobius
from sympy.polys.domains import QQ, ZZ
from sympy.polys.densearith import dup_add, dup_mul, dup_mul_ground, dup_rem
from sympy.polys.densearith import dup_sub
from sympy.polys.densebasic import dup_convert, dup_strip
from sympy.polys.euclidtools import dup_invert
from mpmath import iv, mp
from mpmath.libmp import to_rational

CYCLO_LOGGER = get_logger('cyclo')

MAX_SIGN_BITS = 1 << 16
"""precision at which the sign oracle gives up (never reached for nonzero
inputs of the sizes used here)"""

X = Symbol('X')
"""indeterminate used for minimal polynomials"""


################################################################################
#                           cached field data
################################################################################
@lru_cache(maxsize=None)
def cyclotomic_rep(N):
    """dense integer coefficients (high to low) of the N-th cyclotomic
    polynomial"""
    return tuple(int(c) for c in cyclotomic_poly(N, X, polys=True).all_coeffs())


@lru_cache(maxsize=None)
def field_degree(N):
    """phi(N), the degree of Q(zeta_N)"""
    return int(totient(N))


@lru_cache(maxsize=None)
def _normalized_trace_table(N):
    # trace of zeta_N^i divided by phi(N) is mu(n)/phi(n) with n = N/gcd(i,N)
    table = []
    for i in range(field_degree(N)):
        n = N // math.gcd(i, N)
        table.append(Fraction(int(mobius(n)), int(totient(n))))
    return tuple(table)


def _reduce(rep, N):
    rep = dup_strip([int(c) for c in rep])
    if len(rep) > field_degree(N):
        rep = dup_rem(rep, list(cyclotomic_rep(N)), ZZ)
    return tuple(int(c) for c in dup_strip(rep))


################################################################################
#                               CycNum
################################################################################
class CycNum(object):
    """an exact element of the cyclotomic field Q(zeta_N)

    Args:
        N(int): conductor, the field is Q(zeta_N) with zeta_N = exp(2 pi i/N)
        rep(sequence of int): integer polynomial in zeta, highest degree
            first (sympy's dense "dup" layout)
        den(int): positive common denominator

    Attributes:
        N(int): conductor
        rep(tuple): canonical integer numerator, reduced modulo Phi_N and
            stripped of leading zeros
        den(int): positive denominator, coprime to the content of rep

    Example:
        >>> import hypershell as hs
        >>> sqrt2 = hs.root_of_unity(8,1) + hs.root_of_unity(8,-1)
        >>> sqrt2 * sqrt2 == 2
        True
    """
    __slots__ = ('N', 'rep', 'den', '_hash')

    def __init__(self, N, rep=(), den=1, reduce_rep=True):
        if N < 1:
            msg = "conductor must be a positive integer, not {}".format(N)
            CYCLO_LOGGER.error(msg)
            raise CycloError(msg)
        if den == 0:
            msg = "zero denominator"
            CYCLO_LOGGER.error(msg)
            raise CycloError(msg)

        if reduce_rep:
            rep = _reduce(rep, N)
        else:
            rep = tuple(int(c) for c in dup_strip(list(rep)))
        if den < 0:
            rep = tuple(-c for c in rep)
            den = -den

        g = reduce(math.gcd, rep, den)
        if g > 1:
            rep = tuple(c // g for c in rep)
            den //= g

        self.N = N
        self.rep = rep
        self.den = den
        self._hash = None

    # --------------------------------------------------------------------------
    #                          constructors
    # --------------------------------------------------------------------------
    @classmethod
    def rational(cls, value, N=1):
        """the rational `value` as an element of Q(zeta_N)"""
        value = Fraction(value)
        return cls(N, (value.numerator,), value.denominator, reduce_rep=False)

    @classmethod
    def from_terms(cls, terms):
        """builds sum(coef * zeta_M**k) from an iterable of (coef, M, k)

        `coef` may be an int, a Fraction or a string such as "1/2". The
        result lives in the conductor lcm of all M. This is the encoding used
        by the catalog data file.
        """
        terms = [(Fraction(c), int(M), int(k)) for c, M, k in terms]
        N = lcm(*[M for _, M, _ in terms]) if terms else 1
        total = cls.rational(0, N)
        for coef, M, k in terms:
            total = total + coef * root_of_unity(M, k).lift(N)
        return total

    # --------------------------------------------------------------------------
    #                          properties
    # --------------------------------------------------------------------------
    @property
    def degree(self):
        """degree phi(N) of the ambient field"""
        return field_degree(self.N)

    @property
    def coefficients(self):
        """list of Fractions, coefficient of zeta^i at index i (low to high),
        padded to the field degree"""
        low = list(reversed(self.rep))
        low += [0] * (self.degree - len(low))
        return [Fraction(c, self.den) for c in low]

    def key(self):
        """hashable canonical form (N, rep, den); only comparable between
        numbers sharing a conductor"""
        return (self.N, self.rep, self.den)

    def is_zero(self):
        """True iff this number is exactly zero"""
        return not self.rep

    def is_rational(self):
        """True iff this number lies in Q"""
        return len(self.rep) <= 1

    def is_real(self):
        """True iff this number is fixed by complex conjugation"""
        return self.conj() == self

    def to_fraction(self):
        """this number as a Fraction, raises CycloError if it is irrational"""
        if not self.is_rational():
            msg = "{} is not rational".format(self)
            CYCLO_LOGGER.error(msg)
            raise CycloError(msg)
        return Fraction(self.rep[0] if self.rep else 0, self.den)

    def normalized_trace(self):
        """Tr(x)/[Q(zeta_N):Q], a rational number independent of N"""
        table = _normalized_trace_table(self.N)
        total = sum((c * t for c, t in zip(reversed(self.rep), table)),
                    Fraction(0))
        return total / self.den

    # --------------------------------------------------------------------------
    #                          field changes
    # --------------------------------------------------------------------------
    def lift(self, M):
        """the same number represented in Q(zeta_M); N must divide M"""
        if M == self.N:
            return self
        if M % self.N:
            msg = "conductor {} does not divide {}".format(self.N, M)
            CYCLO_LOGGER.error(msg)
            raise CycloError(msg)
        step = M // self.N
        low = [0] * (step * (len(self.rep) - 1) + 1) if self.rep else []
        for i, c in enumerate(reversed(self.rep)):
            low[i * step] = c
        return CycNum(M, tuple(reversed(low)), self.den)

    def galois(self, k):
        """image under the automorphism zeta -> zeta^k (gcd(k,N) = 1)"""
        if math.gcd(k, self.N) != 1:
            msg = "{} is not coprime to the conductor {}".format(k, self.N)
            CYCLO_LOGGER.error(msg)
            raise CycloError(msg)
        if not self.rep:
            return self
        low = [0] * self.N
        for i, c in enumerate(reversed(self.rep)):
            low[(i * k) % self.N] += c
        return CycNum(self.N, tuple(reversed(low)), self.den)

    def conj(self):
        """complex conjugate, the automorphism zeta -> zeta^-1"""
        return self.galois(-1)

    def abs2(self):
        """|x|^2 = x * conj(x)"""
        return self * self.conj()

    # --------------------------------------------------------------------------
    #                          arithmetic
    # --------------------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.N == self.N:
                return self, other
            N = lcm(self.N, other.N)
            return self.lift(N), other.lift(N)
        if isinstance(other, numbers.Rational):
            return self, CycNum.rational(other, self.N)
        return None, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        rep = dup_add(dup_mul_ground(list(a.rep), b.den, ZZ),
                      dup_mul_ground(list(b.rep), a.den, ZZ), ZZ)
        return CycNum(a.N, rep, a.den * b.den, reduce_rep=False)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        rep = dup_sub(dup_mul_ground(list(a.rep), b.den, ZZ),
                      dup_mul_ground(list(b.rep), a.den, ZZ), ZZ)
        return CycNum(a.N, rep, a.den * b.den, reduce_rep=False)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if b.is_rational():
            scale = b.rep[0] if b.rep else 0
            return CycNum(a.N, tuple(c * scale for c in a.rep),
                          a.den * b.den, reduce_rep=False)
        return CycNum(a.N, dup_mul(list(a.rep), list(b.rep), ZZ),
                      a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __neg__(self):
        return CycNum(self.N, tuple(-c for c in self.rep), self.den,
                      reduce_rep=False)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNum.rational(1, self.N)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        """multiplicative inverse via the extended gcd with Phi_N"""
        if self.is_zero():
            msg = "zero has no inverse"
            CYCLO_LOGGER.error(msg)
            raise CycloError(msg)
        if self.is_rational():
            return CycNum(self.N, (self.den,), self.rep[0], reduce_rep=False)

        f = dup_convert(list(self.rep), ZZ, QQ)
        g = dup_convert(list(cyclotomic_rep(self.N)), ZZ, QQ)
        inv = dup_invert(f, g, QQ)
        common = lcm(*[int(c.denominator) for c in inv])
        rep = [int(c.numerator) * (common // int(c.denominator)) * self.den
               for c in inv]
        return CycNum(self.N, rep, common, reduce_rep=False)

    # --------------------------------------------------------------------------
    #                          comparison
    # --------------------------------------------------------------------------
    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a.rep == b.rep and a.den == b.den

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        # must agree between conductors and with hash(int)/hash(Fraction)
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((self.normalized_trace(), self.degree > 0))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # --------------------------------------------------------------------------
    #                          printing
    # --------------------------------------------------------------------------
    def __repr__(self):
        return "CycNum({}, {})".format(self.N, str(self))

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("{}*z".format(c))
            else:
                terms.append("{}*z^{}".format(c, i))
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self):
        """json friendly {conductor, coefficients, approx} dictionary"""
        approx = numeric(self, dps=15)
        return {'conductor': self.N,
                'coefficients': [str(c) for c in self.coefficients],
                'approx': [float(approx.real), float(approx.imag)]}


################################################################################
#                               RealInterval
################################################################################
class RealInterval(object):
    """closed interval [lower, upper] with exact rational endpoints

    Attributes:
        lower(Fraction): lower bound
        upper(Fraction): upper bound
    """
    __slots__ = ('lower', 'upper')

    def __init__(self, lower, upper):
        lower, upper = Fraction(lower), Fraction(upper)
        if lower > upper:
            msg = "invalid interval [{}, {}]".format(lower, upper)
            CYCLO_LOGGER.error(msg)
            raise CycloError(msg)
        self.lower = lower
        self.upper = upper

    @classmethod
    def from_iv(cls, value):
        """converts an mpmath interval into exact rational bounds"""
        lo, hi = value._mpi_
        return cls(Fraction(*to_rational(lo)), Fraction(*to_rational(hi)))

    def refine(self, other):
        """intersection with a newer enclosure; never wider than self"""
        lower = max(self.lower, other.lower)
        upper = min(self.upper, other.upper)
        if lower > upper:
            msg = "disjoint enclosures {} and {}".format(self, other)
            CYCLO_LOGGER.error(msg)
            raise CycloError(msg)
        return RealInterval(lower, upper)

    def sign(self):
        """+1 or -1 when the interval excludes zero, None otherwise"""
        if self.lower > 0:
            return 1
        if self.upper < 0:
            return -1
        return None

    @property
    def width(self):
        return self.upper - self.lower

    def __contains__(self, value):
        return self.lower <= Fraction(value) <= self.upper

    def __lt__(self, other):
        return self.upper < Fraction(other)

    def __gt__(self, other):
        return self.lower > Fraction(other)

    def __float__(self):
        return float((self.lower + self.upper) / 2)

    def __repr__(self):
        return "RealInterval({}, {})".format(float(self.lower),
                                             float(self.upper))


################################################################################
#                               numerics
################################################################################
@contextmanager
def interval_precision(bits):
    """temporarily sets mpmath's interval context precision"""
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


@lru_cache(maxsize=256)
def _trig_table(N, bits):
    with interval_precision(bits):
        table = []
        for i in range(field_degree(N)):
            angle = 2 * iv.pi * i / N
            table.append((iv.cos(angle), iv.sin(angle)))
    return tuple(table)


def complex_interval(x, bits):
    """(real, imaginary) mpmath intervals enclosing x under
    zeta_N -> exp(2 pi i/N), evaluated at `bits` of precision"""
    table = _trig_table(x.N, bits)
    with interval_precision(bits):
        re = iv.mpf(0)
        im = iv.mpf(0)
        for c, (cos, sin) in zip(reversed(x.rep), table):
            re += c * cos
            im += c * sin
        return re / x.den, im / x.den


def real_interval(x, bits):
    """RealInterval enclosing the real part of x"""
    re, _ = complex_interval(x, bits)
    return RealInterval.from_iv(re)


def numeric(x, dps=30):
    """mpmath complex approximation of x (for reports and plots only)"""
    if isinstance(x, numbers.Rational):
        return mp.mpc(float(x))
    with mp.workdps(dps):
        total = mp.mpc(0)
        for i, c in enumerate(reversed(x.rep)):
            if c:
                total += c * mp.expjpi(mp.mpf(2 * i) / x.N)
        return +(total / x.den)


################################################################################
#                               operations
################################################################################
def root_of_unity(N, k=1):
    """zeta_N ** k in canonical form in Q(zeta_N)"""
    if N < 1:
        msg = "root_of_unity requires N >= 1, not {}".format(N)
        CYCLO_LOGGER.error(msg)
        raise CycloError(msg)
    k %= N
    return CycNum(N, (1,) + (0,) * k)


def lift(x, M):
    """the number x represented with conductor M (N must divide M)"""
    return as_cyc(x).lift(M)


def is_zero(x):
    """exact zero test"""
    return as_cyc(x).is_zero()


def real_sign(x):
    """exact sign (-1, 0, 1) of a real cyclotomic number

    Zero is decided from the canonical form. Otherwise x is enclosed by
    interval arithmetic at START_BITS of precision, doubling until the
    enclosure excludes zero.
    """
    x = as_cyc(x)
    if x.is_rational():
        f = x.to_fraction()
        return (f > 0) - (f < 0)
    if not x.is_real():
        msg = "real_sign requires a real number, not {}".format(x)
        CYCLO_LOGGER.error(msg)
        raise CycloError(msg)
    if x.is_zero():
        return 0

    bits = START_BITS
    enclosure = None
    while bits <= MAX_SIGN_BITS:
        current = real_interval(x, bits)
        enclosure = current if enclosure is None else enclosure.refine(current)
        sign = enclosure.sign()
        if sign is not None:
            return sign
        bits *= 2

    msg = "unable to separate {} from zero at {} bits".format(x, MAX_SIGN_BITS)
    CYCLO_LOGGER.error(msg)
    raise CycloError(msg)


def galois_apply(x, k):
    """image of x under zeta_N -> zeta_N^k"""
    return as_cyc(x).galois(k)


def galois_group(N):
    """the integers 1 <= k < N coprime to N (k = 1 for N <= 2)"""
    return [k for k in range(1, max(N, 2)) if math.gcd(k, N) == 1]


def galois_orbit(x):
    """distinct Galois conjugates of x, the identity image first"""
    x = as_cyc(x)
    seen = {}
    for k in galois_group(x.N):
        y = x.galois(k)
        seen.setdefault(y.key(), y)
    return list(seen.values())


def min_poly(x):
    """monic minimal polynomial of x over Q as a sympy Poly in X

    Computed as the product of (X - y) over the distinct Galois conjugates y
    of x; every coefficient of that product is rational.
    """
    x = as_cyc(x)
    coeffs = [CycNum.rational(1, x.N)]
    for y in galois_orbit(x):
        shifted = coeffs + [CycNum.rational(0, x.N)]
        for i in range(1, len(shifted)):
            shifted[i] = shifted[i] - y * coeffs[i - 1]
        coeffs = shifted

    rationals = []
    for c in coeffs:
        if not c.is_rational():
            msg = "non rational coefficient {} in minimal polynomial".format(c)
            CYCLO_LOGGER.error(msg)
            raise CycloError(msg)
        f = c.to_fraction()
        rationals.append(Rational(f.numerator, f.denominator))
    return Poly(rationals, X, domain='QQ')


def as_cyc(x, N=1):
    """coerces ints, Fractions and CycNums into a CycNum with conductor
    divisible by N"""
    if isinstance(x, CycNum):
        if x.N % N == 0:
            return x
        return x.lift(lcm(x.N, N))
    if isinstance(x, numbers.Rational) or isinstance(x, str):
        return CycNum.rational(Fraction(x), N)
    msg = "cannot interpret {!r} as a cyclotomic number".format(x)
    CYCLO_LOGGER.error(msg)
    raise CycloError(msg)


@lru_cache(maxsize=None)
def _unit_root_table(N):
    return {root_of_unity(N, k).key(): k for k in range(N)}


def unit_root_angle(x):
    """returns the Fraction e in [0, 1) with x = exp(2 pi i e), or None when x
    is not a root of unity

    Roots of unity in Q(zeta_N) are the lcm(2,N)-th roots of unity.
    """
    x = as_cyc(x)
    M = lcm(2, x.N)
    k = _unit_root_table(M).get(x.lift(M).key())
    if k is None:
        return None
    return Fraction(k, M)


def unit_root(angle):
    """exp(2 pi i angle) for a rational angle (fraction of a full turn)"""
    angle = Fraction(angle)
    return root_of_unity(angle.denominator, angle.numerator)
