# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
"""The sporadic, Thompson and Mostow families of triangle groups

Groups are generated by three complex reflections R1, R2, R3 of angle 2pi/p
with polar vectors e1, e2, e3. The sporadic and Mostow groups are
"symmetric": an order three matrix J conjugates R1 -> R2 -> R3 -> R1.
"""
from ..Logger import get_logger
from .constants import FAMILIES
from .cyclo import CycNum, as_cyc, real_sign, root_of_unity, unit_root_angle
from .Exceptions import CatalogError, NotHyperbolic, RelationError
from .Exceptions import HermitianError
from .hlinalg import HermForm, Mat3, Vec3, eigenvector, proj_order
from .util import as_fraction, fraction_str, lcm
from .words import parse_word

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
import json
import os
import re

from sympy import factorint, sympify
from sympy.ntheory import legendre_symbol

FAMILIES_LOGGER = get_logger('families')

CATALOG_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)),
                            'data',
                            'catalog.json')
"""location of the catalog data file shipped with the package"""

_LABEL_RE = re.compile(r'^\s*(S|T|Gamma|G)\s*\(\s*(-?\d+)\s*,\s*([^)]+?)\s*\)\s*$',
                       re.IGNORECASE)
_NAME_RE = re.compile(r'^([a-z]+?)(\d+)$')


################################################################################
#                               Specs
################################################################################
class GroupSpec(object):
    """description of a triangle group before it is constructed

    Args:
        family(str): one of 'sporadic', 'thompson', 'mostow'
        p(int): order of the generating reflections (negative p is allowed
            and uses u = exp(2 pi i/3p))
        parameter(:obj:`CycNum` or tuple): tau for sporadic and Mostow groups,
            (rho, sigma, tau) for Thompson groups
        name(str): catalog name of the parameter (e.g. 'sigmabar4'), if any
        t(:obj:`Fraction`): Mostow's phase shift, Mostow groups only

    Attributes:
        family(str): family name
        p(int): reflection order
        parameter(:obj:`CycNum` or tuple): group parameter(s)
        name(str): parameter name or None
        t(:obj:`Fraction`): phase shift or None
    """
    def __init__(self, family, p, parameter=None, name=None, t=None):
        if family not in FAMILIES:
            msg = "unknown family '{}', must be one of {}".format(family,
                                                                  FAMILIES)
            FAMILIES_LOGGER.error(msg)
            raise CatalogError(msg)
        if abs(int(p)) < 2:
            msg = "reflection order must satisfy |p| >= 2, not {}".format(p)
            FAMILIES_LOGGER.error(msg)
            raise CatalogError(msg)

        self.family = family
        self.p = int(p)
        self.name = name
        self.t = None if t is None else as_fraction(t)
        if family == 'mostow' and parameter is None:
            parameter = mostow_tau(self.p, self.t)
        self.parameter = parameter

    @property
    def symmetric(self):
        """True for groups with the order three symmetry J"""
        return self.family in ('sporadic', 'mostow')

    @property
    def label(self):
        """canonical label, e.g. 'S(4,sigma1)', 'T(5,Hbar2)', 'Gamma(7,3/14)'"""
        if self.family == 'mostow':
            return "Gamma({},{})".format(self.p, fraction_str(self.t))
        letter = 'S' if self.family == 'sporadic' else 'T'
        name = self.name
        if name is None:
            if self.family == 'sporadic':
                name = str(self.parameter)
            else:
                name = ",".join(str(x) for x in self.parameter)
        return "{}({},{})".format(letter, self.p, name)

    def build(self):
        """constructs the TriangleGroup described by this spec"""
        if self.family == 'thompson':
            return thompson_group(self.p, self.parameter, spec=self)
        if self.family == 'mostow':
            return mostow_group(self.p, self.t, spec=self)
        return sporadic_group(self.p, self.parameter, spec=self)

    def __eq__(self, other):
        if not isinstance(other, GroupSpec):
            return NotImplemented
        return self.label == other.label

    def __hash__(self):
        return hash(self.label)

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.label)


CombinatoricsRow = namedtuple('CombinatoricsRow',
                              ['base', 'rep', 'count', 'truncated', 'ideal'])
"""one row of a rough combinatorics table: base polygon size, representative
pyramid label 'a;b,c', orbit size and the p values with truncated/ideal top"""

StabilizerRow = namedtuple('StabilizerRow',
                           ['vertex', 'gens', 'order', 'starred'])
"""one row of a vertex stabilizer table: vertex name, generator words,
expected order (an int or 'cusp') and whether the row is starred"""

Failure = namedtuple('Failure', ['kind', 'word', 'angle'])
"""known failure of the shell algorithm for a catalog entry"""


def top_status(row, p):
    """'ideal', 'truncated' or 'apex' for a combinatorics row at p"""
    if p in row.ideal:
        return 'ideal'
    if p in row.truncated:
        return 'truncated'
    return 'apex'


class CatalogEntry(GroupSpec):
    """a GroupSpec annotated with the data of the commensurability tables

    Attributes:
        chi(:obj:`Fraction`): orbifold Euler characteristic
        field(str): name of the adjoint trace field, a key of the catalog
            'fields' table
        cocompact(bool): C (True) or NC (False)
        na_index(int): non-arithmeticity index, 0 for arithmetic lattices
        type_string(str): expected 'a,b,c;d,e,f;g' triangle group type
        lattice(list): p values of the family that give lattices
        presentation(list): relation dictionaries (see verify_relations)
        combinatorics(list): CombinatoricsRow objects
        stabilizers(list): StabilizerRow objects
        failure(:obj:`Failure`): known algorithm failure or None
        alternate(str): label of a group the entry is isomorphic to, if any
        order_P(int): order of P = R1 J, Mostow entries only
        variables(dict): values substituted into presentation exponents
    """
    def __init__(self, family, p, parameter=None, name=None, t=None, **kwargs):
        super().__init__(family, p, parameter, name, t)
        self.chi = as_fraction(kwargs.get('chi', 0))
        self.field = kwargs.get('field')
        self.cocompact = bool(kwargs.get('cocompact'))
        self.na_index = int(kwargs.get('na', 0))
        self.type_string = kwargs.get('type_string')
        self.lattice = list(kwargs.get('lattice', []))
        self.presentation = list(kwargs.get('presentation', []))
        self.combinatorics = list(kwargs.get('combinatorics', []))
        self.stabilizers = list(kwargs.get('stabilizers', []))
        self.failure = kwargs.get('failure')
        self.alternate = kwargs.get('alternate')
        self.order_P = kwargs.get('order_P')
        self.variables = dict(kwargs.get('variables', {'p': self.p}))

    @property
    def arithmetic(self):
        return self.na_index == 0

    @property
    def flags(self):
        """short 'C/NC, A/NA(n)' description"""
        c = 'C' if self.cocompact else 'NC'
        a = 'A' if self.arithmetic else 'NA({})'.format(self.na_index)
        return "{}, {}".format(c, a)

    def to_json(self):
        return {'label': self.label,
                'family': self.family,
                'p': self.p,
                'parameter': self.name,
                't': None if self.t is None else fraction_str(self.t),
                'type': self.type_string,
                'chi': fraction_str(self.chi),
                'field': self.field,
                'cocompact': self.cocompact,
                'na_index': self.na_index,
                'failure': None if self.failure is None else self.failure.kind,
                'alternate': self.alternate}


################################################################################
#                               TriangleGroup
################################################################################
class TriangleGroup(object):
    """a complex hyperbolic triangle group with exact generators

    Attributes:
        spec(:obj:`GroupSpec`): the spec this group was built from (a
            CatalogEntry for catalog groups)
        R1,R2,R3(:obj:`Mat3`): the generating reflections
        J(:obj:`Mat3`): the order three symmetry, None for Thompson groups
        H(:obj:`HermForm`): the invariant Hermitian form
        u(:obj:`CycNum`): exp(2 pi i/3p)
        N(int): common conductor of every entry
    """
    def __init__(self, spec, R1, R2, R3, H, u, J=None):
        self.spec = spec
        self.N = lcm(R1.N, R2.N, R3.N, H.N, u.N)
        self.R1 = R1.lift(self.N)
        self.R2 = R2.lift(self.N)
        self.R3 = R3.lift(self.N)
        self.J = None if J is None else J.lift(self.N)
        self.H = H if H.N == self.N else HermForm(H.H.lift(self.N))
        self.u = u.lift(self.N)
        self._cache = {}

    # --------------------------------------------------------------------------
    @property
    def p(self):
        return self.spec.p

    @property
    def label(self):
        return self.spec.label

    @property
    def symmetric(self):
        return self.J is not None

    @property
    def generators(self):
        return (self.R1, self.R2, self.R3)

    @property
    def P(self):
        """R1 J for symmetric groups, None otherwise"""
        if self.J is None:
            return None
        return self.generator('P')

    @property
    def Q(self):
        """R1 R2 R3"""
        return self.generator('Q')

    @property
    def center(self):
        """P for symmetric groups, Q otherwise; the shell is invariant under
        conjugation by this element"""
        return self.P if self.symmetric else self.Q

    def center_order(self, cap=None):
        """projective order of `center`, cached"""
        key = ('center_order', cap)
        if key not in self._cache:
            args = () if cap is None else (cap,)
            self._cache[key] = proj_order(self.center, *args)
        return self._cache[key]

    def polar_vector(self, i):
        """polar vector of R_i (i = 1, 2, 3), the basis vector e_i"""
        return Vec3.basis(i - 1, self.N)

    # --------------------------------------------------------------------------
    def generator(self, letter, sign=1):
        """matrix of a single letter (1, 2, 3, 'J', 'P' or 'Q') or its
        inverse"""
        key = ('gen', letter, sign)
        if key in self._cache:
            return self._cache[key]

        if letter in ('J', 'P') and self.J is None:
            msg = "'{}' is not defined in the non-symmetric group {}".format(
                                                            letter, self.label)
            FAMILIES_LOGGER.error(msg)
            raise RelationError(msg)

        if sign < 0:
            mat = self.generator(letter).inverse()
        elif letter in (1, 2, 3):
            mat = self.generators[letter - 1]
        elif letter == 'J':
            mat = self.J
        elif letter == 'P':
            mat = self.R1 @ self.J
        elif letter == 'Q':
            mat = self.R1 @ self.R2 @ self.R3
        else:
            msg = "unknown generator '{}'".format(letter)
            FAMILIES_LOGGER.error(msg)
            raise RelationError(msg)

        self._cache[key] = mat
        return mat

    def evaluate(self, word):
        """matrix of a word, given as a string ("23-2") or parsed tuple"""
        if isinstance(word, str):
            word = parse_word(word)
        mat = Mat3.identity(self.N)
        for letter, sign in word:
            mat = mat @ self.generator(letter, sign)
        return mat

    def __repr__(self):
        return "TriangleGroup({})".format(self.label)


################################################################################
#                               constructors
################################################################################
def unit(p):
    """u = exp(2 pi i/3p); negative p gives the conjugate"""
    return root_of_unity(3 * abs(p), 1 if p > 0 else -1)


def _alpha_beta(u):
    ubar = u.conj()
    alpha = 2 - u ** 3 - ubar ** 3
    beta_scale = ubar ** 2 - u
    return alpha, beta_scale


def _check_hyperbolic(H, label):
    sign = real_sign(H.det())
    if sign >= 0:
        msg = "{} does not have a form of signature (2,1): det(H) has sign {}"\
                .format(label, sign)
        FAMILIES_LOGGER.error(msg)
        raise NotHyperbolic(msg, sign)


def _symmetry(N):
    return Mat3([[0, 0, 1], [1, 0, 0], [0, 1, 0]], unimodular=True).lift(N)


def sporadic_group(p, tau, spec=None):
    """the symmetric triangle group S(p, tau) generated by R1 and J

    Args:
        p(int): order of R1
        tau(:obj:`CycNum`): trace of R1 J
        spec(:obj:`GroupSpec`): optional spec to attach

    Returns:
        :obj:`TriangleGroup`: the group

    Raises:
        NotHyperbolic: if the Hermitian form is not of signature (2,1)

    Example:
        >>> import hypershell as hs
        >>> G = hs.sporadic_group(4, hs.named_parameter('sigma1'))
        >>> G.P.trace() == hs.named_parameter('sigma1')
        True
    """
    tau = as_cyc(tau)
    if spec is None:
        spec = GroupSpec('sporadic', p, tau)
    u = unit(p)
    N = lcm(u.N, tau.N)
    u, tau = u.lift(N), tau.lift(N)
    ubar, taubar = u.conj(), tau.conj()
    alpha, scale = _alpha_beta(u)
    beta = scale * tau
    zero = CycNum.rational(0, N)

    H = HermForm(Mat3([[alpha, beta, beta.conj()],
                       [beta.conj(), alpha, beta],
                       [beta, beta.conj(), alpha]]))
    _check_hyperbolic(H, spec.label)

    R1 = Mat3([[u ** 2, tau, -u * taubar],
               [zero, ubar, zero],
               [zero, zero, ubar]], unimodular=True)
    J = _symmetry(N)
    Jinv = J.inverse()
    R2 = J @ R1 @ Jinv
    R3 = J @ R2 @ Jinv
    return TriangleGroup(spec, R1, R2, R3, H, u, J)


def thompson_group(p, params, spec=None):
    """the Thompson group T(p, (rho, sigma, tau))

    Args:
        p(int): order of the reflections
        params(tuple): (rho, sigma, tau)
        spec(:obj:`GroupSpec`): optional spec to attach

    Returns:
        :obj:`TriangleGroup`: the group, without J

    Raises:
        NotHyperbolic: if det(H) >= 0
    """
    rho, sigma, tau = (as_cyc(x) for x in params)
    if spec is None:
        spec = GroupSpec('thompson', p, (rho, sigma, tau))
    u = unit(p)
    N = lcm(u.N, rho.N, sigma.N, tau.N)
    u, rho, sigma, tau = (x.lift(N) for x in (u, rho, sigma, tau))
    ubar = u.conj()
    alpha, scale = _alpha_beta(u)
    b1, b2, b3 = scale * rho, scale * sigma, scale * tau
    zero = CycNum.rational(0, N)

    H = HermForm(Mat3([[alpha, b1, b3.conj()],
                       [b1.conj(), alpha, b2],
                       [b3, b2.conj(), alpha]]))
    _check_hyperbolic(H, spec.label)

    R1 = Mat3([[u ** 2, rho, -u * tau.conj()],
               [zero, ubar, zero],
               [zero, zero, ubar]], unimodular=True)
    R2 = Mat3([[ubar, zero, zero],
               [-u * rho.conj(), u ** 2, sigma],
               [zero, zero, ubar]], unimodular=True)
    R3 = Mat3([[ubar, zero, zero],
               [zero, ubar, zero],
               [tau, -u * sigma.conj(), u ** 2]], unimodular=True)
    return TriangleGroup(spec, R1, R2, R3, H, u)


def mostow_tau(p, t):
    """tau = exp(pi i (3/2 + 1/3p - t/3)) for Mostow's group Gamma(p, t)

    The sign of the 1/3p term goes with u = exp(2 pi i/3p) in R1. Since P has
    eigenvalues tau and +-sqrt(-conj(tau)), o(P) is the least even k with
    k(1 + 3e)/4 an integer, e.g. 4 for Gamma(5, 7/10).
    """
    e = Fraction(3, 2) + Fraction(1, 3 * p) - as_fraction(t) / 3
    return root_of_unity(2 * e.denominator, e.numerator)


def mostow_group(p, t, spec=None):
    """Mostow's group Gamma(p, t), the sporadic construction with tau on the
    Mostow curve

    Example:
        >>> import hypershell as hs
        >>> G = hs.mostow_group(5, hs.Fraction(7, 10))
        >>> hs.proj_order(G.P, 100)
        4
    """
    t = as_fraction(t)
    if spec is None:
        spec = GroupSpec('mostow', p, t=t)
    return sporadic_group(p, mostow_tau(p, t), spec=spec)


################################################################################
#                           parameters and curves
################################################################################
TriangleParams = namedtuple('TriangleParams',
                            ['rho2', 'sigma2', 'tau2', 'product'])
"""the invariants (|rho|^2, |sigma|^2, |tau|^2, rho*sigma*tau) of a triple of
reflections; rho, sigma and tau themselves depend on a choice of polar
vectors"""


def triangle_params(R1, R2, R3, H, u):
    """recovers the invariants of a triple of reflections of angle 2pi/p

    The polar vectors n_i are the u^2 eigenvectors of R_i, and
    rho = (u^2 - conj(u)) <n2,n1> / sqrt(<n1,n1><n2,n2>), with sigma and tau
    defined from (n2, n3) and (n3, n1) the same way.

    Args:
        R1,R2,R3(:obj:`Mat3`): complex reflections of angle 2pi/p
        H(:obj:`HermForm`): invariant form
        u(:obj:`CycNum`): exp(2 pi i/3p)

    Returns:
        :obj:`TriangleParams`: (|rho|^2, |sigma|^2, |tau|^2, rho sigma tau)

    Raises:
        EigenvectorError: if some R_i does not have u^2 as a simple eigenvalue
    """
    N = lcm(R1.N, R2.N, R3.N, H.N, u.N)
    u = u.lift(N)
    n1, n2, n3 = (eigenvector(R.lift(N), u ** 2) for R in (R1, R2, R3))
    norms = [H.norm(n) for n in (n1, n2, n3)]
    scale = u ** 2 - u.conj()
    a2 = scale.abs2()

    i21, i32, i13 = H.inner(n2, n1), H.inner(n3, n2), H.inner(n1, n3)
    rho2 = a2 * i21.abs2() / (norms[0] * norms[1])
    sigma2 = a2 * i32.abs2() / (norms[1] * norms[2])
    tau2 = a2 * i13.abs2() / (norms[2] * norms[0])
    product = scale ** 3 * i21 * i32 * i13 / (norms[0] * norms[1] * norms[2])
    return TriangleParams(rho2, sigma2, tau2, product)


def params_of(T):
    """the TriangleParams of an explicit (rho, sigma, tau)"""
    rho, sigma, tau = (as_cyc(x) for x in T)
    return TriangleParams(rho.abs2(), sigma.abs2(), tau.abs2(),
                          rho * sigma * tau)


def dm_exponents(p, t):
    """Deligne-Mostow exponents of the hypergeometric monodromy group
    isomorphic to Gamma(p, t)

    Example:
        >>> import hypershell as hs
        >>> hs.dm_exponents(4, hs.Fraction(1, 4))
        (Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
    """
    t = as_fraction(t)
    half = Fraction(1, 2) - Fraction(1, p)
    base = Fraction(1, 4) + Fraction(3, 2 * p)
    return (half, half, half, base - t / 2, base + t / 2)


def on_mostow_curve(tau):
    """True iff tau = -exp(i phi/3) for some phi, i.e. -tau is a root of
    unity"""
    tau = as_cyc(tau)
    if tau.abs2() != 1:
        return False
    return unit_root_angle(-tau) is not None


def on_sauter_curve(tau):
    """True iff tau = exp(i phi/6) 2cos(phi/2) with phi a rational multiple
    of pi

    Writing eta = exp(i phi/6) the condition reads tau = eta^4 + conj(eta)^2;
    eta is searched among the roots of unity of order dividing lcm(12, 6N).
    """
    tau = as_cyc(tau)
    M = lcm(12, 6 * tau.N)
    target = tau.lift(M).key()
    for k in range(M):
        candidate = root_of_unity(M, 4 * k) + root_of_unity(M, -2 * k)
        if candidate.lift(M).key() == target:
            return True
    return False


def e2_symmetry(G):
    """the extra order three symmetry S of T(p, E2)

    S fixes e1, sends e2 to a multiple of e3 and e3 to a multiple of
    R3^-1 e2, so that it conjugates R1 -> R1, R2 -> R3 and
    R3 -> R3^-1 R2 R3.

    Raises:
        HermitianError: if S does not preserve the form or the conjugation
            identities fail
    """
    N = G.N
    H = G.H
    e1, e2, e3 = (G.polar_vector(i) for i in (1, 2, 3))
    Hd = H.H.data
    lam2 = Hd[0, 1] / Hd[0, 2]
    v3 = G.R3.inverse() @ e2
    lam3 = Hd[0, 2] / H.inner(v3, e1)

    cols = [e1, e3 * lam2, v3 * lam3]
    S = Mat3([[cols[j][i] for j in range(3)] for i in range(3)]).lift(N)

    if not H.preserved_by(S):
        msg = "the E2 symmetry does not preserve the form of {}".format(G.label)
        FAMILIES_LOGGER.error(msg)
        raise HermitianError(msg)

    Sinv = S.inverse()
    R3inv = G.R3.inverse()
    checks = [(S @ G.R1 @ Sinv, G.R1),
              (S @ G.R2 @ Sinv, G.R3),
              (S @ G.R3 @ Sinv, R3inv @ G.R2 @ G.R3)]
    if not all(a == b for a, b in checks):
        msg = "the E2 symmetry does not permute the generators of {}".format(
                                                                    G.label)
        FAMILIES_LOGGER.error(msg)
        raise HermitianError(msg)
    return S


################################################################################
#                               square roots
################################################################################
def sqrt_cyc(d):
    """the positive square root of a positive integer d as a cyclotomic
    number

    sqrt(2) = zeta_8 + zeta_8^-1; an odd prime q is handled with the
    quadratic Gauss sum g = sum (a/q) zeta_q^a, which is sqrt(q) when
    q = 1 mod 4 and i sqrt(q) otherwise.

    Example:
        >>> import hypershell as hs
        >>> hs.sqrt_cyc(6) ** 2 == 6
        True
    """
    d = int(d)
    if d <= 0:
        msg = "sqrt_cyc requires a positive integer, not {}".format(d)
        FAMILIES_LOGGER.error(msg)
        raise CatalogError(msg)

    out = CycNum.rational(1)
    for q, e in factorint(d).items():
        out = out * (q ** (e // 2))
        if e % 2 == 0:
            continue
        if q == 2:
            out = out * (root_of_unity(8, 1) + root_of_unity(8, -1))
            continue
        gauss = CycNum.rational(0, q)
        for a in range(1, q):
            gauss = gauss + legendre_symbol(a, q) * root_of_unity(q, a)
        if q % 4 == 3:
            gauss = gauss * -root_of_unity(4, 1)
        out = out * gauss

    if real_sign(out) < 0:
        out = -out
    return out


def field_generators(name):
    """generators (CycNums) of a named field of the catalog 'fields' table"""
    fields = _load_catalog()['fields']
    if name not in fields:
        msg = "unknown field '{}'".format(name)
        FAMILIES_LOGGER.error(msg)
        raise CatalogError(msg)

    desc = fields[name]
    if desc.get('rational'):
        return [CycNum.rational(1)]
    if 'sqrt' in desc:
        return [sqrt_cyc(d) for d in desc['sqrt']]
    if 'cos' in desc:
        n = int(desc['cos'])
        return [root_of_unity(n, 1) + root_of_unity(n, -1)]
    if 'ratio' in desc:
        num, den = desc['ratio']
        return [CycNum.from_terms(num) / CycNum.from_terms(den)]
    msg = "malformed field description for '{}'".format(name)
    FAMILIES_LOGGER.error(msg)
    raise CatalogError(msg)


def field_names():
    """names of the fields in the catalog, in file order"""
    return list(_load_catalog()['fields'].keys())


################################################################################
#                               the catalog
################################################################################
@lru_cache(maxsize=None)
def _load_catalog(path=CATALOG_PATH):
    with open(path, 'r') as f:
        return json.load(f)


ThompsonParameter = namedtuple('ThompsonParameter',
                               ['name', 'rho', 'sigma', 'tau', 'abcd',
                                'order_123', 'lattice'])
"""a named Thompson parameter with its (a,b,c;d), o(123) and lattice p"""


def _split_name(name):
    """(base key, conjugate flag) for names like 'sigmabar4', 'Hbar2',
    'sigma4bar'"""
    lowered = name.strip().lower()
    conjugate = 'bar' in lowered
    base = lowered.replace('bar', '')
    params = _load_catalog()['parameters']
    lookup = {key.lower(): key for key in params}
    if base not in lookup:
        msg = "unknown parameter name '{}'".format(name)
        FAMILIES_LOGGER.error(msg)
        raise CatalogError(msg)
    return lookup[base], conjugate


def canonical_name(name):
    """canonical spelling of a parameter name, e.g. 'sigma4bar' ->
    'sigmabar4'"""
    key, conjugate = _split_name(name)
    if not conjugate:
        return key
    match = _NAME_RE.match(key.lower())
    prefix = key[:len(match.group(1))]
    return "{}bar{}".format(prefix, match.group(2))


def named_parameter(name):
    """value of a named parameter: a CycNum for the sporadic table
    (sigma1 ... sigma11) and a (rho, sigma, tau) triple for Thompson names
    (S1, S2, E1, E2, H1, H2, S3, S4, S5, E3); 'bar' conjugates

    Example:
        >>> import hypershell as hs
        >>> hs.named_parameter('sigma10') ** 2 == hs.named_parameter('sigma10') + 1
        True
    """
    key, conjugate = _split_name(name)
    raw = _load_catalog()['parameters'][key]
    if raw['kind'] == 'tau':
        value = CycNum.from_terms(raw['terms'])
        return value.conj() if conjugate else value
    triple = tuple(CycNum.from_terms(raw[k]) for k in ('rho', 'sigma', 'tau'))
    if conjugate:
        triple = tuple(x.conj() for x in triple)
    return triple


def thompson_parameter(name):
    """the ThompsonParameter record of a Thompson name"""
    key, conjugate = _split_name(name)
    raw = _load_catalog()['parameters'][key]
    if raw['kind'] != 'thompson':
        msg = "'{}' is not a Thompson parameter".format(name)
        FAMILIES_LOGGER.error(msg)
        raise CatalogError(msg)
    rho, sigma, tau = named_parameter(name)
    return ThompsonParameter(canonical_name(name), rho, sigma, tau,
                             tuple(raw['abcd']), raw['order_123'],
                             tuple(raw['lattice']))


def _rows(block, variables):
    rows = []
    for raw in block.get('combinatorics', []):
        base = _evaluate_int(raw['base'], variables)
        count = _evaluate_int(raw['count'], variables)
        if base == 2:
            # commuting pair, no pyramid
            continue
        rows.append(CombinatoricsRow(base, raw['rep'], count,
                                     tuple(raw.get('truncated', ())),
                                     tuple(raw.get('ideal', ()))))
    return rows


def _evaluate_int(value, variables):
    if isinstance(value, int):
        return value
    return int(sympify(value).subs(variables))


def _stabilizer_rows(entry):
    return [StabilizerRow(s['vertex'], tuple(s['gens']), s['order'],
                          bool(s.get('starred', False)))
            for s in entry.get('stabilizers', [])]


def _failure(entry):
    raw = entry.get('failure')
    if raw is None:
        return None
    angle = raw.get('angle')
    return Failure(raw['kind'], raw.get('word'),
                   None if angle is None else Fraction(angle))


@lru_cache(maxsize=None)
def _catalog_entries():
    data = _load_catalog()
    entries = []
    for block in data['families']:
        family = block['family']
        if family == 'mostow':
            entries.extend(_mostow_entries(block))
            continue

        name = canonical_name(block['parameter'])
        parameter = named_parameter(name)
        lattice = [e['p'] for e in block['entries']]
        for raw in block['entries']:
            variables = {'p': raw['p']}
            entries.append(CatalogEntry(
                    family, raw['p'], parameter, name,
                    chi=raw['chi'],
                    field=raw['field'],
                    cocompact=raw['cocompact'],
                    na=raw['na'],
                    type_string=block['type'],
                    lattice=lattice,
                    presentation=block['presentation'],
                    combinatorics=_rows(block, variables),
                    stabilizers=_stabilizer_rows(raw),
                    failure=_failure(raw),
                    alternate=raw.get('alternate'),
                    variables=variables))
    return tuple(entries)


def _mostow_entries(block):
    entries = []
    for raw in block['entries']:
        order_P = raw['oP']
        k = order_P // 2
        variables = {'p': raw['p'], 'k': k}
        entries.append(CatalogEntry(
                'mostow', raw['p'], t=Fraction(raw['t']),
                chi=raw['chi'],
                field=raw['field'],
                cocompact=raw['cocompact'],
                na=raw['na'],
                type_string="3,3,3;{0},{0},{0};{1}".format(k, order_P),
                lattice=[e['p'] for e in block['entries']
                         if e['oP'] == order_P and 'failure' not in e],
                presentation=block['presentation'],
                combinatorics=_rows(block, variables),
                failure=_failure(raw),
                alternate=raw.get('alternate'),
                order_P=order_P,
                variables=variables))
    return entries


def catalog(family=None, parameter=None):
    """all catalog entries, optionally filtered by family and parameter name

    Example:
        >>> import hypershell as hs
        >>> [e.p for e in hs.catalog('sporadic', 'sigma10')]
        [3, 4, 5, 10]
    """
    entries = list(_catalog_entries())
    if family is not None:
        if family not in FAMILIES:
            msg = "unknown family filter '{}'".format(family)
            FAMILIES_LOGGER.error(msg)
            raise CatalogError(msg)
        entries = [e for e in entries if e.family == family]
    if parameter is not None:
        name = canonical_name(parameter)
        entries = [e for e in entries if e.name == name]
    return entries


def parse_label(label):
    """GroupSpec for a label such as 'S(4,sigma1)', 'T(5,Hbar2)' or
    'Gamma(7,3/14)'; catalog entries are returned with their annotations

    Raises:
        CatalogError: for malformed labels or unknown parameter names
    """
    match = _LABEL_RE.match(label)
    if match is None:
        msg = "malformed group label '{}'".format(label)
        FAMILIES_LOGGER.error(msg)
        raise CatalogError(msg)

    letter, p, arg = match.groups()
    p = int(p)
    letter = letter.upper()
    if letter in ('G', 'GAMMA'):
        try:
            spec = GroupSpec('mostow', p, t=Fraction(arg))
        except ValueError:
            msg = "bad Mostow phase '{}' in '{}'".format(arg, label)
            FAMILIES_LOGGER.error(msg)
            raise CatalogError(msg)
    else:
        family = 'sporadic' if letter == 'S' else 'thompson'
        name = canonical_name(arg)
        spec = GroupSpec(family, p, named_parameter(name), name)
        kind = _load_catalog()['parameters'][_split_name(name)[0]]['kind']
        if (kind == 'tau') != (family == 'sporadic'):
            msg = "parameter '{}' does not belong to the {} family".format(
                                                                arg, family)
            FAMILIES_LOGGER.error(msg)
            raise CatalogError(msg)

    for entry in _catalog_entries():
        if entry.label == spec.label:
            return entry
    return spec


def build_group(label):
    """parses a label and constructs its group"""
    spec = label if isinstance(label, GroupSpec) else parse_label(label)
    FAMILIES_LOGGER.debug("building {}".format(spec.label))
    return spec.build()

