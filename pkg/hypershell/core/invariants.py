# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
"""Commensurability invariants of triangle groups

Adjoint trace fields are handled through their Galois stabilizers: a real
number x of Q(zeta_N) generates the subfield fixed by
Stab(x) = {k : sigma_k(x) = x}, of degree phi(N)/|Stab(x)|. Two subfields of
cyclotomic fields are equal iff their stabilizers agree once both are seen in
a common Q(zeta_M).
"""
from ..Logger import get_logger
from .cyclo import (as_cyc, field_degree, galois_group, min_poly,
                    real_interval, real_sign)
from .Exceptions import (CatalogError, HermitianError, PreconditionUnmet,
                         RelationError)
from .families import (GroupSpec, TriangleParams, build_group, field_generators,
                       field_names, parse_label, triangle_params, unit)
from .hlinalg import Mat3, classify, proj_equal, proj_order
from .realize import NOT_EMBEDDED, fixed_point, fixed_point_incidences
from .realize import polar_vector
from .util import fraction_str, lcm, timer_ms
from .words import parse_word

from collections import OrderedDict, namedtuple
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
from sympy import sympify, zoo

INVARIANTS_LOGGER = get_logger('invariants')


################################################################################
#                               control traces
################################################################################
def _parameters(G):
    """(rho, sigma, tau) of a group, lifted to its conductor"""
    if G.spec.family == 'thompson':
        rho, sigma, tau = G.spec.parameter
    else:
        rho = sigma = tau = G.spec.parameter
    return tuple(as_cyc(x, G.N) for x in (rho, sigma, tau))


ControlTraces = namedtuple('ControlTraces', ['traces', 'residuals'])
"""matrix traces of the control words and their differences against the
closed forms in rho, sigma, tau and u"""

CONTROL_WORDS = ('12', '23', '31', '1-323', '123', '321')


def control_traces(G):
    """traces of R1R2, R2R3, R3R1, R1R3^-1R2R3, R1R2R3 and R3R2R1

    Every residual is exactly zero for a correctly built group.

    Example:
        >>> import hypershell as hs
        >>> G = hs.build_group('S(4,sigma1)')
        >>> all(r.is_zero() for r in hs.control_traces(G).residuals.values())
        True
    """
    rho, sigma, tau = _parameters(G)
    u = G.u
    ubar = u.conj()

    def pair(x):
        return u * (2 - x.abs2()) + ubar ** 2

    mu = 3 - rho.abs2() - sigma.abs2() - tau.abs2()
    closed = OrderedDict([
        ('12', pair(rho)),
        ('23', pair(sigma)),
        ('31', pair(tau)),
        ('1-323', pair(sigma * tau - rho.conj())),
        ('123', mu + rho * sigma * tau),
        ('321', mu - u ** 3 * (rho * sigma * tau).conj()),
    ])

    traces = OrderedDict()
    residuals = OrderedDict()
    for word in CONTROL_WORDS:
        traces[word] = G.evaluate(word).trace()
        residuals[word] = traces[word] - closed[word]
        if not residuals[word].is_zero():
            INVARIANTS_LOGGER.warning(
                "{}: trace of {} differs from its closed form".format(
                                                            G.label, word))
    return ControlTraces(traces, residuals)


################################################################################
#                               trace fields
################################################################################
def stabilizer(x, N=None):
    """frozenset of the k in (Z/N)^* fixing x"""
    N = x.N if N is None else N
    x = as_cyc(x, N)
    return frozenset(k for k in galois_group(N) if x.galois(k) == x)


def _joint_stabilizer(numbers, N):
    out = frozenset(galois_group(N))
    for x in numbers:
        out &= stabilizer(x, N)
    return out


def _with_conjugation(stab, N):
    """closure of a subgroup under k -> -k"""
    return stab | frozenset((-k) % N for k in stab)


@lru_cache(maxsize=None)
def _field_conductor(name):
    return lcm(*[g.N for g in field_generators(name)])


@lru_cache(maxsize=None)
def _named_stabilizer(name, M):
    return _joint_stabilizer(field_generators(name), M)


def match_field(x):
    """name of the catalog field generated by the real number x, or None

    Example:
        >>> import hypershell as hs
        >>> hs.match_field(3 * (11 + 2 * hs.sqrt_cyc(6)))
        'Q(sqrt6)'
    """
    x = as_cyc(x)
    for name in field_names():
        M = lcm(x.N, _field_conductor(name))
        if stabilizer(x, M) == _named_stabilizer(name, M):
            return name
    return None


class TraceFieldResult(namedtuple('TraceFieldResult',
                                  ['generator', 'source', 'min_poly', 'degree',
                                   'name', 'upper_degree', 'conductor',
                                   'stabilizer'])):
    """the adjoint trace field of a group

    Attributes:
        generator(:obj:`CycNum`): real generator of the field
        source(str): '|tr(321)|^2', '|tr(1)|^2' or 'joint'
        min_poly(:obj:`sympy.Poly`): minimal polynomial of the generator
        degree(int): degree of the field
        name(str): matching catalog field name or None
        upper_degree(int): degree of the real subfield of Q(rho sigma tau, a)
        conductor(int): conductor the stabilizer is computed in
        stabilizer(frozenset): Galois stabilizer of the field
    """
    @property
    def sharp(self):
        """True iff the lower bound reaches the upper bound"""
        return self.degree == self.upper_degree

    def to_json(self):
        return {'generator': self.generator.to_json(),
                'source': self.source,
                'min_poly': str(self.min_poly.as_expr()),
                'degree': self.degree,
                'name': self.name,
                'upper_degree': self.upper_degree,
                'sharp': self.sharp}


def trace_field(G):
    """adjoint trace field of G, Q(|tr(R3R2R1)|^2) when that is large enough

    The field is squeezed between Q(|a+2|^2, |tr(R3R2R1)|^2) and the real
    subfield of Q(rho sigma tau, a), a = u^3. Generators are tried in the
    order |tr(R3R2R1)|^2, |tr(R1)|^2, then a combination of the two.

    Example:
        >>> import hypershell as hs
        >>> hs.trace_field(hs.build_group('S(4,sigmabar4)')).name
        'Q(sqrt7)'
    """
    N = G.N
    phi = field_degree(N)
    rho, sigma, tau = _parameters(G)
    a = G.u ** 3
    upper = _with_conjugation(_joint_stabilizer([rho * sigma * tau, a], N), N)
    upper_degree = phi // len(upper)

    x = G.evaluate('321').trace().abs2()
    y = G.R1.trace().abs2()
    candidates = [('|tr(321)|^2', x), ('|tr(1)|^2', y)]

    chosen = None
    for source, value in candidates:
        stab = stabilizer(value, N)
        if phi // len(stab) == upper_degree:
            chosen = (source, value, stab)
            break

    if chosen is None:
        joint = stabilizer(x, N) & stabilizer(y, N)
        c = 1
        value = x + y
        while stabilizer(value, N) != joint:
            c += 1
            value = x + c * y
        chosen = ('joint', value, joint)
        if phi // len(joint) != upper_degree:
            INVARIANTS_LOGGER.warning(
                "{}: trace field bounds differ ({} < {})".format(
                        G.label, phi // len(joint), upper_degree))

    source, value, stab = chosen
    return TraceFieldResult(value, source, min_poly(value), phi // len(stab),
                            match_field(value), upper_degree, N, stab)


def sqrt_identity(x):
    """(50x^3 - 2040x^2 + 18414x - 18538)/2403, which squares to 14(5+sqrt5)
    when x is the trace generator of S(5, sigmabar4)"""
    x = as_cyc(x)
    return (50 * x ** 3 - 2040 * x ** 2 + 18414 * x - 18538) / 2403


################################################################################
#                               signature spectrum
################################################################################
class SignatureSpectrum(namedtuple('SignatureSpectrum',
                                   ['signatures', 'na_index'])):
    """signatures of the Galois conjugates of the invariant form

    Attributes:
        signatures(list): (k, (n+, n0, n-)) per automorphism of the trace
            field, identity first
        na_index(int): number of nontrivial automorphisms with an indefinite
            conjugate form
    """
    @property
    def arithmetic(self):
        return self.na_index == 0

    @property
    def flag(self):
        return 'A' if self.arithmetic else 'NA({})'.format(self.na_index)

    def to_json(self):
        return {'signatures': [[k, list(sig)] for k, sig in self.signatures],
                'na_index': self.na_index,
                'arithmetic': self.arithmetic}


def _indefinite(sig):
    return sig[0] > 0 and sig[2] > 0


def signature_spectrum(G, field=None):
    """signature spectrum and non-arithmeticity index of G

    One automorphism is taken per coset of the trace field stabilizer, the
    smallest k of the coset.

    Example:
        >>> import hypershell as hs
        >>> hs.signature_spectrum(hs.build_group('S(4,sigmabar4)')).na_index
        1
    """
    field = trace_field(G) if field is None else field
    N = field.conductor
    stab = field.stabilizer

    covered = set()
    signatures = []
    for k in sorted(galois_group(N)):
        if k in covered:
            continue
        covered.update((k * s) % N for s in stab)
        signatures.append((k, G.H.galois(k).signature()))

    na = sum(1 for k, sig in signatures[1:] if _indefinite(sig))
    if signatures[0][1] != (2, 0, 1):
        msg = "{}: the invariant form has signature {}".format(G.label,
                                                               signatures[0][1])
        INVARIANTS_LOGGER.error(msg)
        raise HermitianError(msg)
    return SignatureSpectrum(signatures, na)


################################################################################
#                               cocompactness
################################################################################
def is_cocompact(G, realization):
    """True iff no realized vertex of the shell lies on the boundary"""
    ideal = realization.ideal_vertices
    if ideal:
        INVARIANTS_LOGGER.debug("{}: {} ideal vertices".format(G.label,
                                                              len(ideal)))
    return not ideal


################################################################################
#                               cusp bounds
################################################################################
def parabolic_tau_norm(p):
    """|tau|^2 = 2 - u^3 - conj(u)^3 making R1 R2 parabolic

    Example:
        >>> import hypershell as hs
        >>> [hs.parabolic_tau_norm(p) for p in (3, 4, 6)]
        [3, 2, 1]
    """
    a = unit(p) ** 3
    value = 2 - a - a.conj()
    if value.is_rational():
        return value.to_fraction()
    return value


# p -> (power of R1R2, q)
_CUSP_POWERS = {3: (3, 1), 4: (2, 2), 6: (3, 1)}


class CuspBound(namedtuple('CuspBound', ['label', 'p', 'q', 'm', 'translation',
                                         'volume', 'index', 'verified'])):
    """bounds attached to the cusp of R1 R2

    Attributes:
        label(str): group label
        p,q,m(int): reflection order, power parameter and m = p
        translation(:obj:`CycNum`): the entry X of the vertical translation
        volume(:obj:`CycNum`): upper bound (q/2p)|X|^2 on the cusp volume
        index(:obj:`CycNum`): upper bound 4 * volume on the index
        verified(bool): (R1R2)^k equals the closed form T12 up to its scalar
    """
    def interval(self, bits=64):
        return real_interval(self.index, bits)

    def below(self, n):
        """certified index < n"""
        return real_sign(n - self.index) > 0

    def to_json(self):
        approx = float(self.interval())
        return {'p': self.p, 'q': self.q, 'm': self.m,
                'volume': self.volume.to_json(),
                'index': self.index.to_json(),
                'index_approx': approx,
                'verified': self.verified}


def vertical_translation(p, tau):
    """the upper unitriangular T12 whose (1,3) entry is
    X = (2+u^6)((u^5-u^2) conj(tau) + u^2 tau^2)"""
    u = unit(p)
    tau = as_cyc(tau)
    N = lcm(u.N, tau.N)
    u, tau = u.lift(N), tau.lift(N)
    X = (2 + u ** 6) * ((u ** 5 - u ** 2) * tau.conj() + u ** 2 * tau ** 2)
    return Mat3([[1, 0, X], [0, 1, -X.conj()], [0, 0, 1]]).lift(N)


def cusp_bounds(G):
    """cusp volume and index bounds for symmetric groups with R1 R2 parabolic

    Raises:
        PreconditionUnmet: if G is not symmetric, p is not 3, 4 or 6, or
            |tau|^2 does not make R1 R2 parabolic

    Example:
        >>> import hypershell as hs
        >>> bound = hs.cusp_bounds(hs.build_group('Gamma(6,1/6)'))
        >>> bound.index == 2 + hs.sqrt_cyc(3)
        True
    """
    p = G.p
    if not G.symmetric or p not in _CUSP_POWERS:
        msg = "{}: cusp bounds need a symmetric group with p in {}".format(
                                                G.label, sorted(_CUSP_POWERS))
        INVARIANTS_LOGGER.error(msg)
        raise PreconditionUnmet(msg)

    tau = G.P.trace()
    if tau.abs2() != parabolic_tau_norm(p):
        msg = "{}: R1R2 is not parabolic (|tau|^2 = {})".format(G.label,
                                                             tau.abs2())
        INVARIANTS_LOGGER.error(msg)
        raise PreconditionUnmet(msg)

    k, q = _CUSP_POWERS[p]
    T = (G.R1 @ G.R2) ** k
    scale = T[2, 2]
    unipotent = T * scale.inverse()
    T12 = vertical_translation(p, tau)
    verified = unipotent == T12.lift(unipotent.N)
    if not verified:
        INVARIANTS_LOGGER.warning(
            "{}: (R1R2)^{} does not match the closed form translation".format(
                                                                G.label, k))
    translation = unipotent[0, 2]
    volume = Fraction(q, 2 * p) * translation.abs2()
    return CuspBound(G.label, p, q, p, translation, volume, 4 * volume,
                     verified)


def reflection_volume_bound(n, mirror_volume, orthogonal_case=True):
    """lower bound on the volume of a lattice containing a reflection of
    order n whose mirror has stabilizer quotient of volume `mirror_volume`

    The bound is pi (1 - 2 sin(pi/n)) / (2 n sin(pi/n)) * V, twice that when
    no image of the mirror is orthogonal to it. At n = 6 the bound is zero
    and says nothing, so n must be at least 7.

    Returns:
        :obj:`mpmath.iv.mpf`: an interval enclosing the bound

    Raises:
        PreconditionUnmet: for n < 7
    """
    n = int(n)
    if n < 7:
        msg = "reflection volume bound needs n >= 7, not {}".format(n)
        INVARIANTS_LOGGER.error(msg)
        raise PreconditionUnmet(msg)

    V = mp.iv.mpf(mirror_volume)
    s = mp.iv.sin(mp.iv.pi / n)
    bound = mp.iv.pi * (1 - 2 * s) / (2 * n * s) * V
    if not orthogonal_case:
        bound = 2 * bound
    return bound


def chi_bound(volume):
    """3/(8 pi^2) * volume, the Euler characteristic of that volume"""
    return 3 * mp.iv.mpf(volume) / (8 * mp.iv.pi ** 2)


################################################################################
#                               commensurability screen
################################################################################
COMMENSURABLE = 'Commensurable'
DISTINGUISHED = 'Distinguished'
INDEX_OBSTRUCTION = 'IndexObstruction'
INCONCLUSIVE = 'Inconclusive'


class ScreenVerdict(namedtuple('ScreenVerdict',
                               ['kind', 'reasons', 'd_min', 'd_max'])):
    """outcome of commensurability_screen; d_min and d_max are only set for
    index obstructions and inconclusive index comparisons"""
    def to_json(self):
        return {'verdict': self.kind,
                'reasons': list(self.reasons),
                'd_min': self.d_min,
                'd_max': None if self.d_max is None else self.d_max.to_json()}


def _entry(label):
    if isinstance(label, GroupSpec):
        return label
    entry = parse_label(label)
    if not hasattr(entry, 'chi'):
        msg = "'{}' is not a catalog entry".format(label)
        INVARIANTS_LOGGER.error(msg)
        raise CatalogError(msg)
    return entry


def same_trace_field(f1, f2):
    """True iff two TraceFieldResults describe the same subfield of C

    Each stabilizer is lifted to (Z/L)^*, L the lcm of the two conductors;
    equal lifts fix the same field.
    """
    L = lcm(f1.conductor, f2.conductor)

    def lift(field):
        N = field.conductor
        return frozenset(k for k in galois_group(L)
                         if N <= 2 or k % N in field.stabilizer)

    return f1.degree == f2.degree and lift(f1) == lift(f2)


def _field_str(field):
    return field.name or str(field.min_poly.as_expr())


def minimal_index(chi1, chi2):
    """least d1 compatible with chi1/d1 = chi2/d2: the numerator of the
    reduced ratio chi1/chi2

    Example:
        >>> import hypershell as hs
        >>> hs.minimal_index(hs.Fraction(2, 9), hs.Fraction(43, 72))
        16
    """
    return (Fraction(chi1) / Fraction(chi2)).numerator


@timer_ms
def commensurability_screen(e1, e2):
    """compares two catalog entries by their commensurability invariants

    Distinct trace fields, cocompactness or non-arithmeticity index
    distinguish the two groups. Trace fields are computed from the built
    groups and compared through their Galois stabilizers. Otherwise, when both are cusped and one of
    them has a cusp index bound, the orbifold Euler characteristics bound the
    index of that group in a common overgroup from below.

    Returns:
        :obj:`ScreenVerdict`: the verdict

    Raises:
        CatalogError: if an entry has no Euler characteristic
    """
    e1, e2 = _entry(e1), _entry(e2)
    for e in (e1, e2):
        if not getattr(e, 'chi', 0):
            msg = "{} has no orbifold Euler characteristic".format(e.label)
            INVARIANTS_LOGGER.error(msg)
            raise CatalogError(msg)

    if e1.label == e2.label:
        return ScreenVerdict(COMMENSURABLE, ['identical groups'], None, None)

    reasons = []
    f1, f2 = trace_field(build_group(e1)), trace_field(build_group(e2))
    if not same_trace_field(f1, f2):
        reasons.append("trace field {} vs {}".format(_field_str(f1),
                                                     _field_str(f2)))
    if e1.cocompact != e2.cocompact:
        reasons.append("cocompactness {} vs {}".format(
                        'C' if e1.cocompact else 'NC',
                        'C' if e2.cocompact else 'NC'))
    if e1.na_index != e2.na_index:
        reasons.append("non-arithmeticity index {} vs {}".format(e1.na_index,
                                                                 e2.na_index))
    if reasons:
        return ScreenVerdict(DISTINGUISHED, reasons, None, None)

    if e1.cocompact:
        return ScreenVerdict(INCONCLUSIVE, ['invariants agree'], None, None)

    for first, second in ((e1, e2), (e2, e1)):
        try:
            bound = cusp_bounds(build_group(first))
        except PreconditionUnmet:
            continue
        d_min = minimal_index(first.chi, second.chi)
        reason = "chi {} vs {}: index of {} is at least {}".format(
                    fraction_str(first.chi), fraction_str(second.chi),
                    first.label, d_min)
        if bound.below(d_min):
            return ScreenVerdict(INDEX_OBSTRUCTION, [reason], d_min,
                                 bound.index)
        return ScreenVerdict(INCONCLUSIVE, [reason], d_min, bound.index)

    return ScreenVerdict(INCONCLUSIVE, ['invariants agree, no cusp bound'],
                         None, None)


################################################################################
#                               presentations
################################################################################
PASS = 'pass'
FAIL = 'fail'
INFINITE = 'infinite'
VACUOUS = 'vacuous'

RelationCheck = namedtuple('RelationCheck', ['relation', 'status', 'detail'])


def _alternating(A, B, n):
    out = Mat3.identity(A.N)
    for i in range(n):
        out = out @ (A if i % 2 == 0 else B)
    return out


def relation_text(relation):
    if 'order' in relation:
        return "({})^({})".format(relation['order'], relation['exp'])
    if 'equal' in relation:
        return "{} = {}".format(*relation['equal'])
    n, a, b = relation['braid']
    return "br{}({},{})".format(n, a, b)


def relation_exponent(expr, variables):
    """value of a presentation exponent: an int, INFINITE or a negative int

    Raises:
        RelationError: if the value is not an integer
    """
    value = sympify(str(expr)).subs(variables)
    if value == zoo or value.is_infinite:
        return INFINITE
    if not value.is_integer:
        msg = "exponent {} = {} is not an integer".format(expr, value)
        INVARIANTS_LOGGER.error(msg)
        raise RelationError(msg)
    return int(value)


def verify_relations(G, relations=None, variables=None):
    """checks presentation relations in G

    Relations are dictionaries {'order': word, 'exp': expression},
    {'equal': [word1, word2]} or {'braid': [n, word1, word2]}, defaulting to
    the presentation of the catalog entry G was built from. Exponents are
    evaluated with `variables` (by default the entry's, p and k); infinite
    exponents are skipped and negative ones reported as vacuous together
    with the classification of the element.

    Returns:
        list: RelationCheck per relation
    """
    spec = G.spec
    if relations is None:
        relations = getattr(spec, 'presentation', [])
    if variables is None:
        variables = getattr(spec, 'variables', {'p': G.p})

    out = []
    for relation in relations:
        text = relation_text(relation)
        if 'order' in relation:
            A = G.evaluate(relation['order'])
            try:
                n = relation_exponent(relation['exp'], variables)
            except RelationError as err:
                # the relation does not specialize to this p
                out.append(RelationCheck(text, VACUOUS, str(err)))
                continue
            if n is INFINITE:
                out.append(RelationCheck(text, INFINITE,
                                         repr(classify(A, G.H))))
                continue
            if n < 0:
                out.append(RelationCheck(text, VACUOUS,
                                         "exponent {}, {!r}".format(
                                                    n, classify(A, G.H))))
                continue
            ok = (A ** n).is_scalar()
            detail = "exponent {}".format(n)
        elif 'equal' in relation:
            w1, w2 = relation['equal']
            ok = proj_equal(G.evaluate(w1), G.evaluate(w2))
            detail = ''
        else:
            n, w1, w2 = relation['braid']
            A, B = G.evaluate(w1), G.evaluate(w2)
            ok = proj_equal(_alternating(A, B, n), _alternating(B, A, n))
            detail = ''

        if not ok:
            INVARIANTS_LOGGER.warning("{}: relation {} fails".format(G.label,
                                                                    text))
        out.append(RelationCheck(text, PASS if ok else FAIL, detail))
    return out


################################################################################
#                               known failures
################################################################################
FailureCheck = namedtuple('FailureCheck', ['kind', 'reproduced', 'detail'])


def reflection_angle(G, word):
    """(IsometryType, angle) of a word expected to be a complex reflection"""
    kind = classify(G.evaluate(word), G.H)
    return kind, kind.angle if kind.is_reflection else None


def _angle_matches(angle, expected):
    if angle is None:
        return False
    expected = Fraction(expected)
    return angle in (expected % 2, (-expected) % 2)


def check_failure(G, failure, shell=None, realization=None):
    """checks that the documented failure of the shell algorithm occurs

    Args:
        G(:obj:`TriangleGroup`): the group
        failure(:obj:`Failure`): the catalog failure record
        shell(:obj:`Shell`, None): built shell, if any
        realization(:obj:`ShellRealization`, None): realized shell, needed
            for 'not_embedded'

    Returns:
        :obj:`FailureCheck`: whether the failure was reproduced
    """
    kind = failure.kind
    if kind == 'not_embedded':
        if realization is None:
            msg = "{}: embeddedness needs a realized shell".format(G.label)
            INVARIANTS_LOGGER.error(msg)
            raise PreconditionUnmet(msg)
        bad = sorted(label for label, status in realization.embedded.items()
                     if status == NOT_EMBEDDED)
        return FailureCheck(kind, bool(bad), ", ".join(bad))

    if kind == 'fixed_point_on_ridge':
        p0 = fixed_point(G)
        found = []
        if failure.word is not None:
            normal = polar_vector(G.evaluate(failure.word))
            if G.H.inner(p0, normal).is_zero():
                found.append(failure.word)
        if shell is not None:
            found.extend(fixed_point_incidences(shell, G))
        return FailureCheck(kind, bool(found), ", ".join(found))

    if kind == 'cycle_reflection':
        iso, angle = reflection_angle(G, failure.word)
        ok = _angle_matches(angle, failure.angle)
        detail = "{} is {!r}".format(failure.word, iso)
        return FailureCheck(kind, ok, detail)

    if kind == 'cycle_fixed_point':
        A = G.evaluate(failure.word)
        p0 = fixed_point(G)
        fixes = (A @ p0).proportional(p0)
        Q = G.Q
        order = proj_order(Q)
        power = Mat3.identity(G.N)
        in_center = False
        for _ in range(order if isinstance(order, int) else 0):
            if proj_equal(A, power):
                in_center = True
                break
            power = power @ Q
        ok = fixes and not in_center
        detail = "{} fixes p0: {}, power of Q: {}".format(failure.word, fixes,
                                                          in_center)
        return FailureCheck(kind, ok, detail)

    msg = "unknown failure kind '{}'".format(kind)
    INVARIANTS_LOGGER.error(msg)
    raise CatalogError(msg)


################################################################################
#                               isomorphisms
################################################################################
Isomorphism = namedtuple('Isomorphism', ['source', 'words', 'target'])
"""generators (words in the source group) of a triangle group conjugate to
the standard generators of the target"""

ISOMORPHISMS = (
    Isomorphism('S(4,sigmabar4)', ('-323', '23-2', '1'), 'T(4,S1)'),
    Isomorphism('S(4,sigma1)', ('232-3-2', '1-3-2323-1', '1'), 'T(4,E1)'),
    Isomorphism('Gamma(7,9/14)', ('1', '-21-212-12', '3'), 'T(7,Hbar1)'),
    Isomorphism('Gamma(5,7/10)', ('1', '-232', '2'), 'T(5,Hbar2)'),
)


IsomorphismCheck = namedtuple('IsomorphismCheck',
                              ['isomorphism', 'params', 'expected', 'matches'])


def _conjugate_params(params):
    return TriangleParams(params.rho2, params.sigma2, params.tau2,
                          params.product.conj())


def check_isomorphism(iso, p=None):
    """compares the invariants of substituted generators with those of the
    target group, up to complex conjugation

    Args:
        iso(:obj:`Isomorphism`): source group, words and target group
        p(int, None): replaces the reflection order of both labels

    Returns:
        :obj:`IsomorphismCheck`: the computed and expected TriangleParams
    """
    source, target = iso.source, iso.target
    if p is not None:
        source = _with_order(source, p)
        target = _with_order(target, p)
    G = build_group(source)
    T = build_group(target)
    M1, M2, M3 = (G.evaluate(parse_word(w)) for w in iso.words)
    params = triangle_params(M1, M2, M3, G.H, G.u)
    expected = triangle_params(T.R1, T.R2, T.R3, T.H, T.u)
    matches = params == expected or params == _conjugate_params(expected)
    return IsomorphismCheck(iso, params, expected, matches)


def _with_order(label, p):
    head, rest = label.split('(', 1)
    return "{}({},{}".format(head, p, rest.split(',', 1)[1])

# END
