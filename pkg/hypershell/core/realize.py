# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
"""Geometric realization of pyramids: vertices, ideal points, embeddedness of
bottom polygons and vertex stabilizers"""
from ..Logger import get_logger
from .constants import STABILIZER_CAP, precision_bits
from .cyclo import numeric, real_interval, root_of_unity
from .Exceptions import (EigenvectorError, ExceedsCap, HermitianError,
                         HypothesisFailure, PreconditionUnmet)
from .hlinalg import (Mat3, eigenvector, proj_key, repeated_eigenvalues)
from .util import lcm, timer
from .words import parse_word

from collections import deque, namedtuple
import os

import mpmath as mp

REALIZE_LOGGER = get_logger('realize')

INSIDE = 'Inside'
IDEAL = 'Ideal'
OUTSIDE = 'Outside'

TOP = 'Top'
MID = 'Mid'
BOTTOM = 'Bottom'

SINGLE_APEX = 'SingleApex'
TRUNCATED_TOP = 'TruncatedTopNGon'
IDEAL_APEX = 'IdealApex'

EMBEDDED = 'Embedded'
NOT_EMBEDDED = 'NotEmbedded'
UNRESOLVED = 'Unresolved'

_TOP_STATUS = {SINGLE_APEX: 'apex', TRUNCATED_TOP: 'truncated',
               IDEAL_APEX: 'ideal'}

_LOCATIONS = {-1: INSIDE, 0: IDEAL, 1: OUTSIDE}


RealizedVertex = namedtuple('RealizedVertex',
                            ['vector', 'location', 'role', 'mirrors'])
"""a vertex of a realized pyramid: a Vec3 representative, its location
(Inside, Ideal or Outside), its role (Top, Mid, Bottom) and the labels of the
two objects it is cut out by"""


################################################################################
#                               polar vectors
################################################################################
def polar_vector(word):
    """polar vector of the mirror of a complex reflection, the eigenvector of
    its simple eigenvalue

    Args:
        word(:obj:`Word`, :obj:`Mat3`): the reflection
    """
    A = word.matrix if hasattr(word, 'matrix') else word
    repeated, simple = repeated_eigenvalues(A)
    if repeated == simple:
        msg = "matrix has a triple eigenvalue and is not a reflection"
        REALIZE_LOGGER.error(msg)
        raise EigenvectorError(msg)
    return eigenvector(A, simple)


class _PolarCache(object):
    def __init__(self):
        self._vectors = {}

    def __call__(self, word):
        key = word.key
        if key not in self._vectors:
            self._vectors[key] = polar_vector(word)
        return self._vectors[key]


################################################################################
#                               RealizedPyramid
################################################################################
class RealizedPyramid(object):
    """vertices of a pyramid in projective coordinates

    Attributes:
        pyramid(:obj:`Pyramid`): the source pyramid
        top(str): SingleApex, TruncatedTopNGon or IdealApex
        apex(:obj:`Vec3`): the common point of the side mirrors, a polar
            vector when the top is truncated
        chains(list): per side edge, the list of its 2 or 3 RealizedVertex
            from top to bottom
        base_polar(:obj:`Vec3`): polar vector of the base mirror
        H(:obj:`HermForm`): the form
    """
    def __init__(self, pyramid, top, apex, chains, base_polar, H):
        self.pyramid = pyramid
        self.top = top
        self.apex = apex
        self.chains = chains
        self.base_polar = base_polar
        self.H = H

    @property
    def label(self):
        return self.pyramid.label

    @property
    def top_status(self):
        """'apex', 'truncated' or 'ideal', as in the catalog rows"""
        return _TOP_STATUS[self.top]

    @property
    def bottom(self):
        """the bottom polygon, one vertex per side"""
        return [chain[-1] for chain in self.chains]

    @property
    def vertices(self):
        seen = {}
        for chain in self.chains:
            for v in chain:
                seen.setdefault(v.vector.key(), v)
        return list(seen.values())

    def __repr__(self):
        return "RealizedPyramid({}, {})".format(self.label, self.top)


def _vertex(vector, H, role, mirrors):
    location = _LOCATIONS[H.norm_sign(vector)]
    return RealizedVertex(vector, location, role, mirrors)


def realize(pyr, G, polar=None):
    """realizes the vertices of a pyramid

    The apex is the box product of the polar vectors of b_1 and b_2. For each
    side, d_k is the box product of the polar vectors of a and b_k: inside,
    d_k is the bottom vertex; outside, it is the polar vector of a complex
    line cutting the side edge in a mid vertex and the base in a bottom
    vertex.

    Raises:
        HypothesisFailure: if two of the mirrors coincide

    Example:
        >>> import hypershell as hs
        >>> G = hs.build_group('S(4,sigmabar4)')
        >>> hs.realize(hs.make_pyramid('1', '2', '3', G), G).top
        'IdealApex'
    """
    polar = _PolarCache() if polar is None else polar
    H = G.H
    a = polar(pyr.base)
    sides = [polar(s) for s in pyr.sides]
    try:
        apex = H.box(sides[0], sides[1])
        top_sign = H.norm_sign(apex)
        if top_sign < 0:
            top, tops = SINGLE_APEX, None
        elif top_sign == 0:
            top, tops = IDEAL_APEX, None
        else:
            top = TRUNCATED_TOP
            tops = [H.box(apex, b) for b in sides]

        chains = []
        for k, (b, word) in enumerate(zip(sides, pyr.sides)):
            label = word.label
            if tops is None:
                chain = [_vertex(apex, H, TOP, ('apex', label))]
            else:
                chain = [_vertex(tops[k], H, TOP, ('top', label))]
            d = H.box(a, b)
            if H.norm_sign(d) > 0:
                chain.append(_vertex(H.box(d, b), H, MID, ('d', label)))
                chain.append(_vertex(H.box(d, a), H, BOTTOM,
                                     ('d', pyr.base.label)))
            else:
                chain.append(_vertex(d, H, BOTTOM, (pyr.base.label, label)))
            chains.append(chain)
    except HermitianError:
        msg = "degenerate triangle in pyramid {}".format(pyr.label)
        REALIZE_LOGGER.error(msg)
        raise HypothesisFailure(msg, ridge=pyr.label,
                                reason='degenerate triangle')

    return RealizedPyramid(pyr, top, apex, chains, a, H)


def ideal_vertices(realized):
    """every vertex with norm exactly zero, without repetition

    Args:
        realized(list): RealizedPyramid objects
    """
    seen = {}
    for rp in realized:
        if rp.top == IDEAL_APEX:
            seen.setdefault(rp.apex.key(),
                            RealizedVertex(rp.apex, IDEAL, TOP, ('apex',)))
        for v in rp.vertices:
            if v.location == IDEAL:
                seen.setdefault(v.vector.key(), v)
    return list(seen.values())


################################################################################
#                           bottom polygon embeddedness
################################################################################
class _Undecided(Exception):
    pass


class _DiskChart(object):
    """exact chart of the base complex line

    A point x of the line is sent to w = <x,f2>/<x,f1> for an inside point
    f1 and the polar vector f2 of the line through f1 orthogonal to the base.
    The Poincare disk coordinate is r w with r^2 = -<f1,f1>/<f2,f2>, and the
    Klein coordinate is r m with m = 2w/(1 + r^2 |w|^2). Orientation tests
    in the Klein disk only need the signs of expressions in m, which are
    exact up to the positive factor r^2.
    """
    def __init__(self, rp):
        H = rp.H
        self.H = H
        f1 = self._inside_point(rp)
        f2 = H.box(rp.base_polar, f1)
        self.f1, self.f2 = f1, f2
        self.r2 = -H.norm(f1) / H.norm(f2)
        self.i = root_of_unity(4, 1)

    @staticmethod
    def _inside_point(rp):
        H = rp.H
        bottom = [v.vector for v in rp.bottom]
        for v in bottom:
            if H.norm_sign(v) < 0:
                return v
        v = bottom[0]
        w = next(x for x in bottom[1:] if not x.proportional(v))
        return v + w * (-H.inner(v, w))

    def w(self, x):
        return self.H.inner(x, self.f2) / self.H.inner(x, self.f1)

    def klein(self, x):
        w = self.w(x)
        return w * 2 / (w.abs2() * self.r2 + 1)

    def poincare(self, x, dps=30):
        """numeric Poincare disk coordinate, for plots"""
        with mp.workdps(dps):
            return numeric(self.w(x), dps) * mp.sqrt(numeric(self.r2, dps).real)

    def im(self, z):
        return (z - z.conj()) * (-self.i) / 2

    def re(self, z):
        return (z + z.conj()) / 2


def _sign(x, bits):
    if x.is_zero():
        return 0
    sign = real_interval(x, bits).sign()
    if sign is None:
        raise _Undecided()
    return sign


def _orient(chart, p, q, r, bits):
    return _sign(chart.im((q - p) * (r - p).conj()), bits)


def _between(chart, q, p, r, bits):
    """q on the closed segment pr, given that p, q, r are collinear"""
    return _sign(chart.re((q - p) * (q - r).conj()), bits) <= 0


def _segments_meet(chart, p1, p2, p3, p4, bits):
    d1 = _orient(chart, p3, p4, p1, bits)
    d2 = _orient(chart, p3, p4, p2, bits)
    d3 = _orient(chart, p1, p2, p3, bits)
    d4 = _orient(chart, p1, p2, p4, bits)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and _between(chart, p1, p3, p4, bits):
        return True
    if d2 == 0 and _between(chart, p2, p3, p4, bits):
        return True
    if d3 == 0 and _between(chart, p3, p1, p2, bits):
        return True
    if d4 == 0 and _between(chart, p4, p1, p2, bits):
        return True
    return False


def bottom_polygon_embedded(rp, precision=None):
    """decides whether the bottom polygon is an embedded circle

    Bottom edges are geodesic arcs of the base complex line. Non adjacent
    edges must be disjoint and adjacent edges may only share their common
    vertex. Signs are certified with interval evaluation at `precision` bits.

    Returns:
        str: Embedded, NotEmbedded or Unresolved
    """
    bits = precision_bits(precision)
    chart = _DiskChart(rp)
    points = [chart.klein(v.vector) for v in rp.bottom]
    n = len(points)

    keys = {p.key() for p in points}
    if len(keys) < n:
        return NOT_EMBEDDED

    try:
        for i in range(n):
            prev, here, nxt = points[i - 1], points[i], points[(i + 1) % n]
            # adjacent edges folding back onto each other
            if (n > 2 and _orient(chart, prev, here, nxt, bits) == 0
                    and not _between(chart, here, prev, nxt, bits)):
                return NOT_EMBEDDED

        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                if _segments_meet(chart, points[i], points[(i + 1) % n],
                                  points[j], points[(j + 1) % n], bits):
                    REALIZE_LOGGER.debug("{}: edges {} and {} meet".format(
                                                        rp.label, i, j))
                    return NOT_EMBEDDED
    except _Undecided:
        REALIZE_LOGGER.warning("{}: undecided at {} bits".format(rp.label,
                                                                 bits))
        return UNRESOLVED
    return EMBEDDED


def write_bottom_svg(rp, path, dps=30):
    """draws the bottom polygon of a realized pyramid in the unit disk

    Edges are hyperbolic geodesics, drawn through their Klein model chords.
    """
    import matplotlib
    matplotlib.use('Agg')
    import matplotlib.pyplot as plt

    chart = _DiskChart(rp)
    with mp.workdps(dps):
        scale = mp.sqrt(numeric(chart.r2, dps).real)
        klein = [complex(numeric(chart.klein(v.vector), dps) * scale)
                 for v in rp.bottom]

    def to_poincare(k):
        return k / (1 + (max(0.0, 1 - abs(k) ** 2)) ** 0.5)

    fig, ax = plt.subplots(figsize=(10, 10), dpi=100)
    ax.add_patch(plt.Circle((0, 0), 1, fill=False, color='black', lw=1))
    n = len(klein)
    for i in range(n):
        start, end = klein[i], klein[(i + 1) % n]
        arc = [to_poincare(start + (end - start) * t / 64) for t in range(65)]
        ax.plot([z.real for z in arc], [z.imag for z in arc], color='tab:blue')
    for k, v in zip(klein, rp.bottom):
        z = to_poincare(k)
        color = 'tab:red' if v.location == IDEAL else 'tab:blue'
        ax.plot(z.real, z.imag, 'o', color=color, ms=4)
    ax.set_xlim(-1.05, 1.05)
    ax.set_ylim(-1.05, 1.05)
    ax.set_aspect('equal')
    ax.axis('off')
    ax.set_title(rp.label)
    fig.savefig(path, format='svg')
    plt.close(fig)
    return path


################################################################################
#                               stabilizers
################################################################################
def stabilizer_order(gens, cap=STABILIZER_CAP, point=None):
    """order of the group generated by `gens` in PU(2,1), by breadth first
    closure with projective deduplication

    Args:
        gens(list): Mat3 generators
        cap(int): largest order enumerated
        point(:obj:`Vec3`, None): a point every generator must fix

    Returns:
        int, ExceedsCap: the order

    Raises:
        PreconditionUnmet: if some generator moves `point`
    """
    if point is not None:
        for g in gens:
            if not (g @ point).proportional(point):
                msg = "generators do not fix a common point"
                REALIZE_LOGGER.error(msg)
                raise PreconditionUnmet(msg)

    identity = Mat3.identity(gens[0].N)
    seen = {proj_key(identity)}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens:
            nxt = current @ g
            key = proj_key(nxt)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > cap:
                return ExceedsCap
            queue.append(nxt)
    return len(seen)


StabilizerCheck = namedtuple('StabilizerCheck',
                             ['vertex', 'gens', 'expected', 'order', 'starred'])


def vertex_stabilizers(G, rows, cap=STABILIZER_CAP):
    """closure orders of the generator lists of catalog stabilizer rows

    The common point is the box product of the polar vectors of the first two
    generators. Rows marked as cusps are checked for an ideal point instead;
    their order is reported as 'cusp'.

    Returns:
        list: StabilizerCheck entries
    """
    out = []
    for row in rows:
        mats = [G.evaluate(parse_word(w)) for w in row.gens]
        point = G.H.box(polar_vector(mats[0]), polar_vector(mats[1]))
        if G.H.norm_sign(point) == 0:
            order = 'cusp'
        else:
            order = stabilizer_order(mats, cap, point)
        out.append(StabilizerCheck(row.vertex, row.gens, row.order, order,
                                   row.starred))
    return out


################################################################################
#                               fixed point
################################################################################
def fixed_point(G):
    """the isolated fixed point p0 of P (symmetric groups) or Q

    Raises:
        PreconditionUnmet: if the element has infinite order or no negative
            eigenvector
    """
    C = G.center
    order = G.center_order()
    if order is ExceedsCap:
        msg = "{}: center element has no finite order".format(G.label)
        REALIZE_LOGGER.error(msg)
        raise PreconditionUnmet(msg)

    # C is unimodular, so its eigenvalues are 3*order-th roots of unity
    M = lcm(G.N, 3 * order)
    C = C.lift(M)
    for k in range(M):
        lam = root_of_unity(M, k)
        if not (C - Mat3.scalar(lam)).det().is_zero():
            continue
        try:
            v = eigenvector(C, lam)
        except EigenvectorError:
            continue
        if G.H.norm_sign(v) < 0:
            return v
    msg = "{}: no isolated fixed point found".format(G.label)
    REALIZE_LOGGER.error(msg)
    raise PreconditionUnmet(msg)


def fixed_point_incidences(shell, G=None):
    """labels of the shell pyramids whose base mirror contains p0"""
    G = shell.group if G is None else G
    p0 = fixed_point(G)
    polar = _PolarCache()
    out = []
    for pyr in shell:
        if G.H.inner(p0, polar(pyr.base)).is_zero():
            out.append(pyr.label)
    return sorted(set(out))


################################################################################
#                               shell realization
################################################################################
class ShellRealization(object):
    """realization of one representative per orbit class of a shell

    Attributes:
        shell(:obj:`Shell`): the shell
        pyramids(list): RealizedPyramid per class, in class order
        embedded(dict): representative label -> Embedded, NotEmbedded or
            Unresolved
    """
    def __init__(self, shell, precision=None):
        self.shell = shell
        polar = _PolarCache()
        self.classes = shell.orbit_classes()
        self.pyramids = [realize(cls.representative, shell.group, polar)
                         for cls in self.classes]
        self.embedded = {rp.label: bottom_polygon_embedded(rp, precision)
                         for rp in self.pyramids}

    @property
    def ideal_vertices(self):
        return ideal_vertices(self.pyramids)

    @property
    def all_embedded(self):
        return all(v == EMBEDDED for v in self.embedded.values())

    def rows(self):
        """(n, count, top status, representative label) per class"""
        return [(cls.n, cls.count, rp.top_status, rp.label)
                for cls, rp in zip(self.classes, self.pyramids)]

    def write_svgs(self, directory):
        os.makedirs(directory, exist_ok=True)
        paths = []
        for i, rp in enumerate(self.pyramids):
            name = "{}_{}.svg".format(self.shell.group.label, i)
            for ch in '(),;':
                name = name.replace(ch, '_')
            paths.append(write_bottom_svg(rp, os.path.join(directory, name)))
        return paths

    def to_json(self):
        return {'classes': [{'representative': label, 'n': n, 'count': count,
                             'top': top, 'bottom': self.embedded[label]}
                            for n, count, top, label in self.rows()],
                'ideal_vertices': len(self.ideal_vertices),
                'embedded': self.all_embedded}


@timer
def realize_shell(shell, precision=None):
    """realizes every orbit class representative of a shell"""
    return ShellRealization(shell, precision)

# END
