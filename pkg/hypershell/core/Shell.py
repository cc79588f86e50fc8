# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
"""Pyramids and the invariant shell of pyramids around the fixed point of P
(or Q)

A pyramid is written "a;b,c": `a` is the reflection whose mirror carries the
base polygon, `b` and `c` are two consecutive sides. Group elements are
compared through their matrices, words are kept only as labels.
"""
from ..Logger import get_logger
from .braid import braid_length
from .constants import BRAID_CAP, ITERATION_CAP, UUID_ORDER
from .Exceptions import ExceedsCap, HypothesisFailure, INFINITY
from .hlinalg import proj_equal, proj_key
from .util import timer
from .words import (free_reduce, inverse_word, label_order, parse_word,
                    shift_word, word_label)

from collections import OrderedDict, namedtuple
from uuid import uuid4

SHELL_LOGGER = get_logger('Shell')

PAIR_BY_A = 'PairByA'
PAIR_BY_A_INVERSE = 'PairByAInverse'
REJECT = 'Reject'


################################################################################
#                                   Word
################################################################################
class Word(object):
    """a group element with the word it was reached by

    Two Words are equal when their matrices agree up to scalars. The `word`
    attribute is replaced whenever the owning WordTable finds a shorter word
    for the same element, so labels improve as the shell grows.

    Attributes:
        word(tuple): free reduced tuple of (letter, +-1) pairs
        matrix(:obj:`Mat3`): the evaluated matrix
        key(tuple): projective key of `matrix`
    """
    __slots__ = ('word', 'matrix', 'key')

    def __init__(self, word, matrix):
        self.word = free_reduce(word)
        self.matrix = matrix
        self.key = proj_key(matrix)

    @classmethod
    def from_label(cls, G, label):
        word = parse_word(label)
        return cls(word, G.evaluate(word))

    @property
    def label(self):
        return word_label(self.word)

    def __mul__(self, other):
        return Word(self.word + other.word, self.matrix @ other.matrix)

    def inverse(self):
        return Word(inverse_word(self.word), self.matrix.inverse())

    def conjugate(self, g, relabel=None):
        """g self g^-1; `relabel` rewrites the word when the plain
        concatenation is not the preferred label"""
        word = g.word + self.word + inverse_word(g.word)
        if relabel is not None:
            word = relabel(self.word)
        return Word(word,
                    g.matrix @ self.matrix @ g.matrix.inverse())

    def __pow__(self, n):
        out = None
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            out = base if out is None else out * base
        if out is None:
            return Word((), self.matrix @ self.matrix.inverse())
        return out

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.key == other.key
        return NotImplemented

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "Word({})".format(self.label)


class WordTable(object):
    """keeps one Word per group element, holding the shortest label seen"""
    def __init__(self):
        self._words = {}

    def canon(self, word):
        known = self._words.get(word.key)
        if known is None:
            self._words[word.key] = word
            return word
        if label_order(word.label) < label_order(known.label):
            known.word = word.word
        return known

    def __len__(self):
        return len(self._words)


def _as_matrix(x):
    return x.matrix if isinstance(x, Word) else x


################################################################################
#                                   Pyramid
################################################################################
def cyclic_key(keys):
    """least rotation of `keys` or of its reversal"""
    keys = tuple(keys)
    n = len(keys)
    if n == 0:
        return keys
    rotations = [seq[k:] + seq[:k] for seq in (keys, keys[::-1])
                 for k in range(n)]
    return min(rotations)


class Pyramid(object):
    """a pyramid with base mirror `base` and cyclic side sequence `sides`

    Attributes:
        base(:obj:`Word`): the reflection a
        sides(tuple): the n side reflections, sides[0] = b, sides[1] = c and
            sides[k] sides[k+1] = b c for every k (indices mod n)
        pairing(str): PAIR_BY_A, PAIR_BY_A_INVERSE
        n(int): number of sides, the braid length of b and c
        key(tuple): base key and the cyclic side key sequence, least under
            rotation and reversal; the identity of the pyramid
    """
    def __init__(self, base, sides, pairing):
        self.base = base
        self.sides = tuple(sides)
        self.pairing = pairing
        self.n = len(self.sides)
        self.key = (base.key, cyclic_key([s.key for s in self.sides]))

    @property
    def flat(self):
        return self.n == 2

    @property
    def pairing_map(self):
        """the side pairing map, a for PairByA and a^-1 otherwise"""
        if self.pairing == PAIR_BY_A:
            return self.base
        return self.base.inverse()

    def side(self, k):
        return self.sides[k % self.n]

    def ridge_key(self, k):
        """key of the side ridge (a, b_k, b_k+1)"""
        return ridge_key(self.base, self.side(k), self.side(k + 1))

    def labels(self):
        """every 'a;b_k,b_k+1' label of this pyramid"""
        a = self.base.label
        return ["{};{},{}".format(a, self.side(k).label, self.side(k + 1).label)
                for k in range(self.n)]

    @property
    def label(self):
        return min(self.labels(), key=label_order)

    def partner(self, table=None):
        """the pyramid this one is paired with across its base: sides are
        conjugated by the pairing map and the pairing type flips"""
        if self.pairing == PAIR_BY_A:
            pairing = PAIR_BY_A_INVERSE
        else:
            pairing = PAIR_BY_A
        g = self.pairing_map
        canon = (lambda w: w) if table is None else table.canon
        return Pyramid(self.base, [canon(s.conjugate(g)) for s in self.sides],
                       pairing)

    def __eq__(self, other):
        if isinstance(other, Pyramid):
            return self.key == other.key
        return NotImplemented

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "Pyramid([{}] {})".format(self.n, self.label)


def ridge_key(a, b, c):
    """key of the ridge cut out by three mirrors, invariant under cyclic
    rotation"""
    keys = (a.key, b.key, c.key)
    return min(keys[i:] + keys[:i] for i in range(3))


def selection_rule(a, b, c, Q):
    """orients the triangle (a; b, c) against Q = 123

    Returns:
        str: PAIR_BY_A if abc = Q, PAIR_BY_A_INVERSE if bca = Q and REJECT
            otherwise (projective equalities)
    """
    A, B, C, Q = (_as_matrix(x) for x in (a, b, c, Q))
    if proj_equal(A @ B @ C, Q):
        return PAIR_BY_A
    if proj_equal(B @ C @ A, Q):
        return PAIR_BY_A_INVERSE
    return REJECT


def _side_sequence(b, c, n, table=None):
    """the n sides b, c, c^-1 b c, ... with s_k+2 = pi^-1 s_k pi, pi = bc

    Each side is reached by the shorter of the two conjugation directions.
    """
    pi = b * c
    sides = []
    for k in range(n):
        j, start = divmod(k, 2)
        candidates = [(j, start)]
        # s_k = s_(k-n): reach it from the other end of the sequence
        back = k - n
        candidates.append(divmod(back, 2))
        best = None
        for power, which in candidates:
            s = b if which == 0 else c
            word = s.conjugate(pi ** -power)
            if best is None or label_order(word.label) < label_order(best.label):
                best = word
        sides.append(best if table is None else table.canon(best))
    return sides


def make_pyramid(a, b, c, G, cap=BRAID_CAP, table=None):
    """builds the pyramid 'a;b,c' of G

    Args:
        a,b,c(:obj:`Word`, str): base and two consecutive sides; strings are
            parsed as words in G
        G(:obj:`TriangleGroup`): the group
        cap(int): braid length cap
        table(:obj:`WordTable`, None): optional word table used for labels

    Raises:
        HypothesisFailure: if b and c do not braid within `cap`, braid with
            infinite length, or the three mirrors are not distinct

    Example:
        >>> import hypershell as hs
        >>> G = hs.build_group('S(4,sigmabar4)')
        >>> hs.make_pyramid('1', '2', '3', G).n
        4
    """
    a, b, c = (Word.from_label(G, x) if isinstance(x, str) else x
               for x in (a, b, c))
    if table is not None:
        a, b, c = table.canon(a), table.canon(b), table.canon(c)
    name = "{};{},{}".format(a.label, b.label, c.label)

    if len({a.key, b.key, c.key}) < 3:
        msg = "degenerate triangle {}: mirrors are not distinct".format(name)
        SHELL_LOGGER.error(msg)
        raise HypothesisFailure(msg, ridge=name, reason='degenerate triangle')

    n = braid_length(b.matrix, c.matrix, cap)
    if n is INFINITY or n is ExceedsCap:
        msg = "sides of {} braid with length {}".format(name, n)
        SHELL_LOGGER.error(msg)
        raise HypothesisFailure(msg, ridge=name, reason='infinite braid')
    if n < 2:
        msg = "degenerate triangle {}: braid length {}".format(name, n)
        SHELL_LOGGER.error(msg)
        raise HypothesisFailure(msg, ridge=name, reason='degenerate triangle')

    pairing = selection_rule(a, b, c, G.Q)
    return Pyramid(a, _side_sequence(b, c, n, table), pairing)


def shift_for_ridge(pyr, k=0):
    """the triangle across the side ridge (a, b_k, b_k+1)

    For PairByA pyramids (abc = Q) this is (c; a, b), for PairByAInverse
    pyramids (bca = Q) it is (b; c, a).

    Returns:
        tuple: (a', b', c') Words
    """
    a, b, c = pyr.base, pyr.side(k), pyr.side(k + 1)
    if pyr.pairing == PAIR_BY_A:
        return c, a, b
    if pyr.pairing == PAIR_BY_A_INVERSE:
        return b, c, a
    msg = "pyramid {} does not satisfy the 123-rule".format(pyr.label)
    SHELL_LOGGER.error(msg)
    raise HypothesisFailure(msg, ridge=pyr.label, reason='rejected pyramid')


def conjugate_pyramid(pyr, g, table=None, relabel=None):
    """g pyr g^-1, with the pairing type preserved

    Example:
        >>> import hypershell as hs
        >>> G = hs.build_group('S(4,sigmabar4)')
        >>> pyr = hs.make_pyramid('1', '2', '3', G)
        >>> P = hs.Word.from_label(G, 'P')
        >>> hs.conjugate_pyramid(pyr, P, relabel=hs.conjugation_by_P).base.label
        '12-1'
    """
    canon = (lambda w: w) if table is None else table.canon
    base = canon(pyr.base.conjugate(g, relabel))
    sides = [canon(s.conjugate(g, relabel)) for s in pyr.sides]
    return Pyramid(base, sides, pyr.pairing)


def conjugation_by_P(word):
    """label of P w P^-1 = 1 J w J^-1 1^-1 written in 1, 2, 3"""
    return free_reduce(((1, 1),) + shift_word(word, 1) + ((1, -1),))


def conjugation_by_P_inverse(word):
    """label of P^-1 w P"""
    return free_reduce(((3, -1),) + shift_word(word, -1) + ((3, 1),))


################################################################################
#                                   Shell
################################################################################
OrbitClass = namedtuple('OrbitClass', ['representative', 'n', 'count',
                                       'pairing', 'pairing_map', 'pyramids'])
"""a conjugation orbit of pyramids merged with the orbit of its partners.
`count` is the size of the orbit of the representative, `pyramids` holds
every member of the merged class"""

RidgeReport = namedtuple('RidgeReport', ['total', 'by_incidence', 'closed'])


class _UnionFind(object):
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx
        return rx


class Shell(object):
    """a conjugation invariant, side paired set of pyramids

    Attributes:
        group(:obj:`TriangleGroup`): the group
        pyramids(:obj:`OrderedDict`): key -> Pyramid, in insertion order
        classes(list): OrbitClass entries, in discovery order
        flats(list): flat pyramids met while shifting (not members)
        table(:obj:`WordTable`): shortest known words
    """
    def __init__(self, group):
        self.group = group
        self.pyramids = OrderedDict()
        self.classes = []
        self.flats = []
        self.table = WordTable()
        self._ridges = {}
        self._merged = _UnionFind()

    # --------------------------------------------------------------------------
    def __len__(self):
        return len(self.pyramids)

    def __iter__(self):
        return iter(self.pyramids.values())

    def __contains__(self, pyr):
        if isinstance(pyr, str):
            pyr = self.find(pyr)
        return pyr is not None and pyr.key in self.pyramids

    def find(self, label):
        """the member pyramid written 'a;b,c', or None"""
        base, sides = label.split(';')
        b, c = sides.split(',')
        G = self.group
        a, b, c = (Word.from_label(G, w) for w in (base, b, c))
        if len({a.key, b.key, c.key}) < 3:
            return None
        for pyr in self.pyramids.values():
            if pyr.base.key != a.key:
                continue
            keys = [s.key for s in pyr.sides]
            for k in range(pyr.n):
                pair = (keys[k], keys[(k + 1) % pyr.n])
                if pair in ((b.key, c.key), (c.key, b.key)):
                    return pyr
        return None

    # --------------------------------------------------------------------------
    def incidence(self, rkey):
        root = self._merged.find(rkey)
        return len(self._ridges.get(root, ()))

    def _attach(self, pyr):
        for k in range(pyr.n):
            root = self._merged.find(pyr.ridge_key(k))
            self._ridges.setdefault(root, set()).add((pyr.key, k))

    def merge_ridges(self, r1, r2):
        """identifies two ridge keys, used across flat pyramids"""
        root1, root2 = self._merged.find(r1), self._merged.find(r2)
        if root1 == root2:
            return
        root = self._merged.union(root1, root2)
        other = root2 if root == root1 else root1
        merged = self._ridges.pop(other, set())
        self._ridges.setdefault(root, set()).update(merged)

    def open_ridges(self):
        """(pyramid, k) for every side ridge lying on a single pyramid"""
        out = []
        for root, members in self._ridges.items():
            if len(members) == 1:
                pkey, k = next(iter(members))
                out.append((self.pyramids[pkey], k))
        return out

    # --------------------------------------------------------------------------
    def orbit(self, pyr):
        """the pyramids g^j pyr g^-j for the center g, starting with pyr"""
        g = self.center_word()
        forward, backward = self._relabels()
        out = [pyr]
        seen = {pyr.key}
        current = pyr
        cap = self.group.center_order()
        cap = ITERATION_CAP if cap is ExceedsCap else cap
        for _ in range(cap):
            current = conjugate_pyramid(current, g, self.table, forward)
            if current.key in seen:
                break
            seen.add(current.key)
            out.append(current)
        # walking backwards registers shorter words for the far half
        ginv = g.inverse()
        current = pyr
        for _ in range(len(out) // 2):
            current = conjugate_pyramid(current, ginv, self.table, backward)
        return out

    def center_word(self):
        """P for symmetric groups, 123 otherwise"""
        if self.group.symmetric:
            return Word.from_label(self.group, 'P')
        return Word.from_label(self.group, '123')

    def _relabels(self):
        if self.group.symmetric:
            return conjugation_by_P, conjugation_by_P_inverse
        return None, None

    def add_class(self, pyr):
        """adds the conjugation orbit of pyr and of its partner

        Returns:
            bool: False if pyr was already a member
        """
        if pyr.key in self.pyramids:
            return False
        orbit = self.orbit(pyr)
        partner = pyr.partner(self.table)
        members = list(orbit)
        if partner.key not in {p.key for p in orbit}:
            members.extend(self.orbit(partner))
        new = [p for p in members if p.key not in self.pyramids]
        for p in new:
            self.pyramids[p.key] = p
            self._attach(p)
        rep = min(new, key=lambda p: label_order(p.label))
        cls = OrbitClass(rep, pyr.n, len(orbit), pyr.pairing, None,
                         tuple(new))
        self.classes.append(cls)
        SHELL_LOGGER.debug("{}: added {} pyramids [{}] {}".format(
                    self.group.label, len(new), pyr.n, rep.label))
        return True

    # --------------------------------------------------------------------------
    def orbit_classes(self):
        """OrbitClass entries with up to date representatives, sorted by
        representative label"""
        out = []
        for cls in self.classes:
            rep = min(cls.pyramids, key=lambda p: label_order(p.label))
            out.append(cls._replace(representative=rep,
                                    pairing=rep.pairing,
                                    pairing_map=rep.pairing_map.label))
        return out

    def ridge_report(self):
        return ridge_report(self)

    def to_json(self):
        rows = []
        for cls in self.orbit_classes():
            rows.append({'representative': cls.representative.label,
                         'n': cls.n,
                         'count': cls.count,
                         'pairing': cls.pairing,
                         'pairing_map': cls.pairing_map})
        report = self.ridge_report()
        return {'group': self.group.label,
                'pyramids': len(self),
                'classes': rows,
                'flat': [p.label for p in self.flats],
                'ridges': {'total': report.total,
                           'by_incidence': {str(k): v for k, v in
                                            report.by_incidence.items()},
                           'closed': report.closed}}

    def __repr__(self):
        return "Shell({}, {} pyramids in {} classes)".format(
                            self.group.label, len(self), len(self.classes))


def ridge_report(shell):
    """counts the ridges of the shell by the number of pyramids on them

    Base ridges are counted once per pyramid pair. The shell is closed when
    every ridge has incidence two.

    Returns:
        RidgeReport: (total, {incidence: count}, closed)
    """
    counts = {}
    for members in shell._ridges.values():
        counts[len(members)] = counts.get(len(members), 0) + 1

    bases = {}
    for pyr in shell:
        partner_key = pyr.partner().key
        key = (pyr.base.key,) + tuple(sorted([pyr.key, partner_key]))
        bases[key] = bases.get(key, 0) + 1
    for n in bases.values():
        counts[n] = counts.get(n, 0) + 1

    total = sum(counts.values())
    return RidgeReport(total, dict(sorted(counts.items())),
                       set(counts) == {2})


################################################################################
#                                   builder
################################################################################
class ShellBuilder(object):
    """grows a shell from the seed pyramid 1;2,3 by conjugation, pairing and
    shifting across open ridges

    Attributes:
        group(:obj:`TriangleGroup`): the group
        braid_cap(int): cap for braid lengths
        iteration_cap(int): cap on the number of pyramids
        uuid(str): unique hex string
        logger(:obj:`logging.Logger`): logger for this builder
    """
    def __init__(self, group, braid_cap=BRAID_CAP, iteration_cap=ITERATION_CAP):
        self.group = group
        self.braid_cap = braid_cap
        self.iteration_cap = iteration_cap
        self.uuid = uuid4().hex
        self.logger = get_logger(self.id)

    @property
    def id(self):
        """str: non-unique name and the last UUID_ORDER digits of the uuid"""
        return "{}#{}".format('ShellBuilder', self.uuid[-UUID_ORDER:])

    def _fail(self, msg, ridge, reason):
        self.logger.error(msg)
        raise HypothesisFailure(msg, ridge=ridge, reason=reason)

    def _neighbor(self, shell, pyr, k):
        """the pyramid across ridge k of pyr, stepping over flat pyramids"""
        G = shell.group
        a, b, c = shift_for_ridge(pyr, k)
        ridge = "{};{},{}".format(pyr.base.label, pyr.side(k).label,
                                  pyr.side(k + 1).label)
        for _ in range(self.iteration_cap):
            nxt = make_pyramid(a, b, c, G, self.braid_cap, shell.table)
            if nxt.pairing == REJECT:
                self._fail("shifted pyramid {} fails the 123-rule".format(
                                            nxt.label), ridge, 'rejected pyramid')
            if not nxt.flat:
                return nxt
            # a flat pyramid identifies its two side ridges
            shell.flats.append(nxt)
            shell.merge_ridges(nxt.ridge_key(0), nxt.ridge_key(1))
            a, b, c = shift_for_ridge(nxt, 1)
        self._fail("chain of flat pyramids at {} does not end".format(ridge),
                   ridge, 'iteration cap')

    def build(self):
        G = self.group
        shell = Shell(G)
        seed = make_pyramid('1', '2', '3', G, self.braid_cap, shell.table)
        if seed.pairing == REJECT:
            self._fail("seed pyramid 1;2,3 fails the 123-rule", '1;2,3',
                       'rejected pyramid')
        if seed.flat:
            self._fail("seed pyramid 1;2,3 is flat", '1;2,3', 'flat seed')
        shell.add_class(seed)

        while True:
            if len(shell) > self.iteration_cap:
                self._fail("more than {} pyramids".format(self.iteration_cap),
                           None, 'iteration cap')

            bad = [root for root, members in shell._ridges.items()
                   if len(members) > 2]
            if bad:
                self._fail("a ridge of {} lies on {} pyramids".format(
                                G.label, len(shell._ridges[bad[0]])),
                           str(bad[0]), 'ridge on more than two pyramids')

            pending = shell.open_ridges()
            if not pending:
                break
            pending.sort(key=lambda pk: (label_order(pk[0].label), pk[1]))
            pyr, k = pending[0]
            rkey = pyr.ridge_key(k)
            nxt = self._neighbor(shell, pyr, k)
            shell.add_class(nxt)
            if shell.incidence(rkey) < 2:
                self._fail("ridge {} of {} stays open".format(k, pyr.label),
                           pyr.label, 'stall')

        self.logger.info("{}: shell of {} pyramids in {} classes".format(
                            G.label, len(shell), len(shell.classes)))
        return shell


@timer
def build_shell(G, braid_cap=BRAID_CAP, iteration_cap=ITERATION_CAP):
    """builds the paired invariant shell of pyramids of G

    Raises:
        HypothesisFailure: when a shifted pyramid braids infinitely, a ridge
            stays open, a ridge lies on more than two pyramids or the
            iteration cap is reached

    Example:
        >>> import hypershell as hs
        >>> shell = hs.build_shell(hs.build_group('S(4,sigmabar4)'))
        >>> sorted((c.n, c.count) for c in shell.orbit_classes())
        [(3, 7), (4, 7)]
    """
    return ShellBuilder(G, braid_cap, iteration_cap).build()

# END
