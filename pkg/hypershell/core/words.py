# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
"""Words in the generators of a triangle group

Words are written the way the appendix tables write them, with ASCII
inverses: "23-2" is R2 R3 R2^-1, "-3-2323" is R3^-1 R2^-1 R3 R2 R3 and
"(12)^3" is (R1 R2)^3. Letters are 1, 2, 3, J, P (= 1J) and Q (= 123).
"""
from ..Logger import get_logger
from .Exceptions import RelationError

WORDS_LOGGER = get_logger('words')

LETTERS = ('1', '2', '3', 'J', 'P', 'Q')
"""letters understood by parse_word, in sort order"""

_EXPANSIONS = {'P': ((1, 1), ('J', 1)),
               'Q': ((1, 1), (2, 1), (3, 1))}


def _letter(ch):
    return int(ch) if ch.isdigit() else ch


def _invert(word):
    return tuple((g, -e) for g, e in reversed(word))


def free_reduce(word):
    """cancels adjacent inverse letters, e.g. 2 3 -3 1 -> 2 1"""
    out = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def parse_word(text):
    """parses a word string into a tuple of (letter, +-1) pairs

    Example:
        >>> import hypershell as hs
        >>> hs.parse_word("23-2")
        ((2, 1), (3, 1), (2, -1))
        >>> hs.parse_word("-(12)^2")
        ((2, -1), (1, -1), (2, -1), (1, -1))
    """
    text = text.replace(' ', '').replace('.', '')
    word, pos = _parse_sequence(text, 0)
    if pos != len(text):
        msg = "unexpected '{}' at position {} of word '{}'".format(
                                                    text[pos], pos, text)
        WORDS_LOGGER.error(msg)
        raise RelationError(msg)
    return free_reduce(word)


def _parse_sequence(text, pos):
    word = []
    while pos < len(text) and text[pos] != ')':
        invert = False
        if text[pos] == '-':
            invert = True
            pos += 1
            if pos >= len(text):
                msg = "dangling inverse sign in word '{}'".format(text)
                WORDS_LOGGER.error(msg)
                raise RelationError(msg)

        if text[pos] == '(':
            group, pos = _parse_sequence(text, pos + 1)
            if pos >= len(text) or text[pos] != ')':
                msg = "unbalanced parentheses in word '{}'".format(text)
                WORDS_LOGGER.error(msg)
                raise RelationError(msg)
            pos += 1
        elif text[pos] in LETTERS:
            group = ((_letter(text[pos]), 1),)
            pos += 1
        else:
            msg = "unknown letter '{}' in word '{}'".format(text[pos], text)
            WORDS_LOGGER.error(msg)
            raise RelationError(msg)

        if pos < len(text) and text[pos] == '^':
            start = pos + 1
            pos = start + (1 if pos + 1 < len(text) and text[start] == '-' else 0)
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            try:
                power = int(text[start:pos])
            except ValueError:
                msg = "bad exponent in word '{}'".format(text)
                WORDS_LOGGER.error(msg)
                raise RelationError(msg)
            group = group * power if power >= 0 else _invert(group) * (-power)

        word.extend(_invert(group) if invert else group)
    return tuple(word), pos


def expand(word):
    """rewrites P and Q in terms of 1, 2, 3 and J"""
    out = []
    for g, e in word:
        if g in _EXPANSIONS:
            part = _EXPANSIONS[g]
            out.extend(part if e > 0 else _invert(part))
        else:
            out.append((g, e))
    return free_reduce(out)


def shift_word(word, steps=1):
    """applies the symmetry 1 -> 2 -> 3 -> 1 (conjugation by J) `steps`
    times"""
    out = []
    for g, e in word:
        if isinstance(g, int):
            g = (g - 1 + steps) % 3 + 1
        out.append((g, e))
    return tuple(out)


def inverse_word(word):
    return _invert(word)


def word_label(word):
    """string form of a word, the inverse of parse_word for reduced words"""
    if not word:
        return 'Id'
    return ''.join(('-' if e < 0 else '') + str(g) for g, e in word)


def label_order(label):
    """sort key for labels: shorter first, then lexicographic"""
    return (len(label.replace('-', '')), label)
