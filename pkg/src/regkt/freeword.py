"""Freely reduced words over open-ended generator alphabets."""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import ParseError, UnmappedGenerator


class GenId(NamedTuple):
    tag: str
    index: int

    def __str__(self):
        return "g%s:%d" % (self.tag, self.index)


def _reduce(letters):
    out = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


class Word:
    """Immutable reduced word; letters are ``(GenId, +1 | -1)`` pairs."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters=()):
        letters = tuple(letters)
        for item in letters:
            if len(item) != 2 or item[1] not in (1, -1) or not isinstance(item[0], GenId):
                raise ValueError("bad letter %r" % (item,))
        self.letters = _reduce(letters)
        self._hash = None

    @classmethod
    def _raw(cls, reduced):
        w = cls.__new__(cls)
        w.letters = reduced
        w._hash = None
        return w

    @classmethod
    def gen(cls, g, power=1):
        s = 1 if power >= 0 else -1
        return cls._raw(((g, s),) * abs(power))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __lt__(self, other):
        return (len(self), self.letters) < (len(other), other.letters)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def __mul__(self, other):
        return mul(self, other)

    def __pow__(self, k):
        return power(self, k)

    def __invert__(self):
        return inv(self)

    def __repr__(self):
        return "Word(%r)" % format_word(self)

    def __str__(self):
        return format_word(self)

    def generators(self):
        return {g for g, _ in self.letters}


EMPTY = Word._raw(())


def mul(*words):
    out = []
    for w in words:
        for g, s in w.letters:
            if out and out[-1][0] == g and out[-1][1] == -s:
                out.pop()
            else:
                out.append((g, s))
    return Word._raw(tuple(out))


def inv(a):
    return Word._raw(tuple((g, -s) for g, s in reversed(a.letters)))


def conj(a, by):
    """by . a . by^-1"""
    return mul(by, a, inv(by))


def comm(a, b):
    """a . b . a^-1 . b^-1"""
    return mul(a, b, inv(a), inv(b))


def power(a, k):
    if k < 0:
        a, k = inv(a), -k
    return mul(*([a] * k)) if k else EMPTY


def apply_hom(assignment, w):
    """Substitute ``assignment[g]`` (a Word) for every letter g."""
    out = []
    for g, s in w.letters:
        try:
            img = assignment[g]
        except KeyError:
            raise UnmappedGenerator("no image for %s" % (g,)) from None
        seq = img.letters if s > 0 else tuple((h, -t) for h, t in reversed(img.letters))
        for h, t in seq:
            if out and out[-1][0] == h and out[-1][1] == -t:
                out.pop()
            else:
                out.append((h, t))
    return Word._raw(tuple(out))


def evaluate(w, group, assignment):
    """Image of w in a FiniteGroup under ``assignment: GenId -> element``."""
    t, iv = group.table, group.inverse
    r = 0
    for g, s in w.letters:
        try:
            x = assignment[g]
        except KeyError:
            raise UnmappedGenerator("no value for %s" % (g,)) from None
        r = t[r][x if s > 0 else iv[x]]
    return r


def exponent_sums(w):
    sums = {}
    for g, s in w.letters:
        sums[g] = sums.get(g, 0) + s
    return {g: v for g, v in sums.items() if v}


_TOKEN = re.compile(r"^g([A-Za-z0-9_]+):(-?\d+)('?)$")


def parse_word(text):
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError("bad word token %r" % tok)
        letters.append((GenId(m.group(1), int(m.group(2))), -1 if m.group(3) else 1))
    return Word(letters)


def format_word(w):
    return " ".join("g%s:%d%s" % (g.tag, g.index, "'" if s < 0 else "") for g, s in w.letters)
