"""Concrete finite groups given by a multiplication table.

Elements are the integers ``0..n-1`` with 0 the identity. Groups built from
permutations keep the permutations as ``labels`` (1-based image tuples).
Permutations compose left to right: ``a*b`` means "apply a, then b".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceeded, NotHomomorphism, NotNormal, ParseError

DEFAULT_CAP = 5000


class FiniteGroup:
    __slots__ = ("table", "inverse", "name", "labels", "_index")

    def __init__(self, table, name="", labels=None, check=True):
        self.table = tuple(tuple(row) for row in table)
        n = len(self.table)
        if n == 0:
            raise ValueError("a group has at least one element")
        self.name = name
        self.labels = tuple(labels) if labels is not None else None
        inv = [None] * n
        for a in range(n):
            row = self.table[a]
            if len(row) != n:
                raise ValueError("table is not square")
            for b in range(n):
                if row[b] == 0:
                    inv[a] = b
                    break
        if any(v is None for v in inv):
            raise ValueError("missing inverse")
        self.inverse = tuple(inv)
        self._index = None
        if check:
            self.check_axioms()

    @classmethod
    def from_table(cls, rows, name="", check=True):
        return cls(rows, name=name, check=check)

    def check_axioms(self, assoc_bound=64):
        n = self.order
        t = self.table
        for a in range(n):
            if t[0][a] != a or t[a][0] != a:
                raise ValueError("element 0 is not the identity")
            if sorted(t[a]) != list(range(n)):
                raise ValueError("row %d is not a permutation" % a)
            if t[a][self.inverse[a]] != 0 or t[self.inverse[a]][a] != 0:
                raise ValueError("inverse axiom fails at %d" % a)
        if n <= assoc_bound:
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    tab = t[ta[b]]
                    tb = t[b]
                    for c in range(n):
                        if tab[c] != ta[tb[c]]:
                            raise ValueError("not associative at %r" % ((a, b, c),))

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return "FiniteGroup(%s, order=%d)" % (self.name or "?", self.order)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    def prod(self, items):
        r = 0
        for x in items:
            r = self.table[r][x]
        return r

    def comm(self, a, b):
        t, i = self.table, self.inverse
        return t[t[t[a][b]][i[a]]][i[b]]

    def conj(self, a, by):
        return self.table[self.table[by][a]][self.inverse[by]]

    def element_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def exponent(self):
        from math import lcm

        e = 1
        for a in range(self.order):
            e = lcm(e, self.element_order(a))
        return e

    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def element_of_label(self, label):
        if self.labels is None:
            raise KeyError("group has no labels")
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[tuple(label)]

    def whole(self):
        return SubgroupHandle(self, range(self.order))

    def trivial(self):
        return SubgroupHandle(self, [0])

    def center(self):
        t = self.table
        n = self.order
        return SubgroupHandle(self, [a for a in range(n) if all(t[a][b] == t[b][a] for b in range(n))])


@dataclass(frozen=True)
class SubgroupHandle:
    parent: FiniteGroup
    members: tuple

    def __init__(self, parent, members, check=True):
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "members", tuple(sorted(set(members))))
        if check:
            ms = set(self.members)
            if 0 not in ms:
                raise ValueError("subgroup misses the identity")
            t = parent.table
            for a in self.members:
                if parent.inverse[a] not in ms or any(t[a][b] not in ms for b in self.members):
                    raise ValueError("member set is not closed")

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self._set()

    def _set(self):
        s = self.__dict__.get("_s")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_s", s)
        return s

    def __hash__(self):
        return hash(self.members)

    def __eq__(self, other):
        return isinstance(other, SubgroupHandle) and other.parent is self.parent and other.members == self.members

    @property
    def order(self):
        return len(self.members)

    def as_group(self, name=""):
        """The subgroup as a standalone group plus the embedding list."""
        idx = {x: i for i, x in enumerate(self.members)}
        t = self.parent.table
        rows = [[idx[t[a][b]] for b in self.members] for a in self.members]
        labels = None
        if self.parent.labels is not None:
            labels = [self.parent.labels[x] for x in self.members]
        return FiniteGroup(rows, name=name, labels=labels, check=False), list(self.members)


# -- construction -----------------------------------------------------------


def cycles(degree, *cycs):
    """1-based image tuple of a product of disjoint cycles."""
    img = list(range(1, degree + 1))
    for c in cycs:
        for i, a in enumerate(c):
            img[a - 1] = c[(i + 1) % len(c)]
    return tuple(img)


def _check_perm(degree, p):
    p = tuple(p)
    if len(p) != degree or sorted(p) != list(range(1, degree + 1)):
        raise ValueError("not a permutation of 1..%d: %r" % (degree, p))
    return p


def from_permutations(degree, gens, cap=DEFAULT_CAP, name=""):
    """Close the generators under composition.

    Elements are discovered breadth-first; each new layer is sorted
    lexicographically by image tuple, so the order is reproducible.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    gens = [_check_perm(degree, g) for g in gens]
    ident = tuple(range(1, degree + 1))
    elems = [ident]
    index = {ident: 0}
    layer = [ident]
    while layer:
        fresh = set()
        for p in layer:
            for g in gens:
                q = tuple(g[p[i] - 1] for i in range(degree))
                if q not in index and q not in fresh:
                    fresh.add(q)
        layer = sorted(fresh)
        for q in layer:
            index[q] = len(elems)
            elems.append(q)
            if len(elems) > cap:
                raise CapExceeded("permutation group exceeds cap %d" % cap)
    n = len(elems)
    table = []
    for p in elems:
        table.append([index[tuple(q[p[i] - 1] for i in range(degree))] for q in elems])
    return FiniteGroup(table, name=name, labels=elems, check=False)


def cyclic(n, name=None):
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], name=name or "C%d" % n, check=False)


def direct_product(G, H, name=None):
    """Element (g, h) gets index g*|H| + h."""
    m = H.order
    rows = []
    for g in range(G.order):
        for h in range(m):
            rows.append([G.table[g][g2] * m + H.table[h][h2] for g2 in range(G.order) for h2 in range(m)])
    return FiniteGroup(rows, name=name or "%sx%s" % (G.name, H.name), check=False)


def relabel(G, perm):
    """Reorder elements: old element ``perm[i]`` becomes ``i``. perm[0] must be 0."""
    if perm[0] != 0 or sorted(perm) != list(range(G.order)):
        raise ValueError("relabeling must fix the identity")
    pos = [0] * G.order
    for i, old in enumerate(perm):
        pos[old] = i
    rows = [[pos[G.table[perm[a]][perm[b]]] for b in range(G.order)] for a in range(G.order)]
    labels = [G.labels[p] for p in perm] if G.labels is not None else None
    return FiniteGroup(rows, name=G.name, labels=labels, check=False), pos


def random_relabel(G, rng):
    rest = list(range(1, G.order))
    rng.shuffle(rest)
    return relabel(G, [0] + rest)


# -- subgroups ----------------------------------------------------------------


def generated_subgroup(G, gens):
    members = {0}
    frontier = [0]
    gens = [g for g in set(gens) if g != 0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.table[a][g]
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return SubgroupHandle(G, members, check=False)


def normal_closure(G, gens):
    conj = {G.conj(g, f) for g in gens for f in range(G.order)}
    return generated_subgroup(G, conj)


def is_normal(N, F=None):
    F = F or N.parent
    ms = N._set()
    return all(F.conj(n, f) in ms for n in N.members for f in range(F.order))


def _require_normal(N, F):
    if N.parent is not F:
        raise NotNormal("subgroup belongs to a different group")
    if not is_normal(N, F):
        raise NotNormal("subgroup is not normal")


def commutator_subgroup(N, F=None):
    """[N,F], generated by all commutators n f n^-1 f^-1."""
    F = F or N.parent
    _require_normal(N, F)
    comms = {F.comm(n, f) for n in N.members for f in range(F.order)}
    return generated_subgroup(F, comms)


def derived_subgroup(F):
    return commutator_subgroup(F.whole(), F)


def is_full(N, F=None):
    F = F or N.parent
    return commutator_subgroup(N, F) == N


def is_perfect(F):
    return is_full(F.whole(), F)


@dataclass(frozen=True)
class Quotient:
    group: FiniteGroup
    proj: tuple  # F-element -> quotient element
    reps: tuple  # quotient element -> min-index representative in F


def quotient(F, N):
    """F/N with min-index coset representatives, ordered by representative."""
    _require_normal(N, F)
    coset_of = [None] * F.order
    reps = []
    for x in range(F.order):
        if coset_of[x] is None:
            k = len(reps)
            reps.append(x)
            for n in N.members:
                coset_of[F.table[x][n]] = k
    t = F.table
    rows = [[coset_of[t[a][b]] for b in reps] for a in reps]
    Q = FiniteGroup(rows, name="%s/%d" % (F.name, N.order), check=False)
    return Quotient(Q, tuple(coset_of), tuple(reps))


def check_homomorphism(phi, G, H):
    phi = tuple(phi)
    if len(phi) != G.order or any(not 0 <= v < H.order for v in phi):
        raise NotHomomorphism("map has the wrong shape")
    for a in range(G.order):
        for b in range(G.order):
            if phi[G.table[a][b]] != H.table[phi[a]][phi[b]]:
                raise NotHomomorphism("phi(%d*%d) differs from phi(%d)*phi(%d)" % (a, b, a, b))
    return phi


# -- text format --------------------------------------------------------------

FORMAT_HEADER = "regkt-format 1"


def parse_cycles(degree, text):
    """Parse cycle notation like ``(1 2 3)(4 5)``; ``()`` is the identity."""
    text = text.strip()
    if not text:
        raise ParseError("empty permutation")
    cycs = []
    rest = text
    while rest:
        rest = rest.lstrip()
        if not rest:
            break
        if not rest.startswith("("):
            raise ParseError("expected '(' in %r" % text)
        end = rest.find(")")
        if end < 0:
            raise ParseError("unbalanced cycle in %r" % text)
        body = rest[1:end].replace(",", " ").split()
        try:
            pts = [int(v) for v in body]
        except ValueError:
            raise ParseError("non-integer point in %r" % text) from None
        if any(not 1 <= p <= degree for p in pts) or len(set(pts)) != len(pts):
            raise ParseError("bad cycle %r for degree %d" % (rest[: end + 1], degree))
        cycs.append(pts)
        rest = rest[end + 1 :]
    used = [p for c in cycs for p in c]
    if len(used) != len(set(used)):
        raise ParseError("cycles are not disjoint in %r" % text)
    return cycles(degree, *cycs)


def format_cycles(perm):
    seen = set()
    out = []
    for start in range(1, len(perm) + 1):
        if start in seen or perm[start - 1] == start:
            continue
        c = [start]
        seen.add(start)
        x = perm[start - 1]
        while x != start:
            c.append(x)
            seen.add(x)
            x = perm[x - 1]
        out.append("(" + " ".join(map(str, c)) + ")")
    return "".join(out) or "()"


@dataclass
class GroupFile:
    group: FiniteGroup
    kind: str  # "perm" or "table"
    degree: int
    generators: list  # as parsed (perm tuples or table indices)


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_group_text(text, cap=DEFAULT_CAP, name=""):
    lines = list(_content_lines(text))
    if lines and lines[0] == FORMAT_HEADER:
        lines = lines[1:]
    elif lines and lines[0].startswith("regkt-format"):
        raise ParseError("unsupported format line %r" % lines[0])
    if not lines:
        raise ParseError("no group description")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("perm", "table"):
        raise ParseError("first line must be 'perm <degree>' or 'table <n>'")
    try:
        size = int(head[1])
    except ValueError:
        raise ParseError("bad size %r" % head[1]) from None
    if size < 1:
        raise ParseError("size must be positive")
    body = lines[1:]
    if head[0] == "perm":
        gens = [parse_cycles(size, ln) for ln in body]
        return GroupFile(from_permutations(size, gens, cap=cap, name=name), "perm", size, gens)
    if size > cap:
        raise CapExceeded("table of size %d exceeds cap %d" % (size, cap))
    if len(body) != size:
        raise ParseError("expected %d table rows, got %d" % (size, len(body)))
    try:
        rows = [[int(v) for v in ln.split()] for ln in body]
    except ValueError:
        raise ParseError("non-integer table entry") from None
    try:
        G = FiniteGroup(rows, name=name)
    except ValueError as exc:
        raise ParseError("invalid table: %s" % exc) from None
    return GroupFile(G, "table", size, [])


def read_group_file(path, cap=DEFAULT_CAP):
    from pathlib import Path

    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc)) from None
    return parse_group_text(text, cap=cap, name=p.stem)


def format_group_text(G):
    """Table format; perm-built groups could use either form."""
    lines = [FORMAT_HEADER, "table %d" % G.order]
    lines += [" ".join(map(str, row)) for row in G.table]
    return "\n".join(lines) + "\n"


def parse_element_spec(gf, token):
    """An element in the file's own notation: cycles or a table index."""
    token = token.strip()
    if gf.kind == "perm":
        p = parse_cycles(gf.degree, token)
        try:
            return gf.group.element_of_label(p)
        except KeyError:
            raise ParseError("permutation %s is not in the group" % token) from None
    try:
        v = int(token)
    except ValueError:
        raise ParseError("bad element index %r" % token) from None
    if not 0 <= v < gf.group.order:
        raise ParseError("element index %d out of range" % v)
    return v


def parse_normal_spec(gf, spec):
    """``"g1;g2"`` -> normal closure of the listed elements."""
    elems = [parse_element_spec(gf, tok) for tok in spec.split(";") if tok.strip()]
    return normal_closure(gf.group, elems)


def all_normal_subgroups(F):
    """Normal closures of all single elements and pairwise products thereof."""
    found = {}
    base = {}
    for x in range(F.order):
        N = normal_closure(F, [x])
        base[N.members] = N
    found.update(base)
    changed = True
    while changed:
        changed = False
        for A, B in itertools.combinations(list(found.values()), 2):
            C = generated_subgroup(F, A.members + B.members)
            if C.members not in found:
                found[C.members] = C
                changed = True
    return sorted(found.values(), key=lambda s: (s.order, s.members))

