"""Stallings graphs of finitely generated subgroups of free groups."""

from __future__ import annotations

from collections import deque

from .errors import NotMember
from .freeword import EMPTY, GenId, Word

INFINITE = float("inf")
BASIS_TAG = "b"


class SubgroupGraph:
    """Folded core graph. State 0 is the basepoint.

    ``edges[s]`` maps ``(gen, sign)`` to the target state; every edge is
    stored in both directions.
    """

    __slots__ = ("edges", "alphabet", "origin", "_tree")

    def __init__(self, edges, alphabet, origin):
        self.edges = edges
        self.alphabet = tuple(alphabet)
        self.origin = tuple(origin)
        self._tree = None

    @property
    def num_states(self):
        return len(self.edges)

    def positive_edges(self):
        for s, out in enumerate(self.edges):
            for (g, sign), t in sorted(out.items()):
                if sign > 0:
                    yield s, g, t

    def num_edges(self):
        return sum(1 for _ in self.positive_edges())

    def rank(self):
        return self.num_edges() - self.num_states + 1

    def is_complete(self):
        need = {(g, s) for g in self.alphabet for s in (1, -1)}
        return all(need <= set(out) for out in self.edges)

    def trace(self, w, start=0):
        s = start
        for letter in w.letters:
            s = self.edges[s].get(letter)
            if s is None:
                return None
        return s

    def _spanning_tree(self):
        if self._tree is None:
            path = [None] * self.num_states
            path[0] = ()
            tree = set()
            queue = deque([0])
            while queue:
                s = queue.popleft()
                for lab in sorted(self.edges[s], key=lambda l: (l[0], -l[1])):
                    t = self.edges[s][lab]
                    if path[t] is None:
                        path[t] = path[s] + (lab,)
                        g, sign = lab
                        tree.add((s, g, t) if sign > 0 else (t, g, s))
                        queue.append(t)
            basis = [(s, g, t) for s, g, t in self.positive_edges() if (s, g, t) not in tree]
            self._tree = (path, basis, {e: i for i, e in enumerate(basis)})
        return self._tree

    def to_dot(self):
        lines = ["digraph G {"]
        for s, g, t in self.positive_edges():
            lines.append('  %d -> %d [label="%s"];' % (s, t, g))
        lines.append("}")
        return "\n".join(lines)


def build(words, alphabet=None):
    """Fold the bouquet of ``words`` into a core graph."""
    words = [w for w in words]
    if alphabet is None:
        alphabet = sorted({g for w in words for g, _ in w.letters})
    parent = []
    out = []

    def new_state():
        parent.append(len(parent))
        out.append({})
        return len(parent) - 1

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    pending = []

    def add_edge(s, lab, t):
        s, t = find(s), find(t)
        u = out[s].get(lab)
        if u is not None:
            u = find(u)
            if u != t:
                pending.append((u, t))
            return
        back = (lab[0], -lab[1])
        v = out[t].get(back)
        if v is not None:
            v = find(v)
            if v != s:
                pending.append((v, s))
            return
        out[s][lab] = t
        out[t][back] = s

    def merge(a, b):
        a, b = find(a), find(b)
        if a == b:
            return
        if b < a:
            a, b = b, a
        parent[b] = a
        moved = out[b]
        out[b] = {}
        for lab, t in moved.items():
            back = (lab[0], -lab[1])
            tt = find(t)
            if out[tt].get(back) is not None and find(out[tt][back]) == a:
                del out[tt][back]
            add_edge(a, lab, t)

    new_state()
    for w in words:
        if not w.letters:
            continue
        cur = 0
        n = len(w.letters)
        for i, lab in enumerate(w.letters):
            nxt = 0 if i == n - 1 else new_state()
            add_edge(cur, lab, nxt)
            while pending:
                merge(*pending.pop())
            cur = nxt
    while pending:
        merge(*pending.pop())

    # collect representatives with normalised targets
    reps = sorted({find(x) for x in range(len(parent))})
    clean = {r: {} for r in reps}
    for r in reps:
        for lab, t in out[r].items():
            clean[r][lab] = find(t)
    # trim hanging trees away from the basepoint
    alive = set(reps)
    changed = True
    while changed:
        changed = False
        for r in list(alive):
            if r != find(0) and len(clean[r]) <= 1:
                for lab, t in clean[r].items():
                    clean[t].pop((lab[0], -lab[1]), None)
                clean[r] = {}
                alive.discard(r)
                changed = True
    # renumber by BFS from the basepoint
    root = find(0)
    order = {root: 0}
    queue = deque([root])
    while queue:
        s = queue.popleft()
        for lab in sorted(clean[s], key=lambda l: (l[0], -l[1])):
            t = clean[s][lab]
            if t not in order:
                order[t] = len(order)
                queue.append(t)
    edges = [None] * len(order)
    for r, i in order.items():
        edges[i] = {lab: order[t] for lab, t in clean[r].items()}
    return SubgroupGraph(edges, alphabet, words)


def membership(g, w):
    return g.trace(w) == 0


def index(g):
    if not g.alphabet:
        return 1
    return g.num_states if g.is_complete() else INFINITE


def _path_word(path):
    return Word._raw(tuple(path))


def free_basis(g):
    path, basis, _ = g._spanning_tree()
    out = []
    for s, gen, t in basis:
        inv_t = tuple((h, -e) for h, e in reversed(path[t]))
        out.append(Word(path[s] + ((gen, 1),) + inv_t))
    return out


def basis_assignment(g):
    return {GenId(BASIS_TAG, i): w for i, w in enumerate(free_basis(g))}


def schreier_express(g, w):
    """Rewrite a member as a word in the basis letters ``gb:i``."""
    _, basis, pos = g._spanning_tree()
    s = 0
    letters = []
    for gen, sign in w.letters:
        t = g.edges[s].get((gen, sign))
        if t is None:
            raise NotMember("word leaves the graph")
        e = (s, gen, t) if sign > 0 else (t, gen, s)
        i = pos.get(e)
        if i is not None:
            letters.append((GenId(BASIS_TAG, i), sign))
        s = t
    if s != 0:
        raise NotMember("word does not return to the basepoint")
    return Word(letters)


def nielsen_independent(words):
    words = list(words)
    if any(not w.letters for w in words):
        return False
    return build(words).rank() == len(words)


__all__ = [
    "INFINITE",
    "EMPTY",
    "SubgroupGraph",
    "build",
    "membership",
    "index",
    "free_basis",
    "basis_assignment",
    "schreier_express",
    "nielsen_independent",
]
