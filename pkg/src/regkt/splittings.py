"""Cores, weak cores and the strict-splitting recursion."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from . import zlattice
from .envelope import inv_ints, reduce_ints
from .errors import CapExceeded, MalformedCandidate
from .fingroup import derived_subgroup, direct_product
from .freeword import GenId, Word, inv, mul


# -- cores ---------------------------------------------------------------------


@dataclass
class CoreCertificate:
    core_elements: list  # Words e_i
    section_words: dict  # label -> Word
    witness: list  # per generator: (label, i)

    def replay(self, gens):
        for g, (x, i) in zip(gens, self.witness):
            s = self.section_words[x]
            if mul(s, self.core_elements[i], inv(s)) != g:
                return False
        return len(gens) == len(self.witness)


@dataclass
class NoCore:
    reason: str
    generator: object = None

    def __bool__(self):
        return False


def _peel(g, s):
    n, k = len(g.letters), len(s.letters)
    if 2 * k >= n:
        return None
    if g.letters[:k] != s.letters:
        return None
    if g.letters[n - k :] != inv(s).letters:
        return None
    return Word._raw(g.letters[k : n - k])


def find_core(gens, section_words, alphabet=None):
    """Certify that every generator is s(x) e s(x)^-1 with e itself a generator.

    Section words are tried longest first; the first peel whose middle part is
    among the generators wins. NoCore only means the greedy peel failed.
    """
    gens = list(gens)
    if alphabet is not None:
        allowed = set(alphabet)
        for g in gens:
            if not g.generators() <= allowed:
                return NoCore("generator uses letters outside the alphabet", g)
    pool = set(gens)
    order = sorted(section_words, key=lambda x: (-len(section_words[x]), str(x)))
    core = []
    cpos = {}
    witness = []
    for g in gens:
        hit = None
        for x in order:
            e = _peel(g, section_words[x])
            if e is not None and e in pool:
                hit = (x, e)
                break
        if hit is None:
            return NoCore("no section conjugator peels to a generator", g)
        x, e = hit
        if e not in cpos:
            cpos[e] = len(core)
            core.append(e)
        witness.append((x, cpos[e]))
    return CoreCertificate(core, dict(section_words), witness)


# -- weak cores ----------------------------------------------------------------


def check_weak_core(vectors, labels, rank, require_basis=True):
    """Labelled family in Z^rank: labels injective, vectors distinct, spanning.

    With ``require_basis`` the family must also be linearly independent,
    i.e. a basis of Z^rank.
    """
    vectors = [list(v) for v in vectors]
    if len(vectors) != len(labels):
        return False
    if len(set(labels)) != len(labels):
        return False
    if len({tuple(v) for v in vectors}) != len(vectors):
        return False
    if any(len(v) != rank for v in vectors):
        return False
    if rank == 0:
        return True
    if require_basis and len(vectors) != rank:
        return False
    return zlattice.lattice_equal(vectors, zlattice.identity(rank), rank)


@dataclass
class WeakCoreData:
    vectors: list
    labels: list
    rank: int
    abelianization_free: bool
    verified: bool


def weak_core_data(N, F):
    """Weak-core test for a finite pair: N/[N,N] must be free abelian.

    For finite N that forces N perfect, and then the empty family is a basis.
    """
    D = derived_subgroup(N.as_group()[0]) if N.order > 1 else None
    free = N.order == 1 or D.order == N.order
    if not free:
        return WeakCoreData([], [], 0, False, False)
    return WeakCoreData([], [], 0, True, check_weak_core([], [], 0))


@dataclass
class Lemma8Verdict:
    verdict: str  # Pass, Fail, Skipped
    reason: str
    kj2: object = None


def lemma8_consequence(N, F, kj2_fn=None):
    """Weak core and N free imply K^J_2(N,F) = 0; a finite N is free only if trivial."""
    from .multiplier import kj2 as _kj2

    kj2_fn = kj2_fn or _kj2
    wc = weak_core_data(N, F)
    if not wc.verified:
        return Lemma8Verdict("Skipped", "N/[N,N] is not free abelian, so no weak core")
    if N.order != 1:
        return Lemma8Verdict("Skipped", "N is finite and nontrivial, hence not free")
    res = kj2_fn(N, F)
    if res.structure.is_trivial:
        return Lemma8Verdict("Pass", "kj2 trivial", res.structure)
    return Lemma8Verdict("Fail", "weak core but kj2 = %s" % res.structure, res.structure)


# -- strict splittings ---------------------------------------------------------


@dataclass
class SplittingCandidate:
    """Data for the strict-splitting process over the free group on letters 1..n-1.

    key(w) is the image of a word in U_F/R; section(key) is the chosen lift;
    expand(sigma, z) writes the Schreier element sigma u_z sec(sigma u_z)^-1 as
    a list of (conjugator, core index, sign), or None when it cannot.
    """

    name: str
    letters: int
    core: list  # int tuples e_j
    core_labels: list
    key: object
    section: object
    expand: object
    seeds: list
    level: object = len
    tag: str = "u"

    def basis_element(self, sigma, j, sign=1):
        e = self.core[j] if sign > 0 else inv_ints(self.core[j])
        return reduce_ints(tuple(sigma) + tuple(e) + inv_ints(sigma))

    def to_word(self, w):
        return Word([(GenId(self.tag, abs(a)), 1 if a > 0 else -1) for a in w])


@dataclass
class Converged:
    steps: int
    pairs: int
    level_ok: bool
    level_violations: list = field(default_factory=list)
    verdict: str = "Converged"


@dataclass
class DivergedAtBound:
    depth: int
    path: list
    verdict: str = "DivergedAtBound"


def factor_difference(cand, delta):
    """Schreier rewriting of delta through the section, expanded into core conjugates."""
    out = []
    sec = cand.section
    cur = ()
    for a in delta:
        if a > 0:
            g = cand.expand(cur, a)
            if g is None:
                raise MalformedCandidate("cannot expand Schreier element at %r, letter %d" % (cur, a))
            out.extend(g)
            cur = sec(cand.key(cur + (a,)))
        else:
            prev = sec(cand.key(cur + (a,)))
            g = cand.expand(prev, -a)
            if g is None:
                raise MalformedCandidate("cannot expand Schreier element at %r, letter %d" % (prev, -a))
            out.extend((s, j, -e) for s, j, e in reversed(g))
            cur = prev
    if cur != ():
        raise MalformedCandidate("difference does not lie in R")
    red = []
    for f in out:
        if red and red[-1][:2] == f[:2] and red[-1][2] == -f[2]:
            red.pop()
        else:
            red.append(f)
    out = red
    prod = []
    for s, j, e in out:
        prod.extend(cand.basis_element(s, j, e))
    if reduce_ints(prod) != tuple(delta):
        raise MalformedCandidate("factor product differs from the difference")
    return out


LEVEL_MODES = ("difference", "pair_sum", "factors")


def _pair_level(cand, mode, x1, x2, t, delta, nfactors):
    if mode == "difference":
        return cand.level(t)
    if mode == "pair_sum":
        return cand.level(x1) + cand.level(x2)
    if mode == "factors":
        return nfactors
    raise ValueError("unknown level mode %r" % mode)


def check_strict_splitting(cand, depth, level_mode="difference"):
    """Run the pairwise difference process from every ordered pair of seeds.

    Each step: delta = x1^-1 x2 (x1^-1 x2)^-bar, factored into conjugates
    xbar_j e_j xbar_j^-1; children are the pairs (X_k, X_l), k < l, of the
    conjugators followed by the section of x1^-1 x2.  Converged(k) means every
    path from every seed reaches a trivial difference after at most k steps,
    k <= depth.  The level of a step (see LEVEL_MODES) must drop from parent
    to child whenever the child's difference is nontrivial; failures are
    listed in ``level_violations``.
    """
    sec, key = cand.section, cand.key
    for s in cand.seeds:
        if sec(key(s)) != tuple(s):
            raise MalformedCandidate("seed %r is not a section word" % (s,))
    memo = {}
    info = {}
    active = set()
    violations = []

    def step(x1, x2):
        k = (x1, x2)
        if k not in info:
            d = reduce_ints(inv_ints(x1) + tuple(x2))
            t = sec(key(d))
            if key(t) != key(d):
                raise MalformedCandidate("section does not lift %r" % (d,))
            delta = reduce_ints(d + inv_ints(t))
            facs = factor_difference(cand, delta) if delta else []
            for s, _, _ in facs:
                if sec(key(s)) != tuple(s):
                    raise MalformedCandidate("conjugator %r is not a section word" % (s,))
            X = [tuple(s) for s, _, _ in facs] + [t]
            lev = _pair_level(cand, level_mode, x1, x2, t, delta, len(facs))
            info[k] = (delta, X, lev)
        return info[k]

    def height(k, remaining, path):
        if k in memo:
            if memo[k] > remaining:
                raise _Diverged(path + [k])
            return memo[k]
        delta, X, lev = step(*k)
        if not delta:
            memo[k] = 0
            return 0
        if remaining == 0 or k in active:
            raise _Diverged(path + [k])
        active.add(k)
        h = 0
        children = []
        for i in range(len(X)):
            for j in range(i + 1, len(X)):
                c = (X[i], X[j])
                if c not in children:
                    children.append(c)
        for c in children:
            cdelta, _, clev = step(*c)
            if cdelta and clev >= lev:
                violations.append((k, c, lev, clev))
            h = max(h, height(c, remaining - 1, path + [k]))
        active.discard(k)
        memo[k] = h + 1
        return h + 1

    best = 0
    try:
        for x1 in cand.seeds:
            for x2 in cand.seeds:
                if x1 != x2:
                    best = max(best, height((tuple(x1), tuple(x2)), depth, []))
    except _Diverged as exc:
        return DivergedAtBound(depth, exc.path)
    pairs = sum(1 for v in memo.values() if v)
    return Converged(best, pairs, not violations, violations[:20])


class _Diverged(Exception):
    def __init__(self, path):
        super().__init__("diverged")
        self.path = path


def _words_up_to(letters, length):
    out = [()]
    layer = [()]
    for _ in range(length):
        nxt = []
        for w in layer:
            for a in letters:
                for s in (a, -a):
                    if w and w[-1] == -s:
                        continue
                    nxt.append(w + (s,))
        out.extend(nxt)
        layer = nxt
    return out


def product_example(D, E, seed_length=2, cap=64, scramble=False):
    """Strict-splitting candidate for R = U_{D,F} ∩ U_{E,F}, F = D x E.

    Letters u_z are indexed by z = c|E| + x.  Cores are the brackets
    [u_x, u_c] followed by the product elements u_{cx} u_x^-1 u_c^-1.
    The section of (a, b) in U_D x U_E is the D-word followed by the E-word.
    """
    F = direct_product(D, E)
    if F.order > cap:
        raise CapExceeded("|D||E| = %d exceeds cap %d" % (F.order, cap))
    m = E.order
    dl = [c * m for c in range(1, D.order)]
    el = list(range(1, m))
    core, labels = [], []
    for c in range(1, D.order):
        for x in el:
            core.append((x, c * m, -x, -c * m))
            labels.append(("bracket", c, x))
    for c in range(1, D.order):
        for x in el:
            core.append((c * m + x, -x, -c * m))
            labels.append(("product", c, x))
    bpos = {(c, x): i for i, (_, c, x) in enumerate(labels[: len(labels) // 2 or 0])}
    ppos = {(c, x): len(bpos) + i for i, (c, x) in enumerate(bpos)}

    def key(w):
        a, b = [], []
        for z in w:
            c, x = divmod(abs(z), m)
            s = 1 if z > 0 else -1
            if c:
                a.append(s * c * m)
            if x:
                b.append(s * x)
        return reduce_ints(a), reduce_ints(b)

    swap = {}
    if scramble and dl and el:
        k1, k2 = ((dl[0],), ()), ((), (el[0],))
        swap = {k1: k2, k2: k1}

    def section(k):
        k = swap.get(k, k)
        return tuple(k[0]) + tuple(k[1])

    def split(sigma):
        k = key(sigma)
        if section(k) != tuple(sigma) or tuple(k[0]) + tuple(k[1]) != tuple(sigma):
            return None
        return k

    def bracket_expansion(a, b, c):
        """a [b, u_c] a^-1 as conjugates of brackets, left to right."""
        facs = []
        for i in range(len(b) - 1, -1, -1):
            y = b[i]
            if y > 0:
                facs.append((tuple(a) + tuple(b[:i]), bpos[(c, y)], 1))
            else:
                facs.append((tuple(a) + tuple(b[: i + 1]), bpos[(c, -y)], -1))
        return facs

    def expand(sigma, z):
        k = split(sigma)
        if k is None:
            return None
        a, b = k
        c, x = divmod(z, m)
        if not c:
            tgt = section(key(tuple(sigma) + (z,)))
            return [] if tgt == reduce_ints(tuple(a) + reduce_ints(tuple(b) + (z,))) else None
        tgt = section(key(tuple(sigma) + (z,)))
        if tgt != reduce_ints(tuple(a) + (c * m,)) + reduce_ints(tuple(b) + ((x,) if x else ())):
            return None
        facs = []
        if x:
            facs.append((tuple(a) + tuple(b), ppos[(c, x)], 1))
        facs.extend(bracket_expansion(reduce_ints(tuple(a)), b, c))
        return facs

    seeds = []
    for k in sorted({key(w) for w in _words_up_to(dl + el, seed_length)}):
        s = section(k)
        if len(s) <= seed_length and key(s) == k and s not in seeds:
            seeds.append(s)
    return SplittingCandidate(
        name="%s x %s" % (D.name, E.name),
        letters=F.order,
        core=core,
        core_labels=labels,
        key=key,
        section=section,
        expand=expand,
        seeds=seeds,
    )


def product_basis_words(cand, length):
    """Basis elements sigma e sigma^-1 for section words sigma of length <= length."""
    sig = sorted({cand.section(cand.key(w)) for w in _words_up_to(range(1, cand.letters), length)})
    return [(s, j, cand.basis_element(s, j)) for s, j in iproduct(sig, range(len(cand.core)))]
