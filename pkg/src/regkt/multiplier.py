"""Canonical F-central extensions, K^J_2(N,F) and the Hopf-formula oracle.

A = J_{N,F} / ([J,U] [V,J_F]) is presented on the Lemma-3 core B by two
relation families:

(a) kappa(u_g b u_g^-1) - e_b   for b in B, g != 1
(b) kappa([s, r])                for s in UCore, r a J_F basis word

The numerator J ∩ [V,U] is the kernel of the exponent-sum map
epsilon: V -> V/[V,U] = Z^S (S = UCore), so K^J_2 = ker(A -> Z^S).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field

from . import zlattice
from .envelope import RelativeEnvelope, inv_ints, reduce_ints
from .errors import (
    CapExceeded,
    InfiniteKernel,
    NotFinite,
    NotFull,
    NotHomomorphism,
    NotPerfect,
    ParseError,
    Unsupported,
)
from .fingroup import (
    FiniteGroup,
    SubgroupHandle,
    check_homomorphism,
    commutator_subgroup,
    derived_subgroup,
    is_full,
    is_perfect,
)
from .freeword import Word

DEFAULT_KJ2_CAP = 60


def _check_cap(F, cap):
    if cap is not None and F.order > cap:
        raise CapExceeded("|F| = %d exceeds cap %d" % (F.order, cap))


def _sub(a, b):
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) - v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def relation_rows(renv, families="ab", progress=None):
    """Sparse relation rows over the core B, family (a) before family (b)."""
    rows = []
    n = renv.F.order
    kappa = renv.kappa
    if "a" in families:
        for bi, ce in enumerate(renv.B):
            w = ce.ints
            for g in range(1, n):
                c = kappa(reduce_ints((g,) + w + (-g,)), check=False)
                c[bi] = c.get(bi, 0) - 1
                if c[bi] == 0:
                    del c[bi]
                if c:
                    rows.append(c)
            if progress:
                progress()
    if "b" in families:
        env = renv.env
        l2 = [env.l2_word(x, y) for x in range(1, n) for y in range(1, n)]
        for ce in renv.ucore:
            s = ce.ints
            si = inv_ints(s)
            for r in l2:
                c = kappa(reduce_ints(s + r + si + inv_ints(r)), check=False)
                if c:
                    rows.append(c)
            if progress:
                progress()
    return rows


@dataclass
class CanonicalExtensionData:
    renv: RelativeEnvelope
    families: str
    kernel_relations: list
    quotient: zlattice.AbelianQuotient

    @property
    def pair(self):
        return self.renv.N, self.renv.F

    @property
    def kernel_structure(self):
        return self.quotient.structure

    def cocycle(self, m, n):
        """kappa(s(m) s(n) s(mn)^-1) as a dict over B, s(m) = u_m."""
        F = self.renv.F
        w = reduce_ints([a for a in (m, n, -F.table[m][n]) if a])
        return self.renv.kappa(w)

    def cocycle_coords(self, m, n):
        return self.quotient.coords(self.cocycle(m, n))

    def cocycle_table(self):
        N = self.renv.N.members
        return {(m, n): self.cocycle(m, n) for m in N for n in N}


def canonical_extension(N, F, cap=DEFAULT_KJ2_CAP, families="ab", renv=None, progress=None):
    _check_cap(F, cap)
    renv = renv or RelativeEnvelope(F, N)
    rows = relation_rows(renv, families, progress=progress)
    q = zlattice.AbelianQuotient(rows, len(renv.B), progress=progress)
    return CanonicalExtensionData(renv, families, rows, q)


def cocycle_identity_failures(data, table=None, limit=None):
    """Triples (m,n,p) where the 2-cocycle identity fails in A."""
    F = data.renv.F
    t = F.table
    N = data.renv.N.members
    table = table if table is not None else data.cocycle_table()
    q = data.quotient
    bad = []
    for m in N:
        for n in N:
            for p in N:
                lhs = dict(table[(m, n)])
                for k, v in table[(t[m][n], p)].items():
                    lhs[k] = lhs.get(k, 0) + v
                rhs = dict(table[(n, p)])
                for k, v in table[(m, t[n][p])].items():
                    rhs[k] = rhs.get(k, 0) + v
                if not q.is_zero(_sub(lhs, rhs)):
                    bad.append((m, n, p))
                    if limit and len(bad) >= limit:
                        return bad
    return bad


@dataclass
class KJ2Result:
    data: CanonicalExtensionData
    structure: zlattice.AbelianGroupStructure
    free_kernel: list  # basis of ker(epsilon) on the free part of A, in free coordinates
    eps_free: list  # epsilon of each free generator of A (rows over S)
    commutator_structure: zlattice.AbelianGroupStructure = None
    numerator_words: list = field(default_factory=list)
    generator_certificates: list = field(default_factory=list)
    certificate_factors: list = field(default_factory=list)

    @property
    def renv(self):
        return self.data.renv

    @property
    def quotient(self):
        return self.data.quotient

    @property
    def ntors(self):
        return len(self.quotient.torsion)

    @property
    def moduli(self):
        return list(self.quotient.torsion) + [0] * len(self.free_kernel)

    @property
    def ngens(self):
        return self.ntors + len(self.free_kernel)

    def generator_lift(self, j):
        """A vector over B representing the j-th K generator."""
        q = self.quotient
        if j < self.ntors:
            return q.lift(j)
        v = self.free_kernel[j - self.ntors]
        out = {}
        for k, c in enumerate(v):
            if c:
                for b, x in q.lift(self.ntors + k).items():
                    out[b] = out.get(b, 0) + c * x
        return {b: x for b, x in out.items() if x}

    def coords_from_A(self, y):
        """K coordinates of an element of A (given in A coordinates) lying in K."""
        nt = self.ntors
        tors = list(y[:nt])
        free = list(y[nt:])
        if not self.free_kernel:
            if any(free):
                raise ValueError("element is not in K^J_2")
            return tors
        c = zlattice.solve_left(self.free_kernel, free, len(free))
        if c is None:
            raise ValueError("element is not in K^J_2")
        return tors + list(c)

    def coords_from_B(self, vec):
        return self.coords_from_A(self.quotient.coords(vec))

    def reduce(self, coords):
        return [c % d if d else c for c, d in zip(coords, self.moduli)]


def _epsilon_of_vector(renv, vec, eps_b):
    out = {}
    for b, c in vec.items():
        for k, v in eps_b[b].items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def numerator_family(data, include_cores=True):
    """Commutator words spanning the numerator image in A.

    comm(v, u_g) for v in UCore (and optionally the cores B), and comm(v, v')
    for v, v' in UCore, kept when the word lies in J_{N,F}.  Returns a list
    of (ints, kappa) pairs.
    """
    renv = data.renv
    n = renv.F.order
    fam = [ce.ints for ce in renv.ucore]
    if include_cores:
        fam += [ce.ints for ce in renv.B]
    out = []
    for v in fam:
        vi = inv_ints(v)
        for g in range(1, n):
            w = reduce_ints(v + (g,) + vi + (-g,))
            if renv.member_jnf(w):
                out.append((w, renv.kappa(w, check=False)))
    for v in renv.ucore:
        for v2 in renv.ucore:
            w = reduce_ints(v.ints + v2.ints + inv_ints(v.ints) + inv_ints(v2.ints))
            if w and renv.member_jnf(w):
                out.append((w, renv.kappa(w, check=False)))
    return out


def _torsion_rows(q):
    rows = []
    for i, d in enumerate(q.moduli):
        if d:
            row = [0] * q.ngens
            row[i] = d
            rows.append(row)
    return rows


def _commutator_route(res, include_cores=True):
    """Second route to the numerator: span of commutator images in A."""
    q = res.quotient
    seen = {}
    for w, vec in numerator_family(res.data, include_cores):
        y = tuple(q.coords(vec))
        if any(y) and y not in seen:
            seen[y] = (w, vec)
    imgs = [list(y) for y in seen]
    res.numerator_words = [seen[y] for y in seen]
    mods = _torsion_rows(q)
    res.commutator_structure = zlattice.subgroup_in_quotient(mods, imgs, q.ngens) if imgs else zlattice.AbelianGroupStructure()
    return imgs, mods


def _certify(res, imgs, mods):
    """Write every K generator as an explicit product of numerator commutators."""
    renv, q = res.renv, res.quotient
    M = imgs + mods
    for j in range(res.ngens):
        target = q.coords(res.generator_lift(j))
        x = zlattice.solve_left(M, target, q.ngens) if M else None
        if x is None:
            res.generator_certificates.append(None)
            res.certificate_factors.append(None)
            continue
        factors = [(i, c) for i, c in enumerate(x[: len(imgs)]) if c]
        w = []
        vec = {}
        for i, c in factors:
            ints, kv = res.numerator_words[i]
            w.extend((ints if c > 0 else inv_ints(ints)) * abs(c))
            for b, v in kv.items():
                vec[b] = vec.get(b, 0) + c * v
        vec = {b: v for b, v in vec.items() if v}
        res.generator_certificates.append((renv.env.to_word(reduce_ints(w)), vec))
        res.certificate_factors.append(factors)


def _kj2_from_data(data, certificates=True, include_cores=True):
    renv = data.renv
    q = data.quotient
    eps_b = [renv.epsilon(ce.ints) for ce in renv.B]
    nS = len(renv.ucore)
    nt = len(q.torsion)
    for j in range(nt):
        if _epsilon_of_vector(renv, q.lift(j), eps_b):
            raise AssertionError("torsion element of A with nonzero exponent sum")
    W = []
    for k in range(q.free_rank):
        e = _epsilon_of_vector(renv, q.lift(nt + k), eps_b)
        W.append([e.get(i, 0) for i in range(nS)])
    if q.free_rank == 0:
        ker = []
    elif nS == 0:
        ker = zlattice.identity(q.free_rank)
    else:
        ker = zlattice.left_kernel(W, q.free_rank, nS)
    structure = zlattice.AbelianGroupStructure(len(ker), q.torsion)
    res = KJ2Result(data, structure, ker, W)
    if certificates:
        imgs, mods = _commutator_route(res, include_cores)
        _certify(res, imgs, mods)
    return res


def kj2(N, F, cap=DEFAULT_KJ2_CAP, certificates=True, renv=None):
    return _kj2_from_data(canonical_extension(N, F, cap=cap, renv=renv), certificates)


def kj2_extended(N, F, cap=DEFAULT_KJ2_CAP, certificates=True, renv=None):
    return _kj2_from_data(canonical_extension(N, F, cap=cap, families="a", renv=renv), certificates)


def kjn(n, N, F, **kw):
    if n == 2:
        return kj2(N, F, **kw)
    raise Unsupported("K^J_n is only evaluated for n = 2; higher n have no finite presentation here")


def verify_certificate(res, j):
    """Replay certificate j: product of the recorded commutators, in J, given coordinates."""
    cert = res.generator_certificates[j]
    if cert is None:
        return False
    word, vec = cert
    renv = res.renv
    rebuilt = []
    for i, c in res.certificate_factors[j]:
        ints, _ = res.numerator_words[i]
        rebuilt.extend((ints if c > 0 else inv_ints(ints)) * abs(c))
    w = renv.env.from_word(word)
    if reduce_ints(rebuilt) != w:
        return False
    if not renv.member_jnf(w) or renv.epsilon(w):
        return False
    if renv.kappa(w) != vec:
        return False
    unit = [1 if k == j else 0 for k in range(res.ngens)]
    return res.reduce(res.coords_from_B(vec)) == unit


# -- induced maps ----------------------------------------------------------------


def induced_core_images(src, tgt, phi):
    """kappa_tgt(phi(b)) for every core element b of the source."""
    rs, rt = src.renv, tgt.renv
    check_homomorphism(phi, rs.F, rt.F)
    if any(phi[c] not in rt.N for c in rs.N.members):
        raise NotHomomorphism("morphism does not carry N into N'")
    images = []
    for ce in rs.B:
        w = reduce_ints([phi[a] if a > 0 else -phi[-a] for a in ce.ints if phi[abs(a)]])
        images.append(rt.kappa(w))
    return images


def kj2_map(src, tgt, phi):
    """Matrix whose row j is the image of the j-th generator of src in tgt coordinates."""
    images = induced_core_images(src, tgt, phi)
    rows = []
    for j in range(src.ngens):
        vec = src.generator_lift(j)
        out = {}
        for b, c in vec.items():
            for k, v in images[b].items():
                out[k] = out.get(k, 0) + c * v
        rows.append(tgt.reduce(tgt.coords_from_B(out)))
    return rows


def compose_maps(f, g, tgt):
    """Row-vector composition f then g, reduced in tgt coordinates."""
    if not f:
        return []
    inner = len(g[0]) if g else 0
    out = []
    for row in f:
        v = [0] * inner
        for a, grow in zip(row, g):
            for k, b in enumerate(grow):
                v[k] += a * b
        out.append(tgt.reduce(v))
    return out


def hom_kernel(src_moduli, tgt_moduli, Phi):
    """Basis of {x : x Phi = 0 in the target} for maps between f.g. abelian groups."""
    a, b = len(src_moduli), len(tgt_moduli)
    if a == 0:
        return []
    T = []
    for i, d in enumerate(tgt_moduli):
        if d:
            row = [0] * b
            row[i] = d
            T.append(row)
    if b == 0:
        return zlattice.identity(a)
    stacked = [list(r) for r in Phi] + T
    ker = zlattice.left_kernel(stacked, len(stacked), b)
    return [r[:a] for r in ker]


def is_zero_in(moduli, v):
    return all((x % d == 0) if d else x == 0 for x, d in zip(v, moduli))


def map_is_injective(src_moduli, tgt_moduli, Phi):
    return all(is_zero_in(src_moduli, v) for v in hom_kernel(src_moduli, tgt_moduli, Phi))


def surjection_matrix(ext, res):
    """Images of the generators of the extended group in kj2 coordinates (identity on cores)."""
    rows = []
    for j in range(ext.ngens):
        rows.append(res.reduce(res.coords_from_B(ext.generator_lift(j))))
    return rows


def map_is_surjective(tgt_moduli, Phi):
    n = len(tgt_moduli)
    rel = [list(r) for r in Phi]
    for i, d in enumerate(tgt_moduli):
        if d:
            row = [0] * n
            row[i] = d
            rel.append(row)
    return zlattice.cokernel_structure(rel, n).is_trivial


# -- universal extension ---------------------------------------------------------


@dataclass
class UniversalExtension:
    group: FiniteGroup
    kernel: SubgroupHandle
    projection: tuple  # element of the extension -> element of N (index in F)
    kj2: KJ2Result
    torsion_cocycle: dict


def universal_extension(N, F, cap=DEFAULT_KJ2_CAP, progress=None):
    """Finite realisation of [V,U]/R as pairs (n, k), k in K^J_2(N,F)."""
    if not is_perfect(F):
        raise NotPerfect("F is not perfect")
    if not is_full(N, F):
        raise NotFull("N is not full in F")
    data = canonical_extension(N, F, cap=cap, progress=progress)
    res = _kj2_from_data(data, certificates=True)
    if res.structure.free_rank:
        raise InfiniteKernel("K^J_2(N,F) = %s has positive free rank" % res.structure)
    renv = data.renv
    q = data.quotient
    nt = len(q.torsion)
    # For n in N pick a_n in A with epsilon(a_n) = -e_n (solvable because N is full).
    # Then (n, a_n + k) realises [V,U]/R and the cocycle shifts by a_m + a_n - a_mn,
    # which has zero torsion part, so only the torsion part of the cocycle survives.
    nS = len(renv.ucore)
    for n in N.members:
        if not n:
            continue
        target = [0] * nS
        target[renv.s_pos[n]] = -1
        if q.free_rank == 0 or zlattice.solve_left(res.eps_free, target, nS) is None:
            raise NotFull("no lift of %d into [V,U]/R" % n)
    mods = list(q.torsion)
    members = list(N.members)
    pos = {x: i for i, x in enumerate(members)}
    kelems = [()]
    for d in mods:
        kelems = [e + (v,) for e in kelems for v in range(d)]
    kpos = {e: i for i, e in enumerate(kelems)}
    nk = len(kelems)
    coc = {}
    for m in members:
        for n in members:
            y = q.coords(data.cocycle(m, n))
            coc[(m, n)] = tuple(y[:nt])
    t = F.table
    rows = []
    for m in members:
        for a in kelems:
            row = []
            for n in members:
                c = coc[(m, n)]
                mn = pos[t[m][n]]
                for b in kelems:
                    s = tuple((x + y + z) % d for x, y, z, d in zip(a, b, c, mods))
                    row.append(mn * nk + kpos[s])
            rows.append(row)
    G = FiniteGroup(rows, name="univ(%s)" % F.name, check=False)
    G.check_axioms(assoc_bound=200)
    kernel = SubgroupHandle(G, range(nk))
    proj = tuple(members[i // nk] for i in range(G.order))
    return UniversalExtension(G, kernel, proj, res, coc)


def k2(N, F, cap=DEFAULT_KJ2_CAP):
    if not is_perfect(F):
        raise NotPerfect("F is not perfect")
    return kj2(commutator_subgroup(N, F), F, cap=cap, certificates=False).structure


# -- Hopf oracle -------------------------------------------------------------------


@dataclass
class Presentation:
    generators: list
    relators: list  # each a list of (generator index, +-1)

    @classmethod
    def parse(cls, gens, relators):
        gens = list(gens)
        pos = {g: i for i, g in enumerate(gens)}
        return cls(gens, [_parse_relator(r, pos) for r in relators])


_ITEM = re.compile(r"\s*(\(|\)|\^-?\d+|[A-Za-z])")


def _parse_relator(text, pos):
    """Letters are generators, upper case inverts, ``(w)^k`` and ``x^k`` repeat."""
    tokens = _ITEM.findall(text)
    if "".join(tokens).replace(" ", "") != text.replace(" ", ""):
        raise ParseError("cannot parse relator %r" % text)
    stack = [[]]
    for tok in tokens:
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if len(stack) == 1:
                raise ParseError("unbalanced ')' in %r" % text)
            grp = stack.pop()
            stack[-1].append(grp)
        elif tok.startswith("^"):
            k = int(tok[1:])
            if not stack[-1]:
                raise ParseError("dangling power in %r" % text)
            last = stack[-1].pop()
            word = last if isinstance(last, list) else [last]
            if k < 0:
                word = [(g, -s) for g, s in reversed(word)]
                k = -k
            stack[-1].append(word * k)
        else:
            low = tok.lower()
            if low not in pos:
                raise ParseError("unknown generator %r" % tok)
            stack[-1].append((pos[low], -1 if tok.isupper() else 1))
    if len(stack) != 1:
        raise ParseError("unbalanced '(' in %r" % text)

    def flat(items):
        for it in items:
            if isinstance(it, list):
                yield from flat(it)
            else:
                yield it

    return list(flat(stack[0]))


def coset_enumeration(pres, cap=200000):
    """Todd-Coxeter (HLT) for the trivial subgroup; returns the coset table.

    Columns 2i and 2i+1 hold generator i and its inverse.
    """
    k = len(pres.generators)
    ncol = 2 * k
    table = [[None] * ncol]
    p = [0]
    rels = [[2 * g + (0 if s > 0 else 1) for g, s in r] for r in pres.relators]

    def inv(c):
        return c ^ 1

    def rep(c):
        r = c
        while p[r] != r:
            r = p[r]
        while p[c] != r:
            p[c], c = r, p[c]
        return r

    def merge(a, b, queue):
        a, b = rep(a), rep(b)
        if a == b:
            return
        if b < a:
            a, b = b, a
        p[b] = a
        queue.append(b)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(ncol):
                f = table[e][x]
                if f is None:
                    continue
                if table[f][inv(x)] == e:
                    table[f][inv(x)] = None
                e1, f1 = rep(e), rep(f)
                if table[e1][x] is not None:
                    merge(f1, table[e1][x], queue)
                elif table[f1][inv(x)] is not None:
                    merge(e1, table[f1][inv(x)], queue)
                else:
                    table[e1][x] = f1
                    table[f1][inv(x)] = e1

    def define(c, x):
        if len(table) >= cap:
            raise CapExceeded("coset enumeration exceeded %d cosets" % cap)
        d = len(table)
        table.append([None] * ncol)
        p.append(d)
        table[c][x] = d
        table[d][inv(x)] = c

    def scan_and_fill(c, w):
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][inv(w[j])] is not None:
                b = table[b][inv(w[j])]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][inv(w[i])] = f
                return
            define(f, w[i])

    c = 0
    while c < len(table):
        if p[c] == c:
            for w in rels:
                if p[c] != c:
                    break
                scan_and_fill(c, w)
            if p[c] == c:
                for x in range(ncol):
                    if table[c][x] is None:
                        define(c, x)
        c += 1
    live = [c for c in range(len(table)) if p[c] == c]
    pos = {c: i for i, c in enumerate(live)}
    out = [[pos[rep(table[c][x])] for x in range(ncol)] for c in live]
    return out


def _tree_and_schreier(table, k):
    n = len(table)
    parent = [None] * n
    parent[0] = ()
    tree = set()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for col in range(2 * k):
            d = table[c][col]
            if parent[d] is None:
                g, s = col // 2, (1 if col % 2 == 0 else -1)
                parent[d] = parent[c] + ((g, s),)
                tree.add((c, g) if s > 0 else (d, g))
                queue.append(d)
    gens = [(c, g) for c in range(n) for g in range(k) if (c, g) not in tree]
    return parent, gens


def schur_hopf(pres, cap=200000):
    """H_2 of a finite presented group: torsion-free-corrected (R ∩ [X,X]) / [X,R]."""
    table = coset_enumeration(pres, cap=cap)
    k = len(pres.generators)
    n = len(table)
    if k == 0:
        return zlattice.AbelianGroupStructure(), n
    paths, sgens = _tree_and_schreier(table, k)
    spos = {e: i for i, e in enumerate(sgens)}

    def rewrite(word):
        vec = {}
        c = 0
        for g, s in word:
            if s > 0:
                e = (c, g)
                c = table[c][2 * g]
            else:
                c = table[c][2 * g + 1]
                e = (c, g)
            i = spos.get(e)
            if i is not None:
                vec[i] = vec.get(i, 0) + s
        if c != 0:
            raise NotFinite("word does not close up in the coset table")
        return {i: v for i, v in vec.items() if v}

    def sword(c, g):
        d = table[c][2 * g]
        return list(paths[c]) + [(g, 1)] + [(h, -s) for h, s in reversed(paths[d])]

    rows = []
    for idx, (c, g) in enumerate(sgens):
        w = sword(c, g)
        for y in range(k):
            v = rewrite([(y, 1)] + w + [(y, -1)])
            v[idx] = v.get(idx, 0) - 1
            v = {i: x for i, x in v.items() if x}
            if v:
                rows.append(v)
    q = zlattice.AbelianQuotient(rows, len(sgens))
    nt = len(q.torsion)

    def expsum(word):
        out = [0] * k
        for g, s in word:
            out[g] += s
        return out

    gen_exp = [expsum(sword(c, g)) for c, g in sgens]
    W = []
    for j in range(q.free_rank):
        lift = q.lift(nt + j)
        row = [0] * k
        for i, c in lift.items():
            for t in range(k):
                row[t] += c * gen_exp[i][t]
        W.append(row)
    for j in range(nt):
        lift = q.lift(j)
        row = [0] * k
        for i, c in lift.items():
            for t in range(k):
                row[t] += c * gen_exp[i][t]
        if any(row):
            raise AssertionError("torsion relator image has nonzero exponent sum")
    free = len(zlattice.left_kernel(W, len(W), k)) if W else 0
    return zlattice.AbelianGroupStructure(free, q.torsion), n


STANDARD_PRESENTATIONS = {
    "C2": (["a"], ["a^2"]),
    "C3": (["a"], ["a^3"]),
    "C4": (["a"], ["a^4"]),
    "C6": (["a"], ["a^6"]),
    "C2xC2": (["a", "b"], ["a^2", "b^2", "(ab)^2"]),
    "C2xC2xC2": (["a", "b", "c"], ["a^2", "b^2", "c^2", "abAB", "acAC", "bcBC"]),
    "S3": (["a", "b"], ["a^2", "b^3", "(ab)^2"]),
    "D4": (["a", "b"], ["a^4", "b^2", "(ab)^2"]),
    "Q8": (["a", "b"], ["a^4", "a^2B^2", "baBa"]),
    "A4": (["a", "b"], ["a^2", "b^3", "(ab)^3"]),
    "A5": (["a", "b"], ["a^2", "b^3", "(ab)^5"]),
}


def standard_presentation(name):
    gens, rels = STANDARD_PRESENTATIONS[name]
    return Presentation.parse(gens, rels)

