"""The free envelope U_F of a finite group and its relative pieces.

Internally a word of U_F is a tuple of nonzero ints: ``x`` stands for u_x and
``-x`` for its inverse (x a non-identity element index).  Public functions
accept and return :class:`Word` objects over the tag ``"u"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import zlattice
from .errors import NotMember, NotNormal
from .fingroup import is_normal, quotient
from .freeword import GenId, Word

TAG = "u"


def reduce_ints(seq):
    out = []
    for a in seq:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def inv_ints(w):
    return tuple(-a for a in reversed(w))


class Envelope:
    """U_F: one free generator u_x per non-identity x; u_1 is the empty word."""

    def __init__(self, F):
        self.F = F
        self.n = F.order
        self.alphabet = [GenId(TAG, x) for x in range(1, self.n)]

    # -- conversions
    def u(self, x, power=1):
        return self.to_word((x,) * power if power >= 0 else (-x,) * -power)

    def to_word(self, w):
        return Word._raw(tuple((GenId(TAG, abs(a)), 1 if a > 0 else -1) for a in reduce_ints(w)))

    def from_word(self, w):
        out = []
        for g, s in w.letters:
            if g.tag != TAG or not 0 < g.index < self.n:
                raise NotMember("letter %s is not a generator of this envelope" % (g,))
            out.append(g.index * s)
        return tuple(out)

    def assignment(self):
        return {g: g.index for g in self.alphabet}

    # -- evaluation and Lemma-2 rewriting
    def evaluate(self, w):
        t, iv = self.F.table, self.F.inverse
        r = 0
        for a in w:
            r = t[r][a] if a > 0 else t[r][iv[-a]]
        return r

    def l2_index(self, x, y):
        return (x - 1) * (self.n - 1) + (y - 1)

    def l2_pair(self, i):
        return divmod(i, self.n - 1)[0] + 1, i % (self.n - 1) + 1

    @property
    def l2_size(self):
        return (self.n - 1) ** 2

    def l2_word(self, x, y):
        """u_x u_y u_{xy}^-1 with the u_1 convention."""
        xy = self.F.table[x][y]
        return reduce_ints([a for a in (x, y, -xy) if a])

    def l2_coords(self, w, acc=None, scale=1):
        """Exponent vector of a J_F word over the free basis of J_F.

        Walks the Cayley graph; each step from state ``cur`` along u_g picks
        up the basis letter for the pair (cur, g).  Returns (dict, endpoint).
        """
        t, iv = self.F.table, self.F.inverse
        m = self.n - 1
        out = {} if acc is None else acc
        cur = 0
        for a in w:
            if a > 0:
                if cur:
                    k = (cur - 1) * m + a - 1
                    out[k] = out.get(k, 0) + scale
                cur = t[cur][a]
            else:
                g = -a
                p = t[cur][iv[g]]
                if p:
                    k = (p - 1) * m + g - 1
                    out[k] = out.get(k, 0) - scale
                cur = p
        return out, cur


def jf_basis(env):
    """The (|F|-1)^2 words u_x u_y u_{xy}^-1, x, y != 1."""
    return [env.to_word(env.l2_word(x, y)) for x in range(1, env.n) for y in range(1, env.n)]


@dataclass(frozen=True)
class CoreElement:
    kind: str  # B1, B2, B3 or UCore
    indices: tuple
    ints: tuple

    def word(self, env):
        return env.to_word(self.ints)


class RelativeEnvelope:
    """U_{N,F} and J_{N,F} inside U_F, with coordinates on J/[J,J_F] folded over the section."""

    def __init__(self, F, N, env=None):
        if N.parent is not F or not is_normal(N, F):
            raise NotNormal("N must be a normal subgroup of F")
        self.F = F
        self.N = N
        self.env = env or Envelope(F)
        self.Q = quotient(F, N)
        self.reps = self.Q.reps  # reps[0] == 0
        self.rep_of = tuple(self.reps[c] for c in self.Q.proj)
        self.is_rep = [False] * F.order
        for r in self.reps:
            self.is_rep[r] = True
        self.in_N = [False] * F.order
        for c in N.members:
            self.in_N[c] = True
        self._build_cores()
        self._build_coordinates()

    # -- the cores of Lemma 1 and Lemma 3
    def _build_cores(self):
        F, env = self.F, self.env
        t = F.table
        Nn = [c for c in self.N.members if c]
        Nall = list(self.N.members)
        R1 = [x for x in self.reps if x]
        b1 = [CoreElement("B1", (c, d), env.l2_word(c, d)) for c in Nn for d in Nn]
        b2 = [CoreElement("B2", (x, d), env.l2_word(x, d)) for x in R1 for d in Nn]
        b3 = []
        for c in Nn:
            for d in Nall:
                for y in R1:
                    dy = t[d][y]
                    b3.append(CoreElement("B3", (c, d, y), reduce_ints([a for a in (c, dy, -t[c][dy]) if a])))
        self.B = b1 + b2 + b3
        self.ucore = [
            CoreElement("UCore", (x,), reduce_ints([a for a in (x, -self.rep_of[x]) if a]))
            for x in range(1, F.order)
            if not self.is_rep[x]
        ]
        self.s_letters = [ce.indices[0] for ce in self.ucore]
        self.s_pos = {x: i for i, x in enumerate(self.s_letters)}

    def cores(self):
        out = {"B1": [], "B2": [], "B3": [], "UCore": list(self.ucore)}
        for ce in self.B:
            out[ce.kind].append(ce)
        return out

    # -- coordinates
    def _build_coordinates(self):
        env = self.env
        n = self.F.order
        lam = set()
        for x in self.reps:
            for y in self.reps:
                if x and y:
                    lam.add(env.l2_index(x, y))
        self.E = [i for i in range(env.l2_size) if i not in lam]
        self.E_pos = {i: k for k, i in enumerate(self.E)}
        nb = len(self.B)
        core_rows = []
        for z in self.reps:
            for ce in self.B:
                w = reduce_ints((z,) + ce.ints + (-z,)) if z else ce.ints
                coords, end = env.l2_coords(w)
                assert end == 0
                row = {}
                for i, c in coords.items():
                    if c:
                        k = self.E_pos.get(i)
                        if k is not None:
                            row[k] = c
                core_rows.append(row)
        if len(core_rows) != len(self.E):
            raise AssertionError("core count %d differs from |E| = %d" % (len(core_rows), len(self.E)))
        self.identity_core = all(r == {k: 1} for k, r in enumerate(core_rows)) and len(self.reps) == 1
        if self.identity_core:
            self._fold = None
            self._E_to_B = None
            self._E_to_ZB = None
            return
        inverse = _unimodular_inverse(core_rows, len(self.E))
        self._E_to_ZB = inverse
        # fold core index (z, b) -> b
        fold = []
        for e in range(len(self.E)):
            acc = {}
            for k, v in inverse[e].items():
                b = k % nb
                acc[b] = acc.get(b, 0) + v
            fold.append({b: v for b, v in acc.items() if v})
        self._E_to_B = fold

    @property
    def rank(self):
        return len(self.B)

    def member_unf(self, w):
        """Letterwise projection to U_{F/N} reduces to the empty word."""
        proj = self.Q.proj
        img = reduce_ints([(proj[a] if a > 0 else -proj[-a]) for a in w if proj[abs(a)]])
        return not img

    def member_jnf(self, w):
        return self.member_unf(w) and self.env.evaluate(w) == 0

    def kappa(self, w, check=True):
        """Core coordinates (dict over B indices) of a J_{N,F} word given as ints."""
        if check and not self.member_jnf(w):
            raise NotMember("word is not in J_{N,F}")
        coords, _ = self.env.l2_coords(w)
        return self._fold_coords(coords)

    def _fold_coords(self, coords):
        if self.identity_core:
            return {k: v for k, v in coords.items() if v}
        out = {}
        for i, c in coords.items():
            if not c:
                continue
            k = self.E_pos.get(i)
            if k is None:
                continue
            for b, v in self._E_to_B[k].items():
                out[b] = out.get(b, 0) + c * v
        return {b: v for b, v in out.items() if v}

    def e_coords(self, w):
        """Lemma-2 exponent sums of a J_F word restricted to E (dict over E positions)."""
        coords, _ = self.env.l2_coords(w)
        out = {}
        for i, c in coords.items():
            k = self.E_pos.get(i)
            if c and k is not None:
                out[k] = c
        return out

    def unfolded_coords(self, w):
        """Coordinates over the rep-conjugates u_z b u_z^-1, index zi*|B| + b."""
        e = self.e_coords(w)
        if self.identity_core:
            return e
        out = {}
        for k, c in e.items():
            for j, v in self._E_to_ZB[k].items():
                out[j] = out.get(j, 0) + c * v
        return {j: v for j, v in out.items() if v}

    def unfolded_word(self, j):
        """The rep-conjugate u_z b u_z^-1 with index j."""
        zi, b = divmod(j, len(self.B))
        z = self.reps[zi]
        ints = self.B[b].ints
        return reduce_ints((z,) + ints + (-z,)) if z else ints

    def core_coordinates(self, w):
        w = self.env.from_word(w) if isinstance(w, Word) else tuple(w)
        d = self.kappa(w)
        vec = [0] * len(self.B)
        for b, v in d.items():
            vec[b] = v
        return vec

    def epsilon(self, w):
        """Exponent sums of the non-representative letters (V/[V,U] = Z^S)."""
        out = {}
        for a in w:
            k = self.s_pos.get(abs(a))
            if k is not None:
                out[k] = out.get(k, 0) + (1 if a > 0 else -1)
        return {k: v for k, v in out.items() if v}

    def section_word(self, m):
        """UCore-induced section N -> U_{N,F}: m maps to u_m."""
        return (m,) if m else ()

    def lemma1_family(self, depth):
        """Conjugates of UCore by reduced words of length <= depth in rep letters."""
        rl = [x for x in self.reps if x]
        letters = rl + [-x for x in rl]
        conj = [()]
        frontier = [()]
        for _ in range(depth):
            nxt = []
            for w in frontier:
                for a in letters:
                    if w and w[-1] == -a:
                        continue
                    nxt.append(w + (a,))
            conj += nxt
            frontier = nxt
        out = []
        for c in conj:
            for ce in self.ucore:
                out.append(reduce_ints(c + ce.ints + inv_ints(c)))
        return out

    def lemma4_family(self, depth=1):
        """sigma-conjugates of B1, the commutator form of B2, and u_c B3' u_c^-1."""
        t = self.F.table
        iv = self.F.inverse
        Nn = [c for c in self.N.members if c]
        R1 = [x for x in self.reps if x]
        base = [ce.ints for ce in self.B if ce.kind == "B1"]
        for x in R1:
            for d in Nn:
                xdx = t[t[x][d]][iv[x]]
                base.append(reduce_ints([x, d, -x, -d, d] + ([-xdx] if xdx else [])))
        for c in Nn:
            for y in R1:
                cy = t[c][y]
                b3p = [c, y, -cy]
                base.append(reduce_ints([c] + b3p + [-c]))
        fam = []
        rl = R1 + [-x for x in R1]
        conj = [()]
        frontier = [()]
        for _ in range(depth):
            nxt = [w + (a,) for w in frontier for a in rl if not (w and w[-1] == -a)]
            conj += nxt
            frontier = nxt
        for c in conj:
            for b in base:
                fam.append(reduce_ints(c + b + inv_ints(c)))
        return fam


def _unimodular_inverse(rows, n):
    """Inverse of a square integer matrix with determinant +-1 (sparse rows).

    Gauss-Jordan with unit pivots; falls back to exact rationals if no unit
    pivot is available, then insists on an integral result.
    """
    A = [dict(r) for r in rows]
    I = [{i: 1} for i in range(n)]
    col_of_row = [None] * n
    used = [False] * n
    cols = {}
    for i, r in enumerate(A):
        for j in r:
            cols.setdefault(j, set()).add(i)
    for step in range(n):
        best = None
        for i in range(n):
            if used[i]:
                continue
            for j, v in A[i].items():
                if v in (1, -1):
                    cost = (len(A[i]), len(cols.get(j, ())))
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
            if best is not None and best[0][0] == 1:
                break
        if best is None:
            return _rational_inverse(rows, n)
        _, i, j = best
        used[i] = True
        col_of_row[i] = j
        p = A[i][j]
        if p == -1:
            A[i] = {k: -v for k, v in A[i].items()}
            I[i] = {k: -v for k, v in I[i].items()}
        for i2 in list(cols.get(j, ())):
            if i2 == i:
                continue
            f = A[i2][j]
            for k, v in A[i].items():
                nv = A[i2].get(k, 0) - f * v
                if nv:
                    if k not in A[i2]:
                        cols.setdefault(k, set()).add(i2)
                    A[i2][k] = nv
                else:
                    A[i2].pop(k, None)
                    cols[k].discard(i2)
            for k, v in I[i].items():
                nv = I[i2].get(k, 0) - f * v
                if nv:
                    I[i2][k] = nv
                else:
                    I[i2].pop(k, None)
        cols[j] = {i}
    inv = [None] * n
    for i in range(n):
        inv[col_of_row[i]] = I[i]
    return inv


def _rational_inverse(rows, n):
    from fractions import Fraction

    A = [[Fraction(r.get(j, 0)) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            raise ArithmeticError("core matrix is singular")
        A[c], A[p] = A[p], A[c]
        pv = A[c][c]
        A[c] = [v / pv for v in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    out = []
    for i in range(n):
        row = {}
        for j in range(n):
            v = A[i][n + j]
            if v.denominator != 1:
                raise ArithmeticError("core matrix is not unimodular")
            if v:
                row[j] = int(v)
        out.append(row)
    return out


def core_coordinates(renv, w):
    return renv.core_coordinates(w)


def member_jnf(renv, w):
    w = renv.env.from_word(w) if isinstance(w, Word) else tuple(w)
    return renv.member_jnf(w)


def jnf_cores(renv):
    return renv.cores()


def core_matrix_determinant(renv):
    """|det| of the change of basis from E to the conjugated B-core (must be 1)."""
    env = renv.env
    rows = []
    for z in renv.reps:
        for ce in renv.B:
            w = reduce_ints((z,) + ce.ints + (-z,)) if z else ce.ints
            coords, _ = env.l2_coords(w)
            row = [0] * len(renv.E)
            for i, c in coords.items():
                if c and i in renv.E_pos:
                    row[renv.E_pos[i]] = c
            rows.append(row)
    return abs(zlattice.determinant(rows))
