"""Exact integer linear algebra over Z.

Matrices are lists of rows.  Dense rows are lists of ints; sparse rows are
``{col: value}`` dicts.  Everything is arbitrary precision.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd


@dataclass(frozen=True)
class AbelianGroupStructure:
    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        tor = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in tor):
            raise ValueError("invariant factors must be >= 2")
        if any(tor[i + 1] % tor[i] for i in range(len(tor) - 1)):
            raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "torsion", tor)

    @classmethod
    def from_diagonal(cls, diag, ncols):
        """Cokernel of a matrix whose Smith diagonal is ``diag`` (nonzeros)."""
        nz = [abs(d) for d in diag if d]
        return cls(ncols - len(nz), tuple(d for d in nz if d != 1))

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self):
        if self.free_rank:
            return None
        r = 1
        for d in self.torsion:
            r *= d
        return r

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else "Z^%d" % self.free_rank)
        parts += ["Z/%d" % d for d in self.torsion]
        return " x ".join(parts) if parts else "0"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "text": str(self)}


# -- small helpers -------------------------------------------------------------


def xgcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    Bt = list(zip(*B)) if B else []
    if not Bt:
        return [[] for _ in A]
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def vecmat(v, M, ncols=None):
    if ncols is None:
        ncols = len(M[0]) if M else 0
    out = [0] * ncols
    for a, row in zip(v, M):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] += a * b
    return out


def determinant(M):
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def to_dense(rows, ncols):
    out = []
    for r in rows:
        if isinstance(r, dict):
            d = [0] * ncols
            for j, v in r.items():
                d[j] = v
            out.append(d)
        else:
            out.append(list(r))
    return out


# -- Smith normal form -----------------------------------------------------------


@dataclass
class SmithForm:
    S: list
    U: list
    V: list
    Vinv: list
    diagonal: list = field(default_factory=list)

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(M, ncols=None, want_u=True):
    """Return SmithForm with U*M*V = S and Vinv = V^-1.

    Pivot choice: smallest absolute nonzero entry, ties broken by position.
    """
    m = len(M)
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    A = [list(r) for r in to_dense(M, n)]
    U = identity(m) if want_u else None
    V = identity(n)
    Vi = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):  # row dst += q * row src
        if q:
            rs, rd = A[src], A[dst]
            for k in range(n):
                if rs[k]:
                    rd[k] += q * rs[k]
            if U is not None:
                us, ud = U[src], U[dst]
                for k in range(m):
                    if us[k]:
                        ud[k] += q * us[k]

    def add_col(dst, src, q):  # col dst += q * col src
        if q:
            for r in A:
                if r[src]:
                    r[dst] += q * r[src]
            for r in V:
                if r[src]:
                    r[dst] += q * r[src]
            # inverse: row src of Vinv -= q * row dst
            vd, vs = Vi[dst], Vi[src]
            for k in range(n):
                if vd[k]:
                    vs[k] -= q * vd[k]

    def neg_row(i):
        A[i] = [-v for v in A[i]]
        if U is not None:
            U[i] = [-v for v in U[i]]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    add_row(i, t, -q)
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    add_col(j, t, -q)
                    if A[t][j]:
                        done = False
            if done:
                # divisibility: any entry not divisible by p is pulled into row t
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                add_row(t, bad, 1)
                continue
            # move the smallest entry of row/column t into the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, i, j = min(cand)
            swap_rows(t, i)
            swap_cols(t, j)
        if A[t][t] < 0:
            neg_row(t)
        t += 1
    diag = [A[i][i] for i in range(min(m, n))]
    return SmithForm(A, U, V, Vi, diag)


def verify_smith(M, sf, ncols=None):
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    D = to_dense(M, n)
    if sf.U is not None and matmul(matmul(sf.U, D), sf.V) != sf.S and D:
        return False
    if n and matmul(sf.V, sf.Vinv) != identity(n):
        return False
    for i, row in enumerate(sf.S):
        for j, v in enumerate(row):
            if i != j and v:
                return False
    d = [x for x in sf.diagonal]
    nz = [x for x in d if x]
    if any(x < 0 for x in nz) or any(nz[i + 1] % nz[i] for i in range(len(nz) - 1)):
        return False
    if nz and any(x for x in d[len(nz):]):
        return False
    if sf.U is not None and len(sf.U) and abs(determinant(sf.U)) != 1:
        return False
    if n and abs(determinant(sf.V)) != 1:
        return False
    return True


# -- Hermite normal form -----------------------------------------------------


def _insert(basis, v, n):
    """Add row v to an echelon basis {pivot col: row}; returns nothing."""
    for c in range(n):
        if not v[c]:
            continue
        b = basis.get(c)
        if b is None:
            if v[c] < 0:
                v = [-x for x in v]
            basis[c] = v
            return
        a, p = v[c], b[c]
        if a % p == 0:
            q = a // p
            v = [x - q * y for x, y in zip(v, b)]
            continue
        g, s, t = xgcd(p, a)
        nb = [s * y + t * x for x, y in zip(v, b)]
        v = [(p // g) * x - (a // g) * y for x, y in zip(v, b)]
        basis[c] = nb


def hermite_normal_form(M, ncols=None):
    """Row-style HNF: nonzero rows, positive pivots, entries above pivots reduced."""
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    basis = {}
    for r in to_dense(M, n):
        if any(r):
            _insert(basis, list(r), n)
    cols = sorted(basis)
    rows = [basis[c] for c in cols]
    for k in range(len(rows)):
        c = cols[k]
        p = rows[k][c]
        for i in range(k):
            q = rows[i][c] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[k])]
    return rows


def in_lattice(v, hnf_rows):
    v = list(v)
    for row in hnf_rows:
        c = next(j for j, x in enumerate(row) if x)
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return not any(v)


def lattice_equal(A, B, ncols):
    return hermite_normal_form(A, ncols) == hermite_normal_form(B, ncols)


def lattice_contains(big, small, ncols):
    H = hermite_normal_form(big, ncols)
    return all(in_lattice(v, H) for v in to_dense(small, ncols))


def left_kernel(M, nrows=None, ncols=None):
    """Basis of {x : x M = 0} (rows of U beyond the rank)."""
    m = nrows if nrows is not None else len(M)
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    if m == 0:
        return []
    if n == 0:
        return identity(m)
    sf = smith_normal_form(M, n)
    return [list(r) for r in sf.U[sf.rank:]]


def solve_left(M, b, ncols=None):
    """Integer x with x M = b, or None."""
    n = ncols if ncols is not None else len(b)
    m = len(M)
    if m == 0:
        return [] if not any(b) else None
    sf = smith_normal_form(M, n)
    # x M = b  <=>  (x U^-1) S = b V
    bv = vecmat(b, sf.V, n)
    y = [0] * m
    for i, d in enumerate(sf.diagonal):
        if d:
            if bv[i] % d:
                return None
            y[i] = bv[i] // d
        elif bv[i]:
            return None
    if any(bv[len(sf.diagonal):]):
        return None
    # x = y U
    return vecmat(y, sf.U, m)


# -- finitely presented abelian groups ----------------------------------------


def cokernel_structure(M, ncols=None):
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    return AbelianQuotient(M, n).structure


def subgroup_in_quotient(relations, subgens, ncols=None):
    """Structure of the subgroup of Z^n/rowspace(relations) generated by subgens."""
    n = ncols if ncols is not None else (len(subgens[0]) if subgens else (len(relations[0]) if relations else 0))
    G = to_dense(subgens, n)
    R = to_dense(relations, n)
    k = len(G)
    if k == 0:
        return AbelianGroupStructure()
    # H = Z^k / {x : x G in rowspace R}; compute that lattice via left kernel of [G; R]
    stacked = G + R
    ker = left_kernel(stacked, len(stacked), n)
    rel = [row[:k] for row in ker]
    return cokernel_structure(rel, k)


def sparse_eliminate(rows, ncols, budget=None):
    """Unit-pivot elimination on sparse rows.

    Returns (pivots, rest): ``pivots`` is a list of ``(col, row)`` in
    elimination order with ``row[col] = +-1``; ``rest`` are the reduced
    remaining rows, free of every pivot column.
    """
    rows = [dict(r) for r in rows if r]
    col = {}
    for i, r in enumerate(rows):
        for j in r:
            col.setdefault(j, set()).add(i)
    alive = set(range(len(rows)))
    pivots = []
    heap = [(len(r), i) for i, r in enumerate(rows)]
    heapq.heapify(heap)
    while heap:
        ln, i = heapq.heappop(heap)
        if i not in alive:
            continue
        r = rows[i]
        if len(r) != ln:
            heapq.heappush(heap, (len(r), i))
            continue
        if not r:
            alive.discard(i)
            continue
        cands = [j for j, c in r.items() if c == 1 or c == -1]
        if not cands:
            continue
        j = min(cands, key=lambda c: (len(col[c]), c))
        pv = r[j]
        alive.discard(i)
        for k in r:
            col[k].discard(i)
        for i2 in list(col[j]):
            r2 = rows[i2]
            f = r2[j] * pv
            for k, c in r.items():
                nv = r2.get(k, 0) - f * c
                if nv:
                    if k not in r2:
                        col[k].add(i2)
                    r2[k] = nv
                elif k in r2:
                    del r2[k]
                    col[k].discard(i2)
            heapq.heappush(heap, (len(r2), i2))
        pivots.append((j, r))
        del col[j]
        if budget is not None:
            budget()
    rest = [rows[i] for i in sorted(alive) if rows[i]]
    return pivots, rest


class AbelianQuotient:
    """Z^n modulo the row lattice of ``relations`` with explicit coordinates.

    ``coords(x)`` sends a vector of Z^n to (torsion residues, free part), and
    ``lift(k)`` returns a preimage of the k-th generator of the quotient.
    Torsion generators come first (orders ``torsion``), then free ones.
    """

    def __init__(self, relations, ncols, progress=None):
        self.ncols = n = ncols
        sparse = []
        for r in relations:
            if isinstance(r, dict):
                d = {j: v for j, v in r.items() if v}
            else:
                d = {j: v for j, v in enumerate(r) if v}
            if d:
                sparse.append(d)
        seen = set()
        uniq = []
        for d in sparse:
            key = tuple(sorted(d.items()))
            neg = tuple((j, -v) for j, v in key)
            if key in seen or neg in seen:
                continue
            seen.add(key)
            uniq.append(d)
        pivots, rest = sparse_eliminate(uniq, n, budget=progress)
        pivcols = {j for j, _ in pivots}
        self.survivors = [j for j in range(n) if j not in pivcols]
        spos = {j: k for k, j in enumerate(self.survivors)}
        m = len(self.survivors)
        # expression of every eliminated column over the survivors
        expr = {}
        for j, r in reversed(pivots):
            p = r[j]
            acc = {}
            for k, c in r.items():
                if k == j:
                    continue
                src = expr.get(k)
                if src is None:
                    acc[spos[k]] = acc.get(spos[k], 0) - p * c
                else:
                    for kk, cc in src.items():
                        acc[kk] = acc.get(kk, 0) - p * c * cc
            expr[j] = {k: v for k, v in acc.items() if v}
        self._expr = expr
        self._spos = spos
        basis = {}
        for r in rest:
            v = [0] * m
            for j, c in r.items():
                v[spos[j]] = c
            _insert(basis, v, m)
        H = [basis[c] for c in sorted(basis)]
        sf = smith_normal_form(H, m, want_u=False)
        self._V = sf.V
        self._Vinv = sf.Vinv
        diag = list(sf.diagonal) + [0] * (m - len(sf.diagonal))
        self._slots = []  # (position in y, modulus or 0)
        for i, d in enumerate(diag):
            if d == 1:
                continue
            self._slots.append((i, d))
        tors = [(i, d) for i, d in self._slots if d]
        free = [(i, d) for i, d in self._slots if not d]
        self._slots = tors + free
        self.torsion = tuple(d for _, d in tors)
        self.free_rank = len(free)
        self.structure = AbelianGroupStructure(self.free_rank, self.torsion)

    @property
    def ngens(self):
        return len(self._slots)

    @property
    def moduli(self):
        return [d for _, d in self._slots]

    def reduce_vector(self, x):
        """Image of x in Z^survivors (applies the eliminations)."""
        m = len(self.survivors)
        out = [0] * m
        items = x.items() if isinstance(x, dict) else enumerate(x)
        for j, c in items:
            if not c:
                continue
            e = self._expr.get(j)
            if e is None:
                out[self._spos[j]] += c
            else:
                for k, v in e.items():
                    out[k] += c * v
        return out

    def coords(self, x):
        """Quotient coordinates: torsion entries reduced mod their orders."""
        z = self.reduce_vector(x)
        y = vecmat(z, self._V, len(self.survivors)) if z else []
        out = []
        for i, d in self._slots:
            out.append(y[i] % d if d else y[i])
        return out

    def lift(self, k):
        i, _ = self._slots[k]
        row = self._Vinv[i]
        return {self.survivors[j]: v for j, v in enumerate(row) if v}

    def is_zero(self, x):
        return not any(self.coords(x))
