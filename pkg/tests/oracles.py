"""Brute-force reference computations used by the tests.

Nothing here calls into the library's algorithms; inputs and outputs are
plain tuples and integers.
"""

from itertools import product


def perm_mul(p, q):
    # apply p first, then q (1-based images)
    return tuple(q[p[i] - 1] for i in range(len(p)))


def perm_closure(degree, gens):
    e = tuple(range(1, degree + 1))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def perm_inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def subgroup_closure(elements, mul, e):
    S = {e} | set(elements)
    changed = True
    while changed:
        changed = False
        for a in list(S):
            for b in list(S):
                c = mul(a, b)
                if c not in S:
                    S.add(c)
                    changed = True
    return S


def table_commutator_subgroup(table, inverse, A, B):
    comms = {table[table[table[a][b]][inverse[a]]][inverse[b]] for a in A for b in B}
    return subgroup_closure(comms, lambda x, y: table[x][y], 0)


def reduce_letters(seq):
    out = []
    for a in seq:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def products_up_to(gens, length):
    """All reduced products of at most `length` generators or inverses."""
    letters = [tuple(g) for g in gens] + [tuple(-a for a in reversed(g)) for g in gens]
    found = {()}
    frontier = {()}
    for _ in range(length):
        nxt = set()
        for w in frontier:
            for g in letters:
                v = reduce_letters(w + g)
                if v not in found:
                    nxt.add(v)
        found |= nxt
        frontier = nxt
    return found


def finite_cokernel_counts(rows, n, D):
    """|Q[k]| for Q = Z^n / rowspace, assuming D*Z^n lies in the rowspace.

    Works in (Z/D)^n: builds the image S of the rows by closure and counts
    x with k*x in S.  Returns (|Q|, {k: |Q[k]|}) for every k dividing D.
    """
    zero = (0,) * n
    S = {zero}
    gens = [tuple(v % D for v in r) for r in rows]
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % D for a, b in zip(x, g))
                if y not in S:
                    S.add(y)
                    nxt.append(y)
        frontier = nxt
    total = D**n // len(S)
    counts = {}
    for k in range(1, D + 1):
        if D % k:
            continue
        c = sum(1 for x in product(range(D), repeat=n) if tuple((k * a) % D for a in x) in S)
        counts[k] = c // len(S)
    return total, counts


def predicted_counts(torsion, D):
    """|Q[k]| = prod gcd(k, d_i) for a finite abelian group with factors d_i."""
    from math import gcd

    out = {}
    for k in range(1, D + 1):
        if D % k:
            continue
        v = 1
        for d in torsion:
            v *= gcd(k, d)
        out[k] = v
    return out


def elementwise_order(table, x):
    k, y = 1, x
    while y != 0:
        y = table[y][x]
        k += 1
    return k
