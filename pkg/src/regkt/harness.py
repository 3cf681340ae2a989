"""Verification suites, excision checks and the corpus runner."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import multiplier, splittings, stallings, zlattice
from .envelope import Envelope, RelativeEnvelope, inv_ints, reduce_ints
from .errors import ParseError, RegktError
from .fingroup import (
    FORMAT_HEADER,
    all_normal_subgroups,
    direct_product,
    parse_normal_spec,
    random_relabel,
    read_group_file,
)
from .freeword import format_word, parse_word

PASS, FAIL, SKIPPED = "Pass", "Fail", "Skipped"


@dataclass
class Report:
    name: str
    verdict: str
    certificates: dict = field(default_factory=dict)
    details: list = field(default_factory=list)
    seed: int = None
    timing: float = 0.0

    @property
    def ok(self):
        return self.verdict != FAIL

    def line(self):
        extra = ("  " + "; ".join(self.details)) if self.details else ""
        return "%-6s %s%s" % (self.verdict.upper(), self.name, extra)

    def to_json(self, timing=False):
        # wall time breaks byte-identical output, so it is opt-in
        return {
            "name": self.name,
            "verdict": self.verdict,
            "certificates": self.certificates,
            "details": self.details,
            "seed": self.seed,
            "timing": round(self.timing, 3) if timing else None,
        }


def _timed(fn):
    def wrapper(*args, **kw):
        t = time.perf_counter()
        rep = fn(*args, **kw)
        rep.timing = time.perf_counter() - t
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _verdict(ok):
    return PASS if ok else FAIL


def _pair_name(N, F):
    if N.order in (1, F.order):
        return "(%d,%s)" % (N.order, F.name or "F")
    return "(%d{%s},%s)" % (N.order, ",".join(map(str, sorted(N.members))), F.name or "F")


# -- Lemma 2 -------------------------------------------------------------------


@_timed
def verify_lemma2(F, basis=None, name=None):
    """Basis of J_F: evaluates to 1, Nielsen independent, complete |F|-state graph."""
    env = Envelope(F)
    n = F.order
    if basis is None:
        basis = [env.to_word(env.l2_word(x, y)) for x in range(1, n) for y in range(1, n)]
    rep = Report(name or "lemma2 %s" % F.name, PASS)
    bad_eval = [format_word(w) for w in basis if env.evaluate(env.from_word(w)) != 0]
    g = stallings.build(basis, alphabet=env.alphabet)
    rank = g.rank() if basis else 0
    expect = (n - 1) ** 2
    complete = g.is_complete() if n > 1 else True
    states = g.num_states
    ok = not bad_eval and len(basis) == expect and rank == expect and complete and (states == n or n == 1)
    rep.verdict = _verdict(ok)
    rep.certificates = {
        "basis": [format_word(w) for w in basis],
        "rank": rank,
        "states": states,
        "complete": complete,
    }
    rep.details.append("words=%d rank=%d states=%d complete=%s" % (len(basis), rank, states, complete))
    if bad_eval:
        rep.details.append("not in J_F: %s" % bad_eval[0])
    return rep


# -- sampling --------------------------------------------------------------------


def random_jnf_word(renv, rng, max_len=8, tries=4000):
    """Random J_{N,F} member: rejection sampling of words of length <= max_len.

    Falls back to a conjugate of a core element when rejection keeps failing;
    the second value says which route produced the word.
    """
    n = renv.F.order
    if n == 1 or renv.N.order == 1:
        return (), "empty"
    for _ in range(tries):
        L = rng.randint(1, max_len)
        w = []
        while len(w) < L:
            a = rng.randint(1, n - 1) * rng.choice((1, -1))
            if w and w[-1] == -a:
                continue
            w.append(a)
        w = tuple(w)
        if renv.member_jnf(w):
            return w, "sampled"
    if not renv.B:
        return (), "empty"
    g = tuple(rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(rng.randint(0, 2)))
    b = rng.choice(renv.B).ints
    return reduce_ints(g + b + inv_ints(g)), "conjugate"


# -- Lemma 1 / Lemma 3 -------------------------------------------------------------


@_timed
def verify_lemma1_lemma3(N, F, samples=1000, depth=1, seed=0):
    renv = RelativeEnvelope(F, N)
    rep = Report("lemma1+3 %s" % _pair_name(N, F), PASS, seed=seed)
    fam = [w for w in renv.lemma1_family(depth) if w]
    words = [renv.env.to_word(w) for w in fam]
    indep = stallings.nielsen_independent(words) if words else True
    cores_in = all(renv.member_jnf(ce.ints) for ce in renv.B)
    rng = random.Random(seed)
    fails = []
    routes = {}
    for _ in range(samples):
        w, route = random_jnf_word(renv, rng)
        routes[route] = routes.get(route, 0) + 1
        k = renv.unfolded_coords(w)
        back = []
        for j in sorted(k):
            piece = renv.unfolded_word(j)
            back.extend((piece if k[j] > 0 else inv_ints(piece)) * abs(k[j]))
        back = reduce_ints(back)
        if not renv.member_jnf(back) or renv.e_coords(back) != renv.e_coords(w):
            fails.append(w)
    rep.verdict = _verdict(indep and cores_in and not fails)
    rep.details.append(
        "lemma1 words=%d independent=%s; cores in J=%s; round-trip failures=%d/%d %s"
        % (len(words), indep, cores_in, len(fails), samples, routes)
    )
    rep.certificates = {
        "lemma1_family_size": len(words),
        "cores": [format_word(renv.env.to_word(ce.ints)) for ce in renv.B],
        "failures": [list(w) for w in fails[:5]],
        "sample_routes": routes,
    }
    return rep


# -- Lemma 4 ---------------------------------------------------------------------


@_timed
def verify_lemma4(N, F, depth=1):
    """Lemma-4 family against the Lemma-3 cores modulo [J_{N,F}, U_F].

    The verdict compares spans in Z^B modulo the family-(a) relation lattice
    (the space core coordinates live in).  The unfolded comparison inside
    J_F/[J_F,J_F] is reported as a diagnostic only.
    """
    renv = RelativeEnvelope(F, N)
    data = multiplier.canonical_extension(N, F, families="a", renv=renv)
    q = data.quotient
    rep = Report("lemma4 %s" % _pair_name(N, F), PASS)
    fam = renv.lemma4_family(depth)
    imgs = [q.coords(renv.kappa(w)) for w in fam]
    tors = []
    for i, d in enumerate(q.moduli):
        if d:
            row = [0] * q.ngens
            row[i] = d
            tors.append(row)
    cok = zlattice.cokernel_structure(imgs + tors, q.ngens) if q.ngens else zlattice.AbelianGroupStructure()
    same = cok.is_trivial
    nE = len(renv.E)
    unfolded = [renv.e_coords(w) for w in fam]
    dense = [[u.get(k, 0) for k in range(nE)] for u in unfolded]
    H = zlattice.hermite_normal_form(dense, nE) if nE else []
    rep.verdict = _verdict(same)
    rep.details.append(
        "family=%d cores=%d A_a=%s cokernel=%s; J_F^ab diagnostic rank=%d/%d"
        % (len(fam), len(renv.B), q.structure, cok, len(H), nE)
    )
    rep.certificates = {"quotient_images": imgs, "unfolded_hnf_rank": len(H), "unfolded_dim": nE}
    return rep


# -- Lemma 7 ---------------------------------------------------------------------


def l2_sequence(env, w):
    """Schreier rewriting of a J_F word as signed Lemma-2 pairs (x, y)."""
    t = env.F.table
    iv = env.F.inverse
    cur = 0
    out = []
    for a in w:
        if a > 0:
            if cur:
                out.append(((cur, a), 1))
            cur = t[cur][a]
        else:
            p = t[cur][iv[-a]]
            if p:
                out.append(((p, -a), -1))
            cur = p
    if cur:
        raise ValueError("word does not evaluate to the identity")
    return out


def lemma7_alpha(renv, w):
    """The lift alpha on a J_F word, defined on Lemma-2 generators."""
    t = renv.F.table
    r = renv.rep_of

    def u(x, s=1):
        return (s * x,) if x else ()

    out = []
    for (x, y), s in l2_sequence(renv.env, w):
        xy = t[x][y]
        img = u(xy) + u(y, -1) + u(x, -1) + u(r[x]) + u(r[y]) + u(r[xy], -1)
        out.extend(img if s > 0 else inv_ints(img))
    return reduce_ints(out)


@_timed
def verify_lemma7(N, F, samples=100, seed=0):
    renv = RelativeEnvelope(F, N)
    data = multiplier.canonical_extension(N, F, families="a", renv=renv)
    rep = Report("lemma7 %s" % _pair_name(N, F), PASS, seed=seed)
    rng = random.Random(seed)
    words = [ce.ints for ce in renv.B] + [random_jnf_word(renv, rng)[0] for _ in range(samples)]
    fails, exact = [], 0
    for w in words:
        a = lemma7_alpha(renv, w)
        if not renv.member_jnf(a):
            fails.append(w)
            continue
        s = dict(renv.kappa(a))
        for b, v in renv.kappa(w).items():
            s[b] = s.get(b, 0) + v
        s = {b: v for b, v in s.items() if v}
        if not s:
            exact += 1
        elif not data.quotient.is_zero(s):
            fails.append(w)
    rep.verdict = _verdict(not fails)
    rep.details.append("checked=%d exact_zero=%d zero_mod_[J,U]=%d failures=%d" % (len(words), exact, len(words) - len(fails) - exact, len(fails)))
    rep.certificates = {"failures": [list(w) for w in fails[:5]]}
    return rep


# -- excision --------------------------------------------------------------------


def _inclusion_first(G, H):
    """g -> (g, 1) into direct_product(G, H)."""
    return tuple(g * H.order for g in range(G.order))


@_timed
def excision_product(N, M0, cap=multiplier.DEFAULT_KJ2_CAP):
    """K^J_2(N,N) -> K^J_2(M,M) for M = N x M0 must be injective."""
    M = direct_product(N, M0)
    rep = Report("excision-product %s x %s" % (N.name, M0.name), PASS)
    src = multiplier.kj2(N.whole(), N, cap=cap, certificates=False)
    tgt = multiplier.kj2(M.whole(), M, cap=cap, certificates=False)
    phi = _inclusion_first(N, M0)
    Phi = multiplier.kj2_map(src, tgt, phi)
    inj = multiplier.map_is_injective(src.moduli, tgt.moduli, Phi)
    rep.verdict = _verdict(inj)
    rep.details.append("source %s -> target %s injective=%s" % (src.structure, tgt.structure, inj))
    rep.certificates = {
        "source": str(src.structure),
        "target": str(tgt.structure),
        "source_moduli": src.moduli,
        "target_moduli": tgt.moduli,
        "matrix": Phi,
    }
    return rep


@_timed
def excision_extended(F, N, H, cap=multiplier.DEFAULT_KJ2_CAP):
    """(N,F) inside (N,G), G = F x H: ker of the extended map lies in the image of K^J_2(N,N)."""
    G = direct_product(F, H)
    rep = Report("excision-extended N=%d in %s x %s" % (N.order, F.name, H.name), PASS)
    phi = _inclusion_first(F, H)
    NG = type(N)(G, [phi[x] for x in N.members])
    src = multiplier.kj2_extended(N, F, cap=cap, certificates=False)
    tgt = multiplier.kj2_extended(NG, G, cap=cap, certificates=False)
    Phi = multiplier.kj2_map(src, tgt, phi)
    Ngrp, emb = N.as_group()
    nn = multiplier.kj2(Ngrp.whole(), Ngrp, cap=cap, certificates=False)
    Psi = multiplier.kj2_map(nn, src, emb)
    ker = multiplier.hom_kernel(src.moduli, tgt.moduli, Phi)
    span = [list(r) for r in Psi]
    for i, d in enumerate(src.moduli):
        if d:
            row = [0] * len(src.moduli)
            row[i] = d
            span.append(row)
    k = len(src.moduli)
    ok = all(multiplier.is_zero_in(src.moduli, v) for v in ker) if not span else (
        zlattice.lattice_contains(span, ker, k) if ker else True
    )
    rep.verdict = _verdict(ok)
    rep.details.append(
        "K~(N,F)=%s -> K~(N,G)=%s; K(N)=%s; kernel gens=%d contained=%s"
        % (src.structure, tgt.structure, nn.structure, len(ker), ok)
    )
    rep.certificates = {"map": Phi, "image_of_K(N)": Psi, "kernel": ker, "source_moduli": src.moduli}
    return rep


# -- whole-suite checks -------------------------------------------------------------


@_timed
def schur_agreement(F, pres, expected=None):
    res = multiplier.kj2(F.whole(), F, certificates=True)
    hopf, order = multiplier.schur_hopf(pres)
    rep = Report("schur %s" % F.name, PASS)
    ok = order == F.order and res.structure == hopf and res.commutator_structure == res.structure
    if expected is not None:
        ok = ok and str(res.structure) == expected
    certs_ok = all(multiplier.verify_certificate(res, j) for j in range(res.ngens))
    ok = ok and certs_ok
    rep.verdict = _verdict(ok)
    rep.details.append(
        "kj2=%s commutator-route=%s hopf=%s presented order=%d certificates=%s"
        % (res.structure, res.commutator_structure, hopf, order, certs_ok)
    )
    rep.certificates = {
        "kj2": res.structure.to_json(),
        "hopf": hopf.to_json(),
        "generators": [(format_word(w), sorted(v.items())) for w, v in (c for c in res.generator_certificates if c)],
    }
    return rep


@_timed
def order_independence(N, F, relabelings=3, seed=0):
    rng = random.Random(seed)
    base = multiplier.kj2(N, F, certificates=False).structure
    seen = [str(base)]
    ok = True
    for _ in range(relabelings):
        G, pos = random_relabel(F, rng)
        NG = type(N)(G, [pos[x] for x in N.members])
        s = multiplier.kj2(NG, G, certificates=False).structure
        seen.append(str(s))
        ok = ok and s == base
    rep = Report("order-independence %s" % _pair_name(N, F), _verdict(ok), seed=seed)
    rep.details.append(" / ".join(seen))
    rep.certificates = {"structures": seen}
    return rep


@_timed
def cocycle_check(N, F, table=None, name=None):
    data = multiplier.canonical_extension(N, F)
    bad = multiplier.cocycle_identity_failures(data, table=table, limit=5)
    mismatch = []
    if table is not None:
        # replay: each supplied entry must agree with the recomputed one in A
        for (m, n), vec in sorted(table.items()):
            ref = data.cocycle(m, n)
            diff = {k: vec.get(k, 0) - ref.get(k, 0) for k in set(vec) | set(ref)}
            if not data.quotient.is_zero({k: v for k, v in diff.items() if v}):
                mismatch.append((m, n))
    rep = Report(name or "cocycle %s" % _pair_name(N, F), _verdict(not bad and not mismatch))
    rep.details.append("triples failing=%d" % len(bad))
    if table is not None:
        rep.details.append("entries disagreeing=%d" % len(mismatch))
    rep.certificates = {"failing_triples": bad, "disagreeing_entries": mismatch}
    return rep


@_timed
def strict_splitting_suite(D, E, depth=5, seed_length=2, level_mode="difference"):
    cand = splittings.product_example(D, E, seed_length=seed_length)
    try:
        res = splittings.check_strict_splitting(cand, depth, level_mode=level_mode)
    except RegktError as exc:
        rep = Report("strict-splitting %s x %s depth=%d seeds<=%d" % (D.name, E.name, depth, seed_length), FAIL)
        rep.details.append("unscrambled candidate rejected: %s %s" % (exc.code, exc))
        return rep
    bad = splittings.product_example(D, E, seed_length=seed_length, scramble=True)
    try:
        mres = splittings.check_strict_splitting(bad, depth).verdict
    except RegktError as exc:
        mres = exc.code
    rep = Report("strict-splitting %s x %s depth=%d seeds<=%d" % (D.name, E.name, depth, seed_length), PASS)
    conv = res.verdict == "Converged"
    level = conv and res.level_ok
    rep.verdict = _verdict(conv and level and mres != "Converged")
    rep.details.append(
        "%s%s level-decrease=%s scrambled=%s"
        % (res.verdict, "(%d)" % res.steps if conv else "", level, mres)
    )
    if conv and res.level_violations:
        k, c, a, b = res.level_violations[0]
        rep.details.append("first level violation: %r -> %r (%d -> %d)" % (k, c, a, b))
    rep.certificates = {"result": res.verdict, "scrambled": mres}
    return rep


@_timed
def lemma8_sweep(pairs):
    rows = []
    bad = []
    for N, F in pairs:
        v = splittings.lemma8_consequence(N, F)
        wc = splittings.weak_core_data(N, F)
        rows.append((_pair_name(N, F), wc.verified, v.verdict))
        if v.verdict == FAIL:
            bad.append(_pair_name(N, F))
    literal = []
    for N, F in pairs:
        if splittings.weak_core_data(N, F).verified:
            s = multiplier.kj2(N, F, certificates=False).structure
            literal.append((_pair_name(N, F), str(s)))
    lit_bad = [p for p, s in literal if s != "0"]
    rep = Report("lemma8 sweep", _verdict(not bad and not lit_bad))
    rep.details.append(
        "pairs=%d weak-core=%d applicable=%d nontrivial-with-weak-core=%d"
        % (len(pairs), len(literal), sum(1 for r in rows if r[2] != SKIPPED), len(lit_bad))
    )
    rep.certificates = {"rows": rows, "weak_core_pairs": literal}
    return rep


# -- corpus ----------------------------------------------------------------------


@dataclass
class CorpusGroup:
    name: str
    path: Path
    gf: object
    presentation: object = None
    expected: str = None
    long: bool = False  # only touched with long_running

    @property
    def group(self):
        return self.gf.group


@dataclass
class Corpus:
    root: Path
    groups: dict = field(default_factory=dict)
    pairs: list = field(default_factory=list)  # (group name, normal spec or None)
    fixtures: list = field(default_factory=list)
    tasks: list = field(default_factory=list)  # (kind, args)


def _read_lines(path):
    text = Path(path).read_text()
    lines = [ln.split("#", 1)[0].rstrip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln.strip()]
    if not lines or lines[0].strip() != FORMAT_HEADER:
        raise ParseError("%s: missing '%s' header" % (path, FORMAT_HEADER))
    return lines[1:]


def load_corpus(root):
    root = Path(root)
    corpus = Corpus(root)
    manifest = root / "corpus.txt"
    if not manifest.exists():
        return corpus
    for ln in _read_lines(manifest):
        parts = ln.split()
        kind = parts[0]
        if kind == "group":
            name, fname = parts[1], parts[2]
            gf = read_group_file(root / fname)
            gf.group.name = name
            cg = CorpusGroup(name, root / fname, gf)
            for p in parts[3:]:
                k, _, v = p.partition("=")
                if k == "gens":
                    gens = v.split(",")
                elif k == "rels":
                    cg.presentation = multiplier.Presentation.parse(gens, v.split(";"))
                elif k == "h2":
                    cg.expected = v.replace("_", " ")
                elif k == "long":
                    cg.long = True
            corpus.groups[name] = cg
        elif kind == "pair":
            corpus.pairs.append((parts[1], " ".join(parts[2:]) or None))
        elif kind == "fixture":
            corpus.fixtures.append(root / parts[1])
        else:
            corpus.tasks.append((kind, parts[1:]))
    return corpus


def resolve_pair(corpus, gname, spec):
    cg = corpus.groups[gname]
    F = cg.group
    N = F.whole() if spec in (None, "all") else parse_normal_spec(cg.gf, spec)
    return N, F


def run_fixture(corpus, path):
    lines = _read_lines(path)
    head = dict(ln.split(None, 1) for ln in lines if not ln.startswith(("word", "entry")))
    kind = head.get("fixture")
    cg = corpus.groups[head["group"]]
    F = cg.group
    if kind == "lemma2-basis":
        words = [parse_word(ln.split(None, 1)[1] if " " in ln else "") for ln in lines if ln.startswith("word")]
        return verify_lemma2(F, basis=words, name="fixture %s" % path.name)
    if kind == "cocycle":
        N = F.whole() if head.get("normal", "all") == "all" else parse_normal_spec(cg.gf, head["normal"])
        table = {}
        for ln in lines:
            if ln.startswith("entry"):
                parts = ln.split()
                m, n = int(parts[1]), int(parts[2])
                vec = {}
                for tok in parts[3:]:
                    b, _, v = tok.partition(":")
                    vec[int(b)] = int(v)
                table[(m, n)] = vec
        return cocycle_check(N, F, table=table, name="fixture %s" % path.name)
    raise ParseError("unknown fixture kind %r" % kind)


def format_cocycle_fixture(group_name, N, F, normal="all"):
    data = multiplier.canonical_extension(N, F)
    out = [FORMAT_HEADER, "fixture cocycle", "group %s" % group_name, "normal %s" % normal]
    for (m, n), vec in sorted(data.cocycle_table().items()):
        out.append(" ".join(["entry", str(m), str(n)] + ["%d:%d" % kv for kv in sorted(vec.items())]))
    return "\n".join(out) + "\n"


def format_lemma2_fixture(group_name, F):
    env = Envelope(F)
    n = F.order
    out = [FORMAT_HEADER, "fixture lemma2-basis", "group %s" % group_name]
    for x in range(1, n):
        for y in range(1, n):
            out.append("word " + format_word(env.to_word(env.l2_word(x, y))))
    return "\n".join(out) + "\n"


@dataclass
class Config:
    seed: int = 0
    samples: int = 1000
    lemma7_samples: int = 100
    cap: int = multiplier.DEFAULT_KJ2_CAP
    long_running: bool = False
    lemma2_max: int = 12


def run_corpus(root, config=None):
    config = config or Config()
    corpus = load_corpus(root)
    reports = []
    for cg in corpus.groups.values():
        F = cg.group
        if cg.long and not config.long_running:
            continue
        if cg.presentation is not None:
            reports.append(schur_agreement(F, cg.presentation, cg.expected))
        if F.order <= config.lemma2_max:
            reports.append(verify_lemma2(F))
    pairs = []
    for gname, spec in corpus.pairs:
        N, F = resolve_pair(corpus, gname, spec)
        pairs.append((N, F))
        reports.append(verify_lemma1_lemma3(N, F, samples=config.samples, seed=config.seed))
        reports.append(verify_lemma4(N, F))
        reports.append(verify_lemma7(N, F, samples=config.lemma7_samples, seed=config.seed))
        reports.append(order_independence(N, F, seed=config.seed))
        reports.append(cocycle_check(N, F))
    for kind, args in corpus.tasks:
        g = corpus.groups
        if kind == "excise-product":
            reports.append(excision_product(g[args[0]].group, g[args[1]].group, cap=config.cap))
        elif kind == "excise-extended":
            cg = g[args[0]]
            N = parse_normal_spec(cg.gf, args[1].replace("_", " "))
            reports.append(excision_extended(cg.group, N, g[args[2]].group, cap=config.cap))
        elif kind == "splitcheck":
            depth = int(args[2]) if len(args) > 2 else 5
            sl = int(args[3]) if len(args) > 3 else 2
            reports.append(strict_splitting_suite(g[args[0]].group, g[args[1]].group, depth, sl))
        elif kind == "sweep-lemma8":
            allpairs = []
            for cg in g.values():
                if cg.long and not config.long_running:
                    continue
                for N in all_normal_subgroups(cg.group):
                    allpairs.append((N, cg.group))
            reports.append(lemma8_sweep(allpairs))
        elif kind == "universal":
            if not config.long_running:
                reports.append(Report("universal %s" % args[0], SKIPPED, details=["needs --long-running"]))
            else:
                reports.append(universal_extension_suite(g[args[0]].group))
        else:
            raise ParseError("unknown corpus task %r" % kind)
    if any(kind.startswith("excise") for kind, _ in corpus.tasks):
        reports.append(
            Report(
                "excision-retraction",
                SKIPPED,
                details=["testable instances=0: no equivariant retraction is machine-checked"],
            )
        )
    for path in corpus.fixtures:
        reports.append(run_fixture(corpus, path))
    for r in reports:
        r.seed = config.seed if r.seed is None else r.seed
    reports.sort(key=lambda r: r.name)
    return reports


# -- universal extension vs SL(2,5) -----------------------------------------------


def sl2(p):
    """SL(2, p) as a FiniteGroup built from its matrices."""
    from itertools import product as iproduct

    from .fingroup import FiniteGroup

    mats = [m for m in iproduct(range(p), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % p == 1]
    mats.sort()
    pos = {m: i for i, m in enumerate(mats)}

    def mul(a, b):
        return (
            (a[0] * b[0] + a[1] * b[2]) % p,
            (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p,
        )

    table = [[pos[mul(a, b)] for b in mats] for a in mats]
    # identity first
    e = pos[(1, 0, 0, 1)]
    order = [e] + [i for i in range(len(mats)) if i != e]
    inv = {v: k for k, v in enumerate(order)}
    table = [[inv[table[a][b]] for b in order] for a in order]
    return FiniteGroup(table, name="SL(2,%d)" % p, check=False)


def group_invariants(G):
    from .fingroup import derived_subgroup

    return {
        "order": G.order,
        "center": G.center().order,
        "derived": derived_subgroup(G).order,
        "exponent": G.exponent(),
    }


@_timed
def universal_extension_suite(F):
    ue = multiplier.universal_extension(F.whole(), F)
    G = ue.group
    central = all(G.table[k][g] == G.table[g][k] for k in ue.kernel.members for g in range(G.order))
    mine = group_invariants(G)
    ref = group_invariants(sl2(5)) if F.order == 60 else None
    ok = central and mine["derived"] == G.order
    if ref is not None:
        ok = ok and mine == ref
    rep = Report("universal %s" % F.name, _verdict(ok))
    rep.details.append("extension %s kernel=%s central=%s reference=%s" % (mine, ue.kj2.structure, central, ref))
    rep.certificates = {"invariants": mine, "reference": ref, "kernel_order": ue.kernel.order}
    return rep


def summary_json(reports, timing=False):
    return json.dumps(
        {
            "format": FORMAT_HEADER,
            "reports": [r.to_json(timing) for r in reports],
            "ok": all(r.ok for r in reports),
        },
        indent=2,
        sort_keys=True,
    )
