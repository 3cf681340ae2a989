"""Command-line front end.

Exit status: 2 for unreadable input, 1 when any report fails or a
computation is refused, 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness, multiplier, splittings
from .errors import ParseError, RegktError
from .fingroup import FORMAT_HEADER, all_normal_subgroups, parse_normal_spec, read_group_file


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(message)


def _globals_parent():
    # SUPPRESS lets the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="RNG seed (default 0)")
    p.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="largest |F| for multiplier work (default 60)")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")
    p.add_argument("--long-running", action="store_true", default=argparse.SUPPRESS)
    p.add_argument("--timing", action="store_true", default=argparse.SUPPRESS, help="include wall times in JSON")
    return p


def build_parser():
    parent = _globals_parent()
    ap = _Parser(prog="regkt", parents=[parent], description="relative Schur multiplier workbench")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    g = sub.add_parser("group", parents=[parent], help="inspect a group file")
    g.add_argument("action", choices=["check"])
    g.add_argument("file")

    k = sub.add_parser("kj2", parents=[parent], help="K^J_2(N,F)")
    k.add_argument("file")
    k.add_argument("--normal", help='generators of N, e.g. "(1 2)(3 4);(1 3)(2 4)"')
    k.add_argument("--extended", action="store_true", help="denominator [J,U_F] only")

    e = sub.add_parser("extension", parents=[parent], help="canonical or universal extension")
    e.add_argument("file")
    e.add_argument("--normal")
    e.add_argument("--universal", action="store_true")

    v = sub.add_parser("verify", parents=[parent], help="lemma checks")
    v.add_argument("lemma", choices=["lemma2", "lemma134", "lemma4", "lemma7"])
    v.add_argument("file")
    v.add_argument("--normal")
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--depth", type=int, default=1)

    x = sub.add_parser("excise", parents=[parent], help="excision checks")
    x.add_argument("mode", choices=["product", "extended"])
    x.add_argument("files", nargs=2, metavar="FILE", help="product: N M0; extended: F H")
    x.add_argument("--normal", help="N inside F (extended mode)")

    s = sub.add_parser("splitcheck", parents=[parent], help="strict splitting of a product example")
    s.add_argument("dfile")
    s.add_argument("efile")
    s.add_argument("--depth", type=int, default=5)
    s.add_argument("--seed-length", type=int, default=2)
    s.add_argument("--level-mode", choices=splittings.LEVEL_MODES, default="difference")

    c = sub.add_parser("corpus", parents=[parent], help="run a corpus directory")
    c.add_argument("action", choices=["run"])
    c.add_argument("dir")
    c.add_argument("--samples", type=int, default=None)
    return ap


def _opts(ns):
    return harness.Config(
        seed=getattr(ns, "seed", 0),
        cap=getattr(ns, "cap", multiplier.DEFAULT_KJ2_CAP),
        long_running=getattr(ns, "long_running", False),
    )


def _pair(path, spec):
    gf = read_group_file(path)
    F = gf.group
    N = F.whole() if not spec else parse_normal_spec(gf, spec)
    return N, F, gf


def _emit(reports, ns, out):
    for r in reports:
        r.seed = getattr(ns, "seed", 0) if r.seed is None else r.seed
    if getattr(ns, "json", False):
        out.write(harness.summary_json(reports, timing=getattr(ns, "timing", False)) + "\n")
    else:
        for r in reports:
            out.write(r.line() + "\n")
    return 1 if any(not r.ok for r in reports) else 0


def _cmd_group(ns, out):
    gf = read_group_file(ns.file)
    G = gf.group
    G.check_axioms(assoc_bound=G.order)
    normals = all_normal_subgroups(G)
    rep = harness.Report("group %s" % G.name, harness.PASS)
    rep.details.append(
        "order=%d abelian=%s center=%d normal-subgroups=%d"
        % (G.order, G.is_abelian(), G.center().order, len(normals))
    )
    rep.certificates = {"order": G.order, "normal_orders": sorted(N.order for N in normals)}
    return _emit([rep], ns, out)


def _cmd_kj2(ns, out):
    cfg = _opts(ns)
    N, F, _ = _pair(ns.file, ns.normal)
    fn = multiplier.kj2_extended if ns.extended else multiplier.kj2
    res = fn(N, F, cap=cfg.cap, certificates=True)
    if getattr(ns, "json", False):
        doc = {
            "format": FORMAT_HEADER,
            "group": F.name,
            "normal_order": N.order,
            "extended": ns.extended,
            "structure": res.structure.to_json(),
            "commutator_route": None if ns.extended else res.commutator_structure.to_json(),
            "generators": [
                [list(w), sorted(c.items())] for w, c in (g for g in res.generator_certificates if g)
            ],
            "seed": cfg.seed,
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("%s\n" % res.structure)
    # the commutator family only spans the [V,U_F] image, which is all of the
    # numerator modulo the full denominator but not modulo [J,U_F] alone
    if ns.extended:
        return 0
    return 0 if res.structure == res.commutator_structure else 1


def _cmd_extension(ns, out):
    cfg = _opts(ns)
    N, F, _ = _pair(ns.file, ns.normal)
    if ns.universal:
        rep = harness.universal_extension_suite(F) if N.order == F.order else None
        if rep is None:
            ue = multiplier.universal_extension(N, F, cap=cfg.cap)
            rep = harness.Report("universal %s" % F.name, harness.PASS)
            rep.details.append("order=%d kernel=%s" % (ue.group.order, ue.kj2.structure))
        return _emit([rep], ns, out)
    data = multiplier.canonical_extension(N, F, cap=cfg.cap)
    rep = harness.Report("canonical-extension %s" % harness._pair_name(N, F), harness.PASS)
    rep.details.append("A=%s" % data.quotient.structure)
    rep.certificates = {"cocycle": {"%d,%d" % mn: sorted(v.items()) for mn, v in sorted(data.cocycle_table().items())}}
    return _emit([rep], ns, out)


def _cmd_verify(ns, out):
    cfg = _opts(ns)
    N, F, _ = _pair(ns.file, ns.normal)
    if ns.lemma == "lemma2":
        rep = harness.verify_lemma2(F)
    elif ns.lemma == "lemma134":
        rep = harness.verify_lemma1_lemma3(N, F, samples=ns.samples or cfg.samples, depth=ns.depth, seed=cfg.seed)
    elif ns.lemma == "lemma4":
        rep = harness.verify_lemma4(N, F, depth=ns.depth)
    else:
        rep = harness.verify_lemma7(N, F, samples=ns.samples or cfg.lemma7_samples, seed=cfg.seed)
    return _emit([rep], ns, out)


def _cmd_excise(ns, out):
    cfg = _opts(ns)
    if ns.mode == "product":
        N = read_group_file(ns.files[0]).group
        M0 = read_group_file(ns.files[1]).group
        rep = harness.excision_product(N, M0, cap=cfg.cap)
    else:
        if not ns.normal:
            raise ParseError("excise extended needs --normal")
        N, F, _ = _pair(ns.files[0], ns.normal)
        H = read_group_file(ns.files[1]).group
        rep = harness.excision_extended(F, N, H, cap=cfg.cap)
    return _emit([rep], ns, out)


def _cmd_splitcheck(ns, out):
    D = read_group_file(ns.dfile).group
    E = read_group_file(ns.efile).group
    rep = harness.strict_splitting_suite(D, E, ns.depth, ns.seed_length, ns.level_mode)
    return _emit([rep], ns, out)


def _cmd_corpus(ns, out):
    cfg = _opts(ns)
    if ns.samples is not None:
        cfg.samples = ns.samples
    return _emit(harness.run_corpus(ns.dir, cfg), ns, out)


_COMMANDS = {
    "group": _cmd_group,
    "kj2": _cmd_kj2,
    "extension": _cmd_extension,
    "verify": _cmd_verify,
    "excise": _cmd_excise,
    "splitcheck": _cmd_splitcheck,
    "corpus": _cmd_corpus,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        ns = build_parser().parse_args(argv)
    except _ArgError as exc:
        sys.stderr.write("regkt: %s\n" % exc)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[ns.cmd](ns, out)
    except ParseError as exc:
        sys.stderr.write("regkt: parse error: %s\n" % exc)
        return 2
    except RegktError as exc:
        sys.stderr.write("regkt: %s: %s\n" % (exc.code, exc))
        return 1


def cli_main(argv=None):
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
