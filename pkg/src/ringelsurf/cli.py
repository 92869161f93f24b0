"""Command-line interface.

Exit status: 0 success, 1 verification mismatch or surface defect,
2 usage or parse error.  Data goes to stdout (or ``--out``), diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import embedded
from .cyclic import from_cyclic_generators, ringel
from .io import read, serialize, write
from .transform import stack
from .triples import admissible_range
from .verify import check_closed_surface, classify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _err(msg):
    print(msg, file=sys.stderr)


def _triangle(text):
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A,B,C integers, got {text!r}")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    return parts


def _yesno(text):
    if text.lower() in ("yes", "y", "true"):
        return True
    if text.lower() in ("no", "n", "false"):
        return False
    raise argparse.ArgumentTypeError(f"expected yes or no, got {text!r}")


def _emit(T, out):
    """Write T to ``out`` or stdout; return the stream for the summary."""
    if out:
        write(T, out)
        return sys.stdout
    sys.stdout.write(serialize(T))
    return sys.stderr


def _report_line(T, stream):
    defect = check_closed_surface(T)
    if defect is not None:
        print(f"{T.name or 'triangulation'}: NOT a closed surface: {defect}", file=stream)
        return EXIT_MISMATCH
    print(f"{T.name or 'triangulation'}: {classify(T).summary()}", file=stream)
    return EXIT_OK


def cmd_generate(args):
    if args.family == "ringel":
        T = ringel(args.k, args.n)
    elif args.family == "torus":
        T = ringel(0, args.n)
    else:
        if not args.triangle:
            _err("generate orbit: at least one --triangle is required")
            return EXIT_USAGE
        T = from_cyclic_generators(args.n, args.triangle, name=f"orbit_{args.n}")
    stream = _emit(T, args.out)
    return _report_line(T, stream)


def _check_expectations(report, args):
    problems = []
    if args.expect_chi is not None and report.chi != args.expect_chi:
        problems.append(f"chi={report.chi}, expected {args.expect_chi}")
    if args.expect_q is not None and report.equivelar_degree != args.expect_q:
        problems.append(f"q={report.equivelar_degree}, expected {args.expect_q}")
    if args.expect_orientable is not None and report.orientable != args.expect_orientable:
        want = "orientable" if args.expect_orientable else "non-orientable"
        problems.append(f"expected {want}")
    return problems


def cmd_verify(args):
    status = EXIT_OK
    for path in args.files:
        T = read(path)
        defect = check_closed_surface(T)
        if defect is not None:
            _err(f"{path}: NOT a closed surface: {defect}")
            if args.json:
                print(json.dumps({"file": str(path), "ok": False, "defect": str(defect)}))
            status = EXIT_MISMATCH
            continue
        report = classify(T)
        problems = _check_expectations(report, args)
        for p in problems:
            _err(f"{path}: mismatch: {p}")
        if problems:
            status = EXIT_MISMATCH
        if args.json:
            payload = {"file": str(path), "ok": not problems, **report.to_dict()}
            print(json.dumps(payload))
        else:
            print(f"{path}: {report.summary()}")
    return status


def cmd_stack(args):
    T = stack(read(args.file))
    _emit(T, args.out)
    return EXIT_OK


def cmd_triples(args):
    rows = admissible_range(args.chi_min, tight_only=args.tight_only)
    if args.json:
        print(json.dumps([r.to_dict() for r in rows], indent=1))
        return EXIT_OK
    cols = ("chi", "q", "n", "neighborly", "q_tight", "orientable_admissible")
    print("\t".join(cols))
    for r in rows:
        d = r.to_dict()
        print("\t".join(("yes" if d[c] else "no") if isinstance(d[c], bool) else str(d[c]) for c in cols))
    return EXIT_OK


def cmd_corpus(args):
    if args.action == "list":
        for e in embedded.corpus():
            x = e.expected
            kind = "orientable" if x.orientable else "non-orientable"
            print(f"{e.id}\tchi={x.chi}\tq={x.q}\tn={x.n}\t{kind}")
        return EXIT_OK
    if args.action == "export":
        if not args.id:
            _err("corpus export: an entry id is required")
            return EXIT_USAGE
        try:
            entry = embedded.load(args.id)
        except KeyError as exc:
            _err(exc.args[0])
            return EXIT_USAGE
        _emit(entry.triangulation, args.out)
        return EXIT_OK
    status = EXIT_OK
    for e in embedded.corpus():
        r = classify(e.triangulation)
        x = e.expected
        ok = (r.chi, r.equivelar_degree, r.fvec.f0, r.orientable) == (x.chi, x.q, x.n, x.orientable) and r.q_tight
        print(f"{'PASS' if ok else 'FAIL'} {e.id}: {r.summary()}")
        if not ok:
            status = EXIT_MISMATCH
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ringelsurf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="construct a cyclic triangulation")
    gsub = g.add_subparsers(dest="family", required=True)
    gr = gsub.add_parser("ringel", help="generalized Ringel triangulation R(k, n)")
    gr.add_argument("--k", type=int, required=True)
    gr.add_argument("--n", type=int, required=True)
    gt = gsub.add_parser("torus", help="cyclic torus T2(n) = R(0, n)")
    gt.add_argument("--n", type=int, required=True)
    go = gsub.add_parser("orbit", help="union of Z_n-orbits of given triangles")
    go.add_argument("--n", type=int, required=True)
    go.add_argument("--triangle", type=_triangle, action="append", metavar="A,B,C")
    for sp in (gr, gt, go):
        sp.add_argument("--out", metavar="FILE")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="classify facet-list files")
    v.add_argument("files", nargs="+", metavar="FILE")
    v.add_argument("--expect-chi", type=int)
    v.add_argument("--expect-q", type=int)
    v.add_argument("--expect-orientable", type=_yesno, metavar="yes|no")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stack", help="stack every facet of a triangulation")
    s.add_argument("file", metavar="FILE")
    s.add_argument("--out", metavar="FILE")
    s.set_defaults(func=cmd_stack)

    t = sub.add_parser("triples", help="admissible (chi, q, n) triples")
    t.add_argument("--chi-min", type=int, required=True)
    t.add_argument("--tight-only", action="store_true",
                   help="only non-neighborly triples with q at its upper bound")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_triples)

    c = sub.add_parser("corpus", help="embedded example triangulations")
    c.add_argument("action", choices=("list", "verify", "export"))
    c.add_argument("id", nargs="?")
    c.add_argument("--out", metavar="FILE")
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        _err(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
