"""Command-line front end.

Exit codes: 0 success, 1 a domain guard refused the request, 2 bad usage or
unparsable input.  Every ``--json`` document carries ``schema_version``.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional

from .canonical import find_syzygy, syzygy_targets, verify_shrunk_syzygy
from .cotangent import ScalarField, t1_report
from .errors import DomainError, GuardViolation, NotCompleteIntersection, UsageError, WmodError
from .presentation import minimal_presentation
from .report import SCHEMA_VERSION, analyze, render_text
from .semigroup import buchweitz_screen, enumerate_semigroups, from_gaps, parse
from .unfolding import moduli_report, normalize, unfold

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _exit_code(exc: BaseException) -> int:
    return EXIT_USAGE if isinstance(exc, UsageError) else EXIT_DOMAIN


def _error_json(exc: WmodError) -> Dict[str, Any]:
    err = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, GuardViolation):
        err["reason"] = exc.reason
    return err


def _field(args) -> ScalarField:
    return ScalarField(args.char)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


# each command returns (exit code, json document, text)

def _analyze_parsed(text: str, char: int, canonical: bool, require_moduli: bool):
    report = analyze(parse(text), ScalarField(char), canonical=canonical)
    code = EXIT_OK
    doc: Dict[str, Any] = {"report": report.to_json()}
    body = render_text(report)
    if require_moduli and report.moduli is None:
        code = EXIT_DOMAIN
        doc["error"] = {"type": report.moduli_error or NotCompleteIntersection.__name__,
                        "message": "moduli space unavailable for this semigroup"}
        body += f"\nerror: moduli space unavailable ({report.moduli_error})"
    return code, doc, body


def _analyze_one(args):
    text = args[0]
    try:
        return _analyze_parsed(*args)
    except WmodError as exc:
        return _exit_code(exc), {"error": _error_json(exc)}, f"{text}: error: {exc}"


def _read_lines(path: str) -> List[str]:
    try:
        fh = sys.stdin if path == "-" else open(path, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    with fh:
        out = []
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(line)
    return out


def cmd_analyze(args):
    if (args.semigroup is None) == (args.batch is None):
        raise UsageError("give exactly one of a generator list or --batch FILE")
    ScalarField(args.char)
    if args.batch is None:
        code, doc, text = _analyze_parsed(args.semigroup, args.char, args.canonical, args.require_moduli)
        return code, {"command": "analyze", **doc}, text
    lines = _read_lines(args.batch)
    work = [(t, args.char, args.canonical, args.require_moduli) for t in lines]
    if args.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_analyze_one, work))
    else:
        results = [_analyze_one(w) for w in work]
    code = max((r[0] for r in results), default=EXIT_OK)
    doc = {"command": "analyze", "reports": [{"input": t, **r[1]} for t, r in zip(lines, results)]}
    text = "\n\n".join(r[2] for r in results)
    return code, doc, text


def cmd_enumerate(args):
    records = []
    lines = []
    for S in enumerate_semigroups(args.genus, symmetric=args.symmetric, complete_intersection=args.ci):
        rec: Dict[str, Any] = {"generators": list(S.minimal_generators)}
        line = S.text()
        if args.moduli:
            try:
                rec["moduli_dimension"] = moduli_report(S).dimension
            except DomainError:
                rec["moduli_dimension"] = None
            line += f"\t{rec['moduli_dimension'] if rec['moduli_dimension'] is not None else '-'}"
        records.append(rec)
        lines.append(line)
    doc = {"command": "enumerate", "genus": args.genus, "count": len(records), "semigroups": records}
    return EXIT_OK, doc, "\n".join(lines)


def cmd_syzygies(args):
    S = parse(args.semigroup)
    ci = minimal_presentation(S).is_complete_intersection
    certs = []
    lines = []
    for q in syzygy_targets(S):
        cert = find_syzygy(S, q)
        entry = {"target": q.label, "terms": cert.to_json(), "text": str(cert)}
        lines.append(str(cert))
        if ci:
            trace = verify_shrunk_syzygy(S, cert)
            entry["trace"] = trace.lines
            lines.extend(f"  {t}" for t in trace.lines)
        certs.append(entry)
    doc = {"command": "syzygies", "semigroup": list(S.minimal_generators), "certificates": certs}
    return EXIT_OK, doc, "\n".join(lines)


def cmd_buchweitz(args):
    if (args.semigroup is None) == (args.gaps is None):
        raise UsageError("give exactly one of a generator list or --gaps LIST")
    if args.gaps is not None:
        try:
            gaps = [int(x) for x in args.gaps.replace(" ", "").split(",") if x]
        except ValueError:
            raise UsageError(f"cannot parse gap list {args.gaps!r}") from None
        S = from_gaps(gaps)
    else:
        S = parse(args.semigroup)
    verdict = buchweitz_screen(S, args.n_max)
    rows = [{"n": r.n, "count": r.count, "bound": r.bound, "obstructed": r.obstructed} for r in verdict.rows]
    lines = [f"{S}  genus {S.genus}"]
    lines += [f"  n={r['n']}  count {r['count']}  bound {r['bound']}{'  OBSTRUCTED' if r['obstructed'] else ''}"
              for r in rows]
    lines.append(f"obstructed at n={verdict.first_obstruction}" if verdict.obstructed
                 else "not obstructed")
    doc = {"command": "buchweitz", "semigroup": list(S.minimal_generators), "rows": rows,
           "obstructed": verdict.obstructed, "first_obstruction": verdict.first_obstruction}
    return EXIT_OK, doc, "\n".join(lines)


def cmd_t1(args):
    S = parse(args.semigroup)
    rep = t1_report(S, _field(args))
    lines = [f"{d}\t{n}" for d, n in sorted(rep.by_degree.items())]
    lines.append(f"negative {rep.negative_dim}  nonnegative {rep.nonnegative_dim}  tjurina {rep.tjurina}")
    lines += [f"warning: {w}" for w in rep.warnings]
    return EXIT_OK, {"command": "t1", "semigroup": list(S.minimal_generators), **rep.to_json()}, "\n".join(lines)


def cmd_unfold(args):
    S = parse(args.semigroup)
    F = _field(args)
    system = normalize(unfold(minimal_presentation(S)), F)
    lines = system.render(free_only=not args.all)
    free = system.free_weights()
    lines.append(f"free coefficients {len(free)}  weights {' '.join(map(str, free))}")
    doc = {"command": "unfold", "semigroup": list(S.minimal_generators), "characteristic": F.characteristic,
           "equations": system.render(free_only=not args.all), "free_weights": free,
           "coefficients": system.to_json()}
    return EXIT_OK, doc, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wmod", description="Monomial curves, graded T^1 and moduli of pointed Gorenstein curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, char=False):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
        if char:
            sp.add_argument("--char", type=int, default=0, metavar="P", help="0 or a prime (default 0)")

    a = sub.add_parser("analyze", help="full report for one semigroup or a batch file")
    a.add_argument("semigroup", nargs="?", help="generators, e.g. 4,7,10")
    a.add_argument("--batch", metavar="FILE", help="one semigroup per line, '#' comments, '-' for stdin")
    a.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
    a.add_argument("--canonical", action="store_true", help="add quadrics and syzygy certificates")
    a.add_argument("--require-moduli", action="store_true", help="exit 1 when no moduli space is reported")
    common(a, char=True)
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="all semigroups of a given genus")
    e.add_argument("--genus", type=int, required=True)
    e.add_argument("--symmetric", action="store_true")
    e.add_argument("--ci", action="store_true", help="complete intersections only")
    e.add_argument("--moduli", action="store_true", help="also print the moduli dimension")
    common(e)
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("syzygies", help="{-1,0,1} syzygies of the canonical quadrics")
    s.add_argument("semigroup")
    common(s)
    s.set_defaults(func=cmd_syzygies)

    b = sub.add_parser("buchweitz", help="gap sumset screen")
    b.add_argument("semigroup", nargs="?")
    b.add_argument("--gaps", metavar="LIST", help="comma-separated gap set instead of generators")
    b.add_argument("--n-max", type=int, default=4)
    common(b)
    b.set_defaults(func=cmd_buchweitz)

    t = sub.add_parser("t1", help="graded dimensions of T^1")
    t.add_argument("semigroup")
    common(t, char=True)
    t.set_defaults(func=cmd_t1)

    u = sub.add_parser("unfold", help="unfolded and normalized equations")
    u.add_argument("semigroup")
    u.add_argument("--all", action="store_true", help="also show coefficients normalized to zero")
    common(u, char=True)
    u.set_defaults(func=cmd_unfold)
    return p


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    want_json = "--json" in (sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        if want_json:
            _emit(_dump({"schema_version": SCHEMA_VERSION, "error": _error_json(exc)}), None)
        else:
            parser.print_usage(sys.stderr)
            print(f"wmod: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        code, doc, text = args.func(args)
    except WmodError as exc:
        code = _exit_code(exc)
        if args.json:
            _emit(_dump({"schema_version": SCHEMA_VERSION, "command": args.command,
                         "error": _error_json(exc)}), args.out)
        else:
            print(f"wmod {args.command}: error: {exc}", file=sys.stderr)
        return code
    if args.json:
        _emit(_dump({"schema_version": SCHEMA_VERSION, **doc}), args.out)
    else:
        _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
