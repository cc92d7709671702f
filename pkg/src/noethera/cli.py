"""Command-line front end.

Exit codes: 0 success (including a Good found), 1 domain failure (headroom,
illegal move, verification failure, step limit), 2 usage or parse error.
Witness modules are imported inside the subcommands that need them, so
``verify`` runs on the algebra, ordinal and cert modules alone.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import ParseError, parse_element, parse_ring
from .ordinal import OrdinalParseError, cmp, format_ordinal, nat_prod, nat_sum, parse_ordinal


class DomainError(Exception):
    pass


class UsageError(Exception):
    pass


def _ordinals(texts):
    return [parse_ordinal(t) for t in texts]


def cmd_ord(args, out):
    xs = _ordinals(args.ordinals)
    if args.op == "eval":
        for x in xs:
            print(format_ordinal(x), file=out)
    elif args.op == "cmp":
        if len(xs) != 2:
            raise UsageError("ord cmp takes exactly two ordinals")
        print("<=>"[cmp(xs[0], xs[1]) + 1], file=out)
    else:
        if not xs:
            raise UsageError(f"ord {args.op} needs at least one ordinal")
        op = nat_sum if args.op == "natsum" else nat_prod
        acc = xs[0]
        for x in xs[1:]:
            acc = op(acc, x)
        print(format_ordinal(acc), file=out)
    return 0


def cmd_chomp(args, out):
    from .chomp import ConstraintSet, IllegalMove, chop, format_cuts, parse_cuts, parse_points, size

    alpha = parse_ordinal(args.alpha)
    try:
        if args.op == "size":
            print(format_ordinal(size(parse_cuts(args.cuts, alpha))), file=out)
            return 0
        moves = parse_points(args.moves)
    except OrdinalParseError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    s = ConstraintSet.empty(alpha)
    prev = size(s)
    print(f"start\t{format_ordinal(prev)}", file=out)
    for d, a in moves:
        try:
            s = chop(s, (d, a))
        except IllegalMove as exc:
            raise DomainError(f"illegal move: {exc}") from None
        cur = size(s)
        if not cur < prev:
            raise DomainError(f"size did not descend: {format_ordinal(cur)} after {format_ordinal(prev)}")
        print(f"{format_cuts(s)}\t{format_ordinal(cur)}", file=out)
        prev = cur
    return 0


def _read_stream(path):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def cmd_noether(args, out):
    from . import cert
    from .noether import Good, Unsupported, run, witness_for

    ring = parse_ring(args.ring)
    try:
        alpha = witness_for(ring).alpha
    except Unsupported as exc:
        raise DomainError(str(exc)) from None

    def elements():
        for lineno, line in _read_stream(args.input):
            try:
                yield parse_element(line, ring)
            except ParseError as exc:
                raise UsageError(f"{args.input}:{lineno}: {exc}") from None

    def on_step(step, x, res):
        bound = "good" if isinstance(res, Good) else format_ordinal(res.bound)
        print(f"{step + 1}\t{ring.format(x)}\t{bound}", file=out)

    print("step\telement\tbound", file=out)
    print(f"0\t-\t{format_ordinal(alpha)}", file=out)
    result = run(ring, elements(), max_steps=args.max_steps, on_step=on_step)
    good = (len(result.trace), result.comb) if result.good else None
    doc = cert.run_document(ring, result.initial, result.consumed, result.trace, good)
    if args.out:
        Path(args.out).write_bytes(cert.save(doc))
    if result.good:
        # relation in terms of the step numbers of the table
        terms = [f"({ring.format(c)})*s{i + 1}" for i, c in enumerate(result.comb) if not ring.is_zero(c)]
        print(f"# s{len(result.trace) + 1} = {' + '.join(terms) or '0'}", file=out)
    if result.truncated:
        raise DomainError(f"stopped after --max-steps {args.max_steps} elements; run left pending")
    return 0


def _split_elements(text):
    parts = [p.strip() for p in text.split(",")]
    if not all(parts):
        raise UsageError(f"empty element in {text!r}")
    return parts


def cmd_krull(args, out):
    from . import cert
    from .krull import ExponentBudgetExceeded, HeadroomError, collapse, lombardi_check, lombardi_holds
    from .noether import Unsupported

    if args.op == "collapse":
        ring = parse_ring(args.ring)
        elements = [parse_element(t, ring) for t in _split_elements(args.elements)]
        try:
            c = collapse(ring, elements, probe=args.probe, max_exponent=args.max_exponent)
        except (HeadroomError, ExponentBudgetExceeded, Unsupported) as exc:
            raise DomainError(str(exc)) from None
        doc = cert.collapse_document(c)
        if args.out:
            Path(args.out).write_bytes(cert.save(doc))
        print("index\texponents\tmonomial", file=out)
        for index, exps, mono in doc.probes:
            print(f"{index}\t{','.join(map(str, exps))}\t{mono}", file=out)
        return 0
    doc = _load(args.cert)
    rep = cert.verify_document(doc)
    _print_report(args.cert, rep, out)
    if not rep.ok:
        return 1
    if args.lombardi:
        if not isinstance(doc, cert.CollapseDocument):
            raise UsageError(f"{args.cert}: --lombardi needs a collapse certificate")
        c = cert.to_collapse_cert(doc)
        res = lombardi_check(c)
        if res.status == "full" and not lombardi_holds(c, res):
            raise DomainError("boundary-ideal combination failed its recheck")
        print(f"lombardi: {res.status}", file=out)
    return 0


def _load(path):
    from .cert import CertFormatError, load

    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        return load(data)
    except CertFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _print_report(path, rep, out):
    for w in rep.warnings:
        print(f"{path}: warning: {w}", file=out)
    if rep.ok:
        print(f"{path}: ok", file=out)
    for f in rep.failures:
        print(f"{path}: FAIL {f}", file=out)


def cmd_verify(args, out):
    from .cert import verify_document

    status = 0
    for path in args.files:
        try:
            doc = _load(path)
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = max(status, 2)
            continue
        rep = verify_document(doc)
        _print_report(path, rep, out)
        if not rep.ok:
            status = max(status, 1)
    return status


def build_parser():
    p = argparse.ArgumentParser(prog="noethera", description="ordinal-bounded Noetherian witnesses and certificates")
    sub = p.add_subparsers(dest="cmd", required=True)

    o = sub.add_parser("ord", help="ordinal calculator")
    o.add_argument("op", choices=["eval", "cmp", "natsum", "natprod"])
    o.add_argument("ordinals", nargs="*")
    o.set_defaults(func=cmd_ord)

    c = sub.add_parser("chomp", help="chomp positions on w x alpha")
    csub = c.add_subparsers(dest="op", required=True)
    cs = csub.add_parser("size")
    cs.add_argument("--alpha", required=True)
    cs.add_argument("--cuts", default="", help="points 'd:a,...'")
    cp = csub.add_parser("play")
    cp.add_argument("--alpha", required=True)
    cp.add_argument("--moves", required=True, help="chops 'd:a,...' applied in order")
    c.set_defaults(func=cmd_chomp)

    n = sub.add_parser("noether", help="run a witness on a stream")
    nsub = n.add_subparsers(dest="op", required=True)
    nr = nsub.add_parser("run")
    nr.add_argument("--ring", required=True)
    nr.add_argument("--input", required=True, help="one element per line, '-' for stdin")
    nr.add_argument("--max-steps", type=int, default=10_000)
    nr.add_argument("--out")
    n.set_defaults(func=cmd_noether)

    k = sub.add_parser("krull", help="collapse certificates")
    ksub = k.add_subparsers(dest="op", required=True)
    kc = ksub.add_parser("collapse")
    kc.add_argument("--ring", required=True)
    kc.add_argument("--elements", required=True)
    kc.add_argument("--out")
    kc.add_argument("--probe", choices=["simplest", "bound"], default="simplest")
    kc.add_argument("--max-exponent", type=int)
    kk = ksub.add_parser("check")
    kk.add_argument("cert")
    kk.add_argument("--lombardi", action="store_true")
    k.set_defaults(func=cmd_krull)

    v = sub.add_parser("verify", help="verify certificate documents")
    v.add_argument("files", nargs="+")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ParseError, OrdinalParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
