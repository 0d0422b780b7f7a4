"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
In text mode every successful command ends with a ``RESULT: <value>`` line.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import homology, lmap
from .checks import CheckConfig, check_relations, run_checks
from .invariants import UnframedDiskError, intersection_sum, omega_plus, phi, sigma_pair, tau
from .quotient import QuotientContext, WindowTooSmallError, are_equal_mod_R
from .rings import BiLaurent, Laurent
from .wall import lambda_disc, lambda_sphere, lambda_tilde, r4_data

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Report:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.data: dict = {}

    def add(self, key: str, value, text: str | None = None):
        self.data[key] = value
        self.lines.append(text if text is not None else f"{key}: {value}")

    def emit(self, result, ok: bool = True) -> int:
        if self.fmt == "json":
            self.data["result"] = result
            self.data["ok"] = ok
            print(json.dumps(self.data, indent=2))
        else:
            for ln in self.lines:
                print(ln)
            print(f"RESULT: {result}")
        return EXIT_OK if ok else EXIT_FAIL


def _load(path: str | None) -> lmap.LinkMapDocument:
    if path is None:
        return lmap.kirk_example()
    try:
        return lmap.load(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except lmap.ParseError as e:
        raise UsageError(f"{path}: {e}") from None


def _parse_r4(arg: str) -> tuple[Laurent, int]:
    poly, _, w2 = arg.partition(":")
    try:
        return Laurent.parse(poly), int(w2 or 0) & 1
    except ValueError as e:
        raise UsageError(f"bad --r4 value {arg!r}: {e}") from None


def cmd_sigma(args) -> int:
    doc = _load(args.file)
    pair = sigma_pair(doc.dp_plus, doc.dp_minus)
    rep = Report(args.format)
    rep.add("sigma_plus", str(pair.sigma_plus), f"sigma_+ = {pair.sigma_plus}")
    rep.add("sigma_minus", str(pair.sigma_minus), f"sigma_- = {pair.sigma_minus}")
    return rep.emit(str(pair))


def _framed_tau(doc) -> BiLaurent:
    try:
        return tau(doc.disks)
    except UnframedDiskError as e:
        raise UsageError(str(e)) from None


def cmd_tau(args) -> int:
    doc = _load(args.file)
    x = _framed_tau(doc)
    rep = Report(args.format)
    for w in doc.disks:
        rep.add(f"I({w.id})", str(intersection_sum(w)))
    return rep.emit(str(x))


def cmd_phi_tau(args) -> int:
    doc = _load(args.file)
    x = _framed_tau(doc)
    rep = Report(args.format)
    for w in doc.disks:
        rep.add(f"Phi(I({w.id}))", str(phi(intersection_sum(w))))
    return rep.emit(str(phi(x)))


def cmd_omega(args) -> int:
    doc = _load(args.file)
    _framed_tau(doc)
    rep = Report(args.format)
    return rep.emit(omega_plus(doc.disks))


def cmd_check_relations(args) -> int:
    if args.kmax < 0:
        raise UsageError("--kmax must be nonnegative")
    spheres = _load(args.file).spheres if args.file else ()
    extra = [_parse_r4(s) for s in args.r4]
    count, bad = check_relations(args.kmax, spheres, extra)
    rep = Report(args.format)
    rep.add("checked", count, f"checked {count} relators with |k|,|l| <= {args.kmax}")
    if bad:
        rep.add(
            "offending",
            [str(r) for r in bad],
            "\n".join(f"nonzero image: {r} witness=s^{r.k} value={r.expand()} Phi={phi(r.expand())}" for r in bad[:20]),
        )
        print(f"linktau: {len(bad)} relators have nonzero image under Phi", file=sys.stderr)
        return rep.emit("FAIL", ok=False)
    return rep.emit(f"PASS {count}")


def cmd_wall(args) -> int:
    doc = _load(args.file)
    rep = Report(args.format)
    tildes = []
    for s in doc.spheres:
        d, lam, lt = lambda_disc(s.pairing), lambda_sphere(s), lambda_tilde(s)
        tildes.append(str(lt))
        rep.add(
            s.id,
            {"disc": str(d), "lambda": str(lam), "lambda_tilde": str(lt)},
            f"{s.id}: disc = {d}; lambda = {lam}; lambda~ = {lt}",
        )
    return rep.emit("[" + ", ".join(tildes) + "]")


def cmd_pi2(args) -> int:
    doc = _load(args.file)
    if doc.handles is None:
        raise UsageError("file has no 'handles' line")
    c = homology.build_universal_cover_complex(doc.handles)
    rep = Report(args.format)
    rep.add("handles", doc.handles)
    rep.add("integral_h2_rank", homology.integral_h2_rank(doc.handles))
    return rep.emit(homology.h2_rank(c))


def cmd_equal(args) -> int:
    try:
        x, y = BiLaurent.parse(args.x), BiLaurent.parse(args.y)
    except ValueError as e:
        raise UsageError(f"bad polynomial: {e}") from None
    spheres = _load(args.file).spheres if args.file else ()
    ctx = QuotientContext(r4_data(spheres) + tuple(_parse_r4(s) for s in args.r4), window=args.window)
    try:
        cert = are_equal_mod_R(x, y, ctx)
    except WindowTooSmallError as e:
        raise UsageError(str(e)) from None
    rep = Report(args.format)
    rep.add("certificate", cert.to_text(), cert.to_text())
    return rep.emit(cert.kind)


def cmd_fmt(args) -> int:
    doc = _load(args.file)
    sys.stdout.write(lmap.serialize(doc))
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    doc = _load(args.file)
    results = run_checks(doc, CheckConfig(window=args.window or 10, kmax=args.kmax))
    ok = all(r.passed for r in results)
    rep = Report(args.format)
    for r in results:
        rep.add(f"check_{r.number}", {"name": r.name, "pass": r.passed, "detail": r.detail, "seconds": r.seconds}, r.line())
    if args.format == "text":
        rep.lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return rep.emit("PASS" if ok else "FAIL", ok=ok)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="linktau", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, file_required=True):
        sp = sub.add_parser(name, parents=[common], help=help)
        if file_required:
            sp.add_argument("file", help=".lmap file")
        sp.set_defaults(fn=fn)
        return sp

    add("sigma", cmd_sigma, "print (sigma_+, sigma_-)")
    add("tau", cmd_tau, "print a representative of tau")
    add("phi-tau", cmd_phi_tau, "print Phi of each I(W) and of tau")
    add("omega", cmd_omega, "print omega_+")
    add("wall", cmd_wall, "per-sphere Wall pairings")
    add("pi2", cmd_pi2, "rank of pi_2 over Z[t^±1]")
    add("fmt", cmd_fmt, "rewrite a file in canonical form")

    sp = add("check-relations", cmd_check_relations, "check that Phi kills the relators", file_required=False)
    sp.add_argument("file", nargs="?", help=".lmap file supplying R4 data")
    sp.add_argument("--kmax", type=int, default=50)
    sp.add_argument("--r4", action="append", default=[], metavar="POLY[:W2]", help="extra R4 datum g(t):w2")

    sp = add("equal", cmd_equal, "decide x = y modulo the relations, with a certificate", file_required=False)
    sp.add_argument("x")
    sp.add_argument("y", nargs="?", default="0")
    sp.add_argument("--file", help=".lmap file supplying R4 data")
    sp.add_argument("--window", type=int, default=None)
    sp.add_argument("--r4", action="append", default=[], metavar="POLY[:W2]")

    sp = add("verify-paper", cmd_verify_paper, "run every reproduction check", file_required=False)
    sp.add_argument("--data", dest="file", default=None, help="dataset to check instead of the bundled one")
    sp.add_argument("--window", type=int, default=None)
    sp.add_argument("--kmax", type=int, default=50)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"linktau: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
