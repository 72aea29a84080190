"""Command-line front end: ``modyangian {compute,certify,gauss,verify,lab} ...``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import sys

from . import central
from .algebra import PrecisionError
from .gauss import gauss_data
from .io import dumps, element_to_json, parse_text, to_text
from .pbw import yangian
from .report import Check, Report
from .series import DEFAULT_TRUNC, series_to_json
from .shift import InvalidShiftMatrix, parse_sigma
from .verify import SUITES, Config, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p):
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)
    p.add_argument("--smax", type=int, default=4)
    p.add_argument("--sigma", type=str, default=None, help="shift diagonals, e.g. 'upper=1,2 lower=0,0'")
    p.add_argument("--r", type=int, default=None, help="single coefficient to emit")
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=2)
    p.add_argument("--out", choices=("json", "text"), default="text")
    p.add_argument("--seed", type=int, default=0)


def build_parser():
    parser = _Parser(prog="modyangian", description="Exact computations in modular Yangians.")
    sub = parser.add_subparsers(dest="cmd", parser_class=_Parser)
    sub.required = True
    c = sub.add_parser("compute", help="central series coefficients")
    c.add_argument("family", choices=central.FAMILIES)
    _common(c)
    c = sub.add_parser("certify", help="bounded centrality certificate")
    c.add_argument("element", nargs="?", default=None, help="element in text form, e.g. '1 * T[1,2,1]'")
    c.add_argument("--family", choices=central.FAMILIES, default=None)
    _common(c)
    c = sub.add_parser("gauss", help="Gauss factors D, E, F")
    _common(c)
    c = sub.add_parser("verify", help="run a verification suite")
    c.add_argument("suite", choices=SUITES + ("all",))
    _common(c)
    c = sub.add_parser("lab", help="golden tables and series identity checks")
    _common(c)
    return parser


def _config(a) -> Config:
    if a.n < 1:
        raise UsageError("--n must be at least 1")
    if a.trunc < 1:
        raise UsageError("--trunc must be at least 1")
    try:
        yangian(a.n, a.p)
        sigma = parse_sigma(a.sigma, a.n) if a.sigma else None
        return Config(n=a.n, p=a.p, trunc=a.trunc, smax=a.smax, sigma=sigma, seed=a.seed)
    except (ValueError, InvalidShiftMatrix) as exc:
        raise UsageError(str(exc)) from exc


def _emit_report(rep: Report, fmt, stream):
    if fmt == "json":
        stream.write(dumps(rep.to_json()) + "\n")
    else:
        stream.write(rep.to_text() + "\n")
    if not rep.ok:
        # machine-readable failure list on stderr regardless of format
        sys.stderr.write(dumps({"failures": [c.to_json() for c in rep.failures()]}) + "\n")
    return 0 if rep.ok else 1


def _cmd_compute(a, cfg, stream):
    try:
        f = central.family_series(a.family, cfg.n, cfg.p, cfg.trunc, a.i, a.j)
    except (ValueError, PrecisionError) as exc:
        raise UsageError(str(exc)) from exc
    if a.r is not None:
        x = f.coefficient(a.r)
        if a.out == "json":
            stream.write(dumps(element_to_json(x)) + "\n")
        else:
            stream.write(to_text(x) + "\n")
        return 0
    if a.out == "json":
        stream.write(dumps(series_to_json(f)) + "\n")
    else:
        for r, c in enumerate(f.coeffs):
            stream.write(f"{a.family}^({r}) = {to_text(c)}\n")
    return 0


def _cmd_certify(a, cfg, stream):
    alg = yangian(cfg.n, cfg.p)
    targets = []
    if a.element is not None:
        try:
            targets.append(("element", {}, parse_text(alg, a.element)))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        fam = a.family or "C"
        f = central.family_series(fam, cfg.n, cfg.p, cfg.trunc, a.i, a.j)
        rs = [a.r] if a.r is not None else range(1, cfg.trunc + 1)
        for r in rs:
            targets.append((fam, {"r": r}, f.coefficient(r)))
    rep = Report(dict(cfg.to_json(), bounded_certificate=True))
    for name, ps, x in targets:
        cert = central.certify_central(x, cfg.smax)
        bad = cert.failures()
        rep.add(Check(f"central.{name}", ps, not bad, "; ".join(c.witness for c in bad[:3]) if bad else None))
    return _emit_report(rep, a.out, stream)


def _cmd_gauss(a, cfg, stream):
    g = gauss_data(cfg.n, cfg.p, cfg.trunc)
    n = cfg.n
    payload = {
        "config": cfg.to_json(),
        "D": {str(i): series_to_json(g.D[i]) for i in range(1, n + 1)},
        "E": {f"{i},{j}": series_to_json(g.E[(i, j)]) for i in range(1, n) for j in range(i + 1, n + 1)},
        "F": {f"{i},{j}": series_to_json(g.F[(i, j)]) for i in range(1, n) for j in range(i + 1, n + 1)},
    }
    if a.out == "json":
        stream.write(dumps(payload) + "\n")
    else:
        for i in range(1, n + 1):
            for r, c in enumerate(g.D[i].coeffs):
                stream.write(f"D_{i}^({r}) = {to_text(c)}\n")
        for label, table in (("E", g.E), ("F", g.F)):
            for (i, j), s in sorted(table.items()):
                for r, c in enumerate(s.coeffs):
                    stream.write(f"{label}_{i},{j}^({r}) = {to_text(c)}\n")
    return 0


def _cmd_verify(a, cfg, stream):
    return _emit_report(run_suite(a.suite, cfg), a.out, stream)


def _cmd_lab(a, cfg, stream):
    return _emit_report(run_suite("serieslab", cfg), a.out, stream)


COMMANDS = {
    "compute": _cmd_compute,
    "certify": _cmd_certify,
    "gauss": _cmd_gauss,
    "verify": _cmd_verify,
    "lab": _cmd_lab,
}


def run(argv=None, stream=None) -> int:
    stream = stream or sys.stdout
    try:
        a = build_parser().parse_args(argv)
        cfg = _config(a)
        return COMMANDS[a.cmd](a, cfg, stream)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
