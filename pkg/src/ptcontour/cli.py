"""Command-line front end.

Parameters are exact complex-rational literals (no floating intermediate),
so paper-style inputs like ``-2i`` or ``1/3+2/5i`` round-trip exactly into
the algebra.  Every subcommand writes its artifacts under ``--out`` only and
produces deterministic output: identical configuration yields byte-identical
JSON.

Exit codes: 0 success, 2 validation failure, 3 numerical non-convergence,
4 parse error.
"""
from __future__ import annotations

import argparse
import configparser
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import catalog, reference
from .contour import polyline, wedge_report
from .errors import (NumericalError, ParseError, PtContourError)
from .isomap import map_params, push_metric, verify_isometry
from .jsonio import canonical_dumps, write_csv, write_json
from .metric import (default_momentum_grid, exact_hermite_norm, hermite_demo,
                     metric_of)
from .opalg import (ANCHOR, Branch, ContourParams, OperatorExpr,
                    bch_conjugate, canonical_swap, hermitian_form, hermitize,
                    is_hermitian)
from .rational import GaussianRational
from .spectral import eigensolve_hermitian, matrixize
from .wkb import TAGS, eval_wkb, in_domain, metric_weighted_wkb

_NUMBER = r"(?:\d+/\d+|\d+\.\d+|\.\d+|\d+)"
_SINGLE = re.compile(rf"^(?P<sign>[+-]?)(?P<mag>{_NUMBER})?(?P<i>i)?$")
_PAIR = re.compile(
    rf"^(?P<re>[+-]?{_NUMBER})(?P<imsign>[+-])(?P<immag>{_NUMBER})?i$")
_LEGAL_CHARS = set("0123456789./i+-")


def _fraction(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(text)    # handles integers and decimals exactly
    except ZeroDivisionError:
        raise ParseError(text, text.index("/"), "zero denominator") from None


def parse_complex(text: str) -> GaussianRational:
    """Parse [+-]R[+-Ri] with R an integer, decimal or integer fraction."""
    s = text.strip()
    for pos, ch in enumerate(s):
        if ch not in _LEGAL_CHARS:
            raise ParseError(text, pos, "illegal character")
    m = _SINGLE.match(s)
    if m and (m.group("mag") or m.group("i")):
        sign = -1 if m.group("sign") == "-" else 1
        mag = _fraction(m.group("mag")) if m.group("mag") else Fraction(1)
        if m.group("i"):
            return GaussianRational(0, sign * mag)
        return GaussianRational(sign * mag)
    m = _PAIR.match(s)
    if m:
        re_part = _fraction(m.group("re"))
        im_mag = _fraction(m.group("immag")) if m.group("immag") else Fraction(1)
        im_sign = -1 if m.group("imsign") == "-" else 1
        return GaussianRational(re_part, im_sign * im_mag)
    raise ParseError(text, len(s), "not a complex literal")


def parse_contour(text: str, branch: str = "principal") -> ContourParams:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(text, 0, "expected three comma-separated literals")
    a, b, c = (parse_complex(p) for p in parts)
    return ContourParams(a, b, c, Branch(branch))


# ---------------------------------------------------------------------------
# subcommand payloads
# ---------------------------------------------------------------------------

def _formats(args) -> set[str]:
    return set(args.formats.split(","))


def _outdir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _params_from_args(args) -> ContourParams:
    return ContourParams(parse_complex(args.a), parse_complex(args.b),
                         parse_complex(args.c),
                         Branch(getattr(args, "branch", "principal")))


def _cmd_algebra_verify(args):
    checks = []

    def check(name, passed, detail=""):
        checks.append({"name": name, "passed": bool(passed), "detail": detail})

    # the weight-function toy chain: exp(-x^2/2) conjugation of p^2 + 2ixp
    gen = OperatorExpr.monomial(2, 0, Fraction(-1, 2))
    toy = OperatorExpr({(0, 2): GaussianRational(1), (1, 1): GaussianRational(0, 2)})
    target = OperatorExpr({(0, 2): GaussianRational(1), (2, 0): GaussianRational(1),
                           (0, 0): GaussianRational(-1)})
    check("toy-conjugation-chain", bch_conjugate(gen, toy) == target,
          "exp(-x^2/2): p^2+2ixp -> p^2+x^2-1")

    for params in catalog.STANDARD_FIVE:
        h, f, g = hermitize(params)
        ok = h == hermitian_form(params) and is_hermitian(h)
        check(f"hermitian-equivalent {params.label()}", ok, repr(h))
        swap = canonical_swap(h, params)
        check(f"anchor-reduction {params.label()}",
              swap.operator in (ANCHOR,) or swap.parity_flipped,
              f"parity_flipped={swap.parity_flipped}")
        spec = metric_of(params)
        check(f"metric-coefficients {params.label()}",
              spec.kappa3 == 2 * f.re and spec.kappa1 == 2 * g.re,
              f"kappa3={spec.kappa3} kappa1={spec.kappa1}")

    b_variants = [hermitize(ContourParams(catalog.LOWER_PT.a, GaussianRational(b),
                                          catalog.LOWER_PT.c)).h
                  for b in (0, 1, 5, -3)]
    check("b-independence", all(h == b_variants[0] for h in b_variants))

    n_pairs = 0
    for src in catalog.STANDARD_FIVE:
        for dst in catalog.STANDARD_FIVE:
            if src is dst:
                continue
            push_metric(map_params(src, dst), metric_of(src))
            n_pairs += 1
    check("metric-pushforward-identities", True, f"{n_pairs} ordered pairs")

    for c in checks:
        print(f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']}")
    payload = {"command": "algebra-verify", "checks": checks,
               "all_passed": all(c["passed"] for c in checks)}
    out = _outdir(args)
    if "json" in _formats(args):
        write_json(out / "algebra_verify.json", payload)
    if not payload["all_passed"]:
        raise PtContourError("algebra verification failed")
    return payload


def _spectrum_payload(params: ContourParams, levels: int, n: int):
    grid = default_momentum_grid(params, n=n)
    h = hermitize(params).h
    result = eigensolve_hermitian(matrixize(h, grid), levels, grid=grid)
    ref = reference.REFERENCE_LEVELS[:levels]
    rel = max(abs(ev.real - r) / abs(r)
              for ev, r in zip(result.eigenvalues, ref))
    payload = result.to_json_obj(params=params)
    payload["command"] = "spectrum"
    payload["reference"] = list(ref)
    payload["max_relative_deviation"] = rel
    return payload


def _cmd_spectrum(args):
    params = _params_from_args(args)
    payload = _spectrum_payload(params, args.levels, args.grid_n)
    out = _outdir(args)
    if "json" in _formats(args):
        write_json(out / "spectrum.json", payload)
    if "csv" in _formats(args):
        rows = [(i, ev["re"], ev["im"], res)
                for i, (ev, res) in enumerate(zip(payload["eigenvalues"],
                                                  payload["residuals"]))]
        write_csv(out / "spectrum.csv",
                  ["level", "re", "im", "residual"], rows)
    return payload


def _cmd_iso_check(args):
    src = parse_contour(args.src)
    dst = parse_contour(args.dst)
    report = verify_isometry(src, dst, k=args.k, n=args.grid_n)
    payload = report.to_json_obj()
    payload["command"] = "iso-check"
    payload["passed"] = report.passed
    out = _outdir(args)
    if "json" in _formats(args):
        write_json(out / "iso_check.json", payload)
    if "csv" in _formats(args):
        for name, mat in (("amplitudes_src", report.amplitudes_src),
                          ("amplitudes_dst", report.amplitudes_dst)):
            write_csv(out / f"{name}.csv",
                      ["i"] + [f"j{j}" for j in range(report.k)],
                      ([i] + [mat[i, j].real for j in range(report.k)]
                       for i in range(report.k)))
    return payload


def _cmd_wedges(args):
    params = _params_from_args(args)
    report = wedge_report(params)
    payload = report.to_json_obj()
    payload["command"] = "wedges"
    payload["params"] = {"a": str(params.a), "b": str(params.b),
                         "c": str(params.c), "branch": params.branch.value}
    out = _outdir(args)
    xs, re_z, im_z = polyline(params)
    if "json" in _formats(args):
        write_json(out / "wedges.json", payload)
    if "csv" in _formats(args):
        write_csv(out / "contour.csv", ["x", "re_z", "im_z"],
                  zip(xs, re_z, im_z))
    if "svg" in _formats(args):
        from .svgfig import wedge_figure
        wedge_figure(out / "wedges.svg",
                     [(f"z = {params.a}*sqrt({params.b} + {params.c}*i*x)"
                       f" [{params.branch.value}]", re_z, im_z, False)])
    return payload


def _cmd_wkb(args):
    tag = args.tag
    ps = np.linspace(args.p_min, args.p_max, args.n)
    logmag = np.asarray(eval_wkb(tag, ps))
    weighted = np.asarray(metric_weighted_wkb(tag, ps))
    mask = in_domain(tag, ps)
    payload = {
        "command": "wkb", "tag": tag,
        "p_min": args.p_min, "p_max": args.p_max, "n": args.n,
        "log_magnitude_at_ends": [float(logmag[0]), float(logmag[-1])],
        "weighted_at_ends": [float(weighted[0]), float(weighted[-1])],
    }
    out = _outdir(args)
    if "csv" in _formats(args):
        write_csv(out / f"wkb_{tag}.csv",
                  ["p", "log_wkb", "log_weighted", "in_domain"],
                  ((p, lm, wm, int(mk))
                   for p, lm, wm, mk in zip(ps, logmag, weighted, mask)))
    if "svg" in _formats(args):
        from .svgfig import line_chart
        line_chart(out / f"wkb_{tag}.svg",
                   [("log|profile|", ps, logmag),
                    ("log|profile*eta*profile|", ps, weighted)],
                   title=f"momentum-space profile: {tag}",
                   xlabel="p", ylabel="log magnitude")
    if "json" in _formats(args):
        write_json(out / f"wkb_{tag}.json", payload)
    return payload


def _cmd_hermite_demo(args):
    table = hermite_demo(args.n_max)
    k = args.n_max + 1
    dev = max(abs(table.table[n, m] - (exact_hermite_norm(n) if n == m else 0.0))
              / exact_hermite_norm(max(n, m))
              for n in range(k) for m in range(k))
    payload = table.to_json_obj()
    payload["command"] = "hermite-demo"
    payload["max_relative_deviation"] = dev
    out = _outdir(args)
    if "csv" in _formats(args):
        write_csv(out / "hermite_T.csv",
                  ["n"] + [f"m{m}" for m in range(k)],
                  ([n] + [table.table[n, m] for m in range(k)]
                   for n in range(k)))
        write_csv(out / "hermite_samples.csv",
                  ["x", "H0", "H1", "H2", "H3"],
                  ((x, *vals) for x, vals
                   in zip(table.plot_x, table.plot_values.T)))
    if "svg" in _formats(args):
        from .svgfig import line_chart
        line_chart(out / "hermite.svg",
                   [(f"H{n}", table.plot_x, table.plot_values[n])
                    for n in range(4)],
                   title="first four Hermite polynomials",
                   xlabel="x", ylabel="H_n(x)")
    if "json" in _formats(args):
        write_json(out / "hermite.json", payload)
    return payload


def _cmd_sweep(args):
    cfg = configparser.ConfigParser()
    read = cfg.read(args.config)
    if not read:
        raise PtContourError(f"config file {args.config!r} not found")
    jobs = []
    for section in cfg.sections():
        sec = cfg[section]
        for key in ("a", "b", "c"):
            if sec.get(key) is None:
                raise PtContourError(
                    f"section [{section}] is missing key {key!r}")
        params = ContourParams(parse_complex(sec.get("a")),
                               parse_complex(sec.get("b")),
                               parse_complex(sec.get("c")))
        jobs.append((section, params,
                     sec.getint("levels", fallback=args.levels),
                     sec.getint("grid_n", fallback=args.grid_n)))
    out = _outdir(args)
    summary = {}
    with ThreadPoolExecutor(max_workers=min(4, max(1, len(jobs)))) as pool:
        futures = {section: pool.submit(_spectrum_payload, params, lv, n)
                   for section, params, lv, n in jobs}
        for section, fut in futures.items():
            payload = fut.result()
            if "json" in _formats(args):
                write_json(out / f"spectrum_{section}.json", payload)
            summary[section] = {
                "eigenvalues": payload["eigenvalues"],
                "max_relative_deviation": payload["max_relative_deviation"],
            }
    payload = {"command": "sweep", "sections": summary}
    if "json" in _formats(args):
        write_json(out / "summary.json", payload)
    return payload


# ---------------------------------------------------------------------------
# parser plumbing
# ---------------------------------------------------------------------------

_VALUE_FLAGS = ("--a", "--b", "--c", "--src", "--dst")


def _absorb_values(argv: list[str]) -> list[str]:
    """Join value flags with their argument so '-2i' is not read as a flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _add_common(sub):
    sub.add_argument("--out", default="out", help="output directory")
    sub.add_argument("--formats", default="json,csv,svg",
                     help="comma-separated subset of json,csv,svg")


def _add_contour_args(sub):
    sub.add_argument("--a", required=True, help="complex literal, e.g. -2i")
    sub.add_argument("--b", required=True)
    sub.add_argument("--c", required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptcontour",
        description="complex contours, metric operators and isomorphic "
                    "Hilbert spaces of the wrong-sign quartic oscillator")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("algebra-verify",
                        help="run every exact operator identity")
    _add_common(s)
    s.set_defaults(func=_cmd_algebra_verify)

    s = subs.add_parser("spectrum",
                        help="diagonalize a contour's Hermitian equivalent")
    _add_contour_args(s)
    s.add_argument("--levels", type=int, default=5)
    s.add_argument("--grid-n", type=int, default=1201)
    _add_common(s)
    s.set_defaults(func=_cmd_spectrum)

    s = subs.add_parser("iso-check",
                        help="verify amplitude preservation between contours")
    s.add_argument("--src", required=True, help="a,b,c literals")
    s.add_argument("--dst", required=True)
    s.add_argument("-k", type=int, default=3)
    s.add_argument("--grid-n", type=int, default=1201)
    _add_common(s)
    s.set_defaults(func=_cmd_iso_check)

    s = subs.add_parser("wedges",
                        help="endpoint sector classification and figure")
    _add_contour_args(s)
    s.add_argument("--branch", default="principal",
                   choices=[b.value for b in Branch])
    _add_common(s)
    s.set_defaults(func=_cmd_wedges)

    s = subs.add_parser("wkb", help="momentum-space profile curves")
    s.add_argument("--tag", required=True, choices=TAGS)
    s.add_argument("--p-min", type=float, default=-30.0)
    s.add_argument("--p-max", type=float, default=30.0)
    s.add_argument("--n", type=int, default=601)
    _add_common(s)
    s.set_defaults(func=_cmd_wkb)

    s = subs.add_parser("hermite-demo",
                        help="weighted Hermite inner-product table")
    s.add_argument("--n-max", type=int, default=5)
    _add_common(s)
    s.set_defaults(func=_cmd_hermite_demo)

    s = subs.add_parser("sweep", help="batch spectra from a config file")
    s.add_argument("--config", required=True)
    s.add_argument("--levels", type=int, default=5)
    s.add_argument("--grid-n", type=int, default=1201)
    _add_common(s)
    s.set_defaults(func=_cmd_sweep)

    return parser


_ERROR_CODES = (
    (ParseError, 4, "parse"),
    (NumericalError, 3, "numerical"),
    (PtContourError, 2, "validation"),
    (ValueError, 2, "validation"),
)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_absorb_values(argv))
    try:
        payload = args.func(args)
    except tuple(exc for exc, _, _ in _ERROR_CODES) as exc:
        for exc_type, code, kind in _ERROR_CODES:
            if isinstance(exc, exc_type):
                print(canonical_dumps({
                    "error": {"kind": kind, "type": type(exc).__name__,
                              "message": str(exc)}}), end="")
                return code
        raise    # unreachable
    print(canonical_dumps(payload), end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
