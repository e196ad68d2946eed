"""Command-line front end: ``eval``, ``certify``, ``verify``, ``scan``, ``repro``.

Exit codes: 0 success / granted / Pass, 1 Inapplicable, 2 parse or usage
error, 3 domain or evaluation error, 4 refutation (or a failed repro case).
"""

from __future__ import annotations

import argparse
import enum
import json
import math
import re
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from . import criteria, numcheck, repro
from .errors import (
    EvaluationFailure,
    Inapplicable,
    InvalidParameters,
    MNConvexError,
    NoConvergenceDetected,
    NonPositiveCoefficient,
    NonPositiveDenominator,
    NonPositiveInput,
    OutOfDomain,
    UndefinedSymbol,
)
from .numcheck import NAMED, ConvexityQuery, GridSpec, Subject, Tolerances, series_subject
from .powerseries import DEFAULT_HORIZON, DEFAULT_RTOL, INF, PowerSeries, evaluate, exact_or_float, exponential, from_coefficients
from .specialfn import (
    BesselParams,
    GeneralizedHypergeometricParams,
    HypergeometricParams,
    bessel_series,
    elliptic_k,
    gauss_2f1_series,
    generalized_pfq_series,
    hyp2f1,
    legendre,
)

EXIT_OK, EXIT_INAPPLICABLE, EXIT_PARSE, EXIT_DOMAIN, EXIT_REFUTED = 0, 1, 2, 3, 4


class SpecError(ValueError):
    """A function spec or config file that does not parse."""


# --- deterministic JSON -----------------------------------------------------


def _plain(v):
    if isinstance(v, enum.Enum):
        return v.value
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else int(v)
    if isinstance(v, np.generic):
        return v.item()
    if isinstance(v, tuple):
        return list(v)
    return v


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with floats at 17 significant digits and insertion-ordered keys."""
    obj = _plain(obj)
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return json.dumps(repr(obj))
        return format(obj, ".17g")
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# --- config -----------------------------------------------------------------

CONFIG_KEYS = {
    "tol": float,
    "horizon": int,
    "grid": int,
    "spacing": str,
    "levels": int,
    "refute_factor": float,
    "strict_rtol": float,
    "diag_rtol": float,
    "diag_frac": float,
}


def load_config(path: str) -> dict:
    """``key = value`` lines; ``#`` comments and ``[section]`` headers are ignored."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line or (line.startswith("[") and line.endswith("]")):
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip().strip("\"'")
            if not sep or key not in CONFIG_KEYS:
                raise SpecError(f"{path}:{lineno}: expected one of {sorted(CONFIG_KEYS)} = value")
            try:
                out[key] = CONFIG_KEYS[key](value)
            except ValueError:
                raise SpecError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    return out


@dataclass(frozen=True)
class Settings:
    tol: float = numcheck.DEFAULT_TOL.eval_rtol
    horizon: int = DEFAULT_HORIZON
    grid: int | None = None
    spacing: str | None = None
    levels: int = 2
    refute_factor: float = numcheck.DEFAULT_TOL.refute_factor
    strict_rtol: float = numcheck.DEFAULT_TOL.strict_rtol
    diag_rtol: float = numcheck.DEFAULT_TOL.diag_rtol
    diag_frac: float = numcheck.DEFAULT_TOL.diag_frac

    @property
    def tolerances(self) -> Tolerances:
        return Tolerances(self.tol, self.refute_factor, self.strict_rtol, self.diag_rtol, self.diag_frac)


def settings_from(args) -> Settings:
    s = Settings()
    if args.config:
        s = replace(s, **load_config(args.config))
    flags = {k: getattr(args, k) for k in ("tol", "horizon", "grid") if getattr(args, k) is not None}
    return replace(s, **flags)


# --- function specs -----------------------------------------------------------

_NUM = r"[-+]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?(?:/\d+)?"


def parse_number(text: str):
    """Exact Fraction for ``p/q`` and short decimals, float otherwise."""
    text = text.strip()
    if not re.fullmatch(_NUM, text):
        raise SpecError(f"not a number: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise SpecError(f"zero denominator in {text!r}")
        return Fraction(num) / int(den)
    return exact_or_float(float(text)) if ("e" in text.lower()) else exact_or_float(Fraction(text))


def _numbers(text: str) -> list:
    text = text.strip()
    return [parse_number(t) for t in text.split(",")] if text else []


@dataclass(frozen=True)
class ParsedSpec:
    text: str
    kind: str  # "series", "named" or "legendre"
    series: PowerSeries | None = None
    named: Subject | None = None
    params: object = None
    x: object = None
    degree: int | None = None

    @property
    def subject(self) -> Subject:
        if self.named is not None:
            return self.named
        if self.series is not None:
            return series_subject(self.series)
        raise SpecError(f"{self.text}: not a function of x on (0, R)")


def _series_file(path: str) -> PowerSeries:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [ln.split("#", 1)[0].strip() for ln in fh]
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from None
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].replace(" ", "").startswith("radius="):
        raise SpecError(f"{path}: first line must be radius=<value>")
    rtext = lines[0].split("=", 1)[1].strip()
    radius = INF if rtext.lower() in ("inf", "infinity") else parse_number(rtext)
    coeffs = []
    for ln in lines[1:]:
        coeffs.extend(parse_number(t) for t in ln.split(",") if t.strip())
    if len(coeffs) < 2:
        raise SpecError(f"{path}: need at least two coefficients")
    return from_coefficients(coeffs, radius=radius, name=f"series:{path}")


_HYP = re.compile(r"^(\d+)F(\d+)\((.*)\)$")
_PFQ = re.compile(r"^pFq\((.*)\)$")
_BESSEL = re.compile(r"^bessel\((.*)\)$")
_CALL = re.compile(r"^([A-Za-z][A-Za-z0-9]*)\((.*)\)$")
_GEOM = re.compile(r"^geometric\((.*)\)$")


def _split_x(parts: list[str], want: int, text: str):
    if len(parts) == want:
        return parts, None
    if len(parts) == want + 1:
        return parts[:want], parse_number(parts[want])
    raise SpecError(f"cannot parse {text!r}")


def parse_spec(text: str) -> ParsedSpec:
    """Parse a function spec such as ``2F1(1/2,1/2;1)`` or ``bessel(b=1,c=-1,p=-1/2)``."""
    t = text.replace(" ", "")
    if t.startswith("series:"):
        return ParsedSpec(text, "series", series=_series_file(t[len("series:"):]))
    if t in ("exp",):
        return ParsedSpec(text, "series", series=exponential(), named=NAMED["exp"])
    m = _HYP.match(t) or _PFQ.match(t)
    if m:
        body = m.groups()[-1]
        parts, x = _split_x(body.split(";"), 2, text)
        num, den = _numbers(parts[0]), _numbers(parts[1])
        if m.re is _HYP and (len(num), len(den)) != (int(m.group(1)), int(m.group(2))):
            raise SpecError(f"{text!r}: parameter counts do not match {m.group(1)}F{m.group(2)}")
        if (len(num), len(den)) == (2, 1):
            p = HypergeometricParams(num[0], num[1], den[0])
            return ParsedSpec(text, "series", series=gauss_2f1_series(p), params=p, x=x)
        p = GeneralizedHypergeometricParams(tuple(num), tuple(den))
        if p.p > p.q + 1:
            raise SpecError(f"{p.label()}: p > q + 1 diverges for every x != 0")
        return ParsedSpec(text, "series", series=generalized_pfq_series(p), params=p, x=x)
    m = _BESSEL.match(t)
    if m:
        parts, x = _split_x(m.group(1).split(";"), 1, text)
        kv = {}
        for item in parts[0].split(","):
            key, sep, val = item.partition("=")
            if not sep or key not in ("b", "c", "p") or key in kv:
                raise SpecError(f"{text!r}: expected bessel(b=..,c=..,p=..)")
            kv[key] = parse_number(val)
        if len(kv) != 3:
            raise SpecError(f"{text!r}: expected bessel(b=..,c=..,p=..)")
        p = BesselParams(kv["b"], kv["c"], kv["p"])
        return ParsedSpec(text, "series", series=bessel_series(p), params=p, x=x)
    m = _GEOM.match(t)
    if m:
        from .powerseries import geometric

        parts, x = _split_x(m.group(1).split(";"), 1, text)
        return ParsedSpec(text, "series", series=geometric(parse_number(parts[0])), x=x)
    if t.startswith("legendre("):
        m = _CALL.match(t)
        if not m:
            raise SpecError(f"cannot parse {text!r}")
        parts, x = _split_x(m.group(2).split(";"), 1, text)
        try:
            n = int(parts[0])
        except ValueError:
            raise SpecError(f"{text!r}: degree must be an integer") from None
        if n < 0:
            raise SpecError(f"{text!r}: degree must be non-negative")
        return ParsedSpec(text, "legendre", degree=n, x=x)
    m = _CALL.match(t)
    name, x = (m.group(1), parse_number(m.group(2))) if m else (t, None)
    if name in NAMED:
        series = exponential() if name == "exp" else None
        return ParsedSpec(text, "named", series=series, named=NAMED[name], x=x)
    raise SpecError(f"unknown function spec {text!r}")


# --- output helpers -----------------------------------------------------------


def _emit(args, payload, text_lines):
    if args.json:
        print(dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _write_csv(path: str, witnesses) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(numcheck.witnesses_csv([w for w in witnesses if w is not None]))


def _emit_plot(path: str, subject: Subject, lo: float, hi: float, n: int = 256) -> None:
    xs = np.linspace(lo, hi, n)
    ys = subject.f(xs)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("x,f\n")
        for x, y in zip(xs, ys):
            fh.write(f"{x:.17g},{y:.17g}\n")


def _fmt_value(v) -> str:
    return f"{v:.17g}" if isinstance(v, float) else str(v)


# --- eval -----------------------------------------------------------------------


def cmd_eval(args, settings: Settings) -> int:
    spec = parse_spec(args.spec)
    x = spec.x
    if args.x is not None:
        if x is not None:
            raise SpecError("x given twice")
        x = parse_number(args.x)
    if x is None:
        raise SpecError("no evaluation point; use SPEC(...;x) or a positional x")
    exact = None
    if spec.kind == "legendre":
        value = legendre(spec.degree)(x)
        exact = value if isinstance(value, Fraction) else None
        value = float(value)
        route = "exact recurrence"
    elif spec.named is not None and spec.kind == "named":
        if spec.named.name == "K":
            route = "AGM"
            value = float(elliptic_k(float(x)))
        else:
            route = "closed form"
            value = float(spec.named.f(float(x)))
        if not math.isfinite(value):
            raise OutOfDomain(f"{spec.named.name}({x}) is not finite")
    else:
        s = spec.series
        if s.family and s.family[0] == "2F1" and float(x) < 0:
            value = float(hyp2f1(*s.family[1], float(x)))
            route = "series after x -> x/(x-1)"
        else:
            value = evaluate(s, float(x), rtol=DEFAULT_RTOL if args.tol is None else args.tol)
            route = "series"
    payload = {"spec": args.spec, "x": x if not isinstance(x, Fraction) else str(x), "value": value,
               "route": route}
    if exact is not None:
        payload["exact"] = str(exact)
    lines = [f"{value:.17g}", f"route: {route}"] + ([f"exact: {exact}"] if exact is not None else [])
    _emit(args, payload, lines)
    if args.emit_plot:
        subj = spec.subject
        hi = subj.domain[1] if math.isfinite(subj.domain[1]) else max(3.0, 2 * float(x))
        _emit_plot(args.emit_plot, subj, 0.0, hi)
    return EXIT_OK


# --- certify -----------------------------------------------------------------------

BESSEL_PART_ALIASES = {str(i + 1): name for i, name in enumerate(criteria.BESSEL_CRITERIA)}


def _overall(certs) -> int:
    verdicts = {c.verdict for c in certs}
    if criteria.Verdict.REFUTED in verdicts:
        return EXIT_REFUTED
    if criteria.Verdict.INAPPLICABLE in verdicts:
        return EXIT_INAPPLICABLE
    return EXIT_OK


def _try_refute(spec: ParsedSpec, cert, claim: str | None, settings: Settings, R=None):
    if cert.granted or claim is None or spec.series is None:
        return cert
    res = numcheck.verify_claim(spec.series, claim, R=R, tol=settings.tolerances)
    return cert if res.passed else criteria.with_refutation(cert, claim, res.witness)


def cmd_certify(args, settings: Settings) -> int:
    spec = parse_spec(args.spec)
    if spec.series is None:
        raise SpecError(f"{args.spec}: certify needs a positive-coefficient series "
                        "(2F1, pFq, bessel, exp, geometric or series:FILE)")
    s = spec.series
    sense = args.sense
    R = parse_number(args.R) if args.R is not None else None
    certs = []
    claim = None
    if args.part is not None:
        if not isinstance(spec.params, BesselParams):
            raise SpecError("--part applies to bessel(...) subjects")
        part = BESSEL_PART_ALIASES.get(args.part, args.part)
        certs.append(criteria.certify_bessel_part(spec.params, part, R))
    elif args.which is not None:
        which = args.which.replace("-", "_")
        if which in criteria.HYPERGEOMETRIC_CLAIMS:
            if not isinstance(spec.params, HypergeometricParams):
                raise SpecError(f"--which {args.which} applies to 2F1(a,b;c) subjects")
            certs.append(criteria.certify_hypergeometric(spec.params, which))
            claim = criteria.HYPERGEOMETRIC_CLAIMS[which]
        elif which in criteria.SERIES_CRITERIA:
            certs.append(criteria.certify_series(s, which, sense, settings.horizon))
        elif which == "mf":
            certs.append(criteria.certify_mf(s, settings.horizon))
            claim = "mf-chain" if s.finite_radius else None
        else:
            choices = list(criteria.HYPERGEOMETRIC_CLAIMS) + list(criteria.SERIES_CRITERIA) + ["mf"]
            raise SpecError(f"unknown --which {args.which!r}; choose from {', '.join(choices)}")
    elif args.pair is not None:
        pair = args.pair.upper()
        if len(pair) != 2 or any(ch not in "AGH" for ch in pair):
            raise SpecError(f"--pair must be two of A, G, H; got {args.pair!r}")
        certs.append(criteria.certify(s, pair, sense or "convex", settings.horizon))
        claim = f"{pair}-{sense or 'convex'}"
    elif isinstance(spec.params, BesselParams):
        certs.extend(criteria.certify_bessel(spec.params, R))
    elif isinstance(spec.params, (HypergeometricParams, GeneralizedHypergeometricParams)):
        p = spec.params
        if isinstance(p, HypergeometricParams):
            p = GeneralizedHypergeometricParams((p.a, p.b), (p.c,))
        certs.append(criteria.certify_pfq(p))
    else:
        raise SpecError("choose a criterion with --which, --part or --pair")
    if args.refute and len(certs) == 1:
        certs[0] = _try_refute(spec, certs[0], claim, settings)
    payload = certs[0].as_dict() if len(certs) == 1 else [c.as_dict() for c in certs]
    print(dumps(payload))
    return _overall(certs)


# --- verify -----------------------------------------------------------------------


def _default_interval(subject: Subject) -> tuple[float, float]:
    lo, hi = subject.domain
    if math.isfinite(hi):
        R = hi / (1.0 - numcheck.BOUNDARY_GUARD)
        return (0.01 * R, 0.95 * R)
    return (0.01, 3.0)


def _grid(settings: Settings, lo: float, hi: float, default_n: int = 64, default_spacing: str = "log") -> GridSpec:
    return GridSpec(lo, hi, settings.grid or default_n, settings.spacing or default_spacing)


def _result_lines(res) -> list[str]:
    lines = [f"{res.verdict}: {res.context} ({res.checked} checks)"]
    if res.witness is not None:
        w = res.witness
        lines.append(f"witness: x={w.x:.17g} y={w.y:.17g} lhs={w.lhs:.17g} rhs={w.rhs:.17g} gap={w.gap:.17g}")
        lines.append(f"threshold: {res.threshold:.3g}")
    else:
        lines.append(f"strict off the diagonal: {res.strict}; equality on the diagonal: {res.diagonal_ok}")
    return lines


def cmd_verify(args, settings: Settings) -> int:
    tol = settings.tolerances
    target = args.spec.replace(" ", "")
    if target in numcheck.BESSEL_PARTS:
        R = float(parse_number(args.R)) if args.R is not None else None
        g = None
        if settings.grid or args.lo is not None or args.hi is not None:
            base = numcheck._bessel_grid(target, R, None)
            lo = float(args.lo) if args.lo is not None else base.lo
            hi = float(args.hi) if args.hi is not None else base.hi
            g = _grid(settings, lo, hi)
        if target.endswith("transformed") and R is None:
            raise SpecError(f"{target} needs --R")
        res = numcheck.verify_bessel_inequality(target, R, g, tol)
    else:
        spec = parse_spec(args.spec)
        if args.chain:
            if not isinstance(spec.params, HypergeometricParams):
                raise SpecError("--chain applies to 2F1(a,b;a+b)")
            g = _grid(settings, 0.05, 0.95, 64, "uniform") if settings.grid else None
            res = numcheck.verify_hypergeometric_chain(spec.params, g, tol)
        elif args.claim is not None:
            if spec.series is None:
                raise SpecError("--claim needs a series subject")
            R = float(parse_number(args.R)) if args.R is not None else None
            res = numcheck.verify_claim(spec.series, args.claim, R=R, tol=tol)
        else:
            if args.pair is None:
                raise SpecError("give --pair, --claim or --chain")
            subject = spec.subject
            lo, hi = _default_interval(subject)
            lo = float(args.lo) if args.lo is not None else lo
            hi = float(args.hi) if args.hi is not None else hi
            q = ConvexityQuery(subject, args.pair, args.sense, (lo, hi))
            res = numcheck.ROUTES[args.route](q, _grid(settings, lo, hi), tol)
            if args.emit_plot:
                _emit_plot(args.emit_plot, subject, lo, hi)
    if args.csv:
        links = res.links or (res,)
        _write_csv(args.csv, [r.witness or r.worst for r in links])
    _emit(args, res.as_dict(), _result_lines(res))
    return EXIT_OK if res.passed else EXIT_REFUTED


# --- scan -----------------------------------------------------------------------


def cmd_scan(args, settings: Settings) -> int:
    if args.part not in ("cosh-transformed", "sinhc-transformed"):
        raise SpecError("scan parts: cosh-transformed, sinhc-transformed")
    start, stop, step = (float(parse_number(v)) for v in (args.start, args.stop, args.step))
    if not step > 0 or stop < start:
        raise SpecError("need step > 0 and stop >= start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    Rs = [round(start + k * step, 12) for k in range(count)]
    rows = numcheck.sharpness_scan(args.part, Rs, levels=settings.levels)
    first = numcheck.first_refuted(rows)
    payload = {"part": args.part, "rows": [r.as_dict() for r in rows], "first_refuted": first}
    lines = []
    for r in rows:
        gap = f"  gap={r.witness.gap:.3e} at ({r.witness.x:.6g}, {r.witness.y:.6g})" if r.witness else ""
        lines.append(f"R={r.R:<8g} {'Pass' if r.passed else 'Refuted'}{gap}")
    lines.append(f"first refuted: {first if first is not None else 'none'}")
    if args.csv:
        _write_csv(args.csv, [r.witness for r in rows])
    _emit(args, payload, lines)
    return EXIT_OK


# --- repro ------------------------------------------------------------------------


def cmd_repro(args, settings: Settings) -> int:
    ids = list(repro.CASES) if args.case == "all" else [args.case]
    for cid in ids:
        if cid not in repro.CASES:
            print(f"unknown case {cid!r}; known: {', '.join(repro.CASES)}, all", file=sys.stderr)
            return EXIT_PARSE
    results = [repro.run_case(cid) for cid in ids]
    ok = all(r.passed for r in results)
    payload = {"cases": [r.as_dict() for r in results], "passed": ok}
    lines = []
    for r in results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.case.id}: {r.case.description}")
        for c in r.checks:
            tol = f" (tol {c.tolerance:g})" if c.tolerance is not None else ""
            lines.append(
                f"    {'ok  ' if c.passed else 'FAIL'} {c.name}: expected {_fmt_value(c.expected)}, "
                f"computed {_fmt_value(c.computed)}{tol} [{c.source}]"
            )
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_REFUTED


# --- parser -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, help="relative evaluation tolerance")
    common.add_argument("--horizon", type=int, help=f"prefix length for sequence criteria (default {DEFAULT_HORIZON})")
    common.add_argument("--grid", type=int, help="grid points per axis")
    common.add_argument("--json", action="store_true", help="print JSON")
    common.add_argument("--csv", metavar="FILE", help="write witnesses as CSV (x,y,lhs,rhs,gap)")
    common.add_argument("--config", metavar="FILE", help="key=value settings; flags override")
    common.add_argument("--emit-plot", metavar="FILE", help="write x,f(x) columns")

    parser = _Parser(prog="mnconvex", description="MN-convexity of power series and special functions")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate a function")
    p.add_argument("spec")
    p.add_argument("x", nargs="?")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("certify", parents=[common], help="run a coefficient criterion")
    p.add_argument("spec")
    p.add_argument("--which", help="closed-form or sequence criterion")
    p.add_argument("--part", help="bessel conclusion: 1-4 or its name")
    p.add_argument("--pair", help="mean pair such as AG")
    p.add_argument("--sense", choices=numcheck.SENSES)
    p.add_argument("--R", help="R for the bessel transformed-concavity condition")
    p.add_argument("--refute", action="store_true", help="search for a counterexample when the criterion fails")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", parents=[common], help="numeric check of an inequality")
    p.add_argument("spec", help="function spec or one of " + ", ".join(numcheck.BESSEL_PARTS))
    p.add_argument("--pair")
    p.add_argument("--sense", choices=numcheck.SENSES, default="convex")
    p.add_argument("--route", choices=sorted(numcheck.ROUTES), default="pairs")
    p.add_argument("--lo")
    p.add_argument("--hi")
    p.add_argument("--R")
    p.add_argument("--claim", help="certificate claim such as shifted-concave or mf-chain")
    p.add_argument("--chain", action="store_true", help="mean chain for 2F1(a,b;a+b)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="sharpness scan over R")
    p.add_argument("part")
    p.add_argument("--from", dest="start", default="5")
    p.add_argument("--to", dest="stop", default="7")
    p.add_argument("--step", default="0.25")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("repro", parents=[common], help="reproduction suite")
    p.add_argument("case", help="case id or 'all'")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = settings_from(args)
        return args.func(args, settings)
    except (SpecError, UndefinedSymbol) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OutOfDomain, NonPositiveInput, InvalidParameters, NonPositiveCoefficient, NonPositiveDenominator,
            NoConvergenceDetected, EvaluationFailure, Inapplicable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except MNConvexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
