"""Command-line interface and report serializers.

Exit codes: 0 pass, 1 internal error, 2 bad input, 3 known-discrepancy
(a suite whose only disagreements are the documented ones).  Reports are
deterministic: identical seeds produce byte-identical JSON.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from dataclasses import asdict
from typing import Dict, List, Optional

from .errors import (
    CliParseError,
    DomainViolationError,
    UnknownSuiteError,
    WcoError,
)
from .families import (
    C1Params,
    C2NormalCase,
    C2Params,
    JParams,
    c1_normal_predicate,
    c1_symbols,
    c2_normal_predicate,
    c2_symbols,
    j_normal_predicate,
    j_symbols,
)
from .mobius import ConstantMap, MobiusMap, classify, cowen_adjoint, lft_normality_defects
from .operators import (
    Conjugation,
    build_wco,
    conjugation_matrix,
    involution_residual,
    normality_residual,
    symmetry_residual,
)
from .verify import (
    SuiteConfig,
    SUITES,
    VerificationReport,
    default_config,
    nonexistence_sweep,
    run_suite,
)

SCHEMA_VERSION = 1

REPORT_SCHEMA = {
    "version": SCHEMA_VERSION,
    "type": "object",
    "required": ["schema_version", "suite_id", "config", "records", "summary"],
    "properties": {
        "schema_version": {"type": "integer"},
        "suite_id": {"type": "string"},
        "known_discrepancy": {"type": "boolean"},
        "config": {
            "type": "object",
            "required": ["dim", "block", "samples", "seed", "pass_tol", "fail_tol", "pred_tol"],
        },
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "params", "residuals", "predicates", "oracles", "verdict"],
                "verdicts": ["pass", "fail", "inconclusive", "discrepancy"],
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "inconclusive", "discrepancy", "total"],
        },
    },
}

_NUM = r"(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?"
_RE_REAL = re.compile(rf"^\s*(?P<re>[+-]?{_NUM})\s*$")
_RE_IMAG = re.compile(rf"^\s*(?P<sign>[+-])?(?P<mag>{_NUM})?[ij]\s*$")
_RE_BOTH = re.compile(
    rf"^\s*(?P<re>[+-]?{_NUM})(?P<sign>[+-])(?P<mag>{_NUM})?[ij]\s*$"
)


def parse_complex(text: str) -> complex:
    """Parse the literal grammar a+bi / a-bi / a / bi (j accepted for i)."""
    m = _RE_REAL.match(text)
    if m:
        value = complex(float(m.group("re")), 0.0)
    else:
        m = _RE_IMAG.match(text)
        if m:
            mag = float(m.group("mag")) if m.group("mag") else 1.0
            value = complex(0.0, -mag if m.group("sign") == "-" else mag)
        else:
            m = _RE_BOTH.match(text)
            if not m:
                raise CliParseError(f"cannot parse complex literal {text!r}")
            mag = float(m.group("mag")) if m.group("mag") else 1.0
            value = complex(
                float(m.group("re")), -mag if m.group("sign") == "-" else mag
            )
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise CliParseError(f"non-finite complex literal {text!r}")
    return value


def format_complex(z: complex) -> str:
    """Literal that reparses to the identical value."""
    re_s = repr(float(z.real))
    if z.imag == 0.0:
        return re_s
    im = float(z.imag)
    sign = "+" if im >= 0 else "-"
    return f"{re_s}{sign}{repr(abs(im))}i"


def _jsonable(value):
    if isinstance(value, complex):
        return {"re": float(value.real), "im": float(value.imag)}
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "item"):  # numpy scalar
        return _jsonable(value.item())
    return str(value)


def report_to_dict(report: VerificationReport) -> Dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "suite_id": report.suite_id,
        "known_discrepancy": report.known_discrepancy,
        "config": asdict(report.config),
        "records": [
            {
                "index": i,
                "params": _jsonable(r.params),
                "residuals": _jsonable(r.residuals),
                "predicates": _jsonable(r.predicates),
                "oracles": _jsonable(r.oracles),
                "verdict": r.verdict,
                "note": r.note,
            }
            for i, r in enumerate(report.records)
        ],
        "summary": report.summary,
    }


def report_to_json(report: VerificationReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, separators=(",", ":")) + "\n"


def validate_report_dict(doc: Dict) -> List[str]:
    """Structural validation against the embedded schema; returns problems."""
    problems = []
    for key in REPORT_SCHEMA["properties"]["config"]["required"]:
        if key not in doc.get("config", {}):
            problems.append(f"config missing {key}")
    for key in REPORT_SCHEMA["required"]:
        if key not in doc:
            problems.append(f"missing top-level {key}")
    for rec in doc.get("records", []):
        for key in REPORT_SCHEMA["properties"]["records"]["items"]["required"]:
            if key not in rec:
                problems.append(f"record {rec.get('index')} missing {key}")
        if rec.get("verdict") not in ("pass", "fail", "inconclusive", "discrepancy"):
            problems.append(f"record {rec.get('index')} bad verdict {rec.get('verdict')!r}")
    summary = doc.get("summary", {})
    if summary:
        counted = sum(summary.get(k, 0) for k in ("pass", "fail", "inconclusive", "discrepancy"))
        if counted != summary.get("total"):
            problems.append("summary counts do not sum to total")
    return problems


SWEEP_CSV_COLUMNS = [
    "family",
    "r",
    "t_re",
    "t_im",
    "deficiency",
    "verdict",
    "w1_name",
    "w1_re",
    "w1_im",
    "w2_name",
    "w2_re",
    "w2_im",
    "w3_name",
    "w3_re",
    "w3_im",
]


def sweep_to_csv(report: VerificationReport) -> str:
    """Fixed-column CSV; complex witness parameters split into re/im pairs."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_CSV_COLUMNS)
    for rec in report.records:
        t = complex(rec.params.get("t", 0.0))
        r = complex(rec.params.get("r", 0.0)).real
        row = [
            report.suite_id.replace("sweep-", ""),
            repr(float(r)),
            repr(t.real),
            repr(t.imag),
            repr(rec.residuals.get("deficiency", rec.residuals.get("normality", float("nan")))),
            rec.verdict,
        ]
        witnesses = [(k, v) for k, v in rec.params.items() if k not in ("r", "t")][:3]
        for name, value in witnesses:
            z = complex(value)
            row += [name, repr(z.real), repr(z.imag)]
        row += [""] * (len(SWEEP_CSV_COLUMNS) - len(row))
        writer.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _write_output(text: str, path: Optional[str]):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    coeffs = [parse_complex(p) for p in args.phi.split(",")]
    if len(coeffs) != 4:
        raise CliParseError("--phi needs four comma-separated coefficients a,b,c,d")
    m = MobiusMap(*coeffs)
    cls = classify(m)
    triple = cowen_adjoint(m)
    doc = {
        "class": cls.map_class.value,
        "dw_point": _jsonable(cls.dw_point),
        "dw_derivative": _jsonable(cls.dw_derivative),
        "is_automorphism": cls.is_automorphism,
        "sigma": {
            "a": _jsonable(triple.sigma.a),
            "b": _jsonable(triple.sigma.b),
            "c": _jsonable(triple.sigma.c),
            "d": _jsonable(triple.sigma.d),
        },
    }
    if args.format == "json":
        _write_output(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n", args.out)
    else:
        lines = [
            f"class            {cls.map_class.value}",
            f"dw point         {format_complex(cls.dw_point) if cls.dw_point is not None else '-'}",
            f"dw derivative    {format_complex(cls.dw_derivative) if cls.dw_derivative is not None else '-'}",
            f"automorphism     {'yes' if cls.is_automorphism else 'no'}",
            "sigma            ({}) z + ({}) over ({}) z + ({})".format(
                format_complex(triple.sigma.a),
                format_complex(triple.sigma.b),
                format_complex(triple.sigma.c),
                format_complex(triple.sigma.d),
            ),
        ]
        _write_output("\n".join(lines) + "\n", args.out)
    return 0


def _check_family(args):
    dim = args.dim or int(os.environ.get("WCO_DEFAULT_DIM", "64"))
    block = args.block
    if args.tol is not None:
        args.pass_tol = args.tol
    fam_key = args.family.lower()
    out: Dict[str, object] = {"family": fam_key}
    if fam_key == "j":
        params = JParams(parse_complex(args.a0), parse_complex(args.a1), parse_complex(args.b))
        pair = j_symbols(params)
        conj = Conjugation("J")
        pred: Dict[str, object] = {"normal": j_normal_predicate(params.a0, params.a1)}
        out["params"] = {"a0": _jsonable(params.a0), "a1": _jsonable(params.a1), "b": _jsonable(params.b)}
    elif fam_key == "c1":
        params = C1Params(parse_complex(args.alpha), parse_complex(args.c0), parse_complex(args.c1), parse_complex(args.d))
        pair = c1_symbols(params)
        conj = Conjugation("C1", 1.0, params.alpha)
        pred = {"normal": c1_normal_predicate(params.alpha, params.c0, params.c1)}
        out["params"] = {
            "alpha": _jsonable(params.alpha),
            "c0": _jsonable(params.c0),
            "c1": _jsonable(params.c1),
            "d": _jsonable(params.d),
        }
    elif fam_key == "c2":
        params = C2Params(
            parse_complex(args.alpha),
            parse_complex(args.c0),
            parse_complex(args.c1),
            parse_complex(args.c2),
            parse_complex(args.d),
        )
        pair = c2_symbols(params, check_self_map=False)
        conj = Conjugation("C2", 1.0, params.alpha)
        case = c2_normal_predicate(params)
        pred = {"case": case.value, "normal": case != C2NormalCase.NOT_NORMAL}
        out["params"] = {
            "alpha": _jsonable(params.alpha),
            "c0": _jsonable(params.c0),
            "c1": _jsonable(params.c1),
            "c2": _jsonable(params.c2),
            "d": _jsonable(params.d),
        }
    else:
        raise CliParseError(f"unknown family {args.family!r}")
    if args.conjugation:
        kind = args.conjugation.upper()
        conj = Conjugation(kind, 1.0, parse_complex(args.alpha) if kind != "J" else 0.0)
    residuals: Dict[str, object] = {}
    u = conjugation_matrix(conj, dim)
    inv, iso = involution_residual(u, block)
    residuals["involution"] = inv
    residuals["isometry"] = iso
    buildable = True
    try:
        t = build_wco(pair.psi, pair.phi, dim)
    except WcoError as exc:
        buildable = False
        out["note"] = f"operator truncation unavailable: {exc}"
    if buildable:
        residuals["symmetry"] = symmetry_residual(t, u, block)
        residuals["normality"] = normality_residual(t, block)
        oracle_normal = residuals["normality"] <= args.pass_tol
        inconclusive = args.pass_tol < residuals["normality"] < args.fail_tol
    else:
        # coefficient-level oracle for symbols without a usable truncation
        phi = pair.phi
        if isinstance(phi, ConstantMap):
            oracle_normal = None
            inconclusive = True
        else:
            gap, defect = lft_normality_defects((phi.a, phi.b, phi.c, phi.d))
            residuals["lft_modulus_gap"] = gap
            residuals["lft_commute_defect"] = defect
            oracle_normal = gap <= 1e-9 and defect <= 1e-9
            inconclusive = False
    out["residuals"] = _jsonable(residuals)
    out["predicates"] = _jsonable(pred)
    claims = bool(pred.get("normal"))
    if inconclusive or oracle_normal is None:
        out["verdict"] = "inconclusive"
    elif claims == oracle_normal:
        out["verdict"] = "pass"
    else:
        out["verdict"] = "discrepancy"
    return out


def cmd_check(args) -> int:
    out = _check_family(args)
    _write_output(json.dumps(out, sort_keys=True, separators=(",", ":")) + "\n", args.out)
    return 0


def _human_summary(report: VerificationReport) -> str:
    s = report.summary
    lines = [
        f"suite {report.suite_id}: total={s['total']} pass={s['pass']} "
        f"fail={s['fail']} inconclusive={s['inconclusive']} discrepancy={s['discrepancy']}"
    ]
    for i, rec in enumerate(report.records):
        if rec.verdict in ("fail", "discrepancy"):
            lines.append(f"  [{i}] {rec.verdict}: params={_jsonable(rec.params)} note={rec.note}")
    return "\n".join(lines) + "\n"


def cmd_suite(args) -> int:
    cfg = default_config(args.id)
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.samples is not None:
        overrides["samples"] = args.samples
    if args.dim is not None:
        overrides["dim"] = args.dim
    if args.block is not None:
        overrides["block"] = args.block
    if overrides:
        cfg = SuiteConfig(**{**asdict(cfg), **overrides})
    report = run_suite(args.id, cfg)
    if args.json:
        _write_output(report_to_json(report), args.json)
    sys.stdout.write(_human_summary(report))
    return report.exit_status


def cmd_sweep(args) -> int:
    cfg = default_config(f"{args.family}-sweep")
    if args.seed is not None:
        cfg = SuiteConfig(**{**asdict(cfg), "seed": args.seed})
    report = nonexistence_sweep(args.family, cfg)
    if args.csv:
        _write_output(sweep_to_csv(report), args.csv)
    if args.json:
        _write_output(report_to_json(report), args.json)
    sys.stdout.write(_human_summary(report))
    return report.exit_status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wcosym",
        description="Weighted composition operators on the disk: classification, "
        "symmetry and normality checks, verification suites.",
    )
    parser.add_argument("--print-schema", action="store_true", help="print the report schema and exit")
    sub = parser.add_subparsers(dest="command")

    p_cls = sub.add_parser("classify", help="classify a linear-fractional self-map")
    p_cls.add_argument("--phi", required=True, help="coefficients a,b,c,d of (az+b)/(cz+d)")
    p_cls.add_argument("--format", choices=("human", "json"), default="human")
    p_cls.add_argument("--out")
    p_cls.set_defaults(func=cmd_classify)

    p_chk = sub.add_parser("check", help="symmetry/normality check of one family member")
    p_chk.add_argument("--family", required=True, choices=("j", "c1", "c2"))
    p_chk.add_argument("--a0", default="0")
    p_chk.add_argument("--a1", default="0")
    p_chk.add_argument("--b", default="1")
    p_chk.add_argument("--alpha", default="1")
    p_chk.add_argument("--c0", default="0")
    p_chk.add_argument("--c1", default="0")
    p_chk.add_argument("--c2", default="0")
    p_chk.add_argument("--d", default="1")
    p_chk.add_argument("--conjugation", choices=("j", "c1", "c2"), help="override the tested conjugation kind")
    p_chk.add_argument("--dim", type=int)
    p_chk.add_argument("--block", type=int, default=12)
    p_chk.add_argument("--tol", type=float, help="overrides the pass threshold")
    p_chk.add_argument("--pass-tol", dest="pass_tol", type=float, default=1e-7)
    p_chk.add_argument("--fail-tol", dest="fail_tol", type=float, default=1e-3)
    p_chk.add_argument("--out")
    p_chk.set_defaults(func=cmd_check)

    p_suite = sub.add_parser("suite", help="run a registered verification suite")
    p_suite.add_argument("--id", required=True)
    p_suite.add_argument("--seed", type=int)
    p_suite.add_argument("--samples", type=int)
    p_suite.add_argument("--dim", type=int)
    p_suite.add_argument("--block", type=int)
    p_suite.add_argument("--json", help="write the JSON report here")
    p_suite.set_defaults(func=cmd_suite)

    p_sweep = sub.add_parser("sweep", help="nonexistence sweep over hyperbolic targets")
    p_sweep.add_argument(
        "--family",
        required=True,
        choices=("j-hyperbolic", "c1-hyperbolic", "c2-hyperbolic", "hyperbolic-nonaut"),
    )
    p_sweep.add_argument("--seed", type=int)
    p_sweep.add_argument("--csv", help="write the CSV table here")
    p_sweep.add_argument("--json", help="write the JSON report here")
    p_sweep.set_defaults(func=cmd_sweep)

    p_ls = sub.add_parser("suites", help="list registered suite ids")
    p_ls.set_defaults(func=lambda args: (sys.stdout.write("\n".join(sorted(SUITES)) + "\n"), 0)[1])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.print_schema:
        sys.stdout.write(json.dumps(REPORT_SCHEMA, sort_keys=True, indent=2) + "\n")
        return 0
    if not getattr(args, "command", None):
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except (CliParseError, DomainViolationError, UnknownSuiteError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except WcoError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"io error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
