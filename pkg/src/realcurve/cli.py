"""Command-line front end: JSON manifests in, structured reports out.

Subcommands
  analyze MANIFEST            classification report for the curve
  function MANIFEST [INDEX]   membership report for one declared function
                              (or all of them when INDEX is omitted)
  plot MANIFEST OUTPUT        SVG of the real locus

A manifest is a JSON object:

  {
    "f": "y^2 - x^2*(x + 1)",
    "components": ["...", "..."],            optional exact factorization
    "assume_irreducible": true,              optional
    "functions": [
      {"numerator": "y", "denominator": "x",
       "expected": {"integral_over_pol": "yes"}}   expected is optional
    ],
    "options": {
      "degree_bound": 8,
      "truncation": 64,
      "plot": {"xmin": -2, "xmax": 2, "ymin": -2, "ymax": 2,
               "resolution": 400}
    },
    "notes": "free-form documentation, ignored"
  }

Reports are printed to standard output with a fixed key order and
canonical rational formatting, so identical manifests give identical
bytes.  Exit codes: 0 all verdicts determined, 2 manifest or input
error, 3 at least one verdict is unknown (the report is still printed).

Flags that sharpen a run: --degree-bound caps the regularity witness
search, --truncation bounds series precision (the REALCURVE_NMAX
environment variable, when set, wins over both flag and manifest), and
--json-indent controls pretty printing (0 emits single-line JSON).
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .classify import classify_curve
from .curve import Curve
from .errors import ManifestError, ParseError, RatFuncError, RealCurveError
from .exprparse import parse_poly
from .polycore import fmt_q
from .ratfunc import RatFuncOnCurve, function_report
from .svgplot import render_svg

_MANIFEST_KEYS = {"f", "components", "assume_irreducible", "functions", "options", "notes"}
_FUNCTION_KEYS = {"numerator", "denominator", "expected"}
_OPTION_KEYS = {"degree_bound", "truncation", "plot"}
_PLOT_KEYS = {"xmin", "xmax", "ymin", "ymax", "resolution"}
_VERDICT_KEYS = {
    "integral_over_pol",
    "regular_on_x",
    "in_o_xprime",
    "in_o_x_closure",
    "in_pol_xb",
    "extends_to_cent",
}


def _fail(msg: str) -> ManifestError:
    return ManifestError(msg)


def _parse_field(text, field: str):
    if not isinstance(text, str):
        raise _fail(f"manifest field {field!r} must be an expression string")
    try:
        return parse_poly(text)
    except ParseError as exc:
        line = text.count("\n", 0, exc.position) + 1
        col = exc.position - text.rfind("\n", 0, exc.position)
        raise _fail(f"in manifest field {field!r}: {exc} at line {line}, column {col}")


def _check_keys(obj, allowed, where: str):
    extra = sorted(set(obj) - allowed)
    if extra:
        raise _fail(f"unknown {where} key(s): {', '.join(extra)}")


def _as_fraction(value, field: str) -> Fraction:
    try:
        if isinstance(value, bool):
            raise ValueError
        if isinstance(value, (int, float)):
            return Fraction(str(value))
        if isinstance(value, str):
            return Fraction(value)
    except (ValueError, ZeroDivisionError):
        pass
    raise _fail(f"plot option {field!r} must be a number or a rational string")


def load_manifest(path: str) -> dict:
    """Parse and validate a manifest file into plain checked fields."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise _fail(f"cannot read manifest: {exc}")
    except json.JSONDecodeError as exc:
        raise _fail(f"manifest is not valid JSON: {exc}")
    if not isinstance(raw, dict):
        raise _fail("manifest must be a JSON object")
    _check_keys(raw, _MANIFEST_KEYS, "manifest")
    if "f" not in raw:
        raise _fail("manifest is missing the required field 'f'")
    f = _parse_field(raw["f"], "f")

    components = None
    if raw.get("components") is not None:
        if not isinstance(raw["components"], list) or not raw["components"]:
            raise _fail("manifest field 'components' must be a non-empty list")
        components = [
            _parse_field(c, f"components[{i}]") for i, c in enumerate(raw["components"])
        ]
        prod = components[0]
        for c in components[1:]:
            prod = prod * c
        _, fl = f.lead_term()
        _, pl = prod.lead_term()
        if f.scale(Fraction(1) / fl) != prod.scale(Fraction(1) / pl):
            raise _fail("components do not multiply to f (up to a constant)")

    assume = raw.get("assume_irreducible")
    if assume is not None and not isinstance(assume, bool):
        raise _fail("manifest field 'assume_irreducible' must be a boolean")

    functions = []
    if raw.get("functions") is not None:
        if not isinstance(raw["functions"], list):
            raise _fail("manifest field 'functions' must be a list")
        for i, entry in enumerate(raw["functions"]):
            if not isinstance(entry, dict):
                raise _fail(f"functions[{i}] must be an object")
            _check_keys(entry, _FUNCTION_KEYS, f"functions[{i}]")
            if "numerator" not in entry:
                raise _fail(f"functions[{i}] is missing 'numerator'")
            num = _parse_field(entry["numerator"], f"functions[{i}].numerator")
            den = None
            if entry.get("denominator") is not None:
                den = _parse_field(entry["denominator"], f"functions[{i}].denominator")
            expected = entry.get("expected")
            if expected is not None:
                if not isinstance(expected, dict):
                    raise _fail(f"functions[{i}].expected must be an object")
                _check_keys(expected, _VERDICT_KEYS, f"functions[{i}].expected")
                for k, v in expected.items():
                    if v not in ("yes", "no", "unknown"):
                        raise _fail(
                            f"functions[{i}].expected.{k} must be "
                            '"yes", "no" or "unknown"'
                        )
            functions.append({"numerator": num, "denominator": den, "expected": expected})

    options = {"degree_bound": None, "truncation": None, "plot": None}
    if raw.get("options") is not None:
        opts = raw["options"]
        if not isinstance(opts, dict):
            raise _fail("manifest field 'options' must be an object")
        _check_keys(opts, _OPTION_KEYS, "options")
        for k in ("degree_bound", "truncation"):
            if opts.get(k) is not None:
                v = opts[k]
                if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                    raise _fail(f"options.{k} must be a positive integer")
                options[k] = v
        if opts.get("plot") is not None:
            plot = opts["plot"]
            if not isinstance(plot, dict):
                raise _fail("options.plot must be an object")
            _check_keys(plot, _PLOT_KEYS, "options.plot")
            missing = sorted(_PLOT_KEYS - set(plot))
            if missing:
                raise _fail(f"options.plot is missing: {', '.join(missing)}")
            res = plot["resolution"]
            if not isinstance(res, int) or isinstance(res, bool) or not 2 <= res <= 2000:
                raise _fail("options.plot.resolution must be an integer in 2..2000")
            window = {k: _as_fraction(plot[k], k) for k in ("xmin", "xmax", "ymin", "ymax")}
            if window["xmin"] >= window["xmax"] or window["ymin"] >= window["ymax"]:
                raise _fail("options.plot window is empty")
            window["resolution"] = res
            options["plot"] = window

    return {
        "f": f,
        "components": components,
        "assume_irreducible": assume,
        "functions": functions,
        "options": options,
    }


def _build_curve(manifest) -> Curve:
    try:
        return Curve(
            manifest["f"],
            components=manifest["components"],
            assume_irreducible=manifest["assume_irreducible"],
        )
    except RealCurveError as exc:
        raise _fail(f"cannot build the curve: {exc}")


def _coord(c) -> str:
    if isinstance(c, Fraction):
        return fmt_q(c)
    return f"~{c.approx():.6g}"


def _point_json(pt):
    return [_coord(pt.x), _coord(pt.y)]


def _flag(value, applicable: bool = True):
    if not applicable:
        return "not-applicable"
    if value is None:
        return "unknown"
    return value


def analyze_curve(manifest) -> tuple:
    """Classification report payload and exit code for a loaded manifest."""
    curve = _build_curve(manifest)
    rep = classify_curve(curve)
    # with an empty real locus the realness-quantified flags say nothing
    applicable = rep.real_locus_dimension >= 0
    payload = {
        "curve": str(curve.f),
        "singular_points": [_point_json(p) for p in rep.singular_real_points],
        "isolated_real_points": [_point_json(p) for p in rep.isolated_real_points],
        "is_central": _flag(rep.is_central, applicable),
        "is_normal": rep.is_normal,
        "o_integrally_closed": _flag(rep.o_integrally_closed, applicable),
        "totally_real_normalization": _flag(rep.totally_real_normalization, applicable),
        "biregular": {
            "xb_equals_x": rep.biregular.xb_equals_x,
            "xb_equals_xprime": _flag(rep.biregular.xb_equals_xprime, applicable),
            "untouched_real_singular": [
                _point_json(p) for p in rep.biregular.untouched_real_singular
            ],
            "normalized_nonreal_pairs": rep.biregular.normalized_nonreal_pairs,
            "pair_minimal_polys": [str(p) for p in rep.biregular.pair_minimal_polys],
        },
        "warnings": list(rep.warnings),
    }
    unknown = "unknown" in (
        payload["is_central"],
        payload["o_integrally_closed"],
        payload["totally_real_normalization"],
    )
    return payload, (3 if unknown else 0)


def _function_payload(curve, entry, degree_bound):
    try:
        r = RatFuncOnCurve(curve, entry["numerator"], entry["denominator"])
    except RatFuncError as exc:
        raise _fail(f"invalid function on this curve: {exc}")
    rep = function_report(curve, r, degree_bound)
    payload = rep.as_dict()
    statuses = [
        payload[k]["status"]
        for k in (
            "integral_over_pol",
            "regular_on_x",
            "in_o_xprime",
            "in_o_x_closure",
            "in_pol_xb",
            "extends_to_cent",
        )
    ]
    if entry["expected"] is not None:
        mismatches = {
            k: {"expected": want, "got": payload[k]["status"]}
            for k, want in sorted(entry["expected"].items())
            if payload[k]["status"] != want
        }
        payload["expected"] = dict(sorted(entry["expected"].items()))
        payload["expected_ok"] = not mismatches
        if mismatches:
            payload["expected_mismatches"] = mismatches
    return payload, ("unknown" in statuses)


def analyze_function(manifest, index=None) -> tuple:
    """Membership report payload(s) and exit code.

    index picks one declared function; None reports all of them.
    """
    if not manifest["functions"]:
        raise _fail("manifest declares no functions")
    curve = _build_curve(manifest)
    degree_bound = manifest["options"]["degree_bound"]
    if index is not None:
        if not 0 <= index < len(manifest["functions"]):
            raise _fail(
                f"function index {index} out of range "
                f"(manifest has {len(manifest['functions'])})"
            )
        payload, unknown = _function_payload(
            curve, manifest["functions"][index], degree_bound
        )
        return payload, (3 if unknown else 0)
    payloads = []
    any_unknown = False
    for entry in manifest["functions"]:
        payload, unknown = _function_payload(curve, entry, degree_bound)
        payloads.append(payload)
        any_unknown = any_unknown or unknown
    return payloads, (3 if any_unknown else 0)


def emit_plot(manifest, out_path: str) -> None:
    """Write the SVG for the manifest's plot window to out_path."""
    window = manifest["options"]["plot"]
    if window is None:
        raise _fail("manifest has no options.plot block")
    curve = _build_curve(manifest)
    rep = classify_curve(curve)
    svg = render_svg(
        curve,
        window["xmin"],
        window["xmax"],
        window["ymin"],
        window["ymax"],
        window["resolution"],
        report=rep,
    )
    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        raise _fail(f"cannot write SVG output: {exc}")


def _apply_truncation(flag_value, manifest) -> None:
    # the environment variable, when present, outranks flag and manifest
    if os.environ.get("REALCURVE_NMAX"):
        return
    n = flag_value if flag_value is not None else manifest["options"]["truncation"]
    if n is not None:
        os.environ["REALCURVE_NMAX"] = str(n)


def _dump(payload, indent: int) -> str:
    return json.dumps(payload, indent=(indent if indent > 0 else None), ensure_ascii=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realcurve",
        description="exact classification and membership reports for real plane curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, bound=False):
        p.add_argument("manifest", help="path to a JSON curve manifest")
        p.add_argument(
            "--truncation",
            type=int,
            metavar="N",
            help="series precision ceiling (overridden by REALCURVE_NMAX)",
        )
        if bound:
            p.add_argument(
                "--degree-bound",
                type=int,
                metavar="D",
                help="regularity witness search bound (default: 2*deg f)",
            )
        p.add_argument(
            "--json-indent",
            type=int,
            default=2,
            metavar="K",
            help="JSON indentation; 0 for single-line output",
        )

    pa = sub.add_parser("analyze", help="classification report for the curve")
    common(pa)
    pf = sub.add_parser("function", help="membership report for declared functions")
    common(pf, bound=True)
    pf.add_argument(
        "index",
        nargs="?",
        type=int,
        default=None,
        help="function index in the manifest (default: all)",
    )
    pp = sub.add_parser("plot", help="SVG of the real locus")
    common(pp)
    pp.add_argument("output", help="SVG file to write")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        manifest = load_manifest(args.manifest)
        _apply_truncation(args.truncation, manifest)
        if args.command == "analyze":
            payload, code = analyze_curve(manifest)
            print(_dump(payload, args.json_indent))
            return code
        if args.command == "function":
            if args.degree_bound is not None:
                if args.degree_bound < 1:
                    raise _fail("--degree-bound must be a positive integer")
                manifest["options"]["degree_bound"] = args.degree_bound
            payload, code = analyze_function(manifest, args.index)
            print(_dump(payload, args.json_indent))
            return code
        emit_plot(manifest, args.output)
        return 0
    except ManifestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> int:
    return main()


if __name__ == "__main__":
    sys.exit(main())
