"""Batch front door: load bundles, run law profiles, constructors, searches.

Exit codes: 0 success (all laws pass / hits found), 1 law failure or empty
search without --allow-empty, 2 parse/validation errors.
"""

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .errors import ForgeError
from .fixtures import CATALOG, fixture
from .laws import check_composite, normalize_law
from .scalars import Scalar
from .search import GridSpec, grid_search
from .structfile import (
    bundle_to_doc,
    doc_to_bundle,
    dumps_document,
    load_document,
    save_document,
)
from . import constructors as cons
from .errors import ValidationError

# law profile aliases; raw law ids (any case, - or _) are accepted too
PROFILES = {
    "pre-lie": ("PRE_LIE",),
    "pre-lie-co": ("PRE_LIE_CO",),
    "pre-lie-bialg": ("PRE_LIE", "PRE_LIE_CO", "PRE_LIE_BIALG"),
    "quasitriangular": ("PRE_LIE", "SYMMETRIC_TENSOR", "S_EQUATION"),
    "dual-quasitriangular": ("PRE_LIE_CO", "SYMMETRIC_FORM", "CO_S_EQUATION"),
    "pseudo-hessian": ("PRE_LIE", "SYMMETRIC_FORM", "PSEUDO_HESSIAN"),
    "nijenhuis": ("NIJENHUIS",),
    "co-nijenhuis": ("CO_NIJENHUIS",),
    "nij-prelie-bialg": ("NIJ_PRE_LIE_BIALG",),
    "lie-bialg": ("LIE_BIALG",),
    "nij-lie-bialg": ("NIJ_LIE_BIALG",),
    "balanced": ("BALANCED",),
}


def resolve_profile(text):
    laws = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if part.lower() in PROFILES:
            laws.extend(PROFILES[part.lower()])
        else:
            laws.append(normalize_law(part))
    if not laws:
        raise ValidationError("empty law profile")
    return laws


def _parse_bindings(pairs):
    bindings = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise ValidationError(f"--bind expects name=value, got {pair!r}")
        name, _, value = pair.partition("=")
        try:
            bindings[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"--bind {pair!r}: {exc}") from exc
    return bindings


def _parse_args_kv(pairs):
    out = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise ValidationError(f"--args expects key=value, got {pair!r}")
        key, _, value = pair.partition("=")
        out[key.strip()] = value.strip()
    return out


def _parse_pi(text, ring):
    if text is None:
        return None
    family, _, theta = text.partition(":")
    if not theta:
        raise ValidationError("--pi expects family:theta, e.g. scale:1")
    return {"family": family.strip(), "theta": ring.parse(theta.strip())}


def _idx1(indices):
    out = []
    for part in indices:
        out.append(part + 1 if isinstance(part, int) else part)
    return out


def _render_value(value):
    if isinstance(value, Scalar):
        return value.render()
    return str(Fraction(value))


def build_report(source, profile, results, bundle):
    laws = {}
    for law, residual in results.items():
        failures = [
            {
                "input": _idx1(in_idx),
                "component": _idx1(out_idx),
                "value": _render_value(value),
            }
            for in_idx, out_idx, value in residual.entries
        ]
        laws[law] = {"pass": residual.passed, "failures": failures}
    return {
        "tool": "prelie-forge",
        "version": __version__,
        "file": source,
        "profile": list(profile),
        "assumptions": [_render_value(v) for v in bundle.assumptions],
        "pass": all(entry["pass"] for entry in laws.values()),
        "laws": laws,
    }


def render_report_text(report, limit=12):
    lines = [
        f"# prelie-forge {report['version']} check",
        f"file: {report['file']}",
        f"profile: {', '.join(report['profile'])}",
    ]
    if report["assumptions"]:
        lines.append(
            "assumed non-zero: " + ", ".join(report["assumptions"])
        )
    for law, entry in report["laws"].items():
        if entry["pass"]:
            lines.append(f"PASS {law}")
        else:
            lines.append(f"FAIL {law} ({len(entry['failures'])} non-zero components)")
            for failure in entry["failures"][:limit]:
                lines.append(
                    f"  at {failure['input']} component {failure['component']}: "
                    f"{failure['value']}"
                )
            if len(entry["failures"]) > limit:
                lines.append(f"  ... {len(entry['failures']) - limit} more")
    lines.append("RESULT " + ("PASS" if report["pass"] else "FAIL"))
    return "\n".join(lines) + "\n"


def cmd_check(args):
    doc = load_document(args.file)
    bundle = doc_to_bundle(doc)
    bundle = bundle.bind(_parse_bindings(args.bind))
    profile = resolve_profile(args.laws)
    pi = _parse_pi(args.pi, bundle.ring)
    results = check_composite(bundle, profile, pi=pi)
    report = build_report(args.file, profile, results, bundle)
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(render_report_text(report))
    return 0 if report["pass"] else 1


def _construct(doc, bundle, op, kv):
    """Apply a constructor; return the output document."""
    def tensor(name):
        return bundle.need(f"tensor:{name}")

    def form(name):
        return bundle.need(f"form:{name}")

    if op == "delta-from-r":
        coalg = cons.delta_from_r(bundle.need("alg"), tensor(kv.get("r", "r")))
        out = dict(doc)
        out["comul"] = bundle_to_doc(bundle.replace(coalg=coalg))["comul"]
        return out
    if op == "circ-from-omega":
        alg = cons.circ_from_omega(bundle.need("coalg"), form(kv.get("omega", "omega")))
        out = dict(doc)
        out["mul"] = bundle_to_doc(bundle.replace(alg=alg))["mul"]
        return out
    if op == "nijenhuis-from-pairing":
        n_op = cons.nijenhuis_from_pairing(
            bundle.need("alg"), form(kv.get("omega", "omega")), tensor(kv.get("r", "r"))
        )
        out = dict(doc)
        ops = dict(out.get("operators", {}))
        ops[kv.get("name", "N")] = [
            [_render_value(v) for v in row] for row in n_op.mat
        ]
        out["operators"] = ops
        return out
    if op == "conijenhuis-from-pairing":
        s_op = cons.conijenhuis_from_pairing(
            bundle.need("coalg"), tensor(kv.get("r", "r")), form(kv.get("omega", "omega"))
        )
        out = dict(doc)
        ops = dict(out.get("operators", {}))
        ops[kv.get("name", "S")] = [
            [_render_value(v) for v in row] for row in s_op.mat
        ]
        out["operators"] = ops
        return out
    if op == "omega-from-r":
        w = cons.omega_from_r(tensor(kv.get("r", "r")))
        out = dict(doc)
        forms = dict(out.get("forms", {}))
        forms[kv.get("name", "omega")] = [
            [_render_value(v) for v in row] for row in w.mat
        ]
        out["forms"] = forms
        return out
    if op == "induce-lie":
        induced = cons.induced_lie_bialgebra(bundle)
        return bundle_to_doc(induced)
    if op == "pencil":
        ring = bundle.ring
        s = ring.parse(kv.get("s", "1"))
        t = ring.parse(kv.get("t", "1"))
        pencil = cons.coalgebra_pencil(
            bundle.need("coalg"), bundle.need("coalg2"), s, t
        )
        return bundle_to_doc(bundle.replace(coalg=pencil, coalg2=None))
    if op == "central-extension":
        ext = cons.central_extension(bundle.need("alg"), form(kv.get("omega", "omega")))
        from .structures import Bundle
        return bundle_to_doc(Bundle(ring=bundle.ring, alg=ext))
    if op == "semidirect":
        product = cons.semidirect_product(
            bundle.need("alg"),
            bundle.need("op:N"),
            bundle.need("rep:rep"),
            bundle.need("op:alpha"),
            ring=bundle.ring,
        )
        return bundle_to_doc(product)
    if op == "matched-pair":
        product = cons.matched_pair_from_bialgebra(bundle)
        return bundle_to_doc(product)
    if op == "lift-o-operator":
        alg = bundle.need("alg")
        n_op = bundle.need("op:N")
        rep = bundle.need("rep:rep")
        alpha = bundle.need("op:alpha")
        t_op = bundle.need("op:T")
        if "pi" in kv:
            family, _, theta = kv["pi"].partition(":")
            pi = {"family": family, "theta": bundle.ring.parse(theta)}
            product, _ = cons.lift_o_operator_with_pi(
                alg, n_op, rep, alpha, t_op, pi, ring=bundle.ring
            )
        else:
            product, _ = cons.lift_o_operator_to_r(
                alg, n_op, rep, alpha, bundle.need("op:beta"), t_op,
                bundle.need("op:S"), ring=bundle.ring,
            )
        return bundle_to_doc(product)
    raise ValidationError(f"unknown constructor {op!r}")


def cmd_construct(args):
    doc = load_document(args.file)
    bundle = doc_to_bundle(doc).bind(_parse_bindings(args.bind))
    out_doc = _construct(doc, bundle, args.op, _parse_args_kv(args.args))
    # output must round-trip
    doc_to_bundle(out_doc)
    if args.out:
        save_document(out_doc, args.out)
    else:
        sys.stdout.write(dumps_document(out_doc))
    return 0


def cmd_search(args):
    doc = load_document(args.file)
    bundle = doc_to_bundle(doc).bind(_parse_bindings(args.bind))
    entries = [Fraction(part) for part in args.entries.split(",") if part]
    spec = GridSpec(args.unknown, entries=entries, member=args.member)
    laws = resolve_profile(args.laws)
    pi = _parse_pi(args.pi, bundle.ring)
    report = grid_search(
        bundle, spec, laws, max_grid=args.max_grid, workers=args.workers, pi=pi
    )
    payload = {
        "tool": "prelie-forge",
        "version": __version__,
        "file": args.file,
        "laws": list(report.laws),
        "unknown": {
            "shape": spec.shape,
            "member": spec.member,
            "symmetric": spec.symmetric,
            "entries": [str(e) for e in spec.entries],
        },
        "total": report.total,
        "hit_count": len(report.hits),
        "hits": [
            [[str(v) for v in row] for row in _member_matrix(hit, spec)]
            for hit in report.hits
        ],
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        lines = [
            f"# prelie-forge {__version__} search",
            f"file: {args.file}",
            f"laws: {', '.join(report.laws)}",
            f"candidates: {report.total}, hits: {len(report.hits)}",
        ]
        for pos, hit in enumerate(payload["hits"], 1):
            lines.append(f"hit {pos}: {hit}")
        sys.stdout.write("\n".join(lines) + "\n")
    if report.hits or args.allow_empty:
        return 0
    return 1


def _member_matrix(bundle, spec):
    if spec.shape == "operator":
        return bundle.operators[spec.member].mat
    if spec.shape == "form":
        return bundle.forms[spec.member].mat
    return bundle.tensors[spec.member].mat


def _fixture_filename(name):
    snake = re.sub(r"(?<!^)(?=[A-Z])", "_", name)
    parts = [
        part if set(part) <= set("IVX") else part.lower()
        for part in snake.split("_")
    ]
    return "_".join(parts) + ".json"


def cmd_fixtures(args):
    if args.list:
        for name in sorted(CATALOG):
            spec = CATALOG[name]
            sys.stdout.write(
                f"{name:14s} profile={','.join(spec.profile)}  "
                f"params={','.join(spec.params)}  {spec.description}\n"
            )
        return 0
    if args.emit:
        name, directory = args.emit
        bundle = fixture(name, _parse_bindings(args.bind))
        doc = bundle_to_doc(bundle, basis=("e", "f") if bundle.dim == 2 else None)
        os.makedirs(directory, exist_ok=True)
        path = os.path.join(directory, _fixture_filename(name))
        save_document(doc, path)
        sys.stdout.write(path + "\n")
        return 0
    raise ValidationError("fixtures requires --list or --emit NAME DIR")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="prelie-forge",
        description=(
            "exact-arithmetic workbench for pre-Lie bialgebras, Nijenhuis "
            "operators and quadratic structure equations"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run a law profile on a structure file")
    p.add_argument("file")
    p.add_argument("--laws", required=True, help="profile alias or comma-separated law ids")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--bind", action="append", metavar="NAME=VALUE")
    p.add_argument("--pi", help="Pi descriptor family:theta for PI_ADMISSIBLE")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="run a constructor and write the result")
    p.add_argument("file")
    p.add_argument("--op", required=True)
    p.add_argument("--args", action="append", metavar="KEY=VALUE")
    p.add_argument("--out")
    p.add_argument("--bind", action="append", metavar="NAME=VALUE")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive grid search for an unknown member")
    p.add_argument("file")
    p.add_argument(
        "--unknown", required=True,
        choices=("operator", "symmetric-tensor", "form"),
    )
    p.add_argument("--member", help="member name (default N / r / omega)")
    p.add_argument("--entries", default="-1,0,1", help="comma-separated rationals")
    p.add_argument("--laws", required=True)
    p.add_argument("--bind", action="append", metavar="NAME=VALUE")
    p.add_argument("--allow-empty", action="store_true")
    p.add_argument("--max-grid", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--pi", help="Pi descriptor family:theta for PI_ADMISSIBLE")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("fixtures", help="list or emit catalog fixtures")
    p.add_argument("--list", action="store_true")
    p.add_argument("--emit", nargs=2, metavar=("NAME", "DIR"))
    p.add_argument("--bind", action="append", metavar="NAME=VALUE")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ForgeError as exc:
        sys.stderr.write(f"error[{exc.code}]: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
