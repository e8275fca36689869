"""Command-line front end: ``chiygenus <command> ...``.

Exit codes: 0 success, 1 other library error, 2 parse/schema error,
3 model-constraint error, 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import derived, hirzebruch, reconstruction, varieties
from .errors import ChiYError, ModelConstraintError, ParseError, SchemaError, UnsupportedModelError
from .exact_poly import Polynomial, evaluate, format_rational, to_rational
from .verify import FAIL, WARN, run_checks

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_MODEL, EXIT_VERIFY = 0, 1, 2, 3, 4

SPECIALIZATIONS = {"chern": -1, "todd": 0, "l": 1}
_SAMPLE_TOKEN = re.compile(r"^-?\d+(/\d+)?=")


# -- helpers -------------------------------------------------------------------


def load_descriptor(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return varieties.parse_descriptor(text)


def parse_bundle(spec: str) -> hirzebruch.Bundle:
    """``"rank=2,c1=3,c2=1"`` -> Bundle; Chern classes are multiples of ``h^i``."""
    fields = {}
    for item in spec.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"bad bundle field {item!r}; expected key=value")
        fields[key.strip()] = value.strip()
    if "rank" not in fields:
        raise ParseError("bundle spec needs rank=")
    try:
        rank = int(fields.pop("rank"))
        chern = {}
        for key, value in fields.items():
            if not re.fullmatch(r"c\d+", key):
                raise ParseError(f"unknown bundle field {key!r}")
            chern[int(key[1:])] = to_rational(value)
    except ValueError as exc:
        raise ParseError(f"bad bundle spec: {exc}") from None
    top = max(chern, default=0)
    return hirzebruch.Bundle(rank, tuple(chern.get(i, Fraction(0)) for i in range(1, top + 1)))


def parse_samples(items) -> list:
    pairs = []
    for item in items:
        node, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"bad sample {item!r}; expected node=value")
        try:
            pairs.append((to_rational(node), to_rational(value)))
        except ValueError as exc:
            raise ParseError(f"bad sample {item!r}: {exc}") from None
    return pairs


def _value_json(poly: Polynomial):
    """Single string for y-free coefficients, list otherwise."""
    return format_rational(poly.coeff(0)) if poly.degree <= 0 else poly.to_strings()


def _h_label(exponents) -> str:
    exps = [e for e in exponents]
    if len(exps) == 1:
        return "[]" if exps[0] == 0 else f"[{exps[0]}]"
    return "[" + ",".join(map(str, exps)) + "]"


def _class_terms(d, transform) -> dict:
    """Class of ``d`` in powers of the hyperplane class(es), after ``transform``."""
    if isinstance(d, (varieties.ProjectiveSpace, varieties.CompleteIntersection)):
        model = varieties.chern_model(d)
        cls = transform(hirzebruch.t_y_class(model.tangent, model.dim))
        return {_h_label([k]): _value_json(c) for k, c in enumerate(cls.h_coefficients()) if not c.is_zero()}
    vec = transform(varieties.homology_class(d))
    keys = sorted(vec.terms, key=lambda k: (sum(vec.dims) - sum(k), [n - x for n, x in zip(vec.dims, k)]))
    return {_h_label([n - x for n, x in zip(vec.dims, k)]): _value_json(vec.coeff(k)) for k in keys}


def _route(d) -> str:
    if isinstance(d, (varieties.ProjectiveSpace, varieties.CompleteIntersection)):
        return "ghrr"
    return {
        varieties.HodgeDiamond: "hodge",
        varieties.Invariants: "invariants",
        varieties.ToricOrbits: "toric",
        varieties.Product: "product",
        varieties.RawChiY: "raw",
    }[type(d)]


def emit(doc, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
        return
    rows = doc if isinstance(doc, list) else [doc]
    for row in rows:
        items = [(k, v) for k, v in row.items() if k != "descriptor"]
        width = max((len(k) for k, _ in items), default=0)
        for key, value in items:
            if isinstance(value, list):
                value = " ".join(map(str, value))
            elif isinstance(value, dict):
                value = ", ".join(f"{k}: {' '.join(v) if isinstance(v, list) else v}" for k, v in value.items())
            out.write(f"{key.ljust(width)}  {value}\n")
        if len(rows) > 1:
            out.write("\n")


# -- commands ------------------------------------------------------------------


def cmd_chi_y(args) -> list:
    docs = []
    bundle = parse_bundle(args.bundle) if args.bundle else None
    for path in args.descriptors:
        d = load_descriptor(path)
        poly = varieties.chi_y(d, bundle)
        doc = {"descriptor": varieties.descriptor_to_json(d), "route": _route(d) if bundle is None else "ghrr_bundle"}
        doc["chi_y"] = poly.to_strings() or ["0"]
        if args.at is not None:
            doc["at"] = format_rational(to_rational(args.at))
            doc["value"] = format_rational(evaluate(poly, args.at))
        docs.append(doc)
    return docs


def cmd_class(args) -> list:
    docs = []
    for path in args.descriptors:
        d = load_descriptor(path)
        steps = []
        if args.specialize is not None:
            y0 = SPECIALIZATIONS.get(args.specialize.lower())
            y0 = to_rational(args.specialize) if y0 is None else y0
            steps.append(lambda c, y0=y0: hirzebruch.specialize(c, y0))
        if args.component is not None:
            steps.append(lambda c: hirzebruch.t_p_component(c, args.component))
        if args.parity is not None:
            steps.append(lambda c: hirzebruch.even_odd_parts(c)[0 if args.parity == "even" else 1])

        def transform(c):
            for step in steps:
                c = step(c)
            return c

        doc = {"descriptor": varieties.descriptor_to_json(d), "basis": "hyperplane powers"}
        doc["class"] = _class_terms(d, transform)
        docs.append(doc)
    return docs


def cmd_reconstruct(args) -> list:
    if args.variety:
        d = load_descriptor(args.variety)
        direct = varieties.chi_y(d)
        n = d.dim
        nodes = reconstruction.reciprocal_nodes(n)[: n + 1 - max(n // 2 - 1, 0)] if args.reciprocal else list(
            reconstruction.default_nodes(n)
        )
        samples = [(a, evaluate(direct, a)) for a in nodes]
        if args.reciprocal:
            poly = reconstruction.reciprocal_node_plan(n, samples)
        else:
            poly = reconstruction.reconstruct_genus(n, samples)
        return [
            {
                "descriptor": varieties.descriptor_to_json(d),
                "samples": {format_rational(a): format_rational(v) for a, v in samples},
                "chi_y": poly.to_strings() or ["0"],
                "direct": direct.to_strings() or ["0"],
                "round_trip": "exact" if poly == direct else "mismatch",
            }
        ]
    if args.dim is None or args.samples is None:
        raise ParseError("reconstruct needs --dim and --samples, or --variety")
    samples = parse_samples(args.samples)
    if args.reciprocal:
        poly = reconstruction.reciprocal_node_plan(args.dim, samples)
    else:
        poly = reconstruction.reconstruct_genus(args.dim, samples)
    return [{"nodes": [format_rational(a) for a, _ in samples], "chi_y": poly.to_strings() or ["0"]}]


def _diamond_for(d):
    if isinstance(d, varieties.HodgeDiamond):
        return d
    if isinstance(d, varieties.ProjectiveSpace):
        return varieties.HodgeDiamond.projective_space(d.dim)
    raise UnsupportedModelError(f"no Hodge diamond available for {type(d).__name__}")


def cmd_derived(args) -> list:
    docs = []
    for path in args.descriptors:
        d = load_descriptor(path)
        f = varieties.chi_y(d)
        doc = {"descriptor": varieties.descriptor_to_json(d), "chi_y": f.to_strings() or ["0"]}
        if args.p is not None:
            doc["derived"] = derived.derived_genus(args.p, f).to_strings() or ["0"]
        if args.taylor_at is not None:
            expansion = derived.taylor_coefficients(f, args.taylor_at)
            doc["center"] = format_rational(expansion.center)
            doc["taylor"] = [format_rational(a) for a in expansion.coeffs]
        if args.higher_euler:
            doc["higher_euler"] = [format_rational(a) for a in derived.higher_euler(_diamond_for(d))]
        if args.lw is not None:
            model = varieties.chern_model(d)
            taylor = derived.taylor_coefficients(f, -1).coeffs
            reference = taylor[args.lw] if args.lw < len(taylor) else Fraction(0)
            printed = derived.libgober_wood(args.lw, d.dim, model.numbers, taylor[0] if taylor else 0)
            doc["lw"] = {
                "p": args.lw,
                "printed": format_rational(printed),
                "derivative_route": format_rational(reference),
                "agree": printed == reference,
            }
        docs.append(doc)
    return docs


def _catalog_overrides(path: str | None) -> dict | None:
    if path is None:
        return None
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed catalog JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("catalog overrides must map names to descriptors")
    entries = varieties.catalog()
    entries.update({name: varieties.parse_descriptor(desc) for name, desc in doc.items()})
    return entries


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    results = run_checks(quick=args.quick, entries=_catalog_overrides(args.catalog))
    for r in results:
        out.write(r.line() + "\n")
    failed = [r for r in results if r.status == FAIL]
    warned = [r for r in results if r.status == WARN]
    out.write(f"{len(results) - len(failed) - len(warned)} passed, {len(warned)} warnings, {len(failed)} failed\n")
    if failed:
        out.write("violated: " + ", ".join(r.name for r in failed) + "\n")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_catalog(args) -> dict:
    doc = {}
    for name, d in varieties.catalog().items():
        if args.dim is not None and d.dim != args.dim:
            continue
        doc[name] = varieties.chi_y(d).to_strings() or ["0"]
    return doc


# -- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chiygenus", description="Exact Hirzebruch chi_y genera and classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        return p

    p = with_format(sub.add_parser("chi-y", help="chi_y genus of descriptor file(s)"))
    p.add_argument("descriptors", nargs="+")
    p.add_argument("--at", help="evaluate at this rational y")
    p.add_argument("--bundle", help="twist by a bundle, e.g. rank=1,c1=3 (Chern classes in units of h^i)")

    p = with_format(sub.add_parser("class", help="Hirzebruch class T_y in hyperplane powers"))
    p.add_argument("descriptors", nargs="+")
    p.add_argument("--specialize", help="y value, or one of chern, todd, l")
    p.add_argument("--component", type=int, help="coefficient T^p of y^p")
    p.add_argument("--parity", choices=("even", "odd"), help="even part (L+c)/2 or odd part (L-c)/2")

    p = with_format(sub.add_parser("reconstruct", help="recover chi_y from sampled values"))
    p.add_argument("--dim", type=int)
    p.add_argument("--samples", type=lambda s: [x for x in s.split(",") if x], help="node=value pairs")
    p.add_argument("--variety", help="descriptor file: sample, solve, compare")
    p.add_argument("--reciprocal", action="store_true", help="use the reciprocal-node plan (even dim)")

    p = with_format(sub.add_parser("derived", help="derived genera, Taylor coefficients, closed forms"))
    p.add_argument("descriptors", nargs="+")
    p.add_argument("--p", type=int, help="p-th derived genus")
    p.add_argument("--taylor-at", dest="taylor_at", help="Taylor coefficients at this rational")
    p.add_argument("--higher-euler", dest="higher_euler", action="store_true")
    p.add_argument("--lw", type=int, choices=(1, 2, 3, 4), help="Libgober-Wood closed form a_p vs derivative route")

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--catalog", help="JSON file of catalog entries overriding the built-ins")

    p = with_format(sub.add_parser("catalog", help="list built-in varieties"))
    p.add_argument("--dim", type=int)
    return parser


def _fold_samples(argv: list) -> list:
    """Join ``--samples 0=1 1=1 -1=3`` into one token; argparse would read ``-1=3`` as an option."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--samples":
            j = i + 1
            while j < len(argv) and _SAMPLE_TOKEN.match(argv[j]):
                j += 1
            out.append("--samples=" + ",".join(argv[i + 1 : j]))
            i = j
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    argv = _fold_samples(list(sys.argv[1:] if argv is None else argv))
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        handler = {"chi-y": cmd_chi_y, "class": cmd_class, "reconstruct": cmd_reconstruct, "derived": cmd_derived}.get(
            args.command
        )
        if handler is not None:
            docs = handler(args)
            emit(docs[0] if len(docs) == 1 else docs, args.format)
        else:
            doc = cmd_catalog(args)
            if args.format == "text":
                width = max((len(k) for k in doc), default=0)
                for name, coeffs in doc.items():
                    sys.stdout.write(f"{name.ljust(width)}  {Polynomial.from_strings(coeffs)}\n")
            else:
                emit(doc, "json")
    except (ParseError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ModelConstraintError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except ChiYError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
