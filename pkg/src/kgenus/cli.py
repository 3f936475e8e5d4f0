"""Command-line front end.

Every subcommand parses flags, delegates to exactly one library
operation (or a documented composition), and serializes the result; no
arithmetic happens here.  JSON output is deterministic: keys sorted, no
timestamps, byte-identical for identical inputs.  Exit status is 0 on
success, 2 on usage errors, 1 on domain errors (with the library error
name in the payload).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from . import classify, genus, ktable, kummer, localdata, quadforms, tatecoh

FORMATS = ("json", "csv", "text")


def _parse_primes(text: str) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _jsonable(obj):
    if is_dataclass(obj) and not isinstance(obj, type):
        return _jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return {"numerator": obj.numerator, "denominator": obj.denominator}
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    return str(obj)


def _emit(payload, fmt: str, csv_rows=None) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(_jsonable(payload), sort_keys=True, indent=2))
        sys.stdout.write("\n")
    elif fmt == "csv":
        rows = csv_rows if csv_rows is not None else _flatten_rows(payload)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for row in rows:
            writer.writerow(row)
        sys.stdout.write(buffer.getvalue())
    else:
        _emit_text(_jsonable(payload), prefix="")


def _emit_text(obj, prefix: str) -> None:
    if isinstance(obj, dict):
        for key in sorted(obj):
            _emit_text(obj[key], f"{prefix}{key}." if prefix else f"{key}.")
    elif isinstance(obj, list):
        sys.stdout.write(f"{prefix[:-1]}: {_scalar_list(obj)}\n")
    else:
        sys.stdout.write(f"{prefix[:-1]}: {obj}\n")


def _scalar_list(items) -> str:
    return ";".join(
        _scalar_list(x) if isinstance(x, list) else str(x) for x in items
    )


def _flatten_rows(payload):
    flat = {}

    def walk(obj, prefix):
        if isinstance(obj, dict):
            for key in sorted(obj):
                walk(obj[key], f"{prefix}{key}." if prefix else f"{key}.")
        elif isinstance(obj, list):
            flat[prefix[:-1]] = _scalar_list(obj)
        else:
            flat[prefix[:-1]] = obj

    walk(_jsonable(payload), "")
    keys = sorted(flat)
    return [keys, [flat[k] for k in keys]]


def _extension_from_args(args) -> localdata.CyclicExtensionOfQ:
    return localdata.CyclicExtensionOfQ(
        p=args.p,
        tame_ramified=args.tame,
        wild_ramified=args.wild,
        infinity_ramified=args.infinity,
    )


def _verdict(assumptions, args) -> str:
    granted = set()
    if getattr(args, "assume_hi", False):
        granted.add(genus.H_I)
    if getattr(args, "assume_vandiver", False):
        granted.add(genus.VANDIVER)
    needed = set(assumptions) - {genus.UNRAMIFIED_AT_INFINITY} - granted
    return "conditional" if needed else "ok"


def _report_payload(report: genus.GenusReport, args) -> dict:
    return {
        "p": report.ext.p,
        "tame": sorted(report.ext.tame_ramified),
        "wild": report.ext.wild_ramified,
        "infinity": report.ext.infinity_ramified,
        "i": report.i,
        "per_prime": {str(ell): {"e_i": pair[0], "e_prime": pair[1]}
                      for ell, pair in report.per_prime},
        "t": report.t,
        "r": report.r,
        "s_i": report.s_i,
        "delta_variant_used": report.delta_variant_used,
        "exponent_low": report.exponent_low,
        "exponent_high": report.exponent_high,
        "exponent": report.exponent,
        "norm_index": report.norm_index,
        "assumptions": sorted(report.assumptions),
        "verdict": _verdict(report.assumptions, args),
    }


def _factored_payload(f) -> dict:
    return {
        "value": f.value,
        "sign": f.sign,
        "factors": [[p, e] for p, e in f.factors],
        "cofactor": f.cofactor,
        "display": str(f),
    }


def _element_payload(e) -> dict | None:
    if e is None:
        return None
    return {"a": e.a, "b": e.b, "halved": e.halved, "display": str(e)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgenus",
        description="Genus exponents, descent bounds and vanishing tests for "
                    "tame kernels and even K-groups over Q",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="json")

    p = sub.add_parser("local", help="local invariants at one ramified prime")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--tame", type=_parse_primes, default=frozenset())
    p.add_argument("--wild", action="store_true")
    p.add_argument("--infinity", action="store_true")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    add_format(p)

    p = sub.add_parser("tate-oracle", help="brute-force Tate cohomology orders")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    add_format(p)

    p = sub.add_parser("primitive", help="Frobenius rank of a set of tame primes")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--plus", action="store_true")
    p.add_argument("--primes", type=_parse_primes, required=True)
    add_format(p)

    for name, helptext in (
        ("genus", "genus exponent of the tame-kernel ratio"),
        ("kgenus", "genus exponent of the even K-group ratio"),
        ("bounds", "lower bounds for ker/coker of the restriction map"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--tame", type=_parse_primes, default=frozenset())
        p.add_argument("--wild", action="store_true")
        p.add_argument("--infinity", action="store_true")
        p.add_argument("--i", type=int, required=True)
        p.add_argument("--assume-hi", action="store_true")
        add_format(p)

    p = sub.add_parser("classify", help="vanishing decision for a shape")
    p.add_argument("--p", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--imaginary", action="store_true")
    group.add_argument("--real", action="store_true")
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--tame", type=_parse_primes, default=frozenset())
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--assume-vandiver", action="store_true")
    add_format(p)

    p = sub.add_parser("enumerate", help="admissible tame sets up to a bound")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--imaginary", action="store_true")
    group.add_argument("--real", action="store_true")
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--assume-vandiver", action="store_true")
    add_format(p)

    p = sub.add_parser("quad", help="class numbers, units and signatures of Q(sqrt d)")
    p.add_argument("--d", type=int, required=True)
    add_format(p)

    p = sub.add_parser("ktable", help="base orders |H^2| and |K_{2i-2}| over Z")
    p.add_argument("--max-i", type=int, required=True)
    p.add_argument("--assume-vandiver", action="store_true")
    add_format(p)

    return parser


def _shape_from_args(args) -> classify.ExtensionShape:
    if args.p == 2:
        real_type = (classify.TOTALLY_IMAGINARY if args.imaginary
                     else classify.TOTALLY_REAL)
    else:
        real_type = classify.NOT_APPLICABLE
    return classify.ExtensionShape(
        p=args.p,
        ramified_tame=getattr(args, "tame", frozenset()),
        wild=True,
        real_type=real_type,
        cyclic=args.cyclic or args.p != 2,
    )


def _decision_payload(decision: classify.Decision) -> dict:
    return {
        "verdict": decision.verdict,
        "condition": decision.condition,
        "reason": decision.reason,
        "k_theory_consequence": decision.k_theory_consequence,
    }


def _run_local(args):
    ext = _extension_from_args(args)
    data = localdata.local_invariants(ext, args.ell, args.i)
    _emit({"ell": data.ell, "q": data.q, "e": data.e, "f": data.f,
           "e_prime": data.e_prime, "e_i": data.e_i}, args.format)


def _run_tate(args):
    module = tatecoh.TateModule(m=args.m, n=args.n, u=args.u)
    h0, hm1 = tatecoh.tate_orders(module)
    _emit({"m": module.m, "n": module.n, "u": module.u, "h0": h0, "hm1": hm1},
          args.format)


def _run_primitive(args):
    rad = kummer.radical(args.p, args.i, plus_variant=args.plus)
    report = kummer.primitivity_rank(rad, args.primes)
    vectors = {str(ell): list(kummer.frobenius_vector(rad, ell).components)
               for ell in sorted(args.primes)}
    _emit({
        "p": args.p, "i": args.i, "plus": args.plus,
        "radical": [str(g) for g in rad.generators],
        "conditional_on_vandiver": rad.conditional_on_vandiver,
        "vectors": vectors,
        "t": report.t,
        "independent": report.independent,
        "maximal_subset": sorted(report.maximal_subset),
    }, args.format)


GENUS_CSV_COLUMNS = ["p", "tame", "wild", "infinity", "i", "exponent",
                     "exponent_low", "exponent_high", "t", "r", "s_i",
                     "delta_variant_used", "norm_index", "assumptions",
                     "verdict"]


def _run_genus(args, op):
    report = op(_extension_from_args(args), args.i)
    payload = _report_payload(report, args)
    row = [payload["p"], ";".join(str(x) for x in payload["tame"]),
           payload["wild"], payload["infinity"], payload["i"],
           payload["exponent"], payload["exponent_low"], payload["exponent_high"],
           payload["t"], payload["r"], payload["s_i"],
           payload["delta_variant_used"], payload["norm_index"],
           ";".join(payload["assumptions"]), payload["verdict"]]
    _emit(payload, args.format, csv_rows=[GENUS_CSV_COLUMNS, row])


BOUNDS_CSV_COLUMNS = ["p", "tame", "i", "T_used", "coker_lower",
                      "coker_two_exponent", "ker_lower", "ker_two_exponent",
                      "assumptions", "verdict"]


def _run_bounds(args):
    bounds = genus.descent_bounds(_extension_from_args(args), args.i)
    payload = {
        "p": args.p, "tame": sorted(args.tame), "i": args.i,
        "coker_lower": _factored_payload(bounds.coker_lower),
        "ker_lower": _factored_payload(bounds.ker_lower),
        "T_used": sorted(bounds.T_used),
        "coker_two_exponent": bounds.coker_two_exponent,
        "ker_two_exponent": bounds.ker_two_exponent,
        "assumptions": sorted(bounds.assumptions),
        "verdict": _verdict(bounds.assumptions, args),
    }
    row = [payload["p"], ";".join(str(x) for x in payload["tame"]), payload["i"],
           ";".join(str(x) for x in payload["T_used"]),
           bounds.coker_lower.value, bounds.coker_two_exponent,
           bounds.ker_lower.value, bounds.ker_two_exponent,
           ";".join(payload["assumptions"]), payload["verdict"]]
    _emit(payload, args.format, csv_rows=[BOUNDS_CSV_COLUMNS, row])


def _run_classify(args):
    decision = classify.vanishing_decision(_shape_from_args(args), args.i,
                                           assume_vandiver=args.assume_vandiver)
    payload = _decision_payload(decision)
    payload.update({"p": args.p, "i": args.i, "tame": sorted(args.tame)})
    _emit(payload, args.format)


def _run_enumerate(args):
    template = _shape_from_args(args)
    pairs = classify.enumerate_vanishing(args.p, args.i, template, args.bound,
                                         assume_vandiver=args.assume_vandiver)
    rows = [{"tame": list(tame), "verdict": d.verdict, "condition": d.condition}
            for tame, d in pairs]
    header = ["p", "i", "tame", "verdict", "condition"]
    csv_rows = [header] + [
        [args.p, args.i, ";".join(str(x) for x in tame), d.verdict,
         d.condition or ""]
        for tame, d in pairs
    ]
    _emit({"p": args.p, "i": args.i, "bound": args.bound, "admissible": rows},
          args.format, csv_rows=csv_rows)


QUAD_CSV_COLUMNS = ["d", "disc", "dyadic_type", "h_plus", "h",
                    "fundamental_unit", "unit_norm", "delta", "two_regular"]


def _run_quad(args):
    data = quadforms.quad_field_data(args.d)
    unit = "" if data.fundamental_unit is None else str(data.fundamental_unit)
    row = [data.d, data.disc, data.dyadic_type, data.h_plus, data.h, unit,
           "" if data.unit_norm is None else data.unit_norm,
           "" if data.delta is None else data.delta,
           str(data.two_regular).lower()]
    _emit({
        "d": data.d, "disc": data.disc, "dyadic_type": data.dyadic_type,
        "h_plus": data.h_plus, "h": data.h,
        "fundamental_unit": _element_payload(data.fundamental_unit),
        "unit_norm": data.unit_norm,
        "two_unit_generators": (None if data.two_unit_generators is None else
                                [_element_payload(g) for g in data.two_unit_generators]),
        "signature_matrix": (None if data.signature_matrix is None else
                             [list(row) for row in data.signature_matrix]),
        "delta": data.delta,
        "two_regular": data.two_regular,
        "signature_note": data.signature_note,
    }, args.format, csv_rows=[QUAD_CSV_COLUMNS, row])


def _run_ktable(args):
    rows = ktable.base_table(args.max_i, assume_vandiver=args.assume_vandiver)
    payload = [{
        "i": row.i,
        "h2_order": _factored_payload(row.h2_order),
        "k_order": _factored_payload(row.k_order),
        "conditional_on_vandiver": row.conditional_on_vandiver,
    } for row in rows]
    header = ["i", "h2_order", "k_order", "conditional_on_vandiver"]
    csv_rows = [header] + [
        [row.i, row.h2_order.value, row.k_order.value,
         str(row.conditional_on_vandiver).lower()]
        for row in rows
    ]
    _emit({"rows": payload}, args.format, csv_rows=csv_rows)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    dispatch = {
        "local": _run_local,
        "tate-oracle": _run_tate,
        "primitive": _run_primitive,
        "genus": lambda a: _run_genus(a, genus.genus_exponent),
        "kgenus": lambda a: _run_genus(a, genus.k_genus_ratio),
        "bounds": _run_bounds,
        "classify": _run_classify,
        "enumerate": _run_enumerate,
        "quad": _run_quad,
        "ktable": _run_ktable,
    }
    try:
        dispatch[args.command](args)
    except ValueError as error:
        sys.stdout.write(json.dumps(
            {"error": type(error).__name__, "message": str(error)},
            sort_keys=True, indent=2))
        sys.stdout.write("\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
