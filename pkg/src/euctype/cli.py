"""Command-line front end.

One verb per invocation; every verb supports ``--json`` for a
machine-readable report with a ``schema_version`` field, an echo of the
input, and any certificates (validation flags, stabilization windows,
counterexamples).  Exit statuses: 0 success, 2 domain error, 3 the
ring-is-not-Euclidean finding, 4 resource bound exceeded, 5 syntax
error.  The finding gets its own status because it is an answer, not a
failure.

Ordinals print with ASCII ``w``; the Unicode letter is accepted on
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .errors import DomainError, EngineError, NotEuclideanRing
from .euclidean import (
    bottom_euclidean,
    check_l_euclidean,
    collapse_pair_table,
    is_euclidean_function,
    nagata_product,
    order_type,
    quotient_euclidean,
    table_to_dict,
)
from .models import (
    RingSpec,
    check_localization_euclidean,
    check_not_l_euclidean_integers,
    check_not_l_euclidean_polys,
    order_type_of_spec,
    product_bounds,
    realize_ordinal,
    windowed_bottom_integers,
    windowed_bottom_polynomials,
)
from .ordinal import format_ordinal
from .parsing import parse_element, parse_ordinal, parse_ring_spec, table_from_dict
from .rings import FiniteRing, crt_decompose, format_poly

SCHEMA_VERSION = 1


def _emit(args, report: dict, lines: List[str]) -> None:
    if args.json:
        report = {"schema_version": SCHEMA_VERSION, "command": args.verb, **report}
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        for line in lines:
            print(line)


def _require_finite(ring) -> FiniteRing:
    if isinstance(ring, RingSpec):
        raise DomainError(
            f"'{ring}' contains symbolic factors; a concrete finite ring is required"
        )
    return ring


# ---------------------------------------------------------------------------
# verbs


def _cmd_ordinal_eval(args):
    value = parse_ordinal(args.expr)
    text = format_ordinal(value)
    _emit(args, {"input": args.expr, "result": text}, [text])
    return 0


def _cmd_ring_analyze(args):
    parsed = parse_ring_spec(args.spec)
    if isinstance(parsed, RingSpec):
        e = order_type_of_spec(parsed)
        report = {
            "input": args.spec,
            "symbolic": True,
            "spec": str(parsed),
            "pid_factors": list(parsed.pid_factors),
            "artinian_lengths": list(parsed.artinian_lengths),
            "order_type": format_ordinal(e),
        }
        lines = [
            f"symbolic ring spec: {parsed}",
            f"order type: {format_ordinal(e)}",
        ]
        _emit(args, report, lines)
        return 0
    ring = parsed
    principal = ring.is_principal(args.max_size)
    report = {
        "input": args.spec,
        "symbolic": False,
        "ring": ring.name,
        "size": len(ring),
        "units": len(ring.units()),
        "principal": principal,
        "ideals": len(ring.all_ideals(args.max_size)),
    }
    lines = [
        f"ring: {ring.name}",
        f"size: {len(ring)}   units: {len(ring.units())}",
        f"principal: {principal}   ideals: {report['ideals']}",
    ]
    if principal:
        report["length"] = ring.element_length(ring.zero)
        lines.append(f"length of the zero ideal chain: {report['length']}")
    locals_, _ = crt_decompose(ring) if principal else ([], None)
    if principal:
        report["local_factors"] = [loc.name for loc in locals_]
        lines.append("local factors: " + " x ".join(loc.name for loc in locals_))
    _emit(args, report, lines)
    return 0


def _table_lines(ring, table) -> List[str]:
    lines = [f"ring: {ring.name}"]
    by_value = {}
    for x, v in table.values.items():
        by_value.setdefault(format_ordinal(v), []).append(x)
    for text in sorted(by_value, key=lambda t: min(ring.index(x) for x in by_value[t])):
        xs = sorted(by_value[text], key=ring.index)
        lines.append(f"  value {text}: " + ", ".join(ring.format_element(x) for x in xs))
    lines.append(f"value at zero: {format_ordinal(table.value_at_zero)}")
    return lines


def _cmd_euclid_bottom(args):
    ring = _require_finite(parse_ring_spec(args.spec))
    table = bottom_euclidean(ring)
    e = order_type(table)
    report = {
        "input": args.spec,
        "table": table_to_dict(table),
        "order_type": format_ordinal(e),
    }
    lines = _table_lines(ring, table)
    lines.append(f"order type: {format_ordinal(e)}")
    _emit(args, report, lines)
    return 0


def _cmd_euclid_verify(args):
    with open(args.file) as fh:
        data = json.load(fh)
    table = table_from_dict(data)
    ok, cex = is_euclidean_function(table)
    ring = table.ring
    report = {"input": args.file, "ring": ring.name, "euclidean": ok}
    lines = [f"ring: {ring.name}", f"euclidean: {ok}"]
    if not ok:
        a, b = cex
        report["counterexample"] = {
            "a": ring.format_element(a),
            "b": ring.format_element(b),
        }
        lines.append(
            f"counterexample: a={ring.format_element(a)}, b={ring.format_element(b)}"
        )
    _emit(args, report, lines)
    return 0


def _cmd_euclid_quotient(args):
    ring = _require_finite(parse_ring_spec(args.spec))
    b = parse_element(ring, args.element)
    table = bottom_euclidean(ring)
    quot = quotient_euclidean(table, b)
    report = {
        "input": {"ring": args.spec, "element": args.element},
        "value_of_divisor": format_ordinal(table.value(b)),
        "table": table_to_dict(quot),
    }
    lines = _table_lines(quot.ring, quot)
    lines.append(
        f"value of {ring.format_element(b)} in the base ring: "
        f"{format_ordinal(table.value(b))}"
    )
    _emit(args, report, lines)
    return 0


def _cmd_euclid_product(args):
    r1 = _require_finite(parse_ring_spec(args.spec1))
    r2 = _require_finite(parse_ring_spec(args.spec2))
    t1 = bottom_euclidean(r1)
    t2 = bottom_euclidean(r2)
    pt = nagata_product(t1, t2)
    collapsed = collapse_pair_table(pt)
    product_bottom = bottom_euclidean(pt.ring)
    report = {
        "input": {"factors": [args.spec1, args.spec2]},
        "factor_order_types": [
            format_ordinal(order_type(t1)),
            format_ordinal(order_type(t2)),
        ],
        "product_order_type": format_ordinal(order_type(product_bottom)),
        "collapsed_table": table_to_dict(collapsed),
    }
    lines = [
        f"factors: {r1.name}  and  {r2.name}",
        f"factor order types: {format_ordinal(order_type(t1))}, "
        f"{format_ordinal(order_type(t2))}",
        f"product order type: {format_ordinal(order_type(product_bottom))}",
        f"collapsed pair table validated: {collapsed.validated}",
    ]
    _emit(args, report, lines)
    return 0


def _cmd_product_bounds(args):
    values = [parse_ordinal(e) for e in args.exprs]
    lower, upper = product_bounds(values)
    report = {
        "input": args.exprs,
        "lower": format_ordinal(lower),
        "upper": format_ordinal(upper),
    }
    lines = [
        f"lower bound (iterated sum): {format_ordinal(lower)}",
        f"upper bound (iterated natural sum): {format_ordinal(upper)}",
    ]
    _emit(args, report, lines)
    return 0


def _cmd_realize(args):
    a = parse_ordinal(args.expr)
    spec = realize_ordinal(a)
    report = {
        "input": args.expr,
        "spec": str(spec),
        "order_type": format_ordinal(order_type_of_spec(spec)),
    }
    _emit(args, report, [str(spec)])
    return 0


def _cmd_model_z(args):
    bound = args.window or 1024
    model = windowed_bottom_integers(report_bound=bound)
    cert = model.certificate
    report = {
        "input": {"report_bound": bound},
        "values": {str(n): v for n, v in sorted(model.values.items())},
        "stabilization_windows": [cert.window_a, cert.window_b],
        "note": "units map to 0; the count of binary digits of |n| is the value plus one",
    }
    lines = [
        f"stabilized on windows {cert.window_a} and {cert.window_b}",
        f"values reported for 1 <= n <= {bound} (symmetric in sign)",
    ]
    for n in (1, 2, 3, 4, min(bound, 1000), bound):
        lines.append(f"  value({n}) = {model.values[n]}")
    _emit(args, report, lines)
    return 0


def _cmd_model_poly(args):
    degree = args.window or 10
    model = windowed_bottom_polynomials(args.q, report_degree=degree)
    cert = model.certificate
    by_degree = {}
    for p, v in model.values.items():
        by_degree.setdefault(len(p) - 1, set()).add(v)
    report = {
        "input": {"q": args.q, "report_degree": degree},
        "values_by_degree": {str(d): sorted(vs) for d, vs in sorted(by_degree.items())},
        "stabilization_windows": [cert.window_a, cert.window_b],
        "note": "units map to 0; the value of a nonzero polynomial is its degree",
    }
    lines = [f"stabilized on degree windows {cert.window_a} and {cert.window_b}"]
    for d, vs in sorted(by_degree.items()):
        lines.append(f"  degree {d}: values {sorted(vs)}")
    _emit(args, report, lines)
    return 0


def _cmd_model_localize(args):
    primes = [int(p) for p in args.primes]
    result = check_localization_euclidean(primes, samples=args.samples, seed=args.seed)
    report = {
        "input": {"primes": primes, "samples": args.samples, "seed": args.seed},
        "ok": result.ok,
        "samples": result.samples,
        "seed": result.seed,
        "failures": [[str(a), str(b)] for a, b in result.failures],
    }
    lines = [
        f"primes: {primes}   samples: {result.samples}   seed: {result.seed}",
        f"division property held on every sample: {result.ok}",
    ]
    _emit(args, report, lines)
    return 0


def _cmd_l_euclidean(args):
    target = args.target.strip()
    if target == "Z":
        w = check_not_l_euclidean_integers()
        report = {
            "input": target,
            "l_euclidean": False,
            "witness": {
                "divisor": str(w.divisor),
                "target": str(w.target),
                "allowed_remainders": [str(r) for r in w.allowed_remainders],
            },
            "description": w.description,
        }
        lines = [f"Z is not length-Euclidean: {w.description}"]
        _emit(args, report, lines)
        return 0
    import re as _re

    m = _re.match(r"^GF\((\d+)\)\[t\]$", target)
    if m:
        q = int(m.group(1))
        w = check_not_l_euclidean_polys(q)
        report = {
            "input": target,
            "l_euclidean": False,
            "witness": {
                "divisor": format_poly(w.divisor),
                "target": format_poly(w.target),
                "allowed_remainders": [format_poly(r) for r in w.allowed_remainders],
            },
            "description": w.description,
        }
        lines = [f"{target} is not length-Euclidean: {w.description}"]
        _emit(args, report, lines)
        return 0
    ring = _require_finite(parse_ring_spec(target))
    ok, cex = check_l_euclidean(ring)
    report = {"input": target, "ring": ring.name, "l_euclidean": ok}
    lines = [f"ring: {ring.name}", f"length function is Euclidean: {ok}"]
    if not ok:
        a, b = cex
        report["counterexample"] = {
            "a": ring.format_element(a),
            "b": ring.format_element(b),
        }
        lines.append(
            f"counterexample: a={ring.format_element(a)}, b={ring.format_element(b)}"
        )
    _emit(args, report, lines)
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="euctype",
        description="Euclidean-function tables, ordinal arithmetic, and "
        "bounded models of the classical domains.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.set_defaults(func=func)
        return p

    p = add("ordinal-eval", _cmd_ordinal_eval, "evaluate an ordinal expression")
    p.add_argument("expr")

    p = add("ring-analyze", _cmd_ring_analyze, "size, units, ideals, principality")
    p.add_argument("spec")
    p.add_argument("--max-size", type=int, default=512, metavar="N",
                   help="carrier bound for ideal enumeration")

    p = add("euclid-bottom", _cmd_euclid_bottom, "least Euclidean table and order type")
    p.add_argument("spec")

    p = add("euclid-verify", _cmd_euclid_verify, "validate a serialized table file")
    p.add_argument("file")

    p = add("euclid-quotient", _cmd_euclid_quotient,
            "push the least table down to a quotient ring")
    p.add_argument("spec")
    p.add_argument("element")

    p = add("euclid-product", _cmd_euclid_product,
            "pair-valued product construction and its ordinal collapse")
    p.add_argument("spec1")
    p.add_argument("spec2")

    p = add("product-bounds", _cmd_product_bounds,
            "order-type bounds for a product from its factors")
    p.add_argument("exprs", nargs="+")

    p = add("realize", _cmd_realize, "small ring spec with the given order type")
    p.add_argument("expr")

    p = add("model-z", _cmd_model_z, "windowed least values on the integers")
    p.add_argument("--window", type=int, default=None, metavar="N",
                   help="reporting bound on |n| (default 1024)")

    p = add("model-poly", _cmd_model_poly, "windowed least values on GF(q)[t]")
    p.add_argument("q", type=int)
    p.add_argument("--window", type=int, default=None, metavar="D",
                   help="reporting degree bound (default 10)")

    p = add("model-localize", _cmd_model_localize,
            "sampled division checks for a semilocal localization of Z")
    p.add_argument("primes", nargs="+")
    p.add_argument("--samples", type=int, default=10_000, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="S")

    p = add("l-euclidean", _cmd_l_euclidean,
            "is the ideal-chain length a Euclidean function?")
    p.add_argument("target", help="'Z', 'GF(q)[t]', or a concrete ring spec")

    return parser


def _not_euclidean_report(args, exc: NotEuclideanRing) -> None:
    ring = exc.ring
    report = {
        "finding": "not-euclidean",
        "ring": ring.name,
        "stuck": [ring.format_element(x) for x in exc.stuck],
        "assigned_levels": {
            ring.format_element(x): v
            for x, v in sorted(exc.partial.items(), key=lambda kv: ring.index(kv[0]))
        },
    }
    lines = [
        f"finding: {ring.name} admits no Euclidean function",
        "stuck elements: " + ", ".join(ring.format_element(x) for x in exc.stuck),
    ]
    _emit(args, report, lines)


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotEuclideanRing as exc:
        _not_euclidean_report(args, exc)
        return exc.exit_code
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
