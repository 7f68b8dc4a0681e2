"""Command line front end: one subcommand per library operation.

Every command prints an envelope {command, status, payload, version}.  With
--json the envelope is canonical single-line JSON (sorted keys, compact
separators), so parsing and reserializing it is byte-identical.  Exit codes:
0 for ok, 1 when a verified identity fails, 2 for usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .errors import HermquadError
from .motives import (
    MotiveExpression,
    decompose_hermitian,
    decompose_quadric,
    expand_projective_bundle,
    realize_split,
    solve_core,
    verify_krashen,
    vishik_solve,
)
from .poly import (
    IntPolynomial,
    poincare_projective,
    poincare_split_hermitian,
    poincare_split_quadric,
)
from .quadforms import (
    DiagonalQuadraticForm,
    HermitianSpace,
    Place,
    determinant_class,
    essential_dimension,
    first_witt_index_special,
    global_witt_index,
    hasse_invariant,
    hilbert_symbol,
    is_anisotropic_hermitian,
    is_hyperbolic_over_extension,
    is_isotropic_global,
    local_witt_index,
    milnor_husemoller_check,
    normalize_square_class,
    relevant_places,
    trace_form,
)
from .rost import (
    central_binom_valuation,
    congrel_equivalence,
    congruence_counterexample,
    degree_formula_filter,
    eta2_parity,
    incompressibility_verdict,
    is_power_case,
)

VERSION = "1"

_EXIT = {"ok": 0, "violated": 1, "error": 2}


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
        if value < lo:
            raise argparse.ArgumentTypeError(f"must be an integer >= {lo}")
        return value

    return parse


def _plain_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number")
    if value == 0:
        raise argparse.ArgumentTypeError("must be nonzero")
    return value


def _entry_list(text: str) -> list[Fraction]:
    parts = [part.strip() for part in text.split(",")]
    if not parts or any(not part for part in parts):
        raise argparse.ArgumentTypeError("expected comma-separated nonzero rationals")
    return [_rational(part) for part in parts]


def _place(text: str) -> Place:
    if text == "real":
        return Place()
    try:
        prime = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is neither 'real' nor a prime")
    try:
        return Place(prime)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _span(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("ranges are written A..B")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError("range bounds must be integers")
    if lo < 2:
        raise argparse.ArgumentTypeError("range must start at 2 or above")
    if hi < lo:
        raise argparse.ArgumentTypeError("range is empty")
    return lo, hi


def _jsonable(value):
    if isinstance(value, IntPolynomial):
        return list(value.coefficients)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def _human_value(value) -> str:
    if isinstance(value, IntPolynomial):
        return str(value)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(_jsonable(value))
    return str(value)


def _expression_payload(expr: MotiveExpression) -> list[dict]:
    return [
        {"base": base.kind, "params": list(base.params), "shift": shift}
        for base, shift in expr
    ]


def _form_from(args) -> DiagonalQuadraticForm:
    return DiagonalQuadraticForm.from_rationals(args.qdiag)


# Each handler returns (payload, status).


def _cmd_poincare(args):
    if args.variety == "projective":
        if args.m is None:
            args.leaf.error("--m is required for --variety projective")
        poly = poincare_projective(args.m, args.point_factor)
        payload = {
            "variety": "projective",
            "m": args.m,
            "point_factor": args.point_factor,
        }
    else:
        if args.n is None:
            args.leaf.error(f"--n is required for --variety {args.variety}")
        if args.variety == "quadric":
            poly = poincare_split_quadric(args.n)
        else:
            poly = poincare_split_hermitian(args.n)
        payload = {"variety": args.variety, "n": args.n}
    payload.update(
        {"polynomial": poly, "degree": poly.degree, "value_at_1": poly.evaluate(1)}
    )
    return payload, "ok"


def _cmd_motive_decompose(args):
    if args.variety == "projective":
        if args.m is None:
            args.leaf.error("--m is required for --variety projective")
        expr = expand_projective_bundle(args.m)
        closed = poincare_projective(args.m, 1)
        payload = {"variety": "projective", "m": args.m}
    else:
        if args.n is None:
            args.leaf.error(f"--n is required for --variety {args.variety}")
        if args.variety == "quadric":
            expr = decompose_quadric(args.n)
            closed = poincare_split_quadric(args.n)
        else:
            expr = decompose_hermitian(args.n)
            closed = poincare_split_hermitian(args.n)
        payload = {"variety": args.variety, "n": args.n}
    realization = realize_split(expr)
    matches = realization == closed
    payload.update(
        {
            "summands": _expression_payload(expr),
            "realization": realization,
            "closed_form": closed,
            "matches": matches,
        }
    )
    return payload, "ok" if matches else "violated"


def _cmd_motive_nh(args):
    poly = solve_core(args.n)
    return {"n": args.n, "core": poly, "degree": poly.degree}, "ok"


def _cmd_verify_krashen(args):
    if args.span is not None:
        lo, hi = args.span
        for n in range(lo, hi + 1):
            report = verify_krashen(n)
            if not report.holds:
                payload = {
                    "range": [lo, hi],
                    "checked": n - lo + 1,
                    "holds": False,
                    "first_counterexample": {
                        "n": n,
                        "lhs": report.lhs,
                        "rhs": report.rhs,
                    },
                }
                return payload, "violated"
        payload = {
            "range": [lo, hi],
            "checked": hi - lo + 1,
            "holds": True,
            "first_counterexample": None,
        }
        return payload, "ok"
    report = verify_krashen(args.n)
    payload = {
        "n": report.n,
        "holds": report.holds,
        "lhs": report.lhs,
        "rhs": report.rhs,
    }
    return payload, "ok" if report.holds else "violated"


def _cmd_vishik(args):
    report = vishik_solve(args.m, args.k)
    payload = {
        "m": report.m,
        "k": report.k,
        "core": report.core,
        "holds": report.holds,
        "degenerate": report.degenerate,
        "matches_core": report.matches_core,
    }
    return payload, "ok" if report.holds else "violated"


def _cmd_rost_eta2(args):
    if args.span is not None:
        lo, hi = args.span
        bad = congruence_counterexample(lo, hi)
        payload = {
            "range": [lo, hi],
            "checked": hi - lo + 1 if bad is None else bad - lo + 1,
            "congruence_holds": bad is None,
            "first_counterexample": bad,
        }
        return payload, "ok" if bad is None else "violated"
    n = args.n
    holds = congrel_equivalence(n)
    payload = {
        "n": n,
        "eta2_parity": eta2_parity(n),
        "central_binom_valuation": central_binom_valuation(n - 1),
        "is_power_case": is_power_case(n),
        "congruence_holds": holds,
    }
    return payload, "ok" if holds else "violated"


def _cmd_rost_incompressible(args):
    report = incompressibility_verdict(args.n, not args.isotropic)
    payload = {
        "n": report.n,
        "dim_vh": report.dim_vh,
        "anisotropic": not args.isotropic,
        "eta2_parity": report.eta2_parity,
        "is_power_case": report.is_power_case,
        "point_gcd": report.point_gcd,
        "verdict": report.verdict,
    }
    return payload, "ok"


def _cmd_rost_degree_filter(args):
    residues = degree_formula_filter(args.n)
    payload = {
        "n": args.n,
        "residues": sorted(residues),
        "forced_odd": residues == frozenset({1}),
    }
    return payload, "ok"


def _cmd_form_trace(args):
    space = HermitianSpace.from_rationals(args.a, args.b)
    form = trace_form(space)
    payload = {
        "a": space.a.value,
        "b": [str(b) for b in space.entries],
        "trace_form": [entry.value for entry in form.entries],
        "dim": form.dim,
    }
    return payload, "ok"


def _cmd_form_det(args):
    form = _form_from(args)
    payload = {
        "entries": [entry.value for entry in form.entries],
        "determinant_class": determinant_class(form).value,
    }
    return payload, "ok"


def _cmd_form_hilbert(args):
    x = normalize_square_class(args.x)
    y = normalize_square_class(args.y)
    payload = {
        "x": x.value,
        "y": y.value,
        "place": str(args.place),
        "symbol": hilbert_symbol(x, y, args.place),
    }
    return payload, "ok"


def _cmd_form_hasse(args):
    form = _form_from(args)
    payload = {
        "entries": [entry.value for entry in form.entries],
        "place": str(args.place),
        "hasse_invariant": hasse_invariant(form, args.place),
    }
    return payload, "ok"


def _cmd_form_witt_index(args):
    form = _form_from(args)
    entries = [entry.value for entry in form.entries]
    if args.place is not None:
        payload = {
            "entries": entries,
            "place": str(args.place),
            "witt_index": local_witt_index(form, args.place),
        }
        return payload, "ok"
    locals_ = [
        {"place": str(v), "witt_index": local_witt_index(form, v)}
        for v in relevant_places(form)
    ]
    payload = {
        "entries": entries,
        "witt_index": global_witt_index(form),
        "local_indices": locals_,
    }
    return payload, "ok"


def _cmd_form_isotropic(args):
    if args.qdiag is not None:
        if args.a is not None or args.b is not None:
            args.leaf.error("give either --qdiag or --a with --b, not both")
        form = _form_from(args)
        payload = {
            "entries": [entry.value for entry in form.entries],
            "isotropic": is_isotropic_global(form),
            "witt_index": global_witt_index(form),
        }
        return payload, "ok"
    if args.a is None or args.b is None:
        args.leaf.error("give either --qdiag or --a with --b")
    space = HermitianSpace.from_rationals(args.a, args.b)
    form = trace_form(space)
    payload = {
        "a": space.a.value,
        "b": [str(b) for b in space.entries],
        "trace_form": [entry.value for entry in form.entries],
        "anisotropic": is_anisotropic_hermitian(space),
    }
    return payload, "ok"


def _cmd_form_hyperbolic_over(args):
    form = _form_from(args)
    a = normalize_square_class(args.a)
    payload = {
        "entries": [entry.value for entry in form.entries],
        "a": a.value,
        "hyperbolic": is_hyperbolic_over_extension(form, a),
    }
    return payload, "ok"


def _cmd_form_check_mh(args):
    form = _form_from(args)
    a = normalize_square_class(args.a)
    report = milnor_husemoller_check(form, a)
    payload = {
        "entries": [entry.value for entry in form.entries],
        "a": a.value,
        "dim_ok": report.dim_ok,
        "hyperbolic_over_L": report.hyperbolic_over_l,
        "det_ok": report.det_ok,
        "passes": report.passes,
        "witnesses": [
            {"place": w.place, "clause": w.clause} for w in report.witnesses
        ],
    }
    return payload, "ok" if report.passes else "violated"


def _cmd_essdim(args):
    value = essential_dimension(args.n, args.i1)
    payload = {
        "n": args.n,
        "i1": args.i1,
        "dim_vh": 2 * args.n - 3,
        "essential_dimension": value,
    }
    return payload, "ok"


def _cmd_first_witt_special(args):
    value = first_witt_index_special(args.dim_q)
    return {"dim_q": args.dim_q, "first_witt_index": value}, "ok"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        dest="as_json",
        help="emit the envelope as canonical JSON",
    )

    parser = argparse.ArgumentParser(
        prog="hermquad",
        description="Exact invariants of quadrics, hermitian quadrics and rational quadratic forms.",
    )
    top = parser.add_subparsers(dest="group", required=True, metavar="command")

    def leaf(sub, name, handler, command_name, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.set_defaults(handler=handler, command_name=command_name)
        p.set_defaults(leaf=p)
        return p

    p = leaf(
        top,
        "poincare",
        _cmd_poincare,
        "poincare",
        help="split Poincare polynomial of a variety",
    )
    p.add_argument(
        "--variety", choices=["quadric", "hermitian", "projective"], required=True
    )
    p.add_argument("--n", type=_int_at_least(2), help="rank, at least 2")
    p.add_argument("--m", type=_int_at_least(0), help="projective dimension")
    p.add_argument(
        "--point-factor",
        dest="point_factor",
        type=int,
        choices=[1, 2],
        default=2,
        help="cell multiplicity for projective space (default 2)",
    )

    motive = top.add_parser("motive", help="motivic decompositions and identities")
    motive_sub = motive.add_subparsers(
        dest="subcommand", required=True, metavar="subcommand"
    )

    p = leaf(
        motive_sub,
        "decompose",
        _cmd_motive_decompose,
        "motive decompose",
        help="direct-sum decomposition with its realization",
    )
    p.add_argument(
        "--variety", choices=["quadric", "hermitian", "projective"], required=True
    )
    p.add_argument("--n", type=_int_at_least(2))
    p.add_argument("--m", type=_int_at_least(0))

    p = leaf(
        motive_sub,
        "nh",
        _cmd_motive_nh,
        "motive nh",
        help="Poincare polynomial of the shared core summand",
    )
    p.add_argument("--n", type=_int_at_least(2), required=True)

    p = leaf(
        motive_sub,
        "verify-krashen",
        _cmd_verify_krashen,
        "motive verify-krashen",
        help="check the quadric / hermitian quadric identity",
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=_int_at_least(2))
    group.add_argument("--range", dest="span", type=_span, metavar="A..B")

    p = leaf(
        motive_sub,
        "vishik",
        _cmd_vishik,
        "motive vishik",
        help="solve for the tensor factor of a Pfister multiple",
    )
    p.add_argument("--m", type=_int_at_least(1), required=True)
    p.add_argument("--k", type=_int_at_least(1), required=True)

    rost = top.add_parser("rost", help="Rost numbers and incompressibility")
    rost_sub = rost.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

    p = leaf(
        rost_sub,
        "eta2",
        _cmd_rost_eta2,
        "rost eta2",
        help="parity of the Rost number, with the dimension congruence",
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=_int_at_least(2))
    group.add_argument("--range", dest="span", type=_span, metavar="A..B")

    p = leaf(
        rost_sub,
        "incompressible",
        _cmd_rost_incompressible,
        "rost incompressible",
        help="incompressibility verdict for a hermitian quadric",
    )
    p.add_argument("--n", type=_int_at_least(2), required=True)
    p.add_argument(
        "--isotropic",
        action="store_true",
        help="treat the space as isotropic (default anisotropic)",
    )

    p = leaf(
        rost_sub,
        "degree-filter",
        _cmd_rost_degree_filter,
        "rost degree-filter",
        help="degrees mod 2 allowed by the degree formula",
    )
    p.add_argument("--n", type=_int_at_least(2), required=True)

    form = top.add_parser("form", help="quadratic form arithmetic over Q")
    form_sub = form.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

    p = leaf(
        form_sub,
        "trace",
        _cmd_form_trace,
        "form trace",
        help="quadratic form underlying a hermitian space",
    )
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("--b", type=_entry_list, required=True, metavar="B1,B2,...")

    p = leaf(form_sub, "det", _cmd_form_det, "form det", help="determinant square class")
    p.add_argument("--qdiag", type=_entry_list, required=True, metavar="A1,A2,...")

    p = leaf(
        form_sub,
        "hilbert",
        _cmd_form_hilbert,
        "form hilbert",
        help="Hilbert symbol at one place",
    )
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--y", type=_rational, required=True)
    p.add_argument("--place", type=_place, required=True, metavar="real|P")

    p = leaf(
        form_sub,
        "hasse",
        _cmd_form_hasse,
        "form hasse",
        help="Hasse invariant at one place",
    )
    p.add_argument("--qdiag", type=_entry_list, required=True, metavar="A1,A2,...")
    p.add_argument("--place", type=_place, required=True, metavar="real|P")

    p = leaf(
        form_sub,
        "witt-index",
        _cmd_form_witt_index,
        "form witt-index",
        help="Witt index, global or at one place",
    )
    p.add_argument("--qdiag", type=_entry_list, required=True, metavar="A1,A2,...")
    p.add_argument("--place", type=_place, metavar="real|P")

    p = leaf(
        form_sub,
        "isotropic",
        _cmd_form_isotropic,
        "form isotropic",
        help="rational isotropy of a form, or anisotropy of a hermitian space",
    )
    p.add_argument("--qdiag", type=_entry_list, metavar="A1,A2,...")
    p.add_argument("--a", type=_rational)
    p.add_argument("--b", type=_entry_list, metavar="B1,B2,...")

    p = leaf(
        form_sub,
        "hyperbolic-over",
        _cmd_form_hyperbolic_over,
        "form hyperbolic-over",
        help="does the form become hyperbolic over Q(sqrt a)",
    )
    p.add_argument("--qdiag", type=_entry_list, required=True, metavar="A1,A2,...")
    p.add_argument("--a", type=_rational, required=True)

    p = leaf(
        form_sub,
        "check-mh",
        _cmd_form_check_mh,
        "form check-mh",
        help="criterion for underlying a hermitian form over Q(sqrt a)",
    )
    p.add_argument("--qdiag", type=_entry_list, required=True, metavar="A1,A2,...")
    p.add_argument("--a", type=_rational, required=True)

    p = leaf(
        top,
        "essdim",
        _cmd_essdim,
        "essdim",
        help="essential dimension from rank and first Witt index",
    )
    p.add_argument("--n", type=_int_at_least(2), required=True)
    p.add_argument("--i1", type=_int_at_least(1), required=True)

    p = leaf(
        top,
        "first-witt-special",
        _cmd_first_witt_special,
        "first-witt-special",
        help="first Witt index for dimensions of the shape 2^r + 2",
    )
    p.add_argument("--dim-q", dest="dim_q", type=_plain_int, required=True)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, status = args.handler(args)
    except HermquadError as err:
        payload = {"error": type(err).__name__, "message": str(err)}
        status = "error"
    envelope = {
        "command": args.command_name,
        "status": status,
        "payload": payload,
        "version": VERSION,
    }
    if args.as_json:
        print(json.dumps(_jsonable(envelope), sort_keys=True, separators=(",", ":")))
    else:
        print(f"command: {args.command_name}")
        print(f"status: {status}")
        for key, value in payload.items():
            print(f"{key}: {_human_value(value)}")
    return _EXIT[status]


if __name__ == "__main__":
    sys.exit(main())
