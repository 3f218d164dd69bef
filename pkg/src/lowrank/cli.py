"""Command line driver.

Inputs are JSON: inline (first non-space character '{'), a file path,
or '-' for standard input.  Ring elements travel as decimal strings
("-3", "2/7"), ring specs as {"kind": "Z"}, {"kind": "Q"}, or
{"kind": "Fp", "p": 5}.  Output is canonical JSON (sorted keys, two
space indent) so identical inputs produce identical bytes; census
commands can render a plain-text table instead with --format table.

Exit status: 0 on success, 1 on a domain error (violated relations,
non-units, guard limits) with a JSON error object on stderr, 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import StructureConstants, algebra_degree, left_regular_rep, SquareMatrix
from .classify import (
    degree_product_check,
    exceptional_classes,
    mn_degree_probes,
    quadratic_census,
    verify_main_theorem,
)
from .cubic import (
    BinaryCubicForm,
    CubicCoefficients,
    build_algebra,
    classify_case,
    exceptional_witness,
    form_from_commutative,
    gl2_act,
    matrix_rep,
    standard_involution_exceptional,
    validate_relations,
)
from .errors import InputError, LowrankError
from .involutions import (
    Involution,
    find_standard_involution,
    quadratic_certificate,
    verify_involution,
    verify_standard,
)
from .quadratic import (
    QuadraticAlgebra,
    artin_schreier_class,
    is_isomorphic_2unit,
    is_isomorphic_over_z,
    is_separable,
    split_idempotent,
)
from .rings import RingSpec


def _load_json(arg: str):
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith("{"):
        text = arg
    else:
        try:
            with open(arg, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise InputError(f"cannot read input file {arg!r}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}")


def _ring_from_args(args) -> RingSpec:
    if args.ring is None:
        raise InputError("this command needs --ring")
    try:
        obj = json.loads(args.ring)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed --ring JSON: {exc}")
    return RingSpec.from_json(obj)


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _parse_vector(spec, raw, what):
    if not isinstance(raw, list):
        raise InputError(f"{what} must be a list of element strings")
    return [spec.parse(s) for s in raw]


# -- quad ---------------------------------------------------------------------


def _cmd_quad_disc(args):
    alg = QuadraticAlgebra.from_json(_load_json(args.input))
    _emit(
        {
            "ring": alg.spec.to_json(),
            "discriminant": str(alg.t * alg.t - 4 * alg.n),
        }
    )
    return 0


def _quad_pair(obj):
    if not isinstance(obj, dict) or {"ring", "A", "B"} - set(obj):
        raise InputError("expected keys 'ring', 'A', 'B'")
    spec = RingSpec.from_json(obj["ring"])
    pair = []
    for key in ("A", "B"):
        sub = obj[key]
        if not isinstance(sub, dict) or {"t", "n"} - set(sub):
            raise InputError(f"entry {key!r} needs keys 't' and 'n'")
        pair.append(QuadraticAlgebra(spec, spec.parse(sub["t"]), spec.parse(sub["n"])))
    return spec, pair[0], pair[1]


def _cmd_quad_iso(args):
    spec, a, b = _quad_pair(_load_json(args.input))
    if spec.kind == "Z":
        ok, witness = is_isomorphic_over_z(a, b)
    else:
        ok, witness = is_isomorphic_2unit(a, b)
    _emit(
        {
            "isomorphic": ok,
            "map": None if witness is None else witness.to_json(),
        }
    )
    return 0


def _cmd_quad_artin_schreier(args):
    alg = QuadraticAlgebra.from_json(_load_json(args.input))
    separable = is_separable(alg)
    _emit(
        {
            "separable": separable,
            "class": str(artin_schreier_class(alg).representative)
            if separable
            else None,
        }
    )
    return 0


def _cmd_quad_split(args):
    alg = QuadraticAlgebra.from_json(_load_json(args.input))
    fwd, back = split_idempotent(alg)
    _emit(
        {
            "forward": fwd.to_json(),
            "inverse": back.to_json(),
            "product": fwd.target.to_json(),
        }
    )
    return 0


# -- cubic --------------------------------------------------------------------


def _cubic_coeffs(args) -> CubicCoefficients:
    spec = _ring_from_args(args)
    return CubicCoefficients.from_json(spec, _load_json(args.input))


def _cmd_cubic_build(args):
    _emit(build_algebra(_cubic_coeffs(args)).to_json())
    return 0


def _cmd_cubic_verify(args):
    spec = _ring_from_args(args)
    obj = _load_json(args.input)
    if not isinstance(obj, dict) or set(CubicCoefficients.FIELDS) - set(obj):
        raise InputError("cubic coefficients need keys 'b', 'c', 'm', 'n', 'y', 'z'")
    vals = [spec.parse(obj[k]) for k in CubicCoefficients.FIELDS]
    ok, violated = validate_relations(spec, *vals)
    if not ok:
        _emit({"valid": False, "violations": violated})
        return 0
    coeffs = CubicCoefficients(spec, *vals)
    _emit({"valid": True, "case": classify_case(coeffs).value})
    return 0


def _cmd_cubic_involution(args):
    inv = standard_involution_exceptional(_cubic_coeffs(args))
    _emit(inv.to_json())
    return 0


def _cmd_cubic_witness(args):
    witness = exceptional_witness(_cubic_coeffs(args))
    _emit(witness.to_json())
    return 0


def _cmd_cubic_matrix_rep(args):
    mat_i, mat_j = matrix_rep(_cubic_coeffs(args))
    _emit({"I": mat_i.to_json(), "J": mat_j.to_json(), "identities": "verified"})
    return 0


def _cmd_cubic_form(args):
    _emit(form_from_commutative(_cubic_coeffs(args)).to_json())
    return 0


# -- form ---------------------------------------------------------------------


def _cmd_form_disc(args):
    spec = _ring_from_args(args)
    form = BinaryCubicForm.from_json(spec, _load_json(args.input))
    _emit({"discriminant": str(form.discriminant())})
    return 0


def _cmd_form_act(args):
    spec = _ring_from_args(args)
    obj = _load_json(args.input)
    if not isinstance(obj, dict) or {"g", "form"} - set(obj):
        raise InputError("expected keys 'g' (2x2 matrix) and 'form'")
    rows = obj["g"]
    if (
        not isinstance(rows, list)
        or len(rows) != 2
        or any(not isinstance(r, list) or len(r) != 2 for r in rows)
    ):
        raise InputError("'g' must be a 2x2 matrix of element strings")
    g = SquareMatrix(spec, [[spec.parse(s) for s in row] for row in rows])
    form = BinaryCubicForm.from_json(spec, obj["form"])
    _emit(gl2_act(g, form).to_json())
    return 0


# -- inv ----------------------------------------------------------------------


def _cmd_inv_verify(args):
    inv = Involution.from_json(_load_json(args.input))
    ok, failure = verify_involution(inv)
    standard, witness = (False, None)
    if ok:
        standard, witness = verify_standard(inv)
    _emit(
        {
            "involution": ok,
            "failure": failure,
            "standard": standard,
            "witness": None
            if witness is None
            else [str(c) for c in witness.coeffs],
        }
    )
    return 0


def _cmd_inv_find(args):
    alg = StructureConstants.from_json(_load_json(args.input))
    found = find_standard_involution(alg)
    if found is None:
        _emit({"found": False})
    else:
        out = found.to_json()
        out["found"] = True
        _emit(out)
    return 0


def _cmd_inv_trace_norm(args):
    obj = _load_json(args.input)
    inv = Involution.from_json(obj)
    if "element" not in obj:
        raise InputError("trace-norm needs an 'element' key")
    x = inv.algebra.element(
        _parse_vector(inv.algebra.spec, obj["element"], "element")
    )
    t, n = quadratic_certificate(inv, x)
    _emit({"trace": str(t), "norm": str(n), "certificate": "x^2 - t x + n = 0"})
    return 0


# -- alg ----------------------------------------------------------------------


def _cmd_alg_assoc(args):
    alg = StructureConstants.from_json(_load_json(args.input))
    ok, witness = alg.verify_associativity()
    _emit(
        {
            "associative": ok,
            "witness": None if witness is None else list(witness),
        }
    )
    return 0


def _cmd_alg_degree(args):
    alg = StructureConstants.from_json(_load_json(args.input))
    _emit({"degree": algebra_degree(alg)})
    return 0


def _cmd_alg_charpoly(args):
    obj = _load_json(args.input)
    alg = StructureConstants.from_json(obj)
    if "element" not in obj:
        raise InputError("charpoly needs an 'element' key")
    x = alg.element(_parse_vector(alg.spec, obj["element"], "element"))
    poly = left_regular_rep(x).char_poly()
    _emit({"char_poly": poly.to_strings(), "order": "constant term first"})
    return 0


# -- census / probe -----------------------------------------------------------


def _census_spec(args) -> RingSpec:
    return RingSpec("Fp", args.p)


def _cmd_census_cubic(args):
    report = verify_main_theorem(_census_spec(args))
    if args.format == "table":
        print(report.to_table())
    else:
        _emit(report.to_json())
    return 0


def _cmd_census_quad(args):
    report = quadratic_census(_census_spec(args))
    if args.format == "table":
        print(report.to_table())
    else:
        _emit(report.to_json())
    return 0


def _cmd_census_exceptional(args):
    classes = exceptional_classes(_census_spec(args))
    _emit(
        {
            "ring": {"kind": "Fp", "p": args.p},
            "count": len(classes),
            "classes": [
                [[str(v) for v in coeffs.as_tuple()] for coeffs in cls]
                for cls in classes
            ],
        }
    )
    return 0


def _cmd_probe_mn(args):
    report = mn_degree_probes(_census_spec(args), args.n)
    _emit(report.to_json())
    return 0


def _cmd_probe_degree_product(args):
    obj = _load_json(args.input)
    if not isinstance(obj, dict) or {"A", "B"} - set(obj):
        raise InputError("expected keys 'A' and 'B' holding algebras")
    a = StructureConstants.from_json(obj["A"])
    b = StructureConstants.from_json(obj["B"])
    _emit(degree_product_check(a, b).to_json())
    return 0


# -- wiring -------------------------------------------------------------------


def _add_input(parser, with_ring=False):
    parser.add_argument(
        "input", help="inline JSON, a file path, or - for standard input"
    )
    if with_ring:
        parser.add_argument("--ring", help='ring spec JSON, e.g. {"kind":"Z"}')


def _add_format(parser):
    parser.add_argument(
        "--format", choices=("json", "table"), default="json"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lowrank",
        description="exact computations with free algebras of rank 2 and 3",
    )
    top = parser.add_subparsers(dest="group", required=True)

    quad = top.add_parser("quad", help="rank-2 algebras").add_subparsers(
        dest="cmd", required=True
    )
    for name, fn in (
        ("disc", _cmd_quad_disc),
        ("iso", _cmd_quad_iso),
        ("artin-schreier", _cmd_quad_artin_schreier),
        ("split", _cmd_quad_split),
    ):
        sub = quad.add_parser(name)
        _add_input(sub)
        sub.set_defaults(handler=fn)

    cubic = top.add_parser("cubic", help="rank-3 tables").add_subparsers(
        dest="cmd", required=True
    )
    for name, fn in (
        ("build", _cmd_cubic_build),
        ("verify", _cmd_cubic_verify),
        ("involution", _cmd_cubic_involution),
        ("witness", _cmd_cubic_witness),
        ("matrix-rep", _cmd_cubic_matrix_rep),
        ("form", _cmd_cubic_form),
    ):
        sub = cubic.add_parser(name)
        _add_input(sub, with_ring=True)
        sub.set_defaults(handler=fn)

    form = top.add_parser("form", help="binary cubic forms").add_subparsers(
        dest="cmd", required=True
    )
    for name, fn in (("disc", _cmd_form_disc), ("act", _cmd_form_act)):
        sub = form.add_parser(name)
        _add_input(sub, with_ring=True)
        sub.set_defaults(handler=fn)

    inv = top.add_parser("inv", help="involutions").add_subparsers(
        dest="cmd", required=True
    )
    for name, fn in (
        ("verify", _cmd_inv_verify),
        ("find", _cmd_inv_find),
        ("trace-norm", _cmd_inv_trace_norm),
    ):
        sub = inv.add_parser(name)
        _add_input(sub)
        sub.set_defaults(handler=fn)

    alg = top.add_parser("alg", help="structure-constant algebras").add_subparsers(
        dest="cmd", required=True
    )
    for name, fn in (
        ("assoc", _cmd_alg_assoc),
        ("degree", _cmd_alg_degree),
        ("charpoly", _cmd_alg_charpoly),
    ):
        sub = alg.add_parser(name)
        _add_input(sub)
        sub.set_defaults(handler=fn)

    census = top.add_parser("census", help="exhaustive small-field surveys").add_subparsers(
        dest="cmd", required=True
    )
    for name, fn in (
        ("cubic", _cmd_census_cubic),
        ("quad", _cmd_census_quad),
        ("exceptional", _cmd_census_exceptional),
    ):
        sub = census.add_parser(name)
        sub.add_argument("--p", type=int, required=True, help="field size (prime)")
        if name != "exceptional":
            _add_format(sub)
        sub.set_defaults(handler=fn)

    probe = top.add_parser("probe", help="degree and matrix-algebra probes").add_subparsers(
        dest="cmd", required=True
    )
    sub = probe.add_parser("mn")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--n", type=int, required=True, choices=(2, 3))
    sub.set_defaults(handler=_cmd_probe_mn)
    sub = probe.add_parser("degree-product")
    _add_input(sub)
    sub.set_defaults(handler=_cmd_probe_degree_product)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except LowrankError as exc:
        payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        violations = getattr(exc, "violations", None)
        if violations is not None:
            payload["error"]["violations"] = violations
        print(json.dumps(payload, indent=2, sort_keys=True), file=sys.stderr)
        return 1
    except InputError as exc:
        payload = {"error": {"type": "InputError", "message": str(exc)}}
        print(json.dumps(payload, indent=2, sort_keys=True), file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
