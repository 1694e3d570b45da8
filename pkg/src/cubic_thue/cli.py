"""Command-line interface.  Every command prints one JSON document.

Exit status: 0 computed, 1 NotApplicable / violations found, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .certifier import Verdict, certify_homogeneous, certify_mordell, certify_thue
from .families import BUILDERS, FamilyId
from .field2adic import (
    DEPTH_ENV_VAR,
    factor_mod2,
    default_depth,
    monic_model,
    splitting_type_2,
    SplittingType2,
)
from .forms import (
    BinaryCubicForm,
    discriminant,
    find_order3_automorphism,
    hessian,
    hessian_cyclic_test,
    is_irreducible,
    is_perfect_square,
    rational_roots,
)
from .oracle import solve_box, verify_valuation_invariant

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2

FAMILY_NAMES = {
    "simplest": FamilyId.SIMPLEST_MN,
    "togbe-washington": FamilyId.TOGBE_WASHINGTON,
    "kishi": FamilyId.KISHI,
    "balady": FamilyId.BALADY,
}


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _int(text: str) -> int:
    try:
        return int(text.strip(), 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None


def _positive(text: str) -> int:
    value = _int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _form(text: str) -> BinaryCubicForm:
    try:
        return BinaryCubicForm.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_range(text: str) -> range:
    """``5`` or ``lo:hi`` (inclusive)."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = _int(lo), _int(hi)
        if lo > hi:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return range(lo, hi + 1)
    n = _int(text)
    return range(n, n + 1)


def _form_json(f: BinaryCubicForm) -> list[str]:
    return [str(c) for c in f]


def cmd_analyze(args) -> tuple[dict, int]:
    f = args.form.require_cubic()
    H = hessian(f)
    M = find_order3_automorphism(f, args.bound)
    disc = discriminant(f)
    doc = {
        "form": _form_json(f),
        "discriminant": str(disc),
        "disc_square": is_perfect_square(disc),
        "hessian": [str(v) for v in H],
        "hessian_content": str(H.content),
        "irreducible": is_irreducible(f),
        "rational_roots": [[str(p), str(q)] for p, q in rational_roots(f)],
        "hessian_cyclic": hessian_cyclic_test(f),
        "automorphism_bound": str(args.bound),
        "order3_automorphism": None if M is None else [str(v) for v in M],
    }
    return doc, EXIT_OK


def cmd_certify(args) -> tuple[dict, int]:
    if args.kind == "mordell":
        if args.t is None:
            raise InputError("--t is required for --kind mordell")
        cert = certify_mordell(*args.form, args.t)
    else:
        if args.k is None:
            raise InputError("--k is required")
        fn = certify_thue if args.kind == "thue" else certify_homogeneous
        cert = fn(args.form, args.k)
    code = EXIT_OK if cert.verdict is Verdict.NO_SOLUTIONS else EXIT_NEGATIVE
    return cert.to_json(), code


def cmd_solve(args) -> tuple[dict, int]:
    return solve_box(args.form, args.k, args.box, jobs=args.jobs).to_json(), EXIT_OK


def _family_entry(inst) -> dict:
    f = inst.form
    disc = discriminant(f)
    a_odd = f.a % 2 == 1
    parity = (f.b * f.c + f.d) % 2 == 1
    irreducible = is_irreducible(f)
    square = is_perfect_square(disc)
    applicable = a_odd and parity and irreducible and square
    claimed = inst.corollary_claims()
    splitting = None
    if irreducible and square and disc:
        splitting = splitting_type_2(monic_model(f)).kind
    flags = []
    if claimed and not applicable:
        flags.append("listed by the corollary but the theorem's hypotheses fail")
        if splitting is SplittingType2.INERT and a_odd:
            flags.append("2 is inert in the field, so nonzero values still have v2 divisible by 3")
    return {
        "family": inst.family_id.value,
        "parameters": {k: str(v) for k, v in inst.parameter_dict().items()},
        "form": _form_json(f),
        "discriminant": str(disc),
        "a_odd": a_odd,
        "bc_plus_d_odd": parity,
        "irreducible": irreducible,
        "disc_square": square,
        "theorem_applicable": applicable,
        "corollary_claims": claimed,
        "splitting_2": None if splitting is None else splitting.value,
        "flags": flags,
    }


def cmd_family(args) -> tuple[dict, int]:
    fid = FAMILY_NAMES[args.name]
    build = BUILDERS[fid]
    entries = []
    if fid is FamilyId.SIMPLEST_MN:
        for m in args.m:
            if m == 0:
                raise InputError("m must be nonzero")
            for n in args.n:
                entries.append(_family_entry(build(m, n)))
    else:
        entries = [_family_entry(build(n)) for n in args.n]
    return {"family": fid.value, "instances": entries}, EXIT_OK


def cmd_field(args) -> tuple[dict, int]:
    g = monic_model(args.form)
    kind, text = factor_mod2(g)
    split = splitting_type_2(g, args.depth)
    doc = {
        "form": _form_json(args.form),
        "monic_model": [str(v) for v in g.coefficients],
        "disc_g": str(g.disc_g),
        "factor_mod2": {"type": kind.value, "factors": text},
        "depth": str(split.depth),
        "splitting_type_2": split.kind.value,
        "roots_mod_2^depth": [str(r) for r in split.roots],
        "common_index_divisor_2": split.kind is SplittingType2.TOTALLY_SPLIT,
    }
    return doc, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    report = verify_valuation_invariant(args.form, args.box)
    return report.to_json(), EXIT_OK if report.ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubic-thue", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--out", help="also write the JSON document to this file")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="invariants, irreducibility, automorphisms")
    p.add_argument("--form", type=_form, required=True, help="a,b,c,d")
    p.add_argument("--bound", type=_positive, default=4, help="automorphism entry bound")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="insolvability certificate")
    p.add_argument("--form", type=_form, required=True, help="a,b,c,d")
    p.add_argument("--k", type=_int)
    p.add_argument("--t", type=_int, help="right-hand coefficient for --kind mordell")
    p.add_argument("--kind", choices=("thue", "homogeneous", "mordell"), default="thue")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("solve", help="exhaustive search in a box")
    p.add_argument("--form", type=_form, required=True, help="a,b,c,d")
    p.add_argument("--k", type=_int, required=True)
    p.add_argument("--box", type=_positive, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("family", help="instances of a parametric family")
    p.add_argument("--name", choices=sorted(FAMILY_NAMES), required=True)
    p.add_argument("--m", type=_int_range, default=range(1, 2), help="m or lo:hi (simplest only)")
    p.add_argument("--n", type=_int_range, required=True, help="n or lo:hi")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("field", help="splitting of 2 and common index divisor")
    p.add_argument("--form", type=_form, required=True, help="a,b,c,d")
    p.add_argument("--depth", type=_positive, default=None,
                   help=f"2-adic lifting depth (default ${DEPTH_ENV_VAR} or 64)")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("verify", help="valuation sweep over a box")
    p.add_argument("--form", type=_form, required=True, help="a,b,c,d")
    p.add_argument("--box", type=_positive, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def _emit_error(message: str) -> int:
    sys.stderr.write(json.dumps({"error": message}, sort_keys=True) + "\n")
    return EXIT_INPUT


_VALUE_FLAGS = {"--form", "--k", "--t", "--m", "--n"}


def _glue_values(argv: list[str]) -> list[str]:
    # argparse takes "-1,2,3,4" or "-3:3" for an option; glue it to its flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_glue_values(list(argv)))
        if getattr(args, "depth", None) is None and args.command == "field":
            args.depth = default_depth()
        doc, code = args.func(args)
    except SystemExit as exc:
        # --help / --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except (InputError, ValueError) as exc:
        return _emit_error(str(exc))
    text = json.dumps(doc, sort_keys=True, indent=2)
    sys.stdout.write(text + "\n")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
