"""Command line interface.

Verdicts are printed as JSON on stdout.  Exit status: 0 ran, 1 usage or
input error, 2 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .abelian import (
    AbelianHom,
    are_conjugate_abelian,
    are_element_conjugate_abelian,
    are_generator_conjugate,
    cent_signature,
    k_decompose,
)
from .centralizer import DEFAULT_CAP, CapExceededError, sigma_decompose
from .dihedral import (
    DihedralHom,
    are_conjugate_dihedral,
    are_element_conjugate_dihedral,
    reflection_signature,
)
from .oracle import conjugation_orbit, find_hom_conjugator, verify_conjugator
from .perm import PermutationError, cycle_type, cycle_type_on, parse_cycles, restrict


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_hom_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", choices=["abelian", "dihedral"])
    p.add_argument("--n", type=int, required=True, help="degree of the symmetric group")
    for side in ("phi", "psi"):
        for gen in ("a", "b", "r", "s"):
            p.add_argument(f"--{side}-{gen}", metavar="CYCLES")
    p.add_argument("--m", type=int, help="D_2m order parameter (dihedral)")
    p.add_argument("--orders", help="source orders of a,b as 'ma,mb' (abelian, optional)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)


def _homs(args):
    def get(name):
        text = getattr(args, name.replace("-", "_"))
        if text is None:
            raise UsageError(f"--{name} is required for the {args.family} family")
        return parse_cycles(text, args.n)

    if args.family == "abelian":
        orders = tuple(int(x) for x in args.orders.split(",")) if args.orders else None
        return (AbelianHom(get("phi-a"), get("phi-b"), orders),
                AbelianHom(get("psi-a"), get("psi-b"), orders))
    if args.m is None:
        raise UsageError("--m is required for the dihedral family")
    return (DihedralHom(args.m, get("phi-r"), get("phi-s")),
            DihedralHom(args.m, get("psi-r"), get("psi-s")))


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_decide(args) -> None:
    phi, psi = _homs(args)
    if args.family == "abelian":
        decision = are_conjugate_abelian(phi, psi, args.witness, cap=args.cap)
        element = are_element_conjugate_abelian(phi, psi)
    else:
        decision = are_conjugate_dihedral(phi, psi, args.witness, cap=args.cap)
        element = are_element_conjugate_dihedral(phi, psi)
    out = {
        "conjugate": decision.verdict,
        "element_conjugate": element,
        "generator_conjugate": are_generator_conjugate(phi, psi),
        "failed_condition": decision.failed_condition,
    }
    if args.witness:
        w = decision.witness
        if w is not None and not verify_conjugator(w, phi.generators(), psi.generators()):
            raise RuntimeError("witness failed verification")
        out["witness"] = str(w) if w is not None else None
    _emit(out)


def cmd_element(args) -> None:
    phi, psi = _homs(args)
    fn = are_element_conjugate_abelian if args.family == "abelian" else are_element_conjugate_dihedral
    _emit({"element_conjugate": fn(phi, psi)})


def cmd_generator(args) -> None:
    phi, psi = _homs(args)
    _emit({"generator_conjugate": are_generator_conjugate(phi, psi)})


def cmd_oracle(args) -> None:
    phi, psi = _homs(args)
    w = find_hom_conjugator(phi.generators(), psi.generators(), args.cap)
    _emit({"conjugate": w is not None, "witness": str(w) if w is not None else None})


def cmd_signature(args) -> None:
    sigma = parse_cycles(args.sigma, args.n)
    pi = parse_cycles(args.pi, args.n)
    dec = sigma_decompose(sigma)
    if args.family == "abelian":
        blocks = []
        for b in dec.blocks:
            part = restrict(pi, b.support)
            sig = cent_signature(b, part)
            kd = k_decompose(b, part)
            blocks.append({"d": sig.d, "k": b.k, "bar": str(kd.bar.action),
                           "bar_type": list(sig.bar_type),
                           "fixed_exponents": list(sig.fixed_exponents),
                           "orbits": [list(o) for o in sig.orbits]})
        out = {"fix_part_type": list(cycle_type_on(pi, dec.fixed_points)), "blocks": blocks}
    else:
        sig = reflection_signature(dec, pi)
        out = {"fix_part_type": list(sig.fix_part_type),
               "blocks": [{"d": b.d, "k": b.k, "swapped_pairs": b.swapped_pairs,
                           "inverted_in_place": b.inverted_in_place,
                           "block_cycle_type": list(b.block_cycle_type)} for b in sig.blocks]}
    _emit({"sigma": str(sigma), "pi": str(pi), **out})


def cmd_orbit(args) -> None:
    sigma = parse_cycles(args.sigma, args.n)
    pi = parse_cycles(args.pi, args.n)
    orbit = sorted(conjugation_orbit(sigma, pi, args.cap))
    _emit({"sigma": str(sigma), "pi": str(pi), "size": len(orbit),
           "orbit": [str(x) for x in orbit]})


def cmd_census(args) -> None:
    from .census import census_abelian, census_dihedral

    if args.family == "abelian":
        mode = args.mode or "hom-level"
        n_max = args.n_max if args.n_max is not None else (5 if mode == "hom-level" else 8)
        report = census_abelian(n_max, mode, cap=args.cap)
    else:
        mode = args.mode or "hom-level"
        n_max = args.n_max if args.n_max is not None else (6 if mode == "hom-level" else 8)
        report = census_dihedral(n_max, args.m_max, mode, cap=args.cap)
    include_timings = not args.no_timings
    text = report.to_json(include_timings) if args.format == "json" else report.mismatch_csv()
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.figures:
        from .plotting import render_census_figures

        for path in render_census_figures(report, args.figures):
            print(f"wrote {path}", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="homconj", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", help="conjugacy verdict for two homomorphisms")
    _add_hom_flags(p)
    p.add_argument("--witness", action="store_true", help="also return a verified conjugator")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("element-conjugate", help="brute-force element-conjugacy")
    _add_hom_flags(p)
    p.set_defaults(func=cmd_element)

    p = sub.add_parser("generator-conjugate", help="cycle types of generator images")
    _add_hom_flags(p)
    p.set_defaults(func=cmd_generator)

    p = sub.add_parser("oracle", help="exhaustive conjugator search")
    _add_hom_flags(p)
    p.set_defaults(func=cmd_oracle)

    for name, func, helptext in [("signature", cmd_signature, "block signatures of pi over sigma"),
                                 ("orbit", cmd_orbit, "orbit of pi under conjugation by Cent(sigma)")]:
        p = sub.add_parser(name, help=helptext)
        if name == "signature":
            p.add_argument("family", choices=["abelian", "dihedral"])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--sigma", required=True)
        p.add_argument("--pi", required=True)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.set_defaults(func=func)

    p = sub.add_parser("census", help="exhaustive criterion-vs-oracle sweep")
    p.add_argument("--family", choices=["abelian", "dihedral"], required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--mode", choices=["block-level", "hom-level"])
    p.add_argument("--out", help="report path (default: stdout)")
    p.add_argument("--format", choices=["json", "csv"], default="json",
                   help="csv writes the mismatch table only")
    p.add_argument("--figures", metavar="DIR", help="also render PNG figures into DIR")
    p.add_argument("--no-timings", action="store_true",
                   help="omit wall times so identical runs give identical bytes")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_census)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 2
    except (PermutationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
