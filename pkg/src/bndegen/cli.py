"""Command-line entry point. Parsing and formatting only; all work is delegated."""

from __future__ import annotations

import argparse
import json
import sys

from .bn_analyzer import BNInput, InvalidInput, analyze, classical_wrd, dumps, invalid_report
from .bruhat import ReducedWordCapExceeded, reduced_words, reduced_words_count, smoothness_witness
from .dot_array import DotArray, essential_set, to_confined
from .flag_pairs import adapted_basis, associated_permutation, meet_dim, random_flag_pair
from .linalg import field_from_spec
from .perm_core import WindowPermutation
from .schubert_poly import bjs_schubert

EXIT_INVALID = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _perm(text: str) -> WindowPermutation:
    try:
        return WindowPermutation(tuple(int(t) for t in text.replace(" ", "").split(",") if t))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dots(text: str) -> DotArray:
    try:
        return DotArray.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _format_report(report) -> str:
    lines = [
        f"rho: {report.rho}",
        f"codim: {report.codim}",
        f"nonempty: {str(report.nonempty).lower()}",
        f"chow: {report.chow[0]} Theta^{report.chow[1]}",
    ]
    if report.point_count is not None:
        lines.append(f"point_count: {report.point_count}")
    lines.append("essential_set: " + " ".join(f"({a},{b})" for a, b in report.essential_set))
    pi = report.confined_perm
    lines.append(f"confined_perm: tail n -> {pi.tail_shift} - n, window [{pi.lo},{pi.hi}] = "
                 + ",".join(map(str, pi.table)))
    if report.pi_prime is not None:
        pp = report.pi_prime
        lines.append(f"pi_prime: M={pp.M} N={pp.N} d'={pp.d_prime} n={pp.n} map={pp.perm}")
        lines.append(f"schubert_smooth: {str(report.schubert_smooth).lower()}")
    lines.append(f"dim_coupled_tensors: {report.dim_coupled_tensors}")
    if report.singular_strata is not None:
        lines.append("singular_strata: " + " ".join(f"[{s}]" for s in report.singular_strata))
    return "\n".join(lines)


def _emit_report(inp: BNInput, run, as_json: bool) -> int:
    try:
        report = run()
    except InvalidInput as exc:
        if as_json:
            print(dumps(invalid_report(inp, str(exc))))
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(dumps(report) if as_json else _format_report(report))
    return 0


def cmd_analyze(args) -> int:
    inp = BNInput(args.genus, args.degree, args.dots)
    return _emit_report(inp, lambda: analyze(inp), args.json)


def cmd_wrd(args) -> int:
    inp = BNInput(args.genus, args.degree, DotArray.antidiagonal(max(args.rank, 0)))
    return _emit_report(inp, lambda: classical_wrd(args.genus, args.degree, args.rank), args.json)


def cmd_confine(args) -> int:
    pi = to_confined(args.dots, args.degree, args.genus)
    print(f"tail: n -> {pi.tail_shift} - n")
    for n, v in pi.items():
        print(f"{n}\t{v}")
    return 0


def cmd_ess(args) -> int:
    print(" ".join(f"({a},{b})" for a, b in sorted(essential_set(args.dots))))
    return 0


def cmd_schubert(args) -> int:
    print(bjs_schubert(args.perm))
    return 0


def cmd_reduced_words(args) -> int:
    if args.count_only:
        print(reduced_words_count(args.perm))
        return 0
    for word in reduced_words(args.perm):
        print(" ".join(map(str, word)))
    return 0


def cmd_smooth(args) -> int:
    witness = smoothness_witness(args.perm)
    if witness is None:
        print("smooth")
    else:
        name, positions = witness
        print(f"singular: pattern {name} at positions {','.join(map(str, positions))}")
    return 0


def cmd_flags(args) -> int:
    field = field_from_spec(args.field)
    sigma = args.perm
    pair = random_flag_pair(sigma, field=field, seed=args.seed)
    recovered = associated_permutation(pair)
    basis = adapted_basis(pair)
    n = sigma.n
    out = {
        "adapted_basis": [[field.to_json(x) for x in v] for v in basis],
        "field": field.name,
        "meet_dims": [[meet_dim(pair, a, b) for b in range(n + 1)] for a in range(n + 1)],
        "pair": pair.to_json(),
        "recovered": list(recovered.images),
        "round_trip": recovered == sigma,
        "seed": args.seed,
        "sigma": list(sigma.images),
    }
    print(json.dumps(out, sort_keys=True))
    return 0 if recovered == sigma else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bndegen", description="Brill-Noether degeneracy loci from dot arrays.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="full report for a dot array")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--dots", type=_dots, required=True, help='e.g. "0:1,2:0,3:3"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("wrd", help="report for the classical locus W^r_d")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_wrd)

    p = sub.add_parser("confine", help="window table of the confined permutation")
    p.add_argument("--dots", type=_dots, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_confine)

    p = sub.add_parser("ess", help="essential set of a dot array")
    p.add_argument("--dots", type=_dots, required=True)
    p.set_defaults(func=cmd_ess)

    p = sub.add_parser("schubert", help="Schubert polynomial of a permutation")
    p.add_argument("--perm", type=_perm, required=True, help='0-indexed one-line, e.g. "2,0,1"')
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("reduced-words", help="reduced words of a permutation")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_reduced_words)

    p = sub.add_parser("smooth", help="smoothness of the Schubert variety")
    p.add_argument("--perm", type=_perm, required=True)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("flags", help="random flag pair round trip")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--field", default="q", help='"q" or a prime, e.g. "101" or "prime 101"')
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_flags)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ReducedWordCapExceeded) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
