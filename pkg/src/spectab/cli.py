"""Command-line front end.  Prints JSON; ``--pretty`` prints an aligned table instead.

Exit status: 0 on success, 1 on malformed arguments, 2 when the arguments
parse but violate a mathematical precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from .charge import ChargeError, charge_standard, charge_word, extract_standard_subwords, format_word, parse_word
from .crystal import CrystalElement, CrystalError, WeightK, energy
from .shapes import Composition, Partition, ShapeError, SkewShape
from .spectral import (
    SpectralError,
    branching_approximant,
    brute_force_path_sum,
    character_partial_sum,
    enumerate_spectrum,
    truncated_character,
    truncated_character_general,
)
from .symfunc import SymfuncError, kostka_foulkes, kostka_number, lr0_count, spectral_sum
from .tableaux import (
    Tableau,
    TableauError,
    descent_multiplicities,
    descents_exponents,
    is_lattice_word,
    is_nonmovable,
    reading_word,
    theta_d,
    theta_nu,
)

DOMAIN_ERRORS = (ChargeError, CrystalError, ShapeError, SpectralError, SymfuncError, TableauError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _graded_json(graded: dict) -> dict[str, Any]:
    return {f"q^{d}": m.to_json() for d, m in sorted(graded.items())}


def cmd_charge(args: argparse.Namespace) -> dict[str, Any]:
    word = parse_word(args.word)
    subwords = extract_standard_subwords(word)
    return {
        "charge": charge_word(word),
        "subwords": [format_word(w) for w in subwords],
        "subword_charges": [charge_standard(w) for w in subwords],
    }


def cmd_exponents(args: argparse.Namespace) -> dict[str, Any]:
    t = Tableau.parse(args.tableau)
    content = Composition.parse(args.content).parts
    out: dict[str, Any] = {"zeta": list(descent_multiplicities(t, len(content)))}
    out["d"] = list(descents_exponents(t, content))
    if not t.shape.is_straight():
        out["d_extended"] = list(descents_exponents(t, content, extended=True))
    return out


def cmd_theta(args: argparse.Namespace) -> dict[str, Any]:
    t = Tableau.parse(args.tableau)
    content = Composition.parse(args.content).parts
    if args.nu is not None:
        u = theta_nu(t, Composition.parse(args.nu).parts, content)
    else:
        u = theta_d(t, content)
    word = reading_word(u)
    return {
        "shape": str(u.shape),
        "tableau": str(u),
        "reading_word": format_word(word),
        "lattice": is_lattice_word(word),
        "nonmovable": is_nonmovable(u),
    }


def cmd_kostka(args: argparse.Namespace) -> dict[str, Any]:
    return {"kostka": kostka_number(SkewShape.parse(args.shape), Composition.parse(args.content).parts)}


def cmd_kostka_foulkes(args: argparse.Namespace) -> dict[str, Any]:
    lam = Partition.parse(args.shape)
    mu = Composition.parse(args.content).parts
    if args.experiment_nonrect:
        variant = "ind" if args.method == "spectral-ind" else "c"
        by_charge = kostka_foulkes(lam, mu, "charge")
        by_spectrum = spectral_sum(lam, mu, variant)
        return {
            "charge": by_charge.to_json(),
            "spectral": by_spectrum.to_json(),
            "difference": (by_charge - by_spectrum).to_json(),
        }
    return kostka_foulkes(lam, mu, args.method).to_json()


def cmd_lr0(args: argparse.Namespace) -> dict[str, Any]:
    return {"lr0": lr0_count(SkewShape.parse(args.shape), Partition.parse(args.content), args.method)}


def cmd_energy(args: argparse.Namespace) -> dict[str, Any]:
    b1 = CrystalElement.parse(args.b1, args.n)
    b2 = CrystalElement.parse(args.b2, args.n)
    return {"energy": energy(b1, b2, args.method)}


def _weight(text: str, l: int | None = None, n: int | None = None) -> WeightK:
    K = WeightK.parse(text)
    if l is not None and K.level != l:
        raise SpectralError(f"K={K} has level {K.level}, not {l}")
    if n is not None and K.n != n:
        raise SpectralError(f"K={K} has length {K.n}, not {n}")
    return K


def cmd_spectrum(args: argparse.Namespace) -> dict[str, Any]:
    K = _weight(args.K, args.l, args.n)
    points = sorted(enumerate_spectrum(K, args.max_degree), key=lambda p: (p.energy, len(p.h_fin), p.h_fin))
    return {
        "points": [
            {"h": list(p.h_fin), "energy": p.energy, "kappa": str(p.kappa())} for p in points
        ]
    }


def cmd_character(args: argparse.Namespace) -> dict[str, Any]:
    K = _weight(args.K)
    if args.method == "paths":
        return _graded_json(brute_force_path_sum(K, args.max_degree))
    return _graded_json(character_partial_sum(K, args.max_degree))


def cmd_truncated(args: argparse.Namespace) -> dict[str, Any]:
    if "," in args.k:
        K = _weight(args.k, args.l, args.n)
        method = {"paths": "paths", "g": "g"}.get(args.method)
        if method is None:
            raise SpectralError(f"method {args.method!r} applies only to l Lambda_k")
        return truncated_character_general(K, args.m, method).to_json()
    if args.l is None or args.n is None:
        raise UsageError("--l and --n are required with an integer k")
    if args.method == "g":
        raise SpectralError("method 'g' needs a full weight K")
    return truncated_character(int(args.k), args.m, args.l, args.n, args.method).to_json()


def cmd_branching(args: argparse.Namespace) -> dict[str, Any]:
    return branching_approximant(Partition.parse(args.shape), _weight(args.K), args.N, args.variant).to_json()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spectab", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable[[argparse.Namespace], dict], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("charge", cmd_charge, "charge of a word of dominant weight")
    p.add_argument("word")

    p = add("exponents", cmd_exponents, "descent multiplicities and exponents of a tableau")
    p.add_argument("tableau")
    p.add_argument("content")

    p = add("theta", cmd_theta, "the map to nonmovable LR tableaux")
    p.add_argument("tableau")
    p.add_argument("content")
    p.add_argument("--nu", help="explicit offset vector instead of the tableau's exponents")

    p = add("kostka", cmd_kostka, "Kostka number")
    p.add_argument("shape")
    p.add_argument("content")

    p = add("kostka-foulkes", cmd_kostka_foulkes, "Kostka-Foulkes polynomial")
    p.add_argument("shape")
    p.add_argument("content")
    p.add_argument("--method", choices=("charge", "spectral-c", "spectral-ind"), default="charge")
    p.add_argument("--experiment-nonrect", action="store_true", help="compare charge and spectral sums")

    p = add("lr0", cmd_lr0, "number of nonmovable LR tableaux")
    p.add_argument("shape", help="outer/inner")
    p.add_argument("content")
    p.add_argument("--method", choices=("enumerate", "inclexcl", "inclexcl-rowwise"), default="enumerate")

    p = add("energy", cmd_energy, "energy function of a pair of one-row crystal elements")
    p.add_argument("b1")
    p.add_argument("b2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("component", "offset", "min-perm"), default="offset")

    p = add("spectrum", cmd_spectrum, "spectrum points up to a degree")
    p.add_argument("K")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)

    p = add("character", cmd_character, "q-graded character partial sum")
    p.add_argument("K")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--method", choices=("spectrum", "paths"), default="spectrum")

    p = add("truncated", cmd_truncated, "truncated character in the Schur basis")
    p.add_argument("k", help="integer k for l Lambda_k, or a full weight k_1,..,k_n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=("paths", "spectral", "kostka", "g"), default="paths")

    p = add("branching", cmd_branching, "normalized branching-function approximant")
    p.add_argument("shape")
    p.add_argument("K")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--variant", choices=("rectangular", "general"), default="rectangular")
    return parser


def _pretty(data: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(data, dict):
        if not data:
            return [pad + "(empty)"]
        width = max(len(str(k)) for k in data)
        lines = []
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value and not _is_flat_list(value):
                lines.append(f"{pad}{key}")
                lines.extend(_pretty(value, indent + 1))
            else:
                lines.append(f"{pad}{str(key).ljust(width)}  {_scalar(value)}")
        return lines
    if isinstance(data, list):
        lines = []
        for item in data:
            lines.extend(_pretty(item, indent))
            if isinstance(item, dict):
                lines.append("")
        return lines
    return [pad + _scalar(data)]


def _is_flat_list(value: Any) -> bool:
    return isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value)


def _scalar(value: Any) -> str:
    if isinstance(value, list):
        return " ".join(map(str, value))
    if isinstance(value, dict):
        return "(empty)"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        print(f"spectab: {exc}", file=sys.stderr)
        return 1
    except DOMAIN_ERRORS as exc:
        print(f"spectab: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"spectab: cannot parse arguments: {exc}", file=sys.stderr)
        return 1
    if args.pretty:
        print("\n".join(_pretty(result)).rstrip())
    else:
        print(json.dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
