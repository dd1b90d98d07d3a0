"""Command-line front end.

Subcommands:
  mobius poset FILE [--interval LO HI]
  mobius dirichlet --n N [--check]
  mobius abstract --coalgebra {nat|divisors|poset:FILE|forest} --phi {zeta|file:PATH} [--evenodd]
  antipode --max-degree D
  renorm bphz --char FILE --max-degree D [--atkinson]

Exit codes: 0 success, 1 input error, 2 violated mathematical postcondition.
Output is deterministic for fixed input; --format tsv emits tab-separated
values without alignment padding.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import LAURENT, RATIONALS
from .bialgebra import antipode
from .coalgebra import moebius_invert_evenodd, moebius_invert_recursive, zeta
from .errors import (
    CycleDetected,
    InsufficientPrecision,
    MissingAssignment,
    MobiusError,
    NonCommutativeTarget,
    NotUnitOnGrouplike,
    ParseError,
    PolePresent,
    UnitNotInKerR,
)
from .incidence import (
    divisibility_coalgebra,
    dirichlet_convolve,
    eps_fn,
    interval_coalgebra,
    iota_fn,
    load_poset,
    mu_fn,
    nat_plus_coalgebra,
    zeta_fn,
)
from .renorm import atkinson_counterterm, birkhoff, bogoliubov_counterterm, pole_part_rb
from .trees import forest_bialgebra, format_forest, load_character_file, toy_character

INPUT_ERRORS = (
    ParseError,
    CycleDetected,
    MissingAssignment,
    NotUnitOnGrouplike,
    NonCommutativeTarget,
    UnitNotInKerR,
    OSError,
    ValueError,
)
MATH_ERRORS = (PolePresent, InsufficientPrecision, AssertionError)


class _CheckFailed(AssertionError):
    """A --check verification did not hold."""


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract here is 1.
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _render(header, rows, fmt):
    if fmt == "tsv":
        lines = ["\t".join(header)]
        lines.extend("\t".join(row) for row in rows)
        return "\n".join(lines)
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def pad(cells):
        padded = [c.ljust(widths[i]) for i, c in enumerate(cells)]
        return "  ".join(padded).rstrip()
    return "\n".join([pad(header)] + [pad(r) for r in rows])


def _cmd_mobius_poset(args):
    poset = load_poset(args.file)
    coalg = interval_coalgebra(poset)
    mu = moebius_invert_recursive(zeta(coalg, RATIONALS))
    if args.interval is not None:
        lo, hi = args.interval
        if lo not in poset.elements or hi not in poset.elements:
            raise ValueError(f"unknown element in interval ({lo}, {hi})")
        if not poset.leq(lo, hi):
            raise ValueError(f"{lo} is not below {hi}")
        print(f"mu = {mu((lo, hi))}")
        return 0
    rows = [[str(lo), str(hi), str(mu((lo, hi)))] for lo, hi in poset.intervals()]
    print(_render(["lo", "hi", "mu"], rows, args.format))
    return 0


def _cmd_mobius_dirichlet(args):
    n = args.n
    if n < 1:
        raise ValueError("--n must be >= 1")
    mu = mu_fn(n)
    phi = dirichlet_convolve(iota_fn(n), mu)
    if args.format == "tsv":
        rows = [[str(k), str(mu(k)), str(phi(k))] for k in range(1, n + 1)]
    else:
        rows = [[str(k), f"mu={mu(k)}", f"phi={phi(k)}"] for k in range(1, n + 1)]
    print(_render(["n", "mu", "phi"], rows, args.format))
    if args.check:
        if dirichlet_convolve(mu, zeta_fn(n)) != eps_fn(n):
            raise _CheckFailed("mu * zeta != epsilon")
        if dirichlet_convolve(phi, zeta_fn(n)) != iota_fn(n):
            raise _CheckFailed("phi * zeta != iota")
        print(f"check: mu*zeta = epsilon up to {n}: ok")
        print(f"check: phi*zeta = iota up to {n}: ok")
    return 0


def _abstract_setup(args):
    kind = args.coalgebra
    if kind == "nat":
        coalg = nat_plus_coalgebra()
        keys = list(range(args.max_degree + 1))
        fmt_key = str
    elif kind == "divisors":
        coalg = divisibility_coalgebra(args.n)
        keys = coalg.basis_up_to(args.max_degree)
        fmt_key = str
    elif kind.startswith("poset:"):
        poset = load_poset(kind[len("poset:"):])
        coalg = interval_coalgebra(poset)
        keys = coalg.basis_up_to(args.max_degree)
        fmt_key = lambda k: f"[{k[0]},{k[1]}]"
    elif kind == "forest":
        coalg = forest_bialgebra(args.max_degree)
        keys = coalg.basis_up_to(args.max_degree)
        fmt_key = format_forest
    else:
        raise ValueError(f"unknown coalgebra {kind!r}")

    if args.phi == "zeta":
        phi = zeta(coalg, RATIONALS)
    elif args.phi.startswith("file:"):
        if kind != "forest":
            raise ValueError("a character file needs --coalgebra forest")
        assign = load_character_file(args.phi[len("file:"):])
        phi = toy_character(assign, args.max_degree)
    else:
        raise ValueError(f"unknown phi {args.phi!r}")
    return coalg, phi, keys, fmt_key


def _cmd_mobius_abstract(args):
    _, phi, keys, fmt_key = _abstract_setup(args)
    invert = moebius_invert_evenodd if args.evenodd else moebius_invert_recursive
    psi = invert(phi)
    rows = [[fmt_key(k), str(psi(k))] for k in keys]
    print(_render(["key", "psi"], rows, args.format))
    return 0


def _cmd_antipode(args):
    bialg = forest_bialgebra(args.max_degree)
    s = antipode(bialg)
    rows = [
        [format_forest(f), s(f).to_str(format_forest)]
        for f in bialg.basis_up_to(args.max_degree)
    ]
    print(_render(["forest", "antipode"], rows, args.format))
    return 0


def _cmd_renorm_bphz(args):
    assign = load_character_file(args.char)
    bialg = forest_bialgebra(args.max_degree)
    phi = toy_character(assign, args.max_degree)
    rb = pole_part_rb()
    pair = birkhoff(phi, rb)
    minus = atkinson_counterterm(phi, rb) if args.atkinson else pair.minus
    rows = []
    for f in bialg.basis_up_to(args.max_degree):
        plus_val = pair.plus(f)
        rows.append(
            [
                format_forest(f),
                str(phi(f)),
                str(minus(f)),
                str(plus_val),
                str(plus_val.eval_at_zero()),
            ]
        )
    print(_render(["forest", "phi", "phi_minus", "phi_plus", "value"], rows, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mobren", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    mob = sub.add_parser("mobius", help="Moebius inversion commands")
    mobsub = mob.add_subparsers(dest="subcommand", required=True)

    p = mobsub.add_parser("poset", help="Moebius function of a poset file")
    p.add_argument("file")
    p.add_argument("--interval", nargs=2, metavar=("LO", "HI"))
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=_cmd_mobius_poset)

    p = mobsub.add_parser("dirichlet", help="classical mu and totient table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=_cmd_mobius_dirichlet)

    p = mobsub.add_parser("abstract", help="invert a map on a chosen coalgebra")
    p.add_argument("--coalgebra", required=True)
    p.add_argument("--phi", default="zeta")
    p.add_argument("--evenodd", action="store_true")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--n", type=int, default=60, help="bound for the divisor coalgebra")
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=_cmd_mobius_abstract)

    p = sub.add_parser("antipode", help="antipode on rooted forests")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=_cmd_antipode)

    ren = sub.add_parser("renorm", help="renormalisation commands")
    rensub = ren.add_subparsers(dest="subcommand", required=True)
    p = rensub.add_parser("bphz", help="Birkhoff decomposition of a toy character")
    p.add_argument("--char", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--atkinson", action="store_true")
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=_cmd_renorm_bphz)

    return parser


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the documented exit code."""
    if isinstance(exc, MATH_ERRORS):
        return 2
    if isinstance(exc, (_UsageError,) + INPUT_ERRORS):
        return 1
    raise exc


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (MobiusError, _UsageError, OSError, ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)


def main():
    sys.exit(run(sys.argv[1:]))
