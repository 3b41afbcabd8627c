"""Command-line front end.

Examples::

    semirep analyze --input builtin:"M(2,2)" --char 0 --json
    semirep zmud --group builtin:"symmetric(3)" --normal "alternating(3)" --char 3
    semirep construct --builtin "QG(cyclic(4))" --out qz4.cayley
    semirep oracle --max-order 24
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from sympy import isprime

from .analyzer import analyze
from .congruence import all_ggm_congruences, classify_j_classes, ggm_all
from .constructions import BUILTIN_NAMES, builtin, locate_subgroup
from .core import Semigroup, format_cayley, read_cayley, read_transformations
from .errors import SemirepError
from .green import compute_green, j_order
from .grouptheory import as_group, as_normal, intersect_with_normal, socle_data
from .zmud import zmud_number

log = logging.getLogger("semirep")


def characteristic(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if p != 0 and not isprime(p):
        raise argparse.ArgumentTypeError(f"characteristic must be 0 or a prime, got {p}")
    return p


def load(source: str, *, check=True) -> Semigroup:
    """builtin:EXPR, trans:PATH, a *.trans file, or a Cayley file."""
    if source.startswith("builtin:"):
        return builtin(source[len("builtin:"):])
    if source.startswith("trans:"):
        return read_transformations(source[len("trans:"):])
    if source.endswith(".trans"):
        return read_transformations(source)
    return read_cayley(source, check=check)


def resolve_normal(G, spec: str | None, soc=None):
    """--normal: whole, trivial, socle, A, T, an index list or a builtin matched by labels."""
    if spec is None or spec == "whole":
        return G.whole()
    if spec == "trivial":
        return G.trivial()
    if spec in ("socle", "A", "T"):
        soc = soc or socle_data(G)
        return {"socle": soc.socle, "A": soc.A, "T": soc.T}[spec]
    if spec[0].isdigit():
        idx = [int(x) for x in spec.replace(",", " ").split()]
    else:
        expr = spec[len("builtin:"):] if spec.startswith("builtin:") else spec
        idx = locate_subgroup(G.parent, builtin(expr))
    return as_normal(G, idx)


def _labels(S: Semigroup, xs) -> str:
    return "{" + ", ".join(S.labels[x] for x in xs) + "}"


# -- subcommands --------------------------------------------------------------


def cmd_green(S: Semigroup, args) -> tuple[dict, str]:
    green = compute_green(S)
    order = j_order(green)
    classes = [
        {
            "j": J.id,
            "elements": list(J.elements),
            "regular": J.regular,
            "idempotents": list(J.idempotents),
            "covers": [a for a, b in order.covers if b == J.id],
        }
        for J in green.j_classes
    ]
    lines = [f"{S.n} elements, {len(classes)} J-classes"]
    for c in classes:
        tag = "regular" if c["regular"] else "null"
        lines.append(f"  J{c['j']} ({tag}, size {len(c['elements'])}): {_labels(S, c['elements'])}"
                     f"  covers {c['covers']}")
    return {"n": S.n, "j_classes": classes}, "\n".join(lines)


def cmd_congruence(S: Semigroup, args) -> tuple[dict, str]:
    green = compute_green(S)
    congs = all_ggm_congruences(S, green)
    ggm = ggm_all(S, green, congs)
    info = classify_j_classes(S, green, congs)
    rows = [
        {"j": j, "num_classes": c.num_classes, "trivial": c.is_trivial, "irreducible": info.irreducible[j]}
        for j, c in sorted(congs.items())
    ]
    data = {
        "ggm_trivial": ggm.is_trivial,
        "ggm_witness": list(ggm.witness) if ggm.witness else None,
        "classes": rows,
    }
    lines = [f"GGM trivial: {ggm.is_trivial}" + (f" (witness {ggm.witness})" if ggm.witness else "")]
    lines += ["  J   classes  trivial  irreducible"]
    lines += [f"  {r['j']:<3} {r['num_classes']:<8} {str(r['trivial']):<8} {r['irreducible']}" for r in rows]
    return data, "\n".join(lines)


def cmd_socle(S: Semigroup, args) -> tuple[dict, str]:
    G = as_group(S)
    soc = socle_data(G)
    data = {
        "order": G.order,
        "minimal_normals": [list(M.sorted) for M in soc.minimal_normals],
        "abelian": list(soc.abelian),
        "A": list(soc.A.sorted),
        "T": list(soc.T.sorted),
        "socle": list(soc.socle.sorted),
    }
    lines = [f"|G| = {G.order}, {len(soc.minimal_normals)} minimal normal subgroups"]
    for M, ab in zip(soc.minimal_normals, soc.abelian):
        lines.append(f"  {'abelian   ' if ab else 'nonabelian'} {_labels(S, M.sorted)}")
    lines.append(f"|A| = {soc.A.order}, |T| = {soc.T.order}, |S| = {soc.socle.order}")
    if args.normal is not None:
        N = resolve_normal(G, args.normal, soc)
        inter = intersect_with_normal(G, soc, N)
        data["N"] = list(N.sorted)
        data["A_cap_N"] = list(inter.A.sorted)
        data["T_cap_N"] = list(inter.T.sorted)
        data["S_cap_N"] = list(inter.S.sorted)
        lines.append(f"|N| = {N.order}: |A∩N| = {inter.A.order}, |T∩N| = {inter.T.order}, "
                     f"|S∩N| = {inter.S.order}")
    return data, "\n".join(lines)


def cmd_zmud(S: Semigroup, args) -> tuple[dict, str]:
    G = as_group(S)
    N = resolve_normal(G, args.normal)
    res = zmud_number(G, N, args.char)
    if res.exists:
        text = f"char {res.p}: exists, k = {res.k}, witness {_labels(S, res.witness)}"
    else:
        text = f"char {res.p}: no completely reducible representation faithful on N (obstruction {res.obstruction})"
    return res.to_dict(), text


def cmd_analyze(S: Semigroup, args) -> tuple[dict, str]:
    report = analyze(S, args.char)
    lines = [f"char {report.char}, |S| = {S.n}, GGM trivial: {report.ggm_trivial}"]
    lines.append("  J   irr    |G_J|  |N_J|  |A∩N|  k_J")
    for r in report.rows:
        lines.append(f"  {r.j:<3} {str(r.irreducible):<6} {r.gj_order:<6} {r.nj_order:<6} "
                     f"{r.a_cap_n_order:<6} {r.k_j}" + ("  obstructed" if r.obstruction else ""))
    if report.exists:
        lines.append(f"exists: true, k_total = {report.k_total}")
    else:
        lines.append("exists: false")
    if report.obstruction_primes is not None:
        lines.append(f"obstruction primes: {{{', '.join(map(str, report.obstruction_primes))}}}")
    return report.to_dict(), "\n".join(lines)


def run_oracle(args) -> int:
    from .corpus import run_suite

    log.info("oracle suite: max order %d, seed %d", args.max_order, args.seed)
    checks = run_suite(args.max_order, args.seed)
    failed = [c for c in checks if not c.ok]
    if args.json:
        text = json.dumps(
            {
                "seed": args.seed,
                "max_order": args.max_order,
                "checks": len(checks),
                "failed": [{"name": c.name, "detail": c.detail} for c in failed],
            },
            indent=2,
        )
    else:
        lines = [f"FAIL {c.name}: {c.detail}" for c in failed]
        lines.append(f"seed {args.seed}: {len(checks) - len(failed)}/{len(checks)} checks passed")
        text = "\n".join(lines)
    emit(text, args.out)
    return 1 if failed else 0


def run_construct(args) -> int:
    expr = args.builtin
    if expr is None:
        if args.input is None:
            raise UsageError("construct needs --builtin EXPR or --input SOURCE")
        S = load(args.input, check=not args.skip_assoc_check)
    else:
        S = builtin(expr)
    emit(format_cayley(S).rstrip("\n"), args.out)
    return 0


COMMANDS = {
    "green": cmd_green,
    "congruence": cmd_congruence,
    "socle": cmd_socle,
    "zmud": cmd_zmud,
    "analyze": cmd_analyze,
}


class UsageError(Exception):
    pass


def emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--skip-assoc-check", action="store_true",
                        help="trust Cayley files without the associativity audit")
    common.add_argument("-v", "--verbose", action="store_true")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--input", "--group", dest="input", required=True,
                        help="builtin:EXPR, trans:PATH, a .trans file or a Cayley file")

    ap = argparse.ArgumentParser(
        prog="semirep",
        description="Faithful completely reducible representations of finite semigroups.",
        epilog="builtins: " + ", ".join(BUILTIN_NAMES),
    )
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("green", parents=[common, source], help="Green's relations and the J-order")
    sub.add_parser("congruence", parents=[common, source], help="≡_J congruences and GGM")
    p = sub.add_parser("socle", parents=[common, source], help="socle of a group")
    p.add_argument("--normal", help="also intersect with this normal subgroup")
    p = sub.add_parser("zmud", parents=[common, source], help="CR representations faithful on N")
    p.add_argument("--normal", default="whole",
                   help="whole, trivial, socle, A, T, an index list, or a builtin matched by labels")
    p.add_argument("--char", type=characteristic, default=0)
    p = sub.add_parser("analyze", parents=[common, source], help="minimal faithful CR length")
    p.add_argument("--char", type=characteristic, default=0)
    p = sub.add_parser("construct", parents=[common], help="write a Cayley file for a builtin")
    p.add_argument("--builtin", help="builtin expression, e.g. 'QG(cyclic(4))'")
    p.add_argument("--input", "--group", dest="input")
    p = sub.add_parser("oracle", parents=[common], help="run the brute-force cross-check suite")
    p.add_argument("--max-order", type=int, default=24, help="largest group order in the suite")
    p.add_argument("--seed", type=int, default=0)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)  # exits with status 2 on usage errors
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "oracle":
            return run_oracle(args)
        if args.command == "construct":
            return run_construct(args)
        S = load(args.input, check=not args.skip_assoc_check)
        data, text = COMMANDS[args.command](S, args)
    except UsageError as exc:
        ap.print_usage(sys.stderr)
        print(f"semirep: error: {exc}", file=sys.stderr)
        return 2
    except (SemirepError, OSError) as exc:
        print(f"semirep: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    emit(json.dumps(data, indent=2) if args.json else text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
