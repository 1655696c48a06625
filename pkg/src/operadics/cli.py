"""
Command-line interface: batch computation and verification.

Every subcommand is deterministic given the same inputs and the same
``--seed``/``--budget`` flags (randomized law checks default both, so runs
are reproducible without any flags).  Exit codes are uniform:

    0   success / the queried relation holds
    1   semantic negative — words unequal, a law fails, criterion says NO
    2   usage or parse error (reported on standard error)

Input formats are the module text formats: braid words are space-separated
nonzero letters (``1 -2 1``), permutations are space-separated image lines
(``2 3 1``), and operad files are the JSON documents produced by
``write_operad_document``.  Operad file arguments resolve against the
packaged examples (``comm.json``, ``ass.json``, ``comm_trivial.json``)
when no file of that name exists in the working directory.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import braids
from .action_operads import (
    ActionOperad,
    check_axioms,
    instance_braid,
    instance_symmetric,
    instance_trivial,
)
from .braids import BraidWord, format_word, parse_word
from .free_monad import (
    cartesian_condition,
    check_monad_laws,
    free_algebra,
    pullback_witness_test,
)
from .g_operads import (
    FiniteGCollection,
    FiniteGOperad,
    check_operad,
    compose_collections,
    load_operad,
    operad_comm,
    unit_collection,
)
from .permutations import (
    Permutation,
    compose,
    format_permutation,
    inverse,
    mu_sigma,
    parse_permutation,
    tau,
)
from .pseudocomm import (
    braid_theorem_report,
    symmetric_theorem_report,
    t_family_braid_negative,
    t_family_braid_positive,
    verify_symmetry,
)
from .reporting import Report

DATA_DIR = Path(__file__).parent / "data"
PACKAGED = ("comm", "ass", "comm_trivial")

DEFAULT_SEED = 20260819
DEFAULT_BUDGET = 200


class CliError(Exception):
    """A user-facing error; `code` follows the exit-code contract."""

    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


# ------------------------------------------------------------ input parsing


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise CliError(f"{what} {token!r} is not an integer") from None


def _parse_word_tokens(tokens: Sequence[str], strands: int) -> BraidWord:
    """Parse word letters given as separate arguments, locating errors."""
    for position, token in enumerate(tokens, 1):
        try:
            parse_word(token, strands)
        except ValueError as exc:
            raise CliError(f"word position {position}: {exc}") from None
    return parse_word(" ".join(tokens), strands)


def _parse_perm_tokens(tokens: Sequence[str]) -> Permutation:
    for position, token in enumerate(tokens, 1):
        try:
            int(token)
        except ValueError:
            raise CliError(
                f"permutation position {position}: entry {token!r} is not an integer"
            ) from None
    try:
        return parse_permutation(" ".join(tokens))
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _split_on_separator(tokens: list[str], usage: str) -> tuple[list[str], list[str]]:
    if tokens.count("--") != 1:
        raise CliError(f"expected exactly one '--' separator; {usage}")
    cut = tokens.index("--")
    return tokens[:cut], tokens[cut + 1 :]


def _resolve_document_path(argument: str) -> Path:
    path = Path(argument)
    if path.exists():
        return path
    if "/" not in argument:
        packaged = DATA_DIR / argument
        if packaged.exists():
            return packaged
    raise CliError(f"{argument}: no such operad file (and no packaged file by that name)")


def _load_document(argument: str) -> FiniteGOperad:
    path = _resolve_document_path(argument)
    text = path.read_text()
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return load_operad(document, name=path.stem)
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from None


def _read_word_file(path_text: str) -> list[BraidWord]:
    """Each nonblank line is ``STRANDS: LETTERS``, e.g. ``3: 1 -2``."""
    path = Path(path_text)
    if not path.exists():
        raise CliError(f"{path_text}: no such file")
    words = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        head, colon, tail = stripped.partition(":")
        if not colon:
            raise CliError(f"{path_text}:{lineno}: expected 'STRANDS: LETTERS'")
        try:
            strands = int(head.strip())
            words.append(parse_word(tail, strands))
        except ValueError as exc:
            raise CliError(f"{path_text}:{lineno}: {exc}") from None
    return words


def _read_perm_file(path_text: str) -> list[Permutation]:
    """Each nonblank line is a space-separated permutation image."""
    path = Path(path_text)
    if not path.exists():
        raise CliError(f"{path_text}: no such file")
    perms = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            perms.append(parse_permutation(line))
        except ValueError as exc:
            raise CliError(f"{path_text}:{lineno}: {exc}") from None
    return perms


# -------------------------------------------------- `--`-separated commands


def _braid_eq(tokens: list[str]) -> int:
    usage = "usage: operadics braid eq -n N W1 -- W2"
    if tokens[:1] in (["-h"], ["--help"]):
        print(usage)
        print("Decide whether two braid words on N strands are equal;")
        print("exits 0 when equal, 1 when unequal.")
        return 0
    if len(tokens) < 2 or tokens[0] != "-n":
        raise CliError(usage)
    strands = _parse_int(tokens[1], "strand count")
    left_tokens, right_tokens = _split_on_separator(tokens[2:], usage)
    left = _parse_word_tokens(left_tokens, strands)
    right = _parse_word_tokens(right_tokens, strands)
    if braids.equal(left, right):
        print("equal")
        return 0
    print("unequal")
    return 1


def _perm_compose(tokens: list[str]) -> int:
    usage = "usage: operadics perm compose P1 -- P2"
    if tokens[:1] in (["-h"], ["--help"]):
        print(usage)
        print("Compose two permutations left to right (first P1, then P2)")
        print("and print the image of the composite.")
        return 0
    left_tokens, right_tokens = _split_on_separator(tokens, usage)
    first = _parse_perm_tokens(left_tokens)
    second = _parse_perm_tokens(right_tokens)
    if first.n != second.n:
        raise CliError(f"cannot compose arity {first.n} with arity {second.n}")
    print(format_permutation(compose(first, second)))
    return 0


# ----------------------------------------------------------- braid handlers


def _cmd_braid_reduce(args) -> int:
    word = _parse_word_tokens(args.word, args.strands)
    print(format_word(braids.handle_reduce(word)))
    return 0


def _cmd_braid_pi(args) -> int:
    word = _parse_word_tokens(args.word, args.strands)
    print(format_permutation(braids.underlying_permutation(word)))
    return 0


def _cmd_braid_cable(args) -> int:
    word = _parse_word_tokens(args.word, args.strands)
    sizes = [_parse_int(part, "cable size") for part in args.sizes.split(",")]
    try:
        result = braids.cable(word, sizes)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(format_word(result))
    return 0


def _cmd_braid_mu(args) -> int:
    word = _parse_word_tokens(args.word, args.strands)
    arguments = _read_word_file(args.args)
    if len(arguments) != args.strands:
        raise CliError(
            f"operadic substitution on {args.strands} strands needs "
            f"{args.strands} argument words, got {len(arguments)}"
        )
    print(format_word(braids.mu_br(word, arguments)))
    return 0


def _cmd_braid_render(args) -> int:
    word = _parse_word_tokens(args.word, args.strands)
    if args.format == "dot":
        print(braids.render_dot(word))
    else:
        print(braids.render_ascii(word))
    return 0


# ------------------------------------------------------------ perm handlers


def _cmd_perm_tau(args) -> int:
    if args.m < 0 or args.n < 0:
        raise CliError("grid dimensions must be nonnegative")
    print(format_permutation(tau(args.m, args.n)))
    return 0


def _cmd_perm_inv(args) -> int:
    print(format_permutation(inverse(_parse_perm_tokens(args.image))))
    return 0


def _cmd_perm_mu(args) -> int:
    head = _parse_perm_tokens(args.image)
    arguments = _read_perm_file(args.args)
    if len(arguments) != head.n:
        raise CliError(
            f"operadic substitution into an arity-{head.n} permutation "
            f"needs {head.n} argument permutations, got {len(arguments)}"
        )
    print(format_permutation(mu_sigma(head, arguments)))
    return 0


# ------------------------------------------------------------- tmn handler


def _cmd_tmn(args) -> int:
    if args.m < 1 or args.n < 1:
        raise CliError("grid dimensions must be at least 1")
    family = t_family_braid_positive() if args.family == "positive" else t_family_braid_negative()
    print(format_word(family(args.m, args.n)))
    return 0


# ---------------------------------------------------------- verify handlers


def _cmd_verify_pscomm(args) -> int:
    if args.bound < 1:
        raise CliError("bound must be at least 1")
    if args.group == "symmetric":
        report = symmetric_theorem_report(bound=args.bound)
        print(report.render())
        symmetric = report.result("the family is symmetric: t(m,n) inverts t(n,m)").passed
        print("SYMMETRY: HOLDS" if symmetric else "SYMMETRY: FAILS (unexpected)")
        return 0 if report.ok else 1
    try:
        report = braid_theorem_report(bound=args.bound)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(report.render())
    holds, witness = verify_symmetry(instance_braid(), t_family_braid_positive(), bound=3)
    if holds:
        print("SYMMETRY: HOLDS (unexpected)")
    else:
        m, n = witness
        print(f"SYMMETRY: FAILS (expected)  witness m={m}, n={n}")
    return 0 if report.ok else 1


def _constant_collection(name: str, sizes: dict[int, int], group: ActionOperad) -> FiniteGCollection:
    levels = {
        n: tuple(f"{name}{n}_{i}" for i in range(count)) for n, count in sizes.items()
    }
    return FiniteGCollection(name, group, levels, lambda n, label, g: label)


def _composition_product_report() -> Report:
    report = Report("composition product of collections")
    sym = instance_symmetric()
    comm = operad_comm(max_arity=3).collection()
    unit = unit_collection(sym)

    left = compose_collections(unit, comm, bound=3)
    left_counts = [len(left.classes(n)) for n in range(4)]
    comm_counts = [len(comm.labels(n)) for n in range(4)]
    report.record(
        "composing the unit on the left preserves class counts",
        left_counts == comm_counts,
        f"{left_counts} vs {comm_counts}",
        checked=4,
    )

    right = compose_collections(comm, unit, bound=3)
    right_counts = [len(right.classes(n)) for n in range(4)]
    report.record(
        "composing the unit on the right preserves class counts",
        right_counts == comm_counts,
        f"{right_counts} vs {comm_counts}",
        checked=4,
    )

    x = _constant_collection("x", {1: 1, 2: 1}, sym)
    y = _constant_collection("y", {1: 1, 2: 1}, sym)
    z = _constant_collection("z", {1: 1, 2: 1}, sym)
    nested_left = compose_collections(compose_collections(x, y, 3).collection(), z, 3)
    nested_right = compose_collections(x, compose_collections(y, z, 3).collection(), 3)
    counts_left = [len(nested_left.classes(n)) for n in range(4)]
    counts_right = [len(nested_right.classes(n)) for n in range(4)]
    report.record(
        "the two triple-composite bracketings have equal class counts",
        counts_left == counts_right,
        f"{counts_left} vs {counts_right}",
        checked=4,
    )
    return report


def _cartesian_report(operads: dict[str, FiniteGOperad]) -> Report:
    report = Report("pullback criterion for the free-algebra monad")
    expected = {"comm": False, "ass": True, "comm_trivial": True}
    for name, p in operads.items():
        free_action, witness = cartesian_condition(p)
        report.record(
            f"{name}: pointwise criterion gives {'YES' if expected[name] else 'NO'}",
            free_action == expected[name],
            "" if free_action == expected[name] else f"got {free_action}, witness {witness}",
            checked=1,
        )
        pullback_ok, pull_witness = pullback_witness_test(p)
        report.record(
            f"{name}: pullback test agrees with the pointwise criterion",
            pullback_ok == free_action,
            "" if pullback_ok == free_action else pull_witness,
            checked=1,
        )
    return report


def _cmd_verify_all(args) -> int:
    operads = {name: _load_document(name + ".json") for name in PACKAGED}
    reports: list[Report] = []
    for instance in (instance_trivial(), instance_symmetric(), instance_braid()):
        reports.append(
            check_axioms(instance, max_arity=3, budget=args.budget, seed=args.seed)
        )
    reports.append(symmetric_theorem_report(bound=3))
    reports.append(braid_theorem_report(bound=3))
    for name, p in operads.items():
        reports.append(check_operad(p, budget=args.budget, seed=args.seed))
    for name in ("comm", "comm_trivial"):
        reports.append(check_monad_laws(operads[name], ("a", "b"), max_arity=3))
    reports.append(check_monad_laws(operads["ass"], ("a", "b"), max_arity=2))
    reports.append(_cartesian_report(operads))
    reports.append(_composition_product_report())

    print("\n\n".join(report.render() for report in reports))
    failing = [report for report in reports if not report.ok]
    print()
    verdict = "OK" if not failing else f"FAILED ({len(failing)} failing)"
    print(f"VERIFY ALL: {verdict} [{len(reports)} suites]")
    return 0 if not failing else 1


# ---------------------------------------------------------- operad handlers


def _cmd_operad_check(args) -> int:
    p = _load_document(args.file)
    report = check_operad(p, budget=args.budget, seed=args.seed)
    print(report.render())
    return 0 if report.ok else 1


def _cmd_operad_free(args) -> int:
    p = _load_document(args.file)
    carrier = [part for part in args.carrier.split(",") if part]
    if args.bound < 0:
        raise CliError("bound must be nonnegative")
    if args.bound > p.max_arity:
        raise CliError(f"bound {args.bound} exceeds the operad's arity bound {p.max_arity}")
    free = free_algebra(p, carrier, max_arity=args.bound)
    total = 0
    for n in range(args.bound + 1):
        classes = free.classes(n)
        total += len(classes)
        if classes:
            listing = "  ".join(str(cls) for cls in classes)
            print(f"n={n}: {listing}")
        else:
            print(f"n={n}: (none)")
    print(f"total: {total} classes")
    return 0


def _cmd_operad_cartesian(args) -> int:
    p = _load_document(args.file)
    free_action, witness = cartesian_condition(p)
    if free_action:
        print("CARTESIAN: YES")
        return 0
    n, label, g = witness
    print(
        f'CARTESIAN: NO  witness: arity {n}, label "{label}", '
        f"fixed by {p.group.describe(g)}"
    )
    return 1


def _cmd_operad_compose(args) -> int:
    x = _load_document(args.file_x)
    y = _load_document(args.file_y)
    if x.group.name != y.group.name:
        raise CliError(
            f"cannot compose: {args.file_x} is over {x.group.name}, "
            f"{args.file_y} over {y.group.name}"
        )
    if args.bound < 0:
        raise CliError("bound must be nonnegative")
    product = compose_collections(x.collection(), y.collection(), bound=args.bound)
    for n in range(args.bound + 1):
        classes = product.classes(n)
        if classes:
            listing = "  ".join(product.describe_state(state) for state in classes)
            print(f"n={n} ({len(classes)} classes): {listing}")
        else:
            print(f"n={n} (0 classes)")
    return 0


def _cmd_operad_example(args) -> int:
    path = DATA_DIR / f"{args.name}.json"
    print(path.read_text(), end="")
    return 0


# ------------------------------------------------------------------ parser


def _add_word_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", dest="strands", type=int, required=True, metavar="N",
                        help="number of strands")
    parser.add_argument("word", nargs="*", metavar="LETTER",
                        help="braid word letters, e.g. 1 -2 1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="operadics",
        description="Computation and verification for permutation and braid operads.",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    # braid ---------------------------------------------------------------
    braid = commands.add_parser("braid", help="braid word arithmetic")
    braid_sub = braid.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    braid_sub.add_parser(
        "eq",
        help="decide equality of two words: eq -n N W1 -- W2 (exit 0 equal, 1 unequal)",
        add_help=False,
    )

    reduce_parser = braid_sub.add_parser("reduce", help="print the handle-reduced word")
    _add_word_arguments(reduce_parser)
    reduce_parser.set_defaults(handler=_cmd_braid_reduce)

    pi_parser = braid_sub.add_parser("pi", help="print the underlying permutation")
    _add_word_arguments(pi_parser)
    pi_parser.set_defaults(handler=_cmd_braid_pi)

    cable_parser = braid_sub.add_parser("cable", help="replace strands by parallel bundles")
    _add_word_arguments(cable_parser)
    cable_parser.add_argument("--sizes", required=True, metavar="K1,K2,...",
                              help="bundle widths, one per strand")
    cable_parser.set_defaults(handler=_cmd_braid_cable)

    mu_parser = braid_sub.add_parser(
        "mu", help="operadic substitution; argument words come from a file"
    )
    _add_word_arguments(mu_parser)
    mu_parser.add_argument("--args", required=True, metavar="FILE",
                           help="file with one 'STRANDS: LETTERS' line per argument")
    mu_parser.set_defaults(handler=_cmd_braid_mu)

    render_parser = braid_sub.add_parser("render", help="draw the braid diagram")
    _add_word_arguments(render_parser)
    render_parser.add_argument("--format", choices=("ascii", "dot"), default="ascii",
                               help="output format (default ascii)")
    render_parser.set_defaults(handler=_cmd_braid_render)

    # perm ----------------------------------------------------------------
    perm = commands.add_parser("perm", help="permutation arithmetic")
    perm_sub = perm.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    tau_parser = perm_sub.add_parser("tau", help="grid transposition: tau M N")
    tau_parser.add_argument("m", type=int)
    tau_parser.add_argument("n", type=int)
    tau_parser.set_defaults(handler=_cmd_perm_tau)

    inv_parser = perm_sub.add_parser("inv", help="invert a permutation image")
    inv_parser.add_argument("image", nargs="+", metavar="VALUE")
    inv_parser.set_defaults(handler=_cmd_perm_inv)

    perm_sub.add_parser(
        "compose",
        help="compose left to right: compose P1 -- P2",
        add_help=False,
    )

    perm_mu_parser = perm_sub.add_parser(
        "mu", help="operadic substitution; argument permutations come from a file"
    )
    perm_mu_parser.add_argument("image", nargs="+", metavar="VALUE",
                                help="image of the outer permutation")
    perm_mu_parser.add_argument("--args", required=True, metavar="FILE",
                                help="file with one permutation image per line")
    perm_mu_parser.set_defaults(handler=_cmd_perm_mu)

    # tmn -----------------------------------------------------------------
    tmn_parser = commands.add_parser(
        "tmn", help="print the braid lift of the grid transposition"
    )
    tmn_parser.add_argument("--family", choices=("positive", "negative"), required=True)
    tmn_parser.add_argument("m", type=int)
    tmn_parser.add_argument("n", type=int)
    tmn_parser.set_defaults(handler=_cmd_tmn)

    # verify --------------------------------------------------------------
    verify = commands.add_parser("verify", help="run law suites")
    verify_sub = verify.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    pscomm_parser = verify_sub.add_parser(
        "pscomm", help="interchange-family report for one group family"
    )
    pscomm_parser.add_argument("--group", choices=("braid", "symmetric"), required=True)
    pscomm_parser.add_argument("--bound", type=int, default=3,
                               help="index bound for the interchange sweep (default 3)")
    pscomm_parser.set_defaults(handler=_cmd_verify_pscomm)

    all_parser = verify_sub.add_parser("all", help="run every verification suite")
    all_parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                            help=f"seed for sampled law checks (default {DEFAULT_SEED})")
    all_parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                            help=f"sample budget per law (default {DEFAULT_BUDGET})")
    all_parser.set_defaults(handler=_cmd_verify_all)

    # operad --------------------------------------------------------------
    operad = commands.add_parser("operad", help="finite operads from JSON documents")
    operad_sub = operad.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    check_parser = operad_sub.add_parser("check", help="run the operad law battery on a file")
    check_parser.add_argument("file")
    check_parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    check_parser.add_argument("--budget", type=int, default=25,
                              help="group elements sampled per arity (default 25)")
    check_parser.set_defaults(handler=_cmd_operad_check)

    free_parser = operad_sub.add_parser(
        "free", help="list free-algebra classes over a finite carrier"
    )
    free_parser.add_argument("file")
    free_parser.add_argument("--carrier", required=True, metavar="X1,X2,...",
                             help="comma-separated carrier elements")
    free_parser.add_argument("--bound", type=int, default=2,
                             help="largest arity to list (default 2)")
    free_parser.set_defaults(handler=_cmd_operad_free)

    cartesian_parser = operad_sub.add_parser(
        "cartesian", help="decide whether the group actions are free"
    )
    cartesian_parser.add_argument("file")
    cartesian_parser.set_defaults(handler=_cmd_operad_cartesian)

    compose_parser = operad_sub.add_parser(
        "compose", help="class listing of the composition product of two operads"
    )
    compose_parser.add_argument("file_x")
    compose_parser.add_argument("file_y")
    compose_parser.add_argument("--bound", type=int, default=3,
                                help="largest arity to list (default 3)")
    compose_parser.set_defaults(handler=_cmd_operad_compose)

    example_parser = operad_sub.add_parser(
        "example", help="print a packaged operad document"
    )
    example_parser.add_argument("name", choices=PACKAGED)
    example_parser.set_defaults(handler=_cmd_operad_example)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    tokens = list(sys.argv[1:] if argv is None else argv)
    try:
        # Two subcommands take a literal `--` between variadic operands,
        # which argparse cannot rebuild once it strips the first `--`;
        # they get hand parsers.
        if tokens[:2] == ["braid", "eq"]:
            return _braid_eq(tokens[2:])
        if tokens[:2] == ["perm", "compose"]:
            return _perm_compose(tokens[2:])
        args = build_parser().parse_args(tokens)
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
