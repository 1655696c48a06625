"""
Finite operads with a group of equivariance, at desk scale.

A collection assigns to each arity a finite set of labels with a right
action of the corresponding group: x.e = x and (x.g).h = x.(gh), where gh
is the classical product exposed by the ActionOperad instances.  An operad
adds a unit label and a substitution map, subject (beyond unit and
associativity) to two equivariance axioms tying substitution to the group
structure:

    mu(x; y_1.g_1, ..., y_n.g_n) = mu(x; ys) . mu_G(e; g_1, ..., g_n)
    mu(x.g; y_1, ..., y_n)       = mu(x; y_{pi(g)^-1(1)}, ...) . mu_G(g; e_{k_1}, ..., e_{k_n})

with k_i the arity of y_i as listed on the left-hand side.  The checkers
in this module verify all of these exhaustively up to the operad's arity
bound (sampling group elements when the group is infinite) and report one
PASS/FAIL line per law.

Everything here is finite and table-sized: levels are tuples of label
strings, substitution is total within the bound, and operads can round-trip
through a JSON document format for the command-line tools.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from .action_operads import ActionOperad, instance_symmetric, instance_trivial
from .braids import permutation_braid
from .permutations import Permutation, act_on_list, all_permutations
from .reporting import Report


@dataclass
class FiniteGCollection:
    """Finite label sets per arity with a right group action on each."""

    name: str
    group: ActionOperad
    levels: Mapping[int, tuple[str, ...]]
    action: Callable[[int, str, Any], str]

    def labels(self, n: int) -> tuple[str, ...]:
        return tuple(self.levels.get(n, ()))

    def arities(self) -> list[int]:
        return sorted(n for n, labels in self.levels.items() if labels)


@dataclass
class FiniteGOperad:
    """A finite collection with unit and substitution, bounded in arity."""

    name: str
    group: ActionOperad
    levels: Mapping[int, tuple[str, ...]]
    unit: str
    action: Callable[[int, str, Any], str]
    compose: Callable[[int, Sequence[int], str, Sequence[str]], str]
    max_arity: int

    def labels(self, n: int) -> tuple[str, ...]:
        return tuple(self.levels.get(n, ()))

    def collection(self) -> FiniteGCollection:
        return FiniteGCollection(self.name, self.group, dict(self.levels), self.action)


@dataclass
class AlgebraStructure:
    """A finite carrier together with one evaluation map per arity."""

    carrier: tuple[str, ...]
    maps: Callable[[int, str, Sequence[str]], str]


# ----------------------------------------------------------- signatures


def arity_signatures(bound: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """All substitution signatures (n; k_1..k_n) with n and sum(k) within bound."""
    for n in range(bound + 1):
        for ks in itertools.product(range(bound + 1), repeat=n):
            if sum(ks) <= bound:
                yield n, ks


def _group_elements(group: ActionOperad, n: int, budget: int, seed: int) -> list[Any]:
    """Every element for finite groups, a seeded sample for infinite ones."""
    if group.elements is not None:
        return list(group.elements(n))
    import random

    rng = random.Random(seed * 1000003 + n)
    return [group.sample(rng, n) for _ in range(budget)]


# --------------------------------------------------------------- checkers


def check_collection(
    x: FiniteGCollection, *, bound: int | None = None, budget: int = 25, seed: int = 9
) -> Report:
    report = Report(f"collection laws: {x.name}")
    arities = (
        range(bound + 1) if bound is not None else x.arities() or [0]
    )

    typed_ok, typed_witness, typed_count = True, "", 0
    for n in arities:
        for label in x.labels(n):
            for g in _group_elements(x.group, n, budget, seed):
                typed_count += 1
                if x.action(n, label, g) not in x.labels(n):
                    typed_ok, typed_witness = False, f"n={n}, x={label}, g={x.group.describe(g)}"
                    break
    report.record("action stays inside each level", typed_ok, typed_witness, typed_count)

    unit_ok, unit_witness, unit_count = True, "", 0
    for n in arities:
        e = x.group.identity(n)
        for label in x.labels(n):
            unit_count += 1
            if x.action(n, label, e) != label:
                unit_ok, unit_witness = False, f"n={n}, x={label}"
    report.record("action unit law", unit_ok, unit_witness, unit_count)

    comp_ok, comp_witness, comp_count = True, "", 0
    for n in arities:
        gs = _group_elements(x.group, n, budget, seed)
        for label in x.labels(n):
            for g, h in itertools.product(gs, repeat=2):
                comp_count += 1
                stepwise = x.action(n, x.action(n, label, g), h)
                combined = x.action(n, label, x.group.multiply(g, h))
                if stepwise != combined:
                    comp_ok = False
                    comp_witness = (
                        f"n={n}, x={label}, g={x.group.describe(g)}, h={x.group.describe(h)}"
                    )
                    break
    report.record("action composition law", comp_ok, comp_witness, comp_count)
    return report


def check_operad(p: FiniteGOperad, *, budget: int = 25, seed: int = 9) -> Report:
    """Exhaustively verify the operad and equivariance laws within the bound."""
    group = p.group
    bound = p.max_arity
    report = Report(f"operad laws: {p.name}")

    def mu(n: int, ks: Sequence[int], head: str, args: Sequence[str]) -> str:
        return p.compose(n, ks, head, args)

    # Well-typedness: the unit, every substitution result, every action result.
    typed_ok, typed_witness, typed_count = True, "", 0
    if p.unit not in p.labels(1):
        typed_ok, typed_witness = False, f"unit {p.unit!r} not in level 1"
    for n, ks in arity_signatures(bound):
        total = sum(ks)
        for head in p.labels(n):
            for args in itertools.product(*(p.labels(k) for k in ks)):
                typed_count += 1
                if mu(n, ks, head, args) not in p.labels(total):
                    typed_ok = False
                    typed_witness = f"mu result escapes level {total}: n={n}, ks={list(ks)}, p={head}, qs={list(args)}"
                    break
    for n in range(bound + 1):
        for head in p.labels(n):
            for g in _group_elements(group, n, budget, seed):
                typed_count += 1
                if p.action(n, head, g) not in p.labels(n):
                    typed_ok = False
                    typed_witness = f"action escapes level {n}: p={head}, g={group.describe(g)}"
                    break
    report.record("tables are well-typed", typed_ok, typed_witness, typed_count)

    # Unit laws.
    unit_ok, unit_witness, unit_count = True, "", 0
    for n in range(bound + 1):
        for head in p.labels(n):
            unit_count += 2
            if mu(1, (n,), p.unit, (head,)) != head:
                unit_ok, unit_witness = False, f"mu(unit; {head}) != {head}"
                break
            if mu(n, (1,) * n, head, (p.unit,) * n) != head:
                unit_ok, unit_witness = False, f"mu({head}; unit...) != {head}"
                break
    report.record("operad unit", unit_ok, unit_witness, unit_count)

    # Associativity.
    assoc_ok, assoc_witness, assoc_count = True, "", 0
    for n, ks in arity_signatures(bound):
        total = sum(ks)
        for ls in itertools.product(range(bound + 1), repeat=total):
            if sum(ls) > bound:
                continue
            splits = []
            start = 0
            for k in ks:
                splits.append(ls[start:start + k])
                start += k
            for head in p.labels(n):
                for args in itertools.product(*(p.labels(k) for k in ks)):
                    for flats in itertools.product(*(p.labels(l) for l in ls)):
                        assoc_count += 1
                        chunks = []
                        start = 0
                        for k in ks:
                            chunks.append(flats[start:start + k])
                            start += k
                        lhs = mu(total, ls, mu(n, ks, head, args), flats)
                        inner = [
                            mu(len(split), split, arg, chunk)
                            for split, arg, chunk in zip(splits, args, chunks)
                        ]
                        rhs = mu(n, tuple(sum(s) for s in splits), head, inner)
                        if lhs != rhs:
                            assoc_ok = False
                            assoc_witness = (
                                f"n={n}, ks={list(ks)}, ls={list(ls)}, p={head}, "
                                f"qs={list(args)}, rs={list(flats)}"
                            )
                            break
    report.record("operad associativity", assoc_ok, assoc_witness, assoc_count)

    # Equivariance in the operad slot (the acting element cables up).
    slot_ok, slot_witness, slot_count = True, "", 0
    for n, ks in arity_signatures(bound):
        total = sum(ks)
        for g in _group_elements(group, n, budget, seed):
            pi = group.project(g)
            pi_inv = pi.inverse()
            permuted_ks = tuple(ks[pi_inv(i) - 1] for i in range(1, n + 1))
            cable = group.operad_mu(g, [group.identity(k) for k in ks])
            for head in p.labels(n):
                for args in itertools.product(*(p.labels(k) for k in ks)):
                    slot_count += 1
                    lhs = mu(n, ks, p.action(n, head, g), args)
                    permuted_args = tuple(args[pi_inv(i) - 1] for i in range(1, n + 1))
                    rhs = p.action(total, mu(n, permuted_ks, head, permuted_args), cable)
                    if lhs != rhs:
                        slot_ok = False
                        slot_witness = (
                            f"n={n}, ks={list(ks)}, p={head}, qs={list(args)}, "
                            f"g={group.describe(g)}"
                        )
                        break
    report.record("equivariance in the operad slot", slot_ok, slot_witness, slot_count)

    # Equivariance in the argument slots (the acting elements block-sum up).
    arg_ok, arg_witness, arg_count = True, "", 0
    for n, ks in arity_signatures(bound):
        total = sum(ks)
        element_lists = [_group_elements(group, k, max(budget // 5, 2), seed + 1) for k in ks]
        for head in p.labels(n):
            for args in itertools.product(*(p.labels(k) for k in ks)):
                for gs in itertools.product(*element_lists):
                    arg_count += 1
                    acted_args = tuple(
                        p.action(k, arg, g) for k, arg, g in zip(ks, args, gs)
                    )
                    lhs = mu(n, ks, head, acted_args)
                    block = group.operad_mu(group.identity(n), list(gs))
                    rhs = p.action(total, mu(n, ks, head, args), block)
                    if lhs != rhs:
                        arg_ok = False
                        arg_witness = (
                            f"n={n}, ks={list(ks)}, p={head}, qs={list(args)}, "
                            f"gs=[{', '.join(group.describe(g) for g in gs)}]"
                        )
                        break
    report.record("equivariance in the argument slots", arg_ok, arg_witness, arg_count)

    # The per-level right-action laws.
    collection_report = check_collection(
        p.collection(), bound=bound, budget=budget, seed=seed
    )
    for result in collection_report.results:
        report.results.append(result)
    return report


# ------------------------------------------------------------- builders


def operad_comm(group: ActionOperad | None = None, max_arity: int = 4) -> FiniteGOperad:
    """One operation per arity, any group acting trivially: the terminal operad."""
    group = group if group is not None else instance_symmetric()
    levels = {n: ("*",) for n in range(max_arity + 1)}

    def compose(n: int, ks: Sequence[int], head: str, args: Sequence[str]) -> str:
        _require_signature(n, ks, head, args, levels, max_arity)
        return "*"

    return FiniteGOperad(
        name=f"comm/{group.name}",
        group=group,
        levels=levels,
        unit="*",
        action=lambda n, label, g: label,
        compose=compose,
        max_arity=max_arity,
    )


def operad_comm_trivial(max_arity: int = 3) -> FiniteGOperad:
    return operad_comm(group=instance_trivial(), max_arity=max_arity)


def _perm_label(p: Permutation) -> str:
    return "".join(str(i) for i in p.image) if p.n else "e"


def _label_perm(label: str) -> Permutation:
    if label == "e":
        return Permutation(())
    return Permutation(tuple(int(c) for c in label))


def operad_ass(max_arity: int = 3) -> FiniteGOperad:
    """
    All permutations at each arity, acting on themselves by right
    multiplication, with block substitution: the associative operad.
    """
    if max_arity > 9:
        raise ValueError("digit labels support arities up to 9 only")
    group = instance_symmetric()
    levels = {
        n: tuple(sorted(_perm_label(p) for p in all_permutations(n)))
        for n in range(max_arity + 1)
    }

    def action(n: int, label: str, g: Permutation) -> str:
        return _perm_label(group.multiply(_label_perm(label), g))

    def compose(n: int, ks: Sequence[int], head: str, args: Sequence[str]) -> str:
        _require_signature(n, ks, head, args, levels, max_arity)
        return _perm_label(
            group.operad_mu(_label_perm(head), [_label_perm(a) for a in args])
        )

    return FiniteGOperad(
        name="ass",
        group=group,
        levels=levels,
        unit="1",
        action=action,
        compose=compose,
        max_arity=max_arity,
    )


def _require_signature(n, ks, head, args, levels, max_arity):
    if len(ks) != n or len(args) != n:
        raise ValueError(f"substitution needs {n} arities and arguments, got {len(ks)} and {len(args)}")
    if sum(ks) > max_arity:
        raise ValueError(f"substitution result arity {sum(ks)} exceeds the bound {max_arity}")
    if head not in levels.get(n, ()):
        raise ValueError(f"unknown label {head!r} at arity {n}")
    for k, arg in zip(ks, args):
        if arg not in levels.get(k, ()):
            raise ValueError(f"unknown label {arg!r} at arity {k}")


def endomorphism_operad(
    carrier: Sequence[str],
    group: ActionOperad,
    max_arity: int = 2,
    max_level_size: int = 4096,
) -> FiniteGOperad:
    """
    All functions X^n -> X as the labels of arity n.  A label lists the
    outputs over the lexicographically ordered input tuples, joined by
    commas; substitution is composition of functions, and a group element
    acts by permuting the inputs through its underlying permutation.
    """
    alphabet = tuple(sorted(carrier))
    if len(set(alphabet)) != len(alphabet):
        raise ValueError("carrier elements must be distinct")
    if not alphabet:
        raise ValueError("carrier must be nonempty")

    def inputs(n: int) -> list[tuple[str, ...]]:
        return list(itertools.product(alphabet, repeat=n))

    levels: dict[int, tuple[str, ...]] = {}
    for n in range(max_arity + 1):
        size = len(alphabet) ** (len(alphabet) ** n)
        if size > max_level_size:
            raise ValueError(
                f"endomorphism level {n} would hold {size} functions, "
                f"more than the limit {max_level_size}"
            )
        levels[n] = tuple(
            ",".join(outputs) for outputs in itertools.product(alphabet, repeat=len(alphabet) ** n)
        )

    def decode(n: int, label: str) -> dict[tuple[str, ...], str]:
        return dict(zip(inputs(n), label.split(",")))

    def encode(n: int, table: Mapping[tuple[str, ...], str]) -> str:
        return ",".join(table[xs] for xs in inputs(n))

    def action(n: int, label: str, g: Any) -> str:
        fn = decode(n, label)
        pi = group.project(g)
        return encode(n, {xs: fn[tuple(act_on_list(pi, xs))] for xs in inputs(n)})

    def compose(n: int, ks: Sequence[int], head: str, args: Sequence[str]) -> str:
        _require_signature(n, ks, head, args, levels, max_arity)
        fn = decode(n, head)
        arg_fns = [decode(k, a) for k, a in zip(ks, args)]
        total = sum(ks)
        table = {}
        for xs in inputs(total):
            values = []
            start = 0
            for k, arg_fn in zip(ks, arg_fns):
                values.append(arg_fn[tuple(xs[start:start + k])])
                start += k
            table[xs] = fn[tuple(values)]
        return encode(total, table)

    identity_label = ",".join(x for (x,) in inputs(1))
    return FiniteGOperad(
        name=f"endomorphisms of {{{','.join(alphabet)}}}",
        group=group,
        levels=levels,
        unit=identity_label,
        action=action,
        compose=compose,
        max_arity=max_arity,
    )


def change_groups(
    f: Callable[[Any], Any], new_group: ActionOperad, p: FiniteGOperad
) -> FiniteGOperad:
    """
    Pull an operad back along a map of action operads: same labels and
    substitution, with the new group acting through f.
    """
    return FiniteGOperad(
        name=f"{p.name} over {new_group.name}",
        group=new_group,
        levels=dict(p.levels),
        unit=p.unit,
        action=lambda n, label, g: p.action(n, label, f(g)),
        compose=p.compose,
        max_arity=p.max_arity,
    )


# ------------------------------------------------------------- algebras


def check_algebra(p: FiniteGOperad, algebra: AlgebraStructure, *, budget: int = 25, seed: int = 9) -> Report:
    """Verify the unit, associativity, and equivariance laws of an algebra."""
    report = Report(f"algebra laws on {{{','.join(algebra.carrier)}}} for {p.name}")
    carrier = algebra.carrier
    bound = p.max_arity

    unit_ok, unit_witness, unit_count = True, "", 0
    for x in carrier:
        unit_count += 1
        if algebra.maps(1, p.unit, (x,)) != x:
            unit_ok, unit_witness = False, f"x={x}"
            break
    report.record("algebra unit", unit_ok, unit_witness, unit_count)

    assoc_ok, assoc_witness, assoc_count = True, "", 0
    for n, ks in arity_signatures(bound):
        total = sum(ks)
        for head in p.labels(n):
            for args in itertools.product(*(p.labels(k) for k in ks)):
                composite = p.compose(n, ks, head, args)
                for xs in itertools.product(carrier, repeat=total):
                    assoc_count += 1
                    lhs = algebra.maps(total, composite, xs)
                    values = []
                    start = 0
                    for k, arg in zip(ks, args):
                        values.append(algebra.maps(k, arg, xs[start:start + k]))
                        start += k
                    rhs = algebra.maps(n, head, tuple(values))
                    if lhs != rhs:
                        assoc_ok = False
                        assoc_witness = (
                            f"n={n}, ks={list(ks)}, p={head}, qs={list(args)}, xs={list(xs)}"
                        )
                        break
    report.record("algebra associativity", assoc_ok, assoc_witness, assoc_count)

    equiv_ok, equiv_witness, equiv_count = True, "", 0
    for n in range(bound + 1):
        for g in _group_elements(p.group, n, budget, seed):
            pi = p.group.project(g)
            for head in p.labels(n):
                acted = p.action(n, head, g)
                for xs in itertools.product(carrier, repeat=n):
                    equiv_count += 1
                    lhs = algebra.maps(n, acted, xs)
                    rhs = algebra.maps(n, head, tuple(act_on_list(pi, xs)))
                    if lhs != rhs:
                        equiv_ok = False
                        equiv_witness = (
                            f"n={n}, p={head}, g={p.group.describe(g)}, xs={list(xs)}"
                        )
                        break
    report.record("algebra equivariance", equiv_ok, equiv_witness, equiv_count)
    return report


def table_algebra(carrier: Sequence[str], table: Mapping[tuple[int, str, tuple[str, ...]], str]) -> AlgebraStructure:
    """An algebra backed by an explicit evaluation table."""
    def maps(n: int, label: str, xs: Sequence[str]) -> str:
        key = (n, label, tuple(xs))
        if key not in table:
            raise ValueError(f"algebra table has no entry for arity {n}, label {label!r}, xs={list(xs)}")
        return table[key]

    return AlgebraStructure(tuple(carrier), maps)


def enumerate_algebra_structures(p: FiniteGOperad, carrier: Sequence[str], limit: int = 1 << 20) -> list[AlgebraStructure]:
    """Brute-force every algebra structure on the carrier, within the bound."""
    carrier = tuple(carrier)
    slots = [
        (n, label, xs)
        for n in range(p.max_arity + 1)
        for label in p.labels(n)
        for xs in itertools.product(carrier, repeat=n)
    ]
    count = len(carrier) ** len(slots)
    if count > limit:
        raise ValueError(f"{count} candidate tables exceed the enumeration limit {limit}")
    found = []
    for values in itertools.product(carrier, repeat=len(slots)):
        algebra = table_algebra(carrier, dict(zip(slots, values)))
        if check_algebra(p, algebra).ok:
            found.append(algebra)
    return found


def enumerate_operad_maps(p: FiniteGOperad, q: FiniteGOperad, limit: int = 1 << 20) -> list[dict[tuple[int, str], str]]:
    """
    Brute-force every equivariant operad map from p to q (same group, same
    bound): unit-preserving, substitution-preserving, action-preserving
    per-arity label functions, returned as {(arity, label): image} tables.
    """
    if p.max_arity != q.max_arity:
        raise ValueError("operad maps need matching arity bounds")
    bound = p.max_arity
    domain = [(n, label) for n in range(bound + 1) for label in p.labels(n)]
    spaces = [q.labels(n) for n, _ in domain]
    count = 1
    for space in spaces:
        count *= len(space)
        if count > limit:
            raise ValueError(f"candidate map count exceeds the enumeration limit {limit}")

    group_samples = {
        n: _group_elements(p.group, n, 10, 3) for n in range(bound + 1)
    }
    maps = []
    for images in itertools.product(*spaces):
        table = dict(zip(domain, images))
        if table[(1, p.unit)] != q.unit:
            continue
        ok = True
        for n, ks in arity_signatures(bound):
            for head in p.labels(n):
                for args in itertools.product(*(p.labels(k) for k in ks)):
                    lhs = table[(sum(ks), p.compose(n, ks, head, args))]
                    rhs = q.compose(n, ks, table[(n, head)], [table[(k, a)] for k, a in zip(ks, args)])
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            for n in range(bound + 1):
                for head in p.labels(n):
                    for g in group_samples[n]:
                        if table[(n, p.action(n, head, g))] != q.action(n, table[(n, head)], g):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
        if ok:
            maps.append(table)
    return maps


# ------------------------------------------------------ document format


def write_operad_document(p: FiniteGOperad) -> dict:
    """Tabulate an operad into the JSON-compatible document format."""
    if p.group.name not in ("trivial", "symmetric"):
        raise ValueError(f"only trivial and symmetric groups can be serialized, not {p.group.name}")
    if p.group.generators is None or p.group.elements is None:
        raise ValueError("document format needs an enumerable group")
    document: dict = {
        "group": p.group.name,
        "max_arity": p.max_arity,
        "levels": {str(n): list(p.labels(n)) for n in range(p.max_arity + 1)},
        "action": {
            str(n): [
                [p.action(n, label, gen) for label in p.labels(n)]
                for gen in p.group.generators(n)
            ]
            for n in range(p.max_arity + 1)
        },
        "unit": p.unit,
        "compose": [],
    }
    for n, ks in arity_signatures(p.max_arity):
        for head in p.labels(n):
            for args in itertools.product(*(p.labels(k) for k in ks)):
                document["compose"].append(
                    {
                        "n": n,
                        "ks": list(ks),
                        "args": [head, *args],
                        "result": p.compose(n, ks, head, args),
                    }
                )
    return document


def load_operad(document: Mapping, name: str = "loaded operad") -> FiniteGOperad:
    """
    Build a table-backed operad from a document, validating structure as it
    goes; every failure names the offending location.  Law checking is a
    separate step (`check_operad`) — this only rejects malformed tables.
    """
    group_name = document.get("group")
    if group_name == "trivial":
        group = instance_trivial()
    elif group_name == "symmetric":
        group = instance_symmetric()
    else:
        raise ValueError(f"group: expected 'trivial' or 'symmetric', got {group_name!r}")

    max_arity = document.get("max_arity")
    if not isinstance(max_arity, int) or max_arity < 0:
        raise ValueError(f"max_arity: expected a nonnegative integer, got {max_arity!r}")

    raw_levels = document.get("levels")
    if not isinstance(raw_levels, Mapping):
        raise ValueError("levels: expected a mapping from arity to label lists")
    levels: dict[int, tuple[str, ...]] = {}
    for n in range(max_arity + 1):
        if str(n) not in raw_levels:
            raise ValueError(f"levels: missing arity {n}")
        entries = raw_levels[str(n)]
        if not isinstance(entries, list) or not all(isinstance(x, str) for x in entries):
            raise ValueError(f"levels[{n}]: expected a list of strings")
        if len(set(entries)) != len(entries):
            raise ValueError(f"levels[{n}]: duplicate labels")
        levels[n] = tuple(entries)

    raw_action = document.get("action")
    if not isinstance(raw_action, Mapping):
        raise ValueError("action: expected a mapping from arity to generator rows")
    action_rows: dict[int, list[dict[str, str]]] = {}
    for n in range(max_arity + 1):
        generators = group.generators(n)
        rows = raw_action.get(str(n))
        if rows is None:
            raise ValueError(f"action: missing arity {n}")
        if len(rows) != len(generators):
            raise ValueError(
                f"action[{n}]: expected {len(generators)} generator rows, got {len(rows)}"
            )
        table = []
        for index, row in enumerate(rows):
            if sorted(row) != sorted(levels[n]):
                raise ValueError(f"action[{n}][{index}]: not a permutation of the labels")
            table.append(dict(zip(levels[n], row)))
        action_rows[n] = table

    unit = document.get("unit")
    if unit not in levels.get(1, ()):
        raise ValueError(f"unit: {unit!r} is not a label of arity 1")

    compose_table: dict[tuple, str] = {}
    entries = document.get("compose")
    if not isinstance(entries, list):
        raise ValueError("compose: expected a list of records")
    for position, record in enumerate(entries):
        where = f"compose[{position}]"
        try:
            n, ks, args, result = record["n"], record["ks"], record["args"], record["result"]
        except (KeyError, TypeError):
            raise ValueError(f"{where}: needs the keys n, ks, args, result") from None
        if not isinstance(ks, list) or len(ks) != n:
            raise ValueError(f"{where}: ks must list {n} arities")
        if sum(ks) > max_arity:
            raise ValueError(f"{where}: result arity {sum(ks)} exceeds the bound {max_arity}")
        if len(args) != n + 1:
            raise ValueError(f"{where}: args must hold the head label plus {n} arguments")
        head, rest = args[0], args[1:]
        if head not in levels.get(n, ()):
            raise ValueError(f"{where}: head label {head!r} is not in level {n}")
        for k, arg in zip(ks, rest):
            if arg not in levels.get(k, ()):
                raise ValueError(f"{where}: argument {arg!r} is not in level {k}")
        if result not in levels.get(sum(ks), ()):
            raise ValueError(f"{where}: result {result!r} is not in level {sum(ks)}")
        key = (n, tuple(ks), head, tuple(rest))
        if key in compose_table and compose_table[key] != result:
            raise ValueError(f"{where}: conflicting duplicate for n={n}, ks={ks}, args={args}")
        compose_table[key] = result

    for n, ks in arity_signatures(max_arity):
        for head in levels[n]:
            for rest in itertools.product(*(levels[k] for k in ks)):
                if (n, ks, head, rest) not in compose_table:
                    raise ValueError(
                        f"compose: missing entry for n={n}, ks={list(ks)}, args={[head, *rest]}"
                    )

    def action(n: int, label: str, g: Any) -> str:
        if label not in levels.get(n, ()):
            raise ValueError(f"unknown label {label!r} at arity {n}")
        # Decompose the underlying permutation into adjacent transpositions;
        # a right action applies them from the last factor to the first.
        for i in reversed(permutation_braid(group.project(g)).word):
            label = action_rows[n][i - 1][label]
        return label

    def compose(n: int, ks: Sequence[int], head: str, args: Sequence[str]) -> str:
        _require_signature(n, ks, head, args, levels, max_arity)
        return compose_table[(n, tuple(ks), head, tuple(args))]

    return FiniteGOperad(
        name=name,
        group=group,
        levels=levels,
        unit=unit,
        action=action,
        compose=compose,
        max_arity=max_arity,
    )


# ------------------------------------------------- composition product


class _UnionFind:
    def __init__(self):
        self._parent: dict = {}

    def add(self, item) -> None:
        self._parent.setdefault(item, item)

    def find(self, item):
        root = item
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[item] != root:
            self._parent[item], item = root, self._parent[item]
        return root

    def unite(self, a, b) -> None:
        self.add(a)
        self.add(b)
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[max(ra, rb)] = min(ra, rb)

    def items(self):
        return self._parent.keys()


def _element_order_key(group: ActionOperad, g: Any):
    return (tuple(group.project(g).image), group.describe(g))


@dataclass
class ComposedCollection:
    """
    The composition product of two collections over a finite group: for
    each arity, equivalence classes of tuples (x; y_1..y_r; g) under the
    relations that move a group element out of x (cabling it) or out of
    the y_i (block-summing them), with the right action multiplying onto
    the final coordinate.
    """

    name: str
    group: ActionOperad
    bound: int
    classes_by_arity: dict[int, list[tuple]]
    _canonical: dict[tuple, tuple]

    def classes(self, n: int) -> list[tuple]:
        return list(self.classes_by_arity.get(n, []))

    def canonical(self, state: tuple) -> tuple:
        key = self._state_key(state)
        if key not in self._canonical:
            raise ValueError(f"unknown composite tuple {self.describe_state(state)}")
        return self._canonical[key]

    def act(self, state: tuple, gamma: Any) -> tuple:
        r, ks, x, ys, g = state
        return self.canonical((r, ks, x, ys, self.group.multiply(g, gamma)))

    def describe_state(self, state: tuple) -> str:
        _, _, x, ys, g = state
        return f"[{x}; {','.join(ys)}; {self.group.describe(g)}]"

    def _state_key(self, state: tuple) -> tuple:
        r, ks, x, ys, g = state
        return (r, tuple(ks), x, tuple(ys), _element_order_key(self.group, g))

    def collection(self) -> FiniteGCollection:
        labels = {
            n: tuple(self.describe_state(state) for state in states)
            for n, states in self.classes_by_arity.items()
        }
        by_label = {
            (n, self.describe_state(state)): state
            for n, states in self.classes_by_arity.items()
            for state in states
        }

        def action(n: int, label: str, gamma: Any) -> str:
            return self.describe_state(self.act(by_label[(n, label)], gamma))

        return FiniteGCollection(self.name, self.group, labels, action)


def _compositions(total: int, parts: Sequence[int], slots: int) -> Iterator[tuple[int, ...]]:
    """All slot-tuples drawn from `parts` summing to `total`."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in parts:
        if first <= total:
            for rest in _compositions(total - first, parts, slots - 1):
                yield (first, *rest)


def compose_collections(
    x: FiniteGCollection, y: FiniteGCollection, bound: int
) -> ComposedCollection:
    """Enumerate and quotient the composite tuples (x; y_1..y_r; g), n <= bound."""
    group = x.group
    if group.elements is None:
        raise ValueError(
            "composition product needs a finite group of equivariance (trivial or symmetric)"
        )
    if y.group is not x.group and y.group.name != group.name:
        raise ValueError(
            f"collections live over different groups: {x.group.name} and {y.group.name}"
        )
    y_arities = [n for n in range(bound + 1) if y.labels(n)]
    classes_by_arity: dict[int, list[tuple]] = {}
    canonical: dict[tuple, tuple] = {}

    for n in range(bound + 1):
        uf = _UnionFind()
        states: dict[tuple, tuple] = {}

        def key_of(state: tuple) -> tuple:
            r, ks, head, ys, g = state
            return (r, tuple(ks), head, tuple(ys), _element_order_key(group, g))

        def register(state: tuple) -> tuple:
            key = key_of(state)
            states.setdefault(key, state)
            uf.add(key)
            return key

        for r in sorted(m for m in x.levels if x.labels(m)):
            for ks in _compositions(n, y_arities, r):
                for head in x.labels(r):
                    for ys in itertools.product(*(y.labels(k) for k in ks)):
                        for g in group.elements(n):
                            register((r, ks, head, ys, g))

        for key in list(states):
            r, ks, head, ys, g = states[key]
            # Moving h out of the x slot permutes the arguments and cables h
            # onto the final coordinate.
            for h in group.elements(r):
                pi_inv = group.project(h).inverse()
                permuted_ks = tuple(ks[pi_inv(i) - 1] for i in range(1, r + 1))
                permuted_ys = tuple(ys[pi_inv(i) - 1] for i in range(1, r + 1))
                cable = group.operad_mu(h, [group.identity(k) for k in ks])
                left = register((r, ks, x.action(r, head, h), ys, g))
                right = register(
                    (r, permuted_ks, head, permuted_ys, group.multiply(cable, g))
                )
                uf.unite(left, right)
            # Moving g_i out of the argument slots block-sums them onto the
            # final coordinate.
            for gs in itertools.product(*(group.elements(k) for k in ks)):
                block = group.operad_mu(group.identity(r), list(gs))
                left = register((r, ks, head, ys, group.multiply(block, g)))
                acted = tuple(y.action(k, label, gi) for k, label, gi in zip(ks, ys, gs))
                right = register((r, ks, head, acted, g))
                uf.unite(left, right)

        groups: dict[tuple, list[tuple]] = {}
        for key in states:
            groups.setdefault(uf.find(key), []).append(key)
        representatives = []
        for members in groups.values():
            rep_key = min(members)
            for member in members:
                canonical[member] = states[rep_key]
            representatives.append(states[rep_key])
        classes_by_arity[n] = sorted(representatives, key=key_of)

    return ComposedCollection(
        name=f"{x.name} o {y.name}",
        group=group,
        bound=bound,
        classes_by_arity=classes_by_arity,
        _canonical=canonical,
    )


def unit_collection(group: ActionOperad) -> FiniteGCollection:
    """The composition unit: the arity-1 group acting on itself on the right."""
    if group.elements is None:
        raise ValueError("the unit collection needs an enumerable group")
    elements = {group.describe(g): g for g in group.elements(1)}

    def action(n: int, label: str, gamma: Any) -> str:
        return group.describe(group.multiply(elements[label], gamma))

    return FiniteGCollection(
        name="unit",
        group=group,
        levels={1: tuple(sorted(elements))},
        action=action,
    )
