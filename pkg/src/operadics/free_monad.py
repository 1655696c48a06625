"""
Free algebras over a finite operad with a group of equivariance.

For an operad P over a finite group and a finite carrier X, the free
algebra collects the tuples (p; x_1..x_n) with p of arity n and entries
from X, identified whenever one is carried to the other by a group
element:

    (p . g; x_1..x_n)  ~  (p; x_{pi(g)^-1(1)}, ..., x_{pi(g)^-1(n)})

Classes are stored by their lexicographically least representative and
rendered as "[p; x1,...,xn]".  The construction is a monad: `unit_eta`
wraps a carrier element as [unit; x], and `mult_mu` flattens a class
whose items are themselves classes.  `check_monad_laws` verifies the
monad laws and the correspondence between algebra structures and monad
algebras; `cartesian_condition` and `pullback_witness_test` decide, in two
independent ways, whether the construction preserves pullbacks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping, Sequence

from .g_operads import (
    AlgebraStructure,
    FiniteGOperad,
    check_algebra,
    enumerate_algebra_structures,
)
from .permutations import act_on_list
from .reporting import Report


class ArityOverflowError(Exception):
    """Raised when flattening nested classes would exceed the arity bound."""


@dataclass(frozen=True)
class FreeAlgebraClass:
    """A canonical representative (operation label; carrier items)."""

    label: str
    items: tuple[str, ...]

    @property
    def arity(self) -> int:
        return len(self.items)

    def __str__(self) -> str:
        return f"[{self.label}; {','.join(self.items)}]" if self.items else f"[{self.label};]"


@dataclass
class FreeAlgebra:
    """All classes of the free algebra on a carrier, up to the arity bound."""

    operad: FiniteGOperad
    carrier: tuple[str, ...]
    max_arity: int
    classes_by_arity: dict[int, list[FreeAlgebraClass]]
    _canonical: dict[tuple[str, tuple[str, ...]], FreeAlgebraClass] = field(repr=False, default_factory=dict)

    def classes(self, n: int) -> list[FreeAlgebraClass]:
        return list(self.classes_by_arity.get(n, []))

    def all_classes(self) -> list[FreeAlgebraClass]:
        return [c for n in sorted(self.classes_by_arity) for c in self.classes_by_arity[n]]

    def canonical(self, label: str, items: Sequence[str]) -> FreeAlgebraClass:
        key = (label, tuple(items))
        if key not in self._canonical:
            raise ValueError(f"unknown free-algebra element ({label!r}; {list(items)})")
        return self._canonical[key]


def free_algebra(p: FiniteGOperad, carrier: Sequence[str], max_arity: int | None = None) -> FreeAlgebra:
    """Enumerate the classes [p; x1..xn] for n up to the arity bound."""
    if p.group.elements is None:
        raise ValueError("free-algebra classes need a finite group of equivariance")
    carrier = tuple(carrier)
    if len(set(carrier)) != len(carrier):
        raise ValueError("carrier elements must be distinct")
    bound = p.max_arity if max_arity is None else max_arity
    if bound > p.max_arity:
        raise ValueError(f"arity bound {bound} exceeds the operad's bound {p.max_arity}")

    classes_by_arity: dict[int, list[FreeAlgebraClass]] = {}
    canonical: dict[tuple[str, tuple[str, ...]], FreeAlgebraClass] = {}
    for n in range(bound + 1):
        states = [
            (label, xs)
            for label in p.labels(n)
            for xs in itertools.product(carrier, repeat=n)
        ]
        parent = {state: state for state in states}

        def find(state):
            root = state
            while parent[root] != root:
                root = parent[root]
            while parent[state] != root:
                parent[state], state = root, parent[state]
            return root

        for label, xs in states:
            for g in p.group.elements(n):
                mate = (
                    p.action(n, label, g),
                    tuple(act_on_list(p.group.project(g).inverse(), xs)),
                )
                ra, rb = find((label, xs)), find(mate)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)

        orbits: dict[tuple, list[tuple]] = {}
        for state in states:
            orbits.setdefault(find(state), []).append(state)
        representatives = []
        for members in orbits.values():
            rep = FreeAlgebraClass(*min(members))
            representatives.append(rep)
            for member in members:
                canonical[member] = rep
        classes_by_arity[n] = sorted(representatives, key=lambda c: (c.label, c.items))

    return FreeAlgebra(p, carrier, bound, classes_by_arity, canonical)


def unit_eta(free: FreeAlgebra, x: str) -> FreeAlgebraClass:
    """The monad unit: a carrier element wrapped under the operad unit."""
    if x not in free.carrier:
        raise ValueError(f"{x!r} is not a carrier element")
    return free.canonical(free.operad.unit, (x,))


def mult_mu(free: FreeAlgebra, label: str, inner: Sequence[FreeAlgebraClass]) -> FreeAlgebraClass:
    """
    The monad multiplication: flatten a class-of-classes [label; inner]
    into a single class by substituting the inner labels and concatenating
    their items.
    """
    n = len(inner)
    if label not in free.operad.labels(n):
        raise ValueError(f"unknown label {label!r} at arity {n}")
    ks = tuple(c.arity for c in inner)
    total = sum(ks)
    if total > free.max_arity:
        raise ArityOverflowError(
            f"flattening needs arity {total}, beyond the bound {free.max_arity}"
        )
    flat_label = free.operad.compose(n, ks, label, [c.label for c in inner])
    items = tuple(itertools.chain.from_iterable(c.items for c in inner))
    return free.canonical(flat_label, items)


def _nestings(free: FreeAlgebra) -> Iterator[tuple[int, str, tuple[FreeAlgebraClass, ...]]]:
    """All (n, label, inner classes) with the flattened arity in bounds."""
    pool = free.all_classes()
    for n in range(free.max_arity + 1):
        for inner in itertools.product(pool, repeat=n):
            if sum(c.arity for c in inner) > free.max_arity:
                continue
            for label in free.operad.labels(n):
                yield n, label, inner


def _truncate(p: FiniteGOperad, bound: int) -> FiniteGOperad:
    if bound >= p.max_arity:
        return p
    return FiniteGOperad(
        name=f"{p.name} (arity <= {bound})",
        group=p.group,
        levels={n: p.labels(n) for n in range(bound + 1)},
        unit=p.unit,
        action=p.action,
        compose=p.compose,
        max_arity=bound,
    )


def check_monad_laws(
    p: FiniteGOperad,
    carrier: Sequence[str],
    *,
    max_arity: int | None = None,
    correspondence_bound: int = 2,
) -> Report:
    """
    Verify that the free construction really is a monad on finite sets:
    well-definedness of the flattening, both unit laws, associativity, and
    the correspondence between operad algebras and monad algebras (the
    latter at a smaller bound, since it enumerates whole function tables).
    """
    free = free_algebra(p, carrier, max_arity)
    bound = free.max_arity
    group = p.group
    report = Report(f"monad laws: {p.name} on {{{','.join(free.carrier)}}}")

    well_ok, well_witness, well_count = True, "", 0
    for n, label, inner in _nestings(free):
        value = mult_mu(free, label, inner)
        for g in group.elements(n):
            well_count += 1
            moved_label = p.action(n, label, g)
            moved_inner = tuple(act_on_list(group.project(g).inverse(), inner))
            if mult_mu(free, moved_label, moved_inner) != value:
                well_ok = False
                well_witness = f"label={label}, inner={[str(c) for c in inner]}, g={group.describe(g)}"
                break
    report.record("multiplication is constant on classes", well_ok, well_witness, well_count)

    left_ok, left_witness, left_count = True, "", 0
    for cls in free.all_classes():
        left_count += 1
        if mult_mu(free, p.unit, (cls,)) != cls:
            left_ok, left_witness = False, str(cls)
            break
    report.record("left unit law", left_ok, left_witness, left_count)

    right_ok, right_witness, right_count = True, "", 0
    for cls in free.all_classes():
        right_count += 1
        wrapped = tuple(unit_eta(free, x) for x in cls.items)
        if mult_mu(free, cls.label, wrapped) != cls:
            right_ok, right_witness = False, str(cls)
            break
    report.record("right unit law", right_ok, right_witness, right_count)

    # Associativity: a three-level nesting [q; [p_i; classes_i]] flattens
    # either middle-first (each [p_i; classes_i] collapses to one class)
    # or outer-first (q and the p_i merge, then one flattening).
    assoc_ok, assoc_witness, assoc_count = True, "", 0
    pool = free.all_classes()
    for n in range(bound + 1):
        for rs in itertools.product(range(bound + 1), repeat=n):
            if sum(rs) > bound:
                continue
            for q in p.labels(n):
                for ps in itertools.product(*(p.labels(r) for r in rs)):
                    for flat in itertools.product(pool, repeat=sum(rs)):
                        if sum(c.arity for c in flat) > bound:
                            continue
                        assoc_count += 1
                        groups = []
                        start = 0
                        for r in rs:
                            groups.append(flat[start:start + r])
                            start += r
                        middle_first = mult_mu(
                            free,
                            q,
                            tuple(
                                mult_mu(free, head, group)
                                for head, group in zip(ps, groups)
                            ),
                        )
                        outer_first = mult_mu(free, p.compose(n, rs, q, ps), flat)
                        if middle_first != outer_first:
                            assoc_ok = False
                            assoc_witness = (
                                f"q={q}, ps={list(ps)}, classes={[str(c) for c in flat]}"
                            )
                            break
    report.record("associativity", assoc_ok, assoc_witness, assoc_count)

    truncated = _truncate(p, min(correspondence_bound, bound))
    algebras = enumerate_algebra_structures(truncated, free.carrier)
    monad_maps = _monad_algebra_maps(truncated, free.carrier)
    small = free_algebra(truncated, free.carrier)
    induced = {
        tuple(algebra.maps(c.arity, c.label, c.items) for c in small.all_classes())
        for algebra in algebras
    }
    corr_ok = len(algebras) == len(monad_maps) and induced == set(monad_maps)
    corr_witness = "" if corr_ok else (
        f"{len(algebras)} algebra structures vs {len(monad_maps)} monad algebras"
    )
    report.record(
        "algebra structures correspond to monad algebras",
        corr_ok,
        corr_witness,
        len(algebras) + len(monad_maps),
    )
    return report


def _monad_algebra_maps(p: FiniteGOperad, carrier: Sequence[str]) -> list[tuple[str, ...]]:
    """
    Enumerate every map h from the free-algebra classes to the carrier
    satisfying the monad-algebra laws, as value tuples over all_classes().
    """
    free = free_algebra(p, carrier)
    classes = free.all_classes()
    nestings = list(_nestings(free))
    found = []
    for values in itertools.product(free.carrier, repeat=len(classes)):
        h = dict(zip(classes, values))
        if any(h[unit_eta(free, x)] != x for x in free.carrier):
            continue
        ok = True
        for n, label, inner in nestings:
            flattened = h[mult_mu(free, label, inner)]
            substituted = free.canonical(label, tuple(h[c] for c in inner))
            if flattened != h[substituted]:
                ok = False
                break
        if ok:
            found.append(values)
    return found


# ----------------------------------------------------- pullback behaviour


def cartesian_condition(p: FiniteGOperad) -> tuple[bool, tuple[int, str, Any] | None]:
    """
    The pointwise criterion: no operation may be fixed by a group element
    with a nontrivial underlying permutation.  Returns (True, None) or
    (False, (arity, label, group element)).
    """
    if p.group.elements is None:
        raise ValueError("the pointwise criterion needs a finite group of equivariance")
    for n in range(p.max_arity + 1):
        for g in p.group.elements(n):
            if p.group.project(g).is_identity():
                continue
            for label in p.labels(n):
                if p.action(n, label, g) == label:
                    return False, (n, label, g)
    return True, None


def pullback_witness_test(p: FiniteGOperad, max_arity: int | None = None) -> tuple[bool, str]:
    """
    The transformation-level criterion on one concrete square: apply the
    free construction to the pullback of two two-element sets over a
    point and check, arity by arity, that classes of pairs biject with
    pairs of classes.  Returns (True, "") or (False, witness).
    """
    left = ("x1", "x2")
    right = ("y1", "y2")
    pairs = tuple(f"{u}{v}" for u in left for v in right)
    first = {f"{u}{v}": u for u in left for v in right}
    second = {f"{u}{v}": v for u in left for v in right}

    free_pairs = free_algebra(p, pairs, max_arity)
    free_left = free_algebra(p, left, max_arity)
    free_right = free_algebra(p, right, max_arity)
    free_point = free_algebra(p, ("z",), max_arity)

    def push(free_target, mapping, cls):
        return free_target.canonical(cls.label, tuple(mapping[x] for x in cls.items))

    collapse_left = {x: "z" for x in left}
    collapse_right = {y: "z" for y in right}

    for n in range(free_pairs.max_arity + 1):
        images = {}
        for cls in free_pairs.classes(n):
            image = (push(free_left, first, cls), push(free_right, second, cls))
            if image in images:
                return False, (
                    f"classes {images[image]} and {cls} both map to "
                    f"({image[0]}, {image[1]})"
                )
            images[image] = cls
        fiber_pairs = [
            (a, b)
            for a in free_left.classes(n)
            for b in free_right.classes(n)
            if push(free_point, collapse_left, a) == push(free_point, collapse_right, b)
        ]
        for pair in fiber_pairs:
            if pair not in images:
                return False, f"pair ({pair[0]}, {pair[1]}) has no class of pairs above it"
        if len(fiber_pairs) != len(images):
            return False, f"arity {n}: {len(images)} classes vs {len(fiber_pairs)} fiber pairs"
    return True, ""
