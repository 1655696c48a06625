"""
Tests for finite operads with a group of equivariance.

The law checkers are exhaustive within each operad's arity bound, so most
tests here assert reports rather than re-deriving the algebra.  Expected
counts (endomorphism level sizes, algebra-structure counts, composite class
counts) are frozen from independent first-principles enumerations spelled
out in comments next to each assertion.
"""

import copy
import json

import pytest

from operadics.action_operads import instance_braid, instance_symmetric, instance_trivial
from operadics.g_operads import (
    AlgebraStructure,
    FiniteGCollection,
    arity_signatures,
    change_groups,
    check_algebra,
    check_collection,
    check_operad,
    compose_collections,
    endomorphism_operad,
    enumerate_algebra_structures,
    enumerate_operad_maps,
    load_operad,
    operad_ass,
    operad_comm,
    operad_comm_trivial,
    table_algebra,
    unit_collection,
    write_operad_document,
)
from operadics.permutations import Permutation


# ------------------------------------------------------------ law checks


def test_comm_passes_all_laws():
    report = check_operad(operad_comm(max_arity=4))
    assert report.ok, report.render()


def test_ass_passes_all_laws():
    report = check_operad(operad_ass(3))
    assert report.ok, report.render()
    # The associativity sweep really is exhaustive, not a token sample.
    assert report.result("operad associativity").checked > 10_000


def test_comm_over_trivial_group_passes():
    report = check_operad(operad_comm_trivial(3))
    assert report.ok, report.render()


def test_unit_law_mutation_is_caught():
    ass = operad_ass(2)
    honest = ass.compose

    def corrupted(n, ks, head, args):
        if n == 1 and head == ass.unit and tuple(ks) == (2,) and tuple(args) == ("12",):
            return "21"
        return honest(n, ks, head, args)

    ass.compose = corrupted
    report = check_operad(ass)
    assert not report.ok
    failure = report.result("operad unit")
    assert not failure.passed
    assert "12" in failure.witness


def test_signatures_enumeration():
    # Signatures (n; k_1..k_n) with n, sum(k) <= 2, counted by hand:
    # n=0: (); n=1: (0),(1),(2); n=2: (0,0),(0,1),(1,0),(0,2),(2,0),(1,1).
    assert sum(1 for _ in arity_signatures(2)) == 10


# ----------------------------------------------------- endomorphism operads


def test_endomorphism_level_sizes_and_laws():
    endo = endomorphism_operad(("a", "b"), instance_symmetric(), max_arity=2)
    # |X|^(|X|^n) functions X^n -> X: 2^1, 2^2, 2^4.
    assert [len(endo.labels(n)) for n in range(3)] == [2, 4, 16]
    assert endo.unit == "a,b"
    report = check_operad(endo)
    assert report.ok, report.render()


def test_endomorphism_action_permutes_inputs():
    endo = endomorphism_operad(("a", "b"), instance_symmetric(), max_arity=2)
    swap = Permutation((2, 1))
    # The projection function (x, y) -> x becomes (x, y) -> y under the swap.
    first = ",".join("ab"[xs // 2] for xs in range(4))   # a,a,b,b
    second = ",".join("ab"[xs % 2] for xs in range(4))   # a,b,a,b
    assert endo.action(2, first, swap) == second
    assert endo.action(2, second, swap) == first


def test_endomorphism_size_guard():
    with pytest.raises(ValueError, match="more than the limit"):
        endomorphism_operad(("a", "b", "c"), instance_symmetric(), max_arity=2)


# ------------------------------------------------------ algebras and maps


def test_algebra_structures_match_operad_maps_comm():
    # Algebras for the one-operation operad on a 2-element set are the
    # commutative unital magmas: pick the unit (2 ways) and the value of
    # f(b, b) for b the non-unit (2 ways) -> 4 structures.  Each should
    # correspond to exactly one equivariant operad map into endomorphisms.
    comm = operad_comm(max_arity=2)
    endo = endomorphism_operad(("a", "b"), instance_symmetric(), max_arity=2)
    algebras = enumerate_algebra_structures(comm, ("a", "b"))
    maps = enumerate_operad_maps(comm, endo)
    assert len(algebras) == 4
    assert len(maps) == 4
    for algebra in algebras:
        assert algebra.maps(2, "*", ("a", "b")) == algebra.maps(2, "*", ("b", "a"))


def test_algebra_structures_match_operad_maps_ass():
    # Unital magmas on two elements with a free f(b, b): again 4.
    ass = operad_ass(2)
    endo = endomorphism_operad(("a", "b"), instance_symmetric(), max_arity=2)
    assert len(enumerate_algebra_structures(ass, ("a", "b"))) == 4
    assert len(enumerate_operad_maps(ass, endo)) == 4


def test_check_algebra_catches_non_equivariant_table():
    comm = operad_comm(max_arity=2)
    table = {}
    for n in range(3):
        for xs in [(), ("a",), ("b",), ("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]:
            if len(xs) == n:
                table[(n, "*", xs)] = xs[0] if xs else "a"
    # f(a, b) = a but f(b, a) = b: incompatible with the swap acting trivially.
    report = check_algebra(comm, table_algebra(("a", "b"), table))
    failure = report.result("algebra equivariance")
    assert not failure.passed
    assert "n=2" in failure.witness


def test_tautological_endomorphism_algebra_passes():
    endo = endomorphism_operad(("a", "b"), instance_symmetric(), max_arity=2)

    def evaluate(n, label, xs):
        import itertools
        inputs = list(itertools.product(("a", "b"), repeat=n))
        return dict(zip(inputs, label.split(",")))[tuple(xs)]

    report = check_algebra(endo, AlgebraStructure(("a", "b"), evaluate))
    assert report.ok, report.render()


# ------------------------------------------------------- change of groups


def test_change_groups_forgets_symmetry():
    sym = instance_symmetric()
    ass = operad_ass(3)
    forgetful = change_groups(lambda n: sym.identity(n), instance_trivial(), ass)
    report = check_operad(forgetful)
    assert report.ok, report.render()


def test_change_groups_braid_pullback():
    br = instance_braid()
    comm_br = change_groups(br.project, br, operad_comm(max_arity=3))
    report = check_operad(comm_br, budget=6, seed=11)
    assert report.ok, report.render()


# -------------------------------------------------------- document format


def test_document_roundtrip_is_stable():
    ass = operad_ass(3)
    document = write_operad_document(ass)
    assert len(document["compose"]) == 323
    loaded = load_operad(document, name="ass from tables")
    assert write_operad_document(loaded) == document
    assert json.loads(json.dumps(document)) == document
    report = check_operad(loaded)
    assert report.ok, report.render()


def test_loaded_action_composes_generators_correctly():
    # The document only stores generator columns; acting by an arbitrary
    # permutation must agree with the builder's action.
    ass = operad_ass(3)
    loaded = load_operad(write_operad_document(ass))
    sym = instance_symmetric()
    for n in range(4):
        for label in ass.labels(n):
            for g in sym.elements(n):
                assert loaded.action(n, label, g) == ass.action(n, label, g)


def _broken(document, mutate):
    document = copy.deepcopy(document)
    mutate(document)
    return document


def test_document_validation_errors():
    document = write_operad_document(operad_ass(2))
    cases = [
        (lambda d: d.update(group="cyclic"), "expected 'trivial' or 'symmetric'"),
        (lambda d: d.update(max_arity=-1), "max_arity"),
        (lambda d: d["levels"].pop("2"), "levels: missing arity 2"),
        (lambda d: d["levels"]["1"].append("1"), "levels\\[1\\]: duplicate"),
        (lambda d: d["action"]["2"].append(["12", "21"]), "action\\[2\\]: expected 1 generator rows, got 2"),
        (lambda d: d["action"]["2"][0].__setitem__(0, "12"), "action\\[2\\]\\[0\\]: not a permutation"),
        (lambda d: d.update(unit="21"), "unit: '21' is not a label of arity 1"),
        (lambda d: d["compose"].pop(0), "compose: missing entry"),
        (lambda d: d["compose"][0].pop("result"), "compose\\[0\\]: needs the keys"),
        (lambda d: d["compose"][-1].update(result="nope"), "is not in level"),
    ]
    for mutate, message in cases:
        with pytest.raises(ValueError, match=message):
            load_operad(_broken(document, mutate))


def test_document_duplicate_conflict():
    document = write_operad_document(operad_ass(2))
    record = copy.deepcopy(document["compose"][-1])
    record["result"] = "21" if record["result"] != "21" else "12"
    document["compose"].append(record)
    with pytest.raises(ValueError, match="conflicting duplicate"):
        load_operad(document)


def test_braid_operads_are_not_serializable():
    br = instance_braid()
    comm_br = change_groups(br.project, br, operad_comm(max_arity=2))
    with pytest.raises(ValueError, match="only trivial and symmetric"):
        write_operad_document(comm_br)


# ---------------------------------------------------- composition product


def _constant_collection(name, sizes, group):
    levels = {
        n: tuple(f"{name}{n}_{i}" for i in range(count)) for n, count in sizes.items()
    }
    return FiniteGCollection(name, group, levels, lambda n, label, g: label)


def _swap_collection(group):
    """One unary label, two binary labels exchanged by odd permutations."""
    levels = {1: ("s1",), 2: ("u", "v")}

    def action(n, label, g):
        if n == 2 and group.project(g).image == (2, 1):
            return {"u": "v", "v": "u"}[label]
        return label

    return FiniteGCollection("s", group, levels, action)


def test_composition_product_class_counts():
    sym = instance_symmetric()
    x = _constant_collection("x", {1: 1, 2: 1}, sym)
    y = _constant_collection("y", {1: 1, 2: 1}, sym)
    xy = compose_collections(x, y, 3)
    # By hand: arity 1 has the single tuple (x1; y1; e).  Arity 2 has
    # (x1; y2; g) with g ~ hg collapsing Sigma_2, and (x2; y1,y1; g)
    # likewise.  Arity 3: only r=2 contributes; the block relation glues
    # Sigma_3 into 3 cosets and the operad-slot relation glues the two
    # argument orders, leaving 3 classes.
    assert [len(xy.classes(n)) for n in range(4)] == [0, 1, 2, 3]
    report = check_collection(xy.collection(), bound=3)
    assert report.ok, report.render()


def test_composition_product_respects_nontrivial_actions():
    sym = instance_symmetric()
    x = _constant_collection("x", {1: 1, 2: 1}, sym)
    y = _swap_collection(sym)
    xy = compose_collections(x, y, 2)
    # The four tuples (x1; u|v; g) glue in pairs — (x1; v; g) ~ (x1; u; hg)
    # by the block relation — and (x2; s1,s1; g) glues across Sigma_2,
    # leaving three classes, every glued representative written with u.
    assert len(xy.classes(2)) == 3
    labels = {xy.describe_state(s) for s in xy.classes(2)}
    assert not any("v" in label for label in labels)
    report = check_collection(xy.collection(), bound=2)
    assert report.ok, report.render()


def test_unit_collection_is_left_and_right_unit():
    sym = instance_symmetric()
    y = _swap_collection(sym)
    unit = unit_collection(sym)

    left = compose_collections(unit, y, 2)
    for n in range(3):
        # [e; y; g] -> y.g is a bijection of classes onto Y(n) ...
        values = {}
        for state in left.classes(n):
            _, _, _, ys, g = state
            values[left.describe_state(state)] = y.action(n, ys[0], g)
        assert sorted(values.values()) == sorted(y.labels(n))
        # ... commuting with the group actions on both sides.
        for state in left.classes(n):
            for gamma in sym.elements(n):
                acted = left.act(state, gamma)
                _, _, _, ys, g = acted
                assert y.action(n, ys[0], g) == y.action(
                    n, values[left.describe_state(state)], gamma
                )

    right = compose_collections(y, unit, 2)
    for n in range(3):
        values = {}
        for state in right.classes(n):
            _, _, head, _, g = state
            values[right.describe_state(state)] = y.action(n, head, g)
        assert sorted(values.values()) == sorted(y.labels(n))
        for state in right.classes(n):
            for gamma in sym.elements(n):
                acted = right.act(state, gamma)
                _, _, head, _, g = acted
                assert y.action(n, head, g) == y.action(
                    n, values[right.describe_state(state)], gamma
                )


def test_composition_product_associativity_counts():
    sym = instance_symmetric()
    x = _constant_collection("x", {1: 1, 2: 1}, sym)
    y = _swap_collection(sym)
    z = _constant_collection("z", {1: 1, 2: 1}, sym)
    left = compose_collections(compose_collections(x, y, 3).collection(), z, 3)
    right = compose_collections(x, compose_collections(y, z, 3).collection(), 3)
    counts_left = [len(left.classes(n)) for n in range(4)]
    counts_right = [len(right.classes(n)) for n in range(4)]
    assert counts_left == counts_right


def test_composition_product_over_trivial_group():
    trivial = instance_trivial()
    x = _constant_collection("x", {1: 2}, trivial)
    y = _constant_collection("y", {1: 3}, trivial)
    xy = compose_collections(x, y, 2)
    # No relations over the trivial group: plain tuple counting gives 2*3.
    assert len(xy.classes(1)) == 6


def test_composition_product_needs_enumerable_group():
    br = instance_braid()
    x = _constant_collection("x", {1: 1}, br)
    with pytest.raises(ValueError, match="finite group of equivariance"):
        compose_collections(x, x, 2)


def test_class_action_closes_on_canonical_representatives():
    sym = instance_symmetric()
    x = _constant_collection("x", {1: 1, 2: 1}, sym)
    y = _swap_collection(sym)
    xy = compose_collections(x, y, 3)
    for n in range(4):
        reps = set(map(xy.describe_state, xy.classes(n)))
        for state in xy.classes(n):
            for gamma in sym.elements(n):
                assert xy.describe_state(xy.act(state, gamma)) in reps
