import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlse import (
    LAWS,
    OrthoLattice,
    RingLikeAlgebra,
    check_boolean_ring,
    check_characteristic_two,
    check_law,
    check_meet_semilattice,
    check_near_rlse,
    check_ortholattice,
    check_orthomodular,
    check_rlse,
    check_specific,
    check_th1_conditions,
    check_w_axioms,
    check_weakly_associative,
    check_weakly_distributive,
    commutator_lattice,
    commutator_rlse,
    commutes_lattice,
    commutes_rlse,
    derive_order,
    l_of_r,
    orthogonal_lattice,
    orthogonal_rlse,
    reevaluate,
    rlse_profile,
)
from rlse import catalog as C
from rlse.errors import NotAPartialOrder

A, A1, B, B1 = 1, 2, 3, 4  # MO_2 atoms


def mutated(alg, table, cell, value):
    plus, times = alg.plus.copy(), alg.times.copy()
    {"plus": plus, "times": times}[table][cell] = value
    return RingLikeAlgebra(plus, times, alg.zero, alg.one, alg.names)


# -- construction ----------------------------------------------------------


def test_table_validation():
    with pytest.raises(ValueError):
        RingLikeAlgebra([[0, 2], [1, 0]], [[0, 0], [0, 1]], 0, 1)
    with pytest.raises(ValueError):
        RingLikeAlgebra([[0, 1], [1, 0]], [[0, 0], [0, 1]], 0, 0)
    with pytest.raises(ValueError):
        OrthoLattice([[0, 0], [0, 1]], [[0, 1], [1, 1]], [0, 0], 0, 1)


def test_tables_are_read_only(r_mo2):
    with pytest.raises(ValueError):
        r_mo2.plus[0, 0] = 1


def test_labels(r_mo2):
    assert r_mo2.label(2) == "a'"
    assert r_mo2.index("b'") == 4
    assert r_mo2.index(3) == 3


# -- derive_order -----------------------------------------------------------


def test_order_two_element_chain():
    po = derive_order(C.boolean_ring(1))
    assert {(x, y) for x, y in itertools.product(range(2), repeat=2) if po.leq[x, y]} == {(0, 0), (0, 1), (1, 1)}


def test_order_mo2(r_mo2):
    po = derive_order(r_mo2)
    assert not po.leq[A, B] and not po.leq[B, A]
    assert po.leq[0, A] and po.leq[A, 5]


def test_order_constant_times_fails_reflexivity():
    alg = RingLikeAlgebra(np.zeros((3, 3), int), np.zeros((3, 3), int), 0, 1)
    with pytest.raises(NotAPartialOrder) as exc:
        derive_order(alg)
    assert exc.value.law == "reflexivity"
    assert exc.value.witness == (1,)


# -- semilattice and RLSE ---------------------------------------------------


def test_semilattice_boolean_ring():
    assert check_meet_semilattice(C.boolean_ring(2))


def test_semilattice_mutation_gives_pair_witness():
    bad = mutated(C.boolean_ring(2), "times", (1, 2), 1)
    v = check_meet_semilattice(bad)
    assert not v and v.law == "times_comm" and v.witness == (1, 2)
    assert (v.lhs, v.rhs) == (1, 0)


def test_semilattice_of_r_mo2(r_mo2):
    assert check_meet_semilattice(r_mo2)


def test_rlse_examples(r_mo2):
    assert check_rlse(r_mo2)
    assert check_rlse(C.weakly_associative_mo2(A1))


def test_rlse_fails_on_half_valued_maxmin():
    from rlse import EventFamily, StateSpace, maxmin_algebra

    fam = EventFamily(StateSpace(["s"]), [(0,), ("1/2",), (1,)])
    v = check_rlse(maxmin_algebra(fam))
    assert not v and v.law in ("R3", "R4")


def test_near_rlse(r_mo2):
    assert check_near_rlse(r_mo2)
    bad = mutated(r_mo2, "plus", (5, 5), 5)  # 1+1 = 1 breaks R2 at x = 0
    v = check_near_rlse(bad)
    assert not v and v.law in ("R1", "R2")


def test_w_axioms(r_mo2):
    assert check_w_axioms(r_mo2)
    assert check_w_axioms(C.boolean_ring(3))
    for c in (A, A1, B, B1, 5):
        v = check_w_axioms(C.weakly_associative_mo2(c))
        assert v and len(v.parts) == 6


def test_w_axioms_parts_report_each_law():
    alg = C.extend_plus(C.boolean_lattice(2), [2, 1])  # a+a = a', a'+a' = a
    v = check_w_axioms(alg)
    assert not v
    assert [p.law for p in v.parts] == ["W1", "W2", "W3", "W4", "W5", "W6"]
    assert v.law == next(p.law for p in v.parts if not p.passed)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_boolean_ring_passes(n):
    assert check_boolean_ring(C.boolean_ring(n))


def test_boolean_ring_fails(r_mo2):
    assert not check_boolean_ring(r_mo2)
    assert not check_boolean_ring(C.weakly_associative_mo2(A1))


def test_weak_associativity_witness_is_distinct_atoms(r_mo2):
    v = check_weakly_associative(r_mo2)
    assert not v and v.witness == (A, B)
    # (a+b)+1 = 1 and a+(b+1) = 0
    assert (v.lhs, v.rhs) == (5, 0)


def test_collect_all_failures(r_mo2):
    v = check_weakly_associative(r_mo2, collect=True)
    witnesses = {f.witness for f in v.failures}
    assert v.witness == v.failures[0].witness
    assert {(A, B), (B, A), (A1, B1)} <= witnesses
    assert all(reevaluate(f, r_mo2) == (f.lhs, f.rhs) for f in v.failures)


# -- lattices ---------------------------------------------------------------


def test_th1_conditions(mo2, r_mo2):
    assert check_th1_conditions(mo2, r_mo2.plus)
    assert check_th1_conditions(mo2, C.weakly_associative_mo2(A1).plus)
    plus = r_mo2.plus.copy()
    plus[A, B] = A
    v = check_th1_conditions(mo2, plus)
    assert not v and v.law == "th1_a" and v.witness == (A, B)


def test_th1_condition_c_violation(mo2, r_mo2):
    plus = r_mo2.plus.copy()
    plus[A, A1] = plus[A1, A] = 0  # a <= a'' so a+a' must be a v a' = 1
    v = check_th1_conditions(mo2, plus)
    assert not v and v.law == "th1_c" and v.witness == (A, A1)


def brute_orthomodular(lat):
    """Independent scan with Python ints and explicit order pairs."""
    n = lat.size
    le = {(x, y) for x in range(n) for y in range(n) if int(lat.meet[x][y]) == x}
    for x, y in sorted(le):
        if int(lat.join[x][int(lat.meet[int(lat.comp[x])][y])]) != y:
            return False
    return True


def test_orthomodular_examples(mo2):
    assert check_orthomodular(mo2)
    assert check_orthomodular(C.boolean_lattice(3))
    hexagon = C.hexagon_lattice()
    assert check_ortholattice(hexagon)
    v = check_orthomodular(hexagon)
    assert not v and v.law == "orthomodular"
    assert brute_orthomodular(hexagon) is False
    assert brute_orthomodular(mo2) is True


def test_orthomodular_witness_hexagon():
    hexagon = C.hexagon_lattice()
    v = check_orthomodular(hexagon)
    x, y = v.witness
    assert hexagon.leq[x, y]
    assert reevaluate(v, hexagon) == (v.lhs, v.rhs)


def test_ortholattice_detects_bad_complement(mo2):
    comp = mo2.comp.copy()
    comp[[A1, B]] = comp[[B, A1]]  # a' and b swap partners
    lat = OrthoLattice(mo2.meet, mo2.join, comp, 0, 5)
    assert not check_ortholattice(lat)


# -- commuting ---------------------------------------------------------------


def test_commutes_rlse(r_mo2):
    assert commutes_rlse(r_mo2, A, A1)
    assert not commutes_rlse(r_mo2, A, B)
    ring = C.boolean_ring(2)
    assert all(commutes_rlse(ring, x, y) for x in range(4) for y in range(4))


def test_commutator_rlse(r_mo2):
    ring = C.boolean_ring(2)
    assert all(commutator_rlse(ring, x, y) == ring.one for x in range(4) for y in range(4))
    assert commutator_rlse(r_mo2, A, B) == 0
    assert all(commutator_rlse(r_mo2, x, 5) == 5 for x in range(6))


def test_lattice_commuting(mo2):
    assert commutes_lattice(mo2, A, A1)
    assert not commutes_lattice(mo2, A, B)
    assert commutator_lattice(mo2, A, B) == 0


# -- invariants over many RLSEs ----------------------------------------------


def rlse_pool():
    pool = [C.boolean_ring(n) for n in (1, 2, 3)]
    pool += [C.specific_rlse_mo(n) for n in (1, 2, 3)]
    pool += [C.weakly_associative_mo2(c) for c in range(6)]
    pool += C.enumerate_plus_extensions(C.boolean_lattice(2))
    pool += C.enumerate_plus_extensions(C.mo_lattice(2), limit=60)
    return pool


POOL = rlse_pool()


@pytest.mark.parametrize("alg", POOL, ids=lambda a: f"n{a.size}")
def test_prop1_clauses(alg):
    assert check_rlse(alg)
    lat = l_of_r(alg)
    n, o, z = alg.size, alg.one, alg.zero
    P, T = alg.plus, alg.times
    specific = check_specific(alg).passed
    for x in range(n):
        assert P[P[x, o], o] == x
        assert T[x, P[x, o]] == z
        assert P[x, z] == x
        assert P[x, P[x, o]] == o
        if specific:
            assert P[x, x] == z
    for x, y in itertools.product(range(n), repeat=2):
        assert (T[x, y] == x) == (T[P[y, o], P[x, o]] == P[y, o])
        if orthogonal_rlse(alg, x, y):
            assert P[P[x, y], o] == T[P[x, o], P[y, o]]
        if lat.meet[x, lat.comp[y]] == x:
            assert P[x, y] == lat.join[x, y]
        assert orthogonal_rlse(alg, x, y) == orthogonal_lattice(lat, x, y)


@pytest.mark.parametrize("alg", POOL, ids=lambda a: f"n{a.size}")
def test_commuting_and_commutator_agree(alg):
    lat = l_of_r(alg)
    for x, y in itertools.product(range(alg.size), repeat=2):
        assert commutes_rlse(alg, x, y) == commutes_lattice(lat, x, y)
        assert commutator_rlse(alg, x, y) == commutator_lattice(lat, x, y)


@pytest.mark.parametrize("alg", POOL, ids=lambda a: f"n{a.size}")
def test_class_implications(alg):
    spec = check_specific(alg).passed
    wd = check_weakly_distributive(alg).passed
    wa = check_weakly_associative(alg).passed
    assert not spec or wd
    assert not wd or check_characteristic_two(alg)
    assert not wa or wd
    assert bool(check_w_axioms(alg)) == wd
    if spec and wa:
        assert check_boolean_ring(alg)
    if spec:
        cor3 = check_law(alg, "cor2").passed
        all_commute = all(commutes_rlse(alg, x, y) for x in range(alg.size) for y in range(alg.size))
        assert bool(check_boolean_ring(alg)) == cor3 == all_commute


# -- verdict round trip -------------------------------------------------------

RING_CHECKS = [check_meet_semilattice, check_rlse, check_near_rlse, check_specific,
               check_weakly_distributive, check_weakly_associative, check_characteristic_two,
               check_boolean_ring, check_w_axioms]


@settings(max_examples=60, deadline=None)
@given(
    base=st.sampled_from(["r_mo2", "bool2", "wa"]),
    table=st.sampled_from(["plus", "times"]),
    data=st.data(),
)
def test_failing_witness_reproduces(base, table, data):
    alg = {"r_mo2": C.specific_rlse_mo(2), "bool2": C.boolean_ring(2),
           "wa": C.weakly_associative_mo2(B)}[base]
    n = alg.size
    x = data.draw(st.integers(0, n - 1))
    y = data.draw(st.integers(0, n - 1))
    v = data.draw(st.integers(0, n - 1))
    bad = mutated(alg, table, (x, y), v)
    for check in RING_CHECKS:
        verdict = check(bad)
        assert (verdict.witness is None) == verdict.passed
        if not verdict.passed:
            lhs, rhs = reevaluate(verdict, bad)
            assert (lhs, rhs) == (verdict.lhs, verdict.rhs)
            assert lhs != rhs
            assert LAWS[verdict.law].applies(bad, *verdict.witness)


def test_witness_is_lexicographically_first(r_mo2):
    v = check_law(r_mo2, "R7", collect=True)
    assert v.witness == min(f.witness for f in v.failures)


def test_triple_warning_above_threshold(monkeypatch):
    import rlse.algebra as algebra

    monkeypatch.setattr(algebra, "TRIPLE_WARN", 2)
    with pytest.warns(UserWarning):
        check_meet_semilattice(C.boolean_ring(2))


def test_batch_matches_single_checks():
    from rlse.algebra import check_law_batch, commutation_batch, rlse_profile_batch

    algs = [C.specific_rlse_mo(2)] + [C.weakly_associative_mo2(c) for c in range(6)]
    algs += C.enumerate_plus_extensions(C.mo_lattice(2), limit=40)
    stack = np.stack([a.plus for a in algs])
    times = algs[0].times
    batch = rlse_profile_batch(stack, times, 0, 5)
    for i, alg in enumerate(algs):
        assert rlse_profile(alg) == {k: bool(v[i]) for k, v in batch.items()}
    for name in ("W1", "plus_assoc", "R7"):
        flags = check_law_batch(stack, times, 0, 5, name)
        assert flags.tolist() == [check_law(a, name).passed for a in algs]
    comm, cval = commutation_batch(stack, times, 5)
    for i, alg in enumerate(algs):
        for x, y in itertools.product(range(6), repeat=2):
            assert comm[i, x, y] == commutes_rlse(alg, x, y)
            assert cval[i, x, y] == commutator_rlse(alg, x, y)
    with pytest.raises(ValueError):
        check_law_batch(stack[0], times, 0, 5, "R1")
