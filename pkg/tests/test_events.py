import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlse import (
    EventFamily,
    NumericalEvent,
    StateSpace,
    check_gfe,
    check_lattice_ordered,
    check_lemma2_conditions,
    check_prop3,
    check_q_structure,
    check_s_probability_algebra,
    close_under_maxmin,
    complement,
    event_lattice,
    lemma1_check,
    maxmin_algebra,
    maxmin_odot,
    maxmin_oplus,
    odot_scalar,
    oplus_scalar,
    rlse_of_events,
)
from rlse import catalog as C
from rlse.errors import NotClosed, NotMember, NotTwoValued, OutOfRange, PreconditionFailed, SpaceMismatch, TooLarge

unit = st.fractions(min_value=0, max_value=1, max_denominator=12)


# -- events ------------------------------------------------------------------


def test_floats_rejected():
    with pytest.raises(TypeError):
        NumericalEvent((0.5,))
    with pytest.raises(OutOfRange):
        NumericalEvent(("3/2",))


def test_event_basics():
    p = NumericalEvent(("1/3", 1))
    assert str(p) == "(1/3, 1)"
    assert complement(p).values == (F(2, 3), F(0))
    assert not p.is_two_valued
    with pytest.raises(SpaceMismatch):
        maxmin_oplus(p, NumericalEvent((0,)))


def test_scalar_operations():
    assert oplus_scalar("1/4", "2/3") == F(5, 12)
    assert odot_scalar("1/4", "2/3") == F(1, 4)
    assert maxmin_oplus((0, "1/2"), (1, "1/4")).values == (1, F(1, 4))
    assert maxmin_odot((0, "1/2"), (1, "1/4")).values == (0, F(1, 4))


@given(p=st.lists(st.sampled_from([0, 1]), min_size=1, max_size=6), data=st.data())
def test_lemma1_on_two_valued(p, data):
    q = data.draw(st.lists(st.sampled_from([0, 1]), min_size=len(p), max_size=len(p)))
    assert lemma1_check(p, q)


def test_lemma1_rejects_fuzzy():
    with pytest.raises(NotTwoValued):
        lemma1_check(("1/2",), (1,))


@given(a=unit, b=unit)
def test_lemma2_predictions(a, b):
    r = check_lemma2_conditions(a, b)
    assert r.consistent
    assert r.holds["i"] and r.holds["ii"] and r.holds["v"]


def test_lemma2_named_points():
    r = check_lemma2_conditions("1/2", "1/4")
    assert not r.holds["iii"] and not r.holds["iv"]
    assert r.sides["iii"] == (F(1, 2), F(1, 4))
    assert check_lemma2_conditions("1/3", "1/3").holds["iii"]
    assert check_lemma2_conditions("2/3", "1/3").holds["iii"]
    assert check_lemma2_conditions(1, "1/3").holds["iv"]
    assert check_lemma2_conditions("1/3", 0).holds["iv"]


# -- families ------------------------------------------------------------------


def test_family_lookup(concrete_mo2):
    assert concrete_mo2.index_of("b'") == 4
    assert concrete_mo2.index_of((0, 1, 0, 1)) == 4
    assert concrete_mo2.index_of(2) == 2
    for bad in ("c", 9, (1, 1, 1, 0)):
        with pytest.raises(NotMember):
            concrete_mo2.index_of(bad)
    assert concrete_mo2.find((F(1, 2),) * 4) is None


def test_family_rejects_duplicates():
    with pytest.raises(ValueError):
        EventFamily(StateSpace(["s"]), [(0,), (0,)])


@pytest.mark.parametrize("fam_name", ["concrete_mo2", "boolean4", "graded_mo2"])
def test_s_probability_examples(fam_name, request):
    fam = request.getfixturevalue(fam_name)
    assert check_s_probability_algebra(fam)
    assert check_gfe(fam)
    assert check_lattice_ordered(fam)
    assert check_prop3(fam)


def test_power_sets_are_s_algebras():
    for n in (1, 2, 3, 4):
        fam = C.power_set_events(n)
        assert check_s_probability_algebra(fam) and check_lattice_ordered(fam)
        assert fam.two_valued


def test_missing_complement():
    fam = EventFamily(StateSpace(["s", "t"]), [(0, 0), ("1/3", 0), (1, 1)])
    v = check_s_probability_algebra(fam)
    assert not v and v.law == "S2" and v.witness == (1,)
    assert v.lhs == "(2/3, 1)"


def test_missing_triple_sum():
    # a, b, c mutually orthogonal; a+b+c is absent, every pair sum present
    s = StateSpace(["s"])
    vals = ["0", "1/4", "3/4", "1/2", "1"]
    fam = EventFamily(s, [(v,) for v in vals])
    assert check_gfe(fam)
    v = check_s_probability_algebra(fam)
    assert v.law == "S3"
    i, j, k = v.witness
    assert sum(fam[x][0] for x in (i, j, k)) not in {F(x) for x in vals}


def test_not_lattice_ordered():
    s = StateSpace(["s", "t"])
    fam = EventFamily(s, [(0, 0), ("1/4", 0), (0, "1/4"), ("1/2", "1/2"), ("1/3", "2/3"), (1, 1)])
    v = check_lattice_ordered(fam)
    # (1/4,0) and (0,1/4) have two minimal upper bounds; that pair comes first
    assert not v and v.law == "lattice_sup" and v.witness == (1, 2)
    assert fam.inf_table[3, 4] == -1
    # independently: 1 and 2 are both maximal lower bounds of 3 and 4
    lower = [i for i in range(len(fam)) if all(a <= min(b, c) for a, b, c in zip(fam[i], fam[3], fam[4]))]
    assert lower == [0, 1, 2]


def test_event_lattice_and_rlse(concrete_mo2):
    assert event_lattice(concrete_mo2) == C.mo_lattice(2)
    assert rlse_of_events(concrete_mo2) == C.specific_rlse_mo(2)
    assert rlse_of_events(C.boolean_events()) == C.boolean_ring(2)
    assert rlse_of_events(C.power_set_events(3)) == C.boolean_ring(3)


def test_rlse_of_events_requires_ambient():
    fam = EventFamily(StateSpace(["s"]), [(0,), ("1/3",), (1,)])
    with pytest.raises(PreconditionFailed) as exc:
        rlse_of_events(fam)
    assert exc.value.verdict.law == "S2"


@pytest.mark.parametrize("fam_name", ["concrete_mo2", "boolean4", "graded_mo2"])
def test_orthogonal_sum_is_least_upper_bound(fam_name, request):
    fam = request.getfixturevalue(fam_name)
    for i, j in itertools.product(range(len(fam)), repeat=2):
        p, q = fam[i], fam[j]
        if all(a <= 1 - b for a, b in zip(p, q)):
            k = fam.find(tuple(a + b for a, b in zip(p, q)))
            assert k is not None and fam.sup_table[i, j] == k


# -- max-min structure -----------------------------------------------------------


def one_state(*vals):
    return EventFamily(StateSpace(["s"]), [(v,) for v in vals])


def test_maxmin_requires_closure():
    fam = one_state("0", "1/2", "1/4", "1")
    with pytest.raises(NotClosed) as exc:
        maxmin_algebra(fam)
    assert exc.value.op == "oplus"


def test_maxmin_requires_bounds():
    with pytest.raises(PreconditionFailed):
        maxmin_algebra(one_state("1/2"))


def test_q_structure_half():
    fam = one_state("0", "1/2", "1")
    v = check_q_structure(fam)
    assert v
    near, spec, gfe, *conds = v.parts
    assert near and spec and gfe
    assert not any(conds)
    assert conds[1].law == "R3" and conds[1].witness == (1, 0)


def test_q_structure_quarters():
    fam = one_state("0", "1/4", "1/2", "3/4", "1")
    v = check_q_structure(fam)
    assert v and not any(v.parts[3:])
    alg = maxmin_algebra(fam)
    half, quarter = fam.index_of(("1/2",)), fam.index_of(("1/4",))
    from rlse import LAWS

    lhs, rhs = LAWS["R3"].evaluate(alg, half, quarter)
    assert (fam[lhs][0], fam[rhs][0]) == (F(1, 2), F(1, 4))
    assert v.parts[-1].law == "plus_assoc"


def test_q_structure_two_valued():
    v = check_q_structure(C.power_set_events(3))
    assert v and all(v.parts)


def test_closure():
    fam = EventFamily(StateSpace(["s", "t"]), [(0, 0), (1, 1), ("1/2", "1/4"), ("1/2", "3/4")])
    closed = close_under_maxmin(fam)
    assert len(closed) == 15
    assert closed.names[:4] == ("e0", "e1", "e2", "e3")
    maxmin_algebra(closed)
    v = check_q_structure(closed)
    assert v and not any(v.parts[3:])
    with pytest.raises(TooLarge):
        close_under_maxmin(fam, max_size=10)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.sampled_from(["0", "1/4", "1/2", "3/4", "1"]), min_size=2, max_size=2),
                min_size=1, max_size=3))
def test_q_theorem_on_random_closures(seeds):
    fam = EventFamily(StateSpace(["s", "t"]), list({tuple(s) for s in seeds}))
    closed = close_under_maxmin(fam)
    assert check_q_structure(closed)


def test_lemma2_iv_fails_at_half_half():
    r = check_lemma2_conditions("1/2", "1/2")
    assert not r.holds["iv"] and r.holds["iii"]


def test_small_lattice_ordered_family():
    fam = EventFamily(StateSpace(["s", "t"]), [(0, 0), (1, 1), (1, 0), (0, 1), ("1/2", "1/2")])
    assert check_lattice_ordered(fam)
    assert fam.sup_table[2, 3] == 1 and fam.inf_table[2, 4] == 0
    # (1/2,1/2) is orthogonal to itself: pair sums stay inside, the triple does not
    assert check_gfe(fam)
    v = check_s_probability_algebra(fam)
    assert v.law == "S3" and v.witness == (4, 4, 4) and v.lhs == "(3/2, 3/2)"


def test_concrete_mo2_infimum_of_crossing_events(concrete_mo2):
    # {1,2} ^ {1,3} has no nonempty lower bound in the family
    assert concrete_mo2.inf_table[1, 3] == 0
