"""Numerical events: functions from a finite state space to [0, 1].

All values are :class:`fractions.Fraction`; floats are rejected so that every
equality below is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .algebra import (
    OrthoLattice,
    RingLikeAlgebra,
    Verdict,
    check_boolean_ring,
    check_law,
    check_near_rlse,
    check_rlse,
    check_specific,
    passed,
)
from .errors import (
    InternalInconsistency,
    NotClosed,
    NotMember,
    NotTwoValued,
    OutOfRange,
    PreconditionFailed,
    SpaceMismatch,
    TooLarge,
)

ZERO, ONE = Fraction(0), Fraction(1)


def to_fraction(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError(f"floats are not accepted, got {v!r}; use a string like '1/3'")
    return Fraction(v)


def _unit(v) -> Fraction:
    q = to_fraction(v)
    if not ZERO <= q <= ONE:
        raise OutOfRange(f"{q} is outside [0, 1]")
    return q


def fmt(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class StateSpace:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(s) for s in self.labels)
        if not labels:
            raise ValueError("a state space needs at least one state")
        if len(set(labels)) != len(labels):
            raise ValueError("state labels must be distinct")
        object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)


@dataclass(frozen=True)
class NumericalEvent:
    """Values p(s) for each state, in state-space order."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_unit(v) for v in self.values))
        if not self.values:
            raise ValueError("an event needs at least one value")

    @classmethod
    def constant(cls, value, n: int) -> "NumericalEvent":
        return cls((to_fraction(value),) * n)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def is_two_valued(self) -> bool:
        return all(v in (ZERO, ONE) for v in self.values)

    def __str__(self):
        return "(" + ", ".join(fmt(v) for v in self.values) + ")"


def as_event(p) -> NumericalEvent:
    return p if isinstance(p, NumericalEvent) else NumericalEvent(tuple(p))


def _same_space(p, q):
    if len(p) != len(q):
        raise SpaceMismatch(f"events over {len(p)} and {len(q)} states")


def complement(p: NumericalEvent) -> NumericalEvent:
    return NumericalEvent(tuple(ONE - v for v in p))


def leq(p, q) -> bool:
    _same_space(p, q)
    return all(a <= b for a, b in zip(p, q))


def orthogonal(p, q) -> bool:
    """p is below the counter probability of q."""
    _same_space(p, q)
    return all(a <= ONE - b for a, b in zip(p, q))


# Real-function arithmetic; results may leave [0, 1] and stay plain tuples.

def fsum(*ps) -> tuple[Fraction, ...]:
    return tuple(sum(vs, ZERO) for vs in zip(*ps))


def fsub(p, q) -> tuple[Fraction, ...]:
    return tuple(a - b for a, b in zip(p, q))


def fprod(*ps) -> tuple[Fraction, ...]:
    out = []
    for vs in zip(*ps):
        acc = ONE
        for v in vs:
            acc *= v
        out.append(acc)
    return tuple(out)


def fmin(*ps) -> tuple[Fraction, ...]:
    return tuple(min(vs) for vs in zip(*ps))


def fmt_vector(v) -> str:
    return "(" + ", ".join(fmt(x) for x in v) + ")"


# ---------------------------------------------------------------------------
# Max-min scalar and pointwise operations
# ---------------------------------------------------------------------------


def oplus_scalar(a, b) -> Fraction:
    a, b = _unit(a), _unit(b)
    return max(a, b) - min(a, b)


def odot_scalar(a, b) -> Fraction:
    a, b = _unit(a), _unit(b)
    return min(a, b)


def maxmin_oplus(p, q) -> NumericalEvent:
    _same_space(p, q)
    return NumericalEvent(tuple(oplus_scalar(a, b) for a, b in zip(p, q)))


def maxmin_odot(p, q) -> NumericalEvent:
    _same_space(p, q)
    return NumericalEvent(tuple(odot_scalar(a, b) for a, b in zip(p, q)))


@dataclass(frozen=True)
class Lemma2Result:
    """The five scalar max-min identities at (a, b) with their predictions.

    ``holds`` maps clause (i)..(v) to whether it holds; ``predicted`` maps
    each clause to whether it is expected to hold.
    """

    a: Fraction
    b: Fraction
    holds: dict
    predicted: dict
    sides: dict

    @property
    def consistent(self) -> bool:
        return self.holds == self.predicted


def check_lemma2_conditions(a, b) -> Lemma2Result:
    a, b = _unit(a), _unit(b)
    add, mul = oplus_scalar, odot_scalar
    sides = {
        "i": (add(a, b), add(b, a)),
        "ii": (add(mul(add(mul(a, b), ONE), add(a, ONE)), ONE), a),
        "iii": (mul(add(mul(add(mul(a, b), ONE), a), ONE), a), mul(a, b)),
        "iv": (add(mul(a, b), add(a, ONE)), add(mul(add(mul(a, b), ONE), a), ONE)),
        "v": (add(a, b), add(mul(a, add(b, ONE)), mul(add(a, ONE), b))),
    }
    holds = {k: lhs == rhs for k, (lhs, rhs) in sides.items()}
    predicted = {
        "i": True,
        "ii": True,
        "iii": b >= min(a, ONE - a),
        "iv": a in (ZERO, ONE) or b == ZERO,
        "v": True,
    }
    return Lemma2Result(a, b, holds, predicted, sides)


def lemma1_check(p, q) -> Verdict:
    """On two-valued events the max-min operations are p+q-2pq and pq."""
    p, q = as_event(p), as_event(q)
    _same_space(p, q)
    for e in (p, q):
        if not e.is_two_valued:
            raise NotTwoValued(f"{e} is not two-valued")
    two = Fraction(2)
    for s, (a, b) in enumerate(zip(p, q)):
        if oplus_scalar(a, b) != a + b - two * a * b:
            return Verdict(False, "lemma1_oplus", (s,), oplus_scalar(a, b), a + b - two * a * b)
        if odot_scalar(a, b) != a * b:
            return Verdict(False, "lemma1_odot", (s,), odot_scalar(a, b), a * b)
    return passed("lemma1")


# ---------------------------------------------------------------------------
# Families of events
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class EventFamily:
    """A finite, ordered, duplicate-free set of events over one state space."""

    space: StateSpace
    events: tuple[NumericalEvent, ...]
    names: tuple[str, ...] | None = None
    name: str | None = None

    def __post_init__(self):
        space = self.space if isinstance(self.space, StateSpace) else StateSpace(self.space)
        events = tuple(as_event(e) for e in self.events)
        for e in events:
            if len(e) != space.size:
                raise SpaceMismatch(f"event {e} has {len(e)} values, space has {space.size}")
        if len(set(events)) != len(events):
            raise ValueError("events in a family must be distinct")
        names = self.names
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != len(events) or len(set(names)) != len(names):
                raise ValueError("event names must be distinct and one per event")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "events", events)
        object.__setattr__(self, "names", names)

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def __getitem__(self, i) -> NumericalEvent:
        return self.events[i]

    def __contains__(self, p):
        return as_event(p) in self._positions

    def label(self, i: int) -> str:
        return self.names[i] if self.names else f"e{i}"

    @cached_property
    def _positions(self) -> dict:
        return {e: i for i, e in enumerate(self.events)}

    def index_of(self, p) -> int:
        """Index of an event given by value, name or index."""
        if isinstance(p, (int, np.integer)):
            if not 0 <= p < len(self):
                raise NotMember(p)
            return int(p)
        if isinstance(p, str):
            if self.names and p in self.names:
                return self.names.index(p)
            raise NotMember(p)
        try:
            return self._positions[as_event(p)]
        except (KeyError, ValueError):
            raise NotMember(p) from None

    def find(self, values) -> int | None:
        """Index of a real function if it is a member, else None."""
        try:
            return self._positions.get(NumericalEvent(tuple(values)))
        except OutOfRange:
            return None

    # cached structure ------------------------------------------------------

    @cached_property
    def leq_matrix(self) -> np.ndarray:
        n = len(self)
        m = np.array([[leq(p, q) for q in self.events] for p in self.events], dtype=bool).reshape(n, n)
        m.setflags(write=False)
        return m

    @cached_property
    def complement_index(self) -> np.ndarray:
        """Index of 1 - p for each p, or -1 when missing."""
        found = (self.find(complement(p).values) for p in self.events)
        out = np.array([-1 if k is None else k for k in found], dtype=np.intp)
        out.setflags(write=False)
        return out

    def _bound_table(self, lower: bool) -> np.ndarray:
        le = self.leq_matrix
        n = len(self)
        out = np.full((n, n), -1, dtype=np.intp)
        for i in range(n):
            for j in range(i, n):
                cand = np.flatnonzero(le[:, i] & le[:, j]) if lower else np.flatnonzero(le[i, :] & le[j, :])
                for c in cand:
                    if (le[cand, c] if lower else le[c, cand]).all():
                        out[i, j] = out[j, i] = c
                        break
        out.setflags(write=False)
        return out

    @cached_property
    def inf_table(self) -> np.ndarray:
        """Greatest lower bound within the family, -1 where none exists."""
        return self._bound_table(lower=True)

    @cached_property
    def sup_table(self) -> np.ndarray:
        return self._bound_table(lower=False)

    # flags ---------------------------------------------------------------

    @cached_property
    def contains_0_1(self) -> bool:
        return _check_s1(self).passed

    @cached_property
    def complement_closed(self) -> bool:
        return _check_s2(self).passed

    @cached_property
    def orthosum_closed(self) -> bool:
        return _check_pair_sums(self).passed

    @cached_property
    def triple_sum_closed(self) -> bool:
        return _check_triple_sums(self).passed

    @cached_property
    def lattice_ordered(self) -> bool:
        return check_lattice_ordered(self).passed

    @cached_property
    def two_valued(self) -> bool:
        return all(e.is_two_valued for e in self.events)

    @property
    def zero_index(self) -> int | None:
        return self.find((ZERO,) * self.space.size)

    @property
    def one_index(self) -> int | None:
        return self.find((ONE,) * self.space.size)


def _check_s1(fam: EventFamily) -> Verdict:
    n = fam.space.size
    for law, const in (("S1_zero", ZERO), ("S1_one", ONE)):
        if fam.find((const,) * n) is None:
            return Verdict(False, law, (), fmt_vector((const,) * n), None)
    return passed("S1")


def _check_s2(fam: EventFamily) -> Verdict:
    for i, j in enumerate(fam.complement_index):
        if j < 0:
            return Verdict(False, "S2", (i,), fmt_vector(complement(fam[i])), None)
    return passed("S2")


def _orth_matrix(fam: EventFamily) -> np.ndarray:
    return np.array([[orthogonal(p, q) for q in fam.events] for p in fam.events], dtype=bool)


def _check_pair_sums(fam: EventFamily) -> Verdict:
    orth = _orth_matrix(fam)
    for i, j in zip(*np.nonzero(orth)):
        s = fsum(fam[i], fam[j])
        if fam.find(s) is None:
            return Verdict(False, "S3_pair", (int(i), int(j)), fmt_vector(s), None)
    return passed("S3_pair")


def _check_triple_sums(fam: EventFamily) -> Verdict:
    orth = _orth_matrix(fam)
    n = len(fam)
    for i, j, k in itertools.product(range(n), repeat=3):
        if orth[i, j] and orth[j, k] and orth[k, i]:
            s = fsum(fam[i], fam[j], fam[k])
            if fam.find(s) is None:
                return Verdict(False, "S3", (i, j, k), fmt_vector(s), None)
    return passed("S3")


def _first_failure(label, *verdicts) -> Verdict:
    for v in verdicts:
        if not v:
            return v
    return passed(label)


def check_s_probability_algebra(fam: EventFamily) -> Verdict:
    """0 and 1 present, closed under 1-p and under sums of mutually orthogonal triples.

    Triples range over all ordered triples, repetitions included.
    """
    return _first_failure("S-probability algebra", _check_s1(fam), _check_s2(fam), _check_triple_sums(fam))


def check_gfe(fam: EventFamily) -> Verdict:
    """Generalized field of events: (S3) only for pairs (r = 0)."""
    return _first_failure("GFE", _check_s1(fam), _check_s2(fam), _check_pair_sums(fam))


def check_lattice_ordered(fam: EventFamily) -> Verdict:
    inf, sup = fam.inf_table, fam.sup_table
    for i, j in itertools.product(range(len(fam)), repeat=2):
        if inf[i, j] < 0:
            return Verdict(False, "lattice_inf", (i, j), "no greatest lower bound", None)
        if sup[i, j] < 0:
            return Verdict(False, "lattice_sup", (i, j), "no least upper bound", None)
    return passed("lattice")


def require_ambient(fam: EventFamily) -> None:
    for v in (check_s_probability_algebra(fam), check_lattice_ordered(fam)):
        if not v:
            raise PreconditionFailed(v)


def event_lattice(fam: EventFamily) -> OrthoLattice:
    """The orthocomplemented lattice (P, sup, inf, 1-p, 0, 1) of an ambient family."""
    require_ambient(fam)
    return OrthoLattice(fam.inf_table, fam.sup_table, fam.complement_index,
                        fam.zero_index, fam.one_index, fam.names)


def rlse_of_events(fam: EventFamily) -> RingLikeAlgebra:
    """RLSE associated to a lattice-ordered algebra of S-probabilities.

    p (+) q = (p ^ q') v (p' ^ q) and p (*) q = p ^ q, with bounds taken
    inside the family.
    """
    require_ambient(fam)
    M, J, C = fam.inf_table, fam.sup_table, fam.complement_index
    idx = np.arange(len(fam))
    x, y = idx[:, None], idx[None, :]
    alg = RingLikeAlgebra(J[M[x, C[y]], M[C[x], y]], M, fam.zero_index, fam.one_index, fam.names)
    for v in (check_rlse(alg), check_specific(alg)):
        if not v:
            raise InternalInconsistency(f"RLSE of an event family: {v.describe()}")
    return alg


def check_prop3(fam: EventFamily) -> Verdict:
    """Function-level identities of the associated RLSE, checked exhaustively.

    (i) p(+)q = p(*)(1-q) + (1-p)(*)q; (ii) p <= q gives p(+)q = q - p;
    (iii) p(+)1 = 1 - p; (iv) p orthogonal to q gives p(+)q = p + q.
    Witness sides are formatted real functions.
    """
    alg = rlse_of_events(fam)
    P, T, C, one = alg.plus, alg.times, fam.complement_index, alg.one
    n = len(fam)
    for i, j in itertools.product(range(n), repeat=2):
        p, q, pq = fam[i], fam[j], fam[P[i, j]]
        rhs = fsum(fam[T[i, C[j]]], fam[T[C[i], j]])
        if pq.values != rhs:
            return Verdict(False, "P3i", (i, j), str(pq), fmt_vector(rhs))
        if leq(p, q) and pq.values != fsub(q, p):
            return Verdict(False, "P3ii", (i, j), str(pq), fmt_vector(fsub(q, p)))
        if orthogonal(p, q) and pq.values != fsum(p, q):
            return Verdict(False, "P3iv", (i, j), str(pq), fmt_vector(fsum(p, q)))
    for i in range(n):
        lhs = fam[P[i, one]]
        if lhs != complement(fam[i]):
            return Verdict(False, "P3iii", (i,), str(lhs), str(complement(fam[i])))
    return passed("prop3")


# ---------------------------------------------------------------------------
# The max-min structure Q
# ---------------------------------------------------------------------------


def _maxmin_tables(fam: EventFamily):
    n = len(fam)
    plus = np.empty((n, n), dtype=np.intp)
    times = np.empty((n, n), dtype=np.intp)
    for i, j in itertools.product(range(n), repeat=2):
        for table, op, name in ((plus, maxmin_oplus, "oplus"), (times, maxmin_odot, "odot")):
            k = fam.find(op(fam[i], fam[j]).values)
            if k is None:
                raise NotClosed(fam.label(i), fam.label(j), name)
            table[i, j] = k
    return plus, times


def maxmin_algebra(fam: EventFamily) -> RingLikeAlgebra:
    """The family with pointwise max-min operations, as a table algebra."""
    s1 = _check_s1(fam)
    if not s1:
        raise PreconditionFailed(s1)
    plus, times = _maxmin_tables(fam)
    return RingLikeAlgebra(plus, times, fam.zero_index, fam.one_index, fam.names)


def close_under_maxmin(fam: EventFamily, max_size: int = 64) -> EventFamily:
    """Smallest superset containing 0, 1 and closed under the max-min operations.

    New events are appended in discovery order and named ``e<k>``. Raises
    ``TooLarge`` once the family would exceed ``max_size``.
    """
    n = fam.space.size
    events = list(fam.events)
    names = list(fam.names) if fam.names else [f"e{i}" for i in range(len(events))]
    seen = set(events)

    def add(e, label):
        if e not in seen:
            if len(events) >= max_size:
                raise TooLarge(f"closure exceeds {max_size} events")
            seen.add(e)
            events.append(e)
            used = set(names)
            k = len(names)
            while label is None or label in used:
                label, k = f"e{k}", k + 1
            names.append(label)

    add(NumericalEvent.constant(0, n), "0")
    add(NumericalEvent.constant(1, n), "1")
    done = 0
    while done < len(events):
        # pair the next unprocessed event with everything seen so far
        p = events[done]
        for q in list(events[: done + 1]):
            for e in (maxmin_oplus(p, q), maxmin_odot(p, q)):
                add(e, None)
        done += 1
    return EventFamily(fam.space, events, names, fam.name)


def check_q_structure(fam: EventFamily) -> Verdict:
    """Verify the properties of a family closed under the max-min operations.

    Parts, in order: near_RLSE, specific, GFE and the five conditions
    (a) two-valued, (b) R3, (c) R4, (d) RLSE, (e) Boolean ring. Passes when
    the first three hold and (a)-(e) are all true or all false.
    Raises NotClosed if the family is not closed.
    """
    alg = maxmin_algebra(fam)
    near, spec, gfe = check_near_rlse(alg), check_specific(alg), check_gfe(fam)
    two = passed("a_two_valued")
    for i, e in enumerate(fam.events):
        if not e.is_two_valued:
            two = Verdict(False, "a_two_valued", (i,), str(e), None)
            break
    conds = (two, check_law(alg, "R3"), check_law(alg, "R4"), check_rlse(alg), check_boolean_ring(alg))
    parts = (near, spec, gfe) + conds
    agree = len({c.passed for c in conds}) == 1
    ok = near.passed and spec.passed and gfe.passed and agree
    if ok:
        return passed("Q-structure", parts)
    first = next((p for p in (near, spec, gfe) if not p), None)
    if first is None:
        # disagreement: cite the index of the first condition that differs from (a)
        k = next(i for i, c in enumerate(conds) if c.passed != two.passed)
        return Verdict(False, "Q-equivalence", (k,), two.passed, conds[k].passed, parts=parts)
    return Verdict(False, first.law, first.witness, first.lhs, first.rhs, parts=parts)
