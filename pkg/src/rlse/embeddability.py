"""Boolean embeddability of a few numerical events.

A set of events is embeddable when it lies inside a Boolean subalgebra of an
ambient lattice-ordered algebra of S-probabilities. The ambient is always
given explicitly; embeddability is decided relative to it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .events import (
    EventFamily,
    as_event,
    fmin,
    fmt_vector,
    fprod,
    fsub,
    require_ambient,
)
from .errors import AmbientTooLarge, NotTwoValued

EXPLICIT = "explicit_ambient"
TWO_VALUED = "two_valued_concrete"
ORACLE_CAP = 24
STATE_CAP = 16


@dataclass(frozen=True)
class EmbeddabilityReport:
    """Outcome of the k-subset procedure.

    ``failing_pair`` is ``(A, B, lhs, rhs)``: two tuples of ambient (or input)
    indices and the two evaluated sides of the condition that failed.
    """

    embeddable: bool
    mode: str
    failing_pair: tuple | None = None
    k_reached: int = 0
    ambient: str | None = None

    def to_dict(self) -> dict:
        d = {"embeddable": self.embeddable, "mode": self.mode, "k_reached": self.k_reached,
             "ambient": self.ambient, "verdict": classify(self)}
        if self.failing_pair:
            a, b, lhs, rhs = self.failing_pair
            d["failing_pair"] = {"A": list(a), "B": list(b),
                                 "lhs": fmt_vector(lhs), "rhs": fmt_vector(rhs)}
        return d


def classify(report: EmbeddabilityReport) -> str:
    if report.embeddable:
        return "classical-compatible"
    return "non-classical (quantum) relative to ambient"


def _inf(ambient: EventFamily, indices) -> int:
    inf = ambient.inf_table
    return reduce(lambda i, j: int(inf[i, j]), indices)


def evaluate_condition(ambient: EventFamily, A, B):
    """Both sides of  prod A (*) (1 - prod B) = prod A - prod A (*) prod B.

    Products are infima in the ambient, folded in index order.
    """
    a, b = _inf(ambient, A), _inf(ambient, B)
    inf, comp = ambient.inf_table, ambient.complement_index
    lhs = ambient[inf[a, comp[b]]].values
    rhs = fsub(ambient[a], ambient[inf[a, b]])
    return lhs, rhs


def _scan(n, k_condition):
    """Run the k-loop over index positions 0..n-1; ``k_condition(A, B)`` -> (ok, lhs, rhs)."""
    k_reached = 0
    for k in range(1, n):
        k_reached = k
        subsets = list(itertools.combinations(range(n), k))
        for A in subsets:
            for B in subsets:
                ok, lhs, rhs = k_condition(A, B)
                if not ok:
                    return (A, B, lhs, rhs), k_reached
    return None, k_reached


def embeddable_set(ambient: EventFamily, subset) -> EmbeddabilityReport:
    """Decide embeddability of ``subset`` (indices, names or events) in ``ambient``.

    For k = 1..n-1 every pair of k-element subsets A, B (including A = B) is
    checked in lexicographic order; the first failure is reported with
    ambient indices.
    """
    require_ambient(ambient)
    members = [ambient.index_of(p) for p in subset]
    if not members:
        raise ValueError("subset must be nonempty")

    def cond(A, B):
        A = tuple(members[i] for i in A)
        B = tuple(members[i] for i in B)
        lhs, rhs = evaluate_condition(ambient, A, B)
        return lhs == rhs, lhs, rhs

    fail, k = _scan(len(members), cond)
    if fail:
        A, B, lhs, rhs = fail
        fail = (tuple(members[i] for i in A), tuple(members[i] for i in B), lhs, rhs)
    return EmbeddabilityReport(fail is None, EXPLICIT, fail, k, ambient.name)


def embeddable_pair(ambient: EventFamily, p, q) -> EmbeddabilityReport:
    """p (*) (1 - q) = p - p (*) q, with (*) the infimum in ``ambient``."""
    require_ambient(ambient)
    i, j = ambient.index_of(p), ambient.index_of(q)
    lhs, rhs = evaluate_condition(ambient, (i,), (j,))
    if lhs == rhs:
        return EmbeddabilityReport(True, EXPLICIT, None, 1, ambient.name)
    return EmbeddabilityReport(False, EXPLICIT, ((i,), (j,), lhs, rhs), 1, ambient.name)


def _two_valued(events):
    events = [as_event(e) for e in events]
    for e in events:
        if not e.is_two_valued:
            raise NotTwoValued(f"{e} is not two-valued")
        if len(e) != len(events[0]):
            raise ValueError("events must share a state space")
    if events and len(events[0]) > STATE_CAP:
        raise ValueError(f"more than {STATE_CAP} states")
    return events


def embeddable_pair_two_valued(p, q) -> EmbeddabilityReport:
    """Concrete reading: p (*) q is the pointwise minimum; test it against pq."""
    p, q = _two_valued([p, q])
    lhs, rhs = fmin(p, q), fprod(p, q)
    if lhs == rhs:
        return EmbeddabilityReport(True, TWO_VALUED, None, 1)
    return EmbeddabilityReport(False, TWO_VALUED, ((0,), (1,), lhs, rhs), 1)


def embeddable_set_two_valued(events) -> EmbeddabilityReport:
    """The k-loop with prod_R = pointwise minimum and the condition
    prod_R A (*) prod_R B = prod(A u B). Indices refer to ``events``.
    """
    events = _two_valued(events)
    if not events:
        raise ValueError("need at least one event")

    def cond(A, B):
        lhs = fmin(fmin(*(events[i] for i in A)), fmin(*(events[i] for i in B)))
        rhs = fprod(*(events[i] for i in sorted(set(A) | set(B))))
        return lhs == rhs, lhs, rhs

    fail, k = _scan(len(events), cond)
    return EmbeddabilityReport(fail is None, TWO_VALUED, fail, k)


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------


def oracle_embeddable(ambient: EventFamily, subset, cap: int = ORACLE_CAP) -> bool:
    """Search for a Boolean subalgebra of ``ambient`` containing ``subset``.

    Every candidate is a complement-closed subset holding 0, 1 and the
    targets; it must be closed under ambient inf and sup and be a
    distributive complemented sublattice. Nothing here uses commutation.
    """
    if len(ambient) > cap:
        raise AmbientTooLarge(f"ambient has {len(ambient)} events, cap is {cap}")
    require_ambient(ambient)
    inf, sup, comp = ambient.inf_table, ambient.sup_table, ambient.complement_index
    zero, one = ambient.zero_index, ambient.one_index
    required = {zero, one}
    for p in subset:
        i = ambient.index_of(p)
        required |= {i, int(comp[i])}
    optional = sorted({frozenset((i, int(comp[i]))) for i in range(len(ambient))}
                      - {frozenset((i, int(comp[i]))) for i in required}, key=sorted)
    for r in range(len(optional) + 1):
        for extra in itertools.combinations(optional, r):
            cand = set(required).union(*extra)
            if _is_boolean_subalgebra(sorted(cand), inf, sup, comp, zero, one):
                return True
    return False


def _is_boolean_subalgebra(elems, inf, sup, comp, zero, one) -> bool:
    e = np.array(elems)
    members = np.zeros(len(inf), dtype=bool)
    members[e] = True
    meets, joins = inf[np.ix_(e, e)], sup[np.ix_(e, e)]
    if not (members[meets].all() and members[joins].all()):
        return False
    if (inf[e, comp[e]] != zero).any() or (sup[e, comp[e]] != one).any():
        return False
    x, y, z = np.ix_(e, e, e)
    return bool((inf[x, sup[y, z]] == sup[inf[x, y], inf[x, z]]).all())
