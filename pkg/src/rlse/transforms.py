"""Maps between RLSEs and orthomodular lattices on a fixed carrier."""

from __future__ import annotations

import numpy as np

from .algebra import (
    LAWS,
    OrthoLattice,
    RingLikeAlgebra,
    Verdict,
    check_distributive,
    check_orthomodular,
    check_rlse,
    check_specific,
    commutes_rlse,
    passed,
)
from .errors import InternalInconsistency, NotAnRlse, NotOrthomodular


def l_of_r(alg: RingLikeAlgebra) -> OrthoLattice:
    """Lattice of an RLSE: x v y = (x+1)(y+1)+1, x ^ y = xy, x' = x+1."""
    v = check_rlse(alg)
    if not v:
        raise NotAnRlse(v)
    P, T, o = alg.plus, alg.times, alg.one
    c = P[:, o]
    join = P[T[c[:, None], c[None, :]], o]
    lat = OrthoLattice(T, join, c, alg.zero, alg.one, alg.names)
    check = check_orthomodular(lat)
    if not check:
        raise InternalInconsistency(f"lattice of an RLSE is not orthomodular: {check.describe()}")
    return lat


def r_of_l(lat: OrthoLattice) -> RingLikeAlgebra:
    """Specific RLSE of an orthomodular lattice: x+y = (x^y')v(x'^y), xy = x^y."""
    v = check_orthomodular(lat)
    if not v:
        raise NotOrthomodular(v)
    M, J, C = lat.meet, lat.join, lat.comp
    idx = np.arange(lat.size)
    x, y = idx[:, None], idx[None, :]
    plus = J[M[x, C[y]], M[C[x], y]]
    alg = RingLikeAlgebra(plus, M, lat.zero, lat.one, lat.names)
    for check in (check_rlse(alg), check_specific(alg)):
        if not check:
            raise InternalInconsistency(f"image of an orthomodular lattice: {check.describe()}")
    return alg


def _first_diff(a: np.ndarray, b: np.ndarray):
    hits = np.argwhere(a != b)
    if not hits.size:
        return None
    w = tuple(int(i) for i in hits[0])
    return w, int(a[w]), int(b[w])


def check_roundtrips(alg: RingLikeAlgebra) -> Verdict:
    """Compare ``alg`` with r_of_l(l_of_r(alg)).

    A specific RLSE must come back unchanged. A non-specific RLSE must keep
    its multiplication and lose its addition. Witnesses are ``(x, y)`` cells
    with the original and round-tripped values as lhs/rhs.
    """
    v = check_rlse(alg)
    if not v:
        return v
    back = r_of_l(l_of_r(alg))
    diff_times = _first_diff(alg.times, back.times)
    if diff_times:
        w, a, b = diff_times
        return Verdict(False, "roundtrip_times", w, a, b)
    diff_plus = _first_diff(alg.plus, back.plus)
    if check_specific(alg):
        if diff_plus:
            w, a, b = diff_plus
            return Verdict(False, "roundtrip_plus", w, a, b)
        return passed("roundtrip")
    if diff_plus is None:
        # impossible: an unchanged addition would make alg specific
        return Verdict(False, "roundtrip_plus_unchanged", (), None, None)
    return passed("roundtrip")


def roundtrip_diff_cells(alg: RingLikeAlgebra) -> set[tuple[int, int]]:
    """Cells where the addition of ``alg`` differs from its round trip."""
    back = r_of_l(l_of_r(alg))
    return {(int(x), int(y)) for x, y in np.argwhere(alg.plus != back.plus)}


def is_boolean_algebra(lat: OrthoLattice) -> Verdict:
    """Distributivity of an orthomodular lattice, exhaustively."""
    v = check_orthomodular(lat)
    if not v:
        raise NotOrthomodular(v)
    return check_distributive(lat)


def check_cor2_pairwise(alg: RingLikeAlgebra, a: int, b: int) -> Verdict:
    """For a specific RLSE: a(b+1) = ab+a holds exactly when a and b commute.

    ``lhs`` is whether the identity holds at (a, b), ``rhs`` whether they
    commute; the verdict passes when these agree.
    """
    lhs, rhs = LAWS["cor2"].evaluate(alg, a, b)
    ident = lhs == rhs
    comm = commutes_rlse(alg, a, b)
    if ident == comm:
        return Verdict(True, "cor2", lhs=ident, rhs=comm)
    return Verdict(False, "cor2", (a, b), ident, comm)


def is_boolean_ring_via_lattice(alg: RingLikeAlgebra) -> bool:
    """Boolean-ring test routed through the lattice; valid for specific RLSEs."""
    return is_boolean_algebra(l_of_r(alg)).passed

