"""Named example structures and enumeration of RLSE additions.

Index conventions: Boolean structures on n atoms use the bitmask of a subset
as its index. MO_n uses 0, a, a', b, b', ..., 1.
"""

from __future__ import annotations

import itertools
import string
from typing import Iterator

import numpy as np

from .algebra import OrthoLattice, RingLikeAlgebra, check_orthomodular
from .errors import InvalidIndex, NotOrthomodular, TooLarge
from .events import EventFamily, NumericalEvent, StateSpace, complement
from .transforms import r_of_l


def _subset_names(n: int) -> list[str]:
    names = []
    for mask in range(2**n):
        if mask == 0:
            names.append("0")
        elif mask == 2**n - 1:
            names.append("1")
        else:
            names.append("{" + ",".join(str(i + 1) for i in range(n) if mask >> i & 1) + "}")
    return names


def boolean_ring(n: int) -> RingLikeAlgebra:
    """The Boolean ring 2^n: symmetric difference and intersection."""
    if not 1 <= n <= 4:
        raise ValueError("boolean_ring supports 1..4 atoms")
    idx = np.arange(2**n)
    return RingLikeAlgebra(idx[:, None] ^ idx[None, :], idx[:, None] & idx[None, :],
                           0, 2**n - 1, _subset_names(n))


def boolean_lattice(n: int) -> OrthoLattice:
    if not 1 <= n <= 4:
        raise ValueError("boolean_lattice supports 1..4 atoms")
    idx = np.arange(2**n)
    top = 2**n - 1
    return OrthoLattice(idx[:, None] & idx[None, :], idx[:, None] | idx[None, :],
                        idx ^ top, 0, top, _subset_names(n))


def mo_names(n: int) -> list[str]:
    names = ["0"]
    for letter in string.ascii_lowercase[:n]:
        names += [letter, letter + "'"]
    return names + ["1"]


def mo_lattice(n: int) -> OrthoLattice:
    """Horizontal sum of n four-element Boolean blocks."""
    if not 1 <= n <= 26:
        raise ValueError("mo_lattice supports 1..26 blocks")
    size = 2 * n + 2
    one = size - 1
    meet = np.zeros((size, size), dtype=np.intp)
    join = np.full((size, size), one, dtype=np.intp)
    for x in range(size):
        meet[x, x] = join[x, x] = x
        meet[x, one] = meet[one, x] = x
        join[x, 0] = join[0, x] = x
    comp = np.arange(size)
    comp[0], comp[one] = one, 0
    for k in range(n):
        comp[2 * k + 1], comp[2 * k + 2] = 2 * k + 2, 2 * k + 1
    return OrthoLattice(meet, join, comp, 0, one, mo_names(n))


def specific_rlse_mo(n: int) -> RingLikeAlgebra:
    return r_of_l(mo_lattice(n))


def hexagon_lattice() -> OrthoLattice:
    """The six-element ortholattice 0 < a < b < 1, 0 < b' < a' < 1.

    It is the smallest ortholattice that is not orthomodular.
    """
    names = ["0", "a", "b", "b'", "a'", "1"]
    covers = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)]
    leq = np.eye(6, dtype=bool)
    for lo, hi in covers:
        leq[lo, hi] = True
    for _ in range(3):
        leq = leq | (leq.astype(int) @ leq.astype(int) > 0)
    comp = [5, 4, 3, 2, 1, 0]
    return OrthoLattice.from_order(leq, comp, names)


def weakly_associative_mo2(c: int) -> RingLikeAlgebra:
    """The characteristic-2 RLSE over MO_2 with a+b = a'+b' = c and a+b' = a'+b = c'.

    Cells forced by the lattice (x+1 = x', and x+y = x v y when x <= y') keep
    their forced values; x+x = 0 on the diagonal.
    """
    lat = mo_lattice(2)
    if not 0 <= int(c) < lat.size:
        raise InvalidIndex(c)
    c = int(c)
    plus = _forced_plus(lat)
    np.fill_diagonal(plus, 0)
    cc = int(lat.comp[c])
    a, a1, b, b1 = 1, 2, 3, 4
    for x, y, v in ((a, b, c), (a1, b1, c), (a, b1, cc), (a1, b, cc)):
        plus[x, y] = plus[y, x] = v
    return RingLikeAlgebra(plus, lat.meet, lat.zero, lat.one, lat.names)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _forced_plus(lat: OrthoLattice) -> np.ndarray:
    """Addition table with forced cells filled and free cells set to -1."""
    n = lat.size
    plus = np.full((n, n), -1, dtype=np.intp)
    for x in range(n):
        for y in range(n):
            if lat.meet[x, lat.comp[y]] == x:
                plus[x, y] = lat.join[x, y]
    plus[:, lat.one] = lat.comp
    plus[lat.one, :] = lat.comp
    return plus


def free_cells(lat: OrthoLattice) -> list[tuple[int, int]]:
    """Unordered cells (x <= y) of an RLSE addition not forced by the lattice."""
    plus = _forced_plus(lat)
    return [(x, y) for x in range(lat.size) for y in range(x, lat.size) if plus[x, y] < 0]


def extend_plus(lat: OrthoLattice, values, cells=None) -> RingLikeAlgebra:
    """The RLSE on ``lat`` whose free cells take ``values`` (symmetrically)."""
    plus = _forced_plus(lat)
    cells = free_cells(lat) if cells is None else cells
    if len(values) != len(cells):
        raise ValueError(f"expected {len(cells)} values, got {len(values)}")
    for (x, y), v in zip(cells, values):
        plus[x, y] = plus[y, x] = v
    return RingLikeAlgebra(plus, lat.meet, lat.zero, lat.one, lat.names)


def _enumeration_plan(lat: OrthoLattice, characteristic_two: bool, cap: int):
    if lat.size > cap:
        raise TooLarge(f"enumeration supports at most {cap} elements, got {lat.size}")
    v = check_orthomodular(lat)
    if not v:
        raise NotOrthomodular(v)
    base = _forced_plus(lat)
    cells = free_cells(lat)
    if characteristic_two:
        for x, y in cells:
            if x == y:
                base[x, x] = lat.zero
        cells = [(x, y) for x, y in cells if x != y]
    return base, cells


def iter_plus_extensions(lat: OrthoLattice, characteristic_two: bool = False) -> Iterator[RingLikeAlgebra]:
    """Yield every RLSE addition on ``lat`` in lexicographic order of free-cell values.

    With ``characteristic_two`` the diagonal is pinned to x+x = 0.
    """
    base, cells = _enumeration_plan(lat, characteristic_two, 8)
    for values in itertools.product(range(lat.size), repeat=len(cells)):
        plus = base.copy()
        for (x, y), val in zip(cells, values):
            plus[x, y] = plus[y, x] = val
        yield RingLikeAlgebra(plus, lat.meet, lat.zero, lat.one, lat.names)


def iter_plus_stacks(lat: OrthoLattice, characteristic_two: bool = False,
                     chunk: int = 50_000) -> Iterator[np.ndarray]:
    """The tables of :func:`iter_plus_extensions` as (k, n, n) arrays, same order.

    For bulk checks with :func:`rlse.algebra.rlse_profile_batch`.
    """
    base, cells = _enumeration_plan(lat, characteristic_two, 8)
    n, k = lat.size, len(cells)
    rows = np.array([c[0] for c in cells], dtype=np.intp)
    cols = np.array([c[1] for c in cells], dtype=np.intp)
    total = n**k
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total))
        # base-n digits, most significant first, match itertools.product order
        digits = codes[:, None] // n ** np.arange(k - 1, -1, -1) % n
        stack = np.broadcast_to(base, (len(codes), n, n)).copy()
        stack[:, rows, cols] = digits
        stack[:, cols, rows] = digits
        yield stack


def enumerate_plus_extensions(lat: OrthoLattice, limit: int | None = None,
                              characteristic_two: bool = False) -> list[RingLikeAlgebra]:
    return list(itertools.islice(iter_plus_extensions(lat, characteristic_two), limit))


def count_plus_extensions(lat: OrthoLattice, characteristic_two: bool = False) -> int:
    cells = free_cells(lat)
    if characteristic_two:
        cells = [c for c in cells if c[0] != c[1]]
    return lat.size ** len(cells)


def concrete_mo2_events():
    """MO_2 as a concrete logic: {0, {1,2}, {3,4}, {1,3}, {2,4}, S} over S = {1,2,3,4}."""
    sets = [(), (1, 2), (3, 4), (1, 3), (2, 4), (1, 2, 3, 4)]
    vectors = [[int(s in members) for s in (1, 2, 3, 4)] for members in sets]
    return EventFamily(StateSpace(["1", "2", "3", "4"]), vectors, mo_names(2), name="concrete-MO2")


def power_set_events(n: int):
    """All characteristic vectors over n states, indexed by bitmask."""
    if not 1 <= n <= 4:
        raise ValueError("power_set_events supports 1..4 states")
    vectors = [[mask >> i & 1 for i in range(n)] for mask in range(2**n)]
    return EventFamily(StateSpace([str(i + 1) for i in range(n)]), vectors,
                       _subset_names(n), name=f"2^{n}")


def boolean_events(p=("1/4", "2/3")):
    """The four-element Boolean family {0, p, p', 1} for a non-two-valued p.

    ``p`` and ``1 - p`` must be incomparable, otherwise the family is a chain.
    """
    p = NumericalEvent(p)
    n = len(p)
    return EventFamily(StateSpace([str(i + 1) for i in range(n)]),
                       [NumericalEvent.constant(0, n), p, complement(p), NumericalEvent.constant(1, n)],
                       ["0", "p", "p'", "1"], name="boolean-4")
