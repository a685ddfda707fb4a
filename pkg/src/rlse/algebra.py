"""Finite algebras as explicit operation tables and an exhaustive law checker.

Every identity is checked by brute force over all pairs or triples of carrier
indices using numpy fancy indexing. A failing check returns a
:class:`Verdict` whose witness is the lexicographically smallest violating
tuple, so results are deterministic.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from types import SimpleNamespace
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import NotAPartialOrder

SIZE_CAP = 128
TRIPLE_WARN = 64


def _as_table(data, name: str, n: int | None = None, ndim: int = 2) -> np.ndarray:
    arr = np.array(data, dtype=np.intp)
    if arr.ndim != ndim:
        raise ValueError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if n is None:
        n = arr.shape[0]
    if arr.shape != (n,) * ndim:
        raise ValueError(f"{name} must have shape {(n,) * ndim}, got {arr.shape}")
    if n < 1 or n > SIZE_CAP:
        raise ValueError(f"carrier size {n} outside 1..{SIZE_CAP}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError(f"{name} contains an index outside 0..{n - 1}")
    arr.setflags(write=False)
    return arr


def _check_constants(zero: int, one: int, n: int) -> None:
    for c in (zero, one):
        if not 0 <= c < n:
            raise ValueError(f"constant {c} outside 0..{n - 1}")
    if n >= 2 and zero == one:
        raise ValueError("zero and one must differ when size >= 2")


def _check_names(names, n):
    if names is None:
        return None
    names = tuple(str(s) for s in names)
    if len(names) != n:
        raise ValueError(f"expected {n} element names, got {len(names)}")
    if len(set(names)) != n:
        raise ValueError("element names must be distinct")
    return names


class _Labelled:
    names: tuple[str, ...] | None

    def label(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def index(self, name: str | int) -> int:
        """Carrier index of an element given by label or index."""
        if isinstance(name, (int, np.integer)):
            if not 0 <= name < self.size:
                raise IndexError(name)
            return int(name)
        if self.names and name in self.names:
            return self.names.index(name)
        if str(name).isdigit() and int(name) < self.size:
            return int(name)
        raise KeyError(name)


@dataclass(frozen=True, eq=False)
class RingLikeAlgebra(_Labelled):
    """An algebra (R, +, *, 0, 1) of type (2, 2, 0, 0) on carrier 0..size-1.

    No axioms are assumed; use the ``check_*`` functions.
    """

    plus: np.ndarray
    times: np.ndarray
    zero: int
    one: int
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        plus = _as_table(self.plus, "plus")
        n = plus.shape[0]
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "times", _as_table(self.times, "times", n))
        object.__setattr__(self, "zero", int(self.zero))
        object.__setattr__(self, "one", int(self.one))
        object.__setattr__(self, "names", _check_names(self.names, n))
        _check_constants(self.zero, self.one, n)

    @property
    def size(self) -> int:
        return self.plus.shape[0]

    def add(self, x, y):
        return self.plus[x, y]

    def mul(self, x, y):
        return self.times[x, y]

    def __eq__(self, other):
        if not isinstance(other, RingLikeAlgebra):
            return NotImplemented
        return (
            self.zero == other.zero
            and self.one == other.one
            and np.array_equal(self.plus, other.plus)
            and np.array_equal(self.times, other.times)
        )

    __hash__ = None

    def __repr__(self):
        return f"RingLikeAlgebra(size={self.size}, zero={self.zero}, one={self.one})"


@dataclass(frozen=True, eq=False)
class OrthoLattice(_Labelled):
    """A bounded lattice with a unary complement, all given as tables."""

    meet: np.ndarray
    join: np.ndarray
    comp: np.ndarray
    zero: int
    one: int
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        meet = _as_table(self.meet, "meet")
        n = meet.shape[0]
        comp = _as_table(self.comp, "comp", n, ndim=1)
        if sorted(comp.tolist()) != list(range(n)):
            raise ValueError("comp must be a permutation of the carrier")
        object.__setattr__(self, "meet", meet)
        object.__setattr__(self, "join", _as_table(self.join, "join", n))
        object.__setattr__(self, "comp", comp)
        object.__setattr__(self, "zero", int(self.zero))
        object.__setattr__(self, "one", int(self.one))
        object.__setattr__(self, "names", _check_names(self.names, n))
        _check_constants(self.zero, self.one, n)

    @property
    def size(self) -> int:
        return self.meet.shape[0]

    @property
    def leq(self) -> np.ndarray:
        return self.meet == np.arange(self.size)[:, None]

    def __eq__(self, other):
        if not isinstance(other, OrthoLattice):
            return NotImplemented
        return (
            self.zero == other.zero
            and self.one == other.one
            and np.array_equal(self.meet, other.meet)
            and np.array_equal(self.join, other.join)
            and np.array_equal(self.comp, other.comp)
        )

    __hash__ = None

    def __repr__(self):
        return f"OrthoLattice(size={self.size}, zero={self.zero}, one={self.one})"

    @classmethod
    def from_order(cls, leq, comp, names=None) -> "OrthoLattice":
        """Build meet/join tables from a partial order given as a boolean matrix.

        Raises ``ValueError`` if some pair lacks a greatest lower or least
        upper bound.
        """
        po = PartialOrder(leq)
        n = po.size
        meet = np.empty((n, n), dtype=np.intp)
        join = np.empty((n, n), dtype=np.intp)
        for x in range(n):
            for y in range(n):
                meet[x, y] = po.greatest(np.flatnonzero(po.leq[:, x] & po.leq[:, y]))
                join[x, y] = po.least(np.flatnonzero(po.leq[x, :] & po.leq[y, :]))
        bottom = po.least(np.arange(n))
        top = po.greatest(np.arange(n))
        if bottom < 0 or top < 0 or (meet < 0).any() or (join < 0).any():
            raise ValueError("order is not a bounded lattice")
        return cls(meet, join, comp, bottom, top, names)


@dataclass(frozen=True, eq=False)
class PartialOrder:
    """A finite partial order; ``leq[x, y]`` is true iff x <= y."""

    leq: np.ndarray

    def __post_init__(self):
        leq = np.array(self.leq, dtype=bool)
        n = leq.shape[0]
        if leq.shape != (n, n):
            raise ValueError("leq must be square")
        leq.setflags(write=False)
        object.__setattr__(self, "leq", leq)
        diag = np.flatnonzero(~leq.diagonal())
        if diag.size:
            raise NotAPartialOrder("reflexivity", (int(diag[0]),))
        anti = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))
        if anti.size:
            raise NotAPartialOrder("antisymmetry", tuple(int(i) for i in anti[0]))
        # x<=y and y<=z but not x<=z
        trans = np.argwhere(leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :])
        if trans.size:
            raise NotAPartialOrder("transitivity", tuple(int(i) for i in trans[0]))

    @property
    def size(self) -> int:
        return self.leq.shape[0]

    def greatest(self, elems) -> int:
        """Index of the greatest element of ``elems`` or -1 if there is none."""
        elems = np.asarray(elems)
        for e in elems:
            if self.leq[elems, e].all():
                return int(e)
        return -1

    def least(self, elems) -> int:
        elems = np.asarray(elems)
        for e in elems:
            if self.leq[e, elems].all():
                return int(e)
        return -1

    def __eq__(self, other):
        if not isinstance(other, PartialOrder):
            return NotImplemented
        return np.array_equal(self.leq, other.leq)

    __hash__ = None


def derive_order(alg: RingLikeAlgebra) -> PartialOrder:
    """The order x <= y iff xy = x. Raises NotAPartialOrder otherwise."""
    return PartialOrder(alg.times == np.arange(alg.size)[:, None])


# ---------------------------------------------------------------------------
# Verdicts and the law engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Result of checking a law or a law family.

    On failure ``witness`` holds the violating carrier indices and ``lhs`` /
    ``rhs`` the two evaluated sides. ``parts`` carries sub-verdicts for
    composite checks; ``failures`` is filled only when all failures were
    requested.
    """

    passed: bool
    law: str
    witness: tuple | None = None
    lhs: object = None
    rhs: object = None
    parts: tuple["Verdict", ...] = ()
    failures: tuple["Verdict", ...] = ()

    def __bool__(self):
        return self.passed

    def describe(self, label: Callable[[int], str] = str) -> str:
        if self.passed:
            return f"PASS {self.law}"
        wit = ", ".join(label(i) if isinstance(i, (int, np.integer)) else str(i) for i in self.witness)
        lhs = label(self.lhs) if isinstance(self.lhs, (int, np.integer)) else self.lhs
        rhs = label(self.rhs) if isinstance(self.rhs, (int, np.integer)) else self.rhs
        return f"FAIL {self.law} at ({wit}): lhs={lhs} rhs={rhs}"

    def to_dict(self) -> dict:
        d = {"law": self.law, "passed": self.passed}
        if not self.passed:
            d["witness"] = [_plain(i) for i in self.witness]
            d["lhs"] = _plain(self.lhs)
            d["rhs"] = _plain(self.rhs)
        if self.parts:
            d["parts"] = [p.to_dict() for p in self.parts]
        return d


def _plain(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (tuple, list)):
        return [_plain(x) for x in v]
    if isinstance(v, (int, bool)) or v is None:
        return v
    return str(v)


def passed(law: str, parts: Sequence[Verdict] = ()) -> Verdict:
    return Verdict(True, law, parts=tuple(parts))


@dataclass(frozen=True)
class Law:
    """An identity ``lhs == rhs`` in ``arity`` variables, optionally guarded.

    ``sides(s, *vars)`` must work both on broadcast index grids and on plain
    integers, so the same definition drives the scan and the re-evaluation of
    a witness.
    """

    name: str
    arity: int
    sides: Callable
    text: str
    condition: Callable | None = None

    def evaluate(self, s, *args) -> tuple[int, int]:
        lhs, rhs = self.sides(s, *args)
        return int(lhs), int(rhs)

    def applies(self, s, *args) -> bool:
        return self.condition is None or bool(self.condition(s, *args))


LAWS: dict[str, Law] = {}


def _law(name, arity, text, condition=None):
    def deco(fn):
        LAWS[name] = Law(name, arity, fn, text, condition)
        return fn

    return deco


def check_law(s, law: Law | str, collect: bool = False) -> Verdict:
    """Exhaustively check one law on structure ``s``."""
    if isinstance(law, str):
        law = LAWS[law]
    n = s.size
    if law.arity == 3 and n > TRIPLE_WARN:
        warnings.warn(f"checking {law.name} over {n}^3 triples", stacklevel=2)
    shape = (n,) * law.arity
    grids = np.ix_(*([np.arange(n)] * law.arity)) if law.arity else ()
    lhs, rhs = law.sides(s, *grids)
    lhs = np.broadcast_to(lhs, shape)
    rhs = np.broadcast_to(rhs, shape)
    bad = lhs != rhs
    if law.condition is not None:
        bad = bad & np.broadcast_to(law.condition(s, *grids), shape)
    if not bad.any():
        return Verdict(True, law.name)
    hits = np.argwhere(bad) if law.arity else np.zeros((1, 0), dtype=np.intp)
    found = []
    for row in hits if collect else hits[:1]:
        w = tuple(int(i) for i in row)
        found.append(Verdict(False, law.name, w, int(lhs[w]), int(rhs[w])))
    first = found[0]
    return Verdict(False, law.name, first.witness, first.lhs, first.rhs,
                   failures=tuple(found) if collect else ())


def check_laws(s, names: Iterable[str], label: str, collect: bool = False) -> Verdict:
    """Check laws in order; return the first failure or a pass named ``label``.

    With ``collect`` every law is scanned and all failures are kept.
    """
    failures = []
    for name in names:
        v = check_law(s, name, collect)
        if not v.passed:
            if not collect:
                return v
            failures.extend(v.failures)
    if failures:
        f = failures[0]
        return Verdict(False, f.law, f.witness, f.lhs, f.rhs, failures=tuple(failures))
    return passed(label)


def reevaluate(verdict: Verdict, s) -> tuple[int, int]:
    """Re-evaluate both sides of a failed table law at its witness."""
    law = LAWS[verdict.law]
    return law.evaluate(s, *verdict.witness)


# ---------------------------------------------------------------------------
# Ring-side laws. Variables are carrier indices; P = plus, T = times.
# ---------------------------------------------------------------------------


@_law("times_idem", 1, "xx = x")
def _(r, x):
    return r.times[x, x], x


@_law("times_comm", 2, "xy = yx")
def _(r, x, y):
    return r.times[x, y], r.times[y, x]


@_law("times_one", 1, "x1 = x")
def _(r, x):
    return r.times[x, r.one], x


@_law("times_zero", 1, "x0 = 0")
def _(r, x):
    return r.times[x, r.zero], np.full_like(x, r.zero)


@_law("times_assoc", 3, "(xy)z = x(yz)")
def _(r, x, y, z):
    T = r.times
    return T[T[x, y], z], T[x, T[y, z]]


SEMILATTICE = ("times_idem", "times_comm", "times_one", "times_zero", "times_assoc")


@_law("R1", 2, "x+y = y+x")
def _(r, x, y):
    return r.plus[x, y], r.plus[y, x]


@_law("R2", 2, "(xy+1)(x+1)+1 = x")
def _(r, x, y):
    P, T, o = r.plus, r.times, r.one
    return P[T[P[T[x, y], o], P[x, o]], o], x


@_law("R3", 2, "((xy+1)x+1)x = xy")
def _(r, x, y):
    P, T, o = r.plus, r.times, r.one
    return T[P[T[P[T[x, y], o], x], o], x], T[x, y]


@_law("R4", 2, "xy+(x+1) = (xy+1)x+1")
def _(r, x, y):
    P, T, o = r.plus, r.times, r.one
    return P[T[x, y], P[x, o]], P[T[P[T[x, y], o], x], o]


@_law("R5", 2, "x+y = x(y+1)+(x+1)y")
def _(r, x, y):
    P, T, o = r.plus, r.times, r.one
    return P[x, y], P[T[x, P[y, o]], T[P[x, o], y]]


@_law("R6", 2, "(xy+1)x = xy+x")
def _(r, x, y):
    P, T, o = r.plus, r.times, r.one
    return T[P[T[x, y], o], x], P[T[x, y], x]


@_law("R7", 2, "(x+y)+1 = x+(y+1)")
def _(r, x, y):
    P, o = r.plus, r.one
    return P[P[x, y], o], P[x, P[y, o]]


@_law("char2", 1, "x+x = 0")
def _(r, x):
    return r.plus[x, x], np.full_like(x, r.zero)


@_law("W1", 0, "0+1 = 1")
def _(r):
    return r.plus[r.zero, r.one], r.one


@_law("W2", 2, "x+y = y+x")
def _(r, x, y):
    return r.plus[x, y], r.plus[y, x]


@_law("W3", 2, "(xy+x)+1 = xy+(x+1)")
def _(r, x, y):
    P, T, o = r.plus, r.times, r.one
    return P[P[T[x, y], x], o], P[T[x, y], P[x, o]]


@_law("W4", 2, "(xy+x)+x = xy+(x+x)")
def _(r, x, y):
    P, T = r.plus, r.times
    return P[P[T[x, y], x], x], P[T[x, y], P[x, x]]


@_law("W5", 2, "(xy+1)x = xy+x")
def _(r, x, y):
    P, T, o = r.plus, r.times, r.one
    return T[P[T[x, y], o], x], P[T[x, y], x]


@_law("W6", 2, "(xy+1)(x+1) = xy(x+1)+(x+1)")
def _(r, x, y):
    P, T, o = r.plus, r.times, r.one
    return T[P[T[x, y], o], P[x, o]], P[T[T[x, y], P[x, o]], P[x, o]]


@_law("plus_assoc", 3, "(x+y)+z = x+(y+z)")
def _(r, x, y, z):
    P = r.plus
    return P[P[x, y], z], P[x, P[y, z]]


@_law("plus_zero", 1, "x+0 = x")
def _(r, x):
    return r.plus[x, r.zero], x


@_law("distrib", 3, "x(y+z) = xy+xz")
def _(r, x, y, z):
    P, T = r.plus, r.times
    return T[x, P[y, z]], P[T[x, y], T[x, z]]


@_law("cor2", 2, "x(y+1) = xy+x")
def _(r, x, y):
    P, T, o = r.plus, r.times, r.one
    return T[x, P[y, o]], P[T[x, y], x]


W_AXIOMS = ("W1", "W2", "W3", "W4", "W5", "W6")
BOOLEAN_RING = SEMILATTICE + ("R1", "plus_assoc", "plus_zero", "char2", "distrib")


def check_meet_semilattice(alg: RingLikeAlgebra, collect: bool = False) -> Verdict:
    """(R, *, 0, 1) is a bounded meet-semilattice."""
    return check_laws(alg, SEMILATTICE, "meet_semilattice", collect)


def check_rlse(alg: RingLikeAlgebra, collect: bool = False) -> Verdict:
    return check_laws(alg, SEMILATTICE + ("R1", "R2", "R3", "R4"), "RLSE", collect)


def check_near_rlse(alg: RingLikeAlgebra, collect: bool = False) -> Verdict:
    """Meet-semilattice with R1 and R2; R3 and R4 are dropped."""
    return check_laws(alg, SEMILATTICE + ("R1", "R2"), "near_RLSE", collect)


def check_specific(alg: RingLikeAlgebra, collect: bool = False) -> Verdict:
    """The bare identity R5. Combine with :func:`check_rlse` for the class."""
    return check_law(alg, "R5", collect)


def check_weakly_distributive(alg: RingLikeAlgebra, collect: bool = False) -> Verdict:
    return check_law(alg, "R6", collect)


def check_weakly_associative(alg: RingLikeAlgebra, collect: bool = False) -> Verdict:
    return check_law(alg, "R7", collect)


def check_characteristic_two(alg: RingLikeAlgebra, collect: bool = False) -> Verdict:
    return check_law(alg, "char2", collect)


def check_w_axioms(alg: RingLikeAlgebra) -> Verdict:
    """W1-W6; ``parts`` holds one verdict per law."""
    parts = tuple(check_law(alg, name) for name in W_AXIOMS)
    for p in parts:
        if not p.passed:
            return Verdict(False, p.law, p.witness, p.lhs, p.rhs, parts=parts)
    return passed("W1-W6", parts)


def check_boolean_ring(alg: RingLikeAlgebra, collect: bool = False) -> Verdict:
    return check_laws(alg, BOOLEAN_RING, "boolean_ring", collect)


# Law sets of each class. Identity classes are only meaningful on an RLSE.
CLASSES: dict[str, tuple[str, ...]] = {
    "meet_semilattice": SEMILATTICE,
    "near_rlse": SEMILATTICE + ("R1", "R2"),
    "rlse": SEMILATTICE + ("R1", "R2", "R3", "R4"),
    "specific": ("R5",),
    "weakly_distributive": ("R6",),
    "weakly_associative": ("R7",),
    "characteristic_two": ("char2",),
    "w_axioms": W_AXIOMS,
    "boolean_ring": BOOLEAN_RING,
}
IDENTITY_CLASSES = ("specific", "weakly_distributive", "weakly_associative", "characteristic_two", "w_axioms")


def rlse_profile(alg: RingLikeAlgebra) -> dict[str, bool]:
    """Membership of ``alg`` in each class; identity classes require RLSE."""
    rlse = check_rlse(alg).passed
    out = {
        "meet_semilattice": check_meet_semilattice(alg).passed,
        "near_rlse": check_near_rlse(alg).passed,
        "rlse": rlse,
    }
    for name, fn in (
        ("specific", check_specific),
        ("weakly_distributive", check_weakly_distributive),
        ("weakly_associative", check_weakly_associative),
        ("characteristic_two", check_characteristic_two),
        ("w_axioms", check_w_axioms),
    ):
        out[name] = rlse and fn(alg).passed
    out["boolean_ring"] = check_boolean_ring(alg).passed
    return out


# ---------------------------------------------------------------------------
# Batched evaluation over a stack of addition tables sharing one multiplication
# ---------------------------------------------------------------------------


class _Stacked:
    """Index a stack of tables as if it were one; the batch axis leads."""

    def __init__(self, tables: np.ndarray):
        self.tables = tables

    def __getitem__(self, idx):
        a, b = idx
        nd = max(np.ndim(a), np.ndim(b), 1)
        batch = np.arange(len(self.tables)).reshape((-1,) + (1,) * (nd - 1))
        return self.tables[batch, a, b]


def _stack(plus, times, zero: int, one: int) -> SimpleNamespace:
    plus = np.asarray(plus, dtype=np.intp)
    if plus.ndim != 3 or plus.shape[1] != plus.shape[2]:
        raise ValueError("expected a stack of square addition tables")
    return SimpleNamespace(plus=_Stacked(plus), times=np.asarray(times, dtype=np.intp),
                           zero=zero, one=one, size=plus.shape[1], count=len(plus))


def check_law_batch(plus, times, zero: int, one: int, law: Law | str) -> np.ndarray:
    """Per-table pass flags of an unguarded ring law over stacked ``plus`` tables."""
    if isinstance(law, str):
        law = LAWS[law]
    s = _stack(plus, times, zero, one)
    n, arity = s.size, law.arity
    grids = np.ix_(*([np.arange(n)] * arity)) if arity else ()
    grids = tuple(g[None] for g in grids)  # room for the batch axis
    shape = (s.count,) + (n,) * arity
    lhs, rhs = law.sides(s, *grids)
    ok = np.broadcast_to(lhs, shape) == np.broadcast_to(rhs, shape)
    return ok.reshape(s.count, -1).all(axis=1)


def rlse_profile_batch(plus, times, zero: int, one: int) -> dict[str, np.ndarray]:
    """:func:`rlse_profile` for every table in a stack, as boolean arrays."""
    flags: dict[str, np.ndarray] = {}

    def holds(names):
        for name in names:
            if name not in flags:
                flags[name] = check_law_batch(plus, times, zero, one, name)
        return np.logical_and.reduce([flags[name] for name in names])

    out = {cls: holds(names) for cls, names in CLASSES.items()}
    for cls in IDENTITY_CLASSES:
        out[cls] = out[cls] & out["rlse"]
    return out


def commutation_batch(plus, times, one: int) -> tuple[np.ndarray, np.ndarray]:
    """Commuting flags and commutator values for all pairs, per table.

    Both arrays have shape (tables, n, n).
    """
    s = _stack(plus, times, 0, one)
    n = s.size
    a, b = np.arange(n)[None, :, None], np.arange(n)[None, None, :]
    shape = (s.count, n, n)
    comm = np.broadcast_to(_commutes_lhs(s, a, b) == a, shape)
    return comm, np.broadcast_to(_commutator(s, a, b), shape)


def _commutes_lhs(s, a, b):
    P, T, o = s.plus, s.times, s.one
    return P[T[a, b], T[a, P[b, o]]]


def _commutator(s, a, b):
    P, T, o = s.plus, s.times, s.one
    a1, b1 = P[a, o], P[b, o]
    return P[P[T[a, b], T[a, b1]], P[T[a1, b], T[a1, b1]]]


def commutes_rlse(alg: RingLikeAlgebra, a: int, b: int) -> bool:
    """ab + a(b+1) = a. Meaningful when ``alg`` is an RLSE."""
    return bool(_commutes_lhs(alg, a, b) == a)


def commutator_rlse(alg: RingLikeAlgebra, a: int, b: int) -> int:
    """(ab + a(b+1)) + ((a+1)b + (a+1)(b+1))."""
    return int(_commutator(alg, a, b))


def orthogonal_rlse(alg: RingLikeAlgebra, a: int, b: int) -> bool:
    return bool(alg.times[a, alg.plus[alg.one, b]] == a)


# ---------------------------------------------------------------------------
# Lattice-side laws. M = meet, J = join, C = complement.
# ---------------------------------------------------------------------------


@_law("meet_comm", 2, "x^y = y^x")
def _(L, x, y):
    return L.meet[x, y], L.meet[y, x]


@_law("join_comm", 2, "xvy = yvx")
def _(L, x, y):
    return L.join[x, y], L.join[y, x]


@_law("meet_idem", 1, "x^x = x")
def _(L, x):
    return L.meet[x, x], x


@_law("join_idem", 1, "xvx = x")
def _(L, x):
    return L.join[x, x], x


@_law("meet_absorb", 2, "x^(xvy) = x")
def _(L, x, y):
    return L.meet[x, L.join[x, y]], np.broadcast_to(x, np.broadcast(x, y).shape)


@_law("join_absorb", 2, "xv(x^y) = x")
def _(L, x, y):
    return L.join[x, L.meet[x, y]], np.broadcast_to(x, np.broadcast(x, y).shape)


@_law("meet_assoc", 3, "(x^y)^z = x^(y^z)")
def _(L, x, y, z):
    M = L.meet
    return M[M[x, y], z], M[x, M[y, z]]


@_law("join_assoc", 3, "(xvy)vz = xv(yvz)")
def _(L, x, y, z):
    J = L.join
    return J[J[x, y], z], J[x, J[y, z]]


@_law("bottom", 1, "x^0 = 0")
def _(L, x):
    return L.meet[x, L.zero], np.full_like(x, L.zero)


@_law("top", 1, "x^1 = x")
def _(L, x):
    return L.meet[x, L.one], x


@_law("involution", 1, "x'' = x")
def _(L, x):
    return L.comp[L.comp[x]], x


@_law("comp_meet", 1, "x^x' = 0")
def _(L, x):
    return L.meet[x, L.comp[x]], np.full_like(x, L.zero)


@_law("comp_join", 1, "xvx' = 1")
def _(L, x):
    return L.join[x, L.comp[x]], np.full_like(x, L.one)


@_law("de_morgan", 2, "(xvy)' = x'^y'")
def _(L, x, y):
    C = L.comp
    return C[L.join[x, y]], L.meet[C[x], C[y]]


@_law("antitone", 2, "x<=y implies y'<=x'", condition=lambda L, x, y: L.meet[x, y] == x)
def _(L, x, y):
    C = L.comp
    return L.meet[C[y], C[x]], C[y]


ORTHOLATTICE = (
    "meet_idem", "join_idem", "meet_comm", "join_comm", "meet_absorb", "join_absorb",
    "bottom", "top", "involution", "comp_meet", "comp_join", "de_morgan", "antitone",
    "meet_assoc", "join_assoc",
)


@_law("orthomodular", 2, "x<=y implies xv(x'^y) = y", condition=lambda L, x, y: L.meet[x, y] == x)
def _(L, x, y):
    return L.join[x, L.meet[L.comp[x], y]], np.broadcast_to(y, np.broadcast(x, y).shape)


@_law("distributive", 3, "x^(yvz) = (x^y)v(x^z)")
def _(L, x, y, z):
    M, J = L.meet, L.join
    return M[x, J[y, z]], J[M[x, y], M[x, z]]


def check_ortholattice(lat: OrthoLattice, collect: bool = False) -> Verdict:
    return check_laws(lat, ORTHOLATTICE, "ortholattice", collect)


def check_orthomodular(lat: OrthoLattice, collect: bool = False) -> Verdict:
    """Ortholattice axioms followed by the orthomodular law."""
    return check_laws(lat, ORTHOLATTICE + ("orthomodular",), "orthomodular", collect)


def check_distributive(lat: OrthoLattice, collect: bool = False) -> Verdict:
    return check_law(lat, "distributive", collect)


def commutes_lattice(lat: OrthoLattice, a: int, b: int) -> bool:
    """(a^b) v (a^b') = a."""
    M, J, C = lat.meet, lat.join, lat.comp
    return bool(J[M[a, b], M[a, C[b]]] == a)


def commutator_lattice(lat: OrthoLattice, a: int, b: int) -> int:
    M, J, C = lat.meet, lat.join, lat.comp
    return int(J[J[J[M[a, b], M[a, C[b]]], M[C[a], b]], M[C[a], C[b]]])


def orthogonal_lattice(lat: OrthoLattice, a: int, b: int) -> bool:
    return bool(lat.meet[a, lat.comp[b]] == a)


# ---------------------------------------------------------------------------
# Conditions characterising RLSE additions on an orthomodular lattice.
# ---------------------------------------------------------------------------


@_law("th1_a", 2, "x+y = y+x")
def _(s, x, y):
    return s.plus[x, y], s.plus[y, x]


@_law("th1_b", 1, "x+1 = x'")
def _(s, x):
    return s.plus[x, s.one], s.comp[x]


@_law("th1_c", 2, "x<=y' implies x+y = xvy",
      condition=lambda s, x, y: s.meet[x, s.comp[y]] == x)
def _(s, x, y):
    return s.plus[x, y], s.join[x, y]


def th1_structure(lat: OrthoLattice, plus) -> SimpleNamespace:
    """Bundle a lattice and a candidate addition for the th1_* laws."""
    plus = _as_table(plus, "plus", lat.size)
    return SimpleNamespace(size=lat.size, plus=plus, meet=lat.meet, join=lat.join,
                           comp=lat.comp, zero=lat.zero, one=lat.one)


def check_th1_conditions(lat: OrthoLattice, plus, collect: bool = False) -> Verdict:
    """Check that ``plus`` is an RLSE addition on the orthomodular ``lat``.

    Passing certifies that (carrier, plus, meet, 0, 1) is an RLSE.
    """
    return check_laws(th1_structure(lat, plus), ("th1_a", "th1_b", "th1_c"), "th1", collect)
