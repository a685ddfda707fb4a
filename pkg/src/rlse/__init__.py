"""Finite ring-like structures of events, orthomodular lattices and numerical events."""

from .algebra import (
    LAWS,
    OrthoLattice,
    PartialOrder,
    RingLikeAlgebra,
    Verdict,
    check_boolean_ring,
    check_characteristic_two,
    check_distributive,
    check_law,
    check_law_batch,
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
    commutation_batch,
    commutator_lattice,
    commutator_rlse,
    commutes_lattice,
    commutes_rlse,
    derive_order,
    orthogonal_lattice,
    orthogonal_rlse,
    reevaluate,
    rlse_profile,
    rlse_profile_batch,
)
from .embeddability import (
    EmbeddabilityReport,
    classify,
    embeddable_pair,
    embeddable_pair_two_valued,
    embeddable_set,
    embeddable_set_two_valued,
    oracle_embeddable,
)
from .events import (
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
from .transforms import check_cor2_pairwise, check_roundtrips, is_boolean_algebra, l_of_r, r_of_l

__version__ = "0.1.0"
