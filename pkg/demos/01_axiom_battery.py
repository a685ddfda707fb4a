# # Checking the axioms of a ring-like structure of events
#
# An RLSE is a set with an addition and a multiplication where the
# multiplication is a bounded meet-semilattice and four identities R1-R4 hold.
# Every Boolean ring is one. Here we build a few small ones as operation tables
# and ask which classes they belong to.

from rlse import catalog, check_weakly_associative, reevaluate, rlse_profile

# The Boolean ring on two atoms. Indices are bitmasks of subsets.

ring = catalog.boolean_ring(2)
print(ring.names)
print(ring.plus)

for name, ok in rlse_profile(ring).items():
    print(f"{name:<20} {ok}")

# Now the specific RLSE of MO_2, the six-element lattice with two blocks
# {a, a'} and {b, b'} glued at 0 and 1. It is an RLSE but not a Boolean ring.

r = catalog.specific_rlse_mo(2)
print(r.plus)
profile = rlse_profile(r)
print({k: v for k, v in profile.items() if not v})

# Weak associativity (x+y)+1 = x+(y+1) fails. The checker reports the first
# violating pair in lexicographic order, with both sides evaluated.

v = check_weakly_associative(r)
print(v.describe(r.label))

# The witness can be fed back into the law to reproduce the two sides.

print(reevaluate(v, r))

# The family weakly_associative_mo2(c) keeps the same lattice but chooses the
# cross cells a+b, a'+b' = c. Each member is weakly associative and none is
# specific.

for c in range(6):
    p = rlse_profile(catalog.weakly_associative_mo2(c))
    print(r.label(c), p["weakly_associative"], p["specific"])
