# # Numerical events
#
# A numerical event assigns a probability to each state of a system. With
# exact fractions we can check the axioms of an algebra of S-probabilities and
# compute the RLSE it carries.

from rlse import (
    EventFamily,
    StateSpace,
    check_prop3,
    check_q_structure,
    check_s_probability_algebra,
    close_under_maxmin,
    rlse_of_events,
)
from rlse import catalog

fam = catalog.concrete_mo2_events()
for i, e in enumerate(fam):
    print(fam.label(i), e)

print(check_s_probability_algebra(fam).describe())
print(rlse_of_events(fam) == catalog.specific_rlse_mo(2))
print(check_prop3(fam).describe())

# The same lattice shows up with graded values over two states.

graded = EventFamily(StateSpace(["s1", "s2"]),
                     [(0, 0), ("1/5", "4/5"), ("4/5", "1/5"), ("2/5", "3/5"), ("3/5", "2/5"), (1, 1)],
                     ["0", "a", "a'", "b", "b'", "1"])
print(rlse_of_events(graded) == catalog.specific_rlse_mo(2))

# With the pointwise operations p+q = max - min and pq = min the picture
# changes. A family closed under them is a specific near-RLSE and a GFE, and
# five conditions switch on or off together: two-valued, R3, R4, RLSE and
# Boolean ring.

seed = EventFamily(StateSpace(["s", "t"]), [("1/2", "1/4"), ("1/2", "3/4")])
q = close_under_maxmin(seed)
print(len(q))
v = check_q_structure(q)
print([(p.law, p.passed) for p in v.parts])

# On the power set everything is two-valued and all five hold.

v = check_q_structure(catalog.power_set_events(3))
print(all(v.parts))
