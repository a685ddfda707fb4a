# # Which events fit inside a Boolean algebra?
#
# A set of events is classical if it lies inside a Boolean subalgebra of the
# ambient family. For k = 1, 2, ... the procedure compares, over all pairs of
# k-subsets A and B,
#
#     prod A (*) (1 - prod B)   and   prod A - prod A (*) prod B
#
# where (*) and prod are infima in the ambient.

import itertools

from rlse import catalog, embeddable_pair, embeddable_set, oracle_embeddable
from rlse.events import fmt_vector

mo2 = catalog.concrete_mo2_events()
r = embeddable_pair(mo2, "a", "b")
A, B, lhs, rhs = r.failing_pair
print(r.embeddable, fmt_vector(lhs), fmt_vector(rhs))

# a and its complement sit in the block {0, a, a', 1}, which is Boolean.

print(embeddable_set(mo2, ["a", "a'"]).embeddable)

# A brute-force search over complement-closed subsets gives the same answers.

agree = all(
    embeddable_set(mo2, sub).embeddable == oracle_embeddable(mo2, sub)
    for r in range(1, 5)
    for sub in itertools.combinations(range(len(mo2)), r)
)
print(agree)

# In the full power set every pair commutes, so everything is classical.

ps = catalog.power_set_events(3)
print(embeddable_set(ps, range(len(ps))).embeddable)
