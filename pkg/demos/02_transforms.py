# # From rings to orthomodular lattices and back
#
# An RLSE carries a lattice: x v y = (x+1)(y+1)+1, x ^ y = xy, x' = x+1.
# An orthomodular lattice carries a specific RLSE:
# x+y = (x ^ y') v (x' ^ y), xy = x ^ y.

import numpy as np

from rlse import catalog, check_orthomodular, is_boolean_algebra, l_of_r, r_of_l
from rlse.transforms import roundtrip_diff_cells

mo2 = catalog.mo_lattice(2)
r = r_of_l(mo2)
print(l_of_r(r) == mo2)

# The lattice is orthomodular but not distributive, so not Boolean.

print(check_orthomodular(mo2).describe(mo2.label))
print(is_boolean_algebra(mo2).describe(mo2.label))

# The hexagon is an ortholattice that fails orthomodularity; r_of_l refuses it.

hexagon = catalog.hexagon_lattice()
print(check_orthomodular(hexagon).describe(hexagon.label))
try:
    r_of_l(hexagon)
except Exception as exc:
    print(type(exc).__name__)

# A non-specific RLSE loses its addition on the way round. Only the cross
# cells can change; the diagonal and anything involving 0 or 1 are fixed.

wa = catalog.weakly_associative_mo2(3)
back = r_of_l(l_of_r(wa))
print(np.array_equal(back.times, wa.times))
print(sorted(roundtrip_diff_cells(wa)))

# How many RLSE additions does MO_2 carry? Every cell not pinned by the
# lattice is free, which gives 6**8 tables.

print(catalog.free_cells(mo2))
print(catalog.count_plus_extensions(mo2), catalog.count_plus_extensions(mo2, characteristic_two=True))
