"""
Weighted projective plane P(1, 2, 3)
====================================

Start from three weights in Z, turn the bunch into a fan, read off the
divisor class data and go back again.
"""

from toricbunch import (bunch_from_weights, bunch_to_fan, dictionary, divisor_report,
                        fan_to_bunch, free_bunch_isomorphic, pic_lattice_free)
from toricbunch.cones import Cone

###############################################################################
# The bunch is the single cone Q>=0 over the weights 1, 2, 3.

b = bunch_from_weights([(1,), (2,), (3,)], [Cone([(1,)])])
print(dictionary(b))

###############################################################################
# Gale duality gives three rays in Z^2 and three maximal cones.

fan = bunch_to_fan(b)
print("rays:", fan.rays)
print("cones:", fan.max_cones)

###############################################################################
# Class group Z, Picard group 6Z, anticanonical class 6.

report = divisor_report(b)
print("Cl rank", report.cl_rank, "torsion", report.cl_torsion)
print("Pic_Q basis", report.pic_q_basis)
print("Pic lattice", pic_lattice_free(b).basis)
print("canonical class", report.canonical_class, "Fano:", report.fano)

###############################################################################
# The round trip lands on an isomorphic bunch.

back = fan_to_bunch(fan)
print("isomorphism:", free_bunch_isomorphic(b, back))
