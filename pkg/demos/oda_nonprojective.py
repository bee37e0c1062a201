"""
A complete nonprojective threefold
==================================

Six weights in Z^3 with four covering cones.  Every condition for a
complete Q-factorial variety holds, yet the ample cone is empty.
"""

from toricbunch import (ample_nonempty, bunch_to_fan, dictionary, fan_oracles,
                        mori_cone, semiample_cone)
from toricbunch import catalog

b = catalog.example("oda")
for w in b.weights:
    print(w)

###############################################################################
# Dictionary flags, read on the bunch side.

flags = dictionary(b)
print("complete", flags.complete, "Q-factorial", flags.q_factorial)

###############################################################################
# The same facts on the fan side, computed directly from cones.

fan = bunch_to_fan(b)
oracles = fan_oracles(fan)
print("fan complete", oracles.complete, "simplicial", oracles.simplicial)
print("fan quasiprojective", oracles.quasiprojective)

###############################################################################
# The semiample cone is a single ray and the Mori cone contains a line.

semi = semiample_cone(b)
print("semiample rays", semi.rays)
print("ample cone nonempty:", ample_nonempty(b))
print("Mori cone strictly convex:", mori_cone(b).is_strictly_convex())
