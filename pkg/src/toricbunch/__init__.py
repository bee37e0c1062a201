"""Exact bunch calculus for toric varieties.

Bunches of cones in the rational divisor class space, their Gale-dual
projectable fans, and the geometric dictionary between the two sides.
"""

from .bunches import (Bunch, BunchCheck, DictionaryReport, WeightSystem, bunch_from_weights,
                      covering_collection, dictionary, enumerate_bunches,
                      free_bunch_isomorphic, is_complete, is_free, is_geometric, is_simple,
                      is_standard, verify_bunch)
from .classification import (KleinschmidtData, canonical_extension, enumerate_kleinschmidt,
                             kleinschmidt_is_fano, kleinschmidt_to_bunch)
from .cones import (Cone, dual_cone, faces, intersect, intersect_all, minkowski_sum,
                    relint_overlap, separating_form)
from .config import Limits, default_limits
from .divisors import (DivisorClassReport, ample_nonempty, anticanonical_class, b2,
                       canonical_class, class_group, divisor_report, is_fano,
                       is_q_gorenstein, mori_cone, pic_lattice_free, pic_q, semiample_cone)
from .errors import *  # noqa: F401,F403
from .fans import (Fan, FanReport, ProjectableFan, bunch_to_fan, bunch_to_projectable_fan,
                   fan_oracles, fan_to_bunch, is_maximal_projectable, is_projectable,
                   projectable_fan_to_bunch, quotient_fan)
from .projected import ProjectedCone, dualize, invariant_separation

__version__ = "0.1.0"
