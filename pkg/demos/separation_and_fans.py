"""
Separation, overlap and two fans with different b2
==================================================

A projected cone where a separating invariant form exists although the
projected faces do not meet in their relative interiors, and a pair of
fans on the same prism combinatorics with second Betti numbers 1 and 0.
"""

import pathlib

from toricbunch import b2, catalog, fan_oracles, fan_to_bunch
from toricbunch.cli import main

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

###############################################################################
# The generators of the cone are not simplicial, so this lives outside the
# bunch machinery; the command line check reports both sides.

print(catalog.example_document("ex3.4")["gamma_generators"])
main(["check", str(DATA / "ex3.4.cone-pair.json")])

###############################################################################
# Two fans whose second rays differ by one coordinate.

for name in ("eikelberg-delta", "eikelberg-delta-prime"):
    fan = catalog.example(name)
    oracles = fan_oracles(fan)
    print(name, "complete", oracles.complete, "b2 =", b2(fan_to_bunch(fan)))
