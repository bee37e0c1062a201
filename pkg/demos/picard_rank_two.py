"""
Smooth complete varieties with class group Z^2
==============================================

Enumerate normal-form weight data, sort the Fano ones out, and compare
with two closed-form inequalities for the anticanonical class.
"""

from toricbunch import enumerate_kleinschmidt, kleinschmidt_is_fano, kleinschmidt_to_bunch
from toricbunch.classification import aligned_fano_inequality, printed_fano_inequality

###############################################################################
# Surfaces: the Hirzebruch surfaces F_0 .. F_3.

for d in enumerate_kleinschmidt(2, 3):
    print(d.b, d.mu, "Fano" if kleinschmidt_is_fano(d) else "")

###############################################################################
# Threefolds and fourfolds.  The ample-cone test is the reference; the
# aligned inequality agrees everywhere, the printed one does not.

for dim in (3, 4):
    rows = enumerate_kleinschmidt(dim, 3)
    fano = [kleinschmidt_is_fano(d) for d in rows]
    aligned = sum(aligned_fano_inequality(d) == f for d, f in zip(rows, fano))
    printed = sum(printed_fano_inequality(d) == f for d, f in zip(rows, fano))
    print(f"dim {dim}: {len(rows)} varieties, {sum(fano)} Fano, "
          f"aligned agrees {aligned}, printed agrees {printed}")

###############################################################################
# Each row is a genuine bunch with its own weights.

b = kleinschmidt_to_bunch(enumerate_kleinschmidt(3, 1)[0])
print(b.weights)
