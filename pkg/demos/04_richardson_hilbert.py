# Hilbert series of quantum Richardson quotients in G(2,4) and G(3,6).

from qrichardson.grassmann import plucker_poset
from qrichardson.richardson import gk_dim, hilbert, quotient_dimension, richardson

R = richardson(2, 4, (1, 3), (2, 4))
print("interval:", R.interval)
data = hilbert(R, 6)
print("h_d:", data.h, "numerator:", data.numerator, "Gorenstein indicator:", data.palindromic)

# Dimensions computed from PBW ranks do not depend on q.
for q in (None, 1, 2):
    print(f"q={q or 'q'}:", [quotient_dimension(R, d, q) for d in (1, 2, 3)])

L, _ = plucker_poset(2, 4)
for a in L.elements:
    row = [gk_dim(richardson(2, 4, a, b)) if L.le(a, b) else "." for b in L.elements]
    print(a, row)

print("G(3,6) numerator:", hilbert(richardson(3, 6, (1, 2, 3), (4, 5, 6))).numerator)
