"""Why only the position of the first nonzero coefficient matters.

The map phi(y, z) = (y, z (A + B z / 2 + C z^2 / 3)) preserves <y^2, z^4> and
pulls dy^dz back to (A + B z + C z^2) dy^dz, so every restriction with A != 0
is equivalent to [dy^dz].
"""

from fractions import Fraction

from symicis import FGIdeal, PolyMap, build_space, pullback, reduce, variables
from symicis.forms import DiffForm

y, z = variables(2)
S = build_space(FGIdeal.of([y ** 2, z ** 4]))
dydz = DiffForm.basic((0, 1), 2)

for A, B, C in [(1, 0, 0), (2, 3, -1), (Fraction(1, 2), 0, 7)]:
    phi = PolyMap([y, z * (z * z * Fraction(C, 3) + z * Fraction(B, 2) + A)], 2)
    image = reduce(pullback(phi, dydz, S.trunc), S)
    print(f"A={A}, B={B}, C={C}: phi^*[dy^dz] has coordinates {tuple(str(c) for c in image.coords)}")
