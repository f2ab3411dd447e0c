"""Symplectic multiplicity, index of isotropy and realizability.

Every algebraic restriction to <y^2, z^4> is A dy^dz + B z dy^dz + C z^2 dy^dz.
The invariants depend only on which coefficient is the first nonzero one.
"""

from fractions import Fraction

from symicis import FGIdeal, build_space, index_of_isotropy, realizable, symplectic_multiplicity, variables
from symicis.ideals import suspend
from symicis.restrictions import AlgRestriction

y, z = variables(2)
J = FGIdeal.of([y ** 2, z ** 4])
S = build_space(J)

print(f"{'(A, B, C)':14} {'mu':>3} {'iota':>5}  realizable n=1  n=2")
for coords in [(1, 0, 0), (2, -1, 5), (0, 1, 0), (0, 3, 1), (0, 0, 1), (0, 0, 0)]:
    ar = AlgRestriction(S, tuple(map(Fraction, coords)))
    mu = symplectic_multiplicity(ar)
    iota = index_of_isotropy(ar)
    r1 = realizable(ar, J, 1)
    r2 = realizable(ar, suspend(J, 2), 2)
    print(f"{str(coords):14} {mu:>3} {str(iota):>5}  {str(r1):>14} {str(r2):>4}")
