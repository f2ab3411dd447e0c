"""Quotient bases of algebraic restrictions.

A 2-form has zero restriction to an ideal I when it lies in
I*L^2 + d(I*L^1).  For the fat points below the quotient of closed 2-forms
by these is finite dimensional; we print a monomial basis for each.
"""

from symicis import FGIdeal, build_space, variables
from symicis.ideals import nilpotency_order

y, z = variables(2)
names = ["y", "z"]

examples = {
    "<y^2, z^4>": [y ** 2, z ** 4],
    "<y^2 + z^4, y z^2>": [y ** 2 + z ** 4, y * z ** 2],
    "<y z, y^2 + z^2>": [y * z, y ** 2 + z ** 2],
    "<y^2 + z^3, z^3>": [y ** 2 + z ** 3, z ** 3],
}

for title, gens in examples.items():
    I = FGIdeal.of(gens)
    space = build_space(I)
    basis = ", ".join(b.to_str(names) for b in space.quotient_basis)
    print(f"{title:22} weights {I.weights.values}  N = {nilpotency_order(I)}  dim {space.dimension}: {basis}")

# 1-forms too: closed 1-forms modulo I*L^1 + d(I)
J = FGIdeal.of([y ** 2, z ** 4])
one = build_space(J, p=1)
print("closed 1-forms mod <y^2, z^4>:", ", ".join(b.to_str(names) for b in one.quotient_basis))
