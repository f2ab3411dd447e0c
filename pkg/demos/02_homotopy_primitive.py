"""Primitives with coefficients in a quasi-homogeneous ideal.

For a closed form in I*L^p the weighted homotopy operator returns alpha in
I*L^(p-1) with d(alpha) = omega.  We check both facts on a few forms.
"""

from symicis import FGIdeal, exterior_derivative, homotopy_primitive, jet_membership, parse_form, variables

names = ["y", "z"]
y, z = variables(2)
J = FGIdeal.of([y ** 2, z ** 4])
print("weights", J.weights.values)

for text in ["y^2*dy^dz", "z^4*dy^dz", "(3*y^2*z + y^2*z^4 - 1/2*z^5)*dy^dz"]:
    omega = parse_form(text, names)
    alpha = homotopy_primitive(omega, J)
    ok_d = exterior_derivative(alpha) == omega
    ok_I = all(jet_membership(c, J, 12) for c in alpha.components.values())
    print(f"omega = {text}\n  alpha = {alpha.to_str(names)}\n  d(alpha) = omega: {ok_d}, alpha in I*L^1: {ok_I}")
