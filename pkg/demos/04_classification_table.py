"""All symplectic classes of each simple fat-point family on C^4.

Each normal form is classified from scratch: reduction to a smooth surface,
reduction of the restricted symplectic form, then invariants.
"""

from symicis.symclass import family, table_rows

samples = [("Iab", 2, 2), ("I2a+1", 3, None), ("I2a+4", 2, None), ("Ia+5", 4, None), ("I10star", None, None)]

for key, a, b in samples:
    fam = family(key)
    print(fam.label, {k: v for k, v in fam.param_dict(a, b).items()})
    for rec in table_rows(key, 2, a, b):
        iota = "inf" if rec.iota == float("inf") else rec.iota
        print(f"   {rec.label:12} ({', '.join(rec.normal_form)})  cod {rec.cod}  mu {rec.mu}  i {iota}")
