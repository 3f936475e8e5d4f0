"""Genus exponents for imaginary quadratic fields.

For L = Q(sqrt(-d)) and an even twist i the 2-exponent of
|H2(o_L)_G| / |H2(Z)| is (#tame primes) - t - 1, where t is the rank of
the tame Frobenius vectors on the radical generated by 2.  Exponent -1
means the coinvariants are trivial, and that happens exactly when the
classifier says the 2-part vanishes: a single tame prime +/-3 mod 8.
"""

from kgenus import classify as cl
from kgenus import genus_exponent, k_genus_ratio, quadratic_extension

print(f"{'d':>5} {'tame':>12} {'i':>2} {'exponent':>8} "
      f"{'K-exponent':>10} {'classifier':>12}")
for d in (-1, -2, -3, -5, -7, -10, -13, -15, -21, -30, -33, -35):
    ext = quadratic_extension(d)
    shape = cl.ExtensionShape(p=2, ramified_tame=ext.tame_ramified,
                              wild=ext.wild_ramified,
                              real_type=cl.TOTALLY_IMAGINARY)
    for i in (2, 4):
        motivic = genus_exponent(ext, i).exponent
        k_part = k_genus_ratio(ext, i).exponent
        verdict = cl.vanishing_decision(shape, i).verdict
        tame = ",".join(str(x) for x in sorted(ext.tame_ramified)) or "-"
        print(f"{d:>5} {tame:>12} {i:>2} {motivic:>8} {k_part:>10} {verdict:>12}")

print()
print("the exponent -1 rows at i = 2 mod 4 are exactly the vanishing rows:")
print("one tame prime, congruent to +/-3 mod 8 (or none at all).")
