"""Orders of K_{2i-2}(Z) from Bernoulli numerators.

At an even twist i = 2k the degree-two cohomology of Z has order
2*c_k, with c_k the numerator of |B_{2k}|/4k; the K-group order follows
from the mod-8 comparison table.  The odd part of c_k first becomes
nontrivial at i = 12, where it equals 691 and |K_22(Z)| = 691.
"""

from kgenus import bernoulli, bernoulli_numerator, h2_order_Z

print(f"{'i':>3} {'B_i':>22} {'c_(i/2)':>10} {'|H2|':>8} {'|K_(2i-2)|':>10} {'note':>12}")
for i in range(2, 31):
    row = h2_order_Z(i)
    if i % 2 == 0:
        b = bernoulli(i)
        b_text = f"{b.numerator}/{b.denominator}"
        c_text = str(bernoulli_numerator(i // 2))
    else:
        b_text = c_text = "-"
    note = "conditional" if row.conditional_on_vandiver else ""
    print(f"{i:>3} {b_text:>22} {c_text:>10} {row.h2_order.value:>8} "
          f"{row.k_order.value:>10} {note:>12}")

print()
print("odd twists have order 1 with the odd part resting on Vandiver;")
print("the 2-part is unconditional, which the table marks explicitly.")
