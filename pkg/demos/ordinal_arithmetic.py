"""A tour of exact ordinal arithmetic in Cantor normal form.

Ordinal addition is not commutative: adding something finite on the left
of an infinite ordinal is absorbed, while adding it on the right is not.
The natural (Hessenberg) sum repairs this by merging normal forms
coefficient by coefficient, at the price of no longer being the order
type of a concatenation.
"""

from euctype import (
    Ordinal,
    format_ordinal,
    left_subtract,
    natural_sum,
    omega,
    omega_power,
    parse_ordinal,
    product_left,
)


def show(label, value):
    print(f"  {label:<28} = {format_ordinal(value)}")


print("absorption on the left:")
show("1 + w", Ordinal(1) + omega)
show("w + 1", omega + 1)
show("w + w^2", omega + omega_power(2))

print("\nthe natural sum keeps both contributions:")
show("(w+1) # w", natural_sum(omega + 1, omega))
show("w # 1", natural_sum(omega, 1))

print("\ntwo product conventions, mirror images of each other:")
show("2 . w  (2 copies of w)", product_left(2, omega))
show("w . 2  (w copies of 2)", product_left(omega, 2))
show("w * 2  (2 copies of w)", omega * 2)

print("\nleft subtraction inverts addition from the left:")
g = left_subtract(omega, omega * 2 + 3)
show("(-w) + (w*2+3)", g)
show("w + that", omega + g)

print("\nthe same expressions parse from text:")
for src in ("w^2*3 + w*1 + 5", "1 + w", "(w+1) # w", "(-w) + (w*2+3)"):
    print(f"  {src!r:<28} -> {format_ordinal(parse_ordinal(src))}")
