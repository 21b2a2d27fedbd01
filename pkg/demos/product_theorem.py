"""Order types of product rings, from three angles.

For finite rings the order type of a product is exactly the sum of the
factor order types.  The pair-valued construction divides componentwise
with a quotient shift, its collapse through the natural sum gives an
honest ordinal-valued Euclidean function, and left subtraction recovers
a Euclidean function on each factor from the product's bottom table.
"""

from euctype import (
    ProductRing,
    Zmod,
    bottom_euclidean,
    collapse_pair_table,
    nagata_product,
    order_type,
    pair_divide,
    product_bounds,
    residual_euclidean,
)
from euctype.ordinal import format_ordinal, omega

r1, r2 = Zmod(4), Zmod(9)
t1, t2 = bottom_euclidean(r1), bottom_euclidean(r2)
product = ProductRing([r1, r2])
tp = bottom_euclidean(product)

print(f"e({r1.name}) = {order_type(t1)}, e({r2.name}) = {order_type(t2)}, "
      f"e({product.name}) = {order_type(tp)}")

pt = nagata_product(t1, t2)
w = pair_divide(pt, (1, 3), (2, 3))
print(f"\npair division of (1, 3) by (2, 3): q = {w.quotient}, r = {w.remainder}")
print("  (the second quotient coordinate shifts down by one so the remainder")
print("   picks up the divisor coordinate 3 instead of an unusable zero)")

c = collapse_pair_table(pt)
print(f"\ncollapsed table validated: {c.validated}, value at zero {c.value_at_zero}")

res = residual_euclidean(tp, 1)
print(f"residual table on {r2.name} validated: {res.validated}")
print(f"  values: {{{', '.join(f'{x}: {v}' for x, v in sorted(res.values.items()))}}}")

print("\nfor infinite factors only the two bounds remain, and they can differ:")
for es in ((omega, omega), (omega + 1, omega)):
    lower, upper = product_bounds(es)
    names = ", ".join(format_ordinal(e) for e in es)
    print(f"  factors ({names}): between {format_ordinal(lower)} "
          f"and {format_ordinal(upper)}")
