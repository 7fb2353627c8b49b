"""One matrix shape, a whole family of polynomials.

A lower Hessenberg matrix with core coefficients on its falling diagonals and
a weighted last row evaluates, through one short recursion, to the weighted
isobaric polynomial of that degree.  Flipping the superdiagonal sign swaps
determinant for permanent without changing the value.
"""

from isobaric import WeightVector, build_minus, build_plus, hessenberg_value, wip_closed

for label, omega in [
    ("all-ones (Fibonacci side)", WeightVector.ones()),
    ("identity (Lucas side)", WeightVector.naturals()),
    ("custom (3, 1, 4, 1, 5)", WeightVector.from_values((3, 1, 4, 1, 5))),
]:
    print(f"== weights: {label}")
    minus = build_minus(omega, 4, 4)
    print(minus.text_grid())
    det_value = hessenberg_value(minus)
    perm_value = hessenberg_value(build_plus(omega, 4, 4))
    closed = wip_closed(omega, 4, 4)
    print("det  =", det_value)
    print("perm =", perm_value)
    print("closed formula =", closed)
    assert det_value == perm_value == closed
    print()

print("Same recursion, numeric: the minus matrix at t = (1, 1) gives")
fib = build_minus(WeightVector.ones(), 2, 9)
print("degree 9, k = 2, value(1, 1) =", hessenberg_value(fib).evaluate((1, 1)), "(a Fibonacci number)")
