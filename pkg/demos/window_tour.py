"""Walking the infinite arrays attached to one cubic core.

Everything here is symbolic in (t1, t2, t3): the rows of the companion orbit,
the k-by-k blocks that are literal matrix powers, the hook-shaped Schur
polynomials hiding in the columns, and the derivative-seeded orbit whose
rightmost column reads off the power sums.
"""

from isobaric import (
    CorePolynomial,
    companion_window,
    dense_det,
    different_matrix,
    different_window,
    gfp,
    glp,
    schur_hook,
)

core = CorePolynomial.generic(3)

win = companion_window(core, -2, 5)
print("Companion orbit rows -2..5 (k = 3):")
for n in range(-2, 6):
    print(f"  row {n:2}:  " + "   ".join(str(e) for e in win.row(n)))

print("\nThe block ending at row 3 is the cube of the companion matrix;")
print("its trace is the degree-3 power sum:", win.block_trace(3))
assert win.block_trace(3) == glp(3, 3)

print("\nHook Schur polynomials from the window, degree 4:")
for r in range(0, 3):
    print(f"  arm 4, leg {r}:  {schur_hook(core, 4, r)}")
assert schur_hook(core, 4, 0) == gfp(3, 4)

dwin = different_window(core, 0, 4)
print("\nDerivative-seeded orbit, rows 0..4, rightmost column:")
for n in range(0, 5):
    entry = dwin.rightmost(n)
    print(f"  row {n}:  {entry}")
    assert entry == glp(3, n)

d = different_matrix(core)
print("\nIts first three rows form the k = 3 different matrix; det =")
print("  ", dense_det(d), " (isobaric of degree k(k-1) = 6)")
