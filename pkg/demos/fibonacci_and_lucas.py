"""Fibonacci and Lucas numbers as two columns of the same infinite array.

The core x^2 - x - 1 drives both classical sequences.  Its companion-matrix
orbit carries Fibonacci numbers in the rightmost column, and the orbit seeded
from the derivative carries Lucas numbers in the same place.  Both extend
backward to negative indices.
"""

from isobaric import CorePolynomial, companion_window, different_window, glp_from_gfp

core = CorePolynomial.numeric((1, 1))

def show(values):
    return ", ".join(str(v) for v in values)


win = companion_window(core, -6, 10)
print("Fibonacci, rows -6..10 of the companion orbit (rightmost column):")
print("  ", show(win.rightmost(n) for n in range(-6, 11)))

dwin = different_window(core, 0, 10)
print("Lucas, rows 0..10 of the derivative-seeded orbit:")
print("  ", show(dwin.rightmost(n) for n in range(0, 11)))

# The trace of the k-by-k block ending at row m gives the same numbers.
print("Lucas again, as block traces:")
print("  ", show(win.block_trace(m) for m in range(0, 11)))

# And once more through the Newton identity, starting from Fibonacci alone.
print("Lucas a third time, recovered from the Fibonacci values:")
print("  ", show(glp_from_gfp(core, 10)))

# Negative rows invert the step: F(-n) = (-1)^(n+1) F(n).
print("F(-6)..F(-1) =", show(win.rightmost(n) for n in range(-6, 0)))
print("(signs alternate against F(6)..F(1))")
