"""A sequence whose convolution square is the Fibonacci numbers.

Convolution makes the degree-graded polynomial families into a group, so the
half power F^(1/2) exists as honest polynomials with rational coefficients.
Evaluating them at t = (1, 1) yields a rational sequence that convolves with
itself back to 1, 1, 2, 3, 5, 8, ...
"""

from fractions import Fraction

from isobaric import gfp, gfp_root_closed, gfp_root_sequence, convolve_sequences

N = 10

print("The half-power polynomials at k = 2:")
for n in range(0, 5):
    print(f"  degree {n}:  {gfp_root_closed(Fraction(1, 2), 2, n)}")

half = [gfp_root_closed(Fraction(1, 2), 2, n).evaluate((1, 1)) for n in range(N + 1)]
print("\nEvaluated at t = (1, 1):")
print("  ", ", ".join(str(v) for v in half))

square = [
    sum(half[i] * half[n - i] for i in range(n + 1)) for n in range(N + 1)
]
print("Convolved with itself:")
print("  ", ", ".join(str(v) for v in square))

fib = [gfp(2, n).evaluate((1, 1)) for n in range(N + 1)]
assert square == fib
print("which is the Fibonacci sequence again.")

# The same works symbolically for any fractional power: a third of a third
# of a third is the whole thing.
third = gfp_root_sequence(Fraction(1, 3), 2)
acc = convolve_sequences(convolve_sequences(third, third), third)
assert all(acc(n) == gfp(2, n) for n in range(8))
print("Cube root checked symbolically through degree 7.")
