"""Multiplicative arithmetic functions at one prime, and their Dirichlet roots.

A multiplicative function restricted to powers of a fixed prime p is just the
value list (f(1), f(p), f(p^2), ...), and Dirichlet convolution restricts to
the Cauchy product of those lists.  Writing the list as a Fibonacci-side
sequence of some recovered core turns fractional Dirichlet powers into plain
polynomial evaluation: the degree-n value of f^q is the q-th root polynomial
evaluated at the recovered core coefficients.  All values are exact
rationals, so f^(1/m) convolved with itself m times returns f on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .polynomials import RationalLike
from .roots import gfp_root_closed

__all__ = [
    "LocalMF",
    "dirichlet_convolve_local",
    "recover_core",
    "local_power",
    "known_function",
    "root_verify",
    "KNOWN_FUNCTIONS",
]


@dataclass(frozen=True)
class LocalMF:
    """Values (v0, v1, ..., vN) of a multiplicative function at p^0..p^N.

    v0 = f(1) must be 1; that is what makes the function a unit for Dirichlet
    convolution purposes.  The label is cosmetic and ignored by comparisons.
    """

    values: tuple[Fraction, ...]
    label: str = field(default="f", compare=False)

    def __post_init__(self) -> None:
        vals = tuple(Fraction(v) for v in self.values)
        if not vals:
            raise ValueError("need at least the value at 1")
        if vals[0] != 1:
            raise ValueError(f"f(1) must be 1, got {vals[0]}")
        object.__setattr__(self, "values", vals)

    @property
    def truncation(self) -> int:
        """N: the highest stored prime-power exponent."""
        return len(self.values) - 1

    def value(self, n: int) -> Fraction:
        """f(p^n) for 0 <= n <= N."""
        return self.values[n]

    def format_values(self) -> str:
        return ",".join(str(v) for v in self.values)

    @classmethod
    def parse(cls, text: str, label: str = "f") -> "LocalMF":
        return cls(tuple(Fraction(part.strip()) for part in text.split(",")), label)


def dirichlet_convolve_local(a: LocalMF, b: LocalMF) -> LocalMF:
    """(a * b)(p^n) = sum_{i=0..n} a(p^i) b(p^(n-i)), to the common truncation."""
    if a.truncation != b.truncation:
        raise ValueError(f"truncation mismatch: {a.truncation} vs {b.truncation}")
    vals = tuple(
        sum((a.value(i) * b.value(n - i) for i in range(n + 1)), Fraction(0))
        for n in range(a.truncation + 1)
    )
    return LocalMF(vals, f"{a.label}*{b.label}")


def recover_core(f: LocalMF) -> tuple[Fraction, ...]:
    """Core coefficients (t1, ..., tN) whose Fibonacci-side values match f.

    Unwinds v_n = sum_{i=1..n} t_i v_{n-i}, so t_n = v_n - sum_{i<n} t_i v_{n-i}.
    Always solvable because v0 = 1; the core is exact and unique.
    """
    ts: list[Fraction] = []
    for n in range(1, f.truncation + 1):
        t = f.value(n)
        for i in range(1, n):
            t -= ts[i - 1] * f.value(n - i)
        ts.append(t)
    return tuple(ts)


def local_power(f: LocalMF, q: RationalLike) -> LocalMF:
    """The q-th Dirichlet power of f, computed through the root polynomials.

    Recover the core of f, then evaluate the degree-n q-th root polynomial
    at it for each n.  q = 1 reproduces f, q = -1 its Dirichlet inverse,
    q = 1/m an m-th root.
    """
    q = Fraction(q)
    N = f.truncation
    vals = [Fraction(1)]
    if N >= 1:
        ts = recover_core(f)
        for n in range(1, N + 1):
            vals.append(gfp_root_closed(q, N, n).evaluate(ts))
    return LocalMF(tuple(vals), f"{f.label}^{q}")


def _phi_values(p: int, N: int) -> tuple[Fraction, ...]:
    # phi(p^n) = p^n - p^(n-1) for n >= 1
    return (Fraction(1),) + tuple(Fraction(p**n - p ** (n - 1)) for n in range(1, N + 1))


def _sigma_values(p: int, N: int) -> tuple[Fraction, ...]:
    # sigma(p^n) = 1 + p + ... + p^n
    return tuple(Fraction(sum(p**i for i in range(n + 1))) for n in range(N + 1))


KNOWN_FUNCTIONS = ("zeta", "epsilon", "mobius", "phi", "sigma", "tau", "id")


def known_function(name: str, p: int, N: int) -> LocalMF:
    """Classical fixtures at prime p, truncated at p^N.

    zeta (all ones), epsilon (Dirichlet unit), mobius, phi, sigma, tau
    (divisor count, n+1 at p^n), and id (p^n).  p enters only where the
    values depend on it, but is validated everywhere for uniformity.
    """
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"p must be an integer >= 2, got {p!r}")
    if N < 0:
        raise ValueError("truncation N must be >= 0")
    if name == "zeta":
        vals: tuple[Fraction, ...] = (Fraction(1),) * (N + 1)
    elif name == "epsilon":
        vals = (Fraction(1),) + (Fraction(0),) * N
    elif name == "mobius":
        vals = ((Fraction(1),) + (Fraction(-1),) + (Fraction(0),) * (N - 1)) if N >= 1 else (Fraction(1),)
    elif name == "phi":
        vals = _phi_values(p, N)
    elif name == "sigma":
        vals = _sigma_values(p, N)
    elif name == "tau":
        vals = tuple(Fraction(n + 1) for n in range(N + 1))
    elif name == "id":
        vals = tuple(Fraction(p**n) for n in range(N + 1))
    else:
        raise ValueError(f"unknown function {name!r}; pick one of {', '.join(KNOWN_FUNCTIONS)}")
    return LocalMF(vals, name)


def root_verify(f: LocalMF, m: int) -> bool:
    """Convolve the m-th root of f with itself m times and compare to f.

    The reconvolution is done with the plain Cauchy product, independently
    of the polynomial machinery that produced the root.
    """
    if m < 1:
        raise ValueError("root index m must be >= 1")
    root = local_power(f, Fraction(1, m))
    acc = root
    for _ in range(m - 1):
        acc = dirichlet_convolve_local(acc, root)
    return acc == f
