"""Differential-form indexing and constants for Fermat curves x^N + y^N = 1.

Exponent pairs (a, b) with a, b, a+b all nonzero mod N label the eigenforms
x^(a-1) y^(b-N) dx of the curve; the holomorphic ones satisfy a + b < N after
reduction to {1, ..., N-1}.  This module provides the index arithmetic, the
real period constants beta(a/N, b/N)/N, the root-of-unity coefficient mu that
multiplies regulator pairings, and the Hodge-class test for wedge squares of
holomorphic forms on prime-degree curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .specialfn import DomainError, beta

__all__ = [
    "UnsupportedModulusError",
    "bracket",
    "is_in_IN",
    "genus",
    "FormIndex",
    "WedgeIndex",
    "period",
    "mu",
    "mu_half",
    "is_hodge",
    "is_prime",
]


class UnsupportedModulusError(DomainError):
    """Raised when an operation requires a prime modulus and N is not one."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def bracket(a: int, N: int) -> int:
    """Residue of a in the window {1, ..., N}; multiples of N map to N.

    This is the reduction used by index shifts such as <b - d>: it never
    returns 0, so a full-period shift lands on N rather than disappearing.
    """
    if N < 1:
        raise DomainError("modulus must be at least 1")
    return (a - 1) % N + 1


def is_in_IN(a: int, b: int, N: int) -> bool:
    """True when a, b and a+b are all nonzero mod N (an eigenform label)."""
    if N < 3:
        raise DomainError("modulus must be at least 3")
    return a % N != 0 and b % N != 0 and (a + b) % N != 0


def genus(N: int) -> int:
    """Genus (N-1)(N-2)/2 of the degree-N Fermat curve."""
    if N < 3:
        raise DomainError("modulus must be at least 3")
    return (N - 1) * (N - 2) // 2


@dataclass(frozen=True)
class FormIndex:
    """An eigenform label (a, b) mod N, stored reduced to {1, ..., N-1}.

    Construction reduces the entries and rejects pairs outside the index set
    (a, b or a+b divisible by N).
    """

    N: int
    a: int
    b: int

    def __post_init__(self):
        if self.N < 3:
            raise DomainError("modulus must be at least 3")
        if not is_in_IN(self.a, self.b, self.N):
            raise DomainError(
                f"({self.a}, {self.b}) is not an eigenform index mod {self.N}")
        object.__setattr__(self, "a", bracket(self.a, self.N))
        object.__setattr__(self, "b", bracket(self.b, self.N))

    @property
    def holomorphic(self) -> bool:
        return self.a + self.b < self.N


@dataclass(frozen=True)
class WedgeIndex:
    """An ordered pair of holomorphic form indices on the same curve."""

    first: FormIndex
    second: FormIndex

    def __post_init__(self):
        if self.first.N != self.second.N:
            raise DomainError("wedge factors must share the modulus")
        if not (self.first.holomorphic and self.second.holomorphic):
            raise DomainError("wedge factors must be holomorphic")

    @property
    def N(self) -> int:
        return self.first.N


def period(idx: FormIndex) -> float:
    """Real period constant beta(a/N, b/N) / N of the eigenform.

    Normalizing the form by this constant makes its integral over the
    distinguished path equal to 1.
    """
    return beta(idx.a / idx.N, idx.b / idx.N) / idx.N


def _cis(num: int, den: int) -> complex:
    """exp(2*pi*i * num/den) with the exponent reduced first."""
    r = num % den
    th = 2.0 * math.pi * r / den
    return complex(math.cos(th), math.sin(th))


def mu(a: int, b: int, N: int) -> complex:
    """Coefficient N^2 (1-z^a)(1-z^b)/(1-z^(a+b)) with z = exp(2*pi*i/N).

    Purely imaginary: mu = -2 N^2 sin(pi a/N) sin(pi b/N) / sin(pi (a+b)/N) * i
    for reduced a, b.  Requires (a, b) in the index set; in particular the
    denominator must not vanish (a + b != 0 mod N).
    """
    if N < 3:
        raise DomainError("modulus must be at least 3")
    if (a + b) % N == 0:
        raise DomainError("mu denominator vanishes when a + b = 0 mod N")
    if a % N == 0 or b % N == 0:
        raise DomainError("mu requires a and b nonzero mod N")
    num = (1.0 - _cis(a, N)) * (1.0 - _cis(b, N))
    den = 1.0 - _cis(a + b, N)
    return N * N * num / den


def mu_half(a: int, b: int, N: int) -> complex:
    """The mu coefficient built on the square root e^(pi*i/N) of mu's root.

    Same rational expression as :func:`mu` with z = exp(pi*i/N) (exponents
    reduced mod 2N), i.e. mu_half(a, b, N) = mu(a, b, 2N) / 4.  This is the
    normalization under which the closed form of ``im_reg_mixed`` matches
    direct projector integration; see that function.  Purely imaginary with
    Im mu_half = -2 N^2 sin(pi a/(2N)) sin(pi b/(2N)) / sin(pi (a+b)/(2N)).
    """
    if N < 3:
        raise DomainError("modulus must be at least 3")
    if (a + b) % N == 0:
        raise DomainError("mu_half denominator vanishes when a + b = 0 mod N")
    if a % N == 0 or b % N == 0:
        raise DomainError("mu_half requires a and b nonzero mod N")
    ar, br = a % N, b % N
    num = (1.0 - _cis(ar, 2 * N)) * (1.0 - _cis(br, 2 * N))
    den = 1.0 - _cis(ar + br, 2 * N)
    return N * N * num / den


def is_hodge(w: WedgeIndex) -> bool:
    """Whether the wedge of the two eigenforms spans a Hodge class.

    For prime N >= 5 the criterion is combinatorial: with (a, b) and (c, d)
    the two labels, the multisets {a, b, N-a-b} and {c, d, N-c-d} must agree.
    Composite or too-small moduli are refused: the multiset test is only
    equivalent to the Hodge condition in the prime case.
    """
    N = w.N
    if not is_prime(N) or N < 5:
        raise UnsupportedModulusError(
            f"Hodge classification implemented for prime N >= 5 only, got {N}")
    t1 = sorted((w.first.a, w.first.b, N - w.first.a - w.first.b))
    t2 = sorted((w.second.a, w.second.b, N - w.second.a - w.second.b))
    return t1 == t2
