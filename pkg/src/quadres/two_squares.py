"""Representations n = A^2 + B^2: decidability, construction, counting, enumeration.

The constructive heart is a pigeonhole search turning any root of
X^2 = -1 (mod n) into the primitive representation it classifies; counting
and enumeration run through the Gaussian factorization of n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .core import factorize, is_prime
from .errors import NotARoot, NotPrime, WrongResidueClass
from .gaussian import UNITS, GaussianInt
from .sqrtmod import sqrt_mod_prime


@dataclass(frozen=True)
class TwoSquareRep:
    """An ordered signed pair with a^2 + b^2 = n; primitive means gcd(a, b) = 1."""

    a: int
    b: int
    primitive: bool


def is_sum_of_two_squares(n: int) -> bool:
    """True iff every prime p = 3 (mod 4) divides n to an even power."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return True
    return all(e % 2 == 0 for p, e in factorize(n).factors if p % 4 == 3)


def has_primitive_representation(n: int) -> bool:
    """True iff n or n/2 is odd and divisible only by primes p = 1 (mod 4)."""
    if n < 1:
        raise ValueError("n must be positive")
    m = n if n % 2 == 1 else n // 2
    if m % 2 == 0:
        return False
    return all(p % 4 == 1 for p, _ in factorize(m).factors) if m > 1 else True


def rep_from_root(k: int, n: int) -> TwoSquareRep:
    """The unique (x, y) with x, y > 0, gcd(x, y) = 1, x^2 + y^2 = n and
    k*x = y (mod n), given a root k of X^2 = -1 (mod n).

    Pigeonhole over the (isqrt(n)+1)^2 grid: two pairs collide on
    k*x - y mod n, and their difference, sign-normalized (swapping the
    coordinates when the signs disagree), is the representation.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if (k * k + 1) % n != 0:
        raise NotARoot(f"{k}^2 != -1 (mod {n})")
    limit = math.isqrt(n)
    seen: dict[int, tuple[int, int]] = {}
    x0 = y0 = 0
    for x in range(limit + 1):
        kx = k * x % n
        hit = None
        for y in range(limit + 1):
            key = (kx - y) % n
            if key in seen:
                hit = seen[key]
                x0, y0 = x - hit[0], y - hit[1]
                break
            seen[key] = (x, y)
        if hit is not None:
            break
    if (x0 > 0) == (y0 > 0):
        a, b = abs(x0), abs(y0)
    else:
        a, b = abs(y0), abs(x0)
    return TwoSquareRep(a, b, True)


@lru_cache(maxsize=1 << 12)
def represent_prime(p: int) -> TwoSquareRep:
    """The essentially unique p = a^2 + b^2 with a >= b > 0, for p = 2 or
    p = 1 (mod 4)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        return TwoSquareRep(1, 1, True)
    if p % 4 == 3:
        raise WrongResidueClass(f"{p} = 3 (mod 4) is not a sum of two squares")
    k = sqrt_mod_prime(p - 1, p).residues[0]
    rep = rep_from_root(k, p)
    return TwoSquareRep(max(rep.a, rep.b), min(rep.a, rep.b), True)


def _split_factorization(n: int):
    # (exponent of 2, inert part prod q^(f/2) or None, [(pi, pibar, e), ...])
    g = 0
    inert = 1
    split = []
    for p, e in factorize(n).factors:
        if p == 2:
            g = e
        elif p % 4 == 3:
            if e % 2 == 1:
                return g, None, split
            inert *= p ** (e // 2)
        else:
            rep = represent_prime(p)
            split.append((GaussianInt(rep.a, rep.b), GaussianInt(rep.a, -rep.b), e))
    return g, inert, split


def count_representations(n: int) -> int:
    """r(n): ordered signed pairs with A^2 + B^2 = n, as 4*(d1 - d3) over
    the divisors of n congruent to 1 and 3 mod 4; r(0) = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    divisors = [1]
    for p, e in factorize(n).factors:
        divisors = [d * p**k for d in divisors for k in range(e + 1)]
    d1 = sum(1 for d in divisors if d % 4 == 1)
    d3 = sum(1 for d in divisors if d % 4 == 3)
    return 4 * (d1 - d3)


def count_representations_by_factorization(n: int) -> int:
    """r(n) from prime exponents: 4 * prod(1 + e) over p = 1 (mod 4), zero
    when any q = 3 (mod 4) has odd exponent. Cross-check for count_representations."""
    if n < 1:
        raise ValueError("n must be positive")
    r = 4
    for p, e in factorize(n).factors:
        if p % 4 == 1:
            r *= e + 1
        elif p % 4 == 3 and e % 2 == 1:
            return 0
    return r


def all_representations(n: int) -> list[TwoSquareRep]:
    """Every ordered signed (A, B) with A^2 + B^2 = n, sorted lexicographically.

    Enumerates unit choices and exponent splits e' + e'' = e over the
    Gaussian factorization of n; the list length equals r(n).
    """
    if n < 1:
        raise ValueError("n must be positive")
    g, inert, split = _split_factorization(n)
    if inert is None:
        return []
    values = [GaussianInt(inert, 0) * GaussianInt(1, -1) ** g]
    for pi, pibar, e in split:
        values = [v * pi**e1 * pibar ** (e - e1) for v in values for e1 in range(e + 1)]
    pairs = {(w.re, w.im) for v in values for u in UNITS for w in (v * u,)}
    return [TwoSquareRep(a, b, math.gcd(a, b) == 1) for a, b in sorted(pairs)]


def primitive_representations(n: int) -> list[TwoSquareRep]:
    """The primitive representations with x > 0 and y > 0, sorted.

    Exponents go entirely to one conjugate per split prime, so there are
    2^R of them (R = number of distinct primes p = 1 (mod 4) dividing n),
    counted as ordered positive pairs.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not has_primitive_representation(n):
        return []
    g, _, split = _split_factorization(n)
    values = [GaussianInt(1, -1) ** g]
    for pi, pibar, e in split:
        values = [v * w for v in values for w in (pi**e, pibar**e)]
    pairs = set()
    for v in values:
        for u in UNITS:
            w = v * u
            if w.re > 0 and w.im > 0:
                pairs.add((w.re, w.im))
    return [TwoSquareRep(a, b, math.gcd(a, b) == 1) for a, b in sorted(pairs)]
