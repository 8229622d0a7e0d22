"""Legendre and Jacobi symbols.

The Legendre symbol is computed two independent ways (Euler's criterion and
Gauss's lemma); the Jacobi symbol is computed both without factoring, via
quadratic reciprocity, and directly from the definition as a product of
Legendre symbols. Results are plain ints in {-1, 0, +1}.
"""

from __future__ import annotations

import math

from .core import factorize, is_prime
from .errors import EvenModulus, NotCoprime, NotOddPrime


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


def legendre_euler(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion: a^((p-1)/2) mod p."""
    _check_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def legendre_gauss_lemma(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Gauss's lemma.

    Counts how many of a, 2a, ..., ((p-1)/2)a have minimal residue in
    (-p/2, 0); the symbol is (-1) to that count.
    """
    _check_odd_prime(p)
    if math.gcd(a, p) != 1:
        raise NotCoprime(f"gcd({a}, {p}) != 1")
    a %= p
    half = (p - 1) // 2
    s = sum(1 for k in range(1, half + 1) if k * a % p > half)
    return -1 if s % 2 else 1


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n != 0, computed without factoring.

    Strips powers of two with the second supplement, swaps arguments with
    reciprocity and reduces; the sign of n is discarded since (a/n) = (a/|n|).
    """
    if n % 2 == 0:
        raise EvenModulus(f"modulus {n} must be odd and nonzero")
    n = abs(n)
    if n == 1:
        return 1
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def jacobi_by_definition(a: int, n: int) -> int:
    """Jacobi symbol as the product of legendre_euler over the factorization of n.

    Independent of jacobi(); used as its cross-check oracle.
    """
    if n % 2 == 0:
        raise EvenModulus(f"modulus {n} must be odd and nonzero")
    n = abs(n)
    if n == 1:
        return 1
    result = 1
    for p, e in factorize(n).factors:
        s = legendre_euler(a, p)
        if s == 0:
            return 0
        if s == -1 and e % 2 == 1:
            result = -result
    return result
