#!/usr/bin/env python3
"""Walkthrough: the ring Z(i) — division, gcd, primes, unique factorization."""

from quadres import (
    GaussianInt,
    associates,
    canonical_associate,
    div_rem,
    factor,
    gaussian_gcd,
    is_gaussian_prime,
    norm,
)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


banner("Division with a small remainder")
alpha, beta = GaussianInt(7, 2), GaussianInt(3, -1)
kappa, rho = div_rem(alpha, beta)
print(f"{alpha} = ({kappa}) * ({beta}) + {rho}")
print(f"2 * N(remainder) = {2 * norm(rho)} <= N(divisor) = {norm(beta)}")

banner("Euclid's algorithm survives the trip to Z(i)")
print("gcd(5, 2+i)      =", gaussian_gcd(GaussianInt(5, 0), GaussianInt(2, 1)))
print("gcd(3, 7)        =", gaussian_gcd(GaussianInt(3, 0), GaussianInt(7, 0)))
print("gcd(4+2i, 6-2i)  =", gaussian_gcd(GaussianInt(4, 2), GaussianInt(6, -2)))

banner("Which rational primes stay prime?")
for p in (2, 3, 5, 7, 11, 13):
    g = GaussianInt(p, 0)
    if is_gaussian_prime(g):
        print(f"{p}: inert (p = 3 mod 4)")
    else:
        f = factor(g)
        parts = " * ".join(f"({prime})^{e}" if e > 1 else f"({prime})" for prime, e in f.factors)
        unit = "" if f.unit == GaussianInt(1, 0) else f"{f.unit} * "
        print(f"{p}: splits as {unit}{parts}")

banner("Associates and the canonical choice")
g = GaussianInt(2, -1)
print(f"associates of {g}:", sorted(str(a) for a in associates(g)))
print("canonical form:", canonical_associate(g))

banner("Unique factorization at work")
for g in (GaussianInt(9, 0), GaussianInt(1, 7), GaussianInt(-30, 10)):
    f = factor(g)
    parts = " * ".join(f"({prime})^{e}" if e > 1 else f"({prime})" for prime, e in f.factors)
    print(f"{g} = {f.unit} * {parts}   (check: {f.value()})")
