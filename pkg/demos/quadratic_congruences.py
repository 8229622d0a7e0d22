#!/usr/bin/env python3
"""Walkthrough: solving 3X^2 + 7X - 1 = 0 modulo 15, 195 and 1235.

The same quadratic is solved against three moduli, showing the complete
pipeline: discriminant, square roots modulo 4|a|n by prime-power lifting
and CRT, the t = b (mod 2a) filter, and the streamlined path when
gcd(2a, n) = 1.
"""

from quadres import (
    QuadCongruence,
    brute_quadratic,
    solve_quadratic,
    solve_quadratic_coprime,
    sqrt_mod,
)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


banner("The discriminant and its square roots")
q = QuadCongruence(3, 7, -1, 15)
print("congruence: 3X^2 + 7X - 1 = 0 (mod 15)")
print("discriminant b^2 - 4ac =", q.discriminant)
print("working modulus 4|a|n  =", 4 * 3 * 15)
roots = sqrt_mod(61, 180)
print("T^2 = 61 (mod 180)     ->", list(roots))
kept = [t for t in roots if (t - 7) % 6 == 0]
print("roots with t = 7 (mod 6):", kept)
print("solutions mod 15        :", list(solve_quadratic(q)))

banner("Scaling up the modulus: 195 = 3 * 5 * 13")
q195 = QuadCongruence(3, 7, -1, 195)
print("solutions mod 195:", list(solve_quadratic(q195)))
print("brute force agrees:", list(brute_quadratic(3, 7, -1, 195)))

banner("Coprime shortcut: 1235 = 5 * 13 * 19, gcd(2a, n) = 1")
q1235 = QuadCongruence(3, 7, -1, 1235)
fast = solve_quadratic_coprime(q1235)
print("T^2 = 61 (mod 1235) ->", list(sqrt_mod(61, 1235)))
print("x = ((n+1)/2) * a^(-1) * (t - b) maps each root to a solution:")
print("solutions mod 1235:", list(fast))
print("general path agrees:", list(solve_quadratic(q1235)) == list(fast))

banner("A square root table with the full 2-power ladder")
print("X^2 = 61 (mod 2340), 2340 = 2^2 * 3^2 * 5 * 13")
print(list(sqrt_mod(61, 2340)))
print("16 residues: 2^(s+1) with s = 3 odd primes and four = 2^2 dividing n")
