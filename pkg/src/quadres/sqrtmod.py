"""Complete solution of X^2 = a (mod m) for gcd(a, m) = 1.

Base case modulo an odd prime, Hensel lifting to odd prime powers, the
separate ladder for 2, 4 and 2^e, and CRT assembly of the full solution set.
"""

from __future__ import annotations

import math

from .core import CrtComponent, ResidueSet, crt_combine, factorize, is_prime, mod_inverse
from .errors import EvenArgument, NotCoprime, NotOddPrime
from .symbols import legendre_euler


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


def _tonelli_shanks(a: int, p: int) -> int:
    # a is a known quadratic residue of the odd prime p
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def sqrt_mod_prime(a: int, p: int) -> ResidueSet:
    """Solutions of X^2 = a (mod p), p an odd prime, gcd(a, p) = 1.

    Empty when a is a non-residue, else exactly {b, p - b}. Uses the
    closed form a^((p+1)/4) for p = 3 (mod 4) and Tonelli-Shanks otherwise.
    """
    _check_odd_prime(p)
    if math.gcd(a, p) != 1:
        raise NotCoprime(f"gcd({a}, {p}) != 1")
    a %= p
    if pow(a, (p - 1) // 2, p) != 1:
        return ResidueSet(p, ())
    if p % 4 == 3:
        b = pow(a, (p + 1) // 4, p)
    else:
        b = _tonelli_shanks(a, p)
    return ResidueSet(p, tuple(sorted((b, p - b))))


def lift_odd_prime_power(a: int, p: int, e: int) -> ResidueSet:
    """Solutions of X^2 = a (mod p^e) by iterated Hensel lifting.

    Each root x mod p^k with x^2 = a + l*p^k lifts uniquely to
    x + y*p^k where 2x*y = -l (mod p); the count stays 0 or 2.
    """
    _check_odd_prime(p)
    if e < 1:
        raise ValueError("exponent must be at least 1")
    if math.gcd(a, p) != 1:
        raise NotCoprime(f"gcd({a}, {p}) != 1")
    pe = p**e
    a0 = a % pe
    base = sqrt_mod_prime(a0, p)
    if not base.residues:
        return ResidueSet(pe, ())
    roots = list(base.residues)
    mod_k = p
    for _ in range(e - 1):
        lifted = []
        for x in roots:
            l = (x * x - a0) // mod_k
            y = -l * mod_inverse(2 * x, p) % p
            lifted.append(x + y * mod_k)
        mod_k *= p
        roots = lifted
    return ResidueSet(pe, tuple(sorted(x % pe for x in roots)))


def sqrt_mod_2e(a: int, e: int) -> ResidueSet:
    """Solutions of X^2 = a (mod 2^e) for odd a.

    e = 1: always {1}. e = 2: {1, 3} iff a = 1 (mod 4). e >= 3: solvable
    iff a = 1 (mod 8), with the four roots {x, -x, x + 2^(e-1), -x + 2^(e-1)}
    built by lifting x across one power of two at a time.
    """
    if a % 2 == 0:
        raise EvenArgument(f"{a} must be odd")
    if e < 1:
        raise ValueError("exponent must be at least 1")
    m = 1 << e
    a0 = a % m
    if e == 1:
        return ResidueSet(2, (1,))
    if e == 2:
        return ResidueSet(4, (1, 3) if a0 % 4 == 1 else ())
    if a0 % 8 != 1:
        return ResidueSet(m, ())
    x = 1
    for k in range(3, e):
        l = (x * x - a0) // (1 << k)
        if l % 2:
            x += 1 << (k - 1)
    sols = {x % m, -x % m, (x + (m >> 1)) % m, (-x + (m >> 1)) % m}
    return ResidueSet(m, tuple(sorted(sols)))


def sqrt_mod(a: int, n: int) -> ResidueSet:
    """All solutions of X^2 = a (mod n), gcd(a, n) = 1, via factor + lift + CRT.

    When nonempty the residue count is 2^s, 2^(s+1) or 2^(s+2) according to
    the exponent of 2 in n being <= 1, = 2 or >= 3, with s the number of odd
    prime divisors.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    if n == 1:
        return ResidueSet(1, (0,))
    parts = []
    for p, e in factorize(n).factors:
        part = sqrt_mod_2e(a, e) if p == 2 else lift_odd_prime_power(a, p, e)
        if not part.residues:
            return ResidueSet(n, ())
        parts.append(CrtComponent(part.modulus, part.residues))
    return crt_combine(parts)


def is_quadratic_residue(a: int, n: int) -> bool:
    """Solvability of X^2 = a (mod n) without enumerating the solutions.

    Checks (a/p) = 1 at every odd prime divisor plus the 2-adic condition
    a = 1 mod 2, 4 or 8 depending on the power of 2 dividing n.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    if n == 1:
        return True
    for p, e in factorize(n).factors:
        if p == 2:
            if e == 2 and a % 4 != 1:
                return False
            if e >= 3 and a % 8 != 1:
                return False
        elif legendre_euler(a, p) != 1:
            return False
    return True
