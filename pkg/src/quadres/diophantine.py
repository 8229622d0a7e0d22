"""Parametric generators for X^2 + Y^2 = Z^2, = c*Z^2, = Z^l and
X^2 + Y^2 + Z^2 = W^2, plus the alternating binomial polynomials governing
the real and imaginary parts of odd powers of a + ib.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadParameters
from .gaussian import GaussianInt
from .two_squares import is_sum_of_two_squares


@dataclass(frozen=True)
class PythTriple:
    """Primitive triple s^2 + t^2 = r^2 with s = 2mn, t = m^2 - n^2, r = m^2 + n^2."""

    s: int
    t: int
    r: int
    m: int
    n: int


def pyth_triple(m: int, n: int) -> PythTriple:
    """The primitive Pythagorean triple generated by m > n > 0, coprime,
    of opposite parity."""
    if not (m > n > 0) or math.gcd(m, n) != 1 or (m - n) % 2 == 0:
        raise BadParameters(
            f"need m > n > 0 coprime of opposite parity, got m={m}, n={n}"
        )
    return PythTriple(2 * m * n, m * m - n * n, m * m + n * n, m, n)


def enumerate_primitive_triples(r_max: int) -> list[PythTriple]:
    """All primitive triples with hypotenuse at most r_max, sorted by r."""
    if r_max < 1:
        raise ValueError("r_max must be positive")
    triples = []
    m = 2
    while m * m + 1 <= r_max:
        for n in range(1, m):
            if (m - n) % 2 == 1 and math.gcd(m, n) == 1 and m * m + n * n <= r_max:
                triples.append(pyth_triple(m, n))
        m += 1
    triples.sort(key=lambda tr: (tr.r, tr.t))
    return triples


def cz2_solvable(c: int) -> bool:
    """X^2 + Y^2 = c*Z^2 has a nontrivial solution iff c is a sum of two squares."""
    if c < 1:
        raise ValueError("c must be positive")
    return is_sum_of_two_squares(c)


@dataclass(frozen=True)
class CZ2Solution:
    """A solution of X^2 + Y^2 = c*Z^2 built from c = d3^2 * 2^g * (u^2 + v^2)
    and a primitive Pythagorean triple."""

    x: int
    y: int
    z: int
    c: int
    d3: int
    g: int
    u: int
    v: int


def cz2_solution(
    c: int, d3: int, u: int, v: int, g: int, triple: PythTriple
) -> CZ2Solution:
    """Rotate the triple by the representation (u, v) of c / d3^2.

    v = 0 is allowed (with u = 1) so that c = 1 and c = 2 reproduce the
    plain Pythagorean case.
    """
    if c < 1 or d3 < 1 or c % (d3 * d3) != 0:
        raise BadParameters(f"d3^2 = {d3 * d3} must divide c = {c}")
    if g not in (0, 1):
        raise BadParameters("g must be 0 or 1")
    if not (u > v >= 0) or math.gcd(u, v) != 1:
        raise BadParameters(f"need u > v >= 0 coprime, got u={u}, v={v}")
    if c != d3 * d3 * 2**g * (u * u + v * v):
        raise BadParameters(f"c = {c} != d3^2 * 2^{g} * ({u}^2 + {v}^2)")
    if math.gcd(triple.r, d3) != 1:
        raise BadParameters(f"gcd(r={triple.r}, d3={d3}) != 1")
    s, t = triple.s, triple.t
    if g == 0:
        x = d3 * (t * u - s * v)
        y = d3 * (s * u + t * v)
    else:
        x = d3 * ((s + t) * u - (s - t) * v)
        y = d3 * ((s - t) * u + (s + t) * v)
    return CZ2Solution(x, y, triple.r, c, d3, g, u, v)


@dataclass(frozen=True)
class ZlSolution:
    """A primitive solution of X^2 + Y^2 = Z^l with x + iy = (a + ib)^l."""

    x: int
    y: int
    z: int
    l: int
    a: int
    b: int


def zl_solution(l: int, a: int, b: int) -> ZlSolution:
    """x = Re((a+ib)^l), y = Im((a+ib)^l), z = a^2 + b^2 for a > b > 0
    coprime of opposite parity."""
    if l < 2:
        raise BadParameters("exponent must be at least 2")
    if not (a > b > 0) or math.gcd(a, b) != 1 or (a - b) % 2 == 0:
        raise BadParameters(
            f"need a > b > 0 coprime of opposite parity, got a={a}, b={b}"
        )
    w = GaussianInt(a, b) ** l
    return ZlSolution(w.re, w.im, a * a + b * b, l, a, b)


def vn_poly(n: int, x: int, y: int) -> int:
    """The alternating binomial sum sum_j (-1)^j C(2n+1, 2j) x^(2(n-j)) y^(2j).

    a * vn_poly(n, a, b) is the real part of (a + ib)^(2n+1).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(
        (-1) ** j * math.comb(2 * n + 1, 2 * j) * x ** (2 * (n - j)) * y ** (2 * j)
        for j in range(n + 1)
    )


def _rn_poly(n: int, x: int, y: int) -> int:
    # companion over odd j: (x+y)^(2n+1) + (x-y)^(2n+1)
    #                       = 2x*vn_poly(n,x,y) + 4xy*_rn_poly(n,x,y)
    return sum(
        math.comb(2 * n + 1, 2 * j) * x ** (2 * (n - j)) * y ** (2 * j - 1)
        for j in range(1, n + 1, 2)
    )


@dataclass(frozen=True)
class PythQuadruple:
    """A solution of X^2 + Y^2 + Z^2 = W^2 with its generating parameters.

    The parameters produce (x, y, z) up to permutation and sign; the
    primitive flag records whether gcd(x, y, z) = 1, which the parameter
    conditions alone do not guarantee.
    """

    x: int
    y: int
    z: int
    w: int
    m: int
    n: int
    u: int
    v: int
    primitive: bool


def pyth_quadruple(m: int, n: int, u: int, v: int) -> PythQuadruple:
    """The quadruple x = 2(mn - uv), y = m^2 - n^2 - u^2 + v^2,
    z = 2(mu + nv), w = m^2 + n^2 + u^2 + v^2 for gcd(m, n, u, v) = 1."""
    if math.gcd(math.gcd(m, n), math.gcd(u, v)) != 1:
        raise BadParameters(f"gcd({m}, {n}, {u}, {v}) != 1")
    x = 2 * (m * n - u * v)
    y = m * m - n * n - u * u + v * v
    z = 2 * (m * u + n * v)
    w = m * m + n * n + u * u + v * v
    primitive = math.gcd(math.gcd(x, y), z) == 1
    return PythQuadruple(x, y, z, w, m, n, u, v, primitive)


def enumerate_quadruples(w_max: int) -> list[PythQuadruple]:
    """All primitive quadruples with 0 < w <= w_max and x, y, z all nonzero,
    canonicalized so that 0 < x <= y <= z, deduplicated, sorted by (w, z, y, x).

    A zero coordinate degenerates to a plain Pythagorean triple and is left
    to the triple enumerator. Parameters are scanned over
    |m|, |n|, |u|, |v| <= isqrt(w_max), which is exhaustive because each
    squared parameter is at most w.
    """
    if w_max < 1:
        raise ValueError("w_max must be positive")
    bound = math.isqrt(w_max)
    span = range(-bound, bound + 1)
    seen: dict[tuple[int, int, int, int], PythQuadruple] = {}
    for m in span:
        mm = m * m
        for n in span:
            mn = mm + n * n
            if mn > w_max:
                continue
            gmn = math.gcd(m, n)
            for u in span:
                mnu = mn + u * u
                if mnu > w_max:
                    continue
                for v in span:
                    if mnu + v * v > w_max:
                        continue
                    if math.gcd(gmn, math.gcd(u, v)) != 1:
                        continue
                    quad = pyth_quadruple(m, n, u, v)
                    if not quad.primitive:
                        continue
                    xs = sorted((abs(quad.x), abs(quad.y), abs(quad.z)))
                    if xs[0] == 0:
                        continue
                    key = (xs[0], xs[1], xs[2], quad.w)
                    if key not in seen:
                        seen[key] = PythQuadruple(
                            xs[0], xs[1], xs[2], quad.w, m, n, u, v, True
                        )
    return sorted(seen.values(), key=lambda q: (q.w, q.z, q.y, q.x))
