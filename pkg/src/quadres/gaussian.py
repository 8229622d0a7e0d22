"""Arithmetic in the ring Z(i) of Gaussian integers.

Covers the norm, units and associates, division with remainder, the
Euclidean gcd, the classification of Gaussian primes and unique
factorization into a unit times canonical prime powers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import factorize, is_prime
from .errors import BothZero, ZeroArgument, ZeroOrUnit


@dataclass(frozen=True)
class GaussianInt:
    """An element re + im*i of Z(i)."""

    re: int = 0
    im: int = 0

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __pow__(self, e: int) -> "GaussianInt":
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result = GaussianInt(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def __str__(self) -> str:
        return format_gaussian(self)


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, GaussianInt(-1, 0), GaussianInt(0, -1))


def norm(xi: GaussianInt) -> int:
    """N(re + im*i) = re^2 + im^2; multiplicative, zero only at zero."""
    return xi.re * xi.re + xi.im * xi.im


def is_unit(xi: GaussianInt) -> bool:
    """True exactly for 1, -1, i, -i (the elements of norm 1)."""
    return norm(xi) == 1


def associates(xi: GaussianInt) -> set[GaussianInt]:
    """The four unit multiples {xi, i*xi, -xi, -i*xi} of a nonzero element."""
    if xi == ZERO:
        raise ZeroArgument("zero has no associates")
    return {xi * u for u in UNITS}


def canonical_associate(xi: GaussianInt) -> GaussianInt:
    """The unique associate with re > 0 and im >= 0.

    Inert rational primes map to themselves; the ramified prime above 2
    maps to 1 + i. This pins factorizations down to literal equality.
    """
    if xi == ZERO:
        raise ZeroArgument("zero has no associates")
    for _ in range(4):
        if xi.re > 0 and xi.im >= 0:
            return xi
        xi = xi * I
    raise AssertionError("unreachable")


def _round_half_down(num: int, den: int) -> int:
    # nearest integer to num/den with ties toward the floor; den > 0
    q, r = divmod(num, den)
    return q if 2 * r <= den else q + 1


def div_rem(alpha: GaussianInt, beta: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Division with remainder: alpha = kappa*beta + rho, N(rho) <= N(beta)/2.

    kappa is alpha/beta with both coordinates rounded to the nearest
    integer, ties toward the floor, which makes the pair deterministic.
    """
    if beta == ZERO:
        raise ZeroDivisionError("division by zero in Z(i)")
    d = norm(beta)
    num = alpha * beta.conjugate()
    kappa = GaussianInt(_round_half_down(num.re, d), _round_half_down(num.im, d))
    return kappa, alpha - kappa * beta


def gcd(alpha: GaussianInt, beta: GaussianInt) -> GaussianInt:
    """A greatest common divisor by the Euclidean algorithm, in canonical form."""
    if alpha == ZERO and beta == ZERO:
        raise BothZero("gcd(0, 0) is undefined")
    while beta != ZERO:
        alpha, beta = beta, div_rem(alpha, beta)[1]
    return canonical_associate(alpha)


def is_gaussian_prime(xi: GaussianInt) -> bool:
    """Primes of Z(i): elements of prime norm, and associates of rational
    primes q = 3 (mod 4)."""
    if is_prime(norm(xi)):
        return True
    if xi.re == 0 or xi.im == 0:
        q = abs(xi.re) + abs(xi.im)
        return q % 4 == 3 and is_prime(q)
    return False


def _exact_div(alpha: GaussianInt, beta: GaussianInt) -> GaussianInt | None:
    d = norm(beta)
    num = alpha * beta.conjugate()
    if num.re % d != 0 or num.im % d != 0:
        return None
    return GaussianInt(num.re // d, num.im // d)


@dataclass(frozen=True)
class GaussianFactorization:
    """unit * prod(prime**exponent) with canonical primes sorted by (norm, re, im)."""

    unit: GaussianInt
    factors: tuple[tuple[GaussianInt, int], ...]

    def value(self) -> GaussianInt:
        out = self.unit
        for prime, e in self.factors:
            out = out * prime**e
        return out


def factor(xi: GaussianInt) -> GaussianFactorization:
    """Unique factorization of xi != 0, not a unit, into Gaussian primes.

    Factors N(xi) over Z, splits each rational prime p = 1 (mod 4) as a sum
    of two squares, keeps q = 3 (mod 4) inert and uses 1 + i above 2, then
    assigns exponents by exact division of xi.
    """
    if xi == ZERO or is_unit(xi):
        raise ZeroOrUnit(f"{xi} has no prime factorization")
    from .two_squares import represent_prime  # deferred; two_squares imports this module

    remaining = xi
    found = []
    for p, _ in factorize(norm(xi)).factors:
        if p == 2:
            candidates = [GaussianInt(1, 1)]
        elif p % 4 == 3:
            candidates = [GaussianInt(p, 0)]
        else:
            rep = represent_prime(p)
            candidates = [
                canonical_associate(GaussianInt(rep.a, rep.b)),
                canonical_associate(GaussianInt(rep.a, -rep.b)),
            ]
        for prime in candidates:
            e = 0
            while True:
                quotient = _exact_div(remaining, prime)
                if quotient is None:
                    break
                remaining = quotient
                e += 1
            if e:
                found.append((prime, e))
    assert is_unit(remaining)
    found.sort(key=lambda fe: (norm(fe[0]), fe[0].re, fe[0].im))
    return GaussianFactorization(remaining, tuple(found))


def parse_gaussian(text: str) -> GaussianInt:
    """Parse 'a+bi' / 'a-bi' / 'bi' / 'a', with 'i' and '-i' for b = +-1."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian integer literal")
    try:
        if not s.endswith("i"):
            return GaussianInt(int(s), 0)
        body = s[:-1]
        split = 0
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-":
                split = pos
                break
        re_part, im_part = body[:split], body[split:]
        if im_part in ("", "+"):
            im = 1
        elif im_part == "-":
            im = -1
        else:
            im = int(im_part)
        return GaussianInt(int(re_part) if re_part else 0, im)
    except ValueError:
        raise ValueError(f"invalid Gaussian integer literal: {text!r}") from None


def format_gaussian(xi: GaussianInt) -> str:
    """Format as 'a+bi' / 'a-bi' with no spaces; pure values shorten to 'a' or 'bi'."""
    if xi.im == 0:
        return str(xi.re)
    if xi.im == 1:
        im_str = "i"
    elif xi.im == -1:
        im_str = "-i"
    else:
        im_str = f"{xi.im}i"
    if xi.re == 0:
        return im_str
    sign = "+" if xi.im > 0 and not im_str.startswith("-") else ""
    return f"{xi.re}{sign}{im_str}"
