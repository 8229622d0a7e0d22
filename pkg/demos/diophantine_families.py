#!/usr/bin/env python3
"""Walkthrough: parametric families solving X^2 + Y^2 = Z^2, c*Z^2, Z^l and
X^2 + Y^2 + Z^2 = W^2.
"""

from quadres import (
    cz2_solution,
    cz2_solvable,
    enumerate_primitive_triples,
    enumerate_quadruples,
    pyth_quadruple,
    pyth_triple,
    vn_poly,
    zl_solution,
)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


banner("Primitive Pythagorean triples with hypotenuse <= 50")
for t in enumerate_primitive_triples(50):
    print(f"(m, n) = ({t.m}, {t.n}) -> {t.s}^2 + {t.t}^2 = {t.r}^2")

banner("X^2 + Y^2 = c*Z^2: rotating a triple by a representation of c")
triple = pyth_triple(2, 1)
for c, u, v, g in ((1, 1, 0, 0), (2, 1, 0, 1), (5, 2, 1, 0), (10, 2, 1, 1)):
    print(f"c = {c:2} solvable: {cz2_solvable(c)}", end="  ")
    sol = cz2_solution(c, 1, u, v, g, triple)
    print(f"-> {sol.x}^2 + {sol.y}^2 = {c} * {sol.z}^2"
          f"  ({sol.x**2 + sol.y**2} = {c * sol.z**2})")
print("c = 3 solvable:", cz2_solvable(3), " (a prime 3 mod 4 divides it oddly)")

banner("X^2 + Y^2 = Z^l: powers of a Gaussian integer")
for l in range(2, 8):
    sol = zl_solution(l, 2, 1)
    print(f"l = {l}: ({sol.x})^2 + ({sol.y})^2 = {sol.z}^{l} = {sol.z**l}")

banner("The polynomial behind the real part of odd powers")
for n, (a, b) in ((1, (2, 1)), (2, (2, 1)), (2, (3, 2)), (3, (4, 1))):
    l = 2 * n + 1
    sol = zl_solution(l, a, b)
    print(f"l = {l}, (a, b) = ({a}, {b}): x = a * V = {a} * {vn_poly(n, a, b)}"
          f" = {sol.x}")

banner("Pythagorean quadruples")
q = pyth_quadruple(1, 1, 1, 0)
print(f"(m,n,u,v) = (1,1,1,0) -> {q.x}^2 + {q.y}^2 + {q.z}^2 = {q.w}^2,"
      f" primitive: {q.primitive}")
q = pyth_quadruple(2, 1, 1, 0)
print(f"(m,n,u,v) = (2,1,1,0) -> {q.x}^2 + {q.y}^2 + {q.z}^2 = {q.w}^2,"
      f" primitive: {q.primitive}")
print("all primitive quadruples with w <= 15:")
for q in enumerate_quadruples(15):
    print(f"  {q.x}^2 + {q.y}^2 + {q.z}^2 = {q.w}^2")
