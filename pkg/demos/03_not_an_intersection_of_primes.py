"""A squared ideal on the single loop is not an intersection of primes.

The algebra of the one-loop graph is the Laurent polynomial ring, so every
ideal statement can be replayed against direct polynomial arithmetic: that
replay is the package's oracle for the whole non-graded calculus.

Run with: python demos/03_not_an_intersection_of_primes.py
"""

import random

from leavitt import (
    LaurentPoly,
    QQ,
    bottom_pair,
    enumerate_pairs,
    exitless_cycles,
    intersection_of_primes,
    make,
    parse_poly,
    prime_intersection_counterexample,
)
from leavitt.catalog import single_loop
from leavitt.oracles import laurent_model

L1 = single_loop()
lat = enumerate_pairs(L1)
loop = exitless_cycles(L1)[0]
p = parse_poly(QQ, "1+x")

print("the one-loop algebra is K[x, 1/x]; the ideal <p(c)> matches <p(x)>")
square = make(L1, bottom_pair(), {loop: p * p})
report = intersection_of_primes(L1, lat, square)
print(f"ideal: {square}")
print(f"primes containing it: {[str(q) for q in report.primes.nongraded]}")
print(f"their intersection:   {report.result}")
print(f"equals the input:     {report.equals_input}")
print()
print("so <(1+x)^2> is strictly below every prime above it; squares of")
print("maximal ideals in a principal ideal domain are never intersections")
print("of primes, and the constructor finds the same witness:")
print("  ", prime_intersection_counterexample(L1, lat))

print()
print("replaying every ideal operation against direct Laurent arithmetic:")
rng = random.Random(1001)
polys = []
while len(polys) < 50:
    f = LaurentPoly.from_coeffs(QQ, [rng.randint(-3, 3) for _ in range(5)])
    if not f.is_zero and f.canon().degree >= 1:
        polys.append(f)
model = laurent_model(L1, polys)
print(f"  {model.checked} checks, {len(model.mismatches)} mismatches")
assert model.ok
