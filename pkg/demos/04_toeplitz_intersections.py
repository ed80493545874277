"""The Toeplitz graph: a non-graded ideal that IS an intersection of primes.

Run with: python demos/04_toeplitz_intersections.py
"""

from leavitt import (
    AdmissiblePair,
    QQ,
    enumerate_pairs,
    graded_part,
    intersect,
    irredundant_prime_intersection,
    is_maximal,
    is_prime,
    limit_power,
    make,
    parse_poly,
    power,
    quotient,
    uniqueness_check,
)
from leavitt.catalog import toeplitz
from leavitt.graphs import exitless_cycles

T1 = toeplitz()
lat = enumerate_pairs(T1)
w_pair = AdmissiblePair.of({"w"}, ())

print("T1 is the loop at v with an exit edge v -> w; the quotient by ({w},{})")
q = quotient(T1, w_pair)
loop = exitless_cycles(q.graph)[0]
print("is the bare loop, so non-graded ideals live over that cycle:",
      dict(q.graph.bundles))

A = make(T1, w_pair, {loop: parse_poly(QQ, "1+x")})
B = make(T1, w_pair, {loop: parse_poly(QQ, "1+x^2")})
I = intersect(T1, A, B)
print()
print(f"A = {A}")
print(f"B = {B}")
print(f"A & B = {I}")
print(f"largest graded ideal inside A: {graded_part(A).label()}")

print()
print(f"A prime: {is_prime(T1, lat, A).prime}, maximal: {is_maximal(T1, lat, A)}")
print(f"B prime: {is_prime(T1, lat, B).prime}, maximal: {is_maximal(T1, lat, B)}")

fam = irredundant_prime_intersection(T1, lat, I)
print()
print("irredundant prime decomposition of A & B:")
for P in fam:
    print("  ", P)
print("unique as a set regardless of construction order:",
      uniqueness_check(T1, lat, fam, tuple(reversed(fam))))

print()
print("powers of A stay distinct while their intersection collapses to the")
print("graded part:")
for n in (1, 2, 3):
    print(f"  A^{n} = {power(T1, A, n)}")
print(f"  limit of powers = {limit_power(T1, A)}")
