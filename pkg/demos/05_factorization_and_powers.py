"""Prime factorization of graded ideals, tight products, powers and Krull.

Run with: python demos/05_factorization_and_powers.py
"""

from leavitt import (
    AdmissiblePair,
    QQ,
    bottom_pair,
    enumerate_pairs,
    exitless_cycles,
    factor_graded,
    krull_check,
    make,
    parse_poly,
    power,
    product,
    quotient,
    rep,
    tight_product_check,
    zero_ideal,
)
from leavitt.catalog import single_loop, toeplitz, two_disjoint_loops, two_disjoint_roses


def banner(text):
    print()
    print(f"== {text} ==")


banner("graded factorization on two disjoint loops")
D2 = two_disjoint_loops()
lat = enumerate_pairs(D2)
factors = factor_graded(D2, lat, zero_ideal())
print("zero ideal =", " * ".join(p.label() for p in factors))
left = product(D2, rep(factors[0]), rep(factors[1]))
right = product(D2, rep(factors[1]), rep(factors[0]))
print("product in either order is the zero ideal:",
      left == right == zero_ideal())
print("the factorization is tight:", tight_product_check(D2, [rep(p) for p in factors]))

banner("same story on two disjoint roses")
RR = two_disjoint_roses()
print("zero ideal =", " * ".join(p.label() for p in factor_graded(RR, enumerate_pairs(RR), zero_ideal())))

banner("tight products over the single loop")
L1 = single_loop()
loop = exitless_cycles(L1)[0]
P = make(L1, bottom_pair(), {loop: parse_poly(QQ, "1+x")})
Q = make(L1, bottom_pair(), {loop: parse_poly(QQ, "1+x^2")})
PQ = product(L1, P, Q)
print(f"<1+x> * <1+x^2> = {PQ}")
print("tight ([P, Q]):", tight_product_check(L1, [P, Q]))
print("not tight ([P, P*Q]):", tight_product_check(L1, [P, PQ]))

banner("powers and the Krull criterion")
for n in (1, 2, 3, 4, 5):
    print(f"  P^{n} = {power(L1, P, n)}")
print("P contains no vertices, so its powers intersect to zero:",
      krull_check(L1, P))
T1 = toeplitz()
w_pair = AdmissiblePair.of({"w"}, ())
cyc = exitless_cycles(quotient(T1, w_pair).graph)[0]
A = make(T1, w_pair, {cyc: parse_poly(QQ, "1+x")})
print("the Toeplitz ideal A contains the vertex w, so they do not:",
      krull_check(T1, A))
