"""
Cassini's identity F(n+1)^2 - F(n) F(n+2) = (-1)^n, proved by a closure
computation and then checked against the first terms.
"""

from orealg import annihilator_of_polynomial, apply, make_algebra, to_list

S = make_algebra("n", "Sn")
fib = S("Sn^2 - Sn - 1")

# an operator for y1^2 - y0*y2 where y_i = F(n+i)
C = annihilator_of_polynomial(fib, "y1^2 - y0*y2")
print("annihilator of the Cassini expression:", C)

F = to_list(fib, [0, 1], 25)
cassini = [F[n + 1] ** 2 - F[n] * F[n + 2] for n in range(20)]
print("first values:", [int(v) for v in cassini[:8]])
print("C kills them:", all(v == 0 for v in apply(C, cassini)))

# (-1)^n itself, with no Fibonacci numbers involved
print("C applied to (-1)^n:", apply(C, [(-1) ** n for n in range(12)]))
