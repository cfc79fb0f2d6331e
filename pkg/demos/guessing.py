"""
Guessing: from a list of numbers back to an operator.
"""

from orealg import guess, guess_report, lclm, make_algebra, to_list

S = make_algebra("n", "Sn")

fib = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
L = guess(fib)
print("recurrence:", L)
print("next terms:", [int(v) for v in to_list(L, fib[:2], 16)[11:]])
print("differential equation of the generating function:", guess(fib, "D"))

# the minimal operator has order 2 but degree 10; asking for order >= 3
# with degree <= 5 still finds it through the refinement step
data = [(n + 1) ** 10 * 2 ** n + 3 ** n for n in range(200)]
rep = guess_report(data, min_order=3, max_degree=5)
print("first hit at", rep.point, "-> order %d, degree %d" % (rep.order, rep.degree))
print("matches the lclm:", rep.operator == lclm(S("(n+1)^10*Sn - 2*(n+2)^10"), S("Sn - 3")))
