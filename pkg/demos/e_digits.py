"""
Digits of e from the partial sums of 1/k!.

The sum s(n) = 1/0! + ... + 1/n! satisfies a second order recurrence.
Binary splitting jumps to s(N) directly; the error is below 1/N!.
"""

import math
import sys
import time

from orealg import annihilator_of_sum, decimal_digits, forward_matrix_bsplit, make_algebra, to_list

S = make_algebra("n", "Sn")
L = annihilator_of_sum(S("(n+1)*Sn - 1"))
print("recurrence for the partial sums:", L)
print("first terms:", ", ".join(str(v) for v in to_list(L, [1, 2], 8)))

digits = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
# N! > 10^(digits + 10) is plenty
N, logfact = 1, 0.0
while logfact < digits + 10:
    N += 1
    logfact += math.log10(N)

t = time.perf_counter()
res = forward_matrix_bsplit(L, N)
value = res.apply([1, 2])[0]
print("N = %d, %.2f s" % (N, time.perf_counter() - t))
print(decimal_digits(value, digits + 5)[:digits + 2])
