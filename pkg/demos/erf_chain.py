"""
From exp(x) to the error function with operators only.

exp(x) is killed by Dx - 1.  Substituting -x^2 gives exp(-x^2), and
integrating once more gives (up to a constant) erf.  The series solutions
of the last operator are 1 and the Taylor expansion of the integral.
"""

from orealg import (annihilator_of_composition_d, annihilator_of_integral, make_algebra,
                    power_series_solutions)

D = make_algebra("x", "Dx")

E = D("Dx - 1")
G = annihilator_of_composition_d(E, "-x^2")
print("exp(-x^2):", G)
I = annihilator_of_integral(G)
print("its integral:", I)
sols = sorted(power_series_solutions(I, 10), key=lambda f: f.coeffs()[0] != 0)
print("[%s]" % ", ".join(str(f) for f in sols))
