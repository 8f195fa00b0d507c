"""Walkthrough: evaluating every tail bound on a single query.

Scenario: a population of 1000 items contains 20 defective ones, we draw
100 without replacement and want Pr[at least 10 defectives in the sample].
"""

import math

from hypertail import HypergeomParams, TailQuery, Transform, best_bound

params = HypergeomParams(population=1000, successes=20, draws=100)
query = TailQuery(params, threshold=10)

print(f"X ~ Hypergeometric(N={params.population}, K={params.successes}, "
      f"n={params.draws})")
print(f"mean nK/N = {float(params.mean)}, support = "
      f"[{params.support_min}, {params.support_max}]")
print(f"question: Pr[X >= {query.threshold}] = ?")
print()

report = best_bound(query)

print("bounds evaluated on the original parametrization:")
for r in report.results:
    if r.representation.transform_chain != (Transform.IDENTITY,):
        continue
    print(f"  {r.method.value:<18} {r.linear_value:.6e}")
print()

print("the symmetry orbit adds three more parametrizations of the same")
print("tail; the best bound is the minimum over all of them:")
for r in report.results:
    chain = "+".join(t.value for t in r.representation.transform_chain)
    if chain == "identity" or not r.applicable:
        continue
    rep = r.representation
    print(f"  {r.method.value:<18} via {chain:<13} "
          f"(N={rep.params.population}, K={rep.params.successes}, "
          f"n={rep.params.draws}, d={rep.threshold})  {r.linear_value:.6e}")
print()

print(f"exact tail : {math.exp(report.exact):.6e}")
print(f"best bound : {report.best.linear_value:.6e} "
      f"({report.best.method.value})")
print()
print("note how the swapped variants (parameterized by the 20 marked items")
print("rather than the 100 draws) are the tight ones here: n > K, so the")
print("bounding binomial with fewer trials wins.")
