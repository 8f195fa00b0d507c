"""Tour of the hypergeometric parameter symmetries.

The PMF of Hypergeometric(N, K, n) is invariant under swapping K and n,
and under complementing both the marked set and the sample.  Together the
two moves generate (at most) four parametrizations of any upper-tail
probability, and each one feeds the same bound formulas with different
numbers, so taking the minimum over the orbit tightens the final answer
for free.
"""

import math

from hypertail import (
    HypergeomParams,
    TailQuery,
    exact_upper_tail,
    log_pmf,
    representation_orbit,
)

params = HypergeomParams(10, 3, 6)

print("swap invariance of the PMF (N=10, K=3, n=6 vs N=10, K=6, n=3):")
for k in range(0, 4):
    a = math.exp(log_pmf(params, k))
    b = math.exp(log_pmf(params.swapped(), k))
    print(f"  Pr[X={k}] = {a:.12f}   Pr[Z={k}] = {b:.12f}")
print()

query = TailQuery(params, threshold=2)
print(f"orbit of the query Pr[X >= {query.threshold}]:")
for rep in representation_orbit(query):
    chain = "+".join(t.value for t in rep.transform_chain)
    tail = math.exp(exact_upper_tail(rep.params, rep.threshold))
    print(f"  {chain:<13} (N={rep.params.population}, "
          f"K={rep.params.successes}, n={rep.params.draws}, "
          f"d={rep.threshold})  exact tail = {tail:.12f}")
print()

print("a fixed point: when K = n the swap changes nothing, so the orbit")
print("shrinks to two members:")
for rep in representation_orbit(TailQuery(HypergeomParams(5, 2, 2), 2)):
    chain = "+".join(t.value for t in rep.transform_chain)
    print(f"  {chain:<13} (N={rep.params.population}, "
          f"K={rep.params.successes}, n={rep.params.draws}, "
          f"d={rep.threshold})")
