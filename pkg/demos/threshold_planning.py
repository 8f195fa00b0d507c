"""Threshold planning with bound inversion.

Question: how many defectives must a sample contain before we can reject
"the lot is fine" at a given error budget?  ``invert_threshold`` returns
the smallest count whose best upper-tail bound drops below epsilon.
"""

from hypertail import HypergeomParams, TailQuery, best_bound, invert_threshold

params = HypergeomParams(population=5000, successes=100, draws=1000)
print(f"lot of {params.population}, {params.successes} marked, "
      f"sampling {params.draws}; mean count = {float(params.mean)}")
print()

for epsilon in (0.1, 0.01, 1e-4, 1e-8, 1e-15):
    d = invert_threshold(params, epsilon)
    if d <= params.support_max:
        value = best_bound(TailQuery(params, d),
                           compute_exact=False).best.linear_value
        print(f"epsilon = {epsilon:<8.0e} -> d = {d:>3}   "
              f"(best bound there: {value:.3e})")
    else:
        print(f"epsilon = {epsilon:<8.0e} -> d = {d:>3}   "
              f"(beyond the support: the tail is exactly 0)")
print()
print("each d is minimal: one step lower and the guarantee no longer holds.")
