"""Evaluating 3F2 at unit argument with certified error bounds.

Every evaluation returns an EvalResult(value, err, effort).  err is an
absolute bound the library stands behind; effort counts elementary
operations (series terms or quadrature nodes), useful for comparing
strategies.
"""

import math
from fractions import Fraction

from fermatreg import (
    BudgetExceededError,
    DivergentParametersError,
    EvalConfig,
    Hyp3F2Params,
    enable_eval_cache,
    disable_eval_cache,
    hyp3f2_unit,
)

# 3F2(1, 1, 1; 2, 2; 1) is the Basel sum pi^2/6
p = Hyp3F2Params(1, 1, 1, 2, 2)
r = hyp3f2_unit(p, EvalConfig(tol=1e-12))
print("Basel check")
print(f"  value  {r.value!r}")
print(f"  exact  {math.pi ** 2 / 6!r}")
print(f"  err    {r.err:.2e}   effort {r.effort}")
print()

# parameters are exact rationals; strings and Fractions both work
p = Hyp3F2Params("3/13", "1/13", 1, "4/13", "14/13")
print(f"slowly convergent case, excess = {p.excess} (sum of lowers minus uppers)")
for strategy in ("accelerated-series", "kernel-quadrature", "both-cross-check"):
    r = hyp3f2_unit(p, EvalConfig(strategy=strategy))
    print(f"  {strategy:20s} {r.value:.15f}  err {r.err:.1e}  effort {r.effort:6d}")
print()

# the kernel route rewrites the sum as a weighted integral of an
# elementary kernel; it exists whenever an upper parameter is 1 and some
# lower parameter exceeds an upper one by exactly 1, which holds for all
# the regulator series in this package.  both-cross-check runs the two
# routes independently and widens err if they disagree.

# divergent parameter sets are rejected up front
try:
    hyp3f2_unit(Hyp3F2Params(1, 1, 1, 1, 2), EvalConfig())
except DivergentParametersError as exc:
    print(f"rejected: {exc}")
print()

# an unreachable tolerance raises, carrying the best result found
try:
    hyp3f2_unit(p, EvalConfig(tol=1e-30))
except BudgetExceededError as exc:
    best = exc.result
    print(f"budget exhausted; best value {best.value:.15f} with err {best.err:.1e}")
print()

# repeated evaluations can share a memoization store; keys include the
# exact parameters and the full configuration, so hits are bit-identical
store = {}
enable_eval_cache(store)
hyp3f2_unit(p, EvalConfig())
r1 = hyp3f2_unit(p, EvalConfig())
disable_eval_cache()
print(f"cache holds {len(store)} entry; cached value {r1.value:.15f}")
