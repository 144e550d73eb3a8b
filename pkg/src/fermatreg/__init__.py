"""Regulator pairings of cycles on Fermat Jacobians via 3F2 values at z = 1.

The package has three layers:

* :mod:`fermatreg.specialfn` -- log-gamma, beta, Pochhammer, tanh-sinh
  quadrature and a certified 3F2-at-unit-argument evaluator with two
  independent strategies;
* :mod:`fermatreg.fermat` -- eigenform indexing on the curve x^N + y^N = 1,
  period constants, the root-of-unity coefficients mu and mu_half, and the
  Hodge-class predicate for prime N;
* :mod:`fermatreg.regulator` -- the script-F building block, the holomorphic
  and mixed regulator pairings, the f(i, N) indecomposability statistic, and
  brute-force oracles (quadrature and series) that check the closed forms.

Everything is deterministic: fixed summation orders, seeded self-checks, no
global mutable state beyond an optional opt-in evaluation cache.
"""

__version__ = "0.1.0"

from .specialfn import (
    BudgetExceededError,
    DivergentParametersError,
    DomainError,
    EvalConfig,
    EvalResult,
    Hyp3F2Params,
    NonFiniteSampleError,
    STRATEGIES,
    beta,
    de_quadrature,
    disable_eval_cache,
    enable_eval_cache,
    gauss_2f1_unit,
    hyp3f2_unit,
    log_gamma,
    one_minus_root,
    pochhammer,
)
from .fermat import (
    FormIndex,
    UnsupportedModulusError,
    WedgeIndex,
    bracket,
    genus,
    is_hodge,
    is_in_IN,
    is_prime,
    mu,
    mu_half,
    period,
)
from .regulator import (
    FIndecResult,
    RegulatorValue,
    f_indec,
    im_reg_mixed,
    log_integral,
    oracle_projector_integral,
    oracle_projector_pairing,
    oracle_series_sum,
    reg_holomorphic,
    script_F,
)

__all__ = [
    "__version__",
    # specialfn
    "BudgetExceededError", "DivergentParametersError", "DomainError",
    "EvalConfig", "EvalResult", "Hyp3F2Params", "NonFiniteSampleError",
    "STRATEGIES", "beta", "de_quadrature", "disable_eval_cache",
    "enable_eval_cache", "gauss_2f1_unit", "hyp3f2_unit",
    "log_gamma", "one_minus_root", "pochhammer",
    # fermat
    "FormIndex", "UnsupportedModulusError", "WedgeIndex", "bracket", "genus",
    "is_hodge", "is_in_IN", "is_prime", "mu", "mu_half", "period",
    # regulator
    "FIndecResult", "RegulatorValue", "f_indec", "im_reg_mixed",
    "log_integral", "oracle_projector_integral", "oracle_projector_pairing",
    "oracle_series_sum", "reg_holomorphic", "script_F",
]
