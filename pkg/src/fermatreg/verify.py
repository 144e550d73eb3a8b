"""Self-check suites: invariants with measured discrepancies.

Each check returns its name, whether it passed, the measured discrepancy and
the threshold it was held to, so the CLI can print one line per property.
The random draws are seeded, making every suite deterministic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import fermat, regulator, specialfn
from .specialfn import EvalConfig, Hyp3F2Params

__all__ = ["CheckResult", "run_suite", "SUITES"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    discrepancy: float
    threshold: float

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return (f"{tag} {self.name}: discrepancy {self.discrepancy:.3e}"
                f" (allowed {self.threshold:.3e})")


def _check(name: str, discrepancy: float, threshold: float) -> CheckResult:
    return CheckResult(name, discrepancy <= threshold, discrepancy, threshold)


# --- special-function checks ------------------------------------------------

def _special_checks(cfg: EvalConfig) -> list[CheckResult]:
    rng = random.Random(20260819)
    out = []

    worst = 0.0
    for _ in range(60):
        m = math.exp(rng.uniform(math.log(0.02), math.log(25.0)))
        n = math.exp(rng.uniform(math.log(0.02), math.log(25.0)))
        d = abs(specialfn.beta(m, n) - specialfn.beta(n, m)) / specialfn.beta(m, n)
        worst = max(worst, d)
    out.append(_check("beta symmetry (relative)", worst, 1e-13))

    worst = 0.0
    for _ in range(60):
        m = math.exp(rng.uniform(math.log(0.05), math.log(10.0)))
        n = math.exp(rng.uniform(math.log(0.05), math.log(10.0)))
        lhs = specialfn.beta(m, n)
        rhs = specialfn.beta(m + 1.0, n) + specialfn.beta(m, n + 1.0)
        worst = max(worst, abs(lhs - rhs) / lhs)
    out.append(_check("beta contiguous recurrence (relative)", worst, 1e-12))

    exact = True
    for N in (5, 13, 23):
        for j in range(1, N + 1):
            sigma = Fraction(j, N)
            for k in (0, 1, 2, 7, 40):
                lhs = specialfn.pochhammer(sigma, k) / specialfn.pochhammer(sigma + 1, k)
                if lhs != sigma / (sigma + k):
                    exact = False
    out.append(_check("Pochhammer telescoping ratio (exact rationals)",
                      0.0 if exact else 1.0, 0.0))

    basel = specialfn.hyp3f2_unit(Hyp3F2Params(1, 1, 1, 2, 2), cfg)
    out.append(_check("unit-argument series vs pi^2/6",
                      abs(basel.value - math.pi ** 2 / 6.0), 1e-10))

    trunc = specialfn.hyp3f2_unit(Hyp3F2Params(Fraction(1, 2), 0, 3, Fraction(1, 5), 7), cfg)
    out.append(_check("zero upper parameter gives exactly 1",
                      abs(trunc.value - 1.0), 0.0))

    worst = 0.0
    for _ in range(20):
        a = Fraction(rng.randrange(1, 40), rng.randrange(37, 60))
        b = Fraction(rng.randrange(1, 40), rng.randrange(37, 60))
        c = a + b + Fraction(rng.randrange(5, 40), rng.randrange(5, 40))
        x = Fraction(rng.randrange(1, 30), rng.randrange(7, 30))
        got = specialfn.hyp3f2_unit(Hyp3F2Params(a, b, x, c, x), cfg)
        want = specialfn.gauss_2f1_unit(float(a), float(b), float(c))
        worst = max(worst, abs(got.value - want))
    out.append(_check("degenerate (cancelling-parameter) Gauss closed form",
                      worst, cfg.tol + 1e-12))

    worst = 0.0
    for (a, j, b, N) in ((1, 1, 2, 5), (3, 2, 4, 13), (1, 23, 21, 23), (5, 7, 11, 23)):
        p = Hyp3F2Params(Fraction(a + j, N), Fraction(j, N), 1,
                         Fraction(a + b + j, N), Fraction(j, N) + 1)
        k = specialfn.hyp3f2_unit(p, EvalConfig(tol=cfg.tol, strategy="kernel-quadrature"))
        s = specialfn.hyp3f2_unit(p, EvalConfig(tol=cfg.tol, strategy="accelerated-series"))
        gap = abs(k.value - s.value)
        margin = k.err + s.err
        worst = max(worst, gap - margin)
    out.append(_check("kernel and series strategies agree within summed errs",
                      max(worst, 0.0), 0.0))

    worst = 0.0
    for _ in range(10):
        N = rng.choice((7, 13, 19, 23))
        a = rng.randrange(1, N - 1)
        b = rng.randrange(1, N - a)
        j = rng.randrange(1, N + 1)
        p = Hyp3F2Params(Fraction(a + j, N), Fraction(j, N), 1,
                         Fraction(a + b + j, N), Fraction(j, N) + 1)
        loose = specialfn.hyp3f2_unit(p, EvalConfig(tol=1e-6))
        tight = specialfn.hyp3f2_unit(p, EvalConfig(tol=1e-7))
        excessd = abs(loose.value - tight.value) - (loose.err + tight.err)
        worst = max(worst, excessd)
    out.append(_check("certified err honored against 10x tighter recomputation",
                      max(worst, 0.0), 0.0))

    q = specialfn.de_quadrature(lambda x, xc: x ** (-0.5) * xc ** (-0.5), cfg)
    out.append(_check("endpoint-singular quadrature vs pi",
                      abs(q.value - math.pi), 1e-10))
    q = specialfn.de_quadrature(lambda t: math.log1p(-t), cfg)
    out.append(_check("log-endpoint quadrature vs -1", abs(q.value + 1.0), 1e-8))

    return out


# --- curve-constant checks --------------------------------------------------

def _fermat_checks(cfg: EvalConfig) -> list[CheckResult]:
    out = []

    ok = True
    for N in range(3, 24):
        for a in range(-2 * N, 2 * N + 1):
            r = fermat.bracket(a, N)
            if not (1 <= r <= N) or fermat.bracket(a + N, N) != r:
                ok = False
        if fermat.bracket(N, N) != N or fermat.bracket(0, N) != N:
            ok = False
    out.append(_check("bracket lands in {1..N} with period N", 0.0 if ok else 1.0, 0.0))

    ok = True
    for N in range(3, 51):
        holo = sum(1 for a in range(1, N) for b in range(1, N)
                   if fermat.is_in_IN(a, b, N) and a + b < N)
        if holo != fermat.genus(N):
            ok = False
    out.append(_check("genus equals count of holomorphic eigenform labels",
                      0.0 if ok else 1.0, 0.0))

    worst_re = 0.0
    worst_mag = 0.0
    for N in (3, 4, 5, 7, 11, 23, 50, 101):
        for a in range(1, N):
            for b in range(1, N):
                if not fermat.is_in_IN(a, b, N):
                    continue
                m = fermat.mu(a, b, N)
                mag = abs(m)
                worst_re = max(worst_re, abs(m.real) / mag)
                trig = 2.0 * N * N * abs(
                    math.sin(math.pi * a / N) * math.sin(math.pi * b / N)
                    / math.sin(math.pi * (a + b) / N))
                worst_mag = max(worst_mag, abs(mag - trig) / trig)
    out.append(_check("mu is purely imaginary (relative real part)", worst_re, 1e-10))
    out.append(_check("|mu| matches its sine form (relative)", worst_mag, 1e-12))

    worst = 0.0
    for N in (5, 7, 13, 23):
        for a in range(1, N):
            for b in range(1, N - a):
                if not fermat.is_in_IN(a, b, N):
                    continue
                lhs = 4.0 * fermat.mu_half(a, b, N)
                rhs = fermat.mu(a, b, 2 * N)
                worst = max(worst, abs(lhs - rhs) / abs(rhs))
    out.append(_check("mu_half is the doubled-modulus mu over 4 (relative)",
                      worst, 1e-12))

    ok = True
    for N in (5, 7, 11, 13, 17, 19, 23):
        pairs = [(a, b) for a in range(1, N) for b in range(1, N)
                 if fermat.is_in_IN(a, b, N) and a + b < N]
        for (a, b) in pairs:
            w = fermat.WedgeIndex(fermat.FormIndex(N, a, b), fermat.FormIndex(N, a, b))
            if not fermat.is_hodge(w):
                ok = False
        for i in range(2, N - 2):
            for j in range(2, N - 2):
                if 1 + i >= N or 1 + j >= N:
                    continue
                w = fermat.WedgeIndex(fermat.FormIndex(N, 1, i), fermat.FormIndex(N, 1, j))
                expected = (j == i) or (j == N - 1 - i)
                if fermat.is_hodge(w) != expected:
                    ok = False
    out.append(_check("Hodge predicate: reflexive, and (1,i)~(1,j) iff j=i or j=N-1-i",
                      0.0 if ok else 1.0, 0.0))

    got = fermat.period(fermat.FormIndex(3, 1, 1))
    out.append(_check("period of the (1,1) form on the cubic",
                      abs(got - 1.766638750285449957), 1e-12))

    return out


# --- regulator checks --------------------------------------------------------

def _regulator_checks(cfg: EvalConfig) -> list[CheckResult]:
    out = []

    f113 = regulator.script_F(1, 1, 1, 3, cfg)
    out.append(_check("script-F(1,1,1;3) frozen value",
                      abs(f113.value - 1.2091995761561452), cfg.tol + 1e-12))

    worst = 0.0
    exact_zero = True
    for (a, b, N) in ((1, 2, 5), (2, 3, 7), (1, 4, 7)):
        r1 = regulator.reg_holomorphic(a, b, N, cfg)
        r2 = regulator.reg_holomorphic(b, a, N, cfg)
        worst = max(worst, abs(r1.value + r2.value))
        if regulator.reg_holomorphic(a, a, N, cfg).value != 0.0:
            exact_zero = False
    out.append(_check("holomorphic pairing antisymmetry (exact)", worst, 0.0))
    out.append(_check("holomorphic pairing diagonal vanishing (exact)",
                      0.0 if exact_zero else 1.0, 0.0))

    worst = 0.0
    for (a, b, N) in ((1, 2, 5), (2, 3, 7)):
        reg = regulator.reg_holomorphic(a, b, N, cfg)
        lx = regulator.log_integral(a, b, N, "x", cfg)
        ly = regulator.log_integral(a, b, N, "y", cfg)
        per = fermat.period(fermat.FormIndex(N, a, b))
        worst = max(worst, abs(reg.value - 2.0 * (lx.value - ly.value) / per)
                    - (reg.err + 2.0 * (lx.err + ly.err) / per))
    out.append(_check("normalization identity reg = 2(Lx - Ly)/period",
                      max(worst, 0.0), 0.0))

    worst = 0.0
    for (a, b, N) in ((1, 2, 5), (1, 1, 3), (2, 3, 7)):
        s = regulator.oracle_series_sum(a, b, N, cfg)
        lx = regulator.log_integral(a, b, N, "x", cfg)
        worst = max(worst, abs(s.value + lx.value) - (s.err + lx.err))
    out.append(_check("regrouped series equals -log integral within errs",
                      max(worst, 0.0), 0.0))

    swap_ok = True
    diag_ok = True
    for (a, b, c, d, N) in ((1, 2, 1, 4, 13), (1, 3, 1, 6, 17)):
        v1 = regulator.im_reg_mixed(a, b, c, d, N, cfg).value
        v2 = regulator.im_reg_mixed(c, d, a, b, N, cfg).value
        if v1 != -v2:
            swap_ok = False
        if regulator.im_reg_mixed(a, b, a, b, N, cfg).value != 0.0:
            diag_ok = False
    out.append(_check("mixed pairing swap antisymmetry (exact)",
                      0.0 if swap_ok else 1.0, 0.0))
    out.append(_check("mixed pairing diagonal vanishing (exact)",
                      0.0 if diag_ok else 1.0, 0.0))

    # dropping the (rounding-level) real part of mu_half must not move the result
    worst = 0.0
    for (i, N) in ((2, 13), (3, 17)):
        m1 = fermat.mu_half(1, i, N)
        m2 = fermat.mu_half(1, 2 * i, N)
        g1 = regulator.script_F(2 * i, N - i, 1, N, cfg).value
        g2 = regulator.script_F(i, i, 1, N, cfg).value
        full = (2.0 * (m1 * g1 - m2 * g2)).imag
        imag_only = (2.0 * (complex(0, m1.imag) * g1 - complex(0, m2.imag) * g2)).imag
        worst = max(worst, abs(full - imag_only) / abs(full))
    out.append(_check("mixed pairing insensitive to mu real part (relative)",
                      worst, 1e-9))

    f = regulator.f_indec(2, 13, cfg)
    out.append(_check("f(2,13) against its printed reference",
                      abs(f.value - 0.0753593), 2e-6))
    out.append(_check("wedge ((1,2),(1,4)) mod 13 is not Hodge",
                      0.0 if not f.hodge else 1.0, 0.0))

    pair_same = regulator.oracle_projector_pairing(1, 2, 1, 2, 5, cfg)
    pair_off = regulator.oracle_projector_pairing(1, 2, 2, 1, 5, cfg)
    out.append(_check("projector pairing calibration: matching label gives 1",
                      abs(pair_same.value - 1.0), pair_same.err + 1e-8))
    out.append(_check("projector pairing calibration: mismatched label gives 0",
                      abs(pair_off.value), pair_off.err + 1e-8))

    br = regulator.oracle_projector_integral(1, 2, 1, 1, 5, "y", cfg)
    closed = -regulator.script_F(2, fermat.bracket(1 - 2, 5), 1, 5, cfg).value
    out.append(_check("projector integral vs script-F closed form",
                      abs(br.value - closed), br.err + cfg.tol + 1e-9))

    return out


SUITES = {
    "special": _special_checks,
    "fermat": _fermat_checks,
    "regulator": _regulator_checks,
}


def run_suite(name: str, cfg: EvalConfig = EvalConfig()) -> list[CheckResult]:
    """Run one named suite, or all of them, returning individual results."""
    if name == "all":
        results = []
        for key in ("special", "fermat", "regulator"):
            results.extend(SUITES[key](cfg))
        return results
    if name not in SUITES:
        raise specialfn.DomainError(f"unknown suite {name!r}")
    return SUITES[name](cfg)
