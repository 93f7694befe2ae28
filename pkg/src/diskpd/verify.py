"""Runtime verification suites for every module's invariants.

Each suite returns a list of CheckResult records (first counterexample in
`detail` on failure) and is driven by explicit seeds, so identical
arguments always reproduce identical outcomes.  The CLI `verify`
subcommand runs these; the test suite asserts on them as well.
"""

from __future__ import annotations

import cmath
import math
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import core, orthopoly, radius, symmetric, triangle
from .core import DiskCollection, Verdict

__all__ = [
    "CheckResult",
    "random_collection",
    "core_suite",
    "symmetric_suite",
    "orthopoly_suite",
    "radius_suite",
    "triangle_suite",
    "SUITES",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    informational: bool = False


def random_collection(rng: random.Random, nmax: int = 8, min_separation: float = 0.1) -> DiskCollection:
    """Random collection: n in [2, nmax], centers in the unit box,
    pairwise center distance at least min_separation, unit placeholder radii."""
    n = rng.randint(2, nmax)
    for _ in range(10_000):
        centers = [complex(rng.random(), rng.random()) for _ in range(n)]
        dmin = min(
            abs(centers[i] - centers[j]) for i in range(n) for j in range(i + 1, n)
        )
        if dmin >= min_separation:
            return DiskCollection(centers, [1.0] * n)
    raise RuntimeError("failed to sample a separated center configuration")


def _with_radii(c: DiskCollection, radii) -> DiskCollection:
    return DiskCollection(c.centers, tuple(radii))


def _is_positive(c: DiskCollection) -> bool:
    report = core.is_positive_definite(core.build_q_matrix(c))
    return report.verdict is Verdict.POSITIVE_DEFINITE


def _sample_positive_collection(rng: random.Random, nmax: int) -> DiskCollection:
    """A random collection known positive (disjoint-by-construction radii)."""
    while True:
        base = random_collection(rng, nmax)
        dmin = base.min_pairwise_distance()
        radii = [dmin * rng.uniform(0.1, 0.45) for _ in range(base.n)]
        cand = _with_radii(base, radii)
        if _is_positive(cand):
            return cand


# ---------------------------------------------------------------------------
# core
# ---------------------------------------------------------------------------


def _naive_q_entry(c: DiskCollection, i: int, j: int) -> complex:
    prod = 1 + 0j
    for k in range(c.n):
        prod *= (c.centers[i] - c.centers[k]) * (
            c.centers[j] - c.centers[k]
        ).conjugate() - c.radii[k] ** 2
    return -prod


def core_suite(seed: int = 0, samples: int = 200, nmax: int = 8) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    # Hermitian symmetry, against an independent per-entry product loop
    bad = None
    for _ in range(40):
        base = random_collection(rng, nmax)
        dmin = base.min_pairwise_distance()
        c = _with_radii(base, [dmin * rng.uniform(0.2, 0.9) for _ in range(base.n)])
        q = core.build_q_matrix(c)
        for i in range(c.n):
            for j in range(c.n):
                direct = _naive_q_entry(c, j, i).conjugate()
                built = q.entry(i, j)
                if abs(built - direct) > 1e-12 * max(1.0, abs(direct)):
                    bad = f"entry ({i},{j}) deviates from conjugate transpose"
                if i == j and built.imag != 0.0:
                    bad = f"diagonal entry {i} not real"
        if bad:
            break
    out.append(CheckResult("core.hermitian-symmetry", bad is None, bad or ""))

    exact_ok = True
    for _ in range(20):
        n = rng.randint(1, 5)
        centers = []
        while len(centers) < n:
            cand = (Fraction(rng.randint(-8, 8), 4), Fraction(rng.randint(-8, 8), 4))
            if cand not in centers:
                centers.append(cand)
        radii = [Fraction(rng.randint(1, 8), 8) for _ in range(n)]
        q = core.build_q_matrix(DiskCollection(centers, radii))
        for i in range(n):
            for j in range(n):
                if q.entry(i, j) != q.entry(j, i).conjugate():
                    exact_ok = False
    out.append(CheckResult("core.hermitian-exact", exact_ok))

    # small radii always positive
    bad = None
    for idx in range(samples):
        base = random_collection(rng, nmax)
        dmin = base.min_pairwise_distance()
        scale = 1e-3 * dmin
        radii = [scale * rng.uniform(0.05, 1.0) for _ in range(base.n)]
        if not _is_positive(_with_radii(base, radii)):
            bad = f"sample {idx}: n={base.n} not positive at radii scale {scale:.2e}"
            break
    out.append(CheckResult("core.small-radius-positivity", bad is None, bad or ""))

    # positivity is inherited by subcollections
    bad = None
    for idx in range(samples):
        c = _sample_positive_collection(rng, nmax)
        size = rng.randint(1, c.n)
        subset = sorted(rng.sample(range(c.n), size))
        if not _is_positive(c.subcollection(subset)):
            bad = f"sample {idx}: subcollection {subset} of n={c.n} lost positivity"
            break
    out.append(CheckResult("core.subcollection-closure", bad is None, bad or ""))

    # positivity is preserved under componentwise radius shrinking
    bad = None
    for idx in range(samples):
        c = _sample_positive_collection(rng, nmax)
        shrunk = _with_radii(c, [r * rng.uniform(0.05, 1.0) for r in c.radii])
        if not _is_positive(shrunk):
            bad = f"sample {idx}: shrunk radii lost positivity (n={c.n})"
            break
    out.append(CheckResult("core.radius-monotonicity", bad is None, bad or ""))

    # verdict is invariant under center rotation + translation
    bad = None
    for idx in range(60):
        base = random_collection(rng, nmax)
        dmin = base.min_pairwise_distance()
        c = _with_radii(base, [dmin * rng.uniform(0.2, 0.8) for _ in range(base.n)])
        phase = cmath.exp(2j * math.pi * rng.random())
        shift = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        moved = DiskCollection([phase * z + shift for z in c.centers], c.radii)
        v1 = core.is_positive_definite(core.build_q_matrix(c)).verdict
        v2 = core.is_positive_definite(core.build_q_matrix(moved)).verdict
        if v1 is not v2:
            bad = f"sample {idx}: verdict changed under rigid motion ({v1} vs {v2})"
            break
    out.append(CheckResult("core.rigid-motion-invariance", bad is None, bad or ""))

    # scaling centers and radii by t multiplies Q by t^(2n), verdict fixed
    bad = None
    for idx in range(60):
        base = random_collection(rng, nmax)
        dmin = base.min_pairwise_distance()
        c = _with_radii(base, [dmin * rng.uniform(0.2, 0.8) for _ in range(base.n)])
        t = rng.uniform(0.3, 3.0)
        scaled = DiskCollection([t * z for z in c.centers], [t * r for r in c.radii])
        q1 = core.build_q_matrix(c).to_numpy()
        q2 = core.build_q_matrix(scaled).to_numpy()
        factor = t ** (2 * c.n)
        if not np.allclose(q2, factor * q1, rtol=1e-9, atol=1e-9 * factor * np.abs(q1).max()):
            bad = f"sample {idx}: entries do not scale by t^(2n)"
            break
        v1 = core.is_positive_definite(core.build_q_matrix(c)).verdict
        v2 = core.is_positive_definite(core.build_q_matrix(scaled)).verdict
        if v1 is not v2:
            bad = f"sample {idx}: verdict changed under similarity scaling"
            break
    out.append(CheckResult("core.scaling-covariance", bad is None, bad or ""))
    return out


# ---------------------------------------------------------------------------
# symmetric
# ---------------------------------------------------------------------------


def symmetric_suite(nmax: int = 12, zcount: int = 20, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    bad = None
    for n in range(2, nmax + 1):
        for _ in range(zcount):
            z = rng.uniform(-1.0, 3.0)
            a = symmetric.a_matrix(n, z)
            eig = sorted(a.eigenvalues())
            tv = sorted(symmetric.circulant_spectrum(n, z, check=False))
            scale = max(1.0, max(abs(t) for t in tv))
            if any(abs(e - t) > 1e-7 * scale for e, t in zip(eig, tv)):
                bad = f"n={n}, z={z:.6f}: eigenvalues deviate from T values"
                break
        if bad:
            break
    out.append(CheckResult("symmetric.spectrum-identity", bad is None, bad or ""))

    bad = None
    for n in range(2, nmax + 1):
        for _ in range(zcount):
            z = rng.uniform(-1.0, 3.0)
            tv = symmetric.circulant_spectrum(n, z, check=False)
            scale = max(abs(t) for t in tv)
            if min(abs(t) for t in tv) < 1e-6 * max(scale, 1.0):
                continue  # too close to a determinant zero for a ratio
            sgn, logdet = np.linalg.slogdet(symmetric.a_matrix(n, z).to_numpy())
            t_sign = 1
            t_log = 0.0
            for t in tv:
                t_sign *= 1 if t > 0 else -1
                t_log += math.log(abs(t))
            if (1 if sgn.real > 0 else -1) != t_sign or abs(logdet - t_log) > 1e-7 * max(
                1.0, abs(t_log)
            ):
                bad = f"n={n}, z={z:.6f}: det A != prod T"
                break
        if bad:
            break
    out.append(CheckResult("symmetric.product-identity", bad is None, bad or ""))

    bad = None
    for n in range(2, nmax + 1):
        r = rng.uniform(0.1, 1.5)
        q = core.build_q_matrix(symmetric.regular_collection(n, r)).to_numpy()
        a = symmetric.a_matrix(n, r * r - 1).to_numpy()
        scale = max(1.0, float(np.abs(q).max()))
        if float(np.abs(q + a).max()) > 1e-10 * scale:
            bad = f"n={n}, r={r:.6f}: -A(r^2-1) deviates from Q"
            break
    out.append(CheckResult("symmetric.core-consistency", bad is None, bad or ""))

    bad = None
    for n in range(2, nmax + 1):
        for m in range(1, n + 1):
            t = symmetric.t_polynomial(n, m)
            if any(c.denominator != 1 for c in t.coefficients):
                bad = f"T({n},{m}) has a non-integer coefficient"
                break
            if m < n and t.degree != n - m:
                bad = f"T({n},{m}) has degree {t.degree}, expected {n - m}"
                break
        if bad:
            break
    out.append(CheckResult("symmetric.integer-coefficients", bad is None, bad or ""))

    bad = None
    for n in range(2, nmax + 1):
        for m in range(1, n):
            t = symmetric.t_polynomial(n, m)
            jac = orthopoly.jacobi_polynomial(m, n - 2 * m, -1)
            bridged = Fraction((-1) ** (n - m) * n * n, n - m) * jac.compose(
                orthopoly.RationalPolynomial((1, 2))
            )
            if n - 2 * m >= 0:
                ok = t == orthopoly.RationalPolynomial.monomial(n - 2 * m) * bridged
            else:
                ok = orthopoly.RationalPolynomial.monomial(2 * m - n) * t == bridged
            if not ok:
                bad = f"Jacobi link fails at n={n}, m={m}"
                break
        if bad:
            break
    out.append(CheckResult("symmetric.jacobi-link", bad is None, bad or ""))
    return out


# ---------------------------------------------------------------------------
# orthopoly
# ---------------------------------------------------------------------------


def _companion_real_roots(coeffs) -> list[tuple[float, int]]:
    """Real roots as (value, multiplicity) from numpy companion-matrix roots.

    A root of multiplicity k scatters into an eigenvalue cluster of radius
    about eps^(1/k) (2e-4 for k=4), so roots are grouped by single-linkage
    clustering at radius 2e-3 first.  Cluster centroids average that noise
    away; a cluster is a real root exactly when its centroid sits on the
    real axis (companion spectra are conjugate-symmetric).
    """
    roots = sorted(
        np.roots(list(reversed([float(c) for c in coeffs]))),
        key=lambda z: (z.real, z.imag),
    )
    clusters: list[list[complex]] = []
    for z in roots:
        for cluster in clusters:
            if any(abs(z - w) < 2e-3 for w in cluster):
                cluster.append(z)
                break
        else:
            clusters.append([z])
    out = []
    for cluster in clusters:
        centroid = sum(cluster) / len(cluster)
        if abs(centroid.imag) < 1e-6:
            out.append((centroid.real, len(cluster)))
    out.sort()
    return out


def orthopoly_suite(seed: int = 0, nmax: int = 12) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    bad = None
    for idx in range(100):
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)]
        poly = orthopoly.RationalPolynomial(coeffs)
        if rng.random() < 0.3:
            extra = orthopoly.RationalPolynomial(
                [rng.randint(-4, 4) for _ in range(2)] + [rng.randint(1, 4)]
            )
            poly = poly * extra * extra  # exercises multiplicity handling
        iso = orthopoly.isolate_real_roots(poly, None, 1e-9)
        oracle = _companion_real_roots(poly.coefficients)
        agree = len(oracle) == iso.count_distinct and all(
            abs(value - approx) < 1e-6 and mult == want
            for (value, want), approx, (_, _, mult) in zip(
                oracle, iso.refined, iso.intervals
            )
        )
        if not agree:
            bad = (
                f"sample {idx}: isolation {list(zip(iso.refined, [m for _, _, m in iso.intervals]))}"
                f" vs companion oracle {oracle}"
            )
            break
    out.append(CheckResult("orthopoly.sturm-vs-companion", bad is None, bad or ""))

    # constructed integer roots with known multiplicities, checked exactly
    bad = None
    for idx in range(40):
        roots = rng.sample(range(-6, 7), rng.randint(1, 4))
        mults = [rng.randint(1, 3) for _ in roots]
        poly = orthopoly.RationalPolynomial([rng.randint(1, 5)])
        for root, mult in zip(roots, mults):
            poly = poly * orthopoly.RationalPolynomial((-root, 1)) ** mult
        iso = orthopoly.isolate_real_roots(poly, None, 1e-9)
        expected = sorted(zip(roots, mults))
        got_ok = len(iso.intervals) == len(expected)
        if got_ok:
            for (lo, hi, mult), (root, want_mult) in zip(iso.intervals, expected):
                if not (lo < root <= hi and mult == want_mult):
                    got_ok = False
                    break
        if not got_ok:
            bad = f"sample {idx}: roots {expected} not recovered"
            break
    out.append(CheckResult("orthopoly.isolation-known-roots", bad is None, bad or ""))

    bad = None
    for n in range(4, nmax + 1):
        for check in orthopoly.v_identity_suite(n):
            if not check.passed:
                bad = f"identity {check.identity} fails at n={n}, m={check.m}"
                break
        if bad:
            break
    out.append(CheckResult("orthopoly.v-identities-exact", bad is None, bad or ""))

    bad = None
    for n in range(4, nmax + 1):
        for m in range(2, n):
            report = orthopoly.zero_structure_check(n, m)
            if not report.passed:
                bad = f"zero structure fails at n={n}, m={m}"
                break
        if bad:
            break
    out.append(CheckResult("orthopoly.zero-structure", bad is None, bad or ""))

    # second-largest zero comparison: interior Chebyshev node vs the
    # generalized parameters (-1, 0)
    bad = None
    for n in range(2, 11):
        cheb = orthopoly.jacobi_polynomial(n, Fraction(-1, 2), Fraction(-1, 2))
        gen = orthopoly.jacobi_polynomial(n, -1, 0)
        z_cheb = orthopoly.isolate_real_roots(cheb, (Fraction(-1), Fraction(1)), 1e-12)
        z_gen = orthopoly.isolate_real_roots(gen, (Fraction(-1), Fraction(1)), 1e-12)
        if len(z_cheb.refined) < 2 or len(z_gen.refined) < 2:
            bad = f"n={n}: unexpected root counts"
            break
        second_cheb = sorted(z_cheb.refined)[-2]
        second_gen = sorted(z_gen.refined)[-2]
        if not second_cheb < second_gen - 1e-9:
            bad = f"n={n}: zero monotonicity in the parameters fails"
            break
    out.append(CheckResult("orthopoly.markov-monotonicity", bad is None, bad or ""))

    bad = None
    for n in range(2, 11):
        zero_lists = []
        for lam in (Fraction(0), Fraction(1, 2), Fraction(1)):
            p = orthopoly.jacobi_polynomial(n, lam - Fraction(1, 2), lam - Fraction(1, 2))
            iso = orthopoly.isolate_real_roots(p, (Fraction(0), Fraction(1)), 1e-12)
            zero_lists.append(sorted(iso.refined, reverse=True))
        for prev, cur in zip(zero_lists, zero_lists[1:]):
            for a, b in zip(prev, cur):
                if not b < a - 1e-9:
                    bad = f"n={n}: positive zeros fail to decrease with the parameter"
                    break
            if bad:
                break
        if bad:
            break
    out.append(CheckResult("orthopoly.stieltjes-monotonicity", bad is None, bad or ""))

    bad = None
    half_x_minus_1 = orthopoly.RationalPolynomial((Fraction(-1, 2), Fraction(1, 2)))
    for n in range(2, nmax + 1):
        lhs = n * orthopoly.jacobi_polynomial(n, -1, -1)
        rhs = (n - 1) * half_x_minus_1 * orthopoly.jacobi_polynomial(n - 1, 1, -1)
        if lhs != rhs:
            bad = f"reduction formula fails at n={n}"
            break
    out.append(CheckResult("orthopoly.reduction-formula", bad is None, bad or ""))

    bad = None
    minus_x = orthopoly.RationalPolynomial((0, -1))
    params = [Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1)]
    for k in range(1, 9):
        for alpha in params:
            for beta in params:
                s = alpha + beta
                if s.denominator == 1 and -2 * k <= s <= -k - 1:
                    continue  # degenerate line, construction refuses
                lhs = orthopoly.jacobi_polynomial(k, alpha, beta)
                rhs = (-1) ** k * orthopoly.jacobi_polynomial(k, beta, alpha).compose(minus_x)
                if lhs != rhs:
                    bad = f"swap transformation fails at k={k}, alpha={alpha}, beta={beta}"
                    break
            if bad:
                break
        if bad:
            break
    out.append(CheckResult("orthopoly.swap-transformation", bad is None, bad or ""))
    return out


# ---------------------------------------------------------------------------
# radius
# ---------------------------------------------------------------------------


def radius_suite(nmax: int = 64, trend_ns=(16, 32, 64, 128, 256)) -> list[CheckResult]:
    out = []
    results = {n: radius.maximal_radius(n) for n in range(2, nmax + 1)}

    bad = None
    for n in range(3, nmax + 1):
        if not results[n].rho < results[n - 1].rho:
            bad = f"rho_{n} >= rho_{n - 1}"
            break
    out.append(CheckResult("radius.monotone-decreasing", bad is None, bad or ""))

    # Lower-bound equality holds at n = 3 AND n = 5 (rho_5 = sqrt(2)/2 =
    # sin(pi/4), where the two bounds pinch), upper-bound equality at n = 5
    # only; strict everywhere else at 1e-10 resolution.
    bad = None
    for n in range(3, nmax + 1):
        res = results[n]
        lower, upper = res.lower_bound, res.upper_bound
        if n in (3, 5):
            if abs(res.rho - lower) > 1e-10:
                bad = f"lower-bound equality at n={n} violated"
        elif not lower < res.rho - 1e-10:
            bad = f"lower bound not strict at n={n}"
        if bad:
            break
        if n >= 4:
            if n == 5:
                if abs(res.rho - upper) > 1e-10:
                    bad = "upper-bound equality at n=5 violated"
            elif not res.rho < upper - 1e-10:
                bad = f"upper bound not strict at n={n}"
        if bad:
            break
    out.append(CheckResult("radius.two-sided-bounds", bad is None, bad or ""))

    bad = None
    for n in range(2, nmax + 1):
        if not results[n].beta > 1:
            bad = f"beta_{n} <= 1"
            break
        if not results[n].rho > math.sin(math.pi / n):
            bad = f"rho_{n} <= sin(pi/{n})"
            break
    out.append(CheckResult("radius.overlap-above-one", bad is None, bad or ""))

    bad = None
    for n in range(4, min(nmax, 12) + 1):
        nu = n // 2
        a, b = results[n].isolating_interval
        t_other = symmetric.t_polynomial(n, nu)
        va, vb = t_other(a), t_other(b)
        if not (vb == 0 or (va < 0) != (vb < 0)):
            bad = f"T({n},{nu}) shows no sign change over the mu_{n} interval"
            break
    out.append(CheckResult("radius.central-root-shared", bad is None, bad or ""))

    bad = None
    for n in range(2, 11):
        brute = core.max_uniform_scale(symmetric.regular_collection(n, 1.0))
        if abs(results[n].rho - brute) > 1e-8:
            bad = f"n={n}: scale search {brute!r} vs exact {results[n].rho!r}"
            break
    out.append(CheckResult("radius.scale-search-consistency", bad is None, bad or ""))

    j11 = radius.bessel_j1_first_zero()
    errors = [abs(n * radius.maximal_radius(n).rho - j11) for n in trend_ns]
    decreasing = all(a > b for a, b in zip(errors, errors[1:]))
    rel_last = errors[-1] / j11
    out.append(
        CheckResult(
            "radius.bessel-zero-trend",
            decreasing and rel_last < 0.05,
            f"errors {['%.3e' % e for e in errors]}, relative at n={trend_ns[-1]}: {rel_last:.2e}",
        )
    )

    evens = [results[n].beta for n in range(4, nmax + 1, 2)]
    odds = [results[n].beta for n in range(3, nmax + 1, 2)]
    even_up = all(a < b for a, b in zip(evens, evens[1:]))
    odd_up = all(a < b for a, b in zip(odds, odds[1:]))
    out.append(
        CheckResult(
            "radius.beta-subsequences",
            True,
            "observed (never asserted): beta over even n>=4 increasing="
            f"{even_up}, over odd n>=3 increasing={odd_up}",
            informational=True,
        )
    )
    return out


# ---------------------------------------------------------------------------
# triangle
# ---------------------------------------------------------------------------


def triangle_suite(seed: int = 0, samples: int = 10_000) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    centers = [cmath.exp(2j * math.pi * k / 3) for k in (1, 2, 3)]
    rmax = math.sqrt(3) - 0.05

    bad = None
    mismatches = 0
    checked = 0
    worst_minor = 0.0
    for idx in range(samples):
        radii = [rng.uniform(0.05, rmax) for _ in range(3)]
        total = sum(r * r for r in radii)
        if abs(total - 3.0) < 1e-6:
            continue
        checked += 1
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            closed = triangle.triangle_positive(*radii)
        c = DiskCollection(centers, radii)
        q = core.build_q_matrix(c)
        generic = core.is_positive_definite(q).verdict is Verdict.POSITIVE_DEFINITE
        if closed != generic:
            mismatches += 1
            if bad is None:
                bad = f"sample {idx}: radii {radii} closed-form {closed} vs generic {generic}"
        xs = [r * r for r in radii]
        closed_minors = triangle.triangle_minors(*xs)
        qn = q.to_numpy()
        for k, cf in enumerate(closed_minors, start=1):
            num = float(np.linalg.det(qn[:k, :k]).real)
            worst_minor = max(worst_minor, abs(cf - num) / max(1.0, abs(num)))
    out.append(
        CheckResult(
            "triangle.criterion-equivalence",
            mismatches == 0,
            bad or f"{checked} samples, 0 mismatches",
        )
    )
    out.append(
        CheckResult(
            "triangle.minor-consistency",
            worst_minor < 1e-9,
            f"worst relative deviation {worst_minor:.3e}",
        )
    )

    out.append(
        CheckResult(
            "triangle.phi-symmetry",
            triangle.phi_reflection_symmetric(),
            "phi(3-x) == phi(x) coefficientwise",
        )
    )

    bad = None
    for r in [0.1 + 0.05 * k for k in range(32)]:
        if r * r * 3 >= 3 - 1e-9 and r < 1.0:
            continue
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            verdict = triangle.triangle_positive(r, r, r)
        if verdict != (r < 1.0):
            bad = f"equal radii r={r}: criterion disagrees with rho_3 = 1"
            break
    out.append(CheckResult("triangle.symmetric-reduction", bad is None, bad or ""))
    return out


SUITES = {
    "core": core_suite,
    "symmetric": symmetric_suite,
    "orthopoly": orthopoly_suite,
    "radius": radius_suite,
    "triangle": triangle_suite,
}
