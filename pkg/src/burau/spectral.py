"""Complex specializations of Laurent matrices, characteristic polynomials,
simultaneous root finding, unit-circle spectral-radius sweeps, and the
resultant certificate for unit-circle roots.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .braid import BraidWord
from .foxburau import burau_matrix, reduced_burau
from .laurent import BivariatePoly, LaurentMatrix, charpoly

MAX_COMPLEX_DIM = 64
LEADING_EPS = 1e-12

_MACHINE_EPS = 2.220446049250313e-16
_CLUSTER_RADIUS = 6e-2
_CLUSTER_GATE = 1e-10


@dataclass(frozen=True)
class Tolerances:
    """All numerical tolerances in one place, overridable from the CLI."""

    root_update: float = 1e-13
    comparison: float = 1e-9
    certificate: float = 1e-8
    refine_interval: float = 1e-10


DEFAULT_TOLERANCES = Tolerances()


class RootFindingError(RuntimeError):
    """Simultaneous iteration failed to converge; carries the best iterates."""

    def __init__(self, message: str, iterates, residuals):
        super().__init__(message)
        self.iterates = tuple(iterates)
        self.residuals = tuple(residuals)


@dataclass(frozen=True)
class ComplexPolynomial:
    """Dense complex polynomial, coefficients ascending; the leading
    coefficient is kept above a fixed magnitude floor."""

    coeffs: tuple

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("ComplexPolynomial needs at least a constant term")
        if len(self.coeffs) > 1 and abs(self.coeffs[-1]) <= LEADING_EPS:
            raise ValueError("leading coefficient below tolerance")

    @staticmethod
    def make(coeffs) -> "ComplexPolynomial":
        items = [complex(c) for c in coeffs]
        while len(items) > 1 and abs(items[-1]) <= LEADING_EPS:
            items.pop()
        if not items:
            items = [0j]
        return ComplexPolynomial(tuple(items))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def render(self, var: str = "X") -> str:
        pieces = []
        for k, c in enumerate(self.coeffs):
            if c == 0 and len(self.coeffs) > 1:
                continue
            pieces.append(_complex_piece(c, k, var))
        if not pieces:
            return "0"
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def _complex_piece(c: complex, k: int, var: str):
    xpart = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
    if c.imag == 0:
        sign = "-" if c.real < 0 else "+"
        mag = abs(c.real)
        if xpart and mag == 1:
            return sign, xpart
        body = f"{mag:.12g}"
        if xpart:
            body += f"*{xpart}"
        return sign, body
    body = f"({c.real:.12g}{'+' if c.imag >= 0 else '-'}{abs(c.imag):.12g}j)"
    if xpart:
        body += f"*{xpart}"
    return "+", body


def specialize(m: LaurentMatrix, t: complex) -> np.ndarray:
    """Entrywise evaluation at a nonzero complex number."""
    if t == 0:
        raise ValueError("cannot specialize at t = 0")
    n = m.dim
    out = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            out[i, j] = m.entry(i, j).evaluate(t)
    if not np.all(np.isfinite(out.view(float))):
        raise ValueError("specialization produced non-finite entries")
    return out


def specialize_bivariate(p: BivariatePoly, t: complex) -> ComplexPolynomial:
    """Evaluate every Laurent coefficient at t."""
    if t == 0:
        raise ValueError("cannot specialize at t = 0")
    if p.is_zero:
        return ComplexPolynomial.make([0j])
    return ComplexPolynomial.make(p.coefficients_at(t))


def char_poly_complex(m: np.ndarray) -> ComplexPolynomial:
    """Characteristic polynomial det(X I - m) of a dense complex matrix.

    Hessenberg reduction followed by the leading-minor recurrence; the result
    is exactly monic by construction.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("matrix must be square")
    if n > MAX_COMPLEX_DIM:
        raise ValueError(f"dimension {n} exceeds limit {MAX_COMPLEX_DIM}")
    if n == 0:
        return ComplexPolynomial.make([1.0])
    h = scipy.linalg.hessenberg(m)
    minors = [[1.0 + 0j]]
    for k in range(1, n + 1):
        prev = minors[k - 1]
        # (X - h[k-1,k-1]) * prev
        poly = [0j] * (len(prev) + 1)
        for idx, c in enumerate(prev):
            poly[idx + 1] += c
            poly[idx] -= h[k - 1, k - 1] * c
        prod = 1.0 + 0j
        for i in range(k - 1, 0, -1):
            prod *= h[i, i - 1]
            factor = h[i - 1, k - 1] * prod
            if factor != 0:
                lower = minors[i - 1]
                for idx, c in enumerate(lower):
                    poly[idx] -= factor * c
        minors.append(poly)
    return ComplexPolynomial.make(minors[n])


def roots(p: ComplexPolynomial,
          tolerances: Tolerances = DEFAULT_TOLERANCES) -> list:
    """All complex roots with multiplicity, by Aberth-Ehrlich iteration.

    Deterministic initial guesses on a circle whose radius comes from the
    Cauchy coefficient bound.  A root is accepted when its update falls under
    the update tolerance or its residual reaches the backward-error floor
    (multiple roots stall above the update tolerance but are numerically
    exact roots).  Clusters that agree with a multiple root are replaced by
    their centroid, which restores full accuracy at degenerate points.
    """
    if p.degree < 1:
        raise ValueError("root finding needs degree >= 1")
    coeffs = list(p.coeffs)
    zero_roots = 0
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs.pop(0)
        zero_roots += 1
    deg = len(coeffs) - 1
    if deg == 0:
        return [0j] * zero_roots
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]

    radius = 1.0 + max(abs(c) for c in monic[:-1])
    offset = math.pi / (2 * deg) + 0.3
    zs = [radius * cmath.exp(1j * (2 * math.pi * k / deg + offset))
          for k in range(deg)]
    converged = [False] * deg
    backward_floor = 16 * (deg + 1) * _MACHINE_EPS

    for _ in range(500):
        for k in range(deg):
            if converged[k]:
                continue
            pv, dv = _horner_pair(monic, zs[k])
            if abs(pv) <= backward_floor * _coeff_scale(monic, abs(zs[k])):
                converged[k] = True
                continue
            if dv == 0:
                zs[k] += (1e-6 + 1e-6j) * (1 + abs(zs[k]))
                continue
            newton = pv / dv
            s = 0j
            for j in range(deg):
                if j == k:
                    continue
                diff = zs[k] - zs[j]
                if diff == 0:
                    diff = (1e-12 + 1e-12j) * (1 + abs(zs[k]))
                s += 1 / diff
            denom = 1 - newton * s
            step = newton if denom == 0 else newton / denom
            zs[k] -= step
            if abs(step) < tolerances.root_update * (1 + abs(zs[k])):
                converged[k] = True
        if all(converged):
            break
    else:
        residuals = [abs(_horner_pair(monic, z)[0]) for z in zs]
        bad = [k for k in range(deg)
               if residuals[k] > backward_floor * _coeff_scale(monic, abs(zs[k]))]
        if bad:
            raise RootFindingError(
                f"Aberth iteration did not converge for {len(bad)} of {deg} roots",
                zs, residuals)

    zs = _merge_root_clusters(zs, monic)
    found = [0j] * zero_roots + zs
    found.sort(key=lambda z: (z.real, z.imag))
    return found


def _horner_pair(monic, z: complex):
    pv = 0j
    dv = 0j
    for c in reversed(monic):
        dv = dv * z + pv
        pv = pv * z + c
    return pv, dv


def _coeff_scale(monic, az: float) -> float:
    scale = 0.0
    power = 1.0
    for c in monic:
        scale += abs(c) * power
        power *= az
    return max(scale, 1e-300)


def _merge_root_clusters(zs, monic):
    """Replace groups of nearby iterates by their centroid when the centroid
    is itself a numerical root (true multiple root); leave genuinely distinct
    close roots untouched."""
    n = len(zs)
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            tol = _CLUSTER_RADIUS * (1 + min(abs(zs[i]), abs(zs[j])))
            if abs(zs[i] - zs[j]) <= tol:
                parent[find(i)] = find(j)
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = list(zs)
    for members in groups.values():
        if len(members) < 2:
            continue
        centroid = sum(zs[i] for i in members) / len(members)
        residual = abs(_horner_pair(monic, centroid)[0])
        if residual <= _CLUSTER_GATE * _coeff_scale(monic, abs(centroid)):
            polished = _polish_multiple_root(monic, centroid, len(members))
            for i in members:
                out[i] = polished
    return out


def _polish_multiple_root(monic, z: complex, multiplicity: int) -> complex:
    """Newton refinement of a multiplicity-m root on the (m-1)-th derivative,
    where the root is simple; early-stopped cluster centroids are biased by
    the residual stopping region, this removes the bias."""
    d = list(monic)
    for _ in range(multiplicity - 1):
        d = [k * c for k, c in enumerate(d)][1:]
    dd = [k * c for k, c in enumerate(d)][1:]
    candidate = z
    for _ in range(50):
        pv = _poly_eval(d, candidate)
        dv = _poly_eval(dd, candidate)
        if dv == 0:
            break
        step = pv / dv
        candidate -= step
        if abs(step) <= 1e-15 * (1 + abs(candidate)):
            break
    drifted = abs(candidate - z) > _CLUSTER_RADIUS * (1 + abs(z))
    bad = abs(_horner_pair(monic, candidate)[0]) > \
        _CLUSTER_GATE * _coeff_scale(monic, abs(candidate))
    if drifted or bad:
        return z
    return candidate


def _poly_eval(coeffs, z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def spectral_radius(m: np.ndarray,
                    tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Largest root modulus of the characteristic polynomial."""
    m = np.asarray(m, dtype=complex)
    if m.shape[0] == 0:
        return 0.0
    poly = char_poly_complex(m)
    return max(abs(r) for r in roots(poly, tolerances))


@dataclass(frozen=True)
class SweepResult:
    """Spectral radii over a uniform unit-circle grid plus a refined maximum."""

    grid: int
    samples: tuple
    theta_star: float
    t_star: complex
    radius_star: float
    refinement_iterations: int
    skipped: tuple


def sweep_unit_circle(m: LaurentMatrix, grid: int = 1024, refine: bool = True,
                      tolerances: Tolerances = DEFAULT_TOLERANCES) -> SweepResult:
    """Maximum spectral radius of m(t) over the unit circle.

    Evaluates the grid t = exp(2 pi i k / grid), then golden-section refines
    around each strict local maximum of the (continuous) radius function.
    Root-finder failures at isolated grid points are skipped, not fatal.
    """
    if grid < 8:
        raise ValueError("grid must be at least 8")
    if m.dim <= 12:
        bi = charpoly(m)

        def radius_at(theta: float) -> float:
            poly = specialize_bivariate(bi, cmath.exp(1j * theta))
            return max(abs(r) for r in roots(poly, tolerances))
    else:
        def radius_at(theta: float) -> float:
            return spectral_radius(specialize(m, cmath.exp(1j * theta)), tolerances)

    thetas = [2 * math.pi * k / grid for k in range(grid)]
    values: list = []
    samples = []
    skipped = []
    for k, theta in enumerate(thetas):
        try:
            value = radius_at(theta)
        except RootFindingError as exc:
            values.append(None)
            skipped.append((k, str(exc)))
            continue
        values.append(value)
        samples.append((theta, value))

    best_theta, best_value = min(
        ((theta, value) for theta, value in samples),
        key=lambda item: (-item[1], item[0]),
        default=(0.0, 0.0))

    iterations = 0
    if refine and samples:
        step = 2 * math.pi / grid
        for k in range(grid):
            v = values[k]
            if v is None:
                continue
            left = values[(k - 1) % grid]
            right = values[(k + 1) % grid]
            lo = -math.inf if left is None else left
            hi = -math.inf if right is None else right
            if v >= lo and v >= hi and (v > lo or v > hi):
                theta, value, its = _golden_section_max(
                    radius_at, thetas[k] - step, thetas[k] + step,
                    tolerances.refine_interval)
                iterations += its
                theta %= 2 * math.pi
                if value > best_value or (value == best_value and theta < best_theta):
                    best_theta, best_value = theta, value

    return SweepResult(
        grid=grid,
        samples=tuple(samples),
        theta_star=best_theta,
        t_star=cmath.exp(1j * best_theta),
        radius_star=best_value,
        refinement_iterations=iterations,
        skipped=tuple(skipped),
    )


_INV_PHI = (math.sqrt(5.0) - 1) / 2


def _golden_section_max(f, a: float, b: float, interval_tol: float):
    c = b - (b - a) * _INV_PHI
    d = a + (b - a) * _INV_PHI
    fc = _safe_eval(f, c)
    fd = _safe_eval(f, d)
    iterations = 0
    while b - a > interval_tol:
        iterations += 1
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INV_PHI
            fc = _safe_eval(f, c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INV_PHI
            fd = _safe_eval(f, d)
    theta = (a + b) / 2
    return theta, max(_safe_eval(f, theta), fc, fd), iterations


def _safe_eval(f, theta: float) -> float:
    try:
        return f(theta)
    except RootFindingError:
        return -math.inf


_SPOT_POINTS = (
    ("t=-1", -1.0 + 0j),
    ("t=exp(2*pi*i/3)", cmath.exp(2j * math.pi / 3)),
    ("t=exp(2*pi*i/4)", 1j),
    ("t=exp(2*pi*i/5)", cmath.exp(2j * math.pi / 5)),
    ("t=exp(2*pi*i/6)", cmath.exp(1j * math.pi / 3)),
)


@dataclass(frozen=True)
class EntropyReport:
    """Entropy lower bound ln(max(1, R*)) with the sweep behind it."""

    strands: int
    sweep: SweepResult
    bound: float
    spot_values: tuple


def entropy_lower_bound(w: BraidWord, grid: int = 1024, refine: bool = True,
                        tolerances: Tolerances = DEFAULT_TOLERANCES) -> EntropyReport:
    """Lower bound for the topological entropy of any homeomorphism inducing
    the braid: ln of the unit-circle supremum of the Burau spectral radius."""
    full = burau_matrix(w)
    sweep = sweep_unit_circle(full.matrix, grid, refine, tolerances)
    spots = []
    for label, t in _SPOT_POINTS:
        value = spectral_radius(specialize(full.matrix, t), tolerances)
        spots.append((label, value))
    bound = math.log(max(1.0, sweep.radius_star))
    return EntropyReport(strands=w.strands, sweep=sweep, bound=bound,
                         spot_values=tuple(spots))


def reciprocal_conjugate(p: ComplexPolynomial) -> ComplexPolynomial:
    """Coefficients reversed and conjugated."""
    if p.degree < 1:
        raise ValueError("reciprocal conjugate needs degree >= 1")
    return ComplexPolynomial.make(tuple(c.conjugate() for c in reversed(p.coeffs)))


def resultant(p: ComplexPolynomial, q: ComplexPolynomial) -> complex:
    """Determinant of the Sylvester matrix of p and q."""
    if p.degree < 1 or q.degree < 1:
        raise ValueError("resultant needs two polynomials of degree >= 1 "
                         "with nondegenerate leading coefficients")
    m = p.degree
    n = q.degree
    size = m + n
    s = np.zeros((size, size), dtype=complex)
    p_desc = list(reversed(p.coeffs))
    q_desc = list(reversed(q.coeffs))
    for r in range(n):
        s[r, r:r + m + 1] = p_desc
    for r in range(m):
        s[n + r, r:r + n + 1] = q_desc
    return complex(np.linalg.det(s))


@dataclass(frozen=True)
class UnitRootCertificate:
    """Outcome of the unit-circle root test for one polynomial.

    ``fired`` is the necessary condition: the resultant of p with its
    reciprocal conjugate vanishes within tolerance.  ``min_unit_distance`` is
    the direct check min | |root| - 1 |.
    """

    resultant_abs: float | None
    fired: bool
    min_unit_distance: float
    verdict: str


def unit_circle_root_certificate(p: ComplexPolynomial, tol: float | None = None,
                                 tolerances: Tolerances = DEFAULT_TOLERANCES
                                 ) -> UnitRootCertificate:
    """Necessary-condition screen plus direct root-modulus check.

    Verdicts: "has unit root" when the direct check finds one, "no unit root"
    when the screen does not fire or the direct check clearly refutes it, and
    "inconclusive" when the screen fires and the closest root modulus sits in
    the numerical gray zone between the two.  A vanishing resultant alone is
    never conclusive: any root multiset closed under z -> 1/conj(z), such as
    a real palindromic polynomial, fires the screen with no root on the
    circle.
    """
    if p.degree < 1:
        raise ValueError("certificate needs degree >= 1")
    if tol is None:
        tol = tolerances.certificate
    q = reciprocal_conjugate(p)
    if q.degree >= 1:
        res_abs = abs(resultant(p, q))
        fired = res_abs < tol
    else:
        res_abs = None
        fired = False
    min_distance = min(abs(abs(r) - 1) for r in roots(p, tolerances))
    refute_margin = max(1e-6, 10 * tolerances.comparison)
    if min_distance <= tolerances.comparison:
        verdict = "has unit root"
    elif fired and min_distance <= refute_margin:
        verdict = "inconclusive"
    else:
        verdict = "no unit root"
    return UnitRootCertificate(resultant_abs=res_abs, fired=fired,
                               min_unit_distance=min_distance, verdict=verdict)


@dataclass(frozen=True)
class GapReport:
    """Grid evidence that a growth rate stays strictly above the unit-circle
    spectral-radius supremum."""

    lam: float
    grid: int
    sweep: SweepResult
    min_resultant_abs: float
    min_resultant_theta: float
    fired_points: tuple
    unit_root_points: tuple
    inconclusive_points: tuple
    skipped: tuple
    gap_holds: bool


def strict_gap_check(w: BraidWord, lam: float, grid: int = 4096,
                     refine: bool = True,
                     tolerances: Tolerances = DEFAULT_TOLERANCES) -> GapReport:
    """Check lam > sup of the Burau spectral radius over the unit circle.

    For each grid point t the reduced characteristic polynomial is specialized
    at t, rescaled by substituting lam*X for X, and screened for unit-circle
    roots (a root there would witness an eigenvalue of modulus lam).  Also
    reports the full-matrix sweep maximum against lam.
    """
    if lam <= 1:
        raise ValueError("lam must exceed 1")
    reduced = reduced_burau(w)
    bi = charpoly(reduced.matrix)
    full = burau_matrix(w)
    sweep = sweep_unit_circle(full.matrix, grid, refine, tolerances)

    min_res = math.inf
    min_res_theta = 0.0
    fired = []
    unit_root = []
    inconclusive = []
    skipped = []
    for k in range(grid):
        theta = 2 * math.pi * k / grid
        t = cmath.exp(1j * theta)
        poly = specialize_bivariate(bi, t)
        scaled = ComplexPolynomial.make(
            tuple(c * lam ** idx for idx, c in enumerate(poly.coeffs)))
        try:
            cert = unit_circle_root_certificate(scaled, tolerances.certificate,
                                                tolerances)
        except RootFindingError as exc:
            skipped.append((k, str(exc)))
            continue
        if cert.resultant_abs is not None and cert.resultant_abs < min_res:
            min_res = cert.resultant_abs
            min_res_theta = theta
        if cert.fired:
            fired.append(theta)
        if cert.verdict == "has unit root":
            unit_root.append(theta)
        elif cert.verdict == "inconclusive":
            inconclusive.append(theta)

    gap_holds = sweep.radius_star < lam and not unit_root
    return GapReport(
        lam=lam,
        grid=grid,
        sweep=sweep,
        min_resultant_abs=min_res,
        min_resultant_theta=min_res_theta,
        fired_points=tuple(fired),
        unit_root_points=tuple(unit_root),
        inconclusive_points=tuple(inconclusive),
        skipped=tuple(skipped),
        gap_holds=gap_holds,
    )
