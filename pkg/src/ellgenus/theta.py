"""Normalized theta building blocks.

Everything is phrased through the normalized factor

    sigma(t) = (v^(1/2) - v^(-1/2)) prod_{n>=1} (1-q^n v)(1-q^n v^(-1)) / (1-q^n)^2

with v = e^(2 pi i t).  The Jacobi theta function is -i q^(1/8) eta(q)^3
times sigma, so ratios with equally many theta factors above and below
equal the corresponding sigma ratios exactly; only such balanced ratios
are ever constructed here.

Arguments of the form t = D/(2 pi i) + a z + eps b z with D a divisor
class enter through v = y^a w^b e^D, where e^D is truncated at D^2.
The exact expansions carry coefficients in the s = y^(1/root_s) (and
r = w^(1/root_r)) tower; a double-precision product formula provides
the independent numeric backend.
"""

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from ellgenus.coeff import SFunc, SPoly
from ellgenus.errors import InvalidTau, LogCanonicalPole, ZeroArgument
from ellgenus.qseries import QSeries

__all__ = ["sigma_pure", "sigma_shifted", "sigma_shifted_reduced",
           "chern_genus_coeffs", "phi_correction", "GradedSeries",
           "theta_numeric", "theta_prime0_numeric", "sigma_numeric",
           "numeric_residue"]


# -- exact layer -----------------------------------------------------------


@lru_cache(maxsize=None)
def _sigma_u(q_order):
    """q-expansion of sigma in the half-argument variable u = v^(1/2).

    Returns a tuple of {u_exponent: int} maps, one per power of q:
    (u - 1/u) prod_{n=1}^{Q} (1 - q^n u^2)(1 - q^n u^-2) * E(q)^-2.
    """
    # E(q)^2 then its series inverse (integer coefficients throughout)
    euler = [0] * (q_order + 1)
    euler[0] = 1
    for n in range(1, q_order + 1):
        for m in range(q_order, n - 1, -1):
            euler[m] -= euler[m - n]
    sq = [sum(euler[i] * euler[m - i] for i in range(m + 1))
          for m in range(q_order + 1)]
    inv = [1] + [0] * q_order
    for m in range(1, q_order + 1):
        inv[m] = -sum(sq[k] * inv[m - k] for k in range(1, m + 1))

    series = [dict() for _ in range(q_order + 1)]
    series[0] = {1: 1, -1: -1}
    for n in range(1, q_order + 1):
        for exp in (2, -2):
            for m in range(q_order, n - 1, -1):
                src = series[m - n]
                dst = series[m]
                for k, c in src.items():
                    dst[k + exp] = dst.get(k + exp, 0) - c
    out = [dict() for _ in range(q_order + 1)]
    for m in range(q_order + 1):
        for j in range(m + 1):
            c = inv[m - j]
            if c:
                for k, v in series[j].items():
                    out[m][k] = out[m].get(k, 0) + c * v
    return tuple(out)


def _exp_check(a, half_root):
    e = Fraction(a) * half_root
    if e.denominator != 1:
        raise ValueError("root order %d incompatible with exponent %s"
                         % (2 * half_root, a))
    return e.numerator


@lru_cache(maxsize=None)
def _sigma_components(a, b, q_order, rs, rr):
    """Exact expansion of sigma at v = y^a w^b e^D, through D^2.

    Returns three QSeries (S0, S1, S2): the coefficients of 1, D and D^2
    in the expansion (the D's own pairing is the caller's business).
    Coefficients are plain SPoly values; the genus pipeline keeps all
    series polynomial until its one final division.
    """
    a = Fraction(a)
    b = Fraction(b)
    sn = _exp_check(a, rs // 2)   # s-exponent per unit u-exponent
    rn = _exp_check(b, rr // 2)   # r-exponent per unit u-exponent
    table = _sigma_u(q_order)
    s0, s1, s2 = [], [], []
    for n in range(q_order + 1):
        t0, t1, t2 = {}, {}, {}
        for k, c in table[n].items():
            key = (sn * k, rn * k)
            t0[key] = t0.get(key, 0) + c
            t1[key] = t1.get(key, 0) + Fraction(c * k, 2)
            t2[key] = t2.get(key, 0) + Fraction(c * k * k, 8)
        s0.append(SPoly.from_terms(t0, rs, rr))
        s1.append(SPoly.from_terms(t1, rs, rr))
        s2.append(SPoly.from_terms(t2, rs, rr))
    return QSeries(s0), QSeries(s1), QSeries(s2)


def sigma_pure(a, q_order, root_s=None, b=0, root_r=2, as_poly=False):
    """sigma at the scalar argument (a + eps b) z, as an exact QSeries.

    Odd in the argument: sigma_pure(-a) == -sigma_pure(a).  Coefficients
    are canonical SFunc values unless the perturbation part b is nonzero
    (or as_poly is set), in which case they stay SPoly.
    """
    a = Fraction(a)
    b = Fraction(b)
    if root_s is None:
        root_s = 2 * a.denominator
    s0, _, _ = _sigma_components(a, b, q_order, root_s, root_r)
    if as_poly or b:
        return s0
    return s0.map(SFunc.from_poly)


class GradedSeries:
    """Element of QSeries tensor (degree <= 2 cohomology of the model).

    p1 maps basis keys (curve labels or "K") to QSeries; p2 is the
    multiple of the point class.  Degree-1 squares resolve through the
    model's intersection pairing.
    """

    __slots__ = ("model", "p0", "p1", "p2")

    def __init__(self, model, p0, p1, p2):
        self.model = model
        self.p0 = p0
        self.p1 = {k: v for k, v in p1.items()}
        self.p2 = p2

    @classmethod
    def scalar(cls, model, qs):
        zero = qs * 0
        return cls(model, qs, {}, zero)

    def __mul__(self, other):
        if isinstance(other, GradedSeries):
            pair = self.model.pairing
            p0 = self.p0 * other.p0
            p1 = {k: v * other.p0 for k, v in self.p1.items()}
            for k, v in other.p1.items():
                w = v * self.p0
                p1[k] = p1[k] + w if k in p1 else w
            p2 = self.p0 * other.p2 + self.p2 * other.p0
            for k1, v1 in self.p1.items():
                for k2, v2 in other.p1.items():
                    g = pair(k1, k2)
                    if g:
                        p2 = p2 + (v1 * v2) * Fraction(g)
            return GradedSeries(self.model, p0, p1, p2)
        # scalar QSeries (or coefficient) multiplies all parts
        return GradedSeries(self.model, self.p0 * other,
                            {k: v * other for k, v in self.p1.items()},
                            self.p2 * other)

    __rmul__ = __mul__

    def __add__(self, other):
        p1 = dict(self.p1)
        for k, v in other.p1.items():
            p1[k] = p1[k] + v if k in p1 else v
        return GradedSeries(self.model, self.p0 + other.p0, p1,
                            self.p2 + other.p2)

    def __sub__(self, other):
        return self + (other * Fraction(-1))

    def integrate(self):
        """Integration over the surface extracts the point-class part."""
        return self.p2


def _pair_self(model, div):
    dd = Fraction(0)
    keys = list(div)
    for i, k1 in enumerate(keys):
        for k2 in keys[i:]:
            g = Fraction(model.pairing(k1, k2))
            dd += div[k1] * div[k2] * g * (1 if k1 == k2 else 2)
    return dd


def sigma_shifted(model, div, a, q_order, root_s, b=0, root_r=2,
                  as_poly=False):
    """sigma at D/(2 pi i) + (a + eps b) z for a degree-1 class D.

    ``div`` is a curve label or a {basis key: Fraction} vector.  The
    scalar part must not vanish (a != 0, or b != 0 in the perturbed
    layer); otherwise the leading term is nilpotent and not invertible.
    The degree-0 part equals sigma_pure(a).
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 and b == 0:
        raise ZeroArgument("sigma shift needs a nonzero scalar argument")
    if isinstance(div, str):
        div = {div: Fraction(1)}
    div = {k: Fraction(v) for k, v in div.items() if v}
    s0, s1, s2 = _sigma_components(a, b, q_order, root_s, root_r)
    if not (as_poly or b):
        s0 = s0.map(SFunc.from_poly)
        s1 = s1.map(SFunc.from_poly)
        s2 = s2.map(SFunc.from_poly)
    p1 = {k: s1 * v for k, v in div.items()}
    p2 = s2 * _pair_self(model, div)
    return GradedSeries(model, s0, p1, p2)


def sigma_shifted_reduced(model, div, q_order, root_s, as_poly=False):
    """Expansion of sigma(D/(2 pi i))/D, the unit left after removing the
    nilpotent leading factor (used when the scalar argument vanishes)."""
    if isinstance(div, str):
        div = {div: Fraction(1)}
    div = {k: Fraction(v) for k, v in div.items() if v}
    u2 = _w2_unit(q_order, root_s)
    one = QSeries.constant(SPoly.const(1, root_s, 2), q_order)
    if not as_poly:
        u2 = u2.map(SFunc.from_poly)
        one = QSeries.one(q_order, root_s)
    return GradedSeries(model, one, {}, u2 * _pair_self(model, div))


@lru_cache(maxsize=None)
def _w2_unit(q_order, rs):
    """W^2 coefficient of sigma(W-argument)/W: 1/24 - sum sigma_1(m) q^m."""
    out = [SPoly.const(Fraction(1, 24), rs, 2)]
    for m in range(1, q_order + 1):
        s1 = sum(d for d in range(1, m + 1) if m % d == 0)
        out.append(SPoly.const(-s1, rs, 2))
    return QSeries(out)


@lru_cache(maxsize=None)
def _chern_poly(q_order, root_s):
    n0, n1, n2 = _sigma_components(Fraction(-1), Fraction(0), q_order,
                                   root_s, 2)
    u2 = _w2_unit(q_order, root_s)
    return n0, n1, n2 - n0 * u2


def chern_genus_coeffs(q_order, root_s=2, as_poly=False):
    """Coefficients (Phi0, Phi1, Phi2) of the Chern-root factor.

    Phi(W) = W sigma(W-arg shifted by -z) / sigma(W-arg), expanded
    through W^2; the smooth-surface integrand is then
    Phi0^2 + Phi0*Phi1*c1 + Phi1^2*c2 + Phi0*Phi2*(c1^2 - 2 c2).
    """
    p0, p1, p2 = _chern_poly(q_order, root_s)
    if as_poly:
        return p0, p1, p2
    return (p0.map(SFunc.from_poly), p1.map(SFunc.from_poly),
            p2.map(SFunc.from_poly))


def phi_correction(a, q_order, root_s=None):
    """The correction factor sigma((a+2)z) sigma(az) / sigma((a+1)z)^2."""
    a = Fraction(a)
    if a == -1:
        raise LogCanonicalPole("correction factor has a pole at coefficient -1")
    if root_s is None:
        root_s = 2 * a.denominator
    num = (sigma_pure(a + 2, q_order, root_s, as_poly=True)
           * sigma_pure(a, q_order, root_s, as_poly=True))
    den = sigma_pure(a + 1, q_order, root_s, as_poly=True)
    return num.map(SFunc.from_poly).divide((den * den).map(SFunc.from_poly))


# -- numeric backend -------------------------------------------------------


def _check_tau(tau):
    tau = complex(tau)
    if not tau.imag > 0:
        raise InvalidTau("tau must have positive imaginary part")
    return tau


def _product_terms(absq, tol):
    if absq <= 0:
        return 1
    n = int(math.log(max(tol, 1e-300)) / math.log(absq)) + 2
    return max(4, min(n, 10000))


def theta_numeric(t, tau, tol=1e-18):
    """Jacobi theta via the triple product, truncated deterministically
    once |q|^n drops below tol."""
    tau = _check_tau(tau)
    t = complex(t)
    q = cmath.exp(2j * cmath.pi * tau)
    y = cmath.exp(2j * cmath.pi * t)
    total = cmath.exp(0.25j * cmath.pi * tau) * 2 * cmath.sin(cmath.pi * t)
    qn = 1.0 + 0j
    for _ in range(1, _product_terms(abs(q), tol) + 1):
        qn *= q
        total *= (1 - qn) * (1 - qn * y) * (1 - qn / y)
    return total


def theta_prime0_numeric(tau, tol=1e-18):
    """d theta / dt at t = 0: 2 pi q^(1/8) prod (1-q^n)^3."""
    tau = _check_tau(tau)
    q = cmath.exp(2j * cmath.pi * tau)
    total = 2 * cmath.pi * cmath.exp(0.25j * cmath.pi * tau)
    qn = 1.0 + 0j
    for _ in range(1, _product_terms(abs(q), tol) + 1):
        qn *= q
        total *= (1 - qn) ** 3
    return total


def sigma_numeric(a, z, tau, tol=1e-18):
    """Numeric sigma at argument a*z (the normalized theta ratio backend)."""
    tau = _check_tau(tau)
    q = cmath.exp(2j * cmath.pi * tau)
    vh = cmath.exp(1j * cmath.pi * complex(a) * complex(z))  # v^(1/2)
    v = vh * vh
    total = vh - 1 / vh
    qn = 1.0 + 0j
    for _ in range(1, _product_terms(abs(q), tol) + 1):
        qn *= q
        total *= (1 - qn * v) * (1 - qn / v) / (1 - qn) ** 2
    return total


def numeric_residue(f, center=0j, radius=0.1, samples=512):
    """(1/2 pi i) contour integral of f on a circle, by the trapezoid rule.

    For f holomorphic on the contour the error decays exponentially in
    the sample count; summation order is fixed for determinism.
    """
    total = 0j
    for k in range(samples):
        w = cmath.exp(2j * cmath.pi * k / samples)
        t = center + radius * w
        total += f(t) * (t - center)
    return total / samples
