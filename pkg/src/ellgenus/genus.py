"""Singular elliptic genus of a surface/divisor pair, with its oracles.

The genus of a configuration sum(a_i C_i) on a surface is the integral
of a balanced product of sigma factors (one ratio per curve plus the
Chern-root factor), corrected by the combinatorial bridge terms of the
resolution graph.  Everything is exact: the value is a truncated
q-series whose coefficients are canonical rational functions of
s = y^(1/2N).

Independent oracles implemented here: the stringy chi_y genus in the
style of Batyrev and Veys, localization on P^1, the perturbation-limit
construction (exact in w = y^eps), numeric residue identities and a
numeric lattice-holomorphy probe.
"""

from fractions import Fraction
from math import lcm as ilcm

from ellgenus.coeff import RFunc, SFunc, SPoly
from ellgenus.errors import (LogCanonicalPole, PoleAtOne, TDependence,
                             VeysHypothesisViolated)
from ellgenus.graph import (InterpretationFlags, bridge_phi_argument,
                            combinatorial_sets, graph_from_model, is_bridge)
from ellgenus.qseries import QSeries
from ellgenus.surface import K, blowup, solve_discrepancies
from ellgenus.theta import (GradedSeries, chern_genus_coeffs, numeric_residue,
                            phi_correction, sigma_pure, sigma_shifted,
                            theta_numeric, theta_prime0_numeric)

__all__ = ["GenusResult", "common_root_order", "ell_naive", "correction_sum",
           "ell", "ell_singular", "chi_y", "hirzebruch_chi_y",
           "ambient_e_from_chern", "veys_chi_y", "localization_p1",
           "localization_p1_exact", "perturbed_ell", "perturbed_limit",
           "verify_blowup_invariance", "verify_residue_case",
           "verify_holomorphy", "classify_point"]


MINUS_ONE = Fraction(-1)


def common_root_order(coeffs):
    """Root order 2N fixed once per computation: N = lcm of coefficient
    denominators (the shifts a, a+1, a+2 and the constants 1, 2, 3 add
    no new denominators)."""
    n = 1
    for a in coeffs.values():
        n = ilcm(n, Fraction(a).denominator)
    return 2 * n


# -- the naive (integral) part ---------------------------------------------


def _naive_fraction(model, coeffs, q_order, root_s, bmap=None, root_r=2):
    """The integrand as one exact fraction.

    Returns (big, w): SPoly-coefficient QSeries with the degree-2 part
    of the integrand equal to big / w as a series quotient.  Balanced by
    construction: every curve contributes two sigma factors above and
    two below, the Chern factor likewise.
    """
    Q = q_order
    p0, p1_, p2_ = chern_genus_coeffs(Q, root_s, as_poly=True)
    c1sq, c2 = model.c1sq, model.c2
    num = GradedSeries(model, p0 * p0, {K: -(p0 * p1_)},
                       p1_ * p1_ * Fraction(c2)
                       + p0 * p2_ * Fraction(c1sq - 2 * c2))
    one = QSeries.constant(SPoly.const(1, root_s, root_r), Q)
    den = GradedSeries.scalar(model, one)
    n_sig, d_sig = 2, 2
    for c in model.curves:
        a = Fraction(coeffs.get(c.label, 0))
        b = Fraction(0) if bmap is None else Fraction(bmap.get(c.label, 0))
        if a == 0 and b == 0:
            continue
        if a == MINUS_ONE and bmap is None:
            n1 = sigma_shifted(model, c.label, 2, Q, root_s, as_poly=True)
            n2 = sigma_pure(1, Q, root_s, as_poly=True)
            d1 = sigma_shifted(model, c.label, 1, Q, root_s, as_poly=True)
            d2 = sigma_pure(2, Q, root_s, as_poly=True)
        else:
            if a == MINUS_ONE and b == 0:
                raise ValueError(
                    "curve %r has coefficient -1 and perturbation weight 0"
                    % c.label)
            n1 = sigma_shifted(model, c.label, -(a + 1), Q, root_s,
                               b=-b, root_r=root_r, as_poly=True)
            n2 = sigma_pure(1, Q, root_s, as_poly=True)
            d1 = sigma_shifted(model, c.label, -1, Q, root_s, as_poly=True)
            d2 = sigma_pure(a + 1, Q, root_s, b=b, root_r=root_r,
                            as_poly=True)
        num = num * n1 * n2
        den = den * d1 * d2
        n_sig += 2
        d_sig += 2
    assert n_sig == d_sig, "unbalanced sigma ratio"
    # (D0 + D1 + D2)^-1 = (D0^2 - D0 D1 + D1.D1 - D0 D2) / D0^3
    d0, d1v, d2s = den.p0, den.p1, den.p2
    d0sq = d0 * d0
    adj_p2 = -(d0 * d2s)
    pair = model.pairing
    keys = list(d1v)
    for i, k1 in enumerate(keys):
        for k2 in keys[i:]:
            g = pair(k1, k2)
            if g:
                term = (d1v[k1] * d1v[k2]) * Fraction(g * (1 if k1 == k2 else 2))
                adj_p2 = adj_p2 + term
    adj = GradedSeries(model, d0sq, {k: -(d0 * v) for k, v in d1v.items()},
                       adj_p2)
    big = (num * adj).p2
    return big, d0sq * d0


def ell_naive(model, coeffs, q_order, root_s=None):
    """The naive genus: the sigma-factor integral without corrections.

    Coefficient-0 curves contribute the identity factor and may appear
    or not without changing the value.
    """
    if root_s is None:
        root_s = common_root_order(coeffs)
    big, w = _naive_fraction(model, coeffs, q_order, root_s)
    return big.map(SFunc.from_poly).divide(w.map(SFunc.from_poly))


# -- combinatorial correction ----------------------------------------------


def correction_sum(graph, q_order, flags=None, root_s=None):
    """Bridge/connectivity correction added to the naive genus.

    Per-coefficient term (|S_a| - sum_{v in B'_a}(m_v - 1)) phi(a)
    (default reading; the 'alt' flag reads |S_a| - (sum m_v) - 1),
    plus m_v phi(a_v) once per bridge, plus d phi(1).
    """
    flags = flags or InterpretationFlags()
    if root_s is None:
        root_s = common_root_order({v.name: v.a for v in graph.vertices})
    S, R, B, Bp, d = combinatorial_sets(graph, flags)
    total = QSeries.zero(q_order, root_s)
    for a in sorted(set(S) | set(Bp)):
        if a == MINUS_ONE:
            raise LogCanonicalPole("correction family indexed by -1")
        count = Fraction(len(S.get(a, ())))
        bps = Bp.get(a, ())
        if flags.correction == "default":
            count -= sum(graph.vertex(v).m - 1 for v in bps)
        elif bps:
            count -= sum(graph.vertex(v).m for v in bps) + 1
        if count:
            total = total + phi_correction(a, q_order, root_s) * count
    for name in sorted(graph.names()):
        if not is_bridge(graph, name):
            continue
        arg = bridge_phi_argument(graph, name)
        if arg is None:
            continue
        total = total + phi_correction(arg, q_order, root_s) * Fraction(
            graph.vertex(name).m)
    if d:
        total = total + phi_correction(1, q_order, root_s) * Fraction(d)
    return total


# -- the genus and its q = 0 specialization --------------------------------


class GenusResult:
    """A computed genus: exact series, root order and configuration echo."""

    __slots__ = ("series", "root_order", "metadata")

    def __init__(self, series, root_order, metadata):
        self.series = series
        self.root_order = root_order
        self.metadata = metadata

    def regular_at_s1(self):
        """Per-coefficient flags: denominator nonzero at s = 1."""
        out = []
        for c in self.series.coeffs:
            try:
                c.eval_s1()
                out.append(True)
            except PoleAtOne:
                out.append(False)
        return out

    def render(self):
        return self.series.render()


def ell(model, coeffs, q_order=5, flags=None):
    """Full genus: naive integral plus the graph correction."""
    flags = flags or InterpretationFlags()
    coeffs = {k: Fraction(v) for k, v in coeffs.items()}
    root_s = common_root_order(coeffs)
    series = ell_naive(model, coeffs, q_order, root_s)
    graph = graph_from_model(model, coeffs)
    corr = correction_sum(graph, q_order, flags, root_s)
    series = series + corr
    meta = {
        "coeffs": dict(coeffs),
        "q_order": q_order,
        "flags": flags.describe(),
        "c1sq": model.c1sq,
        "c2": model.c2,
    }
    res = GenusResult(series, root_s, meta)
    meta["regular_at_s1"] = res.regular_at_s1()
    return res


def ell_singular(model, q_order=5, flags=None, extra_coeffs=None):
    """Genus of the contraction: solve discrepancies on the exceptional
    curves, give other curves coefficient 0 unless supplied, then ell."""
    coeffs = solve_discrepancies(model)
    if extra_coeffs:
        for k, v in extra_coeffs.items():
            if k not in coeffs:
                coeffs[k] = Fraction(v)
    return ell(model, coeffs, q_order, flags)


def chi_y(res):
    """y times the q^0 coefficient: the chi_{-y} specialization."""
    c0 = res.series.coefficient(0)
    y = SFunc.from_poly(SPoly.mono(1, res.root_order, 0, res.root_order, 2))
    return c0 * y


def hirzebruch_chi_y(c1sq, c2, root_s=2):
    """chi_{-y} of a smooth surface from its Chern numbers, as an SFunc:
    chi^0 - chi^1 y + chi^2 y^2 with chi^0 = chi^2 = (c1^2+c2)/12 and
    chi^1 = (c1^2-5c2)/6."""
    chi0 = Fraction(c1sq + c2, 12)
    chi1 = Fraction(c1sq - 5 * c2, 6)
    p = SPoly.from_terms({(0, 0): chi0, (root_s, 0): -chi1,
                          (2 * root_s, 0): chi0}, root_s, 2)
    return SFunc.from_poly(p)


# -- stringy chi_y oracle ---------------------------------------------------


def ambient_e_from_chern(c1sq, c2, root_s=2):
    """E(X; u, 1) of the ambient smooth surface (u rendered as y)."""
    return hirzebruch_chi_y(c1sq, c2, root_s)


def veys_chi_y(graph, ambient_e):
    """Stringy chi_y genus computed from the resolution graph alone.

    ambient_e is E(X;u,1) of the resolving surface, supplied by the
    caller (an SFunc in y, or a low-to-high list of rationals).  All
    -1 vertices must be bridges meeting their neighbors once, away from
    other -1 vertices; otherwise VeysHypothesisViolated.
    """
    root_s = common_root_order({v.name: v.a for v in graph.vertices})
    if isinstance(ambient_e, SFunc):
        e_x = ambient_e.rescale(ilcm(ambient_e.rs, root_s))
        root_s = e_x.rs
    else:
        e_x = SFunc.from_poly(SPoly.from_terms(
            {(k * root_s, 0): Fraction(v) for k, v in enumerate(ambient_e)},
            root_s, 2))
    names = graph.names()
    s_set = []
    for n in names:
        if graph.vertex(n).a == MINUS_ONE:
            if not is_bridge(graph, n):
                raise VeysHypothesisViolated(
                    "-1 vertex %r is not a bridge" % n)
            for nb, m in graph.neighbors(n).items():
                if m != 1:
                    raise VeysHypothesisViolated(
                        "-1 vertex %r meets %r with multiplicity %d" % (n, nb, m))
                if graph.vertex(nb).a == MINUS_ONE:
                    raise VeysHypothesisViolated(
                        "-1 vertices %r and %r are adjacent" % (n, nb))
            s_set.append(n)
    regular = [n for n in names if n not in s_set]

    one = SFunc.const(1, root_s)
    u = SFunc.from_poly(SPoly.mono(1, root_s, 0, root_s, 2))
    u_minus_1 = u - one

    def u_pow(e):
        e = Fraction(e) * root_s
        assert e.denominator == 1
        return SFunc.from_poly(SPoly.mono(1, e.numerator, 0, root_s, 2))

    def jfactor(n):
        a = graph.vertex(n).a
        return u_minus_1 / (u_pow(a + 1) - one)

    def e_open_curve(n):
        v = graph.vertex(n)
        punct = sum(graph.neighbors(n).values())
        return (one + u) * Fraction(1 - v.g) - Fraction(punct) * one

    # open stratum of the surface: remove every curve and every node
    total = e_x
    for n in names:
        total = total - e_open_curve(n)
    seen = set()
    for n in names:
        for nb, m in graph.neighbors(n).items():
            if (nb, n) not in seen:
                seen.add((n, nb))
                total = total - Fraction(m) * one
    # strata along the regular (non -1) curves
    for n in regular:
        total = total + e_open_curve(n) * jfactor(n)
    for i, n in enumerate(regular):
        for nb in regular[i + 1:]:
            m = graph.neighbors(n).get(nb, 0)
            if m:
                total = total + Fraction(m) * jfactor(n) * jfactor(nb)
    # bridge contributions
    for n in s_set:
        nbrs = list(graph.neighbors(n))
        a1 = graph.vertex(nbrs[0]).a
        a2 = graph.vertex(nbrs[1]).a if len(nbrs) == 2 else Fraction(0)
        term = (u_minus_1 * u_minus_1 * Fraction(graph.vertex(n).m)
                / ((u_pow(a1 + 1) - one) * (u_pow(a2 + 1) - one)))
        total = total + term
    return total


# -- localization on P^1 ----------------------------------------------------


def _loc_term_numeric(c, t, z, tau):
    th = theta_numeric
    return (th(t - (c + 1) * z, tau) * th(z, tau)
            / (th(t, tau) * th((c + 1) * z, tau)))


def localization_p1(a1, a2, t, z, tau):
    """Numeric two-fixed-point genus of (P^1, a1 p1 + a2 p2).

    Each fixed point contributes its tangent factor times the divisor
    factor, which collapses to theta(t-(a+1)z) theta(z) /
    (theta(t) theta((a+1)z)); identically zero when a1 + a2 = -2.
    """
    a1 = Fraction(a1)
    a2 = Fraction(a2)
    if a1 == MINUS_ONE or a2 == MINUS_ONE:
        raise LogCanonicalPole("localization needs coefficients != -1")
    return (_loc_term_numeric(float(a1), t, z, tau)
            + _loc_term_numeric(float(a2), -t, z, tau))


def _loc_sum_exact(a1, a2, g, q_order, root_s):
    def sp(c):
        return sigma_pure(Fraction(c), q_order, root_s, as_poly=True)

    n1 = sp(g - (a1 + 1)) * sp(1)
    d1 = sp(g) * sp(a1 + 1)
    n2 = sp(-g - (a2 + 1)) * sp(1)
    d2 = sp(-g) * sp(a2 + 1)
    num = (n1 * d2 + n2 * d1).map(SFunc.from_poly)
    return num.divide((d1 * d2).map(SFunc.from_poly))


def localization_p1_exact(a1, a2, q_order=5):
    """Exact localization sum, verified independent of the torus weight.

    The formal weight t is specialized to two distinct multiples of z;
    agreement of the two exact series certifies t-independence, and the
    common value is returned.  TDependence signals an invalid pair.
    """
    a1 = Fraction(a1)
    a2 = Fraction(a2)
    if a1 == MINUS_ONE or a2 == MINUS_ONE:
        raise LogCanonicalPole("localization needs coefficients != -1")
    root_s = 2 * ilcm(a1.denominator, a2.denominator)
    specials = []
    g = 5
    while len(specials) < 2:
        g += 1
        bad = (g == 0 or g - (a1 + 1) == 0 or g + (a2 + 1) == 0
               or g == a1 + 1 or g == -(a2 + 1))
        if not bad:
            specials.append(Fraction(g))
    v1 = _loc_sum_exact(a1, a2, specials[0], q_order, root_s)
    v2 = _loc_sum_exact(a1, a2, specials[1], q_order, root_s)
    if v1 != v2:
        raise TDependence(
            "localization sum depends on the weight for (%s, %s)" % (a1, a2))
    return v1


# -- perturbation (exact limits in w = y^eps) --------------------------------


def _perturbed_fraction(model, coeffs, bmap, q_order):
    coeffs = {k: Fraction(v) for k, v in coeffs.items()}
    bmap = {k: Fraction(v) for k, v in bmap.items()}
    for c in model.curves:
        if Fraction(coeffs.get(c.label, 0)) == MINUS_ONE \
                and not bmap.get(c.label):
            raise ValueError(
                "coefficient -1 curve %r needs a nonzero perturbation weight"
                % c.label)
    root_s = common_root_order(coeffs)
    root_r = 2
    for b in bmap.values():
        root_r = ilcm(root_r, 2 * Fraction(b).denominator)
    return _naive_fraction(model, coeffs, q_order, root_s,
                           bmap=bmap, root_r=root_r), root_s


def perturbed_ell(model, coeffs, bmap, q_order=3):
    """Genus with exponents a_i + eps b_i, exact in w = y^eps.

    Returns a QSeries with reduced RFunc coefficients.
    """
    (big, w), root_s = _perturbed_fraction(model, coeffs, bmap, q_order)
    # series division with explicit denominators W0^(n+1)
    nums, w0 = _series_div_poly(big, w)
    out = []
    den = w0
    for n, h in enumerate(nums):
        out.append(_rfunc_from_polys(h, den, root_s))
        if n + 1 < len(nums):
            den = den * w0
    return QSeries(out)


def perturbed_limit(model, coeffs, bmap, q_order=3):
    """The limit eps -> 0 of the perturbed genus, coefficientwise.

    PoleAtOne propagates when some q-coefficient has no limit.
    """
    (big, w), root_s = _perturbed_fraction(model, coeffs, bmap, q_order)
    nums, w0 = _series_div_poly(big, w)
    out = []
    den = w0
    for n, h in enumerate(nums):
        out.append(_limit_ratio(h, den))
        if n + 1 < len(nums):
            den = den * w0
    return QSeries(out)


def _series_div_poly(big, w):
    """Coefficients H_n with big/w = sum H_n / W0^(n+1) q^n exactly."""
    w0 = w.coeffs[0]
    if w0.is_zero():
        raise ZeroDivisionError("denominator series has zero constant term")
    nums = []
    for n in range(big.q_order + 1):
        h = big.coeffs[n]
        for _ in range(n):
            h = h * w0
        for k in range(n):
            t = nums[k] * w.coeffs[n - k]
            for _ in range(n - 1 - k):
                t = t * w0
            h = h - t
        nums.append(h)
    return nums, w0


def _limit_ratio(num, den):
    """lim w->1 of num/den for SPoly data, via (r-1) cancellation."""
    while True:
        d1 = den.collapse_r1()
        if not d1.is_zero():
            n1 = num.collapse_r1()
            return SFunc.make(n1, d1)
        if not num.collapse_r1().is_zero():
            raise PoleAtOne("perturbation limit does not exist")
        num = num.div_r_minus_one()
        den = den.div_r_minus_one()


def _rfunc_from_polys(num, den, root_s):
    """Exact RFunc num/den from bivariate SPoly data."""
    rr = ilcm(num.rr if not num.is_zero() else 2, den.rr)
    num = num.rescale(None, rr) if not num.is_zero() else num
    den = den.rescale(None, rr)
    ncs = _r_rows_as_sfuncs(num)
    dcs = _r_rows_as_sfuncs(den)
    return RFunc.make(ncs[0], dcs[0], ncs[1], dcs[1], rr)


def _r_rows_as_sfuncs(p):
    if p.is_zero():
        return [], 0
    rows = []
    for row in range(p.nrows):
        cells = p.cells[row * p.ncols:(row + 1) * p.ncols]
        sp = SPoly._build(p.rs, 2, p.smin, 0, p.ncols, 1, list(cells), p.den)
        rows.append(SFunc.from_poly(sp))
    return rows, p.rmin


# -- verification reports ----------------------------------------------------


def classify_point(model, coeffs, p):
    """Blow-up case 1-5 of the invariance argument, from the coefficients
    at the center (missing curves count as coefficient 0)."""
    if p.kind == "generic":
        return 5
    if p.kind == "curve":
        a = Fraction(coeffs.get(p.a, 0))
        if a == -2:
            return 4
        if a == MINUS_ONE:
            return 2
        return 5
    a1 = Fraction(coeffs.get(p.a, 0))
    a2 = Fraction(coeffs.get(p.b, 0))
    if a1 == MINUS_ONE and a2 == MINUS_ONE:
        return 1
    if MINUS_ONE in (a1, a2):
        return 2
    if a1 + a2 == -2:
        return 3
    return 5


def verify_blowup_invariance(model, coeffs, p, q_order=5, flags=None,
                             include_naive=False):
    """Compare the genus before and after one blow-up at p."""
    flags = flags or InterpretationFlags()
    r1 = ell(model, coeffs, q_order, flags)
    model2, coeffs2 = blowup(model, coeffs, p)
    r2 = ell(model2, coeffs2, q_order, flags)
    equal = r1.series == r2.series
    first_diff = None
    if not equal:
        for k in range(q_order + 1):
            if r1.series.coeffs[k] != r2.series.coeffs[k]:
                first_diff = k
                break
    report = {
        "point": p.describe(),
        "case": classify_point(model, coeffs, p),
        "equal": equal,
        "first_diff": first_diff,
        "flags": flags.describe(),
    }
    if include_naive:
        root_s = common_root_order(coeffs2)
        nv1 = ell_naive(model, coeffs, q_order, root_s)
        nv2 = ell_naive(model2, coeffs2, q_order, root_s)
        report["naive_equal"] = nv1 == nv2
        report["naive_diff"] = nv1 - nv2
    return report


def verify_residue_case(case, z, tau, a=None, pair=None,
                        radius=0.05, samples=512):
    """Numeric residue checks of the blow-up argument, cases 1-4.

    Builds the meromorphic comparison function F(t) for the requested
    case, takes its residue at t = 0 by quadrature and compares with the
    closed form.  Case 2 needs a coefficient ``a``; case 3 a pair
    (a1, a2) with a1 + a2 = -2.
    """
    th = lambda t: theta_numeric(t, tau)
    tp = theta_prime0_numeric(tau)

    def chern3(t):
        return ((th(t + z) * tp / (th(t) * th(z))) ** 2
                * (th(t - z) * tp / (th(t) * th(-z))))

    if case == 1:
        def f(t):
            return ((th(t + z) * tp / (th(t) * th(z)))
                    * (th(t + 2 * z) * tp / (th(t) * th(2 * z)))
                    * (th(t - 2 * z) * tp / (th(t) * th(-2 * z)))
                    * (th(t - 2 * z) * th(z) / (th(t - z) * th(2 * z))))
        closed = (tp / th(z)) ** 2 * th(3 * z) * th(z) / th(2 * z) ** 2
    elif case == 2:
        if a is None:
            raise ValueError("case 2 needs the coefficient a")
        av = float(Fraction(a))

        def f(t):
            return (chern3(t)
                    * (th(-t + 2 * z) * th(z) / (th(-t + z) * th(2 * z)))
                    * (th(t + (av + 1) * z) * th(z)
                       / (th(t + z) * th((av + 1) * z)))
                    * (th(t - (av + 1) * z) * th(z)
                       / (th(t - z) * th((av + 1) * z))))
        closed = (th((av + 2) * z) * th(av * z) / th((av + 1) * z) ** 2
                  * tp ** 2 / th(z) ** 2)
    elif case == 3:
        if pair is None:
            raise ValueError("case 3 needs the pair (a1, a2)")
        a1, a2 = (float(Fraction(x)) for x in pair)
        if abs(a1 + a2 + 2) > 1e-12:
            raise ValueError("case 3 needs a1 + a2 = -2")

        def f(t):
            val = chern3(t) * (th(t + 2 * z) * th(z) / (th(t + z) * th(2 * z)))
            for av in (a1, a2):
                val *= (th(t + (av + 1) * z) * th(z)
                        / (th(t + z) * th((av + 1) * z)))
            return val
        closed = 1.0 + 0j
        for av in (a1, a2):
            closed *= th(av * z) * tp / (th((1 + av) * z) * th(z))
    elif case == 4:
        def f(t):
            return (chern3(t)
                    * (th(t + 2 * z) * th(z) / (th(t + z) * th(2 * z)))
                    * (th(t - z) * th(z) / (th(t + z) * th(-z))))
        closed = 0j
    else:
        raise ValueError("residue cases are 1-4")
    res = numeric_residue(f, 0j, radius, samples)
    return {"case": case, "residue": res, "closed_form": closed,
            "abs_error": abs(res - closed)}


def verify_holomorphy(res, tau=0.8j, deltas=(0.01, 0.001, 0.0001)):
    """Lattice holomorphy probes of a computed genus.

    (i)  every q-coefficient is evaluated at s = 1 (the z = 0 check);
    (ii) |theta(2z) Ell(z)| is sampled at z = tau/2 + delta and must
         decay by at least 10x per decade of approach.
    """
    regular = res.regular_at_s1()
    import cmath
    q = cmath.exp(2j * cmath.pi * tau)
    values = []
    for delta in deltas:
        z = tau / 2 + delta
        s = cmath.exp(2j * cmath.pi * z / res.root_order)
        val = res.series.eval_numeric(s, q) * theta_numeric(2 * z, tau)
        values.append(abs(val))
    decay_ok = all(values[i + 1] <= values[i] / 10 * 1.2
                   for i in range(len(values) - 1))
    return {
        "regular_at_s1": regular,
        "all_regular": all(regular),
        "lattice_values": values,
        "lattice_decay_ok": decay_ok,
    }
