"""Verification suites: batch runners behind `verify` and the acceptance tests.

Each suite returns a list of (ok, name, detail) triples in deterministic
order; the CLI prints them as "PASS|FAIL name detail" lines.
"""

import cmath
import random
from fractions import Fraction

from ellgenus.corpus import bridge_corpus, generate_corpus
from ellgenus.errors import PoleAtOne
from ellgenus.genus import (ambient_e_from_chern, chi_y, classify_point, ell,
                            hirzebruch_chi_y, localization_p1,
                            localization_p1_exact, perturbed_limit,
                            verify_blowup_invariance, verify_holomorphy,
                            verify_residue_case)
from ellgenus.graph import InterpretationFlags, graph_from_model
from ellgenus.qseries import QSeries
from ellgenus.surface import Curve, SurfaceModel, blowup, solve_discrepancies
from ellgenus.theta import (sigma_numeric, sigma_pure, theta_numeric,
                            theta_prime0_numeric)

__all__ = ["theta_suite", "invariance_suite", "residue_suite",
           "holomorphy_suite", "perturbation_suite", "chi_y_suite",
           "localization_suite", "smooth_suite", "star_model",
           "simple_elliptic_model"]


def star_model(c1sq=9, c2=3):
    """Three (-4)-legs through a (-1) center; discrepancies (-1,-1,-1,-2)."""
    return SurfaceModel(
        [Curve("E1", 0, -4, True), Curve("E2", 0, -4, True),
         Curve("E3", 0, -4, True), Curve("E4", 0, -1, True)],
        {("E1", "E4"): 1, ("E2", "E4"): 1, ("E3", "E4"): 1}, c1sq, c2)


def simple_elliptic_model(m=1, c1sq=9, c2=3, with_ample=False):
    """A genus-1 exceptional curve of self-intersection -m.

    With the ample section included, H meets the curve in m^2 points so
    that the weights (m, 1) describe the pull-back of an ample
    perturbation: coefficients -1 + m*eps on the curve, eps on H.
    """
    curves = [Curve("E1", 1, -m, True)]
    inter = {}
    if with_ample:
        curves.append(Curve("H", 0, 2))
        inter[("E1", "H")] = m * m
    return SurfaceModel(curves, inter, c1sq, c2)


def theta_suite(seed=0, count=5, tol=1e-8):
    """Translation and modular identities, plus backend agreement."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        t = complex(rng.uniform(0.1, 0.6), rng.uniform(-0.2, 0.3))
        tau = complex(rng.uniform(-0.4, 0.4), rng.uniform(0.7, 1.4))
        q = cmath.exp(2j * cmath.pi * tau)
        th = lambda u, tt=tau: theta_numeric(u, tt)
        checks = [
            ("translation-one", abs(th(t + 1) + th(t))),
            ("translation-tau",
             abs(th(t + tau) + q ** -0.5 * cmath.exp(-2j * cmath.pi * t) * th(t))),
            ("modular-shift", abs(th(t) * cmath.exp(0.25j * cmath.pi)
                                  - theta_numeric(t, tau + 1))),
            ("modular-inversion",
             abs(theta_numeric(t / tau, -1 / tau)
                 - (1 / 1j) * cmath.sqrt(tau / 1j)
                 * cmath.exp(1j * cmath.pi * t * t / tau) * th(t))),
        ]
        for name, err in checks:
            out.append((err < tol, "theta-%s-%d" % (name, k), "err=%.2e" % err))
    # exact series evaluated numerically against the product backend
    for k, (a, zr, taui) in enumerate(
            [(Fraction(1), 0.23, 0.38), (Fraction(3, 2), 0.31, 0.40),
             (Fraction(-5, 2), 0.11, 0.45), (Fraction(2), 0.42, 0.37),
             (Fraction(1, 3), 0.17, 0.50)]):
        tau = taui * 1j
        z = zr + 0.005j
        q = cmath.exp(2j * cmath.pi * tau)
        rs = 2 * a.denominator
        exact = sigma_pure(a, 5, rs).eval_numeric(
            cmath.exp(2j * cmath.pi * z / rs), q)
        err = abs(exact - sigma_numeric(a, z, tau))
        out.append((err < 1e-6 and abs(q) <= 0.1,
                    "sigma-backend-%d" % k, "|q|=%.3f err=%.2e" % (abs(q), err)))
    return out


def invariance_suite(seed=0, count=50, q_order=5, flags=None, max_points=4,
                     progress=None):
    """Blow-up invariance over a randomized corpus, exact at q_order."""
    flags = flags or InterpretationFlags()
    entries = generate_corpus(seed=seed, count=count, max_points=max_points)
    out = []
    for e in entries:
        before = ell(e.model, e.coeffs, q_order, flags)
        for p in e.points:
            model2, coeffs2 = blowup(e.model, e.coeffs, p)
            after = ell(model2, coeffs2, q_order, flags)
            equal = before.series == after.series
            case = classify_point(e.model, e.coeffs, p)
            name = "invariance-%s-%s" % (e.name, p.describe())
            out.append((equal, name, "case=%d curves=%d" %
                        (case, len(e.model.curves))))
            if progress:
                progress(out[-1])
    return out


def residue_suite(z=0.17 + 0.05j, tau=0.8j):
    out = []
    specs = [(1, {}, 1e-7), (2, {"a": Fraction(-3)}, 1e-7),
             (2, {"a": Fraction(1, 2)}, 1e-7),
             (3, {"pair": (Fraction(-3), Fraction(1))}, 1e-7),
             (3, {"pair": (Fraction(-1, 2), Fraction(-3, 2))}, 1e-7),
             (4, {}, 1e-8)]
    for case, kw, tol in specs:
        rep = verify_residue_case(case, z, tau, **kw)
        name = "residue-case%d%s" % (case, "-" + str(kw) if kw else "")
        out.append((rep["abs_error"] < tol, name,
                    "err=%.2e tol=%.0e" % (rep["abs_error"], tol)))
    return out


def holomorphy_suite(q_order=3):
    out = []
    probes = [
        ("smooth", SurfaceModel([], {}, 8, 4), {}),
        ("star", star_model(), None),
        ("simple-elliptic", simple_elliptic_model(), None),
    ]
    for name, model, coeffs in probes:
        if coeffs is None:
            coeffs = solve_discrepancies(model)
        res = ell(model, coeffs, q_order)
        rep = verify_holomorphy(res)
        ok = rep["all_regular"] and (name == "smooth" or rep["lattice_decay_ok"])
        detail = "regular=%s decay=%s values=%s" % (
            rep["all_regular"], rep["lattice_decay_ok"],
            ",".join("%.1e" % v for v in rep["lattice_values"]))
        out.append((ok, "holomorphy-%s" % name, detail))
    return out


def perturbation_suite(seed=0, count=8, q_order=3):
    """Limits exist and agree with the unperturbed genus."""
    out = []
    entries = bridge_corpus(seed=seed, count=count, perturbations=True,
                            small=True)
    for e in entries:
        bmap = e.points
        try:
            lim = perturbed_limit(e.model, e.coeffs, bmap, q_order)
            base = ell(e.model, e.coeffs, q_order)
            ok = lim == base.series
            detail = "matches ell" if ok else "limit differs from ell"
        except PoleAtOne as exc:
            ok = False
            detail = "no limit: %s" % exc
        out.append((ok, "perturbation-%s" % e.name, detail))
    model = simple_elliptic_model(m=2, with_ample=True)
    coeffs = {"E1": Fraction(-1), "H": Fraction(0)}
    bmap = {"E1": Fraction(2), "H": Fraction(1)}
    try:
        lim = perturbed_limit(model, coeffs, bmap, q_order)
        base = ell(model, coeffs, q_order)
        ok = lim == base.series
        detail = "matches ell" if ok else "limit differs from ell"
    except PoleAtOne as exc:
        ok, detail = False, "no limit: %s" % exc
    out.append((ok, "perturbation-simple-elliptic-ample", detail))
    return out


def chi_y_suite(seed=0, count=20):
    """Exact agreement of y*q^0(ell) with the stringy chi_y formula."""
    out = []
    entries = bridge_corpus(seed=seed, count=count)
    for e in entries:
        res = ell(e.model, e.coeffs, 0)
        lhs = chi_y(res)
        graph = graph_from_model(e.model, e.coeffs)
        rhs = veys_from(graph, e.model, res.root_order)
        ok = lhs == rhs
        out.append((ok, "chi-y-%s" % e.name,
                    "exact match" if ok else "mismatch"))
    return out


def veys_from(graph, model, root_order):
    from ellgenus.genus import veys_chi_y
    return veys_chi_y(graph, ambient_e_from_chern(model.c1sq, model.c2,
                                                  root_order))


def localization_suite(seed=0):
    rng = random.Random(seed)
    out = []
    pairs = [(Fraction(-2), Fraction(0)), (Fraction(-1, 2), Fraction(-3, 2)),
             (Fraction(1), Fraction(-3)), (Fraction(-4), Fraction(2)),
             (Fraction(-5, 3), Fraction(-1, 3))]
    for a1, a2 in pairs:
        series = localization_p1_exact(a1, a2, 5)
        ok = series.is_zero()
        out.append((ok, "localization-exact-(%s,%s)" % (a1, a2),
                    "zero series" if ok else "nonzero"))
    for k in range(5):
        t = complex(rng.uniform(0.1, 0.5), rng.uniform(0.05, 0.3))
        z = complex(rng.uniform(0.1, 0.4), rng.uniform(0.0, 0.1))
        tau = complex(rng.uniform(-0.2, 0.2), rng.uniform(0.8, 1.3))
        a1, a2 = pairs[k % len(pairs)]
        v = abs(localization_p1(a1, a2, t, z, tau))
        out.append((v < 1e-9, "localization-numeric-%d" % k, "|v|=%.2e" % v))
    return out


def smooth_suite():
    out = []
    for c1sq, c2 in [(8, 4), (9, 3), (0, 24)]:
        res = ell(SurfaceModel([], {}, c1sq, c2), {}, 1)
        ok = chi_y(res) == hirzebruch_chi_y(c1sq, c2, res.root_order)
        out.append((ok, "smooth-chi-y-(%d,%d)" % (c1sq, c2),
                    chi_y(res).render()))
    return out
