"""Smooth surface with a curve configuration: pairing, blow-ups, discrepancies.

A SurfaceModel carries the curves (label, genus, self-intersection,
exceptional flag), the symmetric off-diagonal intersection matrix and
the ambient Chern numbers c1^2 and c2.  The canonical class K is never
stored as a curve: every pairing against K comes from adjunction,
K.C = 2g - 2 - C.C, and K.K = c1^2.
"""

from fractions import Fraction

from ellgenus.errors import InvalidPoint, SingularIntersectionMatrix

__all__ = ["Curve", "SurfaceModel", "CohomClass", "PointSpec",
           "solve_discrepancies", "blowup", "cohom_integrate",
           "is_negative_definite"]

K = "K"


class Curve:
    __slots__ = ("label", "genus", "self_int", "exceptional")

    def __init__(self, label, genus, self_int, exceptional=False):
        if genus < 0:
            raise ValueError("genus must be non-negative")
        self.label = label
        self.genus = genus
        self.self_int = self_int
        self.exceptional = exceptional

    def copy(self):
        return Curve(self.label, self.genus, self.self_int, self.exceptional)


class SurfaceModel:
    """Immutable-by-convention description of (X, configuration)."""

    def __init__(self, curves, intersections, c1sq, c2):
        """intersections: {(label_i, label_j): multiplicity} for i != j."""
        self.curves = [c.copy() for c in curves]
        self.index = {c.label: i for i, c in enumerate(self.curves)}
        if len(self.index) != len(self.curves):
            raise ValueError("duplicate curve labels")
        self.c1sq = c1sq
        self.c2 = c2
        n = len(self.curves)
        self.pair_int = [[0] * n for _ in range(n)]
        for (a, b), m in intersections.items():
            if a == b:
                raise ValueError("self-intersections are stored on the curve")
            if m < 0:
                raise ValueError("intersection multiplicities are non-negative")
            i, j = self.index[a], self.index[b]
            self.pair_int[i][j] += m
            self.pair_int[j][i] += m
        exc = [c for c in self.curves if c.exceptional]
        if exc and not is_negative_definite(self._gram([c.label for c in exc])):
            raise SingularIntersectionMatrix(
                "exceptional sublattice is not negative definite")

    # -- basic queries ---------------------------------------------------

    def labels(self):
        return [c.label for c in self.curves]

    def curve(self, label):
        return self.curves[self.index[label]]

    def mult(self, a, b):
        return self.pair_int[self.index[a]][self.index[b]]

    def k_dot(self, label):
        c = self.curve(label)
        return 2 * c.genus - 2 - c.self_int

    def pairing(self, a, b):
        """Intersection number of two basis classes (labels or "K")."""
        if a == K and b == K:
            return self.c1sq
        if a == K:
            return self.k_dot(b)
        if b == K:
            return self.k_dot(a)
        if a == b:
            return self.curve(a).self_int
        return self.mult(a, b)

    def _gram(self, labels):
        n = len(labels)
        g = [[0] * n for _ in range(n)]
        for i, a in enumerate(labels):
            for j, b in enumerate(labels):
                g[i][j] = self.curve(a).self_int if i == j else self.mult(a, b)
        return g

    def intersections(self):
        out = {}
        for i in range(len(self.curves)):
            for j in range(i + 1, len(self.curves)):
                m = self.pair_int[i][j]
                if m:
                    out[(self.curves[i].label, self.curves[j].label)] = m
        return out

    def copy(self):
        return SurfaceModel(self.curves, self.intersections(), self.c1sq, self.c2)

    def cohom(self, deg0=0, deg1=None, deg2=0):
        return CohomClass(self, Fraction(deg0), deg1 or {}, Fraction(deg2))

    def curve_class(self, label):
        return self.cohom(deg1={label: Fraction(1)})


class PointSpec:
    """Blow-up center: Generic, OnCurve(label) or Node(label, label)."""

    __slots__ = ("kind", "a", "b")

    def __init__(self, kind, a=None, b=None):
        if kind not in ("generic", "curve", "node"):
            raise ValueError("unknown point kind %r" % kind)
        self.kind = kind
        self.a = a
        self.b = b

    @classmethod
    def generic(cls):
        return cls("generic")

    @classmethod
    def on_curve(cls, label):
        return cls("curve", label)

    @classmethod
    def node(cls, a, b):
        return cls("node", a, b)

    def validate(self, model):
        if self.kind == "curve" and self.a not in model.index:
            raise InvalidPoint("no curve %r" % self.a)
        if self.kind == "node":
            if self.a not in model.index or self.b not in model.index:
                raise InvalidPoint("unknown curve in node")
            if self.a == self.b:
                raise InvalidPoint("node needs two distinct curves")
            if model.mult(self.a, self.b) < 1:
                raise InvalidPoint("curves %r and %r do not meet" % (self.a, self.b))

    def touches(self, label):
        if self.kind == "curve":
            return label == self.a
        if self.kind == "node":
            return label in (self.a, self.b)
        return False

    def describe(self):
        if self.kind == "generic":
            return "generic"
        if self.kind == "curve":
            return "curve:%s" % self.a
        return "node:%s,%s" % (self.a, self.b)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "generic":
            return cls.generic()
        if text.startswith("curve:"):
            return cls.on_curve(text[6:].strip())
        if text.startswith("node:"):
            parts = [p.strip() for p in text[5:].split(",")]
            if len(parts) != 2:
                raise InvalidPoint("node spec needs two labels")
            return cls.node(*parts)
        raise InvalidPoint("cannot parse point spec %r" % text)


class CohomClass:
    """Truncated graded cohomology element: scalar, divisor part, point part.

    deg1 is a vector over the basis {curve labels..., K}; deg2 is the
    multiple of the point class, so integrate() just returns it.
    """

    __slots__ = ("model", "deg0", "deg1", "deg2")

    def __init__(self, model, deg0, deg1, deg2):
        self.model = model
        self.deg0 = Fraction(deg0)
        self.deg1 = {k: Fraction(v) for k, v in deg1.items() if v}
        self.deg2 = Fraction(deg2)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.model.cohom(deg0=other)
        deg1 = dict(self.deg1)
        for k, v in other.deg1.items():
            deg1[k] = deg1.get(k, Fraction(0)) + v
        return CohomClass(self.model, self.deg0 + other.deg0, deg1,
                          self.deg2 + other.deg2)

    __radd__ = __add__

    def __neg__(self):
        return CohomClass(self.model, -self.deg0,
                          {k: -v for k, v in self.deg1.items()}, -self.deg2)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.model.cohom(deg0=other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CohomClass(self.model, self.deg0 * other,
                              {k: v * other for k, v in self.deg1.items()},
                              self.deg2 * other)
        pair = self.model.pairing
        deg2 = self.deg0 * other.deg2 + self.deg2 * other.deg0
        for k1, v1 in self.deg1.items():
            for k2, v2 in other.deg1.items():
                deg2 += v1 * v2 * pair(k1, k2)
        deg1 = {k: v * other.deg0 for k, v in self.deg1.items()}
        for k, v in other.deg1.items():
            deg1[k] = deg1.get(k, Fraction(0)) + v * self.deg0
        return CohomClass(self.model, self.deg0 * other.deg0, deg1, deg2)

    __rmul__ = __mul__

    def integrate(self):
        return self.deg2

    def __eq__(self, other):
        return (self.deg0 == other.deg0 and self.deg1 == other.deg1
                and self.deg2 == other.deg2)


def cohom_integrate(model, c):
    """Degree-2 extraction; deg0/deg1 parts integrate to zero."""
    return c.integrate()


# -- exact linear algebra (fraction-free elimination) ----------------------


def _solve_exact(mat, rhs):
    """Solve mat * x = rhs over the rationals; None if singular."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def leading_minors(gram):
    """Exact leading principal minors via fraction-free elimination.

    Stops at the first vanishing minor (the remaining entries are padded
    with zeros); that is all the definiteness test needs.
    """
    n = len(gram)
    a = [[int(x) for x in row] for row in gram]
    minors = []
    prev = 1
    for k in range(n):
        piv = a[k][k]
        minors.append(piv)
        if piv == 0:
            minors.extend(0 for _ in range(n - k - 1))
            break
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                a[r][c] = (a[r][c] * piv - a[r][k] * a[k][c]) // prev
            a[r][k] = 0
        prev = piv
    return minors


def is_negative_definite(gram):
    """Sylvester test: k-th leading minor has sign (-1)^k."""
    minors = leading_minors(gram)
    for k, m in enumerate(minors, start=1):
        if (m > 0) != (k % 2 == 0) or m == 0:
            return False
    return True


def solve_discrepancies(model):
    """Coefficients a_i on exceptional curves from adjunction.

    Solves sum_j a_j (C_j . C_i) = 2 g_i - 2 + m_i over the exceptional
    curves (C_i . C_i = -m_i); non-exceptional curves get no entry.
    """
    labels = [c.label for c in model.curves if c.exceptional]
    if not labels:
        return {}
    gram = model._gram(labels)
    if not is_negative_definite(gram):
        raise SingularIntersectionMatrix(
            "exceptional intersection matrix is not negative definite")
    rhs = [2 * model.curve(l).genus - 2 - model.curve(l).self_int for l in labels]
    sol = _solve_exact(gram, rhs)
    if sol is None:
        raise SingularIntersectionMatrix("degenerate exceptional pairing")
    return dict(zip(labels, sol))


def _fresh_label(model):
    k = 1
    while "E%d" % k in model.index:
        k += 1
    return "E%d" % k


def blowup(model, coeffs, p, new_label=None):
    """Blow up at p; returns (new model, transported coefficients).

    The new exceptional curve E gets genus 0, E.E = -1, one intersection
    with each curve through p, and coefficient (sum of coefficients at
    p) + 1.  Chern numbers move by c1^2 -> c1^2 - 1, c2 -> c2 + 1.
    """
    p.validate(model)
    label = new_label or _fresh_label(model)
    if label in model.index:
        raise ValueError("label %r already in use" % label)
    curves = [c.copy() for c in model.curves]
    inter = model.intersections()
    through = []
    if p.kind == "curve":
        through = [p.a]
    elif p.kind == "node":
        through = [p.a, p.b]
        key = (p.a, p.b) if (p.a, p.b) in inter else (p.b, p.a)
        inter[key] -= 1
        if not inter[key]:
            del inter[key]
    for c in curves:
        if c.label in through:
            c.self_int -= 1
            inter[(c.label, label)] = 1
    curves.append(Curve(label, 0, -1, True))
    new_model = SurfaceModel(curves, inter, model.c1sq - 1, model.c2 + 1)
    new_coeffs = dict(coeffs)
    a_e = Fraction(1)
    for l in through:
        a_e += Fraction(coeffs.get(l, 0))
    new_coeffs[label] = a_e
    return new_model, new_coeffs
