"""Exact scalar tower: rationals, Laurent polynomials, rational functions.

The tower has four levels.

* ``Rational`` -- arbitrary-precision fractions (``fractions.Fraction``).
* ``SPoly`` -- Laurent polynomials in ``s = y**(1/root_s)`` and, when the
  perturbation layer is active, also in ``r = w**(1/root_r)``.  The
  coefficient grid is a dense integer rectangle over one shared integer
  denominator, so all ring arithmetic runs on the integer kernels.
* ``SFunc`` -- reduced fractions of r-free ``SPoly`` values.  Canonical
  form: numerator and denominator coprime, denominator a genuine
  polynomial in s with constant term 1.
* ``RFunc`` -- reduced fractions of polynomials in r with ``SFunc``
  coefficients; the home of the perturbation variable ``w = y**eps``.

Root orders are even integers: exponent ``e`` of ``s`` means
``y**(e/root_s)``.  Mixed root orders rescale to the lcm on the fly.
No floating point is used anywhere in this module.
"""

from fractions import Fraction
from math import gcd as igcd, lcm as ilcm

from ellgenus import polygcd
from ellgenus._kernels import vdivexact, vmul, vplace
from ellgenus.errors import PoleAtOne

Rational = Fraction

__all__ = ["Rational", "SPoly", "SFunc", "RFunc",
           "sfunc_eval_at_s1", "rfunc_limit_w1"]


def _check_root(n):
    if n <= 0 or n % 2:
        raise ValueError("root order must be a positive even integer")
    return n


class SPoly:
    """Dense Laurent polynomial in s (and optionally r) over the rationals.

    ``cells`` is a row-major grid: entry ``cells[row*ncols + col]`` is the
    integer numerator of the coefficient of ``s**(smin+col) * r**(rmin+row)``,
    all over the common positive denominator ``den``.
    """

    __slots__ = ("rs", "rr", "smin", "rmin", "ncols", "nrows", "cells", "den")

    def __init__(self, rs, rr, smin, rmin, ncols, nrows, cells, den):
        self.rs = rs
        self.rr = rr
        self.smin = smin
        self.rmin = rmin
        self.ncols = ncols
        self.nrows = nrows
        self.cells = cells
        self.den = den

    # -- construction -------------------------------------------------

    @staticmethod
    def _build(rs, rr, smin, rmin, ncols, nrows, cells, den):
        """Trim zero borders and reduce the content/denominator."""
        if den < 0:
            den = -den
            cells = [-x for x in cells]
        # trim rows
        r0, r1 = 0, nrows
        while r1 > r0 and not any(cells[(r1 - 1) * ncols:r1 * ncols]):
            r1 -= 1
        while r0 < r1 and not any(cells[r0 * ncols:(r0 + 1) * ncols]):
            r0 += 1
        if r0 == r1:
            return SPoly(rs, rr, 0, 0, 0, 0, [], 1)
        # trim columns
        c0, c1 = 0, ncols
        while c1 > c0 and not any(cells[r * ncols + c1 - 1] for r in range(r0, r1)):
            c1 -= 1
        while c0 < c1 and not any(cells[r * ncols + c0] for r in range(r0, r1)):
            c0 += 1
        if r0 or c0 or r1 != nrows or c1 != ncols:
            nc = c1 - c0
            cells = [cells[r * ncols + c]
                     for r in range(r0, r1) for c in range(c0, c1)]
            smin += c0
            rmin += r0
            ncols, nrows = nc, r1 - r0
        g = polygcd.content(cells)
        g = igcd(g, den)
        if g > 1:
            cells = [x // g for x in cells]
            den //= g
        return SPoly(rs, rr, smin, rmin, ncols, nrows, cells, den)

    @classmethod
    def zero(cls, rs=2, rr=2):
        return cls(_check_root(rs), _check_root(rr), 0, 0, 0, 0, [], 1)

    @classmethod
    def const(cls, value, rs=2, rr=2):
        value = Fraction(value)
        if not value:
            return cls.zero(rs, rr)
        return cls(_check_root(rs), _check_root(rr), 0, 0, 1, 1,
                   [value.numerator], value.denominator)

    @classmethod
    def mono(cls, value, es, er=0, rs=2, rr=2):
        """value * s**es * r**er."""
        value = Fraction(value)
        if not value:
            return cls.zero(rs, rr)
        return cls(_check_root(rs), _check_root(rr), es, er, 1, 1,
                   [value.numerator], value.denominator)

    @classmethod
    def from_terms(cls, terms, rs=2, rr=2):
        """Build from a mapping {(s_exp, r_exp): Fraction}."""
        items = [(k, Fraction(v)) for k, v in terms.items() if v]
        if not items:
            return cls.zero(rs, rr)
        smin = min(k[0] for k, _ in items)
        smax = max(k[0] for k, _ in items)
        rmin = min(k[1] for k, _ in items)
        rmax = max(k[1] for k, _ in items)
        nc = smax - smin + 1
        nr = rmax - rmin + 1
        den = 1
        for _, v in items:
            den = ilcm(den, v.denominator)
        cells = [0] * (nc * nr)
        for (es, er), v in items:
            cells[(er - rmin) * nc + (es - smin)] += v.numerator * (den // v.denominator)
        return cls._build(_check_root(rs), _check_root(rr), smin, rmin, nc, nr, cells, den)

    # -- predicates / accessors ---------------------------------------

    def is_zero(self):
        return self.ncols == 0

    __bool__ = lambda self: self.ncols != 0

    def is_rfree(self):
        return self.nrows <= 1 and self.rmin == 0

    def is_one(self):
        return (self.ncols == 1 and self.nrows == 1 and self.smin == 0
                and self.rmin == 0 and self.den == 1 and self.cells[0] == 1)

    def coeff(self, es, er=0):
        c = es - self.smin
        r = er - self.rmin
        if 0 <= c < self.ncols and 0 <= r < self.nrows:
            return Fraction(self.cells[r * self.ncols + c], self.den)
        return Fraction(0)

    def terms(self):
        for r in range(self.nrows):
            for c in range(self.ncols):
                x = self.cells[r * self.ncols + c]
                if x:
                    yield (self.smin + c, self.rmin + r), Fraction(x, self.den)

    # -- root-order alignment -----------------------------------------

    def rescale(self, rs=None, rr=None):
        """Re-express with larger root orders (exponents stretch)."""
        rs = self.rs if rs is None else rs
        rr = self.rr if rr is None else rr
        if rs == self.rs and rr == self.rr:
            return self
        ks, rem_s = divmod(rs, self.rs)
        kr, rem_r = divmod(rr, self.rr)
        if rem_s or rem_r or ks <= 0 or kr <= 0:
            raise ValueError("root order must rescale by a positive integer factor")
        if self.is_zero():
            return SPoly.zero(rs, rr)
        nc = (self.ncols - 1) * ks + 1
        nr = (self.nrows - 1) * kr + 1
        cells = [0] * (nc * nr)
        for r in range(self.nrows):
            base = r * self.ncols
            out = (r * kr) * nc
            for c in range(self.ncols):
                cells[out + c * ks] = self.cells[base + c]
        return SPoly(rs, rr, self.smin * ks, self.rmin * kr, nc, nr, cells, self.den)

    def _align(self, other):
        rs = ilcm(self.rs, other.rs)
        rr = ilcm(self.rr, other.rr)
        return self.rescale(rs, rr), other.rescale(rs, rr)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SPoly.const(other, self.rs, self.rr)
        if not isinstance(other, SPoly):
            return NotImplemented
        a, b = self._align(other)
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        smin = min(a.smin, b.smin)
        rmin = min(a.rmin, b.rmin)
        nc = max(a.smin + a.ncols, b.smin + b.ncols) - smin
        nr = max(a.rmin + a.nrows, b.rmin + b.nrows) - rmin
        den = ilcm(a.den, b.den)
        ma = den // a.den
        mb = den // b.den
        cells = [0] * (nc * nr)
        for r in range(a.nrows):
            off = (r + a.rmin - rmin) * nc + (a.smin - smin)
            vplace(cells, off, a.cells[r * a.ncols:(r + 1) * a.ncols], ma)
        for r in range(b.nrows):
            off = (r + b.rmin - rmin) * nc + (b.smin - smin)
            vplace(cells, off, b.cells[r * b.ncols:(r + 1) * b.ncols], mb)
        return SPoly._build(a.rs, a.rr, smin, rmin, nc, nr, cells, den)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return SPoly(self.rs, self.rr, self.smin, self.rmin, self.ncols,
                     self.nrows, [-x for x in self.cells], self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SPoly.const(other, self.rs, self.rr)
        if not isinstance(other, SPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other or self.is_zero():
                return SPoly.zero(self.rs, self.rr)
            return SPoly._build(self.rs, self.rr, self.smin, self.rmin,
                                self.ncols, self.nrows,
                                [x * other.numerator for x in self.cells],
                                self.den * other.denominator)
        if not isinstance(other, SPoly):
            return NotImplemented
        a, b = self._align(other)
        if a.is_zero() or b.is_zero():
            return SPoly.zero(a.rs, a.rr)
        if a.nrows == 1 and b.nrows == 1:
            cells = vmul(a.cells, b.cells)
            return SPoly._build(a.rs, a.rr, a.smin + b.smin, a.rmin + b.rmin,
                                len(cells), 1, cells, a.den * b.den)
        # bivariate case: pad rows to the product width, then one long
        # convolution realizes the 2-D convolution without row overlap
        w = a.ncols + b.ncols - 1
        fa = _flatten(a, w)
        fb = _flatten(b, w)
        prod = vmul(fa, fb)
        nr = a.nrows + b.nrows - 1
        prod += [0] * (nr * w - len(prod))
        return SPoly._build(a.rs, a.rr, a.smin + b.smin, a.rmin + b.rmin,
                            w, nr, prod, a.den * b.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SPoly.const(other, self.rs, self.rr)
        if not isinstance(other, SPoly):
            return NotImplemented
        a, b = self._align(other)
        return (a.smin == b.smin and a.rmin == b.rmin and a.ncols == b.ncols
                and a.nrows == b.nrows and a.den == b.den and a.cells == b.cells)

    def __hash__(self):
        raise TypeError("SPoly is not hashable")

    def shift(self, ds, dr=0):
        if self.is_zero():
            return self
        return SPoly(self.rs, self.rr, self.smin + ds, self.rmin + dr,
                     self.ncols, self.nrows, self.cells, self.den)

    # -- evaluations ----------------------------------------------------

    def eval_s1(self):
        """Value at s = 1 (requires an r-free polynomial)."""
        if not self.is_rfree():
            raise ValueError("eval_s1 needs an r-free polynomial")
        return Fraction(sum(self.cells), self.den)

    def collapse_r1(self):
        """Substitute r = 1, leaving an r-free polynomial in s."""
        if self.is_rfree():
            return self
        cells = [0] * self.ncols
        for r in range(self.nrows):
            vplace(cells, 0, self.cells[r * self.ncols:(r + 1) * self.ncols], 1)
        return SPoly._build(self.rs, self.rr, self.smin, 0, self.ncols, 1,
                            cells, self.den)

    def div_r_minus_one(self):
        """Exact quotient by (r - 1); caller guarantees divisibility."""
        if self.is_rfree():
            if self.is_zero():
                return self
            raise ValueError("not divisible by r - 1")
        nc = self.ncols
        nr = self.nrows - 1
        rows = [self.cells[r * nc:(r + 1) * nc] for r in range(self.nrows)]
        out = [None] * nr
        acc = rows[nr]
        out[nr - 1] = list(acc)
        for m in range(nr - 1, 0, -1):
            acc = out[m]
            nxt = list(rows[m])
            vplace(nxt, 0, acc, 1)
            out[m - 1] = nxt
        check = list(rows[0])
        vplace(check, 0, out[0], 1)
        if any(check):
            raise ValueError("not divisible by r - 1")
        cells = [x for row in out for x in row]
        return SPoly._build(self.rs, self.rr, self.smin, self.rmin, nc, nr,
                            cells, self.den)

    def eval_numeric(self, s, r=1.0):
        """Evaluate at complex s (and r), for numeric cross-checks."""
        total = 0j
        for row in range(self.nrows):
            acc = 0j
            base = row * self.ncols
            for c in range(self.ncols - 1, -1, -1):
                acc = acc * s + self.cells[base + c]
            total += acc * s ** self.smin * r ** (self.rmin + row)
        return total / self.den

    # -- r-free vector view (for SFunc internals) ----------------------

    def _vec(self):
        if not self.is_rfree():
            raise ValueError("expected an r-free polynomial")
        return self.cells

    def _divexact_vec(self, g):
        """Divide by the integer vector g (exactly); keeps offsets."""
        if len(g) == 1:
            q = self.cells if g[0] == 1 else [x // g[0] for x in self.cells]
            return SPoly._build(self.rs, self.rr, self.smin, self.rmin,
                                self.ncols, self.nrows, list(q), self.den)
        q = vdivexact(self._vec(), g)
        if q is None:
            raise ArithmeticError("inexact polynomial division")
        return SPoly._build(self.rs, self.rr, self.smin, 0, len(q), 1, q, self.den)

    # -- rendering ------------------------------------------------------

    def render(self):
        """Canonical text: terms by increasing exponent, powers of y."""
        if self.is_zero():
            return "0"
        parts = []
        for (es, er), v in self.terms():
            mono = []
            if es:
                mono.append(_pow_str("y", Fraction(es, self.rs)))
            if er:
                mono.append(_pow_str("w", Fraction(er, self.rr)))
            body = "*".join(mono)
            if not body:
                parts.append(_frac_str(v))
            elif v == 1:
                parts.append(body)
            elif v == -1:
                parts.append("-" + body)
            else:
                parts.append(_frac_str(v) + "*" + body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return "SPoly(%s)" % self.render()


def _flatten(p, w):
    out = [0] * ((p.nrows - 1) * w + p.ncols)
    for r in range(p.nrows):
        out[r * w:r * w + p.ncols] = p.cells[r * p.ncols:(r + 1) * p.ncols]
    return out


def _frac_str(v):
    if v.denominator == 1:
        return str(v.numerator)
    return "%d/%d" % (v.numerator, v.denominator)


def _pow_str(var, e):
    if e == 1:
        return var
    if e.denominator == 1:
        return "%s^%d" % (var, e.numerator)
    return "%s^(%d/%d)" % (var, e.numerator, e.denominator)


class SFunc:
    """Reduced ratio of r-free Laurent polynomials in s.

    Canonical form: the denominator is a polynomial in s (no negative
    exponents) with nonzero, normalized-to-1 constant term, and is
    coprime to the numerator.  Equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    @staticmethod
    def make(num, den, coprime=False):
        if den.is_zero():
            raise ZeroDivisionError("SFunc with zero denominator")
        if not (num.is_rfree() and den.is_rfree()):
            raise ValueError("SFunc parts must be r-free")
        num, den = num._align(den)
        if num.is_zero():
            return SFunc(num, SPoly.const(1, den.rs, den.rr))
        # move the denominator's s-offset onto the numerator
        if den.smin:
            num = num.shift(-den.smin)
            den = den.shift(-den.smin)
        if not coprime and den.ncols > 1:
            g = polygcd.poly_gcd(num.cells, den.cells)
            if len(g) > 1 or g[0] != 1:
                num = num._divexact_vec(g)
                den = den._divexact_vec(g)
        elif not coprime:
            g = igcd(polygcd.content(num.cells), den.cells[0])
            if g > 1:
                num = num._divexact_vec([g])
                den = den._divexact_vec([g])
        low = Fraction(den.cells[0], den.den)
        if low != 1:
            inv = 1 / low
            num = num * inv
            den = den * inv
        return SFunc(num, den)

    @classmethod
    def from_poly(cls, p):
        if not p.is_rfree():
            raise ValueError("SFunc needs an r-free polynomial")
        return cls(p, SPoly.const(1, p.rs, p.rr))

    @classmethod
    def const(cls, value, rs=2):
        return cls.from_poly(SPoly.const(value, rs, 2))

    # -- predicates -----------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    __bool__ = lambda self: not self.num.is_zero()

    def den_is_one(self):
        return self.den.is_one()

    @property
    def rs(self):
        return self.num.rs

    def rescale(self, rs):
        if rs == self.rs:
            return self
        return SFunc(self.num.rescale(rs, None), self.den.rescale(rs, None))

    def _align(self, other):
        rs = ilcm(self.rs, other.rs)
        return self.rescale(rs), other.rescale(rs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce_sfunc(other, self.rs)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(other)
        if a.den_is_one() and b.den_is_one():
            return SFunc.from_poly(a.num + b.num)
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        if a.den == b.den:
            return SFunc.make(a.num + b.num, a.den)
        num = a.num * b.den + b.num * a.den
        return SFunc.make(num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return SFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_sfunc(other, self.rs)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSERIES_TYPES):
            return NotImplemented
        other = _coerce_sfunc(other, self.rs)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(other)
        if a.is_zero() or b.is_zero():
            return SFunc.from_poly(SPoly.zero(a.rs))
        if a.den_is_one() and b.den_is_one():
            return SFunc(a.num * b.num, a.den)
        # cross-cancel before multiplying; the factors stay coprime
        n1, d2 = _cancel(a.num, b.den)
        n2, d1 = _cancel(b.num, a.den)
        return SFunc.make(n1 * n2, d1 * d2, coprime=True)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return SFunc.make(self.den, self.num, coprime=True)

    def __truediv__(self, other):
        other = _coerce_sfunc(other, self.rs)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        other = _coerce_sfunc(other, self.rs)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        raise TypeError("SFunc is not hashable")

    # -- evaluations ------------------------------------------------------

    def eval_s1(self):
        """Value at s = 1; raises PoleAtOne on a genuine pole."""
        d = self.den.eval_s1()
        if d == 0:
            raise PoleAtOne("denominator vanishes at s = 1: %s" % self.den.render())
        return self.num.eval_s1() / d

    def eval_numeric(self, s):
        return self.num.eval_numeric(s) / self.den.eval_numeric(s)

    def as_fraction(self):
        """The value as a Fraction, if constant; raises otherwise."""
        if not self.den.is_one():
            raise ValueError("not a constant")
        if self.num.is_zero():
            return Fraction(0)
        if self.num.ncols == 1 and self.num.smin == 0:
            return Fraction(self.num.cells[0], self.num.den)
        raise ValueError("not a constant")

    def render(self):
        if self.den.is_one():
            return self.num.render()
        return "(%s)/(%s)" % (self.num.render(), self.den.render())

    def __repr__(self):
        return "SFunc(%s)" % self.render()


def _coerce_sfunc(x, rs):
    if isinstance(x, SFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return SFunc.const(x, rs)
    if isinstance(x, SPoly):
        return SFunc.from_poly(x)
    return NotImplemented


def _cancel(num, den):
    """Divide out gcd(num, den); both r-free, den offset-normalized."""
    if den.is_one() or num.is_zero():
        return num, den
    g = polygcd.poly_gcd(num.cells, den.cells)
    if len(g) > 1 or g[0] != 1:
        return num._divexact_vec(g), den._divexact_vec(g)
    return num, den


def sfunc_eval_at_s1(f):
    """Holomorphy probe at y = 1: evaluate a canonical SFunc at s = 1."""
    return f.eval_s1()


class RFunc:
    """Reduced ratio of polynomials in r (= w**(1/root_r)) over SFunc.

    Reduction is the univariate gcd over the fraction field of s; the
    canonical denominator has lowest nonzero r-coefficient equal to 1.
    ``num``/``den`` are coefficient lists (r-exponent ``rmin + index``).
    """

    __slots__ = ("num", "den", "rmin_num", "rmin_den", "rr")

    def __init__(self, num, den, rmin_num, rmin_den, rr):
        self.num = num
        self.den = den
        self.rmin_num = rmin_num
        self.rmin_den = rmin_den
        self.rr = rr

    @staticmethod
    def make(num, den, rmin_num=0, rmin_den=0, rr=2, reduce=True):
        num, rmin_num = _rtrim(num, rmin_num)
        den, rmin_den = _rtrim(den, rmin_den)
        if not den:
            raise ZeroDivisionError("RFunc with zero denominator")
        if not num:
            rs = den[0].rs
            return RFunc([], [SFunc.const(1, rs)], 0, 0, rr)
        if reduce and len(num) > 1 and len(den) > 1:
            g = _rgcd(num, den)
            if len(g) > 1:
                num = _rdivexact(num, g)
                den = _rdivexact(den, g)
        # normalize: denominator's lowest r-coefficient becomes 1, and the
        # r-offset moves entirely to the numerator
        low = den[0]
        if not (low.den_is_one() and low.num.is_one()):
            inv = low.inverse()
            num = [c * inv for c in num]
            den = [c * inv for c in den]
        rmin_num -= rmin_den
        rmin_den = 0
        return RFunc(num, den, rmin_num, 0, rr)

    @classmethod
    def from_sfunc(cls, f, rr=2):
        return cls([f], [SFunc.const(1, f.rs)], 0, 0, rr) if f else cls.zero(f.rs, rr)

    @classmethod
    def zero(cls, rs=2, rr=2):
        return cls([], [SFunc.const(1, rs)], 0, 0, rr)

    @classmethod
    def const(cls, value, rs=2, rr=2):
        return cls.from_sfunc(SFunc.const(value, rs), rr)

    @classmethod
    def mono(cls, value, er, rs=2, rr=2):
        """value * r**er (er in units of 1/root_r powers of w)."""
        f = SFunc.const(value, rs)
        if not f:
            return cls.zero(rs, rr)
        return cls([f], [SFunc.const(1, rs)], er, 0, rr)

    def is_zero(self):
        return not self.num

    __bool__ = lambda self: bool(self.num)

    @property
    def rs(self):
        return self.den[0].rs

    def rescale_r(self, rr):
        if rr == self.rr:
            return self
        k, rem = divmod(rr, self.rr)
        if rem or k <= 0:
            raise ValueError("root order must rescale by a positive integer factor")
        return RFunc(_rstretch(self.num, k), _rstretch(self.den, k),
                     self.rmin_num * k, self.rmin_den * k, rr)

    def _align(self, other):
        rr = ilcm(self.rr, other.rr)
        return self.rescale_r(rr), other.rescale_r(rr)

    def __add__(self, other):
        other = _coerce_rfunc(other, self.rs, self.rr)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(other)
        num = _radd(_rmul(a.num, b.den), a.rmin_num + b.rmin_den,
                    _rmul(b.num, a.den), b.rmin_num + a.rmin_den)
        return RFunc.make(num[0], _rmul(a.den, b.den), num[1],
                          a.rmin_den + b.rmin_den, a.rr)

    __radd__ = __add__

    def __neg__(self):
        return RFunc([-c for c in self.num], self.den, self.rmin_num,
                     self.rmin_den, self.rr)

    def __sub__(self, other):
        other = _coerce_rfunc(other, self.rs, self.rr)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_rfunc(other, self.rs, self.rr)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(other)
        if a.is_zero() or b.is_zero():
            return RFunc.zero(a.rs, a.rr)
        return RFunc.make(_rmul(a.num, b.num), _rmul(a.den, b.den),
                          a.rmin_num + b.rmin_num, a.rmin_den + b.rmin_den, a.rr)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RFunc.make(self.den, self.num, self.rmin_den, self.rmin_num,
                          self.rr, reduce=False)

    def __truediv__(self, other):
        other = _coerce_rfunc(other, self.rs, self.rr)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        other = _coerce_rfunc(other, self.rs, self.rr)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(other)
        return (a.rmin_num == b.rmin_num and a.rmin_den == b.rmin_den
                and a.num == b.num and a.den == b.den)

    def __hash__(self):
        raise TypeError("RFunc is not hashable")

    def limit_w1(self):
        """lim w -> 1 as an SFunc; PoleAtOne when it does not exist.

        In canonical (coprime) form the limit exists iff the denominator
        does not vanish at r = 1; a pure r-power offset never obstructs.
        """
        if self.is_zero():
            return SFunc.const(0, self.rs)
        den1 = _rsum(self.den)
        if den1.is_zero():
            raise PoleAtOne("perturbation limit does not exist")
        return _rsum(self.num) / den1

    def render(self):
        num = _rrender(self.num, self.rmin_num, self.rr)
        if (len(self.den) == 1 and self.rmin_den == 0
                and self.den[0].den_is_one() and self.den[0].num.is_one()):
            return num
        return "(%s)/(%s)" % (num, _rrender(self.den, self.rmin_den, self.rr))

    def __repr__(self):
        return "RFunc(%s)" % self.render()


def _coerce_rfunc(x, rs, rr):
    if isinstance(x, RFunc):
        return x
    if isinstance(x, SFunc):
        return RFunc.from_sfunc(x, rr)
    if isinstance(x, (int, Fraction)):
        return RFunc.const(x, rs, rr)
    return NotImplemented


def _rtrim(v, rmin):
    v = list(v)
    while v and v[-1].is_zero():
        v.pop()
    drop = 0
    while drop < len(v) and v[drop].is_zero():
        drop += 1
    return v[drop:], rmin + drop


def _rstretch(v, k):
    if k == 1 or not v:
        return list(v)
    zero = SFunc.const(0, v[0].rs)
    out = [zero] * ((len(v) - 1) * k + 1)
    for i, c in enumerate(v):
        out[i * k] = c
    return out


def _rmul(a, b):
    out = [SFunc.const(0, a[0].rs) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


def _radd(a, amin, b, bmin):
    lo = min(amin, bmin)
    hi = max(amin + len(a), bmin + len(b))
    zero = SFunc.const(0, a[0].rs if a else b[0].rs)
    out = [zero] * (hi - lo)
    for i, x in enumerate(a):
        out[amin - lo + i] = out[amin - lo + i] + x
    for i, x in enumerate(b):
        out[bmin - lo + i] = out[bmin - lo + i] + x
    return (out, lo)


def _rsum(v):
    total = SFunc.const(0, v[0].rs)
    for c in v:
        total = total + c
    return total


def _rgcd(a, b):
    """Monic Euclidean gcd in r over the fraction field of s."""
    a = list(a)
    b = list(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return b if not a else [SFunc.const(1, b[0].rs)]
        r = _rrem(a, b)
        a, b = b, r
    lead = a[-1]
    if not (lead.den_is_one() and lead.num.is_one()):
        inv = lead.inverse()
        a = [c * inv for c in a]
    return a


def _rrem(f, g):
    """Remainder of f by g over the SFunc field."""
    rem = list(f)
    glead_inv = g[-1].inverse()
    gl = len(g)
    while len(rem) >= gl:
        c = rem[-1] * glead_inv
        if c:
            for j in range(gl - 1):
                rem[len(rem) - gl + j] = rem[len(rem) - gl + j] - c * g[j]
        rem.pop()
        while rem and rem[-1].is_zero():
            rem.pop()
    return rem


def _rdivexact(f, g):
    """Exact quotient of f by g over the SFunc field."""
    rem = list(f)
    glead_inv = g[-1].inverse()
    gl = len(g)
    q = [SFunc.const(0, g[0].rs)] * (len(f) - gl + 1)
    for k in range(len(f) - gl, -1, -1):
        c = rem[k + gl - 1] * glead_inv
        q[k] = c
        if c:
            for j in range(gl):
                rem[k + j] = rem[k + j] - c * g[j]
    if any(rem):
        raise ArithmeticError("inexact division in r")
    return q


def _rrender(v, rmin, rr):
    parts = []
    for i, c in enumerate(v):
        if c.is_zero():
            continue
        e = Fraction(rmin + i, rr)
        body = _pow_str("w", e) if e else ""
        cs = c.render()
        if not body:
            parts.append(cs)
        elif cs == "1":
            parts.append(body)
        else:
            parts.append("(%s)*%s" % (cs, body))
    return " + ".join(parts) if parts else "0"


def rfunc_limit_w1(f):
    """Limit of a reduced RFunc as the perturbation variable w -> 1."""
    return f.limit_w1()


# SFunc.__mul__ must defer to QSeries.__rmul__; filled in by qseries.
QSERIES_TYPES = ()


def _register_qseries(cls):
    global QSERIES_TYPES
    QSERIES_TYPES = QSERIES_TYPES + (cls,)
