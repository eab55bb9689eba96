"""Truncated power series in q over the exact coefficient tower.

A QSeries keeps exactly the coefficients of q^0 .. q^Q.  The coefficient
objects only need ring arithmetic (+, -, *), which SPoly, SFunc and
RFunc all provide; inversion additionally needs ``.inverse()`` on the
constant term.  Operations between series of different truncation
orders truncate to the shorter one first.
"""

from fractions import Fraction

from ellgenus import coeff as _coeff
from ellgenus.coeff import SFunc
from ellgenus.errors import NonUnitLeadingTerm, OutOfRange

__all__ = ["QSeries", "qs_mul", "qs_invert", "qs_coefficient", "qs_div"]


class QSeries:
    """coeffs[k] is the exact coefficient of q**k, 0 <= k <= q_order."""

    __slots__ = ("coeffs", "q_order")

    def __init__(self, coeffs, q_order=None):
        coeffs = list(coeffs)
        if q_order is None:
            q_order = len(coeffs) - 1
        if q_order < 0 or len(coeffs) != q_order + 1:
            raise ValueError("need exactly q_order + 1 coefficients")
        self.coeffs = coeffs
        self.q_order = q_order

    @classmethod
    def constant(cls, c0, q_order):
        zero = c0 * 0
        return cls([c0] + [zero] * q_order)

    @classmethod
    def one(cls, q_order, rs=2):
        return cls.constant(SFunc.const(1, rs), q_order)

    @classmethod
    def zero(cls, q_order, rs=2):
        return cls.constant(SFunc.const(0, rs), q_order)

    # -- helpers --------------------------------------------------------

    def truncate(self, q_order):
        if q_order == self.q_order:
            return self
        if q_order > self.q_order:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.coeffs[:q_order + 1])

    def _common(self, other):
        q = min(self.q_order, other.q_order)
        return self.truncate(q), other.truncate(q)

    def map(self, fn):
        return QSeries([fn(c) for c in self.coeffs])

    def is_zero(self):
        return not any(self.coeffs)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self._common(other)
        return QSeries([x + y for x, y in zip(a.coeffs, b.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self._common(other)
        return QSeries([x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __neg__(self):
        return QSeries([-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, QSeries):
            a, b = self._common(other)
            q = a.q_order
            out = []
            for n in range(q + 1):
                acc = a.coeffs[0] * b.coeffs[n]
                for k in range(1, n + 1):
                    acc = acc + a.coeffs[k] * b.coeffs[n - k]
                out.append(acc)
            return QSeries(out)
        # scalar (coefficient-level) multiplication
        return QSeries([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.q_order != other.q_order:
            return False
        return all(x == y for x, y in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        raise TypeError("QSeries is not hashable")

    def coefficient(self, k):
        if not 0 <= k <= self.q_order:
            raise OutOfRange("q^%d outside truncation order %d" % (k, self.q_order))
        return self.coeffs[k]

    def invert(self):
        c0 = self.coeffs[0]
        if not c0:
            raise NonUnitLeadingTerm("constant term is zero")
        inv0 = c0.inverse()
        out = [inv0]
        for n in range(1, self.q_order + 1):
            acc = self.coeffs[1] * out[n - 1]
            for k in range(2, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-(inv0 * acc))
        return QSeries(out)

    def divide(self, other):
        """Series quotient self/other; other's constant term must be a unit."""
        a, b = self._common(other)
        c0 = b.coeffs[0]
        if not c0:
            raise NonUnitLeadingTerm("constant term is zero")
        inv0 = c0.inverse()
        out = []
        for n in range(a.q_order + 1):
            acc = a.coeffs[n]
            for k in range(n):
                acc = acc - out[k] * b.coeffs[n - k]
            out.append(acc * inv0)
        return QSeries(out)

    # -- conversions / output ----------------------------------------------

    def eval_numeric(self, s, q):
        total = 0j
        for n in range(self.q_order, -1, -1):
            total = total * q + self.coeffs[n].eval_numeric(s)
        return total

    def render(self):
        lines = []
        for k, c in enumerate(self.coeffs):
            body = c.render() if c else "0"
            lines.append("q^%d: %s" % (k, body))
        return "\n".join(lines)

    def __repr__(self):
        return "QSeries(%s)" % "; ".join(
            c.render() if hasattr(c, "render") else repr(c) for c in self.coeffs)


def qs_mul(a, b):
    """Cauchy product truncated at the smaller order."""
    return a * b

def qs_invert(a):
    """Multiplicative inverse; NonUnitLeadingTerm if q^0 term vanishes."""
    return a.invert()

def qs_coefficient(a, k):
    """Exact coefficient of q**k; OutOfRange beyond the truncation."""
    return a.coefficient(k)

def qs_div(a, b):
    """Series quotient a/b."""
    return a.divide(b)


def qs_scalar(value, q_order, rs=2):
    """Constant series with a rational value."""
    return QSeries.constant(SFunc.const(Fraction(value), rs), q_order)


_coeff._register_qseries(QSeries)
