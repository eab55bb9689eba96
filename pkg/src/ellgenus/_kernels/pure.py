"""Pure-Python integer vector kernels.

These are the hot inner loops of the exact Laurent-polynomial layer:
dense convolution, Kronecker packing/unpacking, in-place placement and
exact division.  Coefficients are arbitrary-precision Python ints and
vectors are plain lists ordered from lowest to highest exponent.

A compiled twin with the same signatures lives in ``_speed.pyx``; the
package selects one at import time (see ``ellgenus._kernels``).
"""

try:
    from gmpy2 import mpz as _mpz

    def big_mul(a, b):
        return int(_mpz(a) * _mpz(b))

except ImportError:  # pragma: no cover - exercised only without gmpy2
    def big_mul(a, b):
        return a * b


# Below this len(a)*len(b), schoolbook convolution beats pack/multiply/unpack.
_SCHOOLBOOK_CUTOFF = 2304


def vmaxbits(v):
    """Largest bit length appearing in the vector (0 for all-zero)."""
    m = 0
    for x in v:
        n = x.bit_length() if x >= 0 else (-x).bit_length()
        if n > m:
            m = n
    return m


def vpack(v, bits):
    """Evaluate sum(v[i] * 2**(bits*i)); bits must be a multiple of 8."""
    step = bits >> 3
    n = len(v)
    pos = bytearray(step * n)
    neg = None
    for i, x in enumerate(v):
        if x > 0:
            pos[i * step:(i + 1) * step] = x.to_bytes(step, "little")
        elif x < 0:
            if neg is None:
                neg = bytearray(step * n)
            neg[i * step:(i + 1) * step] = (-x).to_bytes(step, "little")
    p = int.from_bytes(bytes(pos), "little")
    if neg is None:
        return p
    return p - int.from_bytes(bytes(neg), "little")


def vunpack(n, bits, count):
    """Recover `count` balanced base-2**bits digits of n.

    Inverse of convolution-through-packing: every digit of the true
    result must satisfy |digit| < 2**(bits-1).
    """
    if n < 0:
        return [-x for x in vunpack(-n, bits, count)]
    step = bits >> 3
    raw = n.to_bytes(step * count + 16, "little")
    half = 1 << (bits - 1)
    full = 1 << bits
    out = [0] * count
    carry = 0
    for i in range(count):
        d = int.from_bytes(raw[i * step:(i + 1) * step], "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out[i] = d
    if int.from_bytes(raw[count * step:], "little") + carry != 0:
        raise OverflowError("kronecker digit overflow")
    return out


def _school(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def vmul(a, b):
    """Dense convolution of two coefficient vectors."""
    na = len(a)
    nb = len(b)
    if not na or not nb:
        return []
    if na * nb <= _SCHOOLBOOK_CUTOFF:
        return _school(a, b)
    bits = vmaxbits(a) + vmaxbits(b) + min(na, nb).bit_length() + 2
    bits = (bits + 7) & ~7
    return vunpack(big_mul(vpack(a, bits), vpack(b, bits)), bits, na + nb - 1)


def vplace(dst, off, src, mult):
    """dst[off+i] += mult * src[i] for all i."""
    if mult == 1:
        for i, x in enumerate(src):
            if x:
                dst[off + i] += x
    elif mult:
        for i, x in enumerate(src):
            if x:
                dst[off + i] += mult * x


def vscale(v, m):
    """Return [x * m for x in v]."""
    return [x * m for x in v]


def vdivexact(f, g):
    """Exact quotient of f by g in Z[x], or None if g does not divide f.

    Both vectors run low to high with nonzero end coefficients.
    """
    dq = len(f) - len(g)
    if dq < 0:
        return None
    rem = list(f)
    q = [0] * (dq + 1)
    gl = len(g)
    glead = g[-1]
    for k in range(dq, -1, -1):
        c = rem[k + gl - 1]
        if c:
            qq, rr = divmod(c, glead)
            if rr:
                return None
            q[k] = qq
            for j in range(gl - 1):
                y = g[j]
                if y:
                    rem[k + j] -= qq * y
            rem[k + gl - 1] = 0
    for x in rem:
        if x:
            return None
    return q
