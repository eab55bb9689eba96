"""Exact gcd of integer polynomial vectors.

The workhorse is the heuristic evaluation gcd: evaluate both inputs at a
large power of two, take an integer gcd, read the candidate back off the
balanced digits and verify it by exact division.  Everything stays in
integer arithmetic (content/primitive-part bookkeeping does the
fraction-free reduction); a primitive pseudo-remainder sequence serves
as the deterministic fallback when the heuristic keeps missing.
"""

from math import gcd as igcd

from ellgenus._kernels import big_gcd, vdivexact, vmaxbits, vpack, vunpack

__all__ = ["content", "primitive", "poly_gcd"]


def content(v):
    """gcd of all coefficients (0 for the empty vector)."""
    g = 0
    for x in v:
        if x:
            g = igcd(g, x)
            if g == 1:
                return 1
    return g


def _strip(v):
    lo = 0
    hi = len(v)
    while hi > lo and not v[hi - 1]:
        hi -= 1
    while lo < hi and not v[lo]:
        lo += 1
    return v[lo:hi], lo


def primitive(v):
    """Divide out the content; normalize the leading coefficient positive."""
    c = content(v)
    if not c:
        return []
    if v[-1] < 0:
        c = -c
    if c != 1:
        v = [x // c for x in v]
    return v


def _heuristic(a, b, tries=6):
    # a, b primitive with nonzero constant and leading terms
    bits = max(vmaxbits(a), vmaxbits(b)) + 8
    limit = min(len(a), len(b))
    for _ in range(tries):
        bits = (bits + 7) & ~7
        g = big_gcd(abs(vpack(a, bits)), abs(vpack(b, bits)))
        try:
            cand = vunpack(g, bits, limit)
        except OverflowError:
            bits = 2 * bits + 8
            continue
        cand, _ = _strip(cand)
        cand = primitive(cand)
        if cand:
            if len(cand) == 1:
                return [1]
            if vdivexact(a, cand) is not None and vdivexact(b, cand) is not None:
                return cand
        bits = 2 * bits + 8
    return None


def _prem(f, g):
    """Pseudo-remainder of f by g (primitive part taken afterwards)."""
    rem = list(f)
    gl = len(g)
    glead = g[-1]
    while True:
        rem, _ = _strip(rem)
        if len(rem) < gl:
            return rem
        k = len(rem) - gl
        lead = rem[-1]
        rem = [x * glead for x in rem]
        for j in range(gl):
            rem[k + j] -= lead * g[j]
        rem.pop()


def _prs(a, b):
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = primitive(_prem(a, b))
        a, b = b, r
    return primitive(a)


def poly_gcd(a, b):
    """gcd of two integer coefficient vectors (low-to-high order).

    Returns a primitive vector with positive leading coefficient times
    the gcd of the two contents.  Inputs must have nonzero constant
    terms (callers factor out powers of the variable first), and at
    least one must be nonzero.
    """
    a, _ = _strip(list(a))
    b, _ = _strip(list(b))
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    ca = content(a)
    cb = content(b)
    cg = igcd(ca, cb)
    pa = [x // ca for x in a] if ca != 1 else list(a)
    pb = [x // cb for x in b] if cb != 1 else list(b)
    if pa[-1] < 0:
        pa = [-x for x in pa]
    if pb[-1] < 0:
        pb = [-x for x in pb]
    if len(pa) == 1 or len(pb) == 1:
        g = [1]
    else:
        g = _heuristic(pa, pb)
        if g is None:
            g = _prs(pa, pb)
    if cg != 1:
        return [x * cg for x in g]
    return g
