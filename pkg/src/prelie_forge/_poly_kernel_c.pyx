# cython: language_level=3
"""Compiled term-map kernel: sparse exponent-tuple -> integer maps.

Mirrors _poly_kernel_py exactly; the Python twin is the fallback when this
extension is unavailable.  Coefficients are arbitrary-precision Python
ints, so the speedup comes from moving dict/tuple traffic into C loops.
"""

BACKEND = "c"


def tm_add(dict a, dict b):
    cdef dict out = dict(a)
    cdef object mono, coeff, c
    for mono, coeff in b.items():
        c = out.get(mono, 0) + coeff
        if c:
            out[mono] = c
        elif mono in out:
            del out[mono]
    return out


def tm_sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object mono, coeff, c
    for mono, coeff in b.items():
        c = out.get(mono, 0) - coeff
        if c:
            out[mono] = c
        elif mono in out:
            del out[mono]
    return out


def tm_neg(dict a):
    cdef dict out = {}
    cdef object mono, coeff
    for mono, coeff in a.items():
        out[mono] = -coeff
    return out


def tm_scale(dict a, k):
    cdef dict out = {}
    cdef object mono, coeff
    if k == 0:
        return out
    for mono, coeff in a.items():
        out[mono] = k * coeff
    return out


def tm_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ma, mb, mono
    cdef object ca, cb, c
    cdef Py_ssize_t i, nvars
    if not a or not b:
        return out
    if len(a) < len(b):
        a, b = b, a
    for mb, cb in b.items():
        nvars = len(<tuple> mb)
        for ma, ca in a.items():
            mono = tuple((<tuple> ma)[i] + (<tuple> mb)[i] for i in range(nvars))
            c = out.get(mono, 0) + ca * cb
            if c:
                out[mono] = c
            elif mono in out:
                del out[mono]
    return out
