"""Pure-Python twin of the compiled term-map kernel.

A term map is a dict sending an exponent tuple (one non-negative int per
parameter) to a non-zero integer coefficient.  Every function returns a
fresh dict and never stores a zero coefficient.
"""

BACKEND = "python"


def tm_add(a, b):
    out = dict(a)
    for mono, coeff in b.items():
        c = out.get(mono, 0) + coeff
        if c:
            out[mono] = c
        elif mono in out:
            del out[mono]
    return out


def tm_sub(a, b):
    out = dict(a)
    for mono, coeff in b.items():
        c = out.get(mono, 0) - coeff
        if c:
            out[mono] = c
        elif mono in out:
            del out[mono]
    return out


def tm_neg(a):
    return {mono: -coeff for mono, coeff in a.items()}


def tm_scale(a, k):
    if k == 0:
        return {}
    return {mono: k * coeff for mono, coeff in a.items()}


def tm_mul(a, b):
    if not a or not b:
        return {}
    # iterate over the smaller factor's terms in the outer loop
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for mb, cb in b.items():
        for ma, ca in a.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            c = out.get(mono, 0) + ca * cb
            if c:
                out[mono] = c
            elif mono in out:
                del out[mono]
    return out
