"""Element-level second path for every law.

Each oracle evaluates a law's defining identity on random rational
elements, using nothing but mul_apply / comul_apply / operator rows and
explicit loops.  The production checkers instantiate the same identities
on basis tuples through the tensor slot engine; agreement of the two
paths on random samples is the multilinearity guard.
"""

import random
from fractions import Fraction


def rand_vec(rng, n):
    return [Fraction(rng.randint(-4, 4)) for _ in range(n)]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def op_row(mat, x):
    """Apply an operator matrix to a coefficient vector."""
    out = [Fraction(0)] * (len(mat[0]) if mat else 0)
    for i, xi in enumerate(x):
        if xi:
            for j, m in enumerate(mat[i]):
                out[j] = out[j] + xi * m
    return out


def comul_of_vec(C, x):
    return C.comul_apply(x)


def form_val(w, x, y):
    return sum(
        (x[i] * y[j] * w[i][j] for i in range(len(x)) for j in range(len(y))),
        Fraction(0),
    )


def fam_apply(fam, z, v):
    """rho(z)v for a matrix family indexed by the algebra basis."""
    m = len(fam[0]) if fam else 0
    out = [Fraction(0)] * m
    for i, zi in enumerate(z):
        if zi:
            for a, va in enumerate(v):
                if va:
                    for b in range(m):
                        out[b] = out[b] + zi * va * fam[i][a][b]
    return out


def corep_of_vec(fam, v):
    """xi(v) as an n x m matrix for fam[a][i][b]."""
    m = len(fam)
    n = len(fam[0]) if m else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for a, va in enumerate(v):
        if va:
            for i in range(n):
                for b in range(m):
                    out[i][b] = out[i][b] + va * fam[a][i][b]
    return out


def _is_zero_vec(vec):
    return all(v == 0 for v in vec)


# --- algebra side -----------------------------------------------------------

def pre_lie(b, rng):
    A = b.alg
    x, y, z = (rand_vec(rng, A.dim) for _ in range(3))
    m = A.mul_apply
    res = [
        p - q - r + s
        for p, q, r, s in zip(
            m(m(x, y), z), m(x, m(y, z)), m(m(y, x), z), m(y, m(x, z))
        )
    ]
    return _is_zero_vec(res)


def commutative(b, rng):
    A = b.alg
    x, y = rand_vec(rng, A.dim), rand_vec(rng, A.dim)
    return _is_zero_vec(
        [p - q for p, q in zip(A.mul_apply(x, y), A.mul_apply(y, x))]
    )


def lie_alg(b, rng):
    A = b.alg
    x, y, z = (rand_vec(rng, A.dim) for _ in range(3))
    m = A.mul_apply
    anti = [p + q for p, q in zip(m(x, y), m(y, x))]
    jac = [
        p + q + r
        for p, q, r in zip(m(m(x, y), z), m(m(y, z), x), m(m(z, x), y))
    ]
    return _is_zero_vec(anti) and _is_zero_vec(jac)


def nijenhuis(b, rng):
    A = b.alg
    N = b.operators["N"].mat
    x, y = rand_vec(rng, A.dim), rand_vec(rng, A.dim)
    m = A.mul_apply
    nx, ny = op_row(N, x), op_row(N, y)
    res = [
        p + q - r - s
        for p, q, r, s in zip(
            m(nx, ny),
            op_row(N, op_row(N, m(x, y))),
            op_row(N, m(nx, y)),
            op_row(N, m(x, ny)),
        )
    ]
    return _is_zero_vec(res)


def pseudo_hessian(b, rng):
    A = b.alg
    w = b.forms["omega"].mat
    x, y, z = (rand_vec(rng, A.dim) for _ in range(3))
    m = A.mul_apply
    val = (
        form_val(w, m(x, y), z) - form_val(w, x, m(y, z))
        - form_val(w, m(y, x), z) + form_val(w, y, m(x, z))
    )
    return val == 0


def s_equation(b, rng):
    A = b.alg
    r = b.tensors["r"].mat
    n = A.dim
    u, v, w = (rand_vec(rng, n) for _ in range(3))
    total = Fraction(0)
    for p in range(n):
        for q in range(n):
            if not r[p][q]:
                continue
            for s in range(n):
                for t in range(n):
                    c = r[p][q] * r[s][t]
                    if not c:
                        continue
                    total += c * (
                        u[p] * dot(A.mul[q][s], v) * w[t]
                        + u[p] * v[s] * dot(A.mul[q][t], w)
                        - dot(A.mul[p][s], u) * v[q] * w[t]
                        - u[p] * v[s] * dot(A.mul[t][q], w)
                    )
    return total == 0


def symmetric_tensor(b, rng):
    r = b.tensors["r"].mat
    n = len(r)
    u, v = rand_vec(rng, n), rand_vec(rng, n)
    val = sum(
        (r[i][j] * (u[i] * v[j] - v[i] * u[j]) for i in range(n) for j in range(n)),
        Fraction(0),
    )
    return val == 0


def symmetric_form(b, rng):
    w = b.forms["omega"].mat
    n = len(w)
    x, y = rand_vec(rng, n), rand_vec(rng, n)
    return form_val(w, x, y) == form_val(w, y, x)


def s_nij_s_equation(b, rng):
    N = b.operators["N"].mat
    S = b.operators["S"].mat
    r = b.tensors["r"].mat
    n = len(r)
    u, v = rand_vec(rng, n), rand_vec(rng, n)
    su = [dot(S[p], u) for p in range(n)]
    nv = [dot(N[q], v) for q in range(n)]
    compat = sum(
        (r[p][q] * (su[p] * v[q] - u[p] * nv[q]) for p in range(n) for q in range(n)),
        Fraction(0),
    )
    return s_equation(b, rng) and compat == 0


# --- coalgebra side ---------------------------------------------------------

def pre_lie_co(b, rng):
    C = b.coalg
    n = C.dim
    x = rand_vec(rng, n)
    u, v, w = (rand_vec(rng, n) for _ in range(3))
    D = comul_of_vec(C, x)
    t1 = t2 = t3 = t4 = Fraction(0)
    for p in range(n):
        for q in range(n):
            if not D[p][q]:
                continue
            Dp = C.comul[p]
            Dq = C.comul[q]
            inner1 = sum(
                (Dp[a][c] * u[a] * v[c] for a in range(n) for c in range(n)),
                Fraction(0),
            )
            inner3 = sum(
                (Dp[a][c] * v[a] * u[c] for a in range(n) for c in range(n)),
                Fraction(0),
            )
            inner2 = sum(
                (Dq[a][c] * v[a] * w[c] for a in range(n) for c in range(n)),
                Fraction(0),
            )
            inner4 = sum(
                (Dq[a][c] * u[a] * w[c] for a in range(n) for c in range(n)),
                Fraction(0),
            )
            t1 += D[p][q] * inner1 * w[q]
            t3 += D[p][q] * inner3 * w[q]
            t2 += D[p][q] * u[p] * inner2
            t4 += D[p][q] * v[p] * inner4
    return t1 - t2 - t3 + t4 == 0


def cocommutative(b, rng):
    C = b.coalg
    n = C.dim
    x, u, v = (rand_vec(rng, n) for _ in range(3))
    D = comul_of_vec(C, x)
    val = sum(
        (D[i][j] * (u[i] * v[j] - v[i] * u[j]) for i in range(n) for j in range(n)),
        Fraction(0),
    )
    return val == 0


def lie_co(b, rng):
    C = b.coalg
    n = C.dim
    x, u, v, w = (rand_vec(rng, n) for _ in range(4))
    D = comul_of_vec(C, x)
    anti = sum(
        (D[i][j] * (u[i] * v[j] + v[i] * u[j]) for i in range(n) for j in range(n)),
        Fraction(0),
    )
    total = Fraction(0)
    for p in range(n):
        for q in range(n):
            if not D[p][q]:
                continue
            Dq = C.comul[q]
            for a in range(n):
                for c in range(n):
                    if Dq[a][c]:
                        coeff = D[p][q] * Dq[a][c]
                        total += coeff * (
                            u[p] * v[a] * w[c]
                            + u[a] * v[c] * w[p]
                            + u[c] * v[p] * w[a]
                        )
    return anti == 0 and total == 0


def pre_lie_bialg(b, rng):
    A, C = b.alg, b.coalg
    n = A.dim
    x, y, u, v = (rand_vec(rng, n) for _ in range(4))
    m = A.mul_apply
    Dxy = comul_of_vec(C, m(x, y))
    Dyx = comul_of_vec(C, m(y, x))
    Dx = comul_of_vec(C, x)
    Dy = comul_of_vec(C, y)

    def pair2(mat, uu, vv):
        return sum(
            (mat[i][j] * uu[i] * vv[j] for i in range(n) for j in range(n)),
            Fraction(0),
        )

    def e(i):
        out = [Fraction(0)] * n
        out[i] = Fraction(1)
        return out

    b1 = pair2(Dxy, u, v) - pair2(Dyx, u, v)
    b2 = pair2(Dxy, u, v) - pair2(Dxy, v, u)
    for a in range(n):
        for c in range(n):
            if Dy[a][c]:
                b1 -= Dy[a][c] * (
                    dot(m(x, e(a)), u) * v[c]
                    + u[a] * dot(m(x, e(c)), v)
                    - u[a] * dot(m(e(c), x), v)
                )
                b2 -= Dy[a][c] * (
                    u[a] * dot(m(x, e(c)), v)
                    - v[a] * dot(m(x, e(c)), u)
                    - dot(m(x, e(a)), v) * u[c]
                    + dot(m(x, e(a)), u) * v[c]
                )
            if Dx[a][c]:
                b1 -= Dx[a][c] * (
                    -dot(m(y, e(a)), u) * v[c]
                    - u[a] * dot(m(y, e(c)), v)
                    + u[a] * dot(m(e(c), y), v)
                )
                b2 -= Dx[a][c] * (
                    u[a] * dot(m(e(c), y), v) - dot(m(e(c), y), u) * v[a]
                )
    return b1 == 0 and b2 == 0


def co_s_equation(b, rng):
    C = b.coalg
    w = b.forms["omega"].mat
    n = C.dim
    x, y, z = (rand_vec(rng, n) for _ in range(3))
    Dy = comul_of_vec(C, y)
    Dz = comul_of_vec(C, z)
    Dx = comul_of_vec(C, x)

    def wv(vec, i):
        return sum((vec[p] * w[p][i] for p in range(n)), Fraction(0))

    def vw(i, vec):
        return sum((w[i][p] * vec[p] for p in range(n)), Fraction(0))

    total = Fraction(0)
    for a in range(n):
        for c in range(n):
            if Dy[a][c]:
                total += Dy[a][c] * (wv(x, a) * vw(c, z))
            if Dz[a][c]:
                total += Dz[a][c] * (wv(x, a) * wv(y, c))
                total -= Dz[a][c] * (wv(y, a) * wv(x, c))
            if Dx[a][c]:
                total -= Dx[a][c] * (vw(a, y) * vw(c, z))
    return total == 0


def pseudo_hessian_co(b, rng):
    C = b.coalg
    r = b.tensors["r"].mat
    n = C.dim
    u, v, w = (rand_vec(rng, n) for _ in range(3))
    total = Fraction(0)
    for p in range(n):
        for q in range(n):
            if not r[p][q]:
                continue
            Dp, Dq = C.comul[p], C.comul[q]
            for a in range(n):
                for c in range(n):
                    if Dp[a][c]:
                        total += r[p][q] * Dp[a][c] * (
                            u[a] * v[c] - v[a] * u[c]
                        ) * w[q]
                    if Dq[a][c]:
                        total += r[p][q] * Dq[a][c] * (
                            -u[p] * v[a] * w[c] + u[a] * v[p] * w[c]
                        )
    return total == 0


def co_nijenhuis(b, rng):
    C = b.coalg
    S = b.operators["S"].mat
    n = C.dim
    x, u, v = (rand_vec(rng, n) for _ in range(3))
    su = [dot(S[a], u) for a in range(n)]
    sv = [dot(S[a], v) for a in range(n)]
    Dx = comul_of_vec(C, x)
    sx = op_row(S, x)
    DSx = comul_of_vec(C, sx)
    DS2x = comul_of_vec(C, op_row(S, sx))

    def pair(mat, uu, vv):
        return sum(
            (mat[a][c] * uu[a] * vv[c] for a in range(n) for c in range(n)),
            Fraction(0),
        )

    val = pair(Dx, su, sv) + pair(DS2x, u, v) - pair(DSx, su, v) - pair(DSx, u, sv)
    return val == 0


def admissible_nstar(b, rng):
    C = b.coalg
    N = b.operators["N"].mat
    S = b.operators["S"].mat
    n = C.dim
    x, u, v = (rand_vec(rng, n) for _ in range(3))
    nu = [dot(N[a], u) for a in range(n)]
    nv = [dot(N[a], v) for a in range(n)]
    su = [dot(S[a], u) for a in range(n)]
    sv = [dot(S[a], v) for a in range(n)]
    n2u = [dot(N[a], nu) for a in range(n)]
    n2v = [dot(N[a], nv) for a in range(n)]
    Dx = comul_of_vec(C, x)
    DNx = comul_of_vec(C, op_row(N, x))

    def pair(mat, uu, vv):
        return sum(
            (mat[a][c] * uu[a] * vv[c] for a in range(n) for c in range(n)),
            Fraction(0),
        )

    eq1 = pair(DNx, u, sv) + pair(Dx, n2u, v) - pair(Dx, nu, sv) - pair(DNx, nu, v)
    eq2 = pair(DNx, su, v) + pair(Dx, u, n2v) - pair(Dx, su, nv) - pair(DNx, u, nv)
    return eq1 == 0 and eq2 == 0


def balanced(b, rng):
    A, C = b.alg, b.coalg
    n = A.dim
    x, y, u, v = (rand_vec(rng, n) for _ in range(4))
    Dx = comul_of_vec(C, x)
    Dy = comul_of_vec(C, y)

    def e(i):
        out = [Fraction(0)] * n
        out[i] = Fraction(1)
        return out

    total = Fraction(0)
    for a in range(n):
        for c in range(n):
            if Dx[a][c]:
                total += Dx[a][c] * (
                    dot(A.mul_apply(e(a), y), u) * v[c]
                    - u[c] * dot(A.mul_apply(e(a), y), v)
                )
            if Dy[a][c]:
                total += Dy[a][c] * (
                    u[c] * dot(A.mul_apply(e(a), x), v)
                    - dot(A.mul_apply(e(a), x), u) * v[c]
                )
    return total == 0


def lie_bialg(b, rng):
    if not lie_alg(b, rng) or not lie_co(b, rng):
        return False
    A, C = b.alg, b.coalg
    n = A.dim
    x, y, u, v = (rand_vec(rng, n) for _ in range(4))
    m = A.mul_apply
    Dxy = comul_of_vec(C, m(x, y))
    Dx = comul_of_vec(C, x)
    Dy = comul_of_vec(C, y)

    def e(i):
        out = [Fraction(0)] * n
        out[i] = Fraction(1)
        return out

    total = sum(
        (Dxy[a][c] * u[a] * v[c] for a in range(n) for c in range(n)),
        Fraction(0),
    )
    for a in range(n):
        for c in range(n):
            if Dy[a][c]:
                total -= Dy[a][c] * (
                    dot(m(x, e(a)), u) * v[c] + u[a] * dot(m(x, e(c)), v)
                )
            if Dx[a][c]:
                total += Dx[a][c] * (
                    dot(m(y, e(a)), u) * v[c] + u[a] * dot(m(y, e(c)), v)
                )
    return total == 0


def nij_lie_bialg(b, rng):
    if not (lie_bialg(b, rng) and nijenhuis(b, rng) and co_nijenhuis(b, rng)):
        return False
    A, C = b.alg, b.coalg
    N = b.operators["N"].mat
    S = b.operators["S"].mat
    n = A.dim
    x, y, u, v = (rand_vec(rng, n) for _ in range(4))
    m = A.mul_apply
    nx = op_row(N, x)
    sy = op_row(S, y)
    opmix = [
        p + q - r - s
        for p, q, r, s in zip(
            op_row(S, m(nx, y)),
            m(x, op_row(S, sy)),
            m(nx, sy),
            op_row(S, m(x, sy)),
        )
    ]
    su = [dot(S[a], u) for a in range(n)]
    nu = [dot(N[a], u) for a in range(n)]
    nv = [dot(N[a], v) for a in range(n)]
    n2v = [dot(N[a], nv) for a in range(n)]
    Dx = comul_of_vec(C, x)
    DNx = comul_of_vec(C, op_row(N, x))

    def pair(mat, uu, vv):
        return sum(
            (mat[a][c] * uu[a] * vv[c] for a in range(n) for c in range(n)),
            Fraction(0),
        )

    tmix = pair(DNx, su, v) + pair(Dx, u, n2v) - pair(Dx, su, nv) - pair(DNx, u, nv)
    return _is_zero_vec(opmix) and tmix == 0


# --- representations --------------------------------------------------------

def rep(b, rng):
    A = b.alg
    r = b.reps["rep"]
    x, y = rand_vec(rng, A.dim), rand_vec(rng, A.dim)
    v = rand_vec(rng, r.rep_dim)
    m = A.mul_apply
    eq1 = [
        p - q + s
        for p, q, s in zip(
            fam_apply(r.rho, [a - c for a, c in zip(m(x, y), m(y, x))], v),
            fam_apply(r.rho, x, fam_apply(r.rho, y, v)),
            fam_apply(r.rho, y, fam_apply(r.rho, x, v)),
        )
    ]
    eq2 = [
        p - q + s - t
        for p, q, s, t in zip(
            fam_apply(r.phi, m(x, y), v),
            fam_apply(r.rho, x, fam_apply(r.phi, y, v)),
            fam_apply(r.phi, y, fam_apply(r.rho, x, v)),
            fam_apply(r.phi, y, fam_apply(r.phi, x, v)),
        )
    ]
    return _is_zero_vec(eq1) and _is_zero_vec(eq2)


def nij_rep(b, rng):
    A = b.alg
    N = b.operators["N"].mat
    al = b.operators["alpha"].mat
    r = b.reps["rep"]
    x = rand_vec(rng, A.dim)
    v = rand_vec(rng, r.rep_dim)
    nx = op_row(N, x)
    ok = True
    for fam in (r.rho, r.phi):
        res = [
            p + q - s - t
            for p, q, s, t in zip(
                fam_apply(fam, nx, op_row(al, v)),
                op_row(al, op_row(al, fam_apply(fam, x, v))),
                op_row(al, fam_apply(fam, nx, v)),
                op_row(al, fam_apply(fam, x, op_row(al, v))),
            )
        ]
        ok = ok and _is_zero_vec(res)
    return ok


def admissible_s(b, rng):
    A = b.alg
    N = b.operators["N"].mat
    S = b.operators["S"].mat
    x, y = rand_vec(rng, A.dim), rand_vec(rng, A.dim)
    m = A.mul_apply
    nx, ny = op_row(N, x), op_row(N, y)
    sx, sy = op_row(S, x), op_row(S, y)
    eq1 = [
        p + q - s - t
        for p, q, s, t in zip(
            op_row(S, m(nx, y)), m(x, op_row(S, sy)),
            m(nx, sy), op_row(S, m(x, sy)),
        )
    ]
    eq2 = [
        p + q - s - t
        for p, q, s, t in zip(
            op_row(S, m(x, ny)), m(op_row(S, sx), y),
            m(sx, ny), op_row(S, m(sx, y)),
        )
    ]
    return _is_zero_vec(eq1) and _is_zero_vec(eq2)


def admissible_beta(b, rng):
    A = b.alg
    N = b.operators["N"].mat
    be = b.operators["beta"].mat
    r = b.reps["rep"]
    x = rand_vec(rng, A.dim)
    v = rand_vec(rng, r.rep_dim)
    nx = op_row(N, x)
    ok = True
    for fam in (r.rho, r.phi):
        res = [
            p + q - s - t
            for p, q, s, t in zip(
                op_row(be, fam_apply(fam, nx, v)),
                fam_apply(fam, x, op_row(be, op_row(be, v))),
                fam_apply(fam, nx, op_row(be, v)),
                op_row(be, fam_apply(fam, x, op_row(be, v))),
            )
        ]
        ok = ok and _is_zero_vec(res)
    return ok


def o_operator_weak(b, rng):
    A = b.alg
    N = b.operators["N"].mat
    T = b.operators["T"].mat
    al = b.operators["alpha"].mat
    r = b.reps["rep"]
    u, v = rand_vec(rng, r.rep_dim), rand_vec(rng, r.rep_dim)
    tu, tv = op_row(T, u), op_row(T, v)
    inner = [
        p + q
        for p, q in zip(fam_apply(r.rho, tu, v), fam_apply(r.phi, tv, u))
    ]
    z4 = [p - q for p, q in zip(A.mul_apply(tu, tv), op_row(T, inner))]
    z5 = [p - q for p, q in zip(op_row(N, tu), op_row(T, op_row(al, u)))]
    return _is_zero_vec(z4) and _is_zero_vec(z5)


def o_operator(b, rng):
    return o_operator_weak(b, rng) and nij_rep(b, rng)


def corep(b, rng):
    C = b.coalg
    cr = b.coreps["corep"]
    n, m = cr.coalg_dim, cr.corep_dim
    v = rand_vec(rng, m)
    u1, u2 = rand_vec(rng, n), rand_vec(rng, n)
    w = rand_vec(rng, m)
    X = corep_of_vec(cr.xi, v)
    E = corep_of_vec(cr.eta, v)

    def delta_slot0(mat, uu, vv, ww):
        total = Fraction(0)
        for i in range(n):
            for bb in range(m):
                if mat[i][bb]:
                    Di = C.comul[i]
                    total += mat[i][bb] * ww[bb] * sum(
                        (Di[a][c] * uu[a] * vv[c] for a in range(n) for c in range(n)),
                        Fraction(0),
                    )
        return total

    def fam_slot1(mat, fam, uu, vv, ww):
        total = Fraction(0)
        for i in range(n):
            for bb in range(m):
                if mat[i][bb]:
                    for j in range(n):
                        for c in range(m):
                            if fam[bb][j][c]:
                                total += mat[i][bb] * fam[bb][j][c] * (
                                    uu[i] * vv[j] * ww[c]
                                )
        return total

    crep1 = (
        delta_slot0(X, u1, u2, w) - delta_slot0(X, u2, u1, w)
        - fam_slot1(X, cr.eta, u1, u2, w) + fam_slot1(X, cr.eta, u2, u1, w)
    )
    crep2 = (
        delta_slot0(E, u1, u2, w)
        - fam_slot1(X, cr.eta, u1, u2, w)
        + fam_slot1(E, cr.xi, u2, u1, w)
        - fam_slot1(E, cr.eta, u2, u1, w)
    )
    return crep1 == 0 and crep2 == 0


def matched_pair(b, rng):
    pair = b.pair
    A, H = pair.a_alg, pair.h_alg
    na, nh = A.dim, H.dim
    x, y = rand_vec(rng, na), rand_vec(rng, na)
    a, c = rand_vec(rng, nh), rand_vec(rng, nh)
    rA = lambda z, vv: fam_apply(pair.rho_a, z, vv)
    pA = lambda z, vv: fam_apply(pair.phi_a, z, vv)
    rH = lambda z, vv: fam_apply(pair.rho_h, z, vv)
    pH = lambda z, vv: fam_apply(pair.phi_h, z, vv)
    mA, mH = A.mul_apply, H.mul_apply

    e1 = [
        p + q - r - s - t
        for p, q, r, s, t in zip(
            rA(x, mH(a, c)),
            rA([i - j for i, j in zip(rH(a, x), pH(a, x))], c),
            mH([i - j for i, j in zip(rA(x, a), pA(x, a))], c),
            pA(pH(c, x), a),
            mH(a, rA(x, c)),
        )
    ]
    e2 = [
        p - q + r - s + t
        for p, q, r, s, t in zip(
            pA(x, [i - j for i, j in zip(mH(a, c), mH(c, a))]),
            pA(rH(c, x), a),
            pA(rH(a, x), c),
            mH(a, pA(x, c)),
            mH(c, pA(x, a)),
        )
    ]
    e3 = [
        p + q - r - s - t
        for p, q, r, s, t in zip(
            rH(a, mA(x, y)),
            rH([i - j for i, j in zip(rA(x, a), pA(x, a))], y),
            mA([i - j for i, j in zip(rH(a, x), pH(a, x))], y),
            pH(pA(y, a), x),
            mA(x, rH(a, y)),
        )
    ]
    e4 = [
        p - q + r - s + t
        for p, q, r, s, t in zip(
            pH(a, [i - j for i, j in zip(mA(x, y), mA(y, x))]),
            pH(rA(y, a), x),
            pH(rA(x, a), y),
            mA(x, pH(a, y)),
            mA(y, pH(a, x)),
        )
    ]
    return all(_is_zero_vec(e) for e in (e1, e2, e3, e4))


def pencil_compat(b, rng):
    C1, C2 = b.coalg, b.coalg2
    n = C1.dim
    x = rand_vec(rng, n)
    u, v, w = (rand_vec(rng, n) for _ in range(3))
    D1 = comul_of_vec(C1, x)
    D2 = comul_of_vec(C2, x)

    def cross(Douter, inner_comul, uu, vv, ww, slot):
        total = Fraction(0)
        for p in range(n):
            for q in range(n):
                if not Douter[p][q]:
                    continue
                if slot == 0:
                    mat = inner_comul[p]
                    total += Douter[p][q] * ww[q] * sum(
                        (mat[a][c] * uu[a] * vv[c] for a in range(n) for c in range(n)),
                        Fraction(0),
                    )
                else:
                    mat = inner_comul[q]
                    total += Douter[p][q] * uu[p] * sum(
                        (mat[a][c] * vv[a] * ww[c] for a in range(n) for c in range(n)),
                        Fraction(0),
                    )
        return total

    val = (
        cross(D1, C2.comul, u, v, w, 0) + cross(D2, C1.comul, u, v, w, 0)
        - cross(D1, C2.comul, u, v, w, 1) - cross(D2, C1.comul, u, v, w, 1)
        - cross(D1, C2.comul, v, u, w, 0) - cross(D2, C1.comul, v, u, w, 0)
        + cross(D1, C2.comul, v, u, w, 1) + cross(D2, C1.comul, v, u, w, 1)
    )
    # note: the slot-1 swapped terms exchange the first two output legs
    return val == 0


def pencil_morphism(b, rng):
    C1, C2 = b.coalg, b.coalg2
    S = b.operators["S"].mat
    n = C1.dim
    x, u, v = (rand_vec(rng, n) for _ in range(3))
    su = [dot(S[a], u) for a in range(n)]
    sv = [dot(S[a], v) for a in range(n)]
    sx = op_row(S, x)

    def pair(mat, uu, vv):
        return sum(
            (mat[a][c] * uu[a] * vv[c] for a in range(n) for c in range(n)),
            Fraction(0),
        )

    com1 = pair(comul_of_vec(C2, sx), u, v) - pair(comul_of_vec(C1, x), su, sv)
    com2 = (
        pair(comul_of_vec(C1, sx), u, v) + pair(comul_of_vec(C2, x), u, v)
        - pair(comul_of_vec(C1, x), u, sv) - pair(comul_of_vec(C1, x), su, v)
    )
    if com1 != 0 or com2 != 0:
        return False
    if not b.coreps:
        return True
    cr1 = b.coreps["corep"]
    cr2 = b.coreps["corep2"]
    th = b.operators["theta"].mat
    m = cr1.corep_dim
    w = rand_vec(rng, m)
    ww = rand_vec(rng, m)
    tw = op_row(th, w)
    tww = [dot(th[a], ww) for a in range(m)]

    def pair_av(mat, uu, vv):
        return sum(
            (mat[i][bb] * uu[i] * vv[bb] for i in range(n) for bb in range(m)),
            Fraction(0),
        )

    for fam1, fam2 in ((cr1.xi, cr2.xi), (cr1.eta, cr2.eta)):
        F1 = corep_of_vec(fam1, w)
        com_h = pair_av(corep_of_vec(fam2, tw), u, ww) - pair_av(F1, su, tww)
        com_p = (
            pair_av(corep_of_vec(fam1, tw), u, ww)
            + pair_av(corep_of_vec(fam2, w), u, ww)
            - pair_av(F1, u, tww) - pair_av(F1, su, ww)
        )
        if com_h != 0 or com_p != 0:
            return False
    return True


def pi_admissible(b, rng, pi):
    A = b.alg
    N = b.operators["N"].mat
    al = b.operators["alpha"].mat
    r = b.reps["rep"]
    family, theta = pi["family"], Fraction(pi["theta"])
    x, y = rand_vec(rng, A.dim), rand_vec(rng, A.dim)
    v = rand_vec(rng, r.rep_dim)
    m = A.mul_apply
    nx, ny = op_row(N, x), op_row(N, y)
    n2x, n2y = op_row(N, nx), op_row(N, ny)
    av = op_row(al, v)
    a2v = op_row(al, av)

    def fam_terms(fam):
        fx = lambda z, vv: fam_apply(fam, z, vv)
        return fx

    checks = []
    if family == "scale":
        checks.append([
            p + theta * q - (1 + theta) * s
            for p, q, s in zip(
                m(x, n2y), op_row(N, op_row(N, m(x, y))), op_row(N, m(x, ny))
            )
        ])
        checks.append([
            p + theta * q - (1 + theta) * s
            for p, q, s in zip(
                m(n2x, y), op_row(N, op_row(N, m(x, y))), op_row(N, m(nx, y))
            )
        ])
        for fam in (r.rho, r.phi):
            fx = fam_terms(fam)
            checks.append([
                p + theta * q - (1 + theta) * s
                for p, q, s in zip(
                    fx(x, a2v),
                    op_row(al, op_row(al, fx(x, v))),
                    op_row(al, fx(x, av)),
                )
            ])
            checks.append([
                p + theta * q - (1 + theta) * s
                for p, q, s in zip(
                    fx(n2x, v),
                    op_row(al, op_row(al, fx(x, v))),
                    op_row(al, fx(nx, v)),
                )
            ])
    elif family == "reflect":
        checks.append([
            p + theta * q - s - theta * t
            for p, q, s, t in zip(
                m(x, n2y), op_row(N, m(x, y)),
                op_row(N, op_row(N, m(x, y))), m(x, ny),
            )
        ])
        checks.append([
            p + theta * q - s - theta * t
            for p, q, s, t in zip(
                m(n2x, y), op_row(N, m(x, y)),
                op_row(N, op_row(N, m(x, y))), m(nx, y),
            )
        ])
        for fam in (r.rho, r.phi):
            fx = fam_terms(fam)
            checks.append([
                p + theta * q - s - theta * t
                for p, q, s, t in zip(
                    fx(x, a2v), op_row(al, fx(x, v)),
                    op_row(al, op_row(al, fx(x, v))), fx(x, av),
                )
            ])
            checks.append([
                p + theta * q - s - theta * t
                for p, q, s, t in zip(
                    fx(n2x, v), op_row(al, fx(x, v)),
                    op_row(al, op_row(al, fx(x, v))), fx(nx, v),
                )
            ])
    else:  # invert
        checks.append([
            p - q
            for p, q in zip(
                op_row(N, [theta * i + j for i, j in zip(m(x, y), m(x, n2y))]),
                [theta * i + j for i, j in zip(
                    m(x, ny), op_row(N, op_row(N, m(x, ny)))
                )],
            )
        ])
        checks.append([
            p - q
            for p, q in zip(
                op_row(N, [theta * i + j for i, j in zip(m(x, y), m(n2x, y))]),
                [theta * i + j for i, j in zip(
                    m(nx, y), op_row(N, op_row(N, m(nx, y)))
                )],
            )
        ])
        for fam in (r.rho, r.phi):
            fx = fam_terms(fam)
            checks.append([
                p - q
                for p, q in zip(
                    op_row(al, [theta * i + j for i, j in zip(fx(x, v), fx(n2x, v))]),
                    [theta * i + j for i, j in zip(
                        fx(nx, v), op_row(al, op_row(al, fx(nx, v)))
                    )],
                )
            ])
            checks.append([
                p - q
                for p, q in zip(
                    op_row(al, [theta * i + j for i, j in zip(fx(x, v), fx(x, a2v))]),
                    [theta * i + j for i, j in zip(
                        fx(x, av), op_row(al, op_row(al, fx(x, av)))
                    )],
                )
            ])
    return all(_is_zero_vec(c) for c in checks)


def nij_pre_lie_bialg(b, rng):
    return (
        pre_lie(b, rng) and nijenhuis(b, rng) and pre_lie_co(b, rng)
        and co_nijenhuis(b, rng) and pre_lie_bialg(b, rng)
        and admissible_s(b, rng) and admissible_nstar(b, rng)
    )


ORACLES = {
    "PRE_LIE": pre_lie,
    "PRE_LIE_CO": pre_lie_co,
    "PRE_LIE_BIALG": pre_lie_bialg,
    "S_EQUATION": s_equation,
    "CO_S_EQUATION": co_s_equation,
    "PSEUDO_HESSIAN": pseudo_hessian,
    "PSEUDO_HESSIAN_CO": pseudo_hessian_co,
    "NIJENHUIS": nijenhuis,
    "CO_NIJENHUIS": co_nijenhuis,
    "REP": rep,
    "NIJ_REP": nij_rep,
    "COREP": corep,
    "ADMISSIBLE_S": admissible_s,
    "ADMISSIBLE_BETA": admissible_beta,
    "ADMISSIBLE_NSTAR": admissible_nstar,
    "NIJ_PRE_LIE_BIALG": nij_pre_lie_bialg,
    "MATCHED_PAIR": matched_pair,
    "O_OPERATOR_WEAK": o_operator_weak,
    "O_OPERATOR": o_operator,
    "S_NIJ_S_EQUATION": s_nij_s_equation,
    "PENCIL_COMPAT": pencil_compat,
    "PENCIL_MORPHISM": pencil_morphism,
    "BALANCED": balanced,
    "LIE_ALG": lie_alg,
    "LIE_CO": lie_co,
    "LIE_BIALG": lie_bialg,
    "NIJ_LIE_BIALG": nij_lie_bialg,
    "COMMUTATIVE": commutative,
    "COCOMMUTATIVE": cocommutative,
    "SYMMETRIC_FORM": symmetric_form,
    "SYMMETRIC_TENSOR": symmetric_tensor,
}


def oracle_verdict(law, bundle, samples=20, seed=0, pi=None):
    """True iff every random-element evaluation of the law vanishes."""
    rng = random.Random(seed)
    fn = ORACLES[law] if law != "PI_ADMISSIBLE" else None
    for _ in range(samples):
        if law == "PI_ADMISSIBLE":
            if not pi_admissible(bundle, rng, pi):
                return False
        elif not fn(bundle, rng):
            return False
    return True
