"""Symbolic residual checkers, one per law.

A law instantiates its defining identity on all basis tuples of its arity
(complete by multilinearity) and collects one output component per tensor
slot.  A Residual passes iff every collected value is zero; entries that
are identically zero at construction are dropped, which does not affect
the verdict.

Member conventions read from a Bundle: algebra `alg`, coalgebra `coalg`,
second coalgebra `coalg2`, operators N, S, alpha, beta, theta, T, form
`omega`, tensor `r`, representation `rep`, corepresentations `corep` and
`corep2`.  MATCHED_PAIR reads the matched-pair data attached to a
ProductBundle.
"""

from .errors import (
    DimMismatchError,
    MissingMemberError,
    NotInvertibleError,
    UnknownLawError,
    ValidationError,
)
from .structures import (
    Tensor,
    basis_vector,
    mat_det,
    mat_identity,
    mat_mul,
    mat_scale,
    nonzero,
    one_like,
)

LAW_IDS = (
    "PRE_LIE", "PRE_LIE_CO", "PRE_LIE_BIALG", "S_EQUATION", "CO_S_EQUATION",
    "PSEUDO_HESSIAN", "PSEUDO_HESSIAN_CO", "NIJENHUIS", "CO_NIJENHUIS",
    "REP", "NIJ_REP", "COREP", "ADMISSIBLE_S", "ADMISSIBLE_BETA",
    "ADMISSIBLE_NSTAR", "NIJ_PRE_LIE_BIALG", "MATCHED_PAIR",
    "O_OPERATOR_WEAK", "O_OPERATOR", "S_NIJ_S_EQUATION", "PENCIL_COMPAT",
    "PENCIL_MORPHISM", "PI_ADMISSIBLE", "BALANCED", "LIE_ALG", "LIE_CO",
    "LIE_BIALG", "NIJ_LIE_BIALG", "COMMUTATIVE", "COCOMMUTATIVE",
    "SYMMETRIC_FORM", "SYMMETRIC_TENSOR",
)


class Residual:
    """Non-zero residual components of one law on one bundle."""

    __slots__ = ("law", "entries")

    def __init__(self, law, entries):
        self.law = law
        self.entries = entries

    @property
    def passed(self):
        return not self.entries

    def scalars(self):
        return [value for _, _, value in self.entries]

    def __repr__(self):
        state = "pass" if self.passed else f"{len(self.entries)} non-zero"
        return f"Residual({self.law}: {state})"


def _vec_op(vec, mat):
    """Apply an operator matrix to a coefficient row vector."""
    out = [0] * (len(mat[0]) if mat else 0)
    for i, v in enumerate(vec):
        if nonzero(v):
            row = mat[i]
            for j, m in enumerate(row):
                if nonzero(m):
                    out[j] = out[j] + v * m
    return out


def _vadd(*vecs):
    out = list(vecs[0])
    for vec in vecs[1:]:
        for i, v in enumerate(vec):
            out[i] = out[i] + v
    return out


def _vsub(a, b):
    return [x - y for x, y in zip(a, b)]


def _msub(*mats):
    out = [list(row) for row in mats[0]]
    for mat in mats[1:]:
        for i, row in enumerate(mat):
            for j, v in enumerate(row):
                out[i][j] = out[i][j] - v
    return out


def _madd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _square_op(bundle, name, n):
    op = bundle.need(f"op:{name}")
    if op.dim_in != n or op.dim_out != n:
        raise DimMismatchError(f"operator {name!r} must be {n}x{n}")
    return op.mat


def _emit_vec(tag, vec):
    for m, value in enumerate(vec):
        yield tag, (m,), value


def _emit_tensor(tag, tensor):
    for idx, value in tensor.entries():
        yield tag, idx, value


def _apply_corep(tensor, fam, slot):
    """Expand a module slot through a V -> A (x) V corep tensor [a][i][b]."""
    m = len(fam)
    n = len(fam[0]) if m else 0
    if tensor.dims[slot] != m:
        raise DimMismatchError("slot dim does not match corepresentation")
    dims = tensor.dims[:slot] + (n, m) + tensor.dims[slot + 1 :]
    out = Tensor.zeros(dims)
    for idx, value in tensor.entries():
        if not nonzero(value):
            continue
        plane = fam[idx[slot]]
        for i in range(n):
            row = plane[i]
            for b in range(m):
                if nonzero(row[b]):
                    oidx = idx[:slot] + (i, b) + idx[slot + 1 :]
                    out[oidx] = out[oidx] + value * row[b]
    return out


def _corep_of_vec(fam, vec):
    """xi(v) for a coefficient vector v, as an (n, m) tensor."""
    m = len(fam)
    n = len(fam[0]) if m else 0
    out = Tensor.zeros((n, m))
    for a, va in enumerate(vec):
        if nonzero(va):
            plane = fam[a]
            for i in range(n):
                for b in range(m):
                    if nonzero(plane[i][b]):
                        out[(i, b)] = out[(i, b)] + va * plane[i][b]
    return out


# ---------------------------------------------------------------------------
# algebra-side laws
# ---------------------------------------------------------------------------

def _law_pre_lie(bundle, pi=None):
    A = bundle.need("alg")
    n = A.dim
    for i in range(n):
        for j in range(n):
            xy = A.mul[i][j]
            yx = A.mul[j][i]
            for k in range(n):
                ek = basis_vector(n, k)
                t1 = A.mul_apply(xy, ek)
                t2 = A.mul_apply(basis_vector(n, i), A.mul[j][k])
                t3 = A.mul_apply(yx, ek)
                t4 = A.mul_apply(basis_vector(n, j), A.mul[i][k])
                res = [a - b - c + d for a, b, c, d in zip(t1, t2, t3, t4)]
                yield from _emit_vec((i, j, k), res)


def _law_commutative(bundle, pi=None):
    A = bundle.need("alg")
    n = A.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                yield (i, j), (k,), A.mul[i][j][k] - A.mul[j][i][k]


def _law_lie_alg(bundle, pi=None):
    A = bundle.need("alg")
    n = A.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                yield ("antisym", i, j), (k,), A.mul[i][j][k] + A.mul[j][i][k]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t1 = A.mul_apply(A.mul[i][j], basis_vector(n, k))
                t2 = A.mul_apply(A.mul[j][k], basis_vector(n, i))
                t3 = A.mul_apply(A.mul[k][i], basis_vector(n, j))
                yield from _emit_vec(("jacobi", i, j, k), _vadd(t1, t2, t3))


def _law_nijenhuis(bundle, pi=None):
    A = bundle.need("alg")
    n = A.dim
    N = _square_op(bundle, "N", n)
    N2 = mat_mul(N, N)
    for i in range(n):
        for j in range(n):
            t1 = A.mul_apply(N[i], N[j])
            t2 = _vec_op(A.mul[i][j], N2)
            t3 = _vec_op(A.mul_apply(N[i], basis_vector(n, j)), N)
            t4 = _vec_op(A.mul_apply(basis_vector(n, i), N[j]), N)
            res = [a + b - c - d for a, b, c, d in zip(t1, t2, t3, t4)]
            yield from _emit_vec((i, j), res)


def _law_pseudo_hessian(bundle, pi=None):
    A = bundle.need("alg")
    n = A.dim
    w = bundle.need("form:omega").mat
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t1 = sum((A.mul[i][j][p] * w[p][k] for p in range(n)), 0)
                t2 = sum((A.mul[j][k][p] * w[i][p] for p in range(n)), 0)
                t3 = sum((A.mul[j][i][p] * w[p][k] for p in range(n)), 0)
                t4 = sum((A.mul[i][k][p] * w[j][p] for p in range(n)), 0)
                yield (i, j, k), (), t1 - t2 - t3 + t4


def _law_s_equation(bundle, pi=None):
    A = bundle.need("alg")
    r = bundle.need("tensor:r")
    if r.dim != A.dim:
        raise DimMismatchError("tensor r dimension differs from algebra")
    R = Tensor.from_matrix(r.mat)
    T4 = R.outer(R)  # slots a_i, b_i, a_j, b_j
    t1 = T4.apply_mul(A.mul, 1, 2, 1)  # a_i (x) b_i.a_j (x) b_j
    t2 = T4.apply_mul(A.mul, 1, 3, 2)  # a_i (x) a_j (x) b_i.b_j
    t3 = T4.apply_mul(A.mul, 0, 2, 0)  # a_i.a_j (x) b_i (x) b_j
    t4 = T4.apply_mul(A.mul, 3, 1, 2)  # a_i (x) a_j (x) b_j.b_i
    yield from _emit_tensor((), t1 + t2 - t3 - t4)


def _law_s_nij_s_equation(bundle, pi=None):
    A = bundle.need("alg")
    n = A.dim
    N = _square_op(bundle, "N", n)
    S = _square_op(bundle, "S", n)
    r = bundle.need("tensor:r")
    for tag, idx, value in _law_s_equation(bundle):
        yield ("s-eq",), idx, value
    R = Tensor.from_matrix(r.mat)
    compat = R.apply_op(S, 0) - R.apply_op(N, 1)  # (S (x) id - id (x) N)(r)
    yield from _emit_tensor(("compat",), compat)


def _law_symmetric_tensor(bundle, pi=None):
    r = bundle.need("tensor:r")
    for i in range(r.dim):
        for j in range(i + 1, r.dim):
            yield (i, j), (), r.mat[i][j] - r.mat[j][i]


def _law_symmetric_form(bundle, pi=None):
    w = bundle.need("form:omega")
    for i in range(w.dim):
        for j in range(i + 1, w.dim):
            yield (i, j), (), w.mat[i][j] - w.mat[j][i]


# ---------------------------------------------------------------------------
# coalgebra-side laws
# ---------------------------------------------------------------------------

def _law_pre_lie_co(bundle, pi=None):
    C = bundle.need("coalg")
    n = C.dim
    for k in range(n):
        T0 = Tensor.from_matrix(C.comul[k])
        T1 = T0.apply_comul(C.comul, 0)  # x11 (x) x12 (x) x2
        T2 = T0.apply_comul(C.comul, 1)  # x1 (x) x21 (x) x22
        res = T1 - T2 - T1.swap(0, 1) + T2.swap(0, 1)
        yield from _emit_tensor((k,), res)


def _law_cocommutative(bundle, pi=None):
    C = bundle.need("coalg")
    n = C.dim
    for k in range(n):
        for i in range(n):
            for j in range(i + 1, n):
                yield (k,), (i, j), C.comul[k][i][j] - C.comul[k][j][i]


def _law_lie_co(bundle, pi=None):
    C = bundle.need("coalg")
    n = C.dim
    for k in range(n):
        for i in range(n):
            for j in range(i, n):
                yield ("antisym", k), (i, j), C.comul[k][i][j] + C.comul[k][j][i]
    for k in range(n):
        T2 = Tensor.from_matrix(C.comul[k]).apply_comul(C.comul, 1)
        rot = T2.permute([1, 2, 0])
        res = T2 + rot + rot.permute([1, 2, 0])
        yield from _emit_tensor(("cojacobi", k), res)


def _law_pre_lie_bialg(bundle, pi=None):
    A = bundle.need("alg")
    C = bundle.need("coalg")
    n = A.dim
    for i in range(n):
        for j in range(n):
            Li, Ri = A.left_mat_basis(i), A.right_mat_basis(i)
            Lj, Rj = A.left_mat_basis(j), A.right_mat_basis(j)
            Dxy = Tensor.from_matrix(C.comul_apply(A.mul[i][j]))
            Dyx = Tensor.from_matrix(C.comul_apply(A.mul[j][i]))
            Tx = Tensor.from_matrix(C.comul[i])
            Ty = Tensor.from_matrix(C.comul[j])

            xy1 = Ty.apply_op(Li, 0)   # x.y1 (x) y2
            xy2 = Ty.apply_op(Li, 1)   # y1 (x) x.y2
            y2x = Ty.apply_op(Ri, 1)   # y1 (x) y2.x
            yx1 = Tx.apply_op(Lj, 0)   # y.x1 (x) x2
            yx2 = Tx.apply_op(Lj, 1)   # x1 (x) y.x2
            x2y = Tx.apply_op(Rj, 1)   # x1 (x) x2.y
            res1 = Dxy - Dyx - xy1 - xy2 + y2x + yx1 + yx2 - x2y
            yield from _emit_tensor(("b1", i, j), res1)

            res2 = (
                Dxy - Dxy.swap(0, 1)
                - x2y - xy2 + xy1.swap(0, 1)
                + x2y.swap(0, 1) + xy2.swap(0, 1) - xy1
            )
            yield from _emit_tensor(("b2", i, j), res2)


def _law_co_s_equation(bundle, pi=None):
    C = bundle.need("coalg")
    n = C.dim
    w = bundle.need("form:omega").mat
    d = C.comul
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s1 = sum(
                    (w[i][p] * d[j][p][q] * w[q][k] for p in range(n) for q in range(n)),
                    0,
                )
                s2 = sum(
                    (w[i][p] * d[k][p][q] * w[j][q] for p in range(n) for q in range(n)),
                    0,
                )
                s3 = sum(
                    (d[i][p][q] * w[p][j] * w[q][k] for p in range(n) for q in range(n)),
                    0,
                )
                s4 = sum(
                    (w[j][p] * d[k][p][q] * w[i][q] for p in range(n) for q in range(n)),
                    0,
                )
                yield (i, j, k), (), s1 + s2 - s3 - s4


def _law_pseudo_hessian_co(bundle, pi=None):
    C = bundle.need("coalg")
    r = bundle.need("tensor:r")
    if r.dim != C.dim:
        raise DimMismatchError("tensor r dimension differs from coalgebra")
    T = Tensor.from_matrix(r.mat)
    T1 = T.apply_comul(C.comul, 0)  # a1 (x) a2 (x) b
    T2 = T.apply_comul(C.comul, 1)  # a (x) b1 (x) b2
    res = T1 - T2 - T1.swap(0, 1) + T2.swap(0, 1)
    yield from _emit_tensor((), res)


def _law_co_nijenhuis(bundle, pi=None):
    C = bundle.need("coalg")
    n = C.dim
    S = _square_op(bundle, "S", n)
    S2 = mat_mul(S, S)
    for k in range(n):
        TX = Tensor.from_matrix(C.comul[k])
        TS = Tensor.from_matrix(C.comul_apply(S[k]))
        t1 = TX.apply_op(S, 0).apply_op(S, 1)
        t2 = Tensor.from_matrix(C.comul_apply(S2[k]))
        t3 = TS.apply_op(S, 0)
        t4 = TS.apply_op(S, 1)
        yield from _emit_tensor((k,), t1 + t2 - t3 - t4)


def _law_admissible_nstar(bundle, pi=None):
    C = bundle.need("coalg")
    n = C.dim
    N = _square_op(bundle, "N", n)
    S = _square_op(bundle, "S", n)
    N2 = mat_mul(N, N)
    for k in range(n):
        TX = Tensor.from_matrix(C.comul[k])
        TN = Tensor.from_matrix(C.comul_apply(N[k]))
        res1 = (
            TN.apply_op(S, 1) + TX.apply_op(N2, 0)
            - TX.apply_op(N, 0).apply_op(S, 1) - TN.apply_op(N, 0)
        )
        yield from _emit_tensor(("nb1", k), res1)
        res2 = (
            TN.apply_op(S, 0) + TX.apply_op(N2, 1)
            - TX.apply_op(S, 0).apply_op(N, 1) - TN.apply_op(N, 1)
        )
        yield from _emit_tensor(("nb2", k), res2)


def _law_balanced(bundle, pi=None):
    A = bundle.need("alg")
    C = bundle.need("coalg")
    n = A.dim
    for i in range(n):
        for j in range(n):
            Ri = A.right_mat_basis(i)
            Rj = A.right_mat_basis(j)
            Tx = Tensor.from_matrix(C.comul[i])
            Ty = Tensor.from_matrix(C.comul[j])
            x1y = Tx.apply_op(Rj, 0)   # x1.y (x) x2
            y1x = Ty.apply_op(Ri, 0)   # y1.x (x) y2
            res = x1y + y1x.swap(0, 1) - y1x - x1y.swap(0, 1)
            yield from _emit_tensor((i, j), res)


def _law_lie_bialg(bundle, pi=None):
    yield from _tagged(_law_lie_alg(bundle), "lie-alg")
    yield from _tagged(_law_lie_co(bundle), "lie-co")
    A = bundle.need("alg")
    C = bundle.need("coalg")
    n = A.dim
    for i in range(n):
        for j in range(n):
            Li = A.left_mat_basis(i)
            Lj = A.left_mat_basis(j)
            Dxy = Tensor.from_matrix(C.comul_apply(A.mul[i][j]))
            Tx = Tensor.from_matrix(C.comul[i])
            Ty = Tensor.from_matrix(C.comul[j])
            res = (
                Dxy
                - Ty.apply_op(Li, 0) - Ty.apply_op(Li, 1)
                + Tx.apply_op(Lj, 0) + Tx.apply_op(Lj, 1)
            )
            yield from _emit_tensor(("compat", i, j), res)


def _law_nij_lie_bialg(bundle, pi=None):
    yield from _tagged(_law_lie_bialg(bundle), "lie-bialg")
    yield from _tagged(_law_nijenhuis(bundle), "nij")
    yield from _tagged(_law_co_nijenhuis(bundle), "co-nij")
    A = bundle.need("alg")
    C = bundle.need("coalg")
    n = A.dim
    N = _square_op(bundle, "N", n)
    S = _square_op(bundle, "S", n)
    S2 = mat_mul(S, S)
    N2 = mat_mul(N, N)
    for i in range(n):
        for j in range(n):
            t1 = _vec_op(A.mul_apply(N[i], basis_vector(n, j)), S)
            t2 = A.mul_apply(basis_vector(n, i), S2[j])
            t3 = A.mul_apply(N[i], S[j])
            t4 = _vec_op(A.mul_apply(basis_vector(n, i), S[j]), S)
            res = [a + b - c - d for a, b, c, d in zip(t1, t2, t3, t4)]
            yield from _emit_vec(("op-mix", i, j), res)
    for k in range(n):
        TX = Tensor.from_matrix(C.comul[k])
        TN = Tensor.from_matrix(C.comul_apply(N[k]))
        res = (
            TN.apply_op(S, 0) + TX.apply_op(N2, 1)
            - TX.apply_op(S, 0).apply_op(N, 1) - TN.apply_op(N, 1)
        )
        yield from _emit_tensor(("tensor-mix", k), res)


# ---------------------------------------------------------------------------
# representation laws
# ---------------------------------------------------------------------------

def _law_rep(bundle, pi=None):
    A = bundle.need("alg")
    rep = bundle.need("rep:rep")
    if rep.alg_dim != A.dim:
        raise DimMismatchError("representation algebra dimension differs")
    n = A.dim
    for i in range(n):
        for j in range(n):
            rho_i, rho_j = rep.rho[i], rep.rho[j]
            phi_i, phi_j = rep.phi[i], rep.phi[j]
            lhs1 = _msub(rep.rho_mat(A.mul[i][j]), rep.rho_mat(A.mul[j][i]))
            rhs1 = _msub(mat_mul(rho_j, rho_i), mat_mul(rho_i, rho_j))
            yield from _emit_tensor(
                ("rep1", i, j), Tensor.from_matrix(_msub(lhs1, rhs1))
            )
            lhs2 = rep.phi_mat(A.mul[i][j])
            rhs2 = _madd(
                _msub(mat_mul(phi_j, rho_i), mat_mul(rho_i, phi_j)),
                mat_mul(phi_i, phi_j),
            )
            yield from _emit_tensor(
                ("rep2", i, j), Tensor.from_matrix(_msub(lhs2, rhs2))
            )


def _law_nij_rep(bundle, pi=None):
    A = bundle.need("alg")
    n = A.dim
    N = _square_op(bundle, "N", n)
    rep = bundle.need("rep:rep")
    m = rep.rep_dim
    alpha = bundle.need("op:alpha")
    if alpha.dim_in != m or alpha.dim_out != m:
        raise DimMismatchError("operator alpha must act on the module")
    al = alpha.mat
    al2 = mat_mul(al, al)
    for i in range(n):
        for fam, tag in ((rep.rho, "nrep1"), (rep.phi, "nrep2")):
            f_i = fam[i]
            f_Nx = _combine_family(fam, N[i], m)
            res = _msub(
                _madd(mat_mul(al, f_Nx), mat_mul(f_i, al2)),
                _madd(mat_mul(f_Nx, al), mat_mul(al, mat_mul(f_i, al))),
            )
            yield from _emit_tensor((tag, i), Tensor.from_matrix(res))


def _combine_family(family, x, m):
    out = [[0] * m for _ in range(m)]
    for i, xi in enumerate(x):
        if nonzero(xi):
            mat = family[i]
            for a in range(m):
                for b in range(m):
                    if nonzero(mat[a][b]):
                        out[a][b] = out[a][b] + xi * mat[a][b]
    return out


def _law_admissible_s(bundle, pi=None):
    A = bundle.need("alg")
    n = A.dim
    N = _square_op(bundle, "N", n)
    S = _square_op(bundle, "S", n)
    S2 = mat_mul(S, S)
    for i in range(n):
        for j in range(n):
            t1 = _vec_op(A.mul_apply(N[i], basis_vector(n, j)), S)
            t2 = A.mul_apply(basis_vector(n, i), S2[j])
            t3 = A.mul_apply(N[i], S[j])
            t4 = _vec_op(A.mul_apply(basis_vector(n, i), S[j]), S)
            res = [a + b - c - d for a, b, c, d in zip(t1, t2, t3, t4)]
            yield from _emit_vec(("dual3-1", i, j), res)
            u1 = _vec_op(A.mul_apply(basis_vector(n, i), N[j]), S)
            u2 = A.mul_apply(S2[i], basis_vector(n, j))
            u3 = A.mul_apply(S[i], N[j])
            u4 = _vec_op(A.mul_apply(S[i], basis_vector(n, j)), S)
            res = [a + b - c - d for a, b, c, d in zip(u1, u2, u3, u4)]
            yield from _emit_vec(("dual2-1", i, j), res)


def _law_admissible_beta(bundle, pi=None):
    A = bundle.need("alg")
    n = A.dim
    N = _square_op(bundle, "N", n)
    rep = bundle.need("rep:rep")
    m = rep.rep_dim
    beta = bundle.need("op:beta")
    if beta.dim_in != m or beta.dim_out != m:
        raise DimMismatchError("operator beta must act on the module")
    be = beta.mat
    be2 = mat_mul(be, be)
    for i in range(n):
        for fam, tag in ((rep.rho, "dual3"), (rep.phi, "dual2")):
            f_i = fam[i]
            f_Nx = _combine_family(fam, N[i], m)
            res = _msub(
                _madd(mat_mul(f_Nx, be), mat_mul(be2, f_i)),
                _madd(mat_mul(be, f_Nx), mat_mul(be, mat_mul(f_i, be))),
            )
            yield from _emit_tensor((tag, i), Tensor.from_matrix(res))


def _law_o_operator_weak(bundle, pi=None):
    A = bundle.need("alg")
    n = A.dim
    N = _square_op(bundle, "N", n)
    rep = bundle.need("rep:rep")
    m = rep.rep_dim
    T = bundle.need("op:T")
    if T.dim_in != m or T.dim_out != n:
        raise DimMismatchError("operator T must map the module into the algebra")
    alpha = bundle.need("op:alpha")
    if alpha.dim_in != m or alpha.dim_out != m:
        raise DimMismatchError("operator alpha must act on the module")
    Tm = T.mat
    for a in range(m):
        for b in range(m):
            lhs = A.mul_apply(Tm[a], Tm[b])
            inner = _vadd(
                _combine_family(rep.rho, Tm[a], m)[b],
                _combine_family(rep.phi, Tm[b], m)[a],
            )
            rhs = _vec_op(inner, Tm)
            yield from _emit_vec(("z4", a, b), _vsub(lhs, rhs))
    diff = _msub(mat_mul(Tm, N), mat_mul(alpha.mat, Tm))
    yield from _emit_tensor(("z5",), Tensor.from_matrix(diff))


def _law_corep(bundle, pi=None):
    C = bundle.need("coalg")
    corep = bundle.need("corep:corep")
    if corep.coalg_dim != C.dim:
        raise DimMismatchError("corepresentation coalgebra dimension differs")
    m = corep.corep_dim
    for a in range(m):
        X = Tensor.from_matrix(corep.xi[a])   # slots A, V
        E = Tensor.from_matrix(corep.eta[a])
        l1 = X.apply_comul(C.comul, 0)
        r1 = _apply_corep(X, corep.eta, 1)
        res1 = l1 - l1.swap(0, 1) - r1 + r1.swap(0, 1)
        yield from _emit_tensor(("crep1", a), res1)
        l2 = E.apply_comul(C.comul, 0)
        rB = _apply_corep(E, corep.xi, 1).swap(0, 1)
        rC = _apply_corep(E, corep.eta, 1).swap(0, 1)
        res2 = l2 - r1 + rB - rC
        yield from _emit_tensor(("crep2", a), res2)


def _law_pencil_compat(bundle, pi=None):
    C1 = bundle.need("coalg")
    C2 = bundle.need("coalg2")
    n = C1.dim
    for k in range(n):
        Dx = Tensor.from_matrix(C1.comul[k])
        dx = Tensor.from_matrix(C2.comul[k])
        t1 = Dx.apply_comul(C2.comul, 0)
        t2 = dx.apply_comul(C1.comul, 0)
        t3 = Dx.apply_comul(C2.comul, 1)
        t4 = dx.apply_comul(C1.comul, 1)
        res = (
            t1 + t2 - t3 - t4
            - t1.swap(0, 1) - t2.swap(0, 1) + t3.swap(0, 1) + t4.swap(0, 1)
        )
        yield from _emit_tensor((k,), res)
    if "corep" in bundle.coreps or "corep2" in bundle.coreps:
        cr1 = bundle.need("corep:corep")
        cr2 = bundle.need("corep:corep2")
        m = cr1.corep_dim
        for a in range(m):
            X = Tensor.from_matrix(cr1.xi[a])
            G = Tensor.from_matrix(cr2.xi[a])
            E = Tensor.from_matrix(cr1.eta[a])
            GG = Tensor.from_matrix(cr2.eta[a])
            l1 = X.apply_comul(C2.comul, 0)
            l2 = G.apply_comul(C1.comul, 0)
            r1 = _apply_corep(X, cr2.eta, 1)
            r2 = _apply_corep(G, cr1.eta, 1)
            resA = (
                l1 + l2 - l1.swap(0, 1) - l2.swap(0, 1)
                - r1 - r2 + r1.swap(0, 1) + r2.swap(0, 1)
            )
            yield from _emit_tensor(("corep-cross1", a), resA)
            resB = (
                E.apply_comul(C2.comul, 0) + GG.apply_comul(C1.comul, 0)
                + _apply_corep(E, cr2.xi, 1).swap(0, 1)
                + _apply_corep(GG, cr1.xi, 1).swap(0, 1)
                - r1 - r2
                - _apply_corep(E, cr2.eta, 1).swap(0, 1)
                - _apply_corep(GG, cr1.eta, 1).swap(0, 1)
            )
            yield from _emit_tensor(("corep-cross2", a), resB)


def _law_pencil_morphism(bundle, pi=None):
    C1 = bundle.need("coalg")
    C2 = bundle.need("coalg2")
    n = C1.dim
    S = _square_op(bundle, "S", n)
    for k in range(n):
        TX = Tensor.from_matrix(C1.comul[k])
        com1 = Tensor.from_matrix(C2.comul_apply(S[k])) - TX.apply_op(S, 0).apply_op(S, 1)
        yield from _emit_tensor(("com1", k), com1)
        com2 = (
            Tensor.from_matrix(C1.comul_apply(S[k]))
            + Tensor.from_matrix(C2.comul[k])
            - TX.apply_op(S, 1) - TX.apply_op(S, 0)
        )
        yield from _emit_tensor(("com2", k), com2)
    if not bundle.coreps and "theta" not in bundle.operators:
        return
    cr1 = bundle.need("corep:corep")
    cr2 = bundle.need("corep:corep2")
    m = cr1.corep_dim
    theta = bundle.need("op:theta")
    if theta.dim_in != m or theta.dim_out != m:
        raise DimMismatchError("operator theta must act on the module")
    th = theta.mat
    pairs = (
        ("com3", "com4", cr1.xi, cr2.xi),
        ("com5", "com6", cr1.eta, cr2.eta),
    )
    for tag_h, tag_p, fam1, fam2 in pairs:
        for a in range(m):
            F1 = Tensor.from_matrix(fam1[a])
            com_h = _corep_of_vec(fam2, th[a]) - F1.apply_op(S, 0).apply_op(th, 1)
            yield from _emit_tensor((tag_h, a), com_h)
            com_p = (
                _corep_of_vec(fam1, th[a]) + Tensor.from_matrix(fam2[a])
                - F1.apply_op(th, 1) - F1.apply_op(S, 0)
            )
            yield from _emit_tensor((tag_p, a), com_p)


def _law_matched_pair(bundle, pi=None):
    pair = getattr(bundle, "pair", None)
    if pair is None:
        raise MissingMemberError("bundle carries no matched-pair data")
    A, H = pair.a_alg, pair.h_alg
    na, nh = A.dim, H.dim
    rho_a, phi_a, rho_h, phi_h = pair.rho_a, pair.phi_a, pair.rho_h, pair.phi_h
    for i in range(na):
        for a in range(nh):
            for b in range(nh):
                lhs = _vec_op(H.mul[a][b], rho_a[i])
                arg = _vsub(rho_h[a][i], phi_h[a][i])
                t1 = _combine_family(rho_a, arg, nh)[b]
                va = _vsub(rho_a[i][a], phi_a[i][a])
                t2 = H.mul_apply(va, basis_vector(nh, b))
                t3 = _combine_family(phi_a, phi_h[b][i], nh)[a]
                t4 = H.mul_apply(basis_vector(nh, a), rho_a[i][b])
                res = [p + q - r - s - t for p, q, r, s, t in zip(lhs, t1, t2, t3, t4)]
                yield from _emit_vec(("mplie1", i, a, b), res)
                lhs2 = _vec_op(_vsub(H.mul[a][b], H.mul[b][a]), phi_a[i])
                u1 = _combine_family(phi_a, rho_h[b][i], nh)[a]
                u2 = _combine_family(phi_a, rho_h[a][i], nh)[b]
                u3 = H.mul_apply(basis_vector(nh, a), phi_a[i][b])
                u4 = H.mul_apply(basis_vector(nh, b), phi_a[i][a])
                res = [p - q + r - s + t for p, q, r, s, t in zip(lhs2, u1, u2, u3, u4)]
                yield from _emit_vec(("mplie2", i, a, b), res)
    for a in range(nh):
        for i in range(na):
            for j in range(na):
                lhs = _vec_op(A.mul[i][j], rho_h[a])
                arg = _vsub(rho_a[i][a], phi_a[i][a])
                t1 = _combine_family(rho_h, arg, na)[j]
                va = _vsub(rho_h[a][i], phi_h[a][i])
                t2 = A.mul_apply(va, basis_vector(na, j))
                t3 = _combine_family(phi_h, phi_a[j][a], na)[i]
                t4 = A.mul_apply(basis_vector(na, i), rho_h[a][j])
                res = [p + q - r - s - t for p, q, r, s, t in zip(lhs, t1, t2, t3, t4)]
                yield from _emit_vec(("mplie3", a, i, j), res)
                lhs2 = _vec_op(_vsub(A.mul[i][j], A.mul[j][i]), phi_h[a])
                u1 = _combine_family(phi_h, rho_a[j][a], na)[i]
                u2 = _combine_family(phi_h, rho_a[i][a], na)[j]
                u3 = A.mul_apply(basis_vector(na, i), phi_h[a][j])
                u4 = A.mul_apply(basis_vector(na, j), phi_h[a][i])
                res = [p - q + r - s + t for p, q, r, s, t in zip(lhs2, u1, u2, u3, u4)]
                yield from _emit_vec(("mplie4", a, i, j), res)


def _law_pi_admissible(bundle, pi=None):
    if pi is None:
        raise ValidationError("PI_ADMISSIBLE requires a Pi descriptor")
    family = pi.get("family")
    theta = pi.get("theta")
    if family not in ("scale", "reflect", "invert"):
        raise ValidationError(f"unknown Pi family {family!r}")
    A = bundle.need("alg")
    n = A.dim
    N = _square_op(bundle, "N", n)
    rep = bundle.need("rep:rep")
    m = rep.rep_dim
    alpha = bundle.need("op:alpha")
    if alpha.dim_in != m or alpha.dim_out != m:
        raise DimMismatchError("operator alpha must act on the module")
    al = alpha.mat
    N2 = mat_mul(N, N)
    al2 = mat_mul(al, al)
    if family == "scale":
        if not ((theta - 1) == 0 or (theta + 1) == 0):
            raise ValidationError("scale family requires theta in {+1, -1}")
    else:
        if not nonzero(theta):
            raise ValidationError(f"{family} family requires theta != 0")
    if family == "invert":
        if not nonzero(mat_det(N)):
            raise NotInvertibleError("operator N has identically-zero determinant")
        if not nonzero(mat_det(al)):
            raise NotInvertibleError("operator alpha has identically-zero determinant")

    def mul_vec(i, j, right_op=None, left_op=None):
        x = basis_vector(n, i) if left_op is None else left_op[i]
        y = basis_vector(n, j) if right_op is None else right_op[j]
        return A.mul_apply(x, y)

    if family == "scale":
        for i in range(n):
            for j in range(n):
                base = A.mul[i][j]
                kk3 = _vsub(
                    _vadd(mul_vec(i, j, right_op=N2), [theta * v for v in _vec_op(base, N2)]),
                    [(1 + theta) * v for v in _vec_op(mul_vec(i, j, right_op=N), N)],
                )
                yield from _emit_vec(("kk3", i, j), kk3)
                kk4 = _vsub(
                    _vadd(mul_vec(i, j, left_op=N2), [theta * v for v in _vec_op(base, N2)]),
                    [(1 + theta) * v for v in _vec_op(mul_vec(i, j, left_op=N), N)],
                )
                yield from _emit_vec(("kk4", i, j), kk4)
        for i in range(n):
            rho_i = rep.rho[i]
            phi_i = rep.phi[i]
            rho_N = _combine_family(rep.rho, N[i], m)
            phi_N = _combine_family(rep.phi, N[i], m)
            rho_N2 = _combine_family(rep.rho, N2[i], m)
            phi_N2 = _combine_family(rep.phi, N2[i], m)
            for tag, f, fN, fN2 in (
                ("kk5", rho_i, rho_N, rho_N2), ("kk6", phi_i, phi_N, phi_N2),
            ):
                res = _msub(
                    _madd(mat_mul(al2, f), mat_scale(mat_mul(f, al2), theta)),
                    mat_scale(mat_mul(al, mat_mul(f, al)), 1 + theta),
                )
                yield from _emit_tensor((tag, i), Tensor.from_matrix(res))
            for tag, f, fN, fN2 in (
                ("kk7", rho_i, rho_N, rho_N2), ("kk8", phi_i, phi_N, phi_N2),
            ):
                res = _msub(
                    _madd(fN2, mat_scale(mat_mul(f, al2), theta)),
                    mat_scale(mat_mul(fN, al), 1 + theta),
                )
                yield from _emit_tensor((tag, i), Tensor.from_matrix(res))
        return

    if family == "reflect":
        for i in range(n):
            for j in range(n):
                base = A.mul[i][j]
                kkb1 = _vsub(
                    _vadd(mul_vec(i, j, right_op=N2), [theta * v for v in _vec_op(base, N)]),
                    _vadd(_vec_op(base, N2), [theta * v for v in mul_vec(i, j, right_op=N)]),
                )
                yield from _emit_vec(("kkb1", i, j), kkb1)
                kkb2 = _vsub(
                    _vadd(mul_vec(i, j, left_op=N2), [theta * v for v in _vec_op(base, N)]),
                    _vadd(_vec_op(base, N2), [theta * v for v in mul_vec(i, j, left_op=N)]),
                )
                yield from _emit_vec(("kkb2", i, j), kkb2)
        for i in range(n):
            for tag_pair, fam in (( ("kkb3", "kkb5"), rep.rho), (("kkb4", "kkb6"), rep.phi)):
                f = fam[i]
                fN = _combine_family(fam, N[i], m)
                fN2 = _combine_family(fam, N2[i], m)
                res = _msub(
                    _madd(mat_mul(al2, f), mat_scale(mat_mul(f, al), theta)),
                    _madd(mat_mul(f, al2), mat_scale(mat_mul(al, f), theta)),
                )
                yield from _emit_tensor((tag_pair[0], i), Tensor.from_matrix(res))
                res = _msub(
                    _madd(fN2, mat_scale(mat_mul(f, al), theta)),
                    _madd(mat_mul(f, al2), mat_scale(fN, theta)),
                )
                yield from _emit_tensor((tag_pair[1], i), Tensor.from_matrix(res))
        return

    # invert family
    for i in range(n):
        for j in range(n):
            base = A.mul[i][j]
            kkc1 = _vsub(
                _vec_op(_vadd([theta * v for v in base], mul_vec(i, j, right_op=N2)), N),
                _vadd(
                    [theta * v for v in mul_vec(i, j, right_op=N)],
                    _vec_op(mul_vec(i, j, right_op=N), N2),
                ),
            )
            yield from _emit_vec(("kkc1", i, j), kkc1)
            kkc2 = _vsub(
                _vec_op(_vadd([theta * v for v in base], mul_vec(i, j, left_op=N2)), N),
                _vadd(
                    [theta * v for v in mul_vec(i, j, left_op=N)],
                    _vec_op(mul_vec(i, j, left_op=N), N2),
                ),
            )
            yield from _emit_vec(("kkc2", i, j), kkc2)
    for i in range(n):
        for tag_pair, fam in ((("kkc3", "kkc5"), rep.rho), (("kkc4", "kkc6"), rep.phi)):
            f = fam[i]
            fN = _combine_family(fam, N[i], m)
            fN2 = _combine_family(fam, N2[i], m)
            res = _msub(
                mat_mul(_madd(mat_scale(f, theta), fN2), al),
                _madd(mat_scale(fN, theta), mat_mul(fN, al2)),
            )
            yield from _emit_tensor((tag_pair[0], i), Tensor.from_matrix(res))
            res = _msub(
                mat_mul(_madd(mat_scale(f, theta), mat_mul(al2, f)), al),
                _madd(
                    mat_scale(mat_mul(al, f), theta),
                    mat_mul(mat_mul(al, f), al2),
                ),
            )
            yield from _emit_tensor((tag_pair[1], i), Tensor.from_matrix(res))


# ---------------------------------------------------------------------------
# macro laws and the public interface
# ---------------------------------------------------------------------------

def _tagged(gen, tag):
    for in_idx, out_idx, value in gen:
        in_idx = in_idx if isinstance(in_idx, tuple) else (in_idx,)
        yield (tag,) + in_idx, out_idx, value


def _law_nij_pre_lie_bialg(bundle, pi=None):
    parts = (
        ("pre-lie", _law_pre_lie), ("nij", _law_nijenhuis),
        ("pre-lie-co", _law_pre_lie_co), ("co-nij", _law_co_nijenhuis),
        ("bialg", _law_pre_lie_bialg), ("s-adm", _law_admissible_s),
        ("nstar-adm", _law_admissible_nstar),
    )
    for tag, law in parts:
        yield from _tagged(law(bundle), tag)


def _law_o_operator(bundle, pi=None):
    yield from _tagged(_law_o_operator_weak(bundle), "weak")
    yield from _tagged(_law_nij_rep(bundle), "nij-rep")


_CHECKERS = {
    "PRE_LIE": _law_pre_lie,
    "PRE_LIE_CO": _law_pre_lie_co,
    "PRE_LIE_BIALG": _law_pre_lie_bialg,
    "S_EQUATION": _law_s_equation,
    "CO_S_EQUATION": _law_co_s_equation,
    "PSEUDO_HESSIAN": _law_pseudo_hessian,
    "PSEUDO_HESSIAN_CO": _law_pseudo_hessian_co,
    "NIJENHUIS": _law_nijenhuis,
    "CO_NIJENHUIS": _law_co_nijenhuis,
    "REP": _law_rep,
    "NIJ_REP": _law_nij_rep,
    "COREP": _law_corep,
    "ADMISSIBLE_S": _law_admissible_s,
    "ADMISSIBLE_BETA": _law_admissible_beta,
    "ADMISSIBLE_NSTAR": _law_admissible_nstar,
    "NIJ_PRE_LIE_BIALG": _law_nij_pre_lie_bialg,
    "MATCHED_PAIR": _law_matched_pair,
    "O_OPERATOR_WEAK": _law_o_operator_weak,
    "O_OPERATOR": _law_o_operator,
    "S_NIJ_S_EQUATION": _law_s_nij_s_equation,
    "PENCIL_COMPAT": _law_pencil_compat,
    "PENCIL_MORPHISM": _law_pencil_morphism,
    "PI_ADMISSIBLE": _law_pi_admissible,
    "BALANCED": _law_balanced,
    "LIE_ALG": _law_lie_alg,
    "LIE_CO": _law_lie_co,
    "LIE_BIALG": _law_lie_bialg,
    "NIJ_LIE_BIALG": _law_nij_lie_bialg,
    "COMMUTATIVE": _law_commutative,
    "COCOMMUTATIVE": _law_cocommutative,
    "SYMMETRIC_FORM": _law_symmetric_form,
    "SYMMETRIC_TENSOR": _law_symmetric_tensor,
}

assert set(_CHECKERS) == set(LAW_IDS)


def normalize_law(name):
    key = name.strip().upper().replace("-", "_")
    if key not in _CHECKERS:
        raise UnknownLawError(f"unknown law {name!r}")
    return key


def iter_residual(law, bundle, pi=None):
    """Yield every residual component (including zero ones) of one law."""
    return _CHECKERS[normalize_law(law)](bundle, pi=pi)


def check(law, bundle, pi=None):
    """Instantiate a law on all basis tuples; keep the non-zero components."""
    law = normalize_law(law)
    entries = [
        (in_idx, out_idx, value)
        for in_idx, out_idx, value in iter_residual(law, bundle, pi=pi)
        if nonzero(value)
    ]
    return Residual(law, entries)


def check_composite(bundle, profile, pi=None):
    """One Residual per law; the composite passes iff all pass."""
    return {law: check(law, bundle, pi=pi) for law in map(normalize_law, profile)}
