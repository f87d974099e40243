"""Constructive maps: builders producing new structures from given ones.

Builders never validate their hypotheses; callers (or CLI profiles) check
the laws that make the outputs meaningful, which keeps every formula total
and lets tests probe failure modes.

Dual-space conventions: under the pairing <e^i, e_j> = delta_ij the dual
of an operator is the matrix transpose, and the multiplication on the dual
space induced by a comultiplication d is c*[a][b][k] = d[k][a][b].
Identifying V** with V is transposing twice, i.e. the identity on
matrices, so no extra signs appear in double-dual computations.
"""

from .errors import DimMismatchError, MissingMemberError, ValidationError
from .structures import (
    AlgebraStructure,
    BilinearForm,
    Bundle,
    CoalgebraStructure,
    LinearOperator,
    MatchedPairData,
    ProductBundle,
    Representation,
    Tensor,
    TensorElement,
    mat_det,
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_transpose,
    nonzero,
    one_like,
)


def _same_dim(a, b, what):
    if a != b:
        raise DimMismatchError(f"{what}: dimensions {a} and {b} differ")


def delta_from_r(alg, r):
    """Coboundary comultiplication induced by an element of A (x) A.

    D(x) = sum_i (x.a_i (x) b_i + a_i (x) x.b_i - a_i (x) b_i.x).
    """
    _same_dim(alg.dim, r.dim, "delta_from_r")
    n = alg.dim
    R = Tensor.from_matrix(r.mat)
    comul = []
    for k in range(n):
        Lk = alg.left_mat_basis(k)
        Rk = alg.right_mat_basis(k)
        term = R.apply_op(Lk, 0) + R.apply_op(Lk, 1) - R.apply_op(Rk, 1)
        comul.append([[term[(p, q)] for q in range(n)] for p in range(n)])
    return CoalgebraStructure(n, comul)


def circ_from_omega(coalg, omega):
    """Multiplication induced by a bilinear form on a coalgebra.

    x . y = x_(1) w(x_(2), y) + y_(1) w(x, y_(2)) - w(x, y_(1)) y_(2).
    """
    _same_dim(coalg.dim, omega.dim, "circ_from_omega")
    n = coalg.dim
    d = coalg.comul
    w = omega.mat
    mul = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            row = mul[i][j]
            for p in range(n):
                for q in range(n):
                    if nonzero(d[i][p][q]) and nonzero(w[q][j]):
                        row[p] = row[p] + d[i][p][q] * w[q][j]
                    if nonzero(d[j][p][q]):
                        if nonzero(w[i][q]):
                            row[p] = row[p] + d[j][p][q] * w[i][q]
                        if nonzero(w[i][p]):
                            row[q] = row[q] - d[j][p][q] * w[i][p]
    return AlgebraStructure(n, mul)


def nijenhuis_from_pairing(alg, omega, r):
    """Candidate Nijenhuis operator N(x) = sum_i w(x, a_i) b_i."""
    _same_dim(alg.dim, omega.dim, "nijenhuis_from_pairing")
    _same_dim(alg.dim, r.dim, "nijenhuis_from_pairing")
    return LinearOperator.square(mat_mul(omega.mat, r.mat))


def conijenhuis_from_pairing(coalg, r, omega):
    """Candidate coalgebra Nijenhuis operator S(x) = sum_i a_i w(b_i, x)."""
    _same_dim(coalg.dim, r.dim, "conijenhuis_from_pairing")
    _same_dim(coalg.dim, omega.dim, "conijenhuis_from_pairing")
    return LinearOperator.square(mat_transpose(mat_mul(r.mat, omega.mat)))


def r_sharp(r):
    """The dual-to-primal map e^i -> sum_j r[i][j] e_j."""
    return LinearOperator.square([list(row) for row in r.mat])


def is_nondegenerate(r):
    return nonzero(mat_det(r.mat))


def omega_from_r(r):
    """Inverse pairing of a nondegenerate element: the matrix inverse."""
    return BilinearForm(r.dim, mat_inverse(r.mat))


def regular_representation(alg):
    """Left and right multiplications as a representation on A itself."""
    n = alg.dim
    return Representation(
        n, n,
        [alg.left_mat_basis(i) for i in range(n)],
        [alg.right_mat_basis(i) for i in range(n)],
    )


def dual_representation(rep):
    """The representation (rho* - phi*, -phi*) on the dual module."""
    rho = [
        mat_sub(mat_transpose(phi_i), mat_transpose(rho_i))
        for rho_i, phi_i in zip(rep.rho, rep.phi)
    ]
    phi = [mat_transpose(phi_i) for phi_i in rep.phi]
    return Representation(rep.alg_dim, rep.rep_dim, rho, phi)


def dual_algebra(coalg):
    """Multiplication on the dual space: c*[a][b][k] = d[k][a][b]."""
    n = coalg.dim
    mul = [
        [[coalg.comul[k][a][b] for k in range(n)] for b in range(n)]
        for a in range(n)
    ]
    return AlgebraStructure(n, mul)


def dual_coalgebra(alg):
    """Comultiplication on the dual space: d*[k][i][j] = c[i][j][k]."""
    n = alg.dim
    comul = [
        [[alg.mul[i][j][k] for j in range(n)] for i in range(n)]
        for k in range(n)
    ]
    return CoalgebraStructure(n, comul)


def _block_operator(top, bottom):
    n, m = len(top), len(bottom)
    mat = [list(row) + [0] * m for row in top]
    mat += [[0] * n + list(row) for row in bottom]
    return LinearOperator.square(mat)


def semidirect_product(alg, n_op, rep, alpha, ring=None):
    """Semi-direct product on A + V with operator N + alpha.

    (x+u).(y+v) = x.y + rho(x)v + phi(y)u; the ambient operator is block
    diagonal.  The ambient is Nijenhuis iff (rep, alpha) represents the
    Nijenhuis structure, which is the caller's check.
    """
    if rep.alg_dim != alg.dim:
        raise DimMismatchError("representation does not match the algebra")
    n, m = alg.dim, rep.rep_dim
    if n_op.dim_in != n or n_op.dim_out != n:
        raise DimMismatchError("operator N must act on the algebra")
    if alpha.dim_in != m or alpha.dim_out != m:
        raise DimMismatchError("operator alpha must act on the module")
    total = n + m
    mul = [[[0] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                mul[i][j][k] = alg.mul[i][j][k]
    for i in range(n):
        for b in range(m):
            for a in range(m):
                mul[i][n + b][n + a] = rep.rho[i][b][a]
    for a in range(m):
        for j in range(n):
            for b in range(m):
                mul[n + a][j][n + b] = rep.phi[j][a][b]
    ambient = AlgebraStructure(total, mul)
    op = _block_operator(n_op.mat, alpha.mat)
    return ProductBundle(
        ranges=(range(0, n), range(n, total)),
        ring=ring,
        alg=ambient,
        operators={"N": op},
    )


def matched_pair_product(a_side, h_side, rho_a, phi_a, rho_h, phi_h, ring=None):
    """Bicrossed product on A + H with N = N_A + N_H.

    rho_a, phi_a: families of h-dim matrices indexed by the A basis (A
    acting on H); rho_h, phi_h: families of a-dim matrices indexed by the
    H basis.  The ambient passes PRE_LIE and NIJENHUIS exactly when the
    matched-pair equations hold (given both sides and both actions).
    """
    a_alg = a_side.need("alg")
    h_alg = h_side.need("alg")
    n_a = a_side.need("op:N")
    n_h = h_side.need("op:N")
    na, nh = a_alg.dim, h_alg.dim
    total = na + nh
    mul = [[[0] * total for _ in range(total)] for _ in range(total)]
    for i in range(na):
        for j in range(na):
            for k in range(na):
                mul[i][j][k] = a_alg.mul[i][j][k]
    for a in range(nh):
        for b in range(nh):
            for c in range(nh):
                mul[na + a][na + b][na + c] = h_alg.mul[a][b][c]
    for i in range(na):
        for b in range(nh):
            # x . b = phi_H(b)x + rho_A(x)b
            for k in range(na):
                mul[i][na + b][k] = phi_h[b][i][k]
            for c in range(nh):
                mul[i][na + b][na + c] = rho_a[i][b][c]
    for a in range(nh):
        for j in range(na):
            # a . y = rho_H(a)y + phi_A(y)a
            for k in range(na):
                mul[na + a][j][k] = rho_h[a][j][k]
            for c in range(nh):
                mul[na + a][j][na + c] = phi_a[j][a][c]
    ambient = AlgebraStructure(total, mul)
    op = _block_operator(n_a.mat, n_h.mat)
    pair = MatchedPairData(a_alg, h_alg, n_a, n_h, rho_a, phi_a, rho_h, phi_h)
    return ProductBundle(
        ranges=(range(0, na), range(na, total)),
        pair=pair,
        ring=ring,
        alg=ambient,
        operators={"N": op},
    )


def matched_pair_from_bialgebra(bundle):
    """Assemble the standard self-dual matched pair of a bialgebra bundle.

    The second side is the dual algebra of the comultiplication with
    operator S*, acting through (L* - R*, -R*) and its dual-side twin.
    """
    alg = bundle.need("alg")
    coalg = bundle.need("coalg")
    n_op = bundle.need("op:N")
    s_op = bundle.need("op:S")
    h_alg = dual_algebra(coalg)
    a_side = Bundle(ring=bundle.ring, alg=alg, operators={"N": n_op})
    h_side = Bundle(
        ring=bundle.ring,
        alg=h_alg,
        operators={"N": LinearOperator.square(mat_transpose(s_op.mat))},
    )
    da = dual_representation(regular_representation(alg))
    dh = dual_representation(regular_representation(h_alg))
    return matched_pair_product(
        a_side, h_side, da.rho, da.phi, dh.rho, dh.phi, ring=bundle.ring
    )


def coalgebra_pencil(c1, c2, s, t):
    """Linear pencil s*C1 + t*C2 of two comultiplications."""
    _same_dim(c1.dim, c2.dim, "coalgebra_pencil")
    n = c1.dim
    comul = [
        [
            [s * c1.comul[k][i][j] + t * c2.comul[k][i][j] for j in range(n)]
            for i in range(n)
        ]
        for k in range(n)
    ]
    return CoalgebraStructure(n, comul)


def central_extension(alg, omega):
    """One-dimensional central extension x*y = x.y + w(x,y) c.

    The added line annihilates everything; the output is pre-Lie exactly
    when w is a 2-cocycle for the original product.
    """
    _same_dim(alg.dim, omega.dim, "central_extension")
    n = alg.dim
    total = n + 1
    mul = [[[0] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                mul[i][j][k] = alg.mul[i][j][k]
            mul[i][j][n] = omega.mat[i][j]
    return AlgebraStructure(total, mul)


def induced_lie_bialgebra(bundle):
    """Antisymmetrize a pre-Lie bialgebra bundle into a Lie bialgebra one.

    [x,y] = x.y - y.x and the cobracket is D - tau D; named operators are
    carried over unchanged.
    """
    alg = bundle.alg
    coalg = bundle.coalg
    if alg is None or coalg is None:
        raise MissingMemberError("induced_lie_bialgebra needs alg and coalg")
    n = alg.dim
    bracket = [
        [
            [alg.mul[i][j][k] - alg.mul[j][i][k] for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    cobracket = [
        [
            [coalg.comul[k][i][j] - coalg.comul[k][j][i] for j in range(n)]
            for i in range(n)
        ]
        for k in range(n)
    ]
    return Bundle(
        ring=bundle.ring,
        alg=AlgebraStructure(n, bracket),
        coalg=CoalgebraStructure(n, cobracket),
        operators=dict(bundle.operators),
        assumptions=list(bundle.assumptions),
    )


def lift_o_operator_to_r(alg, n_op, rep, alpha, beta, T, s_op, ring=None):
    """Lift T: V -> A to the symmetric element T + tau(T) on A + V*.

    The ambient is the semi-direct product through the dual representation
    with operator N + beta*, carrying S + alpha* as its coalgebra-side
    operator; the returned tensor solves the Nijenhuis-enriched version of
    the quadratic equation iff T satisfies the weak intertwining equations
    and T beta = S T.
    """
    n, m = alg.dim, rep.rep_dim
    if T.dim_in != m or T.dim_out != n:
        raise DimMismatchError("operator T must map the module into the algebra")
    dual = dual_representation(rep)
    ambient = semidirect_product(
        alg, n_op, dual,
        LinearOperator.square(mat_transpose(beta.mat)), ring=ring,
    )
    s_amb = _block_operator(s_op.mat, mat_transpose(alpha.mat))
    total = n + m
    rmat = [[0] * total for _ in range(total)]
    for a in range(m):
        for k in range(n):
            rmat[k][n + a] = rmat[k][n + a] + T.mat[a][k]
            rmat[n + a][k] = rmat[n + a][k] + T.mat[a][k]
    r = TensorElement(total, rmat)
    out = ProductBundle(
        ranges=ambient.ranges,
        ring=ring,
        alg=ambient.alg,
        operators={"N": ambient.operators["N"], "S": s_amb},
        tensors={"r": r},
    )
    return out, r


def pi_apply(op, family, theta):
    """The involutive reparametrizations used for admissibility families."""
    if family == "scale":
        return LinearOperator.square(mat_scale(op.mat, theta))
    if family == "reflect":
        one = one_like(theta)
        ident = mat_identity(op.dim_in, one)
        return LinearOperator.square(
            mat_sub(mat_scale(ident, theta), op.mat)
        )
    if family == "invert":
        return LinearOperator.square(mat_scale(mat_inverse(op.mat), theta))
    raise ValidationError(f"unknown Pi family {family!r}")


def lift_o_operator_with_pi(alg, n_op, rep, alpha, T, pi, ring=None):
    """Convenience wrapper: beta = Pi(alpha), S = Pi(N)."""
    family, theta = pi["family"], pi["theta"]
    beta = pi_apply(alpha, family, theta)
    s_op = pi_apply(n_op, family, theta)
    return lift_o_operator_to_r(alg, n_op, rep, alpha, beta, T, s_op, ring=ring)
