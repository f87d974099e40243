"""Structure-constant data model and tensor primitives.

Index conventions, fixed once and used everywhere:

* algebra tensor  c[i][j][k]:  e_i . e_j = sum_k c[i][j][k] e_k
* coalgebra tensor d[k][i][j]: D(e_k)   = sum_{i,j} d[k][i][j] e_i (x) e_j
  (left tensor slot first)
* operator matrix  M[i][j]:    F(e_i)   = sum_j M[i][j] e_j, so operators
  act on coefficient row vectors and composition F then G is M_F . M_G
* bilinear form    w[i][j] = w(e_i, e_j)
* tensor element   r[i][j]:    r = sum r[i][j] e_i (x) e_j

Entries are "scalar-like": exact Scalars, Fractions or ints, closed under
+, -, * (laws never divide).  Dual structures are realized by matrix
transposition under the pairing <e^i, e_j> = delta_ij.
"""

from fractions import Fraction

from .errors import DimMismatchError, MissingMemberError, NotInvertibleError
from .scalars import EMPTY_RING, ParamRing, Scalar


def nonzero(value):
    if isinstance(value, Scalar):
        return not value.is_zero()
    return value != 0


def one_like(value):
    if isinstance(value, Scalar):
        return value.ring.one()
    return 1


# ---------------------------------------------------------------------------
# dense tensors with slot operations
# ---------------------------------------------------------------------------

class Tensor:
    """Dense tensor over scalar-like entries, row-major flat storage."""

    __slots__ = ("dims", "data")

    def __init__(self, dims, data):
        self.dims = tuple(dims)
        self.data = data

    @classmethod
    def zeros(cls, dims):
        size = 1
        for d in dims:
            size *= d
        return cls(dims, [0] * size)

    @classmethod
    def from_matrix(cls, mat):
        rows = len(mat)
        cols = len(mat[0]) if rows else 0
        data = []
        for row in mat:
            data.extend(row)
        return cls((rows, cols), data)

    @classmethod
    def from_vector(cls, vec):
        return cls((len(vec),), list(vec))

    def offset(self, idx):
        off = 0
        for d, i in zip(self.dims, idx):
            off = off * d + i
        return off

    def __getitem__(self, idx):
        return self.data[self.offset(idx)]

    def __setitem__(self, idx, value):
        self.data[self.offset(idx)] = value

    def indices(self):
        dims = self.dims
        if not dims:
            yield ()
            return
        idx = [0] * len(dims)
        while True:
            yield tuple(idx)
            for pos in range(len(dims) - 1, -1, -1):
                idx[pos] += 1
                if idx[pos] < dims[pos]:
                    break
                idx[pos] = 0
            else:
                return

    def entries(self):
        for idx, value in zip(self.indices(), self.data):
            yield idx, value

    def __add__(self, other):
        if self.dims != other.dims:
            raise DimMismatchError(f"tensor shapes {self.dims} vs {other.dims}")
        return Tensor(self.dims, [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        if self.dims != other.dims:
            raise DimMismatchError(f"tensor shapes {self.dims} vs {other.dims}")
        return Tensor(self.dims, [a - b for a, b in zip(self.data, other.data)])

    def __neg__(self):
        return Tensor(self.dims, [-a for a in self.data])

    def scale(self, k):
        return Tensor(self.dims, [k * a for a in self.data])

    def outer(self, other):
        out = Tensor.zeros(self.dims + other.dims)
        pos = 0
        for a in self.data:
            for b in other.data:
                out.data[pos] = a * b
                pos += 1
        return out

    def permute(self, perm):
        dims = tuple(self.dims[p] for p in perm)
        out = Tensor.zeros(dims)
        for idx, value in self.entries():
            out[tuple(idx[p] for p in perm)] = value
        return out

    def swap(self, s1, s2):
        perm = list(range(len(self.dims)))
        perm[s1], perm[s2] = perm[s2], perm[s1]
        return self.permute(perm)

    def apply_op(self, mat, slot):
        """Contract a slot with an operator matrix M[i][a]."""
        dim_in = len(mat)
        dim_out = len(mat[0]) if dim_in else 0
        if self.dims[slot] != dim_in:
            raise DimMismatchError(
                f"slot {slot} has dim {self.dims[slot]}, operator expects {dim_in}"
            )
        dims = self.dims[:slot] + (dim_out,) + self.dims[slot + 1 :]
        out = Tensor.zeros(dims)
        for idx, value in self.entries():
            if not nonzero(value):
                continue
            row = mat[idx[slot]]
            for a in range(dim_out):
                m = row[a]
                if nonzero(m):
                    oidx = idx[:slot] + (a,) + idx[slot + 1 :]
                    out[oidx] = out[oidx] + value * m
        return out

    def apply_mul(self, mul, s1, s2, pos):
        """Multiply slots s1 and s2 (in that order) through c[i][j][k].

        Both slots are removed and the product slot is inserted at index
        `pos` of the remaining slot list.
        """
        n = len(mul)
        if self.dims[s1] != n or self.dims[s2] != n:
            raise DimMismatchError("slot dims do not match algebra dimension")
        rest = [s for s in range(len(self.dims)) if s not in (s1, s2)]
        dims = [self.dims[s] for s in rest]
        dims.insert(pos, n)
        out = Tensor.zeros(tuple(dims))
        for idx, value in self.entries():
            if not nonzero(value):
                continue
            row = mul[idx[s1]][idx[s2]]
            base = [idx[s] for s in rest]
            for k in range(n):
                c = row[k]
                if nonzero(c):
                    oidx = base[:pos] + [k] + base[pos:]
                    out[tuple(oidx)] = out[tuple(oidx)] + value * c
        return out

    def apply_comul(self, comul, slot):
        """Expand a slot through d[k][i][j] into two adjacent slots."""
        n = len(comul)
        if self.dims[slot] != n:
            raise DimMismatchError("slot dim does not match coalgebra dimension")
        dims = self.dims[:slot] + (n, n) + self.dims[slot + 1 :]
        out = Tensor.zeros(dims)
        for idx, value in self.entries():
            if not nonzero(value):
                continue
            dk = comul[idx[slot]]
            for i in range(n):
                for j in range(n):
                    c = dk[i][j]
                    if nonzero(c):
                        oidx = idx[:slot] + (i, j) + idx[slot + 1 :]
                        out[oidx] = out[oidx] + value * c
        return out

    def apply_form(self, mat, s1, s2):
        """Contract slots s1 and s2 (in that order) with a bilinear form."""
        rest = [s for s in range(len(self.dims)) if s not in (s1, s2)]
        out = Tensor.zeros(tuple(self.dims[s] for s in rest))
        for idx, value in self.entries():
            if not nonzero(value):
                continue
            w = mat[idx[s1]][idx[s2]]
            if nonzero(w):
                oidx = tuple(idx[s] for s in rest)
                out[oidx] = out[oidx] + value * w
        return out

    def is_zero(self):
        return not any(nonzero(v) for v in self.data)


# ---------------------------------------------------------------------------
# exact matrix helpers (entries form a field: Scalar or Fraction)
# ---------------------------------------------------------------------------

def mat_identity(n, one=1):
    return [[one if i == j else 0 for j in range(n)] for i in range(n)]


def mat_transpose(mat):
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    return [[mat[i][j] for i in range(rows)] for j in range(cols)]


def mat_mul(a, b):
    rows, inner = len(a), len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            v = a[i][k]
            if nonzero(v):
                for j in range(cols):
                    out[i][j] = out[i][j] + v * b[k][j]
    return out

def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def mat_scale(a, k):
    return [[k * x for x in row] for row in a]


def _fieldify(mat):
    """Promote plain int entries to Fractions so division stays exact."""
    return [
        [Fraction(v) if isinstance(v, int) else v for v in row] for row in mat
    ]


def mat_det(mat):
    """Exact determinant by Gaussian elimination over the coefficient field."""
    n = len(mat)
    if n == 0:
        return 1
    work = _fieldify(mat)
    det = one_like(work[0][0] if work[0] else 1)
    sign = 1
    for col in range(n):
        pivot = None
        for row in range(col, n):
            if nonzero(work[row][col]):
                pivot = row
                break
        if pivot is None:
            return det * 0
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            sign = -sign
        p = work[col][col]
        det = det * p
        for row in range(col + 1, n):
            factor = work[row][col] / p
            if nonzero(factor):
                for j in range(col, n):
                    work[row][j] = work[row][j] - factor * work[col][j]
    return det if sign > 0 else -det


def mat_inverse(mat):
    """Exact inverse by Gauss-Jordan elimination; raises when singular."""
    n = len(mat)
    one = one_like(mat[0][0] if n else 1)
    work = [row + [one if i == j else 0 for j in range(n)]
            for i, row in enumerate(_fieldify(mat))]
    for col in range(n):
        pivot = None
        for row in range(col, n):
            if nonzero(work[row][col]):
                pivot = row
                break
        if pivot is None:
            raise NotInvertibleError("matrix determinant is identically zero")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        work[col] = [v / p for v in work[col]]
        for row in range(n):
            if row != col and nonzero(work[row][col]):
                factor = work[row][col]
                work[row] = [a - factor * b for a, b in zip(work[row], work[col])]
    return [row[n:] for row in work]


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

def _check_cube(tensor, n, what):
    if len(tensor) != n:
        raise DimMismatchError(f"{what} tensor must have {n} slices")
    for plane in tensor:
        if len(plane) != n or any(len(row) != n for row in plane):
            raise DimMismatchError(f"{what} tensor must be {n}x{n}x{n}")


def _check_square(mat, n, what):
    if len(mat) != n or any(len(row) != n for row in mat):
        raise DimMismatchError(f"{what} matrix must be {n}x{n}")


class AlgebraStructure:
    """Multiplication tensor; no axiom is implied by the type."""

    __slots__ = ("dim", "mul")

    def __init__(self, dim, mul):
        _check_cube(mul, dim, "multiplication")
        self.dim = dim
        self.mul = mul

    def mul_apply(self, x, y):
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimMismatchError("vector length does not match dimension")
        out = [0] * n
        for i in range(n):
            if not nonzero(x[i]):
                continue
            for j in range(n):
                coeff = x[i] * y[j]
                if nonzero(coeff):
                    row = self.mul[i][j]
                    for k in range(n):
                        if nonzero(row[k]):
                            out[k] = out[k] + coeff * row[k]
        return out

    def left_mat(self, x):
        """Matrix of y -> x . y (x a coefficient vector)."""
        n = self.dim
        out = [[0] * n for _ in range(n)]
        for i, xi in enumerate(x):
            if nonzero(xi):
                for j in range(n):
                    row = self.mul[i][j]
                    for k in range(n):
                        if nonzero(row[k]):
                            out[j][k] = out[j][k] + xi * row[k]
        return out

    def right_mat(self, x):
        """Matrix of y -> y . x."""
        n = self.dim
        out = [[0] * n for _ in range(n)]
        for j, xj in enumerate(x):
            if nonzero(xj):
                for i in range(n):
                    row = self.mul[i][j]
                    for k in range(n):
                        if nonzero(row[k]):
                            out[i][k] = out[i][k] + xj * row[k]
        return out

    def left_mat_basis(self, i):
        return [list(row) for row in self.mul[i]]

    def right_mat_basis(self, j):
        return [list(self.mul[i][j]) for i in range(self.dim)]


class CoalgebraStructure:
    __slots__ = ("dim", "comul")

    def __init__(self, dim, comul):
        _check_cube(comul, dim, "comultiplication")
        self.dim = dim
        self.comul = comul

    def comul_apply(self, x):
        n = self.dim
        if len(x) != n:
            raise DimMismatchError("vector length does not match dimension")
        out = [[0] * n for _ in range(n)]
        for k in range(n):
            if nonzero(x[k]):
                dk = self.comul[k]
                for i in range(n):
                    for j in range(n):
                        if nonzero(dk[i][j]):
                            out[i][j] = out[i][j] + x[k] * dk[i][j]
        return out


class LinearOperator:
    __slots__ = ("dim_in", "dim_out", "mat")

    def __init__(self, dim_in, dim_out, mat):
        if len(mat) != dim_in or any(len(row) != dim_out for row in mat):
            raise DimMismatchError(f"operator matrix must be {dim_in}x{dim_out}")
        self.dim_in = dim_in
        self.dim_out = dim_out
        self.mat = mat

    @classmethod
    def square(cls, mat):
        return cls(len(mat), len(mat[0]) if mat else 0, mat)

    def apply(self, x):
        if len(x) != self.dim_in:
            raise DimMismatchError("vector length does not match operator domain")
        out = [0] * self.dim_out
        for i, xi in enumerate(x):
            if nonzero(xi):
                for j in range(self.dim_out):
                    if nonzero(self.mat[i][j]):
                        out[j] = out[j] + xi * self.mat[i][j]
        return out


class BilinearForm:
    __slots__ = ("dim", "mat")

    def __init__(self, dim, mat):
        _check_square(mat, dim, "bilinear form")
        self.dim = dim
        self.mat = mat

    def apply(self, x, y):
        total = 0
        for i, xi in enumerate(x):
            if nonzero(xi):
                row = self.mat[i]
                for j, yj in enumerate(y):
                    if nonzero(yj) and nonzero(row[j]):
                        total = total + xi * yj * row[j]
        return total


class TensorElement:
    __slots__ = ("dim", "mat")

    def __init__(self, dim, mat):
        _check_square(mat, dim, "tensor element")
        self.dim = dim
        self.mat = mat


class Representation:
    """rho, phi: one rep_dim x rep_dim matrix per algebra basis element."""

    __slots__ = ("alg_dim", "rep_dim", "rho", "phi")

    def __init__(self, alg_dim, rep_dim, rho, phi):
        for fam, what in ((rho, "rho"), (phi, "phi")):
            if len(fam) != alg_dim:
                raise DimMismatchError(f"{what} must list {alg_dim} matrices")
            for mat in fam:
                _check_square(mat, rep_dim, what)
        self.alg_dim = alg_dim
        self.rep_dim = rep_dim
        self.rho = rho
        self.phi = phi

    def rho_mat(self, x):
        """Matrix of rho(x) for a coefficient vector x over the algebra."""
        return _combine(self.rho, x, self.rep_dim)

    def phi_mat(self, x):
        return _combine(self.phi, x, self.rep_dim)


def _combine(family, x, m):
    out = [[0] * m for _ in range(m)]
    for i, xi in enumerate(x):
        if nonzero(xi):
            mat = family[i]
            for a in range(m):
                row = mat[a]
                for b in range(m):
                    if nonzero(row[b]):
                        out[a][b] = out[a][b] + xi * row[b]
    return out


class Corepresentation:
    """xi, eta: V -> A (x) V stored as [a][i][b] coefficient tensors."""

    __slots__ = ("coalg_dim", "corep_dim", "xi", "eta")

    def __init__(self, coalg_dim, corep_dim, xi, eta):
        for fam, what in ((xi, "xi"), (eta, "eta")):
            if len(fam) != corep_dim:
                raise DimMismatchError(f"{what} must list {corep_dim} slices")
            for plane in fam:
                if len(plane) != coalg_dim or any(
                    len(row) != corep_dim for row in plane
                ):
                    raise DimMismatchError(
                        f"{what} slices must be {coalg_dim}x{corep_dim}"
                    )
        self.coalg_dim = coalg_dim
        self.corep_dim = corep_dim
        self.xi = xi
        self.eta = eta


class Bundle:
    """The unit the tool loads, checks and transforms.

    Assumption scalars are declared non-zero side conditions; they never
    change residual computation, only reports.
    """

    __slots__ = (
        "ring", "alg", "coalg", "coalg2",
        "operators", "forms", "tensors", "reps", "coreps", "assumptions",
    )

    def __init__(self, ring=None, alg=None, coalg=None, coalg2=None,
                 operators=None, forms=None, tensors=None, reps=None,
                 coreps=None, assumptions=None):
        self.ring = ring if ring is not None else EMPTY_RING
        self.alg = alg
        self.coalg = coalg
        self.coalg2 = coalg2
        self.operators = dict(operators or {})
        self.forms = dict(forms or {})
        self.tensors = dict(tensors or {})
        self.reps = dict(reps or {})
        self.coreps = dict(coreps or {})
        self.assumptions = list(assumptions or [])
        self._validate()

    def _validate(self):
        n = self.dim
        if n is None:
            return
        if self.coalg is not None and self.coalg.dim != n:
            raise DimMismatchError("coalgebra dimension differs from ambient")
        if self.coalg2 is not None and self.coalg2.dim != n:
            raise DimMismatchError("second coalgebra dimension differs from ambient")
        for name, form in self.forms.items():
            if form.dim != n:
                raise DimMismatchError(f"form {name!r} dimension differs from ambient")
        for name, tensor in self.tensors.items():
            if tensor.dim != n:
                raise DimMismatchError(f"tensor {name!r} dimension differs from ambient")
        for v in self.assumptions:
            if isinstance(v, Scalar) and v.is_zero():
                raise DimMismatchError("assumption scalar is identically zero")

    @property
    def dim(self):
        if self.alg is not None:
            return self.alg.dim
        if self.coalg is not None:
            return self.coalg.dim
        if self.coalg2 is not None:
            return self.coalg2.dim
        return None

    def need(self, member):
        """Fetch a named member, raising MISSING_MEMBER when absent."""
        if member == "alg":
            value = self.alg
        elif member == "coalg":
            value = self.coalg
        elif member == "coalg2":
            value = self.coalg2
        elif member.startswith("op:"):
            value = self.operators.get(member[3:])
        elif member.startswith("form:"):
            value = self.forms.get(member[5:])
        elif member.startswith("tensor:"):
            value = self.tensors.get(member[7:])
        elif member.startswith("rep:"):
            value = self.reps.get(member[4:])
        elif member.startswith("corep:"):
            value = self.coreps.get(member[6:])
        else:
            raise ValueError(f"bad member spec {member!r}")
        if value is None:
            raise MissingMemberError(f"bundle lacks required member {member!r}")
        return value

    def replace(self, **kwargs):
        fields = dict(
            ring=self.ring, alg=self.alg, coalg=self.coalg, coalg2=self.coalg2,
            operators=self.operators, forms=self.forms, tensors=self.tensors,
            reps=self.reps, coreps=self.coreps, assumptions=self.assumptions,
        )
        fields.update(kwargs)
        return Bundle(**fields)

    def map_scalars(self, fn):
        def m1(vec):
            return [fn(v) for v in vec]

        def m2(mat):
            return [m1(row) for row in mat]

        def m3(cube):
            return [m2(p) for p in cube]

        out = Bundle.__new__(Bundle)
        out.ring = self.ring
        out.alg = (
            AlgebraStructure(self.alg.dim, m3(self.alg.mul))
            if self.alg is not None else None
        )
        out.coalg = (
            CoalgebraStructure(self.coalg.dim, m3(self.coalg.comul))
            if self.coalg is not None else None
        )
        out.coalg2 = (
            CoalgebraStructure(self.coalg2.dim, m3(self.coalg2.comul))
            if self.coalg2 is not None else None
        )
        out.operators = {
            k: LinearOperator(v.dim_in, v.dim_out, m2(v.mat))
            for k, v in self.operators.items()
        }
        out.forms = {k: BilinearForm(v.dim, m2(v.mat)) for k, v in self.forms.items()}
        out.tensors = {
            k: TensorElement(v.dim, m2(v.mat)) for k, v in self.tensors.items()
        }
        out.reps = {
            k: Representation(v.alg_dim, v.rep_dim, [m2(p) for p in v.rho],
                              [m2(p) for p in v.phi])
            for k, v in self.reps.items()
        }
        out.coreps = {
            k: Corepresentation(v.coalg_dim, v.corep_dim, m3(v.xi), m3(v.eta))
            for k, v in self.coreps.items()
        }
        out.assumptions = [fn(v) for v in self.assumptions]
        return out

    def bind(self, bindings):
        """Substitute a subset of parameters by rationals in every member."""
        if not bindings:
            return self
        return self.map_scalars(
            lambda v: v.bind(bindings) if isinstance(v, Scalar) else v
        )

    def to_numeric(self):
        """Convert every Scalar entry to a Fraction; fails on free parameters."""
        def conv(v):
            if isinstance(v, Scalar):
                return v.to_fraction()
            return Fraction(v)

        return self.map_scalars(conv)

    def to_exact(self, ring=None):
        """Lift numeric entries into constant Scalars over `ring`."""
        ring = ring or self.ring

        def conv(v):
            if isinstance(v, Scalar):
                return v
            return ring.const(v)

        out = self.map_scalars(conv)
        out.ring = ring
        return out


class MatchedPairData:
    """Two Nijenhuis pre-Lie algebra sides acting on each other.

    rho_a, phi_a: families of h_dim x h_dim matrices indexed by the A basis
    (A acting on H); rho_h, phi_h: families of a_dim x a_dim matrices
    indexed by the H basis.
    """

    __slots__ = ("a_alg", "h_alg", "n_a", "n_h", "rho_a", "phi_a", "rho_h", "phi_h")

    def __init__(self, a_alg, h_alg, n_a, n_h, rho_a, phi_a, rho_h, phi_h):
        self.a_alg = a_alg
        self.h_alg = h_alg
        self.n_a = n_a
        self.n_h = n_h
        self.rho_a = rho_a
        self.phi_a = phi_a
        self.rho_h = rho_h
        self.phi_h = phi_h


class ProductBundle(Bundle):
    """Bundle on a direct-sum space, remembering the summand index ranges."""

    __slots__ = ("ranges", "pair")

    def __init__(self, ranges, pair=None, **kwargs):
        self.ranges = tuple(tuple(r) for r in ranges)
        self.pair = pair
        super().__init__(**kwargs)


def flip(obj):
    """Transpose of the coefficient matrix (the flip map on A (x) A)."""
    if isinstance(obj, TensorElement):
        return TensorElement(obj.dim, mat_transpose(obj.mat))
    return mat_transpose(obj)


def mul_apply(alg, x, y):
    return alg.mul_apply(x, y)


def comul_apply(coalg, x):
    return coalg.comul_apply(x)


def basis_vector(n, i, one=1):
    vec = [0] * n
    vec[i] = one
    return vec
