"""Catalog of small structure bundles with symbolic parameters.

Every fixture ships with the law profile it is asserted to satisfy; the
regression sweep in the search module re-verifies all of them.  Entries
are written as expression strings and parsed on construction; indices in
the spec dicts are 1-based to match the file format.
"""

from .errors import UnknownFixtureError
from .scalars import ParamRing
from .structures import (
    AlgebraStructure,
    BilinearForm,
    Bundle,
    CoalgebraStructure,
    LinearOperator,
    TensorElement,
)


def _cube(ring, dim, entries):
    out = [[[ring.zero() for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), expr in entries.items():
        out[i - 1][j - 1][k - 1] = ring.parse(expr)
    return out


def _matrix(ring, rows):
    return [[ring.parse(expr) for expr in row] for row in rows]


def _ex_alg_mul(ring, dim=2):
    # products on {e, f}: f.e = -e, f.f = lam f; all other products vanish
    return _cube(ring, dim, {(2, 1, 1): "-1", (2, 2, 2): "lam"})


def _lie_bracket(ring):
    # [e, f] = e = -[f, e]
    return _cube(ring, 2, {(1, 2, 1): "1", (2, 1, 1): "-1"})


def _fx_ex_alg(ring):
    return Bundle(
        ring=ring,
        alg=AlgebraStructure(2, _ex_alg_mul(ring)),
        assumptions=[ring.parse("lam + 1")],
    )


def _fx_ex_omega_a(ring):
    alg = AlgebraStructure(2, _cube(ring, 2, {(2, 1, 1): "-1", (2, 2, 2): "1"}))
    return Bundle(
        ring=ring,
        alg=alg,
        forms={"omega": BilinearForm(2, _matrix(ring, [["0", "l3"], ["l3", "l2"]]))},
    )


def _fx_ex_omega_b(ring):
    return Bundle(
        ring=ring,
        alg=AlgebraStructure(2, _ex_alg_mul(ring)),
        forms={"omega": BilinearForm(2, _matrix(ring, [["0", "0"], ["0", "l2"]]))},
    )


def _coalg1(ring):
    return CoalgebraStructure(
        2, _cube(ring, 2, {(1, 1, 1): "lam", (2, 2, 2): "phi"})
    )


def _coalg2(ring):
    return CoalgebraStructure(
        2,
        _cube(
            ring, 2,
            {(1, 1, 1): "lam", (1, 1, 2): "lam", (2, 2, 1): "lam", (2, 2, 2): "lam"},
        ),
    )


def _fx_ex_coalg1(ring):
    return Bundle(ring=ring, coalg=_coalg1(ring))


def _fx_ex_coalg2(ring):
    return Bundle(ring=ring, coalg=_coalg2(ring))


def _fx_ex_omega_1a(ring):
    return Bundle(
        ring=ring,
        coalg=_coalg1(ring),
        forms={"omega": BilinearForm(2, _matrix(ring, [["nu", "0"], ["0", "kap"]]))},
    )


def _fx_ex_omega_1b(ring):
    mat = _matrix(
        ring,
        [["phi^2*nu/lam^2", "phi*nu/lam"], ["phi*nu/lam", "nu"]],
    )
    return Bundle(
        ring=ring,
        coalg=_coalg1(ring),
        forms={"omega": BilinearForm(2, mat)},
        assumptions=[ring.parse("lam")],
    )


def _fx_ex_omega_2a(ring):
    return Bundle(
        ring=ring,
        coalg=_coalg2(ring),
        forms={"omega": BilinearForm(2, _matrix(ring, [["0", "0"], ["0", "nu"]]))},
    )


def _fx_ex_omega_2b(ring):
    mat = _matrix(ring, [["nu", "kap"], ["kap", "kap^2/nu"]])
    return Bundle(
        ring=ring,
        coalg=_coalg2(ring),
        forms={"omega": BilinearForm(2, mat)},
        assumptions=[ring.parse("nu")],
    )


def _fx_ex_bialg_1(ring):
    # product at lam = 1; N(e) = k2 l3 e, N(f) = (k1 l3 + k2 l2) e + k2 l3 f
    alg = AlgebraStructure(2, _cube(ring, 2, {(2, 1, 1): "-1", (2, 2, 2): "1"}))
    coalg = CoalgebraStructure(
        2, _cube(ring, 2, {(1, 1, 1): "k2", (2, 1, 1): "-2*k1", (2, 1, 2): "-k2"})
    )
    n_mat = _matrix(ring, [["k2*l3", "0"], ["k1*l3 + k2*l2", "k2*l3"]])
    return Bundle(
        ring=ring,
        alg=alg,
        coalg=coalg,
        operators={
            "N": LinearOperator.square(n_mat),
            "S": LinearOperator.square([list(row) for row in n_mat]),
        },
    )


def _fx_ex_bialg_2(ring):
    alg = AlgebraStructure(2, _ex_alg_mul(ring))
    coalg = CoalgebraStructure(
        2, _cube(ring, 2, {(1, 2, 1): "k3", (2, 2, 2): "lam*k3"})
    )
    return Bundle(
        ring=ring,
        alg=alg,
        coalg=coalg,
        operators={
            "N": LinearOperator.square(_matrix(ring, [["0", "0"], ["0", "k3*l2"]])),
            "S": LinearOperator.square(
                _matrix(ring, [["k3*l2", "0"], ["0", "k3*l2"]])
            ),
        },
    )


def _fx_ex_bialg_3(ring):
    # N sends f to k1 l3 e (the rank-1 operator family for r = k1 e(x)e);
    # S = theta id is the unique diagonal-free choice passing admissibility
    alg = AlgebraStructure(2, _ex_alg_mul(ring))
    coalg = CoalgebraStructure(2, _cube(ring, 2, {(2, 1, 1): "-2*k1"}))
    return Bundle(
        ring=ring,
        alg=alg,
        coalg=coalg,
        operators={
            "N": LinearOperator.square(_matrix(ring, [["0", "0"], ["k1*l3", "0"]])),
            "S": LinearOperator.square(
                _matrix(ring, [["theta", "0"], ["0", "theta"]])
            ),
        },
    )


def _fx_ex_lie_bialg_1(ring):
    coalg = CoalgebraStructure(
        2, _cube(ring, 2, {(2, 2, 1): "k2", (2, 1, 2): "-k2"})
    )
    n_mat = _matrix(ring, [["k2*l3", "0"], ["k1*l3 + k2*l2", "k2*l3"]])
    return Bundle(
        ring=ring,
        alg=AlgebraStructure(2, _lie_bracket(ring)),
        coalg=coalg,
        operators={
            "N": LinearOperator.square(n_mat),
            "S": LinearOperator.square([list(row) for row in n_mat]),
        },
    )


def _fx_ex_lie_bialg_2(ring):
    coalg = CoalgebraStructure(
        2, _cube(ring, 2, {(1, 2, 1): "k3", (1, 1, 2): "-k3"})
    )
    return Bundle(
        ring=ring,
        alg=AlgebraStructure(2, _lie_bracket(ring)),
        coalg=coalg,
        operators={
            "N": LinearOperator.square(_matrix(ring, [["0", "0"], ["0", "k3*l2"]])),
            "S": LinearOperator.square(
                _matrix(ring, [["k3*l2", "0"], ["0", "k3*l2"]])
            ),
        },
    )


def _fx_ex_lie_bialg_3(ring):
    coalg = CoalgebraStructure(2, _cube(ring, 2, {}))
    return Bundle(
        ring=ring,
        alg=AlgebraStructure(2, _lie_bracket(ring)),
        coalg=coalg,
        operators={
            "N": LinearOperator.square(_matrix(ring, [["0", "0"], ["k1*l3", "0"]])),
            "S": LinearOperator.square(
                _matrix(ring, [["theta", "0"], ["0", "theta"]])
            ),
        },
    )


class FixtureSpec:
    __slots__ = ("name", "params", "build", "profile", "description")

    def __init__(self, name, params, build, profile, description):
        self.name = name
        self.params = tuple(params)
        self.build = build
        self.profile = tuple(profile)
        self.description = description


CATALOG = {
    spec.name: spec
    for spec in (
        FixtureSpec(
            "ExAlg", ("lam",), _fx_ex_alg, ("PRE_LIE",),
            "dim-2 one-parameter algebra: f.e = -e, f.f = lam f",
        ),
        FixtureSpec(
            "ExOmegaA", ("l2", "l3"), _fx_ex_omega_a,
            ("PRE_LIE", "SYMMETRIC_FORM", "PSEUDO_HESSIAN"),
            "ExAlg at lam = 1 with the two-parameter cocycle form",
        ),
        FixtureSpec(
            "ExOmegaB", ("lam", "l2"), _fx_ex_omega_b,
            ("PRE_LIE", "SYMMETRIC_FORM", "PSEUDO_HESSIAN"),
            "ExAlg with the rank-1 cocycle form on f",
        ),
        FixtureSpec(
            "ExCoalg1", ("lam", "phi"), _fx_ex_coalg1, ("PRE_LIE_CO",),
            "diagonal comultiplication D(e) = lam e(x)e, D(f) = phi f(x)f",
        ),
        FixtureSpec(
            "ExCoalg2", ("lam",), _fx_ex_coalg2, ("PRE_LIE_CO",),
            "comultiplication D(e) = lam e(x)(e+f), D(f) = lam f(x)(e+f)",
        ),
        FixtureSpec(
            "ExOmega1a", ("lam", "phi", "nu", "kap"), _fx_ex_omega_1a,
            ("PRE_LIE_CO", "SYMMETRIC_FORM", "CO_S_EQUATION"),
            "ExCoalg1 with the diagonal solution form diag(nu, kap)",
        ),
        FixtureSpec(
            "ExOmega1b", ("lam", "phi", "nu"), _fx_ex_omega_1b,
            ("PRE_LIE_CO", "SYMMETRIC_FORM", "CO_S_EQUATION"),
            "ExCoalg1 with the rank-1 solution form (requires lam != 0)",
        ),
        FixtureSpec(
            "ExOmega2a", ("lam", "nu"), _fx_ex_omega_2a,
            ("PRE_LIE_CO", "SYMMETRIC_FORM", "CO_S_EQUATION"),
            "ExCoalg2 with the rank-1 solution form on f",
        ),
        FixtureSpec(
            "ExOmega2b", ("lam", "nu", "kap"), _fx_ex_omega_2b,
            ("PRE_LIE_CO", "SYMMETRIC_FORM", "CO_S_EQUATION"),
            "ExCoalg2 with the rank-1 solution form (requires nu != 0)",
        ),
        FixtureSpec(
            "ExBialgI", ("k1", "k2", "l2", "l3"), _fx_ex_bialg_1,
            ("NIJ_PRE_LIE_BIALG", "BALANCED"),
            "coboundary bialgebra on ExAlg(1) with S = N",
        ),
        FixtureSpec(
            "ExBialgII", ("lam", "k3", "l2"), _fx_ex_bialg_2,
            ("NIJ_PRE_LIE_BIALG", "BALANCED"),
            "bialgebra on ExAlg with diagonal N and scalar S",
        ),
        FixtureSpec(
            "ExBialgIII", ("lam", "k1", "l3", "theta"), _fx_ex_bialg_3,
            ("NIJ_PRE_LIE_BIALG", "BALANCED"),
            "coboundary bialgebra D(f) = -2 k1 e(x)e with free S(f) = theta f",
        ),
        FixtureSpec(
            "ExLieBialgI", ("k1", "k2", "l2", "l3"), _fx_ex_lie_bialg_1,
            ("NIJ_LIE_BIALG",),
            "antisymmetrization of ExBialgI",
        ),
        FixtureSpec(
            "ExLieBialgII", ("lam", "k3", "l2"), _fx_ex_lie_bialg_2,
            ("NIJ_LIE_BIALG",),
            "antisymmetrization of ExBialgII",
        ),
        FixtureSpec(
            "ExLieBialgIII", ("k1", "l3", "theta"), _fx_ex_lie_bialg_3,
            ("NIJ_LIE_BIALG",),
            "antisymmetrization of ExBialgIII",
        ),
    )
}


def fixture(name, bindings=None):
    """Instantiate a catalog bundle, optionally binding some parameters."""
    try:
        spec = CATALOG[name]
    except KeyError:
        raise UnknownFixtureError(f"unknown fixture {name!r}") from None
    bundle = spec.build(ParamRing(spec.params))
    if bindings:
        bundle = bundle.bind(bindings)
    return bundle


def fixture_names():
    return sorted(CATALOG)
