"""Desk-scale discovery: exhaustive grid enumeration and family verification.

Search is numeric only (all parameters bound to rationals); symbolic
certification of parameter families is verify_family's job.  Candidate
evaluation short-circuits on the first non-zero residual component, in
law-list order then residual multi-index order.  Every hit is re-verified
through laws.check on an exact-Scalar copy of the bundle, an independent
path from the fast numeric evaluation.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product

from .errors import GridTooLargeError, SymbolicTemplateError, ValidationError
from .fixtures import CATALOG, fixture
from .laws import check, iter_residual, normalize_law
from .scalars import EMPTY_RING, Scalar
from .structures import BilinearForm, LinearOperator, TensorElement, nonzero

DEFAULT_CAP = 10_000_000

SHAPES = ("operator", "tensor", "form")


class GridSpec:
    """Which member is unknown and which rational entries to try."""

    __slots__ = ("shape", "member", "entries", "symmetric")

    _DEFAULT_MEMBER = {"operator": "N", "tensor": "r", "form": "omega"}

    def __init__(self, shape, entries=(-1, 0, 1), member=None, symmetric=False):
        if shape == "symmetric-tensor":
            shape, symmetric = "tensor", True
        if shape not in SHAPES:
            raise ValidationError(f"unknown grid shape {shape!r}")
        entries = tuple(Fraction(e) for e in entries)
        if not entries:
            raise ValidationError("entry set must be non-empty")
        self.shape = shape
        self.member = member or self._DEFAULT_MEMBER[shape]
        self.entries = entries
        self.symmetric = symmetric


class SearchReport:
    __slots__ = ("hits", "total", "laws", "rows")

    def __init__(self, hits, total, laws, rows=None):
        self.hits = hits
        self.total = total
        self.laws = tuple(laws)
        self.rows = rows

    @property
    def all_pass(self):
        if self.rows is None:
            return bool(self.hits)
        return all(row["pass"] for row in self.rows)

    def __repr__(self):
        return f"SearchReport({len(self.hits)} hits / {self.total} candidates)"


def max_grid_cap(explicit=None):
    if explicit is not None:
        return explicit
    env = os.environ.get("PRELIE_FORGE_MAX_GRID")
    return int(env) if env else DEFAULT_CAP


def _free_positions(n, spec):
    if spec.shape == "tensor" and spec.symmetric:
        return [(i, j) for i in range(n) for j in range(i, n)]
    return [(i, j) for i in range(n) for j in range(n)]


def _build_member(n, spec, positions, values):
    mat = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), v in zip(positions, values):
        mat[i][j] = v
        if spec.symmetric and i != j:
            mat[j][i] = v
    if spec.shape == "operator":
        return LinearOperator.square(mat)
    if spec.shape == "form":
        return BilinearForm(n, mat)
    return TensorElement(n, mat)


def _attach(template, spec, member):
    if spec.shape == "operator":
        ops = dict(template.operators)
        ops[spec.member] = member
        return template.replace(operators=ops)
    if spec.shape == "form":
        forms = dict(template.forms)
        forms[spec.member] = member
        return template.replace(forms=forms)
    tensors = dict(template.tensors)
    tensors[spec.member] = member
    return template.replace(tensors=tensors)


def _passes(bundle, laws, pi=None):
    for law in laws:
        for _, _, value in iter_residual(law, bundle, pi=pi):
            if nonzero(value):
                return False
    return True


def grid_search(template, spec, laws, max_grid=None, workers=1, pi=None):
    """Enumerate the grid; hits are exactly the candidates passing all laws.

    Deterministic: row-major over free entries, entry-set order, and the
    report order is independent of the worker count.
    """
    laws = [normalize_law(law) for law in laws]
    try:
        numeric = template.to_numeric()
    except Exception as exc:
        raise SymbolicTemplateError(
            f"template still has unbound parameters ({exc})"
        ) from None
    n = numeric.dim
    if n is None:
        raise ValidationError("template carries no structure to search against")
    positions = _free_positions(n, spec)
    total = len(spec.entries) ** len(positions)
    cap = max_grid_cap(max_grid)
    if total > cap:
        raise GridTooLargeError(
            f"{total} candidates exceed the enumeration cap {cap}"
        )

    def candidate(values):
        return _attach(numeric, spec, _build_member(n, spec, positions, values))

    assignments = list(product(spec.entries, repeat=len(positions)))

    def evaluate_chunk(chunk):
        found = []
        for index, values in chunk:
            cand = candidate(values)
            if _passes(cand, laws, pi=pi):
                found.append((index, values, cand))
        return found

    if workers <= 1 or total <= 64:
        found = evaluate_chunk(list(enumerate(assignments)))
    else:
        indexed = list(enumerate(assignments))
        size = max(1, len(indexed) // (workers * 8))
        chunks = [indexed[i : i + size] for i in range(0, len(indexed), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(evaluate_chunk, chunks))
        found = [hit for part in parts for hit in part]
        found.sort(key=lambda hit: hit[0])

    hits = []
    for _, values, cand in found:
        exact = cand.to_exact(EMPTY_RING)
        for law in laws:
            verdict = check(law, exact, pi=pi)
            if not verdict.passed:
                raise ValidationError(
                    f"hit failed exact re-verification under {law}"
                )
        hits.append(cand)
    return SearchReport(hits=hits, total=total, laws=laws)


def verify_family(bundle, laws, pi=None):
    """Map each law to the list of non-zero residual Scalars (empty = pass).

    The vanishing locus of the returned scalars is where the family is
    valid; declared-nonzero assumptions never alter the computation.
    """
    out = {}
    for law in laws:
        law = normalize_law(law)
        out[law] = check(law, bundle, pi=pi).scalars()
    return out


def classify_dim2_prelie_fixtures():
    """Regression sweep: every catalog fixture against its asserted profile."""
    rows = []
    hits = []
    for name in sorted(CATALOG):
        spec = CATALOG[name]
        bundle = fixture(name)
        factors = verify_family(bundle, spec.profile)
        passed = all(not v for v in factors.values())
        rows.append(
            {
                "fixture": name,
                "profile": list(spec.profile),
                "pass": passed,
                "factors": {
                    law: [s.render() if isinstance(s, Scalar) else str(s) for s in vals]
                    for law, vals in factors.items()
                    if vals
                },
            }
        )
        if passed:
            hits.append(bundle)
    return SearchReport(hits=hits, total=len(rows), laws=(), rows=rows)
