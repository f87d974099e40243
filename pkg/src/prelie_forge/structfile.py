"""StructureFile JSON format and report assembly.

Indices in files are 1-based (basis elements e_1..e_n); the in-memory
representation is 0-based.  Expression strings are kept verbatim on the
raw document, so loading a file and writing it back preserves them
bit-exactly; freshly rendered members use the canonical renderer.
"""

import json
from fractions import Fraction

from .errors import ValidationError
from .scalars import ParamRing, Scalar
from .structures import (
    AlgebraStructure,
    BilinearForm,
    Bundle,
    CoalgebraStructure,
    Corepresentation,
    LinearOperator,
    Representation,
    TensorElement,
)

_SECTION_ORDER = (
    "dim", "params", "basis", "assumptions", "mul", "comul", "comul2",
    "operators", "forms", "tensors", "reps", "coreps",
)


def _render(value):
    if isinstance(value, Scalar):
        return value.render()
    return str(Fraction(value))


def _parse_matrix(ring, rows, what):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValidationError(f"{what} must be a list of rows")
    try:
        return [[ring.parse(str(cell)) for cell in row] for row in rows]
    except Exception as exc:
        raise ValidationError(f"{what}: {exc}") from exc


def _parse_cube(ring, dim, triples, what):
    cube = [
        [[ring.zero() for _ in range(dim)] for _ in range(dim)]
        for _ in range(dim)
    ]
    for pos, item in enumerate(triples):
        if not isinstance(item, list) or len(item) != 4:
            raise ValidationError(f"{what}[{pos}] must be [i, j, k, expr]")
        i, j, k, expr = item
        for label, idx in (("i", i), ("j", j), ("k", k)):
            if not isinstance(idx, int) or not 1 <= idx <= dim:
                raise ValidationError(
                    f"{what}[{pos}]: index {label}={idx!r} out of range 1..{dim}"
                )
        try:
            cube[item[0] - 1][item[1] - 1][item[2] - 1] = ring.parse(str(expr))
        except Exception as exc:
            raise ValidationError(f"{what}[{pos}]: {exc}") from exc
    return cube


def doc_to_bundle(doc):
    """Build a Bundle from a parsed StructureFile document."""
    if "dim" not in doc or not isinstance(doc["dim"], int) or doc["dim"] < 0:
        raise ValidationError("field 'dim' must be a non-negative integer")
    dim = doc["dim"]
    params = doc.get("params", [])
    ring = ParamRing(params)
    basis = doc.get("basis")
    if basis is not None and len(basis) != dim:
        raise ValidationError("field 'basis' must name exactly dim elements")

    alg = coalg = coalg2 = None
    if "mul" in doc:
        alg = AlgebraStructure(dim, _parse_cube(ring, dim, doc["mul"], "mul"))
    if "comul" in doc:
        coalg = CoalgebraStructure(dim, _parse_cube(ring, dim, doc["comul"], "comul"))
    if "comul2" in doc:
        coalg2 = CoalgebraStructure(
            dim, _parse_cube(ring, dim, doc["comul2"], "comul2")
        )

    operators = {}
    for name, rows in doc.get("operators", {}).items():
        mat = _parse_matrix(ring, rows, f"operators.{name}")
        dim_in = len(mat)
        dim_out = len(mat[0]) if mat else 0
        if any(len(row) != dim_out for row in mat):
            raise ValidationError(f"operators.{name}: ragged matrix")
        operators[name] = LinearOperator(dim_in, dim_out, mat)

    forms = {
        name: BilinearForm(dim, _parse_matrix(ring, rows, f"forms.{name}"))
        for name, rows in doc.get("forms", {}).items()
    }
    tensors = {
        name: TensorElement(dim, _parse_matrix(ring, rows, f"tensors.{name}"))
        for name, rows in doc.get("tensors", {}).items()
    }

    reps = {}
    for name, body in doc.get("reps", {}).items():
        m = body.get("dim")
        if not isinstance(m, int) or m < 0:
            raise ValidationError(f"reps.{name}.dim must be a non-negative integer")
        rho = [
            _parse_matrix(ring, mat, f"reps.{name}.rho[{i}]")
            for i, mat in enumerate(body.get("rho", []))
        ]
        phi = [
            _parse_matrix(ring, mat, f"reps.{name}.phi[{i}]")
            for i, mat in enumerate(body.get("phi", []))
        ]
        reps[name] = Representation(dim, m, rho, phi)

    coreps = {}
    for name, body in doc.get("coreps", {}).items():
        m = body.get("dim")
        if not isinstance(m, int) or m < 0:
            raise ValidationError(f"coreps.{name}.dim must be a non-negative integer")
        xi = _unflatten_corep(
            _parse_matrix(ring, body.get("xi", []), f"coreps.{name}.xi"), dim, m,
            f"coreps.{name}.xi",
        )
        eta = _unflatten_corep(
            _parse_matrix(ring, body.get("eta", []), f"coreps.{name}.eta"), dim, m,
            f"coreps.{name}.eta",
        )
        coreps[name] = Corepresentation(dim, m, xi, eta)

    assumptions = []
    for pos, expr in enumerate(doc.get("assumptions", [])):
        try:
            assumptions.append(ring.parse(str(expr)))
        except Exception as exc:
            raise ValidationError(f"assumptions[{pos}]: {exc}") from exc

    return Bundle(
        ring=ring, alg=alg, coalg=coalg, coalg2=coalg2, operators=operators,
        forms=forms, tensors=tensors, reps=reps, coreps=coreps,
        assumptions=assumptions,
    )


def _unflatten_corep(mat, n, m, what):
    """m x (n*m) matrix -> [a][i][b], column index (i-1)*m + b."""
    if len(mat) != m or any(len(row) != n * m for row in mat):
        raise ValidationError(f"{what} must be {m}x{n * m}")
    return [
        [[mat[a][i * m + b] for b in range(m)] for i in range(n)]
        for a in range(m)
    ]


def _flatten_corep(fam, n, m):
    return [
        [_render(fam[a][i][b]) for i in range(n) for b in range(m)]
        for a in range(m)
    ]


def _cube_to_triples(cube, dim):
    out = []
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                value = cube[i][j][k]
                if isinstance(value, Scalar):
                    if value.is_zero():
                        continue
                elif value == 0:
                    continue
                out.append([i + 1, j + 1, k + 1, _render(value)])
    return out


def bundle_to_doc(bundle, basis=None):
    """Render a Bundle into a StructureFile document."""
    doc = {"dim": bundle.dim if bundle.dim is not None else 0}
    doc["params"] = list(bundle.ring.params)
    if basis:
        doc["basis"] = list(basis)
    if bundle.assumptions:
        doc["assumptions"] = [_render(v) for v in bundle.assumptions]
    if bundle.alg is not None:
        doc["mul"] = _cube_to_triples(bundle.alg.mul, bundle.alg.dim)
    if bundle.coalg is not None:
        # comul's leading index is k, so the triples come out as [k, i, j]
        doc["comul"] = _cube_to_triples(bundle.coalg.comul, bundle.coalg.dim)
    if bundle.coalg2 is not None:
        doc["comul2"] = _cube_to_triples(bundle.coalg2.comul, bundle.coalg2.dim)
    if bundle.operators:
        doc["operators"] = {
            name: [[_render(v) for v in row] for row in op.mat]
            for name, op in sorted(bundle.operators.items())
        }
    if bundle.forms:
        doc["forms"] = {
            name: [[_render(v) for v in row] for row in form.mat]
            for name, form in sorted(bundle.forms.items())
        }
    if bundle.tensors:
        doc["tensors"] = {
            name: [[_render(v) for v in row] for row in tensor.mat]
            for name, tensor in sorted(bundle.tensors.items())
        }
    if bundle.reps:
        doc["reps"] = {
            name: {
                "dim": rep.rep_dim,
                "rho": [[[_render(v) for v in row] for row in mat] for mat in rep.rho],
                "phi": [[[_render(v) for v in row] for row in mat] for mat in rep.phi],
            }
            for name, rep in sorted(bundle.reps.items())
        }
    if bundle.coreps:
        doc["coreps"] = {
            name: {
                "dim": cr.corep_dim,
                "xi": _flatten_corep(cr.xi, cr.coalg_dim, cr.corep_dim),
                "eta": _flatten_corep(cr.eta, cr.coalg_dim, cr.corep_dim),
            }
            for name, cr in sorted(bundle.coreps.items())
        }
    return doc


def _ordered(doc):
    out = {key: doc[key] for key in _SECTION_ORDER if key in doc}
    for key in doc:
        if key not in out:
            out[key] = doc[key]
    return out


def load_document(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise ValidationError(f"{path}: top level must be an object")
    return doc


def save_document(doc, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(_ordered(doc), fh, indent=2)
        fh.write("\n")


def dumps_document(doc):
    return json.dumps(_ordered(doc), indent=2) + "\n"
