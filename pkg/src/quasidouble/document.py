"""Canonical JSON serialization of quasi-Hopf algebras.

A document stores every structure map as sorted sparse records with exact
scalars written as strings, so saved files are byte-stable and diff-able.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .field import Field, FieldError
from .quasihopf import QuasiHopfAlgebra
from .tensor import LinearMap, NotInvertible, TensorAlgebra, TensorElement, TensorError

FORMAT_VERSION = 1


class ParseError(ValueError):
    pass


@dataclass
class AlgebraDocument:
    H: QuasiHopfAlgebra
    R: TensorElement | None = None
    notes: str = ""


def _tensor_dict(e: TensorElement) -> dict:
    return {"dims": list(e.dims), "entries": e.to_records()}


def _map_dict(m: LinearMap) -> dict:
    return {"source": list(m.source_dims), "target": list(m.target_dims),
            "entries": m.to_records()}


def to_dict(doc: AlgebraDocument) -> dict:
    H = doc.H
    out = {
        "format_version": FORMAT_VERSION,
        "field": H.field.spec(),
        "dim": H.dim,
        "basis_labels": list(H.basis_labels),
        "mult": _map_dict(H.mult),
        "unit": _tensor_dict(H.unit),
        "comult": _map_dict(H.comult),
        "counit": _map_dict(H.counit),
        "phi": _tensor_dict(H.phi),
        "phi_inv": _tensor_dict(H.phi_inv),
        "antipode": _map_dict(H.antipode),
        "alpha": _tensor_dict(H.alpha),
        "beta": _tensor_dict(H.beta),
    }
    if doc.R is not None:
        out["R"] = _tensor_dict(doc.R)
    if doc.notes:
        out["notes"] = doc.notes
    return out


def dumps(doc: AlgebraDocument) -> str:
    return json.dumps(to_dict(doc), sort_keys=True, indent=1) + "\n"


def _need(data: dict, key: str):
    if key not in data:
        raise ParseError(f"missing field {key!r}")
    return data[key]


def _read_tensor(field: Field, data, key: str, expect_degree=None) -> TensorElement:
    try:
        spec = _need(data, key)
        dims = tuple(int(d) for d in spec["dims"])
        if expect_degree is not None and len(dims) != expect_degree:
            raise ParseError(f"{key}: expected degree {expect_degree}, got {len(dims)}")
        return TensorElement.from_records(field, dims, spec["entries"])
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, TensorError, FieldError) as exc:
        raise ParseError(f"bad tensor {key!r}: {exc}") from exc


def _read_map(field: Field, data, key: str) -> LinearMap:
    try:
        spec = _need(data, key)
        return LinearMap.from_records(
            field, tuple(int(d) for d in spec["source"]),
            tuple(int(d) for d in spec["target"]), spec["entries"])
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, TensorError, FieldError) as exc:
        raise ParseError(f"bad map {key!r}: {exc}") from exc


def from_dict(data: dict) -> AlgebraDocument:
    if not isinstance(data, dict):
        raise ParseError("document root must be an object")
    version = _need(data, "format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    try:
        field = Field.from_spec(_need(data, "field"))
    except FieldError as exc:
        raise ParseError(f"bad field spec: {exc}") from exc
    try:
        dim = int(_need(data, "dim"))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad dim: {exc}") from exc
    labels = _need(data, "basis_labels")
    if not isinstance(labels, list) or len(labels) != dim:
        raise ParseError("basis_labels must list one label per basis element")

    mult = _read_map(field, data, "mult")
    unit = _read_tensor(field, data, "unit", 1)
    comult = _read_map(field, data, "comult")
    counit = _read_map(field, data, "counit")
    phi = _read_tensor(field, data, "phi", 3)
    antipode = _read_map(field, data, "antipode")
    alpha = _read_tensor(field, data, "alpha", 1)
    beta = _read_tensor(field, data, "beta", 1)

    if "phi_inv" in data:
        phi_inv = _read_tensor(field, data, "phi_inv", 3)
    else:
        ops = TensorAlgebra(field, dim, mult, unit)
        try:
            phi_inv = ops.invert_element(phi)
        except NotInvertible as exc:
            raise ParseError(f"phi has no inverse: {exc}") from exc

    try:
        H = QuasiHopfAlgebra(
            field, dim, tuple(labels), mult, unit, comult, counit, phi, phi_inv,
            antipode=antipode, alpha=alpha, beta=beta,
            notes=data.get("notes", ""))
    except (TensorError, ValueError) as exc:
        raise ParseError(f"inconsistent structure data: {exc}") from exc

    R = _read_tensor(field, data, "R", 2) if "R" in data else None
    return AlgebraDocument(H, R, data.get("notes", ""))


def loads(text: str) -> AlgebraDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_dict(data)


def load(path) -> AlgebraDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def save(doc: AlgebraDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
