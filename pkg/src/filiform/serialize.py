"""Canonical document shapes: JSON, plain text, and CAS exports.

Every emitter is deterministic; identical inputs give byte-identical
output, and the JSON system document survives a parse/re-serialize trip
unchanged.  Rationals travel as strings to keep floats out of the files.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .lie import LieElement, LieStructure
from .polynomials import TOP, DeformPolynomial, var_cas, var_key, var_text
from .systems import Equation, EquationSystem


def canonical_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def fraction_str(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _variable_json(v):
    return "x" if v == TOP else {"j": v[0], "s": v[1]}


def _variable_from_json(item):
    if item == "x":
        return TOP
    return (int(item["j"]), int(item["s"]))


def _monomials_json(poly: DeformPolynomial) -> list:
    out = []
    for mono, coeff in poly.terms:
        packed = []
        pos = 0
        while pos < len(mono):
            run = pos
            while run < len(mono) and mono[run] == mono[pos]:
                run += 1
            v = mono[pos]
            packed.append(["x", run - pos] if v == TOP else [v[0], v[1], run - pos])
            pos = run
        out.append({"coeff": str(coeff), "vars": packed})
    return out


def _monomials_from_json(items) -> DeformPolynomial:
    terms = []
    for item in items:
        mono = []
        for packed in item["vars"]:
            if packed[0] == "x":
                mono.extend([TOP] * int(packed[1]))
            else:
                mono.extend([(int(packed[0]), int(packed[1]))] * int(packed[2]))
        terms.append((tuple(mono), int(item["coeff"])))
    return DeformPolynomial(terms)


def system_doc(system: EquationSystem) -> dict:
    doc = {
        "kind": system.kind,
        "x_mode": system.x_mode,
        "variables": [_variable_json(v) for v in system.variables],
        "equations": [{"label": list(eq.label),
                       "tilde": eq.tilde,
                       "monomials": _monomials_json(eq.poly)}
                      for eq in system.equations],
    }
    if system.kind == "truncated":
        doc["total_max"] = system.size
    else:
        doc["n"] = system.size
    return doc


def parse_system_doc(doc) -> EquationSystem:
    kind = doc["kind"]
    size = int(doc["total_max"] if kind == "truncated" else doc["n"])
    variables = tuple(_variable_from_json(v) for v in doc["variables"])
    equations = tuple(Equation(tuple(int(c) for c in item["label"]),
                               _monomials_from_json(item["monomials"]),
                               bool(item["tilde"]))
                      for item in doc["equations"])
    return EquationSystem(kind, size, doc["x_mode"], variables, equations)


def _equation_name(eq: Equation) -> str:
    j, q, r = eq.label
    head = "F~" if eq.tilde else "F"
    return f"{head}_{{{j},{q},{r}}}"


def system_text(system: EquationSystem) -> str:
    lines = [f"# {system.system_id}: {len(system.equations)} equations, "
             f"{len(system.variables)} variables"]
    lines.extend(f"{_equation_name(eq)} = {eq.poly.text()}" for eq in system.equations)
    return "\n".join(lines) + "\n"


def system_cas(system: EquationSystem) -> str:
    names = ", ".join(var_cas(v) for v in sorted(system.variables, key=var_key))
    lines = [f"# ring QQ[{names}]"]
    lines.extend(eq.poly.cas() for eq in system.equations)
    return "\n".join(lines) + "\n"


def _element_json(elem: LieElement) -> list:
    out = []
    for index, coeff in elem.terms:
        coeff = Fraction(coeff)
        out.append({"index": index,
                    "numerator": coeff.numerator,
                    "denominator": coeff.denominator})
    return out


def fixture_doc(structure: LieStructure) -> dict:
    return {
        "name": structure.name,
        "dimension": structure.dim,
        "relations": [{"i": i, "j": j, "value": _element_json(value)}
                      for i, j, value in structure.relations()],
    }


def assignment_doc(assignment) -> dict:
    entries = []
    top = None
    for v in sorted(assignment, key=var_key):
        if v == TOP:
            top = fraction_str(assignment[v])
        else:
            entries.append({"j": v[0], "s": v[1], "value": fraction_str(assignment[v])})
    doc = {"entries": entries}
    if top is not None:
        doc["x"] = top
    return doc


def parse_assignment(doc) -> dict:
    """Assignment file body -> variable map with exact rational values."""
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ValueError("assignment file must be an object with an 'entries' list")
    out = {}
    for item in doc["entries"]:
        try:
            j, s = int(item["j"]), int(item["s"])
            value = Fraction(str(item["value"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad assignment entry {item!r}: {exc}") from None
        if j < 2 or s < 0:
            raise ValueError(f"entry ({j},{s}) is not a valid variable")
        out[(j, s)] = value
    if "x" in doc:
        try:
            out[TOP] = Fraction(str(doc["x"]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad marker value {doc['x']!r}: {exc}") from None
    return out


def report_doc(system_id: str, assignment, residuals, jacobi) -> dict:
    verified = all(v == 0 for _, v in residuals) and not jacobi
    return {
        "system-id": system_id,
        "assignment": assignment_doc(assignment),
        "residuals": [{"label": list(label), "value": fraction_str(value)}
                      for label, value in residuals],
        "jacobi": [{"triple": list(triple), "defect": _element_json(defect)}
                   for triple, defect in jacobi],
        "verdict": "verified" if verified else "failed",
    }
