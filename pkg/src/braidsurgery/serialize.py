"""JSON documents for diagrams, presentations and reports."""

from __future__ import annotations

from typing import Any

from .braid import BraidWord
from .closure import ClosureInfo
from .garside import NormalForm
from .pipeline import BraidSurgeryDiagram, TransformReport
from .surgery import HomologyInvariants, RationalCoeff, SurgeryPresentation, normalize_coeff, parse_coeff


def coeff_to_json(c: RationalCoeff) -> dict[str, int]:
    return {"p": c.p, "q": c.q}


def coeff_from_json(obj: Any) -> RationalCoeff:
    if isinstance(obj, str):
        return parse_coeff(obj)
    if isinstance(obj, int):
        return normalize_coeff(obj, 1)
    return normalize_coeff(int(obj["p"]), int(obj["q"]))


def word_to_json(w: BraidWord) -> dict[str, Any]:
    return {"strands": w.strands, "word": list(w.letters)}


def word_from_json(obj: dict[str, Any]) -> BraidWord:
    word = obj["word"]
    if isinstance(word, str):
        word = word.replace(",", " ").split()
    return BraidWord(int(obj["strands"]), tuple(int(e) for e in word))


def diagram_to_json(d: BraidSurgeryDiagram) -> dict[str, Any]:
    return {
        **word_to_json(d.word),
        "coefficients": [coeff_to_json(c) for c in d.coeffs],
        "axis": coeff_to_json(d.axis) if d.axis is not None else None,
    }


def diagram_from_json(obj: dict[str, Any]) -> BraidSurgeryDiagram:
    axis = obj.get("axis")
    return BraidSurgeryDiagram(
        word_from_json(obj),
        tuple(coeff_from_json(c) for c in obj["coefficients"]),
        coeff_from_json(axis) if axis is not None else None,
    )


def presentation_to_json(p: SurgeryPresentation) -> dict[str, Any]:
    return {
        "m": p.m,
        "linking": [list(r) for r in p.linking],
        "coefficients": [coeff_to_json(c) for c in p.coeffs],
        "unknotted": list(p.unknotted),
    }


def presentation_from_json(obj: dict[str, Any]) -> SurgeryPresentation:
    coeffs = tuple(coeff_from_json(c) for c in obj["coefficients"])
    m = int(obj.get("m", len(coeffs)))
    if m != len(coeffs):
        raise ValueError(f"m = {m} but {len(coeffs)} coefficients given")
    unknotted = obj.get("unknotted", [False] * m)
    return SurgeryPresentation(tuple(tuple(r) for r in obj["linking"]), coeffs, tuple(unknotted))


def closure_to_json(info: ClosureInfo) -> dict[str, Any]:
    return {
        "component_count": info.component_count,
        "strand_to_component": list(info.strand_to_component),
        "strand_counts": list(info.strand_counts),
        "linking": [list(r) for r in info.linking],
    }


def normal_form_to_json(nf: NormalForm) -> dict[str, Any]:
    return {"infimum": nf.infimum, "factors": [list(f.word.letters) for f in nf.factors]}


def homology_to_json(h: HomologyInvariants) -> dict[str, Any]:
    return {"torsion": list(h.torsion), "free_rank": h.free_rank}


def report_to_json(r: TransformReport) -> dict[str, Any]:
    return {
        "n_used": r.n_used,
        "mode": r.mode,
        "input": diagram_to_json(r.input),
        "output": diagram_to_json(r.output),
        "h1_before": homology_to_json(r.h1_before),
        "h1_after": homology_to_json(r.h1_after),
        "checks": dict(r.checks),
        "passed": r.passed,
    }
