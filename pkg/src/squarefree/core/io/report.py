# -----------------------------------------------------------------------------
# /*
#  * Copyright (C) 2025 Squarefree
#  *
#  * This program is free software; you can redistribute it and/or modify
#  * it under the terms of the GNU General Public License as published by
#  * the Free Software Foundation; Version 2.
#  *
#  * This program is distributed in the hope that it will be useful,
#  * but WITHOUT ANY WARRANTY; without even the implied warranty of
#  * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#  * GNU General Public License for more details.
#  *
#  * You should have received a copy of the GNU General Public License
#  * along with this program; if not, write to the Free Software Foundation.
#  */
# -----------------------------------------------------------------------------

"""InvariantReport: the text and JSON views of everything a command computed.

Sections are plain lists and dicts built by the pipeline; ``to_json`` is
byte-stable for identical inputs (sorted keys, rationals as ``p/q``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from squarefree.core.algebra.exponents import ExponentVector, IndexSet
from squarefree.core.ui.theme import themed

_SECTIONS = (
    "grading",
    "ideals",
    "basis",
    "reduction",
    "annihilator",
    "dimension",
    "betti",
    "local_cohomology",
    "depth",
    "verification",
)


def jsonable(value: Any) -> Any:
    """Recursively turn algebra values into JSON-ready ones."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, ExponentVector):
        return list(value.coords)
    if isinstance(value, IndexSet):
        return list(value.members())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


@dataclass
class InvariantReport:
    source: str
    input: dict[str, Any]
    grading: dict[str, Any] | None = None
    ideals: list[dict[str, Any]] | None = None
    basis: dict[str, Any] | None = None
    reduction: dict[str, Any] | None = None
    annihilator: dict[str, Any] | None = None
    dimension: int | None = None
    betti: list[dict[str, Any]] | None = None
    local_cohomology: list[dict[str, Any]] | None = None
    depth: dict[str, Any] | None = None
    verification: dict[str, Any] | None = None
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"source": self.source, "input": self.input}
        for name in _SECTIONS:
            section = getattr(self, name)
            if section is not None:
                data[name] = section
        if self.warnings:
            data["warnings"] = list(self.warnings)
        return jsonable(data)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        data = self.to_dict()
        lines = [
            themed("primary", f"{data['source']}")
            + themed(
                "muted",
                f"  n={data['input']['n']} s={data['input']['s']} l={data['input']['l']}",
            )
        ]
        for warning in data.get("warnings", []):
            lines.append(f"{themed('warn', 'Warning:')} {warning}")
        for name in _SECTIONS:
            if name in data:
                lines.append("")
                lines.append(themed("section", name.replace("_", " ").capitalize()))
                lines.extend(_TEXT_RENDERERS[name](data[name]))
        return "\n".join(lines)


def _pair(label: str, value: Any) -> str:
    return f"  {themed('label', label)}: {themed('value', str(value))}"


def _degree(coords: list[int]) -> str:
    return themed("degree", "(" + ",".join(str(c) for c in coords) + ")")


def _face(members: list[int]) -> str:
    return "{" + ",".join(str(k) for k in members) + "}"


def _grading_text(section: dict[str, Any]) -> list[str]:
    lines = [
        _pair("multigraded", section["multigraded"]),
        _pair("squarefree solution", section["squarefree"]),
    ]
    if "uniform_rank" in section:
        lines.append(_pair("uniform rank", section["uniform_rank"]))
    if "minimal" in section:
        lines.append(_pair("minimal presentation", section["minimal"]))
    if section.get("witness"):
        lines.append(_pair("witness", section["witness"]))
    for j, gamma in enumerate(section.get("gammas", []), start=1):
        lines.append(f"  gamma_{j} = {_degree(gamma)}")
    for i, beta in enumerate(section.get("betas", []), start=1):
        lines.append(f"  beta_{i} = {_degree(beta)}")
    if section.get("general_solution"):
        lines.append(f"  {themed('label', 'general solution')}:")
        lines.extend(f"    {line}" for line in section["general_solution"])
    return lines


def _ideals_text(section: list[dict[str, Any]]) -> list[str]:
    lines = []
    for item in section:
        generators = ", ".join(item["generators"]) or "0"
        lines.append(f"  I_{item['row']} = ({generators})")
        facets = " ".join(_face(f) for f in item["facets"]) or "void"
        lines.append(themed("muted", f"    facets: {facets}"))
    return lines


def _basis_text(section: dict[str, Any]) -> list[str]:
    lines = [_pair("degree", _degree(section["degree"])), _pair("dim", section["dim"])]
    lines.extend(f"    {element}" for element in section["elements"])
    return lines


def _reduction_text(section: dict[str, Any]) -> list[str]:
    lines = [
        _pair("element", section["element"]),
        _pair("standard", section["standard"]),
    ]
    if not section["standard"]:
        terms = section["terms"]
        if not terms:
            lines.append(f"    = {themed('value', '0')}")
        for term in terms:
            lines.append(f"    r_{term['row']} = {term['coefficient']}  ({term['element']})")
    return lines


def _annihilator_text(section: dict[str, Any]) -> list[str]:
    return [
        _pair("generators", ", ".join(section["generators"]) or "0"),
        _pair("method", section["method"]),
    ]


def _dimension_text(section: int) -> list[str]:
    return [_pair("dim M", section)]


def _betti_text(section: list[dict[str, Any]]) -> list[str]:
    if not section:
        return [themed("muted", "  all Betti numbers vanish")]
    return [
        f"  b_{item['i']},{_degree(item['degree'])} = {themed('nonzero', str(item['value']))}"
        for item in section
    ]


def _local_cohomology_text(section: list[dict[str, Any]]) -> list[str]:
    lines = []
    for item in section:
        dims = item["dims"]
        shown = ", ".join(
            themed("nonzero", f"H^{i}={d}") if d else f"H^{i}=0" for i, d in enumerate(dims)
        )
        head = (
            _degree(item["degree"])
            if "degree" in item
            else f"+{_face(item['pattern_plus'])} -{_face(item['pattern_minus'])}"
        )
        suffix = "" if item.get("stable", True) else themed("warn", "  (unstable)")
        lines.append(f"  {head}: {shown}{suffix}")
    return lines


def _depth_text(section: dict[str, Any]) -> list[str]:
    return [_pair(key.replace("_", " "), value) for key, value in sorted(section.items())]


def _verification_text(section: dict[str, Any]) -> list[str]:
    mismatches = section.get("mismatches", [])
    status = themed("success", "passed") if not mismatches else themed("error", "FAILED")
    lines = [_pair("checked", section.get("checked", 0)), f"  {status}"]
    lines.extend(f"    {themed('error', m)}" for m in mismatches)
    disagreements = section.get("subscript_disagreements", [])
    if disagreements:
        lines.append(f"  {themed('label', 'subscript disagreements')}: {len(disagreements)}")
        lines.extend(themed("muted", f"    {d}") for d in disagreements)
    return lines


_TEXT_RENDERERS = {
    "grading": _grading_text,
    "ideals": _ideals_text,
    "basis": _basis_text,
    "reduction": _reduction_text,
    "annihilator": _annihilator_text,
    "dimension": _dimension_text,
    "betti": _betti_text,
    "local_cohomology": _local_cohomology_text,
    "depth": _depth_text,
    "verification": _verification_text,
}
