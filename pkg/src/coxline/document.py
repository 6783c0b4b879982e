"""JSON design documents.

Rationals are written as ``"p/q"`` strings (``"3"`` for integers) so nothing
is lost to floating point. Loading rebuilds the code from ``w1`` and the root
permutations and checks every stored matrix against the rebuild.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import __version__
from .analysis import PerformanceProfile, alphas
from .codec import codec_bundle
from .exactla import RatMatrix
from .linecode import InvariantViolation, LineCode, design_code, verify_code

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """Malformed or unsupported design document."""


def _mat(m: RatMatrix) -> list[list[str]]:
    return [[str(x) for x in r] for r in m]


def _parse_mat(obj: Any, name: str) -> RatMatrix:
    try:
        return RatMatrix([[Fraction(str(x)) for x in r] for r in obj])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad matrix {name!r}: {exc}") from exc


def code_to_document(
    code: LineCode, profile: PerformanceProfile | None = None, provenance: dict | None = None
) -> dict:
    profile = profile or alphas(code)
    return {
        "schema_version": SCHEMA_VERSION,
        "b": code.b,
        "w1": list(code.w1.components),
        "root_permutations": [list(r) for r in code.rootset.roots],
        "generators": [_mat(g) for g in code.generators],
        "W": _mat(code.W),
        "M": _mat(code.M),
        "B": _mat(code.B),
        "D": _mat(code.D),
        "K": _mat(code.K),
        "profile": {
            "alphas": list(profile.alphas),
            "alpha_sq": [str(a) for a in profile.alpha_sq],
            "alpha_min": profile.alpha_min,
            "nu": profile.nu,
            "d_min_sq": str(profile.d_min_sq),
            "energy": str(profile.energy_per_tuple),
            "eye_row": [str(x) for x in profile.eye_row],
        },
        "provenance": {"tool": "coxline", "version": __version__, **(provenance or {})},
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


REQUIRED = ("schema_version", "b", "w1", "root_permutations", "generators", "W", "M", "B", "D", "K")


def load_document(doc: dict | str) -> LineCode:
    """Parse and fully re-verify a design document."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    missing = [k for k in REQUIRED if k not in doc]
    if missing:
        raise DocumentError(f"missing keys: {', '.join(missing)}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {doc['schema_version']!r}")
    try:
        w1 = [int(x) for x in doc["w1"]]
        roots = [[int(x) for x in r] for r in doc["root_permutations"]]
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad w1/roots: {exc}") from exc
    stored = {k: _parse_mat(doc[k], k) for k in ("W", "M", "B", "D", "K")}
    gens = [_parse_mat(g, "generators") for g in doc["generators"]]
    try:
        code = design_code(w1, roots=roots)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    if int(doc["b"]) != code.b:
        raise DocumentError(f"b={doc['b']} does not match {code.b} roots")
    for name in ("W", "M", "B", "D", "K"):
        if getattr(code, name) != stored[name]:
            raise InvariantViolation(f"stored {name} differs from the rebuilt code")
    if tuple(gens) != code.generators:
        raise InvariantViolation("stored generators differ from the rebuilt code")
    rederived = codec_bundle(stored["W"], stored["M"])
    if (rederived.B, rederived.D, rederived.K) != (stored["B"], stored["D"], stored["K"]):
        raise InvariantViolation("B, D, K do not follow from stored W and M")
    verify_code(code)
    return code
