"""JSON problem files.

Layout::

    {
      "variables": ["A", "B"],
      "components": [{"name": "ax1", "cnf": [["-A", "-B"]]}, ...],
      "background": [["A", "B"]],
      "positive": [],
      "negative": [[["-A"]]],
      "explicit_conflicts": [["ax1", "ax2"]],   # optional
      "probabilities": {"ax1": 0.1, ...}          # optional
    }

With ``explicit_conflicts`` the components need only a name.  Dumping a
loaded file reproduces it byte for byte.
"""
from __future__ import annotations

import json
from pathlib import Path

from .model import DiagnosisError, DomainError, Dpi, format_literal


class DpiFormatError(DiagnosisError, ValueError):
    """A problem file could not be parsed or validated."""


def _clauses_out(clauses, variables) -> list:
    return [[format_literal(l, variables) for l in clause] for clause in clauses]


def dpi_to_dict(dpi: Dpi) -> dict:
    doc = {"variables": list(dpi.variables)}
    if dpi.is_explicit:
        doc["components"] = [{"name": n} for n in dpi.components]
    else:
        doc["components"] = [{"name": n, "cnf": _clauses_out(s, dpi.variables)}
                             for n, s in zip(dpi.components, dpi.sentences)]
    doc["background"] = _clauses_out(dpi.background, dpi.variables)
    doc["positive"] = _clauses_out(dpi.positive, dpi.variables)
    doc["negative"] = [_clauses_out(s, dpi.variables) for s in dpi.negative]
    if dpi.is_explicit:
        doc["explicit_conflicts"] = [dpi.names(c) for c in dpi.conflicts]
    if dpi.probabilities is not None:
        doc["probabilities"] = dict(zip(dpi.components, dpi.probabilities))
    return doc


def dumps(dpi: Dpi) -> str:
    return json.dumps(dpi_to_dict(dpi), indent=2, ensure_ascii=False) + "\n"


def dump(dpi: Dpi, path):
    Path(path).write_text(dumps(dpi), encoding="utf-8")


def dpi_from_dict(doc) -> Dpi:
    if not isinstance(doc, dict):
        raise DpiFormatError("top level must be a JSON object")
    try:
        components = doc.get("components", [])
        names = [c if isinstance(c, str) else c["name"] for c in components]
        probabilities = doc.get("probabilities")
        if probabilities is not None:
            missing = [n for n in names if n not in probabilities]
            if missing:
                raise DpiFormatError(f"probabilities missing for {missing}")
            extra = sorted(set(probabilities) - set(names))
            if extra:
                raise DpiFormatError(f"probabilities for unknown components {extra}")
        if "explicit_conflicts" in doc and doc["explicit_conflicts"] is not None:
            if any(isinstance(c, dict) and c.get("cnf") for c in components):
                raise DpiFormatError("give either component cnf or explicit_conflicts, not both")
            return Dpi.from_conflicts(names, doc["explicit_conflicts"], probabilities)
        if any(isinstance(c, str) or "cnf" not in c for c in components):
            raise DpiFormatError("every component needs a cnf sentence")
        return Dpi.from_cnf(doc.get("variables", []),
                            [(c["name"], c["cnf"]) for c in components],
                            background=doc.get("background", []),
                            positive=doc.get("positive", []),
                            negative=doc.get("negative", []),
                            probabilities=probabilities)
    except DpiFormatError:
        raise
    except (KeyError, TypeError, AttributeError) as exc:
        raise DpiFormatError(f"malformed problem file: {exc!r}") from None
    except DomainError as exc:
        raise DpiFormatError(str(exc)) from None


def loads(text: str, source: str = "<string>") -> Dpi:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DpiFormatError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return dpi_from_dict(doc)
    except DpiFormatError as exc:
        raise DpiFormatError(f"{source}: {exc}") from None


def load(path) -> Dpi:
    path = Path(path)
    return loads(path.read_text(encoding="utf-8"), str(path))
