"""Reading and writing the quiver JSON file format.

    {"vertices": ["1", "2"], "arrows": [["1", "2"], ["1", "2"]],
     "dim": {"1": 1, "2": 2}, "framing": {"1": 0, "2": 1},
     "lambda": {"1": "1/2", "2": "-1/4"}, "theta": {...}}

``framing``, ``lambda`` and ``theta`` are optional and default to zero;
vertices missing from ``dim`` have dimension zero.  Rationals are given as
``"p/q"`` strings or integers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from .errors import ValidationError
from .quiver import ParamPair, Quiver, Vector, build_quiver, dot, frame


@dataclass(frozen=True)
class Problem:
    quiver: Quiver
    dim: Vector
    framing: Vector | None
    params: ParamPair

    @property
    def framed(self) -> bool:
        return self.framing is not None

    def effective(self) -> tuple[Quiver, Vector, ParamPair]:
        """The unframed data the computations act on (the framed quiver when a framing is given)."""
        if self.framing is None:
            return self.quiver, self.dim, self.params
        return frame(self.quiver, self.dim, self.framing, self.params)


def _integer(value: Any, what: str) -> int:
    if isinstance(value, bool):
        raise ValidationError(f"{what}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("-").isdigit():
        return int(value)
    raise ValidationError(f"{what}: expected an integer, got {value!r}")


def parse_rational(value: Any, what: str = "value") -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValidationError(f"{what}: expected an integer or a 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"{what}: malformed rational {value!r}") from None


def _per_vertex(raw: Any, labels: tuple[str, ...], what: str, convert) -> tuple:
    if raw is None:
        raw = {}
    if not isinstance(raw, Mapping):
        raise ValidationError(f"{what} must be an object keyed by vertex label")
    unknown = set(map(str, raw)) - set(labels)
    if unknown:
        raise ValidationError(f"{what} mentions unknown vertices {sorted(unknown)}")
    raw = {str(k): x for k, x in raw.items()}
    return tuple(convert(raw.get(lab, 0), f"{what}[{lab}]") for lab in labels)


def problem_from_dict(doc: Mapping[str, Any]) -> Problem:
    if not isinstance(doc, Mapping):
        raise ValidationError("top level of a quiver file must be an object")
    if "vertices" not in doc or "dim" not in doc:
        raise ValidationError("quiver file needs 'vertices' and 'dim'")
    arrows = doc.get("arrows", [])
    if not isinstance(doc["vertices"], list) or not isinstance(arrows, list):
        raise ValidationError("'vertices' and 'arrows' must be lists")
    for arrow in arrows:
        if not isinstance(arrow, (list, tuple)) or len(arrow) != 2:
            raise ValidationError(f"arrow {arrow!r} must be a [tail, head] pair")
    q = build_quiver([str(x) for x in doc["vertices"]], [(str(a), str(b)) for a, b in arrows])

    def nonneg(value, what):
        x = _integer(value, what)
        if x < 0:
            raise ValidationError(f"{what} must be nonnegative")
        return x

    dim = _per_vertex(doc["dim"], q.labels, "dim", nonneg)
    framing = _per_vertex(doc.get("framing"), q.labels, "framing", nonneg)
    lam = _per_vertex(doc.get("lambda"), q.labels, "lambda", parse_rational)
    theta = _per_vertex(doc.get("theta"), q.labels, "theta", parse_rational)
    params = ParamPair(lam, theta)
    if any(framing):
        return Problem(q, dim, framing, params)
    if dot(lam, dim) != 0:
        raise ValidationError(f"lambda . dim = {dot(lam, dim)}; unframed parameters must be annihilated by dim")
    if dot(theta, dim) != 0:
        raise ValidationError(f"theta . dim = {dot(theta, dim)}; unframed parameters must be annihilated by dim")
    return Problem(q, dim, None, params)


def parse_input(path: str | Path) -> Problem:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
    return problem_from_dict(doc)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def quiver_to_dict(q: Quiver, dim, params: ParamPair | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "vertices": list(q.labels),
        "arrows": [[q.labels[i], q.labels[j]] for i, j in q.arrows()],
        "dim": dict(zip(q.labels, dim)),
    }
    if params is not None:
        doc["lambda"] = {lab: format_rational(x) for lab, x in zip(q.labels, params.lam)}
        doc["theta"] = {lab: format_rational(x) for lab, x in zip(q.labels, params.theta)}
    return doc
