"""Local slice quivers attached to representation types.

A semisimple point of type ``tau = (k_1, v_1; ...; k_r, v_r)`` has a local
model given by a quiver with one vertex per summand, ``p(v_t)`` loops at
vertex ``t``, ``-v_t . C_Q v_u`` arrows between distinct ``t`` and ``u``,
and dimension ``k_t`` at vertex ``t``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InadmissibleTypeError, ValidationError
from .quiver import ParamPair, Quiver, Vector, cartan_pairing, check_dim, dot, p_fn

RepType = list[tuple[int, Vector]]


@dataclass(frozen=True)
class SliceResult:
    slice_quiver: Quiver
    slice_dim: Vector
    provenance: dict[int, Vector] = field(default_factory=dict)


def parse_rep_type(text: str) -> RepType:
    """Parse ``"1:(1,1);1:(0,1)"`` into ``[(1, (1, 1)), (1, (0, 1))]``."""
    tau = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        m = re.fullmatch(r"(\d+)\s*:\s*\(([\d\s,]*)\)", chunk)
        if m is None:
            raise ValidationError(f"cannot parse representation type entry {chunk!r}")
        parts = [x.strip() for x in m.group(2).split(",") if x.strip()]
        tau.append((int(m.group(1)), tuple(int(x) for x in parts)))
    if not tau:
        raise ValidationError("empty representation type")
    return tau


def _check_type(q: Quiver, tau: RepType) -> RepType:
    out = []
    for k, w in tau:
        w = check_dim(q, w)
        if k < 1:
            raise ValidationError(f"multiplicity must be positive, got {k}")
        if not any(w):
            raise ValidationError("representation type parts must be nonzero")
        out.append((k, w))
    return out


def validate_rep_type(q: Quiver, v: Sequence[int], params: ParamPair, tau: RepType,
                      strict: bool = False) -> list[str]:
    """List every violated constraint; an empty list means the type is consistent."""
    v = check_dim(q, v)
    tau = _check_type(q, tau)
    problems = []
    total = tuple(sum(k * w[i] for k, w in tau) for i in range(q.n))
    if total != v:
        problems.append(f"sum of k_t * v_t is {list(total)}, expected {list(v)}")
    for t, (_, w) in enumerate(tau):
        if dot(params.lam, w) != 0:
            problems.append(f"part {t} {list(w)}: lambda . v_t = {dot(params.lam, w)} != 0")
        if dot(params.theta, w) != 0:
            problems.append(f"part {t} {list(w)}: theta . v_t = {dot(params.theta, w)} != 0")
    if strict:
        seen = [w for _, w in tau]
        if len(set(seen)) != len(seen):
            problems.append("parts are not pairwise distinct")
    return problems


def slice_quiver(q: Quiver, tau: RepType) -> SliceResult:
    tau = _check_type(q, tau)
    r = len(tau)
    a = [[0] * r for _ in range(r)]
    for t, (_, wt) in enumerate(tau):
        loops = p_fn(q, wt)
        if loops < 0:
            raise InadmissibleTypeError(f"part {list(wt)} has p = {loops} < 0")
        a[t][t] = loops
        for u in range(t + 1, r):
            arrows = -cartan_pairing(q, wt, tau[u][1])
            if arrows < 0:
                raise InadmissibleTypeError(
                    f"parts {list(wt)} and {list(tau[u][1])} would need {arrows} arrows")
            a[t][u] = arrows
    labels = tuple(str(t + 1) for t in range(r))
    hat = Quiver(labels, tuple(tuple(row) for row in a))
    return SliceResult(hat, tuple(k for k, _ in tau), {t: w for t, (_, w) in enumerate(tau)})


def p_identity_sides(q: Quiver, tau: RepType) -> tuple[int, int]:
    """``(p_hat(sum k_t e_t), p(sum k_t v_t))``; the two agree for every admissible type."""
    res = slice_quiver(q, tau)
    total = tuple(sum(k * w[i] for k, w in tau) for i in range(q.n))
    return p_fn(res.slice_quiver, res.slice_dim), p_fn(q, total)
