"""Simple reflections of dimension vectors and parameters at loop-free vertices.

``s_i v = v - (v, e_i) e_i`` and ``(s_i x)_j = x_j - (e_i, e_j) x_i`` for
``x`` in ``{lam, theta}``, where ``(x, y) = x . C_Q y``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import IntegrityError, ValidationError
from .quiver import ParamPair, Quiver, Vector, cartan_matrix, check_dim, dot


@dataclass(frozen=True)
class ReflectionAdmissibility:
    loop_free: bool
    lmn: bool
    pm1: bool


@dataclass(frozen=True)
class Orbit:
    states: list[tuple[Vector, ParamPair]]
    truncated: bool


def _reflect_param(x: Sequence, row: Sequence[int], i: int) -> tuple:
    xi = x[i]
    if not xi:
        return tuple(x)
    return tuple(xj - cij * xi if cij else xj for xj, cij in zip(x, row))


def reflect_at(q: Quiver, v: Sequence[int], params: ParamPair, i: int) -> tuple[Vector, ParamPair]:
    v = check_dim(q, v)
    if not 0 <= i < q.n:
        raise ValidationError(f"vertex index {i} out of range")
    if q.loops(i):
        raise ValidationError(f"vertex {q.labels[i]!r} has loops; no reflection")
    c = cartan_matrix(q)
    pairing = dot(v, c[i])
    new_v = tuple(x - pairing if j == i else x for j, x in enumerate(v))
    if new_v[i] < 0:
        raise ValidationError(f"reflection at {q.labels[i]!r} gives negative dimension {new_v[i]}")
    lam = _reflect_param(params.lam, c[i], i)
    theta = _reflect_param(params.theta, c[i], i)
    for old, new in ((params.lam, lam), (params.theta, theta)):
        # only a nonzero entry at i can move the pairing
        if old[i] and dot(new, new_v) != dot(old, v):
            raise IntegrityError("reflection changed the parameter pairing with v")
    return new_v, ParamPair(lam, theta)


def reflection_admissibility(q: Quiver, v: Sequence[int], params: ParamPair, i: int) -> ReflectionAdmissibility:
    v = check_dim(q, v)
    pairing = dot(v, cartan_matrix(q)[i])
    return ReflectionAdmissibility(
        loop_free=q.loops(i) == 0,
        lmn=params.lam[i] != 0 or params.theta[i] != 0,
        pm1=pairing in (1, -1),
    )


def reflection_orbit(q: Quiver, v: Sequence[int], params: ParamPair, max_size: int) -> Orbit:
    """Breadth-first closure under every reflection that keeps the dimension vector nonnegative."""
    if max_size < 1:
        raise ValidationError("max_size must be at least 1")
    start = (check_dim(q, v), params)
    seen = {start}
    order = [start]
    queue = deque([start])
    truncated = False
    loop_free = [i for i in range(q.n) if q.loops(i) == 0]
    c = cartan_matrix(q)
    while queue:
        w, pp = queue.popleft()
        for i in loop_free:
            if w[i] - dot(w, c[i]) < 0:
                continue
            state = reflect_at(q, w, pp, i)
            if state in seen:
                continue
            if len(order) >= max_size:
                truncated = True
                break
            seen.add(state)
            order.append(state)
            queue.append(state)
        if truncated:
            break
    return Orbit(order, truncated)

