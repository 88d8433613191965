"""Quiver data model, Cartan calculus, the p-function and framing.

A quiver is stored as a square adjacency matrix ``a`` with ``a[i][j]`` the
number of arrows ``i -> j`` (diagonal entries count loops).  Dimension,
framing and parameter vectors are plain tuples indexed in vertex
declaration order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ValidationError

FRAMING_LABEL = "inf"

Vector = tuple[int, ...]
RationalVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph with labelled vertices."""

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValidationError(f"duplicate vertex label in {list(self.labels)}")
        if len(self.adjacency) != n or any(len(row) != n for row in self.adjacency):
            raise ValidationError("adjacency matrix must be square with side = number of vertices")
        for row in self.adjacency:
            for entry in row:
                if not isinstance(entry, int) or entry < 0:
                    raise ValidationError(f"adjacency entries must be nonnegative integers, got {entry!r}")

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown vertex {label!r}") from None

    def loops(self, i: int) -> int:
        return self.adjacency[i][i]

    def arrows(self) -> list[tuple[int, int]]:
        """Arrows as ``(tail, head)`` index pairs, repeated by multiplicity."""
        return [(i, j) for i in range(self.n) for j in range(self.n)
                for _ in range(self.adjacency[i][j])]

    def symmetric_adjacency(self) -> tuple[tuple[int, ...], ...]:
        a = self.adjacency
        return tuple(tuple(a[i][j] + a[j][i] for j in range(self.n)) for i in range(self.n))

    def reversed(self) -> "Quiver":
        a = self.adjacency
        return Quiver(self.labels, tuple(tuple(a[j][i] for j in range(self.n)) for i in range(self.n)))

    def delete_vertex(self, i: int) -> "Quiver":
        keep = [k for k in range(self.n) if k != i]
        return Quiver(tuple(self.labels[k] for k in keep),
                      tuple(tuple(self.adjacency[r][c] for c in keep) for r in keep))

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        return cartan_matrix(self)


@dataclass(frozen=True)
class ParamPair:
    """Deformation parameter ``lam`` and stability parameter ``theta``.

    Entries at vertices where the dimension vector vanishes never enter any
    predicate (every test vector is bounded by the dimension vector), so
    they are carried along unchanged rather than being rejected.
    """

    lam: RationalVector
    theta: RationalVector

    @classmethod
    def zero(cls, n: int) -> "ParamPair":
        z = tuple(Fraction(0) for _ in range(n))
        return cls(z, z)

    @classmethod
    def of(cls, lam: Iterable, theta: Iterable) -> "ParamPair":
        return cls(tuple(Fraction(x) for x in lam), tuple(Fraction(x) for x in theta))

    def annihilated_by(self, v: Sequence[int]) -> bool:
        return dot(self.lam, v) == 0 and dot(self.theta, v) == 0


def dot(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y) if a and b)


def build_quiver(labels: Sequence[str], arrows: Iterable[tuple[str, str]]) -> Quiver:
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise ValidationError(f"duplicate vertex label in {list(labels)}")
    pos = {lab: k for k, lab in enumerate(labels)}
    a = [[0] * len(labels) for _ in labels]
    for tail, head in arrows:
        tail, head = str(tail), str(head)
        for end in (tail, head):
            if end not in pos:
                raise ValidationError(f"arrow endpoint {end!r} is not a declared vertex")
        a[pos[tail]][pos[head]] += 1
    return Quiver(labels, tuple(tuple(row) for row in a))


def quiver_from_matrix(matrix: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> Quiver:
    if labels is None:
        labels = [str(k + 1) for k in range(len(matrix))]
    return Quiver(tuple(labels), tuple(tuple(int(x) for x in row) for row in matrix))


def cartan_matrix(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """``2*Id - A - A^T``."""
    s = q.symmetric_adjacency()
    return tuple(tuple((2 if i == j else 0) - s[i][j] for j in range(q.n)) for i in range(q.n))


def check_dim(q: Quiver, v: Sequence[int]) -> Vector:
    v = tuple(v)
    if len(v) != q.n:
        raise ValidationError(f"dimension vector has length {len(v)}, quiver has {q.n} vertices")
    if any(not isinstance(x, int) or x < 0 for x in v):
        raise ValidationError(f"dimension vector entries must be nonnegative integers: {list(v)}")
    return v


def cartan_pairing(q: Quiver, x: Sequence[int], y: Sequence[int]) -> int:
    """The symmetric form ``x . C_Q y``."""
    c = cartan_matrix(q)
    return sum(x[i] * c[i][j] * y[j] for i in range(q.n) if x[i] for j in range(q.n) if y[j])


def adjacency_pairing(q: Quiver, x: Sequence[int], y: Sequence[int]) -> int:
    """The symmetrised adjacency form ``x . (A + A^T) y``."""
    s = q.symmetric_adjacency()
    return sum(x[i] * s[i][j] * y[j] for i in range(q.n) if x[i] for j in range(q.n) if y[j])


def p_fn(q: Quiver, v: Sequence[int]) -> int:
    """``1 - (v . C_Q v) / 2``; exact since ``v . C_Q v`` is always even."""
    v = check_dim(q, v)
    return 1 - cartan_pairing(q, v, v) // 2


def unit(n: int, i: int) -> Vector:
    return tuple(1 if k == i else 0 for k in range(n))


def frame(q: Quiver, v: Sequence[int], d: Sequence[int],
          params: ParamPair | None = None) -> tuple[Quiver, Vector, ParamPair]:
    """Attach a vertex ``inf`` of dimension one with ``d[i]`` arrows ``inf -> i``.

    The parameters are extended by ``lam_inf = -lam . v`` and
    ``theta_inf = -theta . v`` so the result is annihilated by the framed
    dimension vector.
    """
    v = check_dim(q, v)
    d = tuple(d)
    if len(d) != q.n or any(not isinstance(x, int) or x < 0 for x in d):
        raise ValidationError(f"framing vector must be {q.n} nonnegative integers: {list(d)}")
    if not any(d):
        raise ValidationError("framing vector must not be identically zero")
    if FRAMING_LABEL in q.labels:
        raise ValidationError(f"vertex label {FRAMING_LABEL!r} is reserved for the framing vertex")
    if params is None:
        params = ParamPair.zero(q.n)
    rows = [list(row) + [0] for row in q.adjacency]
    rows.append(list(d) + [0])
    framed = Quiver(q.labels + (FRAMING_LABEL,), tuple(tuple(r) for r in rows))
    lam = params.lam + (-dot(params.lam, v),)
    theta = params.theta + (-dot(params.theta, v),)
    return framed, v + (1,), ParamPair(lam, theta)


def support_components(q: Quiver, v: Sequence[int]) -> list[list[int]]:
    """Connected components (ignoring orientation) of the support of ``v``."""
    v = check_dim(q, v)
    s = q.symmetric_adjacency()
    seen: set[int] = set()
    comps = []
    for start in range(q.n):
        if v[start] == 0 or start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(q.n):
                if v[j] and j not in seen and s[i][j]:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps
