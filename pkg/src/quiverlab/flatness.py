"""Flatness of the moment map via superadditivity of the p-function.

The moment map for ``(Q, v)`` is flat iff ``p(v) >= sum_t p(v_t)`` for every
decomposition ``v = v_1 + ... + v_r`` into nonzero dimension vectors.  The
maximum of the right hand side over all decompositions is computed by a
dynamic programme over the box ``0 <= w <= v``; states are encoded in mixed
radix with the first vertex most significant, so that for ``w' <= w`` the
index of ``w - w'`` is the difference of indices and index order coincides
with lexicographic order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Sequence

from .errors import CapacityError, ValidationError
from .quiver import ParamPair, Quiver, Vector, cartan_matrix, check_dim, dot, p_fn

DEFAULT_BUDGET = 1_000_000

_NEG = float("-inf")


@dataclass(frozen=True)
class FlatnessReport:
    flat: bool
    p_value: int
    best_sum: int
    witness: list[Vector] | None = None
    # max of sum p(parts) over decompositions with at least two parts
    best_proper_sum: int | None = None


class _Box:
    """Mixed-radix indexing of the lattice box ``0 <= w <= v``."""

    def __init__(self, v: Vector, budget: int):
        self.v = v
        self.size = math.prod(x + 1 for x in v)
        if self.size > budget:
            raise CapacityError(f"decomposition box has {self.size} states, budget is {budget}")
        strides = []
        s = 1
        for x in reversed(v):
            strides.append(s)
            s *= x + 1
        self.strides = tuple(reversed(strides))

    def vectors(self):
        # product() yields in lexicographic order, which is index order
        return product(*(range(x + 1) for x in self.v))

    def index(self, w: Sequence[int]) -> int:
        return sum(a * s for a, s in zip(w, self.strides))

    def decode(self, idx: int) -> Vector:
        out = []
        for s in self.strides:
            q, idx = divmod(idx, s)
            out.append(q)
        return tuple(out)

    def below(self, w: Vector) -> list[int]:
        """Indices of every ``w' <= w``, ascending."""
        idx = [0]
        for x, s in zip(w, self.strides):
            if x:
                idx = [b + j * s for b in idx for j in range(x + 1)]
        idx.sort()
        return idx


def _p_table(q: Quiver, box: _Box) -> list[int]:
    c = cartan_matrix(q)
    n = q.n
    out = []
    for w in box.vectors():
        quad = 0
        for i in range(n):
            if w[i]:
                ci = c[i]
                quad += w[i] * sum(ci[j] * w[j] for j in range(n) if w[j])
        out.append(1 - quad // 2)
    return out


class _Decompositions:
    """DP tables for the best decomposition sums of every state in a box.

    ``best[w]`` is the max of ``sum p(parts)`` over all decompositions of
    ``w`` (the one-part decomposition included); ``split[w]`` restricts to
    at least two parts.  When ``allowed`` is given, every part must be an
    allowed state (used for the sublattice orthogonal to a parameter pair).
    """

    def __init__(self, q: Quiver, v: Vector, budget: int, allowed=None):
        self.box = box = _Box(v, budget)
        self.p = p = _p_table(q, box)
        size = box.size
        best = [_NEG] * size
        split = [_NEG] * size
        choice = [-1] * size
        vecs = list(box.vectors())
        for iw in range(1, size):
            if allowed is not None and not allowed(vecs[iw]):
                continue
            top, arg = _NEG, -1
            for ia in box.below(vecs[iw]):
                ib = iw - ia
                if ia > ib:
                    break
                if ia == 0:
                    continue
                s = best[ia] + best[ib]
                if s > top:
                    top, arg = s, ia
            split[iw] = top
            choice[iw] = arg
            best[iw] = p[iw] if p[iw] >= top else top
        self.best, self.split, self.choice, self.vecs = best, split, choice, vecs

    def expand(self, iw: int, whole_ok: bool = True) -> list[Vector]:
        """Parts of one decomposition attaining ``best[iw]`` (or ``split`` if not ``whole_ok``)."""
        if whole_ok and self.p[iw] >= self.split[iw]:
            return [self.vecs[iw]]
        ia = self.choice[iw]
        return self.expand(ia) + self.expand(iw - ia)


def _nonzero(v: Vector) -> None:
    if not any(v):
        raise ValidationError("dimension vector must be nonzero")


def _as_int(x) -> int | None:
    return None if x == _NEG else int(x)


def flatness_certificate(q: Quiver, v: Sequence[int], budget: int = DEFAULT_BUDGET) -> FlatnessReport:
    v = check_dim(q, v)
    _nonzero(v)
    dp = _Decompositions(q, v, budget)
    top = dp.box.size - 1
    p_value = dp.p[top]
    best = int(dp.best[top])
    flat = best == p_value
    witness = None
    if not flat:
        witness = sorted(dp.expand(top, whole_ok=False), reverse=True)
    return FlatnessReport(flat, p_value, best, witness, _as_int(dp.split[top]))


def equality_decompositions(q: Quiver, v: Sequence[int], budget: int = DEFAULT_BUDGET) -> list[list[Vector]]:
    """Every decomposition into at least two parts with ``sum p(parts) == p(v)``.

    Parts are listed in descending lexicographic order; the result is sorted.
    """
    v = check_dim(q, v)
    _nonzero(v)
    dp = _Decompositions(q, v, budget)
    top = dp.box.size - 1
    target = dp.p[top]
    out: list[list[Vector]] = []

    def walk(rem: int, cap: int, acc: int, parts: list[int]):
        if rem == 0:
            if acc == target and len(parts) >= 2:
                out.append([dp.vecs[i] for i in parts])
            return
        if acc + dp.best[rem] < target:
            return
        rem_vec = dp.vecs[rem]
        for ia in reversed(dp.box.below(rem_vec)):
            if ia == 0 or ia > cap:
                continue
            walk(rem - ia, ia, acc + dp.p[ia], parts + [ia])

    walk(top, top, 0, [])
    out.sort()
    return out


def equality_types(q: Quiver, v: Sequence[int], budget: int = DEFAULT_BUDGET) -> list[list[tuple[int, Vector]]]:
    """Representation types ``[(k_t, v_t), ...]`` whose stratum attains ``p(v) = sum_t p(v_t)``.

    Every part must pass the strict superadditivity test (the dimension
    vector of a simple representation at zero parameters).  Equal parts with
    ``p = 0`` are rigid, so they can only occur as one summand with
    multiplicity; equal parts with ``p > 0`` come from a positive-dimensional
    family and are listed separately.
    """
    v = check_dim(q, v)
    zero = ParamPair.zero(q.n)
    target = p_fn(q, v)
    simple: dict[Vector, bool] = {}
    types = []
    for parts in equality_decompositions(q, v, budget):
        distinct = sorted(set(parts), reverse=True)
        for w in distinct:
            if w not in simple:
                simple[w] = sigma_condition(q, w, zero, budget)
        if not all(simple[w] for w in distinct):
            continue
        tau: list[tuple[int, Vector]] = []
        for w in distinct:
            k = parts.count(w)
            tau.extend([(k, w)] if p_fn(q, w) == 0 else [(1, w)] * k)
        if sum(p_fn(q, w) for _, w in tau) == target:
            types.append(tau)
    return types


def sigma_condition(q: Quiver, v: Sequence[int], params: ParamPair | None = None,
                    budget: int = DEFAULT_BUDGET) -> bool:
    """Strict inequality ``p(v) > sum p(v_t)`` over decompositions orthogonal to ``(lam, theta)``."""
    v = check_dim(q, v)
    _nonzero(v)
    if params is None:
        params = ParamPair.zero(q.n)
    lam, theta = params.lam, params.theta
    if any(lam) or any(theta):
        def allowed(w):
            return dot(lam, w) == 0 and dot(theta, w) == 0
    else:
        allowed = None
    dp = _Decompositions(q, v, budget, allowed)
    top = dp.box.size - 1
    return dp.split[top] < dp.p[top]


def _proportional(v: Vector, w: Vector) -> bool:
    gv = reduce(math.gcd, v)
    gw = reduce(math.gcd, w)
    return all(a * gw == b * gv for a, b in zip(v, w))


def is_generic(v: Sequence[int], params: ParamPair, budget: int = DEFAULT_BUDGET) -> tuple[bool, Vector | None]:
    """Check that no ``0 < v' < v`` not proportional to ``v`` is orthogonal to both parameters.

    Candidates are scanned by total size, then with larger leading entries
    first (graded lexicographic order); the first offender is returned.
    """
    v = tuple(v)
    if not any(v):
        raise ValidationError("dimension vector must be nonzero")
    if math.prod(x + 1 for x in v) > budget:
        raise CapacityError(f"genericity box exceeds budget {budget}")
    lam, theta = params.lam, params.theta
    cands = [w for w in product(*(range(x + 1) for x in v)) if any(w) and w != v]
    cands.sort(key=lambda w: (sum(w), tuple(-x for x in w)))
    for w in cands:
        if dot(lam, w) == 0 and dot(theta, w) == 0 and not _proportional(v, w):
            return False, w
    return True, None


def is_indivisible(v: Sequence[int]) -> bool:
    if not any(v):
        raise ValidationError("dimension vector must be nonzero")
    return reduce(math.gcd, v) == 1


def expected_dimension(q: Quiver, v: Sequence[int]) -> int:
    """``2 p(v)``: the dimension of the quiver scheme when the moment map is flat."""
    return 2 * p_fn(q, v)

