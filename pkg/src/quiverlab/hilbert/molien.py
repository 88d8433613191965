"""Molien-Weyl constant-term computation of graded characters of quiver reductions.

Every coordinate of ``T^*R(Q, v)`` has ``t``-weight one and the moment map
has weight two.  The Koszul Euler characteristic of the derived reduction is

    1/|W| CT_z [ prod_i prod_{a != b} (1 - z_ia/z_ib)
                 * (1 - t^2)^{-1} prod_i prod_{a, b} (1 - t^2 z_ia/z_ib)
                 * prod_{arrows i->j} prod_{a, b} 1/((1 - t z_jb/z_ia)(1 - t z_ia/z_jb)) ]

with ``|W| = prod_i v_i!``.  Factors whose torus weight is trivial are
collected into a scalar series in ``t``.
"""
from __future__ import annotations

import math
from typing import Sequence

from ..errors import IntegrityError, ValidationError
from ..quiver import Quiver, check_dim
from .series import LaurentPoly, SeriesWorkspace, TruncSeries, laurent_product, scalar_series, series_product

DEFAULT_MAX_TERMS = 5_000_000


class _Torus:
    """Index bookkeeping for the fugacities ``z_{i,a}``, ``0 <= a < v_i``."""

    def __init__(self, v: Sequence[int]):
        self.v = tuple(v)
        self.offset = []
        total = 0
        for x in self.v:
            self.offset.append(total)
            total += x
        self.rank = total
        self.vertex_of = [i for i, x in enumerate(self.v) for _ in range(x)]

    def var(self, i: int, a: int) -> int:
        return self.offset[i] + a

    def ratio(self, num: int, den: int) -> tuple[int, ...]:
        e = [0] * self.rank
        e[num] += 1
        e[den] -= 1
        return tuple(e)

    def weyl_numerator(self) -> LaurentPoly:
        factors = []
        for i, x in enumerate(self.v):
            for a in range(x):
                for b in range(x):
                    if a != b:
                        one = (0,) * self.rank
                        factors.append({one: 1, self.ratio(self.var(i, a), self.var(i, b)): -1})
        return laurent_product(factors, self.rank)

    def pruner(self, order: int):
        # exponents of the Weyl numerator lie in [-(v_i - 1), v_i - 1]; every
        # further power of t moves the exponent vector by at most 2 in l1
        reach = [self.v[i] - 1 for i in self.vertex_of]

        def keep(e, k):
            excess = 0
            for x, r in zip(e, reach):
                if x > r:
                    excess += x - r
                elif -x > r:
                    excess += -x - r
            return excess <= 2 * (order - k)
        return keep


def _validate(q: Quiver, v: Sequence[int], order: int) -> tuple[int, ...]:
    v = check_dim(q, v)
    if not any(v):
        raise ValidationError("dimension vector must be nonzero")
    if order < 0:
        raise ValidationError("truncation order must be nonnegative")
    return v


def _character(q: Quiver, v: Sequence[int], order: int, koszul: bool,
               max_terms: int, prune: bool) -> TruncSeries:
    torus = _Torus(v)
    ws = SeriesWorkspace(torus.rank, order, max_terms, torus.pruner(order) if prune else None)
    trivial_geometric = 0
    for i, j in q.arrows():
        for a in range(v[i]):
            for b in range(v[j]):
                zi, zj = torus.var(i, a), torus.var(j, b)
                if zi == zj:
                    trivial_geometric += 2
                    continue
                ws.divide_by(torus.ratio(zj, zi))
                ws.divide_by(torus.ratio(zi, zj))
    koszul_trivial = 0
    if koszul:
        for i, x in enumerate(v):
            for a in range(x):
                for b in range(x):
                    if a == b:
                        koszul_trivial += 1
                    else:
                        ws.multiply_by(torus.ratio(torus.var(i, a), torus.var(i, b)), step=2)
        # one central direction of prod gl(v_i) acts trivially
        koszul_trivial -= 1
    raw = ws.constant_terms(torus.weyl_numerator())
    scalar = scalar_series(order, {2: koszul_trivial}, {1: trivial_geometric})
    raw = series_product(raw, scalar, order)
    weyl_order = math.prod(math.factorial(x) for x in v)
    for k, c in enumerate(raw):
        if c % weyl_order:
            raise IntegrityError(f"constant term {c} at t^{k} is not divisible by |W| = {weyl_order}")
    return TruncSeries(tuple(c // weyl_order for c in raw))


def koszul_euler_series(q: Quiver, v: Sequence[int], order: int,
                        max_terms: int = DEFAULT_MAX_TERMS, prune: bool = True) -> TruncSeries:
    """Graded Euler characteristic of the Koszul complex computing the derived reduction at zero."""
    v = _validate(q, v, order)
    return _character(q, v, order, True, max_terms, prune)


def matter_series(q: Quiver, v: Sequence[int], order: int,
                  max_terms: int = DEFAULT_MAX_TERMS, prune: bool = True) -> TruncSeries:
    """Hilbert series of the invariant ring of ``T^*R(Q, v)``, without the moment map relations."""
    v = _validate(q, v, order)
    return _character(q, v, order, False, max_terms, prune)
