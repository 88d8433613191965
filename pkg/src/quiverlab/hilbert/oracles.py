"""Brute-force reference series used to cross-check the constant-term engine."""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import partitions

from ..errors import ValidationError
from ..quiver import Quiver, check_dim
from .series import TruncSeries


def _coordinates(q: Quiver, v: Sequence[int]):
    """Doubled-quiver coordinates ``(weight, arrow, is_cotangent)`` for an abelian dimension vector."""
    coords = []
    for k, (i, j) in enumerate(q.arrows()):
        if v[i] and v[j]:
            w = [0] * q.n
            w[j] += 1
            w[i] -= 1
            coords.append((tuple(w), k, False))
            coords.append((tuple(-x for x in w), k, True))
    return coords


def _weight_zero_monomials(weights: list[tuple[int, ...]], degree: int) -> list[tuple[int, ...]]:
    n = len(weights[0]) if weights else 0
    out = []
    for mono in combinations_with_replacement(range(len(weights)), degree):
        total = [0] * n
        for c in mono:
            for a, x in enumerate(weights[c]):
                total[a] += x
        if not any(total):
            out.append(mono)
    return out


def _moment_map_components(q: Quiver, v: Sequence[int], coords) -> list[dict[tuple[int, ...], int]]:
    """``mu_i = sum_{h(a)=i} x_a y_a - sum_{t(a)=i} y_a x_a`` as polynomials in coordinate indices."""
    arrows = q.arrows()
    pair: dict[int, list[int]] = {}
    for idx, (_, k, _) in enumerate(coords):
        pair.setdefault(k, []).append(idx)
    comps = []
    for vertex in range(q.n):
        if not v[vertex]:
            continue
        poly: dict[tuple[int, ...], int] = {}
        for k, (x_idx, y_idx) in pair.items():
            tail, head = arrows[k]
            mono = tuple(sorted((x_idx, y_idx)))
            coef = (head == vertex) - (tail == vertex)
            if coef:
                poly[mono] = poly.get(mono, 0) + coef
        poly = {m: c for m, c in poly.items() if c}
        if poly:
            comps.append(poly)
    return comps


def abelian_invariant_oracle(q: Quiver, v: Sequence[int], order: int,
                             with_relations: bool = True) -> TruncSeries:
    """Hilbert series of ``(C[T^*R] / (mu))^T`` by counting weight-zero monomials.

    Only for dimension vectors with entries in ``{0, 1}`` so that the gauge
    group is a torus.  The rank of each ideal slice is computed by exact
    elimination over the rationals.
    """
    v = check_dim(q, v)
    if any(x > 1 for x in v):
        raise ValidationError("the abelian oracle needs every dimension entry to be 0 or 1")
    if order < 0:
        raise ValidationError("truncation order must be nonnegative")
    coords = _coordinates(q, v)
    weights = [w for w, _, _ in coords]
    mu = _moment_map_components(q, v, coords) if with_relations else []
    coeffs = []
    for k in range(order + 1):
        basis = _weight_zero_monomials(weights, k)
        count = len(basis)
        if mu and k >= 2 and count:
            col = {m: c for c, m in enumerate(basis)}
            rows = {}
            for m in _weight_zero_monomials(weights, k - 2):
                for poly in mu:
                    row = {}
                    for g, c in poly.items():
                        row[col[tuple(sorted(m + g))]] = QQ(c)
                    rows[len(rows)] = row
            rank = DomainMatrix(rows, (len(rows), count), QQ).rank() if rows else 0
            count -= rank
        coeffs.append(count)
    return TruncSeries(tuple(coeffs))


def symmetric_power_series(n: int, order: int) -> TruncSeries:
    """Molien series of ``Sym^n(C^2)``: average over cycle types of ``prod 1/(1 - t^part)^2``."""
    if n < 1:
        raise ValidationError("n must be at least 1")
    if order < 0:
        raise ValidationError("truncation order must be nonnegative")
    total = [Fraction(0)] * (order + 1)
    for shape in partitions(n):
        z = math.prod(part ** mult * math.factorial(mult) for part, mult in shape.items())
        coeffs = [1] + [0] * order
        for part, mult in shape.items():
            for _ in range(2 * mult):
                for k in range(part, order + 1):
                    coeffs[k] += coeffs[k - part]
        for k in range(order + 1):
            total[k] += Fraction(coeffs[k], z)
    return TruncSeries(tuple(total))
