"""Truncated power series in ``t`` whose coefficients are Laurent polynomials.

A Laurent polynomial is a dict from exponent tuples to nonzero ints.  A
series of order ``K`` is a list of ``K + 1`` such dicts, one per power of
``t``.  Multiplication by monomial geometric factors ``1/(1 - t^s z^m)`` and
binomials ``(1 - t^s z^m)`` is done in place degree by degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from ..errors import CapacityError

Exponent = tuple[int, ...]
LaurentPoly = dict[Exponent, int]


@dataclass(frozen=True)
class TruncSeries:
    """Coefficients ``c_0 .. c_K`` of a power series in ``t``."""

    coefficients: tuple

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k):
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def as_ints(self) -> list[int]:
        out = []
        for c in self.coefficients:
            c = Fraction(c)
            if c.denominator != 1:
                raise ValueError(f"coefficient {c} is not an integer")
            out.append(int(c))
        return out


def _shift(e: Exponent, m: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(e, m))


def _accumulate(target: LaurentPoly, e: Exponent, c: int) -> None:
    c = target.get(e, 0) + c
    if c:
        target[e] = c
    else:
        target.pop(e, None)


class SeriesWorkspace:
    """A truncated Laurent-coefficient series with optional admissible pruning.

    ``keep(e, k)`` decides whether a monomial ``z^e`` at ``t``-degree ``k``
    can still influence the requested output; dropping it must be sound.
    """

    def __init__(self, nvars: int, order: int, max_terms: int,
                 keep: Callable[[Exponent, int], bool] | None = None):
        self.order = order
        self.max_terms = max_terms
        self.keep = keep
        self.terms: list[LaurentPoly] = [dict() for _ in range(order + 1)]
        self.terms[0][(0,) * nvars] = 1

    def _prune(self, k: int) -> None:
        if self.keep is None:
            return
        layer = self.terms[k]
        for e in [e for e in layer if not self.keep(e, k)]:
            del layer[e]

    def _check_size(self) -> None:
        size = sum(len(layer) for layer in self.terms)
        if size > self.max_terms:
            raise CapacityError(f"series workspace holds {size} monomials, budget is {self.max_terms}")

    def divide_by(self, m: Exponent, step: int = 1) -> None:
        """Multiply by ``1 / (1 - t^step z^m)``."""
        terms = self.terms
        for k in range(step, self.order + 1):
            layer = terms[k]
            for e, c in terms[k - step].items():
                _accumulate(layer, _shift(e, m), c)
            self._prune(k)
        self._check_size()

    def multiply_by(self, m: Exponent, step: int = 1, sign: int = -1) -> None:
        """Multiply by ``(1 + sign * t^step z^m)``."""
        terms = self.terms
        for k in range(self.order, step - 1, -1):
            layer = terms[k]
            for e, c in terms[k - step].items():
                _accumulate(layer, _shift(e, m), sign * c)
            self._prune(k)
        self._check_size()

    def constant_terms(self, weights: LaurentPoly) -> list[int]:
        """Constant term of ``weights * series`` at each ``t``-degree."""
        out = []
        for layer in self.terms:
            total = 0
            for m, c in weights.items():
                total += c * layer.get(tuple(-x for x in m), 0)
            out.append(total)
        return out


def laurent_product(factors: Sequence[LaurentPoly], nvars: int) -> LaurentPoly:
    acc: LaurentPoly = {(0,) * nvars: 1}
    for f in factors:
        nxt: LaurentPoly = {}
        for e1, c1 in acc.items():
            for e2, c2 in f.items():
                _accumulate(nxt, _shift(e1, e2), c1 * c2)
        acc = nxt
    return acc


def scalar_series(order: int, numerator_pow: dict[int, int], denominator_pow: dict[int, int]) -> list[int]:
    """Coefficients of ``prod (1 - t^s)^a / prod (1 - t^s)^b`` up to ``t^order``."""
    coeffs = [1] + [0] * order
    for s, a in numerator_pow.items():
        for _ in range(a):
            for k in range(order, s - 1, -1):
                coeffs[k] -= coeffs[k - s]
    for s, b in denominator_pow.items():
        for _ in range(b):
            for k in range(s, order + 1):
                coeffs[k] += coeffs[k - s]
    return coeffs


def series_product(a: Sequence, b: Sequence, order: int) -> list:
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(order + 1)]
