"""Finite and affine type A quivers, their flatness criterion, and W-algebra data.

For a framed type A quiver the moment map is flat iff
``e_I . (d - C v) >= -1`` for every connected vertex set ``I``.  Paths are
oriented ``1 -> 2 -> ... -> n``; cycles add ``n -> 1``; the one-vertex cycle
is the Jordan quiver.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import IntegrityError, ValidationError
from .quiver import Quiver, Vector, cartan_matrix, cartan_pairing, check_dim, dot, quiver_from_matrix


@dataclass(frozen=True)
class TypeAQuiver:
    n: int
    affine: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("type A quiver needs at least one vertex")

    @property
    def quiver(self) -> Quiver:
        n = self.n
        a = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            a[i][i + 1] = 1
        if self.affine:
            a[n - 1][0] += 1
        return quiver_from_matrix(a)

    @property
    def delta(self) -> Vector:
        return (1,) * self.n


@dataclass(frozen=True)
class WalgParams:
    """Parabolic block sizes ``r_1..r_n`` and nilpotent Jordan multiplicities ``d_1..d_{n-1}``."""

    r: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self):
        r, d = tuple(self.r), tuple(self.d)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "d", d)
        if len(r) < 2:
            raise ValidationError("need at least two blocks r_1, r_2")
        if len(d) != len(r) - 1:
            raise ValidationError(f"expected {len(r) - 1} Jordan multiplicities, got {len(d)}")
        if any(x < 0 for x in r + d):
            raise ValidationError("r and d entries must be nonnegative")
        if sum(r) != sum((i + 1) * x for i, x in enumerate(d)):
            raise ValidationError(f"sum r = {sum(r)} but sum i*d_i = "
                                  f"{sum((i + 1) * x for i, x in enumerate(d))}")

    @property
    def N(self) -> int:
        return sum(self.r)

    @property
    def n(self) -> int:
        return len(self.r)


def connected_subsets(qa: TypeAQuiver) -> list[frozenset[int]]:
    """Intervals of a path, arcs of a cycle (full cycle included); 0-based, by size then start."""
    n = qa.n
    out = []
    for size in range(1, n + 1):
        if qa.affine and size < n:
            starts = range(n)
        else:
            starts = range(n - size + 1)
        for s in starts:
            out.append(frozenset((s + k) % n for k in range(size)))
    return out


def _check_framing(qa: TypeAQuiver, d: Sequence[int]) -> Vector:
    d = tuple(d)
    if len(d) != qa.n or any(x < 0 for x in d):
        raise ValidationError(f"framing vector must be {qa.n} nonnegative integers")
    if not any(d):
        raise ValidationError("framing vector must not be identically zero")
    return d


def defect(q: Quiver, v: Sequence[int], d: Sequence[int]) -> Vector:
    """``d - C_Q v``."""
    c = cartan_matrix(q)
    return tuple(d[i] - dot(c[i], v) for i in range(q.n))


def flat_type_a(qa: TypeAQuiver, v: Sequence[int], d: Sequence[int]) -> tuple[bool, frozenset[int] | None]:
    q = qa.quiver
    v = check_dim(q, v)
    d = _check_framing(qa, d)
    slack = defect(q, v, d)
    for subset in connected_subsets(qa):
        if sum(slack[i] for i in subset) < -1:
            return False, subset
    return True, None


def decompose_test_vector(qa: TypeAQuiver, u: Sequence[int]) -> tuple[int, list[frozenset[int]]]:
    """Write ``u = m*delta + sum_a e_{I_a}`` with connected proper ``I_a`` pairing nonnegatively.

    All copies of ``delta`` are removed first (cycles only); then the
    connected components of the support are peeled off repeatedly.
    """
    q = qa.quiver
    u = check_dim(q, u)
    n = qa.n
    m = min(u) if qa.affine else 0
    rest = [x - m for x in u]
    intervals: list[frozenset[int]] = []
    while any(rest):
        for comp in _support_arcs(qa, rest):
            intervals.append(comp)
            for i in comp:
                rest[i] -= 1

    total = [m] * n if qa.affine else [0] * n
    for subset in intervals:
        for i in subset:
            total[i] += 1
    if tuple(total) != u:
        raise IntegrityError(f"test vector decomposition does not reconstruct {u}")
    full = frozenset(range(n))
    for a in intervals:
        if a == full and qa.affine:
            raise IntegrityError("decomposition used the full cycle as an interval")
        ea = _indicator(n, a)
        for b in intervals:
            if cartan_pairing(q, ea, _indicator(n, b)) < 0:
                raise IntegrityError(f"negative pairing between {sorted(a)} and {sorted(b)}")
    return m, intervals


def _indicator(n: int, subset) -> Vector:
    return tuple(1 if i in subset else 0 for i in range(n))


def _support_arcs(qa: TypeAQuiver, u: Sequence[int]) -> list[frozenset[int]]:
    n = qa.n
    supp = [i for i in range(n) if u[i] > 0]
    if qa.affine and len(supp) == n:
        return [frozenset(range(n))]
    comps: list[list[int]] = []
    for i in supp:
        if comps and comps[-1][-1] == i - 1:
            comps[-1].append(i)
        else:
            comps.append([i])
    # on a cycle the arc through n -> 1 wraps around
    if qa.affine and len(comps) > 1 and comps[0][0] == 0 and comps[-1][-1] == n - 1:
        comps[0] = comps.pop() + comps[0]
    return [frozenset(c) for c in comps]


def walg_dims(params: WalgParams) -> Vector:
    """``v_i = sum_{j>i} r_j - sum_{j>i} (j - i) d_j`` on the ``A_{n-1}`` path, ``d_n = 0``."""
    r, d = params.r, params.d + (0,)
    n = params.n
    v = []
    for i in range(1, n):
        v.append(sum(r[j - 1] for j in range(i + 1, n + 1))
                 - sum((j - i) * d[j - 1] for j in range(i + 1, n + 1)))
    if any(x < 0 for x in v):
        raise ValidationError(f"parameters give a negative dimension vector {v}")
    return tuple(v)


def walg_identity_checks(params: WalgParams) -> list[dict]:
    """Both sides of ``e_{i,j} . (d - C v) = r_i - r_j`` for every ``1 <= i < j <= n``."""
    v = walg_dims(params)
    qa = TypeAQuiver(params.n - 1)
    slack = defect(qa.quiver, v, params.d)
    checks = []
    for i in range(1, params.n + 1):
        for j in range(i + 1, params.n + 1):
            lhs = sum(slack[k - 1] for k in range(i, j))
            rhs = params.r[i - 1] - params.r[j - 1]
            checks.append({"pair": [i, j], "lhs": lhs, "rhs": rhs})
    return checks


def walg_flat(params: WalgParams) -> bool:
    walg_dims(params)
    r = params.r
    return all(r[i] - r[j] >= -1 for i in range(len(r)) for j in range(i + 1, len(r)))
