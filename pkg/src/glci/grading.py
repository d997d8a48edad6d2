"""Exact arithmetic in the rank-1 grading group of a weighted projective setup.

The group L is generated by x_1, ..., x_n and c subject to p_i * x_i = c.
Every element has a unique normal form sum(a_i * x_i) + a * c with
0 <= a_i < p_i; all functions in this module keep elements in that form.
No floating point is used anywhere: torsion data are ints, degrees are
`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class Trichotomy(Enum):
    FANO = "Fano"
    CALABI_YAU = "CalabiYau"
    ANTI_FANO = "AntiFano"


@dataclass(frozen=True)
class WeightSystem:
    """Ambient dimension d, weights p_1..p_n and optional hyperplane data.

    `lam` is either None (coefficients stay symbolic) or a tuple of rows,
    one row of d+1 exact rationals for each hyperplane of index i >= d+2
    in the normalized coordinate presentation (the first min(n, d+1)
    hyperplanes are coordinate hyperplanes and carry no data).
    """

    d: int
    weights: tuple[int, ...]
    lam: Optional[tuple[tuple[Fraction, ...], ...]] = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.d}")
        object.__setattr__(self, "weights", tuple(int(p) for p in self.weights))
        for p in self.weights:
            if p < 1:
                raise ValueError(f"weights must be >= 1, got {p}")
        if self.lam is not None:
            if any(p < 2 for p in self.weights):
                raise ValueError("numeric hyperplane data requires all weights >= 2")
            rows = tuple(tuple(Fraction(v) for v in row) for row in self.lam)
            if len(rows) != max(0, self.n - self.d - 1):
                raise ValueError(
                    f"expected {max(0, self.n - self.d - 1)} hyperplane rows, got {len(rows)}"
                )
            for row in rows:
                if len(row) != self.d + 1:
                    raise ValueError("each hyperplane row needs d+1 coefficients")
            object.__setattr__(self, "lam", rows)

    @property
    def n(self) -> int:
        return len(self.weights)

    def __str__(self):
        w = ",".join(str(p) for p in self.weights)
        return f"(d={self.d}; {w})"


@dataclass(frozen=True)
class GroupElement:
    """Element of L in normal form: torsion coordinates plus free c-coordinate."""

    torsion: tuple[int, ...]
    free: int

    def __str__(self):
        if not self.torsion:
            return f"(; {self.free})"
        return "(" + ",".join(str(a) for a in self.torsion) + f"; {self.free})"


def normal_form(ws: WeightSystem, raw_torsion: Sequence[int], raw_free: int) -> GroupElement:
    """Reduce arbitrary integer coordinates using p_i * x_i = c."""
    if len(raw_torsion) != ws.n:
        raise ValueError(f"expected {ws.n} torsion coordinates, got {len(raw_torsion)}")
    free = int(raw_free)
    tors = []
    for a, p in zip(raw_torsion, ws.weights):
        q, r = divmod(int(a), p)
        tors.append(r)
        free += q
    return GroupElement(tuple(tors), free)


def zero(ws: WeightSystem) -> GroupElement:
    return GroupElement((0,) * ws.n, 0)


def gen_x(ws: WeightSystem, i: int) -> GroupElement:
    """The generator x_i (1-based); equals c when p_i = 1."""
    if not 1 <= i <= ws.n:
        raise ValueError(f"generator index {i} out of range 1..{ws.n}")
    raw = [0] * ws.n
    raw[i - 1] = 1
    return normal_form(ws, raw, 0)


def gen_c(ws: WeightSystem) -> GroupElement:
    return GroupElement((0,) * ws.n, 1)


def add(ws: WeightSystem, x: GroupElement, y: GroupElement) -> GroupElement:
    return normal_form(ws, [a + b for a, b in zip(x.torsion, y.torsion)], x.free + y.free)


def negate(ws: WeightSystem, x: GroupElement) -> GroupElement:
    return normal_form(ws, [-a for a in x.torsion], -x.free)


def sub(ws: WeightSystem, x: GroupElement, y: GroupElement) -> GroupElement:
    return normal_form(ws, [a - b for a, b in zip(x.torsion, y.torsion)], x.free - y.free)


def smul(ws: WeightSystem, k: int, x: GroupElement) -> GroupElement:
    return normal_form(ws, [k * a for a in x.torsion], k * x.free)


def is_nonneg(ws: WeightSystem, x: GroupElement) -> bool:
    # The monoid of effective degrees is exactly {free coordinate >= 0}.
    return x.free >= 0


def leq(ws: WeightSystem, x: GroupElement, y: GroupElement) -> bool:
    return is_nonneg(ws, sub(ws, y, x))


def delta(ws: WeightSystem, x: GroupElement) -> Fraction:
    """Degree map: x_i -> 1/p_i, c -> 1."""
    return sum((Fraction(a, p) for a, p in zip(x.torsion, ws.weights)), Fraction(x.free))


def omega(ws: WeightSystem) -> GroupElement:
    """Dualizing element (n-d-1)c - sum(x_i)."""
    return normal_form(ws, [-1] * ws.n, ws.n - ws.d - 1)


def delta_omega(ws: WeightSystem) -> Fraction:
    return Fraction(ws.n - ws.d - 1) - sum(
        (Fraction(1, p) for p in ws.weights), Fraction(0)
    )


def trichotomy(ws: WeightSystem) -> Trichotomy:
    dw = delta_omega(ws)
    if dw < 0:
        return Trichotomy.FANO
    if dw == 0:
        return Trichotomy.CALABI_YAU
    return Trichotomy.ANTI_FANO


def interval(ws: WeightSystem, x: GroupElement, y: GroupElement) -> list[GroupElement]:
    """All z with x <= z <= y, in lexicographic order of (torsion, free) of z - x.

    The free coordinate of z - x is bounded by floor(delta(y - x)) because
    the degree map is monotone for <=.
    """
    w = sub(ws, y, x)
    if not is_nonneg(ws, w):
        return []
    bound = math.floor(delta(ws, w))
    out = []
    for tors in itertools.product(*(range(p) for p in ws.weights)):
        for a in range(bound + 1):
            u = GroupElement(tors, a)
            if leq(ws, u, w):
                out.append(add(ws, x, u))
    return out


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors (nonnegative, each dividing the next) of an integer matrix."""
    a = [[int(v) for v in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = min(rows, cols)
    t = 0
    while t < m:
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[pi], a[t] = a[t], a[pi]
        if pj != t:
            for row in a:
                row[pj], row[t] = row[t], row[pj]
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
        # Clear row and column t; restart pivot search if a remainder appears.
        dirty = False
        for i in range(t + 1, rows):
            q = a[i][t] // a[t][t]
            if q:
                a[i] = [v - q * w for v, w in zip(a[i], a[t])]
            if a[i][t]:
                dirty = True
        for j in range(t + 1, cols):
            q = a[t][j] // a[t][t]
            if q:
                for row in a:
                    row[j] -= q * row[t]
            if a[t][j]:
                dirty = True
        if dirty:
            continue
        # Divisibility: pivot must divide every remaining entry.
        viol = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    viol = i
                    break
            if viol is not None:
                break
        if viol is not None:
            a[t] = [v + w for v, w in zip(a[t], a[viol])]
            continue
        t += 1
    return [abs(a[i][i]) for i in range(m)]


@dataclass(frozen=True)
class CosetData:
    """Order and invariant factors of L modulo the subgroup generated by omega.

    `count` is None when the quotient is infinite (degree of omega is zero).
    """

    count: Optional[int]
    invariant_factors: tuple[int, ...]

    @property
    def is_infinite(self) -> bool:
        return self.count is None


def _omega_presentation_matrix(ws: WeightSystem) -> list[list[int]]:
    # Generators x_1..x_n with c = p_n * x_n eliminated; last row kills omega.
    n = ws.n
    if n == 0:
        return [[ws.n - ws.d - 1]]
    mat = []
    for i in range(n - 1):
        row = [0] * n
        row[i] = ws.weights[i]
        row[i + 1] = -ws.weights[i + 1]
        mat.append(row)
    last = [-1] * n
    last[n - 1] = (ws.n - ws.d - 1) * ws.weights[n - 1] - 1
    mat.append(last)
    return mat


def coset_data_mod_omega(ws: WeightSystem) -> CosetData:
    factors = tuple(smith_normal_form(_omega_presentation_matrix(ws)))
    if delta_omega(ws) == 0:
        return CosetData(None, factors)
    count = abs(math.prod(ws.weights) * delta_omega(ws))
    if count.denominator != 1:
        raise AssertionError("coset count must be an integer")
    count = int(count)
    prod = math.prod(f for f in factors if f)
    if 0 in factors or prod != count:
        raise AssertionError(
            f"invariant factors {factors} inconsistent with coset count {count}"
        )
    return CosetData(count, factors)


def piece_dim(ws: WeightSystem, x: GroupElement) -> int:
    """Dimension of the graded piece R_x: monomials of degree `free` in d+1 variables."""
    if x.free < 0:
        return 0
    return math.comb(x.free + ws.d, ws.d)


def hom_ext_dim(ws: WeightSystem, x: GroupElement, y: GroupElement, i: int) -> int:
    """dim Ext^i(O(x), O(y)) between line bundles: nonzero only for i = 0 and i = d."""
    if i < 0:
        raise ValueError("cohomological degree must be >= 0")
    if i == 0:
        return piece_dim(ws, sub(ws, y, x))
    if i == ws.d:
        return piece_dim(ws, add(ws, sub(ws, x, y), omega(ws)))
    return 0


def normalize_weights(ws: WeightSystem) -> WeightSystem:
    """Drop all weight-1 hyperplanes; idempotent."""
    if all(p >= 2 for p in ws.weights):
        return ws
    kept = tuple(p for p in ws.weights if p >= 2)
    # Numeric hyperplane data is only accepted with all weights >= 2, so no
    # rows can need dropping here.
    return WeightSystem(ws.d, kept, ws.lam)


def presentation(ws: WeightSystem) -> tuple[WeightSystem, list[GroupElement]]:
    """Normalize and, when n < d+1, pad with weight-1 hyperplanes up to n = d+1.

    Returns the normalized weight system (whose group L is unchanged) together
    with the list of generator elements of the presentation: x_i for the real
    hyperplanes followed by c for each padded one.
    """
    base = normalize_weights(ws)
    n_pres = max(base.n, base.d + 1)
    gens = [gen_x(base, i) for i in range(1, base.n + 1)]
    gens += [gen_c(base)] * (n_pres - base.n)
    return base, gens


def presentation_weights(ws: WeightSystem) -> tuple[int, ...]:
    base = normalize_weights(ws)
    return base.weights + (1,) * max(0, base.d + 1 - base.n)


def elements_with_free_in(ws: WeightSystem, lo: int, hi: int) -> Iterable[GroupElement]:
    """All normal forms with free coordinate in [lo, hi], lexicographic."""
    for tors in itertools.product(*(range(p) for p in ws.weights)):
        for a in range(lo, hi + 1):
            yield GroupElement(tors, a)


def coset_key(ws: WeightSystem, x: GroupElement) -> GroupElement:
    """Canonical representative of x modulo the omega subgroup.

    Valid when delta(omega) != 0: the representative is the unique element of
    the coset whose degree lies in [0, |delta(omega)|).
    """
    dw = delta_omega(ws)
    if dw == 0:
        raise ValueError("coset keys require delta(omega) != 0")
    m = abs(dw)
    k = math.floor(delta(ws, x) / m)
    step = 1 if dw < 0 else -1
    return add(ws, x, smul(ws, step * k, omega(ws)))


def coset_index(ws: WeightSystem, x: GroupElement, y: GroupElement) -> Optional[int]:
    """The integer k with x - y = k * omega, or None if x, y lie in distinct cosets.

    Only valid when delta(omega) != 0.
    """
    dw = delta_omega(ws)
    if dw == 0:
        raise ValueError("coset test requires delta(omega) != 0")
    diff = sub(ws, x, y)
    k = delta(ws, diff) / dw
    if k.denominator != 1:
        return None
    k = int(k)
    return k if smul(ws, k, omega(ws)) == diff else None


def general_position_ok(ws: WeightSystem) -> bool:
    """All minors of every size of the hyperplane coefficient block are nonzero."""
    if ws.lam is None:
        raise ValueError("no numeric hyperplane data to check")
    rows = ws.lam
    r = len(rows)
    c = ws.d + 1
    for k in range(1, min(r, c) + 1):
        for ri in itertools.combinations(range(r), k):
            for ci in itertools.combinations(range(c), k):
                sub_m = [[rows[i][j] for j in ci] for i in ri]
                if _det_fraction(sub_m) == 0:
                    return False
    return True


def _det_fraction(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    k = len(m)
    det = Fraction(1)
    for col in range(k):
        piv = next((r for r in range(col, k) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, k):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def generic_lambda(d: int, weights: Sequence[int], seed: int = 0) -> WeightSystem:
    """Weight system with numeric hyperplane rows in guaranteed general position.

    Rows are Vandermonde rows (1, t, t^2, ..., t^d) at distinct positive nodes,
    so every minor of every size is positive; the check is still run and the
    nodes are re-seeded on the (unreachable) failure path.
    """
    weights = tuple(weights)
    n = len(weights)
    if any(p < 2 for p in weights):
        raise ValueError("generic hyperplane data requires all weights >= 2")
    k = max(0, n - d - 1)
    offset = 0
    while True:
        nodes = [seed + offset + j + 2 for j in range(k)]
        rows = tuple(
            tuple(Fraction(t**j) for j in range(d + 1)) for t in nodes
        )
        ws = WeightSystem(d, weights, rows if k else ())
        if k == 0 or general_position_ok(ws):
            return ws
        offset += k + 1
