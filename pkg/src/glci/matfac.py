"""Explicit graded matrix factorizations of the weighted Fermat hypersurface.

For n = d + 2 the pair (M, N) below factors f = sum(lambda_i * X_i^{p_i}):
M * N = N * M = f * Id, with rows and columns indexed by odd and even subsets
of {1..n} and entries that are single signed monomials.  The lambda_i are kept
as formal variables so the identity is verified for every coefficient choice
at once.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .grading import (
    GroupElement,
    WeightSystem,
    normal_form,
    normalize_weights,
    sub,
)


class MultiPoly:
    """Sparse integer polynomial in X_1..X_n and lambda_1..lambda_n.

    Terms map exponent tuples of length 2n (X exponents then lambda
    exponents) to nonzero integer coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[dict[tuple[int, ...], int]] = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def monomial(cls, nvars: int, coeff: int, exps: dict[int, int]) -> "MultiPoly":
        e = [0] * (2 * nvars)
        for var, k in exps.items():
            e[var] = k
        return cls(nvars, {tuple(e): coeff})

    @classmethod
    def x_power(cls, nvars: int, i: int, k: int, coeff: int = 1) -> "MultiPoly":
        """coeff * X_i^k with 1-based i."""
        return cls.monomial(nvars, coeff, {i - 1: k})

    @classmethod
    def lam_x_power(cls, nvars: int, i: int, k: int, coeff: int = 1) -> "MultiPoly":
        """coeff * lambda_i * X_i^k with 1-based i."""
        return cls.monomial(nvars, coeff, {i - 1: k, nvars + i - 1: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    def substitute_zero(self, variables: Sequence[int]) -> "MultiPoly":
        """Set the given variable positions (0-based in the 2n layout) to zero."""
        keep = {
            e: c
            for e, c in self.terms.items()
            if all(e[v] == 0 for v in variables)
        }
        return MultiPoly(self.nvars, keep)

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, k in zip(point, e):
                if k:
                    term *= v**k
            total += term
        return total

    def is_single_monomial(self) -> bool:
        return len(self.terms) == 1

    def x_degree(self) -> dict[int, int]:
        """Exponents of the X variables when the polynomial is one monomial."""
        if not self.is_single_monomial():
            raise ValueError("not a monomial")
        e = next(iter(self.terms))
        return {i: e[i] for i in range(self.nvars) if e[i]}

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            factors = []
            for i in range(self.nvars):
                if e[i]:
                    factors.append(f"X{i+1}" + (f"^{e[i]}" if e[i] > 1 else ""))
            for i in range(self.nvars):
                if e[self.nvars + i]:
                    k = e[self.nvars + i]
                    factors.append(f"l{i+1}" + (f"^{k}" if k > 1 else ""))
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(body)
            elif c == -1 and factors:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}" if factors else str(c))
        return " + ".join(parts).replace("+ -", "- ")


def subsets_by_parity(n: int, parity: int) -> list[tuple[int, ...]]:
    """Subsets of {1..n} with |S| congruent to parity mod 2, by (size, lex)."""
    out = []
    for size in range(parity % 2, n + 1, 2):
        out.extend(itertools.combinations(range(1, n + 1), size))
    return out


@dataclass(frozen=True)
class MFIndex:
    """Exponent tuple with 1 <= ell_i <= p_i - 1 selecting one factorization."""

    ell: tuple[int, ...]


@dataclass(frozen=True)
class GradedMatrixPair:
    ws: WeightSystem
    index: MFIndex
    odd_subsets: tuple[tuple[int, ...], ...]
    even_subsets: tuple[tuple[int, ...], ...]
    m_rows: tuple[tuple[MultiPoly, ...], ...]  # odd rows x even columns
    n_rows: tuple[tuple[MultiPoly, ...], ...]  # even rows x odd columns
    shifts: dict[int, tuple[GroupElement, ...]]  # homological position -> labels

    @property
    def size(self) -> int:
        return len(self.odd_subsets)


def _position_sign(i: int, subset: tuple[int, ...]) -> int:
    return (-1) ** sum(1 for j in subset if j <= i)


def _entry(
    nvars: int,
    weights: tuple[int, ...],
    ell: tuple[int, ...],
    row: tuple[int, ...],
    col: tuple[int, ...],
) -> MultiPoly:
    rs, cs = set(row), set(col)
    if rs >= cs and len(rs - cs) == 1:
        (i,) = rs - cs
        return MultiPoly.x_power(nvars, i, ell[i - 1], _position_sign(i, row))
    if cs >= rs and len(cs - rs) == 1:
        (j,) = cs - rs
        return MultiPoly.lam_x_power(
            nvars, j, weights[j - 1] - ell[j - 1], _position_sign(j, col)
        )
    return MultiPoly.zero(nvars)


def shift_label(
    ws: WeightSystem, ell: tuple[int, ...], subset: tuple[int, ...], position: int
) -> GroupElement:
    """Degree shift ((|I| + a)/2) * c - sum of ell_i * x_i over the subset."""
    if (len(subset) + position) % 2:
        raise ValueError("subset size and homological position must match parity")
    raw = [0] * ws.n
    for i in subset:
        raw[i - 1] = -ell[i - 1]
    return normal_form(ws, raw, (len(subset) + position) // 2)


def mf_enumerate(ws: WeightSystem) -> list[MFIndex]:
    base = normalize_weights(ws)
    if base.n != base.d + 2:
        raise ValueError("matrix factorizations require n = d + 2")
    return [
        MFIndex(t)
        for t in itertools.product(*(range(1, p) for p in base.weights))
    ]


def mf_build(ws: WeightSystem, index: MFIndex) -> GradedMatrixPair:
    base = normalize_weights(ws)
    if base.n != base.d + 2:
        raise ValueError("matrix factorizations require n = d + 2")
    ell = tuple(index.ell)
    if len(ell) != base.n or any(
        not 1 <= l <= p - 1 for l, p in zip(ell, base.weights)
    ):
        raise ValueError(f"exponent index {ell} out of range for {base.weights}")
    n = base.n
    odd = tuple(subsets_by_parity(n, 1))
    even = tuple(subsets_by_parity(n, 0))
    m_rows = tuple(
        tuple(_entry(n, base.weights, ell, r, c) for c in even) for r in odd
    )
    n_rows = tuple(
        tuple(_entry(n, base.weights, ell, r, c) for c in odd) for r in even
    )
    shifts = {
        -1: tuple(shift_label(base, ell, s, -1) for s in odd),
        0: tuple(shift_label(base, ell, s, 0) for s in even),
        1: tuple(shift_label(base, ell, s, 1) for s in odd),
    }
    return GradedMatrixPair(base, MFIndex(ell), odd, even, m_rows, n_rows, shifts)


def hypersurface_poly(ws: WeightSystem) -> MultiPoly:
    base = normalize_weights(ws)
    total = MultiPoly.zero(base.n)
    for i, p in enumerate(base.weights, start=1):
        total = total + MultiPoly.lam_x_power(base.n, i, p)
    return total


def _mat_mul(a, b) -> list[list[MultiPoly]]:
    rows = len(a)
    inner = len(b)
    cols = len(b[0])
    nvars = a[0][0].nvars
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = MultiPoly.zero(nvars)
            for k in range(inner):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def _monomial_degree(ws: WeightSystem, poly: MultiPoly) -> GroupElement:
    exps = poly.x_degree()
    raw = [0] * ws.n
    for i, k in exps.items():
        raw[i] = k
    return normal_form(ws, raw, 0)


@dataclass(frozen=True)
class MFReport:
    identity_ok: bool
    homogeneity_ok: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.homogeneity_ok


def mf_verify(pair: GradedMatrixPair) -> MFReport:
    """Check M*N = N*M = f*Id symbolically and per-entry degree homogeneity."""
    ws = pair.ws
    f = hypersurface_poly(ws)
    failures = []
    identity_ok = True
    for name, prod, k in (
        ("M*N", _mat_mul(pair.m_rows, pair.n_rows), pair.size),
        ("N*M", _mat_mul(pair.n_rows, pair.m_rows), pair.size),
    ):
        for i in range(k):
            for j in range(k):
                expected = f if i == j else MultiPoly.zero(ws.n)
                if prod[i][j] != expected:
                    identity_ok = False
                    failures.append(f"{name} entry ({i},{j}) != expected")
    homogeneity_ok = True
    for name, rows, src_pos, src_sets, tgt_pos, tgt_sets in (
        ("M", pair.m_rows, -1, pair.odd_subsets, 0, pair.even_subsets),
        ("N", pair.n_rows, 0, pair.even_subsets, 1, pair.odd_subsets),
    ):
        src_shifts = pair.shifts[src_pos]
        tgt_shifts = pair.shifts[tgt_pos]
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                if entry.is_zero():
                    continue
                expected = sub(ws, tgt_shifts[j], src_shifts[i])
                if not entry.is_single_monomial():
                    homogeneity_ok = False
                    failures.append(f"{name} entry ({i},{j}) is not a monomial")
                    continue
                if _monomial_degree(ws, entry) != expected:
                    homogeneity_ok = False
                    failures.append(
                        f"{name} entry ({i},{j}) has degree "
                        f"{_monomial_degree(ws, entry)} != {expected}"
                    )
    return MFReport(identity_ok, homogeneity_ok, tuple(failures))


def _symbolic_det(matrix: list[list[MultiPoly]]) -> MultiPoly:
    """Cofactor expansion along rows, memoized on the remaining column set."""
    k = len(matrix)
    nvars = matrix[0][0].nvars if k else 0
    cache: dict[tuple[int, ...], MultiPoly] = {}

    def rec(row: int, cols: tuple[int, ...]) -> MultiPoly:
        if not cols:
            return MultiPoly.monomial(nvars, 1, {})
        got = cache.get(cols)
        if got is not None:
            return got
        acc = MultiPoly.zero(nvars)
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            rest = cols[:pos] + cols[pos + 1 :]
            minor = rec(row + 1, rest)
            term = entry * minor
            acc = acc + (term if pos % 2 == 0 else -term)
        cache[cols] = acc
        return acc

    return rec(0, tuple(range(k)))


@dataclass(frozen=True)
class MinorReport:
    nonsingular: bool
    method: str
    degenerate_is_monomial_or_zero: Optional[bool]
    attempts: int


def _corner_minor(pair: GradedMatrixPair) -> list[list[MultiPoly]]:
    n = pair.ws.n
    rows = [k for k, s in enumerate(pair.even_subsets) if n not in s]
    cols = [k for k, s in enumerate(pair.odd_subsets) if n not in s]
    return [[pair.n_rows[r][c] for c in cols] for r in rows]


def mf_minor_nonsingular(pair: GradedMatrixPair, max_exact_size: int = 8) -> MinorReport:
    """Nonvanishing of det of the N-submatrix on subsets avoiding the last index.

    Exact symbolic determinant up to `max_exact_size`; beyond that, evaluation
    at deterministic pseudo-random rational points with retries (a nonzero
    value proves nonvanishing; all-zero values after the retries report a
    negative without proof).
    """
    minor = _corner_minor(pair)
    k = len(minor)
    nvars = pair.ws.n
    if k <= max_exact_size:
        det = _symbolic_det(minor)
        lam_vars = list(range(nvars, 2 * nvars - 1))  # lambda_1 .. lambda_{n-1}
        degenerate = det.substitute_zero(lam_vars)
        deg_flag = degenerate.is_zero() or (
            degenerate.is_single_monomial()
            and abs(next(iter(degenerate.terms.values()))) == 1
        )
        return MinorReport(not det.is_zero(), "symbolic", deg_flag, 1)
    for attempt in range(1, 6):
        rng = random.Random(10_007 * attempt + 17)
        point = [Fraction(rng.randint(1, 10**6), rng.randint(1, 97)) for _ in range(2 * nvars)]
        values = [[entry.evaluate(point) for entry in row] for row in minor]
        if _numeric_det(values) != 0:
            return MinorReport(True, "evaluation", None, attempt)
    return MinorReport(False, "evaluation", None, 5)


def _numeric_det(m: list[list[Fraction]]) -> Fraction:
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


def expected_index_count(ws: WeightSystem) -> int:
    base = normalize_weights(ws)
    return math.prod(p - 1 for p in base.weights)
