"""Quiver presentations and exact linear algebra for interval endomorphism algebras.

An interval algebra A^I packs the graded pieces R_{x-y} for x, y in a finite
convex subset I of the grading group into one finite dimensional algebra.
This module builds its quiver presentation, its multiplication table over
exact rationals, and a projective-resolution oracle for the global dimension.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .grading import (
    GroupElement,
    WeightSystem,
    add,
    general_position_ok,
    generic_lambda,
    gen_c,
    interval,
    leq,
    normalize_weights,
    omega,
    piece_dim,
    presentation,
    presentation_weights,
    smul,
    sub,
    zero,
)

Coefficient = Union[Fraction, str]


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    label: int  # 1-based generator index in the presentation


@dataclass(frozen=True)
class Relation:
    """Formal sum of paths; each path is a tuple of arrow indices, source to target."""

    coeffs: tuple[Coefficient, ...]
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[GroupElement, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...]
    ws: Optional[WeightSystem] = field(default=None, compare=False)


def check_convex(ws: WeightSystem, elements: Sequence[GroupElement]) -> bool:
    members = set(elements)
    for x in members:
        for z in members:
            if x == z or not leq(ws, x, z):
                continue
            for y in interval(ws, x, z):
                if y not in members:
                    return False
    return True


def _symbolic_coeff(i: int, j: int) -> str:
    return f"-lambda[{i}][{j}]"


def i_canonical_quiver(
    ws: WeightSystem, elements: Sequence[GroupElement]
) -> Quiver:
    """Quiver with relations presenting A^I for a finite convex I.

    Arrows x -> x + x_i for every presentation generator; commutativity
    relations wherever both length-two paths exist, and one hypersurface
    relation per non-coordinate hyperplane at every x with x + c in I.
    Relation coefficients stay symbolic unless the weight system carries
    numeric hyperplane rows.
    """
    base, gens = presentation(ws)
    verts = tuple(dict.fromkeys(elements))
    if len(verts) != len(elements):
        raise ValueError("interval contains repeated vertices")
    vindex = {v: i for i, v in enumerate(verts)}
    if not check_convex(base, verts):
        raise ValueError("vertex set is not convex")
    n_pres = len(gens)
    pres_weights = presentation_weights(ws)

    arrows = []
    arrow_index: dict[tuple[int, int], int] = {}
    for label in range(1, n_pres + 1):
        g = gens[label - 1]
        for vi, v in enumerate(verts):
            t = add(base, v, g)
            ti = vindex.get(t)
            if ti is not None:
                arrow_index[(label, vi)] = len(arrows)
                arrows.append(Arrow(vi, ti, label))

    def path(start: int, labels: Sequence[int]) -> Optional[tuple[int, ...]]:
        out = []
        cur = start
        for lab in labels:
            ai = arrow_index.get((lab, cur))
            if ai is None:
                return None
            out.append(ai)
            cur = arrows[ai].target
        return tuple(out)

    relations = []
    for i, j in itertools.combinations(range(1, n_pres + 1), 2):
        for vi in range(len(verts)):
            pij = path(vi, (i, j))
            pji = path(vi, (j, i))
            if pij is not None and pji is not None:
                relations.append(
                    Relation((Fraction(1), Fraction(-1)), (pij, pji))
                )
    for i in range(base.d + 2, n_pres + 1):
        p_i = pres_weights[i - 1]
        row = base.lam[i - base.d - 2] if base.lam is not None else None
        for vi in range(len(verts)):
            main = path(vi, (i,) * p_i)
            if main is None:
                continue
            coeffs: list[Coefficient] = [Fraction(1)]
            paths = [main]
            for j in range(1, base.d + 2):
                pj = path(vi, (j,) * pres_weights[j - 1])
                if pj is None:
                    raise AssertionError("convexity guarantees comparison paths")
                coeffs.append(-row[j - 1] if row is not None else _symbolic_coeff(i, j - 1))
                paths.append(pj)
            relations.append(Relation(tuple(coeffs), tuple(paths)))
    return Quiver(verts, tuple(arrows), tuple(relations), ws=base)


def cm_interval(ws: WeightSystem) -> list[GroupElement]:
    """The interval [0, d*c + 2*omega] indexing the stable tilting summands."""
    base = normalize_weights(ws)
    top = add(base, smul(base, base.d, gen_c(base)), smul(base, 2, omega(base)))
    return interval(base, zero(base), top)


def canonical_interval(ws: WeightSystem) -> list[GroupElement]:
    base = normalize_weights(ws)
    return interval(base, zero(base), smul(base, base.d, gen_c(base)))


def cartan_matrix(ws: WeightSystem, elements: Sequence[GroupElement]) -> list[list[int]]:
    base = normalize_weights(ws)
    return [
        [piece_dim(base, sub(base, x, y)) for y in elements] for x in elements
    ]


@dataclass(frozen=True)
class StructureAlgebra:
    """Multiplication table of A^I on its monomial basis over exact rationals.

    Basis elements are triples (source vertex, target vertex, exponent tuple)
    where the exponents encode a monomial of degree source - target in the
    normalized polynomial presentation of R.  The table maps a pair of basis
    positions to a sparse combination of basis positions.
    """

    ws: WeightSystem
    vertices: tuple[GroupElement, ...]
    pres_weights: tuple[int, ...]
    lam_rows: tuple[tuple[Fraction, ...], ...]
    basis: tuple[tuple[int, int, tuple[int, ...]], ...]
    index: dict[tuple[int, int, tuple[int, ...]], int] = field(compare=False)
    by_pair: dict[tuple[int, int], tuple[int, ...]] = field(compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def idempotent(self, vertex: int) -> int:
        return self.index[(vertex, vertex, (0,) * len(self.pres_weights))]

    def radical_positions(self) -> list[int]:
        # Off-diagonal span: the vertex poset is directed, so this is the radical.
        return [k for k, (x, y, _) in enumerate(self.basis) if x != y]

    def reduce_monomial(self, exps: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
        """Rewrite X_i^{p_i} for non-coordinate i until exponents are in range."""
        d = self.ws.d
        pending = {tuple(exps): Fraction(1)}
        done: dict[tuple[int, ...], Fraction] = {}
        while pending:
            nxt: dict[tuple[int, ...], Fraction] = {}
            for e, coeff in pending.items():
                hot = next(
                    (
                        i
                        for i in range(d + 1, len(e))
                        if e[i] >= self.pres_weights[i]
                    ),
                    None,
                )
                if hot is None:
                    done[e] = done.get(e, Fraction(0)) + coeff
                    continue
                row = self.lam_rows[hot - d - 1]
                for j in range(d + 1):
                    if row[j] == 0:
                        continue
                    e2 = list(e)
                    e2[hot] -= self.pres_weights[hot]
                    e2[j] += self.pres_weights[j]
                    key = tuple(e2)
                    nxt[key] = nxt.get(key, Fraction(0)) + coeff * row[j]
            pending = {k: v for k, v in nxt.items() if v}
        return {k: v for k, v in done.items() if v}

    def multiply(self, a: int, b: int) -> dict[int, Fraction]:
        """Product of basis elements a * b, zero unless the middle vertices match."""
        xa, ya, ea = self.basis[a]
        xb, yb, eb = self.basis[b]
        if ya != xb:
            return {}
        out: dict[int, Fraction] = {}
        for e, coeff in self.reduce_monomial(
            [u + v for u, v in zip(ea, eb)]
        ).items():
            pos = self.index.get((xa, yb, e))
            if pos is None:
                raise AssertionError("product fell outside the monomial basis")
            out[pos] = out.get(pos, Fraction(0)) + coeff
        return {k: v for k, v in out.items() if v}


def _graded_monomials(
    d: int, pres_weights: tuple[int, ...], degree: GroupElement
) -> list[tuple[int, ...]]:
    """Basis monomials of R in a given degree, exponent-lex order.

    Exponents of non-coordinate variables are pinned by the torsion normal
    form; coordinate variables i <= d+1 range over a_i + p_i * b_i with the
    b_i summing to the free coordinate.
    """
    if degree.free < 0:
        return []
    n_pres = len(pres_weights)
    tors = degree.torsion + (0,) * (n_pres - len(degree.torsion))
    out = []
    for split in _compositions(degree.free, d + 1):
        exps = [tors[i] + pres_weights[i] * split[i] for i in range(d + 1)]
        exps += [tors[i] for i in range(d + 1, n_pres)]
        out.append(tuple(exps))
    out.sort()
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def structure_constants(
    ws: WeightSystem,
    elements: Sequence[GroupElement],
    lam: Optional[Sequence[Sequence[Fraction]]] = None,
    seed: int = 0,
) -> StructureAlgebra:
    """Build A^I with numeric hyperplane coefficients in general position."""
    base, _ = presentation(ws)
    if not check_convex(base, elements):
        raise ValueError("vertex set is not convex")
    pres_weights = presentation_weights(ws)
    need_rows = max(0, base.n - base.d - 1)
    if need_rows:
        if lam is not None:
            numeric = WeightSystem(
                base.d, base.weights, tuple(tuple(Fraction(v) for v in r) for r in lam)
            )
        elif base.lam is not None:
            numeric = base
        else:
            numeric = generic_lambda(base.d, base.weights, seed=seed)
        if not general_position_ok(numeric):
            raise ValueError("hyperplane coefficients are not in general position")
        lam_rows = numeric.lam
    else:
        lam_rows = ()

    verts = tuple(dict.fromkeys(elements))
    basis: list[tuple[int, int, tuple[int, ...]]] = []
    by_pair: dict[tuple[int, int], list[int]] = {}
    for xi, x in enumerate(verts):
        for yi, y in enumerate(verts):
            monos = _graded_monomials(base.d, pres_weights, sub(base, x, y))
            if monos:
                by_pair[(xi, yi)] = list(
                    range(len(basis), len(basis) + len(monos))
                )
                basis.extend((xi, yi, m) for m in monos)
    alg = StructureAlgebra(
        ws=base,
        vertices=verts,
        pres_weights=pres_weights,
        lam_rows=lam_rows,
        basis=tuple(basis),
        index={b: k for k, b in enumerate(basis)},
        by_pair={k: tuple(v) for k, v in by_pair.items()},
    )
    expected = sum(piece_dim(base, sub(base, x, y)) for x in verts for y in verts)
    if alg.dim != expected:
        raise AssertionError("basis size disagrees with the Cartan count")
    return alg


def associativity_spot_check(alg: StructureAlgebra, trials: int = 60, seed: int = 7) -> bool:
    rng = random.Random(seed)
    dim = alg.dim
    for _ in range(trials):
        a, b, c = (rng.randrange(dim) for _ in range(3))
        left = _combine(alg, alg.multiply(a, b), c, right=True)
        right = _combine(alg, alg.multiply(b, c), a, right=False)
        if left != right:
            return False
    return True


def _combine(alg, partial: dict[int, Fraction], other: int, right: bool):
    out: dict[int, Fraction] = {}
    for pos, coeff in partial.items():
        prod = alg.multiply(pos, other) if right else alg.multiply(other, pos)
        for q, v in prod.items():
            out[q] = out.get(q, Fraction(0)) + coeff * v
    return {k: v for k, v in out.items() if v}


class _FreeModule:
    """Direct sum of projectives A e_{v_i}, graded by target vertex of basis triples."""

    def __init__(self, alg: StructureAlgebra, summands: Sequence[int]):
        self.alg = alg
        self.summands = tuple(summands)
        self.slot: dict[int, list[tuple[int, int]]] = {
            v: [] for v in range(len(alg.vertices))
        }
        for comp, v in enumerate(self.summands):
            for x in range(len(alg.vertices)):
                for pos in alg.by_pair.get((x, v), ()):
                    self.slot[x].append((comp, pos))
        self.offset: dict[int, dict[tuple[int, int], int]] = {
            x: {key: k for k, key in enumerate(pairs)}
            for x, pairs in self.slot.items()
        }

    def dim_at(self, vertex: int) -> int:
        return len(self.slot[vertex])

    def act(self, a: int, vertex: int, column: list[Fraction]) -> tuple[int, list[Fraction]]:
        """Left action of basis element a on a column supported at `vertex`."""
        xa, ya, _ = self.alg.basis[a]
        if ya != vertex:
            raise ValueError("action source vertex mismatch")
        out = [Fraction(0)] * self.dim_at(xa)
        for k, coeff in enumerate(column):
            if not coeff:
                continue
            comp, pos = self.slot[vertex][k]
            for q, v in self.alg.multiply(a, pos).items():
                out[self.offset[xa][(comp, q)]] += coeff * v
        return xa, out


def _column_space(columns: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced basis of the span; echelon over Q."""
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for col in columns:
        col = col[:]
        for b, piv in zip(basis, pivots):
            if col[piv]:
                f = col[piv] / b[piv]
                for i, v in enumerate(b):
                    if v:
                        col[i] -= f * v
        piv = next((i for i, v in enumerate(col) if v), None)
        if piv is not None:
            basis.append(col)
            pivots.append(piv)
    return basis


def _in_span(basis: list[list[Fraction]], col: list[Fraction]) -> bool:
    col = col[:]
    for b in basis:
        piv = next(i for i, v in enumerate(b) if v)
        if col[piv]:
            f = col[piv] / b[piv]
            for i, v in enumerate(b):
                if v:
                    col[i] -= f * v
    return all(v == 0 for v in col)


def _nullspace(matrix: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Kernel basis of the column-indexed map given by `matrix` (rows of length ncols)."""
    m = [row[:] for row in matrix]
    nrows = len(m)
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [v - f * w for v, w in zip(m[i], m[r])]
        pivot_of_col[c] = r
        r += 1
        if r == nrows:
            break
    free_cols = [c for c in range(ncols) if c not in pivot_of_col]
    out = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for c, row in pivot_of_col.items():
            vec[c] = -m[row][fc]
        out.append(vec)
    return out


def _radical_submodule(alg, free: _FreeModule, cols_by_vertex):
    """Columns spanning J*M from columns spanning M, echelonized per vertex."""
    nv = len(alg.vertices)
    rad_cols = {x: [] for x in range(nv)}
    radical = alg.radical_positions()
    rad_by_source: dict[int, list[int]] = {}
    for a in radical:
        rad_by_source.setdefault(alg.basis[a][1], []).append(a)
    for v in range(nv):
        for col in cols_by_vertex[v]:
            for a in rad_by_source.get(v, ()):
                target, image = free.act(a, v, col)
                if any(image):
                    rad_cols[target].append(image)
    return {x: _column_space(cols) for x, cols in rad_cols.items()}


def _minimal_generators(alg, free, cols_by_vertex):
    """Homogeneous columns of M lifting a basis of M / J*M."""
    rad = _radical_submodule(alg, free, cols_by_vertex)
    gens = []
    for v in range(len(alg.vertices)):
        span = [b[:] for b in rad[v]]
        for col in cols_by_vertex[v]:
            if not _in_span(span, col):
                gens.append((v, col))
                span = _column_space(span + [col])
    return gens


def _cover_kernel(alg, free, gens):
    """Kernel of the projective cover of the module generated by `gens`."""
    cover = _FreeModule(alg, [v for v, _ in gens])
    kernel_cols = {x: [] for x in range(len(alg.vertices))}
    for x in range(len(alg.vertices)):
        nc = cover.dim_at(x)
        if nc == 0:
            continue
        rows = [[Fraction(0)] * nc for _ in range(free.dim_at(x))]
        for k, (comp, pos) in enumerate(cover.slot[x]):
            v, col = gens[comp]
            tgt, image = free.act(pos, v, col)
            if tgt != x:
                raise AssertionError("graded cover map mismatch")
            for i, val in enumerate(image):
                rows[i][k] = val
        for vec in _nullspace(rows, nc):
            kernel_cols[x].append(vec)
    return cover, kernel_cols


def _module_is_zero(cols_by_vertex) -> bool:
    return all(not cols for cols in cols_by_vertex.values())


def minimal_resolution_profile(alg: StructureAlgebra, vertex: int) -> list[list[int]]:
    """Vertex indices of the projective cover summands in each homological
    degree of the minimal resolution of the simple at `vertex`."""
    nv = len(alg.vertices)
    free = _FreeModule(alg, [vertex])
    cols = {x: [] for x in range(nv)}
    for x in range(nv):
        for pos in alg.by_pair.get((x, vertex), ()):
            if x == vertex:
                continue
            col = [Fraction(0)] * free.dim_at(x)
            col[free.offset[x][(0, pos)]] = Fraction(1)
            cols[x].append(col)
    cols = {x: _column_space(c) for x, c in cols.items()}
    profile = [[vertex]]
    while not _module_is_zero(cols):
        gens = _minimal_generators(alg, free, cols)
        profile.append([v for v, _ in gens])
        free, cols = _cover_kernel(alg, free, gens)
        cols = {x: _column_space(c) for x, c in cols.items()}
    return profile


def global_dimension(alg: StructureAlgebra) -> int:
    """Max projective-resolution length over simples, by radical-kernel linear algebra."""
    return max(
        len(minimal_resolution_profile(alg, v)) - 1
        for v in range(len(alg.vertices))
    )


def cm_tensor_check(ws: WeightSystem) -> bool:
    """For n = d+2: the stable interval quiver is the product of equioriented
    type-A line quivers under the coordinate identification, with exactly the
    commutativity relations."""
    base = normalize_weights(ws)
    if base.n != base.d + 2:
        raise ValueError("tensor decomposition check requires n = d + 2")
    box = cm_interval(base)
    quiver = i_canonical_quiver(base, box)
    coords = {}
    for vi, v in enumerate(quiver.vertices):
        if v.free != 0 or any(
            a > p - 2 for a, p in zip(v.torsion, base.weights)
        ):
            return False
        coords[vi] = v.torsion
    if len(set(coords.values())) != len(box) or len(box) != math.prod(
        p - 1 for p in base.weights
    ):
        return False
    expected_arrows = set()
    for tup in itertools.product(*(range(p - 1) for p in base.weights)):
        for i, p in enumerate(base.weights):
            if tup[i] + 1 <= p - 2:
                bumped = tuple(
                    a + 1 if k == i else a for k, a in enumerate(tup)
                )
                expected_arrows.add((tup, bumped, i + 1))
    actual_arrows = {
        (coords[a.source], coords[a.target], a.label) for a in quiver.arrows
    }
    if actual_arrows != expected_arrows:
        return False
    expected_relations = set()
    for tup in itertools.product(*(range(p - 1) for p in base.weights)):
        for i, j in itertools.combinations(range(len(base.weights)), 2):
            if tup[i] + 1 <= base.weights[i] - 2 and tup[j] + 1 <= base.weights[j] - 2:
                expected_relations.add((tup, i + 1, j + 1))
    actual_relations = set()
    for rel in quiver.relations:
        if len(rel.paths) != 2 or sorted(rel.coeffs) != [Fraction(-1), Fraction(1)]:
            return False
        path = rel.paths[0]
        if len(path) != 2:
            return False
        first = quiver.arrows[path[0]]
        second = quiver.arrows[path[1]]
        labels = tuple(sorted((first.label, second.label)))
        actual_relations.add((coords[first.source], labels[0], labels[1]))
    return actual_relations == expected_relations


def cm_quiver_signature(ws: WeightSystem):
    """Canonical form of the stable interval quiver, indexed by the weights >= 3.

    Weight-2 coordinates are invisible in the interval [0, d*c + 2*omega]
    (those torsion entries are pinned to 0 and their generators never act),
    so two systems whose >=3 weights agree as multisets in order produce
    equal signatures.  Used for the dimension-shift pairing check.
    """
    base = normalize_weights(ws)
    if base.n != base.d + 2:
        raise ValueError("signature is defined for n = d + 2")
    quiver = i_canonical_quiver(base, cm_interval(base))
    active = [i for i, p in enumerate(base.weights) if p >= 3]
    relabel = {i + 1: k + 1 for k, i in enumerate(active)}

    def vkey(vi: int):
        return tuple(quiver.vertices[vi].torsion[i] for i in active)

    arrows = sorted(
        (vkey(a.source), vkey(a.target), relabel[a.label]) for a in quiver.arrows
    )
    rels = []
    for rel in quiver.relations:
        paths = []
        for path in rel.paths:
            labels = tuple(relabel[quiver.arrows[ai].label] for ai in path)
            paths.append((vkey(quiver.arrows[path[0]].source), labels))
        rels.append(tuple(sorted(paths)))
    return arrows, sorted(rels)
