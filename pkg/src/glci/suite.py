"""Invariant batteries over a built-in grid of weight systems.

Each battery returns a list of CheckResult; the CLI `suite` subcommand and the
acceptance tests both run these.  The default grid takes every nondecreasing
weight tuple with entries in [2, 6], length at most 6 and product at most 240,
for ambient dimensions 1..3.  The matrix cross-check battery additionally caps
the Grothendieck rank at 80 so exact characteristic polynomials stay cheap,
and always includes a list of named fixture systems.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import algebra, atilde, classify, coxeter, grading, matfac
from .coxeter import IntPolynomial
from .grading import GroupElement, Trichotomy, WeightSystem


@dataclass(frozen=True)
class CheckResult:
    battery: str
    label: str
    ok: bool
    detail: str = ""


def weight_tuples(max_weight: int = 6, max_len: int = 6, max_product: int = 240):
    """Nondecreasing tuples with entries in [2, max_weight], product bounded."""
    out = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for tup in frontier:
            lo = tup[-1] if tup else 2
            for p in range(lo, max_weight + 1):
                cand = tup + (p,)
                if len(cand) <= max_len and math.prod(cand) <= max_product:
                    nxt.append(cand)
        out.extend(nxt)
        frontier = [t for t in nxt if len(t) < max_len]
    return sorted(set(out), key=lambda t: (len(t), t))


def default_grid() -> list[WeightSystem]:
    grid = []
    for d in (1, 2, 3):
        for tup in weight_tuples():
            grid.append(WeightSystem(d, tup))
    return grid


MATRIX_FIXTURES: tuple[tuple[int, tuple[int, ...]], ...] = (
    (1, (2, 3, 5)),
    (1, (2, 3, 6)),
    (1, (2, 3, 7)),
    (1, (2, 3, 7, 43)),
    (1, (3, 3, 3)),
    (2, (2, 3)),
    (2, (2, 2, 3, 4)),
    (2, (2, 3, 7)),
    (3, (2, 2)),
    (3, (2, 2, 2, 2, 2)),
)


def matrix_grid(max_rank: int = 80) -> list[WeightSystem]:
    seen = set()
    grid = []
    for ws in default_grid():
        if coxeter.k0_rank(ws) <= max_rank:
            seen.add((ws.d, ws.weights))
            grid.append(ws)
    for d, tup in MATRIX_FIXTURES:
        if (d, tup) not in seen:
            grid.append(WeightSystem(d, tup))
    return grid


def _bounded_elements(ws: WeightSystem, lo: int, hi: int) -> list[GroupElement]:
    return list(grading.elements_with_free_in(ws, lo, hi))


# ---------------------------------------------------------------- batteries


def battery_group_laws(grid: Optional[Sequence[WeightSystem]] = None) -> list[CheckResult]:
    """Group laws plus the three-way order characterization of the interval."""
    results = []
    for ws in grid if grid is not None else default_grid():
        rng = random.Random(1234 + ws.d * 1000 + hash(ws.weights) % 1000)
        elems = _bounded_elements(ws, -2 * ws.d, 2 * ws.d)
        ok = True
        detail = ""
        pool = elems if len(elems) <= 200 else rng.sample(elems, 200)
        for _ in range(40):
            x, y, z = (rng.choice(pool) for _ in range(3))
            if grading.add(ws, x, y) != grading.add(ws, y, x):
                ok, detail = False, f"commutativity fails at {x}, {y}"
                break
            lhs = grading.add(ws, grading.add(ws, x, y), z)
            rhs = grading.add(ws, x, grading.add(ws, y, z))
            if lhs != rhs:
                ok, detail = False, f"associativity fails at {x}, {y}, {z}"
                break
            if grading.add(ws, x, grading.negate(ws, x)) != grading.zero(ws):
                ok, detail = False, f"negate fails at {x}"
                break
            bumps = [rng.randint(-3, 3) for _ in ws.weights]
            denorm = [a + p * k for a, p, k in zip(x.torsion, ws.weights, bumps)]
            if grading.normal_form(ws, denorm, x.free - sum(bumps)) != x:
                ok, detail = False, f"normal form not left inverse at {x}"
                break
        if ok:
            w = grading.omega(ws)
            dc = grading.smul(ws, ws.d, grading.gen_c(ws))
            for x in elems:
                in_box = grading.is_nonneg(ws, x) and grading.leq(ws, x, dc)
                count_form = x.free >= 0 and (
                    x.free + sum(1 for a in x.torsion if a) <= ws.d
                )
                dual_form = grading.is_nonneg(ws, x) and not grading.is_nonneg(
                    ws, grading.add(ws, x, w)
                )
                if not (in_box == count_form == dual_form):
                    ok, detail = False, f"order characterization fails at {x}"
                    break
        results.append(CheckResult("group_laws", str(ws), ok, detail))
    return results


def battery_rank_identities(grid: Optional[Sequence[WeightSystem]] = None) -> list[CheckResult]:
    """|[0, d*c]| = Grothendieck rank = degree of the Coxeter polynomial;
    for n = d+2 the stable interval has size prod(p_i - 1)."""
    results = []
    for ws in grid if grid is not None else default_grid():
        box = algebra.canonical_interval(ws)
        rank = coxeter.k0_rank(ws)
        ok = len(box) == rank
        detail = f"|interval| {len(box)} vs rank {rank}"
        if ok:
            chi = coxeter.coxeter_polynomial(ws)
            ok = chi.degree == rank
            detail += f", deg chi {chi.degree}"
        base = grading.normalize_weights(ws)
        if ok and base.n == base.d + 2:
            cm = algebra.cm_interval(base)
            expected = math.prod(p - 1 for p in base.weights)
            ok = len(cm) == expected
            detail += f", |cm| {len(cm)} vs {expected}"
        results.append(CheckResult("rank_identities", str(ws), ok, detail if not ok else ""))
    return results


def battery_coset_structure(grid: Optional[Sequence[WeightSystem]] = None) -> list[CheckResult]:
    """Fano: [0, d*c] surjects onto the omega cosets; n <= d+1: bijectively."""
    results = []
    for ws in grid if grid is not None else default_grid():
        base = grading.normalize_weights(ws)
        if grading.trichotomy(base) != Trichotomy.FANO:
            continue
        data = grading.coset_data_mod_omega(base)
        box = algebra.canonical_interval(base)
        reps = {grading.coset_key(base, x) for x in box}
        ok = len(reps) == data.count
        detail = f"{len(reps)} cosets hit of {data.count}"
        if ok and base.n <= base.d + 1:
            ok = len(box) == data.count
            detail += f"; bijectivity |box| {len(box)}"
        results.append(CheckResult("coset_structure", str(ws), ok, detail if not ok else ""))
    return results


def piece_dim_bruteforce(ws: WeightSystem, x: GroupElement) -> int:
    """Independent count of basis monomials X^a * T^b in one graded degree:
    enumerate all candidate exponents and test the degree by normalization."""
    if x.free < 0:
        return 0
    splits = []
    for bars in itertools.combinations(range(x.free + ws.d), ws.d):
        cuts = (-1,) + bars + (x.free + ws.d,)
        splits.append(tuple(cuts[i + 1] - cuts[i] - 1 for i in range(ws.d + 1)))
    count = 0
    for a in itertools.product(*(range(p) for p in ws.weights)):
        for b in splits:
            if grading.normal_form(ws, a, sum(b)) == x:
                count += 1
    return count


def _piece_dim_census(ws: WeightSystem, max_free: int) -> dict[GroupElement, int]:
    """Counts of basis monomials X^a * T^b per degree, free part up to max_free."""
    census: dict[GroupElement, int] = {}
    splits_by_total = {
        f: [
            tuple(
                (cuts := (-1,) + bars + (f + ws.d,))[i + 1] - cuts[i] - 1
                for i in range(ws.d + 1)
            )
            for bars in itertools.combinations(range(f + ws.d), ws.d)
        ]
        for f in range(max_free + 1)
    }
    for a in itertools.product(*(range(p) for p in ws.weights)):
        for f, splits in splits_by_total.items():
            # every split is one monomial X^a * T^b; they share the degree
            x = grading.normal_form(ws, a, f)
            census[x] = census.get(x, 0) + len(splits)
    return census


def battery_piece_dims(grid: Optional[Sequence[WeightSystem]] = None) -> list[CheckResult]:
    results = []
    source = grid if grid is not None else default_grid()
    for ws in source:
        if math.prod(ws.weights) > 60:
            continue
        ok = True
        detail = ""
        max_free = ws.d + 2
        census = _piece_dim_census(ws, max_free)
        for x in _bounded_elements(ws, -2, max_free):
            expected = census.get(x, 0)
            if grading.piece_dim(ws, x) != expected:
                ok, detail = False, f"piece_dim mismatch at {x}"
                break
        if ok:
            w = grading.omega(ws)
            for x in _bounded_elements(ws, -1, 1):
                y = grading.zero(ws)
                lhs = grading.hom_ext_dim(ws, x, y, ws.d)
                rhs = grading.hom_ext_dim(ws, y, grading.add(ws, x, w), 0)
                if lhs != rhs:
                    ok, detail = False, f"duality symmetry fails at {x}"
                    break
        results.append(CheckResult("piece_dims", str(ws), ok, detail))
    return results


def battery_coxeter_cross_route(
    grid: Optional[Sequence[WeightSystem]] = None,
) -> list[CheckResult]:
    """Matrix route vs product route, per block and overall, plus unit constant term."""
    results = []
    for ws in grid if grid is not None else matrix_grid():
        ok = True
        detail = ""
        blocks = coxeter.omega_action_blocks(ws)
        base = grading.normalize_weights(ws)
        for subset, level, block in blocks:
            if level:
                continue  # blocks repeat across levels by construction
            char = coxeter.char_poly(block)
            expected = coxeter.phi(
                tuple(base.weights[i] for i in subset)
            ).monic_normalized()
            if char != expected:
                ok, detail = False, f"block {subset} char poly mismatch"
                break
        if ok:
            full = coxeter.char_poly(coxeter.omega_action_matrix(ws))
            chi = coxeter.coxeter_polynomial(ws)
            if full != chi and full != -chi:
                ok, detail = False, "full matrix char poly != +-coxeter polynomial"
            elif abs(full.constant_term()) != 1:
                ok, detail = False, f"constant term {full.constant_term()} not a unit"
        results.append(CheckResult("coxeter_cross_route", str(ws), ok, detail))
    return results


def battery_phi_telescoping(max_value: int = 6, max_size: int = 3) -> list[CheckResult]:
    results = []
    values = range(1, max_value + 1)
    for size in range(max_size + 1):
        for combo in itertools.combinations_with_replacement(values, size):
            prod = IntPolynomial([1])
            for sub_key, mult in coxeter._sub_multisets(combo):
                prod = prod * coxeter.phi(sub_key) ** mult
            if combo:
                L = math.lcm(*combo)
                expected = coxeter._one_minus_power(L, math.prod(combo) // L)
            else:
                expected = IntPolynomial([1, -1])
            ok = prod == expected
            results.append(
                CheckResult(
                    "phi_telescoping",
                    str(combo),
                    ok,
                    "" if ok else "product of phi factors mismatches closed form",
                )
            )
    return results


def battery_quiver_structure(
    grid: Optional[Sequence[WeightSystem]] = None,
) -> list[CheckResult]:
    """Interval quivers are acyclic with relation paths of length >= 2, the
    Cartan matrix transposes under negating the interval, and systems with
    n = d + 2 agree with their one-dimension-up partner."""
    results = []
    source = grid if grid is not None else default_grid()
    for ws in source:
        if coxeter.k0_rank(ws) > 30:
            continue
        ok = True
        detail = ""
        base = grading.normalize_weights(ws)
        box = algebra.canonical_interval(base)
        quiver = algebra.i_canonical_quiver(base, box)
        indeg = [0] * len(quiver.vertices)
        adj: dict[int, list[int]] = {}
        for a in quiver.arrows:
            indeg[a.target] += 1
            adj.setdefault(a.source, []).append(a.target)
        layer = [v for v in range(len(quiver.vertices)) if indeg[v] == 0]
        seen = 0
        while layer:
            v = layer.pop()
            seen += 1
            for t in adj.get(v, ()):
                indeg[t] -= 1
                if indeg[t] == 0:
                    layer.append(t)
        if seen != len(quiver.vertices):
            ok, detail = False, "interval quiver has a cycle"
        if ok and any(min(len(p) for p in rel.paths) < 2 for rel in quiver.relations):
            ok, detail = False, "relation path of length < 2"
        if ok:
            neg_box = [grading.negate(base, x) for x in box]
            cm = algebra.cartan_matrix(base, box)
            cm_neg = algebra.cartan_matrix(base, neg_box)
            if cm_neg != [list(col) for col in zip(*cm)]:
                ok, detail = False, "Cartan matrix not transposed under negation"
        if ok and base.n == base.d + 2:
            try:
                classify.knoerrer_partner(base)
            except AssertionError as exc:
                ok, detail = False, f"dimension-shift pairing: {exc}"
        results.append(CheckResult("quiver_structure", str(ws), ok, detail))
    return results


MF_FIXTURES: tuple[tuple[int, tuple[int, ...]], ...] = (
    (1, (2, 3, 5)),
    (1, (3, 3, 3)),
    (2, (2, 2, 3, 4)),
    (2, (2, 2, 2, 2)),
    (3, (2, 2, 2, 2, 2)),
)


def _mf_grid_fixtures(max_indices: int = 8) -> list[tuple[int, tuple[int, ...]]]:
    """Grid systems with n = d + 2 small enough for fully symbolic verification."""
    out = []
    for ws in default_grid():
        if ws.d > 2 or ws.n != ws.d + 2:
            continue
        if math.prod(p - 1 for p in ws.weights) <= max_indices:
            out.append((ws.d, ws.weights))
    return out


def battery_matrix_factorizations(
    fixtures: Optional[Sequence[tuple[int, tuple[int, ...]]]] = None,
) -> list[CheckResult]:
    if fixtures is None:
        fixtures = list(MF_FIXTURES)
        fixtures += [f for f in _mf_grid_fixtures() if f not in fixtures]
    results = []
    for d, weights in fixtures:
        ws = WeightSystem(d, weights)
        indices = matfac.mf_enumerate(ws)
        ok = len(indices) == matfac.expected_index_count(ws)
        detail = f"index count {len(indices)}"
        if ok:
            for index in indices:
                pair = matfac.mf_build(ws, index)
                if pair.size != 2 ** (d + 1):
                    ok, detail = False, f"{index.ell}: size {pair.size}"
                    break
                report = matfac.mf_verify(pair)
                if not report.ok:
                    ok, detail = False, f"{index.ell}: {report.failures[:2]}"
                    break
                minor = matfac.mf_minor_nonsingular(pair)
                if not minor.nonsingular:
                    ok, detail = False, f"{index.ell}: singular corner minor"
                    break
            else:
                detail = f"{len(indices)} factorizations verified"
        results.append(CheckResult("matrix_factorizations", str(ws), ok, detail))
    return results


ATILDE_FIXTURES: tuple[tuple[int, tuple[int, ...]], ...] = (
    (1, ()),
    (2, ()),
    (2, (2, 3, 4)),
    (3, (2, 2)),
)


def _atilde_grid_fixtures(max_rank: int = 20) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for ws in default_grid():
        base = grading.normalize_weights(ws)
        if base.n <= base.d + 1 and coxeter.k0_rank(ws) <= max_rank:
            out.append((ws.d, ws.weights))
    return out


def battery_atilde(
    fixtures: Optional[Sequence[tuple[int, tuple[int, ...]]]] = None,
) -> list[CheckResult]:
    if fixtures is None:
        fixtures = list(ATILDE_FIXTURES)
        fixtures += [f for f in _atilde_grid_fixtures() if f not in fixtures]
    results = []
    for d, weights in fixtures:
        ws = WeightSystem(d, weights)
        q = atilde.atilde_presentation(ws)
        report = atilde.verify_cut(q)
        count = grading.coset_data_mod_omega(grading.normalize_weights(ws)).count
        ok = (
            report.ok
            and atilde.noncut_matches_interval_quiver(q)
            and len(q.vertices) == count
        )
        detail = "" if ok else f"bad walks {report.bad_walks[:2]}"
        results.append(CheckResult("atilde_cut", str(ws), ok, detail))
    return results


GLDIM_FIXTURES: tuple[tuple[int, tuple[int, ...]], ...] = (
    (1, ()),
    (1, (2, 2, 2)),
    (1, (2, 3, 3)),
    (2, (2, 3)),
)

GLDIM_EXTRA: tuple[tuple[int, tuple[int, ...]], ...] = (
    (1, (2, 2, 2, 2)),
    (2, (2, 2, 2, 2)),
    (3, (2, 2)),
)


def battery_global_dimension(
    fixtures: Optional[Sequence[tuple[int, tuple[int, ...]]]] = None,
) -> list[CheckResult]:
    if fixtures is None:
        fixtures = GLDIM_FIXTURES + GLDIM_EXTRA
    results = []
    for d, weights in fixtures:
        ws = WeightSystem(d, weights)
        alg = algebra.structure_constants(ws, algebra.canonical_interval(ws))
        got = algebra.global_dimension(alg)
        expected = classify.gldim_canonical(ws)
        ok = got == expected and algebra.associativity_spot_check(alg)
        results.append(
            CheckResult(
                "global_dimension",
                str(ws),
                ok,
                "" if ok else f"oracle {got} vs formula {expected}",
            )
        )
    return results


def battery_orlov(grid: Optional[Sequence[WeightSystem]] = None) -> list[CheckResult]:
    results = []
    for ws in grid if grid is not None else default_grid():
        try:
            classify.orlov_rank_delta(ws)
            ok, detail = True, ""
        except AssertionError as exc:
            ok, detail = False, str(exc)
        results.append(CheckResult("orlov_rank", str(ws), ok, detail))
    return results


SLICE_FIXTURES: tuple[tuple[int, tuple[int, ...]], ...] = (
    (2, (2, 2, 3, 4)),
    (2, (2, 2, 2, 2)),
    (3, (2, 2, 2, 2, 2)),
)


def _slice_grid_fixtures(max_cosets: int = 150) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for ws in default_grid():
        base = grading.normalize_weights(ws)
        if base.n != base.d + 2 or sorted(base.weights)[:2] != [2, 2]:
            continue
        count = grading.coset_data_mod_omega(base).count
        if count is not None and count <= max_cosets:
            out.append((ws.d, ws.weights))
    return out


def battery_slices(
    fixtures: Optional[Sequence[tuple[int, tuple[int, ...]]]] = None,
) -> list[CheckResult]:
    if fixtures is None:
        fixtures = list(SLICE_FIXTURES)
        fixtures += [f for f in _slice_grid_fixtures() if f not in fixtures]
    results = []
    for d, weights in fixtures:
        ws = WeightSystem(d, weights)
        data = classify.main2_slice(ws)
        ok = data.report.ok
        results.append(
            CheckResult(
                "slices",
                str(ws),
                ok,
                "" if ok else f"report {data.report}",
            )
        )
    return results


def battery_cm_finiteness_scan(max_weight: int = 7) -> list[CheckResult]:
    """Membership in the finite-type list, re-derived case by case, versus cm_finite;
    plus consistency with the sufficient higher-finiteness list at n = d + 2."""
    results = []
    for d in (1, 2, 3):
        ok = True
        detail = ""
        for n in range(0, d + 4):
            for tup in itertools.combinations_with_replacement(
                range(2, max_weight + 1), n
            ):
                ws = WeightSystem(d, tup)
                got = classify.cm_finite(ws)
                if n <= d + 1:
                    expected = True
                elif n == d + 2:
                    twos = sum(1 for p in tup if p == 2)
                    rest = tuple(sorted(p for p in tup if p != 2))
                    expected = (
                        twos >= n - 1
                        or (twos == n - 2 and len(rest) == 1)
                        or (twos == n - 2 and rest in {(3, 3), (3, 4), (3, 5)})
                    )
                else:
                    expected = False
                if got != expected:
                    ok, detail = False, f"cm_finite({d},{tup}) = {got}"
                    break
                if (
                    n == d + 2
                    and got
                    and classify.d_cm_finite_sufficient(ws)
                    != classify.DCMFiniteness.SUFFICIENT_BY_HYPERSURFACE_LIST
                ):
                    ok, detail = False, f"finite type {tup} not in sufficient list"
                    break
            if not ok:
                break
        results.append(CheckResult("cm_finiteness_scan", f"d={d}", ok, detail))
    return results


def boxed_enumeration_oracle(
    d: int, n: int, cls: Trichotomy, box: int
) -> tuple[set[tuple[int, ...]], bool]:
    """Sporadic tuples found by scanning the full box p_i <= box, together with
    a completeness certificate: no non-family prefix leaves room for a weight
    beyond the box."""
    target = Fraction(n - d - 1)
    recip = {p: Fraction(1, p) for p in range(2, box + 1)}

    def family_covered(tup) -> bool:
        if cls != Trichotomy.FANO:
            return False
        total = Fraction(0)
        for k in range(min(len(tup), n)):
            if total >= target:
                return True
            total += recip[tup[k]]
        return False

    found = set()
    complete = True
    for tup in itertools.combinations_with_replacement(range(2, box + 1), n):
        total = sum(recip[p] for p in tup)
        in_class = total > target if cls == Trichotomy.FANO else total == target
        if in_class and not family_covered(tup):
            found.add(tup)
    for prefix in itertools.combinations_with_replacement(range(2, box + 1), n - 1):
        if family_covered(prefix):
            continue
        gap = target - sum(recip[p] for p in prefix)
        # A tail weight beyond the box would need 1/p > gap (Fano) or == gap.
        if gap > 0 and Fraction(1, box) > gap:
            complete = False
    return found, complete


def battery_enumeration() -> list[CheckResult]:
    """Families and sporadic tuples against an independent bounded box scan."""
    results = []
    fano = classify.enumerate_weight_systems(2, 4, Trichotomy.FANO)
    results.append(
        CheckResult(
            "enumeration",
            "d=2 n=4 Fano families",
            len(fano.infinite_families) == 7,
            f"{len(fano.infinite_families)} families",
        )
    )
    oracle, complete = boxed_enumeration_oracle(2, 4, Trichotomy.FANO, box=45)
    ok = complete and set(fano.sporadic) == oracle
    results.append(
        CheckResult(
            "enumeration",
            "d=2 n=4 Fano sporadic vs box scan",
            ok,
            f"{len(fano.sporadic)} sporadic, oracle {len(oracle)}, complete={complete}",
        )
    )
    cy_counts = {}
    cy_ok = True
    for n, box in ((4, 45), (5, 12), (6, 7)):
        cy = classify.enumerate_weight_systems(2, n, Trichotomy.CALABI_YAU)
        cy_counts[n] = len(cy.sporadic)
        oracle, complete = boxed_enumeration_oracle(2, n, Trichotomy.CALABI_YAU, box=box)
        cy_ok = cy_ok and complete and set(cy.sporadic) == oracle
    results.append(
        CheckResult(
            "enumeration",
            "d=2 Calabi-Yau totals",
            cy_ok and cy_counts == {4: 14, 5: 3, 6: 1},
            f"{cy_counts}",
        )
    )
    return results


_GRID_BATTERIES: dict[str, Callable[[Optional[Sequence[WeightSystem]]], list[CheckResult]]] = {
    "group_laws": battery_group_laws,
    "rank_identities": battery_rank_identities,
    "coset_structure": battery_coset_structure,
    "piece_dims": battery_piece_dims,
    "quiver_structure": battery_quiver_structure,
    "coxeter": battery_coxeter_cross_route,
    "orlov": battery_orlov,
}

_FIXTURE_BATTERIES: dict[str, tuple[Callable[..., list[CheckResult]], Callable[[WeightSystem], bool]]] = {
    "mf": (
        battery_matrix_factorizations,
        lambda ws: grading.normalize_weights(ws).n == ws.d + 2,
    ),
    "atilde": (
        battery_atilde,
        lambda ws: grading.normalize_weights(ws).n <= ws.d + 1,
    ),
    "gldim": (battery_global_dimension, lambda ws: True),
    "slices": (
        battery_slices,
        lambda ws: grading.normalize_weights(ws).n == ws.d + 2
        and sorted(grading.normalize_weights(ws).weights)[:2] == [2, 2],
    ),
}

_GLOBAL_BATTERIES: dict[str, Callable[[], list[CheckResult]]] = {
    "phi": battery_phi_telescoping,
    "cm_finite": battery_cm_finiteness_scan,
    "enumeration": battery_enumeration,
}

BATTERIES: dict[str, Callable[[], list[CheckResult]]] = {
    **{name: fn for name, fn in _GRID_BATTERIES.items()},
    **{name: fn for name, (fn, _) in _FIXTURE_BATTERIES.items()},
    **_GLOBAL_BATTERIES,
}


def run_batteries(
    only: Optional[str] = None, ws: Optional[WeightSystem] = None
) -> list[CheckResult]:
    """Run batteries matching `only`; with `ws` given, narrow every battery to
    that one weight system (skipping batteries whose preconditions it misses
    and the purely global enumerative ones)."""
    results = []
    for name, fn in _GRID_BATTERIES.items():
        if only and only not in name:
            continue
        results.extend(fn([ws]) if ws is not None else fn())
    for name, (fn, applies) in _FIXTURE_BATTERIES.items():
        if only and only not in name:
            continue
        if ws is not None:
            if applies(ws):
                results.extend(fn([(ws.d, ws.weights)]))
        else:
            results.extend(fn())
    for name, fn in _GLOBAL_BATTERIES.items():
        if only and only not in name:
            continue
        if ws is None:
            results.extend(fn())
    return results
