"""Verification harness: every invariant suite over the bundled catalog.

Each check has a stable id, a one-line statement of the identity it tests
(the anchor), and produces a concrete witness on failure.  The JSON report
is byte-deterministic: no timestamps, no environment data, stable ordering.
Advisory checks report failures without affecting the exit status.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import linalg
from .algebra import (
    LieAlgebra,
    Subalgebra,
    Subspace,
    bracket_span,
    centralizer,
    is_nilpotent,
    is_solvable,
    killing_form,
    killing_value,
    normalizer,
    subalgebra_closure,
)
from .cartan import (
    CartanResult,
    composite_csa,
    centralizer_in_radical,
    fitting_null,
    is_cartan_subalgebra,
    normalizer_chain_csa,
    regular_element_candidates,
    regular_element_csa,
)
from .catalog import (
    bundled_fixtures,
    bundled_models,
    load_algebra,
    load_verification_matrix,
    parse_vector,
)
from .errors import CartanKitError, JacobiViolation
from .levi import induced_algebra, levi_decomposition
from .powermap import (
    GroupDensityInstance,
    composition_holds,
    density_from_cartans,
    load_instance,
    load_triples,
    pk_surjective,
    powers_surjective_bruteforce,
    weakly_exponential_model,
)
from .radicals import (
    bruteforce_max_nilpotent_ideal,
    bruteforce_max_solvable_ideal,
    candidate_vector_pool,
    enumerate_ideal_candidates,
    is_semisimple,
    nilradical,
    radical,
)

BRUTEFORCE_RADICAL_DIM = 5
BRUTEFORCE_CARTAN_DIM = 4
POOL_LIMIT = 30


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    anchor: str
    passed: bool
    advisory: bool
    witness: dict | None


@dataclass(frozen=True)
class FixtureReport:
    fixture: str
    results: tuple[CheckResult, ...]


@dataclass(frozen=True)
class VerificationReport:
    fixtures: tuple[FixtureReport, ...]

    @property
    def summary(self) -> dict:
        total = sum(len(f.results) for f in self.fixtures)
        failed = sum(
            1 for f in self.fixtures for r in f.results if not r.passed and not r.advisory
        )
        reported = sum(
            1 for f in self.fixtures for r in f.results if not r.passed and r.advisory
        )
        return {
            "checks": total,
            "failed": failed,
            "advisory_reported": reported,
            "passed": total - failed - reported,
        }

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0


def _matrix_to_strings(matrix) -> list[list[str]]:
    return [[str(e) for e in row] for row in matrix]


def _subspace_witness(label: str, sub: Subspace) -> dict:
    return {label: _matrix_to_strings(sub.matrix)}


class _FixtureContext:
    """Shared per-fixture computations, evaluated once on demand."""

    def __init__(self, name: str, algebra: LieAlgebra, matrix: dict):
        self.name = name
        self.g = algebra
        self.matrix = matrix

    @cached_property
    def radical(self):
        return radical(self.g)

    @cached_property
    def nilradical(self):
        return nilradical(self.g)

    @cached_property
    def levi(self):
        return levi_decomposition(self.g)

    @cached_property
    def regular(self) -> CartanResult:
        return regular_element_csa(self.g)

    @cached_property
    def composite(self) -> CartanResult:
        return composite_csa(self.g)

    @cached_property
    def levi_csa(self) -> Subalgebra:
        decomp = self.levi
        if decomp.levi.dim == 0:
            return self.g.zero_subalgebra()
        frame = induced_algebra(decomp.levi)
        return Subalgebra(
            self.g, frame.to_ambient(regular_element_csa(frame.algebra).csa).matrix
        )

    @cached_property
    def radical_section(self) -> Subalgebra:
        return centralizer_in_radical(self.levi_csa, self.levi)

    @cached_property
    def section_csa(self) -> Subalgebra:
        z = self.radical_section
        if z.dim == 0:
            return self.g.zero_subalgebra()
        frame = induced_algebra(z)
        return Subalgebra(
            self.g, frame.to_ambient(regular_element_csa(frame.algebra).csa).matrix
        )

    @cached_property
    def ideal_candidates(self):
        return enumerate_ideal_candidates(self.g)

    @cached_property
    def pool_subalgebras(self) -> list[Subalgebra]:
        """Deterministic small pool of subalgebras for property sweeps."""
        vectors = candidate_vector_pool(self.g)
        seen: dict = {(): self.g.zero_subalgebra()}
        for v in vectors:
            sub = subalgebra_closure(self.g, [v])
            seen.setdefault(sub.matrix, sub)
        for a, b in itertools.combinations(vectors[: self.g.dim + 4], 2):
            if len(seen) >= POOL_LIMIT:
                break
            sub = subalgebra_closure(self.g, [a, b])
            seen.setdefault(sub.matrix, sub)
        return [seen[m] for m in sorted(seen)]

    @cached_property
    def chain_starts(self) -> dict:
        starts = self.matrix.get("chain_starts", {}).get(self.name, {})
        return {
            label: [parse_vector(row, self.g.dim) for row in rows]
            for label, rows in sorted(starts.items())
        }

    @cached_property
    def ideal_specs(self) -> dict:
        ideals = self.matrix.get("ideals", {}).get(self.name, {})
        return {
            label: [parse_vector(row, self.g.dim) for row in rows]
            for label, rows in sorted(ideals.items())
        }


# ---------------------------------------------------------------------------
# Per-fixture checks.  Each returns None on pass or a witness dict on failure.
# ---------------------------------------------------------------------------


def _check_jacobi(ctx: _FixtureContext):
    g = ctx.g
    vectors = [linalg.unit_vec(g.dim, i) for i in range(g.dim)]
    vectors += candidate_vector_pool(g)[g.dim : g.dim + 4]
    for x, y, z in itertools.combinations(vectors, 3):
        res = g.bracket(g.bracket(x, y), z)
        res = linalg.vec_add(res, g.bracket(g.bracket(y, z), x))
        res = linalg.vec_add(res, g.bracket(g.bracket(z, x), y))
        if not linalg.is_zero_vec(res):
            return {"triple": _matrix_to_strings([x, y, z]), "residual": [str(e) for e in res]}
    return None


def _check_normalizer_containments(ctx: _FixtureContext):
    for sub in ctx.pool_subalgebras:
        nrm = normalizer(sub)
        if not nrm.contains_subspace(sub):
            return _subspace_witness("subalgebra", sub)
        if not nrm.contains_subspace(centralizer(sub)):
            return _subspace_witness("subalgebra", sub)
    return None


def _check_nilpotent_normalizer_growth(ctx: _FixtureContext):
    for sub in ctx.pool_subalgebras:
        if sub.dim == ctx.g.dim:
            continue
        if normalizer(sub).dim <= sub.dim:
            return _subspace_witness("proper_subalgebra", sub)
    return None


def _check_canonical_form(ctx: _FixtureContext):
    g = ctx.g
    for sub in ctx.pool_subalgebras:
        if sub.dim == 0:
            continue
        rows = list(sub.matrix)
        scrambled = [linalg.vec_scale(Fraction(3, 2), r) for r in reversed(rows)]
        if len(rows) > 1:
            scrambled[0] = linalg.vec_add(scrambled[0], rows[-1])
        rebuilt = Subspace(g, scrambled)
        if rebuilt.matrix != sub.matrix:
            return {
                "original": _matrix_to_strings(sub.matrix),
                "rebuilt": _matrix_to_strings(rebuilt.matrix),
            }
    return None


def _check_killing_invariance(ctx: _FixtureContext):
    g = ctx.g
    form = killing_form(g)
    basis = [linalg.unit_vec(g.dim, i) for i in range(g.dim)]
    for x, y, z in itertools.product(basis, repeat=3):
        lhs = killing_value(form, g.bracket(x, y), z)
        rhs = killing_value(form, x, g.bracket(y, z))
        if lhs != rhs:
            return {"triple": _matrix_to_strings([x, y, z]), "lhs": str(lhs), "rhs": str(rhs)}
    return None


def _check_bruteforce_radical(ctx: _FixtureContext):
    oracle = bruteforce_max_solvable_ideal(ctx.g, ctx.ideal_candidates)
    if oracle.matrix != ctx.radical.matrix:
        return {
            "radical": _matrix_to_strings(ctx.radical.matrix),
            "bruteforce": _matrix_to_strings(oracle.matrix),
        }
    return None


def _check_bruteforce_nilradical(ctx: _FixtureContext):
    oracle = bruteforce_max_nilpotent_ideal(ctx.g, ctx.ideal_candidates)
    if oracle.matrix != ctx.nilradical.matrix:
        return {
            "nilradical": _matrix_to_strings(ctx.nilradical.matrix),
            "bruteforce": _matrix_to_strings(oracle.matrix),
        }
    return None


def _check_radical_containments(ctx: _FixtureContext):
    g, rad, nil = ctx.g, ctx.radical, ctx.nilradical
    if not rad.contains_subspace(nil):
        return _subspace_witness("nilradical", nil)
    if not nil.contains_subspace(bracket_span(g.whole(), rad)):
        return _subspace_witness("bracket_g_radical", bracket_span(g.whole(), rad))
    if not nil.contains_subspace(bracket_span(rad, rad)):
        return _subspace_witness("derived_radical", bracket_span(rad, rad))
    return None


def _check_semisimple_consistency(ctx: _FixtureContext):
    flag = is_semisimple(ctx.g)
    if flag != (ctx.radical.dim == 0):
        return {"is_semisimple": flag, "radical_dim": ctx.radical.dim}
    return None


def _check_levi_split(ctx: _FixtureContext):
    decomp = ctx.levi
    if decomp.levi.dim + decomp.radical.dim != ctx.g.dim:
        return {"levi_dim": decomp.levi.dim, "radical_dim": decomp.radical.dim}
    if decomp.levi.intersect(decomp.radical).dim != 0:
        return _subspace_witness("intersection", decomp.levi.intersect(decomp.radical))
    if decomp.levi.dim and not is_semisimple(induced_algebra(decomp.levi).algebra):
        return _subspace_witness("levi", decomp.levi)
    if decomp.radical.matrix != ctx.radical.matrix:
        return _subspace_witness("radical", decomp.radical)
    return None


def _check_levi_roundtrip(ctx: _FixtureContext):
    decomp = ctx.levi
    if decomp.levi.dim == 0:
        return None
    frame = induced_algebra(decomp.levi)
    inner = regular_element_csa(frame.algebra).csa
    back = frame.from_ambient(frame.to_ambient(inner))
    if back.matrix != inner.matrix:
        return {
            "inner": _matrix_to_strings(inner.matrix),
            "roundtrip": _matrix_to_strings(back.matrix),
        }
    return None


def _cartan_axiom_witness(result: CartanResult):
    if not is_cartan_subalgebra(result.csa):
        return _subspace_witness("csa", result.csa)
    if not result.trace or result.trace[-1].matrix != result.csa.matrix:
        return {"trace_length": len(result.trace)}
    return None


def _check_axioms_regular(ctx: _FixtureContext):
    return _cartan_axiom_witness(ctx.regular)


def _check_axioms_composite(ctx: _FixtureContext):
    return _cartan_axiom_witness(ctx.composite)


def _check_chain_recipe(ctx: _FixtureContext):
    g = ctx.g
    for label, rows in ctx.chain_starts.items():
        start = Subspace(g, rows)
        result = normalizer_chain_csa(g, start)
        witness = _cartan_axiom_witness(result)
        if witness is not None:
            witness["start"] = label
            return witness
        if len(result.trace) - 1 > g.dim:
            return {"start": label, "steps": len(result.trace) - 1}
        for earlier, later in zip(result.trace, result.trace[1:]):
            if later.dim <= earlier.dim or not later.contains_subspace(earlier):
                return {"start": label, "chain_dims": [s.dim for s in result.trace]}
        for step in result.trace:
            if not is_nilpotent(Subalgebra(g, step.matrix)):
                return {"start": label, "non_nilpotent_dim": step.dim}
        if not result.csa.contains_subspace(start):
            return {"start": label, "missing_start": True}
    # the default start (Fitting null of a regular element) must also work
    result = normalizer_chain_csa(g)
    return _cartan_axiom_witness(result)


def _check_rank_consistency(ctx: _FixtureContext):
    rank_dim = ctx.regular.csa.dim
    if ctx.composite.csa.dim != rank_dim:
        return {"regular_dim": rank_dim, "composite_dim": ctx.composite.csa.dim}
    if is_solvable(ctx.g.whole()):
        for label, rows in ctx.chain_starts.items():
            chain_dim = normalizer_chain_csa(ctx.g, Subspace(ctx.g, rows)).csa.dim
            if chain_dim != rank_dim:
                return {"start": label, "chain_dim": chain_dim, "regular_dim": rank_dim}
    return None


def _check_maximal_nilpotent(ctx: _FixtureContext):
    rank_dim = ctx.regular.csa.dim
    pool = ctx.pool_subalgebras
    nilpotent_pool = [s for s in pool if is_nilpotent(s)]
    for sub in nilpotent_pool:
        if normalizer(sub).matrix != sub.matrix:
            continue
        # a self-normalizing nilpotent subalgebra is a Cartan subalgebra:
        # nothing nilpotent in the pool may strictly contain it, and its
        # dimension must be the rank
        if sub.dim != rank_dim:
            return _subspace_witness("csa_candidate", sub) | {"dim": sub.dim, "rank": rank_dim}
        for other in nilpotent_pool:
            if other.dim > sub.dim and other.contains_subspace(sub):
                return _subspace_witness("larger_nilpotent", other)
    return None


def _check_selfcentralizing(ctx: _FixtureContext):
    csa = ctx.regular.csa
    if centralizer(csa).matrix != csa.matrix:
        return _subspace_witness("centralizer", centralizer(csa))
    return None


def _check_decomposition_radical(ctx: _FixtureContext):
    rad, nil = ctx.radical, ctx.nilradical
    z = ctx.radical_section
    if z.sum(nil).matrix != rad.matrix:
        return {
            "z_plus_n": _matrix_to_strings(z.sum(nil).matrix),
            "radical": _matrix_to_strings(rad.matrix),
        }
    hz = ctx.section_csa
    if hz.sum(nil).matrix != rad.matrix:
        return {
            "hz_plus_n": _matrix_to_strings(hz.sum(nil).matrix),
            "radical": _matrix_to_strings(rad.matrix),
        }
    return None


def _check_nilpotent_radical_form(ctx: _FixtureContext):
    h_levi = ctx.levi_csa
    z_nil = centralizer(h_levi).intersect(ctx.nilradical)
    expected = Subspace(ctx.g, h_levi.matrix + z_nil.matrix)
    if ctx.composite.csa.matrix != expected.matrix:
        return {
            "composite": _matrix_to_strings(ctx.composite.csa.matrix),
            "hs_plus_zn": _matrix_to_strings(expected.matrix),
        }
    return None


def _check_quotient_pairs(ctx: _FixtureContext):
    from .quotient import lift_cartan, push_cartan, quotient_algebra

    g = ctx.g
    for label, rows in ctx.ideal_specs.items():
        from .algebra import Ideal

        q = quotient_algebra(g, Ideal(g, rows))
        source_csa = ctx.composite.csa
        pushed = push_cartan(source_csa, q)  # raises on any axiom failure
        target_csa = regular_element_csa(q.target).csa
        lifted = lift_cartan(target_csa, q)
        if q.push_subspace(lifted).matrix != target_csa.matrix:
            return {"ideal": label, "stage": "lift-projection"}
        if lifted.dim < target_csa.dim:
            return {"ideal": label, "stage": "rank-inequality"}
        again = push_cartan(lift_cartan(pushed, q), q)
        if again.matrix != pushed.matrix:
            return {
                "ideal": label,
                "pushed": _matrix_to_strings(pushed.matrix),
                "roundtrip": _matrix_to_strings(again.matrix),
            }
    return None


def _check_subideal_csa(ctx: _FixtureContext):
    """Advisory: H ∩ I sits inside some Cartan subalgebra of I (searched)."""
    from .algebra import Ideal

    g = ctx.g
    limit = ctx.matrix.get("subideal_csa_dim_limit", 4)
    for label, rows in ctx.ideal_specs.items():
        ideal = Ideal(g, rows)
        if ideal.dim == 0 or ideal.dim > limit:
            continue
        frame = induced_algebra(ideal)
        meet = frame.from_ambient(ctx.composite.csa.intersect(ideal))
        found = False
        for x in itertools.islice(regular_element_candidates(ideal.dim), 200):
            component = fitting_null(frame.algebra, x)
            if not is_cartan_subalgebra(Subalgebra(frame.algebra, component.matrix)):
                continue
            if component.contains_subspace(meet):
                found = True
                break
        if not found:
            return {"ideal": label, "meet": _matrix_to_strings(meet.matrix)}
    return None


_FIXTURE_CHECKS = [
    ("core-jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0", _check_jacobi, False),
    (
        "core-normalizer-containments",
        "L <= N(L) and Z(L) <= N(L) for every pool subalgebra L",
        _check_normalizer_containments,
        False,
    ),
    (
        "core-canonical-form",
        "respanned subspaces reduce to identical canonical matrices",
        _check_canonical_form,
        False,
    ),
    (
        "core-killing-invariance",
        "k([x,y],z) = k(x,[y,z]) on basis triples",
        _check_killing_invariance,
        False,
    ),
    (
        "radicals-containments",
        "[g,R] <= N <= R and [R,R] <= N",
        _check_radical_containments,
        False,
    ),
    (
        "radicals-semisimple",
        "Killing form nondegenerate iff the radical vanishes",
        _check_semisimple_consistency,
        False,
    ),
    ("levi-split", "g = S (+) R with S semisimple and R the radical", _check_levi_split, False),
    (
        "levi-roundtrip",
        "induced-to-ambient coordinate maps compose to the identity",
        _check_levi_roundtrip,
        False,
    ),
    (
        "cartan-axioms-regular",
        "the regular-element construction is nilpotent and self-normalizing",
        _check_axioms_regular,
        False,
    ),
    (
        "cartan-axioms-composite",
        "H_S (+) H_{Z_R(H_S)} is nilpotent and self-normalizing",
        _check_axioms_composite,
        False,
    ),
    (
        "cartan-rank-consistency",
        "every construction returns a subalgebra of the rank dimension",
        _check_rank_consistency,
        False,
    ),
    (
        "cartan-decomposition-radical",
        "Z_R(H_S) + N = R and H_Z + N = R",
        _check_decomposition_radical,
        False,
    ),
    (
        "quotient-correspondence",
        "Cartan subalgebras push to and lift from every quotient in the matrix",
        _check_quotient_pairs,
        False,
    ),
    (
        "quotient-subideal-csa",
        "H ∩ I lies in a Cartan subalgebra of I (reported, not asserted)",
        _check_subideal_csa,
        True,
    ),
]

_CONDITIONAL_CHECKS = {
    "nilpotent-growth": (
        "core-nilpotent-normalizer-growth",
        "every proper subalgebra of a nilpotent algebra grows under N(.)",
        _check_nilpotent_normalizer_growth,
        False,
    ),
    "bruteforce-radical": (
        "radicals-bruteforce-radical",
        "the radical is the unique maximal solvable enumerated ideal",
        _check_bruteforce_radical,
        False,
    ),
    "bruteforce-nilradical": (
        "radicals-bruteforce-nilradical",
        "the nilradical is the unique maximal nilpotent enumerated ideal",
        _check_bruteforce_nilradical,
        False,
    ),
    "chain-recipe": (
        "cartan-axioms-chain",
        "the normalizer chain grows strictly to a Cartan subalgebra within dim steps",
        _check_chain_recipe,
        False,
    ),
    "maximal-nilpotent": (
        "cartan-maximal-nilpotent",
        "nilpotent self-normalizing pool subalgebras are maximal nilpotent of rank dimension",
        _check_maximal_nilpotent,
        False,
    ),
    "selfcentralizing": (
        "cartan-selfcentralizing",
        "a Cartan subalgebra of a semisimple algebra is its own centralizer",
        _check_selfcentralizing,
        False,
    ),
    "nilpotent-radical-form": (
        "cartan-nilpotent-radical-form",
        "with nilpotent radical the composite equals H_S (+) Z_N(H_S)",
        _check_nilpotent_radical_form,
        False,
    ),
}


def _run_check(check_id: str, anchor: str, fn, advisory: bool, ctx) -> CheckResult:
    try:
        witness = fn(ctx)
        passed = witness is None
    except CartanKitError as exc:
        passed = False
        witness = {"error": f"{type(exc).__name__}: {exc}"}
    return CheckResult(
        check_id=check_id, anchor=anchor, passed=passed, advisory=advisory, witness=witness
    )


def verify_fixture(name: str, algebra: LieAlgebra, matrix: dict) -> FixtureReport:
    ctx = _FixtureContext(name, algebra, matrix)
    results = [
        _run_check(cid, anchor, fn, advisory, ctx)
        for cid, anchor, fn, advisory in _FIXTURE_CHECKS
    ]

    def add(key):
        cid, anchor, fn, advisory = _CONDITIONAL_CHECKS[key]
        results.append(_run_check(cid, anchor, fn, advisory, ctx))

    whole = algebra.whole()
    if is_nilpotent(whole):
        add("nilpotent-growth")
    if algebra.dim <= BRUTEFORCE_RADICAL_DIM:
        add("bruteforce-radical")
        add("bruteforce-nilradical")
    if is_solvable(whole):
        add("chain-recipe")
        if algebra.dim <= BRUTEFORCE_CARTAN_DIM:
            add("maximal-nilpotent")
    if is_semisimple(algebra):
        add("selfcentralizing")
    if is_nilpotent(ctx.radical):
        add("nilpotent-radical-form")
    results.sort(key=lambda r: r.check_id)
    return FixtureReport(fixture=name, results=tuple(results))


# ---------------------------------------------------------------------------
# Power-map model checks (instance-scoped).
# ---------------------------------------------------------------------------


def _model_context(matrix: dict):
    cfg = matrix.get("powermap", {})
    models = bundled_models()
    instances = {
        name: load_instance(models[name]) for name in cfg.get("instances", [])
    }
    triples = load_triples(models[cfg.get("triples", "triples")])
    return instances, triples, int(cfg.get("k_max", 99)), int(cfg.get("bruteforce_order_limit", 10000))


def _check_model_bruteforce(instance: GroupDensityInstance, k_max: int, order_limit: int):
    for idx, model in enumerate(instance.cartan_models):
        total = 1
        for m in model.component_orders:
            total *= m
        if total > order_limit:
            continue
        for k in range(1, k_max + 1):
            fast = pk_surjective(model, k)
            slow = powers_surjective_bruteforce(model.component_orders, k) if model.component_orders else True
            if fast != slow:
                return {"class": idx, "k": k, "fast": fast, "bruteforce": slow}
    return None


def _check_model_k1(instance: GroupDensityInstance, k_max: int, order_limit: int):
    if not density_from_cartans(instance, 1):
        return {"k": 1}
    return None


def _check_model_multiplicativity(instance: GroupDensityInstance, k_max: int, order_limit: int):
    for idx, model in enumerate(instance.cartan_models):
        for k1 in range(1, 13):
            for k2 in range(1, 13):
                joint = pk_surjective(model, k1 * k2)
                split = pk_surjective(model, k1) and pk_surjective(model, k2)
                if joint != split:
                    return {"class": idx, "k1": k1, "k2": k2}
    return None


def _check_model_weak_exponentiality(instance: GroupDensityInstance, k_max: int, order_limit: int):
    verdict = weakly_exponential_model(instance, k_max=max(2, min(k_max, 20)))
    enumerated = all(density_from_cartans(instance, k) for k in range(1, 102))
    if verdict != enumerated:
        return {"verdict": verdict, "enumdensity_to_101": enumerated}
    return None


def _check_sl2r_parity(instance: GroupDensityInstance, k_max: int, order_limit: int):
    for k in range(1, k_max + 1):
        dense = density_from_cartans(instance, k)
        if dense != (k % 2 == 1):
            return {"k": k, "dense": dense}
    return None


_MODEL_CHECKS = [
    (
        "powermap-bruteforce",
        "gcd surjectivity criterion matches finite enumeration",
        _check_model_bruteforce,
    ),
    ("powermap-k1", "the first power map is onto every model", _check_model_k1),
    (
        "powermap-multiplicativity",
        "surjective for k1*k2 iff surjective for k1 and for k2",
        _check_model_multiplicativity,
    ),
    (
        "powermap-weak-exponentiality",
        "dense for every k iff no finite component anywhere",
        _check_model_weak_exponentiality,
    ),
]


def verify_models(matrix: dict) -> list[FixtureReport]:
    instances, triples, k_max, order_limit = _model_context(matrix)
    reports = []
    for name in sorted(instances):
        instance = instances[name]
        results = []
        for cid, anchor, fn in _MODEL_CHECKS:
            try:
                witness = fn(instance, k_max, order_limit)
                passed = witness is None
            except CartanKitError as exc:
                passed, witness = False, {"error": f"{type(exc).__name__}: {exc}"}
            results.append(
                CheckResult(check_id=cid, anchor=anchor, passed=passed, advisory=False, witness=witness)
            )
        if name == "sl2r-model":
            try:
                witness = _check_sl2r_parity(instance, k_max, order_limit)
                passed = witness is None
            except CartanKitError as exc:
                passed, witness = False, {"error": f"{type(exc).__name__}: {exc}"}
            results.append(
                CheckResult(
                    check_id="powermap-sl2r-parity",
                    anchor="the split Cartan class blocks exactly the even powers",
                    passed=passed,
                    advisory=False,
                    witness=witness,
                )
            )
        results.sort(key=lambda r: r.check_id)
        reports.append(FixtureReport(fixture=f"model:{name}", results=tuple(results)))

    witness = None
    for triple in triples:
        for k in range(1, k_max + 1):
            h = density_from_cartans(triple.subgroup, k)
            q = density_from_cartans(triple.quotient, k)
            g = density_from_cartans(triple.group, k)
            if not composition_holds(h, q, g):
                witness = {"triple": triple.name, "k": k, "h": h, "quotient": q, "group": g}
                break
        if witness:
            break
    reports.append(
        FixtureReport(
            fixture="model:triples",
            results=(
                CheckResult(
                    check_id="powermap-composition",
                    anchor="density on subgroup and quotient implies density on the group",
                    passed=witness is None,
                    advisory=False,
                    witness=witness,
                ),
            ),
        )
    )
    return reports


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def run_verification(paths=None, include_models: bool = True) -> VerificationReport:
    """Verify explicit fixture files, or the whole bundled catalog.

    A file that parses but violates the Jacobi identity counts as a failed
    check (the harness must flag corrupted catalogs), while an unreadable
    file stays an input error.
    """
    matrix = load_verification_matrix()
    reports = []
    if paths is None:
        for name, path in bundled_fixtures().items():
            reports.append(verify_fixture(name, load_algebra(path), matrix))
    else:
        for path in paths:
            try:
                algebra = load_algebra(path)
            except JacobiViolation as exc:
                reports.append(
                    FixtureReport(
                        fixture=str(path),
                        results=(
                            CheckResult(
                                check_id="load-jacobi",
                                anchor="structure constants satisfy the Jacobi identity",
                                passed=False,
                                advisory=False,
                                witness={
                                    "triple": list(exc.triple),
                                    "residual": [str(e) for e in exc.residual],
                                },
                            ),
                        ),
                    )
                )
                continue
            name = algebra.name or str(path)
            reports.append(verify_fixture(name, algebra, matrix))
        include_models = False
    if include_models:
        reports.extend(verify_models(matrix))
    reports.sort(key=lambda r: r.fixture)
    return VerificationReport(fixtures=tuple(reports))


def report_to_json(report: VerificationReport) -> str:
    payload = {
        "fixtures": [
            {
                "fixture": f.fixture,
                "results": [
                    {
                        "check": r.check_id,
                        "anchor": r.anchor,
                        "status": "pass" if r.passed else ("reported" if r.advisory else "fail"),
                        "witness": r.witness,
                    }
                    for r in f.results
                ],
            }
            for f in report.fixtures
        ],
        "summary": report.summary,
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def report_to_text(report: VerificationReport) -> str:
    lines = []
    for f in report.fixtures:
        for r in f.results:
            status = "PASS" if r.passed else ("REPORTED" if r.advisory else "FAIL")
            lines.append(f"{status:8s} {f.fixture:24s} {r.check_id}")
            if not r.passed and r.witness:
                lines.append(f"         anchor: {r.anchor}")
                lines.append(f"         witness: {json.dumps(r.witness, sort_keys=True)}")
    s = report.summary
    lines.append(
        f"{s['checks']} checks: {s['passed']} passed, {s['failed']} failed, "
        f"{s['advisory_reported']} advisory reported"
    )
    return "\n".join(lines)
