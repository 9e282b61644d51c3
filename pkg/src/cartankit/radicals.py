"""Radical, nilradical, and the semisimplicity test.

The radical comes from Cartan's solvability criterion: in characteristic
zero it is the Killing-orthogonal complement of the derived algebra.  The
nilradical is the set of radical elements with nilpotent adjoint action;
that set is carved out exactly, layer by layer, as described below.  Both
results are verified before they are returned, and the nilradical falls
back to brute-force ideal enumeration if its verification ever fails.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import (
    Ideal,
    LieAlgebra,
    Subalgebra,
    Subspace,
    bracket_span,
    is_ideal,
    is_nilpotent,
    is_solvable,
    killing_form,
)
from .errors import InternalInconsistency, NotIdeal
from .linalg import Mat, Vec

BRUTE_FORCE_DIM_LIMIT = 6


@dataclass(frozen=True)
class RadicalPair:
    radical: Ideal
    nilradical: Ideal


def radical(g: LieAlgebra) -> Ideal:
    """Largest solvable ideal: {x : k(x, [g,g]) = 0} in characteristic 0."""
    derived = bracket_span(g.whole(), g.whole())
    form = killing_form(g)
    conditions = [linalg.apply_mat(form, d) for d in derived.matrix]
    rows = linalg.kernel(conditions, width=g.dim)
    try:
        out = Ideal(g, rows)
    except NotIdeal as exc:
        raise InternalInconsistency(f"computed radical is not an ideal: {exc}") from exc
    if not is_solvable(out):
        raise InternalInconsistency("computed radical is not solvable")
    return out


def is_semisimple(g: LieAlgebra) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    form = killing_form(g)
    return linalg.rank(form) == g.dim


def _quotient_layer_basis(space: Subspace, modulo: Subspace) -> Mat:
    """Rows of ``space`` forming a basis of space/modulo (greedy, canonical)."""
    kept: list[Vec] = []
    for row in space.matrix:
        probe = Subspace(space.ambient, modulo.matrix + tuple(kept) + (row,))
        if probe.dim > modulo.dim + len(kept):
            kept.append(row)
    return tuple(kept)


def _layer_operator(g: LieAlgebra, x: Vec, layer: Mat, modulo: Subspace) -> Mat:
    """Matrix of the action of ad(x) on span(layer) modulo ``modulo``."""
    stacked = layer + modulo.matrix
    cols = []
    for b in layer:
        w = g.bracket(x, b)
        sol = linalg.solve(linalg.transpose(stacked), w, width=len(stacked))
        if sol is None:
            raise InternalInconsistency("layer is not invariant under the radical action")
        cols.append(sol[: len(layer)])
    return linalg.transpose(tuple(cols)) if cols else ()


def _nilradical_layered(g: LieAlgebra, rad: Ideal) -> Subspace | None:
    """{x in rad : ad(x) nilpotent} as an exact kernel intersection.

    Let J = [g, rad].  Along the flag g >= rad >= J >= J_2 >= ... built from
    the lower central series of J, ad(x) for x in rad strictly drops the
    first two levels and preserves the rest, so ad(x) is nilpotent iff its
    induced action on every layer J_i/J_{i+1} is nilpotent.  Elements of J
    act trivially on those layers, hence the induced operators of the rad
    basis commute there, their Jordan-Chevalley semisimple parts add, and
    the nilpotency condition per layer is the linear system
    sum_t c_t S_t = 0.  Returns None when a sanity check fails and the
    brute-force fallback should take over.
    """
    j = bracket_span(g.whole(), rad)
    series = [j]
    while series[-1].dim:
        nxt = bracket_span(j, series[-1])
        if nxt.matrix == series[-1].matrix:
            return None  # J failed to be nilpotent: impossible in char 0
        series.append(nxt)

    conditions: list[Vec] = []
    for step in range(len(series) - 1):
        upper, lower = series[step], series[step + 1]
        layer = _quotient_layer_basis(upper, lower)
        if not layer:
            continue
        semisimple_parts = []
        for x in rad.matrix:
            op = _layer_operator(g, x, layer, lower)
            semisimple_parts.append(linalg.semisimple_part(op))
        # one scalar condition per matrix entry of sum_t c_t S_t
        m = len(layer)
        for a in range(m):
            for b in range(m):
                conditions.append(tuple(s[a][b] for s in semisimple_parts))
    coeffs = linalg.kernel(conditions, width=rad.dim)
    rows = [linalg.apply_mat(linalg.transpose(rad.matrix), c) for c in coeffs]
    return Subspace(g, rows)


def _verify_nilradical(g: LieAlgebra, rad: Ideal, candidate: Subspace) -> bool:
    if not rad.contains_subspace(candidate):
        return False
    if not is_ideal(candidate):
        return False
    if not is_nilpotent(candidate):
        return False
    if not candidate.contains_subspace(bracket_span(g.whole(), rad)):
        return False
    # membership characterization on the basis: ad(x)^dim = 0 exactly
    for row in candidate.matrix:
        if not linalg.is_nilpotent_mat(g.ad(row)):
            return False
    return True


def nilradical(g: LieAlgebra) -> Ideal:
    """Largest nilpotent ideal: radical elements with nilpotent ad."""
    rad = radical(g)
    if rad.dim == 0:
        return Ideal(g, ())
    candidate = _nilradical_layered(g, rad)
    if candidate is None or not _verify_nilradical(g, rad, candidate):
        if g.dim > BRUTE_FORCE_DIM_LIMIT:
            raise InternalInconsistency(
                "nilradical verification failed and the algebra is too large for brute force"
            )
        candidate = bruteforce_max_nilpotent_ideal(g)
        if not _verify_nilradical(g, rad, candidate):
            raise InternalInconsistency("brute-force nilradical failed verification")
    return Ideal(g, candidate.matrix)


def radical_pair(g: LieAlgebra) -> RadicalPair:
    rad = radical(g)
    nil = nilradical(g)
    if not rad.contains_subspace(nil):
        raise InternalInconsistency("nilradical is not contained in the radical")
    return RadicalPair(radical=rad, nilradical=nil)


# ---------------------------------------------------------------------------
# Brute-force ideal enumeration: the independent oracle for desk-scale tests
# and the fallback route for the nilradical.
# ---------------------------------------------------------------------------


def candidate_vector_pool(g: LieAlgebra) -> list[Vec]:
    """Basis vectors plus pairwise sums and differences, in a fixed order."""
    pool = [linalg.unit_vec(g.dim, i) for i in range(g.dim)]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            pool.append(linalg.vec_add(pool[i], pool[j]))
            pool.append(linalg.vec_sub(pool[i], pool[j]))
    return pool


def ideal_closure(g: LieAlgebra, rows) -> Subspace:
    """Smallest ideal containing the rows: iterate span + [g, span]."""
    current = Subspace(g, rows)
    while True:
        bigger = current.sum(bracket_span(g.whole(), current))
        if bigger.matrix == current.matrix:
            return current
        current = bigger


def enumerate_ideal_candidates(g: LieAlgebra, max_generators: int = 2) -> list[Subspace]:
    """Distinct ideals generated by small subsets of the candidate pool.

    The collection is closed under pairwise joins (the sum of two ideals is
    an ideal), so it is a finite sublattice of the ideal lattice.
    """
    pool = candidate_vector_pool(g)
    seen: dict[Mat, Subspace] = {(): Subspace(g, ())}
    for size in range(1, max_generators + 1):
        for combo in itertools.combinations(pool, size):
            closed = ideal_closure(g, combo)
            seen.setdefault(closed.matrix, closed)
    while True:
        joins = {}
        items = list(seen.values())
        for a, b in itertools.combinations(items, 2):
            joined = a.sum(b)
            if joined.matrix not in seen:
                joins.setdefault(joined.matrix, joined)
        if not joins:
            break
        seen.update(joins)
    return [seen[m] for m in sorted(seen)]


def _unique_max(candidates: list[Subspace], kind: str) -> Subspace:
    best = max(candidates, key=lambda s: s.dim)
    for c in candidates:
        if not best.contains_subspace(c):
            raise InternalInconsistency(f"brute-force {kind} ideals have no unique maximum")
    return best


def bruteforce_max_solvable_ideal(g: LieAlgebra, candidates=None) -> Subspace:
    """Unique maximal solvable member of the enumerated ideal lattice."""
    if candidates is None:
        candidates = enumerate_ideal_candidates(g)
    return _unique_max([c for c in candidates if is_solvable(c)], "solvable")


def bruteforce_max_nilpotent_ideal(g: LieAlgebra, candidates=None) -> Subspace:
    """Unique maximal nilpotent member of the enumerated ideal lattice."""
    if candidates is None:
        candidates = enumerate_ideal_candidates(g)
    return _unique_max([c for c in candidates if is_nilpotent(c)], "nilpotent")
