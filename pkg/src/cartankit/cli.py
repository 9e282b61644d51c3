"""Command-line surface: analyze | cartan | levi | quotient | powermap | verify.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 internal
inconsistency.
"""

from __future__ import annotations

import json
import math
import sys

import click

from .algebra import Ideal, LieAlgebra, Subspace
from .cartan import (
    CsaMethod,
    composite_csa,
    normalizer_chain_csa,
    regular_element_csa,
)
from .catalog import (
    bundled_fixtures,
    bundled_models,
    format_vector,
    load_algebra,
    parse_vector,
)
from .errors import (
    CartanKitError,
    EmptyInstance,
    HypothesisViolated,
    IndexOutOfRange,
    InternalInconsistency,
    InvalidOrder,
    JacobiViolation,
    LiftFailure,
    NotCartan,
    NotIdeal,
    NotSolvable,
    ParseError,
    PostconditionFailure,
    SearchExhausted,
)
from .levi import levi_decomposition
from .powermap import density_from_cartans, load_instance, pk_surjective
from .quotient import lift_cartan, push_cartan, quotient_algebra
from .radicals import is_semisimple, nilradical, radical
from .verify import report_to_json, report_to_text, run_verification

EXIT_VERIFICATION_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL = 3

_INPUT_ERRORS = (
    ParseError,
    IndexOutOfRange,
    JacobiViolation,
    NotIdeal,
    NotCartan,
    NotSolvable,
    HypothesisViolated,
    InvalidOrder,
    EmptyInstance,
    FileNotFoundError,
    ValueError,
)
_INTERNAL_ERRORS = (
    InternalInconsistency,
    LiftFailure,
    PostconditionFailure,
    SearchExhausted,
)


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    if isinstance(exc, _INPUT_ERRORS):
        sys.exit(EXIT_INPUT_ERROR)
    if isinstance(exc, _INTERNAL_ERRORS):
        sys.exit(EXIT_INTERNAL)
    raise exc


def _load(path: str, skip_jacobi: bool) -> LieAlgebra:
    try:
        return load_algebra(path, skip_jacobi=skip_jacobi)
    except (CartanKitError, FileNotFoundError) as exc:
        _fail(exc)


def _subspace_labels(g: LieAlgebra, sub: Subspace) -> list[str]:
    return [g.label_vector(row) for row in sub.matrix]


@click.group()
def main() -> None:
    """Exact computations with Cartan subalgebras of rational Lie algebras."""


@main.command()
@click.argument("path")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@click.option("--skip-jacobi", is_flag=True, help="skip the construction-time Jacobi sweep")
def analyze(path: str, as_json: bool, skip_jacobi: bool) -> None:
    """Structure report: radical, nilradical, Levi split, rank, one CSA per method."""
    g = _load(path, skip_jacobi)
    try:
        rad = radical(g)
        nil = nilradical(g)
        decomp = levi_decomposition(g)
        regular = regular_element_csa(g)
        composite = composite_csa(g)
        solvable = rad.dim == g.dim
        chain = normalizer_chain_csa(g) if solvable else None
    except CartanKitError as exc:
        _fail(exc)
    if as_json:
        payload = {
            "name": g.name,
            "dim": g.dim,
            "radical": [format_vector(r) for r in rad.matrix],
            "nilradical": [format_vector(r) for r in nil.matrix],
            "semisimple": is_semisimple(g),
            "levi_dim": decomp.levi.dim,
            "radical_dim": rad.dim,
            "rank": regular.csa.dim,
            "cartan": {
                "regular": [format_vector(r) for r in regular.csa.matrix],
                "composite": [format_vector(r) for r in composite.csa.matrix],
                "chain": [format_vector(r) for r in chain.csa.matrix] if chain else None,
            },
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    click.echo(f"algebra: {g.name or '?'} (dim {g.dim})")
    click.echo(f"radical: dim {rad.dim}, basis [{', '.join(_subspace_labels(g, rad))}]")
    click.echo(f"nilradical: dim {nil.dim}, basis [{', '.join(_subspace_labels(g, nil))}]")
    click.echo(f"semisimple: {str(is_semisimple(g)).lower()}")
    click.echo(f"levi: dim {decomp.levi.dim}; radical: dim {rad.dim}")
    click.echo(f"rank: {regular.csa.dim}")
    click.echo(f"cartan (regular): dim {regular.csa.dim}, basis [{', '.join(_subspace_labels(g, regular.csa))}]")
    click.echo(f"cartan (composite): dim {composite.csa.dim}, basis [{', '.join(_subspace_labels(g, composite.csa))}]")
    if chain is not None:
        click.echo(f"cartan (chain): dim {chain.csa.dim}, basis [{', '.join(_subspace_labels(g, chain.csa))}]")
    else:
        click.echo("cartan (chain): n/a (algebra not solvable)")


@main.command()
@click.argument("path")
@click.option(
    "--method",
    type=click.Choice(["regular", "chain", "composite"]),
    default="regular",
    show_default=True,
)
@click.option("--json", "as_json", is_flag=True)
@click.option("--skip-jacobi", is_flag=True)
def cartan(path: str, method: str, as_json: bool, skip_jacobi: bool) -> None:
    """One Cartan subalgebra by the chosen construction, with its trace."""
    g = _load(path, skip_jacobi)
    try:
        if method == "regular":
            result = regular_element_csa(g)
        elif method == "chain":
            result = normalizer_chain_csa(g)
        else:
            result = composite_csa(g)
    except CartanKitError as exc:
        _fail(exc)
    if as_json:
        payload = {
            "method": result.method.value,
            "dim": result.csa.dim,
            "basis": [format_vector(r) for r in result.csa.matrix],
            "trace_dims": [s.dim for s in result.trace],
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    click.echo(f"method: {result.method.value}")
    click.echo(f"cartan subalgebra: dim {result.csa.dim}, basis [{', '.join(_subspace_labels(g, result.csa))}]")
    click.echo(f"trace dims: {[s.dim for s in result.trace]}")


@main.command()
@click.argument("path")
@click.option("--json", "as_json", is_flag=True)
@click.option("--skip-jacobi", is_flag=True)
def levi(path: str, as_json: bool, skip_jacobi: bool) -> None:
    """Levi decomposition: semisimple part and radical."""
    g = _load(path, skip_jacobi)
    try:
        decomp = levi_decomposition(g)
    except CartanKitError as exc:
        _fail(exc)
    if as_json:
        payload = {
            "levi": [format_vector(r) for r in decomp.levi.matrix],
            "radical": [format_vector(r) for r in decomp.radical.matrix],
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    click.echo(f"levi: dim {decomp.levi.dim}, basis [{', '.join(_subspace_labels(g, decomp.levi))}]")
    click.echo(f"radical: dim {decomp.radical.dim}, basis [{', '.join(_subspace_labels(g, decomp.radical))}]")


@main.command()
@click.argument("path")
@click.option(
    "--ideal",
    "ideal_spec",
    required=True,
    help="JSON list of coordinate vectors (rational strings) spanning the ideal",
)
@click.option("--json", "as_json", is_flag=True)
@click.option("--skip-jacobi", is_flag=True)
def quotient(path: str, ideal_spec: str, as_json: bool, skip_jacobi: bool) -> None:
    """Quotient by an ideal plus the push/lift Cartan round trip."""
    g = _load(path, skip_jacobi)
    try:
        raw = json.loads(ideal_spec)
        if not isinstance(raw, list):
            raise ParseError("--ideal must be a JSON list of coordinate vectors")
        rows = [parse_vector(r, g.dim) for r in raw]
        ideal = Ideal(g, rows)
        q = quotient_algebra(g, ideal)
        source_csa = composite_csa(g).csa
        pushed = push_cartan(source_csa, q)
        lifted = lift_cartan(pushed, q)
    except json.JSONDecodeError as exc:
        _fail(ParseError(f"bad --ideal JSON: {exc}"))
    except CartanKitError as exc:
        _fail(exc)
    constants = {
        f"{i},{j}": {
            str(k): str(c)
            for k, c in enumerate(q.target.bracket_basis(i, j))
            if c != 0
        }
        for i in range(q.target.dim)
        for j in range(i + 1, q.target.dim)
        if any(c != 0 for c in q.target.bracket_basis(i, j))
    }
    if as_json:
        payload = {
            "quotient_dim": q.target.dim,
            "quotient_basis": list(q.target.basis_labels),
            "quotient_brackets": constants,
            "pushed_cartan": [format_vector(r) for r in pushed.matrix],
            "lifted_cartan": [format_vector(r) for r in lifted.matrix],
            "roundtrip_exact": q.push_subspace(lifted).matrix == pushed.matrix,
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    click.echo(f"quotient: dim {q.target.dim}, basis [{', '.join(q.target.basis_labels)}]")
    click.echo(f"quotient brackets: {json.dumps(constants, sort_keys=True)}")
    click.echo(
        f"pushed cartan: dim {pushed.dim}, basis [{', '.join(_subspace_labels(q.target, pushed))}]"
    )
    click.echo(f"lifted cartan: dim {lifted.dim}, basis [{', '.join(_subspace_labels(g, lifted))}]")
    click.echo(f"roundtrip exact: {str(q.push_subspace(lifted).matrix == pushed.matrix).lower()}")


@main.command()
@click.argument("path")
@click.option("-k", "exponent", type=int, required=True, help="power-map exponent")
@click.option("--json", "as_json", is_flag=True)
def powermap(path: str, exponent: int, as_json: bool) -> None:
    """Per-class surjectivity verdicts and the density verdict for one k."""
    try:
        instance = load_instance(path)
        verdicts = [pk_surjective(m, exponent) for m in instance.cartan_models]
        dense = density_from_cartans(instance, exponent)
    except (CartanKitError, FileNotFoundError, ValueError) as exc:
        _fail(exc)
    if as_json:
        payload = {
            "instance": instance.name,
            "k": exponent,
            "classes": [
                {
                    "vector_rank": m.vector_rank,
                    "torus_rank": m.torus_rank,
                    "component_orders": list(m.component_orders),
                    "surjective": v,
                }
                for m, v in zip(instance.cartan_models, verdicts)
            ],
            "dense": dense,
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    click.echo(f"instance: {instance.name} ({len(instance.cartan_models)} cartan classes)")
    for idx, (m, v) in enumerate(zip(instance.cartan_models, verdicts), start=1):
        click.echo(
            f"class {idx} (vector_rank={m.vector_rank}, torus_rank={m.torus_rank}, "
            f"orders={list(m.component_orders)}): surjective for k={exponent}: {str(v).lower()}"
        )
    if dense:
        click.echo(f"dense: true (k={exponent} passes every class)")
    else:
        idx = verdicts.index(False)
        m = instance.cartan_models[idx]
        blocking = sorted(o for o in m.component_orders if math.gcd(exponent, o) > 1)
        click.echo(f"dense: false (class {idx + 1} fails: order {blocking[0]})")


@main.command()
@click.argument("paths", nargs=-1)
@click.option("--all", "run_all", is_flag=True, help="verify the bundled catalog")
@click.option("--json", "as_json", is_flag=True)
def verify(paths: tuple[str, ...], run_all: bool, as_json: bool) -> None:
    """Run every invariant suite; nonzero exit iff any non-advisory check fails."""
    try:
        if run_all:
            report = run_verification()
        else:
            # explicit paths only; none given means zero checks, exit 0
            report = run_verification(paths=list(paths))
    except (CartanKitError, FileNotFoundError) as exc:
        _fail(exc)
    click.echo(report_to_json(report) if as_json else report_to_text(report))
    if not report.ok:
        sys.exit(EXIT_VERIFICATION_FAILURE)


@main.command("catalog")
@click.option("--json", "as_json", is_flag=True)
def catalog_cmd(as_json: bool) -> None:
    """List the bundled fixtures and model instances."""
    fixtures = sorted(bundled_fixtures())
    models = sorted(bundled_models())
    if as_json:
        click.echo(json.dumps({"fixtures": fixtures, "models": models}, indent=2, sort_keys=True))
        return
    click.echo("fixtures: " + ", ".join(fixtures))
    click.echo("models: " + ", ".join(models))


if __name__ == "__main__":
    main()
