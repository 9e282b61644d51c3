"""Desk-scale model checker for power-map density on Cartan subgroups.

A Cartan subgroup is modeled as an abelian group R^a x T^b x F with F a
finite product of cyclic factors; the vector and torus parts are divisible,
so the k-th power map is surjective on the model exactly when gcd(k, m) = 1
for every cyclic order m.  Density of the k-th power image of the whole
group is the conjunction of that verdict over the Cartan classes, and a
density verdict for a normal subgroup and its quotient propagates to the
extension (checked as an implication over bundled model triples).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

from .errors import EmptyInstance, InternalInconsistency, InvalidOrder, ParseError


@dataclass(frozen=True)
class CartanGroupModel:
    """Abelian Cartan-subgroup model: identity component plus finite part."""

    vector_rank: int
    torus_rank: int
    component_orders: tuple[int, ...]


@dataclass(frozen=True)
class GroupDensityInstance:
    """One Cartan-subgroup model per conjugacy class of the modeled group."""

    name: str
    cartan_models: tuple[CartanGroupModel, ...]


def _check_model(model: CartanGroupModel) -> None:
    if model.vector_rank < 0 or model.torus_rank < 0:
        raise InvalidOrder("ranks must be non-negative")
    for m in model.component_orders:
        if m < 2:
            raise InvalidOrder(f"component order {m} is below 2")


def pk_surjective(model: CartanGroupModel, k: int) -> bool:
    """Whether x -> x^k is onto the model group.

    Always onto the divisible identity component; onto a cyclic factor of
    order m iff gcd(k, m) = 1.
    """
    if k < 1:
        raise ValueError("the power-map exponent must be a positive integer")
    _check_model(model)
    return all(math.gcd(k, m) == 1 for m in model.component_orders)


def density_from_cartans(instance: GroupDensityInstance, k: int) -> bool:
    """Dense k-th power image iff the map is onto every Cartan class model."""
    if not instance.cartan_models:
        raise EmptyInstance(f"instance {instance.name!r} has no Cartan classes")
    return all(pk_surjective(m, k) for m in instance.cartan_models)


def composition_holds(h_dense: bool, quotient_dense: bool, g_result: bool) -> bool:
    """Implication verdict: density on subgroup and quotient forces density."""
    return g_result or not (h_dense and quotient_dense)


def smallest_failing_k(instance: GroupDensityInstance) -> int | None:
    """Least prime exponent with a non-dense power image, if any."""
    primes = sorted(
        {p for m in instance.cartan_models for p in _prime_factors(m.component_orders)}
    )
    return primes[0] if primes else None


def _prime_factors(orders) -> set[int]:
    out = set()
    for m in orders:
        n = m
        p = 2
        while p * p <= n:
            while n % p == 0:
                out.add(p)
                n //= p
            p += 1
        if n > 1:
            out.add(n)
    return out


def weakly_exponential_model(instance: GroupDensityInstance, k_max: int) -> bool:
    """Dense power images for every k: no finite components anywhere.

    The verdict is exact via the gcd structure; ``k_max`` only sizes the
    redundant enumeration cross-check of the same answer.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    if not instance.cartan_models:
        raise EmptyInstance(f"instance {instance.name!r} has no Cartan classes")
    exact = all(not m.component_orders for m in instance.cartan_models)
    enumerated = all(density_from_cartans(instance, k) for k in range(1, k_max + 1))
    witness = smallest_failing_k(instance)
    cross = enumerated if witness is None else not density_from_cartans(instance, witness)
    if exact != (witness is None) or not cross:
        raise InternalInconsistency(
            f"density structure of instance {instance.name!r} disagrees with enumeration"
        )
    return exact


def powers_surjective_bruteforce(orders, k: int) -> bool:
    """Enumerate k-th powers in the finite product of cyclic groups.

    The independent oracle for pk_surjective, viable for products of order
    up to about 10^4.
    """
    if k < 1:
        raise ValueError("the power-map exponent must be a positive integer")
    orders = tuple(orders)
    for m in orders:
        if m < 2:
            raise InvalidOrder(f"component order {m} is below 2")
    elements = set(itertools.product(*(range(m) for m in orders)))
    powers = {
        tuple((k * x) % m for x, m in zip(el, orders)) for el in elements
    }
    return powers == elements


# ---------------------------------------------------------------------------
# Instance files
# ---------------------------------------------------------------------------


def model_from_dict(data: dict) -> CartanGroupModel:
    try:
        return CartanGroupModel(
            vector_rank=int(data["vector_rank"]),
            torus_rank=int(data["torus_rank"]),
            component_orders=tuple(int(m) for m in data.get("component_orders", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed Cartan class model: {exc}") from exc


def instance_from_dict(data: dict) -> GroupDensityInstance:
    try:
        name = data["name"]
        classes = data["cartan_classes"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed density instance: {exc}") from exc
    if not isinstance(classes, list) or not classes:
        raise EmptyInstance(f"instance {name!r} lists no Cartan classes")
    return GroupDensityInstance(
        name=str(name), cartan_models=tuple(model_from_dict(c) for c in classes)
    )


def load_instance(path) -> GroupDensityInstance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return instance_from_dict(data)


@dataclass(frozen=True)
class ModelTriple:
    """Instances for a normal subgroup, the quotient, and the whole group."""

    name: str
    subgroup: GroupDensityInstance
    quotient: GroupDensityInstance
    group: GroupDensityInstance


def triples_from_dict(data) -> list[ModelTriple]:
    if not isinstance(data, list):
        raise ParseError("model triple corpus must be a JSON list")
    out = []
    for item in data:
        try:
            out.append(
                ModelTriple(
                    name=str(item["name"]),
                    subgroup=instance_from_dict(item["subgroup"]),
                    quotient=instance_from_dict(item["quotient"]),
                    group=instance_from_dict(item["group"]),
                )
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed model triple: {exc}") from exc
    return out


def load_triples(path) -> list[ModelTriple]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return triples_from_dict(data)
