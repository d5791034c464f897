"""The Zariski rho-topology on B^n, materialized on small carriers."""

import logging
from functools import lru_cache

from src.conf import messages
from src.conf.config import settings
from src.core.exceptions import BoundExceededError, NotPrimeError
from src.entity.models import Congruence, FunctionSemiring, Variety, ZariskiTopology
from src.services.congruence import is_prime
from src.services.function_semiring import function_semiring
from src.services.geometry import check_rho, require_finite

logger = logging.getLogger("workbench")


def _key_diagram(keys: set[tuple[int, ...]], width: int) -> tuple[int, dict[int, tuple]]:
    """
    Share equal suffix trees of the key vectors.

    Returns the root id and, per node id, its ``(value, child)`` branches.
    Node 0 is the leaf below the last position.
    """
    nodes: dict[tuple, int] = {(): 0}

    def build(group: list[tuple[int, ...]], position: int) -> int:
        if position == width:
            return 0
        branches: dict[int, list] = {}
        for key in group:
            branches.setdefault(key[position], []).append(key)
        signature = tuple(
            (value, build(members, position + 1)) for value, members in sorted(branches.items())
        )
        return nodes.setdefault(signature, len(nodes))

    root = build(sorted(keys), 0)
    return root, {node: signature for signature, node in nodes.items()}


def basic_closed_masks(keys: set[tuple[int, ...]], width: int) -> set[int]:
    """
    Zero sets of single function pairs, as masks.

    Z({(F, G)}) marks the positions where the rho-class vectors of F and G
    agree; walking two copies of the shared key diagram in lockstep yields
    every such mask without visiting all pairs.
    """
    root, branches = _key_diagram(keys, width)

    @lru_cache(maxsize=None)
    def masks(left: int, right: int, position: int) -> frozenset[int]:
        if position == width:
            return frozenset({0})
        found = set()
        for v1, c1 in branches[left]:
            for v2, c2 in branches[right]:
                bit = 1 << position if v1 == v2 else 0
                found.update(bit | rest for rest in masks(c1, c2, position + 1))
        return frozenset(found)

    return set(masks(root, root, 0))


def _close_under_intersection(basic: set[int]) -> frozenset[int]:
    family = set(basic)
    pending = list(basic)
    while pending:
        mask = pending.pop()
        for other in basic:
            meet = mask & other
            if meet not in family:
                family.add(meet)
                pending.append(meet)
    return frozenset(family)


def materialize_topology(
    ctx, rho: Congruence, num_vars: int, fs: FunctionSemiring | None = None
) -> ZariskiTopology:
    """
    All rho-algebraic sets of B^n.

    Zero sets of single function pairs are closed under intersection; for a
    prime rho the result is a topology.

    Raises:
        BoundExceededError: If |B|^n exceeds ``MAX_TOPOLOGY_POINTS``.
        NotPrimeError: If rho is not prime.
        WindowModeError: In window mode.
    """
    require_finite(ctx, "topology")
    check_rho(ctx, rho)
    count = ctx.target.size**num_vars
    if count > settings.MAX_TOPOLOGY_POINTS:
        raise BoundExceededError(
            messages.text(
                messages.bound_exceeded,
                what="|B|^n",
                value=count,
                bound=settings.MAX_TOPOLOGY_POINTS,
            )
        )
    if not is_prime(rho):
        raise NotPrimeError(messages.text(messages.not_prime, semiring=rho.owner.name))
    fs = fs or function_semiring(ctx, num_vars)
    keys = {tuple(rho.class_of[v] for v in f.table) for f in fs.functions}
    basic = basic_closed_masks(keys, len(fs.points))
    closed = _close_under_intersection(basic)
    logger.debug(f"Topology on {ctx.target.name}^{num_vars}: {len(basic)} basic, {len(closed)} closed")
    return ZariskiTopology(fs.points, num_vars, closed)


def relatively_closed(topology: ZariskiTopology, Y: Variety) -> set[int]:
    target = topology.mask_of(Y.points)
    return {mask & target for mask in topology.closed}


def is_irreducible(Y: Variety, topology: ZariskiTopology) -> bool:
    """
    True iff Y is non-empty and no two proper relatively closed subsets
    cover it.

    >>> from src.entity.models import ZariskiTopology, Variety
    >>> line = ZariskiTopology(((0,), (1,)), 1, frozenset({0, 1, 2, 3}))
    >>> is_irreducible(Variety(frozenset({(0,), (1,)}), 1), line)
    False
    """
    if not Y.points:
        return False
    target = topology.mask_of(Y.points)
    proper = [mask for mask in relatively_closed(topology, Y) if mask != target]
    return not any(a | b == target for a in proper for b in proper)
