"""Block-structured rings viewed as arrow algebras over finitely many
objects: unit-decomposition checking and the corner-ring classification of
completely prime ideal subsets.

A completely prime ideal of a block ring singles out one object A: it
contains every class outside the diagonal block of A, and meets that
block in a completely prime ideal Q of the corner ring, subject to the
cross-block condition that arrows through any other object compose into
Q.  Conversely every such (A, Q) pair yields a completely prime ideal, so
the classification below agrees with brute-force filtering of the ideal
lattice (asserted in the tests).
"""

from dataclasses import dataclass

from .coefficients import Coefficient
from .ideals import IdealSubset, enumerate_serre_ideals, product_support
from .spectrum import is_completely_prime
from .zring import (TWO_SIDED, RingError, build_ring, iter_bits, mask_of,
                    subset_key, unit_decomposition_violations)


class MissingBlocks(RingError):
    pass


@dataclass(frozen=True)
class BlockRingView:
    objects: tuple        # first-appearance order along the basis
    block_masks: dict     # (source, target) -> basis mask
    diagonal_units: dict  # object -> unit basis index


def block_view(ring):
    """Validated block decomposition with one declared unit per object."""
    if ring.blocks is None:
        raise MissingBlocks("ring declares no blocks")
    if ring.units is None:
        raise MissingBlocks("block classification requires declared units")
    objects = []
    block_masks = {}
    for i, (src, dst) in enumerate(ring.blocks):
        for obj in (src, dst):
            if obj not in objects:
                objects.append(obj)
        block_masks[(src, dst)] = block_masks.get((src, dst), 0) | 1 << i
    diagonal_units = {}
    for u in sorted(ring.units):
        src, dst = ring.blocks[u]
        if src != dst:
            raise MissingBlocks(
                f"unit {ring.labels[u]} lies off the diagonal")
        if src in diagonal_units:
            raise MissingBlocks(f"object {src} declares two units")
        diagonal_units[src] = u
    missing = [obj for obj in objects if obj not in diagonal_units]
    if missing:
        raise MissingBlocks(
            f"objects without a declared unit: {', '.join(missing)}")
    return BlockRingView(tuple(objects), block_masks, diagonal_units)


def check_unit_decomposition(ring, units=None):
    """Is the sum of the (given or declared) units a two-sided identity?

    Returns (True, None) or (False, first failing basis label).
    """
    if units is None:
        units = ring.units
    if units is None:
        raise RingError("no units declared")
    units = frozenset(u if isinstance(u, int) else ring.index(u)
                      for u in units)
    violations = unit_decomposition_violations(
        ring.labels, ring.tensor, ring.mode, units)
    if violations:
        return False, violations[0].witness
    return True, None


def corner_ring(ring, obj):
    """The induced ring on the diagonal block of one object.

    Returns (corner, old_indices); products of diagonal classes never
    leave the block, so no truncation is involved.
    """
    view = block_view(ring)
    if obj not in view.objects:
        raise MissingBlocks(f"unknown object {obj!r}")
    corner_mask = view.block_masks.get((obj, obj), 0)
    old = list(iter_bits(corner_mask))
    old_set = set(old)
    labels = tuple(ring.labels[i] for i in old)
    tensor = {}
    for (a, b), row in ring.tensor.items():
        if a in old_set and b in old_set:
            tensor[(ring.labels[a], ring.labels[b])] = {
                ring.labels[g]: c for g, c in row.items()}
    units = [ring.labels[view.diagonal_units[obj]]]
    corner = build_ring(labels, tensor, ring.mode, None, units,
                        f"{ring.name}[{obj},{obj}]")
    return corner, old


def classify_completely_primes(ring, allow_large=False):
    """All completely prime ideal subsets, via the corner-ring structure
    when blocks are declared and by direct filtering otherwise."""
    full = ring.full_mask
    if ring.blocks is None:
        out = [i for i in enumerate_serre_ideals(ring, allow_large=allow_large)
               if i.members != full and is_completely_prime(ring, i)[0]]
        return out
    view = block_view(ring)
    results = []
    for obj in view.objects:
        corner_mask = view.block_masks.get((obj, obj), 0)
        corner, old = corner_ring(ring, obj)
        cross = 0
        for other in view.objects:
            if other == obj:
                continue
            arrows_in = view.block_masks.get((other, obj), 0)
            arrows_out = view.block_masks.get((obj, other), 0)
            cross |= product_support(ring, arrows_in, arrows_out)
        outside = full & ~corner_mask
        for q in enumerate_serre_ideals(corner, allow_large=allow_large):
            if q.members == corner.full_mask:
                continue
            if not is_completely_prime(corner, q)[0]:
                continue
            lifted = mask_of(old[i] for i in iter_bits(q.members))
            if cross & ~lifted:
                continue
            results.append(outside | lifted)
    results = sorted(set(results), key=subset_key)
    return [IdealSubset(m, TWO_SIDED) for m in results]
