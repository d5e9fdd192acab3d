"""Serre ideals as basis subsets: recognition, closure, lattice
enumeration, support products, and quotient rings.

A subset of the basis spans a left (right, two-sided) ideal exactly when
every basis product hitting the subset from the relevant side has support
inside it; positivity makes this subset condition equivalent to the ideal
condition on the whole Z-span, and every such ideal is spanned by a
subset of the basis.
"""

from collections import deque
from dataclasses import dataclass

from .zring import (BASIS_GUARD, LEFT, RIGHT, SIDES, TWO_SIDED,
                    BasisTooLarge, RingError, build_ring, iter_bits,
                    labels_from_mask, subset_key)


class NotAnIdeal(RingError):
    pass


class ImproperIdeal(RingError):
    pass


@dataclass(frozen=True)
class IdealSubset:
    members: int  # bitmask in basis order
    side: str = TWO_SIDED


def members_of(ideal_or_mask):
    if isinstance(ideal_or_mask, IdealSubset):
        return ideal_or_mask.members
    return int(ideal_or_mask)


def _absorb_tables(ring, side):
    if side == LEFT:
        return (ring.left_absorb,)
    if side == RIGHT:
        return (ring.right_absorb,)
    if side == TWO_SIDED:
        return (ring.left_absorb, ring.right_absorb)
    raise RingError(f"unknown ideal side {side!r}")


def is_serre_ideal(ring, members, side=TWO_SIDED):
    """Decide the spanning-subset ideal condition.

    Returns (True, None), or (False, (gamma, beta, escapee)) giving the
    first product in basis order whose support escapes: escapee lies in
    supp(b_beta * b_gamma) for the left condition or supp(b_gamma * b_beta)
    for the right one.
    """
    members = members_of(members)
    tables = _absorb_tables(ring, side)
    outside = ~members
    for g in iter_bits(members):
        if any(t[g] & outside for t in tables):
            break
    else:
        return True, None
    pm = ring.product_masks
    for g in iter_bits(members):
        for b in range(ring.size):
            if side in (LEFT, TWO_SIDED):
                esc = pm[b][g] & outside
                if esc:
                    return False, (g, b, (esc & -esc).bit_length() - 1)
            if side in (RIGHT, TWO_SIDED):
                esc = pm[g][b] & outside
                if esc:
                    return False, (g, b, (esc & -esc).bit_length() - 1)
    raise AssertionError("unreachable: escape detected but no witness found")


def serre_closure(ring, gens, side=TWO_SIDED):
    """Least ideal subset containing the generators (worklist in basis order)."""
    tables = _absorb_tables(ring, side)
    members = members_of(gens)
    queue = deque(iter_bits(members))
    while queue:
        g = queue.popleft()
        added = 0
        for t in tables:
            added |= t[g] & ~members
        members |= added
        queue.extend(iter_bits(added))
    return IdealSubset(members, side)


def enumerate_serre_ideals(ring, side=TWO_SIDED, allow_large=False):
    """Every ideal subset, empty and full included, ordered by
    (cardinality, lexicographic index tuple)."""
    if ring.size > BASIS_GUARD and not allow_large:
        raise BasisTooLarge(ring.size)
    key = ("ideals", side)
    cached = ring.cache.get(key)
    if cached is None:
        tables = _absorb_tables(ring, side)
        n = ring.size
        absorb = [0] * n
        for g in range(n):
            for t in tables:
                absorb[g] |= t[g]
        found = []
        for m in range(1 << n):
            mm = m
            good = True
            while mm:
                low = mm & -mm
                if absorb[low.bit_length() - 1] & ~m:
                    good = False
                    break
                mm ^= low
            if good:
                found.append(m)
        found.sort(key=subset_key)
        cached = tuple(found)
        ring.cache[key] = cached
    return [IdealSubset(m, side) for m in cached]


def product_support(ring, left, right):
    """Union of supp(b_alpha b_beta) over alpha in the first subset and
    beta in the second; the product ideal lies inside a Serre ideal P
    exactly when this subset does."""
    lm = members_of(left)
    rm = members_of(right)
    pm = ring.product_masks
    out = 0
    for a in iter_bits(lm):
        row = pm[a]
        for b in iter_bits(rm):
            out |= row[b]
    return out


def require_proper_two_sided(ring, ideal):
    """Shared precondition for primality-style predicates; returns the mask."""
    members = members_of(ideal)
    if isinstance(ideal, IdealSubset) and ideal.side != TWO_SIDED:
        raise NotAnIdeal("a two-sided ideal is required")
    ok, witness = is_serre_ideal(ring, members, TWO_SIDED)
    if not ok:
        g, b, e = witness
        raise NotAnIdeal(
            f"{{{', '.join(labels_from_mask(ring, members))}}} is not a "
            f"two-sided Serre ideal: product with {ring.labels[b]} escapes "
            f"through {ring.labels[e]}")
    if members == ring.full_mask:
        raise ImproperIdeal("the whole ring is not a proper ideal")
    return members


def quotient_ring(ring, ideal):
    """Quotient by a proper two-sided ideal subset.

    The surviving basis keeps its order and structure constants; blocks
    and units restrict, units absorbed by the ideal are dropped.  The
    truncated table is re-validated from scratch rather than trusted.
    """
    members = require_proper_two_sided(ring, ideal)
    keep = [i for i in range(ring.size) if not members >> i & 1]
    keep_set = set(keep)
    labels = tuple(ring.labels[i] for i in keep)
    tensor = {}
    for (a, b), row in ring.tensor.items():
        if a in keep_set and b in keep_set:
            new_row = {ring.labels[g]: c for g, c in row.items()
                       if g in keep_set}
            if new_row:
                tensor[(ring.labels[a], ring.labels[b])] = new_row
    blocks = None
    if ring.blocks is not None:
        blocks = {ring.labels[i]: ring.blocks[i] for i in keep}
    units = None
    if ring.units is not None:
        units = [ring.labels[u] for u in sorted(ring.units) if u in keep_set]
    if members == 0:
        name = ring.name
    else:
        dropped = ",".join(labels_from_mask(ring, members))
        name = f"{ring.name}/{{{dropped}}}"
    return build_ring(labels, tensor, ring.mode, blocks, units, name)
