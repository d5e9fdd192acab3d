"""Primality predicates, the full spectrum, minimal primes with product
chains, and maximal ideals avoiding a multiplicative set.

Each predicate comes in a fast form (bitmask scans over basis pairs) and,
where the theory provides one, a definitional form quantifying over the
ideal lattice; the two are asserted equivalent in the test suite.  The
definitional quantifiers deliberately include the improper ideal: that is
what keeps the equivalences true for rings without units.
"""

from dataclasses import dataclass, field

from .ideals import (IdealSubset, NotAnIdeal, enumerate_serre_ideals,
                     is_serre_ideal, members_of, product_support,
                     require_proper_two_sided, serre_closure)
from .zring import (TWO_SIDED, RingError, iter_bits, labels_from_mask,
                    subset_key, support_of)

FAST = "fast"
DEFINITIONAL = "definitional"
_MODES = (FAST, DEFINITIONAL)


class NoPrimeOver(RingError):
    pass


class GeneratorInsideIdeal(RingError):
    pass


@dataclass(frozen=True)
class MultiplicativeSet:
    """Power orbit {g, g^2, ...} of a positive element.

    ``orbit`` lists the support mask of every power that occurs; the
    sequence of supports is deterministic and eventually periodic, so the
    finite tuple is exact (no power bound involved).
    """

    generator: object
    orbit: tuple


def make_multiplicative_set(ring, generator):
    if not generator:
        raise RingError("multiplicative generator must be nonzero")
    if not generator.is_positive():
        raise RingError("multiplicative generator must be positive")
    gmask = support_of(generator)
    if ring.blocks is not None:
        blocks = {ring.blocks[i] for i in iter_bits(gmask)}
        if len(blocks) != 1 or any(s != t for s, t in blocks):
            raise RingError(
                "multiplicative generator must lie in one diagonal block")
    seen = set()
    orbit = []
    cur = gmask
    while cur not in seen:
        seen.add(cur)
        orbit.append(cur)
        cur = product_support(ring, cur, gmask)
    return MultiplicativeSet(generator, tuple(orbit))


def is_serre_prime(ring, ideal, mode=FAST, allow_large=False):
    """Serre primality of a proper two-sided ideal subset.

    Fast mode: no pair of basis elements outside P whose two-step product
    supports all land in P.  Definitional mode: no pair (I, J) of
    two-sided ideal subsets (the improper one included) with
    product_support(I, J) inside P but neither factor inside P.

    Returns (holds, witness); the fast witness names the basis pair along
    with the principal ideals it generates, which form a definitional
    witness as well.
    """
    members = require_proper_two_sided(ring, ideal)
    if mode == FAST:
        outside = [i for i in range(ring.size) if not members >> i & 1]
        tm = ring.triple_masks
        for a in outside:
            row = tm[a]
            for b in outside:
                if not row[b] & ~members:
                    return False, {
                        "alpha": ring.labels[a],
                        "beta": ring.labels[b],
                        "alpha_ideal": labels_from_mask(
                            ring, serre_closure(ring, 1 << a).members),
                        "beta_ideal": labels_from_mask(
                            ring, serre_closure(ring, 1 << b).members),
                    }
        return True, None
    if mode != DEFINITIONAL:
        raise RingError(f"unknown primality mode {mode!r}")
    masks = [i.members for i in
             enumerate_serre_ideals(ring, TWO_SIDED, allow_large)]
    escaping = [m for m in masks if m & ~members]
    for i in escaping:
        for j in escaping:
            if not product_support(ring, i, j) & ~members:
                return False, {
                    "ideal_pair": [labels_from_mask(ring, i),
                                   labels_from_mask(ring, j)],
                }
    return True, None


def is_completely_prime(ring, ideal):
    """No pair of basis elements outside P whose product support lands in
    P; a vanishing product of elements outside P refutes."""
    members = require_proper_two_sided(ring, ideal)
    outside = [i for i in range(ring.size) if not members >> i & 1]
    pm = ring.product_masks
    for a in outside:
        row = pm[a]
        for b in outside:
            if not row[b] & ~members:
                return False, {"alpha": ring.labels[a],
                               "beta": ring.labels[b]}
    return True, None


def is_semiprime(ring, ideal, mode=FAST, allow_large=False):
    """Serre semiprimality of a proper two-sided ideal subset.

    Fast mode scans basis elements against the two-step self-products;
    definitional mode asks for equality with the intersection of the Serre
    primes above (false with a note when no prime lies above).
    """
    members = require_proper_two_sided(ring, ideal)
    if mode == FAST:
        tm = ring.triple_masks
        for a in range(ring.size):
            if members >> a & 1:
                continue
            if not tm[a][a] & ~members:
                return False, {"element": ring.labels[a]}
        return True, None
    if mode != DEFINITIONAL:
        raise RingError(f"unknown semiprimality mode {mode!r}")
    over = [p.members for p in serre_spec(ring, allow_large).primes
            if not members & ~p.members]
    if not over:
        return False, {"note": "no Serre prime ideal contains this ideal"}
    inter = ring.full_mask
    for p in over:
        inter &= p
    if inter == members:
        return True, None
    return False, {"intersection": labels_from_mask(ring, inter)}


@dataclass
class SpectrumReport:
    """Serre prime ideals in canonical order with per-prime flags and the
    inclusion (specialization) preorder."""

    ring_name: str
    primes: list
    completely_prime: list
    semiprime: list
    inclusions: list = field(default_factory=list)  # (i, j): primes[i] < primes[j]


def serre_spec(ring, allow_large=False):
    ideals = enumerate_serre_ideals(ring, TWO_SIDED, allow_large)
    full = ring.full_mask
    primes = [i for i in ideals
              if i.members != full and is_serre_prime(ring, i, FAST)[0]]
    cp = [is_completely_prime(ring, p)[0] for p in primes]
    inclusions = []
    for i, p in enumerate(primes):
        for j, q in enumerate(primes):
            if i != j and not p.members & ~q.members:
                inclusions.append((i, j))
    return SpectrumReport(ring.name, primes, cp, [True] * len(primes),
                          inclusions)


def minimal_primes_over(ring, ideal, allow_large=False):
    """Inclusion-minimal Serre primes over a proper two-sided ideal, plus a
    finite product chain of them (repetition allowed) whose iterated
    product support lies inside the ideal.

    The chain is found by recursive splitting: a non-prime ideal admits a
    pair of strictly larger ideal subsets whose product support falls back
    into it, and the two half-chains concatenate.  Splitting pairs are
    tried in canonical lattice order and results memoized, so the outcome
    is deterministic.  Each chain entry is then replaced by a minimal
    prime below it, which keeps the product property.
    """
    members = require_proper_two_sided(ring, ideal)
    ideals = enumerate_serre_ideals(ring, TWO_SIDED, allow_large)
    masks = [i.members for i in ideals]
    full = ring.full_mask
    prime_masks = [m for m in masks
                   if m != full and is_serre_prime(ring, m, FAST)[0]]
    over = [p for p in prime_masks if not members & ~p]
    if not over:
        raise NoPrimeOver(
            "no Serre prime ideal contains "
            f"{{{', '.join(labels_from_mask(ring, members))}}}")
    minimal = [p for p in over
               if not any(q != p and not q & ~p for q in over)]

    prime_set = set(prime_masks)
    memo = {}

    def chain_for(m):
        if m in memo:
            return memo[m]
        if m != full and m in prime_set:
            memo[m] = [m]
            return memo[m]
        memo[m] = None  # guards against revisiting along the recursion
        result = None
        above = [k for k in masks if not m & ~k and k != m]
        for j in above:
            for k in above:
                if product_support(ring, j, k) & ~m:
                    continue
                cj = chain_for(j)
                if cj is None:
                    continue
                ck = chain_for(k)
                if ck is None:
                    continue
                result = cj + ck
                break
            if result is not None:
                break
        memo[m] = result
        return result

    raw_chain = chain_for(members)
    if raw_chain is None:
        raise NoPrimeOver(
            "no product chain of Serre primes exists over "
            f"{{{', '.join(labels_from_mask(ring, members))}}}")

    def minimal_below(p):
        candidates = [q for q in over if not q & ~p]
        best = [q for q in candidates
                if not any(r != q and not r & ~q for r in candidates)]
        best.sort(key=subset_key)
        return best[0]

    chain = [minimal_below(p) for p in raw_chain]
    return ([IdealSubset(m) for m in sorted(minimal, key=subset_key)],
            [IdealSubset(m) for m in chain])


def chain_product_support(ring, chain):
    """Left fold of product_support along a chain of ideal subsets."""
    if not chain:
        return 0
    acc = chain[0].members if isinstance(chain[0], IdealSubset) else chain[0]
    for nxt in chain[1:]:
        acc = product_support(ring, acc, nxt)
    return acc


def maximal_disjoint_primes(ring, mult_set, ideal, allow_large=False):
    """Maximal ideal subsets containing the given one and avoiding every
    power of the multiplicative generator; each is Serre prime."""
    base = members_of(ideal)
    ok, _ = is_serre_ideal(ring, base, TWO_SIDED)
    if not ok:
        raise NotAnIdeal("a two-sided Serre ideal is required")
    for s in mult_set.orbit:
        if not s & ~base:
            raise GeneratorInsideIdeal(
                "a power of the generator lies inside the ideal")
    candidates = []
    for i in enumerate_serre_ideals(ring, TWO_SIDED, allow_large):
        m = i.members
        if base & ~m:
            continue
        if any(not s & ~m for s in mult_set.orbit):
            continue
        candidates.append(m)
    maximal = [m for m in candidates
               if not any(k != m and not m & ~k for k in candidates)]
    return [IdealSubset(m) for m in sorted(maximal, key=subset_key)]
