import pytest

from serrespec import (FAST, IdealSubset, MissingBlocks, basis_element,
                       block_view, check_unit_decomposition,
                       classify_completely_primes, corner_ring,
                       enumerate_serre_ideals, gallery_names,
                       is_completely_prime, is_serre_prime, labels_from_mask,
                       load_gallery, multiply_elements, quotient_ring,
                       serre_spec)

BLOCK_RINGS = ["m2-block", "m3-block", "two-idem", "mixed-3obj"]


def brute_completely_primes(ring):
    return [i.members for i in enumerate_serre_ideals(ring)
            if i.members != ring.full_mask and is_completely_prime(ring, i)[0]]


def test_unit_decomposition_examples():
    m2 = load_gallery("m2-block")
    assert check_unit_decomposition(m2) == (True, None)
    ok, witness = check_unit_decomposition(m2, ["e11"])
    assert not ok and witness in {"e12", "e21", "e22"}
    ti = load_gallery("two-idem")
    assert check_unit_decomposition(ti) == (True, None)


def test_unit_decomposition_requires_units():
    nil = load_gallery("nilpotent")
    with pytest.raises(Exception):
        check_unit_decomposition(nil)


def test_block_view_structure():
    m2 = load_gallery("m2-block")
    view = block_view(m2)
    assert view.objects == ("1", "2")
    assert view.block_masks[("1", "1")] == 1 << m2.index("e11")
    assert view.block_masks[("2", "1")] == 1 << m2.index("e12")
    assert view.diagonal_units["1"] == m2.index("e11")


def test_block_view_requires_blocks_and_units():
    ising = load_gallery("ising")
    with pytest.raises(MissingBlocks):
        block_view(ising)


def test_corner_ring_of_mixed_fixture():
    mixed = load_gallery("mixed-3obj")
    corner, old = corner_ring(mixed, "A")
    assert corner.labels == ("uA",)
    assert old == [mixed.index("uA")]
    assert corner.units == frozenset({0})


def test_classify_examples():
    assert classify_completely_primes(load_gallery("m2-block")) == []
    ti = load_gallery("two-idem")
    out = classify_completely_primes(ti)
    assert [labels_from_mask(ti, p.members) for p in out] == [["a"], ["b"]]
    # one-object rings degrade to plain filtering
    ising = load_gallery("ising")
    assert [p.members for p in classify_completely_primes(ising)] == [0]


@pytest.mark.parametrize("name", BLOCK_RINGS)
def test_classify_matches_brute_force(name):
    ring = load_gallery(name)
    classified = [p.members for p in classify_completely_primes(ring)]
    assert classified == brute_completely_primes(ring)


@pytest.mark.parametrize("name", ["m2-block", "m3-block"])
def test_matrix_block_rings_are_simple(name):
    ring = load_gallery(name)
    assert [i.members for i in enumerate_serre_ideals(ring)] \
        == [0, ring.full_mask]
    spec = serre_spec(ring)
    assert [p.members for p in spec.primes] == [0]
    assert is_serre_prime(ring, IdealSubset(0), FAST)[0]


def test_quotient_by_classified_prime_is_domain_like():
    # composable products of nonzero classes stay nonzero in the quotient
    for name in gallery_names():
        ring = load_gallery(name)
        for p in classify_completely_primes(ring):
            q = quotient_ring(ring, p)
            for a in range(q.size):
                for b in range(q.size):
                    if q.blocks is not None:
                        if q.blocks[b][1] != q.blocks[a][0]:
                            continue
                    prod = multiply_elements(q, basis_element(q, a),
                                             basis_element(q, b))
                    assert prod, (name, q.labels[a], q.labels[b])
