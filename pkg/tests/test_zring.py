import random

import pytest

from serrespec import (INT, LAURENT, Coefficient, RingError,
                       RingValidationError, basis_element, build_ring,
                       gallery_names, labels_from_mask, load_gallery,
                       mask_from_labels, multiply_elements, ring_element,
                       support_of, triple_support)
from serrespec.zring import AssociativityViolation, UnitViolation

from conftest import SEED
from oracles import naive_product_mask, naive_triple_support


@pytest.fixture(scope="module")
def gallery():
    return {name: load_gallery(name) for name in gallery_names()}


def test_ising_builds_and_has_three_elements():
    ring = load_gallery("ising")
    assert ring.size == 3
    assert ring.labels == ("1", "eps", "sigma")


def test_broken_ising_reports_associativity_triple():
    tensor = {("1", "1"): {"1": 1}, ("1", "eps"): {"eps": 1},
              ("1", "sigma"): {"sigma": 1},
              ("eps", "1"): {"eps": 1}, ("eps", "eps"): {"1": 1},
              ("eps", "sigma"): {"1": 1},              # wrong: should be sigma
              ("sigma", "1"): {"sigma": 1}, ("sigma", "eps"): {"sigma": 1},
              ("sigma", "sigma"): {"1": 1, "eps": 1}}
    with pytest.raises(RingValidationError) as exc:
        build_ring(["1", "eps", "sigma"], tensor, INT, units=["1"])
    triples = [(v.alpha, v.beta, v.gamma) for v in exc.value.violations
               if isinstance(v, AssociativityViolation)]
    assert ("eps", "eps", "sigma") in triples


def test_matrix_units_block_ring_valid():
    ring = load_gallery("m2-block")
    assert ring.size == 4
    assert ring.blocks is not None and ring.units is not None


def test_duplicate_label_rejected():
    with pytest.raises(RingValidationError):
        build_ring(["a", "a"], {}, INT)


def test_negative_constant_rejected():
    with pytest.raises(RingError):
        build_ring(["a"], {("a", "a"): {"a": Coefficient(INT, {0: -1})}}, INT)


def test_block_incompatibility_detected():
    tensor = {("a", "b"): {"a": 1}}
    blocks = {"a": ("A", "A"), "b": ("B", "B")}
    with pytest.raises(RingValidationError) as exc:
        build_ring(["a", "b"], tensor, INT, blocks)
    assert any("block" in v.describe() for v in exc.value.violations)


def test_unit_violation_detected():
    # a is not idempotent, so it cannot be declared a unit
    with pytest.raises(RingValidationError) as exc:
        build_ring(["a"], {("a", "a"): {"a": 2}}, INT, units=["a"])
    assert any(isinstance(v, UnitViolation) for v in exc.value.violations)


def test_multiply_ising_sigma_squared():
    ring = load_gallery("ising")
    sq = multiply_elements(ring, basis_element(ring, "sigma"),
                           basis_element(ring, "sigma"))
    assert sq == ring_element(ring, {"1": 1, "eps": 1})


def test_multiply_by_zero():
    ring = load_gallery("ising")
    zero = ring_element(ring, {})
    assert multiply_elements(ring, basis_element(ring, "sigma"), zero) == zero


def test_zx2_1_square_is_one():
    ring = load_gallery("zx2-1")
    assert multiply_elements(ring, basis_element(ring, "x"),
                             basis_element(ring, "x")) \
        == basis_element(ring, "1")


def test_signed_multiplication_cancels():
    # (x - 1)(x + 1) = x^2 - 1 = 0 in Z[x]/(x^2 - 1)
    ring = load_gallery("zx2-1")
    a = ring_element(ring, {"x": 1, "1": -1})
    b = ring_element(ring, {"x": 1, "1": 1})
    assert not multiply_elements(ring, a, b)


def test_support_examples():
    ring = load_gallery("ising")
    x = ring_element(ring, {"1": 1, "eps": 1})
    assert labels_from_mask(ring, support_of(x)) == ["1", "eps"]
    assert support_of(ring_element(ring, {})) == 0
    qp = load_gallery("qplane-trunc-2")
    scaled = ring_element(qp, {"x": Coefficient(LAURENT, {1: 2})})
    assert labels_from_mask(qp, support_of(scaled)) == ["x"]


def test_triple_support_examples():
    ising = load_gallery("ising")
    s = ising.index("sigma")
    assert labels_from_mask(ising, triple_support(ising, s, s)) \
        == ["1", "eps", "sigma"]
    m2 = load_gallery("m2-block")
    t = triple_support(m2, m2.index("e12"), m2.index("e21"))
    assert labels_from_mask(m2, t) == ["e11"]
    ti = load_gallery("two-idem")
    assert triple_support(ti, ti.index("a"), ti.index("b")) == 0


def test_triple_support_matches_naive_oracle(gallery):
    for ring in gallery.values():
        for a in range(ring.size):
            for b in range(ring.size):
                assert triple_support(ring, a, b) \
                    == naive_triple_support(ring, a, b)


def test_product_masks_match_naive_oracle(gallery):
    for ring in gallery.values():
        for a in range(ring.size):
            for b in range(ring.size):
                assert ring.product_masks[a][b] == naive_product_mask(ring, a, b)


def _random_positive(ring, rng):
    coeffs = {}
    for _ in range(rng.randint(1, 3)):
        i = rng.randrange(ring.size)
        if ring.mode == INT:
            coeffs[i] = Coefficient(INT, {0: rng.randint(1, 3)})
        else:
            coeffs[i] = Coefficient(LAURENT, {rng.randint(-2, 2): rng.randint(1, 3)})
    return ring_element(ring, coeffs)


def test_multiplication_associative_randomized(gallery):
    rng = random.Random(SEED)
    for ring in gallery.values():
        for _ in range(1000):
            x = _random_positive(ring, rng)
            y = _random_positive(ring, rng)
            z = _random_positive(ring, rng)
            left = multiply_elements(ring, multiply_elements(ring, x, y), z)
            right = multiply_elements(ring, x, multiply_elements(ring, y, z))
            assert left == right


def test_support_homomorphism_on_positive_elements(gallery):
    rng = random.Random(SEED + 1)
    for ring in gallery.values():
        for _ in range(300):
            x = _random_positive(ring, rng)
            y = _random_positive(ring, rng)
            expected = 0
            for a in x.coeffs:
                for b in y.coeffs:
                    expected |= ring.product_masks[a][b]
            assert support_of(multiply_elements(ring, x, y)) == expected


def test_declared_units_act_as_identity(gallery):
    for ring in gallery.values():
        if ring.units is None:
            continue
        units = sorted(ring.units)
        for g in range(ring.size):
            e = basis_element(ring, g)
            left = ring_element(ring, {})
            right = ring_element(ring, {})
            for u in units:
                left = left + multiply_elements(ring, basis_element(ring, u), e)
                right = right + multiply_elements(ring, e, basis_element(ring, u))
            assert left == e
            assert right == e


def test_positive_part_predicate():
    ring = load_gallery("zx2-1")
    assert ring_element(ring, {"1": 2, "x": 1}).is_positive()
    assert not ring_element(ring, {"1": -1}).is_positive()
    assert ring_element(ring, {}).is_positive()


def test_mask_label_round_trip(gallery):
    for ring in gallery.values():
        for m in range(min(1 << ring.size, 64)):
            labels = labels_from_mask(ring, m)
            assert mask_from_labels(ring, labels) == m
