import pytest

from serrespec import (DEFINITIONAL, FAST, GeneratorInsideIdeal, IdealSubset,
                       ImproperIdeal, NoPrimeOver, NotAnIdeal, basis_element,
                       chain_product_support, enumerate_serre_ideals,
                       gallery_names, is_completely_prime, is_semiprime,
                       is_serre_prime, labels_from_mask, load_gallery,
                       make_multiplicative_set, mask_from_labels,
                       maximal_disjoint_primes, minimal_primes_over,
                       product_support, serre_spec)

from oracles import (naive_is_completely_prime, naive_is_prime,
                     naive_is_semiprime)


@pytest.fixture(scope="module")
def gallery():
    return {name: load_gallery(name) for name in gallery_names()}


def proper_ideals(ring):
    return [i for i in enumerate_serre_ideals(ring)
            if i.members != ring.full_mask]


def spectrum_labels(ring):
    return [labels_from_mask(ring, p.members)
            for p in serre_spec(ring).primes]


def test_prime_examples():
    zx = load_gallery("zx2-1")
    assert is_serre_prime(zx, IdealSubset(0))[0]
    ti = load_gallery("two-idem")
    holds, witness = is_serre_prime(ti, IdealSubset(0))
    assert not holds
    assert (witness["alpha"], witness["beta"]) == ("a", "b")
    assert witness["alpha_ideal"] == ["a"] and witness["beta_ideal"] == ["b"]
    m2 = load_gallery("m2-block")
    assert is_serre_prime(m2, IdealSubset(0))[0]


def test_prime_precondition_errors():
    ising = load_gallery("ising")
    with pytest.raises(ImproperIdeal):
        is_serre_prime(ising, IdealSubset(ising.full_mask))
    with pytest.raises(NotAnIdeal):
        is_serre_prime(ising, IdealSubset(mask_from_labels(ising, ["sigma"])))


def test_completely_prime_examples():
    m2 = load_gallery("m2-block")
    holds, witness = is_completely_prime(m2, IdealSubset(0))
    # first vanishing product in basis order; e12*e12 = 0 refutes as well
    assert not holds and witness == {"alpha": "e11", "beta": "e21"}
    from serrespec import multiply_elements
    assert not multiply_elements(m2, basis_element(m2, "e12"),
                                 basis_element(m2, "e12"))
    ising = load_gallery("ising")
    assert is_completely_prime(ising, IdealSubset(0))[0]
    ti = load_gallery("two-idem")
    assert is_completely_prime(ti, IdealSubset(mask_from_labels(ti, ["a"])))[0]


def test_semiprime_examples():
    nil = load_gallery("nilpotent")
    holds, witness = is_semiprime(nil, IdealSubset(0))
    assert not holds and witness == {"element": "a"}
    assert is_semiprime(nil, IdealSubset(0), DEFINITIONAL)[1]["note"]
    ti = load_gallery("two-idem")
    assert is_semiprime(ti, IdealSubset(0))[0]
    assert not is_serre_prime(ti, IdealSubset(0))[0]
    ising = load_gallery("ising")
    assert is_semiprime(ising, IdealSubset(0))[0]


def test_fast_equals_definitional_everywhere(gallery):
    for ring in gallery.values():
        for ideal in proper_ideals(ring):
            fast = is_serre_prime(ring, ideal, FAST)[0]
            definitional = is_serre_prime(ring, ideal, DEFINITIONAL)[0]
            assert fast == definitional, (ring.name, ideal)
            assert fast == naive_is_prime(ring, ideal.members)
            s_fast = is_semiprime(ring, ideal, FAST)[0]
            s_def = is_semiprime(ring, ideal, DEFINITIONAL)[0]
            assert s_fast == s_def, (ring.name, ideal)
            assert s_fast == naive_is_semiprime(ring, ideal.members)


def test_completely_prime_matches_naive_and_implies_prime(gallery):
    for ring in gallery.values():
        for ideal in proper_ideals(ring):
            cp = is_completely_prime(ring, ideal)[0]
            assert cp == naive_is_completely_prime(ring, ideal.members)
            if cp:
                assert is_serre_prime(ring, ideal, FAST)[0]


def test_semiprime_square_characterizations(gallery):
    # semiprime Q: no ideal I with I*I inside Q escapes Q, and conversely
    for ring in gallery.values():
        lattice = [i.members for i in enumerate_serre_ideals(ring)]
        for ideal in proper_ideals(ring):
            q = ideal.members
            semi = is_semiprime(ring, ideal, FAST)[0]
            square_cond = all(
                not (not product_support(ring, i, i) & ~q and i & ~q)
                for i in lattice)
            strict_cond = all(
                product_support(ring, i, i) & ~q
                for i in lattice if i != q and not q & ~i)
            assert semi == square_cond == strict_cond, (ring.name, ideal)


def test_semiprime_power_absorption(gallery):
    # if the n-fold product support of an ideal lies in semiprime Q for
    # some n <= 4, the ideal itself does
    for ring in gallery.values():
        lattice = [i.members for i in enumerate_serre_ideals(ring)]
        for ideal in proper_ideals(ring):
            q = ideal.members
            if not is_semiprime(ring, ideal, FAST)[0]:
                continue
            for i in lattice:
                power = i
                for _ in range(3):  # I^2, I^3, I^4
                    power = product_support(ring, power, i)
                    if not power & ~q:
                        assert not i & ~q, (ring.name, ideal, i)
                        break


def test_spec_examples():
    assert spectrum_labels(load_gallery("zx2-1")) == [[]]
    assert spectrum_labels(load_gallery("two-idem")) == [["a"], ["b"]]
    assert spectrum_labels(load_gallery("nilpotent")) == []


def test_spec_flags_and_inclusions():
    zx = load_gallery("zx2-x")
    spec = serre_spec(zx)
    assert spectrum_labels(zx) == [[], ["x"]]
    assert spec.completely_prime == [True, True]
    assert spec.semiprime == [True, True]
    assert spec.inclusions == [(0, 1)]


def test_spec_nonempty_for_unital_gallery_rings(gallery):
    for ring in gallery.values():
        if ring.units is not None:
            assert serre_spec(ring).primes, ring.name


def test_minimal_primes_examples():
    ti = load_gallery("two-idem")
    minimal, chain = minimal_primes_over(ti, IdealSubset(0))
    as_labels = [labels_from_mask(ti, p.members) for p in minimal]
    assert as_labels == [["a"], ["b"]]
    assert [labels_from_mask(ti, p.members) for p in chain] == [["a"], ["b"]]

    zx = load_gallery("zx2-x")
    x = IdealSubset(mask_from_labels(zx, ["x"]))
    minimal, chain = minimal_primes_over(zx, x)
    assert [labels_from_mask(zx, p.members) for p in minimal] == [["x"]]
    assert [labels_from_mask(zx, p.members) for p in chain] == [["x"]]

    ising = load_gallery("ising")
    minimal, chain = minimal_primes_over(ising, IdealSubset(0))
    assert [p.members for p in minimal] == [0]
    assert [p.members for p in chain] == [0]


def test_minimal_primes_no_prime_over():
    nil = load_gallery("nilpotent")
    with pytest.raises(NoPrimeOver):
        minimal_primes_over(nil, IdealSubset(0))


def test_minimal_primes_chain_verified_everywhere(gallery):
    for ring in gallery.values():
        primes = serre_spec(ring).primes
        prime_masks = {p.members for p in primes}
        for ideal in proper_ideals(ring):
            over = [p for p in prime_masks if not ideal.members & ~p]
            if not over:
                continue
            minimal, chain = minimal_primes_over(ring, ideal)
            minimal_masks = {p.members for p in minimal}
            # inclusion-minimality against the full spectrum
            for p in minimal_masks:
                assert not any(q != p and not q & ~p for q in over)
            # the chain multiplies into the ideal and consists of minimal
            # primes covering all of them
            fold = chain_product_support(ring, chain)
            assert not fold & ~ideal.members
            assert {p.members for p in chain} == minimal_masks


def test_multiplicative_set_orbit_is_exact():
    ising = load_gallery("ising")
    m = make_multiplicative_set(ising, basis_element(ising, "sigma"))
    assert [labels_from_mask(ising, o) for o in m.orbit] \
        == [["sigma"], ["1", "eps"]]


def test_multiplicative_set_rejects_bad_generators():
    from serrespec import RingError, ring_element
    ising = load_gallery("ising")
    with pytest.raises(RingError):
        make_multiplicative_set(ising, ring_element(ising, {}))
    with pytest.raises(RingError):
        make_multiplicative_set(ising, ring_element(ising, {"sigma": -1}))
    m2 = load_gallery("m2-block")
    with pytest.raises(RingError):
        make_multiplicative_set(m2, basis_element(m2, "e12"))


def test_maximal_disjoint_examples():
    zx = load_gallery("zx2-1")
    m = make_multiplicative_set(zx, basis_element(zx, "1"))
    out = maximal_disjoint_primes(zx, m, IdealSubset(0))
    assert [p.members for p in out] == [0]
    assert is_serre_prime(zx, out[0])[0]

    ti = load_gallery("two-idem")
    m = make_multiplicative_set(ti, basis_element(ti, "a"))
    out = maximal_disjoint_primes(ti, m, IdealSubset(0))
    assert [labels_from_mask(ti, p.members) for p in out] == [["b"]]

    ising = load_gallery("ising")
    m = make_multiplicative_set(ising, basis_element(ising, "sigma"))
    out = maximal_disjoint_primes(ising, m, IdealSubset(0))
    assert [p.members for p in out] == [0]


def test_generator_inside_ideal_rejected():
    zx = load_gallery("zx2-x")
    m = make_multiplicative_set(zx, basis_element(zx, "x"))
    with pytest.raises(GeneratorInsideIdeal):
        maximal_disjoint_primes(zx, m, IdealSubset(mask_from_labels(zx, ["x"])))


def test_maximal_disjoint_always_prime(gallery):
    for ring in gallery.values():
        for g in range(ring.size):
            if ring.blocks is not None:
                src, dst = ring.blocks[g]
                if src != dst:
                    continue
            m = make_multiplicative_set(ring, basis_element(ring, g))
            if any(s == 0 for s in m.orbit):
                continue  # some power vanishes: not disjoint from 0
            for p in maximal_disjoint_primes(ring, m, IdealSubset(0)):
                assert is_serre_prime(ring, p, FAST)[0]
                assert is_serre_prime(ring, p, DEFINITIONAL)[0]
