"""Exact computation with Serre ideal subsets of finite positive-basis
rings: ideal lattices, prime / completely prime / semiprime spectra, the
two spectral topologies, block-ring classification, and a q-twisted
monomial model of quantum affine space."""

from .coefficients import (INT, LAURENT, Coefficient, CoefficientError,
                           CoefficientSyntaxError, add_coefficients,
                           format_coefficient, multiply_coefficients,
                           parse_coefficient)
from .zring import (BASIS_GUARD, LEFT, RIGHT, TWO_SIDED, BasisTooLarge,
                    RingElement, RingError, RingValidationError, UnknownLabel,
                    ZPlusRing, basis_element, build_ring, labels_from_mask,
                    mask_from_labels, multiply_elements, ring_element,
                    support_of, triple_support)
from .ideals import (IdealSubset, ImproperIdeal, NotAnIdeal,
                     enumerate_serre_ideals, is_serre_ideal, product_support,
                     quotient_ring, serre_closure)
from .spectrum import (DEFINITIONAL, FAST, GeneratorInsideIdeal,
                       MultiplicativeSet, NoPrimeOver, SpectrumReport,
                       chain_product_support, is_completely_prime,
                       is_semiprime, is_serre_prime, make_multiplicative_set,
                       maximal_disjoint_primes, minimal_primes_over,
                       serre_spec)
from .topology import (BALMER, ZARISKI, ClosedSet, ClosedSetFamily,
                       build_topology, closed_set, point_closure,
                       specialization_edges, to_dot)
from .twocat import (BlockRingView, MissingBlocks, block_view,
                     check_unit_decomposition, classify_completely_primes,
                     corner_ring)
from .monomial import (FullFace, MonoidIdeal, MonomialRing,
                       build_monoid_ideal, face_quotient, monoid_ideal_is_prime,
                       monoid_membership, monomial_label, truncate_to_ring)
from .io import RingFileError, parse_ring_file, resolve_ring_arg, \
    serialize_ring
from .gallery import gallery_expected, gallery_names, load_gallery

__version__ = "0.1.0"
