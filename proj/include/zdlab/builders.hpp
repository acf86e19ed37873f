#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zdlab/ring.hpp"

namespace zdlab {

// Z/nZ.
FiniteRing cyclic_ring(std::size_t n, const SizeCaps& caps = {});

// The abelian group Z/d_1 + ... + Z/d_k with every product zero. Elements are
// mixed-radix coordinate vectors, first factor most significant.
FiniteRing null_ring(const std::vector<std::size_t>& factors,
                     const SizeCaps& caps = {});

// k x k matrices over Z/n that vanish outside the first row. Element index is
// the base-n encoding of the first row, (1,1) entry most significant. The
// product only sees the left factor's (1,1) entry: x * y = x_11 * y.
FiniteRing first_row_ring(std::size_t k, std::size_t n,
                          const SizeCaps& caps = {});

// M_k(F_q) for a prime q; base-q row-major encoding, (1,1) most significant.
FiniteRing full_matrix_ring(std::size_t k, std::size_t q,
                            const SizeCaps& caps = {});

// Componentwise ring on pairs; index of (a, b) is a * |B| + b.
FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b,
                          const SizeCaps& caps = {});

// Ring on the (sorted) element subset, reindexed in increasing order. Throws
// NotASubring unless the subset contains 0 and is closed under +, - and *.
FiniteRing subring(const FiniteRing& ring, const ElementSet& elements);

/// Quotient by a two-sided ideal. Cosets are represented by their smallest
/// element and indexed in increasing order of representative, so the zero
/// coset is index 0. Throws NotAnIdeal.
FiniteRing quotient_ring(const FiniteRing& ring, const ElementSet& ideal);

// Coset index of every element of the ring under quotient_ring(ring, ideal).
std::vector<Element> coset_indices(const FiniteRing& ring,
                                   const ElementSet& ideal);

struct LeftIdentityDecomposition {
  Element identity;  // the left identity e
  ElementSet ideal;  // I_e = {a : a e = 0}
  ElementSet corner; // R_e = {a : a e = a}
  // splitting[r] = (x, y) with x in R_e, y in I_e and r = x + y.
  std::vector<std::pair<Element, Element>> splitting;
};

/// Splits the ring along a left identity e: R = R_e + I_e.
///
/// Verifies that I_e is a two-sided ideal (with at least two elements when e
/// is proper), that R_e is a subring with two-sided identity e, that the
/// splitting is a bijection R <-> R_e x I_e, and that x -> x + I_e is a ring
/// isomorphism R_e -> R/I_e. A violated claim throws
/// InternalInvariantViolation; a non-identity e throws NotLeftIdentity.
LeftIdentityDecomposition decompose(const FiniteRing& ring, Element e);

bool is_prime(std::size_t q);

// Euler's totient.
std::size_t totient(std::size_t n);

}  // namespace zdlab
