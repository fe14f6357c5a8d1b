// Universal central extension of a perfect Leibniz superalgebra, built as the
// derived subalgebra of L (+) W where W = (L tensor L) / I, together with the
// universality check against arbitrary central extensions and the lifting of
// derivations and automorphisms through the extension.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/cohomology.hpp"
#include "lsa/linalg.hpp"

namespace lsa {

/// The universal central extension and the data needed to lift maps through it.
struct UceResult {
    LeibnizSuperalgebra base;   // the input L
    LeibnizSuperalgebra total;  // the derived subalgebra of L (+) W, on its own basis
    std::vector<SparseVec> projection;  // total basis -> base coordinates
    Subspace kernel_space;              // the center C = ker(projection), in total coords
    std::uint32_t w_dim = 0;

    // Internal presentation (needed by the lifts): I inside L tensor L, the
    // tensor coordinate carried by each W basis vector, and the rows of the
    // derived subalgebra inside L (+) W coordinates.
    Subspace i_span;
    std::vector<std::uint32_t> w_rep;
    std::vector<SparseVec> hat_rows;
};

/// Build the universal central extension. Throws when l is not perfect or the
/// construction fails its own verification.
UceResult uce(const LeibnizSuperalgebra& l);

/// Result of matching the universal extension against a central extension e of
/// the same base: the unique morphism gamma with proj_e(gamma(x)) = proj(x).
struct UniversalityReport {
    bool exists = false;
    bool unique = false;
    bool bijective = false;
    std::vector<SparseVec> gamma;  // total basis of the UCE -> coordinates of e.total
};
UniversalityReport check_universality(const UceResult& u, const CentralExtension& e);

/// Lift a derivation of the base (given by basis images, homogeneous of parity s)
/// to a derivation of the total algebra compatible with the projection.
/// Returns std::nullopt when the induced map fails to stabilize the presentation.
std::optional<std::vector<SparseVec>> lift_derivation(const UceResult& u,
                                                      const std::vector<SparseVec>& mu,
                                                      Parity s);

/// Lift a parity-preserving automorphism of the base (basis images) likewise.
std::optional<std::vector<SparseVec>> lift_automorphism(const UceResult& u,
                                                        const std::vector<SparseVec>& theta);

}  // namespace lsa
