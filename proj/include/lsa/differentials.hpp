// Differential forms of a commutative unital dialgebra: the free one-form module,
// the Leibniz-rule relations, the quotient with its two-sided actions, and the
// universal property that pins the construction down.
#pragma once

#include <cstdint>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/linalg.hpp"

namespace lsa {

/// The quotient Omega = F/N where F is spanned by a_i -| d(a_j) (one coordinate per
/// basis pair) and N is the two-sided submodule generated by the Leibniz-rule
/// relations d(a*b) - (da)*b - a*(db) for both products. Carries the induced
/// two-sided dialgebra actions and the universal derivation d.
struct DifferentialModule {
    SuperDialgebra base;          // the dialgebra D the forms are over
    GradedBasis basis;            // quotient basis (one name per surviving coordinate)
    Subspace relations;           // N inside the pair-coordinate space F
    std::vector<std::uint32_t> rep_coord;  // quotient index -> F coordinate
    std::vector<SparseVec> d_images;       // d(a_j) in quotient coordinates
    Table left_l, left_r;         // b -| w, b |- w   (dialgebra index, form index)
    Table right_l, right_r;       // w -| b, w |- b   (form index, dialgebra index)

    std::uint32_t dim() const { return basis.dim(); }

    /// Universal derivation, extended linearly to any element of D.
    SparseVec d_of(const SparseVec& a) const {
        SparseVec out;
        for (const auto& [j, c] : a) out.axpy(c, d_images[j]);
        return out;
    }

    /// The pairing {a,b} = b -| d(a) used by loop brackets.
    SparseVec pairing(const SparseVec& a, const SparseVec& b) const {
        return left_l.eval(b, d_of(a));
    }

    /// Project an element of the pair-coordinate space F onto quotient coordinates.
    SparseVec to_quotient(const SparseVec& in_f) const;

    /// The forms as a dialgebra bimodule (for universal-property checks).
    DiBimodule as_bimodule() const { return DiBimodule{basis, left_l, left_r, right_l, right_r}; }
};

/// Build the differential-form module of a commutative unital dialgebra.
/// Throws std::invalid_argument when d fails the dialgebra axioms, commutativity,
/// grading, or has no bar-unit.
DifferentialModule omega(const SuperDialgebra& d);

/// dim of Omega / span{d(a_j)} (the one-forms modulo exact forms).
std::uint32_t omega_mod_d_dim(const DifferentialModule& om);

/// Dimensions of derivations D -> M versus module maps Omega -> M; the universal
/// property says they match for every dialgebra bimodule M.
struct UniversalPropertyReport {
    std::uint32_t der_dim = 0;
    std::uint32_t hom_dim = 0;
    bool match = false;
};
UniversalPropertyReport check_universal_property(const DifferentialModule& om,
                                                 const DiBimodule& m);

}  // namespace lsa
