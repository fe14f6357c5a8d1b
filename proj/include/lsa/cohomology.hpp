// Cochain complex of a Leibniz superalgebra with module coefficients: the
// differential, d^2 = 0 checks, cohomology dimensions, 2-cocycles versus
// coboundaries, central extensions from cocycles, and derivation spaces.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/checks.hpp"
#include "lsa/linalg.hpp"

namespace lsa {

/// A homogeneous multilinear map L^n -> M, stored densely: values[t] is the
/// value on the basis tuple with mixed-radix index t (n digits base dim L).
struct Cochain {
    std::uint32_t arity = 0;
    Parity parity = Parity::even;
    std::uint32_t alg_dim = 0;
    std::uint32_t mod_dim = 0;
    std::vector<SparseVec> values;  // size = alg_dim^arity (one entry when arity == 0)

    static Cochain zero(std::uint32_t arity, Parity p, std::uint32_t alg_dim,
                        std::uint32_t mod_dim);

    /// Value on a basis tuple given by its digits.
    const SparseVec& at(const std::vector<std::uint32_t>& tuple) const;
    SparseVec& at(const std::vector<std::uint32_t>& tuple);

    bool is_zero() const;
};

/// The cochain differential d^n f for the two-sided module m.
Cochain coboundary(const LeibnizModule& m, const Cochain& f);

/// d(d(f)) == 0 for every basis cochain of the given arity.
CheckReport check_d_squared(const LeibnizModule& m, std::uint32_t arity);

/// dim HL^n(L, M) = dim ker d^n - rank d^{n-1}.
std::uint32_t hl_dim(const LeibnizModule& m, std::uint32_t arity);

/// The dimensions behind hl_dim: the cochain space, its cocycles, and the
/// coboundaries arriving from one arity below.
struct CohomologyDims {
    std::uint32_t c_dim = 0;  // dim of the arity-n cochain space
    std::uint32_t z_dim = 0;  // dim ker d^n
    std::uint32_t b_dim = 0;  // rank d^{n-1}
    std::uint32_t hl() const { return z_dim - b_dim; }
};
CohomologyDims hl_dims(const LeibnizModule& m, std::uint32_t arity);

/// Even 2-cocycles and 2-coboundaries valued in a trivial c_dim-dimensional
/// even space, as subspaces of the flat coordinate space (pair, coefficient).
struct CocycleSpace {
    std::uint32_t c_dim = 0;
    Subspace z2;
    Subspace b2;
    std::uint32_t hl2_dim() const { return z2.dim() - b2.dim(); }
};
CocycleSpace z2_b2(const LeibnizSuperalgebra& l, std::uint32_t c_dim);

/// Flat coordinate of psi(e_i, e_j)_r in the (pair, coefficient) space.
inline std::uint32_t cocycle_coord(std::uint32_t n, std::uint32_t c, std::uint32_t i,
                                   std::uint32_t j, std::uint32_t r) {
    return (i * n + j) * c + r;
}

/// Super-antisymmetric bilinear maps psi(x,y) = -(-1)^{|x||y|} psi(y,x), as a
/// subspace of the same flat coordinate space as z2_b2.
Subspace antisymmetric_bilinear_space(const GradedBasis& basis, std::uint32_t c_dim);

/// A central extension 0 -> kernel -> total -> base -> 0 with explicit projection.
struct CentralExtension {
    LeibnizSuperalgebra total;
    LeibnizSuperalgebra base;
    std::vector<SparseVec> projection;  // image of each total basis element in base coords
    Subspace kernel_space;              // inside total coordinates
};

/// Projection is a surjective bracket homomorphism and its kernel is central.
CheckReport verify_central_extension(const CentralExtension& e);

/// Build base (+) kernel with bracket twisted by an even 2-cocycle psi (valued in
/// a trivial c_dim space, given as a Cochain of arity 2). Throws when psi is not
/// an even cocycle.
CentralExtension extension_from_cocycle(const LeibnizSuperalgebra& l, const Cochain& psi);

/// Do two trivial-coefficient 2-cochains differ by a coboundary g o bracket?
/// Returns the witness g (images of basis elements in coefficient coordinates).
std::optional<std::vector<SparseVec>> are_equivalent(const LeibnizSuperalgebra& l,
                                                     const Cochain& f, const Cochain& g);

/// Maps mu with mu([a,b]) = [mu(a),b] + (-1)^{s|a|}[a,mu(b)], split by parity s.
/// Coordinates flatten mu(e_i) = sum_k mu_{ik} e_k at index i*dim + k.
struct DerivationSpace {
    Subspace even;
    Subspace odd;
    std::uint32_t dim() const { return even.dim() + odd.dim(); }
};
DerivationSpace derivation_space(const LeibnizSuperalgebra& l);

/// Span of the maps ad z = [z, -] in the same flat coordinates.
Subspace inner_derivation_space(const LeibnizSuperalgebra& l);

}  // namespace lsa
