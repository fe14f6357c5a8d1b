// Exact linear algebra over the rationals: canonical echelon form, kernels,
// solving, and subspace lattice operations. All results are deterministic.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lsa/sparse_vec.hpp"

namespace lsa {

/// A subspace of QQ^ambient held in reduced row-echelon form: rows have strictly
/// increasing pivot indices, each leading coefficient is 1, and every pivot column
/// is zero in all other rows. Two equal subspaces have identical rows.
struct Subspace {
    std::uint32_t ambient = 0;
    std::vector<SparseVec> rows;
    std::vector<std::uint32_t> pivots;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(rows.size()); }

    /// Residual of v after clearing every pivot coordinate; zero iff v lies in the subspace.
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

    /// Coefficients of v over rows (index k = coefficient of rows[k]), when v is a member.
    std::optional<SparseVec> coordinates(const SparseVec& v) const;

    bool operator==(const Subspace& o) const = default;
};

/// Incrementally maintains a reduced row-echelon basis. Insertion keeps sparse rows
/// sparse and switches to a dense scratch row once fill-in exceeds half the ambient
/// dimension.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::uint32_t ambient) : space_{ambient, {}, {}} {}

    /// Adds v to the span. Returns true when the rank grew.
    bool insert(const SparseVec& v);

    std::uint32_t dim() const { return space_.dim(); }
    const Subspace& current() const { return space_; }
    Subspace take() { return std::move(space_); }

private:
    Subspace space_;
};

/// Row space of the given vectors inside QQ^ambient.
Subspace rref(const std::vector<SparseVec>& vectors, std::uint32_t ambient);

/// Null space {x : A x = 0} of the matrix whose rows are `rows`, acting on QQ^ncols.
Subspace kernel(const std::vector<SparseVec>& rows, std::uint32_t ncols);

/// One solution x of A x = rhs (rhs indexed by row number), or nullopt when inconsistent.
/// Free coordinates are set to zero, so the result is deterministic.
std::optional<SparseVec> solve(const std::vector<SparseVec>& rows, const SparseVec& rhs,
                               std::uint32_t ncols);

/// dim(sup) - dim(sub); throws std::invalid_argument unless sub is contained in sup.
std::uint32_t quotient_dim(const Subspace& sub, const Subspace& sup);

/// Sum of two subspaces of the same ambient space.
Subspace join(const Subspace& u, const Subspace& v);

/// Intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& u, const Subspace& v);

}  // namespace lsa
