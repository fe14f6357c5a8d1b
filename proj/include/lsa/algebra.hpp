// Structure-constant presentations: dialgebras, Leibniz superalgebras, modules,
// and invariant bilinear forms. Tables map basis pairs to coefficient vectors.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lsa/graded.hpp"
#include "lsa/sparse_vec.hpp"

namespace lsa {

/// A (rows x cols)-indexed table of vectors; entry (i,j) is the product of the
/// i-th left and j-th right basis element expressed in the result basis.
class Table {
public:
    Table() = default;
    Table(std::uint32_t rows, std::uint32_t cols)
        : rows_(rows), cols_(cols), t_(static_cast<std::size_t>(rows) * cols) {}

    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    const SparseVec& at(std::uint32_t i, std::uint32_t j) const {
        return t_[static_cast<std::size_t>(i) * cols_ + j];
    }
    void set(std::uint32_t i, std::uint32_t j, SparseVec v) {
        t_[static_cast<std::size_t>(i) * cols_ + j] = std::move(v);
    }

    /// Bilinear extension: sum of x_i y_j * entry(i,j).
    SparseVec eval(const SparseVec& x, const SparseVec& y) const {
        SparseVec out;
        for (const auto& [i, xc] : x)
            for (const auto& [j, yc] : y) out.axpy(xc * yc, at(i, j));
        return out;
    }

    bool operator==(const Table& o) const = default;

private:
    std::uint32_t rows_ = 0, cols_ = 0;
    std::vector<SparseVec> t_;
};

/// Two associative-style products (left = -|, right = |-) on one graded basis,
/// with an optional bar-unit (1 |- a = a = a -| 1).
struct SuperDialgebra {
    GradedBasis basis;
    Table left;
    Table right;
    std::optional<SparseVec> bar_unit;

    std::uint32_t dim() const { return basis.dim(); }
};

/// One bilinear bracket on a graded basis (left Leibniz convention).
struct LeibnizSuperalgebra {
    GradedBasis basis;
    Table bracket;

    std::uint32_t dim() const { return basis.dim(); }
    SparseVec br(const SparseVec& x, const SparseVec& y) const { return bracket.eval(x, y); }
};

/// Bracket table satisfying the right Leibniz identity instead of the left one.
struct RightLeibnizAlgebra {
    GradedBasis basis;
    Table bracket;

    std::uint32_t dim() const { return basis.dim(); }
};

/// A two-sided module over a Leibniz superalgebra: actions [x,m] and [m,x].
struct LeibnizModule {
    LeibnizSuperalgebra alg;
    GradedBasis basis;
    Table left_act;   // (algebra index, module index) -> module coords
    Table right_act;  // (module index, algebra index) -> module coords

    std::uint32_t dim() const { return basis.dim(); }

    /// The algebra acting on itself by its bracket.
    static LeibnizModule adjoint(const LeibnizSuperalgebra& l) {
        return LeibnizModule{l, l.basis, l.bracket, l.bracket};
    }

    /// c_dim-dimensional even space with both actions zero.
    static LeibnizModule trivial(const LeibnizSuperalgebra& l, std::uint32_t c_dim) {
        GradedBasis b;
        for (std::uint32_t k = 0; k < c_dim; ++k) {
            b.names.push_back("c" + std::to_string(k));
            b.parity.push_back(Parity::even);
        }
        return LeibnizModule{l, b, Table(l.dim(), c_dim), Table(c_dim, l.dim())};
    }
};

/// An even supersymmetric bilinear form given by its Gram matrix on the basis.
struct BilinearForm {
    std::uint32_t n = 0;
    std::vector<Rational> gram;  // n*n entries, row-major

    BilinearForm() = default;
    explicit BilinearForm(std::uint32_t dim) : n(dim), gram(static_cast<std::size_t>(dim) * dim) {}

    const Rational& at(std::uint32_t i, std::uint32_t j) const {
        return gram[static_cast<std::size_t>(i) * n + j];
    }
    Rational& at(std::uint32_t i, std::uint32_t j) {
        return gram[static_cast<std::size_t>(i) * n + j];
    }

    Rational eval(const SparseVec& x, const SparseVec& y) const {
        Rational s(0);
        for (const auto& [i, xc] : x)
            for (const auto& [j, yc] : y) s += xc * yc * at(i, j);
        return s;
    }
};

/// A Leibniz superalgebra packaged with an invariant form (needed for loop brackets).
struct QuadraticLeibniz {
    LeibnizSuperalgebra alg;
    BilinearForm form;
};

/// A two-sided module over a dialgebra: all four actions b -| m, b |- m, m -| b, m |- b.
struct DiBimodule {
    GradedBasis basis;
    Table left_l;   // (dialgebra index, module index), action via -|
    Table left_r;   // (dialgebra index, module index), action via |-
    Table right_l;  // (module index, dialgebra index), action via -|
    Table right_r;  // (module index, dialgebra index), action via |-

    std::uint32_t dim() const { return basis.dim(); }

    /// The dialgebra acting on itself by its own products.
    static DiBimodule regular(const SuperDialgebra& d) {
        return DiBimodule{d.basis, d.left, d.right, d.left, d.right};
    }
};

}  // namespace lsa
