#include "lsa/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsa {

SparseVec Subspace::reduce(const SparseVec& v) const {
    SparseVec r = v;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        Rational c = r.coeff(pivots[k]);
        if (c != 0) r.axpy(-c, rows[k]);
    }
    return r;
}

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v) const {
    SparseVec r = v;
    std::vector<SparseVec::Term> coords;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        Rational c = r.coeff(pivots[k]);
        if (c != 0) {
            r.axpy(-c, rows[k]);
            coords.emplace_back(static_cast<std::uint32_t>(k), std::move(c));
        }
    }
    if (!r.is_zero()) return std::nullopt;
    return SparseVec(std::move(coords));
}

bool EchelonBuilder::insert(const SparseVec& v) {
    auto& rows = space_.rows;
    auto& pivots = space_.pivots;

    SparseVec r;
    if (2 * v.term_count() > space_.ambient && space_.ambient > 0) {
        // Dense scratch path for rows that are already more than half full.
        std::vector<Rational> dense(space_.ambient, Rational(0));
        for (const auto& [i, c] : v) dense[i] = c;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Rational& c = dense[pivots[k]];
            if (c == 0) continue;
            Rational f = c;  // dense[pivot] mutates below
            for (const auto& [i, rc] : rows[k]) dense[i] -= f * rc;
        }
        std::vector<SparseVec::Term> terms;
        for (std::uint32_t i = 0; i < space_.ambient; ++i)
            if (dense[i] != 0) terms.emplace_back(i, std::move(dense[i]));
        r = SparseVec(std::move(terms));
    } else {
        r = space_.reduce(v);
    }
    if (r.is_zero()) return false;

    r.scale(Rational(1) / r.leading().second);
    const std::uint32_t p = r.leading().first;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        Rational c = rows[k].coeff(p);
        if (c != 0) rows[k].axpy(-c, r);
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), p);
    const auto at = static_cast<std::size_t>(pos - pivots.begin());
    pivots.insert(pos, p);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
    return true;
}

Subspace rref(const std::vector<SparseVec>& vectors, std::uint32_t ambient) {
    EchelonBuilder b(ambient);
    for (const auto& v : vectors) b.insert(v);
    return b.take();
}

Subspace kernel(const std::vector<SparseVec>& rows, std::uint32_t ncols) {
    Subspace rspace = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (std::uint32_t p : rspace.pivots) is_pivot[p] = true;

    std::vector<SparseVec> basis;
    for (std::uint32_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseVec::Term> terms{{f, Rational(1)}};
        for (std::size_t k = 0; k < rspace.rows.size(); ++k) {
            Rational c = rspace.rows[k].coeff(f);
            if (c != 0) terms.emplace_back(rspace.pivots[k], -c);
        }
        basis.emplace_back(std::move(terms));
    }
    return rref(basis, ncols);
}

std::optional<SparseVec> solve(const std::vector<SparseVec>& rows, const SparseVec& rhs,
                               std::uint32_t ncols) {
    EchelonBuilder b(ncols + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseVec aug = rows[i];
        Rational r = rhs.coeff(static_cast<std::uint32_t>(i));
        if (r != 0) aug.axpy(r, SparseVec::unit(ncols));
        b.insert(aug);
    }
    Subspace s = b.take();
    std::vector<SparseVec::Term> terms;
    for (std::size_t k = 0; k < s.rows.size(); ++k) {
        if (s.pivots[k] == ncols) return std::nullopt;  // row 0 = 1: inconsistent
        Rational c = s.rows[k].coeff(ncols);
        if (c != 0) terms.emplace_back(s.pivots[k], std::move(c));
    }
    return SparseVec(std::move(terms));
}

std::uint32_t quotient_dim(const Subspace& sub, const Subspace& sup) {
    if (sub.ambient != sup.ambient)
        throw std::invalid_argument("quotient_dim: ambient dimensions differ");
    for (const auto& row : sub.rows)
        if (!sup.contains(row))
            throw std::invalid_argument("quotient_dim: subspace is not contained");
    return sup.dim() - sub.dim();
}

Subspace join(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("join: ambient dimensions differ");
    EchelonBuilder b(u.ambient);
    for (const auto& r : u.rows) b.insert(r);
    for (const auto& r : v.rows) b.insert(r);
    return b.take();
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient)
        throw std::invalid_argument("intersect: ambient dimensions differ");
    // x = sum_k alpha_k u_k lies in v iff alpha kills every residual u_k mod v.
    std::vector<SparseVec> residuals;
    residuals.reserve(u.rows.size());
    for (const auto& r : u.rows) residuals.push_back(v.reduce(r));

    // Rows of the residual matrix, transposed so kernel() sees alpha-space.
    std::vector<SparseVec> eq(u.ambient);
    std::vector<std::vector<SparseVec::Term>> cols(u.ambient);
    for (std::uint32_t k = 0; k < residuals.size(); ++k)
        for (const auto& [i, c] : residuals[k]) cols[i].emplace_back(k, c);
    std::vector<SparseVec> rows;
    rows.reserve(u.ambient);
    for (auto& t : cols) rows.emplace_back(std::move(t));

    Subspace alpha = kernel(rows, u.dim());
    std::vector<SparseVec> basis;
    for (const auto& a : alpha.rows) {
        SparseVec x;
        for (const auto& [k, c] : a) x.axpy(c, u.rows[k]);
        basis.push_back(std::move(x));
    }
    return rref(basis, u.ambient);
}

}  // namespace lsa
