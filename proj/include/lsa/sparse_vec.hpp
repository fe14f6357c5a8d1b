// Sparse exact vectors: ordered (index, coefficient) terms with no explicit zeros.
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lsa/rational.hpp"

namespace lsa {

/// A vector over the rationals, stored as index-sorted nonzero terms.
class SparseVec {
public:
    using Term = std::pair<std::uint32_t, Rational>;

    SparseVec() = default;
    SparseVec(std::initializer_list<Term> terms) : SparseVec(std::vector<Term>(terms)) {}

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    explicit SparseVec(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        for (auto& t : terms) {
            if (!terms_.empty() && terms_.back().first == t.first)
                terms_.back().second += t.second;
            else
                terms_.push_back(std::move(t));
        }
        std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
    }

    /// The standard basis vector e_i.
    static SparseVec unit(std::uint32_t i) { return SparseVec{{i, Rational(1)}}; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient at index i (zero when absent).
    Rational coeff(std::uint32_t i) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                                   [](const Term& t, std::uint32_t k) { return t.first < k; });
        return (it != terms_.end() && it->first == i) ? it->second : Rational(0);
    }

    /// Lowest-index nonzero term; only valid when !is_zero().
    const Term& leading() const { return terms_.front(); }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    /// this += c * other (no-op when c == 0).
    void axpy(const Rational& c, const SparseVec& other) {
        if (c == 0 || other.is_zero()) return;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + other.terms_.size());
        auto a = terms_.begin();
        auto b = other.terms_.begin();
        while (a != terms_.end() || b != other.terms_.end()) {
            if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == terms_.end() || b->first < a->first) {
                merged.emplace_back(b->first, c * b->second);
                ++b;
            } else {
                Rational v = a->second + c * b->second;
                if (v != 0) merged.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        terms_ = std::move(merged);
    }

    void scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return;
        }
        for (auto& t : terms_) t.second *= c;
    }

    SparseVec operator+(const SparseVec& o) const {
        SparseVec r = *this;
        r.axpy(Rational(1), o);
        return r;
    }
    SparseVec operator-(const SparseVec& o) const {
        SparseVec r = *this;
        r.axpy(Rational(-1), o);
        return r;
    }
    SparseVec operator*(const Rational& c) const {
        SparseVec r = *this;
        r.scale(c);
        return r;
    }
    SparseVec operator-() const { return *this * Rational(-1); }
    SparseVec& operator+=(const SparseVec& o) {
        axpy(Rational(1), o);
        return *this;
    }
    SparseVec& operator-=(const SparseVec& o) {
        axpy(Rational(-1), o);
        return *this;
    }

    bool operator==(const SparseVec& o) const { return terms_ == o.terms_; }

    /// Largest index present plus one (0 for the zero vector).
    std::uint32_t min_ambient() const { return terms_.empty() ? 0 : terms_.back().first + 1; }

    /// Re-index terms through a map (used to embed vectors in product spaces).
    template <typename F>
    SparseVec mapped(F&& index_map) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [i, c] : terms_) out.emplace_back(index_map(i), c);
        return SparseVec(std::move(out));
    }

private:
    std::vector<Term> terms_;
};

}  // namespace lsa
