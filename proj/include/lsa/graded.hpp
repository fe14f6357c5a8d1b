// Z/2-graded bases: parities, Koszul signs, and named homogeneous basis elements.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsa/sparse_vec.hpp"

namespace lsa {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

/// (-1)^{|a||b|} as an exact integer sign.
inline int koszul(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

/// (-1)^n for accumulated parity exponents.
inline int pow_sign(int n) { return (n & 1) ? -1 : 1; }

/// An ordered basis of homogeneous elements with unique whitespace-free names.
struct GradedBasis {
    std::vector<std::string> names;
    std::vector<Parity> parity;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(names.size()); }

    static GradedBasis make(std::vector<std::pair<std::string, Parity>> elems) {
        GradedBasis b;
        for (auto& [name, p] : elems) {
            if (name.empty()) throw std::invalid_argument("empty basis name");
            for (char c : name)
                if (c == ' ' || c == '\t' || c == '\n')
                    throw std::invalid_argument("whitespace in basis name: " + name);
            for (const auto& seen : b.names)
                if (seen == name) throw std::invalid_argument("duplicate basis name: " + name);
            b.names.push_back(std::move(name));
            b.parity.push_back(p);
        }
        return b;
    }

    static GradedBasis make(const std::vector<std::string>& names,
                            const std::vector<Parity>& parity) {
        if (names.size() != parity.size())
            throw std::invalid_argument("basis names and parities differ in length");
        std::vector<std::pair<std::string, Parity>> elems;
        elems.reserve(names.size());
        for (std::size_t i = 0; i < names.size(); ++i) elems.emplace_back(names[i], parity[i]);
        return make(std::move(elems));
    }

    Parity parity_of(std::uint32_t i) const { return parity[i]; }

    std::uint32_t index_of(const std::string& name) const {
        for (std::uint32_t i = 0; i < dim(); ++i)
            if (names[i] == name) return i;
        throw std::invalid_argument("unknown basis element: " + name);
    }

    /// Parity of a homogeneous vector; nullopt for zero or mixed-parity vectors.
    std::optional<Parity> parity_of(const SparseVec& v) const {
        std::optional<Parity> p;
        for (const auto& [i, c] : v) {
            if (!p)
                p = parity[i];
            else if (*p != parity[i])
                return std::nullopt;
        }
        return p;
    }

    bool operator==(const GradedBasis& o) const = default;
};

}  // namespace lsa
