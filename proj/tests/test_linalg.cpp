// Exact linear algebra: echelon canonicity, kernels, solving, and the
// subspace lattice, on hand-built matrices and randomized instances.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "lsa/linalg.hpp"

using namespace lsa;

namespace {

SparseVec vec(std::initializer_list<int> dense) {
    std::vector<SparseVec::Term> terms;
    std::uint32_t i = 0;
    for (int c : dense) {
        if (c != 0) terms.emplace_back(i, Rational(c));
        ++i;
    }
    return SparseVec(std::move(terms));
}

SparseVec random_vec(std::mt19937_64& rng, std::uint32_t ambient) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<SparseVec::Term> terms;
    for (std::uint32_t i = 0; i < ambient; ++i) {
        int c = coeff(rng);
        if (c != 0) terms.emplace_back(i, Rational(c));
    }
    return SparseVec(std::move(terms));
}

Subspace random_subspace(std::mt19937_64& rng, std::uint32_t ambient, std::uint32_t nvecs) {
    EchelonBuilder b(ambient);
    for (std::uint32_t k = 0; k < nvecs; ++k) b.insert(random_vec(rng, ambient));
    return b.take();
}

// A x as a row-indexed vector, matching the convention used by solve().
SparseVec matvec(const std::vector<SparseVec>& rows, const SparseVec& x) {
    std::vector<SparseVec::Term> out;
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
        Rational s(0);
        for (const auto& [j, c] : rows[r]) s += c * x.coeff(j);
        if (s != 0) out.emplace_back(r, s);
    }
    return SparseVec(std::move(out));
}

}  // namespace

TEST_CASE("echelon basis is canonical and insert reports rank growth") {
    EchelonBuilder a(4);
    CHECK(a.insert(vec({1, 2, 0, 1})));
    CHECK(a.insert(vec({0, 1, 1, 0})));
    CHECK_FALSE(a.insert(vec({1, 3, 1, 1})));  // sum of the first two
    CHECK(a.insert(vec({0, 0, 0, 2})));
    CHECK_FALSE(a.insert(SparseVec()));
    CHECK_EQ(a.dim(), 3);

    // Same span, different insertion order: identical reduced rows.
    EchelonBuilder b(4);
    b.insert(vec({0, 0, 0, 2}));
    b.insert(vec({1, 3, 1, 1}));
    b.insert(vec({2, 5, 1, 2}));
    b.insert(vec({0, 1, 1, 0}));
    CHECK_EQ(a.current(), b.current());

    // Pivot columns are cleared everywhere and leading coefficients are 1.
    const Subspace& s = a.current();
    for (std::uint32_t k = 0; k < s.dim(); ++k) {
        CHECK_EQ(s.rows[k].leading().first, s.pivots[k]);
        CHECK_EQ(s.rows[k].leading().second, Rational(1));
        for (std::uint32_t l = 0; l < s.dim(); ++l)
            if (l != k) CHECK_EQ(s.rows[l].coeff(s.pivots[k]), Rational(0));
    }
}

TEST_CASE("reduce, contains, and coordinates agree") {
    Subspace s = rref({vec({1, 0, 2, 0}), vec({0, 1, -1, 0})}, 4);
    SparseVec member = vec({3, -2, 8, 0});
    CHECK(s.contains(member));
    auto coords = s.coordinates(member);
    REQUIRE(coords.has_value());
    SparseVec rebuilt;
    for (const auto& [k, c] : *coords) rebuilt.axpy(c, s.rows[k]);
    CHECK_EQ(rebuilt, member);

    SparseVec outside = vec({0, 0, 0, 1});
    CHECK_FALSE(s.contains(outside));
    CHECK_FALSE(s.coordinates(outside).has_value());
    CHECK_EQ(s.reduce(member), SparseVec());
    CHECK_EQ(s.reduce(outside), outside);
}

TEST_CASE("kernel vectors annihilate the rows and rank-nullity holds") {
    std::mt19937_64 rng(20260817u);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t ncols = 2 + static_cast<std::uint32_t>(trial % 6);
        std::vector<SparseVec> rows;
        for (int r = 0; r < 4; ++r) rows.push_back(random_vec(rng, ncols));
        Subspace ker = kernel(rows, ncols);
        Subspace row_space = rref(rows, ncols);
        CHECK_EQ(row_space.dim() + ker.dim(), ncols);
        for (const auto& k : ker.rows) CHECK(matvec(rows, k).is_zero());
    }
}

TEST_CASE("solve finds exact solutions and reports inconsistency") {
    std::vector<SparseVec> rows = {vec({1, 1, 0}), vec({0, 2, 2}), vec({1, 3, 2})};
    // rhs indexed by row number; row 2 = row 0 + row 1, so rhs must match.
    SparseVec good{{0, Rational(1)}, {1, Rational(4)}, {2, Rational(5)}};
    auto x = solve(rows, good, 3);
    REQUIRE(x.has_value());
    CHECK_EQ(matvec(rows, *x), good);

    SparseVec bad{{0, Rational(1)}, {1, Rational(4)}, {2, Rational(6)}};
    CHECK_FALSE(solve(rows, bad, 3).has_value());

    // Underdetermined: free coordinates are zero, so the answer is reproducible.
    std::vector<SparseVec> one_row = {vec({0, 1, 1})};
    auto y = solve(one_row, SparseVec::unit(0), 3);
    REQUIRE(y.has_value());
    CHECK_EQ(*y, solve(one_row, SparseVec::unit(0), 3).value());
    CHECK_EQ(matvec(one_row, *y), SparseVec::unit(0));
    CHECK_EQ(y->coeff(0), Rational(0));  // non-pivot column stays free
}

TEST_CASE("solve round-trips randomized consistent systems") {
    std::mt19937_64 rng(77u);
    for (int trial = 0; trial < 25; ++trial) {
        std::uint32_t ncols = 3 + static_cast<std::uint32_t>(trial % 4);
        std::vector<SparseVec> rows;
        for (int r = 0; r < 5; ++r) rows.push_back(random_vec(rng, ncols));
        SparseVec x0 = random_vec(rng, ncols);
        SparseVec rhs = matvec(rows, x0);
        auto x = solve(rows, rhs, ncols);
        REQUIRE(x.has_value());
        CHECK_EQ(matvec(rows, *x), rhs);
    }
}

TEST_CASE("join and intersect satisfy the dimension formula") {
    std::mt19937_64 rng(5u);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t ambient = 4 + static_cast<std::uint32_t>(trial % 4);
        Subspace u = random_subspace(rng, ambient, 3);
        Subspace v = random_subspace(rng, ambient, 3);
        Subspace sum = join(u, v);
        Subspace meet = intersect(u, v);
        CHECK_EQ(sum.dim() + meet.dim(), u.dim() + v.dim());
        for (const auto& r : u.rows) CHECK(sum.contains(r));
        for (const auto& r : v.rows) CHECK(sum.contains(r));
        for (const auto& r : meet.rows) {
            CHECK(u.contains(r));
            CHECK(v.contains(r));
        }
        CHECK_EQ(join(u, u), u);
        CHECK_EQ(intersect(u, u), u);
    }
}

TEST_CASE("quotient_dim counts codimension and rejects non-subspaces") {
    Subspace small = rref({vec({1, 0, 0})}, 3);
    Subspace big = rref({vec({1, 0, 0}), vec({0, 0, 1})}, 3);
    CHECK_EQ(quotient_dim(small, big), 1);
    CHECK_EQ(quotient_dim(big, big), 0);
    CHECK_THROWS_AS(quotient_dim(big, small), std::invalid_argument);
    Subspace skew = rref({vec({0, 1, 0})}, 3);
    CHECK_THROWS_AS(quotient_dim(skew, big), std::invalid_argument);
}
