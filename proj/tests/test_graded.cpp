// Parities, Koszul signs, graded bases, sparse vectors, and rational parsing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "lsa/graded.hpp"
#include "lsa/rational.hpp"
#include "lsa/sparse_vec.hpp"

using namespace lsa;

TEST_CASE("parity arithmetic and Koszul signs") {
    CHECK_EQ(Parity::even + Parity::even, Parity::even);
    CHECK_EQ(Parity::even + Parity::odd, Parity::odd);
    CHECK_EQ(Parity::odd + Parity::even, Parity::odd);
    CHECK_EQ(Parity::odd + Parity::odd, Parity::even);
    CHECK_EQ(koszul(Parity::even, Parity::even), 1);
    CHECK_EQ(koszul(Parity::even, Parity::odd), 1);
    CHECK_EQ(koszul(Parity::odd, Parity::even), 1);
    CHECK_EQ(koszul(Parity::odd, Parity::odd), -1);
    CHECK_EQ(pow_sign(0), 1);
    CHECK_EQ(pow_sign(1), -1);
    CHECK_EQ(pow_sign(2), 1);
    CHECK_EQ(pow_sign(-1), -1);
    CHECK_EQ(pow_sign(-2), 1);
}

TEST_CASE("graded basis validates names and resolves indices") {
    GradedBasis b = GradedBasis::make({{"e", Parity::even}, {"q", Parity::odd}});
    CHECK_EQ(b.dim(), 2);
    CHECK_EQ(b.index_of("q"), 1);
    CHECK_EQ(b.parity_of(1), Parity::odd);
    CHECK_THROWS_AS(b.index_of("missing"), std::invalid_argument);

    CHECK_THROWS_AS(GradedBasis::make({{"", Parity::even}}), std::invalid_argument);
    CHECK_THROWS_AS(GradedBasis::make({{"a b", Parity::even}}), std::invalid_argument);
    CHECK_THROWS_AS(GradedBasis::make({{"x", Parity::even}, {"x", Parity::odd}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GradedBasis::make({"a", "b"}, {Parity::even}), std::invalid_argument);
}

TEST_CASE("parity of a vector detects homogeneity") {
    GradedBasis b = GradedBasis::make({{"e", Parity::even}, {"q", Parity::odd}});
    CHECK_EQ(b.parity_of(SparseVec::unit(0)), Parity::even);
    CHECK_EQ(b.parity_of(SparseVec::unit(1)), Parity::odd);
    CHECK_FALSE(b.parity_of(SparseVec()).has_value());
    SparseVec mixed = SparseVec::unit(0) + SparseVec::unit(1);
    CHECK_FALSE(b.parity_of(mixed).has_value());
}

TEST_CASE("sparse vectors canonicalize, merge, and cancel") {
    // Construction sorts, merges duplicate indices, and drops zeros.
    SparseVec v({{3, Rational(2)}, {1, Rational(1)}, {3, Rational(-2)}, {0, Rational(0)}});
    CHECK_EQ(v, SparseVec::unit(1));
    CHECK_EQ(v.term_count(), 1);
    CHECK_EQ(v.coeff(3), Rational(0));
    CHECK_EQ(v.coeff(1), Rational(1));
    CHECK_EQ(v.leading().first, 1);

    SparseVec w = SparseVec::unit(0) + SparseVec::unit(1) * Rational(3);
    w.axpy(Rational(-3), SparseVec::unit(1));
    CHECK_EQ(w, SparseVec::unit(0));
    w -= SparseVec::unit(0);
    CHECK(w.is_zero());
    CHECK_EQ(w.min_ambient(), 0);

    SparseVec z = SparseVec::unit(2);
    z.scale(Rational(0));
    CHECK(z.is_zero());

    SparseVec shifted = SparseVec::unit(1).mapped([](std::uint32_t i) { return i + 10; });
    CHECK_EQ(shifted, SparseVec::unit(11));
    CHECK_EQ(shifted.min_ambient(), 12);

    CHECK_EQ(-SparseVec::unit(4), SparseVec::unit(4) * Rational(-1));
    CHECK_EQ(SparseVec::unit(4) - SparseVec::unit(4), SparseVec());
}

TEST_CASE("rational literals parse exactly and format in lowest terms") {
    CHECK_EQ(parse_rational("3"), Rational(3));
    CHECK_EQ(parse_rational("-7/2"), Rational(-7, 2));
    CHECK_EQ(parse_rational("4/6"), Rational(2, 3));  // canonicalized
    CHECK_EQ(format_rational(Rational(5)), "5");
    CHECK_EQ(format_rational(Rational(-1, 4)), "-1/4");
    CHECK_EQ(parse_rational(format_rational(Rational(22, 7))), Rational(22, 7));

    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}
