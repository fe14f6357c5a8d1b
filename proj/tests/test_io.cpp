// Algebra file format: serialize/parse round trips and parse diagnostics.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "lsa/algebra_io.hpp"
#include "lsa/catalog.hpp"

using namespace lsa;

namespace {

AlgebraFile parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_algebra(in);
}

std::string message_of(const std::string& text) {
    try {
        parse_text(text);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("Leibniz algebra with form survives a round trip") {
    QuadraticLeibniz q = osp12();
    AlgebraFile f = parse_text(serialize(q.alg, &q.form));
    CHECK_FALSE(f.is_dialgebra);
    CHECK_EQ(f.basis, q.alg.basis);
    CHECK_EQ(f.bracket, q.alg.bracket);
    REQUIRE(f.form.has_value());
    CHECK_EQ(f.form->n, q.form.n);
    CHECK(f.form->gram == q.form.gram);
    LeibnizSuperalgebra l = f.as_leibniz();
    CHECK_EQ(l.bracket, q.alg.bracket);
    CHECK_THROWS_AS(f.as_dialgebra(), std::invalid_argument);
}

TEST_CASE("dialgebra with bar-unit survives a round trip") {
    SuperDialgebra d = trunc_poly(3);
    AlgebraFile f = parse_text(serialize(d));
    CHECK(f.is_dialgebra);
    CHECK_EQ(f.basis, d.basis);
    CHECK_EQ(f.left, d.left);
    CHECK_EQ(f.right, d.right);
    REQUIRE(f.unit.has_value());
    CHECK_EQ(*f.unit, *d.bar_unit);
    SuperDialgebra back = f.as_dialgebra();
    CHECK_EQ(back.left, d.left);
    CHECK_THROWS_AS(f.as_leibniz(), std::invalid_argument);
}

TEST_CASE("values parse as coefficient/name pairs with 0 for the zero vector") {
    AlgebraFile f = parse_text(
        "kind leibniz\n"
        "basis a 0\n"
        "basis q 1\n"
        "bracket a q = 1/2 q -3 a\n"  // mixed-parity value is the parser's job to keep
        "bracket q q = 0\n");
    SparseVec want{{0, Rational(-3)}, {1, Rational(1, 2)}};
    CHECK_EQ(f.bracket.at(0, 1), want);
    CHECK(f.bracket.at(1, 1).is_zero());
    CHECK(f.bracket.at(1, 0).is_zero());  // unlisted products default to zero
    CHECK_FALSE(f.unit.has_value());
    CHECK_FALSE(f.form.has_value());
}

TEST_CASE("comments, blank lines, and flexible whitespace are accepted") {
    AlgebraFile f = parse_text(
        "# a tiny abelian example\n"
        "\n"
        "kind leibniz\n"
        "  basis x 0   # trailing comment\n"
        "basis\ty 0\n"
        "bracket x y = 0\n");
    CHECK_EQ(f.basis.dim(), 2);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(message_of("kind ring\n").find("line 1") != std::string::npos);
    CHECK(message_of("kind leibniz\nbasis a 0\nbracket a b = 0\n").find("line 3") !=
          std::string::npos);
}

TEST_CASE("malformed input is rejected") {
    // missing or duplicate kind
    CHECK_THROWS_AS(parse_text("basis a 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_text("kind leibniz\nkind leibniz\nbasis a 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_text("kind ring\nbasis a 0\n"), std::invalid_argument);
    // no basis at all
    CHECK_THROWS_AS(parse_text("kind leibniz\n"), std::invalid_argument);
    // basis after products, bad parity, duplicate name
    CHECK_THROWS_AS(parse_text("kind leibniz\nbasis a 0\nbracket a a = 0\nbasis b 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_text("kind leibniz\nbasis a 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_text("kind leibniz\nbasis a 0\nbasis a 0\n"),
                    std::invalid_argument);
    // unknown names, bad coefficients, odd token counts, repeated entries
    CHECK_THROWS_AS(parse_text("kind leibniz\nbasis a 0\nbracket a b = 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_text("kind leibniz\nbasis a 0\nbracket a a = 1 b\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_text("kind leibniz\nbasis a 0\nbracket a a = x a\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_text("kind leibniz\nbasis a 0\nbracket a a = 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_text("kind leibniz\nbasis a 0\nbracket a a = 1 a\nbracket a a = 0\n"),
        std::invalid_argument);
    // directives of the wrong kind
    CHECK_THROWS_AS(parse_text("kind leibniz\nbasis a 0\nleft a a = 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_text("kind leibniz\nbasis a 0\nunit = 1 a\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_text("kind dialgebra\nbasis a 0\nbracket a a = 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_text("kind dialgebra\nbasis a 0\nform a a = 1\n"),
                    std::invalid_argument);
    // form entries must be single rationals
    CHECK_THROWS_AS(parse_text("kind leibniz\nbasis a 0\nform a a = 1 a\n"),
                    std::invalid_argument);
}

TEST_CASE("load_algebra distinguishes unreadable files from bad contents") {
    CHECK_THROWS_AS(load_algebra("/nonexistent/algebra.alg"), std::runtime_error);
}
