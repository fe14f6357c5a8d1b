// Builders: dialgebra-to-bracket functors, differential and tensor dialgebras,
// matrix algebras and their generator relations, free objects, and currents.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "lsa/catalog.hpp"
#include "lsa/checks.hpp"
#include "lsa/constructions.hpp"

using namespace lsa;

namespace {

// Upper-triangular 2x2 matrices with the inner differential d = c * [E12, -]:
// associative but non-commutative, so it exercises the sign bookkeeping.
SuperDialgebra upper_triangular_dialgebra() {
    GradedBasis b = GradedBasis::make(
        {{"E11", Parity::even}, {"E12", Parity::even}, {"E22", Parity::even}});
    Table prod(3, 3);
    prod.set(0, 0, SparseVec::unit(0));  // E11 E11 = E11
    prod.set(0, 1, SparseVec::unit(1));  // E11 E12 = E12
    prod.set(1, 2, SparseVec::unit(1));  // E12 E22 = E12
    prod.set(2, 2, SparseVec::unit(2));  // E22 E22 = E22
    std::vector<SparseVec> d = {-SparseVec::unit(1), SparseVec(), SparseVec::unit(1)};
    return from_differential_superalgebra(b, prod, d);
}

// The Grassmann line QQ[q]/(q^2) with q odd, as multiplication tables.
struct GrassmannLine {
    GradedBasis basis = GradedBasis::make({{"1", Parity::even}, {"q", Parity::odd}});
    Table prod{2, 2};
    GrassmannLine() {
        prod.set(0, 0, SparseVec::unit(0));
        prod.set(0, 1, SparseVec::unit(1));
        prod.set(1, 0, SparseVec::unit(1));
    }
};

}  // namespace

TEST_CASE("from_differential_superalgebra validates its input") {
    GradedBasis b = GradedBasis::make({{"a", Parity::even}, {"b", Parity::even}});
    Table zero(2, 2);
    std::vector<SparseVec> no_d = {SparseVec(), SparseVec()};

    // (a a) a = a vs a (a a) = 0: not associative.
    Table bad(2, 2);
    bad.set(0, 0, SparseVec::unit(1));
    bad.set(1, 0, SparseVec::unit(0));
    CHECK_THROWS_WITH_AS(from_differential_superalgebra(b, bad, no_d),
                         doctest::Contains("not associative"), std::invalid_argument);

    GradedBasis mixed = GradedBasis::make({{"x", Parity::even}, {"q", Parity::odd}});
    std::vector<SparseVec> odd_d = {SparseVec::unit(1), SparseVec()};
    CHECK_THROWS_WITH_AS(from_differential_superalgebra(mixed, Table(2, 2), odd_d),
                         doctest::Contains("d is not even"), std::invalid_argument);

    std::vector<SparseVec> not_nilpotent = {SparseVec::unit(1), SparseVec::unit(0)};
    CHECK_THROWS_WITH_AS(from_differential_superalgebra(b, zero, not_nilpotent),
                         doctest::Contains("d^2"), std::invalid_argument);

    // QQ[t]/(t^2) with d(t) = 1 fails the derivation law: d(t*t) = 0 but
    // d(t) t + t d(t) = 2t.
    SuperDialgebra t2 = trunc_poly(2);
    Table mult = t2.left;  // multiplication of the underlying algebra
    std::vector<SparseVec> d_bad = {SparseVec(), SparseVec::unit(0)};
    CHECK_THROWS_WITH_AS(from_differential_superalgebra(t2.basis, mult, d_bad),
                         doctest::Contains("not a derivation"), std::invalid_argument);

    CHECK_THROWS_AS(from_differential_superalgebra(b, Table(1, 2), no_d),
                    std::invalid_argument);
}

TEST_CASE("differential dialgebras satisfy the axioms without commutativity") {
    SuperDialgebra ut = upper_triangular_dialgebra();
    CHECK(check_dialgebra(ut).ok());
    CHECK_FALSE(check_commutative(ut).ok());
    CHECK_FALSE(ut.bar_unit.has_value());
    // x -| y = x d(y): E11 -| E11 = E11 (-E12) = -E12.
    CHECK_EQ(ut.left.at(0, 0), -SparseVec::unit(1));
    // x |- y = d(x) y: E11 |- E11 = -E12 E11 = 0.
    CHECK(ut.right.at(0, 0).is_zero());

    // Both bracket functors produce their respective Leibniz identities.
    LeibnizSuperalgebra left_br = dialgebra_to_leibniz(ut);
    CHECK(check_leibniz(left_br).ok());
    RightLeibnizAlgebra right_br = dialgebra_to_right_leibniz(ut);
    CHECK(check_right_leibniz(right_br).ok());
    // They differ: [x,y] = x|-y -+ y-|x versus x-|y -+ y|-x.
    CHECK(left_br.bracket != right_br.bracket);
    CHECK_FALSE(check_lie_super(left_br).ok());
}

TEST_CASE("tensor products of dialgebras carry the Koszul sign") {
    SuperDialgebra t2 = trunc_poly(2);
    SuperDialgebra ten = tensor_dialgebra(t2, t2);
    CHECK_EQ(ten.dim(), 4);
    CHECK(check_dialgebra(ten).ok());
    CHECK(check_commutative(ten).ok());
    REQUIRE(ten.bar_unit.has_value());
    std::uint32_t t1 = ten.basis.index_of("t*1");
    std::uint32_t one_t = ten.basis.index_of("1*t");
    std::uint32_t tt = ten.basis.index_of("t*t");
    CHECK_EQ(ten.left.at(t1, one_t), SparseVec::unit(tt));

    // Odd factors anticommute across the tensor sign: with q odd in both
    // slots, (q*1)(1*q) = q*q but (1*q)(q*1) = -(q*q).
    GrassmannLine g;
    SuperDialgebra gd{g.basis, g.prod, g.prod, SparseVec::unit(0)};
    CHECK(check_dialgebra(gd).ok());
    SuperDialgebra gg = tensor_dialgebra(gd, gd);
    CHECK(check_dialgebra(gg).ok());
    std::uint32_t q1 = gg.basis.index_of("q*1");
    std::uint32_t oq = gg.basis.index_of("1*q");
    std::uint32_t qq = gg.basis.index_of("q*q");
    CHECK_EQ(gg.left.at(q1, oq), SparseVec::unit(qq));
    CHECK_EQ(gg.left.at(oq, q1), -SparseVec::unit(qq));
    CHECK_FALSE(check_commutative(gg).ok());
}

TEST_CASE("matrix dialgebra and the gl bracket agree with the functor") {
    for (std::uint32_t big : {1u, 2u}) {
        SuperDialgebra d = trunc_poly(big);
        LeibnizSuperalgebra direct = gl_leibniz(2, 1, d);
        LeibnizSuperalgebra via = dialgebra_to_leibniz(matrix_dialgebra(2, 1, d));
        CHECK_EQ(direct.basis, via.basis);
        CHECK_EQ(direct.bracket, via.bracket);
        CHECK(check_leibniz(direct).ok());
    }
    CHECK_EQ(gl_leibniz(1, 1, trunc_poly(1)).dim(), 4);

    // Over QQ the even part is gl(2) + gl(1) and the bracket closes as usual;
    // the odd block squares into the even part.
    LeibnizSuperalgebra gl = gl_leibniz(2, 1, trunc_poly(1));
    CHECK_EQ(gl.dim(), 9);
    std::uint32_t e13 = gl.basis.index_of("E(1,3)*1");
    std::uint32_t e31 = gl.basis.index_of("E(3,1)*1");
    CHECK_EQ(gl.basis.parity_of(e13), Parity::odd);
    // [E13, E31] = E11 + E33 (anticommutator of odd elements).
    SparseVec want = SparseVec::unit(gl.basis.index_of("E(1,1)*1")) +
                     SparseVec::unit(gl.basis.index_of("E(3,3)*1"));
    CHECK_EQ(gl.bracket.at(e13, e31), want);
}

TEST_CASE("sl is the perfect derived subalgebra of gl") {
    LeibnizSuperalgebra sl = sl_leibniz(2, 1, trunc_poly(1));
    CHECK_EQ(sl.dim(), 8);  // supertrace zero
    CHECK(check_leibniz(sl).ok());
    CHECK(is_perfect(sl));

    // sl(1,1) is degenerate: three-dimensional but not perfect.
    QuadraticLeibniz small = sl_mn(1, 1);
    CHECK_EQ(small.alg.dim(), 3);
    CHECK_FALSE(is_perfect(small.alg));
    CHECK_EQ(derived_subalgebra(small.alg).dim(), 1);
}

TEST_CASE("Steinberg generator relations hold in sl(m,n,D)") {
    for (std::uint32_t big : {1u, 2u}) {
        CheckReport rep = check_stl_relations(2, 1, trunc_poly(big));
        CHECK(rep.ok());
        CHECK(rep.checked > 0);
        CHECK(rep.skipped > 0);  // contractions with j == k and i == l are out of scope
    }
}

TEST_CASE("free Leibniz superalgebra brackets by prepending letters") {
    TruncatedLeibniz f = free_leibniz_super({{"t", Parity::even}}, 3);
    CHECK_EQ(f.alg.dim(), 3);  // t, t.t, t.t.t
    CHECK(f.identity_report.ok());
    CHECK(f.identity_report.skipped > 0);  // out-of-range triples are not judged
    std::uint32_t t = f.alg.basis.index_of("t");
    std::uint32_t tt = f.alg.basis.index_of("t.t");
    std::uint32_t ttt = f.alg.basis.index_of("t.t.t");
    CHECK_EQ(f.alg.bracket.at(t, t), SparseVec::unit(tt));
    CHECK_EQ(f.alg.bracket.at(t, tt), SparseVec::unit(ttt));
    // [t.t, t] = t.[t,t] - [t, t.t] = t.t.t - t.t.t = 0: left arguments of
    // length two already act trivially here.
    CHECK(f.alg.bracket.at(tt, t).is_zero());
    CHECK_EQ(f.degree[ttt], 3);
    CHECK_EQ(f.max_degree, 3);

    // With an odd generator the extension rule picks up a Koszul sign:
    // [q.q, q] = q.[q,q] + [q, q.q] (parities |q| |q.q| give +1 twice over).
    TruncatedLeibniz g = free_leibniz_super({{"q", Parity::odd}}, 3);
    std::uint32_t q = g.alg.basis.index_of("q");
    std::uint32_t qq = g.alg.basis.index_of("q.q");
    std::uint32_t qqq = g.alg.basis.index_of("q.q.q");
    CHECK_EQ(g.alg.basis.parity_of(qq), Parity::even);
    CHECK_EQ(g.alg.bracket.at(qq, q), SparseVec::unit(qqq) * Rational(2));
    CHECK(g.identity_report.ok());
}

TEST_CASE("free dialgebra marks the center letter of each word") {
    TruncatedDialgebra f = free_super_dialgebra({{"x", Parity::even}}, 2);
    CHECK_EQ(f.alg.dim(), 3);  // [x], [x].x, x.[x]
    CHECK(f.identity_report.ok());
    std::uint32_t x = f.alg.basis.index_of("[x]");
    std::uint32_t left_word = f.alg.basis.index_of("[x].x");
    std::uint32_t right_word = f.alg.basis.index_of("x.[x]");
    // x -| y keeps the left center, x |- y the right one.
    CHECK_EQ(f.alg.left.at(x, x), SparseVec::unit(left_word));
    CHECK_EQ(f.alg.right.at(x, x), SparseVec::unit(right_word));
    // Overlong products are truncated to zero.
    CHECK(f.alg.left.at(left_word, x).is_zero());

    TruncatedDialgebra two = free_super_dialgebra({{"x", Parity::even}, {"q", Parity::odd}}, 2);
    CHECK_EQ(two.alg.dim(), 2 + 2 * 4);  // two letters, eight centered 2-words
    CHECK(two.identity_report.ok());
}

TEST_CASE("current algebras require a commutative coefficient dialgebra") {
    LeibnizSuperalgebra cur = current_leibniz(sl2().alg, trunc_poly(2));
    CHECK_EQ(cur.dim(), 6);
    CHECK(check_leibniz(cur).ok());
    std::uint32_t et = cur.basis.index_of("e*t");
    std::uint32_t f1 = cur.basis.index_of("f*1");
    std::uint32_t ht = cur.basis.index_of("h*t");
    CHECK_EQ(cur.bracket.at(et, f1), SparseVec::unit(ht));

    // A non-commutative coefficient dialgebra breaks the Leibniz identity:
    // over free words, x |- (y |- x) = x.y.[x] but y |- (x |- x) = y.x.[x].
    TruncatedDialgebra words =
        free_super_dialgebra({{"x", Parity::even}, {"y", Parity::even}}, 3);
    CHECK_THROWS_AS(current_leibniz(sl2().alg, words.alg), std::invalid_argument);
}

TEST_CASE("loop extension rejects a base that is not Lie") {
    SuperDialgebra d = trunc_poly(2);
    DifferentialModule om = omega(d);
    // A free Leibniz algebra is not super anticommutative.
    TruncatedLeibniz f = free_leibniz_super({{"t", Parity::even}}, 2);
    QuadraticLeibniz not_lie{f.alg, BilinearForm(f.alg.dim())};
    CHECK_THROWS_AS(loop_leibniz(not_lie, d, om), std::invalid_argument);

    LeibnizSuperalgebra loop = loop_leibniz(sl2(), d, om);
    CHECK_EQ(loop.dim(), 6 + om.dim());
    CHECK(check_leibniz(loop).ok());
}

TEST_CASE("the tensor square carries the induced Leibniz bracket") {
    LeibnizSuperalgebra ts = tensor_square_leibniz(sl2().alg);
    CHECK_EQ(ts.dim(), 9);
    CHECK(check_leibniz(ts).ok());
    // [x@y, a@b] routes through [[x,y], -], so rows with [x,y] = 0 vanish.
    std::uint32_t ee = ts.basis.index_of("e@e");
    for (std::uint32_t j = 0; j < ts.dim(); ++j) CHECK(ts.bracket.at(ee, j).is_zero());
    // [e@f, h@h] = [[e,f],h]@h + h@[[e,f],h] = 0 (h is [e,f] and [h,h] = 0)
    std::uint32_t ef = ts.basis.index_of("e@f");
    std::uint32_t hh = ts.basis.index_of("h@h");
    CHECK(ts.bracket.at(ef, hh).is_zero());
    // [e@f, f@h] = [h,f]@h + f@[h,h] = -2 f@h.
    std::uint32_t fh = ts.basis.index_of("f@h");
    CHECK_EQ(ts.bracket.at(ef, fh), SparseVec::unit(fh) * Rational(-2));
}
