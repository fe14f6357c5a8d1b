// Named examples and string resolution: catalog entries, the loop-bracket
// relation tables, and the form-valued cocycle on current algebras.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "lsa/catalog.hpp"
#include "lsa/checks.hpp"
#include "lsa/cohomology.hpp"
#include "lsa/differentials.hpp"

using namespace lsa;

TEST_CASE("the fixed examples satisfy their defining identities") {
    QuadraticLeibniz q = osp12();
    CHECK_EQ(q.alg.dim(), 5);
    CHECK(check_leibniz(q.alg).ok());
    CHECK(check_lie_super(q.alg).ok());
    CHECK(check_invariant_form(q.alg, q.form).ok());
    CHECK(is_perfect(q.alg));
    CHECK_EQ(center(q.alg).dim(), 0);

    QuadraticLeibniz s = sl2();
    CHECK_EQ(s.alg.dim(), 3);
    CHECK(check_lie_super(s.alg).ok());
    CHECK(check_invariant_form(s.alg, s.form).ok());
    CHECK_EQ(s.form.at(s.alg.basis.index_of("h"), s.alg.basis.index_of("h")), Rational(2));

    SuperDialgebra d = trunc_poly(3);
    CHECK(check_dialgebra(d).ok());
    CHECK(check_commutative(d).ok());
    REQUIRE(d.bar_unit.has_value());
    CHECK_EQ(*d.bar_unit, SparseVec::unit(d.basis.index_of("1")));
    std::uint32_t t = d.basis.index_of("t");
    CHECK_EQ(d.left.at(t, t), SparseVec::unit(d.basis.index_of("t^2")));
    CHECK(d.left.at(t, d.basis.index_of("t^2")).is_zero());  // t^3 = 0
}

TEST_CASE("catalog strings resolve to the advertised structures") {
    struct Expect {
        const char* name;
        bool dialgebra;
        std::uint32_t dim;
    };
    for (const Expect& e : {
             Expect{"osp12", false, 5},
             Expect{"sl2", false, 3},
             Expect{"sl_mn:2:1", false, 8},
             Expect{"gl_mn:1:1", false, 4},
             Expect{"abelian:3", false, 3},
             Expect{"sl2xPoly:2", false, 6},
             Expect{"ospxPoly:2", false, 10},
             Expect{"trunc_poly:4", true, 4},
             Expect{"tensor:trunc_poly:2,trunc_poly:2", true, 4},
         }) {
        CatalogEntry entry = resolve_catalog(e.name, 3);
        CHECK_EQ(entry.name, e.name);
        if (e.dialgebra) {
            REQUIRE(entry.dialgebra.has_value());
            CHECK_EQ(entry.dialgebra->dim(), e.dim);
            CHECK_FALSE(entry.leibniz.has_value());
        } else {
            REQUIRE(entry.leibniz.has_value());
            CHECK_EQ(entry.leibniz->dim(), e.dim);
            CHECK_FALSE(entry.dialgebra.has_value());
        }
    }

    // Quadratic entries carry their invariant form.
    CHECK(resolve_catalog("osp12", 3).form.has_value());
    CHECK(resolve_catalog("sl2", 3).form.has_value());
    CHECK_FALSE(resolve_catalog("abelian:2", 3).form.has_value());
}

TEST_CASE("free catalog entries report their truncation") {
    CatalogEntry f = resolve_catalog("free_leibniz:1:1", 4);
    REQUIRE(f.leibniz.has_value());
    REQUIRE(f.max_degree.has_value());
    CHECK_EQ(*f.max_degree, 4);
    CHECK_EQ(f.degree.size(), f.leibniz->dim());
    REQUIRE(f.truncation_report.has_value());
    CHECK(f.truncation_report->ok());
    CHECK(f.truncation_report->skipped > 0);

    CatalogEntry g = resolve_catalog("free_dialgebra:1:0", 3);
    REQUIRE(g.dialgebra.has_value());
    CHECK_EQ(g.dialgebra->dim(), 1 + 2 + 3);  // centered words of length <= 3
    CHECK(g.truncation_report->ok());
}

TEST_CASE("unknown names and bad parameters are rejected") {
    CHECK_THROWS_AS(resolve_catalog("nope", 3), std::invalid_argument);
    CHECK_THROWS_AS(resolve_catalog("sl_mn:2", 3), std::invalid_argument);
    CHECK_THROWS_AS(resolve_catalog("sl_mn:1:0", 3), std::invalid_argument);
    CHECK_THROWS_AS(resolve_catalog("trunc_poly:0", 3), std::invalid_argument);
    CHECK_THROWS_AS(resolve_catalog("trunc_poly:x", 3), std::invalid_argument);
    CHECK_THROWS_AS(resolve_catalog("tensor:trunc_poly:2", 3), std::invalid_argument);
    CHECK_THROWS_AS(resolve_catalog("tensor:sl2,sl2", 3), std::invalid_argument);
}

TEST_CASE("catalog names cover every resolvable pattern") {
    std::vector<std::string> names = catalog_names();
    CHECK_FALSE(names.empty());
    auto has = [&](const char* prefix) {
        return std::any_of(names.begin(), names.end(), [&](const std::string& n) {
            return n.rfind(prefix, 0) == 0;
        });
    };
    CHECK(has("osp12"));
    CHECK(has("sl2"));
    CHECK(has("trunc_poly"));
    CHECK(has("free_leibniz"));
}

TEST_CASE("the loop cocycle is an even nontrivial 2-cocycle") {
    SuperDialgebra d = trunc_poly(2);
    DifferentialModule om = omega(d);
    QuadraticLeibniz q = sl2();
    Cochain psi = loop_cocycle(q, d, om);
    CHECK_EQ(psi.arity, 2);
    CHECK_EQ(psi.parity, Parity::even);
    CHECK_EQ(psi.mod_dim, om.dim());
    CHECK_FALSE(psi.is_zero());
    LeibnizSuperalgebra cur = current_leibniz(q.alg, d);
    CHECK(coboundary(LeibnizModule::trivial(cur, psi.mod_dim), psi).is_zero());

    // psi(x (x) a, y (x) b) = (x,y) {a,b}: on (e*t, f*t) the form gives 1 and
    // {t,t} = t d(t) = d(t^2)/2 = 0 in QQ[t]/(t^2); on (e*t, f*1) it is d(t) != 0.
    std::uint32_t et = cur.basis.index_of("e*t");
    std::uint32_t f1 = cur.basis.index_of("f*1");
    std::uint32_t ft = cur.basis.index_of("f*t");
    CHECK(psi.at({et, ft}).is_zero());
    CHECK_EQ(psi.at({et, f1}), om.pairing(SparseVec::unit(d.basis.index_of("t")),
                                          *d.bar_unit));
}

TEST_CASE("the explicit loop relation tables hold over truncated polynomials") {
    for (std::uint32_t n = 1; n <= 3; ++n) {
        SuperDialgebra d = trunc_poly(n);
        CHECK(check_loop_pairing_identity(omega(d)).ok());
        CHECK(check_osp_loop_table(d).ok());
    }
}
