// Differential-form modules: dimensions against an independent relation count,
// the quotient Leibniz rule, the universal property, and input validation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "lsa/catalog.hpp"
#include "lsa/constructions.hpp"
#include "lsa/differentials.hpp"
#include "lsa/linalg.hpp"

using namespace lsa;

namespace {

// Independent count for QQ[t]/(t^N): coordinates e(i,j) ~ t^i d(t^j) and every
// relation is a shift of the Leibniz-rule defect
//   d(t^{i+j}) - t^i d(t^j) - t^j d(t^i),
// multiplied through by t^k. Forms dimension = N^2 - rank of those rows.
std::uint32_t poly_forms_dim(std::uint32_t n) {
    auto coord = [n](std::uint32_t i, std::uint32_t j) { return i * n + j; };
    EchelonBuilder rel(n * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t k = 0; k < n; ++k) {
                SparseVec row;
                if (i + j + k < n) row.axpy(Rational(1), SparseVec::unit(coord(k, i + j)));
                if (j + k < n) row.axpy(Rational(-1), SparseVec::unit(coord(j + k, i)));
                if (i + k < n) row.axpy(Rational(-1), SparseVec::unit(coord(i + k, j)));
                rel.insert(row);
            }
    return n * n - rel.dim();
}

}  // namespace

TEST_CASE("forms of truncated polynomials have dimension N - 1") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        DifferentialModule om = omega(trunc_poly(n));
        CHECK_EQ(om.dim(), n - 1);
        CHECK_EQ(om.dim(), poly_forms_dim(n));
        CHECK_EQ(omega_mod_d_dim(om), 0);  // every form is exact here
        CHECK(om.d_of(*om.base.bar_unit).is_zero());
        CHECK(check_dibimodule(om.base, om.as_bimodule()).ok());
    }
}

TEST_CASE("the universal derivation satisfies the product rule in the quotient") {
    for (const SuperDialgebra& d :
         {trunc_poly(4), tensor_dialgebra(trunc_poly(2), trunc_poly(2))}) {
        DifferentialModule om = omega(d);
        for (std::uint32_t i = 0; i < d.dim(); ++i)
            for (std::uint32_t j = 0; j < d.dim(); ++j) {
                SparseVec ei = SparseVec::unit(i), ej = SparseVec::unit(j);
                // d(a -| b) = d(a) -| b + a -| d(b), and the same for |-.
                SparseVec lhs = om.d_of(d.left.at(i, j));
                SparseVec rhs = om.right_l.eval(om.d_images[i], ej);
                rhs += om.left_l.eval(ei, om.d_images[j]);
                CHECK_EQ(lhs, rhs);
                SparseVec lhs2 = om.d_of(d.right.at(i, j));
                SparseVec rhs2 = om.right_r.eval(om.d_images[i], ej);
                rhs2 += om.left_r.eval(ei, om.d_images[j]);
                CHECK_EQ(lhs2, rhs2);
            }
    }
}

TEST_CASE("forms of a tensor product detect the non-exact class") {
    SuperDialgebra ten = tensor_dialgebra(trunc_poly(2), trunc_poly(2));
    DifferentialModule om = omega(ten);
    CHECK_EQ(om.dim(), 4);
    CHECK_EQ(omega_mod_d_dim(om), 1);  // t d(s) survives modulo exact forms
    CHECK(check_dibimodule(ten, om.as_bimodule()).ok());

    // d(t*t) = (t*1) d(1*t) + (1*t) d(t*1) is exact but neither summand is.
    std::uint32_t tt = ten.basis.index_of("t*t");
    std::uint32_t t1 = ten.basis.index_of("t*1");
    std::uint32_t ot = ten.basis.index_of("1*t");
    SparseVec split = om.left_l.eval(SparseVec::unit(t1), om.d_images[ot]);
    split += om.left_l.eval(SparseVec::unit(ot), om.d_images[t1]);
    CHECK_EQ(om.d_images[tt], split);
    CHECK_FALSE(om.left_l.eval(SparseVec::unit(t1), om.d_images[ot]).is_zero());
}

TEST_CASE("module maps out of the forms match derivations into any bimodule") {
    for (std::uint32_t n : {2u, 3u}) {
        DifferentialModule om = omega(trunc_poly(n));
        UniversalPropertyReport self = check_universal_property(om, om.as_bimodule());
        CHECK(self.match);
        UniversalPropertyReport reg =
            check_universal_property(om, DiBimodule::regular(om.base));
        CHECK(reg.match);
        CHECK(reg.der_dim > 0);  // d itself is already a derivation
    }
    SuperDialgebra ten = tensor_dialgebra(trunc_poly(2), trunc_poly(2));
    UniversalPropertyReport up = check_universal_property(omega(ten), DiBimodule::regular(ten));
    CHECK(up.match);
    CHECK_EQ(up.der_dim, 4);
}

TEST_CASE("the pairing {a,b} = b -| d(a) drives the loop bracket") {
    SuperDialgebra d = trunc_poly(3);
    DifferentialModule om = omega(d);
    // {t, t} = t -| d(t) and {t^2, 1} = 1 -| d(t^2) = 2 t -| d(t) are parallel.
    SparseVec t = SparseVec::unit(d.basis.index_of("t"));
    SparseVec one = *d.bar_unit;
    SparseVec tsq = SparseVec::unit(d.basis.index_of("t^2"));
    CHECK_EQ(om.pairing(tsq, one), om.pairing(t, t) * Rational(2));
    CHECK(om.pairing(one, t).is_zero());  // d(1) = 0
    CHECK_FALSE(om.pairing(t, one).is_zero());
    CHECK(check_loop_pairing_identity(om).ok());
}

TEST_CASE("omega rejects inputs outside its contract") {
    // Upper-triangular 2x2 matrices with d = [E12, -]: a valid dialgebra,
    // but neither commutative nor unital, so no form module exists for it.
    GradedBasis b = GradedBasis::make(
        {{"E11", Parity::even}, {"E12", Parity::even}, {"E22", Parity::even}});
    Table prod(3, 3);
    prod.set(0, 0, SparseVec::unit(0));
    prod.set(0, 1, SparseVec::unit(1));
    prod.set(1, 2, SparseVec::unit(1));
    prod.set(2, 2, SparseVec::unit(2));
    SuperDialgebra ut = from_differential_superalgebra(
        b, prod, {-SparseVec::unit(1), SparseVec(), SparseVec::unit(1)});
    CHECK_THROWS_AS(omega(ut), std::invalid_argument);

    SuperDialgebra no_unit = trunc_poly(2);
    no_unit.bar_unit.reset();
    CHECK_THROWS_AS(omega(no_unit), std::invalid_argument);
}
