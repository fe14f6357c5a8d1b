// Cochain complex: low-arity differentials against closed forms, cohomology
// dimensions, cocycle equivalence, central extensions, and derivation spaces.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "lsa/catalog.hpp"
#include "lsa/cohomology.hpp"
#include "lsa/constructions.hpp"

using namespace lsa;

TEST_CASE("the arity-0 differential is minus the right action") {
    QuadraticLeibniz q = osp12();
    LeibnizModule adj = LeibnizModule::adjoint(q.alg);
    for (std::uint32_t k = 0; k < q.alg.dim(); ++k) {
        Cochain m = Cochain::zero(0, q.alg.basis.parity_of(k), q.alg.dim(), q.alg.dim());
        m.values[0] = SparseVec::unit(k);
        Cochain dm = coboundary(adj, m);
        CHECK_EQ(dm.arity, 1);
        for (std::uint32_t x = 0; x < q.alg.dim(); ++x)
            CHECK_EQ(dm.at({x}), -q.alg.bracket.at(k, x));
    }
}

TEST_CASE("the identity cochain maps to the bracket itself") {
    // With f = id on the adjoint module, the three terms of d^1 f collapse to
    // [x, y] + [x, y] - [x, y].
    QuadraticLeibniz q = sl2();
    LeibnizModule adj = LeibnizModule::adjoint(q.alg);
    Cochain id = Cochain::zero(1, Parity::even, q.alg.dim(), q.alg.dim());
    for (std::uint32_t x = 0; x < q.alg.dim(); ++x) id.at({x}) = SparseVec::unit(x);
    Cochain did = coboundary(adj, id);
    for (std::uint32_t x = 0; x < q.alg.dim(); ++x)
        for (std::uint32_t y = 0; y < q.alg.dim(); ++y)
            CHECK_EQ(did.at({x, y}), q.alg.bracket.at(x, y));
    CHECK(coboundary(adj, did).is_zero());
}

TEST_CASE("d squared vanishes identically in low arities") {
    QuadraticLeibniz q = osp12();
    for (std::uint32_t arity : {0u, 1u, 2u}) {
        CHECK(check_d_squared(LeibnizModule::adjoint(q.alg), arity).ok());
        CHECK(check_d_squared(LeibnizModule::trivial(q.alg, 2), arity).ok());
    }
}

TEST_CASE("cohomology dimensions of the simple examples") {
    QuadraticLeibniz q = osp12();
    LeibnizModule adj = LeibnizModule::adjoint(q.alg);

    CohomologyDims h0 = hl_dims(adj, 0);
    CHECK_EQ(h0.c_dim, 5);
    CHECK_EQ(h0.hl(), 0);  // nothing acts trivially from the left

    // Degree one with adjoint coefficients measures outer derivations.
    CohomologyDims h1 = hl_dims(adj, 1);
    DerivationSpace der = derivation_space(q.alg);
    Subspace inner = inner_derivation_space(q.alg);
    CHECK_EQ(h1.z_dim, der.dim());
    CHECK_EQ(h1.b_dim, inner.dim());
    CHECK_EQ(h1.hl(), 0);
    CHECK_EQ(der.even.dim(), 3);
    CHECK_EQ(der.odd.dim(), 2);

    // Trivial coefficients in degree zero: the whole coefficient line.
    CHECK_EQ(hl_dims(LeibnizModule::trivial(q.alg, 1), 0).hl(), 1);
    // No central extensions of osp(1|2).
    CHECK_EQ(hl_dims(LeibnizModule::trivial(q.alg, 1), 2).hl(), 0);
    CHECK_EQ(hl_dim(LeibnizModule::trivial(q.alg, 1), 2), 0);
}

TEST_CASE("with a zero bracket every cochain is a cocycle") {
    LeibnizSuperalgebra ab = abelian(2);
    CocycleSpace cs = z2_b2(ab, 1);
    CHECK_EQ(cs.z2.dim(), 4);
    CHECK_EQ(cs.b2.dim(), 0);
    CHECK_EQ(cs.hl2_dim(), 4);
    CohomologyDims dims = hl_dims(LeibnizModule::trivial(ab, 1), 2);
    CHECK_EQ(dims.c_dim, 4);
    CHECK_EQ(dims.z_dim, 4);
    CHECK_EQ(dims.b_dim, 0);
}

TEST_CASE("even-cocycle spaces agree with the full complex on an even algebra") {
    LeibnizSuperalgebra cur = current_leibniz(sl2().alg, trunc_poly(2));
    CocycleSpace cs = z2_b2(cur, 1);
    CohomologyDims dims = hl_dims(LeibnizModule::trivial(cur, 1), 2);
    CHECK_EQ(cs.z2.dim(), dims.z_dim);
    CHECK_EQ(cs.b2.dim(), dims.b_dim);
    CHECK_EQ(cs.hl2_dim(), 1);
}

TEST_CASE("cocycle equivalence classifies up to coboundaries") {
    SuperDialgebra d = trunc_poly(2);
    DifferentialModule om = omega(d);
    QuadraticLeibniz q = sl2();
    LeibnizSuperalgebra cur = current_leibniz(q.alg, d);
    Cochain psi = loop_cocycle(q, d, om);
    std::uint32_t n = cur.dim(), c = psi.mod_dim;

    Cochain zero = Cochain::zero(2, Parity::even, n, c);
    CHECK_FALSE(are_equivalent(cur, psi, zero).has_value());  // not a coboundary
    auto self = are_equivalent(cur, psi, psi);
    REQUIRE(self.has_value());

    Cochain twice = psi;
    for (auto& v : twice.values) v.scale(Rational(2));
    CHECK_FALSE(are_equivalent(cur, psi, twice).has_value());

    // Shifting by the coboundary of g(x) = coefficient of h*t keeps the class.
    Cochain shifted = psi;
    std::uint32_t ht = cur.basis.index_of("h*t");
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            Rational coef = cur.bracket.at(i, j).coeff(ht);
            shifted.at({i, j}) += SparseVec{{0, coef}};
        }
    auto witness = are_equivalent(cur, psi, shifted);
    REQUIRE(witness.has_value());
    CHECK_EQ((*witness)[ht], SparseVec::unit(0) * Rational(-1));
}

TEST_CASE("central extensions arise from even 2-cocycles only") {
    SuperDialgebra d = trunc_poly(2);
    DifferentialModule om = omega(d);
    QuadraticLeibniz q = sl2();
    LeibnizSuperalgebra cur = current_leibniz(q.alg, d);
    Cochain psi = loop_cocycle(q, d, om);

    CentralExtension e = extension_from_cocycle(cur, psi);
    CHECK_EQ(e.total.dim(), cur.dim() + 1);
    CHECK_EQ(e.kernel_space.dim(), 1);
    CHECK(verify_central_extension(e).ok());

    // A bilinear map that is not a cocycle is rejected, and so is an odd one.
    Cochain junk = Cochain::zero(2, Parity::even, cur.dim(), 1);
    junk.at({0, 0}) = SparseVec::unit(0);
    CHECK_THROWS_AS(extension_from_cocycle(cur, junk), std::invalid_argument);
    Cochain odd = Cochain::zero(2, Parity::odd, cur.dim(), 1);
    CHECK_THROWS_AS(extension_from_cocycle(cur, odd), std::invalid_argument);
}

TEST_CASE("super-antisymmetric bilinear maps have the expected dimension") {
    // On a basis with parities (0,1,0,1,0): the 10 off-diagonal pairs each give
    // one free entry, even diagonals are forced to zero, odd diagonals stay.
    QuadraticLeibniz q = osp12();
    CHECK_EQ(antisymmetric_bilinear_space(q.alg.basis, 1).dim(), 12);
    // All-even case reduces to ordinary antisymmetry: dim n(n-1)/2.
    CHECK_EQ(antisymmetric_bilinear_space(abelian(4).basis, 1).dim(), 6);
    // Scaling with the coefficient dimension.
    CHECK_EQ(antisymmetric_bilinear_space(abelian(4).basis, 3).dim(), 18);
}
