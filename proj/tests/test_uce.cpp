// Universal central extensions: kernels, universality, idempotence, and the
// lifting of automorphisms and derivations through the extension.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lsa/catalog.hpp"
#include "lsa/checks.hpp"
#include "lsa/cohomology.hpp"
#include "lsa/constructions.hpp"
#include "lsa/uce.hpp"

using namespace lsa;

namespace {

std::vector<SparseVec> identity_map(std::uint32_t n) {
    std::vector<SparseVec> id;
    for (std::uint32_t i = 0; i < n; ++i) id.push_back(SparseVec::unit(i));
    return id;
}

}  // namespace

TEST_CASE("centrally closed algebras are their own universal extension") {
    for (const LeibnizSuperalgebra& l : {osp12().alg, sl_mn(2, 1).alg}) {
        UceResult u = uce(l);
        CHECK_EQ(u.kernel_space.dim(), 0);
        CHECK_EQ(u.total.dim(), l.dim());
        CHECK(verify_central_extension(
                  CentralExtension{u.total, u.base, u.projection, u.kernel_space})
                  .ok());
        // The identity is a central extension of l by zero; the induced map
        // must be a bijection.
        CentralExtension triv{l, l, identity_map(l.dim()), Subspace{l.dim(), {}, {}}};
        UniversalityReport rep = check_universality(u, triv);
        CHECK(rep.exists);
        CHECK(rep.unique);
        CHECK(rep.bijective);
    }
}

TEST_CASE("only perfect algebras admit a universal central extension") {
    CHECK_THROWS_AS(uce(abelian(2)), std::invalid_argument);
    CHECK_FALSE(is_perfect(sl_mn(1, 1).alg));
    CHECK_THROWS_AS(uce(sl_mn(1, 1).alg), std::invalid_argument);
}

TEST_CASE("the current-algebra kernel matches the one-form space") {
    SuperDialgebra d = trunc_poly(2);
    LeibnizSuperalgebra cur = current_leibniz(sl2().alg, d);
    UceResult u = uce(cur);
    CHECK_EQ(u.kernel_space.dim(), 1);
    CHECK_EQ(u.total.dim(), cur.dim() + 1);

    // The cocycle extension by the forms realizes the same kernel, and the
    // universal map onto it is a bijection.
    Cochain psi = loop_cocycle(sl2(), d, omega(d));
    CentralExtension e = extension_from_cocycle(cur, psi);
    UniversalityReport rep = check_universality(u, e);
    CHECK(rep.exists);
    CHECK(rep.unique);
    CHECK(rep.bijective);

    // Universality also maps onto the trivial self-extension, collapsing the
    // kernel, so the map cannot be a bijection there.
    CentralExtension triv{cur, cur, identity_map(cur.dim()), Subspace{cur.dim(), {}, {}}};
    UniversalityReport onto_base = check_universality(u, triv);
    CHECK(onto_base.exists);
    CHECK(onto_base.unique);
    CHECK_FALSE(onto_base.bijective);
}

TEST_CASE("the universal extension is centrally closed (idempotence)") {
    LeibnizSuperalgebra cur = current_leibniz(sl2().alg, trunc_poly(2));
    UceResult u = uce(cur);
    UceResult again = uce(u.total);
    CHECK_EQ(again.kernel_space.dim(), 0);
    CHECK_EQ(again.total.dim(), u.total.dim());
}

TEST_CASE("identity and zero maps lift to identity and zero") {
    LeibnizSuperalgebra cur = current_leibniz(sl2().alg, trunc_poly(2));
    UceResult u = uce(cur);

    auto lifted_id = lift_automorphism(u, identity_map(cur.dim()));
    REQUIRE(lifted_id.has_value());
    for (std::uint32_t i = 0; i < u.total.dim(); ++i)
        CHECK_EQ((*lifted_id)[i], SparseVec::unit(i));

    auto lifted_zero =
        lift_derivation(u, std::vector<SparseVec>(cur.dim()), Parity::even);
    REQUIRE(lifted_zero.has_value());
    for (const auto& v : *lifted_zero) CHECK(v.is_zero());
}

TEST_CASE("lifted inner derivations remain derivations of the total algebra") {
    LeibnizSuperalgebra cur = current_leibniz(sl2().alg, trunc_poly(2));
    UceResult u = uce(cur);
    std::uint32_t h1 = cur.basis.index_of("h*1");
    std::vector<SparseVec> ad_h;
    for (std::uint32_t i = 0; i < cur.dim(); ++i) ad_h.push_back(cur.bracket.at(h1, i));
    auto lifted = lift_derivation(u, ad_h, Parity::even);
    REQUIRE(lifted.has_value());

    auto apply = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [i, c] : v) out.axpy(c, (*lifted)[i]);
        return out;
    };
    for (std::uint32_t a = 0; a < u.total.dim(); ++a)
        for (std::uint32_t b = 0; b < u.total.dim(); ++b) {
            SparseVec want = u.total.bracket.eval(apply(SparseVec::unit(a)),
                                                  SparseVec::unit(b));
            want += u.total.bracket.eval(SparseVec::unit(a), apply(SparseVec::unit(b)));
            CHECK_EQ(apply(u.total.bracket.at(a, b)), want);
        }
}
