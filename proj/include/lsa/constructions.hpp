// Builders that turn one structure into another: dialgebra -> Leibniz bracket,
// differential algebras -> dialgebras, tensor and matrix dialgebras, gl/sl and
// their generator relations, free objects truncated by degree, and current
// algebras twisted by a differential module. Every builder re-checks the
// defining identities of its output and throws std::invalid_argument on failure.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/checks.hpp"
#include "lsa/differentials.hpp"

namespace lsa {

/// [x,y] = x|-y - (-1)^{|x||y|} y-|x. Output satisfies the left Leibniz identity.
LeibnizSuperalgebra dialgebra_to_leibniz(const SuperDialgebra& d);

/// [x,y] = x-|y - (-1)^{|x||y|} y|-x. Output satisfies the right Leibniz identity.
RightLeibnizAlgebra dialgebra_to_right_leibniz(const SuperDialgebra& d);

/// x-|y = x*d(y), x|-y = d(x)*y for an associative superalgebra with an even
/// derivation d satisfying d^2 = 0. d_images[j] = d(e_j).
SuperDialgebra from_differential_superalgebra(const GradedBasis& basis, const Table& product,
                                              const std::vector<SparseVec>& d_images);

/// Tensor product of dialgebras with the Koszul-signed componentwise products.
SuperDialgebra tensor_dialgebra(const SuperDialgebra& a, const SuperDialgebra& b);

/// (m+n) x (m+n) matrices over a dialgebra: basis E(i,j)*a, componentwise products
/// with the Koszul sign between the matrix and coefficient factors.
SuperDialgebra matrix_dialgebra(std::uint32_t m, std::uint32_t n, const SuperDialgebra& d);

/// gl(m,n,D): the matrix basis with the bracket
/// [E_ij(a), E_kl(b)] = delta_jk E_il(a|-b) - (-1)^{tau_ij tau_kl} delta_il E_kj(b-|a).
LeibnizSuperalgebra gl_leibniz(std::uint32_t m, std::uint32_t n, const SuperDialgebra& d);

/// The derived subalgebra of gl(m,n,D) with its induced bracket.
LeibnizSuperalgebra sl_leibniz(std::uint32_t m, std::uint32_t n, const SuperDialgebra& d);

/// Checks the Steinberg generator relations on the off-diagonal images
/// v_ij(a) = E_ij(a) inside sl(m,n,D): linearity in a, vanishing for disjoint
/// indices, and the two contraction rules.
CheckReport check_stl_relations(std::uint32_t m, std::uint32_t n, const SuperDialgebra& d);

/// A degree-truncated construction: the algebra plus each basis element's word
/// degree, so identity checks know which triples stay in range.
struct TruncatedLeibniz {
    LeibnizSuperalgebra alg;
    std::vector<std::uint32_t> degree;
    std::uint32_t max_degree = 0;
    CheckReport identity_report;  // in-range triples checked, out-of-range skipped
};

struct TruncatedDialgebra {
    SuperDialgebra alg;
    std::vector<std::uint32_t> degree;
    std::uint32_t max_degree = 0;
    CheckReport identity_report;
};

/// Free Leibniz superalgebra on named generators, truncated above max_degree.
/// Basis: tensor words; bracket generated by [v, x] = v (x) x for letters v,
/// which the Leibniz identity extends to longer first arguments by
/// [v (x) h, x] = v (x) [h, x] - (-1)^{|v||h|} [h, v (x) x].
TruncatedLeibniz free_leibniz_super(const std::vector<std::pair<std::string, Parity>>& generators,
                                    std::uint32_t max_degree);

/// Free dialgebra on named generators, truncated above max_degree.
/// Basis: words with a marked center letter; x-|y keeps the left center,
/// x|-y keeps the right center; overlong products vanish.
TruncatedDialgebra free_super_dialgebra(const std::vector<std::pair<std::string, Parity>>& generators,
                                        std::uint32_t max_degree);

/// g (x) D with [x(x)a, y(x)b] = [x,y](x)(a|-b) (no center).
LeibnizSuperalgebra current_leibniz(const LeibnizSuperalgebra& g, const SuperDialgebra& d);

/// g (x) D extended by the differential-form space:
/// [x(x)a, y(x)b] = [x,y](x)(a|-b) + (x,y) * (b -| da), with the form space central.
LeibnizSuperalgebra loop_leibniz(const QuadraticLeibniz& g, const SuperDialgebra& d,
                                 const DifferentialModule& omega);

/// The Leibniz bracket on L (x) L:
/// [x(x)y, a(x)b] = [[x,y],a](x)b + (-1)^{|a||b|} a(x)[[x,y],b].
LeibnizSuperalgebra tensor_square_leibniz(const LeibnizSuperalgebra& l);

}  // namespace lsa
