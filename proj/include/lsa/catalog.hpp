// Named example algebras (osp(1|2), sl(2), sl(m,n), truncated polynomials, free
// objects, loops), the explicit loop-bracket relation tables they satisfy, and
// string-name resolution for the command-line tool.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/checks.hpp"
#include "lsa/cohomology.hpp"
#include "lsa/constructions.hpp"
#include "lsa/differentials.hpp"

namespace lsa {

/// osp(1|2) on the ordered basis X+, x+, H, x-, X- (parities 0,1,0,1,0) with its
/// invariant form (H,H) = 2, (x+,x-) = -(x-,x+) = 1, (X+,X-) = (X-,X+) = 1/4.
QuadraticLeibniz osp12();

/// sl(2) on e, h, f with (e,f) = (f,e) = 1, (h,h) = 2.
QuadraticLeibniz sl2();

/// sl(m,n) over QQ: the derived subalgebra of gl(m,n) with the supertrace form.
QuadraticLeibniz sl_mn(std::uint32_t m, std::uint32_t n);

/// k-dimensional even algebra with zero bracket.
LeibnizSuperalgebra abelian(std::uint32_t k);

/// QQ[t]/(t^N) as a commutative unital dialgebra (both products = multiplication).
SuperDialgebra trunc_poly(std::uint32_t n_trunc);

/// The form-valued 2-cocycle psi(x(x)a, y(x)b) = (x,y){a,b} on the current algebra
/// g (x) D, valued in the differential-form module.
Cochain loop_cocycle(const QuadraticLeibniz& g, const SuperDialgebra& d,
                     const DifferentialModule& om);

/// The pairing identity {a|-b, c} = {a, b|-c} + {b, a|-c} over all basis triples.
CheckReport check_loop_pairing_identity(const DifferentialModule& om);

/// The explicit relation table of the osp(1|2) loop bracket over d: every bracket
/// of the form [Y (x) a, Z (x) b] against its closed-form value.
CheckReport check_osp_loop_table(const SuperDialgebra& d);

/// A named algebra resolved from a catalog string. Exactly one of `leibniz` /
/// `dialgebra` is set; `form` accompanies quadratic Leibniz entries, and the
/// truncation fields accompany free objects.
struct CatalogEntry {
    std::string name;
    std::optional<LeibnizSuperalgebra> leibniz;
    std::optional<BilinearForm> form;
    std::optional<SuperDialgebra> dialgebra;
    std::vector<std::uint32_t> degree;
    std::optional<std::uint32_t> max_degree;
    std::optional<CheckReport> truncation_report;
};

/// Resolve "osp12", "sl2", "sl_mn:M:N", "gl_mn:M:N", "abelian:K", "trunc_poly:N",
/// "tensor:<dia>,<dia>", "sl2xPoly:N", "ospxPoly:N", "free_leibniz:P:Q",
/// "free_dialgebra:P:Q" (P even / Q odd generators, truncated at max_degree).
/// Throws std::invalid_argument for unknown names or bad parameters.
CatalogEntry resolve_catalog(const std::string& name, std::uint32_t max_degree);

/// The catalog name patterns, for help output.
std::vector<std::string> catalog_names();

}  // namespace lsa
