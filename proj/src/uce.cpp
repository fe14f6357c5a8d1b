#include "lsa/uce.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "lsa/checks.hpp"

namespace lsa {
namespace {

// Rename a vector reduced against i_span into W coordinates (w_rep holds the
// surviving tensor coordinates in increasing order).
SparseVec to_w(const Subspace& i_span, const std::vector<std::uint32_t>& w_rep,
               const SparseVec& v) {
    SparseVec r = i_span.reduce(v);
    return r.mapped([&](std::uint32_t c) {
        auto it = std::lower_bound(w_rep.begin(), w_rep.end(), c);
        if (it == w_rep.end() || *it != c)
            throw std::logic_error("uce: reduced vector is supported outside W");
        return static_cast<std::uint32_t>(it - w_rep.begin());
    });
}

SparseVec apply_images(const std::vector<SparseVec>& images, const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v) out.axpy(c, images[k]);
    return out;
}

bool tables_equal(const Table& a, const Table& b, std::uint32_t n) {
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

// The map L_w -> L_w induced by base images (on the first n coordinates) and
// W images (on the rest, already expressed in L_w coordinates).
SparseVec apply_split(const std::vector<SparseVec>& base_images,
                      const std::vector<SparseVec>& w_images, std::uint32_t n,
                      const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v) {
        if (k < n)
            out.axpy(c, base_images[k]);
        else
            out.axpy(c, w_images[k - n]);
    }
    return out;
}

}  // namespace

UceResult uce(const LeibnizSuperalgebra& l) {
    const std::uint32_t n = l.basis.dim();
    if (!is_perfect(l)) throw std::invalid_argument("uce: the algebra is not perfect");

    UceResult u;
    u.base = l;

    // I = span{ [a,b](x)c - a(x)[b,c] + (-1)^{|a||b|} b(x)[a,c] } inside L (x) L.
    const std::uint32_t tdim = n * n;
    EchelonBuilder ib(tdim);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            int sg = koszul(l.basis.parity_of(a), l.basis.parity_of(b));
            for (std::uint32_t c = 0; c < n; ++c) {
                SparseVec gen;
                for (const auto& [k, cf] : l.bracket.at(a, b))
                    gen.axpy(cf, SparseVec::unit(k * n + c));
                for (const auto& [k, cf] : l.bracket.at(b, c))
                    gen.axpy(-cf, SparseVec::unit(a * n + k));
                for (const auto& [k, cf] : l.bracket.at(a, c))
                    gen.axpy(Rational(sg) * cf, SparseVec::unit(b * n + k));
                ib.insert(gen);
            }
        }
    u.i_span = ib.take();
    for (std::uint32_t c = 0, p = 0; c < tdim; ++c) {
        if (p < u.i_span.pivots.size() && u.i_span.pivots[p] == c) {
            ++p;
            continue;
        }
        u.w_rep.push_back(c);
    }
    u.w_dim = static_cast<std::uint32_t>(u.w_rep.size());

    // L_w = L (+) W with [x (+) u, y (+) v] = [x,y] (+) class of x (x) y.
    const std::uint32_t nw = n + u.w_dim;
    std::vector<std::string> lw_names = l.basis.names;
    std::vector<Parity> lw_par = l.basis.parity;
    std::set<std::string> taken(lw_names.begin(), lw_names.end());
    for (std::uint32_t k = 0; k < u.w_dim; ++k) {
        std::uint32_t i = u.w_rep[k] / n, j = u.w_rep[k] % n;
        // Iterating the construction can reproduce a name the input already
        // carries (its basis may itself contain w(...) elements), so uniquify.
        std::string name = "w(" + l.basis.names[i] + "," + l.basis.names[j] + ")";
        while (!taken.insert(name).second) name += "'";
        lw_names.push_back(std::move(name));
        lw_par.push_back(l.basis.parity_of(i) + l.basis.parity_of(j));
    }
    LeibnizSuperalgebra lw;
    lw.basis = GradedBasis::make(lw_names, lw_par);
    lw.bracket = Table(nw, nw);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            SparseVec v;
            for (const auto& [k, c] : l.bracket.at(i, j)) v.axpy(c, SparseVec::unit(k));
            v.axpy(Rational(1),
                   to_w(u.i_span, u.w_rep, SparseVec::unit(i * n + j))
                       .mapped([n](std::uint32_t k) { return n + k; }));
            lw.bracket.set(i, j, std::move(v));
        }
    {
        CheckReport rep = check_grading(lw);
        rep.merge(check_leibniz(lw));
        if (!rep.ok())
            throw std::runtime_error("uce: L (+) W failed its own verification: " +
                                     rep.summary());
    }

    // The universal extension is the derived subalgebra of L_w.
    Subspace hat = derived_subalgebra(lw);
    const std::uint32_t p = hat.dim();
    std::vector<std::string> names(p);
    std::vector<Parity> pars(p);
    for (std::uint32_t k = 0; k < p; ++k) {
        for (const auto& [c, cf] : hat.rows[k])
            if (lw.basis.parity_of(c) != lw.basis.parity_of(hat.pivots[k]))
                throw std::logic_error("uce: inhomogeneous row in the derived subalgebra");
        names[k] = lw_names[hat.pivots[k]];
        pars[k] = lw.basis.parity_of(hat.pivots[k]);
    }
    u.total.basis = GradedBasis::make(names, pars);
    u.total.bracket = Table(p, p);
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) {
            SparseVec v = lw.bracket.eval(hat.rows[a], hat.rows[b]);
            auto coords = hat.coordinates(v);
            if (!coords)
                throw std::logic_error("uce: derived subalgebra is not bracket-closed");
            u.total.bracket.set(a, b, std::move(*coords));
        }
    u.hat_rows = hat.rows;

    u.projection.assign(p, SparseVec{});
    for (std::uint32_t k = 0; k < p; ++k) {
        std::vector<std::pair<std::uint32_t, Rational>> terms;
        for (const auto& [c, cf] : hat.rows[k])
            if (c < n) terms.emplace_back(c, cf);
        u.projection[k] = SparseVec(std::move(terms));
    }
    {
        // ker(projection) inside total coordinates.
        std::vector<std::vector<std::pair<std::uint32_t, Rational>>> acc(n);
        for (std::uint32_t k = 0; k < p; ++k)
            for (const auto& [r, cf] : u.projection[k]) acc[r].emplace_back(k, cf);
        std::vector<SparseVec> rows;
        for (auto& a : acc)
            if (!a.empty()) rows.push_back(SparseVec(std::move(a)));
        u.kernel_space = kernel(rows, p);
    }

    CentralExtension as_ext{u.total, u.base, u.projection, u.kernel_space};
    CheckReport rep = verify_central_extension(as_ext);
    if (!rep.ok())
        throw std::runtime_error("uce: result failed the central-extension check: " +
                                 rep.summary());
    if (!is_perfect(u.total))
        throw std::runtime_error("uce: the universal extension is not perfect");
    return u;
}

UniversalityReport check_universality(const UceResult& u, const CentralExtension& e) {
    const std::uint32_t n = u.base.basis.dim();
    if (e.base.basis.names != u.base.basis.names ||
        e.base.basis.parity != u.base.basis.parity ||
        !tables_equal(e.base.bracket, u.base.bracket, n))
        throw std::invalid_argument("check_universality: extensions have different bases");
    if (!verify_central_extension(e).ok())
        throw std::invalid_argument("check_universality: e is not a central extension");

    const std::uint32_t p = u.total.basis.dim();
    const std::uint32_t q = e.total.basis.dim();
    const std::uint32_t kq = e.kernel_space.dim();
    UniversalityReport out;

    // A linear section s of e's projection: s(e_r) solves proj(x) = e_r.
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> acc(n);
    for (std::uint32_t k = 0; k < q; ++k)
        for (const auto& [r, cf] : e.projection[k]) acc[r].emplace_back(k, cf);
    std::vector<SparseVec> proj_rows(n);
    for (std::uint32_t r = 0; r < n; ++r) proj_rows[r] = SparseVec(acc[r]);
    std::vector<SparseVec> section(n);
    for (std::uint32_t r = 0; r < n; ++r) {
        auto x = solve(proj_rows, SparseVec::unit(r), q);
        if (!x) return out;  // projection not surjective; cannot happen after verify
        section[r] = std::move(*x);
    }
    auto apply_section = [&](const SparseVec& base_vec) {
        return apply_images(section, base_vec);
    };

    // gamma(x) = s(alpha(x)) + c(x) with c valued in e's kernel; the bracket
    // compatibility becomes a linear system in the coefficients of c.
    const std::uint32_t unknowns = p * kq;
    std::vector<SparseVec> hom_rows;
    std::vector<SparseVec::Term> rhs_terms;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) {
            SparseVec sa = apply_section(u.projection[a]);
            SparseVec sb = apply_section(u.projection[b]);
            SparseVec rhs = e.total.bracket.eval(sa, sb);
            const SparseVec& br = u.total.bracket.at(a, b);
            SparseVec alpha_br;
            for (const auto& [v, cf] : br) alpha_br.axpy(cf, u.projection[v]);
            rhs.axpy(Rational(-1), apply_section(alpha_br));
            auto rhs_coords = e.kernel_space.coordinates(rhs);
            if (!rhs_coords) return out;  // defect not central: no morphism exists
            for (std::uint32_t t = 0; t < kq; ++t) {
                std::vector<std::pair<std::uint32_t, Rational>> terms;
                for (const auto& [v, cf] : br) terms.emplace_back(v * kq + t, cf);
                SparseVec hom(std::move(terms));
                Rational r = rhs_coords->coeff(t);
                if (hom.is_zero() && r == 0) continue;
                if (r != 0)
                    rhs_terms.emplace_back(static_cast<std::uint32_t>(hom_rows.size()), r);
                hom_rows.push_back(std::move(hom));
            }
        }
    auto c_sol = solve(hom_rows, SparseVec(std::move(rhs_terms)), unknowns);
    if (!c_sol) return out;
    out.exists = true;
    out.unique = kernel(hom_rows, unknowns).dim() == 0;

    out.gamma.assign(p, SparseVec{});
    for (std::uint32_t a = 0; a < p; ++a) {
        SparseVec g = apply_section(u.projection[a]);
        for (std::uint32_t t = 0; t < kq; ++t) {
            Rational cf = c_sol->coeff(a * kq + t);
            if (cf != 0) g.axpy(cf, e.kernel_space.rows[t]);
        }
        out.gamma[a] = std::move(g);
    }

    // gamma must be a bracket homomorphism over the base.
    for (std::uint32_t a = 0; a < p && out.exists; ++a)
        for (std::uint32_t b = 0; b < p; ++b) {
            SparseVec lhs = apply_images(out.gamma, u.total.bracket.at(a, b));
            SparseVec rhs = e.total.bracket.eval(out.gamma[a], out.gamma[b]);
            if (!(lhs == rhs)) {
                out.exists = false;
                break;
            }
        }
    for (std::uint32_t a = 0; a < p && out.exists; ++a) {
        SparseVec pr;
        for (const auto& [k, cf] : out.gamma[a]) pr.axpy(cf, e.projection[k]);
        if (!(pr == u.projection[a])) out.exists = false;
    }
    if (out.exists && p == q) {
        EchelonBuilder eb(q);
        for (const auto& g : out.gamma) eb.insert(g);
        out.bijective = eb.dim() == q;
    }
    return out;
}

std::optional<std::vector<SparseVec>> lift_derivation(const UceResult& u,
                                                      const std::vector<SparseVec>& mu,
                                                      Parity s) {
    const LeibnizSuperalgebra& l = u.base;
    const std::uint32_t n = l.basis.dim();
    if (mu.size() != n) throw std::invalid_argument("lift_derivation: wrong image count");
    for (std::uint32_t i = 0; i < n; ++i)
        for (const auto& [k, cf] : mu[i])
            if (l.basis.parity_of(k) != l.basis.parity_of(i) + s)
                throw std::invalid_argument("lift_derivation: images are not homogeneous of parity s");
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            SparseVec lhs = apply_images(mu, l.bracket.at(a, b));
            SparseVec rhs = l.bracket.eval(mu[a], SparseVec::unit(b));
            int sg = (s == Parity::odd && l.basis.parity_of(a) == Parity::odd) ? -1 : 1;
            rhs.axpy(Rational(sg), l.bracket.eval(SparseVec::unit(a), mu[b]));
            if (!(lhs == rhs))
                throw std::invalid_argument("lift_derivation: mu is not a derivation");
        }

    // Induced map on L (x) L: mu(x (x) y) = mu(x) (x) y + (-1)^{s|x|} x (x) mu(y).
    auto mu_tensor = [&](std::uint32_t i, std::uint32_t j) {
        SparseVec out;
        for (const auto& [k, cf] : mu[i]) out.axpy(cf, SparseVec::unit(k * n + j));
        int sg = (s == Parity::odd && l.basis.parity_of(i) == Parity::odd) ? -1 : 1;
        for (const auto& [k, cf] : mu[j])
            out.axpy(Rational(sg) * cf, SparseVec::unit(i * n + k));
        return out;
    };
    auto mu_tensor_vec = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [c, cf] : v) out.axpy(cf, mu_tensor(c / n, c % n));
        return out;
    };
    for (const auto& row : u.i_span.rows)
        if (!u.i_span.reduce(mu_tensor_vec(row)).is_zero()) return std::nullopt;

    std::vector<SparseVec> w_images(u.w_dim);
    for (std::uint32_t k = 0; k < u.w_dim; ++k)
        w_images[k] = to_w(u.i_span, u.w_rep, mu_tensor(u.w_rep[k] / n, u.w_rep[k] % n))
                          .mapped([n](std::uint32_t c) { return n + c; });
    std::vector<SparseVec> base_images(n);
    for (std::uint32_t i = 0; i < n; ++i) base_images[i] = mu[i];

    const std::uint32_t p = u.total.basis.dim();
    Subspace hat;
    hat.ambient = n + u.w_dim;
    hat.rows = u.hat_rows;
    for (const auto& r : u.hat_rows) hat.pivots.push_back(r.leading().first);
    std::vector<SparseVec> images(p);
    for (std::uint32_t a = 0; a < p; ++a) {
        SparseVec img = apply_split(base_images, w_images, n, u.hat_rows[a]);
        auto coords = hat.coordinates(img);
        if (!coords) return std::nullopt;
        images[a] = std::move(*coords);
    }

    // The lift must itself be a derivation compatible with the projection.
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) {
            SparseVec lhs = apply_images(images, u.total.bracket.at(a, b));
            SparseVec rhs = u.total.bracket.eval(images[a], SparseVec::unit(b));
            int sg = (s == Parity::odd && u.total.basis.parity_of(a) == Parity::odd) ? -1 : 1;
            rhs.axpy(Rational(sg), u.total.bracket.eval(SparseVec::unit(a), images[b]));
            if (!(lhs == rhs))
                throw std::logic_error("lift_derivation: lifted map is not a derivation");
        }
    for (std::uint32_t a = 0; a < p; ++a) {
        SparseVec lhs;
        for (const auto& [k, cf] : images[a]) lhs.axpy(cf, u.projection[k]);
        SparseVec rhs = apply_images(mu, u.projection[a]);
        if (!(lhs == rhs))
            throw std::logic_error("lift_derivation: lift does not cover mu");
    }
    return images;
}

std::optional<std::vector<SparseVec>> lift_automorphism(const UceResult& u,
                                                        const std::vector<SparseVec>& theta) {
    const LeibnizSuperalgebra& l = u.base;
    const std::uint32_t n = l.basis.dim();
    if (theta.size() != n) throw std::invalid_argument("lift_automorphism: wrong image count");
    for (std::uint32_t i = 0; i < n; ++i)
        for (const auto& [k, cf] : theta[i])
            if (l.basis.parity_of(k) != l.basis.parity_of(i))
                throw std::invalid_argument("lift_automorphism: images must preserve parity");
    {
        EchelonBuilder eb(n);
        for (const auto& v : theta) eb.insert(v);
        if (eb.dim() != n)
            throw std::invalid_argument("lift_automorphism: images are not invertible");
    }
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            SparseVec lhs = apply_images(theta, l.bracket.at(a, b));
            SparseVec rhs = l.bracket.eval(theta[a], theta[b]);
            if (!(lhs == rhs))
                throw std::invalid_argument("lift_automorphism: theta is not a homomorphism");
        }

    auto theta_tensor = [&](std::uint32_t i, std::uint32_t j) {
        SparseVec out;
        for (const auto& [k, ck] : theta[i])
            for (const auto& [m, cm] : theta[j]) out.axpy(ck * cm, SparseVec::unit(k * n + m));
        return out;
    };
    auto theta_tensor_vec = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [c, cf] : v) out.axpy(cf, theta_tensor(c / n, c % n));
        return out;
    };
    for (const auto& row : u.i_span.rows)
        if (!u.i_span.reduce(theta_tensor_vec(row)).is_zero()) return std::nullopt;

    std::vector<SparseVec> w_images(u.w_dim);
    for (std::uint32_t k = 0; k < u.w_dim; ++k)
        w_images[k] = to_w(u.i_span, u.w_rep, theta_tensor(u.w_rep[k] / n, u.w_rep[k] % n))
                          .mapped([n](std::uint32_t c) { return n + c; });

    Subspace hat;
    hat.ambient = n + u.w_dim;
    hat.rows = u.hat_rows;
    for (const auto& r : u.hat_rows) hat.pivots.push_back(r.leading().first);
    const std::uint32_t p = u.total.basis.dim();
    std::vector<SparseVec> images(p);
    for (std::uint32_t a = 0; a < p; ++a) {
        SparseVec img = apply_split(theta, w_images, n, u.hat_rows[a]);
        auto coords = hat.coordinates(img);
        if (!coords) return std::nullopt;
        images[a] = std::move(*coords);
    }

    {
        EchelonBuilder eb(p);
        for (const auto& v : images) eb.insert(v);
        if (eb.dim() != p)
            throw std::logic_error("lift_automorphism: lifted map is not invertible");
    }
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) {
            SparseVec lhs = apply_images(images, u.total.bracket.at(a, b));
            SparseVec rhs = u.total.bracket.eval(images[a], images[b]);
            if (!(lhs == rhs))
                throw std::logic_error("lift_automorphism: lifted map is not a homomorphism");
        }
    for (std::uint32_t a = 0; a < p; ++a) {
        SparseVec lhs;
        for (const auto& [k, cf] : images[a]) lhs.axpy(cf, u.projection[k]);
        SparseVec rhs = apply_images(theta, u.projection[a]);
        if (!(lhs == rhs))
            throw std::logic_error("lift_automorphism: lift does not cover theta");
    }
    return images;
}

}  // namespace lsa
