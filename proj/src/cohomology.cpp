#include "lsa/cohomology.hpp"

#include <stdexcept>
#include <string>

namespace lsa {
namespace {

std::uint64_t power(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) r *= base;
    return r;
}

// Odometer step over `digits` in base `dim`; returns false after the last tuple.
bool next_tuple(std::vector<std::uint32_t>& digits, std::uint32_t dim) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < dim) return true;
        digits[i] = 0;
    }
    return false;
}

std::uint64_t tuple_index(const std::vector<std::uint32_t>& digits, std::uint32_t dim) {
    std::uint64_t t = 0;
    for (std::uint32_t d : digits) t = t * dim + d;
    return t;
}

}  // namespace

Cochain Cochain::zero(std::uint32_t arity, Parity p, std::uint32_t alg_dim,
                      std::uint32_t mod_dim) {
    Cochain f;
    f.arity = arity;
    f.parity = p;
    f.alg_dim = alg_dim;
    f.mod_dim = mod_dim;
    f.values.assign(power(alg_dim, arity), SparseVec{});
    return f;
}

const SparseVec& Cochain::at(const std::vector<std::uint32_t>& tuple) const {
    return values[tuple_index(tuple, alg_dim)];
}

SparseVec& Cochain::at(const std::vector<std::uint32_t>& tuple) {
    return values[tuple_index(tuple, alg_dim)];
}

bool Cochain::is_zero() const {
    for (const auto& v : values)
        if (!v.is_zero()) return false;
    return true;
}

Cochain coboundary(const LeibnizModule& m, const Cochain& f) {
    const std::uint32_t n = f.arity;
    const std::uint32_t ad = f.alg_dim;
    if (ad != m.alg.basis.dim() || f.mod_dim != m.basis.dim())
        throw std::invalid_argument("coboundary: cochain does not match the module");
    Cochain out = Cochain::zero(n + 1, f.parity, ad, f.mod_dim);

    std::vector<std::uint32_t> t(n + 1, 0);
    if (ad == 0) return out;
    std::uint64_t flat = 0;
    do {
        SparseVec acc;
        std::vector<Parity> p(n + 1);
        for (std::uint32_t i = 0; i <= n; ++i) p[i] = m.alg.basis.parity_of(t[i]);

        // sum_{i=1..n} (-1)^{i-1} (-1)^{|x_i|(|f|+|x_1|+...+|x_{i-1}|)} [x_i, f(..x^_i..)]
        for (std::uint32_t i = 0; i < n; ++i) {
            Parity prefix = f.parity;
            for (std::uint32_t a = 0; a < i; ++a) prefix = prefix + p[a];
            int sign = pow_sign(i) * koszul(p[i], prefix);
            std::vector<std::uint32_t> sub;
            sub.reserve(n);
            for (std::uint32_t a = 0; a <= n; ++a)
                if (a != i) sub.push_back(t[a]);
            const SparseVec& fv = f.at(sub);
            for (const auto& [k, c] : fv)
                acc.axpy(Rational(sign) * c, m.left_act.at(t[i], k));
        }

        // (-1)^{n-1} [f(x_1..x_n), x_{n+1}]
        {
            int sign = pow_sign(n + 1);  // (-1)^{n-1}
            std::vector<std::uint32_t> sub(t.begin(), t.end() - 1);
            const SparseVec& fv = f.at(sub);
            for (const auto& [k, c] : fv)
                acc.axpy(Rational(sign) * c, m.right_act.at(k, t[n]));
        }

        // sum_{i<j} (-1)^i (-1)^{|x_i|(|x_{i+1}|+...+|x_{j-1}|)}
        //           f(x_1,..,x^_i,..,x_{j-1},[x_i,x_j],x_{j+1},..,x_{n+1})
        for (std::uint32_t i = 0; i <= n; ++i) {
            Parity skipped = Parity::even;
            for (std::uint32_t j = i + 1; j <= n; ++j) {
                int sign = pow_sign(i + 1) * koszul(p[i], skipped);
                const SparseVec& br = m.alg.bracket.at(t[i], t[j]);
                if (!br.is_zero()) {
                    std::vector<std::uint32_t> sub;
                    sub.reserve(n);
                    for (std::uint32_t a = 0; a <= n; ++a)
                        if (a != i && a != j) sub.push_back(t[a]);
                    // the bracket slot sits where x_j was, i.e. position j-1 after
                    // deleting slot i; insert a placeholder there
                    sub.insert(sub.begin() + (j - 1), 0);
                    for (const auto& [s, c] : br) {
                        sub[j - 1] = s;
                        acc.axpy(Rational(sign) * c, f.at(sub));
                    }
                }
                skipped = skipped + p[j];
            }
        }

        out.values[flat] = std::move(acc);
        ++flat;
    } while (next_tuple(t, ad));
    return out;
}

CheckReport check_d_squared(const LeibnizModule& m, std::uint32_t arity) {
    CheckReport rep;
    const std::uint32_t ad = m.alg.basis.dim();
    const std::uint32_t md = m.basis.dim();
    std::vector<std::uint32_t> t(arity, 0);
    if (ad == 0 && arity > 0) return rep;
    do {
        Parity tp = Parity::even;
        for (std::uint32_t d : t) tp = tp + m.alg.basis.parity_of(d);
        std::uint64_t flat = tuple_index(t, ad);
        for (std::uint32_t k = 0; k < md; ++k) {
            Cochain f = Cochain::zero(arity, m.basis.parity_of(k) + tp, ad, md);
            f.values[flat] = SparseVec::unit(k);
            Cochain df = coboundary(m, f);
            Cochain ddf = coboundary(m, df);
            ++rep.checked;
            if (!ddf.is_zero()) {
                std::vector<std::uint32_t> where(t.begin(), t.end());
                where.push_back(k);
                rep.record({"d(d(f)) = 0 for the basis cochain at (tuple, coefficient)",
                            where});
            }
        }
    } while (next_tuple(t, ad));
    return rep;
}

namespace {

// Flatten a cochain to one vector over (tuple, coefficient) coordinates.
SparseVec flatten(const Cochain& f) {
    std::vector<std::pair<std::uint32_t, Rational>> terms;
    for (std::size_t tup = 0; tup < f.values.size(); ++tup)
        for (const auto& [k, c] : f.values[tup])
            terms.emplace_back(static_cast<std::uint32_t>(tup * f.mod_dim + k), c);
    return SparseVec(std::move(terms));
}

// Rank of d^arity on the space of all arity-cochains.
std::uint32_t differential_rank(const LeibnizModule& m, std::uint32_t arity) {
    const std::uint32_t ad = m.alg.basis.dim();
    const std::uint32_t md = m.basis.dim();
    const std::uint64_t out_flat = power(ad, arity + 1) * md;
    EchelonBuilder eb(static_cast<std::uint32_t>(out_flat));
    std::vector<std::uint32_t> t(arity, 0);
    if (ad == 0 && arity > 0) return 0;
    do {
        Parity tp = Parity::even;
        for (std::uint32_t d : t) tp = tp + m.alg.basis.parity_of(d);
        std::uint64_t flat = tuple_index(t, ad);
        for (std::uint32_t k = 0; k < md; ++k) {
            Cochain f = Cochain::zero(arity, m.basis.parity_of(k) + tp, ad, md);
            f.values[flat] = SparseVec::unit(k);
            eb.insert(flatten(coboundary(m, f)));
        }
    } while (next_tuple(t, ad));
    return eb.dim();
}

}  // namespace

std::uint32_t hl_dim(const LeibnizModule& m, std::uint32_t arity) {
    return hl_dims(m, arity).hl();
}

CohomologyDims hl_dims(const LeibnizModule& m, std::uint32_t arity) {
    const std::uint64_t cn = power(m.alg.basis.dim(), arity) * m.basis.dim();
    std::uint32_t rank_here = differential_rank(m, arity);
    std::uint32_t rank_prev = arity == 0 ? 0 : differential_rank(m, arity - 1);
    CohomologyDims out;
    out.c_dim = static_cast<std::uint32_t>(cn);
    out.z_dim = out.c_dim - rank_here;
    out.b_dim = rank_prev;
    return out;
}

CocycleSpace z2_b2(const LeibnizSuperalgebra& l, std::uint32_t c_dim) {
    const std::uint32_t n = l.basis.dim();
    const std::uint32_t flat = n * n * c_dim;
    std::vector<SparseVec> rows;

    // Evenness: psi vanishes on basis pairs of odd total parity.
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (l.basis.parity_of(i) + l.basis.parity_of(j) == Parity::odd)
                for (std::uint32_t r = 0; r < c_dim; ++r)
                    rows.push_back(SparseVec::unit(cocycle_coord(n, c_dim, i, j, r)));

    // psi([a,b],t) - psi(a,[b,t]) + (-1)^{|a||b|} psi(b,[a,t]) = 0.
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            int sg = koszul(l.basis.parity_of(a), l.basis.parity_of(b));
            for (std::uint32_t t = 0; t < n; ++t) {
                std::vector<std::vector<std::pair<std::uint32_t, Rational>>> acc(c_dim);
                for (const auto& [u, c] : l.bracket.at(a, b))
                    for (std::uint32_t r = 0; r < c_dim; ++r)
                        acc[r].emplace_back(cocycle_coord(n, c_dim, u, t, r), c);
                for (const auto& [u, c] : l.bracket.at(b, t))
                    for (std::uint32_t r = 0; r < c_dim; ++r)
                        acc[r].emplace_back(cocycle_coord(n, c_dim, a, u, r), -c);
                for (const auto& [u, c] : l.bracket.at(a, t))
                    for (std::uint32_t r = 0; r < c_dim; ++r)
                        acc[r].emplace_back(cocycle_coord(n, c_dim, b, u, r), Rational(sg) * c);
                for (std::uint32_t r = 0; r < c_dim; ++r)
                    if (!acc[r].empty()) rows.push_back(SparseVec(std::move(acc[r])));
            }
        }

    CocycleSpace cs;
    cs.c_dim = c_dim;
    cs.z2 = kernel(rows, flat);

    EchelonBuilder eb(flat);
    for (std::uint32_t u = 0; u < n; ++u) {
        if (l.basis.parity_of(u) == Parity::odd) continue;  // g must be even
        for (std::uint32_t r = 0; r < c_dim; ++r) {
            std::vector<std::pair<std::uint32_t, Rational>> terms;
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = 0; j < n; ++j) {
                    Rational c = l.bracket.at(i, j).coeff(u);
                    if (c != 0) terms.emplace_back(cocycle_coord(n, c_dim, i, j, r), c);
                }
            eb.insert(SparseVec(std::move(terms)));
        }
    }
    cs.b2 = eb.take();
    for (const auto& row : cs.b2.rows)
        if (!cs.z2.contains(row))
            throw std::logic_error("z2_b2: a coboundary is not a cocycle");
    return cs;
}

Subspace antisymmetric_bilinear_space(const GradedBasis& basis, std::uint32_t c_dim) {
    const std::uint32_t n = basis.dim();
    std::vector<SparseVec> rows;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) {
            int sg = koszul(basis.parity_of(i), basis.parity_of(j));
            for (std::uint32_t r = 0; r < c_dim; ++r) {
                if (i == j) {
                    if (sg == 1)  // 2 psi(i,i) = 0
                        rows.push_back(SparseVec::unit(cocycle_coord(n, c_dim, i, i, r)));
                    continue;
                }
                rows.push_back(SparseVec({{cocycle_coord(n, c_dim, i, j, r), Rational(1)},
                                          {cocycle_coord(n, c_dim, j, i, r), Rational(sg)}}));
            }
        }
    return kernel(rows, n * n * c_dim);
}

CheckReport verify_central_extension(const CentralExtension& e) {
    CheckReport rep;
    const std::uint32_t q = e.total.basis.dim();
    const std::uint32_t n = e.base.basis.dim();

    auto project = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [k, c] : v) out.axpy(c, e.projection[k]);
        return out;
    };

    EchelonBuilder image(n);
    for (std::uint32_t k = 0; k < q; ++k) image.insert(e.projection[k]);
    ++rep.checked;
    if (image.dim() != n) rep.record({"projection is surjective", {}});

    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            ++rep.checked;
            SparseVec lhs = project(e.total.bracket.at(a, b));
            SparseVec rhs = e.base.bracket.eval(e.projection[a], e.projection[b]);
            if (!(lhs == rhs))
                rep.record({"projection is a bracket homomorphism", {a, b}});
        }

    ++rep.checked;
    if (e.kernel_space.dim() != q - image.dim())
        rep.record({"kernel space has the dimension of ker(projection)", {}});
    for (const auto& krow : e.kernel_space.rows) {
        ++rep.checked;
        if (!project(krow).is_zero())
            rep.record({"kernel space is annihilated by the projection", {}});
        for (std::uint32_t b = 0; b < q; ++b) {
            ++rep.checked;
            if (!e.total.bracket.eval(krow, SparseVec::unit(b)).is_zero() ||
                !e.total.bracket.eval(SparseVec::unit(b), krow).is_zero())
                rep.record({"kernel is central", {b}});
        }
    }
    rep.merge(check_grading(e.total));
    rep.merge(check_leibniz(e.total));
    return rep;
}

CentralExtension extension_from_cocycle(const LeibnizSuperalgebra& l, const Cochain& psi) {
    const std::uint32_t n = l.basis.dim();
    const std::uint32_t c = psi.mod_dim;
    if (psi.arity != 2 || psi.alg_dim != n)
        throw std::invalid_argument("extension_from_cocycle: psi must be bilinear on l");
    if (psi.parity != Parity::even)
        throw std::invalid_argument("extension_from_cocycle: psi must be even");
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (l.basis.parity_of(i) + l.basis.parity_of(j) == Parity::odd &&
                !psi.values[i * n + j].is_zero())
                throw std::invalid_argument(
                    "extension_from_cocycle: psi does not vanish on odd pairs");
    if (!coboundary(LeibnizModule::trivial(l, c), psi).is_zero())
        throw std::invalid_argument("extension_from_cocycle: psi is not a cocycle");

    std::vector<std::string> names = l.basis.names;
    std::vector<Parity> pars = l.basis.parity;
    for (std::uint32_t k = 0; k < c; ++k) {
        names.push_back("z" + std::to_string(k));
        pars.push_back(Parity::even);
    }
    CentralExtension e;
    e.base = l;
    e.total.basis = GradedBasis::make(names, pars);
    e.total.bracket = Table(n + c, n + c);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            SparseVec v = l.bracket.at(i, j);
            v.axpy(Rational(1), psi.values[i * n + j].mapped(
                                    [n](std::uint32_t k) { return n + k; }));
            e.total.bracket.set(i, j, std::move(v));
        }
    e.projection.assign(n + c, SparseVec{});
    EchelonBuilder ker(n + c);
    for (std::uint32_t i = 0; i < n; ++i) e.projection[i] = SparseVec::unit(i);
    for (std::uint32_t k = 0; k < c; ++k) ker.insert(SparseVec::unit(n + k));
    e.kernel_space = ker.take();

    CheckReport rep = verify_central_extension(e);
    if (!rep.ok())
        throw std::runtime_error("extension_from_cocycle: result is not a central extension: " +
                                 rep.summary());
    return e;
}

std::optional<std::vector<SparseVec>> are_equivalent(const LeibnizSuperalgebra& l,
                                                     const Cochain& f, const Cochain& g) {
    const std::uint32_t n = l.basis.dim();
    if (f.arity != 2 || g.arity != 2 || f.alg_dim != n || g.alg_dim != n ||
        f.mod_dim != g.mod_dim)
        throw std::invalid_argument("are_equivalent: cochains must be bilinear with equal targets");
    const std::uint32_t c = f.mod_dim;
    const std::uint32_t unknowns = n * c;  // h_{u,r} at u*c + r

    std::vector<SparseVec> rows;
    std::vector<SparseVec::Term> rhs_terms;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            SparseVec diff = f.values[i * n + j] - g.values[i * n + j];
            std::vector<std::vector<std::pair<std::uint32_t, Rational>>> acc(c);
            for (const auto& [u, cf] : l.bracket.at(i, j))
                for (std::uint32_t r = 0; r < c; ++r)
                    acc[r].emplace_back(u * c + r, cf);
            for (std::uint32_t r = 0; r < c; ++r) {
                Rational rhs = diff.coeff(r);
                if (acc[r].empty() && rhs == 0) continue;
                if (rhs != 0)
                    rhs_terms.emplace_back(static_cast<std::uint32_t>(rows.size()), rhs);
                rows.push_back(SparseVec(std::move(acc[r])));
            }
        }
    auto x = solve(rows, SparseVec(std::move(rhs_terms)), unknowns);
    if (!x) return std::nullopt;
    std::vector<SparseVec> images(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        std::vector<std::pair<std::uint32_t, Rational>> terms;
        for (std::uint32_t r = 0; r < c; ++r) {
            Rational cf = x->coeff(u * c + r);
            if (cf != 0) terms.emplace_back(r, cf);
        }
        images[u] = SparseVec(std::move(terms));
    }
    return images;
}

DerivationSpace derivation_space(const LeibnizSuperalgebra& l) {
    const std::uint32_t n = l.basis.dim();
    DerivationSpace ds;
    for (Parity s : {Parity::even, Parity::odd}) {
        std::vector<SparseVec> rows;
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t k = 0; k < n; ++k)
                if (l.basis.parity_of(k) != l.basis.parity_of(i) + s)
                    rows.push_back(SparseVec::unit(i * n + k));
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                int sg = s == Parity::odd && l.basis.parity_of(a) == Parity::odd ? -1 : 1;
                // One equation per target coordinate r of
                // mu([a,b]) - [mu(a),b] - (-1)^{s|a|}[a,mu(b)] = 0.
                std::vector<std::vector<std::pair<std::uint32_t, Rational>>> eq(n);
                for (const auto& [u, c] : l.bracket.at(a, b))
                    for (std::uint32_t r = 0; r < n; ++r) eq[r].emplace_back(u * n + r, c);
                for (std::uint32_t k = 0; k < n; ++k) {
                    for (const auto& [r, c] : l.bracket.at(k, b))
                        eq[r].emplace_back(a * n + k, -c);  // -[mu(a), b]
                    for (const auto& [r, c] : l.bracket.at(a, k))
                        eq[r].emplace_back(b * n + k, Rational(-sg) * c);  // -sg [a, mu(b)]
                }
                for (std::uint32_t r = 0; r < n; ++r)
                    if (!eq[r].empty()) rows.push_back(SparseVec(std::move(eq[r])));
            }
        Subspace sol = kernel(rows, n * n);
        (s == Parity::even ? ds.even : ds.odd) = std::move(sol);
    }
    return ds;
}

Subspace inner_derivation_space(const LeibnizSuperalgebra& l) {
    const std::uint32_t n = l.basis.dim();
    EchelonBuilder eb(n * n);
    for (std::uint32_t z = 0; z < n; ++z) {
        std::vector<std::pair<std::uint32_t, Rational>> terms;
        for (std::uint32_t i = 0; i < n; ++i)
            for (const auto& [k, c] : l.bracket.at(z, i)) terms.emplace_back(i * n + k, c);
        eb.insert(SparseVec(std::move(terms)));
    }
    return eb.take();
}

}  // namespace lsa
