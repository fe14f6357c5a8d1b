#include "lsa/differentials.hpp"

#include <stdexcept>
#include <string>

#include "lsa/checks.hpp"

namespace lsa {

namespace {

/// Pair coordinate of a_i -| d(a_j) inside F.
inline std::uint32_t fcoord(std::uint32_t i, std::uint32_t j, std::uint32_t n) {
    return i * n + j;
}

}  // namespace

SparseVec DifferentialModule::to_quotient(const SparseVec& in_f) const {
    SparseVec residual = relations.reduce(in_f);
    // Residual is supported on non-pivot coordinates; rename them 0..dim-1.
    std::vector<SparseVec::Term> terms;
    for (const auto& [f, c] : residual) {
        std::uint32_t lo = 0, hi = static_cast<std::uint32_t>(rep_coord.size());
        while (lo < hi) {
            std::uint32_t mid = (lo + hi) / 2;
            if (rep_coord[mid] < f)
                lo = mid + 1;
            else
                hi = mid;
        }
        terms.emplace_back(lo, c);
    }
    return SparseVec(std::move(terms));
}

DifferentialModule omega(const SuperDialgebra& d) {
    if (!check_dialgebra(d).ok())
        throw std::invalid_argument("omega: input fails the dialgebra axioms");
    if (!check_grading(d).ok()) throw std::invalid_argument("omega: input fails grading");
    if (!check_commutative(d).ok())
        throw std::invalid_argument("omega: input dialgebra is not commutative");
    if (!d.bar_unit) throw std::invalid_argument("omega: input dialgebra has no bar-unit");

    const std::uint32_t n = d.dim();
    const std::uint32_t fdim = n * n;
    const SparseVec& one = *d.bar_unit;

    // b |- 1 per basis element, needed by the right -| action rule.
    std::vector<SparseVec> b_vdash_one(n);
    for (std::uint32_t b = 0; b < n; ++b)
        b_vdash_one[b] = d.right.eval(SparseVec::unit(b), one);

    // Generators d(a_j) = 1 -| d(a_j) embedded in F.
    auto embed_d = [&](std::uint32_t j) {
        std::vector<SparseVec::Term> t;
        for (const auto& [i, c] : one) t.emplace_back(fcoord(i, j, n), c);
        return SparseVec(std::move(t));
    };

    // The four actions of basis element b on an F coordinate (i,j):
    //   b -| (x -| da) = (b -| x) -| da          b |- (x -| da) = (b |- x) -| da
    //   (x -| da) -| b = (x -| (b |- 1)) -| da   (x -| da) |- b = (x |- b) -| da
    auto act = [&](int which, std::uint32_t b, std::uint32_t i, std::uint32_t j) {
        SparseVec coeff;
        switch (which) {
            case 0: coeff = d.left.at(b, i); break;
            case 1: coeff = d.right.at(b, i); break;
            case 2: coeff = d.left.eval(SparseVec::unit(i), b_vdash_one[b]); break;
            default: coeff = d.right.at(i, b); break;
        }
        return coeff.mapped([&](std::uint32_t s) { return fcoord(s, j, n); });
    };
    auto act_vec = [&](int which, std::uint32_t b, const SparseVec& v) {
        SparseVec out;
        for (const auto& [f, c] : v) out.axpy(c, act(which, b, f / n, f % n));
        return out;
    };

    // Leibniz-rule relation generators for both products, then close the span
    // under all four actions to get the two-sided submodule N.
    std::vector<SparseVec> pending;
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = 0; q < n; ++q)
            for (int star = 0; star < 2; ++star) {
                const Table& mul = star == 0 ? d.left : d.right;
                SparseVec rel;
                for (const auto& [k, c] : mul.at(p, q)) rel.axpy(c, embed_d(k));
                // (d a_p) * a_q : right action of a_q on 1 -| d(a_p).
                rel -= act_vec(star == 0 ? 2 : 3, q, embed_d(p));
                // a_p * (d a_q) : left action of a_p on 1 -| d(a_q).
                rel -= act_vec(star == 0 ? 0 : 1, p, embed_d(q));
                if (!rel.is_zero()) pending.push_back(std::move(rel));
            }

    EchelonBuilder builder(fdim);
    while (!pending.empty()) {
        SparseVec v = std::move(pending.back());
        pending.pop_back();
        if (!builder.insert(v)) continue;
        for (int which = 0; which < 4; ++which)
            for (std::uint32_t b = 0; b < n; ++b) {
                SparseVec img = act_vec(which, b, v);
                if (!img.is_zero()) pending.push_back(std::move(img));
            }
    }

    DifferentialModule om;
    om.base = d;
    om.relations = builder.take();

    std::vector<bool> is_pivot(fdim, false);
    for (std::uint32_t p : om.relations.pivots) is_pivot[p] = true;
    for (std::uint32_t f = 0; f < fdim; ++f) {
        if (is_pivot[f]) continue;
        const std::uint32_t i = f / n, j = f % n;
        om.rep_coord.push_back(f);
        const std::string dj = "d(" + d.basis.names[j] + ")";
        om.basis.names.push_back(d.basis.names[i] == "1" ? dj : d.basis.names[i] + "*" + dj);
        om.basis.parity.push_back(d.basis.parity[i] + d.basis.parity[j]);
    }

    for (std::uint32_t j = 0; j < n; ++j) om.d_images.push_back(om.to_quotient(embed_d(j)));

    const std::uint32_t wdim = om.dim();
    om.left_l = Table(n, wdim);
    om.left_r = Table(n, wdim);
    om.right_l = Table(wdim, n);
    om.right_r = Table(wdim, n);
    for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t w = 0; w < wdim; ++w) {
            const std::uint32_t i = om.rep_coord[w] / n, j = om.rep_coord[w] % n;
            om.left_l.set(b, w, om.to_quotient(act(0, b, i, j)));
            om.left_r.set(b, w, om.to_quotient(act(1, b, i, j)));
            om.right_l.set(w, b, om.to_quotient(act(2, b, i, j)));
            om.right_r.set(w, b, om.to_quotient(act(3, b, i, j)));
        }

    // Construction invariants: the Leibniz rule in the quotient, the two-sided
    // generator rules, and the bimodule laws. Fail loudly if any is broken.
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = 0; q < n; ++q)
            for (int star = 0; star < 2; ++star) {
                const Table& mul = star == 0 ? d.left : d.right;
                const Table& ract = star == 0 ? om.right_l : om.right_r;
                const Table& lact = star == 0 ? om.left_l : om.left_r;
                SparseVec v = om.d_of(mul.at(p, q));
                v -= ract.eval(om.d_images[p], SparseVec::unit(q));
                v -= lact.eval(SparseVec::unit(p), om.d_images[q]);
                if (!v.is_zero())
                    throw std::runtime_error("omega: Leibniz rule fails in the quotient");
            }
    for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t j = 0; j < n; ++j) {
            const SparseVec eb = SparseVec::unit(b);
            SparseVec v = om.left_l.eval(eb, om.d_images[j]) -
                          om.right_r.eval(om.d_images[j], eb);
            if (!v.is_zero()) throw std::runtime_error("omega: rule b-|(da) = (da)|-b fails");
            v = om.left_r.eval(eb, om.d_images[j]) - om.right_l.eval(om.d_images[j], eb);
            if (!v.is_zero()) throw std::runtime_error("omega: rule b|-(da) = (da)-|b fails");
        }
    if (!check_dibimodule(d, om.as_bimodule()).ok())
        throw std::runtime_error("omega: induced actions fail the bimodule laws");
    return om;
}

std::uint32_t omega_mod_d_dim(const DifferentialModule& om) {
    EchelonBuilder b(om.dim());
    for (const auto& di : om.d_images) b.insert(di);
    return om.dim() - b.dim();
}

UniversalPropertyReport check_universal_property(const DifferentialModule& om,
                                                 const DiBimodule& m) {
    const SuperDialgebra& d = om.base;
    const std::uint32_t n = d.dim(), md = m.dim();

    // Derivations f: D -> M with f(a*b) = f(a)*b + a*f(b), unknowns f_{jk}.
    auto unk = [&](std::uint32_t j, std::uint32_t k) { return j * md + k; };
    std::vector<SparseVec> eqs;
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = 0; q < n; ++q)
            for (int star = 0; star < 2; ++star) {
                const Table& mul = star == 0 ? d.left : d.right;
                const Table& ract = star == 0 ? m.right_l : m.right_r;
                const Table& lact = star == 0 ? m.left_l : m.left_r;
                // Row per target coordinate r: coefficients over the unknowns.
                std::vector<SparseVec> rows(md);
                std::vector<std::vector<SparseVec::Term>> acc(md);
                for (const auto& [s, c] : mul.at(p, q))
                    for (std::uint32_t k = 0; k < md; ++k) acc[k].emplace_back(unk(s, k), c);
                for (std::uint32_t k = 0; k < md; ++k)
                    for (const auto& [r, c] : ract.at(k, q)) acc[r].emplace_back(unk(p, k), -c);
                for (std::uint32_t k = 0; k < md; ++k)
                    for (const auto& [r, c] : lact.at(p, k)) acc[r].emplace_back(unk(q, k), -c);
                for (std::uint32_t r = 0; r < md; ++r)
                    if (!acc[r].empty()) eqs.emplace_back(std::move(acc[r]));
            }
    const std::uint32_t der_dim = kernel(eqs, n * md).dim();

    // Module maps g: Omega -> M commuting with all four actions, unknowns g_{wk}.
    const std::uint32_t wdim = om.dim();
    auto gunk = [&](std::uint32_t w, std::uint32_t k) { return w * md + k; };
    std::vector<SparseVec> heqs;
    const Table* om_act[4] = {&om.left_l, &om.left_r, &om.right_l, &om.right_r};
    const Table* m_act[4] = {&m.left_l, &m.left_r, &m.right_l, &m.right_r};
    for (int which = 0; which < 4; ++which)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t w = 0; w < wdim; ++w) {
                const bool left_side = which < 2;
                const SparseVec& bw =
                    left_side ? om_act[which]->at(b, w) : om_act[which]->at(w, b);
                std::vector<std::vector<SparseVec::Term>> acc(md);
                for (const auto& [w2, c] : bw)
                    for (std::uint32_t k = 0; k < md; ++k) acc[k].emplace_back(gunk(w2, k), c);
                for (std::uint32_t k = 0; k < md; ++k) {
                    const SparseVec& img =
                        left_side ? m_act[which]->at(b, k) : m_act[which]->at(k, b);
                    for (const auto& [r, c] : img) acc[r].emplace_back(gunk(w, k), -c);
                }
                for (std::uint32_t r = 0; r < md; ++r)
                    if (!acc[r].empty()) heqs.emplace_back(std::move(acc[r]));
            }
    const std::uint32_t hom_dim = kernel(heqs, wdim * md).dim();

    return UniversalPropertyReport{der_dim, hom_dim, der_dim == hom_dim};
}

}  // namespace lsa
