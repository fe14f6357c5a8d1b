#include "lsa/checks.hpp"

namespace lsa {

namespace {

/// Runs body(i,j,k) over all basis triples, honoring the filter.
template <typename F>
void for_triples(std::uint32_t n, const TripleFilter& filter, CheckReport& rep, F&& body) {
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t k = 0; k < n; ++k) {
                if (filter && !filter(i, j, k)) {
                    ++rep.skipped;
                    continue;
                }
                ++rep.checked;
                body(i, j, k);
            }
}

CheckReport check_grading_table(const GradedBasis& lhs, const GradedBasis& rhs,
                                const GradedBasis& out, const Table& t, const char* rule) {
    CheckReport rep;
    for (std::uint32_t i = 0; i < lhs.dim(); ++i)
        for (std::uint32_t j = 0; j < rhs.dim(); ++j) {
            ++rep.checked;
            const Parity want = lhs.parity[i] + rhs.parity[j];
            SparseVec bad;
            for (const auto& [k, c] : t.at(i, j))
                if (out.parity[k] != want) bad.axpy(c, SparseVec::unit(k));
            if (!bad.is_zero()) rep.record(rule, {i, j}, std::move(bad));
        }
    return rep;
}

}  // namespace

CheckReport check_dialgebra(const SuperDialgebra& d, const TripleFilter& filter) {
    CheckReport rep;
    const auto& L = d.left;
    const auto& R = d.right;
    for_triples(d.dim(), filter, rep, [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        const SparseVec ea = SparseVec::unit(a), eb = SparseVec::unit(b), ec = SparseVec::unit(c);
        const SparseVec ab_l = L.at(a, b), bc_l = L.at(b, c);
        const SparseVec ab_r = R.at(a, b), bc_r = R.at(b, c);

        SparseVec v = L.eval(ea, bc_l) - L.eval(ab_l, ec);
        if (!v.is_zero()) rep.record("D1: a<(b<c) = (a<b)<c", {a, b, c}, std::move(v));
        v = L.eval(ab_l, ec) - L.eval(ea, bc_r);
        if (!v.is_zero()) rep.record("D2: (a<b)<c = a<(b>c)", {a, b, c}, std::move(v));
        v = L.eval(ab_r, ec) - R.eval(ea, bc_l);
        if (!v.is_zero()) rep.record("D3: (a>b)<c = a>(b<c)", {a, b, c}, std::move(v));
        v = R.eval(ab_r, ec) - R.eval(ea, bc_r);
        if (!v.is_zero()) rep.record("D4: (a>b)>c = a>(b>c)", {a, b, c}, std::move(v));
        v = R.eval(ea, bc_r) - R.eval(ab_l, ec);
        if (!v.is_zero()) rep.record("D5: a>(b>c) = (a<b)>c", {a, b, c}, std::move(v));
    });
    if (d.bar_unit) {
        for (std::uint32_t a = 0; a < d.dim(); ++a) {
            ++rep.checked;
            const SparseVec ea = SparseVec::unit(a);
            SparseVec v = R.eval(*d.bar_unit, ea) - ea;
            if (!v.is_zero()) rep.record("unit: 1>a = a", {a}, std::move(v));
            v = L.eval(ea, *d.bar_unit) - ea;
            if (!v.is_zero()) rep.record("unit: a<1 = a", {a}, std::move(v));
        }
    }
    return rep;
}

CheckReport check_commutative(const SuperDialgebra& d) {
    CheckReport rep;
    for (std::uint32_t a = 0; a < d.dim(); ++a)
        for (std::uint32_t b = 0; b < d.dim(); ++b) {
            ++rep.checked;
            SparseVec v = d.left.at(a, b) - d.right.at(b, a);
            if (!v.is_zero()) rep.record("commutative: a<b = b>a", {a, b}, std::move(v));
        }
    return rep;
}

CheckReport check_grading(const SuperDialgebra& d) {
    CheckReport rep = check_grading_table(d.basis, d.basis, d.basis, d.left, "grading: a<b");
    rep.merge(check_grading_table(d.basis, d.basis, d.basis, d.right, "grading: a>b"));
    if (d.bar_unit) {
        ++rep.checked;
        auto p = d.basis.parity_of(*d.bar_unit);
        if (!p || *p != Parity::even)
            rep.record("grading: bar unit must be even", {}, *d.bar_unit);
    }
    return rep;
}

CheckReport check_grading(const LeibnizSuperalgebra& l) {
    return check_grading_table(l.basis, l.basis, l.basis, l.bracket, "grading: [a,b]");
}

CheckReport check_grading(const LeibnizModule& m) {
    CheckReport rep =
        check_grading_table(m.alg.basis, m.basis, m.basis, m.left_act, "grading: [x,m]");
    rep.merge(check_grading_table(m.basis, m.alg.basis, m.basis, m.right_act, "grading: [m,x]"));
    return rep;
}

CheckReport check_leibniz(const LeibnizSuperalgebra& l, const TripleFilter& filter) {
    CheckReport rep;
    const auto& B = l.bracket;
    for_triples(l.dim(), filter, rep, [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        SparseVec v = B.eval(B.at(a, b), SparseVec::unit(c));
        v -= B.eval(SparseVec::unit(a), B.at(b, c));
        v.axpy(Rational(koszul(l.basis.parity[a], l.basis.parity[b])),
               B.eval(SparseVec::unit(b), B.at(a, c)));
        if (!v.is_zero())
            rep.record("leibniz: [[a,b],c] = [a,[b,c]] - (-1)^{|a||b|}[b,[a,c]]", {a, b, c},
                       std::move(v));
    });
    return rep;
}

CheckReport check_right_leibniz(const RightLeibnizAlgebra& l, const TripleFilter& filter) {
    CheckReport rep;
    const auto& B = l.bracket;
    for_triples(l.dim(), filter, rep, [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        SparseVec v = B.eval(SparseVec::unit(a), B.at(b, c));
        v -= B.eval(B.at(a, b), SparseVec::unit(c));
        v.axpy(Rational(koszul(l.basis.parity[b], l.basis.parity[c])),
               B.eval(B.at(a, c), SparseVec::unit(b)));
        if (!v.is_zero())
            rep.record("right-leibniz: [a,[b,c]] = [[a,b],c] - (-1)^{|b||c|}[[a,c],b]", {a, b, c},
                       std::move(v));
    });
    return rep;
}

CheckReport check_lie_super(const LeibnizSuperalgebra& l) {
    CheckReport rep;
    for (std::uint32_t a = 0; a < l.dim(); ++a)
        for (std::uint32_t b = 0; b < l.dim(); ++b) {
            ++rep.checked;
            SparseVec v = l.bracket.at(a, b);
            v.axpy(Rational(koszul(l.basis.parity[a], l.basis.parity[b])), l.bracket.at(b, a));
            if (!v.is_zero())
                rep.record("lie: [a,b] + (-1)^{|a||b|}[b,a] = 0", {a, b}, std::move(v));
        }
    return rep;
}

CheckReport check_module(const LeibnizModule& m) {
    CheckReport rep;
    const auto& B = m.alg.bracket;
    const auto& L = m.left_act;
    const auto& R = m.right_act;
    const auto& ap = m.alg.basis.parity;
    const auto& mp = m.basis.parity;
    const std::uint32_t n = m.alg.dim(), nm = m.dim();
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            for (std::uint32_t w = 0; w < nm; ++w) {
                ++rep.checked;
                const SparseVec ex = SparseVec::unit(x), ey = SparseVec::unit(y),
                                em = SparseVec::unit(w);

                // [[x,y],m] = [x,[y,m]] - (-1)^{|x||y|}[y,[x,m]]
                SparseVec v = L.eval(B.at(x, y), em);
                v -= L.eval(ex, L.at(y, w));
                v.axpy(Rational(koszul(ap[x], ap[y])), L.eval(ey, L.at(x, w)));
                if (!v.is_zero())
                    rep.record("module: [[x,y],m] = [x,[y,m]] - (-1)^{|x||y|}[y,[x,m]]", {x, y, w},
                               std::move(v));

                // [[x,m],y] = [x,[m,y]] - (-1)^{|x||m|}[m,[x,y]]
                v = R.eval(L.at(x, w), ey);
                v -= L.eval(ex, R.at(w, y));
                v.axpy(Rational(koszul(ap[x], mp[w])), R.eval(em, B.at(x, y)));
                if (!v.is_zero())
                    rep.record("module: [[x,m],y] = [x,[m,y]] - (-1)^{|x||m|}[m,[x,y]]", {x, y, w},
                               std::move(v));

                // [[m,x],y] = [m,[x,y]] - (-1)^{|m||x|}[x,[m,y]]
                v = R.eval(R.at(w, x), ey);
                v -= R.eval(em, B.at(x, y));
                v.axpy(Rational(koszul(mp[w], ap[x])), L.eval(ex, R.at(w, y)));
                if (!v.is_zero())
                    rep.record("module: [[m,x],y] = [m,[x,y]] - (-1)^{|m||x|}[x,[m,y]]", {x, y, w},
                               std::move(v));
            }
    return rep;
}

CheckReport check_invariant_form(const LeibnizSuperalgebra& l, const BilinearForm& form) {
    CheckReport rep;
    const std::uint32_t n = l.dim();
    if (form.n != n) {
        rep.record("form: size mismatch", {}, SparseVec());
        return rep;
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            ++rep.checked;
            if (l.basis.parity[i] != l.basis.parity[j] && form.at(i, j) != 0)
                rep.record("form: even (mixed parities pair to 0)", {i, j},
                           SparseVec{{0, form.at(i, j)}});
            Rational s = form.at(i, j) -
                         Rational(koszul(l.basis.parity[i], l.basis.parity[j])) * form.at(j, i);
            if (s != 0)
                rep.record("form: supersymmetric (x,y) = (-1)^{|x||y|}(y,x)", {i, j},
                           SparseVec{{0, s}});
        }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t k = 0; k < n; ++k) {
                ++rep.checked;
                Rational s(0);
                for (const auto& [t, c] : l.bracket.at(i, j)) s += c * form.at(t, k);
                for (const auto& [t, c] : l.bracket.at(j, k)) s -= c * form.at(i, t);
                if (s != 0)
                    rep.record("form: invariant ([x,y],z) = (x,[y,z])", {i, j, k},
                               SparseVec{{0, s}});
            }
    return rep;
}

CheckReport check_dibimodule(const SuperDialgebra& d, const DiBimodule& m) {
    CheckReport rep;
    const auto& L = d.left;
    const auto& R = d.right;
    const std::uint32_t n = d.dim(), nm = m.dim();
    // The five laws read left to right as D1,D2 (both "<" outer), D3 (mixed),
    // D4,D5 (both ">" outer); the module element sits in slot 1, 2, or 3.
    struct Eq {
        const char* rule;
        int slot;
    };
    auto act = [&](bool left_side, bool dashv, const SparseVec& a,
                   const SparseVec& b) -> SparseVec {
        // left_side: dialgebra element on the left of the module element.
        if (left_side) return (dashv ? m.left_l : m.left_r).eval(a, b);
        return (dashv ? m.right_l : m.right_r).eval(a, b);
    };
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t w = 0; w < nm; ++w) {
                ++rep.checked;
                const SparseVec ea = SparseVec::unit(a), eb = SparseVec::unit(b),
                                em = SparseVec::unit(w);
                // Slot 3: m rightmost. Products of a,b happen in the dialgebra.
                SparseVec v = act(true, true, ea, act(true, true, eb, em)) -
                              act(true, true, L.at(a, b), em);
                if (!v.is_zero()) rep.record("bimodule D1 slot3", {a, b, w}, std::move(v));
                v = act(true, true, L.at(a, b), em) - act(true, true, ea, act(true, false, eb, em));
                if (!v.is_zero()) rep.record("bimodule D2 slot3", {a, b, w}, std::move(v));
                v = act(true, true, R.at(a, b), em) -
                    act(true, false, ea, act(true, true, eb, em));
                if (!v.is_zero()) rep.record("bimodule D3 slot3", {a, b, w}, std::move(v));
                v = act(true, false, R.at(a, b), em) -
                    act(true, false, ea, act(true, false, eb, em));
                if (!v.is_zero()) rep.record("bimodule D4 slot3", {a, b, w}, std::move(v));
                v = act(true, false, ea, act(true, false, eb, em)) -
                    act(true, false, L.at(a, b), em);
                if (!v.is_zero()) rep.record("bimodule D5 slot3", {a, b, w}, std::move(v));

                // Slot 2: m in the middle.
                v = act(true, true, ea, act(false, true, em, eb)) -
                    act(false, true, act(true, true, ea, em), eb);
                if (!v.is_zero()) rep.record("bimodule D1 slot2", {a, w, b}, std::move(v));
                v = act(false, true, act(true, true, ea, em), eb) -
                    act(true, true, ea, act(false, false, em, eb));
                if (!v.is_zero()) rep.record("bimodule D2 slot2", {a, w, b}, std::move(v));
                v = act(false, true, act(true, false, ea, em), eb) -
                    act(true, false, ea, act(false, true, em, eb));
                if (!v.is_zero()) rep.record("bimodule D3 slot2", {a, w, b}, std::move(v));
                v = act(false, false, act(true, false, ea, em), eb) -
                    act(true, false, ea, act(false, false, em, eb));
                if (!v.is_zero()) rep.record("bimodule D4 slot2", {a, w, b}, std::move(v));
                v = act(true, false, ea, act(false, false, em, eb)) -
                    act(false, false, act(true, true, ea, em), eb);
                if (!v.is_zero()) rep.record("bimodule D5 slot2", {a, w, b}, std::move(v));

                // Slot 1: m leftmost. Products of a,b happen in the dialgebra.
                v = act(false, true, em, L.at(a, b)) - act(false, true, act(false, true, em, ea), eb);
                if (!v.is_zero()) rep.record("bimodule D1 slot1", {w, a, b}, std::move(v));
                v = act(false, true, act(false, true, em, ea), eb) -
                    act(false, true, em, R.at(a, b));
                if (!v.is_zero()) rep.record("bimodule D2 slot1", {w, a, b}, std::move(v));
                v = act(false, true, act(false, false, em, ea), eb) -
                    act(false, false, em, L.at(a, b));
                if (!v.is_zero()) rep.record("bimodule D3 slot1", {w, a, b}, std::move(v));
                v = act(false, false, act(false, false, em, ea), eb) -
                    act(false, false, em, R.at(a, b));
                if (!v.is_zero()) rep.record("bimodule D4 slot1", {w, a, b}, std::move(v));
                v = act(false, false, em, R.at(a, b)) -
                    act(false, false, act(false, true, em, ea), eb);
                if (!v.is_zero()) rep.record("bimodule D5 slot1", {w, a, b}, std::move(v));
            }
    return rep;
}

Subspace derived_subalgebra(const LeibnizSuperalgebra& l) {
    EchelonBuilder b(l.dim());
    for (std::uint32_t i = 0; i < l.dim(); ++i)
        for (std::uint32_t j = 0; j < l.dim(); ++j) b.insert(l.bracket.at(i, j));
    return b.take();
}

Subspace center(const LeibnizSuperalgebra& l) {
    // Unknown z = sum z_i e_i; equations: coefficient k of [z, e_j] and [e_j, z].
    const std::uint32_t n = l.dim();
    std::vector<SparseVec> eqs;
    for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t k = 0; k < n; ++k) {
            std::vector<SparseVec::Term> lhs, rhs;
            for (std::uint32_t i = 0; i < n; ++i) {
                Rational c = l.bracket.at(i, j).coeff(k);
                if (c != 0) lhs.emplace_back(i, std::move(c));
                Rational c2 = l.bracket.at(j, i).coeff(k);
                if (c2 != 0) rhs.emplace_back(i, std::move(c2));
            }
            eqs.emplace_back(std::move(lhs));
            eqs.emplace_back(std::move(rhs));
        }
    return kernel(eqs, n);
}

bool is_perfect(const LeibnizSuperalgebra& l) {
    return derived_subalgebra(l).dim() == l.dim();
}

}  // namespace lsa
