#include "lsa/catalog.hpp"

#include <stdexcept>

#include "lsa/rational.hpp"

namespace lsa {
namespace {

// Fill a bracket table from (left, right, coefficient, result) quadruples given
// by basis names; entries not mentioned stay zero.
struct BracketSpec {
    const char* a;
    const char* b;
    Rational coeff;
    const char* result;
};

Table table_from_specs(const GradedBasis& basis, const std::vector<BracketSpec>& specs) {
    const std::uint32_t n = basis.dim();
    Table t(n, n);
    for (const auto& s : specs) {
        std::uint32_t i = basis.index_of(s.a);
        std::uint32_t j = basis.index_of(s.b);
        SparseVec v = t.at(i, j);
        v.axpy(s.coeff, SparseVec::unit(basis.index_of(s.result)));
        t.set(i, j, std::move(v));
    }
    return t;
}

void require_ok(const CheckReport& rep, const std::string& msg) {
    if (!rep.ok()) throw std::logic_error(msg + ": " + rep.summary());
}

}  // namespace

QuadraticLeibniz osp12() {
    GradedBasis basis = GradedBasis::make({{"X+", Parity::even},
                                           {"x+", Parity::odd},
                                           {"H", Parity::even},
                                           {"x-", Parity::odd},
                                           {"X-", Parity::even}});
    std::vector<BracketSpec> specs = {
        {"H", "X+", Rational(4), "X+"},   {"H", "x+", Rational(2), "x+"},
        {"H", "x-", Rational(-2), "x-"},  {"H", "X-", Rational(-4), "X-"},
        {"X+", "H", Rational(-4), "X+"},  {"x+", "H", Rational(-2), "x+"},
        {"x-", "H", Rational(2), "x-"},   {"X-", "H", Rational(4), "X-"},
        {"X+", "X-", Rational(1, 2), "H"}, {"X-", "X+", Rational(-1, 2), "H"},
        {"x+", "x-", Rational(1), "H"},   {"x-", "x+", Rational(1), "H"},
        {"x+", "x+", Rational(4), "X+"},  {"x-", "x-", Rational(-4), "X-"},
        {"X+", "x-", Rational(-1), "x+"}, {"x-", "X+", Rational(1), "x+"},
        {"X-", "x+", Rational(-1), "x-"}, {"x+", "X-", Rational(1), "x-"},
    };
    QuadraticLeibniz q;
    q.alg.basis = basis;
    q.alg.bracket = table_from_specs(basis, specs);
    q.form = BilinearForm(5);
    q.form.at(basis.index_of("H"), basis.index_of("H")) = Rational(2);
    q.form.at(basis.index_of("x+"), basis.index_of("x-")) = Rational(1);
    q.form.at(basis.index_of("x-"), basis.index_of("x+")) = Rational(-1);
    q.form.at(basis.index_of("X+"), basis.index_of("X-")) = Rational(1, 4);
    q.form.at(basis.index_of("X-"), basis.index_of("X+")) = Rational(1, 4);
    require_ok(check_grading(q.alg), "osp12: grading");
    require_ok(check_leibniz(q.alg), "osp12: Leibniz identity");
    require_ok(check_lie_super(q.alg), "osp12: antisymmetry");
    require_ok(check_invariant_form(q.alg, q.form), "osp12: invariant form");
    return q;
}

QuadraticLeibniz sl2() {
    GradedBasis basis = GradedBasis::make(
        {{"e", Parity::even}, {"h", Parity::even}, {"f", Parity::even}});
    std::vector<BracketSpec> specs = {
        {"h", "e", Rational(2), "e"},  {"e", "h", Rational(-2), "e"},
        {"h", "f", Rational(-2), "f"}, {"f", "h", Rational(2), "f"},
        {"e", "f", Rational(1), "h"},  {"f", "e", Rational(-1), "h"},
    };
    QuadraticLeibniz q;
    q.alg.basis = basis;
    q.alg.bracket = table_from_specs(basis, specs);
    q.form = BilinearForm(3);
    q.form.at(0, 2) = Rational(1);
    q.form.at(2, 0) = Rational(1);
    q.form.at(1, 1) = Rational(2);
    require_ok(check_grading(q.alg), "sl2: grading");
    require_ok(check_leibniz(q.alg), "sl2: Leibniz identity");
    require_ok(check_lie_super(q.alg), "sl2: antisymmetry");
    require_ok(check_invariant_form(q.alg, q.form), "sl2: invariant form");
    return q;
}

QuadraticLeibniz sl_mn(std::uint32_t m, std::uint32_t n) {
    if (m + n < 2) throw std::invalid_argument("sl_mn: need m + n >= 2");
    const std::uint32_t s = m + n;
    SuperDialgebra scalars = trunc_poly(1);
    LeibnizSuperalgebra gl = gl_leibniz(m, n, scalars);
    Subspace span = derived_subalgebra(gl);

    QuadraticLeibniz q;
    // Rebuild the subalgebra here to keep the gl coordinates of each basis row
    // (needed for the supertrace form below).
    const std::uint32_t p = span.dim();
    std::vector<std::string> names(p);
    std::vector<Parity> pars(p);
    for (std::uint32_t k = 0; k < p; ++k) {
        names[k] = gl.basis.names[span.pivots[k]];
        pars[k] = gl.basis.parity_of(span.pivots[k]);
    }
    q.alg.basis = GradedBasis::make(names, pars);
    q.alg.bracket = Table(p, p);
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) {
            auto coords = span.coordinates(gl.bracket.eval(span.rows[a], span.rows[b]));
            if (!coords) throw std::logic_error("sl_mn: derived span is not bracket-closed");
            q.alg.bracket.set(a, b, std::move(*coords));
        }
    // Supertrace form (x,y) = str(xy): str(E_ij E_kl) = delta_jk delta_il (-1)^{p(i)}.
    q.form = BilinearForm(p);
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) {
            Rational v(0);
            for (const auto& [ca, fa] : span.rows[a])
                for (const auto& [cb, fb] : span.rows[b]) {
                    std::uint32_t i = ca / s, j = ca % s;
                    std::uint32_t k = cb / s, l = cb % s;
                    if (j == k && i == l) v += fa * fb * Rational(i < m ? 1 : -1);
                }
            q.form.at(a, b) = v;
        }
    require_ok(check_grading(q.alg), "sl_mn: grading");
    require_ok(check_leibniz(q.alg), "sl_mn: Leibniz identity");
    require_ok(check_lie_super(q.alg), "sl_mn: antisymmetry");
    require_ok(check_invariant_form(q.alg, q.form), "sl_mn: invariant form");
    return q;
}

LeibnizSuperalgebra abelian(std::uint32_t k) {
    std::vector<std::string> names;
    std::vector<Parity> pars;
    for (std::uint32_t i = 0; i < k; ++i) {
        names.push_back("a" + std::to_string(i));
        pars.push_back(Parity::even);
    }
    LeibnizSuperalgebra l;
    l.basis = GradedBasis::make(names, pars);
    l.bracket = Table(k, k);
    return l;
}

SuperDialgebra trunc_poly(std::uint32_t n_trunc) {
    if (n_trunc == 0) throw std::invalid_argument("trunc_poly: need N >= 1");
    std::vector<std::string> names;
    std::vector<Parity> pars;
    for (std::uint32_t i = 0; i < n_trunc; ++i) {
        names.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
        pars.push_back(Parity::even);
    }
    SuperDialgebra d;
    d.basis = GradedBasis::make(names, pars);
    d.left = Table(n_trunc, n_trunc);
    d.right = Table(n_trunc, n_trunc);
    for (std::uint32_t i = 0; i < n_trunc; ++i)
        for (std::uint32_t j = 0; j < n_trunc; ++j) {
            SparseVec v = i + j < n_trunc ? SparseVec::unit(i + j) : SparseVec{};
            d.left.set(i, j, v);
            d.right.set(i, j, std::move(v));
        }
    d.bar_unit = SparseVec::unit(0);
    require_ok(check_dialgebra(d), "trunc_poly: dialgebra axioms");
    require_ok(check_commutative(d), "trunc_poly: commutativity");
    return d;
}

Cochain loop_cocycle(const QuadraticLeibniz& g, const SuperDialgebra& d,
                     const DifferentialModule& om) {
    if (!(om.base.basis == d.basis) || !(om.base.left == d.left) ||
        !(om.base.right == d.right))
        throw std::invalid_argument("loop_cocycle: differential module is over a different dialgebra");
    const std::uint32_t ng = g.alg.dim(), dd = d.dim();
    const std::uint32_t nn = ng * dd;
    Cochain psi = Cochain::zero(2, Parity::even, nn, om.dim());
    for (std::uint32_t i = 0; i < ng; ++i)
        for (std::uint32_t j = 0; j < ng; ++j) {
            const Rational& f = g.form.at(i, j);
            if (f == 0) continue;
            for (std::uint32_t p = 0; p < dd; ++p)
                for (std::uint32_t q = 0; q < dd; ++q) {
                    SparseVec v = om.pairing(SparseVec::unit(p), SparseVec::unit(q));
                    v.scale(f);
                    psi.values[static_cast<std::size_t>(i * dd + p) * nn + (j * dd + q)] =
                        std::move(v);
                }
        }
    return psi;
}

CheckReport check_loop_pairing_identity(const DifferentialModule& om) {
    CheckReport rep;
    const std::uint32_t n = om.base.dim();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c) {
                ++rep.checked;
                SparseVec lhs =
                    om.pairing(om.base.right.at(a, b), SparseVec::unit(c));
                SparseVec rhs =
                    om.pairing(SparseVec::unit(a), om.base.right.at(b, c));
                rhs.axpy(Rational(1),
                         om.pairing(SparseVec::unit(b), om.base.right.at(a, c)));
                lhs.axpy(Rational(-1), rhs);
                if (!lhs.is_zero())
                    rep.record("{a|-b, c} = {a, b|-c} + {b, a|-c}", {a, b, c}, std::move(lhs));
            }
    return rep;
}

CheckReport check_osp_loop_table(const SuperDialgebra& d) {
    QuadraticLeibniz g = osp12();
    DifferentialModule om = omega(d);
    LeibnizSuperalgebra loop = loop_leibniz(g, d, om);
    const std::uint32_t dd = d.dim();
    const std::uint32_t nn = g.alg.dim() * dd;

    auto gi = [&](const char* name) { return g.alg.basis.index_of(name); };
    const std::uint32_t Xp = gi("X+"), xp = gi("x+"), H = gi("H"), xm = gi("x-"),
                        Xm = gi("X-");
    auto elem = [&](std::uint32_t gidx, std::uint32_t p) { return gidx * dd + p; };
    // Y (x) v for a coefficient vector v in D coordinates.
    auto tens = [&](std::uint32_t gidx, const SparseVec& v) {
        return v.mapped([&](std::uint32_t p) { return elem(gidx, p); });
    };

    CheckReport rep;
    auto expect = [&](const char* rule, std::uint32_t a, std::uint32_t b,
                      const SparseVec& want) {
        ++rep.checked;
        SparseVec got = loop.bracket.at(a, b);
        got.axpy(Rational(-1), want);
        if (!got.is_zero()) rep.record(rule, {a, b}, std::move(got));
    };

    for (std::uint32_t p = 0; p < dd; ++p)
        for (std::uint32_t q = 0; q < dd; ++q) {
            const SparseVec& ab = d.right.at(p, q);  // a |- b
            SparseVec pair = om.pairing(SparseVec::unit(p), SparseVec::unit(q))
                                 .mapped([&](std::uint32_t w) { return nn + w; });

            // Cartan row: [H(x)a, Y(x)b] = beta(Y) Y(x)(a|-b), and the flip.
            const std::pair<std::uint32_t, int> roots[] = {
                {Xp, 4}, {xp, 2}, {xm, -2}, {Xm, -4}};
            for (auto [y, beta] : roots) {
                SparseVec want = tens(y, ab);
                want.scale(Rational(beta));
                expect("[H(x)a, Y(x)b] = beta(Y) Y(x)(a|-b)", elem(H, p), elem(y, q), want);
                want.scale(Rational(-1));
                expect("[Y(x)a, H(x)b] = -beta(Y) Y(x)(a|-b)", elem(y, p), elem(H, q), want);
            }
            {
                SparseVec want = pair;
                want.scale(Rational(2));
                expect("[H(x)a, H(x)b] = 2{a,b}", elem(H, p), elem(H, q), want);
            }

            // Odd root vectors against each other.
            {
                SparseVec want = tens(H, ab);
                want.axpy(Rational(1), pair);
                expect("[x+(x)a, x-(x)b] = H(x)(a|-b) + {a,b}", elem(xp, p), elem(xm, q), want);
                want = tens(H, ab);
                want.axpy(Rational(-1), pair);
                expect("[x-(x)a, x+(x)b] = H(x)(a|-b) - {a,b}", elem(xm, p), elem(xp, q), want);
                want = tens(Xp, ab);
                want.scale(Rational(4));
                expect("[x+(x)a, x+(x)b] = 4 X+(x)(a|-b)", elem(xp, p), elem(xp, q), want);
                want = tens(Xm, ab);
                want.scale(Rational(-4));
                expect("[x-(x)a, x-(x)b] = -4 X-(x)(a|-b)", elem(xm, p), elem(xm, q), want);
            }

            // Long root vectors against short ones.
            {
                SparseVec want = tens(xp, ab);
                want.scale(Rational(-1));
                expect("[X+(x)a, x-(x)b] = -x+(x)(a|-b)", elem(Xp, p), elem(xm, q), want);
                want.scale(Rational(-1));
                expect("[x-(x)a, X+(x)b] = x+(x)(a|-b)", elem(xm, p), elem(Xp, q), want);
                want = tens(xm, ab);
                want.scale(Rational(-1));
                expect("[X-(x)a, x+(x)b] = -x-(x)(a|-b)", elem(Xm, p), elem(xp, q), want);
                want.scale(Rational(-1));
                expect("[x+(x)a, X-(x)b] = x-(x)(a|-b)", elem(xp, p), elem(Xm, q), want);
            }

            // Long against long.
            {
                SparseVec want = tens(H, ab);
                want.scale(Rational(1, 2));
                want.axpy(Rational(1, 4), pair);
                expect("[X+(x)a, X-(x)b] = 1/2 H(x)(a|-b) + 1/4 {a,b}", elem(Xp, p),
                       elem(Xm, q), want);
                want = tens(H, ab);
                want.scale(Rational(-1, 2));
                want.axpy(Rational(1, 4), pair);
                expect("[X-(x)a, X+(x)b] = -1/2 H(x)(a|-b) + 1/4 {a,b}", elem(Xm, p),
                       elem(Xp, q), want);
            }

            // Vanishing combinations.
            const std::pair<std::uint32_t, std::uint32_t> zeros[] = {
                {Xp, xp}, {xp, Xp}, {Xm, xm}, {xm, Xm}, {Xp, Xp}, {Xm, Xm}};
            for (auto [ya, yb] : zeros)
                expect("[Y(x)a, Z(x)b] = 0 for same-sign root pairs", elem(ya, p),
                       elem(yb, q), SparseVec{});
        }
    return rep;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::uint32_t parse_u32(const std::string& s, const std::string& what) {
    if (s.empty() || s.size() > 6)
        throw std::invalid_argument("catalog: bad " + what + ": '" + s + "'");
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("catalog: bad " + what + ": '" + s + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return static_cast<std::uint32_t>(v);
}

std::vector<std::pair<std::string, Parity>> free_generators(std::uint32_t p, std::uint32_t q) {
    std::vector<std::pair<std::string, Parity>> gens;
    for (std::uint32_t i = 0; i < p; ++i)
        gens.emplace_back("x" + std::to_string(i + 1), Parity::even);
    for (std::uint32_t i = 0; i < q; ++i)
        gens.emplace_back("y" + std::to_string(i + 1), Parity::odd);
    return gens;
}

}  // namespace

CatalogEntry resolve_catalog(const std::string& name, std::uint32_t max_degree) {
    CatalogEntry e;
    e.name = name;
    std::vector<std::string> parts = split(name, ':');
    const std::string& head = parts[0];

    if (head == "osp12" && parts.size() == 1) {
        QuadraticLeibniz q = osp12();
        e.leibniz = std::move(q.alg);
        e.form = std::move(q.form);
    } else if (head == "sl2" && parts.size() == 1) {
        QuadraticLeibniz q = sl2();
        e.leibniz = std::move(q.alg);
        e.form = std::move(q.form);
    } else if (head == "sl_mn" && parts.size() == 3) {
        QuadraticLeibniz q = sl_mn(parse_u32(parts[1], "m"), parse_u32(parts[2], "n"));
        e.leibniz = std::move(q.alg);
        e.form = std::move(q.form);
    } else if (head == "gl_mn" && parts.size() == 3) {
        e.leibniz = gl_leibniz(parse_u32(parts[1], "m"), parse_u32(parts[2], "n"),
                               trunc_poly(1));
    } else if (head == "abelian" && parts.size() == 2) {
        e.leibniz = abelian(parse_u32(parts[1], "k"));
    } else if (head == "trunc_poly" && parts.size() == 2) {
        e.dialgebra = trunc_poly(parse_u32(parts[1], "N"));
    } else if (head == "tensor" && parts.size() >= 2) {
        std::string rest = name.substr(head.size() + 1);
        std::vector<std::string> factors = split(rest, ',');
        if (factors.size() != 2)
            throw std::invalid_argument("catalog: tensor needs exactly two factors");
        CatalogEntry a = resolve_catalog(factors[0], max_degree);
        CatalogEntry b = resolve_catalog(factors[1], max_degree);
        if (!a.dialgebra || !b.dialgebra)
            throw std::invalid_argument("catalog: tensor factors must be dialgebras");
        e.dialgebra = tensor_dialgebra(*a.dialgebra, *b.dialgebra);
    } else if (head == "sl2xPoly" && parts.size() == 2) {
        e.leibniz = current_leibniz(sl2().alg, trunc_poly(parse_u32(parts[1], "N")));
    } else if (head == "ospxPoly" && parts.size() == 2) {
        e.leibniz = current_leibniz(osp12().alg, trunc_poly(parse_u32(parts[1], "N")));
    } else if (head == "free_leibniz" && parts.size() == 3) {
        TruncatedLeibniz t = free_leibniz_super(
            free_generators(parse_u32(parts[1], "even count"), parse_u32(parts[2], "odd count")),
            max_degree);
        e.leibniz = std::move(t.alg);
        e.degree = std::move(t.degree);
        e.max_degree = t.max_degree;
        e.truncation_report = std::move(t.identity_report);
    } else if (head == "free_dialgebra" && parts.size() == 3) {
        TruncatedDialgebra t = free_super_dialgebra(
            free_generators(parse_u32(parts[1], "even count"), parse_u32(parts[2], "odd count")),
            max_degree);
        e.dialgebra = std::move(t.alg);
        e.degree = std::move(t.degree);
        e.max_degree = t.max_degree;
        e.truncation_report = std::move(t.identity_report);
    } else {
        throw std::invalid_argument("catalog: unknown name '" + name + "'");
    }
    return e;
}

std::vector<std::string> catalog_names() {
    return {
        "osp12",           "sl2",
        "sl_mn:M:N",       "gl_mn:M:N",
        "abelian:K",       "trunc_poly:N",
        "tensor:D1,D2",    "sl2xPoly:N",
        "ospxPoly:N",      "free_leibniz:P:Q",
        "free_dialgebra:P:Q",
    };
}

}  // namespace lsa
