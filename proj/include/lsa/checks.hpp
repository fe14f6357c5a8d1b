// Identity checkers: every defining axiom is verified exactly, over all basis
// tuples, and failures are reported with indices and the nonzero residual.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/linalg.hpp"

namespace lsa {

/// One failed identity instance: which rule, at which basis indices, and what
/// nonzero residual (LHS - RHS) was left over.
struct Violation {
    std::string rule;
    std::vector<std::uint32_t> idx;
    SparseVec residual;
};

/// Outcome of an exhaustive identity check. `checked`/`skipped` count tuples;
/// recorded violations are capped but `failed` counts all of them.
struct CheckReport {
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::uint64_t failed = 0;
    std::vector<Violation> violations;

    static constexpr std::size_t kMaxRecorded = 25;

    bool ok() const { return failed == 0; }
    void record(std::string rule, std::vector<std::uint32_t> idx, SparseVec residual) {
        ++failed;
        if (violations.size() < kMaxRecorded)
            violations.push_back({std::move(rule), std::move(idx), std::move(residual)});
    }
    void record(Violation v) {
        ++failed;
        if (violations.size() < kMaxRecorded) violations.push_back(std::move(v));
    }

    /// One-line digest: counts plus the first recorded violation, for error messages.
    std::string summary() const {
        std::string s = "checked " + std::to_string(checked) + ", skipped " +
                        std::to_string(skipped) + ", failed " + std::to_string(failed);
        if (!violations.empty()) {
            s += "; first: " + violations.front().rule + " at (";
            for (std::size_t i = 0; i < violations.front().idx.size(); ++i)
                s += (i ? "," : "") + std::to_string(violations.front().idx[i]);
            s += ")";
        }
        return s;
    }
    void merge(const CheckReport& o) {
        checked += o.checked;
        skipped += o.skipped;
        failed += o.failed;
        for (const auto& v : o.violations)
            if (violations.size() < kMaxRecorded) violations.push_back(v);
    }
};

/// Optional tuple filter: return false to skip (and count) a basis triple.
using TripleFilter = std::function<bool(std::uint32_t, std::uint32_t, std::uint32_t)>;

/// The five dialgebra axioms, plus bar-unit laws when a unit is present.
CheckReport check_dialgebra(const SuperDialgebra& d, const TripleFilter& filter = {});

/// a -| b == b |- a for all pairs.
CheckReport check_commutative(const SuperDialgebra& d);

/// Products/brackets land in the correct parity component.
CheckReport check_grading(const SuperDialgebra& d);
CheckReport check_grading(const LeibnizSuperalgebra& l);
CheckReport check_grading(const LeibnizModule& m);

/// Left Leibniz identity [[a,b],c] = [a,[b,c]] - (-1)^{|a||b|}[b,[a,c]].
CheckReport check_leibniz(const LeibnizSuperalgebra& l, const TripleFilter& filter = {});

/// Right Leibniz identity [a,[b,c]] = [[a,b],c] - (-1)^{|b||c|}[[a,c],b].
CheckReport check_right_leibniz(const RightLeibnizAlgebra& l, const TripleFilter& filter = {});

/// Super antisymmetry [a,b] + (-1)^{|a||b|}[b,a] = 0 (Lie superalgebra test).
CheckReport check_lie_super(const LeibnizSuperalgebra& l);

/// The three two-sided module axioms (algebra/algebra/module in each slot order).
CheckReport check_module(const LeibnizModule& m);

/// Evenness, supersymmetry (x,y) = (-1)^{|x||y|}(y,x), and invariance ([x,y],z) = (x,[y,z]).
CheckReport check_invariant_form(const LeibnizSuperalgebra& l, const BilinearForm& form);

/// The dialgebra bimodule axioms with the module element in each slot of the five laws.
CheckReport check_dibimodule(const SuperDialgebra& d, const DiBimodule& m);

/// Span of all brackets [e_i, e_j] as a subspace of the algebra.
Subspace derived_subalgebra(const LeibnizSuperalgebra& l);

/// {z : [z,x] = 0 = [x,z] for all x}.
Subspace center(const LeibnizSuperalgebra& l);

/// dim [l, l] == dim l.
bool is_perfect(const LeibnizSuperalgebra& l);

}  // namespace lsa
