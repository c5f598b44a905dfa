#pragma once

#include "dmb/inequalities.hpp"

#include <map>
#include <string>
#include <vector>

namespace dmb::gen {

struct LemmaFailure {
    std::string lemma;
    std::string detail;
};

/// Outcome of an exhaustive lemma audit: how many instances of each
/// statement were examined and every instance that failed.
struct LemmaReport {
    std::map<std::string, std::size_t> checked;
    std::vector<LemmaFailure> failures;

    bool ok() const noexcept { return failures.empty(); }

    void fail(const std::string& lemma, std::string detail) { failures.push_back({lemma, std::move(detail)}); }

    void merge(const LemmaReport& other)
    {
        for (const auto& [k, v] : other.checked) checked[k] += v;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }

    /// Throws LemmaViolation with the first failure.
    void require_ok() const
    {
        if (!ok()) throw Error(ErrorKind::LemmaViolation, failures.front().lemma + ": " + failures.front().detail);
    }
};

/// Poset lemmas on regular/irregular faces, checked on every applicable triple:
///  - another_cell: ν reg≺ σ reg≺ τ ⇒ some σ̃ ≠ σ has ν ≺ σ̃ ≺ τ
///  - regface: ν reg< τ with gap ≥ 2 ⇒ (ν, τ) ≠ ∅
///  - bnleqa: ν < α reg≺ τ ⇒ some β ∈ (ν, τ) has β ≰ α
///  - unique_between_irregular: (ν, τ) = {α} ⇒ α irr< τ
inline LemmaReport structural_lemma_suite(const Complex& K)
{
    LemmaReport r;
    auto pair_name = [&](CellId a, CellId b) { return K.name(a) + " < " + K.name(b); };

    for (CellId tau : K.cells()) {
        for (const auto& s : K.facets(tau)) {
            if (!s.regular) continue;
            for (const auto& v : K.facets(s.cell)) {
                if (!v.regular) continue;
                ++r.checked["another_cell"];
                bool other = std::any_of(K.facets(tau).begin(), K.facets(tau).end(), [&](const Incidence& a) {
                    return a.cell != s.cell && K.is_facet(v.cell, a.cell);
                });
                if (!other) r.fail("another_cell", K.name(v.cell) + " < " + K.name(s.cell) + " < " + K.name(tau));
            }
        }

        for (CellId nu : K.faces(tau)) {
            const CellSet between = K.interval(nu, tau);
            if (K.dim(tau) - K.dim(nu) >= 2 && K.is_regular_face(nu, tau)) {
                ++r.checked["regface"];
                if (between.empty()) r.fail("regface", pair_name(nu, tau));
            }
            if (between.size() == 1) {
                ++r.checked["unique_between_irregular"];
                if (K.is_regular_face(between.front(), tau))
                    r.fail("unique_between_irregular", pair_name(nu, tau) + " via " + K.name(between.front()));
            }
            for (const auto& a : K.facets(tau)) {
                if (!a.regular || !K.is_face(nu, a.cell)) continue;
                ++r.checked["bnleqa"];
                bool escape = std::any_of(between.begin(), between.end(), [&](CellId b) {
                    return b != a.cell && !K.is_face(b, a.cell);
                });
                if (!escape) r.fail("bnleqa", pair_name(nu, tau) + " through " + K.name(a.cell));
            }
        }
    }
    return r;
}

/// Audits the Morse–Bott lemmas for f on K (f must be discrete Morse–Bott):
/// upward heredity in collections, the up/down trichotomy, strict descent
/// through a facet, the closure difference being a subcomplex whose level-f(C)
/// cells are upward noncritical, ∂^C∘∂^C = 0 with the per-collection
/// polynomial identity, and U + D ≤ 1 when f is also Morse.
inline LemmaReport function_lemma_suite(const Complex& K, const CellFunction& f)
{
    require_morse_bott(K, f);
    LemmaReport r;
    const auto partition = collections(K, f);

    if (is_morse(K, f)) {
        for (CellId s : K.cells()) {
            ++r.checked["u_plus_d"];
            if (up_count(K, f, s) + down_count(K, f, s) > 1) r.fail("u_plus_d", K.name(s));
        }
    }

    for (const auto& C : partition) {
        for (CellId s : C.cells) {
            const bool up = up_count_outside(K, f, s, C.cells) == 1;
            const bool down = down_count_outside(K, f, s, C.cells) == 1;
            ++r.checked["trichotomy"];
            if (up && down) r.fail("trichotomy", K.name(s));
            if (!up) continue;
            for (const auto& v : K.facets(s)) {
                if (!C.contains(v.cell)) continue;
                ++r.checked["upward_heredity"];
                if (up_count_outside(K, f, v.cell, C.cells) != 1)
                    r.fail("upward_heredity", K.name(v.cell) + " below " + K.name(s));
            }
        }
    }

    for (CellId tau : K.cells())
        for (CellId nu : K.faces(tau)) {
            if (!(f(nu) > f(tau))) continue;
            ++r.checked["strict_descent"];
            bool found = std::any_of(K.cofacets(nu).begin(), K.cofacets(nu).end(), [&](const Incidence& s) {
                return (s.cell == tau || K.is_face(s.cell, tau)) && f(nu) > f(s.cell);
            });
            if (!found) r.fail("strict_descent", K.name(nu) + " snc< " + K.name(tau));
        }

    for (const auto& C : partition) {
        Collection red;
        try {
            red = reduce(K, f, C);
        } catch (const Error& e) {
            r.fail("trichotomy", e.what());
            continue;
        }
        ++r.checked["closure_difference"];
        try {
            closure_difference(K, f, red);
        } catch (const Error& e) {
            r.fail("closure_difference", e.what());
        }

        ++r.checked["reduced_chain_complex"];
        try {
            const auto ranks = rank_profile(chain_complex_reduced(K, f, red));
            std::vector<IntPolynomial::Coefficient> cells, rc;
            for (std::size_t k = 0; k < ranks.chains.size(); ++k)
                cells.push_back(static_cast<IntPolynomial::Coefficient>(ranks.chains[k]));
            for (std::size_t k = 1; k < ranks.chains.size(); ++k)
                rc.push_back(static_cast<IntPolynomial::Coefficient>(ranks.boundaries[k - 1]));
            const IntPolynomial lhs(cells), r_c(rc);
            if (lhs != poincare(ranks) + one_plus_t() * r_c || !r_c.nonnegative())
                r.fail("reduced_chain_complex", "polynomial identity fails at value " + to_string(C.value));
        } catch (const Error& e) {
            r.fail("reduced_chain_complex", e.what());
        }
    }
    return r;
}

}  // namespace dmb::gen
