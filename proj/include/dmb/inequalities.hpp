#pragma once

#include "dmb/homology.hpp"

#include <optional>
#include <vector>

namespace dmb {

/// Per-dimension counts of a function on a subcomplex L (computed on L as a
/// complex of its own). The tilde counts use strict noncriticality and
/// reduced collections.
struct CountProfile {
    std::vector<std::size_t> c, m, u, d;
    std::vector<std::size_t> m_tilde, u_tilde, d_tilde;

    std::size_t dims() const noexcept { return c.size(); }

    /// d_k with d_k = 0 outside the stored range.
    static std::size_t at(const std::vector<std::size_t>& v, std::size_t k) { return k < v.size() ? v[k] : 0; }

    /// c_k = m_k + u_k + d_k and u_k = d_{k+1}
    bool decomposition_holds() const
    {
        for (std::size_t k = 0; k < dims(); ++k)
            if (c[k] != m[k] + u[k] + d[k] || u[k] != at(d, k + 1)) return false;
        return true;
    }

    /// c_k = m̃_k + ũ_k + d̃_k and ũ_k = d̃_{k+1}
    bool tilde_decomposition_holds() const
    {
        for (std::size_t k = 0; k < dims(); ++k)
            if (c[k] != m_tilde[k] + u_tilde[k] + d_tilde[k] || u_tilde[k] != at(d_tilde, k + 1)) return false;
        return true;
    }
};

namespace detail {

inline CountProfile count_profile_whole(const Complex& K, const CellFunction& f)
{
    const auto dims = static_cast<std::size_t>(K.max_dim() + 1);
    CountProfile p;
    for (auto* v : {&p.c, &p.m, &p.u, &p.d, &p.m_tilde, &p.u_tilde, &p.d_tilde}) v->assign(dims, 0);

    const auto partition = collections(K, f);
    for (CellId s : K.cells()) {
        const auto k = static_cast<std::size_t>(K.dim(s));
        ++p.c[k];
        const std::size_t up = up_count(K, f, s);
        const std::size_t down = down_count(K, f, s);
        p.u[k] += up;
        p.d[k] += down;
        if (up == 0 && down == 0) ++p.m[k];

        const CellSet& C = partition.of(s).cells;
        if (up_count_outside(K, f, s, C) != 1 && down_count_outside(K, f, s, C) != 1) ++p.m_tilde[k];
        for (const auto& inc : K.cofacets(s))
            if (f(s) > f(inc.cell)) ++p.u_tilde[k];
        for (const auto& inc : K.facets(s))
            if (f(inc.cell) > f(s)) ++p.d_tilde[k];
    }
    return p;
}

}  // namespace detail

/// Counts over the whole complex.
inline CountProfile count_profile(const Complex& K, const CellFunction& f)
{
    require_domain(K, f);
    return detail::count_profile_whole(K, f);
}

/// Counts over a subcomplex L; collections are those of f restricted to L.
inline CountProfile count_profile(const Complex& K, const CellFunction& f, const CellSet& L)
{
    require_domain(K, f);
    auto r = restrict_to(K, L);
    auto p = detail::count_profile_whole(r.complex, f.pullback(r.to_parent));
    // Dimensions above L's top dimension still belong to K's range.
    const auto dims = static_cast<std::size_t>(K.max_dim() + 1);
    for (auto* v : {&p.c, &p.m, &p.u, &p.d, &p.m_tilde, &p.u_tilde, &p.d_tilde}) v->resize(dims, 0);
    return p;
}

inline std::int64_t euler_characteristic(const Complex& K)
{
    std::int64_t chi = 0;
    auto counts = K.cell_counts();
    for (std::size_t k = 0; k < counts.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(counts[k]);
    return chi;
}

/// lhs = P_K + (1+t)·residual, checked as exact polynomials.
struct IdentityReport {
    IntPolynomial lhs;
    IntPolynomial poincare;
    IntPolynomial residual;
    bool holds = false;
    bool nonnegative = false;

    bool ok() const noexcept { return holds && nonnegative; }
};

namespace detail {

inline IdentityReport finish_identity(IntPolynomial lhs, IntPolynomial p, IntPolynomial residual)
{
    IdentityReport out{std::move(lhs), std::move(p), std::move(residual), false, false};
    out.holds = out.lhs == out.poincare + one_plus_t() * out.residual;
    out.nonnegative = out.residual.nonnegative();
    return out;
}

inline IntPolynomial from_counts(const std::vector<std::size_t>& v)
{
    std::vector<IntPolynomial::Coefficient> coeffs;
    for (auto x : v) coeffs.push_back(static_cast<IntPolynomial::Coefficient>(x));
    return IntPolynomial(std::move(coeffs));
}

}  // namespace detail

/// Σ m_k t^k = P_t(K) + (1+t) r(t) with r(t) = Σ_{k≥1} (rank B_{k-1} − d_k) t^{k-1}.
inline IdentityReport morse_identity(const Complex& K, const CellFunction& f)
{
    require_morse(K, f);
    const auto counts = count_profile(K, f);
    const auto ranks = rank_profile(chain_complex(K));

    std::vector<IntPolynomial::Coefficient> r;
    for (std::size_t k = 1; k < counts.dims(); ++k)
        r.push_back(static_cast<IntPolynomial::Coefficient>(ranks.boundaries[k - 1]) -
                    static_cast<IntPolynomial::Coefficient>(counts.d[k]));
    return detail::finish_identity(detail::from_counts(counts.m), poincare(ranks), IntPolynomial(std::move(r)));
}

/// Homology of one reduced collection.
struct CollectionHomology {
    IntPolynomial poincare;
    RankProfile ranks;
};

/// Homology of (C^red, ∂^C) for every collection of the partition, in partition order.
inline std::vector<CollectionHomology> collection_homology(const Complex& K, const CellFunction& f,
                                                           const CollectionPartition& partition)
{
    std::vector<CollectionHomology> out;
    for (const auto& C : partition) {
        auto ranks = rank_profile(chain_complex_reduced(K, f, C));
        out.push_back({poincare(ranks), std::move(ranks)});
    }
    return out;
}

/// Σ_C P_t(C^red) = P_t(K) + (1+t) R(t) with
/// R(t) = Σ_{k≥1} (rank B_{k-1} − d̃_k − Σ_C rank B^C_{k-1}) t^{k-1}.
inline IdentityReport morse_bott_identity(const Complex& K, const CellFunction& f)
{
    require_morse_bott(K, f);
    const auto partition = reduced_collections(K, f);
    const auto per_collection = collection_homology(K, f, partition);
    const auto counts = count_profile(K, f);
    const auto ranks = rank_profile(chain_complex(K));

    IntPolynomial lhs;
    for (const auto& h : per_collection) lhs += h.poincare;

    std::vector<IntPolynomial::Coefficient> R;
    for (std::size_t k = 1; k < counts.dims(); ++k) {
        auto coeff = static_cast<IntPolynomial::Coefficient>(ranks.boundaries[k - 1]) -
                     static_cast<IntPolynomial::Coefficient>(counts.d_tilde[k]);
        for (const auto& h : per_collection) coeff -= static_cast<IntPolynomial::Coefficient>(h.ranks.boundaries[k - 1]);
        R.push_back(coeff);
    }
    return detail::finish_identity(std::move(lhs), poincare(ranks), IntPolynomial(std::move(R)));
}

struct ReductionReport {
    /// Σ_C P_t(C^red) = Σ m_k t^k
    bool poincare_sum_matches = false;
    /// d_k = d̃_k + Σ_C rank B^C_{k-1} for every k
    bool descent_counts_match = false;

    bool holds() const noexcept { return poincare_sum_matches && descent_counts_match; }
};

/// For a discrete Morse function, the two equalities that turn the
/// Morse–Bott identity into the Morse identity.
inline ReductionReport reduction_check(const Complex& K, const CellFunction& f)
{
    require_morse(K, f);
    const auto partition = reduced_collections(K, f);
    const auto per_collection = collection_homology(K, f, partition);
    const auto counts = count_profile(K, f);

    IntPolynomial sum;
    for (const auto& h : per_collection) sum += h.poincare;

    ReductionReport out;
    out.poincare_sum_matches = sum == detail::from_counts(counts.m);
    out.descent_counts_match = true;
    for (std::size_t k = 0; k < counts.dims(); ++k) {
        std::size_t rhs = counts.d_tilde[k];
        for (const auto& h : per_collection) rhs += h.ranks.boundaries_below(k);
        if (counts.d[k] != rhs) out.descent_counts_match = false;
    }
    return out;
}

struct CycleRestrictionResult {
    /// Some maximal-value support cell lies in a reduced collection.
    bool applicable = false;
    /// Every such restriction is a nonzero cycle of ∂^C.
    bool holds = false;
    /// The maximal-value support cell that was examined last.
    std::optional<CellId> alpha;
};

/// Restricts a nonzero k-cycle x of K (coefficients aligned with
/// chain_complex(K).bases[k]) to C^red for the collection of each
/// maximal-value support cell α in a reduced collection, and checks that
/// the restriction is a nonzero cycle of ∂^C.
inline CycleRestrictionResult lemmbpoly_check(const Complex& K, const CellFunction& f, std::size_t k, const IntChain& x)
{
    require_morse_bott(K, f);
    const auto cc = chain_complex(K);
    if (k >= cc.dims() || x.size() != cc.bases[k].size())
        throw Error(ErrorKind::NotACycle, "chain does not match the basis in degree " + std::to_string(k));
    if (std::all_of(x.begin(), x.end(), [](const BigInt& a) { return a == 0; }))
        throw Error(ErrorKind::NotACycle, "zero chain");
    auto bx = apply_boundary(cc, k, x);
    if (std::any_of(bx.begin(), bx.end(), [](const BigInt& a) { return a != 0; }))
        throw Error(ErrorKind::NotACycle, "chain has nonzero boundary");

    const auto& basis = cc.bases[k];
    std::optional<Rational> top;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (x[i] != 0 && (!top || f(basis[i]) > *top)) top = f(basis[i]);

    const auto partition = reduced_collections(K, f);
    CycleRestrictionResult out;
    out.holds = true;
    bool any = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (x[i] == 0 || f(basis[i]) != *top) continue;
        const CellId alpha = basis[i];
        out.alpha = alpha;
        const Collection& C = partition.of(alpha);
        if (!contains(C.reduced, alpha)) continue;
        any = true;

        const auto ccC = chain_complex_reduced(K, f, C);
        const auto& basisC = ccC.bases[k];
        IntChain xr(basisC.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto it = std::lower_bound(basisC.begin(), basisC.end(), basis[j]);
            if (it != basisC.end() && *it == basis[j]) xr[static_cast<std::size_t>(it - basisC.begin())] = x[j];
        }
        const bool nonzero = std::any_of(xr.begin(), xr.end(), [](const BigInt& a) { return a != 0; });
        const auto bxr = apply_boundary(ccC, k, xr);
        const bool cycle = std::all_of(bxr.begin(), bxr.end(), [](const BigInt& a) { return a == 0; });
        if (!(nonzero && cycle)) {
            out.holds = false;
            out.applicable = true;
            return out;
        }
    }
    out.applicable = any;
    if (!any) out.holds = false;
    return out;
}

}  // namespace dmb
