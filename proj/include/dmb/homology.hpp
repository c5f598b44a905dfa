#pragma once

#include "dmb/bott.hpp"
#include "dmb/polynomial.hpp"
#include "dmb/rational.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace dmb {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
    }

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
    {
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

struct SmithForm {
    std::size_t rank = 0;
    /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
    std::vector<BigInt> invariant_factors;

    /// Invariant factors greater than one.
    std::vector<BigInt> torsion() const
    {
        std::vector<BigInt> out;
        for (const auto& d : invariant_factors)
            if (d > 1) out.push_back(d);
        return out;
    }
};

/// Smith normal form by unimodular row and column operations over ℤ.
inline SmithForm smith_form(IntMatrix a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    SmithForm out;
    using boost::multiprecision::abs;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            bool found = false;
            std::size_t pr = t, pc = t;
            BigInt best;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a(r, c) != 0 && (!found || abs(a(r, c)) < best)) {
                        found = true;
                        best = abs(a(r, c));
                        pr = r;
                        pc = c;
                    }
            if (!found) {
                for (auto& d : out.invariant_factors) d = abs(d);
                return out;
            }
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a(r, t) == 0) continue;
                BigInt q = a(r, t) / a(t, t);
                for (std::size_t c = t; c < cols; ++c) a(r, c) -= q * a(t, c);
                if (a(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a(t, c) == 0) continue;
                BigInt q = a(t, c) / a(t, t);
                for (std::size_t r = t; r < rows; ++r) a(r, c) -= q * a(r, t);
                if (a(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        for (std::size_t k = t; k < cols; ++k) a(t, k) += a(r, k);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        out.invariant_factors.push_back(a(t, t));
        ++out.rank;
    }
    for (auto& d : out.invariant_factors) d = abs(d);
    return out;
}

/// Rank and invariant factors of an integer matrix.
inline SmithForm smith_ranks(const IntMatrix& m)
{
    return smith_form(m);
}

/// Free ℤ-chain complex on a graded cell basis. boundaries[k] maps C_k to
/// C_{k-1}: rows index bases[k-1], columns index bases[k]; boundaries[0]
/// has no rows (C_{-1} = 0).
struct ChainComplex {
    std::vector<CellSet> bases;
    std::vector<IntMatrix> boundaries;

    std::size_t dims() const noexcept { return bases.size(); }
    std::size_t rank(std::size_t k) const { return k < bases.size() ? bases[k].size() : 0; }
};

namespace detail {

inline ChainComplex chain_on_cells(const Complex& K, const CellSet& cells)
{
    ChainComplex cc;
    const auto dims = static_cast<std::size_t>(K.max_dim() + 1);
    cc.bases.assign(dims, {});
    for (CellId c : cells) cc.bases[static_cast<std::size_t>(K.dim(c))].push_back(c);
    for (std::size_t k = 0; k < dims; ++k) {
        const std::size_t lower = k == 0 ? 0 : cc.bases[k - 1].size();
        IntMatrix m(lower, cc.bases[k].size());
        if (k > 0) {
            for (std::size_t j = 0; j < cc.bases[k].size(); ++j)
                for (const auto& inc : K.facets(cc.bases[k][j])) {
                    const auto& below = cc.bases[k - 1];
                    auto it = std::lower_bound(below.begin(), below.end(), inc.cell);
                    if (it != below.end() && *it == inc.cell)
                        m(static_cast<std::size_t>(it - below.begin()), j) = inc.incidence;
                }
        }
        cc.boundaries.push_back(std::move(m));
    }
    return cc;
}

inline void require_square_zero(const ChainComplex& cc)
{
    for (std::size_t k = 2; k < cc.dims(); ++k)
        if (!(cc.boundaries[k - 1] * cc.boundaries[k]).is_zero())
            throw Error(ErrorKind::BoundarySquareNonzero, "composition of boundaries in degree " + std::to_string(k) +
                                                              " is nonzero");
}

}  // namespace detail

/// Cellular chain complex of the whole complex, basis ordered by (dim, id).
inline ChainComplex chain_complex(const Complex& K)
{
    auto cc = detail::chain_on_cells(K, K.cells());
    detail::require_square_zero(cc);
    return cc;
}

/// Chain complex of a subcomplex S.
inline ChainComplex chain_complex(const Complex& K, CellSet S)
{
    normalize(S);
    if (!K.is_subcomplex(S)) throw Error(ErrorKind::NotASubcomplex, "cell set is not closed under faces");
    auto cc = detail::chain_on_cells(K, S);
    detail::require_square_zero(cc);
    return cc;
}

/// The chain complex (C_*(C^red), ∂^C): only facets lying in C^red survive.
inline ChainComplex chain_complex_reduced(const Complex& K, const CellFunction& f, const Collection& C)
{
    const Collection red = C.is_reduced ? C : reduce(K, f, C);
    auto cc = detail::chain_on_cells(K, red.reduced);
    detail::require_square_zero(cc);
    return cc;
}

struct RankProfile {
    std::vector<std::size_t> chains;      ///< rank C_k
    std::vector<std::size_t> cycles;      ///< rank Z_k
    std::vector<std::size_t> boundaries;  ///< rank B_k = rank ∂_{k+1}
    std::vector<std::size_t> betti;       ///< b_k = rank Z_k − rank B_k
    std::vector<std::vector<BigInt>> torsion;

    /// rank B_{k-1}, with B_{-1} = 0.
    std::size_t boundaries_below(std::size_t k) const { return k == 0 ? 0 : boundaries[k - 1]; }
};

inline RankProfile rank_profile(const ChainComplex& cc)
{
    const std::size_t n = cc.dims();
    std::vector<SmithForm> snf;
    snf.reserve(n);
    for (const auto& m : cc.boundaries) snf.push_back(smith_form(m));

    RankProfile p;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t rank_dk = snf[k].rank;
        const std::size_t rank_dk1 = k + 1 < n ? snf[k + 1].rank : 0;
        p.chains.push_back(cc.bases[k].size());
        p.cycles.push_back(cc.bases[k].size() - rank_dk);
        p.boundaries.push_back(rank_dk1);
        p.betti.push_back(p.cycles.back() - rank_dk1);
        p.torsion.push_back(k + 1 < n ? snf[k + 1].torsion() : std::vector<BigInt>{});
    }
    return p;
}

inline IntPolynomial poincare(const RankProfile& p)
{
    std::vector<IntPolynomial::Coefficient> coeffs;
    for (auto b : p.betti) coeffs.push_back(static_cast<IntPolynomial::Coefficient>(b));
    return IntPolynomial(std::move(coeffs));
}

inline IntPolynomial poincare(const ChainComplex& cc)
{
    return poincare(rank_profile(cc));
}

/// Integer chain on a basis: coefficient vector aligned with bases[k].
using IntChain = std::vector<BigInt>;

inline IntChain apply_boundary(const ChainComplex& cc, std::size_t k, const IntChain& x)
{
    const IntMatrix& m = cc.boundaries.at(k);
    IntChain out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * x.at(j);
    return out;
}

/// A basis of ker ∂_k over ℚ, each vector scaled to primitive integer form.
inline std::vector<IntChain> cycle_basis(const ChainComplex& cc, std::size_t k)
{
    const IntMatrix& m = cc.boundaries.at(k);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(m(i, j));

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational q = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<IntChain> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
        BigInt lcm = 1;
        for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
        IntChain w(cols);
        BigInt g = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            w[j] = boost::multiprecision::numerator(Rational(v[j] * lcm));
            g = boost::multiprecision::gcd(g, w[j]);
        }
        if (g > 1)
            for (auto& x : w) x /= g;
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace dmb
