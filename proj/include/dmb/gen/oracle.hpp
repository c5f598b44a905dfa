#pragma once

#include "dmb/gen/random.hpp"
#include "dmb/homology.hpp"

#include <vector>

namespace dmb::gen {

/// Rank over ℚ by fraction-exact Gaussian elimination. Shares nothing with
/// the Smith normal form path, so the two can cross-check each other.
inline std::size_t rank_oracle(const IntMatrix& m)
{
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            Rational q = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= q * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Betti numbers of a chain complex computed with rank_oracle.
inline std::vector<std::size_t> betti_oracle(const ChainComplex& cc)
{
    std::vector<std::size_t> ranks;
    for (const auto& m : cc.boundaries) ranks.push_back(rank_oracle(m));
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < cc.dims(); ++k) {
        const std::size_t next = k + 1 < cc.dims() ? ranks[k + 1] : 0;
        out.push_back(cc.bases[k].size() - ranks[k] - next);
    }
    return out;
}

/// Random integer matrix of size up to max_size × max_size with small
/// entries; about a third are built as products so rank deficiency is common.
inline IntMatrix random_int_matrix(Rng& rng, std::size_t max_size = 8)
{
    const std::size_t rows = 1 + rng.below(max_size);
    const std::size_t cols = 1 + rng.below(max_size);
    auto fill = [&](std::size_t r, std::size_t c) {
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng.coin(0.6)) m(i, j) = static_cast<int>(rng.below(9)) - 4;
        return m;
    };
    if (rng.below(3) == 0) {
        const std::size_t inner = 1 + rng.below(std::min(rows, cols));
        return fill(rows, inner) * fill(inner, cols);
    }
    return fill(rows, cols);
}

}  // namespace dmb::gen
