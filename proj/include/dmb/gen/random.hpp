#pragma once

#include "dmb/gradient.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace dmb::gen {

struct GenConfig {
    std::uint64_t seed = 0;
    int max_vertices = 6;
    int max_dim = 2;
    /// Probability of accepting each candidate top simplex.
    double edge_density = 0.5;
    std::size_t max_cells = 30;
    /// Only top-dimensional maximal simplices when true.
    bool pure = true;
    /// Probability of trying each candidate arrow in a random matching.
    double match_rate = 0.85;
    /// Value merges attempted per Morse–Bott sample.
    int merge_attempts = 12;
    /// Morse–Bott generation keeps retrying until some collection breaks the Morse structure.
    bool require_non_morse = false;
    int retries = 64;
};

/// Portable helpers over mt19937_64 so a seed reproduces the same output everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }

    bool coin(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Independent stream for a given purpose derived from the config seed.
inline Rng stream(const GenConfig& cfg, std::uint64_t tag)
{
    std::uint64_t z = cfg.seed + 0x9E3779B97F4A7C15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Rng(z ^ (z >> 31));
}

namespace detail {

inline std::string vertex_label(std::size_t i, std::size_t n)
{
    if (n <= 26) return std::string(1, static_cast<char>('a' + i));
    return "v" + std::to_string(i);
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Number of faces of s not yet in the closure.
inline std::size_t new_faces(const std::set<std::vector<int>>& closure, const std::vector<int>& s)
{
    std::size_t count = 0;
    const std::size_t m = s.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) sub.push_back(s[i]);
        if (!closure.count(sub)) ++count;
    }
    return count;
}

inline void add_faces(std::set<std::vector<int>>& closure, const std::vector<int>& s)
{
    const std::size_t m = s.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) sub.push_back(s[i]);
        closure.insert(std::move(sub));
    }
}

}  // namespace detail

/// Random simplicial complex with at most cfg.max_cells cells.
inline Complex random_simplicial(const GenConfig& cfg)
{
    Rng rng = stream(cfg, 0);
    const int max_dim = std::max(0, cfg.max_dim);
    const int top = rng.coin(0.75) ? max_dim : static_cast<int>(rng.below(static_cast<std::size_t>(max_dim) + 1));
    const int min_vertices = top + 1;
    const int n = min_vertices + static_cast<int>(rng.below(static_cast<std::size_t>(std::max(1, cfg.max_vertices - top))));

    std::set<std::vector<int>> closure;
    std::vector<std::vector<int>> chosen;
    auto candidates = detail::subsets_of_size(n, top + 1);
    rng.shuffle(candidates);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i > 0 && !rng.coin(cfg.edge_density)) continue;
        if (i > 0 && closure.size() + detail::new_faces(closure, candidates[i]) > cfg.max_cells) continue;
        detail::add_faces(closure, candidates[i]);
        chosen.push_back(candidates[i]);
    }
    if (!cfg.pure) {
        // Sprinkle lower-dimensional maximal simplices, isolated vertices included.
        for (int k = top - 1; k >= 0; --k) {
            auto lower = detail::subsets_of_size(n, k + 1);
            rng.shuffle(lower);
            for (const auto& s : lower) {
                if (closure.count(s) || !rng.coin(0.3)) continue;
                if (closure.size() + detail::new_faces(closure, s) > cfg.max_cells) continue;
                detail::add_faces(closure, s);
                chosen.push_back(s);
            }
        }
    }

    std::vector<std::vector<std::string>> facets;
    for (const auto& s : chosen) {
        std::vector<std::string> labels;
        for (int v : s) labels.push_back(detail::vertex_label(static_cast<std::size_t>(v), static_cast<std::size_t>(n)));
        facets.push_back(std::move(labels));
    }
    return from_simplicial(facets);
}

/// Random combinatorial vector field without closed orbits, grown arrow by
/// arrow in random order and rejecting any arrow that closes an orbit.
inline VectorField random_acyclic_matching(const Complex& K, const GenConfig& cfg)
{
    Rng rng = stream(cfg, 1);
    std::vector<std::pair<CellId, CellId>> pairs;
    for (CellId t : K.cells())
        for (const auto& inc : K.facets(t))
            if (inc.regular) pairs.emplace_back(inc.cell, t);
    rng.shuffle(pairs);

    std::vector<bool> used(K.size(), false);
    VectorField::Map arrows;
    for (auto [s, t] : pairs) {
        if (used[index(s)] || used[index(t)] || !rng.coin(cfg.match_rate)) continue;
        arrows.emplace(s, t);
        if (has_closed_orbit(K, VectorField(arrows))) {
            arrows.erase(s);
            continue;
        }
        used[index(s)] = used[index(t)] = true;
    }
    return VectorField(std::move(arrows));
}

/// Discrete Morse function synthesized from a random acyclic matching.
inline CellFunction random_morse(const Complex& K, const GenConfig& cfg)
{
    return synthesize_morse(K, random_acyclic_matching(K, cfg));
}

/// Discrete Morse–Bott function obtained from a random Morse function by
/// merging values (a cell onto a neighbour's value, or two whole levels) and
/// keeping each merge only if the Morse–Bott conditions still hold.
inline CellFunction random_morse_bott(const Complex& K, const GenConfig& cfg)
{
    for (int attempt = 0; attempt < std::max(1, cfg.retries); ++attempt) {
        GenConfig sub = cfg;
        sub.seed = cfg.seed + static_cast<std::uint64_t>(attempt) * 0x100000001B3ULL;
        Rng rng = stream(sub, 2);
        std::vector<Rational> values = random_morse(K, sub).values();

        for (int m = 0; m < cfg.merge_attempts && !K.empty(); ++m) {
            CellId s = cell_id(rng.below(K.size()));
            std::vector<CellId> neighbours;
            for (const auto& inc : K.facets(s)) neighbours.push_back(inc.cell);
            for (const auto& inc : K.cofacets(s)) neighbours.push_back(inc.cell);
            if (neighbours.empty()) continue;
            CellId t = neighbours[rng.below(neighbours.size())];

            std::vector<Rational> trial = values;
            if (rng.coin(0.5)) {
                trial[index(s)] = values[index(t)];
            } else {
                const Rational from = values[index(s)];
                for (auto& v : trial)
                    if (v == from) v = values[index(t)];
            }
            if (is_morse_bott(K, CellFunction(trial))) values = std::move(trial);
        }
        CellFunction f(std::move(values));
        if (!cfg.require_non_morse || !is_morse(K, f)) return f;
    }
    throw Error(ErrorKind::GenerationExhausted,
                "no non-Morse Morse–Bott function after " + std::to_string(cfg.retries) + " attempts");
}

}  // namespace dmb::gen
