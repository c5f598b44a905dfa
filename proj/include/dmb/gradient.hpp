#pragma once

#include "dmb/bott.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dmb {

/// Partial matching σ → V(σ) of cells to cofacets.
class VectorField {
public:
    using Map = std::map<CellId, CellId>;

    VectorField() = default;
    explicit VectorField(Map arrows) : arrows_(std::move(arrows)) {}

    /// Adds σ → τ; a cell has at most one image.
    void add(CellId sigma, CellId tau)
    {
        if (!arrows_.emplace(sigma, tau).second)
            throw Error(ErrorKind::InvalidField, "cell index " + std::to_string(index(sigma)) + " is already matched");
    }

    std::optional<CellId> operator()(CellId sigma) const
    {
        auto it = arrows_.find(sigma);
        if (it == arrows_.end()) return std::nullopt;
        return it->second;
    }

    bool is_tail(CellId c) const { return arrows_.count(c) != 0; }

    std::size_t size() const noexcept { return arrows_.size(); }
    bool empty() const noexcept { return arrows_.empty(); }
    const Map& arrows() const noexcept { return arrows_; }

    friend bool operator==(const VectorField&, const VectorField&) = default;

private:
    Map arrows_;
};

/// Numbering follows the three conditions of a combinatorial vector field:
/// 1 = image cells are unmatched, 2 = σ reg≺ V(σ), 3 = injectivity.
struct FieldViolation {
    int condition;
    CellSet cells;
};

struct FieldVerdict {
    std::vector<FieldViolation> violations;

    bool valid() const noexcept { return violations.empty(); }
};

inline FieldVerdict validate_vector_field(const Complex& K, const VectorField& V)
{
    FieldVerdict verdict;
    std::map<CellId, CellSet> preimages;
    for (auto [s, t] : V.arrows()) {
        if (!K.valid(s) || !K.valid(t)) throw Error(ErrorKind::UnknownCell, "vector field references an unknown cell");
        if (V.is_tail(t)) verdict.violations.push_back({1, {s, t}});
        if (!K.is_facet(s, t) || !K.is_regular_face(s, t)) verdict.violations.push_back({2, {s, t}});
        preimages[t].push_back(s);
    }
    for (auto& [t, tails] : preimages)
        if (tails.size() > 1) {
            tails.push_back(t);
            verdict.violations.push_back({3, tails});
        }
    return verdict;
}

inline void require_valid_field(const Complex& K, const VectorField& V)
{
    auto verdict = validate_vector_field(K, V);
    if (!verdict.valid()) {
        const auto& v = verdict.violations.front();
        std::string cells;
        for (CellId c : v.cells) cells += " " + K.name(c);
        throw Error(ErrorKind::InvalidField, "condition (" + std::to_string(v.condition) + ") fails at" + cells);
    }
}

/// Successors of σ in the V-path digraph: facets of V(σ) other than σ.
inline CellSet vpath_successors(const Complex& K, const VectorField& V, CellId sigma)
{
    CellSet out;
    auto tau = V(sigma);
    if (!tau) return out;
    for (const auto& inc : K.facets(*tau))
        if (inc.cell != sigma) out.push_back(inc.cell);
    return out;
}

/// A closed orbit σ0 → τ0 ≻ σ1 → … ≻ σ0 as the alternating cell sequence,
/// first cell repeated at the end; nullopt when V has none.
inline std::optional<std::vector<CellId>> find_closed_orbit(const Complex& K, const VectorField& V)
{
    enum class Mark : unsigned char { White, Grey, Black };
    std::vector<Mark> mark(K.size(), Mark::White);
    std::vector<CellId> stack;

    // Iterative DFS over matched cells; unmatched cells end every V-path.
    for (auto [root, unused] : V.arrows()) {
        if (mark[index(root)] != Mark::White) continue;
        std::vector<std::pair<CellId, std::size_t>> frames{{root, 0}};
        mark[index(root)] = Mark::Grey;
        stack = {root};
        while (!frames.empty()) {
            auto& [s, next] = frames.back();
            auto succ = vpath_successors(K, V, s);
            if (next < succ.size()) {
                CellId n = succ[next++];
                if (!V.is_tail(n)) continue;
                if (mark[index(n)] == Mark::Grey) {
                    auto start = std::find(stack.begin(), stack.end(), n);
                    std::vector<CellId> orbit;
                    for (auto it = start; it != stack.end(); ++it) {
                        orbit.push_back(*it);
                        orbit.push_back(*V(*it));
                    }
                    orbit.push_back(n);
                    return orbit;
                }
                if (mark[index(n)] == Mark::White) {
                    mark[index(n)] = Mark::Grey;
                    stack.push_back(n);
                    frames.emplace_back(n, 0);
                }
            } else {
                mark[index(s)] = Mark::Black;
                stack.pop_back();
                frames.pop_back();
            }
        }
    }
    return std::nullopt;
}

inline bool has_closed_orbit(const Complex& K, const VectorField& V)
{
    return find_closed_orbit(K, V).has_value();
}

/// On a finite complex, V-path lengths are uniformly bounded exactly when
/// the V-path digraph is acyclic.
inline bool is_positively_bounded(const Complex& K, const VectorField& V)
{
    return !has_closed_orbit(K, V);
}

/// d(σ): the largest number of arrows in a V-path starting at σ (0 for
/// unmatched cells). Throws ClosedOrbitPresent when V has a closed orbit.
inline std::vector<std::size_t> longest_vpaths(const Complex& K, const VectorField& V)
{
    if (auto orbit = find_closed_orbit(K, V))
        throw Error(ErrorKind::ClosedOrbitPresent, "closed orbit through " + K.name(orbit->front()));
    constexpr auto unknown = static_cast<std::size_t>(-1);
    std::vector<std::size_t> d(K.size(), unknown);
    for (CellId c : K.cells())
        if (!V.is_tail(c)) d[index(c)] = 0;

    // Memoized DFS; acyclicity was established above.
    for (auto [root, unused] : V.arrows()) {
        if (d[index(root)] != unknown) continue;
        std::vector<CellId> frames{root};
        while (!frames.empty()) {
            CellId s = frames.back();
            if (d[index(s)] != unknown) {
                frames.pop_back();
                continue;
            }
            bool ready = true;
            std::size_t best = 0;
            for (CellId n : vpath_successors(K, V, s)) {
                if (d[index(n)] == unknown) {
                    frames.push_back(n);
                    ready = false;
                } else {
                    best = std::max(best, d[index(n)]);
                }
            }
            if (ready) {
                d[index(s)] = best + 1;
                frames.pop_back();
            }
        }
    }
    return d;
}

/// −∇f: σ ↦ its noncritical cofacet, for a discrete Morse function f.
inline VectorField grad_morse(const Complex& K, const CellFunction& f)
{
    require_morse(K, f);
    VectorField V;
    for (CellId s : K.cells()) {
        auto up = nc_cofacets(K, f, s);
        if (up.size() > 1) throw Error(ErrorKind::NonUniqueCofacet, K.name(s) + " has several noncritical cofacets");
        if (up.size() == 1) V.add(s, up.front());
    }
    return V;
}

/// −∇_s f: σ ↦ its strictly noncritical cofacet, for a discrete Morse–Bott function f.
inline VectorField grad_strict(const Complex& K, const CellFunction& f)
{
    require_morse_bott(K, f);
    VectorField V;
    for (CellId s : K.cells()) {
        CellSet strict;
        for (const auto& inc : K.cofacets(s))
            if (f(s) > f(inc.cell)) strict.push_back(inc.cell);
        if (strict.size() > 1)
            throw Error(ErrorKind::NonUniqueCofacet, K.name(s) + " has several strictly noncritical cofacets");
        if (strict.size() == 1) V.add(s, strict.front());
    }
    return V;
}

/// Builds a discrete Morse function g with −∇g = V from a valid field
/// without closed orbits.
///
/// Skeleton by skeleton: every p-cell starts at the integer p. At stage p
/// each matched (p-1)-cell σ is raised by Σ_{k=1}^{d(σ)} 2^{-k} and its
/// partner V(σ) takes the raised value, so the matched pair is noncritical
/// while every other facet pair strictly increases.
inline CellFunction synthesize_morse(const Complex& K, const VectorField& V)
{
    require_valid_field(K, V);
    const auto d = longest_vpaths(K, V);

    std::vector<Rational> g(K.size());
    for (CellId c : K.cells()) g[index(c)] = Rational(K.dim(c));

    for (int p = 1; p <= K.max_dim(); ++p) {
        for (CellId s : K.cells_of_dim(p - 1)) {
            auto tau = V(s);
            if (!tau) continue;
            Rational raise = 0;
            Rational step(1, 2);
            for (std::size_t k = 1; k <= d[index(s)]; ++k, step /= 2) raise += step;
            g[index(s)] += raise;
            g[index(*tau)] = g[index(s)];
        }
    }
    return CellFunction(std::move(g));
}

/// g with −∇g = −∇_s f, obtained by synthesizing from the strict gradient.
inline CellFunction lemsgvf_bridge(const Complex& K, const CellFunction& f)
{
    const VectorField V = grad_strict(K, f);
    CellFunction g = synthesize_morse(K, V);
    if (grad_morse(K, g) != V)
        throw Error(ErrorKind::InvalidField, "synthesized function does not reproduce the strict gradient");
    return g;
}

}  // namespace dmb
