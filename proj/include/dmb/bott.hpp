#pragma once

#include "dmb/morse.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>
#include <vector>

namespace dmb {

/// A maximal r-path-connected family of cells of one level set, plus its
/// reduction once reduce() has classified the cells.
struct Collection {
    Rational value;
    CellSet cells;
    CellSet reduced;
    CellSet removed_up;
    CellSet removed_down;
    bool is_reduced = false;

    std::size_t size() const noexcept { return cells.size(); }
    bool contains(CellId c) const { return dmb::contains(cells, c); }
};

/// The partition K = ⊔ C_f together with the owning collection of each cell.
class CollectionPartition {
public:
    CollectionPartition() = default;
    CollectionPartition(std::vector<Collection> collections, std::vector<std::size_t> owner)
        : collections_(std::move(collections)), owner_(std::move(owner))
    {
    }

    std::size_t size() const noexcept { return collections_.size(); }
    const std::vector<Collection>& collections() const noexcept { return collections_; }
    std::vector<Collection>& collections() noexcept { return collections_; }

    auto begin() const noexcept { return collections_.begin(); }
    auto end() const noexcept { return collections_.end(); }
    const Collection& operator[](std::size_t i) const { return collections_.at(i); }

    /// Index of C_f(σ).
    std::size_t index_of(CellId c) const { return owner_.at(index(c)); }
    const Collection& of(CellId c) const { return collections_[index_of(c)]; }

private:
    std::vector<Collection> collections_;
    std::vector<std::size_t> owner_;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Connected components of the level sets under the facet relation.
/// Collections are ordered by value, then by their smallest cell.
inline CollectionPartition collections(const Complex& K, const CellFunction& f)
{
    require_domain(K, f);
    detail::UnionFind uf(K.size());
    for (CellId t : K.cells())
        for (const auto& inc : K.facets(t))
            if (f(inc.cell) == f(t)) uf.unite(index(inc.cell), index(t));

    std::vector<std::size_t> root_slot(K.size(), static_cast<std::size_t>(-1));
    std::vector<Collection> out;
    for (CellId c : K.cells()) {
        std::size_t root = uf.find(index(c));
        if (root_slot[root] == static_cast<std::size_t>(-1)) {
            root_slot[root] = out.size();
            out.push_back(Collection{f(c), {}, {}, {}, {}, false});
        }
        out[root_slot[root]].cells.push_back(c);
    }
    std::stable_sort(out.begin(), out.end(), [](const Collection& a, const Collection& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.cells.front() < b.cells.front();
    });
    std::vector<std::size_t> owner(K.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        for (CellId c : out[i].cells) owner[index(c)] = i;
    return CollectionPartition(std::move(out), std::move(owner));
}

enum class BottCondition { MB1, MB2, MB3, MB4 };

constexpr std::string_view to_string(BottCondition c) noexcept
{
    switch (c) {
    case BottCondition::MB1: return "MB1";
    case BottCondition::MB2: return "MB2";
    case BottCondition::MB3: return "MB3";
    case BottCondition::MB4: return "MB4";
    }
    return "?";
}

struct BottViolation {
    CellId cell;
    BottCondition condition;
    /// U^C(σ) for MB2, D^C(σ) for MB4; zero for MB1/MB3.
    std::size_t count = 0;
    CellSet witnesses;
};

struct MorseBottVerdict {
    std::vector<BottViolation> violations;

    bool is_morse_bott() const noexcept { return violations.empty(); }
};

/// Checks (MB1)-(MB4) relative to the actual collection partition of f.
/// MB1/MB3 range over the whole irregular relation irr<, any dimension gap.
inline MorseBottVerdict check_morse_bott(const Complex& K, const CellFunction& f)
{
    require_domain(K, f);
    const auto partition = collections(K, f);
    MorseBottVerdict verdict;
    for (CellId s : K.cells()) {
        const CellSet& C = partition.of(s).cells;
        for (CellId t : K.irregular_cofaces(s))
            if (f(s) >= f(t)) verdict.violations.push_back({s, BottCondition::MB1, 0, {t}});
        if (auto up = nc_cofacets_outside(K, f, s, C); up.size() > 1)
            verdict.violations.push_back({s, BottCondition::MB2, up.size(), std::move(up)});
        for (CellId v : K.irregular_faces(s))
            if (f(v) >= f(s)) verdict.violations.push_back({s, BottCondition::MB3, 0, {v}});
        if (auto down = nc_facets_outside(K, f, s, C); down.size() > 1)
            verdict.violations.push_back({s, BottCondition::MB4, down.size(), std::move(down)});
    }
    return verdict;
}

inline bool is_morse_bott(const Complex& K, const CellFunction& f)
{
    return check_morse_bott(K, f).is_morse_bott();
}

inline void require_morse_bott(const Complex& K, const CellFunction& f)
{
    auto verdict = check_morse_bott(K, f);
    if (!verdict.is_morse_bott()) {
        const auto& v = verdict.violations.front();
        throw Error(ErrorKind::NotMorseBott, std::string(to_string(v.condition)) + " fails at " + K.name(v.cell));
    }
}

/// Splits C into upward noncritical (U^C = 1), downward noncritical
/// (D^C = 1) and the reduced remainder C^red.
inline Collection reduce(const Complex& K, const CellFunction& f, Collection C)
{
    C.reduced.clear();
    C.removed_up.clear();
    C.removed_down.clear();
    for (CellId s : C.cells) {
        bool up = up_count_outside(K, f, s, C.cells) == 1;
        bool down = down_count_outside(K, f, s, C.cells) == 1;
        if (up && down)
            throw Error(ErrorKind::TrichotomyViolation, K.name(s) + " is both upward and downward noncritical");
        if (up)
            C.removed_up.push_back(s);
        else if (down)
            C.removed_down.push_back(s);
        else
            C.reduced.push_back(s);
    }
    C.is_reduced = true;
    return C;
}

/// collections() followed by reduce() on every collection.
inline CollectionPartition reduced_collections(const Complex& K, const CellFunction& f)
{
    auto partition = collections(K, f);
    for (auto& C : partition.collections()) C = reduce(K, f, std::move(C));
    return partition;
}

/// Both sides of the Morse ⇔ Morse–Bott structure equivalence.
struct MorseBottEquivalence {
    bool is_morse = false;
    /// MB holds and every collection is a singleton or a reduced pair.
    bool is_structured_morse_bott = false;

    bool agrees() const noexcept { return is_morse == is_structured_morse_bott; }
};

inline MorseBottEquivalence check_morse_iff_bott(const Complex& K, const CellFunction& f)
{
    MorseBottEquivalence out;
    out.is_morse = is_morse(K, f);
    if (!is_morse_bott(K, f)) return out;
    const auto partition = reduced_collections(K, f);
    out.is_structured_morse_bott = std::all_of(partition.begin(), partition.end(), [](const Collection& C) {
        return C.size() == 1 || (C.size() == 2 && C.reduced == C.cells);
    });
    return out;
}

/// The closure of C^red minus C^red. Throws SubcomplexViolation if the
/// difference is not closed under faces, and LemmaViolation if one of its
/// cells at level f(C) is not upward noncritical in its own collection.
inline CellSet closure_difference(const Complex& K, const CellFunction& f, const Collection& C)
{
    const Collection red = C.is_reduced ? C : reduce(K, f, C);
    CellSet diff = set_difference(K.closure(red.reduced), red.reduced);
    if (!K.is_subcomplex(diff))
        throw Error(ErrorKind::SubcomplexViolation, "closure difference of the collection at value " + to_string(C.value) +
                                                        " is not a subcomplex");
    const auto partition = collections(K, f);
    for (CellId s : diff) {
        if (f(s) != C.value) continue;
        if (up_count_outside(K, f, s, partition.of(s).cells) != 1)
            throw Error(ErrorKind::LemmaViolation, K.name(s) + " lies in the closure difference at level " +
                                                       to_string(C.value) + " but is not upward noncritical");
    }
    return diff;
}

}  // namespace dmb
