#pragma once

#include "dmb/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dmb {

/// Dense index of a cell inside its Complex.
enum class CellId : std::uint32_t {};

constexpr std::size_t index(CellId c) noexcept
{
    return static_cast<std::size_t>(c);
}

constexpr CellId cell_id(std::size_t i) noexcept
{
    return static_cast<CellId>(static_cast<std::uint32_t>(i));
}

/// Sorted, duplicate-free list of cells. Subcomplexes and collections are
/// represented this way against their parent complex.
using CellSet = std::vector<CellId>;

inline void normalize(CellSet& s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool contains(const CellSet& s, CellId c)
{
    return std::binary_search(s.begin(), s.end(), c);
}

inline CellSet set_difference(const CellSet& a, const CellSet& b)
{
    CellSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline CellSet set_union(const CellSet& a, const CellSet& b)
{
    CellSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline CellSet set_intersection(const CellSet& a, const CellSet& b)
{
    CellSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct CellSpec {
    std::string id;
    int dim = 0;
};

/// Covering pair face ≺ cell with incidence number [cell:face].
struct CoverSpec {
    std::string face;
    std::string cell;
    std::int64_t incidence = 0;
    bool regular = true;
};

/// Declares face irr< cell for a pair whose dimensions differ by at least two.
struct FacePairSpec {
    std::string face;
    std::string cell;
};

/// One side of a covering pair as seen from a cell.
struct Incidence {
    CellId cell;
    std::int64_t incidence;
    bool regular;
};

class Complex;

Complex build_complex(std::vector<CellSpec> cells, std::vector<CoverSpec> coverings,
                      std::vector<FacePairSpec> deep_irregular);

/// Finite CW complex presented by its face poset. Immutable once built; all
/// structural invariants are established by build_complex.
class Complex {
public:
    Complex() = default;

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    /// -1 for the empty complex.
    int max_dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

    int dim(CellId c) const { return dims_[checked(c)]; }
    const std::string& name(CellId c) const { return names_[checked(c)]; }

    std::optional<CellId> find(std::string_view name) const
    {
        auto it = by_name_.find(std::string(name));
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    CellId id(std::string_view name) const
    {
        if (auto c = find(name)) return *c;
        throw Error(ErrorKind::UnknownCell, "no cell named '" + std::string(name) + "'");
    }

    bool valid(CellId c) const noexcept { return index(c) < names_.size(); }

    std::span<const CellId> cells_of_dim(int k) const
    {
        if (k < 0 || k > max_dim()) return {};
        return by_dim_[static_cast<std::size_t>(k)];
    }

    std::vector<CellId> cells() const
    {
        std::vector<CellId> out(size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = cell_id(i);
        return out;
    }

    /// Covering pairs ν ≺ c, sorted by facet id.
    std::span<const Incidence> facets(CellId c) const { return facets_[checked(c)]; }

    /// Covering pairs c ≺ τ, sorted by cofacet id.
    std::span<const Incidence> cofacets(CellId c) const { return cofacets_[checked(c)]; }

    /// All ν with ν < c (transitive closure), sorted.
    const CellSet& faces(CellId c) const { return down_[checked(c)]; }

    /// All τ with c < τ, sorted.
    const CellSet& cofaces(CellId c) const { return up_[checked(c)]; }

    /// All τ with c irr< τ, sorted.
    const CellSet& irregular_cofaces(CellId c) const { return irr_up_[checked(c)]; }

    /// All ν with ν irr< c, sorted.
    const CellSet& irregular_faces(CellId c) const { return irr_down_[checked(c)]; }

    bool is_face(CellId face, CellId cell) const
    {
        checked(face);
        return contains(down_[checked(cell)], face);
    }

    bool is_facet(CellId face, CellId cell) const
    {
        checked(face);
        return find_facet(face, cell) != nullptr;
    }

    /// [cell:face]; zero when face is not a facet of cell.
    std::int64_t incidence(CellId cell, CellId face) const
    {
        auto* inc = find_facet(face, cell);
        return inc ? inc->incidence : 0;
    }

    bool is_regular_face(CellId face, CellId cell) const
    {
        if (!is_face(face, cell))
            throw Error(ErrorKind::NotAFace, name(face) + " is not a face of " + name(cell));
        return !contains(irr_up_[index(face)], cell);
    }

    /// Open interval (σ, τ) = { α : σ < α < τ }.
    CellSet interval(CellId face, CellId cell) const
    {
        if (!is_face(face, cell))
            throw Error(ErrorKind::NotComparable, name(face) + " is not below " + name(cell));
        return set_intersection(up_[index(face)], down_[index(cell)]);
    }

    CellSet closure(CellSet s) const
    {
        normalize(s);
        CellSet out = s;
        for (CellId c : s) {
            checked(c);
            out.insert(out.end(), down_[index(c)].begin(), down_[index(c)].end());
        }
        normalize(out);
        return out;
    }

    bool is_subcomplex(CellSet s) const
    {
        normalize(s);
        return closure(s) == s;
    }

    /// Cells of s that are not faces of any other cell of s.
    CellSet maximal_cells(const CellSet& s) const
    {
        CellSet out;
        for (CellId c : s) {
            bool covered = std::any_of(up_[index(c)].begin(), up_[index(c)].end(),
                                       [&](CellId t) { return contains(s, t); });
            if (!covered) out.push_back(c);
        }
        return out;
    }

    /// Number of cells per dimension.
    std::vector<std::size_t> cell_counts() const
    {
        std::vector<std::size_t> out;
        for (const auto& v : by_dim_) out.push_back(v.size());
        return out;
    }

    /// Input records reproducing this complex (used for restriction and export).
    std::vector<CellSpec> cell_specs() const;
    std::vector<CoverSpec> cover_specs() const;
    std::vector<FacePairSpec> deep_irregular_specs() const;

private:
    friend Complex build_complex(std::vector<CellSpec>, std::vector<CoverSpec>, std::vector<FacePairSpec>);

    std::size_t checked(CellId c) const
    {
        if (!valid(c)) throw Error(ErrorKind::UnknownCell, "cell index " + std::to_string(index(c)) + " out of range");
        return index(c);
    }

    const Incidence* find_facet(CellId face, CellId cell) const
    {
        const auto& fs = facets_[checked(cell)];
        auto it = std::lower_bound(fs.begin(), fs.end(), face,
                                   [](const Incidence& inc, CellId c) { return inc.cell < c; });
        return (it != fs.end() && it->cell == face) ? &*it : nullptr;
    }

    std::vector<std::string> names_;
    std::vector<int> dims_;
    std::unordered_map<std::string, CellId> by_name_;
    std::vector<std::vector<CellId>> by_dim_;
    std::vector<std::vector<Incidence>> facets_;
    std::vector<std::vector<Incidence>> cofacets_;
    std::vector<CellSet> down_;
    std::vector<CellSet> up_;
    std::vector<CellSet> irr_up_;
    std::vector<CellSet> irr_down_;
    std::vector<std::pair<CellId, CellId>> deep_irregular_;
};

inline std::vector<CellSpec> Complex::cell_specs() const
{
    std::vector<CellSpec> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back({names_[i], dims_[i]});
    return out;
}

inline std::vector<CoverSpec> Complex::cover_specs() const
{
    std::vector<CoverSpec> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (const auto& inc : facets_[i])
            out.push_back({names_[index(inc.cell)], names_[i], inc.incidence, inc.regular});
    return out;
}

inline std::vector<FacePairSpec> Complex::deep_irregular_specs() const
{
    std::vector<FacePairSpec> out;
    for (auto [face, cell] : deep_irregular_) out.push_back({names_[index(face)], names_[index(cell)]});
    return out;
}

/// Validates the records and builds the complex. The face order is the
/// transitive closure of the covering pairs together with the declared
/// deep irregular pairs.
inline Complex build_complex(std::vector<CellSpec> cells, std::vector<CoverSpec> coverings,
                             std::vector<FacePairSpec> deep_irregular)
{
    Complex K;
    const std::size_t n = cells.size();
    K.names_.reserve(n);
    K.dims_.reserve(n);

    // Cells are ordered by (dim, input order) so that ids grow with dimension.
    std::stable_sort(cells.begin(), cells.end(), [](const CellSpec& a, const CellSpec& b) { return a.dim < b.dim; });
    for (auto& c : cells) {
        if (c.dim < 0) throw Error(ErrorKind::GradingViolation, "cell '" + c.id + "' has negative dimension");
        CellId id = cell_id(K.names_.size());
        if (!K.by_name_.emplace(c.id, id).second) throw Error(ErrorKind::DuplicateId, "cell '" + c.id + "' declared twice");
        K.names_.push_back(std::move(c.id));
        K.dims_.push_back(c.dim);
        if (static_cast<std::size_t>(c.dim) >= K.by_dim_.size()) K.by_dim_.resize(static_cast<std::size_t>(c.dim) + 1);
        K.by_dim_[static_cast<std::size_t>(c.dim)].push_back(id);
    }

    auto lookup = [&](const std::string& name, const char* what) {
        auto it = K.by_name_.find(name);
        if (it == K.by_name_.end())
            throw Error(ErrorKind::DanglingReference, std::string(what) + " references unknown cell '" + name + "'");
        return it->second;
    };

    K.facets_.assign(n, {});
    K.cofacets_.assign(n, {});
    K.irr_up_.assign(n, {});
    K.irr_down_.assign(n, {});
    std::vector<std::vector<CellId>> direct_down(n);

    for (const auto& cv : coverings) {
        CellId face = lookup(cv.face, "cover");
        CellId cell = lookup(cv.cell, "cover");
        if (K.dims_[index(cell)] != K.dims_[index(face)] + 1)
            throw Error(ErrorKind::GradingViolation, "cover " + cv.face + " " + cv.cell + " has dimension gap " +
                                                         std::to_string(K.dims_[index(cell)] - K.dims_[index(face)]));
        if (cv.regular && (cv.incidence != 1 && cv.incidence != -1))
            throw Error(ErrorKind::RegularityInconsistent, "regular facet " + cv.face + " of " + cv.cell +
                                                               " has incidence " + std::to_string(cv.incidence));
        K.facets_[index(cell)].push_back({face, cv.incidence, cv.regular});
        K.cofacets_[index(face)].push_back({cell, cv.incidence, cv.regular});
        direct_down[index(cell)].push_back(face);
        if (!cv.regular) {
            K.irr_up_[index(face)].push_back(cell);
            K.irr_down_[index(cell)].push_back(face);
        }
    }
    auto by_cell = [](const Incidence& a, const Incidence& b) { return a.cell < b.cell; };
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(K.facets_[i].begin(), K.facets_[i].end(), by_cell);
        std::sort(K.cofacets_[i].begin(), K.cofacets_[i].end(), by_cell);
        auto dup = std::adjacent_find(K.facets_[i].begin(), K.facets_[i].end(),
                                      [](const Incidence& a, const Incidence& b) { return a.cell == b.cell; });
        if (dup != K.facets_[i].end())
            throw Error(ErrorKind::DuplicateRecord, "cover " + K.names_[index(dup->cell)] + " " + K.names_[i] + " given twice");
    }

    for (const auto& dp : deep_irregular) {
        CellId face = lookup(dp.face, "irr");
        CellId cell = lookup(dp.cell, "irr");
        if (K.dims_[index(cell)] - K.dims_[index(face)] < 2)
            throw Error(ErrorKind::GradingViolation, "irr " + dp.face + " " + dp.cell + " needs a dimension gap of at least 2");
        if (std::find(K.irr_down_[index(cell)].begin(), K.irr_down_[index(cell)].end(), face) !=
            K.irr_down_[index(cell)].end())
            throw Error(ErrorKind::DuplicateRecord, "irr " + dp.face + " " + dp.cell + " given twice");
        K.irr_up_[index(face)].push_back(cell);
        K.irr_down_[index(cell)].push_back(face);
        K.deep_irregular_.emplace_back(face, cell);
        direct_down[index(cell)].push_back(face);
    }
    for (std::size_t i = 0; i < n; ++i) {
        normalize(K.irr_up_[i]);
        normalize(K.irr_down_[i]);
    }

    // Ids are sorted by dimension, so every direct face has a smaller id.
    K.down_.assign(n, {});
    K.up_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        CellSet acc;
        for (CellId f : direct_down[i]) {
            acc.push_back(f);
            acc.insert(acc.end(), K.down_[index(f)].begin(), K.down_[index(f)].end());
        }
        normalize(acc);
        K.down_[i] = std::move(acc);
        for (CellId f : K.down_[i]) K.up_[index(f)].push_back(cell_id(i));
    }
    for (auto& u : K.up_) normalize(u);

    // Boundary of a boundary vanishes: Σ_{ν ≺ α ≺ τ} [τ:α][α:ν] = 0.
    for (std::size_t t = 0; t < n; ++t) {
        std::map<CellId, std::int64_t> sums;
        for (const auto& a : K.facets_[t])
            for (const auto& v : K.facets_[index(a.cell)]) sums[v.cell] += a.incidence * v.incidence;
        for (auto [v, s] : sums)
            if (s != 0)
                throw Error(ErrorKind::BoundarySquareNonzero, "boundary of boundary of " + K.names_[t] + " has coefficient " +
                                                                  std::to_string(s) + " on " + K.names_[index(v)]);
    }

    // A regular face two or more dimensions down has something in between.
    for (std::size_t t = 0; t < n; ++t) {
        for (CellId v : K.down_[t]) {
            if (K.dims_[t] - K.dims_[index(v)] < 2 || contains(K.irr_up_[index(v)], cell_id(t))) continue;
            bool between = std::any_of(K.up_[index(v)].begin(), K.up_[index(v)].end(),
                                       [&](CellId a) { return contains(K.down_[t], a); });
            if (!between)
                throw Error(ErrorKind::RegfaceViolation,
                            "regular face " + K.names_[index(v)] + " < " + K.names_[t] + " has an empty interval");
        }
    }
    return K;
}

/// Label of a simplex built from its sorted vertex labels: plain concatenation
/// when every label is a single character, otherwise joined with '-'.
inline std::string simplex_name(const std::vector<std::string>& sorted_vertices, bool single_char_labels)
{
    std::string out;
    for (std::size_t i = 0; i < sorted_vertices.size(); ++i) {
        if (i > 0 && !single_char_labels) out += '-';
        out += sorted_vertices[i];
    }
    return out;
}

/// Builds the simplicial complex generated by the given maximal simplices.
/// Incidences follow the alternating-sign rule on the sorted vertex lists.
inline Complex from_simplicial(const std::vector<std::vector<std::string>>& facet_list)
{
    if (facet_list.empty()) throw Error(ErrorKind::EmptySimplex, "no simplices given");

    std::vector<std::vector<std::string>> simplices;
    bool single_char = true;
    for (auto s : facet_list) {
        if (s.empty()) throw Error(ErrorKind::EmptySimplex, "simplex with no vertices");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(ErrorKind::DuplicateId, "simplex repeats vertex '" + *std::adjacent_find(s.begin(), s.end()) + "'");
        if (s.size() > 20) throw Error(ErrorKind::GradingViolation, "simplex of dimension above 19 is not supported");
        for (const auto& v : s) single_char = single_char && v.size() == 1;
        simplices.push_back(std::move(s));
    }

    std::map<std::vector<std::string>, int> all;  // sorted vertex list -> dim
    for (const auto& s : simplices) {
        const std::size_t m = s.size();
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<std::string> sub;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) sub.push_back(s[i]);
            all.emplace(std::move(sub), 0);
        }
    }

    std::vector<CellSpec> cells;
    std::vector<CoverSpec> covers;
    for (const auto& [verts, unused] : all) {
        const std::string name = simplex_name(verts, single_char);
        cells.push_back({name, static_cast<int>(verts.size()) - 1});
        if (verts.size() < 2) continue;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            std::vector<std::string> face = verts;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            covers.push_back({simplex_name(face, single_char), name, (i % 2 == 0) ? 1 : -1, true});
        }
    }
    return build_complex(std::move(cells), std::move(covers), {});
}

/// A subcomplex copied out as a complex of its own, together with the map
/// back to the parent's ids.
struct Restriction {
    Complex complex;
    std::vector<CellId> to_parent;
};

inline Restriction restrict_to(const Complex& K, CellSet L)
{
    normalize(L);
    if (!K.is_subcomplex(L)) throw Error(ErrorKind::NotASubcomplex, "cell set is not closed under faces");
    std::vector<CellSpec> cells;
    for (CellId c : L) cells.push_back({K.name(c), K.dim(c)});
    std::vector<CoverSpec> covers;
    for (CellId c : L)
        for (const auto& inc : K.facets(c)) covers.push_back({K.name(inc.cell), K.name(c), inc.incidence, inc.regular});
    std::vector<FacePairSpec> deep;
    for (const auto& dp : K.deep_irregular_specs())
        if (contains(L, K.id(dp.cell))) deep.push_back(dp);

    Restriction r{build_complex(std::move(cells), std::move(covers), std::move(deep)), {}};
    r.to_parent.resize(r.complex.size());
    for (std::size_t i = 0; i < r.complex.size(); ++i) r.to_parent[i] = K.id(r.complex.name(cell_id(i)));
    return r;
}

}  // namespace dmb
