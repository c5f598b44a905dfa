#pragma once

#include "dmb/complex.hpp"
#include "dmb/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace dmb {

/// Exact rational value on every cell of a complex, indexed by CellId.
class CellFunction {
public:
    CellFunction() = default;
    explicit CellFunction(std::vector<Rational> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }

    const Rational& operator()(CellId c) const
    {
        if (index(c) >= values_.size())
            throw Error(ErrorKind::UnknownCell, "cell index " + std::to_string(index(c)) + " has no value");
        return values_[index(c)];
    }

    const std::vector<Rational>& values() const noexcept { return values_; }

    /// Pulls the function back along an id map (e.g. Restriction::to_parent).
    CellFunction pullback(const std::vector<CellId>& to_parent) const
    {
        std::vector<Rational> out;
        out.reserve(to_parent.size());
        for (CellId c : to_parent) out.push_back((*this)(c));
        return CellFunction(std::move(out));
    }

    friend bool operator==(const CellFunction&, const CellFunction&) = default;

private:
    std::vector<Rational> values_;
};

inline void require_domain(const Complex& K, const CellFunction& f)
{
    if (f.size() != K.size())
        throw Error(ErrorKind::DomainMismatch, "function has " + std::to_string(f.size()) + " values for " +
                                                   std::to_string(K.size()) + " cells");
}

/// Builds a function from named values; every cell must receive exactly one value.
inline CellFunction function_from_values(const Complex& K, const std::map<std::string, Rational>& named)
{
    std::vector<Rational> values(K.size());
    std::vector<bool> seen(K.size(), false);
    for (const auto& [name, v] : named) {
        CellId c = K.id(name);
        values[index(c)] = v;
        seen[index(c)] = true;
    }
    for (std::size_t i = 0; i < K.size(); ++i)
        if (!seen[i]) throw Error(ErrorKind::PartialFunction, "no value for cell '" + K.name(cell_id(i)) + "'");
    return CellFunction(std::move(values));
}

/// f(σ) = dim σ.
inline CellFunction dimension_function(const Complex& K)
{
    std::vector<Rational> values;
    for (CellId c : K.cells()) values.emplace_back(K.dim(c));
    return CellFunction(std::move(values));
}

/// σ nc≺ τ: σ is a facet of τ and f(σ) ≥ f(τ).
inline bool is_nc_facet(const Complex& K, const CellFunction& f, CellId sigma, CellId tau)
{
    return K.is_facet(sigma, tau) && f(sigma) >= f(tau);
}

/// ν snc< τ: ν is a face of τ and f(ν) > f(τ).
inline bool is_snc(const Complex& K, const CellFunction& f, CellId nu, CellId tau)
{
    return K.is_face(nu, tau) && f(nu) > f(tau);
}

/// ν snc≺ τ: the facet-restricted version of is_snc.
inline bool is_snc_facet(const Complex& K, const CellFunction& f, CellId nu, CellId tau)
{
    return K.is_facet(nu, tau) && f(nu) > f(tau);
}

/// Noncritical cofacets of σ.
inline CellSet nc_cofacets(const Complex& K, const CellFunction& f, CellId sigma)
{
    CellSet out;
    for (const auto& inc : K.cofacets(sigma))
        if (f(sigma) >= f(inc.cell)) out.push_back(inc.cell);
    return out;
}

/// Facets ν of σ with ν nc≺ σ.
inline CellSet nc_facets(const Complex& K, const CellFunction& f, CellId sigma)
{
    CellSet out;
    for (const auto& inc : K.facets(sigma))
        if (f(inc.cell) >= f(sigma)) out.push_back(inc.cell);
    return out;
}

/// U(σ)
inline std::size_t up_count(const Complex& K, const CellFunction& f, CellId sigma)
{
    return nc_cofacets(K, f, sigma).size();
}

/// D(σ)
inline std::size_t down_count(const Complex& K, const CellFunction& f, CellId sigma)
{
    return nc_facets(K, f, sigma).size();
}

namespace detail {

inline void require_member(const Complex& K, CellId sigma, const CellSet& collection)
{
    if (!contains(collection, sigma))
        throw Error(ErrorKind::CellNotInCollection, K.name(sigma) + " is not in the given collection");
}

}  // namespace detail

/// Noncritical cofacets of σ that lie outside the collection (sorted cell set) containing σ.
inline CellSet nc_cofacets_outside(const Complex& K, const CellFunction& f, CellId sigma, const CellSet& collection)
{
    detail::require_member(K, sigma, collection);
    CellSet out;
    for (CellId t : nc_cofacets(K, f, sigma))
        if (!contains(collection, t)) out.push_back(t);
    return out;
}

inline CellSet nc_facets_outside(const Complex& K, const CellFunction& f, CellId sigma, const CellSet& collection)
{
    detail::require_member(K, sigma, collection);
    CellSet out;
    for (CellId v : nc_facets(K, f, sigma))
        if (!contains(collection, v)) out.push_back(v);
    return out;
}

/// U^C(σ)
inline std::size_t up_count_outside(const Complex& K, const CellFunction& f, CellId sigma, const CellSet& collection)
{
    return nc_cofacets_outside(K, f, sigma, collection).size();
}

/// D^C(σ)
inline std::size_t down_count_outside(const Complex& K, const CellFunction& f, CellId sigma, const CellSet& collection)
{
    return nc_facets_outside(K, f, sigma, collection).size();
}

inline bool is_critical(const Complex& K, const CellFunction& f, CellId sigma)
{
    return up_count(K, f, sigma) == 0 && down_count(K, f, sigma) == 0;
}

/// Cells of the level set f⁻¹(value).
inline CellSet level_set(const Complex& K, const CellFunction& f, const Rational& value)
{
    CellSet out;
    for (CellId c : K.cells())
        if (f(c) == value) out.push_back(c);
    return out;
}

}  // namespace dmb
