#pragma once

#include "dmb/function.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace dmb {

enum class MorseCondition { M1, M2, M3, M4 };

constexpr std::string_view to_string(MorseCondition c) noexcept
{
    switch (c) {
    case MorseCondition::M1: return "M1";
    case MorseCondition::M2: return "M2";
    case MorseCondition::M3: return "M3";
    case MorseCondition::M4: return "M4";
    }
    return "?";
}

struct MorseViolation {
    CellId cell;
    MorseCondition condition;
    /// For M1/M3 the offending irregular partner, for M2/M4 every noncritical cofacet/facet.
    CellSet witnesses;
};

struct MorseVerdict {
    std::vector<MorseViolation> violations;

    bool is_morse() const noexcept { return violations.empty(); }
};

/// Checks (M1)-(M4) on every cell and reports every violation.
///
/// M1/M3 compare f across irregular facets (irr≺) only; irregular faces
/// further down are the concern of the Morse–Bott checker.
inline MorseVerdict check_morse(const Complex& K, const CellFunction& f)
{
    require_domain(K, f);
    MorseVerdict verdict;
    for (CellId s : K.cells()) {
        for (const auto& inc : K.cofacets(s))
            if (!inc.regular && f(s) >= f(inc.cell)) verdict.violations.push_back({s, MorseCondition::M1, {inc.cell}});
        if (auto up = nc_cofacets(K, f, s); up.size() > 1)
            verdict.violations.push_back({s, MorseCondition::M2, std::move(up)});
        for (const auto& inc : K.facets(s))
            if (!inc.regular && f(inc.cell) >= f(s)) verdict.violations.push_back({s, MorseCondition::M3, {inc.cell}});
        if (auto down = nc_facets(K, f, s); down.size() > 1)
            verdict.violations.push_back({s, MorseCondition::M4, std::move(down)});
    }
    return verdict;
}

inline bool is_morse(const Complex& K, const CellFunction& f)
{
    return check_morse(K, f).is_morse();
}

inline void require_morse(const Complex& K, const CellFunction& f)
{
    auto verdict = check_morse(K, f);
    if (!verdict.is_morse()) {
        const auto& v = verdict.violations.front();
        throw Error(ErrorKind::NotMorse, std::string(to_string(v.condition)) + " fails at " + K.name(v.cell));
    }
}

struct UpDownCheck {
    bool holds = true;
    /// First cell with U(σ) + D(σ) > 1, if any.
    std::optional<CellId> witness;
};

/// Confirms U(σ) + D(σ) ≤ 1 on every cell of a discrete Morse function.
inline UpDownCheck check_u_plus_d(const Complex& K, const CellFunction& f)
{
    require_morse(K, f);
    for (CellId s : K.cells())
        if (up_count(K, f, s) + down_count(K, f, s) > 1) return {false, s};
    return {};
}

/// Critical cells grouped by dimension (index k holds the critical k-cells).
inline std::vector<CellSet> critical_cells(const Complex& K, const CellFunction& f)
{
    require_domain(K, f);
    std::vector<CellSet> out(static_cast<std::size_t>(K.max_dim() + 1));
    for (CellId s : K.cells())
        if (is_critical(K, f, s)) out[static_cast<std::size_t>(K.dim(s))].push_back(s);
    return out;
}

/// m_k, the number of critical k-cells.
inline std::vector<std::size_t> m_counts(const Complex& K, const CellFunction& f)
{
    std::vector<std::size_t> out;
    for (const auto& cells : critical_cells(K, f)) out.push_back(cells.size());
    return out;
}

}  // namespace dmb
