#pragma once

#include "dmb/dmb.hpp"

#include <map>
#include <string>

namespace fixtures {

using dmb::Complex;
using dmb::CellFunction;

inline Complex square()
{
    return dmb::from_simplicial({{"A", "B"}, {"A", "C"}, {"B", "C"}, {"B", "D"}, {"C", "D"}});
}

inline CellFunction values(const Complex& K, const std::map<std::string, int>& v)
{
    std::map<std::string, dmb::Rational> named;
    for (const auto& [k, x] : v) named.emplace(k, dmb::Rational(x));
    return dmb::function_from_values(K, named);
}

inline CellFunction square_left(const Complex& K)
{
    return values(K, {{"A", 1}, {"B", 2}, {"C", 3}, {"D", 3}, {"AB", 1}, {"AC", 3}, {"BC", 2}, {"BD", 2}, {"CD", 3}});
}

inline CellFunction square_right(const Complex& K)
{
    return values(K, {{"A", 1}, {"B", 2}, {"C", 3}, {"D", 2}, {"AB", 1}, {"AC", 3}, {"BC", 2}, {"BD", 2}, {"CD", 2}});
}

/// Filled triangle with vertices v0 (bottom left), v1 (bottom right), v2 (top),
/// edges s0 = v0v1, s1 = v0v2, s2 = v1v2 and the 2-cell t.
inline Complex labelled_triangle()
{
    return dmb::build_complex({{"v0", 0}, {"v1", 0}, {"v2", 0}, {"s0", 1}, {"s1", 1}, {"s2", 1}, {"t", 2}},
                              {{"v0", "s0", -1, true},
                               {"v1", "s0", 1, true},
                               {"v0", "s1", -1, true},
                               {"v2", "s1", 1, true},
                               {"v1", "s2", -1, true},
                               {"v2", "s2", 1, true},
                               {"s0", "t", 1, true},
                               {"s1", "t", -1, true},
                               {"s2", "t", 1, true}},
                              {});
}

inline CellFunction triangle_left(const Complex& K)
{
    return values(K, {{"v0", 2}, {"v1", 1}, {"v2", 3}, {"s0", 2}, {"s1", 4}, {"s2", 2}, {"t", 2}});
}

inline CellFunction triangle_right(const Complex& K)
{
    return values(K, {{"v0", 1}, {"v1", 1}, {"v2", 2}, {"s0", 2}, {"s1", 3}, {"s2", 3}, {"t", 3}});
}

/// One 0-cell and one 1-cell whose ends are both glued to it.
inline Complex circle()
{
    return dmb::build_complex({{"s0", 0}, {"t0", 1}}, {{"s0", "t0", 0, false}}, {});
}

/// Two 0-cells nu, nut joined by the edge alpha, with a 2-cell tau attached
/// along alpha back and forth (incidence 0, irregular).
inline Complex disc_over_edge()
{
    return dmb::build_complex({{"nu", 0}, {"nut", 0}, {"alpha", 1}, {"tau", 2}},
                              {{"nut", "alpha", -1, true}, {"nu", "alpha", 1, true}, {"alpha", "tau", 0, false}}, {});
}

inline Complex filled_triangle() { return dmb::from_simplicial({{"a", "b", "c"}}); }

inline Complex hollow_triangle() { return dmb::from_simplicial({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

inline Complex octahedron_boundary()
{
    return dmb::from_simplicial({{"a", "c", "e"}, {"a", "c", "f"}, {"a", "d", "e"}, {"a", "d", "f"},
                                 {"b", "c", "e"}, {"b", "c", "f"}, {"b", "d", "e"}, {"b", "d", "f"}});
}

inline dmb::CellSet ids(const Complex& K, std::initializer_list<const char*> names)
{
    dmb::CellSet out;
    for (const char* n : names) out.push_back(K.id(n));
    dmb::normalize(out);
    return out;
}

}  // namespace fixtures
