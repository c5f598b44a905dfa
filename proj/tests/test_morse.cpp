#include "fixtures.hpp"

#include "dmb/gen/random.hpp"

#include <catch_amalgamated.hpp>

#include <set>
#include <tuple>

using namespace dmb;
using fixtures::ids;

namespace {

using Triple = std::tuple<std::string, std::string, std::vector<std::string>>;

// Direct transcription of M1-M4 over the exported cover records, sharing no
// code with the checker under test.
std::set<Triple> brute_force_violations(const Complex& K, const CellFunction& f)
{
    std::map<std::string, Rational> v;
    for (CellId c : K.cells()) v[K.name(c)] = f(c);
    std::map<std::string, std::vector<std::string>> up, down;
    std::set<Triple> out;
    for (const auto& c : K.cover_specs()) {
        if (v[c.face] >= v[c.cell]) {
            up[c.face].push_back(c.cell);
            down[c.cell].push_back(c.face);
        }
        if (!c.regular && v[c.face] >= v[c.cell]) {
            out.insert({c.face, "M1", {c.cell}});
            out.insert({c.cell, "M3", {c.face}});
        }
    }
    for (auto& [cell, list] : up)
        if (list.size() > 1) {
            std::sort(list.begin(), list.end());
            out.insert({cell, "M2", list});
        }
    for (auto& [cell, list] : down)
        if (list.size() > 1) {
            std::sort(list.begin(), list.end());
            out.insert({cell, "M4", list});
        }
    return out;
}

std::set<Triple> reported(const Complex& K, const MorseVerdict& verdict)
{
    std::set<Triple> out;
    for (const auto& v : verdict.violations) {
        std::vector<std::string> w;
        for (CellId c : v.witnesses) w.push_back(K.name(c));
        std::sort(w.begin(), w.end());
        out.insert({K.name(v.cell), std::string(to_string(v.condition)), w});
    }
    return out;
}

}  // namespace

TEST_CASE("square-left is not Morse")
{
    const auto K = fixtures::square();
    const auto f = fixtures::square_left(K);
    const auto verdict = check_morse(K, f);
    CHECK_FALSE(verdict.is_morse());
    const auto got = reported(K, verdict);
    CHECK(got == brute_force_violations(K, f));
    CHECK(got.count({"B", "M2", {"AB", "BC", "BD"}}) == 1);
    CHECK(got.count({"BC", "M4", {"B", "C"}}) == 1);
    CHECK(got.size() == 7);
    CHECK_THROWS_AS(require_morse(K, f), Error);
}

TEST_CASE("circle with a descending irregular facet")
{
    const auto K = fixtures::circle();
    const auto f = fixtures::values(K, {{"s0", 1}, {"t0", 0}});
    const auto got = reported(K, check_morse(K, f));
    CHECK(got.count({"s0", "M1", {"t0"}}) == 1);
    CHECK(got == brute_force_violations(K, f));

    const auto g = fixtures::values(K, {{"s0", 0}, {"t0", 1}});
    CHECK(is_morse(K, g));
}

TEST_CASE("dimension function is Morse with every cell critical")
{
    const auto K = fixtures::filled_triangle();
    const auto f = dimension_function(K);
    CHECK(is_morse(K, f));
    CHECK(m_counts(K, f) == std::vector<std::size_t>{3, 3, 1});
    CHECK(check_u_plus_d(K, f).holds);
}

TEST_CASE("perfect Morse function on the hollow triangle")
{
    const auto K = fixtures::hollow_triangle();
    VectorField V;
    V.add(K.id("b"), K.id("ab"));
    V.add(K.id("c"), K.id("bc"));
    const auto f = synthesize_morse(K, V);
    REQUIRE(is_morse(K, f));
    CHECK(m_counts(K, f) == std::vector<std::size_t>{1, 1});
    const auto crit = critical_cells(K, f);
    CHECK(crit[0] == ids(K, {"a"}));
    CHECK(crit[1] == ids(K, {"ac"}));
}

TEST_CASE("global strict minimum vertex is critical")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        gen::GenConfig cfg;
        cfg.seed = seed;
        const auto K = gen::random_simplicial(cfg);
        const auto f = gen::random_morse(K, cfg);
        auto cells = K.cells();
        auto lowest = *std::min_element(cells.begin(), cells.end(), [&](CellId a, CellId b) { return f(a) < f(b); });
        const auto n = std::count_if(cells.begin(), cells.end(), [&](CellId c) { return f(c) == f(lowest); });
        if (n == 1) CHECK(is_critical(K, f, lowest));
    }
}

TEST_CASE("checker agrees with brute force on random functions")
{
    gen::Rng rng(11);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        gen::GenConfig cfg;
        cfg.seed = seed;
        cfg.pure = seed % 2 == 0;
        const auto K = gen::random_simplicial(cfg);
        std::vector<Rational> vals;
        for (std::size_t i = 0; i < K.size(); ++i) vals.emplace_back(static_cast<int>(rng.below(5)));
        const CellFunction f(vals);
        CHECK(reported(K, check_morse(K, f)) == brute_force_violations(K, f));
    }
}

TEST_CASE("Morse functions: U + D at most one and nc facets are regular")
{
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        gen::GenConfig cfg;
        cfg.seed = seed;
        cfg.pure = seed % 2 == 0;
        const auto K = gen::random_simplicial(cfg);
        const auto f = gen::random_morse(K, cfg);
        REQUIRE(is_morse(K, f));
        const auto ud = check_u_plus_d(K, f);
        CHECK(ud.holds);
        for (CellId t : K.cells())
            for (const auto& inc : K.facets(t))
                if (is_nc_facet(K, f, inc.cell, t)) CHECK(inc.regular);
    }
}

TEST_CASE("Morse verdict is invariant under order-preserving affine maps")
{
    gen::Rng rng(3);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        gen::GenConfig cfg;
        cfg.seed = seed;
        const auto K = gen::random_simplicial(cfg);
        const auto f = seed % 3 == 0 ? gen::random_morse_bott(K, cfg) : gen::random_morse(K, cfg);
        const Rational shift(static_cast<int>(rng.below(21)) - 10, 3);
        const Rational scale(1 + static_cast<int>(rng.below(9)), 1 + static_cast<int>(rng.below(4)));
        std::vector<Rational> g;
        for (const auto& x : f.values()) g.push_back(x * scale + shift);
        CHECK(reported(K, check_morse(K, f)) == reported(K, check_morse(K, CellFunction(g))));
    }
}
