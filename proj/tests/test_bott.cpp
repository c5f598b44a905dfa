#include "fixtures.hpp"

#include "dmb/gen/random.hpp"

#include <catch_amalgamated.hpp>

#include <queue>
#include <set>

using namespace dmb;
using fixtures::ids;

namespace {

// Collections by breadth-first search over equal-valued facet pairs.
std::set<CellSet> bfs_collections(const Complex& K, const CellFunction& f)
{
    std::vector<bool> seen(K.size(), false);
    std::set<CellSet> out;
    for (CellId start : K.cells()) {
        if (seen[index(start)]) continue;
        CellSet comp;
        std::queue<CellId> q;
        q.push(start);
        seen[index(start)] = true;
        while (!q.empty()) {
            CellId c = q.front();
            q.pop();
            comp.push_back(c);
            std::vector<CellId> nbrs;
            for (const auto& i : K.facets(c)) nbrs.push_back(i.cell);
            for (const auto& i : K.cofacets(c)) nbrs.push_back(i.cell);
            for (CellId n : nbrs)
                if (!seen[index(n)] && f(n) == f(c)) {
                    seen[index(n)] = true;
                    q.push(n);
                }
        }
        normalize(comp);
        out.insert(comp);
    }
    return out;
}

bool brute_force_morse_bott(const Complex& K, const CellFunction& f)
{
    const auto comps = bfs_collections(K, f);
    for (const auto& C : comps)
        for (CellId s : C) {
            for (CellId t : K.cofaces(s))
                if (!K.is_regular_face(s, t) && !(f(s) < f(t))) return false;
            for (CellId v : K.faces(s))
                if (!K.is_regular_face(v, s) && !(f(v) < f(s))) return false;
            std::size_t u = 0, d = 0;
            for (const auto& i : K.cofacets(s))
                if (f(s) >= f(i.cell) && !contains(C, i.cell)) ++u;
            for (const auto& i : K.facets(s))
                if (f(i.cell) >= f(s) && !contains(C, i.cell)) ++d;
            if (u > 1 || d > 1) return false;
        }
    return true;
}

std::set<CellSet> as_set(const CollectionPartition& p)
{
    std::set<CellSet> out;
    for (const auto& C : p) out.insert(C.cells);
    return out;
}

}  // namespace

TEST_CASE("square-left collections and reductions")
{
    const auto K = fixtures::square();
    const auto f = fixtures::square_left(K);
    CHECK(is_morse_bott(K, f));
    const auto p = reduced_collections(K, f);
    REQUIRE(p.size() == 3);
    CHECK(p[0].cells == ids(K, {"A", "AB"}));
    CHECK(p[1].cells == ids(K, {"B", "BC", "BD"}));
    CHECK(p[2].cells == ids(K, {"C", "D", "AC", "CD"}));
    CHECK(p[0].reduced == ids(K, {"A"}));
    CHECK(p[1].reduced.empty());
    CHECK(p[2].reduced == ids(K, {"AC", "CD"}));
    CHECK(p[0].removed_down == ids(K, {"AB"}));
    CHECK(p[1].removed_up == ids(K, {"B"}));
    CHECK(p[1].removed_down == ids(K, {"BC", "BD"}));
    CHECK(p[2].removed_up == ids(K, {"C", "D"}));
    CHECK(p.of(K.id("BD")).value == Rational(2));
    CHECK(p.index_of(K.id("CD")) == 2);
}

TEST_CASE("square-left strict gradient")
{
    const auto K = fixtures::square();
    const auto V = grad_strict(K, fixtures::square_left(K));
    VectorField expected;
    expected.add(K.id("C"), K.id("BC"));
    expected.add(K.id("D"), K.id("BD"));
    expected.add(K.id("B"), K.id("AB"));
    CHECK(V == expected);
}

TEST_CASE("square-right fails with U^C = 2 at the top-left vertex")
{
    const auto K = fixtures::square();
    const auto f = fixtures::square_right(K);
    const auto partition = collections(K, f);
    CHECK(as_set(partition) ==
          std::set<CellSet>{ids(K, {"A", "AB"}), ids(K, {"C", "AC"}), ids(K, {"B", "D", "BC", "BD", "CD"})});
    const auto verdict = check_morse_bott(K, f);
    REQUIRE(verdict.violations.size() == 1);
    const auto& v = verdict.violations.front();
    CHECK(K.name(v.cell) == "C");
    CHECK(v.condition == BottCondition::MB2);
    CHECK(v.count == 2);
    CHECK(v.witnesses == ids(K, {"BC", "CD"}));
    try {
        require_morse_bott(K, f);
        FAIL("not rejected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotMorseBott);
    }
}

TEST_CASE("triangle reductions")
{
    const auto K = fixtures::labelled_triangle();
    const auto left = fixtures::triangle_left(K);
    REQUIRE(is_morse_bott(K, left));
    const auto pl = reduced_collections(K, left);
    const auto& C2 = pl.of(K.id("v0"));
    CHECK(C2.cells == level_set(K, left, Rational(2)));
    CHECK(C2.reduced == ids(K, {"v0", "s0"}));

    const auto right = fixtures::triangle_right(K);
    REQUIRE(is_morse_bott(K, right));
    const auto pr = reduced_collections(K, right);
    const auto& C3 = pr.of(K.id("t"));
    CHECK(C3.cells == ids(K, {"s1", "s2", "t"}));
    CHECK(C3.reduced == C3.cells);
}

TEST_CASE("left triangle strict gradient")
{
    const auto K = fixtures::labelled_triangle();
    VectorField expected;
    expected.add(K.id("v2"), K.id("s2"));
    expected.add(K.id("s1"), K.id("t"));
    CHECK(grad_strict(K, fixtures::triangle_left(K)) == expected);
}

TEST_CASE("irregular pairs across a dimension gap of two")
{
    // A 2-sphere as one vertex plus one 2-cell attached directly to it.
    const auto K = build_complex({{"p", 0}, {"d", 2}}, {}, {{"p", "d"}});
    CHECK(is_morse_bott(K, fixtures::values(K, {{"p", 0}, {"d", 1}})));
    const auto bad = check_morse_bott(K, fixtures::values(K, {{"p", 1}, {"d", 1}}));
    REQUIRE_FALSE(bad.is_morse_bott());
    std::set<std::string> conds;
    for (const auto& v : bad.violations) conds.insert(std::string(to_string(v.condition)));
    CHECK(conds == std::set<std::string>{"MB1", "MB3"});
}

TEST_CASE("circle fixture under Morse-Bott conditions")
{
    const auto K = fixtures::circle();
    CHECK_FALSE(is_morse_bott(K, fixtures::values(K, {{"s0", 1}, {"t0", 0}})));
    CHECK(is_morse_bott(K, fixtures::values(K, {{"s0", 0}, {"t0", 1}})));
}

TEST_CASE("reduce classifies hand-made singleton collections")
{
    const auto K = fixtures::square();
    const auto f = fixtures::values(K, {{"A", 0}, {"B", 5}, {"C", 1}, {"D", 9}, {"AB", 3}, {"AC", 2}, {"BC", 4},
                                        {"BD", 10}, {"CD", 11}});
    CHECK(up_count_outside(K, f, K.id("B"), ids(K, {"B"})) == 2);

    const auto g = fixtures::values(K, {{"A", 5}, {"B", 3}, {"C", 9}, {"D", 9}, {"AB", 4}, {"AC", 10}, {"BC", 10},
                                        {"BD", 10}, {"CD", 11}});
    Collection D;
    D.value = Rational(4);
    D.cells = ids(K, {"AB"});
    CHECK(reduce(K, g, D).removed_down == ids(K, {"AB"}));

    const auto h = fixtures::values(K, {{"A", 0}, {"B", 2}, {"C", 9}, {"D", 9}, {"AB", 1}, {"AC", 10}, {"BC", 10},
                                        {"BD", 10}, {"CD", 11}});
    Collection E;
    E.value = Rational(2);
    E.cells = ids(K, {"B"});
    const auto red = reduce(K, h, E);
    CHECK(red.removed_up == ids(K, {"B"}));
    CHECK(red.reduced.empty());
}

TEST_CASE("trichotomy raises when both counters are one")
{
    // Edge ab with an nc vertex below and an nc 2-cell above, outside its collection.
    const auto K = from_simplicial({{"a", "b", "c"}});
    const auto f = fixtures::values(K, {{"a", 5}, {"b", 0}, {"c", 0}, {"ab", 3}, {"ac", 6}, {"bc", 7}, {"abc", 2}});
    Collection C;
    C.value = Rational(3);
    C.cells = ids(K, {"ab"});
    try {
        reduce(K, f, C);
        FAIL("no trichotomy violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TrichotomyViolation);
    }
}

TEST_CASE("collections agree with breadth-first search on random functions")
{
    gen::Rng rng(5);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        gen::GenConfig cfg;
        cfg.seed = seed;
        cfg.pure = seed % 2 == 0;
        const auto K = gen::random_simplicial(cfg);
        std::vector<Rational> vals;
        for (std::size_t i = 0; i < K.size(); ++i) vals.emplace_back(static_cast<int>(rng.below(4)));
        const CellFunction f(vals);
        CHECK(as_set(collections(K, f)) == bfs_collections(K, f));
        CHECK(is_morse_bott(K, f) == brute_force_morse_bott(K, f));
    }
}

TEST_CASE("Morse iff structured Morse-Bott on random functions")
{
    gen::Rng rng(9);
    std::size_t morse = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        gen::GenConfig cfg;
        cfg.seed = seed;
        cfg.pure = seed % 2 == 1;
        const auto K = gen::random_simplicial(cfg);
        CellFunction f;
        switch (seed % 3) {
        case 0: f = gen::random_morse(K, cfg); break;
        case 1: f = gen::random_morse_bott(K, cfg); break;
        default: {
            std::vector<Rational> vals;
            for (std::size_t i = 0; i < K.size(); ++i) vals.emplace_back(static_cast<int>(rng.below(6)));
            f = CellFunction(vals);
        }
        }
        const auto eq = check_morse_iff_bott(K, f);
        CHECK(eq.agrees());
        if (eq.is_morse) {
            ++morse;
            for (const auto& C : collections(K, f)) CHECK(C.size() <= 2);
        }
    }
    CHECK(morse > 300);
}

TEST_CASE("closure difference on the fixtures")
{
    const auto K = fixtures::square();
    const auto f = fixtures::square_left(K);
    for (const auto& C : reduced_collections(K, f)) CHECK(K.is_subcomplex(closure_difference(K, f, C)));
    const auto p = reduced_collections(K, f);
    CHECK(closure_difference(K, f, p[2]) == ids(K, {"A", "C", "D"}));

    const auto T = fixtures::labelled_triangle();
    const auto g = fixtures::triangle_left(T);
    const auto q = reduced_collections(T, g);
    CHECK(closure_difference(T, g, q.of(T.id("v0"))) == ids(T, {"v1"}));
}
