#include "fixtures.hpp"

#include "dmb/gen/oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace dmb;
using fixtures::ids;

TEST_CASE("count profiles")
{
    const auto K = fixtures::filled_triangle();
    const auto p = count_profile(K, dimension_function(K));
    CHECK(p.c == std::vector<std::size_t>{3, 3, 1});
    CHECK(p.m == p.c);
    CHECK(p.u == std::vector<std::size_t>{0, 0, 0});
    CHECK(p.d == std::vector<std::size_t>{0, 0, 0});
    CHECK(p.decomposition_holds());
    CHECK(p.tilde_decomposition_holds());

    const auto single = count_profile(K, dimension_function(K), ids(K, {"a"}));
    CHECK(single.c == std::vector<std::size_t>{1, 0, 0});
    CHECK(single.m == std::vector<std::size_t>{1, 0, 0});
    CHECK_THROWS_AS(count_profile(K, dimension_function(K), ids(K, {"ab"})), Error);
}

TEST_CASE("square-left strict counts")
{
    const auto K = fixtures::square();
    const auto f = fixtures::square_left(K);
    const auto p = count_profile(K, f);
    // Strict pairs (vertex, edge) with f(vertex) > f(edge): B-AB, C-BC, D-BD.
    CHECK(p.d_tilde == std::vector<std::size_t>{0, 3});
    CHECK(p.u_tilde == std::vector<std::size_t>{3, 0});
    CHECK(p.m_tilde == std::vector<std::size_t>{1, 2});
    CHECK(p.tilde_decomposition_holds());
    CHECK_FALSE(p.decomposition_holds());
}

TEST_CASE("Morse identity on small complexes")
{
    const auto K = fixtures::filled_triangle();
    const auto r = morse_identity(K, dimension_function(K));
    CHECK(r.lhs.str() == "3 + 3t + t^2");
    CHECK(r.poincare.str() == "1");
    CHECK(r.residual.str() == "2 + t");
    CHECK(r.ok());

    const auto H = fixtures::hollow_triangle();
    VectorField V;
    V.add(H.id("b"), H.id("ab"));
    V.add(H.id("c"), H.id("bc"));
    const auto rh = morse_identity(H, synthesize_morse(H, V));
    CHECK(rh.lhs.str() == "1 + t");
    CHECK(rh.residual.is_zero());
    CHECK(rh.ok());

    const auto P = build_complex({{"p", 0}}, {}, {});
    const auto rp = morse_identity(P, dimension_function(P));
    CHECK(rp.lhs.str() == "1");
    CHECK(rp.residual.is_zero());

    const auto S = fixtures::square();
    CHECK_THROWS_AS(morse_identity(S, fixtures::square_left(S)), Error);
}

TEST_CASE("Morse-Bott identity on the square and triangle fixtures")
{
    const auto K = fixtures::square();
    const auto r = morse_bott_identity(K, fixtures::square_left(K));
    CHECK(r.lhs.str() == "1 + 2t");
    CHECK(r.poincare.str() == "1 + 2t");
    CHECK(r.residual.is_zero());
    CHECK(r.ok());
    CHECK_THROWS_AS(morse_bott_identity(K, fixtures::square_right(K)), Error);

    const auto T = fixtures::labelled_triangle();
    const auto left = morse_bott_identity(T, fixtures::triangle_left(T));
    CHECK(left.lhs.str() == "1");
    CHECK(left.residual.is_zero());
    CHECK(left.ok());

    // Singletons v0, v1, v2, s0 contribute 1 + 1 + 1 + t, and {s1, s2, t} contributes t.
    const auto right = morse_bott_identity(T, fixtures::triangle_right(T));
    CHECK(right.lhs.str() == "3 + 2t");
    CHECK(right.poincare.str() == "1");
    CHECK(right.residual.str() == "2");
    CHECK(right.ok());
}

TEST_CASE("reduction check")
{
    const auto K = fixtures::filled_triangle();
    CHECK(reduction_check(K, dimension_function(K)).holds());

    const auto H = fixtures::hollow_triangle();
    VectorField V;
    V.add(H.id("b"), H.id("ab"));
    V.add(H.id("c"), H.id("bc"));
    const auto g = synthesize_morse(H, V);
    CHECK(reduction_check(H, g).holds());
    const auto p = reduced_collections(H, g);
    for (const auto& C : p) {
        if (C.size() != 2) continue;
        const auto ranks = rank_profile(chain_complex_reduced(H, g, C));
        CHECK(poincare(ranks).is_zero());
        CHECK(ranks.boundaries[0] == 1);
        CHECK(C.reduced == C.cells);
    }
}

TEST_CASE("cycle restriction on a hollow triangle")
{
    const auto H = fixtures::hollow_triangle();
    const auto f = fixtures::values(H, {{"a", 0}, {"b", 0}, {"c", 0}, {"ab", 1}, {"bc", 1}, {"ac", 1}});
    REQUIRE(is_morse_bott(H, f));
    const auto cc = chain_complex(H);
    const auto z = cycle_basis(cc, 1);
    REQUIRE(z.size() == 1);
    const auto res = lemmbpoly_check(H, f, 1, z.front());
    CHECK(res.applicable);
    CHECK(res.holds);

    try {
        lemmbpoly_check(H, f, 1, IntChain(3, 0));
        FAIL("zero chain accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotACycle);
    }
    CHECK_THROWS_AS(lemmbpoly_check(H, f, 1, IntChain{1, 0, 0}), Error);
}

TEST_CASE("cycle restriction on random Morse-Bott functions")
{
    std::size_t applicable = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        gen::GenConfig cfg;
        cfg.seed = seed;
        cfg.pure = seed % 2 == 0;
        const auto K = gen::random_simplicial(cfg);
        const auto f = gen::random_morse_bott(K, cfg);
        const auto cc = chain_complex(K);
        for (std::size_t k = 0; k < cc.dims(); ++k)
            for (const auto& x : cycle_basis(cc, k)) {
                const auto res = lemmbpoly_check(K, f, k, x);
                if (!res.applicable) continue;
                ++applicable;
                CHECK(res.holds);
            }
    }
    CHECK(applicable > 100);
}

TEST_CASE("identities on random functions")
{
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        gen::GenConfig cfg;
        cfg.seed = seed;
        cfg.pure = seed % 2 == 0;
        const auto K = gen::random_simplicial(cfg);
        const auto chi = euler_characteristic(K);

        const auto f = gen::random_morse(K, cfg);
        const auto mr = morse_identity(K, f);
        CHECK(mr.ok());
        CHECK(mr.lhs.evaluate(-1) == chi);
        CHECK(reduction_check(K, f).holds());
        CHECK(count_profile(K, f).decomposition_holds());

        const auto g = gen::random_morse_bott(K, cfg);
        const auto br = morse_bott_identity(K, g);
        CHECK(br.ok());
        CHECK(br.lhs.evaluate(-1) == chi);
        CHECK(count_profile(K, g).tilde_decomposition_holds());
        for (int k = 0; k <= br.poincare.degree(); ++k) CHECK(br.lhs[k] >= br.poincare[k]);
    }
}

TEST_CASE("counts on a subcomplex")
{
    const auto K = fixtures::filled_triangle();
    const auto f = dimension_function(K);
    const auto L = K.closure(ids(K, {"ab", "bc", "ac"}));
    const auto p = count_profile(K, f, L);
    CHECK(p.c == std::vector<std::size_t>{3, 3, 0});
    CHECK(p.decomposition_holds());
}
