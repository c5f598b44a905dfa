#include "fixtures.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace dmb;

namespace {

ErrorKind parse_kind(const std::string& text)
{
    std::istringstream in(text);
    try {
        io::read_complex(in);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("input accepted: " << text);
    return ErrorKind::Parse;
}

std::string message(const std::string& text)
{
    std::istringstream in(text);
    try {
        io::read_complex(in);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("complex files round trip")
{
    const auto K = fixtures::labelled_triangle();
    std::ostringstream out;
    io::write_complex(out, K);
    std::istringstream in(out.str());
    const auto K2 = io::read_complex(in);
    std::ostringstream again;
    io::write_complex(again, K2);
    CHECK(again.str() == out.str());
    CHECK(K2.incidence(K2.id("t"), K2.id("s1")) == -1);
}

TEST_CASE("deep irregular records survive a round trip")
{
    const auto K = build_complex({{"p", 0}, {"d", 2}}, {}, {{"p", "d"}});
    std::ostringstream out;
    io::write_complex(out, K);
    CHECK(out.str() == "cell p 0\ncell d 2\nirr p d\n");
    std::istringstream in(out.str());
    CHECK_FALSE(io::read_complex(in).is_regular_face(cell_id(0), cell_id(1)));
}

TEST_CASE("simplex records and comments")
{
    std::istringstream in("# a comment\nsimplex a b c   # trailing\n\n");
    const auto K = io::read_complex(in);
    CHECK(K.size() == 7);
}

TEST_CASE("strict complex parsing")
{
    CHECK(parse_kind("cell a\n") == ErrorKind::Parse);
    CHECK(parse_kind("cell a x\n") == ErrorKind::Parse);
    CHECK(parse_kind("cell a -1\n") == ErrorKind::Parse);
    CHECK(parse_kind("vertex a\n") == ErrorKind::Parse);
    CHECK(parse_kind("cell a 0\ncell e 1\ncover a e 1 maybe\n") == ErrorKind::Parse);
    CHECK(parse_kind("cell a 0\ncell e 1\ncover a e 1.5 reg\n") == ErrorKind::Parse);
    CHECK(parse_kind("simplex a b\ncell c 0\n") == ErrorKind::Parse);
    CHECK(parse_kind("cell c 0\nsimplex a b\n") == ErrorKind::Parse);
    CHECK(parse_kind("simplex\n") == ErrorKind::Parse);
    CHECK(parse_kind("cell a 0\ncell t 2\ncover a t 1 reg\n") == ErrorKind::GradingViolation);
    CHECK(message("cell a 0\n\nbogus\n").find("line 3") != std::string::npos);
}

TEST_CASE("function files")
{
    const auto K = fixtures::square();
    std::istringstream in("value A 1\nvalue B 2/4\nvalue C 0.75\nvalue D -3\n"
                          "value AB 1\nvalue AC 3\nvalue BC 2\nvalue BD 2\nvalue CD 3\n");
    const auto f = io::read_function(in, K);
    CHECK(f(K.id("B")) == Rational(1, 2));
    CHECK(f(K.id("C")) == Rational(3, 4));

    std::ostringstream out;
    io::write_function(out, K, f);
    std::istringstream back(out.str());
    CHECK(io::read_function(back, K) == f);

    auto kind = [&](const std::string& text) {
        std::istringstream s(text);
        try {
            io::read_function(s, K);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::LemmaViolation;
    };
    CHECK(kind("value A 1\n") == ErrorKind::PartialFunction);
    CHECK(kind("value A x\n") == ErrorKind::Parse);
    CHECK(kind("value A 1 2\n") == ErrorKind::Parse);
    CHECK(kind("val A 1\n") == ErrorKind::Parse);
    CHECK(kind("value A 1\nvalue A 2\n") == ErrorKind::DuplicateRecord);
    CHECK(kind("value Q 1\n") == ErrorKind::UnknownCell);
}

TEST_CASE("vector field files")
{
    const auto K = fixtures::hollow_triangle();
    std::istringstream in("arrow c bc\narrow b ab\n");
    const auto V = io::read_vector_field(in, K);
    std::ostringstream out;
    io::write_vector_field(out, K, V);
    CHECK(out.str() == "arrow b ab\narrow c bc\n");

    std::istringstream bad("arrow b\n");
    CHECK_THROWS_AS(io::read_vector_field(bad, K), Error);
    std::istringstream twice("arrow b ab\narrow b bc\n");
    CHECK_THROWS_AS(io::read_vector_field(twice, K), Error);
}

TEST_CASE("missing files are parse errors")
{
    try {
        io::read_complex_file("/nonexistent/file.cx");
        FAIL("opened");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
}

TEST_CASE("sample data files load")
{
    const std::string dir = DMB_DATA_DIR;
    const auto sq = io::read_complex_file(dir + "/square.cx");
    CHECK(io::read_function_file(dir + "/square-left.fn", sq) == fixtures::square_left(sq));
    const auto tri = io::read_complex_file(dir + "/triangle.cx");
    CHECK(io::read_function_file(dir + "/triangle-right.fn", tri) == fixtures::triangle_right(tri));
    const auto hol = io::read_complex_file(dir + "/hollow-triangle.cx");
    CHECK(io::read_vector_field_file(dir + "/hollow-triangle.vf", hol).size() == 2);
}
