#pragma once

#include "dmb/function.hpp"
#include "dmb/gradient.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dmb::io {

namespace detail {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        for (std::string tok; ls >> tok;) line.tokens.push_back(std::move(tok));
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] inline void parse_error(const Line& line, const std::string& message)
{
    throw Error(ErrorKind::Parse, "line " + std::to_string(line.number) + ": " + message);
}

inline void expect_arity(const Line& line, std::size_t n)
{
    if (line.tokens.size() != n)
        parse_error(line, "'" + line.tokens[0] + "' takes " + std::to_string(n - 1) + " fields, got " +
                              std::to_string(line.tokens.size() - 1));
}

inline long long parse_int(const Line& line, const std::string& tok, const char* what)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        parse_error(line, std::string("bad ") + what + " '" + tok + "'");
    }
    if (used != tok.size()) parse_error(line, std::string("bad ") + what + " '" + tok + "'");
    return v;
}

inline std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    return in;
}

}  // namespace detail

/// Reads the complex format: `cell`/`cover`/`irr` records, or exclusively
/// `simplex` records. Syntax problems raise Parse; structural problems are
/// raised by build_complex / from_simplicial.
inline Complex read_complex(std::istream& in)
{
    std::vector<CellSpec> cells;
    std::vector<CoverSpec> covers;
    std::vector<FacePairSpec> deep;
    std::vector<std::vector<std::string>> simplices;
    bool cw_mode = false;

    for (const auto& line : detail::tokenize(in)) {
        const std::string& kw = line.tokens[0];
        const bool is_simplex = kw == "simplex";
        if (kw != "cell" && kw != "cover" && kw != "irr" && !is_simplex)
            detail::parse_error(line, "unknown keyword '" + kw + "'");
        if ((is_simplex && cw_mode) || (!is_simplex && !simplices.empty()))
            detail::parse_error(line, "'simplex' records cannot be mixed with cell/cover/irr records");
        cw_mode = cw_mode || !is_simplex;

        if (kw == "cell") {
            detail::expect_arity(line, 3);
            const long long d = detail::parse_int(line, line.tokens[2], "dimension");
            if (d < 0) detail::parse_error(line, "negative dimension");
            cells.push_back({line.tokens[1], static_cast<int>(d)});
        } else if (kw == "cover") {
            detail::expect_arity(line, 5);
            const std::string& flag = line.tokens[4];
            if (flag != "reg" && flag != "irr") detail::parse_error(line, "regularity must be 'reg' or 'irr'");
            covers.push_back({line.tokens[1], line.tokens[2], detail::parse_int(line, line.tokens[3], "incidence"),
                              flag == "reg"});
        } else if (kw == "irr") {
            detail::expect_arity(line, 3);
            deep.push_back({line.tokens[1], line.tokens[2]});
        } else {
            if (line.tokens.size() < 2) detail::parse_error(line, "'simplex' needs at least one vertex");
            simplices.emplace_back(line.tokens.begin() + 1, line.tokens.end());
        }
    }
    if (!simplices.empty()) return from_simplicial(simplices);
    return build_complex(std::move(cells), std::move(covers), std::move(deep));
}

inline Complex read_complex_file(const std::string& path)
{
    auto in = detail::open(path);
    return read_complex(in);
}

/// Writes K in the cell/cover/irr form, cells ordered by (dim, id).
inline void write_complex(std::ostream& out, const Complex& K)
{
    for (const auto& c : K.cell_specs()) out << "cell " << c.id << ' ' << c.dim << '\n';
    for (const auto& c : K.cover_specs())
        out << "cover " << c.face << ' ' << c.cell << ' ' << c.incidence << ' ' << (c.regular ? "reg" : "irr") << '\n';
    for (const auto& p : K.deep_irregular_specs()) out << "irr " << p.face << ' ' << p.cell << '\n';
}

/// Reads `value <cell> <rational>` records; every cell needs exactly one.
inline CellFunction read_function(std::istream& in, const Complex& K)
{
    std::map<std::string, Rational> named;
    for (const auto& line : detail::tokenize(in)) {
        if (line.tokens[0] != "value") detail::parse_error(line, "unknown keyword '" + line.tokens[0] + "'");
        detail::expect_arity(line, 3);
        auto v = parse_rational(line.tokens[2]);
        if (!v) detail::parse_error(line, "bad rational '" + line.tokens[2] + "'");
        if (!named.emplace(line.tokens[1], *v).second)
            throw Error(ErrorKind::DuplicateRecord,
                        "line " + std::to_string(line.number) + ": second value for '" + line.tokens[1] + "'");
    }
    return function_from_values(K, named);
}

inline CellFunction read_function_file(const std::string& path, const Complex& K)
{
    auto in = detail::open(path);
    return read_function(in, K);
}

inline void write_function(std::ostream& out, const Complex& K, const CellFunction& f)
{
    require_domain(K, f);
    for (CellId c : K.cells()) out << "value " << K.name(c) << ' ' << to_string(f(c)) << '\n';
}

/// Reads `arrow <σ> <τ>` records. Only syntax and cell names are checked;
/// use validate_vector_field for the field conditions.
inline VectorField read_vector_field(std::istream& in, const Complex& K)
{
    VectorField V;
    for (const auto& line : detail::tokenize(in)) {
        if (line.tokens[0] != "arrow") detail::parse_error(line, "unknown keyword '" + line.tokens[0] + "'");
        detail::expect_arity(line, 3);
        V.add(K.id(line.tokens[1]), K.id(line.tokens[2]));
    }
    return V;
}

inline VectorField read_vector_field_file(const std::string& path, const Complex& K)
{
    auto in = detail::open(path);
    return read_vector_field(in, K);
}

/// Arrows in tail-id order, so equal fields serialize identically.
inline void write_vector_field(std::ostream& out, const Complex& K, const VectorField& V)
{
    for (auto [s, t] : V.arrows()) out << "arrow " << K.name(s) << ' ' << K.name(t) << '\n';
}

}  // namespace dmb::io
