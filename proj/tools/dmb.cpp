#include "dmb/dmb.hpp"
#include "dmb/gen/random.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace dmb;

namespace {

enum Exit { Ok = 0, ParseFailure = 1, InvalidStructure = 2, CheckFailed = 3 };

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return ParseFailure;
    case ErrorKind::NotMorse:
    case ErrorKind::NotMorseBott:
    case ErrorKind::TrichotomyViolation:
    case ErrorKind::SubcomplexViolation:
    case ErrorKind::ClosedOrbitPresent:
    case ErrorKind::NotACycle:
    case ErrorKind::LemmaViolation:
    case ErrorKind::NonUniqueCofacet: return CheckFailed;
    default: return InvalidStructure;
    }
}

json names(const Complex& K, const CellSet& s)
{
    json out = json::array();
    for (CellId c : s) out.push_back(K.name(c));
    return out;
}

json polynomial(const IntPolynomial& p)
{
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p[k]);
    return {{"text", p.str()}, {"coefficients", coeffs}};
}

json counts(const std::vector<std::size_t>& v) { return json(v); }

json morse_violations(const Complex& K, const MorseVerdict& v)
{
    json out = json::array();
    for (const auto& x : v.violations)
        out.push_back({{"cell", K.name(x.cell)},
                       {"condition", std::string(to_string(x.condition))},
                       {"witnesses", names(K, x.witnesses)}});
    return out;
}

json bott_violations(const Complex& K, const MorseBottVerdict& v)
{
    json out = json::array();
    for (const auto& x : v.violations) {
        json item{{"cell", K.name(x.cell)}, {"condition", std::string(to_string(x.condition))}};
        if (x.condition == BottCondition::MB2 || x.condition == BottCondition::MB4) item["count"] = x.count;
        item["witnesses"] = names(K, x.witnesses);
        out.push_back(item);
    }
    return out;
}

json field(const Complex& K, const VectorField& V)
{
    json out = json::array();
    for (auto [s, t] : V.arrows()) out.push_back({K.name(s), K.name(t)});
    return out;
}

json identity(const IdentityReport& r)
{
    return {{"lhs", polynomial(r.lhs)},
            {"poincare", polynomial(r.poincare)},
            {"residual", polynomial(r.residual)},
            {"holds", r.holds},
            {"nonnegative", r.nonnegative}};
}

json collection_rows(const Complex& K, const CellFunction& f, const CollectionPartition& p)
{
    json rows = json::array();
    const auto homology = collection_homology(K, f, p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& C = p[i];
        rows.push_back({{"value", to_string(C.value)},
                        {"cells", names(K, C.cells)},
                        {"reduced", names(K, C.reduced)},
                        {"removed_up", names(K, C.removed_up)},
                        {"removed_down", names(K, C.removed_down)},
                        {"poincare", polynomial(homology[i].poincare)}});
    }
    return rows;
}

// ---- human rendering -------------------------------------------------------

std::string join(const json& arr, const std::string& sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += sep;
        out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
    }
    return out;
}

std::string braces(const json& arr) { return "{" + join(arr, ", ") + "}"; }

void render_violations(std::ostream& os, const json& list)
{
    for (const auto& v : list) {
        os << "  " << v["condition"].get<std::string>() << " at " << v["cell"].get<std::string>();
        if (v.contains("count")) os << " count=" << v["count"].get<std::size_t>();
        os << " witnesses " << braces(v["witnesses"]) << '\n';
    }
}

void render_collections(std::ostream& os, const json& rows)
{
    for (const auto& r : rows)
        os << "value=" << r["value"].get<std::string>() << " cells=" << braces(r["cells"])
           << " reduced=" << braces(r["reduced"]) << " up=" << braces(r["removed_up"])
           << " down=" << braces(r["removed_down"]) << " P_t=" << r["poincare"]["text"].get<std::string>() << '\n';
}

void render_identity(std::ostream& os, const json& r, const std::string& residual_name)
{
    os << "  lhs        " << r["lhs"]["text"].get<std::string>() << '\n'
       << "  P_t(K)     " << r["poincare"]["text"].get<std::string>() << '\n'
       << "  " << residual_name << "       " << r["residual"]["text"].get<std::string>() << '\n'
       << "  identity   " << (r["holds"].get<bool>() ? "HOLDS" : "FAILS") << '\n'
       << "  residual " << (r["nonnegative"].get<bool>() ? "nonnegative" : "has a negative coefficient") << '\n';
}

void render(std::ostream& os, const std::string& command, const json& j)
{
    if (j.contains("error")) {
        os << "error: " << j["message"].get<std::string>() << '\n';
        return;
    }
    if (command == "validate") {
        os << "complex: " << j["cells"].get<std::size_t>() << " cells, c_k = " << join(j["c"]) << '\n';
        if (j.contains("function")) os << "function: total on all cells\n";
        os << "valid\n";
    } else if (command == "morse-check") {
        os << "is_morse = " << (j["is_morse"].get<bool>() ? "true" : "false") << '\n';
        render_violations(os, j["violations"]);
        os << "m_k = " << join(j["m"]) << '\n';
        for (const auto& [k, cells] : j["critical"].items()) os << "critical[" << k << "] = " << braces(cells) << '\n';
    } else if (command == "mb-check") {
        os << "is_morse_bott = " << (j["is_morse_bott"].get<bool>() ? "true" : "false") << '\n';
        render_violations(os, j["violations"]);
    } else if (command == "collections") {
        render_collections(os, j["collections"]);
    } else if (command == "betti") {
        os << "P_t = " << j["poincare"]["text"].get<std::string>() << '\n';
        os << "k  c_k  rank Z_k  rank B_k  b_k  torsion\n";
        for (const auto& row : j["ranks"])
            os << row["k"].get<std::size_t>() << "  " << row["chains"].get<std::size_t>() << "  "
               << row["cycles"].get<std::size_t>() << "  " << row["boundaries"].get<std::size_t>() << "  "
               << row["betti"].get<std::size_t>() << "  " << (row["torsion"].empty() ? "-" : join(row["torsion"]))
               << '\n';
    } else if (command == "poincare") {
        os << "P_t = " << j["poincare"]["text"].get<std::string>() << '\n';
        if (j.contains("collections")) {
            for (const auto& r : j["collections"])
                os << "P_t(C^red) value=" << r["value"].get<std::string>() << " " << braces(r["reduced"]) << " = "
                   << r["poincare"]["text"].get<std::string>() << '\n';
            os << "sum = " << j["sum"]["text"].get<std::string>() << '\n';
        }
    } else if (command == "gradient") {
        for (const auto& a : j["arrows"]) os << "arrow " << a[0].get<std::string>() << ' ' << a[1].get<std::string>() << '\n';
    } else if (command == "synthesize") {
        for (const auto& [cell, v] : j["values"].items()) os << "value " << cell << ' ' << v.get<std::string>() << '\n';
    } else if (command == "inequality") {
        os << (j["kind"].get<std::string>() == "morse" ? "Morse identity\n" : "Morse-Bott identity\n");
        render_identity(os, j["identity"], j["kind"].get<std::string>() == "morse" ? "r(t)" : "R(t)");
    } else if (command == "analyze") {
        os << "c_k = " << join(j["c"]) << '\n';
        os << "is_morse_bott = " << (j["is_morse_bott"].get<bool>() ? "true" : "false") << '\n';
        render_violations(os, j["mb_violations"]);
        if (j.contains("collections")) {
            os << "collections: " << j["collections"].size() << '\n';
            render_collections(os, j["collections"]);
            os << "gradient:";
            for (const auto& a : j["gradient"]) os << ' ' << a[0].get<std::string>() << "->" << a[1].get<std::string>();
            os << '\n';
            os << "Morse-Bott identity\n";
            render_identity(os, j["identity"], "R(t)");
        }
        if (j.contains("morse")) {
            const auto& m = j["morse"];
            os << "is_morse = " << (m["is_morse"].get<bool>() ? "true" : "false") << '\n';
            render_violations(os, m["violations"]);
            if (m.contains("identity")) {
                os << "m_k = " << join(m["m"]) << '\n';
                os << "Morse identity\n";
                render_identity(os, m["identity"], "r(t)");
                os << "reduction " << (m["reduction_holds"].get<bool>() ? "HOLDS" : "FAILS") << '\n';
            }
        }
        for (const auto& w : j["warnings"]) os << "warning: " << w.get<std::string>() << '\n';
    } else if (command == "gen") {
        for (const auto& f : j["files"]) os << "wrote " << f.get<std::string>() << '\n';
    }
}

// ---- commands --------------------------------------------------------------

struct Outcome {
    json report;
    int code = Ok;
};

Outcome cmd_validate(const std::string& cx, const std::string& fn)
{
    const auto K = io::read_complex_file(cx);
    json j{{"cells", K.size()}, {"c", counts(K.cell_counts())}};
    if (!fn.empty()) {
        io::read_function_file(fn, K);
        j["function"] = fn;
    }
    j["valid"] = true;
    return {j};
}

Outcome cmd_morse_check(const std::string& cx, const std::string& fn)
{
    const auto K = io::read_complex_file(cx);
    const auto f = io::read_function_file(fn, K);
    const auto v = check_morse(K, f);
    json crit = json::object();
    const auto cells = critical_cells(K, f);
    for (std::size_t k = 0; k < cells.size(); ++k) crit[std::to_string(k)] = names(K, cells[k]);
    json j{{"is_morse", v.is_morse()}, {"violations", morse_violations(K, v)}, {"m", counts(m_counts(K, f))},
           {"critical", crit}};
    return {j, v.is_morse() ? Ok : CheckFailed};
}

Outcome cmd_mb_check(const std::string& cx, const std::string& fn)
{
    const auto K = io::read_complex_file(cx);
    const auto f = io::read_function_file(fn, K);
    const auto v = check_morse_bott(K, f);
    json j{{"is_morse_bott", v.is_morse_bott()}, {"violations", bott_violations(K, v)}};
    return {j, v.is_morse_bott() ? Ok : CheckFailed};
}

Outcome cmd_collections(const std::string& cx, const std::string& fn)
{
    const auto K = io::read_complex_file(cx);
    const auto f = io::read_function_file(fn, K);
    return {{{"collections", collection_rows(K, f, reduced_collections(K, f))}}};
}

Outcome cmd_betti(const std::string& cx)
{
    const auto K = io::read_complex_file(cx);
    const auto p = rank_profile(chain_complex(K));
    json rows = json::array();
    for (std::size_t k = 0; k < p.chains.size(); ++k) {
        json torsion = json::array();
        for (const auto& t : p.torsion[k]) torsion.push_back(t.str());
        rows.push_back({{"k", k},
                        {"chains", p.chains[k]},
                        {"cycles", p.cycles[k]},
                        {"boundaries", p.boundaries[k]},
                        {"betti", p.betti[k]},
                        {"torsion", torsion}});
    }
    return {{{"poincare", polynomial(poincare(p))}, {"ranks", rows}}};
}

Outcome cmd_poincare(const std::string& cx, const std::string& fn)
{
    const auto K = io::read_complex_file(cx);
    json j{{"poincare", polynomial(poincare(chain_complex(K)))}};
    if (!fn.empty()) {
        const auto f = io::read_function_file(fn, K);
        const auto p = reduced_collections(K, f);
        j["collections"] = collection_rows(K, f, p);
        IntPolynomial sum;
        for (const auto& h : collection_homology(K, f, p)) sum += h.poincare;
        j["sum"] = polynomial(sum);
    }
    return {j};
}

Outcome cmd_gradient(const std::string& cx, const std::string& fn, bool strict)
{
    const auto K = io::read_complex_file(cx);
    const auto f = io::read_function_file(fn, K);
    const auto V = strict ? grad_strict(K, f) : grad_morse(K, f);
    return {{{"strict", strict}, {"arrows", field(K, V)}}};
}

Outcome cmd_synthesize(const std::string& cx, const std::string& vf)
{
    const auto K = io::read_complex_file(cx);
    const auto V = io::read_vector_field_file(vf, K);
    const auto g = synthesize_morse(K, V);
    json values = json::object();
    for (CellId c : K.cells()) values[K.name(c)] = to_string(g(c));
    return {{{"values", values}}};
}

Outcome cmd_inequality(const std::string& cx, const std::string& fn, bool morse)
{
    const auto K = io::read_complex_file(cx);
    const auto f = io::read_function_file(fn, K);
    const auto r = morse ? morse_identity(K, f) : morse_bott_identity(K, f);
    return {{{"kind", morse ? "morse" : "morse-bott"}, {"identity", identity(r)}}, r.ok() ? Ok : CheckFailed};
}

Outcome cmd_analyze(const std::string& cx, const std::string& fn, bool morse)
{
    const auto K = io::read_complex_file(cx);
    const auto f = io::read_function_file(fn, K);
    Outcome out;
    json& j = out.report;
    j["c"] = counts(K.cell_counts());
    j["warnings"] = json::array();

    const auto mb = check_morse_bott(K, f);
    j["is_morse_bott"] = mb.is_morse_bott();
    j["mb_violations"] = bott_violations(K, mb);
    if (mb.is_morse_bott()) {
        const auto partition = reduced_collections(K, f);
        j["collections"] = collection_rows(K, f, partition);
        j["gradient"] = field(K, grad_strict(K, f));
        const auto r = morse_bott_identity(K, f);
        j["identity"] = identity(r);
        if (!r.ok()) out.code = CheckFailed;
    } else {
        out.code = CheckFailed;
    }

    if (morse) {
        const auto mv = check_morse(K, f);
        json m{{"is_morse", mv.is_morse()}, {"violations", morse_violations(K, mv)}};
        if (mv.is_morse()) {
            m["m"] = counts(m_counts(K, f));
            const auto r = morse_identity(K, f);
            m["identity"] = identity(r);
            const auto red = reduction_check(K, f);
            m["reduction_holds"] = red.holds();
            if (!r.ok() || !red.holds()) out.code = CheckFailed;
        } else {
            out.code = CheckFailed;
        }
        j["morse"] = m;
    }
    return out;
}

Outcome cmd_gen(std::uint64_t seed, std::size_t cells, int dim, bool mb, const std::string& prefix)
{
    gen::GenConfig cfg;
    cfg.seed = seed;
    cfg.max_cells = cells;
    cfg.max_dim = dim;
    const auto K = gen::random_simplicial(cfg);
    const auto f = mb ? gen::random_morse_bott(K, cfg) : gen::random_morse(K, cfg);
    const auto V = mb ? grad_strict(K, f) : grad_morse(K, f);

    auto write = [&](const std::string& path, auto&& body) {
        std::ofstream os(path);
        if (!os) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
        body(os);
    };
    write(prefix + ".cx", [&](std::ostream& os) { io::write_complex(os, K); });
    write(prefix + ".fn", [&](std::ostream& os) { io::write_function(os, K, f); });
    write(prefix + ".vf", [&](std::ostream& os) { io::write_vector_field(os, K, V); });
    return {{{"seed", seed}, {"cells", K.size()}, {"files", {prefix + ".cx", prefix + ".fn", prefix + ".vf"}}}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Discrete Morse and Morse-Bott analysis of finite CW complexes"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit the report as JSON")->configurable(false);
    app.fallthrough();

    std::string cx, fn, vf, prefix = "dmb-gen";
    bool morse = false, strict = false, mb = false;
    std::uint64_t seed = 0;
    std::size_t max_cells = 30;
    int dim = 2;

    auto* validate = app.add_subcommand("validate", "Check a complex file and optionally a function file");
    validate->add_option("complex", cx)->required();
    validate->add_option("function", fn);

    auto* analyze = app.add_subcommand("analyze", "Full Morse-Bott pipeline report");
    analyze->add_option("complex", cx)->required();
    analyze->add_option("function", fn)->required();
    analyze->add_flag("--morse", morse, "Also run the Morse checks and identity");

    auto* morse_check = app.add_subcommand("morse-check", "Check conditions M1-M4");
    morse_check->add_option("complex", cx)->required();
    morse_check->add_option("function", fn)->required();

    auto* mb_check = app.add_subcommand("mb-check", "Check conditions MB1-MB4");
    mb_check->add_option("complex", cx)->required();
    mb_check->add_option("function", fn)->required();

    auto* colls = app.add_subcommand("collections", "List collections and their reductions");
    colls->add_option("complex", cx)->required();
    colls->add_option("function", fn)->required();

    auto* betti = app.add_subcommand("betti", "Ranks and Betti numbers over the integers");
    betti->add_option("complex", cx)->required();

    auto* poinc = app.add_subcommand("poincare", "Poincare polynomial, per collection when a function is given");
    poinc->add_option("complex", cx)->required();
    poinc->add_option("function", fn);

    auto* gradient = app.add_subcommand("gradient", "Emit the gradient matching as arrow lines");
    gradient->add_option("complex", cx)->required();
    gradient->add_option("function", fn)->required();
    gradient->add_flag("--strict", strict, "Use strictly noncritical cofacets (Morse-Bott input)");

    auto* synth = app.add_subcommand("synthesize", "Build a discrete Morse function from an arrow file");
    synth->add_option("complex", cx)->required();
    synth->add_option("field", vf)->required();

    auto* ineq = app.add_subcommand("inequality", "Check the Morse-Bott (or with --morse, Morse) identity");
    ineq->add_option("complex", cx)->required();
    ineq->add_option("function", fn)->required();
    ineq->add_flag("--morse", morse, "Use the discrete Morse identity");

    auto* gen = app.add_subcommand("gen", "Write a random complex, function and matching");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--cells", max_cells, "Maximum number of cells")->check(CLI::Range(1, 100000));
    gen->add_option("--dim", dim, "Maximum dimension")->check(CLI::Range(0, 8));
    gen->add_flag("--mb", mb, "Generate a Morse-Bott function instead of a Morse function");
    gen->add_option("-o,--output", prefix, "Output path prefix for .cx, .fn and .vf files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ParseFailure;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Outcome out;
    try {
        if (command == "validate") out = cmd_validate(cx, fn);
        else if (command == "analyze") out = cmd_analyze(cx, fn, morse);
        else if (command == "morse-check") out = cmd_morse_check(cx, fn);
        else if (command == "mb-check") out = cmd_mb_check(cx, fn);
        else if (command == "collections") out = cmd_collections(cx, fn);
        else if (command == "betti") out = cmd_betti(cx);
        else if (command == "poincare") out = cmd_poincare(cx, fn);
        else if (command == "gradient") out = cmd_gradient(cx, fn, strict);
        else if (command == "synthesize") out = cmd_synthesize(cx, vf);
        else if (command == "inequality") out = cmd_inequality(cx, fn, morse);
        else out = cmd_gen(seed, max_cells, dim, mb, prefix);
    } catch (const Error& e) {
        out.report = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
        out.code = exit_code(e.kind());
    }

    if (as_json) {
        std::cout << out.report.dump(2) << '\n';
    } else {
        std::ostringstream text;
        render(text, command, out.report);
        (out.report.contains("error") ? std::cerr : std::cout) << text.str();
    }
    return out.code;
}
