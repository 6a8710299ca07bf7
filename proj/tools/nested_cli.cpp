// nested -- command-line front end: equivalence queries, class closures,
// imposition, scaling, exact evaluation, chart pairs, level graphs, part
// classification, and .nsp validation/formatting.
//
// Exit codes: 0 success/affirmative, 1 negative answer, 2 error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "nested/cell.hpp"
#include "nested/dsl.hpp"
#include "nested/equivalence.hpp"
#include "nested/error.hpp"
#include "nested/graph.hpp"
#include "nested/impose.hpp"

using nested::Address;
using nested::SpaceSpec;
using json = nlohmann::ordered_json;

namespace {

bool color_enabled() {
    const char* env = std::getenv("NESTED_COLOR");
    if (env && std::string(env) == "0") return false;
    return isatty(fileno(stderr));
}

void print_error(const std::string& message) {
    if (color_enabled())
        std::cerr << "\033[31merror:\033[0m " << message << "\n";
    else
        std::cerr << "error: " << message << "\n";
}

struct SpaceOptions {
    std::string builtin_name;
    std::string spec_path;
    std::string space_name;
    std::size_t depth = nested::kDefaultDepth;
    std::size_t cap = nested::kDefaultClassCap;
};

void add_space_options(CLI::App* cmd, SpaceOptions& opt) {
    auto* b = cmd->add_option("--builtin", opt.builtin_name,
                              "builtin space (cantor, gasket, gasket_compact, "
                              "gasket_lattice, real_line(N), unit_interval(N), naturals(N))");
    auto* s = cmd->add_option("--spec", opt.spec_path, "path to a .nsp document");
    cmd->add_option("--name", opt.space_name, "space to pick from the document");
    b->excludes(s);
    s->excludes(b);
    cmd->add_option("--depth", opt.depth, "rewrite depth budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--class-cap", opt.cap, "equivalence class size cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nested::Error(nested::Errc::InvalidSpace, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SpaceSpec load_space(const SpaceOptions& opt) {
    if (!opt.builtin_name.empty()) return nested::builtin(opt.builtin_name);
    if (opt.spec_path.empty())
        throw nested::Error(nested::Errc::InvalidSpace,
                            "no space given; use --builtin or --spec");
    const std::string text = read_file(opt.spec_path);
    nested::DocumentParse doc = nested::parse_document(text);
    for (const nested::Diagnostic& d : doc.diagnostics)
        std::cerr << opt.spec_path << ":" << nested::render_diagnostic(text, d) << "\n";
    if (!doc.ok())
        throw nested::Error(nested::Errc::SyntaxError, "invalid document '" + opt.spec_path + "'");
    if (doc.spaces.empty())
        throw nested::Error(nested::Errc::SyntaxError, "no space declarations in '" + opt.spec_path + "'");
    if (opt.space_name.empty()) return doc.spaces.front();
    for (const SpaceSpec& s : doc.spaces)
        if (s.name == opt.space_name) return s;
    throw nested::Error(nested::Errc::UnknownBuiltin,
                        "no space named '" + opt.space_name + "' in '" + opt.spec_path + "'");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw nested::Error(nested::Errc::InvalidSpace, "cannot write '" + path + "'");
    out << content;
}

nested::Cell parse_root(const std::string& text, unsigned n_parts) {
    std::string word = text;
    long scale = 0;
    if (const auto at = text.find('@'); at != std::string::npos) {
        word = text.substr(0, at);
        try {
            scale = std::stol(text.substr(at + 1));
        } catch (const std::exception&) {
            throw nested::Error(nested::Errc::MalformedLiteral,
                                "bad cell scale in '" + text + "'");
        }
    }
    std::vector<nested::Digit> digits = nested::parse_digits(word, n_parts);
    return nested::Cell{std::move(digits), scale};
}

// -- subcommand runners --------------------------------------------------------

int run_eq(const SpaceOptions& opt, const std::string& a_text, const std::string& b_text,
           bool as_json) {
    const SpaceSpec spec = load_space(opt);
    const Address a = nested::parse_address(a_text, spec.n_parts);
    const Address b = nested::parse_address(b_text, spec.n_parts);
    const nested::Relation rel = nested::equivalent(a, b, spec, opt.depth, opt.cap);
    std::vector<std::string> chain;
    if (rel == nested::Relation::Equivalent) {
        const auto witness = nested::witness_chain(a, b, spec, opt.depth, opt.cap);
        if (witness)
            for (const Address& step : *witness)
                chain.push_back(nested::format_address(step, spec.n_parts));
    }
    if (as_json) {
        json out;
        out["result"] = nested::relation_name(rel);
        out["chain"] = chain;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << nested::relation_name(rel) << "\n";
        for (const std::string& step : chain) std::cout << step << "\n";
    }
    return rel == nested::Relation::NotFoundUpToDepth ? 1 : 0;
}

int run_class(const SpaceOptions& opt, const std::string& a_text, bool as_json) {
    const SpaceSpec spec = load_space(opt);
    const Address a = nested::parse_address(a_text, spec.n_parts);
    const auto order = nested::class_bfs_order(a, spec, opt.depth, opt.cap);
    if (as_json) {
        const auto cls = nested::class_members(a, spec, opt.depth, opt.cap);
        json out;
        out["representative"] = nested::format_address(cls.representative, spec.n_parts);
        json members = json::array();
        for (const Address& m : order) members.push_back(nested::format_address(m, spec.n_parts));
        out["members"] = members;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Address& m : order)
            std::cout << nested::format_address(m, spec.n_parts) << "\n";
    }
    return 0;
}

int run_impose(const SpaceOptions& opt, const std::string& a_text, const std::string& b_text,
               bool as_json) {
    const SpaceSpec spec = load_space(opt);
    const Address a = nested::parse_address(a_text, spec.n_parts);
    const Address b = nested::parse_address(b_text, spec.n_parts);
    spec.require_member(a);
    spec.require_member(b);
    const nested::ImposedSet result = nested::impose(a, b, spec, opt.depth, opt.cap);
    if (as_json) {
        json out;
        json raw = json::array();
        for (const Address& r : result.raw) raw.push_back(nested::format_address(r, spec.n_parts));
        out["raw"] = raw;
        json classes = json::array();
        for (const auto& cls : result.classes) {
            json c;
            c["representative"] = nested::format_address(cls.representative, spec.n_parts);
            json members = json::array();
            for (const Address& m : cls.members)
                members.push_back(nested::format_address(m, spec.n_parts));
            c["members"] = members;
            classes.push_back(c);
        }
        out["classes"] = classes;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& cls : result.classes) {
            std::cout << nested::format_address(cls.representative, spec.n_parts) << ":";
            for (const Address& m : cls.members)
                std::cout << " " << nested::format_address(m, spec.n_parts);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_scale(const SpaceOptions& opt, const std::string& a_text, long k) {
    const SpaceSpec spec = load_space(opt);
    const Address a = nested::parse_address(a_text, spec.n_parts);
    std::cout << nested::format_address(nested::scale(a, k), spec.n_parts) << "\n";
    return 0;
}

int run_eval(const SpaceOptions& opt, const std::string& a_text) {
    const SpaceSpec spec = load_space(opt);
    const Address a = nested::parse_address(a_text, spec.n_parts);
    std::cout << nested::eval_exact(a, spec.n_parts) << "\n";
    return 0;
}

int run_pair(const SpaceOptions& opt, const std::string& literal, long from_n, bool has_from,
             bool as_json) {
    const SpaceSpec spec = load_space(opt);
    if (has_from) {
        if (from_n < 0)
            throw nested::Error(nested::Errc::MalformedLiteral, "chart index must be >= 0");
        nested::ChartPair p;
        p.n = static_cast<std::size_t>(from_n);
        p.omega = nested::parse_word(literal, spec.n_parts);
        const Address a = nested::from_pair(p);
        if (as_json) {
            json out;
            out["address"] = nested::format_address(a, spec.n_parts);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << nested::format_address(a, spec.n_parts) << "\n";
        }
        return 0;
    }
    const Address a = nested::parse_address(literal, spec.n_parts);
    const nested::ChartPair p = nested::to_pair(a);
    if (as_json) {
        json out;
        out["n"] = p.n;
        out["omega"] = nested::format_word(p.omega, spec.n_parts);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "(" << p.n << ", " << nested::format_word(p.omega, spec.n_parts) << ")\n";
    }
    return 0;
}

int run_graph(const SpaceOptions& opt, const std::string& root_text, unsigned level,
              const std::string& mode_text, const std::string& format, const std::string& output) {
    const SpaceSpec spec = load_space(opt);
    const nested::Cell root = parse_root(root_text, spec.n_parts);
    const nested::GraphMode mode = mode_text == "cell" ? nested::GraphMode::CellGraph
                                                       : nested::GraphMode::VertexGraph;
    const nested::LevelGraph g = nested::build_graph(spec, root, level, mode, opt.depth, opt.cap);
    std::string content;
    if (format == "dot") content = nested::to_dot(g);
    else if (format == "json") content = nested::to_json(g);
    else if (format == "graphml") content = nested::to_graphml(g);
    else if (format == "csv") content = nested::to_csv(g);
    else throw nested::Error(nested::Errc::MalformedLiteral, "unknown format '" + format + "'");
    write_output(output, content);
    const nested::Connectivity conn = nested::graph_connected(g);
    std::ostream& counts = output.empty() ? std::cerr : std::cout;
    counts << "nodes=" << g.nodes.size() << " edges=" << g.edges.size()
           << " components=" << conn.components << "\n";
    return 0;
}

int run_classify(const SpaceOptions& opt, bool as_json) {
    const SpaceSpec spec = load_space(opt);
    json parts = json::array();
    for (nested::Digit i = 0; i < spec.n_parts; ++i) {
        const nested::PartClass pc = nested::classify_part(i, spec, opt.depth, opt.cap);
        if (as_json) {
            json p;
            p["part"] = i;
            p["class"] = nested::part_class_name(pc);
            parts.push_back(p);
        } else {
            std::cout << "part " << i << ": " << nested::part_class_name(pc) << "\n";
        }
    }
    if (as_json) std::cout << parts.dump(2) << "\n";
    return 0;
}

int run_parse(const std::string& path) {
    const std::string text = read_file(path);
    const nested::DocumentParse doc = nested::parse_document(text);
    for (const nested::Diagnostic& d : doc.diagnostics)
        std::cerr << path << ":" << nested::render_diagnostic(text, d) << "\n";
    if (!doc.ok()) return 2;
    std::cout << "ok: " << doc.spaces.size() << " space(s)\n";
    return 0;
}

int run_fmt(const std::string& path, const std::string& output) {
    const std::string text = read_file(path);
    const nested::DocumentParse doc = nested::parse_document(text);
    for (const nested::Diagnostic& d : doc.diagnostics)
        std::cerr << path << ":" << nested::render_diagnostic(text, d) << "\n";
    if (!doc.ok()) return 2;
    std::string content;
    for (const SpaceSpec& s : doc.spaces) content += nested::format_spec(s);
    write_output(output, content);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coordinates and connectivity for self-similar nested spaces"};
    app.require_subcommand(1);
    std::function<int()> run;

    SpaceOptions opt;
    std::string a_text, b_text, literal, root_text = "0", mode_text = "vertex";
    std::string format = "dot", output, path;
    long k = 0, from_n = 0;
    unsigned level = 1;
    bool as_json = false;

    auto* eq = app.add_subcommand("eq", "decide equivalence of two addresses");
    add_space_options(eq, opt);
    eq->add_option("a", a_text, "address literal")->required();
    eq->add_option("b", b_text, "address literal")->required();
    eq->add_flag("--json", as_json, "JSON output");
    eq->callback([&] { run = [&] { return run_eq(opt, a_text, b_text, as_json); }; });

    auto* cls = app.add_subcommand("class", "list the equivalence class of an address");
    add_space_options(cls, opt);
    cls->add_option("a", a_text, "address literal")->required();
    cls->add_flag("--json", as_json, "JSON output");
    cls->callback([&] { run = [&] { return run_class(opt, a_text, as_json); }; });

    auto* imp = app.add_subcommand("impose", "set-valued imposition a |> b");
    add_space_options(imp, opt);
    imp->add_option("a", a_text, "address literal")->required();
    imp->add_option("b", b_text, "address literal")->required();
    imp->add_flag("--json", as_json, "JSON output");
    imp->callback([&] { run = [&] { return run_impose(opt, a_text, b_text, as_json); }; });

    auto* sc = app.add_subcommand("scale", "multiply an address by N^k (use -- before negative k)");
    add_space_options(sc, opt);
    sc->add_option("a", a_text, "address literal")->required();
    sc->add_option("k", k, "scale exponent")->required();
    sc->callback([&] { run = [&] { return run_scale(opt, a_text, k); }; });

    auto* ev = app.add_subcommand("eval", "exact rational value of an address");
    add_space_options(ev, opt);
    ev->add_option("a", a_text, "address literal")->required();
    ev->callback([&] { run = [&] { return run_eval(opt, a_text); }; });

    auto* pr = app.add_subcommand("pair", "chart pair (n, omega) of an address, or its inverse");
    add_space_options(pr, opt);
    pr->add_option("literal", literal, "address literal (or omega word with --from)")->required();
    auto* from_opt = pr->add_option("--from", from_n, "interpret literal as omega at chart index n");
    pr->add_flag("--json", as_json, "JSON output");
    pr->callback([&] {
        const bool has_from = from_opt->count() > 0;
        run = [&, has_from] { return run_pair(opt, literal, from_n, has_from, as_json); };
    });

    auto* gr = app.add_subcommand("graph", "build and export a level-M graph");
    add_space_options(gr, opt);
    gr->add_option("--root", root_text, "root cell word, optionally word@scale")
        ->capture_default_str();
    gr->add_option("--level", level, "subdivision level M")->required();
    gr->add_option("--mode", mode_text, "vertex or cell")
        ->check(CLI::IsMember({"vertex", "cell"}))
        ->capture_default_str();
    gr->add_option("--format", format, "dot, json, graphml, or csv")
        ->check(CLI::IsMember({"dot", "json", "graphml", "csv"}))
        ->capture_default_str();
    gr->add_option("-o,--output", output, "output path (default: stdout)");
    gr->callback([&] {
        run = [&] { return run_graph(opt, root_text, level, mode_text, format, output); };
    });

    auto* cf = app.add_subcommand("classify", "edge/middling/isolated classification per part");
    add_space_options(cf, opt);
    cf->add_flag("--json", as_json, "JSON output");
    cf->callback([&] { run = [&] { return run_classify(opt, as_json); }; });

    auto* ps = app.add_subcommand("parse", "validate a .nsp document");
    ps->add_option("file", path, "path to a .nsp document")->required();
    ps->callback([&] { run = [&] { return run_parse(path); }; });

    auto* fm = app.add_subcommand("fmt", "canonically format a .nsp document");
    fm->add_option("file", path, "path to a .nsp document")->required();
    fm->add_option("-o,--output", output, "output path (default: stdout)");
    fm->callback([&] { run = [&] { return run_fmt(path, output); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run ? run() : 2;
    } catch (const nested::Error& e) {
        print_error(e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error(e.what());
        return 2;
    }
}
