// End-to-end tests of the `nested` binary. The executable path arrives in
// the NESTED_CLI environment variable (set by CTest).

#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

#include "nested/dsl.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
    const char* bin = std::getenv("NESTED_CLI");
    if (!bin) throw std::runtime_error("NESTED_CLI not set");
    const std::string cmd = std::string("'") + bin + "' " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    CliResult result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace

TEST_CASE("cli eq: verdict, witness chain, exit codes") {
    {
        const CliResult r = run_cli("eq --builtin 'real_line(10)' '0.(9)' '1.(0)'");
        CHECK(r.exit_code == 0);
        CHECK(r.output == "Equivalent\n0.(9)\n1.(0)\n");
    }
    {
        const CliResult r = run_cli("eq --builtin cantor '0.(1)' '0.(1)'");
        CHECK(r.exit_code == 0);
        CHECK(r.output == "Equal\n");
    }
    {
        const CliResult r = run_cli("eq --builtin gasket '0.(1)' '2.(0)'");
        CHECK(r.exit_code == 1);
        CHECK(r.output == "NotFoundUpToDepth\n");
    }
    {
        const CliResult r = run_cli("eq --builtin gasket '0.(1)' '3.(0)'");
        CHECK(r.exit_code == 2);
    }
    {
        const CliResult r = run_cli("eq --json --builtin 'real_line(2)' '0.(1)' '1.(0)'");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("\"result\": \"Equivalent\"") != std::string::npos);
    }
}

TEST_CASE("cli class/scale/eval/pair/impose/classify") {
    CHECK(run_cli("class --builtin 'real_line(10)' '1.(0)'").output == "1.(0)\n0.(9)\n");
    CHECK(run_cli("scale --builtin 'real_line(2)' '1.(0)' -- -2").output == "0.01(0)\n");
    CHECK(run_cli("scale --builtin 'real_line(3)' '0.(21)' 2").output == "21.(21)\n");
    CHECK(run_cli("eval --builtin 'real_line(10)' '0.(9)'").output == "1\n");
    CHECK(run_cli("eval --builtin 'real_line(2)' '0.(01)'").output == "1/3\n");
    CHECK(run_cli("pair --builtin 'real_line(3)' '0.012(0)'").output == "(0, 0012(0))\n");
    CHECK(run_cli("pair --builtin 'real_line(3)' --from 2 '120(0)'").output == "120.(0)\n");
    {
        const CliResult r = run_cli("impose --builtin 'real_line(2)' '10.(0)' '1.(0)'");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("11.(0)") != std::string::npos);
        CHECK(r.output == "1.(1): 1.(1) 10.(0)\n10.(1): 10.(1) 11.(0)\n");
    }
    CHECK(run_cli("classify --builtin cantor").output ==
          "part 0: IsolatedPart\npart 1: IsolatedPart\n");
    CHECK(run_cli("classify --builtin gasket").output ==
          "part 0: MiddlingPart\npart 1: EdgePart\npart 2: EdgePart\n");
}

TEST_CASE("cli graph: exports and counts") {
    {
        const CliResult r = run_cli("graph --builtin cantor --root 0 --level 1 "
                                    "--mode vertex --format dot");
        CHECK(r.exit_code == 0);
        CHECK(r.output == "graph G {\n"
                          "v0 [label=\"0.(0)\"]\n"
                          "v1 [label=\"0.0(1)\"]\n"
                          "v2 [label=\"0.1(0)\"]\n"
                          "v3 [label=\"0.(1)\"]\n"
                          "v0 -- v1\n"
                          "v2 -- v3\n"
                          "}\n");
    }
    {
        const auto out = std::filesystem::temp_directory_path() / "nested_cli_g.json";
        const CliResult r = run_cli("graph --builtin gasket_compact --root 0 --level 1 "
                                    "--format json -o " + out.string());
        CHECK(r.exit_code == 0);
        CHECK(r.output == "nodes=6 edges=9 components=1\n");
        std::filesystem::remove(out);
    }
    {
        // Byte-determinism across runs.
        const std::string args = "graph --builtin gasket --root 0 --level 2 --format graphml";
        CHECK(run_cli(args).output == run_cli(args).output);
    }
    {
        const CliResult r = run_cli("graph --builtin gasket --root 0 --level 99 --format dot");
        CHECK(r.exit_code == 2);
    }
    {
        const CliResult r = run_cli("graph --builtin 'real_line(2)' --root 0 --level 3 "
                                    "--mode vertex --format csv");
        CHECK(r.exit_code == 0);
        CHECK(r.output == "0,1\n1,2\n2,3\n3,4\n4,5\n5,6\n6,7\n7,8\n");
    }
}

TEST_CASE("cli parse and fmt") {
    const std::string source = "space gasket {\nparts 3;\nrule 1.(0)=0.(1);\n"
                               "rule 0.(2)=2.(0);\nrule 2.(1)=1.(2);\n"
                               "corner 0.(0);\ncorner 1.(1);\ncorner 2.(2);\n}\n";
    const auto good = write_temp("nested_cli_good.nsp", source);
    const auto bad = write_temp("nested_cli_bad.nsp", "space x { parts 3; rule 0.(9) = 1.(0); }");
    {
        const CliResult r = run_cli("parse " + good.string());
        CHECK(r.exit_code == 0);
        CHECK(r.output == "ok: 1 space(s)\n");
    }
    {
        const CliResult r = run_cli("parse " + bad.string(), true);
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("error") != std::string::npos);
        CHECK(r.output.find("DigitOutOfRange") != std::string::npos);
    }
    {
        const CliResult r = run_cli("fmt " + good.string());
        CHECK(r.exit_code == 0);
        CHECK(r.output == nested::format_spec(nested::builtin("gasket")));
    }
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST_CASE("cli: malformed invocations exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("eq --builtin gasket '0.(1)'").exit_code == 2);      // missing operand
    CHECK(run_cli("eq --builtin nope '0.(1)' '1.(0)'").exit_code == 2);
    CHECK(run_cli("graph --builtin gasket").exit_code == 2);           // missing --level
    CHECK(run_cli("eq '0.(1)' '1.(0)'").exit_code == 2);               // no space source
    CHECK(run_cli("eq --builtin gasket --spec x.nsp '0.(1)' '1.(0)'").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("graph --help").exit_code == 0);
}
