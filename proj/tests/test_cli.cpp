#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(BAROPS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.code = WEXITSTATUS(status);
    return res;
}

std::string data_file(const std::string& name) {
    return std::string(BAROPS_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("surjection subcommands print canonical text") {
    auto table = run_cli("surj table 1,4,2,5,3,2,3");
    CHECK(table.code == 0);
    CHECK(table.out == "1,4,2 ; 5,3 ; 2,3\ncaesuras: 3,5\n");

    auto diff = run_cli("surj diff 1,2,1");
    CHECK(diff.code == 0);
    CHECK(diff.out == "1,2 + 2,1\n");

    auto comp = run_cli("surj compose 1,2,1 1 1,2");
    CHECK(comp.code == 0);
    CHECK(comp.out == "1,2,3,2 + 1,3,1,2\n");
}

TEST_CASE("permutation-tuple subcommands print canonical text") {
    auto th = run_cli("be theta 2");
    CHECK(th.code == 0);
    CHECK(th.out == "1 2 | 2 1 | 1 2\n");

    auto diff = run_cli("be diff \"1 2 | 2 1\"");
    CHECK(diff.code == 0);
    CHECK(diff.out == "1 2 + 2 1\n");

    auto tr1 = run_cli("tr \"1 2 | 2 1\"");
    CHECK(tr1.code == 0);
    CHECK(tr1.out == "1,2,1\n");

    auto tr0 = run_cli("tr \"2 1\"");
    CHECK(tr0.code == 0);
    CHECK(tr0.out == "2,1\n");
}

TEST_CASE("bar subcommands print canonical text") {
    auto adm = run_cli("bar admissible --w \"1 2\" --sizes 2,1");
    CHECK(adm.code == 0);
    CHECK(adm.out == "3,1,3,2,3\n");

    auto adm11 = run_cli("bar admissible --w \"1 2\" --sizes 1,1");
    CHECK(adm11.code == 0);
    CHECK(adm11.out == "2,1,2\n");

    const std::string alg = " --algebra " + data_file("truncpoly_x3.alg");
    auto cup0 = run_cli("bar cup" + alg + " --d 0 --words [x] [xx]");
    CHECK(cup0.code == 0);
    CHECK(cup0.out == "[x|xx] + [xx|x]\n");

    auto zero = run_cli("bar cup" + alg + " --d 0 --words [x] [x]");
    CHECK(zero.code == 0);
    CHECK(zero.out == "0\n");

    auto op = run_cli("bar op" + alg + " --w 1 --words \"[x|x]\"");
    CHECK(op.code == 0);
    CHECK(op.out == "[x|x]\n");
}

TEST_CASE("bar homology over the command line") {
    auto h = run_cli("bar homology --algebra " + data_file("truncpoly_x3.alg") +
                     " --max-grade 5");
    CHECK(h.code == 0);
    CHECK(h.out == "H^0: 1\nH^1: 1\nH^2: 0\nH^3: 0\nH^4: 1\nH^5: 1\n");

    // flat letters need the cap
    auto uncapped = run_cli("bar homology --algebra " + data_file("exterior.alg") +
                            " --max-grade 1");
    CHECK(uncapped.code == 1);
    auto capped = run_cli("bar homology --algebra " + data_file("exterior.alg") +
                          " --max-grade 1 --max-letters 2");
    CHECK(capped.code == 0);
    CHECK(capped.out == "H^0: 3\nH^1: 0\n");
}

TEST_CASE("algebra actions over the command line") {
    const std::string alg = " --algebra " + data_file("truncpoly_x3.alg");
    auto act = run_cli("surj act" + alg + " 1,2 x x");
    CHECK(act.code == 0);
    CHECK(act.out == "xx\n");

    auto sums = run_cli("surj act" + alg + " 1,2 one+x one+x");
    CHECK(sums.code == 0);
    CHECK(sums.out == "one + xx\n");

    auto be_act = run_cli("be act" + alg + " \"1 2\" x x");
    CHECK(be_act.code == 0);
    CHECK(be_act.out == "xx\n");

    auto cochain = run_cli("surj act --algebra " + data_file("simplex2.sset") +
                           " 1,2 e01 e12");
    CHECK(cochain.code == 0);
    CHECK(cochain.out == "t\n");
}

TEST_CASE("exit codes separate domain errors from parse errors") {
    CHECK(run_cli("surj diff 1,1,2").code == 1);  // degenerate word
    CHECK(run_cli("surj diff 1,3").code == 1);    // not surjective
    CHECK(run_cli("surj diff 1,a").code == 2);
    CHECK(run_cli("surj compose 1,2 3 1").code == 1); // slot out of range
    CHECK(run_cli("be theta -- -1").code == 2);
    CHECK(run_cli("be diff \"1 2 | 1 2\"").code == 1); // degenerate simplex
    CHECK(run_cli("tr \"1 2 | 2  1 |\"").code == 2);
    CHECK(run_cli("bar cup --algebra " + data_file("truncpoly_x3.alg") +
                  " --d 0 --words [x] [one]").code == 1);
    CHECK(run_cli("bar op --algebra " + data_file("truncpoly_x3.alg") +
                  " --w \"1 2\" --words [x]").code == 1); // arity mismatch
    CHECK(run_cli("surj act --algebra " + data_file("missing.alg") + " 1,2 x x").code == 2);
    CHECK(run_cli("bogus").code == 2);
    CHECK(run_cli("surj").code == 2); // subcommand required
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("surj --help").code == 0);
}

TEST_CASE("printed sums parse back into the same commands") {
    // composing the composite with something else accepts the printed form
    auto first = run_cli("surj compose 1,2 1 1,2");
    CHECK(first.code == 0);
    CHECK(first.out == "1,2,3\n");
    auto again = run_cli("surj diff 1,2,3");
    CHECK(again.code == 0);
    CHECK(again.out == "0\n");
}
