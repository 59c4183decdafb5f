#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "barops/bar.hpp"
#include "barops/barratt_eccles.hpp"
#include "barops/builtin.hpp"
#include "barops/errors.hpp"
#include "barops/simplicial.hpp"
#include "barops/surjection.hpp"
#include "barops/sweeps.hpp"
#include "barops/table_reduction.hpp"

namespace {

using namespace barops;

// Owns whichever concrete algebra the file described.
struct LoadedAlgebra {
    std::shared_ptr<const SurjAlgebra> alg;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Algebra files are commutative multiplication tables (basis/unit/mul/diff
// directives); simplicial files (simplex/reduced directives) load as their
// cochain algebras.
LoadedAlgebra load_algebra(const std::string& path) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "simplex" || tok == "reduced")
            return {std::make_shared<CochainAlgebra>(parse_simplicial_set(text))};
        if (tok == "basis" || tok == "unit" || tok == "mul" || tok == "diff")
            return {std::make_shared<CommutativeAlgebra>(parse_commutative_spec(text))};
        throw ParseError(path + ": unrecognized directive '" + tok + "'");
    }
    throw ParseError(path + ": empty file");
}

// The option parser unwraps a value of the form [...] around multi-value
// options; restore the brackets so bar words keep their [a|b|c] syntax.
std::string rewrap_bar_token(const std::string& tok) {
    if (!tok.empty() && tok.front() == '[') return tok;
    return "[" + tok + "]";
}

// Elements are basis names, or sums of them joined by '+'.
ElemSum parse_elem(const SurjAlgebra& A, const std::string& text) {
    ElemSum out;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, '+')) {
        size_t a = part.find_first_not_of(" \t");
        size_t b = part.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty summand in element: " + text);
        out.add(A.id_of(part.substr(a, b - a + 1)));
    }
    return out;
}

std::string elem_to_string(const SurjAlgebra& A, const ElemSum& x) {
    if (x.is_zero()) return "0";
    std::vector<std::string> names;
    for (int id : x) names.push_back(A.basis_name(id));
    std::sort(names.begin(), names.end());
    std::string out;
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out += " + ";
        out += names[i];
    }
    return out;
}

int run_sweeps(const std::vector<sweeps::SweepResult>& results) {
    long failures = 0, checks = 0;
    for (const auto& r : results) {
        checks += r.checks;
        failures += r.failures;
        if (r.ok()) {
            std::cout << r.name << ": pass (" << r.checks << " checks)\n";
        } else {
            std::cout << r.name << ": FAIL (" << r.failures << "/" << r.checks
                      << ")  first: " << r.first_failure << "\n";
        }
    }
    std::cout << results.size() << " sweeps, " << checks << " checks, " << failures
              << " failures\n";
    return failures == 0 ? 0 : 1;
}

struct Args {
    std::string word, word2, simplex, simplex2, algebra_path, sizes;
    std::vector<std::string> words, elems;
    int slot = 1, d = 0, theta_d = 0, max_grade = 0, jobs = 1;
    int max_letters = -1;
    std::string suite;
};

int real_main(int argc, char** argv) {
    CLI::App app{"F2 operadic algebra: surjection and permutation-tuple operads, "
                 "table reduction, bar-construction operations, homology"};
    app.require_subcommand(1);
    Args a;

    auto* surj = app.add_subcommand("surj", "surjection operad");
    surj->require_subcommand(1);
    auto* s_diff = surj->add_subcommand("diff", "differential of a word");
    s_diff->add_option("word", a.word, "word like 1,2,1")->required();
    auto* s_table = surj->add_subcommand("table", "row arrangement and caesuras");
    s_table->add_option("word", a.word)->required();
    auto* s_comp = surj->add_subcommand("compose", "partial composite u o_k v");
    s_comp->add_option("u", a.word)->required();
    s_comp->add_option("slot", a.slot)->required();
    s_comp->add_option("v", a.word2)->required();
    auto* s_act = surj->add_subcommand("act", "act on algebra elements");
    s_act->add_option("--algebra", a.algebra_path)->required();
    s_act->add_option("word", a.word)->required();
    s_act->add_option("elems", a.elems, "one element per slot")->required();

    auto* be = app.add_subcommand("be", "permutation-tuple operad");
    be->require_subcommand(1);
    auto* b_diff = be->add_subcommand("diff", "differential of a simplex");
    b_diff->add_option("simplex", a.simplex, "levels like \"1 2 | 2 1\"")->required();
    auto* b_diag = be->add_subcommand("diag", "coproduct of a simplex");
    b_diag->add_option("simplex", a.simplex)->required();
    auto* b_comp = be->add_subcommand("compose", "partial composite x o_k y");
    b_comp->add_option("x", a.simplex)->required();
    b_comp->add_option("slot", a.slot)->required();
    b_comp->add_option("y", a.simplex2)->required();
    auto* b_theta = be->add_subcommand("theta", "arity-2 generator of a degree");
    b_theta->add_option("d", a.theta_d)->required()->check(CLI::NonNegativeNumber);
    auto* b_act = be->add_subcommand("act", "act on algebra elements (through table reduction)");
    b_act->add_option("--algebra", a.algebra_path)->required();
    b_act->add_option("simplex", a.simplex)->required();
    b_act->add_option("elems", a.elems)->required();

    auto* tr_cmd = app.add_subcommand("tr", "table reduction of a simplex");
    tr_cmd->add_option("simplex", a.simplex)->required();

    auto* bar = app.add_subcommand("bar", "bar construction");
    bar->require_subcommand(1);
    auto* bar_adm = bar->add_subcommand("admissible", "admissible surjections of a simplex");
    bar_adm->add_option("--w", a.simplex)->required();
    bar_adm->add_option("--sizes", a.sizes, "letter counts like 2,1")->required();
    auto* bar_op = bar->add_subcommand("op", "operation of a simplex on bar words");
    bar_op->add_option("--algebra", a.algebra_path)->required();
    bar_op->add_option("--w", a.simplex)->required();
    bar_op->add_option("--words", a.words, "bar words like [x|x], one per slot")->required();
    auto* bar_cup = bar->add_subcommand("cup", "degree-d cup operation on two bar words");
    bar_cup->add_option("--algebra", a.algebra_path)->required();
    bar_cup->add_option("--d", a.d)->required()->check(CLI::NonNegativeNumber);
    bar_cup->add_option("--words", a.words)->required()->expected(2);
    auto* bar_hom = bar->add_subcommand("homology", "homology dimensions of the bar complex");
    bar_hom->add_option("--algebra", a.algebra_path)->required();
    bar_hom->add_option("--max-grade", a.max_grade)->required()->check(CLI::NonNegativeNumber);
    bar_hom->add_option("--max-letters", a.max_letters,
                        "letter bound, required when grade levels are infinite");

    auto* verify = app.add_subcommand("verify", "invariant sweeps");
    verify->add_option("suite", a.suite)->required()
        ->check(CLI::IsMember({"operads", "tr", "bar", "hopf", "all"}));
    verify->add_option("--jobs", a.jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (s_diff->parsed()) {
            auto u = Surjection::make(parse_word(a.word));
            if (!u) throw DomainError("degenerate word represents zero");
            std::cout << surjection_sum_to_string(differential(*u)) << "\n";
        } else if (s_table->parsed()) {
            auto u = Surjection::make(parse_word(a.word));
            if (!u) throw DomainError("degenerate word represents zero");
            Table t = table_arrangement(*u);
            std::cout << table_to_string(t) << "\n";
            std::cout << "caesuras: " << word_to_string(t.caesuras) << "\n";
        } else if (s_comp->parsed()) {
            auto u = Surjection::make(parse_word(a.word));
            auto v = Surjection::make(parse_word(a.word2));
            if (!u || !v) throw DomainError("degenerate word represents zero");
            if (a.slot < 1 || a.slot > u->arity()) throw DomainError("slot out of range");
            std::cout << surjection_sum_to_string(compose(*u, a.slot, *v)) << "\n";
        } else if (s_act->parsed()) {
            auto loaded = load_algebra(a.algebra_path);
            auto u = Surjection::make(parse_word(a.word));
            if (!u) throw DomainError("degenerate word represents zero");
            if (static_cast<int>(a.elems.size()) != u->arity())
                throw DomainError("need one element per slot");
            std::vector<ElemSum> inputs;
            for (const auto& e : a.elems) inputs.push_back(parse_elem(*loaded.alg, e));
            std::cout << elem_to_string(*loaded.alg, loaded.alg->apply_linear(*u, inputs))
                      << "\n";
        } else if (b_diff->parsed()) {
            std::cout << perm_simplex_sum_to_string(differential(parse_perm_simplex(a.simplex)))
                      << "\n";
        } else if (b_diag->parsed()) {
            std::cout << perm_simplex_pair_sum_to_string(diagonal(parse_perm_simplex(a.simplex)))
                      << "\n";
        } else if (b_comp->parsed()) {
            auto x = parse_perm_simplex(a.simplex);
            auto y = parse_perm_simplex(a.simplex2);
            if (a.slot < 1 || a.slot > x.arity()) throw DomainError("slot out of range");
            std::cout << perm_simplex_sum_to_string(compose(x, a.slot, y)) << "\n";
        } else if (b_theta->parsed()) {
            std::cout << perm_simplex_to_string(theta(a.theta_d)) << "\n";
        } else if (b_act->parsed()) {
            auto loaded = load_algebra(a.algebra_path);
            auto x = parse_perm_simplex(a.simplex);
            if (static_cast<int>(a.elems.size()) != x.arity())
                throw DomainError("need one element per slot");
            std::vector<ElemSum> inputs;
            for (const auto& e : a.elems) inputs.push_back(parse_elem(*loaded.alg, e));
            ElemSum out;
            for (const auto& u : table_reduction(x)) out += loaded.alg->apply_linear(u, inputs);
            std::cout << elem_to_string(*loaded.alg, out) << "\n";
        } else if (tr_cmd->parsed()) {
            std::cout << surjection_sum_to_string(table_reduction(parse_perm_simplex(a.simplex)))
                      << "\n";
        } else if (bar_adm->parsed()) {
            auto w = parse_perm_simplex(a.simplex);
            auto sizes = parse_word(a.sizes);
            for (const auto& u : admissible_surjections(w, sizes))
                std::cout << word_to_string(u.word()) << "\n";
        } else if (bar_op->parsed()) {
            auto loaded = load_algebra(a.algebra_path);
            auto w = parse_perm_simplex(a.simplex);
            if (static_cast<int>(a.words.size()) != w.arity())
                throw DomainError("need one bar word per slot");
            std::vector<BarWord> words;
            for (const auto& t : a.words)
                words.push_back(parse_bar_word(*loaded.alg, rewrap_bar_token(t)));
            std::cout << bar_sum_to_string(*loaded.alg, full_op(*loaded.alg, w, words)) << "\n";
        } else if (bar_cup->parsed()) {
            auto loaded = load_algebra(a.algebra_path);
            BarWord c1 = parse_bar_word(*loaded.alg, rewrap_bar_token(a.words[0]));
            BarWord c2 = parse_bar_word(*loaded.alg, rewrap_bar_token(a.words[1]));
            std::cout << bar_sum_to_string(*loaded.alg, cup(*loaded.alg, a.d, c1, c2)) << "\n";
        } else if (bar_hom->parsed()) {
            auto loaded = load_algebra(a.algebra_path);
            std::optional<int> cap;
            if (a.max_letters >= 0) cap = a.max_letters;
            auto slice = bar_complex_slice(*loaded.alg, -a.max_grade, 0, cap);
            auto res = f2::homology_dims(slice, -a.max_grade, 1);
            for (int n = 0; n <= a.max_grade; ++n)
                std::cout << "H^" << n << ": " << res.dims.at(-n) << "\n";
        } else if (verify->parsed()) {
            std::vector<sweeps::SweepResult> results;
            if (a.suite == "operads") results = sweeps::sweep_operads(a.jobs);
            else if (a.suite == "tr") results = sweeps::sweep_tr();
            else if (a.suite == "bar") results = sweeps::sweep_bar();
            else if (a.suite == "hopf") results = sweeps::sweep_hopf();
            else results = sweeps::sweep_all(a.jobs);
            return run_sweeps(results);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return real_main(argc, argv); }
