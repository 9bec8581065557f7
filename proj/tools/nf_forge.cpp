// nf-forge: command line front end.
//
//   stratify        decide stratifiability of one formula or a corpus file
//   eval            run a closed arithmetic term inside a finite universe
//   check           run the law catalog and report per-law results
//   universe-stats  show level sizes and cardinal family sizes
//
// Exit codes: 0 success, 1 a decision or check came out negative, 2 bad
// input (usage, formula syntax, corpus syntax), 3 resource limits (a level
// or budget the requested universe cannot represent).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <nfkit/cardinal.hpp>
#include <nfkit/catalog.hpp>
#include <nfkit/parse.hpp>
#include <nfkit/stratify.hpp>
#include <nfkit/universe.hpp>

namespace {

using namespace nfkit;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw CorpusError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- stratify -------------------------------------------------------------

void print_indices(const StratResult& r) {
    for (const auto& [name, idx] : r.var_index)
        std::cout << "  " << name << " : " << idx << "\n";
}

int run_stratify(const std::string& formula, const std::string& corpus_path, const std::string& wrt) {
    if (!corpus_path.empty()) {
        auto rows = run_batch(parse_corpus(slurp(corpus_path)));
        std::size_t bad = 0;
        for (const auto& row : rows) {
            std::cout << (row.matches ? "ok      " : "MISMATCH") << "  " << row.rec.name << "  ["
                      << verdict_name(row.verdict) << "]";
            if (!row.matches) {
                std::cout << "  expected " << (row.rec.expect_pass ? "PASS" : "FAIL");
                if (!row.detail.empty()) std::cout << "  " << row.detail;
                ++bad;
            }
            std::cout << "\n";
        }
        std::cout << rows.size() << " records, " << (rows.size() - bad) << " as recorded\n";
        return bad == 0 ? 0 : 1;
    }

    auto f = parse_formula(formula);
    StratResult r = wrt.empty() ? stratify(f) : stratify_wrt(f, wrt);
    std::cout << verdict_name(r.verdict);
    if (r.verdict == Verdict::weakly_stratified && r.eigen_index)
        std::cout << " (eigenvariable at index " << *r.eigen_index << ")";
    std::cout << "\n";
    if (r.verdict == Verdict::unstratified) {
        std::cout << "witness cycle:\n";
        for (const auto& line : r.conflict_text) std::cout << "  " << line << "\n";
        return 1;
    }
    print_indices(r);
    return 0;
}

// --- eval -----------------------------------------------------------------

bool mentions_exp2(const TermPtr& t) {
    if (t->kind == Term::Kind::app) {
        if (t->fn == Fn::exp2) return true;
        for (const auto& a : t->args)
            if (mentions_exp2(a)) return true;
    }
    return false;
}

SetVal eval_term(Arith& A, const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::konst:
            switch (t->k) {
                case Konst::lambda: return A.lambda();
                case Konst::zero:   return A.from_size(0);
                case Konst::one:    return A.from_size(1);
                case Konst::two:    return A.from_size(2);
                case Konst::three:  return A.from_size(3);
                case Konst::four:   return A.from_size(4);
                default:
                    throw std::invalid_argument(std::string("eval: ") + konst_name(t->k) +
                                                " is not a numeral");
            }
        case Term::Kind::app:
            switch (t->fn) {
                case Fn::succ:  return A.succ(eval_term(A, t->args[0]));
                case Fn::plus:  return A.add(eval_term(A, t->args[0]), eval_term(A, t->args[1]));
                case Fn::times: return A.mul(eval_term(A, t->args[0]), eval_term(A, t->args[1]));
                case Fn::exp2:  return A.exp2(eval_term(A, t->args[0]));
                case Fn::t_op:  return A.t_op(eval_term(A, t->args[0]));
                default:
                    throw std::invalid_argument(std::string("eval: ") + fn_name(t->fn) +
                                                " is not an arithmetic operator");
            }
        default:
            throw std::invalid_argument("eval: only closed arithmetic terms are evaluable");
    }
}

std::string numeral_name(const SymCardinal& c) {
    if (c.overflow) return "OVERFLOW (Lambda)";
    static const char* names[] = {"zero", "one",  "two", "three", "four",
                                  "five", "six",  "seven", "eight"};
    if (c.size < sizeof(names) / sizeof(names[0])) return names[c.size];
    return "card:" + std::to_string(c.size);
}

int run_eval(const std::string& text, std::size_t n, int cap, int home, const std::string& expect) {
    auto t = parse_term(text);
    auto u = build_universe(n, cap);
    if (home == 0) home = mentions_exp2(t) ? 3 : 2;
    Arith A(u, home);
    SetVal v = eval_term(A, t);
    Arith at_result(u, v.level);
    SymCardinal s = at_result.sym(v);
    std::string name = numeral_name(s);
    std::cout << "value: " << name << "\n";
    std::cout << "sym: " << to_string(s) << "\n";
    std::cout << "members: " << v.card() << "\n";
    if (!expect.empty() && expect != name) {
        std::cerr << "expected " << expect << ", got " << name << "\n";
        return 1;
    }
    return 0;
}

// --- check ----------------------------------------------------------------

Mutation parse_mutation(const std::string& name) {
    if (name == "none") return Mutation::none;
    if (name == "add_drop_disjoint") return Mutation::add_drop_disjoint;
    if (name == "fclosure_drop_inhabited") return Mutation::fclosure_drop_inhabited;
    throw std::invalid_argument("unknown mutation: " + name);
}

int run_check(std::size_t n, int cap, const std::string& select, const std::string& format,
              int jobs, const std::string& mutate, bool list, bool oos, const std::string& out_path) {
    if (list) {
        std::cout << audit_table();
        return 0;
    }
    if (oos) {
        for (const auto& row : out_of_scope())
            std::cout << row.id << "\t" << row.reason << "\n";
        return 0;
    }
    auto u = build_universe(n, cap);
    Report rep = run_catalog(u, select, jobs, parse_mutation(mutate));
    std::string text = format == "json" ? report_json(rep) : report_tsv(rep);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out.good()) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    std::cerr << "pass " << rep.count(CheckStatus::pass) << ", fail " << rep.count(CheckStatus::fail)
              << ", skip " << rep.count(CheckStatus::skip) << "\n";
    return rep.count(CheckStatus::fail) == 0 ? 0 : 1;
}

// --- universe-stats ---------------------------------------------------------

int run_stats(std::size_t n, int cap) {
    auto u = build_universe(n, cap);
    for (int l = 0; l <= u.max_level; ++l)
        std::cout << "level " << l << ": " << u.size(l) << "\n";
    for (int home = 2; home <= u.max_level + 1; ++home) {
        Arith A(u, home);
        std::cout << "home " << home << ": capacity " << A.member_capacity() << ", finite cardinals "
                  << A.fcard().size() << ", semifinite " << A.semifinite().size() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model workbench for stratified set theory"};
    app.require_subcommand(1);

    std::string formula, corpus_path, wrt;
    auto* s_strat = app.add_subcommand("stratify", "decide stratifiability");
    s_strat->add_option("formula", formula, "formula text");
    s_strat->add_option("--corpus", corpus_path, "corpus file of NAME/EXPECT/MODE/FORMULA records");
    s_strat->add_option("--wrt", wrt, "eigenvariable for weak stratification");

    std::string term_text, expect;
    std::size_t en = 3;
    int ecap = 2, ehome = 0;
    auto* s_eval = app.add_subcommand("eval", "evaluate a closed arithmetic term");
    s_eval->add_option("term", term_text, "term text")->required();
    s_eval->add_option("--n", en, "number of atoms");
    s_eval->add_option("--level-cap", ecap, "deepest enumerated level");
    s_eval->add_option("--home-level", ehome, "cardinal home level (default: 3 when the term uses exp2, else 2)");
    s_eval->add_option("--expect", expect, "fail unless the value prints as this numeral");

    std::size_t cn = 3;
    int ccap = 2, jobs = 1;
    std::string select = "*", format = "tsv", mutate = "none", out_path;
    bool list = false, oos = false;
    auto* s_check = app.add_subcommand("check", "run the law catalog");
    s_check->add_option("--n", cn, "number of atoms");
    s_check->add_option("--level-cap", ccap, "deepest enumerated level");
    s_check->add_option("--select", select, "glob over catalog ids");
    s_check->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    s_check->add_option("--jobs", jobs, "worker threads")->envname("NF_FORGE_JOBS");
    s_check->add_option("--mutate", mutate, "deliberate defect to inject");
    s_check->add_flag("--list", list, "print the catalog as an audit table and exit");
    s_check->add_flag("--out-of-scope", oos, "print the ids excluded from model checking and exit");
    s_check->add_option("--out", out_path, "write the report here instead of stdout");

    std::size_t un = 3;
    int ucap = 2;
    auto* s_stats = app.add_subcommand("universe-stats", "show level and family sizes");
    s_stats->add_option("--n", un, "number of atoms");
    s_stats->add_option("--level-cap", ucap, "deepest enumerated level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*s_strat) {
            if (formula.empty() == corpus_path.empty()) {
                std::cerr << "stratify needs a formula or --corpus, not both\n";
                return 2;
            }
            return run_stratify(formula, corpus_path, wrt);
        }
        if (*s_eval) return run_eval(term_text, en, ecap, ehome, expect);
        if (*s_check) return run_check(cn, ccap, select, format, jobs, mutate, list, oos, out_path);
        if (*s_stats) return run_stats(un, ucap);
    } catch (const ParseError& e) {
        std::cerr << "syntax: " << e.what() << "\n";
        return 2;
    } catch (const CorpusError& e) {
        std::cerr << "corpus: " << e.what() << "\n";
        return 2;
    } catch (const UniverseError& e) {
        std::cerr << "resource: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
