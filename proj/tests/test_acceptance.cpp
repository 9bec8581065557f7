// Acceptance gate: one line per criterion, exit code = number of failures.
// Every tolerance and allow-list is pinned here, in code, next to the check
// that uses it.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nfkit/cardinal.hpp>
#include <nfkit/catalog.hpp>
#include <nfkit/parse.hpp>
#include <nfkit/stratify.hpp>
#include <nfkit/universe.hpp>

#include "gen.hpp"
#include "strat_oracle.hpp"

using namespace nfkit;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Gate {
    int failures = 0;
    void line(int no, const std::string& what, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << no << ": " << what;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

std::string slurp(const std::string& path, bool& ok) {
    std::ifstream in(path);
    if (!in.good()) { ok = false; return ""; }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- criterion 1: the stratification corpus, plus the recorded index shapes --

bool corpus_criterion(std::string& detail) {
    auto t0 = Clock::now();
    bool ok = true;

    bool read_ok = true;
    auto defs = run_batch(parse_corpus(slurp(NFKIT_CORPUS_DIR "/definitions.nf", read_ok)));
    auto negs = run_batch(parse_corpus(slurp(NFKIT_CORPUS_DIR "/negatives.nf", read_ok)));
    if (!read_ok) { detail = "corpus files unreadable"; return false; }
    if (defs.size() < 25 || negs.size() < 5) { detail = "corpus too small"; return false; }

    for (const auto& row : defs)
        if (!row.matches) { detail = "definitions: " + row.rec.name; return false; }
    for (const auto& row : negs) {
        if (!row.matches || row.verdict != Verdict::unstratified) { detail = "negatives: " + row.rec.name; return false; }
        if (!oracle::cycle_refutes(row.result.conflict)) { detail = "bad witness: " + row.rec.name; return false; }
    }

    // index shapes the definitions must take, spelled out
    auto vi = [](const StratResult& r, const char* v) { return r.var_index.at(v); };
    {
        auto r = stratify(parse_formula("z = <x,y> <-> z = {{x},{x,y}}"));
        ok = ok && r.verdict == Verdict::stratified && vi(r, "z") == vi(r, "x") + 2 && vi(r, "x") == vi(r, "y");
    }
    {
        auto r = stratify(parse_formula("<x,y,z> in w"));
        ok = ok && r.verdict == Verdict::stratified && vi(r, "w") == vi(r, "x") + 5;
    }
    {
        auto r = stratify(parse_formula(
            "z in plus(x,y) <-> exists u. exists v. (u in x & v in y & inter2(u,v) = Lambda & z = union2(u,v))"));
        ok = ok && r.verdict == Verdict::stratified && vi(r, "u") == vi(r, "z") && vi(r, "v") == vi(r, "z") &&
             vi(r, "x") == vi(r, "z") + 1 && vi(r, "y") == vi(r, "x");
    }
    {
        auto r = stratify(parse_formula(
            "w in exp2(m) <-> exists x. (usc(x) in m & exists f. "
            "((forall u in w. exists v in ssc(x). <u,v> in f) & (forall v in ssc(x). exists u in w. <u,v> in f)))"));
        int node = -1;
        for (const auto& [lab, idx] : r.node_index)
            if (lab == "exp2(m)") node = idx;
        ok = ok && r.verdict == Verdict::stratified && node == vi(r, "m");
    }
    {
        auto r = stratify(parse_formula(
            "z in succ(k) <-> exists x. exists a. (x in k & not a in x & z = union2(x,{a}))"));
        ok = ok && r.verdict == Verdict::stratified && vi(r, "a") + 1 == vi(r, "x") && vi(r, "x") == vi(r, "z") &&
             vi(r, "k") == vi(r, "z") + 1;
    }
    {
        auto r = stratify(parse_formula("<a,b> in f <-> (a in ssc(y) & b = union2(a,{x}))"));
        ok = ok && r.verdict == Verdict::stratified && vi(r, "f") == 4 && vi(r, "x") == 0 && vi(r, "a") == 1;
    }
    {
        auto r = stratify(parse_formula(
            "(<x,y,z> in w -> <x,succ(y),plus(z,x)> in w) & (x in SF -> (<x,zero,zero> in w & <zero,x,zero> in w))"));
        ok = ok && r.verdict == Verdict::stratified && vi(r, "x") == vi(r, "y") && vi(r, "y") == vi(r, "z") &&
             vi(r, "w") == vi(r, "x") + 5;
    }
    if (!ok) { detail = "an index shape came out wrong"; return false; }

    long long ms = ms_since(t0);
    detail = std::to_string(defs.size()) + "+" + std::to_string(negs.size()) + " records, " +
             std::to_string(ms) + "ms";
    return ms < 1000;   // pinned budget: under one second
}

// --- criterion 2: the solver against exhaustive search -----------------------

bool differential_criterion(std::string& detail) {
    auto t0 = Clock::now();
    gen::FormulaGen g(0xacce97edULL);
    int checked = 0, sat = 0, unsat = 0;
    for (int i = 0; i < 1000; ++i) {            // pinned: one thousand formulas
        auto f = g.formula(3 + static_cast<std::size_t>(i % 4));
        if (oracle::formula_nodes(f) > 6) { detail = "generator exceeded six nodes"; return false; }
        auto res = stratify(f);
        bool brute = oracle::brute_force_sat(build_constraints(f));
        if ((res.verdict == Verdict::stratified) != brute) {
            detail = "disagreement on: " + render(f);
            return false;
        }
        if (res.verdict == Verdict::stratified) {
            ++sat;
            if (!oracle::assignment_ok(res.system, res.node_index)) {
                detail = "invalid model for: " + render(f);
                return false;
            }
        } else {
            ++unsat;
            if (!oracle::cycle_refutes(res.conflict)) {
                detail = "invalid cycle for: " + render(f);
                return false;
            }
        }
        ++checked;
    }
    long long ms = ms_since(t0);
    detail = std::to_string(checked) + " formulas (" + std::to_string(sat) + " sat, " +
             std::to_string(unsat) + " unsat), " + std::to_string(ms) + "ms";
    return checked == 1000 && sat > 0 && unsat > 0 && ms < 30000;   // pinned: under 30s
}

// --- criterion 3: the full catalog on three atoms ----------------------------

bool catalog_criterion(std::string& detail) {
    const std::set<std::string> allowed_skips = {"lemma:Ap"};   // pinned allow-list
    auto t0 = Clock::now();
    auto u = build_universe(3, 2);
    Report rep = run_catalog(u, "*", /*jobs=*/1);
    long long ms = ms_since(t0);

    std::size_t pass = rep.count(CheckStatus::pass);
    for (const auto& r : rep.checks) {
        if (r.status == CheckStatus::fail) { detail = "failed: " + r.id + " [" + r.witness + "]"; return false; }
        if (r.status == CheckStatus::skip && !allowed_skips.count(r.id)) {
            detail = "undocumented skip: " + r.id + " (" + r.witness + ")";
            return false;
        }
        if (r.status == CheckStatus::pass && r.tested == 0) { detail = "vacuous pass: " + r.id; return false; }
    }

    // the one allowed skip must genuinely hold where it is representable
    auto u23 = build_universe(2, 3);
    CheckResult ap = check_lemma("lemma:Ap", u23);
    if (ap.status != CheckStatus::pass || ap.tested == 0) { detail = "lemma:Ap does not close at n=2, L=3"; return false; }

    detail = std::to_string(pass) + "/" + std::to_string(rep.checks.size()) +
             " pass, skips allowed: {lemma:Ap}, " + std::to_string(ms) + "ms";
    return ms < 120000;   // pinned: under two minutes, single-threaded
}

// --- criterion 4: saturation pins and the size oracle ------------------------

bool saturation_criterion(std::string& detail) {
    auto u = build_universe(3, 2);
    Arith A(u, 2);
    SetVal c2 = A.from_size(2), c3 = A.from_size(3);
    if (A.add(c2, c2) != A.lambda()) { detail = "2+2 should overflow three atoms"; return false; }
    if (A.succ(c3) != A.lambda()) { detail = "3+1 should overflow three atoms"; return false; }
    if (A.mul(c2, c2) != A.lambda()) { detail = "2*2 should overflow three atoms"; return false; }

    auto dom = A.fcard();
    dom.push_back(A.lambda());
    std::size_t tested = 0;
    for (const auto& x : dom) {
        if (A.sym(A.succ(x)) != A.sym_succ(A.sym(x))) { detail = "succ twin broke"; return false; }
        for (const auto& y : dom) {
            if (A.sym(A.add(x, y)) != A.sym_add(A.sym(x), A.sym(y))) { detail = "add twin broke"; return false; }
            if (A.sym(A.mul(x, y)) != A.sym_mul(A.sym(x), A.sym(y))) { detail = "mul twin broke"; return false; }
            ++tested;
        }
    }
    detail = "saturation pinned, twins agree on " + std::to_string(tested) + " pairs";
    return true;
}

// --- criterion 5: no Dedekind-infinite set, exhaustively ----------------------

bool dedekind_criterion(std::string& detail) {
    auto t0 = Clock::now();
    auto u = build_universe(3, 2);
    CheckResult a = check_lemma("theorem:dedekind1", u);
    CheckResult b = check_lemma("theorem:dedekind2", u);
    long long ms = ms_since(t0);
    if (a.status != CheckStatus::pass || a.tested == 0) { detail = "dedekind1: " + a.witness; return false; }
    if (b.status != CheckStatus::pass || b.tested == 0) { detail = "dedekind2: " + b.witness; return false; }
    detail = std::to_string(a.tested + b.tested) + " instances, " + std::to_string(ms) + "ms";
    return ms < 10000;   // pinned: under ten seconds
}

// --- criterion 6: the singleton/subset collections commute in size -----------

bool commute_criterion(std::string& detail) {
    std::size_t tested = 0;
    for (std::size_t n = 0; n <= 3; ++n) {
        auto u = build_universe(n, 2);
        for (std::size_t i = 0; i < u.size(1); ++i) {
            SetVal a = expand(u, Elem{1, i});
            SetVal left = ssc(u, usc(u, a));
            SetVal right = usc(u, ssc(u, a));
            if (left.card() != right.card()) { detail = "size mismatch at n=" + std::to_string(n); return false; }
            auto w = similarity_witness(left, right);
            if (!w || !validate_bijection(*w, left, right)) { detail = "witness failed at n=" + std::to_string(n); return false; }
            ++tested;
        }
    }
    detail = std::to_string(tested) + " base sets across n=0..3, all witnessed";
    return tested == 1 + 2 + 4 + 8;
}

// --- criterion 7: the CLI is deterministic byte for byte ----------------------

bool cli_criterion(std::string& detail) {
    const std::string bin = NF_FORGE_BIN;
    const std::string f1 = "acceptance_check_run1.json", f2 = "acceptance_check_run2.json";
    std::string cmd1 = bin + " check --n 3 --format json --out " + f1;
    std::string cmd2 = bin + " check --n 3 --format json --out " + f2;
    if (std::system(cmd1.c_str()) != 0 || std::system(cmd2.c_str()) != 0) {
        detail = "CLI run returned nonzero";
        return false;
    }
    bool ok = true;
    std::string a = slurp(f1, ok), b = slurp(f2, ok);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
    if (!ok || a.empty()) { detail = "no report produced"; return false; }
    if (a != b) { detail = "reports differ between runs"; return false; }
    detail = std::to_string(a.size()) + " bytes, identical across runs";
    return true;
}

// --- criterion 8: each deliberate defect is caught with a replayable witness --

bool mutation_criterion(std::string& detail) {
    auto u = build_universe(3, 2);

    Report r1 = run_catalog(u, "*", 1, Mutation::add_drop_disjoint);
    if (r1.count(CheckStatus::fail) == 0) { detail = "add_drop_disjoint went unnoticed"; return false; }
    CheckResult w1 = check_lemma("lemma:cardinality_additive", u, Mutation::add_drop_disjoint);
    if (w1.status != CheckStatus::fail) { detail = "cardinality_additive missed the defect"; return false; }
    auto qpos = w1.witness.find(", q = ");
    if (qpos == std::string::npos || w1.witness.rfind("p = ", 0) != 0) { detail = "unparseable witness"; return false; }
    SetVal p = parse_setval(u, w1.witness.substr(4, qpos - 4));
    SetVal q = parse_setval(u, w1.witness.substr(qpos + 6));
    Arith broken(u, p.level + 1, Mutation::add_drop_disjoint);
    Arith sane(u, p.level + 1);
    if (broken.nc(set_union(p, q)) == broken.add(broken.nc(p), broken.nc(q))) { detail = "witness does not replay"; return false; }
    if (sane.nc(set_union(p, q)) != sane.add(sane.nc(p), sane.nc(q))) { detail = "witness fails the sane build too"; return false; }

    Report r2 = run_catalog(u, "*", 1, Mutation::fclosure_drop_inhabited);
    if (r2.count(CheckStatus::fail) == 0) { detail = "fclosure_drop_inhabited went unnoticed"; return false; }
    CheckResult w2 = check_lemma("lemma:Finhabited", u, Mutation::fclosure_drop_inhabited);
    if (w2.status != CheckStatus::fail || w2.witness.rfind("k = ", 0) != 0) { detail = "Finhabited missed the defect"; return false; }
    SetVal k = parse_setval(u, w2.witness.substr(4));
    Arith broken2(u, k.level, Mutation::fclosure_drop_inhabited);
    if (!k.empty() || !broken2.in_fcard(k)) { detail = "witness does not replay"; return false; }

    detail = std::to_string(r1.count(CheckStatus::fail)) + " and " +
             std::to_string(r2.count(CheckStatus::fail)) + " catalog failures, witnesses replayed";
    return true;
}

} // namespace

int main() {
    Gate gate;
    std::string d;

    d.clear(); gate.line(1, "definition corpus stratifies with the recorded index shapes, negatives refuted, under 1s", corpus_criterion(d), d);
    d.clear(); gate.line(2, "solver matches exhaustive search on 1000 small formulas, under 30s", differential_criterion(d), d);
    d.clear(); gate.line(3, "full law catalog passes at n=3 with only the pinned skip, under 120s", catalog_criterion(d), d);
    d.clear(); gate.line(4, "arithmetic saturates exactly at three atoms and matches the size oracle", saturation_criterion(d), d);
    d.clear(); gate.line(5, "no Dedekind-infinite set exists, checked exhaustively, under 10s", dedekind_criterion(d), d);
    d.clear(); gate.line(6, "singleton and subset collections commute in size with validated witnesses", commute_criterion(d), d);
    d.clear(); gate.line(7, "check reports are byte-identical across CLI runs", cli_criterion(d), d);
    d.clear(); gate.line(8, "each injected defect yields a catalog failure with a replayable witness", mutation_criterion(d), d);

    std::cout << "acceptance: " << (8 - gate.failures) << "/8 criteria hold\n";
    return gate.failures;
}
