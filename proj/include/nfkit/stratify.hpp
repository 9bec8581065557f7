#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "formula.hpp"
#include "parse.hpp"

namespace nfkit {

enum class Verdict { stratified, weakly_stratified, unstratified };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::stratified:        return "stratified";
        case Verdict::weakly_stratified: return "weakly-stratified";
        case Verdict::unstratified:      return "unstratified";
    }
    return "?";
}

// idx(left) = idx(right) + offset
struct IndexConstraint {
    int left = 0;
    int right = 0;
    int offset = 0;
    std::string why;
};

struct ConstraintSystem {
    std::vector<std::string> labels;            // node id -> display label
    std::vector<IndexConstraint> constraints;
    std::map<std::string, int> var_node;        // variable name -> node (first binding wins)
};

namespace detail {

// Builds one node per variable (shared across occurrences, respecting scope)
// and one node per term occurrence. Constants get a fresh unconstrained node
// each time, so they never force an index.
struct ConstraintBuilder {
    ConstraintSystem sys;
    const std::set<std::string>* excluded;
    std::vector<std::pair<std::string, int>> scope;   // bound-variable stack

    int fresh(const std::string& label) {
        sys.labels.push_back(label);
        return static_cast<int>(sys.labels.size()) - 1;
    }

    void add(int left, int right, int offset, std::string why) {
        sys.constraints.push_back({left, right, offset, std::move(why)});
    }

    int var_node(const std::string& name) {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
            if (it->first == name) return it->second;
        auto it = sys.var_node.find(name);
        if (it != sys.var_node.end()) return it->second;
        int n = fresh(name);
        sys.var_node.emplace(name, n);
        return n;
    }

    int push_binder(const std::string& name) {
        int n = fresh(name);
        scope.emplace_back(name, n);
        if (!sys.var_node.count(name)) sys.var_node.emplace(name, n);
        return n;
    }
    void pop_binder() { scope.pop_back(); }

    bool is_excluded_var(const TermPtr& t) {
        if (!excluded || t->kind != Term::Kind::var) return false;
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
            if (it->first == t->name) return false;     // bound, never a parameter
        return excluded->count(t->name) > 0;
    }

    int term(const TermPtr& t) {
        switch (t->kind) {
            case Term::Kind::var:
                return var_node(t->name);
            case Term::Kind::konst:
                return fresh(konst_name(t->k));
            case Term::Kind::app:
                return app(t);
            case Term::Kind::compr: {
                int v = push_binder(t->name);
                formula(t->body);
                pop_binder();
                int r = fresh(render(t));
                add(r, v, 1, render(t));
                return r;
            }
        }
        return 0;
    }

    int app(const TermPtr& t) {
        std::vector<int> a;
        a.reserve(t->args.size());
        for (auto& arg : t->args) a.push_back(term(arg));
        int r = fresh(render(t));
        const std::string& why = sys.labels[r];
        switch (t->fn) {
            case Fn::singleton: add(r, a[0], 1, why); break;
            case Fn::upair:     add(a[0], a[1], 0, why); add(r, a[0], 1, why); break;
            case Fn::opair:     add(a[0], a[1], 0, why); add(r, a[0], 2, why); break;
            case Fn::otriple:   add(a[0], a[1], 0, why); add(a[1], a[2], 0, why); add(r, a[0], 4, why); break;
            case Fn::union2: case Fn::inter2: case Fn::diff:
            case Fn::plus: case Fn::times:
                add(a[0], a[1], 0, why); add(r, a[0], 0, why); break;
            case Fn::succ: case Fn::exp2:
                add(r, a[0], 0, why); break;
            case Fn::bigunion:  add(r, a[0], -1, why); break;
            case Fn::usc: case Fn::ssc: case Fn::sc: case Fn::nc:
            case Fn::t_op: case Fn::j: case Fn::jbar:
                add(r, a[0], 1, why); break;
            case Fn::prod:      add(a[0], a[1], 0, why); add(r, a[0], 2, why); break;
            case Fn::image:     add(a[0], a[1], 2, why); add(r, a[1], 0, why); break;
            case Fn::ap:        add(a[0], a[1], 3, why); add(r, a[1], 0, why); break;
            case Fn::dom: case Fn::range:
                add(r, a[0], -2, why); break;
        }
        return r;
    }

    void formula(const FormulaPtr& f) {
        switch (f->kind) {
            case Formula::Kind::mem: {
                int s = term(f->s);
                if (is_excluded_var(f->t)) break;       // parameter: no index demand
                int t = term(f->t);
                add(t, s, 1, render(f->s) + " in " + render(f->t));
                break;
            }
            case Formula::Kind::eq: {
                int s = term(f->s);
                int t = term(f->t);
                add(s, t, 0, render(f->s) + " = " + render(f->t));
                break;
            }
            case Formula::Kind::neg:
                formula(f->a);
                break;
            case Formula::Kind::conj: case Formula::Kind::disj:
            case Formula::Kind::impl: case Formula::Kind::iff:
                formula(f->a);
                formula(f->b);
                break;
            case Formula::Kind::forall: case Formula::Kind::exists:
                push_binder(f->var);
                formula(f->a);
                pop_binder();
                break;
            case Formula::Kind::truth: case Formula::Kind::falsity:
                break;
        }
    }
};

} // namespace detail

[[nodiscard]] inline ConstraintSystem build_constraints(const FormulaPtr& f,
                                                        const std::set<std::string>& excluded = {},
                                                        const std::optional<std::string>& ensure_var = {}) {
    detail::ConstraintBuilder b;
    b.excluded = excluded.empty() ? nullptr : &excluded;
    if (ensure_var) b.var_node(*ensure_var);
    b.formula(f);
    return b.sys;
}

struct SolveOutcome {
    bool sat = false;
    std::vector<int> node_index;                // per node, normalized (component minimum 0)
    std::vector<IndexConstraint> conflict;      // witness cycle, failing constraint last
};

// Union-find where each node carries its index offset to the representative.
// A constraint merges two classes at a required offset; a merge inside one
// class either agrees or yields a witness cycle with nonzero net displacement.
[[nodiscard]] inline SolveOutcome solve(const ConstraintSystem& sys) {
    const int n = static_cast<int>(sys.labels.size());
    std::vector<int> parent(n), rank_(n, 0);
    std::vector<long long> off(n, 0);           // idx(i) - idx(parent[i])
    for (int i = 0; i < n; ++i) parent[i] = i;

    auto find = [&](int i) {
        int root = i;
        long long total = 0;
        while (parent[root] != root) { total += off[root]; root = parent[root]; }
        // path compression, re-anchoring offsets at the root
        int cur = i;
        long long acc = total;
        while (parent[cur] != cur) {
            int next = parent[cur];
            long long step = off[cur];
            parent[cur] = root;
            off[cur] = acc;
            acc -= step;
            cur = next;
        }
        return std::pair<int, long long>{root, total};
    };

    std::vector<int> accepted;                  // indices into sys.constraints
    auto witness = [&](int failing) {
        // BFS through accepted constraints from the failing edge's right node
        // to its left node; the path plus the failing edge closes the cycle.
        const auto& bad = sys.constraints[failing];
        std::vector<std::vector<std::pair<int, int>>> adj(n);   // node -> (edge idx, other end)
        for (int e : accepted) {
            adj[sys.constraints[e].left].push_back({e, sys.constraints[e].right});
            adj[sys.constraints[e].right].push_back({e, sys.constraints[e].left});
        }
        std::vector<int> via(n, -1), from(n, -1);
        std::deque<int> q{bad.right};
        std::vector<char> seen(n, 0);
        seen[bad.right] = 1;
        while (!q.empty()) {
            int u = q.front(); q.pop_front();
            if (u == bad.left) break;
            for (auto [e, v] : adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                via[v] = e;
                from[v] = u;
                q.push_back(v);
            }
        }
        std::vector<IndexConstraint> cyc;
        for (int u = bad.left; u != bad.right && via[u] >= 0; u = from[u])
            cyc.push_back(sys.constraints[via[u]]);
        std::reverse(cyc.begin(), cyc.end());
        cyc.push_back(bad);
        return cyc;
    };

    for (int ci = 0; ci < static_cast<int>(sys.constraints.size()); ++ci) {
        const auto& c = sys.constraints[ci];
        auto [ra, da] = find(c.left);
        auto [rb, db] = find(c.right);
        if (ra == rb) {
            if (da != db + c.offset) {
                SolveOutcome out;
                out.sat = false;
                out.conflict = witness(ci);
                return out;
            }
            accepted.push_back(ci);
            continue;
        }
        // idx(c.left) = idx(c.right) + offset, i.e. base(ra) + da' relation
        if (rank_[ra] < rank_[rb]) {
            parent[ra] = rb;
            off[ra] = db + c.offset - da;
        } else {
            parent[rb] = ra;
            off[rb] = da - c.offset - db;
            if (rank_[ra] == rank_[rb]) ++rank_[ra];
        }
        accepted.push_back(ci);
    }

    SolveOutcome out;
    out.sat = true;
    out.node_index.resize(n);
    std::map<int, long long> comp_min;
    std::vector<std::pair<int, long long>> resolved(n);
    for (int i = 0; i < n; ++i) {
        resolved[i] = find(i);
        auto [root, o] = resolved[i];
        auto it = comp_min.find(root);
        if (it == comp_min.end() || o < it->second) comp_min[root] = o;
    }
    for (int i = 0; i < n; ++i)
        out.node_index[i] = static_cast<int>(resolved[i].second - comp_min[resolved[i].first]);
    return out;
}

struct StratResult {
    Verdict verdict = Verdict::unstratified;
    std::map<std::string, int> var_index;                   // variable -> normalized index
    std::vector<std::pair<std::string, int>> node_index;    // every node label with its index
    std::vector<IndexConstraint> conflict;                  // empty unless unstratified
    std::vector<std::string> conflict_text;
    std::optional<int> eigen_index;
    ConstraintSystem system;                                // the system that produced the verdict
};

namespace detail {

inline std::string constraint_text(const ConstraintSystem& sys, const IndexConstraint& c) {
    std::string s = "idx(" + sys.labels[c.left] + ") = idx(" + sys.labels[c.right] + ")";
    if (c.offset > 0) s += " + " + std::to_string(c.offset);
    if (c.offset < 0) s += " - " + std::to_string(-c.offset);
    if (!c.why.empty()) s += "   [" + c.why + "]";
    return s;
}

inline void fill_success(StratResult& r, const ConstraintSystem& sys, const SolveOutcome& o) {
    for (std::size_t i = 0; i < sys.labels.size(); ++i)
        r.node_index.emplace_back(sys.labels[i], o.node_index[i]);
    for (auto& [name, node] : sys.var_node)
        r.var_index[name] = o.node_index[node];
    r.system = sys;
}

inline void fill_conflict(StratResult& r, const ConstraintSystem& sys, const SolveOutcome& o) {
    r.conflict = o.conflict;
    for (auto& c : o.conflict) r.conflict_text.push_back(constraint_text(sys, c));
    r.system = sys;
}

} // namespace detail

[[nodiscard]] inline StratResult stratify(const FormulaPtr& f) {
    StratResult r;
    auto sys = build_constraints(f);
    auto o = solve(sys);
    if (o.sat) {
        r.verdict = Verdict::stratified;
        detail::fill_success(r, sys, o);
    } else {
        r.verdict = Verdict::unstratified;
        detail::fill_conflict(r, sys, o);
    }
    return r;
}

// Stratified outright, weakly stratified once parameters (variables occurring
// only as bare right operands of `in`) are dropped, or unstratified with a
// witness from the weakest system tried.
[[nodiscard]] inline StratResult stratify_wrt(const FormulaPtr& f, const std::string& eigen) {
    StratResult r;
    auto full = build_constraints(f, {}, eigen);
    auto o = solve(full);
    if (o.sat) {
        r.verdict = Verdict::stratified;
        detail::fill_success(r, full, o);
        r.eigen_index = r.var_index.at(eigen);
        return r;
    }
    auto params = parameters_of(f, eigen);
    std::set<std::string> excluded(params.begin(), params.end());
    if (!excluded.empty()) {
        auto weak = build_constraints(f, excluded, eigen);
        auto wo = solve(weak);
        if (wo.sat) {
            r.verdict = Verdict::weakly_stratified;
            detail::fill_success(r, weak, wo);
            r.eigen_index = r.var_index.at(eigen);
            return r;
        }
        r.verdict = Verdict::unstratified;
        detail::fill_conflict(r, weak, wo);
        return r;
    }
    r.verdict = Verdict::unstratified;
    detail::fill_conflict(r, full, o);
    return r;
}

struct ComprehensionReport {
    StratResult body;
    std::optional<int> term_index;      // one above the binder when admissible
};

// A set abstraction { v : phi } is admissible when phi is at least weakly
// stratified with eigenvariable v; the abstraction term then sits one index
// above v.
[[nodiscard]] inline ComprehensionReport check_comprehension(const TermPtr& t) {
    if (t->kind != Term::Kind::compr)
        throw std::invalid_argument("check_comprehension expects a set abstraction term");
    ComprehensionReport rep;
    rep.body = stratify_wrt(t->body, t->name);
    if (rep.body.verdict != Verdict::unstratified && rep.body.eigen_index)
        rep.term_index = *rep.body.eigen_index + 1;
    return rep;
}

// --- batch corpus ------------------------------------------------------

struct CorpusRecord {
    std::string name;
    bool expect_pass = true;
    std::optional<std::string> wrt;     // strat-wrt:VAR when present
    std::string text;
};

struct CorpusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line format: NAME <TAB> PASS|FAIL <TAB> strat|strat-wrt:VAR <TAB> formula.
// '#' comments and blank lines are skipped.
[[nodiscard]] inline std::vector<CorpusRecord> parse_corpus(const std::string& content) {
    std::vector<CorpusRecord> out;
    std::size_t lineno = 0, pos = 0;
    while (pos <= content.size()) {
        std::size_t eol = content.find('\n', pos);
        std::string line = content.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? content.size() + 1 : eol + 1;
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::size_t p = 0;
        while (cols.size() < 3) {
            std::size_t tab = line.find('\t', p);
            if (tab == std::string::npos) break;
            cols.push_back(line.substr(p, tab - p));
            p = tab + 1;
        }
        cols.push_back(line.substr(p));
        if (cols.size() != 4)
            throw CorpusError("line " + std::to_string(lineno) + ": expected 4 tab-separated columns");
        CorpusRecord rec;
        rec.name = cols[0];
        if (cols[1] == "PASS") rec.expect_pass = true;
        else if (cols[1] == "FAIL") rec.expect_pass = false;
        else throw CorpusError("line " + std::to_string(lineno) + ": EXPECT must be PASS or FAIL");
        if (cols[2] == "strat") rec.wrt = std::nullopt;
        else if (cols[2].rfind("strat-wrt:", 0) == 0 && cols[2].size() > 10) rec.wrt = cols[2].substr(10);
        else throw CorpusError("line " + std::to_string(lineno) + ": MODE must be strat or strat-wrt:VAR");
        rec.text = cols[3];
        out.push_back(std::move(rec));
    }
    return out;
}

struct BatchRow {
    CorpusRecord rec;
    Verdict verdict = Verdict::unstratified;
    bool got_pass = false;
    bool matches = false;
    std::optional<int> eigen_index;
    std::string detail;
    StratResult result;
};

[[nodiscard]] inline std::vector<BatchRow> run_batch(const std::vector<CorpusRecord>& records) {
    std::vector<BatchRow> rows;
    rows.reserve(records.size());
    for (const auto& rec : records) {
        BatchRow row;
        row.rec = rec;
        auto f = parse_formula(rec.text);
        row.result = rec.wrt ? stratify_wrt(f, *rec.wrt) : stratify(f);
        row.verdict = row.result.verdict;
        row.got_pass = row.verdict != Verdict::unstratified;
        row.matches = row.got_pass == rec.expect_pass;
        row.eigen_index = row.result.eigen_index;
        if (row.got_pass) row.detail = verdict_name(row.verdict);
        else if (!row.result.conflict_text.empty()) row.detail = "cycle: " + row.result.conflict_text.back();
        else row.detail = "unstratified";
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace nfkit
