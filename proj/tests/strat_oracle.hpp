#pragma once

// Reference decision procedure for index-assignment satisfiability, kept
// deliberately dumb: try every assignment of {0..range-1} to every node and
// accept when all constraints hold. Exponential, but sound and complete for
// the node bounds the generator respects (see span note in gen.hpp).

#include <vector>

#include <nfkit/formula.hpp>
#include <nfkit/stratify.hpp>

namespace oracle {

[[nodiscard]] inline bool brute_force_sat(const nfkit::ConstraintSystem& sys, int range = 7) {
    const std::size_t n = sys.labels.size();
    std::vector<int> val(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& c : sys.constraints)
            if (val[static_cast<std::size_t>(c.left)] !=
                val[static_cast<std::size_t>(c.right)] + c.offset) { ok = false; break; }
        if (ok) return true;
        std::size_t d = 0;
        while (d < n && ++val[d] == range) val[d++] = 0;
        if (d == n) return false;
    }
}

// A satisfying assignment must meet every constraint; checks a solver model.
[[nodiscard]] inline bool assignment_ok(const nfkit::ConstraintSystem& sys,
                                        const std::vector<std::pair<std::string, int>>& node_index) {
    for (const auto& c : sys.constraints) {
        int l = node_index[static_cast<std::size_t>(c.left)].second;
        int r = node_index[static_cast<std::size_t>(c.right)].second;
        if (l != r + c.offset) return false;
    }
    return true;
}

// A witness cycle refutes satisfiability when its edges chain left-to-right
// through shared nodes and the net offset around the loop is nonzero. The
// solver hands edges in traversal order but not orientation, so walk the path
// flipping signs as needed.
[[nodiscard]] inline bool cycle_refutes(const std::vector<nfkit::IndexConstraint>& cyc) {
    if (cyc.empty()) return false;
    // the path edges run from the failing edge's right node back to its left
    // node; the failing edge itself closes the loop
    int start = cyc.back().right;
    int at = start;
    long long net = 0;
    for (const auto& c : cyc) {
        if (c.left == at) { net += c.offset; at = c.right; }
        else if (c.right == at) { net -= c.offset; at = c.left; }
        else return false;                      // edges fail to chain
    }
    return at == start && net != 0;
}

[[nodiscard]] inline std::size_t formula_nodes(const nfkit::FormulaPtr& f);

// AST size: every formula node and every term node, leaves included.
[[nodiscard]] inline std::size_t term_nodes(const nfkit::TermPtr& t) {
    using nfkit::Term;
    switch (t->kind) {
        case Term::Kind::var:
        case Term::Kind::konst:
            return 1;
        case Term::Kind::app: {
            std::size_t n = 1;
            for (const auto& a : t->args) n += term_nodes(a);
            return n;
        }
        case Term::Kind::compr:
            return 1 + formula_nodes(t->body);
    }
    return 1;
}

[[nodiscard]] inline std::size_t formula_nodes(const nfkit::FormulaPtr& f) {
    using nfkit::Formula;
    switch (f->kind) {
        case Formula::Kind::mem:
        case Formula::Kind::eq:
            return 1 + term_nodes(f->s) + term_nodes(f->t);
        case Formula::Kind::neg:
            return 1 + formula_nodes(f->a);
        case Formula::Kind::conj: case Formula::Kind::disj:
        case Formula::Kind::impl: case Formula::Kind::iff:
            return 1 + formula_nodes(f->a) + formula_nodes(f->b);
        case Formula::Kind::forall: case Formula::Kind::exists:
            return 1 + formula_nodes(f->a);
        case Formula::Kind::truth: case Formula::Kind::falsity:
            return 1;
    }
    return 1;
}

} // namespace oracle
