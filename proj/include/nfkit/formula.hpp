#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nfkit {

// Function symbols of the term language, with the index displacement each one
// imposes encoded in stratify.hpp.
enum class Fn {
    singleton, upair, opair, otriple,
    union2, inter2, diff, bigunion,
    usc, ssc, sc, nc,
    succ, plus, times, exp2, t_op,
    j, jbar,
    prod, image, ap, dom, range,
};

inline constexpr int fn_arity(Fn f) {
    switch (f) {
        case Fn::otriple: return 3;
        case Fn::upair: case Fn::opair: case Fn::union2: case Fn::inter2:
        case Fn::diff: case Fn::plus: case Fn::times: case Fn::prod:
        case Fn::image: case Fn::ap: return 2;
        default: return 1;
    }
}

inline const char* fn_name(Fn f) {
    switch (f) {
        case Fn::singleton: return "singleton";
        case Fn::upair:     return "upair";
        case Fn::opair:     return "opair";
        case Fn::otriple:   return "otriple";
        case Fn::union2:    return "union2";
        case Fn::inter2:    return "inter2";
        case Fn::diff:      return "diff";
        case Fn::bigunion:  return "bigunion";
        case Fn::usc:       return "usc";
        case Fn::ssc:       return "ssc";
        case Fn::sc:        return "sc";
        case Fn::nc:        return "nc";
        case Fn::succ:      return "succ";
        case Fn::plus:      return "plus";
        case Fn::times:     return "times";
        case Fn::exp2:      return "exp2";
        case Fn::t_op:      return "T";
        case Fn::j:         return "j";
        case Fn::jbar:      return "jbar";
        case Fn::prod:      return "prod";
        case Fn::image:     return "image";
        case Fn::ap:        return "ap";
        case Fn::dom:       return "dom";
        case Fn::range:     return "range";
    }
    return "?";
}

// Index-free constants: a fresh constraint node per occurrence, so they never
// participate in stratification conflicts.
enum class Konst { lambda, univ, zero, one, two, three, four, finite, decidable, fcard, sf, mulgraph };

inline const char* konst_name(Konst k) {
    switch (k) {
        case Konst::lambda:    return "Lambda";
        case Konst::univ:      return "V";
        case Konst::zero:      return "zero";
        case Konst::one:       return "one";
        case Konst::two:       return "two";
        case Konst::three:     return "three";
        case Konst::four:      return "four";
        case Konst::finite:    return "FINITE";
        case Konst::decidable: return "DECIDABLE";
        case Konst::fcard:     return "F";
        case Konst::sf:        return "SF";
        case Konst::mulgraph:  return "G";
    }
    return "?";
}

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Term {
    enum class Kind { var, konst, app, compr };
    Kind kind;
    std::string name;          // var name, or comprehension binder
    Konst k = Konst::lambda;
    Fn fn = Fn::singleton;
    std::vector<TermPtr> args;
    FormulaPtr body;           // comprehension only
};

struct Formula {
    enum class Kind { mem, eq, conj, disj, impl, iff, neg, forall, exists, truth, falsity };
    Kind kind;
    TermPtr s, t;              // mem, eq
    FormulaPtr a, b;           // connectives; neg uses a only
    std::string var;           // quantifier binder
};

inline TermPtr mk_var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::var;
    t->name = std::move(name);
    return t;
}
inline TermPtr mk_konst(Konst k) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::konst;
    t->k = k;
    return t;
}
inline TermPtr mk_app(Fn f, std::vector<TermPtr> args) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::app;
    t->fn = f;
    t->args = std::move(args);
    return t;
}
inline TermPtr mk_compr(std::string var, FormulaPtr body) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::compr;
    t->name = std::move(var);
    t->body = std::move(body);
    return t;
}

inline FormulaPtr f_atom2(Formula::Kind k, TermPtr s, TermPtr t) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->s = std::move(s);
    f->t = std::move(t);
    return f;
}
inline FormulaPtr f_mem(TermPtr s, TermPtr t) { return f_atom2(Formula::Kind::mem, std::move(s), std::move(t)); }
inline FormulaPtr f_eq(TermPtr s, TermPtr t)  { return f_atom2(Formula::Kind::eq, std::move(s), std::move(t)); }

inline FormulaPtr f_bin(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->a = std::move(a);
    f->b = std::move(b);
    return f;
}
inline FormulaPtr f_and(FormulaPtr a, FormulaPtr b)     { return f_bin(Formula::Kind::conj, std::move(a), std::move(b)); }
inline FormulaPtr f_or(FormulaPtr a, FormulaPtr b)      { return f_bin(Formula::Kind::disj, std::move(a), std::move(b)); }
inline FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) { return f_bin(Formula::Kind::impl, std::move(a), std::move(b)); }
inline FormulaPtr f_iff(FormulaPtr a, FormulaPtr b)     { return f_bin(Formula::Kind::iff, std::move(a), std::move(b)); }
inline FormulaPtr f_not(FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::neg;
    f->a = std::move(a);
    return f;
}
inline FormulaPtr f_quant(Formula::Kind k, std::string var, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->var = std::move(var);
    f->a = std::move(body);
    return f;
}
inline FormulaPtr f_forall(std::string v, FormulaPtr body) { return f_quant(Formula::Kind::forall, std::move(v), std::move(body)); }
inline FormulaPtr f_exists(std::string v, FormulaPtr body) { return f_quant(Formula::Kind::exists, std::move(v), std::move(body)); }
inline FormulaPtr f_truth()   { auto f = std::make_shared<Formula>(); f->kind = Formula::Kind::truth; return f; }
inline FormulaPtr f_falsity() { auto f = std::make_shared<Formula>(); f->kind = Formula::Kind::falsity; return f; }

inline bool formula_eq(const FormulaPtr& a, const FormulaPtr& b);

inline bool term_eq(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Kind::var:   return a->name == b->name;
        case Term::Kind::konst: return a->k == b->k;
        case Term::Kind::app: {
            if (a->fn != b->fn || a->args.size() != b->args.size()) return false;
            for (std::size_t i = 0; i < a->args.size(); ++i)
                if (!term_eq(a->args[i], b->args[i])) return false;
            return true;
        }
        case Term::Kind::compr:
            return a->name == b->name && formula_eq(a->body, b->body);
    }
    return false;
}

inline bool formula_eq(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Formula::Kind::mem:
        case Formula::Kind::eq:
            return term_eq(a->s, b->s) && term_eq(a->t, b->t);
        case Formula::Kind::neg:
            return formula_eq(a->a, b->a);
        case Formula::Kind::conj: case Formula::Kind::disj:
        case Formula::Kind::impl: case Formula::Kind::iff:
            return formula_eq(a->a, b->a) && formula_eq(a->b, b->b);
        case Formula::Kind::forall: case Formula::Kind::exists:
            return a->var == b->var && formula_eq(a->a, b->a);
        case Formula::Kind::truth: case Formula::Kind::falsity:
            return true;
    }
    return false;
}

namespace detail {

inline void free_vars_term(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out);

inline void free_vars_formula(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f->kind) {
        case Formula::Kind::mem: case Formula::Kind::eq:
            free_vars_term(f->s, bound, out);
            free_vars_term(f->t, bound, out);
            break;
        case Formula::Kind::neg:
            free_vars_formula(f->a, bound, out);
            break;
        case Formula::Kind::conj: case Formula::Kind::disj:
        case Formula::Kind::impl: case Formula::Kind::iff:
            free_vars_formula(f->a, bound, out);
            free_vars_formula(f->b, bound, out);
            break;
        case Formula::Kind::forall: case Formula::Kind::exists: {
            bool was = bound.count(f->var) > 0;
            bound.insert(f->var);
            free_vars_formula(f->a, bound, out);
            if (!was) bound.erase(f->var);
            break;
        }
        case Formula::Kind::truth: case Formula::Kind::falsity:
            break;
    }
}

inline void free_vars_term(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (t->kind) {
        case Term::Kind::var:
            if (!bound.count(t->name)) out.insert(t->name);
            break;
        case Term::Kind::konst:
            break;
        case Term::Kind::app:
            for (auto& a : t->args) free_vars_term(a, bound, out);
            break;
        case Term::Kind::compr: {
            bool was = bound.count(t->name) > 0;
            bound.insert(t->name);
            free_vars_formula(t->body, bound, out);
            if (!was) bound.erase(t->name);
            break;
        }
    }
}

} // namespace detail

[[nodiscard]] inline std::set<std::string> free_vars(const FormulaPtr& f) {
    std::set<std::string> bound, out;
    detail::free_vars_formula(f, bound, out);
    return out;
}
[[nodiscard]] inline std::set<std::string> free_vars(const TermPtr& t) {
    std::set<std::string> bound, out;
    detail::free_vars_term(t, bound, out);
    return out;
}

namespace detail {

// clean[v] stays true while every occurrence of v is the bare right operand of
// `in`. Any occurrence under a function symbol, left of `in`, or inside `=`
// carries an index constraint and disqualifies v.
struct ParamScan {
    std::set<std::string> bound;
    std::map<std::string, bool> clean;

    void dirty_term(const TermPtr& t) {
        switch (t->kind) {
            case Term::Kind::var:
                if (!bound.count(t->name)) clean[t->name] = false;
                break;
            case Term::Kind::konst:
                break;
            case Term::Kind::app:
                for (auto& a : t->args) dirty_term(a);
                break;
            case Term::Kind::compr: {
                bool was = bound.count(t->name) > 0;
                bound.insert(t->name);
                formula(t->body);
                if (!was) bound.erase(t->name);
                break;
            }
        }
    }

    void formula(const FormulaPtr& f) {
        switch (f->kind) {
            case Formula::Kind::mem:
                dirty_term(f->s);
                if (f->t->kind == Term::Kind::var && !bound.count(f->t->name)) {
                    auto it = clean.find(f->t->name);
                    if (it == clean.end()) clean[f->t->name] = true;
                } else {
                    dirty_term(f->t);
                }
                break;
            case Formula::Kind::eq:
                dirty_term(f->s);
                dirty_term(f->t);
                break;
            case Formula::Kind::neg:
                formula(f->a);
                break;
            case Formula::Kind::conj: case Formula::Kind::disj:
            case Formula::Kind::impl: case Formula::Kind::iff:
                formula(f->a);
                formula(f->b);
                break;
            case Formula::Kind::forall: case Formula::Kind::exists: {
                bool was = bound.count(f->var) > 0;
                bound.insert(f->var);
                formula(f->a);
                if (!was) bound.erase(f->var);
                break;
            }
            case Formula::Kind::truth: case Formula::Kind::falsity:
                break;
        }
    }
};

} // namespace detail

// Free variables other than the eigenvariable whose every occurrence is as the
// bare right operand of `in`. These are the ones whose index may float.
[[nodiscard]] inline std::vector<std::string> parameters_of(const FormulaPtr& f, const std::string& eigen) {
    detail::ParamScan scan;
    scan.formula(f);
    std::vector<std::string> out;
    for (auto& [name, ok] : scan.clean)
        if (ok && name != eigen) out.push_back(name);
    return out;
}

// --- rendering ---------------------------------------------------------

inline std::string render(const TermPtr& t);

namespace detail {

// Precedence contexts: 0 iff, 1 impl, 2 disj, 3 conj, 4 neg operand / primary.
inline void render_formula(const FormulaPtr& f, int ctx, std::string& out) {
    auto wrap = [&](int prec, auto&& body) {
        if (ctx > prec) { out += '('; body(); out += ')'; }
        else body();
    };
    switch (f->kind) {
        case Formula::Kind::mem:
            out += render(f->s); out += " in "; out += render(f->t);
            break;
        case Formula::Kind::eq:
            out += render(f->s); out += " = "; out += render(f->t);
            break;
        case Formula::Kind::iff:
            wrap(0, [&] { render_formula(f->a, 1, out); out += " <-> "; render_formula(f->b, 0, out); });
            break;
        case Formula::Kind::impl:
            wrap(1, [&] { render_formula(f->a, 2, out); out += " -> "; render_formula(f->b, 1, out); });
            break;
        case Formula::Kind::disj:
            wrap(2, [&] { render_formula(f->a, 3, out); out += " | "; render_formula(f->b, 2, out); });
            break;
        case Formula::Kind::conj:
            wrap(3, [&] { render_formula(f->a, 4, out); out += " & "; render_formula(f->b, 3, out); });
            break;
        case Formula::Kind::neg:
            out += "not ";
            render_formula(f->a, 4, out);
            break;
        case Formula::Kind::forall: case Formula::Kind::exists:
            wrap(0, [&] {
                out += f->kind == Formula::Kind::forall ? "forall " : "exists ";
                out += f->var;
                out += ". ";
                render_formula(f->a, 0, out);
            });
            break;
        case Formula::Kind::truth:   out += "true"; break;
        case Formula::Kind::falsity: out += "false"; break;
    }
}

} // namespace detail

inline std::string render(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::var:   return t->name;
        case Term::Kind::konst: return konst_name(t->k);
        case Term::Kind::app:
            switch (t->fn) {
                case Fn::singleton: return "{" + render(t->args[0]) + "}";
                case Fn::upair:     return "{" + render(t->args[0]) + "," + render(t->args[1]) + "}";
                case Fn::opair:     return "<" + render(t->args[0]) + "," + render(t->args[1]) + ">";
                case Fn::otriple:   return "<" + render(t->args[0]) + "," + render(t->args[1]) + "," + render(t->args[2]) + ">";
                default: {
                    std::string s = fn_name(t->fn);
                    s += '(';
                    for (std::size_t i = 0; i < t->args.size(); ++i) {
                        if (i) s += ", ";
                        s += render(t->args[i]);
                    }
                    s += ')';
                    return s;
                }
            }
        case Term::Kind::compr: {
            std::string s = "{ " + t->name + " : ";
            detail::render_formula(t->body, 0, s);
            s += " }";
            return s;
        }
    }
    return "?";
}

inline std::string render(const FormulaPtr& f) {
    std::string s;
    detail::render_formula(f, 0, s);
    return s;
}

} // namespace nfkit
