#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "formula.hpp"

namespace nfkit {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at)
        : std::runtime_error(msg + " (at offset " + std::to_string(at) + ")"), pos(at) {}
};

namespace detail {

enum class Tok {
    lparen, rparen, lbrace, rbrace, langle, rangle,
    comma, colon, dot, equal, amp, pipe, arrow, iff,
    ident, end,
};

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;
    Tok tok = Tok::end;
    std::string text;      // ident payload
    std::size_t tok_pos = 0;

    explicit Lexer(std::string_view s) : src(s) { next(); }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, tok_pos); }

    void next() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        tok_pos = pos;
        if (pos >= src.size()) { tok = Tok::end; return; }
        char c = src[pos];
        auto two = src.substr(pos, 2);
        auto three = src.substr(pos, 3);
        if (three == "<->") { tok = Tok::iff; pos += 3; return; }
        if (two == "->") { tok = Tok::arrow; pos += 2; return; }
        switch (c) {
            case '(': tok = Tok::lparen; ++pos; return;
            case ')': tok = Tok::rparen; ++pos; return;
            case '{': tok = Tok::lbrace; ++pos; return;
            case '}': tok = Tok::rbrace; ++pos; return;
            case '<': tok = Tok::langle; ++pos; return;
            case '>': tok = Tok::rangle; ++pos; return;
            case ',': tok = Tok::comma; ++pos; return;
            case ':': tok = Tok::colon; ++pos; return;
            case '.': tok = Tok::dot; ++pos; return;
            case '=': tok = Tok::equal; ++pos; return;
            case '&': tok = Tok::amp; ++pos; return;
            case '|': tok = Tok::pipe; ++pos; return;
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                ++pos;
            tok = Tok::ident;
            text.assign(src.substr(start, pos - start));
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    void expect(Tok t, const char* what) {
        if (tok != t) fail(std::string("expected ") + what);
        next();
    }
};

inline std::optional<Konst> konst_of(const std::string& s) {
    for (Konst k : {Konst::lambda, Konst::univ, Konst::zero, Konst::one, Konst::two,
                    Konst::three, Konst::four, Konst::finite, Konst::decidable,
                    Konst::fcard, Konst::sf, Konst::mulgraph})
        if (s == konst_name(k)) return k;
    return std::nullopt;
}

inline std::optional<Fn> fn_of(const std::string& s) {
    for (Fn f : {Fn::union2, Fn::inter2, Fn::diff, Fn::bigunion, Fn::usc, Fn::ssc,
                 Fn::sc, Fn::nc, Fn::succ, Fn::plus, Fn::times, Fn::exp2, Fn::t_op,
                 Fn::j, Fn::jbar, Fn::prod, Fn::image, Fn::ap, Fn::dom, Fn::range})
        if (s == fn_name(f)) return f;
    return std::nullopt;
}

inline bool is_keyword(const std::string& s) {
    return s == "in" || s == "not" || s == "forall" || s == "exists" ||
           s == "sub" || s == "true" || s == "false";
}

struct Parser {
    Lexer lx;
    explicit Parser(std::string_view s) : lx(s) {}

    FormulaPtr formula() { return iff(); }

    FormulaPtr iff() {
        auto a = impl();
        if (lx.tok == Tok::iff) { lx.next(); return f_iff(std::move(a), iff()); }
        return a;
    }
    FormulaPtr impl() {
        auto a = disj();
        if (lx.tok == Tok::arrow) { lx.next(); return f_implies(std::move(a), impl()); }
        return a;
    }
    FormulaPtr disj() {
        auto a = conj();
        if (lx.tok == Tok::pipe) { lx.next(); return f_or(std::move(a), disj()); }
        return a;
    }
    FormulaPtr conj() {
        auto a = primary();
        if (lx.tok == Tok::amp) { lx.next(); return f_and(std::move(a), conj()); }
        return a;
    }

    FormulaPtr primary() {
        if (lx.tok == Tok::lparen) {
            lx.next();
            auto f = formula();
            lx.expect(Tok::rparen, "')'");
            return f;
        }
        if (lx.tok == Tok::ident) {
            if (lx.text == "true")  { lx.next(); return f_truth(); }
            if (lx.text == "false") { lx.next(); return f_falsity(); }
            if (lx.text == "not")   { lx.next(); return f_not(primary()); }
            if (lx.text == "forall" || lx.text == "exists") return quantifier();
            if (lx.text == "sub") return sub_sugar();
        }
        return atomic();
    }

    FormulaPtr quantifier() {
        bool universal = lx.text == "forall";
        lx.next();
        if (lx.tok != Tok::ident || is_keyword(lx.text) || konst_of(lx.text) || fn_of(lx.text))
            lx.fail("expected fresh variable after quantifier");
        std::string v = lx.text;
        lx.next();
        TermPtr bound;
        if (lx.tok == Tok::ident && lx.text == "in") {
            lx.next();
            bound = term();
        }
        lx.expect(Tok::dot, "'.'");
        auto body = formula();
        if (bound) {
            auto guard = f_mem(mk_var(v), std::move(bound));
            body = universal ? f_implies(std::move(guard), std::move(body))
                             : f_and(std::move(guard), std::move(body));
        }
        return universal ? f_forall(std::move(v), std::move(body))
                         : f_exists(std::move(v), std::move(body));
    }

    // sub(a,b) desugars to forall w. (w in a -> w in b) with w fresh.
    FormulaPtr sub_sugar() {
        lx.next();
        lx.expect(Tok::lparen, "'('");
        auto a = term();
        lx.expect(Tok::comma, "','");
        auto b = term();
        lx.expect(Tok::rparen, "')'");
        auto used = free_vars(a);
        for (auto& v : free_vars(b)) used.insert(v);
        std::string w = "w";
        for (int i = 0; used.count(w); ++i) w = "w" + std::to_string(i);
        return f_forall(w, f_implies(f_mem(mk_var(w), std::move(a)),
                                     f_mem(mk_var(w), std::move(b))));
    }

    FormulaPtr atomic() {
        auto s = term();
        if (lx.tok == Tok::ident && lx.text == "in") {
            lx.next();
            return f_mem(std::move(s), term());
        }
        if (lx.tok == Tok::equal) {
            lx.next();
            return f_eq(std::move(s), term());
        }
        lx.fail("expected 'in' or '=' after term");
    }

    TermPtr term() {
        switch (lx.tok) {
            case Tok::lbrace: return braces();
            case Tok::langle: return angles();
            case Tok::ident: break;
            default: lx.fail("expected term");
        }
        std::string name = lx.text;
        if (is_keyword(name)) lx.fail("keyword '" + name + "' is not a term");
        if (auto k = konst_of(name)) { lx.next(); return mk_konst(*k); }
        if (auto f = fn_of(name)) {
            lx.next();
            lx.expect(Tok::lparen, "'(' after function name");
            std::vector<TermPtr> args;
            args.push_back(term());
            while (lx.tok == Tok::comma) { lx.next(); args.push_back(term()); }
            lx.expect(Tok::rparen, "')'");
            if (static_cast<int>(args.size()) != fn_arity(*f))
                lx.fail(std::string(fn_name(*f)) + " takes " + std::to_string(fn_arity(*f)) + " arguments");
            return mk_app(*f, std::move(args));
        }
        lx.next();
        return mk_var(std::move(name));
    }

    // '{' already current: singleton {t}, unordered pair {t,u}, or comprehension { v : phi }.
    TermPtr braces() {
        lx.next();
        if (lx.tok == Tok::ident && !is_keyword(lx.text) && !konst_of(lx.text) && !fn_of(lx.text)) {
            // could still be a plain variable inside a singleton; look ahead for ':'
            std::string v = lx.text;
            std::size_t save_pos = lx.pos;
            lx.next();
            if (lx.tok == Tok::colon) {
                lx.next();
                auto body = formula();
                lx.expect(Tok::rbrace, "'}'");
                return mk_compr(std::move(v), std::move(body));
            }
            // not a comprehension: v is the first element term (vars have no suffix syntax)
            (void)save_pos;
            auto first = mk_var(std::move(v));
            return brace_tail(std::move(first));
        }
        auto first = term();
        return brace_tail(std::move(first));
    }

    TermPtr brace_tail(TermPtr first) {
        if (lx.tok == Tok::comma) {
            lx.next();
            auto second = term();
            lx.expect(Tok::rbrace, "'}'");
            return mk_app(Fn::upair, {std::move(first), std::move(second)});
        }
        lx.expect(Tok::rbrace, "'}'");
        return mk_app(Fn::singleton, {std::move(first)});
    }

    TermPtr angles() {
        lx.next();
        auto a = term();
        lx.expect(Tok::comma, "','");
        auto b = term();
        if (lx.tok == Tok::comma) {
            lx.next();
            auto c = term();
            lx.expect(Tok::rangle, "'>'");
            return mk_app(Fn::otriple, {std::move(a), std::move(b), std::move(c)});
        }
        lx.expect(Tok::rangle, "'>'");
        return mk_app(Fn::opair, {std::move(a), std::move(b)});
    }
};

} // namespace detail

[[nodiscard]] inline FormulaPtr parse_formula(std::string_view text) {
    detail::Parser p(text);
    auto f = p.formula();
    if (p.lx.tok != detail::Tok::end) p.lx.fail("trailing input after formula");
    return f;
}

[[nodiscard]] inline TermPtr parse_term(std::string_view text) {
    detail::Parser p(text);
    auto t = p.term();
    if (p.lx.tok != detail::Tok::end) p.lx.fail("trailing input after term");
    return t;
}

} // namespace nfkit
