#pragma once

// Seeded random formula generator for differential testing against the
// brute-force oracle. Formulas are built to an exact AST node budget of at
// most six (leaves counted). Within that bound no satisfiable constraint
// system spreads wider than six after normalization (the worst case is a
// coded triple under a membership, displacing by five), so the oracle's
// {0..6} value range is complete.

#include <cstdint>
#include <random>
#include <vector>

#include <nfkit/formula.hpp>

namespace gen {

class FormulaGen {
public:
    explicit FormulaGen(std::uint64_t seed) : rng_(seed) {}

    [[nodiscard]] nfkit::FormulaPtr formula(std::size_t budget) {
        using nfkit::Formula;
        // budget 3 is the atomic minimum: the atom node plus two leaf terms
        if (budget < 3) budget = 3;
        std::vector<int> opts;
        opts.push_back(0);                          // mem
        opts.push_back(0);
        opts.push_back(1);                          // eq
        if (budget >= 4) { opts.push_back(2); opts.push_back(3); opts.push_back(3); }  // neg, quantifier
        switch (opts[pick(opts.size())]) {
            case 0: case 1: {
                bool mem = opts[last_] == 0;
                std::size_t left = 1 + pick(budget - 2);
                auto s = term(left);
                auto t = term(budget - 1 - left);
                return mem ? nfkit::f_mem(std::move(s), std::move(t))
                           : nfkit::f_eq(std::move(s), std::move(t));
            }
            case 2:
                return nfkit::f_not(formula(budget - 1));
            default: {
                std::string v = var_name();
                auto body = formula(budget - 1);
                return pick(2) == 0 ? nfkit::f_forall(v, std::move(body))
                                    : nfkit::f_exists(v, std::move(body));
            }
        }
    }

private:
    std::mt19937_64 rng_;
    std::size_t last_ = 0;

    std::size_t pick(std::size_t n) {
        last_ = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
        return last_;
    }

    std::string var_name() {
        static const char* pool[] = {"x", "y", "z", "u", "v", "w"};
        return pool[pick(4) + (pick(3) == 0 ? 2 : 0)];   // x,y,z,u favored; v,w rarer
    }

    nfkit::TermPtr term(std::size_t budget) {
        using nfkit::Fn;
        if (budget <= 1) {
            if (pick(6) == 0) {
                static const nfkit::Konst ks[] = {nfkit::Konst::lambda, nfkit::Konst::zero,
                                                  nfkit::Konst::fcard, nfkit::Konst::sf};
                return nfkit::mk_konst(ks[pick(4)]);
            }
            return nfkit::mk_var(var_name());
        }
        std::vector<int> opts{0};                       // unary application
        if (budget >= 3) { opts.push_back(1); opts.push_back(1); }   // binary application
        if (budget >= 4) { opts.push_back(2); opts.push_back(3); }   // otriple, comprehension
        switch (opts[pick(opts.size())]) {
            case 0: {
                static const Fn u1[] = {Fn::singleton, Fn::usc, Fn::ssc, Fn::nc, Fn::succ,
                                        Fn::exp2, Fn::bigunion, Fn::t_op, Fn::j, Fn::dom};
                return nfkit::mk_app(u1[pick(10)], {term(budget - 1)});
            }
            case 1: {
                static const Fn b2[] = {Fn::upair, Fn::opair, Fn::union2, Fn::inter2,
                                        Fn::diff, Fn::plus, Fn::prod, Fn::image, Fn::ap};
                Fn f = b2[pick(9)];
                std::size_t left = 1 + pick(budget - 2);
                auto a = term(left);
                auto b = term(budget - 1 - left);
                return nfkit::mk_app(f, {std::move(a), std::move(b)});
            }
            case 2: {
                std::size_t rest = budget - 1;          // three args from the rest
                std::size_t a = 1 + pick(rest - 2);
                std::size_t b = 1 + pick(rest - a - 1);
                std::size_t c = rest - a - b;
                return nfkit::mk_app(Fn::otriple, {term(a), term(b), term(c)});
            }
            default:
                return nfkit::mk_compr(var_name(), formula(budget - 1));
        }
    }
};

} // namespace gen
