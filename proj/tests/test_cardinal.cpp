#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <nfkit/cardinal.hpp>

using namespace nfkit;

namespace {

// the full arithmetic domain at one home level: every finite cardinal plus
// the overflow value
std::vector<SetVal> fam(const Arith& a) {
    auto out = a.fcard();
    out.push_back(a.lambda());
    return out;
}

} // namespace

TEST_CASE("home levels are bounded by the universe") {
    auto u = build_universe(3, 2);
    CHECK_THROWS_AS(Arith(u, 1), UniverseError);
    CHECK_THROWS_AS(Arith(u, 4), UniverseError);
    CHECK_NOTHROW(Arith(u, 2));
    CHECK_NOTHROW(Arith(u, 3));
}

TEST_CASE("zero and the successor chain exhaust the finite cardinals") {
    auto u = build_universe(3, 2);
    Arith a(u, 2);
    CHECK(a.member_capacity() == 3);
    CHECK(a.zero() == a.from_size(0));
    CHECK(a.zero().card() == 1);

    const auto& f = a.fcard();
    REQUIRE(f.size() == 4);
    for (std::size_t k = 0; k < f.size(); ++k) {
        CHECK(f[k] == a.from_size(k));
        CHECK(a.sym(f[k]) == SymCardinal{2, false, k});
        CHECK(a.is_cardinal(f[k]));
        CHECK(a.in_fcard(f[k]));
    }
    CHECK(a.succ(f.back()) == a.lambda());
    CHECK(!a.in_fcard(a.lambda()));
    CHECK(a.in_semifinite(a.lambda()));
    CHECK(a.semifinite().size() == 5);

    Arith a3(u, 3);
    CHECK(a3.member_capacity() == 8);
    CHECK(a3.fcard().size() == 9);
}

TEST_CASE("arithmetic saturates at the member capacity") {
    auto u = build_universe(3, 2);
    Arith a(u, 2);
    SetVal c2 = a.from_size(2), c3 = a.from_size(3);
    CHECK(a.add(c2, c2) == a.lambda());
    CHECK(a.succ(c3) == a.lambda());
    CHECK(a.mul(c2, c2) == a.lambda());
    CHECK(a.add(a.from_size(1), c2) == c3);
    CHECK(a.add(a.zero(), c3) == c3);
    CHECK(a.mul(a.from_size(1), c3) == c3);
    CHECK(a.mul(a.zero(), c3) == a.zero());
}

TEST_CASE("every operation matches its size twin on the whole domain") {
    auto u = build_universe(3, 2);
    for (int level : {2, 3}) {
        Arith a(u, level);
        auto dom = fam(a);
        for (const auto& x : dom) {
            CHECK(a.sym(a.succ(x)) == a.sym_succ(a.sym(x)));
            for (const auto& y : dom) {
                CHECK(a.sym(a.add(x, y)) == a.sym_add(a.sym(x), a.sym(y)));
                CHECK(a.sym(a.mul(x, y)) == a.sym_mul(a.sym(x), a.sym(y)));
            }
        }
    }
}

TEST_CASE("exponentiation doubles along the chain and overflows past the atoms") {
    auto u = build_universe(3, 2);
    Arith a2(u, 2), a3(u, 3);
    CHECK_THROWS_AS(a2.exp2(a2.zero()), UniverseError);

    for (std::size_t k = 0; k <= 8; ++k) {
        SetVal ck = a3.from_size(k);
        SetVal r = a3.exp2(ck);
        if (k <= 3) CHECK(r == a3.from_size(std::size_t{1} << k));
        else CHECK(r == a3.lambda());
        CHECK(a3.sym(r) == a3.sym_exp2(a3.sym(ck)));
    }
    CHECK(a3.exp2(a3.lambda()) == a3.lambda());
}

TEST_CASE("the type-raising operator transports sizes one level up") {
    auto u = build_universe(3, 2);
    Arith a2(u, 2), a3(u, 3);
    CHECK_THROWS_AS(a3.t_op(a3.zero()), UniverseError);

    for (const auto& x : fam(a2)) {
        SetVal t = a2.t_op(x);
        CHECK(t.level == 3);
        CHECK(a3.sym(t) == a2.sym_t(a2.sym(x)));
    }
    CHECK(a2.t_op(a2.zero()) == a3.zero());
}

TEST_CASE("the initial segment of a cardinal collects the smaller ones") {
    auto u = build_universe(3, 2);
    Arith a2(u, 2), a3(u, 3);
    CHECK_THROWS_AS(a3.j_set(a3.zero()), UniverseError);

    const auto& f = a2.fcard();
    for (std::size_t k = 0; k < f.size(); ++k) {
        SetVal j = a2.j_set(f[k]);
        CHECK(j.level == 3);
        CHECK(j.card() == k);
        for (std::size_t i = 0; i < f.size(); ++i)
            CHECK(contains(j, elem_of(u, f[i])) == (i < k));
        SetVal jb = a2.j_bar(f[k]);
        CHECK(jb.card() == k + 1);
        CHECK(subset(j, jb));
    }
    CHECK(a2.j_set(a2.lambda()).empty());
}

TEST_CASE("order is subset extension and is total on the finite cardinals") {
    auto u = build_universe(3, 2);
    Arith a(u, 2);
    const auto& f = a.fcard();
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t k = 0; k < f.size(); ++k) {
            CHECK(a.card_le(f[i], f[k]) == (i <= k));
            CHECK(a.card_lt(f[i], f[k]) == (i < k));
        }
    CHECK(!a.card_le(a.lambda(), a.zero()));
    CHECK(!a.card_le(a.zero(), a.lambda()));
}

TEST_CASE("everything sized the same falls into one class") {
    auto u = build_universe(3, 2);
    Arith a2(u, 2), a3(u, 3);
    for (std::size_t i = 0; i < u.size(1); ++i) {
        SetVal x = expand(u, Elem{1, i});
        SetVal n = a2.nc(x);
        CHECK(n == a2.from_size(x.card()));
        CHECK(contains(n, elem_of(u, x)));
    }
    CHECK_THROWS_AS(a2.nc(a2.zero()), UniverseError);
    CHECK(a3.nc(expand(u, Elem{2, 7})) == a3.from_size(3));
}

TEST_CASE("size summaries print and reject mixed classes") {
    auto u = build_universe(3, 2);
    Arith a(u, 2);
    CHECK(to_string(a.sym(a.from_size(3))) == "C(level=2, size=3)");
    CHECK(to_string(a.sym(a.lambda())) == "C(level=2, OVERFLOW)");

    SetVal mixed = a.lambda();
    mixed.bits.set(1);   // a singleton
    mixed.bits.set(3);   // a two-member set
    CHECK_THROWS_AS(a.sym(mixed), std::invalid_argument);
    CHECK(!a.is_cardinal(mixed));
    CHECK(a.is_cardinal(a.lambda()));
    CHECK_THROWS_AS(a.sym(full_set(u, 3)), UniverseError);   // wrong home level
}

TEST_CASE("the recursion graph contains exactly the reachable triples") {
    auto u = build_universe(3, 2);
    Arith a(u, 2);
    const MulGraph& g = a.mul_graph();
    auto idx = [&](const SetVal& v) {
        for (std::size_t i = 0; i < g.values.size(); ++i)
            if (g.values[i] == v) return i;
        FAIL("value not in graph");
        return std::size_t{0};
    };
    std::size_t z = idx(a.zero()), one = idx(a.from_size(1)), two = idx(a.from_size(2));
    CHECK(g.has(one, z, z));
    CHECK(g.has(z, two, z));
    CHECK(g.has(one, one, one));
    CHECK(g.has(two, one, two));
    CHECK(g.has(two, two, idx(a.lambda())));
    CHECK(!g.has(z, z, one));

    // the graph is a function of its first two coordinates
    for (auto& s : g.triples)
        for (auto& t : g.triples)
            if (s[0] == t[0] && s[1] == t[1]) CHECK(s[2] == t[2]);
}

TEST_CASE("dropping the disjointness guard breaks addition visibly") {
    auto u = build_universe(3, 2);
    Arith a(u, 2, Mutation::add_drop_disjoint);
    SetVal one = a.from_size(1);
    SetVal s = a.add(one, one);
    // overlapping unions slip in: sizes 1 and 2 mix
    CHECK(!a.is_cardinal(s));
    CHECK_THROWS_AS(a.sym(s), std::invalid_argument);
    CHECK(s != a.from_size(2));

    Arith sane(u, 2);
    CHECK(sane.add(one, one) == sane.from_size(2));
}

TEST_CASE("dropping the inhabitation guard lets overflow into the finite class") {
    auto u = build_universe(3, 2);
    Arith a(u, 2, Mutation::fclosure_drop_inhabited);
    CHECK(a.in_fcard(a.lambda()));
    CHECK(a.fcard().size() == 5);

    Arith sane(u, 2);
    CHECK(!sane.in_fcard(sane.lambda()));
}
