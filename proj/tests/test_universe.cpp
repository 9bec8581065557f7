#include <catch2/catch_amalgamated.hpp>

#include <nfkit/universe.hpp>

using namespace nfkit;

TEST_CASE("level sizes are iterated powersets") {
    auto u3 = build_universe(3, 2);
    CHECK(u3.size(0) == 3);
    CHECK(u3.size(1) == 8);
    CHECK(u3.size(2) == 256);

    auto u0 = build_universe(0, 2);
    CHECK(u0.size(0) == 0);
    CHECK(u0.size(1) == 1);
    CHECK(u0.size(2) == 2);

    auto u4 = build_universe(4, 2);
    CHECK(u4.size(0) == 4);
    CHECK(u4.size(1) == 16);
    CHECK(u4.size(2) == 65536);
}

TEST_CASE("enumeration refuses to outgrow the budget") {
    CHECK_THROWS_AS(build_universe(3, 2, 100), UniverseError);
    CHECK_THROWS_AS(build_universe(3, 3), UniverseError);
    CHECK_THROWS_AS(build_universe(4, 3), UniverseError);
    CHECK_NOTHROW(build_universe(2, 3));
    auto u = build_universe(3, 2);
    CHECK_THROWS_AS(u.size(3), UniverseError);
    CHECK_THROWS_AS(u.size(-1), UniverseError);
}

TEST_CASE("the index of a set is its membership mask") {
    auto u = build_universe(3, 2);
    for (int level = 1; level <= 2; ++level)
        for (std::size_t i = 0; i < u.size(level); ++i) {
            Elem e{level, i};
            SetVal s = expand(u, e);
            CHECK(index_of(u, s) == i);
            CHECK(elem_of(u, s) == e);
            CHECK(s.card() == static_cast<std::size_t>(__builtin_popcountll(i)));
            for (auto m : members(s)) CHECK(contains(s, m));
        }
    CHECK_THROWS_AS(expand(u, Elem{0, 1}), UniverseError);
    CHECK_THROWS_AS(index_of(u, full_set(u, 3)), UniverseError);
    CHECK_THROWS_AS(empty_set(u, 0), UniverseError);
    CHECK_THROWS_AS(empty_set(u, 4), UniverseError);
    CHECK_NOTHROW(empty_set(u, 3));   // one level past enumeration is representable
}

TEST_CASE("pair coding is invertible") {
    auto u = build_universe(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            SetVal p = mk_opair(u, Elem{0, i}, Elem{0, j});
            CHECK(p.level == 2);
            auto d = decode_opair(u, p);
            REQUIRE(d.has_value());
            CHECK(d->first == Elem{0, i});
            CHECK(d->second == Elem{0, j});
        }
    // non-pairs decode to nothing
    CHECK(!decode_opair(u, full_set(u, 2)).has_value());
    SetVal junk = empty_set(u, 2);
    junk.bits.set(0);   // { Lambda } has a non-singleton sole member
    CHECK(!decode_opair(u, junk).has_value());
    CHECK_THROWS_AS(mk_upair(u, Elem{0, 0}, Elem{1, 0}), UniverseError);
}

TEST_CASE("triple coding is invertible four levels up") {
    auto u = build_universe(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                SetVal t = mk_otriple(u, Elem{0, i}, Elem{0, j}, Elem{0, k});
                CHECK(t.level == 4);
                auto d = decode_otriple(u, t);
                REQUIRE(d.has_value());
                CHECK((*d)[0] == Elem{0, i});
                CHECK((*d)[1] == Elem{0, j});
                CHECK((*d)[2] == Elem{0, k});
            }
}

TEST_CASE("singleton image and subset collection behave like counting says") {
    auto u = build_universe(3, 2);
    for (std::size_t i = 0; i < u.size(1); ++i) {
        SetVal a = expand(u, Elem{1, i});
        SetVal ua = usc(u, a);
        CHECK(ua.level == 2);
        CHECK(ua.card() == a.card());
        for (auto m : members(ua)) CHECK(expand(u, m).card() == 1);

        SetVal sa = ssc(u, a);
        CHECK(sa.card() == (std::size_t{1} << a.card()));
        for (auto m : members(sa)) CHECK(subset(expand(u, m), a));
        CHECK(sc(u, a) == sa);

        // the two collection operators commute in cardinality
        CHECK(ssc(u, ua).card() == usc(u, sa).card());
    }
    CHECK_THROWS_AS(ssc(u, full_set(u, 3)), UniverseError);   // 256 members: enumeration refused
}

TEST_CASE("set algebra stays at one level and honours masks") {
    auto u = build_universe(3, 2);
    SetVal a = parse_setval(u, "1:{ 0, 1 }");
    SetVal b = parse_setval(u, "1:{ 1, 2 }");
    CHECK(set_union(a, b) == full_set(u, 1));
    CHECK(set_inter(a, b) == parse_setval(u, "1:{ 1 }"));
    CHECK(set_diff(a, b) == parse_setval(u, "1:{ 0 }"));
    CHECK(subset(set_inter(a, b), a));
    CHECK(!subset(a, b));
    CHECK_THROWS_AS(set_union(a, full_set(u, 2)), UniverseError);

    SetVal fam = usc(u, a);
    CHECK(big_union(u, fam) == a);
    CHECK_THROWS_AS(big_union(u, a), UniverseError);

    SetVal grown = adjoin(u, a, Elem{0, 2});
    CHECK(grown == full_set(u, 1));
    CHECK_THROWS_AS(adjoin(u, a, Elem{1, 0}), UniverseError);
}

TEST_CASE("products pair everything once") {
    auto u = build_universe(3, 2);
    SetVal a = parse_setval(u, "1:{ 0, 1 }");
    SetVal b = parse_setval(u, "1:{ 2 }");
    SetVal p = product(u, a, b);
    CHECK(p.level == 3);
    CHECK(p.card() == a.card() * b.card());
    for (auto m : members(p)) {
        auto d = decode_opair(u, expand(u, m));
        REQUIRE(d.has_value());
        CHECK(contains(a, d->first));
        CHECK(contains(b, d->second));
    }
    CHECK(product(u, a, empty_set(u, 1)).empty());
}

TEST_CASE("graphs project to domain, range, and images") {
    auto u = build_universe(3, 2);
    // f = { <x, x+1 mod 3> : x an atom }
    SetVal f = empty_set(u, 3);
    for (std::size_t x = 0; x < 3; ++x)
        f.bits.set(index_of(u, mk_opair(u, Elem{0, x}, Elem{0, (x + 1) % 3})));
    CHECK(graph_dom(u, f) == full_set(u, 1));
    CHECK(graph_range(u, f) == full_set(u, 1));
    CHECK(is_function(u, f));

    SetVal a = parse_setval(u, "1:{ 0 }");
    CHECK(image(u, f, a) == parse_setval(u, "1:{ 1 }"));
    CHECK(image(u, f, full_set(u, 1)) == full_set(u, 1));
    CHECK_THROWS_AS(image(u, f, full_set(u, 2)), UniverseError);

    auto g = decode_graph(u, f);
    CHECK(g.elem_level == 0);
    CHECK(g.pairs.size() == 3);
    CHECK(g.all_members_were_pairs);
    CHECK(is_one_one(g, full_set(u, 1), full_set(u, 1)));
    CHECK(is_onto(g, full_set(u, 1), full_set(u, 1)));
}

TEST_CASE("application takes the union of related values") {
    auto u = build_universe(2, 3);
    SetVal a = parse_setval(u, "1:{ 0 }");
    SetVal b = parse_setval(u, "1:{ 0, 1 }");
    Elem ea = elem_of(u, a), eb = elem_of(u, b);

    SetVal f = empty_set(u, 4);
    f.bits.set(index_of(u, mk_opair(u, ea, eb)));
    CHECK(ap(u, f, ea) == b);
    CHECK(ap(u, f, eb).empty());   // not in the domain

    f.bits.set(index_of(u, mk_opair(u, ea, ea)));
    CHECK(ap(u, f, ea) == set_union(a, b));

    CHECK_THROWS_AS(ap(u, parse_setval(u, "3:{}"), Elem{0, 0}), UniverseError);
}

TEST_CASE("similarity is mutual one-one mapping, witnessed") {
    auto u = build_universe(3, 2);
    for (std::size_t i = 0; i < u.size(1); ++i)
        for (std::size_t j = 0; j < u.size(1); ++j) {
            SetVal a = expand(u, Elem{1, i});
            SetVal b = expand(u, Elem{1, j});
            bool sim = similar(a, b);
            CHECK(sim == (a.card() == b.card()));
            auto w = similarity_witness(a, b);
            CHECK(w.has_value() == sim);
            if (w) CHECK(validate_bijection(*w, a, b));
        }
    // a two-to-one map is rejected by the validator
    SetVal a = parse_setval(u, "1:{ 0, 1 }");
    SetVal b = parse_setval(u, "1:{ 0, 1 }");
    PairFn bad{0, {{0, 0}, {1, 0}}, true};
    CHECK(!validate_bijection(bad, a, b));
    PairFn off_level{1, {{0, 0}, {1, 1}}, true};
    CHECK(!validate_bijection(off_level, a, b));
}

TEST_CASE("everything in a finite universe is finite") {
    auto u = build_universe(3, 2);
    for (int level = 1; level <= 2; ++level)
        for (std::size_t i = 0; i < u.size(level); ++i) {
            SetVal s = expand(u, Elem{level, i});
            CHECK(is_finite(u, s));
            CHECK(has_dec_eq(u, s));
        }
    CHECK(is_finite(u, full_set(u, 3)));   // adjunction chain one level past enumeration
    CHECK(is_finite(u, empty_set(u, 3)));
}

TEST_CASE("no set here has a proper part of its own size") {
    auto u = build_universe(3, 2);
    for (std::size_t i = 0; i < u.size(1); ++i)
        CHECK(!is_dedekind_infinite(u, expand(u, Elem{1, i})));
    CHECK(!is_dedekind_infinite(u, parse_setval(u, "2:{ {0}, {1,2} }")));
}

TEST_CASE("set text round-trips") {
    auto u = build_universe(3, 2);
    const char* samples[] = {
        "1:{}", "1:{ 0, 2 }", "2:{ {}, { 0, 1 } }", "2:{ { 0 }, { 1 }, { 2 } }",
        "3:{ { {} }, { { 0 }, { 0, 1 } } }",
    };
    for (const char* s : samples) {
        CAPTURE(s);
        SetVal v = parse_setval(u, s);
        CHECK(render_setval(u, v) == s);
        CHECK(parse_setval(u, render_setval(u, v)) == v);
    }
    // member order in the text does not matter; the value is canonical
    CHECK(parse_setval(u, "2:{ {0,1}, {} }") == parse_setval(u, "2:{ {}, { 1, 0 } }"));

    CHECK_THROWS_AS(parse_setval(u, "1:{ 5 }"), UniverseError);
    CHECK_THROWS_AS(parse_setval(u, "0:{}"), UniverseError);
    CHECK_THROWS_AS(parse_setval(u, "1:{ 0 } junk"), UniverseError);
    CHECK_THROWS_AS(parse_setval(u, "2:{ 0 }"), UniverseError);
    CHECK_THROWS_AS(parse_setval(u, "1:{ 0"), UniverseError);
}
