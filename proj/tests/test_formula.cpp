#include <catch2/catch_amalgamated.hpp>

#include <nfkit/formula.hpp>
#include <nfkit/parse.hpp>
#include <nfkit/stratify.hpp>

using namespace nfkit;

TEST_CASE("parse and render round-trip the core syntax") {
    // left column parses; right column is the canonical rendering
    const std::pair<const char*, const char*> cases[] = {
        {"x in y", "x in y"},
        {"{x} in y", "{x} in y"},
        {"{x,y} = z", "{x,y} = z"},
        {"<x,y> in f", "<x,y> in f"},
        {"<x,y,z> in w", "<x,y,z> in w"},
        {"not x in x", "not x in x"},
        {"x in y & y in z", "x in y & y in z"},
        {"x in y | y in z", "x in y | y in z"},
        {"x in y -> y in z", "x in y -> y in z"},
        {"x in y <-> y in z", "x in y <-> y in z"},
        {"forall x. x in y", "forall x. x in y"},
        {"exists x. x in y", "exists x. x in y"},
        {"usc(x) = ssc(y)", "usc(x) = ssc(y)"},
        {"plus(x,times(y,z)) = w", "plus(x, times(y, z)) = w"},
        {"exp2(m) in F", "exp2(m) in F"},
        {"T(k) = nc(x)", "T(k) = nc(x)"},
        {"bigunion(x) in FINITE", "bigunion(x) in FINITE"},
        {"zero in SF", "zero in SF"},
        {"Lambda = diff(x,x)", "Lambda = diff(x, x)"},
        {"true -> false", "true -> false"},
    };
    for (auto [in, want] : cases) {
        CAPTURE(in);
        CHECK(render(parse_formula(in)) == want);
    }
}

TEST_CASE("rendered formulas parse back to equal trees") {
    const char* texts[] = {
        "z = <x,y> <-> z = {{x},{x,y}}",
        "v = ap(f,x) <-> v = { u : exists y. (<x,y> in f & u in y) }",
        "x in FINITE <-> forall c. ((Lambda in c & forall y. forall z. (y in c -> union2(y,{z}) in c)) -> x in c)",
        "not (x in y & y in x)",
        "forall x in a. exists y in b. <x,y> in f",
    };
    for (auto* t : texts) {
        CAPTURE(t);
        auto f = parse_formula(t);
        CHECK(formula_eq(f, parse_formula(render(f))));
    }
}

TEST_CASE("bounded quantifiers desugar to guarded bodies") {
    auto bounded = parse_formula("forall x in a. x in b");
    auto spelled = parse_formula("forall x. (x in a -> x in b)");
    CHECK(formula_eq(bounded, spelled));

    auto bounded_e = parse_formula("exists x in a. x in b");
    auto spelled_e = parse_formula("exists x. (x in a & x in b)");
    CHECK(formula_eq(bounded_e, spelled_e));
}

TEST_CASE("sub desugars to a fresh universal") {
    auto f = parse_formula("sub(a,b)");
    auto g = parse_formula("forall w. (w in a -> w in b)");
    CHECK(formula_eq(f, g));

    // the fresh variable dodges captures
    auto h = parse_formula("sub(w,b)");
    auto vars = free_vars(h);
    CHECK(vars.count("w") == 1);
    CHECK(vars.count("b") == 1);
    CHECK(render(h).find("w0") != std::string::npos);
}

TEST_CASE("precedence: iff lowest, then impl, disj, conj") {
    auto f = parse_formula("x in a & y in b | z in c -> u in d <-> v in e");
    CHECK(render(f) == "x in a & y in b | z in c -> u in d <-> v in e");
    CHECK(f->kind == Formula::Kind::iff);
    CHECK(f->a->kind == Formula::Kind::impl);
    CHECK(f->a->a->kind == Formula::Kind::disj);
    CHECK(f->a->a->a->kind == Formula::Kind::conj);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_formula("x in"), ParseError);
    CHECK_THROWS_AS(parse_formula("in x"), ParseError);
    CHECK_THROWS_AS(parse_formula("{x"), ParseError);
    CHECK_THROWS_AS(parse_formula("<x,y"), ParseError);
    CHECK_THROWS_AS(parse_formula("usc(x,y) = z"), ParseError);     // arity
    CHECK_THROWS_AS(parse_formula("plus(x) = z"), ParseError);      // arity
    CHECK_THROWS_AS(parse_formula("forall zero. x in y"), ParseError);
    CHECK_THROWS_AS(parse_formula("x in y)"), ParseError);          // trailing input
    CHECK_THROWS_AS(parse_formula(""), ParseError);
    CHECK_THROWS_AS(parse_formula("x # y"), ParseError);
}

TEST_CASE("free variables respect binders") {
    auto f = parse_formula("forall x. (x in y & exists z. z in x)");
    auto fv = free_vars(f);
    CHECK(fv == std::set<std::string>{"y"});

    auto g = parse_formula("{ u : u in v } in w");
    CHECK(free_vars(g) == std::set<std::string>{"v", "w"});

    auto h = parse_formula("x in x");
    CHECK(free_vars(h) == std::set<std::string>{"x"});
}

TEST_CASE("constants are not variables") {
    auto f = parse_formula("zero in F & Lambda in SF & x in G");
    CHECK(free_vars(f) == std::set<std::string>{"x"});
}

TEST_CASE("parameters are free variables used only as bare membership targets") {
    // p is only ever a right operand of `in`; y shows up on the left too
    auto f = parse_formula("x in p & y in p & x in y");
    auto ps = parameters_of(f, "x");
    CHECK(ps == std::vector<std::string>{"p"});

    // eigen never counts, even when it only occurs on the right
    auto g = parse_formula("x in p");
    CHECK(parameters_of(g, "p").empty());
    CHECK(parameters_of(g, "x") == std::vector<std::string>{"p"});

    // an occurrence under a function symbol disqualifies
    auto h = parse_formula("x in p & y in usc(p)");
    CHECK(parameters_of(h, "x").empty());

    // a bound variable of the same name does not shadow the free analysis;
    // q is a target of a bound variable only, which still keeps it bare
    auto k = parse_formula("x in p & forall p. p in q");
    CHECK(parameters_of(k, "x") == std::vector<std::string>{"p", "q"});
}

TEST_CASE("corpus lines parse into records") {
    std::string text =
        "# comment\n"
        "\n"
        "a\tPASS\tstrat\tx in y\n"
        "b\tFAIL\tstrat-wrt:v\tv in v\n";
    auto recs = parse_corpus(text);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].name == "a");
    CHECK(recs[0].expect_pass);
    CHECK(!recs[0].wrt);
    CHECK(recs[1].name == "b");
    CHECK(!recs[1].expect_pass);
    REQUIRE(recs[1].wrt);
    CHECK(*recs[1].wrt == "v");
    CHECK(recs[1].text == "v in v");
}

TEST_CASE("corpus format errors are rejected") {
    CHECK_THROWS_AS(parse_corpus("a\tPASS\tstrat"), CorpusError);          // 3 columns
    CHECK_THROWS_AS(parse_corpus("a\tMAYBE\tstrat\tx in y"), CorpusError); // bad expectation
    CHECK_THROWS_AS(parse_corpus("a\tPASS\twrt\tx in y"), CorpusError);    // bad mode
    CHECK_THROWS_AS(parse_corpus("a\tPASS\tstrat-wrt:\tx in y"), CorpusError);
}

TEST_CASE("formula equality is structural") {
    CHECK(formula_eq(parse_formula("x in y"), parse_formula("x  in   y")));
    CHECK(!formula_eq(parse_formula("x in y"), parse_formula("y in x")));
    CHECK(!formula_eq(parse_formula("forall x. x in y"), parse_formula("forall z. z in y")));
}
