#include "doctest.h"
#include "helpers.hpp"

#include "hicat/verify.hpp"

#include <cstdlib>

using namespace hicat;

TEST_SUITE("verify") {

TEST_CASE("module quotient against almost positive")
{
    auto r = verify_equiv_module_ap(1, 2);
    CHECK(r.pass);
    CHECK(r.subject == "(1,2)");
    CHECK(r.counter("objects matched") == 5);
    CHECK(r.counter("hom pairs compared") == 25);
    CHECK(r.counter("ext pairs compared") == 25);

    auto r23 = verify_equiv_module_ap(2, 3);
    CHECK(r23.pass);
    CHECK(r23.counter("objects matched") == 16);
    CHECK(r23.counter("exangles compared") > 0);
    CHECK(verify_equiv_module_ap(3, 2).pass);
}

TEST_CASE("relative exangles")
{
    for (auto [d, n] : {std::pair{1, 1}, {1, 3}, {2, 3}}) {
        auto r = verify_F_exangles(d, n);
        CAPTURE(d);
        CAPTURE(n);
        CHECK(r.pass);
        CHECK(r.counter("ext pairs scanned") == r.counter("distinguished") + r.counter("not distinguished"));
    }
    // 135 -> 246 in Cluster(2,3): 135 ≀ 246, so the pair is relative.
    auto cluster = CategoryModel::cluster(2, 3);
    auto rf = CategoryModel::relative_f(2, 3);
    CHECK(cluster.ext_dim(T("246"), T("135")) == 1);
    CHECK(rf.ext_dim(T("246"), T("135")) == 1);
    CHECK(verify_F_exangles(2, 3).counter("not distinguished") > 0);
}

TEST_CASE("relative quotient against almost positive")
{
    for (auto [d, n] : {std::pair{1, 1}, {1, 6}, {2, 3}}) {
        auto r = verify_main2(d, n);
        CAPTURE(d);
        CAPTURE(n);
        CHECK(r.pass);
        CHECK(r.counter("objects matched") == static_cast<long long>(gen_nonconsec(n + 2 * d + 1, d).size()));
    }
}

TEST_CASE("model sanity")
{
    CHECK(verify_model_sanity(CategoryModel::module(2, 3)).pass);

    auto window = CategoryModel::derived_window(2, 3, IntRange{1, 3});
    CHECK(window.size() == 18);
    CHECK(verify_model_sanity(window).pass);

    auto c = verify_model_sanity(CategoryModel::cluster(1, 6));
    CHECK(c.pass);
    bool witness = false;
    for (const auto& note : c.notes) witness |= note.rfind("non-commuting witness: ", 0) == 0;
    CHECK(witness);
}

TEST_CASE("sanity catches a missing identity")
{
    auto base = CategoryModel::module(1, 3);
    ModelTables t;
    t.kind = base.kind();
    t.d = 1;
    t.n = 3;
    t.name = "broken";
    t.objects = base.objects();
    const std::size_t n = base.size();
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t g = 0; g < n; ++g) {
            t.hom.push_back(base.hom(s, g) && !(s == 0 && g == 0));
            t.ext.push_back(base.ext(s, g));
        }
    }
    t.compose = [base](std::size_t x, std::size_t y, std::size_t z) { return base.comp(x, y, z); };
    auto r = verify_model_sanity(CategoryModel::from_tables(std::move(t)));
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->find("identity") != std::string::npos);
}

TEST_CASE("theorem names round-trip")
{
    for (auto t : {Theorem::Equivalence, Theorem::FExangles, Theorem::Main2, Theorem::Sanity,
                   Theorem::Correspondence, Theorem::Cardinality}) {
        CHECK(parse_theorem(to_string(t)) == t);
    }
    CHECK_THROWS_AS(parse_theorem("main3"), std::invalid_argument);
}

TEST_CASE("grid parsing")
{
    auto g = Grid::parse("2:3:50");
    CHECK(g.dmax == 2);
    CHECK(g.nmax == 3);
    CHECK(g.objmax == 50);
    auto partial = Grid::parse("1");
    CHECK(partial.dmax == 1);
    CHECK(partial.nmax == Grid{}.nmax);
    CHECK(Grid::parse("::7").objmax == 7);
    CHECK_THROWS(Grid::parse("x"));
    CHECK_THROWS(Grid::parse("1:2:3:4"));
    CHECK_THROWS(Grid::parse("-1"));
}

TEST_CASE("grid runs and skips")
{
    auto reports = run_grid(Theorem::Equivalence, Grid::parse("2:2:8"));
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].subject == "(1,1)");
    CHECK(reports[3].subject == "(2,2)");
    for (const auto& r : reports) {
        CHECK(r.pass);
        CHECK(r.skipped == (grid_cost(Theorem::Equivalence, r.d, r.n) > 8));
    }
    CHECK(reports[3].skipped);
    CHECK_FALSE(reports[0].skipped);

    auto sanity = run_point(Theorem::Sanity, 1, 2);
    CHECK(sanity.pass);
    CHECK_FALSE(sanity.counters.empty());
}

}
