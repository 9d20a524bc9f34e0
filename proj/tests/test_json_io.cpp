#include "doctest.h"

#include "tsih/errors.hpp"
#include "tsih/json_io.hpp"

#include "helpers.hpp"

#include "json.hpp"

using namespace tsih;
using nlohmann::json;

TEST_CASE("prime set round trip") {
    for (const PrimeSet& s : {PrimeSet::empty(), PrimeSet::all_primes(),
                              PrimeSet::finite({Int(2), Int(7)}), PrimeSet::cofinite({Int(3)})}) {
        CHECK(prime_set_from_json(to_json(s)) == s);
    }
    CHECK_THROWS_AS(prime_set_from_json("{\"kind\": \"finite\"}"), ParseError);
    CHECK_THROWS_AS(prime_set_from_json("{\"kind\": \"nope\", \"primes\": []}"), ParseError);
    CHECK_THROWS_AS(prime_set_from_json("{\"kind\": \"finite\", \"primes\": [4]}"), ValidationError);
}

TEST_CASE("group round trip and validation") {
    testing::Rng rng(6001);
    for (int t = 0; t < 40; ++t) {
        FgAbGroup g = testing::random_group(rng);
        CHECK(group_from_json(to_json(g)) == g);
    }
    // Invariants must form a divisibility chain of values >= 2.
    CHECK_THROWS_AS(group_from_json("{\"rank\": 0, \"invariants\": [2, 3]}"), ValidationError);
    CHECK_THROWS_AS(group_from_json("{\"rank\": 0, \"invariants\": [1]}"), ValidationError);
    CHECK_THROWS_AS(group_from_json("{\"rank\": -1, \"invariants\": []}"), ParseError);
    // Invariants key may be omitted.
    CHECK(group_from_json("{\"rank\": 2}") == FgAbGroup::free_group(2));
}

TEST_CASE("big integers survive the trip as strings") {
    Int big("340282366920938463463374607431768211507");  // above every 64-bit bound
    FgAbGroup g(0, {big});
    std::string text = to_json(g);
    CHECK(group_from_json(text) == g);
    json doc = json::parse(text);
    CHECK(doc["invariants"][0].is_string());
    // Small values stay numeric.
    json small = json::parse(to_json(FgAbGroup::cyclic(Int(12))));
    CHECK(small["invariants"][0].is_number());
}

TEST_CASE("hom round trip") {
    GroupHom f(FgAbGroup::cyclic(Int(4)), FgAbGroup::cyclic(Int(12)), IntMatrix::from_rows({{3}}));
    CHECK(hom_from_json(to_json(f)) == f);
    GroupHom z = GroupHom::zero(FgAbGroup::free_group(2), FgAbGroup::zero());
    CHECK(hom_from_json(to_json(z)) == z);
    // An ill-defined matrix is rejected at reconstruction.
    CHECK_THROWS_AS(hom_from_json("{\"source\": {\"rank\": 0, \"invariants\": [2]}, "
                                  "\"target\": {\"rank\": 1, \"invariants\": []}, "
                                  "\"matrix\": [[1]]}"),
                    ValidationError);
}

TEST_CASE("complex round trip") {
    CochainComplex mult6 = complex_from_json(testing::read_file(testing::data_path("mult6.json")));
    CHECK(mult6.lo() == 0);
    CHECK(mult6.hi() == 1);
    CHECK(mult6.d(0) == IntMatrix::from_rows({{6}}));
    CHECK(complex_from_json(to_json(mult6)) == mult6);

    testing::Rng rng(6002);
    for (int t = 0; t < 40; ++t) {
        CochainComplex c = testing::random_complex(rng).complex;
        CHECK(complex_from_json(to_json(c)) == c);
    }

    CHECK_THROWS_AS(complex_from_json("{\"lo\": 1, \"hi\": 0, \"ranks\": {}}"), ParseError);
    CHECK_THROWS_AS(complex_from_json("{\"lo\": 0, \"hi\": 1, \"ranks\": {\"7\": 1}}"), ParseError);
    CHECK_THROWS_AS(complex_from_json("{\"lo\": 0, \"hi\": 0, \"ranks\": {\"0\": 1}, "
                                      "\"differentials\": {\"0\": [[1]]}}"),
                    ParseError);
    // A differential that fails d.d = 0 is structurally invalid.
    CHECK_THROWS_AS(
        complex_from_json("{\"lo\": 0, \"hi\": 2, \"ranks\": {\"0\": 1, \"1\": 1, \"2\": 1}, "
                          "\"differentials\": {\"0\": [[1]], \"1\": [[1]]}}"),
        ValidationError);
}

TEST_CASE("triangulation round trip") {
    SimplicialComplex k = triangulation_from_json(testing::read_file(testing::data_path("rp2.json")));
    CHECK(k.vertex_count() == 6);
    CHECK(k.facets().size() == 10);
    SimplicialComplex back = triangulation_from_json(to_json(k));
    CHECK(back.vertex_count() == k.vertex_count());
    CHECK(back.facets() == k.facets());
    CHECK_THROWS_AS(triangulation_from_json("{\"vertices\": 3}"), ParseError);
    CHECK_THROWS_AS(triangulation_from_json("{\"vertices\": 3, \"facets\": [[0, 1, 9]]}"),
                    ValidationError);
    CHECK_THROWS_AS(triangulation_from_json("not json at all"), ParseError);
}

TEST_CASE("package round trip") {
    LesPackage pkg = package_from_json(testing::read_file(testing::data_path("euler12-package.json")));
    CHECK(pkg.n() == 4);
    CHECK(pkg.boundary(1) == FgAbGroup::cyclic(Int(12)));
    CHECK(pkg.validate_exactness().ok);
    LesPackage back = package_from_json(to_json(pkg));
    CHECK(back.n() == pkg.n());
    for (int i = 0; i <= pkg.n(); ++i) {
        CHECK(back.boundary(i) == pkg.boundary(i));
        CHECK(back.manifold(i) == pkg.manifold(i));
        CHECK(back.relative(i) == pkg.relative(i));
        CHECK(back.include_boundary(i) == pkg.include_boundary(i));
        CHECK(back.relativize(i) == pkg.relativize(i));
        CHECK(back.connecting(i) == pkg.connecting(i));
    }
    // Wrong matrix shape for the declared groups.
    CHECK_THROWS_AS(package_from_json("{\"n\": 0, "
                                      "\"B\": [{\"rank\": 1}], \"M\": [{\"rank\": 1}], "
                                      "\"R\": [{\"rank\": 0}], "
                                      "\"i\": [[[1, 1]]], \"j\": [[]], \"del\": [[]]}"),
                    ParseError);
}

TEST_CASE("package serialization of a triangulated space round trips") {
    SimplicialComplex k = triangulation_from_json(testing::read_file(testing::data_path("annulus.json")));
    LesPackage pkg = les_package(k);
    LesPackage back = package_from_json(to_json(pkg));
    CHECK(back.validate_exactness().ok);
    for (int i = 0; i <= pkg.n(); ++i) {
        CHECK(back.boundary(i) == pkg.boundary(i));
        CHECK(back.include_boundary(i) == pkg.include_boundary(i));
    }
}

TEST_CASE("perversity and strata round trips") {
    TsPerversity p{-2, PrimeSet::cofinite({Int(5)})};
    CHECK(perversity_from_json(to_json(p)) == p);

    auto links = link_strata_from_json(testing::read_file(testing::data_path("selfdual-free-pass.json")));
    REQUIRE(links.size() == 2);
    CHECK(links[0].codim >= 2);
    std::string text = to_json(links);
    auto back = link_strata_from_json(text);
    REQUIRE(back.size() == links.size());
    for (std::size_t t = 0; t < links.size(); ++t) {
        CHECK(back[t].label == links[t].label);
        CHECK(back[t].codim == links[t].codim);
        CHECK(back[t].group == links[t].group);
        CHECK(back[t].primes == links[t].primes);
    }
    CHECK_THROWS_AS(
        link_strata_from_json("{\"strata\": [{\"codim\": 1, \"group\": {\"rank\": 0}, "
                              "\"primes\": {\"kind\": \"finite\", \"primes\": []}}]}"),
        ValidationError);
}

TEST_CASE("result reports serialize with stable keys") {
    LesPackage pkg = package_from_json(testing::read_file(testing::data_path("euler12-package.json")));
    TsIhResult r = compute_tsih(pkg, TsPerversity{1, PrimeSet::finite({Int(2)})});
    json doc = json::parse(to_json(r));
    CHECK(doc["n"] == 4);
    REQUIRE(doc["degrees"].size() == 5);
    CHECK(doc["degrees"][0]["normal_form"] == "Z");
    CHECK(doc["degrees"][2]["regime"] == "kernel");

    DualityReport rep = duality_report(pkg, TsPerversity{1, PrimeSet::finite({Int(2)})});
    json dd = json::parse(to_json(rep));
    CHECK(dd["pass"] == true);
    CHECK(dd["conclusive"] == true);
    CHECK(dd["rows"].size() == 5);
    CHECK(dd["rows"][0].contains("rank_ok"));

    ConditionReport cond{true, "fine"};
    json cc = json::parse(to_json(cond));
    CHECK(cc["pass"] == true);
    CHECK(cc["detail"] == "fine");
}

TEST_CASE("input sniffing distinguishes the document kinds") {
    CHECK(sniff_input(testing::read_file(testing::data_path("rp2.json"))) == InputKind::Triangulation);
    CHECK(sniff_input(testing::read_file(testing::data_path("euler12-package.json"))) ==
          InputKind::Package);
    CHECK(sniff_input(testing::read_file(testing::data_path("mult6.json"))) == InputKind::Complex);
    CHECK(sniff_input(testing::read_file(testing::data_path("selfdual-free-pass.json"))) ==
          InputKind::Strata);
    CHECK_THROWS_AS(sniff_input("{\"unrelated\": 1}"), ParseError);
    CHECK_THROWS_AS(sniff_input("[1, 2, 3]"), ParseError);
}

TEST_CASE("emitted documents re-ingest to equal normal forms") {
    // Truncation output is itself a valid complex document.
    CochainComplex mult6 = complex_from_json(testing::read_file(testing::data_path("mult6.json")));
    auto tr = tt_truncate(mult6, 0, PrimeSet::finite({Int(2)}));
    CochainComplex back = complex_from_json(to_json(tr.complex));
    CHECK(back == tr.complex);
    for (int i = -1; i <= 2; ++i)
        CHECK(cohomology(back, i) == cohomology(tr.complex, i));
}
