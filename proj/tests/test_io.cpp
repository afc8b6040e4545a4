#include <catch2/catch.hpp>

#include "catchain/json_io.hpp"
#include "fixtures.hpp"

using namespace catchain;

TEST_CASE("category document parses", "[io]") {
    const json doc = json::parse(R"({
        "objects": ["x", "y"],
        "morphisms": [
            {"id": "id_x", "src": "x", "tgt": "x"},
            {"id": "id_y", "src": "y", "tgt": "y"},
            {"id": "f", "src": "x", "tgt": "y"}
        ],
        "identities": {"x": "id_x", "y": "id_y"},
        "compose": []
    })");
    const FinCategory c = validate_category(parse_category(doc));
    CHECK(c == fixtures::walking_arrow());
}

TEST_CASE("category schema errors", "[io]") {
    CHECK_THROWS_AS(parse_category(json::parse(R"({"objects": ["x"]})")), SchemaError);
    CHECK_THROWS_AS(parse_category(json::parse(
                        R"({"objects": [""], "morphisms": [], "identities": {}, "compose": []})")),
                    SchemaError);
    CHECK_THROWS_AS(parse_category(json::parse(
                        R"({"objects": ["a,b"], "morphisms": [], "identities": {}, "compose": []})")),
                    SchemaError);
    CHECK_THROWS_AS(parse_category(json::parse(
                        R"({"objects": [3], "morphisms": [], "identities": {}, "compose": []})")),
                    SchemaError);
}

TEST_CASE("graph document parses rational strings", "[io]") {
    const json doc = json::parse(R"({
        "dim0": 1, "dim1": 2,
        "s": [["1", "1/2"]],
        "t": [["1", "-1/2"]],
        "i": [["1"], ["0"]]
    })");
    const ReflexiveVectGraph g = validate_graph(parse_graph(doc));
    CHECK(g.s(0, 1) == Rational(1, 2));
    CHECK(g.t(0, 1) == Rational(-1, 2));

    json broken = doc;
    broken["s"][0][1] = "1/0";
    CHECK_THROWS_AS(parse_graph(broken), SchemaError);
    broken["s"] = json::array({json::array({"1"})});
    CHECK_THROWS_AS(parse_graph(broken), SchemaError);
}

TEST_CASE("magma document parses", "[io]") {
    const json doc = json::parse(R"({
        "carrier": ["0", "1", "2"],
        "op1": [["0","1","2"],["1","2","0"],["2","0","1"]],
        "op2": [["0","1","2"],["1","2","0"],["2","0","1"]],
        "unit1": "0", "unit2": "0"
    })");
    const MagmaPair m = parse_magma(doc);
    CHECK(check_magma(m).empty());
    CHECK(m.op1 == fixtures::z3_additive().op1);

    json broken = doc;
    broken["op1"][0][0] = "9";
    CHECK_THROWS_AS(parse_magma(broken), SchemaError);
}

TEST_CASE("functor and transformation documents parse", "[io]") {
    const FunctorData f = parse_functor(json::parse(
        R"({"obj_map": {"x": "0", "y": "1"}, "mor_map": {"f": "a", "id_x": "id0", "id_y": "id1"}})"));
    CHECK(f.obj_map.at("x") == "0");
    const NatTransfData a = parse_nat_transf(json::parse(R"({"components": {"x": "c"}})"));
    CHECK(a.components.at("x") == "c");
    CHECK_THROWS_AS(parse_functor(json::parse(R"({"obj_map": {}})")), SchemaError);
}

TEST_CASE("chain complex serialization is stable", "[io]") {
    const SimplicialSetTrunc s = nerve(fixtures::terminal_category(), 2);
    const ChainComplex c = alternating_complex(free_simplicial_vector_space(s));
    const json doc = chain_complex_to_json(c);
    CHECK(doc.dump() ==
          R"({"bases":[["*"],["id"],["id,id"]],"boundaries":[{"degree":1,"matrix":[["0"]]},{"degree":2,"matrix":[["1"]]}],"degrees":[1,1,1],"truncation":2})");
    // serializing twice gives identical bytes
    CHECK(doc.dump(2) == chain_complex_to_json(c).dump(2));
}
