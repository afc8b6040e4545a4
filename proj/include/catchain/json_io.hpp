#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catchain/chain.hpp"
#include "catchain/fincat.hpp"
#include "catchain/twovect.hpp"

namespace catchain {

using nlohmann::json;

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw SchemaError("cannot parse '" + path + "': " + e.what());
    }
    return doc;
}

namespace detail {

inline const json& field(const json& doc, const char* key, const char* where) {
    if (!doc.is_object() || !doc.contains(key))
        throw SchemaError(std::string(where) + ": missing field '" + key + "'");
    return doc.at(key);
}

inline std::string expect_string(const json& v, const char* where) {
    if (!v.is_string()) throw SchemaError(std::string(where) + ": expected a string");
    return v.get<std::string>();
}

inline std::string expect_id(const json& v, const char* where) {
    std::string id = expect_string(v, where);
    if (id.empty()) throw SchemaError(std::string(where) + ": empty id");
    if (id.find(',') != std::string::npos)
        throw SchemaError(std::string(where) + ": id '" + id + "' contains ','");
    return id;
}

inline std::size_t expect_count(const json& v, const char* where) {
    if (!v.is_number_unsigned()) throw SchemaError(std::string(where) + ": expected a non-negative integer");
    return v.get<std::size_t>();
}

// Rational entries are strings like "3/2"; bare JSON integers are accepted too.
inline Rational expect_rational(const json& v, const char* where) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw SchemaError(std::string(where) + ": expected a rational string");
}

inline Matrix expect_matrix(const json& v, std::size_t rows, std::size_t cols, const char* where) {
    if (!v.is_array() || v.size() != rows)
        throw SchemaError(std::string(where) + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = v.at(r);
        if (!row.is_array() || row.size() != cols)
            throw SchemaError(std::string(where) + ": expected " + std::to_string(cols) +
                              " entries per row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = expect_rational(row.at(c), where);
    }
    return m;
}

inline std::map<std::string, std::string> expect_string_map(const json& v, const char* where) {
    if (!v.is_object()) throw SchemaError(std::string(where) + ": expected an object");
    std::map<std::string, std::string> out;
    for (const auto& [key, value] : v.items()) out[key] = expect_string(value, where);
    return out;
}

}  // namespace detail

// {"objects": [...], "morphisms": [{"id","src","tgt"}...],
//  "identities": {object: morphism}, "compose": [{"g","f","result"}...]}
inline CategoryData parse_category(const json& doc) {
    CategoryData data;
    const json& objects = detail::field(doc, "objects", "category");
    if (!objects.is_array()) throw SchemaError("category: 'objects' must be an array");
    for (const auto& o : objects) data.objects.push_back(detail::expect_id(o, "category objects"));

    const json& morphisms = detail::field(doc, "morphisms", "category");
    if (!morphisms.is_array()) throw SchemaError("category: 'morphisms' must be an array");
    for (const auto& m : morphisms)
        data.morphisms.push_back({detail::expect_id(detail::field(m, "id", "morphism"), "morphism id"),
                                  detail::expect_id(detail::field(m, "src", "morphism"), "morphism src"),
                                  detail::expect_id(detail::field(m, "tgt", "morphism"), "morphism tgt")});

    const json& identities = detail::field(doc, "identities", "category");
    if (!identities.is_object()) throw SchemaError("category: 'identities' must be an object");
    for (const auto& [obj, mor] : identities.items())
        data.identities[obj] = detail::expect_string(mor, "identities");

    const json& compose = detail::field(doc, "compose", "category");
    if (!compose.is_array()) throw SchemaError("category: 'compose' must be an array");
    for (const auto& e : compose)
        data.composites.push_back(
            {detail::expect_string(detail::field(e, "g", "compose entry"), "compose g"),
             detail::expect_string(detail::field(e, "f", "compose entry"), "compose f"),
             detail::expect_string(detail::field(e, "result", "compose entry"), "compose result")});
    return data;
}

// {"dim0": n, "dim1": m, "s": [[...]], "t": [[...]], "i": [[...]]}
inline ReflexiveVectGraph parse_graph(const json& doc) {
    ReflexiveVectGraph g;
    g.dim0 = detail::expect_count(detail::field(doc, "dim0", "graph"), "graph dim0");
    g.dim1 = detail::expect_count(detail::field(doc, "dim1", "graph"), "graph dim1");
    g.s = detail::expect_matrix(detail::field(doc, "s", "graph"), g.dim0, g.dim1, "graph s");
    g.t = detail::expect_matrix(detail::field(doc, "t", "graph"), g.dim0, g.dim1, "graph t");
    g.i = detail::expect_matrix(detail::field(doc, "i", "graph"), g.dim1, g.dim0, "graph i");
    return g;
}

// {"carrier": [...], "op1": [[ids]], "op2": [[ids]], "unit1": id, "unit2": id}
inline MagmaPair parse_magma(const json& doc) {
    MagmaPair m;
    const json& carrier = detail::field(doc, "carrier", "magma");
    if (!carrier.is_array()) throw SchemaError("magma: 'carrier' must be an array");
    std::map<std::string, std::size_t> index;
    for (const auto& e : carrier) {
        std::string id = detail::expect_id(e, "magma carrier");
        if (index.count(id)) throw SchemaError("magma: duplicate element '" + id + "'");
        index[id] = m.elements.size();
        m.elements.push_back(std::move(id));
    }
    const std::size_t n = m.elements.size();
    const auto read_table = [&](const char* key) {
        const json& t = detail::field(doc, key, "magma");
        if (!t.is_array() || t.size() != n)
            throw SchemaError(std::string("magma: '") + key + "' must be an n x n array");
        std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
        for (std::size_t r = 0; r < n; ++r) {
            if (!t.at(r).is_array() || t.at(r).size() != n)
                throw SchemaError(std::string("magma: '") + key + "' must be an n x n array");
            for (std::size_t c = 0; c < n; ++c) {
                const std::string id = detail::expect_string(t.at(r).at(c), key);
                auto it = index.find(id);
                if (it == index.end())
                    throw SchemaError(std::string("magma: '") + key + "' refers to unknown element '" + id + "'");
                table[r][c] = it->second;
            }
        }
        return table;
    };
    m.op1 = read_table("op1");
    m.op2 = read_table("op2");
    const auto read_unit = [&](const char* key) {
        const std::string id = detail::expect_string(detail::field(doc, key, "magma"), key);
        auto it = index.find(id);
        if (it == index.end()) throw SchemaError(std::string("magma: unknown unit '") + id + "'");
        return it->second;
    };
    m.unit1 = read_unit("unit1");
    m.unit2 = read_unit("unit2");
    return m;
}

// {"obj_map": {x: Fx}, "mor_map": {f: Ff}}
inline FunctorData parse_functor(const json& doc) {
    FunctorData data;
    data.obj_map = detail::expect_string_map(detail::field(doc, "obj_map", "functor"), "obj_map");
    data.mor_map = detail::expect_string_map(detail::field(doc, "mor_map", "functor"), "mor_map");
    return data;
}

// {"components": {x: morphism-in-target}}
inline NatTransfData parse_nat_transf(const json& doc) {
    NatTransfData data;
    data.components =
        detail::expect_string_map(detail::field(doc, "components", "natural transformation"), "components");
    return data;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

// External chain-complex document: degrees, bases, boundary matrices.
inline json chain_complex_to_json(const ChainComplex& c) {
    json doc;
    doc["truncation"] = c.top_degree();
    json degrees = json::array();
    json bases = json::array();
    for (const auto& space : c.spaces) {
        degrees.push_back(space.dim());
        bases.push_back(space.basis);
    }
    doc["degrees"] = std::move(degrees);
    doc["bases"] = std::move(bases);
    json boundaries = json::array();
    for (std::size_t n = 1; n <= c.top_degree(); ++n) {
        json entry;
        entry["degree"] = n;
        entry["matrix"] = matrix_to_json(c.boundary(n));
        boundaries.push_back(std::move(entry));
    }
    doc["boundaries"] = std::move(boundaries);
    return doc;
}

}  // namespace catchain
