#pragma once

#include <nlohmann/json.hpp>

#include "coblab/complex2.hpp"
#include "coblab/gf2.hpp"
#include "coblab/latin.hpp"

namespace coblab {

using json = nlohmann::json;

inline json to_json(const LatinSquare& square) {
    json rows = json::array();
    for (const auto& row : square.rows) rows.push_back(row.image);
    return json{{"n", square.n()}, {"rows", rows}};
}

inline LatinSquare latin_from_json(const json& j) {
    LatinSquare square;
    for (const auto& row : j.at("rows")) {
        Permutation p;
        p.image = row.get<std::vector<int>>();
        square.rows.push_back(std::move(p));
    }
    if (square.n() != j.at("n").get<int>() || !is_legal(square))
        throw InvariantError("latin_from_json: not a legal Latin square");
    return square;
}

inline json to_json(const PairSet& pairs) {
    json out = json::array();
    for (auto [i, j] : pairs.sorted_pairs()) out.push_back(json::array({i, j}));
    return json{{"n", pairs.n}, {"pairs", out}};
}

inline PairSet pairset_from_json(const json& j) {
    PairSet pairs(j.at("n").get<int>());
    for (const auto& p : j.at("pairs")) pairs.insert(p.at(0).get<int>(), p.at(1).get<int>());
    return pairs;
}

inline json to_json(const TriSet& triples) {
    json out = json::array();
    for (int i = 0; i < triples.n; ++i)
        for (int j = 0; j < triples.n; ++j)
            for (int k = 0; k < triples.n; ++k)
                if (triples.contains(i, j, k)) out.push_back(json::array({i, j, k}));
    return json{{"n", triples.n}, {"triples", out}};
}

inline TriSet triset_from_json(const json& j) {
    TriSet triples(j.at("n").get<int>());
    for (const auto& t : j.at("triples"))
        triples.insert(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
    return triples;
}

// Face lists plus the rank -> face tables that keep serialized cochains
// interpretable across runs.
inline json to_json(const Complex2& complex) {
    json edges = json::array();
    for (auto [u, v] : complex.edges) edges.push_back(json::array({u, v}));
    json triangles = json::array();
    for (const auto& t : complex.triangles) triangles.push_back(json::array({t[0], t[1], t[2]}));
    json out{{"schema_version", kFaceIndexSchemaVersion},
             {"vertices", complex.vertex_count},
             {"edges", edges},
             {"triangles", triangles}};
    if (complex.tripartite) out["tripartite_n"] = complex.tripartite->n;
    if (!complex.vertex_labels.empty()) out["vertex_labels"] = complex.vertex_labels;
    return out;
}

inline json to_json(const Cochain& phi) {
    return json{{"schema_version", kFaceIndexSchemaVersion},
                {"degree", phi.degree},
                {"faces", phi.face_count()},
                {"bits_hex", phi.bits.to_hex()}};
}

}  // namespace coblab
