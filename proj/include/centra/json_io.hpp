#pragma once

#include <string>

#include <json.hpp>

#include "centra/backends.hpp"
#include "centra/hm.hpp"
#include "centra/profile.hpp"

// Exact-rational JSON matrix documents and helpers shared by the CLI and the
// bridge wire format: {"n": k, "entries": [[..k strings..] x k]} with each
// entry "p" or "p/q", q > 0, reduced, '-' prefix only.

namespace centra {

using Json = nlohmann::json;

inline Json matrix_to_json(const QMatrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"n", m.rows()}, {"entries", std::move(entries)}};
}

inline QMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("matrix document must have fields 'n' and 'entries'");
    int n = j.at("n").get<int>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || int(entries.size()) != n)
        throw std::invalid_argument("matrix document: 'entries' must be an n x n array");
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const Json& row = entries.at(i);
        if (!row.is_array() || int(row.size()) != n)
            throw std::invalid_argument("matrix document: ragged entries");
        for (int c = 0; c < n; ++c) m(i, c) = rat_from_string(row.at(c).get<std::string>());
    }
    return m;
}

inline Json config_to_json(const SearchConfig& cfg, int depth) {
    return Json{{"bound", cfg.coeff_bound},
                {"primes", cfg.filter_primes},
                {"max_candidates", cfg.max_candidates},
                {"depth", depth}};
}

inline Json certificate_to_json(const Certificate& c) {
    Json j{{"kind", c.name()}, {"detail", c.detail}};
    if (c.prime > 0) j["prime"] = c.prime;
    return j;
}

inline Json evidence_to_json(const TitsClass& tc) {
    switch (tc.evidence.kind) {
        case TitsClass::Evidence::Kind::ChiEqualsMu:
            return Json("chi=mu");
        case TitsClass::Evidence::Kind::RepeatedBlockSize:
            return Json{{"kind", "repeated-block-size"},
                        {"factor", tc.evidence.factor.to_string()},
                        {"j", tc.evidence.j}};
        default:
            return Json{{"kind", "distinct-block-sizes"},
                        {"factor", tc.evidence.factor.to_string()},
                        {"sizes", tc.evidence.sizes}};
    }
}

inline Json generating_set_to_json(const GeneratingSet& g) {
    Json elems = Json::array();
    for (const QMatrix& e : g.elements) elems.push_back(matrix_to_json(e));
    return Json{{"elements", std::move(elems)}, {"complete", g.complete}};
}

inline Json profile_to_json(const BlockProfile& bp) {
    Json factors = Json::array();
    for (const FactorProfile& fp : bp.factors) {
        factors.push_back(Json{{"factor", fp.factor.to_string()},
                               {"multiplicity", fp.multiplicity},
                               {"filtration", fp.filtration.dims},
                               {"block_sizes", fp.block_sizes_desc()}});
    }
    return Json{{"n", bp.n}, {"factors", std::move(factors)}};
}

}  // namespace centra
