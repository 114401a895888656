/*
 * Copyright 2026 The linesect authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LINESECT_JSON_IO_HPP
#define LINESECT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "linesect/antisym.hpp"
#include "linesect/grassmann.hpp"
#include "linesect/matrix.hpp"
#include "linesect/poly.hpp"

namespace linesect {

using Json = nlohmann::ordered_json;

// Antisymmetric matrix format: {"size": m, "upper": [[i, j, "p/q"], ...]}
// listing only i < j entries; absent pairs are zero.
inline Json antisym_to_json(const AntisymMatrix& a) {
    Json upper = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a(i, j) != 0)
                upper.push_back(Json::array(
                    {i, j, rat_to_string(a(i, j))}));
    return Json{{"size", a.size()}, {"upper", upper}};
}

inline AntisymMatrix antisym_from_json(const Json& j) {
    AntisymMatrix a(j.at("size").get<std::size_t>());
    for (const Json& entry : j.at("upper")) {
        const auto i = entry.at(0).get<std::size_t>();
        const auto k = entry.at(1).get<std::size_t>();
        if (i >= k || k >= a.size())
            throw std::invalid_argument("antisym json: bad index pair");
        a.set(i, k, rat_from_string(entry.at(2).get<std::string>()));
    }
    return a;
}

// Section format: {"N": int, "matrices": [antisym, ...]}
inline Json section_to_json(const SectionSpec& s) {
    Json mats = Json::array();
    for (const AntisymMatrix& a : s.matrices()) mats.push_back(antisym_to_json(a));
    return Json{{"N", s.N()}, {"matrices", mats}};
}

inline SectionSpec section_from_json(const Json& j) {
    std::vector<AntisymMatrix> mats;
    for (const Json& m : j.at("matrices")) mats.push_back(antisym_from_json(m));
    return SectionSpec(j.at("N").get<std::size_t>(), std::move(mats));
}

inline Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rat_to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline RatMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = j.size();
    if (rows == 0) return RatMatrix(0, 0);
    RatMatrix m(rows, j.at(0).size());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(i, c) = rat_from_string(j.at(i).at(c).get<std::string>());
    return m;
}

inline Json vec_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_to_string(x));
    return out;
}

inline RatVec vec_from_json(const Json& j) {
    RatVec v;
    for (const Json& x : j) v.push_back(rat_from_string(x.get<std::string>()));
    return v;
}

// Homogeneous polynomial: {"degree": d, "terms": [[e0, e1, e2, "p/q"], ...]}
inline Json poly_to_json(const HomogPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json::array({e[0], e[1], e[2], rat_to_string(c)}));
    return Json{{"degree", p.degree()}, {"terms", terms}};
}

inline HomogPoly poly_from_json(const Json& j) {
    HomogPoly p;
    for (const Json& t : j.at("terms"))
        p += HomogPoly::monomial(rat_from_string(t.at(3).get<std::string>()),
                                 {t.at(0).get<int>(), t.at(1).get<int>(),
                                  t.at(2).get<int>()});
    return p;
}

}  // namespace linesect

#endif
