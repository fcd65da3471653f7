/* Copyright 2026 The qgeom Authors
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
 *
 */

/**
 * @file io.hpp
 * @brief JSON configs and reports, graph interchange formats.
 *
 * Config parsing throws ConfigError; everything that reaches the library is
 * validated by the library itself as well.
 */

#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qgeom/embed.hpp"

namespace qgeom::io {

using nlohmann::json;

/// Malformed or inconsistent configuration input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline; byte-identical for equal values.
void write_json_file(const std::string& path, const json& value);
void write_text_file(const std::string& path, const std::string& text);

/// {"p":2,"e":2,"modulus":[1,1,1]}; modulus may be omitted for e = 1 or when a
/// documented default exists.
gf::FieldSpec parse_field_spec(const json& j);
json to_json(const gf::FieldSpec& spec);

/// {"kind":..., "form_dim":n', "gram":[[...]]} or {"quad":[[...]]}.
FormSpec parse_form_spec(const Field& field, const json& j);
json to_json(const FormSpec& form);

struct PolarConfig {
  gf::FieldSpec field;
  json form;
};

/// {"field":{...}, "form":{...}}
PolarConfig parse_polar_config(const json& j);

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Field& field, std::size_t n, const json& j);
json matrix_to_json(const Matrix& m);

/// [{source_index, source_basis, image_basis}, ...]
json embedding_to_json(const PolarSpace& ps, const Embedding& e);
/// Checks source_basis against the canonical maximals and that the table is total.
Embedding embedding_from_json(const PolarSpace& ps, std::size_t k, const json& j);

json to_json(const VerifyReport& r);
json to_json(const StructureReport& r);
json to_json(const EquivalenceWitness& w);
json to_json(const ClassificationReport& r, bool with_labels);
json to_json(const IntersectionNumbers& in);

std::string to_graph6(const FiniteGraph& g);
/// Edge list "u,v" with u < v, one per line, lexicographic.
std::string to_csv(const FiniteGraph& g);
/// {"order", "vertices": [basis...], "adjacency": [[...]]}
json graph_to_json(const FiniteGraph& g, const std::vector<Subspace>& vertices);

}  // namespace qgeom::io
