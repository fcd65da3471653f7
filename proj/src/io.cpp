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

#include "qgeom/io.hpp"

#include <fstream>
#include <sstream>

namespace qgeom::io {

namespace {

const json& require(const json& j, const char* key)
{
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

unsigned as_unsigned(const json& j, const char* what)
{
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ConfigError(std::string(what) + " must be a non-negative integer");
  return j.get<unsigned>();
}

Matrix parse_matrix(const Field& field, const json& j, std::size_t rows, std::size_t cols, const char* what)
{
  if (!j.is_array() || j.size() != rows)
    throw ConfigError(std::string(what) + " must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ConfigError(std::string(what) + " row " + std::to_string(r) + " must have " + std::to_string(cols) +
                        " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const unsigned v = as_unsigned(row[c], what);
      if (v >= field.q()) throw ConfigError(std::string(what) + " entry out of field range");
      m.at(r, c) = static_cast<Elem>(v);
    }
  }
  return m;
}

}  // namespace

json read_json_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& value) { write_text_file(path, value.dump(2) + "\n"); }

void write_text_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

gf::FieldSpec parse_field_spec(const json& j)
{
  gf::FieldSpec spec;
  spec.p = as_unsigned(require(j, "p"), "p");
  spec.e = j.contains("e") ? as_unsigned(j.at("e"), "e") : 1;
  if (spec.e == 0) throw ConfigError("e must be positive");
  if (j.contains("modulus")) {
    for (const auto& c : j.at("modulus")) spec.modulus.push_back(as_unsigned(c, "modulus"));
  } else if (spec.e > 1) {
    unsigned q = 1;
    for (unsigned i = 0; i < spec.e; ++i) q *= spec.p;
    try {
      spec.modulus = gf::default_spec(q).modulus;
    } catch (const Error&) {
      throw ConfigError("no default modulus for GF(" + std::to_string(q) + "); give \"modulus\"");
    }
  }
  return spec;
}

json to_json(const gf::FieldSpec& spec)
{
  json j{{"p", spec.p}, {"e", spec.e}};
  if (spec.e > 1) j["modulus"] = spec.modulus;
  return j;
}

FormSpec parse_form_spec(const Field& field, const json& j)
{
  FormSpec form;
  const auto& kind = require(j, "kind");
  if (!kind.is_string()) throw ConfigError("form kind must be a string");
  try {
    form.kind = form_kind_from_string(kind.get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  form.form_dim = as_unsigned(require(j, "form_dim"), "form_dim");
  if (form.form_dim == 0) throw ConfigError("form_dim must be positive");
  if (form.kind == FormKind::quadratic) {
    form.quad = parse_matrix(field, require(j, "quad"), form.form_dim, form.form_dim, "quad");
  } else {
    form.gram = parse_matrix(field, require(j, "gram"), form.form_dim, form.form_dim, "gram");
  }
  return form;
}

json to_json(const FormSpec& form)
{
  json j{{"kind", std::string(to_string(form.kind))}, {"form_dim", form.form_dim}};
  if (form.kind == FormKind::quadratic) j["quad"] = matrix_to_json(form.quad);
  else j["gram"] = matrix_to_json(form.gram);
  return j;
}

PolarConfig parse_polar_config(const json& j)
{
  PolarConfig cfg;
  cfg.field = parse_field_spec(require(j, "field"));
  cfg.form = require(j, "form");
  return cfg;
}

json matrix_to_json(const Matrix& m)
{
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (Elem v : m.row(r)) row.push_back(static_cast<unsigned>(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

json subspace_to_json(const Subspace& s)
{
  json rows = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    json row = json::array();
    for (Elem v : s.row(r)) row.push_back(static_cast<unsigned>(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

Subspace subspace_from_json(const Field& field, std::size_t n, const json& j)
{
  if (!j.is_array()) throw ConfigError("a subspace is a list of row vectors");
  const Matrix m = parse_matrix(field, j, j.size(), n, "basis");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.rows; ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  const Subspace s = span(field, n, rows);
  if (s.dim() != rows.size()) throw ConfigError("basis rows are linearly dependent");
  return s;
}

json embedding_to_json(const PolarSpace& ps, const Embedding& e)
{
  json out = json::array();
  for (std::size_t i = 0; i < e.images.size(); ++i)
    out.push_back({{"source_index", i},
                   {"source_basis", subspace_to_json(ps.maximals().at(i))},
                   {"image_basis", subspace_to_json(e.images[i])}});
  return out;
}

Embedding embedding_from_json(const PolarSpace& ps, std::size_t k, const json& j)
{
  if (!j.is_array()) throw ConfigError("an embedding is a JSON array of entries");
  const std::size_t n = ps.ambient_dim();
  const std::size_t count = ps.maximals().size();
  Embedding e;
  e.n = n;
  e.k = k;
  e.images.resize(count);
  std::vector<bool> seen(count, false);
  for (const auto& entry : j) {
    const unsigned idx = as_unsigned(require(entry, "source_index"), "source_index");
    if (idx >= count) throw ConfigError("source_index " + std::to_string(idx) + " out of range");
    if (seen[idx]) throw ConfigError("source_index " + std::to_string(idx) + " repeated");
    seen[idx] = true;
    if (entry.contains("source_basis") &&
        subspace_from_json(ps.field(), n, entry.at("source_basis")) != ps.maximals()[idx])
      throw ConfigError("source_basis of entry " + std::to_string(idx) + " is not maximal " + std::to_string(idx));
    Subspace img = subspace_from_json(ps.field(), n, require(entry, "image_basis"));
    if (img.dim() != k)
      throw ConfigError("image of entry " + std::to_string(idx) + " has dimension " + std::to_string(img.dim()));
    e.images[idx] = std::move(img);
  }
  for (std::size_t i = 0; i < count; ++i)
    if (!seen[i]) throw ConfigError("embedding has no entry for maximal " + std::to_string(i));
  return e;
}

json to_json(const VerifyReport& r)
{
  json j{{"ok", r.ok()},
         {"pairs_checked", r.pairs_checked},
         {"source_bfs_checked", r.source_bfs_checked},
         {"target_bfs_checked", r.target_bfs_checked}};
  if (r.violation) {
    const auto& v = *r.violation;
    j["violation"] = {{"code", std::string(to_string(v.code))},
                      {"first", v.first},
                      {"second", v.second},
                      {"expected", v.expected},
                      {"got", v.got}};
  }
  return j;
}

json to_json(const StructureReport& r)
{
  json j;
  j["star_subspace"] = subspace_to_json(r.star.u);
  j["star_dim"] = r.star.u.dim();
  j["star_anomaly"] = r.star.anomaly;
  if (r.quotient) {
    j["quotient_dim"] = r.quotient->dim();
    j["quotient_transversal"] = r.quotient->transversal();
    json g = json::array();
    for (const auto& s : r.g.images) g.push_back(subspace_to_json(s));
    j["g_table"] = std::move(g);
    json q = json::array();
    for (const auto& s : r.q.images) q.push_back(subspace_to_json(s));
    j["q_map"] = std::move(q);
    j["q_anomalies"] = r.q.anomalies;
    json lines{{"ok", r.lines.ok()}, {"pairs_checked", r.lines.pairs_checked}, {"lines_checked", r.lines.lines_checked}};
    if (r.lines.violation) {
      const auto& v = *r.lines.violation;
      lines["violation"] = {{"code", std::string(to_string(v.code))},
                            {"point_p", v.point_p},
                            {"point_q", v.point_q},
                            {"witness", v.witness}};
    }
    j["lines"] = std::move(lines);
    j["w_prime"] = subspace_to_json(r.w_prime);
    j["w_prime_dim"] = r.w_prime.dim();
  }
  j["v_prime"] = subspace_to_json(r.v_prime);
  j["v_prime_dim"] = r.v_prime.dim();
  j["clean"] = r.clean();
  return j;
}

json to_json(const EquivalenceWitness& w)
{
  return {{"matrix", matrix_to_json(w.matrix)}, {"field_auto", w.field_auto}, {"duality", w.duality}};
}

json to_json(const ClassificationReport& r, bool with_labels)
{
  json j{{"mode", r.mode == ClassifyMode::all_pairs ? "all_pairs" : "representatives"},
         {"embeddings", r.embeddings},
         {"classes", r.classes},
         {"representatives", r.representatives},
         {"class_sizes", r.class_sizes},
         {"pairs_checked", r.pairs_checked},
         {"pairs_failed", r.pairs_failed},
         {"linear_witnesses", r.linear_witnesses},
         {"semilinear_witnesses", r.semilinear_witnesses},
         {"duality_witnesses", r.duality_witnesses}};
  if (with_labels) j["class_of"] = r.class_of;
  return j;
}

json to_json(const IntersectionNumbers& in)
{
  return {{"degree", in.degree}, {"diameter", in.diameter}, {"b", in.b_array()}, {"c", in.c_array()}};
}

std::string to_graph6(const FiniteGraph& g)
{
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  // Upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
  unsigned acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<VertexId>(i), static_cast<VertexId>(j)) ? 1U : 0U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  out.push_back('\n');
  return out;
}

std::string to_csv(const FiniteGraph& g)
{
  std::ostringstream out;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (VertexId v : g.neighbors(static_cast<VertexId>(u)))
      if (u < v) out << u << ',' << v << '\n';
  return out.str();
}

json graph_to_json(const FiniteGraph& g, const std::vector<Subspace>& vertices)
{
  json verts = json::array();
  for (const auto& s : vertices) verts.push_back(subspace_to_json(s));
  json adj = json::array();
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto nb = g.neighbors(static_cast<VertexId>(u));
    adj.push_back(std::vector<VertexId>(nb.begin(), nb.end()));
  }
  return {{"ordering_version", kOrderingVersion}, {"order", g.order()}, {"vertices", verts}, {"adjacency", adj}};
}

}  // namespace qgeom::io
