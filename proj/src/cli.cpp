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

#include "qgeom/cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qgeom/io.hpp"

namespace qgeom::cli {

namespace {

using io::json;

struct Options {
  std::string field_path;
  std::string polar_path;
  std::string embedding_path;
  std::string out_path;
  std::vector<std::string> exports;
  std::vector<std::string> write_embeddings;
  std::size_t n = 0;
  std::size_t k = 0;
  unsigned workers = 1;
  std::uint64_t budget = 0;
  bool anchor = false;
  bool intersection_array = false;
  bool allow_trivial = false;
  bool all_u = false;
  bool all_pairs = false;
  bool check = false;
};

int exit_code_for(ErrorCode code)
{
  switch (code) {
    case ErrorCode::SearchBudgetExceeded:
      return kExitBudget;
    case ErrorCode::NotPrime:
    case ErrorCode::ReducibleModulus:
    case ErrorCode::FieldTooLarge:
    case ErrorCode::FieldMismatch:
    case ErrorCode::NoConjugation:
    case ErrorCode::AmbientMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::TooLarge:
    case ErrorCode::OutsideSupport:
    case ErrorCode::KindMismatch:
    case ErrorCode::DegenerateForm:
    case ErrorCode::RankZero:
    case ErrorCode::NonUniformMaximals:
    case ErrorCode::RankTooSmall:
    case ErrorCode::InvalidArgument:
      return kExitConfig;
    default:
      return kExitViolation;
  }
}

gf::Field load_field(const std::string& path) { return gf::Field::build(io::parse_field_spec(io::read_json_file(path))); }

struct LoadedPolar {
  gf::Field field;
  PolarSpace ps;
};

LoadedPolar load_polar(const Options& o)
{
  const auto cfg = io::parse_polar_config(io::read_json_file(o.polar_path));
  auto field = gf::Field::build(cfg.field);
  const FormSpec form = io::parse_form_spec(field, cfg.form);
  if (o.n < form.form_dim)
    throw io::ConfigError("n = " + std::to_string(o.n) + " is smaller than form_dim = " + std::to_string(form.form_dim));
  auto ps = build_polar_space(field, o.n, form);
  return {std::move(field), std::move(ps)};
}

void check_k(const Options& o)
{
  if (o.k == 0 || o.k >= o.n) throw io::ConfigError("k must satisfy 0 < k < n");
}

void export_graph(const std::vector<std::string>& targets, const FiniteGraph& g, const json& full)
{
  for (const auto& t : targets) {
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw io::ConfigError("export target must look like fmt:path, got " + t);
    const std::string fmt = t.substr(0, colon);
    const std::string path = t.substr(colon + 1);
    if (fmt == "g6") io::write_text_file(path, io::to_graph6(g));
    else if (fmt == "csv") io::write_text_file(path, io::to_csv(g));
    else if (fmt == "json") io::write_json_file(path, full);
    else throw io::ConfigError("unknown export format " + fmt);
  }
}

void print_array(std::ostream& out, const IntersectionNumbers& in)
{
  out << "intersection array: {";
  const auto b = in.b_array();
  const auto c = in.c_array();
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? ", " : "") << b[i];
  out << "; ";
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << c[i];
  out << "}\n";
}

int cmd_field(const Options& o, std::ostream& out)
{
  const auto field = load_field(o.field_path);
  out << "field: GF(" << field.q() << ") = GF(" << field.p() << "^" << field.e() << ")\n";
  out << "conjugation: " << (field.has_conjugation() ? "yes" : "no") << "\n";
  if (!o.out_path.empty()) {
    json elems = json::array();
    json add = json::array();
    json mul = json::array();
    for (unsigned a = 0; a < field.q(); ++a) {
      elems.push_back(field.coeffs_of(static_cast<Elem>(a)));
      json ra = json::array();
      json rm = json::array();
      for (unsigned b = 0; b < field.q(); ++b) {
        ra.push_back(static_cast<unsigned>(field.add(static_cast<Elem>(a), static_cast<Elem>(b))));
        rm.push_back(static_cast<unsigned>(field.mul(static_cast<Elem>(a), static_cast<Elem>(b))));
      }
      add.push_back(std::move(ra));
      mul.push_back(std::move(rm));
    }
    io::write_json_file(o.out_path, {{"field", io::to_json(field.spec())},
                                     {"q", field.q()},
                                     {"elements", elems},
                                     {"add", add},
                                     {"mul", mul}});
  }
  return kExitOk;
}

int cmd_grassmann(const Options& o, std::ostream& out)
{
  const auto field = load_field(o.field_path);
  check_k(o);
  GrassmannOptions gopts;
  gopts.allow_trivial = o.allow_trivial;
  gopts.par.workers = o.workers;
  const GrassmannGraph g(field, o.n, o.k, gopts);
  out << "ordering: " << kOrderingVersion << "\n";
  out << "Grassmann graph G_" << o.k << "(GF(" << field.q() << ")^" << o.n << "): " << g.vertices().size()
      << " vertices, " << g.graph().edge_count() << " edges\n";
  json summary{{"ordering_version", kOrderingVersion},
               {"field", io::to_json(field.spec())},
               {"n", o.n},
               {"k", o.k},
               {"vertices", g.vertices().size()},
               {"edges", g.graph().edge_count()}};
  if (o.intersection_array) {
    const auto in = intersection_numbers(g.graph(), gopts.par);
    print_array(out, in);
    summary["intersection_numbers"] = io::to_json(in);
  }
  if (!o.exports.empty()) export_graph(o.exports, g.graph(), io::graph_to_json(g.graph(), g.vertices()));
  if (!o.out_path.empty()) io::write_json_file(o.out_path, summary);
  return kExitOk;
}

int cmd_polar(const Options& o, std::ostream& out)
{
  const auto loaded = load_polar(o);
  const auto& ps = loaded.ps;
  const Parallelism par{o.workers};
  const auto dpg = dual_polar_graph(ps, par);
  out << "ordering: " << kOrderingVersion << "\n";
  out << "polar space (" << to_string(ps.form().kind) << ", GF(" << ps.field().q() << "), n' = " << ps.form().form_dim
      << ", n = " << ps.ambient_dim() << "): rank " << ps.rank() << ", " << ps.points().size() << " points, "
      << ps.lines().size() << " lines, " << ps.maximals().size() << " maximals\n";
  out << "dual polar graph: " << dpg.order() << " vertices, " << dpg.edge_count() << " edges, diameter "
      << dpg.diameter() << "\n";
  json summary{{"ordering_version", kOrderingVersion},
               {"field", io::to_json(ps.field().spec())},
               {"form", io::to_json(ps.form())},
               {"n", ps.ambient_dim()},
               {"rank", ps.rank()},
               {"points", ps.points().size()},
               {"lines", ps.lines().size()},
               {"maximals", ps.maximals().size()},
               {"dual_polar_edges", dpg.edge_count()},
               {"dual_polar_diameter", dpg.diameter()}};
  if (o.intersection_array) {
    const auto in = intersection_numbers(dpg, par);
    print_array(out, in);
    summary["intersection_numbers"] = io::to_json(in);
  }
  if (!o.exports.empty()) {
    json full = io::graph_to_json(dpg, ps.maximals());
    json points = json::array();
    for (const auto& p : ps.points()) points.push_back(io::subspace_to_json(p));
    json lines = json::array();
    for (const auto& l : ps.lines()) lines.push_back(io::subspace_to_json(l));
    full["points"] = std::move(points);
    full["lines"] = std::move(lines);
    export_graph(o.exports, dpg, full);
  }
  if (!o.out_path.empty()) io::write_json_file(o.out_path, summary);
  return kExitOk;
}

int cmd_canonical(const Options& o, std::ostream& out)
{
  check_k(o);
  const auto loaded = load_polar(o);
  const auto& ps = loaded.ps;
  out << "ordering: " << kOrderingVersion << "\n";
  const auto canon = canonical_embedding(ps, o.k);
  const auto report = verify_isometric(ps, canon.embedding, {nullptr, nullptr, Parallelism{o.workers}});
  out << "canonical embedding: U of dimension " << canon.star.dim() << ", " << report.pairs_checked
      << " pairs verified: " << (report.ok() ? "ok" : "FAILED") << "\n";
  if (o.all_u) {
    const auto all = all_valid_star_subspaces(ps, o.k);
    out << "valid star subspaces: " << all.size() << "\n";
  }
  if (!o.out_path.empty()) io::write_json_file(o.out_path, io::embedding_to_json(ps, canon.embedding));
  return report.ok() ? kExitOk : kExitViolation;
}

Embedding load_or_canonical(const Options& o, const PolarSpace& ps)
{
  if (o.embedding_path.empty()) return canonical_embedding(ps, o.k).embedding;
  return io::embedding_from_json(ps, o.k, io::read_json_file(o.embedding_path));
}

int cmd_verify(const Options& o, std::ostream& out)
{
  check_k(o);
  if (o.embedding_path.empty()) throw io::ConfigError("verify needs --embedding");
  const auto loaded = load_polar(o);
  const auto& ps = loaded.ps;
  const auto e = load_or_canonical(o, ps);
  const auto source = dual_polar_graph(ps, Parallelism{o.workers});
  const GrassmannGraph target(ps.field(), o.n, o.k, {true, Parallelism{o.workers}});
  const auto report = verify_isometric(ps, e, {&source, &target, Parallelism{o.workers}});
  out << "ordering: " << kOrderingVersion << "\n";
  out << "pairs checked: " << report.pairs_checked << "\n";
  if (report.violation)
    out << "violation: " << to_string(report.violation->code) << " between maximals " << report.violation->first
        << " and " << report.violation->second << "\n";
  else
    out << "isometric: yes\n";
  if (!o.out_path.empty()) {
    json j = io::to_json(report);
    j["ordering_version"] = kOrderingVersion;
    io::write_json_file(o.out_path, j);
  }
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_analyze(const Options& o, std::ostream& out)
{
  check_k(o);
  const auto loaded = load_polar(o);
  const auto& ps = loaded.ps;
  const auto e = load_or_canonical(o, ps);
  const auto verify = verify_isometric(ps, e, {nullptr, nullptr, Parallelism{o.workers}});
  out << "ordering: " << kOrderingVersion << "\n";
  if (!verify.ok()) {
    out << "embedding is not isometric: " << to_string(verify.violation->code) << "\n";
    return kExitViolation;
  }
  const auto r = analyze_embedding(ps, e);
  out << "star subspace: dim " << r.star.u.dim() << (r.star.anomaly ? " (anomaly: larger than k - m)" : "") << "\n";
  if (r.quotient) {
    out << "quotient: dim " << r.quotient->dim() << "\n";
    out << "point map: " << r.q.images.size() << " points, " << r.q.anomalies.size() << " anomalies\n";
    out << "lines: " << r.lines.lines_checked << " checked, "
        << (r.lines.ok() ? "all full lines" : std::string(to_string(r.lines.violation->code))) << "\n";
    out << "W' dim " << r.w_prime.dim() << ", V' dim " << r.v_prime.dim() << "\n";
  }
  if (!o.out_path.empty()) {
    json j = io::to_json(r);
    j["ordering_version"] = kOrderingVersion;
    io::write_json_file(o.out_path, j);
  }
  return r.lines.ok() ? kExitOk : kExitViolation;
}

struct Searched {
  FiniteGraph source;
  GrassmannGraph target;
  SearchResult result;
};

Searched run_search(const Options& o, const PolarSpace& ps)
{
  const Parallelism par{o.workers};
  auto source = dual_polar_graph(ps, par);
  GrassmannGraph target(ps.field(), o.n, o.k, {true, par});
  SearchOptions so;
  so.anchor = o.anchor;
  so.budget = o.budget;
  so.par = par;
  auto result = search_embeddings(ps, source, target, so);
  return {std::move(source), std::move(target), std::move(result)};
}

void print_search(std::ostream& out, const SearchResult& r)
{
  out << "search: " << (r.anchored ? "anchored" : "unanchored");
  if (r.anchor_vertex) out << " at vertex " << *r.anchor_vertex << " (" << r.anchor_source << ")";
  out << ", " << r.tables.size() << " embeddings, " << r.nodes << " nodes\n";
}

json search_json(const Searched& s)
{
  const auto& r = s.result;
  json j{{"ordering_version", kOrderingVersion},
         {"anchored", r.anchored},
         {"count", r.tables.size()},
         {"nodes", r.nodes},
         {"tables", r.tables}};
  if (r.anchor_vertex) {
    j["anchor_vertex"] = *r.anchor_vertex;
    j["anchor_source"] = r.anchor_source;
  }
  return j;
}

int cmd_search(const Options& o, std::ostream& out)
{
  check_k(o);
  const auto loaded = load_polar(o);
  const auto& ps = loaded.ps;
  const auto s = run_search(o, ps);
  out << "ordering: " << kOrderingVersion << "\n";
  print_search(out, s.result);
  json j = search_json(s);
  if (o.check) {
    std::size_t isometric = 0;
    std::map<std::size_t, std::size_t> by_star_dim;
    std::size_t clean = 0;
    for (std::size_t i = 0; i < s.result.tables.size(); ++i) {
      const auto e = s.result.embedding(s.target, i);
      if (verify_isometric(ps, e).ok()) ++isometric;
      Subspace u = e.images.front();
      for (const auto& img : e.images) u = intersect(ps.field(), u, img);
      ++by_star_dim[u.dim()];
      if (u.dim() == o.k - ps.rank()) {
        try {
          if (analyze_embedding(ps, e).clean()) ++clean;
        } catch (const Error&) {
        }
      }
    }
    out << "isometric: " << isometric << " of " << s.result.tables.size() << "\n";
    for (const auto& [d, c] : by_star_dim) out << "common intersection of dimension " << d << ": " << c << "\n";
    out << "clean structural chain: " << clean << "\n";
    json dims = json::object();
    for (const auto& [d, c] : by_star_dim) dims[std::to_string(d)] = c;
    j["check"] = {{"isometric", isometric}, {"star_dim_counts", dims}, {"clean_chain", clean}};
  }
  for (const auto& w : o.write_embeddings) {
    const auto colon = w.find(':');
    if (colon == std::string::npos) throw io::ConfigError("--write-embedding expects index:path");
    const std::size_t idx = std::stoul(w.substr(0, colon));
    if (idx >= s.result.tables.size()) throw io::ConfigError("embedding index out of range");
    io::write_json_file(w.substr(colon + 1), io::embedding_to_json(ps, s.result.embedding(s.target, idx)));
  }
  if (!o.out_path.empty()) io::write_json_file(o.out_path, j);
  if (s.result.tables.empty()) {
    out << "no embedding found\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out)
{
  check_k(o);
  const auto loaded = load_polar(o);
  const auto& ps = loaded.ps;
  const auto s = run_search(o, ps);
  out << "ordering: " << kOrderingVersion << "\n";
  print_search(out, s.result);
  if (s.result.tables.empty()) {
    out << "no embedding found\n";
    return kExitViolation;
  }
  std::vector<Embedding> embeddings;
  embeddings.reserve(s.result.tables.size());
  for (std::size_t i = 0; i < s.result.tables.size(); ++i) embeddings.push_back(s.result.embedding(s.target, i));
  const auto report = classify_embeddings(ps, embeddings, o.budget, Parallelism{o.workers},
                                          o.all_pairs ? ClassifyMode::all_pairs : ClassifyMode::representatives);
  out << "pairs certified: " << report.pairs_checked << " (" << report.pairs_failed << " without witness)\n";
  out << "equivalence classes: " << report.classes << "\n";
  json classes = json::array();
  for (std::size_t c = 0; c < report.classes; ++c) {
    const auto& e = embeddings[report.representatives[c]];
    Subspace u = e.images.front();
    Subspace total = Subspace::zero(e.n);
    for (const auto& img : e.images) {
      u = intersect(ps.field(), u, img);
      total = sum(ps.field(), total, img);
    }
    out << "  class " << c << ": " << report.class_sizes[c] << " embeddings, representative "
        << report.representatives[c] << ", common intersection dim " << u.dim() << ", span dim " << total.dim()
        << "\n";
    classes.push_back({{"representative", report.representatives[c]},
                       {"size", report.class_sizes[c]},
                       {"common_intersection_dim", u.dim()},
                       {"span_dim", total.dim()},
                       {"representative_table", io::embedding_to_json(ps, e)}});
  }
  if (!o.out_path.empty()) {
    json j = io::to_json(report, false);
    j["ordering_version"] = kOrderingVersion;
    j["search"] = search_json(s);
    j["search"].erase("tables");
    j["class_details"] = std::move(classes);
    io::write_json_file(o.out_path, j);
  }
  return report.classes == 1 ? kExitOk : kExitViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Finite geometry toolkit: Grassmann graphs, dual polar graphs and their isometric embeddings", "qgeom"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "OpenMP workers; 1 runs the serial reference kernels")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out_path, "JSON report path");
  };
  auto add_polar = [&](CLI::App* sub, bool need_k) {
    sub->add_option("--polar", o.polar_path, "polar space config JSON")->required();
    sub->add_option("--n", o.n, "ambient dimension")->required();
    if (need_k) sub->add_option("--k", o.k, "target Grassmannian index")->required();
    add_common(sub);
  };

  auto* field = app.add_subcommand("field", "validate a field config and tabulate it");
  field->add_option("--field", o.field_path, "field config JSON")->required();
  add_common(field);

  auto* grass = app.add_subcommand("grassmann", "build a Grassmann graph");
  grass->add_option("--field", o.field_path, "field config JSON")->required();
  grass->add_option("--n", o.n, "ambient dimension")->required();
  grass->add_option("--k", o.k, "subspace dimension")->required();
  grass->add_option("--export", o.exports, "fmt:path with fmt in g6, csv, json");
  grass->add_flag("--intersection-array", o.intersection_array, "print the intersection array");
  grass->add_flag("--allow-trivial", o.allow_trivial, "accept k = 1 or k = n - 1");
  add_common(grass);

  auto* polar = app.add_subcommand("polar", "build a polar space and its dual polar graph");
  add_polar(polar, false);
  polar->add_option("--export", o.exports, "fmt:path with fmt in g6, csv, json");
  polar->add_flag("--intersection-array", o.intersection_array, "print the intersection array");

  auto* embed = app.add_subcommand("embed", "isometric embeddings of the dual polar graph");
  embed->require_subcommand(1);
  auto* canonical = embed->add_subcommand("canonical", "M -> M + U for the first valid U");
  add_polar(canonical, true);
  canonical->add_flag("--all-u", o.all_u, "also count every valid U");
  auto* verify = embed->add_subcommand("verify", "check an embedding table pair by pair");
  add_polar(verify, true);
  verify->add_option("--embedding", o.embedding_path, "embedding JSON");
  auto* analyze = embed->add_subcommand("analyze", "run the structural chain on an embedding");
  add_polar(analyze, true);
  analyze->add_option("--embedding", o.embedding_path, "embedding JSON (default: canonical)");
  auto* search = embed->add_subcommand("search", "enumerate all embeddings by backtracking");
  add_polar(search, true);
  search->add_flag("--anchor", o.anchor, "fix the image of the first maximal");
  search->add_option("--budget", o.budget, "node budget, 0 = unlimited");
  search->add_flag("--check", o.check, "verify and analyze every result");
  search->add_option("--write-embedding", o.write_embeddings, "index:path, write one result as embedding JSON");
  auto* classify = embed->add_subcommand("classify", "search, then certify equivalences");
  add_polar(classify, true);
  classify->add_flag("--anchor", o.anchor, "fix the image of the first maximal");
  classify->add_option("--budget", o.budget, "node budget per search and per certification, 0 = unlimited");
  classify->add_flag("--all-pairs", o.all_pairs, "certify every pair instead of against representatives");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qgeom: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*field) return cmd_field(o, out);
    if (*grass) return cmd_grassmann(o, out);
    if (*polar) return cmd_polar(o, out);
    if (*canonical) return cmd_canonical(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*analyze) return cmd_analyze(o, out);
    if (*search) return cmd_search(o, out);
    if (*classify) return cmd_classify(o, out);
  } catch (const io::ConfigError& e) {
    err << "qgeom: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    err << "qgeom: " << (is_critical(e.code()) ? "CRITICAL " : "") << e.what() << "\n";
    out << to_string(e.code()) << "\n";
    return code;
  }
  return kExitUsage;
}

}  // namespace qgeom::cli
