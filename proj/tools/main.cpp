#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcw/acceptance.hpp"
#include "tcw/compat.hpp"
#include "tcw/dpcompile.hpp"
#include "tcw/oracle.hpp"
#include "tcw/rect.hpp"

using namespace tcw;

namespace {

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SCALE_EXCEEDED:
    case ErrorCode::CAP_EXCEEDED:
    case ErrorCode::WIDTH_EXCEEDED:
      return 3;
    default:
      return 2;
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    if (text.empty() || text.back() != '\n') std::fputc('\n', stdout);
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw Error(ErrorCode::BAD_INPUT, "cannot open --out " + out_path);
  os << text;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::BAD_INPUT, "cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// {"graph": <graph schema>, "decomposition": <decomposition schema>}
std::string instance_to_json(const GraphInstance& g, const PathDecomposition& d) {
  nlohmann::json j;
  j["graph"] = nlohmann::json::parse(graph_to_json(g));
  j["decomposition"] = nlohmann::json::parse(decomposition_to_json(g, d));
  return j.dump();
}

std::pair<GraphInstance, PathDecomposition> load_instance(const std::string& path) {
  auto j = nlohmann::json::parse(slurp(path));
  auto g = graph_from_json(j.at("graph").dump());
  auto d = decomposition_from_json(g, j.at("decomposition").dump());
  return {std::move(g), std::move(d)};
}

std::pair<GraphInstance, PathDecomposition> make_family(const std::string& family, std::uint32_t n,
                                                        std::uint32_t k) {
  if (family == "is") return gen_is_graph(k);
  if (family == "dtsp") return gen_dtsp_graph(n, k);
  if (family == "tsp") return gen_tsp_graph(n, k);
  if (family == "dst") return gen_dst_graph(n, k);
  throw Error(ErrorCode::BAD_INPUT, "unknown family " + family);
}

Valuation load_valuation(const VarUniverse& u, const std::string& path) {
  auto j = nlohmann::json::parse(slurp(path));
  std::map<std::string, std::int64_t> m;
  for (auto& [name, value] : j.items()) m[name] = value.get<std::int64_t>();
  return Valuation::from_map(u, m);
}

CompatMatrix make_matrix(const std::string& variant, std::uint32_t k) {
  if (variant == "bipartite") return CompatMatrix::build(k, MatrixVariant::BIPARTITE);
  if (variant == "clique") return CompatMatrix::build(k, MatrixVariant::CLIQUE);
  throw Error(ErrorCode::BAD_INPUT, "unknown matrix variant " + variant);
}

// Name-based monomial forms, so circuits over different universes compare.
std::vector<std::vector<std::pair<std::string, std::uint32_t>>> named_monomials(
    const Polynomial& p, const VarUniverse& u) {
  std::vector<std::vector<std::pair<std::string, std::uint32_t>>> out;
  for (auto& m : p.monomials()) {
    std::vector<std::pair<std::string, std::uint32_t>> nm;
    for (auto [id, e] : m.entries()) nm.emplace_back(u.name(id), e);
    out.push_back(std::move(nm));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical circuit workbench"};
  app.require_subcommand(1);

  std::string family, target = "is", variant = "bipartite", mode = "exact", format = "json";
  std::string out_path, circuit_path, other_path, valuation_path, instance_path, cover_path;
  std::string vars_csv, count_family;
  std::uint32_t n = 3, k = 2, size_n = 4, source = 1, sink = 2, kmax = 3;
  std::uint64_t seed = 0, samples = 1000, budget_s = 10;
  std::size_t cap = kDefaultExtractionCap;
  std::uint64_t ck = 0;
  bool table = false;

  auto* gen = app.add_subcommand("gen", "generate a graph family instance");
  gen->add_option("--family", family, "is|dtsp|tsp|dst")->required();
  gen->add_option("--n", n, "columns");
  gen->add_option("--k", k, "rows / variables")->required();
  gen->add_option("--format", format, "json|dot");
  gen->add_option("--out", out_path, "output path");

  auto* compile = app.add_subcommand("compile", "compile a dynamic program to a circuit");
  compile->add_option("--target", target, "is|dtsp|tsp|dst|held-karp|floyd-warshall")->required();
  compile->add_option("--n", n, "columns");
  compile->add_option("--k", k, "rows / variables");
  compile->add_option("--size", size_n, "vertex count for held-karp / floyd-warshall");
  compile->add_option("--source", source, "floyd-warshall source (1-based)");
  compile->add_option("--sink", sink, "floyd-warshall target (1-based)");
  compile->add_option("--format", format, "json|dot");
  compile->add_option("--out", out_path, "output path");

  auto* eval = app.add_subcommand("eval", "evaluate a circuit on a valuation");
  eval->add_option("--circuit", circuit_path, "circuit JSON")->required();
  eval->add_option("--valuation", valuation_path, "valuation JSON (name -> weight)")->required();
  eval->add_option("--out", out_path, "output path");

  auto* extract = app.add_subcommand("extract", "extract the polynomial of a circuit");
  extract->add_option("--circuit", circuit_path, "circuit JSON")->required();
  extract->add_option("--cap", cap, "monomial slot cap");
  extract->add_option("--out", out_path, "output path");

  auto* equiv = app.add_subcommand("equiv", "compare two circuits by extraction");
  equiv->add_option("--circuit", circuit_path, "circuit JSON")->required();
  equiv->add_option("--other", other_path, "circuit JSON")->required();
  equiv->add_option("--cap", cap, "monomial slot cap");

  auto* decompose = app.add_subcommand("decompose", "balanced rectangle decomposition");
  decompose->add_option("--circuit", circuit_path, "circuit JSON")->required();
  decompose->add_option("--vars", vars_csv, "comma-separated variable names X")->required();
  decompose->add_option("--cap", cap, "monomial slot cap");
  decompose->add_option("--out", out_path, "output path");

  auto* matrix = app.add_subcommand("matrix", "compatibility matrix entries / summary table");
  matrix->add_option("--variant", variant, "bipartite|clique");
  matrix->add_option("--k", k, "parameter k");
  matrix->add_flag("--table", table, "cover summary CSV for k = 1..kmax");
  matrix->add_option("--kmax", kmax, "largest k in the table");
  matrix->add_option("--budget", budget_s, "cover search budget (seconds)");
  matrix->add_option("--format", format, "json|csv");
  matrix->add_option("--out", out_path, "output path");

  auto* cover = app.add_subcommand("cover", "rectangle cover of a compatibility matrix");
  cover->add_option("--variant", variant, "bipartite|clique");
  cover->add_option("--k", k, "parameter k")->required();
  cover->add_option("--mode", mode, "exact|greedy|randomized");
  cover->add_option("--seed", seed, "PRNG seed (required for randomized)");
  cover->add_option("--budget", budget_s, "exact search budget (seconds)");
  cover->add_option("--out", out_path, "output path");

  auto* count = app.add_subcommand("count", "closed-form structure counts");
  count->add_option("--family", count_family, "dtsp-cycles|dst-sequences|dst-nice-cycles")
      ->required();
  count->add_option("--n", n, "columns")->required();
  count->add_option("--k", k, "rows")->required();

  auto* sample = app.add_subcommand("sample", "sample a uniform nice cycle");
  sample->add_option("--n", n, "columns")->required();
  sample->add_option("--k", k, "rows")->required();
  sample->add_option("--seed", seed, "PRNG seed")->required();
  sample->add_option("--out", out_path, "output path");

  auto* verify = app.add_subcommand("verify", "verification checks");
  verify->require_subcommand(1);
  auto* vdec = verify->add_subcommand("decomposition", "check a path decomposition");
  vdec->add_option("--instance", instance_path, "instance JSON (graph + decomposition)")
      ->required();
  auto* vcov = verify->add_subcommand("cover", "check a rectangle cover");
  vcov->add_option("--variant", variant, "bipartite|clique");
  vcov->add_option("--k", k, "parameter k")->required();
  vcov->add_option("--cover", cover_path, "cover JSON")->required();
  auto* vthin = verify->add_subcommand("thinness", "check sampled rectangles are thin");
  vthin->add_option("--k", k, "clause-graph parameter")->required();
  vthin->add_option("--samples", samples, "number of sampled rectangles");
  vthin->add_option("--seed", seed, "PRNG seed")->required();
  auto* vbound = verify->add_subcommand("bounds", "check tour rectangle size bounds");
  vbound->add_option("--n", n, "columns")->required();
  vbound->add_option("--k", k, "rows")->required();
  vbound->add_option("--ck", ck, "exact cover number (computed when omitted)");
  vbound->add_option("--budget", budget_s, "cover search budget (seconds)");

  auto* repro = app.add_subcommand("repro", "run the full verification suite");
  (void)repro;

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      auto [g, d] = make_family(family, n, k);
      emit(format == "dot" ? graph_to_dot(g) : instance_to_json(g, d), out_path);
    } else if (compile->parsed()) {
      Circuit c = [&] {
        if (target == "held-karp") return compile_held_karp(size_n);
        if (target == "floyd-warshall") return compile_floyd_warshall(size_n, source, sink);
        auto [g, d] = make_family(target == "is" ? "is" : target, n, k);
        if (target == "is") return compile_is(g, d);
        if (target == "dtsp") return compile_tsp_pw(g, d, true);
        if (target == "tsp") return compile_tsp_pw(g, d, false);
        if (target == "dst") return compile_dst_pw(g, d);
        throw Error(ErrorCode::BAD_INPUT, "unknown target " + target);
      }();
      emit(format == "dot" ? circuit_to_dot(c) : circuit_to_json(c), out_path);
    } else if (eval->parsed()) {
      auto c = circuit_from_json(slurp(circuit_path));
      emit(std::to_string(evaluate(c, load_valuation(c.universe(), valuation_path))), out_path);
    } else if (extract->parsed()) {
      auto c = circuit_from_json(slurp(circuit_path));
      emit(poly_to_json(extract_polynomial(c, cap), c.universe()), out_path);
    } else if (equiv->parsed()) {
      auto a = circuit_from_json(slurp(circuit_path));
      auto b = circuit_from_json(slurp(other_path));
      bool same = named_monomials(extract_polynomial(a, cap), a.universe()) ==
                  named_monomials(extract_polynomial(b, cap), b.universe());
      std::puts(same ? "equivalent" : "different");
      return same ? 0 : 1;
    } else if (decompose->parsed()) {
      auto c = circuit_from_json(slurp(circuit_path));
      std::vector<std::uint32_t> X;
      std::stringstream ss(vars_csv);
      for (std::string name; std::getline(ss, name, ',');) X.push_back(c.universe().id(name));
      emit(rectangles_to_json(decompose_balanced(c, X, cap), X), out_path);
    } else if (matrix->parsed()) {
      if (table) {
        std::vector<CkRow> rows;
        for (std::uint32_t kk = 1; kk <= kmax; ++kk) {
          auto m = make_matrix(variant, kk);
          auto c = min_cover(m, budget_s * 1000);
          std::uint64_t mr = max_rectangle(m).size();
          // the 2k ln k bound degenerates at k = 1
          double bound = kk >= 2 ? check_size_bound(m, c.rectangles.size()).bound : 0.0;
          rows.push_back({kk, m.dim(), m.ones(), c.rectangles.size(), mr, bound});
        }
        emit(ck_table_csv(rows), out_path);
      } else {
        auto m = make_matrix(variant, k);
        if (format == "csv") {
          std::ostringstream os;
          for (std::uint32_t r = 0; r < m.dim(); ++r) {
            for (std::uint32_t c = 0; c < m.dim(); ++c)
              os << (c ? "," : "") << (m.entry(r, c) ? 1 : 0);
            os << "\n";
          }
          emit(os.str(), out_path);
        } else {
          nlohmann::json j;
          j["variant"] = variant;
          j["k"] = k;
          j["dim"] = m.dim();
          j["ones"] = m.ones();
          auto& jr = j["rows"] = nlohmann::json::array();
          for (std::uint32_t r = 0; r < m.dim(); ++r) {
            std::vector<int> row(m.dim());
            for (std::uint32_t c = 0; c < m.dim(); ++c) row[c] = m.entry(r, c);
            jr.push_back(row);
          }
          emit(j.dump(), out_path);
        }
      }
    } else if (cover->parsed()) {
      auto m = make_matrix(variant, k);
      if (mode == "exact") {
        auto c = min_cover(m, budget_s * 1000);
        std::fprintf(stderr, "cover size %zu (%s)\n", c.rectangles.size(),
                     c.optimal ? "optimal" : "budget exhausted");
        emit(cover_to_json(c), out_path);
        return c.optimal ? 0 : 1;
      }
      if (mode == "greedy") {
        auto c = greedy_cover(m);
        std::fprintf(stderr, "cover size %zu (greedy)\n", c.rectangles.size());
        emit(cover_to_json(c), out_path);
        return 0;
      }
      if (mode == "randomized") {
        if (!cover->count("--seed")) {
          std::fprintf(stderr, "--seed is required for randomized covers\n");
          return 2;
        }
        auto res = randomized_cover_from_rectangle(m, max_rectangle(m), seed);
        std::fprintf(stderr, "cover size %zu, samples %llu, %s\n", res.cover.rectangles.size(),
                     static_cast<unsigned long long>(res.samples),
                     res.covers_all ? "covers all ones" : "incomplete");
        emit(cover_to_json(res.cover), out_path);
        return res.covers_all ? 0 : 1;
      }
      throw Error(ErrorCode::BAD_INPUT, "unknown mode " + mode);
    } else if (count->parsed()) {
      CountFamily f;
      if (count_family == "dtsp-cycles")
        f = CountFamily::DTSP_CYCLES;
      else if (count_family == "dst-sequences")
        f = CountFamily::DST_SEQUENCES;
      else if (count_family == "dst-nice-cycles")
        f = CountFamily::DST_NICE_CYCLES;
      else
        throw Error(ErrorCode::BAD_INPUT, "unknown family " + count_family);
      std::printf("%llu\n", static_cast<unsigned long long>(count_formulas(f, n, k)));
    } else if (sample->parsed()) {
      auto cycle = sample_nice_cycle(n, k, seed);
      auto g = gen_dst_graph(n, k).first;
      nlohmann::json j = nlohmann::json::array();
      for (auto v : cycle) j.push_back(g.label(v));
      emit(j.dump(), out_path);
    } else if (vdec->parsed()) {
      auto [g, d] = load_instance(instance_path);
      auto rep = verify_path_decomposition(g, d);
      std::printf("width %u, %s\n", rep.width, rep.ok ? "valid" : "invalid");
      for (auto& v : rep.violations) std::fprintf(stderr, "%s\n", v.c_str());
      return rep.ok ? 0 : 1;
    } else if (vcov->parsed()) {
      auto m = make_matrix(variant, k);
      auto j = nlohmann::json::parse(slurp(cover_path));
      RectangleCover c;
      for (auto& jr : j.at("rectangles")) {
        Rectangle r;
        r.rows = jr.at("rows").get<std::vector<std::uint32_t>>();
        r.cols = jr.at("cols").get<std::vector<std::uint32_t>>();
        c.rectangles.push_back(std::move(r));
      }
      bool ok = is_valid_cover(m, c);
      std::puts(ok ? "valid cover" : "invalid cover");
      return ok ? 0 : 1;
    } else if (vthin->parsed()) {
      ThinContext ctx(k);
      Rng rng(seed);
      std::uint64_t thick = 0;
      for (std::uint64_t i = 0; i < samples; ++i)
        if (!ctx.check_thin(ctx.sample(rng))) ++thick;
      std::printf("%llu/%llu sampled rectangles thin\n",
                  static_cast<unsigned long long>(samples - thick),
                  static_cast<unsigned long long>(samples));
      return thick == 0 ? 0 : 1;
    } else if (vbound->parsed()) {
      if (!vbound->count("--ck")) {
        auto c = min_cover(CompatMatrix::build(k, MatrixVariant::BIPARTITE), budget_s * 1000);
        if (!c.optimal) throw Error(ErrorCode::SCALE_EXCEEDED, "no exact cover within budget");
        ck = c.rectangles.size();
      }
      auto [g, d] = gen_dtsp_graph(n, k);
      auto c = compile_tsp_pw(g, d, true);
      auto f = extract_polynomial(c);
      auto layers = edge_layers(g);
      // one representative per layer, restricted to the extraction support
      auto sup = f.support();
      std::vector<std::uint32_t> X;
      for (auto& l : layers)
        for (auto v : l)
          if (std::binary_search(sup.begin(), sup.end(), v)) {
            X.push_back(v);
            break;
          }
      auto rs = decompose_balanced(c, X);
      std::uint64_t bad = 0;
      for (auto& r : rs) bad += !check_rectangle_bound_dtsp(r, f, X, n, k, ck).holds;
      std::printf("%zu rectangles, %llu above the bound\n", rs.size(),
                  static_cast<unsigned long long>(bad));
      return bad == 0 ? 0 : 1;
    } else if (repro->parsed()) {
      auto results = run_acceptance();
      std::fputs(acceptance_table(results).c_str(), stdout);
      for (auto& r : results)
        if (!r.pass) return 1;
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return exit_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
  return 0;
}
