// schurlat: command-line front end. Indices are 1-based on the command line
// and in every file format; see docs/formats.md.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "schurlat/error.hpp"
#include "schurlat/gentle_c2.hpp"
#include "schurlat/io.hpp"
#include "schurlat/modrep.hpp"
#include "schurlat/schur.hpp"
#include "schurlat/tilting.hpp"
#include "schurlat/weyl.hpp"

namespace {

using namespace schurlat;

constexpr int kExitValidation = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitUsage = 64;

struct Config {
  std::string cartan;
  Int bound = 3;
  std::uint32_t p = FieldSpec::kDefaultPrime;
  std::uint64_t seed = 0;
  std::size_t tries = 32;
  std::size_t jobs = 1;
  bool json_errors = false;
  std::string out;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A JSON file, or one of the built-in names (A1 A2 A3 B2 B3 C3 G2 C2~).
CartanData load_cartan(std::string const& source) {
  if (source.empty()) throw Error(ErrorCode::ParseError, "--cartan is required");
  if (!std::filesystem::exists(source)) {
    for (auto const& name : named_data())
      if (name == source) return named_datum(name);
  }
  return cartan_from_json(parse_json(read_file(source)));
}

RootVector parse_rank(std::string const& text) {
  std::vector<Int> coords;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (std::exception const&) {
      throw Error(ErrorCode::ParseError, "bad rank vector '" + text + "'");
    }
  }
  return RootVector(coords);
}

void emit(Config const& cfg, std::string const& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + cfg.out);
  out << text;
}

void emit(Config const& cfg, Json const& j) { emit(cfg, j.dump(2) + "\n"); }

HPresentation make_pres(Config const& cfg) { return presentation(load_cartan(cfg.cartan), FieldSpec{cfg.p}); }

GenModule rigid_or_throw(HPresentation const& pres, RootVector const& r, Config const& cfg) {
  if (r.size() != pres.vertices()) throw Error(ErrorCode::DimensionMismatch, "rank vector length must be n");
  auto m = generic_rigid(pres, r, cfg.seed, cfg.tries, cfg.jobs);
  if (!m) throw Error(ErrorCode::NotFound, "no rigid locally free module of rank " + r.str());
  return std::move(*m);
}

// A module file, or a generic rigid module when --rank is given instead.
GenModule load_module(HPresentation const& pres, std::string const& path, std::string const& rank,
                      Config const& cfg) {
  if (!rank.empty()) return rigid_or_throw(pres, parse_rank(rank), cfg);
  if (path.empty()) throw Error(ErrorCode::ParseError, "a module file or --rank is required");
  return module_from_json(pres, parse_json(read_file(path)));
}

TauDirection parse_direction(std::string const& s) {
  if (s == "minus") return TauDirection::Minus;
  if (s == "plus") return TauDirection::Plus;
  throw Error(ErrorCode::ParseError, "direction must be minus or plus");
}

Json repro_b3(Config const& cfg) {
  CartanData const data = named_datum("B3");
  HPresentation const pres = presentation(data, FieldSpec{cfg.p});
  RootSet const schur = enumerate_schur(data, 3);
  Json duals = Json::array();
  for (auto const& [r, d] : dual_schur_check(data, 3)) duals.push_back({to_json(r), to_json(d)});
  RigidAtlas const atlas = rigid_atlas(pres, cfg.seed, cfg.tries, cfg.jobs);
  Json entries = Json::array();
  for (auto const& [r, m] : atlas.entries) {
    entries.push_back(Json{{"rank", to_json(r)},
                           {"euler", euler_form(data, r, r)},
                           {"end", to_json(end_algebra(pres, m))},
                           {"brick", to_json(brick_of(pres, m))}});
  }
  ExchangeGraph const g = exchange_graph(support_tilting_pairs(pres, atlas, cfg.jobs), data.rank());
  Json graph = to_json(check_graph(g, data.rank()));
  graph["vertices"] = g.vertices.size();
  graph["edges"] = g.edges.size();
  return Json{{"schur_roots", to_json(schur)}, {"duals", duals}, {"atlas", entries}, {"exchange_graph", graph}};
}

Json repro_c2(Config const& cfg, std::size_t steps) {
  HPresentation const pres = c2_presentation(FieldSpec{cfg.p});
  Json rows = Json::array();
  for (std::size_t n = 0; n <= steps; ++n) {
    StringWord const w = tau_string(TauDirection::Minus, 2, 2 * n + 1);
    GenModule const m = string_module(pres, w);
    auto const rank = is_locally_free(pres, m);
    if (!rank) throw Error(ErrorCode::InvariantBroken, "tau orbit module is not locally free");
    Int const k = static_cast<Int>(n);
    RootVector const alpha = RootVector{2, 2, 1} + k * RootVector{2, 4, 2} + RootVector{0, 2, 0};
    RootVector const alpha_tilde = RootVector{2, 1, 1} + k * RootVector{2, 2, 2} + RootVector{0, 1, 0};
    BrickReport const brick = brick_of(pres, m);
    rows.push_back(Json{{"n", n},
                        {"string", serialize(w)},
                        {"rank", to_json(*rank)},
                        {"alpha", to_json(alpha)},
                        {"brick", to_json(brick.dims)},
                        {"alpha_tilde", to_json(alpha_tilde)},
                        {"dij", serialize(dij_string(TauDirection::Minus, 2, 2 * n + 1))},
                        {"euler", euler_form(pres.data(), *rank, *rank)}});
  }
  return Json{{"tau_minus_odd_P3", rows}};
}

int error_exit(Config const& cfg, ErrorCode code, std::string const& detail) {
  if (cfg.json_errors) {
    std::cout << Json{{"error", std::string(to_string(code))}, {"detail", detail}}.dump() << "\n";
  } else {
    std::cerr << "schurlat: " << to_string(code) << ": " << detail << "\n";
  }
  return code == ErrorCode::NotFound || code == ErrorCode::AtlasIncomplete ? kExitNotFound : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Schur roots, rigid locally free modules and exchange graphs for H(C,D,Omega)", "schurlat"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto add_common = [&](CLI::App* sub, bool with_cartan) {
    if (with_cartan) sub->add_option("--cartan", cfg.cartan, "Cartan datum: JSON file or built-in name (A2, B3, C2~, ...)");
    sub->add_option("--p", cfg.p, "Prime field characteristic (>= 97)")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Random seed; SCHUR_LATTICE_SEED overrides")->capture_default_str();
    sub->add_option("--tries", cfg.tries, "Random tries per rank vector")->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    sub->add_flag("--json", cfg.json_errors, "Report errors as JSON objects on stdout");
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
  };

  auto* cartan = app.add_subcommand("cartan", "Cartan data")->require_subcommand(1);
  auto* cartan_validate = cartan->add_subcommand("validate", "Validate (C, D, Omega) and print it normalized");
  add_common(cartan_validate, true);

  auto* roots = app.add_subcommand("roots", "Real, Schur and dual roots")->require_subcommand(1);
  auto* roots_real = roots->add_subcommand("real", "Real roots in the box |coordinate| <= bound");
  auto* roots_schur = roots->add_subcommand("schur", "Real Schur roots in the box");
  auto* roots_dual = roots->add_subcommand("dual", "Schur roots paired with their dual roots");
  std::string method = "braid";
  roots_schur->add_option("--method", method, "braid or absolute")
      ->check(CLI::IsMember({"braid", "absolute"}))
      ->capture_default_str();
  for (auto* sub : {roots_real, roots_schur, roots_dual}) {
    add_common(sub, true);
    sub->add_option("--bound", cfg.bound, "Box bound")->capture_default_str();
  }

  auto* module = app.add_subcommand("module", "Modules over H")->require_subcommand(1);
  std::string mod_a, mod_b, rank_a, rank_b, ext_method = "both";
  auto* module_rigid = module->add_subcommand("rigid", "Find a generic rigid module of a rank vector");
  module_rigid->add_option("--rank", rank_a, "Rank vector, e.g. 1,2,2")->required();
  auto* module_hom = module->add_subcommand("hom", "dim Hom(M, N)");
  auto* module_ext = module->add_subcommand("ext", "dim Ext^1(M, N)");
  module_ext->add_option("--method", ext_method, "euler, resolution or both")
      ->check(CLI::IsMember({"euler", "resolution", "both"}))
      ->capture_default_str();
  for (auto* sub : {module_hom, module_ext}) {
    sub->add_option("M", mod_a, "Module JSON file");
    sub->add_option("N", mod_b, "Module JSON file");
    sub->add_option("--rank-m", rank_a, "Use the generic rigid module of this rank for M");
    sub->add_option("--rank-n", rank_b, "Use the generic rigid module of this rank for N");
  }
  auto* module_end = module->add_subcommand("end", "Structure of End(M)");
  auto* module_brick = module->add_subcommand("brick", "The brick M / rad_E M");
  for (auto* sub : {module_end, module_brick}) {
    sub->add_option("M", mod_a, "Module JSON file");
    sub->add_option("--rank", rank_a, "Use the generic rigid module of this rank");
  }
  for (auto* sub : {module_rigid, module_hom, module_ext, module_end, module_brick}) add_common(sub, true);

  auto* tilting = app.add_subcommand("tilting", "Support tilting pairs")->require_subcommand(1);
  auto* tilting_graph = tilting->add_subcommand("graph", "Exchange graph (DOT if --out ends in .dot, else JSON)");
  add_common(tilting_graph, true);

  auto* gentle = app.add_subcommand("gentle", "The gentle algebra of type C~2")->require_subcommand(1);
  auto* gentle_c2 = gentle->add_subcommand("c2", "C~2 with D = diag(2,1,2)")->require_subcommand(1);
  auto* gentle_tau = gentle_c2->add_subcommand("tau", "tau-orbits of projectives (minus) or injectives (plus)");
  std::string dir = "minus", emit_kind = "ranks";
  std::size_t vertex = 1, steps = 0;
  gentle_tau->add_option("--dir", dir, "minus or plus")->check(CLI::IsMember({"minus", "plus"}))->capture_default_str();
  gentle_tau->add_option("--vertex", vertex, "Vertex 1, 2 or 3")->check(CLI::Range(1, 3))->capture_default_str();
  gentle_tau->add_option("--steps", steps, "Largest tau power")->capture_default_str();
  gentle_tau->add_option("--emit", emit_kind, "ranks, strings or modules")
      ->check(CLI::IsMember({"ranks", "strings", "modules"}))
      ->capture_default_str();
  add_common(gentle_tau, false);

  auto* repro = app.add_subcommand("repro", "Reproduce the worked examples")->require_subcommand(1);
  auto* repro_b3_cmd = repro->add_subcommand("b3", "B3: Schur roots, duals, atlas, exchange graph");
  auto* repro_c2_cmd = repro->add_subcommand("c2", "C~2: rank and brick families");
  std::size_t repro_steps = 5;
  repro_c2_cmd->add_option("--steps", repro_steps, "Largest n")->capture_default_str();
  add_common(repro_b3_cmd, false);
  add_common(repro_c2_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (char const* env = std::getenv("SCHUR_LATTICE_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (std::exception const&) {
      std::cerr << "schurlat: SCHUR_LATTICE_SEED must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  try {
    if (*cartan_validate) {
      emit(cfg, to_json(load_cartan(cfg.cartan)));
    } else if (*roots_real) {
      emit(cfg, to_json(real_roots(load_cartan(cfg.cartan), cfg.bound)));
    } else if (*roots_schur) {
      CartanData const data = load_cartan(cfg.cartan);
      if (method == "braid") {
        emit(cfg, to_json(enumerate_schur(data, cfg.bound)));
      } else {
        RootSet all = schur_roots_absolute(data);
        RootSet boxed{cfg.bound, {}};
        for (auto const& r : all.roots)
          if (r.max_abs() <= cfg.bound) boxed.roots.push_back(r);
        emit(cfg, to_json(boxed));
      }
    } else if (*roots_dual) {
      Json pairs = Json::array();
      for (auto const& [r, d] : dual_schur_check(load_cartan(cfg.cartan), cfg.bound))
        pairs.push_back(Json{{"root", to_json(r)}, {"dual", to_json(d)}});
      emit(cfg, Json{{"bound", cfg.bound}, {"pairs", pairs}});
    } else if (*module_rigid) {
      HPresentation const pres = make_pres(cfg);
      emit(cfg, to_json(pres, rigid_or_throw(pres, parse_rank(rank_a), cfg)));
    } else if (*module_hom || *module_ext) {
      HPresentation const pres = make_pres(cfg);
      // With --rank-m the only positional file is N.
      bool const shift = !rank_a.empty() && mod_b.empty();
      GenModule const m = load_module(pres, shift ? "" : mod_a, rank_a, cfg);
      GenModule const n = load_module(pres, shift ? mod_a : mod_b, rank_b, cfg);
      if (*module_hom) {
        emit(cfg, Json{{"hom", hom(pres, m, n).dim}});
      } else {
        Json j = Json::object();
        if (ext_method != "resolution") j["euler"] = ext1_euler(pres, m, n);
        if (ext_method != "euler") j["resolution"] = ext1_resolution(pres, m, n);
        if (j.contains("euler") && j.contains("resolution") && j["euler"] != j["resolution"])
          throw Error(ErrorCode::InvariantBroken, "Ext^1 from the Euler form and the resolution disagree");
        j["ext1"] = j.contains("euler") ? j["euler"] : j["resolution"];
        emit(cfg, j);
      }
    } else if (*module_end) {
      HPresentation const pres = make_pres(cfg);
      emit(cfg, to_json(end_algebra(pres, load_module(pres, mod_a, rank_a, cfg))));
    } else if (*module_brick) {
      HPresentation const pres = make_pres(cfg);
      BrickReport const rep = brick_of(pres, load_module(pres, mod_a, rank_a, cfg));
      Json j = to_json(rep);
      j["module"] = to_json(pres, rep.quotient);
      emit(cfg, j);
    } else if (*tilting_graph) {
      HPresentation const pres = make_pres(cfg);
      RigidAtlas const atlas = rigid_atlas(pres, cfg.seed, cfg.tries, cfg.jobs);
      ExchangeGraph const g = exchange_graph(support_tilting_pairs(pres, atlas, cfg.jobs), pres.vertices());
      if (cfg.out.size() >= 4 && cfg.out.ends_with(".dot")) {
        emit(cfg, to_dot(g));
      } else {
        Json j = to_json(g);
        j["check"] = to_json(check_graph(g, pres.vertices()));
        emit(cfg, j);
      }
    } else if (*gentle_tau) {
      HPresentation const pres = c2_presentation(FieldSpec{cfg.p});
      TauDirection const d = parse_direction(dir);
      Json rows = Json::array();
      auto const orbit = tau_orbit(d, vertex - 1, steps);
      for (std::size_t m = 0; m < orbit.size(); ++m) {
        Json row{{"m", m}};
        if (emit_kind == "strings") {
          row["string"] = serialize(orbit[m]);
        } else {
          GenModule const mod = string_module(pres, orbit[m]);
          if (emit_kind == "modules") {
            row["module"] = to_json(pres, mod);
          } else {
            auto const r = is_locally_free(pres, mod);
            row["rank"] = r ? to_json(*r) : Json(nullptr);
          }
        }
        rows.push_back(row);
      }
      emit(cfg, rows);
    } else if (*repro_b3_cmd) {
      emit(cfg, repro_b3(cfg));
    } else if (*repro_c2_cmd) {
      emit(cfg, repro_c2(cfg, repro_steps));
    }
  } catch (Error const& e) {
    return error_exit(cfg, e.code(), e.detail());
  }
  return 0;
}
