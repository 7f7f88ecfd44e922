#include "schurlat/io.hpp"

#include "schurlat/error.hpp"

namespace schurlat {

namespace {

template <class F>
auto guarded(char const* what, F&& f) {
  try {
    return f();
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

Json const& field(Json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

FpMatrix matrix_from_json(Json const& j, std::size_t rows, std::size_t cols, std::uint32_t p, std::string const& name) {
  if (!j.is_array() || j.size() != rows) throw Error(ErrorCode::ShapeMismatch, name + " must have " + std::to_string(rows) + " rows");
  FpMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw Error(ErrorCode::ShapeMismatch, name + " must have " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) {
      auto const x = j[r][c].get<std::int64_t>();
      std::int64_t const red = x % static_cast<std::int64_t>(p);
      m(r, c) = static_cast<FpMatrix::value_type>(red < 0 ? red + p : red);
    }
  }
  return m;
}

}  // namespace

Json to_json(CartanData const& data) {
  Json c = Json::array();
  for (std::size_t i = 0; i < data.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < data.rank(); ++j) row.push_back(data.cartan(i, j));
    c.push_back(row);
  }
  Json omega = Json::array();
  for (auto [i, j] : data.orientation()) omega.push_back({i + 1, j + 1});
  return Json{{"C", c}, {"D", data.symmetrizer()}, {"Omega", omega}};
}

CartanData cartan_from_json(Json const& j) {
  auto [c, d, omega] = guarded("Cartan datum", [&] {
    auto const& rows = field(j, "C");
    std::size_t const n = rows.size();
    IntMatrix c(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) throw Error(ErrorCode::DimensionMismatch, "C must be square");
      for (std::size_t k = 0; k < n; ++k) c(r, k) = rows[r][k].get<Int>();
    }
    auto d = field(j, "D").get<std::vector<Int>>();
    std::vector<std::pair<std::size_t, std::size_t>> omega;
    for (auto const& e : field(j, "Omega")) {
      auto const pair = e.get<std::vector<std::int64_t>>();
      if (pair.size() != 2 || pair[0] < 1 || pair[1] < 1)
        throw Error(ErrorCode::BadOrientation, "orientation entries are pairs of 1-based vertices");
      omega.emplace_back(static_cast<std::size_t>(pair[0] - 1), static_cast<std::size_t>(pair[1] - 1));
    }
    return std::tuple{c, d, omega};
  });
  return validate(c, d, omega);
}

Json to_json(RootVector const& v) { return Json(v.coords()); }

RootVector root_from_json(Json const& j) {
  return guarded("rank vector", [&] { return RootVector(j.get<std::vector<Int>>()); });
}

Json to_json(RootSet const& set) {
  Json roots = Json::array();
  for (auto const& r : set.roots) roots.push_back(to_json(r));
  return Json{{"bound", set.bound}, {"roots", roots}};
}

Json to_json(FpMatrix const& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(HPresentation const& pres, GenModule const& m) {
  Json eps = Json::object();
  for (std::size_t i = 0; i < pres.vertices(); ++i)
    if (pres.has_loop(i)) eps[std::to_string(i + 1)] = to_json(m.eps[i]);
  Json arrows = Json::object();
  for (std::size_t a = 0; a < pres.arrows().size(); ++a) arrows[pres.arrows()[a].key()] = to_json(m.arrows[a]);
  return Json{{"dims", m.dims}, {"eps", eps}, {"arrows", arrows}, {"p", m.p}};
}

GenModule module_from_json(HPresentation const& pres, Json const& j) {
  return guarded("module", [&] {
    GenModule m = zero_module(pres);
    auto const dims = field(j, "dims").get<std::vector<std::size_t>>();
    if (dims.size() != pres.vertices()) throw Error(ErrorCode::ShapeMismatch, "dims must have one entry per vertex");
    m.dims = dims;
    if (j.contains("p")) m.p = j.at("p").get<std::uint32_t>();
    if (m.p != pres.field().modulus())
      throw Error(ErrorCode::ShapeMismatch, "module is over F_" + std::to_string(m.p) + ", expected F_" +
                                                std::to_string(pres.field().modulus()));
    Json const eps = j.contains("eps") ? j.at("eps") : Json::object();
    for (std::size_t i = 0; i < pres.vertices(); ++i) {
      std::string const key = std::to_string(i + 1);
      if (eps.contains(key)) {
        m.eps[i] = matrix_from_json(eps.at(key), dims[i], dims[i], m.p, "eps " + key);
      } else {
        m.eps[i] = FpMatrix(dims[i], dims[i]);
      }
    }
    Json const& arrows = field(j, "arrows");
    for (std::size_t a = 0; a < pres.arrows().size(); ++a) {
      Arrow const& ar = pres.arrows()[a];
      std::string const key = ar.key();
      if (!arrows.contains(key)) throw Error(ErrorCode::ShapeMismatch, "missing arrow " + key);
      m.arrows[a] = matrix_from_json(arrows.at(key), dims[ar.target], dims[ar.source], m.p, "arrow " + key);
    }
    if (!validate_rep(pres, m)) throw Error(ErrorCode::InvalidRep, "module violates the relations of H");
    return m;
  });
}

Json to_json(EndReport const& rep) {
  return Json{{"dim", rep.dim},
              {"is_local", rep.is_local},
              {"residue_dim", rep.residue_dim},
              {"nilpotency", rep.nilpotency},
              {"is_truncated_polynomial", rep.is_truncated_polynomial},
              {"free_over_end", rep.free_over_end}};
}

Json to_json(BrickReport const& rep) { return Json{{"dims", to_json(rep.dims)}, {"is_brick", rep.is_brick}}; }

Json to_json(SupportTiltingPair const& pair) {
  Json t = Json::array();
  for (auto const& r : pair.tilting) t.push_back(to_json(r));
  Json p = Json::array();
  for (auto i : pair.projective) p.push_back(i + 1);
  return Json{{"T", t}, {"P", p}};
}

Json to_json(ExchangeGraph const& g) {
  Json vertices = Json::array();
  for (auto const& v : g.vertices) vertices.push_back(to_json(v));
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  return Json{{"vertices", vertices}, {"edges", edges}};
}

Json to_json(GraphReport const& rep) {
  return Json{{"regular", rep.regular}, {"degree", rep.degree}, {"connected", rep.connected}};
}

Json parse_json(std::string const& text) {
  try {
    return Json::parse(text);
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace schurlat
