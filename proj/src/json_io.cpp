#include "starlike/json_io.hpp"

#include <limits>

namespace starlike {

Json to_json(const Laurent& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c});
  return out;
}

Json to_json(const BiLaurent& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({k.first, k.second, c});
  return out;
}

Json to_json(const GammaElement& g) {
  Json out = Json::array();
  for (const auto& [forest, coeff] : g.terms()) out.push_back({forest, to_json(coeff)});
  return out;
}

Json torsion_json(const std::vector<BigInt>& torsion) {
  Json out = Json::array();
  for (const BigInt& t : torsion) {
    if (t <= std::numeric_limits<std::int64_t>::max()) out.push_back(t.convert_to<std::int64_t>());
    else out.push_back(t.str());
  }
  return out;
}

Json to_json(const HomologyTable& t) {
  Json out = Json::array();
  for (const auto& [deg, g] : t)
    out.push_back({{"i", deg.i}, {"j", deg.j}, {"k", deg.k}, {"rank", g.rank}, {"torsion", torsion_json(g.torsion)}});
  return out;
}

Json to_json(const BigradedTable& t) {
  Json out = Json::array();
  for (const auto& [deg, g] : t)
    out.push_back({{"i", deg.i}, {"q", deg.q}, {"rank", g.rank}, {"torsion", torsion_json(g.torsion)}});
  return out;
}

Json to_json(const LinkDiagram& d) {
  Json xs = Json::array();
  for (const Crossing& c : d.crossings()) {
    Json dirs = Json::array();
    for (int s = 0; s < 4; ++s) dirs.push_back(slot_is_incoming(c.sign, s) ? "in" : "out");
    xs.push_back({{"sign", c.sign}, {"slots", c.slots}, {"slot_dirs", dirs}});
  }
  Json out = {{"crossings", xs}, {"edges", d.edge_count()}, {"free_loops", d.free_loops()}};
  if (d.crossing_count() > 0) {
    out["outer_face"] = {{"edge", d.outer_face().edge},
                         {"side", d.outer_face().side == Side::Left ? "left" : "right"}};
  }
  return out;
}

Json to_json(const MoveSite& m) {
  Json out = {{"kind", to_string(m.kind)}};
  if (!m.edges.empty()) out["edges"] = m.edges;
  if (!m.crossings.empty()) out["crossings"] = m.crossings;
  if (!m.kinks.empty()) {
    Json ks = Json::array();
    for (const auto& k : m.kinks) ks.push_back({{"sign", k.sign}, {"side", k.side == Side::Left ? "left" : "right"}});
    out["kinks"] = ks;
  }
  if (m.kind == MoveKind::R2Insert || m.kind == MoveKind::R2Opposite || m.kind == MoveKind::Unsmooth) {
    out["a_over"] = m.a_over;
    out["outer_part"] = m.outer_part;
  }
  return out;
}

Json to_json(const std::vector<TrajectoryStep>& trajectory) {
  Json out = Json::array();
  for (const auto& st : trajectory) out.push_back({{"move", to_json(st.move)}, {"diagram_hash", diagram_hash(st.diagram)}});
  return out;
}

Json to_json(const DualityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json one = {{"check", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) one["detail"] = c.detail;
    checks.push_back(one);
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

Json state_dump(const LinkDiagram& d, const KauffmanState& s) {
  Json circles = Json::array();
  for (const auto& c : s.circles)
    circles.push_back({{"id", c.id}, {"breaks", c.break_points}, {"seiferts", c.seifert_points}, {"type", to_string(c.type)}});
  return {{"sigma", s.sigma}, {"circles", circles}, {"forest", nesting_forest(d, s)}};
}

Json slice_dump(const ChainSlice& s, Differential w) {
  Json degrees = Json::object();
  for (const auto& [deg, basis] : s.basis) degrees[std::to_string(deg)] = basis;
  Json matrices = Json::object();
  for (const auto& [deg, basis] : s.basis) {
    auto m = s.matrix(deg, s.dim(s.target_degree(w, deg)));
    Json entries = Json::array();
    for (int col = 0; col < m.outerSize(); ++col)
      for (Eigen::SparseMatrix<int>::InnerIterator it(m, col); it; ++it) entries.push_back({it.row(), it.col(), it.value()});
    matrices[std::to_string(deg)] = entries;
  }
  return {{"j", s.j}, {"k", s.k}, {"differential", to_string(w)}, {"degrees", degrees}, {"matrices", matrices}};
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

std::vector<int> int_list(const Json& j, const char* key) {
  std::vector<int> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) malformed(std::string(key) + " must be an array");
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) malformed(std::string(key) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

MoveSite move_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) malformed("move needs a string kind");
  auto kind = move_kind_from_string(j["kind"].get<std::string>());
  if (!kind) malformed("unknown move kind " + j["kind"].get<std::string>());
  MoveSite m;
  m.kind = *kind;
  m.edges = int_list(j, "edges");
  m.crossings = int_list(j, "crossings");
  if (j.contains("kinks")) {
    if (!j["kinks"].is_array()) malformed("kinks must be an array");
    for (const auto& k : j["kinks"]) {
      KinkSpec spec;
      if (!k.is_object() || !k.contains("sign") || !k["sign"].is_number_integer()) malformed("kink needs an integer sign");
      spec.sign = k["sign"].get<int>();
      if (k.contains("side")) {
        if (k["side"] == "left") spec.side = Side::Left;
        else if (k["side"] == "right") spec.side = Side::Right;
        else malformed("kink side must be \"left\" or \"right\"");
      }
      m.kinks.push_back(spec);
    }
  }
  if (j.contains("a_over")) {
    if (!j["a_over"].is_boolean()) malformed("a_over must be a boolean");
    m.a_over = j["a_over"].get<bool>();
  }
  if (j.contains("outer_part")) {
    if (!j["outer_part"].is_number_integer()) malformed("outer_part must be an integer");
    m.outer_part = j["outer_part"].get<int>();
  }
  return m;
}

}  // namespace starlike
