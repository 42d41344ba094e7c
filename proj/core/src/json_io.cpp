#include "vinberg/json_io.hpp"

#include <fstream>

namespace vinberg {

namespace {

const Integer kSafe("9007199254740991");  // 2^53 - 1

}  // namespace

json to_json(const Integer& n) {
  if (abs(n) <= kSafe) return json(n.get_si());
  return json(n.get_str());
}

json to_json(const Rational& q) {
  if (q.get_den() == 1) return to_json(q.get_num());
  return json(q.get_str());
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

Integer integer_from_json(const json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw MalformedInput("not an integer: \"" + s + "\"");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw MalformedInput("expected an integer, got " + j.dump());
}

IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInput("expected an array of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

QuadraticLattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("gram")) throw MalformedInput("lattice object needs a \"gram\" field");
  const json& g = j.at("gram");
  if (!g.is_array() || g.empty()) throw MalformedInput("\"gram\" must be a non-empty array of rows");
  const std::size_t n = g.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g[i].is_array() || g[i].size() != n) throw MalformedInput("\"gram\" must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = integer_from_json(g[i][k]);
  }
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw MalformedInput("\"name\" must be a string");
    name = j.at("name").get<std::string>();
  }
  return QuadraticLattice(std::move(m), std::move(name));
}

QuadraticLattice load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
  return lattice_from_json(j);
}

json lattice_to_json(const QuadraticLattice& l) {
  json j{{"gram", to_json(l.gram())}};
  if (!l.name().empty()) j["name"] = l.name();
  return j;
}

json invariants_to_json(const QuadraticLattice& l) {
  Signature s = signature(l);
  json ext = json::array();
  for (const auto& e : maximal_extensions(l)) {
    json x = lattice_to_json(e.lattice);
    x["index"] = to_json(e.index);
    x["discriminant"] = to_json(e.lattice.determinant());
    x["invariant_factors"] = to_json(invariant_factors(e.lattice).factors);
    ext.push_back(x);
  }
  return json{
      {"lattice", lattice_to_json(l)},
      {"discriminant", to_json(l.determinant())},
      {"invariant_factors", to_json(invariant_factors(l).factors)},
      {"signature", {s.positives, s.negatives}},
      {"even", l.is_even()},
      {"maximal", is_maximal(l)},
      {"maximal_extensions", ext},
  };
}

json anisotropy_to_json(const QuadraticLattice& l) {
  json places = json::array();
  bool any = false;
  for (const auto& v : anisotropy_by_place(l)) {
    places.push_back({{"place", v.place.label()}, {"anisotropic", v.anisotropic}});
    any = any || v.anisotropic;
  }
  return json{{"lattice", lattice_to_json(l)}, {"places", places}, {"anisotropic", any}};
}

json volume_to_json(const FiniteVolumeResult& v) {
  json j{{"verdict", v.finite() ? "FINITE_VOLUME" : "INFINITE_VOLUME"}};
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (v.ray) j["witness_ray"] = to_json(*v.ray);
  return j;
}

json run_to_json(const VinbergRun& run) {
  json roots = json::array();
  for (std::size_t i = 0; i < run.roots.size(); ++i) {
    roots.push_back({
        {"vector", to_json(run.roots[i].coords())},
        {"norm", to_json(run.roots[i].norm)},
        {"height", to_json(run.heights[i])},
        {"priority", to_json(run.priority(i))},
        {"cone", i < run.cone_size},
    });
  }
  json norms = json::array();
  for (const auto& k : run.norms) norms.push_back(to_json(k));
  json j{
      {"basic_point", to_json(run.basic_point)},
      {"norms", norms},
      {"roots", roots},
      {"status", to_string(run.status)},
      {"shells", run.steps},
      {"volume", volume_to_json(run.volume)},
  };
  if (!run.stop_reason.empty()) j["stop_reason"] = run.stop_reason;
  return j;
}

json diagram_to_json(const CoxeterDiagram& d) {
  json edges = json::array();
  for (const auto& [pair, rel] : d.edges) {
    if (rel.kind == RelationKind::Angle && rel.m == 2) continue;
    edges.push_back({{"a", pair.first + 1}, {"b", pair.second + 1}, {"relation", rel.describe()}});
  }
  json nodes = json::array();
  for (const auto& n : d.nodes) nodes.push_back(to_json(n.norm));
  return json{{"norms", nodes}, {"edges", edges}};
}

}  // namespace vinberg
