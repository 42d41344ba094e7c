// vinberg-lab: command-line front end for the lattice, Vinberg and
// classification pipeline. Reports are JSON on stdout.
//
// Exit codes: 0 success, 1 golden mismatch (--check), 2 malformed input,
// 3 wrong rank or signature, 4 Vinberg budget exhausted.

#include <CLI11.hpp>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vinberg/report.hpp"

namespace fs = std::filesystem;
using namespace vinberg;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kMalformed = 2, kWrongShape = 3, kBudget = 4 };

std::vector<Integer> parse_integers(const std::vector<std::string>& items, const char* what) {
  std::vector<Integer> out;
  for (const auto& s : items) {
    try {
      out.push_back(integer_from_json(json(s)));
    } catch (const MalformedInput&) {
      throw MalformedInput(std::string(what) + ": \"" + s + "\" is not an integer");
    }
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
}

void require_rank4_hyperbolic(const QuadraticLattice& l) {
  if (l.rank() != 4) throw RankNotFour("lattice has rank " + std::to_string(l.rank()) + ", expected 4");
  Signature s = signature(l);
  if (s.positives != 3 || s.negatives != 1) throw NotHyperbolic("signature is not (3,1)");
}

// File-system friendly name: L(5) -> L5.
std::string file_stem(const std::string& name) {
  std::string out;
  for (char c : name)
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Compares `actual` with the golden file, printing drift to stderr.
bool matches_golden(const fs::path& golden, const std::string& actual) {
  if (!fs::exists(golden)) {
    std::cerr << "golden file missing: " << golden << "\n";
    return false;
  }
  const std::string expected = read_file(golden);
  if (expected == actual) return true;
  std::cerr << "drift against " << golden << "\n";
  try {
    json diff = json::diff(json::parse(expected), json::parse(actual));
    for (std::size_t i = 0; i < diff.size() && i < 20; ++i) std::cerr << "  " << diff[i].dump() << "\n";
  } catch (const json::exception&) {
    std::cerr << "  (not JSON; texts differ)\n";
  }
  return false;
}

struct VinbergOptions {
  std::string input;
  std::vector<std::string> norms;
  std::vector<std::string> basic_point;
  std::size_t max_roots = 64;
  std::string max_height = "10000";
  std::string dot;
  std::string out;
};

VinbergConfig make_config(const VinbergOptions& o) {
  VinbergConfig cfg;
  cfg.allowed_norms = parse_integers(o.norms, "--norms");
  if (!o.basic_point.empty()) cfg.basic_point = parse_integers(o.basic_point, "--basic-point");
  cfg.max_roots = o.max_roots;
  cfg.max_height = parse_integers({o.max_height}, "--max-height").front();
  return cfg;
}

int cmd_vinberg(const VinbergOptions& o) {
  QuadraticLattice l = load_lattice(o.input);
  require_rank4_hyperbolic(l);
  ClassificationReport r = assess_run(l, run(l, make_config(o)));
  json j = report_to_json(r);
  j["schema_version"] = kSchemaVersion;
  emit(j, o.out);
  if (!o.dot.empty()) write_file(o.dot, r.dot);
  return r.run.status == RunStatus::FiniteVolume ? kOk : kBudget;
}

struct DiagramOptions {
  std::string input;
  std::string dot;
  std::string out;
};

// Input: a lattice object with an extra "roots" array.
int cmd_diagram(const DiagramOptions& o) {
  json in;
  {
    std::ifstream f(o.input);
    if (!f) throw MalformedInput("cannot open " + o.input);
    try {
      f >> in;
    } catch (const json::parse_error& e) {
      throw MalformedInput(o.input + ": " + e.what());
    }
  }
  QuadraticLattice l = lattice_from_json(in);
  require_rank4_hyperbolic(l);
  if (!in.contains("roots") || !in.at("roots").is_array()) throw MalformedInput("\"roots\" array missing");
  auto handle = share(l);
  std::vector<Root> roots;
  for (const auto& v : in.at("roots")) {
    IntVector x = vector_from_json(v);
    if (x.size() != 4) throw MalformedInput("root of wrong length");
    try {
      roots.push_back(Root::make(LatticeVector{handle, x}));
    } catch (const std::invalid_argument& e) {
      throw MalformedInput(std::string("not a root: ") + e.what());
    }
  }
  CoxeterDiagram d = build_diagram(roots);
  std::string reason;
  const bool criterion = diagram_criterion(d, &reason);
  json bad = json::array();
  for (auto i : bad_reflections(roots)) bad.push_back("a" + std::to_string(i + 1));
  json j{
      {"schema_version", kSchemaVersion},
      {"lattice", lattice_to_json(l)},
      {"diagram", diagram_to_json(d)},
      {"finite_volume", volume_to_json(finite_volume_check(roots))},
      {"diagram_criterion", criterion},
      {"bad_reflections", bad},
      {"bad_reflections_finite", bad_reflections_finite(roots)},
  };
  if (!criterion) j["diagram_criterion_reason"] = reason;
  const std::string dot = emit_dot(d, l.name().empty() ? "coxeter" : l.name());
  j["dot"] = dot;
  emit(j, o.out);
  if (!o.dot.empty()) write_file(o.dot, dot);
  return kOk;
}

struct ClassifyOptions {
  std::string stage = "classify";
  std::string out;
  std::string check;
  std::size_t max_roots = 64;
  std::string max_height = "10000";
};

int cmd_classify(const ClassifyOptions& o) {
  PipelineReport p = run_enumeration_stage();
  json j;
  std::vector<std::pair<std::string, std::string>> files;  // name, content
  if (o.stage == "enumerate") {
    j = enumeration_to_json(p);
    files.emplace_back("enumeration.json", j.dump(2) + "\n");
  } else {
    VinbergConfig cfg;
    cfg.max_roots = o.max_roots;
    cfg.max_height = parse_integers({o.max_height}, "--max-height").front();
    run_classification_stage(p, cfg, thread_cap());
    j = classification_to_json(p);
    files.emplace_back("classification.json", j.dump(2) + "\n");
    for (std::size_t i = 0; i < p.table.size(); ++i)
      files.emplace_back(file_stem(p.table[i].name) + ".dot", p.reports[i].dot);
  }

  if (!o.out.empty()) {
    fs::create_directories(o.out);
    for (const auto& [name, text] : files) write_file(fs::path(o.out) / name, text);
  }
  std::cout << j.dump(2) << "\n";

  if (!o.check.empty()) {
    bool ok = true;
    for (const auto& [name, text] : files) ok = matches_golden(fs::path(o.check) / name, text) && ok;
    if (!ok) {
      std::cerr << "golden check FAILED\n";
      return kMismatch;
    }
    std::cerr << "golden check passed (" << files.size() << " files)\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflective hyperbolic lattices of rank 4: invariants, anisotropy, Vinberg's algorithm"};
  app.require_subcommand(1);

  std::string input, out;
  auto* inv = app.add_subcommand("invariants", "discriminant, invariant factors, signature, maximal extensions");
  inv->add_option("input", input, "lattice JSON file")->required();
  inv->add_option("--out", out, "write the report here instead of stdout");

  auto* ani = app.add_subcommand("anisotropy", "per-place and global anisotropy of a rank-4 lattice");
  ani->add_option("input", input, "lattice JSON file")->required();
  ani->add_option("--out", out, "write the report here instead of stdout");

  VinbergOptions vo;
  auto* vin = app.add_subcommand("vinberg", "run Vinberg's algorithm");
  vin->add_option("input", vo.input, "lattice JSON file")->required();
  vin->add_option("--norms", vo.norms, "allowed root norms, e.g. 1,2")->delimiter(',');
  vin->add_option("--basic-point", vo.basic_point, "basic point coordinates, e.g. 1,0,0,0")->delimiter(',');
  vin->add_option("--max-roots", vo.max_roots, "stop after this many roots")->capture_default_str();
  vin->add_option("--max-height", vo.max_height, "largest -(a, v0) searched")->capture_default_str();
  vin->add_option("--dot", vo.dot, "write the Coxeter diagram as DOT");
  vin->add_option("--out", vo.out, "write the report here instead of stdout");

  DiagramOptions dopt;
  auto* dia = app.add_subcommand("diagram", "Coxeter diagram and finite-volume test of a given root set");
  dia->add_option("input", dopt.input, "lattice JSON file with a \"roots\" array")->required();
  dia->add_option("--dot", dopt.dot, "write the diagram as DOT");
  dia->add_option("--out", dopt.out, "write the report here instead of stdout");

  ClassifyOptions co;
  auto* cls = app.add_subcommand("classify", "enumeration, candidate table and per-lattice verdicts");
  cls->add_option("--stage", co.stage, "enumerate or classify")
      ->check(CLI::IsMember({"enumerate", "classify"}))
      ->capture_default_str();
  cls->add_option("--out", co.out, "directory for the JSON and DOT reports");
  cls->add_option("--check", co.check, "directory of golden files to compare against");
  cls->add_option("--max-roots", co.max_roots, "per-lattice root budget")->capture_default_str();
  cls->add_option("--max-height", co.max_height, "per-lattice height budget")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    if (*inv) {
      emit(invariants_to_json(load_lattice(input)), out);
      return kOk;
    }
    if (*ani) {
      QuadraticLattice l = load_lattice(input);
      if (l.rank() != 4) throw RankNotFour("lattice has rank " + std::to_string(l.rank()) + ", expected 4");
      emit(anisotropy_to_json(l), out);
      return kOk;
    }
    if (*vin) return cmd_vinberg(vo);
    if (*dia) return cmd_diagram(dopt);
    if (*cls) return cmd_classify(co);
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const InvalidLattice& e) {
    std::cerr << "invalid lattice: " << e.what() << "\n";
    return kMalformed;
  } catch (const RankNotFour& e) {
    std::cerr << e.what() << "\n";
    return kWrongShape;
  } catch (const NotHyperbolic& e) {
    std::cerr << e.what() << "\n";
    return kWrongShape;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::overflow_error& e) {
    std::cerr << "input outside the supported range: " << e.what() << "\n";
    return kMalformed;
  }
  return kOk;
}
