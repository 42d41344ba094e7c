#include "vinberg/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

namespace vinberg {

std::string to_string(ReflectivityStatus s) {
  switch (s) {
    case ReflectivityStatus::OneTwoReflective: return "ONE_TWO_REFLECTIVE";
    case ReflectivityStatus::ReflectiveNotOneTwo: return "REFLECTIVE_NOT_ONE_TWO";
    case ReflectivityStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string external_note(const std::string& name) {
  static const std::string mcleod =
      "non-reflectivity shown in McLeod's dissertation on arithmetic hyperbolic reflection groups "
      "(via Bugaenko's theorem and Nikulin's lower-rank list); not reproduced here";
  static const std::map<std::string, std::string> notes = {
      {"L(3)", "non-reflectivity shown by A. Mark for lattices of prime discriminant; not reproduced here"},
      {"L(4)", mcleod}, {"L(6)", mcleod}, {"L(7)", mcleod}, {"L(8)", mcleod}, {"L(9)", mcleod},
  };
  auto it = notes.find(name);
  return it == notes.end() ? std::string{} : it->second;
}

namespace {

bool within_one_two(const std::vector<Integer>& norms) {
  return std::all_of(norms.begin(), norms.end(), [](const Integer& k) { return k == 1 || k == 2; });
}

}  // namespace

ClassificationReport assess_run(const QuadraticLattice& lattice, VinbergRun run) {
  ClassificationReport r{lattice, invariant_factors(lattice), {}, false, std::move(run), {}, {}, {}, {},
                         ReflectivityStatus::Inconclusive, {}};
  r.places = anisotropy_by_place(lattice);
  r.anisotropic = std::any_of(r.places.begin(), r.places.end(), [](const LocalVerdict& v) { return v.anisotropic; });
  r.dot = emit_dot(build_diagram(r.run.roots), lattice.name().empty() ? "coxeter" : lattice.name());

  if (r.run.status != RunStatus::FiniteVolume) {
    r.note = "budget exhausted: " + r.run.stop_reason;
    return r;
  }
  r.diagram_check = diagram_criterion(build_diagram(r.run.roots));
  if (within_one_two(r.run.norms)) {
    r.status = ReflectivityStatus::OneTwoReflective;
    r.note = "the 1- and 2-reflections alone bound a polyhedron of finite volume";
    return r;
  }
  if (r.run.norms != admissible_root_norms(lattice)) {
    r.note = "reflective; 1.2-reflectivity needs a run over every admissible norm";
    return r;
  }
  r.bad_finite = bad_reflections_finite(r.run.roots);
  if (*r.bad_finite) {
    r.status = ReflectivityStatus::OneTwoReflective;
    r.note = "the bad reflections generate a finite group";
  } else {
    r.status = ReflectivityStatus::ReflectiveNotOneTwo;
    r.note = "the bad reflections generate an infinite group";
  }
  return r;
}

ClassificationReport classify_lattice(const QuadraticLattice& lattice, const VinbergConfig& base) {
  VinbergConfig full = base;
  full.allowed_norms.clear();
  ClassificationReport r = assess_run(lattice, run(lattice, full));
  if (r.status == ReflectivityStatus::OneTwoReflective) {
    VinbergConfig restricted = base;
    restricted.allowed_norms = {Integer(1), Integer(2)};
    r.one_two = run(lattice, restricted);
    if (r.one_two->status == RunStatus::FiniteVolume)
      r.note = "the bad reflections generate a finite group, and the 1- and 2-reflections alone bound a polyhedron of finite volume";
  }
  return r;
}

std::vector<std::string> PipelineReport::one_two_reflective() const {
  std::vector<std::string> out;
  for (const auto& r : reports)
    if (r.status == ReflectivityStatus::OneTwoReflective) out.push_back(r.lattice.name());
  return out;
}

std::size_t thread_cap() {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("VINBERG_LAB_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return static_cast<std::size_t>(v);
}

PipelineReport run_enumeration_stage() {
  PipelineReport p;
  p.candidates = frames_to_candidates(&p.stats);
  p.table = candidate_table(p.candidates);
  return p;
}

void run_classification_stage(PipelineReport& p, const VinbergConfig& base, std::size_t threads) {
  // Reference lattices are analysed in their diagonal form.
  std::vector<QuadraticLattice> inputs;
  for (const auto& t : p.table) {
    auto ref = std::find_if(reference_table().begin(), reference_table().end(),
                            [&](const ReferenceLattice& r) { return r.name == t.name; });
    inputs.push_back(ref == reference_table().end() ? t.lattice : ref->lattice);
  }

  std::vector<std::optional<ClassificationReport>> slots(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) slots[i] = classify_lattice(inputs[i], base);
  };
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, inputs.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  p.reports.clear();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    auto r = std::move(*slots[i]);
    if (r.status == ReflectivityStatus::Inconclusive) {
      std::string ext = external_note(p.table[i].name);
      if (!ext.empty()) r.note += "; " + ext;
    }
    p.reports.push_back(std::move(r));
  }
}

json report_to_json(const ClassificationReport& r) {
  json places = json::array();
  for (const auto& v : r.places) places.push_back({{"place", v.place.label()}, {"anisotropic", v.anisotropic}});
  json j{
      {"lattice", lattice_to_json(r.lattice)},
      {"discriminant", to_json(r.lattice.determinant())},
      {"invariant_factors", to_json(r.factors.factors)},
      {"places", places},
      {"anisotropic", r.anisotropic},
      {"vinberg", run_to_json(r.run)},
      {"finite_volume", r.run.volume.finite()},
      {"dot", r.dot},
      {"status", to_string(r.status)},
      {"note", r.note},
  };
  if (r.bad_finite) {
    j["bad_reflections"] = json::array();
    for (auto i : bad_reflections(r.run.roots)) j["bad_reflections"].push_back("a" + std::to_string(i + 1));
    j["bad_reflections_finite"] = *r.bad_finite;
  }
  if (r.diagram_check) j["diagram_criterion"] = *r.diagram_check;
  if (r.one_two) j["one_two_run"] = run_to_json(*r.one_two);
  return j;
}

namespace {

std::string frame_label(const CandidateFrame& f) { return f.label + "/T=" + std::to_string(f.T); }

}  // namespace

json enumeration_to_json(const PipelineReport& p) {
  json frames = json::array();
  for (const auto& c : p.candidates) {
    json ext = json::array();
    for (const auto& m : c.maximal_forms)
      ext.push_back({{"gram", to_json(m.lattice.gram())},
                     {"index", to_json(m.index)},
                     {"discriminant", to_json(m.lattice.determinant())}});
    frames.push_back({{"frame", frame_label(c.frame)},
                      {"gram", to_json(c.lattice.gram())},
                      {"discriminant", to_json(c.lattice.determinant())},
                      {"maximal_extensions", ext}});
  }
  json table = json::array();
  for (const auto& t : p.table)
    table.push_back({{"name", t.name},
                     {"gram", to_json(t.lattice.gram())},
                     {"invariant_factors", to_json(t.factors.factors)},
                     {"discriminant", to_json(t.discriminant)},
                     {"sources", t.sources}});
  return json{
      {"schema_version", kSchemaVersion},
      {"stage", "enumerate"},
      {"stats", {{"frames", p.stats.frames}, {"hyperbolic", p.stats.hyperbolic}, {"anisotropic", p.stats.anisotropic}}},
      {"anisotropic_frames", frames},
      {"table", table},
  };
}

json classification_to_json(const PipelineReport& p) {
  json j = enumeration_to_json(p);
  j["stage"] = "classify";
  json reports = json::array();
  json verdicts = json::object();
  for (std::size_t i = 0; i < p.reports.size(); ++i) {
    json r = report_to_json(p.reports[i]);
    r["name"] = p.table[i].name;
    reports.push_back(r);
    verdicts[p.table[i].name] = to_string(p.reports[i].status);
  }
  j["reports"] = reports;
  j["verdicts"] = verdicts;
  j["one_two_reflective"] = p.one_two_reflective();
  return j;
}

}  // namespace vinberg
