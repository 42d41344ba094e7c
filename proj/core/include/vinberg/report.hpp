#pragma once

// Per-lattice reflectivity verdicts and the full classification pipeline.

#include <optional>
#include <string>
#include <vector>

#include "vinberg/enumeration.hpp"
#include "vinberg/json_io.hpp"
#include "vinberg/vinberg.hpp"

namespace vinberg {

inline constexpr int kSchemaVersion = 1;

enum class ReflectivityStatus { OneTwoReflective, ReflectiveNotOneTwo, Inconclusive };

std::string to_string(ReflectivityStatus s);

struct ClassificationReport {
  QuadraticLattice lattice;
  InvariantFactors factors;
  std::vector<LocalVerdict> places;
  bool anisotropic = false;
  VinbergRun run;                        // unrestricted norms
  std::optional<VinbergRun> one_two;     // norms {1, 2}, when attempted
  std::optional<bool> bad_finite;        // only meaningful after a finite run
  std::optional<bool> diagram_check;     // combinatorial cross-check of the final diagram
  std::string dot;
  ReflectivityStatus status = ReflectivityStatus::Inconclusive;
  std::string note;
};

/// Verdict from a single run. A finite run over norms inside {1, 2} settles
/// 1.2-reflectivity; a finite run over every admissible norm settles it via the
/// bad reflections; anything else is inconclusive.
ClassificationReport assess_run(const QuadraticLattice& lattice, VinbergRun run);

/// Runs the unrestricted search; on finite volume decides the bad-reflection
/// group and confirms 1.2-reflectivity with a {1, 2} run.
ClassificationReport classify_lattice(const QuadraticLattice& lattice, const VinbergConfig& base = {});

/// Literature note attached to the reference lattices whose non-reflectivity
/// is proved elsewhere; empty otherwise.
std::string external_note(const std::string& name);

struct PipelineReport {
  EnumerationStats stats;
  std::vector<CandidateLattice> candidates;
  std::vector<TableEntry> table;
  std::vector<ClassificationReport> reports;  // same order as table

  /// Names of the ONE_TWO_REFLECTIVE entries.
  std::vector<std::string> one_two_reflective() const;
};

/// Parallelism cap from VINBERG_LAB_THREADS, defaulting to the hardware count.
std::size_t thread_cap();

PipelineReport run_enumeration_stage();
/// Fills `reports` for every table entry, `threads` analyses at a time.
void run_classification_stage(PipelineReport& p, const VinbergConfig& base, std::size_t threads);

json report_to_json(const ClassificationReport& r);
json enumeration_to_json(const PipelineReport& p);
json classification_to_json(const PipelineReport& p);

}  // namespace vinberg
