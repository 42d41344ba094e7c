#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "vinberg/json_io.hpp"

namespace testdata {

inline std::filesystem::path data_dir() { return VINBERG_TEST_DATA_DIR; }
inline std::filesystem::path golden_dir() { return VINBERG_TEST_GOLDEN_DIR; }

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline vinberg::json read_json(const std::filesystem::path& p) { return vinberg::json::parse(read_text(p)); }

inline vinberg::QuadraticLattice lattice(const std::string& stem) {
  return vinberg::load_lattice((data_dir() / "lattices" / (stem + ".json")).string());
}

}  // namespace testdata
