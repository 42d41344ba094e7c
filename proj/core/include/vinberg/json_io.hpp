#pragma once

// JSON encoding of lattices and run transcripts. Integers are JSON numbers
// when they fit in 53 bits and decimal strings otherwise; both are accepted
// on input.

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "vinberg/coxeter.hpp"
#include "vinberg/lattice.hpp"
#include "vinberg/local_arith.hpp"
#include "vinberg/vinberg.hpp"

namespace vinberg {

class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using nlohmann::json;

json to_json(const Integer& n);
json to_json(const Rational& q);
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);

/// Throws MalformedInput for anything that is not an integer or integral string.
Integer integer_from_json(const json& j);
IntVector vector_from_json(const json& j);

/// {"gram": [[...]], "name": "..."}; throws MalformedInput or InvalidLattice.
QuadraticLattice lattice_from_json(const json& j);
QuadraticLattice load_lattice(const std::string& path);
json lattice_to_json(const QuadraticLattice& l);

json invariants_to_json(const QuadraticLattice& l);
json anisotropy_to_json(const QuadraticLattice& l);
json run_to_json(const VinbergRun& run);
json volume_to_json(const FiniteVolumeResult& v);
json diagram_to_json(const CoxeterDiagram& d);

}  // namespace vinberg
