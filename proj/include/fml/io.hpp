#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fml/consequence.hpp"
#include "fml/frames.hpp"
#include "fml/lattice.hpp"
#include "fml/representation.hpp"

namespace fml {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"states": [...], "open": [[i, j], ...], "R": [...], "Q": [...]}. Without
/// "R" the frame is relational; without "Q" it is unified (Q := R). Pairs may
/// use indices or state names.
Json frame_to_json(const ModalFrame& frame);
ModalFrame frame_from_json(const Json& j);

/// {"elements": [...], "leq": [[i, j], ...], "neg": [...], "box": [...], "dia": [...]}.
/// Table entries and pairs may use indices or element names.
Json lattice_to_json(const LatticeData& data);
LatticeData lattice_from_json(const Json& j);

/// Sets as lists of state names.
Json state_set_to_json(const ModalFrame& frame, StateSet s);
Json countermodel_to_json(const CounterModel& m);
Json model_to_json(const Model& m);
/// {"frame": ..., "valuation": {...}}; the valuation may name states or indices.
Model model_from_json(const Json& j);

Json trace_to_json(const Trace& trace);
Json verdict_to_json(const Verdict& v);
Json property_to_json(const LatticeAlgebra& l, const PropertyReport& r);
Json condition_to_json(const ModalFrame& frame, const ConditionReport& r);
Json morphism_to_json(const LatticeAlgebra& l, const ModalFrame& frame, const MorphismReport& r);

/// Solid edges y -> z for z ◁ y, dashed for R, dotted for Q. States in the
/// highlight set are drawn doubled.
std::string frame_to_dot(const ModalFrame& frame, StateSet highlight = {});

Json read_json_file(const std::string& path);

}  // namespace fml
