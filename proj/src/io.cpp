#include "fml/io.hpp"

#include <fstream>
#include <sstream>

namespace fml {

namespace {

int resolve(const Json& ref, const std::vector<std::string>& names, const char* what) {
  if (ref.is_number_integer()) {
    const int i = ref.get<int>();
    if (i < 0 || i >= static_cast<int>(names.size())) {
      throw FormatError(std::string(what) + " index " + std::to_string(i) + " out of range");
    }
    return i;
  }
  if (ref.is_string()) {
    const auto name = ref.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<int>(i);
    }
    throw FormatError(std::string(what) + " '" + name + "' is not declared");
  }
  throw FormatError(std::string(what) + " must be an index or a name");
}

std::vector<Edge> edges_from(const Json& j, const std::vector<std::string>& names, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of pairs");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw FormatError(std::string(what) + " entries must be pairs");
    out.emplace_back(resolve(e[0], names, what), resolve(e[1], names, what));
  }
  return out;
}

Json edges_to(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [x, y] : edges) out.push_back({x, y});
  return out;
}

std::vector<std::string> names_from(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
    throw FormatError(std::string("expected an object with a \"") + key + "\" array");
  }
  std::vector<std::string> names;
  for (const auto& s : j[key]) {
    if (!s.is_string()) throw FormatError(std::string("\"") + key + "\" entries must be strings");
    names.push_back(s.get<std::string>());
  }
  return names;
}

std::vector<int> table_from(const Json& j, const char* key, const std::vector<std::string>& names) {
  if (!j.contains(key)) return {};
  const Json& t = j[key];
  if (!t.is_array() || t.size() != names.size()) {
    throw FormatError(std::string("\"") + key + "\" must list one value per element");
  }
  std::vector<int> out;
  for (const auto& v : t) out.push_back(resolve(v, names, key));
  return out;
}

Json names_of(const LatticeAlgebra& l, const std::vector<int>& xs) {
  Json out = Json::array();
  for (int x : xs) out.push_back(l.name(x));
  return out;
}

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json frame_to_json(const ModalFrame& frame) {
  Json j;
  j["states"] = frame.names();
  j["open"] = edges_to(frame.open_edges());
  if (frame.is_modal()) {
    j["R"] = edges_to(frame.r_edges());
    j["Q"] = edges_to(frame.q_edges());
  }
  return j;
}

ModalFrame frame_from_json(const Json& j) {
  const auto names = names_from(j, "states");
  const int n = static_cast<int>(names.size());
  if (n > kMaxStates) throw FormatError("frames are limited to " + std::to_string(kMaxStates) + " states");
  if (!j.contains("open")) throw FormatError("frame needs an \"open\" relation");
  const auto open = edges_from(j["open"], names, "open");
  ModalFrame f;
  if (!j.contains("R")) {
    if (j.contains("Q")) throw FormatError("\"Q\" given without \"R\"");
    f = ModalFrame::relational(n, open);
  } else {
    const auto r = edges_from(j["R"], names, "R");
    f = j.contains("Q") ? ModalFrame::modal(n, open, r, edges_from(j["Q"], names, "Q"))
                        : ModalFrame::unified(n, open, r);
  }
  f.set_names(names);
  return f;
}

Json lattice_to_json(const LatticeData& data) {
  Json j;
  j["elements"] = data.elements;
  Json leq = Json::array();
  for (auto [a, b] : data.leq) leq.push_back({a, b});
  j["leq"] = leq;
  if (!data.neg.empty()) j["neg"] = data.neg;
  if (!data.box.empty()) j["box"] = data.box;
  if (!data.dia.empty()) j["dia"] = data.dia;
  return j;
}

LatticeData lattice_from_json(const Json& j) {
  LatticeData d;
  d.elements = names_from(j, "elements");
  if (!j.contains("leq")) throw FormatError("lattice needs a \"leq\" relation");
  d.leq = edges_from(j["leq"], d.elements, "leq");
  d.neg = table_from(j, "neg", d.elements);
  d.box = table_from(j, "box", d.elements);
  d.dia = table_from(j, "dia", d.elements);
  return d;
}

Json state_set_to_json(const ModalFrame& frame, StateSet s) {
  Json out = Json::array();
  for (int x : s.members()) out.push_back(frame.name(x));
  return out;
}

Json model_to_json(const Model& m) {
  Json j;
  j["frame"] = frame_to_json(m.frame);
  Json v = Json::object();
  for (const auto& [atom, set] : m.valuation) v[atom] = state_set_to_json(m.frame, set);
  j["valuation"] = v;
  return j;
}

Json countermodel_to_json(const CounterModel& m) {
  Json j = model_to_json(Model{m.frame, m.valuation});
  j["witness"] = m.frame.name(m.witness);
  return j;
}

Model model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("frame")) throw FormatError("model needs a \"frame\"");
  Model m{frame_from_json(j["frame"]), {}};
  if (j.contains("valuation")) {
    if (!j["valuation"].is_object()) throw FormatError("\"valuation\" must map atoms to state lists");
    for (const auto& [atom, states] : j["valuation"].items()) {
      if (!states.is_array()) throw FormatError("valuation of '" + atom + "' must be a list of states");
      StateSet s;
      for (const auto& x : states) s.insert(resolve(x, m.frame.names(), "state"));
      m.valuation[atom] = s;
    }
  }
  return m;
}

Json trace_to_json(const Trace& trace) {
  Json out = Json::array();
  for (const auto& s : trace) {
    Json step;
    step["rule"] = s.rule;
    step["lhs"] = render(s.lhs);
    step["rhs"] = render(s.rhs);
    step["premises"] = s.premises;
    out.push_back(step);
  }
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["verdict"] = std::string(verdict_name(v));
  if (const auto* p = std::get_if<Proved>(&v)) {
    j["trace"] = trace_to_json(p->trace);
  } else if (const auto* r = std::get_if<Refuted>(&v)) {
    j["frame_class"] = std::string(frame_class_name(r->frame_class));
    j["countermodel"] = countermodel_to_json(r->model);
  } else {
    j["report"] = std::get<Unknown>(v).report;
  }
  return j;
}

Json property_to_json(const LatticeAlgebra& l, const PropertyReport& r) {
  Json j;
  j["name"] = r.name;
  j["holds"] = r.holds;
  if (!r.holds) {
    j["witness"] = names_of(l, r.witness);
    if (!r.chain.empty()) j["chain"] = r.chain;
  }
  return j;
}

Json condition_to_json(const ModalFrame& frame, const ConditionReport& r) {
  Json j;
  j["condition"] = std::string(condition_name(r.condition));
  j["holds"] = r.holds;
  if (!r.holds) {
    Json w = Json::array();
    for (int x : r.witness) w.push_back(frame.name(x));
    j["witness"] = w;
  }
  return j;
}

Json morphism_to_json(const LatticeAlgebra& l, const ModalFrame& frame, const MorphismReport& r) {
  Json j;
  j["isomorphism"] = r.isomorphism();
  j["into_fixpoints"] = r.into_fixpoints;
  j["injective"] = r.injective;
  j["surjective"] = r.surjective;
  j["fixpoint_count"] = r.fixpoint_count;
  if (!r.injectivity_witness.empty()) j["injectivity_witness"] = names_of(l, r.injectivity_witness);
  if (r.missing_fixpoint) j["missing_fixpoint"] = state_set_to_json(frame, *r.missing_fixpoint);
  Json image = Json::object();
  for (int a = 0; a < l.size() && a < static_cast<int>(r.image.size()); ++a) {
    image[l.name(a)] = state_set_to_json(frame, r.image[a]);
  }
  j["image"] = image;
  Json pres = Json::object();
  for (const auto& op : r.preserves) {
    Json o;
    o["preserved"] = op.preserved;
    if (!op.preserved) o["witness"] = names_of(l, op.witness);
    pres[op.op] = o;
  }
  j["preserves"] = pres;
  return j;
}

std::string frame_to_dot(const ModalFrame& frame, StateSet highlight) {
  std::ostringstream out;
  out << "digraph frame {\n";
  for (int x = 0; x < frame.size(); ++x) {
    out << "  " << dot_id(frame.name(x));
    if (highlight.contains(x)) out << " [peripheries=2]";
    out << ";\n";
  }
  for (auto [z, y] : frame.open_edges()) {
    out << "  " << dot_id(frame.name(y)) << " -> " << dot_id(frame.name(z)) << " [style=solid];\n";
  }
  for (auto [x, y] : frame.r_edges()) {
    out << "  " << dot_id(frame.name(x)) << " -> " << dot_id(frame.name(y)) << " [style=dashed];\n";
  }
  for (auto [x, y] : frame.q_edges()) {
    out << "  " << dot_id(frame.name(x)) << " -> " << dot_id(frame.name(y)) << " [style=dotted];\n";
  }
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace fml
