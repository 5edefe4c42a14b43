#include "fml/formula.hpp"

#include <algorithm>
#include <cassert>

namespace fml {

struct Formula::Node {
  Connective kind;
  std::string name;
  std::vector<Formula> children;
  std::size_t size = 1;
  std::size_t depth = 0;
  std::string text;
};

namespace {

int precedence(Connective c) {
  switch (c) {
    case Connective::Or: return 1;
    case Connective::And: return 2;
    default: return 3;
  }
}

const char* symbol(Connective c) {
  switch (c) {
    case Connective::Bot: return "_|_";
    case Connective::Top: return "T";
    case Connective::Neg: return "~";
    case Connective::And: return " & ";
    case Connective::Or: return " | ";
    case Connective::Box: return "[]";
    case Connective::Dia: return "<>";
    case Connective::Atom: break;
  }
  return "";
}

std::string wrap(const Formula& f, bool parens) {
  return parens ? "(" + f.text() + ")" : f.text();
}

}  // namespace

Formula Formula::make(Connective kind, std::string name, const Formula* l, const Formula* r) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  if (l) node->children.push_back(*l);
  if (r) node->children.push_back(*r);
  for (const auto& c : node->children) {
    node->size += c.size();
    node->depth = std::max(node->depth, c.depth() + 1);
  }
  switch (kind) {
    case Connective::Atom:
      node->text = node->name;
      break;
    case Connective::Bot:
    case Connective::Top:
      node->text = symbol(kind);
      break;
    case Connective::Neg:
    case Connective::Box:
    case Connective::Dia:
      node->text = std::string(symbol(kind)) + wrap(*l, l->is_binary());
      break;
    case Connective::And:
    case Connective::Or: {
      const int p = precedence(kind);
      node->text = wrap(*l, precedence(l->kind()) < p) + symbol(kind) +
                   wrap(*r, precedence(r->kind()) <= p);
      break;
    }
  }
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) { return make(Connective::Atom, std::move(name), nullptr, nullptr); }

Formula Formula::bot() {
  static const Formula f = make(Connective::Bot, {}, nullptr, nullptr);
  return f;
}

Formula Formula::top() {
  static const Formula f = make(Connective::Top, {}, nullptr, nullptr);
  return f;
}

Formula Formula::neg(Formula operand) { return make(Connective::Neg, {}, &operand, nullptr); }
Formula Formula::conj(Formula left, Formula right) { return make(Connective::And, {}, &left, &right); }
Formula Formula::disj(Formula left, Formula right) { return make(Connective::Or, {}, &left, &right); }
Formula Formula::box(Formula operand) { return make(Connective::Box, {}, &operand, nullptr); }
Formula Formula::dia(Formula operand) { return make(Connective::Dia, {}, &operand, nullptr); }

Connective Formula::kind() const { return node_->kind; }

bool Formula::is_unary() const {
  const auto k = kind();
  return k == Connective::Neg || k == Connective::Box || k == Connective::Dia;
}

bool Formula::is_binary() const { return kind() == Connective::And || kind() == Connective::Or; }

const std::string& Formula::name() const { return node_->name; }

const Formula& Formula::left() const {
  assert(!node_->children.empty());
  return node_->children[0];
}

const Formula& Formula::right() const {
  assert(node_->children.size() == 2);
  return node_->children[1];
}

std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::depth() const { return node_->depth; }
const std::string& Formula::text() const { return node_->text; }

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

bool FormulaOrder::operator()(const Formula& a, const Formula& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.text() < b.text();
}

std::string_view logic_name(LogicId logic) {
  switch (logic) {
    case LogicId::Fundamental: return "fundamental";
    case LogicId::Ortho: return "ortho";
    case LogicId::IntuitionisticFragment: return "intuitionistic";
    case LogicId::Classical: return "classical";
    case LogicId::FundamentalModal: return "modal";
  }
  return "?";
}

LogicId parse_logic(std::string_view name) {
  if (name == "fundamental") return LogicId::Fundamental;
  if (name == "ortho" || name == "orthologic") return LogicId::Ortho;
  if (name == "intuitionistic") return LogicId::IntuitionisticFragment;
  if (name == "classical") return LogicId::Classical;
  if (name == "modal" || name == "fundamental-modal") return LogicId::FundamentalModal;
  throw std::invalid_argument("unknown logic '" + std::string(name) + "'");
}

bool is_modal_language(LogicId logic) { return logic == LogicId::FundamentalModal; }

std::string render(const Formula& f) { return f.text(); }

std::string render(const Consecution& c) { return c.lhs.text() + " |- " + c.rhs.text(); }

bool in_language(const Formula& f, LogicId logic) {
  if (is_modal_language(logic)) return true;
  switch (f.kind()) {
    case Connective::Atom: return true;
    case Connective::Neg: return in_language(f.operand(), logic);
    case Connective::And:
    case Connective::Or: return in_language(f.left(), logic) && in_language(f.right(), logic);
    default: return false;
  }
}

void check_language(const Formula& f, LogicId logic) {
  if (!in_language(f, logic)) {
    throw LanguageError("formula '" + f.text() + "' is outside the language of " +
                        std::string(logic_name(logic)) + " logic");
  }
}

namespace {

void collect(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  if (f.is_unary()) collect(f.operand(), out);
  if (f.is_binary()) {
    collect(f.left(), out);
    collect(f.right(), out);
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.is(Connective::Atom)) out.insert(f.name());
  if (f.is_unary()) collect_atoms(f.operand(), out);
  if (f.is_binary()) {
    collect_atoms(f.left(), out);
    collect_atoms(f.right(), out);
  }
}

}  // namespace

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  collect(f, out);
  return out;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

Formula godel_gentzen(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: return Formula::neg(Formula::neg(f));
    case Connective::Neg: return Formula::neg(godel_gentzen(f.operand()));
    case Connective::And: return Formula::conj(godel_gentzen(f.left()), godel_gentzen(f.right()));
    case Connective::Or:
      // g(a | b) = g(~(~a & ~b)) = ~(~g(a) & ~g(b))
      return Formula::neg(Formula::conj(Formula::neg(godel_gentzen(f.left())),
                                        Formula::neg(godel_gentzen(f.right()))));
    default:
      throw LanguageError("negative translation is defined only on ~, &, | over atoms; got '" +
                          f.text() + "'");
  }
}

std::vector<Formula> state_descriptions(const std::vector<std::string>& vars) {
  if (vars.empty()) throw LanguageError("state descriptions need at least one variable");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      if (vars[i] == vars[j]) throw LanguageError("duplicate variable '" + vars[i] + "'");
    }
  }
  const std::size_t n = vars.size();
  std::vector<Formula> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << n); ++pattern) {
    std::vector<Formula> literals;
    for (std::size_t i = 0; i < n; ++i) {
      const bool negated = (pattern >> (n - 1 - i)) & 1U;
      Formula p = Formula::atom(vars[i]);
      literals.push_back(negated ? Formula::neg(p) : p);
    }
    Formula acc = literals.front();
    for (std::size_t i = 1; i < n; ++i) acc = Formula::conj(acc, literals[i]);
    out.push_back(acc);
  }
  return out;
}

Formula classical_premise(const Formula& phi, const Formula& psi) {
  check_language(phi, LogicId::Classical);
  check_language(psi, LogicId::Classical);
  auto vars = atoms(phi);
  vars.merge(atoms(psi));
  if (vars.empty()) throw LanguageError("classical premise needs at least one variable");
  const auto sds = state_descriptions({vars.begin(), vars.end()});
  Formula acc = Formula::conj(sds.front(), phi);
  for (std::size_t i = 1; i < sds.size(); ++i) acc = Formula::disj(acc, Formula::conj(sds[i], phi));
  return acc;
}

}  // namespace fml
