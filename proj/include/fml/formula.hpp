#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fml {

enum class Connective { Atom, Bot, Top, Neg, And, Or, Box, Dia };

/// Immutable formula tree over atoms, _|_, T, ~, &, |, [] and <>.
///
/// Nodes are shared and never mutated, so copying a Formula is cheap and
/// values can be used from several threads at once. Every node caches its
/// rendered text; since rendering is injective (parse(render(f)) == f), the
/// text doubles as the identity used by ==, ordering and hashing.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula bot();
  static Formula top();
  static Formula neg(Formula operand);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula box(Formula operand);
  static Formula dia(Formula operand);

  Connective kind() const;
  bool is(Connective c) const { return kind() == c; }
  bool is_unary() const;
  bool is_binary() const;

  /// Atom name; empty for every other connective.
  const std::string& name() const;
  /// Operand of a unary connective or left operand of a binary one.
  const Formula& left() const;
  /// Right operand of a binary connective.
  const Formula& right() const;
  const Formula& operand() const { return left(); }

  /// Node count.
  std::size_t size() const;
  std::size_t depth() const;
  /// Minimal-parenthesis concrete syntax.
  const std::string& text() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::string name, const Formula* l, const Formula* r);

  std::shared_ptr<const Node> node_;
};

/// Search order used throughout: by size, then by rendered text.
struct FormulaOrder {
  bool operator()(const Formula& a, const Formula& b) const;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return std::hash<std::string>{}(f.text()); }
};

using FormulaSet = std::set<Formula, FormulaOrder>;

enum class LogicId { Fundamental, Ortho, IntuitionisticFragment, Classical, FundamentalModal };

std::string_view logic_name(LogicId logic);
/// Accepts the CLI spellings: fundamental, ortho, intuitionistic, classical, modal
/// (and fundamental-modal).
LogicId parse_logic(std::string_view name);
bool is_modal_language(LogicId logic);

/// A claim lhs |- rhs in a given logic.
struct Consecution {
  Formula lhs;
  Formula rhs;
  LogicId logic = LogicId::Fundamental;

  friend bool operator==(const Consecution& a, const Consecution& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs && a.logic == b.logic;
  }
};

std::string render(const Formula& f);
std::string render(const Consecution& c);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Thrown when a formula uses connectives outside a logic's language, or an
/// operation receives input outside its domain.
class LanguageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Formula parse(std::string_view text);
/// Parses `<formula> |- <formula>`.
Consecution parse_consecution(std::string_view text, LogicId logic);

/// Throws LanguageError if f contains [], <>, _|_ or T and the logic is not modal.
void check_language(const Formula& f, LogicId logic);
bool in_language(const Formula& f, LogicId logic);

FormulaSet subformulas(const Formula& f);
/// Atom names occurring in f, sorted.
std::set<std::string> atoms(const Formula& f);

/// Goedel-Gentzen negative translation; defined on the propositional language only.
Formula godel_gentzen(const Formula& f);

/// All 2^n sign patterns over vars as left-associated conjunctions; the first
/// variable varies slowest and the unnegated literal comes first.
std::vector<Formula> state_descriptions(const std::vector<std::string>& vars);

/// Left-associated disjunction of (delta & phi) over the state descriptions of
/// the sorted atoms of phi and psi.
Formula classical_premise(const Formula& phi, const Formula& psi);

}  // namespace fml
