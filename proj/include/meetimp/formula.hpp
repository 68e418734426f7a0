#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace meetimp {

enum class FormulaKind : std::uint8_t { Var, Top, Bot, And, Or, Imp };

// Immutable formula tree with structural sharing. Copies are cheap (shared
// nodes), so recursive constructions such as the de Jongh formulas stay
// polynomial-sized as DAGs even when the printed tree is exponential.
// Negation is not a node: ~f is stored as Imp(f, Bot).
class Formula {
public:
  struct Node {
    FormulaKind kind;
    int var = 0;  // 1-based, Var only
    Formula left, right;
    int max_var = 0;
    int node_count = 1;
  };

  Formula() = default;  // empty handle; only as Node member placeholder

  static Formula var(int index);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula neg(Formula f) { return imp(std::move(f), bot()); }

  // Left fold; empty conjunction is T, empty disjunction is F.
  static Formula big_conj(const std::vector<Formula>& fs);
  static Formula big_disj(const std::vector<Formula>& fs);

  bool valid() const { return node_ != nullptr; }
  const Node& node() const { return *node_; }
  const Node* ptr() const { return node_.get(); }
  FormulaKind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  const Formula& left() const { return node_->left; }
  const Formula& right() const { return node_->right; }
  int max_var() const { return node_->max_var; }
  int node_count() const { return node_->node_count; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FragmentClass {
  bool uses_or = false;
  bool uses_bot = false;
  bool meet_implication() const { return !uses_or && !uses_bot; }
};

FragmentClass classify_fragment(const Formula& f);

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

// Grammar:
//   atom ::= "p"digits | "T" | "F" | "(" expr ")" | "~" atom
//   conj ::= atom ("&" atom)*
//   disj ::= conj ("|" conj)*
//   expr ::= disj ("->" expr)?
// "~f" expands to "f -> F"; "->" is right-associative; whitespace ignored.
Formula parse_formula(const std::string& text);

// Minimal parentheses; parse_formula(render(f)) == f.
std::string render(const Formula& f);

}  // namespace meetimp
