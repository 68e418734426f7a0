#include "meetimp/formula.hpp"

#include <algorithm>
#include <cctype>

namespace meetimp {

namespace {

std::shared_ptr<const Formula::Node> make_node(FormulaKind kind, int var, Formula l, Formula r) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = kind;
  n->var = var;
  int mv = var;
  int count = 1;
  if (l.valid()) {
    mv = std::max(mv, l.max_var());
    count += l.node_count();
  }
  if (r.valid()) {
    mv = std::max(mv, r.max_var());
    count += r.node_count();
  }
  n->left = std::move(l);
  n->right = std::move(r);
  n->max_var = mv;
  n->node_count = count;
  return n;
}

struct Access {
  static Formula wrap(std::shared_ptr<const Formula::Node> n);
};

}  // namespace

Formula Formula::var(int index) {
  if (index < 1) throw std::invalid_argument("variable index must be >= 1");
  return Formula(make_node(FormulaKind::Var, index, {}, {}));
}

Formula Formula::top() {
  static const Formula t{Formula(make_node(FormulaKind::Top, 0, {}, {}))};
  return t;
}

Formula Formula::bot() {
  static const Formula f{Formula(make_node(FormulaKind::Bot, 0, {}, {}))};
  return f;
}

Formula Formula::conj(Formula l, Formula r) {
  return Formula(make_node(FormulaKind::And, 0, std::move(l), std::move(r)));
}

Formula Formula::disj(Formula l, Formula r) {
  return Formula(make_node(FormulaKind::Or, 0, std::move(l), std::move(r)));
}

Formula Formula::imp(Formula l, Formula r) {
  return Formula(make_node(FormulaKind::Imp, 0, std::move(l), std::move(r)));
}

Formula Formula::big_conj(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula Formula::big_disj(const std::vector<Formula>& fs) {
  if (fs.empty()) return bot();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind || a.var != b.var || a.node_count != b.node_count) return false;
  switch (a.kind) {
    case FormulaKind::Var:
    case FormulaKind::Top:
    case FormulaKind::Bot:
      return true;
    default:
      return a.left == b.left && a.right == b.right;
  }
}

FragmentClass classify_fragment(const Formula& f) {
  FragmentClass c;
  std::vector<const Formula::Node*> stack{f.ptr()};
  while (!stack.empty()) {
    const Formula::Node* n = stack.back();
    stack.pop_back();
    switch (n->kind) {
      case FormulaKind::Or:
        c.uses_or = true;
        stack.push_back(n->left.ptr());
        stack.push_back(n->right.ptr());
        break;
      case FormulaKind::Bot:
        c.uses_bot = true;
        break;
      case FormulaKind::And:
      case FormulaKind::Imp:
        stack.push_back(n->left.ptr());
        stack.push_back(n->right.ptr());
        break;
      default:
        break;
    }
    if (c.uses_or && c.uses_bot) break;
  }
  return c;
}

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  Formula run() {
    Formula f = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_arrow() {
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return true;
    }
    return false;
  }

  Formula expr() {
    Formula l = disj();
    if (eat_arrow()) return Formula::imp(std::move(l), expr());
    return l;
  }

  Formula disj() {
    Formula acc = conj();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        acc = Formula::disj(std::move(acc), conj());
      } else {
        break;
      }
    }
    return acc;
  }

  Formula conj() {
    Formula acc = atom();
    while (eat('&')) acc = Formula::conj(std::move(acc), atom());
    return acc;
  }

  Formula atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == '~') {
      ++pos_;
      return Formula::neg(atom());
    }
    if (c == 'T') {
      ++pos_;
      return Formula::top();
    }
    if (c == 'F') {
      ++pos_;
      return Formula::bot();
    }
    if (c == 'p') {
      std::size_t start = pos_;
      ++pos_;
      std::size_t digits_start = pos_;
      long long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > 1000000) {
          pos_ = start;
          fail("variable index too large");
        }
        ++pos_;
      }
      if (pos_ == digits_start) {
        pos_ = start;
        fail("expected digits after 'p'");
      }
      if (value == 0) {
        pos_ = start;
        fail("variable index 0 is not allowed");
      }
      return Formula::var(static_cast<int>(value));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// Precedence levels for minimal-parenthesis rendering: an implication body
// re-enters at expr level (right associativity), everything else descends.
enum Level : int { kExpr = 0, kDisj = 1, kConj = 2, kAtom = 3 };

void render_into(const Formula& f, int level, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Var:
      out += 'p';
      out += std::to_string(f.var_index());
      return;
    case FormulaKind::Top:
      out += 'T';
      return;
    case FormulaKind::Bot:
      out += 'F';
      return;
    case FormulaKind::Imp: {
      bool wrap = level > kExpr;
      if (wrap) out += '(';
      render_into(f.left(), kDisj, out);
      out += " -> ";
      render_into(f.right(), kExpr, out);
      if (wrap) out += ')';
      return;
    }
    case FormulaKind::Or: {
      bool wrap = level > kDisj;
      if (wrap) out += '(';
      render_into(f.left(), kDisj, out);
      out += " | ";
      render_into(f.right(), kConj, out);
      if (wrap) out += ')';
      return;
    }
    case FormulaKind::And: {
      bool wrap = level > kConj;
      if (wrap) out += '(';
      render_into(f.left(), kConj, out);
      out += " & ";
      render_into(f.right(), kAtom, out);
      if (wrap) out += ')';
      return;
    }
  }
}

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).run(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, kExpr, out);
  return out;
}

}  // namespace meetimp
