//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <cctype>
#include <map>

#include "molsight/smarts/pattern.hpp"

namespace molsight::smarts {

using chem::Element;

Pattern::Pattern(std::vector<AtomExpr> atoms, std::vector<QueryBond> bonds, std::string source)
    : atoms_(std::move(atoms)), bonds_(std::move(bonds)), source_(std::move(source)) {
  adjacency_.assign(atoms_.size(), {});
  for (int i = 0; i < bond_count(); ++i) {
    adjacency_[bonds_[i].a].push_back({bonds_[i].b, i});
    adjacency_[bonds_[i].b].push_back({bonds_[i].a, i});
  }
  // connectivity check
  if (!atoms_.empty()) {
    std::vector<char> seen(atoms_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [o, b] : adjacency_[v]) {
        if (!seen[o]) {
          seen[o] = 1;
          ++count;
          stack.push_back(o);
        }
      }
    }
    if (count != atoms_.size())
      throw ParseError(ParseError::Kind::BadSyntax, "pattern query graph must be connected");
  }
}

namespace {

AtomExpr prim(AtomExpr::Prim p, int value = 0,
              AtomExpr::Arom arom = AtomExpr::Arom::Either) {
  AtomExpr e;
  e.op = AtomExpr::Op::Primitive;
  e.prim = p;
  e.value = value;
  e.arom = arom;
  return e;
}

class BracketParser {
 public:
  BracketParser(std::string_view body, std::string_view whole)
      : body_(body), whole_(whole) {}

  AtomExpr parse() {
    AtomExpr e = parse_semi();
    if (pos_ != body_.size())
      throw ParseError(ParseError::Kind::BadSyntax,
                       "trailing characters in bracket atom of '" + std::string(whole_) + "'");
    return e;
  }

 private:
  std::string_view body_;
  std::string_view whole_;
  size_t pos_ = 0;

  char peek() const { return pos_ < body_.size() ? body_[pos_] : '\0'; }
  bool done() const { return pos_ >= body_.size(); }

  int read_digits(int fallback) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return fallback;
    int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (body_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  AtomExpr parse_semi() {
    AtomExpr left = parse_comma();
    while (peek() == ';') {
      ++pos_;
      AtomExpr right = parse_comma();
      AtomExpr node;
      node.op = AtomExpr::Op::And;
      node.children = {std::move(left), std::move(right)};
      left = std::move(node);
    }
    return left;
  }

  AtomExpr parse_comma() {
    AtomExpr left = parse_and();
    while (peek() == ',') {
      ++pos_;
      AtomExpr right = parse_and();
      AtomExpr node;
      node.op = AtomExpr::Op::Or;
      node.children = {std::move(left), std::move(right)};
      left = std::move(node);
    }
    return left;
  }

  AtomExpr parse_and() {
    AtomExpr left = parse_unary();
    while (!done() && peek() != ',' && peek() != ';') {
      if (peek() == '&') ++pos_;
      AtomExpr right = parse_unary();
      AtomExpr node;
      node.op = AtomExpr::Op::And;
      node.children = {std::move(left), std::move(right)};
      left = std::move(node);
    }
    return left;
  }

  AtomExpr parse_unary() {
    if (peek() == '!') {
      ++pos_;
      AtomExpr node;
      node.op = AtomExpr::Op::Not;
      node.children = {parse_unary()};
      return node;
    }
    return parse_primitive();
  }

  AtomExpr parse_primitive() {
    char c = peek();
    if (c == '\0')
      throw ParseError(ParseError::Kind::BadSyntax,
                       "empty atom primitive in '" + std::string(whole_) + "'");
    if (c == '$')
      throw UnsupportedPrimitive("recursive SMARTS '$(...)' is outside the supported subset");
    if (c == '@')
      throw UnsupportedPrimitive("chirality primitives are outside the supported subset");
    if (c == 'r' || c == 'v' || c == 'x' || c == '^' || c == 'i')
      throw UnsupportedPrimitive(std::string("primitive '") + c +
                                 "' is outside the supported subset");
    if (std::isdigit(static_cast<unsigned char>(c)))
      throw UnsupportedPrimitive("isotope specifications are outside the supported subset");

    if (c == '*') {
      ++pos_;
      return prim(AtomExpr::Prim::Wildcard);
    }
    if (c == '#') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(ParseError::Kind::BadSyntax, "'#' needs an atomic number");
      // any atomic number compiles; numbers outside the element set never match
      return prim(AtomExpr::Prim::AtomicNumber, read_digits(0));
    }
    if (c == 'a') {
      ++pos_;
      return prim(AtomExpr::Prim::AnyAromatic);
    }
    if (c == 'A') {
      ++pos_;
      return prim(AtomExpr::Prim::AnyAliphatic);
    }
    if (c == 'D') {
      ++pos_;
      return prim(AtomExpr::Prim::Degree, read_digits(1));
    }
    if (c == 'H') {
      ++pos_;
      return prim(AtomExpr::Prim::TotalH, read_digits(1));
    }
    if (c == 'X') {
      ++pos_;
      return prim(AtomExpr::Prim::Connectivity, read_digits(1));
    }
    if (c == 'R') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek())))
        return prim(AtomExpr::Prim::RingCount, read_digits(0));
      return prim(AtomExpr::Prim::InRing);
    }
    if (c == '+' || c == '-') {
      int sign = c == '+' ? 1 : -1;
      ++pos_;
      int mag;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        mag = read_digits(1);
      } else {
        mag = 1;
        while (peek() == c) {
          ++mag;
          ++pos_;
        }
      }
      return prim(AtomExpr::Prim::Charge, sign * mag);
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      size_t len = 1;
      if (pos_ + 1 < body_.size() &&
          std::islower(static_cast<unsigned char>(body_[pos_ + 1])) &&
          chem::element_from_symbol(body_.substr(pos_, 2)))
        len = 2;
      auto e = chem::element_from_symbol(body_.substr(pos_, len));
      if (!e)
        throw UnsupportedPrimitive("element '" + std::string(body_.substr(pos_, len)) +
                                   "' is outside the supported set");
      pos_ += len;
      return prim(AtomExpr::Prim::Element, static_cast<int>(*e), AtomExpr::Arom::Aliphatic);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto e = chem::element_from_symbol(std::string_view(&upper, 1));
      if (!e || !chem::aromatic_input_allowed(*e))
        throw UnsupportedPrimitive(std::string("aromatic element '") + c +
                                   "' is outside the supported set");
      ++pos_;
      return prim(AtomExpr::Prim::Element, static_cast<int>(*e), AtomExpr::Arom::Aromatic);
    }
    throw ParseError(ParseError::Kind::BadSyntax,
                     std::string("unexpected character '") + c + "' in bracket atom");
  }
};

class SmartsParser {
 public:
  explicit SmartsParser(std::string_view text) : text_(text) {}

  Pattern run() {
    if (text_.empty())
      throw ParseError(ParseError::Kind::BadSyntax, "empty SMARTS");
    while (pos_ < text_.size()) step();
    if (!open_parens_.empty())
      throw ParseError(ParseError::Kind::UnbalancedParen, "unclosed '(' in SMARTS");
    if (!ring_map_.empty())
      throw ParseError(ParseError::Kind::UnclosedRing, "unclosed ring bond in SMARTS");
    if (pending_)
      throw ParseError(ParseError::Kind::BadSyntax, "dangling bond expression");
    if (atoms_.empty())
      throw ParseError(ParseError::Kind::BadSyntax, "no atoms in SMARTS");
    return Pattern(std::move(atoms_), std::move(bonds_), std::string(text_));
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  std::vector<AtomExpr> atoms_;
  std::vector<QueryBond> bonds_;
  int prev_ = -1;
  std::optional<BondExpr> pending_;
  std::vector<int> open_parens_;
  std::map<int, std::pair<int, std::optional<BondExpr>>> ring_map_;

  [[noreturn]] void bad(const std::string& msg) {
    throw ParseError(ParseError::Kind::BadSyntax, msg + " at position " + std::to_string(pos_));
  }

  static bool is_bond_char(char c) {
    return c == '-' || c == '=' || c == '#' || c == ':' || c == '~' || c == '@' || c == '/' ||
           c == '\\';
  }

  void step() {
    char c = text_[pos_];
    if (std::isspace(static_cast<unsigned char>(c))) bad("whitespace inside SMARTS");
    if (c == '$')
      throw UnsupportedPrimitive("recursive SMARTS '$(...)' is outside the supported subset");
    if (c == '.')
      throw ParseError(ParseError::Kind::BadSyntax,
                       "disconnected ('.') SMARTS patterns are not supported");
    if (is_bond_char(c)) {
      if (pending_) bad("two bond expressions in a row");
      pending_ = read_bond();
      return;
    }
    if (c == '(') {
      if (prev_ < 0) bad("branch with no preceding atom");
      open_parens_.push_back(prev_);
      ++pos_;
      return;
    }
    if (c == ')') {
      if (open_parens_.empty())
        throw ParseError(ParseError::Kind::UnbalancedParen, "unmatched ')'");
      if (pending_) bad("bond expression before ')'");
      prev_ = open_parens_.back();
      open_parens_.pop_back();
      ++pos_;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
      ring_closure();
      return;
    }
    atom();
  }

  BondExpr read_bond() {
    BondExpr e;
    bool have_base = false;
    while (pos_ < text_.size() && is_bond_char(text_[pos_])) {
      char c = text_[pos_];
      if (c == '@') {
        e.require_ring = true;
        ++pos_;
        continue;
      }
      BondExpr::Base base;
      switch (c) {
        case '-': case '/': case '\\': base = BondExpr::Base::Single; break;
        case '=': base = BondExpr::Base::Double; break;
        case '#': base = BondExpr::Base::Triple; break;
        case ':': base = BondExpr::Base::Aromatic; break;
        case '~': base = BondExpr::Base::Any; break;
        default: bad("bad bond primitive");
      }
      if (have_base && e.base != base) bad("conflicting bond primitives");
      e.base = base;
      have_base = true;
      ++pos_;
    }
    if (!have_base && e.require_ring) e.base = BondExpr::Base::Any;
    return e;
  }

  void connect(int idx) {
    if (prev_ >= 0) {
      BondExpr e = pending_ ? *pending_ : BondExpr{};
      bonds_.push_back(QueryBond{prev_, idx, e});
    }
    pending_.reset();
    prev_ = idx;
  }

  void ring_closure() {
    int digit;
    if (text_[pos_] == '%') {
      if (pos_ + 2 >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2])))
        bad("'%' ring closure needs two digits");
      digit = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
      pos_ += 3;
    } else {
      digit = text_[pos_] - '0';
      ++pos_;
    }
    if (prev_ < 0) bad("ring closure with no preceding atom");
    std::optional<BondExpr> expr = pending_;
    pending_.reset();

    auto it = ring_map_.find(digit);
    if (it == ring_map_.end()) {
      ring_map_[digit] = {prev_, expr};
      return;
    }
    auto [open_atom, open_expr] = it->second;
    ring_map_.erase(it);
    if (open_atom == prev_) bad("ring closure to same atom");
    BondExpr e;
    if (open_expr && expr) {
      if (open_expr->base != expr->base || open_expr->require_ring != expr->require_ring)
        bad("conflicting ring-closure bond expressions");
      e = *open_expr;
    } else if (open_expr) {
      e = *open_expr;
    } else if (expr) {
      e = *expr;
    }
    bonds_.push_back(QueryBond{open_atom, prev_, e});
  }

  void atom() {
    char c = text_[pos_];
    if (c == '[') {
      size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) bad("unterminated bracket atom");
      std::string_view body = text_.substr(pos_ + 1, close - pos_ - 1);
      BracketParser bp(body, text_);
      atoms_.push_back(bp.parse());
      pos_ = close + 1;
      connect(static_cast<int>(atoms_.size()) - 1);
      return;
    }
    if (c == '*') {
      atoms_.push_back(prim(AtomExpr::Prim::Wildcard));
      ++pos_;
      connect(static_cast<int>(atoms_.size()) - 1);
      return;
    }
    if (c == 'a') {
      atoms_.push_back(prim(AtomExpr::Prim::AnyAromatic));
      ++pos_;
      connect(static_cast<int>(atoms_.size()) - 1);
      return;
    }
    if (c == 'A') {
      atoms_.push_back(prim(AtomExpr::Prim::AnyAliphatic));
      ++pos_;
      connect(static_cast<int>(atoms_.size()) - 1);
      return;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      size_t len = 1;
      if (pos_ + 1 < text_.size() &&
          std::islower(static_cast<unsigned char>(text_[pos_ + 1])) &&
          chem::element_from_symbol(text_.substr(pos_, 2)))
        len = 2;
      auto e = chem::element_from_symbol(text_.substr(pos_, len));
      if (!e)
        throw UnsupportedPrimitive("element '" + std::string(text_.substr(pos_, len)) +
                                   "' is outside the supported set");
      atoms_.push_back(
          prim(AtomExpr::Prim::Element, static_cast<int>(*e), AtomExpr::Arom::Aliphatic));
      pos_ += len;
      connect(static_cast<int>(atoms_.size()) - 1);
      return;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto e = chem::element_from_symbol(std::string_view(&upper, 1));
      if (!e || !chem::aromatic_input_allowed(*e))
        throw UnsupportedPrimitive(std::string("aromatic element '") + c +
                                   "' is outside the supported set");
      atoms_.push_back(
          prim(AtomExpr::Prim::Element, static_cast<int>(*e), AtomExpr::Arom::Aromatic));
      ++pos_;
      connect(static_cast<int>(atoms_.size()) - 1);
      return;
    }
    bad(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Pattern compile_pattern(std::string_view text) { return SmartsParser(text).run(); }

bool eval_atom(const AtomExpr& e, const chem::Molecule& mol, int atom) {
  switch (e.op) {
    case AtomExpr::Op::Not:
      return !eval_atom(e.children[0], mol, atom);
    case AtomExpr::Op::And:
      for (const AtomExpr& c : e.children)
        if (!eval_atom(c, mol, atom)) return false;
      return true;
    case AtomExpr::Op::Or:
      for (const AtomExpr& c : e.children)
        if (eval_atom(c, mol, atom)) return true;
      return false;
    case AtomExpr::Op::Primitive:
      break;
  }
  const chem::Atom& a = mol.atom(atom);
  switch (e.prim) {
    case AtomExpr::Prim::Wildcard:
      return true;
    case AtomExpr::Prim::Element:
      if (static_cast<int>(a.element) != e.value) return false;
      if (e.arom == AtomExpr::Arom::Aromatic) return a.aromatic;
      if (e.arom == AtomExpr::Arom::Aliphatic) return !a.aromatic;
      return true;
    case AtomExpr::Prim::AtomicNumber:
      return chem::atomic_number(a.element) == e.value;
    case AtomExpr::Prim::AnyAromatic:
      return a.aromatic;
    case AtomExpr::Prim::AnyAliphatic:
      return !a.aromatic;
    case AtomExpr::Prim::Charge:
      return a.formal_charge == e.value;
    case AtomExpr::Prim::Degree:
      return mol.heavy_degree(atom) == e.value;
    case AtomExpr::Prim::TotalH:
      return a.total_h() == e.value;
    case AtomExpr::Prim::Connectivity:
      return mol.heavy_degree(atom) + a.total_h() == e.value;
    case AtomExpr::Prim::InRing:
      return mol.atom_in_ring(atom);
    case AtomExpr::Prim::RingCount:
      return mol.ring_count_of_atom(atom) == e.value;
  }
  return false;
}

bool eval_bond(const BondExpr& e, const chem::Molecule& mol, int bond) {
  const chem::Bond& b = mol.bond(bond);
  bool aromatic = b.aromatic || b.order == chem::BondOrder::Aromatic;
  if (e.require_ring && !mol.bond_in_ring(bond)) return false;
  switch (e.base) {
    case BondExpr::Base::Any:
      return true;
    case BondExpr::Base::Default:
      return aromatic || b.order == chem::BondOrder::Single;
    case BondExpr::Base::Single:
      return !aromatic && b.order == chem::BondOrder::Single;
    case BondExpr::Base::Double:
      return !aromatic && b.order == chem::BondOrder::Double;
    case BondExpr::Base::Triple:
      return b.order == chem::BondOrder::Triple;
    case BondExpr::Base::Aromatic:
      return aromatic;
  }
  return false;
}

}  // namespace molsight::smarts
