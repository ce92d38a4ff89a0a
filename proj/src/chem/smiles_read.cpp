//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "molsight/chem/perception.hpp"
#include "molsight/chem/smiles.hpp"

namespace molsight::chem {

namespace {

struct PendingBond {
  bool present = false;
  char symbol = 0;  // '-','=','#',':' ; '/' and '\' normalize to '-'
};

struct RingOpening {
  int atom = -1;
  char symbol = 0;
};

bool is_bond_symbol(char c) {
  return c == '-' || c == '=' || c == '#' || c == ':' || c == '/' || c == '\\';
}

char normalize_bond(char c) { return (c == '/' || c == '\\') ? '-' : c; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Molecule run() {
    if (text_.empty()) throw ParseError(ParseError::Kind::BadSyntax, "empty SMILES");
    while (pos_ < text_.size()) {
      step();
    }
    if (!open_parens_.empty())
      throw ParseError(ParseError::Kind::UnbalancedParen, "unclosed '(' in SMILES");
    if (!ring_map_.empty())
      throw ParseError(ParseError::Kind::UnclosedRing,
                       "ring bond digit opened but never closed");
    if (pending_.present)
      throw ParseError(ParseError::Kind::BadSyntax, "dangling bond symbol");
    if (mol_.atom_count() == 0)
      throw ParseError(ParseError::Kind::BadSyntax, "no atoms in SMILES");

    detail::kekulize_flagged(mol_);
    mol_.finalize(true);
    mol_.set_source_text(std::string(text_));
    return std::move(mol_);
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  Molecule mol_;
  int prev_ = -1;
  PendingBond pending_;
  std::vector<int> open_parens_;
  std::map<int, RingOpening> ring_map_;

  [[noreturn]] void bad(const std::string& msg) {
    throw ParseError(ParseError::Kind::BadSyntax, msg + " at position " + std::to_string(pos_));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void step() {
    char c = text_[pos_];
    if (std::isspace(static_cast<unsigned char>(c))) bad("whitespace inside SMILES");
    if (is_bond_symbol(c)) {
      if (pending_.present) bad("two consecutive bond symbols");
      pending_ = PendingBond{true, normalize_bond(c)};
      ++pos_;
      return;
    }
    if (c == '.') {
      if (pending_.present) bad("bond symbol before '.'");
      prev_ = -1;
      ++pos_;
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
      if (pending_.present) bad("bond symbol before ')'");
      prev_ = open_parens_.back();
      open_parens_.pop_back();
      ++pos_;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
      ring_closure();
      return;
    }
    if (c == '[') {
      bracket_atom();
      return;
    }
    organic_atom();
  }

  void add_atom_and_connect(Atom atom) {
    int idx = mol_.add_atom(atom);
    if (prev_ >= 0) {
      mol_.add_bond(prev_, idx, resolve_order(pending_, prev_, idx));
    }
    pending_ = {};
    prev_ = idx;
  }

  BondOrder resolve_order(const PendingBond& pb, int a, int b) const {
    if (pb.present) {
      switch (pb.symbol) {
        case '-': return BondOrder::Single;
        case '=': return BondOrder::Double;
        case '#': return BondOrder::Triple;
        case ':': return BondOrder::Aromatic;  // kekulized before finalize
      }
    }
    // default: tentatively aromatic between two aromatic atoms
    if (mol_.atom(a).aromatic && mol_.atom(b).aromatic) return BondOrder::Aromatic;
    return BondOrder::Single;
  }

  void ring_closure() {
    int digit;
    if (text_[pos_] == '%') {
      if (pos_ + 2 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2])))
        bad("'%' ring closure needs two digits");
      digit = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
      pos_ += 3;
    } else {
      digit = text_[pos_] - '0';
      ++pos_;
    }
    if (prev_ < 0) bad("ring closure with no preceding atom");
    char symbol = pending_.present ? pending_.symbol : 0;
    pending_ = {};

    auto it = ring_map_.find(digit);
    if (it == ring_map_.end()) {
      ring_map_[digit] = RingOpening{prev_, symbol};
      return;
    }
    RingOpening open = it->second;
    ring_map_.erase(it);
    if (open.atom == prev_) bad("ring closure to same atom");
    char sym = 0;
    if (open.symbol && symbol && open.symbol != symbol)
      bad("conflicting ring-closure bond symbols");
    sym = open.symbol ? open.symbol : symbol;
    PendingBond pb{sym != 0, sym};
    mol_.add_bond(open.atom, prev_, resolve_order(pb, open.atom, prev_));
  }

  void organic_atom() {
    char c = text_[pos_];
    Atom atom;
    // two-letter symbols first
    if (c == 'C' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'l') {
      atom.element = Element::Cl;
      pos_ += 2;
    } else if (c == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'r') {
      atom.element = Element::Br;
      pos_ += 2;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      auto e = element_from_symbol(std::string_view(&text_[pos_], 1));
      if (!e)
        throw ParseError(ParseError::Kind::UnknownElement,
                         std::string("unknown element '") + c + "'");
      atom.element = *e;
      ++pos_;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto e = element_from_symbol(std::string_view(&upper, 1));
      if (!e || !aromatic_input_allowed(*e))
        throw ParseError(ParseError::Kind::UnknownElement,
                         std::string("unknown aromatic element '") + c + "'");
      atom.element = *e;
      atom.aromatic = true;
      ++pos_;
    } else {
      bad(std::string("unexpected character '") + c + "'");
    }
    add_atom_and_connect(atom);
  }

  void bracket_atom() {
    ++pos_;  // consume '['
    Atom atom;
    // isotope (discarded)
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) bad("unterminated bracket atom");

    char c = text_[pos_];
    if (std::isupper(static_cast<unsigned char>(c))) {
      size_t len = 1;
      // a lowercase letter after the symbol can only extend the element name
      if (pos_ + 1 < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_ + 1])))
        len = 2;
      auto e = element_from_symbol(text_.substr(pos_, len));
      if (!e)
        throw ParseError(ParseError::Kind::UnknownElement,
                         "unknown element '" + std::string(text_.substr(pos_, len)) + "'");
      atom.element = *e;
      pos_ += len;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto e = element_from_symbol(std::string_view(&upper, 1));
      if (!e || !aromatic_input_allowed(*e))
        throw ParseError(ParseError::Kind::UnknownElement,
                         std::string("unknown aromatic element '") + c + "'");
      atom.element = *e;
      atom.aromatic = true;
      ++pos_;
    } else {
      throw ParseError(ParseError::Kind::UnknownElement,
                       std::string("unsupported bracket atom '") + c + "'");
    }

    // chirality (discarded)
    if (peek() == '@') {
      ++pos_;
      if (peek() == '@') ++pos_;
    }
    // explicit hydrogen count
    atom.explicit_h = 0;
    if (peek() == 'H') {
      ++pos_;
      int h = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        h = peek() - '0';
        ++pos_;
      }
      atom.explicit_h = static_cast<std::int8_t>(h);
    }
    // charge
    if (peek() == '+' || peek() == '-') {
      int sign = peek() == '+' ? 1 : -1;
      char sc = peek();
      ++pos_;
      int mag = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        mag = peek() - '0';
        ++pos_;
      } else {
        while (peek() == sc) {
          ++mag;
          ++pos_;
        }
      }
      atom.formal_charge = static_cast<std::int8_t>(sign * mag);
    }
    // atom class (discarded)
    if (peek() == ':') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) bad("atom class needs digits");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (peek() != ']') bad("expected ']'");
    ++pos_;
    add_atom_and_connect(atom);
  }
};

}  // namespace

Molecule parse_smiles(std::string_view text) {
  // trim surrounding whitespace
  size_t b = text.find_first_not_of(" \t\r\n");
  size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    throw ParseError(ParseError::Kind::BadSyntax, "empty SMILES");
  return Parser(text.substr(b, e - b + 1)).run();
}

}  // namespace molsight::chem
