//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include "molsight/chem/element.hpp"

namespace molsight::chem {

namespace {

struct ElementInfo {
  std::string_view sym;
  int z;
  double weight;
};

constexpr std::array<ElementInfo, kElementCount> kInfo{{
    {"B", 5, 10.811},
    {"C", 6, 12.011},
    {"N", 7, 14.007},
    {"O", 8, 15.999},
    {"P", 15, 30.973761998},
    {"S", 16, 32.06},
    {"F", 9, 18.998403163},
    {"Cl", 17, 35.45},
    {"Br", 35, 79.904},
    {"I", 53, 126.90447},
}};

ValenceList list1(int a) { return ValenceList{{a, 0, 0}, 1}; }
ValenceList list2(int a, int b) { return ValenceList{{a, b, 0}, 2}; }
ValenceList list3(int a, int b, int c) { return ValenceList{{a, b, c}, 3}; }

}  // namespace

std::string_view symbol(Element e) { return kInfo[static_cast<int>(e)].sym; }
int atomic_number(Element e) { return kInfo[static_cast<int>(e)].z; }
double atomic_weight(Element e) { return kInfo[static_cast<int>(e)].weight; }

std::optional<Element> element_from_symbol(std::string_view s) {
  for (int i = 0; i < kElementCount; ++i) {
    if (kInfo[i].sym == s) return static_cast<Element>(i);
  }
  return std::nullopt;
}

bool aromatic_input_allowed(Element e) {
  switch (e) {
    case Element::B:
    case Element::C:
    case Element::N:
    case Element::O:
    case Element::P:
    case Element::S:
      return true;
    default:
      return false;
  }
}

ValenceList default_valences(Element e, int charge) {
  switch (e) {
    case Element::B:
      if (charge == 0) return list1(3);
      if (charge == -1) return list1(4);
      return {};
    case Element::C:
      if (charge == 0) return list1(4);
      if (charge == 1 || charge == -1) return list1(3);
      return {};
    case Element::N:
      if (charge == 0) return list1(3);
      if (charge == 1) return list1(4);
      if (charge == -1) return list1(2);
      return {};
    case Element::O:
      if (charge == 0) return list1(2);
      if (charge == 1) return list1(3);
      if (charge == -1) return list1(1);
      return {};
    case Element::P:
      if (charge == 0) return list2(3, 5);
      if (charge == 1) return list1(4);
      return {};
    case Element::S:
      if (charge == 0) return list3(2, 4, 6);
      if (charge == 1) return list2(3, 5);
      if (charge == -1) return list1(1);
      return {};
    case Element::F:
    case Element::Cl:
    case Element::Br:
    case Element::I:
      if (charge == 0) return list1(1);
      if (charge == -1) return list1(0);
      return {};
  }
  return {};
}

std::optional<int> max_valence(Element e, int charge) {
  ValenceList v = default_valences(e, charge);
  if (v.empty()) return std::nullopt;
  return v.max();
}

}  // namespace molsight::chem
