//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace molsight {

inline constexpr std::string_view kVersion = "0.1.0";

/// Base class for every typed error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// chem-core
class ParseError : public Error {
 public:
  enum class Kind { UnclosedRing, UnbalancedParen, UnknownElement, BadSyntax };
  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ValenceError : public Error {
 public:
  ValenceError(int atom, const std::string& what) : Error(what), atom_(atom) {}
  int atom() const { return atom_; }

 private:
  int atom_;
};

class KekulizationError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// smarts-match
class UnsupportedPrimitive : public Error {
 public:
  using Error::Error;
};

// descriptors / corpora
class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

// numkit
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class SingleClass : public Error {
 public:
  using Error::Error;
};

class NonFiniteLoss : public Error {
 public:
  using Error::Error;
};

class MissingCache : public Error {
 public:
  using Error::Error;
};

class NonFiniteGradient : public Error {
 public:
  using Error::Error;
};

// attribution
class EmptyMolecule : public Error {
 public:
  using Error::Error;
};

class RuleNotApplicable : public Error {
 public:
  using Error::Error;
};

class RewiringImpossible : public Error {
 public:
  using Error::Error;
};

// harness
class SpecInvalid : public Error {
 public:
  using Error::Error;
};

/// FNV-1a 64-bit hash, used for config hashes and seed derivation.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace molsight
