#pragma once

// Self-describing key-value input documents for the CLI: a representation
// spec (l, f, e, shape, characters as exponent vectors) or a group spec
// (field, generators as row-major matrices with polynomial-coefficient
// entries, or a named standard group).

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "serre/matgroup.hpp"
#include "serre/weights.hpp"

namespace serre {

struct RepSpec {
  i64 l = 0;
  int f = 0;
  i64 e = 0;
  std::string shape;         // "irreducible" | "split" | "nonsplit"
  std::vector<i64> psi;      // 2f exponents (irreducible)
  std::vector<i64> chi1;     // f exponents (split / nonsplit sub)
  std::vector<i64> chi2;     // f exponents (split / nonsplit quotient)

  LocalModRep to_rep() const;
  std::string emit() const;
  bool operator==(const RepSpec&) const = default;
};

struct GroupSpec {
  std::string named;  // empty unless a named standard group
  int n = 0;
  i64 l = 0;
  int m = 0;
  // each generator: n*n entries row-major, each entry m coefficients
  std::vector<std::vector<i64>> generators;

  MatGroup to_group(i64 cap = kDefaultGroupCap) const;
  std::string emit() const;
  bool operator==(const GroupSpec&) const = default;
};

RepSpec parse_rep_spec(std::istream& in);
GroupSpec parse_group_spec(std::istream& in);
RepSpec parse_rep_spec_file(const std::string& path);
GroupSpec parse_group_spec_file(const std::string& path);

// comma- or space-separated integer list, e.g. "6,0,1,0"
std::vector<i64> parse_int_list(const std::string& text);

// weight from 2f integers a_{0,1}, a_{0,2}, a_{1,1}, ...
SerreWeight weight_from_flat(i64 l, int f, const std::vector<i64>& flat);

}  // namespace serre
