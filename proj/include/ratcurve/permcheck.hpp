#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratcurve/certificates.hpp"

namespace ratcurve {

// i -> images[i] on {0, ..., n-1}; products act on the right: x^(gh) = (x^g)^h.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // "(0 1 2)(3 4)" on n points
  static Permutation from_cycles(const std::string& cycles, int n);

  int degree() const { return int(img_.size()); }
  int operator()(int i) const { return img_[std::size_t(i)]; }
  const std::vector<int>& images() const { return img_; }
  Permutation inverse() const;
  // sigma^-1 g sigma
  Permutation conjugate_by(const Permutation& s) const;
  bool is_identity() const;
  int order() const;
  std::vector<int> fixed_points() const;
  std::string cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements);

  int degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  // sorted
  const std::vector<Permutation>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  bool contains(const Permutation& p) const;
  std::vector<int> orbit(int w) const;
  bool is_transitive() const { return int(orbit(0).size()) == n_; }
  // element sets equal
  friend bool operator==(const PermGroup& a, const PermGroup& b) { return a.elems_ == b.elems_; }

 private:
  int n_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
};

PermGroup closure(const std::vector<Permutation>& gens, std::size_t cap = 100000);
PermGroup stabilizer(const PermGroup& G, int w);
std::vector<std::vector<int>> blocks_through(const PermGroup& G, int w);
std::vector<PermGroup> intermediate_subgroups(const PermGroup& G, int w);
// Exhaustive over perfect matchings up to degree 9; empty above that.
std::vector<Permutation> admissible_involutions(const PermGroup& G);
// The admissible members of a caller-supplied candidate list.
std::vector<Permutation> admissible_involutions(const PermGroup& G, const std::vector<Permutation>& candidates);
bool is_admissible(const PermGroup& G, const Permutation& s);

struct PropositionReport {
  bool ok = true;
  int fixed_point = -1;
  int intermediate_count = 0;
  std::vector<PermGroup> violations;
};

PropositionReport verify_proposition(const PermGroup& G, const Permutation& sigma);

// Named groups: "cyclic:n", "dihedral:n", "frobenius:<order>:<p>", "affine:p",
// "elem-abelian:<p^2>", "wreath:<m>:<k>", "sym:n", "alt:n".
std::vector<Permutation> catalog_generators(const std::string& name);
std::vector<std::string> catalog_group_names(int max_degree);

struct SearchCandidate {
  std::string source;  // catalog name or "random:<index>"
  int degree = 0;
  std::size_t order = 0;
  std::vector<std::string> generators;
  std::string sigma;
  int intermediate = 0;
  bool ok = true;
};

struct SearchReport {
  std::vector<SearchCandidate> candidates;
  long groups_checked = 0;
  long pairs_checked = 0;
  long triples_checked = 0;
  long violations = 0;
  long skipped_over_cap = 0;
};

struct SearchParams {
  int max_degree = 9;
  int group_budget = 40;  // random groups per degree
  std::size_t order_cap = 100000;
  std::uint64_t seed = 1;
  bool catalog_only = false;
  Exec exec = Exec::Parallel;
};

SearchReport search(const SearchParams& params);

}  // namespace ratcurve
