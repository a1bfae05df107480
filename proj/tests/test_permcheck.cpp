#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "ratcurve/error.hpp"
#include "ratcurve/permcheck.hpp"

using namespace ratcurve;

namespace {

PermGroup group(std::initializer_list<const char*> cycles, int n) {
  std::vector<Permutation> g;
  for (const char* c : cycles) g.push_back(Permutation::from_cycles(c, n));
  return closure(g);
}

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

std::vector<int> sorted_orbit(const PermGroup& H, int w) {
  auto o = H.orbit(w);
  std::sort(o.begin(), o.end());
  return o;
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation a = Permutation::from_cycles("(0 1 2)", 3);
  Permutation b = Permutation::from_cycles("(1 2)", 3);
  CHECK((a * b)(0) == b(a(0)));
  CHECK(a.order() == 3);
  CHECK(a.conjugate_by(b) == b.inverse() * a * b);
  CHECK(a.conjugate_by(b) == a.inverse());
  CHECK(Permutation::from_cycles("(0 1)(2 3)", 5).fixed_points() == std::vector<int>{4});
  CHECK(Permutation::from_cycles("(0 2 1)", 3).cycles() == "(0 2 1)");
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), Error);
}

TEST_CASE("closure") {
  CHECK(group({"(0 1 2)"}, 3).order() == 3);
  CHECK(group({"(0 1 2)", "(0 1)"}, 3).order() == 6);
  PermGroup F = closure({Permutation::from_cycles("(0 1 2 3 4 5 6)", 7), Permutation(std::vector<int>{0, 2, 4, 6, 1, 3, 5})});
  CHECK(F.order() == 21);
  CHECK(stabilizer(F, 0).order() == 3);
  CHECK_THROWS_AS(closure(catalog_generators("sym:7"), 100), Error);
}

TEST_CASE("blocks through a point") {
  PermGroup C6 = group({"(0 1 2 3 4 5)"}, 6);
  auto b = blocks_through(C6, 0);
  std::vector<std::vector<int>> want{{0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}};
  CHECK(b == want);
  PermGroup S3 = group({"(0 1 2)", "(0 1)"}, 3);
  CHECK(blocks_through(S3, 0).size() == 2);
}

TEST_CASE("intermediate subgroups") {
  PermGroup S3 = group({"(0 1 2)", "(0 1)"}, 3);
  auto m = intermediate_subgroups(S3, 0);
  CHECK(m.size() == 2);
  CHECK(m.front() == stabilizer(S3, 0));
  CHECK(m.back() == S3);
  PermGroup E9 = closure(catalog_generators("elem-abelian:9"));
  CHECK(E9.order() == 9);
  CHECK(intermediate_subgroups(E9, 0).size() == 6);
}

TEST_CASE("admissible involutions") {
  PermGroup C3 = group({"(0 1 2)"}, 3);
  auto inv = admissible_involutions(C3);
  Permutation s = Permutation::from_cycles("(1 2)", 3);
  CHECK(std::find(inv.begin(), inv.end(), s) != inv.end());
  PermGroup E9 = closure(catalog_generators("elem-abelian:9"));
  // x -> -x on coordinates (a, b) labelled 3a + b
  std::vector<int> neg(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) neg[std::size_t(3 * a + b)] = 3 * ((3 - a) % 3) + (3 - b) % 3;
  Permutation n(neg);
  CHECK(n.fixed_points() == std::vector<int>{0});
  CHECK(is_admissible(E9, n));
  auto r = verify_proposition(E9, n);
  CHECK(r.ok);
  CHECK(r.intermediate_count == 6);
  CHECK_FALSE(is_admissible(C3, Permutation::from_cycles("(0 1 2)", 3)));
  CHECK_FALSE(is_admissible(C3, Permutation::identity(3)));
}

TEST_CASE("proposition on named groups") {
  PermGroup F = closure(catalog_generators("frobenius:21:7"));
  std::vector<int> neg(7);
  for (int x = 0; x < 7; ++x) neg[std::size_t(x)] = (7 - x) % 7;
  CHECK(verify_proposition(F, Permutation(neg)).ok);
  PermGroup C6 = group({"(0 1 2 3 4 5)"}, 6);
  CHECK_THROWS_AS(verify_proposition(C6, Permutation::from_cycles("(1 5)(2 4)", 6)), Error);
  PermGroup C3 = group({"(0 1 2)"}, 3);
  CHECK_THROWS_AS(verify_proposition(C3, Permutation::identity(3)), Error);
}

TEST_CASE("search") {
  SearchParams p;
  p.max_degree = 5;
  p.catalog_only = true;
  SearchReport r = search(p);
  CHECK(r.groups_checked >= 4);
  CHECK(r.violations == 0);
  SearchParams q;
  q.max_degree = 9;
  SearchReport full = search(q);
  CHECK(full.violations == 0);
  CHECK(full.pairs_checked >= 100);
}

TEST_CASE("property: search is deterministic in the seed") {
  SearchParams p;
  p.max_degree = 7;
  p.group_budget = 6;
  p.seed = 99;
  p.exec = Exec::Serial;
  SearchReport a = search(p);
  p.exec = Exec::Parallel;
  SearchReport b = search(p);
  CHECK(a.pairs_checked == b.pairs_checked);
  CHECK(a.triples_checked == b.triples_checked);
  REQUIRE(a.candidates.size() == b.candidates.size());
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    CHECK(a.candidates[i].generators == b.candidates[i].generators);
    CHECK(a.candidates[i].sigma == b.candidates[i].sigma);
  }
}

TEST_CASE("property: blocks and intermediate subgroups correspond") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 30; ++it) {
    int n = 4 + int(rng() % 5);
    std::vector<Permutation> gens{random_perm(n, rng)};
    if (rng() % 2) gens.push_back(random_perm(n, rng));
    PermGroup G = closure(gens);
    if (!G.is_transitive()) continue;
    auto B = blocks_through(G, 0);
    auto M = intermediate_subgroups(G, 0);
    REQUIRE(B.size() == M.size());
    std::set<std::vector<int>> from_m;
    for (const auto& H : M) {
      CHECK(G.order() % H.order() == 0);
      CHECK(H.order() % stabilizer(G, 0).order() == 0);
      from_m.insert(sorted_orbit(H, 0));
    }
    std::set<std::vector<int>> from_b(B.begin(), B.end());
    CHECK(from_m == from_b);
  }
}

TEST_CASE("property: conjugation and parity") {
  std::mt19937_64 rng(8);
  auto parity = [](const Permutation& p) {
    int n = p.degree(), c = 0;
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (seen[std::size_t(i)]) continue;
      ++c;
      for (int j = i; !seen[std::size_t(j)]; j = p(j)) seen[std::size_t(j)] = true;
    }
    return (n - c) % 2;
  };
  for (int it = 0; it < 200; ++it) {
    int n = 2 + int(rng() % 8);
    Permutation a = random_perm(n, rng), b = random_perm(n, rng);
    CHECK(parity(a * b) == (parity(a) + parity(b)) % 2);
    CHECK(a.conjugate_by(b).order() == a.order());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(parity(a.conjugate_by(b)) == parity(a));
  }
}

TEST_CASE("property: proposition holds on random odd-degree groups") {
  std::mt19937_64 rng(12);
  int tested = 0;
  for (int it = 0; it < 60; ++it) {
    int n = (rng() % 2) ? 5 : 7;
    PermGroup G = closure({random_perm(n, rng)});
    if (!G.is_transitive()) continue;
    for (const auto& s : admissible_involutions(G)) {
      CHECK(verify_proposition(G, s).ok);
      ++tested;
    }
  }
  CHECK(tested > 0);
}
