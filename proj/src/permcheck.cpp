#include "ratcurve/permcheck.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ratcurve/error.hpp"

namespace ratcurve {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= int(img_.size()) || seen[std::size_t(v)])
      throw Error(ErrorKind::InvalidArgument, "images do not form a permutation");
    seen[std::size_t(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(const std::string& cycles, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::size_t i = 0;
  while (i < cycles.size()) {
    if (std::isspace(static_cast<unsigned char>(cycles[i]))) {
      ++i;
      continue;
    }
    if (cycles[i] != '(') throw Error(ErrorKind::ParseError, "expected '(' in cycle notation: " + cycles);
    std::size_t j = cycles.find(')', i);
    if (j == std::string::npos) throw Error(ErrorKind::ParseError, "unclosed cycle: " + cycles);
    std::string body = cycles.substr(i + 1, j - i - 1);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream is(body);
    std::vector<int> cyc;
    int v;
    while (is >> v) cyc.push_back(v);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a < 0 || a >= n || b < 0 || b >= n) throw Error(ErrorKind::InvalidArgument, "cycle point out of range");
      img[std::size_t(a)] = b;
    }
    i = j + 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[std::size_t(img_[i])] = int(i);
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::InvalidArgument, "permutations of different degrees");
  std::vector<int> v(a.img_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.img_[std::size_t(a.img_[i])];
  Permutation r = Permutation::identity(0);
  r.img_ = std::move(v);
  return r;
}

Permutation Permutation::conjugate_by(const Permutation& s) const { return s.inverse() * *this * s; }

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != int(i)) return false;
  return true;
}

int Permutation::order() const {
  int o = 1;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = std::size_t(img_[j])) {
      seen[j] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] == int(i)) out.push_back(int(i));
  return out;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == int(i)) continue;
    out += "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = std::size_t(img_[j])) {
      seen[j] = 1;
      out += (first ? "" : " ") + std::to_string(j);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
    : n_(degree), gens_(std::move(generators)), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
}

bool PermGroup::contains(const Permutation& p) const { return std::binary_search(elems_.begin(), elems_.end(), p); }

std::vector<int> PermGroup::orbit(int w) const {
  std::vector<char> seen(std::size_t(n_), 0);
  std::vector<int> out{w};
  seen[std::size_t(w)] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens_) {
      int v = g(out[k]);
      if (!seen[std::size_t(v)]) {
        seen[std::size_t(v)] = 1;
        out.push_back(v);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string key(const Permutation& p) {
  std::string s;
  s.reserve(p.images().size());
  for (int v : p.images()) s.push_back(char(v));
  return s;
}

}  // namespace

PermGroup closure(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "closure needs at least one generator");
  if (cap < 1) throw Error(ErrorKind::InvalidArgument, "cap must be positive");
  const int n = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw Error(ErrorKind::InvalidArgument, "generators of different degrees");
  std::unordered_set<std::string> seen;
  std::vector<Permutation> elems{Permutation::identity(n)};
  seen.insert(key(elems[0]));
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Permutation p = elems[k] * g;
      if (seen.insert(key(p)).second) {
        elems.push_back(std::move(p));
        if (elems.size() > cap)
          throw Error(ErrorKind::CapExceeded, "group order exceeds the cap of " + std::to_string(cap));
      }
    }
  return PermGroup(n, gens, std::move(elems));
}

PermGroup stabilizer(const PermGroup& G, int w) {
  std::vector<Permutation> el;
  for (const auto& g : G.elements())
    if (g(w) == w) el.push_back(g);
  if (G.order() != el.size() * G.orbit(w).size()) throw Error(ErrorKind::Internal, "orbit-stabilizer failed");
  // a small generating set, greedily
  std::vector<Permutation> gens;
  std::vector<Permutation> H{Permutation::identity(G.degree())};
  for (const auto& g : el) {
    if (std::binary_search(H.begin(), H.end(), g)) continue;
    gens.push_back(g);
    H = closure(gens, el.size()).elements();
  }
  if (gens.empty()) gens.push_back(Permutation::identity(G.degree()));
  return PermGroup(G.degree(), gens, el);
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(std::size_t(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[std::size_t(x)] != x) x = p[std::size_t(x)] = p[std::size_t(p[std::size_t(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::size_t(b)] = a;
    return true;
  }
};

// The smallest block containing the given points (all merged with w).
std::vector<int> minimal_block(const PermGroup& G, int w, const std::vector<int>& pts) {
  UnionFind uf(G.degree());
  std::deque<std::pair<int, int>> q;
  for (int s : pts)
    if (uf.unite(w, s)) q.emplace_back(w, s);
  while (!q.empty()) {
    auto [a, b] = q.front();
    q.pop_front();
    for (const auto& g : G.generators()) {
      int x = uf.find(g(a)), y = uf.find(g(b));
      if (x != y) {
        uf.unite(x, y);
        q.emplace_back(x, y);
      }
    }
  }
  std::vector<int> out;
  int r = uf.find(w);
  for (int i = 0; i < G.degree(); ++i)
    if (uf.find(i) == r) out.push_back(i);
  return out;
}

bool is_block(const PermGroup& G, const std::vector<int>& D) {
  std::vector<char> in(std::size_t(G.degree()), 0);
  for (int v : D) in[std::size_t(v)] = 1;
  for (const auto& g : G.elements()) {
    std::size_t hit = 0;
    for (int v : D) hit += in[std::size_t(g(v))];
    if (hit != 0 && hit != D.size()) return false;
  }
  return true;
}

void require_transitive(const PermGroup& G) {
  if (!G.is_transitive()) throw Error(ErrorKind::NotTransitive, "group is not transitive");
}

}  // namespace

std::vector<std::vector<int>> blocks_through(const PermGroup& G, int w) {
  require_transitive(G);
  std::set<std::vector<int>> found{{w}};
  std::vector<std::vector<int>> frontier;
  for (int a = 0; a < G.degree(); ++a) {
    if (a == w) continue;
    auto B = minimal_block(G, w, {a});
    if (found.insert(B).second) frontier.push_back(B);
  }
  // joins of blocks are blocks; every block is a join of minimal ones
  std::vector<std::vector<int>> all(frontier);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& X : frontier)
      for (std::size_t k = 0; k < all.size(); ++k) {
        std::vector<int> u;
        std::set_union(X.begin(), X.end(), all[k].begin(), all[k].end(), std::back_inserter(u));
        auto B = minimal_block(G, w, u);
        if (found.insert(B).second) next.push_back(B);
      }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& B : out) {
    if (G.degree() % int(B.size()) != 0 || !is_block(G, B))
      throw Error(ErrorKind::Internal, "block computation produced a non-block");
  }
  return out;
}

std::vector<PermGroup> intermediate_subgroups(const PermGroup& G, int w) {
  require_transitive(G);
  std::vector<PermGroup> out;
  PermGroup Gw = stabilizer(G, w);
  for (const auto& D : blocks_through(G, w)) {
    std::vector<char> in(std::size_t(G.degree()), 0);
    for (int v : D) in[std::size_t(v)] = 1;
    std::vector<Permutation> M, S;
    for (const auto& g : G.elements()) {
      if (in[std::size_t(g(w))]) M.push_back(g);
      bool stable = true;
      for (int v : D) stable = stable && in[std::size_t(g(v))];
      if (stable) S.push_back(g);
    }
    if (M != S) throw Error(ErrorKind::Internal, "point preimage of a block differs from its setwise stabilizer");
    if (M.size() != Gw.order() * D.size()) throw Error(ErrorKind::Internal, "intermediate subgroup has the wrong order");
    for (const auto& h : Gw.elements())
      if (!std::binary_search(M.begin(), M.end(), h)) throw Error(ErrorKind::Internal, "stabilizer not contained in M");
    std::vector<Permutation> gens;
    std::vector<Permutation> H{Permutation::identity(G.degree())};
    for (const auto& g : M) {
      if (std::binary_search(H.begin(), H.end(), g)) continue;
      gens.push_back(g);
      H = closure(gens, M.size()).elements();
    }
    if (gens.empty()) gens.push_back(Permutation::identity(G.degree()));
    PermGroup Mg(G.degree(), gens, M);
    // omega^M recovers the block
    std::vector<int> orb;
    for (const auto& g : Mg.elements()) orb.push_back(g(w));
    std::sort(orb.begin(), orb.end());
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    if (orb != D) throw Error(ErrorKind::Internal, "block bijection failed");
    out.push_back(std::move(Mg));
  }
  return out;
}

bool is_admissible(const PermGroup& G, const Permutation& s) {
  if (s.degree() != G.degree()) return false;
  if (!(s * s).is_identity() || s.is_identity()) return false;
  if (s.fixed_points().size() != 1) return false;
  for (const auto& g : G.generators())
    if (!G.contains(g.conjugate_by(s))) return false;
  return true;
}

std::vector<Permutation> admissible_involutions(const PermGroup& G) {
  const int n = G.degree();
  if (n % 2 == 0) throw Error(ErrorKind::DegreeEven, "degree must be odd");
  std::vector<Permutation> out;
  if (n == 1) return out;
  if (n > 9) return out;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& rest) {
    if (rest.empty()) {
      Permutation s(img);
      if (is_admissible(G, s)) out.push_back(s);
      return;
    }
    int a = rest[0];
    for (std::size_t k = 1; k < rest.size(); ++k) {
      int b = rest[k];
      img[std::size_t(a)] = b;
      img[std::size_t(b)] = a;
      std::vector<int> r2;
      for (std::size_t m = 1; m < rest.size(); ++m)
        if (m != k) r2.push_back(rest[m]);
      rec(r2);
    }
  };
  for (int f = 0; f < n; ++f) {
    img[std::size_t(f)] = f;
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != f) rest.push_back(i);
    rec(rest);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct PointData {
  PermGroup Gw;
  std::vector<PermGroup> Ms;
};

PropositionReport check_against(const PointData& D, const Permutation& sigma, int w) {
  PropositionReport rep;
  rep.fixed_point = w;
  auto stable = [&](const PermGroup& M) {
    for (const auto& m : M.generators())
      if (!M.contains(m.conjugate_by(sigma))) return false;
    return true;
  };
  if (!stable(D.Gw)) throw Error(ErrorKind::Internal, "stabilizer of the fixed point is not sigma-stable");
  rep.intermediate_count = int(D.Ms.size());
  for (const auto& M : D.Ms) {
    if (!stable(M)) {
      rep.ok = false;
      rep.violations.push_back(M);
    }
  }
  return rep;
}

}  // namespace

std::vector<Permutation> admissible_involutions(const PermGroup& G, const std::vector<Permutation>& candidates) {
  if (G.degree() % 2 == 0) throw Error(ErrorKind::DegreeEven, "degree must be odd");
  std::vector<Permutation> out;
  for (const auto& s : candidates)
    if (is_admissible(G, s)) out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PropositionReport verify_proposition(const PermGroup& G, const Permutation& sigma) {
  if (G.degree() % 2 == 0) throw Error(ErrorKind::DegreeEven, "degree must be odd");
  if (!is_admissible(G, sigma)) throw Error(ErrorKind::InvalidSigma, "sigma is not an admissible involution");
  require_transitive(G);
  const int w = sigma.fixed_points()[0];
  return check_against({stabilizer(G, w), intermediate_subgroups(G, w)}, sigma, w);
}

namespace {

int mod(long a, long n) { return int(((a % n) + n) % n); }

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      throw Error(ErrorKind::ParseError, "bad group parameter '" + tok + "'");
    }
  }
  return out;
}

Permutation affine_map(int p, int a, int b) {
  std::vector<int> v(static_cast<std::size_t>(p));
  for (int x = 0; x < p; ++x) v[std::size_t(x)] = mod(long(a) * x + b, p);
  return Permutation(v);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int element_of_order(int k, int p) {
  for (int a = 1; a < p; ++a) {
    int o = 1;
    long x = a;
    while (x != 1) {
      x = x * a % p;
      ++o;
    }
    if (o == k) return a;
  }
  throw Error(ErrorKind::InvalidArgument, "no element of order " + std::to_string(k) + " mod " + std::to_string(p));
}

}  // namespace

std::vector<Permutation> catalog_generators(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::InvalidArgument, "unknown group '" + name + "'");
  std::string kind = name.substr(0, colon);
  std::vector<int> a = parse_ints(name.substr(colon + 1));
  auto need = [&](std::size_t k) {
    if (a.size() != k) throw Error(ErrorKind::InvalidArgument, "wrong parameter count in '" + name + "'");
  };
  if (kind == "cyclic") {
    need(1);
    return {affine_map(a[0], 1, 1)};
  }
  if (kind == "dihedral") {
    need(1);
    return {affine_map(a[0], 1, 1), affine_map(a[0], -1, 0)};
  }
  if (kind == "affine") {
    need(1);
    if (!is_prime(a[0])) throw Error(ErrorKind::InvalidArgument, "affine groups need a prime");
    return {affine_map(a[0], 1, 1), affine_map(a[0], element_of_order(a[0] - 1, a[0]), 0)};
  }
  if (kind == "frobenius") {
    need(2);
    int p = a[1];
    if (!is_prime(p) || a[0] % p != 0 || (p - 1) % (a[0] / p) != 0)
      throw Error(ErrorKind::InvalidArgument, "frobenius:<order>:<p> needs order = p k with k | p - 1");
    return {affine_map(p, 1, 1), affine_map(p, element_of_order(a[0] / p, p), 0)};
  }
  if (kind == "elem-abelian") {
    need(1);
    int n = a[0];
    int p = 2;
    while (p * p < n) ++p;
    if (p * p != n || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, "elem-abelian needs p^2");
    // point x + p y
    std::vector<int> u(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) {
        u[std::size_t(x + p * y)] = mod(x + 1, p) + p * y;
        v[std::size_t(x + p * y)] = x + p * mod(y + 1, p);
      }
    return {Permutation(u), Permutation(v)};
  }
  if (kind == "wreath") {
    need(2);
    // S_k wr S_m on m blocks of size k: point b k + i
    int m = a[0], k = a[1], n = m * k;
    std::vector<Permutation> gens;
    auto make = [&](auto f) {
      std::vector<int> v(static_cast<std::size_t>(n));
      for (int b = 0; b < m; ++b)
        for (int i = 0; i < k; ++i) {
          auto [b2, i2] = f(b, i);
          v[std::size_t(b * k + i)] = b2 * k + i2;
        }
      return Permutation(v);
    };
    gens.push_back(make([&](int b, int i) { return std::pair{b, b == 0 ? (i + 1) % k : i}; }));
    if (k > 2) gens.push_back(make([&](int b, int i) { return std::pair{b, b == 0 && i < 2 ? 1 - i : i}; }));
    gens.push_back(make([&](int b, int i) { return std::pair{(b + 1) % m, i}; }));
    if (m > 2) gens.push_back(make([&](int b, int i) { return std::pair{b < 2 ? 1 - b : b, i}; }));
    return gens;
  }
  if (kind == "sym" || kind == "alt") {
    need(1);
    int n = a[0];
    std::vector<int> c(static_cast<std::size_t>(n));
    std::iota(c.begin(), c.end(), 0);
    if (kind == "sym") {
      std::rotate(c.begin(), c.begin() + 1, c.end());
      std::vector<int> t(static_cast<std::size_t>(n));
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[0], t[1]);
      return {Permutation(c), Permutation(t)};
    }
    // A_n: 3-cycles (0 1 i)
    std::vector<Permutation> gens;
    for (int i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles("(0 1 " + std::to_string(i) + ")", n));
    return gens;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown group '" + name + "'");
}

std::vector<std::string> catalog_group_names(int max_degree) {
  std::vector<std::string> out;
  for (int n = 3; n <= max_degree; n += 2) {
    std::string d = std::to_string(n);
    out.push_back("cyclic:" + d);
    out.push_back("dihedral:" + d);
    if (is_prime(n)) {
      out.push_back("affine:" + d);
      for (int k = 2; k < n - 1; ++k)
        if ((n - 1) % k == 0) out.push_back("frobenius:" + std::to_string(n * k) + ":" + d);
    }
    int p = 2;
    while (p * p < n) ++p;
    if (p * p == n && is_prime(p)) {
      out.push_back("elem-abelian:" + d);
      out.push_back("wreath:" + std::to_string(p) + ":" + std::to_string(p));
    }
    if (n <= 7) {
      out.push_back("sym:" + d);
      out.push_back("alt:" + d);
    }
  }
  return out;
}

namespace {

struct Task {
  std::string source;
  std::vector<Permutation> gens;
};

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

// Ambient groups for random subgroups of degree 9.
std::vector<std::vector<Permutation>> ambient9() {
  std::vector<std::vector<Permutation>> out;
  out.push_back(catalog_generators("wreath:3:3"));
  // AGL(2, 3) on x + 3 y
  auto lin = [](int a, int b, int c, int d) {
    std::vector<int> v(9);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) v[std::size_t(x + 3 * y)] = mod(a * x + b * y, 3) + 3 * mod(c * x + d * y, 3);
    return Permutation(v);
  };
  auto gens = catalog_generators("elem-abelian:9");
  gens.push_back(lin(1, 1, 0, 1));
  gens.push_back(lin(0, 1, 2, 0));
  out.push_back(gens);
  return out;
}

}  // namespace

SearchReport search(const SearchParams& P) {
  if (P.max_degree < 3 || P.max_degree % 2 == 0) throw Error(ErrorKind::InvalidArgument, "max_degree must be odd and >= 3");
  std::mt19937_64 rng(P.seed);
  std::vector<Task> tasks;
  for (const auto& name : catalog_group_names(P.max_degree)) tasks.push_back({name, catalog_generators(name)});
  if (!P.catalog_only) {
    for (int n = 3; n <= std::min(P.max_degree, 9); n += 2) {
      std::vector<std::vector<Permutation>> ambient;
      if (n <= 7) ambient.push_back(catalog_generators("sym:" + std::to_string(n)));
      else ambient = ambient9();
      std::vector<std::vector<Permutation>> amb_elems;
      for (const auto& a : ambient) amb_elems.push_back(closure(a, P.order_cap).elements());
      for (int k = 0; k < P.group_budget; ++k) {
        const auto& pool = amb_elems[std::size_t(k) % amb_elems.size()];
        int ngens = 1 + int(rng() % 2);
        std::vector<Permutation> gens;
        for (int i = 0; i < ngens; ++i) gens.push_back(pool[std::size_t(rng() % pool.size())]);
        Permutation relabel = random_perm(n, rng);
        for (auto& g : gens) g = g.conjugate_by(relabel);
        tasks.push_back({"random:" + std::to_string(n) + ":" + std::to_string(k), gens});
      }
    }
  }

  struct Result {
    std::vector<SearchCandidate> cands;
    bool over_cap = false;
    bool transitive = false;
    long triples = 0;
  };
  std::vector<Result> results(tasks.size());
  auto run = [&](std::size_t t) {
    Result& r = results[t];
    PermGroup G = [&] {
      try {
        return closure(tasks[t].gens, P.order_cap);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded) throw;
        r.over_cap = true;
        return PermGroup(tasks[t].gens[0].degree(), {}, {});
      }
    }();
    if (r.over_cap || !G.is_transitive()) return;
    r.transitive = true;
    std::vector<std::string> gens;
    for (const auto& g : G.generators()) gens.push_back(g.cycles());
    std::vector<std::optional<PointData>> cache(static_cast<std::size_t>(G.degree()));
    std::vector<Permutation> sigmas = G.degree() <= 9 ? admissible_involutions(G)
                                                      : admissible_involutions(G, {affine_map(G.degree(), -1, 0)});
    for (const auto& s : sigmas) {
      const int w = s.fixed_points()[0];
      auto& D = cache[std::size_t(w)];
      if (!D) D = PointData{stabilizer(G, w), intermediate_subgroups(G, w)};
      PropositionReport rep = check_against(*D, s, w);
      r.triples += rep.intermediate_count;
      r.cands.push_back({tasks[t].source, G.degree(), G.order(), gens, s.cycles(), rep.intermediate_count, rep.ok});
    }
  };
  const long nt = long(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  auto guarded = [&](std::size_t t) {
    try {
      run(t);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (P.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long t = 0; t < nt; ++t) guarded(std::size_t(t));
  } else {
    for (long t = 0; t < nt; ++t) guarded(std::size_t(t));
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  SearchReport rep;
  for (auto& r : results) {
    if (r.over_cap) ++rep.skipped_over_cap;
    if (!r.transitive) continue;
    ++rep.groups_checked;
    rep.triples_checked += r.triples;
    for (auto& c : r.cands) {
      ++rep.pairs_checked;
      if (!c.ok) ++rep.violations;
      rep.candidates.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace ratcurve
