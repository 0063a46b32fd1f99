#include "doctest.h"
#include "support.hpp"

using namespace vstr;
using namespace testing_support;

namespace {

// nu by walking each arc point by point
FormalSum oracle_nu(const VirtualString& s, Normalizer& norm) {
  const int N = s.length(), m = s.rank();
  FormalSum out(true, norm.caps());
  auto arc = [&](int from, int to) {
    std::vector<int> hits(m, 0);
    for (int p = (from + 1) % N; p != to; p = (p + 1) % N) ++hits[s.at(p).arrow];
    std::vector<bool> keep(m);
    for (int f = 0; f < m; ++f) keep[f] = hits[f] == 2;
    return norm.key(substring(s, keep));
  };
  for (int e = 0; e < m; ++e) {
    auto k1 = arc(s.tail(e), s.head(e)), k2 = arc(s.head(e), s.tail(e));
    out.add({k1, k2}, 1);
    out.add({k2, k1}, -1);
  }
  return out;
}

VirtualString cobracket_example(int p, int q, int pp, int qq) {
  const int m = p + q + pp + qq + 1;
  std::vector<int> sg(m);
  for (int i = 1; i <= m; ++i) {
    if (i <= p) sg[i - 1] = i + q;
    else if (i <= p + q) sg[i - 1] = i - p;
    else if (i == p + q + 1) sg[i - 1] = i;
    else if (i <= p + q + 1 + pp) sg[i - 1] = i + qq;
    else sg[i - 1] = i - pp;
  }
  return family_perm(sg);
}

std::vector<std::pair<int, int>> prufer_tree(const std::vector<int>& code, int n) {
  std::vector<int> deg(n, 1);
  for (int x : code) ++deg[x];
  std::vector<std::pair<int, int>> edges;
  for (int x : code)
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) {
        edges.push_back({v, x});
        --deg[v];
        --deg[x];
        break;
      }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) {
      if (a < 0) a = v;
      else edges.push_back({a, v});
    }
  return edges;
}

// all oriented trees on n labeled vertices
std::vector<OrientedTree> all_trees(int n) {
  std::vector<OrientedTree> out;
  if (n == 1) return {OrientedTree{1, {}}};
  std::vector<int> code(n - 2, 0);
  for (;;) {
    auto und = prufer_tree(code, n);
    for (unsigned o = 0; o < (1u << (n - 1)); ++o) {
      OrientedTree t{n, {}};
      for (int i = 0; i < n - 1; ++i) t.edges.push_back(o >> i & 1 ? und[i] : std::make_pair(und[i].second, und[i].first));
      out.push_back(t);
    }
    int i = 0;
    while (i < n - 2 && code[i] == n - 1) code[i++] = 0;
    if (i == n - 2) break;
    ++code[i];
  }
  return out;
}

// merge vertex b into a, dropping edge index skip
OrientedTree merge(const OrientedTree& t, int a, int b, int skip) {
  OrientedTree u{t.vertices - 1, {}};
  auto rl = [&](int v) {
    if (v == b) v = a;
    return v > b ? v - 1 : v;
  };
  for (int i = 0; i < static_cast<int>(t.edges.size()); ++i)
    if (i != skip) u.edges.push_back({rl(t.edges[i].first), rl(t.edges[i].second)});
  return u;
}

}  // namespace

TEST_SUITE("lie") {
  TEST_CASE("cobracket of the family vanishes") {
    Normalizer norm;
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q) CHECK(cobracket(family_pq(p, q), norm).is_zero());
  }

  TEST_CASE("cobracket of the rank 7 permutation string") {
    Normalizer norm;
    const auto a12 = norm.key(family_pq(1, 2)), a21 = norm.key(family_pq(2, 1));
    FormalSum expect(true, norm.caps());
    expect.add({a12, a21}, 1);
    expect.add({a21, a12}, -1);
    CHECK(cobracket(family_perm({2, 3, 1, 4, 7, 5, 6}), norm) == expect);
  }

  TEST_CASE("cobracket of the two-block family") {
    Normalizer norm;
    for (auto [p, q, pp, qq] : std::vector<std::array<int, 4>>{{1, 2, 2, 1}, {1, 2, 1, 3}, {2, 2, 1, 2}, {1, 3, 3, 1}}) {
      CAPTURE(p);
      CAPTURE(q);
      CAPTURE(pp);
      CAPTURE(qq);
      const auto s = cobracket_example(p, q, pp, qq);
      FormalSum expect(true, norm.caps());
      expect.add({norm.key(family_pq(pp, qq)), norm.key(family_pq(p, q))}, 1);
      expect.add({norm.key(family_pq(p, q)), norm.key(family_pq(pp, qq))}, -1);
      CHECK(cobracket(s, norm) == expect);
      CHECK(cojacobi_check(s, norm).ok());
    }
  }

  TEST_CASE("low rank strings have zero cobracket") {
    std::mt19937_64 rng(41);
    Normalizer norm;
    for (int it = 0; it < 60; ++it) CHECK(cobracket(random_string(rnd(rng, 0, 6), rng), norm).is_zero());
  }

  TEST_CASE("cobracket matches the arc walk, antisymmetric") {
    std::mt19937_64 rng(42);
    Normalizer norm;
    for (int it = 0; it < 40; ++it) {
      const auto s = random_string(rnd(rng, 7, 8), rng);
      const auto nu = cobracket(s, norm);
      CHECK(nu == oracle_nu(s, norm));
      CHECK(nu.permuted({1, 0}) == nu * Rational(-1));
    }
  }

  TEST_CASE("cobracket is move invariant") {
    std::mt19937_64 rng(43);
    Normalizer norm;
    int checked = 0;
    for (int it = 0; it < 6; ++it) {
      const auto s = random_string(7, rng);
      const auto nu = cobracket(s, norm);
      for (const auto& mv : enumerate_moves(s, 7)) {
        CHECK(cobracket(apply_move(s, mv), norm) == nu);
        if (++checked % 40 == 0) break;
      }
    }
    CHECK(checked > 0);
  }

  TEST_CASE("co-Jacobi on random strings") {
    std::mt19937_64 rng(44);
    Normalizer norm;
    for (int it = 0; it < 25; ++it) {
      const auto s = random_string(rnd(rng, 1, 8), rng);
      CHECK(cojacobi_check(s, norm).ok());
    }
  }

  TEST_CASE("iterated cobracket vanishes at rank <= n") {
    std::mt19937_64 rng(45);
    Normalizer norm;
    for (int n = 1; n <= 3; ++n)
      for (int it = 0; it < 10; ++it) CHECK(iterated_cobracket(random_string(rnd(rng, 0, n), rng), n, norm).is_zero());
  }

  TEST_CASE("comodule and closure") {
    Normalizer norm;
    CHECK(comodule_rho(OpenString(), norm).is_zero());
    std::mt19937_64 rng(46);
    for (int it = 0; it < 10; ++it) CHECK(comodule_rho(random_open(rnd(rng, 1, 2), rng), norm).is_zero());
    for (int it = 0; it < 30; ++it) {
      const auto mu = random_open(rnd(rng, 0, 8), rng);
      const auto r = close_second(comodule_rho(mu, norm), norm);
      CHECK(r - r.permuted({1, 0}) == cobracket(closure(mu), norm));
    }
  }

  TEST_CASE("surgery along special sets") {
    const auto s = family_pq(2, 1);
    auto res = surgery_special(s, {});
    REQUIRE(res.strings.size() == 1);
    CHECK(canonicalize(res.strings[0]) == canonicalize(s));
    CHECK(res.tree.vertices == 1);

    std::mt19937_64 rng(47);
    for (int it = 0; it < 60; ++it) {
      const auto w = random_string(rnd(rng, 1, 7), rng);
      std::vector<int> F;
      for (int e = 0; e < w.rank(); ++e)
        if (rng() & 1) F.push_back(e);
      if (!is_special(w, F)) {
        CHECK_THROWS_AS(surgery_special(w, F), PreconditionError);
        continue;
      }
      res = surgery_special(w, F);
      CHECK(res.strings.size() == F.size() + 1);
      CHECK(res.tree.is_tree());
      int total = 0;
      for (const auto& p : res.strings) total += p.rank();
      CHECK(total <= w.rank() - static_cast<int>(F.size()));
      if (F.size() == 1) {
        const int e = F[0];
        std::multiset<CanonicalCode> got, want;
        for (const auto& p : res.strings) got.insert(canonicalize(p));
        want.insert(canonicalize(substring(w, arrows_inside(w, w.tail(e), w.head(e)))));
        want.insert(canonicalize(substring(w, arrows_inside(w, w.head(e), w.tail(e)))));
        CHECK(got == want);
      }
    }
  }

  TEST_CASE("eta small values") {
    CHECK(eta(OrientedTree{1, {}}) == 1);
    CHECK(eta(OrientedTree{2, {{0, 1}}}) == Rational(-1, 2));
    CHECK(eta(OrientedTree{3, {{0, 1}, {1, 2}}}) == Rational(1, 3));
    for (const auto& t : all_trees(4)) CHECK(eta(t) == oracle_eta(t.vertices, t.edges));
  }

  TEST_CASE("eta tree relations up to 6 vertices") {
    long long checks = 0;
    for (int n = 2; n <= 6; ++n)
      for (const auto& t : all_trees(n)) {
        const Rational e = eta(t);
        for (int i = 0; i < n - 1; ++i) {
          OrientedTree rev = t;
          std::swap(rev.edges[i].first, rev.edges[i].second);
          auto [a, b] = t.edges[i];
          const auto u = merge(t, std::min(a, b), std::max(a, b), i);
          if (e + eta(rev) + eta(u) != 0) FAIL("reversal relation");
          ++checks;
        }
        for (int i = 0; i < n - 1; ++i)
          for (int j = 0; j < n - 1; ++j) {
            if (i == j || t.edges[i].first != t.edges[j].first) continue;
            const int b = t.edges[i].second, c = t.edges[j].second;
            OrientedTree t1 = t, t2 = t;
            t1.edges[j] = {b, c};
            t2.edges[i] = {c, b};
            const auto u = merge(t, std::min(b, c), std::max(b, c), j);
            if (e != eta(t1) + eta(t2) + eta(u)) FAIL("slide relation");
            ++checks;
          }
      }
    CHECK(checks > 10000);
  }

  TEST_CASE("eta of two-component forests is zero") {
    std::mt19937_64 rng(48);
    for (int it = 0; it < 100; ++it) {
      const int n1 = rnd(rng, 1, 4), n2 = rnd(rng, 1, 4);
      auto t1 = all_trees(n1), t2 = all_trees(n2);
      const auto& a = t1[rng() % t1.size()];
      const auto& b = t2[rng() % t2.size()];
      OrientedTree f{n1 + n2, a.edges};
      for (auto [x, y] : b.edges) f.edges.push_back({x + n1, y + n1});
      CHECK_FALSE(f.is_tree());
      CHECK(eta(f) == 0);
    }
  }

  TEST_CASE("zeta") {
    const auto z0 = zeta(VirtualString());
    REQUIRE(z0.terms().size() == 1);
    CHECK(z0.terms().begin()->first.z == 0);
    CHECK(z0.terms().begin()->second == 1);

    std::mt19937_64 rng(49);
    for (int it = 0; it < 30; ++it) {
      const auto s = random_string(rnd(rng, 1, 4), rng);
      const auto z = zeta(s);
      // F = empty: the all-plus diagram, coefficient 1
      const auto plus = canonicalize(ArrowDiagram(s, std::vector<int>(s.rank(), 1)));
      Rational free = 0;
      for (const auto& [m, c] : z.terms())
        if (m.z == 0) {
          REQUIRE(m.factors.size() == 1);
          CHECK(m.factors[0].code == plus);
          free += c;
        }
      CHECK(free == 1);
      // coefficients of z^k sum to the eta values of the special k-subsets
      std::map<int, Rational> want, got;
      int specials = 0;
      for (unsigned mask = 0; mask < (1u << s.rank()); ++mask) {
        std::vector<int> F;
        for (int e = 0; e < s.rank(); ++e)
          if (mask >> e & 1) F.push_back(e);
        if (!is_special(s, F)) continue;
        ++specials;
        const auto t = surgery_special(s, F).tree;
        want[static_cast<int>(F.size())] += oracle_eta(t.vertices, t.edges);
      }
      for (const auto& [m, c] : z.terms()) got[m.z] += c;
      for (auto& [k, v] : want)
        if (v != 0) CHECK(got[k] == v);
      CHECK(static_cast<int>(z.terms().size()) <= specials);
    }
  }
}
