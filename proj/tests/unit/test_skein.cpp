#include "doctest.h"
#include "support.hpp"

using namespace vstr;
using namespace testing_support;

namespace {

bool linked(const Word& w, int e, int f) {
  const int N = w.length();
  auto in = [&](int p) { return (p - w.tail(e) + N) % N < (w.head(e) - w.tail(e) + N) % N; };
  return in(w.tail(f)) != in(w.head(f));
}

struct Raw {
  std::vector<int> f;
  std::vector<int> cutting;
  int minus = 0;
};

// every map edg -> {1..n} satisfying (i) or (ii) with pairwise unlinked cutting arrows
std::vector<Raw> oracle_labelings(const ArrowDiagram& d, int n) {
  const Word& w = d.str;
  const int N = w.length(), E = std::max(1, N);
  auto minus = [&](int p) { return N == 0 ? 0 : (p - 1 + N) % N; };
  std::vector<Raw> out;
  std::vector<int> f(E, 1);
  for (;;) {
    Raw r{f, {}, 0};
    bool ok = true;
    for (int e = 0; e < w.rank() && ok; ++e) {
      const int a = w.tail(e), b = w.head(e);
      if (f[a] == f[minus(a)] && f[b] == f[minus(b)]) continue;
      const int s = f[minus(a)] > f[a] ? 1 : -1;
      if (f[a] == f[minus(b)] && f[minus(a)] == f[b] && f[a] != f[minus(a)] && s == d.sign[e]) {
        r.cutting.push_back(e);
        r.minus += d.sign[e] < 0;
      } else {
        ok = false;
      }
    }
    for (size_t i = 0; i < r.cutting.size() && ok; ++i)
      for (size_t j = i + 1; j < r.cutting.size() && ok; ++j) ok = !linked(w, r.cutting[i], r.cutting[j]);
    if (ok) out.push_back(r);
    int i = 0;
    while (i < E && f[i] == n) f[i++] = 1;
    if (i == E) break;
    ++f[i];
  }
  return out;
}

bool surjective(const std::vector<int>& f, int n) { return static_cast<int>(std::set<int>(f.begin(), f.end()).size()) == n; }

// circuits of the graph obtained by gluing a = b at each cutting arrow; each is labeled by a single value
std::vector<std::vector<int>> circuits(const ArrowDiagram& d, const Raw& r) {
  const Word& w = d.str;
  const int N = w.length();
  if (N == 0) return {{0}};
  std::vector<int> partner(N, -1);
  for (int e : r.cutting) {
    partner[w.tail(e)] = w.head(e);
    partner[w.head(e)] = w.tail(e);
  }
  std::vector<bool> seen(N, false);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < N; ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int x = s; !seen[x];) {
      seen[x] = true;
      cyc.push_back(x);
      const int p = (x + 1) % N;  // edge x ends at point p
      x = partner[p] >= 0 ? partner[p] : p;
    }
    out.push_back(cyc);
  }
  return out;
}

VirtualString piece_of(const ArrowDiagram& d, const std::vector<int>& f, int i) {
  const Word& w = d.str;
  const int N = w.length();
  std::vector<bool> keep(w.rank());
  for (int e = 0; e < w.rank(); ++e) {
    const int a = w.tail(e), b = w.head(e);
    keep[e] = f[a] == i && f[(a - 1 + N) % N] == i && f[b] == i && f[(b - 1 + N) % N] == i;
  }
  return substring(d.str, keep);
}

FormalSum oracle_nabla(const ArrowDiagram& d, Normalizer& norm) {
  FormalSum out(false, norm.caps());
  Rational fact = 1;
  for (int n = 1; n <= std::max(1, d.str.length()); ++n) {
    fact *= n;
    for (const auto& r : oracle_labelings(d, n)) {
      if (!surjective(r.f, n) || static_cast<int>(r.cutting.size()) != n - 1) continue;
      std::vector<StringClassKey> fs;
      for (int i = 1; i <= n; ++i) fs.push_back(norm.key(piece_of(d, r.f, i)));
      out.add(fs, Rational(r.minus % 2 ? -1 : 1) / fact, n - 1);
    }
  }
  return out;
}

using Slot = std::multiset<CanonicalCode>;
using Term = std::tuple<int, int, std::vector<Slot>>;

Term flatten(const DeltaTerm& t) {
  std::vector<Slot> slots;
  for (const auto& fac : t.factors) {
    Slot s;
    for (const auto& c : fac) s.insert(canonicalize(c));
    slots.push_back(s);
  }
  return {t.sign, t.z, slots};
}

// (id x Delta) Delta, with Delta applied circle by circle in the second factor
std::multiset<Term> iterated_delta(const ArrowDiagram& d) {
  std::multiset<Term> out;
  for (const auto& t : delta_terms(d, 2)) {
    std::vector<std::tuple<int, int, Slot, Slot>> acc{{t.sign, t.z, {}, {}}};
    for (const auto& c : t.factors[1]) {
      std::vector<std::tuple<int, int, Slot, Slot>> next;
      for (const auto& [s, z, x, y] : acc)
        for (const auto& u : delta_terms(c, 2)) {
          Slot x2 = x, y2 = y;
          for (const auto& p : u.factors[0]) x2.insert(canonicalize(p));
          for (const auto& p : u.factors[1]) y2.insert(canonicalize(p));
          next.push_back({s * u.sign, z + u.z, x2, y2});
        }
      acc = std::move(next);
    }
    Slot first;
    for (const auto& p : t.factors[0]) first.insert(canonicalize(p));
    for (const auto& [s, z, x, y] : acc) out.insert(Term{s, z, {first, x, y}});
  }
  return out;
}

}  // namespace

TEST_SUITE("skein") {
  TEST_CASE("edges") {
    const ArrowDiagram empty;
    CHECK(edges(empty).size() == 1);
    std::mt19937_64 rng(51);
    for (int m = 1; m <= 5; ++m) {
      const auto d = random_diagram(m, rng);
      const auto es = edges(d);
      CHECK(es.size() == static_cast<size_t>(2 * m));
      for (int p = 0; p < 2 * m; ++p) {
        CHECK(es[edge_in(d, p)].to == p);
        CHECK(es[edge_out(d, p)].from == p);
      }
    }
  }

  TEST_CASE("labelings match brute force") {
    std::mt19937_64 rng(52);
    for (int it = 0; it < 40; ++it) {
      const auto d = random_diagram(rnd(rng, 0, 3), rng);
      for (int n = 1; n <= 3; ++n) {
        std::set<std::vector<int>> all, small;
        for (const auto& r : oracle_labelings(d, n)) {
          all.insert(r.f);
          if (surjective(r.f, n) && static_cast<int>(r.cutting.size()) == n - 1) small.insert(r.f);
        }
        std::set<std::vector<int>> got_all, got_small;
        for (const auto& L : enumerate_labelings(d, n, LabelMode::Lbl)) {
          got_all.insert(L.f);
          CHECK(is_labeling(d, L.f));
        }
        for (const auto& L : enumerate_labelings(d, n, LabelMode::lbl)) got_small.insert(L.f);
        CHECK(got_all == all);
        CHECK(got_small == small);
      }
    }
  }

  TEST_CASE("labeling basics") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 30; ++it) {
      const auto d = random_diagram(rnd(rng, 0, 4), rng);
      const int E = std::max(1, d.str.length());
      const auto one = enumerate_labelings(d, 1, LabelMode::lbl);
      REQUIRE(one.size() == 1);
      CHECK(one[0].f == std::vector<int>(E, 1));
      std::set<std::vector<int>> two;
      for (const auto& L : enumerate_labelings(d, 2, LabelMode::Lbl)) two.insert(L.f);
      CHECK(two.count(std::vector<int>(E, 1)));
      CHECK(two.count(std::vector<int>(E, 2)));
      if (d.rank() <= 2) CHECK(enumerate_labelings(d, E + 1, LabelMode::lbl).empty());
    }
  }

  TEST_CASE("circle count identity") {
    std::mt19937_64 rng(54);
    for (int it = 0; it < 40; ++it) {
      const auto d = random_diagram(rnd(rng, 0, 3), rng);
      for (int n = 2; n <= 3; ++n)
        for (const auto& r : oracle_labelings(d, n)) {
          const auto cs = circuits(d, r);
          CHECK(cs.size() == r.cutting.size() + 1);
          std::vector<int> per(n + 1, 0);
          for (const auto& c : cs) {
            for (int x : c) CHECK(r.f[x] == r.f[c[0]]);
            ++per[r.f[c[0]]];
          }
          const bool ones = std::all_of(per.begin() + 1, per.end(), [](int k) { return k == 1; });
          CHECK(ones == (surjective(r.f, n) && static_cast<int>(r.cutting.size()) == n - 1));
        }
    }
  }

  TEST_CASE("nabla matches the labeling sum") {
    std::mt19937_64 rng(55);
    Normalizer norm;
    for (int it = 0; it < 40; ++it) {
      const auto d = random_diagram(rnd(rng, 0, 4), rng);
      CHECK(nabla(d, norm) == oracle_nabla(d, norm));
    }
  }

  TEST_CASE("nabla values") {
    Normalizer norm;
    const auto s12 = family_pq(1, 2);
    const ArrowDiagram d(s12, {1, 1, 1});
    FormalSum expect(false, norm.caps());
    expect.add({norm.key(s12)}, 1);
    CHECK(nabla(d, norm) == expect);

    std::mt19937_64 rng(56);
    for (int it = 0; it < 20; ++it) {
      CHECK(nabla(random_diagram(rnd(rng, 0, 2), rng), norm).is_zero());
      CHECK(nabla_ut(random_diagram(rnd(rng, 0, 2), rng)).is_zero());
      // free term is the underlying class
      const auto e = random_diagram(rnd(rng, 3, 5), rng);
      FormalSum free(false, norm.caps());
      const auto ne = nabla(e, norm);
      for (const auto& [m, c] : ne.terms())
        if (m.z == 0) free.add(m, c);
      FormalSum want(false, norm.caps());
      want.add({norm.key(e.str)}, 1);
      CHECK(free == want);
    }
  }

  TEST_CASE("skein relation") {
    Normalizer norm;
    const ArrowDiagram one(parse_closed("a a'"), {1});
    CHECK(skein_check(one, 0, norm));
    CHECK(nabla(one, norm).is_zero());
    CHECK_THROWS_AS(skein_check(ArrowDiagram(parse_closed("a a'"), {-1}), 0, norm), PreconditionError);

    std::mt19937_64 rng(57);
    int checked = 0;
    for (int it = 0; it < 40; ++it) {
      const auto d = random_diagram(rnd(rng, 1, 5), rng);
      for (int e = 0; e < d.rank(); ++e)
        if (d.sign[e] == 1) {
          CHECK(skein_check(d, e, norm));
          CHECK(skein_check_ut(d, e));
          ++checked;
        }
    }
    CHECK(checked > 40);
  }

  TEST_CASE("nabla is invariant under diagram moves") {
    std::mt19937_64 rng(58);
    Normalizer norm;
    int checked = 0;
    for (int it = 0; it < 30; ++it) {
      const auto d = random_diagram(rnd(rng, 0, 4), rng);
      const auto base = nabla_ut(d);
      const auto full = nabla(d, norm);
      auto mvs = enumerate_diagram_moves(d, d.rank() + 2);
      std::shuffle(mvs.begin(), mvs.end(), rng);
      for (size_t i = 0; i < mvs.size() && i < 12; ++i) {
        const auto d2 = diagram_move(d, mvs[i]);
        CHECK(nabla_ut(d2) == base);
        if (d2.rank() <= 5) CHECK(nabla(d2, norm) == full);
        ++checked;
      }
    }
    CHECK(checked > 100);
  }

  TEST_CASE("knot coverings") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 30; ++it) {
      const auto d = random_diagram(rnd(rng, 0, 6), rng);
      CHECK(knot_covering(d, 1) == d);
      for (int r = 2; r <= 3; ++r) {
        const auto c = knot_covering(d, r);
        CHECK(canonicalize(c.str) == canonicalize(covering(d.str, r)));
      }
    }
    CHECK_THROWS_AS(knot_covering(ArrowDiagram(), 0), PreconditionError);
  }

  TEST_CASE("delta terms") {
    const auto t0 = delta_terms(ArrowDiagram(), 2);
    REQUIRE(t0.size() == 2);
    for (const auto& t : t0) {
      CHECK(t.sign == 1);
      CHECK(t.z == 0);
      CHECK(t.factors[0].size() + t.factors[1].size() == 1);
    }

    std::mt19937_64 rng(60);
    for (int it = 0; it < 25; ++it) {
      const auto d = random_diagram(rnd(rng, 0, 4), rng);
      const auto ts = delta_terms(d, 2);
      CHECK(ts.size() == enumerate_labelings(d, 2, LabelMode::Lbl).size());
      // constant labelings give D x 1 and 1 x D
      int whole = 0;
      for (const auto& t : ts)
        for (int k = 0; k < 2; ++k)
          if (t.z == 0 && t.factors[k].size() == 1 && t.factors[1 - k].empty() && canonicalize(t.factors[k][0]) == canonicalize(d)) ++whole;
      CHECK(whole == 2);
      std::multiset<Term> three;
      for (const auto& t : delta_terms(d, 3)) three.insert(flatten(t));
      CHECK(iterated_delta(d) == three);
    }
  }
}
