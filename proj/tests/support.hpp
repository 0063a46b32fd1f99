#pragma once
// shared generators and independent oracles for the test binaries

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "virtstring/virtstring.hpp"

namespace testing_support {

using namespace vstr;

inline std::vector<Token> random_tokens(int m, std::mt19937_64& rng) {
  std::vector<Token> c;
  for (int e = 0; e < m; ++e) {
    c.push_back({e, Role::Tail});
    c.push_back({e, Role::Head});
  }
  std::shuffle(c.begin(), c.end(), rng);
  return c;
}

inline VirtualString random_string(int m, std::mt19937_64& rng) { return VirtualString(random_tokens(m, rng)); }
inline OpenString random_open(int m, std::mt19937_64& rng) { return OpenString(random_tokens(m, rng)); }

inline ArrowDiagram random_diagram(int m, std::mt19937_64& rng) {
  std::vector<int> sg(m);
  for (int& x : sg) x = (rng() & 1) ? 1 : -1;
  return ArrowDiagram(random_string(m, rng), sg);
}

inline std::vector<int> random_perm(int m, std::mt19937_64& rng) {
  std::vector<int> s(m);
  std::iota(s.begin(), s.end(), 1);
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

inline int rnd(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// n(e) by walking the arc tail -> head step by step
inline std::vector<int> oracle_n(const Word& w) {
  const int N = w.length(), m = w.rank();
  std::vector<int> out(m, 0);
  for (int e = 0; e < m; ++e) {
    std::vector<int> inside(m, 0);  // bit0 tail inside, bit1 head inside
    for (int p = (w.tail(e) + 1) % N; p != w.head(e); p = (p + 1) % N) {
      const Token& t = w.at(p);
      inside[t.arrow] |= t.role == Role::Tail ? 1 : 2;
    }
    for (int f = 0; f < m; ++f) {
      if (f == e) continue;
      if (inside[f] == 1) ++out[e];
      if (inside[f] == 2) --out[e];
    }
  }
  return out;
}

// matrix of T(alpha_sigma) from the explicit counting formula, s first
inline std::vector<std::vector<long long>> oracle_T_perm(const std::vector<int>& sg) {
  const int m = static_cast<int>(sg.size());
  std::vector<std::vector<long long>> b(m + 1, std::vector<long long>(m + 1, 0));
  auto S = [&](int i) { return sg[i - 1]; };
  for (int i = 1; i <= m; ++i) {
    b[i][0] = S(i) - i;
    b[0][i] = -(S(i) - i);
  }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      long long v = 0;
      for (int k = i + 1; k < j; ++k)
        if (S(k) > S(j)) ++v;
      if (S(i) < S(j)) {
        for (int k = j + 1; k <= m; ++k)
          if (S(i) < S(k) && S(k) < S(j)) --v;
      } else {
        for (int k = j + 1; k <= m; ++k)
          if (S(j) < S(k) && S(k) < S(i)) ++v;
        ++v;
      }
      b[i][j] = v;
      b[j][i] = -v;
    }
  return b;
}

// sigma by plain enumeration of all simple fillings, no pruning
inline int oracle_sigma(const BasedMatrix& t) {
  const int n = t.size();
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i != t.s()) rest.push_back(i);
  std::vector<std::vector<int>> blocks;
  int best = 1 << 30;
  std::vector<bool> used(n, false);
  std::function<void()> go = [&]() {
    int first = -1;
    for (int g : rest)
      if (!used[g]) {
        first = g;
        break;
      }
    if (first < 0) {
      std::vector<std::vector<int>> all = blocks;
      all.push_back({t.s()});
      IntMatrix m(static_cast<int>(all.size()), static_cast<int>(all.size()));
      for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
          long long v = 0;
          for (int x : all[i])
            for (int y : all[j]) v += t(x, y);
          m(static_cast<int>(i), static_cast<int>(j)) = v;
        }
      best = std::min(best, rank_exact(m) / 2);
      return;
    }
    used[first] = true;
    blocks.push_back({first});
    go();
    blocks.pop_back();
    for (int g : rest) {
      if (used[g]) continue;
      used[g] = true;
      blocks.push_back({first, g});
      go();
      blocks.pop_back();
      used[g] = false;
    }
    used[first] = false;
  };
  go();
  return best;
}

// ribbon iff the reflected-and-reversed string is homeomorphic to the original
inline bool oracle_ribbon(const VirtualString& s) { return canonicalize(s) == canonicalize(inverse(opposite(s))); }

// count order-respecting surjections by brute force over all maps
inline Rational oracle_eta(int nv, const std::vector<std::pair<int, int>>& edges) {
  Rational total = 0;
  for (int n = 1; n <= nv; ++n) {
    long long count = 0;
    std::vector<int> f(nv, 1);
    for (;;) {
      bool ok = true;
      for (auto [a, b] : edges)
        if (f[a] >= f[b]) ok = false;
      if (ok) {
        std::set<int> img(f.begin(), f.end());
        if (static_cast<int>(img.size()) == n) ++count;
      }
      int i = 0;
      while (i < nv && f[i] == n) f[i++] = 1;
      if (i == nv) break;
      ++f[i];
    }
    total += Rational(n % 2 ? 1 : -1, n) * count;
  }
  return total;
}

// genus of the canonical surface by tracing boundary components of the ribbon graph
inline int oracle_surface_genus(const Word& w) {
  const int N = w.length(), m = w.rank();
  if (m == 0) return 0;
  // half edge (out?, point); ccw order at a crossing: out_tail, out_head, in_tail, in_head
  auto rot = [&](bool out, int p) {
    const Token& t = w.at(p);
    int a = w.tail(t.arrow), b = w.head(t.arrow);
    std::pair<bool, int> order[4] = {{true, a}, {true, b}, {false, a}, {false, b}};
    for (int k = 0; k < 4; ++k)
      if (order[k].first == out && order[k].second == p) return order[(k + 1) % 4];
    return order[0];
  };
  std::set<std::pair<int, int>> seen;  // (arc, direction)
  int faces = 0;
  for (int i = 0; i < N; ++i)
    for (int d : {1, -1}) {
      if (seen.count({i, d})) continue;
      ++faces;
      std::pair<int, int> cur{i, d};
      while (!seen.count(cur)) {
        seen.insert(cur);
        auto [arc, dir] = cur;
        auto [out, p] = dir == 1 ? rot(false, (arc + 1) % N) : rot(true, arc);
        cur = out ? std::make_pair(p, 1) : std::make_pair((p - 1 + N) % N, -1);
      }
    }
  return (2 + m - faces) / 2;
}

}  // namespace testing_support
