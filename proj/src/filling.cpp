#include "virtstring/filling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "virtstring/u_poly.hpp"

namespace vstr {

IntMatrix filling_matrix(const BasedMatrix& t, const SimpleFilling& f) {
  const int k = static_cast<int>(f.blocks.size());
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long long v = 0;
      for (int x : f.blocks[i])
        for (int y : f.blocks[j]) v += t(x, y);
      m(i, j) = v;
    }
  return m;
}

namespace {

using Sparse = std::vector<std::pair<int, long long>>;

struct Joint {
  std::vector<int> offsets, sizes, basepoints;
  std::vector<int> owner;  // joint index -> matrix
  const std::vector<BasedMatrix>* ts;
  int total = 0;

  explicit Joint(const std::vector<BasedMatrix>& t) : ts(&t) {
    for (size_t k = 0; k < t.size(); ++k) {
      offsets.push_back(total);
      sizes.push_back(t[k].size());
      basepoints.push_back(total + t[k].s());
      for (int i = 0; i < t[k].size(); ++i) owner.push_back(static_cast<int>(k));
      total += t[k].size();
    }
  }
  long long b(int i, int j) const {
    int k = owner[i];
    if (owner[j] != k) return 0;
    return (*ts)[k](i - offsets[k], j - offsets[k]);
  }
  long long pair(const Sparse& v, const Sparse& w) const {
    long long r = 0;
    for (auto [i, a] : v)
      for (auto [j, c] : w) r += a * c * b(i, j);
    return r;
  }
};

struct Search {
  Search(const Joint& j, int b, bool h, long long bud) : J(j), bound(b), hyperbolic_only(h), budget(bud) {}
  const Joint& J;
  int bound;
  bool hyperbolic_only;
  long long budget;
  long long nodes = 0;

  std::vector<int> elems;  // non-basepoint joint indices
  std::vector<bool> used;
  std::vector<Sparse> chosen;
  std::vector<std::vector<long long>> gram;
  int best = 1 << 30;
  std::vector<Sparse> best_vectors;

  int rank_now() const {
    const int k = static_cast<int>(chosen.size());
    IntMatrix m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = gram[i][j];
    return rank_exact(m);
  }

  void push(const Sparse& v) {
    for (size_t i = 0; i < chosen.size(); ++i) {
      long long x = J.pair(chosen[i], v);
      gram[i].push_back(x);
    }
    std::vector<long long> row;
    for (size_t i = 0; i < chosen.size(); ++i) row.push_back(-gram[i].back());
    row.push_back(0);
    gram.push_back(row);
    chosen.push_back(v);
  }

  void pop() {
    chosen.pop_back();
    gram.pop_back();
    for (auto& r : gram) r.pop_back();
  }

  // all coefficient vectors for basepoints 2..r
  std::vector<Sparse> coefficient_tails() const {
    std::vector<Sparse> out{{}};
    for (size_t k = 1; k < J.basepoints.size(); ++k) {
      std::vector<Sparse> next;
      for (const auto& t : out)
        for (int c = -bound; c <= bound; ++c) {
          Sparse x = t;
          if (c) x.push_back({J.basepoints[k], c});
          next.push_back(x);
        }
      out = std::move(next);
    }
    return out;
  }

  void run() {
    used.assign(J.total, false);
    Sparse lambda0;
    for (int s : J.basepoints) lambda0.push_back({s, 1});
    push(lambda0);
    tails = coefficient_tails();
    go();
  }

  std::vector<Sparse> tails;

  bool done() const { return best == 0; }

  void go() {
    if (++nodes > budget) throw CapExceeded("filling search exceeded its node budget");
    int first = -1;
    for (int g : elems)
      if (!used[g]) {
        first = g;
        break;
      }
    if (first < 0) {
      int r = rank_now() / 2;
      if (r < best) {
        best = r;
        best_vectors = chosen;
      }
      return;
    }
    struct Opt {
      Sparse v;
      int partner;
      int rank;
    };
    std::vector<Opt> opts;
    std::vector<int> partners{-1};
    for (int g : elems)
      if (g != first && !used[g] && g > first) partners.push_back(g);
    for (int h : partners) {
      Sparse base{{first, 1}};
      if (h >= 0) base.push_back({h, 1});
      for (const auto& t : tails) {
        Sparse v = base;
        v.insert(v.end(), t.begin(), t.end());
        push(v);
        int r = rank_now();
        pop();
        if (hyperbolic_only ? r != 0 : r / 2 >= best) continue;
        opts.push_back({v, h, r});
      }
    }
    std::stable_sort(opts.begin(), opts.end(), [](const Opt& a, const Opt& b) { return a.rank < b.rank; });
    for (const auto& o : opts) {
      if (o.rank / 2 >= best) continue;
      used[first] = true;
      if (o.partner >= 0) used[o.partner] = true;
      push(o.v);
      go();
      pop();
      used[first] = false;
      if (o.partner >= 0) used[o.partner] = false;
      if (done()) return;
    }
  }
};

TupleFilling to_tuple(const Joint& J, const std::vector<Sparse>& vs) {
  TupleFilling f;
  f.offsets = J.offsets;
  for (const auto& v : vs) {
    std::vector<long long> d(J.total, 0);
    for (auto [i, c] : v) d[i] += c;
    f.vectors.push_back(d);
  }
  return f;
}

Search make_search(const Joint& J, int bound, bool hyp, int max_size, long long budget) {
  if (J.total > max_size) throw CapExceeded("filling search size " + std::to_string(J.total) + " exceeds cap " + std::to_string(max_size));
  Search S(J, bound, hyp, budget);
  for (int i = 0; i < J.total; ++i)
    if (std::find(J.basepoints.begin(), J.basepoints.end(), i) == J.basepoints.end()) S.elems.push_back(i);
  return S;
}

}  // namespace

SigmaResult sigma(const BasedMatrix& t, int max_size) {
  std::vector<BasedMatrix> ts{t};
  Joint J(ts);
  Search S = make_search(J, 0, false, max_size, 1LL << 40);
  S.run();
  SigmaResult r;
  r.sigma = S.best;
  for (const auto& v : S.best_vectors) {
    std::vector<int> blk;
    for (auto [i, c] : v) blk.push_back(i);
    r.filling.blocks.push_back(blk);
  }
  return r;
}

std::optional<SimpleFilling> hyperbolic_certificate(const BasedMatrix& t, int max_size) {
  std::vector<BasedMatrix> ts{t};
  Joint J(ts);
  Search S = make_search(J, 0, true, max_size, 1LL << 40);
  S.run();
  if (S.best != 0) return std::nullopt;
  SimpleFilling f;
  for (const auto& v : S.best_vectors) {
    std::vector<int> blk;
    for (auto [i, c] : v) blk.push_back(i);
    f.blocks.push_back(blk);
  }
  return f;
}

bool is_hyperbolic(const BasedMatrix& t, int max_size) { return hyperbolic_certificate(t, max_size).has_value(); }

IntMatrix tuple_filling_matrix(const std::vector<BasedMatrix>& ts, const TupleFilling& f) {
  Joint J(ts);
  const int k = static_cast<int>(f.vectors.size());
  IntMatrix m(k, k);
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) {
      long long v = 0;
      for (int i = 0; i < J.total; ++i) {
        if (!f.vectors[a][i]) continue;
        for (int j = 0; j < J.total; ++j)
          if (f.vectors[c][j]) v += f.vectors[a][i] * f.vectors[c][j] * J.b(i, j);
      }
      m(a, c) = v;
    }
  return m;
}

bool is_valid_tuple_filling(const std::vector<BasedMatrix>& ts, const TupleFilling& f) {
  Joint J(ts);
  std::vector<int> seen(J.total, 0);
  bool has_lambda0 = false;
  for (const auto& v : f.vectors) {
    if (static_cast<int>(v.size()) != J.total) return false;
    int gens = 0;
    bool only_base = true;
    for (int i = 0; i < J.total; ++i) {
      bool base = std::find(J.basepoints.begin(), J.basepoints.end(), i) != J.basepoints.end();
      if (base || !v[i]) continue;
      if (v[i] != 1) return false;
      ++gens;
      ++seen[i];
      only_base = false;
    }
    if (gens > 2) return false;
    if (only_base) {
      bool l0 = true;
      for (int sb : J.basepoints) l0 = l0 && v[sb] == 1;
      has_lambda0 = has_lambda0 || l0;
    }
  }
  for (int i = 0; i < J.total; ++i) {
    bool base = std::find(J.basepoints.begin(), J.basepoints.end(), i) != J.basepoints.end();
    if (!base && seen[i] != 1) return false;
  }
  return has_lambda0;
}

TupleSigmaResult tuple_sigma_upper(const std::vector<BasedMatrix>& ts, int coeff_bound, int max_size, long long node_budget) {
  if (coeff_bound < 0) throw PreconditionError("coefficient bound must be >= 0");
  if (ts.empty()) throw PreconditionError("empty tuple");
  Joint J(ts);
  Search S = make_search(J, coeff_bound, false, max_size, node_budget);
  S.run();
  return {S.best, to_tuple(J, S.best_vectors)};
}

CobordismResult cobordant_matrices(const BasedMatrix& t1, const BasedMatrix& t2, int coeff_bound, int max_size,
                                   long long node_budget) {
  std::vector<BasedMatrix> ts{t1, negate(t2)};
  Joint J(ts);
  Search S = make_search(J, coeff_bound, true, max_size, node_budget);
  CobordismResult r;
  try {
    S.run();
  } catch (const CapExceeded&) {
    return r;
  }
  if (S.best == 0) {
    r.status = CobordismStatus::Cobordant;
    r.certificate = to_tuple(J, S.best_vectors);
  }
  return r;
}

ObstructionReport slice_obstruction(const VirtualString& s, int cover_depth, int r_max, int max_size) {
  if (cover_depth < 1 || r_max < 1) throw PreconditionError("cover depth and r_max must be >= 1");
  ObstructionReport rep;
  std::vector<std::vector<int>> seqs{{1}};
  std::vector<std::vector<int>> layer{{}};
  for (int d = 1; d <= cover_depth; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& q : layer)
      for (int r = 2; r <= r_max; ++r) {
        auto x = q;
        x.push_back(r);
        next.push_back(x);
        seqs.push_back(x);
      }
    layer = std::move(next);
  }
  for (const auto& q : seqs) {
    std::string name = "u";
    if (q != std::vector<int>{1}) {
      name += "^(";
      for (size_t i = 0; i < q.size(); ++i) name += (i ? "," : "") + std::to_string(q[i]);
      name += ")";
    }
    IntPoly p = higher_u(s, q);
    rep.checked.push_back({name, p.to_string()});
    if (!p.is_zero() && !rep.not_slice) {
      rep.not_slice = true;
      rep.witness = name + " = " + p.to_string();
    }
  }
  BasedMatrix prim = primitive_reduce(from_string(s));
  bool hyp = is_hyperbolic(prim, max_size);
  rep.checked.push_back({"T hyperbolic", hyp ? "true" : "false"});
  if (!hyp && !rep.not_slice) {
    rep.not_slice = true;
    rep.witness = "T(alpha) is not hyperbolic (sigma = " + std::to_string(sigma(prim, max_size).sigma) + ")";
  }
  return rep;
}

VirtualString alpha_h(const VirtualString& s, int p, const std::vector<int>& h) {
  if (p < 2) throw PreconditionError("p must be >= 2");
  const int m = s.rank();
  if (static_cast<int>(h.size()) != m + 1) throw PreconditionError("h must have rank+1 coordinates");
  BasedMatrix t = from_string(s);
  std::vector<bool> keep(m);
  for (int e = 0; e < m; ++e) {
    long long v = 0;
    for (int j = 0; j <= m; ++j) v += static_cast<long long>(h[j]) * t(e + 1, j);
    keep[e] = mod(v, p) == 0;
  }
  return substring(s, keep);
}

std::string to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::NotSlice: return "NotSlice";
    case ScanVerdict::NoObstructionFound: return "NoObstructionFound";
    case ScanVerdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "";
}

ScanResult lagrangian_scan(const VirtualString& s, int p, long long budget) {
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw PreconditionError("p must be prime");
  if (p < 2) throw PreconditionError("p must be prime");
  const int n = s.rank() + 1;
  BasedMatrix t = from_string(s);
  std::vector<ModVec> B(n, ModVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B[i][j] = mod(t(i, j), p);

  auto perp = [&](const std::vector<ModVec>& U) {
    std::vector<ModVec> rows;
    for (const auto& u : U) {
      ModVec r(n, 0);
      for (int j = 0; j < n; ++j) {
        long long x = 0;
        for (int i = 0; i < n; ++i) x += static_cast<long long>(u[i]) * B[i][j];
        r[j] = mod(x, p);
      }
      rows.push_back(r);
    }
    if (rows.empty()) rows.push_back(ModVec(n, 0));
    return nullspace_mod(rows, n, p);
  };
  auto span_elements = [&](const std::vector<ModVec>& basis) {
    std::vector<ModVec> out{ModVec(n, 0)};
    for (const auto& b : basis) {
      std::vector<ModVec> next;
      for (const auto& x : out)
        for (int c = 0; c < p; ++c) {
          ModVec y = x;
          for (int i = 0; i < n; ++i) y[i] = mod(y[i] + static_cast<long long>(c) * b[i], p);
          next.push_back(y);
        }
      out = std::move(next);
    }
    return out;
  };

  std::map<CanonicalCode, bool> obstructed_cache;
  auto obstructed = [&](const ModVec& h) {
    VirtualString a = alpha_h(s, p, h);
    auto key = canonicalize(a);
    auto it = obstructed_cache.find(key);
    if (it != obstructed_cache.end()) return it->second;
    bool ob = !u(a).is_zero() || !is_hyperbolic(primitive_reduce(from_string(a)));
    obstructed_cache[key] = ob;
    return ob;
  };

  // radical plus s
  std::vector<ModVec> start = nullspace_mod(B, n, p);
  ModVec es(n, 0);
  es[0] = 1;
  start.push_back(es);
  rref_mod(start, p);
  ScanResult res;
  std::set<std::vector<ModVec>> seen{start};
  std::vector<std::vector<ModVec>> stack{start};
  while (!stack.empty()) {
    if (++res.nodes > budget) {
      res.verdict = ScanVerdict::BudgetExceeded;
      return res;
    }
    auto U = stack.back();
    stack.pop_back();
    auto P = perp(U);
    if (P.size() == U.size()) {
      ++res.lagrangians;
      bool any = false;
      for (const auto& h : span_elements(U))
        if (obstructed(h)) {
          any = true;
          break;
        }
      if (!any) {
        res.verdict = ScanVerdict::NoObstructionFound;
        res.passing_basis = U;
        return res;
      }
      continue;
    }
    for (const auto& v : span_elements(P)) {
      auto W = U;
      W.push_back(v);
      int r = rref_mod(W, p);
      if (r == static_cast<int>(U.size())) continue;
      if (seen.insert(W).second) stack.push_back(W);
    }
  }
  res.verdict = ScanVerdict::NotSlice;
  return res;
}

}  // namespace vstr
