#include "virtstring/based_matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vstr {

BasedMatrix::BasedMatrix(int n, int s) : n_(n), s_(s), b_(static_cast<size_t>(n) * n, 0) {
  if (n < 1 || s < 0 || s >= n) throw PreconditionError("bad based matrix shape");
}

BasedMatrix BasedMatrix::from_rows(const std::vector<std::vector<long long>>& rows, int s) {
  BasedMatrix t(static_cast<int>(rows.size()), s);
  for (int i = 0; i < t.n_; ++i) {
    if (static_cast<int>(rows[i].size()) != t.n_) throw PreconditionError("matrix is not square");
    for (int j = 0; j < t.n_; ++j) {
      if (rows[i][j] != -rows[j][i]) throw PreconditionError("matrix is not skew-symmetric");
      t.b_[static_cast<size_t>(i) * t.n_ + j] = rows[i][j];
    }
  }
  return t;
}

void BasedMatrix::set(int i, int j, long long v) {
  if (i == j && v != 0) throw PreconditionError("diagonal must vanish");
  b_[static_cast<size_t>(i) * n_ + j] = v;
  b_[static_cast<size_t>(j) * n_ + i] = -v;
}

std::vector<std::vector<long long>> BasedMatrix::rows() const {
  std::vector<std::vector<long long>> r(n_, std::vector<long long>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
  return r;
}

IntMatrix BasedMatrix::matrix() const {
  IntMatrix m(n_, n_);
  m.a = b_;
  return m;
}

BasedMatrix BasedMatrix::restricted(const std::vector<int>& keep) const {
  std::vector<int> order{s_};
  for (int i : keep)
    if (i != s_) order.push_back(i);
  BasedMatrix t(static_cast<int>(order.size()), 0);
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = 0; j < order.size(); ++j) t.b_[i * order.size() + j] = (*this)(order[i], order[j]);
  return t;
}

std::string BasedMatrix::to_string() const {
  std::vector<int> order{s_};
  for (int i = 0; i < n_; ++i)
    if (i != s_) order.push_back(i);
  std::ostringstream os;
  for (int i : order) {
    os << '[';
    for (size_t j = 0; j < order.size(); ++j) os << (j ? " " : "") << (*this)(i, order[j]);
    os << "]\n";
  }
  return os.str();
}

BasedMatrix from_string(const VirtualString& s) {
  const int m = s.rank();
  BasedMatrix t(m + 1, 0);
  auto n = n_indices(s);
  for (int e = 0; e < m; ++e) {
    t.set(e + 1, 0, n[e]);
    for (int f = e + 1; f < m; ++f) {
      int v = arcs_dot(s, {s.tail(e), s.head(e)}, {s.tail(f), s.head(f)}) + linking(s, e, f);
      t.set(e + 1, f + 1, v);
    }
  }
  return t;
}

GradedBasedMatrix from_open_string(const OpenString& mu) {
  GradedBasedMatrix g{from_string(closure(mu)), std::vector<int>(mu.rank() + 1, 0)};
  for (int e = 0; e < mu.rank(); ++e) g.grade[e + 1] = is_positive_arrow(mu, e) ? 1 : -1;
  return g;
}

// ---- primitive reduction ----

namespace {

struct Reducer {
  const BasedMatrix& t;
  const std::vector<int>* grade;  // null for ungraded
  std::vector<int> alive;

  bool annihilating(int g) const {
    if (grade && (*grade)[g] != 1) return false;
    for (int h : alive)
      if (t(g, h)) return false;
    return true;
  }
  bool core(int g) const {
    if (grade && (*grade)[g] != -1) return false;
    for (int h : alive)
      if (t(g, h) != t(t.s(), h)) return false;
    return true;
  }
  bool complementary(int g1, int g2) const {
    if (grade && (*grade)[g1] == (*grade)[g2]) return false;
    for (int h : alive)
      if (t(g1, h) + t(g2, h) != t(t.s(), h)) return false;
    return true;
  }
  void erase(int g) { alive.erase(std::find(alive.begin(), alive.end(), g)); }

  // deterministic: annihilating, core, complementary, rescan
  bool step() {
    for (int g : alive)
      if (g != t.s() && annihilating(g)) return erase(g), true;
    for (int g : alive)
      if (g != t.s() && core(g)) return erase(g), true;
    for (size_t i = 0; i < alive.size(); ++i)
      for (size_t j = i + 1; j < alive.size(); ++j) {
        int g1 = alive[i], g2 = alive[j];
        if (g1 == t.s() || g2 == t.s()) continue;
        if (complementary(g1, g2)) {
          erase(g1);
          erase(g2);
          return true;
        }
      }
    return false;
  }

  std::vector<std::vector<int>> options() const {
    std::vector<std::vector<int>> out;
    for (int g : alive)
      if (g != t.s() && (annihilating(g) || core(g))) out.push_back({g});
    for (size_t i = 0; i < alive.size(); ++i)
      for (size_t j = i + 1; j < alive.size(); ++j) {
        int g1 = alive[i], g2 = alive[j];
        if (g1 != t.s() && g2 != t.s() && complementary(g1, g2)) out.push_back({g1, g2});
      }
    return out;
  }
};

std::vector<int> all_indices(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

Reduction primitive_reduce_tracked(const BasedMatrix& t) {
  Reducer r{t, nullptr, all_indices(t.size())};
  while (r.step()) {
  }
  BasedMatrix m = t.restricted(r.alive);
  std::vector<int> kept{t.s()};
  for (int g : r.alive)
    if (g != t.s()) kept.push_back(g);
  return {m, kept};
}

BasedMatrix primitive_reduce(const BasedMatrix& t) { return primitive_reduce_tracked(t).matrix; }

GradedBasedMatrix primitive_reduce(const GradedBasedMatrix& t) {
  Reducer r{t.base, &t.grade, all_indices(t.base.size())};
  while (r.step()) {
  }
  GradedBasedMatrix out{t.base.restricted(r.alive), {0}};
  for (int g : r.alive)
    if (g != t.base.s()) out.grade.push_back(t.grade[g]);
  return out;
}

BasedMatrix primitive_reduce_random(const BasedMatrix& t, std::mt19937_64& rng) {
  Reducer r{t, nullptr, all_indices(t.size())};
  for (;;) {
    auto opts = r.options();
    if (opts.empty()) break;
    auto& pick = opts[std::uniform_int_distribution<size_t>(0, opts.size() - 1)(rng)];
    for (int g : pick) r.erase(g);
  }
  return t.restricted(r.alive);
}

int rho(const VirtualString& s) { return primitive_reduce(from_string(s)).size() - 1; }

BasedMatrix negate(const BasedMatrix& t) {
  BasedMatrix r = t;
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j) r.set(i, j, -t(i, j));
  return r;
}

GradedBasedMatrix negate(const GradedBasedMatrix& t) { return {negate(t.base), t.grade}; }

BasedMatrix dash(const BasedMatrix& t) {
  BasedMatrix r = t;
  const int s = t.s();
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j) {
      if (i == s || j == s) r.set(i, j, -t(i, j));
      else r.set(i, j, t(i, j) - t(i, s) - t(s, j));
    }
  return r;
}

int rank_b(const BasedMatrix& t) { return rank_exact(t.matrix()); }
int genus(const VirtualString& s) { return rank_b(from_string(s)) / 2; }

long long v_k(const BasedMatrix& t, long long k) {
  long long c = 0;
  for (int g = 0; g < t.size(); ++g)
    if (t(g, t.s()) == k) ++c;
  return c;
}

long long v_kA(const BasedMatrix& t, long long k, std::vector<long long> A) {
  std::sort(A.begin(), A.end());
  long long c = 0;
  for (int g = 0; g < t.size(); ++g) {
    if (t(g, t.s()) != k) continue;
    std::vector<long long> row;
    for (int h = 0; h < t.size(); ++h)
      if (h != t.s()) row.push_back(t(g, h));
    std::sort(row.begin(), row.end());
    if (row == A) ++c;
  }
  return c;
}

IntPoly u_of_matrix(const BasedMatrix& t) {
  IntPoly p;
  for (int g = 0; g < t.size(); ++g) {
    long long v = t(g, t.s());
    if (v) p.add_term(static_cast<int>(v > 0 ? v : -v), v > 0 ? 1 : -1);
  }
  return p;
}

std::pair<IntPoly, IntPoly> u_of_graded(const GradedBasedMatrix& t) {
  IntPoly up, um;
  for (int g = 0; g < t.base.size(); ++g) {
    if (g == t.base.s()) continue;
    long long v = t.base(g, t.base.s());
    if (!v) continue;
    bool pos = t.grade[g] == 1;
    if (v > 0) (pos ? up : um).add_term(static_cast<int>(v), 1);
    else (pos ? um : up).add_term(static_cast<int>(-v), -1);
  }
  return {up, um};
}

// ---- isomorphism ----

namespace {

struct Sig {
  int is_s, grade;
  long long bs;
  std::vector<long long> row;
  auto operator<=>(const Sig&) const = default;
};

Sig signature(const BasedMatrix& t, const std::vector<int>* grade, int g) {
  Sig sg{g == t.s(), grade ? (*grade)[g] : 0, t(g, t.s()), {}};
  for (int h = 0; h < t.size(); ++h) sg.row.push_back(t(g, h));
  std::sort(sg.row.begin(), sg.row.end());
  return sg;
}

bool iso(const BasedMatrix& a, const std::vector<int>* ga, const BasedMatrix& b, const std::vector<int>* gb) {
  const int n = a.size();
  if (b.size() != n) return false;
  std::vector<Sig> sa(n), sb(n);
  for (int i = 0; i < n; ++i) sa[i] = signature(a, ga, i), sb[i] = signature(b, gb, i);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  // assign rarest signature classes first
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::map<Sig, int> freq;
  for (auto& s : sa) ++freq[s];
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return freq[sa[x]] < freq[sa[y]]; });
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> go = [&](int k) {
    if (k == n) return true;
    int g = order[k];
    for (int h = 0; h < n; ++h) {
      if (used[h] || sb[h] != sa[g]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) ok = a(g, order[j]) == b(h, map[order[j]]);
      if (!ok) continue;
      map[g] = h;
      used[h] = true;
      if (go(k + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return go(0);
}

}  // namespace

bool is_isomorphic(const BasedMatrix& a, const BasedMatrix& b) { return iso(a, nullptr, b, nullptr); }
bool is_isomorphic(const GradedBasedMatrix& a, const GradedBasedMatrix& b) {
  return iso(a.base, &a.grade, b.base, &b.grade);
}

// ---- graded sum ----

GradedBasedMatrix graded_sum(const GradedBasedMatrix& x, const GradedBasedMatrix& y) {
  const BasedMatrix& A = x.base;
  const BasedMatrix& B = y.base;
  std::vector<int> ia, ib;  // non-basepoint indices
  for (int i = 0; i < A.size(); ++i)
    if (i != A.s()) ia.push_back(i);
  for (int i = 0; i < B.size(); ++i)
    if (i != B.s()) ib.push_back(i);
  const int na = static_cast<int>(ia.size()), nb = static_cast<int>(ib.size());
  GradedBasedMatrix out{BasedMatrix(1 + na + nb, 0), std::vector<int>(1 + na + nb, 0)};
  BasedMatrix& T = out.base;
  // epsilon is 1 on the negative part; see README
  auto eps = [](int grade) { return grade == -1 ? 1 : 0; };
  for (int i = 0; i < na; ++i) {
    out.grade[1 + i] = x.grade[ia[i]];
    T.set(1 + i, 0, A(ia[i], A.s()));
    for (int j = i + 1; j < na; ++j) T.set(1 + i, 1 + j, A(ia[i], ia[j]));
  }
  for (int i = 0; i < nb; ++i) {
    out.grade[1 + na + i] = y.grade[ib[i]];
    T.set(1 + na + i, 0, B(ib[i], B.s()));
    for (int j = i + 1; j < nb; ++j) T.set(1 + na + i, 1 + na + j, B(ib[i], ib[j]));
  }
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      int g = ia[i], h = ib[j];
      long long v = eps(x.grade[g]) * B(B.s(), h) - eps(y.grade[h]) * A(A.s(), g);
      T.set(1 + i, 1 + na + j, v);
    }
  return out;
}

// ---- extensions ----

namespace {
BasedMatrix grow(const BasedMatrix& t, int extra) {
  BasedMatrix r(t.size() + extra, t.s());
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j) r.set(i, j, t(i, j));
  return r;
}
}  // namespace

BasedMatrix extend_annihilating(const BasedMatrix& t) { return grow(t, 1); }

BasedMatrix extend_core(const BasedMatrix& t) {
  BasedMatrix r = grow(t, 1);
  const int g = t.size();
  for (int h = 0; h < t.size(); ++h)
    if (h != t.s()) r.set(g, h, t(t.s(), h));
  return r;
}

BasedMatrix extend_complementary(const BasedMatrix& t, const std::vector<long long>& row) {
  BasedMatrix r = grow(t, 2);
  const int g1 = t.size(), g2 = t.size() + 1, s = t.s();
  for (int h = 0; h < t.size(); ++h) {
    if (h == s) continue;
    r.set(g1, h, row.at(h));
    r.set(g2, h, t(s, h) - row.at(h));
  }
  r.set(g1, s, row.at(s));
  r.set(g2, s, -row.at(s));
  r.set(g1, g2, row.at(s));
  return r;
}

}  // namespace vstr
