#include "virtstring/lie.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vstr {

// ---- formal sums ----

void FormalSum::add(Monomial m, const Rational& c) {
  if (c == 0) return;
  for (const auto& f : m.factors)
    if (f.zero) return;
  if (!tensor_) std::sort(m.factors.begin(), m.factors.end());
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void FormalSum::add(std::vector<StringClassKey> factors, const Rational& c, int z) {
  add(Monomial{z, std::move(factors)}, c);
}

void FormalSum::check_compatible(const FormalSum& o) const {
  if (tensor_ != o.tensor_) throw PreconditionError("mixing tensor and product sums");
  if (caps_ && o.caps_ && !(*caps_ == *o.caps_))
    throw PreconditionError("formal sums built with different normalize caps");
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  check_compatible(o);
  if (!caps_) caps_ = o.caps_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FormalSum FormalSum::operator+(const FormalSum& o) const {
  FormalSum r = *this;
  r += o;
  return r;
}

FormalSum FormalSum::operator-(const FormalSum& o) const { return *this + o * Rational(-1); }

FormalSum FormalSum::operator*(const Rational& k) const {
  FormalSum r(tensor_, caps_);
  for (const auto& [m, c] : terms_) r.add(m, c * k);
  return r;
}

FormalSum FormalSum::operator*(const FormalSum& o) const {
  check_compatible(o);
  if (tensor_) throw PreconditionError("product of tensor sums");
  FormalSum r(false, caps_ ? caps_ : o.caps_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m{m1.z + m2.z, m1.factors};
      m.factors.insert(m.factors.end(), m2.factors.begin(), m2.factors.end());
      r.add(std::move(m), c1 * c2);
    }
  return r;
}

bool FormalSum::operator==(const FormalSum& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

FormalSum FormalSum::permuted(const std::vector<int>& perm) const {
  FormalSum r(tensor_, caps_);
  for (const auto& [m, c] : terms_) {
    Monomial p{m.z, {}};
    for (int i : perm) p.factors.push_back(m.factors.at(i));
    r.add(std::move(p), c);
  }
  return r;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream o;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (!first) o << (a < 0 ? " - " : " + ");
    else if (a < 0) o << "-";
    if (a < 0) a = -a;
    first = false;
    const bool unit = a == 1 && !m.factors.empty();
    if (!unit) o << vstr::to_string(a);
    if (m.z) o << (unit ? "" : "*") << "z" << (m.z > 1 ? "^" + std::to_string(m.z) : "");
    for (size_t i = 0; i < m.factors.size(); ++i) {
      if (i == 0) o << ((unit && !m.z) ? "" : "*");
      else o << (tensor_ ? " (x) " : "*");
      o << m.factors[i].str();
    }
  }
  return o.str();
}

// ---- cobracket ----

std::vector<bool> arrows_inside(const Word& s, int from, int to) {
  const int n = s.length();
  std::vector<bool> keep(s.rank(), false);
  for (int f = 0; f < s.rank(); ++f)
    keep[f] = in_open_arc(s.tail(f), from, to, n) && in_open_arc(s.head(f), from, to, n);
  return keep;
}

namespace {

std::pair<VirtualString, VirtualString> halves(const VirtualString& s, int e) {
  return {substring(s, arrows_inside(s, s.tail(e), s.head(e))), substring(s, arrows_inside(s, s.head(e), s.tail(e)))};
}

// each term of x gets a tensor prefix
void add_prefixed(FormalSum& out, const StringClassKey& k, const FormalSum& x, const Rational& sign) {
  for (const auto& [m, c] : x.terms()) {
    Monomial p{m.z, {k}};
    p.factors.insert(p.factors.end(), m.factors.begin(), m.factors.end());
    out.add(std::move(p), c * sign);
  }
}

FormalSum iterate(const VirtualString& s, int n, Normalizer& norm) {
  FormalSum out(true, norm.caps());
  if (n == 0) {
    out.add({norm.key(s)}, 1);
    return out;
  }
  for (int e = 0; e < s.rank(); ++e) {
    auto [a1, a2] = halves(s, e);
    const auto k1 = norm.key(a1), k2 = norm.key(a2);
    if (!k1.zero) add_prefixed(out, k1, iterate(a2, n - 1, norm), 1);
    if (!k2.zero) add_prefixed(out, k2, iterate(a1, n - 1, norm), -1);
  }
  return out;
}

}  // namespace

FormalSum cobracket(const VirtualString& s, Normalizer& norm) { return iterate(s, 1, norm); }

FormalSum cobracket(const VirtualString& s, NormalizeCaps caps) {
  Normalizer norm(caps);
  return cobracket(s, norm);
}

FormalSum iterated_cobracket(const VirtualString& s, int n, Normalizer& norm) {
  if (n < 1) throw PreconditionError("iterated cobracket needs n >= 1");
  return iterate(s, n, norm);
}

FormalSum cojacobi_expansion(const VirtualString& s, Normalizer& norm) {
  FormalSum out(true, norm.caps());
  const int N = s.length();
  for (int e = 0; e < s.rank(); ++e)
    for (int f = 0; f < s.rank(); ++f) {
      if (e == f || linking(s, e, f) != 0) continue;
      // x: arc of e avoiding f, y: arc of f avoiding e
      const bool f_in_e = in_open_arc(s.tail(f), s.tail(e), s.head(e), N);
      const std::pair<int, int> x = f_in_e ? std::make_pair(s.head(e), s.tail(e)) : std::make_pair(s.tail(e), s.head(e));
      const bool e_in_f = in_open_arc(s.tail(e), s.tail(f), s.head(f), N);
      const std::pair<int, int> y = e_in_f ? std::make_pair(s.head(f), s.tail(f)) : std::make_pair(s.tail(f), s.head(f));
      std::vector<bool> kb = arrows_inside(s, x.first, x.second), kg = arrows_inside(s, y.first, y.second);
      // middle: the two arcs between x and y
      std::vector<bool> kd(s.rank());
      for (int g = 0; g < s.rank(); ++g) {
        const auto in_mid = [&](int p) {
          return (in_open_arc(p, x.second, y.first, N) || in_open_arc(p, y.second, x.first, N));
        };
        kd[g] = g != e && g != f && in_mid(s.tail(g)) && in_mid(s.head(g));
      }
      // co-oriented: the tails bound a middle arc
      const int tx = s.tail(e), ty = s.tail(f);
      const bool co = (x.second == tx && y.first == ty) || (y.second == ty && x.first == tx);
      const Rational eps = co ? 1 : -1;
      const auto kB = norm.key(substring(s, kb)), kG = norm.key(substring(s, kg)), kD = norm.key(substring(s, kd));
      out.add({kB, kD, kG}, eps);
      out.add({kB, kG, kD}, -eps);
    }
  return out;
}

CojacobiReport cojacobi_check(const VirtualString& s, Normalizer& norm) {
  CojacobiReport r;
  const FormalSum nu = cobracket(s, norm);
  r.antisymmetric = nu.permuted({1, 0}) == nu * Rational(-1);
  const FormalSum j = iterated_cobracket(s, 2, norm);
  r.cyclic_sum_zero = (j + j.permuted({2, 0, 1}) + j.permuted({1, 2, 0})).is_zero();
  r.expansion_matches = cojacobi_expansion(s, norm) == j;
  return r;
}

CojacobiReport cojacobi_check(const VirtualString& s, NormalizeCaps caps) {
  Normalizer norm(caps);
  return cojacobi_check(s, norm);
}

// ---- comodule ----

FormalSum comodule_rho(const OpenString& mu, Normalizer& norm) {
  FormalSum out(true, norm.caps());
  for (int e = 0; e < mu.rank(); ++e) {
    const int lo = std::min(mu.tail(e), mu.head(e)), hi = std::max(mu.tail(e), mu.head(e));
    std::vector<bool> in(mu.rank()), out_(mu.rank());
    for (int f = 0; f < mu.rank(); ++f) {
      const auto inside = [&](int p) { return p > lo && p < hi; };
      const auto outside = [&](int p) { return p < lo || p > hi; };
      in[f] = inside(mu.tail(f)) && inside(mu.head(f));
      out_[f] = outside(mu.tail(f)) && outside(mu.head(f));
    }
    const auto ka = norm.key(closure(substring(mu, in)));
    const auto kb = norm.key(substring(mu, out_));
    out.add({ka, kb}, is_positive_arrow(mu, e) ? 1 : -1);
  }
  return out;
}

FormalSum comodule_rho(const OpenString& mu, NormalizeCaps caps) {
  Normalizer norm(caps);
  return comodule_rho(mu, norm);
}

FormalSum close_second(const FormalSum& x, Normalizer& norm) {
  FormalSum out(true, norm.caps());
  for (const auto& [m, c] : x.terms()) {
    if (m.factors.size() != 2 || !m.factors[1].open) throw PreconditionError("expected closed (x) open tensors");
    Monomial p = m;
    p.factors[1] = norm.key(closure(OpenString(from_canonical(m.factors[1].code).code())));
    out.add(std::move(p), c);
  }
  return out;
}

// ---- surgery and trees ----

bool OrientedTree::is_tree() const {
  if (vertices < 1 || static_cast<int>(edges.size()) != vertices - 1) return false;
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertices || b >= vertices) return false;
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool is_special(const Word& s, const std::vector<int>& F) {
  for (size_t i = 0; i < F.size(); ++i)
    for (size_t j = i + 1; j < F.size(); ++j)
      if (F[i] == F[j] || linking(s, F[i], F[j]) != 0) return false;
  return true;
}

SurgeryResult surgery_special(const VirtualString& s, const std::vector<int>& F) {
  for (int e : F)
    if (e < 0 || e >= s.rank()) throw PreconditionError("no arrow " + std::to_string(e));
  if (!is_special(s, F)) throw PreconditionError("surgery set contains a linked pair");
  const int N = s.length();
  std::vector<int> partner(N, -1);  // for endpoints of F
  std::vector<bool> inF(s.rank(), false);
  for (int e : F) {
    inF[e] = true;
    partner[s.tail(e)] = s.head(e);
    partner[s.head(e)] = s.tail(e);
  }
  SurgeryResult res;
  auto emit = [&](const std::vector<int>& positions) {
    std::vector<int> local(s.rank(), -1), cnt(s.rank(), 0);
    for (int p : positions) ++cnt[s.at(p).arrow];
    std::vector<Token> code;
    std::vector<int> ids;
    for (int p : positions) {
      const Token& t = s.at(p);
      if (cnt[t.arrow] != 2) continue;
      if (local[t.arrow] < 0) {
        local[t.arrow] = static_cast<int>(ids.size());
        ids.push_back(t.arrow);
      }
      code.push_back({local[t.arrow], t.role});
    }
    res.strings.emplace_back(std::move(code));
    res.arrows.push_back(std::move(ids));
  };
  if (F.empty()) {
    std::vector<int> all(N);
    std::iota(all.begin(), all.end(), 0);
    emit(all);
    res.tree.vertices = 1;
    res.edge_piece.assign(std::max(1, N), 0);
    return res;
  }
  // piece_of[p] for each F-endpoint p: the piece that starts right after p
  std::vector<int> piece_of(N, -1);
  res.edge_piece.assign(N, -1);
  for (int start = 0; start < N; ++start) {
    if (partner[start] < 0 || piece_of[start] >= 0) continue;
    const int id = static_cast<int>(res.strings.size());
    std::vector<int> positions;
    int p = start;
    do {
      piece_of[p] = id;
      res.edge_piece[p] = id;
      int q = (p + 1) % N;
      while (partner[q] < 0) {
        positions.push_back(q);
        res.edge_piece[q] = id;
        q = (q + 1) % N;
      }
      p = partner[q];
    } while (p != start);
    emit(positions);
  }
  res.tree.vertices = static_cast<int>(res.strings.size());
  for (int e : F) res.tree.edges.push_back({piece_of[s.tail(e)], piece_of[s.head(e)]});
  return res;
}

std::vector<long long> order_counts(const OrientedTree& t) {
  const int V = t.vertices;
  if (V > 20) throw CapExceeded("too many vertices for order counting");
  std::vector<unsigned> preds(V, 0);
  for (auto [a, b] : t.edges) preds[b] |= 1u << a;
  const unsigned full = (1u << V) - 1;
  // ways[S][k]: ordered partitions of S into k blocks, each block's predecessors earlier
  std::vector<std::vector<long long>> ways(1u << V, std::vector<long long>(V + 1, 0));
  ways[0][0] = 1;
  for (unsigned S = 1; S <= full; ++S) {
    // last block B of S: no vertex of S \ B depends on B, B internally independent
    for (unsigned B = S; B; B = (B - 1) & S) {
      bool ok = true;
      for (int v = 0; v < V && ok; ++v)
        if ((S >> v & 1) && (preds[v] & B)) ok = false;
      if (!ok) continue;
      const unsigned rest = S & ~B;
      for (int k = 1; k <= V; ++k) ways[S][k] += ways[rest][k - 1];
    }
  }
  return {ways[full].begin() + 1, ways[full].end()};
}

Rational eta(const OrientedTree& t) {
  const auto c = order_counts(t);
  Rational sum = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    const long long n = static_cast<long long>(i) + 1;
    sum += Rational(n % 2 == 1 ? c[i] : -c[i], n);
  }
  return sum;
}

namespace {
StringClassKey diagram_key(const VirtualString& s) {
  StringClassKey k;
  k.code = canonicalize(ArrowDiagram(s, std::vector<int>(s.rank(), 1)));
  return k;
}
}  // namespace

FormalSum zeta(const VirtualString& s) {
  FormalSum out(false);
  const int m = s.rank();
  if (m > 20) throw CapExceeded("rank too large for subset enumeration");
  std::vector<int> F;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    F.clear();
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) F.push_back(e);
    if (!is_special(s, F)) continue;
    const auto res = surgery_special(s, F);
    Monomial mono{static_cast<int>(F.size()), {}};
    for (const auto& piece : res.strings) mono.factors.push_back(diagram_key(piece));
    out.add(std::move(mono), eta(res.tree));
  }
  return out;
}

}  // namespace vstr
