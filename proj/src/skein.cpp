#include "virtstring/skein.hpp"

#include <algorithm>
#include <functional>

#include "virtstring/u_poly.hpp"

namespace vstr {

std::vector<Edge> edges(const ArrowDiagram& d) {
  const int N = d.str.length();
  if (N == 0) return {Edge{}};
  std::vector<Edge> out;
  for (int p = 0; p < N; ++p) out.push_back({p, (p + 1) % N});
  return out;
}

int edge_in(const ArrowDiagram& d, int p) {
  const int N = d.str.length();
  return (p - 1 + N) % N;
}
int edge_out(const ArrowDiagram&, int p) { return p; }

bool is_labeling(const ArrowDiagram& d, const std::vector<int>& f) {
  const Word& w = d.str;
  if (static_cast<int>(f.size()) != std::max(1, w.length())) return false;
  for (int e = 0; e < w.rank(); ++e) {
    const int am = f[edge_in(d, w.tail(e))], ap = f[edge_out(d, w.tail(e))];
    const int bm = f[edge_in(d, w.head(e))], bp = f[edge_out(d, w.head(e))];
    const bool plain = ap == am && bp == bm;
    const bool cut = ap == bm && am == bp && ap != am && ((am - ap > 0) == (d.sign[e] > 0));
    if (!plain && !cut) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<int>> special_subsets(const Word& w) {
  const int m = w.rank();
  if (m > 20) throw CapExceeded("rank too large for subset enumeration");
  std::vector<std::vector<int>> out;
  std::vector<int> F;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    F.clear();
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) F.push_back(e);
    if (is_special(w, F)) out.push_back(F);
  }
  return out;
}

struct Cut {
  std::vector<int> C;
  SurgeryResult res;
  int minus = 0;
};

// label maps on the pieces of a cut: + arrows increase along their tree edge, - arrows decrease
void assign(const ArrowDiagram& d, const Cut& cut, int n, bool bijective,
            const std::function<void(const std::vector<int>&)>& visit) {
  const int k = cut.res.tree.vertices;
  std::vector<int> g(k, 0);
  std::vector<bool> used(n + 1, false);
  std::function<void(int)> rec = [&](int v) {
    if (v == k) {
      visit(g);
      return;
    }
    for (int lab = 1; lab <= n; ++lab) {
      if (bijective && used[lab]) continue;
      g[v] = lab;
      bool ok = true;
      for (size_t i = 0; i < cut.C.size() && ok; ++i) {
        auto [a, b] = cut.res.tree.edges[i];
        if (a > v || b > v) continue;
        ok = d.sign[cut.C[i]] > 0 ? g[a] < g[b] : g[a] > g[b];
      }
      if (!ok) continue;
      used[lab] = true;
      rec(v + 1);
      used[lab] = false;
    }
  };
  rec(0);
}

std::vector<Cut> cuts(const ArrowDiagram& d) {
  std::vector<Cut> out;
  for (auto& C : special_subsets(d.str)) {
    Cut c{C, surgery_special(d.str, C), 0};
    for (int e : C) c.minus += d.sign[e] < 0;
    out.push_back(std::move(c));
  }
  return out;
}

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// string with only the arrows whose four adjacent edges carry label i
VirtualString label_piece(const ArrowDiagram& d, const std::vector<int>& f, int i) {
  const Word& w = d.str;
  std::vector<bool> keep(w.rank());
  for (int e = 0; e < w.rank(); ++e)
    keep[e] = f[edge_in(d, w.tail(e))] == i && f[edge_out(d, w.tail(e))] == i && f[edge_in(d, w.head(e))] == i &&
              f[edge_out(d, w.head(e))] == i;
  return substring(d.str, keep);
}

// calls visit(labeling, n) for every f in lbl_n, all n
void for_each_lbl(const ArrowDiagram& d, const std::function<void(const Labeling&, int)>& visit) {
  for (const auto& cut : cuts(d)) {
    const int n = static_cast<int>(cut.C.size()) + 1;
    assign(d, cut, n, true, [&](const std::vector<int>& g) {
      Labeling L;
      for (int piece : cut.res.edge_piece) L.f.push_back(g[piece]);
      L.cutting = cut.C;
      L.minus = cut.minus;
      visit(L, n);
    });
  }
}

}  // namespace

std::vector<Labeling> enumerate_labelings(const ArrowDiagram& d, int n, LabelMode mode) {
  if (n < 1) throw PreconditionError("labelings need n >= 1");
  std::vector<Labeling> out;
  for (const auto& cut : cuts(d)) {
    const int k = cut.res.tree.vertices;
    if (mode == LabelMode::lbl && k != n) continue;
    assign(d, cut, n, mode == LabelMode::lbl, [&](const std::vector<int>& g) {
      Labeling L;
      for (int piece : cut.res.edge_piece) L.f.push_back(g[piece]);
      L.cutting = cut.C;
      L.minus = cut.minus;
      out.push_back(std::move(L));
    });
  }
  std::sort(out.begin(), out.end(), [](const Labeling& a, const Labeling& b) { return a.f < b.f; });
  return out;
}

FormalSum nabla(const ArrowDiagram& d, Normalizer& norm) {
  FormalSum out(false, norm.caps());
  for_each_lbl(d, [&](const Labeling& L, int n) {
    Monomial m{n - 1, {}};
    for (int i = 1; i <= n; ++i) {
      m.factors.push_back(norm.key(label_piece(d, L.f, i)));
      if (m.factors.back().zero) return;
    }
    out.add(std::move(m), Rational(L.minus % 2 ? -1 : 1) / factorial(n));
  });
  return out;
}

FormalSum nabla(const ArrowDiagram& d, NormalizeCaps caps) {
  Normalizer norm(caps);
  return nabla(d, norm);
}

RatPoly2 nabla_ut(const ArrowDiagram& d) {
  RatPoly2 out;
  for_each_lbl(d, [&](const Labeling& L, int n) {
    RatPoly2 term;
    term.add_term(n - 1, 0, Rational(L.minus % 2 ? -1 : 1) / factorial(n));
    for (int i = 1; i <= n && !term.is_zero(); ++i) term = term * RatPoly2::from_t(u(label_piece(d, L.f, i)));
    out += term;
  });
  return out;
}

ArrowDiagram negate_arrow(const ArrowDiagram& d, int e) {
  ArrowDiagram r = d;
  r.sign.at(e) = -r.sign.at(e);
  return r;
}

ArrowDiagram skein_part(const ArrowDiagram& d, int e, bool first) {
  const Word& w = d.str;
  const auto keep = first ? arrows_inside(w, w.tail(e), w.head(e)) : arrows_inside(w, w.head(e), w.tail(e));
  return substring(d, keep);
}

namespace {
void require_plus(const ArrowDiagram& d, int e) {
  if (e < 0 || e >= d.rank()) throw PreconditionError("no arrow " + std::to_string(e));
  if (d.sign[e] != 1) throw PreconditionError("skein relation needs a + arrow");
}
}  // namespace

bool skein_check(const ArrowDiagram& d, int e, Normalizer& norm) {
  require_plus(d, e);
  FormalSum z(false, norm.caps());
  z.add(Monomial{1, {}}, 1);
  const FormalSum rhs = nabla(negate_arrow(d, e), norm) + z * nabla(skein_part(d, e, true), norm) * nabla(skein_part(d, e, false), norm);
  return nabla(d, norm) == rhs;
}

bool skein_check_ut(const ArrowDiagram& d, int e) {
  require_plus(d, e);
  RatPoly2 z;
  z.add_term(1, 0, 1);
  return nabla_ut(d) == nabla_ut(negate_arrow(d, e)) + z * nabla_ut(skein_part(d, e, true)) * nabla_ut(skein_part(d, e, false));
}

ArrowDiagram knot_covering(const ArrowDiagram& d, int r) {
  if (r < 1) throw PreconditionError("covering degree must be >= 1");
  const auto n = n_indices(d.str);
  std::vector<bool> keep(d.rank());
  for (int e = 0; e < d.rank(); ++e) keep[e] = n[e] % r == 0;
  return substring(d, keep);
}

std::vector<DeltaTerm> delta_terms(const ArrowDiagram& d, int n) {
  if (n < 2) throw PreconditionError("delta terms need n >= 2");
  std::vector<DeltaTerm> out;
  for (const auto& cut : cuts(d)) {
    std::vector<ArrowDiagram> circles;
    for (size_t i = 0; i < cut.res.strings.size(); ++i) {
      std::vector<int> sg;
      for (int e : cut.res.arrows[i]) sg.push_back(d.sign[e]);
      circles.emplace_back(cut.res.strings[i], sg);
    }
    assign(d, cut, n, false, [&](const std::vector<int>& g) {
      DeltaTerm t;
      t.sign = cut.minus % 2 ? -1 : 1;
      t.z = static_cast<int>(cut.C.size());
      t.factors.assign(n, {});
      for (size_t i = 0; i < circles.size(); ++i) t.factors[g[i] - 1].push_back(circles[i]);
      out.push_back(std::move(t));
    });
  }
  return out;
}

}  // namespace vstr
