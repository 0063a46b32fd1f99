#include "virtstring/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "virtstring/based_matrix.hpp"
#include "virtstring/parallel.hpp"
#include "virtstring/u_poly.hpp"

namespace vstr {

namespace {

// token list plus optional signs; cyclic for closed strings
struct Sw {
  std::vector<Token> t;
  std::vector<int> sign;
  bool cyclic = true;
  bool is_signed = false;

  int n() const { return static_cast<int>(t.size()); }
  int m() const { return n() / 2; }
  int next(int p) const { return cyclic ? (p + 1) % n() : p + 1; }
  bool adjacent(int p, int q) const {
    if (p > q) std::swap(p, q);
    if (q == p + 1) return true;
    return cyclic && n() > 2 && p == 0 && q == n() - 1;
  }
  std::vector<std::array<int, 2>> pos() const {
    std::vector<std::array<int, 2>> out(m(), {-1, -1});
    for (int p = 0; p < n(); ++p) out[t[p].arrow][static_cast<int>(t[p].role)] = p;
    return out;
  }
};

Sw of(const Word& w, bool cyclic) { return Sw{w.code(), {}, cyclic, false}; }
Sw of(const ArrowDiagram& d) { return Sw{d.str.code(), d.sign, true, true}; }

int gap_count(const Sw& s) { return s.cyclic ? std::max(1, s.n()) : s.n() + 1; }

// insert token lists before positions g1 <= g2 (the first list goes first when equal)
Sw insert2(const Sw& s, int g1, const std::vector<Token>& l1, int g2, const std::vector<Token>& l2) {
  Sw out{{}, s.sign, s.cyclic, s.is_signed};
  for (int p = 0; p <= s.n(); ++p) {
    if (p == g1) out.t.insert(out.t.end(), l1.begin(), l1.end());
    if (p == g2) out.t.insert(out.t.end(), l2.begin(), l2.end());
    if (p < s.n()) out.t.push_back(s.t[p]);
  }
  return out;
}

Sw remove_arrows(const Sw& s, const std::vector<int>& gone) {
  std::vector<int> relabel(s.m(), 0);
  for (int e : gone) relabel[e] = -1;
  int next = 0;
  Sw out{{}, {}, s.cyclic, s.is_signed};
  for (int e = 0; e < s.m(); ++e)
    if (relabel[e] == 0) {
      relabel[e] = next++;
      if (s.is_signed) out.sign.push_back(s.sign[e]);
    }
  for (const Token& tk : s.t)
    if (relabel[tk.arrow] >= 0) out.t.push_back({relabel[tk.arrow], tk.role});
  return out;
}

bool is_tail(const Token& t) { return t.role == Role::Tail; }

// three pairwise disjoint adjacent pairs
bool valid_site(const Sw& s, const std::array<int, 3>& site) {
  std::vector<int> used;
  for (int p : site) {
    if (p < 0 || p >= s.n()) return false;
    if (!s.cyclic && p + 1 >= s.n()) return false;
    used.push_back(p);
    used.push_back(s.next(p));
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

std::array<std::array<Token, 2>, 3> pairs_at(const Sw& s, const std::array<int, 3>& site, bool swapped) {
  std::array<std::array<Token, 2>, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = {s.t[site[i]], s.t[s.next(site[i])]};
    if (swapped) std::swap(out[i][0], out[i][1]);
  }
  return out;
}

// every pair [head, tail], three distinct arrows forming a cycle
bool cminus_pattern(const std::array<std::array<Token, 2>, 3>& P) {
  std::vector<int> tails, heads;
  for (auto& pr : P) {
    if (is_tail(pr[0]) || !is_tail(pr[1])) return false;
    if (pr[0].arrow == pr[1].arrow) return false;
    heads.push_back(pr[0].arrow);
    tails.push_back(pr[1].arrow);
  }
  std::sort(tails.begin(), tails.end());
  std::sort(heads.begin(), heads.end());
  return tails == heads && std::adjacent_find(tails.begin(), tails.end()) == tails.end();
}

// A = [tail x1, tail x2], B = [head x1, tail x3], C = [head x2, head x3]
bool cplus_pattern(const std::array<std::array<Token, 2>, 3>& P) {
  int a = -1, b = -1, c = -1;
  for (int i = 0; i < 3; ++i) {
    const bool t0 = is_tail(P[i][0]), t1 = is_tail(P[i][1]);
    if (t0 && t1) a = i;
    else if (!t0 && t1) b = i;
    else if (!t0 && !t1) c = i;
  }
  if (a < 0 || b < 0 || c < 0) return false;
  const int x1 = P[a][0].arrow, x2 = P[a][1].arrow, x3 = P[b][1].arrow;
  if (x1 == x2 || x1 == x3 || x2 == x3) return false;
  return P[b][0].arrow == x1 && P[c][0].arrow == x2 && P[c][1].arrow == x3;
}

int negatives(const Sw& s, const std::array<std::array<Token, 2>, 3>& P) {
  int k = 0;
  for (auto& pr : P)
    if (is_tail(pr[0]) ? false : s.sign[pr[0].arrow] < 0) ++k;
  return k;
}

bool c_applies(const Sw& s, const MoveInstance& mv) {
  if (!valid_site(s, mv.site)) return false;
  const auto P = pairs_at(s, mv.site, mv.inverse);
  if (s.is_signed) return mv.kind == MoveKind::CMinus && cminus_pattern(P) && negatives(s, P) == 1;
  return mv.kind == MoveKind::CMinus ? cminus_pattern(P) : cplus_pattern(P);
}

std::vector<Token> b_first(int x, int y, int form) {
  std::vector<Token> l{{x, Role::Tail}, {y, Role::Head}};
  if (form & 1) std::swap(l[0], l[1]);
  return l;
}
std::vector<Token> b_second(int x, int y, int form) {
  std::vector<Token> l{{x, Role::Head}, {y, Role::Tail}};
  if (form & 2) std::swap(l[0], l[1]);
  return l;
}

[[noreturn]] void reject(const MoveInstance& mv, const std::string& why) {
  throw PreconditionError("move " + mv.describe() + " rejected: " + why);
}

Sw apply_sw(const Sw& s, const MoveInstance& mv) {
  const bool signed_ = s.is_signed;
  const int gaps = gap_count(s);
  auto check_gap = [&](int g) {
    if (g < 0 || g >= gaps) reject(mv, "gap out of range");
  };
  switch (mv.kind) {
    case MoveKind::A:
    case MoveKind::APlus: {
      if (signed_ && mv.kind == MoveKind::APlus) reject(mv, "diagrams have no (a)+ move");
      if (!mv.inverse) {
        check_gap(mv.gap1);
        const int e = s.m();
        std::vector<Token> l{{e, Role::Tail}, {e, Role::Head}};
        if (mv.kind == MoveKind::APlus) std::swap(l[0], l[1]);
        Sw out = insert2(s, mv.gap1, l, mv.gap1, {});
        if (signed_) out.sign.push_back(mv.sign);
        return out;
      }
      const int e = mv.site[0];
      if (e < 0 || e >= s.m()) reject(mv, "no such arrow");
      auto pos = s.pos();
      const bool ok = mv.kind == MoveKind::A ? s.next(pos[e][0]) == pos[e][1] : s.next(pos[e][1]) == pos[e][0];
      if (!ok) reject(mv, "arrow endpoints are not adjacent in the required order");
      return remove_arrows(s, {e});
    }
    case MoveKind::B: {
      if (!mv.inverse) {
        check_gap(mv.gap1);
        check_gap(mv.gap2);
        if (mv.gap1 > mv.gap2) reject(mv, "gaps out of order");
        const int x = s.m(), y = s.m() + 1;
        Sw out = insert2(s, mv.gap1, b_first(x, y, mv.form), mv.gap2, b_second(x, y, mv.form));
        if (signed_) {
          out.sign.push_back(mv.sign);
          out.sign.push_back(-mv.sign);
        }
        return out;
      }
      const int x = mv.site[0], y = mv.site[1];
      if (x < 0 || y < 0 || x >= s.m() || y >= s.m() || x == y) reject(mv, "no such arrow pair");
      auto pos = s.pos();
      if (!s.adjacent(pos[x][0], pos[y][1]) || !s.adjacent(pos[x][1], pos[y][0]))
        reject(mv, "arrow endpoints are not paired");
      if (signed_ && s.sign[x] == s.sign[y]) reject(mv, "arrows must have opposite signs");
      return remove_arrows(s, {x, y});
    }
    case MoveKind::CMinus:
    case MoveKind::CPlus: {
      if (!c_applies(s, mv)) reject(mv, "arrow pattern does not match");
      Sw out = s;
      for (int p : mv.site) std::swap(out.t[p], out.t[s.next(p)]);
      return out;
    }
  }
  return s;
}

std::vector<MoveInstance> enumerate_sw(const Sw& s, int rank_cap) {
  std::vector<MoveInstance> out;
  const bool signed_ = s.is_signed;
  const int m = s.m(), gaps = gap_count(s);
  const bool cap_ok1 = rank_cap < 0 || m + 1 <= rank_cap, cap_ok2 = rank_cap < 0 || m + 2 <= rank_cap;
  auto pos = s.pos();
  // removals
  for (int e = 0; e < m; ++e) {
    if (s.next(pos[e][0]) == pos[e][1]) {
      MoveInstance mv{MoveKind::A, true};
      mv.site[0] = e;
      out.push_back(mv);
    } else if (!signed_ && s.next(pos[e][1]) == pos[e][0]) {
      MoveInstance mv{MoveKind::APlus, true};
      mv.site[0] = e;
      out.push_back(mv);
    }
  }
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (s.adjacent(pos[x][0], pos[y][1]) && s.adjacent(pos[x][1], pos[y][0]) &&
          (!signed_ || s.sign[x] != s.sign[y])) {
        MoveInstance mv{MoveKind::B, true};
        mv.site = {x, y, 0};
        out.push_back(mv);
      }
  // c-moves
  const int n = s.n();
  const int starts = s.cyclic ? n : n - 1;
  if (n >= 6) {
    for (int p1 = 0; p1 < starts; ++p1)
      for (int p2 = p1 + 2; p2 < starts; ++p2)
        for (int p3 = p2 + 2; p3 < starts; ++p3) {
          if (s.cyclic && p1 == 0 && p3 == n - 1) continue;
          const std::array<int, 3> site{p1, p2, p3};
          for (bool inv : {false, true}) {
            const auto P = pairs_at(s, site, inv);
            MoveInstance mv;
            mv.site = site;
            mv.inverse = inv;
            if (cminus_pattern(P) && (!signed_ || negatives(s, P) == 1)) {
              mv.kind = MoveKind::CMinus;
              out.push_back(mv);
            } else if (!signed_ && cplus_pattern(P)) {
              mv.kind = MoveKind::CPlus;
              out.push_back(mv);
            }
          }
        }
  }
  // insertions
  const std::vector<int> signs = signed_ ? std::vector<int>{1, -1} : std::vector<int>{1};
  if (cap_ok1)
    for (int g = 0; g < gaps; ++g)
      for (int sg : signs) {
        MoveInstance mv{MoveKind::A, false, g};
        mv.sign = sg;
        out.push_back(mv);
        if (!signed_) {
          mv.kind = MoveKind::APlus;
          out.push_back(mv);
        }
      }
  if (cap_ok2)
    for (int g1 = 0; g1 < gaps; ++g1)
      for (int g2 = g1; g2 < gaps; ++g2)
        for (int form = 0; form < 4; ++form)
          for (int sg : signs) {
            MoveInstance mv{MoveKind::B, false, g1, g2, form};
            mv.sign = sg;
            out.push_back(mv);
          }
  return out;
}

std::vector<Token> decode(const CanonicalCode& c) {
  std::vector<Token> code;
  for (int v : c.tokens) code.push_back({v >> 1, static_cast<Role>(v & 1)});
  return code;
}

}  // namespace

std::string MoveInstance::describe() const {
  static const char* names[] = {"a", "a+", "b", "c", "c+"};
  std::ostringstream o;
  o << "(" << names[static_cast<int>(kind)] << ")" << (inverse ? "^-1" : "");
  if (kind == MoveKind::CMinus || kind == MoveKind::CPlus)
    o << " at " << site[0] << "," << site[1] << "," << site[2];
  else if (inverse)
    o << " on arrow " << site[0] << (kind == MoveKind::B ? "," + std::to_string(site[1]) : "");
  else
    o << " at gap " << gap1 << (kind == MoveKind::B ? "," + std::to_string(gap2) + " form " + std::to_string(form) : "");
  return o.str();
}

VirtualString apply_move(const VirtualString& s, const MoveInstance& mv) {
  return VirtualString(apply_sw(of(s, true), mv).t);
}
OpenString apply_move(const OpenString& s, const MoveInstance& mv) {
  return OpenString(apply_sw(of(s, false), mv).t);
}
std::vector<MoveInstance> enumerate_moves(const VirtualString& s, int rank_cap) {
  return enumerate_sw(of(s, true), rank_cap);
}
std::vector<MoveInstance> enumerate_moves(const OpenString& s, int rank_cap) {
  return enumerate_sw(of(s, false), rank_cap);
}
ArrowDiagram diagram_move(const ArrowDiagram& d, const MoveInstance& mv) {
  Sw r = apply_sw(of(d), mv);
  return ArrowDiagram(VirtualString(r.t), r.sign);
}
std::vector<MoveInstance> enumerate_diagram_moves(const ArrowDiagram& d, int rank_cap) {
  return enumerate_sw(of(d), rank_cap);
}

std::set<CanonicalCode> neighbors(const VirtualString& s, int rank_cap) {
  std::set<CanonicalCode> out;
  for (const auto& mv : enumerate_moves(s, rank_cap)) out.insert(canonicalize(apply_move(s, mv)));
  return out;
}

// ---- normalization ----

std::string StringClassKey::str() const {
  if (zero) return "0";
  return std::string(open ? "open:" : "") + "[" + code.key() + "]";
}

StringClassKey StringClassKey::zero_key() {
  StringClassKey k;
  k.zero = true;
  return k;
}

namespace {

// rank-ordered then lexicographic
bool code_less(const CanonicalCode& a, const CanonicalCode& b) {
  if (a.tokens.size() != b.tokens.size()) return a.tokens.size() < b.tokens.size();
  return a.tokens < b.tokens;
}

template <class W>
CanonicalCode canon_of(const W& w) { return canonicalize(w); }

template <class W>
W decode_as(const CanonicalCode& c) { return W(decode(c)); }

// the smallest result of a single rank-lowering move, if any
template <class W>
std::optional<CanonicalCode> best_reduction(const W& w) {
  std::optional<CanonicalCode> best;
  for (const auto& mv : enumerate_moves(w, w.rank())) {
    if (!mv.inverse || mv.kind == MoveKind::CMinus || mv.kind == MoveKind::CPlus) continue;
    CanonicalCode c = canon_of(apply_move(w, mv));
    if (!best || code_less(c, *best)) best = c;
  }
  return best;
}

template <class W>
StringClassKey normalize_impl(const W& input, const NormalizeCaps& caps, bool open) {
  StringClassKey key;
  key.open = open;
  const int zero_rank = open ? 0 : 2;
  CanonicalCode cur = canon_of(input);
  for (;;) {
    while (auto r = best_reduction(decode_as<W>(cur))) cur = *r;
    const int r0 = static_cast<int>(cur.tokens.size() / 2);
    if (r0 <= zero_rank && !open) return StringClassKey::zero_key();
    if (r0 == 0) {
      key.code = cur;
      return key;
    }
    // orbit at ranks r0..r0+slack
    const int cap = r0 + caps.slack;
    std::set<CanonicalCode> seen{cur};
    std::deque<CanonicalCode> queue{cur};
    std::optional<CanonicalCode> lower;
    CanonicalCode best = cur;
    long long nodes = 0;
    bool exact = true;
    while (!queue.empty()) {
      if (++nodes > caps.node_budget) {
        exact = false;
        break;
      }
      CanonicalCode c = queue.front();
      queue.pop_front();
      W w = decode_as<W>(c);
      for (const auto& mv : enumerate_moves(w, cap)) {
        CanonicalCode nc = canon_of(apply_move(w, mv));
        const int r = static_cast<int>(nc.tokens.size() / 2);
        if (r < r0) {
          if (!lower || code_less(nc, *lower)) lower = nc;
          continue;
        }
        if (seen.insert(nc).second) {
          queue.push_back(nc);
          if (code_less(nc, best)) best = nc;
        }
      }
    }
    if (lower) {
      cur = *lower;
      continue;
    }
    if (!open && r0 <= zero_rank) return StringClassKey::zero_key();
    key.code = best;
    key.exact = exact;
    return key;
  }
}

}  // namespace

StringClassKey Normalizer::compute(const VirtualString& s) { return normalize_impl(s, caps_, false); }
StringClassKey Normalizer::compute(const OpenString& s) { return normalize_impl(s, caps_, true); }

StringClassKey Normalizer::key(const VirtualString& s) {
  const CanonicalCode c = canonicalize(s);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = closed_.find(c);
    if (it != closed_.end()) return it->second;
  }
  StringClassKey k = compute(s);
  std::lock_guard<std::mutex> lk(mu_);
  closed_.emplace(c, k);
  return k;
}

StringClassKey Normalizer::key(const OpenString& s) {
  const CanonicalCode c = canonicalize(s);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = open_.find(c);
    if (it != open_.end()) return it->second;
  }
  StringClassKey k = compute(s);
  std::lock_guard<std::mutex> lk(mu_);
  open_.emplace(c, k);
  return k;
}

StringClassKey normalize(const VirtualString& s, NormalizeCaps caps) { return normalize_impl(s, caps, false); }

// ---- bfs ----

std::string to_string(BfsStatus s) {
  switch (s) {
    case BfsStatus::Equal: return "Equal";
    case BfsStatus::Distinct: return "Distinct";
    case BfsStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::string distinguishing_invariant(const VirtualString& a, const VirtualString& b) {
  const IntPoly ua = u(a), ub = u(b);
  if (!(ua == ub)) return "u: " + ua.to_string() + " vs " + ub.to_string();
  for (std::vector<int> rs : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const IntPoly ha = higher_u(a, rs), hb = higher_u(b, rs);
    if (!(ha == hb)) {
      std::string name = "u^(";
      for (size_t i = 0; i < rs.size(); ++i) name += (i ? "," : "") + std::to_string(rs[i]);
      return name + "): " + ha.to_string() + " vs " + hb.to_string();
    }
  }
  const int ra = rho(a), rb = rho(b);
  if (ra != rb) return "rho: " + std::to_string(ra) + " vs " + std::to_string(rb);
  const BasedMatrix pa = primitive_reduce(from_string(a)), pb = primitive_reduce(from_string(b));
  if (!is_isomorphic(pa, pb)) return "primitive based matrix: not isomorphic";
  return "";
}

namespace {

struct Node {
  VirtualString rep;
  CanonicalCode parent;
  MoveInstance move;
  bool root = false;
};

std::vector<MoveInstance> trace(const std::map<CanonicalCode, Node>& tree, CanonicalCode c) {
  std::vector<MoveInstance> path;
  for (;;) {
    const Node& nd = tree.at(c);
    if (nd.root) break;
    path.push_back(nd.move);
    c = nd.parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

BfsVerdict bfs_equal(const VirtualString& s1, const VirtualString& s2, int rank_cap, long long node_budget) {
  BfsVerdict v;
  v.rank_cap = rank_cap >= 0 ? rank_cap : std::max(s1.rank(), s2.rank()) + 2;
  const std::string w = distinguishing_invariant(s1, s2);
  if (!w.empty()) {
    v.status = BfsStatus::Distinct;
    v.witness = w;
    return v;
  }
  std::map<CanonicalCode, Node> tree[2];
  std::deque<CanonicalCode> queue[2];
  const VirtualString* start[2] = {&s1, &s2};
  for (int side = 0; side < 2; ++side) {
    const CanonicalCode c = canonicalize(*start[side]);
    tree[side].emplace(c, Node{*start[side], {}, {}, true});
    queue[side].push_back(c);
  }
  auto meet = [&](const CanonicalCode& c) {
    v.status = BfsStatus::Equal;
    v.path_from_first = trace(tree[0], c);
    v.path_from_second = trace(tree[1], c);
  };
  if (tree[1].count(queue[0].front())) {
    meet(queue[0].front());
    return v;
  }
  while (!queue[0].empty() || !queue[1].empty()) {
    // expand the smaller frontier one level
    int side = queue[0].empty() ? 1 : queue[1].empty() ? 0 : (queue[0].size() <= queue[1].size() ? 0 : 1);
    std::deque<CanonicalCode> level;
    level.swap(queue[side]);
    for (const CanonicalCode& c : level) {
      if (++v.nodes > node_budget) return v;
      const VirtualString rep = tree[side].at(c).rep;
      for (const auto& mv : enumerate_moves(rep, v.rank_cap)) {
        VirtualString nxt = apply_move(rep, mv);
        CanonicalCode nc = canonicalize(nxt);
        if (tree[side].count(nc)) continue;
        tree[side].emplace(nc, Node{std::move(nxt), c, mv, false});
        if (tree[1 - side].count(nc)) {
          meet(nc);
          return v;
        }
        queue[side].push_back(nc);
      }
    }
  }
  return v;
}

// ---- enumeration and classification ----

std::vector<CanonicalCode> enumerate_strings(int m, int max_rank) {
  if (m < 0) throw PreconditionError("rank must be non-negative");
  if (m > max_rank) throw CapExceeded("rank " + std::to_string(m) + " exceeds enumeration cap " + std::to_string(max_rank));
  std::set<CanonicalCode> out;
  std::vector<Token> cur;
  std::vector<int> open_state(m, 0);  // 0 unused, 1 tail placed, 2 head placed, 3 done
  int next = 0;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == 2 * m) {
      out.insert(canonicalize(VirtualString(cur)));
      return;
    }
    if (next < m) {
      const int e = next++;
      for (Role r : {Role::Tail, Role::Head}) {
        cur.push_back({e, r});
        open_state[e] = r == Role::Tail ? 1 : 2;
        self(self);
        cur.pop_back();
      }
      open_state[e] = 0;
      --next;
    }
    for (int e = 0; e < next; ++e) {
      if (open_state[e] != 1 && open_state[e] != 2) continue;
      const int was = open_state[e];
      cur.push_back({e, was == 1 ? Role::Head : Role::Tail});
      open_state[e] = 3;
      self(self);
      open_state[e] = was;
      cur.pop_back();
    }
  };
  rec(rec);
  return {out.begin(), out.end()};
}

namespace {
std::string invariant_summary(const VirtualString& s) {
  std::ostringstream o;
  o << "u=" << u(s).to_string() << " rho=" << rho(s);
  return o.str();
}
}  // namespace

Classification classify_rank(int m, NormalizeCaps caps, int max_rank) {
  const auto codes = enumerate_strings(m, max_rank);
  Normalizer norm(caps);
  std::vector<StringClassKey> keys(codes.size());
  parallel_for(codes.size(), [&](size_t i) { keys[i] = norm.key(from_canonical(codes[i])); });
  std::map<StringClassKey, size_t> index;
  Classification out;
  for (size_t i = 0; i < codes.size(); ++i) {
    auto it = index.find(keys[i]);
    if (it == index.end()) {
      it = index.emplace(keys[i], out.classes.size()).first;
      ClassInfo ci;
      ci.key = keys[i];
      ci.invariants = keys[i].zero ? invariant_summary(VirtualString()) : invariant_summary(from_canonical(keys[i].code));
      out.classes.push_back(ci);
    }
    out.classes[it->second].members.push_back(codes[i]);
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const ClassInfo& a, const ClassInfo& b) { return a.key < b.key; });
  for (size_t i = 0; i < out.classes.size(); ++i)
    for (size_t j = i + 1; j < out.classes.size(); ++j) {
      const auto rep = [](const ClassInfo& c) { return c.key.zero ? VirtualString() : from_canonical(c.key.code); };
      if (distinguishing_invariant(rep(out.classes[i]), rep(out.classes[j])).empty())
        out.unresolved.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

// ---- ribbon ----

namespace {
bool symmetric_under(const Word& s, const std::vector<int>& j) {
  for (int e = 0; e < s.rank(); ++e) {
    const Token& a = s.at(j[s.head(e)]);
    const Token& b = s.at(j[s.tail(e)]);
    if (a.role != Role::Tail || b.role != Role::Head || a.arrow != b.arrow) return false;
  }
  return true;
}
}  // namespace

bool is_ribbon(const VirtualString& s) {
  const int n = s.length();
  if (n == 0) return true;
  std::vector<int> j(n);
  for (int c = 1; c < n; c += 2) {
    for (int i = 0; i < n; ++i) j[i] = ((c - i) % n + n) % n;
    if (symmetric_under(s, j)) return true;
  }
  return false;
}

bool is_ribbon_open(const OpenString& mu) {
  const int n = mu.length();
  std::vector<int> j(n);
  for (int i = 0; i < n; ++i) j[i] = n - 1 - i;
  return symmetric_under(mu, j);
}

}  // namespace vstr
