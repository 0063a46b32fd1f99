#include "virtstring/string_core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace vstr {

Word::Word(std::vector<Token> code) : code_(std::move(code)) {
  if (code_.size() % 2 != 0) throw PreconditionError("odd number of endpoints");
  const int m = static_cast<int>(code_.size() / 2);
  pos_.assign(m, {-1, -1});
  for (int p = 0; p < static_cast<int>(code_.size()); ++p) {
    const Token& t = code_[p];
    if (t.arrow < 0 || t.arrow >= m) throw PreconditionError("arrow id out of range: " + std::to_string(t.arrow));
    int& slot = pos_[t.arrow][static_cast<int>(t.role)];
    if (slot != -1) throw PreconditionError("duplicate endpoint for arrow " + std::to_string(t.arrow));
    slot = p;
  }
}

ArrowDiagram::ArrowDiagram(VirtualString s, std::vector<int> signs) : str(std::move(s)), sign(std::move(signs)) {
  if (static_cast<int>(sign.size()) != str.rank()) throw PreconditionError("sign count differs from rank");
  for (int x : sign)
    if (x != 1 && x != -1) throw PreconditionError("sign must be +1 or -1");
}

// ---- parsing ----

namespace {

struct RawTok {
  std::string label;
  Role role;
  int sign;  // 0 none
  std::string text;
};

bool valid_label(const std::string& l) {
  if (l.empty()) return false;
  for (char c : l)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::vector<RawTok> lex(const std::string& text, bool diagram) {
  std::istringstream in(text);
  std::string w;
  std::vector<RawTok> out;
  while (in >> w) {
    RawTok t{w, Role::Tail, 0, w};
    if (t.label.back() == '\'') {
      t.role = Role::Head;
      t.label.pop_back();
    } else if (diagram) {
      char c = t.label.back();
      if (c == '+' || c == '-') {
        t.sign = c == '+' ? 1 : -1;
        t.label.pop_back();
      } else {
        throw ParseError("missing sign suffix on tail token '" + w + "'");
      }
    }
    if (!valid_label(t.label)) throw ParseError("bad token '" + w + "'");
    out.push_back(t);
  }
  return out;
}

struct Built {
  std::vector<Token> code;
  std::vector<std::string> labels;
  std::vector<int> signs;
};

Built build(const std::string& text, bool diagram) {
  auto toks = lex(text, diagram);
  Built b;
  std::unordered_map<std::string, int> id;
  std::vector<std::array<int, 2>> seen;
  for (const auto& t : toks) {
    auto it = id.find(t.label);
    int e;
    if (it == id.end()) {
      e = static_cast<int>(b.labels.size());
      id.emplace(t.label, e);
      b.labels.push_back(t.label);
      seen.push_back({0, 0});
      b.signs.push_back(0);
    } else {
      e = it->second;
    }
    int& c = seen[e][static_cast<int>(t.role)];
    if (c) throw ParseError("duplicate " + std::string(t.role == Role::Tail ? "tail" : "head") + " in token '" + t.text + "'");
    c = 1;
    if (t.role == Role::Tail) b.signs[e] = t.sign;
    b.code.push_back({e, t.role});
  }
  for (size_t e = 0; e < seen.size(); ++e) {
    if (!seen[e][0] || !seen[e][1])
      throw ParseError("label '" + b.labels[e] + "' occurs once; token '" + b.labels[e] + (seen[e][0] ? "" : "'") + "' has no partner");
  }
  return b;
}

}  // namespace

Labeled<VirtualString> parse_closed_labeled(const std::string& text) {
  auto b = build(text, false);
  return {VirtualString(std::move(b.code)), std::move(b.labels)};
}

Labeled<OpenString> parse_open_labeled(const std::string& text) {
  auto b = build(text, false);
  return {OpenString(std::move(b.code)), std::move(b.labels)};
}

Labeled<ArrowDiagram> parse_diagram_labeled(const std::string& text) {
  auto b = build(text, true);
  return {ArrowDiagram(VirtualString(std::move(b.code)), std::move(b.signs)), std::move(b.labels)};
}

VirtualString parse_closed(const std::string& text) { return parse_closed_labeled(text).value; }
OpenString parse_open(const std::string& text) { return parse_open_labeled(text).value; }
ArrowDiagram parse_diagram(const std::string& text) { return parse_diagram_labeled(text).value; }

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) {
    if (m <= 26) out.emplace_back(1, static_cast<char>('a' + i));
    else out.push_back("x" + std::to_string(i));
  }
  return out;
}

namespace {
std::string ser(const Word& w, const std::vector<int>* sign, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(w.rank());
  std::string out;
  for (const Token& t : w.code()) {
    if (!out.empty()) out += ' ';
    out += labels.at(t.arrow);
    if (t.role == Role::Head) out += '\'';
    else if (sign) out += (*sign)[t.arrow] > 0 ? '+' : '-';
  }
  return out;
}
}  // namespace

std::string serialize(const Word& w, const std::vector<std::string>& labels) { return ser(w, nullptr, labels); }
std::string serialize(const ArrowDiagram& d, const std::vector<std::string>& labels) { return ser(d.str, &d.sign, labels); }

// ---- canonical forms ----

std::string CanonicalCode::key() const {
  std::string out;
  for (int v : tokens) {
    if (!out.empty()) out += ' ';
    const int neg = is_signed ? (v & 1) : 0;
    if (is_signed) v >>= 1;
    out += std::to_string(v >> 1);
    if (v & 1) out += '\'';
    else if (is_signed) out += neg ? '-' : '+';
  }
  return out;
}

namespace {

// encode starting at rotation r with first-occurrence relabeling
void encode_from(const Word& w, const std::vector<int>* sign, int r, std::vector<int>& relabel, std::vector<int>& out) {
  const int n = w.length();
  std::fill(relabel.begin(), relabel.end(), -1);
  out.clear();
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = w.at((r + i) % n);
    if (relabel[t.arrow] < 0) relabel[t.arrow] = next++;
    int v = relabel[t.arrow] * 2 + static_cast<int>(t.role);
    if (sign) v = v * 2 + ((*sign)[t.arrow] < 0 ? 1 : 0);
    out.push_back(v);
  }
}

CanonicalCode canon(const Word& w, const std::vector<int>* sign, bool cyclic) {
  CanonicalCode best;
  if (w.length() == 0) return best;
  std::vector<int> relabel(w.rank()), cur;
  const int rots = cyclic ? w.length() : 1;
  for (int r = 0; r < rots; ++r) {
    encode_from(w, sign, r, relabel, cur);
    if (r == 0 || cur < best.tokens) best.tokens = cur;
  }
  return best;
}

}  // namespace

CanonicalCode canonicalize(const VirtualString& s) { return canon(s, nullptr, true); }
CanonicalCode canonicalize(const OpenString& s) { return canon(s, nullptr, false); }

CanonicalCode canonicalize(const ArrowDiagram& d) {
  CanonicalCode best;
  const Word& w = d.str;
  if (w.length() == 0) return best;
  std::vector<int> relabel(w.rank()), cur;
  for (int r = 0; r < w.length(); ++r) {
    encode_from(w, &d.sign, r, relabel, cur);
    if (r == 0 || cur < best.tokens) best.tokens = cur;
  }
  best.is_signed = true;
  return best;
}

VirtualString from_canonical(const CanonicalCode& c) {
  if (c.is_signed) throw PreconditionError("signed code given where a string code was expected");
  std::vector<Token> code;
  for (int v : c.tokens) code.push_back({v >> 1, static_cast<Role>(v & 1)});
  return VirtualString(std::move(code));
}

// ---- linking ----

bool in_open_arc(int x, int from, int to, int n) {
  int dx = ((x - from) % n + n) % n;
  int dt = ((to - from) % n + n) % n;
  return dx > 0 && dx < dt;
}

int linking(const Word& s, int e, int f) {
  if (e < 0 || e >= s.rank() || f < 0 || f >= s.rank()) throw PreconditionError("unknown arrow id");
  if (e == f) return 0;
  const int n = s.length();
  const int a = s.tail(e), b = s.head(e);
  const bool tf = in_open_arc(s.tail(f), a, b, n);
  const bool hf = in_open_arc(s.head(f), a, b, n);
  if (tf && !hf) return 1;
  if (!tf && hf) return -1;
  return 0;
}

int n_index(const Word& s, int e) {
  int sum = 0;
  for (int f = 0; f < s.rank(); ++f) sum += linking(s, e, f);
  return sum;
}

std::vector<int> n_indices(const Word& s) {
  std::vector<int> out(s.rank());
  for (int e = 0; e < s.rank(); ++e) out[e] = n_index(s, e);
  return out;
}

// ---- constructions ----

VirtualString opposite(const VirtualString& s) {
  std::vector<Token> c(s.code().rbegin(), s.code().rend());
  return VirtualString(std::move(c));
}

VirtualString inverse(const VirtualString& s) {
  std::vector<Token> c = s.code();
  for (auto& t : c) t.role = t.role == Role::Tail ? Role::Head : Role::Tail;
  return VirtualString(std::move(c));
}

namespace {
std::vector<Token> concat(const Word& a, const Word& b) {
  std::vector<Token> c = a.code();
  for (Token t : b.code()) {
    t.arrow += a.rank();
    c.push_back(t);
  }
  return c;
}
}  // namespace

VirtualString product(const VirtualString& a, const VirtualString& b) { return VirtualString(concat(a, b)); }

std::vector<int> block_perm(int p, int q) {
  if (p < 1 || q < 1) throw PreconditionError("p and q must be >= 1");
  std::vector<int> s(p + q);
  for (int i = 1; i <= p + q; ++i) s[i - 1] = i <= p ? i + q : i - p;
  return s;
}

VirtualString family_pq(int p, int q) { return family_perm(block_perm(p, q)); }

VirtualString family_perm(const std::vector<int>& sigma) {
  const int m = static_cast<int>(sigma.size());
  std::vector<bool> hit(m + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > m || hit[v]) throw PreconditionError("not a permutation");
    hit[v] = true;
  }
  // cyclic order a_1..a_m, b_m..b_1; arrow e_i = (a_i, b_sigma(i))
  std::vector<Token> c(2 * m);
  for (int i = 1; i <= m; ++i) {
    c[i - 1] = {i - 1, Role::Tail};
    c[2 * m - sigma[i - 1]] = {i - 1, Role::Head};
  }
  return VirtualString(std::move(c));
}

VirtualString cable(int r, const VirtualString& s) {
  if (r < 1) throw PreconditionError("cable needs r >= 1");
  std::vector<Token> c;
  for (const Token& t : s.code()) {
    for (int k = 0; k < r; ++k) {
      int copy = t.role == Role::Tail ? k : r - 1 - k;
      c.push_back({t.arrow * r + copy, t.role});
    }
  }
  return VirtualString(std::move(c));
}

namespace {
std::vector<Token> sub_code(const Word& s, const std::vector<bool>& keep, std::vector<int>* old_of_new = nullptr) {
  std::vector<int> nid(s.rank(), -1);
  int k = 0;
  for (int e = 0; e < s.rank(); ++e)
    if (keep[e]) {
      nid[e] = k++;
      if (old_of_new) old_of_new->push_back(e);
    }
  std::vector<Token> c;
  for (const Token& t : s.code())
    if (nid[t.arrow] >= 0) c.push_back({nid[t.arrow], t.role});
  return c;
}

std::vector<bool> cover_mask(const Word& s, int r) {
  if (r < 1) throw PreconditionError("covering needs r >= 1");
  auto n = n_indices(s);
  std::vector<bool> keep(s.rank());
  for (int e = 0; e < s.rank(); ++e) keep[e] = n[e] % r == 0;
  return keep;
}
}  // namespace

VirtualString substring(const VirtualString& s, const std::vector<bool>& keep) { return VirtualString(sub_code(s, keep)); }
OpenString substring(const OpenString& s, const std::vector<bool>& keep) { return OpenString(sub_code(s, keep)); }

ArrowDiagram substring(const ArrowDiagram& d, const std::vector<bool>& keep) {
  std::vector<int> old;
  auto c = sub_code(d.str, keep, &old);
  std::vector<int> sg;
  for (int e : old) sg.push_back(d.sign[e]);
  return ArrowDiagram(VirtualString(std::move(c)), std::move(sg));
}

VirtualString covering(const VirtualString& s, int r) { return substring(s, cover_mask(s, r)); }
OpenString covering(const OpenString& s, int r) { return substring(s, cover_mask(s, r)); }

VirtualString closure(const OpenString& mu) { return VirtualString(mu.code()); }
OpenString open_product(const OpenString& a, const OpenString& b) { return OpenString(concat(a, b)); }

OpenString open_reverse(const OpenString& mu) {
  std::vector<Token> c(mu.code().rbegin(), mu.code().rend());
  for (auto& t : c) t.role = t.role == Role::Tail ? Role::Head : Role::Tail;
  return OpenString(std::move(c));
}

bool is_positive_arrow(const OpenString& mu, int e) { return mu.tail(e) < mu.head(e); }

int arcs_dot(const Word& s, std::pair<int, int> arc1, std::pair<int, int> arc2) {
  const int n = s.length();
  int out = 0;
  for (int e = 0; e < s.rank(); ++e) {
    const int a = s.tail(e), b = s.head(e);
    if (in_open_arc(a, arc1.first, arc1.second, n) && in_open_arc(b, arc2.first, arc2.second, n)) ++out;
    if (in_open_arc(a, arc2.first, arc2.second, n) && in_open_arc(b, arc1.first, arc1.second, n)) --out;
  }
  return out;
}

VirtualString rotate(const VirtualString& s, int k) {
  const int n = s.length();
  if (n == 0) return s;
  std::vector<Token> c(n);
  for (int i = 0; i < n; ++i) c[i] = s.at(((i + k) % n + n) % n);
  return VirtualString(std::move(c));
}

}  // namespace vstr
