#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vstr {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Role : std::uint8_t { Tail = 0, Head = 1 };

struct Token {
  int arrow = 0;
  Role role = Role::Tail;
  bool operator==(const Token&) const = default;
};

// Sequence of arrow endpoints. Arrow ids are dense 0..m-1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Token> code);

  int rank() const { return static_cast<int>(pos_.size()); }
  int length() const { return static_cast<int>(code_.size()); }
  const std::vector<Token>& code() const { return code_; }
  const Token& at(int p) const { return code_[p]; }
  int tail(int e) const { return pos_.at(e)[0]; }
  int head(int e) const { return pos_.at(e)[1]; }

  bool operator==(const Word& o) const { return code_ == o.code_; }

 protected:
  std::vector<Token> code_;
  std::vector<std::array<int, 2>> pos_;
};

class VirtualString : public Word {
 public:
  using Word::Word;
};

class OpenString : public Word {
 public:
  using Word::Word;
};

struct ArrowDiagram {
  VirtualString str;
  std::vector<int> sign;  // +1 / -1 per arrow

  ArrowDiagram() = default;
  ArrowDiagram(VirtualString s, std::vector<int> signs);
  int rank() const { return str.rank(); }
  bool operator==(const ArrowDiagram&) const = default;
};

struct CanonicalCode {
  std::vector<int> tokens;  // relabeled id*2+role, diagrams: id*4+role*2+neg
  bool is_signed = false;
  std::string key() const;
  bool empty() const { return tokens.empty(); }
  auto operator<=>(const CanonicalCode&) const = default;
};

template <class T>
struct Labeled {
  T value;
  std::vector<std::string> labels;  // label of each arrow id
};

Labeled<VirtualString> parse_closed_labeled(const std::string& text);
Labeled<OpenString> parse_open_labeled(const std::string& text);
Labeled<ArrowDiagram> parse_diagram_labeled(const std::string& text);
VirtualString parse_closed(const std::string& text);
OpenString parse_open(const std::string& text);
ArrowDiagram parse_diagram(const std::string& text);

std::vector<std::string> default_labels(int m);
std::string serialize(const Word& w, const std::vector<std::string>& labels = {});
std::string serialize(const ArrowDiagram& d, const std::vector<std::string>& labels = {});

CanonicalCode canonicalize(const VirtualString& s);
CanonicalCode canonicalize(const OpenString& s);
CanonicalCode canonicalize(const ArrowDiagram& d);
VirtualString from_canonical(const CanonicalCode& c);

// cyclic arc helpers, positions on a cycle of length n
bool in_open_arc(int x, int from, int to, int n);

int linking(const Word& s, int e, int f);
int n_index(const Word& s, int e);
std::vector<int> n_indices(const Word& s);

VirtualString opposite(const VirtualString& s);
VirtualString inverse(const VirtualString& s);
VirtualString product(const VirtualString& a, const VirtualString& b);
VirtualString family_pq(int p, int q);
// sigma given as images of 1..m
VirtualString family_perm(const std::vector<int>& sigma);
std::vector<int> block_perm(int p, int q);
VirtualString cable(int r, const VirtualString& s);
VirtualString covering(const VirtualString& s, int r);
OpenString covering(const OpenString& s, int r);

// keep the arrows with keep[e] true, ids compacted in order
VirtualString substring(const VirtualString& s, const std::vector<bool>& keep);
OpenString substring(const OpenString& s, const std::vector<bool>& keep);
ArrowDiagram substring(const ArrowDiagram& d, const std::vector<bool>& keep);

VirtualString closure(const OpenString& mu);
OpenString open_product(const OpenString& a, const OpenString& b);
OpenString open_reverse(const OpenString& mu);
bool is_positive_arrow(const OpenString& mu, int e);  // tail before head

int arcs_dot(const Word& s, std::pair<int, int> arc1, std::pair<int, int> arc2);

VirtualString rotate(const VirtualString& s, int k);

}  // namespace vstr
