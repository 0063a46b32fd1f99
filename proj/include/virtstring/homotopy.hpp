#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "virtstring/string_core.hpp"

namespace vstr {

enum class MoveKind { A, APlus, B, CMinus, CPlus };

struct MoveInstance {
  MoveKind kind = MoveKind::A;
  bool inverse = false;
  int gap1 = 0, gap2 = 0;  // forward a/b: insert before these token positions
  int form = 0;            // forward b: bit0 order of the first pair, bit1 order of the second
  std::array<int, 3> site{};  // inverse a: arrow; inverse b: two arrows; c: three pair starts
  int sign = 1;            // diagrams: sign of the added arrow (b: of the first arrow)
  std::string describe() const;
};

// moves on closed strings, open strings and signed diagrams
VirtualString apply_move(const VirtualString& s, const MoveInstance& mv);
OpenString apply_move(const OpenString& s, const MoveInstance& mv);
std::vector<MoveInstance> enumerate_moves(const VirtualString& s, int rank_cap);
std::vector<MoveInstance> enumerate_moves(const OpenString& s, int rank_cap);

// diagram moves (a)_ad, (b)_ad, (c)_ad and their inverses
ArrowDiagram diagram_move(const ArrowDiagram& d, const MoveInstance& mv);
std::vector<MoveInstance> enumerate_diagram_moves(const ArrowDiagram& d, int rank_cap);

std::set<CanonicalCode> neighbors(const VirtualString& s, int rank_cap);

struct StringClassKey {
  bool zero = false;
  bool open = false;
  bool exact = true;  // orbit search finished inside its budget
  CanonicalCode code;
  bool operator==(const StringClassKey& o) const { return zero == o.zero && open == o.open && code == o.code; }
  bool operator<(const StringClassKey& o) const {
    if (zero != o.zero) return zero;
    if (open != o.open) return !open;
    return code < o.code;
  }
  std::string str() const;
  static StringClassKey zero_key();
};

struct NormalizeCaps {
  int slack = 0;              // extra rank allowed while searching the orbit
  long long node_budget = 200000;
  bool operator==(const NormalizeCaps&) const = default;
};

// memoized normalization; thread-safe
class Normalizer {
 public:
  explicit Normalizer(NormalizeCaps caps = {}) : caps_(caps) {}
  StringClassKey key(const VirtualString& s);
  StringClassKey key(const OpenString& s);
  const NormalizeCaps& caps() const { return caps_; }

 private:
  StringClassKey compute(const VirtualString& s);
  StringClassKey compute(const OpenString& s);
  NormalizeCaps caps_;
  std::mutex mu_;
  std::map<CanonicalCode, StringClassKey> closed_, open_;
};

StringClassKey normalize(const VirtualString& s, NormalizeCaps caps = {});

enum class BfsStatus { Equal, Distinct, Unknown };
struct BfsVerdict {
  BfsStatus status = BfsStatus::Unknown;
  // Equal: moves from s1 and from s2 reaching homeomorphic strings
  std::vector<MoveInstance> path_from_first, path_from_second;
  std::string witness;  // Distinct: invariant name and values
  long long nodes = 0;
  int rank_cap = 0;
};
BfsVerdict bfs_equal(const VirtualString& s1, const VirtualString& s2, int rank_cap = -1, long long node_budget = 200000);
std::string to_string(BfsStatus s);
// invariant comparison only; empty when no invariant separates
std::string distinguishing_invariant(const VirtualString& a, const VirtualString& b);

std::vector<CanonicalCode> enumerate_strings(int m, int max_rank = 6);

struct ClassInfo {
  StringClassKey key;
  std::vector<CanonicalCode> members;
  std::string invariants;  // u, rho, ...
};
struct Classification {
  std::vector<ClassInfo> classes;
  std::vector<std::pair<int, int>> unresolved;  // class pairs with identical invariants
};
Classification classify_rank(int m, NormalizeCaps caps = {}, int max_rank = 6);

bool is_ribbon(const VirtualString& s);
bool is_ribbon_open(const OpenString& mu);

}  // namespace vstr
