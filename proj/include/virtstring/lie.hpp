#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "virtstring/homotopy.hpp"
#include "virtstring/polynomial.hpp"
#include "virtstring/string_core.hpp"

namespace vstr {

struct Monomial {
  int z = 0;
  std::vector<StringClassKey> factors;
  bool operator==(const Monomial& o) const { return z == o.z && factors == o.factors; }
  bool operator<(const Monomial& o) const {
    if (z != o.z) return z < o.z;
    return factors < o.factors;
  }
};

// rational combination of tensors (ordered) or products (sorted multisets)
class FormalSum {
 public:
  explicit FormalSum(bool tensor = true, std::optional<NormalizeCaps> caps = std::nullopt)
      : tensor_(tensor), caps_(caps) {}

  bool tensor() const { return tensor_; }
  const std::optional<NormalizeCaps>& caps() const { return caps_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // monomials with a zero factor are dropped
  void add(Monomial m, const Rational& c);
  void add(std::vector<StringClassKey> factors, const Rational& c, int z = 0);
  FormalSum& operator+=(const FormalSum& o);
  FormalSum operator+(const FormalSum& o) const;
  FormalSum operator-(const FormalSum& o) const;
  FormalSum operator*(const Rational& k) const;
  // product in the polynomial algebra (multisets only)
  FormalSum operator*(const FormalSum& o) const;
  bool operator==(const FormalSum& o) const;  // throws when caps differ

  // tensor factor i of the result is factor perm[i] of the input
  FormalSum permuted(const std::vector<int>& perm) const;
  std::string to_string() const;

 private:
  void check_compatible(const FormalSum& o) const;
  bool tensor_;
  std::optional<NormalizeCaps> caps_;
  std::map<Monomial, Rational> terms_;
};

// arrows with both endpoints strictly inside the arc from -> to
std::vector<bool> arrows_inside(const Word& s, int from, int to);

FormalSum cobracket(const VirtualString& s, Normalizer& norm);
FormalSum cobracket(const VirtualString& s, NormalizeCaps caps = {});
// nu^(n) = (id^(n-1) x nu) ... (id x nu) nu, computed on substrings
FormalSum iterated_cobracket(const VirtualString& s, int n, Normalizer& norm);
// sum of z(e,f) over ordered unlinked pairs
FormalSum cojacobi_expansion(const VirtualString& s, Normalizer& norm);

struct CojacobiReport {
  bool antisymmetric = false;   // Perm nu = -nu
  bool cyclic_sum_zero = false;  // (id + tau + tau^2)(id x nu) nu = 0
  bool expansion_matches = false;
  bool ok() const { return antisymmetric && cyclic_sum_zero && expansion_matches; }
};
CojacobiReport cojacobi_check(const VirtualString& s, Normalizer& norm);
CojacobiReport cojacobi_check(const VirtualString& s, NormalizeCaps caps = {});

// closed factor first, open factor second
FormalSum comodule_rho(const OpenString& mu, Normalizer& norm);
FormalSum comodule_rho(const OpenString& mu, NormalizeCaps caps = {});
// (id x cl) on two-factor tensors whose second factor is open
FormalSum close_second(const FormalSum& x, Normalizer& norm);

struct OrientedTree {
  int vertices = 1;
  std::vector<std::pair<int, int>> edges;  // (from, to)
  bool is_tree() const;
};

struct SurgeryResult {
  std::vector<VirtualString> strings;
  std::vector<std::vector<int>> arrows;  // original arrow id of each piece arrow
  OrientedTree tree;
  std::vector<int> edge_piece;  // piece of the edge leaving each position
};
// pieces ordered by their first position after an endpoint of F
SurgeryResult surgery_special(const VirtualString& s, const std::vector<int>& F);
bool is_special(const Word& s, const std::vector<int>& F);

// sum_n (-1)^(n+1)/n #C_n, any oriented forest
Rational eta(const OrientedTree& t);
// #C_n for n = 1..vertices
std::vector<long long> order_counts(const OrientedTree& t);

// factors are signed diagram codes, all signs +
FormalSum zeta(const VirtualString& s);

}  // namespace vstr
