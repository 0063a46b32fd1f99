#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "virtstring/linalg.hpp"
#include "virtstring/polynomial.hpp"
#include "virtstring/string_core.hpp"

namespace vstr {

class BasedMatrix {
 public:
  BasedMatrix() : BasedMatrix(1, 0) {}
  BasedMatrix(int n, int s);
  static BasedMatrix from_rows(const std::vector<std::vector<long long>>& rows, int s = 0);

  int size() const { return n_; }
  int s() const { return s_; }
  long long operator()(int i, int j) const { return b_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, long long v);  // also sets (j,i) to -v
  std::vector<std::vector<long long>> rows() const;
  IntMatrix matrix() const;
  bool operator==(const BasedMatrix&) const = default;

  // basepoint moved to index 0, others in original order
  BasedMatrix restricted(const std::vector<int>& keep) const;
  std::string to_string() const;

 private:
  int n_, s_;
  std::vector<long long> b_;
};

struct GradedBasedMatrix {
  BasedMatrix base;
  std::vector<int> grade;  // +1 / -1, 0 at s
  bool operator==(const GradedBasedMatrix&) const = default;
};

// index 0 = s, index e+1 = arrow e
BasedMatrix from_string(const VirtualString& s);
GradedBasedMatrix from_open_string(const OpenString& mu);

struct Reduction {
  BasedMatrix matrix;
  std::vector<int> kept;  // original indices, s first
};
Reduction primitive_reduce_tracked(const BasedMatrix& t);
BasedMatrix primitive_reduce(const BasedMatrix& t);
GradedBasedMatrix primitive_reduce(const GradedBasedMatrix& t);
// deletes eligible elements in a random order (for confluence testing)
BasedMatrix primitive_reduce_random(const BasedMatrix& t, std::mt19937_64& rng);

int rho(const VirtualString& s);
BasedMatrix negate(const BasedMatrix& t);
BasedMatrix dash(const BasedMatrix& t);
GradedBasedMatrix negate(const GradedBasedMatrix& t);
int rank_b(const BasedMatrix& t);
int genus(const VirtualString& s);

long long v_k(const BasedMatrix& t, long long k);
long long v_kA(const BasedMatrix& t, long long k, std::vector<long long> A);
IntPoly u_of_matrix(const BasedMatrix& t);
std::pair<IntPoly, IntPoly> u_of_graded(const GradedBasedMatrix& t);

bool is_isomorphic(const BasedMatrix& a, const BasedMatrix& b);
bool is_isomorphic(const GradedBasedMatrix& a, const GradedBasedMatrix& b);

GradedBasedMatrix graded_sum(const GradedBasedMatrix& a, const GradedBasedMatrix& b);

// M1/M2/M3 extensions, new elements appended
BasedMatrix extend_annihilating(const BasedMatrix& t);
BasedMatrix extend_core(const BasedMatrix& t);
// row gives b(g1,h) for existing h != s, and b(g1,s) as row[s]
BasedMatrix extend_complementary(const BasedMatrix& t, const std::vector<long long>& row);

}  // namespace vstr
