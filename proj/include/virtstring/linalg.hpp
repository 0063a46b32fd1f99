#pragma once

#include <cstdint>
#include <vector>

namespace vstr {

// dense row-major integer matrix
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;
  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  long long& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool is_zero() const;
};

// exact rank over Q (fraction-free elimination)
int rank_exact(const IntMatrix& m);

// mod p helpers, entries kept in 0..p-1
using ModVec = std::vector<int>;
int mod(long long x, int p);
int inv_mod(int a, int p);
// row reduce in place, returns rank; rows become RREF basis
int rref_mod(std::vector<ModVec>& rows, int p);
// basis of {x : rows * x = 0}
std::vector<ModVec> nullspace_mod(const std::vector<ModVec>& rows, int ncols, int p);

}  // namespace vstr
