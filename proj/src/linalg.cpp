#include "virtstring/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace vstr {

bool IntMatrix::is_zero() const {
  for (long long x : a)
    if (x) return false;
  return true;
}

namespace {

template <class T>
int bareiss(std::vector<std::vector<T>> m, int rows, int cols, bool& overflow) {
  overflow = false;
  int r = 0;
  T prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, long long>) {
          __int128 v = static_cast<__int128>(m[r][c]) * m[i][j] - static_cast<__int128>(m[i][c]) * m[r][j];
          v /= prev;
          if (v > INT64_MAX || v < INT64_MIN) {
            overflow = true;
            return 0;
          }
          m[i][j] = static_cast<long long>(v);
        } else {
          m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
        }
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

int rank_exact(const IntMatrix& mat) {
  std::vector<std::vector<long long>> m(mat.rows, std::vector<long long>(mat.cols));
  for (int i = 0; i < mat.rows; ++i)
    for (int j = 0; j < mat.cols; ++j) m[i][j] = mat(i, j);
  bool ovf = false;
  int r = bareiss(m, mat.rows, mat.cols, ovf);
  if (!ovf) return r;
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> big(mat.rows, std::vector<cpp_int>(mat.cols));
  for (int i = 0; i < mat.rows; ++i)
    for (int j = 0; j < mat.cols; ++j) big[i][j] = mat(i, j);
  return bareiss(big, mat.rows, mat.cols, ovf);
}

int mod(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod(int a, int p) {
  long long r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int rref_mod(std::vector<ModVec>& rows, int p) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    int iv = inv_mod(rows[r][c], p);
    for (int& x : rows[r]) x = static_cast<int>(static_cast<long long>(x) * iv % p);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || !rows[i][c]) continue;
      int f = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = mod(rows[i][j] - static_cast<long long>(f) * rows[r][j], p);
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

std::vector<ModVec> nullspace_mod(const std::vector<ModVec>& in, int ncols, int p) {
  std::vector<ModVec> rows = in;
  int r = rref_mod(rows, p);
  std::vector<int> pivcol(r, -1);
  std::vector<bool> is_piv(ncols, false);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < ncols; ++j)
      if (rows[i][j]) {
        pivcol[i] = j;
        is_piv[j] = true;
        break;
      }
  std::vector<ModVec> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    ModVec v(ncols, 0);
    v[f] = 1;
    for (int i = 0; i < r; ++i) v[pivcol[i]] = mod(-rows[i][f], p);
    out.push_back(v);
  }
  return out;
}

}  // namespace vstr
