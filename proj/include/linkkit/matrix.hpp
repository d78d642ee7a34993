#pragma once
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linkkit/bigint.hpp"

namespace linkkit {

struct IntMatrix {
  int n = 0, m = 0;
  std::vector<BigInt> a;  // row major

  IntMatrix() = default;
  IntMatrix(int rows, int cols) : n(rows), m(cols), a(size_t(rows) * cols, 0) {}
  BigInt& at(int i, int j) { return a[size_t(i) * m + j]; }
  const BigInt& at(int i, int j) const { return a[size_t(i) * m + j]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix transposed() const {
    IntMatrix r(m, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) {
      os << "[";
      for (int j = 0; j < m; ++j) {
        if (j) os << ",";
        os << at(i, j).str();
      }
      os << "]";
      if (i + 1 < n) os << ",";
    }
    os << "]";
    return os.str();
  }
};

inline IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix r(x.n, x.m);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

// exact determinant, fraction-free Bareiss elimination
inline BigInt det(IntMatrix mat) {
  if (mat.n != mat.m) return 0;
  int n = mat.n;
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (mat.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (mat.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(mat.at(k, j), mat.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        mat.at(i, j) = (mat.at(i, j) * mat.at(k, k) - mat.at(i, k) * mat.at(k, j)) / prev;
    prev = mat.at(k, k);
  }
  return sign > 0 ? mat.at(n - 1, n - 1) : -mat.at(n - 1, n - 1);
}

// solve M x = b exactly over the rationals; nullopt when singular
inline std::optional<std::vector<BigRat>> rat_solve(const IntMatrix& mat,
                                                    const std::vector<BigInt>& b) {
  int n = mat.n;
  std::vector<std::vector<BigRat>> w(n, std::vector<BigRat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = BigRat(mat.at(i, j));
    w[i][n] = BigRat(b[i]);
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (w[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    std::swap(w[c], w[p]);
    for (int i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      BigRat f = w[i][c] / w[c][c];
      for (int j = c; j <= n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  std::vector<BigRat> x(n);
  for (int i = 0; i < n; ++i) x[i] = w[i][n] / w[i][i];
  return x;
}

}  // namespace linkkit
