#include "pargroup/linalg.hpp"

#include "pargroup/error.hpp"

namespace pargroup {

bool ldlt_positive_definite(const RatMatrix& m) {
  if (m.rows() != m.cols() || !is_symmetric(m)) return false;
  const Eigen::Index n = m.rows();
  RatMatrix a = m;  // only the lower triangle is maintained
  for (Eigen::Index k = 0; k < n; ++k) {
    const Rat pivot = a(k, k);
    if (!(pivot > Rat(0))) return false;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rat f = a(i, k) / pivot;
      for (Eigen::Index j = k + 1; j <= i; ++j) a(i, j) -= f * a(j, k);
    }
  }
  return true;
}

RatMatrix exact_inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::InvalidInput, "inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) { pivot = r; break; }
    }
    if (pivot < 0) throw Error(Errc::InvalidInput, "singular matrix");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rat d = a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rat f = a(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace pargroup
