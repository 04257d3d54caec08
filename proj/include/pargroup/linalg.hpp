#pragma once

#include <Eigen/Core>

#include "pargroup/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<pargroup::Rat> : GenericNumTraits<pargroup::Rat> {
  using Real = pargroup::Rat;
  using NonInteger = pargroup::Rat;
  using Nested = pargroup::Rat;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return pargroup::Rat(0); }
  static inline Real dummy_precision() { return pargroup::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace pargroup {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_symmetric(const RatMatrix& m) { return m == m.transpose(); }

// Sylvester test via LDL^T elimination without pivoting: a symmetric matrix
// is positive definite iff every pivot stays strictly positive.
bool ldlt_positive_definite(const RatMatrix& m);

// Exact Gauss-Jordan inverse; throws Error(InvalidInput) on a singular input.
RatMatrix exact_inverse(const RatMatrix& m);

}  // namespace pargroup
