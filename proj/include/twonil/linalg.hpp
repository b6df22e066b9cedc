#pragma once

// Dense exact linear algebra on top of Eigen. Every matrix type is templated
// on its scalar; the default scalar is the GMP rational `Rational`.

#include <gmpxx.h>

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace twonil {

using Rational = mpq_class;
using Integer = mpz_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

/// The n x n elementary matrix E_{row,col} (1-based indices).
template <typename Scalar = Rational>
Matrix<Scalar> elementary(int n, int row, int col) {
  if (row < 1 || row > n || col < 1 || col > n) {
    throw std::out_of_range("elementary: index out of range");
  }
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  m(row - 1, col - 1) = Scalar(1);
  return m;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) != Scalar(0)) return false;
    }
  }
  return true;
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a,
                   const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (a(r, c) != b(r, c)) return false;
    }
  }
  return true;
}

/// True iff every entry on or below the diagonal vanishes.
template <typename Derived>
bool is_strictly_upper(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = c; r < m.rows(); ++r) {
      if (m(r, c) != Scalar(0)) return false;
    }
  }
  return true;
}

template <typename Derived>
bool is_upper(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = c + 1; r < m.rows(); ++r) {
      if (m(r, c) != Scalar(0)) return false;
    }
  }
  return true;
}

namespace detail {

// Scales each row by the lcm of its denominators so the rank computation can
// run over the integers.
template <typename Derived>
IntegerMatrix integral_rows(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  IntegerMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      Integer denom_lcm = 1;
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                m(r, c).get_den_mpz_t());
      }
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const Rational& x = m(r, c);
        out(r, c) = x.get_num() * (denom_lcm / x.get_den());
      }
    } else {
      for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = Integer(m(r, c));
    }
  }
  return out;
}

}  // namespace detail

/// Exact rank by Bareiss fraction-free elimination. Rational inputs have
/// their row denominators cleared first; row scaling does not change rank.
template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
  IntegerMatrix a = detail::integral_rows(m);
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Integer prev_pivot = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    prev_pivot = a(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

/// Incrementally maintained row-echelon basis of a subspace of Scalar^dim.
/// Used where many independence queries run against a growing span.
template <typename Scalar = Rational>
class SpanTracker {
 public:
  explicit SpanTracker(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index ambient_dim() const { return dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  /// Adds v to the span; returns true iff v was independent.
  bool insert(const Vector<Scalar>& v) {
    Vector<Scalar> w = reduce(v);
    Eigen::Index lead = 0;
    while (lead < dim_ && w(lead) == Scalar(0)) ++lead;
    if (lead == dim_) return false;
    const Scalar inv = Scalar(1) / w(lead);
    for (Eigen::Index c = lead; c < dim_; ++c) w(c) *= inv;
    rows_.push_back({lead, std::move(w)});
    return true;
  }

  bool contains(const Vector<Scalar>& v) const {
    Vector<Scalar> w = reduce(v);
    for (Eigen::Index c = 0; c < dim_; ++c) {
      if (w(c) != Scalar(0)) return false;
    }
    return true;
  }

 private:
  struct Row {
    Eigen::Index lead;
    Vector<Scalar> values;
  };

  Vector<Scalar> reduce(const Vector<Scalar>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("SpanTracker: size mismatch");
    Vector<Scalar> w = v;
    for (const Row& row : rows_) {
      const Scalar f = w(row.lead);
      if (f == Scalar(0)) continue;
      for (Eigen::Index c = row.lead; c < dim_; ++c) w(c) -= f * row.values(c);
    }
    return w;
  }

  Eigen::Index dim_;
  std::vector<Row> rows_;
};

/// Column-major flattening of a square matrix into a vector.
template <typename Scalar>
Vector<Scalar> flatten(const Matrix<Scalar>& m) {
  Vector<Scalar> v(m.size());
  Eigen::Index idx = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) v(idx++) = m(r, c);
  }
  return v;
}

/// Stacks flattened matrices as the rows of one matrix.
template <typename Scalar>
Matrix<Scalar> stack_flattened(const std::vector<Matrix<Scalar>>& ms) {
  if (ms.empty()) return Matrix<Scalar>(0, 0);
  const Eigen::Index len = ms.front().size();
  Matrix<Scalar> out(static_cast<Eigen::Index>(ms.size()), len);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = flatten(ms[i]).transpose();
  }
  return out;
}

/// Row-major rational text: entries separated by ',', rows by ';'.
std::string format_matrix(const RationalMatrix& m);
RationalMatrix parse_matrix(std::string_view text);

}  // namespace twonil
