#pragma once

#include "akl/jet.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace akl {

/// Field germ at a point: one jet per coordinate component.
using JetVec = std::vector<Jet2>;
/// Value-level complex vector (tangent vectors at a point).
using CVec = Eigen::VectorXcd;

/// Constant-coefficient germ with the given components.
JetVec constant_germ(const CVec& v, std::size_t nvars);
CVec values(const JetVec& v);
/// Max-abs over the valid jet components of every entry.
double max_abs(const JetVec& v) noexcept;
JetVec conj(const JetVec& v);
JetVec operator+(const JetVec& a, const JetVec& b);
JetVec operator-(const JetVec& a, const JetVec& b);
JetVec operator*(Complex c, const JetVec& v);
JetVec operator*(const Jet2& s, const JetVec& v);

/// Dense matrix over the jet ring. All entries share `nvars`.
class JetMatrix {
public:
  JetMatrix() = default;
  JetMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  static JetMatrix identity(std::size_t n, std::size_t nvars);
  static JetMatrix constant(const Eigen::MatrixXcd& values, std::size_t nvars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }

  Jet2& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Jet2& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Eigen::MatrixXcd value() const;
  JetMatrix transpose() const;
  /// Entrywise partial derivative (one order lower).
  JetMatrix derivative(std::size_t a) const;
  int min_order() const noexcept;
  double max_abs() const noexcept;

  JetMatrix& operator+=(const JetMatrix& rhs);
  JetMatrix& operator-=(const JetMatrix& rhs);
  JetMatrix& operator*=(Complex c);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Jet2> entries_;
};

JetMatrix operator*(const JetMatrix& a, const JetMatrix& b);
JetMatrix operator+(JetMatrix a, const JetMatrix& b);
JetMatrix operator-(JetMatrix a, const JetMatrix& b);
JetMatrix operator*(Complex c, JetMatrix a);
JetMatrix operator*(const Jet2& s, const JetMatrix& a);
JetVec operator*(const JetMatrix& a, const JetVec& v);

/// Max-abs distance over valid jet components.
double distance(const JetMatrix& a, const JetMatrix& b);

/// Gauss-Jordan inverse with partial pivoting on the value part. Jets form a
/// local ring, so invertibility is decided by the value matrix alone; the
/// pivot ratio serves as the condition estimate.
JetMatrix inverse(const JetMatrix& a, double cond_tol = 1e10);

struct SqrtOptions {
  int max_iter = 100;
  double step_tol = 1e-13;
};

/// Principal square root of a matrix whose value part is Hermitian positive
/// definite, via the coupled Denman-Beavers iteration run in jet arithmetic.
JetMatrix sqrt_pd(const JetMatrix& a, const SqrtOptions& options = {});

/// Columns of the projector P spanning its image, chosen by pivoted
/// elimination (largest remaining column norm, lowest index on ties).
std::vector<Eigen::VectorXcd> projector_basis(const Eigen::MatrixXcd& projector,
                                              int expected_rank);

} // namespace akl
