#include "akl/jet_linalg.hpp"

#include "akl/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace akl {

namespace {

void require_same_shape(const JetMatrix& a, const JetMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.nvars() != b.nvars())
    throw Error(ErrorKind::ShapeMismatch, what);
}

} // namespace

JetVec constant_germ(const CVec& v, std::size_t nvars) {
  JetVec g;
  g.reserve(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) g.emplace_back(nvars, v(i));
  return g;
}

CVec values(const JetVec& v) {
  CVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i].value();
  return out;
}

double max_abs(const JetVec& v) noexcept {
  double m = 0.0;
  for (const auto& e : v) m = std::max(m, e.max_abs());
  return m;
}

JetVec conj(const JetVec& v) {
  JetVec r;
  r.reserve(v.size());
  for (const auto& e : v) r.push_back(e.conj());
  return r;
}

JetVec operator+(const JetVec& a, const JetVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "germ addition");
  JetVec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

JetVec operator-(const JetVec& a, const JetVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "germ subtraction");
  JetVec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

JetVec operator*(Complex c, const JetVec& v) {
  JetVec r = v;
  for (auto& e : r) e *= c;
  return r;
}

JetVec operator*(const Jet2& s, const JetVec& v) {
  JetVec r;
  r.reserve(v.size());
  for (const auto& e : v) r.push_back(s * e);
  return r;
}

JetMatrix::JetMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, Jet2(nvars)) {}

JetMatrix JetMatrix::identity(std::size_t n, std::size_t nvars) {
  JetMatrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m(i, i).set_value(1.0);
  return m;
}

JetMatrix JetMatrix::constant(const Eigen::MatrixXcd& values, std::size_t nvars) {
  JetMatrix m(values.rows(), values.cols(), nvars);
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c).set_value(values(r, c));
  return m;
}

Eigen::MatrixXcd JetMatrix::value() const {
  Eigen::MatrixXcd v(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) v(r, c) = (*this)(r, c).value();
  return v;
}

JetMatrix JetMatrix::transpose() const {
  JetMatrix t(cols_, rows_, nvars_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

JetMatrix JetMatrix::derivative(std::size_t a) const {
  JetMatrix d = *this;
  for (auto& e : d.entries_) e = e.derivative(a);
  return d;
}

int JetMatrix::min_order() const noexcept {
  int o = Jet2::kMaxOrder;
  for (const auto& e : entries_) o = std::min(o, e.order());
  return o;
}

double JetMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, e.max_abs());
  return m;
}

JetMatrix& JetMatrix::operator+=(const JetMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix addition");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

JetMatrix& JetMatrix::operator-=(const JetMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix subtraction");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

JetMatrix& JetMatrix::operator*=(Complex c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

JetMatrix operator*(const JetMatrix& a, const JetMatrix& b) {
  if (a.cols() != b.rows() || a.nvars() != b.nvars())
    throw Error(ErrorKind::ShapeMismatch, "matrix product " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " * " +
                                              std::to_string(b.rows()) + "x" +
                                              std::to_string(b.cols()));
  JetMatrix r(a.rows(), b.cols(), a.nvars());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Jet2 acc(a.nvars());
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      r(i, j) = std::move(acc);
    }
  return r;
}

JetMatrix operator+(JetMatrix a, const JetMatrix& b) { return a += b; }
JetMatrix operator-(JetMatrix a, const JetMatrix& b) { return a -= b; }
JetMatrix operator*(Complex c, JetMatrix a) { return a *= c; }

JetMatrix operator*(const Jet2& s, const JetMatrix& a) {
  JetMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

JetVec operator*(const JetMatrix& a, const JetVec& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector product");
  JetVec r;
  r.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Jet2 acc(a.nvars());
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * v[k];
    r.push_back(std::move(acc));
  }
  return r;
}

double distance(const JetMatrix& a, const JetMatrix& b) {
  require_same_shape(a, b, "matrix distance");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, distance(a(i, j), b(i, j)));
  return m;
}

JetMatrix inverse(const JetMatrix& a, double cond_tol) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  JetMatrix work = a;
  JetMatrix inv_m = JetMatrix::identity(n, a.nvars());
  double pivot_max = 0.0;
  double pivot_min = std::numeric_limits<double>::infinity();

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double best_abs = std::abs(work(col, col).value());
    for (std::size_t r = col + 1; r < n; ++r) {
      const double m = std::abs(work(r, col).value());
      if (m > best_abs) {
        best = r;
        best_abs = m;
      }
    }
    if (!(best_abs > 0.0) || !std::isfinite(best_abs))
      throw Error(ErrorKind::SingularMatrix, "zero pivot in column " + std::to_string(col));
    pivot_max = std::max(pivot_max, best_abs);
    pivot_min = std::min(pivot_min, best_abs);
    if (pivot_max / pivot_min > cond_tol)
      throw Error(ErrorKind::SingularMatrix,
                  "pivot ratio " + std::to_string(pivot_max / pivot_min) + " exceeds limit");
    if (best != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(col, c), work(best, c));
        std::swap(inv_m(col, c), inv_m(best, c));
      }

    const Jet2 pivot_inv = inv(work(col, col), 0.0);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) = work(col, c) * pivot_inv;
      inv_m(col, c) = inv_m(col, c) * pivot_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Jet2 factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv_m(r, c) -= factor * inv_m(col, c);
      }
    }
  }
  return inv_m;
}

JetMatrix sqrt_pd(const JetMatrix& a, const SqrtOptions& options) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "sqrt of non-square matrix");
  const Eigen::MatrixXcd v = a.value();
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if ((v - v.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw Error(ErrorKind::NotPositiveDefinite, "value part is not Hermitian");
  Eigen::LLT<Eigen::MatrixXcd> llt(v);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorKind::NotPositiveDefinite, "value part is not positive definite");

  const std::size_t n = a.rows();
  JetMatrix y = a;
  JetMatrix z = JetMatrix::identity(n, a.nvars());
  for (int it = 0; it < options.max_iter; ++it) {
    JetMatrix y_next = 0.5 * (y + inverse(z));
    JetMatrix z_next = 0.5 * (z + inverse(y));
    const double step = distance(y_next, y);
    y = std::move(y_next);
    z = std::move(z_next);
    if (step < options.step_tol * std::max(1.0, y.max_abs())) return y;
  }
  throw Error(ErrorKind::NoConvergence,
              "Denman-Beavers did not converge in " + std::to_string(options.max_iter) +
                  " iterations");
}

std::vector<Eigen::VectorXcd> projector_basis(const Eigen::MatrixXcd& projector,
                                              int expected_rank) {
  if (projector.rows() != projector.cols())
    throw Error(ErrorKind::NotProjector, "projector must be square");
  const double scale = std::max(1.0, projector.cwiseAbs().maxCoeff());
  if ((projector * projector - projector).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw Error(ErrorKind::NotProjector, "P*P differs from P");

  const Eigen::Index dim = projector.cols();
  if (expected_rank < 0 || expected_rank > dim)
    throw Error(ErrorKind::RankMismatch, "expected rank out of range");
  const double rank_tol = 1e-8 * scale;

  Eigen::MatrixXcd residual = projector;
  std::vector<bool> used(dim, false);
  std::vector<Eigen::VectorXcd> basis;
  for (int k = 0; k < expected_rank; ++k) {
    Eigen::Index best = -1;
    double best_norm = 0.0;
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (used[j]) continue;
      const double nrm = residual.col(j).norm();
      if (best < 0 || nrm > best_norm * (1.0 + 1e-12)) {
        best = j;
        best_norm = nrm;
      }
    }
    if (best < 0 || best_norm <= rank_tol)
      throw Error(ErrorKind::RankMismatch, "projector rank " + std::to_string(k) +
                                               " below expected " +
                                               std::to_string(expected_rank));
    used[best] = true;
    basis.push_back(projector.col(best));
    const Eigen::VectorXcd q = residual.col(best) / best_norm;
    for (Eigen::Index j = 0; j < dim; ++j)
      if (!used[j]) residual.col(j) -= q * q.dot(residual.col(j));
  }
  for (Eigen::Index j = 0; j < dim; ++j)
    if (!used[j] && residual.col(j).norm() > rank_tol)
      throw Error(ErrorKind::RankMismatch,
                  "projector rank exceeds expected " + std::to_string(expected_rank));
  return basis;
}

} // namespace akl
