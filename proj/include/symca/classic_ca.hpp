#ifndef SYMCA_CLASSIC_CA_HPP
#define SYMCA_CLASSIC_CA_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "symca/errors.hpp"
#include "symca/interval_table.hpp"

namespace symca {

inline constexpr Eigen::Index kAllAxes = -1;

enum class Side { Row, Column };

/// Classic correspondence analysis of a nonnegative n x p table.
///
/// Axis vectors are metric-normalized, u' D_p^{-1} u = 1 and v' D_n^{-1} v = 1,
/// so that the coordinates are principal coordinates with weighted variance
/// equal to the eigenvalue. Column alpha of each matrix belongs to axis alpha.
template <typename Scalar>
struct CAResult {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Eigen::Index n = 0;
  Eigen::Index p = 0;
  Scalar grand_total = 0;
  Matrix rel_freq;
  Vector row_margins;
  Vector col_margins;
  Eigen::Index n_axes = 0;
  Vector eigenvalues;       ///< retained, descending
  Matrix col_axis_vectors;  ///< p x n_axes, u_alpha
  Matrix row_axis_vectors;  ///< n x n_axes, v_alpha
  Matrix row_coords;        ///< n x n_axes, psi
  Matrix col_coords;        ///< p x n_axes, phi
  Vector inertia_share;     ///< eigenvalue / total inertia
  Scalar total_inertia = 0; ///< sum of every non-trivial eigenvalue, retained or not
};

namespace detail {

template <typename Derived>
void require_analyzable(const Eigen::MatrixBase<Derived>& k) {
  using Scalar = typename Derived::Scalar;
  static_assert(!Eigen::NumTraits<Scalar>::IsInteger,
                "correspondence analysis needs a floating-point table");
  if (k.rows() < 1 || k.cols() < 1) throw ValidationError("empty table");
  if (!k.allFinite()) throw ValidationError("table has non-finite cells");
  if ((k.array() < Scalar(0)).any()) throw ValidationError("table has negative cells");
  if (!(k.sum() > Scalar(0))) throw ValidationError("grand total is zero");
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    if (k.row(i).sum() == Scalar(0))
      throw ValidationError("zero row margin at row " + std::to_string(i));
  for (Eigen::Index j = 0; j < k.cols(); ++j)
    if (k.col(j).sum() == Scalar(0))
      throw ValidationError("zero column margin at column " + std::to_string(j));
}

/// One term of the transition formulas: f / (f_i. f_.j) * w.
template <typename Scalar>
inline Scalar transition_term(Scalar f, Scalar row_margin, Scalar col_margin, Scalar w) {
  return f / (row_margin * col_margin) * w;
}

/// Orthonormal basis (columns) of the complement of the unit vector `direction`.
template <typename Vector>
auto complement_basis(const Vector& direction) {
  using Scalar = typename Vector::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = direction.size();
  const Matrix column = direction;
  Eigen::HouseholderQR<Matrix> qr(column);
  Matrix q = qr.householderQ();
  return Matrix(q.rightCols(n - 1));
}

/// Index of the largest-magnitude entry; near-ties resolve to the lowest index.
template <typename Vector>
Eigen::Index dominant_index(const Vector& x) {
  using Scalar = typename Vector::Scalar;
  const Scalar peak = x.cwiseAbs().maxCoeff();
  const Scalar floor = peak * (Scalar(1) - Scalar(1e-9));
  for (Eigen::Index j = 0; j < x.size(); ++j)
    if (std::abs(x(j)) >= floor) return j;
  return 0;
}

}  // namespace detail

/// Relative frequencies f_ij = k_ij / k.
template <typename Derived>
auto relative_frequencies(const Eigen::MatrixBase<Derived>& k) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return Matrix(k / k.sum());
}

/// Row profiles (k_ij / k_i.), n x p. Each row sums to 1.
template <typename Derived>
auto row_profiles(const Eigen::MatrixBase<Derived>& k) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix out(k.rows(), k.cols());
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    const Scalar margin = k.row(i).sum();
    if (margin == Scalar(0)) throw ValidationError("zero row sum at row " + std::to_string(i));
    out.row(i) = k.row(i) / margin;
  }
  return out;
}

/// Column profiles (k_ij / k_.j) laid out p x n, one profile per row.
template <typename Derived>
auto column_profiles(const Eigen::MatrixBase<Derived>& k) {
  return row_profiles(k.transpose());
}

/// Squared chi-square distance between row profiles i and k.
template <typename Derived>
typename Derived::Scalar chi2_row_distance(const Eigen::MatrixBase<Derived>& table,
                                           Eigen::Index i, Eigen::Index k) {
  using Scalar = typename Derived::Scalar;
  if (i < 0 || k < 0 || i >= table.rows() || k >= table.rows())
    throw ValidationError("row index out of range");
  detail::require_analyzable(table);
  const auto f = relative_frequencies(table);
  const Scalar fi = f.row(i).sum();
  const Scalar fk = f.row(k).sum();
  Scalar d2 = 0;
  for (Eigen::Index j = 0; j < f.cols(); ++j) {
    const Scalar diff = f(i, j) / fi - f(k, j) / fk;
    d2 += diff * diff / f.col(j).sum();
  }
  return d2;
}

/// Squared chi-square distance between column profiles j and s.
template <typename Derived>
typename Derived::Scalar chi2_col_distance(const Eigen::MatrixBase<Derived>& table,
                                           Eigen::Index j, Eigen::Index s) {
  using Scalar = typename Derived::Scalar;
  if (j < 0 || s < 0 || j >= table.cols() || s >= table.cols())
    throw ValidationError("column index out of range");
  detail::require_analyzable(table);
  const auto f = relative_frequencies(table);
  const Scalar fj = f.col(j).sum();
  const Scalar fs = f.col(s).sum();
  Scalar d2 = 0;
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    const Scalar diff = f(i, j) / fj - f(i, s) / fs;
    d2 += diff * diff / f.row(i).sum();
  }
  return d2;
}

/// Chi-square / N: sum_ij (f_ij - f_i. f_.j)^2 / (f_i. f_.j).
template <typename Derived>
typename Derived::Scalar total_inertia(const Eigen::MatrixBase<Derived>& table) {
  using Scalar = typename Derived::Scalar;
  detail::require_analyzable(table);
  const auto f = relative_frequencies(table);
  const auto r = f.rowwise().sum().eval();
  const auto c = f.colwise().sum().eval();
  Scalar sum = 0;
  for (Eigen::Index i = 0; i < f.rows(); ++i)
    for (Eigen::Index j = 0; j < f.cols(); ++j) {
      const Scalar expected = r(i) * c(j);
      const Scalar diff = f(i, j) - expected;
      sum += diff * diff / expected;
    }
  return sum;
}

/// Runs correspondence analysis and keeps min(requested, n-1, p-1) axes
/// (all of them for kAllAxes).
///
/// The non-trivial axes come from the SVD of the standardized residual
/// matrix A = D_n^{-1/2} (F - r c') D_p^{-1/2}, restricted to the orthogonal
/// complements of sqrt(r) and sqrt(c) so the trivial eigenvalue 1 never
/// appears. Then lambda = sigma^2, u = D_p^{1/2} V and v = D_n^{1/2} U.
/// Coordinates are evaluated with the transition formulas
///   psi_i = sum_j f_ij / (f_i. f_.j) u_j,   phi_j = sum_i f_ij / (f_i. f_.j) v_i.
template <typename Derived>
CAResult<typename Derived::Scalar> correspondence_analysis(const Eigen::MatrixBase<Derived>& table,
                                                           Eigen::Index requested = kAllAxes) {
  using Scalar = typename Derived::Scalar;
  using Result = CAResult<Scalar>;
  using Matrix = typename Result::Matrix;
  using Vector = typename Result::Vector;

  detail::require_analyzable(table);
  const Eigen::Index n = table.rows();
  const Eigen::Index p = table.cols();
  const Eigen::Index rank_bound = std::min(n - 1, p - 1);
  if (rank_bound < 1)
    throw ValidationError("degenerate dimensions: no non-trivial axes for a " +
                          std::to_string(n) + "x" + std::to_string(p) + " table");
  if (requested == 0 || requested < kAllAxes)
    throw ValidationError("requested axis count must be positive");

  Result res;
  res.n = n;
  res.p = p;
  res.grand_total = table.sum();
  res.rel_freq = relative_frequencies(table);
  res.row_margins = res.rel_freq.rowwise().sum();
  res.col_margins = res.rel_freq.colwise().sum().transpose();

  const Vector sqrt_r = res.row_margins.cwiseSqrt();
  const Vector sqrt_c = res.col_margins.cwiseSqrt();
  const Matrix residual =
      sqrt_r.cwiseInverse().asDiagonal() *
      (res.rel_freq - res.row_margins * res.col_margins.transpose()) *
      sqrt_c.cwiseInverse().asDiagonal();

  const Matrix row_basis = detail::complement_basis(Vector(sqrt_r / sqrt_r.norm()));
  const Matrix col_basis = detail::complement_basis(Vector(sqrt_c / sqrt_c.norm()));
  const Matrix reduced = row_basis.transpose() * residual * col_basis;

  Eigen::JacobiSVD<Matrix> svd(reduced, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success || !svd.singularValues().allFinite())
    throw SolverError("singular value decomposition failed to converge");

  const Vector sigma = svd.singularValues();
  const Matrix left = row_basis * svd.matrixU();
  const Matrix right = col_basis * svd.matrixV();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(sigma.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return sigma(a) > sigma(b); });

  const Eigen::Index axes = requested == kAllAxes ? rank_bound : std::min(requested, rank_bound);
  res.n_axes = axes;
  res.eigenvalues.resize(axes);
  res.col_axis_vectors.resize(p, axes);
  res.row_axis_vectors.resize(n, axes);
  res.total_inertia = sigma.squaredNorm();

  for (Eigen::Index a = 0; a < axes; ++a) {
    const Eigen::Index src = order[static_cast<std::size_t>(a)];
    Vector u = sqrt_c.cwiseProduct(right.col(src));
    Vector v = sqrt_r.cwiseProduct(left.col(src));
    if (u(detail::dominant_index(u)) < Scalar(0)) {
      u = -u;
      v = -v;
    }
    res.eigenvalues(a) = sigma(src) * sigma(src);
    res.col_axis_vectors.col(a) = u;
    res.row_axis_vectors.col(a) = v;
  }

  res.row_coords.resize(n, axes);
  res.col_coords.resize(p, axes);
  for (Eigen::Index a = 0; a < axes; ++a) {
    for (Eigen::Index i = 0; i < n; ++i) {
      Scalar psi = 0;
      for (Eigen::Index j = 0; j < p; ++j)
        psi += detail::transition_term(res.rel_freq(i, j), res.row_margins(i),
                                       res.col_margins(j), res.col_axis_vectors(j, a));
      res.row_coords(i, a) = psi;
    }
    for (Eigen::Index j = 0; j < p; ++j) {
      Scalar phi = 0;
      for (Eigen::Index i = 0; i < n; ++i)
        phi += detail::transition_term(res.rel_freq(i, j), res.row_margins(i),
                                       res.col_margins(j), res.row_axis_vectors(i, a));
      res.col_coords(j, a) = phi;
    }
  }

  res.inertia_share = res.total_inertia > Scalar(0) ? Vector(res.eigenvalues / res.total_inertia)
                                                    : Vector(Vector::Zero(axes));
  return res;
}

inline CAResult<double> correspondence_analysis(const CenterTable& table,
                                                Eigen::Index requested = kAllAxes) {
  return correspondence_analysis(table.cells, requested);
}

/// Projects a supplementary profile given by its numerators (relative
/// frequencies, not yet divided by any margin) onto axis `axis`.
/// Side::Column: `numerators` has length n and describes column `index`;
/// returns sum_i z_i / (f_i. f_.index) v_i. Side::Row mirrors it with u.
/// The margins used are those of the analysed table.
template <typename Scalar, typename Derived>
Scalar supplementary_projection(const Eigen::MatrixBase<Derived>& numerators,
                                const CAResult<Scalar>& ca, Eigen::Index axis, Side side,
                                Eigen::Index index) {
  if (axis < 0 || axis >= ca.n_axes)
    throw ValidationError("axis " + std::to_string(axis) + " is not retained");
  const Eigen::Index expected = side == Side::Column ? ca.n : ca.p;
  const Eigen::Index owners = side == Side::Column ? ca.p : ca.n;
  if (numerators.size() != expected)
    throw ValidationError("profile length " + std::to_string(numerators.size()) +
                          " does not match " + std::to_string(expected));
  if (index < 0 || index >= owners)
    throw ValidationError("index " + std::to_string(index) + " out of range");

  Scalar sum = 0;
  if (side == Side::Column) {
    for (Eigen::Index i = 0; i < ca.n; ++i)
      sum += detail::transition_term(Scalar(numerators(i)), ca.row_margins(i),
                                     ca.col_margins(index), ca.row_axis_vectors(i, axis));
  } else {
    for (Eigen::Index j = 0; j < ca.p; ++j)
      sum += detail::transition_term(Scalar(numerators(j)), ca.row_margins(index),
                                     ca.col_margins(j), ca.col_axis_vectors(j, axis));
  }
  return sum;
}

}  // namespace symca

#endif  // SYMCA_CLASSIC_CA_HPP
