#ifndef SYMCA_SYMCA_PROJECTION_HPP
#define SYMCA_SYMCA_PROJECTION_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "symca/classic_ca.hpp"
#include "symca/interval_table.hpp"

namespace symca {

inline constexpr std::uint64_t kDefaultVertexLimit = std::uint64_t{1} << 20;

template <typename Scalar>
struct Bounds {
  Scalar lo = 0;
  Scalar hi = 0;

  Scalar width() const { return hi - lo; }
  bool contains(Scalar x) const { return lo <= x && x <= hi; }
};

/// Interval profiles: [lower_ij / margin, upper_ij / margin] with lower/upper
/// the interval bounds as relative frequencies (divided by the centers' grand
/// total) and margin the centers' row (Side::Row) or column margin.
/// Row side is n x p; column side is p x n with one profile per row.
template <typename Scalar>
struct IntervalProfileMatrix {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Side side = Side::Row;
  Matrix lower;
  Matrix upper;
};

/// Centers analysis plus rectangle bounds for every modality on every axis.
/// Rectangle matrices are (modalities x n_axes).
template <typename Scalar>
struct SymCAResult {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  CAResult<Scalar> ca;
  Matrix row_rect_lo;
  Matrix row_rect_hi;
  Matrix col_rect_lo;
  Matrix col_rect_hi;

  Bounds<Scalar> row_rect(Eigen::Index i, Eigen::Index axis) const {
    return {row_rect_lo(i, axis), row_rect_hi(i, axis)};
  }
  Bounds<Scalar> col_rect(Eigen::Index j, Eigen::Index axis) const {
    return {col_rect_lo(j, axis), col_rect_hi(j, axis)};
  }
};

namespace detail {

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> center_cells(const IntervalTable& t) {
  return ((t.lower() + t.upper()).template cast<Scalar>() / Scalar(2)).eval();
}

/// Interval bounds as relative frequencies of the centers' grand total.
template <typename Scalar>
std::pair<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>,
          Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>
bound_frequencies(const IntervalTable& t, Scalar grand_total) {
  return {(t.lower().cast<Scalar>() / grand_total).eval(),
          (t.upper().cast<Scalar>() / grand_total).eval()};
}

template <typename Scalar>
void check_compatible(const IntervalTable& t, const CAResult<Scalar>& ca) {
  if (t.rows() != ca.n || t.cols() != ca.p)
    throw ValidationError("interval table shape does not match the analysis");
}

template <typename Scalar>
void check_axis(const CAResult<Scalar>& ca, Eigen::Index axis) {
  if (axis < 0 || axis >= ca.n_axes)
    throw ValidationError("axis " + std::to_string(axis) + " is not retained");
}

/// Sign-partitioned bounds: entries with negative weight take the opposite
/// bound, zero weights contribute nothing.
template <typename Scalar, typename Lo, typename Hi, typename W, typename Denominator>
Bounds<Scalar> sign_partitioned(const Lo& lower, const Hi& upper, const W& weights,
                                const Denominator& denom) {
  Bounds<Scalar> out;
  for (Eigen::Index k = 0; k < weights.size(); ++k) {
    const Scalar w = weights(k);
    if (w < Scalar(0)) {
      out.lo += transition_term(Scalar(upper(k)), denom(k), Scalar(1), w);
      out.hi += transition_term(Scalar(lower(k)), denom(k), Scalar(1), w);
    } else if (w > Scalar(0)) {
      out.lo += transition_term(Scalar(lower(k)), denom(k), Scalar(1), w);
      out.hi += transition_term(Scalar(upper(k)), denom(k), Scalar(1), w);
    }
  }
  return out;
}

}  // namespace detail

template <typename Scalar = double>
IntervalProfileMatrix<Scalar> interval_profiles(const IntervalTable& t, Side side) {
  const auto kc = detail::center_cells<Scalar>(t);
  detail::require_analyzable(kc);
  const Scalar total = kc.sum();
  const auto [flo, fhi] = detail::bound_frequencies<Scalar>(t, total);
  const auto fc = relative_frequencies(kc);

  IntervalProfileMatrix<Scalar> out;
  out.side = side;
  if (side == Side::Row) {
    const auto r = fc.rowwise().sum().eval();
    out.lower = r.cwiseInverse().asDiagonal() * flo;
    out.upper = r.cwiseInverse().asDiagonal() * fhi;
  } else {
    const auto c = fc.colwise().sum().transpose().eval();
    out.lower = c.cwiseInverse().asDiagonal() * flo.transpose();
    out.upper = c.cwiseInverse().asDiagonal() * fhi.transpose();
  }
  return out;
}

/// Extreme projections of column j's interval profile on axis `axis`:
///   lo = sum_{v_i<0} upper_ij/(f_i. f_.j) v_i + sum_{v_i>0} lower_ij/(f_i. f_.j) v_i
/// and hi with the bounds swapped.
template <typename Scalar>
Bounds<Scalar> column_rectangle(const IntervalTable& t, const CAResult<Scalar>& ca,
                                Eigen::Index j, Eigen::Index axis) {
  detail::check_compatible(t, ca);
  detail::check_axis(ca, axis);
  if (j < 0 || j >= ca.p) throw ValidationError("column index " + std::to_string(j) + " out of range");
  const auto [flo, fhi] = detail::bound_frequencies<Scalar>(t, ca.grand_total);
  const auto denom = (ca.row_margins * ca.col_margins(j)).eval();
  return detail::sign_partitioned<Scalar>(flo.col(j), fhi.col(j), ca.row_axis_vectors.col(axis),
                                          denom);
}

/// Row counterpart of column_rectangle, weighted by u_alpha.
template <typename Scalar>
Bounds<Scalar> row_rectangle(const IntervalTable& t, const CAResult<Scalar>& ca,
                             Eigen::Index i, Eigen::Index axis) {
  detail::check_compatible(t, ca);
  detail::check_axis(ca, axis);
  if (i < 0 || i >= ca.n) throw ValidationError("row index " + std::to_string(i) + " out of range");
  const auto [flo, fhi] = detail::bound_frequencies<Scalar>(t, ca.grand_total);
  const auto denom = (ca.col_margins * ca.row_margins(i)).eval();
  return detail::sign_partitioned<Scalar>(flo.row(i).transpose(), fhi.row(i).transpose(),
                                          ca.col_axis_vectors.col(axis), denom);
}

/// Brute force over every vertex of the interval profile hypercube of row or
/// column `index`; returns the min and max supplementary projection.
template <typename Scalar>
Bounds<Scalar> vertex_projection_oracle(const IntervalTable& t, const CAResult<Scalar>& ca,
                                        Eigen::Index index, Eigen::Index axis, Side side,
                                        std::uint64_t limit = kDefaultVertexLimit) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  detail::check_compatible(t, ca);
  detail::check_axis(ca, axis);
  const Eigen::Index len = side == Side::Column ? ca.n : ca.p;
  const Eigen::Index owners = side == Side::Column ? ca.p : ca.n;
  if (index < 0 || index >= owners)
    throw ValidationError("index " + std::to_string(index) + " out of range");
  if (len >= 64 || (std::uint64_t{1} << len) > limit)
    throw EnumerationTooLarge(len >= 64 ? std::numeric_limits<std::uint64_t>::max()
                                        : std::uint64_t{1} << len,
                              limit);

  const auto [flo, fhi] = detail::bound_frequencies<Scalar>(t, ca.grand_total);
  const Vector lower = side == Side::Column ? Vector(flo.col(index)) : Vector(flo.row(index).transpose());
  const Vector upper = side == Side::Column ? Vector(fhi.col(index)) : Vector(fhi.row(index).transpose());

  Bounds<Scalar> out{std::numeric_limits<Scalar>::infinity(),
                     -std::numeric_limits<Scalar>::infinity()};
  Vector vertex(len);
  const std::uint64_t count = std::uint64_t{1} << len;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (Eigen::Index k = 0; k < len; ++k)
      vertex(k) = (mask >> k) & 1U ? upper(k) : lower(k);
    const Scalar proj = supplementary_projection(vertex, ca, axis, side, index);
    out.lo = std::min(out.lo, proj);
    out.hi = std::max(out.hi, proj);
  }
  return out;
}

/// Full pipeline: centers, classic analysis, rectangles for every retained axis.
template <typename Scalar = double>
SymCAResult<Scalar> symca(const IntervalTable& t, Eigen::Index requested = kAllAxes) {
  SymCAResult<Scalar> out;
  out.row_labels = t.row_labels();
  out.col_labels = t.col_labels();
  out.ca = correspondence_analysis(detail::center_cells<Scalar>(t), requested);
  const Eigen::Index axes = out.ca.n_axes;
  out.row_rect_lo.resize(t.rows(), axes);
  out.row_rect_hi.resize(t.rows(), axes);
  out.col_rect_lo.resize(t.cols(), axes);
  out.col_rect_hi.resize(t.cols(), axes);
  for (Eigen::Index a = 0; a < axes; ++a) {
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      const auto b = row_rectangle(t, out.ca, i, a);
      out.row_rect_lo(i, a) = b.lo;
      out.row_rect_hi(i, a) = b.hi;
    }
    for (Eigen::Index j = 0; j < t.cols(); ++j) {
      const auto b = column_rectangle(t, out.ca, j, a);
      out.col_rect_lo(j, a) = b.lo;
      out.col_rect_hi(j, a) = b.hi;
    }
  }
  return out;
}

}  // namespace symca

#endif  // SYMCA_SYMCA_PROJECTION_HPP
