#pragma once

// Numeric checks of schemes and condition systems on concrete matrices.

#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ansatz.hpp"
#include "expansion.hpp"
#include "lyndon.hpp"
#include "nc_poly.hpp"

namespace splitoc {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

/// Exact stage coefficients a, b (and c when three operators are split).
struct SchemeCoefficients {
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::vector<Rational> c;

  int stages() const { return static_cast<int>(a.size()); }
  int operators() const { return c.empty() ? 2 : 3; }

  void validate() const {
    if (a.empty())
      throw invalid_input("scheme coefficients: need at least one stage");
    if (b.size() != a.size() || (!c.empty() && c.size() != a.size()))
      throw invalid_input("scheme coefficients: a, b, c must have equal length");
  }

  Assignment assignment() const {
    validate();
    Assignment out;
    const std::vector<Rational>* families[] = {&a, &b, &c};
    for (int f = 0; f < 3; ++f)
      for (std::size_t j = 0; j < families[f]->size(); ++j)
        out[Unknown{static_cast<Family>(f), static_cast<int>(j + 1)}] = (*families[f])[j];
    return out;
  }

  static SchemeCoefficients from_assignment(const SchemeSpec& spec, const Assignment& values) {
    SchemeCoefficients out;
    std::vector<Rational>* families[] = {&out.a, &out.b, &out.c};
    for (Unknown u : spec.unknowns()) {
      auto it = values.find(u);
      if (it == values.end())
        throw unbound_variable(u.name());
      families[static_cast<int>(u.family)]->push_back(it->second);
    }
    return out;
  }

  friend bool operator==(const SchemeCoefficients&, const SchemeCoefficients&) = default;
};

/// Stage coefficients as floating-point (real or complex) values.
template <class Scalar>
struct NumericCoefficients {
  std::vector<Scalar> a;
  std::vector<Scalar> b;
  std::vector<Scalar> c;

  NumericCoefficients() = default;
  NumericCoefficients(std::vector<Scalar> a_, std::vector<Scalar> b_, std::vector<Scalar> c_ = {})
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}
  explicit NumericCoefficients(const SchemeCoefficients& exact) {
    exact.validate();
    for (const auto& v : exact.a) a.push_back(Scalar(to_double(v)));
    for (const auto& v : exact.b) b.push_back(Scalar(to_double(v)));
    for (const auto& v : exact.c) c.push_back(Scalar(to_double(v)));
  }

  int stages() const { return static_cast<int>(a.size()); }
  int operators() const { return c.empty() ? 2 : 3; }
};

namespace detail {

template <class Scalar>
void require_square(const Matrix<Scalar>& m, const char* what) {
  if (m.rows() != m.cols())
    throw invalid_input(std::string(what) + ": matrix is not square");
}

template <class Scalar>
void require_operators(std::span<const Matrix<Scalar>> ops, int operators) {
  if (static_cast<int>(ops.size()) != operators)
    throw invalid_input("expected " + std::to_string(operators) + " operator matrices, got " +
                        std::to_string(ops.size()));
  for (const auto& op : ops) {
    require_square(op, "operator");
    if (op.rows() != ops.front().rows())
      throw invalid_input("operator matrices differ in dimension");
  }
}

} // namespace detail

/// Matrix exponential by scaling and squaring with the diagonal (6,6) Pade
/// approximant; the scaled argument has infinity norm at most 1/2.
template <class Scalar>
Matrix<Scalar> matrix_exp(const Matrix<Scalar>& m) {
  detail::require_square(m, "matrix_exp");
  const auto n = m.rows();
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  if (!std::isfinite(norm))
    throw invalid_input("matrix_exp: non-finite entries");
  int squarings = 0;
  if (norm > 0.5)
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
  const Matrix<Scalar> x = m * Scalar(std::ldexp(1.0, -squarings));

  constexpr int degree = 6;
  Matrix<Scalar> power = Matrix<Scalar>::Identity(n, n);
  Matrix<Scalar> num = power;
  Matrix<Scalar> den = power;
  double c = 1.0;
  for (int k = 1; k <= degree; ++k) {
    c *= static_cast<double>(degree - k + 1) / static_cast<double>(k * (2 * degree - k + 1));
    power = power * x;
    num += Scalar(c) * power;
    den += Scalar(k % 2 == 0 ? c : -c) * power;
  }
  Matrix<Scalar> result = den.partialPivLu().solve(num);
  for (int i = 0; i < squarings; ++i)
    result = result * result;
  return result;
}

/// One step S(h) = S_s(h) ... S_1(h) with S_j(h) = e^{h c_j C} e^{h b_j B} e^{h a_j A}.
template <class Scalar>
Matrix<Scalar> scheme_step(const NumericCoefficients<Scalar>& coeffs,
                           std::span<const Matrix<Scalar>> ops, Scalar h) {
  if (coeffs.b.size() != coeffs.a.size() || (!coeffs.c.empty() && coeffs.c.size() != coeffs.a.size()))
    throw invalid_input("scheme_step: coefficient lists differ in length");
  detail::require_operators(ops, coeffs.operators());
  const auto n = ops.front().rows();
  const std::vector<Scalar>* families[] = {&coeffs.a, &coeffs.b, &coeffs.c};
  Matrix<Scalar> step = Matrix<Scalar>::Identity(n, n);
  for (int j = 0; j < coeffs.stages(); ++j) {
    Matrix<Scalar> stage = Matrix<Scalar>::Identity(n, n);
    for (int f = coeffs.operators() - 1; f >= 0; --f)
      stage = stage * matrix_exp<Scalar>((h * (*families[f])[static_cast<std::size_t>(j)]) *
                                         ops[static_cast<std::size_t>(f)]);
    step = stage * step;
  }
  return step;
}

template <class Scalar>
Matrix<Scalar> scheme_step(const SchemeCoefficients& coeffs, std::span<const Matrix<Scalar>> ops,
                           Scalar h) {
  return scheme_step(NumericCoefficients<Scalar>(coeffs), ops, h);
}

/// Frobenius norm of S(h) - exp(h (A + B (+ C))).
template <class Scalar, class Coeffs>
double local_error_norm(const Coeffs& coeffs, std::span<const Matrix<Scalar>> ops, Scalar h) {
  Matrix<Scalar> step = scheme_step(coeffs, ops, h);
  Matrix<Scalar> sum = Matrix<Scalar>::Zero(ops.front().rows(), ops.front().cols());
  for (const auto& op : ops)
    sum += op;
  return (step - matrix_exp<Scalar>(h * sum)).norm();
}

/// `count` step sizes spaced geometrically from `largest` down to `smallest`.
inline std::vector<double> geometric_grid(double largest, double smallest, int count) {
  if (count < 2 || !(largest > smallest) || !(smallest > 0))
    throw invalid_input("geometric_grid: need count >= 2 and largest > smallest > 0");
  std::vector<double> out;
  const double ratio = std::pow(smallest / largest, 1.0 / (count - 1));
  for (int i = 0; i < count; ++i)
    out.push_back(largest * std::pow(ratio, i));
  return out;
}

inline constexpr double kErrorFloor = 1e-12;

struct OrderEstimate {
  double slope = 0.0;
  std::vector<double> steps;
  std::vector<double> errors;
  std::size_t points_used = 0;
  // Set when too few points stay above the rounding floor for a fit.
  std::optional<std::string> warning;

  bool degenerate() const { return warning.has_value(); }
};

/// Least-squares slope of log(error) against log(h). Points whose error is
/// below kErrorFloor are dropped; fewer than two survivors is a degenerate fit.
template <class Scalar, class Coeffs>
OrderEstimate estimate_order(const Coeffs& coeffs, std::span<const Matrix<Scalar>> ops,
                             std::span<const double> h_grid) {
  OrderEstimate out;
  std::vector<double> xs;
  std::vector<double> ys;
  for (double h : h_grid) {
    const double err = local_error_norm<Scalar>(coeffs, ops, Scalar(h));
    out.steps.push_back(h);
    out.errors.push_back(err);
    if (err >= kErrorFloor) {
      xs.push_back(std::log(h));
      ys.push_back(std::log(err));
    }
  }
  out.points_used = xs.size();
  if (xs.size() < 2) {
    out.warning = "degenerate fit: only " + std::to_string(xs.size()) +
                  " error values above the rounding floor";
    return out;
  }
  const auto n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  out.slope = sxy / sxx;
  if (xs.size() < 4)
    out.warning = "fit uses only " + std::to_string(xs.size()) + " points above the rounding floor";
  return out;
}

/// Random d x d matrix, entries uniform in [-1, 1], scaled to unit Frobenius norm.
inline RealMatrix random_operator(int dim, std::mt19937_64& rng) {
  if (dim < 1)
    throw invalid_input("random_operator: dimension must be positive");
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m(i, j) = dist(rng);
  return m / m.norm();
}

inline std::vector<RealMatrix> random_operators(int count, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RealMatrix> out;
  for (int i = 0; i < count; ++i)
    out.push_back(random_operator(dim, rng));
  return out;
}

/// Value of a word polynomial with the letters replaced by matrices;
/// `to_scalar` converts each coefficient.
template <class Scalar, class Coeff, class ToScalar>
Matrix<Scalar> evaluate(const NCPolynomial<Coeff>& p, std::span<const Matrix<Scalar>> ops,
                        ToScalar&& to_scalar) {
  const auto n = ops.front().rows();
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n, n);
  for (const auto& [w, c] : p.terms()) {
    Matrix<Scalar> product = Matrix<Scalar>::Identity(n, n);
    for (int i = 0; i < w.size(); ++i) {
      if (w[i] >= static_cast<int>(ops.size()))
        throw invalid_input("word '" + w.str() + "' uses a letter with no operator matrix");
      product = product * ops[static_cast<std::size_t>(w[i])];
    }
    out += to_scalar(c) * product;
  }
  return out;
}

template <class Scalar>
Matrix<Scalar> evaluate(const IntNCPoly& p, std::span<const Matrix<Scalar>> ops) {
  return evaluate<Scalar>(p, ops, [](const BigInt& c) { return Scalar(c.convert_to<double>()); });
}

struct ConditionResidual {
  int order = 0;
  Word word;
  Rational value;
  double residual = 0.0;
};

struct ConditionReport {
  std::vector<ConditionResidual> residuals;
  double max_residual = 0.0;
  bool passed = true;
};

/// |P(coeffs)| for every condition; passes iff all are <= tol. Evaluation is
/// exact, so tol = 0 is meaningful for rational coefficients.
inline ConditionReport check_conditions(const OrderConditionSystem& system,
                                        const SchemeCoefficients& coeffs, double tol) {
  const Assignment values = coeffs.assignment();
  ConditionReport report;
  for (const auto& block : system.blocks) {
    for (const auto& cond : block.conditions) {
      Rational v = evaluate(cond.poly, values);
      double r = std::abs(to_double(v));
      if (v != 0 && r == 0.0)
        r = std::numeric_limits<double>::denorm_min();
      report.residuals.push_back({block.order, cond.word, v, r});
      report.max_residual = std::max(report.max_residual, r);
      if (r > tol)
        report.passed = false;
    }
  }
  return report;
}

/// How far the numeric q-th local-error derivative is from the Lie element
/// sum_k P_{q,k}(coeffs) [w_k] built from the Lyndon bracketings:
///   ||D - L||_F / max(1, ||D||_F, ||L||_F).
/// The identity only holds once every condition of order < q is satisfied
/// (to within `precondition_tol`); otherwise precondition_failed is thrown.
template <class Scalar = double>
double lie_residual(const SchemeSpec& spec, const SchemeCoefficients& coeffs, int q,
                    std::span<const Matrix<Scalar>> ops, double precondition_tol = 1e-12) {
  spec.validate();
  if (coeffs.stages() != spec.stages || coeffs.operators() != spec.operators)
    throw invalid_input("lie_residual: coefficients do not match the scheme shape");
  detail::require_operators(ops, spec.operators);
  if (q >= 2) {
    SchemeSpec plain = spec;
    plain.ansatz = Ansatz::plain;
    plain.fixed.clear();
    const auto lower = order_conditions(plain, q - 1);
    const auto report = check_conditions(lower, coeffs, precondition_tol);
    if (!report.passed)
      throw precondition_failed("lie_residual: coefficients violate order conditions below " +
                                std::to_string(q) + " (max residual " +
                                std::to_string(report.max_residual) + ")");
  }
  const Assignment values = coeffs.assignment();
  auto to_scalar = [&](const CoeffPoly& c) { return Scalar(to_double(evaluate(c, values))); };

  const Matrix<Scalar> direct = evaluate<Scalar>(derivative_term(spec, q), ops, to_scalar);
  Matrix<Scalar> lie = Matrix<Scalar>::Zero(direct.rows(), direct.cols());
  SchemeSpec plain = spec;
  plain.ansatz = Ansatz::plain;
  plain.fixed.clear();
  for (const auto& cond : lyndon_coefficients(plain, q).conditions)
    lie += to_scalar(cond.poly) * evaluate<Scalar>(bracket_expansion(cond.word), ops);
  const double scale = std::max({1.0, direct.norm(), lie.norm()});
  return (direct - lie).norm() / scale;
}

} // namespace splitoc
