#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace zzgla {

using Integer = boost::multiprecision::cpp_int;

namespace detail {
__extension__ typedef __int128 wide_int;
__extension__ typedef unsigned __int128 wide_uint;
}  // namespace detail

/**
 * Exact rational number in lowest terms with a positive denominator.
 *
 * Values whose numerator and denominator fit in 64 bits are stored inline;
 * anything larger moves to an arbitrary-precision representation. The form
 * is canonical, so a small and a big Rational are never equal.
 */
class Rational {
 public:
  using Big = boost::multiprecision::cpp_rational;

  Rational() noexcept = default;
  Rational(long long v);  // NOLINT(google-explicit-constructor)
  Rational(int v) : Rational(static_cast<long long>(v)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument when den == 0.
  Rational(long long num, long long den);
  explicit Rational(const Integer& v);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const Big& v) { assign_big(v); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<Big>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_small() const noexcept { return !big_; }
  int sign() const;

  Integer numerator() const;
  Integer denominator() const;
  Big to_big() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign_big(const Big& v);
  void assign_wide(detail::wide_int num, detail::wide_int den);

  // Small form: num_/den_ with den_ > 0, gcd 1 and num_ != INT64_MIN.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<Big> big_;
};

/// Canonical "num/den" form, e.g. "-3/2", "0/1".
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/**
 * Exact element r + s*sqrt(2) of the quadratic field Q(sqrt 2).
 *
 * The representation is unique since sqrt(2) is irrational, so equality and
 * the zero test are componentwise.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long r) : r_(r) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : r_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {}

  static Scalar sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const noexcept { return r_; }
  const Rational& sqrt2_part() const noexcept { return s_; }

  bool is_zero() const { return r_.is_zero() && s_.is_zero(); }
  bool is_rational() const { return s_.is_zero(); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar operator-() const { return {-r_, -s_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.r_ == b.r_ && a.s_ == b.s_;
  }

  /// Human-readable form such as "1 + 2*sqrt2" or "-sqrt2".
  std::string str() const;

 private:
  Rational r_{0};
  Rational s_{0};
};

enum class ArithOp { Add, Sub, Mul, Div, Neg };

/// Dispatching form of the field operations. `b` is ignored for Neg.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Dense row-major matrix over Q(sqrt 2).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ExactMatrix identity(std::size_t n);
  /// e_{jk}: single 1 at (j, k), zero-based.
  static ExactMatrix unit(std::size_t n, std::size_t j, std::size_t k);
  static ExactMatrix column(const std::vector<Scalar>& values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Bounds-checked access; throws std::out_of_range.
  const Scalar& at(std::size_t i, std::size_t j) const;

  /// Row-major flat view, used to treat matrices as vectors.
  const std::vector<Scalar>& flat() const noexcept { return data_; }
  std::vector<Scalar>& flat() noexcept { return data_; }

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  ExactMatrix transpose() const;
  Scalar trace() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const Scalar& c);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Scalar& c) { return a *= c; }
  friend ExactMatrix operator*(const Scalar& c, ExactMatrix a) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix operator-() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [x, y] = xy - yx
ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);
/// {x, y} = xy + yx
ExactMatrix anticommutator(const ExactMatrix& x, const ExactMatrix& y);

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/**
 * Reduced row-echelon form. Columns are scanned left to right and the pivot
 * is the first row (from the current position down) with a nonzero entry in
 * that column, so the output is fully deterministic.
 */
RrefResult rref(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {v : m v = 0} as column vectors, one per free column in
/// increasing column order; the free coordinate is 1 in its own vector.
std::vector<ExactMatrix> nullspace(const ExactMatrix& m);

/// Dimension of the span of same-shaped matrices, each read as a flat vector.
/// Throws std::invalid_argument on a shape mismatch.
std::size_t span_dim(const std::vector<ExactMatrix>& vectors);

/// Inverse of a square matrix; throws std::domain_error when singular.
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace zzgla
