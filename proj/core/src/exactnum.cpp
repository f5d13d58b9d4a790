#include "zzgla/exactnum.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

namespace zzgla {

namespace {

using i128 = detail::wide_int;
using u128 = detail::wide_uint;

constexpr std::int64_t kMax = INT64_MAX;

bool fits_small(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer to_integer(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  Integer out = Integer(static_cast<std::uint64_t>(u >> 64));
  out <<= 64;
  out += Integer(static_cast<std::uint64_t>(u));
  return neg ? Integer(-out) : out;
}

}  // namespace

Rational::Rational(long long v) {
  if (v == INT64_MIN) {
    big_ = std::make_unique<Big>(v);
  } else {
    num_ = v;
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  assign_wide(num, den);
}

Rational::Rational(const Integer& v) { assign_big(Big(v)); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  assign_big(Big(num, den));
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
  }
  return *this;
}

void Rational::assign_big(const Big& v) {
  const Integer& n = boost::multiprecision::numerator(v);
  const Integer& d = boost::multiprecision::denominator(v);
  if (n >= -kMax && n <= kMax && d <= kMax) {
    num_ = n.convert_to<std::int64_t>();
    den_ = d.convert_to<std::int64_t>();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<Big>(v);
  }
}

void Rational::assign_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  if (den != 1) {
    i128 g = gcd128(num, den);
    if (g != 1) {
      num /= g;
      den /= g;
    }
  }
  if (fits_small(num) && fits_small(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<Big>(to_integer(num), to_integer(den));
  }
}

int Rational::sign() const {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

Integer Rational::numerator() const {
  return big_ ? Integer(boost::multiprecision::numerator(*big_)) : Integer(num_);
}

Integer Rational::denominator() const {
  return big_ ? Integer(boost::multiprecision::denominator(*big_)) : Integer(den_);
}

Rational::Big Rational::to_big() const { return big_ ? *big_ : Big(Integer(num_), Integer(den_)); }

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(Big(-*big_));
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s = 0;
      if (!__builtin_add_overflow(num_, o.num_, &s) && s != INT64_MIN) {
        num_ = s;
        return *this;
      }
    }
    assign_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_big() + o.to_big());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t p = 0;
      if (!__builtin_mul_overflow(num_, o.num_, &p) && p != INT64_MIN) {
        num_ = p;
        return *this;
      }
    }
    assign_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_big() * o.to_big());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  if (!big_ && !o.big_) {
    assign_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
  }
  assign_big(to_big() / o.to_big());
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
  }
  const auto x = a.to_big();
  const auto y = b.to_big();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Rational& q) { return q.numerator().str() + "/" + q.denominator().str(); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
      }
    }
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(sqrt2)");
  if (s_.is_zero()) return Scalar(Rational(1) / r_);
  // 1/(r + s*sqrt2) = (r - s*sqrt2) / (r^2 - 2 s^2); the norm is nonzero
  // because sqrt2 is irrational.
  Rational norm = r_ * r_ - 2 * s_ * s_;
  return {r_ / norm, -s_ / norm};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  r_ += o.r_;
  if (!o.s_.is_zero()) s_ += o.s_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  r_ -= o.r_;
  if (!o.s_.is_zero()) s_ -= o.s_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (s_.is_zero() && o.s_.is_zero()) {
    r_ *= o.r_;
    return *this;
  }
  Rational r = r_ * o.r_ + 2 * s_ * o.s_;
  Rational s = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(r);
  s_ = std::move(s);
  return *this;
}

std::string Scalar::str() const {
  auto q = [](const Rational& v) {
    return v.denominator() == 1 ? v.numerator().str() : to_string(v);
  };
  if (s_.is_zero()) return q(r_);
  std::string sq;
  if (s_ == 1) sq = "sqrt2";
  else if (s_ == -1) sq = "-sqrt2";
  else sq = q(s_) + "*sqrt2";
  if (r_.is_zero()) return sq;
  if (sq[0] == '-') return q(r_) + " - " + sq.substr(1);
  return q(r_) + " + " + sq;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Neg: return -a;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

// ---------------------------------------------------------------------------

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t j, std::size_t k) {
  if (j >= n || k >= n) throw std::out_of_range("unit matrix index out of range");
  ExactMatrix m(n, n);
  m(j, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::column(const std::vector<Scalar>& values) {
  ExactMatrix m(values.size(), 1);
  m.data_ = values;
  return m;
}

const Scalar& ExactMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  return (*this)(i, j);
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Scalar ExactMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Scalar& c) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= c;
  }
  return *this;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m = *this;
  for (auto& x : m.data_) {
    if (!x.is_zero()) x = -x;
  }
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in matrix product");
  ExactMatrix c(a.rows_, b.cols_);
  // Matrices in this library are mostly sparse, so zero entries are skipped.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

ExactMatrix anticommutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y + y * x; }

// ---------------------------------------------------------------------------

RrefResult rref(ExactMatrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(lead, j));
    }
    Scalar inv = m(lead, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(lead, j).is_zero()) m(lead, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(lead, j).is_zero()) m(i, j) -= factor * m(lead, j);
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank(); }

std::vector<ExactMatrix> nullspace(const ExactMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivots) is_pivot[c] = true;

  std::vector<ExactMatrix> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ExactMatrix v(cols, 1);
    v(f, 0) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const Scalar& x = r.reduced(i, f);
      if (!x.is_zero()) v(r.pivots[i], 0) = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_dim(const std::vector<ExactMatrix>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t rows = vectors.front().rows();
  const std::size_t cols = vectors.front().cols();
  ExactMatrix stacked(vectors.size(), rows * cols);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& v = vectors[i];
    if (v.rows() != rows || v.cols() != cols) {
      throw std::invalid_argument("span_dim: vectors have different shapes");
    }
    for (std::size_t j = 0; j < v.size(); ++j) stacked(i, j) = v.flat()[j];
  }
  return rank(stacked);
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank() < n || r.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  }
  return inv;
}

}  // namespace zzgla
