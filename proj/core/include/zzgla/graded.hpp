#pragma once

#include "zzgla/exactnum.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zzgla {

/// Element (a1, a2) of Z2 x Z2.
struct Degree {
  std::uint8_t a1 = 0;
  std::uint8_t a2 = 0;

  constexpr Degree() = default;
  constexpr Degree(int first, int second)
      : a1(static_cast<std::uint8_t>(first & 1)), a2(static_cast<std::uint8_t>(second & 1)) {}

  /// Position in the fixed order (0,0), (0,1), (1,0), (1,1).
  constexpr std::size_t index() const noexcept { return 2u * a1 + a2; }
  static constexpr Degree from_index(std::size_t i) { return {static_cast<int>(i >> 1), static_cast<int>(i & 1)}; }

  constexpr Degree operator+(Degree o) const noexcept { return {a1 ^ o.a1, a2 ^ o.a2}; }
  constexpr auto operator<=>(const Degree&) const = default;

  std::string str() const;
};

inline constexpr std::array<Degree, 4> kAllDegrees{Degree{0, 0}, Degree{0, 1}, Degree{1, 0}, Degree{1, 1}};

/// GLA: a.b = a1 b2 - a2 b1.  GLSA: a.b = a1 b1 + a2 b2.
enum class SignRule { GLA, GLSA };

std::string to_string(SignRule rule);
/// "gla" or "glsa"; throws std::invalid_argument otherwise.
SignRule parse_sign_rule(std::string_view text);

/// The integer exponent a.b; only its parity matters.
constexpr int degree_product(Degree a, Degree b, SignRule rule) {
  return rule == SignRule::GLA ? a.a1 * b.a2 - a.a2 * b.a1 : a.a1 * b.a1 + a.a2 * b.a2;
}

/// (-1)^(a.b)
constexpr int degree_sign(Degree a, Degree b, SignRule rule) {
  return (degree_product(a, b, rule) % 2 == 0) ? 1 : -1;
}

/**
 * A relabeling of Z2 x Z2 that fixes (0,0) and permutes the three nonzero
 * degrees. image[d.index()] is the image of d.
 */
struct DegreePermutation {
  std::array<Degree, 4> image = kAllDegrees;

  Degree operator()(Degree d) const { return image[d.index()]; }

  /// All six permutations of {(0,1), (1,0), (1,1)}, identity first.
  static std::vector<DegreePermutation> all();
  /// Swap of two nonzero degrees.
  static DegreePermutation swap(Degree x, Degree y);

  std::string str() const;
  friend bool operator==(const DegreePermutation&, const DegreePermutation&) = default;
};

/// Degree assigned to each coordinate of V; entry (j, k) of an
/// endomorphism has degree d_j + d_k.
class GradingSignature {
 public:
  GradingSignature() = default;
  explicit GradingSignature(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {}

  /// [(0,0)^p, (0,1)^q, (1,0)^r, (1,1)^s]
  static GradingSignature sorted(std::size_t p, std::size_t q, std::size_t r, std::size_t s);

  std::size_t size() const noexcept { return degrees_.size(); }
  const std::vector<Degree>& degrees() const noexcept { return degrees_; }
  Degree operator[](std::size_t j) const { return degrees_[j]; }

  /// Throws std::out_of_range.
  Degree entry_degree(std::size_t j, std::size_t k) const;

  /// Coordinate counts per degree, in the order (0,0),(0,1),(1,0),(1,1).
  std::array<std::size_t, 4> multiplicities() const;

  std::string str() const;
  friend bool operator==(const GradingSignature&, const GradingSignature&) = default;

 private:
  std::vector<Degree> degrees_;
};

/// Replaces every coordinate degree by its image. Throws
/// std::invalid_argument if pi moves (0,0) or is not a bijection.
GradingSignature permute_grading(const GradingSignature& sig, const DegreePermutation& pi);

/// Adds a constant c to every coordinate degree. Entry degrees are unchanged
/// by this, though the graded transpose picks up the sign (-1)^(a.c).
GradingSignature shift_grading(const GradingSignature& sig, Degree c);

/**
 * Square matrix over Q(sqrt 2) attached to a grading signature.
 *
 * When a degree is declared, every nonzero entry must sit at a position of
 * that entry degree; the constructor enforces it.
 */
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(GradingSignature sig, ExactMatrix entries, std::optional<Degree> degree = std::nullopt);

  static GradedMatrix zero(const GradingSignature& sig) {
    return {sig, ExactMatrix(sig.size(), sig.size())};
  }
  static GradedMatrix identity(const GradingSignature& sig) {
    return {sig, ExactMatrix::identity(sig.size()), Degree{0, 0}};
  }
  /// e_{jk} tagged with its entry degree (zero-based indices).
  static GradedMatrix unit(const GradingSignature& sig, std::size_t j, std::size_t k);

  const GradingSignature& signature() const noexcept { return sig_; }
  const ExactMatrix& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return sig_.size(); }
  const std::optional<Degree>& declared_degree() const noexcept { return degree_; }

  /// The declared degree, else the common degree of all nonzero entries if
  /// there is one. The zero matrix without a declaration has none.
  std::optional<Degree> homogeneous_degree() const;

  bool is_zero() const { return entries_.is_zero(); }

  /// Same entries and signature; degree tags are not compared.
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.sig_ == b.sig_ && a.entries_ == b.entries_;
  }

  GradedMatrix with_degree(std::optional<Degree> d) const { return {sig_, entries_, d}; }
  GradedMatrix with_signature(GradingSignature sig, std::optional<Degree> d) const {
    return {std::move(sig), entries_, d};
  }

 private:
  GradingSignature sig_;
  ExactMatrix entries_;
  std::optional<Degree> degree_;
};

GradedMatrix operator+(const GradedMatrix& x, const GradedMatrix& y);
GradedMatrix operator-(const GradedMatrix& x, const GradedMatrix& y);
GradedMatrix operator*(const Scalar& c, const GradedMatrix& x);

/// Components of a graded matrix, indexed by Degree::index().
struct HomogeneousDecomposition {
  std::array<GradedMatrix, 4> components;

  const GradedMatrix& operator[](Degree d) const { return components[d.index()]; }
  GradedMatrix sum() const;
};

HomogeneousDecomposition decompose(const GradedMatrix& m);

/// Ordinary matrix product; degrees add for homogeneous inputs.
/// Throws std::invalid_argument on a signature mismatch.
GradedMatrix graded_product(const GradedMatrix& x, const GradedMatrix& y);

/// [[x, y]] = xy - (-1)^(a.b) yx on homogeneous components, extended
/// bilinearly. Throws std::invalid_argument on a signature mismatch.
GradedMatrix graded_bracket(const GradedMatrix& x, const GradedMatrix& y, SignRule rule = SignRule::GLA);

/// Graded transpose: for a component of degree a,
/// result(j, k) = (-1)^(a.d_j) m(k, j), always with the GLA product.
GradedMatrix graded_transpose(const GradedMatrix& m);

Scalar trace(const GradedMatrix& m);

}  // namespace zzgla
