#pragma once

#include "zzgla/graded.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zzgla {

enum class FamilyKind { GL, SL, SOGraded, SPp, SOpEven, SOpOdd };

/// Command-line names: gl, sl, so-graded, sp, so-even, so-odd.
std::string_view cli_name(FamilyKind kind);
/// Throws std::invalid_argument for an unknown name.
FamilyKind parse_family_kind(std::string_view name);

/**
 * One of the six matrix families with its parameters.
 *
 * gl/sl/so-graded are parameterized by the block sizes (p, q, r, s) of the
 * sorted grading; sp/so-even/so-odd by (n, p) with 0 <= p <= n.
 */
struct AlgebraFamily {
  FamilyKind kind = FamilyKind::GL;
  std::array<std::size_t, 4> pqrs{};
  std::size_t n = 0;
  std::size_t p = 0;

  static AlgebraFamily gl(std::size_t p, std::size_t q, std::size_t r, std::size_t s);
  static AlgebraFamily sl(std::size_t p, std::size_t q, std::size_t r, std::size_t s);
  static AlgebraFamily so_graded(std::size_t p, std::size_t q, std::size_t r, std::size_t s);
  static AlgebraFamily sp(std::size_t n, std::size_t p);
  static AlgebraFamily so_even(std::size_t n, std::size_t p);
  static AlgebraFamily so_odd(std::size_t n, std::size_t p);

  bool has_form() const noexcept {
    return kind == FamilyKind::SPp || kind == FamilyKind::SOpEven || kind == FamilyKind::SOpOdd;
  }
  std::size_t matrix_size() const;
  /// Readable name such as "sl_{1,1,1,1}(4)" or "so_1(5)".
  std::string label() const;

  /// Throws std::invalid_argument when parameters are out of range.
  void validate() const;

  friend bool operator==(const AlgebraFamily&, const AlgebraFamily&) = default;
};

/// Multiplicities of the four graded components, possibly negative for the
/// printed so-odd formula.
struct DimensionProfile {
  std::array<long long, 4> d{};

  long long operator[](Degree deg) const { return d[deg.index()]; }
  long long total() const { return d[0] + d[1] + d[2] + d[3]; }
  friend bool operator==(const DimensionProfile&, const DimensionProfile&) = default;
};

enum class FormLabel { J, K, KPrime };
std::string to_string(FormLabel label);

struct DefiningForm {
  FormLabel label;
  GradedMatrix matrix;
};

/// Homogeneous basis of a family, grouped by degree in the order
/// (0,0), (0,1), (1,0), (1,1).
struct GradedBasis {
  AlgebraFamily family;
  GradingSignature signature;
  std::vector<GradedMatrix> elements;

  std::size_t size() const noexcept { return elements.size(); }
  Degree degree(std::size_t i) const { return *elements[i].declared_degree(); }
  DimensionProfile profile() const;
};

struct Violation {
  std::string condition;
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar value;
};

struct Membership {
  bool member = true;
  std::optional<Violation> violation;

  explicit operator bool() const noexcept { return member; }
};

/// Coordinate degrees for each family. For so-odd the layout follows the
/// five-block display, [(0,1)^p, (1,0)^{n-p}, (0,1)^p, (1,0)^{n-p}, (0,0)].
GradingSignature family_signature(const AlgebraFamily& f);

/**
 * so-odd layout vs. the sl_{2p,1,0,2n-2p}(2n+1) labeling: adding this degree
 * to every coordinate maps one onto the other. Entry degrees are unchanged,
 * but the graded transpose is not, and the K' condition is evaluated on the
 * shifted labeling.
 */
inline constexpr Degree kSoOddLayoutShift{0, 1};

/// J (sp), K (so-even) or K' (so-odd). Throws std::invalid_argument for the
/// other kinds.
DefiningForm defining_form(const AlgebraFamily& f);

/**
 * Evaluates the defining conditions: trace zero (all but gl), A^T + A = 0
 * (so-graded) or A^T M + M A = 0 (form families), reporting the first
 * nonzero residual entry. Throws std::invalid_argument on a signature
 * mismatch.
 */
Membership is_member(const AlgebraFamily& f, const GradedMatrix& a);

/// Homogeneous basis from the exact solution space of the defining
/// conditions; each element is scaled so its first nonzero entry is 1.
GradedBasis build_basis(const AlgebraFamily& f);

/// Dimension formulas as printed for each family (so-graded: derived from
/// its block form). The so-odd (0,0) entry is 2n^2 - n - 4p(n-p)^2.
DimensionProfile dimension_profile(const AlgebraFamily& f);
DimensionProfile dimension_profile_measured(const AlgebraFamily& f);

/// The (0,0) dimension of so_p(2n+1) consistent with the total 2n^2+n.
long long so_odd_consistent_d00(std::size_t n, std::size_t p);

/// 2n^2+n, 2n^2-n, 2n^2+n for sp, so-even, so-odd.
std::size_t classical_counterpart_dims(const AlgebraFamily& f);

// ---------------------------------------------------------------------------
// Block templates: the displayed block forms, kept as data.

enum class BlockShape { Free, Symmetric, Antisymmetric, Zero, Linked };
std::string to_string(BlockShape shape);

struct TemplateBlock {
  std::size_t row_block = 0;
  std::size_t col_block = 0;
  std::string name;
  Degree degree;
  BlockShape shape = BlockShape::Free;
  /// Linked blocks equal sign * (source block)^t.
  std::string source;
  int sign = 1;
  /// Marked as a sign flip relative to the classical form.
  bool framed = false;
};

struct BlockTemplate {
  FamilyKind kind;
  std::vector<std::size_t> block_sizes;
  std::vector<TemplateBlock> blocks;
  bool traceless = false;

  const TemplateBlock& block(std::size_t row_block, std::size_t col_block) const;
  const TemplateBlock& named(std::string_view name) const;
};

BlockTemplate block_template(const AlgebraFamily& f);

/// Checks that every block's degree label agrees with entry_degree on the
/// given signature; returns a description of the first mismatch.
std::optional<std::string> template_degree_mismatch(const BlockTemplate& tpl, const GradingSignature& sig);

/// One instance per free parameter of the template (restricted to trace zero
/// when the template is traceless), each tagged with its block degree.
std::vector<GradedMatrix> template_instances(const BlockTemplate& tpl, const GradingSignature& sig);

}  // namespace zzgla
