#pragma once

#include "zzgla/families.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace zzgla {

/// A replayable counterexample: the full inputs plus what was expected.
struct Failure {
  std::string what;
  std::vector<GradedMatrix> inputs;
  nlohmann::json expected;
  nlohmann::json got;
};

struct CheckReport {
  /// Witnesses kept per report; failure_count keeps the true total.
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string check;
  std::optional<AlgebraFamily> family;
  std::optional<SignRule> rule;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;
  nlohmann::json details = nlohmann::json::object();
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return failure_count == 0; }
  void record(Failure f);
  /// Folds another report's cases and failures into this one.
  void absorb(const CheckReport& other);
};

/**
 * Exact coordinates of matrices in the span of a fixed linearly independent
 * list. A square invertible minor is chosen once; each solve is checked by
 * reconstructing the input.
 */
class SpanSolver {
 public:
  /// Throws std::invalid_argument if the elements are linearly dependent.
  explicit SpanSolver(const std::vector<GradedMatrix>& elements);

  /// nullopt when v is outside the span.
  std::optional<std::vector<Scalar>> coordinates(const ExactMatrix& v) const;

 private:
  std::vector<ExactMatrix> elements_;
  std::vector<std::size_t> rows_;
  ExactMatrix inverse_;
};

struct StructureConstants {
  std::size_t basis_size = 0;
  /// Nonzero c_{ij}^k, keyed by (i, j, k), zero-based.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> entries;

  Scalar at(std::size_t i, std::size_t j, std::size_t k) const;
};

/// Thrown when a bracket of two basis elements leaves the span.
class SpanEscapeError : public std::runtime_error {
 public:
  SpanEscapeError(std::size_t i, std::size_t j, const std::string& family);
  std::size_t i;
  std::size_t j;
};

/// Jacobi triples are enumerated exhaustively up to this basis size and
/// sampled above it.
inline constexpr std::size_t kExhaustiveJacobiLimit = 40;
inline constexpr std::size_t kSampledJacobiTriples = 100000;
inline constexpr std::uint64_t kJacobiSeed = 0x5eed2024ULL;

/// Grading closure of every pairwise bracket, and membership of each bracket
/// in the span of the basis.
CheckReport check_closure(const GradedBasis& basis, SignRule rule = SignRule::GLA);
/// [[x,y]] = -(-1)^(a.b) [[y,x]] over all ordered pairs.
CheckReport check_antisymmetry(const GradedBasis& basis, SignRule rule = SignRule::GLA);
/// [[x,[[y,z]]]] = [[[[x,y]],z]] + (-1)^(a.b) [[y,[[x,z]]]] over basis triples.
CheckReport check_jacobi(const GradedBasis& basis, SignRule rule = SignRule::GLA);
/// Closure, antisymmetry and Jacobi folded into one report.
CheckReport check_axioms(const GradedBasis& basis, SignRule rule = SignRule::GLA);

/// is_member(family, [[A,B]]) for every pair of basis elements.
CheckReport check_family_closure(const GradedBasis& basis, SignRule rule = SignRule::GLA);

/// Identities (a)-(d) for ordinary commutators and anticommutators:
///   [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0
///   [x,{y,z}] + [y,{z,x}] + [z,{x,y}] = 0
///   [x,{y,z}] + {y,[z,x]} - {z,[x,y]} = 0
///   [x,[y,z]] + {y,{z,x}} - {z,{x,y}} = 0
CheckReport check_four_identities(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z);
CheckReport check_four_identities(const GradedMatrix& x, const GradedMatrix& y, const GradedMatrix& z);

/// Throws SpanEscapeError when a bracket is not in the span.
StructureConstants structure_constants(const GradedBasis& basis, SignRule rule = SignRule::GLA);

/// g00 = [g10,g10] + [g01,g01] and g11 = {g10,g01}, as span dimensions.
CheckReport check_generation(const GradedBasis& basis);

struct CartanResult {
  std::vector<GradedMatrix> elements;
  CheckReport report;
};

/// Intersection of the algebra with the diagonal matrices; checks that it is
/// of degree (0,0), abelian, and of the expected size (n for the form
/// families, 0 for so-graded, N-1 for sl and N for gl).
CartanResult cartan_diagonal(const GradedBasis& basis);

/// Same basis under relabeled degrees: axioms must still hold and the
/// profile must be the relabeled one.
CheckReport check_permutation_stability(const AlgebraFamily& f, const DegreePermutation& pi);
CheckReport check_permutation_stability(const GradedBasis& basis, const DegreePermutation& pi);

/// The basis with every coordinate degree relabeled by pi.
GradedBasis permute_basis(const GradedBasis& basis, const DegreePermutation& pi);

}  // namespace zzgla
