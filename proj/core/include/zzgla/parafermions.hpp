#pragma once

#include "zzgla/axioms.hpp"

namespace zzgla {

/**
 * Two sorts of parafermion generators inside so_q(2n+1):
 *
 *   f_j^- = sqrt2 (e_{j,2n+1} - e_{2n+1,n+j})
 *   f_j^+ = sqrt2 (e_{2n+1,j} - e_{n+j,2n+1})
 *
 * Generators with j <= q form the first sort (degree (0,1)), the rest the
 * second sort (degree (1,0)). Indices j are 1-based throughout.
 */
class ParafermionSystem {
 public:
  ParafermionSystem(std::size_t n, std::size_t q);

  std::size_t n() const noexcept { return n_; }
  std::size_t q() const noexcept { return q_; }
  const AlgebraFamily& family() const noexcept { return family_; }
  const GradingSignature& signature() const noexcept { return signature_; }

  /// f_j^sign for sign = +1 or -1. Throws std::out_of_range.
  const GradedMatrix& generator(std::size_t j, int sign) const;
  Degree degree(std::size_t j) const { return j <= q_ ? Degree{0, 1} : Degree{1, 0}; }
  bool same_sort(std::size_t j, std::size_t k) const { return (j <= q_) == (k <= q_); }

 private:
  std::size_t n_;
  std::size_t q_;
  AlgebraFamily family_;
  GradingSignature signature_;
  std::vector<GradedMatrix> minus_;
  std::vector<GradedMatrix> plus_;
};

/// Throws std::invalid_argument unless n >= 1 and 0 <= q <= n.
ParafermionSystem build_system(std::size_t n, std::size_t q);

/// Right-hand side coefficient (1/2)(u - v)^2 for signs u, v in {+1, -1}.
Rational half_square_gap(int u, int v);

/// [[f_j^xi, f_k^eta], f_l^eps] = 1/2 (eps-eta)^2 d_kl f_j^xi - 1/2 (eps-xi)^2 d_jl f_k^eta
/// for all j, k, l within one sort and all eight sign patterns.
CheckReport check_pf(const ParafermionSystem& sys);

/// {{f_j^xi, f_k^eta}, f_l^eps} = 1/2 (eps-eta)^2 d_kl f_j^xi + 1/2 (eps-xi)^2 d_jl f_k^eta
/// for j, k in different sorts and any l. Throws std::invalid_argument when a
/// sort is empty.
CheckReport check_pfrel(const ParafermionSystem& sys);

/// Spans of each sort, of same-sort commutators and of cross-sort
/// anticommutators, compared with the measured profile of so_q(2n+1).
/// The spans land in report.details["subspace_spans"].
CheckReport identify_subspaces(const ParafermionSystem& sys);

struct ParafermionSummary {
  std::size_t n = 0;
  std::size_t q = 0;
  std::size_t pf_cases = 0;
  std::size_t pfrel_cases = 0;
  bool pass = false;
  DimensionProfile subspace_spans;
  std::vector<CheckReport> reports;
};

/// Runs generator membership, check_pf, check_pfrel (when both sorts are
/// nonempty) and identify_subspaces.
ParafermionSummary summarize(const ParafermionSystem& sys);

}  // namespace zzgla
