#include "zzgla/parafermions.hpp"

#include "zzgla/serialize.hpp"

#include <stdexcept>

namespace zzgla {

ParafermionSystem::ParafermionSystem(std::size_t n, std::size_t q)
    : n_(n), q_(q), family_(AlgebraFamily::so_odd(n, q)), signature_(family_signature(family_)) {
  const std::size_t last = 2 * n;  // zero-based index of row/column 2n+1
  const Scalar r2 = Scalar::sqrt2();
  for (std::size_t j = 1; j <= n; ++j) {
    ExactMatrix fm(last + 1, last + 1);
    fm(j - 1, last) = r2;
    fm(last, n + j - 1) = -r2;
    ExactMatrix fp(last + 1, last + 1);
    fp(last, j - 1) = r2;
    fp(n + j - 1, last) = -r2;
    minus_.emplace_back(signature_, std::move(fm), degree(j));
    plus_.emplace_back(signature_, std::move(fp), degree(j));
  }
}

const GradedMatrix& ParafermionSystem::generator(std::size_t j, int sign) const {
  if (j < 1 || j > n_) throw std::out_of_range("parafermion index " + std::to_string(j) + " outside 1.." + std::to_string(n_));
  if (sign != 1 && sign != -1) throw std::out_of_range("parafermion sign must be +1 or -1");
  return sign > 0 ? plus_[j - 1] : minus_[j - 1];
}

ParafermionSystem build_system(std::size_t n, std::size_t q) {
  if (n < 1) throw std::invalid_argument("parafermion system needs n >= 1");
  if (q > n) throw std::invalid_argument("parafermion sort boundary must satisfy 0 <= q <= n");
  return {n, q};
}

Rational half_square_gap(int u, int v) {
  const int d = u - v;
  return Rational(d * d, 2);
}

namespace {

constexpr int kSigns[] = {1, -1};

std::string case_label(const char* rel, std::size_t j, std::size_t k, std::size_t l, int xi, int eta, int eps) {
  auto s = [](int v) { return v > 0 ? "+" : "-"; };
  return std::string(rel) + " j=" + std::to_string(j) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
         " xi=" + s(xi) + " eta=" + s(eta) + " eps=" + s(eps);
}

CheckReport make_report(const ParafermionSystem& sys, std::string name) {
  CheckReport r;
  r.check = std::move(name);
  r.family = sys.family();
  return r;
}

/// Shared driver: `nested` builds the left side, `sign` is -1 for PF and +1
/// for PFrel in front of the delta_jl term.
template <typename Nested>
void run_case(CheckReport& r, const ParafermionSystem& sys, const char* rel, Nested nested, int sign, std::size_t j,
              std::size_t k, std::size_t l) {
  for (int xi : kSigns) {
    for (int eta : kSigns) {
      for (int eps : kSigns) {
        ++r.cases;
        const auto& fj = sys.generator(j, xi);
        const auto& fk = sys.generator(k, eta);
        const auto& fl = sys.generator(l, eps);
        ExactMatrix lhs = nested(fj.entries(), fk.entries(), fl.entries());
        ExactMatrix rhs(lhs.rows(), lhs.cols());
        if (k == l) rhs += Scalar(half_square_gap(eps, eta)) * fj.entries();
        if (j == l) rhs += Scalar(sign * half_square_gap(eps, xi)) * fk.entries();
        if (!(lhs == rhs)) {
          GradedMatrix got(sys.signature(), lhs);
          GradedMatrix want(sys.signature(), rhs);
          r.record({case_label(rel, j, k, l, xi, eta, eps), {fj, fk, fl}, json(want), json(got)});
        }
      }
    }
  }
}

}  // namespace

CheckReport check_pf(const ParafermionSystem& sys) {
  CheckReport r = make_report(sys, "pf");
  auto nested = [](const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
    return commutator(commutator(a, b), c);
  };
  const std::size_t n = sys.n();
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t l = 1; l <= n; ++l) {
        if (sys.same_sort(j, k) && sys.same_sort(k, l)) run_case(r, sys, "PF", nested, -1, j, k, l);
      }
    }
  }
  return r;
}

CheckReport check_pfrel(const ParafermionSystem& sys) {
  if (sys.q() < 1 || sys.q() >= sys.n()) {
    throw std::invalid_argument("check_pfrel needs both sorts nonempty (1 <= q <= n-1)");
  }
  CheckReport r = make_report(sys, "pfrel");
  auto nested = [](const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
    return anticommutator(anticommutator(a, b), c);
  };
  const std::size_t n = sys.n();
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (sys.same_sort(j, k)) continue;
      for (std::size_t l = 1; l <= n; ++l) run_case(r, sys, "PFrel", nested, 1, j, k, l);
    }
  }
  return r;
}

CheckReport identify_subspaces(const ParafermionSystem& sys) {
  CheckReport r = make_report(sys, "subspaces");
  const std::size_t n = sys.n();
  const std::size_t q = sys.q();

  std::vector<ExactMatrix> first;
  std::vector<ExactMatrix> second;
  for (std::size_t j = 1; j <= n; ++j) {
    for (int s : kSigns) (j <= q ? first : second).push_back(sys.generator(j, s).entries());
  }

  auto expect_degree = [&](const ExactMatrix& m, Degree d, const std::string& what) {
    GradedMatrix g(sys.signature(), m);
    auto deg = g.homogeneous_degree();
    ++r.cases;
    if (!g.is_zero() && deg != d) r.record({what + " is not homogeneous of degree " + d.str(), {g}, json(d), json(g)});
  };

  std::vector<ExactMatrix> commutators;
  std::vector<ExactMatrix> anticommutators;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = 1; l <= n; ++l) {
      for (int xi : kSigns) {
        for (int eta : kSigns) {
          const auto& a = sys.generator(k, xi).entries();
          const auto& b = sys.generator(l, eta).entries();
          if (sys.same_sort(k, l)) {
            commutators.push_back(commutator(a, b));
            expect_degree(commutators.back(), {0, 0}, "same-sort commutator");
          } else if (k <= q) {
            anticommutators.push_back(anticommutator(a, b));
            expect_degree(anticommutators.back(), {1, 1}, "cross-sort anticommutator");
          }
        }
      }
    }
  }

  DimensionProfile spans;
  spans.d = {static_cast<long long>(span_dim(commutators)), static_cast<long long>(span_dim(first)),
             static_cast<long long>(span_dim(second)), static_cast<long long>(span_dim(anticommutators))};
  DimensionProfile measured = dimension_profile_measured(sys.family());
  r.details["subspace_spans"] = json(spans);
  r.details["measured_profile"] = json(measured);

  for (Degree d : kAllDegrees) {
    ++r.cases;
    if (spans[d] != measured[d]) {
      r.record({"span for degree " + d.str() + " differs from dim g" + d.str(), {}, measured[d], spans[d]});
    }
  }
  return r;
}

ParafermionSummary summarize(const ParafermionSystem& sys) {
  ParafermionSummary s;
  s.n = sys.n();
  s.q = sys.q();

  CheckReport members = make_report(sys, "membership");
  for (std::size_t j = 1; j <= sys.n(); ++j) {
    for (int sign : kSigns) {
      ++members.cases;
      const auto& g = sys.generator(j, sign);
      Membership m = is_member(sys.family(), g);
      if (!m) members.record({"generator outside so_q(2n+1): " + m.violation->condition, {g}, json(Scalar()),
                              json(m.violation->value)});
    }
  }
  s.reports.push_back(std::move(members));

  s.reports.push_back(check_pf(sys));
  s.pf_cases = s.reports.back().cases;
  if (sys.q() >= 1 && sys.q() < sys.n()) {
    s.reports.push_back(check_pfrel(sys));
    s.pfrel_cases = s.reports.back().cases;
  }
  s.reports.push_back(identify_subspaces(sys));
  s.subspace_spans.d = {
      s.reports.back().details["subspace_spans"]["d00"].get<long long>(),
      s.reports.back().details["subspace_spans"]["d01"].get<long long>(),
      s.reports.back().details["subspace_spans"]["d10"].get<long long>(),
      s.reports.back().details["subspace_spans"]["d11"].get<long long>(),
  };
  s.pass = true;
  for (const auto& r : s.reports) s.pass = s.pass && r.passed();
  return s;
}

}  // namespace zzgla
