#include "zzgla/axioms.hpp"

#include "zzgla/serialize.hpp"

#include <random>
#include <stdexcept>

namespace zzgla {

void CheckReport::record(Failure f) {
  ++failure_count;
  if (failures.size() < kMaxWitnesses) failures.push_back(std::move(f));
}

void CheckReport::absorb(const CheckReport& other) {
  cases += other.cases;
  failure_count += other.failure_count;
  for (const auto& f : other.failures) {
    if (failures.size() < kMaxWitnesses) failures.push_back(f);
  }
  elapsed += other.elapsed;
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(CheckReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() { report_.elapsed = std::chrono::steady_clock::now() - start_; }
  Stopwatch(const Stopwatch&) = delete;
  Stopwatch& operator=(const Stopwatch&) = delete;

 private:
  CheckReport& report_;
  std::chrono::steady_clock::time_point start_;
};

CheckReport make_report(std::string name, const GradedBasis& basis, std::optional<SignRule> rule) {
  CheckReport r;
  r.check = std::move(name);
  r.family = basis.family;
  r.rule = rule;
  return r;
}

/// All pairwise brackets, row-major by (i, j).
std::vector<GradedMatrix> bracket_table(const GradedBasis& basis, SignRule rule) {
  const std::size_t dim = basis.size();
  std::vector<GradedMatrix> table;
  table.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      table.push_back(graded_bracket(basis.elements[i], basis.elements[j], rule));
    }
  }
  return table;
}

std::optional<std::string> grading_violation(const GradedMatrix& m, Degree expected) {
  const auto& sig = m.signature();
  for (std::size_t j = 0; j < sig.size(); ++j) {
    for (std::size_t k = 0; k < sig.size(); ++k) {
      if (!m.entries()(j, k).is_zero() && sig.entry_degree(j, k) != expected) {
        return "nonzero entry (" + std::to_string(j) + "," + std::to_string(k) + ") of degree " +
               sig.entry_degree(j, k).str();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

SpanSolver::SpanSolver(const std::vector<GradedMatrix>& elements) {
  if (elements.empty()) return;
  const std::size_t len = elements.front().entries().size();
  ExactMatrix rowsmat(elements.size(), len);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    elements_.push_back(elements[i].entries());
    if (elements_.back().size() != len) throw std::invalid_argument("SpanSolver: elements differ in shape");
    for (std::size_t e = 0; e < len; ++e) rowsmat(i, e) = elements_.back().flat()[e];
  }
  RrefResult r = rref(rowsmat);
  if (r.rank() != elements.size()) throw std::invalid_argument("SpanSolver: elements are linearly dependent");
  rows_ = r.pivots;
  // minor(i, t) = element t at flat position rows_[i]
  ExactMatrix minor(rows_.size(), rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t t = 0; t < elements_.size(); ++t) minor(i, t) = elements_[t].flat()[rows_[i]];
  }
  inverse_ = inverse(minor);
}

std::optional<std::vector<Scalar>> SpanSolver::coordinates(const ExactMatrix& v) const {
  std::vector<Scalar> coords(elements_.size());
  if (elements_.empty()) {
    if (v.is_zero()) return coords;
    return std::nullopt;
  }
  if (v.size() != elements_.front().size()) throw std::invalid_argument("SpanSolver: shape mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& rhs = v.flat()[rows_[i]];
    if (rhs.is_zero()) continue;
    for (std::size_t t = 0; t < coords.size(); ++t) {
      const Scalar& a = inverse_(t, i);
      if (!a.is_zero()) coords[t] += a * rhs;
    }
  }
  ExactMatrix rebuilt(v.rows(), v.cols());
  for (std::size_t t = 0; t < coords.size(); ++t) {
    if (!coords[t].is_zero()) rebuilt += coords[t] * elements_[t];
  }
  if (!(rebuilt == v)) return std::nullopt;
  return coords;
}

Scalar StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = entries.find({i, j, k});
  return it == entries.end() ? Scalar() : it->second;
}

SpanEscapeError::SpanEscapeError(std::size_t i_, std::size_t j_, const std::string& family)
    : std::runtime_error("bracket of basis elements " + std::to_string(i_) + " and " + std::to_string(j_) + " of " +
                         family + " is not in the span of the basis"),
      i(i_),
      j(j_) {}

// ---------------------------------------------------------------------------

CheckReport check_closure(const GradedBasis& basis, SignRule rule) {
  CheckReport r = make_report("closure", basis, rule);
  Stopwatch sw(r);
  SpanSolver solver(basis.elements);
  const std::size_t dim = basis.size();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      ++r.cases;
      const auto& x = basis.elements[i];
      const auto& y = basis.elements[j];
      GradedMatrix b = graded_bracket(x, y, rule);
      Degree expected = basis.degree(i) + basis.degree(j);
      if (auto bad = grading_violation(b, expected)) {
        r.record({"[[x,y]] not of degree " + expected.str() + ": " + *bad, {x, y}, json(expected), json(b)});
      } else if (!solver.coordinates(b.entries())) {
        r.record({"[[x,y]] is outside the span of the basis", {x, y}, "element of span", json(b)});
      }
    }
  }
  return r;
}

CheckReport check_antisymmetry(const GradedBasis& basis, SignRule rule) {
  CheckReport r = make_report("symmetry", basis, rule);
  Stopwatch sw(r);
  const std::size_t dim = basis.size();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      ++r.cases;
      const auto& x = basis.elements[i];
      const auto& y = basis.elements[j];
      GradedMatrix xy = graded_bracket(x, y, rule);
      GradedMatrix yx = graded_bracket(y, x, rule);
      const int s = degree_sign(basis.degree(i), basis.degree(j), rule);
      GradedMatrix expected = Scalar(-s) * yx;
      if (!(xy == expected)) {
        r.record({"[[x,y]] != -(-1)^(a.b) [[y,x]]", {x, y}, json(expected), json(xy)});
      }
    }
  }
  return r;
}

CheckReport check_jacobi(const GradedBasis& basis, SignRule rule) {
  CheckReport r = make_report("jacobi", basis, rule);
  Stopwatch sw(r);
  const std::size_t dim = basis.size();
  if (dim == 0) return r;
  auto table = bracket_table(basis, rule);
  const auto& e = basis.elements;

  auto run = [&](std::size_t i, std::size_t j, std::size_t k) {
    ++r.cases;
    GradedMatrix lhs = graded_bracket(e[i], table[j * dim + k], rule);
    GradedMatrix rhs = graded_bracket(table[i * dim + j], e[k], rule);
    GradedMatrix tail = graded_bracket(e[j], table[i * dim + k], rule);
    if (degree_sign(basis.degree(i), basis.degree(j), rule) == 1) rhs = rhs + tail;
    else rhs = rhs - tail;
    if (!(lhs == rhs)) {
      r.record({"graded Jacobi identity fails", {e[i], e[j], e[k]}, json(rhs), json(lhs)});
    }
  };

  if (dim <= kExhaustiveJacobiLimit) {
    r.details["mode"] = "exhaustive";
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) run(i, j, k);
      }
    }
  } else {
    r.details["mode"] = "sampled";
    r.details["seed"] = kJacobiSeed;
    std::mt19937_64 rng(kJacobiSeed);
    std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
    for (std::size_t t = 0; t < kSampledJacobiTriples; ++t) {
      std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      std::size_t k = pick(rng);
      run(i, j, k);
    }
  }
  return r;
}

CheckReport check_axioms(const GradedBasis& basis, SignRule rule) {
  CheckReport r = make_report("axioms", basis, rule);
  for (auto sub : {check_closure(basis, rule), check_antisymmetry(basis, rule), check_jacobi(basis, rule)}) {
    r.details[sub.check] = {{"cases", sub.cases}, {"failures", sub.failure_count}};
    r.absorb(sub);
  }
  return r;
}

CheckReport check_family_closure(const GradedBasis& basis, SignRule rule) {
  CheckReport r = make_report("family-closure", basis, rule);
  Stopwatch sw(r);
  const std::size_t dim = basis.size();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      ++r.cases;
      const auto& x = basis.elements[i];
      const auto& y = basis.elements[j];
      GradedMatrix b = graded_bracket(x, y, rule);
      Membership m = is_member(basis.family, b);
      if (!m) {
        r.record({"[[A,B]] violates " + m.violation->condition + " at (" + std::to_string(m.violation->row) + "," +
                      std::to_string(m.violation->col) + ")",
                  {x, y},
                  json(Scalar()),
                  json(m.violation->value)});
      }
    }
  }
  return r;
}

CheckReport check_four_identities(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != z.rows() || x.cols() != z.cols() ||
      !x.is_square()) {
    throw std::invalid_argument("check_four_identities: inputs must be square matrices of one shape");
  }
  CheckReport r;
  r.check = "identities";
  Stopwatch sw(r);
  auto C = [](const ExactMatrix& u, const ExactMatrix& v) { return commutator(u, v); };
  auto A = [](const ExactMatrix& u, const ExactMatrix& v) { return anticommutator(u, v); };
  const std::pair<const char*, ExactMatrix> cases[] = {
      {"(a) [x,[y,z]]+[y,[z,x]]+[z,[x,y]]", C(x, C(y, z)) + C(y, C(z, x)) + C(z, C(x, y))},
      {"(b) [x,{y,z}]+[y,{z,x}]+[z,{x,y}]", C(x, A(y, z)) + C(y, A(z, x)) + C(z, A(x, y))},
      {"(c) [x,{y,z}]+{y,[z,x]}-{z,[x,y]}", C(x, A(y, z)) + A(y, C(z, x)) - A(z, C(x, y))},
      {"(d) [x,[y,z]]+{y,{z,x}}-{z,{x,y}}", C(x, C(y, z)) + A(y, A(z, x)) - A(z, A(x, y))},
  };
  GradingSignature flat = GradingSignature::sorted(x.rows(), 0, 0, 0);
  for (const auto& [name, value] : cases) {
    ++r.cases;
    if (!value.is_zero()) {
      r.record({std::string(name) + " is nonzero",
                {GradedMatrix(flat, x), GradedMatrix(flat, y), GradedMatrix(flat, z)},
                json(GradedMatrix::zero(flat)),
                json(GradedMatrix(flat, value))});
    }
  }
  return r;
}

CheckReport check_four_identities(const GradedMatrix& x, const GradedMatrix& y, const GradedMatrix& z) {
  return check_four_identities(x.entries(), y.entries(), z.entries());
}

StructureConstants structure_constants(const GradedBasis& basis, SignRule rule) {
  StructureConstants sc;
  sc.basis_size = basis.size();
  SpanSolver solver(basis.elements);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      GradedMatrix b = graded_bracket(basis.elements[i], basis.elements[j], rule);
      if (b.is_zero()) continue;
      auto coords = solver.coordinates(b.entries());
      if (!coords) throw SpanEscapeError(i, j, basis.family.label());
      for (std::size_t k = 0; k < coords->size(); ++k) {
        if (!(*coords)[k].is_zero()) sc.entries.emplace(std::make_tuple(i, j, k), std::move((*coords)[k]));
      }
    }
  }
  return sc;
}

CheckReport check_generation(const GradedBasis& basis) {
  CheckReport r = make_report("generation", basis, SignRule::GLA);
  Stopwatch sw(r);
  std::vector<const GradedMatrix*> g01;
  std::vector<const GradedMatrix*> g10;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.degree(i) == Degree{0, 1}) g01.push_back(&basis.elements[i]);
    if (basis.degree(i) == Degree{1, 0}) g10.push_back(&basis.elements[i]);
  }
  const auto profile = basis.profile();

  std::vector<ExactMatrix> even;
  for (const auto* part : {&g10, &g01}) {
    for (std::size_t a = 0; a < part->size(); ++a) {
      for (std::size_t b = a + 1; b < part->size(); ++b) {
        even.push_back(commutator((*part)[a]->entries(), (*part)[b]->entries()));
      }
    }
  }
  std::vector<ExactMatrix> mixed;
  for (const auto* x : g10) {
    for (const auto* y : g01) mixed.push_back(anticommutator(x->entries(), y->entries()));
  }
  const auto span00 = static_cast<long long>(span_dim(even));
  const auto span11 = static_cast<long long>(span_dim(mixed));
  r.details["span_00"] = span00;
  r.details["span_11"] = span11;
  r.details["d00"] = profile.d[0];
  r.details["d11"] = profile.d[3];
  r.details["g10_g01_nontrivial"] = !g10.empty() && !g01.empty();

  r.cases = 2;
  if (span00 != profile.d[0]) {
    r.record({"dim([g10,g10] + [g01,g01]) != dim g00", {}, profile.d[0], span00});
  }
  if (span11 != profile.d[3]) {
    r.record({"dim {g10,g01} != dim g11", {}, profile.d[3], span11});
  }
  return r;
}

CartanResult cartan_diagonal(const GradedBasis& basis) {
  CartanResult out;
  out.report = make_report("cartan", basis, SignRule::GLA);
  auto& r = out.report;
  Stopwatch sw(r);
  const std::size_t n = basis.signature.size();
  const std::size_t dim = basis.size();

  // Coefficient vectors c with sum_i c_i X_i vanishing off the diagonal.
  ExactMatrix off(n * n - n, dim);
  for (std::size_t t = 0; t < dim; ++t) {
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (j != k) off(row++, t) = basis.elements[t].entries()(j, k);
      }
    }
  }
  for (const auto& c : nullspace(off)) {
    ExactMatrix m(n, n);
    for (std::size_t t = 0; t < dim; ++t) {
      if (!c(t, 0).is_zero()) m += c(t, 0) * basis.elements[t].entries();
    }
    GradedMatrix g(basis.signature, std::move(m));
    out.elements.push_back(g.with_degree(g.homogeneous_degree()));
  }

  for (const auto& h : out.elements) {
    ++r.cases;
    auto d = h.homogeneous_degree();
    if (!d || *d != Degree{0, 0}) r.record({"diagonal element not of degree (0,0)", {h}, json(Degree{}), json(h)});
  }
  for (std::size_t a = 0; a < out.elements.size(); ++a) {
    for (std::size_t b = a + 1; b < out.elements.size(); ++b) {
      ++r.cases;
      GradedMatrix br = graded_bracket(out.elements[a], out.elements[b]);
      if (!br.is_zero()) {
        r.record({"diagonal elements do not commute", {out.elements[a], out.elements[b]}, json(Scalar()), json(br)});
      }
    }
  }

  const auto& f = basis.family;
  std::optional<std::size_t> expected;
  switch (f.kind) {
    case FamilyKind::SPp:
    case FamilyKind::SOpEven:
    case FamilyKind::SOpOdd: expected = f.n; break;
    case FamilyKind::SOGraded: expected = 0; break;
    case FamilyKind::SL: expected = n - 1; break;
    case FamilyKind::GL: expected = n; break;
  }
  r.details["size"] = out.elements.size();
  if (expected) {
    ++r.cases;
    r.details["expected_size"] = *expected;
    if (out.elements.size() != *expected) {
      r.record({"unexpected number of diagonal elements", {}, *expected, out.elements.size()});
    }
  }
  return out;
}

GradedBasis permute_basis(const GradedBasis& basis, const DegreePermutation& pi) {
  GradedBasis out;
  out.family = basis.family;
  out.signature = permute_grading(basis.signature, pi);
  out.elements.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.elements.push_back(basis.elements[i].with_signature(out.signature, pi(basis.degree(i))));
  }
  return out;
}

CheckReport check_permutation_stability(const GradedBasis& basis, const DegreePermutation& pi) {
  CheckReport r = make_report("permutation", basis, SignRule::GLA);
  GradedBasis permuted = permute_basis(basis, pi);
  CheckReport axioms = check_axioms(permuted, SignRule::GLA);
  r.absorb(axioms);
  r.details["permutation"] = pi.str();
  r.details["axioms"] = axioms.details;

  const auto before = basis.profile();
  const auto after = permuted.profile();
  r.details["profile"] = json(before);
  r.details["permuted_profile"] = json(after);
  ++r.cases;
  for (Degree d : kAllDegrees) {
    if (after[pi(d)] != before[d]) {
      r.record({"profile is not the permuted profile", {}, json(before), json(after)});
      break;
    }
  }
  return r;
}

CheckReport check_permutation_stability(const AlgebraFamily& f, const DegreePermutation& pi) {
  return check_permutation_stability(build_basis(f), pi);
}

}  // namespace zzgla
