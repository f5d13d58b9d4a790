#include "zzgla/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace zzgla {

std::string Degree::str() const {
  return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
}

std::string to_string(SignRule rule) { return rule == SignRule::GLA ? "gla" : "glsa"; }

SignRule parse_sign_rule(std::string_view text) {
  if (text == "gla") return SignRule::GLA;
  if (text == "glsa") return SignRule::GLSA;
  throw std::invalid_argument("unknown sign rule '" + std::string(text) + "' (expected gla or glsa)");
}

std::vector<DegreePermutation> DegreePermutation::all() {
  std::array<Degree, 3> nonzero{Degree{0, 1}, Degree{1, 0}, Degree{1, 1}};
  std::vector<DegreePermutation> out;
  do {
    DegreePermutation pi;
    for (std::size_t i = 0; i < 3; ++i) pi.image[i + 1] = nonzero[i];
    out.push_back(pi);
  } while (std::next_permutation(nonzero.begin(), nonzero.end()));
  return out;
}

DegreePermutation DegreePermutation::swap(Degree x, Degree y) {
  if (x == Degree{} || y == Degree{}) throw std::invalid_argument("permutation must fix (0,0)");
  DegreePermutation pi;
  pi.image[x.index()] = y;
  pi.image[y.index()] = x;
  return pi;
}

std::string DegreePermutation::str() const {
  std::string s;
  for (std::size_t i = 1; i < 4; ++i) {
    s += (i > 1 ? " " : "") + Degree::from_index(i).str() + "->" + image[i].str();
  }
  return s;
}

GradingSignature GradingSignature::sorted(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  std::vector<Degree> d;
  d.reserve(p + q + r + s);
  d.insert(d.end(), p, Degree{0, 0});
  d.insert(d.end(), q, Degree{0, 1});
  d.insert(d.end(), r, Degree{1, 0});
  d.insert(d.end(), s, Degree{1, 1});
  return GradingSignature(std::move(d));
}

Degree GradingSignature::entry_degree(std::size_t j, std::size_t k) const {
  if (j >= degrees_.size() || k >= degrees_.size()) {
    throw std::out_of_range("entry_degree: index out of range");
  }
  return degrees_[j] + degrees_[k];
}

std::array<std::size_t, 4> GradingSignature::multiplicities() const {
  std::array<std::size_t, 4> m{};
  for (auto d : degrees_) ++m[d.index()];
  return m;
}

std::string GradingSignature::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < degrees_.size(); ++i) s += (i ? "," : "") + degrees_[i].str();
  return s + "]";
}

GradingSignature permute_grading(const GradingSignature& sig, const DegreePermutation& pi) {
  if (pi(Degree{0, 0}) != Degree{0, 0}) throw std::invalid_argument("permutation must fix (0,0)");
  std::array<bool, 4> seen{};
  for (auto d : pi.image) seen[d.index()] = true;
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw std::invalid_argument("degree relabeling is not a permutation");
  }
  std::vector<Degree> out;
  out.reserve(sig.size());
  for (auto d : sig.degrees()) out.push_back(pi(d));
  return GradingSignature(std::move(out));
}

GradingSignature shift_grading(const GradingSignature& sig, Degree c) {
  std::vector<Degree> out;
  out.reserve(sig.size());
  for (auto d : sig.degrees()) out.push_back(d + c);
  return GradingSignature(std::move(out));
}

// ---------------------------------------------------------------------------

GradedMatrix::GradedMatrix(GradingSignature sig, ExactMatrix entries, std::optional<Degree> degree)
    : sig_(std::move(sig)), entries_(std::move(entries)), degree_(degree) {
  const std::size_t n = sig_.size();
  if (entries_.rows() != n || entries_.cols() != n) {
    throw std::invalid_argument("graded matrix: entries are " + std::to_string(entries_.rows()) + "x" +
                                std::to_string(entries_.cols()) + " but the signature has size " +
                                std::to_string(n));
  }
  if (degree_) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!entries_(j, k).is_zero() && sig_.entry_degree(j, k) != *degree_) {
          throw std::invalid_argument("graded matrix: entry (" + std::to_string(j) + "," + std::to_string(k) +
                                      ") has degree " + sig_.entry_degree(j, k).str() + ", declared " +
                                      degree_->str());
        }
      }
    }
  }
}

GradedMatrix GradedMatrix::unit(const GradingSignature& sig, std::size_t j, std::size_t k) {
  return {sig, ExactMatrix::unit(sig.size(), j, k), sig.entry_degree(j, k)};
}

std::optional<Degree> GradedMatrix::homogeneous_degree() const {
  if (degree_) return degree_;
  std::optional<Degree> found;
  const std::size_t n = size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (entries_(j, k).is_zero()) continue;
      Degree d = sig_[j] + sig_[k];
      if (!found) found = d;
      else if (*found != d) return std::nullopt;
    }
  }
  return found;
}

namespace {

void require_same_signature(const GradedMatrix& x, const GradedMatrix& y, const char* op) {
  if (!(x.signature() == y.signature())) {
    throw std::invalid_argument(std::string(op) + ": signature mismatch " + x.signature().str() + " vs " +
                                y.signature().str());
  }
}

std::optional<Degree> sum_degree(const GradedMatrix& x, const GradedMatrix& y) {
  auto a = x.declared_degree();
  auto b = y.declared_degree();
  if (a && b && *a == *b) return a;
  return std::nullopt;
}

}  // namespace

GradedMatrix operator+(const GradedMatrix& x, const GradedMatrix& y) {
  require_same_signature(x, y, "sum");
  return {x.signature(), x.entries() + y.entries(), sum_degree(x, y)};
}

GradedMatrix operator-(const GradedMatrix& x, const GradedMatrix& y) {
  require_same_signature(x, y, "difference");
  return {x.signature(), x.entries() - y.entries(), sum_degree(x, y)};
}

GradedMatrix operator*(const Scalar& c, const GradedMatrix& x) {
  return {x.signature(), c * x.entries(), x.declared_degree()};
}

GradedMatrix HomogeneousDecomposition::sum() const {
  GradedMatrix total = GradedMatrix::zero(components[0].signature());
  for (const auto& c : components) total = total + c;
  return total.with_degree(std::nullopt);
}

HomogeneousDecomposition decompose(const GradedMatrix& m) {
  const auto& sig = m.signature();
  const std::size_t n = sig.size();
  std::array<ExactMatrix, 4> parts;
  for (auto& p : parts) p = ExactMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& x = m.entries()(j, k);
      if (!x.is_zero()) parts[(sig[j] + sig[k]).index()](j, k) = x;
    }
  }
  HomogeneousDecomposition out;
  for (std::size_t i = 0; i < 4; ++i) out.components[i] = GradedMatrix(sig, std::move(parts[i]), Degree::from_index(i));
  return out;
}

GradedMatrix graded_product(const GradedMatrix& x, const GradedMatrix& y) {
  require_same_signature(x, y, "graded_product");
  auto a = x.homogeneous_degree();
  auto b = y.homogeneous_degree();
  std::optional<Degree> d;
  if (a && b) d = *a + *b;
  return {x.signature(), x.entries() * y.entries(), d};
}

GradedMatrix graded_bracket(const GradedMatrix& x, const GradedMatrix& y, SignRule rule) {
  require_same_signature(x, y, "graded_bracket");
  if (x.is_zero() || y.is_zero()) return GradedMatrix::zero(x.signature());
  auto a = x.homogeneous_degree();
  auto b = y.homogeneous_degree();
  if (a && b) {
    ExactMatrix xy = x.entries() * y.entries();
    ExactMatrix yx = y.entries() * x.entries();
    if (degree_sign(*a, *b, rule) == 1) xy -= yx;
    else xy += yx;
    return {x.signature(), std::move(xy), *a + *b};
  }
  auto dx = decompose(x);
  auto dy = decompose(y);
  ExactMatrix total(x.size(), x.size());
  for (const auto& cx : dx.components) {
    if (cx.is_zero()) continue;
    for (const auto& cy : dy.components) {
      if (cy.is_zero()) continue;
      total += graded_bracket(cx, cy, rule).entries();
    }
  }
  return {x.signature(), std::move(total)};
}

GradedMatrix graded_transpose(const GradedMatrix& m) {
  const auto& sig = m.signature();
  const std::size_t n = sig.size();
  ExactMatrix t(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& x = m.entries()(k, j);
      if (x.is_zero()) continue;
      Degree a = sig[k] + sig[j];
      t(j, k) = degree_sign(a, sig[j], SignRule::GLA) == 1 ? x : -x;
    }
  }
  return {sig, std::move(t), m.declared_degree()};
}

Scalar trace(const GradedMatrix& m) { return m.entries().trace(); }

}  // namespace zzgla
