#include "zzgla/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zzgla {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 6> kNames{{
    {FamilyKind::GL, "gl"},
    {FamilyKind::SL, "sl"},
    {FamilyKind::SOGraded, "so-graded"},
    {FamilyKind::SPp, "sp"},
    {FamilyKind::SOpEven, "so-even"},
    {FamilyKind::SOpOdd, "so-odd"},
}};

AlgebraFamily make_pqrs(FamilyKind kind, std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  AlgebraFamily f;
  f.kind = kind;
  f.pqrs = {p, q, r, s};
  f.validate();
  return f;
}

AlgebraFamily make_np(FamilyKind kind, std::size_t n, std::size_t p) {
  AlgebraFamily f;
  f.kind = kind;
  f.n = n;
  f.p = p;
  f.validate();
  return f;
}

long long sq(long long x) { return x * x; }

}  // namespace

std::string_view cli_name(FamilyKind kind) {
  for (auto [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (auto [k, n] : kNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected gl, sl, so-graded, sp, so-even or so-odd)");
}

AlgebraFamily AlgebraFamily::gl(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  return make_pqrs(FamilyKind::GL, p, q, r, s);
}
AlgebraFamily AlgebraFamily::sl(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  return make_pqrs(FamilyKind::SL, p, q, r, s);
}
AlgebraFamily AlgebraFamily::so_graded(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  return make_pqrs(FamilyKind::SOGraded, p, q, r, s);
}
AlgebraFamily AlgebraFamily::sp(std::size_t n, std::size_t p) { return make_np(FamilyKind::SPp, n, p); }
AlgebraFamily AlgebraFamily::so_even(std::size_t n, std::size_t p) { return make_np(FamilyKind::SOpEven, n, p); }
AlgebraFamily AlgebraFamily::so_odd(std::size_t n, std::size_t p) { return make_np(FamilyKind::SOpOdd, n, p); }

void AlgebraFamily::validate() const {
  if (has_form()) {
    if (n < 1) throw std::invalid_argument(label() + ": n must be at least 1");
    if (p > n) throw std::invalid_argument(label() + ": p must satisfy 0 <= p <= n");
  } else if (pqrs[0] + pqrs[1] + pqrs[2] + pqrs[3] == 0) {
    throw std::invalid_argument(label() + ": p+q+r+s must be positive");
  }
}

std::size_t AlgebraFamily::matrix_size() const {
  switch (kind) {
    case FamilyKind::SPp:
    case FamilyKind::SOpEven: return 2 * n;
    case FamilyKind::SOpOdd: return 2 * n + 1;
    default: return pqrs[0] + pqrs[1] + pqrs[2] + pqrs[3];
  }
}

std::string AlgebraFamily::label() const {
  auto s = [](std::size_t v) { return std::to_string(v); };
  switch (kind) {
    case FamilyKind::GL:
    case FamilyKind::SL:
    case FamilyKind::SOGraded: {
      std::string base = kind == FamilyKind::GL ? "gl" : kind == FamilyKind::SL ? "sl" : "so";
      return base + "_{" + s(pqrs[0]) + "," + s(pqrs[1]) + "," + s(pqrs[2]) + "," + s(pqrs[3]) + "}(" +
             s(matrix_size()) + ")";
    }
    case FamilyKind::SPp: return "sp_" + s(p) + "(" + s(2 * n) + ")";
    case FamilyKind::SOpEven: return "so_" + s(p) + "(" + s(2 * n) + ")";
    case FamilyKind::SOpOdd: return "so_" + s(p) + "(" + s(2 * n + 1) + ")";
  }
  return "?";
}

DimensionProfile GradedBasis::profile() const {
  DimensionProfile out;
  for (const auto& e : elements) ++out.d[e.declared_degree()->index()];
  return out;
}

std::string to_string(FormLabel label) {
  switch (label) {
    case FormLabel::J: return "J";
    case FormLabel::K: return "K";
    case FormLabel::KPrime: return "K'";
  }
  return "?";
}

std::string to_string(BlockShape shape) {
  switch (shape) {
    case BlockShape::Free: return "free";
    case BlockShape::Symmetric: return "symmetric";
    case BlockShape::Antisymmetric: return "antisymmetric";
    case BlockShape::Zero: return "zero";
    case BlockShape::Linked: return "linked";
  }
  return "?";
}

// ---------------------------------------------------------------------------

GradingSignature family_signature(const AlgebraFamily& f) {
  f.validate();
  const std::size_t n = f.n;
  const std::size_t p = f.p;
  const std::size_t m = n - p;
  std::vector<Degree> d;
  auto push = [&d](std::size_t count, Degree deg) { d.insert(d.end(), count, deg); };
  switch (f.kind) {
    case FamilyKind::GL:
    case FamilyKind::SL:
    case FamilyKind::SOGraded:
      return GradingSignature::sorted(f.pqrs[0], f.pqrs[1], f.pqrs[2], f.pqrs[3]);
    case FamilyKind::SPp:
    case FamilyKind::SOpEven:
      push(p, {0, 0});
      push(m, {1, 0});
      push(p, {1, 1});
      push(m, {0, 1});
      break;
    case FamilyKind::SOpOdd:
      push(p, {0, 1});
      push(m, {1, 0});
      push(p, {0, 1});
      push(m, {1, 0});
      push(1, {0, 0});
      break;
  }
  return GradingSignature(std::move(d));
}

namespace {

/// Block offsets for a list of block sizes.
std::vector<std::size_t> offsets_of(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> off(sizes.size(), 0);
  for (std::size_t i = 1; i < sizes.size(); ++i) off[i] = off[i - 1] + sizes[i - 1];
  return off;
}

/// Writes sign * I into the (bi, bj) block; the two blocks have equal size.
void put_identity_block(ExactMatrix& m, const std::vector<std::size_t>& sizes, std::size_t bi, std::size_t bj,
                        int sign) {
  auto off = offsets_of(sizes);
  for (std::size_t t = 0; t < sizes[bi]; ++t) m(off[bi] + t, off[bj] + t) = sign;
}

std::vector<std::size_t> np_blocks(const AlgebraFamily& f) {
  std::vector<std::size_t> b{f.p, f.n - f.p, f.p, f.n - f.p};
  if (f.kind == FamilyKind::SOpOdd) b.push_back(1);
  return b;
}

struct Condition {
  std::string name;
  ExactMatrix residual;
};

std::vector<Condition> residuals(const AlgebraFamily& f, const GradedMatrix& a, const GradedMatrix* form) {
  std::vector<Condition> out;
  if (f.kind == FamilyKind::GL) return out;
  if (f.kind == FamilyKind::SOGraded) {
    out.push_back({"A^T + A = 0", (graded_transpose(a) + a).entries()});
  } else if (form != nullptr) {
    // K' is stated on the sl_{2p,1,0,2n-2p} labeling; the graded transpose
    // depends on coordinate degrees, not only on entry degrees.
    GradedMatrix at = f.kind == FamilyKind::SOpOdd
                          ? graded_transpose(a.with_signature(shift_grading(a.signature(), kSoOddLayoutShift),
                                                              a.declared_degree()))
                          : graded_transpose(a);
    ExactMatrix r = at.entries() * form->entries() + form->entries() * a.entries();
    std::string m = f.kind == FamilyKind::SPp ? "J" : f.kind == FamilyKind::SOpEven ? "K" : "K'";
    out.push_back({"A^T " + m + " + " + m + " A = 0", std::move(r)});
  }
  ExactMatrix tr(1, 1);
  tr(0, 0) = trace(a);
  out.push_back({"Tr A = 0", std::move(tr)});
  return out;
}

}  // namespace

DefiningForm defining_form(const AlgebraFamily& f) {
  if (!f.has_form()) throw std::invalid_argument("defining_form: " + f.label() + " has no defining form");
  auto sizes = np_blocks(f);
  const std::size_t size = f.matrix_size();
  ExactMatrix m(size, size);
  FormLabel label{};
  switch (f.kind) {
    case FamilyKind::SPp:
      label = FormLabel::J;
      put_identity_block(m, sizes, 0, 2, 1);
      put_identity_block(m, sizes, 1, 3, 1);
      put_identity_block(m, sizes, 2, 0, -1);
      put_identity_block(m, sizes, 3, 1, 1);
      break;
    case FamilyKind::SOpEven:
      label = FormLabel::K;
      put_identity_block(m, sizes, 0, 2, 1);
      put_identity_block(m, sizes, 1, 3, 1);
      put_identity_block(m, sizes, 2, 0, 1);
      put_identity_block(m, sizes, 3, 1, -1);
      break;
    default:
      label = FormLabel::KPrime;
      put_identity_block(m, sizes, 0, 2, 1);
      put_identity_block(m, sizes, 1, 3, -1);
      put_identity_block(m, sizes, 2, 0, 1);
      put_identity_block(m, sizes, 3, 1, -1);
      m(size - 1, size - 1) = 1;
      break;
  }
  GradedMatrix g(family_signature(f), std::move(m));
  auto deg = g.homogeneous_degree();
  if (!deg) throw std::logic_error("defining form of " + f.label() + " is not homogeneous");
  return {label, g.with_degree(deg)};
}

Membership is_member(const AlgebraFamily& f, const GradedMatrix& a) {
  if (!(a.signature() == family_signature(f))) {
    throw std::invalid_argument("is_member: matrix signature " + a.signature().str() + " does not match " +
                                f.label() + " signature " + family_signature(f).str());
  }
  std::optional<DefiningForm> form;
  if (f.has_form()) form = defining_form(f);
  for (auto& c : residuals(f, a, form ? &form->matrix : nullptr)) {
    for (std::size_t i = 0; i < c.residual.rows(); ++i) {
      for (std::size_t j = 0; j < c.residual.cols(); ++j) {
        if (!c.residual(i, j).is_zero()) return {false, Violation{c.name, i, j, c.residual(i, j)}};
      }
    }
  }
  return {};
}

namespace {

GradedMatrix normalized(GradedMatrix m) {
  for (const auto& x : m.entries().flat()) {
    if (!x.is_zero()) {
      if (x == Scalar(1)) return m;
      return x.inverse() * m;
    }
  }
  return m;
}

}  // namespace

GradedBasis build_basis(const AlgebraFamily& f) {
  GradedBasis basis;
  basis.family = f;
  basis.signature = family_signature(f);
  const auto& sig = basis.signature;
  const std::size_t size = sig.size();
  std::optional<DefiningForm> form;
  if (f.has_form()) form = defining_form(f);

  for (Degree d : kAllDegrees) {
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t j = 0; j < size; ++j) {
      for (std::size_t k = 0; k < size; ++k) {
        if (sig.entry_degree(j, k) == d) unknowns.emplace_back(j, k);
      }
    }
    if (unknowns.empty()) continue;

    // Column u of the constraint matrix is the stacked residual of e_u.
    std::vector<std::vector<Scalar>> columns;
    columns.reserve(unknowns.size());
    for (auto [j, k] : unknowns) {
      std::vector<Scalar> col;
      for (auto& c : residuals(f, GradedMatrix::unit(sig, j, k), form ? &form->matrix : nullptr)) {
        col.insert(col.end(), c.residual.flat().begin(), c.residual.flat().end());
      }
      columns.push_back(std::move(col));
    }
    const std::size_t eqs = columns.front().size();
    ExactMatrix constraints(eqs, unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      for (std::size_t e = 0; e < eqs; ++e) constraints(e, u) = columns[u][e];
    }

    for (const auto& v : nullspace(constraints)) {
      ExactMatrix m(size, size);
      for (std::size_t u = 0; u < unknowns.size(); ++u) m(unknowns[u].first, unknowns[u].second) = v(u, 0);
      basis.elements.push_back(normalized(GradedMatrix(sig, std::move(m), d)));
    }
  }
  return basis;
}

DimensionProfile dimension_profile(const AlgebraFamily& f) {
  f.validate();
  DimensionProfile out;
  const auto P = static_cast<long long>(f.pqrs[0]);
  const auto Q = static_cast<long long>(f.pqrs[1]);
  const auto R = static_cast<long long>(f.pqrs[2]);
  const auto S = static_cast<long long>(f.pqrs[3]);
  const auto n = static_cast<long long>(f.n);
  const auto p = static_cast<long long>(f.p);
  const long long m = n - p;
  switch (f.kind) {
    case FamilyKind::GL:
      out.d = {sq(P) + sq(Q) + sq(R) + sq(S), 2 * P * Q + 2 * R * S, 2 * P * R + 2 * Q * S, 2 * Q * R + 2 * P * S};
      break;
    case FamilyKind::SL:
      out.d = {sq(P) + sq(Q) + sq(R) + sq(S) - 1, 2 * P * Q + 2 * R * S, 2 * P * R + 2 * Q * S,
               2 * Q * R + 2 * P * S};
      break;
    case FamilyKind::SOGraded:
      out.d = {(P * (P - 1) + Q * (Q - 1) + R * (R - 1) + S * (S - 1)) / 2, P * Q + R * S, P * R + Q * S,
               Q * R + P * S};
      break;
    case FamilyKind::SPp:
      out.d = {sq(p) + sq(m), 2 * p * m, 2 * p * m, p * (p + 1) + m * (m + 1)};
      break;
    case FamilyKind::SOpEven:
      out.d = {sq(p) + sq(m), 2 * p * m, 2 * p * m, p * (p - 1) + m * (m - 1)};
      break;
    case FamilyKind::SOpOdd:
      out.d = {2 * sq(n) - n - 4 * p * sq(m), 2 * p, 2 * m, 4 * p * m};
      break;
  }
  return out;
}

DimensionProfile dimension_profile_measured(const AlgebraFamily& f) { return build_basis(f).profile(); }

long long so_odd_consistent_d00(std::size_t n, std::size_t p) {
  const auto N = static_cast<long long>(n);
  const auto P = static_cast<long long>(p);
  return 2 * N * N - N - 4 * P * (N - P);
}

std::size_t classical_counterpart_dims(const AlgebraFamily& f) {
  switch (f.kind) {
    case FamilyKind::SPp:
    case FamilyKind::SOpOdd: return 2 * f.n * f.n + f.n;
    case FamilyKind::SOpEven: return 2 * f.n * f.n - f.n;
    default: throw std::invalid_argument("classical_counterpart_dims: " + f.label() + " is not of type B, C or D");
  }
}

// ---------------------------------------------------------------------------

const TemplateBlock& BlockTemplate::block(std::size_t row_block, std::size_t col_block) const {
  for (const auto& b : blocks) {
    if (b.row_block == row_block && b.col_block == col_block) return b;
  }
  throw std::out_of_range("block template has no block (" + std::to_string(row_block) + "," +
                          std::to_string(col_block) + ")");
}

const TemplateBlock& BlockTemplate::named(std::string_view name) const {
  for (const auto& b : blocks) {
    if (b.name == name) return b;
  }
  throw std::out_of_range("block template has no block named " + std::string(name));
}

namespace {

TemplateBlock param(std::size_t r, std::size_t c, std::string name, Degree d, BlockShape shape = BlockShape::Free) {
  TemplateBlock b;
  b.row_block = r;
  b.col_block = c;
  b.name = std::move(name);
  b.degree = d;
  b.shape = shape;
  return b;
}

TemplateBlock linked(std::size_t r, std::size_t c, int sign, std::string source, Degree d, bool framed = false) {
  TemplateBlock b;
  b.row_block = r;
  b.col_block = c;
  b.name = std::string(sign < 0 ? "-" : "") + source + "^t";
  b.degree = d;
  b.shape = BlockShape::Linked;
  b.source = std::move(source);
  b.sign = sign;
  b.framed = framed;
  return b;
}

constexpr Degree d00{0, 0}, d01{0, 1}, d10{1, 0}, d11{1, 1};

}  // namespace

BlockTemplate block_template(const AlgebraFamily& f) {
  f.validate();
  BlockTemplate t;
  t.kind = f.kind;
  auto& b = t.blocks;
  switch (f.kind) {
    case FamilyKind::GL:
    case FamilyKind::SL: {
      t.block_sizes = {f.pqrs[0], f.pqrs[1], f.pqrs[2], f.pqrs[3]};
      t.traceless = f.kind == FamilyKind::SL;
      const char rows[] = {'a', 'b', 'c', 'd'};
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          Degree deg = Degree::from_index(i) + Degree::from_index(j);
          b.push_back(param(i, j, std::string(1, rows[i]) + "_" + deg.str(), deg));
        }
      }
      break;
    }
    case FamilyKind::SOGraded:
      t.block_sizes = {f.pqrs[0], f.pqrs[1], f.pqrs[2], f.pqrs[3]};
      t.traceless = true;
      b = {
          param(0, 0, "a_(0,0)", d00, BlockShape::Antisymmetric), param(0, 1, "a_(0,1)", d01),
          param(0, 2, "a_(1,0)", d10), param(0, 3, "a_(1,1)", d11),
          linked(1, 0, -1, "a_(0,1)", d01), param(1, 1, "b_(0,0)", d00, BlockShape::Antisymmetric),
          param(1, 2, "b_(1,1)", d11), param(1, 3, "b_(1,0)", d10),
          linked(2, 0, -1, "a_(1,0)", d10), linked(2, 1, 1, "b_(1,1)", d11),
          param(2, 2, "c_(0,0)", d00, BlockShape::Antisymmetric), param(2, 3, "c_(0,1)", d01),
          linked(3, 0, -1, "a_(1,1)", d11), linked(3, 1, 1, "b_(1,0)", d10),
          linked(3, 2, 1, "c_(0,1)", d01), param(3, 3, "d_(0,0)", d00, BlockShape::Antisymmetric),
      };
      break;
    case FamilyKind::SPp:
    case FamilyKind::SOpEven: {
      const bool sp = f.kind == FamilyKind::SPp;
      const BlockShape corner = sp ? BlockShape::Symmetric : BlockShape::Antisymmetric;
      const int frame = sp ? -1 : 1;
      t.block_sizes = np_blocks(f);
      t.traceless = true;
      b = {
          param(0, 0, "a_(0,0)", d00), param(0, 1, "a_(1,0)", d10),
          param(0, 2, "b_(1,1)", d11, corner), param(0, 3, "b_(0,1)", d01),
          param(1, 0, "a~_(1,0)", d10), param(1, 1, "a~_(0,0)", d00),
          linked(1, 2, frame, "b_(0,1)", d01, true), param(1, 3, "b~_(1,1)", d11, corner),
          param(2, 0, "c_(1,1)", d11, corner), param(2, 1, "c_(0,1)", d01),
          linked(2, 2, -1, "a_(0,0)", d00), linked(2, 3, -1, "a~_(1,0)", d10),
          linked(3, 0, frame, "c_(0,1)", d01, true), param(3, 1, "c~_(1,1)", d11, corner),
          linked(3, 2, -1, "a_(1,0)", d10), linked(3, 3, -1, "a~_(0,0)", d00),
      };
      break;
    }
    case FamilyKind::SOpOdd: {
      t.block_sizes = np_blocks(f);
      t.traceless = true;
      const auto anti = BlockShape::Antisymmetric;
      TemplateBlock corner = param(4, 4, "0", d00, BlockShape::Zero);
      b = {
          param(0, 0, "a_(0,0)", d00), param(0, 1, "a_(1,1)", d11),
          param(0, 2, "b_(0,0)", d00, anti), param(0, 3, "b_(1,1)", d11),
          param(0, 4, "c_(0,1)", d01),
          param(1, 0, "a~_(1,1)", d11), param(1, 1, "a~_(0,0)", d00),
          linked(1, 2, 1, "b_(1,1)", d11), param(1, 3, "b~_(0,0)", d00, anti),
          param(1, 4, "c_(1,0)", d10),
          param(2, 0, "d_(0,0)", d00, anti), param(2, 1, "d_(1,1)", d11),
          linked(2, 2, -1, "a_(0,0)", d00), linked(2, 3, 1, "a~_(1,1)", d11),
          param(2, 4, "e_(0,1)", d01),
          linked(3, 0, 1, "d_(1,1)", d11), param(3, 1, "d~_(0,0)", d00, anti),
          linked(3, 2, 1, "a_(1,1)", d11), linked(3, 3, -1, "a~_(0,0)", d00),
          param(3, 4, "e_(1,0)", d10),
          linked(4, 0, -1, "e_(0,1)", d01), linked(4, 1, -1, "e_(1,0)", d10),
          linked(4, 2, -1, "c_(0,1)", d01), linked(4, 3, -1, "c_(1,0)", d10),
          corner,
      };
      break;
    }
  }
  return t;
}

std::optional<std::string> template_degree_mismatch(const BlockTemplate& tpl, const GradingSignature& sig) {
  auto off = offsets_of(tpl.block_sizes);
  for (const auto& blk : tpl.blocks) {
    if (blk.shape == BlockShape::Zero) continue;
    for (std::size_t i = 0; i < tpl.block_sizes[blk.row_block]; ++i) {
      for (std::size_t j = 0; j < tpl.block_sizes[blk.col_block]; ++j) {
        Degree actual = sig.entry_degree(off[blk.row_block] + i, off[blk.col_block] + j);
        if (actual != blk.degree) {
          return "block " + blk.name + " labeled " + blk.degree.str() + " but entry (" +
                 std::to_string(off[blk.row_block] + i) + "," + std::to_string(off[blk.col_block] + j) +
                 ") has degree " + actual.str();
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<GradedMatrix> template_instances(const BlockTemplate& tpl, const GradingSignature& sig) {
  auto off = offsets_of(tpl.block_sizes);
  const std::size_t size = off.back() + tpl.block_sizes.back();
  if (size != sig.size()) throw std::invalid_argument("template_instances: size mismatch with signature");

  std::vector<GradedMatrix> out;
  for (const auto& blk : tpl.blocks) {
    if (blk.shape == BlockShape::Linked || blk.shape == BlockShape::Zero) continue;
    const std::size_t rows = tpl.block_sizes[blk.row_block];
    const std::size_t cols = tpl.block_sizes[blk.col_block];
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (blk.shape == BlockShape::Symmetric && j < i) continue;
        if (blk.shape == BlockShape::Antisymmetric && j <= i) continue;
        // Local parameter matrix of the block.
        std::map<std::pair<std::size_t, std::size_t>, int> local{{{i, j}, 1}};
        if (blk.shape == BlockShape::Symmetric) local[{j, i}] = 1;
        if (blk.shape == BlockShape::Antisymmetric) local[{j, i}] = -1;

        ExactMatrix m(size, size);
        for (auto [pos, v] : local) m(off[blk.row_block] + pos.first, off[blk.col_block] + pos.second) = v;
        for (const auto& dep : tpl.blocks) {
          if (dep.shape != BlockShape::Linked || dep.source != blk.name) continue;
          for (auto [pos, v] : local) {
            m(off[dep.row_block] + pos.second, off[dep.col_block] + pos.first) = dep.sign * v;
          }
        }
        out.emplace_back(sig, std::move(m), blk.degree);
      }
    }
  }
  if (!tpl.traceless || out.empty()) return out;

  ExactMatrix traces(1, out.size());
  for (std::size_t i = 0; i < out.size(); ++i) traces(0, i) = trace(out[i]);
  std::vector<GradedMatrix> restricted;
  for (const auto& v : nullspace(traces)) {
    ExactMatrix m(size, size);
    std::optional<Degree> deg;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (v(i, 0).is_zero()) continue;
      m += v(i, 0) * out[i].entries();
      deg = out[i].declared_degree();
    }
    restricted.emplace_back(sig, std::move(m), deg);
  }
  return restricted;
}

}  // namespace zzgla
