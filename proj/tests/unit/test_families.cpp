#include "oracle.hpp"
#include "random.hpp"

#include <doctest.h>

using namespace zzgla;

namespace {

const Degree d00{0, 0}, d01{0, 1}, d10{1, 0}, d11{1, 1};

std::vector<AlgebraFamily> form_families(std::size_t max_n) {
  std::vector<AlgebraFamily> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t p = 0; p <= n; ++p) {
      out.push_back(AlgebraFamily::sp(n, p));
      out.push_back(AlgebraFamily::so_even(n, p));
      out.push_back(AlgebraFamily::so_odd(n, p));
    }
  }
  return out;
}

std::vector<AlgebraFamily> sorted_families(std::size_t max_size) {
  std::vector<AlgebraFamily> out;
  for (std::size_t p = 0; p <= max_size; ++p) {
    for (std::size_t q = 0; p + q <= max_size; ++q) {
      for (std::size_t r = 0; p + q + r <= max_size; ++r) {
        for (std::size_t s = 0; p + q + r + s <= max_size; ++s) {
          if (p + q + r + s == 0) continue;
          out.push_back(AlgebraFamily::gl(p, q, r, s));
          out.push_back(AlgebraFamily::sl(p, q, r, s));
          out.push_back(AlgebraFamily::so_graded(p, q, r, s));
        }
      }
    }
  }
  return out;
}

std::vector<ExactMatrix> entries_of(const std::vector<GradedMatrix>& ms) {
  std::vector<ExactMatrix> out;
  for (const auto& m : ms) out.push_back(m.entries());
  return out;
}

}  // namespace

TEST_SUITE("family descriptors") {
  TEST_CASE("names and labels") {
    for (auto k : {FamilyKind::GL, FamilyKind::SL, FamilyKind::SOGraded, FamilyKind::SPp, FamilyKind::SOpEven,
                   FamilyKind::SOpOdd}) {
      CHECK(parse_family_kind(cli_name(k)) == k);
    }
    CHECK_THROWS_AS(parse_family_kind("so"), std::invalid_argument);
    CHECK(AlgebraFamily::sp(2, 1).label() == "sp_1(4)");
    CHECK(AlgebraFamily::so_odd(3, 1).label() == "so_1(7)");
    CHECK(AlgebraFamily::sl(1, 1, 1, 1).label() == "sl_{1,1,1,1}(4)");
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(AlgebraFamily::sp(2, 3).validate(), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraFamily::so_odd(0, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraFamily::sl(0, 0, 0, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(build_basis(AlgebraFamily::so_even(1, 2)), std::invalid_argument);
    CHECK_NOTHROW(AlgebraFamily::so_odd(1, 0).validate());
  }

  TEST_CASE("matrix sizes") {
    CHECK(AlgebraFamily::gl(1, 2, 3, 4).matrix_size() == 10);
    CHECK(AlgebraFamily::sp(3, 1).matrix_size() == 6);
    CHECK(AlgebraFamily::so_odd(3, 1).matrix_size() == 7);
  }
}

TEST_SUITE("signatures and forms") {
  TEST_CASE("signature examples") {
    CHECK(family_signature(AlgebraFamily::sp(2, 1)).degrees() == std::vector<Degree>{d00, d10, d11, d01});
    CHECK(family_signature(AlgebraFamily::sl(1, 1, 1, 1)).degrees() == std::vector<Degree>{d00, d01, d10, d11});
    CHECK(family_signature(AlgebraFamily::so_odd(2, 1)).degrees() ==
          std::vector<Degree>{d01, d10, d01, d10, d00});
  }

  TEST_CASE("sp and so-even have the multiplicities of sl_{p,n-p,n-p,p}") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t p = 0; p <= n; ++p) {
        const std::array<std::size_t, 4> want{p, n - p, n - p, p};
        CHECK(family_signature(AlgebraFamily::sp(n, p)).multiplicities() == want);
        CHECK(family_signature(AlgebraFamily::so_even(n, p)).multiplicities() == want);
      }
    }
  }

  TEST_CASE("so-odd layout is the (0,1)-shift of sl_{2p,1,0,2n-2p}") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t p = 0; p <= n; ++p) {
        auto sig = family_signature(AlgebraFamily::so_odd(n, p));
        CHECK(sig.multiplicities() == std::array<std::size_t, 4>{1, 2 * p, 2 * (n - p), 0});
        CHECK(shift_grading(sig, kSoOddLayoutShift).multiplicities() ==
              std::array<std::size_t, 4>{2 * p, 1, 0, 2 * (n - p)});
      }
    }
  }

  TEST_CASE("defining form identities") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t p = 0; p <= n; ++p) {
        auto J = defining_form(AlgebraFamily::sp(n, p));
        auto K = defining_form(AlgebraFamily::so_even(n, p));
        auto Kp = defining_form(AlgebraFamily::so_odd(n, p));
        CHECK(J.label == FormLabel::J);
        CHECK(K.label == FormLabel::K);
        CHECK(Kp.label == FormLabel::KPrime);
        CHECK(graded_transpose(J.matrix) == Scalar(-1) * J.matrix);
        CHECK(graded_transpose(K.matrix) == K.matrix);
        CHECK(graded_transpose(Kp.matrix) == Kp.matrix);
        for (const auto* f : {&J, &K, &Kp}) {
          CHECK(inverse(f->matrix.entries()) == f->matrix.entries().transpose());
        }
      }
    }
    CHECK_THROWS_AS(defining_form(AlgebraFamily::sl(1, 1, 1, 1)), std::invalid_argument);
  }

  TEST_CASE("form degrees") {
    CHECK(defining_form(AlgebraFamily::sp(2, 1)).matrix.declared_degree() == d11);
    CHECK(defining_form(AlgebraFamily::so_even(2, 1)).matrix.declared_degree() == d11);
    CHECK(defining_form(AlgebraFamily::so_odd(2, 1)).matrix.declared_degree() == d00);
  }

  TEST_CASE("J at n=2, p=1 as printed") {
    ExactMatrix want{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, 1, 0, 0}};
    CHECK(defining_form(AlgebraFamily::sp(2, 1)).matrix.entries() == want);
    ExactMatrix k{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    CHECK(defining_form(AlgebraFamily::so_even(2, 1)).matrix.entries() == k);
  }
}

TEST_SUITE("membership") {
  TEST_CASE("examples") {
    for (const auto& f : form_families(3)) CHECK(is_member(f, GradedMatrix::zero(family_signature(f))));
    auto sl = AlgebraFamily::sl(1, 1, 1, 1);
    auto m = is_member(sl, GradedMatrix::identity(family_signature(sl)));
    CHECK_FALSE(m);
    REQUIRE(m.violation);
    CHECK(m.violation->condition == "Tr A = 0");
    CHECK(m.violation->value == Scalar(4));
    auto gl = AlgebraFamily::gl(1, 1, 1, 1);
    CHECK(is_member(gl, GradedMatrix::identity(family_signature(gl))));
    CHECK_THROWS_AS(is_member(sl, GradedMatrix::zero(GradingSignature::sorted(4, 0, 0, 0))), std::invalid_argument);
  }

  TEST_CASE("framed sp template instance at n=2, p=1") {
    // a, a~ free; b, b~, c, c~ symmetric 1x1; b_(0,1), c_(0,1) framed with -^t.
    auto f = AlgebraFamily::sp(2, 1);
    auto sig = family_signature(f);
    ExactMatrix m{{2, 3, 5, 7}, {11, 13, -7, 17}, {19, 23, -2, -11}, {-23, 29, -3, -13}};
    CHECK(is_member(f, GradedMatrix(sig, m)));
    ExactMatrix unframed{{2, 3, 5, 7}, {11, 13, 7, 17}, {19, 23, -2, -11}, {23, 29, -3, -13}};
    CHECK_FALSE(is_member(f, GradedMatrix(sig, unframed)));
  }

  TEST_CASE("so-graded needs antisymmetry under the graded transpose") {
    auto f = AlgebraFamily::so_graded(1, 1, 1, 1);
    auto sig = family_signature(f);
    // b_(1,1) at (1,2) pairs with +b_(1,1)^t at (2,1)
    auto x = GradedMatrix::unit(sig, 1, 2) + GradedMatrix::unit(sig, 2, 1);
    CHECK(is_member(f, x));
    auto y = GradedMatrix::unit(sig, 0, 1) + GradedMatrix::unit(sig, 1, 0);
    CHECK_FALSE(is_member(f, y));
  }
}

TEST_SUITE("bases") {
  TEST_CASE("examples") {
    auto sl = build_basis(AlgebraFamily::sl(1, 1, 1, 1));
    CHECK(sl.size() == 15);
    CHECK(sl.profile() == DimensionProfile{{3, 4, 4, 4}});
    auto sp = build_basis(AlgebraFamily::sp(2, 1));
    CHECK(sp.size() == 10);
    CHECK(sp.profile() == DimensionProfile{{2, 2, 2, 4}});
    auto so = build_basis(AlgebraFamily::so_even(2, 1));
    CHECK(so.size() == 6);
    CHECK(so.profile() == DimensionProfile{{2, 2, 2, 0}});
    auto odd = build_basis(AlgebraFamily::so_odd(2, 1));
    CHECK(odd.profile() == DimensionProfile{{2, 2, 2, 4}});
    CHECK(odd.profile().total() == 10);
  }

  TEST_CASE("invariants: ordering, normalization, independence, membership") {
    auto families = form_families(3);
    for (const auto& f : sorted_families(3)) families.push_back(f);
    for (const auto& f : families) {
      CAPTURE(f.label());
      auto b = build_basis(f);
      CHECK(b.signature == family_signature(f));
      CHECK(span_dim(entries_of(b.elements)) == b.size());
      for (std::size_t i = 0; i < b.size(); ++i) {
        const auto& e = b.elements[i];
        CHECK(is_member(f, e));
        REQUIRE(e.declared_degree());
        if (i > 0) CHECK(b.degree(i - 1).index() <= b.degree(i).index());
        for (const auto& x : e.entries().flat()) {
          if (!x.is_zero()) {
            CHECK(x == Scalar(1));
            break;
          }
        }
      }
    }
  }

  TEST_CASE("bases are deterministic") {
    auto a = build_basis(AlgebraFamily::so_odd(3, 2));
    auto b = build_basis(AlgebraFamily::so_odd(3, 2));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.elements[i] == b.elements[i]);
  }

  TEST_CASE("measured dimensions agree with the modular-rank oracle") {
    auto families = form_families(5);
    for (const auto& f : sorted_families(4)) families.push_back(f);
    for (const auto& f : families) {
      CAPTURE(f.label());
      CHECK(dimension_profile_measured(f).d == oracle::dimensions(f));
    }
  }
}

TEST_SUITE("dimension formulas") {
  TEST_CASE("printed examples") {
    CHECK(dimension_profile(AlgebraFamily::sl(1, 1, 1, 1)) == DimensionProfile{{3, 4, 4, 4}});
    auto f = AlgebraFamily::so_odd(3, 1);
    CHECK(dimension_profile(f)[d00] == -1);
    CHECK(dimension_profile_measured(f)[d00] == 7);
    CHECK(so_odd_consistent_d00(3, 1) == 7);
    CHECK(classical_counterpart_dims(AlgebraFamily::sp(3, 0)) == 21);
    CHECK(classical_counterpart_dims(AlgebraFamily::so_even(3, 2)) == 15);
    CHECK(classical_counterpart_dims(AlgebraFamily::so_odd(1, 0)) == 3);
    CHECK_THROWS_AS(classical_counterpart_dims(AlgebraFamily::gl(1, 0, 0, 0)), std::invalid_argument);
  }

  TEST_CASE("sorted families: formula equals measured") {
    for (const auto& f : sorted_families(5)) {
      CAPTURE(f.label());
      CHECK(dimension_profile(f) == dimension_profile_measured(f));
    }
  }

  TEST_CASE("form families: totals, profiles and the so-odd d00 misprint") {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto N = static_cast<long long>(n);
      for (std::size_t p = 0; p <= n; ++p) {
        const auto P = static_cast<long long>(p);
        auto sp = AlgebraFamily::sp(n, p);
        auto soe = AlgebraFamily::so_even(n, p);
        auto soo = AlgebraFamily::so_odd(n, p);
        CHECK(dimension_profile(sp) == dimension_profile_measured(sp));
        CHECK(dimension_profile(soe) == dimension_profile_measured(soe));
        CHECK(dimension_profile_measured(sp).total() == 2 * N * N + N);
        CHECK(dimension_profile_measured(soe).total() == 2 * N * N - N);
        auto printed = dimension_profile(soo);
        auto measured = dimension_profile_measured(soo);
        CHECK(measured.total() == 2 * N * N + N);
        CHECK(measured[d01] == 2 * P);
        CHECK(measured[d10] == 2 * (N - P));
        CHECK(measured[d11] == 4 * P * (N - P));
        CHECK(measured[d00] == 2 * N * N - N - 4 * P * (N - P));
        CHECK(printed[d00] == 2 * N * N - N - 4 * P * (N - P) * (N - P));
        CHECK((printed[d00] != measured[d00]) == (p >= 1 && n - p >= 2));
      }
    }
  }
}

TEST_SUITE("block templates") {
  TEST_CASE("shape examples") {
    auto sp = block_template(AlgebraFamily::sp(3, 1));
    for (const char* name : {"b_(1,1)", "b~_(1,1)", "c_(1,1)", "c~_(1,1)"}) {
      CHECK(sp.named(name).shape == BlockShape::Symmetric);
    }
    CHECK(sp.block(1, 2).framed);
    CHECK(sp.block(1, 2).sign == -1);
    CHECK(sp.block(3, 0).sign == -1);

    auto so = block_template(AlgebraFamily::so_even(3, 1));
    CHECK(so.block(1, 2).framed);
    CHECK(so.block(1, 2).sign == 1);
    CHECK(so.block(1, 2).source == "b_(0,1)");
    CHECK(so.block(3, 0).sign == 1);
    CHECK(so.named("b_(1,1)").shape == BlockShape::Antisymmetric);

    auto sog = block_template(AlgebraFamily::so_graded(1, 1, 1, 1));
    for (std::size_t i = 0; i < 4; ++i) CHECK(sog.block(i, i).shape == BlockShape::Antisymmetric);
    CHECK_THROWS_AS(sog.named("zz"), std::out_of_range);
  }

  TEST_CASE("block degree labels agree with the signatures") {
    auto families = form_families(4);
    for (const auto& f : sorted_families(4)) families.push_back(f);
    for (const auto& f : families) {
      CAPTURE(f.label());
      auto bad = template_degree_mismatch(block_template(f), family_signature(f));
      CHECK_MESSAGE(!bad, (bad ? *bad : ""));
    }
  }

  TEST_CASE("template span equals nullspace span") {
    auto families = form_families(4);
    for (const auto& f : sorted_families(4)) families.push_back(f);
    for (const auto& f : families) {
      CAPTURE(f.label());
      auto basis = build_basis(f);
      auto inst = template_instances(block_template(f), family_signature(f));
      for (const auto& m : inst) CHECK(is_member(f, m));
      auto a = entries_of(basis.elements);
      auto b = entries_of(inst);
      CHECK(span_dim(b) == basis.size());
      auto both = a;
      both.insert(both.end(), b.begin(), b.end());
      CHECK(span_dim(both) == basis.size());
    }
  }
}
