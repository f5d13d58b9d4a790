#include "random.hpp"

#include "zzgla/serialize.hpp"

#include <doctest.h>

using namespace zzgla;
using zzgla::testing::Gen;

TEST_SUITE("json") {
  TEST_CASE("scalar encoding") {
    CHECK(json(Scalar(Rational(-3, 2))).dump() == R"({"r":"-3/2"})");
    CHECK(json(Scalar::sqrt2()).dump() == R"({"r":"0/1","s":"1/1"})");
    CHECK(json::parse(R"({"r":"4/6","s":"-2"})").get<Scalar>() == Scalar(Rational(2, 3), Rational(-2)));
    CHECK(json(7).get<Scalar>() == Scalar(7));
    CHECK_THROWS(json::parse(R"({"s":"1"})").get<Scalar>());
    CHECK_THROWS(json::parse(R"({"r":"1/0"})").get<Scalar>());
  }

  TEST_CASE("scalar round trip, including wide values") {
    Gen g;
    for (int t = 0; t < 500; ++t) {
      Scalar x(g.wide_rational(), g.wide_rational());
      CHECK(json(x).get<Scalar>() == x);
    }
  }

  TEST_CASE("degree and signature") {
    CHECK(json(Degree{1, 0}).dump() == "[1,0]");
    CHECK_THROWS(json::parse("[2,0]").get<Degree>());
    CHECK_THROWS(json::parse("[1]").get<Degree>());
    auto sig = GradingSignature::sorted(1, 0, 2, 1);
    CHECK(json(sig).get<GradingSignature>() == sig);
  }

  TEST_CASE("graded matrix layout") {
    auto sig = GradingSignature::sorted(1, 1, 0, 0);
    GradedMatrix m(sig, ExactMatrix{{0, 5}, {0, 0}}, Degree{0, 1});
    json j = m;
    CHECK(j.dump() == R"({"degree":[0,1],"entries":[[0,1,{"r":"5/1"}]],"n":2,"signature":[[0,0],[0,1]]})");
    auto back = j.get<GradedMatrix>();
    CHECK(back == m);
    CHECK(back.declared_degree() == Degree{0, 1});
    CHECK(json(GradedMatrix(sig, ExactMatrix(2, 2)))["degree"].is_null());
  }

  TEST_CASE("graded matrix validation") {
    CHECK_THROWS(json::parse(R"({"n":2,"signature":[[0,0]],"entries":[]})").get<GradedMatrix>());
    CHECK_THROWS(json::parse(R"({"n":1,"signature":[[0,0]],"entries":[[1,0,1]]})").get<GradedMatrix>());
    CHECK_THROWS(
        json::parse(R"({"n":2,"signature":[[0,0],[0,1]],"degree":[0,0],"entries":[[0,1,1]]})").get<GradedMatrix>());
  }

  TEST_CASE("graded matrix round trip") {
    Gen g;
    for (int t = 0; t < 100; ++t) {
      auto sig = g.signature(static_cast<std::size_t>(g.integer(1, 6)));
      auto m = g.coin() ? g.any(sig) : g.homogeneous(sig, g.degree());
      auto back = json(m).get<GradedMatrix>();
      CHECK(back == m);
      CHECK(back.declared_degree() == m.declared_degree());
      CHECK(json(back).dump() == json(m).dump());
    }
  }

  TEST_CASE("basis round trip") {
    for (auto f : {AlgebraFamily::sp(2, 1), AlgebraFamily::so_graded(1, 1, 2, 0), AlgebraFamily::so_odd(2, 2)}) {
      auto b = build_basis(f);
      json j = b;
      CHECK(j["family"] == std::string(cli_name(f.kind)));
      CHECK(j["profile"] == json(b.profile()));
      auto back = j.get<GradedBasis>();
      CHECK(back.family == f);
      CHECK(back.signature == b.signature);
      REQUIRE(back.size() == b.size());
      for (std::size_t i = 0; i < b.size(); ++i) CHECK(back.elements[i] == b.elements[i]);
      CHECK(dump_canonical(json(back)) == dump_canonical(j));
    }
  }

  TEST_CASE("basis elements must carry degrees") {
    json j = build_basis(AlgebraFamily::sp(1, 0));
    j["elements"][0]["degree"] = nullptr;
    CHECK_THROWS(j.get<GradedBasis>());
  }

  TEST_CASE("family params") {
    CHECK(json(AlgebraFamily::sp(3, 1)).dump() == R"({"name":"sp","params":{"n":3,"p":1}})");
    CHECK(json(AlgebraFamily::sl(1, 2, 3, 4)).dump() == R"({"name":"sl","params":{"p":1,"q":2,"r":3,"s":4}})");
    CHECK_THROWS(json::parse(R"({"name":"sp","params":{"n":1,"p":2}})").get<AlgebraFamily>());
  }

  TEST_CASE("report and structure constants") {
    auto b = build_basis(AlgebraFamily::so_even(2, 1));
    json r = check_axioms(b);
    for (const char* key : {"check", "family", "rule", "cases", "failures", "pass"}) CHECK(r.contains(key));
    CHECK(r["rule"] == "gla");
    CHECK(r["pass"] == true);
    CHECK_FALSE(r.contains("elapsed"));

    json sc = structure_constants(b);
    CHECK(sc["basis_size"] == 6);
    const auto& entries = sc["entries"];
    for (std::size_t i = 1; i < entries.size(); ++i) {
      auto key = [](const json& e) {
        return std::make_tuple(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
      };
      CHECK(key(entries[i - 1]) < key(entries[i]));
    }
  }

  TEST_CASE("canonical text is stable") {
    json a = build_basis(AlgebraFamily::sp(2, 1));
    json b = build_basis(AlgebraFamily::sp(2, 1));
    CHECK(dump_canonical(a) == dump_canonical(b));
    CHECK(dump_canonical(a).back() == '\n');
  }
}
