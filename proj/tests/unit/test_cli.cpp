#include "cli.hpp"

#include "zzgla/serialize.hpp"

#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace zzgla;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    path_ = fs::temp_directory_path() / ("zzgla-cli-" + std::to_string(stamp) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::string& path, const json& j) { std::ofstream(path) << dump_canonical(j); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("build sp --n 2 --p 1 writes 10 elements") {
    TempDir tmp;
    auto r = run({"build", "sp", "--n", "2", "--p", "1", "--out", tmp.file("basis.json")});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    json j = json::parse(slurp(tmp.file("basis.json")));
    CHECK(j["elements"].size() == 10);
    CHECK(j["profile"] == json::parse(R"({"d00":2,"d01":2,"d10":2,"d11":4})"));
  }

  TEST_CASE("build to standard output") {
    auto r = run({"build", "sl", "--sig", "1,1,1,1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["elements"].size() == 15);
  }

  TEST_CASE("verify so-odd --n 3 --p 1 jacobi,closure,generation") {
    auto r = run({"verify", "so-odd", "--n", "3", "--p", "1", "--checks", "jacobi,closure,generation"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    std::vector<std::string> names;
    for (const auto& rep : j["reports"]) names.push_back(rep["check"]);
    CHECK(names == std::vector<std::string>{"jacobi", "closure", "family-closure", "generation"});
    CHECK(j["reports"][0]["cases"] == 21 * 21 * 21);
  }

  TEST_CASE("dims so-odd --n 3 --p 1 warns about the printed d00") {
    auto r = run({"dims", "so-odd", "--n", "3", "--p", "1"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["measured"]["d00"] == 7);
    CHECK(j["formula"]["d00"] == -1);
    CHECK(j["consistent"] == false);
    CHECK(r.err.find("measured") != std::string::npos);
    CHECK(r.err.find("WARN") != std::string::npos);
    CHECK(r.err.find("-1") != std::string::npos);
  }

  TEST_CASE("dims without discrepancy has no warning") {
    auto r = run({"dims", "sp", "--n", "3", "--p", "1"});
    CHECK(r.code == 0);
    CHECK(r.err.find("WARN") == std::string::npos);
    CHECK(json::parse(r.out)["classical_dim"] == 21);
  }

  TEST_CASE("build, load, verify matches in-process verification byte for byte") {
    TempDir tmp;
    const std::string checks = "axioms,closure,symmetry,generation,cartan,permutation,identities";
    for (std::vector<std::string> fam : {std::vector<std::string>{"sp", "--n", "2", "--p", "1"},
                                         std::vector<std::string>{"so-graded", "--sig", "1,1,0,1"},
                                         std::vector<std::string>{"so-odd", "--n", "2", "--p", "2"}}) {
      auto build = fam;
      build.insert(build.begin(), "build");
      build.insert(build.end(), {"--out", tmp.file("b.json")});
      REQUIRE(run(build).code == 0);

      auto from_file = run({"verify", "--in", tmp.file("b.json"), "--checks", checks});
      auto direct_args = fam;
      direct_args.insert(direct_args.begin(), "verify");
      direct_args.insert(direct_args.end(), {"--checks", checks});
      auto direct = run(direct_args);
      CHECK(from_file.out == direct.out);
      CHECK(from_file.code == direct.code);
    }
  }

  TEST_CASE("a failing check exits 1 and the report says so") {
    TempDir tmp;
    auto sig = GradingSignature::sorted(1, 1, 0, 0);
    json basis = {{"family", "gl"},
                  {"params", {{"p", 1}, {"q", 1}, {"r", 0}, {"s", 0}}},
                  {"signature", json(sig)},
                  {"elements", {json(GradedMatrix::unit(sig, 0, 1)), json(GradedMatrix::unit(sig, 1, 0))}}};
    write(tmp.file("open.json"), basis);
    auto r = run({"verify", "--in", tmp.file("open.json"), "--checks", "closure"});
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["pass"] == false);
    CHECK(j["reports"][0]["pass"] == false);
    CHECK(j["reports"][0]["failure_count"] == 2);
  }

  TEST_CASE("structconst") {
    auto r = run({"structconst", "so-even", "--n", "2", "--p", "1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["basis_size"] == 6);
  }

  TEST_CASE("parafermion") {
    auto r = run({"parafermion", "--n", "2", "--q", "1"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["pf_cases"] == 16);
    CHECK(j["pfrel_cases"] == 32);
    CHECK(run({"parafermion", "--n", "2", "--q", "3"}).code == 2);
  }

  TEST_CASE("eval transpose of degree (0,0) is the ordinary transpose") {
    TempDir tmp;
    auto sig = GradingSignature::sorted(1, 1, 1, 0);
    ExactMatrix m(3, 3);
    m(0, 0) = 1;
    m(1, 1) = Scalar(Rational(2), Rational(1));
    write(tmp.file("m.json"), json(GradedMatrix(sig, m, Degree{})));
    auto r = run({"eval", "transpose", tmp.file("m.json")});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).get<GradedMatrix>().entries() == m.transpose());
  }

  TEST_CASE("eval bracket reproduces [[f1+, f1-], f1-] = -2 f1-") {
    TempDir tmp;
    auto sys = build_system(1, 1);
    write(tmp.file("plus.json"), json(sys.generator(1, 1)));
    write(tmp.file("minus.json"), json(sys.generator(1, -1)));
    auto inner = run({"eval", "bracket", tmp.file("plus.json"), tmp.file("minus.json"), "--out", tmp.file("c.json")});
    REQUIRE(inner.code == 0);
    auto outer = run({"eval", "bracket", tmp.file("c.json"), tmp.file("minus.json")});
    REQUIRE(outer.code == 0);
    auto got = json::parse(outer.out).get<GradedMatrix>();
    CHECK(got == Scalar(-2) * sys.generator(1, -1));
    CHECK(got.declared_degree() == Degree{0, 1});
  }

  TEST_CASE("eval product") {
    TempDir tmp;
    auto sig = GradingSignature::sorted(1, 1, 1, 0);
    write(tmp.file("a.json"), json(GradedMatrix::unit(sig, 0, 1)));
    write(tmp.file("b.json"), json(GradedMatrix::unit(sig, 1, 2)));
    auto r = run({"eval", "product", tmp.file("a.json"), tmp.file("b.json")});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).get<GradedMatrix>() == GradedMatrix::unit(sig, 0, 2));
  }

  TEST_CASE("eval with mismatched signatures exits 2") {
    TempDir tmp;
    write(tmp.file("a.json"), json(GradedMatrix::unit(GradingSignature::sorted(1, 1, 0, 0), 0, 1)));
    write(tmp.file("b.json"), json(GradedMatrix::unit(GradingSignature::sorted(1, 0, 1, 0), 0, 1)));
    auto r = run({"eval", "bracket", tmp.file("a.json"), tmp.file("b.json")});
    CHECK(r.code == 2);
    CHECK(r.err.find("signature mismatch") != std::string::npos);
    CHECK(run({"eval", "transpose", tmp.file("a.json"), tmp.file("b.json")}).code == 2);
    CHECK(run({"eval", "bracket", tmp.file("a.json")}).code == 2);
    CHECK(run({"eval", "bracket", tmp.file("missing.json"), tmp.file("a.json")}).code == 2);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"build", "sp", "--n", "2", "--bogus"}).code == 2);
    CHECK(run({"build", "sp", "--n", "2", "--p", "3"}).code == 2);
    CHECK(run({"build", "sp"}).code == 2);
    CHECK(run({"build", "sp", "--sig", "1,1,1,1"}).code == 2);
    CHECK(run({"build", "sl", "--n", "2"}).code == 2);
    CHECK(run({"build", "sl", "--sig", "1,1,1"}).code == 2);
    CHECK(run({"build", "so"}).code == 2);
    CHECK(run({"verify", "sp", "--n", "1", "--checks", "bogus"}).code == 2);
    CHECK(run({"verify", "sp", "--n", "1", "--sign-rule", "lie"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"build", "sp", "--n", "1", "dims"}).code == 2);
  }

  TEST_CASE("help exits 0") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
  }

  TEST_CASE("glsa rule is passed through") {
    auto r = run({"verify", "gl", "--sig", "1,1,0,0", "--checks", "symmetry", "--sign-rule", "glsa"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["rule"] == "glsa");
  }

  TEST_CASE("verbose tables go to standard error") {
    auto r = run({"verify", "sp", "--n", "1", "--checks", "axioms", "--verbose"});
    CHECK(r.code == 0);
    CHECK(r.err.find("PASS") != std::string::npos);
    CHECK(json::parse(r.out)["pass"] == true);
  }
}
