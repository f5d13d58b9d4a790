#include "cli.hpp"

#include "zzgla/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace zzgla::cli {

namespace {

const std::vector<std::string> kCheckNames{"axioms",     "jacobi", "closure",     "symmetry",
                                           "generation", "cartan", "permutation", "identities"};

constexpr std::size_t kIdentityTriples = 1000;

/// Raised for bad arguments that CLI11 cannot see (wrong flag combinations,
/// unreadable files).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string name;
  std::optional<std::size_t> n;
  std::optional<std::size_t> p;
  std::vector<std::size_t> sig;

  AlgebraFamily resolve() const {
    FamilyKind kind = parse_family_kind(name);
    AlgebraFamily f;
    switch (kind) {
      case FamilyKind::GL:
      case FamilyKind::SL:
      case FamilyKind::SOGraded:
        if (n || p) throw UsageError(name + " takes --sig p,q,r,s, not --n/--p");
        if (sig.size() != 4) throw UsageError(name + " needs --sig p,q,r,s");
        if (kind == FamilyKind::GL) f = AlgebraFamily::gl(sig[0], sig[1], sig[2], sig[3]);
        if (kind == FamilyKind::SL) f = AlgebraFamily::sl(sig[0], sig[1], sig[2], sig[3]);
        if (kind == FamilyKind::SOGraded) f = AlgebraFamily::so_graded(sig[0], sig[1], sig[2], sig[3]);
        break;
      case FamilyKind::SPp:
      case FamilyKind::SOpEven:
      case FamilyKind::SOpOdd:
        if (!sig.empty()) throw UsageError(name + " takes --n and --p, not --sig");
        if (!n) throw UsageError(name + " needs --n");
        if (kind == FamilyKind::SPp) f = AlgebraFamily::sp(*n, p.value_or(0));
        if (kind == FamilyKind::SOpEven) f = AlgebraFamily::so_even(*n, p.value_or(0));
        if (kind == FamilyKind::SOpOdd) f = AlgebraFamily::so_odd(*n, p.value_or(0));
        break;
    }
    f.validate();
    return f;
  }
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa, bool required) {
  auto* pos = cmd->add_option("family", fa.name, "gl, sl, so-graded, sp, so-even or so-odd")
                  ->check(CLI::IsMember({"gl", "sl", "so-graded", "sp", "so-even", "so-odd"}));
  if (required) pos->required();
  cmd->add_option("--n", fa.n, "rank parameter n (sp, so-even, so-odd)");
  cmd->add_option("--p", fa.p, "grading parameter p, default 0 (sp, so-even, so-odd)");
  cmd->add_option("--sig", fa.sig, "block sizes p,q,r,s (gl, sl, so-graded)")->delimiter(',')->expected(4);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = dump_canonical(j);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

std::string format_elapsed(std::chrono::nanoseconds ns) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << std::chrono::duration<double>(ns).count() << "s";
  return s.str();
}

void print_reports(const std::vector<CheckReport>& reports, std::ostream& err) {
  err << std::left << std::setw(16) << "check" << std::right << std::setw(10) << "cases" << std::setw(10)
      << "failures" << std::setw(8) << "result" << std::setw(10) << "time" << "\n";
  for (const auto& r : reports) {
    err << std::left << std::setw(16) << r.check << std::right << std::setw(10) << r.cases << std::setw(10)
        << r.failure_count << std::setw(8) << (r.passed() ? "PASS" : "FAIL") << std::setw(10)
        << format_elapsed(r.elapsed) << "\n";
    for (const auto& f : r.failures) err << "  - " << f.what << "\n";
  }
}

CheckReport identities_report(const GradedBasis& basis) {
  CheckReport r;
  r.check = "identities";
  r.family = basis.family;
  const std::size_t dim = basis.size();
  if (dim == 0) return r;
  std::mt19937_64 rng(kJacobiSeed);
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  const std::size_t total = dim * dim * dim;
  const bool exhaustive = total <= kIdentityTriples;
  r.details["mode"] = exhaustive ? "exhaustive" : "sampled";
  const std::size_t count = exhaustive ? total : kIdentityTriples;
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t i = exhaustive ? t / (dim * dim) : pick(rng);
    std::size_t j = exhaustive ? (t / dim) % dim : pick(rng);
    std::size_t k = exhaustive ? t % dim : pick(rng);
    r.absorb(check_four_identities(basis.elements[i], basis.elements[j], basis.elements[k]));
  }
  return r;
}

std::vector<CheckReport> run_checks(const GradedBasis& basis, const std::vector<std::string>& checks, SignRule rule) {
  std::vector<CheckReport> reports;
  for (const auto& c : checks) {
    if (c == "axioms") {
      reports.push_back(check_axioms(basis, rule));
    } else if (c == "jacobi") {
      reports.push_back(check_jacobi(basis, rule));
    } else if (c == "closure") {
      reports.push_back(check_closure(basis, rule));
      reports.push_back(check_family_closure(basis, rule));
    } else if (c == "symmetry") {
      reports.push_back(check_antisymmetry(basis, rule));
    } else if (c == "generation") {
      reports.push_back(check_generation(basis));
    } else if (c == "cartan") {
      reports.push_back(cartan_diagonal(basis).report);
    } else if (c == "permutation") {
      for (const auto& pi : DegreePermutation::all()) reports.push_back(check_permutation_stability(basis, pi));
    } else if (c == "identities") {
      reports.push_back(identities_report(basis));
    }
  }
  return reports;
}

json verify_json(const GradedBasis& basis, SignRule rule, const std::vector<CheckReport>& reports) {
  json j = json::object();
  j["family"] = json(basis.family);
  j["rule"] = to_string(rule);
  json arr = json::array();
  bool pass = true;
  for (const auto& r : reports) {
    arr.push_back(json(r));
    pass = pass && r.passed();
  }
  j["reports"] = std::move(arr);
  j["pass"] = pass;
  return j;
}

void print_dims_table(const AlgebraFamily& f, const DimensionProfile& formula, const DimensionProfile& measured,
                      std::ostream& err) {
  err << std::left << std::setw(12) << f.label() << std::right;
  for (const char* h : {"d00", "d01", "d10", "d11", "total"}) err << std::setw(7) << h;
  err << "\n";
  auto row = [&](const char* name, const DimensionProfile& p) {
    err << std::left << std::setw(12) << name << std::right;
    for (long long v : p.d) err << std::setw(7) << v;
    err << std::setw(7) << p.total() << "\n";
  };
  row("formula", formula);
  row("measured", measured);
}

std::vector<std::string> dims_warnings(const AlgebraFamily& f, const DimensionProfile& formula,
                                       const DimensionProfile& measured) {
  std::vector<std::string> out;
  for (Degree d : kAllDegrees) {
    if (formula[d] == measured[d]) continue;
    const std::string key = "d" + std::to_string(d.a1) + std::to_string(d.a2);
    std::string msg = f.label() + ": printed formula for " + key + " evaluates to " + std::to_string(formula[d]) +
                      " but the basis has " + std::to_string(measured[d]) + " elements";
    if (f.kind == FamilyKind::SOpOdd && d == Degree{0, 0}) {
      msg += " (2n^2-n-4p(n-p)^2 printed; 2n^2-n-4p(n-p) = " + std::to_string(so_odd_consistent_d00(f.n, f.p)) + ")";
    }
    out.push_back(msg);
  }
  return out;
}

GradedMatrix load_matrix(const std::string& path) {
  try {
    return read_json_file(path).get<GradedMatrix>();
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of Z2xZ2-graded matrix Lie algebras", "zzgla"};
  app.require_subcommand(1, 1);

  std::string out_path;
  bool verbose = false;
  std::string rule_name = "gla";
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write JSON here instead of standard output");
    cmd->add_flag("--verbose", verbose, "print tables to standard error");
  };
  auto rule_option = [&](CLI::App* cmd) {
    cmd->add_option("--sign-rule", rule_name, "gla (default) or glsa")->check(CLI::IsMember({"gla", "glsa"}));
  };

  FamilyArgs fa;

  auto* build = app.add_subcommand("build", "build a homogeneous basis");
  add_family_options(build, fa, true);
  common(build);

  auto* dims = app.add_subcommand("dims", "compare printed dimension formulas with the basis");
  add_family_options(dims, fa, true);
  common(dims);

  std::vector<std::string> checks{"axioms"};
  std::string in_path;
  auto* verify = app.add_subcommand("verify", "run verification checks");
  add_family_options(verify, fa, false);
  verify->add_option("--checks", checks, "comma list of checks")
      ->delimiter(',')
      ->check(CLI::IsMember(kCheckNames));
  verify->add_option("--in", in_path, "basis JSON to verify instead of building one");
  rule_option(verify);
  common(verify);

  auto* sc = app.add_subcommand("structconst", "structure constants in the basis");
  add_family_options(sc, fa, true);
  rule_option(sc);
  common(sc);

  std::size_t pf_n = 0;
  std::size_t pf_q = 0;
  auto* pf = app.add_subcommand("parafermion", "parafermion relations inside so_q(2n+1)");
  pf->add_option("--n", pf_n, "number of generator pairs")->required();
  pf->add_option("--q", pf_q, "size of the first sort")->required();
  common(pf);

  std::string op;
  std::vector<std::string> files;
  auto* ev = app.add_subcommand("eval", "apply bracket, transpose or product to graded matrix files");
  ev->add_option("op", op, "bracket, transpose or product")
      ->required()
      ->check(CLI::IsMember({"bracket", "transpose", "product"}));
  ev->add_option("files", files, "graded matrix JSON files")->required()->expected(1, 2);
  rule_option(ev);
  common(ev);

  std::vector<std::string> argv_store{"zzgla"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const SignRule rule = parse_sign_rule(rule_name);

    if (build->parsed()) {
      GradedBasis basis = build_basis(fa.resolve());
      if (verbose) {
        err << basis.family.label() << ": " << basis.size() << " elements, signature " << basis.signature.str()
            << "\n";
      }
      emit(json(basis), out_path, out);
      return kExitOk;
    }

    if (dims->parsed()) {
      AlgebraFamily f = fa.resolve();
      DimensionProfile formula = dimension_profile(f);
      DimensionProfile measured = dimension_profile_measured(f);
      auto warnings = dims_warnings(f, formula, measured);
      print_dims_table(f, formula, measured, err);
      for (const auto& w : warnings) err << "WARN " << w << "\n";
      json j = {{"family", json(f)},    {"formula", json(formula)},  {"measured", json(measured)},
                {"warnings", warnings}, {"consistent", warnings.empty()}};
      if (f.has_form()) j["classical_dim"] = classical_counterpart_dims(f);
      emit(j, out_path, out);
      return kExitOk;
    }

    if (verify->parsed()) {
      GradedBasis basis;
      if (!in_path.empty()) {
        if (!fa.name.empty()) throw UsageError("give either a family or --in, not both");
        try {
          basis = read_json_file(in_path).get<GradedBasis>();
        } catch (const json::exception& e) {
          throw UsageError(in_path + ": " + e.what());
        }
      } else {
        if (fa.name.empty()) throw UsageError("verify needs a family or --in FILE");
        basis = build_basis(fa.resolve());
      }
      std::vector<std::string> unique;
      for (const auto& c : checks) {
        if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
      }
      auto reports = run_checks(basis, unique, rule);
      if (verbose) print_reports(reports, err);
      json j = verify_json(basis, rule, reports);
      emit(j, out_path, out);
      return j["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
    }

    if (sc->parsed()) {
      GradedBasis basis = build_basis(fa.resolve());
      try {
        StructureConstants constants = structure_constants(basis, rule);
        if (verbose) err << constants.entries.size() << " nonzero structure constants\n";
        emit(json(constants), out_path, out);
        return kExitOk;
      } catch (const SpanEscapeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
      }
    }

    if (pf->parsed()) {
      ParafermionSummary s = summarize(build_system(pf_n, pf_q));
      if (verbose) print_reports(s.reports, err);
      emit(json(s), out_path, out);
      return s.pass ? kExitOk : kExitCheckFailed;
    }

    if (ev->parsed()) {
      std::vector<GradedMatrix> inputs;
      for (const auto& f : files) inputs.push_back(load_matrix(f));
      const bool binary = op != "transpose";
      if (inputs.size() != (binary ? 2u : 1u)) {
        throw UsageError(op + " takes " + (binary ? "two files" : "one file"));
      }
      if (binary && !(inputs[0].signature() == inputs[1].signature())) {
        throw UsageError("signature mismatch: " + inputs[0].signature().str() + " vs " + inputs[1].signature().str());
      }
      GradedMatrix result;
      if (op == "bracket") result = graded_bracket(inputs[0], inputs[1], rule);
      if (op == "product") result = graded_product(inputs[0], inputs[1]);
      if (op == "transpose") result = graded_transpose(inputs[0]);
      if (verbose) err << result.entries().str() << "\n";
      emit(json(result), out_path, out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zzgla::cli
