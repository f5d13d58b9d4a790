#include "zzgla/serialize.hpp"

#include <stdexcept>

namespace zzgla {

void to_json(json& j, const Scalar& x) {
  j = json::object();
  j["r"] = to_string(x.rational_part());
  if (!x.sqrt2_part().is_zero()) j["s"] = to_string(x.sqrt2_part());
}

void from_json(const json& j, Scalar& x) {
  if (j.is_number_integer()) {
    x = Scalar(j.get<long long>());
    return;
  }
  if (!j.is_object() || !j.contains("r")) throw std::invalid_argument("scalar must be an object with an \"r\" field");
  Rational r = parse_rational(j.at("r").get<std::string>());
  Rational s = j.contains("s") ? parse_rational(j.at("s").get<std::string>()) : Rational(0);
  x = Scalar(std::move(r), std::move(s));
}

void to_json(json& j, Degree d) { j = json::array({d.a1, d.a2}); }

void from_json(const json& j, Degree& d) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("degree must be a pair [a1, a2]");
  const int a1 = j[0].get<int>();
  const int a2 = j[1].get<int>();
  if ((a1 != 0 && a1 != 1) || (a2 != 0 && a2 != 1)) throw std::invalid_argument("degree components must be 0 or 1");
  d = Degree{a1, a2};
}

void to_json(json& j, const GradingSignature& sig) {
  j = json::array();
  for (auto d : sig.degrees()) j.push_back(json(d));
}

void from_json(const json& j, GradingSignature& sig) {
  std::vector<Degree> degrees;
  for (const auto& e : j) degrees.push_back(e.get<Degree>());
  sig = GradingSignature(std::move(degrees));
}

void to_json(json& j, const GradedMatrix& m) {
  j = json::object();
  j["n"] = m.size();
  j["signature"] = json(m.signature());
  j["degree"] = m.declared_degree() ? json(*m.declared_degree()) : json(nullptr);
  json entries = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      const Scalar& x = m.entries()(r, c);
      if (!x.is_zero()) entries.push_back(json::array({r, c, json(x)}));
    }
  }
  j["entries"] = std::move(entries);
}

void from_json(const json& j, GradedMatrix& m) {
  const auto n = j.at("n").get<std::size_t>();
  auto sig = j.at("signature").get<GradingSignature>();
  if (sig.size() != n) throw std::invalid_argument("graded matrix: signature length differs from n");
  ExactMatrix entries(n, n);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("graded matrix entry must be [row, col, scalar]");
    const auto r = e[0].get<std::size_t>();
    const auto c = e[1].get<std::size_t>();
    if (r >= n || c >= n) throw std::invalid_argument("graded matrix entry index out of range");
    entries(r, c) = e[2].get<Scalar>();
  }
  std::optional<Degree> degree;
  if (j.contains("degree") && !j.at("degree").is_null()) degree = j.at("degree").get<Degree>();
  m = GradedMatrix(std::move(sig), std::move(entries), degree);
}

json family_params(const AlgebraFamily& f) {
  if (f.has_form()) return {{"n", f.n}, {"p", f.p}};
  return {{"p", f.pqrs[0]}, {"q", f.pqrs[1]}, {"r", f.pqrs[2]}, {"s", f.pqrs[3]}};
}

AlgebraFamily family_from_params(std::string_view name, const json& params) {
  AlgebraFamily f;
  f.kind = parse_family_kind(name);
  if (f.has_form()) {
    f.n = params.at("n").get<std::size_t>();
    f.p = params.at("p").get<std::size_t>();
  } else {
    f.pqrs = {params.at("p").get<std::size_t>(), params.at("q").get<std::size_t>(), params.at("r").get<std::size_t>(),
              params.at("s").get<std::size_t>()};
  }
  f.validate();
  return f;
}

void to_json(json& j, const AlgebraFamily& f) {
  j = {{"name", std::string(cli_name(f.kind))}, {"params", family_params(f)}};
}

void from_json(const json& j, AlgebraFamily& f) {
  f = family_from_params(j.at("name").get<std::string>(), j.at("params"));
}

void to_json(json& j, const DimensionProfile& p) {
  j = {{"d00", p.d[0]}, {"d01", p.d[1]}, {"d10", p.d[2]}, {"d11", p.d[3]}};
}

void to_json(json& j, const GradedBasis& b) {
  j = json::object();
  j["family"] = std::string(cli_name(b.family.kind));
  j["params"] = family_params(b.family);
  j["signature"] = json(b.signature);
  json elements = json::array();
  for (const auto& e : b.elements) elements.push_back(json(e));
  j["elements"] = std::move(elements);
  j["profile"] = json(b.profile());
}

void from_json(const json& j, GradedBasis& b) {
  b.family = family_from_params(j.at("family").get<std::string>(), j.at("params"));
  b.signature = j.at("signature").get<GradingSignature>();
  b.elements.clear();
  for (const auto& e : j.at("elements")) {
    auto m = e.get<GradedMatrix>();
    if (!m.declared_degree()) throw std::invalid_argument("basis elements must carry a degree");
    if (!(m.signature() == b.signature)) throw std::invalid_argument("basis element signature differs from basis");
    b.elements.push_back(std::move(m));
  }
}

void to_json(json& j, const Failure& f) {
  json inputs = json::array();
  for (const auto& m : f.inputs) inputs.push_back(json(m));
  j = {{"what", f.what}, {"inputs", std::move(inputs)}, {"expected", f.expected}, {"got", f.got}};
}

void to_json(json& j, const CheckReport& r) {
  j = json::object();
  j["check"] = r.check;
  j["family"] = r.family ? json(*r.family) : json(nullptr);
  j["rule"] = r.rule ? json(to_string(*r.rule)) : json(nullptr);
  j["cases"] = r.cases;
  j["failure_count"] = r.failure_count;
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(json(f));
  j["failures"] = std::move(failures);
  j["pass"] = r.passed();
  if (!r.details.empty()) j["details"] = r.details;
}

void to_json(json& j, const StructureConstants& sc) {
  json entries = json::array();
  for (const auto& [key, value] : sc.entries) {
    entries.push_back(json::array({std::get<0>(key), std::get<1>(key), std::get<2>(key), json(value)}));
  }
  j = {{"basis_size", sc.basis_size}, {"entries", std::move(entries)}};
}

void to_json(json& j, const ParafermionSummary& s) {
  j = {{"n", s.n},
       {"q", s.q},
       {"pf_cases", s.pf_cases},
       {"pfrel_cases", s.pfrel_cases},
       {"pass", s.pass},
       {"subspace_spans", json(s.subspace_spans)}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace zzgla
