#include "commands.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "sysrep/decomposition.hpp"
#include "sysrep/module_structure.hpp"

namespace sysrep::cli {

namespace {

std::string vec_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string matrix_text(const Matrix& m, const std::string& indent) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += indent + "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).to_string();
    s += "]\n";
  }
  return s;
}

std::string factorization_text(const Factorization& f) {
  std::string s;
  if (!f.unit.is_one()) s += f.unit.to_string() + " * ";
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i) s += " * ";
    s += "(" + f.factors[i].factor.to_string() + ")";
    if (f.factors[i].multiplicity > 1) s += "^" + std::to_string(f.factors[i].multiplicity);
  }
  return s.empty() ? "1" : s;
}

Json factorization_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({{"factor", io::to_json(p)}, {"multiplicity", e}});
  return {{"unit", io::to_json(f.unit)}, {"factors", factors}};
}

std::uint64_t seed_of(const io::SystemDocument& doc, const Options& opt) { return opt.seed.value_or(doc.seed); }

std::string system_text(const io::SystemDocument& doc, std::uint64_t seed) {
  return "system: " + doc.field.name() + ", time group " + doc.group.name() + ", n = " +
         std::to_string(doc.matrix.rows()) + ", seed " + std::to_string(seed) + "\n";
}

Json system_json(const io::SystemDocument& doc, std::uint64_t seed) {
  Json j = io::to_json(doc);
  j["seed"] = seed;
  return j;
}

bool invertible(const Matrix& a) { return rank(a) == a.rows(); }

void add_primary(Output& out, const Matrix& a, std::uint64_t seed) {
  Json list = Json::array();
  out.text += "primary components:\n";
  for (const auto& c : primary_decomposition(a, seed)) {
    Json basis = Json::array();
    for (const auto& v : c.basis) basis.push_back(io::to_json(v));
    list.push_back({{"factor", io::to_json(c.factor)},
                    {"multiplicity", c.multiplicity},
                    {"dimension", c.basis.size()},
                    {"basis", basis},
                    {"projector", io::to_json(c.projector)}});
    out.text += "  " + c.factor.to_string() + " (multiplicity " + std::to_string(c.multiplicity) + ", dimension " +
                std::to_string(c.basis.size()) + ")\n";
    for (const auto& v : c.basis) out.text += "    " + vec_text(v) + "\n";
  }
  out.json["primary_components"] = list;
}

void add_planar(Output& out, const Matrix& a, std::uint64_t seed) {
  if (a.field().characteristic() == 2) {
    out.json["planar_blocks"] = {{"skipped", "CharacteristicTwo"}};
    out.text += "planar blocks: skipped (characteristic 2)\n";
    return;
  }
  Json list = Json::array();
  const auto blocks = planar_blocks(a, seed);
  out.text += blocks.empty() ? "planar blocks: none\n" : "planar blocks:\n";
  for (const auto& b : blocks) {
    const bool rotation = b.form == BlockForm::Rotation;
    list.push_back({{"factor", io::to_json(b.factor)},
                    {"a", io::to_json(b.a)},
                    {"b", b.b ? io::to_json(*b.b) : Json(nullptr)},
                    {"form", rotation ? "rotation" : "companion"},
                    {"basis", {io::to_json(b.u), io::to_json(b.w)}}});
    out.text += "  " + b.factor.to_string() + ": ";
    out.text += rotation ? "rotation a = " + b.a.to_string() + ", b = " + b.b->to_string()
                         : std::string("companion form (c0 - a^2 is not a square)");
    out.text += ", basis " + vec_text(b.u) + ", " + vec_text(b.w) + "\n";
  }
  out.json["planar_blocks"] = list;
}

InvariantFactorDecomposition add_invariant(Output& out, const Matrix& a, std::uint64_t seed) {
  auto dec = invariant_factors(a, seed);
  Json fs = Json::array(), gens = Json::array();
  std::string names;
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    fs.push_back(io::to_json(dec.factors[i]));
    gens.push_back(io::to_json(dec.generators[i]));
    names += (i ? ", " : "") + dec.factors[i].to_string();
  }
  out.json["invariant_factors"] = {{"invariant_factors", fs},
                                   {"generators", gens},
                                   {"P", io::to_json(dec.basis_change)},
                                   {"C", io::to_json(dec.canonical_form)}};
  out.text += "invariant factors: " + names + "\n";
  out.text += "generators:";
  for (const auto& g : dec.generators) out.text += " " + vec_text(g);
  out.text += "\nrational canonical form C = P^-1 A P:\n" + matrix_text(dec.canonical_form, "  ");
  return dec;
}

void add_period(Output& out, const Matrix& a, const InvariantFactorDecomposition& dec, std::uint64_t seed) {
  if (!invertible(a)) {
    out.json["period"] = {{"unavailable", "SingularMatrix"}};
    out.text += "period: none (A is singular)\n";
    return;
  }
  std::uint64_t T = 0;
  try {
    T = order_of_matrix(a, seed);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfiniteOrder) throw;
    out.json["period"] = {{"unavailable", "InfiniteOrder"}};
    out.text += "period: none (A has infinite order)\n";
    return;
  }
  Json period = {{"T", T}};
  out.text += "period T = " + std::to_string(T) + "\n";
  if (a.field().is_finite()) {
    const auto report = verify_period_divisibility(dec, T, seed);
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      entries.push_back({{"factor", io::to_json(e.factor)}, {"order", e.order}, {"divides", e.divides}});
      out.text += "  " + e.factor.to_string() + ": order " + std::to_string(e.order) +
                  (e.divides ? ", divides" : ", does not divide") + " x^" + std::to_string(T) + " - 1\n";
    }
    period["divisibility"] = entries;
    period["order_lcm"] = report.order_lcm;
    period["passed"] = report.passed;
  }
  out.json["period"] = period;
}

std::string census_text(const OrbitCensus& c) {
  std::string s = "orbit census: " + c.states.get_str() + " states, T = " + std::to_string(c.period) + "\n";
  for (const auto& [t, n] : c.cycles) s += "  length " + std::to_string(t) + ": " + n.get_str() + " orbit(s)\n";
  return s;
}

void add_census(Output& out, const Matrix& a, const Options& opt, std::uint64_t seed, CensusMethod method) {
  if (method == CensusMethod::Enumerate) {
    const OrbitCensus c = orbit_census_enumerate(a, {opt.max_states, opt.workers});
    out.json["census"] = io::to_json(c);
    out.json["census"]["method"] = "enumerate";
    out.text += census_text(c);
    return;
  }
  const OrbitCensus c = orbit_census_analytic(a, seed);
  Json j = io::to_json(c);
  std::string note;
  if (method == CensusMethod::Analytic) {
    j["method"] = "analytic";
  } else {
    j["method"] = "both";
    const auto states = state_count(a);
    if (states && *states <= std::min(opt.max_states, kHardMaxStates)) {
      const bool agree = orbit_census_enumerate(a, {opt.max_states, opt.workers}) == c;
      j["enumeration"] = agree ? "agrees" : "disagrees";
      note = agree ? "  enumeration: agrees\n" : "  enumeration: DISAGREES\n";
      if (!agree) out.status = 1;
    } else {
      j["enumeration"] = "skipped";
      note = "  enumeration: skipped (state space above the limit)\n";
    }
  }
  out.json["census"] = j;
  out.text += census_text(c) + note;
}

Vector parse_x0(const std::string& csv, const Field& f) {
  Json j;
  try {
    j = Json::parse("[" + csv + "]");
  } catch (const Json::parse_error&) {
    j = Json::array();
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) j.push_back(tok);
  }
  return io::parse_vector(j, f, "--x0");
}

std::string first_difference(const Json& want, const Json& got, const std::string& path) {
  if (want.type() != got.type()) return path.empty() ? "/" : path;
  if (want.is_object()) {
    for (const auto& [k, v] : want.items()) {
      if (!got.contains(k)) return path + "/" + k;
      auto d = first_difference(v, got[k], path + "/" + k);
      if (!d.empty()) return d;
    }
    for (const auto& [k, v] : got.items()) {
      (void)v;
      if (!want.contains(k)) return path + "/" + k;
    }
    return {};
  }
  if (want.is_array()) {
    for (std::size_t i = 0; i < std::min(want.size(), got.size()); ++i) {
      auto d = first_difference(want[i], got[i], path + "/" + std::to_string(i));
      if (!d.empty()) return d;
    }
    if (want.size() != got.size()) return path + "/" + std::to_string(std::min(want.size(), got.size()));
    return {};
  }
  return want == got ? std::string() : (path.empty() ? "/" : path);
}

}  // namespace

io::SystemDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse_document(ss.str());
}

Output analyze(const io::SystemDocument& doc, const Options& opt) {
  const std::uint64_t seed = seed_of(doc, opt);
  const Representation rep(doc.group, doc.matrix);
  const Matrix& a = rep.generator();
  Output out;
  out.json["system"] = system_json(doc, seed);
  out.text += system_text(doc, seed);

  const Polynomial m = minimal_polynomial(a);
  const Polynomial ch = characteristic_polynomial(a);
  const Factorization fac = factor(m, seed);
  out.json["minimal_polynomial"] = io::to_json(m);
  out.json["characteristic_polynomial"] = io::to_json(ch);
  out.json["factorization"] = factorization_json(fac);
  out.text += "minimal polynomial: " + m.to_string() + "\n";
  out.text += "characteristic polynomial: " + ch.to_string() + "\n";
  out.text += "factorization of the minimal polynomial: " + factorization_text(fac) + "\n";

  add_primary(out, a, seed);
  add_planar(out, a, seed);
  const auto dec = add_invariant(out, a, seed);
  add_period(out, a, dec, seed);

  if (a.field().is_finite() && invertible(a)) {
    add_census(out, a, opt, seed, CensusMethod::Both);
  } else {
    const char* why = a.field().is_finite() ? "SingularMatrix" : "RationalFieldUnsupported";
    out.json["census"] = {{"unavailable", why}};
    out.text += std::string("orbit census: unavailable (") + why + ")\n";
  }

  const auto hom = check_homomorphism(rep, opt.trials, seed);
  out.json["homomorphism"] = {{"passed", hom.passed}, {"trials", hom.trials}, {"seed", seed}};
  out.text += std::string("homomorphism check: ") + (hom.passed ? "pass" : "FAIL") + " (" +
              std::to_string(hom.trials) + " trials)\n";
  if (!hom.passed) out.status = 1;
  return out;
}

Output factors(const io::SystemDocument& doc, const Options& opt) {
  const std::uint64_t seed = seed_of(doc, opt);
  Output out;
  out.json["system"] = system_json(doc, seed);
  out.text += system_text(doc, seed);
  const Polynomial m = minimal_polynomial(doc.matrix);
  const Polynomial ch = characteristic_polynomial(doc.matrix);
  const Factorization fm = factor(m, seed);
  const Factorization fc = factor(ch, seed);
  out.json["minimal_polynomial"] = io::to_json(m);
  out.json["characteristic_polynomial"] = io::to_json(ch);
  out.json["factorization"] = factorization_json(fm);
  out.json["characteristic_factorization"] = factorization_json(fc);
  out.text += "minimal polynomial: " + m.to_string() + " = " + factorization_text(fm) + "\n";
  out.text += "characteristic polynomial: " + ch.to_string() + " = " + factorization_text(fc) + "\n";
  return out;
}

Output decompose(const io::SystemDocument& doc, const Options& opt) {
  const std::uint64_t seed = seed_of(doc, opt);
  Output out;
  out.json["system"] = system_json(doc, seed);
  out.text += system_text(doc, seed);
  add_primary(out, doc.matrix, seed);
  add_invariant(out, doc.matrix, seed);
  return out;
}

Output orbits(const io::SystemDocument& doc, const Options& opt, CensusMethod method) {
  const std::uint64_t seed = seed_of(doc, opt);
  const Representation rep(doc.group, doc.matrix);
  Output out;
  out.json["system"] = system_json(doc, seed);
  out.text += system_text(doc, seed);
  if (!doc.field.is_finite()) throw Error(ErrorCode::RationalFieldUnsupported, "orbit census needs a finite field");
  if (!invertible(doc.matrix)) throw Error(ErrorCode::SingularMatrix, "orbit census needs an invertible A");
  add_census(out, doc.matrix, opt, seed, method);
  return out;
}

Output simulate(const io::SystemDocument& doc, const std::string& x0_csv, std::int64_t steps) {
  const Representation rep(doc.group, doc.matrix);
  const Vector x0 = parse_x0(x0_csv, doc.field);
  if (x0.size() != rep.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "--x0 has " + std::to_string(x0.size()) + " entries, n = " +
                                                  std::to_string(rep.dim()));
  }
  if (steps < 0 && !doc.group.invertible()) {
    throw Error(ErrorCode::NegativeTimeForSemigroup, "negative steps on the semigroup N");
  }
  const Matrix step = steps < 0 ? rep.rho(-1) : rep.generator();
  const bool cyclic = doc.group.kind == TimeGroup::Kind::Cyclic;
  const auto T = static_cast<std::int64_t>(doc.group.period);

  Output out;
  out.json["system"] = system_json(doc, doc.seed);
  out.text += system_text(doc, doc.seed);
  Json rows = Json::array();
  Vector x = x0;
  const std::int64_t dir = steps < 0 ? -1 : 1;
  for (std::int64_t t = 0;; t += dir) {
    Json row = {{"t", t}, {"x", io::to_json(x)}};
    std::string line = "t = " + std::to_string(t);
    if (cyclic) {
      const std::int64_t r = ((t % T) + T) % T;
      row["t_mod_T"] = r;
      line += " (t mod " + std::to_string(T) + " = " + std::to_string(r) + ")";
    }
    rows.push_back(row);
    out.text += line + ": " + vec_text(x) + "\n";
    if (t == steps) break;
    x = step * x;
  }
  out.json["trajectory"] = rows;
  return out;
}

Output verify(const io::SystemDocument& doc, const Options& opt, const std::optional<std::string>& report_path) {
  const std::uint64_t seed = seed_of(doc, opt);
  const Representation rep(doc.group, doc.matrix);
  const Matrix& a = rep.generator();
  const Field& f = doc.field;
  const std::size_t n = a.rows();
  Output out;
  out.json["system"] = system_json(doc, seed);
  out.text += system_text(doc, seed);
  Json suites = Json::object();
  bool all = true;
  auto record = [&](const std::string& name, const std::string& status, Json detail) {
    detail["status"] = status;
    suites[name] = detail;
    out.text += name + ": " + status;
    if (detail.contains("reason")) out.text += " (" + detail["reason"].get<std::string>() + ")";
    if (detail.contains("counterexample")) out.text += " " + io::canonical(detail["counterexample"]);
    out.text += "\n";
    if (status == "fail") all = false;
  };

  {
    const auto r = check_homomorphism(rep, opt.trials, seed);
    Json d = {{"trials", r.trials}};
    if (r.counterexample) d["counterexample"] = {{"t1", r.counterexample->first}, {"t2", r.counterexample->second}};
    record("homomorphism", r.passed ? "pass" : "fail", d);
  }
  {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(0, 6);
    auto random_poly = [&] {
      std::vector<Element> c(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& e : c) e = f.random(rng);
      return Polynomial(f, std::move(c));
    };
    std::optional<Json> bad;
    std::size_t trials = 0;
    for (; trials < opt.trials && !bad; ++trials) {
      const Polynomial p = random_poly(), g = random_poly();
      Vector v(n);
      for (auto& e : v) e = f.random(rng);
      const bool sum = rep.poly_action(p + g, v) == rep.poly_action(p, v) + rep.poly_action(g, v);
      const bool prod = rep.poly_action(p * g, v) == rep.poly_action(p, rep.poly_action(g, v));
      if (!sum || !prod) bad = Json{{"f", io::to_json(p)}, {"g", io::to_json(g)}, {"v", io::to_json(v)}};
    }
    Json d = {{"trials", trials}};
    if (bad) d["counterexample"] = *bad;
    record("algebra_homomorphism", bad ? "fail" : "pass", d);
  }

  const auto comps = primary_decomposition(a, seed);
  {
    Matrix sum(f, n, n);
    std::optional<Json> bad;
    for (std::size_t i = 0; i < comps.size() && !bad; ++i) {
      const Matrix& p = comps[i].projector;
      sum = sum + p;
      if (!(p * p == p)) bad = Json{{"idempotent", i}};
      else if (!(p * a == a * p)) bad = Json{{"commutes", i}};
      for (std::size_t j = 0; j < comps.size() && !bad; ++j) {
        if (j != i && !(p * comps[j].projector).is_zero()) bad = Json{{"orthogonal", {i, j}}};
      }
    }
    if (!bad && !sum.is_identity()) bad = Json{{"sum", "not the identity"}};
    Json d = {{"components", comps.size()}};
    if (bad) d["counterexample"] = *bad;
    record("projectors", bad ? "fail" : "pass", d);
  }
  {
    std::vector<Vector> all_basis;
    std::optional<Json> bad;
    for (std::size_t i = 0; i < comps.size() && !bad; ++i) {
      const Matrix basis = Matrix::from_columns(f, n, comps[i].basis);
      for (const auto& v : comps[i].basis) {
        if (!solve(basis, a * v)) {
          bad = Json{{"component", i}, {"vector", io::to_json(v)}};
          break;
        }
      }
      all_basis.insert(all_basis.end(), comps[i].basis.begin(), comps[i].basis.end());
    }
    if (!bad && (all_basis.size() != n || rank(Matrix::from_columns(f, n, all_basis)) != n)) {
      bad = Json{{"dimension_sum", all_basis.size()}};
    }
    Json d = {{"dimension", n}};
    if (bad) d["counterexample"] = *bad;
    record("direct_sum", bad ? "fail" : "pass", d);
  }
  {
    const auto dec = invariant_factors(a, seed);
    std::optional<Json> bad;
    Polynomial product = Polynomial::constant(f.one());
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
      product *= dec.factors[i];
      if (i + 1 < dec.factors.size() && !(dec.factors[i + 1] % dec.factors[i]).is_zero()) {
        bad = Json{{"chain", {io::to_json(dec.factors[i]), io::to_json(dec.factors[i + 1])}}};
      }
    }
    if (!bad && !(product == characteristic_polynomial(a))) bad = Json{{"product", io::to_json(product)}};
    if (!bad && !(dec.factors.back() == minimal_polynomial(a))) bad = Json{{"largest", io::to_json(dec.factors.back())}};
    if (!bad && !(a * dec.basis_change == dec.basis_change * dec.canonical_form)) bad = Json{{"similarity", "AP != PC"}};
    Json d = {{"factors", dec.factors.size()}};
    if (!bad && f.is_finite() && invertible(a)) {
      const std::uint64_t T = order_of_matrix(a, seed);
      const auto report = verify_period_divisibility(dec, T, seed);
      d["T"] = T;
      if (!report.passed) bad = Json{{"period", T}};
    }
    if (bad) d["counterexample"] = *bad;
    record("divisibility_chain", bad ? "fail" : "pass", d);
  }
  {
    const std::uint64_t limit = std::min(opt.max_states, kHardMaxStates);
    const std::uint64_t states = f.is_finite() ? state_count(a).value_or(limit + 1) : 0;
    if (!f.is_finite() || !invertible(a)) {
      record("census_equivalence", "skipped", {{"reason", f.is_finite() ? "SingularMatrix" : "RationalFieldUnsupported"}});
    } else if (states > limit) {
      record("census_equivalence", "skipped", {{"reason", "StateSpaceTooLarge"}});
    } else {
      const OrbitCensus an = orbit_census_analytic(a, seed);
      const OrbitCensus en = orbit_census_enumerate(a, {opt.max_states, opt.workers});
      Json d = {{"states", states}};
      if (!(an == en)) d["counterexample"] = {{"analytic", io::to_json(an)}, {"enumerated", io::to_json(en)}};
      record("census_equivalence", an == en ? "pass" : "fail", d);
    }
  }
  if (report_path) {
    std::ifstream in(*report_path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    Json d = {{"report", *report_path}};
    const Json fresh = analyze(doc, opt).json;
    if (!in) {
      d["counterexample"] = {{"path", "/"}, {"reason", "cannot read report"}};
    } else {
      try {
        const Json stored = Json::parse(ss.str());
        const std::string diff = first_difference(stored, fresh, "");
        if (!diff.empty()) d["counterexample"] = {{"path", diff}};
      } catch (const Json::parse_error&) {
        d["counterexample"] = {{"path", "/"}, {"reason", "report is not valid JSON"}};
      }
    }
    record("regression", d.contains("counterexample") ? "fail" : "pass", d);
  }

  out.json["suites"] = suites;
  out.json["passed"] = all;
  out.text += all ? "all suites passed\n" : "FAILED\n";
  out.status = all ? 0 : 1;
  return out;
}

int exit_code(ErrorCode code) {
  if (is_guard_violation(code)) return 3;
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidField:
    case ErrorCode::UnsupportedGroup:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::FieldMismatch:
      return 2;
    case ErrorCode::SingularMatrix:
    case ErrorCode::NegativeTimeForSemigroup:
    case ErrorCode::NotPeriodic:
    case ErrorCode::RationalFieldUnsupported:
    case ErrorCode::InfiniteOrder:
    case ErrorCode::CharacteristicTwo:
    case ErrorCode::WrongTimeGroup:
      return 4;
    default:
      return 1;
  }
}

}  // namespace sysrep::cli
