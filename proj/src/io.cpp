#include "sysrep/io.hpp"

#include <regex>

namespace sysrep::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

void require_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(where + "." + key, "unknown member");
  }
}

std::uint64_t parse_unsigned(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v >= 0) return static_cast<std::uint64_t>(v);
  }
  fail(where, "expected a non-negative integer");
}

mpz_class parse_integer(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    static const std::regex integer(R"(-?[0-9]+)");
    const auto& s = j.get_ref<const std::string&>();
    if (std::regex_match(s, integer)) return mpz_class(s);
  }
  if (j.is_number_float()) fail(where, "floating-point values are not exact; write integers or \"a/b\" strings");
  fail(where, "expected an integer");
}

}  // namespace

Field parse_field(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) fail(where, "expected an object with a \"kind\"");
  const auto& kind = j["kind"].get_ref<const std::string&>();
  if (kind == "rational") {
    require_keys(j, where, {"kind"});
    return Field::rational();
  }
  if (kind != "prime" && kind != "extension") fail(where + ".kind", "unknown field kind \"" + kind + "\"");
  if (!j.contains("p")) fail(where + ".p", "missing");
  const std::uint64_t p = parse_unsigned(j["p"], where + ".p");
  if (p >= (1ULL << 31)) fail(where + ".p", "p must be below 2^31");
  if (!is_prime_u32(static_cast<std::uint32_t>(p))) fail(where + ".p", std::to_string(p) + " is not prime");
  if (kind == "prime") {
    require_keys(j, where, {"kind", "p"});
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  require_keys(j, where, {"kind", "p", "modulus"});
  if (!j.contains("modulus") || !j["modulus"].is_array()) fail(where + ".modulus", "expected a coefficient array");
  std::vector<std::uint32_t> modulus;
  for (std::size_t i = 0; i < j["modulus"].size(); ++i) {
    const std::uint64_t c = parse_unsigned(j["modulus"][i], where + ".modulus[" + std::to_string(i) + "]");
    if (c >= p) fail(where + ".modulus[" + std::to_string(i) + "]", "coefficient must be below p");
    modulus.push_back(static_cast<std::uint32_t>(c));
  }
  try {
    return Field::extension(static_cast<std::uint32_t>(p), modulus);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidField) fail(where + ".modulus", e.what());
    throw;
  }
}

Json to_json(const Field& f) {
  switch (f.kind()) {
    case FieldKind::Prime: return Json{{"kind", "prime"}, {"p", f.characteristic()}};
    case FieldKind::Extension: return Json{{"kind", "extension"}, {"p", f.characteristic()}, {"modulus", f.modulus()}};
    case FieldKind::Rational: return Json{{"kind", "rational"}};
  }
  return {};
}

Element parse_element(const Json& j, const Field& f, const std::string& where) {
  if (f.kind() == FieldKind::Extension && j.is_array()) {
    if (j.size() > f.degree()) fail(where, "more coefficients than the extension degree");
    std::vector<std::uint32_t> c;
    for (std::size_t i = 0; i < j.size(); ++i) {
      mpz_class v = parse_integer(j[i], where + "[" + std::to_string(i) + "]");
      c.push_back(f.prime_subfield().from_mpz(v).residue());
    }
    return f.from_coefficients(c);
  }
  if (f.kind() == FieldKind::Rational && j.is_string()) {
    static const std::regex fraction(R"((-?[0-9]+)(/([0-9]+))?)");
    std::smatch m;
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, m, fraction)) fail(where, "expected \"a\" or \"a/b\"");
    mpz_class num(m[1].str());
    mpz_class den(m[3].matched ? m[3].str() : "1");
    if (den == 0) fail(where, "zero denominator");
    return f.from_rational(mpq_class(num, den));
  }
  return f.from_mpz(parse_integer(j, where));
}

Json to_json(const Element& e) {
  switch (e.field().kind()) {
    case FieldKind::Prime: return e.residue();
    case FieldKind::Extension: return e.coefficients();
    case FieldKind::Rational: return e.to_string();
  }
  return {};
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

Json to_json(const Polynomial& p) { return to_json(Vector(p.coefficients().begin(), p.coefficients().end())); }

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Vector parse_vector(const Json& j, const Field& f, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_element(j[i], f, where + "[" + std::to_string(i) + "]"));
  return v;
}

TimeGroup parse_group(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) fail(where, "expected an object with a \"kind\"");
  const auto& kind = j["kind"].get_ref<const std::string&>();
  if (kind == "integers") {
    require_keys(j, where, {"kind"});
    return TimeGroup::integers();
  }
  if (kind == "naturals") {
    require_keys(j, where, {"kind"});
    return TimeGroup::naturals();
  }
  if (kind == "cyclic") {
    require_keys(j, where, {"kind", "T"});
    if (!j.contains("T")) fail(where + ".T", "missing");
    const std::uint64_t T = parse_unsigned(j["T"], where + ".T");
    if (T < 1 || T >= (1ULL << 63)) fail(where + ".T", "T must be in [1, 2^63)");
    return TimeGroup::cyclic(T);
  }
  throw Error(ErrorCode::UnsupportedGroup, where + ".kind: \"" + kind + "\" is not one of integers, naturals, cyclic");
}

Json to_json(const TimeGroup& g) {
  switch (g.kind) {
    case TimeGroup::Kind::Integers: return Json{{"kind", "integers"}};
    case TimeGroup::Kind::Naturals: return Json{{"kind", "naturals"}};
    case TimeGroup::Kind::Cyclic: return Json{{"kind", "cyclic"}, {"T", g.period}};
  }
  return {};
}

Json to_json(const mpz_class& z) {
  if (sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64) {
    return std::stoull(z.get_str());
  }
  return z.get_str();
}

Json to_json(const OrbitCensus& c) {
  Json cycles = Json::object();
  for (const auto& [t, n] : c.cycles) cycles[std::to_string(t)] = to_json(n);
  Json fixed = Json::object();
  for (const auto& [d, n] : c.fixed_points) fixed[std::to_string(d)] = to_json(n);
  return Json{{"states", to_json(c.states)}, {"T", c.period}, {"cycles", cycles}, {"fixed_points", fixed}};
}

SystemDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                           ": malformed JSON");
  }
  require_keys(j, "document", {"field", "group", "matrix", "seed"});
  if (!j.contains("field")) fail("field", "missing");
  if (!j.contains("matrix")) fail("matrix", "missing");

  SystemDocument doc;
  doc.field = parse_field(j["field"]);
  doc.group = j.contains("group") ? parse_group(j["group"]) : TimeGroup::integers();
  if (j.contains("seed")) doc.seed = parse_unsigned(j["seed"], "seed");

  const Json& rows = j["matrix"];
  if (!rows.is_array() || rows.empty()) fail("matrix", "expected a non-empty array of rows");
  const std::size_t n = rows.size();
  if (n > kMaxDimension) {
    throw Error(ErrorCode::DimensionTooLarge, "matrix: n = " + std::to_string(n) + " exceeds " +
                                                  std::to_string(kMaxDimension));
  }
  std::vector<Element> entries;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "matrix[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) fail(where, "expected a row array");
    if (rows[i].size() != n) {
      fail(where, "row has " + std::to_string(rows[i].size()) + " entries; a square matrix needs " + std::to_string(n));
    }
    for (std::size_t k = 0; k < n; ++k) {
      entries.push_back(parse_element(rows[i][k], doc.field, where + "[" + std::to_string(k) + "]"));
    }
  }
  doc.matrix = Matrix(doc.field, n, n, std::move(entries));
  return doc;
}

Json to_json(const SystemDocument& doc) {
  return Json{{"field", to_json(doc.field)},
              {"group", to_json(doc.group)},
              {"matrix", to_json(doc.matrix)},
              {"seed", doc.seed}};
}

std::string canonical(const Json& j) { return j.dump(); }

}  // namespace sysrep::io
