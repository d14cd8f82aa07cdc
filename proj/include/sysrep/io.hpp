#pragma once

// JSON encodings of fields, elements, polynomials, matrices and system
// documents. Output uses nlohmann::json's default std::map objects, so keys
// come out sorted and dump() without indentation is the canonical form.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sysrep/dynamics.hpp"
#include "sysrep/representation.hpp"

namespace sysrep::io {

using Json = nlohmann::json;

/// {"kind":"prime","p":5}, {"kind":"extension","p":2,"modulus":[1,1,1]}, {"kind":"rational"}.
Field parse_field(const Json& j, const std::string& where = "field");
Json to_json(const Field& f);

/// Integers (or integer strings) for any field, "a/b" strings over Q, and
/// low-degree-first coefficient arrays over extensions.
Element parse_element(const Json& j, const Field& f, const std::string& where);
/// Prime elements as numbers, extension elements as coefficient arrays,
/// rationals as "num/den" strings.
Json to_json(const Element& e);

Json to_json(const Vector& v);
Json to_json(const Polynomial& p);
Json to_json(const Matrix& m);
Vector parse_vector(const Json& j, const Field& f, const std::string& where);

TimeGroup parse_group(const Json& j, const std::string& where = "group");
Json to_json(const TimeGroup& g);

/// Integer as a JSON number when it fits in 64 bits, otherwise a decimal string.
Json to_json(const mpz_class& z);
Json to_json(const OrbitCensus& c);

struct SystemDocument {
  Field field;
  TimeGroup group;
  Matrix matrix;
  std::uint64_t seed = 0;
};

/// Parses and validates a document; ParseError messages carry the line and
/// column of syntax errors or the path of the offending member.
SystemDocument parse_document(const std::string& text);
Json to_json(const SystemDocument& doc);

/// Canonical text: sorted keys, no insignificant whitespace.
std::string canonical(const Json& j);

}  // namespace sysrep::io
