#pragma once

#include <json.hpp>

#include <string>

#include "latmin/exact.hpp"

namespace latmin::jsonio {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are plain numbers, larger ones decimal strings.
Json put_integer(const Integer& z);
Integer get_integer(const Json& j, const char* what);

// Rationals are always strings, "p" or "p/q".
Json put_rational(const Rational& q);
Rational get_rational(const Json& j, const char* what);

Json put_vector(const IntVector& v);
IntVector get_vector(const Json& j, const char* what);
Json put_matrix(const IntMatrix& m);
IntMatrix get_matrix(const Json& j, const char* what);

const Json& field(const Json& obj, const char* key);
std::size_t get_size(const Json& j, const char* what);
bool get_bool(const Json& j, const char* what);
std::string get_string(const Json& j, const char* what);

/// Parse, mapping library exceptions to ParseError.
Json parse(const std::string& text);

/// Two-space indented layout; arrays holding only scalars stay on one line.
/// Ends with a newline.
std::string render(const Json& j);

}  // namespace latmin::jsonio
