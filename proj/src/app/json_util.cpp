#include "json_util.hpp"

#include <cstdint>
#include <limits>

namespace latmin::jsonio {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(Status::ParseError, msg); }

bool decimal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

bool scalar_array(const Json& j) {
  if (!j.is_array() || j.empty()) return j.is_array();
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void render_into(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      render_into(it.value(), out, indent + 1);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    if (scalar_array(j)) {
      out += "[";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ", ";
        out += j[k].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) out += ",\n";
      out += inner;
      render_into(j[k], out, indent + 1);
    }
    out += "\n" + pad + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

Json put_integer(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer get_integer(const Json& j, const char* what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (decimal(s)) return Integer(s);
  }
  if (j.is_number_float()) fail(std::string(what) + ": expected an integer (quote integers beyond 64 bits)");
  fail(std::string(what) + ": expected an integer");
}

Json put_rational(const Rational& q) { return Json(q.get_str()); }

Rational get_rational(const Json& j, const char* what) {
  if (!j.is_string()) return Rational(get_integer(j, what));
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!decimal(s)) fail(std::string(what) + ": expected a rational");
    return Rational(Integer(s));
  }
  const auto num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!decimal(num) || !decimal(den) || den[0] == '-' || den == "0") fail(std::string(what) + ": expected a rational");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

Json put_vector(const IntVector& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(put_integer(z));
  return a;
}

IntVector get_vector(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected an array");
  IntVector v;
  for (const auto& e : j) v.push_back(get_integer(e, what));
  return v;
}

Json put_matrix(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(put_vector(m.row_vector(i)));
  return a;
}

IntMatrix get_matrix(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(get_vector(r, what));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) fail(std::string(what) + ": ragged rows");
  return IntMatrix::from_rows(rows);
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) fail("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t get_size(const Json& j, const char* what) {
  const Integer z = get_integer(j, what);
  if (sgn(z) < 0 || !z.fits_ulong_p()) fail(std::string(what) + ": expected a nonnegative integer");
  return z.get_ui();
}

bool get_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) fail(std::string(what) + ": expected true or false");
  return j.get<bool>();
}

std::string get_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

std::string render(const Json& j) {
  std::string out;
  render_into(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace latmin::jsonio
