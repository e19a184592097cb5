#include "json_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

namespace biharm::io {

namespace {

double number_from(const Json& j, const char* what) {
  if (!j.is_number()) throw SchemaError(std::string(what) + ": expected a number");
  return j.get<double>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Sign sign_from(const Json& j) {
  if (j == "+") return Sign::Plus;
  if (j == "-") return Sign::Minus;
  throw SchemaError("sign must be \"+\" or \"-\"");
}

void dump_to(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump_to(out, value, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays (coordinates, ranges) stay on one line.
      bool flat = j.size() <= 6;
      for (const auto& v : j) flat = flat && (v.is_number() || v.is_string() || v.is_boolean());
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        dump_to(out, v, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return {buf, res.ptr};
}

std::string dump(const Json& j, int indent) {
  std::string out;
  dump_to(out, j, indent, 0);
  return out;
}

Complex complex_from(const Json& j, const char* what) {
  if (j.is_number()) return checked({j.get<double>(), 0.0});
  if (!j.is_array() || j.size() != 2) throw SchemaError(std::string(what) + ": expected [re, im]");
  try {
    return checked({number_from(j[0], what), number_from(j[1], what)});
  } catch (const Error&) {
    throw SchemaError(std::string(what) + ": non-finite value");
  }
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

AlgebraElement element_from(const Json& j) {
  return {complex_from(field(j, "e"), "e"), complex_from(field(j, "rho"), "rho")};
}

Json to_json(const AlgebraElement& a) {
  Json j = Json::object();
  j["e"] = to_json(a.e());
  j["rho"] = to_json(a.rho());
  return j;
}

BiharmonicBasis basis_from(const Json& j) {
  if (!j.is_object()) throw SchemaError("basis: expected an object");
  if (j.contains("preset")) {
    const Json& name = j.at("preset");
    if (!name.is_string()) throw SchemaError("preset: expected a string");
    if (name == "e_identity") {
      const Sign s = j.contains("sign") ? sign_from(j.at("sign")) : Sign::Plus;
      return presets::e_identity(complex_from(field(j, "beta2"), "beta2"), s);
    }
    return presets::by_name(name.get<std::string>());
  }
  return BiharmonicBasis::make(complex_from(field(j, "alpha1"), "alpha1"),
                               complex_from(field(j, "beta1"), "beta1"),
                               complex_from(field(j, "beta2"), "beta2"), sign_from(field(j, "sign")));
}

Json to_json(const BiharmonicBasis& b) {
  Json j = Json::object();
  j["alpha1"] = to_json(b.alpha1());
  j["beta1"] = to_json(b.beta1());
  j["beta2"] = to_json(b.beta2());
  j["sign"] = b.sign() == Sign::Plus ? "+" : "-";
  return j;
}

HoloPoly poly_from(const Json& j) {
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) throw SchemaError("coeffs: expected an array");
  if (c.size() > static_cast<std::size_t>(kMaxDegree) + 1) throw SchemaError("coeffs: degree exceeds cap");
  std::vector<Complex> coeffs;
  for (const auto& v : c) coeffs.push_back(complex_from(v, "coeffs"));
  return HoloPoly(std::move(coeffs));
}

Json to_json(const HoloPoly& p) {
  Json c = Json::array();
  for (Complex z : p.coeffs()) c.push_back(to_json(z));
  Json j = Json::object();
  j["coeffs"] = std::move(c);
  return j;
}

Json to_json(const ComplexBiPoly& p) {
  Json arr = Json::array();
  for (const auto& t : p.terms()) {
    Json term = Json::object();
    term["i"] = t.i;
    term["j"] = t.j;
    term["c"] = to_json(t.c);
    arr.push_back(std::move(term));
  }
  return arr;
}

Json to_json(const RealBiPoly& p) { return to_json(ComplexBiPoly(p)); }

MonogenicFn monogenic_from(const Json& j) {
  const HoloPoly f = j.contains("F") ? poly_from(j.at("F")) : HoloPoly();
  const HoloPoly f0 = j.contains("F0") ? poly_from(j.at("F0")) : HoloPoly();
  return {basis_from(field(j, "basis")), f, f0};
}

Json to_json(const MonogenicFn& m) {
  Json j = Json::object();
  j["basis"] = to_json(m.basis());
  j["F"] = to_json(m.f());
  j["F0"] = to_json(m.f0());
  return j;
}

Phi0Params phi0_from(const Json& j) {
  if (!j.is_object()) throw SchemaError("phi0: expected an object");
  const auto get = [&](const char* k) { return j.contains(k) ? number_from(j.at(k), k) : 0.0; };
  const Phi0Params p{get("a"), get("b"), get("c"), get("d")};
  for (double v : {p.a, p.b, p.c, p.d})
    if (!std::isfinite(v)) throw SchemaError("phi0: non-finite value");
  return p;
}

Json to_json(const Phi0Params& p) {
  Json j = Json::object();
  j["a"] = p.a;
  j["b"] = p.b;
  j["c"] = p.c;
  j["d"] = p.d;
  return j;
}

GoursatPair goursat_from(const Json& j) {
  if (!j.is_object()) throw SchemaError("goursat job: expected an object");
  return {j.contains("psi") ? poly_from(j.at("psi")) : HoloPoly(),
          j.contains("phi") ? poly_from(j.at("phi")) : HoloPoly()};
}

GridSpec grid_from(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  ss.imbue(std::locale::classic());
  std::string item;
  while (std::getline(ss, item, ',')) {
    double d = 0.0;
    const char* begin = item.data();
    while (*begin == ' ') ++begin;
    const auto res = std::from_chars(begin, item.data() + item.size(), d);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw SchemaError("grid: cannot parse '" + item + "'");
    }
    v.push_back(d);
  }
  if (v.size() != 5) throw SchemaError("grid: expected x0,y0,x1,y1,n");
  if (v[4] != std::floor(v[4])) throw SchemaError("grid: n must be an integer");
  return {v[0], v[1], v[2], v[3], static_cast<int>(v[4])};
}

GridSpec grid_from(const Json& j) {
  if (j.is_string()) return grid_from(j.get<std::string>());
  if (!j.is_array() || j.size() != 5) throw SchemaError("grid: expected [x0, y0, x1, y1, n]");
  if (!j[4].is_number_integer()) throw SchemaError("grid: n must be an integer");
  return {number_from(j[0], "grid"), number_from(j[1], "grid"), number_from(j[2], "grid"),
          number_from(j[3], "grid"), j[4].get<int>()};
}

}  // namespace biharm::io
