#pragma once

// Job-file schemas and deterministic output for the biharm tool.
//
//   element   {"e":[re,im],"rho":[re,im]}
//   basis     {"alpha1":[re,im],"beta1":[re,im],"beta2":[re,im],"sign":"+"|"-"}
//             {"preset":"new_basis"|"gp_basis"}
//             {"preset":"e_identity","beta2":[re,im],"sign":"+"|"-"}
//   poly      {"coeffs":[[re,im],...]}            ascending degree
//   bipoly    [{"i":int,"j":int,"c":[re,im]},...]
//   monogenic {"basis":<basis>,"F":<poly>,"F0":<poly>}
//   goursat   {"psi":<poly>,"phi":<poly>,"phi0":{"a":r,"b":r,"c":r,"d":r}}

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "biharm/basis.hpp"
#include "biharm/goursat.hpp"
#include "biharm/monogenic.hpp"
#include "biharm/numeric.hpp"
#include "biharm/sympoly.hpp"

namespace biharm::io {

using Json = nlohmann::ordered_json;

/// Malformed or out-of-schema job content.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Complex complex_from(const Json& j, const char* what);
Json to_json(Complex z);

AlgebraElement element_from(const Json& j);
Json to_json(const AlgebraElement& a);

BiharmonicBasis basis_from(const Json& j);
Json to_json(const BiharmonicBasis& b);

HoloPoly poly_from(const Json& j);
Json to_json(const HoloPoly& p);

Json to_json(const ComplexBiPoly& p);
Json to_json(const RealBiPoly& p);

MonogenicFn monogenic_from(const Json& j);
Json to_json(const MonogenicFn& m);

Phi0Params phi0_from(const Json& j);
Json to_json(const Phi0Params& p);
GoursatPair goursat_from(const Json& j);

/// "x0,y0,x1,y1,n" or [x0, y0, x1, y1, n].
GridSpec grid_from(const std::string& text);
GridSpec grid_from(const Json& j);

/// Deterministic serialization: every float printed with 17 significant
/// digits, locale-independent, keys in insertion order.
std::string dump(const Json& j, int indent = 2);
std::string format_double(double v);

}  // namespace biharm::io
