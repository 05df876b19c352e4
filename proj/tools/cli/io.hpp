#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rieszkit/lattice.hpp"
#include "rieszkit/measure.hpp"
#include "rieszkit/order.hpp"
#include "rieszkit/transfer.hpp"
#include "rieszkit/trig_poly.hpp"

namespace rieszkit::io {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formats (rationals are "num/den" strings, integers are JSON numbers):
//   lattice      {"dim": d, "basis": [[int...], ...]}
//   coset        {"offset": [int...], "lattice": <lattice>}
//   order        {"dim": d, "functionals": [["p/q", ...], ...]}
//                or {"dim": d, "predicate": {"weights": ["p/q", ...], "min": "p/q"}}
//   measure      {"dim": d, "atoms": [{"lattice": <lattice>, "offset": [int...],
//                                      "phase": ["p/q"...], "coeff": [re, im]}, ...]}
//   polynomial   {"dim": d, "coeffs": [{"freq": [int...], "c": [re, im]}, ...]}
//   homomorphism {"matrix": [[int...], ...]}  (d2 rows of length d1)
// Unknown keys are rejected.

Json to_json(const Lattice& l);
Json to_json(const LatticeCoset& c);
Json to_json(const OrderChain& c);
Json to_json(const Measure& m);
Json to_json(const TrigPoly& f);
Json to_json(const Homomorphism& h);
Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
Json to_json(Complex z);

Lattice lattice_from_json(const Json& j);
LatticeCoset coset_from_json(const Json& j);
Measure measure_from_json(const Json& j);
TrigPoly poly_from_json(const Json& j);
Homomorphism hom_from_json(const Json& j);

// P = {chi : w . chi >= min}. Only meaningful for axiom validation.
struct ThresholdPredicate {
  RatVec weights;
  Rational min;
  bool operator()(const IntVec& chi) const { return dot(chi, weights) >= min; }
};

struct OrderSpec {
  std::size_t dim = 0;
  std::optional<OrderChain> chain;
  std::optional<ThresholdPredicate> predicate;
};

OrderSpec order_from_json(const Json& j);

Json read_file(const std::filesystem::path& path);
// Pretty-printed with a trailing newline; byte-identical for identical values.
void write_file(const std::filesystem::path& path, const Json& j);
// A single object, the elements of a top-level array, or every *.json file of
// a directory in name order.
std::vector<Json> read_items(const std::filesystem::path& path);

}  // namespace rieszkit::io
