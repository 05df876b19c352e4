#include "cli/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <limits>

namespace rieszkit::io {

namespace {

void expect_object(const Json& j, const char* what, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    const auto match = [&](const char* k) { return key == k; };
    if (std::none_of(required.begin(), required.end(), match) &&
        std::none_of(optional.begin(), optional.end(), match)) {
      throw ParseError(std::string(what) + ": unknown key \"" + key + "\"");
    }
  }
  for (const char* k : required) {
    if (!j.contains(k)) throw ParseError(std::string(what) + ": missing key \"" + k + "\"");
  }
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  return j;
}

std::size_t dim_of(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    throw ParseError(std::string(what) + ": dim must be a positive integer");
  }
  return j.get<std::size_t>();
}

IntVec int_vector(const Json& j, std::size_t dim, const char* what) {
  array_of(j, what);
  if (j.size() != dim) throw ParseError(std::string(what) + ": expected " + std::to_string(dim) + " entries");
  IntVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + ": expected integers");
    v.emplace_back(x.get<std::int64_t>());
  }
  return v;
}

Rational rational(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": rationals are \"num/den\" strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

RatVec rational_vector(const Json& j, std::size_t dim, const char* what) {
  array_of(j, what);
  if (j.size() != dim) throw ParseError(std::string(what) + ": expected " + std::to_string(dim) + " entries");
  RatVec v;
  for (const auto& x : j) v.push_back(rational(x, what));
  return v;
}

Complex complex(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(std::string(what) + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

template <class F>
auto rethrow_invalid(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Lattice& l) {
  Json basis = Json::array();
  for (const auto& b : l.basis()) basis.push_back(to_json(b));
  return {{"dim", l.dim()}, {"basis", basis}};
}

Json to_json(const LatticeCoset& c) {
  return {{"offset", to_json(c.offset)}, {"lattice", to_json(c.lattice)}};
}

Json to_json(const OrderChain& c) {
  Json fs = Json::array();
  for (const auto& s : c.stages()) fs.push_back(to_json(s.functional.weights()));
  return {{"dim", c.dim()}, {"functionals", fs}};
}

Json to_json(const Measure& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms()) {
    atoms.push_back({{"lattice", to_json(a.lattice)},
                     {"offset", to_json(a.offset)},
                     {"phase", to_json(a.phase)},
                     {"coeff", to_json(a.coeff)}});
  }
  return {{"dim", m.dim()}, {"atoms", atoms}};
}

Json to_json(const TrigPoly& f) {
  Json coeffs = Json::array();
  for (const auto& [chi, c] : f.coeffs()) coeffs.push_back({{"freq", chi}, {"c", to_json(c)}});
  return {{"dim", f.dim()}, {"coeffs", coeffs}};
}

Json to_json(const Homomorphism& h) {
  Json rows = Json::array();
  for (const auto& r : h.matrix()) rows.push_back(to_json(r));
  return {{"matrix", rows}};
}

Lattice lattice_from_json(const Json& j) {
  expect_object(j, "lattice", {"dim", "basis"});
  const std::size_t d = dim_of(j["dim"], "lattice");
  IntMatrix rows;
  for (const auto& r : array_of(j["basis"], "lattice.basis")) rows.push_back(int_vector(r, d, "lattice.basis"));
  return rethrow_invalid([&] { return hnf(d, rows); });
}

LatticeCoset coset_from_json(const Json& j) {
  expect_object(j, "coset", {"offset", "lattice"});
  Lattice l = lattice_from_json(j["lattice"]);
  return {int_vector(j["offset"], l.dim(), "coset.offset"), std::move(l)};
}

OrderSpec order_from_json(const Json& j) {
  expect_object(j, "order", {"dim"}, {"functionals", "predicate"});
  OrderSpec spec;
  spec.dim = dim_of(j["dim"], "order");
  if (j.contains("functionals") == j.contains("predicate")) {
    throw ParseError("order: exactly one of \"functionals\" and \"predicate\" is required");
  }
  if (j.contains("predicate")) {
    const Json& p = j["predicate"];
    expect_object(p, "order.predicate", {"weights", "min"});
    spec.predicate = ThresholdPredicate{rational_vector(p["weights"], spec.dim, "order.predicate.weights"),
                                        rational(p["min"], "order.predicate.min")};
    return spec;
  }
  std::vector<LinearFunctional> fs;
  for (const auto& w : array_of(j["functionals"], "order.functionals")) {
    fs.emplace_back(rational_vector(w, spec.dim, "order.functionals"));
  }
  spec.chain = rethrow_invalid([&] { return order_from_functionals(spec.dim, fs); });
  return spec;
}

Measure measure_from_json(const Json& j) {
  expect_object(j, "measure", {"dim", "atoms"});
  const std::size_t d = dim_of(j["dim"], "measure");
  std::vector<SpectralAtom> raw;
  for (const auto& a : array_of(j["atoms"], "measure.atoms")) {
    expect_object(a, "atom", {"lattice", "offset", "phase", "coeff"});
    Lattice l = lattice_from_json(a["lattice"]);
    if (l.dim() != d) throw ParseError("atom: lattice dimension differs from the measure's");
    raw.push_back({std::move(l), int_vector(a["offset"], d, "atom.offset"),
                   rational_vector(a["phase"], d, "atom.phase"), complex(a["coeff"], "atom.coeff")});
  }
  return rethrow_invalid([&] { return canon(d, std::move(raw)); });
}

TrigPoly poly_from_json(const Json& j) {
  expect_object(j, "polynomial", {"dim", "coeffs"});
  const std::size_t d = dim_of(j["dim"], "polynomial");
  TrigPoly f(d);
  for (const auto& t : array_of(j["coeffs"], "polynomial.coeffs")) {
    expect_object(t, "term", {"freq", "c"});
    f.add(to_int64(int_vector(t["freq"], d, "term.freq")), complex(t["c"], "term.c"));
  }
  return f;
}

Homomorphism hom_from_json(const Json& j) {
  expect_object(j, "homomorphism", {"matrix"});
  const Json& m = array_of(j["matrix"], "homomorphism.matrix");
  if (m.empty() || !m[0].is_array() || m[0].empty()) throw ParseError("homomorphism: empty matrix");
  const std::size_t d1 = m[0].size();
  IntMatrix rows;
  for (const auto& r : m) rows.push_back(int_vector(r, d1, "homomorphism.matrix"));
  return rethrow_invalid([&] { return Homomorphism(rows, d1); });
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::vector<Json> read_items(const std::filesystem::path& path) {
  std::vector<Json> items;
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(path)) {
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) items.push_back(read_file(f));
    return items;
  }
  Json j = read_file(path);
  if (j.is_array()) {
    for (auto& x : j) items.push_back(std::move(x));
  } else {
    items.push_back(std::move(j));
  }
  return items;
}

}  // namespace rieszkit::io
