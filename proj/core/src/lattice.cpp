#include "rieszkit/lattice.hpp"

#include <algorithm>
#include <utility>

namespace rieszkit {
namespace {

struct ExtendedGcd {
  Integer g, x, y;  // g = x*a + y*b, g >= 0
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

void axpy_row(IntVec& dst, const Integer& factor, const IntVec& src) {
  for (std::size_t k = 0; k < dst.size(); ++k) {
    if (src[k] != 0) dst[k] += factor * src[k];
  }
}

// (row_p, row_q) <- (x row_p + y row_q, u row_p + v row_q)
void combine_rows(IntVec& p, IntVec& q, const Integer& x, const Integer& y, const Integer& u,
                  const Integer& v) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Integer np = x * p[k] + y * q[k];
    const Integer nq = u * p[k] + v * q[k];
    p[k] = np;
    q[k] = nq;
  }
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVec(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& rows, std::size_t cols) {
  IntMatrix t(cols, IntVec(rows.size(), Integer(0)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = rows[i][j];
  }
  return t;
}

std::strong_ordering compare(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void check_rows(const IntMatrix& rows, std::size_t cols) {
  for (const auto& r : rows) require_same_dim(r.size(), cols, "lattice generator");
}

}  // namespace

HermiteDecomposition hermite_decompose(const IntMatrix& rows, std::size_t cols) {
  check_rows(rows, cols);
  const std::size_t m = rows.size();
  HermiteDecomposition out;
  out.form = rows;
  out.transform = identity(m);
  auto& h = out.form;
  auto& u = out.transform;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (h[i][c] == 0) continue;
      const Integer a = h[r][c];
      const Integer b = h[i][c];
      const auto [g, x, y] = extended_gcd(a, b);
      const Integer ag = a / g;
      const Integer bg = b / g;
      combine_rows(h[r], h[i], x, y, -bg, ag);
      combine_rows(u[r], u[i], x, y, -bg, ag);
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      for (auto& e : h[r]) e = -e;
      for (auto& e : u[r]) e = -e;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(h[i][c], h[r][c]);
      if (q != 0) {
        axpy_row(h[i], -q, h[r]);
        axpy_row(u[i], -q, u[r]);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Integer> smith_divisors(const IntMatrix& rows, std::size_t cols) {
  check_rows(rows, cols);
  IntMatrix a = rows;
  const std::size_t m = a.size();
  std::vector<Integer> divisors;
  for (std::size_t t = 0; t < std::min(m, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = cols;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) return divisors;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool clear = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        const Integer q = a[i][t] / a[t][t];
        if (q != 0) axpy_row(a[i], -q, a[t]);
        if (a[i][t] != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer q = a[t][j] / a[t][t];
        if (q != 0) {
          for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        }
        if (a[t][j] != 0) clear = false;
      }
      if (!clear) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            axpy_row(a[t], Integer(1), a[i]);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    divisors.push_back(abs(a[t][t]));
  }
  return divisors;
}

std::optional<IntVec> solve_left(const IntMatrix& rows, std::size_t cols, const IntVec& target) {
  require_same_dim(target.size(), cols, "solve_left");
  const auto dec = hermite_decompose(rows, cols);
  IntVec rem = target;
  IntVec w(rows.size(), Integer(0));
  for (std::size_t i = 0; i < dec.rank; ++i) {
    const std::size_t p = dec.pivots[i];
    const Integer& pivot = dec.form[i][p];
    if (rem[p] % pivot != 0) return std::nullopt;
    w[i] = rem[p] / pivot;
    if (w[i] != 0) axpy_row(rem, -w[i], dec.form[i]);
  }
  if (!is_zero(rem)) return std::nullopt;
  IntVec z(rows.size(), Integer(0));
  for (std::size_t i = 0; i < dec.rank; ++i) {
    if (w[i] != 0) axpy_row(z, w[i], dec.transform[i]);
  }
  return z;
}

// --- Lattice ---------------------------------------------------------------

Lattice hnf(std::size_t dim, const IntMatrix& rows) {
  if (dim == 0) throw InvalidArgument("lattice dimension must be >= 1");
  const auto dec = hermite_decompose(rows, dim);
  Lattice out;
  out.dim_ = dim;
  out.basis_.assign(dec.form.begin(), dec.form.begin() + static_cast<std::ptrdiff_t>(dec.rank));
  out.pivots_ = dec.pivots;

  const std::size_t r = dec.rank;
  if (r == 0) {
    out.saturated_ = true;
    return out;
  }
  // Column Hermite form B V = [L 0]; saturated iff L is the identity.
  const auto col = hermite_decompose(transpose(out.basis_, dim), r);
  bool unit = col.rank == r;
  for (std::size_t k = 0; k < r && unit; ++k) unit = col.form[k][k] == 1;
  out.saturated_ = unit;
  if (unit) {
    out.section_.assign(col.transform.begin(),
                        col.transform.begin() + static_cast<std::ptrdiff_t>(r));
  }
  return out;
}

Lattice Lattice::zero(std::size_t dim) { return hnf(dim, {}); }

Lattice Lattice::full(std::size_t dim) {
  IntMatrix rows(dim, IntVec(dim, Integer(0)));
  for (std::size_t i = 0; i < dim; ++i) rows[i][i] = 1;
  return hnf(dim, rows);
}

IntVec Lattice::reduce(const IntVec& v) const {
  require_same_dim(v.size(), dim_, "lattice reduce");
  IntVec out = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    const Integer q = floor_div(out[p], basis_[i][p]);
    if (q != 0) axpy_row(out, -q, basis_[i]);
  }
  return out;
}

bool Lattice::contains(const IntVec& v) const { return is_zero(reduce(v)); }

bool Lattice::subset_of(const Lattice& other) const {
  if (dim_ != other.dim_) return false;
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const IntVec& b) { return other.contains(b); });
}

const IntMatrix& Lattice::dual_section() const {
  if (!saturated_) throw InvalidArgument("lattice is not saturated");
  return section_;
}

std::strong_ordering operator<=>(const Lattice& a, const Lattice& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  return compare(a.basis_, b.basis_);
}

bool member(const Lattice& lattice, const IntVec& v) { return lattice.contains(v); }

bool is_saturated(const Lattice& lattice) { return lattice.saturated(); }

namespace {

// Rows of the joint Hermite transform that annihilate [A; B] give A-combinations
// lying in both lattices.
Lattice intersect_impl(const Lattice& a, const Lattice& b) {
  const std::size_t d = a.dim();
  if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(d);
  IntMatrix stacked = a.basis();
  stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
  const auto dec = hermite_decompose(stacked, d);
  IntMatrix gens;
  for (std::size_t j = dec.rank; j < stacked.size(); ++j) {
    IntVec v = zeros(d);
    for (std::size_t i = 0; i < a.rank(); ++i) {
      if (dec.transform[j][i] != 0) axpy_row(v, dec.transform[j][i], a.basis()[i]);
    }
    gens.push_back(std::move(v));
  }
  return hnf(d, gens);
}

}  // namespace

Lattice intersect(const Lattice& a, const Lattice& b) {
  require_same_dim(a.dim(), b.dim(), "intersect");
  return intersect_impl(a, b);
}

Lattice kernel(std::size_t dim, const IntMatrix& rows) {
  check_rows(rows, dim);
  if (rows.empty()) return Lattice::full(dim);
  const auto dec = hermite_decompose(transpose(rows, dim), rows.size());
  IntMatrix gens(dec.transform.begin() + static_cast<std::ptrdiff_t>(dec.rank),
                 dec.transform.end());
  return hnf(dim, gens);
}

Lattice image(const Lattice& lattice, const IntMatrix& matrix, std::size_t out_dim) {
  require_same_dim(matrix.size(), out_dim, "image rows");
  check_rows(matrix, lattice.dim());
  IntMatrix gens;
  for (const auto& b : lattice.basis()) {
    IntVec v(out_dim);
    for (std::size_t i = 0; i < out_dim; ++i) v[i] = dot(matrix[i], b);
    gens.push_back(std::move(v));
  }
  return hnf(out_dim, gens);
}

// --- cosets ----------------------------------------------------------------

LatticeCoset::LatticeCoset(IntVec off, Lattice lat)
    : offset(lat.reduce(off)), lattice(std::move(lat)) {}

bool LatticeCoset::contains(const IntVec& v) const { return lattice.contains(v - offset); }

std::strong_ordering operator<=>(const LatticeCoset& a, const LatticeCoset& b) {
  if (auto c = a.lattice <=> b.lattice; c != 0) return c;
  return compare(a.offset, b.offset);
}

std::optional<LatticeCoset> coset_intersect(const LatticeCoset& a, const LatticeCoset& b) {
  require_same_dim(a.dim(), b.dim(), "coset_intersect");
  const std::size_t d = a.dim();
  IntMatrix stacked = a.lattice.basis();
  stacked.insert(stacked.end(), b.lattice.basis().begin(), b.lattice.basis().end());
  const IntVec delta = b.offset - a.offset;
  const auto z = solve_left(stacked, d, delta);
  if (!z) return std::nullopt;
  IntVec point = a.offset;
  for (std::size_t i = 0; i < a.lattice.rank(); ++i) {
    if ((*z)[i] != 0) axpy_row(point, (*z)[i], a.lattice.basis()[i]);
  }
  return LatticeCoset(std::move(point), intersect_impl(a.lattice, b.lattice));
}

// --- annihilators ----------------------------------------------------------

bool Subtorus::contains(const RatVec& point) const {
  require_same_dim(point.size(), ambient_dim(), "subtorus point");
  return std::all_of(lattice_.basis().begin(), lattice_.basis().end(),
                     [&](const IntVec& l) { return frac(dot(l, point)) == 0; });
}

Lattice Subtorus::annihilator_dual() const { return kernel(ambient_dim(), directions_); }

Subtorus annihilator(const Lattice& lattice) {
  if (!lattice.saturated()) {
    throw InvalidArgument("annihilator: lattice must be saturated");
  }
  Subtorus s;
  s.lattice_ = lattice;
  s.directions_ = kernel(lattice.dim(), lattice.basis()).basis();
  return s;
}

RatVec reduce_phase(const Lattice& lattice, const RatVec& a) {
  require_same_dim(a.size(), lattice.dim(), "reduce_phase");
  const auto& section = lattice.dual_section();
  RatVec out = rational_zeros(lattice.dim());
  for (std::size_t k = 0; k < lattice.rank(); ++k) {
    const Rational w = frac(dot(lattice.basis()[k], a));
    if (w == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (section[k][i] != 0) out[i] += w * Rational(section[k][i]);
    }
  }
  return frac(out);
}

}  // namespace rieszkit
