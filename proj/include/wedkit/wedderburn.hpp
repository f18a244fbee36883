#ifndef WEDKIT_WEDDERBURN_HPP
#define WEDKIT_WEDDERBURN_HPP

#include <wedkit/algebra.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wedkit {

/// Radical, its power filtration R^0 = A, R^1 = R, ..., R^r = 0, and the
/// semisimple quotient A/R.
struct RadicalData {
  Subspace radical;
  std::vector<Subspace> powers;
  Quotient quotient;

  std::size_t index() const { return powers.size() - 1; }
};

inline RadicalData radical_data(const Algebra& a) {
  Subspace r = radical(a);
  auto powers = power_filtration(a, r);
  Quotient q = quotient(a, r);
  return {std::move(r), std::move(powers), std::move(q)};
}

/// A multiplicative splitting of A -> A/rad(A). Column k of `map` is the
/// image of the k-th quotient basis vector.
struct Section {
  Matrix map;
  Matrix projection;
  Algebra quotient;

  Vector image(std::size_t k) const { return map.column(k); }
  std::size_t quotient_dim() const { return map.cols(); }
};

struct SectionCheck {
  bool projection = false;
  bool multiplicative = false;
  bool unital = false;

  bool ok() const { return projection && multiplicative && unital; }
};

inline SectionCheck verify_section(const Algebra& a, const Quotient& q, const Matrix& map) {
  SectionCheck c;
  const std::size_t s = q.algebra.dim();
  if (map.rows() != a.dim() || map.cols() != s) return c;
  c.projection = q.projection * map == Matrix::identity(s);
  c.unital = map * q.algebra.unit() == a.unit();
  c.multiplicative = true;
  std::vector<Vector> img;
  for (std::size_t k = 0; k < s; ++k) img.push_back(map.column(k));
  for (std::size_t x = 0; x < s && c.multiplicative; ++x)
    for (std::size_t y = 0; y < s; ++y)
      if (map * q.algebra.product(x, y) != a.multiply(img[x], img[y])) {
        c.multiplicative = false;
        break;
      }
  return c;
}

namespace detail {

/// Coordinates of v modulo `sub` in the complement coordinates of `sub`.
inline Vector reduced_coords(const Subspace& sub, const std::vector<std::size_t>& comp, const Vector& v) {
  Vector r = sub.reduce(v);
  Vector out(comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i) out[i] = r[comp[i]];
  return out;
}

/// (1 + n)^{-1} for n in the radical.
inline Vector unipotent_inverse(const Algebra& a, const Vector& n) {
  Vector result = a.unit();
  Vector term = a.unit();
  const Vector minus_n = Rational(-1) * n;
  for (std::size_t k = 0; k <= a.dim(); ++k) {
    term = a.multiply(term, minus_n);
    if (is_zero(term)) return result;
    result = result + term;
  }
  throw InternalError("element of the radical is not nilpotent");
}

/// u in 1 + R with u * src[k] * u^{-1} = dst[k] for every k, built one layer
/// R^m / R^{m+1} at a time by solving n * t - t * n = dst - t.
inline Vector conjugator(const Algebra& a, const std::vector<Subspace>& powers, std::vector<Vector> src,
                         const std::vector<Vector>& dst) {
  Vector u = a.unit();
  const std::size_t r = powers.size() - 1;
  for (std::size_t k = 0; k < src.size(); ++k)
    if (!powers[1].contains(dst[k] - src[k])) throw InputError("maps do not agree modulo the radical");
  for (std::size_t m = 1; m < r; ++m) {
    bool done = true;
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (!powers[m].contains(dst[k] - src[k])) throw InternalError("conjugation layer invariant broken");
      if (src[k] != dst[k]) done = false;
    }
    if (done) break;
    const Subspace& next = powers[m + 1];
    const auto comp = next.complement_indices();
    const auto layer = relative_complement(powers[m], next);
    const std::size_t rows = comp.size() * src.size();
    Matrix sys(rows, layer.size());
    Vector rhs(rows);
    for (std::size_t k = 0; k < src.size(); ++k) {
      Vector delta = reduced_coords(next, comp, dst[k] - src[k]);
      for (std::size_t i = 0; i < comp.size(); ++i) rhs[k * comp.size() + i] = delta[i];
      for (std::size_t t = 0; t < layer.size(); ++t) {
        Vector col = reduced_coords(next, comp, a.multiply(layer[t], src[k]) - a.multiply(src[k], layer[t]));
        for (std::size_t i = 0; i < comp.size(); ++i) sys(k * comp.size() + i, t) = col[i];
      }
    }
    auto c = solve(sys, rhs);
    if (!c) throw InternalError("inconsistent coboundary system");
    Vector n(a.dim());
    for (std::size_t t = 0; t < layer.size(); ++t) axpy(n, (*c)[t], layer[t]);
    const Vector v = a.unit() + n;
    const Vector vinv = unipotent_inverse(a, n);
    for (auto& s : src) s = a.multiply(v, s, vinv);
    u = a.multiply(v, u);
  }
  for (std::size_t k = 0; k < src.size(); ++k)
    if (src[k] != dst[k]) throw InternalError("conjugator does not reach the target map");
  return u;
}

}  // namespace detail

/// Lifts a linear section to a multiplicative one. `initial` (dim A rows,
/// dim A/R columns) must satisfy projection * initial = identity.
///
/// At layer m the defect g(x, y) = s(xy) - s(x)s(y) lies in R^m and is a
/// Hochschild 2-cocycle of A/R with values in R^m/R^{m+1}; the canonical
/// solution p of g(x, y) = p(xy) - s(x)p(y) - p(x)s(y) gives s - p, which is
/// multiplicative modulo R^{m+1}.
inline Section lift_section_from(const Algebra& a, const RadicalData& rd, Matrix initial) {
  const Quotient& q = rd.quotient;
  const std::size_t s = q.algebra.dim();
  if (initial.rows() != a.dim() || initial.cols() != s) throw InputError("initial section has the wrong shape");
  if (q.projection * initial != Matrix::identity(s)) throw InputError("initial map is not a linear section");
  if (!semisimple_decompose(q.algebra).all_split())
    throw InputError("unsplit quotient: a simple block of A/rad(A) was not split over its centre");

  std::vector<Vector> sigma;
  for (std::size_t k = 0; k < s; ++k) sigma.push_back(initial.column(k));

  const std::size_t r = rd.index();
  for (std::size_t m = 1; m < r; ++m) {
    const Subspace& next = rd.powers[m + 1];
    const auto comp = next.complement_indices();
    const auto layer = relative_complement(rd.powers[m], next);
    const std::size_t nl = layer.size();
    const std::size_t rows = s * s * comp.size();
    Matrix sys(rows, s * nl);
    Vector rhs(rows);
    // Products sigma(k) * w and w * sigma(l) for every layer vector w.
    std::vector<std::vector<Vector>> left(s), right(s);
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t t = 0; t < nl; ++t) {
        left[k].push_back(detail::reduced_coords(next, comp, a.multiply(sigma[k], layer[t])));
        right[k].push_back(detail::reduced_coords(next, comp, a.multiply(layer[t], sigma[k])));
      }
    std::vector<Vector> layer_coords;
    for (const auto& w : layer) layer_coords.push_back(detail::reduced_coords(next, comp, w));

    bool defect_free = true;
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t l = 0; l < s; ++l) {
        const Vector& prod = q.algebra.product(k, l);
        Vector sp(a.dim());
        for (std::size_t j = 0; j < s; ++j) axpy(sp, prod[j], sigma[j]);
        const Vector gamma = sp - a.multiply(sigma[k], sigma[l]);
        if (!rd.powers[m].contains(gamma)) throw InternalError("cocycle leaves R^m");
        const Vector g = detail::reduced_coords(next, comp, gamma);
        if (!is_zero(g)) defect_free = false;
        const std::size_t base = (k * s + l) * comp.size();
        for (std::size_t i = 0; i < comp.size(); ++i) rhs[base + i] = g[i];
        for (std::size_t t = 0; t < nl; ++t) {
          for (std::size_t j = 0; j < s; ++j)
            if (prod[j] != 0)
              for (std::size_t i = 0; i < comp.size(); ++i)
                if (layer_coords[t][i] != 0) sys(base + i, j * nl + t) += prod[j] * layer_coords[t][i];
          for (std::size_t i = 0; i < comp.size(); ++i) {
            sys(base + i, l * nl + t) -= left[k][t][i];
            sys(base + i, k * nl + t) -= right[l][t][i];
          }
        }
      }
    if (defect_free) continue;
    auto c = solve(sys, rhs);
    if (!c) throw InternalError("inconsistent cocycle system");
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t t = 0; t < nl; ++t) axpy(sigma[k], -(*c)[k * nl + t], layer[t]);
  }

  Section out{Matrix::from_columns(a.dim(), sigma), q.projection, q.algebra};
  const SectionCheck check = verify_section(a, q, out.map);
  if (!check.ok()) throw InternalError("lifted section failed verification");
  return out;
}

/// Canonical initial section: quotient basis vector k maps to the basis
/// element e_{representatives[k]}.
inline Matrix canonical_linear_section(const Algebra& a, const Quotient& q) {
  Matrix m(a.dim(), q.algebra.dim());
  for (std::size_t k = 0; k < q.representatives.size(); ++k) m(q.representatives[k], k) = 1;
  return m;
}

inline Section lift_section(const Algebra& a) {
  const RadicalData rd = radical_data(a);
  return lift_section_from(a, rd, canonical_linear_section(a, rd.quotient));
}

/// u in 1 + rad(A) with s2(x) = u s1(x) u^{-1} on every quotient basis vector.
inline Vector conjugate_sections(const Algebra& a, const Section& s1, const Section& s2) {
  const RadicalData rd = radical_data(a);
  const Quotient& q = rd.quotient;
  for (const Section* s : {&s1, &s2})
    if (!verify_section(a, q, s->map).ok()) throw InputError("input is not a multiplicative section of A -> A/rad(A)");
  std::vector<Vector> src, dst;
  for (std::size_t k = 0; k < q.algebra.dim(); ++k) {
    src.push_back(s1.map.column(k));
    dst.push_back(s2.map.column(k));
  }
  Vector u = detail::conjugator(a, rd.powers, src, dst);
  if (!rd.radical.contains(u - a.unit())) throw InternalError("conjugator is not unipotent");
  const Vector uinv = detail::unipotent_inverse(a, u - a.unit());
  for (std::size_t k = 0; k < src.size(); ++k)
    if (a.multiply(u, src[k], uinv) != dst[k]) throw InternalError("conjugation identity fails");
  return u;
}

/// Structure constants of a subalgebra in its echelon basis.
inline Algebra restrict_to_subalgebra(const Algebra& a, const Subspace& b) {
  if (!is_subalgebra(a, b)) throw InputError("subspace is not a unital subalgebra");
  const std::size_t k = b.dim();
  std::vector<std::vector<Vector>> table(k, std::vector<Vector>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i][j] = b.coordinates(a.multiply(b.basis()[i], b.basis()[j]));
  return Algebra(b.coordinates(a.unit()), std::move(table));
}

/// Section whose image contains the semisimple subalgebra b pointwise:
/// s(pi(x)) = x for every x in b.
inline Section lift_section_fixing(const Algebra& a, const Subspace& b) {
  const Algebra sub = restrict_to_subalgebra(a, b);
  if (!radical(sub).is_zero()) throw InputError("subalgebra is not semisimple");
  const RadicalData rd = radical_data(a);
  Section s = lift_section_from(a, rd, canonical_linear_section(a, rd.quotient));
  std::vector<Vector> src, dst;
  for (const auto& x : b.basis()) {
    src.push_back(s.map * (rd.quotient.projection * x));
    dst.push_back(x);
  }
  const Vector u = detail::conjugator(a, rd.powers, src, dst);
  const Vector uinv = detail::unipotent_inverse(a, u - a.unit());
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < s.quotient_dim(); ++k) cols.push_back(a.multiply(u, s.map.column(k), uinv));
  Section out{Matrix::from_columns(a.dim(), cols), rd.quotient.projection, rd.quotient.algebra};
  if (!verify_section(a, rd.quotient, out.map).ok()) throw InternalError("fixed section failed verification");
  for (const auto& x : b.basis())
    if (out.map * (rd.quotient.projection * x) != x) throw InternalError("section does not fix the subalgebra");
  return out;
}

}  // namespace wedkit

#endif  // WEDKIT_WEDDERBURN_HPP
