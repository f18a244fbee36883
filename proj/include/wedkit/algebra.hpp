#ifndef WEDKIT_ALGEBRA_HPP
#define WEDKIT_ALGEBRA_HPP

#include <wedkit/matrix.hpp>
#include <wedkit/polynomial.hpp>
#include <wedkit/subspace.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wedkit {

/// Finite-dimensional associative unital algebra over Q given by structure
/// constants in a fixed basis e_0..e_{d-1}: product(i, j) holds the
/// coordinates of e_i * e_j.
///
/// All radical computations in this library use the trace form of the left
/// regular representation, which characterises the Jacobson radical only in
/// characteristic 0. The ground field is always Q.
class Algebra {
 public:
  Algebra() = default;

  /// Validates the unit laws and associativity on all basis triples.
  Algebra(Vector unit, std::vector<std::vector<Vector>> table) : dim_(unit.size()), unit_(std::move(unit)) {
    if (dim_ == 0) throw InputError("the zero algebra is not allowed (a unit is required)");
    if (table.size() != dim_) throw InputError("structure table must have dim rows");
    table_.reserve(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (table[i].size() != dim_) throw InputError("structure table must be dim x dim");
      for (std::size_t j = 0; j < dim_; ++j) {
        if (table[i][j].size() != dim_) throw InputError("structure constant vector has wrong length");
        table_.push_back(std::move(table[i][j]));
      }
    }
    build_sparse();
    for (std::size_t i = 0; i < dim_; ++i) {
      const Vector ei = unit_vector(dim_, i);
      if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei)
        throw InputError("unit law fails for basis element " + std::to_string(i));
    }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          Vector left = right_multiply_basis(product(i, j), k);
          Vector right = left_multiply_basis(i, product(j, k));
          if (left != right)
            throw InputError("associativity fails on basis triple (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
        }
  }

  std::size_t dim() const { return dim_; }
  const Vector& unit() const { return unit_; }
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Vector multiply(const Vector& x, const Vector& y) const {
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        const Rational c = x[i] * y[j];
        for (const auto& [k, v] : sparse_[i * dim_ + j]) out[k] += c * v;
      }
    }
    return out;
  }

  Vector multiply(const Vector& x, const Vector& y, const Vector& z) const { return multiply(multiply(x, y), z); }

  std::vector<std::vector<Vector>> table() const {
    std::vector<std::vector<Vector>> t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t[i].push_back(product(i, j));
    return t;
  }

 private:
  Vector right_multiply_basis(const Vector& x, std::size_t k) const {
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (x[i] != 0)
        for (const auto& [l, v] : sparse_[i * dim_ + k]) out[l] += x[i] * v;
    return out;
  }
  Vector left_multiply_basis(std::size_t k, const Vector& x) const {
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (x[i] != 0)
        for (const auto& [l, v] : sparse_[k * dim_ + i]) out[l] += x[i] * v;
    return out;
  }
  void build_sparse() {
    sparse_.resize(table_.size());
    for (std::size_t t = 0; t < table_.size(); ++t)
      for (std::size_t k = 0; k < dim_; ++k)
        if (table_[t][k] != 0) sparse_[t].emplace_back(k, table_[t][k]);
  }

  std::size_t dim_ = 0;
  Vector unit_;
  std::vector<Vector> table_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;
};

// ---------------------------------------------------------------------------
// Constructions

/// Structure constants of the matrix algebra spanned by `basis`; the span
/// must contain the identity and be closed under products.
inline Algebra algebra_from_matrices(const std::vector<Matrix>& basis) {
  if (basis.empty()) throw InputError("empty matrix basis");
  const std::size_t n = basis[0].rows();
  std::vector<Vector> cols;
  for (const auto& m : basis) {
    if (m.rows() != n || m.cols() != n) throw InputError("matrix basis elements must share a square shape");
    cols.push_back(vectorize(m));
  }
  const Matrix span = Matrix::from_columns(n * n, cols);
  if (rank(span) != basis.size()) throw InputError("matrix basis is linearly dependent");
  auto coords = [&](const Matrix& m) {
    auto x = solve(span, vectorize(m));
    if (!x) throw InputError("matrix span is not closed under products or lacks the identity");
    return *x;
  };
  const std::size_t d = basis.size();
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i][j] = coords(basis[i] * basis[j]);
  return Algebra(coords(Matrix::identity(n)), std::move(table));
}

inline Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

/// M_n(Q) in the basis E_ij, ordered row by row.
inline Algebra full_matrix_algebra(std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.push_back(matrix_unit(n, i, j));
  return algebra_from_matrices(basis);
}

/// Upper triangular n x n matrices T_n(Q) in the basis E_ij (i <= j), row by
/// row.
inline Algebra upper_triangular(std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) basis.push_back(matrix_unit(n, i, j));
  return algebra_from_matrices(basis);
}

/// Q[t]/(f) in the basis 1, t, ..., t^{deg f - 1}.
inline Algebra polynomial_quotient(const Polynomial& f) {
  if (f.degree() < 1) throw InputError("modulus must have positive degree");
  const Polynomial m = f.monic();
  const std::size_t n = static_cast<std::size_t>(m.degree());
  std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial r = divmod(Polynomial::monomial(i + j), m).second;
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = r.coeff(k);
      table[i][j] = v;
    }
  return Algebra(unit_vector(n, 0), std::move(table));
}

/// Group algebra Q[G] for a group given as a list of permutations (image
/// vectors) closed under composition; basis order follows the list.
inline Algebra group_algebra(const std::vector<std::vector<std::size_t>>& elements) {
  const std::size_t d = elements.size();
  if (d == 0) throw InputError("empty group");
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[elements[i]] = i;
  if (index.size() != d) throw InputError("repeated group element");
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d));
  std::optional<std::size_t> identity;
  for (std::size_t a = 0; a < d; ++a) {
    const auto& g = elements[a];
    bool is_id = true;
    for (std::size_t i = 0; i < g.size(); ++i) is_id = is_id && g[i] == i;
    if (is_id) identity = a;
    for (std::size_t b = 0; b < d; ++b) {
      const auto& h = elements[b];
      std::vector<std::size_t> gh(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) gh[i] = g[h[i]];
      auto it = index.find(gh);
      if (it == index.end()) throw InputError("group elements are not closed under composition");
      table[a][b] = unit_vector(d, it->second);
    }
  }
  if (!identity) throw InputError("group does not contain the identity");
  return Algebra(unit_vector(d, *identity), std::move(table));
}

/// A x B with the basis of A followed by the basis of B.
inline Algebra direct_product(const Algebra& a, const Algebra& b) {
  const std::size_t d = a.dim() + b.dim();
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, Vector(d)));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) table[i][j][k] = a.product(i, j)[k];
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) table[a.dim() + i][a.dim() + j][a.dim() + k] = b.product(i, j)[k];
  Vector unit(d);
  for (std::size_t i = 0; i < a.dim(); ++i) unit[i] = a.unit()[i];
  for (std::size_t i = 0; i < b.dim(); ++i) unit[a.dim() + i] = b.unit()[i];
  return Algebra(std::move(unit), std::move(table));
}

// ---------------------------------------------------------------------------
// Regular representation and ideals

/// Matrix of y -> x y.
inline Matrix left_regular(const Algebra& a, const Vector& x) {
  if (x.size() != a.dim()) throw InputError("element length does not match algebra dimension");
  Matrix l(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vector col = a.multiply(x, unit_vector(a.dim(), j));
    for (std::size_t i = 0; i < a.dim(); ++i) l(i, j) = col[i];
  }
  return l;
}

/// Matrix of y -> y x.
inline Matrix right_regular(const Algebra& a, const Vector& x) {
  if (x.size() != a.dim()) throw InputError("element length does not match algebra dimension");
  Matrix r(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vector col = a.multiply(unit_vector(a.dim(), j), x);
    for (std::size_t i = 0; i < a.dim(); ++i) r(i, j) = col[i];
  }
  return r;
}

inline Subspace ideal_product(const Algebra& a, const Subspace& i, const Subspace& j) {
  std::vector<Vector> products;
  for (const auto& x : i.basis())
    for (const auto& y : j.basis()) {
      Vector p = a.multiply(x, y);
      if (!is_zero(p)) products.push_back(std::move(p));
    }
  return Subspace::span(a.dim(), products);
}

inline bool is_two_sided_ideal(const Algebra& a, const Subspace& i) {
  if (i.ambient_dim() != a.dim()) return false;
  for (const auto& x : i.basis())
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector ej = unit_vector(a.dim(), j);
      if (!i.contains(a.multiply(ej, x)) || !i.contains(a.multiply(x, ej))) return false;
    }
  return true;
}

inline bool is_subalgebra(const Algebra& a, const Subspace& b) {
  if (b.ambient_dim() != a.dim() || !b.contains(a.unit())) return false;
  for (const auto& x : b.basis())
    for (const auto& y : b.basis())
      if (!b.contains(a.multiply(x, y))) return false;
  return true;
}

/// Gram matrix of the trace form (x, y) -> tr(L_x L_y) = tr(L_{xy}).
inline Matrix trace_form(const Algebra& a) {
  const std::size_t d = a.dim();
  Vector tau(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) tau[k] += a.product(k, l)[l];
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rational t;
      const Vector& p = a.product(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (p[k] != 0) t += p[k] * tau[k];
      g(i, j) = t;
    }
  return g;
}

/// Jacobson radical: the kernel of the regular trace form (valid in
/// characteristic 0).
inline Subspace radical(const Algebra& a) { return Subspace::span(a.dim(), kernel_basis(trace_form(a))); }

/// Smallest r >= 1 with I^r = 0.
inline std::size_t nilpotency_index(const Algebra& a, const Subspace& ideal) {
  if (!is_two_sided_ideal(a, ideal)) throw InputError("subspace is not a two-sided ideal");
  std::size_t r = 1;
  Subspace p = ideal;
  while (!p.is_zero()) {
    if (r > a.dim()) throw InputError("not nilpotent: I^" + std::to_string(a.dim() + 1) + " != 0");
    p = ideal_product(a, p, ideal);
    ++r;
  }
  return r;
}

/// Powers I^0 = A, I^1 = I, ..., I^r = 0 of a nilpotent ideal.
inline std::vector<Subspace> power_filtration(const Algebra& a, const Subspace& ideal) {
  std::vector<Subspace> powers{Subspace::full(a.dim()), ideal};
  while (!powers.back().is_zero()) {
    if (powers.size() > a.dim() + 1) throw InputError("ideal is not nilpotent");
    powers.push_back(ideal_product(a, powers.back(), ideal));
  }
  return powers;
}

/// A / I on the complement basis {e_k : k not a pivot of I}, with the
/// projection matrix (dim A/I rows, dim A columns).
struct Quotient {
  Algebra algebra;
  Matrix projection;
  std::vector<std::size_t> representatives;
};

inline Quotient quotient(const Algebra& a, const Subspace& ideal) {
  if (!is_two_sided_ideal(a, ideal)) throw InputError("subspace is not a two-sided ideal");
  const auto reps = ideal.complement_indices();
  const std::size_t q = reps.size();
  if (q == 0) throw InputError("quotient by the whole algebra is the zero algebra");
  Matrix proj(q, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vector r = ideal.reduce(unit_vector(a.dim(), j));
    for (std::size_t k = 0; k < q; ++k) proj(k, j) = r[reps[k]];
  }
  std::vector<std::vector<Vector>> table(q, std::vector<Vector>(q));
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) table[x][y] = proj * a.product(reps[x], reps[y]);
  return {Algebra(proj * a.unit(), std::move(table)), proj, reps};
}

inline Subspace center(const Algebra& a) {
  const std::size_t d = a.dim();
  Matrix sys(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector& ij = a.product(i, j);
      const Vector& ji = a.product(j, i);
      for (std::size_t k = 0; k < d; ++k) sys(j * d + k, i) = ij[k] - ji[k];
    }
  return Subspace::span(d, kernel_basis(sys));
}

/// Minimal polynomial of x inside the unital subalgebra whose unit is `one`.
inline Polynomial minimal_polynomial(const Algebra& a, const Vector& x, const Vector& one) {
  std::vector<Vector> powers{one};
  for (;;) {
    Vector next = a.multiply(powers.back(), x);
    auto c = solve(Matrix::from_columns(a.dim(), powers), next);
    if (c) {
      Vector coeffs(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) coeffs[i] = -(*c)[i];
      coeffs.back() = 1;
      return Polynomial(std::move(coeffs));
    }
    powers.push_back(std::move(next));
    if (powers.size() > a.dim() + 1) throw InternalError("minimal polynomial degree exceeds dimension");
  }
}

inline Vector evaluate(const Algebra& a, const Polynomial& p, const Vector& x, const Vector& one) {
  Vector r(a.dim());
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    r = a.multiply(r, x);
    axpy(r, c[i], one);
  }
  return r;
}

/// Idempotent of Q[x] (unit `one`) projecting onto the primary component of
/// `part` in the minimal polynomial `m` of x.
inline Vector primary_idempotent(const Algebra& a, const Vector& x, const Vector& one, const Polynomial& m,
                                 const Factor& part) {
  Polynomial g = Polynomial::constant(1);
  for (unsigned i = 0; i < part.multiplicity; ++i) g = g * part.factor;
  const Polynomial h = divmod(m, g).first;
  const Bezout bz = extended_gcd(g, h);
  if (bz.gcd.degree() != 0) throw InternalError("primary components are not coprime");
  const Polynomial e = divmod(bz.t * h, m).second;
  return evaluate(a, e, x, one);
}

// ---------------------------------------------------------------------------
// Semisimple decomposition

struct SimpleBlock {
  std::size_t block_dim = 0;
  std::size_t center_dim = 0;
  /// n with block = M_n over its centre, when a primitive idempotent was found.
  std::optional<std::size_t> matrix_size;
  Vector central_idempotent;
  Vector primitive_idempotent;
};

struct SemisimpleReport {
  std::vector<SimpleBlock> blocks;
  std::size_t total_dim = 0;

  bool all_split() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const SimpleBlock& b) { return b.matrix_size.has_value(); });
  }
};

namespace detail {

/// Deterministic sequence of test elements drawn from a basis: the basis
/// itself, pairwise sums, pairwise products, then seeded small-integer
/// combinations.
class CandidateSweep {
 public:
  CandidateSweep(const Algebra& a, std::vector<Vector> basis, std::size_t random_rounds = 96)
      : a_(a), basis_(std::move(basis)), random_rounds_(random_rounds), rng_(0x77ed6e) {}

  void push_front(Vector v) { extra_.push_back(std::move(v)); }

  std::optional<Vector> next() {
    if (!extra_.empty()) {
      Vector v = std::move(extra_.back());
      extra_.pop_back();
      return v;
    }
    const std::size_t k = basis_.size();
    while (stage_ < 4) {
      switch (stage_) {
        case 0:
          if (i_ < k) return basis_[i_++];
          break;
        case 1:
          while (i_ < k) {
            if (j_ < k) {
              std::size_t j = j_++;
              if (j > i_) return basis_[i_] + basis_[j];
              continue;
            }
            ++i_;
            j_ = 0;
          }
          break;
        case 2:
          while (i_ < k) {
            if (j_ < k) return a_.multiply(basis_[i_], basis_[j_++]);
            ++i_;
            j_ = 0;
          }
          break;
        case 3:
          if (i_ < random_rounds_) {
            ++i_;
            std::uniform_int_distribution<int> coef(-3, 3);
            Vector v(a_.dim());
            for (const auto& b : basis_) axpy(v, Rational(coef(rng_)), b);
            return v;
          }
          break;
      }
      ++stage_;
      i_ = 0;
      j_ = 0;
    }
    return std::nullopt;
  }

 private:
  const Algebra& a_;
  std::vector<Vector> basis_;
  std::size_t random_rounds_;
  std::mt19937_64 rng_;
  std::vector<Vector> extra_;
  int stage_ = 0;
  std::size_t i_ = 0, j_ = 0;
};

inline Subspace corner(const Algebra& a, const Vector& f, const std::vector<Vector>& block) {
  std::vector<Vector> v;
  for (const auto& b : block) v.push_back(a.multiply(f, b, f));
  return Subspace::span(a.dim(), v);
}

inline Subspace left_ideal_by(const Algebra& a, const Vector& f, const std::vector<Vector>& block) {
  std::vector<Vector> v;
  for (const auto& b : block) v.push_back(a.multiply(f, b));
  return Subspace::span(a.dim(), v);
}

inline std::vector<Vector> primitive_central_idempotents(const Algebra& a, const Subspace& z) {
  std::vector<Vector> work{a.unit()}, done;
  while (!work.empty()) {
    Vector e = std::move(work.back());
    work.pop_back();
    std::vector<Vector> comp_vecs;
    for (const auto& b : z.basis()) comp_vecs.push_back(a.multiply(e, b));
    const Subspace comp = Subspace::span(a.dim(), comp_vecs);
    if (comp.dim() == 1) {
      done.push_back(std::move(e));
      continue;
    }
    CandidateSweep sweep(a, comp.basis(), 256);
    bool resolved = false;
    while (auto y = sweep.next()) {
      if (is_zero(*y)) continue;
      const Polynomial m = minimal_polynomial(a, *y, e);
      const auto fs = factor(m);
      if (fs.size() >= 2) {
        Vector e1 = primary_idempotent(a, *y, e, m, fs[0]);
        Vector e2 = e - e1;
        work.push_back(std::move(e2));
        work.push_back(std::move(e1));
        resolved = true;
        break;
      }
      if (fs.size() == 1 && fs[0].multiplicity == 1 && static_cast<std::size_t>(m.degree()) == comp.dim()) {
        done.push_back(std::move(e));
        resolved = true;
        break;
      }
    }
    if (!resolved) throw InternalError("could not decompose the centre into fields");
  }
  std::sort(done.begin(), done.end());
  return done;
}

}  // namespace detail

/// Splits a semisimple algebra into simple two-sided ideals via primitive
/// central idempotents, and for each block searches for a primitive
/// idempotent f with dim(f B f) = dim Z(B), which exhibits B = M_n(Z(B)).
inline SemisimpleReport semisimple_decompose(const Algebra& s) {
  if (!radical(s).is_zero()) throw InputError("not semisimple: the radical is nonzero");
  const Subspace z = center(s);
  SemisimpleReport report;
  report.total_dim = s.dim();
  for (const auto& e : detail::primitive_central_idempotents(s, z)) {
    SimpleBlock blk;
    blk.central_idempotent = e;
    std::vector<Vector> bv;
    for (std::size_t j = 0; j < s.dim(); ++j) bv.push_back(s.multiply(e, unit_vector(s.dim(), j)));
    const Subspace block = Subspace::span(s.dim(), bv);
    blk.block_dim = block.dim();
    std::vector<Vector> zv;
    for (const auto& b : z.basis()) zv.push_back(s.multiply(e, b));
    blk.center_dim = Subspace::span(s.dim(), zv).dim();

    Vector cur = e;
    for (;;) {
      const Subspace c = detail::corner(s, cur, block.basis());
      if (c.dim() == blk.center_dim) {
        const std::size_t row = detail::left_ideal_by(s, cur, block.basis()).dim();
        const std::size_t n = row / blk.center_dim;
        if (n * blk.center_dim != row || n * n * blk.center_dim != blk.block_dim)
          throw InternalError("primitive idempotent has inconsistent rank");
        blk.matrix_size = n;
        blk.primitive_idempotent = cur;
        break;
      }
      detail::CandidateSweep sweep(s, c.basis());
      std::optional<Vector> next_idem;
      std::size_t nilpotent_budget = 8;
      while (auto y = sweep.next()) {
        if (is_zero(*y)) continue;
        const Polynomial m = minimal_polynomial(s, *y, cur);
        const auto fs = factor(m);
        if (fs.size() >= 2) {
          Vector f1 = primary_idempotent(s, *y, cur, m, fs[0]);
          Vector f2 = cur - f1;
          const std::size_t d1 = detail::corner(s, f1, block.basis()).dim();
          const std::size_t d2 = detail::corner(s, f2, block.basis()).dim();
          next_idem = d1 <= d2 ? std::move(f1) : std::move(f2);
          break;
        }
        if (fs.size() == 1 && fs[0].factor == Polynomial::x() && nilpotent_budget > 0) {
          --nilpotent_budget;
          // Nonzero nilpotent y: some y*c or c*y is singular but not
          // nilpotent, because the trace form is nondegenerate.
          for (const auto& b : c.basis()) {
            sweep.push_front(s.multiply(b, *y));
            sweep.push_front(s.multiply(*y, b));
          }
        }
      }
      if (!next_idem) break;
      cur = std::move(*next_idem);
    }
    report.blocks.push_back(std::move(blk));
  }
  std::stable_sort(report.blocks.begin(), report.blocks.end(), [](const SimpleBlock& x, const SimpleBlock& y) {
    if (x.block_dim != y.block_dim) return x.block_dim < y.block_dim;
    return x.center_dim < y.center_dim;
  });
  return report;
}

/// Result of the Wedderburn test on a finite-dimensional algebra.
struct WedderburnReport {
  bool wedderburn = false;
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::size_t radical_index = 0;
  std::size_t quotient_dim = 0;
  bool trace_form_nondegenerate = false;
  SemisimpleReport quotient;
};

/// A is Wedderburn when rad(A) is nilpotent and A/rad(A) is separable. The
/// first holds in finite dimension; the second is tested through
/// nondegeneracy of the trace form of A/rad(A), which over Q always holds.
inline WedderburnReport is_wedderburn(const Algebra& a) {
  WedderburnReport rep;
  rep.dim = a.dim();
  const Subspace r = radical(a);
  rep.radical_dim = r.dim();
  rep.radical_index = nilpotency_index(a, r);
  const Quotient q = quotient(a, r);
  rep.quotient_dim = q.algebra.dim();
  const Matrix g = trace_form(q.algebra);
  rep.trace_form_nondegenerate = rank(g) == g.rows();
  rep.quotient = semisimple_decompose(q.algebra);
  rep.wedderburn = rep.trace_form_nondegenerate;
  return rep;
}

}  // namespace wedkit

#endif  // WEDKIT_ALGEBRA_HPP
