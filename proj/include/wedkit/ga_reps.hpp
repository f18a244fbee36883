#ifndef WEDKIT_GA_REPS_HPP
#define WEDKIT_GA_REPS_HPP

#include <wedkit/trace.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace wedkit {

/// Representation t -> exp(tN) of the additive group, stored by N.
class GaRep {
 public:
  GaRep() = default;
  explicit GaRep(Matrix n) : n_(std::move(n)) {
    if (n_.rows() != n_.cols()) throw InputError("representation matrix must be square");
    if (!is_nilpotent(n_)) throw InputError("representation matrix is not nilpotent");
  }

  /// S^m V: the Jordan block of size m+1, N[i][i+1] = 1.
  static GaRep sym(std::size_t m) {
    Matrix n(m + 1, m + 1);
    for (std::size_t i = 0; i < m; ++i) n(i, i + 1) = 1;
    return GaRep(std::move(n));
  }

  /// (+)_k S^{m_k} V.
  static GaRep sum_of_syms(const std::vector<std::size_t>& ms) {
    Matrix n(0, 0);
    for (auto m : ms) n = direct_sum(n, sym(m).nilpotent());
    return GaRep(std::move(n));
  }

  std::size_t dim() const { return n_.rows(); }
  const Matrix& nilpotent() const { return n_; }

  friend GaRep operator+(const GaRep& a, const GaRep& b) { return GaRep(direct_sum(a.n_, b.n_)); }

  /// N (x) 1 + 1 (x) N.
  friend GaRep tensor(const GaRep& a, const GaRep& b) {
    return GaRep(kron(a.n_, Matrix::identity(b.dim())) + kron(Matrix::identity(a.dim()), b.n_));
  }

 private:
  Matrix n_;
};

/// Weakly decreasing block sizes.
using JordanType = std::vector<std::size_t>;

/// #(parts >= k) = rank N^{k-1} - rank N^k.
inline JordanType jordan_type(const Matrix& n) {
  if (n.rows() != n.cols()) throw InputError("expected a square matrix");
  if (!is_nilpotent(n)) throw InputError("matrix is not nilpotent");
  std::vector<std::size_t> ranks{n.rows()};
  Matrix p = Matrix::identity(n.rows());
  while (ranks.back() > 0) {
    p = p * n;
    ranks.push_back(rank(p));
  }
  JordanType parts;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    const std::size_t at_least_k = ranks[k - 1] - ranks[k];
    const std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = at_least_next; c < at_least_k; ++c) parts.push_back(k);
  }
  return parts;
}

inline JordanType jordan_type(const GaRep& r) { return jordan_type(r.nilpotent()); }

/// Columns form a basis in which N becomes the direct sum of upper-shift
/// Jordan blocks of sizes `type` (in that order). Block generated by v of
/// size k occupies columns N^{k-1}v, ..., Nv, v.
struct JordanBasis {
  Matrix change;  // N * change = change * J
  JordanType type;
};

inline JordanBasis jordan_basis(const Matrix& n) {
  const JordanType type = jordan_type(n);
  const std::size_t d = n.rows();
  const std::size_t top = type.empty() ? 0 : type.front();
  std::vector<Subspace> kernels{Subspace::zero(d)};
  Matrix p = Matrix::identity(d);
  for (std::size_t k = 1; k <= top; ++k) {
    p = p * n;
    kernels.push_back(Subspace::span(d, kernel_basis(p)));
  }
  std::vector<std::pair<std::size_t, Vector>> generators;  // (block size, v)
  for (std::size_t k = top; k >= 1; --k) {
    std::vector<Vector> lower = kernels[k - 1].basis();
    for (const auto& [size, v] : generators) {
      Vector w = v;
      for (std::size_t s = k; s < size; ++s) w = n * w;
      lower.push_back(std::move(w));
    }
    for (auto& v : relative_complement(kernels[k], Subspace::span(d, lower))) generators.emplace_back(k, std::move(v));
  }
  std::vector<Vector> cols;
  JordanType sizes;
  for (const auto& [size, v] : generators) {
    std::vector<Vector> chain{v};
    for (std::size_t s = 1; s < size; ++s) chain.push_back(n * chain.back());
    cols.insert(cols.end(), chain.rbegin(), chain.rend());
    sizes.push_back(size);
  }
  if (sizes != type) throw InternalError("Jordan basis does not match the Jordan type");
  return {Matrix::from_columns(d, cols), sizes};
}

/// P(m, n) = { j : |m-n| <= j <= m+n, j = m+n mod 2 }.
inline std::vector<std::size_t> clebsch_gordan(std::size_t m, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t j = m > n ? m - n : n - m; j <= m + n; j += 2) out.push_back(j);
  return out;
}

inline std::size_t hom_dim(std::size_t m, std::size_t n) { return clebsch_gordan(m, n).size(); }

/// Basis of Hom_G(A, B) = { f : f N_A = N_B f } as (dim B x dim A) matrices.
inline std::vector<Matrix> intertwiners(const GaRep& a, const GaRep& b) {
  const std::size_t r = b.dim(), c = a.dim();
  Matrix system(r * c, r * c);
  for (std::size_t k = 0; k < r * c; ++k) {
    Vector e = unit_vector(r * c, k);
    const Matrix f = unvectorize(r, c, e);
    const Vector col = vectorize(f * a.nilpotent() - b.nilpotent() * f);
    for (std::size_t i = 0; i < r * c; ++i) system(i, k) = col[i];
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel_basis(system)) out.push_back(unvectorize(r, c, v));
  return out;
}

/// rad(A, B) as a subspace of row-major vectorized (dim B x dim A) matrices.
/// In Jordan bases an intertwiner splits into components between blocks;
/// components between blocks of equal size are polynomials in N and are
/// radical exactly when their constant term (the diagonal entry) vanishes;
/// components between blocks of different sizes are always radical.
inline Subspace category_radical(const GaRep& a, const GaRep& b) {
  const auto homs = intertwiners(a, b);
  const std::size_t r = b.dim(), c = a.dim();
  if (homs.empty()) return Subspace::zero(r * c);
  const JordanBasis ja = jordan_basis(a.nilpotent());
  const JordanBasis jb = jordan_basis(b.nilpotent());
  const Matrix jb_inv = *inverse(jb.change);

  std::vector<std::pair<std::size_t, std::size_t>> checks;  // (row, col) entries that must vanish
  std::size_t row0 = 0;
  for (auto sb : jb.type) {
    std::size_t col0 = 0;
    for (auto sa : ja.type) {
      if (sa == sb) checks.emplace_back(row0, col0);
      col0 += sa;
    }
    row0 += sb;
  }
  Matrix conditions(checks.size(), homs.size());
  for (std::size_t h = 0; h < homs.size(); ++h) {
    const Matrix g = jb_inv * homs[h] * ja.change;
    for (std::size_t k = 0; k < checks.size(); ++k) conditions(k, h) = g(checks[k].first, checks[k].second);
  }
  std::vector<Vector> rad;
  for (const auto& coeffs : kernel_basis(conditions)) {
    Matrix f(r, c);
    for (std::size_t h = 0; h < homs.size(); ++h)
      if (coeffs[h] != 0) f = f + coeffs[h] * homs[h];
    rad.push_back(vectorize(f));
  }
  return Subspace::span(r * c, rad);
}

inline Subspace hom_space(const GaRep& a, const GaRep& b) {
  std::vector<Vector> v;
  for (const auto& f : intertwiners(a, b)) v.push_back(vectorize(f));
  return Subspace::span(b.dim() * a.dim(), v);
}

// ---------------------------------------------------------------------------
// Radical chains

/// A chain 1 = S^{m_0} -> S^{m_1} -> ... -> S^{m_N} of radical morphisms,
/// maps[k] : S^{m_k} V -> S^{m_{k+1}} V.
struct RadicalChain {
  std::vector<std::size_t> objects;
  std::vector<Matrix> maps;

  std::size_t length() const { return maps.size(); }
  std::size_t target() const { return objects.back(); }
};

inline void validate_chain(const RadicalChain& chain) {
  if (chain.maps.empty()) throw InputError("empty chain: the identity is not a radical morphism");
  if (chain.objects.size() != chain.maps.size() + 1) throw InputError("chain needs one more object than morphisms");
  if (chain.objects.front() != 0) throw InputError("chain must start at the unit object S^0 V");
  for (std::size_t k = 0; k < chain.maps.size(); ++k) {
    const auto src = GaRep::sym(chain.objects[k]);
    const auto dst = GaRep::sym(chain.objects[k + 1]);
    const Matrix& f = chain.maps[k];
    if (f.rows() != dst.dim() || f.cols() != src.dim())
      throw InputError("non-composable chain at position " + std::to_string(k));
    if (!category_radical(src, dst).contains(vectorize(f)))
      throw InputError("chain member " + std::to_string(k) + " is not a radical morphism");
  }
}

inline Matrix chain_composite(const RadicalChain& chain) {
  Matrix c = chain.maps.front();
  for (std::size_t k = 1; k < chain.maps.size(); ++k) c = chain.maps[k] * c;
  return c;
}

/// True when the chain composes to zero.
inline bool radical_chain_vanishing(const RadicalChain& chain) {
  validate_chain(chain);
  return chain_composite(chain).is_zero();
}

/// Random radical chains from the unit of the given length with targets at
/// most `max_index`; returns the first one whose composite is nonzero while
/// its length exceeds its target index.
inline std::optional<RadicalChain> find_chain_counterexample(std::size_t length, std::size_t max_index,
                                                             std::size_t trials, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> obj(0, max_index);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Matrix>> cache;
  auto radical_basis = [&](std::size_t m, std::size_t n) -> const std::vector<Matrix>& {
    auto it = cache.find({m, n});
    if (it != cache.end()) return it->second;
    std::vector<Matrix> basis;
    const Subspace rad = category_radical(GaRep::sym(m), GaRep::sym(n));
    for (const auto& v : rad.basis())
      basis.push_back(unvectorize(n + 1, m + 1, v));
    return cache.emplace(std::make_pair(m, n), std::move(basis)).first->second;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    RadicalChain chain;
    chain.objects.push_back(0);
    for (std::size_t k = 0; k < length; ++k) {
      const std::size_t src = chain.objects.back();
      const std::size_t dst = obj(rng);
      Matrix f(dst + 1, src + 1);
      for (const auto& b : radical_basis(src, dst)) f = f + Rational(coef(rng)) * b;
      chain.objects.push_back(dst);
      chain.maps.push_back(std::move(f));
    }
    if (chain.length() > chain.target() && !chain_composite(chain).is_zero()) return chain;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Comparison with SL_2

namespace detail {

/// N acting on Sym^m of V = S^1 V in the monomial basis e0^a e1^(m-a),
/// a = 0..m, where N e1 = e0 and N e0 = 0.
inline Matrix sym_power_of_standard(std::size_t m) {
  Matrix n(m + 1, m + 1);
  for (std::size_t a = 0; a < m; ++a) n(a + 1, a) = static_cast<long>(m - a);
  return n;
}

/// Decomposition of V_m (x) V_n for SL_2 by peeling highest weights off the
/// product of weight characters.
inline std::vector<std::size_t> sl2_character_decomposition(std::size_t m, std::size_t n) {
  std::map<long, long> ch;  // weight -> multiplicity
  for (long a = -static_cast<long>(m); a <= static_cast<long>(m); a += 2)
    for (long b = -static_cast<long>(n); b <= static_cast<long>(n); b += 2) ++ch[a + b];
  std::vector<std::size_t> out;
  while (!ch.empty()) {
    const long top = ch.rbegin()->first;
    for (long w = -top; w <= top; w += 2)
      if (--ch[w] == 0) ch.erase(w);
    out.push_back(static_cast<std::size_t>(top));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> ga_tensor_decomposition(std::size_t m, std::size_t n) {
  std::vector<std::size_t> out;
  for (auto part : jordan_type(tensor(GaRep::sym(m), GaRep::sym(n)))) out.push_back(part - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

struct Sl2Report {
  std::size_t m_max = 0;
  bool dims_match = true;
  bool clebsch_gordan_match = true;
  std::size_t pairs_checked = 0;
  bool radical_equals_numerically_trivial = false;
  std::size_t endomorphism_dim = 0;
  std::size_t radical_dim = 0;

  bool ok() const { return dims_match && clebsch_gordan_match && radical_equals_numerically_trivial; }
};

/// Checks, for m, n <= m_max: Sym^m V is indecomposable of dimension m+1,
/// the tensor decomposition of Jordan blocks agrees with the SL_2 character
/// decomposition and with P(m, n), and R = N on End((+)_{m <= m_max} S^m V).
inline Sl2Report sl2_consistency(std::size_t m_max) {
  Sl2Report rep;
  rep.m_max = m_max;
  for (std::size_t m = 0; m <= m_max; ++m)
    if (jordan_type(detail::sym_power_of_standard(m)) != JordanType{m + 1}) rep.dims_match = false;
  for (std::size_t m = 0; m <= m_max; ++m)
    for (std::size_t n = 0; n <= m_max; ++n) {
      ++rep.pairs_checked;
      const auto cg = clebsch_gordan(m, n);
      if (detail::ga_tensor_decomposition(m, n) != cg || detail::sl2_character_decomposition(m, n) != cg)
        rep.clebsch_gordan_match = false;
    }

  std::vector<std::size_t> ms(m_max + 1);
  for (std::size_t m = 0; m <= m_max; ++m) ms[m] = m;
  const GaRep a = GaRep::sum_of_syms(ms);
  const auto homs = intertwiners(a, a);
  const Subspace rad = category_radical(a, a);
  std::vector<Vector> numtriv;
  for (const auto& f : combine(homs, numerically_trivial(homs, homs))) numtriv.push_back(vectorize(f));
  rep.endomorphism_dim = homs.size();
  rep.radical_dim = rad.dim();
  rep.radical_equals_numerically_trivial = rad == Subspace::span(a.dim() * a.dim(), numtriv);
  return rep;
}

}  // namespace wedkit

#endif  // WEDKIT_GA_REPS_HPP
