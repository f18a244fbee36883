#ifndef WEDKIT_TRACE_HPP
#define WEDKIT_TRACE_HPP

#include <wedkit/subspace.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wedkit {

// ---------------------------------------------------------------------------
// Permutations

/// sigma as the image list i -> images[i], 0-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || hit[v]) throw InputError("not a permutation");
      hit[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Permutation(std::move(v));
  }

  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" and "" give the identity.
  static Permutation parse_cycles(const std::string& text, std::size_t n) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    std::vector<bool> used(n, false);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(') throw InputError("malformed cycle notation '" + text + "'");
      ++pos;
      std::vector<std::size_t> cycle;
      for (;;) {
        skip_ws();
        if (pos >= text.size()) throw InputError("unterminated cycle in '" + text + "'");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (start == pos) throw InputError("malformed cycle notation '" + text + "'");
        const std::size_t v = std::stoul(text.substr(start, pos - start));
        if (v >= n) throw InputError("cycle entry " + std::to_string(v) + " out of range for n = " + std::to_string(n));
        if (used[v]) throw InputError("repeated entry " + std::to_string(v) + " in cycle notation");
        used[v] = true;
        cycle.push_back(v);
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
      skip_ws();
    }
    return Permutation(std::move(img));
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// Cycles including fixed points, each starting at its least element,
  /// ordered by that element.
  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> c;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  int sign() const { return (images_.size() - cycles().size()) % 2 == 0 ? 1 : -1; }

  std::string to_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() == 1) continue;
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw InputError("permutation sizes differ");
    std::vector<std::size_t> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a(b(i));
    return Permutation(std::move(v));
  }
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Calls fn on every element of S_n in lexicographic order of image lists.
inline void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& fn) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  do fn(Permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
}

/// Cap on n for explicit S_n sums; WEDKIT_MAX_N overrides the default 7.
inline std::size_t max_symmetric_degree() {
  if (const char* env = std::getenv("WEDKIT_MAX_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 7;
}

inline void check_symmetric_degree(std::size_t n) {
  if (n > max_symmetric_degree())
    throw InputError("n = " + std::to_string(n) + " exceeds the symmetric-group cap " +
                     std::to_string(max_symmetric_degree()) + " (set WEDKIT_MAX_N to raise it)");
}

// ---------------------------------------------------------------------------
// Graded objects and tensor powers

/// A = A+ (+) A-, even basis vectors first.
struct GradedObject {
  std::size_t even = 0;
  std::size_t odd = 0;

  static GradedObject ungraded(std::size_t d) { return {d, 0}; }
  std::size_t dim() const { return even + odd; }
  long super_dim() const { return static_cast<long>(even) - static_cast<long>(odd); }
  bool is_odd(std::size_t basis_index) const { return basis_index >= even; }
  friend bool operator==(const GradedObject&, const GradedObject&) = default;
};

namespace detail {

inline std::size_t tensor_dim(const std::vector<GradedObject>& slots) {
  std::size_t d = 1;
  for (const auto& o : slots) d *= o.dim();
  return d;
}

/// Digits of a tensor basis index, slot 0 most significant.
inline std::vector<std::size_t> tensor_digits(std::size_t index, const std::vector<GradedObject>& slots) {
  std::vector<std::size_t> digits(slots.size());
  for (std::size_t k = slots.size(); k-- > 0;) {
    digits[k] = index % slots[k].dim();
    index /= slots[k].dim();
  }
  return digits;
}

inline std::size_t tensor_index(const std::vector<std::size_t>& digits, const std::vector<GradedObject>& slots) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < slots.size(); ++k) index = index * slots[k].dim() + digits[k];
  return index;
}

/// Number of odd-odd pairs whose order is reversed when source slot
/// beta(k) is moved to output slot k.
inline std::size_t odd_inversions(const Permutation& beta, const std::vector<bool>& odd_source) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < beta.size(); ++k)
    for (std::size_t l = k + 1; l < beta.size(); ++l)
      if (odd_source[beta(k)] && odd_source[beta(l)] && beta(k) > beta(l)) ++count;
  return count;
}

struct SignedImage {
  std::size_t index;
  int sign;
};

/// Image of a basis tensor under the factor permutation: output slot k
/// receives source factor beta(k), with the Koszul sign.
inline SignedImage permute_basis_tensor(const Permutation& beta, const std::vector<GradedObject>& slots,
                                        std::size_t index) {
  const auto digits = tensor_digits(index, slots);
  std::vector<bool> odd(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) odd[k] = slots[k].is_odd(digits[k]);
  std::vector<std::size_t> out_digits(slots.size());
  std::vector<GradedObject> out_slots(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    out_digits[k] = digits[beta(k)];
    out_slots[k] = slots[beta(k)];
  }
  return {tensor_index(out_digits, out_slots), odd_inversions(beta, odd) % 2 == 0 ? 1 : -1};
}

inline int koszul_character(const Permutation& beta, const std::vector<GradedObject>& slots, std::size_t index) {
  const auto digits = tensor_digits(index, slots);
  std::vector<bool> odd(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) odd[k] = slots[k].is_odd(digits[k]);
  return odd_inversions(beta, odd) % 2 == 0 ? 1 : -1;
}

inline bool total_parity_odd(std::size_t index, const std::vector<GradedObject>& slots) {
  const auto digits = tensor_digits(index, slots);
  std::size_t odd = 0;
  for (std::size_t k = 0; k < slots.size(); ++k) odd += slots[k].is_odd(digits[k]) ? 1 : 0;
  return odd % 2 == 1;
}

}  // namespace detail

/// Signed permutation matrix on A_0 (x) ... (x) A_{n-1}: the basis tensor
/// v_0 (x) ... (x) v_{n-1} maps to v_{beta(0)} (x) ... (x) v_{beta(n-1)}
/// times (-1)^(odd-odd inversions). Note P(a) P(b) = P(b a).
inline Matrix perm_matrix(const Permutation& beta, const std::vector<GradedObject>& slots) {
  if (beta.size() != slots.size()) throw InputError("permutation size does not match the number of tensor factors");
  const std::size_t d = detail::tensor_dim(slots);
  Matrix m(d, d);
  for (std::size_t x = 0; x < d; ++x) {
    const auto img = detail::permute_basis_tensor(beta, slots, x);
    m(img.index, x) = img.sign;
  }
  return m;
}

inline Matrix perm_matrix(const Permutation& beta, const GradedObject& obj, std::size_t n) {
  if (beta.size() != n) throw InputError("permutation size does not match n");
  return perm_matrix(beta, std::vector<GradedObject>(n, obj));
}

/// Supertrace: trace with odd diagonal entries negated.
inline Rational supertrace(const Matrix& f, const GradedObject& obj) {
  if (f.rows() != obj.dim() || f.cols() != obj.dim()) throw InputError("supertrace: matrix does not match the object");
  Rational t = 0;
  for (std::size_t i = 0; i < obj.dim(); ++i) t += obj.is_odd(i) ? Rational(-f(i, i)) : f(i, i);
  return t;
}

/// f : A -> B preserves parity (even morphism).
inline bool is_even_morphism(const Matrix& f, const GradedObject& a, const GradedObject& b) {
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (f(i, j) != 0 && b.is_odd(i) != a.is_odd(j)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Twisted traces

/// F = sigma^{-1} o (f_0 (x) ... (x) f_{n-1}) with f_i : A_i -> A_{sigma(i)}.
/// Without `objects` everything is ungraded and A_i has dimension
/// factors[i].cols().
struct TensorMorphism {
  std::vector<Matrix> factors;
  Permutation perm;
  std::optional<std::vector<GradedObject>> objects;

  std::vector<GradedObject> slots() const {
    if (objects) return *objects;
    std::vector<GradedObject> s;
    for (const auto& f : factors) s.push_back(GradedObject::ungraded(f.cols()));
    return s;
  }

  void validate() const {
    if (perm.size() != factors.size()) throw InputError("dimension mismatch: permutation size differs from factor count");
    if (factors.empty()) throw InputError("dimension mismatch: no factors");
    const auto s = slots();
    if (s.size() != factors.size()) throw InputError("dimension mismatch: object count differs from factor count");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& src = s[i];
      const auto& dst = s[perm(i)];
      if (factors[i].cols() != src.dim() || factors[i].rows() != dst.dim())
        throw InputError("dimension mismatch: factor " + std::to_string(i) + " is not a map A_" + std::to_string(i) +
                         " -> A_" + std::to_string(perm(i)));
      if (objects && !is_even_morphism(factors[i], src, dst))
        throw InputError("graded factor " + std::to_string(i) + " does not preserve parity");
    }
  }
};

/// Cycle formula: product over cycles (i, sigma(i), ...) of the (super)trace
/// of f_{sigma^{l-1}(i)} o ... o f_{sigma(i)} o f_i.
inline Rational twisted_trace(const TensorMorphism& tm) {
  tm.validate();
  const auto slots = tm.slots();
  Rational result = 1;
  for (const auto& cycle : tm.perm.cycles()) {
    Matrix composite = tm.factors[cycle[0]];
    for (std::size_t k = 1; k < cycle.size(); ++k) composite = tm.factors[cycle[k]] * composite;
    if (composite.rows() != composite.cols()) throw InternalError("cycle composite is not square");
    result *= supertrace(composite, slots[cycle[0]]);
    if (result == 0) break;
  }
  return result;
}

/// Same value via the definition: the (super)trace of
/// perm_matrix(sigma^{-1}) * (f_0 (x) ... (x) f_{n-1}), summed entry by entry
/// without materializing the Kronecker product.
inline Rational twisted_trace_kronecker(const TensorMorphism& tm) {
  tm.validate();
  const auto slots = tm.slots();
  const std::size_t n = slots.size();
  // Slot i of the Kronecker product's target holds A_{sigma(i)}.
  std::vector<GradedObject> mid(n);
  for (std::size_t i = 0; i < n; ++i) mid[i] = slots[tm.perm(i)];
  const Permutation beta = tm.perm.inverse();
  const std::size_t d = detail::tensor_dim(slots);
  Rational total = 0;
  std::vector<std::size_t> y(n);
  for (std::size_t x = 0; x < d; ++x) {
    const auto xd = detail::tensor_digits(x, slots);
    Rational term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) {
      y[i] = xd[tm.perm(i)];
      term *= tm.factors[i](y[i], xd[i]);
    }
    if (term == 0) continue;
    const auto img = detail::permute_basis_tensor(beta, mid, detail::tensor_index(y, mid));
    if (img.index != x) throw InternalError("twisted trace: permutation bookkeeping mismatch");
    if (img.sign < 0) term = -term;
    if (detail::total_parity_odd(x, slots)) term = -term;
    total += term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Symmetrizers

namespace detail {

/// sum_sigma c(sigma, t) P(sigma) restricted to the S_n-orbit of basis tensors
/// containing `seed`; returns the orbit (sorted) and the block matrix.
inline std::pair<std::vector<std::size_t>, Matrix> orbit_block(
    const GradedObject& obj, std::size_t n, std::size_t seed,
    const std::function<Rational(const Permutation&, std::size_t)>& coeff) {
  const std::vector<GradedObject> slots(n, obj);
  std::map<std::size_t, std::size_t> pos;
  std::vector<std::size_t> orbit;
  {
    auto digits = tensor_digits(seed, slots);
    std::sort(digits.begin(), digits.end());
    do orbit.push_back(tensor_index(digits, slots));
    while (std::next_permutation(digits.begin(), digits.end()));
    std::sort(orbit.begin(), orbit.end());
    for (std::size_t i = 0; i < orbit.size(); ++i) pos[orbit[i]] = i;
  }
  Matrix block(orbit.size(), orbit.size());
  for_each_permutation(n, [&](const Permutation& s) {
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      const auto img = permute_basis_tensor(s, slots, orbit[j]);
      const Rational c = coeff(s, orbit[j]);
      if (c == 0) continue;
      block(pos.at(img.index), j) += img.sign > 0 ? c : Rational(-c);
    }
  });
  return {std::move(orbit), std::move(block)};
}

/// Representatives (sorted digit strings) of the S_n-orbits on basis tensors.
inline std::vector<std::size_t> orbit_representatives(const GradedObject& obj, std::size_t n) {
  const std::vector<GradedObject> slots(n, obj);
  std::vector<std::size_t> reps;
  std::vector<std::size_t> digits(n, 0);
  if (obj.dim() == 0) return reps;
  // nondecreasing digit sequences
  for (;;) {
    reps.push_back(tensor_index(digits, slots));
    std::size_t k = n;
    while (k > 0 && digits[k - 1] + 1 == obj.dim()) --k;
    if (k == 0) break;
    ++digits[k - 1];
    for (std::size_t l = k; l < n; ++l) digits[l] = digits[k - 1];
  }
  return reps;
}

enum class ProjectorKind { Antisymmetric, Symmetric };

/// Coefficient of sigma on basis tensor t. The Koszul character is divided
/// out so the graded projectors cut out super exterior / super symmetric
/// powers of dimension sum_{i+j=n} C(p,i) C(q,j) (resp. the symmetric
/// analogue).
inline std::function<Rational(const Permutation&, std::size_t)> projector_coefficient(ProjectorKind kind,
                                                                                        const GradedObject& obj,
                                                                                        std::size_t n) {
  const Rational inv_fact = Rational(1) / factorial(static_cast<unsigned>(n));
  const std::vector<GradedObject> slots(n, obj);
  return [=](const Permutation& s, std::size_t t) {
    Rational c = inv_fact;
    if (kind == ProjectorKind::Antisymmetric && s.sign() < 0) c = -c;
    if (koszul_character(s, slots, t) < 0) c = -c;
    return c;
  };
}

inline Matrix projector(ProjectorKind kind, const GradedObject& obj, std::size_t n) {
  if (n == 0) throw InputError("projector degree must be at least 1");
  check_symmetric_degree(n);
  const std::vector<GradedObject> slots(n, obj);
  const std::size_t d = tensor_dim(slots);
  Matrix m(d, d);
  const auto coeff = projector_coefficient(kind, obj, n);
  for (auto rep : orbit_representatives(obj, n)) {
    auto [orbit, block] = orbit_block(obj, n, rep, coeff);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::size_t j = 0; j < orbit.size(); ++j) m(orbit[i], orbit[j]) = block(i, j);
  }
  return m;
}

/// The projector absorbs each P(sigma) up to a sign, so its image on an
/// orbit block is spanned by the image of one basis tensor. The 1/n! factor
/// does not affect vanishing, so images are accumulated over the integers.
inline std::size_t projector_rank(ProjectorKind kind, const GradedObject& obj, std::size_t n) {
  if (n == 0) throw InputError("projector degree must be at least 1");
  check_symmetric_degree(n);
  const std::vector<GradedObject> slots(n, obj);
  std::size_t r = 0;
  for (auto rep : orbit_representatives(obj, n)) {
    std::map<std::size_t, long> image;
    for_each_permutation(n, [&](const Permutation& s) {
      const auto img = permute_basis_tensor(s, slots, rep);
      int c = img.sign * koszul_character(s, slots, rep);
      if (kind == ProjectorKind::Antisymmetric) c *= s.sign();
      image[img.index] += c;
    });
    if (std::any_of(image.begin(), image.end(), [](const auto& kv) { return kv.second != 0; })) ++r;
  }
  return r;
}

}  // namespace detail

/// a_n = (1/n!) sum sgn(sigma) sigma on A^{(x) n}.
inline Matrix antisymmetrizer(const GradedObject& obj, std::size_t n) {
  return detail::projector(detail::ProjectorKind::Antisymmetric, obj, n);
}

/// s_n = (1/n!) sum sigma on A^{(x) n}.
inline Matrix symmetrizer(const GradedObject& obj, std::size_t n) {
  return detail::projector(detail::ProjectorKind::Symmetric, obj, n);
}

/// Ranks computed block by block over S_n-orbits of basis tensors, so large
/// tensor powers never need a dense (d^n x d^n) matrix.
inline std::size_t antisymmetrizer_rank(const GradedObject& obj, std::size_t n) {
  return detail::projector_rank(detail::ProjectorKind::Antisymmetric, obj, n);
}

inline std::size_t symmetrizer_rank(const GradedObject& obj, std::size_t n) {
  return detail::projector_rank(detail::ProjectorKind::Symmetric, obj, n);
}

// ---------------------------------------------------------------------------
// Exterior and symmetric power traces

namespace detail {

inline Rational cycle_type_sum(const Matrix& f, std::size_t n, bool alternating) {
  if (f.rows() != f.cols()) throw InputError("expected a square matrix");
  if (n == 0) return 1;
  check_symmetric_degree(n);
  std::vector<Rational> power_traces(n + 1);
  Matrix p = Matrix::identity(f.rows());
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * f;
    power_traces[k] = trace(p);
  }
  Rational sum = 0;
  for_each_permutation(n, [&](const Permutation& s) {
    Rational term = (alternating && s.sign() < 0) ? -1 : 1;
    for (const auto& c : s.cycles()) term *= power_traces[c.size()];
    sum += term;
  });
  return sum / factorial(static_cast<unsigned>(n));
}

}  // namespace detail

/// tr(Lambda^n f) = (1/n!) sum_sigma sgn(sigma) prod_cycles tr(f^{length}).
inline Rational lambda_trace(const Matrix& f, std::size_t n) { return detail::cycle_type_sum(f, n, true); }

/// tr(S^n f) = (1/n!) sum_sigma prod_cycles tr(f^{length}).
inline Rational sym_trace(const Matrix& f, std::size_t n) { return detail::cycle_type_sum(f, n, false); }

/// Power sums t_1..t_n to elementary symmetric e_1..e_n:
/// k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} t_i.
inline std::vector<Rational> power_to_elementary(const std::vector<Rational>& t) {
  std::vector<Rational> e(t.size() + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= t.size(); ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += (i % 2 == 1 ? 1 : -1) * e[k - i] * t[i - 1];
    e[k] = s / Rational(static_cast<long>(k));
  }
  return {e.begin() + 1, e.end()};
}

/// Inverse of power_to_elementary, solving the same identities for t_k.
inline std::vector<Rational> elementary_to_power(const std::vector<Rational>& e_in) {
  std::vector<Rational> e(e_in.size() + 1);
  e[0] = 1;
  std::copy(e_in.begin(), e_in.end(), e.begin() + 1);
  std::vector<Rational> t(e_in.size());
  for (std::size_t k = 1; k <= e_in.size(); ++k) {
    // k e_k = sum_{i<k} (-1)^{i-1} e_{k-i} t_i + (-1)^{k-1} t_k
    Rational s = Rational(static_cast<long>(k)) * e[k];
    for (std::size_t i = 1; i < k; ++i) s -= (i % 2 == 1 ? 1 : -1) * e[k - i] * t[i - 1];
    t[k - 1] = (k % 2 == 1) ? s : Rational(-s);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Kimura dimension

/// dim s-Lambda^n of A = A+ (+) A- with dims (p, q): sum_{i+j=n} C(p,i) C(q,j).
inline Integer super_exterior_dim(const GradedObject& obj, std::size_t n) {
  Integer s = 0;
  for (std::size_t i = 0; i <= n; ++i)
    s += binomial(static_cast<long>(obj.even), static_cast<long>(i)) *
         binomial(static_cast<long>(obj.odd), static_cast<long>(n - i));
  return s;
}

struct KimuraReport {
  std::size_t kim = 0;
  std::size_t first_vanishing = 0;
  long super_dim = 0;
};

inline KimuraReport kimura_dim(const GradedObject& obj) {
  KimuraReport r;
  r.kim = obj.dim();
  r.super_dim = obj.super_dim();
  std::size_t n = 1;
  while (super_exterior_dim(obj, n) != 0) ++n;
  r.first_vanishing = n;
  if (r.first_vanishing != r.kim + 1) throw InternalError("first vanishing exterior power is not kim + 1");
  return r;
}

// ---------------------------------------------------------------------------
// Numerically trivial morphisms

/// Kernel of the pairing (f, g) -> tr(g o f) on span(fs) x span(gs), as a
/// subspace of coefficient vectors over `fs`. With `source` given, the
/// supertrace on that object is used.
inline Subspace numerically_trivial(const std::vector<Matrix>& fs, const std::vector<Matrix>& gs,
                                    const std::optional<GradedObject>& source = std::nullopt) {
  Matrix gram(fs.size(), gs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j) {
      if (gs[j].cols() != fs[i].rows() || gs[j].rows() != fs[i].cols())
        throw InputError("hom-space bases are not mutually composable");
      const Matrix gf = gs[j] * fs[i];
      gram(i, j) = source ? supertrace(gf, *source) : trace(gf);
    }
  return Subspace::span(fs.size(), kernel_basis(transpose(gram)));
}

/// Matrices spanned by coefficient vectors of `sub` over the basis `fs`.
inline std::vector<Matrix> combine(const std::vector<Matrix>& fs, const Subspace& sub) {
  std::vector<Matrix> out;
  for (const auto& c : sub.basis()) {
    Matrix m(fs.at(0).rows(), fs.at(0).cols());
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (c[i] != 0) m = m + c[i] * fs[i];
    out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nagata-Higman

class ExponentHypothesisError : public InputError {
 public:
  ExponentHypothesisError(Matrix witness, std::size_t n)
      : InputError("exponent hypothesis fails: x^" + std::to_string(n) + " != 0 for a witness x"),
        witness_(std::move(witness)) {}
  const Matrix& witness() const { return witness_; }

 private:
  Matrix witness_;
};

struct NagataHigmanReport {
  std::size_t exponent = 0;
  std::size_t bound = 0;               // 2^n - 1
  std::size_t algebra_dim = 0;         // dim of the non-unital algebra generated
  std::size_t vanishing_length = 0;    // least L with R^L = 0
  bool bound_holds = false;
};

namespace detail {

/// Basis (as matrices) of the non-unital algebra generated by `gens`.
inline std::vector<Matrix> generated_algebra(const std::vector<Matrix>& gens) {
  const std::size_t r = gens.at(0).rows(), c = gens.at(0).cols();
  if (r != c) throw InputError("generators must be square");
  for (const auto& g : gens)
    if (g.rows() != r || g.cols() != c) throw InputError("generators must have equal sizes");
  std::vector<Vector> vecs;
  for (const auto& g : gens) vecs.push_back(vectorize(g));
  Subspace span = Subspace::span(r * c, vecs);
  for (;;) {
    std::vector<Vector> more = span.basis();
    for (const auto& a : span.basis())
      for (const auto& b : span.basis()) more.push_back(vectorize(unvectorize(r, c, a) * unvectorize(r, c, b)));
    Subspace next = Subspace::span(r * c, more);
    if (next.dim() == span.dim()) break;
    span = std::move(next);
  }
  std::vector<Matrix> out;
  for (const auto& v : span.basis()) out.push_back(unvectorize(r, c, v));
  return out;
}

/// Sum over all orderings of the multiset `idx` of the products.
inline Matrix symmetrized_product(const std::vector<Matrix>& basis, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  Matrix sum(basis[0].rows(), basis[0].cols());
  do {
    Matrix p = basis[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) p = p * basis[idx[k]];
    sum = sum + p;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return sum;
}

}  // namespace detail

/// Verifies x^n = 0 on the algebra R generated by `gens` (through the
/// multilinearized identity on basis multisets), then finds the least L with
/// R^L = 0 and compares it with 2^n - 1. Throws ExponentHypothesisError with
/// an explicit x when the hypothesis fails.
inline NagataHigmanReport nagata_higman_check(const std::vector<Matrix>& gens, std::size_t n) {
  if (gens.empty()) throw InputError("no generators");
  if (n == 0) throw InputError("exponent must be at least 1");
  if (n > 16) throw InputError("exponent too large");
  const auto basis = detail::generated_algebra(gens);
  const std::size_t k = basis.size();
  const std::size_t sz = gens[0].rows();

  // Multisets of size n from the basis.
  std::vector<std::size_t> idx(n, 0);
  while (k > 0) {
    if (!detail::symmetrized_product(basis, idx).is_zero()) {
      std::vector<std::size_t> support(idx.begin(), idx.end());
      support.erase(std::unique(support.begin(), support.end()), support.end());
      // x^n restricted to span(support) is a nonzero form of degree n, so it
      // is nonzero somewhere on the grid {0..n}^|support|.
      std::vector<std::size_t> coeff(support.size(), 0);
      for (;;) {
        Matrix x(sz, sz);
        for (std::size_t i = 0; i < support.size(); ++i)
          if (coeff[i]) x = x + Rational(static_cast<long>(coeff[i])) * basis[support[i]];
        if (!power(x, static_cast<unsigned>(n)).is_zero()) throw ExponentHypothesisError(x, n);
        std::size_t i = 0;
        while (i < coeff.size() && coeff[i] == n) coeff[i++] = 0;
        if (i == coeff.size()) break;
        ++coeff[i];
      }
      throw InternalError("no witness found for a failing polarized identity");
    }
    std::size_t j = n;
    while (j > 0 && idx[j - 1] + 1 == k) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t l = j; l < n; ++l) idx[l] = idx[j - 1];
  }

  NagataHigmanReport rep;
  rep.exponent = n;
  rep.bound = (std::size_t{1} << n) - 1;
  rep.algebra_dim = k;
  // R^L spans products of L basis elements; R^{L+1} = R^L * R.
  std::vector<Matrix> layer = basis;
  std::size_t length = 1;
  while (!layer.empty()) {
    if (length > rep.bound + 1) break;
    std::vector<Vector> prods;
    for (const auto& a : layer)
      for (const auto& b : basis) prods.push_back(vectorize(a * b));
    const Subspace next = Subspace::span(sz * sz, prods);
    layer.clear();
    for (const auto& v : next.basis()) layer.push_back(unvectorize(sz, sz, v));
    ++length;
  }
  rep.vanishing_length = layer.empty() ? length : 0;
  rep.bound_holds = layer.empty() && rep.vanishing_length <= rep.bound;
  return rep;
}

}  // namespace wedkit

#endif  // WEDKIT_TRACE_HPP
