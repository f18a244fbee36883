#ifndef WEDKIT_POLYNOMIAL_HPP
#define WEDKIT_POLYNOMIAL_HPP

#include <wedkit/rational.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace wedkit {

/// Univariate polynomial over Q, coefficients stored from degree 0 upward
/// with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial(Vector{a}); }
  static Polynomial monomial(std::size_t k, const Rational& a = 1) {
    Vector c(k + 1);
    c[k] = a;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(1); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Vector& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Vector c = c_;
    const Rational lc = leading();
    for (auto& x : c) x /= lc;
    return Polynomial(std::move(c));
  }

  Polynomial derivative() const {
    Vector c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<unsigned long>(i));
    return Polynomial(std::move(c));
  }

  Rational evaluate(const Rational& x) const {
    Rational r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Vector c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Vector c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Vector c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    Vector r = a.c_;
    if (a.degree() < b.degree()) return {Polynomial(), a};
    Vector q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
      const Rational f = r[k + db] / b.leading();
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += "(" + wedkit::to_string(c_[i]) + ")";
      if (i > 0) s += "x^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  Vector c_;
};

/// Monic gcd.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Bezout coefficients: s*a + t*b = gcd(a, b) (monic).
struct Bezout {
  Polynomial gcd, s, t;
};

inline Bezout extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Rational lc = r0.leading();
  Polynomial inv = Polynomial::constant(Rational(1) / lc);
  return {r0 * inv, s0 * inv, t0 * inv};
}

namespace detail {

using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Integer mod(const Integer& a, const Integer& p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return r;
}

inline IntPoly reduce(IntPoly a, const Integer& p) {
  for (auto& x : a) x = mod(x, p);
  trim(a);
  return a;
}

inline IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return reduce(std::move(c), p);
}

inline Integer inverse_mod(const Integer& a, const Integer& p) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw InternalError("non-invertible leading coefficient modulo p");
  return inv;
}

inline std::pair<IntPoly, IntPoly> divmod_mod(IntPoly a, const IntPoly& b, const Integer& p) {
  if (b.empty()) throw InternalError("modular division by zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  const Integer inv = inverse_mod(b.back(), p);
  IntPoly q(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer f = mod(a[k + db] * inv, p);
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k + j] = mod(a[k + j] - f * b[j], p);
  }
  trim(q);
  trim(a);
  return {q, a};
}

inline IntPoly make_monic_mod(IntPoly a, const Integer& p) {
  if (a.empty()) return a;
  const Integer inv = inverse_mod(a.back(), p);
  for (auto& x : a) x = mod(x * inv, p);
  return a;
}

inline IntPoly gcd_mod(IntPoly a, IntPoly b, const Integer& p) {
  while (!b.empty()) {
    IntPoly r = divmod_mod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic_mod(std::move(a), p);
}

inline IntPoly powmod_mod(IntPoly base, Integer e, const IntPoly& f, const Integer& p) {
  IntPoly result{1};
  result = divmod_mod(result, f, p).second;
  base = divmod_mod(base, f, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = divmod_mod(mul_mod(result, base, p), f, p).second;
    e >>= 1;
    if (e > 0) base = divmod_mod(mul_mod(base, base, p), f, p).second;
  }
  return result;
}

inline IntPoly sub_mod(IntPoly a, const IntPoly& b, const Integer& p) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return reduce(std::move(a), p);
}

inline IntPoly derivative(const IntPoly& a) {
  IntPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

/// Cantor-Zassenhaus equal-degree splitting of a monic squarefree g whose
/// irreducible factors all have degree d (p odd).
inline void equal_degree_split(const IntPoly& g, std::size_t d, const Integer& p, gmp_randclass& rng,
                               std::vector<IntPoly>& out) {
  if (g.size() - 1 == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  const Integer e = (pd - 1) / 2;
  for (;;) {
    IntPoly a(g.size() - 1);
    for (auto& x : a) x = rng.get_z_range(p);
    trim(a);
    if (a.size() < 2) continue;
    IntPoly b = sub_mod(powmod_mod(a, e, g, p), IntPoly{1}, p);
    IntPoly h = gcd_mod(g, b, p);
    if (h.size() > 1 && h.size() < g.size()) {
      IntPoly other = make_monic_mod(divmod_mod(g, h, p).first, p);
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(other, d, p, rng, out);
      return;
    }
  }
}

/// Monic irreducible factors mod p of a monic squarefree f.
inline std::vector<IntPoly> factor_mod_p(IntPoly f, const Integer& p) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eedULL);
  std::vector<IntPoly> out;
  const IntPoly x{0, 1};
  IntPoly h = x;
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = powmod_mod(h, p, f, p);
    IntPoly g = gcd_mod(f, sub_mod(h, x, p), p);
    if (g.size() > 1) {
      equal_degree_split(g, d, p, rng, out);
      f = make_monic_mod(divmod_mod(f, g, p).first, p);
      h = divmod_mod(h, f, p).second;
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

inline Integer content(const IntPoly& a) {
  Integer g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

inline IntPoly primitive_part(IntPoly a) {
  Integer c = content(a);
  if (c == 0) return a;
  if (a.back() < 0) c = -c;
  for (auto& x : a) x /= c;
  return a;
}

inline Polynomial to_rational(const IntPoly& a) {
  Vector c(a.begin(), a.end());
  return Polynomial(std::move(c));
}

/// Factors a primitive squarefree integer polynomial of positive degree into
/// primitive irreducible factors (Zassenhaus with a single large prime).
inline std::vector<IntPoly> factor_squarefree_integer(const IntPoly& g) {
  const std::size_t n = g.size() - 1;
  if (n == 1) return {g};

  Integer norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer lc = abs(g.back());
  Integer bound = lc * root;
  bound <<= static_cast<mp_bitcnt_t>(n);
  Integer p = 2 * bound + 1;
  if (p < 3) p = 3;
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (mod(g.back(), p) == 0) continue;
    IntPoly gp = reduce(g, p);
    if (gcd_mod(gp, reduce(derivative(g), p), p).size() == 1) break;
  }

  std::vector<IntPoly> modular = factor_mod_p(make_monic_mod(reduce(g, p), p), p);
  std::vector<IntPoly> found;
  IntPoly rest = g;
  const Integer half = p / 2;
  std::size_t s = 1;
  while (2 * s <= modular.size()) {
    bool progressed = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      IntPoly cand{mod(rest.back(), p)};
      for (auto i : idx) cand = mul_mod(cand, modular[i], p);
      for (auto& c : cand)
        if (c > half) c -= p;
      cand = primitive_part(cand);
      auto [q, r] = divmod(to_rational(rest), to_rational(cand));
      bool integral = r.is_zero();
      if (integral)
        for (const auto& c : q.coefficients())
          if (c.get_den() != 1) integral = false;
      if (integral) {
        found.push_back(cand);
        IntPoly next;
        for (const auto& c : q.coefficients()) next.push_back(c.get_num());
        rest = next;
        std::vector<IntPoly> remaining;
        for (std::size_t i = 0, k = 0; i < modular.size(); ++i) {
          if (k < s && idx[k] == i) {
            ++k;
            continue;
          }
          remaining.push_back(modular[i]);
        }
        modular = std::move(remaining);
        progressed = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == modular.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progressed) ++s;
  }
  if (rest.size() > 1) found.push_back(primitive_part(rest));
  return found;
}

}  // namespace detail

/// Irreducible factor with multiplicity.
struct Factor {
  Polynomial factor;
  unsigned multiplicity;
};

/// Factorisation of a nonzero polynomial into monic irreducibles over Q,
/// sorted by degree and then coefficients for reproducible output.
inline std::vector<Factor> factor(const Polynomial& f) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  std::vector<Factor> out;
  if (f.degree() == 0) return out;

  // Yun's squarefree decomposition (characteristic 0).
  Polynomial monic = f.monic();
  std::vector<std::pair<Polynomial, unsigned>> parts;
  Polynomial a0 = gcd(monic, monic.derivative());
  Polynomial b = divmod(monic, a0).first;
  Polynomial c = divmod(monic.derivative(), a0).first;
  Polynomial d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    Polynomial a = gcd(b, d);
    if (a.degree() > 0) parts.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }

  for (const auto& [part, mult] : parts) {
    Integer l = 1;
    for (const auto& q : part.coefficients())
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    detail::IntPoly ip;
    for (const auto& q : part.coefficients()) ip.push_back(q.get_num() * (l / q.get_den()));
    ip = detail::primitive_part(ip);
    for (const auto& g : detail::factor_squarefree_integer(ip))
      out.push_back({detail::to_rational(g).monic(), mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
    if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
    const auto& a = x.factor.coefficients();
    const auto& b = y.factor.coefficients();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return x.multiplicity < y.multiplicity;
  });
  return out;
}

inline bool is_irreducible(const Polynomial& f) {
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace wedkit

#endif  // WEDKIT_POLYNOMIAL_HPP
