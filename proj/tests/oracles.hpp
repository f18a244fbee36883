// Independent reference computations used by the tests. They avoid the
// library's algorithms (fraction-free elimination, cycle formulas, root
// strings, Jordan bases) and work straight from definitions.
#ifndef WEDKIT_TESTS_ORACLES_HPP
#define WEDKIT_TESTS_ORACLES_HPP

#include <wedkit/wedkit.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using wedkit::Matrix;
using wedkit::Rational;
using wedkit::Vector;

/// Textbook Gaussian elimination over Q.
inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(p, k));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0)
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) c(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return c;
}

inline Rational trace(const Matrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// Koszul sign of reordering the odd factors, found by bubble-sorting the
/// target positions and counting swaps of two odd factors.
inline int koszul_sign(std::vector<std::size_t> target_pos, const std::vector<bool>& odd) {
  std::vector<bool> par = odd;
  int sign = 1;
  for (std::size_t pass = 0; pass < target_pos.size(); ++pass)
    for (std::size_t k = 0; k + 1 < target_pos.size(); ++k)
      if (target_pos[k] > target_pos[k + 1]) {
        std::swap(target_pos[k], target_pos[k + 1]);
        if (par[k] && par[k + 1]) sign = -sign;
        std::swap(par[k], par[k + 1]);
      }
  return sign;
}

/// Dense signed permutation matrix: factor at source slot j moves to output
/// slot pos[j], where pos = sigma when the operator is sigma^{-1} in the
/// "output slot k receives source factor beta(k)" convention.
inline Matrix move_factors(const std::vector<std::size_t>& pos, const std::vector<wedkit::GradedObject>& src_slots) {
  const std::size_t n = pos.size();
  std::size_t d = 1;
  for (const auto& o : src_slots) d *= o.dim();
  std::vector<wedkit::GradedObject> out_slots(n);
  for (std::size_t j = 0; j < n; ++j) out_slots[pos[j]] = src_slots[j];
  Matrix m(d, d);
  for (std::size_t x = 0; x < d; ++x) {
    std::vector<std::size_t> digits(n);
    std::size_t rest = x;
    for (std::size_t k = n; k-- > 0;) {
      digits[k] = rest % src_slots[k].dim();
      rest /= src_slots[k].dim();
    }
    std::vector<bool> odd(n);
    std::vector<std::size_t> out(n);
    for (std::size_t j = 0; j < n; ++j) {
      odd[j] = src_slots[j].is_odd(digits[j]);
      out[pos[j]] = digits[j];
    }
    std::size_t y = 0;
    for (std::size_t k = 0; k < n; ++k) y = y * out_slots[k].dim() + out[k];
    m(y, x) = koszul_sign(pos, odd);
  }
  return m;
}

/// (Super)trace of sigma^{-1} o (f_0 (x) ... (x) f_{n-1}) from dense
/// matrices; f_i : A_i -> A_{sigma(i)}.
inline Rational twisted_trace(const std::vector<Matrix>& fs, const std::vector<std::size_t>& sigma,
                              const std::vector<wedkit::GradedObject>& objs) {
  Matrix k = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) k = oracle::kron(k, fs[i]);
  std::vector<wedkit::GradedObject> mid(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) mid[i] = objs[sigma[i]];
  // Source slot i of the Kronecker image holds A_{sigma(i)} and returns to slot sigma(i).
  const Matrix f = oracle::multiply(move_factors(sigma, mid), k);
  Rational t = 0;
  std::size_t d = f.rows();
  for (std::size_t x = 0; x < d; ++x) {
    std::size_t rest = x, odd = 0;
    for (std::size_t s = objs.size(); s-- > 0;) {
      odd += objs[s].is_odd(rest % objs[s].dim()) ? 1 : 0;
      rest /= objs[s].dim();
    }
    t += odd % 2 ? Rational(-f(x, x)) : f(x, x);
  }
  return t;
}

inline int perm_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

/// Dense (1/n!) sum sgn(sigma)^[alt] sigma on (Q^d)^{(x) n}.
inline Matrix plain_projector(std::size_t d, std::size_t n, bool alternating) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= d;
  Matrix acc(total, total);
  Rational count = 0;
  const std::vector<wedkit::GradedObject> slots(n, wedkit::GradedObject::ungraded(d));
  do {
    const Matrix m = move_factors(p, slots);
    const int s = alternating ? perm_sign(p) : 1;
    for (std::size_t i = 0; i < total; ++i)
      for (std::size_t j = 0; j < total; ++j)
        if (m(i, j) != 0) acc(i, j) += s * m(i, j);
    count += 1;
  } while (std::next_permutation(p.begin(), p.end()));
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) acc(i, j) /= count;
  return acc;
}

/// tr(Lambda^n f) as tr(a_n f^{(x) n}) on dense matrices.
inline Rational lambda_trace(const Matrix& f, std::size_t n) {
  if (n == 0) return 1;
  Matrix k = f;
  for (std::size_t i = 1; i < n; ++i) k = oracle::kron(k, f);
  return oracle::trace(oracle::multiply(plain_projector(f.rows(), n, true), k));
}

/// Positive roots from the simple roots by closing under the simple
/// reflections s_i(b) = b - <b, a_i> a_i with <x, y> = x^T C y.
inline std::vector<std::vector<int>> reflection_closure_roots(const std::vector<std::vector<int>>& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> todo;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    all.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto b = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += b[j] * cartan[j][i];
      auto r = b;
      r[i] -= pairing;
      if (all.insert(r).second) todo.push_back(r);
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& r : all)
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) pos.push_back(r);
  return pos;
}

/// Cartan matrix of a graph given as an undirected edge list.
inline std::vector<std::vector<int>> cartan_from_edges(std::size_t n,
                                                       const std::vector<std::pair<std::size_t, std::size_t>>& e) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  for (const auto& [a, b] : e) c[a][b] = c[b][a] = -1;
  return c;
}

/// Jordan type from ranks of powers computed with textbook elimination.
inline std::vector<std::size_t> jordan_type(const Matrix& n) {
  std::vector<std::size_t> ranks{n.rows()};
  Matrix p = Matrix::identity(n.rows());
  while (ranks.back() > 0) {
    p = oracle::multiply(p, n);
    ranks.push_back(oracle::rank(p));
  }
  std::vector<std::size_t> parts;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const std::size_t ge_k = ranks[k - 1] - ranks[k];
    const std::size_t ge_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = ge_next; c < ge_k; ++c) parts.push_back(k);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

inline Matrix jordan_block(std::size_t size) {
  Matrix n(size, size);
  for (std::size_t i = 0; i + 1 < size; ++i) n(i, i + 1) = 1;
  return n;
}

/// dim { f : f N_a = N_b f } from the rank of the linear system.
inline std::size_t intertwiner_dim(const Matrix& na, const Matrix& nb) {
  const std::size_t r = nb.rows(), c = na.rows();
  Matrix sys(r * c, r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const std::size_t var = i * c + j;  // f(i, j)
      // (f N_a)(i, k) gets f(i, j) N_a(j, k); (N_b f)(l, j) gets N_b(l, i) f(i, j)
      for (std::size_t k = 0; k < c; ++k)
        if (na(j, k) != 0) sys(i * c + k, var) += na(j, k);
      for (std::size_t l = 0; l < r; ++l)
        if (nb(l, i) != 0) sys(l * c + j, var) -= nb(l, i);
    }
  return r * c - oracle::rank(sys);
}

/// Clebsch-Gordan multiset by the definition of P(m, n).
inline std::vector<std::size_t> clebsch_gordan(std::size_t m, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j <= m + n; ++j) {
    const long diff = static_cast<long>(m) - static_cast<long>(n);
    if (static_cast<long>(j) >= std::labs(diff) && (j + m + n) % 2 == 0) out.push_back(j);
  }
  return out;
}

inline Rational random_rational(std::mt19937& rng, int num = 5, int den = 3) {
  std::uniform_int_distribution<int> nd(-num, num), dd(1, den);
  Rational q(nd(rng), dd(rng));
  q.canonicalize();
  return q;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int num = 5, int den = 3) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng, num, den);
  return m;
}

/// Random invertible matrix: product of unit lower and upper triangular
/// integer matrices.
inline Matrix random_unimodular(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-2, 2);
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = c(rng);
      u(j, i) = c(rng);
    }
  return oracle::multiply(l, u);
}

}  // namespace oracle

#endif  // WEDKIT_TESTS_ORACLES_HPP
