#ifndef WEDKIT_TESTS_FIXTURES_HPP
#define WEDKIT_TESTS_FIXTURES_HPP

#include "oracles.hpp"

#include <wedkit/wedkit.hpp>

#include <random>
#include <string>
#include <vector>

namespace fixture {

using namespace wedkit;

/// Block upper triangular matrix algebra: diagonal blocks grouped into tied
/// families (equal entries inside a family, giving prod M_{n_t} modulo the
/// radical) and a transitively closed set of free off-diagonal blocks.
struct SplitAlgebra {
  Algebra algebra;
  std::vector<std::size_t> simple_sizes;  // n_t per family
  std::size_t radical_dim = 0;
};

inline SplitAlgebra random_split_algebra(std::mt19937& rng, std::size_t max_size = 6) {
  std::uniform_int_distribution<std::size_t> total_d(2, max_size);
  const std::size_t total = total_d(rng);
  std::vector<std::size_t> block_sizes;
  for (std::size_t left = total; left > 0;) {
    std::uniform_int_distribution<std::size_t> b(1, std::min<std::size_t>(left, 3));
    block_sizes.push_back(b(rng));
    left -= block_sizes.back();
  }
  const std::size_t nb = block_sizes.size();
  std::vector<std::size_t> offset(nb, 0);
  for (std::size_t i = 1; i < nb; ++i) offset[i] = offset[i - 1] + block_sizes[i - 1];

  // Families: tie a block to an earlier block of equal size with probability 1/3.
  std::vector<std::size_t> family(nb);
  std::vector<std::size_t> family_size;
  std::bernoulli_distribution tie(1.0 / 3.0);
  for (std::size_t i = 0; i < nb; ++i) {
    family[i] = family_size.size();
    for (std::size_t j = 0; j < i; ++j)
      if (block_sizes[j] == block_sizes[i] && tie(rng)) {
        family[i] = family[j];
        break;
      }
    if (family[i] == family_size.size()) family_size.push_back(block_sizes[i]);
  }

  // Off-diagonal pattern, then transitive closure.
  std::bernoulli_distribution edge(0.5);
  std::vector<std::vector<bool>> pat(nb, std::vector<bool>(nb, false));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) pat[i][j] = edge(rng);
  for (std::size_t k = 0; k < nb; ++k)
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        if (pat[i][k] && pat[k][j]) pat[i][j] = true;

  std::vector<Matrix> basis;
  for (std::size_t f = 0; f < family_size.size(); ++f)
    for (std::size_t a = 0; a < family_size[f]; ++a)
      for (std::size_t b = 0; b < family_size[f]; ++b) {
        Matrix m(total, total);
        for (std::size_t i = 0; i < nb; ++i)
          if (family[i] == f) m(offset[i] + a, offset[i] + b) = 1;
        basis.push_back(std::move(m));
      }
  std::size_t rad = 0;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j)
      if (pat[i][j])
        for (std::size_t a = 0; a < block_sizes[i]; ++a)
          for (std::size_t b = 0; b < block_sizes[j]; ++b) {
            basis.push_back(matrix_unit(total, offset[i] + a, offset[j] + b));
            ++rad;
          }

  // Scale each semisimple basis vector and shear it by a random radical
  // element; mix the radical basis by a unimodular change. The quotient keeps
  // scaled matrix units while the lift is no longer the obvious inclusion.
  const std::size_t ss = basis.size() - rad;
  const Matrix mix_rad = oracle::random_unimodular(rng, rad);
  std::uniform_int_distribution<int> scale(1, 3), shear(-2, 2);
  std::vector<Matrix> mixed;
  for (std::size_t i = 0; i < ss; ++i) {
    Matrix m = Rational(scale(rng)) * basis[i];
    for (std::size_t j = ss; j < basis.size(); ++j)
      if (const int c = shear(rng); c != 0) m = m + Rational(c) * basis[j];
    mixed.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < rad; ++i) {
    Matrix m(total, total);
    for (std::size_t j = 0; j < rad; ++j)
      if (mix_rad(i, j) != 0) m = m + mix_rad(i, j) * basis[ss + j];
    mixed.push_back(std::move(m));
  }
  return {algebra_from_matrices(mixed), family_size, rad};
}

/// Linear initial section plus a random radical perturbation on every
/// column, for producing a second, independent section.
inline Matrix perturbed_initial_section(const Algebra& a, const RadicalData& rd, std::mt19937& rng) {
  Matrix m = canonical_linear_section(a, rd.quotient);
  std::uniform_int_distribution<int> c(-2, 2);
  for (std::size_t k = 0; k < m.cols(); ++k)
    for (const auto& r : rd.radical.basis()) {
      const Rational s = c(rng);
      if (s == 0) continue;
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, k) += s * r[i];
    }
  return m;
}

struct NamedQuiver {
  std::string name;
  Quiver quiver;
};

/// One orientation of every ADE diagram on at most 8 vertices, in Bourbaki
/// numbering with arrows pointing to the larger index.
inline std::vector<NamedQuiver> ade_quivers() {
  std::vector<NamedQuiver> out;
  auto from_cartan = [](const DynkinType& t) {
    const auto c = cartan_matrix(t);
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (c[i][j] != 0) arrows.emplace_back(i, j);
    return Quiver(c.size(), arrows);
  };
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"A" + std::to_string(n), from_cartan({DynkinFamily::A, n})});
  for (std::size_t n = 4; n <= 8; ++n) out.push_back({"D" + std::to_string(n), from_cartan({DynkinFamily::D, n})});
  for (std::size_t n = 6; n <= 8; ++n) out.push_back({"E" + std::to_string(n), from_cartan({DynkinFamily::E, n})});
  return out;
}

/// Random acyclic quiver: arrows go from lower to higher vertex under a
/// random relabelling.
inline Quiver random_acyclic_quiver(std::mt19937& rng, std::size_t max_vertices = 6, std::size_t max_arrows = 8) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  const std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> na(0, n == 1 ? 0 : max_arrows);
  const std::size_t arrows = na(rng);
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> arr;
  std::uniform_int_distribution<std::size_t> v(0, n - 1);
  while (arr.size() < arrows) {
    std::size_t a = v(rng), b = v(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    arr.emplace_back(label[a], label[b]);
  }
  return Quiver(n, arr);
}

/// Generators of a non-unital algebra in which every element squares to
/// zero but products of two elements need not vanish: left multiplications
/// by a, b, ab on the exterior algebra of Q^2, conjugated, recombined and
/// optionally doubled by a block sum with a square-zero family.
inline std::vector<Matrix> random_nil2_family(std::mt19937& rng) {
  // Exterior algebra basis 1, a, b, ab.
  Matrix la(4, 4), lb(4, 4), lab(4, 4);
  la(1, 0) = 1;
  la(3, 2) = 1;
  lb(2, 0) = 1;
  lb(3, 1) = -1;
  lab(3, 0) = 1;
  std::vector<Matrix> gens{la, lb, lab};
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<Matrix> mixed;
  for (std::size_t k = 0; k < 3; ++k) {
    Matrix m(4, 4);
    for (const auto& g : gens) m = m + Rational(c(rng)) * g;
    mixed.push_back(m);
  }
  mixed.push_back(la + lb);  // keeps a non-square-zero product in play
  const Matrix p = oracle::random_unimodular(rng, 4);
  const Matrix pinv = *inverse(p);
  for (auto& m : mixed) m = p * m * pinv;

  std::bernoulli_distribution extend(0.5);
  if (extend(rng)) {
    // Block sum with matrices [[0, X], [0, 0]] on Q^2 (+) Q^1, which square to zero.
    std::vector<Matrix> out;
    for (const auto& m : mixed) {
      Matrix z(3, 3);
      z(0, 2) = c(rng);
      z(1, 2) = c(rng);
      out.push_back(direct_sum(m, z));
    }
    return out;
  }
  return mixed;
}

}  // namespace fixture

#endif  // WEDKIT_TESTS_FIXTURES_HPP
