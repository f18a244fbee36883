#ifndef WEDKIT_SUBSPACE_HPP
#define WEDKIT_SUBSPACE_HPP

#include <wedkit/matrix.hpp>

#include <vector>

namespace wedkit {

/// Linear subspace of Q^n stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
      if (v.size() != ambient_dim) throw InputError("vector length does not match ambient dimension");
    Echelon e = row_reduce(Matrix::from_rows(vectors));
    s.pivots_ = e.pivots;
    for (std::size_t i = 0; i < e.rank(); ++i) s.basis_.push_back(e.reduced.row(i));
    return s;
  }

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

  static Subspace full(std::size_t ambient_dim) {
    std::vector<Vector> e;
    for (std::size_t i = 0; i < ambient_dim; ++i) e.push_back(unit_vector(ambient_dim, i));
    return span(ambient_dim, e);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const& { return basis_; }
  std::vector<Vector> basis() && { return std::move(basis_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Subtracts basis multiples so that every pivot coordinate becomes zero.
  /// The result is a canonical representative of v modulo this subspace.
  Vector reduce(Vector v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rational c = v[pivots_[i]];
      if (c != 0) axpy(v, -c, basis_[i]);
    }
    return v;
  }

  bool contains(const Vector& v) const { return wedkit::is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  /// Coordinates outside the pivot set; the matching unit vectors span a
  /// complement.
  std::vector<std::size_t> complement_indices() const {
    std::vector<bool> piv(ambient_, false);
    for (auto p : pivots_) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!piv[i]) out.push_back(i);
    return out;
  }

  /// Coordinates of v (which must lie in the subspace) in the echelon basis.
  Vector coordinates(const Vector& v) const {
    if (!contains(v)) throw InputError("vector is not in the subspace");
    Vector c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  Subspace operator+(const Subspace& other) const {
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of a complement of `inner` inside `outer`, made of elements of
/// `outer`.
inline std::vector<Vector> relative_complement(const Subspace& outer, const Subspace& inner) {
  std::vector<Vector> reduced;
  for (const auto& v : outer.basis()) {
    Vector r = inner.reduce(v);
    if (!is_zero(r)) reduced.push_back(std::move(r));
  }
  return Subspace::span(outer.ambient_dim(), reduced).basis();
}

}  // namespace wedkit

#endif  // WEDKIT_SUBSPACE_HPP
