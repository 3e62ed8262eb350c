#include "subangle/exterior.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace subangle::exterior {

namespace {

void require_compatible(const Multivector& a, const Multivector& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) {
    throw DimensionError(std::string(op) + ": operands live in different algebras (n=" +
                         std::to_string(a.ambient_dim()) + " vs n=" +
                         std::to_string(b.ambient_dim()) + ")");
  }
}

void require_orientation(const Multivector& a, const Orientation& o, const char* op) {
  if (a.ambient_dim() != o.ambient_dim) {
    throw DimensionError(std::string(op) + ": orientation of a different ambient space");
  }
}

void collect(int p, int next, int q, std::uint32_t mask, std::vector<MultiIndex>& out) {
  if (p == 0) {
    out.push_back(MultiIndex::from_mask(mask));
    return;
  }
  for (int i = next; i <= q - p + 1; ++i) collect(p - 1, i + 1, q, mask | (1u << (i - 1)), out);
}

}  // namespace

MultiIndex MultiIndex::of(std::initializer_list<int> indices) {
  return of(std::span<const int>(indices.begin(), indices.size()));
}

MultiIndex MultiIndex::of(std::span<const int> indices) {
  std::uint32_t mask = 0;
  int previous = 0;
  for (int i : indices) {
    if (i <= previous || i > kMaxAmbient) {
      throw DomainError("multi-index must be strictly increasing within 1.." +
                        std::to_string(kMaxAmbient));
    }
    mask |= 1u << (i - 1);
    previous = i;
  }
  return MultiIndex(mask);
}

MultiIndex MultiIndex::full(int n) {
  return MultiIndex(n >= 32 ? ~0u : (1u << n) - 1u);
}

int MultiIndex::grade() const { return std::popcount(mask_); }

int MultiIndex::max_index() const { return 32 - std::countl_zero(mask_); }

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (mask_ & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto g = grade() <=> other.grade(); g != 0) return g;
  const std::uint32_t diff = mask_ ^ other.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  // The list holding the lowest differing index sorts first.
  const std::uint32_t lowest = diff & (~diff + 1u);
  return (mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string MultiIndex::to_string() const {
  const auto idx = indices();
  const bool compact = idx.empty() || idx.back() < 10;
  std::ostringstream out;
  if (!compact) out << '(';
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (!compact && k > 0) out << ',';
    out << idx[k];
  }
  if (!compact) out << ')';
  return out.str();
}

std::vector<MultiIndex> multi_indices(int p, int q) {
  std::vector<MultiIndex> out;
  if (p < 0 || p > q) return out;
  collect(p, 1, q, 0u, out);
  return out;
}

int perm_sign(MultiIndex i, MultiIndex j) {
  if (!i.disjoint(j)) return 0;
  int inversions = 0;
  for (int b : j.indices()) {
    // Entries of i greater than b must each pass b.
    const std::uint32_t above = b >= 32 ? 0u : ~((1u << b) - 1u);
    inversions += std::popcount(i.mask() & above);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Multivector::Multivector(int ambient_dim, FieldTag field) : n_(ambient_dim), field_(field) {
  if (ambient_dim < 0 || ambient_dim > kMaxAmbient) {
    throw DomainError("exterior algebra supports ambient dimension 0.." +
                      std::to_string(kMaxAmbient) + ", got " + std::to_string(ambient_dim));
  }
}

Multivector Multivector::scalar(int ambient_dim, FieldTag field, Scalar value) {
  return blade(ambient_dim, field, MultiIndex{}, value);
}

Multivector Multivector::blade(int ambient_dim, FieldTag field, MultiIndex index,
                               Scalar coefficient) {
  Multivector out(ambient_dim, field);
  if (index.max_index() > ambient_dim) {
    throw DimensionError("blade index " + index.to_string() + " exceeds ambient dimension");
  }
  out.accumulate(index, coefficient);
  out.prune();
  return out;
}

Multivector Multivector::vector(const Vector& v, FieldTag field) {
  Multivector out(static_cast<int>(v.size()), field);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.accumulate(MultiIndex::from_mask(1u << i), v(i));
  }
  out.prune();
  return out;
}

Scalar Multivector::coefficient(MultiIndex index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Scalar{0.0, 0.0} : it->second;
}

std::optional<int> Multivector::grade() const {
  if (terms_.empty()) return std::nullopt;
  const int g = terms_.begin()->first.grade();
  for (const auto& [index, c] : terms_) {
    if (index.grade() != g) return std::nullopt;
  }
  return g;
}

Multivector Multivector::grade_part(int p) const {
  Multivector out(n_, field_);
  for (const auto& [index, c] : terms_) {
    if (index.grade() == p) out.terms_.emplace(index, c);
  }
  return out;
}

double Multivector::norm() const {
  double sum = 0.0;
  for (const auto& [index, c] : terms_) sum += std::norm(c);
  return std::sqrt(sum);
}

Multivector& Multivector::operator+=(const Multivector& other) {
  require_compatible(*this, other, "add");
  for (const auto& [index, c] : other.terms_) accumulate(index, c);
  prune();
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  require_compatible(*this, other, "subtract");
  for (const auto& [index, c] : other.terms_) accumulate(index, -c);
  prune();
  return *this;
}

Multivector& Multivector::operator*=(Scalar factor) {
  for (auto& [index, c] : terms_) c *= factor;
  prune();
  return *this;
}

void Multivector::accumulate(MultiIndex index, Scalar c) { terms_[index] += c; }

void Multivector::prune() {
  std::erase_if(terms_, [](const auto& term) { return std::abs(term.second) < kPruneThreshold; });
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [index, c] : terms_) {
    const std::string basis = index.empty() ? "" : "u" + index.to_string();
    if (c.imag() == 0.0) {
      const double re = c.real();
      out << (re < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (std::abs(re) != 1.0 || basis.empty()) out << std::abs(re);
    } else {
      out << (first ? "" : " + ") << '(' << c.real() << (c.imag() < 0 ? "-" : "+")
          << std::abs(c.imag()) << "i)";
    }
    out << basis;
    first = false;
  }
  return out.str();
}

Multivector Orientation::top_blade(FieldTag field) const {
  return Multivector::blade(ambient_dim, field, MultiIndex::full(ambient_dim));
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  require_compatible(a, b, "wedge");
  Multivector out(a.ambient_dim(), a.field());
  for (const auto& [i, ca] : a.terms()) {
    for (const auto& [j, cb] : b.terms()) {
      const int sign = perm_sign(i, j);
      if (sign != 0) out.accumulate(i | j, static_cast<double>(sign) * ca * cb);
    }
  }
  out.prune();
  return out;
}

Scalar mv_inner(const Multivector& a, const Multivector& b) {
  require_compatible(a, b, "inner");
  Scalar sum{0.0, 0.0};
  for (const auto& [i, ca] : a.terms()) {
    const auto it = b.terms().find(i);
    if (it != b.terms().end()) sum += conj(ca, a.field()) * it->second;
  }
  return sum;
}

Multivector contraction(const Multivector& a, const Multivector& b) {
  require_compatible(a, b, "contraction");
  Multivector out(a.ambient_dim(), a.field());
  for (const auto& [i, ca] : a.terms()) {
    for (const auto& [j, cb] : b.terms()) {
      if (!i.subset_of(j)) continue;
      const MultiIndex rest = j - i;
      const double sign = perm_sign(i, rest);
      out.accumulate(rest, sign * conj(ca, a.field()) * cb);
    }
  }
  out.prune();
  return out;
}

Multivector star(const Multivector& a, const Orientation& orientation) {
  require_orientation(a, orientation, "star");
  return contraction(a, orientation.top_blade(a.field()));
}

Multivector star_inverse(const Multivector& a, const Orientation& orientation) {
  require_orientation(a, orientation, "star_inverse");
  const int n = a.ambient_dim();
  Multivector out(n, a.field());
  // star(e_K') = sign(K', K) e_K, and star is conjugate-linear.
  for (const auto& [k, c] : a.terms()) {
    const MultiIndex kc = k.complement(n);
    out.accumulate(kc, static_cast<double>(perm_sign(kc, k)) * conj(c, a.field()));
  }
  out.prune();
  return out;
}

Multivector regressive(const Multivector& a, const Multivector& b,
                       const Orientation& orientation) {
  require_compatible(a, b, "regressive");
  return star_inverse(wedge(star(a, orientation), star(b, orientation)), orientation);
}

Multivector blade_from_basis(const Matrix& columns, FieldTag field) {
  const int n = static_cast<int>(columns.rows());
  Multivector out = Multivector::scalar(n, field, 1.0);
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    out = wedge(out, Multivector::vector(columns.col(j), field));
  }
  return out;
}

Multivector project(const Multivector& a, const Matrix& orthonormal) {
  if (orthonormal.rows() != a.ambient_dim()) {
    throw DimensionError("project: basis and multivector ambient dimensions differ");
  }
  const int k = static_cast<int>(orthonormal.cols());
  Multivector out(a.ambient_dim(), a.field());
  std::map<int, bool> grades;
  for (const auto& [index, c] : a.terms()) grades[index.grade()] = true;
  for (const auto& [p, unused] : grades) {
    const Multivector part = a.grade_part(p);
    for (const MultiIndex& j : multi_indices(p, k)) {
      Matrix cols(orthonormal.rows(), p);
      int col = 0;
      for (int idx : j.indices()) cols.col(col++) = orthonormal.col(idx - 1);
      const Multivector basis_blade = blade_from_basis(cols, a.field());
      out += mv_inner(basis_blade, part) * basis_blade;
    }
  }
  return out;
}

}  // namespace subangle::exterior
