#include "lierank/half_int_vector.hpp"

#include <algorithm>

#include "lierank/errors.hpp"

namespace lierank {

HalfIntVector HalfIntVector::from_integers(std::initializer_list<int> coords) {
  return from_integers(std::vector<int>(coords));
}

HalfIntVector HalfIntVector::from_integers(const std::vector<int>& coords) {
  std::vector<int> d(coords.size());
  std::transform(coords.begin(), coords.end(), d.begin(), [](int x) { return 2 * x; });
  return HalfIntVector(std::move(d));
}

HalfIntVector HalfIntVector::unit(std::size_t dim, std::size_t i) {
  HalfIntVector v(dim);
  v.c_[i] = 2;
  return v;
}

bool HalfIntVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

static void require_same_dim(const HalfIntVector& a, const HalfIntVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("vector dimensions differ: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

HalfIntVector HalfIntVector::operator+(const HalfIntVector& o) const {
  HalfIntVector r = *this;
  r += o;
  return r;
}

HalfIntVector& HalfIntVector::operator+=(const HalfIntVector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

HalfIntVector HalfIntVector::operator-(const HalfIntVector& o) const { return *this + (-o); }

HalfIntVector HalfIntVector::operator-() const { return *this * -1; }

HalfIntVector HalfIntVector::operator*(int k) const {
  HalfIntVector r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

std::int64_t dot4(const HalfIntVector& a, const HalfIntVector& b) {
  require_same_dim(a, b);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.c_.size(); ++i) s += std::int64_t{a.c_[i]} * b.c_[i];
  return s;
}

std::string HalfIntVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    if (c_[i] % 2 == 0) {
      s += std::to_string(c_[i] / 2);
    } else {
      s += std::to_string(c_[i]) + "/2";
    }
  }
  return s + ")";
}

std::size_t HalfIntVectorHash::operator()(const HalfIntVector& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : v.doubled()) {
    h ^= static_cast<std::size_t>(x + 0x9e37);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace lierank
