#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lierank {

/// Exact vector of the Cartan subalgebra. Coordinates are stored doubled, so
/// the stored integer 1 means the true coordinate 1/2.
class HalfIntVector {
 public:
  HalfIntVector() = default;
  explicit HalfIntVector(std::size_t dim) : c_(dim, 0) {}
  explicit HalfIntVector(std::vector<int> doubled) : c_(std::move(doubled)) {}

  /// Build from true integer coordinates (each one doubled on storage).
  static HalfIntVector from_integers(std::initializer_list<int> coords);
  static HalfIntVector from_integers(const std::vector<int>& coords);
  /// Standard basis vector e_i (0-based).
  static HalfIntVector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return c_.size(); }
  const std::vector<int>& doubled() const { return c_; }
  int doubled(std::size_t i) const { return c_[i]; }
  bool is_zero() const;

  HalfIntVector operator+(const HalfIntVector& o) const;
  HalfIntVector operator-(const HalfIntVector& o) const;
  HalfIntVector operator-() const;
  HalfIntVector operator*(int k) const;
  HalfIntVector& operator+=(const HalfIntVector& o);

  /// Inner product in units of 1/4.
  friend std::int64_t dot4(const HalfIntVector& a, const HalfIntVector& b);

  auto operator<=>(const HalfIntVector&) const = default;
  bool operator==(const HalfIntVector&) const = default;

  /// Human form, e.g. "(1,-1/2,0)".
  std::string str() const;

 private:
  std::vector<int> c_;
};

std::int64_t dot4(const HalfIntVector& a, const HalfIntVector& b);

struct HalfIntVectorHash {
  std::size_t operator()(const HalfIntVector& v) const noexcept;
};

}  // namespace lierank
