#pragma once

#include <cstdint>
#include <vector>

#include "lierank/half_int_vector.hpp"

namespace lierank::linalg {

/// Rank of the span of the given vectors (exact).
int rank(const std::vector<HalfIntVector>& vs, std::size_t dim);

/// Integer basis of the orthogonal complement of span(vs) in Q^dim, returned
/// as HalfIntVectors with primitive integer coordinates.
std::vector<HalfIntVector> orthogonal_complement(const std::vector<HalfIntVector>& vs,
                                                 std::size_t dim);

/// True iff v lies in span(vs).
bool in_span(const std::vector<HalfIntVector>& vs, const HalfIntVector& v);

}  // namespace lierank::linalg
