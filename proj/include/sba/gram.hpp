#pragma once

#include <cstdint>
#include <vector>

#include "sba/scalar.hpp"

namespace sba {

// Dense matrices over the fraction field (row major).
using Matrix = std::vector<std::vector<Scalar>>;
using FpMatrix = std::vector<std::vector<std::uint64_t>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols, const RingPtr& ring);
Matrix identity_matrix(std::size_t k, const RingPtr& ring);
Matrix mat_mul(const Matrix& a, const Matrix& b);
bool is_symmetric(const Matrix& m);

// Exact determinant. Denominators are cleared row by row (the factor is
// tracked as a polynomial), then fraction-free Bareiss elimination with row
// pivoting runs over the polynomial ring; every division is exact.
Scalar det(const Matrix& m);

// Rank after exact rational evaluation at a point (ring-variable order).
int rank_at(const Matrix& m, const std::vector<mpq_class>& point);

// Entry-wise evaluation at a prime-field point (ring-variable order).
FpMatrix eval_fp_matrix(const Matrix& m, const std::vector<std::uint64_t>& point,
                        std::uint64_t p);
FpMatrix fp_mat_mul(const FpMatrix& a, const FpMatrix& b, std::uint64_t p);
int rank_fp(FpMatrix m, std::uint64_t p);
// Basis of the right null space, as vectors of length = column count.
std::vector<std::vector<std::uint64_t>> kernel_fp(FpMatrix m, std::uint64_t p);

}  // namespace sba
