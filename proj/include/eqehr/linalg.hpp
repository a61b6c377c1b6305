#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eqehr/bigint.hpp"
#include "eqehr/polynomial.hpp"

namespace eqehr {

using RatMatrix = std::vector<RatVector>;
using BigIntVector = std::vector<BigInt>;
using BigIntMatrix = std::vector<BigIntVector>;

struct RowEchelon {
  RatMatrix reduced;               // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots; // pivot column of each row
};

RowEchelon row_echelon(RatMatrix a, std::size_t ncols);
std::size_t rank(const RatMatrix& a, std::size_t ncols);
// Basis of {x : a x = 0}, one vector per row.
RatMatrix nullspace(const RatMatrix& a, std::size_t ncols);
// Some solution of a x = b, if any.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b, std::size_t ncols);
BigRational determinant(RatMatrix a);
// Inverse of a square matrix, if it is invertible.
std::optional<RatMatrix> inverse(const RatMatrix& a);
// det(t I - a), monic of degree n.
RatPolynomial characteristic_polynomial(const RatMatrix& a);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatVector multiply(const RatMatrix& a, const RatVector& x);
RatMatrix transpose(const RatMatrix& a, std::size_t ncols);

// Smallest positive rational multiple with coprime integer entries (sign kept).
BigIntVector primitive_integer_vector(const RatVector& v);
BigRational dot(const RatVector& a, const RatVector& b);
BigRational dot(const BigIntVector& a, const RatVector& b);

// Lattice basis (rows) of {x in Z^ncols : e x = 0}.
BigIntMatrix integer_kernel(const BigIntMatrix& e, std::size_t ncols);
// An integer solution of e x = target, if one exists.
std::optional<BigIntVector> solve_integer(const BigIntMatrix& e, const RatVector& target, std::size_t ncols);

}  // namespace eqehr
