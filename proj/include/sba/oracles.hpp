#pragma once

#include <string>
#include <vector>

#include "sba/gram.hpp"
#include "sba/qnum.hpp"

namespace sba {

// Glueing step for tridiagonal Gram families: appends k one-by-one blocks
// with diagonal `delta`, joined to the previous block by off-diagonal ones.
// k = -1 removes the last row and column instead.
Matrix mu(const Matrix& m, int k, const Scalar& delta);

// Temperley-Lieb Gram matrix of the (n-2)-labelled cell at rank n:
// the (n-1) x (n-1) tridiagonal matrix with diagonal `delta`.
Matrix tl_gram_matrix(int n, const Scalar& delta);

// Seed blocks of the one-boundary (blob) Gram families, over the blob
// weight ring where kappa = [l]/[l+1].
Matrix blob_b_plus(const Parametrization& pz);
Matrix blob_b_minus(const Parametrization& pz);

// Blob Gram matrices at rank n (size n): sign +1 is mu_{n-2}(B+), label
// n-2; sign -1 is mu_{n-3}(B-), label -(n-2).
Matrix blob_gram_matrix(int n, int sign, const Parametrization& pz);

// Boundary-decorated (n+1) x (n+1) matrix with kappa_L = [l]/[l+1] on the
// left edge and kappa_R = [r]/[r+1] on the right edge.
Matrix symplectic_boundary_matrix(int n, const Parametrization& pz);

// Condition matrix for the one-column embedding family; its determinant is
// [w1-w2+n-2] up to sign over the GMP weights.
Matrix embedding_condition_matrix(int n, const Parametrization& pz);

struct OracleCheck {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  bool ok() const;
  std::string to_json() const;
};

// Runs every closed-form determinant identity for the tridiagonal,
// one-boundary and two-boundary matrix families.
OracleReport run_oracles();

}  // namespace sba
