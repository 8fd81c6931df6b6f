#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sba/algebra.hpp"
#include "sba/gram.hpp"
#include "sba/presentation.hpp"

namespace sba {

// Cell labels at rank n: -n, -(n-1), ..., -1, 0, 1, ..., n-1 (2n of them),
// listed in increasing order.
std::vector<int> cell_labels(int n);

// Canonical monomial generating the cell of the given label. The base table
// is: identity -> -n, e -> n-1, f -> -n+1, ef -> n-2 (n >= 3), e_1 -> -(n-2),
// e e_2 -> n-3, e_1 f -> -(n-3), e e_2 f -> n-4; every remaining label is
// reached by the label-preserving wrap w -> F w F from the next lower rank.
Word anchor_word(int n, int l);

// The anchor's diagram; its straightening coefficient must be one.
Diagram cell_generator(int n, int l);

struct CellClass {
  int n = 0;
  int label = 0;
  int phat = 0;  // undecorated propagating count, equals |label|
  Diagram generator;
  std::vector<Diagram> members;  // sorted
};

// Partition of the whole diagram basis into the 2n cell classes: strongly
// connected components of one-sided generator multiplication restricted to
// each propagating stratum, identified by the anchors. Throws
// std::logic_error on structural failure.
std::vector<CellClass> cell_partition(int n, const ParamSet& ps);

struct CellModule {
  int n = 0;
  int label = 0;
  ParamSet ps;
  Diagram generator;
  Diagram theta;               // common support diagram of the pairing
  std::vector<Diagram> basis;  // sorted
  std::vector<Matrix> action;  // generator order: e, e_1, ..., e_{n-1}, f
  Matrix gram;

  std::size_t dim() const { return basis.size(); }
  std::optional<std::size_t> index_of(const Diagram& d) const;
};

// Standard module on the cell of label l: the monomial basis is the closure
// of the anchor under stratum-preserving left multiplication by generators;
// products that drop to a lower stratum act as zero.
CellModule cell_module(int n, int l, const ParamSet& ps);

// Action matrix of an arbitrary element (columns are images of basis
// vectors).
Matrix module_action(const CellModule& m, const AlgElement& x);
Matrix module_action(const CellModule& m, const Diagram& d);

// Bilinear form on diagrams of a stratum: the coefficient of flip(x) * y
// when the product keeps the stratum, else zero. When `theta` is non-null
// the support diagram is checked against it.
Scalar cell_pairing(const Diagram& x, const Diagram& y, int phat,
                    const ParamSet& ps, const Diagram* theta = nullptr);

const Matrix& gram_matrix(const CellModule& m);
Scalar gram_det(const CellModule& m);

struct FormulaMatch {
  std::string id;
  int sign = 0;  // determinant == sign * formula
};

struct GramReport {
  int n = 0;
  int label = 0;
  std::size_t dimension = 0;
  Scalar determinant;
  std::vector<FormulaMatch> matched;  // candidates equal to the determinant up to sign
  std::vector<std::string> tried;     // all candidate ids tested
  std::string to_json() const;
  std::string csv_row() const;  // n,label,dim,det,matched-formula,sign
};

// Closed-form candidates (quantum-integer products over the GMP weights)
// for the Gram determinant of the given label family.
std::vector<std::pair<std::string, Scalar>> gram_formula_candidates(
    int n, int l, const Parametrization& pz);

// Builds the module over pz.params(n) and matches its Gram determinant
// against the closed-form candidates.
GramReport gram_report(int n, int l, const Parametrization& pz);

// Rank of the Gram matrix at a prime-field point: the dimension of the
// simple head at that specialization.
int simple_dim(const CellModule& m, const std::vector<std::uint64_t>& point,
               std::uint64_t p);

// Dimension of the space of module maps src -> tgt over the same ring at a
// prime-field point, via the intertwiner equations for every generator.
int hom_space_dim(const CellModule& src, const CellModule& tgt,
                  const std::vector<std::uint64_t>& point, std::uint64_t p);

// Same, but returns a basis (matrices of size tgt.dim x src.dim, flattened
// row major).
std::vector<FpMatrix> hom_space_basis(const CellModule& src,
                                      const CellModule& tgt,
                                      const std::vector<std::uint64_t>& point,
                                      std::uint64_t p);

// Hom dimension between two explicit generator-action lists (same ring).
int intertwiner_dim_fp(const std::vector<FpMatrix>& src,
                       const std::vector<FpMatrix>& tgt, std::uint64_t p);

// Basis of intertwiners between explicit generator-action lists, as
// matrices of size (tgt dim) x (src dim).
std::vector<FpMatrix> intertwiner_basis_fp(const std::vector<FpMatrix>& src,
                                           const std::vector<FpMatrix>& tgt,
                                           std::uint64_t p);

}  // namespace sba
