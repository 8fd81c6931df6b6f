#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sba/algebra.hpp"

namespace sba {

// Specializations over the one-variable ring {d} on which forgetting the
// decorations is an algebra map.
ParamSet odd_locus_params();   // delta = kappa_L = kappa_R = d, others 1
ParamSet even_locus_params();  // delta = kappa_L = delta_R = d, others 1

// Forgets every decoration; words on the edges are erased.
Diagram strip_blobs(const Diagram& d);
AlgElement strip_blobs(const AlgElement& x);

struct QuotientReport {
  int n = 0;
  std::string locus;  // "odd" or "even"
  bool multiplicative = false;
  std::size_t checked_pairs = 0;
  std::size_t image_dim = 0;
  std::size_t expected_image_dim = 0;  // Catalan number of the target
  std::size_t kernel_dim = 0;
  std::string note;
  bool ok = false;
  std::string to_json() const;
};

// Odd rank: stripping decorations on the odd locus is onto the rank-n
// Temperley-Lieb algebra. `samples` = 0 checks every product pair.
QuotientReport verify_odd_quotient(int n, std::size_t samples = 0,
                                   std::uint64_t seed = 1);

// Even rank: E -> 1, E_i -> U_i, F -> U_n extends on the even locus to a
// map onto the rank n+1 Temperley-Lieb algebra.
QuotientReport verify_even_quotient(int n, std::size_t samples = 0,
                                    std::uint64_t seed = 1);

struct StripCounterexample {
  int n = 0;
  Diagram x;
  Diagram y;
  std::string detail;
};

// At generic parameters, stripping is not multiplicative; returns the
// first basis pair witnessing the failure.
std::optional<StripCounterexample> generic_strip_counterexample(int n);

// Catalan number (target dimensions of the quotient maps).
std::size_t catalan(int n);

}  // namespace sba
