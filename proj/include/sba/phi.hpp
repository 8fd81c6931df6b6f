#pragma once

#include <cstdint>
#include <string>

#include "sba/diagram.hpp"
#include "sba/presentation.hpp"

namespace sba {

// Multiplicative image of a word under E_0 -> e, E_i -> e_i, E_n -> f.
ReductionResult phi(const Word& u, int n, const ParamSet& ps);

struct IsoReport {
  int n = 0;
  std::size_t monomial_count = 0;
  std::size_t diagram_count = 0;
  bool bijection = false;
  bool multiplicative = false;
  std::size_t pairs_checked = 0;
  std::string failure;

  bool ok() const {
    return monomial_count == diagram_count && bijection && multiplicative && failure.empty();
  }
  std::string to_json() const;
};

// Mechanical verification that the presented algebra A_n and the diagram
// algebra coincide: equal counts, phi a coefficient-one bijection from
// reduced monomials onto basis diagrams, and reduce/straighten agreement
// on products (exhaustive when sample_pairs == 0, else sampled).
IsoReport verify_isomorphism(int n, std::size_t sample_pairs = 0, std::uint32_t seed = 1);

}  // namespace sba
