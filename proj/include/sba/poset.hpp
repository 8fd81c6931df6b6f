#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sba/qnum.hpp"

namespace sba {

// Partial order on the 2n cell labels [-n, n-1]. covers[x] lists the
// labels covered by x (immediately below x).
struct Poset {
  int n = 0;
  std::vector<int> elements;
  std::map<int, std::vector<int>> covers;

  bool strictly_below(int a, int b) const;  // a < b
  bool leq(int a, int b) const;             // a <= b
  std::vector<int> maximal() const;
  std::vector<int> minimal() const;
  std::string to_json() const;
};

// Total refinement: -n < n-1 < -(n-1) < n-2 < ... < 1 < -1 < 0.
Poset chain_poset(int n);

// Layered order: 0 on top covering {1,-1}, each +-l covering {l+1,-(l+1)},
// and +-(n-1) covering the unique minimum -n.
Poset level_poset(int n);

// Coarse order adapted to the observed homomorphisms: 0 covers
// {1,-1,2,-2}, every other x covers {sgn(x)(|x|+2), |x|+3, -(|x|+3)},
// all clipped to [-n, n-1].
Poset coarse_poset(int n);

// Every relation of `weaker` holds in `stronger`.
bool refines(const Poset& weaker, const Poset& stronger);

struct HomEntry {
  int src = 0;
  int dst = 0;
  int dim = 0;
};

struct PosetConsistency {
  int n = 0;
  std::uint64_t p = 0;
  std::vector<HomEntry> nonzero;     // off-diagonal nonzero hom spaces
  std::vector<HomEntry> violations;  // entries not explained by the order
  bool ok = false;
  std::string to_json() const;
};

// Computes all pairwise hom spaces between standard modules at a
// prime-field specialization and checks that every nonzero off-diagonal
// hom S(b) -> S(a) has b strictly below a in the coarse poset.
PosetConsistency poset_consistency(int n, const Parametrization& pz, long W1,
                                   long W2, long Th, std::uint64_t p);

}  // namespace sba
