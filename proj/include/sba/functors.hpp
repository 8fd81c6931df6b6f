#pragma once

#include <cstdint>
#include <vector>

#include "sba/cells.hpp"
#include "sba/qnum.hpp"

namespace sba {

// The two corner idempotents used for localisation: E is e/delta_L, F is
// f/delta_R. Cutting at a corner identifies the corner algebra with the
// rank n-1 algebra after swapping one decoration pair.
enum class Corner { E, F };

// Parameter swap induced by the corner identification: E swaps
// delta_L <-> kappa_L, F swaps delta_R <-> kappa_R. Both are involutions.
ParamSet corner_params(const ParamSet& ps, Corner c);

// Localisation kill set: labels whose standard module dies under the
// corner cut. E kills {-n, -n+1}; F kills {-n, n-1}.
bool localisation_kills(int n, int l, Corner c);

// Label of the localised standard module (requires !localisation_kills):
// through E the label negates, through F it is preserved.
int localised_label(int n, int l, Corner c);

// Label of the globalised standard module one rank up. Through E the label
// negates (G), through F it is preserved (G').
int globalised_label(int l, Corner c);

struct LocalisedModule {
  int n = 0;      // rank after localisation
  int label = 0;  // predicted label (meaningful when dim > 0)
  ParamSet ps;    // corner-swapped parameters
  std::size_t dim = 0;
  std::vector<Matrix> action;  // rank-n generator order: e, e_1..e_{n-1}, f
};

// Cuts a standard module at a corner: restricts to the image of the corner
// idempotent and rewrites the corner algebra's generators as rank n-1
// generators. Throws std::logic_error if the idempotent or corner
// dictionary fails structurally.
LocalisedModule localise(const CellModule& m, Corner c);

// Prime-field isomorphism test between a localised module and a standard
// module of the same rank and dimension: looks for an invertible
// intertwiner over F_p at the given evaluation point.
bool isomorphic_fp(const LocalisedModule& a, const CellModule& b,
                   const std::vector<std::uint64_t>& point, std::uint64_t p);

}  // namespace sba
