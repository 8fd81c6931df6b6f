#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sba/qnum.hpp"

namespace sba {

// One edge of a planar (n,n)-diagram. Boundary points are numbered
// clockwise: 0..n-1 are the top nodes 1..n and n..2n-1 are the bottom
// nodes n'..1' (so bottom node k' sits at index 2n-k). Invariant a < b.
// The decoration word is read traversing the edge from a to b.
struct Edge {
  int a = 0, b = 0;
  std::string word;

  bool operator==(const Edge& o) const { return a == o.a && b == o.b && word == o.word; }
  bool operator<(const Edge& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return word < o.word;
  }
};

struct Diagram {
  int n = 0;
  std::vector<Edge> edges;  // sorted by first endpoint

  bool operator==(const Diagram& o) const { return n == o.n && edges == o.edges; }
  bool operator!=(const Diagram& o) const { return !(*this == o); }
  bool operator<(const Diagram& o) const;  // basis order: graded by propagating count
};

// Transient result of concatenation: edge words may be unreduced and
// closed loops (with cyclic words) may be present.
struct PseudoDiagram {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> loops;

  static PseudoDiagram of(const Diagram& d) { return PseudoDiagram{d.n, d.edges, {}}; }
};

struct ReductionResult {
  Scalar coefficient;
  Diagram diagram;
};

Diagram identity_diagram(int n);
Diagram gen_e(int n);          // identity shape, L on strand 1
Diagram gen_f(int n);          // identity shape, R on strand n
Diagram gen_ei(int n, int i);  // cup-cap at (i, i+1), 1 <= i <= n-1
// e, e_1, ..., e_{n-1}, f in that order (so index i is the image of E_i)
std::vector<Diagram> generators(int n);

int propagating_count(const Diagram& d);
int undecorated_propagating_count(const Diagram& d);
Diagram flip(const Diagram& d);

// Stacks d1 over d2 and fuses the middle boundary.
PseudoDiagram concat(const Diagram& d1, const Diagram& d2);

ReductionResult straighten(const PseudoDiagram& pd, const ParamSet& ps);
ReductionResult straighten_random(const PseudoDiagram& pd, const ParamSet& ps,
                                  std::mt19937& rng);

bool is_basis_diagram(const Diagram& d);
std::vector<Diagram> enumerate_basis(int n);

std::string node_name(int idx, int n);
std::string to_string(const Diagram& d);
std::string to_json(const Diagram& d);
Diagram parse_diagram(const std::string& s);

}  // namespace sba
