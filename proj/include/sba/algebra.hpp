#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "sba/diagram.hpp"

namespace sba {

// Sparse linear combination of basis diagrams with Scalar coefficients.
struct AlgElement {
  int n = 0;
  std::map<Diagram, Scalar> terms;

  static AlgElement zero(int n) { return AlgElement{n, {}}; }
  static AlgElement of(const Diagram& d, const Scalar& c);
  static AlgElement identity(int n, const RingPtr& ring);

  bool is_zero() const { return terms.empty(); }
  AlgElement& add(const Diagram& d, const Scalar& c);
  AlgElement scaled(const Scalar& c) const;

  bool operator==(const AlgElement& o) const { return n == o.n && terms == o.terms; }
  bool operator!=(const AlgElement& o) const { return !(*this == o); }
  std::string to_string() const;
};

AlgElement operator+(const AlgElement& x, const AlgElement& y);
AlgElement operator-(const AlgElement& x, const AlgElement& y);

AlgElement mul(const AlgElement& x, const AlgElement& y, const ParamSet& ps);
AlgElement mul(const Diagram& x, const Diagram& y, const ParamSet& ps);
AlgElement involution(const AlgElement& x);
std::size_t dimension(int n);

// Lazily computed, disk-cached table of basis-pair products.
class StructureTable {
 public:
  StructureTable(int n, ParamSet ps, std::string cache_dir = "");
  ~StructureTable();

  int rank() const { return n_; }
  const std::vector<Diagram>& basis() const { return basis_; }
  const ParamSet& params() const { return ps_; }
  const AlgElement& entry(std::size_t i, std::size_t j);
  void compute_all();
  std::size_t computed() const;
  bool save();  // rewrites the cache file; false if no cache dir
  std::string cache_path() const { return path_; }

 private:
  void load();

  int n_;
  ParamSet ps_;
  std::vector<Diagram> basis_;
  std::map<std::pair<std::size_t, std::size_t>, AlgElement> entries_;
  std::string path_;
  bool dirty_ = false;
  std::mutex mu_;
};

// Temperley-Lieb algebra handle: the same engine restricted to
// undecorated diagrams, with only the loop parameter live.
struct TLAlgebra {
  int n = 0;
  std::vector<Diagram> basis;  // undecorated members, Catalan(n) of them
  ParamSet ps;                 // delta set, wall parameters inert

  Diagram u(int i) const { return gen_ei(n, i); }
  AlgElement mul(const AlgElement& x, const AlgElement& y) const { return sba::mul(x, y, ps); }
};

TLAlgebra tl_algebra(int n, const Scalar& delta);

}  // namespace sba
