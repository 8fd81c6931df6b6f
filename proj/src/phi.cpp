#include "sba/phi.hpp"

#include <map>
#include <random>
#include <sstream>

namespace sba {

ReductionResult phi(const Word& u, int n, const ParamSet& ps) {
  std::vector<Diagram> gens = generators(n);
  ReductionResult acc{Scalar::one(ps.ring()), identity_diagram(n)};
  for (std::uint8_t g : u) {
    ReductionResult step = straighten(concat(acc.diagram, gens[g]), ps);
    acc.coefficient = acc.coefficient * step.coefficient;
    acc.diagram = step.diagram;
  }
  return acc;
}

std::string IsoReport::to_json() const {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"reduced_monomials\":" << monomial_count
     << ",\"basis_diagrams\":" << diagram_count << ",\"bijection\":" << (bijection ? "true" : "false")
     << ",\"multiplicative\":" << (multiplicative ? "true" : "false")
     << ",\"pairs_checked\":" << pairs_checked << ",\"failure\":\"" << failure << "\",\"ok\":"
     << (ok() ? "true" : "false") << "}";
  return os.str();
}

IsoReport verify_isomorphism(int n, std::size_t sample_pairs, std::uint32_t seed) {
  Parametrization par(ParamKind::Generic6);
  ParamSet ps = par.params(n);
  IsoReport rep;
  rep.n = n;

  std::vector<Word> monomials = enumerate_reduced(n);
  std::vector<Diagram> basis = enumerate_basis(n);
  rep.monomial_count = monomials.size();
  rep.diagram_count = basis.size();

  std::map<Diagram, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  std::map<Word, Diagram> image;
  rep.bijection = true;
  std::map<Diagram, Word> preimage;
  for (const Word& u : monomials) {
    ReductionResult r = phi(u, n, ps);
    int doubly = 0;
    for (const auto& e : r.diagram.edges) doubly += e.word.size() >= 2;
    if (!r.coefficient.is_one() || !index.count(r.diagram) || preimage.count(r.diagram) ||
        doubly > 1) {
      rep.bijection = false;
      rep.failure = "phi not a plain bijection at " + word_to_string(u);
      break;
    }
    preimage.emplace(r.diagram, u);
    image.emplace(u, r.diagram);
  }
  if (rep.bijection && image.size() != basis.size()) {
    rep.bijection = false;
    rep.failure = "phi image does not exhaust the diagram basis";
  }

  rep.multiplicative = rep.bijection;
  if (rep.multiplicative) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
    auto check_pair = [&](const Word& u, const Word& v) -> bool {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      Reduced lhs = reduce(uv, n, ps);
      ReductionResult rhs = straighten(concat(image.at(u), image.at(v)), ps);
      ++rep.pairs_checked;
      if (lhs.coeff == rhs.coefficient && image.at(lhs.word) == rhs.diagram) return true;
      rep.multiplicative = false;
      rep.failure = "product mismatch at " + word_to_string(u) + " * " + word_to_string(v);
      return false;
    };
    if (sample_pairs == 0) {
      for (const Word& u : monomials) {
        for (const Word& v : monomials)
          if (!check_pair(u, v)) break;
        if (!rep.multiplicative) break;
      }
    } else {
      for (std::size_t k = 0; k < sample_pairs && rep.multiplicative; ++k)
        check_pair(monomials[pick(rng)], monomials[pick(rng)]);
    }
  }
  return rep;
}

}  // namespace sba
