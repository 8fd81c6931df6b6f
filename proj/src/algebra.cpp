#include "sba/algebra.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace sba {

using nlohmann::json;

AlgElement AlgElement::of(const Diagram& d, const Scalar& c) {
  AlgElement x{d.n, {}};
  if (!c.is_zero()) x.terms.emplace(d, c);
  return x;
}

AlgElement AlgElement::identity(int n, const RingPtr& ring) {
  return of(identity_diagram(n), Scalar::one(ring));
}

AlgElement& AlgElement::add(const Diagram& d, const Scalar& c) {
  auto it = terms.find(d);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(d, c);
    return *this;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
  return *this;
}

AlgElement AlgElement::scaled(const Scalar& c) const {
  AlgElement r{n, {}};
  if (c.is_zero()) return r;
  for (const auto& [d, x] : terms) r.terms.emplace(d, x * c);
  return r;
}

std::string AlgElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << " * " << sba::to_string(d);
  }
  return os.str();
}

AlgElement operator+(const AlgElement& x, const AlgElement& y) {
  AlgElement r = x;
  for (const auto& [d, c] : y.terms) r.add(d, c);
  return r;
}

AlgElement operator-(const AlgElement& x, const AlgElement& y) {
  AlgElement r = x;
  for (const auto& [d, c] : y.terms) r.add(d, -c);
  return r;
}

AlgElement mul(const AlgElement& x, const AlgElement& y, const ParamSet& ps) {
  if (x.n != y.n) throw std::invalid_argument("mul: rank mismatch");
  AlgElement r{x.n, {}};
  for (const auto& [d1, c1] : x.terms)
    for (const auto& [d2, c2] : y.terms) {
      ReductionResult p = straighten(concat(d1, d2), ps);
      r.add(p.diagram, c1 * c2 * p.coefficient);
    }
  return r;
}

AlgElement mul(const Diagram& x, const Diagram& y, const ParamSet& ps) {
  ReductionResult p = straighten(concat(x, y), ps);
  return AlgElement::of(p.diagram, p.coefficient);
}

AlgElement involution(const AlgElement& x) {
  AlgElement r{x.n, {}};
  for (const auto& [d, c] : x.terms) r.terms.emplace(flip(d), c);
  return r;
}

std::size_t dimension(int n) { return enumerate_basis(n).size(); }

TLAlgebra tl_algebra(int n, const Scalar& delta) {
  TLAlgebra tl;
  tl.n = n;
  Scalar one = Scalar::one(delta.ring());
  tl.ps = ParamSet{delta, one, one, one, one, one};
  for (const Diagram& d : enumerate_basis(n)) {
    bool plain = true;
    for (const auto& e : d.edges) plain &= e.word.empty();
    if (plain) tl.basis.push_back(d);
  }
  return tl;
}

namespace {

json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({c.get_str(), m.e});
  return terms;
}

Poly json_to_poly(const RingPtr& ring, const json& j) {
  Poly p = Poly::zero(ring);
  for (const auto& t : j) {
    mpq_class c(t.at(0).get<std::string>());
    c.canonicalize();
    Mono m{t.at(1).get<std::vector<std::int32_t>>()};
    if (m.e.size() != ring->nvars()) throw std::invalid_argument("cache: bad exponent vector");
    p = p + Poly::monomial(ring, std::move(m), c);
  }
  return p;
}

json scalar_to_json(const Scalar& s) {
  return json{{"num", poly_to_json(s.num())}, {"den", poly_to_json(s.den())}};
}

Scalar json_to_scalar(const RingPtr& ring, const json& j) {
  return Scalar::frac(json_to_poly(ring, j.at("num")), json_to_poly(ring, j.at("den")));
}

std::string param_header(int n, const ParamSet& ps) {
  std::ostringstream os;
  os << "v1|" << n << '|';
  for (const auto& v : ps.ring()->vars()) os << v << ',';
  os << '|';
  for (const Scalar& s : ps.as_vector()) os << s.to_string() << ';';
  return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

StructureTable::StructureTable(int n, ParamSet ps, std::string cache_dir)
    : n_(n), ps_(std::move(ps)), basis_(enumerate_basis(n)) {
  if (!cache_dir.empty()) {
    std::ostringstream os;
    os << cache_dir << "/structab_n" << n << '_' << std::hex << fnv1a(param_header(n, ps_))
       << ".json";
    path_ = os.str();
    load();
  }
}

StructureTable::~StructureTable() {
  try {
    if (dirty_) save();
  } catch (...) {
  }
}

const AlgElement& StructureTable::entry(std::size_t i, std::size_t j) {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(i, j);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    it = entries_.emplace(key, mul(basis_.at(i), basis_.at(j), ps_)).first;
    dirty_ = true;
  }
  return it->second;
}

void StructureTable::compute_all() {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j) (void)entry(i, j);
}

std::size_t StructureTable::computed() const { return entries_.size(); }

bool StructureTable::save() {
  if (path_.empty()) return false;
  std::lock_guard<std::mutex> lock(mu_);
  json j;
  j["version"] = 1;
  j["header"] = param_header(n_, ps_);
  json entries = json::array();
  std::map<Diagram, std::size_t> index;
  for (std::size_t i = 0; i < basis_.size(); ++i) index[basis_[i]] = i;
  for (const auto& [key, val] : entries_) {
    json terms = json::array();
    for (const auto& [d, c] : val.terms) terms.push_back({index.at(d), scalar_to_json(c)});
    entries.push_back({key.first, key.second, terms});
  }
  j["entries"] = std::move(entries);
  std::ofstream out(path_);
  if (!out) return false;
  out << j.dump();
  dirty_ = false;
  return out.good();
}

void StructureTable::load() {
  std::ifstream in(path_);
  if (!in) return;
  try {
    json j = json::parse(in);
    if (j.at("version").get<int>() != 1) return;
    if (j.at("header").get<std::string>() != param_header(n_, ps_)) return;
    std::map<std::pair<std::size_t, std::size_t>, AlgElement> loaded;
    for (const auto& ent : j.at("entries")) {
      std::size_t a = ent.at(0).get<std::size_t>(), b = ent.at(1).get<std::size_t>();
      AlgElement x{n_, {}};
      for (const auto& t : ent.at(2))
        x.add(basis_.at(t.at(0).get<std::size_t>()), json_to_scalar(ps_.ring(), t.at(1)));
      loaded.emplace(std::make_pair(a, b), std::move(x));
    }
    entries_ = std::move(loaded);
  } catch (...) {
    entries_.clear();  // corrupted or mismatched cache: recompute
  }
}

}  // namespace sba
