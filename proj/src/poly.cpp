#include "sba/poly.hpp"

#include <cassert>
#include <sstream>

namespace sba {

RingPtr PolyRing::make(std::vector<std::string> vars) {
  return RingPtr(new PolyRing(std::move(vars)));
}

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

Poly Poly::zero(RingPtr r) {
  Poly p;
  p.ring_ = std::move(r);
  return p;
}

Poly Poly::constant(RingPtr r, const mpq_class& c) {
  Poly p = zero(std::move(r));
  if (c != 0) {
    Mono m;
    m.e.assign(p.ring_->nvars(), 0);
    p.terms_.emplace(std::move(m), c);
  }
  return p;
}

Poly Poly::var(const RingPtr& r, const std::string& name, long exp) {
  int i = r->index_of(name);
  if (i < 0) throw std::invalid_argument("unknown variable: " + name);
  Mono m;
  m.e.assign(r->nvars(), 0);
  m.e[i] = static_cast<std::int32_t>(exp);
  return monomial(r, std::move(m), 1);
}

Poly Poly::monomial(RingPtr r, Mono m, const mpq_class& c) {
  Poly p = zero(std::move(r));
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto x : terms_.begin()->first.e)
    if (x != 0) return false;
  return true;
}

mpq_class Poly::constant_value() const {
  if (terms_.empty()) return 0;
  assert(is_constant());
  return terms_.begin()->second;
}

long Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.deg();  // graded order: leading term has max degree
}

long Poly::degree_in(int var) const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, (long)m.e[var]);
  return d;
}

long Poly::min_exponent_in(int var) const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::min(d, (long)m.e[var]);
  return d;
}

bool Poly::has_negative_exponents() const {
  for (const auto& [m, c] : terms_)
    for (auto x : m.e)
      if (x < 0) return true;
  return false;
}

const Mono& Poly::leading_mono() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

const mpq_class& Poly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

void Poly::add_term(const Mono& m, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::unify_ring(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  assert(!o.ring_ || !ring_ || ring_ == o.ring_);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  unify_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  unify_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r = zero(ring_ ? ring_ : o.ring_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Mono m;
      m.e.resize(ma.e.size());
      for (std::size_t i = 0; i < ma.e.size(); ++i) m.e[i] = ma.e[i] + mb.e[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const mpq_class& c) const {
  if (c == 0) return zero(ring_);
  Poly r = *this;
  for (auto& [m, cc] : r.terms_) cc *= c;
  return r;
}

Poly Poly::shifted(const Mono& sh) const {
  Poly r = zero(ring_);
  for (const auto& [m, c] : terms_) {
    Mono mm = m;
    for (std::size_t i = 0; i < mm.e.size(); ++i) mm.e[i] += sh.e[i];
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

Poly Poly::shifted_var(int var, long k) const {
  if (k == 0) return *this;
  Poly r = zero(ring_);
  for (const auto& [m, c] : terms_) {
    Mono mm = m;
    mm.e[var] += static_cast<std::int32_t>(k);
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

std::optional<Poly> Poly::divided_exactly_by(const Poly& d) const {
  if (d.is_zero()) throw PoleError("exact division by zero polynomial");
  assert(!has_negative_exponents() && !d.has_negative_exponents());
  Poly q = zero(ring_ ? ring_ : d.ring_);
  Poly r = *this;
  const Mono& dm = d.leading_mono();
  const mpq_class& dc = d.leading_coeff();
  while (!r.is_zero()) {
    const Mono& rm = r.leading_mono();
    Mono t;
    t.e.resize(rm.e.size());
    for (std::size_t i = 0; i < rm.e.size(); ++i) {
      t.e[i] = rm.e[i] - dm.e[i];
      if (t.e[i] < 0) return std::nullopt;
    }
    Poly term = monomial(q.ring(), std::move(t), r.leading_coeff() / dc);
    q += term;
    r -= term * d;
  }
  return q;
}

mpq_class Poly::rational_content() const {
  if (is_zero()) return 0;
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    g = ::gcd(g, c.get_num());
    l = ::lcm(l, c.get_den());
  }
  mpq_class r(abs(g), l);
  r.canonicalize();
  return r;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  mpq_class c = rational_content();
  if (leading_coeff() < 0) c = -c;
  return *this * (1 / c);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading_coeff());
}

namespace {

// Coefficient of var^k, with that variable's exponent zeroed out.
Poly coeff_of(const Poly& p, int var, long k) {
  Poly r = Poly::zero(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (m.e[var] != k) continue;
    Mono mm = m;
    mm.e[var] = 0;
    r += Poly::monomial(p.ring(), std::move(mm), c);
  }
  return r;
}

Poly gcd_rec(const Poly& A, const Poly& B);

// gcd of the coefficients of p viewed as a polynomial in var.
Poly content_in(const Poly& p, int var) {
  Poly g = Poly::zero(p.ring());
  long lo = p.min_exponent_in(var), hi = p.degree_in(var);
  for (long k = lo; k <= hi; ++k) {
    Poly c = coeff_of(p, var, k);
    if (c.is_zero()) continue;
    g = gcd_rec(g, c.primitive_part());
    if (g.is_constant() && !g.is_zero()) return Poly::one(p.ring());
  }
  return g;
}

Poly pseudo_rem(Poly A, const Poly& B, int var) {
  long db = B.degree_in(var);
  Poly lb = coeff_of(B, var, db);
  while (!A.is_zero() && A.degree_in(var) >= db) {
    long da = A.degree_in(var);
    Poly la = coeff_of(A, var, da);
    A = A * lb - (B * la).shifted_var(var, da - db);
    assert(A.is_zero() || A.degree_in(var) < da);
  }
  return A;
}

Poly pp_in(const Poly& p, int var) {
  if (p.is_zero()) return p;
  Poly c = content_in(p, var);
  auto q = p.divided_exactly_by(c);
  assert(q);
  return q->primitive_part();
}

// Heuristic gcd: evaluate one variable at a large integer, recurse, then
// lift the result back by base-xi digit expansion and verify by exact
// division. Falls back to the primitive PRS when reconstruction fails.

mpz_class max_coeff_norm(const Poly& p) {
  mpz_class best = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = abs(c.get_num());
    if (a > best) best = a;
  }
  return best;
}

Poly subst_int(const Poly& p, int var, const mpz_class& xi) {
  std::map<Mono, mpq_class, MonoGradedLexGreater> acc;
  for (const auto& [m, c] : p.terms()) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), xi.get_mpz_t(),
               static_cast<unsigned long>(m.e[var]));
    Mono mm = m;
    mm.e[var] = 0;
    acc[mm] += c * mpq_class(scale);
  }
  Poly out = Poly::zero(p.ring());
  for (auto& [m, c] : acc)
    if (c != 0) out += Poly::monomial(p.ring(), m, c);
  return out;
}

mpz_class smod(const mpz_class& a, const mpz_class& xi) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), xi.get_mpz_t());
  if (r * 2 > xi) r -= xi;
  return r;
}

Poly poly_smod(const Poly& p, const mpz_class& xi) {
  Poly out = Poly::zero(p.ring());
  for (const auto& [m, c] : p.terms()) {
    mpz_class r = smod(c.get_num(), xi);
    if (r != 0) out += Poly::monomial(p.ring(), m, mpq_class(r));
  }
  return out;
}

mpz_class integer_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = abs(c.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool divides_over_z(const Poly& a, const Poly& g) {
  auto q = a.divided_exactly_by(g);
  if (!q) return false;
  for (const auto& [m, c] : q->terms())
    if (c.get_den() != 1) return false;
  return true;
}

// Returns the gcd over Z (content included), so that parent levels can
// reconstruct their digits from it.
std::optional<Poly> gcdheu(const Poly& A, const Poly& B) {
  RingPtr ring = A.ring() ? A.ring() : B.ring();
  if (A.is_constant() && B.is_constant()) {
    mpz_class g;
    mpz_class a = abs(A.constant_value().get_num());
    mpz_class b = abs(B.constant_value().get_num());
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Poly::constant(ring, mpq_class(g));
  }
  int var = -1;
  long best = 0;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    long d = std::min(A.degree_in((int)i), B.degree_in((int)i));
    if (d > best) {
      best = d;
      var = (int)i;
    }
  }
  if (var < 0) {
    // No shared variable: the gcd is the gcd of the integer contents.
    mpz_class ca = integer_content(A), cb = integer_content(B), g;
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Poly::constant(ring, mpq_class(g));
  }

  // The integer content of the gcd is the gcd of the integer contents, so
  // compute it directly; the digit reconstruction below may pick up spurious
  // integer factors (the evaluated images almost always share small primes),
  // and normalising to primitive-part-times-known-content removes them.
  mpz_class cg;
  {
    mpz_class ca = integer_content(A), cb = integer_content(B);
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }

  mpz_class na = max_coeff_norm(A), nb = max_coeff_norm(B);
  mpz_class xi = 2 * (na < nb ? na : nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (best + 1) > 800000)
      return std::nullopt;  // lifted coefficients would be impractically large
    Poly a = subst_int(A, var, xi);
    Poly b = subst_int(B, var, xi);
    if (!a.is_zero() && !b.is_zero()) {
      auto rec = gcdheu(a, b);
      if (rec) {
        Poly gamma = *rec;
        Poly g = Poly::zero(ring);
        mpq_class inv_xi(1, xi);
        long i = 0;
        bool bad = false;
        while (!gamma.is_zero()) {
          Poly d = poly_smod(gamma, xi);
          g += d.shifted_var(var, i);
          gamma = (gamma - d) * inv_xi;
          if (++i > 200000) {
            bad = true;
            break;
          }
        }
        if (!bad && !g.is_zero()) {
          g = g.primitive_part() * mpq_class(cg);
          if (divides_over_z(A, g) && divides_over_z(B, g)) return g;
        }
      }
    }
    xi = xi * 73794 / 27011 + 37;
  }
  return std::nullopt;
}

Poly gcd_rec(const Poly& A, const Poly& B) {
  if (A.is_zero()) return B;
  if (B.is_zero()) return A;
  RingPtr ring = A.ring() ? A.ring() : B.ring();
  if (A.is_constant() || B.is_constant()) return Poly::one(ring);
  int var = -1;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (A.degree_in((int)i) > 0 || B.degree_in((int)i) > 0) {
      var = (int)i;
      break;
    }
  }
  assert(var >= 0);
  if (A.degree_in(var) == 0) return gcd_rec(A, content_in(B, var));
  if (B.degree_in(var) == 0) return gcd_rec(content_in(A, var), B);

  Poly cont = gcd_rec(content_in(A, var), content_in(B, var));
  Poly a = pp_in(A, var), b = pp_in(B, var);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = pseudo_rem(a, b, var);
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : pp_in(r, var);
  }
  Poly g = pp_in(a, var);
  return cont * g;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  assert(!a.has_negative_exponents() && !b.has_negative_exponents());
  Poly pa = a.primitive_part(), pb = b.primitive_part();
  if (!pa.is_zero() && !pb.is_zero()) {
    auto h = gcdheu(pa, pb);
    if (h) return h->monic();
    if (getenv("SBA_GCD_DEBUG")) {
      auto stat = [](const char* tag, const Poly& p) {
        fprintf(stderr, "[gcd] %s terms=%zu", tag, p.terms().size());
        for (std::size_t i = 0; i < p.ring()->nvars(); ++i)
          fprintf(stderr, " d%zu=%ld", i, p.degree_in((int)i));
        mpz_class n = 0;
        for (const auto& [m, c] : p.terms()) {
          mpz_class x = abs(c.get_num());
          if (x > n) n = x;
        }
        fprintf(stderr, " bits=%zu\n", mpz_sizeinbase(n.get_mpz_t(), 2));
      };
      stat("A", pa);
      stat("B", pb);
    }
  }
  Poly g = gcd_rec(pa, pb);
  return g.monic();
}

namespace {

mpq_class mpq_pow_ui(const mpq_class& b, unsigned long e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), b.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), b.get_den().get_mpz_t(), e);
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

mpq_class Poly::eval_q(const std::vector<mpq_class>& vals) const {
  assert(!ring_ || vals.size() == ring_->nvars());
  mpq_class acc = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      long e = m.e[i];
      if (e == 0) continue;
      mpq_class base = vals[i];
      if (e < 0) {
        if (base == 0) throw PoleError("negative power of zero in evaluation");
        base = 1 / base;
        e = -e;
      }
      if (base == 0) {
        t = 0;
        break;
      }
      t *= mpq_pow_ui(base, (unsigned long)e);
    }
    acc += t;
  }
  return acc;
}

std::uint64_t Poly::eval_fp(const std::vector<std::uint64_t>& vals,
                            std::uint64_t p) const {
  assert(!ring_ || vals.size() == ring_->nvars());
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t t = fp_of_mpq(c, p);
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      long e = m.e[i];
      if (e == 0) continue;
      t = fp_mul(t, fp_pow(vals[i] % p, e, p), p);
    }
    acc = (acc + t) % p;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class cc = c;
    if (first) {
      if (cc < 0) {
        os << "-";
        cc = -cc;
      }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    first = false;
    std::string monos;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!monos.empty()) monos += "*";
      monos += ring_->vars()[i];
      if (m.e[i] != 1) monos += "^" + std::to_string(m.e[i]);
    }
    if (monos.empty()) {
      os << cc.get_str();
    } else if (cc == 1) {
      os << monos;
    } else {
      os << cc.get_str() << "*" << monos;
    }
  }
  return os.str();
}

std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (std::uint64_t)((unsigned __int128)a * b % p);
}

std::uint64_t fp_pow(std::uint64_t a, long e, std::uint64_t p) {
  a %= p;
  if (e < 0) {
    a = fp_inv(a, p);
    e = -e;
  }
  std::uint64_t r = 1 % p;
  while (e > 0) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw PoleError("inverse of zero mod p");
  return fp_pow(a, (long)(p - 2), p);
}

std::uint64_t fp_of_mpq(const mpq_class& c, std::uint64_t p) {
  std::uint64_t n = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
  std::uint64_t d = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
  if (d == 0) throw PoleError("coefficient denominator divisible by p");
  return fp_mul(n, fp_inv(d, p), p);
}

}  // namespace sba
