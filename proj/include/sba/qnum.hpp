#pragma once

#include "sba/scalar.hpp"

namespace sba {

enum class ParamKind { Generic6, Blob, DN, GMP };

std::string param_kind_name(ParamKind k);

// The six parameters (delta, delta_L, delta_R, kappa_L, kappa_R, kappa_LR).
// The auxiliary scalars k_L = k_R coincide with kappa_LR by construction and
// are not stored separately.
struct ParamSet {
  Scalar delta, delta_l, delta_r, kappa_l, kappa_r, kappa_lr;
  bool all_units = true;

  const RingPtr& ring() const { return delta.ring(); }
  std::vector<Scalar> as_vector() const {
    return {delta, delta_l, delta_r, kappa_l, kappa_r, kappa_lr};
  }
  bool operator==(const ParamSet& o) const {
    return delta == o.delta && delta_l == o.delta_l && delta_r == o.delta_r &&
           kappa_l == o.kappa_l && kappa_r == o.kappa_r &&
           kappa_lr == o.kappa_lr;
  }
};

// Argument of a quantum integer: (c0 + c1*w1 + c2*w2 + c3*theta) / den with
// den in {1, 2}. For the Blob and DN kinds w1, w2 play the roles of l, r and
// omega_1, omega_2; theta and half shifts are only representable under GMP.
struct QArg {
  long c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  int den = 1;

  QArg() = default;
  QArg(long m) : c0(m) {}
  QArg(long a0, long a1, long a2, long a3, int d = 1)
      : c0(a0), c1(a1), c2(a2), c3(a3), den(d) {}
  static QArg w1(long shift = 0) { return QArg{shift, 1, 0, 0, 1}; }
  static QArg w2(long shift = 0) { return QArg{shift, 0, 1, 0, 1}; }
  static QArg theta(long shift = 0) { return QArg{shift, 0, 0, 1, 1}; }
  static QArg half(long c0, long c1, long c2, long c3) {
    return QArg{c0, c1, c2, c3, 2};
  }
  QArg operator-() const { return QArg{-c0, -c1, -c2, -c3, den}; }
  std::string to_string() const;
};

// A tagged parameter dictionary. Rings per kind:
//   Generic6: delta, delta_L, delta_R, kappa_L, kappa_R, kappa_LR
//   Blob:     q, ql, qr, kappa_LR       (ql = q^l, qr = q^r)
//   DN:       q, qw1, qw2, b            (qw1 = q^{omega_1}, ...)
//   GMP:      s, a, b, c                (q = s^2, q^{w1} = a^2, q^{w2} = b^2,
//                                        q^{theta} = c^2)
class Parametrization {
 public:
  explicit Parametrization(ParamKind kind);

  ParamKind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }

  // The parameter row of this kind; kappa_LR depends on the parity of n
  // under GMP.
  ParamSet params(int n) const;

  // q^x as a Scalar; throws std::invalid_argument when the shift is not
  // representable in this kind's indeterminates.
  Scalar q_power(const QArg& x) const;
  // The quantum integer [x] = (q^x - q^-x)/(q - q^-1).
  Scalar qnum(const QArg& x) const;
  Scalar qnum_int(long m) const { return qnum(QArg(m)); }

  // Prime-field assignment in ring variable order. Exponential variables are
  // powers of a fixed primitive root g: under GMP s = g, a = g^W1, b = g^W2,
  // c = g^Th; under Blob/DN q = g, q^l = g^W1, q^r = g^W2 and the free symbol
  // receives `extra`. With p = 10007 (p - 1 = 2*5003), a quantum integer
  // [ (c0+c1*w1+c2*w2+c3*theta)/den ] vanishes iff
  // c0 + c1*W1 + c2*W2 + c3*Th == 0 (mod 5003).
  std::vector<std::uint64_t> fp_values(std::uint64_t p, long W1, long W2,
                                       long Th,
                                       std::uint64_t extra = 1) const;

 private:
  ParamKind kind_;
  RingPtr ring_;
};

// Generator rescalings e -> e/alpha, f -> f/beta:
// (delta, delta_L/alpha, delta_R/beta, kappa_L/alpha, kappa_R/beta,
//  kappa_LR/(alpha*beta)).
ParamSet rescale_by(const ParamSet& ps, const Scalar& alpha,
                    const Scalar& beta);
// The four tabulated ways: 1 = (delta_L, delta_R), 2 = (kappa_L, kappa_R),
// 3 = (kappa_L, delta_R), 4 = (delta_L, kappa_R).
ParamSet rescale(const ParamSet& ps, int way);

// Evaluation with a named assignment (exact in Q, or in F_p).
mpq_class specialize_q(const Scalar& x,
                       const std::vector<std::pair<std::string, mpq_class>>& a);
std::uint64_t specialize_fp(
    const Scalar& x,
    const std::vector<std::pair<std::string, std::uint64_t>>& a,
    std::uint64_t p);

std::uint64_t find_primitive_root(std::uint64_t p);

}  // namespace sba
