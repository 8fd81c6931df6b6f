#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "sba/quotients.hpp"

using namespace sba;

TEST_CASE("catalan numbers") {
  const std::size_t want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int k = 0; k <= 8; ++k) CHECK(catalan(k) == want[k]);
}

TEST_CASE("locus parameter rows") {
  ParamSet odd = odd_locus_params();
  const auto& R = odd.ring();
  const Scalar d = Scalar::var(R, "d"), one = Scalar::one(R);
  CHECK(odd.delta == d);
  CHECK(odd.delta_l == one);
  CHECK(odd.delta_r == one);
  CHECK(odd.kappa_l == d);
  CHECK(odd.kappa_r == d);
  CHECK(odd.kappa_lr == one);

  ParamSet even = even_locus_params();
  const auto& S = even.ring();
  const Scalar e = Scalar::var(S, "d"), eone = Scalar::one(S);
  CHECK(even.delta == e);
  CHECK(even.delta_l == eone);
  CHECK(even.delta_r == e);
  CHECK(even.kappa_l == e);
  CHECK(even.kappa_r == eone);
  CHECK(even.kappa_lr == eone);
}

TEST_CASE("stripping decorations is idempotent") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(strip_blobs(identity_diagram(n)) == identity_diagram(n));
    CHECK(strip_blobs(gen_e(n)) == identity_diagram(n));
    CHECK(strip_blobs(gen_f(n)) == identity_diagram(n));
    for (int i = 1; i <= n - 1; ++i)
      CHECK(strip_blobs(gen_ei(n, i)) == gen_ei(n, i));
    for (const auto& d : enumerate_basis(n)) {
      Diagram s = strip_blobs(d);
      CHECK(strip_blobs(s) == s);
      CHECK(propagating_count(s) == propagating_count(d));
    }
  }
}

TEST_CASE("odd rank quotient onto Temperley-Lieb") {
  QuotientReport r3 = verify_odd_quotient(3);
  CHECK(r3.n == 3);
  CHECK(r3.locus == "odd");
  CHECK(r3.multiplicative);
  CHECK(r3.checked_pairs == 84 * 84);
  CHECK(r3.image_dim == 5);
  CHECK(r3.expected_image_dim == catalan(3));
  CHECK(r3.kernel_dim == 79);
  CHECK(r3.image_dim + r3.kernel_dim == 84);
  CHECK(r3.ok);
  CHECK(r3.note.find("vanishes") != std::string::npos);
  CHECK(r3.to_json().find("\"locus\"") != std::string::npos);

  QuotientReport r5 = verify_odd_quotient(5, 1500, 12345);
  CHECK(r5.multiplicative);
  CHECK(r5.checked_pairs == 1500);
  CHECK(r5.image_dim == 42);
  CHECK(r5.expected_image_dim == catalan(5));
  CHECK(r5.kernel_dim == 1386);
  CHECK(r5.image_dim + r5.kernel_dim == 1428);
  CHECK(r5.ok);
}

TEST_CASE("even rank quotient onto Temperley-Lieb one rank up") {
  QuotientReport r2 = verify_even_quotient(2);
  CHECK(r2.n == 2);
  CHECK(r2.locus == "even");
  CHECK(r2.multiplicative);
  CHECK(r2.checked_pairs == 19 * 19);
  CHECK(r2.image_dim == 5);
  CHECK(r2.expected_image_dim == catalan(3));
  CHECK(r2.kernel_dim == 14);
  CHECK(r2.image_dim + r2.kernel_dim == 19);
  CHECK(r2.ok);
  CHECK(r2.note.find("equals d-1") != std::string::npos);

  QuotientReport r4 = verify_even_quotient(4, 1500, 12345);
  CHECK(r4.multiplicative);
  CHECK(r4.checked_pairs == 1500);
  CHECK(r4.image_dim == 42);
  CHECK(r4.expected_image_dim == catalan(5));
  CHECK(r4.kernel_dim == 293);
  CHECK(r4.image_dim + r4.kernel_dim == 335);
  CHECK(r4.ok);
}

TEST_CASE("stripping is not multiplicative at generic parameters") {
  auto cex = generic_strip_counterexample(2);
  REQUIRE(cex.has_value());
  CHECK(cex->n == 2);
  CHECK(is_basis_diagram(cex->x));
  CHECK(is_basis_diagram(cex->y));
  CHECK(!cex->detail.empty());
}
