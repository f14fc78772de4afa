#include <doctest.h>

#include <cmath>

#include "rfun/analysis.hpp"
#include "rfun/errors.hpp"
#include "rfun/rfunc.hpp"

using namespace rfun;
using doctest::Approx;

namespace {
double conjectured_star(int m) { return 4.0 * (m - 1.0) / m; }
}  // namespace

TEST_CASE("inflection point") {
  SUBCASE("m >= 5 via g = f") {
    // Reference abscissas from a 40-digit root solve of R'' = 0.
    const std::pair<int, double> refs[] = {
        {5, 3.8815614432692933005}, {9, 5.2865673273746111358}, {40, 10.117173410469376243}};
    for (auto [m, ref] : refs) {
      const auto res = find_inflection(Dimension(m));
      REQUIRE(res.lambda0);
      CHECK(*res.lambda0 == Approx(ref).epsilon(1e-11));
      CHECK(*res.lambda0 > 1.0);
      CHECK(*res.lambda0 < m - 1.0);
      const RPoint p(Dimension(m), *res.lambda0);
      CHECK(std::abs(g_value(p) - f_value(p)) < 1e-10);
      CHECK(res.bracket.second - res.bracket.first < 1e-12);
    }
  }
  SUBCASE("m in {3, 4} lies above m - 1") {
    const auto r3 = find_inflection(Dimension(3));
    REQUIRE(r3.lambda0);
    CHECK(*r3.lambda0 == Approx(2.8072681947892630279).epsilon(1e-11));
    CHECK(*r3.lambda0 > 2.0);
    const auto r4 = find_inflection(Dimension(4));
    REQUIRE(r4.lambda0);
    CHECK(*r4.lambda0 == Approx(3.3993467106760575045).epsilon(1e-11));
  }
  SUBCASE("m = 2 has none") {
    CHECK_FALSE(find_inflection(Dimension(2)).lambda0.has_value());
  }
  CHECK_THROWS_AS(find_inflection(Dimension(5), 0.0), ArgumentError);
  CHECK_THROWS_AS(find_inflection(Dimension(5), -1.0), ArgumentError);
}

TEST_CASE("bracket endpoints straddle the root") {
  for (int m : {3, 4, 6, 20}) {
    const auto res = find_inflection(Dimension(m), 1e-6);
    const Dimension dim(m);
    const RPoint lo(dim, res.bracket.first);
    const RPoint hi(dim, res.bracket.second);
    const double a = g_value(lo) - f_value(lo);
    const double b = g_value(hi) - f_value(hi);
    CHECK(a * b <= 0.0);
    // Residual target is enforced even with a loose width tolerance.
    const RPoint p(dim, *res.lambda0);
    CHECK(std::abs(g_value(p) - f_value(p)) < 1e-10);
  }
}

TEST_CASE("sign changes of R''") {
  CHECK(count_r_second_sign_changes(Dimension(2), 10'000) == 0);
  CHECK(count_r_second_sign_changes(Dimension(5), 10'000) == 1);
  CHECK(count_r_second_sign_changes(Dimension(40), 10'000) == 1);
  CHECK(certify_unique_inflection(Dimension(2), 10'000).pass);
  CHECK(certify_unique_inflection(Dimension(4), 10'000).pass);
  CHECK_THROWS_AS(certify_unique_inflection(Dimension(4), 100), ArgumentError);
}

TEST_CASE("tangent point of the convex envelope") {
  SUBCASE("degenerate at m = 2") {
    const auto hull = find_tangent(Dimension(2));
    CHECK(hull.degenerate);
    CHECK(hull.lambda_star == 2.0);
    CHECK(hull.slope > 0.0);
  }
  for (int m = 3; m <= 40; ++m) {
    CAPTURE(m);
    const auto hull = find_tangent(Dimension(m));
    CHECK_FALSE(hull.degenerate);
    CHECK(std::abs(hull.lambda_star - conjectured_star(m)) < 1e-8);
    const RPoint p(Dimension(m), hull.lambda_star);
    const double residual =
        r_first(p) * (m - hull.lambda_star) - (std::log2(m) - r_value(p));
    CHECK(std::abs(residual) < 1e-9);
    CHECK(hull.slope == Approx(r_first(p)).epsilon(1e-9));
    CHECK(hull.lambda_star <= *find_inflection(Dimension(m)).lambda0 + 1e-9);
  }
  CHECK_THROWS_AS(find_tangent(Dimension(4), 0.0), ArgumentError);
}

TEST_CASE("hull values") {
  CHECK(hull_value(Dimension(4), 1.0) == 0.0);
  CHECK(hull_value(Dimension(4), 4.0) == Approx(2.0).epsilon(1e-14));
  CHECK(hull_value(Dimension(3), 2.9) < r_value(RPoint(Dimension(3), 2.9)));
  CHECK(hull_value(Dimension(3), 2.0) == r_value(RPoint(Dimension(3), 2.0)));
  CHECK(hull_value(Dimension(5), 5.0, LogBase::natural) == Approx(std::log(5.0)).epsilon(1e-14));
  CHECK_THROWS_AS(hull_value(Dimension(4), 0.99), DomainError);
  CHECK_THROWS_AS(hull_value(Dimension(4), 4.01), DomainError);
}

TEST_CASE("envelope is convex, below R and C1 at the tangent point") {
  for (int m = 2; m <= 40; ++m) {
    CAPTURE(m);
    const Dimension dim(m);
    const ConvexEnvelope env(dim);
    const int n = 10'000;
    double prev2 = env.value(1.0);
    double prev1 = env.value(1.0 + (m - 1.0) / n);
    double worst_gap = -INFINITY;
    double worst_d2 = INFINITY;
    for (int i = 2; i <= n; ++i) {
      const double l = 1.0 + (m - 1.0) * i / n;
      const double h = env.value(l);
      worst_gap = std::max(worst_gap, h - r_value(RPoint(dim, l)));
      worst_d2 = std::min(worst_d2, prev2 - 2.0 * prev1 + h);
      prev2 = prev1;
      prev1 = h;
    }
    CHECK(worst_gap <= 1e-12);
    CHECK(worst_d2 >= -1e-9);

    const auto& d = env.description();
    if (!d.degenerate) {
      const double s = 1e-6;
      const double left = (env.value(d.lambda_star) - env.value(d.lambda_star - s)) / s;
      const double right = (env.value(d.lambda_star + s) - env.value(d.lambda_star)) / s;
      CHECK(std::abs(left - right) < 1e-6);
    }
  }
}

TEST_CASE("lower convex hull of points") {
  const std::vector<std::pair<double, double>> pts = {
      {1.0, 6.0}, {1.5, 5.0}, {2.0, 3.0}, {2.3, 4.0}, {3.0, 1.0}, {3.7, 4.0}, {4.0, 2.0}, {5.0, 6.0}};
  const auto hull = lower_convex_hull(pts);
  const std::vector<double> want_x = {1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(hull.xs() == want_x);
  CHECK(hull(2.5) == Approx(2.0));
  CHECK(hull(0.0) == 6.0);
  CHECK(hull(9.0) == 6.0);
  // Collinear interior points are dropped.
  const auto line = lower_convex_hull({{0, 0}, {1, 1}, {2, 2}});
  CHECK(line.xs().size() == 2);
}

TEST_CASE("sampled hull oracle agrees with the two-piece envelope") {
  for (int m = 2; m <= 12; ++m) {
    CAPTURE(m);
    const Dimension dim(m);
    const ConvexEnvelope env(dim);
    const auto oracle = hull_oracle(dim, 100'000);
    double sup = 0.0;
    for (int i = 0; i <= 20'000; ++i) {
      const double l = 1.0 + (m - 1.0) * (i + 0.37) / 20'000.37;
      sup = std::max(sup, std::abs(oracle(l) - env.value(l)));
    }
    CHECK(sup < 1e-6);
  }
  // The last vertex before the straight segment sits at the tangent point.
  const auto o3 = hull_oracle(Dimension(3), 100'000);
  const double kink = o3.xs()[o3.xs().size() - 2];
  CHECK(std::abs(kink - 8.0 / 3.0) < 1e-3);
  // m = 2: the hull keeps every sample.
  const auto o2 = hull_oracle(Dimension(2), 10'000);
  CHECK(o2.xs().size() > 9'000);
  CHECK_THROWS_AS(hull_oracle(Dimension(3), 10), ArgumentError);
}

TEST_CASE("certificate") {
  SUBCASE("m = 5 passes with the right-interval checks") {
    const auto rep = certify_proof(Dimension(5));
    CHECK(rep.overall);
    bool saw_no_root = false;
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
      if (c.name == "r_second_negative_at_m_minus_1") {
        CHECK(c.measured == Approx(-0.25 * (std::log(3.0 / 8.0) + 1.0)).epsilon(1e-12));
      }
      if (c.name == "no_root_right") saw_no_root = true;
    }
    CHECK(saw_no_root);
  }
  SUBCASE("m = 3 marks the m >= 5 claims not applicable") {
    const auto rep = certify_proof(Dimension(3));
    CHECK(rep.overall);
    for (const auto& c : rep.checks) {
      if (c.name == "r_second_negative_at_m_minus_1") {
        CHECK(c.claim.rfind("not applicable", 0) == 0);
        CHECK(c.measured > 0.0);
      }
    }
  }
  SUBCASE("m = 2 reports no inflection") {
    const auto rep = certify_proof(Dimension(2));
    CHECK(rep.overall);
  }
  SUBCASE("sweep") {
    for (int m = 5; m <= 64; ++m) {
      CAPTURE(m);
      const auto rep = certify_proof(Dimension(m));
      for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
      }
      CHECK(rep.overall);
    }
    CHECK(certify_proof(Dimension(12)).overall);
  }
  SUBCASE("right-interval certificate") {
    CHECK_THROWS_AS(certify_no_root_right(Dimension(4)), ArgumentError);
    const auto c5 = certify_no_root_right(Dimension(5));
    CHECK(c5.pass);
    const auto parts = no_root_right_checks(Dimension(100), 10'000);
    CHECK(parts[1].measured == Approx(std::log(98.0 / 198.0)).epsilon(1e-13));
    CHECK(parts[1].measured > std::log(3.0 / 8.0));
  }
  SUBCASE("overall is the conjunction of the checks") {
    CertificateReport rep(Dimension(5));
    rep.add({"a", "", 0, 0, true});
    CHECK(rep.overall);
    rep.add({"b", "", 0, 0, false});
    CHECK_FALSE(rep.overall);
    rep.add({"c", "", 0, 0, true});
    CHECK_FALSE(rep.overall);
  }
}
