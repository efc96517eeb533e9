#include <cmath>
#include <cstring>
#include <random>
#include <set>

#include "doctest.h"
#include "packlab/layout.hpp"

using namespace packlab;

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
const double kPetal3 = 2 * std::sqrt(3.0) - 3;   // flower(3) petal radius
const double kCenter3 = 7 - 4 * std::sqrt(3.0);  // flower(3) center radius

std::map<int, double> uniform_boundary(const ComplexDisk& k, double r) {
  std::map<int, double> out;
  for (int v : k.boundary_cycle()) out[v] = r;
  return out;
}

bool fills_unit_disk(const ComplexDisk& k, const Packing& p, double tol) {
  for (const Disk& d : p.disks)
    if (norm(d.center) + d.radius > 1 + tol) return false;
  for (int v : k.boundary_cycle())
    if (std::abs(norm(p.disks[v].center) + p.disks[v].radius - 1) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("angle_sum: symmetric closed forms") {
  auto hex = generate_hexdisk(1);
  RadiusVector r(hex.vertex_count(), 1.0 / 3.0);
  CHECK(angle_sum(hex, r, 0) == doctest::Approx(2 * kPi).epsilon(1e-14));

  auto f3 = generate_flower(3);
  RadiusVector rf{kCenter3, kPetal3, kPetal3, kPetal3};
  CHECK(angle_sum(f3, rf, 0) == doctest::Approx(2 * kPi).epsilon(1e-14));

  auto single = ComplexDisk::build({{0, 1, 2}});
  RadiusVector rs(3, 1.0);
  for (int v = 0; v < 3; ++v)
    CHECK(angle_sum(single, rs, v) == doctest::Approx(kPi / 3).epsilon(1e-14));
}

TEST_CASE("angle_sum derivative matches central finite differences") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> rad(0.2, 2.5);
  for (int rep = 0; rep < 20; ++rep) {
    auto k = generate_random(2, 4, 500 + rep);
    RadiusVector r(k.vertex_count());
    for (double& x : r) x = rad(rng);
    for (int v = 0; v < k.vertex_count(); ++v) {
      double h = 1e-6 * r[v];
      RadiusVector rp = r, rm = r;
      rp[v] += h;
      rm[v] -= h;
      double fd = (angle_sum(k, rp, v) - angle_sum(k, rm, v)) / (2 * h);
      double an = angle_sum_derivative(k, r, v);
      CHECK(an == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("solve_radii: hex flower with uniform boundary") {
  auto hex = generate_hexdisk(1);
  auto r = solve_radii(hex, uniform_boundary(hex, 1.0 / 3.0));
  CHECK(r[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  SUBCASE("scaling equivariance") {
    double s = 3.7;
    auto rs = solve_radii(hex, uniform_boundary(hex, s / 3.0));
    CHECK(rs[0] == doctest::Approx(s * r[0]).epsilon(1e-10));
  }
}

TEST_CASE("solve_radii: independent of the initial guess") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rad(0.1, 1.0);
  for (int rep = 0; rep < 5; ++rep) {
    auto k = generate_random(2, 6, 900 + rep);
    std::map<int, double> br;
    for (int v : k.boundary_cycle()) br[v] = rad(rng);
    RadiusVector init1(k.vertex_count(), 1.0), init2(k.vertex_count(), 1.0);
    for (int v = 0; v < k.vertex_count(); ++v) {
      init1[v] = rad(rng) * 5;
      init2[v] = rad(rng) * 0.3;
    }
    auto r1 = solve_radii(k, br, {}, &init1);
    auto r2 = solve_radii(k, br, {}, &init2);
    for (int v = 0; v < k.vertex_count(); ++v)
      CHECK(std::abs(r1[v] - r2[v]) / r1[v] < 1e-8);
  }
}

TEST_CASE("solve_radii: bad boundary data is rejected") {
  auto hex = generate_hexdisk(1);
  auto br = uniform_boundary(hex, 0.5);
  br[0] = 0.5;  // covers an interior vertex too
  CHECK_THROWS_AS(solve_radii(hex, br), Error);
  auto br2 = uniform_boundary(hex, 0.5);
  br2.erase(br2.begin());
  CHECK_THROWS_AS(solve_radii(hex, br2), Error);
}

TEST_CASE("layout_centers: hex flower geometry and determinism") {
  auto hex = generate_hexdisk(1);
  RadiusVector r(7, 1.0 / 3.0);
  Anchor anchor{0, {0, 0}, 1, 0.0};
  auto p = layout_centers(hex, r, anchor);
  CHECK(norm(p.disks[0].center) < 1e-15);
  CHECK(p.disks[1].center.x == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(p.disks[1].center.y) < 1e-15);
  // petals at distance 2/3, angles multiples of 60 degrees
  std::set<int> hit;
  for (int v = 1; v < 7; ++v) {
    CHECK(norm(p.disks[v].center) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    double a = angle_of(p.disks[v].center);
    double steps = a / (kPi / 3);
    CHECK(std::abs(steps - std::round(steps)) < 1e-9);
    hit.insert(static_cast<int>(std::llround(steps) + 6) % 6);
  }
  CHECK(hit.size() == 6);

  auto p2 = layout_centers(hex, r, anchor);
  CHECK(std::memcmp(p.disks.data(), p2.disks.data(), sizeof(Disk) * p.disks.size()) == 0);
}

TEST_CASE("layout_centers: violated angle sums are rejected") {
  auto hex = generate_hexdisk(1);
  RadiusVector r(7, 1.0 / 3.0);
  r[0] *= 1.4;  // angle sum at the center now off by a lot
  try {
    layout_centers(hex, r, Anchor{0, {0, 0}, 1, 0.0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::InconsistentRadii);
  }
}

TEST_CASE("maximal packing: flower(3) analytic radii") {
  auto f3 = generate_flower(3);
  auto p = maximal_packing(f3);
  CHECK(std::abs(p.disks[0].radius - kCenter3) < 1e-9);
  for (int v = 1; v <= 3; ++v) CHECK(std::abs(p.disks[v].radius - kPetal3) < 1e-9);
  CHECK(norm(p.disks[0].center) < 1e-12);
  CHECK(fills_unit_disk(f3, p, 1e-9));
}

TEST_CASE("maximal packing: hexdisk(1) radii are 1/3") {
  auto hex = generate_hexdisk(1);
  auto p = maximal_packing(hex);
  for (int v = 0; v < 7; ++v) CHECK(std::abs(p.disks[v].radius - 1.0 / 3.0) < 1e-9);
  CHECK(norm(p.disks[0].center) < 1e-12);
  // first neighbor (vertex 1) on the positive horizontal axis
  CHECK(p.disks[1].center.x > 0);
  CHECK(std::abs(p.disks[1].center.y) < 1e-12);
  CHECK(fills_unit_disk(hex, p, 1e-9));
}

TEST_CASE("maximal packing: single face") {
  auto k = ComplexDisk::build({{0, 1, 2}});
  auto p = maximal_packing(k);
  for (int v = 0; v < 3; ++v) CHECK(std::abs(p.disks[v].radius - kPetal3) < 1e-12);
  auto rep = validate_packing(k, p);
  CHECK(rep.passes(1e-12));
  CHECK(fills_unit_disk(k, p, 1e-12));
}

TEST_CASE("maximal packing: larger complexes validate and fill the disk") {
  for (auto make : {+[] { return generate_hexdisk(2); }, +[] { return generate_hexdisk(3); },
                    +[] { return generate_apollonian(2); }, +[] { return generate_apollonian(3); },
                    +[] { return generate_flower(7); }, +[] { return generate_random(2, 10, 4); }}) {
    auto k = make();
    auto p = maximal_packing(k);
    auto rep = validate_packing(k, p);
    CAPTURE(rep.worst_tangency);
    CAPTURE(rep.worst_overlap);
    CHECK(rep.passes(p.tol_tangency()));
    CHECK(fills_unit_disk(k, p, 1e-9));
  }
}

TEST_CASE("validate_packing: forced failures") {
  auto hex = generate_hexdisk(1);
  auto p = maximal_packing(hex);

  SUBCASE("inflated radius breaks tangency") {
    auto bad = p;
    bad.disks[3].radius *= 1.1;
    auto rep = validate_packing(hex, bad);
    CHECK(rep.worst_tangency > 0.01);
    CHECK(!rep.passes(bad.tol_tangency()));
  }
  SUBCASE("mirror image flips every face") {
    auto bad = p;
    for (auto& d : bad.disks) d.center.y = -d.center.y;
    auto rep = validate_packing(hex, bad);
    CHECK(rep.orientation_failures == static_cast<int>(hex.faces().size()));
  }
}

TEST_CASE("contact_point") {
  auto k = ComplexDisk::build({{0, 1, 2}});
  Packing p;
  p.disks = {{{0, 0}, 1}, {{2, 0}, 1}, {{1, std::sqrt(3.0)}, 1}};
  Vec2 c = contact_point(k, p, 0, 1);
  CHECK(c.x == doctest::Approx(1.0));
  CHECK(std::abs(c.y) < 1e-15);

  auto hex = generate_hexdisk(1);
  auto ph = maximal_packing(hex);
  Vec2 ch = contact_point(hex, ph, 0, 1);
  CHECK(norm(ch) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  auto ap = generate_apollonian(1);
  auto pa = maximal_packing(ap);
  bool adjacent = ap.has_edge(4, 5);
  if (!adjacent) CHECK_THROWS_AS(contact_point(ap, pa, 4, 5), Error);
}
