#include <doctest.h>

#include "lplab/homotopy_lab.hpp"

using namespace lplab;

namespace {

// phi at a full tuple, computed from the stored slice by hand: normalise by
// x_0^-1, look the slice up, translate back; zero outside the slice.
RingElement lookup(const EquivariantCochain& phi, const std::vector<Element>& x) {
  const auto& G = phi.group();
  const Element inv = G->inverse(x[0]);
  std::vector<Element> xs;
  for (std::size_t k = 1; k < x.size(); ++k) xs.push_back(G->mul(inv, x[k]));
  const auto flat = phi.flat_index(xs);
  if (!flat) return RingElement(G);
  return phi.slice_value(*flat).left_translate(x[0]);
}

std::vector<Element> with_identity(const GroupPtr& G, std::vector<Element> xs) {
  xs.insert(xs.begin(), G->identity());
  return xs;
}

}  // namespace

TEST_CASE("coboundary of a degree-0 cochain by the direct formula") {
  const auto G = Group::make("heisenberg");
  Rng rng(2);
  const auto phi = EquivariantCochain::random(G, 0, 2, rng);
  const auto dphi = coboundary(phi);
  const RingElement v = phi.slice_value(0);
  for (std::size_t f = 0; f < dphi.slice_size(); ++f) {
    const Element x = dphi.slice_tuple(f)[0];
    REQUIRE(dphi.slice_value(f) == v.left_translate(x) - v);
  }
}

TEST_CASE("coboundary of a degree-1 cochain by the direct formula") {
  const auto G = Group::make("dihedral-inf");
  Rng rng(3);
  const auto phi = EquivariantCochain::random(G, 1, 2, rng);
  const auto dphi = coboundary(phi);
  for (std::size_t f = 0; f < dphi.slice_size(); ++f) {
    const auto xs = dphi.slice_tuple(f);
    const auto& e = G->identity();
    const RingElement expected =
        lookup(phi, {xs[0], xs[1]}) - lookup(phi, {e, xs[1]}) + lookup(phi, {e, xs[0]});
    REQUIRE(dphi.slice_value(f) == expected);
  }
}

TEST_CASE("coboundary squares to zero and is linear") {
  Rng rng(4);
  for (const char* name : {"Z", "heisenberg", "S3", "free:2"}) {
    const auto G = Group::make(name);
    for (std::size_t d : {0u, 1u}) {
      const auto phi = EquivariantCochain::random(G, d, 2, rng);
      const CochainFn dd = coboundary_fn(coboundary_fn(phi.as_function()));
      for (const auto& x1 : G->ball(2).elements())
        for (const auto& x2 : G->ball(2).elements()) {
          auto x = with_identity(G, {x1, x2});
          if (d == 1) x.push_back(G->mul(x1, x2));
          REQUIRE(dd(x, nullptr)->is_zero());
        }
      const auto twice = coboundary(coboundary(phi));
      for (std::size_t f = 0; f < twice.slice_size(); ++f) REQUIRE(twice.slice_value(f).is_zero());

      const auto psi = EquivariantCochain::random(G, d, 2, rng);
      const Rational a(3, 2), b(-2);
      CHECK(coboundary(linear_combination(a, phi, b, psi)) ==
            linear_combination(a, coboundary(phi), b, coboundary(psi)));
    }
  }
}

TEST_CASE("homotopy operator expansions") {
  const auto G = Group::make("Z");
  const Element t = G->parse("t");
  Rng rng(5);
  const auto phi1 = EquivariantCochain::random(G, 1, 3, rng);
  const auto j1 = homotopy_j(phi1, t);
  CHECK(j1.degree() == 0);
  CHECK(j1.slice_value(0) == -lookup(phi1, {G->identity(), t}));

  const auto phi2 = EquivariantCochain::random(G, 2, 3, rng);
  const auto j2 = homotopy_j(phi2, t);
  CHECK(j2.degree() == 1);
  for (std::size_t f = 0; f < j2.slice_size(); ++f) {
    const Element x = j2.slice_tuple(f)[0];
    const Element tx = G->mul(t, x);
    const auto e = G->identity();
    REQUIRE(j2.slice_value(f) == lookup(phi2, {e, x, tx}) - lookup(phi2, {e, t, tx}));
  }
  CHECK(homotopy_j(linear_combination(Rational(7, 3), phi2, Rational(0), phi2), t) ==
        linear_combination(Rational(7, 3), j2, Rational(0), j2));
}

TEST_CASE("homotopy identity holds exactly for central elements of length <= 2") {
  Rng rng(6);
  for (const char* name : {"trivial", "cyclic:4", "Z", "Z^2", "Z^3", "free:2", "dihedral-inf", "heisenberg", "S3"}) {
    const auto G = Group::make(name);
    std::vector<Element> central;
    for (const auto& h : G->ball(2).elements())
      if (is_central(RingElement(G, h))) central.push_back(h);
    if (G->spec().kind == GroupKind::heisenberg) central.push_back(Element{{0, 0, 1}});
    for (const auto& h : central)
      for (std::size_t d : {1u, 2u}) {
        CAPTURE(name);
        CAPTURE(G->format(h));
        const auto phi = EquivariantCochain::random(G, d, 2, rng);
        const auto r = homotopy_residual(phi, h);
        REQUIRE(r.max_abs == 0);
        REQUIRE(r.tuples_checked == phi.slice_size());
      }
  }
}

TEST_CASE("non-central elements and infinite classes are rejected") {
  const auto D = Group::make("dihedral-inf");
  Rng rng(7);
  const auto phi = EquivariantCochain::random(D, 1, 2, rng);
  CHECK_THROWS_AS(homotopy_residual(phi, D->parse("r")), InvalidArgument);
  CHECK_THROWS_AS(homotopy_j(phi, D->parse("r")), InvalidArgument);
  CHECK_THROWS_AS(class_sum_homotopy_residual(phi, D->parse("s"), 100), InvalidArgument);
}

TEST_CASE("class sums: singletons reduce to the single-element residual") {
  const auto H = Group::make("heisenberg");
  Rng rng(8);
  const auto phi = EquivariantCochain::random(H, 1, 3, rng);
  const Element z{{0, 0, 1}};
  const auto a = homotopy_residual(phi, z);
  const auto b = class_sum_homotopy_residual(phi, z, 100);
  CHECK(a.max_abs == b.max_abs);
  CHECK(a.tuples_checked == b.tuples_checked);
}

TEST_CASE("j_g alone is not equivariant for non-central g; the class sum is") {
  const auto D = Group::make("dihedral-inf");
  Rng rng(9);
  const auto phi = EquivariantCochain::random(D, 1, 3, rng);
  const Element r = D->parse("r"), r_inv = D->parse("r^-1");
  const CochainFn jr = homotopy_fn(phi.as_function(), D, r);
  const CochainFn jr_inv = homotopy_fn(phi.as_function(), D, r_inv);
  const CochainFn J = [&](std::span<const Element> x, WindowProbe* p) -> std::optional<RingElement> {
    auto a = jr(x, p);
    auto b = jr_inv(x, p);
    if (!a || !b) return std::nullopt;
    return *a + *b;
  };
  CHECK(equivariance_defect(jr, *D, 0, 2) > 0);
  CHECK(equivariance_defect(J, *D, 0, 2) == 0);
  CHECK(equivariance_defect(phi.as_function(), *D, 1, 2) == 0);
}

TEST_CASE("windowed cochains refuse to evaluate outside their slice") {
  const auto G = Group::make("Z");
  Rng rng(10);
  const auto phi = EquivariantCochain::random(G, 1, 2, rng);
  const auto dphi = coboundary(phi);  // tabulated on ball(2), windowed
  CHECK(dphi.extension() == Extension::window);
  try {
    (void)materialize(coboundary_fn(dphi.as_function()), G, 3, 3);
    FAIL("expected a window error");
  } catch (const WindowError& e) {
    CHECK(e.required_radius() >= 3);
  }
}

TEST_CASE("serial and parallel residuals agree") {
  const auto H = Group::make("heisenberg");
  Rng rng(11);
  const auto phi = EquivariantCochain::random(H, 2, 2, rng);
  const auto a = homotopy_residual(phi, Element{{0, 0, 1}}, Exec::serial);
  const auto b = homotopy_residual(phi, Element{{0, 0, 1}}, Exec::parallel);
  CHECK(a.max_abs == b.max_abs);
  CHECK(a.tuples_checked == b.tuples_checked);
  CHECK(coboundary(phi, {}, Exec::serial) == coboundary(phi, {}, Exec::parallel));
}
