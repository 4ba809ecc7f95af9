#include <doctest.h>

#include "lplab/resolutions.hpp"

using namespace lplab;

TEST_CASE("every catalog resolution validates exactly") {
  for (const auto& name : catalog_resolution_names()) {
    CAPTURE(name);
    const auto res = make_resolution(name);
    const auto report = validate(res);
    CHECK(report.ok());
    CHECK(report.checks > 0);
  }
}

TEST_CASE("catalog covers the required resolutions") {
  const auto names = catalog_resolution_names();
  const auto has = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  CHECK(has("cyclic-inf"));
  for (int n : {2, 3, 4, 6})
    for (int N = 1; N <= 4; ++N) CHECK(has("cyclic:" + std::to_string(n) + ":" + std::to_string(N)));
  for (int d = 1; d <= 3; ++d) CHECK(has("lattice:" + std::to_string(d)));
  for (const char* g : {"fox:Z^2", "fox:free:2", "fox:dihedral-inf", "fox:heisenberg"}) CHECK(has(g));
}

TEST_CASE("a corrupted boundary is caught") {
  auto res = make_resolution("cyclic:4:3");
  res.boundaries[1].at(0, 0).add_term(res.group->identity(), 1);
  const auto report = validate(res);
  REQUIRE_FALSE(report.ok());
  CHECK(report.failures.front().check == "composition");

  auto aug = make_resolution("lattice:2");
  aug.boundaries[0].at(0, 0).add_term(aug.group->identity(), 1);
  const auto r2 = validate(aug);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.failures.front().check == "augmentation");
}

TEST_CASE("Fox derivatives") {
  const auto Z = Group::make("Z");
  const std::vector<std::string> t{"t"};
  // d(t^4)/dt = 1 + t + t^2 + t^3
  CHECK(fox_derivative(Z, parse_word(t, "t^4"), 0) == parse_ring_element(Z, "1 + t + t^2 + t^3"));
  // d(t^-1)/dt = -t^-1
  CHECK(fox_derivative(Z, parse_word(t, "t^-1"), 0) == parse_ring_element(Z, "-1*t^-1"));

  const auto F = Group::make("free:2");
  const std::vector<std::string> xy{"x", "y"};
  const Word comm = parse_word(xy, "x*y*x^-1*y^-1");
  // d[x,y]/dx = 1 - x y x^-1, d[x,y]/dy = x - x y x^-1 y^-1
  CHECK(fox_derivative(F, comm, 0) == parse_ring_element(F, "1 + -1*x*y*x^-1"));
  CHECK(fox_derivative(F, comm, 1) == parse_ring_element(F, "x + -1*x*y*x^-1*y^-1"));

  for (const char* g : {"Z^2", "Z^3", "cyclic:4", "dihedral-inf", "heisenberg", "S3"}) {
    const auto G = Group::make(g);
    for (const auto& defect : fox_identity_defects(G, catalog_presentation(*G))) CHECK(defect.is_zero());
  }
}

TEST_CASE("presentations that do not hold in the group are rejected") {
  const auto Z2 = Group::make("Z^2");
  Presentation bad{{"t1", "t2"}, {parse_word({"t1", "t2"}, "t1*t2")}};
  CHECK_THROWS_WITH_AS(fox_partial_resolution(Z2, bad), doctest::Contains("presentation mismatch"), InvalidArgument);
}

TEST_CASE("resolution shapes") {
  const auto z = make_resolution("cyclic-inf");
  CHECK(z.ranks == std::vector<std::size_t>{1, 1});
  const auto lat = make_resolution("lattice:3");
  CHECK(lat.ranks == std::vector<std::size_t>{1, 3, 3, 1});
  const auto per = make_resolution("cyclic:6:4");
  CHECK(per.length() == 4);
  CHECK(per.boundary(2).at(0, 0).support_size() == 6);
  const auto fox = make_resolution("fox:heisenberg");
  CHECK(fox.ranks == std::vector<std::size_t>{1, 2, 2});
  CHECK_THROWS_AS(make_resolution("cyclic:1:2"), InvalidArgument);
  CHECK_THROWS_AS(make_resolution("lattice:4"), InvalidArgument);
  CHECK_THROWS_AS(make_resolution("mystery"), InvalidArgument);
  CHECK_THROWS_AS(make_resolution("fox:trivial"), InvalidArgument);
}

TEST_CASE("bar resolution slices") {
  const auto G = Group::make("Z^2");
  const auto basis = bar_resolution_spaces(G, 2, 1);
  CHECK(basis.tuples.size() == 25);
  CHECK(basis.tuples.front() == std::vector<Element>{G->identity(), G->identity()});
  CHECK_THROWS_AS(bar_resolution_spaces(G, 4, 1), InvalidArgument);
  const auto spec = parse_bar_name("bar:heisenberg:2:3");
  CHECK(spec.group.name() == "heisenberg");
  CHECK(spec.degree == 2);
  CHECK(spec.radius == 3);
  CHECK_THROWS_AS(parse_bar_name("bar:Z:9:1"), InvalidArgument);
}
