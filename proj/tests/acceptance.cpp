// One line per acceptance criterion; exit status is nonzero if any fails.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lplab/cli.hpp"
#include "lplab/homotopy_lab.hpp"
#include "lplab/resolutions.hpp"
#include "lplab/vanishing_lab.hpp"
#include "oracles.hpp"

using namespace lplab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Eigen::VectorXd random_vector(Rng& rng, std::size_t n) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = rng.uniform_real(-1.0, 1.0);
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

// Each criterion's experiment as a CLI config; outputs land in <dir>/<stem>.
struct ConfigCase {
  std::string stem;
  std::string text;
  std::vector<std::string> outputs;
};

const std::vector<ConfigCase>& config_cases() {
  static const std::vector<ConfigCase> cases = {
      {"c1-homotopy-Z", "experiment=verify-homotopy\ngroup=Z\nh=t\ndegree=1,2\nR=3\nsamples=20\nseed=101\n",
       {".csv"}},
      {"c1-homotopy-heisenberg",
       "experiment=verify-homotopy\ngroup=heisenberg\nh=(0,0,1)\ndegree=1,2\nR=3\nsamples=20\nseed=102\n",
       {".csv"}},
      {"c1-homotopy-C4", "experiment=verify-homotopy\ngroup=cyclic:4\nh=t\ndegree=1,2\nR=3\nsamples=20\nseed=103\n",
       {".csv"}},
      {"c2-resolutions", "experiment=verify-resolutions\n", {".csv"}},
      {"c3-finite-homology", "experiment=finite-homology\nn=4\nN=3\np=1.5,2,3\n", {".csv"}},
      {"c3-finite-index", "experiment=finite-index\nn=4\nm=2\np=2\n", {".csv"}},
      {"c4-adjointness",
       "experiment=pairing-adjointness\nresolution=cyclic-inf,cyclic:4:2\nR=1,2,3,4\np=1.5,2,3\nsamples=1000\n"
       "seed=104\n",
       {".csv"}},
      {"c5-distance", "experiment=distance-curve\nresolution=cyclic-inf\np=1.5,2,3\nR=1..16\n", {".csv", ".svg"}},
      {"c6-translation-Z", "experiment=translation-decay\ngroup=Z\nsupport=5\nindices=-15..15\nseed=105\n",
       {".csv", ".svg"}},
      {"c6-translation-dihedral",
       "experiment=translation-decay\ngroup=dihedral-inf\nsupport=4\nindices=1..14\nseed=106\nepsilon=0.05\n",
       {".csv", ".svg", "-cutoff.csv"}},
      {"c7-class-sum-dihedral", "experiment=class-sum-homotopy\ngroup=dihedral-inf\nclass=r\ndegree=1\nR=3\nseed=107\n",
       {".csv"}},
      {"c7-class-sum-heisenberg",
       "experiment=class-sum-homotopy\ngroup=heisenberg\nclass=(0,0,1)\ndegree=1,2\nR=3\nseed=108\n", {".csv"}},
  };
  return cases;
}

int run_case(const ConfigCase& c, const fs::path& dir, std::ostream& err) {
  fs::create_directories(dir);
  const auto cfg = dir / (c.stem + ".cfg");
  std::ofstream(cfg) << c.text << "output=" << (dir / c.stem).string() << "\n";
  std::ostringstream out;
  return cli::run_configs(std::vector<std::string>{cfg.string()}, out, err);
}

const ConfigCase& find_case(const std::string& stem) {
  for (const auto& c : config_cases())
    if (c.stem == stem) return c;
  throw std::logic_error("no config case " + stem);
}

Outcome homotopy_identity() {
  Outcome o;
  Rng rng(1);
  const std::vector<std::pair<std::string, std::string>> cases{{"Z", "t"}, {"heisenberg", "(0,0,1)"}, {"cyclic:4", "t"}};
  for (const auto& [name, h_text] : cases) {
    const auto G = Group::make(name);
    const Element h = G->parse(h_text);
    for (std::size_t d : {1u, 2u})
      for (int s = 0; s < 20; ++s) {
        const auto phi = EquivariantCochain::random(G, d, 3, rng);
        const auto r = homotopy_residual(phi, h);
        if (r.max_abs != 0) o.fail(name + " degree " + std::to_string(d) + " residual " + r.max_abs.get_str());
        if (r.tuples_checked == 0) o.fail(name + " checked no tuples");
      }
  }
  return o;
}

Outcome complex_property() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& name : catalog_resolution_names()) {
    const auto rep = validate(make_resolution(name));
    if (!rep.ok()) o.fail(name + ": " + rep.failures.front().check + " " + rep.failures.front().detail);
    ++checked;
  }
  for (const char* g : {"Z^2", "free:2", "dihedral-inf", "heisenberg"}) {
    const auto G = Group::make(g);
    for (const auto& defect : fox_identity_defects(G, catalog_presentation(*G)))
      if (!defect.is_zero()) o.fail(std::string("fox identity fails for ") + g);
  }
  o.detail = o.pass ? std::to_string(checked) + " resolutions" : o.detail;
  return o;
}

Outcome finite_group_vanishing() {
  Outcome o;
  const std::vector<std::size_t> point{1, 0, 0, 0};
  if (oracle::cyclic_homology_dims(4, 3) != point) o.fail("rational oracle disagrees with (1,0,0,0)");
  for (const double p : {1.5, 2.0, 3.0})
    for (const double scale : {0.1, 1.0, 10.0})
      if (finite_group_homology_ranks(4, 3, p, scale) != point)
        o.fail("ranks differ from (1,0,0,0) at p=" + fmt(p) + " scale " + fmt(scale));
  const auto cmp = finite_index_compare(4, 2, 2.0);
  if (!cmp.equal) o.fail("finite_index_compare(4, 2, 2) reports a difference");
  return o;
}

Outcome duality_plumbing() {
  Outcome o;
  Rng rng(4);
  const auto names = catalog_resolution_names();
  double worst_defect = 0.0;
  for (const double p : {1.5, 2.0, 3.0})
    for (int k = 0; k < 1000; ++k) {
      const auto res = make_resolution(names[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(names.size()) - 1))]);
      const auto i = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(res.length())));
      const auto R = static_cast<std::size_t>(rng.uniform_int(0, 3));
      const auto op = assemble_boundary(res, i, R, p);
      const auto dual = dual_of(op);
      const ChainVector x(op.domain, random_vector(rng, op.domain.dim()));
      const CochainVector y(op.codomain, random_vector(rng, op.codomain.dim()));
      const double defect = std::abs(pairing(y, apply(op, x)) - pairing(apply(dual, y), x));
      worst_defect = std::max(worst_defect, defect);
      if (defect > 1e-10) o.fail("adjoint defect " + fmt(defect) + " on " + res.name);
      const CochainVector yd(op.domain, random_vector(rng, op.domain.dim()));
      if (std::abs(pairing(yd, x)) > norm(yd) * norm(x)) o.fail("Hoelder fails on " + res.name);
    }
  for (std::size_t R = 0; R <= 4; ++R) {
    const auto z = make_resolution("cyclic-inf");
    const auto c4 = make_resolution("cyclic:4:2");
    for (const double r : {annihilator_residual(z, 1, R), annihilator_residual(c4, 1, R),
                           annihilator_residual(c4, 2, R)})
      if (r > 1e-10) o.fail("annihilator residual " + fmt(r) + " at R=" + std::to_string(R));
  }
  if (o.pass) o.detail = "max adjoint defect " + fmt(worst_defect);
  return o;
}

Outcome distance_decay() {
  Outcome o;
  const auto res = make_resolution("cyclic-inf");
  std::vector<std::size_t> radii;
  for (std::size_t R = 1; R <= 16; ++R) radii.push_back(R);
  const SparseChain delta{{{0, res.group->identity(), 1.0}}};

  const auto l2 = boundary_distance_curve(res, 0, delta, 2.0, radii);
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const int R = static_cast<int>(radii[k]);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(2 * R + 3);
    x[R + 1] = 1.0;
    const double expected = oracle::normal_equations_distance(oracle::z_boundary_natural(R), x);
    if (std::abs(l2.rows[k].value - expected) > 1e-8) o.fail("p=2 off the oracle at R=" + std::to_string(R));
    if (k && !(l2.rows[k].value < l2.rows[k - 1].value)) o.fail("p=2 not strictly decreasing at R=" + std::to_string(R));
  }

  for (const double p : {1.5, 3.0}) {
    const auto curve = boundary_distance_curve(res, 0, delta, p, radii);
    IrlsOptions longer;
    longer.max_iterations *= 10;
    const auto rerun = boundary_distance_curve(res, 0, delta, p, radii, longer);
    for (std::size_t k = 0; k < radii.size(); ++k) {
      const std::string at = " at p=" + fmt(p) + " R=" + std::to_string(radii[k]);
      if (k && curve.rows[k].value > curve.rows[k - 1].value) o.fail("increase" + at);
      if (std::abs(curve.rows[k].value - rerun.rows[k].value) > 1e-6) o.fail("unstable under 10x budget" + at);
    }
  }
  return o;
}

Outcome translation_decay() {
  Outcome o;
  Rng rng(6);
  const auto Z = Group::make("Z");
  const auto zseq = central_catalog(Z, 5);
  const auto zs = TruncatedSpace::make(Z, 1, 5, 2.0);
  const ChainVector x(zs, random_vector(rng, zs.dim()));
  const CochainVector y(zs, random_vector(rng, zs.dim()));
  std::vector<std::int64_t> idx;
  for (std::int64_t i = -15; i <= 15; ++i) idx.push_back(i);
  const auto zc = translation_pairing_decay(y, x, zseq, idx);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    // Direct sum over exponents: b(y, t^i x) = sum_a y(t^(a+i)) x(t^a).
    double expected = 0.0;
    for (std::size_t a = 0; a < zs.ball->size(); ++a)
      for (std::size_t b = 0; b < zs.ball->size(); ++b)
        if ((*zs.ball)[b].c[0] == (*zs.ball)[a].c[0] + idx[k])
          expected += y.coefficients()[static_cast<Eigen::Index>(b)] * x.coefficients()[static_cast<Eigen::Index>(a)];
    if (std::abs(idx[k]) > 10 && zc.rows[k].value != 0.0) o.fail("Z pairing nonzero at i=" + std::to_string(idx[k]));
    if (std::abs(zc.rows[k].value - expected) > 1e-12) o.fail("Z off the oracle at i=" + std::to_string(idx[k]));
  }

  const auto D = Group::make("dihedral-inf");
  const auto dseq = central_catalog(D, 3);
  for (const double p : {1.5, 2.0, 3.0}) {
    const auto ds = TruncatedSpace::make(D, 1, 4, p);
    const ChainVector dx(ds, random_vector(rng, ds.dim()));
    const CochainVector dy(ds, random_vector(rng, ds.dim()));
    std::vector<std::pair<oracle::Dihedral, double>> xo, yo;
    for (std::size_t k = 0; k < ds.ball->size(); ++k) {
      const auto& e = (*ds.ball)[k];
      xo.push_back({{e.c[0], static_cast<int>(e.c[1])}, dx.coefficients()[static_cast<Eigen::Index>(k)]});
      yo.push_back({{e.c[0], static_cast<int>(e.c[1])}, dy.coefficients()[static_cast<Eigen::Index>(k)]});
    }
    std::vector<std::int64_t> ns;
    for (std::int64_t n = 1; n <= 14; ++n) ns.push_back(n);
    const auto dc = translation_pairing_decay(dy, dx, dseq, ns);
    for (std::size_t k = 0; k < ns.size(); ++k) {
      const std::string at = " at n=" + std::to_string(ns[k]);
      if (ns[k] > 8 && dc.rows[k].value != 0.0) o.fail("dihedral pairing nonzero" + at);
      if (std::abs(dc.rows[k].value - oracle::dihedral_class_pairing(yo, xo, ns[k])) > 1e-12)
        o.fail("dihedral off the oracle" + at);
    }
  }
  return o;
}

Outcome class_sum_homotopy(const fs::path& work) {
  Outcome o;
  Rng rng(7);
  const std::vector<std::pair<std::string, std::string>> singletons{
      {"Z", "t"}, {"heisenberg", "(0,0,1)"}, {"cyclic:4", "t"}, {"Z^2", "t1"}};
  for (const auto& [name, rep] : singletons) {
    const auto G = Group::make(name);
    const Element h = G->parse(rep);
    for (std::size_t d : {1u, 2u})
      for (int s = 0; s < 5; ++s) {
        const auto r = class_sum_homotopy_residual(EquivariantCochain::random(G, d, 3, rng), h, 10000);
        if (r.max_abs != 0) o.fail(name + " singleton class residual " + r.max_abs.get_str());
      }
  }

  const auto& c = find_case("c7-class-sum-dihedral");
  std::ostringstream err;
  for (const char* run : {"a", "b"})
    if (run_case(c, work / "c7" / run, err) != cli::kExitOk) o.fail("dihedral run failed: " + err.str());
  const auto a = slurp(work / "c7" / "a" / (c.stem + ".csv"));
  const auto b = slurp(work / "c7" / "b" / (c.stem + ".csv"));
  if (a.empty() || a != b) o.fail("dihedral class residuals differ between runs");
  const auto golden = slurp(fs::path(LPLAB_GOLDEN_DIR) / "class_sum_dihedral.csv");
  if (a != golden) o.fail("dihedral class residuals differ from the golden file");
  return o;
}

Outcome determinism(const fs::path& work) {
  Outcome o;
  std::size_t files = 0;
  const int threads = omp_get_max_threads();
  for (const auto& c : config_cases()) {
    std::ostringstream err;
    omp_set_num_threads(1);
    const int first = run_case(c, work / "c8" / "first", err);
    omp_set_num_threads(3);
    const int second = run_case(c, work / "c8" / "second", err);
    omp_set_num_threads(threads);
    if (first != cli::kExitOk || second != cli::kExitOk) {
      o.fail(c.stem + " exited " + std::to_string(first) + "/" + std::to_string(second) + ": " + err.str());
      continue;
    }
    for (const auto& suffix : c.outputs) {
      const auto a = slurp(work / "c8" / "first" / (c.stem + suffix));
      const auto b = slurp(work / "c8" / "second" / (c.stem + suffix));
      if (a.empty() || a != b) o.fail(c.stem + suffix + " differs between runs");
      ++files;
    }
  }
  if (o.pass) o.detail = std::to_string(files) + " files byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "lplab-acceptance";
  fs::remove_all(work);
  fs::create_directories(work);

  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "homotopy identity is exact", 60, homotopy_identity},
      {2, "catalog resolutions are complexes", 10, complex_property},
      {3, "finite cyclic groups vanish above degree 0", 5, finite_group_vanishing},
      {4, "adjointness, Hoelder and annihilators", 30, duality_plumbing},
      {5, "distance to boundaries decays on Z", 120, distance_decay},
      {6, "translated pairings vanish", 10, translation_decay},
      {7, "class-sum homotopy", 0, [&] { return class_sum_homotopy(work); }},
      {8, "reruns are byte-identical", 0, [&] { return determinism(work); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds)
      o.fail("took " + fmt(secs) + " s, limit " + fmt(c.limit_seconds) + " s");
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " (" << fmt(secs) << " s)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
