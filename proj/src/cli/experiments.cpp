#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>
#include <sstream>

#include "lplab/cli.hpp"
#include "lplab/csv.hpp"
#include "lplab/homotopy_lab.hpp"
#include "lplab/lp_complex.hpp"
#include "lplab/vanishing_lab.hpp"

namespace lplab::cli {
namespace {

// Re-raises library argument errors as configuration errors naming the field.
template <class F>
auto in_field(const ExperimentConfig& c, const std::string& key, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(c.source + ": field '" + key + "': " + e.what());
  }
}

[[noreturn]] void missing(const ExperimentConfig& c, const std::string& key) {
  throw ConfigError(c.source + ": field '" + key + "': required by " + experiment_name(c.experiment));
}

GroupPtr config_group(const ExperimentConfig& c) {
  if (c.group.empty()) missing(c, "group");
  return in_field(c, "group", [&] { return Group::make(c.group); });
}

Element config_element(const ExperimentConfig& c, const GroupPtr& G, const std::string& key,
                       const std::string& text) {
  return in_field(c, key, [&] { return G->parse(text); });
}

std::vector<double> p_or(const ExperimentConfig& c, std::vector<double> fallback) {
  return c.p.empty() ? fallback : c.p;
}

template <class T>
std::vector<T> or_default(const std::vector<T>& v, std::vector<T> fallback) {
  return v.empty() ? fallback : v;
}

std::size_t samples_or(const ExperimentConfig& c, std::size_t fallback) { return c.samples ? c.samples : fallback; }

std::string p_label(double p) { return "p=" + format_double(p); }

struct Outputs {
  std::filesystem::path stem;
  RunResult result;

  void write(const std::string& suffix, const std::string& content) {
    auto path = stem;
    path += suffix;
    write_file_atomic(path, content);
    result.written.push_back(path);
  }
};

Element default_central(const ExperimentConfig& c, const GroupPtr& G) {
  if (!c.h.empty()) return config_element(c, G, "h", c.h);
  if (G->spec().kind == GroupKind::heisenberg) return Element{{0, 0, 1}};
  if (G->is_abelian() && !G->generators().empty()) return G->generators()[0];
  throw ConfigError(c.source + ": field 'h': required for " + G->name());
}

void write_residual_row(std::ostream& out, const GroupPtr& G, const std::string& label, std::size_t degree,
                        std::size_t R, const Rational& r) {
  write_csv_row(out, {G->name(), label, std::to_string(degree), std::to_string(R), r.get_num().get_str(),
                      r.get_den().get_str()});
}

void write_residual_header(std::ostream& out) {
  write_csv_row(out, {"group", "h_or_class", "degree", "R", "residual_numerator", "residual_denominator"});
}

// ---------------------------------------------------------------------------

void run_verify_resolutions(const ExperimentConfig& c, Outputs& o) {
  const auto names = or_default(c.resolutions, catalog_resolution_names());
  std::ostringstream csv;
  write_csv_row(csv, {"resolution", "group", "length", "checks", "failures", "first_failure"});
  for (const auto& name : names) {
    const Resolution res = in_field(c, "resolution", [&] { return make_resolution(name); });
    const auto report = validate(res);
    std::string first;
    if (!report.ok()) {
      const auto& f = report.failures.front();
      first = f.check + " i=" + std::to_string(f.i) + " (" + std::to_string(f.row) + "," + std::to_string(f.col) +
              "): " + f.detail;
      o.result.violations.push_back(name + ": " + first);
    }
    write_csv_row(csv, {name, res.group->name(), std::to_string(res.length()), std::to_string(report.checks),
                        std::to_string(report.failures.size()), first});
  }
  o.write(".csv", csv.str());
}

void run_verify_homotopy(const ExperimentConfig& c, Outputs& o) {
  const auto G = config_group(c);
  const Element h = default_central(c, G);
  if (!is_central(RingElement(G, h)))
    throw ConfigError(c.source + ": field 'h': " + G->format(h) + " is not central in " + G->name());
  Rng rng(c.seed);
  std::ostringstream csv;
  write_residual_header(csv);
  for (const auto d : or_default<std::size_t>(c.degrees, {1, 2}))
    for (const auto R : or_default<std::size_t>(c.radii, {3}))
      for (std::size_t s = 0; s < samples_or(c, 20); ++s) {
        const auto phi = in_field(c, "degree", [&] { return EquivariantCochain::random(G, d, R, rng); });
        const auto rep = in_field(c, "degree", [&] { return homotopy_residual(phi, h); });
        write_residual_row(csv, G, G->format(h), d, R, rep.max_abs);
        if (rep.max_abs != 0)
          o.result.violations.push_back("degree " + std::to_string(d) + ", R=" + std::to_string(R) + ", sample " +
                                        std::to_string(s) + ": residual " + to_fraction_string(rep.max_abs));
      }
  o.write(".csv", csv.str());
}

void run_class_sum_homotopy(const ExperimentConfig& c, Outputs& o) {
  const auto G = config_group(c);
  if (c.class_representative.empty()) missing(c, "class");
  const Element rep = config_element(c, G, "class", c.class_representative);
  const auto cls = conjugacy_class(*G, rep, c.class_cap);
  if (cls.exceeds_cap)
    throw ConfigError(c.source + ": field 'class': class of " + G->format(rep) +
                      " is infinite or exceeds class_cap=" + std::to_string(c.class_cap));
  const bool singleton = cls.members.size() == 1;
  const std::string label = format(class_sum(G, rep, c.class_cap));
  if (!singleton)
    o.result.notes.push_back("class " + label + " has " + std::to_string(cls.members.size()) +
                             " elements; residuals are reported, not asserted");
  Rng rng(c.seed);
  std::ostringstream csv;
  write_residual_header(csv);
  for (const auto d : or_default<std::size_t>(c.degrees, {1}))
    for (const auto R : or_default<std::size_t>(c.radii, {3}))
      for (std::size_t s = 0; s < samples_or(c, 20); ++s) {
        const auto phi = in_field(c, "degree", [&] { return EquivariantCochain::random(G, d, R, rng); });
        const auto r = in_field(c, "degree", [&] { return class_sum_homotopy_residual(phi, rep, c.class_cap); });
        write_residual_row(csv, G, label, d, R, r.max_abs);
        if (singleton && r.max_abs != 0)
          o.result.violations.push_back("singleton class, degree " + std::to_string(d) + ", R=" + std::to_string(R) +
                                        ": residual " + to_fraction_string(r.max_abs));
      }
  o.write(".csv", csv.str());
}

Eigen::VectorXd random_vector(Rng& rng, std::size_t n) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = rng.uniform_real(-1.0, 1.0);
  return v;
}

void run_pairing_adjointness(const ExperimentConfig& c, Outputs& o) {
  if (c.resolutions.empty()) missing(c, "resolution");
  Rng rng(c.seed);
  const std::size_t samples = samples_or(c, 1000);
  std::ostringstream csv;
  write_csv_row(csv, {"resolution", "i", "R", "p", "samples", "max_adjoint_defect", "max_holder_ratio",
                      "annihilator_residual"});
  for (const auto& name : c.resolutions) {
    const Resolution res = in_field(c, "resolution", [&] { return make_resolution(name); });
    std::vector<std::size_t> degrees = c.degrees;
    if (degrees.empty())
      for (std::size_t i = 1; i <= res.length(); ++i) degrees.push_back(i);
    for (const auto i : degrees) {
      if (i < 1 || i > res.length())
        throw ConfigError(c.source + ": field 'degree': " + name + " has boundaries d_1..d_" +
                          std::to_string(res.length()));
      for (const auto R : or_default<std::size_t>(c.radii, {1, 2, 3})) {
        double annihilator = -1.0;
        for (const double p : p_or(c, {1.5, 2.0, 3.0})) {
          const auto op = assemble_boundary(res, i, R, p);
          const auto dual = dual_of(op);
          if (annihilator < 0) annihilator = annihilator_residual(op.matrix, dual.matrix);
          double worst_defect = 0.0, worst_ratio = 0.0;
          for (std::size_t s = 0; s < samples; ++s) {
            const ChainVector x(op.domain, random_vector(rng, op.domain.dim()));
            const CochainVector y(op.codomain, random_vector(rng, op.codomain.dim()));
            const double defect = std::abs(pairing(y, apply(op, x)) - pairing(apply(dual, y), x));
            const double scale = (1.0 + norm(x)) * (1.0 + norm(y));
            worst_defect = std::max(worst_defect, defect);
            if (defect > 1e-10 * scale)
              o.result.violations.push_back(name + " d_" + std::to_string(i) + " R=" + std::to_string(R) +
                                            ": adjointness defect " + format_double(defect));
            const CochainVector y2(op.domain, random_vector(rng, op.domain.dim()));
            const double bound = norm(y2) * norm(x);
            const double b = std::abs(pairing(y2, x));
            if (bound > 0) worst_ratio = std::max(worst_ratio, b / bound);
            if (b > bound * (1.0 + 1e-12))
              o.result.violations.push_back(name + " R=" + std::to_string(R) + " " + p_label(p) +
                                            ": Hoelder bound exceeded");
          }
          write_csv_row(csv, {name, std::to_string(i), std::to_string(R), format_double(p), std::to_string(samples),
                              format_double(worst_defect), format_double(worst_ratio), format_double(annihilator)});
        }
        if (annihilator > 1e-10)
          o.result.violations.push_back(name + " d_" + std::to_string(i) + " R=" + std::to_string(R) +
                                        ": annihilator residual " + format_double(annihilator));
      }
    }
  }
  o.write(".csv", csv.str());
}

SparseChain chain_from_text(const ExperimentConfig& c, const GroupPtr& G, const std::string& key,
                            const std::map<std::size_t, std::string>& parts) {
  SparseChain x;
  for (const auto& [copy, text] : parts) {
    const auto u = in_field(c, key, [&] { return parse_ring_element(G, text); });
    for (const auto& [g, coeff] : u.terms()) x.entries.emplace_back(copy, g, coeff.get_d());
  }
  return x;
}

std::size_t chain_radius(const GroupPtr& G, const SparseChain& x) {
  std::size_t r = 0;
  for (const auto& [copy, g, v] : x.entries) r = std::max(r, G->word_length(g));
  return r;
}

std::size_t chain_rank(const SparseChain& x) {
  std::size_t rank = 1;
  for (const auto& [copy, g, v] : x.entries) rank = std::max(rank, copy + 1);
  return rank;
}

void emit_curves(const ExperimentConfig& c, Outputs& o, const std::vector<DecayCurve>& curves,
                 const std::string& title, const std::string& x_label, const std::string& y_label) {
  std::ostringstream csv;
  write_decay_csv_header(csv);
  std::vector<Series> series;
  for (const auto& curve : curves) {
    write_decay_csv_rows(csv, curve);
    Series s{p_label(curve.p), {}};
    for (const auto& row : curve.rows) s.points.emplace_back(static_cast<double>(row.index), row.value);
    series.push_back(std::move(s));
    for (const auto& row : curve.rows)
      if (!row.converged)
        o.result.notes.push_back(p_label(curve.p) + " " + index_kind_name(curve.kind) + "=" +
                                 std::to_string(row.index) + ": IRLS stopped at the iteration cap");
  }
  (void)c;
  o.write(".csv", csv.str());
  o.write(".svg", render_svg(title, x_label, y_label, series));
}

void run_distance_curve(const ExperimentConfig& c, Outputs& o) {
  if (c.resolutions.size() != 1)
    throw ConfigError(c.source + ": field 'resolution': distance-curve takes exactly one resolution");
  const Resolution res = in_field(c, "resolution", [&] { return make_resolution(c.resolutions.front()); });
  if (!c.group.empty() && !config_group(c)->same_as(*res.group))
    throw ConfigError(c.source + ": field 'group': " + c.group + " does not match resolution " + res.name);
  if (c.degrees.size() > 1) throw ConfigError(c.source + ": field 'degree': distance-curve takes one degree");
  const std::size_t degree = c.degrees.empty() ? 0 : c.degrees.front();
  if (degree + 1 > res.length())
    throw ConfigError(c.source + ": field 'degree': " + res.name + " has no d_" + std::to_string(degree + 1));
  const auto G = res.group;
  const SparseChain x = c.x.empty() ? SparseChain{{{0, G->identity(), 1.0}}} : chain_from_text(c, G, "x", c.x);
  const auto radii = or_default<std::size_t>(c.radii, {1, 2, 3, 4, 5, 6, 7, 8});
  if (!radii.empty() && radii.front() < chain_radius(G, x))
    throw ConfigError(c.source + ": field 'R': smallest radius must contain the support of x");
  IrlsOptions opts;
  opts.max_iterations = c.max_iterations;
  std::vector<DecayCurve> curves;
  for (const double p : p_or(c, {2.0}))
    curves.push_back(in_field(c, "R", [&] { return boundary_distance_curve(res, degree, x, p, radii, opts); }));
  if (G->spec().kind == GroupKind::free_group && G->spec().param >= 2)
    o.result.notes.push_back("free group control: the curve is descriptive, no decay is claimed");
  emit_curves(c, o, curves, "distance to im d_" + std::to_string(degree + 1) + ", " + res.name, "R",
              "distance");
}

void run_translation_decay(const ExperimentConfig& c, Outputs& o) {
  const auto G = config_group(c);
  const auto seq = in_field(c, "group", [&] { return central_catalog(G, 5); });
  const bool class_sums = seq.kind == CentralKind::class_sums;
  const auto indices = or_default<std::int64_t>(
      c.indices, class_sums ? std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}
                            : std::vector<std::int64_t>{-12, -11, -10, -9, -8, -7, -6, -5, -4, -3, -2, -1, 0,
                                                        1,   2,   3,   4,  5,  6,  7,  8,  9,  10, 11, 12});
  std::vector<DecayCurve> curves;
  std::ostringstream cutoff_csv;
  write_csv_row(cutoff_csv, {"p", "index", "epsilon", "full", "head", "tail", "bound", "honored"});

  for (const double p : p_or(c, {2.0})) {
    Rng rng(c.seed);
    const auto random_part = [&](std::size_t radius) {
      const Ball B = G->ball(radius);
      SparseChain v;
      for (std::size_t k = 0; k < B.size(); ++k) v.entries.emplace_back(0, B[k], rng.uniform_real(-1.0, 1.0));
      return v;
    };
    const SparseChain xs = c.x.empty() ? random_part(c.support) : chain_from_text(c, G, "x", c.x);
    const SparseChain ys = c.y.empty() ? random_part(c.support) : chain_from_text(c, G, "y", c.y);
    if (chain_rank(xs) != chain_rank(ys))
      throw ConfigError(c.source + ": field 'y': x and y must have the same number of copies");
    const auto space_for = [&](const SparseChain& v) {
      return TruncatedSpace::make(G, chain_rank(v), chain_radius(G, v), p);
    };
    const ChainVector x = embed(xs, space_for(xs));
    const ChainVector y_as_chain = embed(ys, space_for(ys));
    const CochainVector y(y_as_chain.space(), y_as_chain.coefficients());

    auto curve = translation_pairing_decay(y, x, seq, indices);
    curve.resolution = "";
    // Disjoint supports must pair to exactly zero.
    std::set<std::pair<std::size_t, Element>> y_support;
    for (const auto& [copy, g, v] : ys.entries)
      if (v != 0.0) y_support.emplace(copy, g);
    for (std::size_t k = 0; k < indices.size(); ++k) {
      const auto moved = translate_ring(x, seq.at(indices[k]));
      bool overlap = false;
      const auto& ball = *moved.space().ball;
      for (std::size_t copy = 0; copy < moved.space().rank && !overlap; ++copy)
        for (std::size_t e = 0; e < ball.size() && !overlap; ++e)
          if (moved.coefficients()[static_cast<Eigen::Index>(moved.space().index(copy, e))] != 0.0 &&
              y_support.contains({copy, ball[e]}))
            overlap = true;
      if (!overlap && curve.rows[k].value != 0.0)
        o.result.violations.push_back("index " + std::to_string(indices[k]) +
                                      ": disjoint supports but pairing " + format_double(curve.rows[k].value));
      if (c.epsilon) {
        const auto split = cutoff_split(y, moved, *c.epsilon);
        write_csv_row(cutoff_csv, {format_double(p), std::to_string(indices[k]), format_double(split.epsilon),
                                   format_double(split.full), format_double(split.head), format_double(split.tail),
                                   format_double(split.bound), split.honored() ? "true" : "false"});
        if (!split.honored())
          o.result.violations.push_back("index " + std::to_string(indices[k]) + ": cut-off tail " +
                                        format_double(split.tail) + " exceeds bound " + format_double(split.bound));
      }
    }
    curves.push_back(std::move(curve));
  }
  emit_curves(c, o, curves, "pairing after translation, " + G->name(), class_sums ? "n" : "i", "b(y, D x)");
  if (c.epsilon) o.write("-cutoff.csv", cutoff_csv.str());
}

void run_finite_homology(const ExperimentConfig& c, Outputs& o) {
  if (!c.n) missing(c, "n");
  const int N = c.top_degree.value_or(3);
  std::ostringstream csv;
  write_csv_row(csv, {"n", "N", "p", "threshold_scale", "degree", "dimension"});
  for (const double p : p_or(c, {1.5, 2.0, 3.0}))
    for (const double scale : {0.1, 1.0, 10.0}) {
      const auto dims = in_field(c, "n", [&] { return finite_group_homology_ranks(*c.n, N, p, scale); });
      for (std::size_t i = 0; i < dims.size(); ++i) {
        write_csv_row(csv, {std::to_string(*c.n), std::to_string(N), format_double(p), format_double(scale),
                            std::to_string(i), std::to_string(dims[i])});
        if (dims[i] != (i == 0 ? 1u : 0u))
          o.result.violations.push_back("C_" + std::to_string(*c.n) + " " + p_label(p) + " H_" + std::to_string(i) +
                                        " has dimension " + std::to_string(dims[i]));
      }
    }
  o.write(".csv", csv.str());
}

void run_finite_index(const ExperimentConfig& c, Outputs& o) {
  if (!c.n) missing(c, "n");
  if (!c.m) missing(c, "m");
  const int N = c.top_degree.value_or(3);
  std::ostringstream csv;
  write_csv_row(csv, {"n", "m", "p", "degree", "group_dimension", "subgroup_dimension"});
  for (const double p : p_or(c, {2.0})) {
    const auto r = in_field(c, "m", [&] { return finite_index_compare(*c.n, *c.m, p, N); });
    for (std::size_t i = 0; i < r.group_ranks.size(); ++i)
      write_csv_row(csv, {std::to_string(*c.n), std::to_string(*c.m), format_double(p), std::to_string(i),
                          std::to_string(r.group_ranks[i]), std::to_string(r.subgroup_ranks[i])});
    if (!r.equal) o.result.violations.push_back(p_label(p) + ": homology of C_n and C_m differ");
  }
  o.write(".csv", csv.str());
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
  Outputs o{config.output, {}};
  switch (config.experiment) {
    case Experiment::verify_resolutions: run_verify_resolutions(config, o); break;
    case Experiment::verify_homotopy: run_verify_homotopy(config, o); break;
    case Experiment::class_sum_homotopy: run_class_sum_homotopy(config, o); break;
    case Experiment::pairing_adjointness: run_pairing_adjointness(config, o); break;
    case Experiment::distance_curve: run_distance_curve(config, o); break;
    case Experiment::translation_decay: run_translation_decay(config, o); break;
    case Experiment::finite_homology: run_finite_homology(config, o); break;
    case Experiment::finite_index: run_finite_index(config, o); break;
  }
  return std::move(o.result);
}

namespace {

int run_one(const ExperimentConfig& config, const std::string& label, std::ostream& out, std::ostream& err) {
  set_ball_cap_override(config.max_ball);
  int code = kExitOk;
  try {
    const auto r = run_experiment(config);
    for (const auto& path : r.written) out << label << ": wrote " << path.string() << '\n';
    for (const auto& note : r.notes) out << label << ": note: " << note << '\n';
    for (const auto& v : r.violations) err << label << ": invariant violated: " << v << '\n';
    if (!r.violations.empty()) code = kExitViolation;
  } catch (const InvariantViolation& e) {
    err << label << ": invariant violated: " << e.what() << '\n';
    code = kExitViolation;
  } catch (const InvalidArgument& e) {
    err << label << ": config error: " << e.what() << '\n';
    code = kExitConfig;
  } catch (const ResourceCapError& e) {
    err << label << ": config error: " << e.what() << '\n';
    code = kExitConfig;
  } catch (const std::exception& e) {
    err << label << ": error: " << e.what() << '\n';
    code = kExitFailure;
  }
  set_ball_cap_override(0);
  return code;
}

}  // namespace

int run_configs(std::span<const std::string> paths, std::ostream& out, std::ostream& err) {
  int worst = kExitOk;
  for (const auto& path : paths) {
    int code;
    try {
      code = run_one(load_config(path), path, out, err);
    } catch (const ConfigError& e) {
      err << "config error: " << e.what() << '\n';
      code = kExitConfig;
    }
    worst = std::max(worst, code);
  }
  return worst;
}

std::string catalog_listing() {
  std::ostringstream o;
  o << "groups:\n"
       "  trivial\n"
       "  cyclic:n        finite cyclic group C_n, generator t\n"
       "  Z, Z^d          free abelian group, generators t (d = 1) or t1..td\n"
       "  free:k          free group, generators x y z w (x1..xk when k > 4)\n"
       "  dihedral-inf    infinite dihedral group <r, s | s^2, (sr)^2>\n"
       "  heisenberg      integer Heisenberg group, generators x y, center z = (0,0,1)\n"
       "  S3              symmetric group on {1,2,3}, generators r = (1 2 3), s = (1 2)\n"
       "resolutions:\n"
       "  cyclic-inf             Z: 0 -> Z[Z] -(t-1)-> Z[Z]\n"
       "  cyclic:n:N             periodic resolution of C_n up to degree N\n"
       "  lattice:d              Koszul resolution of Z^d, d = 1..3\n"
       "  fox:<group>            presentation complex through degree 2\n"
       "  bar:<group>:<degree>:<radius>   bar-resolution slice (degree <= "
    << kMaxBarDegree
    << ")\n"
       "  catalog:";
  for (const auto& name : catalog_resolution_names()) o << ' ' << name;
  o << "\nexperiments:\n";
  for (const auto e : all_experiments()) o << "  " << experiment_name(e) << '\n';
  o << "central families:\n"
       "  heisenberg     powers of z = (0,0,1)\n"
       "  Z, Z^d         powers of the first generator\n"
       "  dihedral-inf   class sums r^n + r^-n\n"
       "config keys:\n"
       "  experiment group resolution degree p R indices seed output max_ball max_iterations\n"
       "  samples h class class_cap x x.<copy> y y.<copy> support epsilon n m N\n";
  return o.str();
}

int verify_all(const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err) {
  static const std::vector<std::pair<std::string, std::string>> suites = {
      {"resolutions", "experiment=verify-resolutions\n"},
      {"homotopy-Z", "experiment=verify-homotopy\ngroup=Z\nh=t\ndegree=1,2\nR=3\n"},
      {"homotopy-heisenberg", "experiment=verify-homotopy\ngroup=heisenberg\nh=(0,0,1)\ndegree=1,2\nR=3\n"},
      {"homotopy-C4", "experiment=verify-homotopy\ngroup=cyclic:4\nh=t\ndegree=1,2\nR=3\n"},
      {"class-sum-heisenberg", "experiment=class-sum-homotopy\ngroup=heisenberg\nclass=(0,0,1)\ndegree=1,2\nR=3\n"},
      {"class-sum-dihedral", "experiment=class-sum-homotopy\ngroup=dihedral-inf\nclass=r\ndegree=1\nR=3\n"},
      {"adjointness", "experiment=pairing-adjointness\nresolution=cyclic-inf,cyclic:4:3,lattice:2,fox:heisenberg\n"
                      "R=1..3\nsamples=100\n"},
      {"distance-Z", "experiment=distance-curve\nresolution=cyclic-inf\ndegree=0\np=1.5,2,3\nR=1..8\n"},
      {"translation-Z", "experiment=translation-decay\ngroup=Z\nsupport=5\nindices=-14..14\n"},
      {"translation-dihedral",
       "experiment=translation-decay\ngroup=dihedral-inf\nsupport=4\nindices=1..12\np=1.5,2,3\nepsilon=0.05\n"},
      {"finite-homology", "experiment=finite-homology\nn=4\nN=3\n"},
      {"finite-index", "experiment=finite-index\nn=4\nm=2\np=1.5,2,3\n"},
  };
  int worst = kExitOk;
  for (const auto& [name, text] : suites) {
    auto config = parse_config(text, name);
    config.output = (out_dir / name).string();
    const int code = run_one(config, name, out, err);
    out << (code == kExitOk ? "[ok] " : "[FAILED] ") << name << '\n';
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace lplab::cli
