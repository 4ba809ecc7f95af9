#include "lplab/homotopy_lab.hpp"

#include <atomic>

namespace lplab {
namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && n > cap / base)
      throw ResourceCapError("cochain slice of degree " + std::to_string(exp) + " exceeds the cap of " +
                             std::to_string(cap) + " tuples");
    n *= base;
  }
  return n;
}

std::vector<Element> full_tuple(const EquivariantCochain& shape, std::size_t flat) {
  std::vector<Element> x;
  x.reserve(shape.degree() + 1);
  x.push_back(shape.group()->identity());
  for (auto& e : shape.slice_tuple(flat)) x.push_back(std::move(e));
  return x;
}

CochainFn sum_fns(std::vector<CochainFn> fs) {
  if (fs.size() == 1) return fs.front();
  return [fs = std::move(fs)](std::span<const Element> x, WindowProbe* probe) -> std::optional<RingElement> {
    std::optional<RingElement> acc;
    bool ok = true;
    for (const auto& f : fs) {
      auto v = f(x, probe);
      if (!v) {
        ok = false;
        if (!probe) return std::nullopt;
        continue;
      }
      if (!acc)
        acc = std::move(*v);
      else
        *acc += *v;
    }
    if (!ok) return std::nullopt;
    return acc;
  };
}

// Fills every slice value of a cochain with f. On failure returns nullopt
// and, when probing, the stored radius f would need.
std::optional<std::vector<RingElement>> tabulate(const CochainFn& f, const EquivariantCochain& shape,
                                                 bool probe_all, std::size_t& required, Exec exec) {
  const auto n = static_cast<std::ptrdiff_t>(shape.slice_size());
  std::vector<RingElement> values(shape.slice_size(), RingElement(shape.group()));
  std::atomic<bool> failed{false};
  std::size_t need = 0;

  auto one = [&](std::ptrdiff_t flat, std::size_t& local_need) {
    if (failed.load(std::memory_order_relaxed) && !probe_all) return;
    const auto x = full_tuple(shape, static_cast<std::size_t>(flat));
    WindowProbe probe;
    auto v = f(x, probe_all ? &probe : nullptr);
    if (!v) {
      failed = true;
      local_need = std::max(local_need, probe.required_radius);
      return;
    }
    values[static_cast<std::size_t>(flat)] = std::move(*v);
  };

  if (exec == Exec::serial) {
    for (std::ptrdiff_t flat = 0; flat < n; ++flat) one(flat, need);
  } else {
#pragma omp parallel
    {
      std::size_t local_need = 0;
#pragma omp for schedule(dynamic, 8)
      for (std::ptrdiff_t flat = 0; flat < n; ++flat) one(flat, local_need);
#pragma omp critical(lplab_tabulate)
      need = std::max(need, local_need);
    }
  }
  required = need;
  if (failed) return std::nullopt;
  return values;
}

}  // namespace

EquivariantCochain::EquivariantCochain(GroupPtr group, std::size_t degree, std::size_t radius, std::size_t cap,
                                       Extension extension)
    : group_(std::move(group)), degree_(degree), extension_(extension) {
  ball_ = std::make_shared<const Ball>(group_->ball(radius, cap));
  const std::size_t count = checked_power(ball_->size(), degree, cap);
  values_ = std::make_shared<std::vector<RingElement>>(count, RingElement(group_));
}

EquivariantCochain EquivariantCochain::random(GroupPtr group, std::size_t degree, std::size_t radius, Rng& rng,
                                              const RandomCochainOptions& options) {
  EquivariantCochain phi(group, degree, radius, default_ball_cap(), Extension::zero);
  const Ball support = group->ball(options.support_radius);
  for (auto& v : *phi.values_) {
    const auto terms = rng.uniform_int(1, static_cast<std::int64_t>(std::max<std::size_t>(options.max_terms, 1)));
    for (std::int64_t t = 0; t < terms; ++t) {
      const auto& g = support[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(support.size()) - 1))];
      const auto num = rng.uniform_int(-options.max_numerator, options.max_numerator);
      const auto den = rng.uniform_int(1, options.max_denominator);
      Rational c(static_cast<long>(num), static_cast<unsigned long>(den));
      c.canonicalize();
      v.add_term(g, c);
    }
  }
  return phi;
}

std::vector<Element> EquivariantCochain::slice_tuple(std::size_t flat) const {
  std::vector<Element> xs(degree_);
  const std::size_t b = ball_->size();
  for (std::size_t k = degree_; k-- > 0;) {
    xs[k] = (*ball_)[flat % b];
    flat /= b;
  }
  return xs;
}

void EquivariantCochain::set_slice_value(std::size_t flat, RingElement v) {
  if (!v.group()->same_as(*group_)) throw InvalidArgument("cochain value from another group");
  if (values_.use_count() > 1) values_ = std::make_shared<std::vector<RingElement>>(*values_);
  values_->at(flat) = std::move(v);
}

std::optional<std::size_t> EquivariantCochain::flat_index(std::span<const Element> xs) const {
  if (xs.size() != degree_) return std::nullopt;
  std::size_t flat = 0;
  for (const auto& x : xs) {
    const auto i = ball_->index_of(x);
    if (!i) return std::nullopt;
    flat = flat * ball_->size() + *i;
  }
  return flat;
}

std::optional<RingElement> EquivariantCochain::evaluate(std::span<const Element> tuple, WindowProbe* probe) const {
  if (tuple.size() != degree_ + 1)
    throw InvalidArgument("degree-" + std::to_string(degree_) + " cochain evaluated on a " +
                          std::to_string(tuple.size()) + "-tuple");
  const Element& x0 = tuple[0];
  const bool at_identity = x0 == group_->identity();
  const Element x0_inv = at_identity ? x0 : group_->inverse(x0);
  std::size_t flat = 0;
  bool inside = true;
  for (std::size_t k = 1; k < tuple.size(); ++k) {
    const Element y = at_identity ? tuple[k] : group_->mul(x0_inv, tuple[k]);
    const auto i = ball_->index_of(y);
    if (!i) {
      if (extension_ == Extension::zero) return RingElement(group_);
      inside = false;
      if (!probe) return std::nullopt;
      probe->required_radius = std::max(probe->required_radius, group_->word_length(y));
      continue;
    }
    flat = flat * ball_->size() + *i;
  }
  if (!inside) return std::nullopt;
  const RingElement& v = (*values_)[flat];
  if (at_identity) return v;
  return v.left_translate(x0);
}

CochainFn EquivariantCochain::as_function() const {
  return [self = *this](std::span<const Element> tuple, WindowProbe* probe) { return self.evaluate(tuple, probe); };
}

EquivariantCochain linear_combination(const Rational& a, const EquivariantCochain& phi, const Rational& b,
                                      const EquivariantCochain& psi) {
  if (!phi.group_->same_as(*psi.group_) || phi.degree_ != psi.degree_ || phi.radius() != psi.radius() ||
      phi.extension_ != psi.extension_)
    throw InvalidArgument("linear combination of cochains with different shapes");
  EquivariantCochain out = phi;
  out.values_ = std::make_shared<std::vector<RingElement>>(*phi.values_);
  for (std::size_t i = 0; i < out.values_->size(); ++i)
    (*out.values_)[i] = a * (*phi.values_)[i] + b * (*psi.values_)[i];
  return out;
}

bool operator==(const EquivariantCochain& a, const EquivariantCochain& b) {
  return a.group_->same_as(*b.group_) && a.degree_ == b.degree_ && a.radius() == b.radius() &&
         a.extension_ == b.extension_ &&
         *a.values_ == *b.values_;
}

CochainFn coboundary_fn(CochainFn f) {
  return [f = std::move(f)](std::span<const Element> x, WindowProbe* probe) -> std::optional<RingElement> {
    if (x.size() < 2) throw InvalidArgument("coboundary evaluated below degree 1");
    std::optional<RingElement> acc;
    bool ok = true;
    std::vector<Element> face;
    face.reserve(x.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
      face.clear();
      for (std::size_t k = 0; k < x.size(); ++k)
        if (k != i) face.push_back(x[k]);
      auto v = f(face, probe);
      if (!v) {
        ok = false;
        if (!probe) return std::nullopt;
        continue;
      }
      if (i % 2) *v *= Rational(-1);
      if (!acc)
        acc = std::move(*v);
      else
        *acc += *v;
    }
    if (!ok) return std::nullopt;
    return acc;
  };
}

CochainFn homotopy_fn(CochainFn f, GroupPtr group, Element g) {
  return [f = std::move(f), group = std::move(group), g = std::move(g)](
             std::span<const Element> x, WindowProbe* probe) -> std::optional<RingElement> {
    std::vector<Element> shifted;
    shifted.reserve(x.size());
    for (const auto& xi : x) shifted.push_back(group->mul(g, xi));
    std::optional<RingElement> acc;
    bool ok = true;
    std::vector<Element> args;
    args.reserve(x.size() + 1);
    for (std::size_t k = 0; k < x.size(); ++k) {
      args.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      args.insert(args.end(), shifted.begin() + static_cast<std::ptrdiff_t>(k), shifted.end());
      auto v = f(args, probe);
      if (!v) {
        ok = false;
        if (!probe) return std::nullopt;
        continue;
      }
      if (k % 2 == 0) *v *= Rational(-1);
      if (!acc)
        acc = std::move(*v);
      else
        *acc += *v;
    }
    if (!ok) return std::nullopt;
    if (!acc) return RingElement(group);
    return acc;
  };
}

EquivariantCochain materialize(const CochainFn& f, const GroupPtr& group, std::size_t degree, std::size_t radius,
                               Exec exec) {
  EquivariantCochain out(group, degree, radius);
  std::size_t required = 0;
  auto values = tabulate(f, out, /*probe_all=*/true, required, exec);
  if (!values)
    throw WindowError("window underflow: degree-" + std::to_string(degree) + " values on ball(" +
                          std::to_string(radius) + ") need input stored on ball(" + std::to_string(required) + ")",
                      required);
  for (std::size_t i = 0; i < values->size(); ++i) out.set_slice_value(i, std::move((*values)[i]));
  return out;
}

namespace {

EquivariantCochain materialize_largest(const CochainFn& f, const GroupPtr& group, std::size_t degree,
                                       std::size_t start_radius, Exec exec) {
  for (std::size_t r = start_radius + 1; r-- > 0;) {
    EquivariantCochain shape(group, degree, r);
    std::size_t required = 0;
    if (auto values = tabulate(f, shape, /*probe_all=*/false, required, exec)) {
      for (std::size_t i = 0; i < values->size(); ++i) shape.set_slice_value(i, std::move((*values)[i]));
      return shape;
    }
  }
  // Radius 0 failed as well; report what it needs.
  return materialize(f, group, degree, 0, exec);
}

ResidualReport residual_impl(const EquivariantCochain& phi, const std::vector<Element>& members, Exec exec) {
  const auto& G = phi.group();
  const CochainFn F = phi.as_function();
  std::vector<CochainFn> j_terms, jd_terms;
  const CochainFn dF = coboundary_fn(F);
  for (const auto& g : members) {
    j_terms.push_back(homotopy_fn(F, G, g));
    jd_terms.push_back(homotopy_fn(dF, G, g));
  }
  const CochainFn dJ = coboundary_fn(sum_fns(std::move(j_terms)));
  const CochainFn Jd = sum_fns(std::move(jd_terms));
  const Rational n_k(static_cast<long>(members.size()));

  ResidualReport report;
  const auto n = static_cast<std::ptrdiff_t>(phi.slice_size());

  auto one = [&](std::ptrdiff_t flat, ResidualReport& local) {
    const auto x = full_tuple(phi, static_cast<std::size_t>(flat));
    auto a = dJ(x, nullptr);
    if (!a) {
      ++local.tuples_skipped;
      return;
    }
    auto b = Jd(x, nullptr);
    if (!b) {
      ++local.tuples_skipped;
      return;
    }
    const RingElement& v = phi.slice_value(static_cast<std::size_t>(flat));
    RingElement diff = *a + *b - n_k * v;
    for (const auto& g : members) diff += v.left_translate(g);
    const Rational m = diff.max_abs_coefficient();
    if (m > local.max_abs) local.max_abs = m;
    ++local.tuples_checked;
  };

  if (exec == Exec::serial) {
    for (std::ptrdiff_t flat = 0; flat < n; ++flat) one(flat, report);
  } else {
#pragma omp parallel
    {
      ResidualReport local;
#pragma omp for schedule(dynamic, 4)
      for (std::ptrdiff_t flat = 0; flat < n; ++flat) one(flat, local);
#pragma omp critical(lplab_residual)
      {
        if (local.max_abs > report.max_abs) report.max_abs = local.max_abs;
        report.tuples_checked += local.tuples_checked;
        report.tuples_skipped += local.tuples_skipped;
      }
    }
  }

  if (report.tuples_checked == 0) {
    WindowProbe probe;
    std::vector<Element> x(phi.degree() + 1, G->identity());
    (void)dJ(x, &probe);
    (void)Jd(x, &probe);
    throw WindowError("window underflow: no tuple of ball(" + std::to_string(phi.radius()) +
                          ") keeps every argument inside the window; need radius " +
                          std::to_string(probe.required_radius),
                      probe.required_radius);
  }
  return report;
}

void require_central(const GroupPtr& G, const Element& h) {
  if (!is_central(RingElement(G, h)))
    throw InvalidArgument("h = " + G->format(h) + " is not central in " + G->name());
}

}  // namespace

EquivariantCochain coboundary(const EquivariantCochain& phi, std::optional<std::size_t> out_radius, Exec exec) {
  const CochainFn f = coboundary_fn(phi.as_function());
  if (out_radius) return materialize(f, phi.group(), phi.degree() + 1, *out_radius, exec);
  return materialize_largest(f, phi.group(), phi.degree() + 1, phi.radius(), exec);
}

EquivariantCochain homotopy_j(const EquivariantCochain& phi, const Element& h, std::optional<std::size_t> out_radius,
                              Exec exec) {
  if (phi.degree() == 0) throw InvalidArgument("homotopy operator needs a cochain of degree >= 1");
  require_central(phi.group(), h);
  const CochainFn f = homotopy_fn(phi.as_function(), phi.group(), h);
  if (out_radius) return materialize(f, phi.group(), phi.degree() - 1, *out_radius, exec);
  return materialize_largest(f, phi.group(), phi.degree() - 1, phi.radius(), exec);
}

ResidualReport homotopy_residual(const EquivariantCochain& phi, const Element& h, Exec exec) {
  if (phi.degree() < 1) throw InvalidArgument("homotopy residual needs degree >= 1");
  require_central(phi.group(), h);
  return residual_impl(phi, {h}, exec);
}

ResidualReport class_sum_homotopy_residual(const EquivariantCochain& phi, const Element& representative,
                                           std::size_t cap, Exec exec) {
  if (phi.degree() < 1) throw InvalidArgument("homotopy residual needs degree >= 1");
  const auto cls = conjugacy_class(*phi.group(), representative, cap);
  if (cls.exceeds_cap)
    throw InvalidArgument("class of " + phi.group()->format(representative) + " is infinite or exceeds the cap of " +
                          std::to_string(cap));
  return residual_impl(phi, cls.members, exec);
}

Rational equivariance_defect(const CochainFn& f, const Group& group, std::size_t degree, std::size_t radius) {
  const Ball ball = group.ball(radius);
  const std::size_t count = checked_power(ball.size(), degree, default_ball_cap());
  Rational worst = 0;
  std::vector<Element> x(degree + 1), ax(degree + 1);
  for (std::size_t flat = 0; flat < count; ++flat) {
    x[0] = group.identity();
    std::size_t rest = flat;
    for (std::size_t k = degree; k >= 1; --k) {
      x[k] = ball[rest % ball.size()];
      rest /= ball.size();
    }
    const auto fx = f(x, nullptr);
    if (!fx) continue;
    for (const auto& a : group.symmetric_generators()) {
      for (std::size_t k = 0; k <= degree; ++k) ax[k] = group.mul(a, x[k]);
      const auto fax = f(ax, nullptr);
      if (!fax) continue;
      const Rational m = (*fax - fx->left_translate(a)).max_abs_coefficient();
      if (m > worst) worst = m;
    }
  }
  return worst;
}

}  // namespace lplab
