#include "lplab/resolutions.hpp"

#include <algorithm>
#include <charconv>

namespace lplab {
namespace {

Word free_reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return free_reduce(out);
}

Word commutator(const Word& a, const Word& b) {
  return concat({a, b, inverse_word(a), inverse_word(b)});
}

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument("malformed " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

RingElement generator_minus_one(const GroupPtr& G, const Element& g) {
  return RingElement(G, g) - RingElement::one(G);
}

}  // namespace

RingMatrix::RingMatrix(GroupPtr group, std::size_t rows, std::size_t cols)
    : group_(std::move(group)), rows_(rows), cols_(cols), entries_(rows * cols, RingElement(group_)) {}

bool RingMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

std::size_t RingMatrix::max_word_length() const {
  std::size_t w = 0;
  for (const auto& e : entries_) w = std::max(w, e.max_word_length());
  return w;
}

RingMatrix compose(const RingMatrix& lower, const RingMatrix& upper) {
  if (lower.cols() != upper.rows())
    throw InvalidArgument("boundary shapes do not compose");
  RingMatrix out(lower.group(), lower.rows(), upper.cols());
  for (std::size_t s = 0; s < lower.rows(); ++s)
    for (std::size_t c = 0; c < upper.cols(); ++c)
      for (std::size_t r = 0; r < upper.rows(); ++r)
        out.at(s, c) += upper.at(r, c) * lower.at(s, r);
  return out;
}

Word parse_word(const std::vector<std::string>& labels, std::string_view text) {
  Word w;
  std::size_t start = 0;
  std::string t(text);
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i < t.size() && t[i] != '*') continue;
    std::string tok = t.substr(start, i - start);
    start = i + 1;
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok.empty() || tok == "1") continue;
    std::int64_t k = 1;
    const auto caret = tok.find('^');
    std::string label = tok.substr(0, caret);
    if (caret != std::string::npos) {
      const std::string e = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), k);
      if (ec != std::errc() || ptr != e.data() + e.size())
        throw InvalidArgument("malformed exponent in word '" + t + "'");
    }
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw InvalidArgument("unknown generator '" + label + "' in word");
    const int letter = static_cast<int>(it - labels.begin()) + 1;
    for (std::int64_t j = 0; j < std::abs(k); ++j) w.push_back(k > 0 ? letter : -letter);
  }
  return free_reduce(w);
}

std::string format_word(const std::vector<std::string>& labels, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += labels[static_cast<std::size_t>(std::abs(w[i]) - 1)];
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

Element evaluate_word(const Group& group, const Word& w) {
  Element acc = group.identity();
  const auto& gens = group.generators();
  for (int l : w) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    if (g >= gens.size()) throw InvalidArgument("word letter out of range for " + group.name());
    acc = group.mul(acc, l > 0 ? gens[g] : group.inverse(gens[g]));
  }
  return acc;
}

RingElement fox_derivative(const GroupPtr& group, const Word& w, std::size_t gen) {
  const auto& gens = group->generators();
  if (gen >= gens.size()) throw InvalidArgument("Fox derivative generator out of range");
  const int letter = static_cast<int>(gen) + 1;
  const Element x_inv = group->inverse(gens[gen]);
  RingElement d(group);
  Element prefix = group->identity();
  for (int l : w) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    const Element step = l > 0 ? gens[g] : group->inverse(gens[g]);
    if (l == letter) d.add_term(prefix, 1);
    if (l == -letter) d.add_term(group->mul(prefix, x_inv), -1);
    prefix = group->mul(prefix, step);
  }
  return d;
}

Presentation catalog_presentation(const Group& group) {
  Presentation p{group.generator_labels(), {}};
  const auto n = group.spec().param;
  switch (group.spec().kind) {
    case GroupKind::cyclic:
      p.relators.push_back(Word(static_cast<std::size_t>(n), 1));
      break;
    case GroupKind::lattice:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) p.relators.push_back(commutator({i}, {j}));
      break;
    case GroupKind::free_group:
      break;
    case GroupKind::infinite_dihedral:  // r = 1, s = 2
      p.relators = {{2, 2}, {2, 1, 2, 1}};
      break;
    case GroupKind::heisenberg: {  // x = 1, y = 2, z = [x, y] central
      const Word z = commutator({1}, {2});
      p.relators = {commutator({1}, z), commutator({2}, z)};
      break;
    }
    case GroupKind::symmetric3:  // r = (1 2 3), s = (1 2)
      p.relators = {{1, 1, 1}, {2, 2}, {2, 1, 2, 1}};
      break;
    case GroupKind::trivial:
      throw InvalidArgument("no catalog presentation for the trivial group");
  }
  return p;
}

const RingMatrix& Resolution::boundary(std::size_t i) const {
  if (i < 1 || i > boundaries.size())
    throw InvalidArgument("boundary index " + std::to_string(i) + " outside 1.." +
                          std::to_string(boundaries.size()) + " for " + name);
  return boundaries[i - 1];
}

Resolution cyclic_infinite_resolution() {
  auto G = Group::make(GroupSpec{GroupKind::lattice, 1});
  RingMatrix d1(G, 1, 1);
  d1.at(0, 0) = generator_minus_one(G, G->generators()[0]);
  return Resolution{G, "cyclic-inf", {1, 1}, {d1}, std::nullopt};
}

Resolution periodic_cyclic_resolution(int n, int length) {
  if (n < 2) throw InvalidArgument("periodic resolution needs n >= 2");
  if (length < 1) throw InvalidArgument("periodic resolution needs length >= 1");
  auto G = Group::make(GroupSpec{GroupKind::cyclic, n});
  const Element t = G->generators()[0];
  RingElement norm(G);
  for (int k = 0; k < n; ++k) norm.add_term(G->pow(t, k), 1);
  Resolution res{G, "cyclic:" + std::to_string(n) + ":" + std::to_string(length), {1}, {}, std::nullopt};
  for (int i = 1; i <= length; ++i) {
    RingMatrix d(G, 1, 1);
    d.at(0, 0) = (i % 2 == 1) ? generator_minus_one(G, t) : norm;
    res.boundaries.push_back(d);
    res.ranks.push_back(1);
  }
  return res;
}

Resolution fox_partial_resolution(const GroupPtr& group, const Presentation& presentation) {
  const std::size_t k = presentation.generators.size();
  if (k != group->generators().size())
    throw InvalidArgument("presentation has " + std::to_string(k) + " generators but " + group->name() +
                          " has " + std::to_string(group->generators().size()));
  for (std::size_t i = 0; i < presentation.relators.size(); ++i) {
    const auto& r = presentation.relators[i];
    if (r.empty() || free_reduce(r) != r)
      throw InvalidArgument("relator " + std::to_string(i) + " is not a nonempty reduced word");
    if (evaluate_word(*group, r) != group->identity())
      throw InvalidArgument("presentation mismatch: relator " +
                            format_word(presentation.generators, r) + " is not trivial in " +
                            group->name());
  }
  const std::size_t m = presentation.relators.size();
  RingMatrix d1(group, 1, k);
  for (std::size_t j = 0; j < k; ++j) d1.at(0, j) = generator_minus_one(group, group->generators()[j]);
  RingMatrix d2(group, k, m);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < m; ++i) d2.at(j, i) = fox_derivative(group, presentation.relators[i], j);
  return Resolution{group, "fox:" + group->name(), {1, k, m}, {d1, d2}, presentation};
}

Resolution lattice_resolution(int d) {
  if (d < 1 || d > 3) throw InvalidArgument("lattice resolution supports 1 <= d <= 3, got " + std::to_string(d));
  auto G = Group::make(GroupSpec{GroupKind::lattice, d});
  // Subsets of {0..d-1} of each size, lexicographic.
  std::vector<std::vector<unsigned>> by_size(static_cast<std::size_t>(d) + 1);
  for (unsigned mask = 0; mask < (1u << d); ++mask) by_size[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
  auto as_list = [d](unsigned mask) {
    std::vector<int> v;
    for (int j = 0; j < d; ++j)
      if (mask & (1u << j)) v.push_back(j);
    return v;
  };
  for (auto& masks : by_size)
    std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) { return as_list(a) < as_list(b); });

  Resolution res{G, "lattice:" + std::to_string(d), {}, {}, std::nullopt};
  for (const auto& masks : by_size) res.ranks.push_back(masks.size());
  for (std::size_t i = 1; i <= static_cast<std::size_t>(d); ++i) {
    const auto& rows = by_size[i - 1];
    const auto& cols = by_size[i];
    RingMatrix m(G, rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const unsigned S = cols[c];
      for (int j = 0; j < d; ++j) {
        if (!(S & (1u << j))) continue;
        const int below = __builtin_popcount(S & ((1u << j) - 1));
        const unsigned T = S & ~(1u << j);
        const auto r = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), T) - rows.begin());
        RingElement e = generator_minus_one(G, G->generators()[static_cast<std::size_t>(j)]);
        if (below % 2) e = -e;
        m.at(r, c) += e;
      }
    }
    res.boundaries.push_back(m);
  }
  return res;
}

Resolution make_resolution(std::string_view name) {
  const std::string n(name);
  if (n == "cyclic-inf") return cyclic_infinite_resolution();
  if (n.rfind("cyclic:", 0) == 0) {
    const auto rest = std::string_view(n).substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw InvalidArgument("resolution 'cyclic:n:N' needs both n and N, got '" + n + "'");
    return periodic_cyclic_resolution(static_cast<int>(parse_size(rest.substr(0, colon), "cyclic order")),
                                      static_cast<int>(parse_size(rest.substr(colon + 1), "resolution length")));
  }
  if (n.rfind("lattice:", 0) == 0)
    return lattice_resolution(static_cast<int>(parse_size(std::string_view(n).substr(8), "lattice rank")));
  if (n.rfind("fox:", 0) == 0) {
    auto G = Group::make(std::string_view(n).substr(4));
    return fox_partial_resolution(G, catalog_presentation(*G));
  }
  if (n.rfind("bar:", 0) == 0)
    throw InvalidArgument("bar resolutions are only available to homotopy experiments: '" + n + "'");
  throw InvalidArgument("unknown resolution '" + n + "'");
}

std::vector<std::string> catalog_resolution_names() {
  std::vector<std::string> names{"cyclic-inf"};
  for (int n : {2, 3, 4, 6})
    for (int N = 1; N <= 4; ++N) names.push_back("cyclic:" + std::to_string(n) + ":" + std::to_string(N));
  for (int d = 1; d <= 3; ++d) names.push_back("lattice:" + std::to_string(d));
  for (const char* g : {"Z", "Z^2", "Z^3", "cyclic:4", "free:2", "dihedral-inf", "heisenberg", "S3"})
    names.push_back(std::string("fox:") + g);
  return names;
}

BarBasis bar_resolution_spaces(const GroupPtr& group, std::size_t degree, std::size_t radius, std::size_t cap) {
  if (degree > kMaxBarDegree)
    throw InvalidArgument("bar degree " + std::to_string(degree) + " exceeds the cap of " +
                          std::to_string(kMaxBarDegree));
  const Ball ball = group->ball(radius, cap);
  std::size_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    if (count > cap / std::max<std::size_t>(ball.size(), 1))
      throw ResourceCapError("bar module of degree " + std::to_string(degree) + " exceeds the cap");
    count *= ball.size();
  }
  BarBasis basis{group, degree, radius, {}};
  basis.tuples.reserve(count);
  std::vector<std::size_t> idx(degree, 0);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<Element> t;
    t.reserve(degree);
    for (auto i : idx) t.push_back(ball[i]);
    basis.tuples.push_back(std::move(t));
    for (std::size_t k = degree; k-- > 0;) {
      if (++idx[k] < ball.size()) break;
      idx[k] = 0;
    }
  }
  return basis;
}

BarSpec parse_bar_name(std::string_view name) {
  const std::string n(name);
  if (n.rfind("bar:", 0) != 0) throw InvalidArgument("not a bar resolution name: '" + n + "'");
  const auto last = n.rfind(':');
  const auto mid = n.rfind(':', last - 1);
  if (mid <= 3) throw InvalidArgument("bar resolution name must be bar:<group>:<degree>:<radius>");
  BarSpec spec;
  spec.group = GroupSpec::parse(std::string_view(n).substr(4, mid - 4));
  spec.degree = parse_size(std::string_view(n).substr(mid + 1, last - mid - 1), "bar degree");
  spec.radius = parse_size(std::string_view(n).substr(last + 1), "bar radius");
  if (spec.degree > kMaxBarDegree) throw InvalidArgument("bar degree exceeds the cap of 3");
  return spec;
}

std::vector<RingElement> fox_identity_defects(const GroupPtr& group, const Presentation& p) {
  std::vector<RingElement> out;
  for (const auto& r : p.relators) {
    RingElement lhs(group);
    for (std::size_t j = 0; j < group->generators().size(); ++j)
      lhs += fox_derivative(group, r, j) * generator_minus_one(group, group->generators()[j]);
    RingElement rhs = RingElement(group, evaluate_word(*group, r)) - RingElement::one(group);
    out.push_back(lhs - rhs);
  }
  return out;
}

ValidationReport validate(const Resolution& res) {
  ValidationReport report;
  if (res.ranks.size() != res.boundaries.size() + 1) {
    report.failures.push_back({"shape", 0, 0, 0, "ranks and boundaries disagree in length"});
    return report;
  }
  for (std::size_t i = 1; i <= res.length(); ++i) {
    const auto& d = res.boundary(i);
    if (d.rows() != res.ranks[i - 1] || d.cols() != res.ranks[i])
      report.failures.push_back({"shape", i, d.rows(), d.cols(), "boundary shape disagrees with ranks"});
  }
  if (!report.ok()) return report;

  if (res.length() >= 1) {
    const auto& d1 = res.boundary(1);
    for (std::size_t r = 0; r < d1.rows(); ++r)
      for (std::size_t c = 0; c < d1.cols(); ++c) {
        ++report.checks;
        const Rational a = augment(d1.at(r, c));
        if (a != 0)
          report.failures.push_back({"augmentation", 1, r, c, "augmentation " + to_fraction_string(a)});
      }
  }
  for (std::size_t i = 1; i + 1 <= res.length(); ++i) {
    const RingMatrix comp = compose(res.boundary(i), res.boundary(i + 1));
    for (std::size_t r = 0; r < comp.rows(); ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c) {
        ++report.checks;
        if (!comp.at(r, c).is_zero())
          report.failures.push_back({"composition", i, r, c, "entry " + format(comp.at(r, c))});
      }
  }
  if (res.presentation) {
    const auto defects = fox_identity_defects(res.group, *res.presentation);
    for (std::size_t k = 0; k < defects.size(); ++k) {
      ++report.checks;
      if (!defects[k].is_zero())
        report.failures.push_back({"fox-identity", k, 0, 0, "defect " + format(defects[k])});
    }
  }
  return report;
}

}  // namespace lplab
