#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lplab/common.hpp"
#include "lplab/group_ring.hpp"

namespace lplab {

// Tracks the smallest stored radius that would have made an evaluation
// succeed.
struct WindowProbe {
  std::size_t required_radius = 0;
};

// An argument fell outside the stored window.
class WindowError : public InvalidArgument {
 public:
  WindowError(const std::string& what, std::size_t required_radius)
      : InvalidArgument(what), required_radius_(required_radius) {}
  std::size_t required_radius() const { return required_radius_; }

 private:
  std::size_t required_radius_;
};

// Cochain evaluated at a full tuple (x_0, ..., x_n). nullopt means some
// argument left the stored window.
using CochainFn =
    std::function<std::optional<RingElement>(std::span<const Element> tuple, WindowProbe* probe)>;

struct RandomCochainOptions {
  std::size_t support_radius = 1;  // values are supported in ball(support_radius)
  std::size_t max_terms = 3;
  std::int64_t max_numerator = 5;
  std::int64_t max_denominator = 4;
};

// What a cochain is outside its stored slice. A windowed cochain is a table
// of values known only there (evaluation fails outside); a finitely
// supported one is zero there and evaluates everywhere.
enum class Extension { window, zero };

// Degree-n bar cochain with values in Q[G] (finitely supported functions on
// G), stored on the equivariant slice (1, x_1, ..., x_n), x_i in ball(radius).
// Evaluation at (g, g x_1, ..., g x_n) is g * value(1, x_1, ..., x_n).
class EquivariantCochain {
 public:
  // Zero cochain.
  EquivariantCochain(GroupPtr group, std::size_t degree, std::size_t radius,
                     std::size_t cap = default_ball_cap(), Extension extension = Extension::window);

  // Finitely supported: random values on the slice, zero outside it.

  static EquivariantCochain random(GroupPtr group, std::size_t degree, std::size_t radius, Rng& rng,
                                   const RandomCochainOptions& options = {});

  const GroupPtr& group() const { return group_; }
  std::size_t degree() const { return degree_; }
  std::size_t radius() const { return ball_->radius(); }
  const Ball& ball() const { return *ball_; }
  Extension extension() const { return extension_; }
  // Number of slice tuples, |ball|^degree.
  std::size_t slice_size() const { return values_->size(); }

  // Slice tuple of a flat index, x_1 varying slowest.
  std::vector<Element> slice_tuple(std::size_t flat) const;
  const RingElement& slice_value(std::size_t flat) const { return (*values_)[flat]; }
  void set_slice_value(std::size_t flat, RingElement v);

  std::optional<std::size_t> flat_index(std::span<const Element> xs) const;

  std::optional<RingElement> evaluate(std::span<const Element> tuple, WindowProbe* probe = nullptr) const;
  CochainFn as_function() const;

  friend EquivariantCochain linear_combination(const Rational& a, const EquivariantCochain& phi,
                                               const Rational& b, const EquivariantCochain& psi);
  friend bool operator==(const EquivariantCochain& a, const EquivariantCochain& b);

 private:
  GroupPtr group_;
  std::size_t degree_;
  Extension extension_;
  std::shared_ptr<const Ball> ball_;
  std::shared_ptr<std::vector<RingElement>> values_;
};

// (d f)(x_0..x_{n+1}) = sum_i (-1)^i f(x_0..^x_i..x_{n+1}).
CochainFn coboundary_fn(CochainFn f);
// (j f)(x_0..x_n) = sum_k (-1)^{k+1} f(x_0..x_k, g x_k, ..., g x_n), left
// multiplication by g. No centrality check.
CochainFn homotopy_fn(CochainFn f, GroupPtr group, Element g);

// Tabulates f on the slice of ball(radius)^degree. Throws WindowError naming
// the stored radius f would need.
EquivariantCochain materialize(const CochainFn& f, const GroupPtr& group, std::size_t degree,
                               std::size_t radius, Exec exec = Exec::parallel);

// Degree n -> n+1. Without out_radius, the largest radius <= phi.radius()
// on which every value is computable.
EquivariantCochain coboundary(const EquivariantCochain& phi, std::optional<std::size_t> out_radius = {},
                              Exec exec = Exec::parallel);
// Degree n+1 -> n. Rejects non-central h.
EquivariantCochain homotopy_j(const EquivariantCochain& phi, const Element& h,
                              std::optional<std::size_t> out_radius = {}, Exec exec = Exec::parallel);

struct ResidualReport {
  Rational max_abs = 0;
  std::size_t tuples_checked = 0;
  std::size_t tuples_skipped = 0;  // some intermediate argument left the window
};

// max |(d j + j d) phi (x) - (phi(x) - h phi(x))| over slice tuples whose
// intermediate arguments all stay inside the window.
ResidualReport homotopy_residual(const EquivariantCochain& phi, const Element& h,
                                 Exec exec = Exec::parallel);

// Same with J = sum_{g in class} j_g and target n_k phi - (class sum) phi.
ResidualReport class_sum_homotopy_residual(const EquivariantCochain& phi, const Element& representative,
                                           std::size_t cap, Exec exec = Exec::parallel);

// max |f(a x) - a f(x)| over slice tuples x of ball(radius)^degree and
// generators a, skipping undefined evaluations.
Rational equivariance_defect(const CochainFn& f, const Group& group, std::size_t degree, std::size_t radius);

}  // namespace lplab
