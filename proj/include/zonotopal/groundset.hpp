#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "zonotopal/exactla.hpp"
#include "zonotopal/index_set.hpp"
#include "zonotopal/matroid.hpp"

namespace zonotopal {

enum class ElementTag { x, y };

struct GroundElement {
  ElementTag tag = ElementTag::x;
  std::size_t index = 0;  // position within its part
  VecQ vector;
  Rat lambda;
};

// The ground set X u Y. Ground indices 0..N-1 are X in input order and
// N..N+M-1 are y_1..y_M. `order` lists ground indices from smallest to
// largest; every X element precedes every Y element and Y keeps its order.
class Configuration {
 public:
  Configuration(std::size_t n, std::vector<VecQ> x, std::vector<VecQ> y, std::vector<Rat> lambda,
                std::vector<std::size_t> x_order, std::uint64_t seed);

  std::size_t n() const { return n_; }
  std::size_t x_count() const { return x_.size(); }
  std::size_t y_count() const { return y_.size(); }
  std::size_t ground_size() const { return x_.size() + y_.size(); }
  std::uint64_t seed() const { return seed_; }

  const std::vector<VecQ>& x() const { return x_; }
  const std::vector<VecQ>& y() const { return y_; }
  const std::vector<Rat>& lambda() const { return lambda_; }
  const VecQ& vector(std::size_t g) const { return g < x_.size() ? x_[g] : y_[g - x_.size()]; }
  const Rat& lambda(std::size_t g) const { return lambda_[g]; }
  bool is_y(std::size_t g) const { return g >= x_.size(); }
  GroundElement element(std::size_t g) const;

  IndexSet x_set() const { return IndexSet::prefix(x_.size()); }
  IndexSet y_set() const { return IndexSet::range(x_.size(), y_.size()); }
  // Y_i = {y_1, ..., y_i}; empty for i <= 0.
  IndexSet y_prefix(std::ptrdiff_t i) const;
  std::size_t y_ground_index(std::size_t i) const { return x_.size() + i; }

  const std::vector<std::size_t>& order() const { return order_; }
  // Position of ground element g in the total order.
  std::size_t position(std::size_t g) const { return position_[g]; }

  // Matroids over X alone and over X u Y.
  const VectorMatroid& x_matroid() const { return x_matroid_; }
  const VectorMatroid& ground_matroid() const { return ground_matroid_; }

  // All ground vectors (X then Y).
  std::vector<VecQ> ground_vectors() const;

 private:
  std::size_t n_;
  std::vector<VecQ> x_, y_;
  std::vector<Rat> lambda_;
  std::vector<std::size_t> order_, position_;
  std::uint64_t seed_;
  VectorMatroid x_matroid_;
  VectorMatroid ground_matroid_;
};

struct GeneralPositionWitness {
  std::size_t y = 0;  // ground index of the offending y
  IndexSet span_set;  // (n-1)-subset whose span contains it
};

// Pass iff no y in Y lies in the span of n-1 other ground vectors.
std::optional<GeneralPositionWitness> verify_general_position(std::size_t n, const std::vector<VecQ>& x,
                                                              const std::vector<VecQ>& y);

// Appends vectors on the moment curve (1, t, ..., t^(n-1)) at seeded integer
// parameters until `count` vectors are present, rejecting candidates that
// break general position. The existing prefix is never modified.
std::vector<VecQ> extend_y(std::size_t n, const std::vector<VecQ>& x, std::vector<VecQ> y, std::size_t count,
                           std::uint64_t seed);
inline std::vector<VecQ> generate_y(std::size_t n, const std::vector<VecQ>& x, std::size_t count,
                                    std::uint64_t seed) {
  return extend_y(n, x, {}, count, seed);
}

struct CommonZeroWitness {
  IndexSet elements;  // at most n+1 affine forms, linearly dependent, with a common zero
};
struct CoincidentVertexWitness {
  IndexSet first, second;  // two bases with the same vertex
};
using LambdaWitness = std::variant<CommonZeroWitness, CoincidentVertexWitness>;

// Pass iff no n+1 affine forms q_z share a zero, no smaller dependent set of
// them does either, and the vertex map is injective on the bases of the
// ground set.
std::optional<LambdaWitness> verify_generic_lambda(std::size_t n, const std::vector<VecQ>& ground,
                                                   const std::vector<Rat>& lambda);

// Draws lambda values for the ground elements past the given prefix, one
// element at a time, each verified against everything before it.
std::vector<Rat> extend_lambda(std::size_t n, const std::vector<VecQ>& ground, std::vector<Rat> lambda,
                               std::uint64_t seed);
inline std::vector<Rat> generate_lambda(std::size_t n, const std::vector<VecQ>& ground, std::uint64_t seed) {
  return extend_lambda(n, ground, {}, seed);
}

struct ConfigurationRequest {
  std::size_t n = 0;
  std::vector<VecQ> x;
  std::optional<std::vector<VecQ>> y;       // verified when present
  std::optional<std::vector<Rat>> lambda;   // length N (Y part generated) or N + #Y
  std::optional<std::vector<std::size_t>> x_order;
  std::uint64_t seed = 0;
  std::size_t y_count = 0;  // target length when Y is generated or too short
};

// Builds and certifies a configuration: full rank, Y in general position,
// generic lambda. User-supplied Y and lambda are verified, never trusted.
Configuration make_configuration(const ConfigurationRequest& request);

// Same configuration with Y extended to `y_count` elements (prefix kept) and
// lambda drawn for the new elements.
Configuration extend_configuration(const Configuration& config, std::size_t y_count);

}  // namespace zonotopal
