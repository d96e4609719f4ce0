#include "zonotopal/groundset.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace zonotopal {

namespace {

constexpr std::size_t kAttemptBudget = 20000;
constexpr std::uint64_t kYStream = 0x59a1e8c3d2b0f417ULL;
constexpr std::uint64_t kLambdaStream = 0x1b7d4c2e9f03a865ULL;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent, reproducible stream for element `index` of a generated part.
std::mt19937_64 element_stream(std::uint64_t seed, std::uint64_t stream, std::size_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed ^ stream) + index));
}

// Uniform integer in [-range, range]; modulo bias is irrelevant here.
long draw(std::mt19937_64& rng, long range) {
  const auto width = static_cast<std::uint64_t>(2 * range + 1);
  return static_cast<long>(rng() % width) - range;
}

MatQ rows_of(const std::vector<VecQ>& ground, IndexSet s, std::size_t n) {
  MatQ m(s.size(), n);
  std::size_t r = 0;
  for (auto e : s) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = ground[e][c];
    ++r;
  }
  return m;
}

VecQ lambdas_of(const std::vector<Rat>& lambda, IndexSet s) {
  VecQ b;
  for (auto e : s) b.push_back(lambda[e]);
  return b;
}

// The forms q_w share a zero although their linear parts are dependent. For
// #w = n + 1 this is just a common zero.
bool degenerate_common_zero(const std::vector<VecQ>& ground, const std::vector<Rat>& lambda, IndexSet w,
                            std::size_t n) {
  const auto rows = rows_of(ground, w, n);
  return rank(rows) < w.size() && is_consistent(rows, lambdas_of(lambda, w));
}

std::vector<std::size_t> all_indices_but(std::size_t total, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < total; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

// Conditions of verify_generic_lambda restricted to subsets that contain
// `newest`, within the prefix ground[0..newest].
std::optional<LambdaWitness> check_lambda_element(std::size_t n, const std::vector<VecQ>& ground,
                                                  const std::vector<Rat>& lambda, std::size_t newest,
                                                  const VectorMatroid& prefix) {
  std::optional<LambdaWitness> witness;
  const auto others = all_indices_but(newest, newest);
  for (std::size_t size = 0; size <= n && !witness; ++size)
    for_each_subset_of_size(others, size, [&](IndexSet s) {
      if (witness) return;
      const IndexSet w = s.with(newest);
      if (degenerate_common_zero(ground, lambda, w, n)) witness = CommonZeroWitness{w};
    });
  if (witness) return witness;

  // Vertex injectivity between bases through `newest` and all other bases.
  std::vector<std::pair<VecQ, IndexSet>> vertices;
  const auto everyone = all_indices_but(newest + 1, newest + 1);
  for_each_subset_of_size(everyone, n, [&](IndexSet b) {
    if (!prefix.is_basis(b)) return;
    vertices.emplace_back(solve(rows_of(ground, b, n), lambdas_of(lambda, b)), b);
  });
  for (std::size_t i = 0; i < vertices.size() && !witness; ++i) {
    if (!vertices[i].second.contains(newest)) continue;
    for (std::size_t j = 0; j < vertices.size(); ++j)
      if (j != i && vertices[j].first == vertices[i].first) {
        witness = CoincidentVertexWitness{std::min(vertices[i].second, vertices[j].second),
                                          std::max(vertices[i].second, vertices[j].second)};
        break;
      }
  }
  return witness;
}

}  // namespace

Configuration::Configuration(std::size_t n, std::vector<VecQ> x, std::vector<VecQ> y, std::vector<Rat> lambda,
                             std::vector<std::size_t> x_order, std::uint64_t seed)
    : n_(n),
      x_(std::move(x)),
      y_(std::move(y)),
      lambda_(std::move(lambda)),
      seed_(seed),
      x_matroid_(n, x_),
      ground_matroid_(n, [&] {
        std::vector<VecQ> all = x_;
        all.insert(all.end(), y_.begin(), y_.end());
        return all;
      }()) {
  if (lambda_.size() != ground_size()) throw InputError("lambda must have one value per ground element");
  std::vector<std::size_t> check = x_order;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check.size() != x_.size() || check[i] != i) throw InputError("order must be a permutation of X indices");
  if (x_order.size() != x_.size()) throw InputError("order must be a permutation of X indices");
  order_ = std::move(x_order);
  for (std::size_t j = 0; j < y_.size(); ++j) order_.push_back(x_.size() + j);
  position_.resize(order_.size());
  for (std::size_t p = 0; p < order_.size(); ++p) position_[order_[p]] = p;
}

GroundElement Configuration::element(std::size_t g) const {
  return GroundElement{is_y(g) ? ElementTag::y : ElementTag::x, is_y(g) ? g - x_.size() : g, vector(g),
                       lambda_[g]};
}

IndexSet Configuration::y_prefix(std::ptrdiff_t i) const {
  if (i <= 0) return {};
  if (static_cast<std::size_t>(i) > y_.size())
    throw ConsistencyError("Y prefix Y_" + std::to_string(i) + " requested but #Y = " + std::to_string(y_.size()));
  return IndexSet::range(x_.size(), static_cast<std::size_t>(i));
}

std::vector<VecQ> Configuration::ground_vectors() const { return ground_matroid_.vectors(); }

std::optional<GeneralPositionWitness> verify_general_position(std::size_t n, const std::vector<VecQ>& x,
                                                              const std::vector<VecQ>& y) {
  std::vector<VecQ> ground = x;
  ground.insert(ground.end(), y.begin(), y.end());
  const VectorMatroid m(n, ground);
  for (std::size_t j = 0; j < y.size(); ++j) {
    const std::size_t g = x.size() + j;
    const auto others = all_indices_but(ground.size(), g);
    const std::size_t k = std::min(n - 1, others.size());
    std::optional<GeneralPositionWitness> witness;
    for_each_subset_of_size(others, k, [&](IndexSet s) {
      if (!witness && m.in_span(g, s)) witness = GeneralPositionWitness{g, s};
    });
    if (witness) return witness;
  }
  return std::nullopt;
}

std::vector<VecQ> extend_y(std::size_t n, const std::vector<VecQ>& x, std::vector<VecQ> y, std::size_t count,
                           std::uint64_t seed) {
  while (y.size() < count) {
    auto rng = element_stream(seed, kYStream, y.size());
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < kAttemptBudget && !accepted; ++attempt) {
      const long t = draw(rng, 2 + static_cast<long>(attempt / 8));
      VecQ candidate(n);
      Rat power = 1;
      for (std::size_t i = 0; i < n; ++i) {
        candidate[i] = power;
        power *= t;
      }
      y.push_back(candidate);
      if (!verify_general_position(n, x, y)) {
        accepted = true;
      } else {
        y.pop_back();
      }
    }
    if (!accepted) throw GenerationExhausted("generation exhausted while drawing y_" + std::to_string(y.size() + 1));
  }
  return y;
}

std::optional<LambdaWitness> verify_generic_lambda(std::size_t n, const std::vector<VecQ>& ground,
                                                   const std::vector<Rat>& lambda) {
  if (lambda.size() != ground.size()) throw InputError("lambda must have one value per ground element");
  std::optional<LambdaWitness> witness;
  const auto all = all_indices_but(ground.size(), ground.size());
  for (std::size_t size = 1; size <= n + 1 && !witness; ++size)
    for_each_subset_of_size(all, size, [&](IndexSet w) {
      if (!witness && degenerate_common_zero(ground, lambda, w, n)) witness = CommonZeroWitness{w};
    });
  if (witness) return witness;

  const VectorMatroid m(n, ground);
  std::vector<std::pair<VecQ, IndexSet>> vertices;
  for_each_subset_of_size(all, n, [&](IndexSet b) {
    if (m.is_basis(b)) vertices.emplace_back(solve(rows_of(ground, b, n), lambdas_of(lambda, b)), b);
  });
  std::sort(vertices.begin(), vertices.end(),
            [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i].first == vertices[i - 1].first)
      return CoincidentVertexWitness{vertices[i - 1].second, vertices[i].second};
  return std::nullopt;
}

std::vector<Rat> extend_lambda(std::size_t n, const std::vector<VecQ>& ground, std::vector<Rat> lambda,
                               std::uint64_t seed) {
  if (lambda.size() > ground.size()) throw InputError("more lambda values than ground elements");
  while (lambda.size() < ground.size()) {
    const std::size_t i = lambda.size();
    const std::vector<VecQ> prefix_vectors(ground.begin(), ground.begin() + static_cast<std::ptrdiff_t>(i + 1));
    const VectorMatroid prefix(n, prefix_vectors);
    auto rng = element_stream(seed, kLambdaStream, i);
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < kAttemptBudget && !accepted; ++attempt) {
      lambda.push_back(Rat(draw(rng, 3 + static_cast<long>(attempt / 4))));
      if (!check_lambda_element(n, ground, lambda, i, prefix)) {
        accepted = true;
      } else {
        lambda.pop_back();
      }
    }
    if (!accepted) throw GenerationExhausted("generation exhausted while drawing lambda " + std::to_string(i + 1));
  }
  return lambda;
}

namespace {

std::string describe_witness(const LambdaWitness& w) {
  if (const auto* cz = std::get_if<CommonZeroWitness>(&w)) {
    std::string s = "affine forms ";
    for (auto e : cz->elements) s += "z" + std::to_string(e + 1) + " ";
    return s + "share a common zero";
  }
  const auto& cv = std::get<CoincidentVertexWitness>(w);
  std::string s = "bases ";
  for (auto e : cv.first) s += "z" + std::to_string(e + 1);
  s += " and ";
  for (auto e : cv.second) s += "z" + std::to_string(e + 1);
  return s + " have the same vertex";
}

}  // namespace

Configuration make_configuration(const ConfigurationRequest& request) {
  const std::size_t n = request.n;
  if (n == 0) throw InputError("ambient dimension must be positive");
  for (const auto& v : request.x)
    if (v.size() != n) throw InputError("X vector of wrong length");

  std::vector<VecQ> y;
  if (request.y) {
    y = *request.y;
    for (const auto& v : y)
      if (v.size() != n) throw InputError("Y vector of wrong length");
    if (auto w = verify_general_position(n, request.x, y))
      throw ValidationError("supplied Y is not in general position: y_" +
                            std::to_string(w->y - request.x.size() + 1) + " lies in a span of " +
                            std::to_string(w->span_set.size()) + " other vectors");
  }
  if (y.size() < request.y_count) y = extend_y(n, request.x, std::move(y), request.y_count, request.seed);

  std::vector<VecQ> ground = request.x;
  ground.insert(ground.end(), y.begin(), y.end());
  if (rank(ground, n) != n) throw ValidationError("X u Y does not have full rank n");

  std::vector<Rat> lambda;
  if (request.lambda) {
    lambda = *request.lambda;
    if (lambda.size() > ground.size()) throw InputError("more lambda values than ground elements");
    std::vector<VecQ> given(ground.begin(), ground.begin() + static_cast<std::ptrdiff_t>(lambda.size()));
    if (auto w = verify_generic_lambda(n, given, lambda))
      throw ValidationError("supplied lambda is not generic: " + describe_witness(*w));
  }
  lambda = extend_lambda(n, ground, std::move(lambda), request.seed);
  if (auto w = verify_generic_lambda(n, ground, lambda))
    throw ConsistencyError("generated lambda failed verification: " + describe_witness(*w));

  std::vector<std::size_t> order(request.x.size());
  std::iota(order.begin(), order.end(), 0);
  if (request.x_order) order = *request.x_order;
  return Configuration(n, request.x, std::move(y), std::move(lambda), std::move(order), request.seed);
}

Configuration extend_configuration(const Configuration& config, std::size_t y_count) {
  if (y_count <= config.y_count()) return config;
  auto y = extend_y(config.n(), config.x(), config.y(), y_count, config.seed());
  std::vector<VecQ> ground = config.x();
  ground.insert(ground.end(), y.begin(), y.end());
  auto lambda = extend_lambda(config.n(), ground, config.lambda(), config.seed());
  std::vector<std::size_t> x_order(config.order().begin(),
                                   config.order().begin() + static_cast<std::ptrdiff_t>(config.x_count()));
  return Configuration(config.n(), config.x(), std::move(y), std::move(lambda), std::move(x_order), config.seed());
}

}  // namespace zonotopal
