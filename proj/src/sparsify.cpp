#include "hypersketch/sparsify.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "hypersketch/errors.hpp"
#include "hypersketch/rng.hpp"

namespace hypersketch {

namespace {

void validate_params(const SparsifyParams& p) {
  if (!(p.epsilon > 0.0) || !(p.epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0,1)");
  if (!(p.d >= 1.0)) throw std::invalid_argument("d must be >= 1");
}

}  // namespace

double concentration_threshold(double epsilon, int r, double d, double n) {
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw std::invalid_argument("epsilon must lie in (0,1]");
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  if (!(d >= 1.0)) throw std::invalid_argument("d must be >= 1");
  if (!(n >= 2.0)) throw std::invalid_argument("n must be >= 2");
  return 3.0 / (epsilon * epsilon) * (r + (d + 2.0) * std::log(n));
}

double sampling_probability(double k_e, double epsilon, double d, double n, int r,
                            double log_coeff) {
  if (!(k_e > 0.0) || !std::isfinite(k_e))
    throw std::invalid_argument("strong connectivity must be positive");
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw std::invalid_argument("epsilon must lie in (0,1]");
  if (!(d >= 1.0)) throw std::invalid_argument("d must be >= 1");
  if (!(n >= 2.0)) throw std::invalid_argument("n must be >= 2");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  const double coeff = log_coeff < 0.0 ? d + 2.0 : log_coeff;
  const double p = 3.0 * (coeff * std::log(n) + r) / (k_e * epsilon * epsilon);
  return std::min(1.0, p);
}

std::pair<Hypergraph, SparsifierReport> sparsify(const Hypergraph& h,
                                                 const SparsifyParams& params) {
  if (h.edge_count() == 0) throw std::invalid_argument("sparsify needs at least one edge");
  return sparsify(h, params, strong_connectivities(h));
}

std::pair<Hypergraph, SparsifierReport> sparsify(const Hypergraph& h, const SparsifyParams& params,
                                                 const StrongConnectivityMap& strengths) {
  validate_params(params);
  if (h.edge_count() == 0) throw std::invalid_argument("sparsify needs at least one edge");
  if (strengths.k.size() != h.edge_count())
    throw std::invalid_argument("strong-connectivity map does not match edge count");

  const double n = h.vertex_count();
  const int r = h.max_cardinality();
  std::vector<Hyperedge> kept;
  double expected = 0.0;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    if (e.cardinality() < 2) {  // joins no cut; keep verbatim
      expected += 1.0;
      kept.push_back(e);
      continue;
    }
    const double p =
        sampling_probability(strengths.k[i], params.epsilon, params.d, n, r, params.log_coeff);
    expected += p;
    if (p >= 1.0) {
      kept.push_back(e);
    } else if (unit_at(params.seed, i) < p) {
      kept.push_back({e.endpoints, e.weight / p});
    }
  }
  SparsifierReport report;
  report.edge_count = kept.size();
  report.expected_edge_count = expected;
  return {Hypergraph(h.vertex_count(), std::move(kept)), report};
}

SparsifierReport verify_sparsifier(const Hypergraph& h, const Hypergraph& h_eps, double epsilon) {
  if (h.vertex_count() != h_eps.vertex_count())
    throw std::invalid_argument("verify_sparsifier: vertex counts differ");
  const int n = h.vertex_count();
  if (n > 20)
    throw ResourceLimitError("verify_sparsifier guarded at n <= 20, got n = " + std::to_string(n));

  SparsifierReport report;
  report.edge_count = h_eps.edge_count();
  double max_err = 0.0;
  if (n >= 2) {
    auto bits_of = [](const Hypergraph& g) {
      std::vector<std::pair<std::uint32_t, double>> bits;
      bits.reserve(g.edge_count());
      for (const auto& e : g.edges()) {
        std::uint32_t b = 0;
        for (int v : e.endpoints) b |= (1u << v);
        bits.emplace_back(b, e.weight);
      }
      return bits;
    };
    const auto base = bits_of(h);
    const auto sparse = bits_of(h_eps);
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t m = 1; m < (1u << (n - 1)); ++m) {
      const std::uint32_t s = m << 1;
      double w = 0.0, w_eps = 0.0;
      for (const auto& [b, wt] : base)
        if ((b & s) != 0 && (b & ~s & full) != 0) w += wt;
      for (const auto& [b, wt] : sparse)
        if ((b & s) != 0 && (b & ~s & full) != 0) w_eps += wt;
      if (w == 0.0) {
        if (w_eps != 0.0) max_err = std::numeric_limits<double>::infinity();
      } else {
        max_err = std::max(max_err, std::abs(w_eps / w - 1.0));
      }
    }
  }
  report.max_relative_cut_error = max_err;
  report.within_epsilon = max_err <= epsilon;
  return report;
}

StreamingSparsifier::StreamingSparsifier(int vertex_count, SparsifyParams params)
    : n_(vertex_count), params_(params) {
  validate_params(params_);
  if (n_ < 1) throw std::invalid_argument("streaming sparsifier needs at least one vertex");
}

double StreamingSparsifier::level_epsilon(int level) const {
  return params_.epsilon / std::pow(2.0, level + 1);
}

double StreamingSparsifier::level_target(double level_eps) const {
  const double r = static_cast<double>(max_cardinality_seen_);
  const double n = static_cast<double>(n_);
  return 8.0 * n * (r + (params_.d + 2.0) * std::log(std::max(n, 2.0))) / (level_eps * level_eps);
}

void StreamingSparsifier::push(std::vector<int> endpoints, double weight) {
  Hyperedge e;
  try {
    e = make_edge(std::move(endpoints), weight, n_);
  } catch (const std::invalid_argument& ex) {
    throw std::invalid_argument(std::string("stream error: ") + ex.what());
  }
  max_cardinality_seen_ = std::max(max_cardinality_seen_, e.cardinality());
  working_.push_back(std::move(e));
  maybe_compress();
}

void StreamingSparsifier::maybe_compress() {
  while (true) {
    const double eps_next = level_epsilon(levels_done_ + 1);
    const double target = level_target(eps_next);
    if (static_cast<double>(working_.size()) <= 2.0 * target) return;
    SparsifyParams level_params = params_;
    level_params.epsilon = eps_next;
    level_params.seed = derive_seed(params_.seed, static_cast<std::uint64_t>(levels_done_ + 1));
    auto [compressed, report] = sparsify(Hypergraph(n_, working_), level_params);
    (void)report;
    working_ = compressed.edges();
    ++levels_done_;
  }
}

Hypergraph StreamingSparsifier::result() const { return Hypergraph(n_, working_); }

Hypergraph streaming_sparsify(const std::vector<Hyperedge>& stream, int vertex_count,
                              const SparsifyParams& params) {
  StreamingSparsifier builder(vertex_count, params);
  for (const auto& e : stream) builder.push(e);
  return builder.result();
}

}  // namespace hypersketch
