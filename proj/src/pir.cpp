#include "fpa/pir.hpp"

#include <algorithm>
#include <cmath>

namespace fpa {

double statistical_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    fail(Errc::wrong_length, "distributions have different supports");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return 0.5 * s;
}

ServerFarm::ServerFarm(const CodeParams& params, std::vector<FreqPerm> replicas)
    : params_(params), replicas_(std::move(replicas)) {
  if (replicas_.size() != static_cast<std::size_t>(params.lambda) + 1)
    fail(Errc::bad_params, "farm needs lambda + 1 replicas");
  for (const FreqPerm& r : replicas_)
    if (r.size() != params.n || r.lambda() != params.lambda)
      fail(Errc::bad_params, "replica does not live in the code's space");
  log_.resize(replicas_.size());
}

int ServerFarm::query(int server, int position) {
  if (server < 0 || server >= server_count())
    fail(Errc::index_out_of_range, "server " + std::to_string(server) + " out of range");
  if (position < 0 || position >= params_.n)
    fail(Errc::index_out_of_range, "position " + std::to_string(position) + " out of range");
  log_[static_cast<std::size_t>(server)].push_back(position);
  return replicas_[static_cast<std::size_t>(server)][position];
}

const FreqPerm& ServerFarm::replica(int server) const {
  if (server < 0 || server >= server_count())
    fail(Errc::index_out_of_range, "server " + std::to_string(server) + " out of range");
  return replicas_[static_cast<std::size_t>(server)];
}

void ServerFarm::replace_replica(int server, FreqPerm word) {
  if (server < 0 || server >= server_count())
    fail(Errc::index_out_of_range, "server " + std::to_string(server) + " out of range");
  validate_word(word.symbols(), params_.lambda, params_.m);
  replicas_[static_cast<std::size_t>(server)] = std::move(word);
}

void ServerFarm::clear_query_log() {
  for (auto& entries : log_) entries.clear();
}

ServerFarm pir_setup(const Message& msg, const CodeParams& params) {
  const FreqPerm codeword = encode(msg, params);
  std::vector<FreqPerm> replicas(static_cast<std::size_t>(params.lambda) + 1, codeword);
  return ServerFarm(params, std::move(replicas));
}

RetrievalTranscript pir_retrieve(ServerFarm& farm, int i, RandomSource& rng) {
  const CodeParams& params = farm.params();
  if (i < 0 || i >= params.k)
    fail(Errc::index_out_of_range,
         "target bit " + std::to_string(i) + " outside [0," + std::to_string(params.k) + ")");
  const int q = farm.server_count();

  // Uniform bijection read-slot -> server, drawn before any read.
  std::vector<int> slot_server(static_cast<std::size_t>(q));
  for (int t = 0; t < q; ++t) slot_server[static_cast<std::size_t>(t)] = t;
  for (int t = 0; t < q - 1; ++t) {
    const int u = t + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(q - t)));
    std::swap(slot_server[static_cast<std::size_t>(t)], slot_server[static_cast<std::size_t>(u)]);
  }

  std::vector<PirQuery> queries;
  queries.reserve(static_cast<std::size_t>(q));
  int slot = 0;
  auto read = [&](int pos) {
    const int server = slot_server[static_cast<std::size_t>(slot++)];
    queries.push_back(PirQuery{server, pos});
    return farm.query(server, pos);
  };
  const LocalDecodeResult res = local_decode_with_reader(read, i, params, rng);

  // The decoder consumed at most lambda + 1 of the lambda + 1 slots; idle
  // servers get one dummy query each so every retrieval touches every server
  // exactly once.
  for (; slot < q; ++slot) {
    const int server = slot_server[static_cast<std::size_t>(slot)];
    const int pos = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(params.n)));
    queries.push_back(PirQuery{server, pos});
    farm.query(server, pos);
  }

  std::sort(queries.begin(), queries.end(),
            [](const PirQuery& a, const PirQuery& b) { return a.server < b.server; });

  RetrievalTranscript t;
  t.target = i;
  t.queries = std::move(queries);
  t.bit = res.bit;
  t.iterations = res.iterations;
  return t;
}

const char* privacy_mode_name(PrivacyMode mode) noexcept {
  switch (mode) {
    case PrivacyMode::exact: return "exact";
    case PrivacyMode::monte_carlo: return "monte-carlo";
  }
  return "unknown";
}

PrivacyMode privacy_mode_from_string(std::string_view text) {
  if (text == "exact") return PrivacyMode::exact;
  if (text == "monte-carlo" || text == "mc") return PrivacyMode::monte_carlo;
  fail(Errc::bad_params,
       "unknown privacy mode '" + std::string(text) + "' (expected exact or monte-carlo)");
}

PrivacyEstimate estimate_privacy(const CodeParams& params, const Message& msg, PrivacyMode mode,
                                 std::uint64_t trials, std::uint64_t seed) {
  PrivacyEstimate est;
  est.mode = mode;
  est.seed = seed;
  est.trials = mode == PrivacyMode::monte_carlo ? trials : 0;
  if (params.k <= 1) return est;  // no pair of targets to distinguish

  const int q = params.lambda + 1;
  const int n = params.n;
  // dist[i][s][pos] = probability that server s is asked for `pos` when the
  // client retrieves bit i.
  std::vector<std::vector<std::vector<double>>> dist(
      static_cast<std::size_t>(params.k),
      std::vector<std::vector<double>>(static_cast<std::size_t>(q),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0)));

  ServerFarm farm = pir_setup(msg, params);
  for (int i = 0; i < params.k; ++i) {
    auto& target_dist = dist[static_cast<std::size_t>(i)];
    if (mode == PrivacyMode::exact) {
      enumerate_randomness(
          [&](RandomSource& src) { return pir_retrieve(farm, i, src); },
          [&](const RetrievalTranscript& t, double prob) {
            for (const PirQuery& qq : t.queries)
              target_dist[static_cast<std::size_t>(qq.server)]
                         [static_cast<std::size_t>(qq.position)] += prob;
          });
    } else {
      if (trials < 1) fail(Errc::empty_trials, "monte-carlo privacy needs trials >= 1");
      const double w = 1.0 / static_cast<double>(trials);
      for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_child_seed(seed, static_cast<std::uint64_t>(i) * trials + t));
        const RetrievalTranscript tr = pir_retrieve(farm, i, rng);
        for (const PirQuery& qq : tr.queries)
          target_dist[static_cast<std::size_t>(qq.server)]
                     [static_cast<std::size_t>(qq.position)] += w;
      }
    }
  }

  double worst = 0.0;
  for (int s = 0; s < q; ++s)
    for (int i = 0; i < params.k; ++i)
      for (int j = i + 1; j < params.k; ++j)
        worst = std::max(worst,
                         statistical_distance(dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)],
                                              dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]));
  est.p_estimate = worst;
  return est;
}

double estimate_retrievability(ServerFarm& farm, const Message& msg, std::uint64_t trials,
                               std::uint64_t seed) {
  if (trials < 1) fail(Errc::empty_trials, "estimate_retrievability needs trials >= 1");
  const CodeParams& params = farm.params();
  if (params.k < 1) fail(Errc::bad_params, "retrievability needs k >= 1");
  if (msg.size() != params.k) fail(Errc::wrong_length, "message does not match k");
  std::uint64_t ok = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_child_seed(seed, t));
    const int i = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(params.k)));
    const RetrievalTranscript tr = pir_retrieve(farm, i, rng);
    if (tr.bit == msg.bits[static_cast<std::size_t>(i)]) ++ok;
  }
  return static_cast<double>(ok) / static_cast<double>(trials);
}

double estimate_retrievability(const CodeParams& params, const Message& msg, std::uint64_t trials,
                               std::uint64_t seed) {
  ServerFarm farm = pir_setup(msg, params);
  return estimate_retrievability(farm, msg, trials, seed);
}

}  // namespace fpa
