#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "fpa/codec.hpp"
#include "fpa/core.hpp"
#include "fpa/random.hpp"

namespace fpa {

/**
 * lambda + 1 servers, each holding one replica of the same codeword. query()
 * returns one symbol and appends the position to that server's log, which is
 * how tests audit "one query per server per retrieval".
 *
 * replace_replica() exists for corruption experiments; it insists on a valid
 * word of the same space but deliberately not on equality with the others.
 */
class ServerFarm {
 public:
  ServerFarm(const CodeParams& params, std::vector<FreqPerm> replicas);

  const CodeParams& params() const noexcept { return params_; }
  int server_count() const noexcept { return static_cast<int>(replicas_.size()); }

  int query(int server, int position);
  const FreqPerm& replica(int server) const;
  void replace_replica(int server, FreqPerm word);

  const std::vector<std::vector<int>>& query_log() const noexcept { return log_; }
  void clear_query_log();

 private:
  CodeParams params_;
  std::vector<FreqPerm> replicas_;
  std::vector<std::vector<int>> log_;
};

// Encodes the message and replicates the codeword across lambda + 1 servers.
ServerFarm pir_setup(const Message& msg, const CodeParams& params);

struct PirQuery {
  int server = 0;    // 0-based
  int position = 0;  // 0-based
  bool operator==(const PirQuery&) const = default;
};

// queries holds exactly one entry per server, in ascending server order.
struct RetrievalTranscript {
  int target = 0;  // message bit index, 0-based
  std::vector<PirQuery> queries;
  int bit = 0;
  int iterations = 0;  // local decoder probes actually consumed
};

/**
 * Retrieves message bit i. Draws a fresh uniformly random bijection between
 * read slots and servers, feeds the local decoder one server per read, then
 * sends each unused server a dummy query at a uniform position. Every server
 * sees exactly one (position) query, and on an uncorrupted farm the returned
 * bit always equals bit i of the encoded message.
 */
RetrievalTranscript pir_retrieve(ServerFarm& farm, int i, RandomSource& rng);

// Total variation distance, half the L1 difference. Sizes must match.
double statistical_distance(const std::vector<double>& a, const std::vector<double>& b);

enum class PrivacyMode { exact, monte_carlo };

const char* privacy_mode_name(PrivacyMode mode) noexcept;
PrivacyMode privacy_mode_from_string(std::string_view text);

struct PrivacyEstimate {
  double p_estimate = 0.0;
  PrivacyMode mode = PrivacyMode::exact;
  std::uint64_t trials = 0;  // 0 in exact mode
  std::uint64_t seed = 0;
};

/**
 * Worst-case statistical (total variation) distance, over servers and pairs
 * of target indices, between the query-position distributions a server
 * observes: p = max_{s, i != j} TV(D(s,i), D(s,j)). Retrieval leaks some
 * information (position i itself is always queried somewhere), so p > 0
 * whenever k >= 2; k <= 1 yields exactly 0.
 *
 * exact mode enumerates the full randomness tree of pir_retrieve and weights
 * every branch by its probability; monte_carlo estimates each distribution
 * from `trials` seeded retrievals per target.
 */
PrivacyEstimate estimate_privacy(const CodeParams& params, const Message& msg, PrivacyMode mode,
                                 std::uint64_t trials, std::uint64_t seed);

// Fraction of `trials` retrievals (uniform random targets) that returned the
// true message bit. The farm overload accepts corrupted farms.
double estimate_retrievability(ServerFarm& farm, const Message& msg, std::uint64_t trials,
                               std::uint64_t seed);
double estimate_retrievability(const CodeParams& params, const Message& msg, std::uint64_t trials,
                               std::uint64_t seed);

}  // namespace fpa
