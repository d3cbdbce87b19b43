// Command-line front end. Exit codes: 0 success, 2 usage/validation error,
// 3 resource guard tripped (enumeration cap or permanent order guard).

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "fpa/channel.hpp"
#include "fpa/codec.hpp"
#include "fpa/combinatorics.hpp"
#include "fpa/core.hpp"
#include "fpa/json_io.hpp"
#include "fpa/pir.hpp"

namespace {

using fpa::BigInt;
using nlohmann::json;

// Randomized commands accept --seed; without one a fresh seed is drawn and
// announced on stderr so the run stays reproducible after the fact.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag.has_value()) return *flag;
  std::random_device rd;
  const std::uint64_t seed =
      (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
  std::cerr << "seed: " << seed << "\n";
  return seed;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frequency permutation array codec, bounds and PIR toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format appear after the subcommand name

  std::string format = "plain";
  app.add_option("--format", format, "output format: plain or json")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  int lambda = 1, n = 0, m = 0, k = 0, d = 0, i = 1, delta = 0, walk_steps = 0;
  int perm_guard = fpa::kDefaultPermanentGuard;
  std::uint64_t trials = 0, cap = fpa::kDefaultEnumCap;
  std::optional<std::uint64_t> seed_flag;
  std::string message_text, word_text;
  std::string method = "exact", algo = "ryser", mode_text;

  auto* c_encode = app.add_subcommand("encode", "message bits -> word");
  c_encode->add_option("--lambda", lambda)->required();
  c_encode->add_option("--n", n)->required();
  c_encode->add_option("--message", message_text)->required();

  auto* c_decode = app.add_subcommand("decode", "word -> message bits");
  c_decode->add_option("--lambda", lambda)->required();
  c_decode->add_option("--k", k)->required();
  c_decode->add_option("--word", word_text)->required();

  auto* c_local = app.add_subcommand("local", "decode one message bit from few reads");
  c_local->add_option("--lambda", lambda)->required();
  c_local->add_option("--k", k)->required();
  c_local->add_option("--word", word_text)->required();
  c_local->add_option("--i", i, "message bit index, 1-based")->required();
  c_local->add_option("--seed", seed_flag);

  auto* c_bounds = app.add_subcommand("bounds", "code-size bounds for (lambda, m, d)");
  c_bounds->add_option("--lambda", lambda)->required();
  c_bounds->add_option("--m", m)->required();
  c_bounds->add_option("--d", d)->required();
  c_bounds->add_option("--exact-cap", perm_guard,
                       "max matrix order for the exact (permanent) section");

  auto* c_ball = app.add_subcommand("ball", "words within distance d of a fixed word");
  c_ball->add_option("--lambda", lambda)->required();
  c_ball->add_option("--m", m)->required();
  c_ball->add_option("--d", d)->required();
  c_ball->add_option("--method", method)->check(CLI::IsMember({"exact", "brute"}));
  c_ball->add_option("--perm-guard", perm_guard);
  c_ball->add_option("--cap", cap);

  auto* c_perm = app.add_subcommand("perm", "permanent of the rank-band matrix");
  c_perm->add_option("--lambda", lambda)->required();
  c_perm->add_option("--n", n)->required();
  c_perm->add_option("--d", d)->required();
  c_perm->add_option("--algo", algo)->check(CLI::IsMember({"ryser", "naive"}));
  c_perm->add_option("--perm-guard", perm_guard);

  auto* c_greedy = app.add_subcommand("greedy", "greedy code construction");
  c_greedy->add_option("--lambda", lambda)->required();
  c_greedy->add_option("--m", m)->required();
  c_greedy->add_option("--d", d)->required();
  c_greedy->add_option("--cap", cap);

  auto* c_channel = app.add_subcommand("channel", "noisy decode experiment");
  c_channel->add_option("--lambda", lambda)->required();
  c_channel->add_option("--n", n)->required();
  c_channel->add_option("--k", k)->required();
  c_channel->add_option("--delta", delta)->required();
  c_channel->add_option("--trials", trials)->required();
  c_channel->add_option("--seed", seed_flag);
  c_channel->add_option("--mode", mode_text, "exact-uniform or swap-walk");
  c_channel->add_option("--walk-steps", walk_steps);
  c_channel->add_option("--cap", cap);

  auto* c_pir = app.add_subcommand("pir", "private retrieval of single message bits");
  c_pir->require_subcommand(1);
  auto* c_pir_ret = c_pir->add_subcommand("retrieve", "one retrieval with transcript");
  c_pir_ret->add_option("--lambda", lambda)->required();
  c_pir_ret->add_option("--n", n)->required();
  c_pir_ret->add_option("--message", message_text)->required();
  c_pir_ret->add_option("--i", i, "message bit index, 1-based")->required();
  c_pir_ret->add_option("--seed", seed_flag);
  auto* c_pir_priv = c_pir->add_subcommand("privacy", "worst-case query distribution distance");
  c_pir_priv->add_option("--lambda", lambda)->required();
  c_pir_priv->add_option("--n", n)->required();
  c_pir_priv->add_option("--message", message_text)->required();
  c_pir_priv->add_option("--mode", mode_text, "exact or monte-carlo")->required();
  c_pir_priv->add_option("--trials", trials);
  c_pir_priv->add_option("--seed", seed_flag);
  auto* c_pir_rtr = c_pir->add_subcommand("retrievability", "fraction of correct retrievals");
  c_pir_rtr->add_option("--lambda", lambda)->required();
  c_pir_rtr->add_option("--n", n)->required();
  c_pir_rtr->add_option("--message", message_text)->required();
  c_pir_rtr->add_option("--trials", trials)->required();
  c_pir_rtr->add_option("--seed", seed_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  const bool as_json = format == "json";

  try {
    if (*c_encode) {
      const fpa::Message msg = fpa::Message::from_string(message_text);
      const fpa::CodeParams params = fpa::CodeParams::make(lambda, n, msg.size());
      const fpa::FreqPerm word = fpa::encode(msg, params);
      if (as_json)
        emit(json{{"lambda", lambda},
                  {"n", n},
                  {"message", msg.to_string()},
                  {"word", fpa::word_to_string(word.span())}});
      else
        std::cout << fpa::word_to_string(word.span()) << "\n";
    } else if (*c_decode) {
      const std::vector<int> symbols = fpa::word_from_string(word_text);
      const fpa::CodeParams params =
          fpa::CodeParams::make(lambda, static_cast<int>(symbols.size()), k);
      const fpa::FreqPerm word = fpa::validate_word(symbols, params.lambda, params.m);
      const fpa::Message msg = fpa::unique_decode(word, params);
      if (as_json)
        emit(json{{"lambda", lambda}, {"k", k}, {"message", msg.to_string()}});
      else
        std::cout << msg.to_string() << "\n";
    } else if (*c_local) {
      const std::vector<int> symbols = fpa::word_from_string(word_text);
      const fpa::CodeParams params =
          fpa::CodeParams::make(lambda, static_cast<int>(symbols.size()), k);
      const fpa::FreqPerm word = fpa::validate_word(symbols, params.lambda, params.m);
      const std::uint64_t seed = resolve_seed(seed_flag);
      fpa::SplitMix64 rng(seed);
      const fpa::LocalDecodeResult res = fpa::local_decode(word, i - 1, params, rng);
      if (as_json) {
        json j = fpa::to_json(res);
        j["seed"] = seed;
        emit(j);
      } else {
        std::cout << res.bit << "\n";
      }
    } else if (*c_bounds) {
      const fpa::BoundsReport rep = fpa::make_bounds_report(lambda, m, d, perm_guard);
      if (as_json) {
        emit(fpa::to_json(rep));
      } else {
        std::cout << "space " << rep.space.str() << "\n";
        if (rep.exact) {
          std::cout << "ball(d-1) " << rep.ball_dminus1.str() << "\n"
                    << "ball(floor((d-1)/2)) " << rep.ball_half.str() << "\n"
                    << "gilbert_lower " << numerator(rep.gilbert).str() << "/"
                    << denominator(rep.gilbert).str() << " (ceil "
                    << fpa::rat_ceil(rep.gilbert).str() << ")\n"
                    << "packing_upper " << numerator(rep.packing).str() << "/"
                    << denominator(rep.packing).str() << " (floor "
                    << fpa::rat_floor(rep.packing).str() << ")\n";
        } else {
          std::cout << "exact bounds skipped: n exceeds permanent guard\n";
        }
        std::cout << "asym_lower_log " << rep.asym_lower_log << "\n"
                  << "asym_upper_log " << rep.asym_upper_log << "\n";
      }
    } else if (*c_ball) {
      const BigInt size = method == "exact"
                              ? fpa::ball_size_exact(lambda, lambda * m, d, perm_guard)
                              : fpa::ball_size_bruteforce(lambda, lambda * m, d, cap);
      if (as_json)
        emit(json{{"lambda", lambda}, {"m", m}, {"d", d}, {"method", method}, {"size", size.str()}});
      else
        std::cout << size.str() << "\n";
    } else if (*c_perm) {
      const fpa::BinaryMatrix a = fpa::BinaryMatrix::band(lambda, n, d);
      const BigInt per =
          algo == "ryser" ? fpa::permanent_ryser(a, perm_guard) : fpa::permanent_naive(a);
      if (as_json) {
        const fpa::LogBound up = fpa::perm_bound_upper(lambda, n, d);
        const fpa::LogBound lo = fpa::perm_bound_lower(lambda, n, d);
        emit(json{{"lambda", lambda},
                  {"n", n},
                  {"d", d},
                  {"algo", algo},
                  {"permanent", per.str()},
                  {"log_upper", up.log_value},
                  {"log_lower", lo.log_value},
                  {"clamped", up.clamped || lo.clamped}});
      } else {
        std::cout << per.str() << "\n";
      }
    } else if (*c_greedy) {
      const std::vector<fpa::FreqPerm> code = fpa::greedy_construct(lambda, lambda * m, d, cap);
      if (as_json) {
        json words = json::array();
        for (const fpa::FreqPerm& w : code) words.push_back(fpa::word_to_string(w.span()));
        emit(json{{"lambda", lambda},
                  {"m", m},
                  {"d", d},
                  {"size", code.size()},
                  {"words", std::move(words)}});
      } else {
        for (const fpa::FreqPerm& w : code) std::cout << fpa::word_to_string(w.span()) << "\n";
      }
    } else if (*c_channel) {
      const fpa::CodeParams params = fpa::CodeParams::make(lambda, n, k);
      fpa::ChannelConfig cfg;
      cfg.delta = delta;
      cfg.mode = mode_text.empty() ? fpa::ChannelMode::exact_uniform
                                   : fpa::channel_mode_from_string(mode_text);
      cfg.walk_steps = walk_steps;
      cfg.enum_cap = cap;
      if (delta > (params.d - 1) / 2)
        std::cerr << "warning: delta " << delta << " exceeds the unique-decode radius "
                  << (params.d - 1) / 2 << "; uds_rate may drop below 1\n";
      const std::uint64_t seed = resolve_seed(seed_flag);
      const fpa::ExperimentReport rep = fpa::run_experiment(params, cfg, trials, seed);
      if (as_json) {
        emit(fpa::to_json(rep));
      } else {
        std::cout << "trials " << rep.trials << "\ndelta " << rep.delta << "\nd " << rep.d
                  << "\nuds_rate " << rep.uds_rate << "\nlfi_error_rate " << rep.lfi_error_rate
                  << "\nlfi_bound " << rep.lfi_bound << "\nmean_reads " << rep.mean_reads
                  << "\nseed " << rep.seed << "\n";
      }
    } else if (*c_pir_ret) {
      const fpa::Message msg = fpa::Message::from_string(message_text);
      const fpa::CodeParams params = fpa::CodeParams::make(lambda, n, msg.size());
      fpa::ServerFarm farm = fpa::pir_setup(msg, params);
      const std::uint64_t seed = resolve_seed(seed_flag);
      fpa::SplitMix64 rng(seed);
      const fpa::RetrievalTranscript t = fpa::pir_retrieve(farm, i - 1, rng);
      if (as_json) {
        json j = fpa::to_json(t);
        j["seed"] = seed;
        emit(j);
      } else {
        std::cout << "target " << t.target + 1 << "\n";
        for (const fpa::PirQuery& q : t.queries)
          std::cout << "query server " << q.server + 1 << " position " << q.position + 1 << "\n";
        std::cout << "bit " << t.bit << "\n";
      }
    } else if (*c_pir_priv) {
      const fpa::Message msg = fpa::Message::from_string(message_text);
      const fpa::CodeParams params = fpa::CodeParams::make(lambda, n, msg.size());
      const fpa::PrivacyMode mode = fpa::privacy_mode_from_string(mode_text);
      const std::uint64_t seed =
          mode == fpa::PrivacyMode::monte_carlo ? resolve_seed(seed_flag) : seed_flag.value_or(0);
      const fpa::PrivacyEstimate est = fpa::estimate_privacy(params, msg, mode, trials, seed);
      if (as_json)
        emit(fpa::to_json(est));
      else
        std::cout << est.p_estimate << "\n";
    } else if (*c_pir_rtr) {
      const fpa::Message msg = fpa::Message::from_string(message_text);
      const fpa::CodeParams params = fpa::CodeParams::make(lambda, n, msg.size());
      const std::uint64_t seed = resolve_seed(seed_flag);
      const double r = fpa::estimate_retrievability(params, msg, trials, seed);
      if (as_json)
        emit(json{{"r_estimate", r}, {"trials", trials}, {"seed", seed}});
      else
        std::cout << r << "\n";
    }
  } catch (const fpa::Error& e) {
    std::cerr << fpa::errc_name(e.code()) << ": " << e.what() << "\n";
    return e.is_resource_guard() ? 3 : 2;
  }
  return 0;
}
