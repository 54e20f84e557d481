#include "syncwalk/cftp.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "syncwalk/error.hpp"

namespace syncwalk {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream derivation: hash the (seed, stream) pair so neighboring streams
// decorrelate. Reproducible within this implementation only.
std::mt19937_64 make_engine(RngSpec spec) {
  std::uint64_t state = spec.seed;
  std::uint64_t a = splitmix64(state);
  state ^= spec.stream;
  std::uint64_t b = splitmix64(state);
  return std::mt19937_64(a ^ (b * 0xD1B54A32D192ED03ULL));
}

double next_uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// Inverse CDF over the support order, so the draw sequence is stable
// across file round trips.
struct SupportSampler {
  std::vector<double> cdf;

  explicit SupportSampler(const MappingLaw& law) {
    double acc = 0.0;
    for (const auto& p : law.probs) {
      acc += to_double(p);
      cdf.push_back(acc);
    }
    cdf.back() = 1.0;
  }

  int draw(std::mt19937_64& engine) const {
    const double u = next_uniform(engine);
    for (std::size_t i = 0; i < cdf.size(); ++i) {
      if (u < cdf[i]) {
        return static_cast<int>(i);
      }
    }
    return static_cast<int>(cdf.size()) - 1;
  }
};

CftpSample sample_collapse(const MappingLaw& law, const SupportSampler& pick,
                           std::mt19937_64& engine,
                           const CftpOptions& options) {
  CftpSample out;
  out.mode = CftpMode::Collapse;
  int first = pick.draw(engine);
  if (options.record_draws) {
    out.draws.push_back(first);
  }
  Mapping comp = law.support[first];
  out.depth = 1;
  while (!is_constant(comp)) {
    if (out.depth >= options.depth_cap) {
      throw Error(ErrorCode::DepthCap,
                  "no constant composition within " +
                      std::to_string(options.depth_cap) + " backward draws");
    }
    int k = pick.draw(engine);
    if (options.record_draws) {
      out.draws.push_back(k);
    }
    // One more step into the past: the new draw acts first.
    comp = compose(comp, law.support[k]);
    ++out.depth;
  }
  out.state = comp(0);
  return out;
}

CftpSample sample_pattern(const MappingLaw& law, const SupportSampler& pick,
                          const SyncWord& word, std::mt19937_64& engine,
                          const CftpOptions& options) {
  const std::size_t p = word.indices.size();
  CftpSample out;
  out.mode = CftpMode::Pattern;
  std::vector<int> log;  // log[t] is the draw at time -t
  while (true) {
    if (static_cast<std::int64_t>(log.size()) >= options.depth_cap) {
      double hit = 1.0;
      for (int idx : word.indices) {
        hit *= to_double(law.probs[idx]);
      }
      throw Error(ErrorCode::DepthCap,
                  "pattern (hit probability " + std::to_string(hit) +
                      " per placement) not seen within " +
                      std::to_string(options.depth_cap) + " draws");
    }
    log.push_back(pick.draw(engine));
    const std::size_t i = log.size() - 1;
    if (log.size() < p) {
      continue;
    }
    // The stopping time fires when the latest p draws are the word read
    // from its first letter (deepest in time) upward.
    bool match = true;
    for (std::size_t j = 0; j < p; ++j) {
      if (log[i - j] != word.indices[j]) {
        match = false;
        break;
      }
    }
    if (!match) {
      continue;
    }
    Mapping comp = law.support[log[i]];
    for (std::size_t t = i; t-- > 0;) {
      comp = compose(law.support[log[t]], comp);
    }
    out.state = comp(0);
    out.depth = static_cast<std::int64_t>(log.size());
    if (options.record_draws) {
      out.draws = std::move(log);
    }
    return out;
  }
}

}  // namespace

CftpSample cftp_sample(const MappingLaw& law,
                       const std::optional<SyncWord>& word, CftpMode mode,
                       RngSpec rng, const CftpOptions& options) {
  if (!is_sync(law)) {
    throw Error(ErrorCode::NotSync, "the mapping law is not synchronizing");
  }
  SupportSampler pick(law);
  std::mt19937_64 engine = make_engine(rng);
  if (mode == CftpMode::Collapse) {
    return sample_collapse(law, pick, engine, options);
  }
  if (!word.has_value() || !check_sync_word(law.support, *word)) {
    throw Error(ErrorCode::NotSync,
                "pattern mode needs a valid sync word over the support");
  }
  return sample_pattern(law, pick, *word, engine, options);
}

SampleStats sample_many(const MappingLaw& law,
                        const std::optional<SyncWord>& word, CftpMode mode,
                        std::int64_t n, std::uint64_t seed, int jobs,
                        const CftpOptions& options) {
  if (!is_sync(law)) {
    throw Error(ErrorCode::NotSync, "the mapping law is not synchronizing");
  }
  if (mode == CftpMode::Pattern &&
      (!word.has_value() || !check_sync_word(law.support, *word))) {
    throw Error(ErrorCode::NotSync,
                "pattern mode needs a valid sync word over the support");
  }

  SampleStats stats;
  stats.counts.assign(law.size(), 0);
  stats.samples = n;
  if (n <= 0) {
    return stats;
  }

  const SupportSampler pick(law);
  auto run_range = [&](std::int64_t begin, std::int64_t end,
                       SampleStats& local) {
    local.counts.assign(law.size(), 0);
    for (std::int64_t s = begin; s < end; ++s) {
      std::mt19937_64 engine = make_engine({seed, static_cast<std::uint64_t>(s)});
      CftpSample sample =
          mode == CftpMode::Collapse
              ? sample_collapse(law, pick, engine, options)
              : sample_pattern(law, pick, *word, engine, options);
      ++local.counts[sample.state];
      local.depth_mean += static_cast<double>(sample.depth);
      local.depth_max = std::max(local.depth_max, sample.depth);
    }
  };

  if (jobs <= 1) {
    run_range(0, n, stats);
  } else {
    const int workers = std::min<std::int64_t>(jobs, n);
    std::vector<SampleStats> partial(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t begin = n * w / workers;
      const std::int64_t end = n * (w + 1) / workers;
      threads.emplace_back(run_range, begin, end, std::ref(partial[w]));
    }
    for (auto& t : threads) {
      t.join();
    }
    for (const auto& part : partial) {
      for (std::size_t i = 0; i < stats.counts.size(); ++i) {
        stats.counts[i] += part.counts[i];
      }
      stats.depth_mean += part.depth_mean;
      stats.depth_max = std::max(stats.depth_max, part.depth_max);
    }
  }
  stats.depth_mean /= static_cast<double>(n);
  return stats;
}

std::vector<int> forward_simulate(const MappingLaw& law, int start,
                                  std::int64_t steps, std::uint64_t seed) {
  if (start < 0 || start >= law.size()) {
    throw Error(ErrorCode::SizeMismatch, "start state out of range");
  }
  SupportSampler pick(law);
  std::mt19937_64 engine = make_engine({seed, 0});
  std::vector<int> trajectory{start};
  trajectory.reserve(static_cast<std::size_t>(steps) + 1);
  int x = start;
  for (std::int64_t i = 0; i < steps; ++i) {
    x = law.support[pick.draw(engine)](x);
    trajectory.push_back(x);
  }
  return trajectory;
}

double tv_to_stationary(const std::vector<std::int64_t>& counts,
                        const ProbabilityVector& stationary) {
  std::int64_t total = 0;
  for (auto c : counts) {
    total += c;
  }
  if (total == 0) {
    return 1.0;
  }
  double tv = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double empirical =
        static_cast<double>(counts[i]) / static_cast<double>(total);
    tv += std::abs(empirical - to_double(stationary(static_cast<int>(i))));
  }
  return tv / 2.0;
}

}  // namespace syncwalk
