#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syncwalk/mapping.hpp"
#include "syncwalk/sync.hpp"

namespace syncwalk {

/// Identifies one reproducible random stream: identical (seed, stream)
/// reproduce identical mapping draws within this implementation.
struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

enum class CftpMode { Collapse, Pattern };

/// One exact stationary draw. depth counts backward draws consumed: steps
/// to a constant composition in collapse mode, -T+1 in pattern mode.
/// draws holds the support indices in draw order (time 0 backwards) when
/// recording was requested.
struct CftpSample {
  int state = 0;
  std::int64_t depth = 0;
  CftpMode mode = CftpMode::Collapse;
  std::vector<int> draws;
};

struct CftpOptions {
  std::int64_t depth_cap = 100'000'000;
  bool record_draws = false;
};

/// Coupling from the past. Collapse mode composes IID backward draws until
/// the composition is a constant map. Pattern mode draws backward until the
/// most recent p draws spell the given synchronizing word, the stopping
/// time of the backward construction. Either way the returned state is an
/// exact draw from the stationary law. Throws NotSync when the law is not
/// synchronizing (or the pattern word is missing/invalid), DepthCap past
/// options.depth_cap.
CftpSample cftp_sample(const MappingLaw& law,
                       const std::optional<SyncWord>& word, CftpMode mode,
                       RngSpec rng, const CftpOptions& options = {});

struct SampleStats {
  std::vector<std::int64_t> counts;
  std::int64_t samples = 0;
  double depth_mean = 0.0;
  std::int64_t depth_max = 0;
};

/// n independent samples on streams 0..n-1; deterministic for a fixed seed
/// and independent of the job count.
SampleStats sample_many(const MappingLaw& law,
                        const std::optional<SyncWord>& word, CftpMode mode,
                        std::int64_t n, std::uint64_t seed, int jobs = 1,
                        const CftpOptions& options = {});

/// Forward orbit under IID draws; a burn-in baseline, not exact sampling.
std::vector<int> forward_simulate(const MappingLaw& law, int start,
                                  std::int64_t steps, std::uint64_t seed);

/// Total variation distance between empirical counts and an exact law.
double tv_to_stationary(const std::vector<std::int64_t>& counts,
                        const ProbabilityVector& stationary);

}  // namespace syncwalk
