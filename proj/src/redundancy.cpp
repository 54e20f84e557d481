#include "syncwalk/redundancy.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "syncwalk/error.hpp"
#include "syncwalk/sync.hpp"

namespace syncwalk {

namespace {

double entropy_term(const Rational& p) {
  double t = to_double(p);
  return t > 0.0 ? -t * std::log2(t) : 0.0;
}

bool chain_is_deterministic(const TransitionMatrix& chain) {
  for (int x = 0; x < chain.size(); ++x) {
    int positive = 0;
    for (int y = 0; y < chain.size(); ++y) {
      if (chain(x, y) > 0) {
        ++positive;
      }
    }
    if (positive != 1) {
      return false;
    }
  }
  return true;
}

// Sum over states of the row entropies; the entropy of the product law and
// the maximum of h over all mapping laws for the chain.
double max_law_entropy(const TransitionMatrix& chain) {
  double h = 0.0;
  for (int x = 0; x < chain.size(); ++x) {
    for (int y = 0; y < chain.size(); ++y) {
      h += entropy_term(chain(x, y));
    }
  }
  return h;
}

}  // namespace

double shannon_entropy(const std::vector<Rational>& probs) {
  double h = 0.0;
  for (const auto& p : probs) {
    h += entropy_term(p);
  }
  return h;
}

double law_entropy(const MappingLaw& law) { return shannon_entropy(law.probs); }

double redundancy(const MappingLaw& law, const TransitionMatrix& chain) {
  if (!verify_mapping_law(law, chain)) {
    throw Error(ErrorCode::NotAMappingLaw,
                "the law does not reproduce the chain");
  }
  if (law.support_size() == 1) {
    throw Error(ErrorCode::DeterministicChain,
                "redundancy is undefined at zero law entropy");
  }
  const double h_law = law_entropy(law);
  const double h_chain = entropy_rate(chain);
  return (h_law - h_chain) / h_law;
}

std::vector<Mapping> edge_consistent_maps(const TransitionMatrix& chain,
                                          std::uint64_t cap) {
  const int n = chain.size();
  const auto succ = successor_lists(chain);
  std::uint64_t count = 1;
  for (const auto& choices : succ) {
    count *= choices.size();
    if (count > cap) {
      throw Error(ErrorCode::SupportTooLarge,
                  "more than " + std::to_string(cap) +
                      " edge-consistent mappings");
    }
  }

  std::vector<Mapping> maps;
  maps.reserve(count);
  std::vector<int> odometer(n, 0);
  while (true) {
    Mapping m;
    m.images.resize(n);
    for (int x = 0; x < n; ++x) {
      m.images[x] = succ[x][odometer[x]];
    }
    maps.push_back(std::move(m));
    int x = n - 1;
    while (x >= 0 &&
           odometer[x] + 1 == static_cast<int>(succ[x].size())) {
      odometer[x] = 0;
      --x;
    }
    if (x < 0) {
      break;
    }
    ++odometer[x];
  }
  return maps;
}

MappingLaw product_law(const TransitionMatrix& chain, std::uint64_t cap) {
  std::vector<Mapping> maps = edge_consistent_maps(chain, cap);
  MappingLaw law;
  law.states = chain.states;
  law.support = std::move(maps);
  law.probs.reserve(law.support.size());
  for (const auto& m : law.support) {
    Rational p = 1;
    for (int x = 0; x < chain.size(); ++x) {
      p *= chain(x, m(x));
    }
    law.probs.push_back(std::move(p));
  }
  return law;
}

namespace {

// Number of k-subsets, saturating at limit+1 to keep the cap test cheap.
std::uint64_t binomial_capped(std::uint64_t m, std::uint64_t k,
                              std::uint64_t limit) {
  if (k > m) {
    return 0;
  }
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (result > limit) {
      return limit + 1;
    }
    result = result * (m - i) / (i + 1);
  }
  return result;
}

}  // namespace

MappingLaw min_entropy_law_exact(const TransitionMatrix& chain,
                                 std::uint64_t support_cap) {
  const int n = chain.size();
  std::vector<Mapping> maps = edge_consistent_maps(chain, support_cap);
  const int m = static_cast<int>(maps.size());

  std::vector<Edge> edges(edge_set(chain).begin(), edge_set(chain).end());
  const int e = static_cast<int>(edges.size());
  const int max_support = e - n + 1;

  std::uint64_t total = 0;
  for (int k = 1; k <= max_support; ++k) {
    total += binomial_capped(m, k, support_cap);
    if (total > support_cap) {
      throw Error(ErrorCode::SupportTooLarge,
                  "vertex enumeration over more than " +
                      std::to_string(support_cap) + " candidate supports");
    }
  }

  // Incidence of maps on edges, and the edge probabilities.
  std::vector<std::vector<char>> hits(m, std::vector<char>(e, 0));
  for (int j = 0; j < m; ++j) {
    for (int idx = 0; idx < e; ++idx) {
      hits[j][idx] = maps[j](edges[idx].first) == edges[idx].second ? 1 : 0;
    }
  }
  RationalVector b(e);
  for (int idx = 0; idx < e; ++idx) {
    b(idx) = chain(edges[idx].first, edges[idx].second);
  }

  double best_h = std::numeric_limits<double>::infinity();
  std::vector<int> best_subset;
  std::vector<Rational> best_probs;

  std::vector<int> subset;
  // Entropy is concave, so its minimum over the mapping-law polytope sits
  // at a vertex: a support of at most #E - n + 1 maps whose incidence
  // columns are independent and solve the edge constraints positively.
  auto try_subset = [&](const std::vector<char>& covered) {
    for (int idx = 0; idx < e; ++idx) {
      if (!covered[idx]) {
        return;  // some positive edge is unreachable from this support
      }
    }
    const int k = static_cast<int>(subset.size());
    RationalMatrix a = RationalMatrix::Zero(e, k);
    for (int c = 0; c < k; ++c) {
      for (int idx = 0; idx < e; ++idx) {
        a(idx, c) = hits[subset[c]][idx] ? 1 : 0;
      }
    }
    auto lu = a.fullPivLu();
    if (lu.rank() != k) {
      return;  // dependent columns: not a basic solution
    }
    RationalVector x = lu.solve(b);
    if (a * x != b) {
      return;  // inconsistent
    }
    for (int c = 0; c < k; ++c) {
      if (x(c) <= 0) {
        return;
      }
    }
    std::vector<Rational> probs(k);
    for (int c = 0; c < k; ++c) {
      probs[c] = x(c);
    }
    double h = shannon_entropy(probs);
    if (h < best_h) {
      best_h = h;
      best_subset = subset;
      best_probs = std::move(probs);
    }
  };

  // Enumerate supports in lexicographic order, growing a coverage bitmask
  // so subsets that cannot reach every edge are cut early.
  std::vector<std::vector<char>> covered_stack;
  covered_stack.emplace_back(e, 0);
  auto recurse = [&](auto&& self, int next) -> void {
    if (!subset.empty()) {
      try_subset(covered_stack.back());
    }
    if (static_cast<int>(subset.size()) == max_support) {
      return;
    }
    for (int j = next; j < m; ++j) {
      const auto& covered = covered_stack.back();
      std::vector<char> merged(covered);
      for (int idx = 0; idx < e; ++idx) {
        if (hits[j][idx]) {
          merged[idx] = 1;
        }
      }
      subset.push_back(j);
      covered_stack.push_back(std::move(merged));
      self(self, j + 1);
      covered_stack.pop_back();
      subset.pop_back();
    }
  };
  recurse(recurse, 0);

  if (best_subset.empty()) {
    throw Error(ErrorCode::InvalidMatrix,
                "no feasible mapping law found; the chain is malformed");
  }
  MappingLaw law;
  law.states = chain.states;
  for (std::size_t c = 0; c < best_subset.size(); ++c) {
    law.support.push_back(maps[best_subset[c]]);
    law.probs.push_back(best_probs[c]);
  }
  return law;
}

namespace {

// One peeling pass with random feasible pivots; same invariants as
// decompose, different exploration.
MappingLaw decompose_randomized(const TransitionMatrix& chain,
                                std::mt19937_64& rng) {
  const int n = chain.size();
  RationalMatrix rows = chain.rows;
  Rational survival = 1;
  std::map<Mapping, Rational> acc;

  auto deterministic = [&]() {
    for (int x = 0; x < n; ++x) {
      int positive = 0;
      for (int y = 0; y < n; ++y) {
        if (rows(x, y) > 0) {
          ++positive;
        }
      }
      if (positive != 1) {
        return false;
      }
    }
    return true;
  };

  while (!deterministic()) {
    Rational ceiling;
    for (int x = 0; x < n; ++x) {
      Rational row_max = 0;
      for (int y = 0; y < n; ++y) {
        row_max = std::max(row_max, rows(x, y));
      }
      ceiling = x == 0 ? row_max : std::min(ceiling, row_max);
    }
    std::vector<std::pair<int, int>> feasible;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (rows(x, y) > 0 && rows(x, y) <= ceiling) {
          feasible.emplace_back(x, y);
        }
      }
    }
    auto [px, py] =
        feasible[std::uniform_int_distribution<std::size_t>(
            0, feasible.size() - 1)(rng)];
    const Rational eps = rows(px, py);

    Mapping sigma;
    sigma.images.resize(n);
    for (int x = 0; x < n; ++x) {
      if (x == px) {
        sigma.images[x] = py;
        continue;
      }
      std::vector<int> options;
      for (int y = 0; y < n; ++y) {
        if (rows(x, y) >= eps) {
          options.push_back(y);
        }
      }
      sigma.images[x] = options[std::uniform_int_distribution<std::size_t>(
          0, options.size() - 1)(rng)];
    }

    acc[sigma] += survival * eps;
    survival *= 1 - eps;
    const Rational scale = 1 / (1 - eps);
    for (int x = 0; x < n; ++x) {
      rows(x, sigma(x)) -= eps;
      for (int y = 0; y < n; ++y) {
        rows(x, y) *= scale;
      }
    }
  }
  {
    Mapping m;
    m.images.resize(n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (rows(x, y) > 0) {
          m.images[x] = y;
          break;
        }
      }
    }
    acc[m] += survival;
  }

  MappingLaw law;
  law.states = chain.states;
  for (auto& [mapping, prob] : acc) {
    law.support.push_back(mapping);
    law.probs.push_back(prob);
  }
  return law;
}

}  // namespace

MappingLaw min_entropy_law_heuristic(const TransitionMatrix& chain,
                                     std::uint64_t seed, int restarts) {
  MappingLaw best = decompose(chain, DecomposeStrategy::MaxEps);
  double best_h = law_entropy(best);
  auto consider = [&](MappingLaw candidate) {
    double h = law_entropy(candidate);
    if (h < best_h) {
      best_h = h;
      best = std::move(candidate);
    }
  };
  consider(decompose(chain, DecomposeStrategy::MinEps));
  consider(decompose(chain, DecomposeStrategy::Lexicographic));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < restarts; ++i) {
    consider(decompose_randomized(chain, rng));
  }
  return best;
}

const char* bound_method_name(BoundMethod method) {
  switch (method) {
    case BoundMethod::Exact: return "exact";
    case BoundMethod::Heuristic: return "heuristic";
    case BoundMethod::ClosedForm: return "closed-form";
  }
  return "unknown";
}

RedundancyBounds redundancy_bounds(const TransitionMatrix& chain,
                                   bool exact_min,
                                   const BoundsOptions& options) {
  if (!is_irreducible(chain)) {
    throw Error(ErrorCode::NotIrreducible,
                "redundancy bounds need an irreducible chain");
  }
  if (chain_is_deterministic(chain)) {
    throw Error(ErrorCode::DeterministicChain,
                "a deterministic chain admits only the zero-entropy law");
  }
  const double h_chain = entropy_rate(chain);

  RedundancyBounds bounds;
  bounds.max_method = BoundMethod::ClosedForm;
  bounds.r_max = 1.0 - h_chain / max_law_entropy(chain);
  try {
    bounds.max_witness = product_law(chain, options.support_cap);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::SupportTooLarge) {
      throw;
    }
  }

  MappingLaw min_law;
  if (exact_min) {
    min_law = min_entropy_law_exact(chain, options.support_cap);
    bounds.min_method = BoundMethod::Exact;
  } else {
    min_law =
        min_entropy_law_heuristic(chain, options.seed, options.restarts);
    bounds.min_method = BoundMethod::Heuristic;
  }
  bounds.r_min = 1.0 - h_chain / law_entropy(min_law);
  bounds.min_witness = std::move(min_law);
  return bounds;
}

RedundancyReport redundancy_report(const TransitionMatrix& chain,
                                   const MappingLaw& law, bool exact_min,
                                   const BoundsOptions& options) {
  RedundancyReport report;
  report.h_chain = entropy_rate(chain);
  report.h_law = law_entropy(law);
  report.r_law = redundancy(law, chain);
  report.bounds = redundancy_bounds(chain, exact_min, options);
  return report;
}

MappingLaw target_redundancy_law(const TransitionMatrix& chain,
                                 double r_target, bool require_sync,
                                 const TargetOptions& options) {
  if (chain_is_deterministic(chain)) {
    throw Error(ErrorCode::DeterministicChain,
                "redundancy is undefined for a deterministic chain");
  }
  if (require_sync && !is_ergodic(chain)) {
    throw Error(ErrorCode::NotErgodic,
                "a sync mapping law needs an ergodic chain");
  }

  MappingLaw low;
  try {
    low = min_entropy_law_exact(chain, options.support_cap);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::SupportTooLarge) {
      throw;
    }
    low = min_entropy_law_heuristic(chain, options.seed, options.restarts);
  }
  MappingLaw high = product_law(chain, options.support_cap);

  const double r_low = redundancy(low, chain);
  const double r_high = redundancy(high, chain);

  if (!require_sync) {
    if (std::abs(r_target - r_low) <= options.tol) {
      return low;
    }
    if (std::abs(r_target - r_high) <= options.tol) {
      return high;
    }
  }
  if (!(r_low < r_target && r_target < r_high)) {
    throw Error(ErrorCode::TargetOutOfRange,
                "target " + std::to_string(r_target) +
                    " outside the achievable range [" + std::to_string(r_low) +
                    ", " + std::to_string(r_high) + "]");
  }

  // Mixture skeleton: weight*low + ... + sync_weight*sync. Redundancy is
  // continuous along it, so a sign-preserving bisection converges.
  const MappingLaw* sync_part = nullptr;
  MappingLaw sync_law;
  Rational sync_weight = 0;
  if (require_sync) {
    sync_law = construct_sync_law(chain).law;
    sync_part = &sync_law;
    sync_weight = Rational(1, 2);
    for (int i = 0;; ++i) {
      if (i >= options.max_iterations) {
        throw Error(ErrorCode::ToleranceNotReached,
                    "no sync blend weight brackets the target");
      }
      const Rational rest = 1 - sync_weight;
      MappingLaw lo_mix =
          mix_laws({{rest, &low}, {sync_weight, sync_part}});
      MappingLaw hi_mix =
          mix_laws({{rest, &high}, {sync_weight, sync_part}});
      if (redundancy(lo_mix, chain) < r_target &&
          r_target < redundancy(hi_mix, chain)) {
        break;
      }
      sync_weight /= 2;
    }
  }

  auto law_at = [&](const Rational& t) {
    const Rational rest = 1 - sync_weight;
    std::vector<std::pair<Rational, const MappingLaw*>> terms{
        {rest * t, &low}, {rest * (1 - t), &high}};
    if (sync_part != nullptr) {
      terms.push_back({sync_weight, sync_part});
    }
    return mix_laws(terms);
  };

  // g(t) = r(mixture with weight t on the low law) - target:
  // g(0) >= 0 >= g(1); bisect on the sign change.
  Rational lo = 0;
  Rational hi = 1;
  for (int i = 0; i < options.max_iterations; ++i) {
    const Rational mid = (lo + hi) / 2;
    MappingLaw candidate = law_at(mid);
    const double r = redundancy(candidate, chain);
    if (std::abs(r - r_target) <= options.tol) {
      return candidate;
    }
    if (r > r_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw Error(ErrorCode::ToleranceNotReached,
              "bisection did not reach tolerance " +
                  std::to_string(options.tol));
}

}  // namespace syncwalk
