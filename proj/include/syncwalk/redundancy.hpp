#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syncwalk/mapping.hpp"

namespace syncwalk {

/// Shannon entropy in bits of a finite probability vector, 0 log 0 = 0.
double shannon_entropy(const std::vector<Rational>& probs);

/// Entropy in bits of the mapping law itself.
double law_entropy(const MappingLaw& law);

/// Relative redundancy (h(law) - h(chain)) / h(law) of realizing the chain
/// by the law. Throws NotAMappingLaw when the law does not verify against
/// the chain, DeterministicChain when h(law) = 0.
double redundancy(const MappingLaw& law, const TransitionMatrix& chain);

/// All maps sending each state to one of its successors; the support of any
/// mapping law for the chain is a subset. Throws SupportTooLarge when the
/// product of out-degrees exceeds cap.
std::vector<Mapping> edge_consistent_maps(const TransitionMatrix& chain,
                                          std::uint64_t cap = 1'000'000);

/// The maximum-entropy mapping law: successors chosen independently per
/// state, mu(sigma) = prod_x q_{x,sigma(x)}. Its entropy is the sum of the
/// row entropies. Throws SupportTooLarge past cap.
MappingLaw product_law(const TransitionMatrix& chain,
                       std::uint64_t cap = 1'000'000);

/// Minimum-entropy mapping law, exactly: the entropy is concave, so the
/// minimum sits at a vertex of the mapping-law polytope; vertices are
/// enumerated as supports of size <= #E - n + 1 with exact linear solves.
/// Throws SupportTooLarge when the candidate-support count exceeds cap.
MappingLaw min_entropy_law_exact(const TransitionMatrix& chain,
                                 std::uint64_t support_cap = 1'000'000);

/// Heuristic low-entropy law: best of the three decompose strategies plus
/// seeded randomized restarts. Upper-bounds the exact minimum entropy.
MappingLaw min_entropy_law_heuristic(const TransitionMatrix& chain,
                                     std::uint64_t seed = 0,
                                     int restarts = 64);

enum class BoundMethod { Exact, Heuristic, ClosedForm };

const char* bound_method_name(BoundMethod method);

struct RedundancyBounds {
  double r_min = 0.0;
  double r_max = 0.0;
  BoundMethod min_method = BoundMethod::Heuristic;
  BoundMethod max_method = BoundMethod::ClosedForm;
  /// Laws attaining (exact mode) or approaching (heuristic) the endpoints.
  /// max_witness is materialized only when the product law fits the cap.
  std::optional<MappingLaw> min_witness;
  std::optional<MappingLaw> max_witness;
};

struct BoundsOptions {
  std::uint64_t support_cap = 1'000'000;
  std::uint64_t seed = 0;
  int restarts = 64;
};

/// Redundancy range of the chain. The maximum is closed-form from the
/// product law's entropy; the minimum is exact vertex enumeration when
/// exact_min is set, heuristic otherwise. Throws NotIrreducible,
/// DeterministicChain, and SupportTooLarge (exact mode only).
RedundancyBounds redundancy_bounds(const TransitionMatrix& chain,
                                   bool exact_min,
                                   const BoundsOptions& options = {});

struct RedundancyReport {
  double h_chain = 0.0;
  double h_law = 0.0;
  double r_law = 0.0;
  RedundancyBounds bounds;
};

RedundancyReport redundancy_report(const TransitionMatrix& chain,
                                   const MappingLaw& law, bool exact_min,
                                   const BoundsOptions& options = {});

struct TargetOptions {
  double tol = 1e-6;
  int max_iterations = 200;
  std::uint64_t support_cap = 1'000'000;
  std::uint64_t seed = 0;
  int restarts = 64;
};

/// A mapping law hitting a prescribed redundancy by bisection along convex
/// mixtures of a low- and a high-entropy law; when require_sync is set the
/// mixture is blended with a synchronizing law at a weight small enough to
/// keep the target bracketed, so the result is synchronizing. Throws
/// TargetOutOfRange, ToleranceNotReached, NotErgodic (require_sync).
MappingLaw target_redundancy_law(const TransitionMatrix& chain,
                                 double r_target, bool require_sync = false,
                                 const TargetOptions& options = {});

}  // namespace syncwalk
