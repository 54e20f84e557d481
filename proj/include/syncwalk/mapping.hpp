#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "syncwalk/chain.hpp"
#include "syncwalk/rational.hpp"

namespace syncwalk {

/// Total self-map of the state set; images[x] is the image of state x.
struct Mapping {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x]; }
  bool operator==(const Mapping&) const = default;
  auto operator<=>(const Mapping&) const = default;
};

/// Finite sequence of mappings; the first element acts first.
using MappingWord = std::vector<Mapping>;

/// Left-to-right composition: x -> w[p-1](... w[0](x) ...).
/// Throws SizeMismatch when the word is empty or sizes disagree.
Mapping compose_word(const MappingWord& word);

/// later o first, i.e. x -> later(first(x)).
Mapping compose(const Mapping& later, const Mapping& first);

int image_size(const Mapping& m);
bool is_constant(const Mapping& m);

/// Finitely supported probability law over self-maps of the state set.
/// probs are positive exact rationals summing to exactly 1; support
/// mappings are pairwise distinct (it is the true support).
struct MappingLaw {
  std::vector<std::string> states;
  std::vector<Mapping> support;
  std::vector<Rational> probs;

  int size() const { return static_cast<int>(states.size()); }
  int support_size() const { return static_cast<int>(support.size()); }
};

/// Validates and assembles a MappingLaw; merges nothing (duplicates are an
/// error). Throws NotAMappingLaw on any invariant violation.
MappingLaw make_mapping_law(std::vector<std::string> states,
                            std::vector<Mapping> support,
                            std::vector<Rational> probs);

/// Exact convex combination of laws over the same state set. Duplicate
/// mappings are merged; zero-weight components are dropped; the result is
/// sorted by mapping for deterministic output.
MappingLaw mix_laws(
    const std::vector<std::pair<Rational, const MappingLaw*>>& terms);

/// The Markov transition matrix realized by the law:
/// q_{x,y} = sum of probs[i] over support[i] sending x to y.
TransitionMatrix induced_chain(const MappingLaw& law);

/// True iff induced_chain(law) equals chain entrywise, exactly.
bool verify_mapping_law(const MappingLaw& law, const TransitionMatrix& chain);

/// Pivot selection rule for decompose. MinEps mirrors the constructive
/// existence proof (always subtract the minimum positive entry); MaxEps
/// subtracts the largest feasible weight each step and tends to produce
/// fewer support mappings; Lexicographic zeroes the first feasible entry
/// in row-major order.
enum class DecomposeStrategy { MinEps, MaxEps, Lexicographic };

/// Peels deterministic maps off the chain until nothing is left, emitting
/// one (mapping, weight) pair per step; weights are exact survival products
/// and sum to exactly 1. The result satisfies verify_mapping_law and has
/// support size <= #E(Q) - n + 1.
MappingLaw decompose(const TransitionMatrix& chain,
                     DecomposeStrategy strategy = DecomposeStrategy::MinEps);

/// The chain on pair states (x, sigma) driven by the law, together with its
/// stationary vector built from stationary_law(induced_chain(law)) in closed
/// form. Throws NotIrreducible when the induced chain is not irreducible.
std::pair<TransitionMatrix, ProbabilityVector> lift_chain(
    const MappingLaw& law);

}  // namespace syncwalk
