#pragma once

#include <optional>
#include <vector>

#include "syncwalk/mapping.hpp"

namespace syncwalk {

/// Word over a law's support whose left-to-right composition is a constant
/// map; indices point into the support, target is the constant value.
struct SyncWord {
  std::vector<int> indices;
  int target = 0;
};

/// True iff compose of the referenced mappings is constant with the stated
/// target. Throws SizeMismatch on out-of-range indices.
bool check_sync_word(const std::vector<Mapping>& maps, const SyncWord& word);

/// Pair-collapse criterion: some finite word over the maps is constant iff
/// every unordered state pair can be merged by some word.
bool is_sync(const std::vector<Mapping>& maps);
bool is_sync(const MappingLaw& law);

/// Greedy synchronizing word via iterated shortest pair merges; length is
/// at most n^3. Empty when the maps are not synchronizing.
std::optional<SyncWord> find_sync_word(const std::vector<Mapping>& maps);
std::optional<SyncWord> find_sync_word(const MappingLaw& law);

/// Exact minimum-length synchronizing word by BFS over the subset automaton.
/// Returns empty when no word of length <= max_len exists. Throws
/// StateSpaceTooLarge when 2^n does not fit the search budget.
std::optional<SyncWord> shortest_sync_word(const std::vector<Mapping>& maps,
                                           int max_len);
std::optional<SyncWord> shortest_sync_word(const MappingLaw& law, int max_len);

/// Output of construct_sync_law: the synchronizing law, the witness word
/// collapsing every state to target, the primitivity index r used, the
/// mixing weight, and the backward set chain V_r = {x0} up to V_0 = V.
struct SyncConstruction {
  MappingLaw law;
  SyncWord word;
  int r = 0;
  Rational eps;
  std::vector<std::vector<int>> backward_sets;
};

/// Builds a synchronizing mapping law for an ergodic chain: r deterministic
/// maps funneling every state into x0 along backward edge sets, mixed
/// uniformly, then blended with a decomposition of the residual chain.
/// Throws NotErgodic.
SyncConstruction construct_sync_law(const TransitionMatrix& chain,
                                    std::optional<int> x0 = std::nullopt);

}  // namespace syncwalk
