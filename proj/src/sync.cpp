#include "syncwalk/sync.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "syncwalk/error.hpp"

namespace syncwalk {

namespace {

// Unordered pair (u < v) flattened to u * n + v.
int pair_id(int u, int v, int n) {
  if (u > v) {
    std::swap(u, v);
  }
  return u * n + v;
}

}  // namespace

bool check_sync_word(const std::vector<Mapping>& maps, const SyncWord& word) {
  if (word.indices.empty()) {
    return false;
  }
  MappingWord expanded;
  for (int idx : word.indices) {
    if (idx < 0 || idx >= static_cast<int>(maps.size())) {
      throw Error(ErrorCode::SizeMismatch,
                  "sync word index " + std::to_string(idx + 1) +
                      " outside the support");
    }
    expanded.push_back(maps[idx]);
  }
  Mapping composed = compose_word(expanded);
  return is_constant(composed) && composed(0) == word.target;
}

bool is_sync(const std::vector<Mapping>& maps) {
  if (maps.empty()) {
    return false;
  }
  const int n = maps.front().size();
  if (n == 1) {
    return true;
  }

  // A word collapsing everything exists iff every unordered pair can be
  // merged by some word; BFS backward from the pairs a single map merges.
  std::vector<char> good(n * n, 0);
  std::vector<std::vector<int>> rev(n * n);
  std::deque<int> queue;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int p = pair_id(u, v, n);
      for (const auto& m : maps) {
        int a = m(u);
        int b = m(v);
        if (a == b) {
          if (!good[p]) {
            good[p] = 1;
            queue.push_back(p);
          }
        } else {
          rev[pair_id(a, b, n)].push_back(p);
        }
      }
    }
  }
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (int q : rev[p]) {
      if (!good[q]) {
        good[q] = 1;
        queue.push_back(q);
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!good[pair_id(u, v, n)]) {
        return false;
      }
    }
  }
  return true;
}

bool is_sync(const MappingLaw& law) { return is_sync(law.support); }

namespace {

// Shortest word merging states u and v: BFS over pairs until some map
// sends the current pair to a single state. Empty when impossible.
std::optional<std::vector<int>> pair_merge_word(
    const std::vector<Mapping>& maps, int u, int v) {
  const int n = maps.front().size();
  const int d = static_cast<int>(maps.size());
  std::vector<int> parent(n * n, -2);  // -2 unseen, -1 root
  std::vector<int> letter(n * n, -1);
  std::deque<int> queue;
  const int start = pair_id(u, v, n);
  parent[start] = -1;
  queue.push_back(start);
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    int a = p / n;
    int b = p % n;
    for (int k = 0; k < d; ++k) {
      int na = maps[k](a);
      int nb = maps[k](b);
      if (na == nb) {
        std::vector<int> word{k};
        for (int q = p; parent[q] != -1; q = parent[q]) {
          word.push_back(letter[q]);
        }
        std::reverse(word.begin(), word.end());
        return word;
      }
      int np = pair_id(na, nb, n);
      if (parent[np] == -2) {
        parent[np] = p;
        letter[np] = k;
        queue.push_back(np);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SyncWord> find_sync_word(const std::vector<Mapping>& maps) {
  if (maps.empty()) {
    return std::nullopt;
  }
  const int n = maps.front().size();
  if (n == 1) {
    return SyncWord{{0}, 0};
  }

  std::vector<int> current(n);
  for (int x = 0; x < n; ++x) {
    current[x] = x;
  }
  std::vector<int> word;
  while (current.size() > 1) {
    auto merge = pair_merge_word(maps, current[0], current[1]);
    if (!merge) {
      return std::nullopt;
    }
    std::vector<int> next;
    for (int x : current) {
      for (int k : *merge) {
        x = maps[k](x);
      }
      next.push_back(x);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
    word.insert(word.end(), merge->begin(), merge->end());
  }
  return SyncWord{std::move(word), current.front()};
}

std::optional<SyncWord> find_sync_word(const MappingLaw& law) {
  return find_sync_word(law.support);
}

std::optional<SyncWord> shortest_sync_word(const std::vector<Mapping>& maps,
                                           int max_len) {
  if (maps.empty()) {
    return std::nullopt;
  }
  const int n = maps.front().size();
  constexpr int kMaxStates = 20;
  if (n > kMaxStates) {
    throw Error(ErrorCode::StateSpaceTooLarge,
                "subset search over 2^" + std::to_string(n) + " sets");
  }
  if (n == 1) {
    return max_len >= 1 ? std::optional<SyncWord>(SyncWord{{0}, 0})
                        : std::nullopt;
  }

  const int d = static_cast<int>(maps.size());
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<int> parent(full + 1, -2);
  std::vector<signed char> letter(full + 1, -1);
  std::vector<int> dist(full + 1, 0);
  std::deque<std::uint32_t> queue;
  parent[full] = -1;
  queue.push_back(full);

  auto apply = [&](std::uint32_t mask, int k) {
    std::uint32_t out = 0;
    for (int x = 0; x < n; ++x) {
      if (mask & (1u << x)) {
        out |= 1u << maps[k](x);
      }
    }
    return out;
  };

  while (!queue.empty()) {
    std::uint32_t mask = queue.front();
    queue.pop_front();
    if (dist[mask] >= max_len) {
      continue;
    }
    for (int k = 0; k < d; ++k) {
      std::uint32_t next = apply(mask, k);
      if (parent[next] != -2) {
        continue;
      }
      parent[next] = static_cast<int>(mask);
      letter[next] = static_cast<signed char>(k);
      dist[next] = dist[mask] + 1;
      if ((next & (next - 1)) == 0) {
        std::vector<int> word;
        for (std::uint32_t m = next; parent[m] != -1;
             m = static_cast<std::uint32_t>(parent[m])) {
          word.push_back(letter[m]);
        }
        std::reverse(word.begin(), word.end());
        int target = 0;
        while (!(next & (1u << target))) {
          ++target;
        }
        return SyncWord{std::move(word), target};
      }
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::optional<SyncWord> shortest_sync_word(const MappingLaw& law,
                                           int max_len) {
  return shortest_sync_word(law.support, max_len);
}

SyncConstruction construct_sync_law(const TransitionMatrix& chain,
                                    std::optional<int> x0_opt) {
  if (!is_ergodic(chain)) {
    throw Error(ErrorCode::NotErgodic,
                "a sync mapping law needs an ergodic chain");
  }
  const int n = chain.size();
  const int x0 = x0_opt.value_or(0);
  if (x0 < 0 || x0 >= n) {
    throw Error(ErrorCode::SizeMismatch,
                "x0 index " + std::to_string(x0) + " out of range");
  }

  const int r = primitivity_index(chain);
  const auto succ = successor_lists(chain);

  // Backward sets V_r = {x0}, V_{k-1} = predecessors of V_k; Q^r positive
  // forces V_0 = V.
  std::vector<std::vector<int>> sets(r + 1);
  sets[r] = {x0};
  for (int k = r; k >= 1; --k) {
    std::vector<char> member(n, 0);
    for (int y : sets[k]) {
      member[y] = 1;
    }
    std::vector<int> prev;
    for (int x = 0; x < n; ++x) {
      for (int y : succ[x]) {
        if (member[y]) {
          prev.push_back(x);
          break;
        }
      }
    }
    sets[k - 1] = std::move(prev);
  }

  // sigma_k funnels V_{k-1} into V_k along edges; elsewhere any successor.
  std::vector<Mapping> word_maps(r);
  for (int k = r; k >= 1; --k) {
    std::vector<char> in_prev(n, 0);
    std::vector<char> in_next(n, 0);
    for (int x : sets[k - 1]) {
      in_prev[x] = 1;
    }
    for (int y : sets[k]) {
      in_next[y] = 1;
    }
    Mapping sigma;
    sigma.images.resize(n);
    for (int x = 0; x < n; ++x) {
      int image = -1;
      if (in_prev[x]) {
        for (int y : succ[x]) {
          if (in_next[y]) {
            image = y;
            break;
          }
        }
      } else {
        image = succ[x].front();
      }
      sigma.images[x] = image;
    }
    word_maps[k - 1] = std::move(sigma);
  }

  // Uniform law on the word maps, duplicates merged.
  std::map<Mapping, int> multiplicity;
  for (const auto& m : word_maps) {
    ++multiplicity[m];
  }
  MappingLaw uniform;
  uniform.states = chain.states;
  for (const auto& [mapping, count] : multiplicity) {
    uniform.support.push_back(mapping);
    uniform.probs.emplace_back(count, r);
  }

  Rational eps;
  bool first = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (chain(x, y) > 0 && (first || chain(x, y) < eps)) {
        eps = chain(x, y);
        first = false;
      }
    }
  }

  MappingLaw law;
  if (eps == 1) {
    // Deterministic ergodic chain; the uniform law already realizes it.
    law = std::move(uniform);
  } else {
    const TransitionMatrix uniform_chain = induced_chain(uniform);
    RationalMatrix residual(n, n);
    const Rational scale = 1 / (1 - eps);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        residual(x, y) = (chain(x, y) - eps * uniform_chain(x, y)) * scale;
      }
    }
    MappingLaw rest = decompose(TransitionMatrix{chain.states, residual});
    law = mix_laws({{eps, &uniform}, {1 - eps, &rest}});
  }

  SyncWord word;
  word.target = x0;
  for (const auto& m : word_maps) {
    auto it = std::find(law.support.begin(), law.support.end(), m);
    word.indices.push_back(static_cast<int>(it - law.support.begin()));
  }

  return SyncConstruction{std::move(law), std::move(word), r, eps,
                          std::move(sets)};
}

}  // namespace syncwalk
