#pragma once

#include <string>
#include <vector>

#include "syncwalk/chain.hpp"
#include "syncwalk/mapping.hpp"

namespace syncwalk::testing {

inline TransitionMatrix make_chain(
    std::vector<std::string> labels,
    const std::vector<std::vector<std::string>>& rows) {
  const int n = static_cast<int>(labels.size());
  RationalMatrix m(n, static_cast<int>(rows.empty() ? 0 : rows[0].size()));
  for (int x = 0; x < static_cast<int>(rows.size()); ++x) {
    for (int y = 0; y < static_cast<int>(rows[x].size()); ++y) {
      m(x, y) = parse_rational(rows[x][y]);
    }
  }
  return validate_chain(std::move(labels), std::move(m));
}

// Three-state worked example: rows (0,0,1), (1/2,0,1/2), (1/2,1/2,0).
inline TransitionMatrix example_chain() {
  return make_chain({"1", "2", "3"},
                    {{"0", "0", "1"}, {"1/2", "0", "1/2"}, {"1/2", "1/2", "0"}});
}

// The four maps that can possibly support a law for example_chain(),
// written as 0-based image arrays.
inline Mapping example_map(int which) {
  switch (which) {
    case 1: return Mapping{{2, 0, 0}};  // 1->3, 2->1, 3->1
    case 2: return Mapping{{2, 2, 1}};  // 1->3, 2->3, 3->2
    case 3: return Mapping{{2, 2, 0}};  // 1->3, 2->3, 3->1
    default: return Mapping{{2, 0, 1}};  // 1->3, 2->1, 3->2
  }
}

// The one-parameter family of laws for example_chain(): weight p on the
// first two maps, 1/2 - p on the last two; zero-weight members dropped.
inline MappingLaw example_family_law(const Rational& p) {
  std::vector<Mapping> support;
  std::vector<Rational> probs;
  const Rational q = Rational(1, 2) - p;
  if (p > 0) {
    support.push_back(example_map(1));
    probs.push_back(p);
    support.push_back(example_map(2));
    probs.push_back(p);
  }
  if (q > 0) {
    support.push_back(example_map(3));
    probs.push_back(q);
    support.push_back(example_map(4));
    probs.push_back(q);
  }
  return make_mapping_law({"1", "2", "3"}, std::move(support),
                          std::move(probs));
}

}  // namespace syncwalk::testing
