#include "syncwalk/mapping.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "syncwalk/error.hpp"

namespace syncwalk {

Mapping compose(const Mapping& later, const Mapping& first) {
  if (later.size() != first.size()) {
    throw Error(ErrorCode::SizeMismatch, "mappings over different state sets");
  }
  Mapping out;
  out.images.resize(first.size());
  for (int x = 0; x < first.size(); ++x) {
    out.images[x] = later(first(x));
  }
  return out;
}

Mapping compose_word(const MappingWord& word) {
  if (word.empty()) {
    throw Error(ErrorCode::SizeMismatch, "empty mapping word");
  }
  Mapping out = word.front();
  for (std::size_t i = 1; i < word.size(); ++i) {
    out = compose(word[i], out);
  }
  return out;
}

int image_size(const Mapping& m) {
  std::set<int> image(m.images.begin(), m.images.end());
  return static_cast<int>(image.size());
}

bool is_constant(const Mapping& m) { return image_size(m) == 1; }

MappingLaw make_mapping_law(std::vector<std::string> states,
                            std::vector<Mapping> support,
                            std::vector<Rational> probs) {
  const int n = static_cast<int>(states.size());
  if (n == 0) {
    throw Error(ErrorCode::EmptyStateSpace, "no states given");
  }
  if (support.empty() || support.size() != probs.size()) {
    throw Error(ErrorCode::NotAMappingLaw,
                "support and probability lists must be nonempty and parallel");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i].size() != n) {
      throw Error(ErrorCode::NotAMappingLaw,
                  "mapping " + std::to_string(i + 1) + " is over " +
                      std::to_string(support[i].size()) + " states, not " +
                      std::to_string(n));
    }
    for (int x = 0; x < n; ++x) {
      int y = support[i](x);
      if (y < 0 || y >= n) {
        throw Error(ErrorCode::NotAMappingLaw,
                    "mapping " + std::to_string(i + 1) + " sends state " +
                        states[x] + " out of range");
      }
    }
    if (probs[i] <= 0) {
      throw Error(ErrorCode::NotAMappingLaw,
                  "probability " + std::to_string(i + 1) +
                      " is not positive: " + format_rational(probs[i]));
    }
    sum += probs[i];
  }
  if (sum != 1) {
    throw Error(ErrorCode::NotAMappingLaw,
                "probabilities sum to " + format_rational(sum));
  }
  {
    std::set<Mapping> seen;
    for (const auto& m : support) {
      if (!seen.insert(m).second) {
        throw Error(ErrorCode::NotAMappingLaw, "duplicate support mapping");
      }
    }
  }
  return MappingLaw{std::move(states), std::move(support), std::move(probs)};
}

MappingLaw mix_laws(
    const std::vector<std::pair<Rational, const MappingLaw*>>& terms) {
  if (terms.empty()) {
    throw Error(ErrorCode::NotAMappingLaw, "empty mixture");
  }
  std::map<Mapping, Rational> acc;
  Rational total = 0;
  for (const auto& [weight, law] : terms) {
    if (weight < 0) {
      throw Error(ErrorCode::NotAMappingLaw, "negative mixture weight");
    }
    if (weight == 0) {
      continue;
    }
    total += weight;
    for (int i = 0; i < law->support_size(); ++i) {
      acc[law->support[i]] += weight * law->probs[i];
    }
  }
  if (total != 1) {
    throw Error(ErrorCode::NotAMappingLaw,
                "mixture weights sum to " + format_rational(total));
  }
  MappingLaw out;
  out.states = terms.front().second->states;
  for (auto& [mapping, prob] : acc) {
    if (prob > 0) {
      out.support.push_back(mapping);
      out.probs.push_back(prob);
    }
  }
  return out;
}

TransitionMatrix induced_chain(const MappingLaw& law) {
  const int n = law.size();
  RationalMatrix rows = RationalMatrix::Zero(n, n);
  for (int i = 0; i < law.support_size(); ++i) {
    for (int x = 0; x < n; ++x) {
      rows(x, law.support[i](x)) += law.probs[i];
    }
  }
  return TransitionMatrix{law.states, std::move(rows)};
}

bool verify_mapping_law(const MappingLaw& law, const TransitionMatrix& chain) {
  if (law.size() != chain.size()) {
    return false;
  }
  TransitionMatrix induced = induced_chain(law);
  return induced.rows == chain.rows;
}

namespace {

struct PivotChoice {
  Rational eps;
  int x = -1;
  int y = -1;
};

bool row_is_deterministic(const RationalMatrix& rows, int x) {
  int positive = 0;
  for (int y = 0; y < rows.cols(); ++y) {
    if (rows(x, y) > 0) {
      ++positive;
    }
  }
  return positive == 1;
}

bool matrix_is_deterministic(const RationalMatrix& rows) {
  for (int x = 0; x < rows.rows(); ++x) {
    if (!row_is_deterministic(rows, x)) {
      return false;
    }
  }
  return true;
}

Mapping mapping_of_deterministic(const RationalMatrix& rows) {
  Mapping m;
  m.images.resize(rows.rows());
  for (int x = 0; x < rows.rows(); ++x) {
    for (int y = 0; y < rows.cols(); ++y) {
      if (rows(x, y) > 0) {
        m.images[x] = y;
        break;
      }
    }
  }
  return m;
}

// Largest weight that can be subtracted along any edge-consistent mapping
// while keeping every row nonnegative: the smallest row maximum.
Rational feasible_ceiling(const RationalMatrix& rows) {
  Rational ceiling;
  for (int x = 0; x < rows.rows(); ++x) {
    Rational row_max = 0;
    for (int y = 0; y < rows.cols(); ++y) {
      row_max = std::max(row_max, rows(x, y));
    }
    ceiling = x == 0 ? row_max : std::min(ceiling, row_max);
  }
  return ceiling;
}

PivotChoice select_pivot(const RationalMatrix& rows,
                         DecomposeStrategy strategy) {
  const int n = static_cast<int>(rows.rows());
  PivotChoice choice;
  switch (strategy) {
    case DecomposeStrategy::MinEps: {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          const Rational& q = rows(x, y);
          if (q > 0 && (choice.x < 0 || q < choice.eps)) {
            choice = {q, x, y};
          }
        }
      }
      break;
    }
    case DecomposeStrategy::MaxEps: {
      Rational ceiling = feasible_ceiling(rows);
      for (int x = 0; x < n && choice.x < 0; ++x) {
        for (int y = 0; y < n; ++y) {
          if (rows(x, y) == ceiling) {
            // First row attaining the ceiling as its maximum.
            Rational row_max = 0;
            for (int yy = 0; yy < n; ++yy) {
              row_max = std::max(row_max, rows(x, yy));
            }
            if (row_max == ceiling) {
              choice = {ceiling, x, y};
              break;
            }
          }
        }
      }
      break;
    }
    case DecomposeStrategy::Lexicographic: {
      Rational ceiling = feasible_ceiling(rows);
      for (int x = 0; x < n && choice.x < 0; ++x) {
        for (int y = 0; y < n; ++y) {
          const Rational& q = rows(x, y);
          if (q > 0 && q <= ceiling) {
            choice = {q, x, y};
            break;
          }
        }
      }
      break;
    }
  }
  return choice;
}

}  // namespace

MappingLaw decompose(const TransitionMatrix& chain,
                     DecomposeStrategy strategy) {
  const int n = chain.size();
  {
    // Light re-validation; decompose iterates on exactness.
    for (int x = 0; x < n; ++x) {
      Rational sum = 0;
      for (int y = 0; y < n; ++y) {
        if (chain(x, y) < 0) {
          throw Error(ErrorCode::InvalidMatrix, "negative entry");
        }
        sum += chain(x, y);
      }
      if (sum != 1) {
        throw Error(ErrorCode::InvalidMatrix, "rows must sum to 1");
      }
    }
  }

  RationalMatrix rows = chain.rows;
  Rational survival = 1;
  std::map<Mapping, Rational> acc;

  while (!matrix_is_deterministic(rows)) {
    PivotChoice pivot = select_pivot(rows, strategy);
    // A non-deterministic row has at least two positive entries, so its
    // maximum is < 1; the selected weight is always in (0,1).
    const Rational eps = pivot.eps;

    Mapping sigma;
    sigma.images.resize(n);
    for (int x = 0; x < n; ++x) {
      if (x == pivot.x) {
        sigma.images[x] = pivot.y;
        continue;
      }
      for (int y = 0; y < n; ++y) {
        if (rows(x, y) >= eps) {
          sigma.images[x] = y;
          break;
        }
      }
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
  acc[mapping_of_deterministic(rows)] += survival;

  MappingLaw law;
  law.states = chain.states;
  for (auto& [mapping, prob] : acc) {
    law.support.push_back(mapping);
    law.probs.push_back(prob);
  }
  return law;
}

std::pair<TransitionMatrix, ProbabilityVector> lift_chain(
    const MappingLaw& law) {
  const TransitionMatrix base = induced_chain(law);
  const ProbabilityVector lambda = stationary_law(base);
  const int n = law.size();
  const int d = law.support_size();
  const int lifted_n = n * d;

  std::vector<std::string> labels;
  labels.reserve(lifted_n);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < d; ++k) {
      labels.push_back("(" + law.states[x] + "," + std::to_string(k + 1) +
                       ")");
    }
  }

  RationalMatrix rows = RationalMatrix::Zero(lifted_n, lifted_n);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < d; ++k) {
      const int from = x * d + k;
      for (int j = 0; j < d; ++j) {
        const int y = law.support[j](x);
        rows(from, y * d + j) += law.probs[j];
      }
    }
  }

  ProbabilityVector lifted_lambda = ProbabilityVector::Zero(lifted_n);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < d; ++k) {
      Rational mass = 0;
      for (int w = 0; w < n; ++w) {
        if (law.support[k](w) == x) {
          mass += lambda(w);
        }
      }
      lifted_lambda(x * d + k) = law.probs[k] * mass;
    }
  }

  return {TransitionMatrix{std::move(labels), std::move(rows)},
          std::move(lifted_lambda)};
}

}  // namespace syncwalk
