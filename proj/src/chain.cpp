#include "syncwalk/chain.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "digraph.hpp"
#include "syncwalk/error.hpp"

namespace syncwalk {

namespace {

// Entropy summand f(t) = -t log2 t, with f(0) = 0.
double entropy_term(const Rational& p) {
  double t = to_double(p);
  return t > 0.0 ? -t * std::log2(t) : 0.0;
}

std::vector<std::vector<int>> predecessor_lists(const TransitionMatrix& chain) {
  const int n = chain.size();
  std::vector<std::vector<int>> pred(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (chain(x, y) > 0) {
        pred[y].push_back(x);
      }
    }
  }
  return pred;
}

}  // namespace

int TransitionMatrix::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (states[i] == label) {
      return i;
    }
  }
  return -1;
}

TransitionMatrix validate_chain(std::vector<std::string> states,
                                RationalMatrix rows) {
  const int n = static_cast<int>(states.size());
  if (n == 0) {
    throw Error(ErrorCode::EmptyStateSpace, "no states given");
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& label : states) {
      if (!seen.insert(label).second) {
        throw Error(ErrorCode::DuplicateLabel,
                    "state label \"" + label + "\" repeats");
      }
    }
  }
  if (rows.rows() != n || rows.cols() != n) {
    throw Error(ErrorCode::SizeMismatch,
                "expected a " + std::to_string(n) + "x" + std::to_string(n) +
                    " matrix, got " + std::to_string(rows.rows()) + "x" +
                    std::to_string(rows.cols()));
  }
  for (int x = 0; x < n; ++x) {
    Rational sum = 0;
    for (int y = 0; y < n; ++y) {
      if (rows(x, y) < 0) {
        throw Error(ErrorCode::NegativeEntry,
                    "entry (" + states[x] + "," + states[y] + ") is " +
                        format_rational(rows(x, y)));
      }
      sum += rows(x, y);
    }
    if (sum != 1) {
      throw Error(ErrorCode::RowSumNotOne,
                  "row " + std::to_string(x + 1) + " (state " + states[x] +
                      ") sums to " + format_rational(sum));
    }
  }
  return TransitionMatrix{std::move(states), std::move(rows)};
}

EdgeSet edge_set(const TransitionMatrix& chain) {
  EdgeSet edges;
  const int n = chain.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (chain(x, y) > 0) {
        edges.emplace(x, y);
      }
    }
  }
  return edges;
}

std::vector<std::vector<int>> successor_lists(const TransitionMatrix& chain) {
  const int n = chain.size();
  std::vector<std::vector<int>> succ(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (chain(x, y) > 0) {
        succ[x].push_back(y);
      }
    }
  }
  return succ;
}

bool is_irreducible(const TransitionMatrix& chain) {
  return detail::strongly_connected(successor_lists(chain),
                                    predecessor_lists(chain));
}

int period(const TransitionMatrix& chain, int x) {
  int g = detail::cycle_gcd_through(successor_lists(chain),
                                    predecessor_lists(chain), x);
  if (g == 0) {
    throw Error(ErrorCode::NoCycleThroughState,
                "state " + chain.states[x] + " lies on no cycle");
  }
  return g;
}

bool is_aperiodic(const TransitionMatrix& chain) {
  for (int x = 0; x < chain.size(); ++x) {
    if (period(chain, x) != 1) {
      return false;
    }
  }
  return true;
}

bool is_ergodic(const TransitionMatrix& chain) {
  return is_irreducible(chain) && is_aperiodic(chain);
}

ProbabilityVector stationary_law(const TransitionMatrix& chain) {
  if (!is_irreducible(chain)) {
    throw Error(ErrorCode::NotIrreducible,
                "stationary law needs an irreducible chain");
  }
  const int n = chain.size();
  // lambda Q = lambda with sum 1: (Q^T - I) has rank n-1 and columns summing
  // to zero, so replacing one row by the normalization keeps full rank.
  RationalMatrix a = chain.rows.transpose() - RationalMatrix::Identity(n, n);
  for (int y = 0; y < n; ++y) {
    a(n - 1, y) = 1;
  }
  RationalVector b = RationalVector::Zero(n);
  b(n - 1) = 1;
  return a.fullPivLu().solve(b);
}

int primitivity_index(const TransitionMatrix& chain) {
  const int n = chain.size();
  using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
  IntMatrix base(n, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      base(x, y) = chain(x, y) > 0 ? 1 : 0;
    }
  }
  const int wielandt = (n - 1) * (n - 1) + 1;
  IntMatrix power = base;
  for (int r = 1; r <= wielandt; ++r) {
    if ((power.array() > 0).all()) {
      return r;
    }
    power = (power * base).unaryExpr([](int v) { return v > 0 ? 1 : 0; });
  }
  throw Error(ErrorCode::NotPrimitive,
              "no power up to the Wielandt bound " + std::to_string(wielandt) +
                  " is positive; the chain is not ergodic");
}

double entropy_rate(const TransitionMatrix& chain) {
  return entropy_rate(chain, stationary_law(chain));
}

double entropy_rate(const TransitionMatrix& chain,
                    const ProbabilityVector& stationary) {
  const int n = chain.size();
  double h = 0.0;
  for (int x = 0; x < n; ++x) {
    double weight = to_double(stationary(x));
    for (int y = 0; y < n; ++y) {
      h += weight * entropy_term(chain(x, y));
    }
  }
  return h;
}

std::optional<PUniformWitness> is_p_uniform(const TransitionMatrix& chain) {
  const int n = chain.size();
  std::vector<Rational> common;
  for (int y = 0; y < n; ++y) {
    common.push_back(chain(0, y));
  }
  std::sort(common.begin(), common.end(), std::greater<>());

  for (int x = 1; x < n; ++x) {
    std::vector<Rational> row;
    for (int y = 0; y < n; ++y) {
      row.push_back(chain(x, y));
    }
    std::sort(row.begin(), row.end(), std::greater<>());
    if (row != common) {
      return std::nullopt;
    }
  }

  PUniformWitness witness;
  witness.nu = RationalVector(n);
  for (int j = 0; j < n; ++j) {
    witness.nu(j) = common[j];
  }
  witness.tau.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    std::vector<bool> used(n, false);
    for (int y = 0; y < n; ++y) {
      for (int j = 0; j < n; ++j) {
        if (!used[j] && witness.nu(j) == chain(x, y)) {
          witness.tau[x][y] = j;
          used[j] = true;
          break;
        }
      }
    }
  }
  return witness;
}

}  // namespace syncwalk
