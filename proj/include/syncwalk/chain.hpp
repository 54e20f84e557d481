#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "syncwalk/rational.hpp"

namespace syncwalk {

/// Row-stochastic matrix over a labeled finite state set, exact rational
/// entries. Construct through validate_chain so the invariants (rows sum
/// to exactly 1, entries nonnegative, labels distinct) are guaranteed.
struct TransitionMatrix {
  std::vector<std::string> states;
  RationalMatrix rows;

  int size() const { return static_cast<int>(states.size()); }
  const Rational& operator()(int x, int y) const { return rows(x, y); }

  /// Index of a state label, or -1 when absent.
  int index_of(std::string_view label) const;
};

using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;

/// Validates labels and rows and assembles a TransitionMatrix.
/// Throws: EmptyStateSpace, DuplicateLabel, SizeMismatch, NegativeEntry,
/// RowSumNotOne.
TransitionMatrix validate_chain(std::vector<std::string> states,
                                RationalMatrix rows);

/// The set of ordered pairs (x,y) with q_{x,y} > 0.
EdgeSet edge_set(const TransitionMatrix& chain);

/// Sorted successor lists per state, induced by the positive entries.
std::vector<std::vector<int>> successor_lists(const TransitionMatrix& chain);

/// True iff the directed graph of positive entries is strongly connected.
bool is_irreducible(const TransitionMatrix& chain);

/// gcd of the lengths of all cycles through state x, computed from BFS
/// depth differences within x's strongly connected component.
/// Throws NoCycleThroughState when x lies on no cycle.
int period(const TransitionMatrix& chain, int x);

/// True iff period(chain, x) == 1 for every state x.
bool is_aperiodic(const TransitionMatrix& chain);

/// Irreducible and aperiodic.
bool is_ergodic(const TransitionMatrix& chain);

/// The unique exact stationary row vector: lambda * Q = lambda, sum 1.
/// Throws NotIrreducible.
ProbabilityVector stationary_law(const TransitionMatrix& chain);

/// Smallest r >= 1 such that Q^r is entrywise positive, searched up to the
/// Wielandt bound (n-1)^2 + 1. Throws NotPrimitive past the bound.
int primitivity_index(const TransitionMatrix& chain);

/// Entropy rate in bits: -sum_x lambda(x) sum_y q_{x,y} log2 q_{x,y},
/// with 0 log 0 = 0. Throws NotIrreducible.
double entropy_rate(const TransitionMatrix& chain);

/// Entropy rate against an explicitly supplied stationary vector; used for
/// lifted chains whose stationary law is known in closed form.
double entropy_rate(const TransitionMatrix& chain,
                    const ProbabilityVector& stationary);

/// Witness that every row of Q is a rearrangement of one common multiset nu:
/// q_{x,y} = nu[tau[x][y]] exactly. nu is laid out in descending order;
/// each tau[x] is a permutation of {0..n-1}.
struct PUniformWitness {
  ProbabilityVector nu;
  std::vector<std::vector<int>> tau;
};

/// Returns a witness iff all rows share one value multiset; empty otherwise.
std::optional<PUniformWitness> is_p_uniform(const TransitionMatrix& chain);

}  // namespace syncwalk
