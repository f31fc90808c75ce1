#pragma once

#include <optional>
#include <string>
#include <vector>

namespace odds {

// A pattern vector stores per-block success counts (b_k, ..., b_1) with the
// outermost block first, i.e. entries[0] = b_k and entries[k-1] = b_1.
using PatternVector = std::vector<int>;

enum class PatternKind { hat, xi, xi_plus };

struct PatternSet {
  int k = 0;
  PatternKind kind = PatternKind::hat;
  std::vector<PatternVector> vectors;  // lexicographically descending
};

// Enumeration is capped here. Counts roughly triple per step (23714 at
// k = 11, ~80k at k = 12), so 12 keeps every set comfortably in memory.
inline constexpr int kMaxPatternOrder = 12;

// Feasibility: sum_{l=k'}^{k} b_l + k' <= k+1 for every k' in 1..k, and the
// total count is at least 1.
bool in_xi_hat(const PatternVector& b);

// Minimal feasible vectors: feasible, and no proper suffix (b_{k'},...,b_1)
// is itself feasible at its own length.
bool in_xi(const PatternVector& b);

// The unique tight position of a minimal vector: the largest k* such that
// sum_{l=k*}^{k} b_l + k* = k+1, the constraint is strict above k*, and all
// entries below k* are zero. Returns 0 when no position qualifies.
int apex_of(const PatternVector& b);

PatternSet enumerate_xi_hat(int k);
PatternSet enumerate_xi(int k);            // apex characterization, one pass
PatternSet enumerate_xi_reference(int k);  // literal suffix filter, for cross-checks
PatternSet enumerate_xi_plus(int k);       // total count exactly k

// |Xi_k| by a quadratic counting recurrence (no materialization).
long long xi_count(int k);

// Witness index for a length-m pattern vector: the unique k such that the
// suffix (b_k,...,b_1) is minimal-feasible, if any.
std::optional<int> is_winning_pattern(const PatternVector& b);

// Lattice-path view. A path from (k,k) to (0,0) descends one level per
// step; c[j] is the value coordinate at level k-j (c[0] = k, c[k] = 0), and
// the vector entries are the per-level drops b_{k'} = c_{k'} - c_{k'-1}.
struct LatticePath {
  std::vector<int> c;
  PatternVector vec;
  int first_apex = 0;  // largest k* with c_{k*-1} = k*-1
};

struct LatticePathReport {
  int k = 0;
  std::vector<LatticePath> paths;
  bool matches_xi_plus = false;
};

LatticePathReport lattice_paths(int k);

// Conversions between a vector and its c-value path. path_of accepts any
// nonnegative vector whose partial drops stay on valid vertices (value >=
// level); the path then ends at (0, c_k0) where c_k0 = k - total count.
std::vector<int> path_of(const PatternVector& b);
PatternVector vector_of_path(const std::vector<int>& c);

std::string pattern_kind_name(PatternKind kind);

}  // namespace odds
