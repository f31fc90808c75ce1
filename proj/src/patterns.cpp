#include "odds/patterns.hpp"

#include <algorithm>
#include <stdexcept>

#include "odds/errors.hpp"

namespace odds {

namespace {

void check_order(int k) {
  if (k < 1) throw std::invalid_argument("pattern order must be positive");
  if (k > kMaxPatternOrder)
    throw budget_error("pattern order " + std::to_string(k) + " exceeds enumeration bound " +
                       std::to_string(kMaxPatternOrder));
}

// Scans (b_k,...,b_1) outer-first. Feasibility says every leading prefix of
// j+1 entries sums to at most j+1; minimality says the first prefix that
// reaches j+1 exactly is followed by zeros only. Returns the tight position
// j, or -1 when the vector is infeasible or never tight.
int first_tight_position(const PatternVector& b) {
  int s = 0;
  for (size_t j = 0; j < b.size(); ++j) {
    if (b[j] < 0) return -1;
    s += b[j];
    if (s > static_cast<int>(j) + 1) return -1;
    if (s == static_cast<int>(j) + 1) {
      for (size_t l = j + 1; l < b.size(); ++l)
        if (b[l] != 0) return -1;
      return static_cast<int>(j);
    }
  }
  return -1;
}

}  // namespace

bool in_xi_hat(const PatternVector& b) {
  int s = 0;
  for (size_t j = 0; j < b.size(); ++j) {
    if (b[j] < 0) return false;
    s += b[j];
    if (s > static_cast<int>(j) + 1) return false;
  }
  return s >= 1;
}

int apex_of(const PatternVector& b) {
  int j = first_tight_position(b);
  return j < 0 ? 0 : static_cast<int>(b.size()) - j;
}

bool in_xi(const PatternVector& b) { return !b.empty() && apex_of(b) > 0; }

namespace {

// Shared recursive generator. The prefix-sum bound shapes the tree; `mode`
// decides what gets emitted. Children are visited with larger entries first
// so output is lexicographically descending without a sort.
struct Generator {
  int k;
  PatternVector cur;
  std::vector<PatternVector>* out;

  void hat(int j, int s) {
    if (j == k) {
      if (s >= 1) out->push_back(cur);
      return;
    }
    for (int b = j + 1 - s; b >= 0; --b) {
      cur[j] = b;
      hat(j + 1, s + b);
    }
    cur[j] = 0;
  }

  // Minimal vectors only: once the prefix sum hits j+1 the tail is forced to
  // zero, so emit and stop descending. Branches that finish strictly below
  // are not minimal and produce nothing.
  void xi(int j, int s) {
    if (j == k) return;
    for (int b = j + 1 - s; b >= 0; --b) {
      cur[j] = b;
      if (s + b == j + 1) {
        std::fill(cur.begin() + j + 1, cur.end(), 0);
        out->push_back(cur);
      } else {
        xi(j + 1, s + b);
      }
    }
    cur[j] = 0;
  }

  void xi_plus(int j, int s) {
    if (j == k) {
      if (s == k) out->push_back(cur);
      return;
    }
    for (int b = j + 1 - s; b >= 0; --b) {
      cur[j] = b;
      xi_plus(j + 1, s + b);
    }
    cur[j] = 0;
  }
};

}  // namespace

PatternSet enumerate_xi_hat(int k) {
  check_order(k);
  PatternSet set{k, PatternKind::hat, {}};
  Generator g{k, PatternVector(static_cast<size_t>(k), 0), &set.vectors};
  g.hat(0, 0);
  return set;
}

PatternSet enumerate_xi(int k) {
  check_order(k);
  PatternSet set{k, PatternKind::xi, {}};
  Generator g{k, PatternVector(static_cast<size_t>(k), 0), &set.vectors};
  g.xi(0, 0);
  return set;
}

PatternSet enumerate_xi_reference(int k) {
  check_order(k);
  PatternSet hat = enumerate_xi_hat(k);
  PatternSet set{k, PatternKind::xi, {}};
  for (const PatternVector& b : hat.vectors) {
    bool minimal = true;
    for (size_t off = 1; off < b.size() && minimal; ++off) {
      PatternVector suffix(b.begin() + static_cast<long>(off), b.end());
      if (in_xi_hat(suffix)) minimal = false;
    }
    if (minimal) set.vectors.push_back(b);
  }
  return set;
}

PatternSet enumerate_xi_plus(int k) {
  check_order(k);
  PatternSet set{k, PatternKind::xi_plus, {}};
  Generator g{k, PatternVector(static_cast<size_t>(k), 0), &set.vectors};
  g.xi_plus(0, 0);
  return set;
}

long long xi_count(int k) {
  check_order(k);
  // Walk the slack t_j = (j+1) - prefix_sum_j. A minimal vector is a walk
  // that stays >= 1 and first hits 0 at its tight position; entries below
  // are zero, so each first passage is one vector. alive[c] counts prefixes
  // with slack c; a step may raise slack by at most 1, so the update is a
  // shifted suffix sum and hitting 0 drains the whole tail into the count.
  long long count = 1;  // the unit vector, tight at the first position
  std::vector<long long> alive(static_cast<size_t>(k) + 2, 0);
  alive[1] = 1;
  for (int i = 1; i < k; ++i) {
    long long total = 0;
    for (long long v : alive) total += v;
    count += total;  // every live prefix can drop to slack 0 here
    // next[c] = sum_{c' >= c-1} alive[c'], built from suffix sums
    std::vector<long long> next(alive.size(), 0);
    long long suffix = 0;
    for (int c = static_cast<int>(alive.size()) - 1; c >= 1; --c) {
      suffix += alive[static_cast<size_t>(c) - 1];
      next[static_cast<size_t>(c)] = suffix;
    }
    alive.swap(next);
  }
  return count;
}

std::optional<int> is_winning_pattern(const PatternVector& b) {
  int m = static_cast<int>(b.size());
  for (int k = 1; k <= m; ++k) {
    PatternVector suffix(b.end() - k, b.end());
    if (in_xi(suffix)) return k;
  }
  return std::nullopt;
}

std::vector<int> path_of(const PatternVector& b) {
  int k = static_cast<int>(b.size());
  std::vector<int> c(static_cast<size_t>(k) + 1);
  c[0] = k;
  for (int j = 0; j < k; ++j) {
    if (b[static_cast<size_t>(j)] < 0) throw std::invalid_argument("negative pattern entry");
    c[static_cast<size_t>(j) + 1] = c[static_cast<size_t>(j)] - b[static_cast<size_t>(j)];
    if (c[static_cast<size_t>(j) + 1] < k - j - 1)
      throw std::invalid_argument("pattern drops below the vertex diagonal");
  }
  return c;
}

PatternVector vector_of_path(const std::vector<int>& c) {
  if (c.size() < 2) throw std::invalid_argument("path needs at least two vertices");
  int k = static_cast<int>(c.size()) - 1;
  if (c[0] != k) throw std::invalid_argument("path must start at (k,k)");
  PatternVector b(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    int drop = c[static_cast<size_t>(j)] - c[static_cast<size_t>(j) + 1];
    if (drop < 0) throw std::invalid_argument("path values must not increase");
    if (c[static_cast<size_t>(j) + 1] < k - j - 1)
      throw std::invalid_argument("path leaves the vertex set");
    b[static_cast<size_t>(j)] = drop;
  }
  return b;
}

namespace {

void walk_paths(int k, int level, std::vector<int>& c, std::vector<LatticePath>& out) {
  if (level == 0) {
    if (c.back() != 0) return;
    LatticePath p;
    p.c = c;
    p.vec = vector_of_path(c);
    p.first_apex = 0;
    for (int kstar = k; kstar >= 1; --kstar) {
      // c[k - (kstar-1)] is the value at level kstar-1
      if (c[static_cast<size_t>(k - kstar + 1)] == kstar - 1) {
        p.first_apex = kstar;
        break;
      }
    }
    out.push_back(p);
    return;
  }
  int cur = c[static_cast<size_t>(k - level)];
  // next value ranges over [level-1, cur]; larger drops first gives
  // lexicographically descending vectors
  for (int nxt = level - 1; nxt <= cur; ++nxt) {
    c[static_cast<size_t>(k - level) + 1] = nxt;
    walk_paths(k, level - 1, c, out);
  }
}

}  // namespace

LatticePathReport lattice_paths(int k) {
  check_order(k);
  LatticePathReport rep;
  rep.k = k;
  std::vector<int> c(static_cast<size_t>(k) + 1, 0);
  c[0] = k;
  walk_paths(k, k, c, rep.paths);
  PatternSet plus = enumerate_xi_plus(k);
  rep.matches_xi_plus = plus.vectors.size() == rep.paths.size();
  if (rep.matches_xi_plus) {
    for (size_t i = 0; i < plus.vectors.size(); ++i)
      if (plus.vectors[i] != rep.paths[i].vec) {
        rep.matches_xi_plus = false;
        break;
      }
  }
  return rep;
}

std::string pattern_kind_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::hat: return "hat";
    case PatternKind::xi: return "xi";
    case PatternKind::xi_plus: return "xi_plus";
  }
  return "?";
}

}  // namespace odds
