#include "kacward/paths.hpp"

#include "kacward/hightemp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace kacward {

namespace {

struct Vec {
  int x{};
  int y{};
};

Vec step_vector(const Lattice& lattice, const Step& s) {
  const Bond& b = lattice.bond(s.bond);
  if (b.horizontal) return {s.dir, 0};
  return {0, s.dir};
}

Site step_start(const Lattice& lattice, const Step& s) {
  const Bond& b = lattice.bond(s.bond);
  return s.dir > 0 ? b.from : b.to;
}

Site step_end(const Lattice& lattice, const Step& s) {
  const Bond& b = lattice.bond(s.bond);
  return s.dir > 0 ? b.to : b.from;
}

bool is_reversal(const Step& a, const Step& b) {
  return a.bond == b.bond && a.dir == -b.dir;
}

PathWord inverted(const PathWord& word) {
  PathWord inv(word.rbegin(), word.rend());
  for (Step& s : inv) s.dir = -s.dir;
  return inv;
}

PathWord rotated(const PathWord& word, std::size_t offset) {
  PathWord r(word.begin() + static_cast<std::ptrdiff_t>(offset), word.end());
  r.insert(r.end(), word.begin(),
           word.begin() + static_cast<std::ptrdiff_t>(offset));
  return r;
}

// Net quarter-turn count (left minus right) around the closed word,
// including the wrap-around turn. Always a multiple of 4.
int quarter_turns(const Lattice& lattice, const PathWord& word) {
  int turns = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Vec a = step_vector(lattice, word[i]);
    const Vec b = step_vector(lattice, word[(i + 1) % word.size()]);
    turns += a.x * b.y - a.y * b.x;
  }
  return turns;
}

int sign_from_quarter_turns(int turns) {
  if (turns % 4 != 0) {
    throw std::logic_error("closed word accumulated a non-real phase");
  }
  // phase alpha^turns is (-1)^(turns/4); the sign flips it once more.
  return (turns / 4) % 2 == 0 ? -1 : +1;
}

}  // namespace

void validate_word(const Lattice& lattice, const PathWord& word) {
  if (word.size() < 4) {
    throw std::invalid_argument("closed non-backtracking words have length >= 4");
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Step& cur = word[i];
    const Step& next = word[(i + 1) % word.size()];
    if (cur.bond < 0 || cur.bond >= lattice.bond_count()) {
      throw std::invalid_argument("bond id out of range");
    }
    if (cur.dir != 1 && cur.dir != -1) {
      throw std::invalid_argument("step direction must be +1 or -1");
    }
    const Site end = step_end(lattice, cur);
    const Site start = step_start(lattice, next);
    if (end.x != start.x || end.y != start.y) {
      throw std::invalid_argument("word does not chain head-to-tail");
    }
    if (is_reversal(cur, next)) {
      throw std::invalid_argument("word backtracks");
    }
  }
}

PathWord canonical_form(const Lattice& lattice, const PathWord& word) {
  validate_word(lattice, word);
  PathWord best = word;
  const PathWord inv = inverted(word);
  for (std::size_t r = 0; r < word.size(); ++r) {
    best = std::min(best, rotated(word, r));
    best = std::min(best, rotated(inv, r));
  }
  return best;
}

int word_period(const PathWord& word) {
  const std::size_t l = word.size();
  for (std::size_t d = 1; d <= l / 2; ++d) {
    if (l % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = 0; i < l && repeats; ++i) {
      repeats = word[i] == word[(i + d) % l];
    }
    if (repeats) return static_cast<int>(l / d);
  }
  return 1;
}

int word_sign(const Lattice& lattice, const PathWord& word) {
  validate_word(lattice, word);
  return sign_from_quarter_turns(quarter_turns(lattice, word));
}

namespace {

struct ClassAccumulator {
  std::map<PathWord, int> nonperiodic;  // canonical word -> rooted hit count
  std::map<PathWord, std::pair<int, int>> periodic;  // -> {count, period}
};

void dfs_closed(const Lattice& lattice, Site origin, Site pos, PathWord& word,
                int max_len, ClassAccumulator& acc) {
  if (pos.x == origin.x && pos.y == origin.y && word.size() >= 4 &&
      !is_reversal(word.back(), word.front())) {
    const int w = word_period(word);
    const PathWord canon = canonical_form(lattice, word);
    if (w == 1) {
      ++acc.nonperiodic[canon];
    } else {
      auto& entry = acc.periodic[canon];
      ++entry.first;
      entry.second = w;
    }
  }
  if (static_cast<int>(word.size()) == max_len) return;

  static constexpr std::array<Vec, 4> kDirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  for (const Vec& d : kDirs) {
    int dir = 0;
    const int bond = lattice.bond_towards(pos.x, pos.y, d.x, d.y, dir);
    if (bond < 0) continue;
    const Step next{bond, dir};
    if (!word.empty() && is_reversal(word.back(), next)) continue;
    word.push_back(next);
    dfs_closed(lattice, origin, {pos.x + d.x, pos.y + d.y}, word, max_len, acc);
    word.pop_back();
  }
}

}  // namespace

std::vector<PathClass> enumerate_closed_classes(const Lattice& lattice,
                                                int max_len) {
  if (max_len > 24) {
    throw IntractableSizeError("intractable size: closed-walk search to length " +
                               std::to_string(max_len));
  }
  ClassAccumulator acc;
  const int n = lattice.side();
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      PathWord word;
      dfs_closed(lattice, {x, y}, {x, y}, word, max_len, acc);
    }
  }

  std::vector<PathClass> classes;
  classes.reserve(acc.nonperiodic.size());
  for (const auto& [canon, count] : acc.nonperiodic) {
    const int l = static_cast<int>(canon.size());
    if (count != 2 * l) {
      throw std::logic_error("nonperiodic class hit " + std::to_string(count) +
                             " times, expected " + std::to_string(2 * l));
    }
    classes.push_back({canon, l, 1, word_sign(lattice, canon)});
  }
  for (const auto& [canon, entry] : acc.periodic) {
    const int l = static_cast<int>(canon.size());
    const int w = entry.second;
    if (entry.first * w != 2 * l) {
      throw std::logic_error("periodic class hit count inconsistent");
    }
  }
  return classes;
}

IntPolynomial path_product_polynomial(const Lattice& lattice, int max_order) {
  IntPolynomial product = IntPolynomial::one();
  for (const PathClass& cls : enumerate_closed_classes(lattice, max_order)) {
    const IntPolynomial factor =
        IntPolynomial::add(IntPolynomial::one(),
                           IntPolynomial::monomial(cls.length, cls.sign));
    product = IntPolynomial::mul_truncated(product, factor, max_order);
  }
  return product;
}

IdentityReport feynman_identity_check(const Lattice& lattice, int max_order) {
  const IntPolynomial graphs =
      graph_generating_polynomial(lattice).truncated(max_order);
  const IntPolynomial product = path_product_polynomial(lattice, max_order);

  IdentityReport report;
  report.all_match = true;
  for (int k = 0; k <= max_order; ++k) {
    IdentityOrder row;
    row.order = k;
    row.graph_coeff = graphs.coeff(k);
    row.product_coeff = product.coeff(k);
    row.match = row.graph_coeff == row.product_coeff;
    report.all_match = report.all_match && row.match;
    report.orders.push_back(row);
  }
  return report;
}

double partition_product_truncated(const Lattice& lattice, double coupling_k,
                                   int max_len) {
  const int n = lattice.side();
  const double u = std::tanh(coupling_k);
  double product = 1.0;
  for (const PathClass& cls : enumerate_closed_classes(lattice, max_len)) {
    product *= 1.0 + cls.sign * std::pow(u, cls.length);
  }
  return std::pow(2.0, n * n) * std::pow(1.0 - u * u, -(n * (n - 1))) * product;
}

namespace {

constexpr std::array<Vec, 4> kPlaneDirs{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

int opposite(int dir) { return (dir + 2) % 4; }

void dfs_plane(int x, int y, std::vector<int>& dirs, int target_len,
               std::int64_t& signed_sum) {
  if (static_cast<int>(dirs.size()) == target_len) {
    if (x != 0 || y != 0) return;
    if (dirs.back() == opposite(dirs.front())) return;  // wrap backtrack
    int turns = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const Vec a = kPlaneDirs[static_cast<std::size_t>(dirs[i])];
      const Vec b = kPlaneDirs[static_cast<std::size_t>(dirs[(i + 1) % dirs.size()])];
      turns += a.x * b.y - a.y * b.x;
    }
    signed_sum += sign_from_quarter_turns(turns);
    return;
  }
  // prune: remaining steps must be able to reach the origin
  const int remaining = target_len - static_cast<int>(dirs.size());
  if (std::abs(x) + std::abs(y) > remaining) return;
  for (int d = 0; d < 4; ++d) {
    if (!dirs.empty() && d == opposite(dirs.back())) continue;
    dirs.push_back(d);
    dfs_plane(x + kPlaneDirs[static_cast<std::size_t>(d)].x,
              y + kPlaneDirs[static_cast<std::size_t>(d)].y, dirs, target_len,
              signed_sum);
    dirs.pop_back();
  }
}

}  // namespace

std::int64_t base_point_signed_walk_sum(int n) {
  if (n < 1) throw std::invalid_argument("walk length must be positive");
  if (n > 20) {
    throw IntractableSizeError("intractable size: free-plane walk length " +
                               std::to_string(n));
  }
  std::int64_t sum = 0;
  std::vector<int> dirs;
  dfs_plane(0, 0, dirs, n, sum);
  if (sum % 2 != 0) {
    throw std::logic_error("base-point signed walk sum must be even");
  }
  return sum;
}

double base_point_amplitude(int n, double u) {
  return 0.5 * static_cast<double>(base_point_signed_walk_sum(n)) *
         std::pow(u, n);
}

}  // namespace kacward
