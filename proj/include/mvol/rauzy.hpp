#pragma once

#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mvol/genperm.hpp"

namespace mvol {

enum class MoveKind { TopRight = 0, BottomRight = 1, TopLeft = 2, BottomLeft = 3 };

constexpr std::array<MoveKind, 4> kAllMoves = {MoveKind::TopRight, MoveKind::BottomRight,
                                               MoveKind::TopLeft, MoveKind::BottomLeft};

namespace detail {

// Right induction. For generalized permutations the loser is reinserted next
// to the other occurrence of the winner: to its right when that occurrence is
// on the opposite row (the classical rule), to its left when the winner is
// doubled on its own row (the identification there reverses orientation).
inline std::optional<GeneralizedPermutation> rauzy_right(const GeneralizedPermutation& p, bool top_wins) {
  std::vector<int> win_row = top_wins ? p.top : p.bottom;
  std::vector<int> lose_row = top_wins ? p.bottom : p.top;
  if (win_row.empty() || lose_row.empty()) return std::nullopt;
  int winner = win_row.back();
  int loser = lose_row.back();
  if (winner == loser) return std::nullopt;
  lose_row.pop_back();

  // locate the other occurrence of the winner
  int win_pos = -1, lose_pos = -1;
  for (size_t i = 0; i + 1 < win_row.size(); ++i)
    if (win_row[i] == winner) win_pos = static_cast<int>(i);
  for (size_t i = 0; i < lose_row.size(); ++i)
    if (lose_row[i] == winner) lose_pos = static_cast<int>(i);

  if (lose_pos >= 0) {
    lose_row.insert(lose_row.begin() + lose_pos + 1, loser);
  } else if (win_pos >= 0) {
    win_row.insert(win_row.begin() + win_pos, loser);
  } else {
    return std::nullopt;
  }

  GeneralizedPermutation q;
  q.top = top_wins ? win_row : lose_row;
  q.bottom = top_wins ? lose_row : win_row;
  if (!q.is_valid()) return std::nullopt;
  return q.canonicalized();
}

inline GeneralizedPermutation reversed_rows(const GeneralizedPermutation& p) {
  GeneralizedPermutation q = p;
  std::reverse(q.top.begin(), q.top.end());
  std::reverse(q.bottom.begin(), q.bottom.end());
  return q;
}

}  // namespace detail

// Applies one Rauzy induction step; nullopt when the move is undefined.
inline std::optional<GeneralizedPermutation> rauzy_move(const GeneralizedPermutation& p, MoveKind kind) {
  switch (kind) {
    case MoveKind::TopRight: return detail::rauzy_right(p, true);
    case MoveKind::BottomRight: return detail::rauzy_right(p, false);
    case MoveKind::TopLeft:
    case MoveKind::BottomLeft: {
      auto r = detail::rauzy_right(detail::reversed_rows(p), kind == MoveKind::TopLeft);
      if (!r) return std::nullopt;
      return detail::reversed_rows(*r).canonicalized();
    }
  }
  return std::nullopt;
}

struct RauzyClass {
  std::vector<GeneralizedPermutation> members;   // sorted lexicographically
  std::vector<std::array<int, 4>> moves;         // neighbor index per MoveKind, -1 if undefined/disabled
  bool use_left = false;
  bool use_right = true;

  size_t size() const { return members.size(); }
  int index_of(const GeneralizedPermutation& p) const {
    auto it = std::lower_bound(members.begin(), members.end(), p);
    if (it == members.end() || !(*it == p)) return -1;
    return static_cast<int>(it - members.begin());
  }
};

// Breadth-first closure of the seed under the enabled induction moves.
inline RauzyClass rauzy_class(const GeneralizedPermutation& seed, bool use_left, bool use_right,
                              size_t max_members = 10'000'000) {
  if (!seed.is_valid()) throw std::invalid_argument("rauzy_class: invalid seed");
  if (seed.is_ordinary() && !seed.is_irreducible())
    throw std::invalid_argument("rauzy_class: reducible seed");
  GeneralizedPermutation start = seed.canonicalized();
  std::unordered_map<std::string, int> index;
  std::vector<GeneralizedPermutation> order;
  std::deque<int> queue;
  index.emplace(start.encode(), 0);
  order.push_back(start);
  queue.push_back(0);
  std::vector<std::array<int, 4>> edges;
  edges.push_back({-1, -1, -1, -1});
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    GeneralizedPermutation p = order[cur];
    for (MoveKind kind : kAllMoves) {
      bool enabled = (kind == MoveKind::TopRight || kind == MoveKind::BottomRight) ? use_right : use_left;
      if (!enabled) continue;
      auto q = rauzy_move(p, kind);
      if (!q) continue;
      auto [it, inserted] = index.emplace(q->encode(), static_cast<int>(order.size()));
      if (inserted) {
        if (order.size() >= max_members)
          throw ResourceLimitError("rauzy_class: member cap exceeded");
        order.push_back(*q);
        edges.push_back({-1, -1, -1, -1});
        queue.push_back(it->second);
      }
      edges[cur][static_cast<int>(kind)] = it->second;
    }
  }
  // deterministic ordering: lexicographic on the two-row encoding
  std::vector<int> perm(order.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return order[a] < order[b]; });
  std::vector<int> rank(order.size());
  for (size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<int>(i);
  RauzyClass c;
  c.use_left = use_left;
  c.use_right = use_right;
  c.members.resize(order.size());
  c.moves.resize(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    c.members[rank[i]] = std::move(order[i]);
    for (int k = 0; k < 4; ++k)
      c.moves[rank[i]][k] = edges[i][k] < 0 ? -1 : rank[edges[i][k]];
  }
  return c;
}

inline std::vector<GeneralizedPermutation> standard_members(const RauzyClass& c) {
  std::vector<GeneralizedPermutation> out;
  for (const auto& p : c.members)
    if (p.is_standard()) out.push_back(p);
  return out;
}

// Singularity data of the suspensions over p: walk the Rauzy dynamics until a
// standard permutation is reached and read the diagram there.
inline StratumSignature stratum_of(const GeneralizedPermutation& p, size_t max_members = 10'000'000) {
  if (!p.is_valid()) throw std::invalid_argument("stratum_of: invalid permutation");
  if (p.is_ordinary() && !p.is_irreducible())
    throw std::invalid_argument("stratum_of: reducible permutation");
  GeneralizedPermutation start = p.canonicalized();
  if (start.is_standard()) return stratum_of_standard(start);
  std::unordered_map<std::string, bool> seen;
  std::deque<GeneralizedPermutation> queue;
  seen.emplace(start.encode(), true);
  queue.push_back(start);
  while (!queue.empty()) {
    GeneralizedPermutation cur = std::move(queue.front());
    queue.pop_front();
    for (MoveKind kind : kAllMoves) {
      auto q = rauzy_move(cur, kind);
      if (!q) continue;
      if (q->is_standard()) return stratum_of_standard(*q);
      auto [it, inserted] = seen.emplace(q->encode(), true);
      if (inserted) {
        if (seen.size() >= max_members)
          throw ResourceLimitError("stratum_of: search cap exceeded");
        queue.push_back(*q);
      }
    }
  }
  throw std::runtime_error("stratum_of: no standard permutation reachable");
}

}  // namespace mvol
