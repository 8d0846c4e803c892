// Copyright 2026 The degseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEGSEQ_MATCHING_HPP
#define DEGSEQ_MATCHING_HPP

// Exact minimum-cost perfect matching on general graphs.
//
// The solver is the O(n^3) primal-dual blossom algorithm of Edmonds in the
// formulation of Galil ("Efficient algorithms for finding maximum matching in
// graphs", 1986), run in maximum-cardinality mode. Costs are mapped to
// strictly positive weights w(e) = max_cost - c(e) + 1. All perfect matchings
// have |V|/2 edges, so a maximum-weight maximum-cardinality matching that is
// perfect is a minimum-cost perfect matching, and if the maximum cardinality
// is below |V|/2 there is no perfect matching at all. Dual variables are kept
// doubled so everything stays in integers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/graph.hpp"

namespace degseq {

/// A graph with an integer cost on each edge; cost[k] belongs to graph.edges()[k].
struct CostedGraph {
  Graph graph;
  std::vector<std::int64_t> cost;

  CostedGraph() = default;
  CostedGraph(Graph g, std::vector<std::int64_t> c) : graph(std::move(g)), cost(std::move(c)) {
    if (cost.size() != graph.edge_count())
      throw InputError("cost vector has " + std::to_string(cost.size()) + " entries for " +
                       std::to_string(graph.edge_count()) + " edges");
  }

  std::optional<std::int64_t> cost_of(const Edge& e) const {
    auto idx = graph.edge_index(e);
    if (!idx) return std::nullopt;
    return cost[*idx];
  }
};

struct PerfectMatching {
  EdgeSet edges;
  std::int64_t total_cost = 0;
};

namespace detail {

class BlossomMatcher {
 public:
  // edges: (i, j, weight) with 0-based endpoints.
  struct WeightedEdge {
    int i;
    int j;
    std::int64_t w;
  };

  BlossomMatcher(int nvertex, std::vector<WeightedEdge> edges)
      : nvertex_(nvertex), edges_(std::move(edges)) {}

  /// Returns mate[v] (0-based, -1 when unmatched).
  std::vector<int> solve() {
    const int n = nvertex_;
    const int nedge = static_cast<int>(edges_.size());
    if (n == 0) return {};
    std::int64_t maxweight = 0;
    for (const auto& e : edges_) maxweight = std::max(maxweight, e.w);

    endpoint_.resize(2 * static_cast<std::size_t>(nedge));
    for (int p = 0; p < 2 * nedge; ++p)
      endpoint_[p] = (p % 2 == 0) ? edges_[p / 2].i : edges_[p / 2].j;
    neighbend_.assign(n, {});
    for (int k = 0; k < nedge; ++k) {
      neighbend_[edges_[k].i].push_back(2 * k + 1);
      neighbend_[edges_[k].j].push_back(2 * k);
    }
    mate_.assign(n, -1);
    label_.assign(2 * n, 0);
    labelend_.assign(2 * n, -1);
    inblossom_.resize(n);
    for (int v = 0; v < n; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n, -1);
    blossomchilds_.assign(2 * n, {});
    blossombase_.assign(2 * n, -1);
    for (int v = 0; v < n; ++v) blossombase_[v] = v;
    blossomendps_.assign(2 * n, {});
    bestedge_.assign(2 * n, -1);
    blossombestedges_.assign(2 * n, {});
    has_bestedges_.assign(2 * n, 0);
    unusedblossoms_.clear();
    for (int b = n; b < 2 * n; ++b) unusedblossoms_.push_back(b);
    dualvar_.assign(2 * n, 0);
    for (int v = 0; v < n; ++v) dualvar_[v] = maxweight;
    allowedge_.assign(nedge, 0);

    for (int stage = 0; stage < n; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n; b < 2 * n; ++b) {
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();
      for (int v = 0; v < n; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

      bool augmented = false;
      for (;;) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            std::int64_t kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = 1;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        // Dual update. Maximum-cardinality mode: no type-1 delta unless
        // nothing else applies.
        int deltatype = -1;
        std::int64_t delta = 0;
        int deltaedge = -1;
        int deltablossom = -1;
        for (int v = 0; v < n; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            std::int64_t d = slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * n; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            std::int64_t kslack = slack(bestedge_[b]);
            if (kslack % 2 != 0) throw InternalError("odd slack between S-blossoms");
            std::int64_t d = kslack / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = n; b < 2 * n; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          deltatype = 1;
          std::int64_t mn = dualvar_[0];
          for (int v = 1; v < n; ++v) mn = std::min(mn, dualvar_[v]);
          delta = std::max<std::int64_t>(0, mn);
        }

        for (int v = 0; v < n; ++v) {
          if (label_[inblossom_[v]] == 1) {
            dualvar_[v] -= delta;
          } else if (label_[inblossom_[v]] == 2) {
            dualvar_[v] += delta;
          }
        }
        for (int b = n; b < 2 * n; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) {
              dualvar_[b] += delta;
            } else if (label_[b] == 2) {
              dualvar_[b] -= delta;
            }
          }
        }

        if (deltatype == 1) {
          break;
        } else if (deltatype == 2) {
          allowedge_[deltaedge] = 1;
          int i = edges_[deltaedge].i;
          int j = edges_[deltaedge].j;
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = 1;
          queue_.push_back(edges_[deltaedge].i);
        } else {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;

      for (int b = n; b < 2 * n; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
            dualvar_[b] == 0)
          expand_blossom(b, true);
      }
    }

    std::vector<int> result(n, -1);
    for (int v = 0; v < n; ++v)
      if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
    return result;
  }

 private:
  std::int64_t slack(int k) const {
    return dualvar_[edges_[k].i] + dualvar_[edges_[k].j] - 2 * edges_[k].w;
  }

  void blossom_leaves(int b, std::vector<int>& out) const {
    if (b < nvertex_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) blossom_leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    blossom_leaves(b, out);
    return out;
  }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      blossom_leaves(b, queue_);
    } else if (t == 2) {
      int base = blossombase_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  // Trace back from v and w to find a new blossom base or an augmenting path.
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].i;
    int w = edges_[k].j;
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<int>& path = blossomchilds_[b];
    std::vector<int>& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int leaf : leaves(b)) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }

    std::vector<int> bestedgeto(2 * static_cast<std::size_t>(nvertex_), -1);
    for (int sub : path) {
      std::vector<int> candidates;
      if (!has_bestedges_[sub]) {
        for (int leaf : leaves(sub))
          for (int p : neighbend_[leaf]) candidates.push_back(p / 2);
      } else {
        candidates = blossombestedges_[sub];
      }
      for (int kk : candidates) {
        int i = edges_[kk].i;
        int j = edges_[kk].j;
        if (inblossom_[j] == b) std::swap(i, j);
        int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 &&
            (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
          bestedgeto[bj] = kk;
      }
      blossombestedges_[sub].clear();
      has_bestedges_[sub] = 0;
      bestedge_[sub] = -1;
    }
    blossombestedges_[b].clear();
    for (int kk : bestedgeto)
      if (kk != -1) blossombestedges_[b].push_back(kk);
    has_bestedges_[b] = 1;
    bestedge_[b] = -1;
    for (int kk : blossombestedges_[b])
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }

  void expand_blossom(int b, bool endstage) {
    // Copy: recursive expansion mutates blossomchilds_ of sub-blossoms only,
    // but keep this loop independent of later edits to b.
    const std::vector<int> childs = blossomchilds_[b];
    for (int s : childs) {
      blossomparent_[s] = -1;
      if (s < nvertex_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int leaf : leaves(s)) inblossom_[leaf] = s;
      }
    }

    if (!endstage && label_[b] == 2) {
      const std::vector<int>& ch = blossomchilds_[b];
      const std::vector<int>& ep = blossomendps_[b];
      const int len = static_cast<int>(ch.size());
      auto at = [len](const std::vector<int>& vec, int idx) {
        return vec[static_cast<std::size_t>(((idx % len) + len) % len)];
      };
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[at(ep, j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[at(ep, j - endptrick) / 2] = 1;
        j += jstep;
        p = at(ep, j - endptrick) ^ endptrick;
        allowedge_[p / 2] = 1;
        j += jstep;
      }
      int bv = at(ch, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (at(ch, j) != entrychild) {
        bv = at(ch, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int found = -1;
        for (int leaf : leaves(bv)) {
          if (label_[leaf] != 0) {
            found = leaf;
            break;
          }
        }
        if (found != -1) {
          label_[found] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(found, 2, labelend_[found]);
        }
        j += jstep;
      }
    }

    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = 0;
    bestedge_[b] = -1;
    unusedblossoms_.push_back(b);
  }

  // Swap matched/unmatched edges over an alternating path through blossom b
  // between vertex v and the base vertex.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nvertex_) augment_blossom(t, v);
    std::vector<int>& ch = blossomchilds_[b];
    std::vector<int>& ep = blossomendps_[b];
    const int len = static_cast<int>(ch.size());
    auto at = [len](const std::vector<int>& vec, int idx) {
      return vec[static_cast<std::size_t>(((idx % len) + len) % len)];
    };
    int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = at(ch, j);
      int p = at(ep, j - endptrick) ^ endptrick;
      if (t >= nvertex_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = at(ch, j);
      if (t >= nvertex_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    blossombase_[b] = blossombase_[ch[0]];
  }

  void augment_matching(int k) {
    const std::pair<int, int> sides[2] = {{edges_[k].i, 2 * k + 1}, {edges_[k].j, 2 * k}};
    for (auto [s, p] : sides) {
      for (;;) {
        int bs = inblossom_[s];
        if (bs >= nvertex_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= nvertex_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int nvertex_;
  std::vector<WeightedEdge> edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<std::int64_t> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

inline std::int64_t matching_cost(const CostedGraph& cg, const EdgeSet& edges) {
  std::int64_t total = 0;
  for (const Edge& e : edges) total = checked_add(total, *cg.cost_of(e));
  return total;
}

}  // namespace detail

/// Minimum-cost perfect matching, or std::nullopt when none exists.
/// Costs may be negative. Deterministic for a given input.
inline std::optional<PerfectMatching> min_cost_perfect_matching(const CostedGraph& cg) {
  const int n = cg.graph.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  if (n == 0) return PerfectMatching{};
  auto edges = cg.graph.edges();
  if (edges.empty()) return std::nullopt;

  std::int64_t max_cost = *std::max_element(cg.cost.begin(), cg.cost.end());
  std::int64_t min_cost = *std::min_element(cg.cost.begin(), cg.cost.end());
  // Doubled duals must not overflow; keep the weight range well inside int64.
  constexpr std::int64_t kWeightLimit = std::int64_t{1} << 60;
  std::int64_t top = detail::checked_add(detail::checked_sub(max_cost, min_cost), 1);
  if (top > kWeightLimit) throw OverflowError("edge cost range too large for the matching solver");

  std::vector<detail::BlossomMatcher::WeightedEdge> weighted;
  weighted.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k)
    weighted.push_back({edges[k].u - 1, edges[k].v - 1, max_cost - cg.cost[k] + 1});

  std::vector<int> mate = detail::BlossomMatcher(n, std::move(weighted)).solve();

  PerfectMatching m;
  for (int v = 0; v < n; ++v) {
    if (mate[v] < 0) return std::nullopt;
    if (v < mate[v]) m.edges.emplace_back(v + 1, mate[v] + 1);
  }
  std::sort(m.edges.begin(), m.edges.end());
  m.total_cost = detail::matching_cost(cg, m.edges);
  return m;
}

/// True iff every edge of m exists in cg, every vertex is covered exactly
/// once and total_cost is the correct sum.
inline bool verify_matching(const CostedGraph& cg, const PerfectMatching& m) {
  const int n = cg.graph.vertex_count();
  std::vector<int> cover(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t total = 0;
  for (const Edge& e : m.edges) {
    auto c = cg.cost_of(e);
    if (!c) return false;
    ++cover[e.u];
    ++cover[e.v];
    if (__builtin_add_overflow(total, *c, &total)) return false;
  }
  for (int v = 1; v <= n; ++v)
    if (cover[v] != 1) return false;
  return total == m.total_cost;
}

inline constexpr int kDefaultMatchingOracleLimit = 14;

/// Exhaustive minimum over all perfect matchings; the test oracle for
/// min_cost_perfect_matching. Throws TooLarge above `vertex_limit`.
inline std::optional<PerfectMatching> brute_force_matching(
    const CostedGraph& cg, int vertex_limit = kDefaultMatchingOracleLimit) {
  const int n = cg.graph.vertex_count();
  if (n > vertex_limit)
    throw TooLarge("matching oracle limited to " + std::to_string(vertex_limit) +
                   " vertices, got " + std::to_string(n));
  if (n % 2 != 0) return std::nullopt;

  std::vector<char> matched(static_cast<std::size_t>(n) + 1, 0);
  EdgeSet current;
  std::optional<PerfectMatching> best;
  std::int64_t running = 0;

  // Match the lowest unmatched vertex with each admissible partner in turn.
  auto recurse = [&](auto& self) -> void {
    Vertex low = 1;
    while (low <= n && matched[low]) ++low;
    if (low > n) {
      if (!best || running < best->total_cost) {
        best = PerfectMatching{current, running};
      }
      return;
    }
    matched[low] = 1;
    for (Vertex partner : cg.graph.adjacent(low)) {
      if (matched[partner]) continue;
      Edge e(low, partner);
      std::int64_t c = *cg.cost_of(e);
      matched[partner] = 1;
      current.push_back(e);
      running = detail::checked_add(running, c);
      self(self);
      running -= c;
      current.pop_back();
      matched[partner] = 0;
    }
    matched[low] = 0;
  };
  recurse(recurse);
  if (best) std::sort(best->edges.begin(), best->edges.end());
  return best;
}

}  // namespace degseq

#endif  // DEGSEQ_MATCHING_HPP
