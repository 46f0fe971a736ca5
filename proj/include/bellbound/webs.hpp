#pragma once

// Web graphs W_p^r, their antiwebs, cuts, and the clique-web inequality.
// Vertices are 0-based.

#include <bellbound/errors.hpp>
#include <bellbound/inequality.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bellbound {

struct WebSpec {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t r = 0;

  // q >= 2 and p - q = 2r + 1
  void validate() const {
    if (q < 2) throw ParameterError("web spec requires q >= 2");
    if (p != q + 2 * r + 1)
      throw ParameterError("web spec requires p - q = 2r + 1 (got p=" + std::to_string(p) +
                           ", q=" + std::to_string(q) + ", r=" + std::to_string(r) + ")");
  }

  static WebSpec from_pr(std::size_t p, std::size_t r) {
    if (p < 2 * r + 1) throw ParameterError("web spec requires p > 2r");
    WebSpec spec{p, p - 2 * r - 1, r};
    spec.validate();
    return spec;
  }

  friend bool operator==(const WebSpec&, const WebSpec&) = default;
};

/// Undirected simple graph on n vertices; edges kept as sorted (i < j) pairs.
class EdgeSet {
public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t n) : n_(n) {}

  EdgeSet& insert(std::size_t i, std::size_t j) {
    if (i == j) throw ParameterError("edge set: self-loop");
    if (i >= n_ || j >= n_) throw ParameterError("edge set: vertex out of range");
    edges_.insert({std::min(i, j), std::max(i, j)});
    return *this;
  }

  bool contains(std::size_t i, std::size_t j) const {
    return edges_.count({std::min(i, j), std::max(i, j)}) != 0;
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::set<IndexPair>& edges() const noexcept { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
  std::size_t n_ = 0;
  std::set<IndexPair> edges_;
};

inline EdgeSet complete_graph(std::size_t n) {
  EdgeSet k(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) k.insert(i, j);
  return k;
}

/// Edges {i, i+r+1}, ..., {i, i+r+q} (mod p).
inline EdgeSet web_edges(const WebSpec& spec) {
  spec.validate();
  EdgeSet web(spec.p);
  for (std::size_t i = 0; i < spec.p; ++i)
    for (std::size_t offset = spec.r + 1; offset <= spec.r + spec.q; ++offset)
      web.insert(i, (i + offset) % spec.p);
  return web;
}

/// Complement of the web in K_p.
inline EdgeSet antiweb_edges(const WebSpec& spec) {
  const EdgeSet web = web_edges(spec);
  EdgeSet anti(spec.p);
  for (std::size_t i = 0; i < spec.p; ++i)
    for (std::size_t j = i + 1; j < spec.p; ++j)
      if (!web.contains(i, j)) anti.insert(i, j);
  return anti;
}

/// delta(S): pairs with exactly one endpoint in S.
inline EdgeSet cut_edges(std::size_t n, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(n, false);
  for (auto v : subset) {
    if (v >= n) throw ParameterError("cut_edges: vertex out of range");
    in[v] = true;
  }
  EdgeSet cut(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (in[i] != in[j]) cut.insert(i, j);
  return cut;
}

struct AlonTheoremReport {
  WebSpec spec;
  std::uint64_t subsets_checked = 0;
  std::uint64_t small_equalities = 0;   // s <= r with |delta(S) & AW| = s(2r+1-s)
  std::uint64_t large_equalities = 0;   // r+1 <= s <= p/2 with |delta(S) & AW| = r(r+1)
  std::uint64_t violations = 0;
  std::vector<std::vector<std::size_t>> violating_subsets;  // first few, for diagnostics
};

namespace detail {

inline bool is_circular_interval(std::uint32_t mask, std::size_t p) {
  const int s = std::popcount(mask);
  if (s == 0 || static_cast<std::size_t>(s) == p) return true;
  // An interval has exactly one position where membership switches on going round the cycle.
  int starts = 0;
  for (std::size_t i = 0; i < p; ++i) {
    const bool here = (mask >> i) & 1U;
    const bool prev = (mask >> ((i + p - 1) % p)) & 1U;
    if (here && !prev) ++starts;
  }
  return starts == 1;
}

}  // namespace detail

/**
 * Exhaustively checks Alon's description of cut sizes in the antiweb AW_p^r
 * for every nonempty S with |S| <= p/2:
 *  - |S| = s <= r: |delta(S) & AW| >= s(2r+1-s), equality iff S is a clique of AW;
 *  - r+1 <= s <= p/2: |delta(S) & AW| >= r(r+1), equality iff S is a circular interval.
 */
inline AlonTheoremReport verify_alon_theorem(const WebSpec& spec, std::size_t guard = 20) {
  spec.validate();
  if (spec.r < 1) throw ParameterError("verify_alon_theorem requires r >= 1");
  if (spec.p < 2 * spec.r + 3) throw ParameterError("verify_alon_theorem requires p >= 2r+3");
  if (spec.p > guard || spec.p > 30)
    throw ResourceLimitError("verify_alon_theorem: p exceeds subset enumeration guard");

  const std::size_t p = spec.p;
  const std::size_t r = spec.r;
  const EdgeSet anti = antiweb_edges(spec);
  std::vector<std::uint32_t> neighbours(p, 0);
  for (const auto& [i, j] : anti) {
    neighbours[i] |= 1U << j;
    neighbours[j] |= 1U << i;
  }

  AlonTheoremReport report;
  report.spec = spec;
  const std::uint32_t limit = 1U << p;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const std::size_t s = static_cast<std::size_t>(std::popcount(mask));
    if (2 * s > p) continue;
    ++report.subsets_checked;

    std::size_t crossing = 0;
    bool clique = true;
    for (std::size_t v = 0; v < p; ++v) {
      if (!((mask >> v) & 1U)) continue;
      crossing += static_cast<std::size_t>(std::popcount(neighbours[v] & ~mask));
      const std::uint32_t others = mask & ~(1U << v);
      if ((neighbours[v] & others) != others) clique = false;
    }

    bool ok;
    if (s <= r) {
      const std::size_t bound = s * (2 * r + 1 - s);
      const bool equal = crossing == bound;
      ok = crossing >= bound && equal == clique;
      if (ok && equal) ++report.small_equalities;
    } else {
      const std::size_t bound = r * (r + 1);
      const bool equal = crossing == bound;
      ok = crossing >= bound && equal == detail::is_circular_interval(mask, p);
      if (ok && equal) ++report.large_equalities;
    }
    if (!ok) {
      ++report.violations;
      if (report.violating_subsets.size() < 8) {
        std::vector<std::size_t> subset;
        for (std::size_t v = 0; v < p; ++v)
          if ((mask >> v) & 1U) subset.push_back(v);
        report.violating_subsets.push_back(std::move(subset));
      }
    }
  }
  return report;
}

/**
 * @brief Clique-web Bell inequality on p + q variables (X block, then Z block):
 *
 *   sum_{i,j} X_i Z_j - sum_{web} X_i X_j - sum_{i<j} Z_i Z_j <= q(r+1)
 */
inline PairwiseInequality clique_web_inequality(const WebSpec& spec) {
  spec.validate();
  const std::size_t p = spec.p;
  const std::size_t q = spec.q;
  auto ineq = PairwiseInequality::complete(p + q, static_cast<double>(q * (spec.r + 1)));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) ineq.set(i, p + j, 1.0);
  for (const auto& [i, j] : web_edges(spec)) ineq.set(i, j, -1.0);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j) ineq.set(p + i, p + j, -1.0);
  return ineq;
}

/// The same family written directly over cut variables (a block, then b block):
///   sum_{web} a_i^a_j + sum_{i<j} b_i^b_j - sum_{i,j} a_i^b_j <= 0
inline CutInequality clique_web_cut_inequality(const WebSpec& spec) {
  spec.validate();
  const std::size_t p = spec.p;
  const std::size_t q = spec.q;
  CutInequality cut;
  cut.n = p + q;
  cut.rhs = 0.0;
  for (const auto& edge : web_edges(spec)) cut.coefficients[edge] = 1.0;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j) cut.coefficients[{p + i, p + j}] = 1.0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) cut.coefficients[{i, p + j}] = -1.0;
  return cut;
}

}  // namespace bellbound
