#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance suites.
// The oracles deliberately avoid the library's graph searches and the
// generator-based cohomology route.

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwcoh/examples.hpp"
#include "bwcoh/linalg.hpp"
#include "bwcoh/partition.hpp"
#include "bwcoh/quiver.hpp"
#include "bwcoh/representation.hpp"

namespace bwcoh::testing {

inline VertexId vid(const Quiver& q, const std::string& name) { return q.find_vertex(name).value(); }
inline ArrowId aid(const Quiver& q, const std::string& name) { return q.find_arrow(name).value(); }

inline ArrowSet arrows_named(const Quiver& q, const std::vector<std::string>& names) {
  ArrowSet s = no_arrows(q);
  for (const auto& n : names) s.insert(aid(q, n));
  return s;
}

inline Path path_of(const Quiver& q, const std::vector<std::string>& names) {
  std::vector<ArrowId> ids;
  for (const auto& n : names) ids.push_back(aid(q, n));
  return Path::from_arrows(q, ids);
}

/// Reference partitions of the example families, written out by hand.
inline Partition hand_partition(Family family, int n, const Quiver& q) {
  auto s = [](int i) { return std::to_string(i); };
  Partition p;
  switch (family) {
    case Family::chain:
      for (int i = 1; i < n; ++i) {
        p.a.push_back(vid(q, s(i)));
        p.f.push_back(aid(q, "a" + s(i)));
      }
      p.b.push_back(vid(q, s(n)));
      break;
    case Family::star:
      p.a.push_back(vid(q, "x"));
      for (int i = 1; i <= n; ++i) p.b.push_back(vid(q, s(i)));
      p.f.push_back(aid(q, "a" + s(n)));
      for (int i = 1; i < n; ++i) p.g.push_back(aid(q, "a" + s(i)));
      break;
    case Family::zigzag:
      for (int j = 1; j <= n; ++j) {
        p.a.push_back(vid(q, "x" + s(j)));
        p.b.push_back(vid(q, "y" + s(j)));
        p.f.push_back(aid(q, "a" + s(j)));
        p.g.push_back(aid(q, "b" + s(j)));
      }
      break;
    case Family::cycle:
      for (int j = 1; j < n; ++j) {
        p.a.push_back(vid(q, s(j)));
        p.f.push_back(aid(q, "a" + s(j)));
      }
      p.b.push_back(vid(q, s(n)));
      p.h.push_back(aid(q, "a" + s(n)));
      break;
    case Family::bicycle:
      for (int j = 1; j < n; ++j) {
        p.a.push_back(vid(q, s(j)));
        p.f.push_back(aid(q, "a" + s(j)));
      }
      p.b.push_back(vid(q, s(n)));
      p.g.push_back(aid(q, "b" + s(n)));
      for (int j = 1; j < n; ++j) p.h.push_back(aid(q, "b" + s(j)));
      p.h.push_back(aid(q, "a" + s(n)));
      break;
  }
  return p;
}

/// Every arrow sequence in `s` of length 1..max_len satisfying the path
/// condition, found by extending sequences one arrow at a time.
inline std::vector<std::vector<ArrowId>> brute_paths(const Quiver& q, const ArrowSet& s, std::size_t max_len) {
  std::vector<std::vector<ArrowId>> out;
  std::vector<std::vector<ArrowId>> layer;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (s.contains(a)) layer.push_back({a});
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::vector<ArrowId>> next;
    for (const auto& p : layer)
      for (ArrowId a = 0; a < q.arrow_count(); ++a)
        if (s.contains(a) && q.arrow(p.back()).source == q.arrow(a).target) {
          auto longer = p;
          longer.push_back(a);
          next.push_back(std::move(longer));
        }
    layer = std::move(next);
  }
  return out;
}

inline VertexId seq_source(const Quiver& q, const std::vector<ArrowId>& p) { return q.arrow(p.back()).source; }
inline VertexId seq_target(const Quiver& q, const std::vector<ArrowId>& p) { return q.arrow(p.front()).target; }

/// Acyclicity via Warshall's transitive closure: cyclic iff some vertex
/// reaches itself through at least one arrow.
inline bool brute_is_acyclic(const Quiver& q, const ArrowSet& s) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (s.contains(a)) r[q.arrow(a).source][q.arrow(a).target] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (r[i][i]) return false;
  return true;
}

/// All nonempty paths in s from `from` to `to` of length <= |P| (+ identity).
inline std::vector<std::vector<ArrowId>> brute_paths_between(const Quiver& q, const ArrowSet& s, VertexId from,
                                                             VertexId to) {
  std::vector<std::vector<ArrowId>> out;
  for (auto& p : brute_paths(q, s, q.vertex_count()))
    if (seq_source(q, p) == from && seq_target(q, p) == to) out.push_back(std::move(p));
  return out;
}

/// G-set by enumerating cycles of q1 + q2 + {h} of length <= |P|.
inline ArrowSet brute_gset(const Quiver& q, const ArrowSet& q1, const ArrowSet& q2, ArrowId h) {
  ArrowSet all = q1 | q2;
  all.insert(h);
  ArrowSet out = no_arrows(q);
  for (const auto& p : brute_paths(q, all, q.vertex_count())) {
    if (seq_source(q, p) != seq_target(q, p)) continue;
    bool has_h = false;
    for (auto a : p) has_h |= a == h;
    if (!has_h) continue;
    for (auto a : p)
      if (q2.contains(a)) out.insert(a);
  }
  return out;
}

/// First cohomology of an acyclic quiver straight from the definitions: a
/// derivation assigns d(p) in N_{t(p)} to every path p subject to
/// d(u v) = u d(v) + d(u) for every composable pair; inner derivations are
/// d(p) = p n_{s(p)} - n_{t(p)}. Returns (dim Der, dim Ider).
inline std::pair<std::size_t, std::size_t> brute_force_der_ider(const QuiverRep& r) {
  const Quiver& q = r.quiver();
  const Field& field = r.field();
  const auto paths = enumerate_paths(q);
  std::vector<std::size_t> offset(paths.size() + 1, 0);
  for (std::size_t i = 0; i < paths.size(); ++i) offset[i + 1] = offset[i] + r.dim(paths[i].target());
  auto index_of = [&](const Path& p) {
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (paths[i] == p) return i;
    throw std::logic_error("path not enumerated");
  };

  // Each composable pair contributes dims(t(u)) equations in the unknowns d(p).
  std::vector<std::vector<Scalar>> equations;
  for (std::size_t ui = 0; ui < paths.size(); ++ui)
    for (std::size_t vi = 0; vi < paths.size(); ++vi) {
      auto uv = compose(paths[ui], paths[vi]);
      if (!uv) continue;
      const std::size_t uvi = index_of(*uv);
      const DenseMatrix act = eval_path(r, paths[ui]);
      for (std::size_t row = 0; row < r.dim(paths[ui].target()); ++row) {
        std::vector<Scalar> eq(offset.back(), field.zero());
        eq[offset[uvi] + row] += field.one();
        eq[offset[ui] + row] -= field.one();
        for (std::size_t k = 0; k < act.cols(); ++k) eq[offset[vi] + k] -= act(row, k);
        equations.push_back(std::move(eq));
      }
    }
  DenseMatrix system(field, offset.back(), equations.size());
  for (std::size_t c = 0; c < equations.size(); ++c)
    for (std::size_t row = 0; row < offset.back(); ++row) system(row, c) = equations[c][row];
  const std::size_t der = offset.back() - rank(system);

  std::vector<std::size_t> voff(q.vertex_count() + 1, 0);
  for (VertexId v = 0; v < q.vertex_count(); ++v) voff[v + 1] = voff[v] + r.dim(v);
  DenseMatrix inner(field, offset.back(), voff.back());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const DenseMatrix act = eval_path(r, paths[i]);
    for (std::size_t row = 0; row < act.rows(); ++row) {
      for (std::size_t k = 0; k < act.cols(); ++k) inner(offset[i] + row, voff[paths[i].source()] + k) += act(row, k);
      inner(offset[i] + row, voff[paths[i].target()] + row) -= field.one();
    }
  }
  return {der, rank(inner)};
}

/// 1-dimensional representation with every arrow acting by `scalar`.
inline QuiverRep constant_rep(const Quiver& q, Field field, std::int64_t scalar) {
  std::vector<std::size_t> dims(q.vertex_count(), 1);
  std::vector<DenseMatrix> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    DenseMatrix m(field, 1, 1);
    m(0, 0) = field.from_int(scalar);
    mats.push_back(std::move(m));
  }
  return QuiverRep(q, field, std::move(dims), std::move(mats));
}

/// Same quiver with vertices and arrows listed in a shuffled order.
inline Quiver shuffled(const Quiver& q, std::mt19937_64& rng) {
  std::vector<std::string> vertices = q.vertices();
  std::vector<ArrowSpec> arrows;
  for (const auto& a : q.arrows()) arrows.push_back({a.name, q.vertex_name(a.source), q.vertex_name(a.target)});
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::shuffle(arrows.begin(), arrows.end(), rng);
  return Quiver(std::move(vertices), arrows);
}

/// The representation r transported to the reordered quiver q2.
inline QuiverRep transport(const QuiverRep& r, const Quiver& q2) {
  const Quiver& q = r.quiver();
  std::vector<std::size_t> dims(q2.vertex_count());
  for (VertexId v = 0; v < q2.vertex_count(); ++v) dims[v] = r.dim(q.find_vertex(q2.vertex_name(v)).value());
  std::vector<DenseMatrix> mats;
  for (ArrowId a = 0; a < q2.arrow_count(); ++a) mats.push_back(r.mat(q.find_arrow(q2.arrow(a).name).value()));
  return QuiverRep(q2, r.field(), std::move(dims), std::move(mats));
}

}  // namespace bwcoh::testing
