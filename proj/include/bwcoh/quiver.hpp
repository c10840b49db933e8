#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bwcoh {

using VertexId = std::size_t;
using ArrowId = std::size_t;

/// Raised when a caller breaks an operation's precondition (as opposed to a
/// query that legitimately has no answer).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Arrow {
  std::string name;
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Arrow given by vertex names, as it appears in a quiver document.
struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;
};

/// A finite quiver. Vertex and arrow order is the input order and is
/// semantic: every tie-break in the algorithms resolves to the smallest index.
class Quiver {
 public:
  Quiver() = default;
  /// Throws std::invalid_argument on duplicate names or unknown endpoints.
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Subset of a fixed universe {0, ..., n-1}; iteration follows index order.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : bits_(universe, false) {}
  IndexSet(std::size_t universe, const std::vector<std::size_t>& members) : bits_(universe, false) {
    for (auto m : members) insert(m);
  }
  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(std::size_t i) const { return i < bits_.size() && bits_[i]; }
  void insert(std::size_t i) { bits_.at(i) = true; }
  void erase(std::size_t i) { bits_.at(i) = false; }

  std::size_t size() const {
    std::size_t n = 0;
    for (bool b : bits_) n += b;
    return n;
  }
  bool empty() const { return size() == 0; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(i);
    return out;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) {
    for (std::size_t i = 0; i < b.bits_.size(); ++i)
      if (b.bits_[i]) a.insert(i);
    return a;
  }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) {
    for (std::size_t i = 0; i < b.bits_.size() && i < a.bits_.size(); ++i)
      if (b.bits_[i]) a.erase(i);
    return a;
  }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<bool> bits_;
};

struct ArrowTag;
struct VertexTag;
/// Arrow subset of a quiver; the induced subquiver keeps every vertex.
using ArrowSet = IndexSet<ArrowTag>;
using VertexSet = IndexSet<VertexTag>;

inline ArrowSet all_arrows(const Quiver& q) { return ArrowSet::full(q.arrow_count()); }
inline ArrowSet no_arrows(const Quiver& q) { return ArrowSet(q.arrow_count()); }

/// A path f1...fl, stored in composition order: f1 is applied last, so the
/// path runs from s(fl) to t(f1). Length 0 is the identity at a vertex.
class Path {
 public:
  static Path identity(VertexId x) { return Path({}, x, x); }
  /// Throws std::invalid_argument if empty or if s(f_i) != t(f_{i+1}).
  static Path from_arrows(const Quiver& q, std::vector<ArrowId> arrows);
  static Path single(const Quiver& q, ArrowId a) { return from_arrows(q, {a}); }

  VertexId source() const { return source_; }
  VertexId target() const { return target_; }
  std::size_t length() const { return arrows_.size(); }
  bool is_identity() const { return arrows_.empty(); }
  const std::vector<ArrowId>& arrows() const { return arrows_; }

  /// Shorter paths first, then lexicographic on arrow indices, then by vertex.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path&, const Path&) = default;
  friend std::optional<Path> compose(const Path& p, const Path& q);

 private:
  Path(std::vector<ArrowId> arrows, VertexId source, VertexId target)
      : arrows_(std::move(arrows)), source_(source), target_(target) {}

  std::vector<ArrowId> arrows_;
  VertexId source_ = 0;
  VertexId target_ = 0;
};

/// "id_<vertex>" or arrow names joined by '*'.
std::string path_to_string(const Quiver& q, const Path& p);

/// p after q; nullopt when s(p) != t(q).
std::optional<Path> compose(const Path& p, const Path& q);

/// Identities count as (degenerate) cycles.
inline bool is_cycle(const Path& p) { return p.source() == p.target(); }

bool is_acyclic(const Quiver& q, const ArrowSet& s);

bool reachable(const Quiver& q, const ArrowSet& s, VertexId from, VertexId to);

/// Unique path in q1 from `from` to `to`, found by walking backwards along the
/// single incoming q1 arrow at each vertex. Throws ContractError when some
/// vertex on the walk has two incoming q1 arrows or the walk loops.
std::optional<Path> q1_path(const Quiver& q, const ArrowSet& q1, VertexId from, VertexId to);

/// Greedy maximal acyclic superset of qp, scanning remaining arrows in input
/// order. Throws std::invalid_argument if qp already has a cycle.
ArrowSet max_acyclic_extension(const Quiver& q, const ArrowSet& qp);

/// Arrows h of q3 with t(h) in phat such that no q1 path (identities
/// included) closes h into a cycle.
ArrowSet hset(const Quiver& q, const VertexSet& phat, const ArrowSet& q1, const ArrowSet& q3);

/// Arrows g of q2 lying on a cycle of q1 + q2 + {h} together with h.
/// Throws std::invalid_argument if q1 + q2 is not acyclic.
ArrowSet gset(const Quiver& q, const ArrowSet& q1, const ArrowSet& q2, ArrowId h);

}  // namespace bwcoh
