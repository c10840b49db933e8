#include "bwcoh/quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bwcoh {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  std::set<std::string_view> seen;
  for (const auto& v : vertices_) {
    if (v.empty()) throw std::invalid_argument("empty vertex name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex '" + v + "'");
  }
  std::set<std::string_view> names;
  arrows_.reserve(arrows.size());
  for (const auto& spec : arrows) {
    if (spec.name.empty()) throw std::invalid_argument("empty arrow name");
    if (!names.insert(spec.name).second)
      throw std::invalid_argument("duplicate arrow '" + spec.name + "'");
    auto s = find_vertex(spec.source);
    auto t = find_vertex(spec.target);
    if (!s) throw std::invalid_argument("arrow '" + spec.name + "' has unknown source '" + spec.source + "'");
    if (!t) throw std::invalid_argument("arrow '" + spec.name + "' has unknown target '" + spec.target + "'");
    arrows_.push_back(Arrow{spec.name, *s, *t});
  }
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.name == name; });
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<ArrowId>(it - arrows_.begin());
}

Path Path::from_arrows(const Quiver& q, std::vector<ArrowId> arrows) {
  if (arrows.empty()) throw std::invalid_argument("use Path::identity for length-0 paths");
  for (auto a : arrows)
    if (a >= q.arrow_count()) throw std::invalid_argument("arrow index out of range");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.arrow(arrows[i]).source != q.arrow(arrows[i + 1]).target)
      throw std::invalid_argument("arrows '" + q.arrow(arrows[i]).name + "' and '" +
                                  q.arrow(arrows[i + 1]).name + "' do not compose");
  }
  VertexId target = q.arrow(arrows.front()).target;
  VertexId source = q.arrow(arrows.back()).source;
  return Path(std::move(arrows), source, target);
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = a.arrows_ <=> b.arrows_; c != 0) return c;
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  return a.target_ <=> b.target_;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_identity()) return "id_" + q.vertex_name(p.source());
  std::string out;
  for (auto a : p.arrows()) {
    if (!out.empty()) out += '*';
    out += q.arrow(a).name;
  }
  return out;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.source() != q.target()) return std::nullopt;
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  std::vector<ArrowId> arrows = p.arrows();
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  Path out = p;
  out.arrows_ = std::move(arrows);
  out.source_ = q.source();
  return out;
}

bool is_acyclic(const Quiver& q, const ArrowSet& s) {
  // Kahn's algorithm on the arrow subset; loops never get their in-degree cleared.
  std::vector<std::size_t> indegree(q.vertex_count(), 0);
  std::vector<std::vector<ArrowId>> out(q.vertex_count());
  for (auto a : s.members()) {
    ++indegree[q.arrow(a).target];
    out[q.arrow(a).source].push_back(a);
  }
  std::deque<VertexId> ready;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t visited = 0;
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    ++visited;
    for (auto a : out[v])
      if (--indegree[q.arrow(a).target] == 0) ready.push_back(q.arrow(a).target);
  }
  return visited == q.vertex_count();
}

bool reachable(const Quiver& q, const ArrowSet& s, VertexId from, VertexId to) {
  if (from == to) return true;
  std::vector<bool> seen(q.vertex_count(), false);
  std::deque<VertexId> frontier{from};
  seen[from] = true;
  const auto members = s.members();
  while (!frontier.empty()) {
    VertexId v = frontier.front();
    frontier.pop_front();
    for (auto a : members) {
      const Arrow& arrow = q.arrow(a);
      if (arrow.source != v || seen[arrow.target]) continue;
      if (arrow.target == to) return true;
      seen[arrow.target] = true;
      frontier.push_back(arrow.target);
    }
  }
  return false;
}

std::optional<Path> q1_path(const Quiver& q, const ArrowSet& q1, VertexId from, VertexId to) {
  if (from == to) return Path::identity(from);
  std::vector<ArrowId> walk;
  VertexId current = to;
  while (current != from) {
    std::optional<ArrowId> incoming;
    for (auto a : q1.members()) {
      if (q.arrow(a).target != current) continue;
      if (incoming)
        throw ContractError("vertex '" + q.vertex_name(current) + "' has two incoming arrows in Q1 ('" +
                            q.arrow(*incoming).name + "', '" + q.arrow(a).name + "')");
      incoming = a;
    }
    if (!incoming) return std::nullopt;
    walk.push_back(*incoming);
    if (walk.size() > q.vertex_count()) throw ContractError("Q1 contains a cycle");
    current = q.arrow(*incoming).source;
  }
  return Path::from_arrows(q, std::move(walk));
}

ArrowSet max_acyclic_extension(const Quiver& q, const ArrowSet& qp) {
  if (!is_acyclic(q, qp)) throw std::invalid_argument("cannot extend an arrow set that has a cycle");
  ArrowSet result = qp;
  for (ArrowId f = 0; f < q.arrow_count(); ++f) {
    if (result.contains(f)) continue;
    const Arrow& arrow = q.arrow(f);
    if (arrow.source == arrow.target) continue;
    if (!reachable(q, result, arrow.target, arrow.source)) result.insert(f);
  }
  return result;
}

ArrowSet hset(const Quiver& q, const VertexSet& phat, const ArrowSet& q1, const ArrowSet& q3) {
  ArrowSet result = no_arrows(q);
  for (auto h : q3.members()) {
    const Arrow& arrow = q.arrow(h);
    if (!phat.contains(arrow.target)) continue;
    if (!q1_path(q, q1, arrow.target, arrow.source)) result.insert(h);
  }
  return result;
}

ArrowSet gset(const Quiver& q, const ArrowSet& q1, const ArrowSet& q2, ArrowId h) {
  const ArrowSet base = q1 | q2;
  if (!is_acyclic(q, base)) throw std::invalid_argument("Q1 + Q2 must be acyclic");
  const Arrow& closing = q.arrow(h);
  ArrowSet result = no_arrows(q);
  for (auto g : q2.members()) {
    const Arrow& arrow = q.arrow(g);
    if (reachable(q, base, closing.target, arrow.source) && reachable(q, base, arrow.target, closing.source))
      result.insert(g);
  }
  return result;
}

}  // namespace bwcoh
