#include "bwcoh/partition.hpp"

#include <stdexcept>
#include <string>

namespace bwcoh {

std::vector<ArrowId> Partition::row_arrows() const {
  std::vector<ArrowId> rows = f;
  rows.insert(rows.end(), g.begin(), g.end());
  rows.insert(rows.end(), h.begin(), h.end());
  return rows;
}

PartitionRun run_algorithm_a(const Quiver& q) {
  const std::size_t guard = q.vertex_count() + q.arrow_count() + 1;

  VertexSet phat = VertexSet::full(q.vertex_count());
  ArrowSet q1 = no_arrows(q);
  ArrowSet q2 = no_arrows(q);
  ArrowSet q3 = all_arrows(q);
  std::size_t iterations = 0;

  for (;;) {
    const ArrowSet eligible = hset(q, phat, q1, q3);
    if (eligible.empty()) break;
    if (++iterations > guard)
      throw std::runtime_error("partition loop exceeded " + std::to_string(guard) + " iterations");

    const ArrowId h = eligible.members().front();
    ArrowSet qprime = (q1 | q2) - gset(q, q1, q2, h);
    qprime.insert(h);
    const ArrowSet qbar = max_acyclic_extension(q, qprime);

    // f_a is the first arrow of qbar (input order) into each covered vertex.
    std::vector<bool> covered(q.vertex_count(), false);
    q1 = no_arrows(q);
    for (auto arrow : qbar.members()) {
      VertexId t = q.arrow(arrow).target;
      if (covered[t]) continue;
      covered[t] = true;
      q1.insert(arrow);
    }
    phat = VertexSet(q.vertex_count());
    for (VertexId v = 0; v < q.vertex_count(); ++v)
      if (!covered[v]) phat.insert(v);
    q2 = qbar - q1;
    q3 = all_arrows(q) - qbar;
  }

  Partition out;
  // Peel Q1 from its sinks so that every Q1 path a_j -> a_i has i < j.
  ArrowSet remaining = q1;
  VertexSet pending = VertexSet::full(q.vertex_count()) - phat;
  while (!pending.empty()) {
    std::optional<VertexId> chosen;
    for (auto x : pending.members()) {
      bool has_out = false;
      for (auto arrow : remaining.members())
        if (q.arrow(arrow).source == x) has_out = true;
      if (!has_out) {
        chosen = x;
        break;
      }
    }
    if (!chosen) throw std::logic_error("Q1 has no sink among the remaining targets");
    std::vector<ArrowId> into;
    for (auto arrow : remaining.members())
      if (q.arrow(arrow).target == *chosen) into.push_back(arrow);
    if (into.size() != 1)
      throw std::logic_error("vertex '" + q.vertex_name(*chosen) + "' must have exactly one Q1 arrow");
    out.a.push_back(*chosen);
    out.f.push_back(into.front());
    pending.erase(*chosen);
    remaining.erase(into.front());
  }
  out.b = phat.members();
  out.g = q2.members();
  out.h = q3.members();
  return PartitionRun{std::move(out), iterations};
}

ValidityReport validate_partition(const Quiver& q, const Partition& p) {
  ValidityReport report;

  std::vector<int> vertex_hits(q.vertex_count(), 0);
  for (const auto* list : {&p.a, &p.b})
    for (auto v : *list) {
      if (v >= q.vertex_count()) {
        report.add("vertex partition: index out of range");
        return report;
      }
      ++vertex_hits[v];
    }
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (vertex_hits[v] != 1)
      report.add("vertex partition: '" + q.vertex_name(v) + "' appears " + std::to_string(vertex_hits[v]) +
                 " times in a + b");

  std::vector<int> arrow_hits(q.arrow_count(), 0);
  for (const auto* list : {&p.f, &p.g, &p.h})
    for (auto a : *list) {
      if (a >= q.arrow_count()) {
        report.add("arrow partition: index out of range");
        return report;
      }
      ++arrow_hits[a];
    }
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (arrow_hits[a] != 1)
      report.add("arrow partition: '" + q.arrow(a).name + "' appears " + std::to_string(arrow_hits[a]) +
                 " times in f + g + h");
  if (!report.valid()) return report;

  if (p.a.size() != p.f.size()) {
    report.add("target mismatch: |a| != |f|");
    return report;
  }
  for (std::size_t i = 0; i < p.f.size(); ++i)
    if (q.arrow(p.f[i]).target != p.a[i])
      report.add("target mismatch: t(f" + std::to_string(i + 1) + ") != a" + std::to_string(i + 1));

  const ArrowSet q1 = p.q1(q);
  const ArrowSet q12 = q1 | ArrowSet(q.arrow_count(), p.g);
  if (!is_acyclic(q, q12)) {
    report.add("Q1 + Q2 has a cycle");
  } else {
    for (auto h : p.h) {
      const Arrow& arrow = q.arrow(h);
      if (arrow.source != arrow.target && !reachable(q, q12, arrow.target, arrow.source))
        report.add("Q1 + Q2 is not maximal: '" + arrow.name + "' could be added");
    }
  }
  if (!report.valid()) return report;

  for (std::size_t j = 0; j < p.a.size(); ++j)
    for (std::size_t i = 0; i < p.a.size(); ++i) {
      if (i == j) continue;
      auto path = q1_path(q, q1, p.a[j], p.a[i]);
      if (path && i > j)
        report.add("order violation: Q1 path from a" + std::to_string(j + 1) + " to a" + std::to_string(i + 1));
    }

  if (!p.h.empty() && is_acyclic(q, all_arrows(q))) report.add("Q3 nonempty on an acyclic quiver");

  const VertexSet bset(q.vertex_count(), p.b);
  for (auto h : p.h) {
    const Arrow& arrow = q.arrow(h);
    if (bset.contains(arrow.target) && !q1_path(q, q1, arrow.target, arrow.source))
      report.add("missing cycle witness for '" + arrow.name + "'");
  }
  return report;
}

}  // namespace bwcoh
