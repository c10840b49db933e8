#include "bwcoh/examples.hpp"

#include <stdexcept>
#include <vector>

namespace bwcoh {

Family parse_family(std::string_view name) {
  if (name == "chain") return Family::chain;
  if (name == "star") return Family::star;
  if (name == "zigzag") return Family::zigzag;
  if (name == "cycle") return Family::cycle;
  if (name == "bicycle") return Family::bicycle;
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected chain, star, zigzag, cycle or bicycle)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::chain: return "chain";
    case Family::star: return "star";
    case Family::zigzag: return "zigzag";
    case Family::cycle: return "cycle";
    case Family::bicycle: return "bicycle";
  }
  return "?";
}

Quiver gen_example(Family family, int n) {
  if (n < 2) throw std::invalid_argument("family parameter must be at least 2");
  auto s = [](int i) { return std::to_string(i); };
  // 1-based index wrapped into 1..n
  auto wrap = [n](int i) { return ((i - 1) % n + n) % n + 1; };

  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  switch (family) {
    case Family::chain:
      for (int i = 1; i <= n; ++i) vertices.push_back(s(i));
      for (int i = 1; i < n; ++i) arrows.push_back({"a" + s(i), s(i + 1), s(i)});
      break;
    case Family::star:
      vertices.push_back("x");
      for (int i = 1; i <= n; ++i) vertices.push_back(s(i));
      for (int i = 1; i <= n; ++i) arrows.push_back({"a" + s(i), s(i), "x"});
      break;
    case Family::zigzag:
      for (int j = 1; j <= n; ++j) vertices.push_back("x" + s(j));
      for (int j = 1; j <= n; ++j) vertices.push_back("y" + s(j));
      for (int j = 1; j <= n; ++j) arrows.push_back({"a" + s(j), "y" + s(j), "x" + s(j)});
      for (int j = 1; j <= n; ++j) arrows.push_back({"b" + s(j), "y" + s(wrap(j - 1)), "x" + s(j)});
      break;
    case Family::cycle:
    case Family::bicycle:
      for (int j = 1; j <= n; ++j) vertices.push_back(s(j));
      for (int j = 1; j <= n; ++j) arrows.push_back({"a" + s(j), s(wrap(j + 1)), s(j)});
      if (family == Family::bicycle)
        for (int j = 1; j <= n; ++j) arrows.push_back({"b" + s(j), s(j), s(wrap(j + 1))});
      break;
  }
  return Quiver(std::move(vertices), arrows);
}

}  // namespace bwcoh
