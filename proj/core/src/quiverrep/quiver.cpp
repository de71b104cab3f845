#include "hallcx/quiverrep/quiver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hallcx {

namespace {

bool detect_acyclic(std::size_t n, const std::vector<Arrow>& arrows) {
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : arrows) ++indeg[a.target];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (!indeg[v]) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows)
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  return seen == n;
}

}  // namespace

Quiver::Quiver(std::size_t vertices, std::vector<Arrow> arrows, std::vector<Relation> relations)
    : n_(vertices), arrows_(std::move(arrows)), relations_(std::move(relations)) {
  for (const auto& a : arrows_)
    if (a.source >= n_ || a.target >= n_) throw std::domain_error("arrow endpoint out of range");
  for (const auto& rel : relations_)
    for (const auto& t : rel.terms) {
      if (t.first >= arrows_.size() || t.second >= arrows_.size())
        throw std::domain_error("relation references unknown arrow");
      if (arrows_[t.first].target != arrows_[t.second].source)
        throw std::domain_error("relation term is not a composable path");
    }
  acyclic_ = detect_acyclic(n_, arrows_);
  if (!acyclic_) return;

  paths_.assign(n_, std::vector<std::vector<Path>>(n_));
  for (std::size_t from = 0; from < n_; ++from) {
    // breadth-first by length gives a canonical order: shorter paths first
    std::vector<Path> frontier{Path{}};
    paths_[from][from].push_back(Path{});
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (const auto& p : frontier) {
        const std::size_t at = path_target(from, p);
        for (std::size_t ai = 0; ai < arrows_.size(); ++ai) {
          if (arrows_[ai].source != at) continue;
          Path q = p;
          q.push_back(ai);
          paths_[from][arrows_[ai].target].push_back(q);
          next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
  }
}

Quiver Quiver::acyclic(std::size_t vertices, std::vector<Arrow> arrows) {
  Quiver q(vertices, std::move(arrows));
  if (!q.is_acyclic()) throw std::domain_error("quiver has a directed cycle");
  return q;
}

const std::vector<Path>& Quiver::paths(std::size_t from, std::size_t to) const {
  if (!acyclic_) throw std::logic_error("path enumeration requires an acyclic quiver");
  return paths_.at(from).at(to);
}

std::size_t Quiver::path_index(std::size_t from, std::size_t to, const Path& path) const {
  const auto& ps = paths(from, to);
  const auto it = std::find(ps.begin(), ps.end(), path);
  return it == ps.end() ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(it - ps.begin());
}

std::size_t Quiver::path_target(std::size_t from, const Path& path) const {
  std::size_t at = from;
  for (auto ai : path) {
    if (arrows_[ai].source != at) throw std::logic_error("path is not composable");
    at = arrows_[ai].target;
  }
  return at;
}

std::vector<std::pair<std::size_t, Path>> Quiver::paths_up_to(std::size_t max_len) const {
  std::vector<std::pair<std::size_t, Path>> out;
  std::vector<std::pair<std::size_t, Path>> frontier;
  for (std::size_t v = 0; v < n_; ++v) frontier.emplace_back(v, Path{});
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<std::size_t, Path>> next;
    for (const auto& [from, p] : frontier) {
      const std::size_t at = path_target(from, p);
      for (std::size_t ai = 0; ai < arrows_.size(); ++ai) {
        if (arrows_[ai].source != at) continue;
        Path q = p;
        q.push_back(ai);
        out.emplace_back(from, q);
        next.emplace_back(from, std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace hallcx
