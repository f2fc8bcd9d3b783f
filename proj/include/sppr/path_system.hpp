#pragma once

#include <map>
#include <utility>

#include "sppr/graph.hpp"

namespace sppr {

// Designated paths, at most one per ordered pair (s,t).
class PathSystem {
 public:
  struct Entry {
    Path path;
    // Strict: every other s->t path must be longer (by the separation factor).
    bool uniqueness_required = true;
    // Alternatives must exceed this multiple of the designated weight.
    Rational separation{1};
  };
  using Key = std::pair<Vertex, Vertex>;

  // Adding the same path twice for a pair is a no-op; a different path throws.
  void add(Path path, bool uniqueness_required = true, Rational separation = Rational(1)) {
    if (path.vertices.empty()) throw Error("empty designated path");
    Key k{path.source(), path.target()};
    auto it = entries_.find(k);
    if (it != entries_.end()) {
      if (it->second.path != path)
        throw Error("two designated paths for pair (" + std::to_string(k.first) + "," +
                    std::to_string(k.second) + ")");
      it->second.uniqueness_required = it->second.uniqueness_required || uniqueness_required;
      it->second.separation = max(it->second.separation, separation);
      return;
    }
    entries_.emplace(k, Entry{std::move(path), uniqueness_required, std::move(separation)});
  }

  void validate(const WeightedGraph& g) const {
    for (const auto& [k, e] : entries_)
      if (!is_valid_path(g, e.path))
        throw Error("designated path " + to_string(e.path) + " is not a path of the graph");
  }

  const std::map<Key, Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Entry* find(Vertex s, Vertex t) const {
    auto it = entries_.find({s, t});
    return it == entries_.end() ? nullptr : &it->second;
  }

 private:
  std::map<Key, Entry> entries_;
};

}  // namespace sppr
