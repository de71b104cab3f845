#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "hallcx/exactla/prime_field.hpp"

namespace hallcx {

struct Arrow {
  std::size_t source;
  std::size_t target;
  bool operator==(const Arrow&) const = default;
};

/// One summand `coeff * (second o first)` of a quadratic relation.
struct RelationTerm {
  Elem coeff;
  std::size_t first;
  std::size_t second;
};

/// A homogeneous linear combination of length-two paths that must vanish.
struct Relation {
  std::vector<RelationTerm> terms;
};

/// Sequence of arrow indices, in traversal order. Empty means the trivial path.
using Path = std::vector<std::size_t>;

/// A finite quiver with optional quadratic relations. Vertices are 0-based
/// internally; quiver files use 1-based labels.
class Quiver {
 public:
  Quiver(std::size_t vertices, std::vector<Arrow> arrows, std::vector<Relation> relations = {});

  /// Builds a relation-free quiver and rejects directed cycles.
  static Quiver acyclic(std::size_t vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  bool is_acyclic() const noexcept { return acyclic_; }
  bool has_relations() const noexcept { return !relations_.empty(); }

  /// All paths from i to j; only available for acyclic quivers.
  const std::vector<Path>& paths(std::size_t from, std::size_t to) const;
  /// Position of `path` in paths(from, to), or npos.
  std::size_t path_index(std::size_t from, std::size_t to, const Path& path) const;
  /// Every path of length 1..max_len (acyclic or not), in a fixed order.
  std::vector<std::pair<std::size_t, Path>> paths_up_to(std::size_t max_len) const;
  std::size_t path_target(std::size_t from, const Path& path) const;

 private:
  std::size_t n_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
  bool acyclic_;
  std::vector<std::vector<std::vector<Path>>> paths_;  // [from][to]
};

/// The ground data shared by a category of representations: a quiver (with
/// relations) and a prime field. Cheap to copy.
class PathAlgebra {
 public:
  PathAlgebra(std::shared_ptr<const Quiver> quiver, PrimeField field)
      : quiver_(std::move(quiver)), field_(field) {}
  PathAlgebra(Quiver quiver, PrimeField field)
      : quiver_(std::make_shared<const Quiver>(std::move(quiver))), field_(field) {}

  const Quiver& quiver() const noexcept { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const noexcept { return quiver_; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return quiver_->vertex_count(); }
  std::uint32_t p() const noexcept { return field_.p(); }

 private:
  std::shared_ptr<const Quiver> quiver_;
  PrimeField field_;
};

}  // namespace hallcx
