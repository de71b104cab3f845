#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hallcx/errors.hpp"
#include "hallcx/quiverrep/iso.hpp"

namespace hallcx {

/// Iso class of a representation: its dimension vector and its position in the
/// canonical class list for that dimension vector.
struct RepClassId {
  DimVec dims;
  std::size_t index = 0;
  auto operator<=>(const RepClassId&) const = default;
  bool operator==(const RepClassId&) const = default;
};

std::string to_string(const RepClassId& id);

/// Lazily enumerated iso classes of A, one dimension vector at a time. The
/// decomposable classes are the sums of smaller indecomposables (sorted by
/// summand list); the indecomposables follow in the order a sweep over arrow
/// matrices first meets them. Without relations the sweep stops once the orbits
/// |GL_d| / |Aut M| cover every tuple. Thread safe.
class RepCatalog {
 public:
  explicit RepCatalog(PathAlgebra A, std::uint64_t budget = kDefaultBudget);

  const PathAlgebra& algebra() const noexcept { return A_; }
  std::uint64_t budget() const noexcept { return budget_; }

  std::size_t class_count(const DimVec& d);
  const Rep& rep(const RepClassId& id);
  RepClassId classify(const Rep& M);

  Integer aut(const RepClassId& id);
  /// Indecomposable summands, sorted.
  const std::vector<RepClassId>& summands(const RepClassId& id);
  bool is_indecomposable(const RepClassId& id);

  /// Every class (resp. indecomposable class) with dims <= dmax, by dims then index.
  std::vector<RepClassId> classes_up_to(const DimVec& dmax);
  std::vector<RepClassId> indecomposables_up_to(const DimVec& dmax);

  /// Class of the indecomposable projective at vertex i.
  RepClassId projective_class(std::size_t i);

 private:
  struct Entry {
    std::vector<Rep> reps;
    std::vector<Fingerprint> prints;
    std::vector<std::vector<RepClassId>> parts;  // sorted indecomposable summands
    std::map<std::size_t, Integer> aut;
  };
  Entry& entry(const DimVec& d);

  PathAlgebra A_;
  std::uint64_t budget_;
  std::recursive_mutex mu_;
  std::map<DimVec, std::unique_ptr<Entry>> entries_;
};

/// One representative per iso class with dims <= dmax componentwise.
std::vector<Rep> enumerate_iso_classes(const PathAlgebra& A, const DimVec& dmax, std::uint64_t budget = kDefaultBudget);

/// All dimension vectors d with d <= dmax, in lexicographic order.
std::vector<DimVec> dims_up_to(const DimVec& dmax);

}  // namespace hallcx
