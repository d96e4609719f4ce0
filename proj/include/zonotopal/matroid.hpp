#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "zonotopal/exactla.hpp"
#include "zonotopal/index_set.hpp"

namespace zonotopal {

// Linear matroid of a finite list of vectors in Q^n. Rank queries are
// memoized, so an instance must not be shared between threads.
class VectorMatroid {
 public:
  VectorMatroid(std::size_t dim, std::vector<VecQ> vectors);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<VecQ>& vectors() const { return vectors_; }
  const VecQ& vector(std::size_t i) const { return vectors_[i]; }
  IndexSet all() const { return IndexSet::prefix(vectors_.size()); }

  std::size_t rank(IndexSet s) const;
  bool is_independent(IndexSet s) const { return rank(s) == s.size(); }
  bool is_basis(IndexSet s) const { return s.size() == dim_ && rank(s) == dim_; }
  bool in_span(std::size_t e, IndexSet s) const { return rank(s.with(e)) == rank(s); }
  // All elements of `universe` lying in Span s.
  IndexSet closure(IndexSet s, IndexSet universe) const;
  IndexSet closure(IndexSet s) const { return closure(s, all()); }

 private:
  std::size_t dim_;
  std::vector<VecQ> vectors_;
  mutable std::unordered_map<std::uint64_t, std::size_t> rank_cache_;
};

enum class FamilyKind { full_ground, central, external, split_node };

struct BasisFamily {
  std::vector<IndexSet> members;
  FamilyKind kind = FamilyKind::full_ground;

  std::size_t size() const { return members.size(); }
  bool contains(IndexSet b) const;
};

// Every independent subset, ordered by size then lexicographically.
std::vector<IndexSet> independents(const VectorMatroid& m);
// Bases of R^n inside the matroid; empty when the rank is below n.
BasisFamily bases(const VectorMatroid& m);
// Distinct closures of subsets, ordered by size then lexicographically.
std::vector<IndexSet> flats(const VectorMatroid& m);

struct RawAssignmentValue {
  std::vector<std::size_t> subset;
  unsigned value = 0;
};

enum class AssignmentMode {
  flats,   // one value per flat; every flat must be listed
  subsets  // one value per subset of X; every subset must be listed
};

struct SolidityViolation {
  IndexSet smaller;  // Span smaller is contained in Span larger ...
  IndexSet larger;   // ... yet k(smaller) > k(larger)
};

struct IncrementalityViolation {
  IndexSet base;
  std::size_t added = 0;  // k(base + added) > k(base) + 1
};

// The map k on subsets of X, stored for every subset. The solid and
// incremental flags are set only by exhaustive certification.
class Assignment {
 public:
  std::size_t ground_size() const { return ground_size_; }
  unsigned value(IndexSet z) const { return values_.at(z.mask()); }
  unsigned max_value() const;
  bool factors_through_span() const { return span_based_; }
  bool solid() const { return solid_; }
  bool incremental() const { return incremental_; }
  const std::optional<SolidityViolation>& solidity_witness() const { return solid_witness_; }
  const std::optional<IncrementalityViolation>& incrementality_witness() const {
    return incremental_witness_;
  }
  const std::vector<IndexSet>& flat_list() const { return flats_; }

  friend Assignment validate_assignment(const VectorMatroid&, const std::vector<RawAssignmentValue>&,
                                        AssignmentMode);

 private:
  std::size_t ground_size_ = 0;
  std::vector<unsigned> values_;
  std::vector<IndexSet> flats_;
  bool span_based_ = true;
  bool solid_ = false;
  bool incremental_ = false;
  std::optional<SolidityViolation> solid_witness_;
  std::optional<IncrementalityViolation> incremental_witness_;
};

// Throws InputError for out-of-range indices, ValidationError for a missing
// flat/subset or for a flat-mode value that is not a function of the span.
// Solidity and incrementality failures only clear the flags.
Assignment validate_assignment(const VectorMatroid& x, const std::vector<RawAssignmentValue>& raw,
                               AssignmentMode mode = AssignmentMode::flats);

// Flat-mode assignment built from a rule evaluated on each flat.
Assignment assignment_from_flats(const VectorMatroid& x, const std::function<unsigned(IndexSet)>& rule);
Assignment constant_assignment(const VectorMatroid& x, unsigned c);

// m(I) = k(I) + n - #I
std::size_t m_value(IndexSet independent, const Assignment& a, std::size_t n);

// Y-prefix length that makes the external basis family well defined:
// the maximum of m(I) over I(X).
std::size_t required_y_size(const VectorMatroid& x, const Assignment& a);

// Binomial coefficient as an exact integer.
mpz_class binomial(long n, long k);

}  // namespace zonotopal
