#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zonotopal/errors.hpp"

namespace zonotopal {

// GMP keeps every mpq_class in canonical form (gcd 1, positive denominator)
// after each arithmetic operation.
using Rat = mpq_class;
using VecQ = std::vector<Rat>;

// Parses "p", "-p", or "p/q" into a canonical rational.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);

class NoSolution : public std::runtime_error {
 public:
  NoSolution() : std::runtime_error("no solution") {}
};

class Underdetermined : public std::runtime_error {
 public:
  Underdetermined() : std::runtime_error("underdetermined") {}
};

// Dense row-major rational matrix.
class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static MatQ identity(std::size_t n);
  // Matrix whose rows are the given vectors (all of length `cols`).
  static MatQ from_rows(std::span<const VecQ> rows, std::size_t cols);
  // Matrix whose columns are the given vectors (all of length `rows`).
  static MatQ from_columns(std::span<const VecQ> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  MatQ transpose() const;
  VecQ operator*(const VecQ& v) const;
  MatQ operator*(const MatQ& other) const;
  bool operator==(const MatQ& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  MatQ reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

RrefResult rref(MatQ m);
std::size_t rank(const MatQ& m);
std::size_t rank(std::span<const VecQ> vectors, std::size_t dim);

enum class Uniqueness { any, required };

// Solves A x = b exactly. Throws NoSolution when inconsistent and, when
// uniqueness is required, Underdetermined when the solution set is not a point.
// With Uniqueness::any the free variables are set to zero.
VecQ solve(const MatQ& a, const VecQ& b, Uniqueness uniqueness = Uniqueness::required);
bool is_consistent(const MatQ& a, const VecQ& b);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
bool is_zero(std::span<const Rat> v);

// Row space built one vector at a time, kept fully reduced: every stored row
// has a unit pivot and zeros in the pivot columns of all other rows.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t cols = 0) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  // Remainder of v after elimination against the stored rows.
  VecQ reduce(VecQ v) const;
  bool contains(const VecQ& v) const { return is_zero(reduce(v)); }
  // Adds v if it is independent of the stored rows; returns whether it was.
  bool add(VecQ v);
  // Basis of the vectors orthogonal to every stored row, one per free column.
  std::vector<VecQ> kernel_basis() const;
  const std::vector<VecQ>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<VecQ> rows_;
  std::vector<std::size_t> pivots_;
};


}  // namespace zonotopal
