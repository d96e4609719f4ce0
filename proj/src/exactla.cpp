#include "zonotopal/exactla.hpp"

#include <cctype>
#include <utility>

namespace zonotopal {

Rat parse_rat(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.empty()) throw InputError("empty rational literal");

  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  const auto slash = trimmed.find('/');
  const auto num = trimmed.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : trimmed.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw InputError("malformed rational literal '" + std::string(text) + "'");

  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatQ MatQ::from_rows(std::span<const VecQ> rows, std::size_t cols) {
  MatQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

MatQ MatQ::from_columns(std::span<const VecQ> columns, std::size_t rows) {
  MatQ m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

VecQ MatQ::operator*(const VecQ& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  VecQ out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

MatQ MatQ::operator*(const MatQ& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product size mismatch");
  MatQ out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

RrefResult rref(MatQ m) {
  RrefResult result;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && sgn(m(found, col)) == 0) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(found, c), m(pivot_row, c));

    const Rat inv = 1 / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || sgn(m(r, col)) == 0) continue;
      const Rat factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(pivot_row, c)) != 0) m(r, c) -= factor * m(pivot_row, c);
    }
    result.pivot_columns.push_back(col);
    ++pivot_row;
  }
  result.rank = result.pivot_columns.size();
  result.reduced = std::move(m);
  return result;
}

std::size_t rank(const MatQ& m) {
  // Forward elimination only; the reduced form is not needed.
  MatQ a = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < a.rows() && sgn(a(found, col)) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != pivot_row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(found, c), a(pivot_row, c));
    for (std::size_t r = pivot_row + 1; r < a.rows(); ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const Rat factor = a(r, col) / a(pivot_row, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (sgn(a(pivot_row, c)) != 0) a(r, c) -= factor * a(pivot_row, c);
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t rank(std::span<const VecQ> vectors, std::size_t dim) {
  return rank(MatQ::from_rows(vectors, dim));
}

namespace {

MatQ augmented(const MatQ& a, const VecQ& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side size mismatch");
  MatQ m(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    m(r, a.cols()) = b[r];
  }
  return m;
}

}  // namespace

VecQ solve(const MatQ& a, const VecQ& b, Uniqueness uniqueness) {
  const auto reduced = rref(augmented(a, b));
  const std::size_t n = a.cols();
  if (!reduced.pivot_columns.empty() && reduced.pivot_columns.back() == n) throw NoSolution();
  if (uniqueness == Uniqueness::required && reduced.rank < n) throw Underdetermined();
  VecQ x(n);
  for (std::size_t i = 0; i < reduced.rank; ++i) x[reduced.pivot_columns[i]] = reduced.reduced(i, n);
  return x;
}

bool is_consistent(const MatQ& a, const VecQ& b) { return rank(augmented(a, b)) == rank(a); }

VecQ IncrementalEchelon::reduce(VecQ v) const {
  if (v.size() != cols_) throw InputError("vector length differs from echelon width");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat factor = v[pivots_[i]];
    if (sgn(factor) == 0) continue;
    const auto& row = rows_[i];
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(row[c]) != 0) v[c] -= factor * row[c];
  }
  return v;
}

bool IncrementalEchelon::add(VecQ v) {
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < cols_ && sgn(v[pivot]) == 0) ++pivot;
  if (pivot == cols_) return false;
  const Rat inv = 1 / v[pivot];
  for (auto& x : v) x *= inv;
  for (auto& row : rows_) {
    const Rat factor = row[pivot];
    if (sgn(factor) == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0) row[c] -= factor * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

std::vector<VecQ> IncrementalEchelon::kernel_basis() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<VecQ> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    VecQ v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = -rows_[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Rat> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace zonotopal
