#include "zonotopal/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace zonotopal {

namespace {

std::string describe(IndexSet s, const char* prefix) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto e : s) {
    os << (first ? "" : ",") << prefix << e + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

VectorMatroid::VectorMatroid(std::size_t dim, std::vector<VecQ> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (vectors_.size() > kMaxGroundSize) throw InputError("ground set larger than 64 elements");
  for (const auto& v : vectors_)
    if (v.size() != dim_) throw InputError("vector length differs from the ambient dimension");
}

std::size_t VectorMatroid::rank(IndexSet s) const {
  if (s.empty()) {
    return 0;
  }
  if (auto it = rank_cache_.find(s.mask()); it != rank_cache_.end()) return it->second;
  MatQ m(s.size(), dim_);
  std::size_t r = 0;
  for (auto e : s) {
    for (std::size_t c = 0; c < dim_; ++c) m(r, c) = vectors_[e][c];
    ++r;
  }
  const auto value = zonotopal::rank(m);
  rank_cache_.emplace(s.mask(), value);
  return value;
}

IndexSet VectorMatroid::closure(IndexSet s, IndexSet universe) const {
  const auto r = rank(s);
  IndexSet out;
  for (auto e : universe)
    if (s.contains(e) || rank(s.with(e)) == r) out.insert(e);
  return out;
}

bool BasisFamily::contains(IndexSet b) const {
  return std::find(members.begin(), members.end(), b) != members.end();
}

std::vector<IndexSet> independents(const VectorMatroid& m) {
  std::vector<IndexSet> out;
  for_each_subset(m.all(), [&](IndexSet s) {
    if (s.size() <= m.dim() && m.is_independent(s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

BasisFamily bases(const VectorMatroid& m) {
  BasisFamily fam;
  fam.kind = FamilyKind::full_ground;
  for_each_subset_of_size(m.all().elements(), m.dim(), [&](IndexSet s) {
    if (m.is_basis(s)) fam.members.push_back(s);
  });
  return fam;
}

std::vector<IndexSet> flats(const VectorMatroid& m) {
  std::set<std::uint64_t> seen;
  std::vector<IndexSet> out;
  for_each_subset(m.all(), [&](IndexSet s) {
    auto f = m.closure(s);
    if (seen.insert(f.mask()).second) out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

unsigned Assignment::max_value() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

Assignment validate_assignment(const VectorMatroid& x, const std::vector<RawAssignmentValue>& raw,
                               AssignmentMode mode) {
  const std::size_t n_x = x.size();
  if (n_x > 20) throw InputError("assignments are limited to at most 20 elements of X");

  Assignment a;
  a.ground_size_ = n_x;
  a.flats_ = flats(x);
  const std::size_t subsets = std::size_t{1} << n_x;
  a.values_.assign(subsets, 0);

  std::vector<std::uint64_t> closure_of(subsets);
  for (std::uint64_t s = 0; s < subsets; ++s) closure_of[s] = x.closure(IndexSet(s)).mask();

  auto to_set = [&](const std::vector<std::size_t>& idx) {
    IndexSet z;
    for (auto i : idx) {
      if (i >= n_x) throw InputError("assignment subset index " + std::to_string(i) + " out of range");
      if (z.contains(i)) throw InputError("assignment subset lists index " + std::to_string(i) + " twice");
      z.insert(i);
    }
    return z;
  };

  if (mode == AssignmentMode::flats) {
    std::map<std::uint64_t, std::pair<unsigned, IndexSet>> by_flat;
    for (const auto& entry : raw) {
      const IndexSet z = to_set(entry.subset);
      const std::uint64_t f = closure_of[z.mask()];
      auto [it, inserted] = by_flat.try_emplace(f, entry.value, z);
      if (!inserted && it->second.first != entry.value)
        throw ValidationError("not a function of the span: " + describe(it->second.second, "x") + " and " +
                              describe(z, "x") + " span the same flat but get values " +
                              std::to_string(it->second.first) + " and " + std::to_string(entry.value));
    }
    for (auto f : a.flats_)
      if (!by_flat.count(f.mask())) throw ValidationError("missing flat " + describe(f, "x"));
    for (std::uint64_t s = 0; s < subsets; ++s) a.values_[s] = by_flat.at(closure_of[s]).first;
    a.span_based_ = true;
  } else {
    std::vector<bool> seen(subsets, false);
    for (const auto& entry : raw) {
      const IndexSet z = to_set(entry.subset);
      if (seen[z.mask()] && a.values_[z.mask()] != entry.value)
        throw ValidationError("subset " + describe(z, "x") + " listed twice with different values");
      seen[z.mask()] = true;
      a.values_[z.mask()] = entry.value;
    }
    for (std::uint64_t s = 0; s < subsets; ++s)
      if (!seen[s]) throw ValidationError("missing subset " + describe(IndexSet(s), "x"));
    a.span_based_ = true;
    for (std::uint64_t s = 0; s < subsets && a.span_based_; ++s)
      if (a.values_[s] != a.values_[closure_of[s]]) a.span_based_ = false;
  }

  // Solidity over the flat lattice: per flat, the extreme values over the
  // subsets spanning it.
  struct Extremes {
    unsigned lo = ~0u, hi = 0;
    IndexSet lo_at, hi_at;
  };
  std::map<std::uint64_t, Extremes> ext;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    auto& e = ext[closure_of[s]];
    const unsigned v = a.values_[s];
    if (v < e.lo) e.lo = v, e.lo_at = IndexSet(s);
    if (v > e.hi) e.hi = v, e.hi_at = IndexSet(s);
  }
  a.solid_ = true;
  for (auto f : a.flats_) {
    for (auto g : a.flats_) {
      if (!g.contains(f)) continue;
      const auto& ef = ext.at(f.mask());
      const auto& eg = ext.at(g.mask());
      if (ef.hi > eg.lo) {
        a.solid_ = false;
        a.solid_witness_ = SolidityViolation{ef.hi_at, eg.lo_at};
        break;
      }
    }
    if (!a.solid_) break;
  }

  a.incremental_ = true;
  if (a.span_based_) {
    for (auto f : a.flats_) {
      for (std::size_t e = 0; e < n_x && a.incremental_; ++e) {
        if (f.contains(e)) continue;
        if (a.values_[f.with(e).mask()] > a.values_[f.mask()] + 1) {
          a.incremental_ = false;
          a.incremental_witness_ = IncrementalityViolation{f, e};
        }
      }
      if (!a.incremental_) break;
    }
  } else {
    for (std::uint64_t s = 0; s < subsets && a.incremental_; ++s)
      for (std::size_t e = 0; e < n_x; ++e) {
        if (a.values_[IndexSet(s).with(e).mask()] > a.values_[s] + 1) {
          a.incremental_ = false;
          a.incremental_witness_ = IncrementalityViolation{IndexSet(s), e};
          break;
        }
      }
  }
  return a;
}

Assignment assignment_from_flats(const VectorMatroid& x, const std::function<unsigned(IndexSet)>& rule) {
  std::vector<RawAssignmentValue> raw;
  for (auto f : flats(x)) raw.push_back({f.elements(), rule(f)});
  return validate_assignment(x, raw, AssignmentMode::flats);
}

Assignment constant_assignment(const VectorMatroid& x, unsigned c) {
  return assignment_from_flats(x, [c](IndexSet) { return c; });
}

std::size_t m_value(IndexSet independent, const Assignment& a, std::size_t n) {
  return a.value(independent) + n - independent.size();
}

std::size_t required_y_size(const VectorMatroid& x, const Assignment& a) {
  std::size_t best = 0;
  for (auto i : independents(x)) best = std::max(best, m_value(i, a, x.dim()));
  return best;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace zonotopal
