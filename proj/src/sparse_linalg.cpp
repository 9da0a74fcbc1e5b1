#include "multimult/sparse_linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace multimult {

SparseVector axpy(const SparseVector& acc, const Rational& c, const SparseVector& v) {
  SparseVector out;
  out.reserve(acc.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
      out.push_back(acc[i++]);
    } else if (i == acc.size() || v[j].first < acc[i].first) {
      out.emplace_back(v[j].first, c * v[j].second);
      ++j;
    } else {
      Rational s = acc[i].second + c * v[j].second;
      if (s != 0) out.emplace_back(acc[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& v, const Rational& c) {
  SparseVector out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& [col, val] : v) out.emplace_back(col, val * c);
  return out;
}

SparseVector shifted(const SparseVector& v, int offset) {
  SparseVector out = v;
  for (auto& e : out) e.first += offset;
  return out;
}

SparseVector Echelon::sweep(const SparseVector& v, bool head_only) const {
  if (rows_.empty()) return v;
  // Columns are visited in increasing order; a pivot row only has entries to
  // the right of its pivot, so one sweep suffices.
  std::map<int, Rational> work;
  for (const auto& [c, x] : v) work.emplace(c, x);
  SparseVector out;
  while (!work.empty()) {
    auto it = work.begin();
    const int col = it->first;
    auto p = pivot_row_.find(col);
    if (p == pivot_row_.end()) {
      if (head_only) {
        for (auto& [c, x] : work) out.emplace_back(c, std::move(x));
        return out;
      }
      out.emplace_back(col, std::move(it->second));
      work.erase(it);
      continue;
    }
    Rational coef = std::move(it->second);
    work.erase(it);
    const SparseVector& row = rows_[p->second];
    for (std::size_t k = 1; k < row.size(); ++k) {
      auto [slot, inserted] = work.try_emplace(row[k].first, 0);
      slot->second -= coef * row[k].second;
      if (slot->second == 0) work.erase(slot);
    }
  }
  return out;
}

SparseVector Echelon::reduce(const SparseVector& v) const { return sweep(v, false); }

bool Echelon::insert(const SparseVector& v) {
  // Echelon form only needs a fresh leading column; entries behind it may
  // stay in pivot columns.
  SparseVector r = sweep(v, true);
  if (r.empty()) return false;
  Rational lead = r.front().second;
  if (lead != 1) {
    for (auto& e : r) e.second /= lead;
  }
  pivot_row_.emplace(r.front().first, rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

Echelon Echelon::identity(int n) {
  Echelon e(n);
  for (int i = 0; i < n; ++i) {
    e.pivot_row_.emplace(i, e.rows_.size());
    e.rows_.push_back(SparseVector{{i, Rational(1)}});
  }
  return e;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_of(const mpz_class& z) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(kPrime));
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return r.get_ui();
}

// Returns false when the denominator is divisible by p.
bool rational_mod(const Rational& q, std::uint64_t& out) {
  std::uint64_t den = mod_of(q.get_den());
  if (den == 0) return false;
  out = mulmod(mod_of(q.get_num()), powmod(den, kPrime - 2));
  return true;
}

int exact_rank(const std::vector<SparseVector>& rows, int ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

int block_rank(const std::vector<SparseVector>& rows, int ncols) {
  const int full = std::min<int>(static_cast<int>(rows.size()), ncols);
  if (full == 0) return 0;
  int modp = rank_mod_p(rows, ncols);
  if (modp == full) return full;
  return exact_rank(rows, ncols);
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

int rank_mod_p(const std::vector<SparseVector>& rows, int ncols) {
  // Dense elimination; blocks reaching this point are small.
  const std::size_t m = rows.size();
  std::vector<std::vector<std::uint64_t>> a(m, std::vector<std::uint64_t>(ncols, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [c, v] : rows[i]) {
      if (!rational_mod(v, a[i][c])) return -1;
    }
  }
  int r = 0;
  for (int col = 0; col < ncols && r < static_cast<int>(m); ++col) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i) {
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t inv = powmod(a[r][col], kPrime - 2);
    for (int c = col; c < ncols; ++c) a[r][c] = mulmod(a[r][c], inv);
    for (std::size_t i = r + 1; i < m; ++i) {
      std::uint64_t f = a[i][col];
      if (f == 0) continue;
      for (int c = col; c < ncols; ++c) {
        std::uint64_t sub = mulmod(f, a[r][c]);
        a[i][c] = a[i][c] >= sub ? a[i][c] - sub : a[i][c] + kPrime - sub;
      }
    }
    ++r;
  }
  return r;
}

bool full_row_rank_mod_p(const std::vector<SparseVector>& rows) {
  using Row = std::vector<std::pair<int, std::uint64_t>>;
  std::unordered_map<int, Row> pivots;
  for (const auto& r : rows) {
    std::map<int, std::uint64_t> work;
    for (const auto& [c, v] : r) {
      std::uint64_t x;
      if (!rational_mod(v, x)) return false;
      if (x != 0) work.emplace(c, x);
    }
    // Head reduction, as in Echelon::insert.
    while (!work.empty()) {
      auto it = work.begin();
      auto p = pivots.find(it->first);
      if (p == pivots.end()) break;
      const std::uint64_t coef = it->second;
      work.erase(it);
      for (std::size_t k = 1; k < p->second.size(); ++k) {
        auto [slot, inserted] = work.try_emplace(p->second[k].first, 0);
        std::uint64_t sub = mulmod(coef, p->second[k].second);
        slot->second = slot->second >= sub ? slot->second - sub : slot->second + kPrime - sub;
        if (slot->second == 0) work.erase(slot);
      }
    }
    if (work.empty()) return false;
    const std::uint64_t inv = powmod(work.begin()->second, kPrime - 2);
    Row stored;
    stored.reserve(work.size());
    for (const auto& [c, x] : work) stored.emplace_back(c, mulmod(x, inv));
    pivots.emplace(stored.front().first, std::move(stored));
  }
  return true;
}

int rank(const std::vector<SparseVector>& rows, int ncols) {
  if (rows.empty() || ncols == 0) return 0;
  // Union rows through shared columns.
  std::vector<int> parent(ncols);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& r : rows) {
    for (std::size_t k = 1; k < r.size(); ++k) {
      int a = find_root(parent, r[0].first), b = find_root(parent, r[k].first);
      if (a != b) parent[a] = b;
    }
  }
  std::map<int, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    blocks[find_root(parent, rows[i][0].first)].push_back(i);
  }
  int total = 0;
  for (const auto& [root, members] : blocks) {
    // Renumber the block's columns densely.
    std::map<int, int> cols;
    for (std::size_t i : members) {
      for (const auto& e : rows[i]) cols.emplace(e.first, 0);
    }
    int next = 0;
    for (auto& [c, idx] : cols) idx = next++;
    std::vector<SparseVector> local;
    local.reserve(members.size());
    for (std::size_t i : members) {
      SparseVector v;
      v.reserve(rows[i].size());
      for (const auto& [c, x] : rows[i]) v.emplace_back(cols[c], x);
      local.push_back(std::move(v));
    }
    if (local.size() == 1) {
      total += 1;
    } else {
      total += block_rank(local, next);
    }
  }
  return total;
}

std::vector<SparseVector> left_kernel(const std::vector<SparseVector>& rows, int ncols) {
  // Augment row j with the unit vector e_j placed after the real columns;
  // rows whose real part reduces to zero end up pivoting in the augmented part.
  const int m = static_cast<int>(rows.size());
  Echelon e(ncols + m);
  for (int j = 0; j < m; ++j) {
    SparseVector v = rows[j];
    v.emplace_back(ncols + j, Rational(1));
    e.insert(v);
  }
  std::vector<SparseVector> out;
  for (const auto& r : e.rows()) {
    if (r.front().first >= ncols) out.push_back(shifted(r, -ncols));
  }
  return out;
}

}  // namespace multimult
