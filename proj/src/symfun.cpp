#include "stringy/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace stringy {

HExpr HExpr::one() {
  HExpr e;
  e.terms_[Monomial{}] = LPoly::one();
  return e;
}

HExpr HExpr::h(int m) {
  HExpr e;
  e.terms_[Monomial{m}] = LPoly::one();
  return e;
}

void HExpr::add_term(Monomial mono, const LPoly& coeff) {
  std::sort(mono.rbegin(), mono.rend());
  LPoly& slot = terms_[mono];
  slot += coeff;
  if (slot.is_zero()) terms_.erase(mono);
}

HExpr HExpr::operator+(const HExpr& o) const {
  HExpr r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
  return r;
}

HExpr HExpr::operator*(const HExpr& o) const {
  HExpr r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(std::move(m), ca * cb);
    }
  return r;
}

HExpr HExpr::scaled(const LPoly& q_poly) const {
  HExpr r;
  for (const auto& [mono, c] : terms_) {
    LPoly prod = c * q_poly;
    if (!prod.is_zero()) r.add_term(mono, prod);
  }
  return r;
}

int HExpr::homogeneous_degree() const {
  int deg = -1;
  for (const auto& [mono, c] : terms_) {
    const int d = std::accumulate(mono.begin(), mono.end(), 0);
    if (deg == -1) deg = d;
    if (d != deg) return -1;
  }
  return deg;
}

namespace {

std::string monomial_text(const HExpr::Monomial& mono, const Int& coeff) {
  std::string s;
  if (coeff != 1) s += coeff.str();
  if (mono.empty()) {
    if (coeff == 1) s = "1";
    return s;
  }
  // factors ascending, repeated factors as powers
  std::vector<int> asc(mono.rbegin(), mono.rend());
  size_t i = 0;
  while (i < asc.size()) {
    size_t j = i;
    while (j < asc.size() && asc[j] == asc[i]) ++j;
    if (!s.empty()) s += "*";
    s += "h" + std::to_string(asc[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

} // namespace

std::string HExpr::to_text() const {
  if (terms_.empty()) return "0";
  int qmax = 0;
  for (const auto& [mono, c] : terms_) qmax = std::max(qmax, c.degree());

  std::string out;
  for (int l = 0; l <= qmax; ++l) {
    // monomials ascending lexicographically in their descending-part form
    std::vector<std::string> parts;
    for (const auto& [mono, c] : terms_) {
      const Int coeff = c.coeff(l);
      if (coeff != 0) parts.push_back(monomial_text(mono, coeff));
    }
    if (parts.empty()) continue;
    std::string group = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) group += " + " + parts[i];
    const bool needs_parens = parts.size() > 1;
    std::string piece = needs_parens ? "(" + group + ")" : group;
    if (l >= 1) {
      piece += "*q";
      if (l > 1) piece += "^" + std::to_string(l);
    }
    if (!out.empty()) out += " + ";
    out += piece;
  }
  return out;
}

HExpr chi_a(int n) {
  if (n < 0) throw std::invalid_argument("chi_a: n must be non-negative");
  static std::vector<HExpr> cache{HExpr::one()};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const int k = static_cast<int>(cache.size());
    HExpr chi = HExpr::h(k);
    for (int m = 2; m <= k; ++m) {
      // q + ... + q^{m-1}
      std::vector<Int> qc(static_cast<size_t>(m), Int(1));
      qc[0] = 0;
      const LPoly tail(std::move(qc));
      chi = chi + (HExpr::h(m) * cache[static_cast<size_t>(k - m)]).scaled(tail);
    }
    cache.push_back(std::move(chi));
  }
  return cache[static_cast<size_t>(n)];
}

namespace {

// contingency tables with given row and column sums, counted column by column
Int count_tables(std::vector<int> rows, const std::vector<int>& cols, size_t col_idx,
                 std::map<std::pair<std::vector<int>, size_t>, Int>& memo) {
  if (col_idx == cols.size()) {
    for (int r : rows)
      if (r != 0) return Int(0);
    return Int(1);
  }
  std::vector<int> key = rows;
  std::sort(key.begin(), key.end());
  const auto memo_key = std::make_pair(key, col_idx);
  // sorting the remaining row sums is sound because the count is symmetric
  // in the rows, but the memo must then be keyed on the sorted vector only
  auto it = memo.find(memo_key);
  if (it != memo.end()) return it->second;

  std::sort(rows.begin(), rows.end());
  const int target = cols[col_idx];
  Int total = 0;
  std::vector<int> entry(rows.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
    if (i + 1 == rows.size()) {
      if (remaining <= rows[i]) {
        std::vector<int> next = rows;
        for (size_t j = 0; j + 1 < rows.size(); ++j) next[j] -= entry[j];
        next[rows.size() - 1] -= remaining;
        total += count_tables(next, cols, col_idx + 1, memo);
      }
      return;
    }
    for (int e = 0; e <= std::min(rows[i], remaining); ++e) {
      entry[i] = e;
      rec(i + 1, remaining - e);
    }
  };
  if (!rows.empty()) {
    rec(0, target);
  } else if (target == 0) {
    total = count_tables(rows, cols, col_idx + 1, memo);
  }
  memo.emplace(memo_key, total);
  return total;
}

} // namespace

Int hall_pair(const Partition& mu, const Partition& nu) {
  if (mu.n() != nu.n()) return Int(0);
  if (mu.n() == 0) return Int(1);
  std::map<std::pair<std::vector<int>, size_t>, Int> memo;
  return count_tables(mu.parts, nu.parts, 0, memo);
}

LPoly hall_inner(const Partition& mu, const HExpr& x) {
  const int deg = x.homogeneous_degree();
  if (deg < 0 || deg != mu.n())
    throw std::invalid_argument("hall_inner: expression not homogeneous of matching degree");
  LPoly out;
  for (const auto& [mono, coeff] : x.terms()) {
    std::vector<int> nu = mono;
    const Int pairing = hall_pair(mu, Partition(nu));
    if (pairing != 0) out += coeff.scaled(pairing);
  }
  return out;
}

LPoly quotient_e(int r, const Partition& mu) {
  if (mu.n() != r) throw std::invalid_argument("quotient_e: mu must be a partition of r");
  return hall_inner(mu, chi_a(r));
}

LPoly component_e(const std::vector<std::pair<int, Partition>>& components) {
  LPoly out = LPoly::one();
  for (const auto& [rj, mu] : components) out *= quotient_e(rj, mu);
  return out;
}

} // namespace stringy
