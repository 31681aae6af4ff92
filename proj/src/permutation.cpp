#include "stringy/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stringy {

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
  std::vector<char> seen(img.size(), 0);
  for (int v : img) {
    if (v < 0 || v >= static_cast<int>(img.size()) || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: not a bijection");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int r) {
  std::vector<int> v(static_cast<size_t>(r));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
  std::vector<int> v;
  v.reserve(one_based.size());
  for (int x : one_based) v.push_back(x - 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img.size());
  for (size_t i = 0; i < img.size(); ++i) v[static_cast<size_t>(img[i])] = static_cast<int>(i);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> v;
  v.reserve(img.size());
  for (int x : img) v.push_back(x + 1);
  return v;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img[i] + 1);
  }
  return s + "]";
}

IntMat Permutation::to_matrix() const {
  IntMat m(degree(), degree());
  for (int j = 0; j < degree(); ++j) m.at(img[static_cast<size_t>(j)], j) = 1;
  return m;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(img.size(), 0);
  std::vector<int> cycles;
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<size_t>(img[j]);
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

Permutation compose(const Permutation& q, const Permutation& p) {
  if (q.degree() != p.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> v(p.img.size());
  for (size_t i = 0; i < p.img.size(); ++i) v[i] = q.img[static_cast<size_t>(p.img[i])];
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int r) {
  std::vector<int> v(static_cast<size_t>(r));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation standard_element(const Partition& lambda) {
  const int n = lambda.n();
  std::vector<int> v(static_cast<size_t>(n));
  int start = 0;
  for (int part : lambda.parts) {
    for (int i = 0; i < part; ++i)
      v[static_cast<size_t>(start + i)] = start + (i + 1) % part;
    start += part;
  }
  return Permutation(std::move(v));
}

} // namespace stringy
