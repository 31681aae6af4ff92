#include "stringy/stringy_e.hpp"

#include <future>
#include <stdexcept>

namespace stringy {

LPoly untwisted_e(int n) {
  if (n < 1) throw std::invalid_argument("untwisted_e: n must be positive");
  const LPoly one_plus_l = LPoly::one() + LPoly::var();
  return one_plus_l.pow(static_cast<unsigned>(n - 1)).shifted(n + 2);
}

StringyResult stringy_e(int n, bool parallel) {
  if (n < 2) throw std::invalid_argument("stringy_e: n must be at least 2");
  StringyResult res;
  res.n = n;
  res.untwisted = untwisted_e(n);

  if (!parallel) {
    res.sectors = enumerate_sectors(n);
  } else {
    std::vector<std::pair<Partition, AngleType>> groups;
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.r() == n) continue;
      for (const auto& theta : standard_angle_types(lambda))
        groups.emplace_back(lambda, theta);
    }
    std::vector<std::future<std::vector<Sector>>> jobs;
    jobs.reserve(groups.size());
    for (const auto& [lambda, theta] : groups)
      jobs.push_back(std::async(std::launch::async, [lambda, theta]() {
        std::vector<Sector> part;
        for (const auto& cls : reduced_representatives(lambda, theta))
          part.push_back(make_sector(lambda, theta, cls.representative));
        return part;
      }));
    for (auto& job : jobs)
      for (auto& s : job.get()) res.sectors.push_back(std::move(s));
  }

  res.total = res.untwisted;
  for (const auto& s : res.sectors) res.total += sector_polynomial(s);
  return res;
}

std::vector<std::pair<int, LPoly>> generating_table(int n_max) {
  if (n_max < 2) throw std::invalid_argument("generating_table: n_max must be at least 2");
  std::vector<std::pair<int, LPoly>> rows;
  for (int n = 2; n <= n_max; ++n) rows.emplace_back(n, stringy_e(n).total);
  return rows;
}

} // namespace stringy
