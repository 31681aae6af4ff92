#include "stringy/sectors.hpp"

#include "stringy/symfun.hpp"

#include <random>
#include <stdexcept>

namespace stringy {

int fiber_rank(const AngleType& theta, const Permutation& p) {
  if (theta.r() != p.degree()) throw std::invalid_argument("fiber_rank: degree mismatch");
  const int r = p.degree();
  int count = 0;
  if (theta.theta[static_cast<size_t>(p(0))] == 0) ++count;
  if (theta.theta[static_cast<size_t>(p(r - 1))] == 0) ++count;
  return count;
}

Rat age_rational(const Partition& lambda, const AngleType& theta, const Permutation& p) {
  const int r = lambda.r();
  if (theta.r() != r || p.degree() != r) throw std::invalid_argument("age: degree mismatch");
  Rat a(lambda.n() - r);
  for (int j = 0; j + 1 < r; ++j)
    a += frac(theta.theta[static_cast<size_t>(p(j))] - theta.theta[static_cast<size_t>(p(j + 1))]);
  a += frac(Rat(1) - theta.theta[static_cast<size_t>(p(0))]);
  a += theta.theta[static_cast<size_t>(p(r - 1))];
  return a;
}

int age(const Partition& lambda, const AngleType& theta, const Permutation& p) {
  const Rat a = age_rational(lambda, theta, p);
  if (den(a) != 1)
    throw std::domain_error("age: non-integral value " + rat_to_string(a) +
                            " for lambda=" + lambda.to_string() +
                            " theta=" + theta.to_string() + " p=" + p.to_string());
  return static_cast<int>(num(a));
}

LPoly sector_polynomial(const Sector& s) { return s.e_factor.shifted(s.exponent); }

Sector make_sector(const Partition& lambda, const AngleType& theta,
                   const Permutation& rep) {
  Sector s;
  s.lambda = lambda;
  s.theta = theta;
  s.rep = rep;
  s.m = multiplicity_partition(component_label(theta, rep)).sizes();
  s.components = component_partition_types(lambda, theta, rep);
  s.phi = fiber_rank(theta, rep);
  s.age = age(lambda, theta, rep);
  s.e_factor = component_e(s.components);
  s.exponent = s.phi + lambda.r() + s.age;
  return s;
}

namespace {

template <typename ClassProvider>
std::vector<Sector> enumerate_impl(int n, ClassProvider classes_for) {
  if (n < 2) throw std::invalid_argument("enumerate_sectors: n must be at least 2");
  std::vector<Sector> out;
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.r() == n) continue; // (1^n) carries the untwisted sector
    for (const auto& theta : standard_angle_types(lambda))
      for (const auto& cls : classes_for(lambda, theta))
        out.push_back(make_sector(lambda, theta, cls.representative));
  }
  return out;
}

} // namespace

std::vector<Sector> enumerate_sectors(int n) {
  return enumerate_impl(n, [](const Partition& lambda, const AngleType& theta) {
    return reduced_representatives(lambda, theta);
  });
}

std::vector<Sector> enumerate_sectors_randomized(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return enumerate_impl(n, [&rng](const Partition& lambda, const AngleType& theta) {
    auto pick = [&rng](size_t size) -> size_t {
      std::uniform_int_distribution<size_t> dist(0, size - 1);
      return dist(rng);
    };
    return reduced_representatives_with_picker(lambda, theta, pick);
  });
}

} // namespace stringy
