#include "stringy/combinatorics.hpp"

#include "doctest.h"

#include <map>
#include <numeric>
#include <set>

using namespace stringy;

namespace {

Partition part(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

AngleType angles(std::initializer_list<Rat> t) {
  AngleType a;
  a.theta.assign(t);
  return a;
}

// independent count of partitions by the classical two-argument recursion
long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  if (n < 0 || max_part == 0) return 0;
  return partition_count(n - max_part, max_part) + partition_count(n, max_part - 1);
}

} // namespace

TEST_CASE("partitions in reverse-lexicographic order") {
  const auto ps = partitions_of(4);
  REQUIRE(ps.size() == 5);
  CHECK(ps[0] == part({4}));
  CHECK(ps[1] == part({3, 1}));
  CHECK(ps[2] == part({2, 2}));
  CHECK(ps[3] == part({2, 1, 1}));
  CHECK(ps[4] == part({1, 1, 1, 1}));
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(1)[0] == part({1}));
  CHECK(static_cast<long>(partitions_of(7).size()) == partition_count(7, 7));
  CHECK(partitions_of(7).size() == 15);
}

TEST_CASE("standard elements") {
  CHECK(standard_element(part({2, 1, 1})).one_line() == std::vector<int>{2, 1, 3, 4});
  CHECK(standard_element(part({1, 1, 1})).is_identity());
  CHECK(standard_element(part({3, 1})).one_line() == std::vector<int>{2, 3, 1, 4});
}

TEST_CASE("multiplicity partitions") {
  CHECK(lambda_multiplicity_partition(part({2, 1, 1})).to_string() == "{1},{2,3}");
  const std::vector<int> constant{7, 7, 7, 7};
  CHECK(multiplicity_partition(constant).blocks.size() == 1);
  CHECK(theta_multiplicity_partition(angles({Rat(0), Rat(1, 2), Rat(0)})).to_string() ==
        "{1,3},{2}");
}

TEST_CASE("adjacency counts runs") {
  CHECK(adjacency(std::vector<Rat>{Rat(1, 2), Rat(0), Rat(0)}) == std::vector<int>{1, 2, 2});
  CHECK(adjacency(std::vector<int>{5, 5, 5, 5}) == std::vector<int>{1, 1, 1, 1});
  CHECK(adjacency(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(0)}) == std::vector<int>{1, 2, 3});
}

TEST_CASE("component labels refine the angle partition") {
  const AngleType theta = angles({Rat(1, 2), Rat(0), Rat(0)});
  CHECK(multiplicity_partition(component_label(theta, Permutation::identity(3))).to_string() ==
        "{1},{2,3}");
  CHECK(multiplicity_partition(component_label(theta, Permutation::from_one_line({2, 1, 3})))
            .blocks.size() == 3);
  const AngleType flat = angles({Rat(0), Rat(0), Rat(0)});
  for (const auto& p : all_permutations(3))
    CHECK(multiplicity_partition(component_label(flat, p)).blocks.size() == 1);
}

TEST_CASE("standard angle types match the worked cases") {
  auto strings = [](const std::vector<AngleType>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(t.to_string());
    return out;
  };
  CHECK(strings(standard_angle_types(part({2, 1, 1}))) ==
        std::vector<std::string>{"(0,0,0)", "(1/2,0,0)"});
  CHECK(strings(standard_angle_types(part({2, 2}))) ==
        std::vector<std::string>{"(0,0)", "(0,1/2)", "(1/2,1/2)"});
  CHECK(strings(standard_angle_types(part({3, 1}))) ==
        std::vector<std::string>{"(0,0)", "(1/3,0)", "(2/3,0)"});
}

TEST_CASE("every multiplicity-group orbit contains exactly one standard angle type") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto group = lambda_multiplicity_partition(lambda).young_subgroup();
      for (const auto& theta : angle_types(lambda)) {
        int standard_in_orbit = 0;
        std::set<std::vector<Rat>> orbit;
        for (const auto& q : group) {
          AngleType moved;
          moved.theta.resize(theta.theta.size());
          for (int i = 0; i < lambda.r(); ++i)
            moved.theta[static_cast<size_t>(q(i))] = theta.theta[static_cast<size_t>(i)];
          if (orbit.insert(moved.theta).second && is_standard(lambda, moved))
            ++standard_in_orbit;
        }
        CHECK(standard_in_orbit == 1);
      }
    }
}

TEST_CASE("coset partition of the worked angle type") {
  const auto classes = coset_partition(angles({Rat(1, 2), Rat(0), Rat(0)}));
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].representative.one_line() == std::vector<int>{1, 2, 3});
  CHECK(classes[1].representative.one_line() == std::vector<int>{2, 1, 3});
  CHECK(classes[2].representative.one_line() == std::vector<int>{2, 3, 1});
  CHECK(classes[3].representative.one_line() == std::vector<int>{3, 1, 2});
  CHECK(classes[0].members.size() == 2);
  CHECK(classes[1].members.size() == 1);
}

TEST_CASE("constant and injective angle types give the extreme coset partitions") {
  CHECK(coset_partition(angles({Rat(0), Rat(0), Rat(0)})).size() == 1);
  const auto classes = coset_partition(angles({Rat(0), Rat(1, 3), Rat(2, 3)}));
  CHECK(classes.size() == 6);
  for (const auto& c : classes) CHECK(c.members.size() == 1);
}

TEST_CASE("coset classes partition the symmetric group") {
  // n = 7 brings length-6 partitions with nontrivial angle types
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.r() > 6) continue;
      long factorial = 1;
      for (int i = 2; i <= lambda.r(); ++i) factorial *= i;
      for (const auto& theta : angle_types(lambda)) {
        const auto classes = coset_partition(theta);
        long total = 0;
        std::set<std::vector<int>> seen;
        for (const auto& c : classes) {
          total += static_cast<long>(c.members.size());
          CHECK(c.members.size() == c.stabilizer_partition.young_subgroup().size());
          for (const auto& m : c.members) CHECK(seen.insert(m.img).second);
        }
        CHECK(total == factorial);
      }
    }
}

TEST_CASE("class membership preserves the stabilizer partition") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.r() > 5) continue;
      for (const auto& theta : angle_types(lambda))
        for (const auto& cls : coset_partition(theta))
          for (const auto& member : cls.members)
            CHECK(multiplicity_partition(component_label(theta, member)) ==
                  cls.stabilizer_partition);
    }
}

TEST_CASE("reduced representatives of the worked cases") {
  {
    const auto reduced = reduced_representatives(part({2, 1, 1}), angles({Rat(1, 2), Rat(0), Rat(0)}));
    REQUIRE(reduced.size() == 3);
    CHECK(reduced[0].representative.one_line() == std::vector<int>{1, 2, 3});
    CHECK(reduced[1].representative.one_line() == std::vector<int>{2, 1, 3});
    CHECK(reduced[2].representative.one_line() == std::vector<int>{2, 3, 1});
  }
  CHECK(reduced_representatives(part({2, 1, 1}), angles({Rat(0), Rat(0), Rat(0)})).size() == 1);
  CHECK(reduced_representatives(part({2, 2}), angles({Rat(0), Rat(1, 2)})).size() == 2);
}

TEST_CASE("young intersections") {
  const SetPartition a({{0}, {1, 2}});
  const SetPartition whole({{0, 1, 2}});
  CHECK(a.refine_with(whole) == a);
  const SetPartition p({{0, 1}, {2, 3}});
  const SetPartition q({{0, 2}, {1, 3}});
  CHECK(p.refine_with(q).blocks.size() == 4);
  CHECK(a.refine_with(a) == a);
  // commutative and associative on a small exhaustive family
  const std::vector<SetPartition> fam{
      SetPartition({{0, 1, 2}}), SetPartition({{0}, {1, 2}}), SetPartition({{0, 1}, {2}}),
      SetPartition({{0, 2}, {1}}), SetPartition({{0}, {1}, {2}})};
  for (const auto& x : fam)
    for (const auto& y : fam) {
      CHECK(x.refine_with(y) == y.refine_with(x));
      for (const auto& z : fam)
        CHECK(x.refine_with(y).refine_with(z) == x.refine_with(y.refine_with(z)));
    }
  // the Young subgroup of the refinement is the intersection of the groups
  for (const auto& x : fam)
    for (const auto& y : fam) {
      std::set<std::vector<int>> gx, gy, gmeet;
      for (const auto& g : x.young_subgroup()) gx.insert(g.img);
      for (const auto& g : y.young_subgroup()) gy.insert(g.img);
      for (const auto& g : x.refine_with(y).young_subgroup()) gmeet.insert(g.img);
      std::set<std::vector<int>> expect;
      for (const auto& g : gx)
        if (gy.count(g)) expect.insert(g);
      CHECK(gmeet == expect);
    }
}

TEST_CASE("component partition types of the worked cases") {
  {
    const auto comps =
        component_partition_types(part({2, 1, 1}), angles({Rat(0), Rat(0), Rat(0)}),
                                  Permutation::identity(3));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].first == 3);
    CHECK(comps[0].second == part({2, 1}));
  }
  {
    const auto comps = component_partition_types(part({2, 2}), angles({Rat(0), Rat(0)}),
                                                 Permutation::identity(2));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].first == 2);
    CHECK(comps[0].second == part({2}));
  }
  {
    const auto comps = component_partition_types(part({3, 2, 1}),
                                                 angles({Rat(1, 3), Rat(0), Rat(1, 2)}),
                                                 Permutation::identity(3));
    REQUIRE(comps.size() == 3);
    for (const auto& [rj, mu] : comps) {
      CHECK(rj == 1);
      CHECK(mu == part({1}));
    }
  }
}

TEST_CASE("component sizes always add up") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& theta : standard_angle_types(lambda))
        for (const auto& p : all_permutations(lambda.r())) {
          const auto comps = component_partition_types(lambda, theta, p);
          int total = 0;
          for (const auto& [rj, mu] : comps) {
            CHECK(mu.n() == rj);
            total += rj;
          }
          CHECK(total == lambda.r());
        }
}
