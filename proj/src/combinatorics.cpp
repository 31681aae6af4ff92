#include "stringy/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stringy {

bool AngleType::is_zero() const {
  for (const auto& t : theta)
    if (t != 0) return false;
  return true;
}

std::string AngleType::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < theta.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(theta[i]);
  }
  return s + ")";
}

std::vector<AngleType> angle_types(const Partition& lambda) {
  std::vector<AngleType> out;
  AngleType cur;
  cur.theta.assign(static_cast<size_t>(lambda.r()), Rat(0));
  std::function<void(int)> rec = [&](int j) {
    if (j == lambda.r()) {
      out.push_back(cur);
      return;
    }
    const int lam = lambda.parts[static_cast<size_t>(j)];
    for (int a = 0; a < lam; ++a) {
      cur.theta[static_cast<size_t>(j)] = Rat(a, lam);
      rec(j + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

SetPartition lambda_multiplicity_partition(const Partition& lambda) {
  return multiplicity_partition(lambda.parts);
}

SetPartition theta_multiplicity_partition(const AngleType& theta) {
  return multiplicity_partition(theta.theta);
}

bool is_standard(const Partition& lambda, const AngleType& theta) {
  if (lambda.r() != theta.r()) throw std::invalid_argument("is_standard: length mismatch");
  const SetPartition m = lambda_multiplicity_partition(lambda);
  for (const auto& block : m.blocks)
    for (size_t i = 1; i < block.size(); ++i)
      if (theta.theta[static_cast<size_t>(block[i - 1])] > theta.theta[static_cast<size_t>(block[i])])
        return false;
  return true;
}

std::vector<AngleType> standard_angle_types(const Partition& lambda) {
  std::vector<AngleType> out;
  for (auto& t : angle_types(lambda))
    if (is_standard(lambda, t)) out.push_back(std::move(t));
  return out;
}

std::vector<int> component_label(const AngleType& theta, const Permutation& p) {
  if (theta.r() != p.degree())
    throw std::invalid_argument("component_label: degree mismatch");
  const int r = theta.r();
  std::vector<Rat> composed(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) composed[static_cast<size_t>(j)] = theta.theta[static_cast<size_t>(p(j))];
  const std::vector<int> adj = adjacency(composed);
  const Permutation pinv = p.inverse();
  std::vector<int> out(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) out[static_cast<size_t>(i)] = adj[static_cast<size_t>(pinv(i))];
  return out;
}

std::vector<CosetClass> coset_partition(const AngleType& theta) {
  const int r = theta.r();
  const auto all = all_permutations(r);
  std::map<std::vector<int>, int> index_of;
  for (size_t i = 0; i < all.size(); ++i) index_of[all[i].img] = static_cast<int>(i);

  std::vector<int> assigned(all.size(), -1);
  std::vector<CosetClass> out;
  for (size_t i = 0; i < all.size(); ++i) {
    if (assigned[i] >= 0) continue;
    const Permutation& p = all[i];
    CosetClass cls;
    cls.stabilizer_partition = multiplicity_partition(component_label(theta, p));
    for (const auto& q : cls.stabilizer_partition.young_subgroup()) {
      Permutation member = compose(q, p);
      assigned[static_cast<size_t>(index_of.at(member.img))] = static_cast<int>(out.size());
      cls.members.push_back(std::move(member));
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    out.push_back(std::move(cls));
  }
  // all_permutations is lexicographic, so classes already come out ordered
  // by representative; keep that contract explicit.
  std::sort(out.begin(), out.end(), [](const CosetClass& a, const CosetClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

namespace {

std::vector<CosetClass> reduce_classes(
    const Partition& lambda, const AngleType& theta,
    const std::function<size_t(size_t)>* pick_class,
    const std::function<size_t(size_t)>* pick_member) {
  std::vector<CosetClass> classes = coset_partition(theta);
  std::map<std::vector<int>, int> class_of;
  for (size_t c = 0; c < classes.size(); ++c)
    for (const auto& m : classes[c].members) class_of[m.img] = static_cast<int>(c);

  const SetPartition common =
      lambda_multiplicity_partition(lambda).refine_with(theta_multiplicity_partition(theta));
  const auto group = common.young_subgroup();

  std::vector<char> done(classes.size(), 0);
  std::vector<CosetClass> out;
  for (size_t c = 0; c < classes.size(); ++c) {
    if (done[c]) continue;
    std::vector<size_t> orbit;
    for (const auto& q : group) {
      const Permutation moved = compose(q, classes[c].representative);
      orbit.push_back(static_cast<size_t>(class_of.at(moved.img)));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (size_t idx : orbit) done[idx] = 1;
    // orbit members are sorted by class index = by representative, so the
    // first one carries the lexicographically least one-line form
    const size_t chosen = pick_class ? orbit[(*pick_class)(orbit.size()) % orbit.size()] : orbit.front();
    CosetClass cls = classes[chosen];
    if (pick_member)
      cls.representative = cls.members[(*pick_member)(cls.members.size()) % cls.members.size()];
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const CosetClass& a, const CosetClass& b) {
    return a.members.front() < b.members.front();
  });
  return out;
}

} // namespace

std::vector<CosetClass> reduced_representatives(const Partition& lambda,
                                                const AngleType& theta) {
  return reduce_classes(lambda, theta, nullptr, nullptr);
}

std::vector<CosetClass> reduced_representatives_with_picker(
    const Partition& lambda, const AngleType& theta,
    const std::function<size_t(size_t)>& pick_index) {
  return reduce_classes(lambda, theta, &pick_index, &pick_index);
}

std::vector<std::pair<int, Partition>> component_partition_types(
    const Partition& lambda, const AngleType& theta, const Permutation& p) {
  const SetPartition mtp = multiplicity_partition(component_label(theta, p));
  const SetPartition common = lambda_multiplicity_partition(lambda).refine_with(mtp);
  std::vector<std::pair<int, Partition>> out;
  for (const auto& block : mtp.blocks) {
    std::vector<int> mu;
    for (const auto& sub : common.blocks) {
      // common refines mtp, so each sub-block lies in exactly one block
      if (std::find(block.begin(), block.end(), sub.front()) != block.end())
        mu.push_back(static_cast<int>(sub.size()));
    }
    std::sort(mu.rbegin(), mu.rend());
    out.emplace_back(static_cast<int>(block.size()), Partition(mu));
  }
  return out;
}

} // namespace stringy
