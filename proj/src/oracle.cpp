#include "stringy/oracle.hpp"

#include "stringy/combinatorics.hpp"
#include "stringy/sectors.hpp"
#include "stringy/symfun.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stringy {

GroupOnFan young_group_on_fan(int r, const Partition& mu) {
  if (mu.n() != r) throw std::invalid_argument("young_group_on_fan: mu must partition r");
  std::vector<std::vector<int>> blocks;
  int start = 0;
  for (int part : mu.parts) {
    std::vector<int> b;
    for (int i = 0; i < part; ++i) b.push_back(start + i);
    blocks.push_back(std::move(b));
    start += part;
  }
  GroupOnFan g{CoxeterFan(r), SetPartition(blocks).young_subgroup()};
  return g;
}

namespace {

LPoly orbit_trace(const CoxeterFan& fan, const IntMat& g_on_m, const Cone& cone) {
  IntMat gens(fan.ambient(), static_cast<int>(cone.rays().size()));
  for (int j = 0; j < gens.cols(); ++j)
    for (int i = 0; i < gens.rows(); ++i)
      gens.at(i, j) = cone.rays()[static_cast<size_t>(j)][static_cast<size_t>(i)];
  const IntMat charlat = kernel(gens.transpose());
  const IntMat restricted = restrict_action(g_on_m, charlat);
  return restricted.char_poly();
}

} // namespace

LPoly equivariant_e(const CoxeterFan& fan, const IntMat& g) {
  if (g.rows() != fan.ambient() || g.cols() != fan.ambient())
    throw std::invalid_argument("equivariant_e: matrix has wrong size");
  const std::vector<Vec> rays = fan.rays();
  std::set<Vec> ray_set(rays.begin(), rays.end());
  std::set<Vec> image_set;
  for (const auto& r : rays) {
    Vec img = primitive(g.apply(r));
    if (!ray_set.count(img))
      throw std::invalid_argument("equivariant_e: matrix does not stabilize the fan");
    image_set.insert(std::move(img));
  }
  if (image_set.size() != ray_set.size())
    throw std::invalid_argument("equivariant_e: matrix does not stabilize the fan");

  // dual action on the character lattice
  const IntMat g_on_m = g.inverse_unimodular().transpose();

  LPoly total;
  for (const auto& osp : fan.cones()) {
    const auto gens = fan.generators(osp);
    std::set<Vec> gen_set(gens.begin(), gens.end());
    bool stable = true;
    for (const auto& v : gens)
      if (!gen_set.count(primitive(g.apply(v)))) { stable = false; break; }
    if (!stable) continue;
    total += orbit_trace(fan, g_on_m, fan.cone_of(osp));
  }
  return total;
}

LPoly equivariant_e(const CoxeterFan& fan, const Permutation& w) {
  if (w.degree() != fan.r())
    throw std::invalid_argument("equivariant_e: permutation degree mismatch");
  if (fan.ambient() == 0) return LPoly::one();
  return equivariant_e(fan, fan.action_matrix(w));
}

LPoly burnside_quotient_e(const GroupOnFan& group) {
  QPoly sum;
  for (const auto& w : group.elements) sum += QPoly(equivariant_e(group.fan, w));
  const Rat inv(Int(1), Int(static_cast<long>(group.elements.size())));
  return sum.scaled(inv).to_lpoly();
}

std::vector<QuotientCheckRow> crosscheck_quotients(int r_max) {
  std::vector<QuotientCheckRow> rows;
  for (int r = 1; r <= r_max; ++r)
    for (const auto& mu : partitions_of(r)) {
      QuotientCheckRow row;
      row.r = r;
      row.mu = mu;
      row.formula = quotient_e(r, mu);
      row.oracle = burnside_quotient_e(young_group_on_fan(r, mu));
      row.match = row.formula == row.oracle;
      rows.push_back(std::move(row));
    }
  return rows;
}

CheckReport crosscheck_report(int r_max) {
  CheckReport rep;
  for (const auto& row : crosscheck_quotients(r_max))
    rep.add("quotient E for r=" + std::to_string(row.r) + " mu=" + row.mu.to_string(),
            row.match,
            "formula " + row.formula.to_text() + ", oracle " + row.oracle.to_text());
  return rep;
}

namespace {

// Braid-lattice data of one Coxeter cone: its chain of proper prefix
// subsets (as bitmasks) and a basis of the character lattice of its orbit
// inside M = {m in Z^r : sum m_i = 0}.
struct BraidCone {
  OrderedSetPartition osp;
  std::vector<unsigned> chain;       // strictly increasing masks
  IntMat charlat;                    // r x (r - k) basis columns
  Permutation chamber;               // some chamber containing the cone
};

std::vector<BraidCone> braid_cones(int r) {
  std::vector<BraidCone> out;
  for (const auto& osp : ordered_set_partitions(r)) {
    BraidCone bc;
    bc.osp = osp;
    unsigned mask = 0;
    std::vector<Vec> eqs;
    eqs.push_back(Vec(static_cast<size_t>(r), Int(1)));
    std::vector<int> chamber_order;
    for (int j = 0; j < osp.k(); ++j) {
      for (int x : osp.blocks[static_cast<size_t>(j)]) {
        mask |= (1u << x);
        chamber_order.push_back(x);
      }
      if (j + 1 < osp.k()) {
        bc.chain.push_back(mask);
        Vec ind(static_cast<size_t>(r), Int(0));
        for (int x = 0; x < r; ++x)
          if (mask & (1u << x)) ind[static_cast<size_t>(x)] = 1;
        eqs.push_back(std::move(ind));
      }
    }
    IntMat e(static_cast<int>(eqs.size()), r);
    for (size_t i = 0; i < eqs.size(); ++i)
      for (int j = 0; j < r; ++j) e.at(static_cast<int>(i), j) = eqs[i][static_cast<size_t>(j)];
    bc.charlat = kernel(e);
    bc.chamber = Permutation(chamber_order);
    out.push_back(std::move(bc));
  }
  return out;
}

bool chain_subset(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  for (unsigned m : a)
    if (std::find(b.begin(), b.end(), m) == b.end()) return false;
  return true;
}

} // namespace

LPoly twisted_sector_oracle(int n) {
  if (n < 2) throw std::invalid_argument("twisted_sector_oracle: n must be at least 2");
  QPoly total;
  for (const auto& lambda : partitions_of(n)) {
    const int r = lambda.r();
    if (r == n) continue;
    const auto cones = braid_cones(r);
    const auto group = lambda_multiplicity_partition(lambda).young_subgroup();
    const Rat inv(Int(1), Int(static_cast<long>(group.size())));

    // permutation matrices on Z^r; the induced action on M is by the same
    // matrix since permutation matrices are orthogonal
    std::vector<IntMat> mats;
    mats.reserve(group.size());
    for (const auto& q : group) mats.push_back(q.to_matrix());

    QPoly lambda_sum;
    for (const auto& theta : angle_types(lambda)) {
      // fixed orbits: every character of the orbit torus must pair
      // integrally with theta
      std::vector<char> fixed(cones.size(), 0);
      for (size_t ci = 0; ci < cones.size(); ++ci) {
        bool ok = true;
        const IntMat& k = cones[ci].charlat;
        for (int j = 0; j < k.cols() && ok; ++j) {
          Rat pairing(0);
          for (int i = 0; i < r; ++i) pairing += Rat(k.at(i, j)) * theta.theta[static_cast<size_t>(i)];
          if (den(pairing) != 1) ok = false;
        }
        fixed[ci] = ok ? 1 : 0;
      }

      // exponent of the component of each fixed cone, read off the least
      // fixed face below it; the fixed locus is a disjoint union of such
      // closures, so the least face must exist
      std::vector<int> comp_exponent(cones.size(), 0);
      for (size_t ci = 0; ci < cones.size(); ++ci) {
        if (!fixed[ci]) continue;
        int least = -1;
        for (size_t fj = 0; fj < cones.size(); ++fj) {
          if (!fixed[fj] || !chain_subset(cones[fj].chain, cones[ci].chain)) continue;
          if (least < 0 || chain_subset(cones[fj].chain, cones[static_cast<size_t>(least)].chain))
            least = static_cast<int>(fj);
        }
        for (size_t fj = 0; fj < cones.size(); ++fj)
          if (fixed[fj] && chain_subset(cones[fj].chain, cones[ci].chain) &&
              !chain_subset(cones[static_cast<size_t>(least)].chain, cones[fj].chain))
            throw std::logic_error("twisted_sector_oracle: fixed components overlap");
        const Permutation& p = cones[static_cast<size_t>(least)].chamber;
        comp_exponent[ci] = fiber_rank(theta, p) + r + age(lambda, theta, p);
      }

      for (size_t qi = 0; qi < group.size(); ++qi) {
        const Permutation& q = group[qi];
        bool theta_fixed = true;
        for (int i = 0; i < r && theta_fixed; ++i)
          if (theta.theta[static_cast<size_t>(q(i))] != theta.theta[static_cast<size_t>(i)])
            theta_fixed = false;
        if (!theta_fixed) continue;
        for (size_t ci = 0; ci < cones.size(); ++ci) {
          if (!fixed[ci]) continue;
          bool stable = true;
          for (const auto& block : cones[ci].osp.blocks) {
            std::vector<int> img;
            for (int x : block) img.push_back(q(x));
            std::sort(img.begin(), img.end());
            if (img != block) { stable = false; break; }
          }
          if (!stable) continue;
          const IntMat restricted = restrict_action(mats[qi], cones[ci].charlat);
          lambda_sum.add_scaled(restricted.char_poly().shifted(comp_exponent[ci]), Rat(1));
        }
      }
    }
    total += lambda_sum.scaled(inv);
  }
  return total.to_lpoly();
}

} // namespace stringy
