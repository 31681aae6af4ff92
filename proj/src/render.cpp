#include "stringy/render.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace stringy {

namespace {

long long to_ll(const Int& x) {
  if (x > Int(std::numeric_limits<long long>::max()) ||
      x < Int(std::numeric_limits<long long>::min()))
    throw std::overflow_error("coefficient does not fit in a JSON integer");
  return x.convert_to<long long>();
}

nlohmann::json partition_json(const Partition& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int x : p.parts) arr.push_back(x);
  return arr;
}

} // namespace

nlohmann::json coeff_array(const LPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_ll(c));
  return arr;
}

LPoly lpoly_from_coeffs(const nlohmann::json& arr) {
  std::vector<Int> coeffs;
  for (const auto& v : arr) coeffs.push_back(Int(v.get<long long>()));
  return LPoly(std::move(coeffs));
}

nlohmann::json sector_to_json(const Sector& s) {
  nlohmann::json j;
  j["lambda"] = partition_json(s.lambda);
  nlohmann::json theta = nlohmann::json::array();
  for (const auto& t : s.theta.theta) theta.push_back(rat_to_string(t));
  j["theta"] = theta;
  j["rep"] = s.rep.one_line();
  j["m"] = s.m;
  nlohmann::json mus = nlohmann::json::array();
  for (const auto& [rj, mu] : s.components) mus.push_back(partition_json(mu));
  j["mu_list"] = mus;
  j["phi"] = s.phi;
  j["age"] = s.age;
  j["e_factor"] = coeff_array(s.e_factor);
  j["exponent"] = s.exponent;
  return j;
}

nlohmann::json stringy_to_json(const StringyResult& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["untwisted"] = coeff_array(r.untwisted);
  j["total"] = coeff_array(r.total);
  return j;
}

nlohmann::json sectors_to_json(const StringyResult& r) {
  nlohmann::json j;
  j["n"] = r.n;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : r.sectors) arr.push_back(sector_to_json(s));
  j["sectors"] = arr;
  j["untwisted"] = coeff_array(r.untwisted);
  j["total"] = coeff_array(r.total);
  return j;
}

std::string sectors_to_text(const StringyResult& r) {
  std::ostringstream os;
  os << "n = " << r.n << "\n";
  LPoly twisted;
  size_t i = 0;
  while (i < r.sectors.size()) {
    const Partition lambda = r.sectors[i].lambda;
    os << "lambda " << lambda.to_string() << "\n";
    LPoly lambda_total;
    while (i < r.sectors.size() && r.sectors[i].lambda == lambda) {
      const AngleType theta = r.sectors[i].theta;
      os << "  theta " << theta.to_string() << "\n";
      LPoly theta_total;
      while (i < r.sectors.size() && r.sectors[i].lambda == lambda &&
             r.sectors[i].theta == theta) {
        const Sector& s = r.sectors[i];
        os << "    p=" << s.rep.to_string() << " m=(";
        for (size_t k = 0; k < s.m.size(); ++k) {
          if (k) os << ",";
          os << s.m[k];
        }
        os << ") mu=[";
        for (size_t k = 0; k < s.components.size(); ++k) {
          if (k) os << ",";
          os << s.components[k].second.to_string();
        }
        os << "] phi=" << s.phi << " age=" << s.age << " exponent=" << s.exponent
           << " E=" << s.e_factor.to_text() << " sector=" << sector_polynomial(s).to_text()
           << "\n";
        theta_total += sector_polynomial(s);
        ++i;
      }
      os << "  subtotal theta " << theta.to_string() << ": " << theta_total.to_text() << "\n";
      lambda_total += theta_total;
    }
    os << "subtotal lambda " << lambda.to_string() << ": " << lambda_total.to_text() << "\n";
    twisted += lambda_total;
  }
  os << "twisted total: " << twisted.to_text() << "\n";
  os << "untwisted: " << r.untwisted.to_text() << "\n";
  os << "E_st: " << r.total.to_text() << "\n";
  return os.str();
}

nlohmann::json character_to_json(int n, const HExpr& chi) {
  nlohmann::json j;
  j["n"] = n;
  j["text"] = chi.to_text();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, coeff] : chi.terms()) {
    nlohmann::json t;
    t["h"] = mono;
    t["q_coeffs"] = coeff_array(coeff);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

nlohmann::json report_to_json(const CheckReport& rep) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& it : rep.items) {
    nlohmann::json j;
    j["name"] = it.name;
    j["pass"] = it.pass;
    if (!it.detail.empty()) j["detail"] = it.detail;
    arr.push_back(j);
  }
  return arr;
}

std::string report_to_text(const CheckReport& rep) {
  std::ostringstream os;
  for (const auto& it : rep.items) {
    os << (it.pass ? "PASS" : "FAIL") << "  " << it.name;
    if (!it.detail.empty()) os << "  (" << it.detail << ")";
    os << "\n";
  }
  os << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

nlohmann::json quotient_rows_to_json(const std::vector<QuotientCheckRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j;
    j["r"] = row.r;
    nlohmann::json mu = nlohmann::json::array();
    for (int x : row.mu.parts) mu.push_back(x);
    j["mu"] = mu;
    j["formula"] = coeff_array(row.formula);
    j["oracle"] = coeff_array(row.oracle);
    j["match"] = row.match;
    arr.push_back(j);
  }
  return arr;
}

std::string quotient_rows_to_text(const std::vector<QuotientCheckRow>& rows) {
  std::ostringstream os;
  bool all = true;
  for (const auto& row : rows) {
    os << (row.match ? "PASS" : "FAIL") << "  r=" << row.r << " mu=" << row.mu.to_string()
       << "  formula=" << row.formula.to_text() << "  oracle=" << row.oracle.to_text() << "\n";
    if (!row.match) all = false;
  }
  os << (all ? "all quotients agree" : "QUOTIENT MISMATCH") << "\n";
  return os.str();
}

} // namespace stringy
