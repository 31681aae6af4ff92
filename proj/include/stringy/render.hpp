#pragma once

#include "stringy/oracle.hpp"
#include "stringy/report.hpp"
#include "stringy/sectors.hpp"
#include "stringy/stringy_e.hpp"
#include "stringy/symfun.hpp"

#include "json.hpp"

#include <string>

namespace stringy {

nlohmann::json coeff_array(const LPoly& p);          // ascending coefficients
LPoly lpoly_from_coeffs(const nlohmann::json& arr);

nlohmann::json sector_to_json(const Sector& s);
nlohmann::json stringy_to_json(const StringyResult& r);
nlohmann::json sectors_to_json(const StringyResult& r);
std::string sectors_to_text(const StringyResult& r);

nlohmann::json character_to_json(int n, const HExpr& chi);

nlohmann::json report_to_json(const CheckReport& rep);
std::string report_to_text(const CheckReport& rep);

nlohmann::json quotient_rows_to_json(const std::vector<QuotientCheckRow>& rows);
std::string quotient_rows_to_text(const std::vector<QuotientCheckRow>& rows);

} // namespace stringy
