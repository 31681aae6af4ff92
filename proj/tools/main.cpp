#include "stringy/models.hpp"
#include "stringy/oracle.hpp"
#include "stringy/render.hpp"
#include "stringy/stringy_e.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace stringy;

int max_n_bound() {
  if (const char* env = std::getenv("STRINGY_MAX_N")) {
    const int v = std::atoi(env);
    if (v > 8) return v;
  }
  return 8;
}

// 0 ok, 1 failed checks, 2 usage
struct Output {
  std::string text;
  int exit_code = 0;
};

void emit(const Output& out, const std::string& path) {
  if (path.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream f(path);
    f << out.text;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"stringy E-polynomials of relative symmetric products of a "
               "double-point surface degeneration"};
  app.require_subcommand(1);

  int n = 0, r = 0, n_max = 0;
  std::string format = "text";
  std::string out_path;
  bool parallel = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out_path, "write output to a file");
  };

  CLI::App* compute = app.add_subcommand("compute", "stringy E-polynomial for one n");
  compute->add_option("--n", n, "number of points")->required();
  compute->add_flag("--parallel", parallel, "evaluate sector groups concurrently");
  add_common(compute);

  CLI::App* sectors_cmd = app.add_subcommand("sectors", "twisted-sector table for one n");
  sectors_cmd->add_option("--n", n, "number of points")->required();
  sectors_cmd->add_flag("--parallel", parallel, "evaluate sector groups concurrently");
  add_common(sectors_cmd);

  CLI::App* character = app.add_subcommand("character", "graded character of the Coxeter variety cohomology");
  character->add_option("--n", n, "degree")->required();
  add_common(character);

  CLI::App* fan_check = app.add_subcommand("fan-check", "structural fan verifications");
  fan_check->add_option("--n", n, "number of points")->required();
  add_common(fan_check);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Burnside oracle vs character formula");
  oracle_cmd->add_option("--r", r, "rank bound")->required();
  add_common(oracle_cmd);

  CLI::App* table = app.add_subcommand("table", "stringy E-polynomials for 2..n-max");
  table->add_option("--n-max", n_max, "largest n")->required();
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool json = format == "json";
  Output out;
  try {
    if (compute->parsed()) {
      if (n < 2 || n > max_n_bound()) {
        std::cerr << "compute: --n must be between 2 and " << max_n_bound() << "\n";
        return 2;
      }
      const StringyResult res = stringy_e(n, parallel);
      out.text = json ? stringy_to_json(res).dump() + "\n" : res.total.to_text() + "\n";
    } else if (sectors_cmd->parsed()) {
      if (n < 2 || n > max_n_bound()) {
        std::cerr << "sectors: --n must be between 2 and " << max_n_bound() << "\n";
        return 2;
      }
      const StringyResult res = stringy_e(n, parallel);
      out.text = json ? sectors_to_json(res).dump() + "\n" : sectors_to_text(res);
    } else if (character->parsed()) {
      if (n < 1 || n > 12) {
        std::cerr << "character: --n must be between 1 and 12\n";
        return 2;
      }
      const HExpr chi = chi_a(n);
      out.text = json ? character_to_json(n, chi).dump() + "\n" : chi.to_text() + "\n";
    } else if (fan_check->parsed()) {
      if (n < 2 || n > 6) {
        std::cerr << "fan-check: --n must be between 2 and 6\n";
        return 2;
      }
      const CheckReport rep = fan_suite(n);
      if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["checks"] = report_to_json(rep);
        if (n <= 4)
          j["fan"] = nlohmann::json::parse(build_small_resolution_fan(n).to_json());
        out.text = j.dump() + "\n";
      } else {
        out.text = report_to_text(rep);
      }
      out.exit_code = rep.all_pass() ? 0 : 1;
    } else if (oracle_cmd->parsed()) {
      if (r < 1 || r > 5) {
        std::cerr << "oracle: --r must be between 1 and 5\n";
        return 2;
      }
      const auto rows = crosscheck_quotients(r);
      bool all = true;
      for (const auto& row : rows)
        if (!row.match) all = false;
      out.text = json ? quotient_rows_to_json(rows).dump() + "\n" : quotient_rows_to_text(rows);
      out.exit_code = all ? 0 : 1;
    } else if (table->parsed()) {
      if (n_max < 2 || n_max > max_n_bound()) {
        std::cerr << "table: --n-max must be between 2 and " << max_n_bound() << "\n";
        return 2;
      }
      const auto rows = generating_table(n_max);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [nn, poly] : rows) {
          nlohmann::json j;
          j["n"] = nn;
          j["total"] = coeff_array(poly);
          arr.push_back(j);
        }
        out.text = arr.dump() + "\n";
      } else {
        std::string s;
        for (const auto& [nn, poly] : rows)
          s += "n=" + std::to_string(nn) + ": " + poly.to_text() + "\n";
        out.text = s;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  emit(out, out_path);
  return out.exit_code;
}
