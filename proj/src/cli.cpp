#include "cmtheta/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <sstream>

#include "cmtheta/combinatorics.hpp"
#include "cmtheta/ecoef.hpp"
#include "cmtheta/genus5.hpp"
#include "cmtheta/jacobian.hpp"
#include "cmtheta/prym.hpp"
#include "cmtheta/serialize.hpp"
#include "cmtheta/series.hpp"

namespace cmtheta::cli {

namespace {

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  return Format::Json;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += sep;
    s += parts[i];
  }
  return s;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string s = join(header, ",") + "\n";
  for (const auto& row : rows) s += join(row, ",") + "\n";
  return s;
}

std::vector<long> parse_long_list(const std::string& text, const char* what) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

std::string plus_join(const std::vector<long>& v) {
  std::vector<std::string> parts;
  for (long x : v) parts.push_back(std::to_string(x));
  return join(parts, "+");
}

std::string plus_join(const std::vector<int>& v) {
  std::vector<std::string> parts;
  for (int x : v) parts.push_back(std::to_string(x));
  return join(parts, "+");
}

std::string poly_text(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (long i = 0; i <= p.degree(); ++i) {
    const Int c = p.coefficient(i);
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Int a = abs(c);
    if (i == 0) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + "*";
      s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

std::string class_text(const ThetaClass& c) {
  if (c.is_zero()) return "0";
  std::string s;
  for (int r = 0; r <= c.g(); ++r) {
    const Rat& v = c.coefficient(r);
    if (v == 0) continue;
    if (!s.empty()) s += v < 0 ? " - " : " + ";
    else if (v < 0) s += "-";
    const Rat a = abs(v);
    if (a != 1) s += to_string(a) + "*";
    s += "w" + std::to_string(r);
  }
  return s;
}

CurveCase parse_case(const std::string& name) {
  return name == "hyp" ? CurveCase::Hyperelliptic : CurveCase::NonHyperelliptic;
}

struct ChiRow {
  PrymLocus locus;
  ChiVerdict chi;
  bool matches;
};

ChiRow make_chi_row(const PrymLocus& locus) {
  return ChiRow{locus, euler_characteristic(locus), matches_jacobian_dimension(locus)};
}

std::string chi_value_string(const ChiVerdict& chi) {
  return chi.tag == ChiTag::ExternalReference ? "" : to_string(chi.value);
}

Json chi_row_json(const ChiRow& row) {
  return Json{{"locus", to_json(row.locus)},
              {"k", row.locus.k()},
              {"chi", to_json(row.chi)},
              {"matches_jacobian", row.matches}};
}

std::vector<std::string> chi_row_csv(const ChiRow& row) {
  return {std::to_string(row.locus.g()), row.locus.label(), std::to_string(row.locus.k()),
          to_string(row.chi.tag), chi_value_string(row.chi), row.matches ? "true" : "false"};
}

std::string chi_row_text(const ChiRow& row) {
  std::string s = "locus " + row.locus.label() + " (g=" + std::to_string(row.locus.g()) +
                  ", k=" + std::to_string(row.locus.k()) + "): chi ";
  switch (row.chi.tag) {
    case ChiTag::Exact: s += "= " + to_string(row.chi.value); break;
    case ChiTag::GreaterThan: s += "> " + to_string(row.chi.value); break;
    case ChiTag::ExternalReference: s += "from external references"; break;
  }
  s += row.matches ? "  [matches the Jacobian dimension]" : "";
  if (!row.chi.note.empty()) s += "  (" + row.chi.note + ")";
  return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for theta-divisor class tables on abelian varieties"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string output_path;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--output", output_path, "write output to this file instead of stdout");
  };

  // eulerian
  long eul_n = 0;
  long eul_check = 0;
  auto* eulerian_cmd = app.add_subcommand("eulerian", "Eulerian polynomial P_n");
  eulerian_cmd->add_option("--n", eul_n, "index n")->required();
  auto* check_opt = eulerian_cmd->add_option("--check", eul_check, "verify the defining identity mod x^K");
  add_common(eulerian_cmd);

  // ecoef
  std::string ecoef_n;
  int ecoef_g = 0;
  long ecoef_k = 0;
  std::string ecoef_index;
  auto* ecoef_cmd = app.add_subcommand("ecoef", "coefficient E^n_k(i) of the universal series");
  ecoef_cmd->add_option("--n", ecoef_n, "exponent n of (1+x)")->required();
  ecoef_cmd->add_option("--g", ecoef_g, "number of variables + 1")->required();
  ecoef_cmd->add_option("--k", ecoef_k, "x-power")->required();
  ecoef_cmd->add_option("--index", ecoef_index, "comma-separated exponents i1,i2,... (default all zero)");
  add_common(ecoef_cmd);

  // jacobian-classes
  int jac_g = 0;
  std::string jac_case = "nonhyp";
  auto* jac_cmd = app.add_subcommand("jacobian-classes", "reference class table of a Jacobian theta divisor");
  jac_cmd->add_option("--g", jac_g, "genus")->required();
  jac_cmd->add_option("--case", jac_case, "nonhyp or hyp")->check(CLI::IsMember({"nonhyp", "hyp"}));
  add_common(jac_cmd);

  // criterion
  int crit_g = 0;
  std::string crit_case = "nonhyp";
  std::string crit_c0, crit_c1, crit_c2;
  int crit_codim = 0;
  auto* crit_cmd = app.add_subcommand("criterion", "Jacobian detection from observed class data");
  crit_cmd->add_option("--g", crit_g, "genus")->required();
  crit_cmd->add_option("--case", crit_case, "nonhyp or hyp")->check(CLI::IsMember({"nonhyp", "hyp"}));
  crit_cmd->add_option("--c0", crit_c0, "observed w_0 multiplier")->required();
  crit_cmd->add_option("--c1", crit_c1, "observed w_1 multiplier")->required();
  crit_cmd->add_option("--c2", crit_c2, "observed w_2 multiplier")->required();
  crit_cmd->add_option("--codim", crit_codim, "codimension bound for the problematic locus")->required();
  add_common(crit_cmd);

  // prym-chi
  int chi_g = 0;
  int chi_t = -1;
  std::string chi_partition;
  int chi_k = 0;
  int chi_kmax = 3;
  bool chi_sweep = false;
  auto* chi_cmd = app.add_subcommand("prym-chi", "Euler characteristics over the bielliptic Prym census");
  chi_cmd->add_option("--g", chi_g, "dimension")->required();
  auto* t_opt = chi_cmd->add_option("--t", chi_t, "tower parameter t");
  auto* part_opt = chi_cmd->add_option("--partition", chi_partition, "boundary partition d1,d2,...");
  chi_cmd->add_option("--k", chi_k, "number of extra singular points");
  chi_cmd->add_flag("--sweep", chi_sweep, "tabulate the whole (t | partition) x k grid");
  chi_cmd->add_option("--kmax", chi_kmax, "largest k in the sweep");
  t_opt->excludes(part_opt);
  add_common(chi_cmd);

  // prym-classes
  int pcl_g = 0;
  int pcl_t = 0;
  auto* pcl_cmd = app.add_subcommand("prym-classes", "class table of the Prym theta divisor");
  pcl_cmd->add_option("--g", pcl_g, "dimension")->required();
  pcl_cmd->add_option("--t", pcl_t, "tower parameter t")->required();
  add_common(pcl_cmd);

  // genus5
  auto* g5_cmd = app.add_subcommand("genus5", "dimension-5 hyperelliptic exclusion report");
  add_common(g5_cmd);

  std::vector<std::string> argv_storage;
  argv_storage.push_back("cmtheta");
  for (const std::string& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (chi_cmd->parsed() && !chi_sweep && t_opt->count() == 0 && part_opt->count() == 0) {
    err << "error: prym-chi requires --t, --partition, or --sweep\n\n" << app.help();
    return 2;
  }

  const Format format = parse_format(format_name);
  std::string payload;

  try {
    if (eulerian_cmd->parsed()) {
      const IntPolynomial p = eulerian_polynomial(eul_n);
      bool holds = true;
      const bool with_check = check_opt->count() > 0;
      if (with_check) {
        holds = eulerian_defining_check(eul_n, eul_check);
        if (!holds) throw std::logic_error("eulerian defining identity failed");
      }
      if (format == Format::Json) {
        Json j{{"n", eul_n}, {"coeffs", Json::array()}};
        for (long i = 0; i <= std::max<long>(p.degree(), 0); ++i) j["coeffs"].push_back(to_string(p.coefficient(i)));
        if (with_check) j["check"] = Json{{"K", eul_check}, {"holds", holds}};
        payload = dump_json(j);
      } else if (format == Format::Csv) {
        std::vector<std::vector<std::string>> rows;
        for (long i = 0; i <= std::max<long>(p.degree(), 0); ++i)
          rows.push_back({std::to_string(i), to_string(p.coefficient(i))});
        payload = csv_table({"power", "coefficient"}, rows);
      } else {
        payload = poly_text(p) + "\n";
        if (with_check)
          payload += "defining identity mod x^" + std::to_string(eul_check) + ": ok\n";
      }
    } else if (ecoef_cmd->parsed()) {
      const Int n(ecoef_n);
      const std::vector<long> idx = parse_long_list(ecoef_index, "index");
      const Rat value = e_coefficient(n, ecoef_g, ecoef_k, idx);
      if (format == Format::Json) {
        Json j{{"n", to_string(n)}, {"g", ecoef_g}, {"k", ecoef_k}, {"index", idx}, {"value", to_string(value)}};
        payload = dump_json(j);
      } else if (format == Format::Csv) {
        payload = csv_table({"n", "g", "k", "index", "value"},
                            {{to_string(n), std::to_string(ecoef_g), std::to_string(ecoef_k),
                              plus_join(idx), to_string(value)}});
      } else {
        payload = to_string(value) + "\n";
      }
    } else if (jac_cmd->parsed()) {
      const CurveCase c = parse_case(jac_case);
      std::vector<Rat> multipliers;
      for (int r = 0; r <= jac_g - 1; ++r) multipliers.push_back(jacobian_reference_multiplier(jac_g, c, r));
      if (format == Format::Json) {
        Json classes = Json::array();
        for (int r = 0; r <= jac_g - 1; ++r)
          classes.push_back(Json{{"r", r}, {"multiplier", to_string(multipliers[static_cast<size_t>(r)])}});
        payload = dump_json(Json{{"g", jac_g}, {"case", to_string(c)}, {"classes", classes}});
      } else if (format == Format::Csv) {
        std::vector<std::vector<std::string>> rows;
        for (int r = 0; r <= jac_g - 1; ++r)
          rows.push_back({std::to_string(r), to_string(multipliers[static_cast<size_t>(r)])});
        payload = csv_table({"r", "multiplier"}, rows);
      } else {
        payload = "c_{M,r} multipliers of w_r, g=" + std::to_string(jac_g) + ", " + to_string(c) + "\n";
        for (int r = 0; r <= jac_g - 1; ++r)
          payload += "r=" + std::to_string(r) + ": " + to_string(multipliers[static_cast<size_t>(r)]) + "\n";
      }
    } else if (crit_cmd->parsed()) {
      const CurveCase c = parse_case(crit_case);
      const Rat c0 = parse_rational(crit_c0);
      const Rat c1 = parse_rational(crit_c1);
      const Rat c2 = parse_rational(crit_c2);
      const CriterionVerdict verdict = criterion_check(crit_g, c, c0, c1, c2, crit_codim);
      if (format == Format::Json) {
        Json j = to_json(verdict);
        j["g"] = crit_g;
        j["case"] = to_string(c);
        j["codim"] = crit_codim;
        j["observed"] = Json{{"c0", to_string(c0)}, {"c1", to_string(c1)}, {"c2", to_string(c2)}};
        payload = dump_json(j);
      } else if (format == Format::Csv) {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"verdict", to_string(verdict.tag)});
        if (verdict.reconstruction) {
          rows.push_back({"c0", to_string(verdict.reconstruction->c0)});
          rows.push_back({"c1", to_string(verdict.reconstruction->c1)});
          rows.push_back({"c2", to_string(verdict.reconstruction->c2)});
        }
        payload = csv_table({"field", "value"}, rows);
      } else {
        payload = "verdict: " + to_string(verdict.tag) + "\n";
        payload += "reason: " + verdict.reason + "\n";
        if (verdict.reconstruction)
          payload += "reconstruction: c0 = " + to_string(verdict.reconstruction->c0) +
                     ", c1 = " + to_string(verdict.reconstruction->c1) +
                     ", c2 = " + to_string(verdict.reconstruction->c2) + "\n";
        if (!verdict.equations.empty()) {
          payload += "equations:\n";
          for (const std::string& eq : verdict.equations) payload += "  " + eq + "\n";
        }
      }
    } else if (chi_cmd->parsed()) {
      std::vector<ChiRow> rows;
      if (chi_sweep) {
        for (int t = 0; 2 * t <= chi_g; ++t)
          for (int k = 0; k <= chi_kmax; ++k) rows.push_back(make_chi_row(PrymLocus::eprime(chi_g, t, k)));
        for (int k = 0; k <= chi_kmax; ++k) rows.push_back(make_chi_row(PrymLocus::scycle({chi_g}, k)));
        for (int k = 0; k <= chi_kmax; ++k)
          rows.push_back(make_chi_row(PrymLocus::scycle({1, chi_g - 1}, k)));
      } else {
        PrymLocus locus = part_opt->count() > 0
                              ? PrymLocus::scycle(
                                    [&] {
                                      std::vector<int> p;
                                      for (long v : parse_long_list(chi_partition, "partition")) p.push_back(static_cast<int>(v));
                                      return p;
                                    }(),
                                    chi_k)
                              : PrymLocus::eprime(chi_g, chi_t, chi_k);
        if (!locus.is_eprime() && locus.g() != chi_g)
          throw std::invalid_argument("prym-chi: partition does not sum to g");
        rows.push_back(make_chi_row(locus));
      }
      if (format == Format::Json) {
        Json j{{"g", chi_g}, {"rows", Json::array()}};
        for (const ChiRow& row : rows) j["rows"].push_back(chi_row_json(row));
        payload = dump_json(j);
      } else if (format == Format::Csv) {
        std::vector<std::vector<std::string>> csv_rows;
        for (const ChiRow& row : rows) csv_rows.push_back(chi_row_csv(row));
        payload = csv_table({"g", "locus", "k", "chi_tag", "chi_value", "matches_jacobian"}, csv_rows);
      } else {
        for (const ChiRow& row : rows) payload += chi_row_text(row) + "\n";
      }
    } else if (pcl_cmd->parsed()) {
      if (pcl_t == 0) {
        if (format == Format::Json) {
          Json classes = Json::array();
          for (int r = 1; r <= pcl_g - 1; ++r)
            classes.push_back(Json{{"r", r}, {"multiplier", to_string(prym_chern_mather_t0(pcl_g, r).coefficient(r))}});
          payload = dump_json(Json{{"g", pcl_g}, {"t", 0}, {"classes", classes}});
        } else if (format == Format::Csv) {
          std::vector<std::vector<std::string>> rows;
          for (int r = 1; r <= pcl_g - 1; ++r)
            rows.push_back({std::to_string(r), to_string(prym_chern_mather_t0(pcl_g, r).coefficient(r))});
          payload = csv_table({"r", "multiplier"}, rows);
        } else {
          payload = "c_{M,r} of the Prym theta divisor, g=" + std::to_string(pcl_g) + ", t=0\n";
          for (int r = 1; r <= pcl_g - 1; ++r)
            payload += "r=" + std::to_string(r) + ": " + class_text(prym_chern_mather_t0(pcl_g, r)) + "\n";
        }
      } else {
        const std::string note = "sum endpoints use the middle-binomial convention B_{-1} = 0";
        if (format == Format::Json) {
          Json classes = Json::array();
          for (int r = 1; r <= pcl_g - 1; ++r) {
            const BiThetaClass cls = prym_chern_mather_t_pos(pcl_g, pcl_t, r);
            Json entry = to_json(cls);
            entry["r"] = r;
            classes.push_back(entry);
          }
          payload = dump_json(Json{{"g", pcl_g}, {"t", pcl_t}, {"note", note}, {"classes", classes}});
        } else if (format == Format::Csv) {
          std::vector<std::vector<std::string>> rows;
          for (int r = 1; r <= pcl_g - 1; ++r) {
            const BiThetaClass cls = prym_chern_mather_t_pos(pcl_g, pcl_t, r);
            for (const auto& [key, value] : cls.entries())
              rows.push_back({std::to_string(r), std::to_string(key.first), std::to_string(key.second), to_string(value)});
          }
          payload = csv_table({"r", "a", "b", "coeff"}, rows);
        } else {
          payload = "c_{M,r} of the Prym theta divisor, g=" + std::to_string(pcl_g) +
                    ", t=" + std::to_string(pcl_t) + " (" + note + ")\n";
          for (int r = 1; r <= pcl_g - 1; ++r) {
            const BiThetaClass cls = prym_chern_mather_t_pos(pcl_g, pcl_t, r);
            payload += "r=" + std::to_string(r) + ":";
            for (const auto& [key, value] : cls.entries())
              payload += "  " + to_string(value) + "*e(" + std::to_string(key.first) + "," +
                         std::to_string(key.second) + ")";
            payload += "\n";
          }
        }
      }
    } else if (g5_cmd->parsed()) {
      const ExclusionReport report = genus5_hyperelliptic_report();
      if (format == Format::Json) {
        payload = dump_json(to_json(report));
      } else if (format == Format::Csv) {
        std::vector<std::vector<std::string>> rows;
        for (size_t i = 0; i < report.verdicts.size(); ++i) {
          const PartitionVerdict& v = report.verdicts[i];
          rows.push_back({plus_join(v.partition), to_string(report.pairing_values[i].second),
                          std::to_string(v.residue), v.divisible ? "true" : "false"});
        }
        payload = csv_table({"partition", "pairing_value", "residue_mod_7", "divisible"}, rows);
      } else {
        payload = "dim omega: " + to_string(report.dim_omega) + "\n";
        payload += "candidate loci:";
        for (const PrymLocus& locus : report.candidate_loci)
          payload += " " + locus.label() + " (k=" + std::to_string(locus.k()) + ")";
        payload += "\n";
        payload += "degree-1 relation: " + to_string(report.lhs_multiplier) +
                   " * (observed class) = " + to_string(report.rhs_multiplier) + " * (cycle class)\n";
        for (size_t i = 0; i < report.verdicts.size(); ++i) {
          const PartitionVerdict& v = report.verdicts[i];
          payload += "d=" + plus_join(v.partition) + ": pairing " +
                     to_string(report.pairing_values[i].second) + " = " +
                     std::to_string(v.residue) + " mod 7, " +
                     (v.divisible ? "divisible" : "not divisible") + "\n";
        }
        payload += std::string("exclusion holds: ") + (report.excluded() ? "yes" : "no") + "\n";
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!output_path.empty()) {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file '" << output_path << "'\n";
      return 1;
    }
    file << payload;
    return 0;
  }
  out << payload;
  return 0;
}

} // namespace cmtheta::cli
