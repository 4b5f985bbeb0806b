#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "altrun/enumerate.hpp"
#include "altrun/errors.hpp"
#include "altrun/families.hpp"
#include "altrun/triangle_io.hpp"
#include "verify.hpp"

namespace altrun::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

const std::vector<std::string>& default_vars() {
  static const std::vector<std::string> v{"x", "y", "z", "u", "v", "w"};
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating-run polynomial toolkit", "altrun"};
  app.require_subcommand(1);

  std::string family, format = "table";
  unsigned rows = 10;
  auto* tri = app.add_subcommand("triangle", "Print a coefficient triangle");
  tri->add_option("--family", family, "R|T|Rq|a|b|F|gamma|f")->required();
  tri->add_option("--rows", rows, "Last row index");
  tri->add_option("--format", format, "table|csv|json|bfile");

  std::string seq;
  long poly_n = 0;
  auto* poly = app.add_subcommand("poly", "Print one polynomial of a sequence");
  poly->add_option("--family", seq, "bpoly|cpoly|dpoly|gammapoly|Fpoly|eulerA|eulerB")->required();
  poly->add_option("--n", poly_n, "Index")->required()->check(CLI::NonNegativeNumber);

  std::string cls, stats, vars;
  unsigned dist_n = 0;
  auto* dist = app.add_subcommand("dist", "Distribution of statistics over a class");
  dist->add_option("--class", cls, "perm|signed|signed_hat|derangement|stirling|dual_stirling")->required();
  dist->add_option("--stat", stats, "Statistic or comma-separated list")->required();
  dist->add_option("--n", dist_n, "Size")->required();
  dist->add_option("--vars", vars, "Comma-separated variable names, one per statistic");

  std::string suite = "all";
  VerifyOptions vopts;
  auto* ver = app.add_subcommand("verify", "Run verification checks and print a JSON report");
  ver->add_option("--suite", suite, "all|grammar|triangles|enumeration|davidbarton|series|gamma");
  ver->add_option("--max-n", vopts.max_n, "Largest n for recurrence and enumeration checks");
  ver->add_option("--order", vopts.order, "Series truncation order");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (tri->parsed()) {
      out << format_triangle(triangle(family, rows), parse_triangle_format(format));
    } else if (poly->parsed()) {
      const PolySeq s = polyseq(seq, static_cast<unsigned>(std::max<long>(poly_n, 0)));
      if (poly_n < s.first_index) throw DomainError(seq + " starts at n = " + std::to_string(s.first_index));
      out << s.at(poly_n).to_string("x") << '\n';
    } else if (dist->parsed()) {
      const auto names = split_commas(stats);
      const auto var_names = vars.empty() ? default_vars() : split_commas(vars);
      if (names.empty()) throw DomainError("no statistic given");
      if (var_names.size() < names.size()) throw DomainError("need one variable per statistic");
      std::vector<std::pair<Statistic, std::string>> stats;
      for (std::size_t i = 0; i < names.size(); ++i) stats.emplace_back(parse_statistic(names[i]), var_names[i]);
      out << distribution(parse_object_class(cls), dist_n, stats).to_string() << '\n';
    } else if (ver->parsed()) {
      const VerifyReport report = run_suite(suite, vopts);
      out << report.to_json() << '\n';
      return report.overall ? kExitOk : kExitVerifyFailed;
    }
  } catch (const SizeLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace altrun::cli
