#include "altrun/triangle_io.hpp"

#include <sstream>

#include "json.hpp"

#include "altrun/errors.hpp"

namespace altrun {

TriangleFormat parse_triangle_format(const std::string& name) {
  if (name == "table") return TriangleFormat::table;
  if (name == "csv") return TriangleFormat::csv;
  if (name == "json") return TriangleFormat::json;
  if (name == "bfile") return TriangleFormat::bfile;
  throw DomainError("unknown triangle format '" + name + "'");
}

std::string format_triangle(const Triangle& t, TriangleFormat format) {
  const std::string var = t.parameter().empty() ? "x" : t.parameter();
  std::ostringstream os;
  switch (format) {
    case TriangleFormat::table:
      for (long n = 0; n <= t.max_n(); ++n) {
        os << n << ':';
        const auto& row = t.row(n);
        const char* sep = t.parameter().empty() ? " " : " | ";
        bool first = true;
        for (const auto& e : row.entries) {
          os << (first ? " " : sep) << e.to_string(var);
          first = false;
        }
        os << '\n';
      }
      break;
    case TriangleFormat::csv:
      os << "n,k,value\n";
      for (long n = 0; n <= t.max_n(); ++n) {
        const auto& row = t.row(n);
        for (long k = row.k_min; k <= row.k_max; ++k) os << n << ',' << k << ',' << t.at(n, k).to_string(var) << '\n';
      }
      break;
    case TriangleFormat::json: {
      nlohmann::ordered_json j;
      j["family"] = t.name();
      j["parameter"] = t.parameter().empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(t.parameter());
      auto rows = nlohmann::ordered_json::array();
      for (long n = 0; n <= t.max_n(); ++n) {
        const auto& row = t.row(n);
        nlohmann::ordered_json r;
        r["n"] = n;
        r["k_min"] = row.k_min;
        auto entries = nlohmann::ordered_json::array();
        for (const auto& e : row.entries) entries.push_back(e.to_string(var));
        r["entries"] = entries;
        rows.push_back(r);
      }
      j["rows"] = rows;
      os << j.dump() << '\n';
      break;
    }
    case TriangleFormat::bfile: {
      os << "# " << t.name() << "(n,k): rows n = 0.." << t.max_n() << " read row-major over each row's k-range\n";
      long index = 1;
      for (long n = 0; n <= t.max_n(); ++n) {
        const auto& row = t.row(n);
        for (long k = row.k_min; k <= row.k_max; ++k) {
          const Poly e = t.at(n, k);
          if (e.degree() > 0 || !e.coeff(0).is_integer())
            throw DomainError("b-file export needs integer entries; " + t.name() + " has " + e.to_string(var));
          os << index++ << ' ' << e.coeff(0) << '\n';
        }
      }
      break;
    }
  }
  return os.str();
}

}  // namespace altrun
