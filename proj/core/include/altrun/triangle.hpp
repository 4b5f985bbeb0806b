#pragma once

#include <string>
#include <vector>

#include "altrun/multipoly.hpp"
#include "altrun/poly.hpp"

namespace altrun {

/// Doubly indexed array of exact entries. Entries are polynomials in an
/// optional parameter letter (q for the q-alternating runs triangle);
/// integer triangles simply hold constants. Entries outside a row's
/// [k_min, k_max] window are zero.
class Triangle {
 public:
  struct Row {
    long k_min = 0;
    long k_max = -1;
    std::vector<Poly> entries;  // entries[k - k_min]
  };

  Triangle() = default;
  explicit Triangle(std::string name, std::string parameter = {})
      : name_(std::move(name)), parameter_(std::move(parameter)) {}

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::string& parameter() const { return parameter_; }
  [[nodiscard]] long max_n() const { return static_cast<long>(rows_.size()) - 1; }
  [[nodiscard]] const Row& row(long n) const;
  [[nodiscard]] const std::vector<Row>& rows() const { return rows_; }

  /// Appends row n = max_n() + 1 with entries for k in [k_min, k_min + size).
  void push_row(long k_min, std::vector<Poly> entries);
  /// Appends a row indexed from k = 0, trimming zero entries at both ends.
  void push_dense_row(const std::vector<Poly>& entries_from_zero, long k_min, long k_max);

  [[nodiscard]] Poly at(long n, long k) const;
  /// Entry as a rational; throws NotOfExpectedShape when it depends on the parameter.
  [[nodiscard]] Rational scalar(long n, long k) const;
  /// Mutable access for sensitivity tests.
  void set(long n, long k, const Poly& value);

  /// Sum_k entry(n,k) x^k for a parameter-free triangle.
  [[nodiscard]] Poly row_poly(long n) const;
  /// Sum_k entry(n,k) x^k as a polynomial in {x, parameter}.
  [[nodiscard]] MultiPoly row_multipoly(long n, const std::string& var = "x") const;

  friend bool operator==(const Triangle& a, const Triangle& b);

 private:
  std::string name_;
  std::string parameter_;
  std::vector<Row> rows_;
};

bool operator==(const Triangle::Row& a, const Triangle::Row& b);

}  // namespace altrun
