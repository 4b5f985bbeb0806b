#pragma once

#include <string>

#include "altrun/triangle.hpp"

namespace altrun {

enum class TriangleFormat { table, csv, json, bfile };

TriangleFormat parse_triangle_format(const std::string& name);  // throws DomainError

/// table: "n: e_kmin ... e_kmax" per row (empty rows print "n:"); entries
///        that are polynomials in the parameter are separated by " | "
/// csv:   "n,k,value" header then one line per in-range entry
/// json:  {"family", "parameter", "rows":[{"n","k_min","entries":[...]}]},
///        entries as strings
/// bfile: "# ..." header, then "index value" per in-range entry, row-major,
///        index from 1. Throws DomainError for non-integer entries.
std::string format_triangle(const Triangle& t, TriangleFormat format);

}  // namespace altrun
