#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primeul/arrangement/arrangement.hpp"

namespace primeul::arr {

/// x_i = x_j in R^n
Arrangement braid(std::size_t n);
/// x_i = x_j and x_i = -x_j (i < j, interleaved per pair), then x_i = 0.
Arrangement type_b(std::size_t n);
Arrangement type_d(std::size_t n);
/// type_d(n) plus x_1 = 0, ..., x_k = 0.
Arrangement type_dnk(std::size_t n, std::size_t k);
/// k lines in the plane with slopes 0, infinity, 1, 2, ..., k-2.
Arrangement rank2(std::size_t k);
/// x_i = x_j for each edge, vertices 1..n.
Arrangement graphic(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
/// x_1 = 0, ..., x_n = 0 and x_1 + ... + x_n = 0
Arrangement generic_gn(std::size_t n);
Arrangement coordinate(std::size_t n);
/// "F4", "E6", "E7" or "E8", reflection hyperplanes of the root system.
Arrangement root_system(std::string_view name);

/// The family strings "A n", "B n", "D n", "Dnk n k", "I2 k", "Gn n",
/// "graphic n 1-2,2-3", "F4", "E6", "E7", "E8". Throws ParseError.
Arrangement parse_family(std::string_view spec);

/// Text format: first line the dimension, then one normal per line, '#'
/// comments. Throws ParseError.
Arrangement parse_arrangement(std::string_view text);
Arrangement read_arrangement_file(const std::string& path);
std::string format_arrangement(const Arrangement& a);

}  // namespace primeul::arr
