#ifndef TDA_SERIALIZE_HPP
#define TDA_SERIALIZE_HPP

#include <string>
#include <vector>

#include "persistence.hpp"
#include "simplex.hpp"

namespace tda {

// Barcode CSV: header `dimension,birth,death`, `inf` for infinite death.
std::string barcode_to_csv(const Barcode& bc);
Barcode barcode_from_csv(const std::string& text);
Barcode read_barcode(const std::string& path);

std::string barcode_to_json(const Barcode& bc);

// Maximal-simplex list: one simplex per line, whitespace-separated vertex ids.
std::vector<std::vector<uint32_t>> read_maximal_simplices(const std::string& path);
std::vector<std::vector<uint32_t>> maximal_simplices_from_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string format_double(double x);

} // namespace tda

#endif
