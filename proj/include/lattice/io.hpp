#ifndef LATTICE_IO_HPP
#define LATTICE_IO_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace tl {

// 17 significant digits, locale-independent.
std::string format_double(double v);
std::string format_complex(std::complex<double> v);  // "[re, im]" literal

// Simple CSV table; every cell is pre-formatted text.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string to_string() const;
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);
void ensure_directory(const std::string& path);

// Standalone gnuplot script consuming the named CSV (skips the header row).
std::string plot_script(const std::string& csv_name, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel,
                        const std::vector<std::pair<int, std::string>>& y_columns, int x_column = 1);

}  // namespace tl

#endif
