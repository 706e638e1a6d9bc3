#include "lattice/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tl {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(std::complex<double> v) {
  return "[" + format_double(v.real()) + ", " + format_double(v.imag()) + "]";
}

std::string CsvTable::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw std::runtime_error("csv row width does not match header");
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw std::runtime_error("cannot create directory " + path + ": " + ec.message());
}

std::string plot_script(const std::string& csv_name, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel,
                        const std::vector<std::pair<int, std::string>>& y_columns, int x_column) {
  std::ostringstream os;
  os << "# gnuplot script, reads " << csv_name << "\n";
  os << "set datafile separator ','\n";
  os << "set key autotitle columnhead\n";
  os << "set title '" << title << "'\n";
  os << "set xlabel '" << xlabel << "'\n";
  os << "set ylabel '" << ylabel << "'\n";
  os << "plot ";
  for (std::size_t i = 0; i < y_columns.size(); ++i) {
    if (i) os << ", \\\n     ";
    os << "'" << csv_name << "' using " << x_column << ":" << y_columns[i].first
       << " with lines title '" << y_columns[i].second << "'";
  }
  os << "\n";
  return os.str();
}

}  // namespace tl
