#pragma once
//
// Matrix Market "array real general" I/O (column-major body).
//

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "skelcur/error.hpp"
#include "skelcur/matrix.hpp"

namespace skelcur::mm {

inline constexpr const char* kArrayHeader = "%%MatrixMarket matrix array real general";

inline DenseMatrix read(std::istream& in) {
  std::string line;
  detail::require(static_cast<bool>(std::getline(in, line)), ErrorKind::ParseError, "empty Matrix Market stream");
  {
    std::istringstream hs(line);
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    for (auto* s : {&object, &format, &field, &symmetry})
      for (char& c : *s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    detail::require(banner == "%%MatrixMarket" && object == "matrix", ErrorKind::ParseError,
                    "missing %%MatrixMarket matrix banner");
    detail::require(format == "array", ErrorKind::ParseError, "only array format is supported");
    detail::require(field == "real" || field == "double" || field == "integer", ErrorKind::ParseError,
                    "only real fields are supported");
    detail::require(symmetry == "general", ErrorKind::ParseError, "only general symmetry is supported");
  }
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    break;
  }
  std::size_t rows = 0, cols = 0;
  {
    std::istringstream ss(line);
    detail::require(static_cast<bool>(ss >> rows >> cols) && rows > 0 && cols > 0, ErrorKind::ParseError,
                    "bad size line: '" + line + "'");
  }
  std::vector<double> colmajor;
  colmajor.reserve(rows * cols);
  double v = 0.0;
  while (colmajor.size() < rows * cols && in >> v) colmajor.push_back(v);
  detail::require(colmajor.size() == rows * cols, ErrorKind::ParseError,
                  "expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(colmajor.size()));
  std::vector<double> rowmajor(rows * cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) rowmajor[i * cols + j] = colmajor[j * rows + i];
  return DenseMatrix(rows, cols, std::move(rowmajor));
}

inline void write(std::ostream& out, const DenseMatrix& m) {
  out << kArrayHeader << '\n' << m.rows() << ' ' << m.cols() << '\n';
  char buf[32];
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << buf << '\n';
    }
}

inline DenseMatrix read_file(const std::string& path) {
  std::ifstream in(path);
  detail::require(static_cast<bool>(in), ErrorKind::IoError, "cannot open '" + path + "'");
  return read(in);
}

inline void write_file(const std::string& path, const DenseMatrix& m) {
  std::ofstream out(path);
  detail::require(static_cast<bool>(out), ErrorKind::IoError, "cannot open '" + path + "' for writing");
  write(out, m);
  detail::require(static_cast<bool>(out), ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace skelcur::mm
