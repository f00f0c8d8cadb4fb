#include "swsplit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace swsplit {

namespace {

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_snapshot_csv(const Field& field, const std::filesystem::path& path, bool include_b_eff) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  const auto& pristine = field.bathymetry.b_pristine.empty() ? field.bathymetry.b : field.bathymetry.b_pristine;

  out << (include_b_eff ? "x,b,h,q,eta,b_eff\n" : "x,b,h,q,eta\n");
  for (std::size_t j = 0; j < field.size(); ++j) {
    const State& s = field.states[j];
    out << format17(field.grid.cell_centers[j]) << ',' << format17(pristine[j]) << ',' << format17(s.h) << ','
        << format17(s.q) << ',' << format17(s.h + pristine[j]);
    if (include_b_eff) out << ',' << format17(field.bathymetry.b[j]);
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("failed while writing '" + path.string() + "'");
}

CsvSnapshot read_snapshot_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path.string() + "' is empty");
  const bool has_b_eff = line == "x,b,h,q,eta,b_eff";
  if (!has_b_eff && line != "x,b,h,q,eta") throw IoError("'" + path.string() + "': unexpected header");

  CsvSnapshot snap;
  std::vector<double>* columns[] = {&snap.x, &snap.b, &snap.h, &snap.q, &snap.eta, &snap.b_eff};
  const std::size_t n_columns = has_b_eff ? 6 : 5;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(row, cell, ',')) {
      if (c >= n_columns) break;
      try {
        columns[c]->push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw IoError(path.string() + ":" + std::to_string(line_no) + ": bad number '" + cell + "'");
      }
      ++c;
    }
    if (c != n_columns) throw IoError(path.string() + ":" + std::to_string(line_no) + ": wrong column count");
  }
  return snap;
}

}  // namespace swsplit
