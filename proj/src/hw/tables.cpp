#include "qline/hw/tables.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qline::hw {

namespace {

constexpr Octant O(int k) { return Octant(k); }

const std::array<PhaseShiftEntry, 8> kTable{{
    {O(0), O(0), O(0), 0},
    {O(1), O(7), O(3), 1},
    {O(2), O(6), O(2), 1},
    {O(3), O(5), O(1), 1},
    {O(4), O(4), O(0), 1},
    {O(5), O(3), O(3), 0},
    {O(6), O(2), O(2), 0},
    {O(7), O(1), O(1), 0},
}};

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path, std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != columns) throw std::runtime_error(path.string() + ": wrong column count");
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::array<Bit, 3> parse_bits3(const std::string& s) {
  if (s.size() != 3) throw std::runtime_error("expected three bits, got '" + s + "'");
  std::array<Bit, 3> b{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::runtime_error("bad bit in '" + s + "'");
    b[i] = static_cast<Bit>(s[i] - '0');
  }
  return b;
}

}  // namespace

PhaseShiftEntry delta2_table(Octant delta2) { return kTable[static_cast<std::size_t>(delta2.value())]; }

const std::array<PhaseShiftEntry, 8>& phase_shift_table() { return kTable; }

std::string FvCode::bits() const {
  std::string s(4, '0');
  s[0] = static_cast<char>('0' + f);
  for (std::size_t i = 0; i < 3; ++i) s[i + 1] = static_cast<char>('0' + v[i]);
  return s;
}

FvCode fv_code(Octant delta2) {
  const auto e = delta2_table(delta2);
  FvCode c;
  c.f = e.f;
  switch (e.pc_shift.value()) {
    case 3: c.v = {1, 0, 0}; break;
    case 2: c.v = {0, 1, 0}; break;
    case 1: c.v = {0, 0, 1}; break;
    default: break;
  }
  return c;
}

Octant pc_shift_of(const std::array<Bit, 3>& v) {
  const int ones = v[0] + v[1] + v[2];
  if (ones > 1) throw std::invalid_argument("V lines must be one-hot");
  if (v[0]) return Octant(3);
  if (v[1]) return Octant(2);
  if (v[2]) return Octant(1);
  return Octant(0);
}

std::array<Bit, 3> octant_bits(Octant a) {
  const int k = a.value();
  return {static_cast<Bit>((k >> 2) & 1), static_cast<Bit>((k >> 1) & 1), static_cast<Bit>(k & 1)};
}

Octant octant_from_bits(const std::array<Bit, 3>& bits) {
  return Octant(((bits[0] & 1) << 2) | ((bits[1] & 1) << 1) | (bits[2] & 1));
}

VoltageMap::VoltageMap() : VoltageMap({0.0, 650.0, 850.0, 1100.0}) {}

VoltageMap::VoltageMap(std::array<double, 4> volts) : volts_(volts) {
  for (std::size_t i = 1; i < volts_.size(); ++i) {
    if (!(volts_[i] > volts_[i - 1])) throw std::invalid_argument("VoltageMap must increase with the shift");
  }
}

double VoltageMap::volts(Octant pc_shift) const {
  if (pc_shift.value() > 3) throw std::invalid_argument("PC shift must be below pi");
  return volts_[static_cast<std::size_t>(pc_shift.value())];
}

std::string VoltageMap::label(Octant pc_shift) {
  if (pc_shift.value() > 3) throw std::invalid_argument("PC shift must be below pi");
  return pc_shift.value() == 0 ? "V0" : "V" + to_string(pc_shift);
}

std::vector<PhaseShiftEntry> load_phase_shift_table(const std::filesystem::path& csv) {
  std::vector<PhaseShiftEntry> out;
  for (const auto& row : read_csv(csv, 4)) {
    if (row[3] != "0" && row[3] != "1") throw std::runtime_error("bad flip bit '" + row[3] + "'");
    out.push_back({core::parse_octant(row[0]), core::parse_octant(row[1]), core::parse_octant(row[2]),
                   static_cast<Bit>(row[3][0] - '0')});
  }
  return out;
}

std::vector<FfEncodingRow> load_ff_encoding_table(const std::filesystem::path& csv) {
  std::vector<FfEncodingRow> out;
  for (const auto& row : read_csv(csv, 5)) {
    out.push_back({parse_bits3(row[0]), core::parse_octant(row[1]), core::parse_octant(row[2]), row[3], row[4]});
  }
  return out;
}

}  // namespace qline::hw
