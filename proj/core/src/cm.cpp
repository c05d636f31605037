#include "grosslat/cm.hpp"

#include <algorithm>
#include <stdexcept>

#include "grosslat/classify.hpp"

namespace grosslat {

bool CmRow::supersingular_at(const BigInteger& p) const {
  const BigInteger r = p % modulus;
  return std::find(residues.begin(), residues.end(), r.get_si()) != residues.end();
}

BigRational CmRow::quarter_bound() const { return BigRational((d + 1) * (d + 1), 4); }

const std::vector<CmRow>& cm_rows() {
  static const std::vector<CmRow> rows = {
      {"0", 3, 1, -3, 3, {2}, 5},
      {"1728", 4, 1, -4, 4, {3}, 7},
      {"-15^3", 7, 1, -7, 7, {3, 5, 6}, 13},
      {"20^3", 8, 1, -8, 8, {5, 7}, 23},
      {"-32^3", 11, 1, -11, 11, {2, 6, 7, 8, 10}, 29},
      {"2*30^3", 12, 2, -3, 12, {5, 11}, 41},
      {"66^3", 16, 2, -4, 16, {3, 7, 11, 15}, 67},
      {"-96^3", 19, 1, -19, 19, {2, 3, 8, 10, 12, 13, 14, 15, 18}, 79},
      {"-3*160^3", 27, 3, -3, 27, {2, 5, 8, 11, 14, 17, 20, 23, 26}, 167},
      {"255^3", 28, 2, -7, 28, {3, 5, 13, 17, 19, 27}, 181},
      {"-960^3", 43, 1, -43, 43,
       {2, 3, 5, 7, 8, 12, 18, 19, 20, 22, 26, 27, 28, 29, 30, 32, 33, 34, 37, 39, 42}, 433},
      {"-5280^3", 67, 1, -67, 67,
       {2,  3,  5,  7,  8,  11, 12, 13, 18, 20, 27, 28, 30, 31, 32, 34, 38,
        41, 42, 43, 44, 45, 46, 48, 50, 51, 52, 53, 57, 58, 61, 63, 66},
       1103},
      {"-640320^3", 163, 1, -163, 163,
       {2,   3,   5,   7,   8,   11,  12,  13,  17,  18,  19,  20,  23,  27,  28,  29,  30,
        31,  32,  37,  42,  44,  45,  48,  50,  52,  59,  63,  66,  67,  68,  70,  72,  73,
        75,  76,  78,  79,  80,  82,  86,  89,  92,  94,  98,  99,  101, 102, 103, 105, 106,
        107, 108, 109, 110, 112, 114, 116, 117, 120, 122, 123, 124, 125, 127, 128, 129, 130,
        137, 138, 139, 141, 142, 147, 148, 149, 153, 154, 157, 159, 162},
       6481},
  };
  return rows;
}

const CmRow& find_cm_row(const std::string& label) {
  const std::string key = label == "12^3" ? std::string("1728") : label;
  for (const auto& row : cm_rows())
    if (row.j_label == key) return row;
  throw std::invalid_argument("unknown CM row label: " + label);
}

std::string to_string(ClosedFormFamily f) {
  switch (f) {
    case ClosedFormFamily::J0: return "j0";
    case ClosedFormFamily::J1728: return "j1728";
    case ClosedFormFamily::Minus15Cubed: return "-15^3";
    case ClosedFormFamily::D1Twenty: return "d1-20";
  }
  return "";
}

std::optional<ClosedFormFamily> closed_form_family(const CmRow& row) {
  switch (row.d) {
    case 3: return ClosedFormFamily::J0;
    case 4: return ClosedFormFamily::J1728;
    case 7: return ClosedFormFamily::Minus15Cubed;
    default: return std::nullopt;
  }
}

bool closed_form_applies(ClosedFormFamily family, const BigInteger& p) {
  if (!is_prime(p)) return false;
  switch (family) {
    case ClosedFormFamily::J0: return p % 3 == 2;
    case ClosedFormFamily::J1728: return p % 4 == 3 && p > 3;
    case ClosedFormFamily::Minus15Cubed: {
      const BigInteger r = p % 7;
      return p >= 13 && (r == 3 || r == 5 || r == 6);
    }
    case ClosedFormFamily::D1Twenty: {
      const BigInteger r = p % 20;
      return p >= 113 && (r == 13 || r == 17);
    }
  }
  return false;
}

IntMatrix closed_form_gram(ClosedFormFamily family, const BigInteger& p) {
  if (!closed_form_applies(family, p))
    throw std::invalid_argument("closed_form_gram: family " + to_string(family) + " does not apply at p = " +
                                p.get_str());
  switch (family) {
    case ClosedFormFamily::J0: {
      const BigInteger d = (4 * p + 1) / 3;
      const BigInteger z = -(2 * p - 1) / 3;
      return IntMatrix{{3, 1, 1}, {1, d, z}, {1, z, d}};
    }
    case ClosedFormFamily::J1728:
      return IntMatrix{{4, 0, 2}, {0, p, 0}, {2, 0, p + 1}};
    case ClosedFormFamily::Minus15Cubed: {
      const BigInteger r = p % 7;
      if (r == 3) {
        const BigInteger z = -(2 * p - 6) / 7;
        return IntMatrix{{7, 3, 2}, {3, (4 * p + 9) / 7, z}, {2, z, (8 * p + 4) / 7}};
      }
      if (r == 5) {
        const BigInteger z = -(2 * p - 3) / 7;
        return IntMatrix{{7, 1, 3}, {1, (4 * p + 1) / 7, z}, {3, z, (8 * p + 9) / 7}};
      }
      const BigInteger z = 2 * (p + 1) / 7;
      return IntMatrix{{7, 2, 1}, {2, 4 * (p + 1) / 7, z}, {1, z, (8 * p + 1) / 7}};
    }
    case ClosedFormFamily::D1Twenty: {
      const bool thirteen = p % 20 == 13;
      const BigInteger r = thirteen ? 3 : 1;
      const BigInteger s = thirteen ? 1 : 2;
      const BigInteger z = (r * s - p) / 5;
      return IntMatrix{{20, 2 * r, 2 * s}, {2 * r, (2 * p + r * r) / 5, z}, {2 * s, z, (3 * p + s * s) / 5}};
    }
  }
  throw std::logic_error("closed_form_gram: unreachable");
}

std::size_t cm_type_index(const std::vector<TypeRecord>& types, long d) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto ds = embedded_discriminants(types[i].lattice, d);
    if (std::find(ds.begin(), ds.end(), BigInteger(d)) == ds.end()) continue;
    if (found) throw std::logic_error("cm_type_index: several types embed discriminant -" + std::to_string(d));
    found = i;
  }
  if (!found) throw std::logic_error("cm_type_index: no type embeds discriminant -" + std::to_string(d));
  return *found;
}

NeResult recompute_ne(const CmRow& row, const BigInteger& p_max, const TypeProvider& types) {
  if (BigRational(p_max) < row.quarter_bound())
    throw std::invalid_argument("recompute_ne: p_max is below (d+1)^2/4");
  NeResult out;
  std::optional<BigInteger> run_start;
  for (BigInteger p = 3; p <= p_max; p = next_prime(p)) {
    if (!row.supersingular_at(p)) continue;
    const auto& list = types(p);
    const std::size_t idx = cm_type_index(list, row.d);
    const BigInteger d1 = list[idx].minima().d1;
    out.witnesses.push_back({p, idx, d1});
    if (d1 == row.d) {
      if (!run_start) run_start = p;
    } else {
      run_start.reset();
    }
  }
  if (!run_start) throw std::logic_error("recompute_ne: D1 = d never holds up to p_max");
  out.n_e = *run_start;
  return out;
}

}  // namespace grosslat
