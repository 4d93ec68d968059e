#include "multibasis/weyl.hpp"

namespace multibasis {

char type_letter(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

RootType parse_root_type(const std::string& s) {
  if (s == "A" || s == "a") return RootType::A;
  if (s == "B" || s == "b") return RootType::B;
  if (s == "C" || s == "c") return RootType::C;
  if (s == "D" || s == "d") return RootType::D;
  throw std::invalid_argument("unknown root type '" + s + "' (expected A, B, C or D)");
}

bool index_in_range(RootType type, std::size_t i, std::size_t n) {
  switch (type) {
    case RootType::A: return i >= 1 && i < n;
    case RootType::B:
    case RootType::C: return i >= 1 && i <= n;
    case RootType::D: return i >= 2 && i <= n;
  }
  return false;
}

RootDatum root_datum(RootType type, std::size_t i, std::size_t n) {
  if (!index_in_range(type, i, n))
    throw IndexOutOfRange(std::string("index ") + std::to_string(i) + " is out of range for type " +
                          type_letter(type) + " operators in " + std::to_string(n) + " variables");
  RootDatum d{type, i, ExponentVector(n), ExponentVector(n), unit_vector(n, i), 1};
  const std::size_t k = i - 1;
  switch (type) {
    case RootType::A:
      d.root[k] = 1;
      d.root[k + 1] = -1;
      d.coroot = d.root;
      break;
    case RootType::B:
      d.root[k] = 1;
      d.coroot[k] = 2;
      break;
    case RootType::C:
      d.root[k] = 2;
      d.coroot[k] = 1;
      break;
    case RootType::D:
      d.root[k - 1] = 1;
      d.root[k] = 1;
      d.coroot = d.root;
      break;
  }
  return d;
}

std::size_t simple_root_count(RootType type, std::size_t n) { return type == RootType::A ? n - 1 : n; }

RootDatum simple_root_datum(RootType type, std::size_t i, std::size_t n) {
  if (i >= 1 && i < n) return root_datum(RootType::A, i, n);
  if (i == n && type != RootType::A) return root_datum(type, i, n);
  throw IndexOutOfRange(std::string("no simple root ") + std::to_string(i) + " in the rank " + std::to_string(n) +
                        " root system of type " + type_letter(type));
}

}  // namespace multibasis
