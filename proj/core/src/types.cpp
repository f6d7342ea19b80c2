#include "zgrade/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace zgrade {

std::string FiniteKind::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool FiniteKind::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

FiniteKind make_finite_kind(Family family, int rank) {
  FiniteKind kind{family, rank};
  if (!kind.valid()) throw InputError("invalid rank for family: " + kind.name());
  return kind;
}

FiniteKind parse_finite_kind(std::string_view text) {
  if (text.size() < 2) throw InputError("unknown type '" + std::string(text) + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') throw InputError("unknown type '" + std::string(text) + "'");
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw InputError("unknown type '" + std::string(text) + "'");
  return make_finite_kind(static_cast<Family>(letter), rank);
}

int AffineKind::affine_rank() const {
  if (twist == 1) return base.rank;
  switch (base.family) {
    case Family::A: return (base.rank + 1) / 2;  // A_{2n}^(2), A_{2n-1}^(2) both have n+1 nodes
    case Family::D: return base.rank - 1;
    case Family::E: return 4;
    default: return -1;
  }
}

std::string AffineKind::name() const {
  return base.name() + "^(" + std::to_string(twist) + ")";
}

bool AffineKind::valid() const {
  if (!base.valid()) return false;
  if (twist == 1) return true;
  if (twist != 2) return false;
  switch (base.family) {
    case Family::A: return base.rank >= 2;
    case Family::D: return base.rank >= 3;
    case Family::E: return base.rank == 6;
    default: return false;
  }
}

AffineKind make_affine_kind(FiniteKind base, int twist) {
  AffineKind kind{base, twist};
  if (!kind.valid()) throw InputError("unsupported affine diagram " + kind.name());
  return kind;
}

bool AffineRoot::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool AffineRoot::is_positive_vector() const {
  return !is_zero() && std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool AffineRoot::is_negative_vector() const {
  return !is_zero() && std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
}

AffineRoot AffineRoot::operator-() const {
  AffineRoot out = *this;
  for (int& c : out.coords) c = -c;
  return out;
}

AffineRoot AffineRoot::operator+(const AffineRoot& other) const {
  AffineRoot out = *this;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += other.coords[i];
  return out;
}

AffineRoot AffineRoot::operator-(const AffineRoot& other) const {
  AffineRoot out = *this;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= other.coords[i];
  return out;
}

AffineRoot scaled(const AffineRoot& root, int factor) {
  AffineRoot out = root;
  for (int& c : out.coords) c *= factor;
  return out;
}

std::string format_root(const AffineRoot& root) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < root.coords.size(); ++i) {
    int c = root.coords[i];
    if (c == 0) continue;
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    int mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    os << "a" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string format_coords(const Coords& coords) {
  std::string out = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  out += "]";
  return out;
}

std::size_t CoordsHash::operator()(const Coords& c) const noexcept {
  // FNV-1a over the raw ints
  std::size_t h = 1469598103934665603ULL;
  for (int v : c) {
    h ^= static_cast<std::size_t>(static_cast<unsigned int>(v));
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace zgrade
