#include "galdist/segments.hpp"

#include <algorithm>

#include "galdist/errors.hpp"

namespace galdist {

namespace {

void check_involution(const std::vector<LabelId>& map, const char* name) {
  int count = static_cast<int>(map.size());
  std::vector<bool> seen(count, false);
  for (LabelId image : map) {
    if (image < 0 || image >= count)
      throw InvalidArgument(std::string(name) + " image out of range");
    if (seen[image])
      throw InvalidArgument(std::string(name) + " is not a permutation");
    seen[image] = true;
  }
  for (LabelId b = 0; b < count; ++b)
    if (map[map[b]] != b)
      throw InvalidArgument(std::string(name) + " is not an involution");
}

}  // namespace

LabelUniverse::LabelUniverse(
    std::vector<int> degrees, std::vector<LabelId> sigma_map,
    std::vector<LabelId> dual_map,
    std::map<std::pair<LabelId, int>, DistFlags> dist_table)
    : degrees_(std::move(degrees)),
      sigma_(std::move(sigma_map)),
      dual_(std::move(dual_map)),
      dist_table_(std::move(dist_table)) {
  if (degrees_.empty()) throw InvalidArgument("universe needs labels");
  if (sigma_.size() != degrees_.size() || dual_.size() != degrees_.size())
    throw InvalidArgument("label maps must cover every label");
  for (int d : degrees_)
    if (d <= 0) throw InvalidArgument("degrees must be positive");
  check_involution(sigma_, "sigma");
  check_involution(dual_, "dual");
  for (LabelId b = 0; b < label_count(); ++b) {
    if (sigma_[dual_[b]] != dual_[sigma_[b]])
      throw InvalidArgument("sigma and dual must commute");
    if (degrees_[sigma_[b]] != degrees_[b] || degrees_[dual_[b]] != degrees_[b])
      throw InvalidArgument("degree must be constant on label orbits");
  }
  for (const auto& [key, flags] : dist_table_) {
    auto [label, length] = key;
    if (label < 0 || label >= label_count())
      throw InvalidArgument("distinction table references a missing label");
    if (length < 1)
      throw InvalidArgument("distinction table length must be positive");
    if (flags.distinguished && flags.eta_distinguished)
      throw InvalidArgument(
          "a segment cannot be distinguished and eta-distinguished at once");
    if ((flags.distinguished || flags.eta_distinguished) &&
        !label_autodual(label))
      throw InvalidArgument(
          "distinction flags require a label fixed by dual∘sigma");
  }
}

int LabelUniverse::degree(LabelId b) const {
  if (b < 0 || b >= label_count()) throw OutOfRange("label out of range");
  return degrees_[b];
}

LabelId LabelUniverse::sigma(LabelId b) const {
  if (b < 0 || b >= label_count()) throw OutOfRange("label out of range");
  return sigma_[b];
}

LabelId LabelUniverse::dual(LabelId b) const {
  if (b < 0 || b >= label_count()) throw OutOfRange("label out of range");
  return dual_[b];
}

bool LabelUniverse::label_autodual(LabelId b) const {
  return dual(sigma(b)) == b;
}

DistFlags LabelUniverse::dist_flags(LabelId b, int length) const {
  auto it = dist_table_.find({b, length});
  return it == dist_table_.end() ? DistFlags{} : it->second;
}

namespace {

void check_segment(const LabelUniverse& u, const Segment& d) {
  if (d.base < 0 || d.base >= u.label_count())
    throw OutOfRange("segment base label out of range");
  if (d.length < 1) throw InvalidArgument("segment length must be positive");
}

}  // namespace

int matrix_size(const LabelUniverse& u, const Segment& d) {
  check_segment(u, d);
  return d.length * u.degree(d.base);
}

Segment sigma(const LabelUniverse& u, const Segment& d) {
  check_segment(u, d);
  return Segment(u.sigma(d.base), d.twist, d.length);
}

Segment dual(const LabelUniverse& u, const Segment& d) {
  check_segment(u, d);
  return Segment(u.dual(d.base), -d.twist - d.length + 1, d.length);
}

Segment dual_sigma(const LabelUniverse& u, const Segment& d) {
  return dual(u, sigma(u, d));
}

bool galois_autodual(const LabelUniverse& u, const Segment& d) {
  check_segment(u, d);
  return u.label_autodual(d.base) && 2 * d.twist == Rational(1 - d.length);
}

bool linked(const Segment& x, const Segment& y) {
  if (x.base != y.base) return false;
  Rational offset = x.twist - y.twist;
  if (!is_integer(offset)) return false;
  // Compare windows on the common lattice: x = [k, k+lx-1], y = [0, ly-1].
  Int k = integer_part(offset);
  Int x_low = k, x_high = k + x.length - 1;
  Int y_low = 0, y_high = y.length - 1;
  Int low = std::max(x_low, y_low), high = std::min(x_high, y_high);
  bool contiguous = low <= high + 1;
  bool x_inside = x_low >= y_low && x_high <= y_high;
  bool y_inside = y_low >= x_low && y_high <= x_high;
  return contiguous && !x_inside && !y_inside;
}

bool precedes(const Segment& x, const Segment& y) {
  return x.base == y.base && x.twist == y.twist + y.length;
}

Segment concat(const Segment& x, const Segment& y) {
  if (!precedes(x, y))
    throw NotAdjacent("segments are not adjacent in that order");
  return Segment(y.base, y.twist, x.length + y.length);
}

std::optional<std::vector<Segment>> jacquet_split(const LabelUniverse& u,
                                                  const Segment& d,
                                                  const Composition& parts) {
  int size = matrix_size(u, d);
  if (parts.total() != size)
    throw SizeMismatch("parts must sum to the matrix size of the segment");
  int r = u.degree(d.base);
  for (int part : parts.parts())
    if (part % r != 0) return std::nullopt;
  // Consecutive pieces from the top: the first part takes the highest
  // exponents.
  std::vector<Segment> pieces;
  Rational top = d.twist + d.length;
  for (int part : parts.parts()) {
    int l = part / r;
    top -= l;
    pieces.emplace_back(d.base, top, l);
  }
  return pieces;
}

bool is_generic(const std::vector<Segment>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (linked(family[i], family[j])) return false;
  return true;
}

bool is_galois_autodual_family(const LabelUniverse& u,
                               const std::vector<Segment>& family) {
  std::vector<Segment> image;
  image.reserve(family.size());
  for (const Segment& d : family) image.push_back(dual_sigma(u, d));
  std::vector<Segment> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  std::sort(image.begin(), image.end());
  return sorted == image;
}

bool is_distinguished_segment(const LabelUniverse& u, const Segment& d) {
  return galois_autodual(u, d) && u.dist_flags(d.base, d.length).distinguished;
}

bool is_eta_distinguished_segment(const LabelUniverse& u, const Segment& d) {
  return galois_autodual(u, d) &&
         u.dist_flags(d.base, d.length).eta_distinguished;
}

Composition GenericFamily::composition() const {
  std::vector<int> sizes;
  sizes.reserve(segments.size());
  for (const Segment& d : segments) sizes.push_back(matrix_size(universe, d));
  return Composition(sizes);
}

}  // namespace galdist
