#include "galdist/root_data.hpp"

#include <algorithm>

#include "galdist/errors.hpp"

namespace galdist {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("composition needs at least one part");
  prefix_.resize(parts_.size() + 1, 0);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw InvalidArgument("composition parts must be positive");
    prefix_[i + 1] = prefix_[i] + parts_[i];
  }
  total_ = prefix_.back();
}

Composition Composition::parse(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
    if (piece.empty()) throw ParseError("empty composition part: " + text);
    int value = 0;
    for (char ch : piece) {
      if (ch < '0' || ch > '9')
        throw ParseError("composition parts must be decimal integers: " + text);
      if (value > 1000) throw ParseError("composition part too large: " + text);
      value = value * 10 + (ch - '0');
    }
    parts.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Composition(parts);
}

int Composition::part(int i) const {
  if (i < 1 || i > size()) throw OutOfRange("part index out of range");
  return parts_[i - 1];
}

int Composition::prefix(int i) const {
  if (i < 0 || i > size()) throw OutOfRange("prefix index out of range");
  return prefix_[i];
}

int Composition::block_of(int k) const {
  if (k < 1 || k > total_) throw OutOfRange("coordinate out of range");
  int i = 1;
  while (prefix_[i] < k) ++i;
  return i;
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n <= 0) throw InvalidArgument("compositions of a nonpositive integer");
  std::vector<Composition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.emplace_back(current);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      current.push_back(first);
      self(self, rest - first);
      current.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<Root> all_roots(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back(Root{i, j});
  return out;
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(Root{i, j});
  return out;
}

std::vector<Root> levi_roots(const Composition& comp) {
  std::vector<Root> out;
  for (const Root& root : all_roots(comp.total()))
    if (levi_contains(comp, root)) out.push_back(root);
  return out;
}

bool levi_contains(const Composition& comp, const Root& root) {
  return comp.block_of(root.i) == comp.block_of(root.j);
}

WeylPerm::WeylPerm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidArgument("empty permutation");
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 1 || image > n())
      throw InvalidArgument("permutation image out of range");
    if (seen[image - 1]) throw InvalidArgument("permutation image repeated");
    seen[image - 1] = true;
  }
}

WeylPerm WeylPerm::identity(int n) {
  std::vector<int> images(n);
  for (int k = 1; k <= n; ++k) images[k - 1] = k;
  return WeylPerm(std::move(images));
}

int WeylPerm::operator()(int k) const {
  if (k < 1 || k > n()) throw OutOfRange("permutation argument out of range");
  return images_[k - 1];
}

bool WeylPerm::is_involution() const {
  for (int k = 1; k <= n(); ++k)
    if (images_[images_[k - 1] - 1] != k) return false;
  return true;
}

WeylPerm WeylPerm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= n(); ++k) inv[images_[k - 1] - 1] = k;
  return WeylPerm(std::move(inv));
}

std::string WeylPerm::to_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 1; start <= n(); ++start) {
    if (done[start - 1] || images_[start - 1] == start) continue;
    out += '(';
    int k = start;
    bool first = true;
    while (!done[k - 1]) {
      done[k - 1] = true;
      if (!first) out += ' ';
      out += std::to_string(k);
      first = false;
      k = images_[k - 1];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

bool weyl_image_positive(const WeylPerm& w, const std::vector<Root>& roots) {
  return std::all_of(roots.begin(), roots.end(),
                     [&](const Root& root) { return w(root).is_positive(); });
}

long long ExponentVector::sum() const {
  long long total = 0;
  for (long long c : coeffs) total += c;
  return total;
}

ExponentVector operator+(const ExponentVector& x, const ExponentVector& y) {
  if (x.coeffs.size() != y.coeffs.size())
    throw DimensionMismatch("exponent vectors of different lengths");
  ExponentVector out(static_cast<int>(x.coeffs.size()));
  for (std::size_t k = 0; k < x.coeffs.size(); ++k)
    out.coeffs[k] = x.coeffs[k] + y.coeffs[k];
  return out;
}

ExponentVector k_to_f_exponents(const ExponentVector& v) {
  ExponentVector out = v;
  for (long long& c : out.coeffs) c *= 2;
  return out;
}

ExponentVector modulus_exponents(const Composition& comp) {
  int n = comp.total();
  ExponentVector out(n);
  for (int k = 1; k <= n; ++k) {
    long long count = 0;
    for (int j = 1; j <= n; ++j) {
      if (comp.block_of(j) == comp.block_of(k)) continue;
      if (j > k) ++count;    // root (k, j) outside the Levi
      if (j < k) --count;    // root (j, k) outside the Levi
    }
    out.coeffs[k - 1] = count;
  }
  return out;
}

ExponentVector modulus_exponents_relative(
    const Composition& outer, const std::vector<Composition>& refinement) {
  if (static_cast<int>(refinement.size()) != outer.size())
    throw SizeMismatch("one refinement per part required");
  ExponentVector out(outer.total());
  for (int i = 1; i <= outer.size(); ++i) {
    const Composition& inner = refinement[i - 1];
    if (inner.total() != outer.part(i))
      throw SizeMismatch("refinement does not sum to its part");
    ExponentVector local = modulus_exponents(inner);
    int offset = outer.prefix(i - 1);
    for (int k = 0; k < inner.total(); ++k)
      out.coeffs[offset + k] = local.coeffs[k];
  }
  return out;
}

Composition flatten_refinement(const Composition& outer,
                               const std::vector<Composition>& refinement) {
  if (static_cast<int>(refinement.size()) != outer.size())
    throw SizeMismatch("one refinement per part required");
  std::vector<int> parts;
  for (int i = 1; i <= outer.size(); ++i) {
    if (refinement[i - 1].total() != outer.part(i))
      throw SizeMismatch("refinement does not sum to its part");
    for (int part : refinement[i - 1].parts()) parts.push_back(part);
  }
  return Composition(parts);
}

}  // namespace galdist
