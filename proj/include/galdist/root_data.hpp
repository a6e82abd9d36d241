#pragma once

#include <string>
#include <vector>

namespace galdist {

// Ordered composition (n_1, ..., n_t) of n.  Parts are strictly positive.
// Compositions index the standard block structures on {1, ..., n}: part i
// owns the consecutive coordinates (prefix(i-1), prefix(i)].
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  // "2,1,3" with strictly positive entries.
  static Composition parse(const std::string& text);

  int total() const { return total_; }
  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  // 1-based part access.
  int part(int i) const;

  // n_1 + ... + n_i; prefix(0) = 0.
  int prefix(int i) const;

  // Index of the part owning coordinate k (both 1-based).  Throws OutOfRange
  // for k outside [1, n].
  int block_of(int k) const;

  std::string to_string() const;

  friend bool operator==(const Composition& x, const Composition& y) {
    return x.parts_ == y.parts_;
  }
  friend bool operator!=(const Composition& x, const Composition& y) {
    return !(x == y);
  }

 private:
  std::vector<int> parts_;
  std::vector<int> prefix_;  // prefix_[i] = n_1 + ... + n_i, prefix_[0] = 0
  int total_;
};

// All compositions of n in lexicographic order of their part lists.
std::vector<Composition> compositions_of(int n);

// Root e_i - e_j of GL(n), stored as the ordered pair (i, j), i != j,
// 1-based.  Positive exactly when i < j.
struct Root {
  int i, j;

  bool is_positive() const { return i < j; }

  friend bool operator==(const Root& x, const Root& y) {
    return x.i == y.i && x.j == y.j;
  }
  friend bool operator!=(const Root& x, const Root& y) { return !(x == y); }
  friend bool operator<(const Root& x, const Root& y) {
    return x.i != y.i ? x.i < y.i : x.j < y.j;
  }
};

std::vector<Root> all_roots(int n);
std::vector<Root> positive_roots(int n);

// Roots living inside the blocks of the composition: both endpoints in the
// same part.
std::vector<Root> levi_roots(const Composition& comp);
bool levi_contains(const Composition& comp, const Root& root);

// Permutation of {1, ..., n} acting on roots by w(e_i - e_j) =
// e_{w(i)} - e_{w(j)}.
class WeylPerm {
 public:
  explicit WeylPerm(std::vector<int> images);
  static WeylPerm identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const;
  Root operator()(const Root& root) const {
    return Root{(*this)(root.i), (*this)(root.j)};
  }

  bool is_involution() const;
  WeylPerm inverse() const;

  // "(1 3)(2 4)" in cycle notation; the identity prints as "e".
  std::string to_string() const;

  friend bool operator==(const WeylPerm& x, const WeylPerm& y) {
    return x.images_ == y.images_;
  }
  friend bool operator!=(const WeylPerm& x, const WeylPerm& y) {
    return !(x == y);
  }

 private:
  std::vector<int> images_;  // images_[k-1] = w(k)
};

// True when w maps every root of the list to a positive root.
bool weyl_image_positive(const WeylPerm& w, const std::vector<Root>& roots);

// Integer exponent vector of a character of the diagonal torus, one slot per
// torus coordinate.  Everything here is over K; restriction of | |_K to the
// fixed field doubles every exponent, and callers perform that conversion
// explicitly where they need it.
struct ExponentVector {
  std::vector<long long> coeffs;

  ExponentVector() = default;
  explicit ExponentVector(int n) : coeffs(n, 0) {}

  long long sum() const;

  friend ExponentVector operator+(const ExponentVector& x,
                                  const ExponentVector& y);
  friend bool operator==(const ExponentVector& x, const ExponentVector& y) {
    return x.coeffs == y.coeffs;
  }
  friend bool operator!=(const ExponentVector& x, const ExponentVector& y) {
    return !(x == y);
  }
};

// Doubles every exponent: the character of K* restricted to F* through
// | |_K = | |_F².
ExponentVector k_to_f_exponents(const ExponentVector& v);

// Exponent vector of the modulus character of the standard parabolic with
// Levi given by the composition: coordinate k receives the signed count of
// roots (k, j) minus (j, k) over the positive roots outside the Levi.
ExponentVector modulus_exponents(const Composition& comp);

// Modulus exponents of the parabolic of the Levi of `outer` determined by
// refining part i into refinement[i-1]; block-diagonal assembly of the
// per-part vectors.  Throws SizeMismatch when a refinement does not sum to
// its part.
ExponentVector modulus_exponents_relative(
    const Composition& outer, const std::vector<Composition>& refinement);

// Concatenation of the refinements into one composition of the same total.
Composition flatten_refinement(const Composition& outer,
                               const std::vector<Composition>& refinement);

}  // namespace galdist
