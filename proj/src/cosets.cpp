#include "galdist/cosets.hpp"

#include <map>
#include <set>

#include "galdist/errors.hpp"

namespace galdist {

CosetIndex::CosetIndex(Composition base, std::vector<std::vector<int>> entries)
    : base_(std::move(base)), entries_(std::move(entries)) {
  int t = base_.size();
  if (static_cast<int>(entries_.size()) != t)
    throw InvalidArgument("index matrix must be t×t");
  for (int i = 0; i < t; ++i) {
    if (static_cast<int>(entries_[i].size()) != t)
      throw InvalidArgument("index matrix must be t×t");
    int row_sum = 0;
    for (int j = 0; j < t; ++j) {
      if (entries_[i][j] < 0)
        throw InvalidArgument("index entries must be nonnegative");
      if (entries_[i][j] != entries_[j][i])
        throw InvalidArgument("index matrix must be symmetric");
      row_sum += entries_[i][j];
    }
    if (row_sum != base_.part(i + 1))
      throw InvalidArgument("index row sums must match the base composition");
  }
}

int CosetIndex::entry(int i, int j) const {
  if (i < 1 || i > t() || j < 1 || j > t())
    throw OutOfRange("block index out of range");
  return entries_[i - 1][j - 1];
}

bool CosetIndex::is_diagonal() const {
  for (int i = 0; i < t(); ++i)
    for (int j = 0; j < t(); ++j)
      if (i != j && entries_[i][j] != 0) return false;
  return true;
}

bool for_each_coset_index(const Composition& base,
                          const std::function<bool(const CosetIndex&)>& visit) {
  int t = base.size();
  std::vector<std::pair<int, int>> positions;  // upper triangle, row-major
  for (int i = 1; i <= t; ++i)
    for (int j = i; j <= t; ++j) positions.emplace_back(i, j);

  std::vector<std::vector<int>> entries(t, std::vector<int>(t, 0));
  std::vector<int> used(t + 1, 0);

  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == positions.size())
      return visit(CosetIndex(base, entries));
    auto [i, j] = positions[pos];
    int rem = base.part(i) - used[i];
    int cap = j == i ? rem : std::min(rem, base.part(j) - used[j]);
    // The last free entry of each row is forced by the row sum.
    int low = j == t ? rem : 0;
    if (low > cap) return true;
    for (int v = low; v <= cap; ++v) {
      entries[i - 1][j - 1] = entries[j - 1][i - 1] = v;
      used[i] += v;
      if (j != i) used[j] += v;
      bool keep_going = self(self, pos + 1);
      used[i] -= v;
      if (j != i) used[j] -= v;
      entries[i - 1][j - 1] = entries[j - 1][i - 1] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

std::vector<CosetIndex> enumerate_I(const Composition& base) {
  std::vector<CosetIndex> out;
  for_each_coset_index(base, [&](const CosetIndex& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

IntervalLayout::IntervalLayout(const CosetIndex& s) : t_(s.t()) {
  first_.assign(t_, std::vector<int>(t_, 0));
  size_.assign(t_, std::vector<int>(t_, 0));
  int next = 1;
  for (int i = 1; i <= t_; ++i) {
    for (int j = 1; j <= t_; ++j) {
      first_[i - 1][j - 1] = next;
      size_[i - 1][j - 1] = s.entry(i, j);
      next += s.entry(i, j);
    }
  }
}

int IntervalLayout::size(int i, int j) const {
  if (i < 1 || i > t_ || j < 1 || j > t_)
    throw OutOfRange("block index out of range");
  return size_[i - 1][j - 1];
}

int IntervalLayout::first(int i, int j) const {
  if (i < 1 || i > t_ || j < 1 || j > t_)
    throw OutOfRange("block index out of range");
  return first_[i - 1][j - 1];
}

std::pair<int, int> IntervalLayout::block_of(int k) const {
  for (int i = 1; i <= t_; ++i)
    for (int j = 1; j <= t_; ++j)
      if (size_[i - 1][j - 1] > 0 && k >= first_[i - 1][j - 1] &&
          k < first_[i - 1][j - 1] + size_[i - 1][j - 1])
        return {i, j};
  throw OutOfRange("coordinate outside the layout");
}

QuadMatrix representative(const CosetIndex& s) {
  IntervalLayout layout(s);
  int n = s.base().total();
  QuadMatrix u(n, n);
  for (int i = 1; i <= s.t(); ++i) {
    for (int k = 0; k < layout.size(i, i); ++k) {
      int p = layout.first(i, i) + k;
      u.at(p - 1, p - 1) = QuadScalar(Rational(1));
    }
    for (int j = i + 1; j <= s.t(); ++j) {
      for (int k = 0; k < layout.size(i, j); ++k) {
        int p = layout.first(i, j) + k;
        int q = layout.first(j, i) + k;
        u.at(p - 1, p - 1) = QuadScalar(Rational(1));
        u.at(p - 1, q - 1) = -QuadScalar::delta();
        u.at(q - 1, p - 1) = QuadScalar(Rational(1));
        u.at(q - 1, q - 1) = QuadScalar::delta();
      }
    }
  }
  return u;
}

WeylPerm involution_of(const CosetIndex& s) {
  IntervalLayout layout(s);
  int n = s.base().total();
  std::vector<int> images(n);
  for (int k = 1; k <= n; ++k) {
    auto [i, j] = layout.block_of(k);
    images[k - 1] = layout.first(j, i) + (k - layout.first(i, j));
  }
  return WeylPerm(std::move(images));
}

bool verify_w_equals_uu_sigma(const QuadField& field, const CosetIndex& s) {
  QuadMatrix u = representative(s);
  QuadMatrix product = mat_mul(field, u, mat_inverse(field, u).conj());
  WeylPerm w = involution_of(s);
  int n = s.base().total();
  QuadMatrix perm(n, n);
  for (int k = 1; k <= n; ++k)
    perm.at(w(k) - 1, k - 1) = QuadScalar(Rational(1));
  return product == perm;
}

Composition levi_intersection(const CosetIndex& s) {
  // Route one: the nonzero entries of s, read row by row.
  std::vector<int> parts;
  for (int i = 1; i <= s.t(); ++i)
    for (int j = 1; j <= s.t(); ++j)
      if (s.entry(i, j) > 0) parts.push_back(s.entry(i, j));
  Composition flat(parts);

  // Route two: the common refinement of the base blocks with their images
  // under the involution.  Coordinates k, k' fall together exactly when both
  // k, k' and w(k), w(k') share base blocks.
  const Composition& base = s.base();
  WeylPerm w = involution_of(s);
  std::vector<int> pieces;
  std::set<std::pair<int, int>> finished;
  std::pair<int, int> current{0, 0};
  for (int k = 1; k <= base.total(); ++k) {
    std::pair<int, int> cls{base.block_of(k), base.block_of(w(k))};
    if (k == 1 || cls != current) {
      if (finished.count(cls))
        throw InternalCheckFailed("refinement class is not an interval");
      if (k > 1) finished.insert(current);
      current = cls;
      pieces.push_back(0);
    }
    ++pieces.back();
  }
  if (Composition(pieces) != flat)
    throw InternalCheckFailed("refined Levi disagrees with the flattened index");
  return flat;
}

bool check_admissible(const CosetIndex& s) {
  WeylPerm w = involution_of(s);
  Composition fine = levi_intersection(s);

  std::set<Root> fine_roots;
  for (const Root& root : levi_roots(fine)) fine_roots.insert(root);
  for (const Root& root : fine_roots)
    if (!fine_roots.count(w(root))) return false;

  std::vector<Root> base_positive;
  for (const Root& root : levi_roots(s.base()))
    if (root.is_positive()) base_positive.push_back(root);
  return weyl_image_positive(w, base_positive);
}

bool check_unipotent_pairing(const CosetIndex& s) {
  WeylPerm w = involution_of(s);
  const Composition& base = s.base();
  Composition fine = levi_intersection(s);
  for (const Root& alpha : levi_roots(base)) {
    if (!alpha.is_positive() || levi_contains(fine, alpha)) continue;
    Root image = w(alpha);
    if (!image.is_positive()) return false;
    if (levi_contains(base, image)) return false;
    // alpha + w(alpha) is a root only if exactly one endpoint matches up.
    bool head_meets = image.i == alpha.j;
    bool tail_meets = image.j == alpha.i;
    if (head_meets != tail_meets) return false;
  }
  return true;
}

ThetaStructure theta_structure(const CosetIndex& s) {
  ThetaStructure out;
  for (int i = 1; i <= s.t(); ++i) {
    if (s.entry(i, i) > 0) out.fixed.push_back({i, i});
    for (int j = i + 1; j <= s.t(); ++j)
      if (s.entry(i, j) > 0)
        out.pairs.push_back({{i, j}, {j, i}});
  }
  return out;
}

namespace {

// One formal variable per unordered nonzero block of s; the fixed torus of
// the refined Levi has a single scalar on each matched pair of intervals.
struct BlockVariables {
  explicit BlockVariables(const CosetIndex& s) : layout(s), count(0) {
    var.assign(s.t(), std::vector<int>(s.t(), -1));
    for (int i = 1; i <= s.t(); ++i)
      for (int j = i; j <= s.t(); ++j)
        if (s.entry(i, j) > 0)
          var[i - 1][j - 1] = var[j - 1][i - 1] = count++;
  }

  int of_coord(int k) const {
    auto [i, j] = layout.block_of(k);
    return var[i - 1][j - 1];
  }

  // F-exponents of |alpha(t)|_F as a vector over the block variables.
  ExponentVector root_vector(const Root& alpha) const {
    ExponentVector v(count);
    v.coeffs[of_coord(alpha.i)] += 1;
    v.coeffs[of_coord(alpha.j)] -= 1;
    return v;
  }

  // Collapse a torus exponent vector to the block variables.
  ExponentVector collapse(const ExponentVector& torus) const {
    ExponentVector v(count);
    for (std::size_t k = 0; k < torus.coeffs.size(); ++k)
      v.coeffs[of_coord(static_cast<int>(k) + 1)] += torus.coeffs[k];
    return v;
  }

  IntervalLayout layout;
  std::vector<std::vector<int>> var;
  int count;
};

}  // namespace

bool verify_modulus_identity(const CosetIndex& s) {
  const Composition& base = s.base();
  Composition fine = levi_intersection(s);
  WeylPerm w = involution_of(s);
  BlockVariables vars(s);
  IntervalLayout layout(s);

  auto in_fine = [&](const Root& root) {
    // Membership in the refined Levi: both endpoints in one interval.
    return layout.block_of(root.i) == layout.block_of(root.j);
  };

  // F-exponents of the modulus of the fixed parabolic: positive roots
  // outside the refined Levi whose image under w stays positive and outside.
  ExponentVector theta_side(vars.count);
  // F-exponents of the modulus of the refined parabolic over the fixed field:
  // all positive roots outside the refined Levi.
  ExponentVector full_side(vars.count);
  for (const Root& alpha : positive_roots(base.total())) {
    if (in_fine(alpha)) continue;
    full_side = full_side + vars.root_vector(alpha);
    Root image = w(alpha);
    if (image.is_positive() && !in_fine(image))
      theta_side = theta_side + vars.root_vector(alpha);
  }
  if (theta_side != full_side) return false;

  // Coarse times relative modulus equals refined modulus, at the level of
  // torus exponents over the extension.
  std::vector<Composition> rows;
  for (int i = 1; i <= s.t(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= s.t(); ++j)
      if (s.entry(i, j) > 0) row.push_back(s.entry(i, j));
    rows.push_back(Composition(row));
  }
  ExponentVector combined =
      modulus_exponents(base) + modulus_exponents_relative(base, rows);
  if (combined != modulus_exponents(fine)) return false;

  // Restricting the refined modulus to the fixed torus doubles exponents and
  // must land on the square of the fixed parabolic's modulus.
  ExponentVector restricted = k_to_f_exponents(vars.collapse(combined));
  return restricted == theta_side + theta_side;
}

std::vector<std::vector<long long>> flag_invariants(const CosetIndex& s) {
  int t = s.t();
  std::vector<std::vector<long long>> dims(t, std::vector<long long>(t, 0));
  for (int i = 1; i <= t; ++i) {
    for (int j = 1; j <= t; ++j) {
      long long total = 0;
      for (int k = 1; k <= i; ++k)
        for (int l = 1; l <= j; ++l) total += s.entry(k, l);
      dims[i - 1][j - 1] = total;
    }
  }
  return dims;
}

std::vector<std::vector<long long>> flag_dims(const QuadField& field,
                                              const QuadMatrix& u,
                                              const Composition& base) {
  if (u.rows() != base.total() || u.cols() != base.total())
    throw DimensionMismatch("representative does not match the composition");
  QuadMatrix inverse = mat_inverse(field, u);
  int t = base.size();
  std::vector<QuadMatrix> flags(t), conjugates(t);
  for (int i = 1; i <= t; ++i) {
    flags[i - 1] = inverse.left_columns(base.prefix(i));
    conjugates[i - 1] = flags[i - 1].conj();
  }
  std::vector<std::vector<long long>> dims(t, std::vector<long long>(t, 0));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      dims[i][j] = subspace_intersect_dim(field, flags[i], conjugates[j]);
  return dims;
}

CosetIndex roundtrip_s(const QuadField& field, const QuadMatrix& u,
                       const Composition& base) {
  auto dims = flag_dims(field, u, base);
  int t = base.size();
  auto at = [&](int i, int j) -> long long {
    return i >= 1 && j >= 1 ? dims[i - 1][j - 1] : 0;
  };
  std::vector<std::vector<int>> entries(t, std::vector<int>(t, 0));
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j)
      entries[i - 1][j - 1] =
          static_cast<int>(at(i, j) - at(i - 1, j) - at(i, j - 1) +
                           at(i - 1, j - 1));
  return CosetIndex(base, entries);
}

}  // namespace galdist
