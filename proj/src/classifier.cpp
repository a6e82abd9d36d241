#include "galdist/classifier.hpp"

#include <algorithm>
#include <map>

#include "galdist/errors.hpp"

namespace galdist {

namespace {

// Sort key shared by the normal form and the class counting: ascending
// matrix size, then the fixed (base, twist, length) segment order.
struct SizeKey {
  int size;
  Segment seg;

  bool operator<(const SizeKey& other) const {
    if (size != other.size) return size < other.size;
    return seg < other.seg;
  }
};

// Backtracking matcher: repeatedly resolve the smallest unmatched position,
// either by pairing it with a later dual-sigma partner or, when its segment
// is distinguished, by letting it stand alone.  Deterministic because
// partners are tried in position order and pairing is tried first.
bool match_positions(const LabelUniverse& u, const std::vector<Segment>& segs,
                     std::vector<bool>& used,
                     std::vector<std::pair<int, int>>& pairs,
                     std::vector<int>& singles) {
  int t = static_cast<int>(segs.size());
  int i = 0;
  while (i < t && used[i]) ++i;
  if (i == t) return true;
  used[i] = true;
  Segment partner = dual_sigma(u, segs[i]);
  for (int j = i + 1; j < t; ++j) {
    if (used[j] || segs[j] != partner) continue;
    used[j] = true;
    pairs.emplace_back(i, j);
    if (match_positions(u, segs, used, pairs, singles)) return true;
    pairs.pop_back();
    used[j] = false;
  }
  if (is_distinguished_segment(u, segs[i])) {
    singles.push_back(i);
    if (match_positions(u, segs, used, pairs, singles)) return true;
    singles.pop_back();
  }
  used[i] = false;
  return false;
}

// Counting route: group the multiset into classes; dual pairs of classes
// must balance, and autodual classes without the distinguished flag must
// appear an even number of times.
bool counting_criterion(const LabelUniverse& u,
                        const std::vector<Segment>& segs) {
  std::map<Segment, int> count;
  for (const Segment& d : segs) ++count[d];
  for (const auto& [seg, n] : count) {
    Segment partner = dual_sigma(u, seg);
    if (partner == seg) {
      if (!is_distinguished_segment(u, seg) && n % 2 != 0) return false;
    } else {
      auto it = count.find(partner);
      if ((it == count.end() ? 0 : it->second) != n) return false;
    }
  }
  return true;
}

}  // namespace

bool validate_pairing(const GenericFamily& family,
                      const PairingCertificate& certificate) {
  const auto& segs = family.segments;
  int t = static_cast<int>(segs.size());
  if (static_cast<int>(certificate.order.size()) != t) return false;
  if (certificate.r < 0 || 2 * certificate.r > t) return false;
  std::vector<bool> seen(t, false);
  for (int p : certificate.order) {
    if (p < 1 || p > t || seen[p - 1]) return false;
    seen[p - 1] = true;
  }
  const LabelUniverse& u = family.universe;
  for (int k = 0; k < certificate.r; ++k) {
    const Segment& lead = segs[certificate.order[2 * k] - 1];
    const Segment& next = segs[certificate.order[2 * k + 1] - 1];
    if (dual_sigma(u, lead) != next) return false;
  }
  for (int p = 2 * certificate.r; p < t; ++p)
    if (!is_distinguished_segment(u, segs[certificate.order[p] - 1]))
      return false;
  return true;
}

GenericFamily normalize_order(const GenericFamily& family) {
  const LabelUniverse& u = family.universe;
  if (!is_galois_autodual_family(u, family.segments))
    throw NotAutodualFamily("family is not closed under dual-sigma");

  std::map<SizeKey, int> count;
  for (const Segment& d : family.segments)
    ++count[SizeKey{matrix_size(u, d), d}];

  std::vector<Segment> out;
  out.reserve(family.segments.size());
  auto it = count.begin();
  while (it != count.end()) {
    int size = it->first.size;
    auto end = it;
    while (end != count.end() && end->first.size == size) ++end;
    // Alternating runs for the non-autodual classes, keyed by the smaller
    // member of each class pair.
    for (auto c = it; c != end; ++c) {
      const Segment& seg = c->first.seg;
      Segment partner = dual_sigma(u, seg);
      if (partner == seg || partner < seg) continue;
      for (int k = 0; k < c->second; ++k) {
        out.push_back(seg);
        out.push_back(partner);
      }
    }
    // Autodual classes afterwards, each to its multiplicity.
    for (auto c = it; c != end; ++c) {
      const Segment& seg = c->first.seg;
      if (dual_sigma(u, seg) != seg) continue;
      out.insert(out.end(), c->second, seg);
    }
    it = end;
  }
  return GenericFamily{u, out};
}

std::optional<PairingCertificate> find_pairing_form(
    const GenericFamily& family) {
  const LabelUniverse& u = family.universe;
  const auto& segs = family.segments;
  int t = static_cast<int>(segs.size());

  std::vector<bool> used(t, false);
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> singles;
  bool matched = match_positions(u, segs, used, pairs, singles);

  if (matched != counting_criterion(u, segs))
    throw InternalCheckFailed("pairing routes disagree");
  if (!matched) return std::nullopt;

  PairingCertificate cert;
  cert.r = static_cast<int>(pairs.size());
  cert.order.reserve(t);
  for (const auto& [i, j] : pairs) {
    cert.order.push_back(i + 1);
    cert.order.push_back(j + 1);
  }
  for (int i : singles) cert.order.push_back(i + 1);
  return cert;
}

std::optional<WitnessCertificate> check_witness(const GenericFamily& family,
                                                const CosetIndex& s) {
  if (s.base() != family.composition())
    throw PreconditionViolated("index base does not match the family");
  const LabelUniverse& u = family.universe;
  int t = s.base().size();

  WitnessCertificate cert{
      s, std::vector<std::vector<std::optional<Segment>>>(
             t, std::vector<std::optional<Segment>>(t))};
  for (int i = 1; i <= t; ++i) {
    std::vector<int> parts, cols;
    for (int j = 1; j <= t; ++j) {
      if (s.entry(i, j) == 0) continue;
      parts.push_back(s.entry(i, j));
      cols.push_back(j);
    }
    auto split = jacquet_split(u, family.segments[i - 1], Composition(parts));
    if (!split) return std::nullopt;
    for (std::size_t k = 0; k < cols.size(); ++k)
      cert.splits[i - 1][cols[k] - 1] = (*split)[k];
  }
  for (int i = 1; i <= t; ++i) {
    if (s.entry(i, i) > 0 &&
        !is_distinguished_segment(u, *cert.splits[i - 1][i - 1]))
      return std::nullopt;
    for (int j = i + 1; j <= t; ++j) {
      if (s.entry(i, j) == 0) continue;
      if (*cert.splits[j - 1][i - 1] !=
          dual_sigma(u, *cert.splits[i - 1][j - 1]))
        return std::nullopt;
    }
  }
  return cert;
}

namespace {

// Walks the index matrices in the same ascending order as
// for_each_coset_index, but discards a whole subtree as soon as a completed
// row breaks one of the witness conditions: the row must split (every
// nonzero entry divisible by the segment's degree), a nonzero diagonal
// piece must be distinguished, and once both rows of an off-diagonal pair
// are complete their pieces must be dual-sigma images.  Every pruned matrix
// would be rejected by check_witness, so the first surviving leaf is the
// first accepted index of the plain scan.
class WitnessSearch {
 public:
  explicit WitnessSearch(const GenericFamily& family)
      : family_(family), base_(family.composition()), t_(base_.size()) {
    entries_.assign(t_, std::vector<int>(t_, 0));
    pieces_.assign(t_, std::vector<std::optional<Segment>>(t_));
    used_.assign(t_ + 1, 0);
    degrees_.resize(t_);
    for (int i = 0; i < t_; ++i)
      degrees_[i] = family.universe.degree(family.segments[i].base);
  }

  std::optional<CosetIndex> run() {
    descend(1, 1);
    if (!found_) return std::nullopt;
    return CosetIndex(base_, std::move(*found_));
  }

 private:
  // Returns false to stop (leaf found), mirroring for_each_coset_index.
  bool descend(int i, int j) {
    if (i > t_) {
      found_ = entries_;  // snapshot before the stack unwinds
      return false;
    }
    int rem = base_.part(i) - used_[i];
    int cap = j == i ? rem : std::min(rem, base_.part(j) - used_[j]);
    int low = j == t_ ? rem : 0;
    if (low > cap) return true;
    int next_i = j == t_ ? i + 1 : i;
    int next_j = j == t_ ? i + 1 : j + 1;
    for (int v = low; v <= cap; ++v) {
      // A nonzero entry sits in two rows; both degrees must divide it.
      if (v % degrees_[i - 1] != 0 || v % degrees_[j - 1] != 0) continue;
      entries_[i - 1][j - 1] = entries_[j - 1][i - 1] = v;
      used_[i] += v;
      if (j != i) used_[j] += v;
      bool keep_going = j == t_ ? complete_row(i, next_i, next_j)
                                : descend(next_i, next_j);
      used_[i] -= v;
      if (j != i) used_[j] -= v;
      entries_[i - 1][j - 1] = entries_[j - 1][i - 1] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  bool complete_row(int i, int next_i, int next_j) {
    const LabelUniverse& u = family_.universe;
    const Segment& seg = family_.segments[i - 1];
    int deg = degrees_[i - 1];
    Rational top = seg.twist + seg.length;
    for (int j = 1; j <= t_; ++j) {
      int v = entries_[i - 1][j - 1];
      if (v == 0) continue;
      int len = v / deg;  // per-entry divisibility already enforced
      top -= len;
      pieces_[i - 1][j - 1] = Segment(seg.base, top, len);
    }
    bool ok = true;
    if (entries_[i - 1][i - 1] > 0 &&
        !is_distinguished_segment(u, *pieces_[i - 1][i - 1]))
      ok = false;
    for (int k = 1; ok && k < i; ++k) {
      if (entries_[k - 1][i - 1] == 0) continue;
      if (*pieces_[i - 1][k - 1] != dual_sigma(u, *pieces_[k - 1][i - 1]))
        ok = false;
    }
    bool keep_going = ok ? descend(next_i, next_j) : true;
    for (int j = 1; j <= t_; ++j) pieces_[i - 1][j - 1].reset();
    return keep_going;
  }

  const GenericFamily& family_;
  Composition base_;
  int t_;
  std::vector<std::vector<int>> entries_;
  std::optional<std::vector<std::vector<int>>> found_;
  std::vector<std::vector<std::optional<Segment>>> pieces_;
  std::vector<int> used_;
  std::vector<int> degrees_;
};

}  // namespace

std::optional<std::pair<CosetIndex, WitnessCertificate>> exists_witness(
    const GenericFamily& family) {
  std::optional<CosetIndex> hit = WitnessSearch(family).run();
  if (!hit) return std::nullopt;
  auto witness = check_witness(family, *hit);
  if (!witness)
    throw InternalCheckFailed("pruned search accepted a rejected index");
  return std::make_pair(std::move(*hit), std::move(*witness));
}

CosetIndex certificate_to_coset(const GenericFamily& family,
                                const PairingCertificate& certificate) {
  if (!validate_pairing(family, certificate))
    throw InvalidArgument("pairing certificate does not validate");
  const LabelUniverse& u = family.universe;
  int t = static_cast<int>(family.segments.size());
  std::vector<std::vector<int>> entries(t, std::vector<int>(t, 0));
  for (int k = 0; k < certificate.r; ++k) {
    int p = certificate.order[2 * k], q = certificate.order[2 * k + 1];
    int size = matrix_size(u, family.segments[p - 1]);
    entries[p - 1][q - 1] = size;
    entries[q - 1][p - 1] = size;
  }
  for (int p = 2 * certificate.r; p < t; ++p) {
    int pos = certificate.order[p];
    entries[pos - 1][pos - 1] = matrix_size(u, family.segments[pos - 1]);
  }
  return CosetIndex(family.composition(), entries);
}

bool theorem_equivalence(const GenericFamily& family) {
  if (!is_generic(family.segments))
    throw PreconditionViolated("family has linked segments");
  if (!is_galois_autodual_family(family.universe, family.segments))
    throw PreconditionViolated("family is not closed under dual-sigma");
  GenericFamily normal = normalize_order(family);
  bool paired = find_pairing_form(normal).has_value();
  bool witnessed = exists_witness(normal).has_value();
  return paired == witnessed;
}

}  // namespace galdist
