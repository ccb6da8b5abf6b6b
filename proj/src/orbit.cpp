#include "galois/orbit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace galois {

namespace {

// Union-find over tuple indices: union by size, path compression (halving),
// least member tracked per root.
class TupleUnionFind {
 public:
  explicit TupleUnionFind(std::uint64_t n) : parent_(n), size_(n, 1), least_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
    std::iota(least_.begin(), least_.end(), 0u);
    components_ = n;
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    least_[a] = std::min(least_[a], least_[b]);
    --components_;
  }

  std::uint64_t components() const noexcept { return components_; }

  std::vector<std::uint32_t> flatten() {
    std::vector<std::uint32_t> out(parent_.size());
    for (std::uint32_t x = 0; x < parent_.size(); ++x) out[x] = least_[find(x)];
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> least_;
  std::uint64_t components_;
};

// Visits every tuple index together with the index of its image under s.
template <class Visit>
void for_each_image(const TupleSpace& space, TupleAction action, const Permutation& s, Visit&& visit) {
  const int arity = space.arity();
  const int base = space.alphabet();
  std::vector<int> digits(arity, 0);
  // Coordinates: image index = sum_i digit[s(i)] * w[i] = sum_j digit[j] * w[s^-1(j)].
  std::vector<std::uint64_t> moved_weight(arity);
  std::vector<int> entry_map(base);
  if (action == TupleAction::Coordinates) {
    for (int i = 0; i < arity; ++i) moved_weight[s(i)] = space.weight(i);
  } else {
    for (int v = 0; v < base; ++v) entry_map[v] = s(v);
  }
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    std::uint64_t y = 0;
    if (action == TupleAction::Coordinates) {
      for (int j = 0; j < arity; ++j) y += static_cast<std::uint64_t>(digits[j]) * moved_weight[j];
    } else {
      for (int j = 0; j < arity; ++j) y += static_cast<std::uint64_t>(entry_map[digits[j]]) * space.weight(j);
    }
    if (!visit(x, y)) return;
    for (int j = arity - 1; j >= 0; --j) {
      if (++digits[j] < base) break;
      digits[j] = 0;
    }
  }
}

OrbitPartition build_partition(const PermGroup& g, TupleSpace space, TupleAction action) {
  if (space.size() > 0xFFFFFFFFull) throw BudgetExceeded("tuple budget (32-bit index)", space.size(), 0xFFFFFFFFull);
  TupleUnionFind uf(space.size());
  std::vector<Permutation> gens = g.generators();
  if (gens.empty() && g.order() > 1) gens = g.elements();
  for (const auto& s : gens) {
    for_each_image(space, action, s, [&](std::uint64_t x, std::uint64_t y) {
      uf.unite(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
      return true;
    });
  }
  const std::uint64_t count = uf.components();
  return OrbitPartition(std::move(space), action, uf.flatten(), count);
}

}  // namespace

TupleSpace::TupleSpace(int arity, int alphabet, std::uint64_t budget)
    : arity_(arity), alphabet_(alphabet), size_(1), weights_(arity) {
  if (arity < 0 || alphabet < 1) throw InvalidArgument("tuple space needs arity >= 0 and alphabet >= 1");
  for (int i = 0; i < arity; ++i) {
    if (size_ > budget / static_cast<std::uint64_t>(alphabet))
      throw BudgetExceeded("tuple budget", size_ * alphabet, budget);
    size_ *= static_cast<std::uint64_t>(alphabet);
  }
  if (size_ > budget) throw BudgetExceeded("tuple budget", size_, budget);
  std::uint64_t w = 1;
  for (int i = arity - 1; i >= 0; --i) {
    weights_[i] = w;
    w *= static_cast<std::uint64_t>(alphabet);
  }
}

std::uint64_t TupleSpace::encode(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) throw InvalidArgument("encode: arity mismatch");
  std::uint64_t idx = 0;
  for (int i = 0; i < arity_; ++i) {
    if (tuple[i] < 1 || tuple[i] > alphabet_) throw InvalidArgument("encode: value outside 1..k");
    idx += static_cast<std::uint64_t>(tuple[i] - 1) * weights_[i];
  }
  return idx;
}

std::vector<int> TupleSpace::decode(std::uint64_t index) const {
  if (index >= size_) throw InvalidArgument("decode: index out of range");
  std::vector<int> t(arity_);
  for (int i = 0; i < arity_; ++i) {
    t[i] = static_cast<int>(index / weights_[i]) + 1;
    index %= weights_[i];
  }
  return t;
}

std::vector<int> act_tuple(std::span<const int> tuple, const Permutation& s) {
  if (static_cast<int>(tuple.size()) != s.degree())
    throw InvalidArgument("act_tuple: tuple arity " + std::to_string(tuple.size()) +
                          " differs from degree " + std::to_string(s.degree()));
  std::vector<int> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) out[i] = tuple[s(static_cast<int>(i))];
  return out;
}

std::uint64_t act_index(const TupleSpace& space, TupleAction action, std::uint64_t index,
                        const Permutation& s) {
  const auto t = space.decode(index);
  if (action == TupleAction::Coordinates) return space.encode(act_tuple(t, s));
  std::vector<int> r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = s(t[i] - 1) + 1;
  return space.encode(r);
}

OrbitPartition::OrbitPartition(TupleSpace space, TupleAction action, std::vector<std::uint32_t> canonical,
                               std::uint64_t orbit_count)
    : space_(std::move(space)), action_(action), canonical_(std::move(canonical)), orbit_count_(orbit_count) {}

std::vector<std::uint32_t> OrbitPartition::representatives() const {
  std::vector<std::uint32_t> reps;
  reps.reserve(orbit_count_);
  for (std::uint32_t x = 0; x < canonical_.size(); ++x)
    if (canonical_[x] == x) reps.push_back(x);
  return reps;
}

std::vector<std::uint32_t> OrbitPartition::orbit_size_of_each() const {
  std::vector<std::uint32_t> count(canonical_.size(), 0);
  for (std::uint32_t c : canonical_) ++count[c];
  std::vector<std::uint32_t> out(canonical_.size());
  for (std::size_t x = 0; x < canonical_.size(); ++x) out[x] = count[canonical_[x]];
  return out;
}

std::vector<std::uint64_t> OrbitPartition::orbit_sizes() const {
  std::vector<std::uint64_t> count(canonical_.size(), 0);
  for (std::uint32_t c : canonical_) ++count[c];
  std::vector<std::uint64_t> out;
  for (std::uint32_t r : representatives()) out.push_back(count[r]);
  return out;
}

bool OrbitPartition::refines(const OrbitPartition& coarser) const {
  if (!(space_ == coarser.space_)) throw InvalidArgument("refines: different tuple spaces");
  for (std::size_t x = 0; x < canonical_.size(); ++x)
    if (coarser.canonical_[x] != coarser.canonical_[canonical_[x]]) return false;
  return true;
}

bool OrbitPartition::preserved_by(const Permutation& s, std::span<const std::uint32_t> order) const {
  if (order.empty()) {
    bool ok = true;
    for_each_image(space_, action_, s, [&](std::uint64_t x, std::uint64_t y) {
      ok = canonical_[x] == canonical_[y];
      return ok;
    });
    return ok;
  }
  const int arity = space_.arity();
  std::vector<std::uint64_t> moved_weight(arity);
  if (action_ == TupleAction::Coordinates)
    for (int i = 0; i < arity; ++i) moved_weight[s(i)] = space_.weight(i);
  const auto base = static_cast<std::uint64_t>(space_.alphabet());
  for (std::uint32_t x : order) {
    std::uint64_t rest = x;
    std::uint64_t y = 0;
    for (int j = arity - 1; j >= 0; --j) {
      const auto d = rest % base;
      rest /= base;
      if (action_ == TupleAction::Coordinates)
        y += d * moved_weight[j];
      else
        y += static_cast<std::uint64_t>(s(static_cast<int>(d))) * space_.weight(j);
    }
    if (canonical_[x] != canonical_[y]) return false;
  }
  return true;
}

std::vector<std::uint32_t> OrbitPartition::small_orbits_first() const {
  const auto sizes = orbit_size_of_each();
  std::vector<std::uint32_t> order(canonical_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return sizes[a] < sizes[b]; });
  return order;
}

std::string OrbitPartition::census(std::size_t max_representatives) const {
  std::ostringstream out;
  out << "tuples: " << space_.size() << " (" << space_.alphabet() << "^" << space_.arity() << ")\n";
  out << "orbits: " << orbit_count_ << '\n';
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (auto s : orbit_sizes()) ++histogram[s];
  out << "size histogram:";
  for (auto [size, count] : histogram) out << ' ' << size << 'x' << count;
  out << '\n';
  out << "representatives:";
  std::size_t shown = 0;
  for (std::uint32_t r : representatives()) {
    if (shown++ == max_representatives) {
      out << " ...";
      break;
    }
    out << " (";
    const auto t = space_.decode(r);
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
    out << ')';
  }
  out << '\n';
  return out.str();
}

OrbitPartition orbit_partition(const PermGroup& g, int k, std::uint64_t tuple_budget) {
  if (k < 1) throw InvalidArgument("orbit_partition: k must be positive");
  return build_partition(g, TupleSpace(g.degree(), k, tuple_budget), TupleAction::Coordinates);
}

OrbitPartition kpow_orbit_partition(const PermGroup& g, int k, std::uint64_t tuple_budget) {
  if (k < 1) throw InvalidArgument("kpow_orbit_partition: k must be positive");
  return build_partition(g, TupleSpace(k, g.degree(), tuple_budget), TupleAction::Entries);
}

std::vector<std::vector<int>> value_classes(std::span<const int> tuple) {
  std::map<int, std::vector<int>> by_value;
  for (std::size_t i = 0; i < tuple.size(); ++i) by_value[tuple[i]].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [v, pts] : by_value) out.push_back(std::move(pts));
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup tuple_stabilizer(std::span<const int> tuple) {
  const int n = static_cast<int>(tuple.size());
  std::vector<PermKey> keys{identity_key(n)};
  std::vector<Permutation> gens;
  for (const auto& cls : value_classes(tuple)) {
    if (cls.size() < 2) continue;
    for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 0);
      std::swap(img[cls[i]], img[cls[i + 1]]);
      gens.push_back(Permutation::from_images(img));
    }
    const PermGroup factor = symmetric_group(n, cls);
    std::vector<PermKey> next;
    next.reserve(keys.size() * factor.order());
    for (PermKey a : keys)
      for (PermKey b : factor.element_keys()) next.push_back(compose_keys(a, b, n));
    keys = std::move(next);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return PermGroup::from_elements(n, std::move(all), std::move(gens), std::move(keys));
}

std::uint64_t burnside_count(const PermGroup& g, int k) {
  std::uint64_t total = 0;
  for (PermKey key : g.element_keys()) {
    const auto p = Permutation::from_key(key, g.degree());
    std::vector<bool> seen(g.degree(), false);
    std::uint64_t fixed = 1;
    for (int i = 0; i < g.degree(); ++i) {
      if (seen[i]) continue;
      for (int j = i; !seen[j]; j = p(j)) seen[j] = true;
      fixed *= static_cast<std::uint64_t>(k);
    }
    total += fixed;
  }
  return total / g.order();
}

}  // namespace galois
