#include "galois/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace galois {

namespace {

std::vector<int> full_ground(int degree) {
  std::vector<int> g(degree);
  std::iota(g.begin(), g.end(), 0);
  return g;
}

std::vector<int> normalize_ground(int degree, std::vector<int> ground) {
  if (ground.empty()) return full_ground(degree);
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  if (ground.front() < 0 || ground.back() >= degree)
    throw InvalidArgument("ground set point outside the degree");
  return ground;
}

void check_fixes_outside(const Permutation& p, const std::vector<int>& ground) {
  std::vector<bool> inside(p.degree(), false);
  for (int x : ground) inside[x] = true;
  for (int i = 0; i < p.degree(); ++i)
    if (!inside[i] && p(i) != i)
      throw InvalidArgument("generator " + format_perm(p) + " moves point " + std::to_string(i + 1) +
                            " outside the ground set");
}

struct PointUnionFind {
  std::vector<int> parent;
  explicit PointUnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<PermKey> bfs_closure(int degree, const std::vector<PermKey>& gens, std::uint64_t bound) {
  std::unordered_set<PermKey> seen;
  std::vector<PermKey> order;
  const PermKey id = identity_key(degree);
  seen.insert(id);
  order.push_back(id);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const PermKey x = order[head];
    for (PermKey g : gens) {
      const PermKey y = compose_keys(x, g, degree);
      if (seen.insert(y).second) {
        if (order.size() >= bound)
          throw BudgetExceeded("materialization bound", order.size() + 1, bound);
        order.push_back(y);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<PermKey> permutations_of(int degree, const std::vector<int>& points, bool even_only) {
  std::vector<int> images(points);
  std::vector<PermKey> keys;
  Permutation base(degree);
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  do {
    for (std::size_t i = 0; i < points.size(); ++i) img[points[i]] = images[i];
    const Permutation p = Permutation::from_images(img);
    if (!even_only || p.sign() == 1) keys.push_back(p.key());
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::uint64_t factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

Permutation cycle_on(int degree, const std::vector<int>& pts) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation::from_images(img);
}

}  // namespace

PermGroup PermGroup::trivial(int degree) { return trivial(degree, full_ground(degree)); }

PermGroup PermGroup::trivial(int degree, std::vector<int> ground_set) {
  PermGroup g;
  g.degree_ = degree;
  std::sort(ground_set.begin(), ground_set.end());
  g.ground_ = std::move(ground_set);
  g.elements_ = {identity_key(degree)};
  return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<int> ground_set,
                                   std::vector<Permutation> generators,
                                   std::vector<PermKey> sorted_elements) {
  if (sorted_elements.empty() ||
      !std::binary_search(sorted_elements.begin(), sorted_elements.end(), identity_key(degree)))
    throw InvalidArgument("element set does not contain the identity");
  PermGroup g;
  g.degree_ = degree;
  std::sort(ground_set.begin(), ground_set.end());
  g.ground_ = std::move(ground_set);
  g.generators_ = std::move(generators);
  g.elements_ = std::move(sorted_elements);
  return g;
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> out;
  out.reserve(elements_.size());
  for (PermKey k : elements_) out.push_back(Permutation::from_key(k, degree_));
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && contains_key(p.key());
}

bool PermGroup::contains_key(PermKey key) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), key);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::vector<int> PermGroup::moved_points() const {
  std::vector<bool> moved(degree_, false);
  for (const auto& g : generators_)
    for (int x : g.support()) moved[x] = true;
  if (generators_.empty())
    for (PermKey k : elements_)
      for (int x : Permutation::from_key(k, degree_).support()) moved[x] = true;
  std::vector<int> out;
  for (int i = 0; i < degree_; ++i)
    if (moved[i]) out.push_back(i);
  return out;
}

PermGroup generate_group(int degree, const std::vector<Permutation>& generators,
                         std::vector<int> ground_set, std::uint64_t bound) {
  ground_set = normalize_ground(degree, std::move(ground_set));
  std::vector<PermKey> keys;
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
    check_fixes_outside(g, ground_set);
    if (g.is_identity()) continue;
    if (std::find(gens.begin(), gens.end(), g) != gens.end()) continue;
    gens.push_back(g);
    keys.push_back(g.key());
  }
  auto elements = bfs_closure(degree, keys, bound);
  return PermGroup::from_elements(degree, std::move(ground_set), std::move(gens), std::move(elements));
}

PermGroup generate_group(int degree, const std::vector<std::string>& cycle_generators,
                         std::vector<int> ground_set) {
  std::vector<Permutation> gens;
  for (const auto& s : cycle_generators) gens.push_back(parse_perm(s, degree));
  return generate_group(degree, gens, std::move(ground_set));
}

std::vector<PermKey> all_permutation_keys(int n) { return permutations_of(n, full_ground(n), false); }

PermGroup symmetric_group(int degree, std::vector<int> points) {
  points = normalize_ground(degree, std::move(points));
  std::vector<Permutation> gens;
  if (points.size() >= 2) gens.push_back(cycle_on(degree, {points[0], points[1]}));
  if (points.size() >= 3) gens.push_back(cycle_on(degree, points));
  if (factorial(points.size()) > Budgets{}.materialization_bound)
    throw BudgetExceeded("materialization bound", factorial(points.size()),
                         Budgets{}.materialization_bound);
  auto keys = permutations_of(degree, points, false);
  return PermGroup::from_elements(degree, points, std::move(gens), std::move(keys));
}

PermGroup alternating_group(int degree, std::vector<int> points) {
  points = normalize_ground(degree, std::move(points));
  const std::size_t m = points.size();
  std::vector<Permutation> gens;
  if (m >= 3) {
    gens.push_back(cycle_on(degree, {points[0], points[1], points[2]}));
    if (m >= 4) {
      std::vector<int> rest = points;
      if (m % 2 == 0) rest.erase(rest.begin());
      gens.push_back(cycle_on(degree, rest));
    }
  }
  if (factorial(m) / 2 > Budgets{}.materialization_bound)
    throw BudgetExceeded("materialization bound", factorial(m) / 2, Budgets{}.materialization_bound);
  auto keys = permutations_of(degree, points, true);
  return PermGroup::from_elements(degree, points, std::move(gens), std::move(keys));
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  const int n = std::max(g.degree(), h.degree());
  std::vector<int> ground = g.ground_set();
  for (int x : h.ground_set()) {
    if (std::binary_search(g.ground_set().begin(), g.ground_set().end(), x))
      throw InvalidArgument("direct_product: ground sets overlap at point " + std::to_string(x + 1));
    ground.push_back(x);
  }
  std::sort(ground.begin(), ground.end());
  const PermGroup ge = embed(g, n);
  const PermGroup he = embed(h, n);
  std::vector<PermKey> keys;
  keys.reserve(ge.order() * he.order());
  for (PermKey a : ge.element_keys())
    for (PermKey b : he.element_keys()) keys.push_back(compose_keys(a, b, n));
  std::sort(keys.begin(), keys.end());
  std::vector<Permutation> gens = ge.generators();
  gens.insert(gens.end(), he.generators().begin(), he.generators().end());
  return PermGroup::from_elements(n, std::move(ground), std::move(gens), std::move(keys));
}

namespace {

// Multiplication table induced on labels; throws if the labeling is not a
// homomorphism onto {0..size-1}.
std::vector<int> induced_table(const PermGroup& g, const std::vector<int>& labels, int size,
                               const char* side) {
  if (labels.size() != g.order())
    throw InvalidArgument(std::string(side) + " labeling has wrong length");
  std::vector<int> table(static_cast<std::size_t>(size) * size, -1);
  std::vector<bool> hit(size, false);
  const auto keys = g.element_keys();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= size)
      throw InvalidArgument(std::string(side) + " label out of range");
    hit[labels[i]] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw InvalidArgument(std::string(side) + " labeling is not surjective");
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = 0; j < keys.size(); ++j) {
      const PermKey prod = compose_keys(keys[i], keys[j], g.degree());
      const auto it = std::lower_bound(keys.begin(), keys.end(), prod);
      const int lp = labels[static_cast<std::size_t>(it - keys.begin())];
      int& cell = table[static_cast<std::size_t>(labels[i]) * size + labels[j]];
      if (cell == -1) cell = lp;
      else if (cell != lp)
        throw InvalidArgument(std::string(side) + " labeling is not a homomorphism");
    }
  }
  return table;
}

}  // namespace

PermGroup subdirect_from_homs(const SubdirectSpec& spec) {
  if (spec.quotient_size < 1) throw InvalidArgument("quotient size must be positive");
  const auto t1 = induced_table(spec.left, spec.left_classes, spec.quotient_size, "left");
  const auto t2 = induced_table(spec.right, spec.right_classes, spec.quotient_size, "right");
  if (t1 != t2) throw InvalidArgument("the two labelings induce different quotient groups");

  const int n = std::max(spec.left.degree(), spec.right.degree());
  const PermGroup le = embed(spec.left, n);
  const PermGroup re = embed(spec.right, n);
  std::vector<int> ground = le.ground_set();
  for (int x : re.ground_set()) {
    if (std::binary_search(le.ground_set().begin(), le.ground_set().end(), x))
      throw InvalidArgument("subdirect product: ground sets overlap");
    ground.push_back(x);
  }
  std::vector<PermKey> keys;
  const auto lk = le.element_keys();
  const auto rk = re.element_keys();
  for (std::size_t i = 0; i < lk.size(); ++i)
    for (std::size_t j = 0; j < rk.size(); ++j)
      if (spec.left_classes[i] == spec.right_classes[j]) keys.push_back(compose_keys(lk[i], rk[j], n));
  std::sort(keys.begin(), keys.end());
  auto gens = greedy_generators(n, {}, keys);
  return PermGroup::from_elements(n, std::move(ground), std::move(gens), std::move(keys));
}

std::vector<int> index2_labels(const PermGroup& group, const PermGroup& sub) {
  if (!sub.is_subgroup_of(group) || sub.order() * 2 != group.order())
    throw InvalidArgument("index2: subgroup does not have index 2");
  std::vector<int> labels;
  labels.reserve(group.order());
  for (PermKey k : group.element_keys()) labels.push_back(sub.contains_key(k) ? 0 : 1);
  return labels;
}

PermGroup index2_subdirect(const PermGroup& b_group, const PermGroup& l, const PermGroup& l0) {
  const auto& b = b_group.ground_set();
  if (b.size() < 2) throw InvalidArgument("index2_subdirect: |B| must be at least 2");
  if (b_group.order() != factorial(b.size()))
    throw InvalidArgument("index2_subdirect: first factor must be the full symmetric group on B");
  const PermGroup l0e = embed(l0, l.degree());
  SubdirectSpec spec;
  spec.left = b_group;
  spec.right = l;
  spec.quotient_size = 2;
  for (PermKey k : b_group.element_keys())
    spec.left_classes.push_back(Permutation::from_key(k, b_group.degree()).sign() == 1 ? 0 : 1);
  spec.right_classes = index2_labels(l, l0e);
  return subdirect_from_homs(spec);
}

std::vector<std::vector<int>> orbits_on_points(const PermGroup& g) {
  PointUnionFind uf(g.degree());
  for (const auto& p : g.generators())
    for (int i = 0; i < g.degree(); ++i) uf.unite(i, p(i));
  if (g.generators().empty())
    for (PermKey k : g.element_keys()) {
      const auto p = Permutation::from_key(k, g.degree());
      for (int i = 0; i < g.degree(); ++i) uf.unite(i, p(i));
    }
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < g.degree(); ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, pts] : by_root) out.push_back(std::move(pts));
  return out;
}

std::vector<std::vector<int>> ground_orbits(const PermGroup& g) {
  std::vector<std::vector<int>> out;
  for (auto& orb : orbits_on_points(g))
    if (std::binary_search(g.ground_set().begin(), g.ground_set().end(), orb.front()))
      out.push_back(std::move(orb));
  return out;
}

bool is_transitive(const PermGroup& g) { return ground_orbits(g).size() <= 1; }

bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) throw InvalidArgument("is_primitive: group is not transitive on its ground set");
  const auto& omega = g.ground_set();
  if (omega.size() <= 2) return true;
  std::vector<Permutation> gens = g.generators();
  if (gens.empty()) gens = g.elements();
  const int alpha = omega.front();
  for (std::size_t bi = 1; bi < omega.size(); ++bi) {
    // Smallest block containing alpha and beta.
    PointUnionFind uf(g.degree());
    std::deque<std::pair<int, int>> pending{{alpha, omega[bi]}};
    uf.unite(alpha, omega[bi]);
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      for (const auto& p : gens)
        if (uf.unite(p(x), p(y))) pending.emplace_back(p(x), p(y));
    }
    std::size_t block = 0;
    const int root = uf.find(alpha);
    for (int x : omega)
      if (uf.find(x) == root) ++block;
    if (block < omega.size()) return false;
  }
  return true;
}

PermGroup restrict_to(const PermGroup& g, const std::vector<int>& points) {
  const int n = g.degree();
  std::vector<bool> keep(n, false);
  for (int x : points) keep[x] = true;
  auto project = [&](const Permutation& p) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
      if (keep[i] && !keep[p(i)]) throw InvalidArgument("restrict_to: point set is not invariant");
      img[i] = keep[i] ? p(i) : i;
    }
    return Permutation::from_images(img);
  };
  std::vector<PermKey> keys;
  keys.reserve(g.order());
  for (PermKey k : g.element_keys()) keys.push_back(project(Permutation::from_key(k, n)).key());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) {
    auto q = project(p);
    if (!q.is_identity() && std::find(gens.begin(), gens.end(), q) == gens.end()) gens.push_back(q);
  }
  std::vector<int> ground(points);
  std::sort(ground.begin(), ground.end());
  return PermGroup::from_elements(n, std::move(ground), std::move(gens), std::move(keys));
}

PermGroup relabel_to_ground(const PermGroup& g) {
  const auto& ground = g.ground_set();
  const int m = static_cast<int>(ground.size());
  std::vector<int> index(g.degree(), -1);
  for (int i = 0; i < m; ++i) index[ground[i]] = i;
  auto map = [&](const Permutation& p) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = index[p(ground[i])];
    return Permutation::from_images(img);
  };
  std::vector<PermKey> keys;
  keys.reserve(g.order());
  for (PermKey k : g.element_keys()) keys.push_back(map(Permutation::from_key(k, g.degree())).key());
  std::sort(keys.begin(), keys.end());
  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) gens.push_back(map(p));
  return PermGroup::from_elements(m, full_ground(m), std::move(gens), std::move(keys));
}

PermGroup embed(const PermGroup& g, int new_degree) {
  if (new_degree == g.degree()) return g;
  if (new_degree < g.degree()) throw InvalidArgument("embed: cannot shrink degree");
  std::vector<PermKey> keys;
  keys.reserve(g.order());
  for (PermKey k : g.element_keys()) keys.push_back(Permutation::from_key(k, g.degree()).extended(new_degree).key());
  std::sort(keys.begin(), keys.end());
  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) gens.push_back(p.extended(new_degree));
  return PermGroup::from_elements(new_degree, g.ground_set(), std::move(gens), std::move(keys));
}

PermGroup conjugate(const PermGroup& g, const Permutation& s) {
  const int n = g.degree();
  const PermKey sk = s.key();
  const PermKey si = inverse_key(sk, n);
  std::vector<PermKey> keys;
  keys.reserve(g.order());
  for (PermKey k : g.element_keys()) keys.push_back(compose_keys(compose_keys(sk, k, n), si, n));
  std::sort(keys.begin(), keys.end());
  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) gens.push_back(s * p * s.inverse());
  std::vector<int> ground;
  for (int x : g.ground_set()) ground.push_back(s(x));
  return PermGroup::from_elements(n, std::move(ground), std::move(gens), std::move(keys));
}

namespace {

std::vector<int> cycle_type_census(const PermGroup& g) {
  std::map<std::vector<int>, int> census;
  for (PermKey k : g.element_keys()) {
    const auto p = Permutation::from_key(k, g.degree());
    std::vector<int> lens;
    std::vector<bool> seen(g.degree(), false);
    for (int i = 0; i < g.degree(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = p(j)) seen[j] = true, ++len;
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    ++census[lens];
  }
  std::vector<int> flat;
  for (const auto& [lens, count] : census) {
    flat.insert(flat.end(), lens.begin(), lens.end());
    flat.push_back(-count);
  }
  return flat;
}

}  // namespace

bool are_conjugate(const PermGroup& g, const PermGroup& h, Permutation* witness) {
  if (g.degree() != h.degree()) throw InvalidArgument("are_conjugate: degree mismatch");
  const int n = g.degree();
  if (n > 9) throw BudgetExceeded("conjugacy search degree", n, 9);
  if (g.order() != h.order()) return false;
  if (cycle_type_census(g) != cycle_type_census(h)) return false;
  std::vector<PermKey> gens;
  for (const auto& p : g.generators()) gens.push_back(p.key());
  if (gens.empty())
    for (PermKey k : g.element_keys()) gens.push_back(k);
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    const PermKey s = Permutation::from_images(img).key();
    const PermKey si = inverse_key(s, n);
    bool ok = true;
    for (PermKey x : gens) {
      if (!h.contains_key(compose_keys(compose_keys(s, x, n), si, n))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (witness) *witness = Permutation::from_images(img);
      return true;
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

PermGroup parse_group_file(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int degree = -1;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (degree < 0) {
      const std::string prefix = "degree:";
      if (line.rfind(prefix, 0) != 0)
        throw ParseError(ParseError::Kind::BadHeader, lineno, "expected 'degree: n' header");
      try {
        std::size_t used = 0;
        const std::string rest = line.substr(prefix.size());
        degree = std::stoi(rest, &used);
        if (rest.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(ParseError::Kind::BadHeader, lineno, "malformed degree header");
      }
      if (degree < 1 || degree > kMaxDegree)
        throw ParseError(ParseError::Kind::BadHeader, lineno, "degree outside 1.." + std::to_string(kMaxDegree));
      continue;
    }
    try {
      gens.push_back(parse_perm(line, degree));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), lineno, std::string("line ") + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (degree < 0) throw ParseError(ParseError::Kind::BadHeader, lineno, "missing 'degree: n' header");
  return generate_group(degree, gens);
}

PermGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file '" + path + "'");
  return parse_group_file(in);
}

std::string format_group_file(const PermGroup& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "degree: " << g.degree() << '\n';
  for (const auto& p : g.generators()) out << format_perm(p) << '\n';
  return out.str();
}

std::vector<Permutation> greedy_generators(int degree, const std::vector<Permutation>& seed,
                                           std::span<const PermKey> sorted_elements) {
  std::vector<Permutation> gens;
  std::vector<PermKey> gen_keys;
  for (const auto& s : seed) {
    if (s.is_identity() || std::find(gens.begin(), gens.end(), s) != gens.end()) continue;
    gens.push_back(s);
    gen_keys.push_back(s.key());
  }
  const std::uint64_t bound = std::max<std::uint64_t>(sorted_elements.size(), 1);
  std::vector<PermKey> current = bfs_closure(degree, gen_keys, bound + 1);
  for (PermKey k : sorted_elements) {
    if (current.size() >= sorted_elements.size()) break;
    if (std::binary_search(current.begin(), current.end(), k)) continue;
    gens.push_back(Permutation::from_key(k, degree));
    gen_keys.push_back(k);
    current = bfs_closure(degree, gen_keys, bound + 1);
  }
  return gens;
}

}  // namespace galois
