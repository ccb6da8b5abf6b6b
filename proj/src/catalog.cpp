#include "galois/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

#include "galois/closure.hpp"
#include "galois/embedded_data.hpp"

namespace galois {

namespace {

// GF(p^e) by lookup tables. Element index = sum c_i p^i for the polynomial
// sum c_i x^i reduced modulo a fixed monic irreducible polynomial.
class SmallField {
 public:
  SmallField(int p, std::vector<int> modulus)  // modulus low-to-high, monic
      : p_(p), e_(static_cast<int>(modulus.size()) - 1) {
    q_ = 1;
    for (int i = 0; i < e_; ++i) q_ *= p_;
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        const auto ca = coeffs(a), cb = coeffs(b);
        std::vector<int> sum(e_), prod(2 * e_, 0);
        for (int i = 0; i < e_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
        for (int i = 0; i < e_; ++i)
          for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        for (int d = 2 * e_ - 1; d >= e_; --d) {
          const int c = prod[d];
          if (!c) continue;
          for (int i = 0; i <= e_; ++i)
            prod[d - e_ + i] = ((prod[d - e_ + i] - c * modulus[i]) % p_ + p_) % p_;
        }
        add_[a * q_ + b] = index(sum);
        prod.resize(e_);
        mul_[a * q_ + b] = index(prod);
      }
  }

  int q() const { return q_; }
  int p() const { return p_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const {
    for (int b = 0; b < q_; ++b)
      if (add(a, b) == 0) return b;
    return 0;
  }
  int inv(int a) const {
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    throw InvalidArgument("field: zero has no inverse");
  }
  int pow(int a, int m) const {
    int r = 1;
    for (int i = 0; i < m; ++i) r = mul(r, a);
    return r;
  }
  int primitive_element() const {
    for (int a = 2; a < q_; ++a) {
      int order = 1;
      for (int x = a; x != 1; x = mul(x, a)) ++order;
      if (order == q_ - 1) return a;
    }
    return q_ == 2 ? 1 : -1;
  }
  int frobenius(int a) const { return pow(a, p_); }

 private:
  std::vector<int> coeffs(int a) const {
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i, a /= p_) c[i] = a % p_;
    return c;
  }
  int index(const std::vector<int>& c) const {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * p_ + c[i];
    return a;
  }

  int p_;
  int e_;
  int q_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

SmallField gf(int q) {
  switch (q) {
    case 2: return SmallField(2, {0, 1});
    case 3: return SmallField(3, {0, 1});
    case 5: return SmallField(5, {0, 1});
    case 7: return SmallField(7, {0, 1});
    case 8: return SmallField(2, {1, 1, 0, 1});  // x^3 + x + 1
    case 9: return SmallField(3, {1, 0, 1});     // x^2 + 1
  }
  throw InvalidArgument("unsupported field order " + std::to_string(q));
}

using PointMap = std::function<int(int)>;

Permutation from_map(int degree, const PointMap& f) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = f(i);
  return Permutation::from_images(img);
}

// Affine line: point x+1 is field element x.
std::vector<Permutation> affine_line(const SmallField& F, int multiplier, bool frobenius) {
  std::vector<Permutation> gens{from_map(F.q(), [&](int x) { return F.add(x, 1); })};
  if (multiplier != 1) gens.push_back(from_map(F.q(), [&](int x) { return F.mul(x, multiplier); }));
  if (frobenius) gens.push_back(from_map(F.q(), [&](int x) { return F.frobenius(x); }));
  return gens;
}

// Projective line: field elements 0..q-1 then infinity = q.
std::vector<Permutation> projective_line(const SmallField& F, int multiplier, bool negate_inverse,
                                         bool frobenius) {
  const int q = F.q();
  const int inf = q;
  std::vector<Permutation> gens;
  gens.push_back(from_map(q + 1, [&](int x) { return x == inf ? inf : F.add(x, 1); }));
  gens.push_back(from_map(q + 1, [&](int x) { return x == inf ? inf : F.mul(x, multiplier); }));
  gens.push_back(from_map(q + 1, [&](int x) {
    if (x == inf) return 0;
    if (x == 0) return inf;
    const int r = F.inv(x);
    return negate_inverse ? F.neg(r) : r;
  }));
  if (frobenius) gens.push_back(from_map(q + 1, [&](int x) { return x == inf ? inf : F.frobenius(x); }));
  return gens;
}

// Affine space F_p^d; point index = vector read as a base-p number
// (coordinate 0 least significant). Matrices act on column vectors.
using Matrix = std::vector<std::vector<int>>;

std::vector<Permutation> affine_space(int p, int d, const std::vector<Matrix>& linear) {
  int q = 1;
  for (int i = 0; i < d; ++i) q *= p;
  auto vec = [&](int x) {
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i, x /= p) v[i] = x % p;
    return v;
  };
  auto idx = [&](const std::vector<int>& v) {
    int x = 0;
    for (int i = d - 1; i >= 0; --i) x = x * p + v[i];
    return x;
  };
  std::vector<Permutation> gens;
  gens.push_back(from_map(q, [&](int x) {
    auto v = vec(x);
    v[0] = (v[0] + 1) % p;
    return idx(v);
  }));
  for (const auto& m : linear) {
    gens.push_back(from_map(q, [&](int x) {
      const auto v = vec(x);
      std::vector<int> w(d, 0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) w[i] = (w[i] + m[i][j] * v[j]) % p;
      return idx(w);
    }));
  }
  return gens;
}

Permutation cycles(int degree, const std::vector<std::vector<int>>& cs) { return Permutation::from_cycles(degree, cs); }

std::vector<Permutation> cyclic_gens(int n) {
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 1);
  if (n < 2) return {};
  return {cycles(n, {c})};
}

std::vector<Permutation> dihedral_gens(int n) {
  auto gens = cyclic_gens(n);
  if (n < 3) return gens;
  std::vector<std::vector<int>> refl;
  for (int i = 2, j = n; i < j; ++i, --j) refl.push_back({i, j});
  gens.push_back(cycles(n, refl));
  return gens;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, int degree, std::vector<Permutation> gens, std::uint64_t order, bool primitive,
                 std::vector<std::string> aliases = {}) {
    out.push_back({std::move(name), degree, std::move(gens), order, primitive, std::move(aliases)});
  };
  auto sym_gens = [](int n) { return symmetric_group(n).generators(); };
  auto alt_gens = [](int n) { return alternating_group(n).generators(); };
  const std::uint64_t fact[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800};

  const SmallField f5 = gf(5), f7 = gf(7), f8 = gf(8), f9 = gf(9);
  const int w8 = f8.primitive_element();
  const int w9 = f9.primitive_element();

  add("A_3", 3, alt_gens(3), 3, true, {"C_3"});
  add("S_3", 3, sym_gens(3), 6, true, {"D_3"});

  add("C_4", 4, cyclic_gens(4), 4, false);
  add("V_4", 4, {cycles(4, {{1, 2}, {3, 4}}), cycles(4, {{1, 3}, {2, 4}})}, 4, false, {"Klein four-group"});
  add("D_4", 4, dihedral_gens(4), 8, false, {"D_8"});
  add("A_4", 4, alt_gens(4), 12, true);
  add("S_4", 4, sym_gens(4), 24, true);

  add("C_5", 5, cyclic_gens(5), 5, true);
  add("D_5", 5, dihedral_gens(5), 10, true, {"D_10"});
  add("AGL(1,5)", 5, affine_line(f5, 2, false), 20, true);
  add("A_5", 5, alt_gens(5), 60, true);
  add("S_5", 5, sym_gens(5), 120, true);

  add("PSL(2,5)", 6, projective_line(f5, 4, true, false), 60, true);
  add("PGL(2,5)", 6, projective_line(f5, 2, false, false), 120, true);
  add("A_6", 6, alt_gens(6), 360, true);
  add("S_6", 6, sym_gens(6), 720, true);
  // Imprimitive groups on 6 points with blocks {1,2,3}, {4,5,6}.
  const Permutation swap_blocks = cycles(6, {{1, 4}, {2, 5}, {3, 6}});
  add("S_3≀S_2", 6, {cycles(6, {{1, 2}}), cycles(6, {{1, 2, 3}}), swap_blocks}, 72, false, {"S_3 wr S_2"});
  add("S_3≀_sd S_2", 6, {cycles(6, {{1, 2}, {4, 5}}), cycles(6, {{1, 2, 3}}), swap_blocks}, 36, false);
  add("(S_3≀S_2)∩A_6", 6,
      {cycles(6, {{1, 2}, {4, 5}}), cycles(6, {{1, 2, 3}}), swap_blocks * cycles(6, {{1, 2}})},
      36, false);
  add("A_3≀S_2", 6, {cycles(6, {{1, 2, 3}}), swap_blocks}, 18, false, {"A_3 wr S_2"});
  // Faces: 1 top, 2 front, 3 right, 4 back, 5 left, 6 bottom.
  const Permutation spin_vertical = cycles(6, {{2, 3, 4, 5}});
  const Permutation spin_front = cycles(6, {{1, 3, 6, 5}});
  add("R(cube)", 6, {spin_vertical, spin_front}, 24, false, {"rotations of the cube on faces"});
  add("S(cube)", 6, {spin_vertical, spin_front, cycles(6, {{1, 6}, {2, 4}, {3, 5}})}, 48, false,
      {"symmetries of the cube on faces"});

  add("C_7", 7, cyclic_gens(7), 7, true);
  add("D_7", 7, dihedral_gens(7), 14, true, {"D_14"});
  add("F_21", 7, affine_line(f7, 2, false), 21, true, {"Frobenius group of order 21"});
  add("AGL(1,7)", 7, affine_line(f7, 3, false), 42, true);
  {
    // GL(3,2) on the nonzero vectors of F_2^3, written as GF(8)^*: a Singer
    // cycle x -> a*x and the transvection x -> x + x_0 * a.
    const auto singer = [&](int x) { return f8.mul(x, w8); };
    const auto transvection = [&](int x) { return (x & 1) ? f8.add(x, w8) : x; };
    auto on_nonzero = [&](const std::function<int(int)>& f) {
      return from_map(7, [&](int i) { return f(i + 1) - 1; });
    };
    add("PSL(3,2)", 7, {on_nonzero(singer), on_nonzero(transvection)}, 168, true, {"GL(3,2)", "PSL(2,7) on 7 points"});
    add("A_7", 7, alt_gens(7), fact[7] / 2, true);
    add("S_7", 7, sym_gens(7), fact[7], true);

    add("AGL(1,8)", 8, affine_line(f8, w8, false), 56, true);
    add("AΓL(1,8)", 8, affine_line(f8, w8, true), 168, true);
    auto asl = affine_line(f8, w8, false);
    asl.push_back(from_map(8, transvection));
    add("ASL(3,2)", 8, asl, 1344, true, {"AGL(3,2)"});
  }
  add("PSL(2,7)", 8, projective_line(f7, 2, true, false), 168, true);
  add("PGL(2,7)", 8, projective_line(f7, 3, false, false), 336, true);
  add("A_8", 8, alt_gens(8), fact[8] / 2, true);
  add("S_8", 8, sym_gens(8), fact[8], true);

  add("AGL(1,9)", 9, affine_line(f9, w9, false), 72, true);
  add("AΓL(1,9)", 9, affine_line(f9, w9, true), 144, true);
  const Matrix up{{1, 1}, {0, 1}}, down{{1, 0}, {1, 1}}, flip{{2, 0}, {0, 1}};
  add("ASL(2,3)", 9, affine_space(3, 2, {up, down}), 216, true);
  add("AGL(2,3)", 9, affine_space(3, 2, {up, down, flip}), 432, true);
  add("PSL(2,8)", 9, projective_line(f8, w8, false, false), 504, true, {"PGL(2,8)"});
  add("PΓL(2,8)", 9, projective_line(f8, w8, false, true), 1512, true);
  add("A_9", 9, alt_gens(9), fact[9] / 2, true);
  add("S_9", 9, sym_gens(9), fact[9], true);

  add("PSL(2,9)", 10, projective_line(f9, f9.mul(w9, w9), true, false), 360, true);
  add("PGL(2,9)", 10, projective_line(f9, w9, false, false), 720, true);
  add("PΓL(2,9)", 10, projective_line(f9, w9, false, true), 1440, true);
  add("A_10", 10, alt_gens(10), fact[10] / 2, true);
  add("S_10", 10, sym_gens(10), fact[10], true);
  return out;
}

struct ValidatedCache {
  std::mutex mutex;
  std::map<std::string, PermGroup> groups;
};

ValidatedCache& cache() {
  static ValidatedCache c;
  return c;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
  return s;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
}

const CatalogEntry* find_entry(const std::string& canonical) {
  for (const auto& e : catalog_entries()) {
    if (e.name == canonical) return &e;
    for (const auto& a : e.aliases)
      if (canonical_name(a) == canonical) return &e;
  }
  return nullptr;
}

// Index-2 subgroup used by "X ×_sd Y": A_n in S_n, the rotations in D_n,
// the squares in C_2m.
PermGroup distinguished_index2(const std::string& name, const PermGroup& g) {
  const char family = name.empty() ? '?' : name[0];
  const int n = g.degree();
  if (family == 'S' && name.rfind("S_", 0) == 0) return alternating_group(n);
  if (family == 'D' && name.rfind("D_", 0) == 0) return generate_group(n, cyclic_gens(n));
  if (family == 'C' && name.rfind("C_", 0) == 0 && n % 2 == 0) {
    auto c = cyclic_gens(n).front();
    return generate_group(n, {c * c});
  }
  throw UnknownName("no distinguished index-2 subgroup for '" + name + "'");
}

// Position of the last top-level product operator, or npos.
std::size_t last_product(const std::string& s, std::size_t* op_len, bool* subdirect) {
  int depth = 0;
  std::size_t found = std::string::npos;
  const std::string times = "×";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (depth == 0 && s.compare(i, times.size(), times) == 0) found = i;
  }
  if (found == std::string::npos) return found;
  *subdirect = s.compare(found + times.size(), 3, "_sd") == 0;
  *op_len = times.size() + (*subdirect ? 3 : 0);
  return found;
}

PermGroup shift(const PermGroup& g, int offset, int degree) {
  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < g.degree(); ++i) img[i + offset] = p(i) + offset;
    gens.push_back(Permutation::from_images(img));
  }
  std::vector<int> ground;
  for (int x : g.ground_set()) ground.push_back(x + offset);
  return generate_group(degree, gens, ground);
}

PermGroup resolve(const std::string& raw);

PermGroup resolve_product(const std::string& s) {
  std::size_t op_len = 0;
  bool subdirect = false;
  const std::size_t at = last_product(s, &op_len, &subdirect);
  std::string left = trim(s.substr(0, at));
  std::string right = trim(s.substr(at + op_len));
  auto strip = [](std::string x) {
    if (x.size() >= 2 && x.front() == '(' && x.back() == ')') {
      int depth = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == '(') ++depth;
        if (x[i] == ')' && --depth == 0 && i + 1 < x.size()) return x;
      }
      return x.substr(1, x.size() - 2);
    }
    return x;
  };
  const PermGroup lg = resolve(strip(left));
  const PermGroup rg = resolve(strip(right));
  const int degree = lg.degree() + rg.degree();
  const PermGroup l = shift(lg, 0, degree);
  const PermGroup r = shift(rg, lg.degree(), degree);
  if (!subdirect) return direct_product(l, r);
  SubdirectSpec spec;
  spec.left = l;
  spec.right = r;
  spec.quotient_size = 2;
  spec.left_classes = index2_labels(l, shift(distinguished_index2(strip(left), lg), 0, degree));
  spec.right_classes = index2_labels(r, shift(distinguished_index2(strip(right), rg), lg.degree(), degree));
  return subdirect_from_homs(spec);
}

PermGroup resolve(const std::string& raw) {
  const std::string name = canonical_name(raw);
  if (const CatalogEntry* e = find_entry(name)) {
    {
      std::lock_guard lock(cache().mutex);
      if (auto it = cache().groups.find(e->name); it != cache().groups.end()) return it->second;
    }
    PermGroup g = validate_entry(*e);
    std::lock_guard lock(cache().mutex);
    cache().groups.emplace(e->name, g);
    return g;
  }
  std::size_t op_len = 0;
  bool subdirect = false;
  if (last_product(name, &op_len, &subdirect) != std::string::npos) return resolve_product(name);

  if (name.size() >= 3 && name[1] == '_' && std::string("CDAS").find(name[0]) != std::string::npos) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(2), &used);
      if (used != name.size() - 2) throw std::invalid_argument("suffix");
    } catch (const std::logic_error&) {
      throw UnknownName("unknown group name '" + raw + "'");
    }
    if (n < 1 || n > kMaxDegree) throw UnknownName("degree out of range in '" + raw + "'");
    switch (name[0]) {
      case 'C': return generate_group(n, cyclic_gens(n));
      case 'D': return generate_group(n, dihedral_gens(n));
      case 'A': return alternating_group(n);
      case 'S': return symmetric_group(n);
    }
  }
  throw UnknownName("unknown group name '" + raw + "'");
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

PermGroup validate_entry(const CatalogEntry& entry) {
  PermGroup g;
  try {
    g = generate_group(entry.degree, entry.generators);
  } catch (const Error& e) {
    throw ValidationError("catalog entry " + entry.name + ": " + e.what());
  }
  if (g.order() != entry.expected_order)
    throw ValidationError("catalog entry " + entry.name + ": generated order " + std::to_string(g.order()) +
                          ", expected " + std::to_string(entry.expected_order));
  const bool prim = is_transitive(g) && is_primitive(g);
  if (prim != entry.primitive)
    throw ValidationError("catalog entry " + entry.name + ": primitivity flag is wrong");
  return g;
}

std::size_t validate_catalog() {
  for (const auto& e : catalog_entries()) (void)get_group(e.name);
  return catalog_entries().size();
}

std::string canonical_name(const std::string& name) {
  std::string s = trim(name);
  s = replace_all(s, "Gamma", "Γ");
  s = replace_all(s, " wr_sd ", "≀_sd ");
  s = replace_all(s, "wr_sd", "≀_sd ");
  s = replace_all(s, " wr ", "≀");
  s = replace_all(s, "wr", "≀");
  s = replace_all(s, " cap ", "∩");
  s = replace_all(s, "cap", "∩");
  s = replace_all(s, "x_sd", "×_sd ");
  s = replace_all(s, " x ", "×");
  // Lone 'x' between factors, e.g. "S_3xS_2".
  for (std::size_t i = 1; i + 1 < s.size(); ++i)
    if (s[i] == 'x' && (std::isdigit(static_cast<unsigned char>(s[i - 1])) || s[i - 1] == ')'))
      s.replace(i, 1, "×");
  // Normalize spacing: no spaces around operators except one after "_sd".
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  out = replace_all(out, "_sd", "_sd ");
  return out;
}

PermGroup get_group(const std::string& name) { return resolve(name); }

std::vector<const CatalogEntry*> primitive_entries(int degree) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog_entries())
    if (e.degree == degree && e.primitive) out.push_back(&e);
  return out;
}

std::string format_catalog(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  out << "# Named permutation groups. Each block: name, aliases, degree, order,\n"
         "# primitivity, then one generator per line in cycle notation.\n";
  for (const auto& e : entries) {
    out << "\nname: " << e.name << '\n';
    out << "aliases:";
    for (std::size_t i = 0; i < e.aliases.size(); ++i) out << (i ? "; " : " ") << e.aliases[i];
    out << '\n';
    out << "degree: " << e.degree << '\n';
    out << "order: " << e.expected_order << '\n';
    out << "primitive: " << (e.primitive ? "yes" : "no") << '\n';
    for (const auto& g : e.generators) out << format_perm(g) << '\n';
  }
  return out.str();
}

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t lineno = 0;
  CatalogEntry* cur = nullptr;
  auto bad = [&](const std::string& what) { throw ParseError(ParseError::Kind::InvalidToken, lineno, "catalog line " + std::to_string(lineno) + ": " + what); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) {
      cur = nullptr;
      continue;
    }
    auto value_of = [&](const std::string& key) -> std::optional<std::string> {
      if (line.rfind(key + ":", 0) == 0) return trim(line.substr(key.size() + 1));
      return std::nullopt;
    };
    if (auto v = value_of("name")) {
      out.emplace_back();
      cur = &out.back();
      cur->name = *v;
      continue;
    }
    if (!cur) bad("field outside an entry");
    if (auto v = value_of("aliases")) {
      std::istringstream ss(*v);
      std::string a;
      while (std::getline(ss, a, ';'))
        if (!trim(a).empty()) cur->aliases.push_back(trim(a));
    } else if (auto v = value_of("degree")) {
      cur->degree = std::stoi(*v);
    } else if (auto v = value_of("order")) {
      cur->expected_order = std::stoull(*v);
    } else if (auto v = value_of("primitive")) {
      if (*v != "yes" && *v != "no") bad("primitive must be yes or no");
      cur->primitive = *v == "yes";
    } else {
      if (cur->degree < 1) bad("generator before degree");
      try {
        cur->generators.push_back(parse_perm(line, cur->degree));
      } catch (const ParseError& e) {
        bad(e.what());
      }
    }
  }
  return out;
}

const std::string& shipped_catalog_text() {
  static const std::string text = embedded::catalog_text();
  return text;
}

SeressReport seress_report(int n, const Budgets& budgets) {
  SeressReport report;
  report.n = n;
  const auto entries = primitive_entries(n);
  std::vector<std::vector<std::uint32_t>> partitions;
  std::vector<int> class_of(entries.size(), -1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const PermGroup g = get_group(entries[i]->name);
    const OrbitPartition p = orbit_partition(g, 2, budgets.tuple_budget);
    std::vector<std::uint32_t> canon(p.canonical_map().begin(), p.canonical_map().end());
    for (std::size_t c = 0; c < partitions.size(); ++c)
      if (partitions[c] == canon) class_of[i] = static_cast<int>(c);
    if (class_of[i] < 0) {
      class_of[i] = static_cast<int>(partitions.size());
      partitions.push_back(std::move(canon));
      report.computed_classes.emplace_back();
    }
    report.computed_classes[class_of[i]].push_back(entries[i]->name);
  }

  std::istringstream expected(embedded::seress_text());
  std::string line;
  while (std::getline(expected, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto bar = line.find('|');
    if (std::stoi(line.substr(0, bar)) != n) continue;
    std::vector<std::string> cls;
    std::vector<std::string> names{""};
    int depth = 0;
    for (char c : line.substr(bar + 1)) {
      depth += c == '(' ? 1 : c == ')' ? -1 : 0;
      if (c == ',' && depth == 0)
        names.emplace_back();
      else
        names.back() += c;
    }
    for (const auto& name : names)
      if (const auto c = canonical_name(name); find_entry(c)) cls.push_back(find_entry(c)->name);
    if (cls.size() >= 2) report.expected_classes.push_back(std::move(cls));
  }

  // Every computed class with at least two members must be an expected class
  // and vice versa (as sets).
  auto normalized = [](std::vector<std::vector<std::string>> classes) {
    std::vector<std::vector<std::string>> out;
    for (auto& c : classes)
      if (c.size() >= 2) {
        std::sort(c.begin(), c.end());
        out.push_back(c);
      }
    std::sort(out.begin(), out.end());
    return out;
  };
  report.agree = normalized(report.computed_classes) == normalized(report.expected_classes);
  return report;
}

std::vector<Closed3Row> primitive_3closed_report(int n, const Budgets& budgets) {
  std::vector<Closed3Row> rows;
  for (const CatalogEntry* e : primitive_entries(n)) {
    const PermGroup g = get_group(e->name);
    Closed3Row row;
    row.name = e->name;
    row.order = g.order();
    row.closed = is_closed(g, 3, budgets);
    row.expected_closed = !(e->name == "A_" + std::to_string(n) && n >= 4);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace galois
