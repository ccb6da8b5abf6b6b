#include "galois/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "galois/error.hpp"

namespace galois {

namespace {

constexpr int shift_of(int i) { return 4 * (kMaxDegree - 1 - i); }

void check_degree(int degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw InvalidArgument("degree " + std::to_string(degree) + " outside 0.." +
                          std::to_string(kMaxDegree));
}

}  // namespace

Permutation::Permutation(int degree) : degree_(degree) {
  check_degree(degree);
  for (int i = 0; i < degree; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  Permutation p;
  p.degree_ = n;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 0 || v >= n || seen[v])
      throw InvalidArgument("image array is not a bijection");
    seen[v] = true;
    p.images_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::from_images_one_based(std::span<const int> images) {
  std::vector<int> zero(images.begin(), images.end());
  for (int& v : zero) --v;
  return from_images(zero);
}

Permutation Permutation::from_key(PermKey key, int degree) {
  Permutation p;
  p.degree_ = degree;
  for (int i = 0; i < degree; ++i)
    p.images_[i] = static_cast<std::uint8_t>((key >> shift_of(i)) & 0xF);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::array<bool, kMaxDegree> used{};
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int a = cycle[j] - 1;
      if (a < 0 || a >= degree) throw InvalidArgument("cycle point out of range");
      if (used[a]) throw InvalidArgument("cycles are not disjoint");
      used[a] = true;
      p.images_[a] = static_cast<std::uint8_t>(cycle[(j + 1) % cycle.size()] - 1);
    }
  }
  return p;
}

std::vector<int> Permutation::images_one_based() const {
  std::vector<int> out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = images_[i] + 1;
  return out;
}

PermKey Permutation::key() const noexcept {
  PermKey k = 0;
  for (int i = 0; i < degree_; ++i) k |= PermKey{images_[i]} << shift_of(i);
  return k;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < degree_; ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) q.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return q;
}

int Permutation::sign() const noexcept {
  std::array<bool, kMaxDegree> seen{};
  int cycles = 0;
  for (int i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return ((degree_ - cycles) % 2 == 0) ? 1 : -1;
}

std::vector<int> Permutation::support() const {
  std::vector<int> out;
  for (int i = 0; i < degree_; ++i)
    if (images_[i] != i) out.push_back(i);
  return out;
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree_) throw InvalidArgument("cannot shrink a permutation");
  check_degree(new_degree);
  Permutation p = *this;
  p.degree_ = new_degree;
  for (int i = degree_; i < new_degree; ++i) p.images_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()) + ")");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = p(q(i));
  return Permutation::from_images(img);
}

PermKey compose_keys(PermKey p, PermKey q, int degree) noexcept {
  PermKey r = 0;
  for (int i = 0; i < degree; ++i) {
    const int qi = static_cast<int>((q >> shift_of(i)) & 0xF);
    const PermKey pqi = (p >> shift_of(qi)) & 0xF;
    r |= pqi << shift_of(i);
  }
  return r;
}

PermKey identity_key(int degree) noexcept {
  PermKey r = 0;
  for (int i = 0; i < degree; ++i) r |= PermKey(i) << shift_of(i);
  return r;
}

PermKey inverse_key(PermKey p, int degree) noexcept {
  PermKey r = 0;
  for (int i = 0; i < degree; ++i) {
    const int pi = static_cast<int>((p >> shift_of(i)) & 0xF);
    r |= PermKey(i) << shift_of(pi);
  }
  return r;
}

Permutation parse_perm(std::string_view text, int degree) {
  check_degree(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };

  skip_space();
  {
    std::size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (text.substr(pos, end - pos) == "id") return Permutation(degree);
  }

  std::vector<std::vector<int>> cycles;
  std::array<std::size_t, kMaxDegree + 1> first_seen{};
  std::array<bool, kMaxDegree + 1> used{};
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (text[pos] != '(') {
      if (text[pos] == ')')
        throw ParseError(ParseError::Kind::MalformedParentheses, pos, "unmatched ')'");
      throw ParseError(ParseError::Kind::InvalidToken, pos,
                       std::string("unexpected character '") + text[pos] + "'");
    }
    const std::size_t open = pos++;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size())
        throw ParseError(ParseError::Kind::MalformedParentheses, open, "unclosed '('");
      const char c = text[pos];
      if (c == ')') {
        ++pos;
        break;
      }
      if (c == '(')
        throw ParseError(ParseError::Kind::MalformedParentheses, pos, "nested '('");
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(ParseError::Kind::InvalidToken, pos,
                         std::string("unexpected character '") + c + "'");
      const std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) value = 1'000'000;
        ++pos;
      }
      if (value < 1 || value > degree)
        throw ParseError(ParseError::Kind::PointOutOfRange, start,
                         "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      if (used[value])
        throw ParseError(ParseError::Kind::RepeatedPoint, start,
                         "point " + std::to_string(value) + " repeated (first at position " +
                             std::to_string(first_seen[value]) + ")");
      used[value] = true;
      first_seen[value] = start;
      cycle.push_back(static_cast<int>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string format_perm(const Permutation& p) {
  std::string out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

}  // namespace galois
