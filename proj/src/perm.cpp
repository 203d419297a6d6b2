#include "moduli/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace moduli {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const auto n = images.size();
  std::vector<bool> seen(n, false);
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) {
      throw std::invalid_argument("image list is not a bijection");
    }
    seen[v - 1] = true;
    p.images_[i] = v - 1;
  }
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k];
      if (a < 1 || static_cast<std::size_t>(a) > degree) {
        throw std::invalid_argument("symbol " + std::to_string(a) + " out of range");
      }
      if (used[a - 1]) {
        throw std::invalid_argument("symbol " + std::to_string(a) + " repeated in cycles");
      }
      used[a - 1] = true;
      const int b = cycle[(k + 1) % cycle.size()];
      p.images_[a - 1] = b - 1;
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
    }
    ++pos;
    std::vector<int> cycle;
    skip_space();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_space();
      continue;
    }
    while (true) {
      skip_space();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (start == pos) {
        throw std::invalid_argument("expected symbol in cycle notation: " + std::string(text));
      }
      cycle.push_back(std::stoi(std::string(text.substr(start, pos - start))));
      skip_space();
      if (pos >= text.size()) {
        throw std::invalid_argument("unterminated cycle: " + std::string(text));
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw std::invalid_argument("unexpected character in cycle notation: " + std::string(text));
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = static_cast<int>(i);
  }
  return inv;
}

Permutation Permutation::pow(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Permutation result(images_.size());
  while (e > 0) {
    if (e & 1UL) {
      result = result * base;
    }
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  for (const auto& c : cycles()) {
    ord = std::lcm(ord, c.size());
  }
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    std::vector<int> cycle;
    for (auto j = static_cast<int>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() < 2) {
      continue;
    }
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) {
        out += ',';
      }
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) {
    throw std::invalid_argument("degree mismatch in permutation product");
  }
  Permutation p(s.degree());
  for (std::size_t i = 0; i < s.degree(); ++i) {
    p.images_[i] = s.images_[t.images_[i]];
  }
  return p;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : p.cycles()) {
    lengths.push_back(static_cast<int>(c.size()));
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int transposition_count(const Permutation& p) {
  if (!(p * p).is_identity()) {
    throw std::invalid_argument(p.to_string() + " is not an involution");
  }
  int count = 0;
  for (const int len : cycle_type(p)) {
    count += len == 2 ? 1 : 0;
  }
  return count;
}

char to_char(FixedCase c) {
  switch (c) {
  case FixedCase::A: return 'A';
  case FixedCase::B: return 'B';
  case FixedCase::C: return 'C';
  }
  return '?';
}

FixedCase parse_case(std::string_view text) {
  if (text == "A" || text == "a") return FixedCase::A;
  if (text == "B" || text == "b") return FixedCase::B;
  if (text == "C" || text == "c") return FixedCase::C;
  throw std::invalid_argument("case must be one of A, B, C");
}

std::optional<FixedClass> classify_fixed_point_class(const Permutation& p) {
  if (p.is_identity()) {
    throw std::invalid_argument("the identity has no fixed-point class");
  }
  int m = 0;
  int long_cycles = 0;
  int fixed = 0;
  for (const int len : cycle_type(p)) {
    if (len == 1) {
      ++fixed;
    } else if (m == 0 || len == m) {
      m = len;
      ++long_cycles;
    } else {
      return std::nullopt;
    }
  }
  if (fixed > 2) {
    return std::nullopt;
  }
  return FixedClass{m, long_cycles - 1, static_cast<FixedCase>(fixed)};
}

Permutation canonical_rep(const FixedClass& c, int n) {
  if (c.m < 2 || c.r < 0 || n < 3 || ambient_n(c) != n) {
    throw std::invalid_argument("inconsistent class (m=" + std::to_string(c.m) + ", r=" + std::to_string(c.r) +
                                ", case " + to_char(c.fixed_case) + ") for n=" + std::to_string(n));
  }
  std::vector<std::vector<int>> cycles;
  for (int j = 0; j <= c.r; ++j) {
    std::vector<int> cycle(static_cast<std::size_t>(c.m));
    std::iota(cycle.begin(), cycle.end(), j * c.m + 1);
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(static_cast<std::size_t>(n + 1), cycles);
}

void for_each_permutation(std::size_t degree, const std::function<bool(const Permutation&)>& visit) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  do {
    if (!visit(Permutation::from_images(images))) {
      return;
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

} // namespace moduli
