#include "sgk/permutation.hpp"

#include <numeric>
#include <sstream>

#include "sgk/error.hpp"

namespace sgk {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      fail(ErrorCode::InvalidPermutation, "image list is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation id;
  id.images_.resize(degree);
  std::iota(id.images_.begin(), id.images_.end(), Point{0});
  return id;
}

Permutation Permutation::operator*(const Permutation& next) const {
  if (next.degree() != degree()) {
    fail(ErrorCode::DegreeMismatch, "cannot compose permutations of degree " +
                                        std::to_string(degree()) + " and " +
                                        std::to_string(next.degree()));
  }
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) result.images_[i] = next.images_[images_[i]];
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1ULL;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out << '(';
    bool first = true;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (!first) out << ' ';
      out << p + 1;
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      fail(ErrorCode::SyntaxError, "expected '(' at offset " + std::to_string(i) + " in \"" +
                                       std::string(text) + "\"");
    }
    ++i;
    std::vector<Point> cycle;
    while (true) {
      while (i < text.size() && (is_space(text[i]) || text[i] == ',')) ++i;
      if (i >= text.size()) fail(ErrorCode::SyntaxError, "unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') {
        fail(ErrorCode::SyntaxError, std::string("unexpected character '") + text[i] + "' in \"" +
                                         std::string(text) + "\"");
      }
      std::size_t value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree + 1) value = degree + 1;  // saturate; reported below
        ++i;
      }
      if (value == 0 || value > degree) {
        fail(ErrorCode::PointOutOfRange, "point " + std::to_string(value) + " outside 1.." +
                                             std::to_string(degree));
      }
      Point p = static_cast<Point>(value - 1);
      if (used[p]) fail(ErrorCode::RepeatedPoint, "point " + std::to_string(value) + " occurs twice");
      used[p] = true;
      cycle.push_back(p);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree) {
  std::vector<Permutation> result;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    bool blank = true;
    for (char c : piece) blank = blank && is_space(c);
    if (!blank) result.push_back(parse_cycles(piece, degree));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) fail(ErrorCode::SyntaxError, "unbalanced ')' in \"" + std::string(text) + "\"");
    if (depth == 0 && (c == ',' || c == ';')) {
      flush(i);
      start = i + 1;
    }
  }
  if (depth != 0) fail(ErrorCode::SyntaxError, "unbalanced '(' in \"" + std::string(text) + "\"");
  flush(text.size());
  return result;
}

}  // namespace sgk
