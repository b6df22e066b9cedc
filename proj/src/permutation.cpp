#include "twonil/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "twonil/errors.hpp"

namespace twonil {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: images are not a bijection of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation::identity: negative size");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw SizeMismatch("compose: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) out[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation(std::move(out));
}

Permutation simple_reflection(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple_reflection: index out of range");
  return transposition(n, i, i + 1);
}

Permutation transposition(int n, int i, int j) {
  if (i < 1 || j > n || i >= j) throw std::out_of_range("transposition: need 1 <= i < j <= n");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(images));
}

int length(const Permutation& p) {
  int inversions = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p(i) > p(j)) ++inversions;
    }
  }
  return inversions;
}

Permutation evaluate(int n, const Word& word) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  // Right-multiplying by s_i swaps positions i and i+1.
  for (int letter : word) {
    if (letter < 1 || letter >= n) throw std::out_of_range("evaluate: letter out of range");
    std::swap(images[static_cast<std::size_t>(letter - 1)], images[static_cast<std::size_t>(letter)]);
  }
  return Permutation(std::move(images));
}

bool is_reduced(int n, const Word& word) {
  return length(evaluate(n, word)) == static_cast<int>(word.size());
}

Word reduced_word(const Permutation& p) {
  const int n = p.size();
  std::vector<int> images(p.images().begin(), p.images().end());
  std::vector<int> position(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) position[static_cast<std::size_t>(images[static_cast<std::size_t>(i - 1)])] = i;

  Word word;
  for (;;) {
    // Left descent at i: value i+1 sits left of value i.
    int descent = 0;
    for (int i = 1; i < n; ++i) {
      if (position[static_cast<std::size_t>(i + 1)] < position[static_cast<std::size_t>(i)]) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    word.push_back(descent);
    std::swap(position[static_cast<std::size_t>(descent)], position[static_cast<std::size_t>(descent + 1)]);
  }
  return word;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw SizeMismatch("bruhat_leq: size mismatch");
  const int n = u.size();
  std::vector<int> pu;
  std::vector<int> pw;
  pu.reserve(static_cast<std::size_t>(n));
  pw.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(i)), u(i));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(i)), w(i));
    for (std::size_t a = 0; a < pu.size(); ++a) {
      if (pu[a] > pw[a]) return false;
    }
  }
  return true;
}

namespace {

void collect_subwords(const Word& word, std::size_t index, std::vector<int>& current,
                      std::vector<Permutation>& out) {
  if (index == word.size()) {
    out.emplace_back(current);
    return;
  }
  collect_subwords(word, index + 1, current, out);
  const auto letter = static_cast<std::size_t>(word[index]);
  std::swap(current[letter - 1], current[letter]);
  collect_subwords(word, index + 1, current, out);
  std::swap(current[letter - 1], current[letter]);
}

}  // namespace

std::vector<Permutation> lower_interval(int n, const Word& reduced, int cap) {
  if (static_cast<int>(reduced.size()) > cap) {
    throw CapExceeded("lower_interval: word length " + std::to_string(reduced.size()) +
                      " exceeds subword cap " + std::to_string(cap));
  }
  if (!is_reduced(n, reduced)) throw std::invalid_argument("lower_interval: word is not reduced");
  std::vector<int> current(static_cast<std::size_t>(n));
  std::iota(current.begin(), current.end(), 1);
  std::vector<Permutation> out;
  out.reserve(std::size_t{1} << reduced.size());
  collect_subwords(reduced, 0, current, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Permutation> lower_interval(const Permutation& w, int cap) {
  if (length(w) > cap) {
    throw CapExceeded("lower_interval: length " + std::to_string(length(w)) +
                      " exceeds subword cap " + std::to_string(cap));
  }
  return lower_interval(w.size(), reduced_word(w), cap);
}

bool bruhat_leq_oracle(const Permutation& u, const Permutation& w, int cap) {
  if (u.size() != w.size()) throw SizeMismatch("bruhat_leq_oracle: size mismatch");
  const auto interval = lower_interval(w, cap);
  return std::binary_search(interval.begin(), interval.end(), u);
}

std::optional<std::vector<int>> find_pattern(const Permutation& w, const Permutation& pattern) {
  const int n = w.size();
  const int m = pattern.size();
  if (m > n) throw std::invalid_argument("find_pattern: pattern longer than permutation");
  if (m == 0) return std::vector<int>{};

  std::vector<int> chosen(static_cast<std::size_t>(m));
  std::iota(chosen.begin(), chosen.end(), 1);
  for (;;) {
    bool match = true;
    for (int a = 0; a < m && match; ++a) {
      for (int b = a + 1; b < m && match; ++b) {
        const bool w_less = w(chosen[static_cast<std::size_t>(a)]) < w(chosen[static_cast<std::size_t>(b)]);
        const bool p_less = pattern(a + 1) < pattern(b + 1);
        match = (w_less == p_less);
      }
    }
    if (match) return chosen;

    // Next m-combination of {1..n} in lexicographic order.
    int idx = m - 1;
    while (idx >= 0 && chosen[static_cast<std::size_t>(idx)] == n - m + idx + 1) --idx;
    if (idx < 0) return std::nullopt;
    ++chosen[static_cast<std::size_t>(idx)];
    for (int t = idx + 1; t < m; ++t) {
      chosen[static_cast<std::size_t>(t)] = chosen[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
}

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
  return find_pattern(w, pattern).has_value();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) os << ',';
    os << p(i);
  }
  return os.str();
}

std::string to_string(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) os << '.';
    os << 's' << word[i];
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view text) {
  text = trim(text);
  Word word;
  if (text.empty() || text == "e" || text == "id") return word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '.' || c == '*' || std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != 's') throw std::invalid_argument("parse_word: expected 's' in '" + std::string(text) + "'");
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos + 1) throw std::invalid_argument("parse_word: missing index in '" + std::string(text) + "'");
    word.push_back(parse_int(text.substr(pos + 1, end - pos - 1)));
    pos = end;
  }
  return word;
}

Permutation parse_permutation(std::string_view text, int n) {
  text = trim(text);
  if (text == "id" || text == "e" || (!text.empty() && text.front() == 's')) {
    if (n <= 0) throw std::invalid_argument("parse_permutation: size required for '" + std::string(text) + "'");
    return evaluate(n, parse_word(text));
  }
  std::vector<int> images;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    images.push_back(parse_int(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  Permutation p(std::move(images));
  if (n > 0 && p.size() != n) throw SizeMismatch("parse_permutation: expected " + std::to_string(n) + " entries");
  return p;
}

}  // namespace twonil
