#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twonil {

/// A bijection of {1..n} in one-line notation: images()[i-1] == p(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Sequence of simple-reflection indices; s_{w[0]} s_{w[1]} ... with the
/// rightmost factor applied first.
using Word = std::vector<int>;

/// Function composition: compose(p, q)(i) == p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// s_i: swaps i and i+1.
Permutation simple_reflection(int n, int i);
/// The transposition exchanging i < j.
Permutation transposition(int n, int i, int j);

/// Number of inversions.
int length(const Permutation& p);

Permutation evaluate(int n, const Word& word);
bool is_reduced(int n, const Word& word);

/// Greedy reduced word: always strips the smallest left descent first.
Word reduced_word(const Permutation& p);

/// Bruhat order by the sorted-prefix (tableau) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

inline constexpr int kDefaultSubwordCap = 20;

/// Bruhat order by enumerating all subwords of a reduced word of w.
bool bruhat_leq_oracle(const Permutation& u, const Permutation& w,
                       int cap = kDefaultSubwordCap);

/// {tau : tau <= w}, sorted, computed from the subwords of reduced_word(w).
std::vector<Permutation> lower_interval(const Permutation& w,
                                        int cap = kDefaultSubwordCap);
/// Same, from a caller-chosen reduced word.
std::vector<Permutation> lower_interval(int n, const Word& reduced,
                                        int cap = kDefaultSubwordCap);

/// Positions (1-based, increasing) of an occurrence of `pattern` in w.
std::optional<std::vector<int>> find_pattern(const Permutation& w,
                                             const Permutation& pattern);
bool contains_pattern(const Permutation& w, const Permutation& pattern);

/// Every permutation of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// "2,4,1,3"
std::string to_string(const Permutation& p);
/// "s1.s3.s2"; the empty word prints as "e".
std::string to_string(const Word& word);

/// Accepts one-line ("2,4,1,3"), "id" (needs n), or a word ("s1.s3.s2",
/// needs n).
Permutation parse_permutation(std::string_view text, int n = 0);
Word parse_word(std::string_view text);

}  // namespace twonil
