#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sleepcomb {

/// An OR of literals over n boolean variables: positive indices fire on 1,
/// negative indices fire on 0. The empty disjunction is the constant 0.
struct Disjunction {
  std::vector<int> positive;  // sorted 1-based indices, disjoint from negative
  std::vector<int> negative;

  bool eval(const std::vector<int>& x) const;
  std::vector<int> relevant() const;  // sorted union of both index sets
  bool is_positive(int index) const;
  std::string str() const;

  friend auto operator<=>(const Disjunction&, const Disjunction&) = default;
};

/// All 3^n disjunctions over n variables (each index is absent, positive or
/// negative), deterministically ordered. Throws TooLarge for n > 10.
std::vector<Disjunction> enumerate_disjunctions(int n);

struct StreamRound {
  std::vector<int> x;  // 0/1 entries, length n
  int y = 0;
};

using LabeledStream = std::vector<StreamRound>;

/// I.i.d. stream labeled by a target disjunction, with labels flipped
/// independently with probability flip_prob. Inputs are uniform over
/// {0,1}^n unless per-coordinate Bernoulli means are given.
LabeledStream make_iid_stream(const Disjunction& target, int n, int rounds, double flip_prob,
                              std::uint64_t seed, const std::vector<double>& bernoulli = {});

/// Stream file format: one line per round, n space-separated bits then the
/// label bit.
LabeledStream parse_stream(std::istream& is, int n);  // throws FormatError
void write_stream(std::ostream& os, const LabeledStream& stream);

long long count_mistakes(const Disjunction& phi, const LabeledStream& stream);

/// Brute-force hindsight oracle: the disjunction with the fewest mistakes
/// on the stream; ties break toward the lexicographically smaller
/// (positive, negative) index-set encoding.
std::pair<Disjunction, long long> best_disjunction(const LabeledStream& stream, int n);

}  // namespace sleepcomb
