#include "sleepcomb/disjunctions.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "sleepcomb/errors.hpp"

namespace sleepcomb {

bool Disjunction::eval(const std::vector<int>& x) const {
  for (int i : positive)
    if (x[i - 1] == 1) return true;
  for (int i : negative)
    if (x[i - 1] == 0) return true;
  return false;
}

std::vector<int> Disjunction::relevant() const {
  std::vector<int> out;
  std::merge(positive.begin(), positive.end(), negative.begin(), negative.end(),
             std::back_inserter(out));
  return out;
}

bool Disjunction::is_positive(int index) const {
  return std::binary_search(positive.begin(), positive.end(), index);
}

std::string Disjunction::str() const {
  if (positive.empty() && negative.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i : positive) {
    os << (first ? "" : " v ") << "x" << i;
    first = false;
  }
  for (int i : negative) {
    os << (first ? "" : " v ") << "!x" << i;
    first = false;
  }
  return os.str();
}

std::vector<Disjunction> enumerate_disjunctions(int n) {
  if (n < 0 || n > 10) throw TooLarge("disjunction enumeration limited to n <= 10");
  std::vector<Disjunction> out;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  out.reserve(total);
  std::vector<int> state(n, 0);  // 0 = absent, 1 = positive, 2 = negative
  while (true) {
    Disjunction phi;
    for (int i = 0; i < n; ++i) {
      if (state[i] == 1) phi.positive.push_back(i + 1);
      if (state[i] == 2) phi.negative.push_back(i + 1);
    }
    out.push_back(std::move(phi));
    int pos = 0;
    while (pos < n && state[pos] == 2) state[pos++] = 0;
    if (pos == n) break;
    ++state[pos];
  }
  return out;
}

LabeledStream make_iid_stream(const Disjunction& target, int n, int rounds, double flip_prob,
                              std::uint64_t seed, const std::vector<double>& bernoulli) {
  if (!bernoulli.empty() && static_cast<int>(bernoulli.size()) != n)
    throw FormatError("bernoulli means must match the variable count");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  LabeledStream stream;
  stream.reserve(rounds);
  for (int t = 0; t < rounds; ++t) {
    StreamRound r;
    r.x.resize(n);
    for (int i = 0; i < n; ++i) {
      const double mean = bernoulli.empty() ? 0.5 : bernoulli[i];
      r.x[i] = unit(rng) < mean ? 1 : 0;
    }
    r.y = target.eval(r.x) ? 1 : 0;
    if (flip_prob > 0.0 && unit(rng) < flip_prob) r.y = 1 - r.y;
    stream.push_back(std::move(r));
  }
  return stream;
}

LabeledStream parse_stream(std::istream& is, int n) {
  LabeledStream stream;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    StreamRound r;
    r.x.resize(n);
    for (int i = 0; i < n; ++i) {
      if (!(ls >> r.x[i]) || (r.x[i] != 0 && r.x[i] != 1))
        throw FormatError("stream line " + std::to_string(lineno) + ": bad input bit");
    }
    if (!(ls >> r.y) || (r.y != 0 && r.y != 1))
      throw FormatError("stream line " + std::to_string(lineno) + ": bad label bit");
    stream.push_back(std::move(r));
  }
  return stream;
}

void write_stream(std::ostream& os, const LabeledStream& stream) {
  for (const StreamRound& r : stream) {
    for (int b : r.x) os << b << ' ';
    os << r.y << '\n';
  }
}

long long count_mistakes(const Disjunction& phi, const LabeledStream& stream) {
  long long mistakes = 0;
  for (const StreamRound& r : stream)
    if ((phi.eval(r.x) ? 1 : 0) != r.y) ++mistakes;
  return mistakes;
}

std::pair<Disjunction, long long> best_disjunction(const LabeledStream& stream, int n) {
  const std::vector<Disjunction> all = enumerate_disjunctions(n);
  const Disjunction* best = nullptr;
  long long best_errors = 0;
  for (const Disjunction& phi : all) {
    const long long errors = count_mistakes(phi, stream);
    if (best == nullptr || errors < best_errors ||
        (errors == best_errors &&
         std::pair(phi.positive, phi.negative) < std::pair(best->positive, best->negative))) {
      best = &phi;
      best_errors = errors;
    }
  }
  return {*best, best_errors};
}

}  // namespace sleepcomb
