#include "sleepcomb/extensible.hpp"

#include <memory>
#include <random>
#include <sstream>

#include "sleepcomb/errors.hpp"
#include "sleepcomb/problems.hpp"

namespace sleepcomb {

namespace {

int max_tagged_index(const Instance& inst) {
  int max_index = 0;
  for (const Label& l : inst.ground())
    if (l.is_tagged()) max_index = std::max(max_index, l.index());
  return max_index;
}

int max_anonymous_id(const Instance& inst) {
  int max_id = -1;
  for (const Label& l : inst.ground())
    if (l.is_anonymous()) max_id = std::max(max_id, l.anon_id());
  return max_id;
}

std::string bits_str(const std::vector<int>& bits) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < bits.size(); ++i) os << (i ? "," : "") << bits[i];
  os << ')';
  return os.str();
}

}  // namespace

Label ExtendedInstance::bit_label(int i, int b) const {
  return Label::tagged(bit_index_offset + i, b ? Tag::One : Tag::Zero);
}

Action ExtendedInstance::bit_action(const std::vector<int>& bits) const {
  std::vector<Label> labels;
  labels.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    labels.push_back(bit_label(static_cast<int>(i) + 1, bits[i]));
  return Action(std::move(labels));
}

SleepingSet ExtendedInstance::complement_bits(const std::vector<int>& bits) const {
  std::vector<Label> labels;
  labels.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    labels.push_back(bit_label(static_cast<int>(i) + 1, 1 - bits[i]));
  return SleepingSet(std::move(labels));
}

ExtendedInstance extend(const InstancePtr& base, int p, MinCutGadget gadget) {
  if (p < 1) throw FormatError("extension parameter p must be >= 1");
  ExtendedInstance ext;
  ext.base = base;
  ext.p = p;
  ext.bit_index_offset = max_tagged_index(*base);

  std::vector<Label> bits;
  for (int i = 1; i <= p; ++i) {
    bits.push_back(ext.bit_label(i, 0));
    bits.push_back(ext.bit_label(i, 1));
  }
  ext.bit_labels = LabelSet(bits);

  const LabelSet base_ground = base->ground_set();
  ext.project = [base_ground](const Action& v) { return v.intersect(base_ground); };

  switch (base->family()) {
    case Family::ShortestPath: {
      const auto& sp = dynamic_cast<const ShortestPathInstance&>(*base);
      Graph g = sp.graph();
      const int chain_first = g.num_vertices;
      for (int i = 1; i <= p; ++i) {
        const int from = chain_first + i - 1;
        const int to = i < p ? chain_first + i : *g.source;
        g.add_edge(from, to, ext.bit_label(i, 0));
        g.add_edge(from, to, ext.bit_label(i, 1));
      }
      g.source = chain_first;
      ext.derived = std::make_shared<ShortestPathInstance>(std::move(g));
      break;
    }
    case Family::SpanningTree: {
      const auto& st = dynamic_cast<const SpanningTreeInstance&>(*base);
      Graph g = st.graph();
      const int chain_first = g.num_vertices;
      for (int i = 1; i <= p; ++i) {
        const int from = chain_first + i - 1;
        const int to = i < p ? chain_first + i : 0;
        g.add_edge(from, to, ext.bit_label(i, 0));
        g.add_edge(from, to, ext.bit_label(i, 1));
      }
      ext.derived = std::make_shared<SpanningTreeInstance>(std::move(g));
      break;
    }
    case Family::KSubsets: {
      const auto& ks = dynamic_cast<const KSubsetsInstance&>(*base);
      std::vector<Label> ground = base->ground();
      ground.insert(ground.end(), bits.begin(), bits.end());
      ext.derived = std::make_shared<KSubsetsInstance>(ks.k() + p, std::move(ground));
      const int k = ks.k();
      ext.project = [base_ground, k](const Action& v) {
        const Action in_base = v.intersect(base_ground);
        std::vector<Label> kept(in_base.begin(), in_base.end());
        if (static_cast<int>(kept.size()) > k) kept.resize(k);  // lexicographically smallest k
        return Action(std::move(kept));
      };
      break;
    }
    case Family::TruncatedPerm: {
      const auto& tp = dynamic_cast<const TruncatedPermInstance&>(*base);
      const int k = tp.k();
      const int m = tp.m();
      std::vector<std::vector<Label>> labels(k + p, std::vector<Label>(m + 2 * p));
      int anon = max_anonymous_id(*base) + 1;
      for (int i = 0; i < k + p; ++i) {
        for (int j = 0; j < m + 2 * p; ++j) {
          if (i < k && j < m) {
            labels[i][j] = tp.edge_label(i, j);
          } else if (i >= k && j >= m && (j - m) / 2 == i - k) {
            labels[i][j] = ext.bit_label(i - k + 1, (j - m) % 2);
          } else {
            labels[i][j] = Label::anonymous(anon++);
          }
        }
      }
      ext.derived = std::make_shared<TruncatedPermInstance>(k + p, m + 2 * p, std::move(labels));
      break;
    }
    case Family::BipartiteMatching: {
      const auto& bm = dynamic_cast<const BipartiteMatchingInstance&>(*base);
      Graph g = bm.graph();
      const int first = g.num_vertices;
      for (int i = 1; i <= p; ++i) {
        const int u = first + 2 * (i - 1);
        const int v = u + 1;
        g.add_edge(u, v, ext.bit_label(i, 0));
        g.add_edge(u, v, ext.bit_label(i, 1));
      }
      ext.derived = std::make_shared<BipartiteMatchingInstance>(std::move(g));
      break;
    }
    case Family::MinCut: {
      const auto& mc = dynamic_cast<const MinCutInstance&>(*base);
      Graph g = mc.graph();
      if (gadget == MinCutGadget::SeriesPair) {
        const int first = g.num_vertices;
        for (int i = 1; i <= p; ++i) {
          const int w = first + i - 1;
          g.add_edge(*g.source, w, ext.bit_label(i, 0));
          g.add_edge(w, *g.sink, ext.bit_label(i, 1));
        }
      } else {
        for (int i = 1; i <= p; ++i) {
          g.add_edge(*g.source, *g.sink, ext.bit_label(i, 0));
          g.add_edge(*g.source, *g.sink, ext.bit_label(i, 1));
        }
      }
      ext.derived = std::make_shared<MinCutInstance>(std::move(g));
      break;
    }
  }

  ext.permanently_sleeping = ext.derived->ground_set().minus(base_ground.unioned(ext.bit_labels));
  return ext;
}

VerifyReport verify_property1(const ExtendedInstance& ext, std::size_t cap,
                              std::size_t sample_budget, std::uint64_t seed) {
  VerifyReport report;
  report.detail = "property 1";
  const LabelSet base_ground = ext.base->ground_set();

  auto check_one = [&](const Action& derived_action) -> bool {
    if (derived_action.intersection_size(ext.bit_labels) > static_cast<std::size_t>(ext.p))
      return true;  // outside the projection's domain
    ++report.checked;
    const Action projected = ext.project(derived_action);
    const Action in_base = derived_action.intersect(base_ground);
    if (!projected.subset_of(in_base)) {
      report.ok = false;
      report.counterexample = derived_action;
      report.detail = "projection " + projected.str() + " is not within V' ∩ U";
      return false;
    }
    if (!ext.base->contains(projected)) {
      report.ok = false;
      report.counterexample = derived_action;
      report.detail = "projection " + projected.str() + " is not a base member";
      return false;
    }
    return true;
  };

  try {
    for (const Action& v : ext.derived->enumerate_awake(ext.permanently_sleeping, cap))
      if (!check_one(v)) return report;
    return report;
  } catch (const TooLarge&) {
    report.exhaustive = false;
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
    std::uniform_int_distribution<int> quant(0, 64);
    for (std::size_t trial = 0; trial < sample_budget; ++trial) {
      LossFunction losses(LossRange::UnitInterval);
      for (const Label& e : ext.derived->ground()) losses.set(e, quant(rng) / 64.0);
      const auto got = ext.derived->min_loss_awake(ext.permanently_sleeping, losses);
      if (!got) continue;
      if (!check_one(got->action)) return report;
    }
    return report;
  }
}

VerifyReport verify_property2(const ExtendedInstance& ext, std::size_t cap,
                              std::size_t sample_budget, std::uint64_t seed) {
  VerifyReport report;
  report.detail = "property 2";
  const std::vector<Action> base_actions = ext.base->enumerate(cap);

  auto check_pattern = [&](const std::vector<int>& bits) -> bool {
    const Action fragment = ext.bit_action(bits);
    for (const Action& v : base_actions) {
      ++report.checked;
      const Action candidate = fragment.unioned(v);
      if (!ext.derived->contains(candidate)) {
        report.ok = false;
        report.counterexample = candidate;
        report.detail = "b=" + bits_str(bits) + ", V=" + v.str() +
                        ": union is not a derived member";
        return false;
      }
    }
    return true;
  };

  if (ext.p <= 12) {
    std::vector<int> bits(ext.p, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ext.p); ++mask) {
      for (int i = 0; i < ext.p; ++i) bits[i] = static_cast<int>((mask >> i) & 1);
      if (!check_pattern(bits)) return report;
    }
    return report;
  }

  report.exhaustive = false;
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 29);
  std::vector<int> bits(ext.p, 0);
  for (std::size_t trial = 0; trial < sample_budget; ++trial) {
    for (int i = 0; i < ext.p; ++i) bits[i] = static_cast<int>(rng() & 1);
    if (!check_pattern(bits)) return report;
  }
  return report;
}

}  // namespace sleepcomb
