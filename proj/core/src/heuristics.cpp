#include "pnsat/heuristics.hpp"

#include <limits>
#include <stdexcept>

namespace pnsat {

HeuristicConfig HeuristicConfig::make(HeuristicKind kind) {
  HeuristicConfig cfg;
  cfg.kind = kind;
  // Ties are broken by lowest index everywhere except VSIDS, whose
  // convention is a seeded random draw.
  cfg.tie_break =
      kind == HeuristicKind::Vsids ? TieBreak::SeededRandom : TieBreak::ByIndex;
  return cfg;
}

std::string HeuristicConfig::summary() const {
  switch (kind) {
    case HeuristicKind::Dlis:
      return "dlis";
    case HeuristicKind::Vsids:
      return "vsids";
    case HeuristicKind::PolaritySum:
      return "psum";
    case HeuristicKind::PolarityProduct:
      return "pnprod";
    case HeuristicKind::MomCombo:
      return "momcombo:" + std::to_string(combo_weight);
    case HeuristicKind::Mom:
      return "mom:" + std::to_string(mom_exponent);
    case HeuristicKind::PolarityProductDecay:
      return "pnprod-decay";
  }
  return "?";
}

HeuristicConfig heuristic_from_token(std::string_view token) {
  std::string_view name = token;
  std::string_view param;
  if (const auto colon = token.find(':'); colon != std::string_view::npos) {
    name = token.substr(0, colon);
    param = token.substr(colon + 1);
  }

  HeuristicConfig cfg;
  if (name == "dlis") {
    cfg = HeuristicConfig::make(HeuristicKind::Dlis);
  } else if (name == "vsids") {
    cfg = HeuristicConfig::make(HeuristicKind::Vsids);
  } else if (name == "psum") {
    cfg = HeuristicConfig::make(HeuristicKind::PolaritySum);
  } else if (name == "pnprod") {
    cfg = HeuristicConfig::make(HeuristicKind::PolarityProduct);
  } else if (name == "momcombo") {
    cfg = HeuristicConfig::make(HeuristicKind::MomCombo);
  } else if (name == "mom") {
    cfg = HeuristicConfig::make(HeuristicKind::Mom);
  } else if (name == "pnprod-decay") {
    cfg = HeuristicConfig::make(HeuristicKind::PolarityProductDecay);
  } else {
    throw std::invalid_argument("unknown heuristic: " + std::string(token));
  }

  if (!param.empty()) {
    long value = 0;
    try {
      value = std::stol(std::string(param));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad heuristic parameter: " + std::string(token));
    }
    if (cfg.kind == HeuristicKind::MomCombo) {
      cfg.combo_weight = value;
    } else if (cfg.kind == HeuristicKind::Mom) {
      if (value < 0 || value > 30)
        throw std::invalid_argument("mom exponent out of range: " + std::string(token));
      cfg.mom_exponent = static_cast<int>(value);
    } else {
      throw std::invalid_argument("heuristic takes no parameter: " + std::string(token));
    }
  }
  return cfg;
}

std::vector<HeuristicConfig> default_bench_heuristics() {
  std::vector<HeuristicConfig> out;
  out.push_back(HeuristicConfig::make(HeuristicKind::Dlis));
  out.push_back(HeuristicConfig::make(HeuristicKind::Vsids));
  out.push_back(HeuristicConfig::make(HeuristicKind::PolaritySum));
  HeuristicConfig combo32 = HeuristicConfig::make(HeuristicKind::MomCombo);
  combo32.combo_weight = 32;
  out.push_back(combo32);
  HeuristicConfig combo4 = HeuristicConfig::make(HeuristicKind::MomCombo);
  combo4.combo_weight = 4;
  out.push_back(combo4);
  out.push_back(HeuristicConfig::make(HeuristicKind::PolarityProduct));
  out.push_back(HeuristicConfig::make(HeuristicKind::PolarityProductDecay));
  return out;
}

ActivityTable::ActivityTable(int num_vars, double decay_divisor,
                             std::uint64_t decay_period)
    : act_(2 * (static_cast<std::size_t>(num_vars) + 1), 0.0),
      decay_divisor_(decay_divisor),
      decay_period_(decay_period) {
  if (decay_divisor <= 1.0)
    throw std::invalid_argument("ActivityTable: decay divisor must exceed 1");
}

void ActivityTable::on_clause_added(std::span<const Lit> lits) {
  for (Lit l : lits) act_[l.index()] += 1.0;
}

void ActivityTable::decay() {
  for (double& a : act_) a /= decay_divisor_;
}

std::int64_t mom_score(std::int64_t f_pos, std::int64_t f_neg, int exponent) {
  return (f_pos + f_neg) * (std::int64_t{1} << exponent) + f_pos * f_neg;
}

namespace {

// Generic argmax over candidates with the configured tie handling: ByIndex
// keeps the first maximum in iteration order (candidates are visited in
// ascending variable order, positive polarity first), SeededRandom collects
// the whole argmax set and draws one entry.
template <typename Score>
class Argmax {
 public:
  Argmax(TieBreak tie_break, Score lowest) : tie_break_(tie_break), best_(lowest) {}

  void offer(Lit l, Score score) {
    if (!any_ || score > best_) {
      any_ = true;
      best_ = score;
      ties_.clear();
      ties_.push_back(l);
    } else if (score == best_ && tie_break_ == TieBreak::SeededRandom) {
      ties_.push_back(l);
    }
  }

  bool any() const { return any_; }
  Score best() const { return best_; }

  Lit pick(SplitMix64& rng) const {
    if (ties_.size() == 1 || tie_break_ == TieBreak::ByIndex) return ties_.front();
    return ties_[rng.below(ties_.size())];
  }

 private:
  TieBreak tie_break_;
  bool any_ = false;
  Score best_;
  std::vector<Lit> ties_;
};

bool var_in_unresolved(const OccurrenceTracker& t, int var) {
  const Lit pos(var, false);
  return t.count(pos) > 0 || t.count(~pos) > 0;
}

Lit pick_dlis(const OccurrenceTracker& t, const HeuristicConfig& cfg,
              SplitMix64& rng) {
  Argmax<std::int64_t> best(cfg.tie_break, -1);
  for (int v = 1; v <= t.db().num_vars(); ++v) {
    if (t.assignment().assigned(v) || !var_in_unresolved(t, v)) continue;
    const Lit pos(v, false);
    best.offer(pos, t.count(pos));
    best.offer(~pos, t.count(~pos));
  }
  if (!best.any()) throw std::logic_error("pick_branch: no candidate literal");
  return best.pick(rng);
}

Lit pick_vsids(const OccurrenceTracker& t, const ActivityTable& act,
               const HeuristicConfig& cfg, SplitMix64& rng) {
  Argmax<double> best(cfg.tie_break, -1.0);
  for (int v = 1; v <= t.db().num_vars(); ++v) {
    if (t.assignment().assigned(v) || !var_in_unresolved(t, v)) continue;
    const Lit pos(v, false);
    best.offer(pos, act.activity(pos));
    best.offer(~pos, act.activity(~pos));
  }
  if (!best.any()) throw std::logic_error("pick_branch: no candidate literal");
  return best.pick(rng);
}

// Shared shape of the p/n family: score each candidate variable, assert its
// positive-group polarity.
template <typename ScoreFn>
Lit pick_by_var_score(const OccurrenceTracker& t, const HeuristicConfig& cfg,
                      SplitMix64& rng, ScoreFn&& score) {
  Argmax<std::int64_t> best(cfg.tie_break, std::numeric_limits<std::int64_t>::min());
  for (int v = 1; v <= t.db().num_vars(); ++v) {
    if (t.assignment().assigned(v) || !var_in_unresolved(t, v)) continue;
    best.offer(t.positive_polarity(v), score(t.pos_freq(v), t.neg_freq(v)));
  }
  if (!best.any()) throw std::logic_error("pick_branch: no candidate variable");
  return best.pick(rng);
}

Lit pick_mom(const OccurrenceTracker& t, const HeuristicConfig& cfg,
             SplitMix64& rng) {
  const ClauseDb& db = t.db();
  int min_size = std::numeric_limits<int>::max();
  for (int cid = 0; cid < t.attached_count(); ++cid) {
    if (!t.clause_unresolved(cid)) continue;
    const int free = t.clause_free_size(cid);
    if (free < min_size) min_size = free;
  }
  if (min_size == std::numeric_limits<int>::max())
    throw std::logic_error("pick_branch: no unresolved clause");

  // Frequencies restricted to the minimum-size unresolved clauses.
  std::vector<std::int64_t> freq(2 * (static_cast<std::size_t>(db.num_vars()) + 1), 0);
  for (int cid = 0; cid < t.attached_count(); ++cid) {
    if (!t.clause_unresolved(cid) || t.clause_free_size(cid) != min_size) continue;
    for (Lit l : db.lits(cid))
      if (!t.assignment().assigned(l.var())) ++freq[l.index()];
  }

  Argmax<std::int64_t> best(cfg.tie_break, -1);
  for (int v = 1; v <= db.num_vars(); ++v) {
    if (t.assignment().assigned(v)) continue;
    const Lit pos(v, false);
    const std::int64_t fp = freq[pos.index()];
    const std::int64_t fn = freq[(~pos).index()];
    if (fp == 0 && fn == 0) continue;
    best.offer(fp >= fn ? pos : ~pos, mom_score(fp, fn, cfg.mom_exponent));
  }
  if (!best.any()) throw std::logic_error("pick_branch: no candidate variable");
  return best.pick(rng);
}

Lit pick_product_decay(const OccurrenceTracker& t, const ActivityTable& act,
                       const HeuristicConfig& cfg, SplitMix64& rng) {
  Argmax<double> best(cfg.tie_break, -1.0);
  for (int v = 1; v <= t.db().num_vars(); ++v) {
    if (t.assignment().assigned(v) || !var_in_unresolved(t, v)) continue;
    const Lit pos(v, false);
    const double ap = act.activity(pos);
    const double an = act.activity(~pos);
    best.offer(ap >= an ? pos : ~pos, ap * an);
  }
  if (!best.any()) throw std::logic_error("pick_branch: no candidate variable");
  return best.pick(rng);
}

}  // namespace

Lit pick_branch(const HeuristicConfig& cfg, const OccurrenceTracker& tracker,
                const ActivityTable& activities, SplitMix64& rng) {
  switch (cfg.kind) {
    case HeuristicKind::Dlis:
      return pick_dlis(tracker, cfg, rng);
    case HeuristicKind::Vsids:
      return pick_vsids(tracker, activities, cfg, rng);
    case HeuristicKind::PolaritySum:
      return pick_by_var_score(tracker, cfg, rng,
                               [](std::int64_t p, std::int64_t n) { return p + n; });
    case HeuristicKind::PolarityProduct: {
      // All-zero products mean every candidate is one-sided; fall back to
      // the p + n ordering so pure-literal variables still rank sensibly.
      Argmax<std::int64_t> probe(TieBreak::ByIndex, -1);
      for (int v = 1; v <= tracker.db().num_vars(); ++v) {
        if (tracker.assignment().assigned(v) || !var_in_unresolved(tracker, v))
          continue;
        probe.offer(Lit(v, false), tracker.pos_freq(v) * tracker.neg_freq(v));
      }
      if (!probe.any()) throw std::logic_error("pick_branch: no candidate variable");
      if (probe.best() == 0)
        return pick_by_var_score(tracker, cfg, rng,
                                 [](std::int64_t p, std::int64_t n) { return p + n; });
      return pick_by_var_score(tracker, cfg, rng,
                               [](std::int64_t p, std::int64_t n) { return p * n; });
    }
    case HeuristicKind::MomCombo:
      return pick_by_var_score(tracker, cfg, rng,
                               [w = cfg.combo_weight](std::int64_t p, std::int64_t n) {
                                 return (p + n) * w + p * n;
                               });
    case HeuristicKind::Mom:
      return pick_mom(tracker, cfg, rng);
    case HeuristicKind::PolarityProductDecay:
      return pick_product_decay(tracker, activities, cfg, rng);
  }
  throw std::logic_error("pick_branch: unknown heuristic kind");
}

}  // namespace pnsat
