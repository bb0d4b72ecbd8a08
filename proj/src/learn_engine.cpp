#include "learn_engine.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "epimine/generalize.hpp"

namespace epimine::detail {

namespace {

// Atom code layout: arg index (5 bits) | comparator (3 bits) | value index
// into the grid (4 bits). 0xFFF pads unused condition slots; arg indices
// stay below 31, so no real atom collides with the padding.
constexpr std::uint64_t kPad = 0xFFF;
constexpr int kAtomBits = 12;
constexpr int kMaxConditions = 4;

std::uint64_t atom_code(std::size_t arg_idx, Comparator op, std::size_t val_idx) {
  return (static_cast<std::uint64_t>(arg_idx) << 7) |
         (static_cast<std::uint64_t>(op) << 4) | static_cast<std::uint64_t>(val_idx);
}

struct Workspace {
  std::vector<std::string> args;           // influencers then target
  std::vector<std::vector<Value>> columns; // per arg, per train row
  std::vector<Value> grid;
  std::vector<bool> is_attacker;
};

Atom decode_atom(const Workspace& ws, std::uint64_t code) {
  return Atom{ws.args[code >> 7], static_cast<Comparator>((code >> 4) & 7),
              ws.grid[code & 15]};
}

// Row-set bitmask per atom, built lazily: most of the 4096 code space never
// appears in a candidate.
struct MaskStore {
  const Workspace& ws;
  std::size_t words;
  std::vector<std::vector<std::uint64_t>> masks;
  std::vector<int> index;

  explicit MaskStore(const Workspace& ws)
      : ws(ws), words((ws.columns[0].size() + 63) / 64), index(4096, -1) {}

  const std::uint64_t* get(std::uint64_t code) {
    int& slot = index[code];
    if (slot < 0) {
      const Atom atom = decode_atom(ws, code);
      const std::vector<Value>& col = ws.columns[code >> 7];
      std::vector<std::uint64_t> mask(words, 0);
      for (std::size_t r = 0; r < col.size(); ++r)
        if (atom_holds(atom, col[r])) mask[r / 64] |= std::uint64_t{1} << (r % 64);
      slot = static_cast<int>(masks.size());
      masks.push_back(std::move(mask));
    }
    return masks[static_cast<std::size_t>(slot)].data();
  }
};

std::int64_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::int64_t n = 0;
  for (std::size_t i = 0; i < words; ++i) n += std::popcount(a[i] & b[i]);
  return n;
}

// Appends the keys of every rule with head `head` and 1..cap conditions
// drawn from `codes` (sorted ascending, so each key is canonical).
void push_subset_keys(const std::vector<std::uint64_t>& codes, std::uint64_t head, int cap,
                      std::vector<std::uint64_t>& out) {
  const std::size_t n = codes.size();
  std::uint64_t slots[kMaxConditions];
  auto descend = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth > 0) {
      std::uint64_t key = head << (kAtomBits * kMaxConditions);
      for (int i = 0; i < kMaxConditions; ++i)
        key |= (i < depth ? slots[i] : kPad) << (kAtomBits * i);
      out.push_back(key);
    }
    if (depth == cap) return;
    for (std::size_t i = start; i < n; ++i) {
      slots[depth] = codes[i];
      self(self, i + 1, depth + 1);
    }
  };
  descend(descend, 0, 0);
}

}  // namespace

bool engine_eligible(const InfluenceTuple& I, const ExperimentConfig& cfg) {
  return I.influencers.size() + 1 <= 31 && cfg.value_set.size() <= 16 &&
         cfg.max_conditions <= kMaxConditions;
}

std::vector<Rule> learn_engine(const Dataset& train, const InfluenceTuple& I,
                               const RelationSet& rel, const ExperimentConfig& cfg,
                               std::int64_t* candidates) {
  const bool multi_way = cfg.pipeline == PipelineKind::MultiWay;
  const std::size_t n_inf = I.influencers.size();

  Workspace ws;
  ws.args = I.influencers;
  ws.args.push_back(I.target);
  // Two-way atoms only ever mention 0.5, whatever grid the config carries.
  ws.grid = multi_way ? cfg.value_set.values()
                      : std::vector<Value>{Value::zero(), Value::half(), Value::one()};
  ws.columns.resize(ws.args.size());
  for (std::size_t a = 0; a < ws.args.size(); ++a) {
    ws.columns[a].reserve(train.size());
    for (const DataItem& d : train.items) ws.columns[a].push_back(d.at(ws.args[a]));
  }
  ws.is_attacker.resize(n_inf);
  if (I.influencers.size() != rel.tags.size())
    raise(ErrorCode::LengthMismatch, "relation tags misaligned for " + I.target);
  for (std::size_t i = 0; i < n_inf; ++i) ws.is_attacker[i] = rel.tags[i] == 0;

  auto val_idx = [&](Value v) -> std::size_t {
    const auto it = std::lower_bound(ws.grid.begin(), ws.grid.end(), v);
    return static_cast<std::size_t>(it - ws.grid.begin());
  };

  // Candidate keys from every (surviving) row.
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> codes(n_inf);
  const Value half = Value::half();
  for (std::size_t r = 0; r < train.size(); ++r) {
    const Value tv = ws.columns[n_inf][r];
    std::uint64_t head;
    if (multi_way) {
      // Rationality check on the raw row before any widening.
      const Stance ts = stance_of(tv);
      bool att_some_b = false, att_all_d = true, sup_some_b = false, sup_all_d = true;
      bool has_att = false, has_sup = false;
      for (std::size_t i = 0; i < n_inf; ++i) {
        const Stance s = stance_of(ws.columns[i][r]);
        if (ws.is_attacker[i]) {
          has_att = true;
          att_some_b |= s == Stance::Believed;
          att_all_d &= s == Stance::Disbelieved;
        } else {
          has_sup = true;
          sup_some_b |= s == Stance::Believed;
          sup_all_d &= s == Stance::Disbelieved;
        }
      }
      bool violates;
      if (!has_sup)
        violates = (ts == Stance::Believed && att_some_b) ||
                   (ts == Stance::Disbelieved && att_all_d);
      else if (!has_att)
        violates = (ts == Stance::Disbelieved && sup_some_b) ||
                   (ts == Stance::Believed && sup_all_d);
      else
        violates = (ts == Stance::Disbelieved && att_all_d && sup_some_b) ||
                   (ts == Stance::Believed && sup_all_d && att_some_b);
      if (violates) continue;

      for (std::size_t i = 0; i < n_inf; ++i) {
        const Atom w = widen_atom(Atom{ws.args[i], Comparator::Eq, ws.columns[i][r]}, cfg.value_set);
        codes[i] = atom_code(i, w.op, val_idx(w.val));
      }
      const Atom hw = widen_atom(Atom{I.target, Comparator::Eq, tv}, cfg.value_set);
      head = atom_code(n_inf, hw.op, val_idx(hw.val));
    } else {
      for (std::size_t i = 0; i < n_inf; ++i) {
        const bool believed = ws.columns[i][r] > half;
        codes[i] = atom_code(i, believed ? Comparator::Gt : Comparator::Leq, val_idx(half));
      }
      head = atom_code(n_inf, tv > half ? Comparator::Gt : Comparator::Leq, val_idx(half));
    }
    std::sort(codes.begin(), codes.end());
    push_subset_keys(codes, head, cfg.max_conditions, keys);
  }
  if (candidates) *candidates = static_cast<std::int64_t>(keys.size());

  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  // Metric bars via popcounts, all comparisons cross-multiplied integers.
  MaskStore store(ws);
  const std::size_t words = store.words;
  const std::int64_t n = static_cast<std::int64_t>(train.size());
  const bool conf_on_fired = cfg.confidence_mode == ConfidenceMode::Fired;
  std::vector<std::uint64_t> fired_mask(words);
  std::vector<std::uint64_t> surviving;
  for (const std::uint64_t key : keys) {
    bool first = true;
    for (int i = 0; i < kMaxConditions; ++i) {
      const std::uint64_t code = (key >> (kAtomBits * i)) & kPad;
      if (code == kPad) break;
      const std::uint64_t* m = store.get(code);
      if (first)
        std::copy(m, m + words, fired_mask.begin());
      else
        for (std::size_t w = 0; w < words; ++w) fired_mask[w] &= m[w];
      first = false;
    }
    // fetched after the condition masks: get() may grow the store
    const std::uint64_t* head_mask = store.get(key >> (kAtomBits * kMaxConditions));
    std::int64_t fired = 0, agrees = 0;
    for (std::size_t w = 0; w < words; ++w) {
      fired += std::popcount(fired_mask[w]);
      agrees += std::popcount(head_mask[w]);
    }
    const std::int64_t correct = popcount_and(fired_mask.data(), head_mask, words);

    if (fired == 0 || agrees == 0) continue;                               // lift undefined
    if (fired * cfg.tau_support.den() <= cfg.tau_support.num() * n) continue;
    const std::int64_t conf_den = conf_on_fired ? fired : n;
    if (correct * cfg.tau_confidence.den() <= cfg.tau_confidence.num() * conf_den) continue;
    if (correct * n <= fired * agrees) continue;
    surviving.push_back(key);
  }

  // Same-head strict-subset pruning over the survivors.
  std::unordered_set<std::uint64_t> present(surviving.begin(), surviving.end());
  std::vector<Rule> out;
  for (const std::uint64_t key : surviving) {
    std::uint64_t codes_of[kMaxConditions];
    int n_cond = 0;
    while (n_cond < kMaxConditions) {
      const std::uint64_t code = (key >> (kAtomBits * n_cond)) & kPad;
      if (code == kPad) break;
      codes_of[n_cond++] = code;
    }
    const std::uint64_t head = key >> (kAtomBits * kMaxConditions);
    bool dominated = false;
    for (unsigned mask = 1; mask + 1 < (1u << n_cond) && !dominated; ++mask) {
      std::uint64_t sub = head << (kAtomBits * kMaxConditions);
      int slot = 0;
      for (int i = 0; i < n_cond; ++i)
        if (mask & (1u << i)) sub |= codes_of[i] << (kAtomBits * slot++);
      while (slot < kMaxConditions) sub |= kPad << (kAtomBits * slot++);
      dominated = present.count(sub) > 0;
    }
    if (dominated) continue;

    std::vector<Atom> conditions;
    for (int i = 0; i < n_cond; ++i) conditions.push_back(decode_atom(ws, codes_of[i]));
    out.push_back(Rule::make(std::move(conditions), decode_atom(ws, head)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rule> learn_generic(const Dataset& train, const InfluenceTuple& I,
                                const RelationSet& rel, const ExperimentConfig& cfg,
                                std::int64_t* candidates) {
  std::set<Rule> pool;
  std::int64_t instantiated = 0;
  for (const DataItem& d : train.items) {
    Rule generalized = [&] {
      if (cfg.pipeline == PipelineKind::TwoWay) return two_way_gen(d, I);
      const ExactRule exact = pre_gen(d, I);
      // Rows violating a principle contribute nothing.
      if (rational_filter({exact}, I, rel).empty()) return Rule{};
      return multi_way_gen(exact, cfg.value_set);
    }();
    if (generalized.conditions.empty()) continue;
    for (Rule& sub : expand_subrules(generalized, cfg.max_conditions)) {
      ++instantiated;
      pool.insert(std::move(sub));
    }
  }
  if (candidates) *candidates = instantiated;

  std::vector<Rule> deduped(pool.begin(), pool.end());
  std::vector<Rule> out =
      simplest(best(deduped, train, cfg.tau_support, cfg.tau_confidence, cfg.confidence_mode));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace epimine::detail
