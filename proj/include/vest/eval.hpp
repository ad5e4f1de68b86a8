#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vest/bits.hpp"
#include "vest/error.hpp"
#include "vest/instance.hpp"
#include "vest/linalg.hpp"
#include "vest/scalar.hpp"

namespace vest {

enum class Method { brute_force, dedup };

inline const char* to_string(Method m) { return m == Method::dedup ? "dedup" : "brute"; }

/// Which state representation the evaluators use. `automatic` picks packed
/// bits whenever the instance allows it; `generic` always uses exact
/// rational vectors.
enum class EvalPath { automatic, generic };

struct LevelSummary {
  std::size_t level = 0;
  std::size_t distinct_states = 0;
  BigInt mass;         // sum of all counts at this level
  BigInt annihilated;  // M_level
};

using LevelObserver = std::function<void(const LevelSummary&)>;

struct EvalOptions {
  BigInt brute_force_cap = 100'000'000;
  EvalPath path = EvalPath::automatic;
  LevelObserver on_level;
};

struct MSequenceResult {
  std::string instance_id;
  std::vector<std::pair<std::size_t, BigInt>> values;
  Method method = Method::dedup;
};

/// Level-j multiset of reachable states {T_{i_j}...T_{i_1} v} with multiplicities.
template <typename State, typename Map>
struct StateDistribution {
  std::size_t level = 0;
  Map entries;

  BigInt mass() const {
    BigInt total = 0;
    for (const auto& [state, count] : entries) total += count;
    return total;
  }
};

namespace detail {

// States are packed bit-vectors. Requires a 0/1 initial vector, and either
// GF(2) arithmetic or all-functional transformations.
class PackedEngine {
 public:
  using State = BitVector;
  using Map = std::unordered_map<BitVector, BigInt, BitVectorHash>;

  static bool applicable(const VestInstance& inst) {
    if (!inst.initial().is_binary()) return false;
    return inst.semiring() == Semiring::gf2 || inst.all_functional();
  }

  explicit PackedEngine(const VestInstance& inst) : semiring_(inst.semiring()), initial_(inst.initial().to_bits()) {
    const std::size_t d = inst.dimension();
    transforms_.reserve(inst.transformation_count());
    for (std::size_t i = 0; i < inst.transformation_count(); ++i) {
      Transform t;
      t.gather = inst.functional_form(i);
      if (!t.gather) t.rows = pack_rows(inst.transformation(i), d);
      transforms_.push_back(std::move(t));
    }
    const Matrix& s = inst.selector();
    if (semiring_ == Semiring::gf2) {
      selector_rows_ = pack_rows(s, d);
    } else if (s.all_entries([](const Rational& x) { return x > 0; })) {
      // With positive weights on a 0/1 state, S·x = 0 iff x misses S's support.
      support_ = BitVector(d);
      for (std::size_t r = 0; r < s.rows(); ++r)
        for (const auto& e : s.row(r)) support_->set(e.column);
    } else {
      selector_ = s;
    }
  }

  State initial() const { return initial_; }

  State apply(std::size_t i, const State& x) const {
    const auto& t = transforms_[i];
    if (t.gather) return t.gather->apply(x);
    BitVector out(x.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      if (t.rows[r].dot_parity(x)) out.set(r);
    return out;
  }

  bool annihilated(const State& x) const {
    if (semiring_ == Semiring::gf2) {
      for (const auto& row : selector_rows_)
        if (row.dot_parity(x)) return false;
      return true;
    }
    if (support_) return !support_->intersects(x);
    for (std::size_t r = 0; r < selector_.rows(); ++r) {
      Rational acc = 0;
      for (const auto& e : selector_.row(r))
        if (x.test(e.column)) acc += e.value;
      if (acc != 0) return false;
    }
    return true;
  }

 private:
  struct Transform {
    std::optional<FunctionalMatrix> gather;
    std::vector<BitVector> rows;
  };

  static std::vector<BitVector> pack_rows(const Matrix& m, std::size_t d) {
    std::vector<BitVector> rows(m.rows(), BitVector(d));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& e : m.row(r)) rows[r].set(e.column);
    return rows;
  }

  Semiring semiring_;
  BitVector initial_;
  std::vector<Transform> transforms_;
  std::vector<BitVector> selector_rows_;
  std::optional<BitVector> support_;
  Matrix selector_;
};

// Exact rational (or 0/1-valued GF(2)) vectors; always applicable.
class GenericEngine {
 public:
  using State = Vector;
  using Map = std::map<Vector, BigInt>;

  explicit GenericEngine(const VestInstance& inst) : inst_(&inst) {}

  State initial() const { return inst_->initial(); }

  State apply(std::size_t i, const State& x) const {
    if (const auto& f = inst_->functional_form(i)) return f->apply(x);
    return vest::apply(inst_->semiring(), inst_->transformation(i), x);
  }

  bool annihilated(const State& x) const { return is_zero_vector(vest::apply(inst_->semiring(), inst_->selector(), x)); }

 private:
  const VestInstance* inst_;
};

template <typename Fn>
decltype(auto) with_engine(const VestInstance& inst, EvalPath path, Fn&& fn) {
  if (path == EvalPath::automatic && PackedEngine::applicable(inst)) return fn(PackedEngine(inst));
  return fn(GenericEngine(inst));
}

template <typename Engine>
std::uint64_t count_tree(const Engine& engine, std::size_t m, const typename Engine::State& state,
                         std::size_t depth_left) {
  if (depth_left == 0) return engine.annihilated(state) ? 1 : 0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < m; ++i) total += count_tree(engine, m, engine.apply(i, state), depth_left - 1);
  return total;
}

template <typename Engine>
class DedupRun {
 public:
  using Distribution = StateDistribution<typename Engine::State, typename Engine::Map>;

  DedupRun(Engine engine, std::size_t m) : engine_(std::move(engine)), m_(m) {
    current_.entries.emplace(engine_.initial(), BigInt(1));
  }

  const Distribution& distribution() const noexcept { return current_; }

  LevelSummary summary() const {
    LevelSummary s;
    s.level = current_.level;
    s.distinct_states = current_.entries.size();
    s.mass = current_.mass();
    s.annihilated = 0;
    for (const auto& [state, count] : current_.entries)
      if (engine_.annihilated(state)) s.annihilated += count;
    return s;
  }

  void advance() {
    Distribution next;
    next.level = current_.level + 1;
    for (const auto& [state, count] : current_.entries) {
      for (std::size_t i = 0; i < m_; ++i) {
        auto [it, inserted] = next.entries.try_emplace(engine_.apply(i, state), count);
        if (!inserted) it->second += count;
      }
    }
    current_ = std::move(next);
  }

 private:
  Engine engine_;
  std::size_t m_;
  Distribution current_;
};

inline void ensure_within_cap(std::size_t m, std::size_t k, const BigInt& cap) {
  BigInt sequences = power(m, k);
  if (sequences > cap)
    throw Error(ErrorCode::resource_bound, "brute force needs " + sequences.str() + " sequences, cap is " +
                                               cap.str() + "; use --method dedup");
}

}  // namespace detail

/// Certificate check: true iff S·T_{seq[k-1]}···T_{seq[0]}·v = 0.
inline bool check_sequence(const VestInstance& inst, std::span<const std::size_t> seq,
                           EvalPath path = EvalPath::automatic) {
  for (std::size_t idx : seq)
    if (idx >= inst.transformation_count())
      throw Error(ErrorCode::index_out_of_range, "transformation index " + std::to_string(idx) + " not in [0, " +
                                                     std::to_string(inst.transformation_count()) + ")");
  return detail::with_engine(inst, path, [&](const auto& engine) {
    auto state = engine.initial();
    for (std::size_t idx : seq) state = engine.apply(idx, state);
    return engine.annihilated(state);
  });
}

inline bool check_sequence(const VestInstance& inst, std::initializer_list<std::size_t> seq,
                           EvalPath path = EvalPath::automatic) {
  return check_sequence(inst, std::span<const std::size_t>(seq.begin(), seq.size()), path);
}

/// M_k by enumerating the m^k index sequences depth-first; shared prefixes
/// are applied once.
inline BigInt m_k_bruteforce(const VestInstance& inst, std::size_t k, const EvalOptions& opts = {}) {
  const std::size_t m = inst.transformation_count();
  detail::ensure_within_cap(m, k, opts.brute_force_cap);
  return detail::with_engine(inst, opts.path, [&](const auto& engine) {
    return BigInt(detail::count_tree(engine, m, engine.initial(), k));
  });
}

/// Level-by-level propagation of distinct states with counts; computes
/// M_0..M_k_max in one pass.
inline std::vector<BigInt> m_values_dedup(const VestInstance& inst, std::size_t k_max, const EvalOptions& opts = {}) {
  return detail::with_engine(inst, opts.path, [&](auto engine) {
    detail::DedupRun run(std::move(engine), inst.transformation_count());
    std::vector<BigInt> out;
    out.reserve(k_max + 1);
    for (std::size_t level = 0;; ++level) {
      LevelSummary s = run.summary();
      if (opts.on_level) opts.on_level(s);
      out.push_back(std::move(s.annihilated));
      if (level == k_max) break;
      run.advance();
    }
    return out;
  });
}

inline BigInt m_k_dedup(const VestInstance& inst, std::size_t k, const EvalOptions& opts = {}) {
  return m_values_dedup(inst, k, opts).back();
}

inline MSequenceResult m_sequence(const VestInstance& inst, std::size_t k_max, Method method,
                                  const EvalOptions& opts = {}) {
  MSequenceResult result;
  result.instance_id = fingerprint(inst);
  result.method = method;
  if (method == Method::dedup) {
    auto values = m_values_dedup(inst, k_max, opts);
    for (std::size_t k = 0; k < values.size(); ++k) result.values.emplace_back(k, std::move(values[k]));
  } else {
    detail::ensure_within_cap(inst.transformation_count(), k_max, opts.brute_force_cap);
    for (std::size_t k = 0; k <= k_max; ++k) result.values.emplace_back(k, m_k_bruteforce(inst, k, opts));
  }
  return result;
}

}  // namespace vest
