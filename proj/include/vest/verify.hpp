#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "vest/eval.hpp"
#include "vest/graph.hpp"
#include "vest/reduction.hpp"
#include "vest/scalar.hpp"

namespace vest {

struct VerificationRow {
  std::size_t k = 0;
  BigInt m_k;
  BigInt d_k;
  BigInt expected;  // k! * D_k
  bool pass = false;
  double seconds = 0.0;
};

struct VerificationReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  Semiring semiring = Semiring::gf2;
  Method method = Method::dedup;
  std::vector<VerificationRow> rows;

  bool passed() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  Semiring semiring = Semiring::gf2;
  Method method = Method::dedup;
  EvalOptions eval;
  BigInt subset_cap = 100'000'000;
  // Applied to the reduced instance before evaluation; used for negative controls.
  std::function<VestInstance(const ReducedInstance&)> mutate;
};

/// Disables the repeat gadget of vertex 0: M_0 no longer copies u_3 into u_2,
/// so sequences that reuse vertex 0 stop being rejected.
inline VestInstance inject_repeat_fault(const ReducedInstance& reduced) {
  const auto& layout = reduced.layout;
  Matrix broken = reduced.instance.transformation(0).with_entry(layout.u2(0), layout.u3(0), Rational(0));
  return reduced.instance.with_transformation(0, std::move(broken));
}

/// Reduces g, evaluates M_0..M_{k_max}, counts D_k with the brute-force
/// oracle and compares M_k against k! * D_k row by row.
inline VerificationReport verify_reduction(const Graph& g, std::size_t k_max, const VerifyOptions& opts = {}) {
  using clock = std::chrono::steady_clock;
  VerificationReport report;
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  report.semiring = opts.semiring;
  report.method = opts.method;

  ReducedInstance reduced = reduce(g, opts.semiring);
  const VestInstance instance = opts.mutate ? opts.mutate(reduced) : reduced.instance;

  std::vector<BigInt> m_values;
  std::vector<double> m_seconds;
  auto last = clock::now();
  if (opts.method == Method::dedup) {
    EvalOptions eval = opts.eval;
    eval.on_level = [&](const LevelSummary& s) {
      auto now = clock::now();
      m_seconds.push_back(std::chrono::duration<double>(now - last).count());
      last = now;
      if (opts.eval.on_level) opts.eval.on_level(s);
    };
    m_values = m_values_dedup(instance, k_max, eval);
  } else {
    for (std::size_t k = 0; k <= k_max; ++k) {
      m_values.push_back(m_k_bruteforce(instance, k, opts.eval));
      auto now = clock::now();
      m_seconds.push_back(std::chrono::duration<double>(now - last).count());
      last = now;
    }
  }

  for (std::size_t k = 0; k <= k_max; ++k) {
    auto start = clock::now();
    VerificationRow row;
    row.k = k;
    row.m_k = m_values[k];
    row.d_k = count_dominating_sets(g, k, opts.subset_cap);
    row.expected = factorial(static_cast<unsigned>(k)) * row.d_k;
    row.pass = row.m_k == row.expected;
    row.seconds = m_seconds[k] + std::chrono::duration<double>(clock::now() - start).count();
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  out << "graph: n=" << report.vertices << " edges=" << report.edges << "  semiring=" << to_string(report.semiring)
      << "  evaluator=" << to_string(report.method) << "\n";
  for (const auto& r : report.rows) {
    out << "k=" << r.k << "  M_k=" << r.m_k << "  D_k=" << r.d_k << "  k!*D_k=" << r.expected << "  "
        << (r.pass ? "PASS" : "FAIL") << "  (" << r.seconds << " s)\n";
  }
  out << (report.passed() ? "all rows pass" : "VERIFICATION FAILED") << "\n";
  return out.str();
}

inline nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"k", r.k},
                    {"M", r.m_k.str()},
                    {"D", r.d_k.str()},
                    {"k!D", r.expected.str()},
                    {"pass", r.pass},
                    {"seconds", r.seconds}});
  }
  return {{"graph", {{"n", report.vertices}, {"edges", report.edges}}},
          {"semiring", to_string(report.semiring)},
          {"evaluator", to_string(report.method)},
          {"rows", rows},
          {"passed", report.passed()}};
}

}  // namespace vest
