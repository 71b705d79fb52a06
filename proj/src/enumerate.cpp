#include "cybe/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

namespace cybe {

namespace {

// Structure constants reduced mod p, grouped by output index.
struct ModTerm {
  std::uint32_t i, j;
  std::uint64_t c;
};

class ModularResidual {
public:
  explicit ModularResidual(const LieAlgebra& L) : n_(L.dim()), p_(L.field().modulus()), into_(L.dim()) {
    for (std::size_t k = 0; k < n_; ++k) {
      for (const auto& t : L.terms_into(k)) {
        into_[k].push_back(ModTerm{static_cast<std::uint32_t>(t.i), static_cast<std::uint32_t>(t.j), t.value.residue()});
      }
    }
  }

  bool is_solution(const std::uint32_t* k) const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        for (std::size_t c = 0; c < n_; ++c) {
          if (coefficient(k, a, b, c) != 0) return false;
        }
      }
    }
    return true;
  }

private:
  std::uint64_t coefficient(const std::uint32_t* k, std::size_t a, std::size_t b, std::size_t c) const {
    std::uint64_t acc = 0;
    for (const auto& t : into_[a]) acc += t.c * (std::uint64_t{k[t.i * n_ + b]} * k[t.j * n_ + c] % p_) % p_;
    for (const auto& t : into_[b]) acc += t.c * (std::uint64_t{k[a * n_ + t.i]} * k[t.j * n_ + c] % p_) % p_;
    for (const auto& t : into_[c]) acc += t.c * (std::uint64_t{k[a * n_ + t.i]} * k[b * n_ + t.j] % p_) % p_;
    return acc % p_;
  }

  std::size_t n_;
  std::uint64_t p_;
  std::vector<std::vector<ModTerm>> into_;
};

struct BlockResult {
  std::uint64_t solutions = 0, predicted = 0, matched = 0, missed = 0, spurious = 0;
  std::vector<Grid> solution_grids;
  std::vector<Grid> missed_witnesses, spurious_witnesses;
  std::map<SolutionLabel, std::uint64_t> label_counts;
};

struct ScanSpec {
  bool collect_solutions = false;
  bool classify = false;
  std::size_t witness_cap = 0;
};

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

void require_enumerable(const LieAlgebra& L, const EnumerationOptions& opts) {
  if (!L.field().is_prime()) throw Error("exhaustive enumeration needs a prime field");
  const std::uint64_t total = candidate_count(L);
  if (total > opts.budget) {
    throw BudgetExceeded("enumeration needs " + std::to_string(total) + " candidates, budget is " +
                         std::to_string(opts.budget));
  }
}

BlockResult scan_block(const LieAlgebra& L, const ModularResidual& oracle, const std::vector<Scalar>& residues,
                       std::size_t fixed, std::uint64_t block, const ScanSpec& spec) {
  const std::size_t n = L.dim();
  const std::size_t len = n * n;
  const std::uint32_t p = L.field().modulus();
  BlockResult out;

  Grid g(len, 0);
  for (std::size_t pos = fixed; pos-- > 0;) {
    g[pos] = static_cast<std::uint32_t>(block % p);
    block /= p;
  }
  Tensor2 r(n, L.field());
  for (std::size_t pos = 0; pos < len; ++pos) r.entries()[pos] = residues[g[pos]];

  while (true) {
    const bool solution = oracle.is_solution(g.data());
    bool predicted = false;
    if (spec.classify) {
      const auto labels = solution_labels(L, r);
      predicted = !labels.empty() && !labels.count(SolutionLabel::Unclassified);
      if (solution) {
        for (SolutionLabel l : labels) ++out.label_counts[l];
      }
    }
    if (solution) {
      ++out.solutions;
      if (spec.collect_solutions) out.solution_grids.push_back(g);
    }
    if (predicted) ++out.predicted;
    if (solution && predicted) ++out.matched;
    if (spec.classify && solution && !predicted) {
      ++out.missed;
      if (out.missed_witnesses.size() < spec.witness_cap) out.missed_witnesses.push_back(g);
    }
    if (!solution && predicted) {
      ++out.spurious;
      if (out.spurious_witnesses.size() < spec.witness_cap) out.spurious_witnesses.push_back(g);
    }

    // Odometer over the free positions, last entry fastest.
    std::size_t pos = len;
    while (pos > fixed) {
      --pos;
      if (++g[pos] < p) {
        r.entries()[pos] = residues[g[pos]];
        break;
      }
      g[pos] = 0;
      r.entries()[pos] = residues[0];
      if (pos == fixed) return out;
    }
    if (pos == fixed && len == fixed) return out;
  }
}

std::vector<BlockResult> scan(const LieAlgebra& L, const EnumerationOptions& opts, const ScanSpec& spec,
                              unsigned* workers_used) {
  require_enumerable(L, opts);
  const std::size_t len = L.dim() * L.dim();
  const std::size_t fixed = std::min<std::size_t>(2, len);
  const std::uint32_t p = L.field().modulus();
  const std::uint64_t blocks = checked_power(p, fixed);

  std::vector<Scalar> residues;
  for (std::uint32_t v = 0; v < p; ++v) residues.push_back(Scalar::from_int(v, L.field()));
  const ModularResidual oracle(L);

  unsigned workers = opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.workers;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
  if (workers_used) *workers_used = workers;

  std::vector<BlockResult> results(blocks);
  std::atomic<std::uint64_t> next{0};
  auto run = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) results[b] = scan_block(L, oracle, residues, fixed, b, spec);
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  return results;
}

} // namespace

Tensor2 grid_to_tensor(const Grid& g, FieldSpec field) {
  std::size_t n = 0;
  while (n * n < g.size()) ++n;
  if (n * n != g.size()) throw Error("grid length is not a square");
  Tensor2 r(n, field);
  for (std::size_t i = 0; i < g.size(); ++i) r.entries()[i] = Scalar::from_int(g[i], field);
  return r;
}

Grid tensor_to_grid(const Tensor2& r) {
  Grid g;
  for (const Scalar& s : r.entries()) g.push_back(s.residue());
  return g;
}

std::uint64_t candidate_count(const LieAlgebra& L) {
  if (!L.field().is_prime()) return std::numeric_limits<std::uint64_t>::max();
  return checked_power(L.field().modulus(), L.dim() * L.dim());
}

std::vector<Tensor2> enumerate_solutions(const LieAlgebra& L, const EnumerationOptions& opts) {
  ScanSpec spec;
  spec.collect_solutions = true;
  std::vector<Tensor2> out;
  for (const auto& block : scan(L, opts, spec, nullptr)) {
    for (const auto& g : block.solution_grids) out.push_back(grid_to_tensor(g, L.field()));
  }
  return out;
}

EnumerationReport verify_classification(const LieAlgebra& L, const EnumerationOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationReport rep;
  rep.regime = solution_regime(L);
  rep.empirical_only = rep.regime == Regime::Uncovered;
  rep.algebra = L.label();
  rep.dim = L.dim();
  rep.p = L.field().is_prime() ? L.field().modulus() : 0;

  ScanSpec spec;
  spec.classify = !rep.empirical_only;
  spec.witness_cap = opts.witness_cap;
  const auto blocks = scan(L, opts, spec, &rep.workers);
  rep.total = candidate_count(L);

  for (const auto& b : blocks) {
    rep.solutions += b.solutions;
    rep.predicted += b.predicted;
    rep.matched += b.matched;
    rep.missed += b.missed;
    rep.spurious += b.spurious;
    for (const auto& [label, count] : b.label_counts) rep.label_counts[label] += count;
    for (const auto& g : b.missed_witnesses) {
      if (rep.missed_witnesses.size() < opts.witness_cap) rep.missed_witnesses.push_back(g);
    }
    for (const auto& g : b.spurious_witnesses) {
      if (rep.spurious_witnesses.size() < opts.witness_cap) rep.spurious_witnesses.push_back(g);
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

bool same_result(const EnumerationReport& a, const EnumerationReport& b) {
  return a.p == b.p && a.algebra == b.algebra && a.dim == b.dim && a.regime == b.regime &&
         a.empirical_only == b.empirical_only && a.total == b.total && a.solutions == b.solutions &&
         a.predicted == b.predicted && a.matched == b.matched && a.missed == b.missed && a.spurious == b.spurious &&
         a.missed_witnesses == b.missed_witnesses && a.spurious_witnesses == b.spurious_witnesses &&
         a.label_counts == b.label_counts;
}

} // namespace cybe
