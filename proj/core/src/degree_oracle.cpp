#include "dyndeg/degree_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <map>
#include <numeric>

namespace dyndeg {

const std::array<OraclePrime, 20> kOraclePrimes = {{
    {2305843009196916737ull, 3ull},
    {2305843009146585089ull, 3ull},
    {2305843008777486337ull, 5ull},
    {2305843008643268609ull, 3ull},
    {2305843007888293889ull, 3ull},
    {2305843007586304001ull, 3ull},
    {2305843007368200193ull, 5ull},
    {2305843007334645761ull, 3ull},
    {2305843007217205249ull, 7ull},
    {2305843007015878657ull, 5ull},
    {2305843006780997633ull, 5ull},
    {2305843006160240641ull, 19ull},
    {2305843005958914049ull, 14ull},
    {2305843005824696321ull, 3ull},
    {2305843004767731713ull, 3ull},
    {2305843004314746881ull, 3ull},
    {2305843004012756993ull, 3ull},
    {2305843003945648129ull, 11ull},
    {2305843003559772161ull, 12ull},
    {2305843003358445569ull, 3ull},
}};

std::vector<UniPolyFp> ParamLine::tuple() const {
  std::vector<UniPolyFp> out;
  out.reserve(point_a.size());
  for (std::size_t i = 0; i < point_a.size(); ++i) {
    out.emplace_back(prime, std::vector<u64>{point_a[i], point_b[i]});
  }
  return out;
}

bool ParamLine::is_nondegenerate() const {
  // rank 2 of the 2x(k+1) coefficient matrix mod p
  FpCtx f(prime);
  for (std::size_t i = 0; i < point_a.size(); ++i) {
    for (std::size_t j = i + 1; j < point_a.size(); ++j) {
      const u64 cross = f.sub(f.mul(point_a[i], point_b[j]), f.mul(point_a[j], point_b[i]));
      if (cross != 0) return true;
    }
  }
  return false;
}

ParamLine ParamLine::random(u64 prime, int k, SplitMix64& rng) {
  ParamLine line;
  line.prime = prime;
  line.point_a.resize(k + 1);
  line.point_b.resize(k + 1);
  do {
    for (auto& v : line.point_a) v = rng.below(prime);
    for (auto& v : line.point_b) v = rng.below(prime);
  } while (!line.is_nondegenerate());
  return line;
}

namespace {

// component-wise substitution of the tuple into an expanded stage
std::vector<UniPolyFp> apply_tuple_stage(const CompiledTupleStage& st,
                                         const std::vector<UniPolyFp>& tuple, u64 p) {
  const std::size_t nvars = tuple.size();

  // entrywise-inversion pattern: every component is a monomial using all
  // variables but one to the first power; share prefix/suffix products
  if (st.all_monomial) {
    bool inversion_pattern = true;
    std::vector<int> missing(st.comps.size(), -1);
    for (std::size_t i = 0; i < st.comps.size() && inversion_pattern; ++i) {
      const auto& e = st.comps[i].front().second;
      int zero_at = -1;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) {
          if (zero_at >= 0) {
            inversion_pattern = false;
            break;
          }
          zero_at = static_cast<int>(j);
        } else if (e[j] != 1) {
          inversion_pattern = false;
          break;
        }
      }
      missing[i] = zero_at;
      inversion_pattern &= (zero_at >= 0);
    }
    if (inversion_pattern) {
      std::vector<UniPolyFp> pre, suf;
      pre.reserve(nvars + 1);
      suf.assign(nvars + 1, UniPolyFp(p));
      pre.push_back(UniPolyFp(p, {1}));
      for (std::size_t i = 0; i < nvars; ++i) pre.push_back(pre.back() * tuple[i]);
      suf[nvars] = UniPolyFp(p, {1});
      for (std::size_t i = nvars; i-- > 0;) suf[i] = suf[i + 1] * tuple[i];
      std::vector<UniPolyFp> out;
      out.reserve(st.comps.size());
      for (std::size_t i = 0; i < st.comps.size(); ++i) {
        const int m = missing[i];
        out.push_back((pre[m] * suf[m + 1]).scaled(st.comps[i].front().first));
      }
      return out;
    }
  }

  // generic path with cached powers of the tuple entries
  std::vector<std::vector<UniPolyFp>> powers(nvars);
  auto power = [&](std::size_t i, std::uint32_t e) -> const UniPolyFp& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.emplace_back(p, std::vector<u64>{1});
      cache.push_back(tuple[i]);
    }
    while (cache.size() <= e) cache.push_back(cache.back() * tuple[i]);
    return cache[e];
  };
  std::vector<UniPolyFp> out;
  out.reserve(st.comps.size());
  for (const auto& terms : st.comps) {
    UniPolyFp acc(p);
    for (const auto& [coeff, e] : terms) {
      UniPolyFp term(p, {coeff});
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) term = term * power(i, e[i]);
      }
      acc = acc + term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

// all cofactors of the tuple arranged as a q x q matrix, with memoized
// minors shared across components
class MinorTable {
 public:
  MinorTable(const std::vector<UniPolyFp>& entries, int q, u64 p)
      : entries_(entries), q_(q), p_(p) {}

  // det of the submatrix with the given row/column index sets (ascending)
  const UniPolyFp& minor_det(std::uint32_t rows, std::uint32_t cols) {
    auto it = memo_.find(key(rows, cols));
    if (it != memo_.end()) return it->second;
    UniPolyFp det(p_);
    const int r0 = std::countr_zero(rows);
    const std::uint32_t rest_rows = rows & (rows - 1);
    if (rest_rows == 0) {
      det = entry(r0, std::countr_zero(cols));
    } else {
      int sign = 1;
      for (std::uint32_t cbits = cols; cbits != 0; cbits &= cbits - 1) {
        const int c = std::countr_zero(cbits);
        const UniPolyFp& sub = minor_det(rest_rows, cols & ~(1u << c));
        UniPolyFp term = entry(r0, c) * sub;
        det = (sign > 0) ? det + term : det - term;
        sign = -sign;
      }
    }
    return memo_.emplace(key(rows, cols), std::move(det)).first->second;
  }

  std::vector<UniPolyFp> adjugate() {
    std::vector<UniPolyFp> out;
    out.reserve(q_ * q_);
    const std::uint32_t all = (1u << q_) - 1;
    for (int i = 0; i < q_; ++i) {
      for (int j = 0; j < q_; ++j) {
        UniPolyFp m = minor_det(all & ~(1u << j), all & ~(1u << i));
        if (((i + j) & 1) != 0) m = UniPolyFp(p_) - m;
        out.push_back(std::move(m));
      }
    }
    return out;
  }

 private:
  std::uint64_t key(std::uint32_t rows, std::uint32_t cols) const {
    return (std::uint64_t(rows) << 32) | cols;
  }
  const UniPolyFp& entry(int r, int c) const { return entries_[r * q_ + c]; }

  const std::vector<UniPolyFp>& entries_;
  int q_;
  u64 p_;
  std::map<std::uint64_t, UniPolyFp> memo_;
};

std::vector<UniPolyFp> apply_adjugate_stage(int q, const std::vector<UniPolyFp>& tuple,
                                            u64 p) {
  if (tuple.size() != static_cast<std::size_t>(q) * q) {
    throw ValidationError("adjugate stage: tuple size is not q^2");
  }
  MinorTable table(tuple, q, p);
  return table.adjugate();
}

std::vector<UniPolyFp> apply_matrix_inversion_stage(int q,
                                                    const std::vector<UniPolyFp>& tuple,
                                                    u64 p) {
  const std::size_t n = static_cast<std::size_t>(q) * q;
  if (tuple.size() != n) {
    throw ValidationError("matrix-inversion stage: tuple size is not q^2");
  }
  for (const auto& t : tuple) {
    if (t.is_zero()) {
      throw ComputationError("matrix-inversion stage: zero component (degenerate line)");
    }
  }
  // B_i = product of all entries but the i-th, via prefix/suffix products
  std::vector<UniPolyFp> pre, suf(n + 1, UniPolyFp(p));
  pre.reserve(n + 1);
  pre.push_back(UniPolyFp(p, {1}));
  for (std::size_t i = 0; i < n; ++i) pre.push_back(pre.back() * tuple[i]);
  suf[n] = UniPolyFp(p, {1});
  for (std::size_t i = n; i-- > 0;) suf[i] = suf[i + 1] * tuple[i];
  std::vector<UniPolyFp> b;
  b.reserve(n);
  for (std::size_t i = 0; i < n; ++i) b.push_back(pre[i] * suf[i + 1]);
  const UniPolyFp& total = pre[n];

  MinorTable table(b, q, p);
  std::vector<UniPolyFp> adj = table.adjugate();
  if (q > 2) {
    // every cofactor of B carries the structural factor total^(q-2)
    UniPolyFp divisor(p, {1});
    for (int e = 0; e < q - 2; ++e) divisor = divisor * total;
    for (auto& c : adj) c = c.divexact(divisor);
  }
  return adj;
}

std::vector<UniPolyFp> apply_stage(const CompiledStage& stage,
                                   const std::vector<UniPolyFp>& tuple, u64 p) {
  if (const auto* t = std::get_if<CompiledTupleStage>(&stage)) {
    return apply_tuple_stage(*t, tuple, p);
  }
  if (const auto* a = std::get_if<AdjugateStage>(&stage)) {
    return apply_adjugate_stage(a->q, tuple, p);
  }
  return apply_matrix_inversion_stage(std::get<MatrixInversionStage>(stage).q, tuple, p);
}

}  // namespace

std::pair<std::vector<UniPolyFp>, std::int64_t> pullback_step(
    const CompiledMap& map, const std::vector<UniPolyFp>& current) {
  if (current.size() != static_cast<std::size_t>(map.k) + 1) {
    throw ValidationError("pullback_step: tuple size != k+1");
  }
  std::vector<UniPolyFp> tuple = current;
  for (const auto& stage : map.stages) {
    tuple = apply_stage(stage, tuple, map.prime);
    tuple = tuple_reduce_univariate(tuple).reduced;
  }
  std::int64_t deg = 0;
  for (const auto& t : tuple) deg = std::max(deg, t.degree());
  return {std::move(tuple), deg};
}

std::pair<std::vector<UniPolyFp>, std::int64_t> pullback_step(
    const RationalMapSpec& map, const std::vector<UniPolyFp>& current) {
  if (current.empty()) throw ValidationError("pullback_step: empty tuple");
  const u64 p = current.front().prime();
  return pullback_step(compile_map(oracle_map_from_spec(map), p), current);
}

namespace {

TrialRecord run_trial(const OracleMap& map, int N, u64 trial_seed, u64 prime_hint,
                      int table_offset) {
  TrialRecord rec;
  SplitMix64 rng(trial_seed);
  constexpr int kMaxLineResamples = 8;
  constexpr int kMaxPrimeResamples = 3;

  u64 prime = map.fixed_prime != 0 ? map.fixed_prime : prime_hint;
  for (int prime_attempt = 0; prime_attempt <= kMaxPrimeResamples; ++prime_attempt) {
    CompiledMap compiled;
    try {
      compiled = compile_map(map, prime);
    } catch (const ComputationError&) {
      if (map.fixed_prime != 0) throw;
      rec.prime_resamples++;
      prime = kOraclePrimes[(table_offset + prime_attempt + 1) % kOraclePrimes.size()].prime;
      continue;
    }
    for (int line_attempt = 0; line_attempt <= kMaxLineResamples; ++line_attempt) {
      const u64 line_seed = rng.next();
      SplitMix64 line_rng(line_seed);
      ParamLine line = ParamLine::random(prime, map.k, line_rng);
      std::vector<UniPolyFp> tuple = line.tuple();
      std::vector<std::int64_t> degrees{1};
      bool ok = true;
      for (int n = 1; n <= N; ++n) {
        try {
          auto [next, deg] = pullback_step(compiled, tuple);
          tuple = std::move(next);
          degrees.push_back(deg);
        } catch (const ComputationError&) {
          ok = false;
          break;
        }
      }
      if (ok) {
        rec.prime = prime;
        rec.line_seed = line_seed;
        rec.degrees = std::move(degrees);
        return rec;
      }
      rec.line_resamples++;
    }
    if (map.fixed_prime != 0) break;
    rec.prime_resamples++;
    prime = kOraclePrimes[(table_offset + prime_attempt + 7) % kOraclePrimes.size()].prime;
  }
  throw ComputationError("degree_sequence: repeated degenerate samples beyond the retry budget");
}

}  // namespace

DegreeReport degree_sequence(const OracleMap& map, int N, int trials, u64 seed) {
  if (N < 1) throw ValidationError("degree_sequence: N must be >= 1");
  if (trials < 1) throw ValidationError("degree_sequence: trials must be >= 1");

  // distinct primes for the first trials, in a seed-shuffled table order
  std::array<int, 20> perm;
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 shuffle_rng(derive_seed(seed, 0xA11CEull));
  for (int i = 19; i > 0; --i) {
    std::swap(perm[i], perm[shuffle_rng.below(i + 1)]);
  }

  DegreeReport report;
  report.seed = seed;
  report.requested_n = N;
  report.label = map.label;

  std::vector<std::future<TrialRecord>> futures;
  futures.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    const u64 trial_seed = derive_seed(seed, static_cast<u64>(t));
    const int table_idx = perm[t % perm.size()];
    futures.push_back(std::async(std::launch::async, [&map, N, trial_seed, table_idx] {
      return run_trial(map, N, trial_seed, kOraclePrimes[table_idx].prime, table_idx);
    }));
  }
  for (auto& f : futures) report.trials.push_back(f.get());

  // per-index majority vote with explicit disagreement flags
  report.degrees.assign(N + 1, 1);
  report.agreement.assign(N + 1, true);
  for (int n = 0; n <= N; ++n) {
    std::map<std::int64_t, int> counts;
    for (const auto& tr : report.trials) counts[tr.degrees[n]]++;
    int best = 0;
    std::int64_t value = 0;
    for (const auto& [v, c] : counts) {
      if (c > best) {
        best = c;
        value = v;
      }
    }
    report.degrees[n] = value;
    report.agreement[n] = counts.size() == 1;
  }
  for (int n = 0; n + 1 <= N; ++n) {
    report.ratios.push_back(static_cast<double>(report.degrees[n + 1]) /
                            static_cast<double>(report.degrees[n]));
  }
  for (int n = 1; n <= N; ++n) {
    report.roots.push_back(
        std::pow(static_cast<double>(report.degrees[n]), 1.0 / static_cast<double>(n)));
  }
  return report;
}

DegreeReport degree_sequence(const RationalMapSpec& map, int N, int trials, u64 seed) {
  return degree_sequence(oracle_map_from_spec(map), N, trials, seed);
}

DeltaEstimate delta_estimate(const DegreeReport& report, double rel_tol) {
  if (report.degrees.size() < 3) {
    throw ValidationError("delta_estimate: report needs at least 3 indices");
  }
  DeltaEstimate est;
  const auto& d = report.degrees;
  const std::size_t N = d.size() - 1;
  est.ratio = static_cast<double>(d[N]) / static_cast<double>(d[N - 1]);
  est.root = std::pow(static_cast<double>(d[N]), 1.0 / static_cast<double>(N));
  if (d[N] == d[N - 1] && d[N - 1] == d[N - 2]) {
    est.bounded_growth = true;
    est.ratio = 1.0;
    est.converged = true;
    return est;
  }
  if (N >= 3) {
    const double r1 = static_cast<double>(d[N]) / d[N - 1];
    const double r2 = static_cast<double>(d[N - 1]) / d[N - 2];
    const double r3 = static_cast<double>(d[N - 2]) / d[N - 3];
    const double hi = std::max({r1, r2, r3});
    const double lo = std::min({r1, r2, r3});
    est.converged = (hi - lo) <= rel_tol * hi;
  }
  return est;
}

}  // namespace dyndeg
