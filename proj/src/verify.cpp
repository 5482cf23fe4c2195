#include "klinv/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <memory>
#include <random>
#include <sstream>

#include "klinv/bruhat.hpp"
#include "klinv/families.hpp"

namespace klinv {

namespace {

using Failures = std::vector<VerificationFailure>;

// Per-thread state. Thread 0 borrows the caller's cache; other threads own
// theirs, so no cache is ever shared between threads.
struct Workspace {
  KLCache* cache = nullptr;
  std::unique_ptr<KLCache> owned;
  std::unique_ptr<KLCache> alternate;

  KLCache& smallest_descent_cache()
  {
    if (!alternate) {
      KLCacheOptions opts = cache->options();
      opts.descent = DescentChoice::Smallest;
      alternate = std::make_unique<KLCache>(opts);
    }
    return *alternate;
  }
};

std::vector<Workspace> make_workspaces(KLCache& cache, int count)
{
  std::vector<Workspace> out(std::max(count, 1));
  out[0].cache = &cache;
  for (std::size_t t = 1; t < out.size(); ++t) {
    out[t].owned = std::make_unique<KLCache>(cache.options());
    out[t].cache = out[t].owned.get();
  }
  return out;
}

template <class Case, class Eval>
std::vector<Failures> run_cases_serial(const std::vector<Case>& cases, Workspace& ws, Eval& eval)
{
  std::vector<Failures> results(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i)
    results[i] = eval(cases[i], ws);
  return results;
}

template <class Case, class Eval>
std::vector<Failures> run_cases_parallel(const std::vector<Case>& cases,
                                         std::vector<Workspace>& workspaces, Eval& eval)
{
  const long count = static_cast<long>(cases.size());
  const int threads = static_cast<int>(workspaces.size());
  std::vector<Failures> results(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    Workspace& ws = workspaces[omp_get_thread_num()];
    try {
      results[i] = eval(cases[i], ws);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return results;
}

template <class Case, class Eval>
VerificationReport run_check(std::string check, std::string range, std::vector<Case> cases,
                             KLCache& cache, const VerifyOptions& options, Eval eval)
{
  const auto start = std::chrono::steady_clock::now();
  if (options.max_cases && *options.max_cases >= 0 &&
      static_cast<std::size_t>(*options.max_cases) < cases.size())
    cases.erase(cases.begin() + *options.max_cases, cases.end());

  std::vector<Failures> per_case;
  if (options.threads <= 1) {
    auto workspaces = make_workspaces(cache, 1);
    per_case = run_cases_serial(cases, workspaces[0], eval);
  } else {
    auto workspaces = make_workspaces(cache, options.threads);
    per_case = run_cases_parallel(cases, workspaces, eval);
  }

  VerificationReport report;
  report.check = std::move(check);
  report.range = std::move(range);
  report.cases = static_cast<std::int64_t>(cases.size());
  for (auto& fs : per_case)
    for (auto& f : fs)
      report.failures.push_back(std::move(f));
  std::sort(report.failures.begin(), report.failures.end());
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

std::string pair_text(const Permutation& x, const Permutation& w)
{
  return "(" + to_string(x) + ", " + to_string(w) + ")";
}

struct FamilyCase {
  FamilyPair pair;
  int k;
  int m;
};

std::string family_label(const FamilyCase& c)
{
  return std::string(c.pair == FamilyPair::XW ? "(x,w)" : "(y,v)") + " k=" +
         std::to_string(c.k) + " m=" + std::to_string(c.m);
}

std::vector<FamilyCase> family_cases(int max_n)
{
  std::vector<FamilyCase> cases;
  for (int k = 1; k + 1 <= max_n; ++k)
    for (int m = 1; k + m <= max_n; ++m)
      cases.push_back({FamilyPair::XW, k, m});
  for (int k = 1; k + 3 <= max_n; ++k)
    for (int m = 1; k + m + 2 <= max_n; ++m)
      cases.push_back({FamilyPair::YV, k, m});
  return cases;
}

std::string family_range(int max_n)
{
  return "k,m >= 1, permutation size <= " + std::to_string(max_n);
}

Permutation random_permutation(int n, std::mt19937_64& rng)
{
  std::vector<int> values(n);
  for (int i = 0; i < n; ++i)
    values[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(values[i], values[pick(rng)]);
  }
  return Permutation::from_oneline(values);
}

std::string format_ratio(std::int64_t num, std::int64_t den)
{
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << static_cast<double>(num) / static_cast<double>(den);
  return out.str();
}

} // namespace

nlohmann::json VerificationReport::to_json() const
{
  nlohmann::json failures_json = nlohmann::json::array();
  for (const auto& f : failures)
    failures_json.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  nlohmann::json out = {
      {"check", check},
      {"range", range},
      {"cases", cases},
      {"failures", failures_json},
      {"seed", seed ? nlohmann::json(*seed) : nlohmann::json(nullptr)},
      {"millis", millis},
  };
  if (!notes.empty())
    out["notes"] = notes;
  return out;
}

std::string VerificationReport::to_table() const
{
  std::ostringstream out;
  out << "check    " << check << '\n';
  out << "range    " << range << '\n';
  out << "cases    " << cases << '\n';
  if (seed)
    out << "seed     " << *seed << '\n';
  out << "millis   " << millis << '\n';
  out << "result   " << (passed() ? "PASS" : "FAIL") << " (" << failures.size() << " failures)\n";
  for (const auto& note : notes)
    out << "note     " << note << '\n';
  for (const auto& f : failures)
    out << "  " << f.input << "\n    expected " << f.expected << "\n    actual   " << f.actual
        << '\n';
  return out.str();
}

int threads_from_environment()
{
  const char* raw = std::getenv("KL_ENGINE_THREADS");
  if (raw == nullptr)
    return 0;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 0)
    return 0;
  return static_cast<int>(std::min<long>(value, 1024));
}

std::vector<std::pair<Permutation, Permutation>> sample_comparable_pairs(int n, int count,
                                                                         std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Permutation, Permutation>> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  while (static_cast<int>(out.size()) < count) {
    Permutation x = random_permutation(n, rng);
    Permutation w = random_permutation(n, rng);
    if (bruhat_leq(x, w))
      out.emplace_back(x, w);
  }
  return out;
}

VerificationReport verify_theorem_regular(int max_n, KLCache& cache, const VerifyOptions& options)
{
  auto eval = [](const FamilyCase& c, Workspace& ws) {
    Failures out;
    const auto [x, w] = make_family_pair(c.pair, c.k, c.m);
    const IntPolynomial expected = closed_form_regular(c.pair, c.k, c.m);
    const IntPolynomial actual = kl_polynomial(x, w, *ws.cache);
    if (actual != expected)
      out.push_back({family_label(c) + " P" + pair_text(x, w), to_string(expected),
                     to_string(actual)});
    const IntPolynomial one = IntPolynomial::constant(1);
    for (const Permutation& z : interval(x, w).elements) {
      if (z == x || z == w)
        continue;
      const IntPolynomial pz = kl_polynomial(z, w, *ws.cache);
      if (pz != one)
        out.push_back({family_label(c) + " interior P" + pair_text(z, w), "1", to_string(pz)});
    }
    return out;
  };
  return run_check("theorem-regular", family_range(max_n), family_cases(max_n), cache, options,
                   eval);
}

VerificationReport verify_theorem_inverse(int max_n, KLCache& cache, const VerifyOptions& options)
{
  auto eval = [](const FamilyCase& c, Workspace& ws) {
    Failures out;
    const auto [x, w] = make_family_pair(c.pair, c.k, c.m);
    const IntPolynomial expected = closed_form_inverse(c.pair, c.k, c.m);
    const IntPolynomial actual = inverse_kl(x, w, *ws.cache);
    if (actual != expected)
      out.push_back({family_label(c) + " inverse P" + pair_text(x, w), to_string(expected),
                     to_string(actual)});
    return out;
  };
  return run_check("theorem-inverse", family_range(max_n), family_cases(max_n), cache, options,
                   eval);
}

namespace {

auto inversion_eval = [](const std::pair<Permutation, Permutation>& c, Workspace& ws) {
  Failures out;
  const IntPolynomial sum = inversion_sum(c.first, c.second, *ws.cache);
  const IntPolynomial expected = IntPolynomial::constant(c.first == c.second ? 1 : 0);
  if (sum != expected)
    out.push_back({"inversion sum " + pair_text(c.first, c.second), to_string(expected),
                   to_string(sum)});
  return out;
};

} // namespace

VerificationReport verify_inversion_exhaustive(int n, KLCache& cache, const VerifyOptions& options)
{
  if (n > 5)
    return verify_inversion_sampled(n, 500, cache, options);
  std::vector<std::pair<Permutation, Permutation>> cases;
  const auto group = all_permutations(n);
  for (const auto& w : group)
    for (const auto& x : group)
      if (bruhat_leq(x, w))
        cases.emplace_back(x, w);
  return run_check("inversion-identity", "all comparable pairs of S_" + std::to_string(n),
                   std::move(cases), cache, options, inversion_eval);
}

VerificationReport verify_inversion_sampled(int n, int samples, KLCache& cache,
                                            const VerifyOptions& options)
{
  auto report = run_check("inversion-identity",
                          std::to_string(samples) + " seeded comparable pairs of S_" +
                              std::to_string(n),
                          sample_comparable_pairs(n, samples, options.seed), cache, options,
                          inversion_eval);
  report.seed = options.seed;
  return report;
}

VerificationReport verify_smoothness_equivalence(int n, KLCache& cache,
                                                 const VerifyOptions& options)
{
  auto eval = [](const Permutation& w, Workspace& ws) {
    Failures out;
    const bool by_pattern = is_smooth_top(w);
    bool all_ones = true;
    const IntPolynomial one = IntPolynomial::constant(1);
    for (const Permutation& x : interval(Permutation::identity(w.size()), w).elements)
      if (kl_polynomial(x, w, *ws.cache) != one) {
        all_ones = false;
        break;
      }
    if (by_pattern != all_ones)
      out.push_back({"smoothness of " + to_string(w), by_pattern ? "smooth" : "singular",
                     all_ones ? "smooth" : "singular"});
    return out;
  };
  auto tops = all_permutations(n);
  const auto singular = std::count_if(tops.begin(), tops.end(),
                                      [](const Permutation& w) { return !is_smooth_top(w); });
  auto report = run_check("smoothness-equivalence", "all w in S_" + std::to_string(n),
                          std::move(tops), cache, options, eval);
  report.notes.push_back("non-smooth tops by pattern: " + std::to_string(singular));
  return report;
}

VerificationReport verify_brenti_bound(int k_max, KLCache& cache, const VerifyOptions& options)
{
  std::vector<int> ks;
  for (int k = 2; k <= k_max; ++k)
    ks.push_back(k);
  std::vector<std::string> notes(ks.size());
  auto eval = [&notes](const int& k, Workspace&) {
    Failures out;
    const auto coefficient = closed_form_inverse(FamilyPair::XW, k, k).coefficient(1);
    const auto [x, w] = make_family_pair(FamilyPair::XW, k, k);
    const Permutation w0 = Permutation::longest_element(x.size());
    const int coatoms = coatom_count(compose(w0, w), compose(w0, x));
    const std::string label = "k=" + std::to_string(k);
    const std::int64_t square = static_cast<std::int64_t>(k - 1) * (k - 1);
    if (coefficient != square)
      out.push_back({label + " [q^1] of inverse closed form", std::to_string(square),
                     std::to_string(coefficient)});
    if (coefficient > coatoms - 1)
      out.push_back({label + " [q^1] <= coatoms - 1",
                     "<= " + std::to_string(coatoms - 1), std::to_string(coefficient)});
    notes[k - 2] = label + ": [q^1] = " + std::to_string(coefficient) +
                   ", coatoms = " + std::to_string(coatoms) +
                   ", ratio = " + format_ratio(coefficient, coatoms);
    return out;
  };
  auto report = run_check("brenti-bound", "2 <= k <= " + std::to_string(k_max), ks, cache,
                          options, eval);
  for (auto& note : notes)
    if (!note.empty())
      report.notes.push_back(std::move(note));
  return report;
}

VerificationReport verify_flattening_invariance(int n, int samples, KLCache& cache,
                                                const VerifyOptions& options)
{
  auto eval = [](const std::pair<Permutation, Permutation>& c, Workspace& ws) {
    Failures out;
    const auto [xt, wt] = tilde_reduce(c.first, c.second);
    const IntPolynomial full = kl_polynomial(c.first, c.second, *ws.cache);
    const IntPolynomial reduced = kl_polynomial(xt, wt, *ws.cache);
    if (full != reduced)
      out.push_back({"flattened " + pair_text(c.first, c.second) + " -> " + pair_text(xt, wt),
                     to_string(full), to_string(reduced)});
    return out;
  };
  auto report = run_check("flattening-invariance",
                          std::to_string(samples) + " seeded comparable pairs of S_" +
                              std::to_string(n),
                          sample_comparable_pairs(n, samples, options.seed), cache, options,
                          eval);
  report.seed = options.seed;
  return report;
}

VerificationReport verify_descent_independence(int n, int samples, KLCache& cache,
                                               const VerifyOptions& options)
{
  auto eval = [](const std::pair<Permutation, Permutation>& c, Workspace& ws) {
    Failures out;
    const IntPolynomial largest = kl_polynomial(c.first, c.second, *ws.cache);
    const IntPolynomial smallest = kl_polynomial(c.first, c.second, ws.smallest_descent_cache());
    if (largest != smallest)
      out.push_back({"descent choice " + pair_text(c.first, c.second), to_string(largest),
                     to_string(smallest)});
    return out;
  };
  auto report = run_check("descent-independence",
                          std::to_string(samples) + " seeded comparable pairs of S_" +
                              std::to_string(n),
                          sample_comparable_pairs(n, samples, options.seed), cache, options,
                          eval);
  report.seed = options.seed;
  return report;
}

VerificationReport verify_eq31(int max_n, KLCache& cache, const VerifyOptions& options)
{
  auto eval = [](const FamilyCase& c, Workspace& ws) {
    Failures out;
    const auto [x, w] = make_family_pair(c.pair, c.k, c.m);
    const IntPolynomial expected = closed_form_inverse(c.pair, c.k, c.m);
    const IntPolynomial actual = eq31_reconstruct(x, w, *ws.cache);
    if (actual != expected)
      out.push_back({family_label(c) + " reconstructed inverse P" + pair_text(x, w),
                     to_string(expected), to_string(actual)});
    return out;
  };
  return run_check("inverse-reconstruction", family_range(max_n), family_cases(max_n), cache,
                   options, eval);
}

namespace {

template <class CheckFn>
VerificationReport run_lemma(std::string name, int k_min, int k_max, CheckFn check)
{
  std::vector<std::pair<int, int>> cases;
  for (int k = k_min; k <= k_max; ++k)
    for (int m = k_min; m <= k_max; ++m)
      cases.emplace_back(k, m);
  auto eval = [&check](const std::pair<int, int>& c, Workspace&) {
    Failures out;
    const IdentityCheck result = check(c.first, c.second);
    if (!result.equal)
      out.push_back({"k=" + std::to_string(c.first) + " m=" + std::to_string(c.second),
                     to_string(result.rhs), to_string(result.lhs)});
    return out;
  };
  KLCache unused;
  return run_check(std::move(name),
                   std::to_string(k_min) + " <= k,m <= " + std::to_string(k_max),
                   std::move(cases), unused, VerifyOptions{}, eval);
}

} // namespace

VerificationReport verify_lemma_tech1(int k_min, int k_max)
{
  return run_lemma("lemma-binomial-sum", k_min, k_max, lemma_tech1_check);
}

VerificationReport verify_lemma_tech2(int k_min, int k_max)
{
  return run_lemma("lemma-f-sum", k_min, k_max, lemma_tech2_check);
}

} // namespace klinv
