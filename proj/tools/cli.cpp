#include "cli.hpp"

#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "klinv/bruhat.hpp"
#include "klinv/errors.hpp"
#include "klinv/families.hpp"
#include "klinv/kl.hpp"
#include "klinv/verify.hpp"

namespace klinv::cli {

namespace {

using nlohmann::json;

struct Flags {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> n;
  std::optional<int> kmax;
  std::size_t max_cache_entries = 0;
  std::optional<std::int64_t> cases;
};

json polynomial_json(const IntPolynomial& p) { return p.coefficients(); }

void print_polynomial(std::ostream& out, const Flags& flags, const IntPolynomial& p)
{
  if (flags.json)
    out << polynomial_json(p).dump() << '\n';
  else
    out << to_string(p) << '\n';
}

void print_bool(std::ostream& out, bool value)
{
  // JSON and text coincide.
  out << (value ? "true" : "false") << '\n';
}

int run_verify(const std::string& name, const Flags& flags, KLCache& cache, std::ostream& out)
{
  VerifyOptions options;
  options.threads = threads_from_environment();
  options.max_cases = flags.cases;
  if (flags.seed)
    options.seed = *flags.seed;

  const auto n_or = [&](int fallback) { return flags.n.value_or(fallback); };
  const auto check_n = [](int n, int lo, int hi, const std::string& what) {
    if (n < lo || n > hi)
      throw std::invalid_argument(what + ": --n must be in " + std::to_string(lo) + ".." +
                                  std::to_string(hi));
  };

  VerificationReport report;
  if (name == "regular") {
    check_n(n_or(7), 2, kMaxPermutationSize, name);
    report = verify_theorem_regular(n_or(7), cache, options);
  } else if (name == "inverse") {
    check_n(n_or(7), 2, kMaxPermutationSize, name);
    report = verify_theorem_inverse(n_or(7), cache, options);
  } else if (name == "reconstruction") {
    check_n(n_or(7), 2, kMaxPermutationSize, name);
    report = verify_eq31(n_or(7), cache, options);
  } else if (name == "inversion") {
    check_n(n_or(4), 2, 9, name);
    report = verify_inversion_exhaustive(n_or(4), cache, options);
  } else if (name == "smoothness") {
    check_n(n_or(5), 2, 6, name);
    report = verify_smoothness_equivalence(n_or(5), cache, options);
  } else if (name == "flattening") {
    check_n(n_or(7), 2, 9, name);
    report = verify_flattening_invariance(n_or(7), 200, cache, options);
  } else if (name == "descent-choice") {
    check_n(n_or(6), 2, 9, name);
    report = verify_descent_independence(n_or(6), 100, cache, options);
  } else if (name == "brenti") {
    const int kmax = flags.kmax.value_or(3);
    if (kmax < 2 || kmax > 8)
      throw std::invalid_argument("brenti: --kmax must be in 2..8");
    report = verify_brenti_bound(kmax, cache, options);
  } else if (name == "lemma1") {
    const int kmax = flags.kmax.value_or(8);
    if (kmax < 1 || kmax > 30)
      throw std::invalid_argument("lemma1: --kmax must be in 1..30");
    report = verify_lemma_tech1(1, kmax);
  } else if (name == "lemma2") {
    const int kmax = flags.kmax.value_or(8);
    if (kmax < 2 || kmax > 30)
      throw std::invalid_argument("lemma2: --kmax must be in 2..30");
    report = verify_lemma_tech2(2, kmax);
  } else {
    throw CLI::ValidationError("verify", "unknown check '" + name + "'");
  }

  if (flags.json)
    out << report.to_json().dump(2) << '\n';
  else
    out << report.to_table();
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Kazhdan-Lusztig and inverse Kazhdan-Lusztig polynomials in S_n", "klinv"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  Flags flags;
  app.add_flag("--json", flags.json, "Machine-readable output");
  app.add_option("--seed", flags.seed, "Seed for sampled checks");
  app.add_option("--n", flags.n, "Permutation size for verify");
  app.add_option("--kmax", flags.kmax, "Largest parameter for verify");
  app.add_option("--max-cache-entries", flags.max_cache_entries,
                 "Bound on memoized pairs (0 = unbounded)");
  app.add_option("--cases", flags.cases, "Cap on cases per verify run");

  std::string x_text, w_text, spec_text, check_name;
  int lemma_id = 0, lemma_k = 0, lemma_m = 0;
  bool inverse_form = false;

  const auto add_pair = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("X", x_text, "Bottom permutation, e.g. 2,1,4,3")->required();
    sub->add_option("W", w_text, "Top permutation")->required();
    return sub;
  };
  auto* kl_cmd = add_pair("kl", "Print P_{x,w}");
  auto* inv_cmd = add_pair("inv-kl", "Print P_{w0 w, w0 x}");
  auto* mu_cmd = add_pair("mu", "Print mu(x,w)");
  auto* interval_cmd = add_pair("interval", "List the Bruhat interval [x,w]");
  auto* leq_cmd = add_pair("leq", "Test x <= w in Bruhat order");
  auto* picture_cmd = add_pair("picture", "Draw the Bruhat picture of (x,w)");
  auto* smooth_cmd = app.add_subcommand("smooth", "Test 3412- and 4231-avoidance");
  smooth_cmd->add_option("W", w_text, "Permutation")->required();
  auto* family_cmd = app.add_subcommand("family", "Construct a family member, e.g. x:2,3");
  family_cmd->add_option("SPEC", spec_text, "Family spec")->required();
  auto* closed_cmd = app.add_subcommand("closed-form", "Closed-form polynomial of a family pair");
  closed_cmd->add_option("SPEC", spec_text, "x:K,M for (x,w) or y:K,M for (y,v)")->required();
  closed_cmd->add_flag("--inverse", inverse_form, "Inverse polynomial instead");
  auto* verify_cmd = app.add_subcommand("verify", "Run a batch verification");
  verify_cmd
      ->add_option("NAME", check_name,
                   "regular | inverse | reconstruction | inversion | smoothness | flattening | "
                   "descent-choice | brenti | lemma1 | lemma2")
      ->required();
  auto* lemma_cmd = app.add_subcommand("lemma", "Evaluate both sides of a binomial lemma");
  lemma_cmd->add_option("ID", lemma_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  lemma_cmd->add_option("K", lemma_k, "k >= 1")->required();
  lemma_cmd->add_option("M", lemma_m, "m >= 1")->required();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("klinv");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage)
    argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    // Parse every permutation argument before computing anything.
    std::optional<Permutation> x, w;
    if (!x_text.empty())
      x = parse_permutation(x_text);
    if (!w_text.empty())
      w = parse_permutation(w_text);
    if (x && w && x->size() != w->size())
      throw std::invalid_argument("size mismatch: " + std::to_string(x->size()) + " vs " +
                                  std::to_string(w->size()));

    KLCacheOptions cache_options;
    cache_options.max_entries = flags.max_cache_entries;
    KLCache cache(cache_options);

    if (kl_cmd->parsed()) {
      print_polynomial(out, flags, kl_polynomial(*x, *w, cache));
    } else if (inv_cmd->parsed()) {
      print_polynomial(out, flags, inverse_kl(*x, *w, cache));
    } else if (mu_cmd->parsed()) {
      out << mu(*x, *w, cache) << '\n';
    } else if (interval_cmd->parsed()) {
      const BruhatInterval span = interval(*x, *w);
      if (flags.json) {
        json list = json::array();
        for (const auto& z : span.elements)
          list.push_back(z.oneline());
        out << list.dump() << '\n';
      } else {
        for (const auto& z : span.elements)
          out << to_string(z) << '\n';
      }
    } else if (leq_cmd->parsed()) {
      print_bool(out, bruhat_leq(*x, *w));
    } else if (smooth_cmd->parsed()) {
      print_bool(out, is_smooth_top(*w));
    } else if (picture_cmd->parsed()) {
      const BruhatPicture picture = bruhat_picture(*x, *w);
      if (flags.json) {
        json rows = json::array();
        json shaded = json::array();
        for (int p = 1; p <= picture.size; ++p) {
          std::string row;
          for (int q = 1; q <= picture.size; ++q) {
            row += picture.glyph(p, q);
            if (picture.is_shaded(p, q))
              shaded.push_back({p, q});
          }
          rows.push_back(row);
        }
        out << json{{"rows", rows}, {"shaded", shaded}}.dump() << '\n';
      } else {
        out << picture.text();
      }
    } else if (family_cmd->parsed()) {
      const Permutation member = make_family(parse_family_spec(spec_text));
      if (flags.json)
        out << json(member.oneline()).dump() << '\n';
      else
        out << to_string(member) << '\n';
    } else if (closed_cmd->parsed()) {
      const FamilySpec spec = parse_family_spec(spec_text);
      const FamilyPair pair =
          (spec.kind == FamilyKind::X || spec.kind == FamilyKind::W) ? FamilyPair::XW
                                                                     : FamilyPair::YV;
      print_polynomial(out, flags,
                       inverse_form ? closed_form_inverse(pair, spec.k, spec.m)
                                    : closed_form_regular(pair, spec.k, spec.m));
    } else if (verify_cmd->parsed()) {
      return run_verify(check_name, flags, cache, out);
    } else if (lemma_cmd->parsed()) {
      const IdentityCheck result = lemma_id == 1 ? lemma_tech1_check(lemma_k, lemma_m)
                                                 : lemma_tech2_check(lemma_k, lemma_m);
      if (flags.json) {
        out << json{{"lhs", polynomial_json(result.lhs)},
                    {"rhs", polynomial_json(result.rhs)},
                    {"equal", result.equal}}
                   .dump()
            << '\n';
      } else {
        out << "lhs: " << to_string(result.lhs) << '\n'
            << "rhs: " << to_string(result.rhs) << '\n'
            << "equal: " << (result.equal ? "true" : "false") << '\n';
      }
      return result.equal ? kExitOk : kExitVerificationFailed;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

} // namespace klinv::cli
