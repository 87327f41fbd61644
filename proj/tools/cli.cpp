#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shufflesym/combinatorics.hpp"
#include "shufflesym/cycles.hpp"
#include "shufflesym/errors.hpp"
#include "shufflesym/io.hpp"
#include "shufflesym/point_process.hpp"
#include "shufflesym/rsk.hpp"
#include "shufflesym/series.hpp"
#include "shufflesym/shuffle.hpp"
#include "shufflesym/symmetric_functions.hpp"

using namespace shufflesym;
using nlohmann::json;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr double kSigmaThreshold = 3.0;
// Per-sample seeds come from streams far above the library's internal ones.
constexpr std::uint64_t kSampleStreamBase = std::uint64_t{1} << 32;

struct Options {
  std::string params = R"({"alpha":["1/2","1/2"],"beta":[],"gamma":"0"})";
  int n = 3;
  int k = 1;
  int l = 1;
  int D = 4;
  int i = 1;
  int cap = 10;
  std::uint64_t seed = 0;
  long count = 1;
  std::string output;
  std::string format;
  int jobs = 1;
  bool timing = false;
  std::string x = "1/3,1/5";
  std::string gamma_plus = "1";
  std::string gamma = "1/2";
  std::string u = "1";
  long q_int = 1;
  std::string p_base = "1/2";
  std::string q_base = "2";
  std::string expect;
  bool largest_part = false;
};

Options opt;

std::uint64_t sample_seed(long index) {
  return make_stream(opt.seed, kSampleStreamBase + static_cast<std::uint64_t>(index))();
}

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(std::string("--") + name + " expects a rational such as 1/2, got '" + text + "'");
  }
}

RationalPointSet point_list(const std::string& text) {
  RationalPointSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(rational_arg(item, "x"));
  }
  return out;
}

std::string format_or(const char* fallback) { return opt.format.empty() ? fallback : opt.format; }

void emit(const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw ParseError("cannot write " + opt.output);
  file << text;
}

// Runs f(i) for i in [0, count) across opt.jobs threads; results keep index order.
template <class T>
std::vector<T> parallel_samples(long count, const std::function<T(long)>& f) {
  std::vector<T> out(static_cast<std::size_t>(count));
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(std::max(1L, count))));
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      try {
        for (long s = j; s < count; s += jobs) out[static_cast<std::size_t>(s)] = f(s);
      } catch (...) {
        errors[static_cast<std::size_t>(j)] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

json params_json(const ShuffleParams& p) { return json::parse(io::params_to_json(p)); }

// Verification report; exit status 1 when the check fails.
int report(json j, bool pass, std::chrono::steady_clock::time_point start) {
  j["pass"] = pass;
  if (opt.timing) {
    j["wall_time_sec"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  emit(j.dump(2) + "\n");
  return pass ? 0 : kVerifyFailed;
}

std::string max_abs(const TruncatedSeries& s) { return to_string(s.max_abs_coefficient()); }

// ---- sample

int sample_word_cmd() {
  const auto p = io::load_params(opt.params);
  const auto ws = parallel_samples<SignedWord>(opt.count, [&](long s) { return sample_word(p, opt.n, sample_seed(s)); });
  if (format_or("text") == "json") return emit(json(ws).dump() + "\n"), 0;
  std::string text;
  for (const auto& w : ws) {
    for (std::size_t j = 0; j < w.size(); ++j) text += (j ? " " : "") + std::to_string(w[j]);
    text += '\n';
  }
  emit(text);
  return 0;
}

int sample_perm_cmd(bool inverse) {
  const auto p = io::load_params(opt.params);
  const auto perms = parallel_samples<Permutation>(opt.count, [&](long s) {
    return inverse ? inverse_shuffle_sample(p, opt.n, sample_seed(s)) : sample_shuffle(p, opt.n, sample_seed(s));
  });
  if (format_or("text") == "json") {
    json j = json::array();
    for (const auto& pi : perms) j.push_back(pi.to_string());
    emit(j.dump() + "\n");
    return 0;
  }
  std::string text;
  for (const auto& pi : perms) text += pi.to_string() + '\n';
  emit(text);
  return 0;
}

int sample_br_cmd() {
  const auto p = io::load_params(opt.params);
  const Rational gp = rational_arg(opt.gamma_plus, "gamma-plus");
  const auto configs = parallel_samples<PointConfig>(opt.count, [&](long s) { return sample_br(gp, p, sample_seed(s)); });
  if (format_or("csv") == "json") {
    json j = json::array();
    for (const auto& c : configs) {
      j.push_back({{"points", json::parse(io::points_to_json(c))}, {"shape", br_partition(c).to_string()}});
    }
    emit(j.dump() + "\n");
    return 0;
  }
  std::map<Partition, long long> counts;
  for (const auto& c : configs) ++counts[br_partition(c)];
  std::ostringstream out;
  io::write_shape_counts_csv(out, counts);
  emit(out.str());
  return 0;
}

// ---- exact

int exact_dist_cmd() {
  const auto p = io::load_params(opt.params);
  const auto d = exact_shuffle_distribution(p, opt.n);
  if (format_or("csv") == "json") {
    json j = json::object();
    for (const auto& [pi, w] : d.entries()) j[pi.to_string()] = to_string(w);
    emit(j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  io::write_distribution_csv(out, d);
  emit(out.str());
  return 0;
}

int exact_cycles_cmd() {
  const auto p = io::load_params(opt.params);
  const auto d = cycle_type_distribution(p, opt.n);
  if (format_or("csv") == "json") {
    json j = json::object();
    for (const auto& [lambda, w] : d.entries()) j[lambda.to_string()] = to_string(w);
    emit(j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  io::write_cycle_csv(out, d);
  emit(out.str());
  return 0;
}

int exact_distances_cmd() {
  const auto start = std::chrono::steady_clock::now();
  const auto p = io::load_params(opt.params);
  const auto d = convolve_power(exact_shuffle_distribution(p, opt.n), opt.k);
  const auto dist = exact_distances(d, EnumerationLimits::from_env().max_deck);
  json j{{"command", "exact distances"}, {"params", params_json(p)}, {"n", opt.n}, {"k", opt.k},
         {"separation", to_string(dist.separation)}, {"total_variation", to_string(dist.total_variation)},
         {"separation_decimal", dist.separation.get_d()}, {"total_variation_decimal", dist.total_variation.get_d()}};
  if (opt.timing) j["wall_time_sec"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(j.dump(2) + "\n");
  return 0;
}

// ---- verify

int verify_gessel() {
  const auto start = std::chrono::steady_clock::now();
  const auto p = io::load_params(opt.params);
  const auto x = point_list(opt.x);
  const auto residual = gessel_lhs(p, x, opt.n, opt.D) - gessel_rhs(p, x, opt.n, opt.D);
  json xs = json::array();
  for (const auto& v : x) xs.push_back(to_string(v));
  return report({{"command", "verify gessel"}, {"params", params_json(p)}, {"x", xs}, {"n", opt.n}, {"D", opt.D},
                 {"residual", max_abs(residual)}},
                residual.is_zero(), start);
}

int verify_cauchy() {
  const auto start = std::chrono::steady_clock::now();
  const auto p = io::load_params(opt.params);
  const auto x = point_list(opt.x);
  const auto residual = cauchy_residual(p, x, opt.D);
  json xs = json::array();
  for (const auto& v : x) xs.push_back(to_string(v));
  return report({{"command", "verify cauchy"}, {"params", params_json(p)}, {"x", xs}, {"D", opt.D},
                 {"residual", max_abs(residual)}},
                residual.is_zero(), start);
}

int verify_probinter() {
  const auto start = std::chrono::steady_clock::now();
  const auto p = io::load_params(opt.params);
  const auto d = exact_shuffle_distribution(p, opt.n);
  std::map<Tableau, Rational> by_q;
  for (const auto& [pi, w] : d.entries()) by_q[rsk(pi).recording] += w;
  Rational worst = 0;
  long tableaux = 0;
  for (const auto& lambda : partitions_of(opt.n)) {
    const Rational s = extended_schur(p, lambda);
    for (const auto& q : standard_tableaux(lambda)) {
      worst = std::max(worst, Rational(abs(by_q[q] - s)));
      ++tableaux;
    }
  }
  return report({{"command", "verify probinter"}, {"params", params_json(p)}, {"n", opt.n}, {"tableaux", tableaux},
                 {"residual", to_string(worst)}},
                worst == 0, start);
}

int verify_c1() {
  const auto start = std::chrono::steady_clock::now();
  const auto p = io::load_params(opt.params);
  const auto d = exact_shuffle_distribution(p, opt.n);
  std::map<Partition, Rational> by_shape;
  for (const auto& [pi, w] : d.entries()) by_shape[rsk_shape(pi)] += w;
  Rational worst = 0;
  json shapes = json::object();
  for (const auto& lambda : partitions_of(opt.n)) {
    const Rational expected = Rational(hook_length_count(lambda)) * extended_schur(p, lambda);
    worst = std::max(worst, Rational(abs(by_shape[lambda] - expected)));
    shapes[lambda.to_string()] = to_string(expected);
  }
  return report({{"command", "verify c1"}, {"params", params_json(p)}, {"n", opt.n}, {"shape_law", shapes},
                 {"residual", to_string(worst)}},
                worst == 0, start);
}

Rational law_gap(const CycleTypeDistribution& a, const CycleTypeDistribution& b) {
  std::set<Partition> keys;
  for (const auto& [lambda, w] : a.entries()) keys.insert(lambda);
  for (const auto& [lambda, w] : b.entries()) keys.insert(lambda);
  Rational worst = 0;
  for (const auto& lambda : keys) worst = std::max(worst, Rational(abs(a.probability(lambda) - b.probability(lambda))));
  return worst;
}

int verify_duality() {
  const auto start = std::chrono::steady_clock::now();
  const auto p = io::load_params(opt.params);
  const auto d = exact_shuffle_distribution(p, opt.n);
  CycleTypeDistribution reversed(opt.n);
  for (const auto& [pi, w] : d.entries()) reversed.add(cycle_type(reverse_deck(pi)), w);
  const Rational extraction = law_gap(cycle_type_distribution(p, opt.n), cycle_type_pushforward(d));
  const Rational duality = law_gap(reversed, cycle_type_distribution(p.swapped(), opt.n));
  return report({{"command", "verify duality"}, {"params", params_json(p)}, {"n", opt.n},
                 {"extraction_residual", to_string(extraction)}, {"residual", to_string(duality)}},
                extraction == 0 && duality == 0, start);
}

// Closed-form k-fold parameters for the two families where the square stays in the family.
ShuffleParams power_params(const ShuffleParams& p, int k) {
  if (p.beta().empty() && p.alpha().size() == 1) {
    const Rational a = pow(p.alpha()[0], k);
    return ShuffleParams({a}, {}, 1 - a);
  }
  const bool gsr = p.beta().empty() && p.gamma() == 0 && !p.alpha().empty() &&
                   std::all_of(p.alpha().begin(), p.alpha().end(), [&](const Rational& a) { return a == p.alpha()[0]; });
  if (gsr) {
    long m = 1;
    for (int j = 0; j < k; ++j) m *= static_cast<long>(p.alpha().size());
    return ShuffleParams::gsr(static_cast<int>(m));
  }
  throw InvalidParams("no closed form for the " + std::to_string(k) + "-fold shuffle of " + p.describe() +
                      "; pass --expect");
}

int verify_convolution() {
  const auto start = std::chrono::steady_clock::now();
  const auto p = io::load_params(opt.params);
  const auto expected = opt.expect.empty() ? power_params(p, opt.k) : io::load_params(opt.expect);
  const auto lhs = convolve_power(exact_shuffle_distribution(p, opt.n), opt.k);
  const auto rhs = exact_shuffle_distribution(expected, opt.n);
  Rational worst = 0;
  for (const auto& pi : all_permutations(opt.n)) worst = std::max(worst, Rational(abs(lhs.probability(pi) - rhs.probability(pi))));
  return report({{"command", "verify convolution"}, {"params", params_json(p)}, {"k", opt.k}, {"n", opt.n},
                 {"expected_params", params_json(expected)}, {"residual", to_string(worst)}},
                worst == 0, start);
}

int verify_maj() {
  const auto start = std::chrono::steady_clock::now();
  const Rational p = rational_arg(opt.p_base, "p");
  const Rational q = rational_arg(opt.q_base, "q");
  std::map<Partition, Rational> by_shape;
  Rational z = 0;
  for (const auto& pi : all_permutations(opt.n)) {
    const Rational w = maj_measure(pi, p, q, opt.k, opt.l);
    by_shape[rsk_shape(pi)] += w;
    z += w;
  }
  Rational worst = 0;
  json shapes = json::object();
  for (const auto& lambda : partitions_of(opt.n)) {
    const Rational exact = principal_specialization(lambda, 1 / p, opt.k) * principal_specialization(lambda, 1 / q, opt.l);
    worst = std::max(worst, Rational(abs(by_shape[lambda] - exact)));
    shapes[lambda.to_string()] = to_string(by_shape[lambda] / z);
  }
  json j{{"command", "verify maj"}, {"p", to_string(p)}, {"q", to_string(q)}, {"n", opt.n}, {"k", opt.k},
         {"l", opt.l}, {"Z", to_string(z)}, {"shape_law", shapes}, {"residual", to_string(worst)}};
  bool pass = worst == 0;
  if (p == 1 && q == 1) {
    const Rational binom(binomial(static_cast<long>(opt.k) * opt.l + opt.n - 1, opt.n));
    j["Z_expected"] = to_string(binom);
    pass = pass && z == binom;
  }
  return report(j, pass, start);
}

int verify_mybound() {
  const auto start = std::chrono::steady_clock::now();
  const auto p = io::load_params(opt.params);
  const auto d = convolve_power(exact_shuffle_distribution(p, opt.n), opt.k);
  const Rational sep = exact_distances(d, EnumerationLimits::from_env().max_deck).separation;
  const Rational bound = separation_bound(p, opt.k, opt.n);
  return report({{"command", "verify mybound"}, {"params", params_json(p)}, {"n", opt.n}, {"k", opt.k},
                 {"separation", to_string(sep)}, {"bound", to_string(bound)},
                 {"residual", to_string(sep > bound ? Rational(sep - bound) : Rational(0))}},
                sep <= bound, start);
}

int verify_extend() {
  const auto start = std::chrono::steady_clock::now();
  const auto p = io::load_params(opt.params);
  const Rational gp = rational_arg(opt.gamma_plus, "gamma-plus");
  const auto configs = parallel_samples<PointConfig>(opt.count, [&](long s) { return sample_br(gp, p, sample_seed(s)); });
  std::map<Partition, long> counts;
  long mismatches = 0, greene_checked = 0;
  for (const auto& c : configs) {
    const auto lambda = br_partition(c);
    ++counts[lambda];
    if (c.size() <= kBruteforcePointCap) {
      mismatches += lambda != br_partition_bruteforce(c);
      ++greene_checked;
    }
  }
  const double total = static_cast<double>(opt.count);
  double worst_z = 0;
  bool impossible_seen = false;
  json shapes = json::array();
  for (const auto& lambda : partitions_up_to(opt.D)) {
    const auto prob = br_shape_probability(lambda, gp, p);
    const double freq = counts[lambda] / total;
    double z = 0;
    if (prob.value > 0) {
      z = std::abs(freq - prob.value) / std::sqrt(prob.value * (1 - prob.value) / total);
    } else {
      impossible_seen = impossible_seen || counts[lambda] > 0;
    }
    worst_z = std::max(worst_z, z);
    shapes.push_back({{"shape", lambda.to_string()}, {"probability", prob.value},
                      {"coefficient", to_string(prob.coefficient)}, {"frequency", freq}, {"z", z}});
  }
  return report({{"command", "verify extend"}, {"params", params_json(p)}, {"gamma_plus", to_string(gp)},
                 {"samples", opt.count}, {"seed", opt.seed}, {"shapes", shapes}, {"max_z", worst_z},
                 {"sigma_threshold", kSigmaThreshold}, {"greene_checked", greene_checked},
                 {"greene_mismatches", mismatches}},
                worst_z < kSigmaThreshold && mismatches == 0 && !impossible_seen, start);
}

// ---- compute

int compute_fixed_points() {
  const auto p = io::load_params(opt.params);
  const Rational e = expected_fixed_points(p, opt.n);
  emit(json{{"params", params_json(p)}, {"n", opt.n}, {"expected_fixed_points", to_string(e)}, {"decimal", e.get_d()}}
           .dump(2) +
       "\n");
  return 0;
}

int compute_sep_bound() {
  const auto p = io::load_params(opt.params);
  const Rational b = separation_bound(p, opt.k, opt.n);
  emit(json{{"params", params_json(p)}, {"n", opt.n}, {"k", opt.k}, {"bound", to_string(b)}, {"decimal", b.get_d()}}
           .dump(2) +
       "\n");
  return 0;
}

int compute_limit_pmf() {
  const auto pmf = limit_cycle_pmf(opt.i, opt.q_int, rational_arg(opt.gamma, "gamma"), rational_arg(opt.u, "u"), opt.cap);
  if (format_or("csv") == "json") {
    emit(json{{"i", opt.i}, {"q", opt.q_int}, {"gamma", opt.gamma}, {"u", opt.u},
              {"geometric_parameter", pmf.geometric_parameter}, {"pmf", pmf.pmf}}
             .dump(2) +
         "\n");
    return 0;
  }
  std::ostringstream out;
  out << "count,probability\n" << std::setprecision(17);
  for (std::size_t c = 0; c < pmf.pmf.size(); ++c) out << c << ',' << pmf.pmf[c] << '\n';
  emit(out.str());
  return 0;
}

int compute_gap_prob() {
  const auto p = io::load_params(opt.params);
  const Rational gp = rational_arg(opt.gamma_plus, "gamma-plus");
  const auto g = br_gap_probability(gp, opt.largest_part ? p.swapped() : p, opt.n);
  emit(json{{"params", params_json(p)}, {"gamma_plus", to_string(gp)}, {"n", opt.n},
            {"event", opt.largest_part ? "largest part <= n" : "rows <= n"}, {"probability", g.value},
            {"truncation", g.truncation}}
           .dump(2) +
       "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo tools for (alpha, beta, gamma) shuffles"};
  app.require_subcommand(1);
  int status = 0;

  // Leaf flags; each leaf gets the subset it reads.
  enum Flag { P = 1, N = 2, K = 4, DD = 8, SEED = 16, COUNT = 32, FORMAT = 64, X = 128, GP = 256, JOBS = 512 };
  auto leaf = [&](CLI::App* group, const char* name, const char* help, int flags, std::function<int()> run) {
    auto* c = group->add_subcommand(name, help);
    if (flags & P) c->add_option("--params", opt.params, "params JSON, inline or a file path")->capture_default_str();
    if (flags & N) c->add_option("--n", opt.n, "deck size")->capture_default_str()->check(CLI::NonNegativeNumber);
    if (flags & K) c->add_option("--k", opt.k, "number of shuffles")->capture_default_str()->check(CLI::PositiveNumber);
    if (flags & DD) c->add_option("--D", opt.D, "degree or size bound")->capture_default_str()->check(CLI::NonNegativeNumber);
    if (flags & SEED) c->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    if (flags & COUNT) c->add_option("--count", opt.count, "number of samples")->capture_default_str()->check(CLI::PositiveNumber);
    if (flags & FORMAT) c->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "json", "text"}));
    if (flags & X) c->add_option("--x", opt.x, "comma separated rational variables")->capture_default_str();
    if (flags & GP) c->add_option("--gamma-plus", opt.gamma_plus, "total intensity")->capture_default_str();
    if (flags & JOBS) c->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    c->add_option("--output", opt.output, "write here instead of stdout");
    c->add_flag("--timing", opt.timing, "include wall time in JSON reports");
    c->callback([&status, run] { status = run(); });
    return c;
  };

  auto* sample = app.add_subcommand("sample", "draw random shuffles, words and point configurations");
  auto* exact = app.add_subcommand("exact", "exact laws by enumeration");
  auto* verify = app.add_subcommand("verify", "check an identity and print a JSON report");
  auto* compute = app.add_subcommand("compute", "closed-form quantities");
  for (auto* g : {sample, exact, verify, compute}) g->require_subcommand(1);

  const int sampling = P | N | SEED | COUNT | FORMAT | JOBS;
  leaf(sample, "word", "i.i.d. signed words", sampling, sample_word_cmd);
  leaf(sample, "shuffle", "shuffled decks (one-line notation)", sampling, [] { return sample_perm_cmd(false); });
  leaf(sample, "inverse", "inverse shuffles by labelling and dealing", sampling, [] { return sample_perm_cmd(true); });
  leaf(sample, "br", "point configurations; CSV of shape counts", sampling | GP, sample_br_cmd);

  leaf(exact, "dist", "permutation law", P | N | FORMAT, exact_dist_cmd);
  leaf(exact, "cycles", "cycle-type law from the cycle index", P | N | FORMAT, exact_cycles_cmd);
  leaf(exact, "distances", "separation and total variation after k shuffles", P | N | K, exact_distances_cmd);

  leaf(verify, "gessel", "Toeplitz identity", P | N | DD | X, verify_gessel);
  leaf(verify, "cauchy", "Cauchy identity", P | DD | X, verify_cauchy);
  leaf(verify, "probinter", "recording-tableau law", P | N, verify_probinter);
  leaf(verify, "c1", "RSK shape law", P | N, verify_c1);
  leaf(verify, "duality", "cycle index and reversal duality", P | N, verify_duality);
  auto* conv = leaf(verify, "convolution", "k-fold shuffle against expected parameters", P | N | K, verify_convolution);
  conv->add_option("--expect", opt.expect, "expected params (default: closed form when one exists)");
  auto* maj = leaf(verify, "maj", "maj/descent measure pushed to RSK shape", N | K, verify_maj);
  maj->add_option("--l", opt.l, "second box count")->capture_default_str()->check(CLI::PositiveNumber);
  maj->add_option("--p", opt.p_base, "first base")->capture_default_str();
  maj->add_option("--q", opt.q_base, "second base")->capture_default_str();
  leaf(verify, "mybound", "separation distance against the collision bound", P | N | K, verify_mybound);
  leaf(verify, "extend", "point-process shape law by Monte Carlo", P | DD | SEED | COUNT | GP | JOBS, verify_extend);

  leaf(compute, "fixed-points", "expected number of fixed points", P | N, compute_fixed_points);
  leaf(compute, "sep-bound", "separation bound after k shuffles", P | N | K, compute_sep_bound);
  auto* limit = leaf(compute, "limit-pmf", "limiting law of the number of i-cycles", FORMAT, compute_limit_pmf);
  limit->add_option("--i", opt.i, "cycle length")->capture_default_str()->check(CLI::PositiveNumber);
  limit->add_option("--q", opt.q_int, "number of equal positive weights")->capture_default_str()->check(CLI::PositiveNumber);
  limit->add_option("--gamma", opt.gamma, "mixed weight")->capture_default_str();
  limit->add_option("--u", opt.u, "deck-size parameter; 1 for the large-deck limit")->capture_default_str();
  limit->add_option("--cap", opt.cap, "largest count listed")->capture_default_str()->check(CLI::NonNegativeNumber);
  auto* gap = leaf(compute, "gap-prob", "Toeplitz determinant for the point-process shape", P | N | GP, compute_gap_prob);
  gap->add_flag("--largest-part", opt.largest_part, "bound the largest part instead of the row count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << error_name(e.code()) << ": " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
