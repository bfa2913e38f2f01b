// Command-line front end: verification suites and steady-state tables.
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ntazrp/layer.hpp"
#include "ntazrp/tazrp.hpp"
#include "ntazrp/threed_r.hpp"

using namespace ntazrp;
using nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
  return s;
}

std::string join(const std::vector<int>& v) { return join(std::vector<long>(v.begin(), v.end())); }

void print_report(const Report& r, const std::string& format, bool timing) {
  if (format == "json") {
    ordered_json j;
    j["suite"] = r.suite;
    j["status"] = r.passed() ? "pass" : "fail";
    j["parameters"] = ordered_json::object();
    for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
    j["checked"] = r.checked;
    j["failure_count"] = r.failure_count;
    j["failures"] = ordered_json::array();
    for (const auto& f : r.failures)
      j["failures"].push_back({{"location", f.location},
                               {"label", f.label},
                               {"expected", f.expected},
                               {"actual", f.actual},
                               {"residual", f.residual}});
    if (timing) j["timing_ms"] = r.timing_ms;
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (checked " << r.checked;
  if (!r.passed()) std::cout << ", failures " << r.failure_count;
  std::cout << ")\n";
  for (const auto& [k, v] : r.parameters) std::cout << "  " << k << " = " << v << '\n';
  for (const auto& f : r.failures)
    std::cout << "  fail [" << join(f.location) << "] " << f.label << ": expected " << f.expected << ", actual "
              << f.actual << ", residual " << f.residual << '\n';
  if (r.failure_count > r.failures.size())
    std::cout << "  ... " << (r.failure_count - r.failures.size()) << " more\n";
  if (timing) std::cout << "  timing_ms = " << r.timing_ms << '\n';
}

struct VerifyOptions {
  std::string suite;
  std::string format = "text";
  bool timing = false;
  std::vector<int> flip;
  // Bounds, each used by the suites noted.
  int max_index = 3;   // r-properties, q0-limit
  int max_mode = 3;    // tetrahedron
  int max_comp = 3;    // eigenvectors
  int m = 1, n = 2;    // intertwining, bilinear; n also for hat-relation, embedding
  int max_boundary = 1, max_in = 1, max_green = 1;
  std::vector<int> s, r_vec;
  int window = 3;
  std::string q_mode = "generic";
  std::vector<int> alpha, beta;
  int cutoff = 8;
  int max_occupancy = -1;
  int r = 1;
  int max_total = -1;
  int max = 5;  // f-symmetry
};

RTable table_for(const VerifyOptions& o) {
  if (o.flip.empty()) return default_r_table();
  if (o.flip.size() != 6) throw UsageError("--flip-sign needs six indices a,b,c,i,j,k");
  return default_r_table().with_sign_flip({o.flip[0], o.flip[1], o.flip[2], o.flip[3], o.flip[4], o.flip[5]});
}

std::vector<LocalState> local_states(int n, int max_total) {
  std::vector<LocalState> v;
  for (int t = 0; t <= max_total; ++t)
    for (const State& s : states_with_total(static_cast<std::size_t>(n), t)) v.push_back(s);
  return v;
}

Report run_suite(const VerifyOptions& o) {
  const RTable table = table_for(o);
  const std::string& s = o.suite;
  if (s == "r-properties") return check_r_properties(o.max_index, table);
  if (s == "tetrahedron") return check_tetrahedron(o.max_mode, table);
  if (s == "eigenvectors") return check_eigenvectors(o.max_comp, table);
  if (s == "q0-limit") return check_q0_limit(o.max_index, table);
  if (s == "f-symmetry") return check_f_symmetry(o.max);
  if (s == "intertwining") return check_intertwining(o.m, o.n, {o.max_boundary, o.max_in, o.max_green}, table);
  if (s == "bilinear") {
    const std::vector<int> sv = o.s.empty() ? std::vector<int>(static_cast<std::size_t>(o.n), 0) : o.s;
    const std::vector<int> rv = o.r_vec.empty() ? std::vector<int>(static_cast<std::size_t>(o.m), 0) : o.r_vec;
    if (sv.size() != static_cast<std::size_t>(o.n) || rv.size() != static_cast<std::size_t>(o.m))
      throw UsageError("bilinear: --s needs n entries and --r-vec needs m entries");
    return check_bilinear(o.m, o.n, sv, rv, o.window, o.q_mode == "zero" ? QMode::zero : QMode::generic, table);
  }
  if (s == "embedding") return check_embedding(o.n, o.r, o.max_total >= 0 ? o.max_total : o.n * o.r + 2);
  if (s == "hat-relation" || s == "bilinear-x") {
    auto one = [&](const LocalState& a, const LocalState& b) {
      return s == "hat-relation" ? check_hat_relation(a, b, o.cutoff) : check_bilinear_X(a, b, o.cutoff);
    };
    if (!o.alpha.empty() || !o.beta.empty()) {
      if (o.alpha.size() != static_cast<std::size_t>(o.n) || o.beta.size() != static_cast<std::size_t>(o.n))
        throw UsageError(s + ": --alpha and --beta need n entries each");
      return one(o.alpha, o.beta);
    }
    // Sweep every pair with |alpha|, |beta| <= max occupancy.
    const int occ = o.max_occupancy >= 0 ? o.max_occupancy : (o.n <= 2 ? 2 : 1);
    Report all;
    all.suite = s;
    all.parameters["n"] = std::to_string(o.n);
    all.parameters["max_occupancy"] = std::to_string(occ);
    all.parameters["cutoff"] = std::to_string(o.cutoff);
    std::uint64_t pairs = 0;
    for (const auto& a : local_states(o.n, occ))
      for (const auto& b : local_states(o.n, occ)) {
        Report r = one(a, b);
        for (auto& f : r.failures) f.label = "alpha=" + join(a) + " beta=" + join(b) + " " + f.label;
        all.merge(r);
        ++pairs;
      }
    all.parameters["pairs"] = std::to_string(pairs);
    all.finalize();
    return all;
  }
  throw UsageError("unknown suite: " + s);
}

void check_range(const std::string& name, int v, int lo, int hi) {
  if (v < lo || v > hi)
    throw UsageError(name + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void validate(const VerifyOptions& o) {
  check_range("--max-index", o.max_index, 0, 6);
  check_range("--max-mode", o.max_mode, 0, 5);
  check_range("--max", o.max_comp, 0, 6);
  check_range("--m", o.m, 1, 3);
  check_range("--n", o.n, 1, 4);
  check_range("--max-boundary", o.max_boundary, 0, 3);
  check_range("--max-in", o.max_in, 0, 3);
  check_range("--max-green", o.max_green, 0, 3);
  check_range("--window", o.window, 0, 6);
  check_range("--cutoff", o.cutoff, 0, 16);
  check_range("--r", o.r, 0, 4);
  check_range("--max-total", o.max_total, -1, 12);
  check_range("--max-occupancy", o.max_occupancy, -1, 3);
  check_range("--max (f-symmetry)", o.max, 0, 8);
  for (int x : o.alpha) check_range("--alpha entry", x, 0, 8);
  for (int x : o.beta) check_range("--beta entry", x, 0, 8);
}

struct SteadyOptions {
  int n = 0;
  int L = 0;
  std::vector<int> m;
  int cutoff = 1;
  int max_cutoff = 32;
  bool cross_check = false;
  std::string format = "text";
};

ordered_json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

int run_steady_state(const SteadyOptions& o) {
  if (o.n < 1 || o.L < 1) throw UsageError("--n and --L must be positive");
  if (o.m.size() != static_cast<std::size_t>(o.n)) throw UsageError("--m needs n entries");
  for (int x : o.m)
    if (x < 1) throw UsageError("non-basic sector: every multiplicity must be >= 1");
  if (o.cutoff < 0 || o.max_cutoff < o.cutoff) throw UsageError("need 0 <= --cutoff <= --max-cutoff");

  const Sector sector = make_sector(o.n, o.L, o.m);
  ProbabilityTable table;
  try {
    table = mp_table(sector, o.cutoff, o.max_cutoff);
  } catch (const Unstable& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: raise --max-cutoff (or --cutoff) and retry\n";
    return kFail;
  }
  BigInt sum = 0;
  for (const auto& v : table.values) sum += v;
  std::optional<bool> agrees;
  if (o.cross_check) agrees = steady_state_oracle(sector) == table.values;

  if (o.format == "json") {
    ordered_json j;
    j["n"] = o.n;
    j["L"] = o.L;
    j["m"] = o.m;
    j["cutoff"] = table.cutoff;
    j["rows"] = ordered_json::array();
    for (std::size_t k = 0; k < table.values.size(); ++k)
      j["rows"].push_back({{"config", format_config(sector.states[k])}, {"probability", big_to_json(table.values[k])}});
    j["sum"] = big_to_json(sum);
    j["normalization"] = big_to_json(sector.normalization());
    if (agrees) j["oracle_agrees"] = *agrees;
    std::cout << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    std::cout << "configuration,probability\n";
    for (std::size_t k = 0; k < table.values.size(); ++k)
      std::cout << '"' << format_config(sector.states[k]) << "\"," << table.values[k].get_str() << '\n';
  } else {
    std::cout << "# n=" << o.n << " L=" << o.L << " m=" << join(o.m) << " cutoff=" << table.cutoff << '\n';
    for (std::size_t k = 0; k < table.values.size(); ++k)
      std::cout << format_config(sector.states[k]) << "  " << table.values[k].get_str() << '\n';
    std::cout << "sum " << sum.get_str() << '\n';
    if (agrees) std::cout << "oracle " << (*agrees ? "agrees" : "DISAGREES") << '\n';
  }
  if (agrees && !*agrees) {
    std::cerr << "error: matrix product table disagrees with the Markov kernel oracle\n";
    return kFail;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-TAZRP steady states and 3D integrability checks"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", vo.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"r-properties", "tetrahedron", "eigenvectors", "intertwining", "bilinear", "q0-limit",
                             "hat-relation", "embedding", "f-symmetry", "bilinear-x"}));
  verify->add_option("--format", vo.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", vo.timing, "Include wall-clock timing in the report");
  verify->add_option("--flip-sign", vo.flip, "Negate R^{abc}_{ijk} (a,b,c,i,j,k) before checking")->delimiter(',');
  verify->add_option("--max-index", vo.max_index, "r-properties, q0-limit: largest index");
  verify->add_option("--max-mode", vo.max_mode, "tetrahedron: largest total mode");
  verify->add_option("--max-component", vo.max_comp, "eigenvectors: largest component");
  verify->add_option("--m", vo.m, "Layer rows");
  verify->add_option("--n", vo.n, "Layer columns, or number of species");
  verify->add_option("--max-boundary", vo.max_boundary, "intertwining: largest boundary label");
  verify->add_option("--max-in", vo.max_in, "intertwining: largest in-state total");
  verify->add_option("--max-green", vo.max_green, "intertwining: largest auxiliary mode");
  verify->add_option("--s", vo.s, "bilinear: s (n entries)")->delimiter(',');
  verify->add_option("--r-vec", vo.r_vec, "bilinear: r (m entries)")->delimiter(',');
  verify->add_option("--window", vo.window, "bilinear: largest in/out total mode");
  verify->add_option("--q-mode", vo.q_mode, "bilinear: q mode")->check(CLI::IsMember({"generic", "zero"}));
  verify->add_option("--alpha", vo.alpha, "hat-relation, bilinear-x: alpha")->delimiter(',');
  verify->add_option("--beta", vo.beta, "hat-relation, bilinear-x: beta")->delimiter(',');
  verify->add_option("--cutoff", vo.cutoff, "hat-relation, bilinear-x: Fock cutoff");
  verify->add_option("--max-occupancy", vo.max_occupancy, "hat-relation, bilinear-x: sweep bound on |alpha|, |beta|");
  verify->add_option("--r", vo.r, "embedding: r");
  verify->add_option("--max-total", vo.max_total, "embedding: largest in/out total mode");
  verify->add_option("--max", vo.max, "f-symmetry: largest r, s, t");

  SteadyOptions so;
  auto* steady = app.add_subcommand("steady-state", "Steady-state probabilities of a sector");
  steady->add_option("--n", so.n, "Number of species")->required();
  steady->add_option("--L", so.L, "Number of sites")->required();
  steady->add_option("--m", so.m, "Multiplicities m_1,...,m_n")->required()->delimiter(',');
  steady->add_option("--cutoff", so.cutoff, "Starting Fock cutoff");
  steady->add_option("--max-cutoff", so.max_cutoff, "Give up above this cutoff");
  steady->add_flag("--cross-check", so.cross_check, "Compare against the Markov kernel oracle");
  steady->add_option("--format", so.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) {
      validate(vo);
      const auto t0 = std::chrono::steady_clock::now();
      Report r = run_suite(vo);
      r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      print_report(r, vo.format, vo.timing);
      return r.passed() ? kPass : kFail;
    }
    return run_steady_state(so);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}
