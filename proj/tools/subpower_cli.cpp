// Command-line front end: table/sequence emission, identity verification
// suites, the Fermat-style search, plot data, and OEIS cross-checks.
//
// Exit codes: 0 success, 1 mathematical mismatch or identity failure,
// 2 usage error, 3 I/O error.

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include <subpower/subpower.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace subpowers;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

#ifndef SUBPOWER_DEFAULT_DATA_DIR
#define SUBPOWER_DEFAULT_DATA_DIR "data"
#endif

std::string fmt_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("SUBPOWER_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "subpower";
  return std::filesystem::temp_directory_path() / "subpower-cache";
}

// ---- rendering ------------------------------------------------------------

void render_table(const SubpowerTable& table, const std::string& format) {
  const unsigned max_m = table.max_m();
  if (format == "csv") {
    std::cout << "m,n,value\n";
    for (unsigned m = 0; m <= max_m; ++m)
      for (unsigned n = 0; n <= m; ++n)
        std::cout << m << "," << n << "," << table.entry(m, n) << "\n";
  } else if (format == "json") {
    json rows = json::array();
    for (unsigned m = 0; m <= max_m; ++m) {
      json row = json::array();
      for (unsigned n = 0; n <= m; ++n) row.push_back(to_string(table.entry(m, n)));
      rows.push_back(std::move(row));
    }
    std::cout << json{{"rows", std::move(rows)}}.dump() << "\n";
  } else {
    // pipe table with the zero entries left blank
    std::cout << "| m\\n |";
    for (unsigned n = 0; n <= max_m; ++n) std::cout << " " << n << " |";
    std::cout << "\n|---|";
    for (unsigned n = 0; n <= max_m; ++n) std::cout << "---|";
    std::cout << "\n";
    for (unsigned m = 0; m <= max_m; ++m) {
      std::cout << "| " << m << " |";
      for (unsigned n = 0; n <= max_m; ++n) {
        if (n > m || table.entry(m, n) == 0)
          std::cout << "  |";
        else
          std::cout << " " << table.entry(m, n) << " |";
      }
      std::cout << "\n";
    }
  }
}

// rows of (index, value) pairs
void render_pairs(const std::vector<std::pair<long long, std::string>>& rows,
                  const std::string& format, const char* index_name) {
  if (format == "csv") {
    std::cout << index_name << ",value\n";
    for (const auto& [i, v] : rows) std::cout << i << "," << v << "\n";
  } else if (format == "json") {
    json out = json::array();
    for (const auto& [i, v] : rows) out.push_back({std::to_string(i), v});
    std::cout << json{{"rows", std::move(out)}}.dump() << "\n";
  } else {
    std::cout << "| " << index_name << " | value |\n|---|---|\n";
    for (const auto& [i, v] : rows) std::cout << "| " << i << " | " << v << " |\n";
  }
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_table(unsigned max_m, const std::string& format) {
  render_table(SubpowerTable(max_m), format);
  return kExitOk;
}

int cmd_seq(const std::string& family, unsigned terms, const std::string& format) {
  std::vector<std::pair<long long, std::string>> rows;
  rows.reserve(terms);
  if (family == "triangle") {
    unsigned max_m = 0;
    while ((max_m + 1) * (max_m + 2) / 2 < terms) ++max_m;
    const IntSequence seq = oeis::flatten_triangle(SubpowerTable(max_m));
    for (unsigned i = 0; i < terms; ++i) rows.emplace_back(i, to_string(seq.values[i]));
  } else if (family == "fubini") {
    for (unsigned m = 0; m < terms; ++m) rows.emplace_back(m, to_string(fubini(m)));
  } else if (family == "subfactorial") {
    for (unsigned n = 0; n < terms; ++n) rows.emplace_back(n, to_string(subfactorial(n)));
  } else if (family == "bernoulli") {
    const BernoulliCache cache = bernoulli(terms - 1);
    for (unsigned k = 0; k < terms; ++k) rows.emplace_back(k, to_string(cache.values[k]));
  } else {  // harmonic
    for (unsigned n = 0; n < terms; ++n) rows.emplace_back(n, to_string(harmonic(n)));
  }
  render_pairs(rows, format, "index");
  return kExitOk;
}

int cmd_check(const std::string& suite, std::optional<double> tol,
              const std::filesystem::path& data_dir) {
  checks::SuiteOptions opts;
  opts.tol = tol;
  opts.data_dir = data_dir;
  const checks::SuiteResult result = checks::run_suite(suite, opts);
  std::cout << "suite " << suite << ": " << result.checks_run << " checks, "
            << result.failures.size() << " failures\n";
  for (const auto& note : result.notes) std::cout << "note: " << note << "\n";
  std::size_t shown = 0;
  for (const auto& f : result.failures) {
    if (++shown > 25) {
      std::cout << "... and " << result.failures.size() - 25 << " more failures\n";
      break;
    }
    std::cout << "FAIL " << f.check << " [" << f.params << "]: " << f.detail << "\n";
  }
  return result.passed() ? kExitOk : kExitMismatch;
}

int cmd_fermat(unsigned max_m) {
  if (max_m < 1) throw CLI::ValidationError("fermat", "--max-m must be >= 1");
  const SubpowerTable table(max_m);
  std::vector<unsigned> with_solutions;
  for (unsigned m = 1; m <= max_m; ++m) {
    const auto sols = fermat_search(m, table);
    std::cout << "m=" << m << ":";
    if (sols.empty()) {
      std::cout << " none";
    } else {
      with_solutions.push_back(m);
      for (const auto& s : sols)
        std::cout << " (" << s.x << "," << s.y << "," << s.z << ")";
    }
    std::cout << "\n";
  }
  std::cout << "solutions found for m in {";
  for (std::size_t i = 0; i < with_solutions.size(); ++i)
    std::cout << (i ? ", " : "") << with_solutions[i];
  std::cout << "}\n";
  return kExitOk;
}

int cmd_plot_data(unsigned n_max, double z_min, double z_max, double step) {
  const auto samples = curve_samples(n_max, z_min, z_max, step);
  std::cout << "z";
  for (unsigned n = 1; n <= n_max; ++n) std::cout << ",n" << n;
  std::cout << "\n";
  for (std::size_t i = 0; i < samples.size(); i += n_max) {
    std::cout << fmt_double(samples[i].z);
    for (unsigned n = 0; n < n_max; ++n) std::cout << "," << fmt_double(samples[i + n].value);
    std::cout << "\n";
  }
  return kExitOk;
}

oeis::HttpFetcher make_http_fetcher(int timeout_seconds) {
  return [timeout_seconds](const std::string& url) -> std::string {
    const auto path_pos = url.find('/', url.find("://") + 3);
    httplib::Client client(url.substr(0, path_pos));
    client.set_connection_timeout(timeout_seconds, 0);
    client.set_read_timeout(timeout_seconds, 0);
    client.set_follow_location(true);
    const auto res = client.Get(url.substr(path_pos));
    if (!res)
      throw oeis::IoError("fetch failed for " + url + ": " + httplib::to_string(res.error()));
    if (res->status != 200)
      throw oeis::IoError("fetch failed for " + url + ": HTTP " +
                          std::to_string(res->status));
    return res->body;
  };
}

int cmd_oeis(const std::string& a_number, const std::string& against, bool fetch,
             unsigned max_m, unsigned terms, const std::filesystem::path& data_dir) {
  oeis::FetchOptions opts;
  opts.allow_network = fetch;
  opts.cache_dir = default_cache_dir();
  opts.snapshot_dirs = {data_dir};
  if (fetch) opts.fetcher = make_http_fetcher(opts.timeout_seconds);

  const oeis::BFileRecord record =
      oeis::parse_bfile(oeis::fetch_bfile(a_number, opts), a_number);

  IntSequence seq;
  std::string what;
  if (against == "triangle") {
    seq = oeis::flatten_triangle(SubpowerTable(max_m));
    what = "triangle (max_m=" + std::to_string(max_m) + ")";
  } else {
    for (unsigned m = 0; m < terms; ++m) seq.values.push_back(fubini(m));
    what = "fubini (terms=" + std::to_string(terms) + ")";
  }

  const oeis::ComparisonReport report = oeis::compare(seq, record);
  std::cout << a_number << " vs " << what << ": compared " << report.compared
            << ", matched " << report.matched << "\n";
  if (report.first_mismatch) {
    std::cout << "first mismatch at index " << report.first_mismatch->index
              << ": expected " << report.first_mismatch->expected << ", got "
              << report.first_mismatch->actual << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact subpower (surjection-count) arithmetic and its number families"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"csv", "json", "markdown"};

  // table
  auto* table = app.add_subcommand("table", "emit the subpower triangle");
  unsigned table_max_m = 0;
  std::string table_format = "csv";
  table->add_option("--max-m", table_max_m, "largest exponent m")->required();
  table->add_option("--format", table_format)->check(CLI::IsMember(formats));

  // seq
  auto* seq = app.add_subcommand("seq", "emit a named integer/rational sequence");
  std::string seq_family;
  unsigned seq_terms = 20;
  std::string seq_format = "csv";
  seq->add_option("--family", seq_family)
      ->required()
      ->check(CLI::IsMember({"triangle", "fubini", "subfactorial", "bernoulli", "harmonic"}));
  seq->add_option("--terms", seq_terms)->check(CLI::PositiveNumber);
  seq->add_option("--format", seq_format)->check(CLI::IsMember(formats));

  // check
  auto* check = app.add_subcommand("check", "run an identity verification suite");
  std::string check_suite;
  double check_tol = 0;
  std::string check_data_dir = SUBPOWER_DEFAULT_DATA_DIR;
  check->add_option("--suite", check_suite)
      ->required()
      ->check(CLI::IsMember({"core", "finitediff", "families", "analytic", "oeis", "all"}));
  auto* tol_opt = check->add_option("--tol", check_tol, "relax floating-point tolerances");
  check->add_option("--data-dir", check_data_dir, "bundled OEIS snapshots");

  // fermat
  auto* fermat = app.add_subcommand("fermat", "search x^{m} + y^{m} = z^{m}");
  unsigned fermat_max_m = 0;
  fermat->add_option("--max-m", fermat_max_m, "search every m up to this bound")->required();

  // plot-data
  auto* plot = app.add_subcommand("plot-data", "CSV samples of the real-exponent curves");
  unsigned plot_n_max = 5;
  double plot_z_min = 0, plot_z_max = 5, plot_step = 0.1;
  plot->add_option("--n-max", plot_n_max)->check(CLI::PositiveNumber);
  plot->add_option("--z-min", plot_z_min);
  plot->add_option("--z-max", plot_z_max);
  plot->add_option("--step", plot_step);

  // oeis
  auto* oeis_cmd = app.add_subcommand("oeis", "compare a generated sequence to an OEIS b-file");
  std::string oeis_a_number, oeis_against;
  bool oeis_fetch = false;
  unsigned oeis_max_m = 12, oeis_terms = 26;
  std::string oeis_data_dir = SUBPOWER_DEFAULT_DATA_DIR;
  oeis_cmd->add_option("a-number", oeis_a_number, "sequence id, e.g. A131689")->required();
  oeis_cmd->add_option("--against", oeis_against)
      ->required()
      ->check(CLI::IsMember({"triangle", "fubini"}));
  oeis_cmd->add_flag("--fetch", oeis_fetch, "allow a network download on cache miss");
  oeis_cmd->add_option("--max-m", oeis_max_m, "triangle rows to generate");
  oeis_cmd->add_option("--terms", oeis_terms, "fubini terms to generate");
  oeis_cmd->add_option("--data-dir", oeis_data_dir, "bundled OEIS snapshots");

  // sum-powers
  auto* sum = app.add_subcommand("sum-powers", "S_m(n) = 1^m + ... + n^m");
  unsigned sum_m = 0, sum_n = 0;
  std::string sum_method = "binomial";
  sum->add_option("--m", sum_m)->required();
  sum->add_option("--n", sum_n)->required();
  sum->add_option("--method", sum_method)
      ->check(CLI::IsMember({"direct", "binomial", "bernoulli"}));

  // bernoulli
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_upto");
  unsigned bern_upto = 12;
  std::string bern_method = "recurrence", bern_format = "csv";
  bern->add_option("--upto", bern_upto);
  bern->add_option("--method", bern_method)
      ->check(CLI::IsMember({"recurrence", "explicit"}));
  bern->add_option("--format", bern_format)->check(CLI::IsMember(formats));

  // fubini
  auto* fub = app.add_subcommand("fubini", "Fubini (ordered Bell) numbers F(0)..F(upto)");
  unsigned fub_upto = 12;
  std::string fub_method = "rowsum", fub_format = "csv";
  fub->add_option("--upto", fub_upto);
  fub->add_option("--method", fub_method)->check(CLI::IsMember({"rowsum", "recurrence"}));
  fub->add_option("--format", fub_format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_max_m, table_format);
    if (*seq) return cmd_seq(seq_family, seq_terms, seq_format);
    if (*check)
      return cmd_check(check_suite,
                       *tol_opt ? std::optional<double>(check_tol) : std::nullopt,
                       check_data_dir);
    if (*fermat) return cmd_fermat(fermat_max_m);
    if (*plot) return cmd_plot_data(plot_n_max, plot_z_min, plot_z_max, plot_step);
    if (*oeis_cmd)
      return cmd_oeis(oeis_a_number, oeis_against, oeis_fetch, oeis_max_m, oeis_terms,
                      oeis_data_dir);
    if (*sum) {
      const PowerSumMethod method = sum_method == "direct" ? PowerSumMethod::direct
                                    : sum_method == "bernoulli"
                                        ? PowerSumMethod::bernoulli
                                        : PowerSumMethod::binomial;
      std::cout << sum_powers(sum_m, sum_n, method) << "\n";
      return kExitOk;
    }
    if (*bern) {
      const BernoulliCache cache =
          bernoulli(bern_upto, bern_method == "explicit" ? BernoulliMethod::explicit_form
                                                         : BernoulliMethod::recurrence);
      std::vector<std::pair<long long, std::string>> rows;
      for (unsigned k = 0; k <= bern_upto; ++k)
        rows.emplace_back(k, to_string(cache.values[k]));
      render_pairs(rows, bern_format, "k");
      return kExitOk;
    }
    if (*fub) {
      const FubiniMethod method =
          fub_method == "recurrence" ? FubiniMethod::recurrence : FubiniMethod::rowsum;
      std::vector<std::pair<long long, std::string>> rows;
      for (unsigned m = 0; m <= fub_upto; ++m)
        rows.emplace_back(m, to_string(fubini(m, method)));
      render_pairs(rows, fub_format, "m");
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const oeis::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const oeis::ParseError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const oeis::StructuralError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
