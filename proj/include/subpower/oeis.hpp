#pragma once

#include <subpower/core.hpp>
#include <subpower/transforms.hpp>

#include <unistd.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subpowers::oeis {

struct ParseError : std::runtime_error {
  std::size_t line = 0;

  ParseError(const std::string& msg, std::size_t line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// parsed (index, value) pairs of one b-file; indices advance by exactly 1
struct BFileRecord {
  std::string source_id;  // e.g. "A131689"
  std::vector<std::pair<long long, Int>> entries;
};

namespace detail {

inline bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  const std::size_t start = t[0] == '-' ? 1 : 0;
  if (start == t.size()) return false;
  for (std::size_t i = start; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

}  // namespace detail

// b-file grammar: '#' comment lines and blank lines are skipped; every other
// line is "<index> <value>" with arbitrary surrounding whitespace.
inline BFileRecord parse_bfile(std::istream& in, std::string source_id = {}) {
  BFileRecord rec;
  rec.source_id = std::move(source_id);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string index_tok, value_tok, excess;
    if (!(fields >> index_tok) || index_tok[0] == '#') continue;
    fields >> value_tok;
    if (fields >> excess)
      throw ParseError("b-file: unexpected trailing token \"" + excess + "\"", line_no);
    if (!detail::is_integer_token(index_tok) || !detail::is_integer_token(value_tok))
      throw ParseError("b-file: malformed line \"" + line + "\"", line_no);
    long long index = 0;
    try {
      index = std::stoll(index_tok);
    } catch (const std::out_of_range&) {
      throw ParseError("b-file: index out of range \"" + index_tok + "\"", line_no);
    }
    if (!rec.entries.empty() && index != rec.entries.back().first + 1)
      throw StructuralError("b-file: index gap between " +
                            std::to_string(rec.entries.back().first) + " and " +
                            std::to_string(index));
    rec.entries.emplace_back(index, Int(value_tok));
  }
  return rec;
}

inline BFileRecord parse_bfile(const std::string& text, std::string source_id = {}) {
  std::istringstream in(text);
  return parse_bfile(in, std::move(source_id));
}

// triangle read by rows: entries n = 0..m of each row m, concatenated
inline IntSequence flatten_triangle(const SubpowerTable& table) {
  IntSequence seq;
  seq.values.reserve((table.max_m() + 1) * (table.max_m() + 2) / 2);
  for (unsigned m = 0; m <= table.max_m(); ++m)
    for (const Int& v : table.row(m)) seq.values.push_back(v);
  return seq;
}

struct ComparisonReport {
  struct Mismatch {
    long long index = 0;
    Int expected;  // reference (b-file) value
    Int actual;    // locally generated value
  };

  std::size_t compared = 0;
  std::size_t matched = 0;
  std::optional<Mismatch> first_mismatch;

  bool clean() const { return matched == compared; }
};

// positional comparison over the common prefix; the b-file's first index is
// trusted as the reference offset
inline ComparisonReport compare(const IntSequence& seq, const BFileRecord& ref) {
  const std::size_t n = std::min(seq.values.size(), ref.entries.size());
  if (n == 0) throw std::invalid_argument("compare: empty overlap");
  ComparisonReport report;
  report.compared = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (seq.values[i] == ref.entries[i].second) {
      ++report.matched;
    } else if (!report.first_mismatch) {
      report.first_mismatch = ComparisonReport::Mismatch{
          ref.entries[i].first, ref.entries[i].second, seq.values[i]};
    }
  }
  return report;
}

inline bool valid_a_number(const std::string& a) {
  if (a.size() != 7 || a[0] != 'A') return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(a[i]))) return false;
  return true;
}

inline std::string bfile_filename(const std::string& a_number) {
  return "b" + a_number.substr(1) + ".txt";
}

inline std::string bfile_url(const std::string& a_number) {
  return "https://oeis.org/" + a_number + "/" + bfile_filename(a_number);
}

// performs one HTTP GET and returns the body; throws IoError on failure
using HttpFetcher = std::function<std::string(const std::string& url)>;

struct FetchOptions {
  bool allow_network = false;
  std::filesystem::path cache_dir;                   // fetched files land here
  std::vector<std::filesystem::path> snapshot_dirs;  // bundled read-only fallbacks
  HttpFetcher fetcher;                               // required when allow_network
  int timeout_seconds = 30;                          // for the fetcher to honor
};

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// write-to-temp plus rename, so concurrent fetchers never expose a torn file
inline void write_file_atomic(const std::filesystem::path& path,
                              const std::string& data) {
  std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp =
      path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out.write(data.data(), static_cast<std::streamsize>(data.size())))
      throw IoError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace detail

// b-file text for the given sequence: cache first, bundled snapshots next,
// and the network only when explicitly allowed
inline std::string fetch_bfile(const std::string& a_number, const FetchOptions& opts) {
  if (!valid_a_number(a_number))
    throw std::invalid_argument("malformed A-number \"" + a_number +
                                "\" (expected 'A' followed by 6 digits)");
  const std::string name = bfile_filename(a_number);

  std::vector<std::filesystem::path> candidates;
  if (!opts.cache_dir.empty()) candidates.push_back(opts.cache_dir / name);
  for (const auto& dir : opts.snapshot_dirs) candidates.push_back(dir / name);
  for (const auto& path : candidates) {
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) return detail::read_file(path);
  }

  if (!opts.allow_network || !opts.fetcher)
    throw IoError("no local copy of " + name +
                  " for " + a_number + "; re-run with --fetch to download it");
  const std::string body = opts.fetcher(bfile_url(a_number));
  if (!opts.cache_dir.empty()) detail::write_file_atomic(opts.cache_dir / name, body);
  return body;
}

}  // namespace subpowers::oeis
