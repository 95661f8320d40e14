// Command-line front end over the shared C library. Subcommands cover the
// walk-count tables, raw endpoint-set counts, filtered partition counts,
// constant-term series dumps, the verification suites, recurrence guessing,
// growth fits, and the bijection demo. Output is TSV by default or JSON
// with a stable schema; exit codes: 0 success, 1 verification/search
// failure, 2 usage error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crosswalks.h"

namespace {

using ordered_json = nlohmann::ordered_json;

// Copies and frees a library-owned string.
std::string take(char* p) {
  if (p == nullptr) return "";
  std::string s(p);
  cw_string_free(p);
  return s;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    const size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

// Maps a library status to a process exit code, reporting the error.
int report_status(int rc) {
  if (rc == CW_OK) return 0;
  std::cerr << "error: " << cw_last_error() << "\n";
  return rc == CW_BAD_INPUT ? 2 : 1;
}

// Positive integer value of CROSSWALKS_GUARD, or 0 when unset/invalid.
int env_guard() {
  const char* v = std::getenv("CROSSWALKS_GUARD");
  if (v == nullptr) return 0;
  const long n = std::strtol(v, nullptr, 10);
  return n > 0 && n < 1000000 ? static_cast<int>(n) : 0;
}

struct GlobalConfig {
  std::string format = "tsv";
  int order = 24;        // series truncation order
  int window_extra = 0;  // extra x-window width for series work
  int ceiling = 0;       // walk-length bound; 0 = library default
  int guard = 0;         // partition-size bound; 0 = library default
};

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ------------------------------------------------------------- subcommands

int run_table(const GlobalConfig& cfg, const std::string& which, int terms) {
  char* buf = nullptr;
  int rc = cw_table_rows(which.c_str(), &buf);
  if (rc != CW_OK) return report_status(rc);
  const std::vector<std::string> names = split_lines(take(buf));

  std::vector<std::vector<std::string>> rows;
  for (const std::string& name : names) {
    rc = cw_row(name.c_str(), terms, cfg.ceiling, &buf);
    if (rc != CW_OK) return report_status(rc);
    rows.push_back(split_lines(take(buf)));
  }

  if (cfg.format == "json") {
    ordered_json j;
    j["table"] = which;
    j["params"] = {{"terms", terms}};
    j["rows"] = ordered_json::array();
    for (size_t i = 0; i < names.size(); ++i) {
      j["rows"].push_back({{"anchor", names[i]}, {"sequence", rows[i]}});
    }
    emit_json(j);
  } else {
    for (size_t i = 0; i < names.size(); ++i) {
      std::cout << names[i];
      for (const std::string& v : rows[i]) std::cout << "\t" << v;
      std::cout << "\n";
    }
  }
  return 0;
}

int run_count(const GlobalConfig& cfg, const std::string& flavor,
              const std::string& endset, const std::string& parity,
              int max_length) {
  char* buf = nullptr;
  const int rc = cw_walk_counts(flavor.c_str(), endset.c_str(),
                                parity.c_str(), max_length, cfg.ceiling, &buf);
  if (rc != CW_OK) return report_status(rc);
  const std::vector<std::string> values = split_lines(take(buf));

  const int start = parity == "odd" ? 1 : 0;
  const int step = parity == "all" ? 1 : 2;
  if (cfg.format == "json") {
    ordered_json j;
    j["anchor"] = flavor + "-" + endset + "-" + parity;
    j["sequence"] = values;
    j["params"] = {{"flavor", flavor},
                   {"endset", endset},
                   {"parity", parity},
                   {"max_length", max_length}};
    emit_json(j);
  } else {
    for (size_t i = 0; i < values.size(); ++i) {
      std::cout << start + step * static_cast<int>(i) << "\t" << values[i]
                << "\n";
    }
  }
  return 0;
}

int run_partitions(const GlobalConfig& cfg, int n, int k, bool enhanced,
                   bool bisymmetric, bool list) {
  char* buf = nullptr;
  int rc = cw_partition_count(n, k, enhanced ? 1 : 0, bisymmetric ? 1 : 0,
                              cfg.guard, &buf);
  if (rc != CW_OK) return report_status(rc);
  const std::string count = take(buf);

  std::vector<std::string> items;
  if (list) {
    rc = cw_partition_list(n, k, enhanced ? 1 : 0, bisymmetric ? 1 : 0,
                           cfg.guard, &buf);
    if (rc != CW_OK) return report_status(rc);
    items = split_lines(take(buf));
  }

  if (cfg.format == "json") {
    ordered_json j;
    j["anchor"] = "partitions";
    j["sequence"] = ordered_json::array({count});
    j["params"] = {{"n", n},
                   {"k", k},
                   {"enhanced", enhanced},
                   {"bisymmetric", bisymmetric}};
    if (list) j["partitions"] = items;
    emit_json(j);
  } else {
    std::cout << count << "\n";
    for (const std::string& p : items) std::cout << p << "\n";
  }
  return 0;
}

int run_series(const GlobalConfig& cfg, const std::string& flavor,
               const std::string& combo, bool dump) {
  cw_engine* eng = cw_engine_new(flavor.c_str(), cfg.order, cfg.window_extra);
  if (eng == nullptr) return report_status(CW_BAD_INPUT);
  char* buf = nullptr;
  const int rc = dump ? cw_engine_triples(eng, combo.c_str(), &buf)
                      : cw_engine_counts(eng, combo.c_str(), &buf);
  cw_engine_free(eng);
  if (rc != CW_OK) return report_status(rc);
  const std::vector<std::string> values = split_lines(take(buf));

  if (cfg.format == "json") {
    ordered_json j;
    j["anchor"] = combo;
    j["params"] = {{"flavor", flavor},
                   {"order", cfg.order},
                   {"window_extra", cfg.window_extra}};
    if (dump) {
      j["triples"] = ordered_json::array();
      for (const std::string& line : values) {
        const std::vector<std::string> f = split_tabs(line);
        if (f.size() == 3) {
          j["triples"].push_back(
              {std::atoi(f[0].c_str()), f[1], f[2]});
        }
      }
    } else {
      j["sequence"] = values;
    }
    emit_json(j);
  } else if (dump) {
    for (const std::string& line : values) std::cout << line << "\n";
  } else {
    for (size_t i = 0; i < values.size(); ++i) {
      std::cout << i << "\t" << values[i] << "\n";
    }
  }
  return 0;
}

int run_verify(const GlobalConfig& cfg, const std::string& suite) {
  char* buf = nullptr;
  const int rc = cw_verify(suite.c_str(), cfg.order, &buf);
  if (rc != CW_OK && rc != CW_FAIL) return report_status(rc);
  const std::vector<std::string> lines = split_lines(take(buf));

  if (cfg.format == "json") {
    ordered_json j;
    j["suite"] = suite;
    j["pass"] = rc == CW_OK;
    j["checks"] = ordered_json::array();
    for (const std::string& line : lines) {
      if (line.rfind("PASS ", 0) == 0) {
        j["checks"].push_back(
            {{"id", line.substr(5)}, {"pass", true}, {"detail", ""}});
      } else if (line.rfind("FAIL ", 0) == 0) {
        const size_t colon = line.find(": ");
        const std::string id = line.substr(5, colon - 5);
        const std::string detail =
            colon == std::string::npos ? "" : line.substr(colon + 2);
        j["checks"].push_back({{"id", id}, {"pass", false}, {"detail", detail}});
      }
    }
    emit_json(j);
  } else {
    for (const std::string& line : lines) std::cout << line << "\n";
  }

  if (rc == CW_FAIL) {
    for (const std::string& line : lines) {
      if (line.rfind("FAIL ", 0) == 0) {
        std::cerr << "first failure: " << line.substr(5) << "\n";
        break;
      }
    }
    return 1;
  }
  return 0;
}

int run_guess(const GlobalConfig& cfg, const std::string& path, int max_order,
              int max_degree, int holdout) {
  std::string text;
  if (path == "-") {
    std::ostringstream all;
    all << std::cin.rdbuf();
    text = all.str();
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot read " << path << "\n";
      return 2;
    }
    std::ostringstream all;
    all << in.rdbuf();
    text = all.str();
  }

  char* buf = nullptr;
  const int rc = cw_guess(text.c_str(), max_order, max_degree, holdout, &buf);
  if (rc != CW_OK) {
    take(buf);
    return report_status(rc);
  }
  std::string rec = take(buf);
  while (!rec.empty() && rec.back() == '\n') rec.pop_back();

  if (cfg.format == "json") {
    ordered_json j;
    j["recurrence"] = rec;
    j["params"] = {{"max_order", max_order},
                   {"max_degree", max_degree},
                   {"holdout", holdout}};
    emit_json(j);
  } else {
    std::cout << rec << "\n";
  }
  return 0;
}

int run_asymptotics(const GlobalConfig& cfg, const std::string& row,
                    long terms) {
  std::vector<std::string> rows;
  if (!row.empty()) {
    rows.push_back(row);
  } else {
    for (const char* table : {"paper2", "paper3"}) {
      char* buf = nullptr;
      const int rc = cw_table_rows(table, &buf);
      if (rc != CW_OK) return report_status(rc);
      for (const std::string& name : split_lines(take(buf))) {
        rows.push_back(name);
      }
    }
  }

  ordered_json fits = ordered_json::array();
  for (const std::string& name : rows) {
    char* buf = nullptr;
    const int rc = cw_asymptotics(name.c_str(), terms, &buf);
    if (rc != CW_OK) return report_status(rc);
    ordered_json fit;
    fit["anchor"] = name;
    std::vector<std::string> tsv_fields;
    for (const std::string& line : split_lines(take(buf))) {
      const std::vector<std::string> kv = split_tabs(line);
      if (kv.size() != 2) continue;
      if (kv[0] == "alpha_int") {
        fit[kv[0]] = std::atoi(kv[1].c_str());
      } else {
        fit[kv[0]] = kv[1];
      }
      tsv_fields.push_back(kv[1]);
    }
    fits.push_back(fit);
    if (cfg.format != "json") {
      std::cout << name;
      for (const std::string& v : tsv_fields) std::cout << "\t" << v;
      std::cout << "\n";
    }
  }

  if (cfg.format == "json") {
    ordered_json j;
    j["params"] = {{"terms", terms}};
    j["fits"] = fits;
    emit_json(j);
  }
  return 0;
}

int run_bijection_demo(const GlobalConfig& cfg) {
  char* buf = nullptr;
  const int rc = cw_bijection_demo(&buf);
  if (rc != CW_OK) return report_status(rc);
  const std::string text = take(buf);
  if (cfg.format == "json") {
    ordered_json j;
    j["demo"] = split_lines(text);
    emit_json(j);
  } else {
    std::cout << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalConfig cfg;
  cfg.guard = env_guard();
  cfg.ceiling = env_guard();

  CLI::App app{"exact enumeration of noncrossing set partitions: lattice "
               "walks, constant-term series, holonomic verification"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  app.add_option("-N,--order", cfg.order,
                 "series truncation order for series/verify work")
      ->check(CLI::Range(4, 200))
      ->capture_default_str();
  app.add_option("--window-extra", cfg.window_extra,
                 "extra x-window width for series work")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  app.add_option("--ceiling", cfg.ceiling,
                 "walk-length bound (default: built-in guard, or "
                 "CROSSWALKS_GUARD)");
  app.add_option("--guard", cfg.guard,
                 "partition-size bound (default: built-in guard, or "
                 "CROSSWALKS_GUARD)");

  int exit_code = 0;

  // table <paper2|paper3>
  std::string table_name;
  int table_terms = 7;
  CLI::App* table = app.add_subcommand("table", "print a walk-count table");
  table->fallthrough();
  table->add_option("name", table_name, "paper2 or paper3")->required();
  table->add_option("--terms", table_terms, "columns per row")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  table->callback(
      [&] { exit_code = run_table(cfg, table_name, table_terms); });

  // count
  std::string count_flavor = "vacillating";
  std::string count_endset = "A2";
  std::string count_parity = "even";
  int count_max_length = 20;
  CLI::App* count =
      app.add_subcommand("count", "raw endpoint-set walk counts by length");
  count->fallthrough();
  count->add_option("--flavor", count_flavor, "vacillating or hesitating")
      ->capture_default_str();
  count->add_option("--endset", count_endset, "A1 A2 A2p A2pp A3 A4")
      ->capture_default_str();
  count->add_option("--parity", count_parity, "all, even, or odd lengths")
      ->check(CLI::IsMember({"all", "even", "odd"}))
      ->capture_default_str();
  count->add_option("--max-length", count_max_length, "largest walk length")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();
  count->callback([&] {
    exit_code = run_count(cfg, count_flavor, count_endset, count_parity,
                          count_max_length);
  });

  // partitions
  int part_n = 0;
  int part_k = 0;
  bool part_enhanced = false;
  bool part_bisym = false;
  bool part_list = false;
  CLI::App* partitions =
      app.add_subcommand("partitions", "filtered set-partition counts");
  partitions->fallthrough();
  partitions->add_option("-n", part_n, "ground-set size")->required();
  partitions->add_option("-k", part_k,
                         "keep partitions with no k-crossing (0 = no filter)");
  partitions->add_flag("--enhanced", part_enhanced,
                       "use the loop-augmented arc reading");
  partitions->add_flag("--bisymmetric", part_bisym,
                       "keep mirror-symmetric partitions only");
  partitions->add_flag("--list", part_list, "also print the partitions");
  partitions->callback([&] {
    exit_code = run_partitions(cfg, part_n, part_k, part_enhanced, part_bisym,
                               part_list);
  });

  // series
  std::string series_flavor = "vacillating";
  std::string series_combo = "A2";
  bool series_dump = false;
  CLI::App* series =
      app.add_subcommand("series", "constant-term series coefficients");
  series->fallthrough();
  series->add_option("--flavor", series_flavor, "vacillating or hesitating")
      ->capture_default_str();
  series->add_option("--combo", series_combo,
                     "endpoint-set combination, e.g. \"A1 + 2*A2p + 3*A2pp\"")
      ->capture_default_str();
  series->add_flag("--dump-series", series_dump,
                   "order/numerator/denominator triples instead of counts");
  series->callback([&] {
    exit_code = run_series(cfg, series_flavor, series_combo, series_dump);
  });

  // verify
  std::string verify_suite;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  verify
      ->add_option("suite", verify_suite,
                   "identities, recurrences, odes, bijections, or all")
      ->required()
      ->check(CLI::IsMember(
          {"identities", "recurrences", "odes", "bijections", "all"}));
  verify->callback([&] { exit_code = run_verify(cfg, verify_suite); });

  // guess
  std::string guess_in;
  int guess_max_order = 4;
  int guess_max_degree = 3;
  int guess_holdout = 5;
  CLI::App* guess =
      app.add_subcommand("guess", "fit a recurrence to a sequence file");
  guess->fallthrough();
  guess
      ->add_option("--in", guess_in,
                   "sequence file: one decimal integer per line, # comments, "
                   "- for stdin")
      ->required();
  guess->add_option("--max-order", guess_max_order, "largest order tried")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  guess->add_option("--max-degree", guess_max_degree,
                    "largest coefficient degree tried")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  guess->add_option("--holdout", guess_holdout,
                    "trailing terms reserved for validation")
      ->check(CLI::Range(0, 100))
      ->capture_default_str();
  guess->callback([&] {
    exit_code =
        run_guess(cfg, guess_in, guess_max_order, guess_max_degree,
                  guess_holdout);
  });

  // asymptotics
  std::string asym_row;
  long asym_terms = 2000;
  CLI::App* asym =
      app.add_subcommand("asymptotics", "growth-rate fits for count rows");
  asym->fallthrough();
  asym->add_option("--row", asym_row,
                   "named row (default: every table row)");
  asym->add_option("--terms", asym_terms, "extension length used for the fit")
      ->check(CLI::Range(32L, 1000000L))
      ->capture_default_str();
  asym->callback([&] { exit_code = run_asymptotics(cfg, asym_row, asym_terms); });

  // bijection demo
  CLI::App* bijection =
      app.add_subcommand("bijection", "palindrome encoding demonstrations");
  bijection->require_subcommand(1);
  CLI::App* demo =
      bijection->add_subcommand("demo", "fixed worked example");
  demo->fallthrough();
  demo->callback([&] { exit_code = run_bijection_demo(cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return exit_code;
}
