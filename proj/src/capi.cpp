#include "crosswalks.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crosswalks/bijections.hpp"
#include "crosswalks/genfunc.hpp"
#include "crosswalks/holonomic.hpp"
#include "crosswalks/partitions.hpp"
#include "crosswalks/rational.hpp"
#include "crosswalks/verify.hpp"
#include "crosswalks/walks.hpp"

namespace {

using namespace crosswalks;

thread_local std::string g_last_error = "no error";

void set_error(const std::string& msg) { g_last_error = msg; }

// Copies text into a malloc'd buffer owned by the caller.
char* dup_string(const std::string& text) {
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (buf == nullptr) return nullptr;
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return buf;
}

int write_out(char** out, const std::string& text) {
  if (out == nullptr) {
    set_error("output pointer is NULL");
    return CW_BAD_INPUT;
  }
  *out = dup_string(text);
  if (*out == nullptr) {
    set_error("out of memory");
    return CW_INTERNAL;
  }
  return CW_OK;
}

// Runs a callable, mapping exceptions onto status codes.
template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return CW_BAD_INPUT;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return CW_BAD_INPUT;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return CW_BAD_INPUT;
  } catch (const std::length_error& e) {
    set_error(e.what());
    return CW_BAD_INPUT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return CW_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return CW_INTERNAL;
  }
}

Flavor parse_flavor(const std::string& text) {
  if (text.rfind("vac", 0) == 0) return Flavor::vacillating;
  if (text.rfind("hes", 0) == 0) return Flavor::hesitating;
  throw std::invalid_argument("unknown flavor: " + text);
}

EndSetKind parse_endset(const std::string& text) {
  if (text == "A1" || text == "a1") return EndSetKind::A1;
  if (text == "A2" || text == "a2") return EndSetKind::A2;
  if (text == "A2p" || text == "a2p") return EndSetKind::A2p;
  if (text == "A2pp" || text == "a2pp") return EndSetKind::A2pp;
  if (text == "A3" || text == "a3") return EndSetKind::A3;
  if (text == "A4" || text == "a4") return EndSetKind::A4;
  throw std::invalid_argument("unknown endpoint set: " + text);
}

Parity parse_parity(const std::string& text) {
  if (text == "all") return Parity::all;
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw std::invalid_argument("unknown parity: " + text);
}

std::string require(const char* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is NULL");
  return std::string(p);
}

std::string join_lines(const IntSeq& seq) {
  std::ostringstream os;
  for (const Int& v : seq) os << v.get_str() << "\n";
  return os.str();
}

PartitionFilter make_filter(int k, int enhanced, int bisymmetric) {
  PartitionFilter f;
  if (k > 0) f.noncross_k = k;
  f.enhanced = enhanced != 0;
  f.bisymmetric = bisymmetric != 0;
  return f;
}

bool keep_partition(const SetPartition& p, const PartitionFilter& f) {
  if (f.bisymmetric && !is_bisymmetric(p)) return false;
  if (f.noncross_k) {
    const ArcDiagram d = arcs_of(p, f.enhanced);
    if (has_k_crossing(d, *f.noncross_k)) return false;
  }
  return true;
}

std::string block_notation(const SetPartition& p) {
  std::ostringstream os;
  for (const std::vector<int>& block : p.blocks) {
    os << "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i > 0) os << ",";
      os << block[i];
    }
    os << "}";
  }
  return os.str();
}

IntSeq parse_sequence_text(const std::string& text) {
  IntSeq seq;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    seq.push_back(parse_int(line.substr(a, b - a + 1)));
  }
  return seq;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const CheckResult& r : results) {
    if (r.pass) {
      os << "PASS " << r.id << "\n";
    } else {
      os << "FAIL " << r.id << ": " << r.detail << "\n";
    }
  }
  return os.str();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// The row's sequence extended to `terms` entries: catalog recurrence when
// the row is anchored there, otherwise a recurrence guessed from DP data.
IntSeq extended_row(const std::string& row, long terms) {
  const HolonomicCatalog cat = builtin_catalog();
  for (const CatalogRecurrence& entry : cat.recurrences) {
    if (entry.anchor == row) return anchored_sequence(cat, row, terms);
  }
  IntSeq seq = named_row(row, 40);
  GuessOptions opt;
  opt.max_order = 4;
  opt.max_degree = 4;
  opt.min_order = 1;
  const std::optional<PRecurrence> rec = guess_rec(seq, opt);
  if (!rec) {
    throw std::domain_error("no recurrence found to extend row " + row);
  }
  rec->extend(seq, terms);
  return seq;
}

}  // namespace

extern "C" {

struct cw_engine {
  CtEngine impl;
};

const char* cw_version(void) { return "crosswalks 1.0.0"; }

const char* cw_last_error(void) { return g_last_error.c_str(); }

void cw_string_free(char* s) { std::free(s); }

int cw_row(const char* name, int terms, int ceiling, char** out) {
  return guarded([&] {
    const std::string row = require(name, "row name");
    if (terms < 1) throw std::invalid_argument("terms must be positive");
    const IntSeq seq =
        named_row(row, terms, ceiling > 0 ? ceiling : kWalkCeiling);
    return write_out(out, join_lines(seq));
  });
}

int cw_table_rows(const char* table, char** out) {
  return guarded([&] {
    const std::vector<std::string> names =
        table_row_names(require(table, "table name"));
    std::ostringstream os;
    for (const std::string& n : names) os << n << "\n";
    return write_out(out, os.str());
  });
}

int cw_walk_counts(const char* flavor, const char* endset, const char* parity,
                   int max_length, int ceiling, char** out) {
  return guarded([&] {
    if (max_length < 0) throw std::invalid_argument("max_length must be >= 0");
    const Flavor f = parse_flavor(require(flavor, "flavor"));
    const EndSet a = EndSet::single(parse_endset(require(endset, "endset")));
    const Parity p = parse_parity(require(parity, "parity"));
    const IntSeq seq = endset_sequence(f, a, max_length, p,
                                       ceiling > 0 ? ceiling : kWalkCeiling);
    return write_out(out, join_lines(seq));
  });
}

int cw_partition_count(int n, int k, int enhanced, int bisymmetric, int guard,
                       char** out) {
  return guarded([&] {
    const Int c = count_partitions(n, make_filter(k, enhanced, bisymmetric),
                                   guard > 0 ? guard : kPartitionGuard);
    return write_out(out, c.get_str());
  });
}

int cw_partition_list(int n, int k, int enhanced, int bisymmetric, int guard,
                      char** out) {
  return guarded([&] {
    const PartitionFilter f = make_filter(k, enhanced, bisymmetric);
    PartitionEnumerator gen(n, guard > 0 ? guard : kPartitionGuard);
    std::ostringstream os;
    SetPartition p;
    while (gen.next(p)) {
      if (keep_partition(p, f)) os << block_notation(p) << "\n";
    }
    return write_out(out, os.str());
  });
}

cw_engine* cw_engine_new(const char* flavor, int order, int window_extra) {
  cw_engine* result = nullptr;
  guarded([&] {
    const Flavor f = parse_flavor(require(flavor, "flavor"));
    if (order < 1) throw std::invalid_argument("order must be positive");
    if (window_extra < 0) {
      throw std::invalid_argument("window_extra must be >= 0");
    }
    result = new cw_engine{CtEngine(f, order, window_extra)};
    return CW_OK;
  });
  return result;
}

void cw_engine_free(cw_engine* e) { delete e; }

int cw_engine_counts(const cw_engine* e, const char* combo, char** out) {
  return guarded([&] {
    if (e == nullptr) throw std::invalid_argument("engine is NULL");
    const EvalResult r = e->impl.eval(parse_a_combo(require(combo, "combo")));
    return write_out(out, join_lines(r.counts));
  });
}

int cw_engine_triples(const cw_engine* e, const char* combo, char** out) {
  return guarded([&] {
    if (e == nullptr) throw std::invalid_argument("engine is NULL");
    const EvalResult r = e->impl.eval(parse_a_combo(require(combo, "combo")));
    return write_out(out, r.series.to_triples_text());
  });
}

int cw_verify(const char* suite, int series_order, char** out_report) {
  return guarded([&] {
    const std::string name = require(suite, "suite name");
    const int order = series_order > 0 ? series_order : 24;
    std::vector<CheckResult> results;
    if (name == "identities" || name == "all") {
      results = verify_identities(order);
    }
    if (name == "recurrences" || name == "all") {
      auto more = verify_recurrences();
      results.insert(results.end(), more.begin(), more.end());
    }
    if (name == "odes" || name == "all") {
      auto more = verify_odes(order);
      results.insert(results.end(), more.begin(), more.end());
    }
    if (name == "bijections" || name == "all") {
      auto more = verify_bijections();
      results.insert(results.end(), more.begin(), more.end());
    }
    if (results.empty()) {
      throw std::invalid_argument("unknown verify suite: " + name);
    }
    const int status = all_pass(results) ? CW_OK : CW_FAIL;
    const int wr = write_out(out_report, format_report(results));
    if (wr != CW_OK) return wr;
    if (status != CW_OK) set_error("verification failed: " + name);
    return status;
  });
}

int cw_guess(const char* sequence_text, int max_order, int max_degree,
             int holdout, char** out) {
  return guarded([&] {
    const IntSeq seq = parse_sequence_text(require(sequence_text, "sequence"));
    GuessOptions opt;
    if (max_order >= 1) opt.max_order = max_order;
    if (max_degree >= 0) opt.max_degree = max_degree;
    if (holdout >= 0) opt.holdout = holdout;
    const std::optional<PRecurrence> rec = guess_rec(seq, opt);
    if (!rec) {
      set_error("no recurrence within the requested bounds");
      const int wr = write_out(out, "");
      return wr == CW_OK ? CW_FAIL : wr;
    }
    return write_out(out, rec->to_string() + "\n");
  });
}

int cw_asymptotics(const char* row, long terms, char** out) {
  return guarded([&] {
    const std::string name = require(row, "row name");
    const long n = terms > 0 ? terms : 2000;
    const IntSeq seq = extended_row(name, n);
    const double rho_ref = name.rfind("vac", 0) == 0 ? 9.0 : 8.0;
    const AsymptoticFit fit = asymptotic_fit(seq, rho_ref);
    std::ostringstream os;
    os << "rho_ref\t" << format_double(rho_ref) << "\n"
       << "rho_hat\t" << format_double(fit.rho_hat) << "\n"
       << "alpha_hat\t" << format_double(fit.alpha_hat) << "\n"
       << "alpha_int\t" << fit.alpha_int << "\n"
       << "kappa_hat\t" << format_double(fit.kappa_hat) << "\n";
    return write_out(out, os.str());
  });
}

int cw_bijection_demo(char** out) {
  return guarded([&] { return write_out(out, bijection_demo()); });
}

}  // extern "C"
