#include "crosswalks/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "crosswalks/bijections.hpp"
#include "crosswalks/genfunc.hpp"
#include "crosswalks/holonomic.hpp"
#include "crosswalks/oracles.hpp"
#include "crosswalks/partitions.hpp"
#include "crosswalks/walks.hpp"

namespace crosswalks {

namespace {

CheckResult ok(std::string id) { return CheckResult{std::move(id), true, ""}; }

CheckResult bad(std::string id, std::string detail) {
  return CheckResult{std::move(id), false, std::move(detail)};
}

std::string seq_mismatch(const std::string& what, size_t index, const Int& got,
                         const Int& want) {
  std::ostringstream os;
  os << what << " mismatch at index " << index << ": got " << got.get_str()
     << ", want " << want.get_str();
  return os.str();
}

// First index where the two sequences differ over [from, from+count), or -1.
long first_diff(const IntSeq& a, const IntSeq& b, size_t from, size_t count) {
  for (size_t i = from; i < from + count; ++i) {
    if (i >= a.size() || i >= b.size() || a[i] != b[i]) {
      return static_cast<long>(i);
    }
  }
  return -1;
}

EndSetKind endset_kind(const std::string& name) {
  if (name == "A1") return EndSetKind::A1;
  if (name == "A2") return EndSetKind::A2;
  if (name == "A2p") return EndSetKind::A2p;
  if (name == "A2pp") return EndSetKind::A2pp;
  if (name == "A3") return EndSetKind::A3;
  return EndSetKind::A4;
}

// DP row for one endpoint set, indexed by step pairs: entry n is the count
// at walk length 2n.
IntSeq paired_dp_row(Flavor f, EndSetKind kind, int terms) {
  return endset_sequence(f, EndSet::single(kind), 2 * (terms - 1),
                         Parity::even);
}

CheckResult compare_counts(const std::string& id, const IntSeq& got,
                           const IntSeq& want, size_t terms) {
  if (got.size() < terms || want.size() < terms) {
    return bad(id, "fewer terms than requested");
  }
  const long d = first_diff(got, want, 0, terms);
  if (d >= 0) {
    return bad(id, seq_mismatch("coefficient", d, got[d], want[d]));
  }
  return ok(id);
}

}  // namespace

std::vector<CheckResult> verify_identities(int series_order,
                                           int stability_margin) {
  std::vector<CheckResult> out;
  for (const std::string& id : identity_catalog()) {
    const IdentityResult base = verify_identity(id, series_order, 0);
    if (!base.pass) {
      out.push_back(bad(id, base.detail));
      continue;
    }
    const IdentityResult wide =
        verify_identity(id, series_order, stability_margin);
    if (!wide.pass) {
      out.push_back(bad(id, "widened window: " + wide.detail));
      continue;
    }
    out.push_back(ok(id));
  }
  return out;
}

std::vector<CheckResult> verify_recurrences(int dp_terms) {
  std::vector<CheckResult> out;
  const HolonomicCatalog cat = builtin_catalog();
  for (const CatalogRecurrence& entry : cat.recurrences) {
    const IntSeq row = named_row(entry.anchor, dp_terms);
    const long mism = first_diff(entry.initials, row, 0, entry.initials.size());
    if (mism >= 0) {
      out.push_back(bad(entry.id, seq_mismatch("initial term", mism,
                                               entry.initials[mism], row[mism])));
      continue;
    }
    const long ff = entry.rec.first_failure(row);
    if (ff >= 0) {
      std::ostringstream os;
      os << "relation fails at shift " << ff << " of "
         << entry.rec.shifts(row);
      out.push_back(bad(entry.id, os.str()));
      continue;
    }
    IntSeq grown = entry.initials;
    entry.rec.extend(grown, dp_terms);
    const long gd = first_diff(grown, row, 0, row.size());
    if (gd >= 0) {
      out.push_back(
          bad(entry.id, seq_mismatch("extended term", gd, grown[gd], row[gd])));
      continue;
    }
    out.push_back(ok(entry.id));
  }
  return out;
}

std::vector<CheckResult> verify_odes(int series_order, long extension) {
  std::vector<CheckResult> out;
  const HolonomicCatalog cat = builtin_catalog();
  for (const CatalogODE& entry : cat.odes) {
    const IntSeq row = named_row(entry.anchor, series_order + entry.ode.order());
    const long ff = entry.ode.first_failure(row);
    if (ff >= 0) {
      std::ostringstream os;
      os << "nonzero residual at order " << ff;
      out.push_back(bad(entry.id, os.str()));
    } else {
      out.push_back(ok(entry.id));
    }
  }
  // Consistency far past the DP window: the recurrence sharing the anchor
  // extends the row, and the differential equation must keep annihilating
  // the extended data.
  for (const CatalogODE& entry : cat.odes) {
    const std::string id = entry.id + "-consistency";
    const CatalogRecurrence* rec = cat.paired_rec(entry);
    if (rec == nullptr) {
      out.push_back(bad(id, "no recurrence shares the anchor"));
      continue;
    }
    const IntSeq seq = anchored_sequence(cat, entry.anchor, extension);
    const long rf = rec->rec.first_failure(seq);
    if (rf >= 0) {
      std::ostringstream os;
      os << "recurrence fails at shift " << rf << " on extended data";
      out.push_back(bad(id, os.str()));
      continue;
    }
    const long of = entry.ode.first_failure(seq);
    if (of >= 0) {
      std::ostringstream os;
      os << "nonzero residual at order " << of << " on extended data";
      out.push_back(bad(id, os.str()));
      continue;
    }
    out.push_back(ok(id));
  }
  return out;
}

namespace {

// Shared bijectivity harness for one palindromic-tableau family and its
// step encoding.
CheckResult check_encoding(const std::string& id, int word_max,
                           bool oscillating) {
  for (int n = 0; n <= word_max; ++n) {
    const std::vector<Tableau> tabs =
        oscillating ? palindromic_oscillating(n) : palindromic_vacillating(n);
    const Int expect = central_binomial(static_cast<unsigned>(n));
    if (Int(static_cast<long>(tabs.size())) != expect) {
      return bad(id, seq_mismatch("tableau count", n,
                                  Int(static_cast<long>(tabs.size())), expect));
    }
    std::set<Word> images;
    for (const Tableau& t : tabs) {
      const Word w = oscillating ? theta(t) : eta(t);
      if (!in_word_set(w)) {
        return bad(id, "image word violates the prefix condition at n=" +
                           std::to_string(n));
      }
      const Tableau back = oscillating ? theta_inv(w) : eta_inv(w);
      if (back != t) {
        return bad(id, "decode(encode) is not the identity at n=" +
                           std::to_string(n));
      }
      images.insert(w);
    }
    if (images.size() != tabs.size()) {
      return bad(id, "encoding is not injective at n=" + std::to_string(n));
    }
    for (const Word& w : word_set(n)) {
      if (images.find(w) == images.end()) {
        return bad(id, "encoding misses a word at n=" + std::to_string(n));
      }
      const Tableau t = oscillating ? theta_inv(w) : eta_inv(w);
      const Word again = oscillating ? theta(t) : eta(t);
      if (again != w) {
        return bad(id, "encode(decode) is not the identity at n=" +
                           std::to_string(n));
      }
    }
  }
  return ok(id);
}

}  // namespace

std::vector<CheckResult> verify_bijections(int word_max, int partition_max,
                                           int balanced_max) {
  std::vector<CheckResult> out;

  {
    CheckResult r = ok("word-count");
    for (int n = 0; n <= word_max; ++n) {
      const Int count = Int(static_cast<long>(word_set(n).size()));
      const Int expect = central_binomial(static_cast<unsigned>(n));
      if (count != expect) {
        r = bad("word-count", seq_mismatch("word count", n, count, expect));
        break;
      }
    }
    out.push_back(r);
  }

  {
    CheckResult r = ok("word-parity-characterization");
    for (int n = 0; n <= word_max && r.pass; ++n) {
      for (const Word& w : all_words(n)) {
        if (in_word_set(w) != parity_prefix_condition(w)) {
          r = bad("word-parity-characterization",
                  "characterizations disagree at n=" + std::to_string(n));
          break;
        }
      }
    }
    out.push_back(r);
  }

  out.push_back(check_encoding("first-half-encoding", word_max, true));
  out.push_back(check_encoding("four-case-encoding", word_max, false));

  {
    CheckResult r = ok("mirror-symmetric-partitions");
    PartitionFilter filter;
    filter.noncross_k = 2;
    filter.bisymmetric = true;
    for (int n = 1; n <= partition_max; ++n) {
      const Int count = count_partitions(n, filter);
      const Int expect = central_binomial(static_cast<unsigned>(n));
      if (count != expect) {
        r = bad("mirror-symmetric-partitions",
                seq_mismatch("partition count", n, count, expect));
        break;
      }
    }
    out.push_back(r);
  }

  {
    const std::string expect =
        "oscillating palindrome:  0 1 2 1 2 1 0 1 0 1 2 1 2 1 0\n"
        "step word:               1101001\n"
        "vacillating palindrome:  0 0 1 0 1 0 0 0 0 0 1 0 1 0 0\n"
        "round trip:              consistent\n";
    if (bijection_demo() == expect) {
      out.push_back(ok("worked-example"));
    } else {
      out.push_back(bad("worked-example", "demo text changed"));
    }
  }

  {
    CheckResult r = ok("balanced-words");
    PartitionFilter noncrossing;
    noncrossing.noncross_k = 2;
    for (int m = 1; m <= balanced_max && r.pass; ++m) {
      Int balanced = 0;
      for (const Word& w : word_set(2 * m)) {
        if (is_dyck(w)) balanced += 1;
      }
      const Int expect = catalan(static_cast<unsigned>(m));
      if (balanced != expect) {
        r = bad("balanced-words",
                seq_mismatch("balanced word count", m, balanced, expect));
        break;
      }
      const Int matchings = count_noncrossing_matchings(m);
      if (matchings != expect) {
        r = bad("balanced-words",
                seq_mismatch("noncrossing matching count", m, matchings, expect));
        break;
      }
      const Int parts = count_partitions(m, noncrossing);
      if (parts != expect) {
        r = bad("balanced-words",
                seq_mismatch("noncrossing partition count", m, parts, expect));
        break;
      }
    }
    out.push_back(r);
  }

  return out;
}

std::vector<CheckResult> verify_cross_sequences(int deep_terms,
                                                int avoider_max,
                                                int baxter_max) {
  std::vector<CheckResult> out;

  const IntSeq a3 = named_row("vac-a3", deep_terms + 1);
  const IntSeq a4 = named_row("vac-a4", deep_terms);
  {
    CheckResult r = ok("axis-doubles-diagonal");
    for (int n = 1; n < deep_terms; ++n) {
      if (a3[n] != 2 * a4[n]) {
        r = bad("axis-doubles-diagonal",
                seq_mismatch("doubled diagonal", n, a3[n], 2 * a4[n]));
        break;
      }
    }
    out.push_back(r);
  }

  {
    // Odd-length axis counts: entry n is the count at walk length 2n+1.
    const IntSeq a3_odd = endset_sequence(
        Flavor::vacillating, EndSet::single(EndSetKind::A3),
        2 * deep_terms - 1, Parity::odd);
    CheckResult r = ok("axis-odd-halves-next");
    for (int n = 0; n < deep_terms; ++n) {
      if (2 * a3_odd[n] != a3[n + 1]) {
        r = bad("axis-odd-halves-next",
                seq_mismatch("doubled odd term", n, 2 * a3_odd[n], a3[n + 1]));
        break;
      }
    }
    out.push_back(r);
  }

  {
    const IntSeq row = named_row("vac-a4-odd", avoider_max + 1);
    CheckResult r = ok("odd-diagonal-avoiders");
    for (int n = 0; n <= avoider_max; ++n) {
      const Int expect = count_1234_avoiders(static_cast<unsigned>(n) + 1);
      if (row[n] != expect) {
        r = bad("odd-diagonal-avoiders",
                seq_mismatch("avoider count", n, row[n], expect));
        break;
      }
    }
    out.push_back(r);
  }

  {
    const IntSeq row = named_row("hes-a3", baxter_max + 1);
    CheckResult r = ok("hesitating-axis-baxter");
    for (int n = 0; n <= baxter_max; ++n) {
      const Int expect = baxter(static_cast<unsigned>(n) + 1);
      if (row[n] != expect) {
        r = bad("hesitating-axis-baxter",
                seq_mismatch("shifted Baxter number", n, row[n], expect));
        break;
      }
    }
    out.push_back(r);
  }

  return out;
}

std::vector<CheckResult> verify_series_vs_walks(int series_order,
                                                int match_terms) {
  std::vector<CheckResult> out;
  const size_t terms = static_cast<size_t>(match_terms);

  {
    const CtEngine eng(Flavor::vacillating, series_order);
    for (const std::string name : {"A1", "A2", "A2p", "A2pp", "A3", "A4"}) {
      const EvalResult ev = eng.eval(a_descriptor(name));
      const IntSeq dp =
          paired_dp_row(Flavor::vacillating, endset_kind(name), match_terms);
      out.push_back(
          compare_counts("vac-" + name + "-series", ev.counts, dp, terms));
    }
    const EvalResult odd = eng.eval(parse_a_combo("A1 + 2*A2p + 3*A2pp"));
    out.push_back(compare_counts("vac-odd-series", odd.counts,
                                 named_row("vac-odd", match_terms), terms));
  }

  {
    const CtEngine eng(Flavor::hesitating, series_order);
    for (const std::string name : {"A1", "A2", "A3", "A4"}) {
      const EvalResult ev = eng.eval(a_descriptor(name));
      const IntSeq dp =
          paired_dp_row(Flavor::hesitating, endset_kind(name), match_terms);
      out.push_back(
          compare_counts("hes-" + name + "-series", ev.counts, dp, terms));
    }
    const EvalResult odd = eng.eval(parse_a_combo("2*A2 - A4"));
    out.push_back(compare_counts("hes-odd-series", odd.counts,
                                 named_row("hes-odd", match_terms), terms));
  }

  return out;
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out = verify_identities();
  for (auto&& suite : {verify_recurrences(), verify_odes(),
                       verify_bijections()}) {
    out.insert(out.end(), suite.begin(), suite.end());
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace crosswalks
