#include "sharpmap/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "sharpmap/poly_core.hpp"

namespace sharpmap::search {

Support make_support(std::uint32_t degree, std::vector<ExponentVector> monomials) {
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  return Support{degree, std::move(monomials)};
}

bool satisfies_invariants(const Support& s) {
  if (s.monomials.empty()) return false;
  bool pure_x = false;
  bool pure_y = false;
  std::uint64_t top = 0;
  for (const auto& m : s.monomials) {
    if (m.size() != 2) return false;
    top = std::max(top, m.total_degree());
    pure_x = pure_x || m.is_pure_in(0);
    pure_y = pure_y || m.is_pure_in(1);
  }
  return pure_x && pure_y && top == s.degree &&
         std::is_sorted(s.monomials.begin(), s.monomials.end()) &&
         std::adjacent_find(s.monomials.begin(), s.monomials.end()) == s.monomials.end();
}

Support swapped(const Support& s) {
  std::vector<ExponentVector> out;
  out.reserve(s.monomials.size());
  for (const auto& m : s.monomials) out.push_back(m.reversed());
  return make_support(s.degree, std::move(out));
}

Support canonical(const Support& s) {
  Support sw = swapped(s);
  return sw < s ? sw : s;
}

std::vector<ExponentVector> monomials_up_to(std::uint32_t d) {
  std::vector<ExponentVector> out;
  for (std::uint32_t a = 0; a <= d; ++a) {
    for (std::uint32_t b = 0; a + b <= d; ++b) out.push_back(ExponentVector{a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

linear::RationalMatrix line_system(const std::vector<ExponentVector>& monomials, std::uint32_t d,
                                   std::vector<Rational>& rhs) {
  linear::RationalMatrix a(d + 1, monomials.size());
  Integer binom;
  for (std::size_t col = 0; col < monomials.size(); ++col) {
    const std::uint32_t pa = monomials[col][0];
    const std::uint32_t pb = monomials[col][1];
    if (pa + pb > d) throw Error("monomial exceeds the system degree");
    // x^a (1-x)^b = sum_i (-1)^i C(b,i) x^{a+i}
    for (std::uint32_t i = 0; i <= pb; ++i) {
      mpz_bin_uiui(binom.get_mpz_t(), pb, i);
      a(pa + i, col) = (i % 2 == 0) ? Rational(binom) : Rational(-binom);
    }
  }
  rhs.assign(d + 1, Rational(0));
  rhs[0] = 1;
  return a;
}

std::string to_string(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::infeasible:
      return "infeasible";
    case FeasibilityStatus::point:
      return "point";
    case FeasibilityStatus::polytope:
      return "polytope";
  }
  return "unknown";
}

std::string to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::unique:
      return "Unique";
    case Uniqueness::unique_up_to_equivalence:
      return "UniqueUpToEquivalence";
    case Uniqueness::fails:
      return "Fails";
    case Uniqueness::unknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

// Integer columns of the line system for every monomial of degree <= d,
// plus the per-monomial flags the pruning rules need.
struct MonomialTable {
  std::uint32_t degree;
  std::vector<ExponentVector> monomials;
  std::vector<std::vector<std::int64_t>> columns;
  std::vector<std::uint8_t> pure_x, pure_y, top;
  std::vector<std::uint32_t> swap_index;
  // binomials C(d, k) fit in 64 bits
  bool integer_ok;

  explicit MonomialTable(std::uint32_t d)
      : degree(d), monomials(monomials_up_to(d)), integer_ok(d <= 60) {
    const std::size_t m = monomials.size();
    columns.assign(m, std::vector<std::int64_t>(d + 1, 0));
    pure_x.resize(m);
    pure_y.resize(m);
    top.resize(m);
    swap_index.resize(m);
    Integer binom;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& e = monomials[i];
      for (std::uint32_t k = 0; k <= e[1]; ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), e[1], k);
        const auto v = integer_ok ? static_cast<std::int64_t>(binom.get_si()) : 0;
        columns[i][e[0] + k] = (k % 2 == 0) ? v : -v;
      }
      pure_x[i] = e.is_pure_in(0);
      pure_y[i] = e.is_pure_in(1);
      top[i] = e.total_degree() == d;
      auto it = std::lower_bound(monomials.begin(), monomials.end(), e.reversed());
      swap_index[i] = static_cast<std::uint32_t>(it - monomials.begin());
    }
  }
};

enum class Consistency { consistent, inconsistent, unknown };

// Fraction-free elimination of [A | e_0] in 64-bit integers. Any overflow or
// inexact division reports `unknown` and the caller falls back to rationals.
Consistency integer_consistency(const MonomialTable& table, const std::vector<std::uint32_t>& idx,
                                std::vector<std::int64_t>& work) {
  if (!table.integer_ok) return Consistency::unknown;
  const std::size_t rows = table.degree + 1;
  const std::size_t cols = idx.size() + 1;
  work.assign(rows * cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j + 1 < cols; ++j) work[i * cols + j] = table.columns[idx[j]][i];
  }
  work[cols - 1] = 1;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return work[i * cols + j]; };

  __int128 prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && at(p, col) == 0) ++p;
    if (p == rows) continue;
    if (col == cols - 1) return Consistency::inconsistent;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    }
    const __int128 piv = at(r, col);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const __int128 lead = at(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        __int128 v = piv * at(i, j) - lead * at(r, j);
        if (v % prev != 0) return Consistency::unknown;
        v /= prev;
        if (v > INT64_MAX || v < INT64_MIN) return Consistency::unknown;
        at(i, j) = static_cast<std::int64_t>(v);
      }
      at(i, col) = 0;
    }
    prev = piv;
    ++r;
  }
  return Consistency::consistent;
}

FeasibilityResult exact_feasibility(const std::vector<ExponentVector>& monomials, std::uint32_t d) {
  std::vector<Rational> rhs;
  linear::RationalMatrix a = line_system(monomials, d, rhs);
  linear::PositiveSolution sol = linear::max_min_positive(a, rhs);
  FeasibilityResult out;
  out.freedom = sol.freedom;
  if (!sol.feasible) return out;
  out.status = sol.freedom == 0 ? FeasibilityStatus::point : FeasibilityStatus::polytope;
  out.coefficients = std::move(sol.x);
  return out;
}

struct ShardOutput {
  std::vector<SharpWitness> witnesses;
  SearchStats stats;
  bool exhaustive = true;
};

void run_shard(const MonomialTable& table, std::size_t terms, std::size_t shard,
               std::size_t shards, std::chrono::steady_clock::time_point deadline,
               bool has_deadline, ShardOutput& out) {
  const std::size_t m = table.monomials.size();
  if (terms > m) return;
  std::vector<std::uint32_t> idx(terms);
  std::vector<std::uint32_t> sw(terms);
  std::vector<std::int64_t> work;
  std::uint64_t ticks = 0;

  for (std::size_t first = shard; first + terms <= m; first += shards) {
    // lexicographic combinations of the remaining terms-1 indices after `first`
    idx[0] = static_cast<std::uint32_t>(first);
    for (std::size_t i = 1; i < terms; ++i) idx[i] = static_cast<std::uint32_t>(first + i);
    for (;;) {
      if (has_deadline && (++ticks & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline) {
        out.exhaustive = false;
        return;
      }
      bool keep = table.top[idx[terms - 1]] != 0;
      if (keep) {
        bool px = false, py = false;
        for (auto i : idx) {
          px = px || table.pure_x[i];
          py = py || table.pure_y[i];
        }
        keep = px && py;
      }
      if (keep) {
        for (std::size_t i = 0; i < terms; ++i) sw[i] = table.swap_index[idx[i]];
        std::sort(sw.begin(), sw.end());
        // graded lex order of monomials matches index order, so comparing
        // index lists compares supports
        keep = !std::lexicographical_compare(sw.begin(), sw.end(), idx.begin(), idx.end());
      }
      if (!keep) {
        ++out.stats.pruned;
      } else {
        ++out.stats.examined;
        Consistency c = integer_consistency(table, idx, work);
        if (c != Consistency::inconsistent) {
          std::vector<ExponentVector> mons;
          mons.reserve(terms);
          for (auto i : idx) mons.push_back(table.monomials[i]);
          FeasibilityResult fr = exact_feasibility(mons, table.degree);
          if (fr.status != FeasibilityStatus::infeasible) {
            ++out.stats.feasible;
            Support s{table.degree, std::move(mons)};
            Polynomial p = realize(s, fr.coefficients);
            out.witnesses.push_back(SharpWitness{std::move(s), std::move(p), fr.freedom});
          }
        }
      }
      // advance positions 1..terms-1
      std::size_t pos = terms;
      while (pos > 1) {
        --pos;
        if (idx[pos] < m - (terms - pos)) break;
        if (pos == 1) {
          pos = 0;
          break;
        }
      }
      if (pos == 0) break;
      ++idx[pos];
      for (std::size_t i = pos + 1; i < terms; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

}  // namespace

FeasibilityResult feasible(const Support& support) {
  if (!satisfies_invariants(support)) throw Error("support violates its invariants");
  return exact_feasibility(support.monomials, support.degree);
}

Polynomial realize(const Support& support, const std::vector<Rational>& coefficients) {
  if (coefficients.size() != support.monomials.size()) {
    throw Error("coefficient vector does not match the support");
  }
  Polynomial p(2);
  for (std::size_t i = 0; i < coefficients.size(); ++i) p.add_term(support.monomials[i], coefficients[i]);
  return p;
}

EnumerationResult enumerate_sharp(std::uint32_t d, std::size_t terms, const Budget& budget) {
  if (terms < 2) throw Error("a sharp support needs at least two terms");
  const auto start = std::chrono::steady_clock::now();
  const bool has_deadline = std::isfinite(budget.seconds);
  const auto deadline =
      has_deadline ? start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                 std::chrono::duration<double>(budget.seconds))
                   : start;
  const MonomialTable table(d);
  const std::size_t shards = std::max<std::size_t>(1, budget.shards);
  std::vector<ShardOutput> outputs(shards);
  if (shards == 1) {
    run_shard(table, terms, 0, 1, deadline, has_deadline, outputs[0]);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t s = 0; s < shards; ++s) {
      workers.emplace_back(run_shard, std::cref(table), terms, s, shards, deadline, has_deadline,
                           std::ref(outputs[s]));
    }
    for (auto& w : workers) w.join();
  }

  EnumerationResult result;
  for (auto& o : outputs) {
    result.exhaustive = result.exhaustive && o.exhaustive;
    result.stats.examined += o.stats.examined;
    result.stats.pruned += o.stats.pruned;
    result.stats.feasible += o.stats.feasible;
    for (auto& w : o.witnesses) result.witnesses.push_back(std::move(w));
  }
  std::sort(result.witnesses.begin(), result.witnesses.end(),
            [](const SharpWitness& a, const SharpWitness& b) { return a.support < b.support; });
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

SharpCertificate certify(std::uint32_t d, std::size_t terms, const EnumerationResult& e) {
  SharpCertificate cert;
  cert.degree = d;
  cert.min_terms = terms;
  cert.exhaustive = e.exhaustive;
  cert.stats = e.stats;
  for (const auto& w : e.witnesses) {
    cert.representatives.push_back(w.poly);
    cert.has_polytope = cert.has_polytope || w.freedom > 0;
    cert.distinct.push_back(w.poly);
    Polynomial sw = w.poly.swapped();
    if (!(sw == w.poly)) cert.distinct.push_back(std::move(sw));
  }
  return cert;
}

}  // namespace

MinimalTermsResult minimal_terms(std::uint32_t d, const Budget& budget, bool confirm_below) {
  if (d == 0) throw Error("minimal_terms needs d >= 1");
  MinimalTermsResult out;
  out.exhaustive = true;
  const std::size_t bound = (d + 4) / 2;  // ceil((d+3)/2)
  const std::size_t start = confirm_below ? 2 : bound;
  const auto begin = std::chrono::steady_clock::now();
  for (std::size_t n = start;; ++n) {
    Budget remaining = budget;
    if (std::isfinite(budget.seconds)) {
      remaining.seconds =
          budget.seconds -
          std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
      if (remaining.seconds <= 0) {
        out.exhaustive = false;
        return out;
      }
    }
    EnumerationResult e = enumerate_sharp(d, n, remaining);
    if (!e.witnesses.empty()) {
      out.min_terms = n;
      out.certificate = certify(d, n, e);
      out.exhaustive = out.exhaustive && e.exhaustive;
      return out;
    }
    if (!e.exhaustive) {
      out.exhaustive = false;
      return out;
    }
    out.ruled_out.push_back(n);
    // an element with (d+3)/2 terms always exists, so this never runs away
    if (n > bound + 1) throw std::logic_error("no sharp polynomial found above the known bound");
  }
}

UniquenessReport uniqueness_status(std::uint32_t d, const Budget& budget) {
  UniquenessReport report;
  report.minimal = minimal_terms(d, budget);
  if (!report.minimal.min_terms) return report;
  const SharpCertificate& cert = report.minimal.certificate;
  std::size_t classes = cert.representatives.size();
  if (cert.has_polytope || classes >= 2 || cert.distinct.size() >= 3) {
    report.status = Uniqueness::fails;
  } else if (!cert.exhaustive) {
    report.status = Uniqueness::unknown;
  } else if (cert.distinct.size() == 1) {
    report.status = Uniqueness::unique;
  } else {
    report.status = Uniqueness::unique_up_to_equivalence;
  }
  return report;
}

}  // namespace sharpmap::search
