#pragma once

#include <iosfwd>
#include <vector>

#include "balt/interval.hpp"
#include "balt/rational.hpp"
#include "balt/report.hpp"

namespace balt::forests {

using num::BigInt;
using num::RatInterval;
using num::Rational;

/// Memoized |F_n| (labeled forests on [n]) built from the recurrence over
/// the size of the component containing vertex 1:
///   |F_n| = sum_{k=1}^{n} C(n-1, k-1) k^(k-2) |F_{n-k}|,  |F_0| = 1.
/// Construction is sequential; once built the table is immutable and safe
/// for concurrent reads.
class CountTable {
 public:
  CountTable();

  void ensure(unsigned n_max);
  unsigned built() const { return static_cast<unsigned>(forests_.size()) - 1; }

  /// |F_n|; extends the table on demand.
  const BigInt& forests(unsigned n);

  /// |T_n| = n^(n-2), with |T_1| = |T_2| = 1.
  static BigInt trees(unsigned n);

  /// Cache file: header "FORESTS v1 n_max=<k>" then one decimal per line,
  /// line i holding |F_i|. Loading revalidates the first 8 entries.
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static CountTable load(std::istream& in);
  static CountTable load_file(const std::string& path);

 private:
  std::vector<BigInt> forests_;      // forests_[n] = |F_n|
  std::vector<BigInt> tree_counts_;  // tree_counts_[k] = k^(k-2), k >= 1
};

/// Pr(F_n connected) = n^(n-2) / |F_n|, defined as 1 at n = 1.
Rational conn_prob_forest(CountTable& table, unsigned n);

/// f(n, j) = C(n, j) |F_j| (n-j)^(n-j-2), the forests on [n] with j vertices
/// outside the largest component. Rejects j >= n/2 where the formula no
/// longer forces a unique largest component.
BigInt frag_count(CountTable& table, unsigned n, unsigned j);

/// Number of forests on [t] with exactly k components.
BigInt forest_count_by_components(unsigned t, unsigned k);

/// Enclosure of sum_{j=0}^{k} |F_j| / (j! e^j).
RatInterval partial_egf_sum(CountTable& table, unsigned k, unsigned precision);

/// Enclosure of sum_{j=1}^{k} j^(j-2) / (j! e^j).
RatInterval partial_tree_egf_sum(unsigned k, unsigned precision);

/// (n)_j / n^j * (1 - j/n)^(-2) with (n)_j the falling factorial.
Rational bracket_value(unsigned n, unsigned j);

/// (1 - j/n)^(n-j) >= e^(-j), decided exactly; requires 1 <= j < n.
bool standard_inequality_holds(unsigned n, unsigned j);

std::vector<report::Row> verify_lemma_2_2(CountTable& table, unsigned n_max);
std::vector<report::Row> verify_lemma_3_1(CountTable& table, unsigned n_max);
std::vector<report::Row> bracket_scan(unsigned j_max, unsigned n_max);
std::vector<report::Row> renyi_table(CountTable& table, unsigned n_max);
std::vector<report::Row> scan_conjectures(CountTable& table, unsigned n_max);
std::vector<report::Row> egf_limit_check(CountTable& table, unsigned k_max, unsigned precision);

}  // namespace balt::forests
