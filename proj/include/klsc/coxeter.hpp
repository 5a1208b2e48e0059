#ifndef KLSC_COXETER_HPP
#define KLSC_COXETER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "klsc/kls.hpp"

namespace klsc {

/// Generalized Cartan matrix a_ij = <alpha_i^vee, alpha_j>.
///
/// The realization used throughout is the weight lattice in fundamental
/// weight coordinates: alpha_j is column j of the matrix and alpha_i^vee
/// reads off coordinate i.
class CartanDatum {
 public:
  /// "A3", "B2", "C4", "D4", "E6".."E8", "F4", "G2".
  static CartanDatum named(const std::string& type);
  static CartanDatum from_matrix(std::vector<std::vector<int>> a);

  int rank() const { return static_cast<int>(a_.size()); }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& matrix() const { return a_; }
  const std::string& name() const { return name_; }
  /// Type letter for named types, 0 otherwise.
  char family() const { return family_; }
  /// Simple root alpha_j in weight coordinates.
  std::vector<long long> simple_root(int j) const;

 private:
  std::string name_;
  char family_ = 0;
  std::vector<std::vector<int>> a_;
};

using Weight = std::vector<long long>;

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

/// Group element, identified by w(rho).
struct CoxElement {
  std::vector<int> word;  // lexicographically minimal reduced word, generators 0-based
  Weight weight;          // w(rho) in fundamental weight coordinates

  int length() const { return static_cast<int>(word.size()); }
  friend bool operator==(const CoxElement& a, const CoxElement& b) { return a.weight == b.weight; }
};

/// Positive root with its coroot, both in simple (co)root coordinates.
struct Root {
  std::vector<long long> coeffs;
  std::vector<long long> coroot;
  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
};

class CoxeterGroup {
 public:
  explicit CoxeterGroup(CartanDatum d);

  const CartanDatum& datum() const { return d_; }
  int rank() const { return d_.rank(); }

  CoxElement identity() const;
  /// Product s_{i_1} ... s_{i_k}; the word need not be reduced.
  CoxElement from_word(const std::vector<int>& word) const;
  CoxElement from_weight(Weight lambda) const;
  CoxElement left_multiply(int s, const CoxElement& x) const;
  CoxElement multiply(const CoxElement& x, const CoxElement& y) const;
  CoxElement inverse(const CoxElement& x) const;
  bool is_left_descent(int s, const CoxElement& x) const { return x.weight[static_cast<std::size_t>(s)] < 0; }

  /// Bruhat order.
  bool leq(const CoxElement& x, const CoxElement& y) const;

  /// Roots beta > 0 with t_beta x < x, one per letter of the reduced word:
  /// beta_j = s_{i_1} ... s_{i_{j-1}} alpha_{i_j}.
  std::vector<Root> left_inversions(const CoxElement& x) const;
  /// Reflection t_beta as a group element.
  CoxElement reflection(const Root& beta) const;
  /// t_beta x computed on weights.
  CoxElement reflect(const Root& beta, const CoxElement& x) const;
  /// Root in weight coordinates: sum_j c_j alpha_j.
  std::vector<long long> root_weight(const Root& beta) const;

  /// Type A_{n-1}: one-line notation of the permutation s_{i_1} ... s_{i_k}
  /// of {1..n}, with s_i swapping i and i+1.
  std::vector<int> to_permutation(const CoxElement& x) const;
  CoxElement from_permutation(const std::vector<int>& p) const;
  /// Type A_{n-1}: root as a vector e_i - e_j in Z^n.
  std::vector<long long> epsilon_coordinates(const Root& beta) const;

  /// "e" or "s1s2s1" (1-based generators).
  static std::string word_name(const std::vector<int>& word);

 private:
  void apply_simple(int s, Weight& lambda) const;
  CartanDatum d_;
  Weight rho_;
};

/// Bruhat interval [v, w], elements sorted by length then reduced word.
struct BruhatInterval {
  std::shared_ptr<const CoxeterGroup> W;
  std::vector<CoxElement> elements;
  std::shared_ptr<const RankedPoset> poset;  // rank = length
  int bottom = 0;
  int top = 0;

  int index_of(const CoxElement& x) const;
  int size() const { return static_cast<int>(elements.size()); }

 private:
  friend BruhatInterval enumerate_interval(std::shared_ptr<const CoxeterGroup>, const CoxElement&, const CoxElement&,
                                           int);
  std::unordered_map<Weight, int, WeightHash> index_;
};

inline constexpr int kDefaultIntervalBound = 2000;

/// All x with v <= x <= w. Throws InputError if v is not below w or the
/// interval has more than `max_size` elements.
BruhatInterval enumerate_interval(std::shared_ptr<const CoxeterGroup> W, const CoxElement& v, const CoxElement& w,
                                  int max_size = kDefaultIntervalBound);

struct MomentEdge {
  int lo = 0;  // shorter endpoint
  int hi = 0;  // hi = t lo
  Root root;
  std::vector<long long> label;  // root in weight coordinates
  CoxElement reflection;
};

/// Bruhat graph on an interval.
struct MomentGraph {
  BruhatInterval interval;
  std::vector<MomentEdge> edges;
  std::vector<std::vector<int>> incident;  // [vertex]: edge indices

  int size() const { return interval.size(); }
  /// Edges joining x to longer vertices.
  std::vector<int> up_edges(int x) const;
};

MomentGraph bruhat_graph(const BruhatInterval& I);

struct OpenSubgraph {
  std::vector<int> vertices;
  std::vector<int> edges;  // at least one endpoint among `vertices`
};

/// Vertices u > v and every edge touching them.
OpenSubgraph gamma_gt(const MomentGraph& G, int v);

struct GkmResult {
  bool ok = true;
  int vertex = -1;
  int edge_a = -1;
  int edge_b = -1;  // equal to edge_a when a single label vanishes mod p
};

/// Incident labels at every vertex are pairwise independent over F_p (and
/// nonzero).
GkmResult p_gkm_check(const MomentGraph& G, std::uint32_t p);

/// R-polynomials on the interval.
Kernel coxeter_R_kernel(const BruhatInterval& I);

}  // namespace klsc

#endif  // KLSC_COXETER_HPP
