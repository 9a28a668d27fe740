#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rmt/random.hpp"

namespace rmt {

/// Permutation of {0..n-1} as its image list.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& a, const Permutation& b);  ///< (a b)(i) = a(b(i))
Permutation inverse(const Permutation& p);
int cycle_count(const Permutation& p);
std::vector<int> cycle_lengths(const Permutation& p);
/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Parses 1-based cycle notation, e.g. "(1 2)(3)" or "(1,2,3)". Fixed points
/// may be omitted; an empty string or "()" is the identity.
Permutation parse_cycles(const std::string& text, int n);
std::string format_cycles(const Permutation& p);

/// Cat(k) = (2k)! / (k! (k+1)!)
double catalan(int k);

inline constexpr int kMaxWeingartenOrder = 5;

/// Wg(N, .) on S_n, from the inverse of the Gram matrix G_{ab} = N^{#(a b^{-1})}.
class WeingartenTable {
 public:
  WeingartenTable(int n, int dim);

  int n() const { return n_; }
  int dim() const { return dim_; }
  double operator()(const Permutation& gamma) const;
  const std::vector<Permutation>& permutations() const { return perms_; }
  /// max_a |sum_b G_{ab} Wg(b) - delta_{a,id}|
  double orthogonality_defect() const;

 private:
  int n_;
  int dim_;
  std::vector<Permutation> perms_;
  std::vector<double> wg_;  // indexed like perms_
  std::size_t index_of(const Permutation& p) const;
};

struct WeingartenQuery {
  int n = 1;
  int dim = 1;
  Permutation gamma;
};

double weingarten(const WeingartenQuery& q);

/// N^{#gamma - 2n} prod_c (-1)^{|c|-1} Cat(|c|-1)
double weingarten_asymptotic(const Permutation& gamma, int dim);

/// Haar unitary by QR of a complex Ginibre matrix, with the phases of R's
/// diagonal moved into Q.
Eigen::MatrixXcd haar_unitary(int dim, Seed seed);

/// E[U_{i1 j1} ... U_{in jn} conj(U_{i'1 j'1}) ... conj(U_{i'n j'n})], indices 0-based.
struct HaarPattern {
  std::vector<int> i, j, ip, jp;
  int order() const { return static_cast<int>(i.size()); }
  void validate(int dim) const;
};

std::complex<double> haar_moment_exact(const HaarPattern& pattern, int dim);

struct HaarEstimate {
  std::complex<double> mean;
  double se_re = 0.0;
  double se_im = 0.0;
  std::size_t samples = 0;
};

HaarEstimate haar_moment_mc(const HaarPattern& pattern, int dim, std::size_t samples, Seed seed,
                            unsigned threads = 1);

}  // namespace rmt
