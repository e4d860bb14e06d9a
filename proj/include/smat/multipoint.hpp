#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "smat/toeplitz.hpp"

namespace smat {

/// Local separations of a node family: Delta_i = min_{j != i} |x_i - x_j|.
struct Separations {
  std::vector<PrecFloat> deltas;
  std::vector<double> lg_deltas;
  double lg_prod = 0.0;   // lg prod_i Delta_i, rounded down
  PrecFloat min_delta;
};

// O(n^2) pairwise scan (n >= 2); parallel over rows.
Separations separations_of(const std::vector<ComplexApprox>& nodes);

/// Subproduct tree: levels[0] holds the degree-1 leaf moduli (padded with the
/// constant 1 up to a power of two), levels[h+1][j] = levels[h][2j] *
/// levels[h][2j+1]. Immutable once built.
struct SubproductTree {
  long padded = 0;       // leaf slots, power of two
  long real_leaves = 0;  // actual node count
  long built_ell = 0;
  long built_prec = 0;
  std::vector<std::vector<ApproxPoly>> levels;

  const ApproxPoly& root() const { return levels.back()[0]; }
  long height() const { return static_cast<long>(levels.size()) - 1; }
};

/// Distinct complex nodes with cached magnitude/root-bound exponents, local
/// separations and (lazily) their subproduct tree.
class NodeSet {
 public:
  explicit NodeSet(std::vector<ComplexApprox> nodes, long lambda = kExactLambda);

  const std::vector<ComplexApprox>& nodes() const { return nodes_; }
  long size() const { return static_cast<long>(nodes_.size()); }
  long lambda() const { return lambda_; }
  long tau() const { return tau_; }
  long rho() const { return rho_; }
  const Separations& separations() const { return sep_; }

  // Cached tree with at least the requested accuracy/precision; rebuilding
  // for identical requests yields identical supermoduli.
  std::shared_ptr<const SubproductTree> tree(long ell, long prec) const;

 private:
  std::vector<ComplexApprox> nodes_;
  long lambda_;
  long tau_ = 0;
  long rho_ = 0;
  Separations sep_;
  mutable std::shared_ptr<const SubproductTree> tree_;
};

struct MultipointOptions {
  std::optional<long> exec_prec;
  std::optional<long> rho;
};

/// Fan-in process: builds the supermoduli tree of the node set to accuracy
/// 2^-ell per coefficient.
std::shared_ptr<const SubproductTree> build_tree(const NodeSet& ns, long ell,
                                                 const MultipointOptions& opt = {});

/// Moenck-Borodin evaluation: p at every node of ns, each within 2^-ell,
/// by remainder descent over the subproduct tree.
std::vector<ComplexApprox> multipoint_eval(const ApproxPoly& p, const NodeSet& ns, long ell,
                                           const MultipointOptions& opt = {});

/// V p for the Vandermonde matrix of the node set (row i = powers of x_i).
std::vector<ComplexApprox> vandermonde_vec_mul(const NodeSet& ns, const VecApprox& p, long ell,
                                               const MultipointOptions& opt = {});

/// Balanced product of m polynomials within 2^-ell.
ApproxPoly mul_many(const std::vector<ApproxPoly>& polys, long ell,
                    const MultipointOptions& opt = {});

/// Sum of rational functions Q_j/P_j as one fraction (Q, P), both within
/// 2^-ell. deg Q_j < deg P_j required.
std::pair<ApproxPoly, ApproxPoly> sum_rational(
    const std::vector<std::pair<ApproxPoly, ApproxPoly>>& terms, long ell,
    const MultipointOptions& opt = {});

/// F mod P_j for all moduli, each within 2^-ell: fan-in over the moduli then
/// remainder descent.
std::vector<ApproxPoly> modular_reduce_many(const ApproxPoly& F,
                                            const std::vector<ApproxPoly>& moduli, long ell,
                                            const MultipointOptions& opt = {});

namespace detail {

// Tree construction at an explicit precision (uncertified core).
std::shared_ptr<SubproductTree> build_tree_at(const std::vector<ComplexApprox>& nodes, long ell,
                                              long prec, long node_tau);

// Remainders of F against every real leaf of the tree, descending level by
// level with per-node cached inverse series. Pads are skipped.
std::vector<ApproxPoly> fan_out_remainders(const SubproductTree& tree, const ApproxPoly& F,
                                           long prec, long rho);

}  // namespace detail

}  // namespace smat
