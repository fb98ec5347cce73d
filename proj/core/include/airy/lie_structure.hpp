#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "airy/rootdata.hpp"

namespace airy {

/// Integer Chevalley basis of the Lie algebra of a root datum.
///
/// Basis order: root vectors E_α in the root order of the datum (indices
/// 0..R-1), then the Cartan basis (indices R..R+c-1). The Cartan basis is
/// the simple coroots for semisimple types and E_ii for GL_n.
/// Signs of N_{α,β} are fixed by making every extraspecial pair positive;
/// [E_α, E_{-α}] = H_α (the coroot).
class LieStructure {
 public:
  struct Term {
    std::size_t index;
    std::int64_t coeff;
  };

  explicit LieStructure(std::shared_ptr<const RootDatum> rd);

  const RootDatum& rd() const { return *rd_; }
  std::shared_ptr<const RootDatum> rd_ptr() const { return rd_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_roots() const { return R_; }
  std::size_t cartan_dim() const { return dim_ - R_; }
  std::size_t cartan_index(std::size_t k) const { return R_ + k; }
  bool is_cartan(std::size_t i) const { return i >= R_; }

  /// [b_i, b_j] as a sparse integer combination.
  const std::vector<Term>& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  /// N_{α,β} (0 when α+β is not a root).
  std::int64_t N(std::size_t a, std::size_t b) const;
  /// <α, h_k>.
  std::int64_t pairing(std::size_t root, std::size_t k) const { return pairing_[root][k]; }
  /// H_α in Cartan coordinates.
  const IVec& coroot_cartan(std::size_t root) const { return coroot_[root]; }
  /// Invariant form on basis elements (integer in this normalization).
  std::int64_t kappa(std::size_t i, std::size_t j) const { return kappa_[i * dim_ + j]; }
  /// Height grading: Ht α for root vectors, 0 on the Cartan.
  int height(std::size_t i) const { return i < R_ ? rd_->roots()[i].height : 0; }

  /// Overwrites N_{a,b} (and N_{b,a} = -value). Only for self-tests that
  /// must observe a failing verification.
  void debug_set_constant(std::size_t a, std::size_t b, std::int64_t value);

 private:
  void build_semisimple_constants();
  void build_gl_constants();
  void build_table();

  std::shared_ptr<const RootDatum> rd_;
  std::size_t R_ = 0, dim_ = 0;
  std::vector<std::vector<std::int64_t>> N_;  // R x R
  std::vector<IVec> pairing_;
  std::vector<IVec> coroot_;
  std::vector<std::int64_t> kappa_;
  std::vector<std::vector<Term>> table_;
};

std::shared_ptr<const LieStructure> make_lie_structure(Series series, int rank, Form form);

}  // namespace airy
