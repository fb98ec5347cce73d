#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "airy/arith/rational.hpp"

namespace airy {

enum class Series { A, B, C, D, E, F, G, GL };
enum class Form { Adjoint, SimplyConnected, GL };

std::string to_string(Series s);
std::string to_string(Form f);
/// Accepts "A".."G", "GL" (case-insensitive). Throws InvalidArgument.
Series parse_series(const std::string& s);
/// Accepts "adjoint"/"ad", "sc"/"simply-connected", "gl". Throws InvalidArgument.
Form parse_form(const std::string& s);

using IVec = std::vector<std::int64_t>;
using IMat = std::vector<IVec>;

struct Root {
  IVec simple;     // coordinates in the simple-root basis; sum = height
  IVec character;  // coordinates in the character lattice X^*
  IVec coroot;     // coroot in the cocharacter lattice X_*
  IVec coroot_simple;  // coroot in the simple-coroot basis
  int height = 0;
  bool positive() const { return height > 0; }
};

/// Reductive root datum of type A–G (semisimple forms) or GL_n.
///
/// Positive roots occupy indices 0..P-1 ordered by (height, then simple
/// coordinates lexicographically descending), so simple root i has index i.
/// The negative of root j < P has index j + P.
/// For GL_n, `rank` is n and the semisimple rank is n-1.
class RootDatum {
 public:
  RootDatum(Series series, int rank, Form form);

  Series series() const { return series_; }
  Form form() const { return form_; }
  int rank() const { return rank_; }
  int semisimple_rank() const { return ss_rank_; }
  /// Rank of the lattices X^*, X_* (dim T).
  int lattice_rank() const { return lat_rank_; }
  int center_rank() const { return lat_rank_ - ss_rank_; }
  std::string label() const;

  /// A_ij = <α_i^∨, α_j>.
  const IMat& cartan_matrix() const { return cartan_; }
  /// Normalized (α_i, α_j), long roots of squared length 2.
  const std::vector<std::vector<Rational>>& simple_form() const { return form_gram_; }
  /// (α, α) in the same normalization.
  Rational norm2(std::size_t root) const;
  Rational inner(std::size_t a, std::size_t b) const;

  const std::vector<Root>& roots() const { return roots_; }
  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }
  std::size_t negative(std::size_t i) const;
  std::size_t simple_root(int i) const { return static_cast<std::size_t>(i); }
  /// Index of the root with the given simple coordinates.
  std::optional<std::size_t> find_simple(const IVec& simple) const;
  std::optional<std::size_t> find_character(const IVec& ch) const;
  /// Index of α+β if it is a root.
  std::optional<std::size_t> sum(std::size_t a, std::size_t b) const;

  std::size_t highest_root() const { return highest_; }
  int coxeter_number() const { return h_; }
  /// Non-decreasing.
  const std::vector<int>& exponents() const { return exponents_; }
  /// k_r = #{α > 0 : Ht α = r}; index 0 unused.
  int positive_height_count(int r) const;
  int exponent_multiplicity(int r) const;

  /// <χ, λ> for χ in X^*, λ in X_* coordinates.
  static std::int64_t pair(const IVec& chi, const IVec& lam);
  std::int64_t pair_root(std::size_t root, const IVec& coweight) const {
    return pair(roots_[root].character, coweight);
  }
  /// Simple coroots as X_* vectors (rows).
  IMat simple_coroots() const;
  /// Simple roots as X^* vectors (rows).
  IMat simple_roots_character() const;

  /// dim G, dim B, dim T.
  int dim_group() const { return lat_rank_ + static_cast<int>(roots_.size()); }
  int dim_borel() const { return lat_rank_ + static_cast<int>(num_positive()); }
  int dim_torus() const { return lat_rank_; }

  /// Dual datum: roots and coroots swapped (B ↔ C, sc ↔ adjoint).
  RootDatum dual() const;

 private:
  void build_cartan();
  void enumerate_roots();
  void build_lattices();
  void finish();

  Series series_;
  int rank_;
  Form form_;
  int ss_rank_ = 0;
  int lat_rank_ = 0;
  IMat cartan_;
  std::vector<std::vector<Rational>> form_gram_;
  std::vector<Root> roots_;
  std::map<IVec, std::size_t> by_simple_;
  std::map<IVec, std::size_t> by_character_;
  std::size_t highest_ = 0;
  int h_ = 0;
  std::vector<int> exponents_;
  std::vector<int> height_counts_;
};

RootDatum build_root_datum(Series series, int rank, Form form);
int coxeter_number(const RootDatum& rd);
std::vector<int> exponents(const RootDatum& rd);

struct Coweight {
  IVec coords;  // in X_*
  friend bool operator==(const Coweight& a, const Coweight& b) { return a.coords == b.coords; }
  friend bool operator<(const Coweight& a, const Coweight& b) { return a.coords < b.coords; }
};

std::string to_string(const Coweight& mu);

/// Inclusive bound on the central degree Σμ_i; only consulted for GL_n.
struct DegreeWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// μ with 0 <= <α, μ> <= 1 for all α > 0, including 0.
std::vector<Coweight> minuscule_coweights(const RootDatum& rd, DegreeWindow window = {});
bool is_minuscule(const RootDatum& rd, const Coweight& mu);
bool is_dominant(const RootDatum& rd, const Coweight& mu);

struct MinusculeBijection {
  bool coweights_ok = false;   // M → X_*/Λ^∨
  bool weights_ok = false;     // M^∨ → X^*/Λ, via the dual datum
  std::size_t num_coweights = 0;
  std::size_t num_weights = 0;
  std::size_t coweight_classes = 0;  // |X_*/Λ^∨| (window size for GL)
  std::size_t weight_classes = 0;
  bool ok() const { return coweights_ok && weights_ok; }
};

MinusculeBijection minuscule_bijection_check(const RootDatum& rd, DegreeWindow window = {-1, 1});

/// Unique simple root pairing to 1 with μ, or nullopt when μ is central.
/// Throws InvalidArgument if μ is not minuscule.
std::optional<int> alpha_mu(const RootDatum& rd, const Coweight& mu);

class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(const RootDatum& rd);
  static WeylElement reflection(const RootDatum& rd, int i);

  const IMat& lattice_map() const { return m_; }
  const std::vector<int>& word() const { return word_; }
  /// Permutation of root indices.
  const std::vector<std::size_t>& root_perm() const { return perm_; }
  std::size_t act(std::size_t root) const { return perm_[root]; }
  IVec act_character(const IVec& x) const;
  std::size_t length() const { return word_.size(); }

  /// this · s_i
  WeylElement times_reflection(const RootDatum& rd, int i) const;
  friend WeylElement compose(const RootDatum& rd, const WeylElement& a, const WeylElement& b);
  bool is_identity() const;

 private:
  void rebuild_perm(const RootDatum& rd);
  IMat m_;
  std::vector<int> word_;
  std::vector<std::size_t> perm_;
};

/// a · b (apply b first).
WeylElement compose(const RootDatum& rd, const WeylElement& a, const WeylElement& b);

/// Longest element of the parabolic subgroup generated by the simple
/// reflections in `subset`.
WeylElement longest_element(const RootDatum& rd, const std::vector<int>& subset);
WeylElement weyl_w0(const RootDatum& rd);
WeylElement weyl_wP0(const RootDatum& rd, const Coweight& mu);
/// w_P = w_{P,0} · w_0, word concatenated in that order.
WeylElement weyl_wP(const RootDatum& rd, const Coweight& mu);

bool check_wP_heights(const RootDatum& rd, const Coweight& mu);

struct UMuRoots {
  std::vector<std::size_t> u_mu;        // Φ(u_μ)
  std::vector<std::size_t> u_mu_minus;  // Φ(u_μ^-)
  bool conjugation_ok = false;          // w_P Φ(u) = Φ(u_μ)
};
UMuRoots u_mu_roots(const RootDatum& rd, const Coweight& mu);

/// dim T + Σ_α #{r ∈ Z : <α,μ> <= r <= floor((Ht α - 1)/h)}.
std::int64_t stab_dimension(const RootDatum& rd, const Coweight& mu);

/// dim G(O)/J - dim G from line counts; 0 is expected.
/// Throws Unsupported for odd h outside type A.
std::int64_t dim_bunJ_defect(const RootDatum& rd);

bool swan_identity_check(const RootDatum& rd);

}  // namespace airy
