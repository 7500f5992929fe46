// Root-system data for the irreducible types A..G, rank <= 8.
//
// Weights live in fundamental-weight coordinates, so every pairing
// <lambda, alpha^vee> is a plain integer dot product against the coroot's
// coordinates on the simple coroots. Roots are generated by reflection
// closure from the simple roots; no tables beyond the Cartan matrices.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace kk::roots {

using Int = long long;
using Vec = std::vector<Int>;

struct Weight {
  Vec fw;  // coordinates on the fundamental weights

  bool operator==(const Weight& o) const { return fw == o.fw; }
  bool operator<(const Weight& o) const { return fw < o.fw; }
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(Int c) const;
  bool is_zero() const;
  std::string to_string() const;
};

// Element of the finite Weyl group as its integer matrix on the weight
// lattice (fundamental-weight basis, row-major).
struct WeylElement {
  int rank = 0;
  Vec mat;  // rank*rank

  static WeylElement identity(int rank);
  bool is_identity() const;
  bool operator==(const WeylElement& o) const { return mat == o.mat; }
  bool operator<(const WeylElement& o) const { return mat < o.mat; }
  Weight act(const Weight& lam) const;
  WeylElement operator*(const WeylElement& o) const;  // composition: (this*o)(x) = this(o(x))
};

struct PositiveRoot {
  Vec on_simple_roots;    // root coordinates
  Vec fw;                 // fundamental-weight coordinates
  Vec coroot_on_simples;  // coordinates of alpha^vee on the simple coroots
  Int height = 0;         // sum of root coordinates
};

class RootSystem {
 public:
  // type in {A1..A8, B2..B8, C2..C8, D3..D8, E6, E7, E8, F4, G2}
  static std::shared_ptr<const RootSystem> build(const std::string& cartan_type);

  const std::string& cartan_type() const { return type_; }
  int rank() const { return rank_; }
  // cartan(i, j) = <alpha_j, alpha_i^vee>
  Int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
  Int symmetrizer(int i) const { return sym_[i]; }

  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  const PositiveRoot& simple_root(int i) const { return positive_[simple_index_[i]]; }
  int simple_index_of(int i) const { return simple_index_[i]; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  Weight rho() const;
  Weight fundamental_weight(int i) const;
  Int coxeter_number() const { return coxeter_number_; }
  int highest_root_index() const { return highest_root_; }
  int highest_coroot_index() const { return highest_coroot_; }  // root whose coroot is highest

  Int pairing(const Weight& lam, const Vec& coroot_on_simples) const;
  Int pairing(const Weight& lam, const PositiveRoot& alpha) const {
    return pairing(lam, alpha.coroot_on_simples);
  }
  bool is_dominant(const Weight& lam) const;

  WeylElement simple_reflection(int i) const;
  WeylElement reflection(const PositiveRoot& alpha) const;
  const WeylElement& w0() const { return w0_; }

  // Signed root lookup: +idx+1 if w-image of a positive root is the
  // positive root idx, -(idx+1) if it is its negative.
  int signed_root_lookup(const Weight& fw_vector) const;
  bool sends_root_negative(const WeylElement& w, int root_index) const;
  Int length(const WeylElement& w) const;  // number of inversions
  std::vector<int> reduced_word(const WeylElement& w) const;
  WeylElement from_word(const std::vector<int>& word) const;
  WeylElement inverse(const WeylElement& w) const;

  // Full enumeration of W; throws if |W| exceeds the cap (E-types at high
  // rank are out of enumeration range by design).
  const std::vector<WeylElement>& enumerate_weyl(std::size_t cap = 2000000) const;
  Int weyl_order_from_type() const;

 private:
  RootSystem() = default;
  void generate();

  std::string type_;
  int rank_ = 0;
  Vec cartan_;
  Vec sym_;
  std::vector<PositiveRoot> positive_;
  std::vector<int> simple_index_;
  std::map<Vec, int> fw_to_root_;
  WeylElement w0_;
  Int coxeter_number_ = 0;
  int highest_root_ = -1;
  int highest_coroot_ = -1;

  mutable std::mutex enum_mutex_;
  mutable std::optional<std::vector<WeylElement>> weyl_cache_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace kk::roots
