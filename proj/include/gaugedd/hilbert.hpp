#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gaugedd {

enum class Boundary { open, periodic };

enum class Spin : int { up = 0, down = 1 };

// Link boson modes (ml) in their fixed order: 00, up-up, down-down, up-down, down-up.
enum class LinkMode : int { vacuum = 0, up_up = 1, down_down = 2, up_down = 3, down_up = 4 };

inline constexpr int kLinkDim = 5;

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);
std::string to_string(LinkMode mode);

/// One-dimensional lattice: vertices 0..n_sites-1, link k joins site k to site k+1
/// (mod n_sites on a ring).
struct LatticeConfig {
  int n_sites = 2;
  Boundary boundary = Boundary::periodic;

  void validate() const;
  int n_links() const { return boundary == Boundary::open ? n_sites - 1 : n_sites; }
  int link_left_site(int link) const;
  int link_right_site(int link) const;
  // link whose left end is `site`, if any
  std::optional<int> outgoing_link(int site) const;
  // link whose right end is `site`, if any
  std::optional<int> incoming_link(int site) const;
  bool operator==(const LatticeConfig&) const = default;
};

// Fermion mode index: site-major, up before down.
constexpr int fermion_mode(int site, Spin s) { return 2 * site + static_cast<int>(s); }

/// Fock states of 2*n_sites fermionic modes at fixed particle number, sorted by
/// bitstring value (bit k set <=> mode k occupied).
class FermionBasis {
 public:
  FermionBasis(LatticeConfig lattice, int n_fermions);

  const LatticeConfig& lattice() const { return lattice_; }
  int n_sites() const { return lattice_.n_sites; }
  int n_modes() const { return 2 * lattice_.n_sites; }
  int n_fermions() const { return n_fermions_; }
  std::size_t size() const { return states_.size(); }
  std::uint64_t state(std::size_t k) const { return states_.at(k); }
  const std::vector<std::uint64_t>& states() const { return states_; }
  std::optional<std::size_t> index(std::uint64_t bits) const;

 private:
  LatticeConfig lattice_;
  int n_fermions_;
  std::vector<std::uint64_t> states_;
};

/// One boson per link, five modes each; global index = sum_k digit_k * 5^k.
class LinkBasis {
 public:
  explicit LinkBasis(LatticeConfig lattice);

  const LatticeConfig& lattice() const { return lattice_; }
  int n_links() const { return lattice_.n_links(); }
  std::size_t size() const { return size_; }
  LinkMode mode(std::size_t index, int link) const;
  std::size_t with_mode(std::size_t index, int link, LinkMode mode) const;
  std::size_t index(const std::vector<LinkMode>& modes) const;
  std::size_t stride(int link) const { return strides_.at(static_cast<std::size_t>(link)); }

 private:
  LatticeConfig lattice_;
  std::size_t size_;
  std::vector<std::size_t> strides_;
};

/// Fermion x link product space; the fermion index varies slowest.
class CompositeBasis {
 public:
  CompositeBasis(FermionBasis fermion, LinkBasis link);

  const LatticeConfig& lattice() const { return fermion_.lattice(); }
  const FermionBasis& fermion() const { return fermion_; }
  const LinkBasis& link() const { return link_; }
  std::size_t size() const { return fermion_.size() * link_.size(); }
  std::size_t index(std::size_t fermion_index, std::size_t link_index) const;
  std::pair<std::size_t, std::size_t> split(std::size_t k) const;

 private:
  FermionBasis fermion_;
  LinkBasis link_;
};

FermionBasis build_fermion_basis(const LatticeConfig& cfg, int n_fermions);
LinkBasis build_link_basis(const LatticeConfig& cfg);
CompositeBasis build_composite_basis(FermionBasis f, LinkBasis l);
// Half filling: n_fermions = n_sites.
CompositeBasis build_half_filled_basis(const LatticeConfig& cfg);

}  // namespace gaugedd
