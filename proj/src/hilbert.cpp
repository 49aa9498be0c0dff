#include "gaugedd/hilbert.hpp"

#include <algorithm>
#include <bit>

#include "gaugedd/errors.hpp"

namespace gaugedd {

std::string to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

Boundary boundary_from_string(const std::string& s) {
  if (s == "open") return Boundary::open;
  if (s == "periodic") return Boundary::periodic;
  throw ValidationError("unknown boundary '" + s + "' (expected open|periodic)");
}

std::string to_string(LinkMode mode) {
  static const std::array<const char*, kLinkDim> names = {"00", "uu", "dd", "ud", "du"};
  return names.at(static_cast<std::size_t>(mode));
}

void LatticeConfig::validate() const {
  if (n_sites < 2) throw ValidationError("lattice needs n_sites >= 2");
  // 2*n_sites fermion bits must fit a 64-bit word
  if (n_sites > 31) throw ValidationError("lattice too large (n_sites <= 31)");
}

int LatticeConfig::link_left_site(int link) const {
  if (link < 0 || link >= n_links()) throw ValidationError("link index out of range");
  return link;
}

int LatticeConfig::link_right_site(int link) const {
  if (link < 0 || link >= n_links()) throw ValidationError("link index out of range");
  return (link + 1) % n_sites;
}

std::optional<int> LatticeConfig::outgoing_link(int site) const {
  if (site < 0 || site >= n_sites) throw ValidationError("site index out of range");
  if (site < n_links()) return site;
  return std::nullopt;
}

std::optional<int> LatticeConfig::incoming_link(int site) const {
  if (site < 0 || site >= n_sites) throw ValidationError("site index out of range");
  if (site > 0) return site - 1;
  if (boundary == Boundary::periodic) return n_sites - 1;
  return std::nullopt;
}

FermionBasis::FermionBasis(LatticeConfig lattice, int n_fermions)
    : lattice_(lattice), n_fermions_(n_fermions) {
  lattice_.validate();
  const int modes = 2 * lattice_.n_sites;
  if (n_fermions < 0 || n_fermions > modes) throw ValidationError("filling out of range");
  // Gosper's hack walks same-popcount words in ascending order.
  if (n_fermions == 0) {
    states_.push_back(0);
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << modes;
  std::uint64_t v = (std::uint64_t{1} << n_fermions) - 1;
  while (v < limit) {
    states_.push_back(v);
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

std::optional<std::size_t> FermionBasis::index(std::uint64_t bits) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), bits);
  if (it == states_.end() || *it != bits) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

LinkBasis::LinkBasis(LatticeConfig lattice) : lattice_(lattice), size_(1) {
  lattice_.validate();
  for (int k = 0; k < lattice_.n_links(); ++k) {
    strides_.push_back(size_);
    size_ *= kLinkDim;
  }
}

LinkMode LinkBasis::mode(std::size_t index, int link) const {
  if (index >= size_) throw ValidationError("link basis index out of range");
  return static_cast<LinkMode>((index / stride(link)) % kLinkDim);
}

std::size_t LinkBasis::with_mode(std::size_t index, int link, LinkMode m) const {
  const std::size_t s = stride(link);
  const std::size_t old_digit = (index / s) % kLinkDim;
  return index - old_digit * s + static_cast<std::size_t>(m) * s;
}

std::size_t LinkBasis::index(const std::vector<LinkMode>& modes) const {
  if (static_cast<int>(modes.size()) != n_links()) throw ValidationError("wrong number of link modes");
  std::size_t out = 0;
  for (std::size_t k = 0; k < modes.size(); ++k) out += static_cast<std::size_t>(modes[k]) * strides_[k];
  return out;
}

CompositeBasis::CompositeBasis(FermionBasis fermion, LinkBasis link)
    : fermion_(std::move(fermion)), link_(std::move(link)) {
  if (!(fermion_.lattice() == link_.lattice())) {
    throw ValidationError("fermion and link bases live on different lattices");
  }
}

std::size_t CompositeBasis::index(std::size_t fermion_index, std::size_t link_index) const {
  if (fermion_index >= fermion_.size() || link_index >= link_.size()) {
    throw ValidationError("composite index component out of range");
  }
  return fermion_index * link_.size() + link_index;
}

std::pair<std::size_t, std::size_t> CompositeBasis::split(std::size_t k) const {
  if (k >= size()) throw ValidationError("composite index out of range");
  return {k / link_.size(), k % link_.size()};
}

FermionBasis build_fermion_basis(const LatticeConfig& cfg, int n_fermions) {
  return FermionBasis(cfg, n_fermions);
}

LinkBasis build_link_basis(const LatticeConfig& cfg) { return LinkBasis(cfg); }

CompositeBasis build_composite_basis(FermionBasis f, LinkBasis l) {
  return CompositeBasis(std::move(f), std::move(l));
}

CompositeBasis build_half_filled_basis(const LatticeConfig& cfg) {
  return CompositeBasis(FermionBasis(cfg, cfg.n_sites), LinkBasis(cfg));
}

}  // namespace gaugedd
