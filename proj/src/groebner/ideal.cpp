#include "tropcm/ideal.hpp"

#include <algorithm>

namespace tropcm {

NonHomogeneousError::NonHomogeneousError(std::size_t index, const std::string& generator)
    : std::invalid_argument("generator " + std::to_string(index + 1) + " is not homogeneous: " + generator),
      index_(index) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto& g = generators[i];
    if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("generator from a different ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw NonHomogeneousError(i, g.to_string());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::operator+(const Ideal& o) const {
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("ideals from different rings");
  auto gens = gens_;
  gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with_variables(const IndexSet& vars) const {
  auto gens = gens_;
  for (auto i : vars) {
    if (i >= ring_->size()) throw std::invalid_argument("variable index outside the ring");
    gens.push_back(Polynomial::variable(ring_, i));
  }
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::mapped(RingPtr target, const std::vector<std::size_t>& var_map) const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(g.mapped(target, var_map));
  return Ideal(std::move(target), std::move(gens));
}

std::string Ideal::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ">";
}

std::string Ideal::cache_key() const {
  std::vector<std::string> g;
  for (const auto& p : gens_) g.push_back(p.to_string());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::string s = ring_->descriptor() + "{";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ";";
    s += g[i];
  }
  return s + "}";
}

}  // namespace tropcm
