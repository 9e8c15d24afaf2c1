#include "tropcm/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tropcm/weight.hpp"

namespace tropcm {

Ring::Ring(std::vector<std::string> names, Field field) : names_(std::move(names)), field_(field) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::string Ring::descriptor() const {
  std::string s = field_.to_string() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ",";
    s += names_[i];
  }
  return s + "]";
}

RingPtr make_ring(std::vector<std::string> names, Field field) {
  return std::make_shared<const Ring>(std::move(names), field);
}

RingPtr make_standard_ring(std::size_t n, Field field) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(names), field);
}

RingPtr subring(const Ring& ring, const IndexSet& keep) {
  std::vector<std::string> names;
  for (auto i : keep) names.push_back(ring.name(i));
  return make_ring(std::move(names), ring.field());
}

RingPtr extended_ring(const Ring& ring, const std::string& hint) {
  std::string name = hint;
  while (ring.index_of(name)) name += "_";
  auto names = ring.names();
  names.push_back(name);
  return make_ring(std::move(names), ring.field());
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace tropcm
