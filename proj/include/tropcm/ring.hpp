#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tropcm/scalar.hpp"

namespace tropcm {

class IndexSet;

/// Polynomial ring descriptor: ordered variable names plus the coefficient field.
class Ring {
 public:
  Ring(std::vector<std::string> names, Field field);

  std::size_t size() const { return names_.size(); }
  const Field& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const Ring& o) const { return field_ == o.field_ && names_ == o.names_; }

  std::string descriptor() const;

 private:
  std::vector<std::string> names_;
  Field field_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, Field field = Field::rationals());
/// x1..xn
RingPtr make_standard_ring(std::size_t n, Field field = Field::rationals());
/// The ring on the variables listed in keep, in their original order.
RingPtr subring(const Ring& ring, const IndexSet& keep);
/// The ring with one fresh variable appended (name chosen to avoid clashes).
RingPtr extended_ring(const Ring& ring, const std::string& hint);

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace tropcm
