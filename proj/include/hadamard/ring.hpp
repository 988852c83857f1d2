// Copyright 2026 The hadamard-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HADAMARD_RING_HPP
#define HADAMARD_RING_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <set>
#include <string>
#include <vector>

#include "hadamard/arith.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/monomial.hpp"

namespace hadamard {

/// A named consecutive range of ring variables, e.g. the y-block.
struct VariableBlock {
  std::string name;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const VariableBlock&, const VariableBlock&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring over a coefficient field with named variables, an active
/// monomial order and an optional partition into named blocks. Immutable.
class Ring {
 public:
  Ring(std::vector<std::string> names, CoeffField field, MonomialOrder order,
       std::vector<VariableBlock> blocks = {})
      : names_(std::move(names)), field_(field), order_(std::move(order)), blocks_(std::move(blocks)) {
    if (names_.size() > Monomial::kMaxVars) throw InputError("too many variables (max 64)");
    std::set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw InputError("empty variable name");
      if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
    }
    if (!blocks_.empty()) {
      std::size_t at = 0;
      for (const auto& b : blocks_) {
        if (b.begin != at || b.end < b.begin) throw InputError("blocks must partition the variables");
        at = b.end;
      }
      if (at != names_.size()) throw InputError("blocks must partition the variables");
    }
  }

  static RingPtr make(std::vector<std::string> names, CoeffField field = CoeffField::rational(),
                      MonomialOrder order = MonomialOrder::degrevlex(),
                      std::vector<VariableBlock> blocks = {}) {
    return std::make_shared<const Ring>(std::move(names), field, std::move(order), std::move(blocks));
  }

  /// Variables prefix0 .. prefix{count-1}.
  static std::vector<std::string> indexed(const std::string& prefix, std::size_t count) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(prefix + std::to_string(i));
    return v;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const CoeffField& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<VariableBlock>& blocks() const noexcept { return blocks_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  RingPtr with_order(MonomialOrder order) const {
    return make(names_, field_, std::move(order), blocks_);
  }
  RingPtr with_field(CoeffField field) const { return make(names_, field, order_, blocks_); }

  /// Same variables and coefficient field; orders may differ.
  bool compatible(const Ring& o) const { return names_ == o.names_ && field_ == o.field_; }
  friend bool operator==(const Ring& a, const Ring& b) {
    return a.compatible(b) && a.order_ == b.order_ && a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::string> names_;
  CoeffField field_;
  MonomialOrder order_;
  std::vector<VariableBlock> blocks_;
};

}  // namespace hadamard

#endif  // HADAMARD_RING_HPP
