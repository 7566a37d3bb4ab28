// Copyright 2026 The qadd Authors.
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

/*!
  \file adders.hpp
  \brief Netlist generators for quaternary adders

  Five architectures:

  - ripple: chained full-adder cells, carry masked at every stage.
  - single_stage: flattened lookahead, every carry is one wide sum of
    products over the per-qudit generate/propagate signals.
  - tree: memoized logarithmic carry tree Q(i,j) with a product tree
    P(i,j) for the group propagates.
  - sparse: the carry tree produces only every k-th carry; single-stage
    blocks fill in the carries between them.
  - hybrid: ripple cells inside fixed-size blocks, lookahead between blocks.

  Signal names attached to every generated netlist:

    P<i>       propagate of qudit i (0 or 3)       parallel kinds only
    G<i>       generate of qudit i, unmasked       parallel kinds only
    c<i>       carry into qudit i, masked to 0/1   2 <= i <= n+1 (c<n+1> is cout)
    c<i>.raw   the same carry before its mask

  The parallel networks keep generates unmasked and mask once where a carry
  is consumed; only the low bit of an unmasked carry is meaningful.
*/

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "netlist.hpp"

namespace qadd {

enum class adder_kind { ripple, single_stage, tree, sparse, hybrid };

inline constexpr std::array<adder_kind, 5> all_adder_kinds{adder_kind::ripple, adder_kind::single_stage, adder_kind::tree,
                                                           adder_kind::sparse, adder_kind::hybrid};

constexpr std::string_view to_string(adder_kind kind) {
  switch (kind) {
    case adder_kind::ripple: return "ripple";
    case adder_kind::single_stage: return "single_stage";
    case adder_kind::tree: return "tree";
    case adder_kind::sparse: return "sparse";
    case adder_kind::hybrid: return "hybrid";
  }
  return "?";
}

/// Accepts the canonical names plus "single" and "single-stage".
inline std::optional<adder_kind> adder_kind_from_string(std::string_view text) {
  if (text == "single" || text == "single-stage") {
    return adder_kind::single_stage;
  }
  for (auto kind : all_adder_kinds) {
    if (to_string(kind) == text) {
      return kind;
    }
  }
  return std::nullopt;
}

struct adder_spec {
  adder_kind kind = adder_kind::ripple;
  std::size_t width = 1;
  std::size_t sparsity = 4;  // sparse only
  std::size_t block = 1;     // hybrid only

  void validate() const {
    if (width < 1) {
      throw invalid_spec("adder width must be at least 1");
    }
    if (kind == adder_kind::sparse && sparsity < 2) {
      throw invalid_spec("sparsity must be at least 2, got " + std::to_string(sparsity));
    }
    if (kind == adder_kind::hybrid && (block < 1 || block > width)) {
      throw invalid_spec("hybrid block must satisfy 1 <= block <= width, got " + std::to_string(block));
    }
  }
};

namespace detail {

/// Per-qudit gates shared between the sum, carry and propagate/generate logic.
class cell_builder {
 public:
  explicit cell_builder(netlist& nl) : nl_(nl) {}

  netlist& nl() { return nl_; }

  node_id partial(std::size_t i) { return nl_.add_xor({nl_.a(i), nl_.b(i)}); }
  node_id both(std::size_t i) { return nl_.add_and({nl_.a(i), nl_.b(i)}); }
  node_id swapped_partial(std::size_t i) { return nl_.add_bitswap(partial(i)); }

  node_id propagate(std::size_t i) {
    const auto p = nl_.add_and({partial(i), swapped_partial(i)});
    nl_.name_signal("P" + std::to_string(i), p);
    return p;
  }

  node_id raw_generate(std::size_t i) {
    const auto g = nl_.add_or(
        {nl_.add_inward(both(i)), nl_.add_and({nl_.a(i), nl_.b(i), swapped_partial(i)})});
    nl_.name_signal("G" + std::to_string(i), g);
    return g;
  }

  /// Majority-like term T of the full adder for qudit i.
  node_id majority(std::size_t i, node_id carry_in) {
    return nl_.add_or({both(i), nl_.add_and({nl_.b(i), carry_in}), nl_.add_and({carry_in, nl_.a(i)})});
  }

  /// Sum of qudit i from its (0/1) carry-in; returns T for carry reuse.
  node_id sum(std::size_t i, node_id carry_in) {
    const auto t = majority(i, carry_in);
    nl_.set_sum(i, nl_.add_xor({partial(i), carry_in, nl_.add_bitswap(nl_.add_mask(t))}));
    return t;
  }

  /// Full-adder carry-out of qudit i before its mask.
  node_id ripple_carry(std::size_t i, node_id t) {
    return nl_.add_or({nl_.add_inward(both(i)), nl_.add_and({t, swapped_partial(i)})});
  }

  /// Names c<i>.raw and c<i>, returns the masked carry.
  node_id carry_into(std::size_t i, node_id raw) {
    const auto masked = nl_.add_mask(raw);
    nl_.name_signal("c" + std::to_string(i) + ".raw", raw);
    nl_.name_signal("c" + std::to_string(i), masked);
    if (i == nl_.width() + 1) {
      nl_.set_cout(masked);
    }
    return masked;
  }

  /// And of P<first>..P<last>; a single propagate needs no gate.
  node_id group_propagate(const std::vector<node_id>& props, std::size_t first, std::size_t last) {
    if (first == last) {
      return props[first];
    }
    std::vector<node_id> operands(props.begin() + static_cast<std::ptrdiff_t>(first),
                                  props.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    return nl_.add_and(std::move(operands));
  }

  /// Flattened lookahead for the carry leaving qudit `last`, over qudits
  /// first..last with `seed` entering qudit `first`. Without a seed the
  /// result is the group generate.
  node_id lookahead(const std::vector<node_id>& props, const std::vector<node_id>& gens, std::size_t first,
                    std::size_t last, std::optional<node_id> seed) {
    std::vector<node_id> terms{gens[last]};
    for (std::size_t k = first; k < last; ++k) {
      terms.push_back(nl_.add_and({gens[k], group_propagate(props, k + 1, last)}));
    }
    if (seed) {
      terms.push_back(nl_.add_and({group_propagate(props, first, last), *seed}));
    }
    return terms.size() == 1 ? terms.front() : nl_.add_or(std::move(terms));
  }

 private:
  netlist& nl_;
};

}  // namespace detail

/*! \brief Memoized carry tree and product tree
 *
 * With m = 2^floor(log2 |i - j|):
 *
 *   P(i,j) = P(i, j-m) * P(j-m+1, j)            for i < j,  P(i,i) = P_i
 *   Q(i,j) = Q(i, i-m+1) + Q(i-m, j) * P(i-m, i-1)   for i > j
 *   Q(i,i) = G_{i-1},  Q(1,1) = carry-in
 *
 * Q(i,1) is the carry into qudit i. Each internal Q node is one And and one
 * Or, each internal P node one And; all of them have fan-in 2.
 */
class carry_tree {
 public:
  using key = std::pair<std::size_t, std::size_t>;

  struct entry {
    node_id id = invalid_node;
    node_id and_id = invalid_node;  // internal nodes only
    std::optional<key> upper;       // Q: Q(i, i-m+1);  P: P(i, j-m)
    std::optional<key> lower;       // Q: Q(i-m, j);    P: P(j-m+1, j)
    std::optional<key> span;        // Q only: P(i-m, i-1)
  };

  /// `props[i]` and `gens[i]` hold P_i and unmasked G_i (index 0 unused).
  carry_tree(netlist& nl, std::vector<node_id> props, std::vector<node_id> gens)
      : nl_(&nl), props_(std::move(props)), gens_(std::move(gens)) {}

  static std::size_t split(std::size_t distance) {
    std::size_t m = 1;
    while (m * 2 <= distance) m *= 2;
    return m;
  }

  node_id product(std::size_t i, std::size_t j) {
    if (auto it = products_.find({i, j}); it != products_.end()) {
      return it->second.id;
    }
    entry e;
    if (i == j) {
      e.id = props_.at(i);
    } else {
      const auto m = split(j - i);
      e.upper = key{i, j - m};
      e.lower = key{j - m + 1, j};
      const auto left = product(i, j - m);
      const auto right = product(j - m + 1, j);
      e.id = e.and_id = live().add_and({left, right});
    }
    products_.emplace(key{i, j}, e);
    return e.id;
  }

  node_id carry(std::size_t i, std::size_t j) {
    if (auto it = carries_.find({i, j}); it != carries_.end()) {
      return it->second.id;
    }
    entry e;
    if (i == j) {
      e.id = i == 1 ? live().cin() : gens_.at(i - 1);
    } else {
      const auto m = split(i - j);
      e.upper = key{i, i - m + 1};
      e.lower = key{i - m, j};
      e.span = key{i - m, i - 1};
      const auto upper = carry(i, i - m + 1);
      const auto lower = carry(i - m, j);
      const auto span = product(i - m, i - 1);
      e.and_id = live().add_and({lower, span});
      e.id = live().add_or({upper, e.and_id});
    }
    carries_.emplace(key{i, j}, e);
    return e.id;
  }

  /// Drops the netlist binding; lookups stay valid, new nodes throw.
  void detach() { nl_ = nullptr; }

  const std::map<key, entry>& carries() const { return carries_; }
  const std::map<key, entry>& products() const { return products_; }

  /// Internal-node count along the longest path from Q(i,j) to a leaf.
  std::size_t levels(key k) const {
    const auto& e = carries_.at(k);
    if (!e.upper) {
      return 0;
    }
    return 1 + std::max(levels(*e.upper), levels(*e.lower));
  }

 private:
  netlist& live() {
    if (!nl_) {
      throw contract_violation("carry tree is detached from its netlist");
    }
    return *nl_;
  }

  netlist* nl_;
  std::vector<node_id> props_;
  std::vector<node_id> gens_;
  std::map<key, entry> products_;
  std::map<key, entry> carries_;
};

namespace detail {

struct pg_signals {
  std::vector<node_id> props;  // 1-based
  std::vector<node_id> gens;   // 1-based, unmasked
};

inline pg_signals make_pg(cell_builder& cells, std::size_t n) {
  pg_signals out{std::vector<node_id>(n + 1, invalid_node), std::vector<node_id>(n + 1, invalid_node)};
  for (std::size_t i = 1; i <= n; ++i) {
    out.props[i] = cells.propagate(i);
    out.gens[i] = cells.raw_generate(i);
  }
  return out;
}

inline void require_width(std::size_t n) {
  if (n < 1) {
    throw invalid_spec("adder width must be at least 1");
  }
}

}  // namespace detail

inline netlist build_ripple(std::size_t n) {
  detail::require_width(n);
  netlist nl(n, "ripple");
  detail::cell_builder cells(nl);
  auto carry = nl.cin();
  for (std::size_t i = 1; i <= n; ++i) {
    const auto t = cells.sum(i, carry);
    carry = cells.carry_into(i + 1, cells.ripple_carry(i, t));
  }
  return nl;
}

inline netlist build_single_stage(std::size_t n) {
  detail::require_width(n);
  netlist nl(n, "single_stage");
  detail::cell_builder cells(nl);
  const auto pg = detail::make_pg(cells, n);
  std::vector<node_id> carry_in(n + 2, invalid_node);
  carry_in[1] = nl.cin();
  for (std::size_t top = 1; top <= n; ++top) {
    carry_in[top + 1] = cells.carry_into(top + 1, cells.lookahead(pg.props, pg.gens, 1, top, nl.cin()));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    cells.sum(i, carry_in[i]);
  }
  return nl;
}

/// Tree adder; `trace`, when given, receives the memoized tree for inspection.
inline netlist build_tree(std::size_t n, std::optional<carry_tree>* trace = nullptr) {
  detail::require_width(n);
  netlist nl(n, "tree");
  detail::cell_builder cells(nl);
  const auto pg = detail::make_pg(cells, n);
  carry_tree tree(nl, pg.props, pg.gens);
  std::vector<node_id> carry_in(n + 2, invalid_node);
  carry_in[1] = nl.cin();
  for (std::size_t i = 2; i <= n + 1; ++i) {
    carry_in[i] = cells.carry_into(i, tree.carry(i, 1));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    cells.sum(i, carry_in[i]);
  }
  if (trace) {
    tree.detach();
    trace->emplace(std::move(tree));
  }
  return nl;
}

/// Sparse tree: the carry tree yields the carry into each block start
/// 1 + k*sparsity; single-stage networks seeded by it fill the block.
inline netlist build_sparse(std::size_t n, std::size_t sparsity = 4) {
  adder_spec{adder_kind::sparse, n, sparsity, 1}.validate();
  netlist nl(n, "sparse");
  nl.set_param("sparsity", static_cast<std::int64_t>(sparsity));
  nl.set_param("reconstructed", 1);
  detail::cell_builder cells(nl);
  const auto pg = detail::make_pg(cells, n);
  carry_tree tree(nl, pg.props, pg.gens);

  std::vector<node_id> carry_in(n + 2, invalid_node);
  carry_in[1] = nl.cin();
  std::int64_t boundaries = 0;
  for (std::size_t first = 1; first <= n; first += sparsity) {
    ++boundaries;
    const auto seed = tree.carry(first, 1);
    if (first > 1) {
      carry_in[first] = cells.carry_into(first, seed);
    }
    const auto last = std::min(first + sparsity - 1, n);
    const auto stop = last == n ? last : last - 1;
    for (std::size_t top = first; top <= stop; ++top) {
      carry_in[top + 1] = cells.carry_into(top + 1, cells.lookahead(pg.props, pg.gens, first, top, seed));
    }
  }
  nl.set_param("boundary_carries", boundaries);
  for (std::size_t i = 1; i <= n; ++i) {
    cells.sum(i, carry_in[i]);
  }
  return nl;
}

/// Hybrid: ripple cells inside blocks; block propagate/generate and one
/// carry step per block carry the value across blocks.
inline netlist build_hybrid(std::size_t n, std::size_t block) {
  adder_spec{adder_kind::hybrid, n, 4, block}.validate();
  netlist nl(n, "hybrid");
  nl.set_param("block", static_cast<std::int64_t>(block));
  nl.set_param("reconstructed", 1);
  detail::cell_builder cells(nl);
  const auto pg = detail::make_pg(cells, n);

  auto block_carry_raw = nl.cin();
  auto block_carry = nl.cin();
  for (std::size_t first = 1; first <= n; first += block) {
    const auto last = std::min(first + block - 1, n);
    auto carry = block_carry;
    for (std::size_t i = first; i <= last; ++i) {
      const auto t = cells.sum(i, carry);
      if (i < last) {
        carry = cells.carry_into(i + 1, cells.ripple_carry(i, t));
      }
    }
    const auto group_generate = cells.lookahead(pg.props, pg.gens, first, last, std::nullopt);
    const auto group_propagate = cells.group_propagate(pg.props, first, last);
    block_carry_raw = nl.add_or({group_generate, nl.add_and({group_propagate, block_carry_raw})});
    block_carry = cells.carry_into(last + 1, block_carry_raw);
  }
  return nl;
}

inline netlist build(const adder_spec& spec) {
  spec.validate();
  switch (spec.kind) {
    case adder_kind::ripple: return build_ripple(spec.width);
    case adder_kind::single_stage: return build_single_stage(spec.width);
    case adder_kind::tree: return build_tree(spec.width);
    case adder_kind::sparse: return build_sparse(spec.width, spec.sparsity);
    case adder_kind::hybrid: return build_hybrid(spec.width, spec.block);
  }
  throw invalid_spec("unknown adder kind");
}

}  // namespace qadd
