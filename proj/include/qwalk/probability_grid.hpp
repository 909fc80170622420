#pragma once

#include <cstddef>
#include <map>

#include "qwalk/lattice.hpp"

namespace qwalk {

/// Probabilities P(x, y) over lattice nodes. Nodes absent from the map have
/// probability zero; iteration is sorted by (x, y).
class ProbabilityGrid {
  public:
    using Map = std::map<Node, double>;

    void add(Node node, double p) { values_[node] += p; }
    void set(Node node, double p) { values_[node] = p; }

    double at(Node node) const {
        auto it = values_.find(node);
        return it == values_.end() ? 0.0 : it->second;
    }

    double total() const {
        double sum = 0.0;
        for (const auto& [node, p] : values_) {
            sum += p;
        }
        return sum;
    }

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    const Map& values() const { return values_; }
    Map::const_iterator begin() const { return values_.begin(); }
    Map::const_iterator end() const { return values_.end(); }

    /// Drops entries that are exactly zero.
    void prune_zeros() { std::erase_if(values_, [](const auto& kv) { return kv.second == 0.0; }); }

    bool operator==(const ProbabilityGrid&) const = default;

  private:
    Map values_;
};

}  // namespace qwalk
