#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cellalg/errors.hpp"

namespace cellalg {

// Finite poset on named cells. Input is a list of strict relations a < b;
// the strict order is their transitive closure, which must be irreflexive.
class CellPoset {
 public:
  CellPoset(std::vector<std::string> labels,
            std::vector<std::pair<std::size_t, std::size_t>> relations)
      : labels_(std::move(labels)), relations_(std::move(relations)) {
    const std::size_t n = labels_.size();
    lt_.assign(n * n, false);
    for (const auto& [a, b] : relations_) {
      if (a >= n || b >= n)
        throw ValidationError("poset: relation index out of range");
      lt_[a * n + b] = true;
    }
    // Warshall
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        if (!lt_[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (lt_[k * n + j]) lt_[i * n + j] = true;
      }
    for (std::size_t i = 0; i < n; ++i)
      if (lt_[i * n + i])
        throw ValidationError("poset: cycle through '" + labels_[i] + "'");
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& relations() const {
    return relations_;
  }

  bool less(std::size_t a, std::size_t b) const {
    return lt_[a * size() + b];
  }
  bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }

  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      bool max = true;
      for (std::size_t j = 0; j < size() && max; ++j)
        if (less(i, j)) max = false;
      if (max) out.push_back(i);
    }
    return out;
  }

  std::vector<std::size_t> minimal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      bool min = true;
      for (std::size_t j = 0; j < size() && min; ++j)
        if (less(j, i)) min = false;
      if (min) out.push_back(i);
    }
    return out;
  }

  CellPoset opposite() const {
    std::vector<std::pair<std::size_t, std::size_t>> rev;
    rev.reserve(relations_.size());
    for (const auto& [a, b] : relations_) rev.emplace_back(b, a);
    return CellPoset(labels_, std::move(rev));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> relations_;
  std::vector<bool> lt_;
};

}  // namespace cellalg
