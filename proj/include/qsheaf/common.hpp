#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qsheaf {

// Thrown on precondition violations: malformed tables, shape mismatches,
// unknown identifiers. Validation findings are collected in Report instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A list of human-readable invariant violations; empty means valid.
struct Report {
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string issue) { issues.push_back(std::move(issue)); }
  std::string str() const {
    std::string out;
    for (const auto& s : issues) {
      out += s;
      out += '\n';
    }
    return out;
  }
};

// Disjoint-set forest with path compression; used for zigzag quotients.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void merge(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace qsheaf
