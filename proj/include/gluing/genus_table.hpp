#pragma once

#include <map>
#include <utility>

#include <nlohmann/json.hpp>

#include "gluing/composition.hpp"
#include "gluing/exact_int.hpp"

namespace gluing {

/// Exact counts keyed by genus. Absent genus means zero; zero entries are
/// never stored, so equality is value equality.
class GenusTable {
 public:
  GenusTable() = default;
  GenusTable(std::initializer_list<std::pair<const int, ExactInt>> init) {
    for (const auto& [g, v] : init) add(g, v);
  }

  ExactInt operator[](int genus) const {
    auto it = entries_.find(genus);
    return it == entries_.end() ? ExactInt(0) : it->second;
  }

  void add(int genus, const ExactInt& count) {
    if (genus < 0 || count < 0) {
      throw contract_violation("GenusTable: negative genus or count");
    }
    if (count == 0) {
      return;
    }
    entries_[genus] += count;
  }

  GenusTable& operator+=(const GenusTable& other) {
    for (const auto& [g, v] : other.entries_) add(g, v);
    return *this;
  }

  friend GenusTable operator+(GenusTable a, const GenusTable& b) {
    a += b;
    return a;
  }

  ExactInt total() const {
    ExactInt sum = 0;
    for (const auto& [g, v] : entries_) sum += v;
    return sum;
  }

  /// Largest genus with a nonzero count, or -1 if empty.
  int max_genus() const {
    return entries_.empty() ? -1 : entries_.rbegin()->first;
  }

  const std::map<int, ExactInt>& entries() const { return entries_; }

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [g, v] : entries_) j[std::to_string(g)] = v.str();
    return j;
  }

  friend bool operator==(const GenusTable&, const GenusTable&) = default;

 private:
  std::map<int, ExactInt> entries_;
};

/// Counts refined by face-size composition.
using RefinedTable = std::map<Composition, GenusTable>;

}  // namespace gluing
