#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sbvs/error.hpp"

namespace sbvs {

using Vertex = std::uint32_t;

/// Subset of the fixed universe {0, ..., universe-1}, stored as a bitset.
/// Iteration is always in ascending vertex order.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + word_bits - 1) / word_bits) {}

  VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (auto v : members) insert(v);
  }
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(Vertex v) {
    check(v);
    words_[v / word_bits] |= Word{1} << (v % word_bits);
  }
  void erase(Vertex v) {
    check(v);
    words_[v / word_bits] &= ~(Word{1} << (v % word_bits));
  }
  bool contains(Vertex v) const {
    return v < universe_ && (words_[v / word_bits] >> (v % word_bits) & 1U) != 0;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Smallest member, or universe() when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return static_cast<Vertex>(i * word_bits + std::countr_zero(words_[i]));
    }
    return static_cast<Vertex>(universe_);
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (Word w = words_[i]; w != 0; w &= w - 1) {
        fn(static_cast<Vertex>(i * word_bits + std::countr_zero(w)));
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on the ascending member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto x = a.members();
    const auto y = b.members();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  void check(Vertex v) const {
    if (v >= universe_) {
      throw precondition_error("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    }
  }
  void same_universe(const VertexSet& other) const {
    if (other.universe_ != universe_) throw precondition_error("vertex sets over different universes");
  }
  void trim() {
    if (universe_ % word_bits != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (universe_ % word_bits)) - 1;
    }
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace sbvs
