#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace kmcds {

using NodeId = std::uint32_t;

/// Dense bitset over node indices [0, universe). Iteration is ascending.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe);
  NodeSet(std::size_t universe, std::initializer_list<NodeId> members);
  NodeSet(std::size_t universe, const std::vector<NodeId>& members);

  static NodeSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(NodeId v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(NodeId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(NodeId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear();

  NodeSet& operator|=(const NodeSet& o);
  NodeSet& operator&=(const NodeSet& o);
  NodeSet& operator-=(const NodeSet& o);
  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }
  NodeSet complement() const;

  bool is_subset_of(const NodeSet& o) const;
  bool intersects(const NodeSet& o) const;
  std::size_t intersection_size(const NodeSet& o) const;

  /// Smallest member, or universe() when empty.
  NodeId first() const;

  std::vector<NodeId> to_vector() const;
  std::string to_string() const;

  friend bool operator==(const NodeSet& a, const NodeSet& b) = default;

  /// Lexicographic order of the ascending member lists.
  friend bool lex_less(const NodeSet& a, const NodeSet& b);

  class iterator {
   public:
    using value_type = NodeId;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const NodeSet* s, std::size_t word) : set_(s), word_(word) {
      if (set_ != nullptr && word_ < set_->words_.size()) {
        bits_ = set_->words_[word_];
        advance();
      }
    }
    NodeId operator*() const {
      return static_cast<NodeId>(word_ * 64 + std::countr_zero(bits_));
    }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      advance();
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return word_ == o.word_ && bits_ == o.bits_; }

   private:
    void advance() {
      while (bits_ == 0) {
        if (++word_ >= set_->words_.size()) {
          word_ = set_->words_.size();
          return;
        }
        bits_ = set_->words_[word_];
      }
    }
    const NodeSet* set_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const NodeSet& s);

struct NodeSetHash {
  std::size_t operator()(const NodeSet& s) const noexcept;
};

}  // namespace kmcds
