#include "kmcds/node_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace kmcds {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

NodeSet::NodeSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

NodeSet::NodeSet(std::size_t universe, std::initializer_list<NodeId> members) : NodeSet(universe) {
  for (NodeId v : members) insert(v);
}

NodeSet::NodeSet(std::size_t universe, const std::vector<NodeId>& members) : NodeSet(universe) {
  for (NodeId v : members) insert(v);
}

NodeSet NodeSet::full(std::size_t universe) {
  NodeSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

std::size_t NodeSet::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool NodeSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void NodeSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

NodeSet& NodeSet::operator|=(const NodeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

NodeSet& NodeSet::operator-=(const NodeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

NodeSet NodeSet::complement() const { return full(universe_) - *this; }

bool NodeSet::is_subset_of(const NodeSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~o.words_[i]) != 0) return false;
  }
  return true;
}

bool NodeSet::intersects(const NodeSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & o.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t NodeSet::intersection_size(const NodeSet& o) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
  }
  return c;
}

NodeId NodeSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<NodeId>(i * 64 + std::countr_zero(words_[i]));
  }
  return static_cast<NodeId>(universe_);
}

NodeSet::iterator NodeSet::end() const {
  return iterator(this, words_.size());
}

std::vector<NodeId> NodeSet::to_vector() const {
  std::vector<NodeId> out;
  out.reserve(size());
  for (NodeId v : *this) out.push_back(v);
  return out;
}

std::string NodeSet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool lex_less(const NodeSet& a, const NodeSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  const auto ea = a.end();
  const auto eb = b.end();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == ea && ib != eb;
}

std::ostream& operator<<(std::ostream& os, const NodeSet& s) {
  os << '{';
  bool first = true;
  for (NodeId v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

std::size_t NodeSetHash::operator()(const NodeSet& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : s.words()) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace kmcds
