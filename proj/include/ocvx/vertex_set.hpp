#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ocvx {

using Vertex = std::size_t;

/// Dense bitmap over the vertex indices 0..domain-1 of one graph.
///
/// Binary operations require both operands to share the same domain.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t domain)
      : domain_(domain), words_((domain + 63) / 64, 0) {}

  static VertexSet full(std::size_t domain);
  static VertexSet of(std::size_t domain, std::initializer_list<Vertex> vs);
  static VertexSet of(std::size_t domain, std::span<const Vertex> vs);

  std::size_t domain() const { return domain_; }

  bool contains(Vertex v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear();

  std::size_t size() const;
  bool empty() const;
  bool is_full() const { return size() == domain_; }

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const = default;

  /// Complement within the domain.
  VertexSet complement() const;

  std::vector<Vertex> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t hash() const;

 private:
  std::size_t domain_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace ocvx
