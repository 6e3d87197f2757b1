#include "ocvx/vertex_set.hpp"

#include <cassert>

#include "ocvx/error.hpp"

namespace ocvx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::AntiParallelPair: return "AntiParallelPair";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::NotATournament: return "NotATournament";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotCobipartite: return "NotCobipartite";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::ClassNotRecognized: return "ClassNotRecognized";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

VertexSet VertexSet::full(std::size_t domain) {
  VertexSet s(domain);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = domain & 63; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

VertexSet VertexSet::of(std::size_t domain, std::initializer_list<Vertex> vs) {
  return of(domain, std::span<const Vertex>(vs.begin(), vs.size()));
}

VertexSet VertexSet::of(std::size_t domain, std::span<const Vertex> vs) {
  VertexSet s(domain);
  for (const Vertex v : vs) {
    if (v >= domain) {
      throw Error(ErrorCode::InvalidVertex,
                  "vertex " + std::to_string(v) + " outside domain of size " +
                      std::to_string(domain));
    }
    s.insert(v);
  }
  return s;
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t VertexSet::size() const {
  std::size_t n = 0;
  for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const {
  for (const auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(domain_ == other.domain_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(domain_ == other.domain_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(domain_ == other.domain_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(domain_ == other.domain_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(domain_ == other.domain_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(domain_) - *this; }

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::size_t VertexSet::hash() const {
  std::size_t h = domain_;
  for (const auto w : words_) {
    h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace ocvx
