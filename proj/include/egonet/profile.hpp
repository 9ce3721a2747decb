#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "egonet/community.hpp"
#include "egonet/graph.hpp"

namespace egonet {

/// Identifies the graph a profile was computed on: (n, m, degree-sequence
/// hash). Merging profiles with different fingerprints is an error.
struct GraphFingerprint {
  Vertex n = 0;
  Count m = 0;
  std::uint64_t degree_hash = 0;

  static GraphFingerprint of(const Graph& g);
  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

/// Best community per size (the network community profile).
///
/// Sizes use the smaller side of the cut. Communities whose conductance is
/// undefined are never folded in.
class CommunityProfile {
 public:
  CommunityProfile() = default;
  explicit CommunityProfile(const Graph& g);

  /// Keeps `c` if it beats the current entry at its size. Returns true if kept.
  bool fold(const Community& c);
  void fold(std::span<const Community> cs);

  /// Pointwise minimum; throws std::invalid_argument on a fingerprint mismatch.
  void merge(const CommunityProfile& other);

  const std::map<Vertex, Community>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }

  const std::optional<GraphFingerprint>& fingerprint() const { return fingerprint_; }
  /// Largest possible neighborhood size, dmax + 1.
  Count max_degree_marker() const { return dmax_marker_; }
  Vertex half_size_marker() const { return half_marker_; }

  /// Entry with the smallest conductance (ties to the smallest size).
  const Community* best() const;

  /// Entries restricted to methods in `methods`.
  CommunityProfile filtered(std::span<const std::string> methods) const;

 private:
  std::optional<GraphFingerprint> fingerprint_;
  Count dmax_marker_ = 0;
  Vertex half_marker_ = 0;
  std::map<Vertex, Community> records_;
};

/// Strict total order used to pick profile winners: conductance, then method,
/// then cut, then members. Makes merge commutative.
bool better_community(const Community& a, const Community& b);

CommunityProfile merge_profiles(std::span<const CommunityProfile> profiles);

}  // namespace egonet
