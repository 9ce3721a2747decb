#include "egonet/community.hpp"

#include <algorithm>
#include <stdexcept>

#include "egonet/profile.hpp"

namespace egonet {

Community make_community(const Graph& g, std::span<const Vertex> members, std::string method,
                         Provenance provenance) {
  auto s = set_metrics(g, members);
  Community c;
  c.cut = s.cut;
  c.vol = s.vol;
  c.conductance = conductance(s, g);
  c.size = smaller_side(s.members.size(), g.num_vertices());
  c.members = std::move(s.members);
  c.method = std::move(method);
  c.provenance = provenance;
  return c;
}

bool revalidate(const Graph& g, const Community& c) {
  auto s = set_metrics(g, c.members);
  return s.members == c.members && s.cut == c.cut && s.vol == c.vol &&
         conductance(s, g) == c.conductance &&
         smaller_side(s.members.size(), g.num_vertices()) == c.size;
}

GraphFingerprint GraphFingerprint::of(const Graph& g) {
  // FNV-1a over the degree sequence
  std::uint64_t h = 14695981039346656037ull;
  for (Count d : g.degrees()) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (d >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return {g.num_vertices(), g.num_edges(), h};
}

CommunityProfile::CommunityProfile(const Graph& g)
    : fingerprint_(GraphFingerprint::of(g)),
      dmax_marker_(g.max_degree() + 1),
      half_marker_(g.num_vertices() / 2) {}

bool better_community(const Community& a, const Community& b) {
  if (a.conductance != b.conductance) {
    if (!a.conductance) return false;
    if (!b.conductance) return true;
    return *a.conductance < *b.conductance;
  }
  if (a.method != b.method) return a.method < b.method;
  if (a.cut != b.cut) return a.cut < b.cut;
  return a.members < b.members;
}

bool CommunityProfile::fold(const Community& c) {
  if (!c.conductance || c.size == 0) return false;
  auto [it, inserted] = records_.try_emplace(c.size, c);
  if (inserted) return true;
  if (better_community(c, it->second)) {
    it->second = c;
    return true;
  }
  return false;
}

void CommunityProfile::fold(std::span<const Community> cs) {
  for (const auto& c : cs) fold(c);
}

void CommunityProfile::merge(const CommunityProfile& other) {
  if (fingerprint_ && other.fingerprint_ && !(*fingerprint_ == *other.fingerprint_)) {
    throw std::invalid_argument("cannot merge community profiles of different graphs");
  }
  if (!fingerprint_) {
    fingerprint_ = other.fingerprint_;
    dmax_marker_ = other.dmax_marker_;
    half_marker_ = other.half_marker_;
  }
  for (const auto& [size, c] : other.records_) fold(c);
}

const Community* CommunityProfile::best() const {
  const Community* out = nullptr;
  for (const auto& [size, c] : records_) {
    if (out == nullptr || *c.conductance < *out->conductance) out = &c;
  }
  return out;
}

CommunityProfile CommunityProfile::filtered(std::span<const std::string> methods) const {
  CommunityProfile out = *this;
  std::erase_if(out.records_, [&](const auto& entry) {
    return std::find(methods.begin(), methods.end(), entry.second.method) == methods.end();
  });
  return out;
}

CommunityProfile merge_profiles(std::span<const CommunityProfile> profiles) {
  CommunityProfile out;
  for (const auto& p : profiles) out.merge(p);
  return out;
}

}  // namespace egonet
