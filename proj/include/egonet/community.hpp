#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egonet/graph.hpp"

namespace egonet {

namespace method {
inline constexpr const char* kNeighborhood = "neighborhood";
inline constexpr const char* kFiedler = "fiedler";
inline constexpr const char* kPpr = "ppr";
inline constexpr const char* kCore = "core";
inline constexpr const char* kWhisker = "whisker";
inline constexpr const char* kSeededPpr = "seeded-ppr";
inline constexpr const char* kSeededCorePpr = "seeded-core-ppr";
}  // namespace method

/// Where a community came from. Unused fields stay empty.
struct Provenance {
  std::optional<Vertex> seed;
  std::optional<double> sigma;
  std::optional<Count> k;
  std::optional<double> multiplier;
};

struct Community {
  std::vector<Vertex> members;  // sorted
  Count cut = 0;
  Count vol = 0;
  std::optional<double> conductance;
  Vertex size = 0;  // min(|S|, n - |S|)
  std::string method;
  Provenance provenance;

  Count internal() const { return vol - cut; }
};

Community make_community(const Graph& g, std::span<const Vertex> members, std::string method,
                         Provenance provenance = {});

/// True when stored cut, volume, size and conductance match a recount.
bool revalidate(const Graph& g, const Community& c);

}  // namespace egonet
