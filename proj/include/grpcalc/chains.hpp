#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grpcalc/coset_enum.hpp"
#include "grpcalc/errors.hpp"
#include "grpcalc/words.hpp"

namespace grpcalc {

inline constexpr std::size_t kDefaultChainDepth = 3;
inline constexpr std::size_t kDefaultMaxIndex = 100'000;

/// G -> (F_p)^d, the largest elementary abelian p-quotient.
struct ModPQuotient {
  std::uint64_t p = 0;
  std::size_t dimension = 0;
  /// images[g] is the image of generator g, a vector of length `dimension`.
  std::vector<std::vector<std::uint64_t>> images;
};

ModPQuotient mod_p_quotient_map(const Presentation& p, std::uint64_t prime);

struct ChainLevel {
  std::size_t depth = 0;
  std::size_t index_in_g = 0;
  /// Action of G on G/H_depth; subgroup words generate H_depth.
  CosetTable table;
  SubgroupPresentation subgroup;
};

enum class Truncation { none, depth_cap, index_cap, stabilized };
std::string to_string(Truncation t);

struct Chain {
  /// Prime of the derived p-series; nullopt for a user-supplied chain.
  std::optional<std::uint64_t> p;
  std::vector<ChainLevel> levels;
  Truncation truncation = Truncation::none;
  std::string reason;
};

class IndexCapExceeded : public CapExceeded {
 public:
  IndexCapExceeded(const std::string& index, std::size_t cap)
      : CapExceeded("IndexCapExceeded",
                    "next chain level has index " + index + " > max_index " + std::to_string(cap)) {}
};

/// The step found no p-quotient: [H,H]H^p = H.
class Stabilized : public Error {
 public:
  explicit Stabilized(std::size_t depth)
      : Error("Stabilized", "derived p-series stabilizes after depth " + std::to_string(depth)) {}
};

/// Level 0: G acting on the single coset G/G.
ChainLevel base_level(const Presentation& g);

/// H_{n+1} = [H_n,H_n] H_n^p from H_n = previous.subgroup. The new table is
/// built by translation: coset H_{n+1} h t_c <-> (c, image of h), and
/// g acts by (c, v) -> (c.g, v + image(x_{c,g})).
ChainLevel next_level(const Presentation& g, const ChainLevel& previous, std::uint64_t prime,
                      std::size_t max_index = kDefaultMaxIndex);

/// First level of the derived p-series: K = [G,G]G^p.
ChainLevel step(const Presentation& g, std::uint64_t prime, std::size_t max_index = kDefaultMaxIndex);

Chain derived_p_chain(const Presentation& g, std::uint64_t prime, std::size_t depth = kDefaultChainDepth,
                      std::size_t max_index = kDefaultMaxIndex);

/// A chain from user-supplied subgroup generators, one set per level,
/// enumerated by Todd-Coxeter. Levels must be nested and normal; throws
/// InputError otherwise.
Chain explicit_chain(const Presentation& g, const std::vector<std::vector<Word>>& subgroups,
                     std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace grpcalc
