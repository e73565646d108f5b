#pragma once

// Orbit decomposition of a bijective action on a finite carrier.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pasmkit/enumeration.hpp"
#include "pasmkit/loops.hpp"
#include "pasmkit/poset.hpp"

namespace pasmkit {

class NonBijectiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit FNV-1a.
[[nodiscard]] std::uint64_t fnv1a(std::string_view bytes) noexcept;

[[nodiscard]] std::string canonical_key(const OrderIdeal& ideal);
[[nodiscard]] std::string canonical_key(const PartialFpl& fpl);
[[nodiscard]] std::string canonical_key(const Pasm& matrix);

struct Orbit {
  std::size_t size = 0;
  std::uint64_t representative_hash = 0;  // hash of the smallest key in the orbit
  std::size_t representative = 0;         // carrier index of that element
};

struct OrbitReport {
  std::size_t carrier_size = 0;
  std::vector<Orbit> orbits;  // sorted by (size, representative_hash)
  BigInt order = 1;           // lcm of the orbit sizes

  /// Orbit sizes in ascending order.
  [[nodiscard]] std::vector<std::size_t> sizes() const;
  /// size -> number of orbits of that size.
  [[nodiscard]] std::map<std::size_t, std::size_t> histogram() const;
};

/// image[k] is the carrier index of action(carrier[k]). The parallel and
/// serial builders must agree.
[[nodiscard]] std::vector<std::size_t> build_image(std::size_t count,
                                                   const std::function<std::size_t(std::size_t)>& image_of,
                                                   Execution execution);

/// Throws NonBijectiveError if some index is hit twice.
[[nodiscard]] OrbitReport orbit_report_from_image(const std::vector<std::size_t>& image,
                                                  const std::vector<std::string>& keys);

inline constexpr std::size_t kNotInCarrier = static_cast<std::size_t>(-1);

template <class T, class Action>
OrbitReport orbit_report(const std::vector<T>& carrier, Action&& action,
                         Execution execution = Execution::kParallel) {
  std::vector<std::string> keys;
  keys.reserve(carrier.size());
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(carrier.size());
  for (std::size_t k = 0; k < carrier.size(); ++k) {
    keys.push_back(canonical_key(carrier[k]));
    if (!index.emplace(keys.back(), k).second) throw NonBijectiveError("carrier contains a duplicate element");
  }
  const auto image = build_image(
      carrier.size(),
      [&](std::size_t k) {
        const auto found = index.find(canonical_key(action(carrier[k])));
        return found == index.end() ? kNotInCarrier : found->second;
      },
      execution);
  return orbit_report_from_image(image, keys);
}

enum class OrbitAction { kRowmotion, kGyr, kGyration };

/// Rowmotion and Gyr act on J(P(m,n)); gyration acts on partial fully-packed
/// loop configurations.
[[nodiscard]] OrbitReport orbit_report(Dims dims, OrbitAction action, Execution execution = Execution::kParallel);

}  // namespace pasmkit
