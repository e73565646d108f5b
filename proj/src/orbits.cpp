#include "pasmkit/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "pasmkit/bijections.hpp"
#include "pasmkit/gyration.hpp"

namespace pasmkit {

std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

namespace {

template <class Bytes>
std::string as_string(const Bytes& bytes) {
  std::string out;
  out.reserve(bytes.size());
  for (auto b : bytes) out.push_back(static_cast<char>(b));
  return out;
}

}  // namespace

std::string canonical_key(const OrderIdeal& ideal) { return as_string(ideal.key()); }
std::string canonical_key(const PartialFpl& fpl) { return as_string(fpl.key()); }
std::string canonical_key(const Pasm& matrix) { return as_string(matrix.entries()); }

std::vector<std::size_t> OrbitReport::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(orbits.size());
  for (const auto& o : orbits) out.push_back(o.size);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::size_t, std::size_t> OrbitReport::histogram() const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& o : orbits) ++out[o.size];
  return out;
}

std::vector<std::size_t> build_image(std::size_t count, const std::function<std::size_t(std::size_t)>& image_of,
                                     Execution execution) {
  std::vector<std::size_t> image(count);
  if (execution == Execution::kSerial) {
    for (std::size_t k = 0; k < count; ++k) image[k] = image_of(k);
    return image;
  }
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < total; ++k) image[k] = image_of(static_cast<std::size_t>(k));
  return image;
}

OrbitReport orbit_report_from_image(const std::vector<std::size_t>& image, const std::vector<std::string>& keys) {
  const std::size_t count = image.size();
  std::vector<std::uint8_t> hit(count, 0);
  for (std::size_t k = 0; k < count; ++k) {
    if (image[k] == kNotInCarrier || image[k] >= count) {
      throw NonBijectiveError("action maps carrier element " + std::to_string(k) + " outside the carrier");
    }
    if (hit[image[k]]++) {
      throw NonBijectiveError("action is not injective: element " + std::to_string(image[k]) + " has two preimages");
    }
  }

  OrbitReport report;
  report.carrier_size = count;
  std::vector<std::uint8_t> seen(count, 0);
  for (std::size_t start = 0; start < count; ++start) {
    if (seen[start]) continue;
    Orbit orbit;
    orbit.representative = start;
    for (std::size_t k = start; !seen[k]; k = image[k]) {
      seen[k] = 1;
      ++orbit.size;
      if (keys[k] < keys[orbit.representative]) orbit.representative = k;
    }
    orbit.representative_hash = fnv1a(keys[orbit.representative]);
    report.orbits.push_back(orbit);
  }
  std::sort(report.orbits.begin(), report.orbits.end(), [](const Orbit& a, const Orbit& b) {
    return std::tie(a.size, a.representative_hash) < std::tie(b.size, b.representative_hash);
  });
  for (const auto& o : report.orbits) {
    report.order = boost::multiprecision::lcm(report.order, BigInt(o.size));
  }
  return report;
}

OrbitReport orbit_report(Dims dims, OrbitAction action, Execution execution) {
  dims = Dims::checked(dims.m, dims.n);
  const PasmPoset poset(dims);
  const auto ideals = all_ideals(dims);
  switch (action) {
    case OrbitAction::kRowmotion:
      return orbit_report(ideals, [&](const OrderIdeal& x) { return rowmotion(poset, x); }, execution);
    case OrbitAction::kGyr:
      return orbit_report(ideals, [&](const OrderIdeal& x) { return gyr(poset, x); }, execution);
    case OrbitAction::kGyration: {
      std::vector<PartialFpl> loops;
      loops.reserve(ideals.size());
      for (const auto& x : ideals) loops.push_back(height_to_fpl(ideal_to_height(x)));
      return orbit_report(loops, [](const PartialFpl& f) { return gyrate(f); }, execution);
    }
  }
  throw std::logic_error("unknown orbit action");
}

}  // namespace pasmkit
