#pragma once

// JSON envelopes {"kind","m","n","payload"} and text/SVG renderers.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "pasmkit/bijections.hpp"
#include "pasmkit/nest.hpp"

namespace pasmkit {

enum class Kind { kPasm, kTriangle, kCornerSum, kHeight, kFpl, kIce, kIdeal, kNest, kLinkPattern };

[[nodiscard]] std::string_view kind_name(Kind kind) noexcept;
[[nodiscard]] std::optional<Kind> parse_kind(std::string_view name) noexcept;
[[nodiscard]] Kind kind_of(Family family) noexcept;
[[nodiscard]] std::optional<Family> family_of(Kind kind) noexcept;

struct LinkPatternDocument {
  Dims dims;
  PartialLinkPattern pattern;
};

using Document = std::variant<AnyObject, LinkPatternDocument>;

[[nodiscard]] Kind kind_of(const Document& document) noexcept;

/// Malformed JSON or a payload of the wrong shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown kind name, or a conversion that has no target.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] nlohmann::json to_json(const Document& document);

/// Compact JSON with sorted keys and a trailing newline.
[[nodiscard]] std::string serialize(const Document& document);

/// Throws ParseError, UsageError (unknown kind) or InvariantError (payload
/// parses but is not a valid object).
[[nodiscard]] Document parse_document(std::string_view text);

/// Link patterns are a target only: any object converts to the link pattern
/// of its loop configuration, but a link pattern converts to nothing else.
[[nodiscard]] Document convert_document(const Document& document, Kind target);

/// Loop configurations and ice on a character grid ('+' vertices, '-' and '|'
/// edges, arrows for ice), nests as paths on the point lattice, link patterns
/// as nested arcs over the labels, everything else as a number grid.
[[nodiscard]] std::string render_ascii(const Document& document);
[[nodiscard]] std::string render_svg(const Document& document);

}  // namespace pasmkit
