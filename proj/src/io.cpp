#include "pasmkit/io.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "pasmkit/gyration.hpp"

namespace pasmkit {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 9> kKindNames = {"pasm", "triangle", "corner_sum", "height",      "fpl",
                                                        "ice",  "ideal",    "nest",       "link_pattern"};

const char* axis_name(Axis axis) { return axis == Axis::kHorizontal ? "H" : "V"; }

}  // namespace

std::string_view kind_name(Kind kind) noexcept { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<Kind> parse_kind(std::string_view name) noexcept {
  for (std::size_t k = 0; k < kKindNames.size(); ++k)
    if (kKindNames[k] == name) return static_cast<Kind>(k);
  return std::nullopt;
}

Kind kind_of(Family family) noexcept { return static_cast<Kind>(family); }

std::optional<Family> family_of(Kind kind) noexcept {
  if (kind == Kind::kLinkPattern) return std::nullopt;
  return static_cast<Family>(kind);
}

Kind kind_of(const Document& document) noexcept {
  if (const auto* object = std::get_if<AnyObject>(&document)) return kind_of(family_of(*object));
  return Kind::kLinkPattern;
}

// ---------------------------------------------------------------------------

namespace {

json payload_of(const AnyObject& object) {
  switch (family_of(object)) {
    case Family::kPasm: return std::get<Pasm>(object).rows();
    case Family::kTriangle: return std::get<PartialMonotoneTriangle>(object).rows();
    case Family::kCornerSum: return std::get<CornerSumMatrix>(object).rows();
    case Family::kHeight: return std::get<PartialHeightFunction>(object).rows();
    case Family::kFpl: {
      json edges = json::array();
      for (const auto& e : std::get<PartialFpl>(object).edges()) edges.push_back({axis_name(e.axis), e.i, e.j});
      return edges;
    }
    case Family::kIce: {
      const auto& ice = std::get<RectIce>(object);
      const Grid grid(ice.dims());
      std::vector<Edge> all;
      for (int k = 0; k < grid.edge_count(); ++k) all.push_back(grid.edge_at(k));
      std::sort(all.begin(), all.end());
      json edges = json::array();
      for (const auto& e : all) edges.push_back({axis_name(e.axis), e.i, e.j, ice.points_high(e) ? 1 : 0});
      return edges;
    }
    case Family::kIdeal: return std::get<OrderIdeal>(object).rows();
    case Family::kNest: {
      json paths = json::array();
      for (const auto& p : std::get<OsculatingNest>(object).paths())
        paths.push_back({{"start_row", p.start_row}, {"steps", p.steps}});
      return paths;
    }
  }
  return nullptr;
}

}  // namespace

json to_json(const Document& document) {
  json out;
  out["kind"] = kind_name(kind_of(document));
  if (const auto* object = std::get_if<AnyObject>(&document)) {
    const Dims dims = dims_of(*object);
    out["m"] = dims.m;
    out["n"] = dims.n;
    out["payload"] = payload_of(*object);
  } else {
    const auto& link = std::get<LinkPatternDocument>(document);
    out["m"] = link.dims.m;
    out["n"] = link.dims.n;
    json arcs = json::array();
    for (const auto& [a, b] : link.pattern.arcs()) arcs.push_back({a, b});
    out["payload"] = arcs;
  }
  return out;
}

std::string serialize(const Document& document) { return to_json(document).dump() + "\n"; }

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

int as_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) fail(what + " must be an integer");
  return value.get<int>();
}

std::vector<std::vector<int>> int_grid(const json& payload, std::size_t rows, std::size_t columns,
                                       const std::string& what) {
  if (!payload.is_array() || payload.size() != rows) fail(what + " must have " + std::to_string(rows) + " rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : payload) {
    if (!row.is_array() || row.size() != columns) {
      fail(what + " rows must have " + std::to_string(columns) + " entries");
    }
    std::vector<int> values;
    for (const auto& v : row) values.push_back(as_int(v, what + " entry"));
    out.push_back(std::move(values));
  }
  return out;
}

Axis parse_axis(const json& value) {
  if (value == "H") return Axis::kHorizontal;
  if (value == "V") return Axis::kVertical;
  fail("edge axis must be \"H\" or \"V\"");
}

AnyObject parse_object(Family family, Dims dims, const json& payload) {
  const auto m = static_cast<std::size_t>(dims.m);
  const auto n = static_cast<std::size_t>(dims.n);
  switch (family) {
    case Family::kPasm: {
      std::vector<std::int8_t> entries;
      for (const auto& row : int_grid(payload, m, n, "pasm payload"))
        for (int v : row) entries.push_back(static_cast<std::int8_t>(std::clamp(v, -2, 2)));
      return Pasm(dims, std::move(entries));
    }
    case Family::kTriangle: {
      if (!payload.is_array() || payload.size() != m) fail("triangle payload must have m rows");
      std::vector<std::vector<int>> rows;
      for (const auto& row : payload) {
        if (!row.is_array()) fail("triangle rows must be arrays");
        std::vector<int> values;
        for (const auto& v : row) values.push_back(as_int(v, "triangle entry"));
        rows.push_back(std::move(values));
      }
      return PartialMonotoneTriangle(dims, std::move(rows));
    }
    case Family::kCornerSum: return CornerSumMatrix(dims, int_grid(payload, m + 1, n + 1, "corner_sum payload"));
    case Family::kHeight: return PartialHeightFunction(dims, int_grid(payload, m + 1, n + 1, "height payload"));
    case Family::kFpl: {
      if (!payload.is_array()) fail("fpl payload must be an edge list");
      std::vector<Edge> edges;
      for (const auto& e : payload) {
        if (!e.is_array() || e.size() != 3) fail("fpl edges must be [axis, i, j]");
        edges.push_back({parse_axis(e[0]), as_int(e[1], "edge row"), as_int(e[2], "edge column")});
      }
      if (std::set<Edge>(edges.begin(), edges.end()).size() != edges.size()) fail("fpl edge listed twice");
      return PartialFpl::from_edges(dims, edges);
    }
    case Family::kIce: {
      if (!payload.is_array()) fail("ice payload must be an edge list");
      const Grid grid(dims);
      std::vector<std::uint8_t> bits(grid.edge_count(), 0);
      std::vector<std::uint8_t> seen(grid.edge_count(), 0);
      for (const auto& e : payload) {
        if (!e.is_array() || e.size() != 4) fail("ice edges must be [axis, i, j, head_bit]");
        const Edge edge{parse_axis(e[0]), as_int(e[1], "edge row"), as_int(e[2], "edge column")};
        if (!grid.contains(edge)) fail("edge " + edge.to_string() + " is not in the grid");
        const int bit = as_int(e[3], "head bit");
        if (bit != 0 && bit != 1) fail("head bit must be 0 or 1");
        const int k = grid.index_of(edge);
        if (seen[k]++) fail("ice edge listed twice");
        bits[k] = static_cast<std::uint8_t>(bit);
      }
      if (std::find(seen.begin(), seen.end(), 0) != seen.end()) fail("ice payload must orient every edge");
      return RectIce(dims, std::move(bits));
    }
    case Family::kIdeal: {
      std::vector<std::uint8_t> heights;
      for (const auto& row : int_grid(payload, m, n, "ideal payload")) {
        for (int v : row) {
          if (v < 0 || v > 255) fail("ideal heights must be small non-negative integers");
          heights.push_back(static_cast<std::uint8_t>(v));
        }
      }
      return OrderIdeal(dims, std::move(heights));
    }
    case Family::kNest: {
      if (!payload.is_array()) fail("nest payload must be a list of paths");
      std::vector<LatticePath> paths;
      for (const auto& p : payload) {
        if (!p.is_object() || !p.contains("start_row") || !p.contains("steps") || !p["steps"].is_string()) {
          fail("nest paths must be {\"start_row\": int, \"steps\": string}");
        }
        paths.push_back({as_int(p["start_row"], "start_row"), p["steps"].get<std::string>()});
      }
      return OsculatingNest(dims, std::move(paths));
    }
  }
  fail("unknown family");
}

LinkPatternDocument parse_link_pattern(Dims dims, const json& payload) {
  if (!payload.is_array()) fail("link_pattern payload must be a list of arcs");
  std::vector<std::pair<int, int>> arcs;
  for (const auto& arc : payload) {
    if (!arc.is_array() || arc.size() != 2) fail("arcs must be [a, b]");
    arcs.emplace_back(as_int(arc[0], "arc label"), as_int(arc[1], "arc label"));
  }
  return {dims, PartialLinkPattern(PartialLinkPattern::label_count_for(dims), std::move(arcs))};
}

}  // namespace

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("envelope must be a JSON object");
  for (const char* field : {"kind", "m", "n", "payload"})
    if (!root.contains(field)) fail(std::string("envelope is missing \"") + field + "\"");
  if (!root["kind"].is_string()) fail("kind must be a string");
  const auto kind = parse_kind(root["kind"].get<std::string>());
  if (!kind) throw UsageError("unknown kind \"" + root["kind"].get<std::string>() + "\"");

  Document document = [&]() -> Document {
    try {
      const Dims dims = Dims::checked(as_int(root["m"], "m"), as_int(root["n"], "n"));
      if (*kind == Kind::kLinkPattern) return parse_link_pattern(dims, root["payload"]);
      return parse_object(*family_of(*kind), dims, root["payload"]);
    } catch (const StructuralError& e) {
      throw ParseError(e.what());
    } catch (const json::exception& e) {
      throw ParseError(e.what());
    }
  }();

  if (const auto* object = std::get_if<AnyObject>(&document)) {
    require(validate(*object));
  } else {
    require(validate(std::get<LinkPatternDocument>(document).pattern));
  }
  return document;
}

Document convert_document(const Document& document, Kind target) {
  const auto* object = std::get_if<AnyObject>(&document);
  if (object == nullptr) {
    if (target == Kind::kLinkPattern) return document;
    throw UsageError("a link pattern cannot be converted to " + std::string(kind_name(target)));
  }
  if (target == Kind::kLinkPattern) {
    const auto fpl = std::get<PartialFpl>(convert(*object, Family::kFpl));
    return LinkPatternDocument{fpl.dims(), link_pattern(fpl)};
  }
  return convert(*object, *family_of(target));
}

// ---------------------------------------------------------------------------

namespace {

// A character canvas indexed (row, column), trimmed on output.
class Canvas {
 public:
  Canvas(int rows, int columns) : lines_(rows, std::string(columns, ' ')) {}

  void put(int row, int column, char c) { lines_.at(row).at(column) = c; }
  void write(int row, int column, std::string_view text) {
    for (std::size_t k = 0; k < text.size(); ++k) put(row, column + static_cast<int>(k), text[k]);
  }

  [[nodiscard]] std::string str() const {
    std::string out;
    for (auto line : lines_) {
      line.erase(line.find_last_not_of(' ') + 1);
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::string> lines_;
};

constexpr int kCell = 4;

std::string ascii_edges(Dims dims, const std::function<std::string(Edge)>& glyph) {
  const Grid grid(dims);
  Canvas canvas(2 * (dims.m + 1) + 1, kCell * (dims.n + 1) + 1);
  for (int i = 0; i <= dims.m + 1; ++i)
    for (int j = 0; j <= dims.n + 1; ++j)
      if (grid.contains(Vertex{i, j})) canvas.put(2 * i, kCell * j, '+');
  for (int k = 0; k < grid.edge_count(); ++k) {
    const Edge e = grid.edge_at(k);
    const std::string g = glyph(e);
    if (g.empty()) continue;
    if (e.axis == Axis::kHorizontal) {
      canvas.write(2 * e.i, kCell * e.j + 1, g);
    } else {
      canvas.put(2 * e.i + 1, kCell * e.j, g[0]);
    }
  }
  return canvas.str();
}

std::string ascii_numbers(const std::vector<std::vector<int>>& rows, bool staggered) {
  std::size_t width = 1;
  for (const auto& row : rows)
    for (int v : row) width = std::max(width, std::to_string(v).size());
  std::ostringstream out;
  const std::size_t longest = rows.empty() ? 0 : rows.back().size();
  for (const auto& row : rows) {
    std::string line;
    if (staggered) line.append((longest - row.size()) * (width + 1) / 2, ' ');
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::string v = std::to_string(row[k]);
      if (k > 0) line += ' ';
      line.append(width - v.size(), ' ');
      line += v;
    }
    out << line << "\n";
  }
  return out.str();
}

std::string ascii_nest(const OsculatingNest& nest) {
  const auto [m, n] = nest.dims();
  Canvas canvas(2 * m - 1, kCell * (n - 1) + 1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) canvas.put(2 * (i - 1), kCell * (j - 1), '+');
  for (const auto& path : nest.paths()) {
    const auto points = path.points();
    for (std::size_t k = 1; k < points.size(); ++k) {
      const auto [i, j] = points[k - 1];
      if (path.steps[k - 1] == 'E') {
        canvas.write(2 * (i - 1), kCell * (j - 1) + 1, "---");
      } else {
        canvas.put(2 * (i - 1) + 1, kCell * (j - 1), '|');
      }
    }
  }
  return canvas.str();
}

// Nesting depth of each arc: 1 + the deepest arc strictly inside it.
std::vector<int> arc_levels(const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> level(arcs.size(), 1);
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return arcs[x].second - arcs[x].first < arcs[y].second - arcs[y].first;
  });
  for (std::size_t x : order)
    for (std::size_t y : order)
      if (arcs[x].first < arcs[y].first && arcs[y].second < arcs[x].second) level[x] = std::max(level[x], level[y] + 1);
  return level;
}

std::string ascii_link_pattern(const PartialLinkPattern& pattern) {
  const auto& arcs = pattern.arcs();
  const auto levels = arc_levels(arcs);
  const int top = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
  const int labels = pattern.label_count();
  const int width = std::max(1, kCell * (labels - 1) + 3);
  Canvas canvas(top + 1, width);
  auto column = [](int label) { return kCell * (label - 1); };
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto [a, b] = arcs[k];
    const int row = top - levels[k];
    for (int c = column(a); c <= column(b); ++c) canvas.put(row, c, '-');
    canvas.put(row, column(a), '+');
    canvas.put(row, column(b), '+');
    for (int r = row + 1; r < top; ++r) {
      canvas.put(r, column(a), '|');
      canvas.put(r, column(b), '|');
    }
  }
  for (int label = 1; label <= labels; ++label) canvas.write(top, column(label), std::to_string(label));
  return canvas.str();
}

}  // namespace

std::string render_ascii(const Document& document) {
  if (const auto* link = std::get_if<LinkPatternDocument>(&document)) return ascii_link_pattern(link->pattern);
  const auto& object = std::get<AnyObject>(document);
  switch (family_of(object)) {
    case Family::kPasm: return ascii_numbers(std::get<Pasm>(object).rows(), false);
    case Family::kTriangle: return ascii_numbers(std::get<PartialMonotoneTriangle>(object).rows(), true);
    case Family::kCornerSum: return ascii_numbers(std::get<CornerSumMatrix>(object).rows(), false);
    case Family::kHeight: return ascii_numbers(std::get<PartialHeightFunction>(object).rows(), false);
    case Family::kIdeal: return ascii_numbers(std::get<OrderIdeal>(object).rows(), false);
    case Family::kFpl: {
      const auto& fpl = std::get<PartialFpl>(object);
      return ascii_edges(fpl.dims(), [&](Edge e) -> std::string {
        if (!fpl.has(e)) return "";
        return e.axis == Axis::kHorizontal ? "---" : "|";
      });
    }
    case Family::kIce: {
      const auto& ice = std::get<RectIce>(object);
      return ascii_edges(ice.dims(), [&](Edge e) -> std::string {
        if (e.axis == Axis::kHorizontal) return ice.points_high(e) ? "->-" : "-<-";
        return ice.points_high(e) ? "v" : "^";
      });
    }
    case Family::kNest: return ascii_nest(std::get<OsculatingNest>(object));
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kUnit = 40;
constexpr int kMargin = 20;

class Svg {
 public:
  Svg(int width, int height) : width_(width), height_(height) {}

  void line(int x1, int y1, int x2, int y2, std::string_view extra = "") {
    body_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\" stroke=\"black\" stroke-width=\"3\"" << extra << "/>\n";
  }
  void dot(int x, int y) { body_ << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"black\"/>\n"; }
  void text(int x, int y, std::string_view s) {
    body_ << "<text x=\"" << x << "\" y=\"" << y
          << "\" font-family=\"monospace\" font-size=\"16\" text-anchor=\"middle\">" << s << "</text>\n";
  }
  void arc(int x1, int x2, int y) {
    const int r = (x2 - x1) / 2;
    body_ << "<path d=\"M " << x1 << " " << y << " A " << r << " " << r << " 0 0 1 " << x2 << " " << y
          << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\"" << height_
        << "\" viewBox=\"0 0 " << width_ << " " << height_ << "\">\n"
        << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"4\" refY=\"4\" "
           "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  int width_;
  int height_;
  std::ostringstream body_;
};

int px(int k) { return kMargin + kUnit * k; }

std::string svg_edges(Dims dims, const std::function<bool(Edge)>& drawn, const std::function<int(Edge)>& arrow) {
  const Grid grid(dims);
  Svg svg(2 * kMargin + kUnit * (dims.n + 1), 2 * kMargin + kUnit * (dims.m + 1));
  for (int k = 0; k < grid.edge_count(); ++k) {
    const Edge e = grid.edge_at(k);
    if (!drawn(e)) continue;
    Vertex from = e.low();
    Vertex to = e.high();
    const int direction = arrow(e);
    if (direction < 0) std::swap(from, to);
    svg.line(px(from.j), px(from.i), px(to.j), px(to.i), direction != 0 ? " marker-end=\"url(#head)\"" : "");
  }
  for (int i = 0; i <= dims.m + 1; ++i)
    for (int j = 0; j <= dims.n + 1; ++j)
      if (grid.contains(Vertex{i, j})) svg.dot(px(j), px(i));
  return svg.str();
}

std::string svg_numbers(const std::vector<std::vector<int>>& rows) {
  const std::size_t columns = rows.empty() ? 0 : std::max_element(rows.begin(), rows.end(), [](auto& a, auto& b) {
                                                   return a.size() < b.size();
                                                 })->size();
  Svg svg(2 * kMargin + kUnit * static_cast<int>(columns), 2 * kMargin + kUnit * static_cast<int>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      svg.text(px(static_cast<int>(c)) + kUnit / 2, px(static_cast<int>(r)) + kUnit / 2, std::to_string(rows[r][c]));
  return svg.str();
}

std::string svg_nest(const OsculatingNest& nest) {
  const auto [m, n] = nest.dims();
  Svg svg(2 * kMargin + kUnit * (n - 1), 2 * kMargin + kUnit * (m - 1));
  for (const auto& path : nest.paths()) {
    const auto points = path.points();
    for (std::size_t k = 1; k < points.size(); ++k)
      svg.line(px(points[k - 1].second - 1), px(points[k - 1].first - 1), px(points[k].second - 1),
               px(points[k].first - 1));
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) svg.dot(px(j - 1), px(i - 1));
  return svg.str();
}

std::string svg_link_pattern(const PartialLinkPattern& pattern) {
  const int labels = pattern.label_count();
  const int baseline = kMargin + kUnit * std::max(1, labels / 2 + 1);
  Svg svg(2 * kMargin + kUnit * std::max(0, labels - 1), baseline + kMargin + kUnit / 2);
  for (const auto& [a, b] : pattern.arcs()) svg.arc(px(b - 1), px(a - 1), baseline);
  for (int label = 1; label <= labels; ++label) {
    svg.dot(px(label - 1), baseline);
    svg.text(px(label - 1), baseline + kUnit / 2, std::to_string(label));
  }
  return svg.str();
}

}  // namespace

std::string render_svg(const Document& document) {
  if (const auto* link = std::get_if<LinkPatternDocument>(&document)) return svg_link_pattern(link->pattern);
  const auto& object = std::get<AnyObject>(document);
  switch (family_of(object)) {
    case Family::kPasm: return svg_numbers(std::get<Pasm>(object).rows());
    case Family::kTriangle: return svg_numbers(std::get<PartialMonotoneTriangle>(object).rows());
    case Family::kCornerSum: return svg_numbers(std::get<CornerSumMatrix>(object).rows());
    case Family::kHeight: return svg_numbers(std::get<PartialHeightFunction>(object).rows());
    case Family::kIdeal: return svg_numbers(std::get<OrderIdeal>(object).rows());
    case Family::kFpl: {
      const auto& fpl = std::get<PartialFpl>(object);
      return svg_edges(fpl.dims(), [&](Edge e) { return fpl.has(e); }, [](Edge) { return 0; });
    }
    case Family::kIce: {
      const auto& ice = std::get<RectIce>(object);
      return svg_edges(ice.dims(), [](Edge) { return true; }, [&](Edge e) { return ice.points_high(e) ? 1 : -1; });
    }
    case Family::kNest: return svg_nest(std::get<OsculatingNest>(object));
  }
  return {};
}

}  // namespace pasmkit
