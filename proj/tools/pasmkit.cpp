// pasmkit: convert, enumerate, orbit reports and rendering from the shell.
//
// Exit codes: 0 ok, 2 parse error or bad flags, 3 invariant violation,
// 4 unknown kind, action or subcommand.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pasmkit/enumeration.hpp"
#include "pasmkit/io.hpp"
#include "pasmkit/orbits.hpp"

namespace {

using namespace pasmkit;

constexpr int kOk = 0;
constexpr int kParse = 2;
constexpr int kInvariant = 3;
constexpr int kUsage = 4;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string hex(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << value;
  return out.str();
}

void print_orbits(const OrbitReport& report, const std::string& action, Dims dims, const std::string& format) {
  if (format == "csv") {
    std::cout << "orbit_id,size,representative\n";
    for (std::size_t k = 0; k < report.orbits.size(); ++k)
      std::cout << k << "," << report.orbits[k].size << "," << hex(report.orbits[k].representative_hash) << "\n";
    return;
  }
  nlohmann::json orbits = nlohmann::json::array();
  for (std::size_t k = 0; k < report.orbits.size(); ++k) {
    orbits.push_back({{"orbit_id", k},
                      {"size", report.orbits[k].size},
                      {"representative", hex(report.orbits[k].representative_hash)}});
  }
  nlohmann::json out = {{"action", action},
                        {"m", dims.m},
                        {"n", dims.n},
                        {"carrier_size", report.carrier_size},
                        {"order", nlohmann::json::parse(report.order.str())},
                        {"orbits", orbits}};
  std::cout << out.dump() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Partial alternating sign matrices and their relatives"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string target;
  auto* convert = app.add_subcommand("convert", "Convert an object envelope to another kind");
  convert->add_option("input", input, "Envelope file, - for stdin");
  convert->add_option("--to", target, "Target kind")->required();

  int m = 0;
  int n = 0;
  bool by_sum = false;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate partial ASMs of a shape");
  enumerate->add_option("--m", m)->required()->check(CLI::Range(1, 64));
  enumerate->add_option("--n", n)->required()->check(CLI::Range(1, 64));
  enumerate->add_flag("--by-sum", by_sum, "Counts for each total sum t, comma separated");
  enumerate->add_flag("--count-only", count_only, "Print only the number of objects");

  std::string action;
  std::string format = "csv";
  auto* orbits = app.add_subcommand("orbits", "Orbit report for row, gyr or gyration");
  orbits->add_option("--m", m)->required()->check(CLI::Range(1, 64));
  orbits->add_option("--n", n)->required()->check(CLI::Range(1, 64));
  orbits->add_option("--action", action)->required();
  orbits->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  std::string style = "ascii";
  auto* render = app.add_subcommand("render", "Draw an object as text or SVG");
  render->add_option("input", input, "Envelope file, - for stdin");
  render->add_option("--format", style)->check(CLI::IsMember({"ascii", "svg"}));

  if (argc < 2) {
    std::cerr << app.help();
    return kUsage;
  }
  const std::string first = argv[1];
  if (first != "-h" && first != "--help" && first.rfind('-', 0) != 0 && app.get_subcommand_no_throw(first) == nullptr) {
    std::cerr << "error: unknown subcommand \"" << first << "\"\n";
    return kUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  if (*convert) {
    const auto kind = parse_kind(target);
    if (!kind) {
      std::cerr << "error: unknown kind \"" << target << "\"\n";
      return kUsage;
    }
    std::cout << serialize(convert_document(parse_document(read_input(input)), *kind));
  } else if (*enumerate) {
    const Dims dims{m, n};
    if (by_sum) {
      const auto counts = count_by_sum(dims);
      for (std::size_t t = 0; t < counts.size(); ++t) std::cout << (t ? "," : "") << counts[t];
      std::cout << "\n";
    } else if (count_only) {
      std::cout << count_pasm(dims) << "\n";
    } else {
      for_each_pasm(dims, [](const Pasm& p) { std::cout << serialize(AnyObject(p)); });
    }
  } else if (*orbits) {
    OrbitAction which;
    if (action == "row") {
      which = OrbitAction::kRowmotion;
    } else if (action == "gyr") {
      which = OrbitAction::kGyr;
    } else if (action == "gyration") {
      which = OrbitAction::kGyration;
    } else {
      std::cerr << "error: unknown action \"" << action << "\" (expected row, gyr or gyration)\n";
      return kUsage;
    }
    print_orbits(orbit_report({m, n}, which), action, {m, n}, format);
  } else if (*render) {
    const Document document = parse_document(read_input(input));
    std::cout << (style == "svg" ? render_svg(document) : render_ascii(document));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pasmkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const pasmkit::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pasmkit::InvariantError& e) {
    std::cerr << e.what() << "\n";
    return kInvariant;
  } catch (const pasmkit::NonBijectiveError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  }
}
