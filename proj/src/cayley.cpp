#include "ddg/cayley.hpp"

#include <charconv>

namespace ddg {

namespace {

std::uint64_t parse_count(const std::string &tok, const char *what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(std::string("bad ") + what + " '" + tok + "'", 0);
  return v;
}

// Consumes "gen <element>" pairs starting at `pos`.
template <class Parse>
auto parse_gen_pairs(std::span<const std::string> tokens, std::size_t pos, Parse parse) {
  std::vector<decltype(parse(std::string_view{}))> gens;
  while (pos < tokens.size()) {
    if (tokens[pos] != "gen")
      throw ParseError("expected 'gen', got '" + tokens[pos] + "'", 0);
    if (pos + 1 >= tokens.size())
      throw ParseError("'gen' without an element", 0);
    gens.push_back(parse(tokens[pos + 1]));
    pos += 2;
  }
  if (gens.empty())
    throw ParseError("no generators given", 0);
  return gens;
}

} // namespace

SdJob parse_sd_job(std::span<const std::string> tokens) {
  std::size_t pos = !tokens.empty() && tokens[0] == "sd" ? 1 : 0;
  if (tokens.size() < pos + 3)
    throw ParseError("expected 'sd M A N gen x,y ...'", 0);
  SdJob job;
  job.spec.M = parse_count(tokens[pos], "M");
  job.spec.A = parse_count(tokens[pos + 1], "A");
  job.spec.N = parse_count(tokens[pos + 2], "N");
  job.generators = parse_gen_pairs(tokens, pos + 3, parse_sd_element);
  return job;
}

TwoCoordJob parse_two_coord_job(std::span<const std::string> tokens) {
  std::size_t pos = !tokens.empty() && tokens[0] == "2c" ? 1 : 0;
  if (tokens.size() < pos + 1)
    throw ParseError("expected '2c m gen a,b,c ...'", 0);
  TwoCoordJob job;
  job.m = static_cast<std::uint32_t>(parse_count(tokens[pos], "m"));
  job.generators = parse_gen_pairs(tokens, pos + 1, parse_two_coord_element);
  return job;
}

std::vector<Element> encode_generators(const SemidirectGroup &group,
                                       std::span<const SdElement> gens) {
  std::vector<Element> out;
  for (auto g : gens) {
    if (!group.contains(g))
      throw ArgumentError("generator [" + std::to_string(g.x) + "," +
                          std::to_string(g.y) + "] outside Z_" +
                          std::to_string(group.spec().M) + " x Z_" +
                          std::to_string(group.spec().N));
    out.push_back(group.encode(g));
  }
  return out;
}

std::vector<Element> encode_generators(const TwoCoordGroup &group,
                                       std::span<const TwoCoordElement> gens) {
  std::vector<Element> out;
  for (auto g : gens) {
    if (!group.contains(g))
      throw ArgumentError("generator (" + std::to_string(g.a) + "," +
                          std::to_string(g.b) + "," + std::to_string(g.c) +
                          ") outside the group");
    out.push_back(group.encode(g));
  }
  return out;
}

} // namespace ddg
