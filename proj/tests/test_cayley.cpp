#include "doctest.h"

#include <random>

#include "ddg/cayley.hpp"
#include "ddg/error.hpp"
#include "ddg/records.hpp"
#include "oracle.hpp"

using namespace ddg;

namespace {

struct PublishedSd {
  const RecordEntry *entry;
  std::vector<SdElement> gens;
};

// Semidirect table rows whose spec multiplies out to the claimed order.
std::vector<PublishedSd> consistent_published_specs() {
  std::vector<PublishedSd> out;
  for (const auto &e : record_table()) {
    const auto *c = std::get_if<SemidirectCheck>(&e.checkable);
    if (!c || c->spec.M * c->spec.N != e.order)
      continue;
    std::vector<std::string> notes;
    bool ok = true;
    auto gens = parse_published_generators(c->generators, notes, ok);
    if (ok)
      out.push_back({&e, std::move(gens)});
  }
  return out;
}

template <class G>
std::vector<std::uint64_t> histogram_of(const CompactGraph &g, Vertex src) {
  const auto r = bfs_eccentricity(g, src);
  std::vector<std::uint64_t> h(r.eccentricity + 1, 0);
  for (auto d : r.distances)
    ++h[d];
  return h;
}

} // namespace

TEST_SUITE("cayley") {

TEST_CASE("connection set closure") {
  const TwoCoordGroup abas(10);
  const auto &rec = record(16, 2);
  const auto &tc = std::get<TwoCoordCheck>(rec.checkable);
  const auto conn = close_connection_set(abas, encode_generators(abas, tc.generators));
  CHECK(conn.degree() == 16);
  // brute force: collect s and s^-1 by direct product search
  std::vector<bool> in(abas.order(), false);
  for (const auto &t : tc.generators) {
    const Element s = abas.encode(t);
    in[s] = true;
    for (Element x = 0; x < abas.order(); ++x)
      if (abas.multiply(s, x) == abas.identity())
        in[x] = true;
  }
  CHECK(std::count(in.begin(), in.end(), true) == 16);
  CHECK(conn.contains(abas.encode({5, 0, 0})));
  CHECK(conn.contains(abas.encode({0, 0, 1})));

  const SemidirectGroup z5 = SemidirectGroup::validate({1, 1, 5});
  const Element one[] = {1};
  CHECK(close_connection_set(z5, std::span<const Element>(one)).degree() == 2);
  const SemidirectGroup z6 = SemidirectGroup::validate({1, 1, 6});
  const Element half[] = {3};
  const auto inv = close_connection_set(z6, std::span<const Element>(half));
  CHECK(inv.degree() == 1);
  CHECK(inv.involutions == std::vector<Element>{3});
  const Element pair[] = {1, 5};
  CHECK(close_connection_set(z6, std::span<const Element>(pair)).degree() == 2);

  const Element ident[] = {0};
  CHECK_THROWS_AS(close_connection_set(z6, std::span<const Element>(ident)), ArgumentError);
  CHECK_THROWS_AS(close_connection_set(z6, std::span<const Element>{}), ArgumentError);
  const Element outside[] = {6};
  CHECK_THROWS_AS(close_connection_set(z6, std::span<const Element>(outside)), ArgumentError);
}

TEST_CASE("explicit builds") {
  const SemidirectGroup z5 = SemidirectGroup::validate({1, 1, 5});
  const Element one[] = {1};
  const auto c5 = build_cayley_explicit(z5, close_connection_set(z5, std::span<const Element>(one)));
  CHECK(c5 == oracle::cycle(5));

  const TwoCoordGroup abas(10);
  const auto &tc = std::get<TwoCoordCheck>(record(16, 2).checkable);
  const auto a = build_cayley_explicit(abas, close_connection_set(abas, encode_generators(abas, tc.generators)));
  CHECK(a.order() == 200);
  CHECK(a.is_regular());
  CHECK(a.max_degree() == 16);
  CHECK(diameter(a, true) == 2);

  const auto &c94 = std::get<SemidirectCheck>(record(9, 4).checkable);
  const auto g94 = SemidirectGroup::validate(c94.spec);
  std::vector<std::string> notes;
  bool ok = true;
  const auto gens = parse_published_generators(c94.generators, notes, ok);
  REQUIRE(ok);
  CHECK(gens.size() == 5);
  const auto conn = close_connection_set(g94, encode_generators(g94, gens));
  CHECK(conn.degree() == 9);
  CHECK(conn.involutions.size() == 1);
  const auto x = build_cayley_explicit(g94, conn);
  CHECK(x.order() == 1640);
  CHECK(x.is_regular());
  CHECK(x.max_degree() == 9);

  CHECK_THROWS_AS(build_cayley_explicit(g94, conn, 1000), SizeError);
}

TEST_CASE("implicit diameters") {
  for (std::uint64_t n = 3; n < 40; ++n) {
    const auto z = SemidirectGroup::validate({1, 1, n});
    const Element one[] = {1};
    const auto r = cayley_diameter_implicit(z, close_connection_set(z, std::span<const Element>(one)));
    CHECK(r.diameter == n / 2);
    CHECK(r.reached == n);
  }

  const auto g = SemidirectGroup::validate({24, 90, 511});
  const SdElement gens[] = {{13, 77}, {6, 157}, {15, 50}, {12, 7}};
  const auto r = cayley_diameter_implicit(g, close_connection_set(g, encode_generators(g, gens)));
  CHECK(r.diameter == 6);
  CHECK(r.reached == 12264);

  // subgroup generated by (0,1) only
  const SdElement sub[] = {{0, 1}};
  try {
    cayley_diameter_implicit(g, close_connection_set(g, encode_generators(g, sub)));
    FAIL("expected GenerationError");
  } catch (const GenerationError &e) {
    CHECK(e.reached() == 511);
  }
  CHECK(cayley_bfs(g, close_connection_set(g, encode_generators(g, sub))).reached == 511);
  const SdElement bad[] = {{24, 0}};
  CHECK_THROWS_AS(encode_generators(g, bad), ArgumentError);
}

TEST_CASE("explicit and implicit agree on random small Cayley graphs") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 40) {
    const std::uint64_t N = 3 + rng() % 60;
    std::uint64_t A = 1 + rng() % (N - 1);
    if (std::gcd(A, N) != 1)
      continue;
    std::uint64_t M = 1, p = A % N;
    while (p != 1) {
      p = p * A % N;
      ++M;
    }
    if (M * N > 2000)
      continue;
    const auto grp = SemidirectGroup::validate({M, A, N});
    std::vector<Element> gens;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) {
      const auto e = static_cast<Element>(1 + rng() % (grp.order() - 1));
      gens.push_back(e);
    }
    const auto conn = close_connection_set(grp, std::span<const Element>(gens));
    const auto g = build_cayley_explicit(grp, conn);
    CHECK(g.is_regular());
    CHECK(g.max_degree() == conn.degree());
    const auto r = cayley_bfs(grp, conn);
    const auto s = stats(g);
    CHECK(s.connected == (r.reached == grp.order()));
    if (!s.connected)
      continue;
    CHECK(*s.diameter == r.diameter);
    CHECK(histogram_of<SemidirectGroup>(g, 0) == r.histogram);
    for (Vertex v = 0; v < g.order(); ++v)
      REQUIRE(bfs_eccentricity(g, v).eccentricity == r.diameter);
    CHECK(*s.average_distance == Rational::make(r.distance_sum(), grp.order() - 1));
    ++checked;
  }
}

TEST_CASE("published specs: both product rules and both BFS paths agree") {
  const auto specs = consistent_published_specs();
  CHECK(specs.size() == 12);
  int compared = 0;
  for (const auto &p : specs) {
    const auto &c = std::get<SemidirectCheck>(p.entry->checkable);
    if (p.entry->order > 60000)
      continue;
    CAPTURE(p.entry->delta);
    CAPTURE(p.entry->d);
    const auto right = SemidirectGroup::validate(c.spec, ProductRule::right_action);
    const auto left = SemidirectGroup::validate(c.spec, ProductRule::left_action);
    const auto cr = close_connection_set(right, encode_generators(right, p.gens));
    const auto cl = close_connection_set(left, encode_generators(left, p.gens));
    CHECK(cr.degree() == cl.degree());
    CHECK(cr.degree() == p.entry->delta);
    const auto gr = build_cayley_explicit(right, cr);
    const auto gl = build_cayley_explicit(left, cl);
    const auto hr = cayley_bfs(right, cr);
    const auto hl = cayley_bfs(left, cl);
    CHECK(hr.histogram == hl.histogram);
    CHECK(histogram_of<SemidirectGroup>(gr, 0) == hr.histogram);
    CHECK(histogram_of<SemidirectGroup>(gl, 0) == hl.histogram);
    CHECK(bfs_eccentricity(gr, 0).eccentricity == bfs_eccentricity(gl, 0).eccentricity);
    CHECK(girth(gr) == girth(gl));
    ++compared;
  }
  CHECK(compared >= 6);
}

TEST_CASE("two-coordinate job parsing") {
  const std::vector<std::string> t{"2c", "10", "gen", "0,0,1", "gen", "5,0,0"};
  const auto job = parse_two_coord_job(t);
  CHECK(job.m == 10);
  REQUIRE(job.generators.size() == 2);
  CHECK(job.generators[1] == TwoCoordElement{5, 0, 0});
  const std::vector<std::string> s{"sd", "24", "90", "511", "gen", "13,77"};
  const auto sj = parse_sd_job(s);
  CHECK(sj.spec == SemidirectSpec{24, 90, 511});
  CHECK(sj.generators.at(0) == SdElement{13, 77});
  const std::vector<std::string> bad{"sd", "24", "90"};
  CHECK_THROWS(parse_sd_job(bad));
}

}
