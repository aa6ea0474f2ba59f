#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vlh/diagram.hpp"
#include "vlh/error.hpp"
#include "vlh/moves.hpp"

using namespace vlh;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::io;
}

}  // namespace

TEST_SUITE("moves") {
  TEST_CASE("a positive kink on the unknot") {
    const auto d = apply_r1(parse_gauss(""), {0, 0}, {true, 1});
    CHECK(to_gauss(d) == "O1+,U1+");
    CHECK(d.n_plus() == 1);
    CHECK(to_gauss(apply_r1(parse_gauss(""), {0, 0}, {false, -1})) == "U1-,O1-");
    CHECK(inverse_r1(d, 1) == parse_gauss(""));
  }

  TEST_CASE("kinks and bigons round-trip verbatim") {
    for (const auto& rec : oracle::corpus()) {
      CAPTURE(rec.diagram.name());
      const auto& d = rec.diagram;
      const int n = d.crossing_count();
      const auto& comps = d.components();
      for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        const int len = static_cast<int>(comps[static_cast<std::size_t>(c)].size());
        for (int p = 0; p <= len; ++p) {
          for (const KinkVariant v : {KinkVariant{true, 1}, KinkVariant{false, -1}}) {
            const auto k = apply_r1(d, {c, p}, v);
            CHECK(k.crossing_count() == n + 1);
            CHECK(inverse_r1(k, n + 1) == d);
          }
        }
      }
      // Bigons between the first component and every gap of the last one.
      const int last = static_cast<int>(comps.size()) - 1;
      const int last_len = static_cast<int>(comps.back().size());
      for (int q = 0; q <= last_len; ++q) {
        if (last == 0 && q == 0) continue;
        for (const BigonVariant v : {BigonVariant{1, true}, BigonVariant{-1, false}}) {
          const auto b = apply_r2(d, {0, 0}, {last, q}, v);
          CHECK(b.crossing_count() == n + 2);
          CHECK(b.sign(n + 1) == -b.sign(n + 2));
          CHECK(inverse_r2(b, n + 1, n + 2) == d);
        }
      }
    }
  }

  TEST_CASE("inverse moves reject non-matching patterns") {
    const auto trefoil = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+");
    CHECK(kind_of([&] { inverse_r1(trefoil, 1); }) == ErrorKind::pattern_not_found);
    CHECK(kind_of([&] { inverse_r1(trefoil, 7); }) == ErrorKind::pattern_not_found);
    CHECK(kind_of([&] { inverse_r2(trefoil, 1, 2); }) == ErrorKind::pattern_not_found);
    CHECK(kind_of([&] { inverse_r2(trefoil, 2, 2); }) == ErrorKind::pattern_not_found);
    // Opposite signs are not enough: the passages must be adjacent too.
    const auto kishino = parse_gauss("O2-,U1+,U2-,O1+,O4-,U3+,U4-,O3+");
    CHECK(r2_candidates(kishino).empty());
    CHECK(r1_candidates(kishino).empty());
    CHECK(kind_of([&] { inverse_r2(kishino, 1, 2); }) == ErrorKind::pattern_not_found);
  }

  TEST_CASE("invalid sites") {
    const auto d = parse_gauss("O1+,U1+");
    CHECK(kind_of([&] { apply_r1(d, {1, 0}); }) == ErrorKind::invalid_site);
    CHECK(kind_of([&] { apply_r1(d, {0, 3}); }) == ErrorKind::invalid_site);
    CHECK(kind_of([&] { apply_r2(d, {0, 1}, {0, 1}); }) == ErrorKind::invalid_site);
    CHECK_NOTHROW(apply_r2(d, {0, 1}, {0, 2}));
  }

  TEST_CASE("candidates") {
    const auto d = parse_gauss("O1+,U1+");
    CHECK(r1_candidates(d) == std::vector<int>{1});
    const auto b = apply_r2(parse_gauss(";"), {0, 0}, {1, 0});
    CHECK(r2_candidates(b) == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(r1_candidates(b).empty());
    CHECK(to_gauss(b) == "O1+,O2-;U1+,U2-");
  }

  TEST_CASE("random walks stay valid and are reproducible") {
    for (const auto& rec : oracle::corpus()) {
      std::mt19937_64 a(99), b(99);
      VirtualLinkDiagram x = rec.diagram, y = rec.diagram;
      const int cap = rec.diagram.crossing_count() + 3;
      for (int i = 0; i < 30; ++i) {
        const auto mx = random_move(x, a, cap);
        const auto my = random_move(y, b, cap);
        CHECK(mx.description == my.description);
        x = mx.result;
        y = my.result;
        CHECK(x.crossing_count() <= cap + 1);
        CHECK(x.components().size() == rec.diagram.components().size());
        CHECK(parse_gauss(to_gauss(x)) == x);
      }
      CHECK(x == y);
    }
  }
}
