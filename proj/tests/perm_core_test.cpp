#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallforge/bigint.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/limits.hpp"
#include "hallforge/perm.hpp"
#include "hallforge/perm_group.hpp"
#include "hallforge/perm_kernels.hpp"
#include "hallforge/stab_chain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace hallforge;

namespace {

std::vector<std::uint32_t> random_images(std::uint32_t n, std::mt19937 &rng) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// Closure count computed directly on raw image arrays, independent of the
// library's composition and enumeration paths.
std::size_t closure_size(const std::vector<std::vector<std::uint32_t>> &gens) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> queue;
  std::vector<std::uint32_t> id(gens.at(0).size());
  std::iota(id.begin(), id.end(), 0u);
  seen.insert(id);
  queue.push_back(id);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto &g : gens) {
      std::vector<std::uint32_t> w(g.size());
      for (std::size_t i = 0; i < g.size(); ++i)
        w[i] = g[queue[head][i]];
      if (seen.insert(w).second)
        queue.push_back(w);
    }
  }
  return seen.size();
}

std::uint64_t fact_u64(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned k = 2; k <= n; ++k)
    r *= k;
  return r;
}

std::vector<Permutation> sym_gens(std::uint32_t n) {
  std::vector<std::uint32_t> cyc(n);
  for (std::uint32_t i = 0; i < n; ++i)
    cyc[i] = (i + 1) % n;
  return {parse_cycles("(1 2)", n), Permutation::from_images0(cyc)};
}

struct BackendGuard {
  kernels::Backend saved = kernels::active_backend();
  ~BackendGuard() { kernels::set_backend(saved); }
};

} // namespace

TEST_CASE("cycle parsing") {
  Permutation p = parse_cycles("(1 2 3)", 3);
  CHECK(p(1) == 2);
  CHECK(p(2) == 3);
  CHECK(p(3) == 1);

  CHECK(parse_cycles("()", 4) == Permutation(4));
  CHECK(parse_cycles("()", 4).degree() == 4);

  Permutation q = parse_cycles("(1 2)(3 4)", 5);
  CHECK(q(1) == 2);
  CHECK(q(2) == 1);
  CHECK(q(3) == 4);
  CHECK(q(4) == 3);
  CHECK(q(5) == 5);

  CHECK(parse_cycles("  ( 1   2 ) (3 4)  ", 5) == q);
  CHECK(parse_cycles("(10 11)", 12)(10) == 11);
}

TEST_CASE("cycle parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("((1 2))", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("   ", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(a b)", 3), ParseError);
}

TEST_CASE("cycle printing round-trips") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Permutation p = Permutation::from_images0(random_images(9, rng));
    CHECK(parse_cycles(p.cycles(), 9) == p);
  }
  CHECK(Permutation(5).cycles() == "()");
  CHECK(parse_cycles("(1 2 3)(4 5)", 6).cycles() == "(1 2 3)(4 5)");
}

TEST_CASE("products compose left to right") {
  Permutation a = parse_cycles("(1 2)", 3);
  Permutation b = parse_cycles("(2 3)", 3);
  CHECK((a * a).is_identity());
  CHECK(a * b == parse_cycles("(1 3 2)", 3));
  CHECK((a * b)(1) == 3);
  CHECK(a * Permutation(3) == a);
  CHECK(Permutation(3) * a == a);
  CHECK(compose(a, b) == a * b);
  CHECK_THROWS_AS(a * Permutation(4), Error);
}

TEST_CASE("product laws on random permutations") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    Permutation p = Permutation::from_images0(random_images(12, rng));
    Permutation q = Permutation::from_images0(random_images(12, rng));
    Permutation r = Permutation::from_images0(random_images(12, rng));
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
    CHECK(p.inverse().inverse() == p);
  }
}

TEST_CASE("conjugation relabels points") {
  // p.conjugated_by(h) sends h(x) to h(p(x)).
  std::mt19937 rng(13);
  for (int t = 0; t < 40; ++t) {
    Permutation p = Permutation::from_images0(random_images(10, rng));
    Permutation h = Permutation::from_images0(random_images(10, rng));
    Permutation c = p.conjugated_by(h);
    for (std::uint32_t x = 1; x <= 10; ++x)
      CHECK(c(h(x)) == h(p(x)));
  }
  CHECK(parse_cycles("(1 2)", 3).conjugated_by(parse_cycles("(1 3)", 3)) ==
        parse_cycles("(2 3)", 3));
}

TEST_CASE("from_images validates bijections") {
  CHECK(Permutation::from_images({2, 3, 1})(1) == 2);
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 3}), Error);
  CHECK_THROWS_AS(Permutation::from_images({0, 1, 2}), Error);
  CHECK_THROWS_AS(Permutation::from_images({1, 2, 4}), Error);
  CHECK_THROWS_AS(Permutation::from_images0({0, 0, 2}), Error);
}

TEST_CASE("smallest moved point") {
  CHECK(Permutation(6).smallest_moved_point() == 0);
  CHECK(parse_cycles("(2 3)", 6).smallest_moved_point() == 2);
  CHECK(parse_cycles("(5 6)", 6).smallest_moved_point() == 5);
}

TEST_CASE("kernel backends agree") {
  BackendGuard guard;
  std::mt19937 rng(17);
  std::vector<std::size_t> sizes = {1, 2, 3, 5, 7, 8, 9, 15, 16, 17,
                                    31, 32, 33, 64, 100, 257, 1000};

  std::vector<kernels::Backend> candidates;
  for (auto b : {kernels::Backend::Avx2, kernels::Backend::Neon})
    if (kernels::backend_supported(b))
      candidates.push_back(b);
  INFO("vector backends available: ", candidates.size());

  for (std::size_t n : sizes) {
    auto p = random_images(static_cast<std::uint32_t>(n), rng);
    auto q = random_images(static_cast<std::uint32_t>(n), rng);

    kernels::set_backend(kernels::Backend::Scalar);
    std::vector<std::uint32_t> ref_comp(n), ref_inv(n);
    kernels::compose(p.data(), q.data(), ref_comp.data(), n);
    kernels::invert(p.data(), ref_inv.data(), n);
    bool ref_idp = kernels::is_identity(p.data(), n);
    bool ref_eq_pp = kernels::equal(p.data(), p.data(), n);
    bool ref_eq_pq = kernels::equal(p.data(), q.data(), n);

    for (auto b : candidates) {
      kernels::set_backend(b);
      std::vector<std::uint32_t> comp(n), inv(n);
      kernels::compose(p.data(), q.data(), comp.data(), n);
      kernels::invert(p.data(), inv.data(), n);
      CHECK(comp == ref_comp);
      CHECK(inv == ref_inv);
      CHECK(kernels::is_identity(p.data(), n) == ref_idp);
      CHECK(kernels::equal(p.data(), p.data(), n) == ref_eq_pp);
      CHECK(kernels::equal(p.data(), q.data(), n) == ref_eq_pq);

      // Identity and near-identity arrays, including a mismatch only in the
      // tail that a lane-width bug would miss.
      std::vector<std::uint32_t> id(n);
      std::iota(id.begin(), id.end(), 0u);
      CHECK(kernels::is_identity(id.data(), n));
      std::vector<std::uint32_t> almost = id;
      if (n >= 2) {
        std::swap(almost[n - 2], almost[n - 1]);
        CHECK(!kernels::is_identity(almost.data(), n));
        CHECK(!kernels::equal(id.data(), almost.data(), n));
      }
    }
  }
}

TEST_CASE("backend forcing") {
  BackendGuard guard;
  CHECK(kernels::backend_supported(kernels::Backend::Scalar));
  kernels::set_backend(kernels::Backend::Scalar);
  CHECK(kernels::active_backend() == kernels::Backend::Scalar);
  for (auto b : {kernels::Backend::Avx2, kernels::Backend::Neon}) {
    if (kernels::backend_supported(b)) {
      kernels::set_backend(b);
      CHECK(kernels::active_backend() == b);
    } else {
      CHECK_THROWS_AS(kernels::set_backend(b), Error);
    }
  }
  CHECK(kernels::backend_name(kernels::Backend::Scalar) == "scalar");
}

TEST_CASE("stabilizer chain orders") {
  StabChain s4(4, {parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)});
  CHECK(s4.order() == 24);
  CHECK(closure_size({{1, 0, 2, 3}, {1, 2, 3, 0}}) == 24);

  StabChain trivial(5, {Permutation(5)});
  CHECK(trivial.order() == 1);
  CHECK(StabChain(5, {}).order() == 1);

  StabChain a4(4, {parse_cycles("(1 2 3)", 4), parse_cycles("(2 3 4)", 4)});
  CHECK(a4.order() == 12);

  StabChain d4(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)});
  CHECK(d4.order() == 8);

  for (std::uint32_t n = 3; n <= 8; ++n) {
    StabChain sym(n, sym_gens(n));
    CHECK(sym.order() == fact_u64(n));
  }
}

TEST_CASE("chain order equals closure count") {
  std::mt19937 rng(23);
  for (int t = 0; t < 12; ++t) {
    std::vector<std::vector<std::uint32_t>> raw = {random_images(7, rng),
                                                   random_images(7, rng)};
    std::vector<Permutation> gens = {Permutation::from_images0(raw[0]),
                                     Permutation::from_images0(raw[1])};
    StabChain chain(7, gens);
    CHECK(chain.order() == closure_size(raw));
  }
}

TEST_CASE("chain base and orbit sizes are consistent") {
  StabChain s6(6, sym_gens(6));
  BigInt prod = 1;
  for (std::size_t sz : s6.orbit_sizes())
    prod *= static_cast<unsigned long>(sz);
  CHECK(prod == s6.order());
  auto base = s6.base();
  CHECK(std::set<std::uint32_t>(base.begin(), base.end()).size() == base.size());
  for (std::uint32_t b : base) {
    CHECK(b >= 1);
    CHECK(b <= 6);
  }
}

TEST_CASE("deterministic and random chains agree") {
  auto check_group = [](std::uint32_t deg, const std::vector<Permutation> &gens) {
    StabChain det(deg, gens, StabChain::Mode::Deterministic);
    StabChain rnd(deg, gens, StabChain::Mode::Random);
    CHECK(det.mode_used() == StabChain::Mode::Deterministic);
    CHECK(rnd.mode_used() == StabChain::Mode::Random);
    CHECK(det.order() == rnd.order());
  };
  check_group(6, sym_gens(6));
  check_group(5, {parse_cycles("(1 2 3)", 5), parse_cycles("(3 4 5)", 5)});
  check_group(12, {parse_cycles("(1 2 3 4 5 6)(7 8)", 12),
                   parse_cycles("(6 7)(9 10 11 12)", 12)});
}

TEST_CASE("chain mode environment override") {
  setenv("HALLFORGE_CHAIN_MODE", "random", 1);
  StabChain forced(4, sym_gens(4));
  CHECK(forced.mode_used() == StabChain::Mode::Random);
  CHECK(forced.order() == 24);
  unsetenv("HALLFORGE_CHAIN_MODE");
  StabChain normal(4, sym_gens(4));
  CHECK(normal.mode_used() == StabChain::Mode::Deterministic);
}

TEST_CASE("membership") {
  PermGroup a5(5, {parse_cycles("(1 2 3)", 5), parse_cycles("(3 4 5)", 5)});
  CHECK(a5.order() == 60);

  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    Permutation w(5);
    for (int k = 0; k < 8; ++k)
      w = w * a5.generators()[rng() % a5.generators().size()];
    CHECK(a5.contains(w));
  }

  CHECK(!a5.contains(parse_cycles("(1 2)", 5)));
  CHECK(!a5.chain().sift(parse_cycles("(1 2)", 5)).is_identity());
  CHECK(a5.chain().sift(parse_cycles("(1 2 3)", 5)).is_identity());

  // Degree 7 copy of S5 on {1..5}: anything moving 6 or 7 stays outside.
  PermGroup s5(7, {parse_cycles("(1 2)", 7), parse_cycles("(1 2 3 4 5)", 7)});
  CHECK(s5.order() == 120);
  CHECK(!s5.contains(parse_cycles("(6 7)", 7)));
  CHECK(!s5.contains(parse_cycles("(5 6)", 7)));
  CHECK(!s5.contains(parse_cycles("(1 2)", 5)));
}

TEST_CASE("orbits") {
  PermGroup g(12, {parse_cycles("(1 2 3)", 12), parse_cycles("(4 5)", 12),
                   parse_cycles("(6 7 8 9)", 12)});
  CHECK(g.orbit(1) == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(g.orbit(4) == std::vector<std::uint32_t>{4, 5});
  CHECK(g.orbit(10) == std::vector<std::uint32_t>{10});

  PermGroup two(4, {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)});
  CHECK(two.orbit(3) == std::vector<std::uint32_t>{3, 4});

  PermGroup id(5, {Permutation(5)});
  CHECK(id.orbit(5) == std::vector<std::uint32_t>{5});

  CHECK_THROWS_AS(g.orbit(0), Error);
  CHECK_THROWS_AS(g.orbit(13), Error);
}

TEST_CASE("orbits partition the domain") {
  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    PermGroup g(10, {Permutation::from_images0(random_images(10, rng)),
                     Permutation::from_images0(random_images(10, rng))});
    std::vector<int> hits(10, 0);
    std::set<std::uint32_t> reps;
    for (std::uint32_t p = 1; p <= 10; ++p) {
      auto orb = g.orbit(p);
      CHECK(std::find(orb.begin(), orb.end(), p) != orb.end());
      std::uint32_t least = *std::min_element(orb.begin(), orb.end());
      if (reps.insert(least).second)
        for (std::uint32_t x : orb)
          ++hits[x - 1];
    }
    for (int h : hits)
      CHECK(h == 1);
  }
}

TEST_CASE("element enumeration") {
  PermGroup s3(3, sym_gens(3));
  auto elems = enumerate_elements(s3);
  CHECK(elems.size() == 6);
  CHECK(elems[0].is_identity());
  CHECK(std::set<std::string>([&] {
          std::set<std::string> s;
          for (const auto &e : elems)
            s.insert(e.cycles());
          return s;
        }()).size() == 6);

  PermGroup trivial(4, {});
  auto only = enumerate_elements(trivial);
  REQUIRE(only.size() == 1);
  CHECK(only[0].is_identity());

  PermGroup c4(4, {parse_cycles("(1 2 3 4)", 4)});
  auto powers = enumerate_elements(c4);
  REQUIRE(powers.size() == 4);
  Permutation c = parse_cycles("(1 2 3 4)", 4);
  CHECK(powers[0] == Permutation(4));
  CHECK(powers[1] == c);
  CHECK(powers[2] == c * c);
  CHECK(powers[3] == c * c * c);
}

TEST_CASE("enumeration respects the bound") {
  PermGroup c9(9, {parse_cycles("(1 2 3 4 5 6 7 8 9)", 9)});
  CHECK(enumerate_elements(c9, 9).size() == 9);
  CHECK_THROWS_AS(enumerate_elements(c9, 8), OrderTooLarge);

  PermGroup s8(8, sym_gens(8));
  CHECK_THROWS_AS(enumerate_elements(s8), OrderTooLarge); // 8! > 20000
  CHECK(limits::enumeration_bound() == 20000);
}

TEST_CASE("chain order matches enumeration length") {
  auto check = [](const PermGroup &g) {
    CHECK(g.order() == enumerate_elements(g).size());
  };
  check(PermGroup(3, sym_gens(3)));
  check(PermGroup(5, sym_gens(5)));
  check(PermGroup(7, sym_gens(7)));
  check(PermGroup(4, {parse_cycles("(1 2 3)", 4), parse_cycles("(2 3 4)", 4)}));
  check(PermGroup(12, {parse_cycles("(1 2 3 4 5 6 7 8 9 10 11 12)", 12)}));
  check(PermGroup(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)}));
}

TEST_CASE("large symmetric group order") {
  StabChain big(720, sym_gens(720));
  CHECK(big.mode_used() == StabChain::Mode::Random);
  CHECK(big.order() == factorial(720));
  CHECK(big.contains(parse_cycles("(17 301 650)", 720)));
}

TEST_CASE("big integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == fact_u64(20));

  double log10_sum = 0;
  for (int k = 2; k <= 720; ++k)
    log10_sum += std::log10(static_cast<double>(k));
  CHECK(to_decimal(factorial(720)).size() ==
        static_cast<std::size_t>(log10_sum) + 1);

  CHECK(parse_decimal(to_decimal(factorial(100))) == factorial(100));
  CHECK(parse_decimal("0") == 0);
  CHECK(parse_decimal("-15") == -15);
  CHECK_THROWS_AS(parse_decimal(""), ParseError);
  CHECK_THROWS_AS(parse_decimal("-"), ParseError);
  CHECK_THROWS_AS(parse_decimal("12x"), ParseError);
  CHECK_THROWS_AS(parse_decimal("1.5"), ParseError);
}
