#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "koszulkit/affine.hpp"

using namespace kk::affine;
using kk::roots::RootSystem;

namespace {

// Independent oracle: w = v·t_x as the affine map lambda -> v(lambda + x),
// composed as plain affine maps.
struct AffineMap {
  WeylElement lin;
  Weight c;
  static AffineMap of(const ExtAffineWeylElement& w) {
    return {w.finite, w.finite.act(w.translation)};
  }
  AffineMap compose(const AffineMap& o) const {  // this after o
    return {lin * o.lin, lin.act(o.c) + c};
  }
  bool operator==(const AffineMap& o) const { return lin == o.lin && c == o.c; }
};

ExtAffineWeylElement random_element(const AffineWeyl& aw, std::mt19937_64& rng, Int box = 2) {
  const auto& weyl = aw.root_system()->enumerate_weyl();
  std::uniform_int_distribution<std::size_t> pick(0, weyl.size() - 1);
  std::uniform_int_distribution<Int> coord(-box, box);
  Weight x{Vec(aw.root_system()->rank(), 0)};
  for (auto& v : x.fw) v = coord(rng);
  return {weyl[pick(rng)], x};
}

}  // namespace

TEST_CASE("group laws and the affine-map oracle") {
  std::mt19937_64 rng(7);
  for (const char* type : {"A1", "A2", "B2"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_element(aw, rng), b = random_element(aw, rng);
      CHECK(aw.multiply(a, aw.inverse(a)) == aw.identity());
      CHECK(AffineMap::of(aw.multiply(a, b)) == AffineMap::of(a).compose(AffineMap::of(b)));
    }
  }
}

TEST_CASE("translations form the lattice") {
  auto aw = AffineWeyl(RootSystem::build("A2"));
  Weight x{{1, -2}}, y{{0, 3}};
  CHECK(aw.multiply(aw.translation(x), aw.translation(y)) == aw.translation(x + y));
}

TEST_CASE("A1 squared mixed element against the oracle") {
  auto rs = RootSystem::build("A1");
  auto aw = AffineWeyl(rs);
  auto w = aw.multiply(aw.simple(0), aw.translation(Weight{{1}}));  // s·t_pi
  auto sq = aw.multiply(w, w);
  CHECK(AffineMap::of(sq) == AffineMap::of(w).compose(AffineMap::of(w)));
}

TEST_CASE("dot action examples in A1, p = 3") {
  auto aw = AffineWeyl(RootSystem::build("A1"));
  Weight zero{{0}};
  CHECK(aw.dot_action(aw.identity(), Weight{{5}}, 3) == Weight{{5}});
  // s ∙ 0 = -2 pi
  CHECK(aw.dot_action(aw.simple(0), zero, 3) == Weight{{-2}});
  // (t_pi·s) ∙ 0 = (p-2) pi
  auto w = aw.from_t_v(Weight{{1}}, aw.root_system()->simple_reflection(0));
  CHECK(aw.dot_action(w, zero, 3) == Weight{{1}});
  CHECK_THROWS_AS(aw.dot_action(w, zero, 2), std::invalid_argument);
}

TEST_CASE("dot action is a group action") {
  std::mt19937_64 rng(11);
  for (const char* type : {"A2", "G2"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    Int p = aw.root_system()->coxeter_number() + 2;
    std::uniform_int_distribution<Int> coord(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_element(aw, rng), b = random_element(aw, rng);
      Weight lam{Vec(aw.root_system()->rank(), 0)};
      for (auto& v : lam.fw) v = coord(rng);
      CHECK(aw.dot_action(aw.multiply(a, b), lam, p) ==
            aw.dot_action(a, aw.dot_action(b, lam, p), p));
    }
  }
}

TEST_CASE("length function") {
  auto a1 = AffineWeyl(RootSystem::build("A1"));
  CHECK(a1.length(a1.identity()) == 0);
  CHECK(a1.length(a1.translation(Weight{{1}})) == 1);  // dominant: sum of pairings
  CHECK(a1.length(a1.translation(Weight{{2}})) == 2);

  for (const char* type : {"A2", "B2", "G2"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    Weight x{Vec(aw.root_system()->rank(), 1)};  // rho is dominant
    Int expect = 0;
    for (const auto& alpha : aw.root_system()->positive_roots())
      expect += aw.root_system()->pairing(x, alpha);
    CHECK(aw.length(aw.translation(x)) == expect);
  }
}

TEST_CASE("length of inverse, random") {
  std::mt19937_64 rng(13);
  for (const char* type : {"A2", "B2"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    for (int trial = 0; trial < 50; ++trial) {
      auto a = random_element(aw, rng);
      CHECK(aw.length(a) == aw.length(aw.inverse(a)));
    }
  }
}

TEST_CASE("alcove membership tests") {
  auto aw = AffineWeyl(RootSystem::build("A1"));
  Weight zero{{0}};
  CHECK(aw.in_C0(zero, 3));
  CHECK(aw.in_C0(zero, 5));
  CHECK_FALSE(aw.is_regular(-aw.root_system()->rho(), 3));
  CHECK(aw.is_restricted_dominant(Weight{{2}}, 3));
  CHECK_FALSE(aw.is_restricted_dominant(Weight{{3}}, 3));
  CHECK_FALSE(aw.is_restricted_dominant(Weight{{-1}}, 3));
}

TEST_CASE("W0: A1 explicitly, cardinality, restricted-dominance for many p") {
  auto a1 = AffineWeyl(RootSystem::build("A1"));
  auto w0set = a1.enumerate_W0();
  REQUIRE(w0set.size() == 2);
  auto expected_e = a1.identity();
  auto expected_ts = a1.from_t_v(Weight{{1}}, a1.root_system()->simple_reflection(0));
  CHECK(std::count(w0set.begin(), w0set.end(), expected_e) == 1);
  CHECK(std::count(w0set.begin(), w0set.end(), expected_ts) == 1);

  for (const char* type : {"A2", "B2", "G2"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    auto W0 = aw.enumerate_W0();
    CHECK(W0.size() == aw.root_system()->enumerate_weyl().size());
    Int h = aw.root_system()->coxeter_number();
    Weight zero{Vec(aw.root_system()->rank(), 0)};
    for (Int p : {h + 1, h + 2, 2 * h + 1})
      for (const auto& w : W0) CHECK(aw.is_restricted_dominant(aw.dot_action(w, zero, p), p));
  }
}

TEST_CASE("W0 defined directly from restricted dominance, p-independent") {
  // candidates t_lambda·v with lambda coordinates in {0,1} cover W0 for p > h
  for (const char* type : {"A1", "A2", "B2"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    auto rs = aw.root_system();
    Int h = rs->coxeter_number();
    Weight zero{Vec(rs->rank(), 0)};
    auto W0 = aw.enumerate_W0();
    for (Int p : {h + 1, 2 * h + 1}) {
      std::vector<ExtAffineWeylElement> direct;
      for (const auto& v : rs->enumerate_weyl()) {
        for (int mask = 0; mask < (1 << rs->rank()); ++mask) {
          Weight lam{Vec(rs->rank(), 0)};
          for (int i = 0; i < rs->rank(); ++i) lam.fw[i] = (mask >> i) & 1;
          auto cand = aw.from_t_v(lam, v);
          if (aw.is_restricted_dominant(aw.dot_action(cand, zero, p), p)) direct.push_back(cand);
        }
      }
      std::sort(direct.begin(), direct.end());
      CHECK(direct == W0);
    }
  }
}

TEST_CASE("tau0") {
  auto a1 = AffineWeyl(RootSystem::build("A1"));
  CHECK(a1.tau0() == a1.from_t_v(Weight{{1}}, a1.root_system()->simple_reflection(0)));
  CHECK(a1.length(a1.tau0()) == 0);
  CHECK(a1.tau0_length_by_sum() == 0);

  auto a2 = AffineWeyl(RootSystem::build("A2"));
  CHECK(a2.length(a2.tau0()) == 1);
  CHECK(a2.tau0_length_by_sum() == 1);

  for (const char* type : {"A1", "A2", "B2", "G2", "C3"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    auto tau = aw.tau0();
    CHECK(aw.multiply(tau, tau) == aw.identity());
    CHECK(aw.length(tau) == aw.tau0_length_by_sum());
    auto W0 = aw.enumerate_W0();
    CHECK(std::count(W0.begin(), W0.end(), tau) == 1);
    // involution reversing length relative to l(tau0)
    for (const auto& w : W0) {
      auto tw = aw.multiply(tau, w);
      CHECK(std::count(W0.begin(), W0.end(), tw) == 1);
      CHECK(aw.length(tw) == aw.length(tau) - aw.length(w));
    }
  }
}

TEST_CASE("facets and upper closure, A1 p=3") {
  auto aw = AffineWeyl(RootSystem::build("A1"));
  Weight zero{{0}};
  auto f = aw.facet_of(zero, 3);
  CHECK(aw.upper_closure_contains(f, zero));
  CHECK(aw.upper_closure_contains(f, Weight{{2}}));   // pairing 3: upper wall attained
  CHECK_FALSE(aw.upper_closure_contains(f, Weight{{-1}}));  // pairing 0: lower wall
  CHECK_FALSE(aw.upper_closure_contains(f, Weight{{3}}));   // pairing 4: next strip

  // a wall facet matches only its wall
  auto wall_facet = aw.facet_of(Weight{{-1}}, 3);
  CHECK(aw.upper_closure_contains(wall_facet, Weight{{-1}}));
  CHECK_FALSE(aw.upper_closure_contains(wall_facet, zero));
}

TEST_CASE("w∙(-rho) lies in the upper closure of w∙C0 iff the finite part is w0") {
  for (const char* type : {"A1", "A2", "B2"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    auto rs = aw.root_system();
    Int p = rs->coxeter_number() + 1;
    Weight zero{Vec(rs->rank(), 0)};
    for (const auto& w : aw.enumerate_W0()) {
      auto f = aw.facet_of(aw.dot_action(w, zero, p), p);
      bool contains = aw.upper_closure_contains(f, aw.dot_action(w, -rs->rho(), p));
      CHECK(contains == (w.finite == rs->w0()));
    }
  }
}

TEST_CASE("translate_simple") {
  for (const char* type : {"A1", "A2"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    auto rs = aw.root_system();
    Int p = rs->coxeter_number() + 2;
    Weight zero{Vec(rs->rank(), 0)};
    // regular target: always defined, equal to w ∙ mu0
    for (const auto& w : aw.enumerate_W0()) {
      auto t = aw.translate_simple(w, zero, p);
      REQUIRE(t.has_value());
      CHECK(*t == aw.dot_action(w, zero, p));
    }
    // mu0 = -rho survives exactly at tau0 and gives (p-1) rho
    for (const auto& w : aw.enumerate_W0()) {
      auto t = aw.translate_simple(w, -rs->rho(), p);
      if (w == aw.tau0()) {
        REQUIRE(t.has_value());
        CHECK(*t == rs->rho().scaled(p - 1));
      } else {
        CHECK_FALSE(t.has_value());
      }
    }
  }
  auto a1 = AffineWeyl(RootSystem::build("A1"));
  CHECK_FALSE(a1.translate_simple(a1.identity(), Weight{{-1}}, 3).has_value());
  CHECK_THROWS_AS(a1.translate_simple(a1.identity(), Weight{{7}}, 3), std::invalid_argument);
}

TEST_CASE("singular walls and parabolic singularities") {
  auto a2 = AffineWeyl(RootSystem::build("A2"));
  auto rs = a2.root_system();
  Int p = 5;
  CHECK(a2.singular_walls(Weight{{0, 0}}, p).empty());

  auto walls = a2.singular_walls(-rs->rho(), p);
  CHECK(walls.size() == static_cast<std::size_t>(rs->num_positive()));
  for (const auto& [idx, n] : walls) CHECK(n == 0);
  CHECK(a2.is_parabolic_singularity(-rs->rho(), {0, 1}, p));

  // <mu+rho, (a1,a2)^vee> = (0,3): wall only at alpha_1
  Weight mu{{-1, 2}};
  auto w2 = a2.singular_walls(mu, p);
  REQUIRE(w2.size() == 1);
  CHECK(w2[0].first == rs->simple_index_of(0));
  CHECK(w2[0].second == 0);
  CHECK(a2.is_parabolic_singularity(mu, {0}, p));
  CHECK_FALSE(a2.is_parabolic_singularity(mu, {1}, p));
  CHECK_FALSE(a2.is_parabolic_singularity(mu, {0, 1}, p));

  // stabilizer consistency: walls with n = 0 mean the corresponding simple
  // reflections fix mu under the dot action
  for (int i : {0}) {
    auto s = a2.from_finite(rs->simple_reflection(i));
    CHECK(a2.dot_action(s, mu, p) == mu);
  }
}

TEST_CASE("W0_mu") {
  for (const char* type : {"A1", "A2"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    auto rs = aw.root_system();
    Int p = rs->coxeter_number() + 2;
    auto W0 = aw.enumerate_W0();
    Weight zero{Vec(rs->rank(), 0)};
    CHECK(aw.W0_mu(zero, p) == W0);  // regular: everything survives
    auto survivors = aw.W0_mu(-rs->rho(), p);
    REQUIRE(survivors.size() == 1);
    CHECK(survivors[0] == aw.tau0());
  }
  // A1, p=3, mu0 on the single upper wall: one survivor out of two
  auto a1 = AffineWeyl(RootSystem::build("A1"));
  auto sub = a1.W0_mu(Weight{{2}}, 3);
  CHECK(sub.size() == 1);
  CHECK(sub[0] == a1.identity());
}

TEST_CASE("omega group") {
  struct Case { const char* type; Int order; };
  for (auto [type, order] : {Case{"A1", 2}, Case{"A2", 3}, Case{"B2", 2}, Case{"G2", 1}, Case{"A3", 4}, Case{"D4", 4}}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    CHECK(aw.cartan_determinant() == order);
    const auto& omega = aw.omega_group();
    CHECK(static_cast<Int>(omega.size()) == order);
    for (const auto& o : omega) CHECK(aw.length(o.elt) == 0);
  }
}

TEST_CASE("reduced decomposition") {
  auto a1 = AffineWeyl(RootSystem::build("A1"));
  // length-zero element decomposes as itself with empty word
  auto omega = a1.from_t_v(Weight{{1}}, a1.root_system()->simple_reflection(0));
  auto [om, word] = a1.reduced_decomposition(omega);
  CHECK(om == omega);
  CHECK(word.empty());

  // t_alpha has length 2 in A1
  auto t_alpha = a1.translation(Weight{{2}});
  auto [om2, word2] = a1.reduced_decomposition(t_alpha);
  CHECK(word2.size() == 2);
  ExtAffineWeylElement acc = om2;
  for (int letter : word2) acc = a1.apply_letter(acc, letter);
  CHECK(acc == t_alpha);

  // A2: recomposition and strictly increasing prefix lengths, all w with l <= 4
  std::mt19937_64 rng(17);
  auto a2 = AffineWeyl(RootSystem::build("A2"));
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto w = random_element(a2, rng);
    if (a2.length(w) > 4) continue;
    ++checked;
    auto [o, wd] = a2.reduced_decomposition(w);
    CHECK(a2.length(o) == 0);
    CHECK(static_cast<Int>(wd.size()) == a2.length(w));
    ExtAffineWeylElement acc2 = o;
    Int prev = 0;
    for (int letter : wd) {
      acc2 = a2.apply_letter(acc2, letter);
      CHECK(a2.length(acc2) == prev + 1);
      prev = a2.length(acc2);
    }
    CHECK(acc2 == w);
  }
  CHECK(checked > 20);
}

TEST_CASE("affine s0 is a length-one reflection") {
  for (const char* type : {"A1", "A2", "B2", "G2"}) {
    auto aw = AffineWeyl(RootSystem::build(type));
    auto s0 = aw.affine_s0();
    CHECK(aw.length(s0) == 1);
    CHECK(aw.multiply(s0, s0) == aw.identity());
  }
}
