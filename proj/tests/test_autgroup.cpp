#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "heffter/analysis.hpp"
#include "heffter/autgroup.hpp"
#include "heffter/family.hpp"

using namespace heffter;

namespace {

VertexMap scaling(const Field& f, std::uint32_t eta) {
  VertexMap s(f.q());
  for (std::uint32_t x = 0; x < f.q(); ++x) s[x] = f.mul(Element{eta}, Element{x}).value;
  return s;
}

VertexMap translation(const Field& f, std::uint32_t g) {
  VertexMap s(f.q());
  for (std::uint32_t x = 0; x < f.q(); ++x) s[x] = f.add(Element{x}, Element{g}).value;
  return s;
}

Embedding rank_one_embedding(std::size_t m, std::size_t n) {
  const auto setup = build_instance(resolve_instance(m, n, std::nullopt));
  return build_rho0(setup.array, natural_orderings(setup.array, 0));
}

Embedding random_cayley_map(std::uint32_t p, std::mt19937& rng) {
  std::vector<std::uint32_t> order(p - 1);
  std::iota(order.begin(), order.end(), 1u);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint32_t> rho0(p, 0);
  for (std::size_t i = 0; i < order.size(); ++i) rho0[order[i]] = order[(i + 1) % order.size()];
  return Embedding::from_rotation(make_field(p, 1), rho0);
}

// Cycles with every element reduced mod p and rotated to start at the minimum.
std::set<std::vector<long>> normalise(const std::vector<std::vector<long>>& cycles, long p) {
  std::set<std::vector<long>> out;
  for (auto c : cycles) {
    for (auto& x : c) x = ((x % p) + p) % p;
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    out.insert(c);
  }
  return out;
}

}  // namespace

TEST_CASE("classification of identity, translations and scalings") {
  const auto emb = fixtures::worked_embedding();
  const Field& f = emb.field();
  CHECK(classify_automorphism(emb, identity_map(31)) == Orientation::Preserving);
  CHECK(classify_automorphism(emb, translation(f, 1)) == Orientation::Preserving);
  CHECK(classify_automorphism(emb, scaling(f, 9)) == Orientation::Preserving);
  CHECK_FALSE(classify_automorphism(emb, scaling(f, 3)));
  for (std::uint32_t g = 0; g < 31; ++g) CHECK(classify_automorphism(emb, translation(f, g)) == Orientation::Preserving);
  CHECK_THROWS_AS(classify_automorphism(emb, VertexMap(31, 0)), Error);
  CHECK_THROWS_AS(classify_automorphism(emb, identity_map(30)), Error);
}

TEST_CASE("mirror image is reached by a reversing isomorphism") {
  const auto emb = fixtures::worked_embedding();
  std::vector<std::uint32_t> inverse(31, 0);
  for (std::uint32_t a = 1; a < 31; ++a) inverse[a] = emb.rho0_inverse(Element{a}).value;
  const auto mirror = Embedding::from_rotation(emb.field(), inverse);
  CHECK(classify_isomorphism(emb, mirror, identity_map(31)) == Orientation::Reversing);
  CHECK(classify_isomorphism(emb, emb, identity_map(31)) == Orientation::Preserving);
}

TEST_CASE("restricted search on the worked example") {
  const auto r = restricted_search(fixtures::worked_embedding(), 3, 5);
  CHECK(r.aut0_plus == 15);
  CHECK(r.aut0_minus == 0);
  CHECK(r.total == 465);
  CHECK(r.cyclic);
  CHECK(r.generator_order == 15);
  CHECK(permutation_order(r.generator) == 15);
  CHECK(r.face_lengths_preserved);
  CHECK(r.method == SearchMethod::Restricted);
}

TEST_CASE("restricted search over Z_43 matches the scaling subgroup") {
  const auto emb = rank_one_embedding(3, 7);
  const auto r = restricted_search(emb, 3, 7);
  CHECK(r.aut0_plus == 21);
  CHECK(r.aut0_minus == 0);
  CHECK(r.total == 903);
  CHECK(r.cyclic);

  const auto setup = build_instance(resolve_instance(3, 7, std::nullopt));
  std::set<VertexMap> scalings;
  for (const auto& a : multiplicative_auts(emb, setup.array)) scalings.insert(a.perm);
  std::set<VertexMap> found;
  for (const auto& a : r.stabilizer) found.insert(a.perm);
  CHECK(found == scalings);
}

TEST_CASE("restricted search over GF(343)") {
  const auto r = restricted_search(rank_one_embedding(9, 19), 9, 19);
  CHECK(r.aut0_plus == 171);
  CHECK(r.aut0_minus == 0);
  CHECK(r.total == 343u * 171);
  CHECK(r.cyclic);
}

TEST_CASE("exhaustive search agrees with restricted search") {
  const auto emb = fixtures::worked_embedding();
  const auto r = restricted_search(emb, 3, 5);
  const auto e = exhaustive_search(emb, 3, 5);
  CHECK(e.method == SearchMethod::Exhaustive);
  CHECK(e.total == 465);
  CHECK(same_group(r, e));
}

TEST_CASE("restricted and exhaustive agree on random Cayley maps") {
  std::mt19937 rng(2024);
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    for (int t = 0; t < 4; ++t) {
      const auto emb = random_cayley_map(p, rng);
      const auto r = restricted_search(emb, 0, 0);
      const auto e = exhaustive_search(emb, 0, 0);
      INFO("p=" << p << " rho0=" << cycle_notation(emb.rho0_cycles()));
      CHECK(same_group(r, e));
      CHECK(e.total % p == 0);
    }
  }
}

TEST_CASE("perturbing the rotation destroys the scaling symmetry") {
  const auto perturbed = fixtures::swap_in_rotation(fixtures::worked_embedding(), 1, 2);
  const auto e = exhaustive_search(perturbed, 3, 5);
  const auto r = restricted_search(perturbed, 3, 5);
  CHECK(same_group(r, e));
  CHECK(e.aut0_plus + e.aut0_minus < 15);
  CHECK(e.total == 31 * (e.aut0_plus + e.aut0_minus));
  for (std::uint32_t g = 0; g < 31; ++g) {
    CHECK(classify_automorphism(perturbed, translation(perturbed.field(), g)) == Orientation::Preserving);
  }
}

TEST_CASE("K_3 on the sphere has the full symmetric group") {
  const auto e = exhaustive_search(fixtures::k3_sphere());
  CHECK(e.total == 6);
  const auto r = restricted_search(fixtures::k3_sphere(), 3, 3);
  CHECK(r.total == 6);
}

TEST_CASE("exhaustive search refuses large fields") {
  const auto emb = rank_one_embedding(3, 25);
  try {
    exhaustive_search(emb);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("an expired deadline stops a search") {
  SearchOptions opts;
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  try {
    restricted_search(fixtures::worked_embedding(), 3, 5, opts);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("multiplicative automorphisms of the worked example") {
  const auto a = fixtures::worked_example();
  const auto emb = fixtures::worked_embedding();
  const Field& f = emb.field();
  const auto auts = multiplicative_auts(emb, a);
  CHECK(auts.size() == 15);
  const auto lambda9 = scaling(f, 9);
  CHECK(std::any_of(auts.begin(), auts.end(), [&](const EmbAut& x) { return x.perm == lambda9; }));
  CHECK(compose(scaling(f, 2), scaling(f, 5)) == scaling(f, 10));

  // lambda_9 after rho0 on the nonzero elements.
  VertexMap product(31, 0);
  for (std::uint32_t x = 1; x < 31; ++x) product[x] = f.mul(Element{9}, emb.rho0(Element{x})).value;
  std::vector<std::vector<long>> traced;
  std::vector<bool> seen(31, false);
  for (std::uint32_t s = 1; s < 31; ++s) {
    if (seen[s]) continue;
    std::vector<long> c;
    for (auto x = s; !seen[x]; x = product[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    traced.push_back(c);
  }
  const std::vector<std::vector<long>> printed = {
      {1, -18, 4, -10, 16, -9, 2, -5, 8, -20},
      {-2, 28, -8, 19, -1, 14, -4, 25, -16, 7},
      {5, -28, 20, -19, 18, -14, 10, -25, 9, -7}};
  CHECK(normalise(traced, 31) == normalise(printed, 31));
  // ... and it commutes with rho0.
  for (std::uint32_t x = 1; x < 31; ++x) {
    CHECK(f.mul(Element{9}, emb.rho0(Element{x})) == emb.rho0(f.mul(Element{9}, Element{x})));
  }
}

TEST_CASE("multiplicative_auts rejects a non-rank-one rotation") {
  const auto perturbed = fixtures::swap_in_rotation(fixtures::worked_embedding(), 1, 2);
  try {
    multiplicative_auts(perturbed, fixtures::worked_example());
    FAIL("expected VerificationFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VerificationFailed);
  }
}

TEST_CASE("group structure certificates") {
  const auto r = restricted_search(fixtures::worked_embedding(), 3, 5);
  std::vector<VertexMap> plus;
  for (const auto& a : r.stabilizer) plus.push_back(a.perm);
  const auto cert = group_structure(std::span<const VertexMap>(plus));
  CHECK(cert.order == 15);
  CHECK(cert.cyclic);
  CHECK(cert.generator_order == 15);
  CHECK(cert.order_profile == std::map<std::uint64_t, std::size_t>{{1, 1}, {3, 2}, {5, 4}, {15, 8}});

  const std::vector<VertexMap> trivial{identity_map(31)};
  const auto t = group_structure(std::span<const VertexMap>(trivial));
  CHECK(t.order == 1);
  CHECK(t.cyclic);

  const Field f = make_field(31, 1);
  const std::vector<VertexMap> open{identity_map(31), scaling(f, 2)};
  try {
    group_structure(std::span<const VertexMap>(open));
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
  }

  // Z_3 x Z_3 inside Sym(9) acting on cells: not cyclic.
  const auto ab = [](int a, int b) {
    VertexMap s(9);
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) s[x * 3 + y] = ((x + a) % 3) * 3 + (y + b) % 3;
    }
    return s;
  };
  std::vector<VertexMap> klein;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) klein.push_back(ab(a, b));
  }
  const auto k = group_structure(std::span<const VertexMap>(klein));
  CHECK(k.order == 9);
  CHECK_FALSE(k.cyclic);
  CHECK(k.order_profile == std::map<std::uint64_t, std::size_t>{{1, 1}, {3, 8}});
}

TEST_CASE("bound and orientation properties across instances up to q = 100") {
  for (const auto& inst : admissible_instances(100)) {
    const auto setup = build_instance(inst);
    const auto emb = build_rho0(setup.array, natural_orderings(setup.array, 0));
    const auto r = restricted_search(emb, inst.m, inst.n);
    INFO("m=" << inst.m << " n=" << inst.n << " q=" << inst.q);
    CHECK(r.aut0_plus + r.aut0_minus <= inst.m * inst.n);
    CHECK(r.aut0_minus == 0);
    CHECK(r.face_lengths_preserved);
  }
}

TEST_CASE("the expanded group consists of automorphisms") {
  const auto emb = fixtures::worked_embedding();
  const auto r = restricted_search(emb, 3, 5);
  const auto all = expand_automorphisms(emb, r);
  CHECK(all.size() == 465);
  std::set<VertexMap> distinct(all.begin(), all.end());
  CHECK(distinct.size() == 465);
  for (const auto& s : all) REQUIRE(classify_automorphism(emb, s).has_value());
}

TEST_CASE("cycle notation of vertex maps") {
  CHECK(cycle_notation(identity_map(4)) == "()");
  CHECK(cycle_notation(VertexMap{0, 2, 3, 1}) == "(1,2,3)");
}
