#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "fig4_expected.hpp"
#include "lnec/error.hpp"
#include "lnec/mincut.hpp"
#include "lnec/primaries.hpp"
#include "support/oracles.hpp"

using namespace lnec;

namespace {

std::set<EdgeSet> as_sets(const Network& net, const fig4::Pairs& pairs) {
  std::set<EdgeSet> out;
  for (const auto& p : pairs) out.insert(net.edge_set(p));
  return out;
}

std::set<EdgeSet> as_sets(const std::vector<EdgeSet>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("fig4 primary families") {
  Network net = testkit::fig4();
  NodeId t1 = net.find_node("t1"), t2 = net.find_node("t2");

  auto r1 = enumerate_primary(net, t1, 1);
  CHECK(as_sets(r1.members) == as_sets(net, fig4::kPrimaryT1R1));
  CHECK(r1.members.size() == 7);
  CHECK(enumerate_primary(net, t2, 1).members.size() == 7);

  auto r2 = enumerate_primary(net, t1, 2);
  CHECK(r2.productive_iterations == r2.members.size());
  // Every listed pair is primary.
  for (const EdgeSet& p : as_sets(net, fig4::kPrimaryT1R2Listed)) CHECK(primary_min_cut(net, p, t1) == p);
  // The definition-level oracle decides the complete family, which also holds
  // {e4,e6}, {e4,e10} and {e4,e18} (the images of listed pairs under the
  // e1 <-> e4 mirror of the network; {e4,e18} is the primary cut of {e2,e4}).
  CHECK(as_sets(r2.members) == as_sets(oracle::primary_family(net, t1, 2)));
  CHECK(r2.members.size() == 17);
  CHECK(enumerate_primary(net, t2, 2).members.size() == 17);

  CHECK(enumerate_primary(net, t1, 0).members.empty());
  CHECK_THROWS_AS(enumerate_primary(net, t1, 6), Error);
}

TEST_CASE("every member is a fixed point and every fixed point is a member") {
  Network net = testkit::fig4();
  NodeId t1 = net.find_node("t1");
  for (std::size_t r = 1; r <= 2; ++r) {
    auto fam = as_sets(enumerate_primary(net, t1, r).members);
    std::vector<EdgeId> all(net.edge_count());
    for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
    for (EdgeId a = 0; a < all.size(); ++a)
      for (EdgeId b = (r == 1 ? a : a + 1); b < (r == 1 ? a + 1 : all.size()); ++b) {
        EdgeSet rho = r == 1 ? EdgeSet{a} : EdgeSet{a, b};
        CHECK((primary_min_cut(net, rho, t1) == rho) == (fam.count(rho) == 1));
      }
  }
}

TEST_CASE("comparison family R_t(2) on fig4") {
  Network net = testkit::fig4();
  auto r = enumerate_R(net, net.find_node("t1"), 2);
  CHECK(r.size() == 99);
  CHECK(as_sets(r) == as_sets(net, fig4::kRT1R2));
  CHECK(enumerate_R(net, net.find_node("t2"), 2).size() == 99);
  CHECK_THROWS_AS(enumerate_R(net, net.find_node("t1"), 0), Error);

  auto a = as_sets(enumerate_primary(net, net.find_node("t1"), 2).members);
  auto rs = as_sets(r);
  CHECK(std::includes(rs.begin(), rs.end(), a.begin(), a.end()));
}

TEST_CASE("parallel edges: every subset is primary") {
  Network net = parse_network("node s source\nnode t sink\nedge a s t\nedge b s t\nedge c s t\nedge d s t\n");
  NodeId t = net.find_node("t");
  CHECK(enumerate_R(net, t, 2).size() == 6);
  CHECK(enumerate_primary(net, t, 2).members.size() == 6);
  CHECK(enumerate_primary(net, t, 3).members.size() == 4);
  auto b = mds_field_size_bound(net, 1);
  CHECK(b.improved == 4);  // binom(4, 3)
}

TEST_CASE("correctable counts") {
  Network net = testkit::fig4();
  NodeId t1 = net.find_node("t1");
  CHECK(count_correctable(net, t1, 1, CountMethod::classes) == 2239);
  CHECK(count_correctable(net, t1, 0, CountMethod::classes) == 31);
  std::string wide = "node s source\nnode t sink\n";
  for (int i = 0; i < 25; ++i) wide += "edge p" + std::to_string(i) + " s t\n";
  Network big = parse_network(wide);
  CHECK_THROWS_AS(count_correctable(big, big.find_node("t"), 1, CountMethod::exhaustive), Error);
  CHECK_THROWS_AS(count_correctable(net, t1, 2, CountMethod::classes), Error);

  Network single = parse_network("node s source\nnode t sink\nedge e s t\n");
  CHECK(count_correctable(single, single.find_node("t"), 1, CountMethod::exhaustive) == 1);
  CHECK(count_correctable(single, single.find_node("t"), 1, CountMethod::classes) == 1);
}

TEST_CASE("equivalence classes on fig4") {
  Network net = testkit::fig4();
  auto classes = classify_by_primary(net, net.find_node("t1"));
  REQUIRE(classes.size() == fig4::kClassesT1.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CHECK(classes[i].key == net.edge_set(fig4::kClassesT1[i].key));
    CHECK(classes[i].members == net.edge_set(fig4::kClassesT1[i].members));
  }

  Network chain = parse_network("node s source\nnode a\nnode b\nnode t sink\nedge e1 s a\nedge e2 a b\nedge e3 b t\n");
  auto one = classify_by_primary(chain, chain.find_node("t"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].key == chain.edge_set(std::vector<std::string>{"e3"}));

  Network two = parse_network("node s source\nnode t sink\nedge a s t\nedge b s t\n");
  CHECK(classify_by_primary(two, two.find_node("t")).size() == 2);
}

TEST_CASE("field-size bounds on fig4") {
  Network net = testkit::fig4();
  std::vector<std::size_t> beta{2, 2};
  BoundReport b = field_size_bound(net, 3, beta);
  CHECK(b.r_bound == 198);
  CHECK(b.naive == 420);
  CHECK(b.improved == 34);
  CHECK(b.min_prime_power == 37);
  for (const auto& s : b.per_sink) {
    CHECK(s.floor == 10);
    CHECK(s.floor <= s.primary);
    CHECK(s.capacity == 5);
  }
  CHECK(b.improved <= b.r_bound);
  CHECK(b.r_bound <= b.naive);
  CHECK(mds_field_size_bound(net, 3).improved == b.improved);

  std::vector<std::size_t> zero{0, 0};
  BoundReport z = field_size_bound(net, 3, zero);
  CHECK(z.improved == 0);
  CHECK(z.r_bound == 0);
  CHECK(z.naive == 0);
  CHECK(z.min_prime_power == 2);

  std::vector<std::size_t> too_big{3, 2};
  CHECK_THROWS_AS(field_size_bound(net, 3, too_big), Error);
  CHECK_THROWS_AS(field_size_bound(net, 6, zero), Error);
  CHECK_THROWS_AS(field_size_bound(net, 0, zero), Error);
  std::vector<std::size_t> one{1};
  CHECK_THROWS_AS(field_size_bound(net, 3, one), Error);
}

TEST_CASE("prime powers and binomials") {
  CHECK(least_prime_power_above(28) == 29);
  CHECK(least_prime_power_above(34) == 37);
  CHECK(least_prime_power_above(0) == 2);
  CHECK(least_prime_power_above(24) == 25);
  CHECK(is_prime_power(27));
  CHECK_FALSE(is_prime_power(12));
  CHECK(binomial(21, 2) == 210);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("random DAGs: enumeration, R family, separation and counts against brute force") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 80; ++i) {
    Network net = testkit::random_dag(rng, 9);
    const std::size_t n = net.edge_count();
    for (NodeId t : net.sinks()) {
      const std::size_t cap = source_capacity(net, t);
      for (std::size_t r = 1; r <= std::min<std::size_t>(cap, 3); ++r) {
        auto fam = enumerate_primary(net, t, r);
        CHECK(as_sets(fam.members) == as_sets(oracle::primary_family(net, t, r)));
        CHECK(fam.members.size() >= binomial(net.in_edges(t).size(), r));
        auto rs = as_sets(enumerate_R(net, t, r));
        auto as = as_sets(fam.members);
        CHECK(std::includes(rs.begin(), rs.end(), as.begin(), as.end()));
        // Every rho with mincut <= r is separated from t by some member.
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
          EdgeSet rho = oracle::from_mask(mask, n);
          if (mincut_edges_to_node(net, rho, t) > r) continue;
          bool covered = std::any_of(fam.members.begin(), fam.members.end(),
                                     [&](const EdgeSet& eta) { return oracle::separates(net, eta, rho, t); });
          CHECK(covered);
        }
      }
      for (std::size_t r = 0; r <= std::min<std::size_t>(cap, 1); ++r)
        CHECK(count_correctable(net, t, r, CountMethod::exhaustive) ==
              count_correctable(net, t, r, CountMethod::classes));
      std::uint64_t brute = 0;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        brute += oracle::mincut(net, oracle::from_mask(mask, n), t) <= 1;
      CHECK(count_correctable(net, t, 1, CountMethod::exhaustive) == brute);
    }
  }
}
