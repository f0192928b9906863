#include <doctest.h>

#include "helpers.hpp"

#include <functional>
#include <map>
#include <set>

#include "unicyclic/canonical.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/invariants.hpp"
#include "unicyclic/segments.hpp"

using namespace unicyclic;

namespace {

ClassFilter order_filter(int n) {
  ClassFilter f;
  f.order = n;
  return f;
}

}  // namespace

TEST_CASE("tree counts") {
  const int expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(trees(n).size() == static_cast<size_t>(expected[n]));
  CHECK_THROWS_AS(trees(13), error);
}

TEST_CASE("tree generation matches the sequence-encoding dedupe") {
  for (int n = 1; n <= 7; ++n) {
    std::set<CanonicalKey> mine;
    for (const Graph& t : trees(n)) mine.insert(canonical_key(t));
    CHECK(mine == test_helpers::prufer_trees(n));
  }
}

TEST_CASE("unicyclic class counts") {
  const std::map<int, long long> expected = {{3, 1}, {4, 2}, {5, 5}, {6, 13}, {7, 33}, {8, 89}};
  for (auto [n, count] : expected) CHECK(class_count(order_filter(n)) == count);
}

TEST_CASE("unicyclic generation matches independent brute force") {
  for (int n = 3; n <= 6; ++n) {
    std::set<CanonicalKey> mine;
    for (const Graph& g : unicyclic_graphs(order_filter(n))) mine.insert(canonical_key(g));
    CHECK(mine == test_helpers::brute_force_unicyclic(n));
  }
}

TEST_CASE("emission is deduplicated and key-ascending") {
  auto graphs = unicyclic_graphs(order_filter(8));
  CanonicalKey prev;
  for (size_t i = 0; i < graphs.size(); ++i) {
    CanonicalKey key = canonical_key(graphs[i]);
    if (i > 0) CHECK(prev < key);
    prev = key;
  }
}

TEST_CASE("filters") {
  ClassFilter f = order_filter(5);
  f.girth = 5;
  auto only_c5 = unicyclic_graphs(f);
  REQUIRE(only_c5.size() == 1);
  CHECK(isomorphic(only_c5[0], families::cycle(5)));

  ClassFilter seq = order_filter(10);
  seq.segment_sequence = make_segment_sequence({4, 4, 1, 1});
  auto members = unicyclic_graphs(seq);
  CHECK(members.size() >= 2);
  std::set<CanonicalKey> keys;
  for (const Graph& g : members) keys.insert(canonical_key(g));
  CHECK(keys.count(canonical_key(families::u_cycle_seg({4, 4, 1, 1}, 1))));
  CHECK(keys.count(canonical_key(families::u_two_branch(4, 4, {1}, {1}))));

  // order n with n segments forces all segment lengths 1
  ClassFilter allones = order_filter(7);
  allones.segment_count = 7;
  for (const Graph& g : unicyclic_graphs(allones))
    CHECK(segment_sequence(g).lengths == std::vector<int>(7, 1));

  // soundness re-check on a mixed filter
  ClassFilter mixed = order_filter(8);
  mixed.girth = 4;
  mixed.segment_count = 4;
  for (const Graph& g : unicyclic_graphs(mixed)) {
    CHECK(is_unicyclic(g));
    CHECK(cycle_info(g).girth == 4);
    CHECK(segment_sequence(g).count() == 4);
  }
}

TEST_CASE("filter validation") {
  ClassFilter bad = order_filter(6);
  bad.girth = 7;
  CHECK_THROWS_AS(unicyclic_graphs(bad), error);

  ClassFilter sum = order_filter(6);
  sum.segment_sequence = make_segment_sequence({4, 4});
  CHECK_THROWS_AS(unicyclic_graphs(sum), error);

  ClassFilter both = order_filter(6);
  both.segment_sequence = make_segment_sequence({3, 3});
  both.segment_count = 2;
  CHECK_THROWS_AS(unicyclic_graphs(both), error);

  CHECK_THROWS_AS(unicyclic_graphs(order_filter(12)), error);
}

TEST_CASE("segment sequences partition the classes") {
  for (int n = 3; n <= 10; ++n) {
    long long total = 0;
    for (int m = 1; m <= n; ++m) {
      ClassFilter f = order_filter(n);
      f.segment_count = m;
      total += class_count(f);
    }
    CHECK(total == class_count(order_filter(n)));
  }
}

TEST_CASE("segment sums equal the order") {
  for (int n = 3; n <= 10; ++n)
    for (const Graph& g : unicyclic_graphs(order_filter(n)))
      CHECK(segment_sequence(g).sum() == n);
}
