#include <doctest.h>

#include <algorithm>
#include <functional>

#include "unicyclic/canonical.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/segments.hpp"

using namespace unicyclic;

namespace {

bool throws_code(errc expected, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code() == expected;
  }
  return false;
}

}  // namespace

TEST_CASE("elementary families") {
  CHECK(families::path(1).n == 1);
  CHECK(families::cycle(3).edge_count() == 3);
  Graph s5 = families::star(5);
  CHECK(s5.degree(0) == 4);
  CHECK(throws_code(errc::out_of_range, [] { families::cycle(2); }));
  CHECK(throws_code(errc::out_of_range, [] { families::path(0); }));
}

TEST_CASE("us and up") {
  Graph us6 = families::us(6);
  CHECK(us6.n == 6);
  CHECK(cycle_info(us6).girth == 3);
  int branch = 0;
  for (int v = 0; v < 6; ++v)
    if (us6.degree(v) >= 3) ++branch;
  CHECK(branch == 1);

  Graph up6 = families::up(6);
  int maxdeg = 0;
  for (int v = 0; v < 6; ++v) maxdeg = std::max(maxdeg, up6.degree(v));
  CHECK(maxdeg == 3);
  CHECK(cycle_info(up6).girth == 3);

  CHECK(isomorphic(families::us(4), families::up(4)));

  Graph us74 = families::us(7, 4);
  CHECK(cycle_info(us74).girth == 4);
  CHECK(segment_sequence(us74).lengths == std::vector<int>{4, 1, 1, 1});

  for (int n = 5; n <= 9; ++n)
    for (int l = 3; l <= n; ++l) {
      CHECK(is_unicyclic(families::us(n, l)));
      CHECK(is_unicyclic(families::up(n, l)));
    }
  CHECK(throws_code(errc::out_of_range, [] { families::us(3, 4); }));
}

TEST_CASE("u_cycle_seg") {
  Graph h2 = families::u_cycle_seg({4, 4, 1, 1}, 1);
  CHECK(h2.n == 10);
  CHECK(segment_sequence(h2).lengths == std::vector<int>{4, 4, 1, 1});

  Graph c4p6 = families::u_cycle_seg({6, 4}, 2);
  CHECK(cycle_info(c4p6).girth == 4);

  CHECK(isomorphic(families::u_cycle_seg({3, 3}, 1), families::up(6)));
  CHECK(throws_code(errc::cycle_too_short, [] { families::u_cycle_seg({2, 3}, 1); }));
}

TEST_CASE("u_cycle_seg round trip over all short sequences") {
  // segment_sequence(U_i(L)) recovers sort-descending(L)
  std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int left) {
    if (left == 0) {
      if (!cur.empty() && cur[0] >= 3) {
        Graph g = families::u_cycle_seg(cur, 1);
        std::vector<int> expect = cur;
        std::sort(expect.begin(), expect.end(), std::greater<>());
        CHECK(segment_sequence(g).lengths == expect);
        CHECK(is_unicyclic(g));
      }
      return;
    }
    int cap = cur.empty() ? left : std::min(left, cur.back());
    for (int next = cap; next >= 1; --next) {
      cur.push_back(next);
      rec(cur, left - next);
      cur.pop_back();
    }
  };
  for (int total = 3; total <= 12; ++total) {
    std::vector<int> cur;
    rec(cur, total);
  }
}

TEST_CASE("u_two_branch") {
  Graph h1 = families::u_two_branch(4, 4, {1}, {1});
  CHECK(h1.n == 10);
  CHECK(cycle_info(h1).girth == 8);
  CHECK(segment_sequence(h1).lengths == std::vector<int>{4, 4, 1, 1});

  Graph u21 = families::u_two_branch(2, 1, {1}, {1});
  CHECK(u21.n == 5);
  CHECK(cycle_info(u21).girth == 3);

  // symmetric arcs: swapping the sides gives an isomorphic graph
  CHECK(isomorphic(families::u_two_branch(2, 2, {2}, {1}),
                   families::u_two_branch(2, 2, {1}, {2})));

  CHECK(throws_code(errc::not_simple, [] { families::u_two_branch(1, 1, {1}, {1}); }));
  CHECK(throws_code(errc::out_of_range, [] { families::u_two_branch(2, 2, {}, {1}); }));
}

TEST_CASE("u1n") {
  Graph g6 = families::u1n(6);
  CHECK(g6.n == 6);
  CHECK(segment_sequence(g6).lengths == std::vector<int>(6, 1));
  Graph g8 = families::u1n(8);
  CHECK(segment_sequence(g8).lengths == std::vector<int>(8, 1));
  int deg5 = 0;
  for (int v = 0; v < 8; ++v)
    if (g8.degree(v) == 5) ++deg5;
  CHECK(deg5 == 1);  // the n-5 pendants sit on one triangle vertex
  CHECK(throws_code(errc::out_of_range, [] { families::u1n(5); }));
}

TEST_CASE("starlike and cycle_with_pendants") {
  CHECK(isomorphic(families::starlike({1, 1, 1}), families::star(4)));
  Graph spider = families::starlike({3, 2, 1});
  CHECK(spider.n == 7);
  CHECK(segment_sequence(spider).lengths == std::vector<int>{3, 2, 1});

  // Fig. 4: C_11 with pendant paths 2,1 / 3 / 1 on three vertices vs gathered
  Graph fig4_c = families::cycle_with_pendants(11, {{0, {2, 1}}, {3, {3}}, {6, {1}}});
  Graph fig4_sc = families::cycle_with_pendants(11, {{0, {2, 1, 3, 1}}});
  CHECK(fig4_c.n == 18);
  CHECK(fig4_sc.n == 18);
  CHECK(cycle_info(fig4_c).branch_vertices.size() == 3);
  CHECK(cycle_info(fig4_sc).branch_vertices.size() == 1);
  CHECK(throws_code(errc::out_of_range,
                    [] { families::cycle_with_pendants(3, {{5, {1}}}); }));
}

TEST_CASE("slide") {
  CHECK(isomorphic(families::slide(6, 1, build_graph(1, {}), 0), families::path(6)));
  Graph s = families::slide(5, 3, families::cycle(3), 0);
  CHECK(s.n == 7);
  CHECK(cycle_info(s).girth == 3);
  // path symmetry
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(isomorphic(families::slide(n, k, families::cycle(3), 0),
                       families::slide(n, n + 1 - k, families::cycle(3), 0)));
  CHECK(throws_code(errc::out_of_range, [] { families::slide(3, 4, families::cycle(3), 0); }));
}

TEST_CASE("constructors produce unicyclic graphs") {
  CHECK(is_unicyclic(families::us(8)));
  CHECK(is_unicyclic(families::up(8, 5)));
  CHECK(is_unicyclic(families::u_cycle_seg({5, 2, 2, 1}, 1)));
  CHECK(is_unicyclic(families::u_two_branch(3, 2, {2, 1}, {1})));
  CHECK(is_unicyclic(families::u1n(9)));
  CHECK(is_unicyclic(families::slide(4, 2, families::cycle(4), 1)));
  CHECK(is_tree(families::starlike({2, 2, 2})));
}
