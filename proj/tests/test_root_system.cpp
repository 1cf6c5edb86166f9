#include <catch_amalgamated.hpp>

#include <set>

#include "seaweed/root_system.hpp"

using namespace seaweed;

namespace {

// Independent oracle for the classical families: the explicit coordinate
// models in R^n. Roots from the Cartan-matrix closure are converted to the
// e-basis and must land exactly in the model set.
std::vector<std::vector<int>> classical_model(const DynkinType& t) {
  int l = t.rank;
  std::vector<std::vector<int>> roots;
  int n = (t.family == 'A') ? l + 1 : l;
  auto e = [&](int i) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto minus = [&](std::vector<int> a, const std::vector<int>& b) {
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] -= b[static_cast<std::size_t>(i)];
    return a;
  };
  auto plus = [&](std::vector<int> a, const std::vector<int>& b) {
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
    return a;
  };
  switch (t.family) {
    case 'A':
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots.push_back(minus(e(i), e(j)));
      break;
    case 'B':
      for (int i = 0; i < l; ++i) roots.push_back(e(i));
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
          roots.push_back(minus(e(i), e(j)));
          roots.push_back(plus(e(i), e(j)));
        }
      break;
    case 'C':
      for (int i = 0; i < l; ++i) roots.push_back(plus(e(i), e(i)));
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
          roots.push_back(minus(e(i), e(j)));
          roots.push_back(plus(e(i), e(j)));
        }
      break;
    case 'D':
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
          roots.push_back(minus(e(i), e(j)));
          roots.push_back(plus(e(i), e(j)));
        }
      break;
    default:
      FAIL("not a classical family");
  }
  return roots;
}

std::vector<int> classical_simple(const DynkinType& t, int i) { // 1-based
  int l = t.rank;
  int n = (t.family == 'A') ? l + 1 : l;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  auto set = [&](int k, int val) { v[static_cast<std::size_t>(k)] = val; };
  if (i < l || t.family == 'A' || (t.family == 'D' && i == l - 1)) {
    set(i - 1, 1);
    set(i, -1);
    return v;
  }
  switch (t.family) {
    case 'B': set(l - 1, 1); break;                 // e_l
    case 'C': set(l - 1, 2); break;                 // 2 e_l
    case 'D': set(l - 2, 1); set(l - 1, 1); break;  // e_{l-1} + e_l
  }
  return v;
}

std::size_t expected_count(const DynkinType& t) {
  int l = t.rank;
  switch (t.family) {
    case 'A': return static_cast<std::size_t>(l * (l + 1) / 2);
    case 'B':
    case 'C': return static_cast<std::size_t>(l * l);
    case 'D': return static_cast<std::size_t>(l * (l - 1));
    case 'G': return 6;
    case 'F': return 24;
    case 'E': return l == 6 ? 36 : (l == 7 ? 63 : 120);
  }
  return 0;
}

std::vector<DynkinType> all_test_types() {
  std::vector<DynkinType> ts;
  for (int l = 1; l <= 8; ++l) ts.push_back({'A', l});
  for (int l = 2; l <= 8; ++l) ts.push_back({'B', l});
  for (int l = 2; l <= 8; ++l) ts.push_back({'C', l});
  for (int l = 4; l <= 8; ++l) ts.push_back({'D', l});
  ts.push_back({'E', 6});
  ts.push_back({'E', 7});
  ts.push_back({'E', 8});
  ts.push_back({'F', 4});
  ts.push_back({'G', 2});
  return ts;
}

} // namespace

TEST_CASE("invalid type parameters are rejected") {
  CHECK_THROWS_AS(DynkinType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("E5"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("F5"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("G3"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("A0"), std::invalid_argument);
  CHECK_THROWS_AS(DynkinType::parse("H4"), std::invalid_argument);
}

TEST_CASE("positive root counts and the dimension formula") {
  for (const auto& t : all_test_types()) {
    RootSystem rs(t);
    INFO(t.name());
    CHECK(rs.num_positive() == expected_count(t));
  }
  CHECK(RootSystem({'A', 1}).positive_roots() == std::vector<Root>{{1}});
  CHECK(RootSystem({'G', 2}).num_positive() == 6);
  CHECK(RootSystem({'F', 4}).num_positive() == 24);
  CHECK(RootSystem({'E', 8}).num_positive() == 120);
}

TEST_CASE("classical families agree with the explicit coordinate models") {
  for (const auto& t : all_test_types()) {
    if (t.exceptional()) continue;
    RootSystem rs(t);
    auto model = classical_model(t);
    std::set<std::vector<int>> model_set(model.begin(), model.end());
    REQUIRE(rs.num_positive() == model_set.size());
    int n = (t.family == 'A') ? t.rank + 1 : t.rank;
    for (const Root& r : rs.positive_roots()) {
      std::vector<int> v(static_cast<std::size_t>(n), 0);
      for (int i = 1; i <= t.rank; ++i) {
        auto s = classical_simple(t, i);
        for (int k = 0; k < n; ++k)
          v[static_cast<std::size_t>(k)] +=
              r[static_cast<std::size_t>(i - 1)] * s[static_cast<std::size_t>(k)];
      }
      INFO(t.name());
      CHECK(model_set.count(v) == 1);
    }
  }
}

TEST_CASE("canonical order: heights ascend, lexicographic tie break") {
  RootSystem rs(DynkinType{'F', 4});
  const auto& P = rs.positive_roots();
  for (std::size_t i = 0; i + 1 < P.size(); ++i) {
    int ha = height(P[i]), hb = height(P[i + 1]);
    CHECK((ha < hb || (ha == hb && P[i] < P[i + 1])));
  }
  for (int i = 1; i <= 4; ++i) CHECK(rs.positive_index(rs.simple_root(i)) < 4);
}

TEST_CASE("closure and root strings stay inside the constructed set") {
  for (const char* name : {"F4", "G2", "D5", "E6"}) {
    RootSystem rs(DynkinType::parse(name));
    const auto& P = rs.positive_roots();
    for (const Root& a : P)
      for (const Root& b : P) {
        Root s = add(a, b);
        if (!rs.is_root(s)) continue;
        CHECK(rs.is_positive_root(s));
      }
    // reflection s_alpha(beta) is always a root
    for (const Root& a : P)
      for (const Root& b : P) {
        long c = rs.pairing(b, a);
        Root refl = b;
        for (long k = 0; k < c; ++k) refl = sub(refl, a);
        for (long k = 0; k > c; --k) refl = add(refl, a);
        CHECK((is_zero_root(refl) || rs.is_root(refl)));
      }
  }
}

TEST_CASE("sub_positive_roots") {
  RootSystem f4(DynkinType{'F', 4});
  CHECK(f4.sub_positive_roots({1, 2, 3}).size() == 9);
  CHECK(f4.sub_positive_roots({}).empty());
  CHECK_THROWS_AS(f4.sub_positive_roots({0}), std::out_of_range);
  CHECK_THROWS_AS(f4.sub_positive_roots({5}), std::out_of_range);
  RootSystem e6(DynkinType{'E', 6});
  auto single = e6.sub_positive_roots({2});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == e6.simple_root(2));
}

TEST_CASE("highest_root") {
  RootSystem f4(DynkinType{'F', 4});
  CHECK(f4.highest_root({1, 2, 3, 4}) == Root{2, 3, 4, 2});
  RootSystem g2(DynkinType{'G', 2});
  CHECK(g2.highest_root({1, 2}) == Root{3, 2});
  CHECK(f4.highest_root({3}) == f4.simple_root(3));
  CHECK_THROWS_AS(f4.highest_root({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(f4.highest_root({}), std::invalid_argument);
  // dominance over the whole subsystem
  RootSystem e6(DynkinType{'E', 6});
  for (const auto& S : std::vector<std::vector<int>>{{1, 3, 4}, {2, 4, 5}, {1, 2, 3, 4, 5, 6}}) {
    Root top = e6.highest_root(S);
    for (const Root& r : e6.sub_positive_roots(S))
      for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] <= top[i]);
  }
}

TEST_CASE("pairing") {
  RootSystem f4(DynkinType{'F', 4});
  for (const Root& a : f4.positive_roots()) CHECK(f4.pairing(a, a) == 2);
  CHECK(f4.pairing(f4.simple_root(1), f4.simple_root(2)) == -1);
  // strong orthogonality of the first two cascade roots
  Root eps1{2, 3, 4, 2}, eps2{0, 1, 2, 2};
  CHECK(f4.pairing(eps2, eps1) == 0);
  // linearity in the first argument over integer combinations
  Root s = add(eps1, eps2);
  CHECK(f4.pairing(s, f4.simple_root(3)) ==
        f4.pairing(eps1, f4.simple_root(3)) + f4.pairing(eps2, f4.simple_root(3)));
  CHECK_THROWS_AS(f4.pairing(eps1, Root{1, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("connected components") {
  RootSystem f4(DynkinType{'F', 4});
  CHECK(f4.connected_components({2, 4}) == std::vector<std::vector<int>>{{2}, {4}});
  CHECK(f4.connected_components({}).empty());
  RootSystem e6(DynkinType{'E', 6});
  CHECK(e6.connected_components({1, 3, 4, 2}) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
}

TEST_CASE("subset type labels") {
  RootSystem f4(DynkinType{'F', 4});
  CHECK(subset_type_label(f4, {1, 2, 3}) == "B3");
  CHECK(subset_type_label(f4, {2, 3, 4}) == "C3");
  CHECK(subset_type_label(f4, {2, 4}) == "A1^2");
  CHECK(subset_type_label(f4, {1, 2, 3, 4}) == "F4");
  RootSystem e7(DynkinType{'E', 7});
  CHECK(subset_type_label(e7, {2, 3, 4, 5, 6, 7}) == "D6");
  CHECK(subset_type_label(e7, {1, 2, 3, 4, 5, 6}) == "E6");
  CHECK(subset_type_label(e7, {2, 3, 4, 5}) == "D4");
  CHECK(subset_type_label(e7, {1, 2, 4, 5, 7}) == "A3xA1^2");
  RootSystem g2(DynkinType{'G', 2});
  CHECK(subset_type_label(g2, {1, 2}) == "G2");
}

TEST_CASE("diagram automorphisms") {
  CHECK(diagram_automorphisms(DynkinType{'F', 4}).size() == 1);
  CHECK(diagram_automorphisms(DynkinType{'G', 2}).size() == 1);
  CHECK(diagram_automorphisms(DynkinType{'E', 7}).size() == 1);
  CHECK(diagram_automorphisms(DynkinType{'E', 8}).size() == 1);
  auto e6 = diagram_automorphisms(DynkinType{'E', 6});
  REQUIRE(e6.size() == 2);
  CHECK(e6[1] == std::vector<int>{6, 2, 5, 4, 3, 1});
}
