#ifndef SEAWEED_REFERENCE_TABLES_HPP
#define SEAWEED_REFERENCE_TABLES_HPP

#include <sstream>
#include <string>
#include <vector>

#include "seaweed/classify.hpp"

namespace seaweed {

/// One row of the published classification of star pairs for the exceptional
/// types: the pair, its index, and the printed rank (an interval when the
/// source could only bound it). Type labels are recomputed from the subsets.
struct ReferenceRow {
  std::vector<int> pi1;
  std::vector<int> pi2;
  int index;
  int rank_lo;
  int rank_hi;
};

inline std::vector<ReferenceRow> reference_rows(const DynkinType& t) {
  using R = ReferenceRow;
  std::vector<R> rows;
  auto add = [&rows](std::vector<int> p1, std::vector<int> p2, int ind, int lo, int hi) {
    rows.push_back(R{std::move(p1), std::move(p2), ind, lo, hi});
  };
  if (t.family == 'F' && t.rank == 4) {
    // pi1 of type B3
    add({1, 2, 3}, {2, 4}, 1, 0, 0);
    add({1, 2, 3}, {1, 2, 4}, 1, 1, 1);
    add({1, 2, 3}, {2, 3, 4}, 2, 2, 2);
    // pi1 of type C3
    add({2, 3, 4}, {1, 3}, 1, 1, 1);
    add({2, 3, 4}, {1, 4}, 1, 1, 1);
    add({2, 3, 4}, {1, 2, 4}, 1, 1, 1);
    add({2, 3, 4}, {1, 3, 4}, 1, 1, 1);
    add({2, 3, 4}, {1, 2, 3}, 2, 2, 2);
    return rows;
  }
  if (t.family == 'E' && t.rank == 6) {
    // pi1 = {2,3,4,5}, type D4
    add({2, 3, 4, 5}, {1, 4, 6}, 1, 0, 0);
    add({2, 3, 4, 5}, {1, 2, 4, 6}, 1, 1, 1);
    add({2, 3, 4, 5}, {1, 2, 3, 4, 6}, 1, 1, 1);
    add({2, 3, 4, 5}, {1, 2, 4, 5, 6}, 1, 1, 1);
    // pi1 = {1,2,3,4,5}, type D5
    add({1, 2, 3, 4, 5}, {2, 3, 6}, 1, 0, 0);
    add({1, 2, 3, 4, 5}, {1, 2, 3, 6}, 1, 1, 1);
    add({1, 2, 3, 4, 5}, {2, 3, 5, 6}, 1, 0, 0);
    add({1, 2, 3, 4, 5}, {1, 2, 3, 5, 6}, 1, 1, 1);
    add({1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, 1, 1, 1);
    return rows;
  }
  if (t.family == 'E' && t.rank == 7) {
    // pi1 = {1,2,3,4,5}, type D5
    add({1, 2, 3, 4, 5}, {2, 3, 5, 6, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5}, {1, 2, 3, 5, 6, 7}, 1, 1, 1);
    add({1, 2, 3, 4, 5}, {2, 3, 4, 5, 6, 7}, 3, 3, 3);
    // pi1 = {2,3,4,5,6}, type D5
    add({2, 3, 4, 5, 6}, {1, 2, 5, 7}, 1, 0, 0);
    add({2, 3, 4, 5, 6}, {1, 2, 3, 5, 7}, 1, 0, 0);
    // pi1 = {2,3,4,5,6,7}, type D6
    add({2, 3, 4, 5, 6, 7}, {1, 4}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 6}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 4, 5}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 5, 6}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 6}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 5, 6}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 3, 4}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 4, 5}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 4, 6}, 2, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 4, 6, 7}, 2, 1, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4, 6}, 2, 1, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4, 6, 7}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 5, 6, 7}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4, 5}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 4, 5, 6, 7}, 2, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4, 5, 6}, 2, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 6}, 2, 1, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 5, 6, 7}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 6, 7}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 4, 5, 6}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 4, 5, 6, 7}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6}, 3, 3, 3);
    // pi1 = {1,2,3,4,5,6}, type E6
    add({1, 2, 3, 4, 5, 6}, {1, 2, 5, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6}, {1, 2, 3, 5, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6}, {2, 3, 5, 6, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6}, {1, 2, 3, 5, 6, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6}, {1, 2, 4, 5, 6, 7}, 1, 1, 1);
    // pi1 = {1,2,4,5,7}, type A1^2 x A3
    add({1, 2, 4, 5, 7}, {2, 3, 5, 6, 7}, 1, 1, 1);
    add({1, 2, 4, 5, 7}, {1, 2, 3, 5, 6, 7}, 1, 1, 1);
    // pi1 = {1,2,4,5,6,7}, type A1 x A5
    add({1, 2, 4, 5, 6, 7}, {2, 3, 5, 6, 7}, 1, 1, 1);
    add({1, 2, 4, 5, 6, 7}, {1, 2, 3, 5, 6, 7}, 1, 1, 1);
    // pi1 = {2,3,4,5,7}, type D4 x A1
    add({2, 3, 4, 5, 7}, {1, 4, 6}, 1, 0, 0);
    add({2, 3, 4, 5, 7}, {1, 2, 4, 6}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 4, 6, 7}, 1, 0, 0);
    add({2, 3, 4, 5, 7}, {1, 2, 4, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 5, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 3, 5, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 2, 4, 5, 6}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 2, 3, 4, 6}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 4, 5, 6, 7}, 1, 0, 0);
    add({2, 3, 4, 5, 7}, {1, 2, 3, 4, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 3, 4, 5, 6, 7}, 1, 1, 1);
    // pi1 = {1,2,3,4,5,7}, type D5 x A1
    add({1, 2, 3, 4, 5, 7}, {2, 3, 6}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7}, {2, 3, 5, 6}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7}, {2, 3, 6, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7}, {1, 2, 3, 6, 7}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {1, 2, 3, 5, 6}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {2, 5, 6, 7}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {3, 5, 6, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7}, {1, 3, 5, 6, 7}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {1, 2, 3, 4, 6}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {1, 2, 3, 4, 6, 7}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {2, 4, 5, 6, 7}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {3, 4, 5, 6, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7}, {1, 3, 4, 5, 6, 7}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {2, 3, 5, 6, 7}, 2, 1, 2);
    add({1, 2, 3, 4, 5, 7}, {1, 2, 3, 5, 6, 7}, 2, 2, 2);
    return rows;
  }
  if (t.family == 'E' && t.rank == 8) {
    // pi1 = {2,3,4,5,6,7}, type D6; pi2 cascades of size 3
    add({2, 3, 4, 5, 6, 7}, {1, 4, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 6, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 4, 7, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 6, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 4, 5, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 5, 6, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 5, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 4, 5, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 5, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 4, 5, 7, 8}, 1, 1, 1);
    // cascades of size 4
    add({2, 3, 4, 5, 6, 7}, {1, 4, 6, 8}, 2, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4, 6, 8}, 2, 1, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4, 5, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4, 5, 6, 8}, 2, 0, 0);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 6, 8}, 2, 1, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4, 5, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 3, 4, 5, 6, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 4, 5, 6, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 4, 5, 6, 7, 8}, 2, 2, 2);
    // cascades of size 5
    add({2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 8}, 3, 3, 3);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 8}, 3, 3, 3);
    add({2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 7, 8}, 3, 3, 3);
    // pi1 = {2,...,8}, type D7; pi2 cascades of size 3
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 5}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 7}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 5, 6}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 5}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 7}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 4, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 4, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 5, 6}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 3, 4, 7}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 3, 4, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 3, 4, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 4, 5, 6}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 7}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 3, 4, 5, 7}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 6, 7}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 3, 4, 5, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 3, 4, 5, 6, 7}, 1, 1, 1);
    // cascades of size >= 4
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 5, 7}, 2, 0, 0);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 5, 7, 8}, 2, 1, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 5, 7}, 2, 0, 0);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 5, 7, 8}, 2, 1, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 6, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 4, 6, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 6, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 5, 6, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 5, 6, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 4, 5, 6, 7}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 4, 5, 6, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 3, 4, 6, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 6, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 3, 4, 5, 6, 7, 8}, 2, 2, 2);
    add({2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5, 6, 7}, 5, 5, 5);
    // pi1 = {1,...,7}, type E7; pi2 cascades of size 2
    add({1, 2, 3, 4, 5, 6, 7}, {1, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 7}, {4, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 7}, {6, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 3, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 7}, {3, 4, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 4, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 7}, {4, 5, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 7}, {5, 6, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 7}, {4, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 3, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 7}, {3, 4, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 4, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 7}, {4, 5, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 7}, {5, 6, 7, 8}, 1, 1, 1);
    // cascades of size 3
    add({1, 2, 3, 4, 5, 6, 7}, {1, 4, 8}, 2, 0, 0);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 6, 8}, 2, 0, 0);
    add({1, 2, 3, 4, 5, 6, 7}, {4, 6, 8}, 2, 0, 0);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 4, 8}, 2, 1, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 3, 6, 8}, 2, 1, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {3, 4, 6, 8}, 2, 1, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 4, 6, 8}, 2, 1, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 4, 7, 8}, 2, 0, 0);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 4, 5, 8}, 2, 1, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 5, 6, 8}, 2, 1, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 3, 5, 6, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 4, 7, 8}, 2, 1, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 4, 5, 7, 8}, 2, 1, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 3, 4, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {3, 4, 5, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 4, 5, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 3, 4, 7, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {3, 4, 5, 7, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 4, 5, 7, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 3, 4, 5, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {3, 4, 5, 6, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 5, 6, 7, 8}, 2, 1, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 7, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 3, 4, 5, 7, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 3, 5, 6, 7, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {4, 5, 6, 7, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 4, 5, 6, 7, 8}, 2, 2, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {3, 4, 5, 6, 7, 8}, 2, 2, 2);
    // cascades of size >= 4
    add({1, 2, 3, 4, 5, 6, 7}, {1, 4, 6, 8}, 3, 0, 0);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 4, 6, 8}, 3, 1, 3);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 3, 4, 6, 8}, 3, 1, 3);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 4, 5, 8}, 3, 1, 2);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 4, 5, 7, 8}, 3, 1, 3);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 6, 8}, 3, 1, 3);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 4, 5, 6, 8}, 3, 1, 3);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 3, 4, 5, 6, 8}, 3, 1, 3);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 4, 5, 6, 7, 8}, 3, 1, 3);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 4, 5, 6, 7, 8}, 3, 1, 3);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 8}, 4, 4, 4);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 3, 4, 5, 6, 8}, 4, 4, 4);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 8}, 4, 4, 4);
    add({1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 7, 8}, 4, 4, 4);
    add({1, 2, 3, 4, 5, 6, 7}, {2, 3, 4, 5, 6, 7, 8}, 5, 5, 5);
    // pi1 = {2,3,4,5,7}, type D4 x A1
    add({2, 3, 4, 5, 7}, {1, 4, 6, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 7}, {1, 2, 4, 6, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 2, 4, 5, 6, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 2, 3, 4, 6, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 4, 5, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 7}, {1, 2, 4, 5, 6, 7, 8}, 1, 0, 0);
    // pi1 = {2,3,4,5,8}, type D4 x A1
    add({2, 3, 4, 5, 8}, {1, 4, 6, 7, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 8}, {1, 2, 4, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 8}, {1, 4, 5, 6, 7, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 8}, {1, 2, 4, 5, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 8}, {1, 2, 3, 4, 6, 7, 8}, 1, 1, 1);
    // pi1 = {2,3,4,5,7,8}, type D4 x A2
    add({2, 3, 4, 5, 7, 8}, {1, 4, 6, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 7, 8}, {1, 2, 4, 6, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 7, 8}, {1, 4, 6, 7, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 7, 8}, {1, 2, 4, 5, 6, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 7, 8}, {1, 2, 3, 4, 6, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 7, 8}, {1, 2, 4, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 7, 8}, {1, 4, 5, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 7, 8}, {1, 2, 4, 5, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 7, 8}, {1, 2, 3, 4, 6, 7, 8}, 1, 1, 1);
    // pi1 = {1,2,3,4,5,7}, type D5 x A1
    add({1, 2, 3, 4, 5, 7}, {2, 3, 6, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7}, {1, 2, 3, 6, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {2, 3, 5, 6, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7}, {1, 2, 3, 5, 6, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {1, 2, 3, 4, 6, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {2, 3, 5, 6, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7}, {1, 2, 3, 5, 6, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7}, {1, 3, 4, 5, 6, 7, 8}, 1, 0, 0);
    // pi1 = {1,2,3,4,5,8}, type D5 x A1
    add({1, 2, 3, 4, 5, 8}, {2, 3, 6, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 8}, {2, 3, 5, 6, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 8}, {1, 2, 3, 6, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 8}, {1, 2, 3, 5, 6, 7}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 8}, {1, 2, 3, 4, 6, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 8}, {1, 3, 4, 5, 6, 7, 8}, 1, 1, 1);
    // pi1 = {2,3,4,5,6,8}, type D5 x A1
    add({2, 3, 4, 5, 6, 8}, {1, 2, 5, 7}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 8}, {1, 2, 3, 5, 7}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 8}, {1, 2, 5, 7, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 8}, {1, 2, 3, 5, 7, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 8}, {1, 2, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 8}, {1, 2, 5, 6, 7, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 8}, {1, 2, 3, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 8}, {1, 2, 4, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 8}, {1, 2, 3, 5, 6, 7, 8}, 1, 0, 0);
    add({2, 3, 4, 5, 6, 8}, {1, 2, 4, 5, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 8}, {1, 3, 4, 6, 7, 8}, 1, 1, 1);
    add({2, 3, 4, 5, 6, 8}, {1, 2, 3, 4, 6, 7, 8}, 1, 1, 1);
    // pi1 = {1,2,3,4,5,7,8}, type D5 x A2
    add({1, 2, 3, 4, 5, 7, 8}, {2, 3, 6, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7, 8}, {1, 2, 3, 6, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7, 8}, {2, 3, 5, 6, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7, 8}, {1, 2, 3, 5, 6, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7, 8}, {2, 3, 6, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7, 8}, {2, 3, 5, 6, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7, 8}, {1, 2, 3, 4, 6, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7, 8}, {2, 3, 5, 6, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 7, 8}, {1, 2, 3, 5, 6, 7}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7, 8}, {1, 2, 3, 6, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7, 8}, {1, 2, 3, 5, 6, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7, 8}, {1, 2, 3, 4, 6, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 7, 8}, {1, 3, 4, 5, 6, 7, 8}, 1, 1, 1);
    // pi1 = {1,2,3,4,5,6,8}, type E6 x A1
    add({1, 2, 3, 4, 5, 6, 8}, {1, 2, 5, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 2, 5, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 2, 3, 5, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 2, 3, 5, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {2, 3, 6, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {2, 3, 5, 6, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 2, 3, 6, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 2, 3, 5, 6, 7}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 2, 5, 6, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 2, 3, 5, 6, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 2, 4, 5, 6, 7}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 3, 4, 6, 7, 8}, 1, 1, 1);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 2, 3, 4, 6, 7, 8}, 1, 0, 0);
    add({1, 2, 3, 4, 5, 6, 8}, {1, 3, 4, 5, 6, 7, 8}, 1, 1, 1);
    return rows;
  }
  throw std::invalid_argument("no reference table for type " + t.name());
}

struct RowResult {
  ReferenceRow row;
  bool found = false;
  bool index_ok = false;
  bool rank_ok = false;
  int computed_index = 0;
  int computed_lo = 0;
  int computed_hi = 0;
  std::string verdict;

  bool pass() const { return found && index_ok && rank_ok; }
};

struct VerifyReport {
  std::vector<RowResult> rows;
  bool all_pass = true;
  std::size_t extra_records = 0; // computed star pairs not covered by any row
};

/// Row-by-row comparison of a classification run against the reference
/// tables. Pairs match unordered. The index must match exactly. Rank columns:
/// exact rows need the certified bounds to collapse onto the printed value;
/// interval rows need the certified interval to be consistent with (to meet)
/// the printed one.
inline VerifyReport verify_reference_tables(const AlgebraData& A, const ClassifyConfig& cfg) {
  VerifyReport report;
  auto rows = reference_rows(A.roots().type());
  auto records = classify_type(A, cfg);
  std::vector<bool> used(records.size(), false);
  for (const auto& row : rows) {
    RowResult rr;
    rr.row = row;
    const ClassificationRecord* match = nullptr;
    for (std::size_t i = 0; i < records.size(); ++i) {
      bool direct = records[i].pair.pi1 == row.pi1 && records[i].pair.pi2 == row.pi2;
      bool swapped = records[i].pair.pi1 == row.pi2 && records[i].pair.pi2 == row.pi1;
      if (direct || swapped) {
        used[i] = true; // either orientation counts as covered
        if (!match || direct) match = &records[i];
      }
    }
    if (match) {
      rr.found = true;
      rr.computed_index = match->index;
      rr.computed_lo = match->rank_lower;
      rr.computed_hi = match->rank_upper;
      rr.verdict = verdict_name(match->verdict);
      rr.index_ok = (match->index == row.index);
      if (row.rank_lo == row.rank_hi)
        rr.rank_ok = (match->rank_lower == row.rank_lo && match->rank_upper == row.rank_lo);
      else
        rr.rank_ok = (match->rank_lower <= row.rank_hi && row.rank_lo <= match->rank_upper);
    }
    report.all_pass = report.all_pass && rr.pass();
    report.rows.push_back(std::move(rr));
  }
  for (std::size_t i = 0; i < records.size(); ++i)
    if (!used[i]) ++report.extra_records;
  return report;
}

} // namespace seaweed

#endif
