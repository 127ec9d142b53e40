// Runs every checker on the Petersen graph and on a 6-cycle, printing the certificates.

#include <iostream>

#include "konig/konig.hpp"

int main() {
  using namespace konig;

  const auto petersen = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const auto hexagon = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});

  for (const auto* g : {&petersen, &hexagon}) {
    for (const auto algo : kAllAlgorithms) {
      std::cout << to_text(make_report(*g, algo, check(*g, algo)));
    }
    std::cout << '\n';
  }
}
