#include <catch2/catch_amalgamated.hpp>

#include <thread>
#include <tuple>

#include "minpres/littlewood_richardson.hpp"
#include "testutil.hpp"

using namespace minpres;

TEST_CASE("tableau rule on the worked examples") {
  CHECK(lr_coefficient(Partition{3, 2, 2, 2}, Partition{4, 3, 1},
                       Partition{5, 4, 3, 2, 2, 1}) == 4);
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 1);
  CHECK(lr_coefficient(Partition{2}, Partition{1, 1}, Partition{3, 1}) == 1);
  CHECK(testutil::lr_bruteforce(Partition{2}, Partition{1, 1}, Partition{3, 1}) == 1);
  Partition la{3, 1};
  CHECK(lr_coefficient(la, Partition{}, la) == 1);
}

TEST_CASE("degree and containment vanishing") {
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{3}) == 0);
  CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{1, 1, 1}) == 0);
  CHECK(lr_coefficient(Partition{3}, Partition{1}, Partition{2, 2}) == 0);
}

TEST_CASE("tableau rule matches the brute-force oracle on small shapes") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (const auto& la : subpartitions(nu)) {
        for (const auto& mu : partitions_of(n - la.size())) {
          CHECK(lr_coefficient_direct(la, mu, nu) == testutil::lr_bruteforce(la, mu, nu));
        }
      }
    }
  }
}

TEST_CASE("pictures on the worked examples") {
  CHECK(lr_via_pictures(Partition{3, 2, 2, 2}, Partition{4, 3, 1},
                        Partition{5, 4, 3, 2, 2, 1}) == 4);
  CHECK(lr_via_pictures(Partition{1}, Partition{1}, Partition{1, 1}) == 1);
  CHECK(lr_via_pictures(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
}

TEST_CASE("picture model agrees with the tableau model up to size 7") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (const auto& la : subpartitions(nu)) {
        for (const auto& mu : partitions_of(n - la.size())) {
          CHECK(lr_via_pictures(la, mu, nu) == lr_coefficient_direct(la, mu, nu));
        }
      }
    }
  }
}

TEST_CASE("picture enumeration refuses oversized instances") {
  CHECK_THROWS_AS(lr_via_pictures(Partition{}, Partition{6, 5, 4},
                                  Partition{6, 5, 4}, 10),
                  InstanceTooLargeError);
  CHECK_NOTHROW(lr_via_pictures(Partition{}, Partition{2, 1}, Partition{2, 1}, 10));
}

TEST_CASE("symmetry in the lower partitions up to size 8") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (const auto& la : subpartitions(nu)) {
        if (la.size() * 2 < n) continue;  // each unordered pair once
        for (const auto& mu : partitions_of(n - la.size())) {
          CHECK(lr_coefficient_direct(la, mu, nu) == lr_coefficient_direct(mu, la, nu));
        }
      }
    }
  }
}

TEST_CASE("conjugation symmetry up to size 8") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (const auto& la : subpartitions(nu)) {
        for (const auto& mu : partitions_of(n - la.size())) {
          CHECK(lr_coefficient_direct(la, mu, nu) ==
                lr_coefficient_direct(la.conjugate(), mu.conjugate(), nu.conjugate()));
        }
      }
    }
  }
}

TEST_CASE("associativity witness up to size 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (int s1 = 0; s1 <= n; ++s1) {
        for (int s2 = 0; s1 + s2 <= n; ++s2) {
          for (const auto& la : partitions_of(s1)) {
            for (const auto& mu : partitions_of(s2)) {
              for (const auto& pi : partitions_of(n - s1 - s2)) {
                Int lhs = 0, rhs = 0;
                for (const auto& kappa : partitions_of(s1 + s2))
                  lhs += lr_coefficient(la, mu, kappa) * lr_coefficient(kappa, pi, nu);
                for (const auto& kappa : partitions_of(s2 + (n - s1 - s2)))
                  rhs += lr_coefficient(mu, pi, kappa) * lr_coefficient(la, kappa, nu);
                CHECK(lhs == rhs);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("cache returns stable values") {
  LrTable table;
  Partition la{2, 1}, mu{2, 1}, nu{3, 2, 1};
  CHECK(table.coefficient(la, mu, nu) == 2);
  CHECK(table.coefficient(mu, la, nu) == 2);
  CHECK(table.entries() == 1);  // commutativity shares one entry
  CHECK(table.coefficient(la, mu, nu) == 2);
}

TEST_CASE("cache is safe under concurrent readers and writers") {
  // Precompute the expected values single-threaded, then hammer a fresh
  // table from several workers and compare.
  std::vector<std::tuple<Partition, Partition, Partition, Int>> queries;
  for (int n = 4; n <= 6; ++n)
    for (const auto& nu : partitions_of(n))
      for (const auto& la : subpartitions(nu))
        for (const auto& mu : partitions_of(n - la.size()))
          queries.emplace_back(la, mu, nu, lr_coefficient_direct(la, mu, nu));

  LrTable table;
  std::vector<int> bad_counts(8, 0);
  std::vector<std::thread> workers;
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t k = w % 3; k < queries.size(); ++k) {
        const auto& [la, mu, nu, expect] = queries[k];
        if (table.coefficient(la, mu, nu) != expect) ++bad_counts[static_cast<std::size_t>(w)];
      }
    });
  }
  for (auto& t : workers) t.join();
  for (int bad : bad_counts) CHECK(bad == 0);
}
