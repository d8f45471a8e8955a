#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "minsep/conjugacy.hpp"
#include "minsep/partition.hpp"
#include "minsep/perm.hpp"

using namespace minsep;

static std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

TEST_CASE("cycle_type") {
    CHECK(cycle_type(parse_cycles(6, "(1,2,3)(4,5)")).parts == std::vector<int>{3, 2, 1});
    CHECK(cycle_type(Perm::identity(4)).parts == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("partition ordering: [2] > [1,1]") {
    CHECK(Partition{2} > Partition{1, 1});
    CHECK(Partition{3, 1} > Partition{2, 2});
    CHECK(Partition{2, 2} > Partition{2, 1, 1});
}

TEST_CASE("partitions counts match known values") {
    // p(n) for n = 1..10
    const int expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n) CHECK((int)partitions(n).size() == expected[n - 1]);
    // no 1-parts: p(n) - p(n-1)
    for (int n = 2; n <= 10; ++n)
        CHECK(partitions(n, 2).size() == partitions(n).size() - partitions(n - 1).size());
    // descending lex order, valid parts
    for (const auto list = partitions(8); const auto& p : list) {
        CHECK(p.total() == 8);
        CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
    }
    const auto p8 = partitions(8);
    CHECK(std::is_sorted(p8.rbegin(), p8.rend()));
}

TEST_CASE("canonical_of_type has the requested cycle type") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : partitions(n)) {
            const Perm p = canonical_of_type(t);
            CHECK(cycle_type(p) == t);
        }
    CHECK(cycle_string(canonical_of_type(Partition{3, 2})) == "(1,2,3)(4,5)");
}

TEST_CASE("class_size and centralizer_order multiply to n!") {
    for (int n = 1; n <= 12; ++n) {
        std::uint64_t sum = 0;
        for (const auto& t : partitions(n)) {
            CHECK(class_size(t) * centralizer_order(t) == factorial(n));
            sum += class_size(t);
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("class_size against brute count in S_5") {
    for (const auto& t : partitions(5)) {
        std::uint64_t brute = 0;
        std::vector<int> img(5);
        std::iota(img.begin(), img.end(), 0);
        do {
            if (cycle_type(Perm::from_images(img)) == t) ++brute;
        } while (std::next_permutation(img.begin(), img.end()));
        CHECK(brute == class_size(t));
    }
}

TEST_CASE("centralizer_elements matches brute force in S_4 and the order formula") {
    std::vector<int> img(4);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> s4;
    do s4.push_back(Perm::from_images(img));
    while (std::next_permutation(img.begin(), img.end()));
    for (const Perm& p : s4) {
        std::vector<Perm> brute;
        for (const Perm& q : s4)
            if (compose(p, q) == compose(q, p)) brute.push_back(q);
        auto fast = centralizer_elements(p);
        std::sort(fast.begin(), fast.end());
        std::sort(brute.begin(), brute.end());
        CHECK(fast == brute);
        CHECK(fast.size() == centralizer_order(cycle_type(p)));
    }
}

TEST_CASE("to_string") {
    CHECK(Partition{4, 2, 2}.to_string('-') == "4-2-2");
    CHECK(Partition{3}.to_string() == "3");
}
