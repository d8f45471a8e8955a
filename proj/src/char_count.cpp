#include "minsep/char_count.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <stdexcept>

namespace minsep {

namespace {

using Rational = boost::multiprecision::cpp_rational;

/// First-column hook lengths ("beta set"): beta_j = lambda_j + (k - 1 - j).
std::vector<int> beta_set(const std::vector<int>& lambda) {
    const int k = static_cast<int>(lambda.size());
    std::vector<int> beta(k);
    for (int j = 0; j < k; ++j) beta[j] = lambda[j] + (k - 1 - j);
    return beta;
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    // beta is strictly decreasing after re-sorting.
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int k = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int j = 0; j < k; ++j) {
        int part = beta[j] - (k - 1 - j);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

/// Murnaghan-Nakayama: strip border strips of size mu[pos] from lambda.
/// In beta-set form a strip of size t is beta_j -> beta_j - t, legal
/// when the target is non-negative and unoccupied; the sign is
/// (-1)^(number of occupied values jumped over).
BigInt mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu, size_t pos,
                  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt>& memo,
                  std::mutex& memo_mutex) {
    if (pos == mu.size()) return 1;  // lambda is empty here
    const std::pair<std::vector<int>, std::vector<int>> key{
        lambda, std::vector<int>(mu.begin() + pos, mu.end())};
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    const int t = mu[pos];
    const auto beta = beta_set(lambda);
    BigInt sum = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
        const int target = beta[j] - t;
        if (target < 0) continue;
        bool occupied = false;
        int crossings = 0;
        for (size_t i = 0; i < beta.size(); ++i) {
            if (i == j) continue;
            if (beta[i] == target) occupied = true;
            if (beta[i] > target && beta[i] < beta[j]) ++crossings;
        }
        if (occupied) continue;
        auto nb = beta;
        nb[j] = target;
        const auto sub = partition_from_beta(std::move(nb));
        const BigInt val = mn_recurse(sub, mu, pos + 1, memo, memo_mutex);
        sum += (crossings % 2 == 0) ? val : -val;
    }
    std::lock_guard lock(memo_mutex);
    memo.emplace(key, sum);
    return sum;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

BigInt character(const Partition& lambda, const Partition& mu) {
    if (lambda.total() != mu.total()) throw std::invalid_argument("partition totals differ");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
    static std::mutex memo_mutex;
    return mn_recurse(lambda.parts, mu.parts, 0, memo, memo_mutex);
}

BigInt frobenius_count(const std::vector<Partition>& classes) {
    if (classes.size() < 2) throw std::invalid_argument("need at least two classes");
    const int n = classes.front().total();
    for (const auto& c : classes)
        if (c.total() != n) throw std::invalid_argument("partition totals differ");
    const int k = static_cast<int>(classes.size());
    const Partition id_class(std::vector<int>(n, 1));

    Rational sum = 0;
    for (const auto& lambda : partitions(n, 1)) {
        BigInt prod = 1;
        for (const auto& c : classes) {
            prod *= character(lambda, c);
            if (prod == 0) break;
        }
        if (prod == 0) continue;
        BigInt dim_pow = 1;
        const BigInt dim = character(lambda, id_class);
        for (int i = 0; i < k - 2; ++i) dim_pow *= dim;
        sum += Rational(prod, dim_pow);
    }
    BigInt class_prod = 1;
    for (const auto& c : classes) class_prod *= BigInt(class_size(c));
    const Rational result = sum * Rational(class_prod, factorial(n));
    if (denominator(result) != 1) throw std::logic_error("frobenius_count: non-integral result");
    return numerator(result);
}

BigInt capacity_estimate(const TypeTriple& t) {
    const BigInt n = frobenius_count({t.S, t.A, t.F});
    const BigInt denom = BigInt(class_size(t.S)) * t.edge_count;
    return (n + denom - 1) / denom;
}

}  // namespace minsep
