#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "minsep/minsep_rules.hpp"
#include "minsep/partition.hpp"

namespace minsep {

using BigInt = boost::multiprecision::cpp_int;

/// Irreducible character of S_n labeled by lambda, evaluated on the
/// conjugacy class mu. Exact; Murnaghan-Nakayama recursion with
/// memoization. Thread-safe.
BigInt character(const Partition& lambda, const Partition& mu);

/// Number of tuples (g_1,...,g_k), g_i in class C_i, with product
/// identity. Exact rational arithmetic internally; throws
/// std::logic_error if the character sum fails to come out integral.
BigInt frobenius_count(const std::vector<Partition>& classes);

/// ceil(frobenius_count(S,A,F) / (class_size(S) * E)): the paper's
/// preallocation estimate of stored hypermaps per triple.
BigInt capacity_estimate(const TypeTriple& t);

}  // namespace minsep
