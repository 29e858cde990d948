#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "vat/graph.hpp"
#include "vat/limits.hpp"

namespace vat {

// Exact subgraph-copy counts. Products of part sizes and binomials
// overflow 64 bits quickly, so counts are arbitrary precision throughout.
using CopyCount = boost::multiprecision::cpp_int;

CopyCount binomial(long long n, long long k);

// Number of injective edge-preserving maps h -> g.
CopyCount injective_hom_count(const Graph& h, const Graph& g, const Limits& limits = {});

// |Aut(h)| by exhaustive permutation check with degree pruning.
CopyCount automorphism_count(const Graph& h, const Limits& limits = {});

// N(h, g): distinct subgraphs of g isomorphic to h, i.e. injective
// homomorphisms divided by |Aut(h)|.
CopyCount count_copies(const Graph& h, const Graph& g, const Limits& limits = {});

// N(K_{a,b}, K_{s,t}): copies of a connected complete bipartite graph
// respect the host bipartition, giving C(s,a)C(t,b) + C(s,b)C(t,a) for
// a != b and C(s,a)C(t,a) for a = b.
CopyCount closed_form_kab(int a, int b, int s, int t);

// N(C_{2k+1}, blowup(C_{2k+1}, part_sizes)): every copy is a transversal
// (one vertex per part), so the count is the product of the part sizes.
CopyCount closed_form_odd_cycle_blowup(int k, const std::vector<long long>& part_sizes);

} // namespace vat
