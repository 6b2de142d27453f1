#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "nodeorder/graph.hpp"

namespace nodeorder {

// Partition of nodes 0..n-1 into classes 0..K-1, kept in canonical form:
// classes are numbered by their minimum member, so class 0 contains node 0,
// class ids are contiguous, and each member list is sorted ascending.
// Two partitions of the same node set are equal iff their canonical forms are.
struct Partition {
    std::vector<int> class_of;
    int K = 0;
    std::vector<std::vector<int>> classes;

    // Canonicalizes an arbitrary labelling (labels need not be contiguous).
    static Partition from_class_of(const std::vector<int>& raw);
    static Partition singletons(int n);
    static Partition single_class(int n);

    int size() const { return static_cast<int>(class_of.size()); }

    friend bool operator==(const Partition&, const Partition&) = default;
};

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

// True iff every class of `fine` lies inside a single class of `coarse`
// (so `coarse` is coarser than or equal to `fine`).
bool partition_refines(const Partition& fine, const Partition& coarse);

// Signature-based refinement to a fixed point: starting from one class,
// repeatedly split classes by the multiset of neighbor classes until no
// class splits. The result is the coarsest equitable partition.
Partition color_refinement(const Graph& g);

// Same computation with per-pass class counts, for convergence checks.
struct RefinementTrace {
    Partition partition;
    int passes = 0;                 // total passes, including the final stable one
    std::vector<int> class_counts;  // K after each pass
};
RefinementTrace color_refinement_trace(const Graph& g);

// Value of the iterated degree of a node: at depth 0 the plain degree, at
// depth k+1 the multiset of the neighbors' depth-k values. Multisets are
// stored canonically sorted, so equal values have identical structure.
// Nodes of the value tree are shared, which keeps deep values small in
// memory even though their expanded form grows fast.
class IteratedDegree {
public:
    int depth() const;
    // Expanded text form, e.g. "2" at depth 0 or "{{2,2},{2,2}}" at depth 2.
    // Intended for small depths; the expansion is exponential in depth.
    std::string to_string() const;

    friend bool operator==(const IteratedDegree& a, const IteratedDegree& b);
    friend bool operator<(const IteratedDegree& a, const IteratedDegree& b);

    struct Node;
    explicit IteratedDegree(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

private:
    std::shared_ptr<const Node> root_;
};

IteratedDegree iterated_degree(const Graph& g, int node, int depth);

// Equality classes of depth-`depth` iterated degrees for all nodes at once,
// as dense ids ordered consistently with the canonical value order.
std::vector<int> iterated_degree_classes(const Graph& g, int depth);

// True iff within every class, all members have the same per-class neighbor
// counts. Throws std::invalid_argument if p does not cover exactly g's nodes.
bool is_equitable(const Graph& g, const Partition& p);

// Neighbor-count matrix of an equitable partition: S[c][c2] is the number of
// neighbors in class c2 of any node of class c. Throws std::invalid_argument
// if p is not equitable on g.
struct QuotientMatrix {
    int K = 0;
    std::vector<std::vector<int>> S;
    std::vector<int> sizes;

    friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;
};
QuotientMatrix quotient_matrix(const Graph& g, const Partition& p);

void to_json(nlohmann::json& j, const QuotientMatrix& q);

}  // namespace nodeorder
