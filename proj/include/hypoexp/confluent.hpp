#ifndef HYPOEXP_CONFLUENT_HPP
#define HYPOEXP_CONFLUENT_HPP

#include <cstddef>
#include <vector>

#include "hypoexp/types.hpp"

namespace hypoexp {

/// Distinct scales with multiplicities, the node list for confluent
/// divided-difference evaluation. Total multiplicity is the original
/// number of summed variables.
class NodeSystem {
  public:
    struct Node {
        double scale;
        std::size_t multiplicity;
    };

    explicit NodeSystem(std::vector<Node> nodes);

    static NodeSystem from_partition(const ClusterPartition& partition);

    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t total_multiplicity() const { return total_; }

  private:
    std::vector<Node> nodes_;  // sorted ascending by scale
    std::size_t total_;
};

/// Survival probability via the (n-1)-th confluent divided difference of
/// f_n(P) = P^{n-1} e^{-p_tot/P} over the node list, where a node of
/// multiplicity m contributes m coincident copies and repeated-node table
/// entries are f^{(k)}(scale)/k!. For all-singleton nodes this reproduces
/// the distinct-scale formula; for a single node of multiplicity n it is
/// f^{(n-1)}(s)/(n-1)!, the Erlang tail.
TailProbability confluent_survival(const NodeSystem& nodes, double p_tot);

}  // namespace hypoexp

#endif
