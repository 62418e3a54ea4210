#ifndef PMNET_TEXT_FORMAT_HPP_
#define PMNET_TEXT_FORMAT_HPP_

#include <iosfwd>
#include <span>
#include <string>

#include "pmnet/cluster_tree.hpp"
#include "pmnet/distribution.hpp"

namespace pmnet {

// Distribution files:
//
//   # comment
//   VARS A:2 B:3
//   0 0 0.25
//   1 2 0.75
//
// Blank lines and lines starting with '#' are ignored anywhere. Cells may
// appear in any order. Syntax problems throw ParseError naming the line;
// content problems are reported by validate().
RawDistribution parse_distribution(std::istream& in);
JointDistribution read_distribution(std::istream& in);
JointDistribution read_distribution_file(const std::string& path);

// Writes the variables in scope and the stored cells in lexicographic order.
// Probabilities use the shortest decimal that reads back to the same double.
void write_distribution(std::ostream& out, const JointDistribution& dist);

std::string format_probability(double p);

// Cluster tree files:
//
//   CLUSTERS A,B,D;B,C,D
//   EDGES 0-1
//
// Cluster members are variable names resolved against `names`; edge
// endpoints are 0-based cluster positions.
ClusterTree parse_cluster_tree(std::istream& in,
                               std::span<const std::string> names);
ClusterTree read_cluster_tree_file(const std::string& path,
                                   std::span<const std::string> names);
void write_cluster_tree(std::ostream& out, const ClusterTree& tree,
                        std::span<const std::string> names);

}  // namespace pmnet

#endif  // PMNET_TEXT_FORMAT_HPP_
