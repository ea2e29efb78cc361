#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cycroots/common.hpp"

namespace cycroots {

/// Zero/nonzero pattern of a square matrix as a directed graph on vertices
/// 0..n-1. Arc (i, j) exists iff entry (i, j) is treated as nonzero.
class Digraph {
public:
    using Arc = std::pair<int, int>;

    explicit Digraph(int n);
    Digraph(int n, const std::vector<Arc>& arcs);

    int size() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& successors(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& predecessors(int v) const { return in_[static_cast<std::size_t>(v)]; }
    bool has_arc(int i, int j) const;

    /// True iff every arc of this graph is an arc of `other`.
    bool subgraph_of(const Digraph& other) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_;
    std::vector<Arc> arcs_;  // sorted, duplicate-free
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Ordered partition (pi_1, ..., pi_h) of {0, ..., n-1}. Part order matters;
/// the cyclic successor of the last part is the first.
class OrderedPartition {
public:
    /// Throws StructureError if the parts are not a partition of 0..n-1 into
    /// nonempty sets.
    OrderedPartition(int n, std::vector<std::vector<int>> parts);

    int ground_size() const { return n_; }
    int parts_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    const std::vector<int>& part(int l) const { return parts_[static_cast<std::size_t>(l)]; }
    /// Index of the part holding vertex v.
    int part_of(int v) const { return label_[static_cast<std::size_t>(v)]; }

    friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
        return a.n_ == b.n_ && a.parts_ == b.parts_;
    }

private:
    int n_;
    std::vector<std::vector<int>> parts_;  // each part sorted ascending
    std::vector<int> label_;
};

/// Vertex relabeling. image()[old] is the new position of vertex `old`.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);

    int size() const { return static_cast<int>(image_.size()); }
    const std::vector<int>& image() const { return image_; }
    int operator()(int old_index) const { return image_[static_cast<std::size_t>(old_index)]; }
    /// order()[new] = old.
    std::vector<int> order() const;
    bool is_identity() const;

    /// P^T A P: result(image[i], image[j]) = a(i, j).
    template <typename Derived>
    auto apply(const Eigen::MatrixBase<Derived>& a) const {
        using Scalar = typename Derived::Scalar;
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows(), a.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            for (Eigen::Index j = 0; j < a.cols(); ++j) {
                out(image_[static_cast<std::size_t>(i)], image_[static_cast<std::size_t>(j)]) = a(i, j);
            }
        }
        return out;
    }

private:
    std::vector<int> image_;
};

struct ReducibleStructure {
    std::vector<std::vector<int>> components;  // strong components in topological order
    Permutation permutation;                    // brings the matrix to block upper triangular form
    bool completely_reducible = false;
};

Digraph digraph_of(const MatrixXr& matrix, double zero_tol = 0.0);
Digraph digraph_of(const MatrixXc& matrix, double zero_tol = 0.0);

bool is_strongly_connected(const Digraph& g);

/// gcd of closed-walk lengths. Throws PreconditionError if g is not strong.
/// A single vertex without a loop has index 1.
int index_of_imprimitivity(const Digraph& g);

/// Largest h for which g is cyclically h-partite, for any digraph (strong or
/// not). Returns nullopt when every h works (the underlying graph has no
/// cycles at all).
std::optional<int> cyclic_index(const Digraph& g);

/// Cyclic partition whose parts are the breadth-first level classes mod h,
/// rotated so vertex 0 lies in the first part. Requires g strong, h >= 2 and
/// h | index_of_imprimitivity(g).
OrderedPartition cyclic_partition(const Digraph& g, int h);

/// Cyclic partition for a digraph that need not be strong (levels assigned
/// per weakly connected component). Requires h | cyclic_index(g).
OrderedPartition cyclic_partition_any(const Digraph& g, int h);

Permutation consecutive_permutation(const OrderedPartition& p);

MatrixXr characteristic_matrix(const OrderedPartition& p);

bool is_h_cyclic(const MatrixXr& matrix, const OrderedPartition& p, double zero_tol = 0.0);
bool is_h_cyclic(const MatrixXc& matrix, const OrderedPartition& p, double zero_tol = 0.0);

ReducibleStructure reducible_structure(const Digraph& g);
ReducibleStructure reducible_structure(const MatrixXr& matrix, double zero_tol = 0.0);

/// Threshold used to read the pattern of a computed (floating point) matrix:
/// rel * max |a_ij|.
double relative_zero_tol(const MatrixXc& m, double rel = 1e-9);
double relative_zero_tol(const MatrixXr& m, double rel = 1e-9);

}  // namespace cycroots
