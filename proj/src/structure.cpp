#include "cycroots/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace cycroots {

namespace {

template <typename M>
Digraph digraph_impl(const M& matrix, double zero_tol) {
    require_square(matrix.rows(), matrix.cols(), "digraph_of");
    if (zero_tol < 0.0) {
        throw DomainError("digraph_of: zero_tol must be nonnegative");
    }
    const int n = static_cast<int>(matrix.rows());
    std::vector<Digraph::Arc> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (std::abs(matrix(i, j)) > zero_tol) {
                arcs.emplace_back(i, j);
            }
        }
    }
    return Digraph(n, arcs);
}

// Directed BFS levels from vertex 0; -1 for unreachable vertices.
std::vector<int> bfs_levels(const Digraph& g) {
    std::vector<int> level(static_cast<std::size_t>(g.size()), -1);
    std::queue<int> queue;
    level[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        for (int v : g.successors(u)) {
            if (level[static_cast<std::size_t>(v)] < 0) {
                level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
                queue.push(v);
            }
        }
    }
    return level;
}

// Potentials on the underlying undirected graph: forward arcs add one,
// backward arcs subtract one. comp[v] names the weakly connected component.
struct Potentials {
    std::vector<long> value;
    std::vector<int> comp;
};

Potentials undirected_potentials(const Digraph& g) {
    const auto n = static_cast<std::size_t>(g.size());
    Potentials pot{std::vector<long>(n, 0), std::vector<int>(n, -1)};
    int next_comp = 0;
    for (int root = 0; root < g.size(); ++root) {
        if (pot.comp[static_cast<std::size_t>(root)] >= 0) {
            continue;
        }
        std::queue<int> queue;
        pot.comp[static_cast<std::size_t>(root)] = next_comp;
        queue.push(root);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            const auto uu = static_cast<std::size_t>(u);
            for (int v : g.successors(u)) {
                auto& c = pot.comp[static_cast<std::size_t>(v)];
                if (c < 0) {
                    c = next_comp;
                    pot.value[static_cast<std::size_t>(v)] = pot.value[uu] + 1;
                    queue.push(v);
                }
            }
            for (int v : g.predecessors(u)) {
                auto& c = pot.comp[static_cast<std::size_t>(v)];
                if (c < 0) {
                    c = next_comp;
                    pot.value[static_cast<std::size_t>(v)] = pot.value[uu] - 1;
                    queue.push(v);
                }
            }
        }
        ++next_comp;
    }
    return pot;
}

long gcd_of_discrepancies(const Digraph& g, const std::vector<long>& level) {
    long acc = 0;
    for (const auto& [u, v] : g.arcs()) {
        const long d = level[static_cast<std::size_t>(u)] + 1 - level[static_cast<std::size_t>(v)];
        acc = std::gcd(acc, d < 0 ? -d : d);
    }
    return acc;
}

long mod_floor(long a, long m) {
    const long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Digraph::Digraph(int n) : Digraph(n, {}) {}

Digraph::Digraph(int n, const std::vector<Arc>& arcs)
    : n_(n), out_(static_cast<std::size_t>(n)), in_(static_cast<std::size_t>(n)) {
    if (n < 1) {
        throw ShapeError("Digraph: vertex count must be positive");
    }
    std::set<Arc> unique;
    for (const auto& arc : arcs) {
        if (arc.first < 0 || arc.first >= n || arc.second < 0 || arc.second >= n) {
            throw StructureError("Digraph: arc endpoint out of range");
        }
        unique.insert(arc);
    }
    arcs_.assign(unique.begin(), unique.end());
    for (const auto& [u, v] : arcs_) {
        out_[static_cast<std::size_t>(u)].push_back(v);
        in_[static_cast<std::size_t>(v)].push_back(u);
    }
}

bool Digraph::has_arc(int i, int j) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{i, j});
}

bool Digraph::subgraph_of(const Digraph& other) const {
    if (n_ != other.n_) {
        return false;
    }
    return std::includes(other.arcs_.begin(), other.arcs_.end(), arcs_.begin(), arcs_.end());
}

OrderedPartition::OrderedPartition(int n, std::vector<std::vector<int>> parts)
    : n_(n), parts_(std::move(parts)), label_(static_cast<std::size_t>(n), -1) {
    if (n < 1 || parts_.empty()) {
        throw StructureError("OrderedPartition: need n >= 1 and at least one part");
    }
    int seen = 0;
    for (std::size_t l = 0; l < parts_.size(); ++l) {
        auto& part = parts_[l];
        if (part.empty()) {
            throw StructureError("OrderedPartition: part " + std::to_string(l + 1) + " is empty");
        }
        std::sort(part.begin(), part.end());
        for (int v : part) {
            if (v < 0 || v >= n) {
                throw StructureError("OrderedPartition: index out of range");
            }
            auto& lab = label_[static_cast<std::size_t>(v)];
            if (lab >= 0) {
                throw StructureError("OrderedPartition: parts are not disjoint");
            }
            lab = static_cast<int>(l);
            ++seen;
        }
    }
    if (seen != n) {
        throw StructureError("OrderedPartition: parts do not cover the ground set");
    }
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> hit(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || hit[static_cast<std::size_t>(v)]) {
            throw StructureError("Permutation: not a bijection");
        }
        hit[static_cast<std::size_t>(v)] = true;
    }
}

std::vector<int> Permutation::order() const {
    std::vector<int> out(image_.size());
    for (std::size_t old = 0; old < image_.size(); ++old) {
        out[static_cast<std::size_t>(image_[old])] = static_cast<int>(old);
    }
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

Digraph digraph_of(const MatrixXr& matrix, double zero_tol) { return digraph_impl(matrix, zero_tol); }
Digraph digraph_of(const MatrixXc& matrix, double zero_tol) { return digraph_impl(matrix, zero_tol); }

bool is_strongly_connected(const Digraph& g) {
    if (g.size() == 1) {
        return true;
    }
    const auto fwd = bfs_levels(g);
    if (std::any_of(fwd.begin(), fwd.end(), [](int l) { return l < 0; })) {
        return false;
    }
    std::vector<Digraph::Arc> reversed;
    reversed.reserve(g.arcs().size());
    for (const auto& [u, v] : g.arcs()) {
        reversed.emplace_back(v, u);
    }
    const auto back = bfs_levels(Digraph(g.size(), reversed));
    return std::none_of(back.begin(), back.end(), [](int l) { return l < 0; });
}

int index_of_imprimitivity(const Digraph& g) {
    if (!is_strongly_connected(g)) {
        throw PreconditionError("index_of_imprimitivity: digraph is not strongly connected");
    }
    const auto level = bfs_levels(g);
    const long h = gcd_of_discrepancies(g, std::vector<long>(level.begin(), level.end()));
    return h == 0 ? 1 : static_cast<int>(h);
}

std::optional<int> cyclic_index(const Digraph& g) {
    const auto pot = undirected_potentials(g);
    const long h = gcd_of_discrepancies(g, pot.value);
    if (h == 0) {
        return std::nullopt;
    }
    return static_cast<int>(h);
}

OrderedPartition cyclic_partition(const Digraph& g, int h) {
    if (h < 2) {
        throw PreconditionError("cyclic_partition: h must be at least 2");
    }
    const int index = index_of_imprimitivity(g);
    if (index % h != 0) {
        throw StructureError("cyclic_partition: " + std::to_string(h) +
                             " does not divide the index of imprimitivity " + std::to_string(index));
    }
    const auto level = bfs_levels(g);
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(h));
    for (int v = 0; v < g.size(); ++v) {
        parts[static_cast<std::size_t>(level[static_cast<std::size_t>(v)] % h)].push_back(v);
    }
    return OrderedPartition(g.size(), std::move(parts));
}

OrderedPartition cyclic_partition_any(const Digraph& g, int h) {
    if (h < 2) {
        throw PreconditionError("cyclic_partition_any: h must be at least 2");
    }
    const auto index = cyclic_index(g);
    if (index && *index % h != 0) {
        throw StructureError("cyclic_partition_any: " + std::to_string(h) +
                             " does not divide the cyclic index " + std::to_string(*index));
    }
    auto pot = undirected_potentials(g);
    // Rotate each weakly connected component so its smallest vertex sits in the first part.
    std::vector<long> shift;
    for (int v = 0; v < g.size(); ++v) {
        const auto c = static_cast<std::size_t>(pot.comp[static_cast<std::size_t>(v)]);
        if (c >= shift.size()) {
            shift.resize(c + 1, 0);
            shift[c] = pot.value[static_cast<std::size_t>(v)];
        }
    }
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(h));
    for (int v = 0; v < g.size(); ++v) {
        const auto vv = static_cast<std::size_t>(v);
        const long label = mod_floor(pot.value[vv] - shift[static_cast<std::size_t>(pot.comp[vv])], h);
        parts[static_cast<std::size_t>(label)].push_back(v);
    }
    return OrderedPartition(g.size(), std::move(parts));
}

Permutation consecutive_permutation(const OrderedPartition& p) {
    std::vector<int> image(static_cast<std::size_t>(p.ground_size()));
    int next = 0;
    for (const auto& part : p.parts()) {
        for (int v : part) {
            image[static_cast<std::size_t>(v)] = next++;
        }
    }
    return Permutation(std::move(image));
}

MatrixXr characteristic_matrix(const OrderedPartition& p) {
    if (p.parts_count() < 2) {
        throw PreconditionError("characteristic_matrix: need at least two parts");
    }
    const int n = p.ground_size();
    const int h = p.parts_count();
    MatrixXr chi = MatrixXr::Zero(n, n);
    for (int l = 0; l < h; ++l) {
        for (int i : p.part(l)) {
            for (int j : p.part((l + 1) % h)) {
                chi(i, j) = 1.0;
            }
        }
    }
    return chi;
}

namespace {

template <typename M>
bool is_h_cyclic_impl(const M& matrix, const OrderedPartition& p, double zero_tol) {
    require_square(matrix.rows(), matrix.cols(), "is_h_cyclic");
    if (matrix.rows() != p.ground_size()) {
        throw ShapeError("is_h_cyclic: matrix dimension does not match the partition");
    }
    const int h = p.parts_count();
    const auto g = digraph_of(matrix, zero_tol);
    for (const auto& [i, j] : g.arcs()) {
        if ((p.part_of(i) + 1) % h != p.part_of(j)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_h_cyclic(const MatrixXr& matrix, const OrderedPartition& p, double zero_tol) {
    return is_h_cyclic_impl(matrix, p, zero_tol);
}

bool is_h_cyclic(const MatrixXc& matrix, const OrderedPartition& p, double zero_tol) {
    return is_h_cyclic_impl(matrix, p, zero_tol);
}

ReducibleStructure reducible_structure(const Digraph& g) {
    const int n = g.size();
    const auto nn = static_cast<std::size_t>(n);

    // Tarjan's algorithm, iterative.
    std::vector<int> index(nn, -1), low(nn, 0), comp(nn, -1);
    std::vector<bool> on_stack(nn, false);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0;
    int comp_count = 0;
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] >= 0) {
            continue;
        }
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, next_child] = call.back();
            const auto vv = static_cast<std::size_t>(v);
            if (next_child == 0 && index[vv] < 0) {
                index[vv] = low[vv] = counter++;
                stack.push_back(v);
                on_stack[vv] = true;
            }
            const auto& succ = g.successors(v);
            if (next_child < succ.size()) {
                const int w = succ[next_child++];
                const auto ww = static_cast<std::size_t>(w);
                if (index[ww] < 0) {
                    call.emplace_back(w, 0);
                } else if (on_stack[ww]) {
                    low[vv] = std::min(low[vv], index[ww]);
                }
                continue;
            }
            if (low[vv] == index[vv]) {
                int w = -1;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    comp[static_cast<std::size_t>(w)] = comp_count;
                } while (w != v);
                ++comp_count;
            }
            const int finished = v;
            call.pop_back();
            if (!call.empty()) {
                const auto parent = static_cast<std::size_t>(call.back().first);
                low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
            }
        }
    }

    std::vector<std::vector<int>> members(static_cast<std::size_t>(comp_count));
    for (int v = 0; v < n; ++v) {
        members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
    }

    // Topological order of the condensation; ties broken by smallest vertex.
    std::vector<std::set<int>> succ(static_cast<std::size_t>(comp_count));
    std::vector<int> indeg(static_cast<std::size_t>(comp_count), 0);
    bool cross_arcs = false;
    for (const auto& [u, v] : g.arcs()) {
        const int cu = comp[static_cast<std::size_t>(u)];
        const int cv = comp[static_cast<std::size_t>(v)];
        if (cu != cv) {
            cross_arcs = true;
            if (succ[static_cast<std::size_t>(cu)].insert(cv).second) {
                ++indeg[static_cast<std::size_t>(cv)];
            }
        }
    }
    using Entry = std::pair<int, int>;  // (smallest vertex, component)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (int c = 0; c < comp_count; ++c) {
        if (indeg[static_cast<std::size_t>(c)] == 0) {
            ready.emplace(members[static_cast<std::size_t>(c)].front(), c);
        }
    }
    std::vector<std::vector<int>> ordered;
    while (!ready.empty()) {
        const int c = ready.top().second;
        ready.pop();
        ordered.push_back(members[static_cast<std::size_t>(c)]);
        for (int d : succ[static_cast<std::size_t>(c)]) {
            if (--indeg[static_cast<std::size_t>(d)] == 0) {
                ready.emplace(members[static_cast<std::size_t>(d)].front(), d);
            }
        }
    }

    std::vector<int> image(nn);
    int next = 0;
    for (const auto& part : ordered) {
        for (int v : part) {
            image[static_cast<std::size_t>(v)] = next++;
        }
    }
    const bool complete = ordered.size() >= 2 && !cross_arcs;
    return ReducibleStructure{std::move(ordered), Permutation(std::move(image)), complete};
}

ReducibleStructure reducible_structure(const MatrixXr& matrix, double zero_tol) {
    return reducible_structure(digraph_of(matrix, zero_tol));
}

double relative_zero_tol(const MatrixXc& m, double rel) { return rel * max_abs(m); }
double relative_zero_tol(const MatrixXr& m, double rel) { return rel * max_abs(m); }

}  // namespace cycroots
