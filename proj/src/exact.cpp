#include "ktdom/exact.hpp"

#include "ktdom/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ktdom {

namespace {

class Search {
public:
    Search(const Graph& g, std::size_t k, Variant variant, std::uint64_t budget)
        : n_(g.order()), budget_(budget)
    {
        // covers_[u]: vertices whose demand choosing u reduces.
        covers_.resize(n_);
        for (Vertex u = 0; u < n_; ++u) {
            auto nb = g.neighbors(u);
            covers_[u].assign(nb.begin(), nb.end());
            if (variant == Variant::closed)
                covers_[u].push_back(u);
            max_cover_ = std::max(max_cover_, covers_[u].size());
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
            return covers_[a].size() > covers_[b].size();
        });
        residual_.assign(n_, k);
        available_.assign(n_, 0);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : covers_[u])
                ++available_[v];
        outstanding_ = k * n_;
        chosen_.assign(n_, false);
    }

    bool feasible() const
    {
        for (Vertex v = 0; v < n_; ++v)
            if (available_[v] < residual_[v])
                return false;
        return true;
    }

    // Greedy incumbent: start from V and drop vertices while the set stays valid.
    void seed_incumbent()
    {
        std::vector<std::size_t> have(available_);
        std::vector<bool> in(n_, true);
        const std::size_t k = residual_.empty() ? 0 : residual_[0];
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            Vertex u = *it;
            bool removable = std::all_of(covers_[u].begin(), covers_[u].end(),
                                         [&](Vertex v) { return have[v] > k; });
            if (removable) {
                in[u] = false;
                for (Vertex v : covers_[u])
                    --have[v];
            }
        }
        best_ = in;
        best_size_ = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
    }

    // false when the budget ran out
    bool run() { return descend(0, 0); }

    std::size_t best_size() const { return best_size_; }
    std::uint64_t nodes() const { return nodes_; }

    VertexSet witness() const
    {
        VertexSet s(n_);
        for (Vertex v = 0; v < n_; ++v)
            if (best_[v])
                s.insert(v);
        return s;
    }

private:
    std::size_t lower_bound() const
    {
        return max_cover_ == 0 ? 0 : (outstanding_ + max_cover_ - 1) / max_cover_;
    }

    bool descend(std::size_t depth, std::size_t size)
    {
        if (++nodes_ > budget_)
            return false;
        if (outstanding_ == 0) {
            if (size < best_size_) {
                best_size_ = size;
                best_ = chosen_;
            }
            return true;
        }
        if (depth == n_ || size + lower_bound() >= best_size_)
            return true;

        const Vertex u = order_[depth];

        // exclude u
        bool ok = true;
        for (Vertex v : covers_[u])
            if (--available_[v] < residual_[v])
                ok = false;
        if (ok && !descend(depth + 1, size)) {
            for (Vertex v : covers_[u])
                ++available_[v];
            return false;
        }
        for (Vertex v : covers_[u])
            ++available_[v];

        // include u
        std::vector<Vertex> reduced;
        reduced.reserve(covers_[u].size());
        for (Vertex v : covers_[u]) {
            --available_[v];
            if (residual_[v] > 0) {
                --residual_[v];
                --outstanding_;
                reduced.push_back(v);
            }
        }
        chosen_[u] = true;
        const bool finished = descend(depth + 1, size + 1);
        chosen_[u] = false;
        for (Vertex v : covers_[u])
            ++available_[v];
        for (Vertex v : reduced) {
            ++residual_[v];
            ++outstanding_;
        }
        return finished;
    }

    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t max_cover_ = 0;
    std::vector<std::vector<Vertex>> covers_;
    std::vector<Vertex> order_;
    std::vector<std::size_t> residual_;
    std::vector<std::size_t> available_;
    std::size_t outstanding_ = 0;
    std::vector<bool> chosen_;
    std::vector<bool> best_;
    std::size_t best_size_ = 0;
};

} // namespace

std::string_view to_string(ExactStatus s)
{
    switch (s) {
    case ExactStatus::optimal: return "optimal";
    case ExactStatus::infeasible: return "infeasible";
    case ExactStatus::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

ExactResult exact_gamma(const Graph& g, std::size_t k, Variant variant, std::uint64_t budget)
{
    if (k == 0)
        throw InputError("k must be at least 1");
    Search search(g, k, variant, budget);
    ExactResult result;
    if (!search.feasible()) {
        result.status = ExactStatus::infeasible;
        result.witness = VertexSet(g.order());
        return result;
    }
    search.seed_incumbent();
    const bool finished = search.run();
    result.status = finished ? ExactStatus::optimal : ExactStatus::budget_exhausted;
    result.size = search.best_size();
    result.witness = search.witness();
    result.nodes = search.nodes();
    return result;
}

} // namespace ktdom
