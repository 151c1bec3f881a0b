#pragma once

#include <graphring/clique.hpp>
#include <graphring/graph.hpp>
#include <graphring/ops.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace graphring {

/// Three-valued outcome of a bounded exhaustive search. BudgetExceeded never means No.
enum class Answer { Yes, No, BudgetExceeded };

inline auto to_string(Answer a) -> const char *
{
    switch (a) {
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
        case Answer::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

/// map[v] is the image of source vertex v.
struct HomWitness {
    std::vector<std::size_t> map;

    friend auto operator==(const HomWitness &, const HomWitness &) -> bool = default;
};

/// Independent O(|E(G)|) check that w is a homomorphism g -> h.
inline auto verify_witness(const Graph & g, const Graph & h, const HomWitness & w) -> bool
{
    if (w.map.size() != g.size())
        return false;
    for (auto t : w.map)
        if (t >= h.size())
            return false;
    for (auto [u, v] : g.edges())
        if (! h.adjacent(w.map[u], w.map[v]))
            return false;
    return true;
}

struct SearchConfig {
    std::uint64_t node_budget = 200'000'000;
    /// Fixed branching order, reproducible witnesses. Takes precedence over `parallel`.
    bool deterministic = true;
    bool parallel = false;
    /// Worker count for parallel mode; 0 means hardware concurrency.
    unsigned threads = 0;
};

struct HomResult {
    Answer answer = Answer::No;
    std::optional<HomWitness> witness;
    std::uint64_t nodes = 0;

    [[nodiscard]] auto yes() const -> bool { return answer == Answer::Yes; }
    [[nodiscard]] auto no() const -> bool { return answer == Answer::No; }
};

namespace detail {
    enum class Outcome { Found, Exhausted, Aborted };

    // Backtracking over one connected component of the source with bitset domains and
    // forward checking. Variables are picked smallest-domain first, ties broken by
    // descending source degree then index. When the target is complete all values are
    // interchangeable, so only one previously unused value is ever tried.
    class HomSearch {
    public:
        HomSearch(const Graph & g, const Graph & h, std::uint64_t budget, std::atomic<std::uint64_t> & nodes,
            std::atomic<bool> & stop) :
            _g(g), _h(h), _budget(budget), _nodes(nodes), _stop(stop), _complete_target(h.is_complete()),
            _assignment(g.size(), VertexSet::npos), _domains(g.size(), VertexSet(h.size())), _used(h.size())
        {
            VertexSet non_isolated(h.size());
            for (std::size_t t = 0; t < h.size(); ++t)
                if (h.degree(t) > 0)
                    non_isolated.set(t);
            auto all = h.vertices();
            for (std::size_t v = 0; v < g.size(); ++v)
                _domains[v] = g.degree(v) > 0 ? non_isolated : all;
        }

        void set_component(std::vector<std::size_t> vars)
        {
            _vars = std::move(vars);
            _used = VertexSet(_h.size());
        }

        [[nodiscard]] auto component() const -> const std::vector<std::size_t> & { return _vars; }

        auto solve() -> Outcome { return search(_vars.size()); }

        /// Root variable and the values that would be tried for it.
        auto root_branches() -> std::pair<std::size_t, std::vector<std::size_t>>
        {
            auto v = choose();
            return {v, values_for(v)};
        }

        /// Solve with the root variable fixed to value t.
        auto solve_from(std::size_t v, std::size_t t) -> Outcome
        {
            if (! count_node())
                return Outcome::Aborted;
            auto mark = _trail.size();
            auto result = Outcome::Exhausted;
            if (assign(v, t))
                result = search(_vars.size() - 1);
            if (result != Outcome::Found)
                unassign(v, t, mark);
            return result;
        }

        [[nodiscard]] auto assignment() const -> const std::vector<std::size_t> & { return _assignment; }

    private:
        auto count_node() -> bool
        {
            if (_stop.load(std::memory_order_relaxed))
                return false;
            return _nodes.fetch_add(1, std::memory_order_relaxed) < _budget;
        }

        auto choose() const -> std::size_t
        {
            std::size_t best = VertexSet::npos, best_size = 0, best_deg = 0;
            for (auto v : _vars) {
                if (_assignment[v] != VertexSet::npos)
                    continue;
                auto size = _domains[v].count(), deg = _g.degree(v);
                if (best == VertexSet::npos || size < best_size || (size == best_size && deg > best_deg)) {
                    best = v;
                    best_size = size;
                    best_deg = deg;
                }
            }
            return best;
        }

        auto values_for(std::size_t v) const -> std::vector<std::size_t>
        {
            std::vector<std::size_t> values;
            if (_complete_target) {
                auto fresh = _used.complement().first();
                _domains[v].for_each([&](std::size_t t) {
                    if (_used.test(t) || t == fresh)
                        values.push_back(t);
                });
            }
            else
                values = _domains[v].members();
            return values;
        }

        auto assign(std::size_t v, std::size_t t) -> bool
        {
            _assignment[v] = t;
            _used_stack.push_back(! _used.test(t));
            _used.set(t);
            bool ok = true;
            _g.neighbours(v).for_each([&](std::size_t u) {
                if (! ok || _assignment[u] != VertexSet::npos)
                    return;
                _trail.emplace_back(u, _domains[u]);
                _domains[u] &= _h.neighbours(t);
                if (_domains[u].empty())
                    ok = false;
            });
            return ok;
        }

        void unassign(std::size_t v, std::size_t t, std::size_t mark)
        {
            while (_trail.size() > mark) {
                _domains[_trail.back().first] = std::move(_trail.back().second);
                _trail.pop_back();
            }
            if (_used_stack.back())
                _used.reset(t);
            _used_stack.pop_back();
            _assignment[v] = VertexSet::npos;
        }

        auto search(std::size_t remaining) -> Outcome
        {
            if (remaining == 0)
                return Outcome::Found;
            auto v = choose();
            for (auto t : values_for(v)) {
                if (! count_node())
                    return Outcome::Aborted;
                auto mark = _trail.size();
                if (assign(v, t)) {
                    auto r = search(remaining - 1);
                    if (r != Outcome::Exhausted)
                        return r;
                }
                unassign(v, t, mark);
            }
            return Outcome::Exhausted;
        }

        const Graph & _g;
        const Graph & _h;
        std::uint64_t _budget;
        std::atomic<std::uint64_t> & _nodes;
        std::atomic<bool> & _stop;
        bool _complete_target;
        std::vector<std::size_t> _assignment;
        std::vector<VertexSet> _domains;
        VertexSet _used;
        std::vector<bool> _used_stack;
        std::vector<std::size_t> _vars;
        std::vector<std::pair<std::size_t, VertexSet>> _trail;
    };

    inline auto connected_components(const Graph & g) -> std::vector<std::vector<std::size_t>>
    {
        std::vector<std::vector<std::size_t>> out;
        VertexSet unseen = g.vertices();
        while (unseen.any()) {
            std::vector<std::size_t> comp;
            VertexSet frontier(g.size());
            auto s = unseen.first();
            frontier.set(s);
            unseen.reset(s);
            while (frontier.any()) {
                auto v = frontier.first();
                frontier.reset(v);
                comp.push_back(v);
                auto next = g.neighbours(v) & unseen;
                unseen -= next;
                frontier |= next;
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    inline auto solve_component_parallel(const Graph & g, const Graph & h, HomSearch & seed, std::uint64_t budget,
        std::atomic<std::uint64_t> & nodes, unsigned threads, std::vector<std::size_t> & assignment) -> Outcome
    {
        auto [root, values] = seed.root_branches();
        std::atomic<bool> stop{false};
        std::atomic<std::size_t> next{0};
        std::mutex lock;
        bool found = false, aborted = false;
        auto worker = [&]() {
            std::atomic<bool> & local_stop = stop;
            HomSearch s(g, h, budget, nodes, local_stop);
            s.set_component(seed.component());
            while (true) {
                auto i = next.fetch_add(1);
                if (i >= values.size() || stop.load())
                    return;
                auto r = s.solve_from(root, values[i]);
                std::lock_guard guard(lock);
                if (r == Outcome::Found && ! found) {
                    found = true;
                    for (auto v : s.component())
                        assignment[v] = s.assignment()[v];
                    stop.store(true);
                }
                else if (r == Outcome::Aborted && ! stop.load())
                    aborted = true;
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        pool.clear();
        if (found)
            return Outcome::Found;
        return aborted ? Outcome::Aborted : Outcome::Exhausted;
    }
}

/// Decides whether a homomorphism g -> h exists. Yes results carry a verified witness;
/// No is only returned after exhaustive search.
inline auto exists_hom(const Graph & g, const Graph & h, const SearchConfig & cfg = {}) -> HomResult
{
    HomResult result;
    if (g.size() == 0) {
        result.answer = Answer::Yes;
        result.witness = HomWitness{};
        return result;
    }
    if (h.size() == 0) {
        result.answer = Answer::No;
        return result;
    }

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::vector<std::size_t> assignment(g.size(), VertexSet::npos);
    const bool parallel = cfg.parallel && ! cfg.deterministic;
    const unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());

    // Components are independent; isolated vertices go anywhere.
    for (auto & comp : detail::connected_components(g)) {
        if (comp.size() == 1 && g.degree(comp[0]) == 0) {
            assignment[comp[0]] = 0;
            continue;
        }
        detail::HomSearch search(g, h, cfg.node_budget, nodes, stop);
        search.set_component(comp);
        detail::Outcome outcome;
        if (parallel)
            outcome = detail::solve_component_parallel(g, h, search, cfg.node_budget, nodes, threads, assignment);
        else {
            outcome = search.solve();
            if (outcome == detail::Outcome::Found)
                for (auto v : comp)
                    assignment[v] = search.assignment()[v];
        }
        result.nodes = nodes.load();
        if (outcome == detail::Outcome::Exhausted) {
            result.answer = Answer::No;
            return result;
        }
        if (outcome == detail::Outcome::Aborted) {
            result.answer = Answer::BudgetExceeded;
            return result;
        }
    }
    result.nodes = nodes.load();
    HomWitness w{std::move(assignment)};
    if (! verify_witness(g, h, w))
        throw std::logic_error("homomorphism search produced an invalid witness");
    result.answer = Answer::Yes;
    result.witness = std::move(w);
    return result;
}

/// Yes iff g -> h and h -> g. A definite No in either direction wins over a budget overrun.
inline auto hom_equivalent(const Graph & g, const Graph & h, const SearchConfig & cfg = {}) -> Answer
{
    auto forward = exists_hom(g, h, cfg);
    if (forward.no())
        return Answer::No;
    auto backward = exists_hom(h, g, cfg);
    if (backward.no())
        return Answer::No;
    if (forward.yes() && backward.yes())
        return Answer::Yes;
    return Answer::BudgetExceeded;
}

struct ColouringResult {
    std::size_t colours = 0;
    HomWitness colouring;
};

/// Optimal colouring: climbs k from omega(g) until g -> K_k; the greedy colouring
/// supplies the ceiling. Throws BudgetExceeded if a step cannot be decided.
inline auto chromatic(const Graph & g, const SearchConfig & cfg = {}) -> ColouringResult
{
    if (g.size() == 0)
        return {0, HomWitness{}};
    auto greedy = dsatur_colouring(g);
    std::size_t upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
    for (std::size_t k = omega(g); k < upper; ++k) {
        auto r = exists_hom(g, complete(k), cfg);
        if (r.yes())
            return {k, *r.witness};
        if (r.answer == Answer::BudgetExceeded)
            throw Error(ErrorKind::BudgetExceeded, "deciding " + std::to_string(k) + "-colourability");
    }
    return {upper, HomWitness{greedy}};
}

inline auto chi(const Graph & g, const SearchConfig & cfg = {}) -> std::size_t { return chromatic(g, cfg).colours; }

struct FracHomResult {
    Answer answer = Answer::No;
    std::size_t d = 0;
    std::optional<HomWitness> witness;
};

/// Smallest d <= d_max with blowup(g,d) -> blowup(h,d). No is relative to d_max.
inline auto frachom(const Graph & g, const Graph & h, std::size_t d_max, const SearchConfig & cfg = {}) -> FracHomResult
{
    if (d_max == 0)
        throw Error(ErrorKind::InvalidParameter, "d_max must be at least 1");
    bool budget_hit = false;
    for (std::size_t d = 1; d <= d_max; ++d) {
        auto r = exists_hom(blowup(g, d), blowup(h, d), cfg);
        if (r.yes())
            return {Answer::Yes, d, r.witness};
        if (r.answer == Answer::BudgetExceeded)
            budget_hit = true;
    }
    return {budget_hit ? Answer::BudgetExceeded : Answer::No, 0, std::nullopt};
}

} // namespace graphring
