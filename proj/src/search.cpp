#include "edf/search.hpp"

#include "edf/automorphisms.hpp"
#include "edf/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace edf {

SymmetryBreaking parse_symmetry(std::string_view text)
{
    if (text == "none")
        return SymmetryBreaking::none;
    if (text == "translation")
        return SymmetryBreaking::translation;
    if (text == "automorphism" || text == "translation+automorphism")
        return SymmetryBreaking::automorphism;
    throw ParseError("unknown symmetry breaking '" + std::string(text) + "'");
}

std::string to_string(SymmetryBreaking s)
{
    switch (s) {
    case SymmetryBreaking::none: return "none";
    case SymmetryBreaking::translation: return "translation";
    case SymmetryBreaking::automorphism: return "automorphism";
    }
    return {};
}

std::string SearchCertificate::summary() const
{
    std::string out;
    switch (reason) {
    case StopReason::exhausted: out = "exhausted"; break;
    case StopReason::infeasible: out = "exhausted (counting condition fails)"; break;
    case StopReason::max_solutions: out = "stopped at solution limit"; break;
    case StopReason::time_budget: out = "time budget reached; searched prefix up to node " + std::to_string(nodes); break;
    }
    out += "; solutions=" + std::to_string(solutions) + " nodes=" + std::to_string(nodes) + " depths=[";
    for (std::size_t d = 0; d < depth_histogram.size(); ++d)
        out += (d ? " " : "") + std::to_string(depth_histogram[d]);
    out += "]; quotient: " + quotient;
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
    Shared(const Group& g_, const LabelledDigraph& h_, std::uint32_t l_, std::uint32_t lambda_,
           const SearchOptions& o, const std::function<void(const SetFamily&)>& sink_)
        : g(g_), n(g_.order()), m(h_.vertex_count()), l(l_), lambda(lambda_), options(o), h(h_), sink(sink_)
    {
    }

    const Group& g;
    std::uint32_t n;
    std::uint32_t m;
    std::uint32_t l;
    std::uint32_t lambda;
    SearchOptions options;
    std::vector<std::uint32_t> table; // table[a*n+b] = a - b, when small enough
    std::vector<std::vector<std::uint32_t>> in_nb, out_nb;
    std::vector<Element> orbit_min;
    const LabelledDigraph& h;
    const std::function<void(const SetFamily&)>& sink;

    std::mutex lock;
    std::vector<SetFamily> solutions;
    std::atomic<bool> stop{false};
    std::atomic<int> reason{static_cast<int>(StopReason::exhausted)};
    std::atomic<std::uint64_t> nodes{0};
    std::vector<std::uint64_t> histogram;
    Clock::time_point deadline = Clock::time_point::max();

    std::uint32_t diff(std::uint32_t a, std::uint32_t b) const
    {
        return table.empty() ? g.difference(Element{a}, Element{b}).index : table[std::size_t{a} * n + b];
    }
};

class Worker {
public:
    explicit Worker(Shared& s)
        : s_(s), sets_(s.m), count_(s.n, 0), used_(s.n, 0), hist_(s.m * s.l + 1, 0)
    {
    }

    // Runs the subtree whose A_0 starts with `prefix`.
    void run(const std::vector<std::uint32_t>& prefix)
    {
        for (auto x : prefix) {
            if (!place(0, x)) {
                unwind();
                return;
            }
        }
        ++local_nodes_;
        ++hist_[prefix.size()];
        dfs(static_cast<std::uint32_t>(prefix.size()));
        unwind();
    }

    void flush()
    {
        std::lock_guard guard(s_.lock);
        for (std::size_t d = 0; d < hist_.size(); ++d)
            s_.histogram[d] += hist_[d];
        s_.nodes += local_nodes_;
    }

private:
    void unwind()
    {
        for (std::uint32_t v = s_.m; v-- > 0;)
            while (!sets_[v].empty())
                remove(v);
    }

    bool bump(std::uint32_t d, std::vector<std::uint32_t>& touched)
    {
        touched.push_back(d);
        return d != 0 && ++count_[d] <= s_.lambda;
    }

    // Adds x to A_v, updating the running multiplicities; rolls back on overflow.
    bool place(std::uint32_t v, std::uint32_t x)
    {
        if (s_.options.mode == DisjointMode::disjoint && used_[x])
            return false;
        auto& touched = scratch_;
        touched.clear();
        bool ok = true;
        for (auto i : s_.in_nb[v]) {
            for (auto a : sets_[i])
                if (!(ok = bump(s_.diff(x, a), touched)))
                    break;
            if (!ok)
                break;
        }
        if (ok) {
            for (auto j : s_.out_nb[v]) {
                for (auto a : sets_[j])
                    if (!(ok = bump(s_.diff(a, x), touched)))
                        break;
                if (!ok)
                    break;
            }
        }
        if (!ok) {
            for (auto d : touched)
                if (d != 0)
                    --count_[d];
            return false;
        }
        sets_[v].push_back(x);
        ++used_[x];
        return true;
    }

    void remove(std::uint32_t v)
    {
        const auto x = sets_[v].back();
        sets_[v].pop_back();
        --used_[x];
        for (auto i : s_.in_nb[v])
            for (auto a : sets_[i])
                --count_[s_.diff(x, a)];
        for (auto j : s_.out_nb[v])
            for (auto a : sets_[j])
                --count_[s_.diff(a, x)];
    }

    bool admissible_in_a0(std::uint32_t x) const
    {
        if (s_.options.symmetry != SymmetryBreaking::automorphism)
            return true;
        const auto& a0 = sets_[0];
        if (a0.size() == 1)
            return s_.orbit_min[x].index == x;
        const auto x1 = a0[1];
        for (auto a : a0)
            if (s_.orbit_min[s_.diff(x, a)].index < x1 || s_.orbit_min[s_.diff(a, x)].index < x1)
                return false;
        return true;
    }

    void emit()
    {
        SetFamily fam;
        for (const auto& s : sets_) {
            ElementSet es;
            for (auto x : s)
                es.push_back(Element{x});
            fam.sets.push_back(std::move(es));
        }
        VerifyOptions opts;
        opts.expected_lambda = s_.lambda;
        opts.mode = s_.options.mode;
        if (!verify_h_edf(s_.g, s_.h, fam, opts).verified)
            throw std::logic_error("search produced a family that does not verify");
        std::lock_guard guard(s_.lock);
        if (s_.stop)
            return;
        s_.solutions.push_back(fam);
        if (s_.sink)
            s_.sink(fam);
        if (s_.options.max_solutions != 0 && s_.solutions.size() >= s_.options.max_solutions) {
            s_.reason = static_cast<int>(StopReason::max_solutions);
            s_.stop = true;
        }
    }

    void dfs(std::uint32_t depth)
    {
        if (s_.stop)
            return;
        if (depth == s_.m * s_.l) {
            emit();
            return;
        }
        const std::uint32_t v = depth / s_.l, k = depth % s_.l;
        const std::uint32_t first = k == 0 ? 0 : sets_[v].back() + 1;
        const std::uint32_t last = s_.n - (s_.l - k); // room for the rest of the set
        for (std::uint32_t x = first; x <= last && !s_.stop; ++x) {
            if (v == 0 && !admissible_in_a0(x))
                continue;
            if (!place(v, x))
                continue;
            ++local_nodes_;
            ++hist_[depth + 1];
            if ((local_nodes_ & 0xfff) == 0 && Clock::now() > s_.deadline) {
                s_.reason = static_cast<int>(StopReason::time_budget);
                s_.stop = true;
            }
            dfs(depth + 1);
            remove(v);
        }
    }

    Shared& s_;
    std::vector<std::vector<std::uint32_t>> sets_;
    std::vector<std::uint32_t> count_;
    std::vector<std::uint32_t> used_;
    std::vector<std::uint64_t> hist_;
    std::vector<std::uint32_t> scratch_;
    std::uint64_t local_nodes_ = 0;
};

std::string quotient_text(SymmetryBreaking s)
{
    switch (s) {
    case SymmetryBreaking::none: return "all families (no symmetry breaking)";
    case SymmetryBreaking::translation: return "families up to translation (identity in A_0)";
    case SymmetryBreaking::automorphism:
        return "families up to translation and automorphism (identity in A_0, A_0 minimal under Aut(G))";
    }
    return {};
}

} // namespace

SearchResult search_h_edf(const Group& g, const LabelledDigraph& h, std::uint32_t l, std::uint32_t lambda,
                          const SearchOptions& options, const std::function<void(const SetFamily&)>& on_solution)
{
    const std::uint32_t n = g.order(), m = h.vertex_count();
    if (l < 1 || m < 1)
        throw std::invalid_argument("search needs l >= 1 and at least one vertex");
    if (l > n)
        throw std::invalid_argument("set size exceeds the group order");

    SearchResult result;
    auto& cert = result.certificate;
    cert.quotient = quotient_text(options.symmetry);
    cert.depth_histogram.assign(m * l + 1, 0);

    if (options.symmetry == SymmetryBreaking::automorphism && !g.is_abelian())
        throw UnsupportedError("automorphism symmetry breaking needs an abelian group");

    const std::uint64_t need = std::uint64_t{lambda} * (n - 1);
    const std::uint64_t have = std::uint64_t{h.edge_count()} * l * l;
    if (need != have) {
        cert.exhausted = true;
        cert.reason = StopReason::infeasible;
        cert.counting_feasible = false;
        return result;
    }

    Shared s(g, h, l, lambda, options, on_solution);
    s.histogram.assign(m * l + 1, 0);
    if (options.symmetry == SymmetryBreaking::automorphism)
        s.orbit_min = automorphism_orbit_minima(g);
    if (std::uint64_t{n} * n <= (1u << 24)) {
        s.table.resize(std::size_t{n} * n);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                s.table[std::size_t{a} * n + b] = g.difference(Element{a}, Element{b}).index;
    }
    s.in_nb.resize(m);
    s.out_nb.resize(m);
    for (const auto& e : h.edges()) {
        s.in_nb[e.to].push_back(e.from);
        s.out_nb[e.from].push_back(e.to);
    }
    if (options.time_budget)
        s.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(*options.time_budget));

    // Top-level branches: the first free element of A_0.
    std::vector<std::vector<std::uint32_t>> branches;
    if (options.symmetry == SymmetryBreaking::none) {
        for (std::uint32_t x = 0; x + l <= n; ++x)
            branches.push_back({x});
    } else if (l == 1) {
        branches.push_back({0});
    } else {
        for (std::uint32_t x = 1; x + l - 1 <= n; ++x)
            branches.push_back({0, x});
    }
    if (options.seed != 0) {
        std::mt19937_64 rng(options.seed);
        std::shuffle(branches.begin(), branches.end(), rng);
    }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        Worker w(s);
        std::size_t i;
        while (!s.stop && (i = next++) < branches.size()) {
            // the automorphism condition on the second element of A_0
            if (options.symmetry == SymmetryBreaking::automorphism && branches[i].size() == 2 &&
                s.orbit_min[branches[i][1]].index != branches[i][1])
                continue;
            w.run(branches[i]);
        }
        w.flush();
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    // the shared root {identity} of every two-element prefix
    if (options.symmetry != SymmetryBreaking::none && l >= 2 && !branches.empty()) {
        ++s.nodes;
        ++s.histogram[1];
    }
    result.solutions = std::move(s.solutions);
    cert.nodes = s.nodes;
    cert.depth_histogram = s.histogram;
    cert.reason = static_cast<StopReason>(s.reason.load());
    cert.exhausted = !s.stop;
    cert.solutions = result.solutions.size();
    return result;
}

std::vector<SetFamily> brute_force_oracle(const Group& g, const LabelledDigraph& h, std::uint32_t l,
                                          std::uint32_t lambda, DisjointMode mode)
{
    const std::uint32_t n = g.order(), m = h.vertex_count();
    if (n > oracle_max_order || m * l > oracle_max_elements || l < 1 || l > n)
        throw std::invalid_argument("instance exceeds the brute-force oracle bounds");

    std::vector<ElementSet> subsets;
    std::vector<std::uint32_t> pick(l);
    for (std::uint32_t i = 0; i < l; ++i)
        pick[i] = i;
    while (true) {
        ElementSet s;
        for (auto x : pick)
            s.push_back(Element{x});
        subsets.push_back(std::move(s));
        int i = static_cast<int>(l) - 1;
        while (i >= 0 && pick[i] == n - l + static_cast<std::uint32_t>(i))
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (std::uint32_t j = i + 1; j < l; ++j)
            pick[j] = pick[j - 1] + 1;
    }

    VerifyOptions opts;
    opts.expected_lambda = lambda;
    opts.mode = mode;
    std::vector<SetFamily> out;
    std::vector<std::size_t> odo(m, 0);
    SetFamily fam;
    fam.sets.resize(m);
    while (true) {
        for (std::uint32_t v = 0; v < m; ++v)
            fam.sets[v] = subsets[odo[v]];
        if (verify_h_edf(g, h, fam, opts).verified)
            out.push_back(fam);
        std::uint32_t v = m;
        while (v > 0 && ++odo[v - 1] == subsets.size())
            odo[--v] = 0;
        if (v == 0)
            break;
    }
    return out;
}

} // namespace edf
