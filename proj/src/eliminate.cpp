#include "eliminate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "adjoint_data.hpp"
#include "errors.hpp"
#include "oneparam.hpp"
#include "torsion.hpp"

namespace a1lie {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "}";
    return os.str();
}

std::string join_map(const std::map<int, long long>& m) {
    std::ostringstream os;
    for (auto it = m.begin(); it != m.end(); ++it) {
        if (it != m.begin()) os << ",";
        os << it->first << ":" << it->second;
    }
    return os.str();
}

std::string join_set(const std::set<int>& s) {
    std::ostringstream os;
    os << "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) os << ",";
        os << *it;
    }
    os << "}";
    return os.str();
}

struct CaseContext {
    const ChevalleyBasis* cb;
    std::uint32_t p;
    std::vector<int> jordan;               // descending
    std::vector<int> d_multiset;           // residues mod p-1, sorted
    std::map<int, long long> full_weights; // residue -> multiplicity
    int filter_m = 0;                      // 0 = filter disabled
    std::set<std::vector<long long>> order_m_maps;
};

CaseContext build_context(const ChevalleyBasis& cb, std::uint32_t p, const FilterConfig& cfg) {
    CaseContext ctx;
    ctx.cb = &cb;
    ctx.p = p;
    FpMatrix x = regular_unipotent(cb, p);
    ctx.jordan = jordan_partition(x);
    TorusAction ta = make_torus_action(cb, p);
    WeightedFixedBasis wfb = fixed_space_weights(cb, x, ta);
    ctx.d_multiset = wfb.exponents;
    std::sort(ctx.d_multiset.begin(), ctx.d_multiset.end());
    for (int i = 0; i < cb.dim(); ++i) {
        int w = cb.weight(i) % (int)(p - 1);
        if (w < 0) w += p - 1;
        ctx.full_weights[w] += 1;
    }
    int m = eigenvalue_filter_order(cb.type());
    // The order-m filter is meaningful only when PSL2(p) has elements of
    // order m, i.e. m divides (p-1)/2 or (p+1)/2.
    if (cfg.use_order_m && m > 1 &&
        (((p - 1) / 2) % m == 0 || ((p + 1) / 2) % m == 0)) {
        ctx.filter_m = m;
        for (const auto& kc : enumerate_order_m(cb.roots(), m)) {
            auto mm = adjoint_eigen_multiplicities(cb.roots(), kc);
            std::vector<long long> v(m, 0);
            for (auto [r, c] : mm) v[r] = c;
            ctx.order_m_maps.insert(v);
        }
    }
    return ctx;
}

// multiset containment: target minus exps leaves exactly `wildcards` entries
bool eigen_multiset_match(std::vector<int> target, const std::vector<int>& exps,
                          int wildcards) {
    for (int e : exps) {
        auto it = std::find(target.begin(), target.end(), e);
        if (it == target.end()) return false;
        target.erase(it);
    }
    return (int)target.size() == wildcards;
}

std::vector<FilterReport> run_filters(const CaseContext& ctx, const Decomposition& d,
                                      const FilterConfig& cfg, bool short_circuit) {
    std::vector<FilterReport> out;
    std::uint32_t p = ctx.p;
    auto push = [&](const std::string& name, bool pass, std::string computed,
                    std::string allowed) {
        out.push_back({name, pass, std::move(computed), std::move(allowed)});
        return pass;
    };

    int dim = ctx.cb->dim();
    if (!push("dimension", d.dim() == dim, std::to_string(d.dim()), std::to_string(dim)) &&
        short_circuit)
        return out;

    std::vector<int> jd = decomposition_jordan(d);
    if (!push("jordan", jd == ctx.jordan, join_ints(jd), join_ints(ctx.jordan)) &&
        short_circuit)
        return out;

    if (cfg.use_full_weights) {
        std::map<int, long long> fw;
        for (const auto& s : d.parts)
            for (int f : shape_factors(s, p))
                for (int w = -f; w <= f; w += 2) {
                    int r = w % (int)(p - 1);
                    if (r < 0) r += p - 1;
                    fw[r] += 1;
                }
        if (!push("full-weights", fw == ctx.full_weights, join_map(fw),
                  join_map(ctx.full_weights)) &&
            short_circuit)
            return out;
    }

    if (cfg.use_fixed_eigen) {
        std::vector<int> exps;
        int wild = 0;
        for (const auto& s : d.parts) {
            FixedExponents fe = fixed_eigen_exponents(s, p, cfg.eigen_mode);
            exps.insert(exps.end(), fe.exps.begin(), fe.exps.end());
            wild += fe.wildcards;
        }
        std::sort(exps.begin(), exps.end());
        bool ok = eigen_multiset_match(ctx.d_multiset, exps, wild);
        std::string computed = join_ints(exps);
        if (wild) computed += "+" + std::to_string(wild) + "*";
        if (!push("fixed-eigen", ok, computed, join_ints(ctx.d_multiset)) && short_circuit)
            return out;
    }

    if (cfg.use_self_duality) {
        Decomposition dd;
        dd.p = p;
        for (const auto& s : d.parts) dd.parts.push_back(dual_shape(s, p));
        dd.sort_parts();
        if (!push("self-duality", dd == d, dd.to_string(), d.to_string()) && short_circuit)
            return out;
    }

    if (cfg.use_trace2) {
        int t = 0;
        for (const auto& s : d.parts) t += trace_order2(s, p);
        auto allowed = adjoint_trace_set_order2(ctx.cb->type());
        if (!push("trace2", allowed.count(t) > 0, std::to_string(t), join_set(allowed)) &&
            short_circuit)
            return out;
    }

    if (cfg.use_trace3) {
        int t = 0;
        for (const auto& s : d.parts) t += trace_order3(s, p);
        auto allowed = adjoint_trace_filter_order3(ctx.cb->type());
        if (!push("trace3", allowed.count(t) > 0, std::to_string(t), join_set(allowed)) &&
            short_circuit)
            return out;
    }

    if (ctx.filter_m > 1) {
        auto mm = eigen_multiplicities_order_m(d, ctx.filter_m);
        std::vector<long long> v(ctx.filter_m, 0);
        for (auto [r, c] : mm) v[r] = c;
        bool ok = ctx.order_m_maps.count(v) > 0;
        push("order-" + std::to_string(ctx.filter_m), ok, join_map(mm),
             std::to_string(ctx.order_m_maps.size()) + " realizable maps");
        if (!ok && short_circuit) return out;
    }
    return out;
}

// All canonical window shapes, grouped by dim mod p.
std::map<int, std::vector<Shape>> windows_by_residue(std::uint32_t p) {
    std::set<Shape> canon;
    for (int start = 1; start <= (int)p - 2; ++start)
        for (int len = 2; start + len - 1 <= (int)p - 1; ++len) {
            canon.insert(make_window(start, len, true, p));
            canon.insert(make_window(start, len, false, p));
        }
    std::map<int, std::vector<Shape>> by_res;
    for (const auto& w : canon) by_res[shape_dim(w, p) % (int)p].push_back(w);
    return by_res;
}

}  // namespace

EliminationResult enumerate_survivors(const ChevalleyBasis& cb, std::uint32_t p,
                                      const FilterConfig& cfg) {
    CaseContext ctx = build_context(cb, p, cfg);
    EliminationResult res;

    int A = 0;
    std::vector<std::pair<int, int>> nb;  // (size, multiplicity), sizes < p desc
    for (int b : ctx.jordan) {
        if (b == (int)p) {
            ++A;
        } else if (!nb.empty() && nb.back().first == b) {
            nb.back().second += 1;
        } else {
            nb.push_back({b, 1});
        }
    }

    auto windows = windows_by_residue(p);

    // covering options for a non-p block of size b
    auto options_for = [&](int b) {
        std::vector<Shape> opts;
        if ((b - 1) % 2 == 0 && b - 1 <= (int)p - 1) opts.push_back(make_simple(b - 1, p));
        auto it = windows.find(b % (int)p);
        if (it != windows.end())
            for (const auto& w : it->second) opts.push_back(w);
        return opts;
    };

    std::vector<int> w_indices;
    for (int i = 2; i <= (int)p - 3; i += 2) w_indices.push_back(i);

    std::set<Decomposition> seen;
    std::vector<Shape> current;

    std::function<void(int)> finish;  // defined below

    // choose multisets of W(i) of size k with non-decreasing index
    std::function<void(int, int)> choose_w = [&](int k, int from) {
        if (k == 0) {
            Decomposition d;
            d.p = p;
            d.parts = current;
            d.sort_parts();
            if (!seen.insert(d).second) return;
            res.candidates += 1;
            if (res.candidates > cfg.candidate_budget)
                throw SolverBudgetError("elimination candidate budget exceeded");
            auto reports = run_filters(ctx, d, cfg, true);
            if (!reports.empty() && !reports.back().pass) {
                res.killed_by[reports.back().filter] += 1;
                return;
            }
            res.survivors.push_back(d);
            res.traces.push_back(std::move(reports));
            return;
        }
        for (int idx = from; idx < (int)w_indices.size(); ++idx) {
            current.push_back(make_proj_w(w_indices[idx], p));
            choose_w(k - 1, idx);
            current.pop_back();
        }
    };

    // distribute the remaining J_p blocks among U, L(p-1) and W(i)
    auto distribute_projectives = [&](int remaining) {
        for (int u = 0; u <= remaining; ++u)
            for (int st = 0; st + u <= remaining; ++st) {
                int rest = remaining - u - st;
                if (rest % 2) continue;
                size_t base = current.size();
                for (int t = 0; t < u; ++t) current.push_back(make_proj_u());
                for (int t = 0; t < st; ++t) current.push_back(make_simple((int)p - 1, p));
                choose_w(rest / 2, 0);
                current.resize(base);
            }
    };

    // assign covers to the non-p blocks, consuming J_p budget for windows
    std::function<void(size_t, int, int, int)> cover =
        [&](size_t entry, int mult_left, int opt_from, int a_left) {
            if (entry == nb.size()) {
                distribute_projectives(a_left);
                return;
            }
            auto [b, mult] = nb[entry];
            if (mult_left == 0) {
                cover(entry + 1, entry + 1 < nb.size() ? nb[entry + 1].second : 0, 0, a_left);
                return;
            }
            auto opts = options_for(b);
            for (int oi = opt_from; oi < (int)opts.size(); ++oi) {
                int cost = shape_dim(opts[oi], p) / (int)p;
                if (cost > a_left) continue;
                current.push_back(opts[oi]);
                cover(entry, mult_left - 1, oi, a_left - cost);
                current.pop_back();
            }
        };

    cover(0, nb.empty() ? 0 : nb[0].second, 0, A);

    // canonical order
    std::vector<size_t> order(res.survivors.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return res.survivors[a] < res.survivors[b]; });
    EliminationResult sorted;
    sorted.candidates = res.candidates;
    sorted.killed_by = res.killed_by;
    for (size_t i : order) {
        sorted.survivors.push_back(res.survivors[i]);
        sorted.traces.push_back(res.traces[i]);
    }
    return sorted;
}

std::vector<FilterReport> explain(const ChevalleyBasis& cb, std::uint32_t p,
                                  const Decomposition& d, const FilterConfig& cfg) {
    CaseContext ctx = build_context(cb, p, cfg);
    Decomposition canon = d;
    canon.sort_parts();
    return run_filters(ctx, canon, cfg, false);
}

}  // namespace a1lie
