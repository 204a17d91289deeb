#include "extend.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace a1lie {

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

using PolyVec = std::vector<FpPoly>;

PolyVec resolve_vec(const SolverState& st, const PolyVec& v) {
    PolyVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = st.resolve(v[i]);
    return out;
}

PolyVec family_vec(const SolutionFamily& fam, const PolyVec& v) {
    PolyVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        FpPoly r = v[i];
        for (int var = 0; var < (int)fam.assignment.size(); ++var)
            if (r.mentions(var)) r = r.substitute(var, fam.assignment[var]);
        out[i] = r;
    }
    return out;
}

PolyVec bracket_poly(const ChevalleyBasis& cb, const PolyVec& a, const PolyVec& b,
                     std::uint32_t p, int nvars) {
    PolyVec out(cb.dim(), FpPoly(p, nvars));
    for (int i = 0; i < cb.dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < cb.dim(); ++j) {
            if (b[j].is_zero()) continue;
            int sign;
            const auto& terms = cb.bracket_basis(i, j, sign);
            if (terms.empty()) continue;
            FpPoly prod = a[i] * b[j];
            for (auto [idx, co] : terms)
                out[idx] += prod.scaled(fp::from_int((long long)sign * co, p));
        }
    }
    return out;
}

PolyVec matrix_apply_poly(const FpMatrix& x, const PolyVec& v, std::uint32_t p, int nvars) {
    PolyVec out(x.rows(), FpPoly(p, nvars));
    for (int j = 0; j < (int)v.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < x.rows(); ++i) {
            std::uint32_t c = x.at(i, j);
            if (c) out[i] += v[j].scaled(c);
        }
    }
    return out;
}

PolyVec vec_sub(const PolyVec& a, const PolyVec& b) {
    PolyVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

PolyVec vec_scaled(const PolyVec& a, std::uint32_t c) {
    PolyVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i].scaled(c);
    return out;
}

bool vec_is_zero(const PolyVec& a) {
    return std::all_of(a.begin(), a.end(), [](const FpPoly& f) { return f.is_zero(); });
}

FpVec eval_vec(const ChevalleyBasis& cb, const PolyVec& v, std::uint32_t p,
               const std::vector<std::uint32_t>& point) {
    FpVec out = cb.zero_fp(p);
    for (int i = 0; i < cb.dim(); ++i) out.c[i] = v[i].evaluate(point);
    return out;
}

// raw symbolic slot vectors (before any substitution)
std::vector<PolyVec> raw_ws(const ChevalleyBasis& cb, const Ansatz& az) {
    std::vector<PolyVec> ws(az.wdim, PolyVec(cb.dim(), FpPoly(az.p, az.nvars)));
    for (int k = 0; k < az.wdim; ++k)
        for (size_t t = 0; t < az.slot_basis[k].size(); ++t) {
            FpPoly var = FpPoly::variable(az.p, az.nvars, az.slot_var_offset[k] + (int)t);
            const FpVec& bv = az.slot_basis[k][t];
            for (int i = 0; i < cb.dim(); ++i)
                if (bv.c[i]) ws[k][i] += var.scaled(bv.c[i]);
        }
    return ws;
}

// grid of sample points over the free variables (>= 3 points per variable,
// degree+1 when higher)
std::vector<std::vector<std::uint32_t>> sample_grid(std::uint32_t p, int nvars,
                                                    const std::vector<int>& frees,
                                                    int maxdeg) {
    int per = std::min<long long>(p, std::max(3, maxdeg + 1));
    long long total = 1;
    for (size_t i = 0; i < frees.size(); ++i) total *= per;
    std::vector<std::vector<std::uint32_t>> pts;
    for (long long it = 0; it < total; ++it) {
        std::vector<std::uint32_t> pt(nvars, 0);
        long long t = it;
        for (int v : frees) {
            pt[v] = (std::uint32_t)(t % per);
            t /= per;
        }
        pts.push_back(std::move(pt));
    }
    return pts;
}

int max_degree(const PolyVec& v) {
    int d = 0;
    for (const auto& f : v) d = std::max(d, f.total_degree());
    return d;
}

}  // namespace

Ansatz build_ansatz(const ChevalleyBasis& cb, std::uint32_t p, int wdim,
                    const std::vector<int>* expected_slot_dims) {
    if (wdim != 3 && wdim != 5)
        throw UnsupportedCaseError("ansatz dimension must be 3 or 5");
    Ansatz az;
    az.p = p;
    az.wdim = wdim;
    az.x = regular_unipotent(cb, p);
    int dim = cb.dim();
    FpMatrix N = az.x - FpMatrix::identity(p, dim);

    TorusAction ta = make_torus_action(cb, p);
    auto residue = [&](long long w) {
        long long r = w % (long long)(p - 1);
        if (r < 0) r += p - 1;
        return (int)r;
    };

    FpMatrix Nk = FpMatrix::identity(p, dim);
    for (int k = 0; k < wdim; ++k) {
        Nk = Nk * N;  // (x-1)^(k+1)
        int exp = residue(wdim - 1 - 2 * k);
        std::vector<int> idxs;
        for (int i = 0; i < dim; ++i)
            if (residue(ta.weight[i]) == exp) idxs.push_back(i);
        FpMatrix sub(p, dim, (int)idxs.size());
        for (int r0 = 0; r0 < dim; ++r0)
            for (size_t c0 = 0; c0 < idxs.size(); ++c0) sub.at(r0, (int)c0) = Nk.at(r0, idxs[c0]);
        std::vector<FpVec> basis;
        for (const auto& kv : kernel(sub)) {
            FpVec v = cb.zero_fp(p);
            for (size_t c0 = 0; c0 < idxs.size(); ++c0) v.c[idxs[c0]] = kv[c0];
            basis.push_back(std::move(v));
        }
        az.slot_basis.push_back(std::move(basis));
    }

    // Put the regular nilpotent direction first in the top slot so that the
    // leading coefficient carries the generic-branch meaning.
    if (wdim == 3 && !az.slot_basis[0].empty()) {
        ZVec e = regular_nilpotent_e(cb);
        FpVec ebar = cb.reduce_mod_p(e, p);
        std::vector<std::vector<std::uint32_t>> rows;
        rows.push_back(ebar.c);
        std::vector<FpVec> reordered{ebar};
        for (const auto& bv : az.slot_basis[0]) {
            auto r0 = rref(rows, p).size();
            rows.push_back(bv.c);
            if (rref(rows, p).size() > r0)
                reordered.push_back(bv);
            else
                rows.pop_back();
        }
        if (reordered.size() != az.slot_basis[0].size())
            throw ConsistencyError("regular nilpotent not in the top ansatz slot");
        az.slot_basis[0] = std::move(reordered);
    }

    int off = 0;
    for (int k = 0; k < wdim; ++k) {
        az.slot_var_offset.push_back(off);
        off += (int)az.slot_basis[k].size();
    }
    az.nvars = off;
    for (int v = 1; v <= az.nvars; ++v) az.var_names.push_back("a" + std::to_string(v));

    if (expected_slot_dims) {
        std::ostringstream note;
        for (int k = 0; k < wdim; ++k) {
            int got = (int)az.slot_basis[k].size();
            int want = (*expected_slot_dims)[k];
            if (got != want)
                note << "slot " << k << " dimension " << got << " (expected " << want << "); ";
        }
        az.dim_note = note.str();
    }
    return az;
}

PolySystem impose_constraints(const ChevalleyBasis& cb, const Ansatz& az) {
    PolySystem sys;
    sys.p = az.p;
    sys.var_names = az.var_names;
    auto ws = raw_ws(cb, az);

    // x-action: x(w_t) = sum_{u<=t} C(t,u) w_u
    for (int t = 1; t < az.wdim; ++t) {
        PolyVec lhs = matrix_apply_poly(az.x, ws[t], az.p, az.nvars);
        for (int u = 0; u <= t; ++u)
            lhs = vec_sub(lhs, vec_scaled(ws[u], fp::from_int(binom(t, u), az.p)));
        for (const auto& f : lhs)
            if (!f.is_zero()) sys.eqs.push_back(f);
    }

    // abelian centralizer of the opposite regular unipotent:
    // [w_bot, [w_bot, w_next]] = 0
    PolyVec inner = bracket_poly(cb, ws[az.wdim - 1], ws[az.wdim - 2], az.p, az.nvars);
    PolyVec outer = bracket_poly(cb, ws[az.wdim - 1], inner, az.p, az.nvars);
    for (const auto& f : outer)
        if (!f.is_zero()) sys.eqs.push_back(f);
    return sys;
}

namespace {

ClassifiedFamily classify_family(const ChevalleyBasis& cb, const Ansatz& az,
                                 const std::vector<PolyVec>& ws_raw,
                                 const SolutionFamily& fam) {
    std::uint32_t p = az.p;
    ClassifiedFamily cf;
    cf.sol = fam;

    std::vector<PolyVec> w(az.wdim);
    for (int k = 0; k < az.wdim; ++k) w[k] = family_vec(fam, ws_raw[k]);

    const std::vector<int>& frees = fam.free_vars;

    if (az.wdim == 3) {
        // sl2-subalgebra relations [w2,w-2] = 2w0, [w2,w0] = w2, [w0,w-2] = w-2
        PolyVec r1 = vec_sub(bracket_poly(cb, w[0], w[2], p, az.nvars),
                             vec_scaled(w[1], 2 % p));
        PolyVec r2 = vec_sub(bracket_poly(cb, w[0], w[1], p, az.nvars), w[0]);
        PolyVec r3 = vec_sub(bracket_poly(cb, w[1], w[2], p, az.nvars), w[2]);
        bool sl2 = true;
        for (const auto* rv : {&r1, &r2, &r3})
            for (const auto& f : *rv)
                if (!vanishes_identically(f, frees)) sl2 = false;
        if (sl2) {
            cf.cls = ClassifiedFamily::Class::SL2;
            cf.sl2_relations_identical = true;
            // normalized triple (w2, -2 w0, -w-2)
            PolyVec H = vec_scaled(w[1], fp::from_int(-2, p));
            PolyVec F = vec_scaled(w[2], fp::neg(1, p));
            std::vector<std::uint32_t> zero_pt(az.nvars, 0);
            FpVec E0 = eval_vec(cb, w[0], p, zero_pt);
            FpVec H0 = eval_vec(cb, H, p, zero_pt);
            FpVec F0 = eval_vec(cb, F, p, zero_pt);
            bool e_const = true;
            for (const auto& f : w[0])
                if (!f.is_constant() && !frees.empty())
                    for (int v : frees)
                        if (f.degree_in(v) > 0) e_const = false;
            if (e_const) cf.lift = integral_lift_check(cb, E0, F0);
            if (!frees.empty()) {
                cf.has_deformation = true;
                if (frees.size() == 1 && cf.lift) {
                    int g = frees[0];
                    bool shape_ok = true;
                    FpVec Y = cb.zero_fp(p), Z1 = cb.zero_fp(p), Z2 = cb.zero_fp(p);
                    for (int i = 0; i < cb.dim(); ++i) {
                        if (H[i].degree_in(g) > 1 || F[i].degree_in(g) > 2) shape_ok = false;
                    }
                    if (shape_ok) {
                        std::vector<std::uint32_t> pt(az.nvars, 0);
                        auto coef = [&](const FpPoly& f, int k) {
                            // coefficient of g^k via finite differences at
                            // 0,1,2 (degree <= 2)
                            std::uint32_t v0, v1, v2;
                            pt[g] = 0; v0 = f.evaluate(pt);
                            pt[g] = 1; v1 = f.evaluate(pt);
                            pt[g] = 2; v2 = f.evaluate(pt);
                            pt[g] = 0;
                            std::uint32_t c2 = fp::mul(fp::sub(fp::add(v2, v0, p),
                                                               fp::mul(2, v1, p), p),
                                                       fp::inv(2, p), p);
                            std::uint32_t c1 = fp::sub(fp::sub(v1, v0, p), c2, p);
                            if (k == 0) return v0;
                            if (k == 1) return c1;
                            return c2;
                        };
                        for (int i = 0; i < cb.dim(); ++i) {
                            Y.c[i] = coef(H[i], 1);
                            Z1.c[i] = coef(F[i], 1);
                            Z2.c[i] = coef(F[i], 2);
                        }
                        std::string why;
                        cf.deformation_ok =
                            deformation_check(cb, p, *cf.lift, Y, Z1, Z2, &why);
                        cf.detail = why;
                    }
                }
            }
            return cf;
        }
    }

    // nilpotent positive-part certificate
    bool positive = true;
    for (int k = 0; k < az.wdim && positive; ++k)
        for (int i = 0; i < cb.dim() && positive; ++i)
            if (!cb.is_e(i) && !vanishes_identically(w[k][i], frees)) positive = false;
    cf.positive_support = positive;

    int maxdeg = 0;
    for (int k = 0; k < az.wdim; ++k) maxdeg = std::max(maxdeg, max_degree(w[k]));
    auto grid = sample_grid(p, az.nvars, frees, maxdeg);
    bool closed = true;
    for (const auto& pt : grid) {
        std::vector<std::vector<std::uint32_t>> span_rows;
        std::vector<FpVec> wv;
        for (int k = 0; k < az.wdim; ++k) {
            wv.push_back(eval_vec(cb, w[k], p, pt));
            span_rows.push_back(wv.back().c);
        }
        auto basis = rref(span_rows, p);
        if ((int)basis.size() != az.wdim) {
            closed = false;
            break;
        }
        for (int i2 = 0; i2 < az.wdim && closed; ++i2)
            for (int j2 = i2; j2 < az.wdim && closed; ++j2) {
                FpVec br = cb.bracket(wv[i2], wv[j2]);
                if (!in_span(basis, br.c, p)) closed = false;
            }
        if (!closed) break;
    }
    cf.bracket_closure = closed;
    cf.certificate_samples = (int)grid.size();
    if (positive && closed)
        cf.cls = ClassifiedFamily::Class::NILPOTENT_POSITIVE;
    else
        cf.cls = ClassifiedFamily::Class::OTHER;
    return cf;
}

}  // namespace

std::vector<BranchOutcome> solve_and_classify(const ChevalleyBasis& cb, const Ansatz& az,
                                              long long budget) {
    std::uint32_t p = az.p;
    auto ws_raw = raw_ws(cb, az);
    PolySystem base = impose_constraints(cb, az);

    int top_vars = (int)az.slot_basis[0].size();
    std::vector<BranchOutcome> out;
    for (int lead = 0; lead < top_vars; ++lead) {
        BranchOutcome bo;
        std::ostringstream lbl;
        for (int v = 0; v < lead; ++v) lbl << az.var_names[v] << "=0,";
        lbl << az.var_names[lead] << "=1";
        bo.label = lbl.str();

        SolverState st(p, az.nvars);
        for (int v = 0; v < lead; ++v) st.assign(v, FpPoly::constant(p, az.nvars, 0));
        st.assign(lead, FpPoly::constant(p, az.nvars, 1));
        for (const auto& e : base.eqs) st.add_equation(e);
        if (!st.eliminate()) {
            out.push_back(std::move(bo));
            continue;
        }

        // x'-propagation to a fixpoint: whenever a bracket of ansatz
        // elements vanishes identically, its image under the opposite
        // unipotent must vanish as well.
        std::set<std::pair<int, int>> done;
        bool grew = true;
        while (grew && !st.dead()) {
            grew = false;
            std::vector<PolyVec> w(az.wdim);
            for (int k = 0; k < az.wdim; ++k) w[k] = resolve_vec(st, ws_raw[k]);
            std::vector<PolyVec> xw(az.wdim);
            for (int t = 0; t < az.wdim; ++t) {
                xw[t] = PolyVec(cb.dim(), FpPoly(p, az.nvars));
                for (int u = t; u < az.wdim; ++u) {
                    std::uint32_t c = fp::from_int(binom(az.wdim - 1 - t, u - t), p);
                    if (c) xw[t] = vec_sub(xw[t], vec_scaled(w[u], fp::neg(c, p)));
                }
            }
            for (int s2 = 0; s2 < az.wdim && !st.dead(); ++s2)
                for (int t2 = s2 + 1; t2 < az.wdim && !st.dead(); ++t2) {
                    if (done.count({s2, t2})) continue;
                    PolyVec B = bracket_poly(cb, w[s2], w[t2], p, az.nvars);
                    if (!vec_is_zero(B)) continue;
                    done.insert({s2, t2});
                    PolyVec E = bracket_poly(cb, xw[s2], xw[t2], p, az.nvars);
                    bool added = false;
                    for (const auto& f : E)
                        if (!f.is_zero()) {
                            st.add_equation(f);
                            added = true;
                        }
                    if (added) {
                        st.eliminate();
                        grew = true;
                    }
                }
        }
        if (st.dead()) {
            out.push_back(std::move(bo));
            continue;
        }

        for (auto& fin : st.enumerate_residual(budget)) {
            SolutionFamily fam = fin.family();
            bo.families.push_back(classify_family(cb, az, ws_raw, fam));
        }
        out.push_back(std::move(bo));
    }
    return out;
}

std::vector<FpVec> evaluate_family(const ChevalleyBasis& cb, const Ansatz& az,
                                   const SolutionFamily& fam,
                                   const std::vector<std::uint32_t>& free_values) {
    auto ws = raw_ws(cb, az);
    std::vector<std::uint32_t> pt(az.nvars, 0);
    for (size_t i = 0; i < fam.free_vars.size() && i < free_values.size(); ++i)
        pt[fam.free_vars[i]] = free_values[i];
    std::vector<FpVec> out;
    for (int k = 0; k < az.wdim; ++k)
        out.push_back(eval_vec(cb, family_vec(fam, ws[k]), az.p, pt));
    return out;
}

bool deformation_check(const ChevalleyBasis& cb, std::uint32_t p, const Sl2TripleZ& base,
                       const FpVec& y, const FpVec& z1, const FpVec& z2, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    auto balanced = [&](const FpVec& v) {
        ZVec out = cb.zero_z();
        for (int i = 0; i < cb.dim(); ++i) {
            long long c = v.c[i];
            if (c > (long long)p / 2) c -= p;
            out[i] = c;
        }
        return out;
    };
    auto weight_support_is = [&](const FpVec& v, int wt) {
        for (int i = 0; i < cb.dim(); ++i)
            if (v.c[i] && cb.weight(i) != wt) return false;
        return true;
    };
    bool z2_zero = std::all_of(z2.c.begin(), z2.c.end(), [](std::uint32_t c) { return !c; });
    bool z1_zero = std::all_of(z1.c.begin(), z1.c.end(), [](std::uint32_t c) { return !c; });

    if (!weight_support_is(y, (int)p - 1)) return fail("y is not of weight p-1");
    if (!z1_zero && !weight_support_is(z1, (int)p - 3)) return fail("z1 is not of weight p-3");
    if (!z2_zero && !weight_support_is(z2, 2 * (int)p - 4))
        return fail("z2 is not of weight 2p-4");

    ZVec yz = balanced(y);
    ZVec ey = cb.bracket(base.e, yz);
    if (ey != cb.zero_z()) return fail("[e, y] != 0 over Z");

    if (z2_zero) {
        ZVec z1z = balanced(z1);
        if (cb.bracket(yz, z1z) != cb.zero_z()) return fail("[y, z] != 0 over Z");
    } else {
        // two-term ladder: z1 = [y, f], 2 z2 = [y, z1] over Z, compared mod p
        ZVec z1d = cb.bracket(yz, base.f);
        FpVec z1dp = cb.reduce_mod_p(z1d, p);
        if (!(z1dp.c == z1.c)) return fail("[y, f] does not reduce to z1");
        ZVec z2d = cb.bracket(yz, z1d);
        ZVec half = cb.zero_z();
        for (int i = 0; i < cb.dim(); ++i) {
            if (z2d[i] % 2 != 0) return fail("[y, z1] is odd over Z");
            half[i] = z2d[i] / 2;
        }
        FpVec z2dp = cb.reduce_mod_p(half, p);
        if (!(z2dp.c == z2.c)) return fail("[y, z1]/2 does not reduce to z2");
    }

    // sl2 relations of the deformed triple, identically in gamma
    FpVec e0 = cb.reduce_mod_p(base.e, p);
    FpVec h0 = cb.reduce_mod_p(base.h, p);
    FpVec f0 = cb.reduce_mod_p(base.f, p);
    int samples = (int)std::min<std::uint32_t>(p, 5);
    for (int g = 0; g < samples; ++g) {
        FpVec h = h0, f = f0;
        std::uint32_t gg = fp::mul((std::uint32_t)g, (std::uint32_t)g, p);
        for (int i = 0; i < cb.dim(); ++i) {
            h.c[i] = fp::add(h.c[i], fp::mul((std::uint32_t)g, y.c[i], p), p);
            f.c[i] = fp::add(f.c[i], fp::mul((std::uint32_t)g, z1.c[i], p), p);
            f.c[i] = fp::add(f.c[i], fp::mul(gg, z2.c[i], p), p);
        }
        FpVec he = cb.bracket(h, e0), hf = cb.bracket(h, f), ef = cb.bracket(e0, f);
        for (int i = 0; i < cb.dim(); ++i) {
            if (he.c[i] != fp::mul(2, e0.c[i], p)) return fail("[h,e] != 2e in family");
            if (hf.c[i] != fp::mul(p - 2, f.c[i], p)) return fail("[h,f] != -2f in family");
            if (ef.c[i] != h.c[i]) return fail("[e,f] != h in family");
        }
    }
    if (why) *why = "deformation family verified";
    return true;
}

LineCertificate u_line_certificate(const ChevalleyBasis& cb, std::uint32_t p) {
    LineCertificate lc;
    FpMatrix x = regular_unipotent(cb, p);
    TorusAction ta = make_torus_action(cb, p);
    WeightedFixedBasis wfb = fixed_space_weights(cb, x, ta);
    std::vector<FpVec> zero_slot;
    for (size_t i = 0; i < wfb.vectors.size(); ++i)
        if (wfb.exponents[i] == 0) zero_slot.push_back(wfb.vectors[i]);
    if (zero_slot.size() != 1) {
        lc.detail = "fixed space has " + std::to_string(zero_slot.size()) +
                    " zero-weight lines";
        return lc;
    }
    lc.generator = zero_slot[0];
    for (int i = 0; i < cb.dim(); ++i)
        if (lc.generator.c[i] && !cb.is_e(i)) {
            lc.detail = "zero-weight fixed vector leaves the positive part";
            return lc;
        }
    lc.ok = true;
    lc.detail = "C_V(x) meets E_0 in a line inside the positive part";
    return lc;
}

}  // namespace a1lie
