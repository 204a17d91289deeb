#include "fppoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "errors.hpp"
#include "exactalg.hpp"

namespace a1lie {

FpPoly FpPoly::constant(std::uint32_t p, int nvars, std::uint32_t c) {
    FpPoly r(p, nvars);
    c %= p;
    if (c) r.terms_[std::vector<std::uint16_t>(nvars, 0)] = c;
    return r;
}

FpPoly FpPoly::variable(std::uint32_t p, int nvars, int var) {
    FpPoly r(p, nvars);
    std::vector<std::uint16_t> e(nvars, 0);
    e[var] = 1;
    r.terms_[e] = 1;
    return r;
}

bool FpPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint16_t x) { return x == 0; });
}

std::uint32_t FpPoly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

void FpPoly::add_term(const std::vector<std::uint16_t>& e, std::uint32_t c) {
    if (!c) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second = fp::add(it->second, c, p_);
        if (!it->second) terms_.erase(it);
    }
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    FpPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    FpPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, fp::neg(c, p_));
    return r;
}

FpPoly FpPoly::operator-() const {
    FpPoly r(p_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = fp::neg(c, p_);
    return r;
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
    FpPoly r(p_, nvars_);
    c %= p_;
    if (!c) return r;
    for (const auto& [e, co] : terms_) r.terms_[e] = fp::mul(co, c, p_);
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    FpPoly r(p_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<std::uint16_t> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = (std::uint16_t)(e1[i] + e2[i]);
            r.add_term(e, fp::mul(c1, c2, p_));
        }
    return r;
}

int FpPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, (int)e[var]);
    return d;
}

int FpPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::vector<int> FpPoly::variables() const {
    std::vector<int> out;
    for (int v = 0; v < nvars_; ++v)
        if (degree_in(v) > 0) out.push_back(v);
    return out;
}

void FpPoly::split_linear(int var, FpPoly& A, FpPoly& B) const {
    assert(degree_in(var) <= 1);
    A = FpPoly(p_, nvars_);
    B = FpPoly(p_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 1) {
            std::vector<std::uint16_t> e2 = e;
            e2[var] = 0;
            A.add_term(e2, c);
        } else {
            B.add_term(e, c);
        }
    }
}

FpPoly FpPoly::substitute(int var, const FpPoly& value) const {
    // Horner in var
    int d = degree_in(var);
    if (d == 0) return *this;
    std::vector<FpPoly> coeffs(d + 1, FpPoly(p_, nvars_));
    for (const auto& [e, c] : terms_) {
        std::vector<std::uint16_t> e2 = e;
        int k = e2[var];
        e2[var] = 0;
        coeffs[k].add_term(e2, c);
    }
    FpPoly r = coeffs[d];
    for (int k = d - 1; k >= 0; --k) r = r * value + coeffs[k];
    return r;
}

std::uint32_t FpPoly::evaluate(const std::vector<std::uint32_t>& point) const {
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * point[i] % p_;
        acc = (acc + t) % p_;
    }
    return (std::uint32_t)acc;
}

std::string FpPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool has_var = false;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) has_var = true;
        if (c != 1 || !has_var) os << c;
        bool star = (c != 1 || !has_var);
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (star) os << "*";
            star = true;
            os << (i < (int)names.size() ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::vector<std::vector<std::uint32_t>> SolutionFamily::expand(long long cap) const {
    std::uint32_t p = 0;
    for (const auto& a : assignment)
        if (a.p()) p = a.p();
    long long count = 1;
    for (size_t i = 0; i < free_vars.size(); ++i) {
        count *= p;
        if (count > cap) throw SolverBudgetError("family expansion exceeds cap");
    }
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> point(assignment.size(), 0);
    std::vector<std::uint32_t> free_vals(free_vars.size(), 0);
    for (long long it = 0; it < count; ++it) {
        long long t = it;
        for (size_t i = 0; i < free_vars.size(); ++i) {
            free_vals[i] = (std::uint32_t)(t % p);
            t /= p;
        }
        for (size_t i = 0; i < free_vars.size(); ++i) point[free_vars[i]] = free_vals[i];
        std::vector<std::uint32_t> sol(assignment.size());
        for (size_t v = 0; v < assignment.size(); ++v) sol[v] = assignment[v].evaluate(point);
        out.push_back(std::move(sol));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SolverState::SolverState(std::uint32_t p, int nvars)
    : p_(p), nvars_(nvars), subst_(nvars) {}

FpPoly SolverState::resolve(const FpPoly& poly) const {
    FpPoly r = poly;
    for (int v = 0; v < nvars_; ++v)
        if (subst_[v] && r.mentions(v)) r = r.substitute(v, *subst_[v]);
    return r;
}

void SolverState::assign(int var, const FpPoly& value) {
    assert(!subst_[var]);
    FpPoly val = resolve(value);
    subst_[var] = val;
    for (auto& s : subst_)
        if (s && s->mentions(var)) s = s->substitute(var, val);
    for (auto& e : eqs_)
        if (e.mentions(var)) e = e.substitute(var, val);
}

void SolverState::add_equation(const FpPoly& eq) {
    FpPoly e = resolve(eq);
    if (e.is_zero()) return;
    if (e.is_constant()) {
        dead_ = true;
        return;
    }
    eqs_.push_back(std::move(e));
}

bool SolverState::eliminate() {
    bool progress = true;
    while (progress && !dead_) {
        progress = false;
        // drop satisfied equations, detect contradictions
        std::vector<FpPoly> keep;
        for (auto& e : eqs_) {
            if (e.is_zero()) continue;
            if (e.is_constant()) {
                dead_ = true;
                return false;
            }
            keep.push_back(std::move(e));
        }
        eqs_ = std::move(keep);
        for (size_t i = 0; i < eqs_.size() && !progress; ++i) {
            const FpPoly& e = eqs_[i];
            for (int v = 0; v < nvars_ && !progress; ++v) {
                if (subst_[v] || e.degree_in(v) != 1) continue;
                FpPoly A, B;
                e.split_linear(v, A, B);
                if (!A.is_constant() || A.constant_value() == 0) continue;
                std::uint32_t inv = fp::inv(A.constant_value(), p_);
                FpPoly value = (-B).scaled(inv);
                eqs_.erase(eqs_.begin() + i);
                assign(v, value);
                progress = true;
            }
        }
    }
    return !dead_;
}

std::vector<int> SolverState::unresolved_vars() const {
    std::vector<int> out;
    for (int v = 0; v < nvars_; ++v)
        if (!subst_[v]) out.push_back(v);
    return out;
}

std::vector<SolverState> SolverState::enumerate_residual(long long budget) const {
    std::vector<SolverState> done;
    if (dead_) return done;
    if (eqs_.empty()) {
        done.push_back(*this);
        return done;
    }
    std::vector<int> evars;
    for (const auto& e : eqs_)
        for (int v : e.variables())
            if (std::find(evars.begin(), evars.end(), v) == evars.end()) evars.push_back(v);
    std::sort(evars.begin(), evars.end());

    long long count = 1;
    for (size_t i = 0; i < evars.size(); ++i) {
        count *= p_;
        if (count > budget)
            throw SolverBudgetError("enumeration budget exceeded: " +
                                    std::to_string(evars.size()) + " variables over F_" +
                                    std::to_string(p_));
    }
    for (long long it = 0; it < count; ++it) {
        SolverState st = *this;
        long long t = it;
        for (int v : evars) {
            st.assign(v, FpPoly::constant(p_, nvars_, (std::uint32_t)(t % p_)));
            t /= p_;
        }
        bool ok = true;
        for (const auto& e : st.eqs_)
            if (!e.is_zero()) {
                ok = false;
                break;
            }
        if (ok) {
            st.eqs_.clear();
            done.push_back(std::move(st));
        }
    }
    return done;
}

SolutionFamily SolverState::family() const {
    SolutionFamily fam;
    fam.assignment.resize(nvars_);
    for (int v = 0; v < nvars_; ++v) {
        if (subst_[v]) {
            fam.assignment[v] = *subst_[v];
        } else {
            fam.assignment[v] = FpPoly::variable(p_, nvars_, v);
            fam.free_vars.push_back(v);
        }
    }
    return fam;
}

bool vanishes_identically(const FpPoly& poly, const std::vector<int>& free_vars) {
    if (poly.is_zero()) return true;
    std::uint32_t p = poly.p();
    std::vector<int> samples;
    long long total = 1;
    for (int v : free_vars) {
        int s = std::min<long long>(p, std::max(3, poly.degree_in(v) + 1));
        samples.push_back(s);
        total *= s;
    }
    std::vector<std::uint32_t> point(poly.nvars(), 0);
    for (long long it = 0; it < total; ++it) {
        long long t = it;
        for (size_t i = 0; i < free_vars.size(); ++i) {
            point[free_vars[i]] = (std::uint32_t)(t % samples[i]);
            t /= samples[i];
        }
        if (poly.evaluate(point) != 0) return false;
    }
    return true;
}

std::vector<SolutionFamily> solve_poly_system(const PolySystem& sys,
                                              const BranchAssignment& branch,
                                              long long budget) {
    SolverState st(sys.p, (int)sys.var_names.size());
    for (auto [v, c] : branch.fixed) st.assign(v, FpPoly::constant(sys.p, (int)sys.var_names.size(), c));
    for (const auto& e : sys.eqs) st.add_equation(e);
    if (!st.eliminate()) return {};
    std::vector<SolutionFamily> out;
    for (auto& done : st.enumerate_residual(budget)) {
        SolutionFamily fam = done.family();
        // verify by substitution on the sample grid
        for (const auto& e : sys.eqs) {
            FpPoly r = e;
            for (int v = 0; v < (int)fam.assignment.size(); ++v)
                if (r.mentions(v)) r = r.substitute(v, fam.assignment[v]);
            if (!vanishes_identically(r, fam.free_vars))
                throw ConsistencyError("solution family fails verification by substitution");
        }
        out.push_back(std::move(fam));
    }
    return out;
}

}  // namespace a1lie
