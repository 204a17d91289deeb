#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace a1lie {

// Sparse multivariate polynomial over F_p with a fixed variable count.
class FpPoly {
public:
    FpPoly() = default;
    FpPoly(std::uint32_t p, int nvars) : p_(p), nvars_(nvars) {}

    static FpPoly constant(std::uint32_t p, int nvars, std::uint32_t c);
    static FpPoly variable(std::uint32_t p, int nvars, int var);

    std::uint32_t p() const { return p_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::uint32_t constant_value() const;  // requires is_constant()

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly operator-() const;
    FpPoly scaled(std::uint32_t c) const;
    FpPoly& operator+=(const FpPoly& o) { *this = *this + o; return *this; }
    FpPoly& operator-=(const FpPoly& o) { *this = *this - o; return *this; }
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && terms_ == o.terms_; }

    int degree_in(int var) const;
    int total_degree() const;
    bool mentions(int var) const { return degree_in(var) > 0; }
    std::vector<int> variables() const;

    // Decompose as A * var + B with neither mentioning var; requires
    // degree_in(var) <= 1.
    void split_linear(int var, FpPoly& A, FpPoly& B) const;

    FpPoly substitute(int var, const FpPoly& value) const;
    std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::uint32_t p_ = 0;
    int nvars_ = 0;
    std::map<std::vector<std::uint16_t>, std::uint32_t> terms_;
    void add_term(const std::vector<std::uint16_t>& e, std::uint32_t c);
};

struct PolySystem {
    std::uint32_t p = 0;
    std::vector<std::string> var_names;
    std::vector<FpPoly> eqs;
};

// One affine family of solutions: a polynomial assignment for every variable
// in terms of the free variables.
struct SolutionFamily {
    std::vector<FpPoly> assignment;  // indexed by variable
    std::vector<int> free_vars;
    // Expand to explicit points (free variables range over all of F_p);
    // intended for the brute-force cross-checks at small sizes.
    std::vector<std::vector<std::uint32_t>> expand(long long cap) const;
};

// Incremental eliminate-then-enumerate solver. Equations are reduced by
// substitutions of the form var := poly whenever an equation is linear in a
// variable with a nonzero constant coefficient.
class SolverState {
public:
    SolverState(std::uint32_t p, int nvars);

    void assign(int var, const FpPoly& value);
    void add_equation(const FpPoly& eq);
    bool eliminate();  // returns false once a contradiction is found
    bool dead() const { return dead_; }

    FpPoly resolve(const FpPoly& poly) const;
    const std::vector<FpPoly>& residual() const { return eqs_; }
    std::vector<int> unresolved_vars() const;

    // Enumerate all assignments of the variables that occur in residual
    // equations; each consistent assignment yields a completed state.
    std::vector<SolverState> enumerate_residual(long long budget) const;

    // All residual equations gone; produce the family.
    SolutionFamily family() const;

private:
    std::uint32_t p_;
    int nvars_;
    std::vector<std::optional<FpPoly>> subst_;
    std::vector<FpPoly> eqs_;
    bool dead_ = false;
};

struct BranchAssignment {
    std::string label;
    std::vector<std::pair<int, std::uint32_t>> fixed;
};

// Full pipeline on one branch: substitute the branch constants, eliminate,
// enumerate what remains, verify every family by substitution.
std::vector<SolutionFamily> solve_poly_system(const PolySystem& sys,
                                              const BranchAssignment& branch,
                                              long long budget = 2000000);

// Sample-grid check that `poly` vanishes identically on the listed free
// variables (degree+1 points per variable, capped at p).
bool vanishes_identically(const FpPoly& poly, const std::vector<int>& free_vars);

}  // namespace a1lie
