#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace a1lie {

enum class LieType { G2, F4, E6, E7, E8 };

LieType parse_lie_type(const std::string& label);  // throws on unknown label
std::string to_string(LieType t);

// A positive root as an integer coefficient vector over the simple roots
// (Bourbaki numbering). No Euclidean coordinates anywhere; all pairings go
// through the Cartan matrix.
struct Root {
    std::vector<int> coeffs;
    int height = 0;
};

class RootSystem {
public:
    static const RootSystem& get(LieType t);  // built once per type, immutable

    LieType type() const { return type_; }
    int rank() const { return rank_; }
    int dim() const { return 2 * (int)positive_.size() + rank_; }
    int num_positive() const { return (int)positive_.size(); }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& root(int idx) const { return positive_[idx]; }
    int highest_root_index() const { return (int)positive_.size() - 1; }
    const Root& highest_root() const { return positive_.back(); }
    int coxeter_number() const { return coxeter_; }
    const std::vector<int>& affine_marks() const { return affine_marks_; }

    // cartan(i, j) = <alpha_i, alpha_j^vee>
    int cartan(int i, int j) const { return cartan_[i][j]; }
    // (alpha_i, alpha_j), short roots normalized to norm 2
    int gram(int i, int j) const { return gram_[i][j]; }

    std::optional<int> root_index(const std::vector<int>& coeffs) const;
    bool is_positive_root(const std::vector<int>& coeffs) const {
        return root_index(coeffs).has_value();
    }

    // <beta, alpha_j^vee> for arbitrary integer vector beta
    int pairing_with_simple_covector(const std::vector<int>& beta, int j) const;
    // (beta, beta) via the Gram matrix
    long long norm2(const std::vector<int>& beta) const;
    long long inner(const std::vector<int>& a, const std::vector<int>& b) const;

    // Coefficients of the coroot alpha^vee over the simple coroots; always
    // integral for these types.
    std::vector<int> coroot_coeffs(int root_idx) const;

private:
    RootSystem() = default;
    static RootSystem build(LieType t);

    LieType type_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int>> gram_;
    std::vector<Root> positive_;
    std::map<std::vector<int>, int> index_;
    int coxeter_ = 0;
    std::vector<int> affine_marks_;  // size rank+1, marks_[0] = 1
};

}  // namespace a1lie
