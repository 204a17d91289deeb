#include "psl2mod.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace a1lie {

int master_tuple_entry(int k, std::uint32_t p) {
    assert(k >= 1 && k <= (int)p - 1);
    return (k % 2 == 1) ? k : (int)p - k;
}

Shape make_simple(int i, std::uint32_t p) {
    if (i < 0 || i > (int)p - 1 || i % 2 != 0)
        throw std::invalid_argument("make_simple: bad highest weight");
    Shape s;
    s.kind = Shape::Kind::Simple;
    s.hw = i;
    return s;
}

Shape make_proj_u() {
    Shape s;
    s.kind = Shape::Kind::ProjU;
    return s;
}

Shape make_proj_w(int i, std::uint32_t p) {
    if (i < 2 || i > (int)p - 3 || i % 2 != 0)
        throw std::invalid_argument("make_proj_w: bad highest weight");
    Shape s;
    s.kind = Shape::Kind::ProjW;
    s.hw = i;
    return s;
}

Shape make_window(int start, int len, bool socle_odd, std::uint32_t p) {
    if (len < 2 || start < 1 || start + len - 1 > (int)p - 1)
        throw std::invalid_argument("make_window: out of range");
    Shape a;
    a.kind = Shape::Kind::Window;
    a.start = start;
    a.len = len;
    a.socle_odd = socle_odd;
    // Reversing the zigzag walk is an isomorphism: it mirrors the window in
    // the palindromic master tuple and flips the parity iff len is even.
    Shape b = a;
    b.start = (int)p - (start + len - 1);
    b.socle_odd = (len % 2 == 0) ? !socle_odd : socle_odd;
    return std::min(a, b);
}

int shape_dim(const Shape& s, std::uint32_t p) {
    switch (s.kind) {
        case Shape::Kind::Simple: return s.hw + 1;
        case Shape::Kind::ProjU: return (int)p;
        case Shape::Kind::ProjW: return 2 * (int)p;
        case Shape::Kind::Window: {
            int d = 0;
            for (int k = s.start; k < s.start + s.len; ++k) d += master_tuple_entry(k, p);
            return d;
        }
    }
    return 0;
}

std::vector<int> shape_jordan_blocks(const Shape& s, std::uint32_t p) {
    switch (s.kind) {
        case Shape::Kind::Simple: return {s.hw + 1};
        case Shape::Kind::ProjU: return {(int)p};
        case Shape::Kind::ProjW: return {(int)p, (int)p};
        case Shape::Kind::Window: {
            int d = shape_dim(s, p);
            int a = d / (int)p, b = d % (int)p;
            if (b == 0) throw std::logic_error("window dimension divisible by p");
            std::vector<int> out(a, (int)p);
            out.push_back(b);
            std::sort(out.rbegin(), out.rend());
            return out;
        }
    }
    return {};
}

std::vector<int> shape_factors(const Shape& s, std::uint32_t p) {
    switch (s.kind) {
        case Shape::Kind::Simple: return {s.hw};
        case Shape::Kind::ProjU: return {0, (int)p - 3, 0};
        case Shape::Kind::ProjW:
            return {s.hw, (int)p - 1 - s.hw, (int)p - 3 - s.hw, s.hw};
        case Shape::Kind::Window: {
            std::vector<int> out;
            for (int k = s.start; k < s.start + s.len; ++k)
                out.push_back(master_tuple_entry(k, p) - 1);
            return out;
        }
    }
    return {};
}

std::vector<int> socle_weights(const Shape& s, std::uint32_t p) {
    switch (s.kind) {
        case Shape::Kind::Simple: return {s.hw};
        case Shape::Kind::ProjU: return {0};
        case Shape::Kind::ProjW: return {s.hw};
        case Shape::Kind::Window: {
            std::vector<int> out;
            for (int rel = 0; rel < s.len; ++rel) {
                bool odd_pos = (rel % 2 == 0);  // 1-based odd
                if (odd_pos == s.socle_odd)
                    out.push_back(master_tuple_entry(s.start + rel, p) - 1);
            }
            return out;
        }
    }
    return {};
}

std::vector<int> head_weights(const Shape& s, std::uint32_t p) {
    if (s.kind != Shape::Kind::Window) return socle_weights(s, p);
    Shape d = s;
    d.socle_odd = !d.socle_odd;
    return socle_weights(d, p);
}

Shape dual_shape(const Shape& s, std::uint32_t p) {
    if (s.kind != Shape::Kind::Window) return s;
    return make_window(s.start, s.len, !s.socle_odd, p);
}

std::string shape_to_string(const Shape& s, std::uint32_t p) {
    std::ostringstream os;
    switch (s.kind) {
        case Shape::Kind::Simple: os << "L(" << s.hw << ")"; break;
        case Shape::Kind::ProjU: os << "U"; break;
        case Shape::Kind::ProjW: os << "W(" << s.hw << ")"; break;
        case Shape::Kind::Window: {
            os << "Z[";
            for (int k = s.start; k < s.start + s.len; ++k) {
                if (k > s.start) os << ",";
                os << master_tuple_entry(k, p);
            }
            os << (s.socle_odd ? "|s" : "|h") << "]";
            break;
        }
    }
    return os.str();
}

ShapeProfile shape_profile(const Shape& s, std::uint32_t p) {
    ShapeProfile pr;
    pr.dim = shape_dim(s, p);
    pr.jordan_blocks = shape_jordan_blocks(s, p);
    pr.socle = socle_weights(s, p);
    pr.head = head_weights(s, p);
    pr.dual = dual_shape(s, p);
    return pr;
}

FixedExponents fixed_eigen_exponents(const Shape& s, std::uint32_t p, EigenMode mode) {
    int modulus = (int)p - 1;
    auto reduce = [&](int v) { return ((v % modulus) + modulus) % modulus; };
    FixedExponents fe;
    switch (s.kind) {
        case Shape::Kind::Simple: fe.exps = {reduce(s.hw)}; break;
        case Shape::Kind::ProjU: fe.exps = {0}; break;
        case Shape::Kind::ProjW:
            fe.exps = {reduce(s.hw), reduce(-s.hw)};
            break;
        case Shape::Kind::Window: {
            int blocks = (int)shape_jordan_blocks(s, p).size();
            if (mode == EigenMode::Safe) {
                fe.wildcards = blocks;
            } else {
                for (int w : socle_weights(s, p)) fe.exps.push_back(reduce(w));
                if ((int)fe.exps.size() > blocks)
                    throw std::logic_error("window socle larger than block count");
                fe.wildcards = blocks - (int)fe.exps.size();
            }
            break;
        }
    }
    std::sort(fe.exps.begin(), fe.exps.end());
    return fe;
}

namespace {

int simple_trace2(int i) { return (i / 2) % 2 == 0 ? 1 : -1; }

int simple_trace3(int i) {
    switch (i % 3) {
        case 0: return 1;
        case 1: return -1;
        default: return 0;
    }
}

}  // namespace

int trace_order2(const Shape& s, std::uint32_t p) {
    switch (s.kind) {
        case Shape::Kind::Simple: return simple_trace2(s.hw);
        case Shape::Kind::ProjU: return p % 4 == 1 ? 1 : 3;
        case Shape::Kind::ProjW: return s.hw % 4 == 0 ? 2 : -2;
        case Shape::Kind::Window: {
            int t = 0;
            for (int f : shape_factors(s, p)) t += simple_trace2(f);
            return t;
        }
    }
    return 0;
}

int trace_order3(const Shape& s, std::uint32_t p) {
    switch (s.kind) {
        case Shape::Kind::Simple: return simple_trace3(s.hw);
        case Shape::Kind::ProjU: return p % 3 == 1 ? 1 : 2;
        case Shape::Kind::ProjW: {
            int i = s.hw % 3, pm = p % 3;
            if (i == 0) return pm == 1 ? 2 : 1;
            if (i == 1) return pm == 1 ? -1 : -2;
            return pm == 1 ? -1 : 1;
        }
        case Shape::Kind::Window: {
            int t = 0;
            for (int f : shape_factors(s, p)) t += simple_trace3(f);
            return t;
        }
    }
    return 0;
}

void Decomposition::sort_parts() { std::sort(parts.begin(), parts.end()); }

int Decomposition::dim() const {
    int d = 0;
    for (const auto& s : parts) d += shape_dim(s, p);
    return d;
}

bool Decomposition::operator<(const Decomposition& o) const {
    if (p != o.p) return p < o.p;
    return parts < o.parts;
}

std::string Decomposition::to_string() const {
    // print W's first (descending), then U, then simples, then windows
    std::vector<Shape> order = parts;
    auto rank_of = [](const Shape& s) {
        switch (s.kind) {
            case Shape::Kind::ProjW: return 0;
            case Shape::Kind::ProjU: return 1;
            case Shape::Kind::Simple: return 2;
            case Shape::Kind::Window: return 3;
        }
        return 4;
    };
    std::stable_sort(order.begin(), order.end(), [&](const Shape& a, const Shape& b) {
        if (rank_of(a) != rank_of(b)) return rank_of(a) < rank_of(b);
        return a.hw > b.hw;
    });
    std::ostringstream os;
    for (size_t i = 0; i < order.size(); ++i) {
        if (i) os << "+";
        os << shape_to_string(order[i], p);
    }
    return os.str();
}

std::vector<int> decomposition_jordan(const Decomposition& d) {
    std::vector<int> out;
    for (const auto& s : d.parts) {
        auto b = shape_jordan_blocks(s, d.p);
        out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::map<int, long long> shape_eigen_multiplicities_order_m(const Shape& s, std::uint32_t p,
                                                            int m) {
    std::map<int, long long> out;
    for (int f : shape_factors(s, p))
        for (int w = -f; w <= f; w += 2) {
            int r = ((w % m) + m) % m;
            out[r] += 1;
        }
    return out;
}

std::map<int, long long> eigen_multiplicities_order_m(const Decomposition& d, int m) {
    if (std::gcd((long long)m, (long long)d.p) != 1)
        throw std::invalid_argument("order not coprime to p");
    std::map<int, long long> out;
    for (const auto& s : d.parts)
        for (const auto& [r, c] : shape_eigen_multiplicities_order_m(s, d.p, m)) out[r] += c;
    return out;
}

Decomposition decompose_tilting(const std::vector<int>& weights, std::uint32_t p) {
    std::vector<int> remaining = weights;
    std::sort(remaining.rbegin(), remaining.rend());
    Decomposition d;
    d.p = p;
    while (!remaining.empty()) {
        int c = remaining.front();
        remaining.erase(remaining.begin());
        if (c <= (int)p - 1) {
            d.parts.push_back(make_simple(c, p));
            continue;
        }
        if (c > 2 * (int)p - 2)
            throw std::invalid_argument("tilting weight above 2p-2: " + std::to_string(c));
        int i = 2 * (int)p - 2 - c;
        auto it = std::find(remaining.begin(), remaining.end(), i);
        if (it == remaining.end())
            throw std::invalid_argument("tilting constituent weight missing: " +
                                        std::to_string(i));
        remaining.erase(it);
        d.parts.push_back(make_proj_w(i, p));
    }
    d.sort_parts();
    return d;
}

}  // namespace a1lie
