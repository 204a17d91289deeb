#include "adjoint_data.hpp"

namespace a1lie {

std::set<int> adjoint_trace_set_order2(LieType t) {
    switch (t) {
        case LieType::G2: return {-2};
        case LieType::F4: return {-4, 20};
        case LieType::E6: return {-2, 14};
        case LieType::E7: return {-7, 5, 25};
        case LieType::E8: return {-8, 24};
    }
    return {};
}

std::set<int> adjoint_trace_set_order3(LieType t) {
    switch (t) {
        case LieType::G2: return {-1, 5};
        case LieType::F4: return {-2, 7};
        case LieType::E6: return {-3, 3, 6, 15, 30};
        case LieType::E7: return {-2, 7, 34, 52};
        case LieType::E8: return {-4, 5, 14, 77};
    }
    return {};
}

std::set<int> adjoint_trace_filter_order3(LieType t) {
    if (t == LieType::E6) return {-3, 6, 15};
    return adjoint_trace_set_order3(t);
}

int eigenvalue_filter_order(LieType t) {
    switch (t) {
        case LieType::G2: return 0;
        case LieType::F4: return 7;
        case LieType::E6: return 7;
        case LieType::E7: return 5;
        case LieType::E8: return 19;
    }
    return 0;
}

const std::vector<int>& centralizer_weights(LieType t) {
    static const std::vector<int> g2{10, 2};
    static const std::vector<int> f4{22, 14, 10, 2};
    static const std::vector<int> e6{22, 16, 14, 10, 8, 2};
    static const std::vector<int> e7{34, 26, 22, 18, 14, 10, 2};
    static const std::vector<int> e8{58, 46, 38, 34, 26, 22, 14, 2};
    switch (t) {
        case LieType::G2: return g2;
        case LieType::F4: return f4;
        case LieType::E6: return e6;
        case LieType::E7: return e7;
        case LieType::E8: return e8;
    }
    return g2;
}

const std::vector<int>& adjoint_tilting_weights(LieType t) { return centralizer_weights(t); }

const std::vector<ReductionException>& reduction_exception_table() {
    static const std::vector<ReductionException> table{
        {LieType::F4, 13, {{{'W', 10}, {'W', 2}}}},
        {LieType::E6,
         13,
         {{{'W', 10}, {'W', 8}, {'W', 2}},
          {{'W', 10}, {'W', 4}, {'W', 2}},
          {{'W', 10}, {'W', 10}, {'W', 4}}}},
        {LieType::E7,
         19,
         {{{'W', 8}, {'W', 4}, {'W', 2}, {'U', 0}},
          {{'W', 16}, {'W', 10}, {'W', 4}, {'U', 0}},
          {{'W', 16}, {'W', 14}, {'W', 8}, {'U', 0}}}},
        {LieType::E8, 37, {{{'W', 34}, {'W', 26}, {'W', 14}, {'L', 22}, {'L', 2}}}},
    };
    return table;
}

const std::vector<std::pair<LieType, std::uint32_t>>& sweep_cases() {
    static const std::vector<std::pair<LieType, std::uint32_t>> cases{
        {LieType::G2, 7},  {LieType::G2, 11}, {LieType::G2, 13}, {LieType::G2, 17},
        {LieType::F4, 13}, {LieType::F4, 17}, {LieType::F4, 19}, {LieType::F4, 23},
        {LieType::F4, 29}, {LieType::E6, 13}, {LieType::E6, 17}, {LieType::E6, 19},
        {LieType::E6, 23}, {LieType::E6, 29}, {LieType::E7, 19}, {LieType::E7, 23},
        {LieType::E7, 29}, {LieType::E7, 31}, {LieType::E7, 37}, {LieType::E8, 31},
        {LieType::E8, 37}, {LieType::E8, 41}, {LieType::E8, 43}, {LieType::E8, 47},
        {LieType::E8, 53}, {LieType::E8, 59}, {LieType::E8, 61},
    };
    return cases;
}

}  // namespace a1lie
