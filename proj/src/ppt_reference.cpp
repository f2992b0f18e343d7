#include "su11/ppt_reference.hpp"

#include <map>
#include <stdexcept>

namespace su11 {

namespace {

constexpr Negativity A = Negativity::kAlways;
constexpr Negativity P = Negativity::kPartial;
constexpr Negativity N = Negativity::kNone;

const std::vector<ReferenceVerdict> kTable = {
    // single mode vs single mode
    {"1", "2", P}, {"1", "3", N}, {"1", "4", N}, {"1", "5", N}, {"1", "6", N},
    {"2", "3", P}, {"2", "4", N}, {"2", "5", N}, {"2", "6", N},
    {"3", "4", P}, {"3", "5", N}, {"3", "6", N},
    {"4", "5", P}, {"4", "6", N},
    {"5", "6", P},

    // single mode vs pair
    {"1", "23", P}, {"1", "24", P}, {"1", "25", P}, {"1", "26", P}, {"1", "34", N},
    {"1", "35", N}, {"1", "36", N}, {"1", "45", N}, {"1", "46", N}, {"1", "56", N},
    {"2", "13", P}, {"2", "14", P}, {"2", "15", P}, {"2", "16", P}, {"2", "34", P},
    {"2", "35", P}, {"2", "36", P}, {"2", "45", N}, {"2", "46", N}, {"2", "56", N},
    {"3", "12", P}, {"3", "14", P}, {"3", "15", N}, {"3", "16", N}, {"3", "24", P},
    {"3", "25", P}, {"3", "26", P}, {"3", "45", P}, {"3", "46", P}, {"3", "56", N},
    {"4", "12", N}, {"4", "13", P}, {"4", "15", P}, {"4", "16", N}, {"4", "23", P},
    {"4", "25", P}, {"4", "26", N}, {"4", "35", P}, {"4", "36", P}, {"4", "56", P},
    {"5", "12", N}, {"5", "13", N}, {"5", "14", P}, {"5", "16", P}, {"5", "23", N},
    {"5", "24", P}, {"5", "26", P}, {"5", "34", P}, {"5", "36", P}, {"5", "46", P},
    {"6", "12", N}, {"6", "13", N}, {"6", "14", N}, {"6", "15", P}, {"6", "23", N},
    {"6", "24", N}, {"6", "25", P}, {"6", "34", N}, {"6", "35", P}, {"6", "45", P},

    // single mode vs triple
    {"1", "234", A}, {"1", "235", P}, {"1", "236", P}, {"1", "245", P}, {"1", "246", P},
    {"1", "256", P}, {"1", "345", N}, {"1", "346", N}, {"1", "356", N}, {"1", "456", N},
    {"2", "134", A}, {"2", "135", P}, {"2", "136", P}, {"2", "145", P}, {"2", "146", P},
    {"2", "156", P}, {"2", "345", P}, {"2", "346", P}, {"2", "356", P}, {"2", "456", N},
    {"3", "124", A}, {"3", "125", P}, {"3", "126", P}, {"3", "145", P}, {"3", "146", P},
    {"3", "156", N}, {"3", "245", P}, {"3", "246", P}, {"3", "256", P}, {"3", "456", A},
    {"4", "123", A}, {"4", "125", P}, {"4", "126", N}, {"4", "135", P}, {"4", "136", P},
    {"4", "156", P}, {"4", "235", P}, {"4", "236", P}, {"4", "256", P}, {"4", "356", A},
    {"5", "123", N}, {"5", "124", P}, {"5", "126", P}, {"5", "134", P}, {"5", "136", P},
    {"5", "146", P}, {"5", "234", P}, {"5", "236", P}, {"5", "246", P}, {"5", "346", A},
    {"6", "123", N}, {"6", "124", N}, {"6", "125", P}, {"6", "134", N}, {"6", "135", P},
    {"6", "145", P}, {"6", "234", N}, {"6", "235", P}, {"6", "245", P}, {"6", "345", A},

    // single mode vs four modes
    {"1", "2345", A}, {"1", "2346", A}, {"1", "2356", A}, {"1", "2456", A}, {"1", "3456", N},
    {"2", "1345", A}, {"2", "1346", A}, {"2", "1356", A}, {"2", "1456", A}, {"2", "3456", P},
    {"3", "1245", A}, {"3", "1246", A}, {"3", "1256", A}, {"3", "1456", A}, {"3", "2456", A},
    {"4", "1235", A}, {"4", "1236", A}, {"4", "1256", A}, {"4", "1356", A}, {"4", "2356", A},
    {"5", "1234", P}, {"5", "1236", A}, {"5", "1246", A}, {"5", "1346", A}, {"5", "2346", A},
    {"6", "1234", N}, {"6", "1235", A}, {"6", "1245", A}, {"6", "1345", A}, {"6", "2345", A},

    // pair vs pair
    {"12", "34", A}, {"12", "35", P}, {"12", "36", P}, {"12", "45", N}, {"12", "46", N},
    {"12", "56", N},
    {"13", "24", A}, {"13", "25", P}, {"13", "26", P}, {"13", "45", P}, {"13", "46", P},
    {"13", "56", N},
    {"14", "23", A}, {"14", "25", P}, {"14", "26", P}, {"14", "35", P}, {"14", "36", P},
    {"14", "56", P},
    {"15", "23", P}, {"15", "24", P}, {"15", "26", P}, {"15", "34", P}, {"15", "36", P},
    {"15", "46", P},
    {"16", "23", P}, {"16", "24", N}, {"16", "25", P}, {"16", "34", N}, {"16", "35", P},
    {"16", "45", P},
    {"23", "45", P}, {"23", "46", P}, {"23", "56", N},
    {"24", "35", P}, {"24", "36", P}, {"24", "56", P},
    {"25", "34", P}, {"25", "36", P}, {"25", "46", P},
    {"26", "34", P}, {"26", "35", P}, {"26", "45", P},
    {"34", "56", A}, {"35", "46", A}, {"45", "36", A},

    // pair vs triple (negative on the whole grid in every case)
    {"12", "345", A}, {"12", "346", A}, {"12", "356", A}, {"12", "456", A},
    {"13", "245", A}, {"13", "246", A}, {"13", "256", A}, {"13", "456", A},
    {"14", "235", A}, {"14", "236", A}, {"14", "256", A}, {"14", "356", A},
    {"15", "234", A}, {"15", "236", A}, {"15", "246", A}, {"15", "346", A},
    {"16", "234", A}, {"16", "235", A}, {"16", "245", A}, {"16", "345", A},
    {"23", "145", A}, {"23", "146", A}, {"23", "156", A}, {"23", "456", A},
    {"24", "135", A}, {"24", "136", A}, {"24", "156", A}, {"24", "356", A},
    {"25", "134", A}, {"25", "136", A}, {"25", "146", A}, {"25", "346", A},
    {"26", "134", A}, {"26", "135", A}, {"26", "145", A}, {"26", "345", A},
    {"34", "125", A}, {"34", "126", A}, {"34", "156", A}, {"34", "256", A},
    {"35", "124", A}, {"35", "126", A}, {"35", "146", A}, {"35", "246", A},
    {"36", "124", A}, {"36", "125", A}, {"36", "145", A}, {"36", "245", A},
    {"45", "123", A}, {"45", "126", A}, {"45", "136", A}, {"45", "236", A},
    {"46", "123", A}, {"46", "125", A}, {"46", "135", A}, {"46", "235", A},
    {"56", "123", A}, {"56", "124", A}, {"56", "134", A}, {"56", "234", A},
};

const std::vector<ReferenceVerdict> kMisprints = {
    // Mirror image of {1,6}|{3,5}, which is (correctly) listed as partial.
    {"16", "24", P},
    // Negative over 176 of the 400 grid points (min L_mu = -0.134 at
    // r1 = 1.8, r2 = 0.2), confirmed by an independent implementation.
    {"2", "456", P},
    // Mirror image of the entry above.
    {"5", "123", P},
};

unsigned mask_of_digits(const char* digits) {
    unsigned mask = 0;
    for (const char* c = digits; *c != '\0'; ++c) {
        mask |= 1u << (*c - '1');
    }
    return mask;
}

unsigned mask_of_set(const std::vector<int>& modes) {
    unsigned mask = 0;
    for (int mode : modes) {
        mask |= 1u << (mode - 1);
    }
    return mask;
}

const std::map<std::pair<unsigned, unsigned>, Negativity>& lookup() {
    static const auto map = [] {
        std::map<std::pair<unsigned, unsigned>, Negativity> m;
        for (const auto& entry : kTable) {
            const unsigned a = mask_of_digits(entry.set_a);
            const unsigned b = mask_of_digits(entry.set_b);
            m.emplace(std::make_pair(std::min(a, b), std::max(a, b)), entry.verdict);
        }
        return m;
    }();
    return map;
}

}  // namespace

const std::vector<ReferenceVerdict>& six_mode_reference_table() { return kTable; }

const std::vector<ReferenceVerdict>& six_mode_table_misprints() { return kMisprints; }

Negativity six_mode_printed_verdict(const Bipartition& bipartition) {
    if (bipartition.universe() != 6) {
        throw std::invalid_argument("reference verdicts exist for six-mode bipartitions only");
    }
    if (bipartition.covers_universe()) {
        return Negativity::kAlways;
    }
    const unsigned a = mask_of_set(bipartition.set_a());
    const unsigned b = mask_of_set(bipartition.set_b());
    const auto it = lookup().find(std::make_pair(std::min(a, b), std::max(a, b)));
    if (it == lookup().end()) {
        throw std::logic_error("missing reference verdict for " + bipartition.id());
    }
    return it->second;
}

Negativity six_mode_reference_verdict(const Bipartition& bipartition) {
    const Negativity printed = six_mode_printed_verdict(bipartition);
    const unsigned a = mask_of_set(bipartition.set_a());
    const unsigned b = mask_of_set(bipartition.set_b());
    for (const auto& fix : kMisprints) {
        const unsigned fa = mask_of_digits(fix.set_a);
        const unsigned fb = mask_of_digits(fix.set_b);
        if (std::min(a, b) == std::min(fa, fb) && std::max(a, b) == std::max(fa, fb)) {
            return fix.verdict;
        }
    }
    return printed;
}

}  // namespace su11
