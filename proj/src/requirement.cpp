#include "parith/requirement.hpp"

namespace parith {

std::vector<Requirement> variants(const Requirement& r) {
    std::vector<Requirement> out;
    const int p = r.arity();
    // Non-empty variable subsets, then all sign patterns on the kept subset.
    for (int subset = 1; subset < (1 << p); ++subset) {
        std::vector<std::int32_t> vars;
        for (int i = 0; i < p; ++i)
            if (subset & (1 << i)) vars.push_back(var_of(r.lit(i)));
        const int s = static_cast<int>(vars.size());
        for (int signs = 0; signs < (1 << s); ++signs) {
            std::vector<Literal> lits(static_cast<std::size_t>(s));
            for (int i = 0; i < s; ++i)
                lits[static_cast<std::size_t>(i)] =
                    (signs & (1 << i)) ? -vars[static_cast<std::size_t>(i)]
                                       : vars[static_cast<std::size_t>(i)];
            out.emplace_back(std::span<const Literal>{lits});
        }
    }
    return out;
}

}  // namespace parith
