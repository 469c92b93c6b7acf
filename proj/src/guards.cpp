#include "wckit/guards.hpp"

#include <cstdlib>
#include <string>

#include "wckit/errors.hpp"

namespace wc {

int64_t guard_scale() {
    static const int64_t scale = [] {
        const char* env = std::getenv("WC_GUARD_SCALE");
        if (env == nullptr || *env == '\0') return int64_t{1};
        int64_t v = 0;
        try {
            v = std::stoll(env);
        } catch (const std::exception&) {
            throw validation_error("WC_GUARD_SCALE must be an integer >= 1");
        }
        if (v < 1) throw validation_error("WC_GUARD_SCALE must be an integer >= 1");
        return v;
    }();
    return scale;
}

const Guards& guards() {
    static const Guards g = [] {
        const int64_t s = guard_scale();
        Guards out;
        out.modulus_cap = (int64_t{1} << 31) - 1;
        out.module_size_cap = 64 * s;
        out.group_size_cap = 8 * s;
        out.picd_degree_cap = 6 * s;
        out.cocycle_candidate_cap = 100'000'000;
        out.divisor_count_cap = 20'000'000;
        out.curve_prime_cap = 1'000'000 * s;
        out.cubic_prime_cap = 97 * s;
        out.pair_modulus_cap = 64 * s;
        out.sp2_modulus_cap = 4 * s;
        return out;
    }();
    return g;
}

} // namespace wc
