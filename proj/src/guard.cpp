#include "liesym/guard.hpp"

#include <atomic>
#include <string>

#include "liesym/errors.hpp"

namespace liesym {

namespace {
std::atomic<int> g_max_degree{kDefaultMaxDegree};
}

int max_degree() { return g_max_degree.load(); }

void set_max_degree(int n) {
    if (n < 1) throw DomainError("max degree must be at least 1, got " + std::to_string(n));
    g_max_degree.store(n);
}

void check_degree(int n) {
    const int limit = g_max_degree.load();
    if (n < 1 || n > limit) {
        throw ResourceGuardError("n = " + std::to_string(n) +
                                 " is outside the allowed range [1, " + std::to_string(limit) +
                                 "]; raise the limit explicitly if you mean it");
    }
}

} // namespace liesym
