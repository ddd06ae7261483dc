#include "charsum/parallel.hpp"

#include <cstdlib>
#include <string>

namespace charsum {

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (n > 8) n = 8;
    if (const char* env = std::getenv("CHARSUM_THREADS")) {
        try {
            const unsigned long cap = std::stoul(env);
            if (cap >= 1 && cap < n) n = static_cast<unsigned>(cap);
        } catch (const std::exception&) {
            // ignore malformed values
        }
    }
    return n;
}

}  // namespace charsum
