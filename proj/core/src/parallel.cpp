#include "sharygin/parallel.hpp"

#include <cstdlib>
#include <string>

namespace sharygin {

unsigned resolve_thread_count(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("SHARYGIN_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
            // fall through to hardware default
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace sharygin
