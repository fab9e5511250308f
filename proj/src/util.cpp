#include "morseres/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace morseres {

Face face_from_vertices(const std::vector<int>& vertices) {
    Face f = 0;
    for (int v : vertices) {
        if (v < 1 || v > 32)
            throw invalid_error("face vertex " + std::to_string(v) + " out of range 1..32");
        f |= Face(1) << (v - 1);
    }
    return f;
}

std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    out.reserve(face_size(f));
    for (int v = 1; f != 0; ++v, f >>= 1)
        if (f & 1) out.push_back(v);
    return out;
}

std::string face_str(Face f) {
    std::string out = "{";
    bool first = true;
    for (int v : face_vertices(f)) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

bool face_less(Face a, Face b) {
    if (face_size(a) != face_size(b)) return face_size(a) < face_size(b);
    // Same cardinality: compare ascending vertex lists lexicographically by
    // peeling off the lowest set bit of each.
    while (a != 0 && b != 0) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

int incidence_sign(Face tau, int v) {
    Face below = tau & ((Face(1) << (v - 1)) - 1);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

int resolve_threads() {
    const char* env = std::getenv("MORSE_RESOLVE_THREADS");
    long n = 0;
    if (env != nullptr) {
        char* end = nullptr;
        n = std::strtol(env, &end, 10);
        if (end == env || n < 0) n = 0;
    }
    if (n == 0) n = static_cast<long>(std::thread::hardware_concurrency());
    return n > 0 ? static_cast<int>(n) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int workers = resolve_threads();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nw = std::min<std::size_t>(workers, n);
    std::vector<std::thread> threads;
    threads.reserve(nw);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < nw; ++w) {
        std::size_t lo = n * w / nw;
        std::size_t hi = n * (w + 1) / nw;
        threads.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace morseres
