#pragma once

#include <cstddef>
#include <exception>
#include <thread>

#ifdef ARBREAK_HAVE_OPENMP
#include <omp.h>
#endif

namespace arbreak::parallel {

/// Default worker count: OpenMP's thread limit, else hardware concurrency.
inline int default_workers() noexcept {
#ifdef ARBREAK_HAVE_OPENMP
    return omp_get_max_threads();
#else
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
#endif
}

/// Reference loop: body(i) for i = 0..count-1 in order.
template <class Body>
void serial_for(std::size_t count, Body&& body) {
    for (std::size_t i = 0; i < count; ++i) body(i);
}

/// body(i) for i = 0..count-1 on `workers` OpenMP threads. Bodies must write
/// only to slot i of caller-owned storage; the first exception thrown by any
/// body is rethrown after the loop.
template <class Body>
void omp_for(std::size_t count, int workers, Body&& body) {
#ifdef ARBREAK_HAVE_OPENMP
    std::exception_ptr first_error;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 64)
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(arbreak_omp_for_error)
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
#else
    (void)workers;
    serial_for(count, body);
#endif
}

/// Dispatches to serial_for when workers <= 1.
template <class Body>
void for_each_index(std::size_t count, int workers, Body&& body) {
    if (workers <= 1) {
        serial_for(count, body);
    } else {
        omp_for(count, workers, body);
    }
}

}  // namespace arbreak::parallel
