#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wienerlab::par {

// Sweep kernels used by every "for all graphs ..." loop in the project.
//
// Reducers must be commutative monoids with canonical tie-breaking; under that
// contract every result is independent of the thread count and identical to
// the serial reference below, which the tests exercise side by side.

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int k) {
#ifdef _OPENMP
    if (k > 0) omp_set_num_threads(k);
#else
    (void)k;
#endif
}

template <class F>
void serial_for(int64_t count, F&& body) {
    for (int64_t i = 0; i < count; ++i) body(i);
}

template <class F>
void parallel_for(int64_t count, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
    for (int64_t i = 0; i < count; ++i) body(i);
#else
    serial_for(count, body);
#endif
}

template <class T, class Map, class Reduce>
T serial_map_reduce(int64_t count, T init, Map&& map, Reduce&& reduce) {
    T acc = std::move(init);
    for (int64_t i = 0; i < count; ++i) acc = reduce(std::move(acc), map(i));
    return acc;
}

template <class T, class Map, class Reduce>
T parallel_map_reduce(int64_t count, T init, Map&& map, Reduce&& reduce) {
#ifdef _OPENMP
    T acc = init;
#pragma omp parallel
    {
        T local = init;
#pragma omp for schedule(dynamic, 64) nowait
        for (int64_t i = 0; i < count; ++i) local = reduce(std::move(local), map(i));
#pragma omp critical(wienerlab_map_reduce)
        acc = reduce(std::move(acc), std::move(local));
    }
    return acc;
#else
    return serial_map_reduce(count, std::move(init), map, reduce);
#endif
}

/// Collects map(i) for indices where keep(i); output restored to index order,
/// so the result matches the serial reference exactly.
template <class T, class Keep, class Map>
std::vector<T> parallel_collect(int64_t count, Keep&& keep, Map&& map) {
    std::vector<std::pair<int64_t, T>> tagged;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::pair<int64_t, T>> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (int64_t i = 0; i < count; ++i)
            if (keep(i)) local.emplace_back(i, map(i));
#pragma omp critical(wienerlab_collect)
        tagged.insert(tagged.end(), std::make_move_iterator(local.begin()),
                      std::make_move_iterator(local.end()));
    }
#else
    for (int64_t i = 0; i < count; ++i)
        if (keep(i)) tagged.emplace_back(i, map(i));
#endif
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<T> out;
    out.reserve(tagged.size());
    for (auto& [i, v] : tagged) out.push_back(std::move(v));
    return out;
}

} // namespace wienerlab::par
